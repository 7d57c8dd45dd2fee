use alloc::vec::Vec;

use num_bigint::BigInt;

use super::frobenius::{FrobeniusSpec, BASIS_DEGREES};
use super::sparse::{Entry, SparseMatrix};
use crate::cube::{CubeEdge, CubeVertex, Saddle, ShiftedCube};
use crate::scalar::TauLaurent;
use crate::{Error, Result};

/// A basis word over `{𝟙, X}` at one cube vertex.
///
/// Bit `k − 1 − c` of `word` is the label of circle `c` (`1 = X`), so words
/// count up lexicographically with the first circle most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub vertex: u64,
    pub circles: u8,
    pub word: u32,
    pub q: i64,
    pub tau: u8,
}

impl Generator {
    pub fn label(&self, circle: usize) -> u8 {
        label(self.word, self.circles as usize, circle)
    }

    /// Number of `X` factors.
    pub fn x_count(&self) -> u32 {
        self.word.count_ones()
    }
}

pub(crate) fn label(word: u32, circles: usize, c: usize) -> u8 {
    (word >> (circles - 1 - c) & 1) as u8
}

pub(crate) fn with_label(word: u32, circles: usize, c: usize, x: u8) -> u32 {
    word | (x as u32) << (circles - 1 - c)
}

/// A cochain complex of free graded modules, `d_i : C^i → C^{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<T> {
    pub min_index: i64,
    /// `groups[k]` is `C^{min_index + k}`.
    pub groups: Vec<Vec<Generator>>,
    /// `differentials[k]` maps `groups[k]` to `groups[k + 1]`.
    pub differentials: Vec<SparseMatrix<T>>,
}

pub type EGradedComplex = ChainComplex<i64>;

impl<T: Entry> ChainComplex<T> {
    pub fn max_index(&self) -> i64 {
        self.min_index + self.groups.len() as i64 - 1
    }

    pub fn group(&self, i: i64) -> &[Generator] {
        let k = i - self.min_index;
        if k < 0 || k >= self.groups.len() as i64 {
            return &[];
        }
        &self.groups[k as usize]
    }

    /// `d_i`, or `None` outside the support.
    pub fn differential(&self, i: i64) -> Option<&SparseMatrix<T>> {
        let k = i - self.min_index;
        if k < 0 {
            return None;
        }
        self.differentials.get(k as usize)
    }

    pub fn rank(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Exact check of `d_{i+1} ∘ d_i = 0`.
    pub fn check_square_zero(&self) -> Result<()> {
        for k in 1..self.differentials.len() {
            if !self.differentials[k].mul(&self.differentials[k - 1]).is_zero() {
                return Err(Error::DifferentialNotSquareZero {
                    index: self.min_index + k as i64 - 1,
                });
            }
        }
        Ok(())
    }

    /// Every nonzero entry joins generators of equal `(q, τ)`.
    pub fn preserves_degree(&self) -> bool {
        self.differentials.iter().enumerate().all(|(k, d)| {
            d.entries().all(|(r, c, _)| {
                let (s, t) = (&self.groups[k][c], &self.groups[k + 1][r]);
                (s.q, s.tau) == (t.q, t.tau)
            })
        })
    }

    /// `Σ_i (−1)^i Σ_{gens} τ^{tau} q^{q}`.
    pub fn graded_euler(&self) -> TauLaurent {
        let mut counts: alloc::collections::BTreeMap<(i64, u8), i64> = Default::default();
        for (k, g) in self.groups.iter().enumerate() {
            let sign = if (self.min_index + k as i64).rem_euclid(2) == 0 {
                1
            } else {
                -1
            };
            for x in g {
                *counts.entry((x.q, x.tau)).or_insert(0) += sign;
            }
        }
        TauLaurent::from_terms(counts.into_iter().map(|((q, tau), c)| (tau as i64, q, BigInt::from(c))))
    }

    /// True iff every generator has `q + τ ≡ 0 (mod 4)`.
    pub fn q_tau_balanced(&self) -> bool {
        self.groups
            .iter()
            .flatten()
            .all(|g| (g.q + g.tau as i64).rem_euclid(4) == 0)
    }
}

/// The generator lists of every chain group and where each vertex's block
/// starts within its group.
pub(crate) struct ChainLayout {
    pub min_index: i64,
    pub groups: Vec<Vec<Generator>>,
    /// Indexed by vertex state bits.
    pub offsets: Vec<usize>,
}

pub(crate) fn chain_layout(cube: &ShiftedCube) -> ChainLayout {
    let (lo, hi) = cube.index_range();
    let mut groups: Vec<Vec<Generator>> = alloc::vec![Vec::new(); (hi - lo + 1) as usize];
    let mut offsets = alloc::vec![0; cube.vertices.len()];
    for (bits, v) in cube.vertices.iter().enumerate() {
        let g = &mut groups[(v.index - lo) as usize];
        offsets[bits] = g.len();
        let k = v.circle_count();
        assert!(k < 32, "too many circles for a generator word");
        for word in 0..1u32 << k {
            let x = word.count_ones() as i64;
            let base = (k as i64 - x) * BASIS_DEGREES[0].0 + x * BASIS_DEGREES[1].0;
            let base_tau = (k as i64 - x) * BASIS_DEGREES[0].1 + x * BASIS_DEGREES[1].1;
            g.push(Generator {
                vertex: bits as u64,
                circles: k as u8,
                word,
                q: base + v.shift.0 + cube.global_shift.0,
                tau: (base_tau + v.shift.1 + cube.global_shift.1).rem_euclid(4) as u8,
            });
        }
    }
    ChainLayout {
        min_index: lo,
        groups,
        offsets,
    }
}

/// Image of a basis word under the even saddle map, unsigned.
pub(crate) fn even_edge_map(
    spec: &FrobeniusSpec,
    src: &CubeVertex,
    dst: &CubeVertex,
    edge: &CubeEdge,
    word: u32,
    out: &mut Vec<(u32, i64)>,
) {
    let (ks, kt) = (src.circle_count(), dst.circle_count());
    let mut rest = 0u32;
    let involved = |c: usize| match edge.saddle {
        Saddle::Merge { sources: (a, b), .. } => c == a || c == b,
        Saddle::Split { source, .. } => c == source,
    };
    for c in 0..ks {
        if !involved(c) {
            rest = with_label(rest, kt, src.carry(c, dst), label(word, ks, c));
        }
    }
    match edge.saddle {
        Saddle::Merge {
            sources: (a, b),
            target,
        } => {
            let input = 2 * label(word, ks, a) as usize + label(word, ks, b) as usize;
            for o in 0..2 {
                let c = spec.m[o][input];
                if c != 0 {
                    out.push((with_label(rest, kt, target, o as u8), c));
                }
            }
        }
        Saddle::Split {
            source,
            targets: (x, y),
        } => {
            let input = label(word, ks, source) as usize;
            for o in 0..4 {
                let c = spec.delta[o][input];
                if c != 0 {
                    let w = with_label(with_label(rest, kt, x, (o >> 1) as u8), kt, y, (o & 1) as u8);
                    out.push((w, c));
                }
            }
        }
    }
}

/// Applies the Frobenius TQFT to the signed cube.
pub fn tqft_complex(cube: &ShiftedCube) -> Result<EGradedComplex> {
    let spec = FrobeniusSpec::even();
    let layout = chain_layout(cube);
    let mut differentials = Vec::new();
    let mut buf = Vec::new();
    for k in 0..layout.groups.len().saturating_sub(1) {
        let columns = layout.groups[k]
            .iter()
            .map(|g| {
                let src = cube.vertex(g.vertex);
                let mut col = Vec::new();
                for j in 0..cube.crossings {
                    if g.vertex >> j & 1 == 1 {
                        continue;
                    }
                    let edge = cube.edge(g.vertex, j);
                    let dst = cube.vertex(edge.to);
                    buf.clear();
                    even_edge_map(&spec, src, dst, edge, g.word, &mut buf);
                    let base = layout.offsets[edge.to as usize];
                    col.extend(buf.iter().map(|&(w, c)| (base + w as usize, edge.sign as i64 * c)));
                }
                col
            })
            .collect();
        differentials.push(SparseMatrix::from_columns(layout.groups[k + 1].len(), columns));
    }
    let c = ChainComplex {
        min_index: layout.min_index,
        groups: layout.groups,
        differentials,
    };
    c.check_square_zero()?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::cube::build_cube;
    use crate::skein;
    use proptest::prelude::*;

    fn complex(s: &str, n: usize) -> EGradedComplex {
        tqft_complex(&build_cube(&BraidWord::parse(s, n).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn unknot_complex() {
        let c = complex("", 1);
        assert_eq!((c.min_index, c.max_index()), (0, 0));
        let degs: Vec<(i64, u8)> = c.groups[0].iter().map(|g| (g.q, g.tau)).collect();
        assert_eq!(degs, [(1, 3), (-1, 1)]);
        assert_eq!(c.graded_euler(), TauLaurent::from_terms([(3, 1, 1), (1, -1, 1)]));
    }

    #[test]
    fn one_crossing_cone() {
        let c = complex("1", 2);
        assert_eq!(c.groups[0].len(), 4);
        assert_eq!(c.groups[1].len(), 2);
        let d = &c.differentials[0];
        // m(𝟙𝟙)=𝟙, m(𝟙X)=m(X𝟙)=X, m(XX)=0
        assert_eq!((d.get(0, 0), d.get(1, 1), d.get(1, 2)), (1, 1, 1));
        assert!(d.column(3).is_empty());
        assert!(c.preserves_degree());
    }

    #[test]
    fn euler_characteristics() {
        let hopf = complex("1 1", 2);
        assert_eq!(
            hopf.graded_euler(),
            TauLaurent::from_terms([(2, 6, 1), (0, 4, 1), (2, 2, 1), (0, 0, 1)])
        );
        let tref = complex("1 1 1", 2);
        assert_eq!(
            tref.graded_euler(),
            TauLaurent::from_terms([(3, 9, -1), (3, 5, 1), (1, 3, 1), (3, 1, 1)])
        );
        assert!(tref.q_tau_balanced());
    }

    proptest! {
        #[test]
        fn euler_equals_jhat(n in 2usize..5, len in 0usize..7, seed in any::<u64>()) {
            let b = BraidWord::random(n, len, seed);
            let c = tqft_complex(&build_cube(&b).unwrap()).unwrap();
            prop_assert!(c.preserves_degree());
            prop_assert!(c.q_tau_balanced());
            prop_assert_eq!(c.graded_euler(), skein::jhat(&b).unwrap());
        }
    }
}
