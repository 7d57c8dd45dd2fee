use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::complex::EGradedComplex;
use super::snf::{invariant_factors, invariant_factors_dense, rank_mod2, IntMatrix};

/// A finitely generated abelian group `Z^rank ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyGroup {
    pub rank: usize,
    /// Invariant factors, each > 1 and dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, torsion brought back to invariant-factor form.
    pub fn direct_sum(&self, other: &HomologyGroup) -> HomologyGroup {
        let all: Vec<&BigInt> = self.torsion.iter().chain(other.torsion.iter()).collect();
        let mut diag = IntMatrix::zeros(all.len(), all.len());
        for (k, t) in all.iter().enumerate() {
            diag.set(k, k, (*t).clone());
        }
        let torsion = invariant_factors_dense(diag)
            .into_iter()
            .filter(|x| !x.is_one())
            .collect();
        HomologyGroup {
            rank: self.rank + other.rank,
            torsion,
        }
    }
}

/// Nonzero groups keyed by `(i, q, τ)`.
pub type HomologyTable = BTreeMap<(i64, i64, u8), HomologyGroup>;

/// F₂-dimensions keyed by `(i, q, τ)`, zeros omitted.
pub type Mod2Table = BTreeMap<(i64, i64, u8), usize>;

/// One `(q, τ)` block of a complex: the generators of that degree per index
/// and the restricted differentials.
/// Row count and sparse columns of a restricted differential.
type BlockMap = (usize, Vec<Vec<(usize, i64)>>);

struct Block {
    dims: Vec<usize>,
    /// `maps[k]` restricts `d_{min+k}`.
    maps: Vec<BlockMap>,
}

fn blocks(c: &EGradedComplex) -> BTreeMap<(i64, u8), Block> {
    // position of each generator inside its degree block
    let mut pos: Vec<Vec<usize>> = Vec::with_capacity(c.groups.len());
    let mut out: BTreeMap<(i64, u8), Block> = BTreeMap::new();
    let len = c.groups.len();
    for (k, g) in c.groups.iter().enumerate() {
        let mut p = Vec::with_capacity(g.len());
        for x in g {
            let b = out.entry((x.q, x.tau)).or_insert_with(|| Block {
                dims: alloc::vec![0; len],
                maps: (0..len.saturating_sub(1)).map(|_| (0, Vec::new())).collect(),
            });
            p.push(b.dims[k]);
            b.dims[k] += 1;
        }
        pos.push(p);
    }
    for b in out.values_mut() {
        for k in 0..len.saturating_sub(1) {
            b.maps[k] = (b.dims[k + 1], alloc::vec![Vec::new(); b.dims[k]]);
        }
    }
    for (k, d) in c.differentials.iter().enumerate() {
        for col in 0..d.cols() {
            let x = &c.groups[k][col];
            let b = out.get_mut(&(x.q, x.tau)).expect("block exists");
            let entries = d
                .column(col)
                .iter()
                .map(|&(r, v)| {
                    let y = &c.groups[k + 1][r];
                    debug_assert_eq!((x.q, x.tau), (y.q, y.tau), "differential must preserve degree");
                    (pos[k + 1][r], v)
                })
                .collect();
            b.maps[k].1[pos[k][col]] = entries;
        }
    }
    out
}

/// Integral homology, computed one `(q, τ)` block at a time.
pub fn homology(c: &EGradedComplex) -> HomologyTable {
    let mut table = HomologyTable::new();
    for ((q, tau), b) in blocks(c) {
        let factors: Vec<Vec<BigInt>> = b
            .maps
            .iter()
            .map(|(rows, cols)| invariant_factors(*rows, cols))
            .collect();
        for (k, &dim) in b.dims.iter().enumerate() {
            let out_rank = if k + 1 < b.dims.len() { factors[k].len() } else { 0 };
            let (in_rank, torsion) = if k > 0 {
                let f = &factors[k - 1];
                (f.len(), f.iter().filter(|x| !x.is_one()).cloned().collect())
            } else {
                (0, Vec::new())
            };
            let g = HomologyGroup {
                rank: dim - out_rank - in_rank,
                torsion,
            };
            if !g.is_zero() {
                table.insert((c.min_index + k as i64, q, tau), g);
            }
        }
    }
    table
}

/// F₂-dimensions of `H(C ⊗ F₂)`.
pub fn homology_mod2(c: &EGradedComplex) -> Mod2Table {
    let mut table = Mod2Table::new();
    for ((q, tau), b) in blocks(c) {
        let ranks: Vec<usize> = b.maps.iter().map(|(rows, cols)| rank_mod2(*rows, cols)).collect();
        for (k, &dim) in b.dims.iter().enumerate() {
            let out_rank = if k + 1 < b.dims.len() { ranks[k] } else { 0 };
            let in_rank = if k > 0 { ranks[k - 1] } else { 0 };
            let h = dim - out_rank - in_rank;
            if h > 0 {
                table.insert((c.min_index + k as i64, q, tau), h);
            }
        }
    }
    table
}

/// Collapses the τ-grading by direct sum.
pub fn forget_tau(t: &HomologyTable) -> BTreeMap<(i64, i64), HomologyGroup> {
    let mut out: BTreeMap<(i64, i64), HomologyGroup> = BTreeMap::new();
    for (&(i, q, _), g) in t {
        let e = out.entry((i, q)).or_default();
        *e = e.direct_sum(g);
    }
    out
}

pub fn forget_tau_mod2(t: &Mod2Table) -> BTreeMap<(i64, i64), usize> {
    let mut out = BTreeMap::new();
    for (&(i, q, _), &d) in t {
        *out.entry((i, q)).or_insert(0) += d;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::cube::build_cube;
    use crate::homology::tqft_complex;
    use proptest::prelude::*;

    fn complex(s: &str, n: usize) -> EGradedComplex {
        tqft_complex(&build_cube(&BraidWord::parse(s, n).unwrap()).unwrap()).unwrap()
    }

    fn free(rank: usize) -> HomologyGroup {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    fn tors(t: &[i64]) -> HomologyGroup {
        HomologyGroup {
            rank: 0,
            torsion: t.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    #[test]
    fn unknot_homology() {
        let expected: HomologyTable = [((0, 1, 3), free(1)), ((0, -1, 1), free(1))].into_iter().collect();
        assert_eq!(homology(&complex("", 1)), expected);
        assert_eq!(homology(&complex("1", 2)), expected);
        assert_eq!(homology(&complex("-1", 2)), expected);
        let flat: BTreeMap<(i64, i64), HomologyGroup> = [((0, -1), free(1)), ((0, 1), free(1))].into_iter().collect();
        assert_eq!(forget_tau(&expected), flat);
    }

    #[test]
    fn trefoil_khovanov_table() {
        let h = forget_tau(&homology(&complex("1 1 1", 2)));
        let expected: BTreeMap<(i64, i64), HomologyGroup> = [
            ((0, 1), free(1)),
            ((0, 3), free(1)),
            ((2, 5), free(1)),
            ((3, 9), free(1)),
            ((3, 7), tors(&[2])),
        ]
        .into_iter()
        .collect();
        assert_eq!(h, expected);
    }

    #[test]
    fn unlink_of_three() {
        let h = forget_tau(&homology(&complex("", 3)));
        let ranks: Vec<(i64, usize)> = h.iter().map(|(&(_, q), g)| (q, g.rank)).collect();
        assert_eq!(ranks, [(-3, 1), (-1, 3), (1, 3), (3, 1)]);
    }

    #[test]
    fn direct_sums_of_torsion() {
        assert_eq!(tors(&[2]).direct_sum(&tors(&[3])), tors(&[6]));
        assert_eq!(tors(&[2]).direct_sum(&tors(&[2])), tors(&[2, 2]));
    }

    #[test]
    fn mod2_dimensions() {
        let m = forget_tau_mod2(&homology_mod2(&complex("1 1 1", 2)));
        let expected: BTreeMap<(i64, i64), usize> = [
            ((0, 1), 1),
            ((0, 3), 1),
            ((2, 5), 1),
            ((2, 7), 1),
            ((3, 7), 1),
            ((3, 9), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(m, expected);
    }

    proptest! {
        #[test]
        fn homology_is_balanced_and_sums_to_euler(n in 2usize..4, len in 0usize..6, seed in any::<u64>()) {
            let b = BraidWord::random(n, len, seed);
            let c = tqft_complex(&build_cube(&b).unwrap()).unwrap();
            let h = homology(&c);
            let mut chi: BTreeMap<(i64, u8), i64> = BTreeMap::new();
            for (&(i, q, tau), g) in &h {
                prop_assert_eq!((q + tau as i64).rem_euclid(4), 0);
                *chi.entry((q, tau)).or_insert(0) += if i % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) };
            }
            let p = crate::scalar::TauLaurent::from_terms(chi.into_iter().map(|((q, t), c)| (t as i64, q, c)));
            prop_assert_eq!(p, c.graded_euler());
            // universal coefficients: dim H(C⊗F₂) = rank + #even torsion here and one degree up
            let m2 = homology_mod2(&c);
            for (&(i, q, tau), &d) in &m2 {
                let here = h.get(&(i, q, tau)).cloned().unwrap_or_default();
                let up = h.get(&(i + 1, q, tau)).cloned().unwrap_or_default();
                let ev = |g: &HomologyGroup| g.torsion.iter().filter(|t| num_integer::Integer::is_even(*t)).count();
                prop_assert_eq!(d, here.rank + ev(&here) + ev(&up));
            }
        }
    }
}
