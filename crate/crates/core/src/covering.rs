//! The e-graded covering Khovanov complex over `Z[π]/(π²−1)`.
//!
//! Tensor words carry a parity per factor (`𝟙` even, `X` odd). Swapping two
//! adjacent factors `x, y` costs `π^{c_x c_y}`, and applying the odd map `Δ`
//! after a prefix of parity `P` costs `π^P`. A saddle map is computed by
//! bringing its circles together, applying `m` or `Δ` in place, then sorting
//! the result into the target vertex's canonical circle order.
//!
//! Edge units are `lex_sign · π^{p(e)}` with `p(e) ∈ F₂` solved so that every
//! square anticommutes; at `π = 1` this is the even complex verbatim.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::cube::{build_cube, CubeEdge, CubeVertex, Saddle, ShiftedCube};
use crate::homology::{
    chain_layout, label, with_label, ChainComplex, EGradedComplex, FrobeniusSpec, Generator, SparseMatrix,
};
use crate::scalar::PiScalar;
use crate::{Error, Result};

/// An element of `Z × Z₄ × Z₂`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GDegree {
    pub a: i64,
    pub b: u8,
    pub c: u8,
}

impl GDegree {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self {
            a,
            b: b.rem_euclid(4) as u8,
            c: c.rem_euclid(2) as u8,
        }
    }

    /// `λ(self, other) = π^{c·f}`.
    pub fn lambda(&self, other: &GDegree) -> PiScalar {
        PiScalar::pi_pow((self.c * other.c) as u32)
    }
}

impl core::ops::Add for GDegree {
    type Output = GDegree;
    fn add(self, o: GDegree) -> GDegree {
        GDegree::new(self.a + o.a, self.b as i64 + o.b as i64, self.c as i64 + o.c as i64)
    }
}

/// The G-degree of a covering generator.
pub fn g_degree(g: &Generator) -> GDegree {
    GDegree::new(g.q, g.tau as i64, g.x_count() as i64)
}

/// Structure maps of the covering Frobenius system, indexed like
/// [`FrobeniusSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovFrobeniusSpec {
    pub m: [[PiScalar; 4]; 2],
    pub delta: [[PiScalar; 2]; 4],
    pub epsilon: [PiScalar; 2],
    pub eta: [PiScalar; 2],
}

impl CovFrobeniusSpec {
    pub const BASIS_DEGREES: [GDegree; 2] = [GDegree { a: 1, b: 3, c: 0 }, GDegree { a: -1, b: 1, c: 1 }];
    pub const M_DEGREE: GDegree = GDegree { a: -1, b: 1, c: 0 };
    pub const DELTA_DEGREE: GDegree = GDegree { a: -1, b: 1, c: 1 };
    pub const EPSILON_DEGREE: GDegree = GDegree { a: 1, b: 3, c: 1 };
    pub const ETA_DEGREE: GDegree = GDegree { a: 1, b: 3, c: 0 };

    pub const fn covering() -> Self {
        const O: PiScalar = PiScalar::ZERO;
        const I: PiScalar = PiScalar::ONE;
        const P: PiScalar = PiScalar::PI;
        Self {
            m: [[I, O, O, O], [O, I, I, O]],
            // Δ(𝟙) = π·𝟙⊗X + X⊗𝟙, Δ(X) = X⊗X
            delta: [[O, O], [P, O], [I, O], [O, I]],
            epsilon: [O, I],
            eta: [I, O],
        }
    }

    /// The ring map `π ↦ s` on every table.
    pub fn specialize(&self, s: i64) -> FrobeniusSpec {
        let f = |x: &PiScalar| x.specialize(s);
        FrobeniusSpec {
            m: self.m.map(|r| r.map(|x| f(&x))),
            delta: self.delta.map(|r| r.map(|x| f(&x))),
            epsilon: self.epsilon.map(|x| f(&x)),
            eta: self.eta.map(|x| f(&x)),
        }
    }
}

/// `π^{Σ l_i l_j}` over pairs put out of order by sorting on the key.
fn sort_exponent(seq: &[(usize, u8)]) -> u32 {
    let mut e = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i].0 > seq[j].0 {
                e += (seq[i].1 & seq[j].1) as u32;
            }
        }
    }
    e
}

/// Image of a basis word under the covering saddle map, without edge unit.
pub fn cov_edge_map(
    spec: &CovFrobeniusSpec,
    src: &CubeVertex,
    dst: &CubeVertex,
    edge: &CubeEdge,
    word: u32,
    out: &mut Vec<(u32, PiScalar)>,
) {
    let (ks, kt) = (src.circle_count(), dst.circle_count());
    let l = |c: usize| label(word, ks, c);
    let carried = |c: usize| (src.carry(c, dst), l(c));
    match edge.saddle {
        Saddle::Merge {
            sources: (a, b),
            target,
        } => {
            // slide b leftwards until it sits next to a
            let slide: u32 = (a + 1..b).map(|x| (l(b) & l(x)) as u32).sum();
            let input = 2 * l(a) as usize + l(b) as usize;
            for o in 0..2u8 {
                let c = spec.m[o as usize][input];
                if c.is_zero() {
                    continue;
                }
                let mut seq: Vec<(usize, u8)> = (0..a).map(carried).collect();
                seq.push((target, o));
                seq.extend((a + 1..ks).filter(|&x| x != b).map(carried));
                let w = seq.iter().fold(0, |w, &(t, x)| with_label(w, kt, t, x));
                out.push((w, c * PiScalar::pi_pow(slide + sort_exponent(&seq))));
            }
        }
        Saddle::Split {
            source,
            targets: (x, y),
        } => {
            let prefix: u32 = (0..source).map(|c| l(c) as u32).sum();
            for o in 0..4usize {
                let c = spec.delta[o][l(source) as usize];
                if c.is_zero() {
                    continue;
                }
                let mut seq: Vec<(usize, u8)> = (0..source).map(carried).collect();
                seq.push((x, (o >> 1) as u8));
                seq.push((y, (o & 1) as u8));
                seq.extend((source + 1..ks).map(carried));
                let w = seq.iter().fold(0, |w, &(t, x)| with_label(w, kt, t, x));
                out.push((w, c * PiScalar::pi_pow(prefix + sort_exponent(&seq))));
            }
        }
    }
}

/// How the two paths around a square compare before edge units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceDefect {
    /// `path₁ = π^bit · path₂` for exactly this bit.
    Unit(bool),
    /// Both bits work (the paths are fixed by `π`).
    Either,
}

/// A square of the cube: base vertex and the two flipped crossings `j < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub base: u64,
    pub j: usize,
    pub k: usize,
}

impl Face {
    /// Edges `(z→z+j, z+j→z+jk, z→z+k, z+k→z+jk)` as cube edge indices.
    pub fn edges(&self, cube: &ShiftedCube) -> [usize; 4] {
        let (z, j, k) = (self.base, self.j, self.k);
        [
            cube.edge_index(z, j),
            cube.edge_index(z | 1 << j, k),
            cube.edge_index(z, k),
            cube.edge_index(z | 1 << k, j),
        ]
    }
}

pub fn faces(m: usize) -> impl Iterator<Item = Face> {
    (0..1u64 << m).flat_map(move |base| {
        (0..m).flat_map(move |j| {
            (j + 1..m).filter_map(move |k| (base >> j & 1 == 0 && base >> k & 1 == 0).then_some(Face { base, j, k }))
        })
    })
}

type Image = BTreeMap<u32, PiScalar>;

fn compose(spec: &CovFrobeniusSpec, cube: &ShiftedCube, e1: &CubeEdge, e2: &CubeEdge, word: u32) -> Image {
    let mut first = Vec::new();
    cov_edge_map(spec, cube.vertex(e1.from), cube.vertex(e1.to), e1, word, &mut first);
    let mut out = Image::new();
    let mut second = Vec::new();
    for (w, c) in first {
        second.clear();
        cov_edge_map(spec, cube.vertex(e2.from), cube.vertex(e2.to), e2, w, &mut second);
        for &(v, d) in &second {
            *out.entry(v).or_default() += c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn scaled(img: &Image, u: PiScalar) -> Image {
    img.iter()
        .map(|(&w, &c)| (w, c * u))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Compares the two unsigned paths around `face`.
pub fn face_defect(spec: &CovFrobeniusSpec, cube: &ShiftedCube, face: Face) -> Result<FaceDefect> {
    let [a, b, c, d] = face.edges(cube).map(|e| cube.edges[e]);
    let mut ok = [true, true];
    for word in 0..1u32 << cube.vertex(face.base).circle_count() {
        let p1 = compose(spec, cube, &a, &b, word);
        let p2 = compose(spec, cube, &c, &d, word);
        ok[0] &= p1 == p2;
        ok[1] &= p1 == scaled(&p2, PiScalar::PI);
        if !ok[0] && !ok[1] {
            return Err(Error::SignSystemInconsistent(format!(
                "square at {:b} over crossings {} and {} is not a unit multiple",
                face.base, face.j, face.k
            )));
        }
    }
    Ok(match ok {
        [true, true] => FaceDefect::Either,
        [x, _] => FaceDefect::Unit(!x),
    })
}

/// An affine form over F₂ in the free square variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Affine {
    constant: bool,
    vars: Vec<u64>,
}

impl Affine {
    fn constant(b: bool) -> Self {
        Self {
            constant: b,
            vars: Vec::new(),
        }
    }

    fn var(v: usize) -> Self {
        let mut vars = alloc::vec![0; v / 64 + 1];
        vars[v / 64] |= 1 << (v % 64);
        Self { constant: false, vars }
    }

    fn add(&mut self, o: &Affine) {
        self.constant ^= o.constant;
        if self.vars.len() < o.vars.len() {
            self.vars.resize(o.vars.len(), 0);
        }
        for (x, y) in self.vars.iter_mut().zip(&o.vars) {
            *x ^= y;
        }
    }

    fn lead(&self) -> Option<usize> {
        self.vars
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    fn eval(&self, values: &[bool]) -> bool {
        let mut r = self.constant;
        for (k, w) in self.vars.iter().enumerate() {
            let mut w = *w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                r ^= values.get(k * 64 + b).copied().unwrap_or(false);
                w &= w - 1;
            }
        }
        r
    }
}

/// Edge units `±1, ±π` in cube edge order making every square anticommute.
///
/// Edges flipping the lowest set bit of their target form a spanning tree
/// and get `π⁰`; every other edge is forced by the square below it. Squares
/// fixed by `π` leave a free bit, pinned afterwards by solving the remaining
/// squares over F₂.
pub fn cov_sign_assignment(cube: &ShiftedCube) -> Result<Vec<PiScalar>> {
    let spec = CovFrobeniusSpec::covering();
    let m = cube.crossings;
    let mut defects: BTreeMap<Face, FaceDefect> = BTreeMap::new();
    for f in faces(m) {
        defects.insert(f, face_defect(&spec, cube, f)?);
    }
    let mut free_vars = 0usize;
    let mut p: Vec<Affine> = alloc::vec![Affine::default(); cube.edges.len()];
    let mut by_weight: Vec<usize> = (0..cube.edges.len()).collect();
    by_weight.sort_by_key(|&e| (cube.edges[e].to.count_ones(), e));
    for e in by_weight {
        let edge = cube.edges[e];
        let j = edge.to.trailing_zeros() as usize;
        if j == edge.crossing {
            continue;
        }
        let face = Face {
            base: edge.from & !(1 << j),
            j,
            k: edge.crossing,
        };
        let [_, this, opposite, _] = face.edges(cube);
        debug_assert_eq!(this, e);
        let mut expr = match defects[&face] {
            FaceDefect::Unit(bit) => Affine::constant(bit),
            FaceDefect::Either => {
                free_vars += 1;
                Affine::var(free_vars - 1)
            }
        };
        expr.add(&p[opposite]);
        p[e] = expr;
    }
    // every constrained square: p₁ + p₂ + p₃ + p₄ = bit
    let mut basis: BTreeMap<usize, Affine> = BTreeMap::new();
    for (face, defect) in &defects {
        let FaceDefect::Unit(bit) = *defect else { continue };
        let mut eq = Affine::constant(bit);
        for e in face.edges(cube) {
            eq.add(&p[e]);
        }
        while let Some(lead) = eq.lead() {
            match basis.get(&lead) {
                Some(row) => eq.add(row),
                None => break,
            }
        }
        match eq.lead() {
            Some(lead) => {
                basis.insert(lead, eq);
            }
            None if eq.constant => {
                return Err(Error::SignSystemInconsistent(format!(
                    "square at {:b} over crossings {} and {} contradicts the others",
                    face.base, face.j, face.k
                )))
            }
            None => {}
        }
    }
    // back-substitute from the lowest pivot, other free bits at zero
    let mut values = alloc::vec![false; free_vars];
    for (&lead, row) in &basis {
        let mut rest = row.clone();
        rest.vars[lead / 64] &= !(1 << (lead % 64));
        values[lead] = rest.eval(&values);
    }
    Ok(cube
        .edges
        .iter()
        .zip(&p)
        .map(|(edge, expr)| PiScalar::unit(edge.sign < 0, expr.eval(&values)))
        .collect())
}

/// True iff `u₁u₂·path₁ + u₃u₄·path₂ = 0` over `Z[π]` on every square.
pub fn cov_faces_anticommute(cube: &ShiftedCube, units: &[PiScalar]) -> bool {
    let spec = CovFrobeniusSpec::covering();
    faces(cube.crossings).all(|face| {
        let idx = face.edges(cube);
        let [a, b, c, d] = idx.map(|e| cube.edges[e]);
        let (u1, u2) = (units[idx[0]] * units[idx[1]], units[idx[2]] * units[idx[3]]);
        (0..1u32 << cube.vertex(face.base).circle_count()).all(|word| {
            let mut sum = scaled(&compose(&spec, cube, &a, &b, word), u1);
            for (w, c) in scaled(&compose(&spec, cube, &c, &d, word), u2) {
                *sum.entry(w).or_default() += c;
            }
            sum.values().all(PiScalar::is_zero)
        })
    })
}

pub type PiComplex = ChainComplex<PiScalar>;

/// Assembles the covering complex of a signed cube with the given units.
pub fn cov_complex(cube: &ShiftedCube, units: &[PiScalar]) -> Result<PiComplex> {
    let spec = CovFrobeniusSpec::covering();
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
                    let e = cube.edge_index(g.vertex, j);
                    let edge = &cube.edges[e];
                    buf.clear();
                    cov_edge_map(&spec, src, cube.vertex(edge.to), edge, g.word, &mut buf);
                    let base = layout.offsets[edge.to as usize];
                    col.extend(buf.iter().map(|&(w, c)| (base + w as usize, units[e] * c)));
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

pub fn build_cov_complex(b: &BraidWord) -> Result<PiComplex> {
    let cube = build_cube(b)?;
    let units = cov_sign_assignment(&cube)?;
    cov_complex(&cube, &units)
}

/// The integer complex obtained from `π ↦ s`, `s = ±1`.
pub fn specialize_pi(c: &PiComplex, s: i64) -> EGradedComplex {
    assert!(s == 1 || s == -1, "π specializes to ±1 only");
    ChainComplex {
        min_index: c.min_index,
        groups: c.groups.clone(),
        differentials: c.differentials.iter().map(|d| d.map(|x| x.specialize(s))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{
        forget_tau, forget_tau_mod2, homology, homology_mod2, tqft_complex, HomologyGroup, HomologyTable,
    };
    use proptest::prelude::*;

    fn braid(s: &str, n: usize) -> BraidWord {
        BraidWord::parse(s, n).unwrap()
    }

    #[test]
    fn tables_specialize_to_the_even_algebra() {
        let c = CovFrobeniusSpec::covering();
        assert_eq!(c.specialize(1), FrobeniusSpec::even());
        assert_eq!(c.delta[1][0], PiScalar::PI);
        let odd = c.specialize(-1);
        assert_eq!(odd.delta[1][0], -1);
    }

    #[test]
    fn degrees() {
        let [one, x] = CovFrobeniusSpec::BASIS_DEGREES;
        assert_eq!(x + x, GDegree::new(-2, 2, 0));
        assert_eq!(x.lambda(&x), PiScalar::PI);
        assert_eq!(one.lambda(&x), PiScalar::ONE);
        // Δ(𝟙) lands in 𝟙⊗X and X⊗𝟙
        assert_eq!(one + CovFrobeniusSpec::DELTA_DEGREE, one + x);
        // m(𝟙⊗X) = X
        assert_eq!(one + x + CovFrobeniusSpec::M_DEGREE, x);
        assert_eq!(x + CovFrobeniusSpec::EPSILON_DEGREE, GDegree::new(0, 0, 0));
    }

    #[test]
    fn coassociative_up_to_pi() {
        let c = CovFrobeniusSpec::covering();
        // (Δ⊗1)Δ(𝟙) and (1⊗Δ)Δ(𝟙), the second with π from passing Δ over the first factor
        let mut left = [PiScalar::ZERO; 8];
        let mut right = [PiScalar::ZERO; 8];
        for o in 0..4 {
            let (a, b) = (o >> 1, o & 1);
            let w = c.delta[o][0];
            for p in 0..4 {
                left[(p << 1) | b] += w * c.delta[p][a];
                right[(a << 2) | p] += w * c.delta[p][b] * PiScalar::pi_pow(a as u32);
            }
        }
        assert_eq!(left.map(|x| x * PiScalar::PI), right);
    }

    #[test]
    fn edge_maps() {
        let spec = CovFrobeniusSpec::covering();
        let merge = build_cube(&braid("1", 2)).unwrap();
        let (s, t, e) = (merge.vertex(0), merge.vertex(1), merge.edges[0]);
        let mut out = Vec::new();
        for w in 0..4 {
            cov_edge_map(&spec, s, t, &e, w, &mut out);
        }
        assert_eq!(out, [(0, PiScalar::ONE), (1, PiScalar::ONE), (1, PiScalar::ONE)]);
        let split = build_cube(&braid("-1", 2)).unwrap();
        let (s, t, e) = (split.vertex(0), split.vertex(1), split.edges[0]);
        out.clear();
        cov_edge_map(&spec, s, t, &e, 0, &mut out);
        assert_eq!(out, [(1, PiScalar::PI), (2, PiScalar::ONE)]);
    }

    #[test]
    fn split_behind_an_odd_factor_picks_up_pi() {
        // two unlinked components: the second splits while the first carries X
        let b = braid("-2", 3);
        let cube = build_cube(&b).unwrap();
        let (s, t, e) = (cube.vertex(0), cube.vertex(1), cube.edges[0]);
        let Saddle::Split { source, .. } = e.saddle else {
            panic!("expected a split")
        };
        assert_eq!(source, 1);
        let spec = CovFrobeniusSpec::covering();
        let mut plain = Vec::new();
        cov_edge_map(&spec, s, t, &e, 0b01, &mut plain);
        let mut behind_x = Vec::new();
        cov_edge_map(&spec, s, t, &e, 0b11, &mut behind_x);
        let strip = |v: &[(u32, PiScalar)]| v.iter().map(|x| x.1).collect::<Vec<_>>();
        assert_eq!(
            strip(&behind_x),
            strip(&plain).iter().map(|&c| c * PiScalar::PI).collect::<Vec<_>>()
        );
    }

    #[test]
    fn two_crossing_square_needs_pi() {
        let spec = CovFrobeniusSpec::covering();
        let f = Face { base: 0, j: 0, k: 1 };
        let splits = build_cube(&braid("-1 -2", 3)).unwrap();
        assert_eq!(face_defect(&spec, &splits, f).unwrap(), FaceDefect::Unit(true));
        let units = cov_sign_assignment(&splits).unwrap();
        assert!(units.iter().any(|u| u.b != 0));
        assert!(cov_faces_anticommute(&splits, &units));
        // split then merge on the same pair of circles: both paths are fixed by π
        let mixed = build_cube(&braid("1 -1", 2)).unwrap();
        assert_eq!(face_defect(&spec, &mixed, f).unwrap(), FaceDefect::Either);
        let units = cov_sign_assignment(&mixed).unwrap();
        assert!(cov_faces_anticommute(&mixed, &units));
        // merges only: the even signs already work
        let merges = build_cube(&braid("1 2", 3)).unwrap();
        assert_eq!(face_defect(&spec, &merges, f).unwrap(), FaceDefect::Unit(false));
    }

    #[test]
    fn unknot_and_specializations() {
        let c = build_cov_complex(&braid("", 1)).unwrap();
        assert_eq!(c.groups.len(), 1);
        assert_eq!(specialize_pi(&c, 1), specialize_pi(&c, -1));
    }

    #[test]
    fn trefoil_is_generic_and_even_at_one() {
        let b = braid("1 1 1", 2);
        let c = build_cov_complex(&b).unwrap();
        assert!(c.differentials.iter().any(|d| d.entries().any(|(_, _, x)| x.b != 0)));
        assert_eq!(specialize_pi(&c, 1), tqft_complex(&build_cube(&b).unwrap()).unwrap());
    }

    #[test]
    fn odd_trefoil_is_free() {
        let c = build_cov_complex(&braid("1 1 1", 2)).unwrap();
        let h = forget_tau(&homology(&specialize_pi(&c, -1)));
        let free = HomologyGroup {
            rank: 1,
            torsion: Vec::new(),
        };
        let expected: alloc::collections::BTreeMap<(i64, i64), HomologyGroup> =
            [(0, 1), (0, 3), (2, 5), (2, 7), (3, 7), (3, 9)]
                .into_iter()
                .map(|k| (k, free.clone()))
                .collect();
        assert_eq!(h, expected);
    }

    fn odd_homology(b: &BraidWord) -> HomologyTable {
        homology(&specialize_pi(&build_cov_complex(b).unwrap(), -1))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn covering_invariants(n in 2usize..4, len in 0usize..6, seed in any::<u64>()) {
            let b = BraidWord::random(n, len, seed);
            let cube = build_cube(&b).unwrap();
            let units = cov_sign_assignment(&cube).unwrap();
            prop_assert!(cov_faces_anticommute(&cube, &units));
            for (u, e) in units.iter().zip(&cube.edges) {
                prop_assert!(u.is_unit());
                prop_assert_eq!(u.specialize(1), e.sign as i64);
            }
            let c = cov_complex(&cube, &units).unwrap();
            prop_assert!(c.preserves_degree());
            let even = tqft_complex(&cube).unwrap();
            prop_assert_eq!(specialize_pi(&c, 1), even.clone());
            let odd = specialize_pi(&c, -1);
            odd.check_square_zero().unwrap();
            prop_assert_eq!(forget_tau_mod2(&homology_mod2(&odd)), forget_tau_mod2(&homology_mod2(&even)));
            prop_assert_eq!(odd.graded_euler(), even.graded_euler());
        }

        #[test]
        fn odd_homology_is_markov_invariant(n in 2usize..4, len in 0usize..5, seed in any::<u64>()) {
            let b = BraidWord::random(n, len, seed);
            let h = odd_homology(&b);
            for v in b.markov_variants(seed, 2) {
                if v.crossings() <= 7 {
                    prop_assert_eq!(odd_homology(&v), h.clone(), "{} vs {}", b, v);
                }
            }
        }
    }
}
