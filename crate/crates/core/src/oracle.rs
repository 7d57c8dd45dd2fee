//! Closed-braid evaluation through the explicit `V ⊗ V` matrices of the
//! two-dimensional `U_{q,π}(sl₂)`-module: crossings are the renormalized
//! R-matrices, closing arcs are the odd cup `u` and cap `n`.
//!
//! Odd maps applied inside a tensor word pick up `π^{parity of the factors
//! to their left}`, with `π = τ²`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::scalar::TauLaurent;
use crate::{Error, Result};

/// Largest tensor width the oracle will build (dimension `2^16`).
pub const DEFAULT_WIDTH_CAP: usize = 16;

/// Dense matrix over `TauLaurent`; basis words of a `k`-factor block are
/// indexed with the first factor most significant and `v₋ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<TauLaurent>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![TauLaurent::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = TauLaurent::one();
        }
        m
    }

    /// Builds a matrix from `(tau, q, c)` monomial lists per entry, row-major.
    pub fn from_monomials(rows: usize, cols: usize, entries: &[&[(i64, i64, i64)]]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self {
            rows,
            cols,
            entries: entries
                .iter()
                .map(|t| TauLaurent::from_terms(t.iter().copied()))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &TauLaurent {
        &self.entries[r * self.cols + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &TauLaurent, other: &Matrix, b: &TauLaurent) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(x, y)| &(a * x) + &(b * y))
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalKind {
    CrossingPos,
    CrossingNeg,
    Cap,
    Cup,
}

/// One elementary slice of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMap {
    pub kind: LocalKind,
    pub arity_in: usize,
    pub arity_out: usize,
    pub odd: bool,
    pub matrix: Matrix,
}

impl LocalMap {
    pub fn new(kind: LocalKind) -> Self {
        let (arity_in, arity_out, odd) = match kind {
            LocalKind::CrossingPos | LocalKind::CrossingNeg => (2, 2, false),
            LocalKind::Cap => (2, 0, true),
            LocalKind::Cup => (0, 2, true),
        };
        Self {
            kind,
            arity_in,
            arity_out,
            odd,
            matrix: local_matrix(kind),
        }
    }
}

const Z: &[(i64, i64, i64)] = &[];

/// The explicit matrices: `τR₁,₁`, `τ³R₁,₁⁻¹`, the cap `n` and the cup `u`.
pub fn local_matrix(kind: LocalKind) -> Matrix {
    match kind {
        LocalKind::CrossingPos => Matrix::from_monomials(
            4,
            4,
            &[
                &[(1, 0, 1)],
                Z,
                Z,
                Z,
                Z,
                Z,
                &[(1, 1, 1)],
                Z,
                Z,
                &[(3, 1, 1)],
                &[(1, 0, 1), (3, 2, -1)],
                Z,
                Z,
                Z,
                Z,
                &[(1, 0, 1)],
            ],
        ),
        LocalKind::CrossingNeg => Matrix::from_monomials(
            4,
            4,
            &[
                &[(3, 0, 1)],
                Z,
                Z,
                Z,
                Z,
                &[(3, 0, 1), (1, -2, -1)],
                &[(1, -1, 1)],
                Z,
                Z,
                &[(3, -1, 1)],
                Z,
                Z,
                Z,
                Z,
                Z,
                &[(3, 0, 1)],
            ],
        ),
        LocalKind::Cap => Matrix::from_monomials(1, 4, &[Z, &[(3, 0, -1)], &[(3, 1, 1)], Z]),
        LocalKind::Cup => Matrix::from_monomials(4, 1, &[Z, &[(2, -1, -1)], &[(0, 0, 1)], Z]),
    }
}

/// Clark's quasi R-matrix `R₁,₁` and its inverse, before renormalization.
pub fn clark_r_matrix(inverse: bool) -> Matrix {
    if inverse {
        Matrix::from_monomials(
            4,
            4,
            &[
                &[(0, 0, 1)],
                Z,
                Z,
                Z,
                Z,
                &[(0, 0, 1), (2, -2, -1)],
                &[(2, -1, 1)],
                Z,
                Z,
                &[(0, -1, 1)],
                Z,
                Z,
                Z,
                Z,
                Z,
                &[(0, 0, 1)],
            ],
        )
    } else {
        Matrix::from_monomials(
            4,
            4,
            &[
                &[(0, 0, 1)],
                Z,
                Z,
                Z,
                Z,
                Z,
                &[(0, 1, 1)],
                Z,
                Z,
                &[(2, 1, 1)],
                &[(0, 0, 1), (2, 2, -1)],
                Z,
                Z,
                Z,
                Z,
                &[(0, 0, 1)],
            ],
        )
    }
}

/// Oriented duality maps (renormalized where the invariant needs it). Kept
/// for reference; closure evaluation only uses `n` and `u`.
pub mod duality {
    use super::{Matrix, Z};

    /// `ev: V* ⊗ V → R`.
    pub fn ev() -> Matrix {
        Matrix::from_monomials(1, 4, &[&[(0, 0, 1)], Z, Z, &[(0, 0, 1)]])
    }

    /// `τ·qtr: V ⊗ V* → R`.
    pub fn qtr() -> Matrix {
        Matrix::from_monomials(1, 4, &[&[(1, -1, 1)], Z, Z, &[(3, 1, 1)]])
    }

    /// `τ³·coev: R → V* ⊗ V`.
    pub fn coev() -> Matrix {
        Matrix::from_monomials(4, 1, &[&[(3, 1, 1)], Z, Z, &[(1, -1, 1)]])
    }

    /// `coqtr: R → V ⊗ V*`.
    pub fn coqtr() -> Matrix {
        Matrix::from_monomials(4, 1, &[&[(0, 0, 1)], Z, Z, &[(0, 0, 1)]])
    }
}

/// `E′ = u ∘ n`.
pub fn cup_cap() -> Matrix {
    local_matrix(LocalKind::Cup).mul(&local_matrix(LocalKind::Cap))
}

/// Checks `τR = τ·Id − q·E′` and `τ³R⁻¹ = τ³·Id − q⁻¹·E′` exactly.
pub fn verify_crossing_identity() -> bool {
    let id = Matrix::identity(4);
    let e = cup_cap();
    let pos = id.combine(&TauLaurent::monomial(1, 0, 1), &e, &TauLaurent::monomial(0, 1, -1));
    let neg = id.combine(&TauLaurent::monomial(3, 0, 1), &e, &TauLaurent::monomial(0, -1, -1));
    pos == local_matrix(LocalKind::CrossingPos) && neg == local_matrix(LocalKind::CrossingNeg)
}

/// A vector in `V^{⊗len}`; factor `f` of a basis word is bit `f` (`v₋ = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    len: usize,
    terms: BTreeMap<u32, TauLaurent>,
}

impl TensorVector {
    /// The scalar `1 ∈ V^{⊗0}`.
    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, TauLaurent::one());
        Self { len: 0, terms }
    }

    /// A basis word from `'+'`/`'-'` characters.
    pub fn basis(word: &str) -> Self {
        let mut bits = 0u32;
        for (f, ch) in word.chars().enumerate() {
            if ch == '-' {
                bits |= 1 << f;
            }
        }
        let mut terms = BTreeMap::new();
        terms.insert(bits, TauLaurent::one());
        Self {
            len: word.chars().count(),
            terms,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn coeff(&self, word: &str) -> TauLaurent {
        let b = TensorVector::basis(word);
        let key = *b.terms.keys().next().expect("basis has one term");
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// The coefficient of the empty word.
    pub fn scalar(&self) -> TauLaurent {
        debug_assert_eq!(self.len, 0);
        self.terms.get(&0).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &TauLaurent) -> Self {
        let mut out = Self {
            len: self.len,
            terms: BTreeMap::new(),
        };
        for (w, x) in &self.terms {
            out.add(*w, &(x * c));
        }
        out
    }

    fn add(&mut self, word: u32, c: &TauLaurent) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(word).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&word);
        }
    }
}

/// Applies `f` to the factors starting at `position`.
pub fn apply_local(f: &LocalMap, position: usize, v: &TensorVector) -> Result<TensorVector> {
    if position + f.arity_in > v.len {
        return Err(Error::PositionOutOfRange {
            position,
            arity: f.arity_in,
            len: v.len,
        });
    }
    let new_len = v.len - f.arity_in + f.arity_out;
    if new_len > 31 {
        return Err(Error::TooManyStrands {
            strands: new_len,
            cap: 31,
        });
    }
    let mut out = TensorVector {
        len: new_len,
        terms: BTreeMap::new(),
    };
    let low_mask = (1u32 << position) - 1;
    for (&word, c) in &v.terms {
        let prefix = word & low_mask;
        let suffix = word >> (position + f.arity_in);
        let col = (0..f.arity_in).fold(0, |acc, k| acc << 1 | (word >> (position + k) & 1)) as usize;
        let sign_tau = if f.odd && prefix.count_ones() % 2 == 1 { 2 } else { 0 };
        for row in 0..f.matrix.rows() {
            let m = f.matrix.get(row, col);
            if m.is_zero() {
                continue;
            }
            let mut block = 0u32;
            for k in 0..f.arity_out {
                let bit = (row >> (f.arity_out - 1 - k)) & 1;
                block |= (bit as u32) << k;
            }
            let w = prefix | block << position | suffix << (position + f.arity_out);
            out.add(w, &(c * m).mul_monomial(sign_tau, 0));
        }
    }
    Ok(out)
}

/// Which side of the braid the closing arcs run on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureSide {
    Right,
    Left,
}

/// Evaluates the trace closure slice by slice: nested cups, the crossings,
/// nested caps.
pub fn evaluate_closed_braid(b: &BraidWord) -> Result<TauLaurent> {
    evaluate_closed_braid_on(b, ClosureSide::Right, DEFAULT_WIDTH_CAP)
}

pub fn evaluate_closed_braid_on(b: &BraidWord, side: ClosureSide, width_cap: usize) -> Result<TauLaurent> {
    let n = b.strands();
    if 2 * n > width_cap.min(31) {
        return Err(Error::TooManyStrands {
            strands: 2 * n,
            cap: width_cap.min(31),
        });
    }
    let cup = LocalMap::new(LocalKind::Cup);
    let cap = LocalMap::new(LocalKind::Cap);
    let pos = LocalMap::new(LocalKind::CrossingPos);
    let neg = LocalMap::new(LocalKind::CrossingNeg);
    let offset = match side {
        ClosureSide::Right => 0,
        ClosureSide::Left => n,
    };
    let mut v = TensorVector::unit();
    for k in 0..n {
        v = apply_local(&cup, k, &v)?;
    }
    for &l in b.letters() {
        let f = if l > 0 { &pos } else { &neg };
        v = apply_local(f, offset + l.unsigned_abs() as usize - 1, &v)?;
    }
    for k in (0..n).rev() {
        v = apply_local(&cap, k, &v)?;
    }
    Ok(v.scalar())
}

/// `(τ²q)^{wr(B)}` times the closed-braid evaluation.
pub fn jhat_oracle(b: &BraidWord) -> Result<TauLaurent> {
    let (tau, q) = crate::skein::writhe_factor(b);
    Ok(evaluate_closed_braid(b)?.mul_monomial(tau, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein;

    fn m(tau: i64, q: i64, c: i64) -> TauLaurent {
        TauLaurent::monomial(tau, q, c)
    }

    #[test]
    fn matrices_match_their_definitions() {
        let pos = local_matrix(LocalKind::CrossingPos);
        assert_eq!(*pos.get(2, 1), m(3, 1, 1));
        let cap = local_matrix(LocalKind::Cap);
        assert_eq!((cap.get(0, 1), cap.get(0, 2)), (&m(3, 0, -1), &m(3, 1, 1)));
        let cup = local_matrix(LocalKind::Cup);
        assert_eq!((cup.get(1, 0), cup.get(2, 0)), (&m(2, -1, -1), &m(0, 0, 1)));
    }

    #[test]
    fn cup_cap_matrix() {
        let e = cup_cap();
        let expected = Matrix::from_monomials(
            4,
            4,
            &[
                Z,
                Z,
                Z,
                Z,
                Z,
                &[(1, -1, 1)],
                &[(1, 0, -1)],
                Z,
                Z,
                &[(3, 0, -1)],
                &[(3, 1, 1)],
                Z,
                Z,
                Z,
                Z,
                Z,
            ],
        );
        assert_eq!(e, expected);
        assert!(verify_crossing_identity());
        let circle = local_matrix(LocalKind::Cap).mul(&local_matrix(LocalKind::Cup));
        assert_eq!(*circle.get(0, 0), TauLaurent::d());
    }

    #[test]
    fn renormalized_clark_matrices() {
        let tau = m(1, 0, 1);
        let tau3 = m(3, 0, 1);
        let zero = Matrix::zeros(4, 4);
        let r = clark_r_matrix(false);
        let ri = clark_r_matrix(true);
        assert_eq!(r.combine(&tau, &zero, &tau), local_matrix(LocalKind::CrossingPos));
        assert_eq!(ri.combine(&tau3, &zero, &tau), local_matrix(LocalKind::CrossingNeg));
        assert_eq!(r.mul(&ri), Matrix::identity(4));
        let pos = local_matrix(LocalKind::CrossingPos);
        let neg = local_matrix(LocalKind::CrossingNeg);
        assert_eq!(pos.mul(&neg), Matrix::identity(4));
        assert_eq!(neg.mul(&pos), Matrix::identity(4));
    }

    #[test]
    fn duality_maps() {
        assert_eq!(*duality::ev().get(0, 3), m(0, 0, 1));
        assert_eq!(*duality::qtr().get(0, 0), m(1, -1, 1));
        assert_eq!(*duality::qtr().get(0, 3), m(3, 1, 1));
        assert_eq!(*duality::coev().get(0, 0), m(3, 1, 1));
        assert_eq!(*duality::coev().get(3, 0), m(1, -1, 1));
        assert_eq!(*duality::coqtr().get(3, 0), m(0, 0, 1));
        // qtr ∘ coev-type pairing closes to the circle value
        assert_eq!(*duality::qtr().mul(&duality::coqtr()).get(0, 0), TauLaurent::d());
    }

    #[test]
    fn apply_cap_and_cup() {
        let cap = LocalMap::new(LocalKind::Cap);
        let cup = LocalMap::new(LocalKind::Cup);
        let v = apply_local(&cap, 0, &TensorVector::basis("+-")).unwrap();
        assert_eq!(v.scalar(), m(3, 0, -1));
        let w = apply_local(&cap, 1, &TensorVector::basis("-++")).unwrap();
        assert!(w.terms.is_empty());
        let u = apply_local(&cup, 0, &TensorVector::unit()).unwrap();
        assert_eq!(u.coeff("+-"), m(2, -1, -1));
        assert_eq!(u.coeff("-+"), m(0, 0, 1));
        assert_eq!(
            apply_local(&cap, 2, &TensorVector::basis("+-")),
            Err(Error::PositionOutOfRange {
                position: 2,
                arity: 2,
                len: 2
            })
        );
    }

    #[test]
    fn zigzags() {
        let cap = LocalMap::new(LocalKind::Cap);
        let cup = LocalMap::new(LocalKind::Cup);
        for word in ["+", "-"] {
            let v = TensorVector::basis(word);
            // (1⊗n)(u⊗1) = −τ
            let a = apply_local(&cap, 1, &apply_local(&cup, 0, &v).unwrap()).unwrap();
            assert_eq!(a, v.scale(&m(1, 0, -1)));
            // (n⊗1)(1⊗u) = −τ³
            let b = apply_local(&cap, 0, &apply_local(&cup, 1, &v).unwrap()).unwrap();
            assert_eq!(b, v.scale(&m(3, 0, -1)));
        }
    }

    #[test]
    fn circle_arrangements() {
        let cap = LocalMap::new(LocalKind::Cap);
        let cup = LocalMap::new(LocalKind::Cup);
        let d = TauLaurent::d();
        let run = |steps: &[(bool, usize)]| {
            steps.iter().fold(TensorVector::unit(), |v, &(is_cup, p)| {
                apply_local(if is_cup { &cup } else { &cap }, p, &v).unwrap()
            })
        };
        assert_eq!(run(&[(true, 0), (false, 0)]).scalar(), d);
        assert_eq!(run(&[(true, 0), (true, 1), (false, 1), (false, 0)]).scalar(), &d * &d);
        assert_eq!(run(&[(true, 0), (true, 2), (false, 2), (false, 0)]).scalar(), &d * &d);
        assert_eq!(run(&[(true, 0), (true, 0), (false, 0), (false, 0)]).scalar(), &d * &d);
    }

    #[test]
    fn closed_braids() {
        let d = TauLaurent::d();
        assert_eq!(evaluate_closed_braid(&BraidWord::identity(1)).unwrap(), d);
        let s = BraidWord::parse("1", 2).unwrap();
        assert_eq!(evaluate_closed_braid(&s).unwrap(), d.mul_monomial(2, -1));
        assert_eq!(
            jhat_oracle(&BraidWord::parse("1 1 1", 2).unwrap()).unwrap(),
            TauLaurent::from_terms([(3, 9, -1), (3, 5, 1), (1, 3, 1), (3, 1, 1)])
        );
        assert_eq!(
            evaluate_closed_braid(&BraidWord::identity(9)),
            Err(Error::TooManyStrands { strands: 18, cap: 16 })
        );
    }

    #[test]
    fn agrees_with_state_sum_on_both_sides() {
        for seed in 0..40 {
            let n = 2 + (seed as usize % 3);
            let b = BraidWord::random(n, (seed as usize * 7) % 8, seed);
            let expected = skein::bracket(&b).unwrap();
            assert_eq!(evaluate_closed_braid(&b).unwrap(), expected, "{}", b);
            assert_eq!(
                evaluate_closed_braid_on(&b, ClosureSide::Left, DEFAULT_WIDTH_CAP).unwrap(),
                expected,
                "{}",
                b
            );
        }
    }
}
