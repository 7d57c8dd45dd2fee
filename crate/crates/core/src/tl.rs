//! The diagrammatic Temperley–Lieb algebra `TL_n(d)` and the braid
//! representation `σ_i ↦ τ·Id − q·E_i`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_bigint::BigInt;

use crate::scalar::TauLaurent;
use crate::uf::UnionFind;
use crate::{Error, Result};

/// A planar perfect matching of `2n` boundary points: bottom points are
/// `0..n`, top points are `n..2n` (top `i` is `n + i`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarMatching {
    n: usize,
    pairing: Vec<usize>,
}

impl PlanarMatching {
    pub fn identity(n: usize) -> Self {
        let pairing = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self { n, pairing }
    }

    /// `E_i` (1-based): cup–cap on strands `i, i+1`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, strands: n });
        }
        let mut m = Self::identity(n);
        let (a, b) = (i - 1, i);
        m.pairing[a] = b;
        m.pairing[b] = a;
        m.pairing[n + a] = n + b;
        m.pairing[n + b] = n + a;
        Ok(m)
    }

    /// Validates that `pairing` is a planar perfect matching.
    pub fn from_pairing(n: usize, pairing: Vec<usize>) -> Result<Self> {
        if pairing.len() != 2 * n {
            return Err(Error::NotPlanar);
        }
        for (p, &q) in pairing.iter().enumerate() {
            if q >= 2 * n || q == p || pairing[q] != p {
                return Err(Error::NotPlanar);
            }
        }
        let m = Self { n, pairing };
        if !m.is_planar() {
            return Err(Error::NotPlanar);
        }
        Ok(m)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p]
    }

    /// Position of a boundary point walking around the rectangle: bottom left
    /// to right, then top right to left.
    fn around(&self, p: usize) -> usize {
        if p < self.n {
            p
        } else {
            3 * self.n - 1 - p
        }
    }

    fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = (0..2 * self.n)
            .filter(|&p| p < self.pairing[p])
            .map(|p| {
                let (x, y) = (self.around(p), self.around(self.pairing[p]));
                (x.min(y), x.max(y))
            })
            .collect();
        chords
            .iter()
            .all(|&(a, b)| chords.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Stacks `self` below `other`; returns the number of closed loops removed
    /// and the residual diagram.
    pub fn compose(&self, other: &PlanarMatching) -> (usize, PlanarMatching) {
        assert_eq!(self.n, other.n, "matchings on different strand counts");
        let n = self.n;
        // nodes: self bottom 0..n, middle n..2n, other top 2n..3n
        let lower = |p: usize| p;
        let upper = |p: usize| n + p;
        let mut uf = UnionFind::new(3 * n);
        for p in 0..2 * n {
            uf.union(lower(p), lower(self.pairing[p]));
            uf.union(upper(p), upper(other.pairing[p]));
        }
        let outer = |node: usize| if node < n { node } else { node - n };
        let mut ends: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for node in (0..n).chain(2 * n..3 * n) {
            let r = uf.find(node);
            ends.entry(r).or_default().push(outer(node));
        }
        let mut pairing = vec![0; 2 * n];
        for pts in ends.values() {
            debug_assert_eq!(pts.len(), 2);
            pairing[pts[0]] = pts[1];
            pairing[pts[1]] = pts[0];
        }
        let loops = uf.components() - ends.len();
        (loops, PlanarMatching { n, pairing })
    }

    /// Number of circles in the trace closure.
    pub fn closure_loop_count(&self) -> usize {
        let n = self.n;
        let mut uf = UnionFind::new(2 * n);
        for p in 0..2 * n {
            uf.union(p, self.pairing[p]);
        }
        for i in 0..n {
            uf.union(i, n + i);
        }
        uf.components()
    }
}

/// A `TauLaurent`-linear combination of planar matchings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    n: usize,
    terms: BTreeMap<PlanarMatching, TauLaurent>,
}

impl TLElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(m: PlanarMatching) -> Self {
        Self::term(m, TauLaurent::one())
    }

    pub fn term(m: PlanarMatching, c: TauLaurent) -> Self {
        let mut out = Self::zero(m.strands());
        out.add_term(m, c);
        out
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(PlanarMatching::identity(n))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, m: PlanarMatching, c: TauLaurent) {
        let entry = self.terms.entry(m).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &TauLaurent)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PlanarMatching) -> TauLaurent {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// `Σ c · d^{loops of the closure}`.
    pub fn closure_eval(&self) -> TauLaurent {
        let d = TauLaurent::d();
        self.terms
            .iter()
            .map(|(m, c)| c * &d.pow(m.closure_loop_count() as u32))
            .sum()
    }
}

impl<'a> Add<&'a TLElement> for &'a TLElement {
    type Output = TLElement;
    fn add(self, rhs: &TLElement) -> TLElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a TLElement> for &'a TLElement {
    type Output = TLElement;
    fn mul(self, rhs: &TLElement) -> TLElement {
        let d = TauLaurent::d();
        let mut out = TLElement::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let (loops, m) = a.compose(b);
                let c = &(ca * cb) * &d.pow(loops as u32);
                out.add_term(m, c);
            }
        }
        out
    }
}

/// `ρ(σ_i) = τ·Id − q·E_i`, or `ρ(σ_i⁻¹) = τ³·Id − q⁻¹·E_i`.
pub fn rho_sigma(n: usize, i: usize, inverse: bool) -> Result<TLElement> {
    let e = PlanarMatching::generator(n, i)?;
    let (tau, q) = if inverse { (3, -1) } else { (1, 1) };
    let mut out = TLElement::term(PlanarMatching::identity(n), TauLaurent::monomial(tau, 0, 1));
    out.add_term(e, TauLaurent::monomial(0, q, BigInt::from(-1)));
    Ok(out)
}

/// `ρ` of a whole braid word.
pub fn rho_word(b: &crate::BraidWord) -> TLElement {
    b.letters().iter().fold(TLElement::identity(b.strands()), |acc, &l| {
        let r = rho_sigma(b.strands(), l.unsigned_abs() as usize, l < 0).expect("braid letters are validated");
        &acc * &r
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BraidWord;
    use proptest::prelude::*;

    fn e(n: usize, i: usize) -> PlanarMatching {
        PlanarMatching::generator(n, i).unwrap()
    }

    #[test]
    fn generators() {
        let e1 = e(2, 1);
        assert_eq!((e1.partner(0), e1.partner(2)), (1, 3));
        let e2 = e(3, 2);
        assert_eq!((e2.partner(0), e2.partner(1), e2.partner(4)), (3, 2, 5));
        assert_eq!(
            PlanarMatching::generator(2, 2),
            Err(Error::IndexOutOfRange { index: 2, strands: 2 })
        );
        assert!(PlanarMatching::generator(2, 0).is_err());
    }

    #[test]
    fn relations() {
        assert_eq!(e(2, 1).compose(&e(2, 1)), (1, e(2, 1)));
        let (l1, x) = e(3, 1).compose(&e(3, 2));
        let (l2, y) = x.compose(&e(3, 1));
        assert_eq!((l1 + l2, y), (0, e(3, 1)));
        let id = PlanarMatching::identity(3);
        assert_eq!(id.compose(&e(3, 2)), (0, e(3, 2)));
        assert_eq!(e(4, 1).compose(&e(4, 3)), e(4, 3).compose(&e(4, 1)));
    }

    #[test]
    fn closure_loops() {
        assert_eq!(PlanarMatching::identity(2).closure_loop_count(), 2);
        assert_eq!(e(2, 1).closure_loop_count(), 1);
        assert_eq!(e(3, 1).closure_loop_count(), 2);
    }

    #[test]
    fn planarity_validation() {
        // bottom 0–top 1 and bottom 1–top 0 cross
        assert_eq!(PlanarMatching::from_pairing(2, vec![3, 2, 1, 0]), Err(Error::NotPlanar));
        assert!(PlanarMatching::from_pairing(2, vec![1, 0, 3, 2]).is_ok());
        assert!(PlanarMatching::from_pairing(2, vec![1, 0, 2, 3]).is_err());
    }

    #[test]
    fn closure_eval_of_identities() {
        let d = TauLaurent::d();
        assert_eq!(TLElement::identity(1).closure_eval(), d);
        assert_eq!(TLElement::identity(2).closure_eval(), &d * &d);
    }

    #[test]
    fn rho_sigma_closure_is_unknot_bracket() {
        let d = TauLaurent::d();
        let r = rho_sigma(2, 1, false).unwrap();
        assert_eq!(r.coeff(&PlanarMatching::identity(2)), TauLaurent::monomial(1, 0, 1));
        assert_eq!(r.coeff(&e(2, 1)), TauLaurent::monomial(0, 1, -1));
        // τd² − qd = τ²q⁻¹d
        assert_eq!(r.closure_eval(), d.mul_monomial(2, -1));
    }

    #[test]
    fn rho_inverse_and_braid_relation() {
        let s = rho_sigma(2, 1, false).unwrap();
        let si = rho_sigma(2, 1, true).unwrap();
        assert_eq!(&s * &si, TLElement::identity(2));
        assert_eq!(&si * &s, TLElement::identity(2));
        let a = rho_sigma(3, 1, false).unwrap();
        let b = rho_sigma(3, 2, false).unwrap();
        assert_eq!(&(&a * &b) * &a, &(&b * &a) * &b);
    }

    fn all_matchings(n: usize) -> Vec<PlanarMatching> {
        // products of generators reach every planar matching for n ≤ 4
        let mut found: Vec<PlanarMatching> = vec![PlanarMatching::identity(n)];
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for m in &frontier {
                for i in 1..n {
                    let (_, x) = m.compose(&e(n, i));
                    if !found.contains(&x) {
                        found.push(x.clone());
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        found
    }

    #[test]
    fn catalan_many_matchings() {
        assert_eq!(all_matchings(3).len(), 5);
        assert_eq!(all_matchings(4).len(), 14);
    }

    #[test]
    fn composition_is_associative_with_loops() {
        let ms = all_matchings(4);
        for a in &ms {
            for b in &ms {
                for c in ms.iter().step_by(3) {
                    let (l1, ab) = a.compose(b);
                    let (l2, ab_c) = ab.compose(c);
                    let (l3, bc) = b.compose(c);
                    let (l4, a_bc) = a.compose(&bc);
                    assert_eq!((l1 + l2, &ab_c), (l3 + l4, &a_bc));
                }
            }
        }
    }

    fn arb_word(n: usize) -> impl Strategy<Value = BraidWord> {
        let g = n as i32 - 1;
        proptest::collection::vec((1..=g, any::<bool>()), 0..6).prop_map(move |ls| {
            BraidWord::new(n, ls.into_iter().map(|(a, s)| if s { a } else { -a }).collect()).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rho_is_a_homomorphism(w in arb_word(3)) {
            prop_assert_eq!(&rho_word(&w) * &rho_word(&w.inverse()), TLElement::identity(3));
        }

        #[test]
        fn closure_is_a_trace(x in arb_word(3), y in arb_word(3)) {
            let (rx, ry) = (rho_word(&x), rho_word(&y));
            prop_assert_eq!((&rx * &ry).closure_eval(), (&ry * &rx).closure_eval());
        }
    }
}
