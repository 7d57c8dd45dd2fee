use alloc::collections::BTreeMap;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CyclotomicInt4, GaussLaurent, Gaussian};
use crate::{Error, Result};

/// Laurent polynomial in `q` with coefficients in Z[τ]/(τ⁴−1).
///
/// Stored sparsely by q-exponent with no zero coefficients, so structural
/// equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TauLaurent {
    terms: BTreeMap<i64, CyclotomicInt4>,
}

/// `c·τ^a·q^b`.
pub fn tau_monomial(a: i64, b: i64, c: impl Into<BigInt>) -> TauLaurent {
    TauLaurent::monomial(a, b, c)
}

impl TauLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(tau: i64, q: i64, c: impl Into<BigInt>) -> Self {
        Self::from_coeff(q, CyclotomicInt4::monomial(tau, c))
    }

    pub fn from_coeff(q: i64, c: CyclotomicInt4) -> Self {
        let mut out = Self::zero();
        out.add_coeff(q, &c);
        out
    }

    /// Builds a polynomial from `(tau, q, c)` triples.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut out = Self::zero();
        for (a, b, c) in terms {
            out.add_coeff(b, &CyclotomicInt4::monomial(a, c));
        }
        out
    }

    /// The circle value `d = τ³q + τq⁻¹`.
    pub fn d() -> Self {
        Self::from_terms([(3, 1, 1), (1, -1, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_coeff(&mut self, q: i64, c: &CyclotomicInt4) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(q).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&q);
        }
    }

    pub fn coeff(&self, q: i64) -> Option<&CyclotomicInt4> {
        self.terms.get(&q)
    }

    /// Coefficients by ascending q-exponent.
    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &CyclotomicInt4)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Nonzero `(q, tau, c)` monomials in canonical order: ascending q, then τ.
    pub fn monomials(&self) -> impl Iterator<Item = (i64, u8, &BigInt)> {
        self.terms.iter().flat_map(|(e, c)| {
            c.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(a, v)| (*e, a as u8, v))
        })
    }

    /// Multiplication by `τ^a q^b`.
    pub fn mul_monomial(&self, a: i64, b: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + b, c.mul_tau_pow(a))).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_coeff(*e, &c.scale(k));
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

/// The ring map τ ↦ tᵏ (t² = −1) into Z[t][q, q⁻¹].
pub fn specialize_tau(p: &TauLaurent, k: i64) -> GaussLaurent {
    let mut out = GaussLaurent::zero();
    for (e, a, c) in p.monomials() {
        out.add_term(e, &Gaussian::t_pow(k * a as i64).scale(c));
    }
    out
}

/// `4·ε_{tᵏ}·p` written in the τ-basis: entry `j` is the coefficient of `τʲ`.
///
/// Since `ε_{tᵏ}·τᵃ = t^{−ka}·ε_{tᵏ}`, this is `f·t^{jk}` with
/// `f = p|_{τ = t^{−k}}`; it is always integral.
pub fn idempotent_component_scaled(p: &TauLaurent, k: i64) -> [GaussLaurent; 4] {
    let f = specialize_tau(p, -k);
    core::array::from_fn(|j| f.scale(&Gaussian::t_pow(j as i64 * k)))
}

/// `ε_{tᵏ}·p` in the τ-basis, over the integers.
///
/// Fails with [`Error::ComponentNotIntegral`] when the component needs the
/// denominator 4.
pub fn idempotent_component(p: &TauLaurent, k: i64) -> Result<[GaussLaurent; 4]> {
    let four = BigInt::from(4);
    let scaled = idempotent_component_scaled(p, k);
    let mut out: [GaussLaurent; 4] = Default::default();
    for (slot, c) in out.iter_mut().zip(scaled.iter()) {
        *slot = c.div_exact(&four).ok_or(Error::ComponentNotIntegral)?;
    }
    Ok(out)
}

impl Zero for TauLaurent {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TauLaurent {
    fn one() -> Self {
        TauLaurent::one()
    }
}

impl AddAssign<&TauLaurent> for TauLaurent {
    fn add_assign(&mut self, rhs: &TauLaurent) {
        for (e, c) in &rhs.terms {
            self.add_coeff(*e, c);
        }
    }
}

impl<'a> Add<&'a TauLaurent> for &'a TauLaurent {
    type Output = TauLaurent;
    fn add(self, rhs: &TauLaurent) -> TauLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for TauLaurent {
    type Output = TauLaurent;
    fn add(mut self, rhs: TauLaurent) -> TauLaurent {
        self += &rhs;
        self
    }
}

impl<'a> Sub<&'a TauLaurent> for &'a TauLaurent {
    type Output = TauLaurent;
    fn sub(self, rhs: &TauLaurent) -> TauLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_coeff(*e, &-c);
        }
        out
    }
}

impl Sub for TauLaurent {
    type Output = TauLaurent;
    fn sub(self, rhs: TauLaurent) -> TauLaurent {
        &self - &rhs
    }
}

impl Neg for TauLaurent {
    type Output = TauLaurent;
    fn neg(self) -> TauLaurent {
        TauLaurent {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &TauLaurent {
    type Output = TauLaurent;
    fn neg(self) -> TauLaurent {
        -self.clone()
    }
}

impl<'a> Mul<&'a TauLaurent> for &'a TauLaurent {
    type Output = TauLaurent;
    fn mul(self, rhs: &TauLaurent) -> TauLaurent {
        let mut out = TauLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_coeff(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for TauLaurent {
    type Output = TauLaurent;
    fn mul(self, rhs: TauLaurent) -> TauLaurent {
        &self * &rhs
    }
}

impl Sum for TauLaurent {
    fn sum<I: Iterator<Item = TauLaurent>>(iter: I) -> TauLaurent {
        let mut acc = TauLaurent::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// Canonical rendering: `{c}*t^{a}*q^{b}` terms joined by ` + `, ascending by
/// q then τ; the zero polynomial renders as `0`.
impl fmt::Display for TauLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, a, c) in self.monomials() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*t^{}*q^{}", c, a, e)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
