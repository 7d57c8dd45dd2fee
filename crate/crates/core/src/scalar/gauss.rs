use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A Gaussian integer `re + im·t` with `t² = −1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::new(1, 0),
            1 => Self::new(0, 1),
            2 => Self::new(-1, 0),
            _ => Self::new(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
        }
    }
}

impl<'a> Add<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Gaussian> for &'a Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// Laurent polynomial in `q` with Gaussian-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussLaurent {
    terms: BTreeMap<i64, Gaussian>,
}

impl GaussLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Gaussian)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// Integer-coefficient polynomial with the given `(exponent, coefficient)` terms.
    pub fn from_integer_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        Self::from_terms(terms.into_iter().map(|(e, c)| (e, Gaussian::new(c, 0))))
    }

    pub fn add_term(&mut self, e: i64, c: &Gaussian) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Gaussian)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    /// Exact division of every coefficient by `k`, or `None` if some part is
    /// not divisible.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if !(&c.re % k).is_zero() || !(&c.im % k).is_zero() {
                return None;
            }
            out.add_term(
                *e,
                &Gaussian {
                    re: &c.re / k,
                    im: &c.im / k,
                },
            );
        }
        Some(out)
    }
}

impl<'a> Add<&'a GaussLaurent> for &'a GaussLaurent {
    type Output = GaussLaurent;
    fn add(self, rhs: &GaussLaurent) -> GaussLaurent {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl<'a> Mul<&'a GaussLaurent> for &'a GaussLaurent {
    type Output = GaussLaurent;
    fn mul(self, rhs: &GaussLaurent) -> GaussLaurent {
        let mut out = GaussLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for GaussLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            for (part, unit) in [(&c.re, ""), (&c.im, "*i")] {
                if part.is_zero() {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{}{}*q^{}", part, unit, e)?;
            }
        }
        Ok(())
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Gaussian::new(1, 0)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        &self * &rhs
    }
}
