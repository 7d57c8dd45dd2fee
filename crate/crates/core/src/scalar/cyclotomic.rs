use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An element `c0 + c1·τ + c2·τ² + c3·τ³` of Z[τ]/(τ⁴−1).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicInt4 {
    c: [BigInt; 4],
}

impl CyclotomicInt4 {
    pub fn new(c0: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>, c3: impl Into<BigInt>) -> Self {
        Self {
            c: [c0.into(), c1.into(), c2.into(), c3.into()],
        }
    }

    pub fn from_coeffs(c: [BigInt; 4]) -> Self {
        Self { c }
    }

    /// `c·τ^a`, exponent taken mod 4.
    pub fn monomial(a: i64, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.c[a.rem_euclid(4) as usize] = c.into();
        out
    }

    pub fn tau() -> Self {
        Self::monomial(1, 1)
    }

    /// π = τ².
    pub fn pi() -> Self {
        Self::monomial(2, 1)
    }

    pub fn coeff(&self, a: usize) -> &BigInt {
        &self.c[a % 4]
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.c
    }

    /// Multiplication by `τ^a`: a cyclic shift of the coefficients.
    pub fn mul_tau_pow(&self, a: i64) -> Self {
        let s = a.rem_euclid(4) as usize;
        let mut c: [BigInt; 4] = Default::default();
        for (k, v) in self.c.iter().enumerate() {
            c[(k + s) % 4] = v.clone();
        }
        Self { c }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            c: [&self.c[0] * k, &self.c[1] * k, &self.c[2] * k, &self.c[3] * k],
        }
    }

    /// Returns `(sign, exponent)` if `self = ±τ^exponent`.
    pub fn as_unit(&self) -> Option<(i8, u8)> {
        let mut found = None;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if found.is_some() {
                return None;
            }
            let s = if v.is_one() {
                1
            } else if *v == -BigInt::one() {
                -1
            } else {
                return None;
            };
            found = Some((s, k as u8));
        }
        found
    }
}

impl Zero for CyclotomicInt4 {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl One for CyclotomicInt4 {
    fn one() -> Self {
        Self::monomial(0, 1)
    }
}

impl<'a> Add<&'a CyclotomicInt4> for &'a CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn add(self, rhs: &CyclotomicInt4) -> CyclotomicInt4 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn add(mut self, rhs: CyclotomicInt4) -> CyclotomicInt4 {
        self += &rhs;
        self
    }
}

impl AddAssign<&CyclotomicInt4> for CyclotomicInt4 {
    fn add_assign(&mut self, rhs: &CyclotomicInt4) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a += b;
        }
    }
}

impl SubAssign<&CyclotomicInt4> for CyclotomicInt4 {
    fn sub_assign(&mut self, rhs: &CyclotomicInt4) {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a -= b;
        }
    }
}

impl<'a> Sub<&'a CyclotomicInt4> for &'a CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn sub(self, rhs: &CyclotomicInt4) -> CyclotomicInt4 {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn sub(mut self, rhs: CyclotomicInt4) -> CyclotomicInt4 {
        self -= &rhs;
        self
    }
}

impl Neg for CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn neg(self) -> CyclotomicInt4 {
        let [a, b, c, d] = self.c;
        Self { c: [-a, -b, -c, -d] }
    }
}

impl Neg for &CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn neg(self) -> CyclotomicInt4 {
        -self.clone()
    }
}

impl<'a> Mul<&'a CyclotomicInt4> for &'a CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn mul(self, rhs: &CyclotomicInt4) -> CyclotomicInt4 {
        let mut c: [BigInt; 4] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    c[(i + j) % 4] += a * b;
                }
            }
        }
        CyclotomicInt4 { c }
    }
}

impl Mul for CyclotomicInt4 {
    type Output = CyclotomicInt4;
    fn mul(self, rhs: CyclotomicInt4) -> CyclotomicInt4 {
        &self * &rhs
    }
}

impl fmt::Display for CyclotomicInt4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}*t^{}", v, k)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
