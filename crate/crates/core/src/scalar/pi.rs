use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An element `a + b·π` of Z[π]/(π²−1).
///
/// Entries of covering differentials are sums of a few units, so machine
/// integers suffice here.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiScalar {
    pub a: i64,
    pub b: i64,
}

impl PiScalar {
    pub const ZERO: PiScalar = PiScalar { a: 0, b: 0 };
    pub const ONE: PiScalar = PiScalar { a: 1, b: 0 };
    pub const PI: PiScalar = PiScalar { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// `sign · π^pi_bit`.
    pub const fn unit(negative: bool, pi_bit: bool) -> Self {
        let s = if negative { -1 } else { 1 };
        if pi_bit {
            Self { a: 0, b: s }
        } else {
            Self { a: s, b: 0 }
        }
    }

    /// `π^e`.
    pub const fn pi_pow(e: u32) -> Self {
        Self::unit(false, e % 2 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Units of Z[π]/(π²−1) are exactly ±1, ±π.
    pub fn is_unit(&self) -> bool {
        (self.a.abs() == 1 && self.b == 0) || (self.a == 0 && self.b.abs() == 1)
    }

    /// The ring map π ↦ s for s = ±1.
    pub fn specialize(&self, s: i64) -> i64 {
        debug_assert!(s == 1 || s == -1);
        self.a + s * self.b
    }
}

impl Add for PiScalar {
    type Output = PiScalar;
    fn add(self, rhs: PiScalar) -> PiScalar {
        PiScalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for PiScalar {
    fn add_assign(&mut self, rhs: PiScalar) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for PiScalar {
    type Output = PiScalar;
    fn sub(self, rhs: PiScalar) -> PiScalar {
        PiScalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for PiScalar {
    type Output = PiScalar;
    fn neg(self) -> PiScalar {
        PiScalar::new(-self.a, -self.b)
    }
}

impl Mul for PiScalar {
    type Output = PiScalar;
    fn mul(self, rhs: PiScalar) -> PiScalar {
        PiScalar::new(self.a * rhs.a + self.b * rhs.b, self.a * rhs.b + self.b * rhs.a)
    }
}

impl fmt::Display for PiScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{}", a),
            (0, b) => write!(f, "{}*pi", b),
            (a, b) => write!(f, "{} + {}*pi", a, b),
        }
    }
}
