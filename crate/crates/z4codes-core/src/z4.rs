//! The scalar ring `Z4 = Z/4Z` and the Lee weight.
//!
//! | x | Lee weight | Gray image |
//! |---|------------|------------|
//! | 0 | 0          | (0, 0)     |
//! | 1 | 1          | (0, 1)     |
//! | 2 | 2          | (1, 1)     |
//! | 3 | 1          | (1, 0)     |
//!
//! The units of `Z4` are `1` and `3`; the zero divisor is `2`. The Lee
//! weight is symmetric (`w(x) = w(-x)`) and subadditive
//! (`w(x + y) <= w(x) + w(y)`), which is what makes the induced Lee
//! distance a metric.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Lee weights indexed by residue.
const LEE_WEIGHT: [u8; 4] = [0, 1, 2, 1];

/// An element of `Z/4Z`, stored as its canonical representative `0..=3`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    /// All four elements in canonical order.
    pub const ALL: [Z4; 4] = [Z4(0), Z4(1), Z4(2), Z4(3)];

    /// Builds an element from any integer representative.
    #[inline]
    pub const fn new(value: u8) -> Z4 {
        Z4(value & 3)
    }

    /// The canonical representative in `0..=3`.
    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    /// The Lee weight: `w(0)=0, w(1)=1, w(2)=2, w(3)=1`.
    #[inline]
    pub const fn lee_weight(self) -> u8 {
        LEE_WEIGHT[self.0 as usize]
    }

    /// True for the multiplicative units `1` and `3`.
    #[inline]
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// True for the elements of the subgroup `2Z4 = {0, 2}`.
    #[inline]
    pub const fn is_even(self) -> bool {
        self.0 & 1 == 0
    }

    /// The Gray image `(a, b)` with `phi(0)=(0,0)`, `phi(1)=(0,1)`,
    /// `phi(2)=(1,1)`, `phi(3)=(1,0)`.
    #[inline]
    pub const fn gray(self) -> (u8, u8) {
        let hi = self.0 >> 1;
        (hi, (self.0 & 1) ^ hi)
    }
}

impl Add for Z4 {
    type Output = Z4;
    #[inline]
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    #[inline]
    fn sub(self, rhs: Z4) -> Z4 {
        Z4((self.0.wrapping_sub(rhs.0)) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    #[inline]
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    #[inline]
    fn neg(self) -> Z4 {
        Z4(self.0.wrapping_neg() & 3)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4({})", self.0)
    }
}

impl From<u8> for Z4 {
    fn from(value: u8) -> Z4 {
        Z4::new(value)
    }
}
