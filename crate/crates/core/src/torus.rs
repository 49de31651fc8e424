use std::fmt;
use std::ops::{Add, Neg};

use crate::arith::gcd;

/// A torsion point of the circle group, stored as a reduced fraction in `[0, 1)`.
///
/// Every character of a finite group lands in this subgroup of ℚ/ℤ, so no
/// irrational point is ever needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusValue {
    numerator: u64,
    denominator: u64,
}

impl TorusValue {
    pub const ZERO: TorusValue = TorusValue {
        numerator: 0,
        denominator: 1,
    };

    /// `numerator / denominator mod 1`, reduced.
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "zero denominator");
        let n = numerator % denominator;
        let g = gcd(n, denominator);
        TorusValue {
            numerator: n / g,
            denominator: denominator / g,
        }
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator == 0
    }

    /// The order of the value in ℚ/ℤ, i.e. its reduced denominator.
    pub fn order(&self) -> u64 {
        self.denominator
    }
}

impl Add for TorusValue {
    type Output = TorusValue;

    fn add(self, rhs: TorusValue) -> TorusValue {
        let g = gcd(self.denominator, rhs.denominator);
        let den = (self.denominator / g) as u128 * rhs.denominator as u128;
        let num = self.numerator as u128 * (rhs.denominator / g) as u128
            + rhs.numerator as u128 * (self.denominator / g) as u128;
        let num = num % den;
        let g2 = gcd_u128(num, den);
        TorusValue {
            numerator: (num / g2) as u64,
            denominator: (den / g2) as u64,
        }
    }
}

impl Neg for TorusValue {
    type Output = TorusValue;

    fn neg(self) -> TorusValue {
        if self.numerator == 0 {
            self
        } else {
            TorusValue {
                numerator: self.denominator - self.numerator,
                denominator: self.denominator,
            }
        }
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for TorusValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}
