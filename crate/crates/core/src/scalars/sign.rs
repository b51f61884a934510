use std::fmt;
use std::ops::{Add, Mul};

use serde::{Serialize, Serializer};

use super::laurent::LaurentPolynomial;

/// A value of the unknown sign ξ ∈ {+1, −1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.as_i64())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// An expression `constant + ξ * xi_part` with Laurent-polynomial parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignLinear {
    pub constant: LaurentPolynomial,
    pub xi_part: LaurentPolynomial,
}

impl SignLinear {
    pub fn new(constant: LaurentPolynomial, xi_part: LaurentPolynomial) -> Self {
        Self { constant, xi_part }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn eval(&self, xi: Sign) -> LaurentPolynomial {
        match xi {
            Sign::Plus => &self.constant + &self.xi_part,
            Sign::Minus => &self.constant - &self.xi_part,
        }
    }

    /// Multiplies both parts by a Laurent polynomial.
    pub fn scale(&self, p: &LaurentPolynomial) -> Self {
        Self { constant: &self.constant * p, xi_part: &self.xi_part * p }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.xi_part.is_zero()
    }
}

impl Add for &SignLinear {
    type Output = SignLinear;
    fn add(self, rhs: &SignLinear) -> SignLinear {
        SignLinear { constant: &self.constant + &rhs.constant, xi_part: &self.xi_part + &rhs.xi_part }
    }
}

impl Mul<&LaurentPolynomial> for &SignLinear {
    type Output = SignLinear;
    fn mul(self, rhs: &LaurentPolynomial) -> SignLinear {
        self.scale(rhs)
    }
}

impl fmt::Display for SignLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + xi*({})", self.constant, self.xi_part)
    }
}
