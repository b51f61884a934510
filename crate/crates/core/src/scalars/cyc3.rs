use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{rat, LaurentPolynomial};

/// An element `a + b*θ` of ℚ(θ), where θ is a primitive cube root of unity
/// (θ² = −1 − θ).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyc3 {
    pub a: BigRational,
    pub b: BigRational,
}

impl Cyc3 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn from_int(a: i64) -> Self {
        Self::from_rational(rat(a))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn theta() -> Self {
        Self { a: BigRational::zero(), b: BigRational::one() }
    }

    /// θ^k for any integer k.
    pub fn theta_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::theta(),
            _ => Self { a: rat(-1), b: rat(-1) },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate θ ↦ θ² = θ̄.
    pub fn conj(&self) -> Self {
        // a + bθ² = (a - b) - bθ
        Self { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm `x * conj(x)`, a rational number.
    pub fn norm(&self) -> BigRational {
        // (a + bθ)(a + bθ²) = a² - ab + b²
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self { a: c.a / &n, b: c.b / &n })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { a: &self.a * c, b: &self.b * c }
    }
}

impl fmt::Display for Cyc3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{} - {}*t3", self.a, -&self.b)
        } else {
            write!(f, "{} + {}*t3", self.a, self.b)
        }
    }
}

impl fmt::Debug for Cyc3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc3({})", self)
    }
}

impl Add for &Cyc3 {
    type Output = Cyc3;
    fn add(self, rhs: &Cyc3) -> Cyc3 {
        Cyc3 { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &Cyc3 {
    type Output = Cyc3;
    fn sub(self, rhs: &Cyc3) -> Cyc3 {
        Cyc3 { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &Cyc3 {
    type Output = Cyc3;
    fn mul(self, rhs: &Cyc3) -> Cyc3 {
        // (a + bθ)(c + dθ) = ac + (ad + bc)θ + bdθ², θ² = -1 - θ
        let bd = &self.b * &rhs.b;
        Cyc3 { a: &self.a * &rhs.a - &bd, b: &self.a * &rhs.b + &self.b * &rhs.a - bd }
    }
}

impl Neg for &Cyc3 {
    type Output = Cyc3;
    fn neg(self) -> Cyc3 {
        Cyc3 { a: -&self.a, b: -&self.b }
    }
}

impl Add for Cyc3 {
    type Output = Cyc3;
    fn add(self, rhs: Cyc3) -> Cyc3 {
        &self + &rhs
    }
}

impl Sub for Cyc3 {
    type Output = Cyc3;
    fn sub(self, rhs: Cyc3) -> Cyc3 {
        &self - &rhs
    }
}

impl Mul for Cyc3 {
    type Output = Cyc3;
    fn mul(self, rhs: Cyc3) -> Cyc3 {
        &self * &rhs
    }
}

/// `a(q) + b(q)*θ`: Laurent polynomials with coefficients in ℚ(θ).
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Cyc3Laurent {
    pub a: LaurentPolynomial,
    pub b: LaurentPolynomial,
}

impl Cyc3Laurent {
    pub fn new(a: LaurentPolynomial, b: LaurentPolynomial) -> Self {
        Self { a, b }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_laurent(a: LaurentPolynomial) -> Self {
        Self { a, b: LaurentPolynomial::zero() }
    }

    /// `c * p` for `c ∈ ℚ(θ)`.
    pub fn scaled(p: &LaurentPolynomial, c: &Cyc3) -> Self {
        Self { a: p.scale(&c.a), b: p.scale(&c.b) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { a: &self.a - &self.b, b: -&self.b }
    }

    /// The ℚ(q)-part if the θ-part vanishes.
    pub fn as_rational(&self) -> Option<&LaurentPolynomial> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn scale_laurent(&self, p: &LaurentPolynomial) -> Self {
        Self { a: &self.a * p, b: &self.b * p }
    }
}

impl fmt::Display for Cyc3Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({}) + ({})*t3", self.a, self.b)
        }
    }
}

impl Add for &Cyc3Laurent {
    type Output = Cyc3Laurent;
    fn add(self, rhs: &Cyc3Laurent) -> Cyc3Laurent {
        Cyc3Laurent { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Mul for &Cyc3Laurent {
    type Output = Cyc3Laurent;
    fn mul(self, rhs: &Cyc3Laurent) -> Cyc3Laurent {
        let bd = &self.b * &rhs.b;
        Cyc3Laurent { a: &(&self.a * &rhs.a) - &bd, b: &(&(&self.a * &rhs.b) + &(&self.b * &rhs.a)) - &bd }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::laurent::ratio;

    #[test]
    fn cube_root_identities() {
        let t = Cyc3::theta();
        let t2 = &t * &t;
        assert_eq!(t2, Cyc3::theta_pow(2));
        assert_eq!(&t2 * &t, Cyc3::one());
        assert!((&(&Cyc3::one() + &t) + &t2).is_zero());
        assert_eq!(&t * &t.conj(), Cyc3::one());
        assert_eq!(t.conj(), t2);
    }

    #[test]
    fn conjugation_is_involutive_automorphism() {
        let x = Cyc3::new(ratio(2, 3), ratio(-5, 7));
        let y = Cyc3::new(rat(4), ratio(1, 2));
        assert_eq!(x.conj().conj(), x);
        assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        assert_eq!(&x * &x.inverse().unwrap(), Cyc3::one());
        assert!(Cyc3::zero().inverse().is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(Cyc3::new(rat(1), rat(2)).to_string(), "1 + 2*t3");
        assert_eq!(Cyc3::theta_pow(2).to_string(), "-1 - 1*t3");
        assert_eq!(Cyc3::from_int(5).to_string(), "5");
    }
}
