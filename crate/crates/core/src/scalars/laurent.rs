use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in the indeterminate `q` with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// The indeterminate itself.
    pub fn q() -> Self {
        Self::monomial(rat(1), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `c * q^exp` with an integer coefficient.
    pub fn term(c: i64, exp: i32) -> Self {
        Self::monomial(rat(c), exp)
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs, collecting like terms.
    pub fn from_terms<I: IntoIterator<Item = (BigRational, i32)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (c, e) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent with a nonzero coefficient (the valuation).
    pub fn valuation(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// If this is a single term `c*q^e`, returns `(c, e)`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * q^shift * other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &BigRational, shift: i32) {
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e + shift, v * c);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution `q = q0`.
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational> {
        if q0.is_zero() {
            if self.valuation().is_some_and(|v| v < 0) {
                return Err(Error::Domain(
                    "cannot specialize a Laurent polynomial with negative exponents at q = 0".into(),
                ));
            }
            return Ok(self.coeff(0));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(q0.clone(), *e as usize)
            } else {
                num_traits::pow(q0.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn specialize_int(&self, q0: i64) -> Result<BigRational> {
        self.specialize(&rat(q0))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// True if all exponents are non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.valuation().is_none_or(|v| v >= 0)
    }

    /// True if all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Exact division: returns `Some(r)` with `r * divisor == self`, or `None`
    /// if `divisor` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlow = divisor.valuation()?;
        let ddeg = divisor.degree()?;
        let dlead = divisor.leading_coeff()?.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; the remainder's degree strictly drops.
        while let Some(rdeg) = rem.degree() {
            let rlow = rem.valuation().unwrap();
            if rdeg - rlow < ddeg - dlow {
                return None;
            }
            let c = rem.terms[&rdeg].clone() / &dlead;
            let e = rdeg - ddeg;
            rem.add_scaled(divisor, &-c.clone(), e);
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Substitutes `q -> q^k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Terms as `c*q^e`, descending exponents, e.g. `3*q^6 - 1/3*q^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                write!(f, "{}*q^{}", c, e)?;
            } else if c.is_negative() {
                write!(f, " - {}*q^{}", -c, e)?;
            } else {
                write!(f, " + {}*q^{}", c, e)?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({})", self)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational coefficient `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
    }
}

fn parse_term(s: &str) -> Result<(BigRational, i32)> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid Laurent term `{s}`"));
    if s.is_empty() {
        return Err(bad());
    }
    let (coeff, var) = match s.find('q') {
        None => return Ok((parse_rational(s)?, 0)),
        Some(pos) => (s[..pos].trim(), s[pos..].trim()),
    };
    let c = match coeff.strip_suffix('*').map(str::trim) {
        Some(c) => parse_rational(c)?,
        None if coeff.is_empty() => rat(1),
        None if coeff == "-" => rat(-1),
        None => return Err(bad()),
    };
    let e = if var == "q" {
        1
    } else {
        let exp = var.strip_prefix("q^").ok_or_else(bad)?.trim();
        let exp = exp.trim_start_matches('(').trim_end_matches(')');
        exp.parse::<i32>().map_err(|_| bad())?
    };
    Ok((c, e))
}

impl FromStr for LaurentPolynomial {
    type Err = Error;

    /// Accepts sums like `3*q^6`, `2*q^3 + -1*q^0`, `q^2 - 1/3*q - 4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let mut p = Self::zero();
        // Split on top-level '+' / '-' that are not part of an exponent.
        let bytes: Vec<char> = s.chars().collect();
        let mut start = 0usize;
        let mut sign = 1i64;
        let mut i = 0usize;
        let mut pieces: Vec<(i64, String)> = Vec::new();
        while i < bytes.len() {
            let ch = bytes[i];
            let prev = bytes[..i].iter().rev().find(|c| !c.is_whitespace()).copied();
            let binary = matches!(ch, '+' | '-')
                && i > start
                && !matches!(prev, Some('^') | Some('*') | Some('+') | Some('-') | Some('('));
            if binary {
                pieces.push((sign, bytes[start..i].iter().collect()));
                sign = if ch == '-' { -1 } else { 1 };
                start = i + 1;
            }
            i += 1;
        }
        pieces.push((sign, bytes[start..].iter().collect()));
        for (sg, piece) in pieces {
            let mut piece = piece.trim().to_string();
            let mut sg = sg;
            // Absorb an explicit unary sign following the binary operator.
            while let Some(rest) = piece.strip_prefix('+').or_else(|| piece.strip_prefix('-')) {
                if piece.starts_with('-') {
                    sg = -sg;
                }
                piece = rest.trim().to_string();
            }
            let (c, e) = parse_term(&piece)?;
            p.add_term(e, c * rat(sg));
        }
        Ok(p)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPolynomial {
    fn one() -> Self {
        LaurentPolynomial::one()
    }
}
