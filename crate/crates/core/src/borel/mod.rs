//! Arithmetic in `B(𝔽₃) = U(𝔽₃) ⋊ T(𝔽₃)` for simply connected E6 by
//! commutator collection, the elements `u₀`, the Frobenius actions and the
//! conjugacy witness `(ut) u₀ (ut)⁻¹ = u₀⁻¹`.

mod witness;

use std::fmt;

use serde::Serialize;

pub use witness::{search_witness, search_witness_for, verify_witness, WitnessReport};

use crate::error::{Error, Result};
use crate::rootdata::{dagger_automorphism, graph_signs, structure_constants, RootSystem, StructureConstants};
use crate::Case;

pub const N_POS: usize = 36;
pub const RANK: usize = 6;

/// An element of 𝔽₃, stored as `0`, `1` or `2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F3(u8);

impl Serialize for F3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.signed())
    }
}

impl F3 {
    pub const ZERO: F3 = F3(0);
    pub const ONE: F3 = F3(1);
    pub const MINUS_ONE: F3 = F3(2);

    pub fn new(x: i64) -> Self {
        F3(x.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Representative in `{−1, 0, 1}`.
    pub fn signed(self) -> i8 {
        if self.0 == 2 {
            -1
        } else {
            self.0 as i8
        }
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `x^e` for `x ≠ 0`; `e` may be negative.
    pub fn pow(self, e: i64) -> Self {
        assert!(!self.is_zero(), "power of zero in 𝔽₃^×");
        if self.0 == 1 || e.rem_euclid(2) == 0 {
            F3(1)
        } else {
            F3(2)
        }
    }

    /// `x ↦ x^q`; the identity on 𝔽₃.
    pub fn frobenius(self) -> Self {
        self
    }
}

impl std::ops::Neg for F3 {
    type Output = F3;
    fn neg(self) -> F3 {
        F3((3 - self.0) % 3)
    }
}

impl std::ops::Add for F3 {
    type Output = F3;
    fn add(self, o: F3) -> F3 {
        F3((self.0 + o.0) % 3)
    }
}

impl std::ops::Mul for F3 {
    type Output = F3;
    fn mul(self, o: F3) -> F3 {
        F3(self.0 * o.0 % 3)
    }
}

/// `Π_β u_β(c_β)` over the positive roots in root order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnipotentElement {
    coeffs: [F3; N_POS],
}

impl UnipotentElement {
    pub fn identity() -> Self {
        Self { coeffs: [F3::ZERO; N_POS] }
    }

    /// Interprets the array as an already collected normal form.
    pub fn from_coeffs(coeffs: [F3; N_POS]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[F3; N_POS] {
        &self.coeffs
    }

    pub fn coeff(&self, root: usize) -> F3 {
        self.coeffs[root]
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero `(root index, coefficient)` pairs.
    pub fn support(&self) -> Vec<(usize, F3)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i, c)).collect()
    }

    /// Regular iff every simple-root coefficient is nonzero.
    pub fn is_regular(&self) -> bool {
        self.coeffs[..RANK].iter().all(|c| !c.is_zero())
    }
}

impl fmt::Debug for UnipotentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.coeffs.iter().map(|c| char::from(b'0' + c.0)).collect();
        write!(f, "U[{s}]")
    }
}

impl fmt::Display for UnipotentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.coeffs.iter().map(|c| char::from(b'0' + c.0)).collect();
        f.write_str(&s)
    }
}

impl Serialize for UnipotentElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Π_i α_i^∨(ξ_i)` with every `ξ_i ∈ 𝔽₃^×`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusElement {
    xs: [F3; RANK],
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.xs.iter().map(|x| x.signed().to_string()).collect();
        write!(f, "({})", xs.join(","))
    }
}

impl TorusElement {
    pub fn identity() -> Self {
        Self { xs: [F3::ONE; RANK] }
    }

    pub fn new(xs: [F3; RANK]) -> Result<Self> {
        if xs.iter().any(|x| x.is_zero()) {
            return Err(Error::Domain("torus coordinates must be nonzero".into()));
        }
        Ok(Self { xs })
    }

    pub fn xs(&self) -> &[F3; RANK] {
        &self.xs
    }

    pub fn compose(&self, o: &Self) -> Self {
        let mut xs = self.xs;
        for (x, y) in xs.iter_mut().zip(o.xs) {
            *x = *x * y;
        }
        Self { xs }
    }

    pub fn inverse(&self) -> Self {
        // Every element of 𝔽₃^× is its own inverse.
        *self
    }

    /// The element `t := α2^∨(−1) α3^∨(−1) α4^∨(−1) α5^∨(−1)`.
    pub fn witness_t() -> Self {
        let m = F3::MINUS_ONE;
        Self { xs: [F3::ONE, m, m, m, m, F3::ONE] }
    }

    /// All 64 elements of `T(𝔽₃)` in lexicographic order.
    pub fn all() -> Vec<Self> {
        (0..64u32)
            .map(|k| {
                let mut xs = [F3::ONE; RANK];
                for (i, x) in xs.iter_mut().enumerate() {
                    if k >> (RANK - 1 - i) & 1 == 1 {
                        *x = F3::MINUS_ONE;
                    }
                }
                Self { xs }
            })
            .collect()
    }
}

/// `u · t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BorelElement {
    pub u: UnipotentElement,
    pub t: TorusElement,
}

/// Root data and structure constants needed to compute in `B(𝔽₃)` for one
/// Frobenius flavor.
#[derive(Clone, Debug)]
pub struct BorelGroup {
    case: Case,
    rs: RootSystem,
    /// `sums[a][b] = Some((a+b, N(a,b)))` for positive roots.
    sums: Vec<Vec<Option<(usize, F3)>>>,
    /// `<β, α_i^∨>` for positive `β`.
    pairings: Vec<[i64; RANK]>,
    dagger: Vec<usize>,
    signs: Vec<i8>,
    coroot_dagger: [usize; RANK],
}

impl BorelGroup {
    pub fn new(rs: &RootSystem, case: Case) -> Result<Self> {
        let nc = structure_constants(rs)?;
        Self::with_constants(rs, &nc, case)
    }

    pub fn with_constants(rs: &RootSystem, nc: &StructureConstants, case: Case) -> Result<Self> {
        if rs.n_positive() != N_POS || rs.rank() != RANK {
            return Err(Error::Domain("Borel arithmetic is implemented for E6 only".into()));
        }
        let sums = (0..N_POS)
            .map(|a| {
                (0..N_POS)
                    .map(|b| rs.sum(a, b).map(|c| (c, F3::new(nc.get(a, b).expect("defined on sums") as i64))))
                    .collect()
            })
            .collect();
        let pairings = (0..N_POS)
            .map(|b| {
                let mut p = [0i64; RANK];
                for (i, x) in p.iter_mut().enumerate() {
                    *x = rs.pairing(b, i);
                }
                p
            })
            .collect();
        let dagger = dagger_automorphism(rs, case);
        let signs = graph_signs(rs, nc, &dagger)?;
        let mut coroot_dagger = [0usize; RANK];
        for (i, d) in coroot_dagger.iter_mut().enumerate() {
            *d = (0..RANK).find(|&j| rs.simple(j) == dagger[rs.simple(i)]).expect("† permutes simple roots");
        }
        Ok(Self { case, rs: rs.clone(), sums, pairings, dagger, signs, coroot_dagger })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Right-multiplies the normal form `c` by `u_g(s)`.
    ///
    /// Factors `u_b(x)` of `c` with `b > g` are passed from the right using
    /// `u_b(x) u_g(s) = u_g(s) u_b(x) u_{b+g}(−N(g,b) s x)`; the displaced tail
    /// together with the new commutator factors is then re-inserted. Every
    /// re-inserted factor has larger index than `g`, so this terminates.
    fn insert(&self, c: &mut [F3; N_POS], g: usize, s: F3) {
        if s.is_zero() {
            return;
        }
        let tail: Vec<(usize, F3)> = (g + 1..N_POS).filter(|&b| !c[b].is_zero()).map(|b| (b, c[b])).collect();
        c[g] = c[g] + s;
        if tail.is_empty() {
            return;
        }
        let mut seq = Vec::with_capacity(2 * tail.len());
        for &(b, x) in &tail {
            c[b] = F3::ZERO;
            seq.push((b, x));
            if let Some((sum, n)) = self.sums[g][b] {
                seq.push((sum, -(n * s * x)));
            }
        }
        for (r, x) in seq {
            self.insert(c, r, x);
        }
    }

    /// Collected normal form of the product `Π u_{r}(x)` in the given order.
    pub fn from_factors(&self, factors: &[(usize, F3)]) -> UnipotentElement {
        let mut c = [F3::ZERO; N_POS];
        for &(r, x) in factors {
            assert!(r < N_POS, "root {r} is not positive");
            self.insert(&mut c, r, x);
        }
        UnipotentElement { coeffs: c }
    }

    /// Product of simple-root factors `u_{i}(x)`, 1-based `i`.
    pub fn from_simple_word(&self, word: &[(usize, i64)]) -> UnipotentElement {
        let factors: Vec<(usize, F3)> = word.iter().map(|&(i, x)| (self.rs.simple(i - 1), F3::new(x))).collect();
        self.from_factors(&factors)
    }

    pub fn root_element(&self, root: usize, x: F3) -> UnipotentElement {
        self.from_factors(&[(root, x)])
    }

    pub fn multiply(&self, a: &UnipotentElement, b: &UnipotentElement) -> UnipotentElement {
        let mut c = a.coeffs;
        for (r, &x) in b.coeffs.iter().enumerate() {
            self.insert(&mut c, r, x);
        }
        UnipotentElement { coeffs: c }
    }

    pub fn inverse(&self, a: &UnipotentElement) -> UnipotentElement {
        let mut c = [F3::ZERO; N_POS];
        for (r, &x) in a.coeffs.iter().enumerate().rev() {
            self.insert(&mut c, r, -x);
        }
        UnipotentElement { coeffs: c }
    }

    /// `t a t⁻¹`: the coefficient at `β` is multiplied by `Π ξ_i^{<β, α_i^∨>}`.
    pub fn torus_conjugate(&self, t: &TorusElement, a: &UnipotentElement) -> UnipotentElement {
        let mut c = a.coeffs;
        for (b, x) in c.iter_mut().enumerate() {
            if !x.is_zero() {
                let f = (0..RANK).fold(F3::ONE, |acc, i| acc * t.xs[i].pow(self.pairings[b][i]));
                *x = *x * f;
            }
        }
        UnipotentElement { coeffs: c }
    }

    /// `g a g⁻¹ = u (t a t⁻¹) u⁻¹` for `g = u t`.
    pub fn borel_conjugate(&self, g: &BorelElement, a: &UnipotentElement) -> UnipotentElement {
        let inner = self.torus_conjugate(&g.t, a);
        self.multiply(&self.multiply(&g.u, &inner), &self.inverse(&g.u))
    }

    pub fn borel_multiply(&self, x: &BorelElement, y: &BorelElement) -> BorelElement {
        BorelElement { u: self.multiply(&x.u, &self.torus_conjugate(&x.t, &y.u)), t: x.t.compose(&y.t) }
    }

    pub fn borel_inverse(&self, x: &BorelElement) -> BorelElement {
        let ti = x.t.inverse();
        BorelElement { u: self.torus_conjugate(&ti, &self.inverse(&x.u)), t: ti }
    }

    /// `u₀ = u1(1)u2(1)u3(1)u4(1)u5(1)u6(1)`, respectively
    /// `u1(1)u6(1)u3(1)u5(1)u2(1)u4(1)`.
    pub fn build_u0(&self) -> UnipotentElement {
        let order: [usize; 6] = match self.case {
            Case::Untwisted => [1, 2, 3, 4, 5, 6],
            Case::Twisted => [1, 6, 3, 5, 2, 4],
        };
        let word: Vec<(usize, i64)> = order.iter().map(|&i| (i, 1)).collect();
        self.from_simple_word(&word)
    }

    /// `F(u_α(c)) = u_{α†}(γ_α c^q)`, re-collected.
    pub fn frobenius_unipotent(&self, a: &UnipotentElement) -> UnipotentElement {
        let factors: Vec<(usize, F3)> = a
            .support()
            .into_iter()
            .map(|(r, x)| (self.dagger[r], x.frobenius() * F3::new(self.signs[r] as i64)))
            .collect();
        self.from_factors(&factors)
    }

    /// `F(α_i^∨(ξ)) = α_{i†}^∨(ξ^q)`.
    pub fn frobenius_torus(&self, t: &TorusElement) -> TorusElement {
        let mut xs = [F3::ONE; RANK];
        for i in 0..RANK {
            xs[self.coroot_dagger[i]] = t.xs[i].frobenius();
        }
        TorusElement { xs }
    }

    pub fn frobenius_borel(&self, g: &BorelElement) -> BorelElement {
        BorelElement { u: self.frobenius_unipotent(&g.u), t: self.frobenius_torus(&g.t) }
    }

    /// Positive-root index of height `h` roots, in root order.
    pub fn roots_of_height(&self, h: i32) -> Vec<usize> {
        (0..N_POS).filter(|&r| self.rs.height(r) == h).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_cartan_e6, generate_root_system};

    fn group(case: Case) -> BorelGroup {
        BorelGroup::new(&generate_root_system(&build_cartan_e6()).unwrap(), case).unwrap()
    }

    #[test]
    fn field() {
        assert_eq!(F3::new(-1), F3::MINUS_ONE);
        assert_eq!(F3::MINUS_ONE.pow(-1), F3::MINUS_ONE);
        assert_eq!(F3::MINUS_ONE.pow(2), F3::ONE);
        for x in 0..3 {
            let x = F3::new(x);
            assert_eq!(x * x * x, x);
        }
    }

    #[test]
    fn root_subgroup_additivity_and_commuting() {
        let g = group(Case::Untwisted);
        let a1 = g.root_element(0, F3::ONE);
        let a2 = g.root_element(1, F3::ONE);
        assert_eq!(g.multiply(&a1, &a1), g.root_element(0, F3::new(2)));
        assert_eq!(g.multiply(&a1, &a2).support(), vec![(0, F3::ONE), (1, F3::ONE)]);
        assert_eq!(g.multiply(&a1, &a2), g.multiply(&a2, &a1));
    }

    #[test]
    fn single_commutator() {
        let g = group(Case::Untwisted);
        let rs = g.root_system();
        let a13 = rs.index_of(&[1, 0, 1, 0, 0, 0]).unwrap();
        let x = g.from_simple_word(&[(3, 1), (1, 1)]);
        let supp = x.support();
        assert_eq!(supp.len(), 3);
        assert_eq!(&supp[..2], &[(0, F3::ONE), (2, F3::ONE)]);
        assert_eq!(supp[2].0, a13);
        // N(α1, α3) = +1 so the correction is −1.
        assert_eq!(supp[2].1, F3::MINUS_ONE);
    }

    #[test]
    fn inverse_and_u0() {
        for case in Case::BOTH {
            let g = group(case);
            let u0 = g.build_u0();
            assert!(u0.is_regular());
            assert!(u0.coeffs[..6].iter().all(|&c| c == F3::ONE));
            let inv = g.inverse(&u0);
            assert!(inv.coeffs[..6].iter().all(|&c| c == F3::MINUS_ONE));
            assert!(g.multiply(&u0, &inv).is_identity());
            assert!(g.multiply(&inv, &u0).is_identity());
            assert_eq!(g.frobenius_unipotent(&u0), u0);
        }
        assert!(!UnipotentElement::identity().is_regular());
    }

    #[test]
    fn torus_action() {
        let g = group(Case::Untwisted);
        let t = TorusElement::witness_t();
        let x = g.root_element(0, F3::ONE);
        assert_eq!(g.torus_conjugate(&t, &x), g.root_element(0, F3::MINUS_ONE));
        assert_eq!(g.torus_conjugate(&TorusElement::identity(), &x), x);
        assert!(g.torus_conjugate(&t, &UnipotentElement::identity()).is_identity());
        let gt = group(Case::Twisted);
        assert_eq!(gt.frobenius_torus(&t), t);
        assert_eq!(TorusElement::all().len(), 64);
        assert!(TorusElement::new([F3::ZERO; 6]).is_err());
    }
}
