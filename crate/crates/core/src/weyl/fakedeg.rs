use super::classes::ConjClassSet;
use super::element::WeylElement;
use super::group::FiniteCoxeterGroup;
use crate::error::{Error, Result};
use crate::rootdata::RootSystem;
use crate::scalars::{rat, LaurentPolynomial};

/// The space on which the group acts as a reflection group, given by a basis
/// of lattice vectors (simple-root coordinates) spanning a `W`-stable
/// subspace, and for each basis vector a coordinate where it is the only
/// basis vector with nonzero entry (value 1).
#[derive(Clone, Debug)]
pub struct ReflectionSpace {
    pub basis: Vec<Vec<i32>>,
    pub pivots: Vec<usize>,
}

impl ReflectionSpace {
    /// The full root lattice, basis `α_1, …, α_6`.
    pub fn full(rank: usize) -> Self {
        Self {
            basis: (0..rank).map(|i| (0..rank).map(|j| i32::from(i == j)).collect()).collect(),
            pivots: (0..rank).collect(),
        }
    }

    /// The †-fixed subspace, basis `α_2, α_4, α_3+α_5, α_1+α_6`.
    pub fn folded() -> Self {
        Self {
            basis: vec![vec![0, 1, 0, 0, 0, 0], vec![0, 0, 0, 1, 0, 0], vec![0, 0, 1, 0, 1, 0], vec![1, 0, 0, 0, 0, 1]],
            pivots: vec![1, 3, 2, 0],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of `w` in this basis: column `j` holds the coordinates of
    /// `w(basis_j)`.
    pub fn matrix(&self, rs: &RootSystem, w: &WeylElement) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut m = vec![vec![0i64; n]; n];
        for (j, v) in self.basis.iter().enumerate() {
            let mut image = vec![0i64; rs.rank()];
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    for (t, &x) in rs.coords(w.apply(rs.simple(k))).iter().enumerate() {
                        image[t] += c as i64 * x as i64;
                    }
                }
            }
            for (i, &p) in self.pivots.iter().enumerate() {
                m[i][j] = image[p];
            }
        }
        m
    }
}

/// Fake degrees of every character together with the degrees of the group.
#[derive(Clone, Debug)]
pub struct FakeDegreeTable {
    pub polys: Vec<LaurentPolynomial>,
    pub b: Vec<i32>,
    pub degrees: Vec<usize>,
}

/// `det(1 − q M)` for an integer matrix, via Faddeev–LeVerrier.
pub fn det_one_minus_q(m: &[Vec<i64>]) -> LaurentPolynomial {
    let n = m.len();
    // c[k] = coefficient of x^k in det(x − M)
    let mut c = vec![0i64; n + 1];
    c[n] = 1;
    let mut mk = vec![vec![0i64; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| m[i][l] * mk[l][j]).sum();
            }
            next[i][i] += c[n - k + 1];
        }
        mk = next;
        let tr: i64 = (0..n).map(|i| (0..n).map(|l| m[i][l] * mk[l][i]).sum::<i64>()).sum();
        c[n - k] = -tr / k as i64;
    }
    LaurentPolynomial::from_terms((0..=n).map(|k| (rat(c[k]), (n - k) as i32)))
}

pub fn cyclotomic(n: usize, cache: &mut Vec<LaurentPolynomial>) -> LaurentPolynomial {
    while cache.len() <= n {
        let m = cache.len();
        let p = if m == 0 {
            LaurentPolynomial::one()
        } else {
            let mut p = &LaurentPolynomial::term(1, m as i32) - &LaurentPolynomial::one();
            for d in 1..m {
                if m.is_multiple_of(d) {
                    p = p.div_exact(&cache[d]).expect("cyclotomic divisibility");
                }
            }
            p
        };
        cache.push(p);
    }
    cache[n].clone()
}

/// Multiplicities of `Φ_k` in `p`, `k ≤ bound`; the cofactor must be a unit.
fn cyclotomic_factorization(
    p: &LaurentPolynomial,
    bound: usize,
    cache: &mut Vec<LaurentPolynomial>,
) -> Result<Vec<usize>> {
    let mut rest = p.clone();
    let mut mult = vec![0usize; bound + 1];
    for (k, m) in mult.iter_mut().enumerate().skip(1) {
        let phi = cyclotomic(k, cache);
        while let Some(qt) = rest.div_exact(&phi) {
            rest = qt;
            *m += 1;
        }
    }
    match rest.as_monomial() {
        Some((c, 0)) if c.is_integer() && (c.to_integer() == 1.into() || c.to_integer() == (-1).into()) => Ok(mult),
        _ => Err(Error::Consistency(format!("{p} is not a product of cyclotomic polynomials Φ_k, k ≤ {bound}"))),
    }
}

pub fn poincare_polynomial(g: &FiniteCoxeterGroup) -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for &l in g.lengths() {
        p.add_term(l as i32, rat(1));
    }
    p
}

/// Degrees `d_i` from `Σ q^{ℓ(w)} = Π (q^{d_i} − 1)/(q − 1)`.
pub fn degrees_from_poincare(g: &FiniteCoxeterGroup) -> Result<Vec<usize>> {
    let p = poincare_polynomial(g);
    let bound = g.max_length() + 1;
    let mut cache = Vec::new();
    let mut mult = cyclotomic_factorization(&p, bound, &mut cache)?;
    let mut degrees = Vec::new();
    while let Some(k) = (2..=bound).rev().find(|&k| mult[k] > 0) {
        for j in 2..=k {
            if k % j == 0 {
                if mult[j] == 0 {
                    return Err(Error::Consistency("Poincaré polynomial has no product-of-degrees form".into()));
                }
                mult[j] -= 1;
            }
        }
        degrees.push(k);
    }
    degrees.sort_unstable();
    let mut check = LaurentPolynomial::one();
    for &d in &degrees {
        let num = &LaurentPolynomial::term(1, d as i32) - &LaurentPolynomial::one();
        let den = &LaurentPolynomial::q() - &LaurentPolynomial::one();
        check = &check * &num.div_exact(&den).unwrap();
    }
    if check != p || degrees.len() != g.rank() {
        return Err(Error::Consistency("degrees do not reproduce the Poincaré polynomial".into()));
    }
    Ok(degrees)
}

/// Fake degrees by Molien's formula
/// `f_φ(q) = Π(1 − q^{d_i}) · |W|⁻¹ Σ_C |C| φ(w_C) / det(1 − q w_C)`.
pub fn fake_degrees(
    rs: &RootSystem,
    g: &FiniteCoxeterGroup,
    cl: &ConjClassSet,
    values: &[Vec<i64>],
    space: &ReflectionSpace,
) -> Result<FakeDegreeTable> {
    let degrees = degrees_from_poincare(g)?;
    let bound = cl.orders.iter().copied().max().unwrap_or(1);
    let mut cache = Vec::new();
    let dets: Vec<LaurentPolynomial> =
        cl.reps.iter().map(|&w| det_one_minus_q(&space.matrix(rs, g.element(w)))).collect();
    let facts = dets.iter().map(|d| cyclotomic_factorization(d, bound, &mut cache)).collect::<Result<Vec<_>>>()?;
    let mut common = LaurentPolynomial::one();
    for k in 1..=bound {
        let m = facts.iter().map(|f| f[k]).max().unwrap_or(0);
        common = &common * &cyclotomic(k, &mut cache).pow(m as u32);
    }
    let cofactors: Vec<LaurentPolynomial> =
        dets.iter().map(|d| common.div_exact(d).expect("common denominator")).collect();
    let mut invariant = LaurentPolynomial::one();
    for &d in &degrees {
        invariant = &invariant * &(&LaurentPolynomial::one() - &LaurentPolynomial::term(1, d as i32));
    }
    let order = rat(g.order() as i64);
    let mut polys = Vec::with_capacity(values.len());
    let mut b = Vec::with_capacity(values.len());
    for row in values {
        let mut num = LaurentPolynomial::zero();
        for (k, cof) in cofactors.iter().enumerate() {
            num.add_scaled(cof, &rat(cl.sizes[k] as i64 * row[k]), 0);
        }
        let f = (&invariant * &num)
            .div_exact(&common)
            .ok_or_else(|| Error::Consistency("Molien sum is not a polynomial".into()))?
            .scale(&(rat(1) / &order));
        if !f.is_integral() || !f.is_polynomial() || f.is_zero() {
            return Err(Error::Consistency(format!("fake degree {f} is not an integral polynomial")));
        }
        if f.at_one() != rat(row[0]) {
            return Err(Error::Consistency(format!("fake degree {f} does not specialize to the dimension {}", row[0])));
        }
        b.push(f.valuation().unwrap());
        polys.push(f);
    }
    Ok(FakeDegreeTable { polys, b, degrees })
}
