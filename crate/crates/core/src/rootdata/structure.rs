use super::roots::RootSystem;
use crate::error::{Error, Result};

/// Signs `N(α, β)` with `[e_α, e_β] = N(α, β) e_{α+β}` in a Chevalley basis,
/// defined exactly when `α + β` is a root.
///
/// Convention: `[e_α, e_{-α}] = h_α`, `N(-α,-β) = -N(α,β)`, and `N(α,β) = +1`
/// on every extraspecial pair, where the extraspecial pair of a non-simple
/// positive root `γ` is the pair `(α, β)`, `α + β = γ`, `α < β` in root
/// order, with `α` minimal.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    n: usize,
    table: Vec<i8>,
}

impl StructureConstants {
    pub fn get(&self, a: usize, b: usize) -> Option<i8> {
        match self.table[a * self.n + b] {
            0 => None,
            s => Some(s),
        }
    }

    /// Number of ordered pairs with a defined constant.
    pub fn num_defined(&self) -> usize {
        self.table.iter().filter(|&&s| s != 0).count()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// Bimultiplicative sign cocycle on the root lattice of a simply-laced
/// diagram: `ε(α_i, α_i) = -1`, `ε(α_i, α_j) = (-1)^{C_ij}` for `i < j`,
/// `1` for `i > j`.
fn cocycle(rs: &RootSystem, a: &[i32], b: &[i32]) -> i8 {
    let c = rs.cartan();
    let n = rs.rank();
    let mut exp = 0i64;
    for i in 0..n {
        exp += (a[i] * b[i]) as i64;
        for j in i + 1..n {
            if c.get(i, j) != 0 {
                exp += (a[i] * b[j]) as i64 * c.get(i, j);
            }
        }
    }
    if exp.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// The extraspecial pair `(α, β)` of a non-simple positive root `γ`.
pub fn extraspecial_pair(rs: &RootSystem, gamma: usize) -> Option<(usize, usize)> {
    (0..gamma).find_map(|a| {
        let d: Vec<i32> = rs.coords(gamma).iter().zip(rs.coords(a)).map(|(g, x)| g - x).collect();
        let b = rs.index_of(&d)?;
        (rs.is_positive(b) && a < b).then_some((a, b))
    })
}

pub fn structure_constants(rs: &RootSystem) -> Result<StructureConstants> {
    if !rs.cartan().is_symmetric() {
        return Err(Error::Domain("structure constants are implemented for simply-laced systems only".into()));
    }
    let n = rs.len();
    // Frenkel–Kac basis E_ρ, then e_ρ = E_ρ (ρ > 0), e_ρ = -E_ρ (ρ < 0) so that
    // [e_α, e_{-α}] = h_α.
    let s = |i: usize| if rs.is_positive(i) { 1i8 } else { -1 };
    let mut raw = vec![0i8; n * n];
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = rs.sum(a, b) {
                raw[a * n + b] = s(a) * s(b) * s(c) * cocycle(rs, rs.coords(a), rs.coords(b));
            }
        }
    }
    // Rescale e_γ, e_{-γ} by c_γ = ±1 to make extraspecial pairs +1.
    let npos = rs.n_positive();
    let mut scale = vec![1i8; n];
    for g in 0..npos {
        if let Some((a, b)) = extraspecial_pair(rs, g) {
            scale[g] = scale[a] * scale[b] * raw[a * n + b];
            scale[rs.negate(g)] = scale[g];
        }
    }
    let mut table = vec![0i8; n * n];
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = rs.sum(a, b) {
                table[a * n + b] = scale[a] * scale[b] * scale[c] * raw[a * n + b];
            }
        }
    }
    Ok(StructureConstants { n, table })
}

/// The diagram automorphism `α ↦ α†` extended linearly to all roots, as a
/// permutation of root indices. The twisted flavor swaps α1↔α6, α3↔α5.
pub fn dagger_permutation(rs: &RootSystem, twisted: bool) -> Vec<usize> {
    if !twisted {
        return (0..rs.len()).collect();
    }
    const SWAP: [usize; 6] = [5, 1, 4, 3, 2, 0];
    rs.roots()
        .iter()
        .map(|r| {
            let mut v = vec![0i32; 6];
            for (i, &x) in r.coords.iter().enumerate() {
                v[SWAP[i]] = x;
            }
            rs.index_of(&v).expect("dagger maps roots to roots")
        })
        .collect()
}

/// Signs `γ_α` with `τ(e_α) = γ_α e_{α†}` for the Lie algebra automorphism `τ`
/// fixing `e_{±α_i} ↦ e_{±α_i†}`. These give the action of a twisted Frobenius
/// on root subgroups: `x_α(c) ↦ x_{α†}(γ_α c^q)`.
pub fn graph_signs(rs: &RootSystem, nc: &StructureConstants, dagger: &[usize]) -> Result<Vec<i8>> {
    let n = rs.len();
    let mut gamma = vec![0i8; n];
    for k in 0..rs.rank() {
        gamma[rs.simple(k)] = 1;
        gamma[rs.negate(rs.simple(k))] = 1;
    }
    // Build up by height on both halves; e_{α+β} = N(α,β) [e_α, e_β].
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| rs.height(i).abs());
    for &g in &order {
        if gamma[g] != 0 {
            continue;
        }
        let (a, b) = (0..n)
            .filter(|&a| gamma[a] != 0 && rs.height(a).signum() == rs.height(g).signum())
            .find_map(|a| {
                let d: Vec<i32> = rs.coords(g).iter().zip(rs.coords(a)).map(|(x, y)| x - y).collect();
                rs.index_of(&d).filter(|&b| gamma[b] != 0).map(|b| (a, b))
            })
            .ok_or_else(|| Error::Consistency(format!("no decomposition for root {g}")))?;
        let lhs = nc.get(a, b).unwrap();
        let rhs = nc.get(dagger[a], dagger[b]).unwrap();
        gamma[g] = gamma[a] * gamma[b] * lhs * rhs;
    }
    // τ must respect every bracket.
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = rs.sum(a, b) {
                let lhs = gamma[a] * gamma[b] * nc.get(dagger[a], dagger[b]).unwrap();
                let rhs = nc.get(a, b).unwrap() * gamma[c];
                if lhs != rhs {
                    return Err(Error::Consistency(format!("graph automorphism sign clash at ({a},{b})")));
                }
            }
        }
    }
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_cartan_e6, generate_root_system};

    fn e6() -> (RootSystem, StructureConstants) {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let nc = structure_constants(&rs).unwrap();
        (rs, nc)
    }

    #[test]
    fn defined_exactly_on_root_sums() {
        let (rs, nc) = e6();
        for a in 0..72 {
            for b in 0..72 {
                assert_eq!(nc.get(a, b).is_some(), rs.sum(a, b).is_some());
            }
        }
        assert_eq!(nc.get(0, 2), Some(1));
        assert_eq!(nc.get(0, 1), None);
    }

    #[test]
    fn antisymmetry_and_negation() {
        let (rs, nc) = e6();
        for a in 0..72 {
            for b in 0..72 {
                if let Some(s) = nc.get(a, b) {
                    assert_eq!(nc.get(b, a), Some(-s));
                    assert_eq!(nc.get(rs.negate(a), rs.negate(b)), Some(-s));
                }
            }
        }
    }

    #[test]
    fn extraspecial_pairs_are_positive() {
        let (rs, nc) = e6();
        for g in 6..36 {
            let (a, b) = extraspecial_pair(&rs, g).unwrap();
            assert_eq!(nc.get(a, b), Some(1), "root {g}");
        }
        for g in 0..6 {
            assert!(extraspecial_pair(&rs, g).is_none());
        }
    }

    /// N(α,β)/(γ,γ)-style cyclic identity for α+β+γ = 0 in the simply-laced case:
    /// N(α,β) = N(β,γ) = N(γ,α).
    #[test]
    fn cyclic_identity() {
        let (rs, nc) = e6();
        for a in 0..72 {
            for b in 0..72 {
                if let Some(c) = rs.sum(a, b) {
                    let g = rs.negate(c);
                    let x = nc.get(a, b).unwrap();
                    assert_eq!(nc.get(b, g), Some(x));
                    assert_eq!(nc.get(g, a), Some(x));
                }
            }
        }
    }

    #[test]
    fn dagger_properties() {
        let (rs, nc) = e6();
        let d = dagger_permutation(&rs, true);
        assert_eq!(d[rs.simple(0)], rs.simple(5));
        assert_eq!(d[rs.simple(2)], rs.simple(4));
        assert_eq!(d[rs.simple(1)], rs.simple(1));
        assert_eq!(d[rs.simple(3)], rs.simple(3));
        assert_eq!(d[35], 35);
        for i in 0..72 {
            assert_eq!(d[d[i]], i);
        }
        let c = rs.cartan();
        let swap = [5usize, 1, 4, 3, 2, 0];
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(c.get(swap[i], swap[j]), c.get(i, j));
            }
        }
        let id = dagger_permutation(&rs, false);
        assert!(id.iter().enumerate().all(|(i, &x)| i == x));
        let g = graph_signs(&rs, &nc, &d).unwrap();
        assert!(g.iter().all(|&s| s == 1 || s == -1));
    }
}
