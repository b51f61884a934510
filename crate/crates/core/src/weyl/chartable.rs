//! Exact integer character tables by the Dixon–Schneider class-matrix method
//! over the prime field `𝔽_p`, `p = 2³¹ − 1`, followed by a lift to ℤ.

use rayon::prelude::*;

use super::classes::ConjClassSet;
use super::group::FiniteCoxeterGroup;
use crate::error::{Error, Result};

const P: u64 = 2_147_483_647;

fn mul(a: u64, b: u64) -> u64 {
    a * b % P
}

fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn from_i64(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

fn to_symmetric(x: u64) -> i64 {
    if x > P / 2 {
        x as i64 - P as i64
    } else {
        x as i64
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<u64>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let iv = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = mul(*x, iv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = sub(m[i][j], mul(f, m[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Basis of the null space of `m` (column vectors).
fn null_space(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = sub(0, a[r][free]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(x − A)` by Faddeev–LeVerrier; coefficient
/// `k` is that of `x^k`.
fn char_poly(a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let prev_c = coeffs[n - k + 1];
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u64;
                for l in 0..n {
                    s = add(s, mul(a[i][l], m[l][j]));
                }
                next[i][j] = s;
            }
            next[i][i] = add(next[i][i], prev_c);
        }
        m = next;
        let mut tr = 0u64;
        for i in 0..n {
            let mut s = 0u64;
            for l in 0..n {
                s = add(s, mul(a[i][l], m[l][i]));
            }
            tr = add(tr, s);
        }
        coeffs[n - k] = sub(0, mul(tr, inv(k as u64)));
    }
    coeffs
}

fn eval_poly(c: &[u64], x: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| add(mul(acc, x), a))
}

/// Class structure constants `a[i][j][k] = #{x ∈ C_i : x⁻¹ g_k ∈ C_j}`.
fn class_constants(g: &FiniteCoxeterGroup, cl: &ConjClassSet) -> Vec<Vec<Vec<u64>>> {
    let r = cl.len();
    let inverses: Vec<usize> = (0..g.order()).into_par_iter().map(|x| g.inverse(x)).collect();
    let per_k: Vec<Vec<Vec<u64>>> = (0..r)
        .into_par_iter()
        .map(|k| {
            let gk = g.element(cl.reps[k]);
            let mut counts = vec![vec![0u64; r]; r];
            for x in 0..g.order() {
                let y = g.element(inverses[x]).compose(gk);
                let j = cl.class_of(g.index_of(&y).expect("closed"));
                counts[cl.class_of(x)][j] += 1;
            }
            counts
        })
        .collect();
    (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| per_k[k][i][j]).collect()).collect()).collect()
}

/// Integer character table. `values[c][k]` is character `c` on class `k`.
pub fn compute_character_values(g: &FiniteCoxeterGroup, cl: &ConjClassSet) -> Result<Vec<Vec<i64>>> {
    let r = cl.len();
    let a = class_constants(g, cl);
    // Joint eigenvectors of M_i = (a[i][j][k])_{j,k}; stored as subspaces in
    // row-reduced form so restrictions can be read off at pivot positions.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect()];
    for i in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mi: Vec<Vec<u64>> = a[i].clone();
        let bound = cl.sizes[i] as i64;
        let mut next = Vec::new();
        for mut basis in spaces {
            let dim = basis.len();
            if dim == 1 {
                next.push(basis);
                continue;
            }
            let pivots = rref(&mut basis);
            // Image of each basis vector under M_i, expressed in the basis.
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| (0..r).map(|j| (0..r).fold(0, |s, k| add(s, mul(mi[j][k], v[k])))).collect())
                .collect();
            // restricted[row][col]: coefficient of basis[row] in M_i basis[col]
            let restricted: Vec<Vec<u64>> =
                (0..dim).map(|row| (0..dim).map(|col| images[col][pivots[row]]).collect()).collect();
            let cp = char_poly(&restricted);
            let mut found = 0;
            for lambda in -bound..=bound {
                let l = from_i64(lambda);
                if eval_poly(&cp, l) != 0 {
                    continue;
                }
                let shifted: Vec<Vec<u64>> = (0..dim)
                    .map(|row| {
                        (0..dim)
                            .map(|col| if row == col { sub(restricted[row][col], l) } else { restricted[row][col] })
                            .collect()
                    })
                    .collect();
                let ns = null_space(&shifted);
                found += ns.len();
                next.push(
                    ns.into_iter()
                        .map(|c| (0..r).map(|k| (0..dim).fold(0, |s, b| add(s, mul(c[b], basis[b][k])))).collect())
                        .collect(),
                );
            }
            if found != dim {
                return Err(Error::Consistency(format!(
                    "class matrix {i} is not diagonalizable with integer eigenvalues on a {dim}-dimensional block"
                )));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Consistency("class matrices do not separate the characters".into()));
    }

    let order = g.order() as u64;
    let inv_class: Vec<usize> = (0..r).map(|k| cl.inverse_class(g, k)).collect();
    let mut table = Vec::with_capacity(r);
    for s in &spaces {
        let v = &s[0];
        let n0 = inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| mul(x, n0)).collect();
        let norm =
            (0..r).fold(0, |acc, k| add(acc, mul(mul(omega[k], omega[inv_class[k]]), inv(cl.sizes[k] as u64 % P))));
        let d2 = mul(order % P, inv(norm));
        let d = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| order.is_multiple_of(d) && d * d % P == d2)
            .ok_or_else(|| Error::Consistency("no integer degree for a character".into()))?;
        let row: Vec<i64> = (0..r).map(|k| to_symmetric(mul(mul(d, omega[k]), inv(cl.sizes[k] as u64 % P)))).collect();
        table.push(row);
    }
    check_orthogonality(&table, &cl.sizes, &inv_class, g.order())?;
    Ok(table)
}

/// Both orthogonality relations over ℤ.
pub fn check_orthogonality(table: &[Vec<i64>], sizes: &[usize], inv_class: &[usize], order: usize) -> Result<()> {
    let r = table.len();
    let order = order as i128;
    for a in 0..r {
        for b in 0..r {
            let s: i128 = (0..r).map(|k| sizes[k] as i128 * table[a][k] as i128 * table[b][inv_class[k]] as i128).sum();
            if s != if a == b { order } else { 0 } {
                return Err(Error::Consistency(format!("row orthogonality fails for characters {a}, {b}")));
            }
        }
    }
    for k in 0..r {
        for l in 0..r {
            let s: i128 = (0..r).map(|c| table[c][k] as i128 * table[c][inv_class[l]] as i128).sum();
            let expect = if k == l { order / sizes[k] as i128 } else { 0 };
            if s != expect {
                return Err(Error::Consistency(format!("column orthogonality fails for classes {k}, {l}")));
            }
        }
    }
    Ok(())
}
