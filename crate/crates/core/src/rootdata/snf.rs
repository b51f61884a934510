/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: Vec<Vec<i64>>,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<i64> {
        let k = self.d.len().min(self.d.first().map_or(0, Vec::len));
        (0..k).map(|i| self.d[i][i]).collect()
    }

    /// The invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<i64> {
        self.diagonal().into_iter().filter(|&x| x != 1).collect()
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

fn to_i64(m: Vec<Vec<i128>>) -> Vec<Vec<i64>> {
    m.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("Smith form entry overflow")).collect())
        .collect()
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithDecomposition {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u = identity(rows);
    let mut v = identity(cols);

    let row_add = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, k: i128| {
        for j in 0..a[0].len() {
            a[dst][j] += k * a[src][j];
        }
        for j in 0..u[0].len() {
            u[dst][j] += k * u[src][j];
        }
    };
    let col_add = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, k: i128| {
        for row in a.iter_mut() {
            row[dst] += k * row[src];
        }
        for row in v.iter_mut() {
            row[dst] += k * row[src];
        }
    };

    for t in 0..rows.min(cols) {
        loop {
            // Pivot: smallest nonzero absolute value in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithDecomposition { d: to_i64(a), u: to_i64(u), v: to_i64(v) };
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let qt = a[i][t].div_euclid(p);
                if qt != 0 {
                    row_add(&mut a, &mut u, i, t, -qt);
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let qt = a[t][j].div_euclid(p);
                if qt != 0 {
                    col_add(&mut a, &mut v, j, t, -qt);
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => row_add(&mut a, &mut u, t, i, 1),
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in 0..cols {
                a[t][j] = -a[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
    }
    SmithDecomposition { d: to_i64(a), u: to_i64(u), v: to_i64(v) }
}
