use std::fmt;

/// A square integer matrix with `C[i][j] = <α_j, α_i^∨>`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

/// Edges of the E6 Dynkin diagram: α1−α3−α4−α5−α6 with α2 attached to α4.
pub const E6_EDGES: [(usize, usize); 5] = [(1, 3), (3, 4), (4, 5), (4, 2), (5, 6)];

impl CartanMatrix {
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Self {
        Self { entries }
    }

    /// Simply-laced Cartan matrix from a list of 1-based diagram edges.
    pub fn simply_laced(rank: usize, edges: &[(usize, usize)]) -> Self {
        let mut m = vec![vec![0i64; rank]; rank];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in edges {
            m[a - 1][b - 1] = -1;
            m[b - 1][a - 1] = -1;
        }
        Self { entries: m }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Entry with 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i64 {
        determinant(&self.entries)
    }

    /// `<β, α_i^∨>` for `β` given in simple-root coordinates.
    pub fn pairing(&self, beta: &[i32], i: usize) -> i64 {
        self.entries[i].iter().zip(beta).map(|(c, b)| c * *b as i64).sum()
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CartanMatrix[")?;
        for row in &self.entries {
            writeln!(f, "  {:?}", row)?;
        }
        write!(f, "]")
    }
}

pub fn build_cartan_e6() -> CartanMatrix {
    CartanMatrix::simply_laced(6, &E6_EDGES)
}

pub(crate) fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
