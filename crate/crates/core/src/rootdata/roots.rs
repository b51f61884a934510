use std::collections::{BTreeSet, HashMap};

use super::cartan::CartanMatrix;
use crate::error::{Error, Result};

/// A root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<i32>,
    pub height: i32,
    pub index: usize,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.height > 0
    }
}

/// All roots of a finite root system. Positive roots come first, ordered by
/// height and then by descending coordinate vector (so the simple roots sit
/// at indices `0..rank` in diagram order); the negative of root `i` is root
/// `i + n_pos`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanMatrix,
    roots: Vec<Root>,
    lookup: HashMap<Vec<i32>, usize>,
    n_pos: usize,
}

const DEFAULT_HEIGHT_BOUND: i64 = 256;

pub fn generate_root_system(cartan: &CartanMatrix) -> Result<RootSystem> {
    generate_root_system_bounded(cartan, DEFAULT_HEIGHT_BOUND)
}

/// Closes the simple roots under the simple reflections. Fails if some root
/// exceeds `height_bound`, which happens for Cartan matrices that are not of
/// finite type.
pub fn generate_root_system_bounded(cartan: &CartanMatrix, height_bound: i64) -> Result<RootSystem> {
    let n = cartan.rank();
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i32>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i32; n];
        v[i] = 1;
        seen.insert(v.clone());
        frontier.push(v);
    }
    while let Some(beta) = frontier.pop() {
        for i in 0..n {
            let p = cartan.pairing(&beta, i);
            if p == 0 {
                continue;
            }
            let mut image = beta.clone();
            image[i] -= p as i32;
            let h: i64 = image.iter().map(|&x| x as i64).sum();
            if h.abs() > height_bound {
                return Err(Error::NotFiniteType { bound: height_bound });
            }
            let pos = image.iter().all(|&x| x >= 0);
            let neg = image.iter().all(|&x| x <= 0);
            if !pos && !neg {
                return Err(Error::Consistency(format!("mixed-sign root {:?}", image)));
            }
            if seen.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    let mut positive: Vec<Vec<i32>> = seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    positive.sort_by(|a, b| {
        let ha: i32 = a.iter().sum();
        let hb: i32 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let n_pos = positive.len();
    let mut roots = Vec::with_capacity(2 * n_pos);
    for (i, c) in positive.iter().enumerate() {
        roots.push(Root { coords: c.clone(), height: c.iter().sum(), index: i });
    }
    for (i, c) in positive.iter().enumerate() {
        let neg: Vec<i32> = c.iter().map(|x| -x).collect();
        let height = neg.iter().sum();
        roots.push(Root { coords: neg, height, index: n_pos + i });
    }
    let lookup = roots.iter().map(|r| (r.coords.clone(), r.index)).collect();
    Ok(RootSystem { cartan: cartan.clone(), roots, lookup, n_pos })
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn n_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn coords(&self, i: usize) -> &[i32] {
        &self.roots[i].coords
    }

    pub fn height(&self, i: usize) -> i32 {
        self.roots[i].height
    }

    pub fn index_of(&self, coords: &[i32]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// Index of the simple root `α_{k+1}` (0-based `k`).
    pub fn simple(&self, k: usize) -> usize {
        let mut v = vec![0i32; self.rank()];
        v[k] = 1;
        self.lookup[&v]
    }

    /// Index of `root_i + root_j` if that is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        let v: Vec<i32> = self.coords(i).iter().zip(self.coords(j)).map(|(a, b)| a + b).collect();
        self.index_of(&v)
    }

    /// `<root_i, α_k^∨>`.
    pub fn pairing(&self, i: usize, k: usize) -> i64 {
        self.cartan.pairing(self.coords(i), k)
    }

    /// Image of root `i` under the simple reflection `s_{k+1}`.
    pub fn reflect(&self, i: usize, k: usize) -> usize {
        let p = self.pairing(i, k) as i32;
        let mut v = self.coords(i).to_vec();
        v[k] -= p;
        self.lookup[&v]
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.n_pos - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::cartan::build_cartan_e6;

    #[test]
    fn e6_counts() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        assert_eq!(rs.len(), 72);
        assert_eq!(rs.n_positive(), 36);
        let hr = rs.highest_root();
        assert_eq!(hr.coords, vec![1, 2, 2, 3, 2, 1]);
        assert_eq!(hr.height, 11);
    }

    #[test]
    fn simple_roots_first_in_order() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        for k in 0..6 {
            assert_eq!(rs.simple(k), k);
        }
    }

    #[test]
    fn adjacency_sums() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        assert!(rs.sum(rs.simple(0), rs.simple(2)).is_some());
        assert!(rs.sum(rs.simple(0), rs.simple(1)).is_none());
    }

    #[test]
    fn closed_under_negation_and_sorted() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        for r in rs.roots() {
            let neg: Vec<i32> = r.coords.iter().map(|x| -x).collect();
            assert_eq!(rs.index_of(&neg), Some(rs.negate(r.index)));
            assert!(r.coords.iter().all(|&x| x >= 0) || r.coords.iter().all(|&x| x <= 0));
        }
        for w in rs.roots()[..36].windows(2) {
            assert!(w[0].height <= w[1].height);
        }
    }

    #[test]
    fn affine_matrix_diverges() {
        // Affine Ã2: every pair joined.
        let c = CartanMatrix::simply_laced(3, &[(1, 2), (2, 3), (1, 3)]);
        assert!(matches!(generate_root_system_bounded(&c, 40), Err(Error::NotFiniteType { .. })));
    }

    #[test]
    fn a2_has_six_roots() {
        let c = CartanMatrix::simply_laced(2, &[(1, 2)]);
        let rs = generate_root_system(&c).unwrap();
        assert_eq!(rs.len(), 6);
    }
}
