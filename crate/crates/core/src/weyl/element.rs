use std::fmt;
use std::hash::{Hash, Hasher};

use crate::rootdata::RootSystem;

pub const N_ROOTS: usize = 72;
const RANK: usize = 6;

/// An element of W(E6) stored as the permutation it induces on the 72 roots:
/// `perm[i]` is the index of `w(root_i)`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct WeylElement {
    perm: [u8; N_ROOTS],
}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.key());
    }
}

impl WeylElement {
    pub fn identity() -> Self {
        let mut perm = [0u8; N_ROOTS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        Self { perm }
    }

    pub fn from_perm(perm: [u8; N_ROOTS]) -> Self {
        Self { perm }
    }

    /// The simple reflection `s_{k+1}`: `λ ↦ λ − <λ, α_k^∨> α_k`.
    pub fn simple_reflection(rs: &RootSystem, k: usize) -> Self {
        let mut perm = [0u8; N_ROOTS];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = rs.reflect(i, k) as u8;
        }
        Self { perm }
    }

    pub fn perm(&self) -> &[u8; N_ROOTS] {
        &self.perm
    }

    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut perm = [0u8; N_ROOTS];
        for (p, &o) in perm.iter_mut().zip(other.perm.iter()) {
            *p = self.perm[o as usize];
        }
        Self { perm }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = [0u8; N_ROOTS];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p as usize] = i as u8;
        }
        Self { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Canonical key: the images of the six simple roots packed into a `u64`.
    /// A Weyl group element is determined by these images.
    pub fn key(&self) -> u64 {
        self.perm[..RANK].iter().fold(0u64, |acc, &p| (acc << 8) | p as u64)
    }

    pub fn order(&self) -> usize {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity() {
            x = x.compose(self);
            k += 1;
        }
        k
    }

    /// `#{α > 0 : w(α) < 0}`.
    pub fn inversions(&self, rs: &RootSystem) -> usize {
        (0..rs.n_positive()).filter(|&i| !rs.is_positive(self.apply(i))).count()
    }

    /// `w(−α) = −w(α)` for every root.
    pub fn preserves_negation(&self, rs: &RootSystem) -> bool {
        (0..N_ROOTS).all(|i| self.apply(rs.negate(i)) == rs.negate(self.apply(i)))
    }

    /// Matrix of `w` on the root lattice in the simple-root basis: column `j`
    /// holds the coordinates of `w(α_j)`.
    pub fn matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; RANK]; RANK];
        for j in 0..RANK {
            for (i, &c) in rs.coords(self.apply(j)).iter().enumerate() {
                m[i][j] = c as i64;
            }
        }
        m
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({:?})", &self.perm[..RANK])
    }
}
