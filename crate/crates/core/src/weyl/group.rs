use std::collections::{HashMap, VecDeque};

use super::element::WeylElement;
use crate::error::{Error, Result};

/// Generators of a finite Coxeter group acting on the roots, together with
/// the matrix of pairwise orders `m(s, t)`.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    pub generators: Vec<WeylElement>,
    pub coxeter_matrix: Vec<Vec<usize>>,
}

impl CoxeterSystem {
    pub fn new(generators: Vec<WeylElement>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.is_identity() || !g.compose(g).is_identity() {
                return Err(Error::Consistency(format!("generator {} is not an involution", i + 1)));
            }
        }
        let coxeter_matrix =
            generators.iter().map(|a| generators.iter().map(|b| a.compose(b).order()).collect()).collect();
        Ok(Self { generators, coxeter_matrix })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Product of generators along a 0-based word.
    pub fn word_element(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(WeylElement::identity(), |acc, &s| acc.compose(&self.generators[s]))
    }
}

/// A fully enumerated finite Coxeter group. Elements are numbered in
/// breadth-first order from the identity, so element 0 is the identity and
/// lengths are breadth-first distances.
#[derive(Clone, Debug)]
pub struct FiniteCoxeterGroup {
    system: CoxeterSystem,
    elements: Vec<WeylElement>,
    index: HashMap<u64, u32>,
    length: Vec<u16>,
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
}

pub const DEFAULT_ORDER_BOUND: usize = 1_000_000;

pub fn group_enumerate(system: &CoxeterSystem) -> Result<FiniteCoxeterGroup> {
    group_enumerate_bounded(system, DEFAULT_ORDER_BOUND)
}

pub fn group_enumerate_bounded(system: &CoxeterSystem, bound: usize) -> Result<FiniteCoxeterGroup> {
    let r = system.rank();
    let id = WeylElement::identity();
    let mut elements = vec![id];
    let mut index = HashMap::new();
    index.insert(id.key(), 0u32);
    let mut length = vec![0u16];
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); r];
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        for (s, g) in system.generators.iter().enumerate() {
            let x = elements[w].compose(g);
            let next = elements.len() as u32;
            let j = *index.entry(x.key()).or_insert_with(|| {
                elements.push(x);
                length.push(length[w] + 1);
                queue.push_back(next as usize);
                next
            });
            if elements.len() > bound {
                return Err(Error::GroupTooLarge { bound });
            }
            if right[s].len() <= w {
                right[s].resize(w + 1, u32::MAX);
            }
            right[s][w] = j;
        }
    }
    let n = elements.len();
    let left =
        system.generators.iter().map(|g| (0..n).map(|w| index[&g.compose(&elements[w]).key()]).collect()).collect();
    Ok(FiniteCoxeterGroup { system: system.clone(), elements, index, length, left, right })
}

impl FiniteCoxeterGroup {
    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.key()).map(|&i| i as usize)
    }

    pub fn length(&self, i: usize) -> usize {
        self.length[i] as usize
    }

    /// Index of `s * w` for generator `s` (0-based).
    pub fn left_mul(&self, s: usize, w: usize) -> usize {
        self.left[s][w] as usize
    }

    /// Index of `w * s`.
    pub fn right_mul(&self, w: usize, s: usize) -> usize {
        self.right[s][w] as usize
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.elements[a].compose(&self.elements[b])).expect("closed under products")
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index_of(&self.elements[a].inverse()).expect("closed under inverses")
    }

    pub fn word_index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |w, &s| self.right_mul(w, s))
    }

    /// Leftmost-descent reduced word: repeatedly strip the first generator `s`
    /// with `ℓ(s w) < ℓ(w)`.
    pub fn reduced_word(&self, mut w: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        while w != 0 {
            let s = (0..self.rank())
                .find(|&s| self.length(self.left_mul(s, w)) < self.length(w))
                .expect("nonidentity element has a left descent");
            word.push(s);
            w = self.left_mul(s, w);
        }
        word
    }

    /// The unique element of maximal length.
    pub fn longest_element(&self) -> usize {
        // Breadth-first order puts it last.
        self.elements.len() - 1
    }

    pub fn max_length(&self) -> usize {
        self.length(self.longest_element())
    }

    pub fn lengths(&self) -> &[u16] {
        &self.length
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_cartan_e6, generate_root_system};

    #[test]
    fn single_generator_group() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let cs = CoxeterSystem::new(vec![WeylElement::simple_reflection(&rs, 0)]).unwrap();
        let g = group_enumerate(&cs).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.max_length(), 1);
    }

    #[test]
    fn a2_parabolic() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let cs =
            CoxeterSystem::new(vec![WeylElement::simple_reflection(&rs, 0), WeylElement::simple_reflection(&rs, 2)])
                .unwrap();
        assert_eq!(cs.coxeter_matrix, vec![vec![1, 3], vec![3, 1]]);
        let g = group_enumerate(&cs).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.max_length(), 3);
        assert_eq!(g.reduced_word(g.longest_element()).len(), 3);
    }

    #[test]
    fn order_bound_guard() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let cs = CoxeterSystem::new((0..6).map(|k| WeylElement::simple_reflection(&rs, k)).collect()).unwrap();
        assert!(matches!(group_enumerate_bounded(&cs, 1000), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn non_involution_rejected() {
        let rs = generate_root_system(&build_cartan_e6()).unwrap();
        let s1 = WeylElement::simple_reflection(&rs, 0);
        let s3 = WeylElement::simple_reflection(&rs, 2);
        assert!(CoxeterSystem::new(vec![s1.compose(&s3)]).is_err());
    }
}
