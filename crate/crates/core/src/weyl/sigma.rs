use super::element::WeylElement;
use super::group::{CoxeterSystem, FiniteCoxeterGroup};
use crate::error::{Error, Result};
use crate::rootdata::RootSystem;
use crate::Case;

/// The Coxeter matrix of F4 for the generator order `s2, s4, s3s5, s1s6`.
pub const F4_COXETER_MATRIX: [[usize; 4]; 4] = [[1, 3, 2, 2], [3, 1, 4, 2], [2, 4, 1, 3], [2, 2, 3, 1]];

/// Generators of `W^σ` as 0-based words in the simple reflections of W:
/// `s2, s4, s3s5, s1s6` in the twisted case.
pub fn sigma_generator_words(case: Case) -> Vec<Vec<usize>> {
    match case {
        Case::Untwisted => (0..6).map(|k| vec![k]).collect(),
        Case::Twisted => vec![vec![1], vec![3], vec![2, 4], vec![0, 5]],
    }
}

pub fn e6_coxeter_system(rs: &RootSystem) -> Result<CoxeterSystem> {
    CoxeterSystem::new((0..rs.rank()).map(|k| WeylElement::simple_reflection(rs, k)).collect())
}

/// `(W^σ, S_σ)`; in the twisted case the Coxeter matrix must be that of F4.
pub fn sigma_setup(rs: &RootSystem, case: Case) -> Result<CoxeterSystem> {
    let s: Vec<WeylElement> = (0..rs.rank()).map(|k| WeylElement::simple_reflection(rs, k)).collect();
    let gens = sigma_generator_words(case)
        .into_iter()
        .map(|w| w.iter().fold(WeylElement::identity(), |acc, &k| acc.compose(&s[k])))
        .collect();
    let cs = CoxeterSystem::new(gens)?;
    if case == Case::Twisted {
        let expected: Vec<Vec<usize>> = F4_COXETER_MATRIX.iter().map(|r| r.to_vec()).collect();
        if cs.coxeter_matrix != expected {
            return Err(Error::Consistency(format!(
                "S_σ does not have the F4 Coxeter matrix: got {:?}",
                cs.coxeter_matrix
            )));
        }
    }
    Ok(cs)
}

/// `σ(w)` for the given case: identity, or conjugation by `w0`.
pub fn sigma_apply(w: &WeylElement, w0: &WeylElement, case: Case) -> WeylElement {
    match case {
        Case::Untwisted => *w,
        Case::Twisted => w0.compose(w).compose(w0),
    }
}

/// Counts σ-fixed elements of W and checks each lies in `sub`.
pub fn check_fixed_points(w: &FiniteCoxeterGroup, sub: &FiniteCoxeterGroup, case: Case) -> Result<usize> {
    let w0 = *w.element(w.longest_element());
    let mut fixed = 0;
    for x in w.elements() {
        if sigma_apply(x, &w0, case) == *x {
            fixed += 1;
            if sub.index_of(x).is_none() {
                return Err(Error::Consistency("σ-fixed element outside the subgroup generated by S_σ".into()));
            }
        }
    }
    if fixed != sub.order() {
        return Err(Error::Consistency(format!("{fixed} σ-fixed elements but |⟨S_σ⟩| = {}", sub.order())));
    }
    for x in sub.elements() {
        if sigma_apply(x, &w0, case) != *x {
            return Err(Error::Consistency("a generator product is not σ-fixed".into()));
        }
    }
    Ok(fixed)
}

/// The Coxeter element as a 0-based word in `S_σ`: `s1 s2 s3 s4 s5 s6`, or
/// `s2 s4 (s3s5)(s1s6)`.
pub fn coxeter_word(case: Case) -> Vec<usize> {
    match case {
        Case::Untwisted => (0..6).collect(),
        Case::Twisted => (0..4).collect(),
    }
}

pub fn coxeter_element(group: &FiniteCoxeterGroup, case: Case) -> usize {
    group.word_index(&coxeter_word(case))
}
