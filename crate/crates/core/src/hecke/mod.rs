//! The Iwahori–Hecke algebra of `(W^σ, S_σ)` with parameters `q_s`, its
//! one-dimensional representations, and ingestion of character-trace data.

mod data;

use std::collections::BTreeMap;

use rayon::prelude::*;

pub use data::{load_character_data, parse_character_data, render_word, HeckeCharacterData, TraceRow};

use crate::error::{Error, Result};
use crate::scalars::{rat, LaurentPolynomial};
use crate::weyl::{CharLabel, FiniteCoxeterGroup, Tag};
use crate::Case;

/// `Σ_w c_w T_w` with group elements given by their index in the enumerated
/// group.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<usize, LaurentPolynomial>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: usize) -> Self {
        Self::term(w, LaurentPolynomial::one())
    }

    pub fn term(w: usize, c: LaurentPolynomial) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &c);
        h
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPolynomial) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(LaurentPolynomial::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut h = self.clone();
        for (&w, c) in &other.terms {
            h.add_term(w, c);
        }
        h
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut h = self.clone();
        for (&w, c) in &other.terms {
            h.add_term(w, &-c);
        }
        h
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> Self {
        let mut h = Self::zero();
        for (&w, v) in &self.terms {
            h.add_term(w, &(v * c));
        }
        h
    }

    pub fn coeff(&self, w: usize) -> LaurentPolynomial {
        self.terms.get(&w).cloned().unwrap_or_else(LaurentPolynomial::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPolynomial)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `H_σ` over `ℚ[q, q⁻¹]` with basis `T_w`, `w ∈ W^σ`.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra<'a> {
    group: &'a FiniteCoxeterGroup,
    params: Vec<LaurentPolynomial>,
}

/// `q_s` for each generator of `S_σ`: all `q`, or `q, q, q², q²` for
/// `s2, s4, s3s5, s1s6`.
pub fn hecke_parameters(case: Case) -> Vec<LaurentPolynomial> {
    match case {
        Case::Untwisted => vec![LaurentPolynomial::q(); 6],
        Case::Twisted => {
            let q = LaurentPolynomial::q();
            let q2 = LaurentPolynomial::term(1, 2);
            vec![q.clone(), q, q2.clone(), q2]
        }
    }
}

impl<'a> HeckeAlgebra<'a> {
    pub fn new(group: &'a FiniteCoxeterGroup, params: Vec<LaurentPolynomial>) -> Result<Self> {
        if params.len() != group.rank() {
            return Err(Error::Domain(format!("{} parameters for rank {}", params.len(), group.rank())));
        }
        Ok(Self { group, params })
    }

    pub fn for_case(group: &'a FiniteCoxeterGroup, case: Case) -> Result<Self> {
        Self::new(group, hecke_parameters(case))
    }

    pub fn group(&self) -> &FiniteCoxeterGroup {
        self.group
    }

    pub fn param(&self, s: usize) -> &LaurentPolynomial {
        &self.params[s]
    }

    pub fn generator(&self, s: usize) -> HeckeElement {
        HeckeElement::basis(self.group.word_index(&[s]))
    }

    pub fn one(&self) -> HeckeElement {
        HeckeElement::basis(0)
    }

    /// `T_s · h`.
    pub fn left_mul_generator(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let g = self.group;
        let qs = &self.params[s];
        let qs1 = qs - &LaurentPolynomial::one();
        let mut out = HeckeElement::zero();
        for (w, c) in h.terms() {
            let sw = g.left_mul(s, w);
            if g.length(sw) > g.length(w) {
                out.add_term(sw, c);
            } else {
                out.add_term(sw, &(c * qs));
                out.add_term(w, &(c * &qs1));
            }
        }
        out
    }

    /// `h · T_s`.
    pub fn right_mul_generator(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let g = self.group;
        let qs = &self.params[s];
        let qs1 = qs - &LaurentPolynomial::one();
        let mut out = HeckeElement::zero();
        for (w, c) in h.terms() {
            let ws = g.right_mul(w, s);
            if g.length(ws) > g.length(w) {
                out.add_term(ws, c);
            } else {
                out.add_term(ws, &(c * qs));
                out.add_term(w, &(c * &qs1));
            }
        }
        out
    }

    /// `T_{s_1} ⋯ T_{s_k} · h` for an arbitrary word.
    pub fn word_times(&self, word: &[usize], h: &HeckeElement) -> HeckeElement {
        word.iter().rev().fold(h.clone(), |acc, &s| self.left_mul_generator(s, &acc))
    }

    /// `T_{s_1} ⋯ T_{s_k}`; equals `T_w` when the word is reduced.
    pub fn word_product(&self, word: &[usize]) -> HeckeElement {
        self.word_times(word, &self.one())
    }

    /// `a · b`, factoring each `T_v` of `a` along its leftmost-descent
    /// reduced word.
    pub fn multiply(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (v, c) in a.terms() {
            let word = self.group.reduced_word(v);
            out = out.add(&self.word_times(&word, b).scale(c));
        }
        out
    }

    /// `h · T_{s_1} ⋯ T_{s_k}`.
    pub fn times_word(&self, h: &HeckeElement, word: &[usize]) -> HeckeElement {
        word.iter().fold(h.clone(), |acc, &s| self.right_mul_generator(&acc, s))
    }

    /// `a · b` computed from the right: `Σ_w b_w · a T_w`. Same result as
    /// [`Self::multiply`], cheaper when `b` has few terms.
    pub fn multiply_right(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, c) in b.terms() {
            let word = self.group.reduced_word(w);
            out = out.add(&self.times_word(a, &word).scale(c));
        }
        out
    }

    /// `(T_{s_1} ⋯ T_{s_k})^n` for a word.
    pub fn word_power(&self, word: &[usize], n: u32) -> HeckeElement {
        (0..n).fold(self.one(), |acc, _| self.times_word(&acc, word))
    }

    /// `Tr(T_w)` in the index representation `T_s ↦ q_s`.
    pub fn index_trace(&self, w: usize) -> LaurentPolynomial {
        self.group.reduced_word(w).iter().fold(LaurentPolynomial::one(), |acc, &s| &acc * &self.params[s])
    }

    /// `Tr(T_w)` in the sign representation `T_s ↦ −1`.
    pub fn sign_trace(&self, w: usize) -> LaurentPolynomial {
        LaurentPolynomial::from_int(if self.group.length(w).is_multiple_of(2) { 1 } else { -1 })
    }

    /// Index trace of a word, re-reduced first.
    pub fn index_trace_word(&self, word: &[usize]) -> LaurentPolynomial {
        self.index_trace(self.group.word_index(word))
    }

    /// Trace of left multiplication by `T_{s_1} ⋯ T_{s_k}` on `H_σ` in the
    /// basis `T_y`.
    pub fn regular_trace_word(&self, word: &[usize]) -> LaurentPolynomial {
        (0..self.group.order())
            .into_par_iter()
            .map(|y| self.word_times(word, &HeckeElement::basis(y)).coeff(y))
            .reduce(LaurentPolynomial::zero, |a, b| &a + &b)
    }

    /// `(T_s − q_s)(T_s + 1) = 0`.
    pub fn check_quadratic(&self, s: usize) -> bool {
        let ts = self.generator(s);
        let a = ts.sub(&self.one().scale(&self.params[s]));
        let b = ts.add(&self.one());
        self.multiply(&a, &b).is_zero()
    }

    /// Alternating products of length `m(s, t)` agree.
    pub fn check_braid(&self, s: usize, t: usize) -> bool {
        let m = self.group.system().coxeter_matrix[s][t];
        let w1: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect();
        let w2: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { t } else { s }).collect();
        self.word_product(&w1) == self.word_product(&w2)
    }

    /// Replaces `q` by 1 and reads the result in the group algebra.
    pub fn specialize_at_one(&self, h: &HeckeElement) -> BTreeMap<usize, num_rational::BigRational> {
        h.terms().map(|(w, c)| (w, c.at_one())).filter(|(_, c)| *c != rat(0)).collect()
    }
}

/// Signed family combination of traces at the Coxeter element:
/// `φ80,7 + φ20,10 − φ10,9 − φ90,8`, respectively `φ12,4 − φ'6,6 − φ''6,6`.
pub fn combination_labels(case: Case) -> Vec<(CharLabel, i64)> {
    match case {
        Case::Untwisted => vec![
            (CharLabel::new(80, 7), 1),
            (CharLabel::new(20, 10), 1),
            (CharLabel::new(10, 9), -1),
            (CharLabel::new(90, 8), -1),
        ],
        Case::Twisted => vec![
            (CharLabel::new(12, 4), 1),
            (CharLabel::tagged(6, 6, Tag::Prime), -1),
            (CharLabel::tagged(6, 6, Tag::DoublePrime), -1),
        ],
    }
}

pub fn trace_combination(data: &HeckeCharacterData, word: &[usize]) -> Result<LaurentPolynomial> {
    let needed = combination_labels(data.case);
    let mut acc = LaurentPolynomial::zero();
    let mut missing = Vec::new();
    for (label, sign) in &needed {
        match data.trace(label, word) {
            Some(v) => acc.add_scaled(v, &rat(*sign), 0),
            None => missing.push(label.to_string()),
        }
    }
    if !missing.is_empty() {
        let all: Vec<String> = needed.iter().map(|(l, _)| l.to_string()).collect();
        return Err(Error::Missing(format!(
            "trace data lacks {} at the Coxeter element; required labels: {}",
            missing.join(", "),
            all.join(", ")
        )));
    }
    Ok(acc)
}
