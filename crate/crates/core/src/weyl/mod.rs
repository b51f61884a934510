//! W(E6) as a permutation group on the roots, its conjugacy classes and
//! character table with `φ_{d,b}` labels, and the folded group `(W^σ, S_σ)`
//! of type F4.

mod chartable;
mod classes;
mod element;
mod fakedeg;
mod group;
mod sigma;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use chartable::{check_orthogonality, compute_character_values};
pub use classes::{conjugacy_classes, ConjClassSet};
pub use element::{WeylElement, N_ROOTS};
pub use fakedeg::{
    cyclotomic, degrees_from_poincare, det_one_minus_q, fake_degrees, poincare_polynomial, FakeDegreeTable,
    ReflectionSpace,
};
pub use group::{group_enumerate, group_enumerate_bounded, CoxeterSystem, FiniteCoxeterGroup, DEFAULT_ORDER_BOUND};
pub use sigma::{
    check_fixed_points, coxeter_element, coxeter_word, e6_coxeter_system, sigma_apply, sigma_generator_words,
    sigma_setup, F4_COXETER_MATRIX,
};

use crate::error::{Error, Result};
use crate::rootdata::RootSystem;
use crate::scalars::LaurentPolynomial;
use crate::Case;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Tag {
    Prime,
    DoublePrime,
}

/// `φ_{d,b}` with an optional `'`/`''` tag; rendered `phi_{d}_{b}[_p|_pp]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharLabel {
    pub d: i64,
    pub b: i32,
    pub tag: Option<Tag>,
}

impl CharLabel {
    pub fn new(d: i64, b: i32) -> Self {
        Self { d, b, tag: None }
    }

    pub fn tagged(d: i64, b: i32, tag: Tag) -> Self {
        Self { d, b, tag: Some(tag) }
    }

    /// The label with `'` and `''` exchanged.
    pub fn swapped(self) -> Self {
        let tag = self.tag.map(|t| match t {
            Tag::Prime => Tag::DoublePrime,
            Tag::DoublePrime => Tag::Prime,
        });
        Self { tag, ..self }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi_{}_{}", self.d, self.b)?;
        match self.tag {
            Some(Tag::Prime) => write!(f, "_p"),
            Some(Tag::DoublePrime) => write!(f, "_pp"),
            None => Ok(()),
        }
    }
}

impl FromStr for CharLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad character label '{s}'"));
        let rest = s.strip_prefix("phi_").ok_or_else(bad)?;
        let mut parts = rest.split('_');
        let d = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let b = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let tag = match parts.next() {
            None => None,
            Some("p") => Some(Tag::Prime),
            Some("pp") => Some(Tag::DoublePrime),
            Some(_) => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(Self { d, b, tag })
    }
}

impl Serialize for CharLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Integer character table. `values[c][k]` is character `c` at class `k`;
/// characters are ordered by `(d, b, value vector)`.
#[derive(Clone, Debug)]
pub struct WCharTable {
    pub values: Vec<Vec<i64>>,
    pub labels: Vec<CharLabel>,
    pub fake_degrees: FakeDegreeTable,
}

impl WCharTable {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: &CharLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn value(&self, label: &CharLabel, class: usize) -> Option<i64> {
        self.position(label).map(|c| self.values[c][class])
    }

    pub fn dimension_sum_of_squares(&self) -> i64 {
        self.values.iter().map(|r| r[0] * r[0]).sum()
    }
}

/// Character table with fake-degree labels. Characters sharing `(d, b)` are
/// told apart by their value vectors: the lexicographically smaller gets `'`.
pub fn character_table(
    rs: &RootSystem,
    g: &FiniteCoxeterGroup,
    cl: &ConjClassSet,
    space: &ReflectionSpace,
) -> Result<WCharTable> {
    let raw = compute_character_values(g, cl)?;
    let fd = fake_degrees(rs, g, cl, &raw, space)?;
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&x, &y| (raw[x][0], fd.b[x], &raw[x]).cmp(&(raw[y][0], fd.b[y], &raw[y])));
    let values: Vec<Vec<i64>> = order.iter().map(|&c| raw[c].clone()).collect();
    let polys: Vec<LaurentPolynomial> = order.iter().map(|&c| fd.polys[c].clone()).collect();
    let b: Vec<i32> = order.iter().map(|&c| fd.b[c]).collect();
    let mut labels: Vec<CharLabel> = values.iter().zip(&b).map(|(v, &b)| CharLabel::new(v[0], b)).collect();
    for i in 0..labels.len() {
        let same: Vec<usize> =
            (0..labels.len()).filter(|&j| (labels[j].d, labels[j].b) == (labels[i].d, labels[i].b)).collect();
        match same.len() {
            1 => {}
            2 => labels[i].tag = Some(if same[0] == i { Tag::Prime } else { Tag::DoublePrime }),
            n => {
                return Err(Error::Consistency(format!(
                    "{n} characters share (d, b) = ({}, {})",
                    labels[i].d, labels[i].b
                )))
            }
        }
    }
    Ok(WCharTable { values, labels, fake_degrees: FakeDegreeTable { polys, b, degrees: fd.degrees } })
}

/// Everything the pipeline needs about `(W^σ, S_σ)` for one case.
#[derive(Clone, Debug)]
pub struct WeylData {
    pub case: Case,
    pub system: CoxeterSystem,
    pub group: FiniteCoxeterGroup,
    pub classes: ConjClassSet,
    pub table: WCharTable,
}

impl WeylData {
    pub fn build(rs: &RootSystem, case: Case) -> Result<Self> {
        let system = sigma_setup(rs, case)?;
        let group = group_enumerate(&system)?;
        let classes = conjugacy_classes(&group);
        let space = match case {
            Case::Untwisted => ReflectionSpace::full(rs.rank()),
            Case::Twisted => ReflectionSpace::folded(),
        };
        let table = character_table(rs, &group, &classes, &space)?;
        Ok(Self { case, system, group, classes, table })
    }

    /// Class index of the element given by a 0-based word in `S_σ`.
    pub fn class_of_word(&self, word: &[usize]) -> usize {
        self.classes.class_of(self.group.word_index(word))
    }

    pub fn coxeter_class(&self) -> usize {
        self.class_of_word(&coxeter_word(self.case))
    }

    /// `(class, value)` rows of `weyl-table` TSV output.
    pub fn table_tsv(&self) -> String {
        let mut out = String::from("label\tfake_degree");
        for k in 0..self.classes.len() {
            let word: Vec<String> =
                self.group.reduced_word(self.classes.reps[k]).iter().map(|s| (s + 1).to_string()).collect();
            out.push_str(&format!("\tC{}[{}|{}]", k, self.classes.sizes[k], word.join(",")));
        }
        out.push('\n');
        for (c, label) in self.table.labels.iter().enumerate() {
            out.push_str(&format!("{}\t{}", label, self.table.fake_degrees.polys[c]));
            for v in &self.table.values[c] {
                out.push_str(&format!("\t{v}"));
            }
            out.push('\n');
        }
        out
    }
}
