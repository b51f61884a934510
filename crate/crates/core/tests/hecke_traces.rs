//! Independent derivation of the ingested Coxeter-element traces.
//!
//! `T_c^h = T_{w0}^2` (h the Coxeter number) and `T_{w0}^2` acts on `V_φ` as
//! the scalar `Π_C q_C^{N_C (1 + φ(s_C)/φ(1))}` over the classes `C` of
//! reflections. Every eigenvalue of `T_c` is therefore an `h`-th root of that
//! scalar times a root of unity which is constant in `q`, so
//! `Tr(T_c, V_φ) = φ(c) q^{e_φ}` with
//! `e_φ = Σ_C N_C L_C (1 + φ(s_C)/φ(1)) / h`, where `q_C = q^{L_C}`.
//! The tests below check the data files against this formula and the formula
//! itself against traces of the regular representation computed by Hecke
//! multiplication.

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_rational::BigRational;
use unipotent_e6::hecke::{load_character_data, HeckeAlgebra, HeckeElement};
use unipotent_e6::rootdata::{build_cartan_e6, generate_root_system};
use unipotent_e6::scalars::{rat, LaurentPolynomial};
use unipotent_e6::weyl::{coxeter_word, FiniteCoxeterGroup, WeylData};
use unipotent_e6::Case;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn weyl(case: Case) -> WeylData {
    WeylData::build(&generate_root_system(&build_cartan_e6()).unwrap(), case).unwrap()
}

/// `e_φ` for every character, as an exact rational.
fn exponents(wd: &WeylData, h: &HeckeAlgebra) -> Vec<BigRational> {
    let g = &wd.group;
    let cox = g.order_of_word(&coxeter_word(wd.case));
    // Reflection classes are the classes of the generators.
    let mut refl: Vec<(usize, i32)> = Vec::new();
    for s in 0..g.rank() {
        let k = wd.classes.class_of(g.word_index(&[s]));
        let l = h.param(s).as_monomial().unwrap().1;
        if !refl.iter().any(|&(c, _)| c == k) {
            refl.push((k, l));
        }
    }
    wd.table
        .values
        .iter()
        .map(|row| {
            let mut e = rat(0);
            for &(k, l) in &refl {
                let n = rat(wd.classes.sizes[k] as i64 * l as i64);
                e += n * (rat(1) + rat(row[k]) / rat(row[0]));
            }
            e / rat(cox as i64)
        })
        .collect()
}

fn formula(wd: &WeylData, h: &HeckeAlgebra, power: u32) -> Vec<LaurentPolynomial> {
    let g = &wd.group;
    let c = g.word_index(&coxeter_word(wd.case));
    let ck = (0..power).fold(0, |acc, _| g.multiply(acc, c));
    let k = wd.classes.class_of(ck);
    exponents(wd, h)
        .into_iter()
        .zip(&wd.table.values)
        .map(|(e, row)| {
            let e = e * rat(power as i64);
            if row[k] == 0 {
                LaurentPolynomial::zero()
            } else {
                assert!(e.is_integer(), "non-integral exponent {e} with nonzero character value");
                LaurentPolynomial::term(row[k], e.to_integer().try_into().unwrap())
            }
        })
        .collect()
}

trait OrderOfWord {
    fn order_of_word(&self, w: &[usize]) -> usize;
}

impl OrderOfWord for FiniteCoxeterGroup {
    fn order_of_word(&self, w: &[usize]) -> usize {
        self.element(self.word_index(w)).order()
    }
}

fn check_file(case: Case) {
    let wd = weyl(case);
    let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
    let path = data_dir().join(format!("hecke_{}.tsv", case.data_tag()));
    let data = load_character_data(&path, &wd, &h).unwrap();
    let expected = formula(&wd, &h, 1);
    let word = coxeter_word(case);
    for (c, label) in wd.table.labels.iter().enumerate() {
        assert_eq!(data.trace(label, &word), Some(&expected[c]), "{label}");
        assert_eq!(data.trace(label, &[]), Some(&LaurentPolynomial::from_int(wd.table.values[c][0])), "{label}");
    }
}

#[test]
fn untwisted_file_matches_derivation() {
    check_file(Case::Untwisted);
}

#[test]
fn twisted_file_matches_derivation() {
    check_file(Case::Twisted);
}

/// `Σ_φ φ(1) Tr(T_c^k, V_φ)` against the trace of `T_c^k` on `H` itself.
fn regular_check(case: Case, powers: &[u32]) {
    let wd = weyl(case);
    let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
    let word = coxeter_word(case);
    for &k in powers {
        let lhs = formula(&wd, &h, k)
            .iter()
            .zip(&wd.table.values)
            .fold(LaurentPolynomial::zero(), |acc, (t, row)| &acc + &t.scale(&rat(row[0])));
        let wk: Vec<usize> = (0..k).flat_map(|_| word.iter().copied()).collect();
        assert_eq!(h.regular_trace_word(&wk), lhs, "power {k}");
    }
}

#[test]
fn twisted_regular_traces() {
    regular_check(Case::Twisted, &[1, 2]);
}

const P: u64 = (1 << 61) - 1;

fn mulp(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

/// `H_σ` specialized at an integer `q`, coefficients mod `P`, elements dense.
/// Fast enough for `W(E6)`; used where exact multiplication is too slow.
struct ModHecke<'a> {
    g: &'a FiniteCoxeterGroup,
    qs: Vec<u64>,
}

impl<'a> ModHecke<'a> {
    fn new(h: &HeckeAlgebra<'a>, g: &'a FiniteCoxeterGroup, q: u64) -> Self {
        let qs = (0..g.rank()).map(|s| specialize(h.param(s), q)).collect();
        Self { g, qs }
    }

    fn right_mul(&self, v: &[u64], s: usize) -> Vec<u64> {
        let mut out = vec![0u64; v.len()];
        let (qs, qs1) = (self.qs[s], (self.qs[s] + P - 1) % P);
        for (w, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let ws = self.g.right_mul(w, s);
            if self.g.length(ws) > self.g.length(w) {
                out[ws] = (out[ws] + c) % P;
            } else {
                out[ws] = (out[ws] + mulp(c, qs)) % P;
                out[w] = (out[w] + mulp(c, qs1)) % P;
            }
        }
        out
    }

    fn times_word(&self, v: Vec<u64>, word: &[usize]) -> Vec<u64> {
        word.iter().fold(v, |acc, &s| self.right_mul(&acc, s))
    }

    fn basis(&self, w: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.g.order()];
        v[w] = 1;
        v
    }

    /// Trace of left multiplication by the word on `H_σ`.
    fn regular_trace(&self, word: &[usize]) -> u64 {
        let mut tr = 0u64;
        for y in 0..self.g.order() {
            let mut cur: BTreeMap<usize, u64> = BTreeMap::from([(y, 1)]);
            for &s in word.iter().rev() {
                let (qs, qs1) = (self.qs[s], (self.qs[s] + P - 1) % P);
                let mut next = BTreeMap::new();
                for (&w, &c) in &cur {
                    let sw = self.g.left_mul(s, w);
                    if self.g.length(sw) > self.g.length(w) {
                        add(&mut next, sw, c);
                    } else {
                        add(&mut next, sw, mulp(c, qs));
                        add(&mut next, w, mulp(c, qs1));
                    }
                }
                cur = next;
            }
            tr = (tr + cur.get(&y).copied().unwrap_or(0)) % P;
        }
        tr
    }
}

fn add(m: &mut BTreeMap<usize, u64>, w: usize, c: u64) {
    let e = m.entry(w).or_insert(0);
    *e = (*e + c) % P;
}

fn specialize(p: &LaurentPolynomial, q: u64) -> u64 {
    let v = p.specialize(&rat(q as i64)).unwrap();
    assert!(v.is_integer());
    let n = v.to_integer() % num_bigint::BigInt::from(P);
    let n: i128 = n.try_into().unwrap();
    n.rem_euclid(P as i128) as u64
}

fn modular_regular_check(case: Case, powers: &[u32]) {
    let wd = weyl(case);
    let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
    let word = coxeter_word(case);
    for q in [2, 3, 7] {
        let m = ModHecke::new(&h, &wd.group, q);
        for &k in powers {
            let lhs = formula(&wd, &h, k)
                .iter()
                .zip(&wd.table.values)
                .fold(LaurentPolynomial::zero(), |acc, (t, row)| &acc + &t.scale(&rat(row[0])));
            let wk: Vec<usize> = (0..k).flat_map(|_| word.iter().copied()).collect();
            assert_eq!(m.regular_trace(&wk), specialize(&lhs, q), "q = {q}, power {k}");
        }
    }
}

#[test]
fn untwisted_regular_traces() {
    modular_regular_check(Case::Untwisted, &[1, 2]);
}

#[test]
fn twisted_regular_traces_all_powers() {
    modular_regular_check(Case::Twisted, &[1, 2]);
}

#[test]
fn untwisted_coxeter_power_is_square_of_longest() {
    let wd = weyl(Case::Untwisted);
    let h = HeckeAlgebra::for_case(&wd.group, Case::Untwisted).unwrap();
    let word = coxeter_word(Case::Untwisted);
    let hnum = wd.group.order_of_word(&word);
    let w0 = wd.group.longest_element();
    let w0_word = wd.group.reduced_word(w0);
    for q in [2, 3, 5, 7, 11] {
        let m = ModHecke::new(&h, &wd.group, q);
        let tc = (0..hnum).fold(m.basis(0), |acc, _| m.times_word(acc, &word));
        assert_eq!(tc, m.times_word(m.basis(w0), &w0_word), "q = {q}");
    }
}

#[test]
fn twisted_coxeter_power_is_square_of_longest() {
    let case = Case::Twisted;
    let wd = weyl(case);
    let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
    let word = coxeter_word(case);
    let hnum = wd.group.order_of_word(&word) as u32;
    let tw0 = HeckeElement::basis(wd.group.longest_element());
    let w0_word = wd.group.reduced_word(wd.group.longest_element());
    assert_eq!(h.word_power(&word, hnum), h.times_word(&tw0, &w0_word));
}

#[test]
#[ignore = "prints the derived trace tables"]
fn print_derived_tables() {
    for case in Case::BOTH {
        let wd = weyl(case);
        let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
        let f = formula(&wd, &h, 1);
        let word: Vec<String> = coxeter_word(case).iter().map(|s| (s + 1).to_string()).collect();
        println!("# case: {}", case.data_tag());
        for (c, label) in wd.table.labels.iter().enumerate() {
            println!("{}\t-\t{}", label, LaurentPolynomial::from_int(wd.table.values[c][0]));
            println!("{}\t{}\t{}", label, word.join(","), f[c]);
        }
    }
}

fn load_edited(case: Case, f: impl Fn(&str) -> Option<String>) -> unipotent_e6::error::Result<()> {
    let wd = weyl(case);
    let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
    let text = std::fs::read_to_string(data_dir().join(format!("hecke_{}.tsv", case.data_tag()))).unwrap();
    let edited: String = text.lines().filter_map(&f).map(|l| l + "\n").collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hecke.tsv");
    std::fs::write(&path, edited).unwrap();
    load_character_data(&path, &wd, &h).map(|_| ())
}

#[test]
fn identity_row_must_be_the_dimension() {
    // Still 80 at q = 1, but not constant.
    let err = load_edited(Case::Untwisted, |l| {
        Some(if l == "phi_80_7\t-\t80*q^0" { "phi_80_7\t-\t80*q^1".to_string() } else { l.to_string() })
    })
    .unwrap_err();
    assert!(err.to_string().contains("not the dimension"), "{err}");
}

#[test]
fn every_label_needs_an_identity_row() {
    let err = load_edited(Case::Twisted, |l| (!l.starts_with("phi_12_4\t-\t")).then(|| l.to_string())).unwrap_err();
    assert!(err.to_string().contains("no identity row for phi_12_4"), "{err}");
}
