//! The verification chain roots → Weyl → witness → Fourier → Hecke → ξ →
//! value table, as named check records.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::borel::{verify_witness, BorelGroup, UnipotentElement, WitnessReport, F3, N_POS};
use crate::error::{Error, Result};
use crate::fourier::{
    column_pair_equality, fourier_matrix, FiniteGroupModel, FourierMatrix, GroupSpec, CUSPIDAL_PAIRS,
};
use crate::hecke::{load_character_data, parse_character_data, trace_combination, HeckeAlgebra, HeckeCharacterData};
use crate::rootdata::{build_cartan_e6, generate_root_system, smith_normal_form, RootSystem};
use crate::scalars::{rat, ratio, Cyc3, LaurentPolynomial, Sign, SignLinear};
use crate::unipchars::{
    chi_orthonormality, determine_xi, load_roster, m_value, parse_roster, scalar_constraints, value_table, EntrySource,
    Roster, ScalarSolution, ValueRow, ROSTER_SIZE,
};
use crate::weyl::{check_orthogonality, coxeter_word, CharLabel, Tag, WeylData, F4_COXETER_MATRIX};
use crate::Case;

pub const ASSOCIATIVITY_TRIPLES: usize = 10_000;
const SEED: u64 = 0x005e_ede6;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub passed: bool,
    pub details: String,
}

impl Check {
    pub fn new(name: impl Into<String>, anchor: &str, passed: bool, details: impl Into<String>) -> Self {
        Self { name: name.into(), anchor: anchor.into(), passed, details: details.into() }
    }

    fn from_result<T>(
        name: impl Into<String>,
        anchor: &str,
        r: &Result<T>,
        ok: impl FnOnce(&T) -> (bool, String),
    ) -> Self {
        match r {
            Ok(v) => {
                let (passed, details) = ok(v);
                Self::new(name, anchor, passed, details)
            }
            Err(e) => Self::new(name, anchor, false, e.to_string()),
        }
    }
}

pub fn e6_root_system() -> Result<RootSystem> {
    generate_root_system(&build_cartan_e6())
}

pub fn hecke_path(data_dir: &Path, case: Case) -> PathBuf {
    data_dir.join(format!("hecke_{}.tsv", case.data_tag()))
}

pub fn roster_path(data_dir: &Path, case: Case) -> PathBuf {
    data_dir.join(format!("roster_{}.tsv", case.data_tag()))
}

pub fn s3_fourier() -> Result<FourierMatrix> {
    fourier_matrix(&FiniteGroupModel::build(GroupSpec::S3)?)
}

pub fn root_datum_check(rs: &RootSystem) -> Check {
    let det = rs.cartan().determinant();
    let snf = smith_normal_form(rs.cartan().rows()).diagonal();
    let highest = rs.highest_root().coords.clone();
    let passed = rs.len() == 72
        && rs.n_positive() == 36
        && highest == [1, 2, 2, 3, 2, 1]
        && det == 3
        && snf == [1, 1, 1, 1, 1, 3];
    Check::new(
        "root_datum",
        "|R| = 72, |R+| = 36, highest root 122321, det C = 3, Smith form diag(1,1,1,1,1,3)",
        passed,
        format!("|R| = {}, |R+| = {}, highest = {highest:?}, det = {det}, smith = {snf:?}", rs.len(), rs.n_positive()),
    )
}

pub fn weyl_check(wd: &WeylData) -> Check {
    let g = &wd.group;
    let inv: Vec<usize> = (0..wd.classes.len()).map(|c| wd.classes.inverse_class(g, c)).collect();
    let orth = check_orthogonality(&wd.table.values, &wd.classes.sizes, &inv, g.order());
    let degrees = &wd.table.fake_degrees.degrees;
    let (passed, extra) = match wd.case {
        Case::Untwisted => {
            let labels = [(80, 7), (90, 8), (20, 10), (10, 9)]
                .iter()
                .all(|&(d, b)| wd.table.labels.iter().filter(|l| (l.d, l.b) == (d, b)).count() == 1);
            (
                g.order() == 51840 && g.max_length() == 36 && degrees == &[2, 5, 6, 8, 9, 12] && labels,
                format!("unique (80,7), (90,8), (20,10), (10,9): {labels}"),
            )
        }
        Case::Twisted => {
            let f4 = wd.system.coxeter_matrix.iter().zip(F4_COXETER_MATRIX.iter()).all(|(a, b)| a[..] == b[..]);
            (g.order() == 1152 && degrees == &[2, 6, 8, 12] && f4, format!("F4 Coxeter matrix: {f4}"))
        }
    };
    Check::new(
        format!("weyl/{}", wd.case),
        match wd.case {
            Case::Untwisted => "|W| = 51840, 25 classes, l(w0) = 36, degrees 2,5,6,8,9,12, orthogonality",
            Case::Twisted => "|W^sigma| = 1152, Coxeter matrix of type F4 (bonds 3,4,3), orthogonality",
        },
        passed && wd.classes.len() == 25 && orth.is_ok(),
        format!(
            "order {}, {} classes, l(w0) = {}, degrees {degrees:?}, orthogonality {}, {extra}",
            g.order(),
            wd.classes.len(),
            g.max_length(),
            if orth.is_ok() { "ok" } else { "FAILED" }
        ),
    )
}

fn random_unipotent(rng: &mut ChaCha8Rng) -> UnipotentElement {
    let mut c = [F3::ZERO; N_POS];
    for x in &mut c {
        *x = F3::new(rng.gen_range(0..3));
    }
    UnipotentElement::from_coeffs(c)
}

/// `(ab)c = a(bc)` on random triples of `U(𝔽₃)`.
pub fn associativity_check(bg: &BorelGroup, triples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = 0;
    for _ in 0..triples {
        let (a, b, c) = (random_unipotent(&mut rng), random_unipotent(&mut rng), random_unipotent(&mut rng));
        if bg.multiply(&bg.multiply(&a, &b), &c) != bg.multiply(&a, &bg.multiply(&b, &c)) {
            failures += 1;
        }
    }
    Check::new(
        "borel/associativity",
        "collection multiplication on U(F3) is associative",
        failures == 0,
        format!("{triples} random triples, {failures} failures"),
    )
}

pub fn witness_check(rs: &RootSystem, case: Case) -> (Check, Option<WitnessReport>) {
    let report = BorelGroup::new(rs, case).and_then(|bg| verify_witness(&bg));
    let check = Check::from_result(
        format!("borel/{case}"),
        "u0 regular and F-fixed; (ut) u0 (ut)^-1 = u0^-1 for the explicit t, u",
        &report,
        |r| {
            (
                r.passed(),
                format!(
                    "u0 = {}, regular {}, F-fixed {}, witness t = {}, u = {}, exact {}, searched {}",
                    r.u0, r.u0_regular, r.u0_frobenius_fixed, r.t, r.u, r.exact_match, r.searched
                ),
            )
        },
    );
    (check, report.ok())
}

pub fn fourier_check(m: &FourierMatrix) -> Check {
    let r = |n, d| Cyc3::from_rational(ratio(n, d));
    let a1 = m.entry(CUSPIDAL_PAIRS[0], CUSPIDAL_PAIRS[0]) == Some(&r(2, 3));
    let a2 = m.entry(CUSPIDAL_PAIRS[0], CUSPIDAL_PAIRS[1]) == Some(&r(-1, 3));
    let symmetric = m.is_rational() && m.is_hermitian();
    let cols = match (m.position(CUSPIDAL_PAIRS[0]), m.position(CUSPIDAL_PAIRS[1])) {
        (Some(x), Some(y)) => column_pair_equality(m, x, y),
        _ => false,
    };
    let inv = m.squares_to_identity();
    Check::new(
        "fourier/s3",
        "M(S3) is 8x8, real symmetric, squares to 1; {x1,x1} = 2/3, {x1,x2} = -1/3; {x,x1} = {x,x2} off the block",
        m.size() == 8 && symmetric && inv && a1 && a2 && cols,
        format!(
            "size {}, real symmetric {symmetric}, square = 1 {inv}, anchors {a1}/{a2}, column equality {cols}",
            m.size()
        ),
    )
}

pub fn chi_check() -> Check {
    Check::new(
        "chi_orthonormality",
        "<chi_i, chi_j> = delta_ij with |C^F| = 3q^6",
        chi_orthonormality(),
        "Gram matrix over u0, u0', u0''",
    )
}

/// Relations, index trace at the Coxeter element, and the trace
/// combination of the ingested data.
pub fn hecke_checks(wd: &WeylData, data: &Result<HeckeCharacterData>) -> Vec<Check> {
    let case = wd.case;
    let h = HeckeAlgebra::for_case(&wd.group, case).expect("parameters match the rank");
    let r = wd.group.rank();
    let quad = (0..r).all(|s| h.check_quadratic(s));
    let braid = (0..r).all(|s| (0..r).all(|t| h.check_braid(s, t)));
    let word = coxeter_word(case);
    let index = h.index_trace_word(&word);
    let q6 = LaurentPolynomial::term(1, 6);
    let mut out = vec![Check::new(
        format!("hecke/{case}/relations"),
        "quadratic and braid relations; index trace at the Coxeter element = q^6",
        quad && braid && index == q6,
        format!("quadratic {quad}, braid {braid}, index trace {index}"),
    )];
    out.push(Check::from_result(
        format!("hecke/{case}/data"),
        "every ingested trace specializes at q = 1 to the W^sigma character table",
        data,
        |d| (true, format!("{} rows", d.rows.len())),
    ));
    let comb = data
        .as_ref()
        .map_err(|e| Error::Missing(format!("trace data unavailable: {e}")))
        .and_then(|d| trace_combination(d, &word));
    out.push(Check::from_result(
        format!("hecke/{case}/combination"),
        "signed family trace combination at the Coxeter element = 3q^3",
        &comb,
        |c| (*c == LaurentPolynomial::term(3, 3), c.to_string()),
    ));
    out
}

/// Everything computed from the data files for one case.
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub m: SignLinear,
    pub solution: ScalarSolution,
    pub values: Vec<ValueRow>,
}

pub fn evaluate(
    wd: &WeylData,
    m: &FourierMatrix,
    witness: Option<&WitnessReport>,
    data: &HeckeCharacterData,
    roster: &Roster,
    samples: &[i64],
) -> Result<CaseOutcome> {
    let constraints = scalar_constraints(witness, m)?;
    let mv = m_value(wd, roster, m, data, &coxeter_word(wd.case))?;
    let solution = determine_xi(&mv, samples, constraints)?;
    let values = value_table(roster, m, solution.xi)?;
    Ok(CaseOutcome { m: mv, solution, values })
}

/// The expected value at `u₀` by slot: 1 for the trivial character, `q³/3`
/// for cuspidals, `±2q³/3` on `(1,1), (1,ε)` / `(1,r), (g₃,1)`, else 0.
pub fn expected_value(roster: &Roster, i: usize) -> LaurentPolynomial {
    let e = &roster.entries[i];
    if e.irr_label() == Some(CharLabel::new(1, 0)) {
        return LaurentPolynomial::one();
    }
    let c = match e.mpair.as_deref() {
        Some("(g3,theta)") | Some("(g3,theta2)") => ratio(1, 3),
        Some("(1,1)") | Some("(1,eps)") => ratio(2, 3),
        Some("(1,r)") | Some("(g3,1)") => ratio(-2, 3),
        _ => rat(0),
    };
    LaurentPolynomial::monomial(c, 3)
}

pub fn outcome_checks(case: Case, roster: Option<&Roster>, outcome: &Result<CaseOutcome>) -> Vec<Check> {
    let main = Check::from_result(format!("xi/{case}"), "m(u0,c) = q^6 + xi*2q^6 and xi = +1", outcome, |o| {
        (o.solution.xi == Sign::Plus, format!("m = {}, xi = {}", o.m, o.solution.xi))
    });
    let table = Check::from_result(
        format!("values/{case}"),
        "30 values at u0: 1, q^3/3 on cuspidals, +-2q^3/3 on four family slots, 0 elsewhere; integers at q = 3",
        outcome,
        |o| {
            let Some(roster) = roster else { return (false, "no roster".into()) };
            let mismatched: Vec<&str> = o
                .values
                .iter()
                .enumerate()
                .filter(|(i, r)| r.value != expected_value(roster, *i))
                .map(|(_, r)| r.id.as_str())
                .collect();
            let integral = o.values.iter().all(|r| r.at_q3.is_integer());
            let cuspidal = roster.entries.iter().filter(|e| e.source == EntrySource::Cuspidal).count();
            (
                o.values.len() == ROSTER_SIZE && mismatched.is_empty() && integral && cuspidal == 2,
                format!("{} rows, mismatched {mismatched:?}, integral at q = 3: {integral}", o.values.len()),
            )
        },
    );
    vec![main, table]
}

/// Relabels `'`/`''` in value rows so tables from swapped inputs compare.
fn swap_ids(rows: &[ValueRow]) -> Vec<(String, LaurentPolynomial)> {
    let mut out: Vec<(String, LaurentPolynomial)> = rows
        .iter()
        .map(|r| {
            let id = r.id.parse::<CharLabel>().map(|l| l.swapped().to_string()).unwrap_or_else(|_| r.id.clone());
            (id, r.value.clone())
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn sorted(rows: &[ValueRow]) -> Vec<(String, LaurentPolynomial)> {
    let mut out: Vec<_> = rows.iter().map(|r| (r.id.clone(), r.value.clone())).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The pipeline output is unchanged by the `'`/`''` tag swap and by
/// exchanging the `(1,r)` and `(g₃,1)` slots; corrupted trace data is caught
/// before `ξ` is reported.
pub fn robustness_checks(
    wd: &WeylData,
    m: &FourierMatrix,
    witness: Option<&WitnessReport>,
    data: &HeckeCharacterData,
    roster: &Roster,
    samples: &[i64],
    base: &CaseOutcome,
) -> Vec<Check> {
    let case = wd.case;
    let swapped = evaluate(wd, m, witness, &data.with_swapped_tags(), &roster.with_swapped_tags(), samples);
    let tag = Check::from_result(
        format!("robustness/{case}/tag_swap"),
        "output invariant under exchanging ' and '' tags",
        &swapped,
        |o| {
            (
                o.m == base.m && o.solution.xi == base.solution.xi && swap_ids(&o.values) == sorted(&base.values),
                "compared".into(),
            )
        },
    );
    let (a, b) = match case {
        Case::Untwisted => ("phi_90_8".to_string(), "phi_10_9".to_string()),
        Case::Twisted => {
            (CharLabel::tagged(6, 6, Tag::Prime).to_string(), CharLabel::tagged(6, 6, Tag::DoublePrime).to_string())
        }
    };
    let exchanged = roster.exchange_pairs(&a, &b).and_then(|r| {
        r.validate(wd, m)?;
        evaluate(wd, m, witness, data, &r, samples)
    });
    let slot = Check::from_result(
        format!("robustness/{case}/slot_exchange"),
        "output invariant under exchanging the (1,r) and (g3,1) slots",
        &exchanged,
        |o| (o.m == base.m && sorted(&o.values) == sorted(&base.values), format!("exchanged {a} and {b}")),
    );
    vec![tag, slot, corruption_check(wd, m, witness, data, roster, samples)]
}

/// Three corruptions of the trace data: a wrong dimension (rejected at load),
/// a family trace multiplied by `q`, and a family trace negated (both caught
/// by the identity check on `m`).
pub fn corruption_check(
    wd: &WeylData,
    m: &FourierMatrix,
    witness: Option<&WitnessReport>,
    data: &HeckeCharacterData,
    roster: &Roster,
    samples: &[i64],
) -> Check {
    let case = wd.case;
    let h = HeckeAlgebra::for_case(&wd.group, case).expect("parameters match the rank");
    let word = coxeter_word(case);
    let Some(family) = crate::hecke::combination_labels(case)
        .into_iter()
        .map(|(l, _)| l)
        .find(|l| data.trace(l, &word).is_some_and(|v| !v.is_zero()))
    else {
        return Check::new(
            format!("robustness/{case}/corrupted_data"),
            "corrupted data",
            false,
            "no nonzero family trace",
        );
    };
    let mut verdicts = Vec::new();
    let corrupt = |f: &dyn Fn(&crate::hecke::TraceRow) -> Option<LaurentPolynomial>| {
        let mut d = data.clone();
        for row in &mut d.rows {
            if let Some(v) = f(row) {
                row.value = v;
            }
        }
        let text = render_data(&d);
        parse_character_data(&text, case).and_then(|d| {
            d.validate(wd, &h)?;
            evaluate(wd, m, witness, &d, roster, samples)
        })
    };
    let dim = corrupt(&|r| (r.label == family && r.word.is_empty()).then(|| &r.value + &LaurentPolynomial::one()));
    verdicts.push(("dimension", dim.is_err()));
    let shifted = corrupt(&|r| (r.label == family && r.word == word).then(|| r.value.shift(1)));
    verdicts.push(("q-shift", shifted.is_err()));
    let negated = corrupt(&|r| (r.label == family && r.word == word).then(|| -&r.value));
    verdicts.push(("negation", negated.is_err()));
    Check::new(
        format!("robustness/{case}/corrupted_data"),
        "corrupted Hecke data is rejected or flagged before xi is reported",
        verdicts.iter().all(|&(_, caught)| caught),
        verdicts
            .iter()
            .map(|(n, c)| format!("{n}: {}", if *c { "caught" } else { "MISSED" }))
            .collect::<Vec<_>>()
            .join(", "),
    )
}

/// Writes trace data back in the file format.
pub fn render_data(d: &HeckeCharacterData) -> String {
    let mut out = format!("# case: {}\n", d.case.data_tag());
    for p in &d.provenance {
        out.push_str(&format!("# {p}\n"));
    }
    for r in &d.rows {
        out.push_str(&format!("{}\t{}\t{}\n", r.label, crate::hecke::render_word(&r.word), r.value));
    }
    out
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseSummary {
    pub case: Case,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<Sign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
    pub values: Vec<ValueRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub q_samples: Vec<i64>,
    pub digests: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub cases: Vec<CaseSummary>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed.is_empty()
    }
}

pub struct Config {
    pub cases: Vec<Case>,
    pub data_dir: PathBuf,
    pub q_samples: Vec<i64>,
}

/// Per-case artifacts that later stages reuse.
pub struct CaseRun {
    pub weyl: WeylData,
    pub witness: Option<WitnessReport>,
    pub data: Result<HeckeCharacterData>,
    pub roster: Result<Roster>,
    pub outcome: Result<CaseOutcome>,
    pub checks: Vec<Check>,
}

pub fn run_case(rs: &RootSystem, m: &FourierMatrix, case: Case, data_dir: &Path, samples: &[i64]) -> Result<CaseRun> {
    let weyl = WeylData::build(rs, case)?;
    let mut checks = vec![weyl_check(&weyl)];
    let (wc, witness) = witness_check(rs, case);
    checks.push(wc);
    let h = HeckeAlgebra::for_case(&weyl.group, case)?;
    let data = load_character_data(&hecke_path(data_dir, case), &weyl, &h);
    checks.extend(hecke_checks(&weyl, &data));
    let roster = load_roster(&roster_path(data_dir, case), &weyl, m);
    checks.push(Check::from_result(
        format!("roster/{case}"),
        "30 entries (25 principal series, 2 cuspidal, 3 other); family signs match the m-formula",
        &roster,
        |r| (true, format!("{} entries", r.entries.len())),
    ));
    let outcome = match (&data, &roster) {
        (Ok(d), Ok(r)) => evaluate(&weyl, m, witness.as_ref(), d, r, samples),
        (Err(e), _) | (_, Err(e)) => Err(Error::Missing(format!("inputs unavailable: {e}"))),
    };
    checks.extend(outcome_checks(case, roster.as_ref().ok(), &outcome));
    if let (Ok(d), Ok(r), Ok(o)) = (&data, &roster, &outcome) {
        checks.extend(robustness_checks(&weyl, m, witness.as_ref(), d, r, samples, o));
    } else {
        checks.push(Check::new(
            format!("robustness/{case}"),
            "robustness properties",
            false,
            "pipeline did not complete",
        ));
    }
    Ok(CaseRun { weyl, witness, data, roster, outcome, checks })
}

pub fn full_report(config: &Config) -> Result<VerificationReport> {
    let rs = e6_root_system()?;
    let m = s3_fourier()?;
    let mut checks = vec![root_datum_check(&rs), fourier_check(&m), chi_check()];
    checks.push(associativity_check(&BorelGroup::new(&rs, Case::Untwisted)?, ASSOCIATIVITY_TRIPLES));
    let mut digests = BTreeMap::new();
    let mut cases = Vec::new();
    for &case in &config.cases {
        for path in [hecke_path(&config.data_dir, case), roster_path(&config.data_dir, case)] {
            let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            digests.insert(name, sha256_file(&path).unwrap_or_else(|e| format!("unreadable: {e}")));
        }
        let run = run_case(&rs, &m, case, &config.data_dir, &config.q_samples)?;
        checks.extend(run.checks);
        let outcome = run.outcome.ok();
        cases.push(CaseSummary {
            case,
            xi: outcome.as_ref().map(|o| o.solution.xi),
            m_polynomial: outcome.as_ref().map(|o| o.m.to_string()),
            witness: run.witness,
            values: outcome.map(|o| o.values).unwrap_or_default(),
        });
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    let summary = Summary { checks: checks.len(), passed: checks.len() - failed.len(), failed };
    Ok(VerificationReport {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        q_samples: config.q_samples.clone(),
        digests,
        checks,
        cases,
        summary,
    })
}

/// Parses roster text for a case, for callers holding data in memory.
pub fn roster_from_text(text: &str, case: Case, wd: &WeylData, m: &FourierMatrix) -> Result<Roster> {
    let r = parse_roster(text, case)?;
    r.validate(wd, m)?;
    Ok(r)
}
