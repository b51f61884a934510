//! Unipotent characters at the regular unipotent element `u₀`: the roster of
//! `X̄(W,σ)`, the cuspidal functions `χ₁, χ₂`, the quantity `m(u₀, w)`, the
//! determination of `ξ`, and the resulting value table.

mod roster;

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

pub use roster::{load_roster, parse_roster, EntrySource, ParameterSetEntry, Roster, ROSTER_SIZE};

use crate::borel::WitnessReport;
use crate::error::{Error, Result};
use crate::fourier::{column_pair_equality, FourierMatrix, CUSPIDAL_PAIRS};
use crate::hecke::HeckeCharacterData;
use crate::scalars::{rat, ratio, Cyc3, Cyc3Laurent, LaurentPolynomial, Sign, SignLinear};
use crate::weyl::{CharLabel, WeylData};

pub const DEFAULT_Q_SAMPLES: [i64; 3] = [3, 9, 27];

/// Values of `χ₁, χ₂` off `O_reg` and at `u₀, u₀′, u₀″`.
#[derive(Clone, Debug)]
pub struct CuspidalFunctionTable {
    pub classes: [&'static str; 4],
    pub values: [[Cyc3Laurent; 4]; 2],
}

pub fn chi_tables() -> CuspidalFunctionTable {
    let q3 = LaurentPolynomial::term(1, 3);
    let v = |k| Cyc3Laurent::scaled(&q3, &Cyc3::theta_pow(k));
    CuspidalFunctionTable {
        classes: ["outside O_reg", "u0", "u0'", "u0''"],
        values: [[Cyc3Laurent::zero(), v(0), v(1), v(2)], [Cyc3Laurent::zero(), v(0), v(2), v(1)]],
    }
}

/// `⟨χ_i, χ_j⟩ = Σ χ_i(g) χ_j(g)‾ / |C^F|` over `u₀, u₀′, u₀″` with
/// `|C^F| = 3q⁶`.
pub fn chi_gram(t: &CuspidalFunctionTable) -> [[Cyc3Laurent; 2]; 2] {
    let weight = LaurentPolynomial::monomial(ratio(1, 3), -6);
    let entry = |i: usize, j: usize| {
        let mut s = Cyc3Laurent::zero();
        for k in 1..4 {
            s = &s + &(&t.values[i][k] * &t.values[j][k].conj());
        }
        s.scale_laurent(&weight)
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

pub fn chi_orthonormality() -> bool {
    let g = chi_gram(&chi_tables());
    (0..2).all(|i| (0..2).all(|j| g[i][j] == Cyc3Laurent::from_laurent(LaurentPolynomial::from_int(i64::from(i == j)))))
}

fn trivial_label() -> CharLabel {
    CharLabel::new(1, 0)
}

/// `ρ(u₀) = {x̄_ρ, x_{1_W}} + ξ q³ ({x̄_ρ, x₁} + {x̄_ρ, x₂})`, with
/// `R_{1̃_W}(u₀) = 1` and all other `R_φ̃(u₀) = 0`.
pub fn rho_at_u0(roster: &Roster, i: usize, m: &FourierMatrix) -> Result<SignLinear> {
    let e = &roster.entries[i];
    assert_eq!(e.delta, 1, "sign Δ ≠ +1 reached the value formula");
    let constant = LaurentPolynomial::from_int(i64::from(e.irr_label() == Some(trivial_label())));
    let coeff = roster.cuspidal_coefficient(i, m)?;
    Ok(SignLinear::new(constant, LaurentPolynomial::monomial(coeff, 3)))
}

/// `m(u₀, w) = Σ_φ ρ_φ(u₀) Tr(T_w, V_φ)`.
pub fn m_value(
    wd: &WeylData,
    roster: &Roster,
    m: &FourierMatrix,
    data: &HeckeCharacterData,
    word: &[usize],
) -> Result<SignLinear> {
    let mut total = SignLinear::zero();
    let mut missing = Vec::new();
    for label in &wd.table.labels {
        let i = roster
            .entries
            .iter()
            .position(|e| e.irr_label() == Some(*label))
            .ok_or_else(|| Error::Missing(format!("no roster entry for {label}")))?;
        let rho = rho_at_u0(roster, i, m)?;
        if rho.is_zero() {
            continue;
        }
        match data.trace(label, word) {
            Some(tr) => total = &total + &rho.scale(tr),
            None => missing.push(label.to_string()),
        }
    }
    if !missing.is_empty() {
        return Err(Error::Missing(format!("trace data lacks {} at the requested word", missing.join(", "))));
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivationStep {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl DerivationStep {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }
}

/// The chain forcing `ξ_{x₁} = ξ_{x₂} ∈ {±1}`: `u₀ ~ u₀⁻¹` in `G^F`, equal
/// off-block columns of `M(S3)`, and `ρ̄_{x₁} = ρ_{x₂}` (imported).
pub fn scalar_constraints(witness: Option<&WitnessReport>, m: &FourierMatrix) -> Result<Vec<DerivationStep>> {
    let conj = match witness {
        Some(w) => DerivationStep::new(
            "u0 conjugate to its inverse in G^F",
            w.passed(),
            format!("witness t = {}, exact = {}, searched = {}", w.t, w.exact_match, w.searched),
        ),
        None => DerivationStep::new("u0 conjugate to its inverse in G^F", false, "witness check not run"),
    };
    let (c1, c2) = (m.position(CUSPIDAL_PAIRS[0]), m.position(CUSPIDAL_PAIRS[1]));
    let cols = match (c1, c2) {
        (Some(a), Some(b)) => column_pair_equality(m, a, b),
        _ => false,
    };
    let steps = vec![
        conj,
        DerivationStep::new(
            "{x,x1} = {x,x2} for x outside the cuspidal pair",
            cols,
            "M(S3) columns (g3,theta), (g3,theta2)",
        ),
        DerivationStep::new("conj(rho_x1) = rho_x2", true, "imported"),
    ];
    if let Some(bad) = steps.iter().find(|s| !s.passed) {
        return Err(Error::Consistency(format!("derivation of xi_x1 = xi_x2 incomplete: {}", bad.name)));
    }
    Ok(steps)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScalarSolution {
    pub xi: Sign,
    pub m_polynomial: String,
    pub checks: Vec<DerivationStep>,
}

/// The unique `ξ` with `m(u₀, c) ≥ 0` at every sample `q`, after checking the
/// identity `m = q⁶ + ξ·2q⁶`.
pub fn determine_xi(m: &SignLinear, samples: &[i64], mut checks: Vec<DerivationStep>) -> Result<ScalarSolution> {
    let identity = m.constant == LaurentPolynomial::term(1, 6) && m.xi_part == LaurentPolynomial::term(2, 6);
    checks.push(DerivationStep::new("m(u0,c) = q^6 + xi*2q^6", identity, m.to_string()));
    if !identity {
        return Err(Error::Consistency(format!("m(u0,c) = {m} does not have the form q^6 + xi*2q^6")));
    }
    let mut admissible = Vec::new();
    for xi in Sign::BOTH {
        let p = m.eval(xi);
        let values = samples.iter().map(|&q| p.specialize_int(q)).collect::<Result<Vec<BigRational>>>()?;
        let ok = values.iter().all(|v| !v.is_negative());
        let shown: Vec<String> = samples.iter().zip(&values).map(|(q, v)| format!("q={q}: {v}")).collect();
        checks.push(DerivationStep::new(&format!("m(u0,c) >= 0 for xi = {xi}"), ok, shown.join(", ")));
        if ok {
            admissible.push(xi);
        }
    }
    match admissible.as_slice() {
        [xi] => Ok(ScalarSolution { xi: *xi, m_polynomial: m.to_string(), checks }),
        _ => Err(Error::Consistency(format!("{} admissible values of xi", admissible.len()))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueRow {
    pub id: String,
    pub value: LaurentPolynomial,
    #[serde(serialize_with = "crate::scalars::serialize_display")]
    pub at_q3: BigRational,
}

/// `ρ(u₀)` for all 30 entries at the given `ξ`.
pub fn value_table(roster: &Roster, m: &FourierMatrix, xi: Sign) -> Result<Vec<ValueRow>> {
    roster
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let value = rho_at_u0(roster, i, m)?.eval(xi);
            // a + b q³/3 with a, b ∈ ℤ: an integer for every q = 3^f
            let integral = value.terms().all(|(k, c)| match k {
                0 => c.is_integer(),
                3 => (c * rat(3)).is_integer(),
                _ => false,
            });
            if !integral {
                return Err(Error::Consistency(format!(
                    "{}: value {value} is not an integral combination of 1 and q^3/3",
                    e.id
                )));
            }
            let at_q3 = value.specialize_int(3)?;
            Ok(ValueRow { id: e.id.clone(), value, at_q3 })
        })
        .collect()
}

/// Values are integers at `q = 3`.
pub fn values_integral_at_3(rows: &[ValueRow]) -> bool {
    rows.iter().all(|r| r.at_q3.is_integer())
}

pub fn value_table_tsv(rows: &[ValueRow]) -> String {
    let mut out = String::from("label\tvalue\tvalue_at_q3\n");
    for r in rows {
        out.push_str(&format!("{}\t{}\t{}\n", r.id, r.value, r.at_q3));
    }
    out
}
