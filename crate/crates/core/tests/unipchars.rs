use std::path::PathBuf;
use std::sync::OnceLock;

use unipotent_e6::borel::{search_witness, verify_witness, BorelElement, BorelGroup};
use unipotent_e6::error::Error;
use unipotent_e6::fourier::FourierMatrix;
use unipotent_e6::hecke::{load_character_data, HeckeAlgebra};
use unipotent_e6::pipeline::{e6_root_system, evaluate, hecke_path, roster_path, s3_fourier};
use unipotent_e6::rootdata::RootSystem;
use unipotent_e6::scalars::{LaurentPolynomial, Sign, SignLinear};
use unipotent_e6::unipchars::EntrySource;
use unipotent_e6::unipchars::{
    chi_orthonormality, chi_tables, determine_xi, parse_roster, scalar_constraints, value_table, Roster,
};
use unipotent_e6::weyl::WeylData;
use unipotent_e6::Case;

fn roots() -> &'static RootSystem {
    static RS: OnceLock<RootSystem> = OnceLock::new();
    RS.get_or_init(|| e6_root_system().unwrap())
}

fn weyl(case: Case) -> &'static WeylData {
    static W: OnceLock<[WeylData; 2]> = OnceLock::new();
    &W.get_or_init(|| Case::BOTH.map(|c| WeylData::build(roots(), c).unwrap()))[case as usize]
}

fn roster_text(case: Case) -> String {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    std::fs::read_to_string(roster_path(&dir, case)).unwrap()
}

fn validated(text: &str, case: Case, m: &FourierMatrix) -> unipotent_e6::error::Result<Roster> {
    let r = parse_roster(text, case)?;
    r.validate(weyl(case), m)?;
    Ok(r)
}

fn edit(text: &str, id: &str, f: impl Fn(&str) -> String) -> String {
    text.lines()
        .map(|l| if l.starts_with(&format!("{id}\t")) { f(l) } else { l.to_string() })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn shipped_rosters_validate() {
    let m = s3_fourier().unwrap();
    for case in Case::BOTH {
        let r = validated(&roster_text(case), case, &m).unwrap();
        assert_eq!(r.entries.len(), 30);
        assert_eq!(r.family().len(), 8);
    }
}

#[test]
fn roster_for_wrong_case_is_rejected() {
    let err = parse_roster(&roster_text(Case::Untwisted), Case::Twisted).unwrap_err();
    assert!(matches!(err, Error::Rejected(_)), "{err}");
}

#[test]
fn roster_without_header_is_a_parse_error() {
    let text: String =
        roster_text(Case::Untwisted).lines().filter(|l| !l.starts_with("# case")).collect::<Vec<_>>().join("\n");
    assert!(matches!(parse_roster(&text, Case::Untwisted), Err(Error::Parse(_))));
}

#[test]
fn missing_entry_is_rejected() {
    let m = s3_fourier().unwrap();
    let text: String =
        roster_text(Case::Untwisted).lines().filter(|l| !l.starts_with("phi_6_25\t")).collect::<Vec<_>>().join("\n");
    let err = validated(&text, Case::Untwisted, &m).unwrap_err();
    assert!(err.to_string().contains("30"), "{err}");
}

#[test]
fn duplicate_pair_is_rejected() {
    let m = s3_fourier().unwrap();
    let text = edit(&roster_text(Case::Untwisted), "phi_60_8", |l| l.replace("(g2,1)", "(1,1)"));
    assert!(validated(&text, Case::Untwisted, &m).is_err());
}

#[test]
fn wrong_sign_pattern_is_rejected() {
    let m = s3_fourier().unwrap();
    // (1,1) and (1,r) carry coefficients 2/3 and -2/3.
    let text = edit(&roster_text(Case::Untwisted), "phi_80_7", |l| l.replace("(1,1)", "(1,r)"));
    let text = edit(&text, "phi_90_8", |l| l.replace("(1,r)", "(1,1)"));
    let err = validated(&text, Case::Untwisted, &m).unwrap_err();
    assert!(err.to_string().contains("cuspidal coefficient"), "{err}");
}

#[test]
fn sign_equivalent_exchange_is_accepted() {
    let m = s3_fourier().unwrap();
    let r = validated(&roster_text(Case::Untwisted), Case::Untwisted, &m).unwrap();
    let ex = r.exchange_pairs("phi_90_8", "phi_10_9").unwrap();
    ex.validate(weyl(Case::Untwisted), &m).unwrap();
    assert!(r.exchange_pairs("phi_90_8", "nope").is_err());
}

#[test]
fn unknown_source_is_a_parse_error() {
    let text = edit(&roster_text(Case::Twisted), "phi_1_0", |l| l.replace("\tirr\t", "\tprincipal\t"));
    assert!(matches!(parse_roster(&text, Case::Twisted), Err(Error::Parse(_))));
}

#[test]
fn chi_functions() {
    let t = chi_tables();
    assert!(t.values.iter().all(|row| row[0].is_zero()));
    assert_eq!(t.values[0][1], t.values[1][1]);
    assert_eq!(t.values[0][2], t.values[1][3]);
    assert_eq!(t.values[0][2].conj(), t.values[0][3]);
    assert!(chi_orthonormality());
}

#[test]
fn scalar_constraints_need_the_witness() {
    let m = s3_fourier().unwrap();
    let err = scalar_constraints(None, &m).unwrap_err();
    assert!(err.to_string().contains("incomplete"), "{err}");
    let bg = BorelGroup::new(roots(), Case::Untwisted).unwrap();
    let w = verify_witness(&bg).unwrap();
    assert_eq!(scalar_constraints(Some(&w), &m).unwrap().len(), 3);
}

#[test]
fn determine_xi_requires_the_identity() {
    let good = SignLinear::new(LaurentPolynomial::term(1, 6), LaurentPolynomial::term(2, 6));
    let s = determine_xi(&good, &[3, 9, 27], Vec::new()).unwrap();
    assert_eq!(s.xi, Sign::Plus);
    assert_eq!(s.checks.iter().filter(|c| !c.passed).count(), 1);

    let shifted = SignLinear::new(LaurentPolynomial::term(1, 6), LaurentPolynomial::term(2, 7));
    assert!(determine_xi(&shifted, &[3], Vec::new()).is_err());
    let flipped = SignLinear::new(LaurentPolynomial::term(1, 6), LaurentPolynomial::term(-2, 6));
    assert!(determine_xi(&flipped, &[3], Vec::new()).is_err());
}

#[test]
fn value_tables_at_both_signs() {
    let m = s3_fourier().unwrap();
    let r = validated(&roster_text(Case::Untwisted), Case::Untwisted, &m).unwrap();
    let plus = value_table(&r, &m, Sign::Plus).unwrap();
    let minus = value_table(&r, &m, Sign::Minus).unwrap();
    for (p, n) in plus.iter().zip(&minus) {
        if p.id == "phi_1_0" {
            assert_eq!(p.value, n.value);
        } else {
            assert_eq!(p.value, -&n.value);
        }
    }
    let total: i64 = plus.iter().map(|row| row.at_q3.to_integer().try_into().unwrap_or(i64::MAX)).sum();
    // 1 + 2·9 + 2·18 − 2·18 = 19
    assert_eq!(total, 19);
}

#[test]
fn witness_search_finds_a_conjugator() {
    for case in Case::BOTH {
        let bg = BorelGroup::new(roots(), case).unwrap();
        let g: BorelElement = search_witness(&bg).expect("search succeeds");
        let u0 = bg.build_u0();
        assert_eq!(bg.borel_conjugate(&g, &u0), bg.inverse(&u0));
        assert_eq!(bg.frobenius_borel(&g), g);
    }
}

/// The three non-principal-series slots of the twisted roster carry
/// placeholder names. Renaming them or permuting their pairs leaves m and xi
/// unchanged, and only moves their own values.
#[test]
fn twisted_placeholders_do_not_influence_xi() {
    let case = Case::Twisted;
    let wd = weyl(case);
    let m = s3_fourier().unwrap();
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
    let data = load_character_data(&hecke_path(&dir, case), wd, &h).unwrap();
    let witness = verify_witness(&BorelGroup::new(roots(), case).unwrap()).unwrap();
    let base_roster = validated(&roster_text(case), case, &m).unwrap();
    let base = evaluate(wd, &m, Some(&witness), &data, &base_roster, &[3, 9, 27]).unwrap();

    let others: Vec<usize> = (0..30).filter(|&i| base_roster.entries[i].source == EntrySource::Other).collect();
    assert_eq!(others.len(), 3);
    let pairs: Vec<Option<String>> = others.iter().map(|&i| base_roster.entries[i].mpair.clone()).collect();
    for shift in 0..3 {
        let mut r = base_roster.clone();
        for (k, &i) in others.iter().enumerate() {
            r.entries[i].id = format!("placeholder_{k}");
            r.entries[i].mpair = pairs[(k + shift) % 3].clone();
        }
        r.validate(wd, &m).unwrap();
        let o = evaluate(wd, &m, Some(&witness), &data, &r, &[3, 9, 27]).unwrap();
        assert_eq!(o.m, base.m);
        assert_eq!(o.solution.xi, base.solution.xi);
        for i in (0..30).filter(|i| !others.contains(i)) {
            assert_eq!(o.values[i].value, base.values[i].value);
        }
    }
}
