//! Command-line front end: subcommands over the verification pipeline.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::borel::{verify_witness, BorelGroup};
use crate::error::{Error, Result};
use crate::fourier::{fourier_matrix, FiniteGroupModel, GroupSpec};
use crate::hecke::{load_character_data, trace_combination, HeckeAlgebra};
use crate::pipeline::{self, Check, Config};
use crate::rootdata::{roots_tsv, smith_normal_form};
use crate::unipchars::{value_table_tsv, DEFAULT_Q_SAMPLES};
use crate::weyl::{coxeter_word, WeylData};
use crate::Case;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Untwisted,
    Twisted,
    Both,
}

impl CaseArg {
    fn cases(self) -> Vec<Case> {
        match self {
            CaseArg::Untwisted => vec![Case::Untwisted],
            CaseArg::Twisted => vec![Case::Twisted],
            CaseArg::Both => Case::BOTH.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "unipotent-e6",
    version,
    about = "Exact verification of unipotent character values at regular unipotent elements of E6(q) and 2E6(q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Directory holding hecke_*.tsv and roster_*.tsv.
    #[arg(long, global = true, default_value = "data")]
    pub data_dir: PathBuf,

    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Values of q (powers of 3) for the non-negativity test.
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_power_of_three)]
    pub q_samples: Option<Vec<i64>>,

    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The E6 root system and Cartan data.
    Roots,
    /// Character table of W or W^sigma with fake degrees.
    WeylTable(CaseOpt),
    /// Conjugacy of u0 to its inverse inside B^F.
    VerifyConjugacy(CaseOpt),
    /// Fourier matrix of M(G) for G in {trivial, z2, z3, s3}.
    Fourier {
        #[arg(long, default_value = "s3")]
        group: String,
    },
    /// Hecke relations and validation of the trace data.
    HeckeCheck(CaseOpt),
    /// The scalar xi from m(u0, c) >= 0.
    DetermineXi(CaseOpt),
    /// Values of all unipotent characters at u0.
    UnipotentValues(CaseOpt),
    /// The whole chain as one JSON document.
    FullReport(CaseOpt),
}

#[derive(Args, Debug)]
pub struct CaseOpt {
    #[arg(long, value_enum, default_value = "both")]
    pub case: CaseArg,
}

fn parse_power_of_three(s: &str) -> std::result::Result<i64, String> {
    let q: i64 = s.trim().parse().map_err(|e| format!("'{s}': {e}"))?;
    let mut r = q;
    while r > 1 && r % 3 == 0 {
        r /= 3;
    }
    if q >= 3 && r == 1 {
        Ok(q)
    } else {
        Err(format!("{q} is not a power of 3"))
    }
}

/// Output of one subcommand: text for stdout and whether every check passed.
pub struct Outcome {
    pub output: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl Outcome {
    fn from_checks(output: String, checks: &[Check]) -> Self {
        let failures: Vec<String> =
            checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.details)).collect();
        Self { output, passed: failures.is_empty(), failures }
    }
}

fn json_string(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn checks_text(checks: &[Check]) -> String {
    checks.iter().map(|c| format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.details)).collect()
}

fn checks_tsv(checks: &[Check]) -> String {
    let mut out = String::from("name\tstatus\tdetails\n");
    for c in checks {
        out.push_str(&format!("{}\t{}\t{}\n", c.name, if c.passed { "pass" } else { "fail" }, c.details));
    }
    out
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    let samples = g.q_samples.clone().unwrap_or_else(|| DEFAULT_Q_SAMPLES.to_vec());
    let rs = pipeline::e6_root_system()?;
    match &cli.command {
        Command::Roots => {
            let c = rs.cartan();
            let highest = rs.highest_root().coords.clone();
            let check = pipeline::root_datum_check(&rs);
            let out = match g.format.unwrap_or(Format::Json) {
                Format::Tsv => roots_tsv(&rs),
                Format::Text => checks_text(std::slice::from_ref(&check)),
                Format::Json => json_string(&json!({
                    "rank": rs.rank(),
                    "roots": rs.len(),
                    "positive_roots": rs.n_positive(),
                    "highest_root": highest,
                    "cartan": c.rows(),
                    "determinant": c.determinant(),
                    "smith_diagonal": smith_normal_form(c.rows()).diagonal(),
                    "check": check,
                })),
            };
            Ok(Outcome::from_checks(out, &[check]))
        }
        Command::WeylTable(o) => {
            let mut out = String::new();
            let mut checks = Vec::new();
            let mut docs = Vec::new();
            for case in o.case.cases() {
                let wd = WeylData::build(&rs, case)?;
                let check = pipeline::weyl_check(&wd);
                match g.format.unwrap_or(Format::Tsv) {
                    Format::Tsv => {
                        out.push_str(&format!("# case: {}\n", case.data_tag()));
                        out.push_str(&wd.table_tsv());
                    }
                    Format::Text => out.push_str(&checks_text(std::slice::from_ref(&check))),
                    Format::Json => docs.push(json!({
                        "case": case,
                        "order": wd.group.order(),
                        "class_sizes": wd.classes.sizes,
                        "class_representatives": wd.classes.reps.iter().map(|&w| wd.group.reduced_word(w)).collect::<Vec<_>>(),
                        "labels": wd.table.labels,
                        "fake_degrees": wd.table.fake_degrees.polys,
                        "degrees": wd.table.fake_degrees.degrees,
                        "values": wd.table.values,
                        "check": check,
                    })),
                }
                checks.push(check);
            }
            if !docs.is_empty() {
                out = json_string(&docs);
            }
            Ok(Outcome::from_checks(out, &checks))
        }
        Command::VerifyConjugacy(o) => {
            let mut reports = Vec::new();
            let mut checks = Vec::new();
            for case in o.case.cases() {
                let r = verify_witness(&BorelGroup::new(&rs, case)?)?;
                checks.push(Check::new(
                    format!("borel/{case}"),
                    "(ut) u0 (ut)^-1 = u0^-1",
                    r.passed(),
                    format!("exact {}, searched {}", r.exact_match, r.searched),
                ));
                reports.push(r);
            }
            let out = match g.format.unwrap_or(Format::Json) {
                Format::Json => json_string(&reports),
                Format::Text | Format::Tsv => reports
                    .iter()
                    .map(|r| {
                        format!(
                            "{}\tu0={}\tt={}\tu={}\texact={}\tsearched={}\tpassed={}\n",
                            r.case,
                            r.u0,
                            r.t,
                            r.u,
                            r.exact_match,
                            r.searched,
                            r.passed()
                        )
                    })
                    .collect(),
            };
            Ok(Outcome::from_checks(out, &checks))
        }
        Command::Fourier { group } => {
            let spec: GroupSpec = group.parse()?;
            let m = fourier_matrix(&FiniteGroupModel::build(spec)?)?;
            let out = match g.format.unwrap_or(Format::Tsv) {
                Format::Tsv | Format::Text => m.to_tsv(),
                Format::Json => json_string(&json!({
                    "group": spec,
                    "pairs": m.index.iter().map(|p| p.label()).collect::<Vec<_>>(),
                    "entries": m.entries.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })),
            };
            let checks = if spec == GroupSpec::S3 { vec![pipeline::fourier_check(&m)] } else { vec![] };
            Ok(Outcome::from_checks(out, &checks))
        }
        Command::HeckeCheck(o) => {
            let mut checks = Vec::new();
            let mut docs = Vec::new();
            for case in o.case.cases() {
                let wd = WeylData::build(&rs, case)?;
                let h = HeckeAlgebra::for_case(&wd.group, case)?;
                let path = pipeline::hecke_path(&g.data_dir, case);
                let data = load_character_data(&path, &wd, &h);
                let cs = pipeline::hecke_checks(&wd, &data);
                let word = coxeter_word(case);
                docs.push(json!({
                    "case": case,
                    "file": path.display().to_string(),
                    "sha256": pipeline::sha256_file(&path).ok(),
                    "rows": data.as_ref().map(|d| d.rows.len()).ok(),
                    "coxeter_word": word.iter().map(|s| s + 1).collect::<Vec<_>>(),
                    "index_trace": h.index_trace_word(&word),
                    "trace_combination": data.as_ref().ok().and_then(|d| trace_combination(d, &word).ok()),
                    "checks": cs,
                }));
                checks.extend(cs);
            }
            let out = match g.format.unwrap_or(Format::Json) {
                Format::Json => json_string(&docs),
                Format::Tsv => checks_tsv(&checks),
                Format::Text => checks_text(&checks),
            };
            Ok(Outcome::from_checks(out, &checks))
        }
        Command::DetermineXi(o) | Command::UnipotentValues(o) => {
            let m = pipeline::s3_fourier()?;
            let mut checks = Vec::new();
            let mut docs = Vec::new();
            let mut tsv = String::new();
            let values = matches!(cli.command, Command::UnipotentValues(_));
            for case in o.case.cases() {
                let run = pipeline::run_case(&rs, &m, case, &g.data_dir, &samples)?;
                let relevant: Vec<Check> = run
                    .checks
                    .into_iter()
                    .filter(|c| {
                        c.name.starts_with("hecke/")
                            || c.name.starts_with("roster/")
                            || c.name.starts_with("borel/")
                            || c.name.starts_with("xi/")
                            || (values && c.name.starts_with("values/"))
                    })
                    .collect();
                match &run.outcome {
                    Ok(out) if values => {
                        tsv.push_str(&format!("# case: {}\n", case.data_tag()));
                        tsv.push_str(&value_table_tsv(&out.values));
                        docs.push(json!({"case": case, "xi": out.solution.xi, "values": out.values}));
                    }
                    Ok(out) => docs.push(json!({
                        "case": case,
                        "xi": out.solution.xi,
                        "m_polynomial": out.solution.m_polynomial,
                        "checks": out.solution.checks,
                    })),
                    Err(e) => docs.push(json!({"case": case, "error": e.to_string()})),
                }
                checks.extend(relevant);
            }
            let default = if values { Format::Tsv } else { Format::Json };
            let out = match g.format.unwrap_or(default) {
                Format::Json => json_string(&docs),
                Format::Tsv if values => tsv,
                Format::Tsv => checks_tsv(&checks),
                Format::Text => checks_text(&checks),
            };
            Ok(Outcome::from_checks(out, &checks))
        }
        Command::FullReport(o) => {
            let report = pipeline::full_report(&Config {
                cases: o.case.cases(),
                data_dir: g.data_dir.clone(),
                q_samples: samples,
            })?;
            let out = match g.format.unwrap_or(Format::Json) {
                Format::Json => json_string(&report),
                Format::Tsv => checks_tsv(&report.checks),
                Format::Text => checks_text(&report.checks),
            };
            Ok(Outcome::from_checks(out, &report.checks))
        }
    }
}

/// Runs the CLI and returns the process exit code: 0 if every check passed,
/// 1 on a failed check or error, 2 on usage errors.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(stderr, "{}", e.render());
            // --help and --version exit 0
            return if code == 0 { 0 } else { 2 };
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            let _ = writeln!(stderr, "error: --jobs must be positive");
            return 2;
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match execute(&cli) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.output.as_bytes());
            for f in &outcome.failures {
                let _ = writeln!(stderr, "check failed: {f}");
            }
            i32::from(!outcome.passed)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, Error::Parse(_)) && matches!(cli.command, Command::Fourier { .. }) {
                2
            } else {
                1
            }
        }
    }
}
