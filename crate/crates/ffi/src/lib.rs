//! C interface. Every entry point returns a [`Ue6Status`]; on failure the
//! message is available from [`ue6_last_error`] on the same thread. Strings
//! handed out by the library are released with [`ue6_string_free`]. Case
//! arguments are [`Ue6Case`] values passed as `int32_t`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use unipotent_e6::error::Error;
use unipotent_e6::fourier::{fourier_matrix, FiniteGroupModel, FourierMatrix, GroupSpec};
use unipotent_e6::pipeline::{e6_root_system, full_report, run_case, s3_fourier, CaseOutcome, CaseRun, Config};
use unipotent_e6::rootdata::RootSystem;
use unipotent_e6::unipchars::{value_table_tsv, DEFAULT_Q_SAMPLES};
use unipotent_e6::Case;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ue6Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Io = 3,
    Parse = 4,
    Rejected = 5,
    Consistency = 6,
    Missing = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ue6Case {
    Untwisted = 0,
    Twisted = 1,
}

/// Case arguments arrive as plain integers so that an out-of-range value
/// is an error rather than undefined behavior.
fn case_arg(c: i32) -> Result<Case, Failure> {
    match c {
        c if c == Ue6Case::Untwisted as i32 => Ok(Case::Untwisted),
        c if c == Ue6Case::Twisted as i32 => Ok(Case::Twisted),
        _ => Err(Failure(Ue6Status::InvalidArgument, format!("unknown case {c}"))),
    }
}

/// Opaque handle holding the data directory and per-case results.
pub struct Ue6Context {
    data_dir: PathBuf,
    q_samples: Vec<i64>,
    rs: RootSystem,
    fourier: FourierMatrix,
    runs: [Option<CaseRun>; 2],
}

impl Ue6Context {
    fn run(&mut self, case: Case) -> Result<&CaseRun, Error> {
        let slot = case as usize;
        if self.runs[slot].is_none() {
            self.runs[slot] = Some(run_case(&self.rs, &self.fourier, case, &self.data_dir, &self.q_samples)?);
        }
        Ok(self.runs[slot].as_ref().expect("just filled"))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(Ue6Status, String);

impl From<&Error> for Failure {
    fn from(e: &Error) -> Self {
        let status = match e {
            Error::Io { .. } => Ue6Status::Io,
            Error::Parse(_) => Ue6Status::Parse,
            Error::Rejected(_) => Ue6Status::Rejected,
            Error::Missing(_) => Ue6Status::Missing,
            Error::Domain(_) => Ue6Status::InvalidArgument,
            _ => Ue6Status::Consistency,
        };
        Failure(status, e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(&e)
    }
}

/// The evaluated outcome, or the first input error that prevented it.
fn outcome(run: &CaseRun) -> Result<&CaseOutcome, Failure> {
    run.data.as_ref().map_err(Failure::from)?;
    run.roster.as_ref().map_err(Failure::from)?;
    run.outcome.as_ref().map_err(Failure::from)
}

fn null(what: &str) -> Failure {
    Failure(Ue6Status::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> Ue6Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            Ue6Status::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            Ue6Status::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure(Ue6Status::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn ctx_arg<'a>(p: *mut Ue6Context) -> Result<&'a mut Ue6Context, Failure> {
    p.as_mut().ok_or_else(|| null("context"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(Ue6Status::Consistency, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Creates a context reading data files from `data_dir`.
///
/// # Safety
/// `data_dir` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ue6_context_new(data_dir: *const c_char, out: *mut *mut Ue6Context) -> Ue6Status {
    guard(|| {
        let dir = str_arg(data_dir, "data_dir")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let ctx = Ue6Context {
            data_dir: PathBuf::from(dir),
            q_samples: DEFAULT_Q_SAMPLES.to_vec(),
            rs: e6_root_system()?,
            fourier: s3_fourier()?,
            runs: [None, None],
        };
        *out = Box::into_raw(Box::new(ctx));
        Ok(())
    })
}

/// # Safety
/// `ctx` must come from [`ue6_context_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ue6_context_free(ctx: *mut Ue6Context) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Replaces the sample values of `q` used for the sign test. Each must be a
/// power of 3 that is at least 3. Discards cached results.
///
/// # Safety
/// `samples` must point to `len` readable values.
#[no_mangle]
pub unsafe extern "C" fn ue6_context_set_q_samples(ctx: *mut Ue6Context, samples: *const i64, len: usize) -> Ue6Status {
    guard(|| {
        let ctx = ctx_arg(ctx)?;
        if samples.is_null() {
            return Err(null("samples"));
        }
        let v = std::slice::from_raw_parts(samples, len).to_vec();
        let power_of_three = |mut q: i64| {
            if q < 3 {
                return false;
            }
            while q % 3 == 0 {
                q /= 3;
            }
            q == 1
        };
        if v.is_empty() || !v.iter().all(|&q| power_of_three(q)) {
            return Err(Failure(Ue6Status::InvalidArgument, format!("q samples {v:?} are not powers of 3")));
        }
        ctx.q_samples = v;
        ctx.runs = [None, None];
        Ok(())
    })
}

/// Writes the determined sign `ξ` (`1` or `-1`) to `out`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ue6_determine_xi(ctx: *mut Ue6Context, case: i32, out: *mut i32) -> Ue6Status {
    guard(|| {
        let ctx = ctx_arg(ctx)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let run = ctx.run(case_arg(case)?)?;
        let o = outcome(run)?;
        *out = o.solution.xi.as_i64() as i32;
        Ok(())
    })
}

/// `m(u₀, c)` as a string such as `1*q^6 + xi*(2*q^6)`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ue6_m_polynomial(ctx: *mut Ue6Context, case: i32, out: *mut *mut c_char) -> Ue6Status {
    guard(|| {
        let ctx = ctx_arg(ctx)?;
        let run = ctx.run(case_arg(case)?)?;
        let o = outcome(run)?;
        put_string(out, o.m.to_string())
    })
}

/// The value table at `u₀` as TSV (`label`, `value`, `value_at_q3`).
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ue6_unipotent_values_tsv(ctx: *mut Ue6Context, case: i32, out: *mut *mut c_char) -> Ue6Status {
    guard(|| {
        let ctx = ctx_arg(ctx)?;
        let run = ctx.run(case_arg(case)?)?;
        let o = outcome(run)?;
        put_string(out, value_table_tsv(&o.values))
    })
}

/// The full verification report for both cases as JSON. A report with
/// failing checks is still returned, with status
/// [`Ue6Status::Consistency`].
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ue6_full_report_json(ctx: *mut Ue6Context, out: *mut *mut c_char) -> Ue6Status {
    guard(|| {
        let ctx = ctx_arg(ctx)?;
        let config =
            Config { cases: Case::BOTH.to_vec(), data_dir: ctx.data_dir.clone(), q_samples: ctx.q_samples.clone() };
        let report = full_report(&config)?;
        let json = serde_json::to_string_pretty(&report).map_err(|e| Failure(Ue6Status::Consistency, e.to_string()))?;
        put_string(out, json)?;
        if report.passed() {
            Ok(())
        } else {
            Err(Failure(Ue6Status::Consistency, format!("failed checks: {}", report.summary.failed.join(", "))))
        }
    })
}

/// Fourier matrix of `M(G)` as TSV for `group` in `trivial`, `z2`, `z3`,
/// `s3`.
///
/// # Safety
/// `group` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ue6_fourier_matrix_tsv(group: *const c_char, out: *mut *mut c_char) -> Ue6Status {
    guard(|| {
        let name = str_arg(group, "group")?;
        let spec: GroupSpec = name.parse().map_err(|e: Error| Failure(Ue6Status::InvalidArgument, e.to_string()))?;
        let m = fourier_matrix(&FiniteGroupModel::build(spec)?)?;
        put_string(out, m.to_tsv())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ue6_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ue6_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn ue6_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}
