use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier::{FourierMatrix, CUSPIDAL_PAIRS};
use crate::hecke::combination_labels;
use crate::scalars::{rat, ratio};
use crate::weyl::{CharLabel, WeylData};
use crate::Case;

pub const ROSTER_SIZE: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "label", rename_all = "lowercase")]
pub enum EntrySource {
    Irr(CharLabel),
    Cuspidal,
    Other,
}

/// One element of `X̄(W,σ)`, i.e. one unipotent character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterSetEntry {
    pub id: String,
    pub source: EntrySource,
    pub family: String,
    /// Label of the `M(S3)` pair, for members of the S3 family.
    pub mpair: Option<String>,
    pub delta: i8,
    pub line: usize,
}

impl ParameterSetEntry {
    pub fn irr_label(&self) -> Option<CharLabel> {
        match self.source {
            EntrySource::Irr(l) => Some(l),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Roster {
    pub case: Case,
    pub provenance: Vec<String>,
    pub entries: Vec<ParameterSetEntry>,
}

impl Roster {
    pub fn position(&self, id: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.id == id)
    }

    pub fn entry_for(&self, label: &CharLabel) -> Option<&ParameterSetEntry> {
        self.entries.iter().find(|e| e.irr_label() == Some(*label))
    }

    /// The S3 family: entry index and pair label.
    pub fn family(&self) -> Vec<(usize, &str)> {
        self.entries.iter().enumerate().filter_map(|(i, e)| e.mpair.as_deref().map(|p| (i, p))).collect()
    }

    /// `{x̄, x₁} + {x̄, x₂}`: the sum of the two cuspidal columns of `M(S3)`
    /// on the entry's row, 0 outside the S3 family.
    pub fn cuspidal_coefficient(&self, i: usize, m: &FourierMatrix) -> Result<BigRational> {
        let Some(pair) = &self.entries[i].mpair else {
            return Ok(rat(0));
        };
        let mut sum = rat(0);
        for col in CUSPIDAL_PAIRS {
            let v = m.entry(pair, col).ok_or_else(|| Error::Rejected(format!("unknown pair {pair}")))?;
            if !v.is_rational() {
                return Err(Error::Consistency(format!("irrational Fourier entry at {pair}, {col}")));
            }
            sum += &v.a;
        }
        Ok(sum)
    }

    /// The same roster with `'` and `''` tags exchanged on the `W^σ` labels.
    pub fn with_swapped_tags(&self) -> Self {
        let mut r = self.clone();
        for e in &mut r.entries {
            if let EntrySource::Irr(l) = e.source {
                e.source = EntrySource::Irr(l.swapped());
                e.id = l.swapped().to_string();
            }
        }
        r
    }

    /// Exchanges the `M(S3)` pairs of two entries.
    pub fn exchange_pairs(&self, a: &str, b: &str) -> Result<Self> {
        let (i, j) = match (self.position(a), self.position(b)) {
            (Some(i), Some(j)) => (i, j),
            _ => return Err(Error::Domain(format!("no roster entries {a}, {b}"))),
        };
        let mut r = self.clone();
        let p = r.entries[i].mpair.take();
        r.entries[i].mpair = r.entries[j].mpair.take();
        r.entries[j].mpair = p;
        Ok(r)
    }

    /// Cardinalities, label coverage, the S3 family layout, and the sign
    /// pattern of the cuspidal coefficients against the combination used in
    /// the Hecke module.
    pub fn validate(&self, wd: &WeylData, m: &FourierMatrix) -> Result<()> {
        let reject = |msg: String| Err(Error::Rejected(msg));
        if self.entries.len() != ROSTER_SIZE {
            return reject(format!("roster has {} entries, expected {ROSTER_SIZE}", self.entries.len()));
        }
        let count = |f: fn(&EntrySource) -> bool| self.entries.iter().filter(|e| f(&e.source)).count();
        let (irr, cusp, other) = (
            count(|s| matches!(s, EntrySource::Irr(_))),
            count(|s| matches!(s, EntrySource::Cuspidal)),
            count(|s| matches!(s, EntrySource::Other)),
        );
        if (irr, cusp, other) != (wd.table.len(), 2, 3) {
            return reject(format!(
                "roster has {irr} irr / {cusp} cuspidal / {other} other entries, expected 25 / 2 / 3"
            ));
        }
        let mut ids = BTreeSet::new();
        for e in &self.entries {
            if !ids.insert(e.id.as_str()) {
                return reject(format!("line {}: duplicate id {}", e.line, e.id));
            }
            if e.delta != 1 {
                return reject(format!("line {}: sign Δ = {} is not supported", e.line, e.delta));
            }
        }
        for label in &wd.table.labels {
            if self.entry_for(label).is_none() {
                return reject(format!("character {label} has no roster entry"));
            }
        }
        for e in &self.entries {
            if let Some(l) = e.irr_label() {
                if wd.table.position(&l).is_none() {
                    return reject(format!("line {}: unknown character label {l}", e.line));
                }
            }
        }
        let family = self.family();
        let pairs: BTreeSet<&str> = family.iter().map(|&(_, p)| p).collect();
        let all: BTreeSet<String> = m.index.iter().map(|p| p.label()).collect();
        if family.len() != m.size() || pairs.len() != m.size() || pairs.iter().any(|p| !all.contains(*p)) {
            return reject(format!("S3 family does not cover the {} pairs of M(S3) exactly once", m.size()));
        }
        for e in &self.entries {
            if e.source == EntrySource::Cuspidal && !CUSPIDAL_PAIRS.contains(&e.mpair.as_deref().unwrap_or("-")) {
                return reject(format!("line {}: cuspidal entry {} is not on a cuspidal pair", e.line, e.id));
            }
        }
        let expected: BTreeMap<CharLabel, i64> = combination_labels(self.case).into_iter().collect();
        for (i, e) in self.entries.iter().enumerate() {
            let Some(l) = e.irr_label() else { continue };
            let want = ratio(2 * expected.get(&l).copied().unwrap_or(0), 3);
            let got = self.cuspidal_coefficient(i, m)?;
            if got != want {
                return reject(format!(
                    "line {}: {} has cuspidal coefficient {got}, the m-formula requires {want}",
                    e.line, e.id
                ));
            }
        }
        Ok(())
    }
}

pub fn parse_roster(text: &str, case: Case) -> Result<Roster> {
    let mut header = None;
    let mut provenance = Vec::new();
    let mut entries = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let l = raw.trim_end();
        if l.trim().is_empty() {
            continue;
        }
        if let Some(c) = l.strip_prefix('#') {
            let c = c.trim();
            match c.strip_prefix("case:") {
                Some(tag) => header = Some(tag.trim().parse::<Case>()?),
                None => provenance.push(c.to_string()),
            }
            continue;
        }
        if header.is_none() {
            return Err(Error::Parse(format!("line {line}: data before the '# case:' header")));
        }
        let f: Vec<&str> = l.split('\t').map(str::trim).collect();
        if f.len() != 4 {
            return Err(Error::Parse(format!("line {line}: expected 4 tab-separated fields, got {}", f.len())));
        }
        let source = match f[1] {
            "irr" => EntrySource::Irr(f[0].parse()?),
            "cuspidal" => EntrySource::Cuspidal,
            "other" => EntrySource::Other,
            s => return Err(Error::Parse(format!("line {line}: unknown source '{s}'"))),
        };
        let mpair = (f[3] != "-").then(|| f[3].to_string());
        entries.push(ParameterSetEntry {
            id: f[0].to_string(),
            source,
            family: f[2].to_string(),
            mpair,
            delta: 1,
            line,
        });
    }
    match header {
        Some(c) if c == case => Ok(Roster { case, provenance, entries }),
        Some(c) => Err(Error::Rejected(format!("roster is for the {c} case, expected {case}"))),
        None => Err(Error::Parse("missing '# case:' header".into())),
    }
}

pub fn load_roster(path: &Path, wd: &WeylData, m: &FourierMatrix) -> Result<Roster> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let roster = parse_roster(&text, wd.case)?;
    roster.validate(wd, m)?;
    Ok(roster)
}
