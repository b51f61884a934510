use std::collections::BTreeMap;
use std::path::Path;

use super::HeckeAlgebra;
use crate::error::{Error, Result};
use crate::scalars::{rat, LaurentPolynomial};
use crate::weyl::{CharLabel, WeylData};
use crate::Case;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub label: CharLabel,
    /// 0-based word in `S_σ`.
    pub word: Vec<usize>,
    pub value: LaurentPolynomial,
    pub line: usize,
}

/// Ingested values `Tr(T_w, V_φ)`.
#[derive(Clone, Debug)]
pub struct HeckeCharacterData {
    pub case: Case,
    /// Comment lines of the file other than the case header.
    pub provenance: Vec<String>,
    pub rows: Vec<TraceRow>,
    index: BTreeMap<(CharLabel, Vec<usize>), usize>,
}

impl HeckeCharacterData {
    pub fn trace(&self, label: &CharLabel, word: &[usize]) -> Option<&LaurentPolynomial> {
        self.index.get(&(*label, word.to_vec())).map(|&i| &self.rows[i].value)
    }

    /// Labels with a value at `word`.
    pub fn labels_at(&self, word: &[usize]) -> Vec<CharLabel> {
        self.rows.iter().filter(|r| r.word == word).map(|r| r.label).collect()
    }

    /// The same data with `'` and `''` tags exchanged.
    pub fn with_swapped_tags(&self) -> Self {
        let rows: Vec<TraceRow> =
            self.rows.iter().map(|r| TraceRow { label: r.label.swapped(), ..r.clone() }).collect();
        let index = rows.iter().enumerate().map(|(i, r)| ((r.label, r.word.clone()), i)).collect();
        Self { case: self.case, provenance: self.provenance.clone(), rows, index }
    }

    /// Checks every row against the `W^σ` character table at `q = 1`, and the
    /// index and sign rows against the one-dimensional representations.
    pub fn validate(&self, wd: &WeylData, hecke: &HeckeAlgebra<'_>) -> Result<()> {
        let g = &wd.group;
        let index_label = CharLabel::new(1, 0);
        let sign_label = CharLabel::new(1, g.max_length() as i32);
        for row in &self.rows {
            let Some(c) = wd.table.position(&row.label) else {
                return Err(Error::Rejected(format!("line {}: unknown character label {}", row.line, row.label)));
            };
            let w = g.word_index(&row.word);
            if g.length(w) != row.word.len() {
                return Err(Error::Rejected(format!(
                    "line {}: word {} is not reduced",
                    row.line,
                    render_word(&row.word)
                )));
            }
            let k = wd.classes.class_of(w);
            let expected = wd.table.values[c][k];
            if row.value.at_one() != rat(expected) {
                return Err(Error::Rejected(format!(
                    "line {}: q→1 value of {} at class {} ({}) is {}, character table gives {}",
                    row.line,
                    row.label,
                    k,
                    render_word(&row.word),
                    row.value.at_one(),
                    expected
                )));
            }
            if row.word.is_empty() && row.value != LaurentPolynomial::from_int(expected) {
                return Err(Error::Rejected(format!(
                    "line {}: identity trace of {} is {}, not the dimension {expected}",
                    row.line, row.label, row.value
                )));
            }
            if row.label == index_label && row.value != hecke.index_trace(w) {
                return Err(Error::Rejected(format!(
                    "line {}: index row {} differs from q-power {}",
                    row.line,
                    row.value,
                    hecke.index_trace(w)
                )));
            }
            if row.label == sign_label && row.value != hecke.sign_trace(w) {
                return Err(Error::Rejected(format!("line {}: sign row {} differs from ±1", row.line, row.value)));
            }
        }
        let missing: Vec<String> =
            wd.table.labels.iter().filter(|l| self.trace(l, &[]).is_none()).map(|l| l.to_string()).collect();
        if !missing.is_empty() {
            return Err(Error::Rejected(format!("no identity row for {}", missing.join(", "))));
        }
        Ok(())
    }
}

pub fn render_word(word: &[usize]) -> String {
    if word.is_empty() {
        "-".into()
    } else {
        word.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_word(s: &str, rank: usize, line: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(i) if (1..=rank).contains(&i) => Ok(i - 1),
            _ => Err(Error::Parse(format!("line {line}: bad generator index '{x}' (expected 1..{rank})"))),
        })
        .collect()
}

/// Parses the TSV format: a `# case: e6|2e6` header, further `#` comment
/// lines, then rows `label<TAB>word<TAB>laurent`.
pub fn parse_character_data(text: &str, case: Case) -> Result<HeckeCharacterData> {
    let rank = match case {
        Case::Untwisted => 6,
        Case::Twisted => 4,
    };
    let mut header: Option<Case> = None;
    let mut provenance = Vec::new();
    let mut rows: Vec<TraceRow> = Vec::new();
    let mut index = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let l = raw.trim_end();
        if l.trim().is_empty() {
            continue;
        }
        if let Some(comment) = l.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(c) = comment.strip_prefix("case:") {
                header = Some(c.trim().parse()?);
            } else {
                provenance.push(comment.to_string());
            }
            continue;
        }
        if header.is_none() {
            return Err(Error::Parse(format!("line {line}: data before the '# case:' header")));
        }
        let fields: Vec<&str> = l.split('\t').collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!("line {line}: expected 3 tab-separated fields, got {}", fields.len())));
        }
        let label: CharLabel = fields[0].trim().parse()?;
        let word = parse_word(fields[1], rank, line)?;
        let value: LaurentPolynomial = fields[2].parse().map_err(|e| Error::Parse(format!("line {line}: {e}")))?;
        if index.insert((label, word.clone()), rows.len()).is_some() {
            return Err(Error::Rejected(format!("line {line}: duplicate entry for {label} at {}", render_word(&word))));
        }
        rows.push(TraceRow { label, word, value, line });
    }
    match header {
        Some(c) if c == case => Ok(HeckeCharacterData { case, provenance, rows, index }),
        Some(c) => Err(Error::Rejected(format!("file is for the {c} case, expected {case}"))),
        None => Err(Error::Parse("missing '# case:' header".into())),
    }
}

pub fn load_character_data(path: &Path, wd: &WeylData, hecke: &HeckeAlgebra<'_>) -> Result<HeckeCharacterData> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let data = parse_character_data(&text, wd.case)?;
    data.validate(wd, hecke)?;
    Ok(data)
}
