//! Sequences from the array that appear in the OEIS, and comparison against
//! b-file fixtures.

use std::fmt;
use std::str::FromStr;

use ostro_core::towers::{first_column_word, terrace_class, wall_term, TerraceClass};
use ostro_core::{NumerationContext, Result};
use serde::Serialize;

use crate::bfile::BFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Wall column for d = 2, `⌊m/√2⌋`, from index 0.
    A049472,
    /// One more than the first column for d = 1 (upper Wythoff), from index 1.
    A001950,
    /// `out(n)` for d = 2: the complement of the first column, from index 1.
    A082845,
    /// Numbers beside a merged red and left wall for d = 2, from index 1.
    A276879,
}

impl SequenceId {
    pub const ALL: [SequenceId; 4] = [
        SequenceId::A049472,
        SequenceId::A001950,
        SequenceId::A082845,
        SequenceId::A276879,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceId::A049472 => "A049472",
            SequenceId::A001950 => "A001950",
            SequenceId::A082845 => "A082845",
            SequenceId::A276879 => "A276879",
        }
    }

    pub fn bfile_url(self) -> String {
        let id = self.as_str();
        format!("https://oeis.org/{id}/b{}.txt", &id[1..])
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("no generator for sequence {0:?}")]
pub struct UnknownSequence(pub String);

impl FromStr for SequenceId {
    type Err = UnknownSequence;

    fn from_str(s: &str) -> std::result::Result<Self, UnknownSequence> {
        let key = s.trim().to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == key)
            .ok_or_else(|| UnknownSequence(s.to_string()))
    }
}

/// The first `terms` entries `(index, value)` of the sequence.
pub fn generate(id: SequenceId, terms: usize) -> Result<Vec<(i64, i128)>> {
    match id {
        SequenceId::A049472 => {
            let ctx = NumerationContext::new(2)?;
            (0..terms)
                .map(|m| Ok((m as i64, if m == 0 { 0 } else { wall_term(&ctx, m)? })))
                .collect()
        }
        SequenceId::A001950 => {
            let ctx = NumerationContext::new(1)?;
            (1..=terms)
                .map(|m| Ok((m as i64, first_column_word(&ctx, m)? + 1)))
                .collect()
        }
        SequenceId::A082845 => {
            let ctx = NumerationContext::new(2)?;
            (1..=terms).map(|n| Ok((n as i64, ctx.out(n as i128)?))).collect()
        }
        SequenceId::A276879 => {
            let ctx = NumerationContext::new(2)?;
            let mut out = Vec::with_capacity(terms);
            let mut n = 0i128;
            while out.len() < terms {
                n += 1;
                if terrace_class(&ctx, n)? == TerraceClass::Coinciding {
                    out.push((out.len() as i64 + 1, n));
                }
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub position: usize,
    pub index: i64,
    pub generated: i128,
    /// Fixture entry at this position, if the fixture is long enough.
    pub fixture: Option<(i64, i128)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisDiff {
    pub id: String,
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl OeisDiff {
    pub fn matched(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for OeisDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "{}: first {} terms match", self.id, self.compared),
            Some(m) => {
                write!(
                    f,
                    "{}: mismatch at index {}: generated {}",
                    self.id, m.index, m.generated
                )?;
                match m.fixture {
                    Some((i, v)) => write!(f, ", fixture has {v} at index {i}"),
                    None => write!(f, ", fixture has no entry"),
                }
            }
        }
    }
}

/// Compares the generated prefix with the fixture entries position by position.
pub fn diff(id: SequenceId, generated: &[(i64, i128)], fixture: &BFile) -> OeisDiff {
    let mut entries = fixture.entries();
    let mismatch = generated.iter().enumerate().find_map(|(position, &(index, value))| {
        let fx = entries.next();
        (fx != Some((index, value))).then_some(Mismatch {
            position,
            index,
            generated: value,
            fixture: fx,
        })
    });
    OeisDiff {
        id: id.to_string(),
        compared: generated.len(),
        mismatch,
    }
}

/// Downloads the b-file from oeis.org.
pub fn fetch(id: SequenceId) -> std::result::Result<String, ureq::Error> {
    ureq::get(&id.bfile_url()).call()?.body_mut().read_to_string()
}
