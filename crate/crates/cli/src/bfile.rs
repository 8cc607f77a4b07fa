//! OEIS b-files: `n a(n)` lines with optional `#` comments.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected `index value`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {index} does not increase")]
    NotIncreasing { line: usize, index: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Line {
    Comment(String),
    Blank(String),
    Entry { index: i64, value: i128, raw: String },
}

/// A parsed b-file that remembers its exact text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    lines: Vec<Line>,
    trailing_newline: bool,
}

impl BFile {
    pub fn from_entries(comments: &[&str], entries: impl IntoIterator<Item = (i64, i128)>) -> Self {
        let mut lines: Vec<Line> = comments.iter().map(|c| Line::Comment(format!("# {c}"))).collect();
        lines.extend(entries.into_iter().map(|(index, value)| Line::Entry {
            index,
            value,
            raw: format!("{index} {value}"),
        }));
        Self {
            lines,
            trailing_newline: true,
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.lines.iter().filter_map(|l| match l {
            Line::Entry { index, value, .. } => Some((*index, *value)),
            _ => None,
        })
    }

    pub fn comments(&self) -> impl Iterator<Item = &str> + '_ {
        self.lines.iter().filter_map(|l| match l {
            Line::Comment(c) => Some(c.as_str()),
            _ => None,
        })
    }

    pub fn len(&self) -> usize {
        self.entries().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl FromStr for BFile {
    type Err = BFileError;

    fn from_str(text: &str) -> Result<Self, BFileError> {
        let trailing_newline = text.ends_with('\n');
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = Vec::new();
        let mut last: Option<i64> = None;
        if !text.is_empty() {
            for (i, raw) in body.split('\n').enumerate() {
                let trimmed = raw.trim();
                if trimmed.starts_with('#') {
                    lines.push(Line::Comment(raw.to_string()));
                    continue;
                }
                if trimmed.is_empty() {
                    lines.push(Line::Blank(raw.to_string()));
                    continue;
                }
                let malformed = || BFileError::Malformed {
                    line: i + 1,
                    text: raw.to_string(),
                };
                let mut parts = trimmed.split_whitespace();
                let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(malformed());
                };
                let index: i64 = a.parse().map_err(|_| malformed())?;
                let value: i128 = b.parse().map_err(|_| malformed())?;
                if last.is_some_and(|p| index <= p) {
                    return Err(BFileError::NotIncreasing { line: i + 1, index });
                }
                last = Some(index);
                lines.push(Line::Entry {
                    index,
                    value,
                    raw: raw.to_string(),
                });
            }
        }
        Ok(Self {
            lines,
            trailing_newline,
        })
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            match line {
                Line::Comment(s) | Line::Blank(s) | Line::Entry { raw: s, .. } => f.write_str(s)?,
            }
        }
        if self.trailing_newline && !self.lines.is_empty() {
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_bytes() {
        let text = "# A000045\n#  spaced   comment\n0 0\n1 1\n\n2  1\n3 2";
        let b: BFile = text.parse().unwrap();
        assert_eq!(b.to_string(), text);
        assert_eq!(b.entries().collect::<Vec<_>>(), vec![(0, 0), (1, 1), (2, 1), (3, 2)]);
        assert_eq!(b.comments().count(), 2);
        let with_nl = format!("{text}\n");
        assert_eq!(with_nl.parse::<BFile>().unwrap().to_string(), with_nl);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            "1 2 3\n".parse::<BFile>(),
            Err(BFileError::Malformed { line: 1, .. })
        ));
        assert!(matches!("1 x\n".parse::<BFile>(), Err(BFileError::Malformed { .. })));
        assert!(matches!(
            "2 1\n2 5\n".parse::<BFile>(),
            Err(BFileError::NotIncreasing { line: 2, index: 2 })
        ));
    }

    #[test]
    fn empty_and_built() {
        let e: BFile = "".parse().unwrap();
        assert!(e.is_empty());
        assert_eq!(e.to_string(), "");
        let b = BFile::from_entries(&["A1"], [(1, 5), (2, -7)]);
        assert_eq!(b.to_string(), "# A1\n1 5\n2 -7\n");
        assert_eq!(b.to_string().parse::<BFile>().unwrap(), b);
    }
}
