use std::fmt;

use crate::error::{Error, Result};

/// Outcome of [`NumerationContext::classify_word`](super::NumerationContext::classify_word).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordClass {
    Invalid,
    Untrimmed,
    Trimmed,
}

/// Digit constraints of the positive system, lsd first.
pub(crate) fn check_ostrowski(d: u32, digits: &[u32]) -> Result<()> {
    if let Some(&last) = digits.last() {
        if last == 0 {
            return Err(Error::InvalidWord("most significant digit is zero".into()));
        }
    }
    if d == 1 {
        for (i, &x) in digits.iter().enumerate() {
            if x > 1 {
                return Err(Error::InvalidWord(format!("digit {x} at position {} exceeds 1", i + 1)));
            }
            if x == 1 && i > 0 && digits[i - 1] == 1 {
                return Err(Error::InvalidWord(format!("consecutive ones at position {}", i + 1)));
            }
        }
        return Ok(());
    }
    if let Some(&first) = digits.first() {
        if first >= d {
            return Err(Error::InvalidWord(format!("first digit {first} must be below {d}")));
        }
    }
    for (i, &x) in digits.iter().enumerate() {
        if x > d {
            return Err(Error::InvalidWord(format!(
                "digit {x} at position {} exceeds {d}",
                i + 1
            )));
        }
        if x == d && digits[i - 1] != 0 {
            return Err(Error::InvalidWord(format!(
                "digit {d} at position {} not preceded by 0",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Digit constraints of the dual system, lsd first: a digit `d` is followed
/// by 0 unless it is the final digit.
pub(crate) fn check_dual(d: u32, digits: &[u32]) -> Result<()> {
    if let Some(&last) = digits.last() {
        if last == 0 {
            return Err(Error::InvalidWord("most significant digit is zero".into()));
        }
    }
    for (i, &x) in digits.iter().enumerate() {
        if x > d {
            return Err(Error::InvalidWord(format!(
                "digit {x} at position {} exceeds {d}",
                i + 1
            )));
        }
        if x == d && i + 1 < digits.len() && digits[i + 1] != 0 {
            return Err(Error::InvalidWord(format!(
                "digit {d} at position {} not followed by 0",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Renders digits most significant first: one character per digit when
/// `d ≤ 9`, comma separated otherwise.
pub fn format_msd(d: u32, digits_lsd: &[u32]) -> String {
    format_digits(d, digits_lsd.iter().rev())
}

/// Same text form as [`format_msd`] but least significant digit first.
pub fn format_lsd(d: u32, digits_lsd: &[u32]) -> String {
    format_digits(d, digits_lsd.iter())
}

fn format_digits<'a>(d: u32, it: impl Iterator<Item = &'a u32>) -> String {
    if d <= 9 {
        it.map(|x| char::from_digit(*x, 10).unwrap_or('?')).collect()
    } else {
        it.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses the text form into an lsd-first digit vector. `msd_first` selects
/// the reading direction of `text`.
pub fn parse_digits(d: u32, text: &str, msd_first: bool) -> Result<Vec<u32>> {
    let text = text.trim();
    let mut digits: Vec<u32> = if text.is_empty() || text == "ε" {
        Vec::new()
    } else if d <= 9 && !text.contains(',') {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::InvalidWord(format!("unexpected character {c:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        text.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidWord(format!("bad digit {t:?}")))
            })
            .collect::<Result<_>>()?
    };
    if msd_first {
        digits.reverse();
    }
    Ok(digits)
}

/// A canonical word of the positive (Ostrowski) numeration system for one `d`.
///
/// Digits are stored least significant first. For `d ≥ 2` digit `j` weighs
/// `D_j`; for `d = 1` the Zeckendorf convention applies and digit `j` weighs
/// `F_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OstrowskiWord {
    d: u32,
    digits: Vec<u32>,
}

impl OstrowskiWord {
    pub fn from_lsd(d: u32, digits: Vec<u32>) -> Result<Self> {
        check_ostrowski(d, &digits)?;
        Ok(Self { d, digits })
    }

    pub fn from_msd(d: u32, mut digits: Vec<u32>) -> Result<Self> {
        digits.reverse();
        Self::from_lsd(d, digits)
    }

    pub fn parse_msd(d: u32, text: &str) -> Result<Self> {
        Self::from_lsd(d, parse_digits(d, text, true)?)
    }

    pub fn parse_lsd(d: u32, text: &str) -> Result<Self> {
        Self::from_lsd(d, parse_digits(d, text, false)?)
    }

    pub(crate) fn new_unchecked(d: u32, digits: Vec<u32>) -> Self {
        debug_assert!(check_ostrowski(d, &digits).is_ok());
        Self { d, digits }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Digits, least significant first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn to_msd_string(&self) -> String {
        format_msd(self.d, &self.digits)
    }

    pub fn to_lsd_string(&self) -> String {
        format_lsd(self.d, &self.digits)
    }
}

/// Displays most significant digit first.
impl fmt::Display for OstrowskiWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_msd_string())
    }
}

/// A canonical word of the dual numeration system, where digit `j` (lsd
/// first) weighs `D_{−j} = (−1)^{j+1} D_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualWord {
    d: u32,
    digits: Vec<u32>,
}

impl DualWord {
    pub fn from_lsd(d: u32, digits: Vec<u32>) -> Result<Self> {
        check_dual(d, &digits)?;
        Ok(Self { d, digits })
    }

    pub fn from_msd(d: u32, mut digits: Vec<u32>) -> Result<Self> {
        digits.reverse();
        Self::from_lsd(d, digits)
    }

    pub fn parse_msd(d: u32, text: &str) -> Result<Self> {
        Self::from_lsd(d, parse_digits(d, text, true)?)
    }

    pub fn parse_lsd(d: u32, text: &str) -> Result<Self> {
        Self::from_lsd(d, parse_digits(d, text, false)?)
    }

    pub(crate) fn new_unchecked(d: u32, digits: Vec<u32>) -> Self {
        debug_assert!(check_dual(d, &digits).is_ok());
        Self { d, digits }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Sign of the represented integer, which depends only on the length.
    pub fn sign(&self) -> i8 {
        match self.digits.len() {
            0 => 0,
            n if n % 2 == 1 => 1,
            _ => -1,
        }
    }

    pub fn to_msd_string(&self) -> String {
        format_msd(self.d, &self.digits)
    }

    pub fn to_lsd_string(&self) -> String {
        format_lsd(self.d, &self.digits)
    }
}

impl fmt::Display for DualWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_msd_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ostrowski_constraints() {
        assert!(check_ostrowski(2, &[0, 2, 1]).is_ok());
        assert!(check_ostrowski(2, &[1, 0, 2]).is_ok());
        assert!(check_ostrowski(2, &[2]).is_err());
        assert!(check_ostrowski(2, &[2, 2]).is_err());
        assert!(check_ostrowski(2, &[1, 2]).is_err());
        assert!(check_ostrowski(2, &[1, 0]).is_err());
        assert!(check_ostrowski(2, &[0, 3]).is_err());
        assert!(check_ostrowski(1, &[1, 0, 1]).is_ok());
        assert!(check_ostrowski(1, &[1, 1]).is_err());
        assert!(check_ostrowski(3, &[]).is_ok());
    }

    #[test]
    fn dual_constraints() {
        assert!(check_dual(2, &[2]).is_ok());
        assert!(check_dual(2, &[1, 2]).is_ok());
        assert!(check_dual(2, &[2, 0, 1]).is_ok());
        assert!(check_dual(2, &[2, 1]).is_err());
        assert!(check_dual(2, &[1, 0]).is_err());
        assert!(check_dual(1, &[1, 1]).is_err());
    }

    #[test]
    fn text_forms() {
        let w = OstrowskiWord::parse_lsd(2, "021").unwrap();
        assert_eq!(w.to_msd_string(), "120");
        assert_eq!(w.to_string(), "120");
        assert_eq!(OstrowskiWord::parse_msd(2, "120").unwrap(), w);
        let big = OstrowskiWord::from_lsd(12, vec![3, 12 - 12, 12]).unwrap();
        assert_eq!(big.to_msd_string(), "12,0,3");
        assert_eq!(OstrowskiWord::parse_msd(12, "12,0,3").unwrap(), big);
        assert!(parse_digits(2, "1x", true).is_err());
        assert_eq!(parse_digits(2, "", true).unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn dual_sign_from_length() {
        assert_eq!(DualWord::parse_lsd(2, "11").unwrap().sign(), -1);
        assert_eq!(DualWord::parse_lsd(2, "111").unwrap().sign(), 1);
        assert_eq!(DualWord::parse_lsd(2, "").unwrap().sign(), 0);
    }
}
