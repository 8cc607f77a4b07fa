//! The bi-infinite array whose rows are the recurrence sequences labelled by
//! trimmed Ostrowski words, read to the right (the garden) and to the left
//! (the tower with its red and left walls).

mod blocks;
mod palindrome;
mod stolarsky;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactq::QuadraticValue;
use crate::numer::to_i128;
use crate::numer::{NumerationContext, OstrowskiWord, WordClass};

pub use blocks::{block_counts, block_scan, BlockCounts};
pub use palindrome::{classify_pair, classify_palindrome, HalfInteger, PalindromeClass, PalindromeKind};
pub use stolarsky::{stolarsky_audit, CoverageSide, CoverageViolation, StolarskyReport};

/// One row of the array materialized over a window of columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerRow {
    pub m: usize,
    pub word: OstrowskiWord,
    /// Column index of `terms[0]`.
    pub start: i64,
    pub terms: Vec<i128>,
}

impl TowerRow {
    pub fn get(&self, n: i64) -> Option<i128> {
        let i = usize::try_from(n - self.start).ok()?;
        self.terms.get(i).copied()
    }

    /// Leftmost column inside the building, `1 − |w|`.
    pub fn red_col(&self) -> i64 {
        1 - self.word.len() as i64
    }

    pub fn columns(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.terms.iter().enumerate().map(|(i, &v)| (self.start + i as i64, v))
    }
}

/// Where the left side of a row mirrors a positive row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WallProfile {
    pub m: usize,
    pub red_col: i64,
    pub partner_k: usize,
    pub offset_i: u8,
    pub coincide: bool,
}

impl WallProfile {
    /// Column holding `±A_{k,n}` of the partner row `k`, for `n ≥ 1`.
    pub fn mirror_col(&self, n: i64) -> i64 {
        self.red_col - self.offset_i as i64 - n
    }

    /// The left wall runs between this column and the one to its left.
    pub fn left_wall_col(&self) -> i64 {
        self.red_col - self.offset_i as i64
    }

    /// Columns strictly between the red wall and the left wall.
    pub fn terrace_cols(&self) -> std::ops::Range<i64> {
        self.left_wall_col()..self.red_col
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerraceClass {
    Coinciding,
    Terrace,
}

fn require_row(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("rows are numbered from 1".into()));
    }
    Ok(())
}

fn require_d_at_least_two(ctx: &NumerationContext, what: &'static str) -> Result<()> {
    if ctx.d() < 2 {
        return Err(Error::Unsupported { d: ctx.d(), what });
    }
    Ok(())
}

/// `A_{m,n}` for any column `n`: the value of `0^{n−1}w_m`, continued to
/// `n ≤ 0` through the bilateral denominators.
pub fn array_entry(ctx: &NumerationContext, m: usize, n: i64) -> Result<i128> {
    require_row(m)?;
    let w = ctx.trimmed_word(m)?;
    ctx.shifted_value(w.digits(), n - 1)
}

/// `A_{m,n}` by running the recurrence outward from columns 0 and 1.
pub fn array_entry_by_recurrence(ctx: &NumerationContext, m: usize, n: i64) -> Result<i128> {
    require_row(m)?;
    let d = ctx.d() as i128;
    let w = ctx.trimmed_word(m)?;
    let (mut lo, mut hi) = (ctx.shifted_value(w.digits(), -1)?, ctx.decode(&w)?);
    let overflow = || Error::Overflow("array entry");
    if n >= 1 {
        for _ in 1..n {
            let next = d.checked_mul(hi).and_then(|t| t.checked_add(lo)).ok_or_else(overflow)?;
            (lo, hi) = (hi, next);
        }
        Ok(hi)
    } else {
        for _ in n..0 {
            let prev = d.checked_mul(lo).and_then(|t| hi.checked_sub(t)).ok_or_else(overflow)?;
            (lo, hi) = (prev, lo);
        }
        Ok(lo)
    }
}

pub fn row(ctx: &NumerationContext, m: usize, cols: std::ops::RangeInclusive<i64>) -> Result<TowerRow> {
    require_row(m)?;
    let word = ctx.trimmed_word(m)?;
    let start = *cols.start();
    let terms = cols
        .map(|n| ctx.shifted_value(word.digits(), n - 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(TowerRow { m, word, start, terms })
}

/// Wall term `A_{m,0}` from the closed form `⌊mα/(α+1)⌋`.
pub fn wall_term(ctx: &NumerationContext, m: usize) -> Result<i128> {
    require_d_at_least_two(ctx, "closed-form wall term")?;
    require_row(m)?;
    let slope = ctx.alpha().checked_div(&ctx.alpha().add_integer(1))?;
    to_i128(&slope.scale(m as u64).floor(), "wall term")
}

/// Wall term by dropping the first digit of `w_m`.
pub fn wall_term_word(ctx: &NumerationContext, m: usize) -> Result<i128> {
    require_d_at_least_two(ctx, "word-level wall term")?;
    require_row(m)?;
    let w = ctx.trimmed_word(m)?;
    ctx.shifted_value(&w.digits()[1..], 0)
}

/// `⌊mᾱ − 1/(α(α−1))⌋`, the closed form of the first column.
pub fn first_column(ctx: &NumerationContext, m: usize) -> Result<i128> {
    require_d_at_least_two(ctx, "closed-form first column")?;
    require_row(m)?;
    let a = ctx.alpha();
    let offset = (a * &a.add_integer(-1)).recip()?;
    let x = &ctx.alpha_bar().scale(m as u64) - &offset;
    to_i128(&x.floor(), "first column")
}

/// First column as the value of the `m`-th trimmed word.
pub fn first_column_word(ctx: &NumerationContext, m: usize) -> Result<i128> {
    require_row(m)?;
    ctx.trimmed_value(m)
}

/// Position `(m, n)` with `n ≥ 1` and `A_{m,n} = N`.
pub fn locate(ctx: &NumerationContext, value: i128) -> Result<(usize, i64)> {
    if value < 1 {
        return Err(Error::Domain(format!("{value} has no position right of the wall")));
    }
    let w = ctx.encode(value)?;
    let mut digits = w.digits();
    let mut n = 1;
    while ctx.classify_word(digits) == WordClass::Untrimmed {
        digits = &digits[1..];
        n += 1;
    }
    let suffix = ctx.shifted_value(digits, 0)?;
    let m = ctx
        .trimmed_rank(suffix)?
        .ok_or_else(|| Error::Invariant(format!("suffix value {suffix} is not trimmed")))?;
    Ok((m, n))
}

/// Position `(m, n)` with `n ≥ 1` and `Ā_{m,n} = N` left of the red wall.
///
/// The dual word of `N` ends in `n − 1` zeros; what remains, reversed, is the
/// row label up to the label's own leading zeros, which the dual word drops.
pub fn locate_left(ctx: &NumerationContext, value: i128) -> Result<(usize, i64)> {
    // For d = 1 the left side repeats values since D_1 = D_2.
    require_d_at_least_two(ctx, "left-side positions")?;
    if value == 0 {
        return Err(Error::Domain("0 is a wall term, not left of the red wall".into()));
    }
    let u = ctx.dual_encode(value)?;
    let zeros = u.digits().iter().take_while(|&&x| x == 0).count();
    let mut label: Vec<u32> = u.digits()[zeros..].iter().rev().copied().collect();
    let mut found = None;
    while label.len() <= u.len() + 1 {
        if ctx.classify_word(&label) == WordClass::Trimmed {
            if found.is_some() {
                return Err(Error::Invariant(format!("{value} sits in two rows")));
            }
            let v = ctx.shifted_value(&label, 0)?;
            found = ctx.trimmed_rank(v)?;
        }
        label.insert(0, 0);
    }
    let m = found.ok_or_else(|| Error::Invariant(format!("no row label ends the dual word of {value}")))?;
    Ok((m, zeros as i64 + 1))
}

/// `Ā_{m,n} = A_{m, r−n}` with `r = 1 − |w_m|`, for `n ≥ 1`.
pub fn neg_entry(ctx: &NumerationContext, m: usize, n: i64) -> Result<i128> {
    require_row(m)?;
    if n < 1 {
        return Err(Error::Domain(format!("negative array columns start at 1, got {n}")));
    }
    let w = ctx.trimmed_word(m)?;
    let r = 1 - w.len() as i64;
    ctx.shifted_value(w.digits(), r - n - 1)
}

/// `Ā_{m,n}` as the dual value of `w_m·0^{n−1}` read most significant digit first.
pub fn neg_entry_word(ctx: &NumerationContext, m: usize, n: i64) -> Result<i128> {
    require_row(m)?;
    if n < 1 {
        return Err(Error::Domain(format!("negative array columns start at 1, got {n}")));
    }
    let w = ctx.trimmed_word(m)?;
    let dual: Vec<u32> = w.digits().iter().rev().copied().collect();
    ctx.dual_shifted_value(&dual, n - 1)
}

/// Finds the positive row mirrored on the left of row `m` and its offset.
pub fn wall_profile(ctx: &NumerationContext, m: usize) -> Result<WallProfile> {
    require_d_at_least_two(ctx, "wall profile")?;
    require_row(m)?;
    let len = ctx.trimmed_word(m)?.len() as i64;
    let red_col = 1 - len;
    let probe = neg_entry(ctx, m, 2)?.abs();
    let (k, n) = locate(ctx, probe)?;
    let offset = 2 - n;
    if !(0..=1).contains(&offset) {
        return Err(Error::Invariant(format!(
            "row {m}: wall offset {offset} outside {{0, 1}}"
        )));
    }
    for j in 1..=3 {
        if neg_entry(ctx, m, offset + j)?.abs() != array_entry(ctx, k, j)? {
            return Err(Error::Invariant(format!(
                "row {m}: mirror of row {k} breaks at column {j}"
            )));
        }
    }
    Ok(WallProfile {
        m,
        red_col,
        partner_k: k,
        offset_i: offset as u8,
        coincide: offset == 0,
    })
}

/// Whether `N` sits next to a merged red and left wall, decided by
/// `frac(αN) ∈ [1/α, 1 − 1/α]`.
pub fn terrace_class(ctx: &NumerationContext, value: i128) -> Result<TerraceClass> {
    require_d_at_least_two(ctx, "terrace classification")?;
    if value < 1 {
        return Err(Error::Domain(format!("terrace class needs N ≥ 1, got {value}")));
    }
    let f = ctx.alpha().scale(value).frac();
    let lo = ctx.inv_alpha();
    let hi = (-lo).add_integer(1);
    let inside = f.compare(lo)?.is_ge() && f.compare(&hi)?.is_le();
    Ok(if inside {
        TerraceClass::Coinciding
    } else {
        TerraceClass::Terrace
    })
}

/// `1 − 2/α`, the density of coinciding numbers.
pub fn coinciding_density(ctx: &NumerationContext) -> QuadraticValue {
    (-ctx.inv_alpha().scale(2)).add_integer(1)
}

/// Row and column shift of the array row that a recurrent sequence
/// eventually follows: returns `(m, shift)` with `B_n = A_{m, n+shift}` for
/// all large `n`.
pub fn tail_locate(ctx: &NumerationContext, b0: i128, b1: i128) -> Result<(usize, i64)> {
    if b0 == 0 && b1 == 0 {
        return Err(Error::Domain("the zero sequence is in no row".into()));
    }
    let d = ctx.d() as i128;
    let lo = ctx.inv_alpha().add_integer(-1);
    let hi = ctx.inv_alpha().clone();
    let (mut x, mut y) = (b0, b1);
    let mut k: i64 = 0;
    loop {
        if x >= 1 {
            let gap = ctx.qv(y) - ctx.alpha().scale(x);
            if gap.compare(&lo)?.is_gt() && gap.compare(&hi)?.is_lt() {
                let (m, n) = locate(ctx, x)?;
                return Ok((m, n - k));
            }
        }
        let next = d
            .checked_mul(y)
            .and_then(|t| t.checked_add(x))
            .ok_or(Error::Domain(format!("sequence from ({b0}, {b1}) never joins a row")))?;
        (x, y) = (y, next);
        k += 1;
    }
}

/// Codes the first-column differences `A_{m+1,1} − A_{m,1}` for
/// `m = 1..=count`: `1` for `⌈ᾱ⌉`, `0` for `⌊ᾱ⌋`.
pub fn sturmian_code(ctx: &NumerationContext, count: usize) -> Result<Vec<u8>> {
    require_d_at_least_two(ctx, "sturmian code")?;
    let ab = ctx.alpha_bar();
    let big = to_i128(&ab.ceil(), "sturmian code")?;
    let small = to_i128(&ab.floor(), "sturmian code")?;
    let mut out = Vec::with_capacity(count);
    let mut prev = ctx.trimmed_value(1)?;
    for m in 2..=count + 1 {
        let cur = ctx.trimmed_value(m)?;
        let diff = cur - prev;
        out.push(match diff {
            x if x == big => 1,
            x if x == small => 0,
            x => return Err(Error::Invariant(format!("first-column difference {x} at row {m}"))),
        });
        prev = cur;
    }
    Ok(out)
}

/// Distinct values of `A_{m+1,col} − A_{m,col}` for `m = 1..=count`.
pub fn column_difference_pattern(ctx: &NumerationContext, col: i64, count: usize) -> Result<BTreeSet<i128>> {
    require_d_at_least_two(ctx, "column differences")?;
    if col < 1 {
        return Err(Error::Domain(format!("columns start at 1, got {col}")));
    }
    let mut set = BTreeSet::new();
    let mut prev = array_entry(ctx, 1, col)?;
    for m in 2..=count + 1 {
        let cur = array_entry(ctx, m, col)?;
        set.insert(cur - prev);
        prev = cur;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> NumerationContext {
        NumerationContext::new(d).unwrap()
    }

    #[test]
    fn array_entry_examples() {
        let c = ctx(2);
        assert_eq!(array_entry(&c, 3, 3).unwrap(), 24);
        assert_eq!(array_entry(&c, 1, -2).unwrap(), -2);
        assert_eq!(array_entry(&c, 5, 1).unwrap(), 8);
        assert!(array_entry(&c, 0, 1).is_err());
        for m in 1..40 {
            for n in -8..8 {
                assert_eq!(
                    array_entry(&c, m, n).unwrap(),
                    array_entry_by_recurrence(&c, m, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn wythoff_rows_for_d1() {
        let c = ctx(1);
        let r = row(&c, 1, -1..=5).unwrap();
        assert_eq!(r.terms, [0, 1, 1, 2, 3, 5, 8]);
        let r = row(&c, 2, 1..=4).unwrap();
        assert_eq!(r.terms, [4, 7, 11, 18]);
    }

    #[test]
    fn wall_term_examples() {
        let c = ctx(2);
        for (m, want) in [(5, 3), (1, 0), (9, 6)] {
            assert_eq!(wall_term(&c, m).unwrap(), want);
            assert_eq!(wall_term_word(&c, m).unwrap(), want);
        }
        assert!(matches!(wall_term(&ctx(1), 1), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn first_column_examples() {
        let c = ctx(2);
        for (m, want) in [(2, 3), (1, 1), (9, 15)] {
            assert_eq!(first_column(&c, m).unwrap(), want);
            assert_eq!(first_column_word(&c, m).unwrap(), want);
        }
        assert!(first_column(&ctx(1), 1).is_err());
    }

    #[test]
    fn locate_examples() {
        let c = ctx(2);
        assert_eq!(locate(&c, 24).unwrap(), (3, 3));
        assert_eq!(locate(&c, 1).unwrap(), (1, 1));
        assert_eq!(locate(&c, 41).unwrap(), (2, 4));
        assert!(locate(&c, 0).is_err());
        assert!(locate(&c, -3).is_err());
    }

    #[test]
    fn neg_entry_examples() {
        let c = ctx(2);
        assert_eq!(neg_entry(&c, 2, 1).unwrap(), -1);
        assert_eq!(neg_entry(&c, 1, 2).unwrap(), -2);
        assert_eq!(neg_entry(&c, 3, 1).unwrap(), 2);
        for m in 1..60 {
            for n in 1..6 {
                assert_eq!(neg_entry(&c, m, n).unwrap(), neg_entry_word(&c, m, n).unwrap());
            }
        }
    }

    #[test]
    fn wall_profile_examples() {
        let c = ctx(2);
        let p = wall_profile(&c, 1).unwrap();
        assert_eq!((p.red_col, p.partner_k, p.offset_i, p.coincide), (0, 1, 0, true));
        let p = wall_profile(&c, 5).unwrap();
        assert_eq!((p.red_col, p.partner_k, p.offset_i), (-2, 6, 1));
        assert_eq!(p.mirror_col(1), -4);
        assert_eq!(p.terrace_cols(), -3..-2);
        let p = wall_profile(&c, 6).unwrap();
        assert_eq!((p.red_col, p.partner_k, p.offset_i), (-2, 5, 1));
    }

    #[test]
    fn terrace_examples() {
        let c = ctx(2);
        assert_eq!(terrace_class(&c, 1).unwrap(), TerraceClass::Coinciding);
        assert_eq!(terrace_class(&c, 3).unwrap(), TerraceClass::Terrace);
        assert_eq!(terrace_class(&c, 6).unwrap(), TerraceClass::Coinciding);
        assert!(terrace_class(&ctx(1), 1).is_err());
    }

    #[test]
    fn tail_locate_examples() {
        let c = ctx(2);
        assert_eq!(tail_locate(&c, 0, 1).unwrap(), (1, 0));
        assert_eq!(tail_locate(&c, 1, 1).unwrap(), (2, -1));
        assert_eq!(tail_locate(&c, 1, 2).unwrap(), (1, 1));
        assert!(tail_locate(&c, 0, 0).is_err());
        assert!(tail_locate(&c, -1, -1).is_err());
    }

    #[test]
    fn sturmian_examples() {
        let c = ctx(2);
        assert_eq!(sturmian_code(&c, 8).unwrap(), [1, 0, 1, 1, 0, 1, 1, 1]);
        assert_eq!(sturmian_code(&c, 1).unwrap(), [1]);
    }

    #[test]
    fn column_difference_examples() {
        let c = ctx(2);
        let two = column_difference_pattern(&c, 2, 50).unwrap();
        assert_eq!(two.into_iter().collect::<Vec<_>>(), [3, 4, 5]);
        let three = column_difference_pattern(&c, 3, 50).unwrap();
        assert_eq!(three.into_iter().collect::<Vec<_>>(), [7, 10, 12]);
        let mapped: BTreeSet<_> = [3, 4, 5].iter().map(|&x| c.out(x).unwrap()).collect();
        assert_eq!(mapped.into_iter().collect::<Vec<_>>(), [7, 10, 12]);
    }
}
