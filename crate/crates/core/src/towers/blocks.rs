use crate::error::{Error, Result};
use crate::numer::{to_i128, NumerationContext};

use super::palindrome::{classify_pair, PalindromeKind};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BlockCounts {
    pub deedees: u64,
    pub edees: u64,
    /// Rows in the block; zero when the counts come from the formula.
    pub rows: u64,
}

fn check_block(ctx: &NumerationContext, k: u32) -> Result<()> {
    if ctx.d() < 2 {
        return Err(Error::Unsupported {
            d: ctx.d(),
            what: "block counting",
        });
    }
    if k == 0 {
        return Err(Error::Domain("blocks are numbered from 1".into()));
    }
    Ok(())
}

/// Palindrome counts of block `k` (rows labelled by words of length `2k−1`
/// or `2k`) from the powers of `α`: Deedee multipliers `j` with
/// `α^{k−1} ≤ j < α^k`, Edee multipliers with `α^{k−1} ≤ j√Δ < α^k`, where
/// `j` runs over half-integers when `d` is even.
pub fn block_counts(ctx: &NumerationContext, k: u32) -> Result<BlockCounts> {
    check_block(ctx, k)?;
    let lo = ctx.alpha().pow(k as i64 - 1)?;
    let hi = ctx.alpha().pow(k as i64)?;
    // #{j ∈ ℤ : lo ≤ j < hi} = ⌈hi⌉ − ⌈lo⌉, exact at rational endpoints too.
    let count = |lo: &crate::QuadraticValue, hi: &crate::QuadraticValue| -> Result<u64> {
        let c = to_i128(&(hi.ceil() - lo.ceil()), "block count")?;
        Ok(c.max(0) as u64)
    };
    let deedees = count(&lo, &hi)?;
    let step = if ctx.d().is_multiple_of(2) { 2 } else { 1 };
    let root = crate::QuadraticValue::sqrt_delta(ctx.delta());
    let scale = |x: &crate::QuadraticValue| -> Result<crate::QuadraticValue> { x.scale(step).checked_div(&root) };
    let edees = count(&scale(&lo)?, &scale(&hi)?)?;
    Ok(BlockCounts {
        deedees,
        edees,
        rows: 0,
    })
}

/// Classifies every row of block `k` by walking all trimmed words of length
/// `2k−1` and `2k`.
pub fn block_scan(ctx: &NumerationContext, k: u32) -> Result<BlockCounts> {
    check_block(ctx, k)?;
    let longest = 2 * k as usize;
    // Weights of digit j for the first and second column, j = 1..=longest.
    let mut w1 = vec![0i128; longest + 1];
    let mut w2 = vec![0i128; longest + 1];
    for j in 1..=longest {
        w1[j] = ctx.denominator(j as i64)?;
        w2[j] = ctx.denominator(j as i64 + 1)?;
    }
    let mut scan = Scan {
        ctx,
        d: ctx.d(),
        w1: &w1,
        w2: &w2,
        counts: BlockCounts::default(),
    };
    for len in [longest - 1, longest] {
        scan.top(len);
    }
    Ok(scan.counts)
}

struct Scan<'a> {
    ctx: &'a NumerationContext,
    d: u32,
    w1: &'a [i128],
    w2: &'a [i128],
    counts: BlockCounts,
}

impl Scan<'_> {
    fn top(&mut self, len: usize) {
        let max = if len == 1 { self.d - 1 } else { self.d };
        for x in 1..=max {
            self.place(len, x, 0, 0);
        }
    }

    /// Places digit `x` at position `j` and recurses downward.
    fn place(&mut self, j: usize, x: u32, a1: i128, a2: i128) {
        let a1 = a1 + x as i128 * self.w1[j];
        let a2 = a2 + x as i128 * self.w2[j];
        if j == 1 {
            self.visit(a1, a2);
            return;
        }
        let below = j - 1;
        if x == self.d {
            self.place(below, 0, a1, a2);
        } else if below == 1 {
            // The first digit stays below d, and a zero there would make the
            // word untrimmed.
            for y in 1..self.d {
                self.place(below, y, a1, a2);
            }
        } else {
            for y in 0..=self.d {
                self.place(below, y, a1, a2);
            }
        }
    }

    fn visit(&mut self, a1: i128, a2: i128) {
        self.counts.rows += 1;
        match classify_pair(self.ctx, a1, a2).kind {
            PalindromeKind::Deedee => self.counts.deedees += 1,
            PalindromeKind::Edee => self.counts.edees += 1,
            PalindromeKind::None => {}
        }
    }
}
