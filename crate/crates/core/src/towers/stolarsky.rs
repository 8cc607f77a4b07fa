use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::numer::NumerationContext;

use super::{array_entry, neg_entry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageSide {
    /// Columns `n ≥ 1` of the array.
    Positive,
    /// Columns left of the red wall.
    Negative,
    /// The wall term of row 1, which must be `0`.
    Wall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageViolation {
    pub side: CoverageSide,
    pub value: i128,
    pub occurrences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StolarskyReport {
    pub d: u32,
    pub limit: i128,
    pub positive_rows: usize,
    pub negative_rows: usize,
    pub violations: Vec<CoverageViolation>,
}

impl StolarskyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every `1 ≤ N ≤ limit` occurs exactly once right of the wall,
/// that `0` sits in the wall column of row 1, and that every nonzero
/// `|N| ≤ limit` occurs exactly once left of the red wall.
pub fn stolarsky_audit(ctx: &NumerationContext, limit: i128) -> Result<StolarskyReport> {
    if limit < 0 {
        return Err(Error::Domain(format!("limit must be non-negative, got {limit}")));
    }
    let mut violations = Vec::new();
    let mut report = StolarskyReport {
        d: ctx.d(),
        limit,
        positive_rows: 0,
        negative_rows: 0,
        violations: Vec::new(),
    };
    if limit == 0 {
        return Ok(report);
    }

    let wall = array_entry(ctx, 1, 0)?;
    if wall != 0 {
        violations.push(CoverageViolation {
            side: CoverageSide::Wall,
            value: wall,
            occurrences: 0,
        });
    }
    let mut seen = vec![0usize; limit as usize + 1];
    let mut m = 1;
    while ctx.trimmed_value(m)? <= limit {
        let mut n = 1;
        loop {
            let v = array_entry(ctx, m, n)?;
            if v > limit {
                break;
            }
            if v < 1 {
                violations.push(CoverageViolation {
                    side: CoverageSide::Positive,
                    value: v,
                    occurrences: 1,
                });
            } else {
                seen[v as usize] += 1;
            }
            n += 1;
        }
        m += 1;
    }
    report.positive_rows = m - 1;
    for (v, &count) in seen.iter().enumerate().skip(1) {
        if count != 1 {
            violations.push(CoverageViolation {
                side: CoverageSide::Positive,
                value: v as i128,
                occurrences: count,
            });
        }
    }

    // Ā_{m,n} is the dual value of w_m·0^{n−1}, whose dual word is at least
    // |w_m| − 1 digits long, so rows with longer labels cannot reach |N| ≤ limit.
    let mut longest_dual = 0;
    for v in (-limit..=limit).filter(|&v| v != 0) {
        longest_dual = longest_dual.max(ctx.dual_encode(v)?.len());
    }
    let bound = ctx.denominator((longest_dual + 2 + ctx.digit_shift()) as i64)?;
    let mut seen: HashMap<i128, usize> = HashMap::new();
    let mut m = 1;
    while ctx.trimmed_value(m)? < bound {
        let mut n = 1;
        loop {
            let v = neg_entry(ctx, m, n)?;
            if v.abs() <= limit {
                *seen.entry(v).or_default() += 1;
            } else if n >= 2 {
                // Magnitudes increase strictly from the second column on.
                break;
            }
            n += 1;
        }
        m += 1;
    }
    report.negative_rows = m - 1;
    for v in (-limit..=limit).filter(|&v| v != 0) {
        let count = seen.get(&v).copied().unwrap_or(0);
        if count != 1 {
            violations.push(CoverageViolation {
                side: CoverageSide::Negative,
                value: v,
                occurrences: count,
            });
        }
    }
    report.violations = violations;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_audits_pass() {
        for d in [2, 3] {
            let c = NumerationContext::new(d).unwrap();
            let r = stolarsky_audit(&c, 100).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
        }
        let c = NumerationContext::new(2).unwrap();
        assert!(stolarsky_audit(&c, 0).unwrap().passed());
        assert!(stolarsky_audit(&c, -1).is_err());
    }
}
