//! Headless verification suites over a range of `d`.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::ValueEnum;
use ostro_core::ostronometry::{verify_identity, verify_row_identity, Identity, IdentityScope};
use ostro_core::towers::{
    block_counts, block_scan, first_column, first_column_word, stolarsky_audit, wall_profile, wall_term, wall_term_word,
};
use ostro_core::{Error, NumerationContext, Result, WordClass};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Numeration,
    Towers,
    Identities,
    Blocks,
}

impl Suite {
    pub fn default_limit(self) -> Option<i128> {
        match self {
            Suite::Numeration | Suite::Towers => Some(10_000),
            Suite::Identities => None,
            Suite::Blocks => Some(6),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub d: u32,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    pub notes: Vec<String>,
}

impl Check {
    fn new(name: &str, claim: &str, d: u32) -> Self {
        Self {
            name: name.into(),
            claim: claim.into(),
            d,
            checked: 0,
            failures: 0,
            first_failure: None,
            notes: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub d_min: u32,
    pub d_max: u32,
    pub limit: Option<i128>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} d={} {}: {} [{} checked, {} failed]",
                c.d, c.name, c.claim, c.checked, c.failures
            );
            if let Some(f) = &c.first_failure {
                let _ = writeln!(out, "    first failure: {f}");
            }
            for n in &c.notes {
                let _ = writeln!(out, "    note: {n}");
            }
        }
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        let _ = writeln!(
            out,
            "{verdict} {:?} d={}..={}: {} checks, {failed} failed",
            self.suite,
            self.d_min,
            self.d_max,
            self.checks.len()
        );
        out
    }
}

pub fn run_suite(suite: Suite, ds: RangeInclusive<u32>, limit: Option<i128>) -> Result<VerifyReport> {
    let limit = limit.or(suite.default_limit());
    if limit.is_some_and(|l| l < 0) {
        return Err(Error::Domain("limit must be non-negative".into()));
    }
    let mut checks = Vec::new();
    for d in ds.clone() {
        let ctx = NumerationContext::new(d)?;
        match suite {
            Suite::Numeration => numeration(&ctx, limit.unwrap_or(0), &mut checks)?,
            Suite::Towers => towers(&ctx, limit.unwrap_or(0), &mut checks)?,
            Suite::Identities => identities(&ctx, limit, &mut checks)?,
            Suite::Blocks => blocks(&ctx, limit.unwrap_or(0), &mut checks)?,
        }
    }
    Ok(VerifyReport {
        suite,
        d_min: *ds.start(),
        d_max: *ds.end(),
        limit,
        passed: checks.iter().all(Check::passed),
        checks,
    })
}

fn numeration(ctx: &NumerationContext, limit: i128, checks: &mut Vec<Check>) -> Result<()> {
    let d = ctx.d();
    let mut c = Check::new(
        "round-trip",
        "decode(encode(N)) = N with valid digits, 0 <= N <= limit",
        d,
    );
    for n in 0..=limit {
        let w = ctx.encode(n)?;
        let ok = ctx.decode(&w)? == n && ctx.classify_word(w.digits()) != WordClass::Invalid;
        c.record(ok, || format!("N={n} word={}", w.to_msd_string()));
    }
    checks.push(c);

    let mut c = Check::new(
        "dual-round-trip",
        "dual_decode(dual_encode(N)) = N, sign (-1)^(|w|+1), |N| <= limit",
        d,
    );
    for n in -limit..=limit {
        let w = ctx.dual_encode(n)?;
        let sign_ok = n == 0 || i128::from(w.sign()) == n.signum();
        c.record(ctx.dual_decode(&w)? == n && sign_ok, || {
            format!("N={n} word={}", w.to_msd_string())
        });
    }
    checks.push(c);

    let mut c = Check::new("out", "digit shift equals floor(alpha n + 1/alpha), 0 <= n <= limit", d);
    for n in 0..=limit {
        let (a, b) = (ctx.out_word(n)?, ctx.out(n)?);
        c.record(a == b, || format!("n={n}: word {a}, closed form {b}"));
    }
    checks.push(c);

    let mut c = Check::new("nut", "dual digit shift equals ceil(-n alpha), |n| <= limit", d);
    for n in -limit..=limit {
        let (a, b) = (ctx.nut_word(n)?, ctx.nut(n)?);
        c.record(a == b, || format!("n={n}: word {a}, closed form {b}"));
    }
    checks.push(c);
    Ok(())
}

fn towers(ctx: &NumerationContext, limit: i128, checks: &mut Vec<Check>) -> Result<()> {
    let d = ctx.d();
    if d < 2 {
        let mut c = Check::new("towers", "wall geometry needs d >= 2", d);
        c.notes.push("skipped for d = 1".into());
        checks.push(c);
        return Ok(());
    }
    let rows = usize::try_from(limit).map_err(|_| Error::Overflow("row count"))?;

    let audit = stolarsky_audit(ctx, limit)?;
    let mut c = Check::new(
        "coverage",
        "each N in 1..=limit once right of the wall, each nonzero |N| <= limit once left of the red wall",
        d,
    );
    c.checked = 2 * limit as u64 + 1;
    c.failures = audit.violations.len() as u64;
    c.first_failure = audit.violations.first().map(|v| format!("{v:?}"));
    checks.push(c);

    let mut c = Check::new(
        "wall-offsets",
        "left wall sits 0 or 1 columns left of the red wall, rows m <= limit",
        d,
    );
    for m in 1..=rows {
        let p = wall_profile(ctx, m);
        c.record(p.is_ok(), || format!("m={m}: {}", p.unwrap_err()));
    }
    checks.push(c);

    let mut c = Check::new(
        "first-column",
        "A(m,1) = floor(m alpha_bar - 1/(alpha(alpha-1))), m <= limit",
        d,
    );
    for m in 1..=rows {
        let (a, b) = (first_column(ctx, m)?, first_column_word(ctx, m)?);
        c.record(a == b, || format!("m={m}: closed form {a}, word {b}"));
    }
    checks.push(c);

    let mut c = Check::new("wall-term", "A(m,0) = floor(m alpha/(alpha+1)), m <= limit", d);
    for m in 1..=rows {
        let (a, b) = (wall_term(ctx, m)?, wall_term_word(ctx, m)?);
        c.record(a == b, || format!("m={m}: closed form {a}, word {b}"));
    }
    checks.push(c);
    Ok(())
}

fn identities(ctx: &NumerationContext, limit: Option<i128>, checks: &mut Vec<Check>) -> Result<()> {
    let d = ctx.d();
    for id in Identity::ALL {
        let mut scope = id.standard_scope();
        if let Some(l) = limit {
            scope = IdentityScope {
                bound: i64::try_from(l).map_err(|_| Error::Overflow("identity bound"))?,
                window: scope.window,
            };
        }
        let r = verify_identity(ctx, id, scope)?;
        checks.push(Check {
            name: r.name.clone(),
            claim: r.claim.clone(),
            d,
            checked: r.checked,
            failures: r.counterexamples.len() as u64,
            first_failure: r.counterexamples.first().cloned(),
            notes: r.notes.clone(),
        });
    }
    if d >= 2 {
        let bound = limit.map_or(20, |l| l.min(20)) as i64;
        let rows = 100;
        let mut c = Check::new("row", "", d);
        let mut flagged = 0;
        for m in 1..=rows {
            let r = verify_row_identity(ctx, m, bound)?;
            c.claim = r.claim.clone();
            c.checked += r.checked;
            c.failures += r.counterexamples.len() as u64;
            if c.first_failure.is_none() {
                c.first_failure = r.counterexamples.first().cloned();
            }
            if r.notes.iter().any(|n| n.contains("(-1)^b ")) {
                flagged += 1;
            }
        }
        if flagged > 0 {
            c.notes.push(format!(
                "the sign (-1)^b in place of (-1)^(b-1) fails on {flagged} of {rows} rows"
            ));
        }
        checks.push(c);
    }
    Ok(())
}

fn blocks(ctx: &NumerationContext, limit: i128, checks: &mut Vec<Check>) -> Result<()> {
    let d = ctx.d();
    if d < 2 {
        let mut c = Check::new("blocks", "block counting needs d >= 2", d);
        c.notes.push("skipped for d = 1".into());
        checks.push(c);
        return Ok(());
    }
    let mut c = Check::new(
        "block-counts",
        "palindrome counts from powers of alpha equal a scan of every row, blocks 1..=limit",
        d,
    );
    for k in 1..=u32::try_from(limit).map_err(|_| Error::Overflow("block index"))? {
        let (f, s) = (block_counts(ctx, k)?, block_scan(ctx, k)?);
        let ok = (f.deedees, f.edees) == (s.deedees, s.edees);
        c.record(ok, || {
            format!(
                "k={k}: formula ({}, {}), scan ({}, {})",
                f.deedees, f.edees, s.deedees, s.edees
            )
        });
    }
    checks.push(c);
    Ok(())
}
