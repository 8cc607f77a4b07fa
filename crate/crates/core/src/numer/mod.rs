//! Ostrowski and dual Ostrowski numeration for the recurrence
//! `X_{n+1} = d·X_n + X_{n−1}`.
//!
//! The positive system writes every `N ≥ 0` over the denominators
//! `D_1, D_2, …`; the dual system writes every integer over
//! `D_{−1}, D_{−2}, …`. Prepending a zero to a positive word is the `out`
//! operator, and prepending a zero to a dual word is `nut`.

mod words;

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactq::{floor_small, QuadraticValue};

pub use words::{format_lsd, format_msd, parse_digits, DualWord, OstrowskiWord, WordClass};

pub(crate) fn to_i128(n: &BigInt, what: &'static str) -> Result<i128> {
    n.to_i128().ok_or(Error::Overflow(what))
}

/// Parameters and cached sequences for one value of `d`.
///
/// `D_n` and `E_n` are precomputed for every index whose value fits in an
/// `i128`; the list of first-column values (the trimmed words in radix
/// order) grows on demand behind a lock, so a context can be shared freely
/// between threads.
#[derive(Debug)]
pub struct NumerationContext {
    d: u32,
    delta: u64,
    alpha: QuadraticValue,
    beta: QuadraticValue,
    inv_alpha: QuadraticValue,
    denominators: Vec<i128>,
    companions: Vec<i128>,
    d_pairs: HashMap<(i128, i128), usize>,
    e_pairs: HashMap<(i128, i128), usize>,
    trimmed: RwLock<TrimmedCache>,
}

#[derive(Debug, Default)]
struct TrimmedCache {
    values: Vec<i128>,
    scanned: i128,
}

impl NumerationContext {
    pub fn new(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("d must be at least 1".into()));
        }
        let delta = (d as u64) * (d as u64) + 4;
        let alpha = QuadraticValue::new(d, 1, 2, delta)?;
        let beta = QuadraticValue::new(d, -1, 2, delta)?;
        let inv_alpha = alpha.recip()?;
        let denominators = recurrence_prefix(d, 0, 1);
        let companions = recurrence_prefix(d, 2, d as i128);
        let pairs = |v: &[i128]| {
            v.windows(2)
                .enumerate()
                .map(|(t, w)| ((w[0], w[1]), t))
                .collect::<HashMap<_, _>>()
        };
        Ok(Self {
            d,
            delta,
            alpha,
            beta,
            inv_alpha,
            d_pairs: pairs(&denominators),
            e_pairs: pairs(&companions),
            denominators,
            companions,
            trimmed: RwLock::new(TrimmedCache::default()),
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `Δ = d² + 4`.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// `α = (d + √Δ)/2`.
    pub fn alpha(&self) -> &QuadraticValue {
        &self.alpha
    }

    /// `β = (d − √Δ)/2 = −1/α`.
    pub fn beta(&self) -> &QuadraticValue {
        &self.beta
    }

    pub fn inv_alpha(&self) -> &QuadraticValue {
        &self.inv_alpha
    }

    /// `ᾱ = α/(α − 1)`, the slope of the first column.
    pub fn alpha_bar(&self) -> QuadraticValue {
        let am1 = self.alpha.add_integer(-1);
        self.alpha.checked_div(&am1).expect("α − 1 is nonzero")
    }

    pub fn qv(&self, n: i128) -> QuadraticValue {
        QuadraticValue::integer(n, self.delta)
    }

    /// Largest `n` with `D_n` cached.
    pub fn max_index(&self) -> usize {
        self.denominators.len().min(self.companions.len()) - 1
    }

    /// `D_n` for any integer `n`, with `D_{−n} = (−1)^{n+1} D_n`.
    pub fn denominator(&self, n: i64) -> Result<i128> {
        let v = *self
            .denominators
            .get(n.unsigned_abs() as usize)
            .ok_or(Error::Overflow("denominator"))?;
        Ok(if n < 0 && n % 2 == 0 { -v } else { v })
    }

    /// Companion `E_n = αⁿ + βⁿ`, with `E_{−n} = (−1)^n E_n`.
    pub fn companion(&self, n: i64) -> Result<i128> {
        let v = *self
            .companions
            .get(n.unsigned_abs() as usize)
            .ok_or(Error::Overflow("companion"))?;
        Ok(if n < 0 && n % 2 != 0 { -v } else { v })
    }

    /// Index `t ≥ 0` with `(D_t, D_{t+1}) = pair`, if any.
    pub(crate) fn denominator_pair_index(&self, pair: (i128, i128)) -> Option<usize> {
        self.d_pairs.get(&pair).copied()
    }

    pub(crate) fn companion_pair_index(&self, pair: (i128, i128)) -> Option<usize> {
        self.e_pairs.get(&pair).copied()
    }

    /// Offset between digit positions and denominator indices: digit `j`
    /// weighs `D_{j + shift}`. Zero for `d ≥ 2`, one under the Zeckendorf
    /// convention for `d = 1`.
    pub fn digit_shift(&self) -> usize {
        usize::from(self.d == 1)
    }

    /// Weight of positive digit `j ≥ 1` after prepending `zeros` zeros.
    fn weight(&self, j: usize, zeros: i64) -> Result<i128> {
        self.denominator(j as i64 + self.digit_shift() as i64 + zeros)
    }

    pub fn encode(&self, n: i128) -> Result<OstrowskiWord> {
        if n < 0 {
            return Err(Error::Domain(format!("cannot encode negative {n}")));
        }
        let mut top = 0;
        while top + 1 + self.digit_shift() < self.denominators.len() && self.weight(top + 1, 0)? <= n {
            top += 1;
        }
        let mut digits = vec![0u32; top];
        let mut rem = n;
        for j in (1..=top).rev() {
            let w = self.weight(j, 0)?;
            let x = rem / w;
            digits[j - 1] = x as u32;
            rem -= x * w;
        }
        if rem != 0 {
            return Err(Error::Overflow("encode"));
        }
        Ok(OstrowskiWord::new_unchecked(self.d, digits))
    }

    pub fn decode(&self, w: &OstrowskiWord) -> Result<i128> {
        self.check_base(w.d())?;
        self.shifted_value(w.digits(), 0)
    }

    /// Validates raw lsd digits and decodes them.
    pub fn decode_digits(&self, digits: &[u32]) -> Result<i128> {
        words::check_ostrowski(self.d, digits)?;
        self.shifted_value(digits, 0)
    }

    /// `Σ digit_j · D_{j + shift + zeros}`: the value of `0^zeros · w` for
    /// `zeros ≥ 0`, and its bilateral continuation for negative `zeros`.
    pub(crate) fn shifted_value(&self, digits: &[u32], zeros: i64) -> Result<i128> {
        let mut acc: i128 = 0;
        for (i, &x) in digits.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let term = self
                .weight(i + 1, zeros)?
                .checked_mul(x as i128)
                .ok_or(Error::Overflow("word value"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("word value"))?;
        }
        Ok(acc)
    }

    fn check_base(&self, d: u32) -> Result<()> {
        if d != self.d {
            return Err(Error::InvalidWord(format!("word for d = {d} used with d = {}", self.d)));
        }
        Ok(())
    }

    pub fn classify_word(&self, digits: &[u32]) -> WordClass {
        if words::check_ostrowski(self.d, digits).is_err() {
            return WordClass::Invalid;
        }
        match digits.split_first() {
            // The empty word stands for zero and labels no row.
            None => WordClass::Untrimmed,
            Some((0, rest)) if words::check_ostrowski(self.d, rest).is_ok() => WordClass::Untrimmed,
            Some(_) => WordClass::Trimmed,
        }
    }

    /// `out(n)` from the closed form `⌊αn + 1/α⌋`.
    pub fn out(&self, n: i128) -> Result<i128> {
        if n < 0 {
            return Err(Error::Domain(format!("out is defined on n ≥ 0, got {n}")));
        }
        // αn + 1/α = (d(n − 1) + (n + 1)√Δ)/2
        let d = self.d as i128;
        let p = n.checked_sub(1).and_then(|k| k.checked_mul(d));
        let q = n.checked_add(1);
        self.floor_half(p, q, "out")
    }

    /// `⌊(p + q√Δ)/2⌋`.
    fn floor_half(&self, p: Option<i128>, q: Option<i128>, what: &'static str) -> Result<i128> {
        let (p, q) = p.zip(q).ok_or(Error::Overflow(what))?;
        match floor_small(p, q, 2, self.delta) {
            Some(v) => Ok(v),
            None => to_i128(&QuadraticValue::new(p, q, 2, self.delta)?.floor(), what),
        }
    }

    /// `out(n)` by prepending a zero to the Ostrowski word of `n`.
    pub fn out_word(&self, n: i128) -> Result<i128> {
        let w = self.encode(n)?;
        self.shifted_value(w.digits(), 1)
    }

    /// `nut(n)` from the closed form `⌈−nα⌉`.
    pub fn nut(&self, n: i128) -> Result<i128> {
        // ⌈−nα⌉ = −⌊(dn + n√Δ)/2⌋
        let p = n.checked_mul(self.d as i128);
        Ok(-self.floor_half(p, Some(n), "nut")?)
    }

    /// `nut(n)` by prepending a zero to the dual word of `n`.
    pub fn nut_word(&self, n: i128) -> Result<i128> {
        let w = self.dual_encode(n)?;
        self.dual_shifted_value(w.digits(), 1)
    }

    /// Dual expansion by repeated divide-and-round by `−α`.
    pub fn dual_encode(&self, n: i128) -> Result<DualWord> {
        let mut digits = Vec::new();
        let mut cur = n;
        let d = self.d as i128;
        if cur != 0 {
            loop {
                if 0 < cur && cur <= d {
                    digits.push(cur as u32);
                    break;
                }
                // ⌈−N/α⌉ = −⌊(−dN + N√Δ)/2⌋
                let p = cur.checked_mul(-(self.d as i128));
                let next = -self.floor_half(p, Some(cur), "dual_encode")?;
                let x = cur - self.nut(next)?;
                if !(0..=d).contains(&x) {
                    return Err(Error::Invariant(format!("dual digit {x} out of range")));
                }
                digits.push(x as u32);
                cur = next;
            }
        }
        Ok(DualWord::new_unchecked(self.d, digits))
    }

    pub fn dual_decode(&self, w: &DualWord) -> Result<i128> {
        self.check_base(w.d())?;
        self.dual_shifted_value(w.digits(), 0)
    }

    pub fn dual_decode_digits(&self, digits: &[u32]) -> Result<i128> {
        words::check_dual(self.d, digits)?;
        self.dual_shifted_value(digits, 0)
    }

    /// `Σ digit_j · D_{−(j + zeros)}`, the value of the dual word with `zeros`
    /// extra low-order zeros.
    pub(crate) fn dual_shifted_value(&self, digits: &[u32], zeros: i64) -> Result<i128> {
        let mut acc: i128 = 0;
        for (i, &x) in digits.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let term = self
                .denominator(-(i as i64 + 1 + zeros))?
                .checked_mul(x as i128)
                .ok_or(Error::Overflow("dual value"))?;
            acc = acc.checked_add(term).ok_or(Error::Overflow("dual value"))?;
        }
        Ok(acc)
    }

    fn is_trimmed_value(&self, n: i128) -> Result<bool> {
        let w = self.encode(n)?;
        Ok(self.classify_word(w.digits()) == WordClass::Trimmed)
    }

    fn extend_trimmed(&self, enough: impl Fn(&TrimmedCache) -> bool) -> Result<()> {
        if enough(&self.trimmed.read().expect("trimmed cache poisoned")) {
            return Ok(());
        }
        let mut cache = self.trimmed.write().expect("trimmed cache poisoned");
        while !enough(&cache) {
            let n = cache.scanned + 1;
            if self.is_trimmed_value(n)? {
                cache.values.push(n);
            }
            cache.scanned = n;
        }
        Ok(())
    }

    /// Value of the `m`-th trimmed word in radix order (`m ≥ 1`), i.e. the
    /// first-column entry `A_{m,1}`.
    pub fn trimmed_value(&self, m: usize) -> Result<i128> {
        if m == 0 {
            return Err(Error::Domain("rows are numbered from 1".into()));
        }
        self.extend_trimmed(|c| c.values.len() >= m)?;
        Ok(self.trimmed.read().expect("trimmed cache poisoned").values[m - 1])
    }

    pub fn trimmed_word(&self, m: usize) -> Result<OstrowskiWord> {
        self.encode(self.trimmed_value(m)?)
    }

    /// Radix rank of a trimmed value, or `None` if `v` is not trimmed.
    ///
    /// Small values are looked up in the enumerated list. Larger ones use
    /// the complement: the values below `v` that are not trimmed are exactly
    /// `out(1), out(2), …`, and `out(n) ≤ v` iff `n < (v + 1 − 1/α)/α`.
    pub fn trimmed_rank(&self, v: i128) -> Result<Option<usize>> {
        if v < 1 || !self.is_trimmed_value(v)? {
            return Ok(None);
        }
        if v <= RANK_SCAN_LIMIT {
            self.extend_trimmed(|c| c.scanned >= v)?;
            let cache = self.trimmed.read().expect("trimmed cache poisoned");
            return Ok(cache.values.binary_search(&v).ok().map(|i| i + 1));
        }
        let x = (&self.qv(v + 1) - &self.inv_alpha).checked_div(&self.alpha)?;
        let outs = to_i128(&x.floor(), "trimmed rank")?;
        usize::try_from(v - outs)
            .map(Some)
            .map_err(|_| Error::Overflow("trimmed rank"))
    }

    /// The first `count` trimmed words in radix order.
    pub fn enumerate_trimmed(&self, count: usize) -> Result<Vec<OstrowskiWord>> {
        (1..=count).map(|m| self.trimmed_word(m)).collect()
    }
}

/// Values up to this bound are ranked by enumeration.
const RANK_SCAN_LIMIT: i128 = 1 << 20;

fn recurrence_prefix(d: u32, x0: i128, x1: i128) -> Vec<i128> {
    let mut v = vec![x0, x1];
    loop {
        let n = v.len();
        match (d as i128).checked_mul(v[n - 1]).and_then(|t| t.checked_add(v[n - 2])) {
            Some(next) => v.push(next),
            None => return v,
        }
    }
}
