use std::fmt;

use num_integer::Integer;

use crate::error::Result;
use crate::numer::NumerationContext;

use super::array_entry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PalindromeKind {
    None,
    Deedee,
    Edee,
}

impl PalindromeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PalindromeKind::None => "none",
            PalindromeKind::Deedee => "deedee",
            PalindromeKind::Edee => "edee",
        }
    }
}

impl fmt::Display for PalindromeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A multiple of one half, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(pub i128);

impl HalfInteger {
    pub fn from_integer(n: i128) -> Self {
        Self(2 * n)
    }

    pub fn doubled(self) -> i128 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Row shape: `multiplier·D_{n+shift}` (Deedee) or `multiplier·E_{n+shift}` (Edee).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PalindromeClass {
    pub kind: PalindromeKind,
    pub multiplier: HalfInteger,
    pub shift: i64,
}

impl PalindromeClass {
    pub const NONE: Self = Self {
        kind: PalindromeKind::None,
        multiplier: HalfInteger(0),
        shift: 0,
    };
}

/// Cheap necessary condition: `|x² − dxy − y²|` is a square for Deedees and
/// `Δ/4` times a square for Edees.
fn norm_admits_palindrome(d: i128, delta: i128, a1: i128, a2: i128) -> bool {
    let Some(norm) = a2
        .checked_mul(a2)
        .and_then(|s| s.checked_sub(d.checked_mul(a1)?.checked_mul(a2)?))
        .and_then(|s| s.checked_sub(a1.checked_mul(a1)?))
        .and_then(|s| s.checked_mul(4))
    else {
        // Too large for the filter; let the exact test decide.
        return true;
    };
    let n4 = norm.unsigned_abs();
    is_square(n4) || (n4 % delta as u128 == 0 && is_square(n4 / delta as u128))
}

fn is_square(n: u128) -> bool {
    // Squares occupy 12 of the 64 residues mod 64.
    const MOD64: u64 = 0x0202_0212_0203_0213;
    if (MOD64 >> (n % 64)) & 1 == 0 {
        return false;
    }
    let r = crate::exactq::isqrt(&n.into());
    let r: u128 = r.try_into().expect("root of a u128 fits in u128");
    r * r == n
}

/// Classifies a row from two consecutive positive terms `A_{m,1}, A_{m,2}`.
pub fn classify_pair(ctx: &NumerationContext, a1: i128, a2: i128) -> PalindromeClass {
    if a1 <= 0 || a2 <= 0 {
        return PalindromeClass::NONE;
    }
    let d = ctx.d() as i128;
    if !norm_admits_palindrome(d, ctx.delta() as i128, a1, a2) {
        return PalindromeClass::NONE;
    }
    let g = a1.gcd(&a2);
    if let Some(t) = ctx.denominator_pair_index((a1 / g, a2 / g)) {
        return PalindromeClass {
            kind: PalindromeKind::Deedee,
            multiplier: HalfInteger::from_integer(g),
            shift: t as i64 - 1,
        };
    }
    // For even d every E_n is even and E_n/2 are coprime neighbours, so the
    // reduced pair is (E_t/2, E_{t+1}/2) and the multiplier is g/2.
    let (pair, multiplier) = if d % 2 == 0 {
        ((2 * a1 / g, 2 * a2 / g), HalfInteger(g))
    } else {
        ((a1 / g, a2 / g), HalfInteger::from_integer(g))
    };
    if let Some(t) = ctx.companion_pair_index(pair) {
        return PalindromeClass {
            kind: PalindromeKind::Edee,
            multiplier,
            shift: t as i64 - 1,
        };
    }
    PalindromeClass::NONE
}

pub fn classify_palindrome(ctx: &NumerationContext, m: usize) -> Result<PalindromeClass> {
    let a1 = array_entry(ctx, m, 1)?;
    let a2 = array_entry(ctx, m, 2)?;
    Ok(classify_pair(ctx, a1, a2))
}
