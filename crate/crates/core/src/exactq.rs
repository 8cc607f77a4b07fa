//! Exact arithmetic in the real quadratic field `Q(√Δ)`.
//!
//! Every value is kept as `(p + q√Δ) / r` with arbitrary precision integers.
//! Signs, comparisons, floors and ceilings are decided with integer square
//! roots only, so closed forms such as `⌊αn + 1/α⌋` are exact even when the
//! argument sits a hair away from an integer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field operation selector for [`QuadraticValue::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadOp {
    Add,
    Sub,
    Mul,
}

/// Integer square root `⌊√n⌋` by Newton iteration.
///
/// Panics on negative input.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    if let Some(small) = n.to_u128() {
        return BigInt::from(small.isqrt());
    }
    let bits = n.bits();
    // 2^ceil(bits/2) is an upper bound for the root; Newton then decreases
    // monotonically until it stops.
    let mut x = BigInt::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    debug_assert!(&x * &x <= *n && (&x + 1u32) * (&x + 1u32) > *n);
    x
}

/// `⌊(p + q√Δ)/r⌋` in machine integers, for hot loops where building a
/// [`QuadraticValue`] would dominate. Same rule as [`QuadraticValue::floor`];
/// `None` on overflow or `r = 0`. `Δ` must not be a perfect square.
pub fn floor_small(p: i128, q: i128, r: i128, delta: u64) -> Option<i128> {
    let (p, q, r) = match r.signum() {
        0 => return None,
        1 => (p, q, r),
        _ => (p.checked_neg()?, q.checked_neg()?, r.checked_neg()?),
    };
    if q == 0 {
        return Some(p.div_euclid(r));
    }
    let s = q
        .unsigned_abs()
        .checked_mul(q.unsigned_abs())?
        .checked_mul(delta as u128)?
        .isqrt();
    let s = i128::try_from(s).ok()?;
    let num = if q > 0 {
        p.checked_add(s)?
    } else {
        p.checked_sub(s)?.checked_sub(1)?
    };
    Some(num.div_euclid(r))
}

/// An element `(p + q√Δ) / r` of `Q(√Δ)` in canonical form.
///
/// Canonical means `r > 0` and `gcd(p, q, r) = 1`. `Δ` must not be a perfect
/// square, so any value with `q ≠ 0` is irrational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    delta: u64,
}

impl QuadraticValue {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>, delta: u64) -> Result<Self> {
        let r = r.into();
        if r.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let root = (delta as u128).isqrt();
        if root * root == delta as u128 {
            return Err(Error::SquareRadicand(delta));
        }
        Ok(Self::normalized(p.into(), q.into(), r, delta))
    }

    fn normalized(mut p: BigInt, mut q: BigInt, mut r: BigInt, delta: u64) -> Self {
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Self { p, q, r, delta }
    }

    pub fn integer(n: impl Into<BigInt>, delta: u64) -> Self {
        Self::normalized(n.into(), BigInt::zero(), BigInt::one(), delta)
    }

    pub fn zero(delta: u64) -> Self {
        Self::integer(0, delta)
    }

    pub fn one(delta: u64) -> Self {
        Self::integer(1, delta)
    }

    /// `√Δ` itself.
    pub fn sqrt_delta(delta: u64) -> Self {
        Self::normalized(BigInt::zero(), BigInt::one(), BigInt::one(), delta)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.q.is_zero() && self.r.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `(p − q√Δ) / r`.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.p.clone(),
            q: -&self.q,
            r: self.r.clone(),
            delta: self.delta,
        }
    }

    /// Field norm `x · conj(x)`, a rational returned as (numerator, denominator).
    pub fn norm(&self) -> (BigInt, BigInt) {
        let num = &self.p * &self.p - &self.q * &self.q * BigInt::from(self.delta);
        let den = &self.r * &self.r;
        let g = num.gcd(&den);
        if g.is_zero() {
            return (num, den);
        }
        (num / &g, den / g)
    }

    pub fn combine(&self, other: &Self, op: QuadOp) -> Result<Self> {
        if self.delta != other.delta {
            return Err(Error::DeltaMismatch(self.delta, other.delta));
        }
        let delta = self.delta;
        Ok(match op {
            QuadOp::Add | QuadOp::Sub => {
                let (p2, q2) = if op == QuadOp::Add {
                    (other.p.clone(), other.q.clone())
                } else {
                    (-&other.p, -&other.q)
                };
                if self.r == other.r {
                    Self::normalized(&self.p + p2, &self.q + q2, self.r.clone(), delta)
                } else {
                    Self::normalized(
                        &self.p * &other.r + p2 * &self.r,
                        &self.q * &other.r + q2 * &self.r,
                        &self.r * &other.r,
                        delta,
                    )
                }
            }
            QuadOp::Mul => {
                let d = BigInt::from(delta);
                Self::normalized(
                    &self.p * &other.p + &self.q * &other.q * d,
                    &self.p * &other.q + &self.q * &other.p,
                    &self.r * &other.r,
                    delta,
                )
            }
        })
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let norm = &self.p * &self.p - &self.q * &self.q * BigInt::from(self.delta);
        Ok(Self::normalized(
            &self.p * &self.r,
            -(&self.q * &self.r),
            norm,
            self.delta,
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.combine(&other.recip()?, QuadOp::Mul)
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self::normalized(&self.p * &k, &self.q * k, self.r.clone(), self.delta)
    }

    pub fn add_integer(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        Self::normalized(&self.p + k * &self.r, self.q.clone(), self.r.clone(), self.delta)
    }

    /// Integer power by repeated squaring; negative exponents go through [`recip`](Self::recip).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.recip()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(self.delta);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Sign of the value as −1, 0 or +1, decided by comparing `p²` with `q²Δ`.
    pub fn sign(&self) -> i8 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sq == 0 || sp == sq {
            return if sp == 0 { sq } else { sp };
        }
        if sp == 0 {
            return sq;
        }
        let lhs = &self.p * &self.p;
        let rhs = &self.q * &self.q * BigInt::from(self.delta);
        // p² = q²Δ is impossible for q ≠ 0 because Δ is not a square.
        if lhs > rhs {
            sp
        } else {
            sq
        }
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        let diff = self.combine(other, QuadOp::Sub)?;
        Ok(diff.sign().cmp(&0))
    }

    /// Greatest integer `≤ self`.
    pub fn floor(&self) -> BigInt {
        if self.q.is_zero() {
            return self.p.div_floor(&self.r);
        }
        let s = isqrt(&(&self.q * &self.q * BigInt::from(self.delta)));
        // q√Δ is irrational, so ⌊q√Δ⌋ is s for q > 0 and −s − 1 for q < 0;
        // then ⌊(p + y)/r⌋ = ⌊(p + ⌊y⌋)/r⌋ for integer p and r > 0.
        let num = if self.q.is_positive() {
            &self.p + s
        } else {
            &self.p - s - 1u32
        };
        num.div_floor(&self.r)
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// `self − ⌊self⌋`, which lies in `[0, 1)`.
    pub fn frac(&self) -> Self {
        self.add_integer(-self.floor())
    }

    /// Approximate value for display only; never used for decisions.
    pub fn approx(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        (p + q * (self.delta as f64).sqrt()) / r
    }
}

fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return if self.r.is_one() {
                write!(f, "{}", self.p)
            } else {
                write!(f, "{}/{}", self.p, self.r)
            };
        }
        let op = if self.q.is_negative() { '-' } else { '+' };
        let q = self.q.abs();
        if q.is_one() {
            write!(f, "({} {} √{})", self.p, op, self.delta)?;
        } else {
            write!(f, "({} {} {}√{})", self.p, op, q, self.delta)?;
        }
        if !self.r.is_one() {
            write!(f, "/{}", self.r)?;
        }
        Ok(())
    }
}

// Operator sugar for code that already holds values from one field. Mixing
// radicands is a contract violation and panics; use `combine` to get an error.
macro_rules! field_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait for &QuadraticValue {
            type Output = QuadraticValue;
            fn $method(self, rhs: &QuadraticValue) -> QuadraticValue {
                self.combine(rhs, $op)
                    .expect("quadratic values from different fields")
            }
        }
        impl $trait for QuadraticValue {
            type Output = QuadraticValue;
            fn $method(self, rhs: QuadraticValue) -> QuadraticValue {
                (&self).$method(&rhs)
            }
        }
    };
}

field_op!(Add, add, QuadOp::Add);
field_op!(Sub, sub, QuadOp::Sub);
field_op!(Mul, mul, QuadOp::Mul);

impl Neg for &QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        QuadraticValue {
            p: -&self.p,
            q: -&self.q,
            r: self.r.clone(),
            delta: self.delta,
        }
    }
}

impl Neg for QuadraticValue {
    type Output = QuadraticValue;
    fn neg(self) -> QuadraticValue {
        -&self
    }
}
