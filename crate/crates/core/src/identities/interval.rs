//! Closed intervals with dyadic endpoints and outward rounding.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{floor_log2, from_int, pow2, ExactRational};

/// Working precision in bits.
pub const DEFAULT_PRECISION: u32 = 192;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: ExactRational,
    hi: ExactRational,
    bits: u32,
}

fn scale_exponent(x: &ExactRational, bits: u32) -> i64 {
    if x.is_zero() {
        return bits as i64;
    }
    bits as i64 - floor_log2(&x.abs())
}

fn round_down(x: &ExactRational, bits: u32) -> ExactRational {
    let e = scale_exponent(x, bits);
    let s = pow2(e);
    from_int((x * &s).floor().to_integer()) / s
}

fn round_up(x: &ExactRational, bits: u32) -> ExactRational {
    let e = scale_exponent(x, bits);
    let s = pow2(e);
    from_int((x * &s).ceil().to_integer()) / s
}

impl Interval {
    /// Encloses `[lo, hi]`, rounding both ends outward to `bits` significant bits.
    pub fn new(lo: &ExactRational, hi: &ExactRational, bits: u32) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval {
            lo: round_down(lo, bits),
            hi: round_up(hi, bits),
            bits,
        }
    }

    pub fn point(x: &ExactRational, bits: u32) -> Self {
        Self::new(x, x, bits)
    }

    pub fn lo(&self) -> &ExactRational {
        &self.lo
    }

    pub fn hi(&self) -> &ExactRational {
        &self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &ExactRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&(&self.lo + &other.lo), &(&self.hi + &other.hi), self.bits.min(other.bits))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = p.iter().min().unwrap();
        let hi = p.iter().max().unwrap();
        Self::new(lo, hi, self.bits.min(other.bits))
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        self.mul(&Self::point(s, self.bits))
    }

    /// Enclosure of the square root of a nonnegative interval.
    pub fn sqrt(&self) -> Self {
        assert!(!self.lo.is_negative(), "sqrt of negative interval");
        let e = 2 * (self.bits as i64 + 8);
        let s = pow2(e);
        let lo = (&self.lo * &s).floor().to_integer().sqrt();
        let hi_sq = (&self.hi * &s).ceil().to_integer();
        let mut hi = hi_sq.sqrt();
        if &hi * &hi < hi_sq {
            hi += 1;
        }
        let root = pow2(e / 2);
        Self::new(&(from_int(lo) / &root), &(from_int(hi) / &root), self.bits)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::point(&ExactRational::one(), self.bits);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        ((&self.lo + &self.hi) / ExactRational::from_integer(BigInt::from(2)))
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::ToPrimitive;
        write!(
            f,
            "[{:.22e}, {:.22e}]",
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN)
        )
    }
}

/// Bracket of `atan(1/q)` from consecutive alternating partial sums.
fn atan_inv(q: i64, bits: u32) -> (ExactRational, ExactRational) {
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let eps = pow2(-(bits as i64) - 16);
    let mut sum = ExactRational::zero();
    let mut power = q.clone();
    let mut k = 0u64;
    loop {
        let term = ExactRational::new(BigInt::one(), &power * BigInt::from(2 * k + 1));
        let next = if k % 2 == 0 { &sum + &term } else { &sum - &term };
        if term < eps {
            return if k % 2 == 0 { (sum, next) } else { (next, sum) };
        }
        sum = next;
        power *= &q2;
        k += 1;
    }
}

/// Enclosure of π from Machin's formula `π = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(bits: u32) -> Interval {
    let (a_lo, a_hi) = atan_inv(5, bits);
    let (b_lo, b_hi) = atan_inv(239, bits);
    let sixteen = ExactRational::from_integer(BigInt::from(16));
    let four = ExactRational::from_integer(BigInt::from(4));
    Interval::new(
        &(&sixteen * a_lo - &four * b_hi),
        &(&sixteen * a_hi - &four * b_lo),
        bits,
    )
}
