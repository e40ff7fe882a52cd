//! Gamma and Beta values at integers and half-integers, kept as `q · π^{k/2}`.

use std::fmt;
use std::ops::{Div, Mul};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{factorial, from_int, is_integer, pow_i, rat, rising_factorial, ExactRational};

use super::interval::{pi, Interval};

/// The number `coef · π^{half_pi_power / 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub coef: ExactRational,
    pub half_pi_power: i32,
}

impl PiMultiple {
    pub fn rational(coef: ExactRational) -> Self {
        PiMultiple { coef, half_pi_power: 0 }
    }

    pub fn as_rational(&self) -> Option<&ExactRational> {
        (self.half_pi_power == 0).then_some(&self.coef)
    }

    pub fn enclosure(&self, bits: u32) -> Interval {
        let c = Interval::point(&self.coef, bits);
        let k = self.half_pi_power;
        if k == 0 {
            return c;
        }
        let p = pi(bits + 16);
        let base = if k % 2 == 0 { p.pow(k.unsigned_abs() / 2) } else { p.sqrt().pow(k.unsigned_abs()) };
        let base = if k < 0 {
            let inv_lo = ExactRational::one() / base.hi();
            let inv_hi = ExactRational::one() / base.lo();
            Interval::new(&inv_lo, &inv_hi, bits)
        } else {
            base
        };
        c.mul(&base)
    }
}

impl Mul for PiMultiple {
    type Output = PiMultiple;
    fn mul(self, rhs: Self) -> Self {
        PiMultiple {
            coef: self.coef * rhs.coef,
            half_pi_power: self.half_pi_power + rhs.half_pi_power,
        }
    }
}

impl Div for PiMultiple {
    type Output = PiMultiple;
    fn div(self, rhs: Self) -> Self {
        PiMultiple {
            coef: self.coef / rhs.coef,
            half_pi_power: self.half_pi_power - rhs.half_pi_power,
        }
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.half_pi_power {
            0 => write!(f, "{}", self.coef),
            2 => write!(f, "{}·π", self.coef),
            k if k % 2 == 0 => write!(f, "{}·π^{}", self.coef, k / 2),
            k => write!(f, "{}·π^({}/2)", self.coef, k),
        }
    }
}

/// `Γ(x)` for positive integers and half-integers.
pub fn gamma(x: &ExactRational) -> Result<PiMultiple> {
    if !x.is_positive() {
        return Err(Error::InvalidParameter(format!("gamma argument {x} must be positive")));
    }
    if is_integer(x) {
        let n: u64 = x.to_integer().try_into().map_err(|_| Error::InvalidParameter(x.to_string()))?;
        return Ok(PiMultiple::rational(from_int(factorial(n - 1))));
    }
    let twice = x * rat(2, 1);
    if !is_integer(&twice) {
        return Err(Error::Precondition(format!("gamma({x}) is not an integer or half-integer value")));
    }
    // Γ(n + 1/2) = (2n)! / (4^n n!) · √π
    let n: u64 = (x - rat(1, 2)).to_integer().try_into().map_err(|_| Error::InvalidParameter(x.to_string()))?;
    let coef = from_int(factorial(2 * n)) / (pow_i(&rat(4, 1), n as i64) * from_int(factorial(n)));
    Ok(PiMultiple { coef, half_pi_power: 1 })
}

pub fn beta(a: &ExactRational, b: &ExactRational) -> Result<PiMultiple> {
    Ok(gamma(a)? * gamma(b)? / gamma(&(a + b))?)
}

/// `Γ(x) / Γ(y)`, exact whenever `x - y` is an integer.
pub fn gamma_ratio(x: &ExactRational, y: &ExactRational) -> Result<PiMultiple> {
    let d = x - y;
    if is_integer(&d) {
        let k: i64 = d.to_integer().try_into().map_err(|_| Error::InvalidParameter(d.to_string()))?;
        let v = if k >= 0 {
            rising_factorial(y, k as u64)
        } else {
            ExactRational::one() / rising_factorial(x, k.unsigned_abs())
        };
        return Ok(PiMultiple::rational(v));
    }
    Ok(gamma(x)? / gamma(y)?)
}

/// `B(γ, δ) / B(α, β)`.
pub fn beta_ratio(
    gamma_: &ExactRational,
    delta: &ExactRational,
    alpha: &ExactRational,
    beta_: &ExactRational,
) -> Result<PiMultiple> {
    Ok(gamma_ratio(gamma_, alpha)? * gamma_ratio(delta, beta_)? * gamma_ratio(&(alpha + beta_), &(gamma_ + delta))?)
}
