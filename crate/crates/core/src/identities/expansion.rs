//! Moment identities from expanding the ratio of two Beta densities.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    binomial, catalan, factorial, from_int, is_integer, pow_i, rat, ri, rising_factorial,
    ExactRational,
};
use crate::moments::{moment, symmetric_moment, MomentSpec};

use super::gamma::{beta_ratio, PiMultiple};
use super::interval::Interval;
use super::tail::{sum_with_tail, HyperRatio, TailCertificate};

/// `c_k(a, b) = Σ_j C(k,j) (-1)^{k-j} (a)_j (b)_{k-j}` with falling factorials.
pub fn expansion_c(k: u64, a: &ExactRational, b: &ExactRational) -> ExactRational {
    // fb[i] = (b)_i
    let mut fb = Vec::with_capacity(k as usize + 1);
    let mut f = ri(1);
    for i in 0..=k {
        fb.push(f.clone());
        f *= b - from_int(i.into());
    }
    let mut fa = ri(1);
    let mut c = num_bigint::BigInt::from(1);
    let mut acc = ri(0);
    for j in 0..=k {
        let t = from_int(c.clone()) * &fa * &fb[(k - j) as usize];
        if (k - j) % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
        fa *= a - from_int(j.into());
        c = c * (k - j) / (j + 1);
    }
    acc
}

/// Catalan numbers extended by `C_{-1} = -1/2`.
pub fn catalan_ext(n: i64) -> ExactRational {
    match n {
        -1 => rat(-1, 2),
        n if n < -1 => ri(0),
        n => from_int(catalan(n as u64)),
    }
}

/// `d_0 = 1`, `d_n = n!/(2·4^{n-1}) Σ_{k=0}^{n} (-1)^{k-1} C(2k,k) C_{n-k-1}`.
pub fn d(n: u64) -> ExactRational {
    if n == 0 {
        return ri(1);
    }
    let sum: ExactRational = (0..=n)
        .map(|k| {
            let t = from_int(binomial(2 * k, k as i64)) * catalan_ext(n as i64 - k as i64 - 1);
            if k % 2 == 1 {
                t
            } else {
                -t
            }
        })
        .sum();
    from_int(factorial(n)) / (ri(2) * pow_i(&ri(4), n as i64 - 1)) * sum
}

/// `prefactor · (partial + tail)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesValue {
    pub prefactor: PiMultiple,
    pub partial: ExactRational,
    pub tail: TailCertificate,
}

impl SeriesValue {
    /// The value itself when the tail is exact and no power of π remains.
    pub fn exact(&self) -> Option<ExactRational> {
        let c = self.prefactor.as_rational()?;
        self.tail.is_exact().then(|| c * (&self.partial + &self.tail.lo))
    }

    pub fn enclosure(&self, bits: u32) -> Interval {
        let s = Interval::new(&(&self.partial + &self.tail.lo), &(&self.partial + &self.tail.hi), bits);
        self.prefactor.enclosure(bits).mul(&s)
    }

    /// Exact value as a degenerate interval, otherwise the enclosure endpoints.
    pub fn bounds(&self, bits: u32) -> (ExactRational, ExactRational) {
        match self.exact() {
            Some(v) => (v.clone(), v),
            None => {
                let e = self.enclosure(bits);
                (e.lo().clone(), e.hi().clone())
            }
        }
    }

    pub fn contains(&self, x: &ExactRational, bits: u32) -> bool {
        match self.exact() {
            Some(v) => &v == x,
            None => self.enclosure(bits).contains(x),
        }
    }
}

fn nonneg_integer(x: &ExactRational) -> Option<u64> {
    is_integer(x).then(|| u64::try_from(x.to_integer()).ok()).flatten()
}

fn check_normalization(v: &SeriesValue, what: &str) -> Result<()> {
    if v.contains(&ExactRational::one(), super::interval::DEFAULT_PRECISION) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what}: expansion constant fails normalization at n = 0")))
    }
}

fn ratio_series(
    n: u64,
    alpha: &ExactRational,
    beta: &ExactRational,
    gamma: &ExactRational,
    delta: &ExactRational,
    j: u64,
    target: &ExactRational,
) -> Result<SeriesValue> {
    let a = nonneg_integer(&(alpha - gamma))
        .ok_or_else(|| Error::Precondition(format!("α - γ = {} must be a nonnegative integer", alpha - gamma)))?;
    let b = beta - delta;
    let inner = MomentSpec::new(ri(0), gamma.clone(), delta.clone())?;
    let prefactor = PiMultiple::rational(pow_i(&ri(4), -(a as i64))) * beta_ratio(gamma, delta, alpha, beta)?;
    let term = |k: u64| {
        rising_factorial(&-&b, k) / (from_int(factorial(k)) * pow_i(&ri(4), k as i64)) * moment(n + k + a, &inner)
    };
    let shift = gamma + from_int((n + a).into());
    let ratio = HyperRatio::new(vec![-&b, shift.clone()], vec![ri(1), shift + delta]);
    let (partial, tail) = sum_with_tail(term, &ratio, j, target)?;
    Ok(SeriesValue {
        prefactor,
        partial,
        tail,
    })
}

/// `M_n(0,α,β) = K Σ_k (-(β-δ))^{(k)}/(k! 4^k) M_{n+k+α-γ}(0,γ,δ)` with
/// `K = 4^{-(α-γ)} B(γ,δ)/B(α,β)`.
///
/// Requires `α - γ ∈ ℕ`. The constant is checked against `M_0 = 1`.
pub fn ratio_expansion(
    n: u64,
    alpha: &ExactRational,
    beta: &ExactRational,
    gamma: &ExactRational,
    delta: &ExactRational,
    j: u64,
    target: &ExactRational,
) -> Result<SeriesValue> {
    let v = ratio_series(n, alpha, beta, gamma, delta, j, target)?;
    if n == 0 {
        check_normalization(&v, "ratio expansion")?;
    } else {
        check_normalization(&ratio_series(0, alpha, beta, gamma, delta, j, target)?, "ratio expansion")?;
    }
    Ok(v)
}

/// Which density ratio `(1 + y/2)^a (1 - y/2)^b` the symmetric expansion uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SymmetricShape {
    /// `a = b`: `(1 - y²/4)^a`.
    Even,
    /// `(a, b) = (∓1/2, ±1/2)`: `((1 ∓ u)/(1 ± u))^{1/2}`, `u = y/2`.
    HalfTwist,
}

fn symmetric_series(
    n: u64,
    alpha: &ExactRational,
    beta: &ExactRational,
    gamma: &ExactRational,
    j: u64,
    target: &ExactRational,
) -> Result<SeriesValue> {
    let a = alpha - gamma;
    let b = beta - gamma;
    let shape = if a == b {
        SymmetricShape::Even
    } else if (&a + &b).is_zero() && (a == rat(1, 2) || a == rat(-1, 2)) {
        SymmetricShape::HalfTwist
    } else {
        return Err(Error::Precondition(format!(
            "unsupported symmetric expansion shape (α-γ, β-δ) = ({a}, {b})"
        )));
    };
    if !is_integer(&(&a + &b)) {
        return Err(Error::Precondition("α + β - γ - δ must be an integer".into()));
    }
    let sum = (&a + &b).to_integer();
    let e: i64 = (&sum).try_into().map_err(|_| Error::InvalidParameter(sum.to_string()))?;
    let prefactor = PiMultiple::rational(pow_i(&ri(2), -e)) * beta_ratio(gamma, gamma, alpha, beta)?;

    // The k-th term c_k/(2^k k!) S_{n+k}(γ,γ) vanishes unless k ≡ n (mod 2);
    // the series is indexed by i with k = 2i + (n mod 2).
    let parity = n % 2;
    let half = n / 2;
    let k_of = |i: u64| 2 * i + parity;
    let term = |i: u64| {
        let k = k_of(i);
        expansion_c(k, &a, &b) / (pow_i(&ri(2), k as i64) * from_int(factorial(k)))
            * symmetric_moment(n + k, gamma, gamma).expect("γ > 0")
    };
    let hj = from_int(half.into());
    let ratio = match shape {
        SymmetricShape::Even if parity == 1 => {
            return Ok(SeriesValue {
                prefactor,
                partial: ri(0),
                tail: TailCertificate {
                    truncation: 0,
                    method: super::tail::TailMethod::Terminating,
                    lo: ri(0),
                    hi: ri(0),
                },
            })
        }
        SymmetricShape::Even => HyperRatio::new(vec![-&a, &hj + rat(1, 2)], vec![ri(1), &hj + gamma + rat(1, 2)]),
        SymmetricShape::HalfTwist => {
            let p = rat(1, 2) + from_int(parity.into());
            HyperRatio::new(vec![rat(1, 2), &hj + &p], vec![ri(1), &hj + gamma + &p])
        }
    };
    let (partial, tail) = sum_with_tail(term, &ratio, j, target)?;
    Ok(SeriesValue {
        prefactor,
        partial,
        tail,
    })
}

/// `S_n(α,β) = 2^{-(a+b)} B(γ,δ)/B(α,β) Σ_k c_k(a,b)/(2^k k!) S_{n+k}(γ,δ)`,
/// `a = α-γ`, `b = β-δ`.
///
/// Supported for `γ = δ` with `a = b` or `(a, b) = (∓1/2, ±1/2)`, where the
/// terms are hypergeometric in `k`.
#[allow(clippy::too_many_arguments)]
pub fn symmetric_expansion(
    n: u64,
    alpha: &ExactRational,
    beta: &ExactRational,
    gamma: &ExactRational,
    delta: &ExactRational,
    j: u64,
    target: &ExactRational,
) -> Result<SeriesValue> {
    if gamma != delta {
        return Err(Error::Precondition("symmetric expansion needs γ = δ".into()));
    }
    let v = symmetric_series(n, alpha, beta, gamma, j, target)?;
    let v0 = if n == 0 { v.clone() } else { symmetric_series(0, alpha, beta, gamma, j, target)? };
    check_normalization(&v0, "symmetric expansion")?;
    Ok(v)
}
