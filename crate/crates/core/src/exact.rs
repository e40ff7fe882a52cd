//! Exact integers and rationals plus the factorial-family kernels.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator, so equality is structural.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type ExactRational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as an exact rational.
pub fn ri(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn from_int(n: BigInt) -> ExactRational {
    ExactRational::from_integer(n)
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::InvalidParameter(format!("zero denominator in {s:?}")));
    }
    Ok(ExactRational::new(n, d))
}

pub fn is_integer(x: &ExactRational) -> bool {
    x.denom().is_one()
}

/// `x (x+1) ... (x+n-1)`.
pub fn rising_factorial(x: &ExactRational, n: u64) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f += BigInt::one();
    }
    acc
}

/// `x (x-1) ... (x-n+1)`.
pub fn falling_factorial(x: &ExactRational, n: u64) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc *= &f;
        f -= BigInt::one();
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // the running product of i consecutive integers is divisible by i!
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Generalised binomial coefficient `x choose k = falling(x, k) / k!`.
pub fn binomial_rational(x: &ExactRational, k: u64) -> ExactRational {
    falling_factorial(x, k) / from_int(factorial(k))
}

pub fn central_binomial(n: u64) -> BigInt {
    binomial(2 * n, n as i64)
}

pub fn catalan(n: u64) -> BigInt {
    central_binomial(n) / (n + 1)
}

/// `sum_{m >= 1} floor(n / d^m)`, the exponent of a prime `d` in `n!`.
pub fn legendre_valuation(n: u64, d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("legendre base must be >= 2, got {d}")));
    }
    let mut total = 0;
    let mut q = n / d;
    while q > 0 {
        total += q;
        q /= d;
    }
    Ok(total)
}

/// Prime factorisation by trial division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cannot factor 0".into()));
        }
        let mut factors = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            factors.push((m, 1));
        }
        Ok(Self { factors })
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |acc, &(p, e)| acc * BigInt::from(p).pow(e))
    }
}

/// `b^e` for a possibly negative exponent.
pub fn pow_i(b: &ExactRational, e: i64) -> ExactRational {
    if e >= 0 {
        num_traits::pow(b.clone(), e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

/// Returns `Some(k)` when `x` is an integer that fits in `i64`.
pub fn as_i64(x: &ExactRational) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(x.numer()).ok()
}

/// `2^k` with `k` possibly negative.
pub fn pow2(k: i64) -> ExactRational {
    pow_i(&ri(2), k)
}

/// Floor of `log2 |x|`, for `x != 0`.
pub fn floor_log2(x: &ExactRational) -> i64 {
    let n = x.numer().abs();
    let d = x.denom().clone();
    let mut e = n.bits() as i64 - d.bits() as i64;
    // 2^e <= |x| < 2^(e+1) after at most one correction
    let two_e = pow2(e);
    let ax = ExactRational::new(n, d);
    if ax < two_e {
        e -= 1;
    } else if ax >= two_e * ri(2) {
        e += 1;
    }
    e
}

/// `gcd` of two machine integers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_nu(n: u64, p: u64) -> u64 {
        let mut total = 0;
        for k in 1..=n {
            let mut m = k;
            while m % p == 0 {
                m /= p;
                total += 1;
            }
        }
        total
    }

    #[test]
    fn rising_examples() {
        assert_eq!(rising_factorial(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(rising_factorial(&rat(7, 3), 0), ri(1));
        assert_eq!(rising_factorial(&rat(3, 2), 2), rat(15, 4));
        // (2i+2n)! i! / (4^n (i+n)! (2i)!) at i = 1, n = 2
        let closed = from_int(factorial(6) * factorial(1))
            / from_int(BigInt::from(16) * factorial(3) * factorial(2));
        assert_eq!(closed, rat(15, 4));
    }

    #[test]
    fn falling_examples() {
        assert_eq!(falling_factorial(&rat(1, 2), 2), rat(-1, 4));
        assert_eq!(falling_factorial(&rat(5, 2), 2), rat(15, 4));
        assert_eq!(falling_factorial(&rat(-1, 2), 3), -rising_factorial(&rat(1, 2), 3));
        assert_eq!(falling_factorial(&rat(-1, 2), 3), rat(-15, 8));
    }

    #[test]
    fn rising_of_integers_is_factorial_ratio() {
        for k in 1..8u64 {
            for n in 0..10u64 {
                let lhs = rising_factorial(&ri(k as i64), n);
                let rhs = from_int(factorial(n + k - 1)) / from_int(factorial(k - 1));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn combinatorial_values() {
        let cat: Vec<BigInt> = (0..5).map(catalan).collect();
        assert_eq!(cat, [1, 1, 2, 5, 14].map(BigInt::from));
        let cb: Vec<BigInt> = (0..4).map(central_binomial).collect();
        assert_eq!(cb, [1, 2, 6, 20].map(BigInt::from));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigInt::one()];
        for n in 0..40u64 {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), v);
            }
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_valuation(10, 3).unwrap(), 4);
        assert_eq!(legendre_valuation(0, 5).unwrap(), 0);
        assert_eq!(legendre_valuation(100, 2).unwrap(), 97);
        assert!(legendre_valuation(5, 1).is_err());
    }

    #[test]
    fn legendre_matches_brute_force() {
        for p in [2, 3, 5, 7] {
            for n in 0..=200 {
                assert_eq!(legendre_valuation(n, p).unwrap(), brute_nu(n, p), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn factorization() {
        let f = PrimeFactorization::of(360).unwrap();
        assert_eq!(f.factors, vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f.product(), BigInt::from(360));
        assert_eq!(PrimeFactorization::of(1).unwrap().factors, vec![]);
        assert_eq!(PrimeFactorization::of(97).unwrap().factors, vec![(97, 1)]);
        assert!(PrimeFactorization::of(0).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational(" 7 ").unwrap(), ri(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(6, -4).to_string(), "-3/2");
    }

    #[test]
    fn log2_floor() {
        assert_eq!(floor_log2(&ri(1)), 0);
        assert_eq!(floor_log2(&ri(8)), 3);
        assert_eq!(floor_log2(&rat(9, 1)), 3);
        assert_eq!(floor_log2(&rat(1, 3)), -2);
        assert_eq!(floor_log2(&rat(-1, 4)), -2);
    }
}
