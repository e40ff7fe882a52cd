//! Denominator clearing for `m_n(p/r, 1 - p/r)`.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::exact::{factorial, from_int, gcd_u64, is_integer, legendre_valuation, rat, ExactRational, PrimeFactorization};
use crate::moments::{m, BetaParams};

/// `r^n · ∏_{d | r prime} d^{ν_d(n!)}`.
pub fn multiplier(n: u64, r: u64) -> Result<BigInt> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("r must be at least 2, got {r}")));
    }
    let mut out = Pow::pow(BigInt::from(r), n);
    for d in PrimeFactorization::of(r)?.primes() {
        out *= Pow::pow(BigInt::from(d), legendre_valuation(n, d)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityRow {
    pub n: u64,
    pub multiplier: BigInt,
    pub raw: ExactRational,
    pub product: ExactRational,
    pub is_integer: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub p: u64,
    pub r: u64,
    pub rows: Vec<IntegralityRow>,
}

impl IntegralityReport {
    pub fn all_integer(&self) -> bool {
        self.rows.iter().all(|row| row.is_integer)
    }
}

fn validate(p: u64, r: u64) -> Result<BetaParams> {
    if p == 0 || p >= r || gcd_u64(p, r) != 1 {
        return Err(Error::Precondition(format!(
            "need coprime 0 < p < r, got p = {p}, r = {r}"
        )));
    }
    let alpha = rat(p as i64, r as i64);
    let beta = rat(1, 1) - &alpha;
    BetaParams::new(alpha, beta)
}

pub fn check_integrality(p: u64, r: u64, max_n: u64) -> Result<IntegralityReport> {
    let params = validate(p, r)?;
    let rows = (0..=max_n)
        .map(|n| {
            let multiplier = multiplier(n, r)?;
            let raw = m(n, &params);
            let product = &raw * from_int(multiplier.clone());
            Ok(IntegralityRow {
                n,
                is_integer: is_integer(&product),
                multiplier,
                raw,
                product,
            })
        })
        .collect::<Result<_>>()?;
    Ok(IntegralityReport { p, r, rows })
}

/// `∏_{j<n}(jr + p) · ∏ d^{ν_d(n!)} / n!`, the product form of the cleared moment.
pub fn product_form(p: u64, r: u64, n: u64) -> Result<ExactRational> {
    validate(p, r)?;
    let num: BigInt = (0..n).map(|j| BigInt::from(j * r + p)).product();
    let mut extra = BigInt::one();
    for d in PrimeFactorization::of(r)?.primes() {
        extra *= Pow::pow(BigInt::from(d), legendre_valuation(n, d)?);
    }
    Ok(ExactRational::new(num * extra, factorial(n)))
}

/// `6 · 3^{Σ_{j≥0} ⌊n/3^j⌋} · 2^{⌊n/2⌋} · m_n(1/3, 6 - 1/3)` for `n = 1..=max_n`.
pub fn demo_nonintegral(max_n: u64) -> Vec<ExactRational> {
    let params = BetaParams::new(rat(1, 3), rat(17, 3)).expect("positive");
    (1..=max_n)
        .map(|n| {
            let e3 = n + legendre_valuation(n, 3).expect("3 >= 2");
            let f = BigInt::from(6) * Pow::pow(BigInt::from(3), e3) * Pow::pow(BigInt::from(2), n / 2);
            from_int(f) * m(n, &params)
        })
        .collect()
}

/// Indices `n <= max_n` at which `multiplier / d` no longer clears the denominator.
///
/// Exploratory: the multiplier is not claimed minimal.
pub fn minimality_probe(p: u64, r: u64, d: u64, max_n: u64) -> Result<Vec<u64>> {
    let report = check_integrality(p, r, max_n)?;
    Ok(report
        .rows
        .iter()
        .filter(|row| !is_integer(&(&row.product / rat(d as i64, 1))))
        .map(|row| row.n)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ri;

    #[test]
    fn multiplier_examples() {
        assert_eq!(multiplier(3, 3).unwrap(), BigInt::from(81));
        assert_eq!(multiplier(2, 3).unwrap(), BigInt::from(9));
        assert_eq!(multiplier(4, 6).unwrap(), BigInt::from(1296 * 8 * 3));
        assert!(multiplier(4, 1).is_err());
    }

    #[test]
    fn one_third() {
        let rep = check_integrality(1, 3, 3).unwrap();
        let prods: Vec<_> = rep.rows.iter().map(|r| r.product.clone()).collect();
        assert_eq!(prods, vec![ri(1), ri(1), ri(2), ri(14)]);
        assert!(rep.all_integer());
    }

    #[test]
    fn one_half_is_central_binomial_times_power() {
        // m_n(1/2,1/2) = C(2n,n)/4^n, so the product is C(2n,n) 2^{ν_2(n!)} / 2^n.
        let rep = check_integrality(1, 2, 30).unwrap();
        for row in &rep.rows {
            let n = row.n;
            let oracle = from_int(crate::exact::central_binomial(n))
                * from_int(Pow::pow(BigInt::from(2), legendre_valuation(n, 2).unwrap()))
                / from_int(Pow::pow(BigInt::from(2), n));
            assert_eq!(row.product, oracle);
            assert!(row.is_integer);
        }
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(check_integrality(2, 4, 3).is_err());
        assert!(check_integrality(3, 3, 3).is_err());
        assert!(check_integrality(0, 3, 3).is_err());
    }

    #[test]
    fn all_small_denominators() {
        for r in 2..=12u64 {
            for p in 1..r {
                if gcd_u64(p, r) == 1 {
                    assert!(check_integrality(p, r, 100).unwrap().all_integer(), "{p}/{r}");
                }
            }
        }
    }

    #[test]
    fn product_form_agrees() {
        for (p, r) in [(1, 3), (2, 5), (1, 8), (5, 12)] {
            let rep = check_integrality(p, r, 100).unwrap();
            for row in rep.rows {
                assert_eq!(product_form(p, r, row.n).unwrap(), row.product);
            }
        }
    }

    #[test]
    fn demo_values() {
        let expected = [
            rat(1, 1),
            rat(8, 7),
            rat(3, 1),
            rat(20, 3),
            rat(26, 3),
            rat(832, 11),
            rat(3952, 33),
            rat(1216, 3),
            rat(45600, 7),
        ];
        assert_eq!(demo_nonintegral(9), expected);
    }

    #[test]
    fn probe_one_third() {
        let breaks = minimality_probe(1, 3, 3, 50).unwrap();
        assert!(!breaks.is_empty());
    }
}
