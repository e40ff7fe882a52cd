//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `N` knows the coefficients of `x^0 .. x^N`; binary
//! operations keep the smaller order of their operands.

pub mod closed_form;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial_rational, ri, ExactRational};
use crate::moments::{m_sequence, BetaParams, MomentSequence, MomentSpec};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<ExactRational>,
}

impl PowerSeries {
    /// Series whose known coefficients are exactly `coeffs`.
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least one coefficient");
        Self { coeffs }
    }

    /// A polynomial viewed as a series of the given order.
    pub fn from_poly(poly: &[ExactRational], order: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        for (i, c) in poly.iter().enumerate().take(order + 1) {
            coeffs[i] = c.clone();
        }
        Self { coeffs }
    }

    /// Polynomial with small integer coefficients.
    pub fn from_ints(poly: &[i64], order: usize) -> Self {
        let p: Vec<_> = poly.iter().map(|&v| ri(v)).collect();
        Self::from_poly(&p, order)
    }

    pub fn constant(c: ExactRational, order: usize) -> Self {
        Self::from_poly(&[c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ExactRational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &ExactRational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, s: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// `f(q x)`.
    pub fn rescale(&self, q: &ExactRational) -> Self {
        let mut p = ExactRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &p;
                p *= q;
                v
            })
            .collect();
        Self { coeffs }
    }

    /// `x^k f(x)`; the order grows by `k`.
    pub fn mul_x_power(&self, k: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `f(x) / x^k`, requiring the low `k` coefficients to vanish.
    pub fn div_x_power(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InsufficientLength {
                needed: k + 1,
                available: self.coeffs.len(),
            });
        }
        if let Some(i) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::Cancellation { power: k, index: i });
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `1 / f`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let n = self.coeffs.len();
        let mut out: Vec<ExactRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let s = (1..=k).fold(ExactRational::zero(), |acc, j| acc + &self.coeffs[j] * &out[k - j]);
            out.push(-s * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// Square root with constant term 1, by Newton iteration
    /// `y <- (y + f / y) / 2` doubling the precision each step.
    pub fn sqrt(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if !a0.is_one() {
            return Err(Error::NonUnitConstant(a0.to_string()));
        }
        let target = self.order();
        let half = ExactRational::new(BigInt::one(), BigInt::from(2));
        let mut y = Self::one(0);
        let mut prec = 0usize;
        while prec < target {
            prec = (2 * prec + 1).min(target);
            let f = self.truncate(prec);
            let y_ext = Self::from_poly(&y.coeffs, prec);
            let q = &f * &y_ext.reciprocal()?;
            y = (&y_ext + &q).scale(&half);
        }
        Ok(y)
    }

    /// `(1 + c x)^r` to the given order.
    pub fn binomial_power(c: &ExactRational, r: &ExactRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cp = ExactRational::one();
        for k in 0..=order {
            coeffs.push(binomial_rational(r, k as u64) * &cp);
            cp *= c;
        }
        Self { coeffs }
    }

    /// `self(h(x))` for `h(0) = 0`.
    pub fn compose(&self, h: &Self) -> Result<Self> {
        if !h.coeffs[0].is_zero() {
            return Err(Error::Precondition("inner series of a composition must vanish at 0".into()));
        }
        let order = self.order().min(h.order());
        let h = h.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &(&acc * &h) + &Self::constant(self.coeffs[k].clone(), order);
        }
        Ok(acc)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&ExactRational, &ExactRational) -> ExactRational) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        Self {
            coeffs: (0..n).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect(),
        }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(ExactRational::zero(), |acc, j| {
                    if self.coeffs[j].is_zero() {
                        acc
                    } else {
                        acc + &self.coeffs[j] * &rhs.coeffs[k - j]
                    }
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

/// `Σ_n M_n(spec) x^n` to order `order`.
pub fn gf_of_moments(spec: &MomentSpec, order: usize) -> PowerSeries {
    PowerSeries::new(MomentSequence::compute(spec, order + 1).terms)
}

/// `Σ_n m_n(α,β) t^n` to order `order`.
pub fn gf_of_raw_moments(params: &BetaParams, order: usize) -> PowerSeries {
    PowerSeries::new(m_sequence(params, order + 1))
}

/// `(1/(1 - c x)) g(x/(1 - c x))`, the generating function of the
/// binomially re-centred sequence.
pub fn substitute_shift(g: &PowerSeries, c: &ExactRational) -> Result<PowerSeries> {
    let order = g.order();
    let inv = PowerSeries::from_poly(&[ri(1), -c.clone()], order).reciprocal()?;
    let inner = inv.mul_x_power(1).truncate(order);
    Ok(&inv * &g.compose(&inner)?)
}

/// Which shape parameter `gf_param_shift` raises by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamShift {
    Alpha,
    Beta,
}

/// From the raw-moment generating function of `(α,β)` to that of
/// `(α+1,β)` or `(α,β+1)`; the order drops by one.
pub fn gf_param_shift(g: &PowerSeries, params: &BetaParams, dir: ParamShift) -> Result<(PowerSeries, BetaParams)> {
    let s = params.sum();
    let one = PowerSeries::one(g.order());
    match dir {
        ParamShift::Alpha => {
            let num = (g - &one).div_x_power(1)?;
            let next = BetaParams::new(params.alpha() + ri(1), params.beta().clone())?;
            Ok((num.scale(&(s / params.alpha())), next))
        }
        ParamShift::Beta => {
            let one_minus_x = PowerSeries::from_ints(&[1, -1], g.order());
            let num = (&one - &(&one_minus_x * g)).div_x_power(1)?;
            let next = BetaParams::new(params.alpha().clone(), params.beta() + ri(1))?;
            Ok((num.scale(&(s / params.beta())), next))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{catalan, from_int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&x| ri(x)).collect()
    }

    fn spec(c: ExactRational, a: ExactRational, b: ExactRational) -> MomentSpec {
        MomentSpec::new(c, a, b).unwrap()
    }

    #[test]
    fn sqrt_examples() {
        let s = PowerSeries::from_ints(&[1, -4], 4).sqrt().unwrap();
        assert_eq!(s.coeffs(), &ints(&[1, -2, -2, -4, -10])[..]);
        let sq = &s * &s;
        assert_eq!(sq.coeffs(), &ints(&[1, -4, 0, 0, 0])[..]);
        assert_eq!(
            PowerSeries::from_ints(&[2, 1], 3).sqrt(),
            Err(Error::NonUnitConstant("2".into()))
        );
        assert_eq!(PowerSeries::from_ints(&[0, 1], 3).sqrt(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn sqrt_agrees_with_binomial_expansion() {
        for order in [0, 1, 2, 7, 30] {
            let s = PowerSeries::from_ints(&[1, -4], order).sqrt().unwrap();
            assert_eq!(s, PowerSeries::binomial_power(&ri(-4), &rat(1, 2), order));
        }
    }

    #[test]
    fn reciprocal_examples() {
        let r = PowerSeries::from_ints(&[1, -1], 6).reciprocal().unwrap();
        assert_eq!(r.coeffs(), &ints(&[1; 7])[..]);
        assert_eq!(PowerSeries::from_ints(&[0, 1], 3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn x_division_checks_residue() {
        let f = PowerSeries::from_ints(&[0, 0, 3, 4], 3);
        assert_eq!(f.div_x_power(2).unwrap().coeffs(), &ints(&[3, 4])[..]);
        assert_eq!(f.div_x_power(3), Err(Error::Cancellation { power: 3, index: 2 }));
    }

    #[test]
    fn gf_examples() {
        let g = gf_of_moments(&spec(ri(0), rat(1, 2), rat(1, 2)), 3);
        assert_eq!(g.coeffs(), &ints(&[1, 2, 6, 20])[..]);
        let g = gf_of_moments(&spec(ri(0), rat(1, 2), rat(3, 2)), 4);
        let cat: Vec<_> = (0..5).map(|n| from_int(catalan(n))).collect();
        assert_eq!(g.coeffs(), &cat[..]);
        let g = gf_of_raw_moments(&BetaParams::new(rat(1, 2), rat(1, 2)).unwrap(), 3);
        assert_eq!(g.coeffs(), &[ri(1), rat(1, 2), rat(3, 8), rat(5, 16)][..]);
    }

    #[test]
    fn substitute_shift_examples() {
        let cat = gf_of_moments(&spec(ri(0), rat(1, 2), rat(3, 2)), 4);
        let s = substitute_shift(&cat, &ri(1)).unwrap();
        assert_eq!(s.coeffs(), &ints(&[1, 2, 5, 15, 51])[..]);
        assert_eq!(substitute_shift(&cat, &ri(0)).unwrap(), cat);
        let a = PowerSeries::from_ints(&[1, -4], 20).sqrt().unwrap().reciprocal().unwrap();
        let shifted = substitute_shift(&a, &rat(-3, 4)).unwrap().rescale(&ri(4));
        let rad = PowerSeries::from_ints(&[1, -10, -39], 20).sqrt().unwrap().reciprocal().unwrap();
        assert_eq!(shifted, rad);
    }

    #[test]
    fn substitute_shift_matches_binomial_sum() {
        let g = gf_of_moments(&spec(ri(0), rat(3, 2), rat(5, 2)), 15);
        let c = rat(-5, 3);
        let s = substitute_shift(&g, &c).unwrap();
        for n in 0..=15usize {
            let mut want = ExactRational::zero();
            for j in 0..=n {
                want += from_int(crate::exact::binomial(n as u64, j as i64))
                    * g.coeff(j)
                    * num_traits::pow(c.clone(), n - j);
            }
            assert_eq!(s.coeff(n), &want);
        }
    }

    #[test]
    fn param_shift_examples() {
        let p = BetaParams::new(rat(1, 2), rat(1, 2)).unwrap();
        let g = gf_of_raw_moments(&p, 12);
        let (ga, pa) = gf_param_shift(&g, &p, ParamShift::Alpha).unwrap();
        assert_eq!(pa, BetaParams::new(rat(3, 2), rat(1, 2)).unwrap());
        assert_eq!(ga, gf_of_raw_moments(&pa, 11));
        let (gb, pb) = gf_param_shift(&g, &p, ParamShift::Beta).unwrap();
        assert_eq!(gb, gf_of_raw_moments(&pb, 11));
        let cat_over_4n: Vec<_> = (0..12u64)
            .map(|n| from_int(catalan(n)) / from_int(BigInt::from(4).pow(n as u32)))
            .collect();
        assert_eq!(gb.coeffs(), &cat_over_4n[..]);
        let tiny = gf_of_raw_moments(&p, 1);
        let (t, _) = gf_param_shift(&tiny, &p, ParamShift::Alpha).unwrap();
        assert_eq!(t.order(), 0);
        assert_eq!(t.coeff(0), &ri(1));
    }

    #[test]
    fn shift_linearity() {
        let s = spec(ri(0), rat(3, 2), rat(1, 2));
        let seq = MomentSequence::compute(&s, 21);
        for b in [ri(1), rat(-3, 2), ri(-2)] {
            let moved = crate::moments::shift_basepoint(&seq, &b, 21).unwrap();
            let lhs = PowerSeries::new(moved.terms);
            let rhs = substitute_shift(&gf_of_moments(&s, 20), &(&b - &s.c)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn compose_requires_zero_constant() {
        let g = PowerSeries::from_ints(&[1, 1], 3);
        assert!(g.compose(&PowerSeries::from_ints(&[1, 1], 3)).is_err());
    }

    fn rational_series(len: usize) -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec((-20i64..20, 1i64..6), len).prop_map(|v| {
            let mut c: Vec<_> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            c[0] = ri(1);
            PowerSeries::new(c)
        })
    }

    proptest! {
        #[test]
        fn shift_then_unshift(g in rational_series(12), c in (-6i64..6, 1i64..4)) {
            let c = rat(c.0, c.1);
            let there = substitute_shift(&g, &c).unwrap();
            let back = substitute_shift(&there, &(-c)).unwrap();
            prop_assert_eq!(back, g);
        }

        #[test]
        fn sqrt_squares_back(g in rational_series(12)) {
            let s = g.sqrt().unwrap();
            prop_assert_eq!(&s * &s, g);
        }

        #[test]
        fn reciprocal_inverts(g in rational_series(12)) {
            let r = g.reciprocal().unwrap();
            prop_assert_eq!(&r * &g, PowerSeries::one(11));
        }
    }
}
