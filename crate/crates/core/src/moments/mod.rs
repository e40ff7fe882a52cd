//! Moment sequences of Beta laws on `[0,1]` and their affine images on `[c, c+4]`.
//!
//! * `m_n(α,β) = α^(n) / (α+β)^(n)` are the moments of Beta(α,β) on `[0,1]`.
//! * `M_n(c,α,β)` are the moments of `c + 4X`, `X ~ Beta(α,β)`.
//! * `S_n(γ,δ) = M_n(-2,γ,δ)` is the symmetric family on `[-2,2]`.

pub mod catalog;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, from_int, ri, rising_factorial, ExactRational};

/// Shape parameters of a Beta law; both strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaParams {
    alpha: ExactRational,
    beta: ExactRational,
}

impl BetaParams {
    pub fn new(alpha: ExactRational, beta: ExactRational) -> Result<Self> {
        if !alpha.is_positive() || !beta.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "Beta parameters must be positive, got alpha={alpha}, beta={beta}"
            )));
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> &ExactRational {
        &self.alpha
    }

    pub fn beta(&self) -> &ExactRational {
        &self.beta
    }

    pub fn sum(&self) -> ExactRational {
        &self.alpha + &self.beta
    }
}

/// A Beta law moved to the support `[c, c+4]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MomentSpec {
    pub c: ExactRational,
    pub params: BetaParams,
}

impl MomentSpec {
    pub fn new(c: ExactRational, alpha: ExactRational, beta: ExactRational) -> Result<Self> {
        Ok(Self {
            c,
            params: BetaParams::new(alpha, beta)?,
        })
    }

    /// The symmetric family `S_n(γ,δ)`, i.e. `c = -2`.
    pub fn symmetric(gamma: ExactRational, delta: ExactRational) -> Result<Self> {
        Self::new(ri(-2), gamma, delta)
    }

    pub fn alpha(&self) -> &ExactRational {
        self.params.alpha()
    }

    pub fn beta(&self) -> &ExactRational {
        self.params.beta()
    }

    /// `max(|c|, |c+4|)`, the radius bounding `|M_n|^(1/n)`.
    pub fn support_radius(&self) -> ExactRational {
        let right = &self.c + ri(4);
        self.c.abs().max(right.abs())
    }
}

impl std::fmt::Display for MomentSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.c, self.alpha(), self.beta())
    }
}

/// Moments `M_0, M_1, ...` of one law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    pub spec: MomentSpec,
    pub terms: Vec<ExactRational>,
}

impl MomentSequence {
    /// First `count` moments of `spec`.
    pub fn compute(spec: &MomentSpec, count: usize) -> Self {
        let base = scaled_raw_moments(&spec.params, count);
        let terms = binomial_shift(&base, &spec.c, count);
        Self {
            spec: spec.clone(),
            terms,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `m_n(α,β)`.
pub fn m(n: u64, params: &BetaParams) -> ExactRational {
    rising_factorial(params.alpha(), n) / rising_factorial(&params.sum(), n)
}

/// `m_0 .. m_{count-1}` via the ratio `m_{n+1}/m_n = (α+n)/(α+β+n)`.
pub fn m_sequence(params: &BetaParams, count: usize) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(count);
    let mut cur = ExactRational::one();
    let mut a = params.alpha().clone();
    let mut ab = params.sum();
    for _ in 0..count {
        out.push(cur.clone());
        cur = cur * &a / &ab;
        a += BigInt::one();
        ab += BigInt::one();
    }
    out
}

/// `4^n m_n`, i.e. `M_n(0,α,β)`, for `n < count`.
fn scaled_raw_moments(params: &BetaParams, count: usize) -> Vec<ExactRational> {
    let mut pow4 = ExactRational::one();
    m_sequence(params, count)
        .into_iter()
        .map(|v| {
            let r = v * &pow4;
            pow4 *= BigInt::from(4);
            r
        })
        .collect()
}

/// `Σ_j C(n,j) a_j h^(n-j)` with `hp[i] = h^i`.
fn binomial_row(a: &[ExactRational], hp: &[ExactRational], n: usize) -> ExactRational {
    let mut c = BigInt::one();
    let mut acc = ExactRational::zero();
    for j in 0..=n {
        acc += from_int(c.clone()) * &a[j] * &hp[n - j];
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn powers(h: &ExactRational, count: usize) -> Vec<ExactRational> {
    std::iter::successors(Some(ExactRational::one()), |p| Some(p * h))
        .take(count)
        .collect()
}

/// `b_n = Σ_j C(n,j) a_j h^(n-j)` for `n < count`; `count <= a.len()`.
fn binomial_shift(a: &[ExactRational], h: &ExactRational, count: usize) -> Vec<ExactRational> {
    if h.is_zero() {
        return a[..count].to_vec();
    }
    let hp = powers(h, count);
    (0..count).map(|n| binomial_row(a, &hp, n)).collect()
}

/// `M_n(c,α,β)`.
pub fn moment(n: u64, spec: &MomentSpec) -> ExactRational {
    let n = n as usize;
    let raw = scaled_raw_moments(&spec.params, n + 1);
    if spec.c.is_zero() {
        return raw[n].clone();
    }
    binomial_row(&raw, &powers(&spec.c, n + 1), n)
}

/// `S_n(γ,δ)`.
pub fn symmetric_moment(n: u64, gamma: &ExactRational, delta: &ExactRational) -> Result<ExactRational> {
    Ok(moment(n, &MomentSpec::symmetric(gamma.clone(), delta.clone())?))
}

/// Re-centres a moment sequence at `b`: `M_n(b) = Σ_j C(n,j) M_j(c) (b-c)^(n-j)`.
pub fn shift_basepoint(seq: &MomentSequence, b: &ExactRational, count: usize) -> Result<MomentSequence> {
    if count > seq.terms.len() {
        return Err(Error::InsufficientLength {
            needed: count,
            available: seq.terms.len(),
        });
    }
    let h = b - &seq.spec.c;
    Ok(MomentSequence {
        spec: MomentSpec {
            c: b.clone(),
            params: seq.spec.params.clone(),
        },
        terms: binomial_shift(&seq.terms, &h, count),
    })
}

/// `(M_n(c,α+1,β), M_n(c,α,β+1))` from `M_n, M_{n+1}` of `spec`.
pub fn param_recurrences(spec: &MomentSpec, n: u64) -> (ExactRational, ExactRational) {
    let seq = MomentSequence::compute(spec, n as usize + 2);
    let (mn, mn1) = (&seq.terms[n as usize], &seq.terms[n as usize + 1]);
    let s = spec.params.sum();
    let four = ri(4);
    let raise_alpha = &s / (&four * spec.alpha()) * (mn1 - &spec.c * mn);
    let raise_beta = &s / (&four * spec.beta()) * ((&spec.c + &four) * mn - mn1);
    (raise_alpha, raise_beta)
}

/// `M_n(0,α,β) = (4α/(α+β)) M_{n-1}(0,α+1,β)` for `n >= 1`.
pub fn lower_alpha_recurrence(n: u64, params: &BetaParams) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::Precondition("the alpha-lowering recurrence needs n >= 1".into()));
    }
    let raised = MomentSpec {
        c: ExactRational::zero(),
        params: BetaParams::new(params.alpha() + ri(1), params.beta().clone())?,
    };
    Ok(ri(4) * params.alpha() / params.sum() * moment(n - 1, &raised))
}

/// Shapes with closed factorial forms for `M_n(0,α,β)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalfIntegerFamily {
    /// `α = i + 1/2`, `β = j + 1/2`.
    HalfHalf,
    /// `α = i + 1/2`, `β = j` (integer, `j >= 1`).
    HalfInteger,
    /// `α = i` (integer, `i >= 1`), `β = j + 1/2`.
    IntegerHalf,
}

impl HalfIntegerFamily {
    pub fn params(self, i: u64, j: u64) -> Result<BetaParams> {
        let half = |k: u64| ExactRational::new(BigInt::from(2 * k + 1), BigInt::from(2));
        match self {
            Self::HalfHalf => BetaParams::new(half(i), half(j)),
            Self::HalfInteger => BetaParams::new(half(i), ri(j as i64)),
            Self::IntegerHalf => BetaParams::new(ri(i as i64), half(j)),
        }
    }
}

/// Factorial closed form of `M_n(0,α,β)` for half-integer shapes.
pub fn half_integer_closed_form(n: u64, family: HalfIntegerFamily, i: u64, j: u64) -> Result<ExactRational> {
    let f = |k: u64| from_int(factorial(k));
    let pow4 = |k: u64| from_int(BigInt::from(4).pow(k as u32));
    match family {
        HalfIntegerFamily::HalfHalf => Ok(f(2 * n + 2 * i) * f(i) * f(i + j)
            / (f(i + n) * f(2 * i) * f(i + j + n))),
        HalfIntegerFamily::HalfInteger => {
            if j == 0 {
                return Err(Error::InvalidParameter("integer beta must be >= 1".into()));
            }
            Ok(pow4(n) * f(2 * i + 2 * n) * f(i) * f(i + j + n) * f(2 * i + 2 * j)
                / (f(i + n) * f(2 * i) * f(2 * i + 2 * j + 2 * n) * f(i + j)))
        }
        HalfIntegerFamily::IntegerHalf => {
            if i == 0 {
                return Err(Error::InvalidParameter("integer alpha must be >= 1".into()));
            }
            Ok(pow4(2 * n) * f(i + n - 1) * f(i + j + n) * f(2 * i + 2 * j)
                / (f(2 * i + 2 * j + 2 * n) * f(i - 1) * f(i + j)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, catalan, central_binomial, rat};

    fn spec(c: ExactRational, a: ExactRational, b: ExactRational) -> MomentSpec {
        MomentSpec::new(c, a, b).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<ExactRational> {
        v.iter().map(|&x| ri(x)).collect()
    }

    /// Independent evaluation of `M_n(c,α,β)` from the binomial expansion of
    /// `E[(c+4X)^n]` with `m_j` recomputed from raw rising factorials.
    fn oracle_moment(n: u64, c: &ExactRational, a: &ExactRational, b: &ExactRational) -> ExactRational {
        let mut acc = ExactRational::zero();
        for j in 0..=n {
            let mj = rising_factorial(a, j) / rising_factorial(&(a + b), j);
            acc += from_int(binomial(n, j as i64))
                * from_int(BigInt::from(4).pow(j as u32))
                * mj
                * num_traits::pow(c.clone(), (n - j) as usize);
        }
        acc
    }

    #[test]
    fn beta_params_validate() {
        assert!(BetaParams::new(ri(0), ri(1)).is_err());
        assert!(BetaParams::new(rat(1, 2), rat(-1, 2)).is_err());
    }

    #[test]
    fn raw_moment_examples() {
        let p = BetaParams::new(rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(m(2, &p), rat(3, 8));
        assert_eq!(m(0, &p), ri(1));
        let q = BetaParams::new(rat(1, 2), rat(3, 2)).unwrap();
        assert_eq!(m(3, &q), rat(5, 64));
        assert_eq!(m(3, &q) * ri(64), ri(5));
        assert_eq!(m_sequence(&q, 10)[7], m(7, &q));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(2, &spec(ri(0), rat(1, 2), rat(1, 2))), ri(6));
        let motzkin = MomentSequence::compute(&spec(ri(-1), rat(3, 2), rat(3, 2)), 6);
        assert_eq!(motzkin.terms, ints(&[1, 1, 2, 4, 9, 21]));
        let trinomial = MomentSequence::compute(&spec(ri(-1), rat(1, 2), rat(1, 2)), 5);
        assert_eq!(trinomial.terms, ints(&[1, 1, 3, 7, 19]));
    }

    #[test]
    fn moment_matches_oracle() {
        for (c, a, b) in [
            (rat(-3, 4), rat(1, 2), rat(1, 2)),
            (rat(5, 2), rat(3, 2), rat(1, 2)),
            (ri(-2), rat(2, 3), rat(7, 5)),
        ] {
            let seq = MomentSequence::compute(&spec(c.clone(), a.clone(), b.clone()), 15);
            for (n, v) in seq.terms.iter().enumerate() {
                assert_eq!(v, &oracle_moment(n as u64, &c, &a, &b));
            }
        }
    }

    #[test]
    fn symmetric_examples() {
        let s: Vec<_> = (0..7)
            .map(|n| symmetric_moment(n, &rat(3, 2), &rat(3, 2)).unwrap())
            .collect();
        assert_eq!(s, ints(&[1, 0, 1, 0, 2, 0, 5]));
        assert_eq!(symmetric_moment(3, &rat(1, 2), &rat(3, 2)).unwrap(), ri(-3));
        assert_eq!(symmetric_moment(2, &ri(1), &ri(1)).unwrap(), rat(4, 3));
    }

    #[test]
    fn shift_examples() {
        let cat = MomentSequence::compute(&spec(ri(0), rat(1, 2), rat(3, 2)), 5);
        let shifted = shift_basepoint(&cat, &ri(1), 5).unwrap();
        assert_eq!(shifted.terms, ints(&[1, 2, 5, 15, 51]));
        assert_eq!(shift_basepoint(&cat, &ri(0), 5).unwrap().terms, cat.terms);
        assert!(shift_basepoint(&cat, &ri(1), 6).is_err());
        let c0 = MomentSequence::compute(&spec(ri(0), rat(3, 2), rat(3, 2)), 5);
        assert_eq!(shift_basepoint(&c0, &ri(-2), 5).unwrap().terms[4], ri(2));
    }

    #[test]
    fn recurrence_examples() {
        let (up_a, _) = param_recurrences(&spec(ri(0), rat(1, 2), rat(3, 2)), 3);
        assert_eq!(up_a, moment(3, &spec(ri(0), rat(3, 2), rat(3, 2))));
        assert_eq!(up_a, ri(14));
        let p = BetaParams::new(rat(1, 2), rat(1, 2)).unwrap();
        assert_eq!(lower_alpha_recurrence(1, &p).unwrap(), ri(2));
        assert!(lower_alpha_recurrence(0, &p).is_err());
        let (_, up_b) = param_recurrences(&spec(ri(0), rat(3, 2), rat(1, 2)), 2);
        assert_eq!(up_b, moment(2, &spec(ri(0), rat(3, 2), rat(3, 2))));
        assert_eq!(up_b, ri(5));
    }

    #[test]
    fn recurrences_hold_for_shifted_laws() {
        let s = spec(rat(-3, 2), rat(5, 2), rat(2, 3));
        for n in 0..12 {
            let (a, b) = param_recurrences(&s, n);
            assert_eq!(a, moment(n, &spec(s.c.clone(), rat(7, 2), rat(2, 3))));
            assert_eq!(b, moment(n, &spec(s.c.clone(), rat(5, 2), rat(5, 3))));
        }
    }

    #[test]
    fn closed_form_examples() {
        for n in 0..10 {
            let v = half_integer_closed_form(n, HalfIntegerFamily::HalfHalf, 1, 1).unwrap();
            assert_eq!(v, from_int(catalan(n + 1)));
            let v = half_integer_closed_form(n, HalfIntegerFamily::HalfHalf, 0, 0).unwrap();
            assert_eq!(v, from_int(central_binomial(n)));
        }
        let v = half_integer_closed_form(2, HalfIntegerFamily::HalfInteger, 0, 1).unwrap();
        assert_eq!(v, rat(16, 5));
        let v = half_integer_closed_form(1, HalfIntegerFamily::IntegerHalf, 1, 0).unwrap();
        assert_eq!(v, rat(8, 3));
        assert_eq!(ri(4) * m(1, &BetaParams::new(ri(1), rat(1, 2)).unwrap()), rat(8, 3));
    }

    #[test]
    fn closed_forms_match_raw_moments() {
        for fam in [
            HalfIntegerFamily::HalfHalf,
            HalfIntegerFamily::HalfInteger,
            HalfIntegerFamily::IntegerHalf,
        ] {
            for i in 0..=4 {
                for j in 0..=4 {
                    let Ok(p) = fam.params(i, j) else { continue };
                    let seq = MomentSequence::compute(&MomentSpec { c: ri(0), params: p }, 41);
                    for n in 0..=40u64 {
                        let v = half_integer_closed_form(n, fam, i, j).unwrap();
                        assert_eq!(v, seq.terms[n as usize], "{fam:?} i={i} j={j} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn support_radius_bounds_moments() {
        let s = spec(rat(1, 2), rat(1, 3), rat(5, 2));
        let seq = MomentSequence::compute(&s, 30);
        let r = s.support_radius();
        assert_eq!(r, rat(9, 2));
        for (n, v) in seq.terms.iter().enumerate() {
            assert!(v.abs() <= num_traits::pow(r.clone(), n));
        }
    }
}
