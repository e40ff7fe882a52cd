//! Certified enclosures of series remainders `Σ_{k≥J} t_k`.
//!
//! The terms are hypergeometric: `t_{k+1} / t_k = σ · ∏(k + p_i) / ∏(k + q_i)`
//! with `σ = ±1`. The model is checked against independently computed terms
//! before any certificate is issued.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, from_int, is_integer, pow_i, ri, ExactRational};

type Poly = Vec<ExactRational>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMethod {
    /// Every term from `J` on vanishes.
    Terminating,
    /// Exact Gauss summation of a one-factor unit-argument series.
    GaussClosedForm,
    /// Alternating series with decreasing magnitudes.
    AlternatingBracket,
    /// Telescoping bounds from a truncated asymptotic antidifference.
    AsymptoticBracket,
}

impl fmt::Display for TailMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TailMethod::Terminating => "terminating",
            TailMethod::GaussClosedForm => "gauss",
            TailMethod::AlternatingBracket => "alternating",
            TailMethod::AsymptoticBracket => "asymptotic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCertificate {
    pub truncation: u64,
    pub method: TailMethod,
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl TailCertificate {
    fn exact(truncation: u64, method: TailMethod, v: ExactRational) -> Self {
        TailCertificate {
            truncation,
            method,
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }
}

/// Term ratio `t_{k+1}/t_k = sign · ∏(k + num_i) / ∏(k + den_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperRatio {
    pub negate: bool,
    pub num: Vec<ExactRational>,
    pub den: Vec<ExactRational>,
}

impl HyperRatio {
    pub fn new(num: Vec<ExactRational>, den: Vec<ExactRational>) -> Self {
        HyperRatio { negate: false, num, den }
    }

    pub fn alternating(num: Vec<ExactRational>, den: Vec<ExactRational>) -> Self {
        HyperRatio { negate: true, num, den }
    }

    pub fn eval(&self, k: u64) -> Result<ExactRational> {
        let k = from_int(k.into());
        let mut r = ExactRational::one();
        for p in &self.num {
            r *= &k + p;
        }
        for q in &self.den {
            let d = &k + q;
            if d.is_zero() {
                return Err(Error::Certification(format!("ratio has a pole at k = {k}")));
            }
            r /= d;
        }
        Ok(if self.negate { -r } else { r })
    }

    /// Drops factors shared by numerator and denominator.
    pub fn reduced(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for q in &self.den {
            match num.iter().position(|p| p == q) {
                Some(i) => {
                    num.remove(i);
                }
                None => den.push(q.clone()),
            }
        }
        HyperRatio {
            negate: self.negate,
            num,
            den,
        }
    }

    /// `Σ den - Σ num`: the decay exponent `t_k ~ k^{-s}` when degrees agree.
    pub fn decay(&self) -> ExactRational {
        self.den.iter().sum::<ExactRational>() - self.num.iter().sum::<ExactRational>()
    }

    /// Smallest integer root `-p >= from` of the numerator, if any.
    fn vanishing_index(&self, from: u64) -> Option<u64> {
        self.num
            .iter()
            .filter(|p| is_integer(p) && !p.is_positive())
            .filter_map(|p| u64::try_from((-p).to_integer()).ok())
            .filter(|&k| k >= from)
            .min()
    }
}

fn poly_from_shifts(shifts: &[ExactRational]) -> Poly {
    let mut p = vec![ri(1)];
    for s in shifts {
        p = poly_mul(&p, &[s.clone(), ri(1)]);
    }
    p
}

fn poly_mul(a: &[ExactRational], b: &[ExactRational]) -> Poly {
    let mut out = vec![ri(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_axpy(acc: &mut Poly, s: &ExactRational, p: &[ExactRational]) {
    if acc.len() < p.len() {
        acc.resize(p.len(), ri(0));
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += s * x;
    }
}

/// `(k + 1)^e` expanded.
fn shifted_power(e: usize) -> Poly {
    (0..=e).map(|i| from_int(binomial(e as u64, i as i64))).collect()
}

fn monomial(e: usize) -> Poly {
    let mut p = vec![ri(0); e + 1];
    p[e] = ri(1);
    p
}

/// Coefficients of `p(x + a)`.
fn taylor_shift(p: &[ExactRational], a: &ExactRational) -> Poly {
    let mut c = p.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    c
}

fn coeff(p: &[ExactRational], i: usize) -> ExactRational {
    p.get(i).cloned().unwrap_or_else(|| ri(0))
}

/// Asymptotic antidifference `φ(k) = Σ_{i=-1}^{m} a_i k^{-i}` with residual
/// numerator `N` and perturbation polynomial `E`.
struct Antidifference {
    a: Vec<ExactRational>,
    residual: Poly,
    perturbation: Poly,
}

fn antidifference(p: &[ExactRational], q: &[ExactRational], m: usize, s: &ExactRational) -> Antidifference {
    let d = q.len() - 1;
    let km = monomial(m);
    let k1m = shifted_power(m);
    let h = poly_mul(&poly_mul(q, &km), &k1m);
    let qk1m = poly_mul(q, &k1m);
    let pkm = poly_mul(p, &km);
    // column for the unknown a_i, i = -1..=m
    let column = |i: isize| -> Poly {
        let e = (m as isize - i) as usize;
        let mut c = poly_mul(&qk1m, &monomial(e));
        poly_axpy(&mut c, &ri(-1), &poly_mul(&pkm, &shifted_power(e)));
        c
    };
    let columns: Vec<Poly> = (-1..=m as isize).map(column).collect();
    let mut a: Vec<ExactRational> = Vec::with_capacity(m + 2);
    let mut n = h.iter().map(|x| -x).collect::<Poly>();
    for (idx, i) in (-1..=m as isize).enumerate() {
        let deg = (2 * m + d) as isize - i - 1;
        let deg = deg as usize;
        let lead = coeff(&columns[idx], deg);
        debug_assert_eq!(lead, s + from_int(i.into()));
        let ai = -coeff(&n, deg) / lead;
        poly_axpy(&mut n, &ai, &columns[idx]);
        a.push(ai);
    }
    Antidifference {
        a,
        residual: n,
        perturbation: columns[m + 1].clone(),
    }
}

fn eval_phi(a: &[ExactRational], k: &ExactRational) -> ExactRational {
    let mut out = ri(0);
    for (idx, ai) in a.iter().enumerate() {
        out += ai * pow_i(k, 1 - idx as i64);
    }
    out
}

/// Smallest `η` making `N + ηE` and `ηE - N` have only nonnegative
/// coefficients in `x` after `k = J + x`. `None` when no `η` works.
fn minimal_eta(n: &[ExactRational], e: &[ExactRational], j: &ExactRational) -> Option<ExactRational> {
    let ns = taylor_shift(n, j);
    let es = taylor_shift(e, j);
    let mut eta = ri(0);
    for i in 0..ns.len().max(es.len()) {
        let (ni, ei) = (coeff(&ns, i), coeff(&es, i));
        if ni.is_zero() {
            if ei.is_negative() {
                return None;
            }
            continue;
        }
        if !ei.is_positive() {
            return None;
        }
        let need = ni.abs() / ei;
        if need > eta {
            eta = need;
        }
    }
    Some(eta)
}

pub const MAX_ASYMPTOTIC_ORDER: usize = 48;

fn asymptotic_bracket(
    t_j: &ExactRational,
    j: u64,
    ratio: &HyperRatio,
    target: &ExactRational,
) -> Result<TailCertificate> {
    let p = poly_from_shifts(&ratio.num);
    let q = poly_from_shifts(&ratio.den);
    let s = ratio.decay();
    let jr = from_int(j.into());
    let mut best: Option<TailCertificate> = None;
    for m in 1..=MAX_ASYMPTOTIC_ORDER {
        let ad = antidifference(&p, &q, m, &s);
        let Some(eta) = minimal_eta(&ad.residual, &ad.perturbation, &jr) else {
            continue;
        };
        let phi = eval_phi(&ad.a, &jr);
        let delta = &eta * pow_i(&jr, -(m as i64));
        let (a, b) = (t_j * (&phi - &delta), t_j * (&phi + &delta));
        let cert = TailCertificate {
            truncation: j,
            method: TailMethod::AsymptoticBracket,
            lo: a.clone().min(b.clone()),
            hi: a.max(b),
        };
        if &cert.width() <= target {
            return Ok(cert);
        }
        if best.as_ref().is_none_or(|c| cert.width() < c.width()) {
            best = Some(cert);
        }
    }
    match best {
        Some(c) => Ok(c),
        None => Err(Error::Certification(format!("no asymptotic bracket at J = {j}"))),
    }
}

/// Encloses `Σ_{k≥J} t_k` given `t_J` and the term ratio.
///
/// Returns the narrowest certificate found; callers compare its width with
/// their own tolerance.
pub fn certify_tail(
    t_j: &ExactRational,
    j: u64,
    ratio: &HyperRatio,
    target: &ExactRational,
) -> Result<TailCertificate> {
    if t_j.is_zero() {
        return Ok(TailCertificate::exact(j, TailMethod::Terminating, ri(0)));
    }
    let ratio = ratio.reduced();
    if ratio.num.len() != ratio.den.len() {
        return Err(Error::Certification("ratio is not of unit argument".into()));
    }
    if let Some(stop) = ratio.vanishing_index(j) {
        let mut sum = ri(0);
        let mut t = t_j.clone();
        for k in j..=stop {
            sum += &t;
            t *= ratio.eval(k)?;
        }
        return Ok(TailCertificate::exact(j, TailMethod::Terminating, sum));
    }
    let jr = from_int(j.into());
    if ratio.num.iter().chain(&ratio.den).any(|x| !(&jr + x).is_positive()) {
        return Err(Error::Certification(format!(
            "ratio factors are not positive from J = {j}; increase the truncation"
        )));
    }
    let s = ratio.decay();
    if ratio.negate {
        if !s.is_positive() {
            return Err(Error::Certification("alternating terms do not decrease".into()));
        }
        // |t_{k+1}/t_k| < 1 for all k >= J: check Q - P on k = J + x.
        let mut diff = poly_from_shifts(&ratio.den);
        poly_axpy(&mut diff, &ri(-1), &poly_from_shifts(&ratio.num));
        let shifted = taylor_shift(&diff, &jr);
        if shifted.iter().any(|c| c.is_negative()) {
            return Err(Error::Certification(format!("monotone decrease not certified at J = {j}")));
        }
        let next = t_j * ratio.eval(j)?;
        let (a, b) = (t_j.clone(), t_j + &next);
        return Ok(TailCertificate {
            truncation: j,
            method: TailMethod::AlternatingBracket,
            lo: a.clone().min(b.clone()),
            hi: a.max(b),
        });
    }
    if s <= ri(1) {
        return Err(Error::Certification(format!("series diverges or decays too slowly (s = {s})")));
    }
    if ratio.num.len() == 1 {
        // Σ_{k≥J} t_k = t_J (J + c - 1)/(c - a - 1) for ratio (k + a)/(k + c)
        let c = &ratio.den[0];
        let tail = t_j * (&jr + c - ri(1)) / (&s - ri(1));
        return Ok(TailCertificate::exact(j, TailMethod::GaussClosedForm, tail));
    }
    asymptotic_bracket(t_j, j, &ratio, target)
}

/// Points at which the recurrence is compared with direct evaluation.
fn sample_points(j: u64) -> Vec<u64> {
    let mut pts: Vec<u64> = (0..4.min(j + 1)).collect();
    pts.extend([j / 2, j.saturating_sub(1), j, j + 1, j + 2, j + 7]);
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// `Σ_{k<J} t_k` computed by the ratio recurrence from `term(0)`, plus a
/// certificate for the rest. `term` is an independent evaluator used to check
/// the recurrence at sample indices.
pub fn sum_with_tail(
    term: impl Fn(u64) -> ExactRational,
    ratio: &HyperRatio,
    j: u64,
    target: &ExactRational,
) -> Result<(ExactRational, TailCertificate)> {
    let checks = sample_points(j);
    let last = *checks.last().unwrap();
    let mut partial = ri(0);
    let mut t = term(0);
    let mut t_j = ri(0);
    for k in 0..=last {
        if checks.contains(&k) {
            let direct = term(k);
            if direct != t {
                return Err(Error::Certification(format!(
                    "term model disagrees with direct evaluation at k = {k}"
                )));
            }
        }
        if k < j {
            partial += &t;
        }
        if k == j {
            t_j = t.clone();
        }
        t *= ratio.eval(k)?;
    }
    let cert = certify_tail(&t_j, j, ratio, target)?;
    Ok((partial, cert))
}
