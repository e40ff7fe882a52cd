//! The catalog of Catalan-type identities and their verification.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{binomial, catalan, central_binomial, factorial, from_int, pow_i, rat, ri, ExactRational};
use crate::moments::{moment, symmetric_moment, MomentSpec};

use super::expansion::{d, SeriesValue};
use super::gamma::PiMultiple;
use super::interval::DEFAULT_PRECISION;
use super::tail::{sum_with_tail, HyperRatio, TailCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    ExactMatch,
    EnclosureContains,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::ExactMatch => "exact-match",
            Status::EnclosureContains => "enclosure-contains",
            Status::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rhs {
    Exact(ExactRational),
    Enclosure { lo: ExactRational, hi: ExactRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub id: String,
    pub n: u64,
    pub lhs: ExactRational,
    pub rhs: Rhs,
    pub status: Status,
    pub certificate: Option<TailCertificate>,
}

impl IdentityResult {
    fn exact(id: &str, n: u64, lhs: ExactRational, rhs: ExactRational) -> Self {
        let status = if lhs == rhs { Status::ExactMatch } else { Status::Fail };
        IdentityResult {
            id: id.to_string(),
            n,
            lhs,
            rhs: Rhs::Exact(rhs),
            status,
            certificate: None,
        }
    }

    fn from_series(id: &str, n: u64, lhs: ExactRational, v: SeriesValue, bits: u32) -> Self {
        let (rhs, status) = match v.exact() {
            Some(x) => {
                let s = if x == lhs { Status::ExactMatch } else { Status::Fail };
                (Rhs::Exact(x), s)
            }
            None => {
                let e = v.enclosure(bits);
                let s = if e.contains(&lhs) { Status::EnclosureContains } else { Status::Fail };
                (
                    Rhs::Enclosure {
                        lo: e.lo().clone(),
                        hi: e.hi().clone(),
                    },
                    s,
                )
            }
        };
        IdentityResult {
            id: id.to_string(),
            n,
            lhs,
            rhs,
            status,
            certificate: Some(v.tail),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Width of the right-hand side enclosure; zero when exact.
    pub fn width(&self) -> ExactRational {
        match &self.rhs {
            Rhs::Exact(_) => ri(0),
            Rhs::Enclosure { lo, hi } => hi - lo,
        }
    }
}

pub const FINITE_IDS: &[&str] = &[
    "c0-i",
    "c0-ballot",
    "c0-ii-odd",
    "c0-ii-even",
    "c0-v",
    "t2-i",
    "t2-ii",
    "t2-iii",
    "t2-iv",
    "t2-v",
    "t2-vi",
    "motz",
];

pub const INFINITE_IDS: &[&str] = &["c0-iii", "c0-iv", "c0-vi", "t2-vii", "eq2", "iiib"];

/// The identity in plain notation.
pub fn describe(id: &str) -> Option<&'static str> {
    Some(match id {
        "c0-i" => "C_n = 2 C(2n,n) - C(2n+2,n+1)/2",
        "c0-ballot" => "C_n = C(2n,n) - C(2n,n-1)",
        "c0-ii-odd" => "C_{2n+1} = Σ_{i≤n} C(2n,2i) 4^{n-i} C_i",
        "c0-ii-even" => "C_{2n+2} = 2 Σ_{i≤n} C(2n+1,2i) 4^{n-i} C_i",
        "c0-v" => "C(2n,n)/4^n = 1 - (1/2) Σ_{j<n} C_j/4^j",
        "t2-i" => "Σ_i C(n,2i) 2^{n-2i} C(2i,i) = C(2n,n)",
        "t2-ii" => "C(2n,n) = 2·4^{n-1} - 2^{n-1} Σ_{j=1}^{⌊n/2⌋} C(n,2j) Σ_{s<j} C_s/4^s  (n ≥ 1)",
        "t2-iii" => "C_{n+1} = 2 C(2n,n) - (1/2) Σ_j C(n,2j) 2^{n-2j} C(2j+2,j+1)",
        "t2-iv" => "C_n = Σ_k (-1)^k C(n,k) C(k,⌊k/2⌋) 2^{n-k}",
        "t2-v" => "C(n,⌊n/2⌋)/2^{n-1} = 2 - Σ_{j≤⌊(n-1)/2⌋} C_j/4^j",
        "t2-vi" => "S_n(3/2,3/2) = 2 C(n,⌊n/2⌋) - C(n+1,⌊(n+1)/2⌋)",
        "motz" => "M_n(-1,3/2,3/2) = Σ_j C(n,2j) C_j",
        "c0-iii" => "C_n = (3/2) Σ_i 4^{-i} (2n+2i)!/((i+n)!(n+i+2)!)",
        "c0-iv" => "(n+1)!(n+2)!/(2n+4)! = 4^{-(n+2)} Σ_j C(2j,j)/(4^j (n+j+2))",
        "c0-vi" => "n!n!/(2n+1)! = 4 Σ_j 4^j (n+j)!(n+j+2)!/(2n+2j+4)!",
        "t2-vii" => "S_n(1,2) = (π/4) Σ_k S_{n+k}(3/2,3/2) d_k/(2^k k!)",
        "eq2" => "Σ_{j<N} C_j/4^j = 2 - 2 C(2N,N)/4^N",
        "iiib" => "M_n(0,α,β) = β/(α+β) Σ_j M_{n+j}(0,α,β+1)/4^j",
        _ => return None,
    })
}

fn c(n: u64) -> ExactRational {
    from_int(catalan(n))
}

fn b(n: u64, k: i64) -> ExactRational {
    from_int(binomial(n, k))
}

fn p(base: i64, e: i64) -> ExactRational {
    pow_i(&ri(base), e)
}

fn fact(n: u64) -> ExactRational {
    from_int(factorial(n))
}

/// `Σ_{j<n} C_j/4^j`.
fn catalan_quarter_sum(n: u64) -> ExactRational {
    (0..n).map(|j| c(j) / p(4, j as i64)).sum()
}

fn finite_sides(id: &str, n: u64) -> Result<(ExactRational, ExactRational)> {
    let ni = n as i64;
    Ok(match id {
        "c0-i" => (c(n), ri(2) * b(2 * n, ni) - b(2 * n + 2, ni + 1) / ri(2)),
        "c0-ballot" => (c(n), b(2 * n, ni) - b(2 * n, ni - 1)),
        "c0-ii-odd" => (
            c(2 * n + 1),
            (0..=n).map(|i| b(2 * n, 2 * i as i64) * p(4, ni - i as i64) * c(i)).sum(),
        ),
        "c0-ii-even" => (
            c(2 * n + 2),
            ri(2) * (0..=n).map(|i| b(2 * n + 1, 2 * i as i64) * p(4, ni - i as i64) * c(i)).sum::<ExactRational>(),
        ),
        "c0-v" => (
            from_int(central_binomial(n)) / p(4, ni),
            ri(1) - catalan_quarter_sum(n) / ri(2),
        ),
        "t2-i" => (
            (0..=n / 2)
                .map(|i| b(n, 2 * i as i64) * p(2, ni - 2 * i as i64) * from_int(central_binomial(i)))
                .sum(),
            from_int(central_binomial(n)),
        ),
        "t2-ii" => {
            if n == 0 {
                return Err(Error::Precondition("t2-ii holds for n ≥ 1".into()));
            }
            let inner: ExactRational = (1..=n / 2).map(|j| b(n, 2 * j as i64) * catalan_quarter_sum(j)).sum();
            (from_int(central_binomial(n)), ri(2) * p(4, ni - 1) - p(2, ni - 1) * inner)
        }
        "t2-iii" => (
            c(n + 1),
            ri(2) * from_int(central_binomial(n))
                - (0..=n / 2)
                    .map(|j| b(n, 2 * j as i64) * p(2, ni - 2 * j as i64) * from_int(central_binomial(j + 1)))
                    .sum::<ExactRational>()
                    / ri(2),
        ),
        "t2-iv" => (
            c(n),
            (0..=n)
                .map(|k| {
                    let t = b(n, k as i64) * b(k, (k / 2) as i64) * p(2, ni - k as i64);
                    if k % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum(),
        ),
        "t2-v" => (
            b(n, (n / 2) as i64) / p(2, ni - 1),
            // j runs to ⌊(n-1)/2⌋, i.e. j < ⌊(n+1)/2⌋
            ri(2) - catalan_quarter_sum(n.div_ceil(2)),
        ),
        "t2-vi" => (
            symmetric_moment(n, &rat(3, 2), &rat(3, 2))?,
            ri(2) * b(n, (n / 2) as i64) - b(n + 1, n.div_ceil(2) as i64),
        ),
        "motz" => (
            moment(n, &MomentSpec::new(ri(-1), rat(3, 2), rat(3, 2))?),
            (0..=n / 2).map(|j| b(n, 2 * j as i64) * c(j)).sum(),
        ),
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

/// Checks a finite identity exactly for each `n`. `t2-ii` skips `n = 0`.
pub fn verify_finite(id: &str, ns: impl IntoIterator<Item = u64>) -> Result<Vec<IdentityResult>> {
    if !FINITE_IDS.contains(&id) {
        return Err(Error::UnknownId(id.to_string()));
    }
    ns.into_iter()
        .filter(|&n| !(id == "t2-ii" && n == 0))
        .map(|n| finite_sides(id, n).map(|(l, r)| IdentityResult::exact(id, n, l, r)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteOptions {
    /// Number of summed terms before the certified tail.
    pub truncation: u64,
    /// Interval working precision in bits.
    pub bits: u32,
}

impl Default for InfiniteOptions {
    fn default() -> Self {
        InfiniteOptions {
            truncation: 256,
            bits: DEFAULT_PRECISION,
        }
    }
}

/// Enclosure widths the bracketed identities must reach.
pub fn width_target(id: &str) -> ExactRational {
    match id {
        "c0-iv" => p(10, -30),
        "t2-vii" => p(10, -20),
        _ => ri(0),
    }
}

/// Tail target passed to the certifier: a margin under the required width.
fn tail_target(id: &str) -> ExactRational {
    width_target(id) / ri(100)
}

/// `(α, β)` pairs on which `iiib` is checked.
pub fn iiib_params() -> Vec<(ExactRational, ExactRational)> {
    vec![
        (rat(1, 2), rat(1, 2)),
        (rat(1, 2), rat(3, 2)),
        (rat(3, 2), rat(3, 2)),
        (ri(1), rat(1, 2)),
        (rat(1, 3), rat(2, 3)),
        (ri(2), ri(3)),
    ]
}

fn series(
    prefactor: PiMultiple,
    term: impl Fn(u64) -> ExactRational,
    ratio: HyperRatio,
    opts: &InfiniteOptions,
    target: &ExactRational,
) -> Result<SeriesValue> {
    let (partial, tail) = sum_with_tail(term, &ratio, opts.truncation, target)?;
    Ok(SeriesValue {
        prefactor,
        partial,
        tail,
    })
}

fn infinite_one(id: &str, n: u64, opts: &InfiniteOptions) -> Result<Vec<IdentityResult>> {
    let nr = from_int(n.into());
    let target = tail_target(id);
    let one = |lhs: ExactRational, v: SeriesValue| Ok(vec![IdentityResult::from_series(id, n, lhs, v, opts.bits)]);
    match id {
        "c0-iii" => {
            let term =
                |i: u64| fact(2 * n + 2 * i) / (p(4, i as i64) * fact(i + n) * fact(n + i + 2));
            let ratio = HyperRatio::new(vec![&nr + rat(1, 2)], vec![&nr + ri(3)]);
            one(c(n), series(PiMultiple::rational(rat(3, 2)), term, ratio, opts, &target)?)
        }
        "c0-iv" => {
            let lhs = fact(n + 1) * fact(n + 2) / fact(2 * n + 4);
            let term = |j: u64| from_int(central_binomial(j)) / (p(4, j as i64) * from_int((n + j + 2).into()));
            let ratio = HyperRatio::new(vec![rat(1, 2), &nr + ri(2)], vec![ri(1), &nr + ri(3)]);
            let pre = PiMultiple::rational(p(4, -(n as i64) - 2));
            one(lhs, series(pre, term, ratio, opts, &target)?)
        }
        "c0-vi" => {
            let lhs = fact(n) * fact(n) / fact(2 * n + 1);
            let term = |j: u64| p(4, j as i64) * fact(n + j) * fact(n + j + 2) / fact(2 * n + 2 * j + 4);
            let ratio = HyperRatio::new(vec![&nr + ri(1)], vec![&nr + rat(5, 2)]);
            one(lhs, series(PiMultiple::rational(ri(4)), term, ratio, opts, &target)?)
        }
        "t2-vii" => {
            let lhs = symmetric_moment(n, &ri(1), &ri(2))?;
            // only k ≡ n (mod 2) contributes; k = 2i + parity
            let parity = n % 2;
            let h = from_int((n / 2).into());
            let term = |i: u64| {
                let k = 2 * i + parity;
                symmetric_moment(n + k, &rat(3, 2), &rat(3, 2)).expect("positive") * d(k)
                    / (p(2, k as i64) * fact(k))
            };
            let shift = rat(1, 2) + from_int(parity.into());
            let ratio = HyperRatio::new(vec![rat(1, 2), &h + &shift], vec![ri(1), &h + &shift + rat(3, 2)]);
            let pre = PiMultiple {
                coef: rat(1, 4),
                half_pi_power: 2,
            };
            one(lhs, series(pre, term, ratio, opts, &target)?)
        }
        "eq2" => {
            let lhs = catalan_quarter_sum(n);
            let rhs = ri(2) - ri(2) * from_int(central_binomial(n)) / p(4, n as i64);
            Ok(vec![IdentityResult::exact(id, n, lhs, rhs)])
        }
        "iiib" => iiib_params()
            .into_iter()
            .map(|(alpha, beta)| {
                let spec = MomentSpec::new(ri(0), alpha.clone(), beta.clone())?;
                let raised = MomentSpec::new(ri(0), alpha.clone(), &beta + ri(1))?;
                let term = |j: u64| moment(n + j, &raised) / p(4, j as i64);
                let shift = &alpha + &nr;
                let ratio = HyperRatio::new(vec![shift.clone()], vec![&shift + &beta + ri(1)]);
                let pre = PiMultiple::rational(&beta / (&alpha + &beta));
                let v = series(pre, term, ratio, opts, &target)?;
                let label = format!("iiib({alpha},{beta})");
                Ok(IdentityResult::from_series(&label, n, moment(n, &spec), v, opts.bits))
            })
            .collect(),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// Checks an infinite identity, exactly when the tail has a closed form and
/// by enclosure otherwise.
pub fn verify_infinite(
    id: &str,
    ns: impl IntoIterator<Item = u64>,
    opts: &InfiniteOptions,
) -> Result<Vec<IdentityResult>> {
    if !INFINITE_IDS.contains(&id) {
        return Err(Error::UnknownId(id.to_string()));
    }
    let mut out = Vec::new();
    for n in ns {
        out.extend(infinite_one(id, n, opts)?);
    }
    Ok(out)
}

/// `2 - Σ_{j<N} C_j/4^j`, which equals `2 C(2N,N)/4^N`.
pub fn eq2_gap(n: u64) -> ExactRational {
    ri(2) - catalan_quarter_sum(n)
}
