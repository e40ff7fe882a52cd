//! Hankel determinant tests for moment sequences.
//!
//! A probability moment sequence has nonnegative Hankel determinants
//! `det[m_{i+j}]`; a law on the nonnegative axis also has nonnegative
//! shifted determinants `det[m_{1+i+j}]`. Only these finite-order
//! necessary conditions are checked.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{from_int, ExactRational};
use crate::moments::{MomentSequence, MomentSpec};

pub const DEFAULT_ORDER: usize = 8;

/// Determinant of a square integer matrix by Bareiss elimination.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Determinant of a rational matrix: scale to integers, eliminate, unscale.
pub fn rational_det(m: &[Vec<ExactRational>]) -> ExactRational {
    let n = m.len();
    let mut l = BigInt::one();
    for x in m.iter().flatten() {
        l = l.lcm(x.denom());
    }
    let scaled = m
        .iter()
        .map(|row| row.iter().map(|x| (x * from_int(l.clone())).to_integer()).collect())
        .collect();
    let det = from_int(bareiss_det(scaled));
    det / from_int(num_traits::pow(l, n))
}

/// The `(n+1)×(n+1)` Hankel matrix with entries `seq[shift + i + j]`.
pub fn hankel_matrix(seq: &[ExactRational], n: usize, shift: usize) -> Result<Vec<Vec<ExactRational>>> {
    let needed = 2 * n + 1 + shift;
    if seq.len() < needed {
        return Err(Error::InsufficientLength {
            needed,
            available: seq.len(),
        });
    }
    Ok((0..=n)
        .map(|i| (0..=n).map(|j| seq[shift + i + j].clone()).collect())
        .collect())
}

/// Determinants of the Hankel matrices of orders `0..=order`.
pub fn hankel_determinants(seq: &[ExactRational], order: usize, shift: usize) -> Result<Vec<ExactRational>> {
    if shift > 1 {
        return Err(Error::InvalidParameter(format!("shift must be 0 or 1, got {shift}")));
    }
    hankel_matrix(seq, order, shift)?;
    (0..=order)
        .map(|n| hankel_matrix(seq, n, shift).map(|h| rational_det(&h)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelReport {
    pub order: usize,
    pub determinants: Vec<ExactRational>,
    pub shifted_determinants: Vec<ExactRational>,
    /// All determinants `>= 0`.
    pub pm: bool,
    /// All shifted determinants `>= 0`.
    pub stieltjes: bool,
    pub pm_strict: bool,
    pub stieltjes_strict: bool,
    /// The Stieltjes verdict is only meaningful for support in `[0, ∞)`.
    pub stieltjes_applicable: bool,
}

impl HankelReport {
    /// Smallest order whose determinant is negative.
    pub fn first_pm_failure(&self) -> Option<usize> {
        self.determinants.iter().position(|d| d.is_negative())
    }

    pub fn first_stieltjes_failure(&self) -> Option<usize> {
        self.shifted_determinants.iter().position(|d| d.is_negative())
    }
}

/// Runs both determinant families on a raw sequence of at least `2N+2` terms.
pub fn check_sequence(seq: &[ExactRational], order: usize, stieltjes_applicable: bool) -> Result<HankelReport> {
    let determinants = hankel_determinants(seq, order, 0)?;
    let shifted_determinants = hankel_determinants(seq, order, 1)?;
    let nonneg = |v: &[ExactRational]| v.iter().all(|d| !d.is_negative());
    let positive = |v: &[ExactRational]| v.iter().all(|d| d.is_positive());
    Ok(HankelReport {
        order,
        pm: nonneg(&determinants),
        stieltjes: nonneg(&shifted_determinants),
        pm_strict: positive(&determinants),
        stieltjes_strict: positive(&shifted_determinants),
        determinants,
        shifted_determinants,
        stieltjes_applicable,
    })
}

pub fn check_pm(spec: &MomentSpec, order: usize) -> HankelReport {
    let seq = MomentSequence::compute(spec, 2 * order + 2);
    check_sequence(&seq.terms, order, !spec.c.is_negative()).expect("sequence has 2N+2 terms")
}
