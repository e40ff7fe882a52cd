//! Sequence transforms: binomial transform and its inverse, geometric and
//! constant scaling, checked left shifts, right shifts and sign changes.
//!
//! A [`TransformSpec`] is an ordered list of atoms applied left to right.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, from_int, rat, ri, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TransformAtom {
    /// `b_n = Σ_j C(n,j) a_j`.
    BinomialTransform,
    /// `a_n = Σ_j (-1)^(n-j) C(n,j) b_j`.
    InverseBinomialTransform,
    /// `b_n = q^n a_n`.
    GeometricScale(ExactRational),
    /// Drops a prefix, which must equal the recorded values.
    ShiftLeft(Vec<ExactRational>),
    /// Prepends the recorded values.
    ShiftRight(Vec<ExactRational>),
    /// `b_n = (-1)^n a_n`.
    SignChange,
    /// `b_n = s a_n`.
    ConstantScale(ExactRational),
}

impl TransformAtom {
    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            Self::BinomialTransform => Self::InverseBinomialTransform,
            Self::InverseBinomialTransform => Self::BinomialTransform,
            Self::GeometricScale(q) | Self::ConstantScale(q) if q.is_zero() => {
                return Err(Error::InvalidParameter("scaling by zero is not invertible".into()))
            }
            Self::GeometricScale(q) => Self::GeometricScale(q.recip()),
            Self::ConstantScale(s) => Self::ConstantScale(s.recip()),
            Self::ShiftLeft(p) => Self::ShiftRight(p.clone()),
            Self::ShiftRight(p) => Self::ShiftLeft(p.clone()),
            Self::SignChange => Self::SignChange,
        })
    }

    pub fn apply(&self, seq: &[ExactRational]) -> Result<Vec<ExactRational>> {
        Ok(match self {
            Self::BinomialTransform => binomial_transform(seq, false),
            Self::InverseBinomialTransform => binomial_transform(seq, true),
            Self::GeometricScale(q) => {
                let mut p = ExactRational::one();
                seq.iter()
                    .map(|v| {
                        let out = v * &p;
                        p *= q;
                        out
                    })
                    .collect()
            }
            Self::ShiftLeft(prefix) => {
                if seq.len() < prefix.len() {
                    return Err(Error::InsufficientLength {
                        needed: prefix.len(),
                        available: seq.len(),
                    });
                }
                if let Some(i) = (0..prefix.len()).find(|&i| seq[i] != prefix[i]) {
                    return Err(Error::PrefixMismatch {
                        index: i,
                        expected: prefix[i].to_string(),
                        found: seq[i].to_string(),
                    });
                }
                seq[prefix.len()..].to_vec()
            }
            Self::ShiftRight(prefix) => prefix.iter().chain(seq).cloned().collect(),
            Self::SignChange => seq
                .iter()
                .enumerate()
                .map(|(n, v)| if n % 2 == 1 { -v } else { v.clone() })
                .collect(),
            Self::ConstantScale(s) => seq.iter().map(|v| v * s).collect(),
        })
    }
}

fn binomial_transform(seq: &[ExactRational], inverse: bool) -> Vec<ExactRational> {
    (0..seq.len())
        .map(|n| {
            (0..=n).fold(ExactRational::zero(), |acc, j| {
                let c = from_int(binomial(n as u64, j as i64)) * &seq[j];
                if inverse && (n - j) % 2 == 1 {
                    acc - c
                } else {
                    acc + c
                }
            })
        })
        .collect()
}

fn fmt_list(v: &[ExactRational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for TransformAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BinomialTransform => write!(f, "binomial"),
            Self::InverseBinomialTransform => write!(f, "inverse-binomial"),
            Self::GeometricScale(q) => write!(f, "scale({q}^n)"),
            Self::ShiftLeft(p) => write!(f, "l-s({})", fmt_list(p)),
            Self::ShiftRight(p) => write!(f, "r-s({})", fmt_list(p)),
            Self::SignChange => write!(f, "sc"),
            Self::ConstantScale(s) => write!(f, "times({s})"),
        }
    }
}

/// A composition of atoms, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TransformSpec {
    pub atoms: Vec<TransformAtom>,
}

impl TransformSpec {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(atoms: Vec<TransformAtom>) -> Self {
        Self { atoms }
    }

    pub fn is_identity(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn then(mut self, atom: TransformAtom) -> Self {
        self.atoms.push(atom);
        self
    }

    pub fn apply(&self, seq: &[ExactRational]) -> Result<Vec<ExactRational>> {
        let mut cur = seq.to_vec();
        for atom in &self.atoms {
            cur = atom.apply(&cur)?;
        }
        Ok(cur)
    }

    pub fn inverse(&self) -> Result<Self> {
        let atoms = self
            .atoms
            .iter()
            .rev()
            .map(TransformAtom::inverse)
            .collect::<Result<_>>()?;
        Ok(Self { atoms })
    }

    /// Net change of length: right shifts add, left shifts remove.
    pub fn length_delta(&self) -> isize {
        self.atoms
            .iter()
            .map(|a| match a {
                TransformAtom::ShiftLeft(p) => -(p.len() as isize),
                TransformAtom::ShiftRight(p) => p.len() as isize,
                _ => 0,
            })
            .sum()
    }

    /// Number of input terms consumed by left shifts along the way.
    pub fn consumed(&self) -> usize {
        let mut need: isize = 0;
        let mut level: isize = 0;
        for a in &self.atoms {
            match a {
                TransformAtom::ShiftLeft(p) => {
                    level -= p.len() as isize;
                    need = need.max(-level);
                }
                TransformAtom::ShiftRight(p) => level += p.len() as isize,
                _ => {}
            }
        }
        need as usize
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "identity");
        }
        let parts: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" then "))
    }
}

/// Minimum number of aligned terms a match must agree on.
pub const MIN_MATCH_LEN: usize = 8;

const MAX_SHIFT: usize = 3;

fn geometric_candidates() -> Vec<ExactRational> {
    vec![ri(-1), ri(2), ri(-2), ri(4), ri(-4), rat(1, 2), rat(1, 4)]
}

fn is_small(s: &ExactRational) -> bool {
    let lim = BigInt::from(1000);
    s.numer().abs() <= lim && s.denom() <= &lim
}

fn candidate_atoms(cur: &[ExactRational], target: &[ExactRational]) -> Vec<TransformAtom> {
    let mut out = Vec::new();
    for k in 1..=MAX_SHIFT.min(cur.len()) {
        out.push(TransformAtom::ShiftLeft(cur[..k].to_vec()));
    }
    for k in 1..=MAX_SHIFT.min(target.len()) {
        out.push(TransformAtom::ShiftRight(target[..k].to_vec()));
    }
    if let Some(i) = (0..cur.len().min(target.len())).find(|&i| !cur[i].is_zero() && !target[i].is_zero()) {
        let s = &target[i] / &cur[i];
        if !s.is_one() && is_small(&s) {
            out.push(TransformAtom::ConstantScale(s));
        }
    }
    out.extend(geometric_candidates().into_iter().map(TransformAtom::GeometricScale));
    out.push(TransformAtom::SignChange);
    out.push(TransformAtom::BinomialTransform);
    out.push(TransformAtom::InverseBinomialTransform);
    out
}

fn agrees(x: &[ExactRational], y: &[ExactRational]) -> bool {
    let n = x.len().min(y.len());
    n >= MIN_MATCH_LEN && x[..n] == y[..n]
}

/// All shortest transforms `t` (up to `depth` atoms) with `t(b) = a` on the
/// common prefix, in a fixed search order.
pub fn find_transforms(a: &[ExactRational], b: &[ExactRational], depth: usize) -> Vec<TransformSpec> {
    if a.len() < MIN_MATCH_LEN || b.len() < MIN_MATCH_LEN {
        return Vec::new();
    }
    let mut frontier = vec![(TransformSpec::identity(), b.to_vec())];
    let mut seen: HashSet<Vec<ExactRational>> = HashSet::new();
    seen.insert(b.to_vec());
    for level in 0..=depth {
        let hits: Vec<TransformSpec> = frontier
            .iter()
            .filter(|(_, s)| agrees(s, a))
            .map(|(t, _)| t.clone())
            .collect();
        if !hits.is_empty() || level == depth {
            return hits;
        }
        let mut next = Vec::new();
        for (t, s) in &frontier {
            for atom in candidate_atoms(s, a) {
                let Ok(out) = atom.apply(s) else { continue };
                if out.len() < MIN_MATCH_LEN {
                    continue;
                }
                let key: Vec<ExactRational> = out.iter().take(a.len()).cloned().collect();
                if seen.insert(key) {
                    next.push((t.clone().then(atom), out));
                }
            }
        }
        frontier = next;
    }
    Vec::new()
}

/// First transform `t` (up to `depth` atoms) with `t(b) = a`, if any.
pub fn find_transform(a: &[ExactRational], b: &[ExactRational], depth: usize) -> Option<TransformSpec> {
    find_transforms(a, b, depth).into_iter().next()
}
