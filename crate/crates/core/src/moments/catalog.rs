//! Named integer sequences realised as (scaled, transformed) moment sequences.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MomentSequence, MomentSpec};
use crate::error::Result;
use crate::exact::{rat, ri, ExactRational};
use crate::transforms::{TransformAtom, TransformSpec};

/// Where the expected values of a catalog row come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReferenceSource {
    /// Terms are taken from the OEIS entry `oeis_id`.
    Oeis,
    /// Terms come from an explicit closed formula.
    Formula,
    /// No OEIS entry exists; the prefix is the engine's own output.
    SelfComputed,
}

/// One catalog row: `transform(scale^n * M_n(spec))` is the named sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSequenceEntry {
    pub id: &'static str,
    pub label: &'static str,
    pub spec: MomentSpec,
    /// Base `q` of the geometric multiplier `q^n` applied before `transform`.
    pub scale: ExactRational,
    pub transform: TransformSpec,
    pub oeis_id: Option<&'static str>,
    /// Other A-numbers cited for the same row; reported, never preferred.
    pub alternative_ids: Vec<&'static str>,
    pub reference: ReferenceSource,
    /// Expected leading terms for rows without an OEIS id.
    pub reference_prefix: Vec<ExactRational>,
}

/// Length of stored prefixes for rows without an OEIS entry.
pub const SELF_PREFIX_LEN: usize = 10;

impl NamedSequenceEntry {
    /// The full map: moments, times `scale^n`, then `transform`.
    pub fn full_transform(&self) -> TransformSpec {
        let mut atoms = Vec::with_capacity(self.transform.atoms.len() + 1);
        if !self.scale.is_one() {
            atoms.push(TransformAtom::GeometricScale(self.scale.clone()));
        }
        atoms.extend(self.transform.atoms.iter().cloned());
        TransformSpec::new(atoms)
    }

    /// First `count` terms of the named sequence.
    pub fn terms(&self, count: usize) -> Result<Vec<ExactRational>> {
        let t = self.full_transform();
        let input = (count as isize - t.length_delta()).max(t.consumed() as isize).max(1) as usize;
        let seq = MomentSequence::compute(&self.spec, input);
        let mut out = t.apply(&seq.terms)?;
        out.truncate(count);
        Ok(out)
    }
}

fn spec(c: ExactRational, a: ExactRational, b: ExactRational) -> MomentSpec {
    MomentSpec::new(c, a, b).expect("catalog parameters are positive")
}

fn times(s: i64) -> TransformAtom {
    TransformAtom::ConstantScale(ri(s))
}

fn r_s(p: &[i64]) -> TransformAtom {
    TransformAtom::ShiftRight(p.iter().map(|&v| ri(v)).collect())
}

struct Row {
    id: &'static str,
    label: &'static str,
    spec: MomentSpec,
    scale: i64,
    atoms: Vec<TransformAtom>,
    oeis: Option<&'static str>,
    alternatives: Vec<&'static str>,
    formula: Option<fn(u64) -> ExactRational>,
}

fn row(
    id: &'static str,
    label: &'static str,
    spec: MomentSpec,
    scale: i64,
    atoms: Vec<TransformAtom>,
    oeis: Option<&'static str>,
) -> Row {
    Row {
        id,
        label,
        spec,
        scale,
        atoms,
        oeis,
        alternatives: Vec::new(),
        formula: None,
    }
}

fn pow2_over(n: u64, d: u64) -> ExactRational {
    ExactRational::new(BigInt::from(2).pow(n as u32), BigInt::from(d))
}

fn cent_b(n: u64) -> ExactRational {
    if n % 2 == 1 {
        ExactRational::zero()
    } else {
        pow2_over(n, n + 1)
    }
}

fn cent_d(n: u64) -> ExactRational {
    if n % 2 == 1 {
        ExactRational::zero()
    } else {
        ri(3) * pow2_over(n, (n + 1) * (n + 3))
    }
}

fn cent_f(n: u64) -> ExactRational {
    if n % 2 == 1 {
        -pow2_over(n, n + 2)
    } else {
        pow2_over(n, n + 1)
    }
}

fn cent_f_mirror(n: u64) -> ExactRational {
    if n % 2 == 1 {
        pow2_over(n, n + 2)
    } else {
        pow2_over(n, n + 1)
    }
}

fn rows() -> Vec<Row> {
    let h = |k: i64| rat(k, 2);
    let q = |k: i64| rat(k, 4);
    let z = || ri(0);
    let mut v = vec![
        row("pocz-a", "central binomial coefficients", spec(z(), h(1), h(1)), 1, vec![], Some("A000984")),
        row("pocz-b", "Catalan numbers", spec(z(), h(1), h(3)), 1, vec![], Some("A000108")),
        row("pocz-c", "C(2n+1, n+1)", spec(z(), h(3), h(1)), 1, vec![], Some("A001700")),
        row("pocz-d", "super ballot numbers / 3", spec(z(), h(1), h(5)), 1, vec![times(3)], Some("A007054")),
        row("pocz-e", "Catalan numbers, shifted left by one", spec(z(), h(3), h(3)), 1, vec![r_s(&[1])], Some("A000108")),
        row("pocz-f", "C(2n+1, n+1), shifted left by one, / 3", spec(z(), h(5), h(1)), 1, vec![times(3), r_s(&[1])], Some("A001700")),
        row("pocz-g", "super ballot numbers / 10", spec(z(), h(1), h(7)), 1, vec![times(10)], Some("A007272")),
        row("pocz-h", "super ballot numbers, shifted, / 2", spec(z(), h(3), h(5)), 1, vec![times(2), r_s(&[3])], Some("A007054")),
        row("pocz-i", "Catalan numbers, shifted left by two, / 2", spec(z(), h(5), h(3)), 1, vec![times(2), r_s(&[1, 1])], Some("A000108")),
        row("pocz-j", "C(2n+1, n+1), shifted left by two, / 10", spec(z(), h(7), h(1)), 1, vec![times(10), r_s(&[1, 3])], Some("A001700")),
        row("bc-1", "g.f. 1/sqrt((1-13x)(1+3x))", spec(q(-3), h(1), h(1)), 4, vec![], Some("A322248")),
        row("bc-2", "g.f. 1/sqrt(1-2x-63x^2)", spec(q(-7), h(1), h(1)), 4, vec![], Some("A098441")),
        row("bc-3", "g.f. 1/sqrt(1-2x-15x^2)", spec(h(-3), h(1), h(1)), 2, vec![], Some("A084605")),
        row("bc-4", "g.f. 1/sqrt(1-2x-15x^2) (repeated row)", spec(h(-3), h(1), h(1)), 2, vec![], Some("A084605")),
        row("bc-5", "central trinomial coefficients", spec(ri(-1), h(1), h(1)), 1, vec![], Some("A002426")),
        row("bc-6", "g.f. 1/sqrt(1-6x-7x^2)", spec(h(-1), h(1), h(1)), 2, vec![], Some("A322242")),
        row("bc-7", "g.f. 1/sqrt(1-14x-15x^2)", spec(q(-1), h(1), h(1)), 4, vec![], None),
        row("bc-8", "g.f. 1/sqrt(1-18x+17x^2)", spec(q(1), h(1), h(1)), 4, vec![], None),
        row("bc-9", "g.f. 1/sqrt(1-10x+9x^2)", spec(h(1), h(1), h(1)), 2, vec![], Some("A084771")),
        row("bc-10", "g.f. 1/sqrt(1-6x+5x^2)", spec(ri(1), h(1), h(1)), 1, vec![], Some("A026375")),
        row("bc-11", "g.f. 1/sqrt(1-26x+105x^2)", spec(q(5), h(1), h(1)), 4, vec![], None),
        row("bc-12", "g.f. 1/sqrt(1-14x+33x^2)", spec(h(3), h(1), h(1)), 2, vec![], Some("A248168")),
        row("bc-13", "g.f. 1/sqrt(1-8x+12x^2)", spec(ri(2), h(1), h(1)), 1, vec![], Some("A081671")),
        row("bc-14", "g.f. 1/sqrt(1-18x+65x^2)", spec(h(5), h(1), h(1)), 2, vec![], None),
        row("catalan-1", "Riordan numbers", spec(ri(-1), h(1), h(3)), 1, vec![], Some("A005043")),
        row("catalan-2", "Motzkin numbers", spec(ri(-1), h(3), h(3)), 1, vec![], Some("A001006")),
        row("catalan-3", "g.f. (1-sqrt((1-7x)/(1+x)))/(4x)", spec(h(-1), h(1), h(3)), 2, vec![], Some("A337168")),
        row("catalan-4", "g.f. (1-sqrt((1-5x)/(1+3x)))/(4x)", spec(h(-3), h(1), h(3)), 2, vec![], None),
        row("catalan-5", "g.f. (1-sqrt((1-9x)/(1-x)))/(4x)", spec(h(1), h(1), h(3)), 2, vec![r_s(&[1])], Some("A162326")),
        row("catalan-6", "binomial transform of Catalan numbers", spec(ri(1), h(1), h(3)), 1, vec![], Some("A007317")),
        row("catalan-7", "g.f. (1-sqrt((1-11x)/(1-3x)))/(4x)", spec(h(3), h(1), h(3)), 2, vec![], None),
        row("catalan-8", "second binomial transform of Catalan numbers", spec(ri(2), h(1), h(3)), 1, vec![], Some("A064613")),
        row("assorted-1", "g.f. (1-3x-sqrt(1-6x+5x^2))/(2x^2)", spec(ri(1), h(3), h(3)), 1, vec![r_s(&[1])], Some("A002212")),
        row("assorted-2", "g.f. (1-4x-sqrt(1-8x+12x^2))/(2x^2)", spec(ri(2), h(3), h(3)), 1, vec![], Some("A005572")),
        row("assorted-3", "g.f. (1-5x-sqrt(1-10x+21x^2))/(2x^2)", spec(ri(3), h(3), h(3)), 1, vec![], Some("A182401")),
        row("assorted-4", "g.f. (1-5x-sqrt(1-10x+9x^2))/(8x^2)", spec(h(1), h(3), h(3)), 2, vec![r_s(&[1])], Some("A059231")),
        row("cent-a", "aerated central binomial coefficients", spec(ri(-2), h(1), h(1)), 1, vec![], Some("A126869")),
        row("cent-b", "2^n/(n+1) at even n, 0 at odd n", spec(ri(-2), ri(1), ri(1)), 1, vec![], None),
        row("cent-c", "aerated Catalan numbers", spec(ri(-2), h(3), h(3)), 1, vec![], Some("A126120")),
        row("cent-d", "3*2^n/((n+1)(n+3)) at even n, 0 at odd n", spec(ri(-2), ri(2), ri(2)), 1, vec![], None),
        row("cent-e", "(-1)^n C(n, floor(n/2))", spec(ri(-2), h(1), h(3)), 1, vec![], Some("A126930")),
        row("cent-e2", "C(n, floor(n/2))", spec(ri(-2), h(3), h(1)), 1, vec![], Some("A001405")),
        row("cent-f", "2^n/(n+1) at even n, -2^n/(n+2) at odd n", spec(ri(-2), ri(1), ri(2)), 1, vec![], None),
        row("cent-f2", "2^n/(n+1) at even n, 2^n/(n+2) at odd n", spec(ri(-2), ri(2), ri(1)), 1, vec![], None),
        row(
            "cent-g",
            "2 S_n(3/2,5/2), sign-changed, with 1,1 prepended",
            spec(ri(-2), h(3), h(5)),
            1,
            vec![times(2), TransformAtom::SignChange, r_s(&[1, 1])],
            Some("A089408"),
        ),
        row("cent-g2", "2 S_n(5/2,3/2) with 1,1 prepended", spec(ri(-2), h(5), h(3)), 1, vec![times(2), r_s(&[1, 1])], Some("A089408")),
    ];
    for r in &mut v {
        match r.id {
            "pocz-d" | "pocz-h" => r.alternatives = vec!["A007272"],
            "pocz-g" => r.alternatives = vec!["A007054"],
            "cent-e" => r.alternatives = vec!["A001405"],
            "cent-e2" => r.alternatives = vec!["A126930"],
            "cent-b" => r.formula = Some(cent_b),
            "cent-d" => r.formula = Some(cent_d),
            "cent-f" => r.formula = Some(cent_f),
            "cent-f2" => r.formula = Some(cent_f_mirror),
            _ => {}
        }
    }
    v
}

/// Length of prefixes generated from explicit formulas.
pub const FORMULA_PREFIX_LEN: usize = 20;

/// Every catalogued identification, in a fixed order.
pub fn catalog() -> Vec<NamedSequenceEntry> {
    rows()
        .into_iter()
        .map(|r| {
            let mut e = NamedSequenceEntry {
                id: r.id,
                label: r.label,
                spec: r.spec,
                scale: ri(r.scale),
                transform: TransformSpec::new(r.atoms),
                oeis_id: r.oeis,
                alternative_ids: r.alternatives,
                reference: ReferenceSource::Oeis,
                reference_prefix: Vec::new(),
            };
            if let Some(f) = r.formula {
                e.reference = ReferenceSource::Formula;
                e.reference_prefix = (0..FORMULA_PREFIX_LEN as u64).map(f).collect();
            } else if e.oeis_id.is_none() {
                e.reference = ReferenceSource::SelfComputed;
                e.reference_prefix = e.terms(SELF_PREFIX_LEN).expect("catalog transforms apply");
            }
            e
        })
        .collect()
}

pub fn find(id: &str) -> Option<NamedSequenceEntry> {
    catalog().into_iter().find(|e| e.id == id)
}
