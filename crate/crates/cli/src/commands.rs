use beta_moments::error::{Error, Result};
use beta_moments::exact::{pow_i, ExactRational};
use beta_moments::hankel::check_pm;
use beta_moments::identities::{
    verify_finite, verify_infinite, IdentityResult, InfiniteOptions, Rhs, FINITE_IDS, INFINITE_IDS,
};
use beta_moments::integrality::{check_integrality, demo_nonintegral};
use beta_moments::moments::catalog::{catalog, ReferenceSource};
use beta_moments::moments::{MomentSequence, MomentSpec};
use beta_moments::oeis::{compare, verify_claim, ClaimVerdict, OeisClient, CLAIM_TERMS};
use beta_moments::series::closed_form::ClosedFormId;
use beta_moments::series::gf_of_moments;
use beta_moments::transforms::find_transforms;

use crate::output::OutputRecord;

fn s(x: &impl ToString) -> String {
    x.to_string()
}

fn spec_params(r: OutputRecord, spec: &MomentSpec) -> OutputRecord {
    r.param("c", &spec.c).param("alpha", spec.alpha()).param("beta", spec.beta())
}

pub fn moments(spec: &MomentSpec, count: usize, scale: Option<&ExactRational>) -> OutputRecord {
    let mut cols = vec!["n", "M_n"];
    if scale.is_some() {
        cols.push("scaled");
    }
    let mut r = spec_params(OutputRecord::new("moments", &cols), spec).param("count", count);
    if let Some(q) = scale {
        r = r.param("scale", q);
    }
    for (n, m) in MomentSequence::compute(spec, count).terms.iter().enumerate() {
        let mut row = vec![s(&n), s(m)];
        if let Some(q) = scale {
            row.push(s(&(m * pow_i(q, n as i64))));
        }
        r.row(row);
    }
    r
}

fn identity_row(r: &mut OutputRecord, res: &IdentityResult) {
    let (lo, hi) = match &res.rhs {
        Rhs::Exact(x) => (s(x), s(x)),
        Rhs::Enclosure { lo, hi } => (s(lo), s(hi)),
    };
    let method = res.certificate.as_ref().map(|c| c.method.to_string()).unwrap_or_else(|| "exact".into());
    r.check(res.passed());
    r.row(vec![res.id.clone(), s(&res.n), s(&res.lhs), lo, hi, method, s(&res.width()), s(&res.status)]);
}

pub fn verify(id: &str, n_max: u64, infinite_n_max: u64, truncation: u64) -> Result<OutputRecord> {
    let ids: Vec<&str> = if id == "all" {
        FINITE_IDS.iter().chain(INFINITE_IDS).copied().collect()
    } else if FINITE_IDS.contains(&id) || INFINITE_IDS.contains(&id) {
        vec![id]
    } else {
        return Err(Error::UnknownId(id.to_string()));
    };
    let mut r = OutputRecord::new("verify", &["id", "n", "lhs", "rhs_lo", "rhs_hi", "method", "width", "status"])
        .param("id", id)
        .param("n_max", n_max)
        .param("infinite_n_max", infinite_n_max)
        .param("truncation", truncation);
    let opts = InfiniteOptions {
        truncation,
        ..InfiniteOptions::default()
    };
    for id in ids {
        let results = if FINITE_IDS.contains(&id) {
            verify_finite(id, 0..=n_max)?
        } else {
            // eq2 is a finite partial-sum identity and runs to the full range
            let top = if id == "eq2" { n_max } else { infinite_n_max };
            verify_infinite(id, 0..=top, &opts)?
        };
        for res in &results {
            identity_row(&mut r, res);
        }
    }
    Ok(r)
}

pub fn hankel(spec: &MomentSpec, order: usize) -> OutputRecord {
    let rep = check_pm(spec, order);
    let mut r = spec_params(OutputRecord::new("hankel", &["order", "det", "shifted_det"]), spec).param("order", order);
    for (k, (d, sd)) in rep.determinants.iter().zip(&rep.shifted_determinants).enumerate() {
        r.row(vec![s(&k), s(d), s(sd)]);
    }
    r.check(rep.pm);
    r.notes.push(format!("positive semidefinite: {}", rep.pm));
    if rep.stieltjes_applicable {
        r.check(rep.stieltjes);
        r.notes.push(format!("Stieltjes: {}", rep.stieltjes));
    } else {
        r.notes.push(format!("Stieltjes (not applicable, c < 0): {}", rep.stieltjes));
    }
    if let Some(k) = rep.first_pm_failure() {
        r.notes.push(format!("first negative determinant at order {k}"));
    }
    r
}

pub fn gf_closed_form(id: &str, order: usize) -> Result<OutputRecord> {
    let cf = ClosedFormId::parse(id)?;
    let series = cf.series(order)?;
    let target = cf.target(order + 1)?;
    let mut r = OutputRecord::new("gf", &["n", "coefficient", "expected", "status"])
        .param("id", &cf)
        .param("order", order);
    for (n, (a, b)) in series.coeffs().iter().zip(&target).enumerate() {
        r.check(a == b);
        let status = if a == b { "match" } else { "mismatch" };
        r.row(vec![s(&n), s(a), s(b), status.into()]);
    }
    Ok(r)
}

pub fn gf_spec(spec: &MomentSpec, order: usize) -> OutputRecord {
    let mut r = spec_params(OutputRecord::new("gf", &["n", "coefficient"]), spec).param("order", order);
    for (n, a) in gf_of_moments(spec, order).coeffs().iter().enumerate() {
        r.row(vec![s(&n), s(a)]);
    }
    r
}

fn scaled_terms(spec: &MomentSpec, scale: &ExactRational, count: usize) -> Vec<ExactRational> {
    MomentSequence::compute(spec, count)
        .terms
        .iter()
        .enumerate()
        .map(|(n, m)| m * pow_i(scale, n as i64))
        .collect()
}

/// Depth of the transform search used by `match`.
const MATCH_DEPTH: usize = 3;

pub fn match_sequence(
    client: &OeisClient,
    spec: &MomentSpec,
    scale: &ExactRational,
    oeis: Option<&str>,
) -> Result<OutputRecord> {
    let computed = scaled_terms(spec, scale, CLAIM_TERMS + 4);
    let mut r = spec_params(OutputRecord::new("match", &["oeis", "verdict", "transform"]), spec).param("scale", scale);
    let candidates: Vec<String> = match oeis {
        Some(id) => vec![id.to_string()],
        None => {
            let mut ids: Vec<String> = catalog()
                .iter()
                .flat_map(|e| e.oeis_id.iter().chain(&e.alternative_ids).map(|x| x.to_string()))
                .collect();
            ids.sort();
            ids.dedup();
            ids
        }
    };
    r = r.param("oeis", oeis.unwrap_or("auto"));
    let mut found = false;
    for id in &candidates {
        let entry = match client.fetch(id) {
            Ok(e) => e,
            Err(e) if oeis.is_some() => {
                r.row(vec![id.clone(), ClaimVerdict::Unresolved(e.to_string()).to_string(), String::new()]);
                r.check(false);
                return Ok(r);
            }
            Err(_) => continue,
        };
        let verdict = compare(&computed[..CLAIM_TERMS], &entry, CLAIM_TERMS);
        let target: Vec<ExactRational> = entry.terms.iter().cloned().map(ExactRational::from_integer).collect();
        let transforms = if verdict.is_match() {
            Vec::new()
        } else {
            find_transforms(&target, &computed, MATCH_DEPTH)
        };
        let hit = verdict.is_match() || !transforms.is_empty();
        if oeis.is_some() || hit {
            let t = transforms.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" | ");
            r.row(vec![id.clone(), verdict.to_string(), t]);
        }
        found |= hit;
    }
    r.check(found);
    Ok(r)
}

pub fn integrality(p: u64, r_: u64, max_n: u64) -> Result<OutputRecord> {
    let rep = check_integrality(p, r_, max_n)?;
    let mut r = OutputRecord::new("integrality", &["n", "multiplier", "m_n", "product", "integer"])
        .param("p", p)
        .param("r", r_)
        .param("max_n", max_n);
    for row in &rep.rows {
        r.check(row.is_integer);
        r.row(vec![s(&row.n), s(&row.multiplier), s(&row.raw), s(&row.product), s(&row.is_integer)]);
    }
    Ok(r)
}

pub fn integrality_demo(count: u64) -> OutputRecord {
    let mut r = OutputRecord::new("integrality-demo", &["n", "value"]).param("count", count);
    for (i, v) in demo_nonintegral(count).iter().enumerate() {
        r.row(vec![s(&(i + 1)), s(v)]);
    }
    r
}

pub fn catalog_listing() -> OutputRecord {
    let mut r = OutputRecord::new(
        "catalog",
        &["id", "label", "c", "alpha", "beta", "scale", "transform", "oeis", "alternatives", "reference"],
    );
    for e in catalog() {
        let reference = match e.reference {
            ReferenceSource::Oeis => "oeis",
            ReferenceSource::Formula => "formula",
            ReferenceSource::SelfComputed => "self",
        };
        r.row(vec![
            e.id.into(),
            e.label.into(),
            s(&e.spec.c),
            s(e.spec.alpha()),
            s(e.spec.beta()),
            s(&e.scale),
            s(&e.transform),
            e.oeis_id.unwrap_or("").into(),
            e.alternative_ids.join(" "),
            reference.into(),
        ]);
    }
    r
}

pub fn claims(client: &OeisClient) -> Result<OutputRecord> {
    let mut r = OutputRecord::new("claims", &["id", "oeis", "verdict", "alternatives"]);
    for e in catalog() {
        if e.oeis_id.is_none() {
            continue;
        }
        let rep = verify_claim(client, &e)?;
        r.check(rep.passed());
        let alts = rep
            .alternatives
            .iter()
            .map(|(id, v)| format!("{id}: {v}"))
            .collect::<Vec<_>>()
            .join("; ");
        r.row(vec![rep.entry_id, rep.oeis_id, s(&rep.verdict), alts]);
    }
    Ok(r)
}
