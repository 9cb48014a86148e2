//! Machine-readable reports for the decision procedures. Objects have
//! sorted keys, so output is byte-stable.

use serde_json::{json, Value};

use super::WitnessDoc;
use crate::chartable::GramReport;
use crate::connectedness::{ConnectednessReport, TorsionVerdict};
use crate::error::Result;
use crate::fusion::{RingRef, ValidationReport};
use crate::group::{BallSizes, ElementOrder, GrowthClass, GrowthEstimate};
use crate::irreducibility::DomainDecision;

fn labels(ring: &RingRef, members: &[usize]) -> Vec<String> {
    members.iter().map(|&i| ring.label(i)).collect()
}

pub fn validation_doc(report: &ValidationReport) -> Value {
    json!({
        "kind": "validation",
        "passed": report.passed(),
        "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

pub fn torsion_doc(ring: &RingRef, irrep: &str, verdict: &TorsionVerdict) -> Value {
    match verdict {
        TorsionVerdict::Torsion { closure } => json!({
            "kind": "torsion",
            "irrep": irrep,
            "verdict": "torsion",
            "closure": labels(ring, &closure.members),
        }),
        TorsionVerdict::Inconclusive { stage, support } => json!({
            "kind": "torsion",
            "irrep": irrep,
            "verdict": "inconclusive",
            "stage": stage,
            "support": support,
        }),
    }
}

pub fn connectedness_doc(ring: &RingRef, report: &ConnectednessReport) -> Value {
    match report {
        ConnectednessReport::Connected => json!({ "kind": "connectedness", "verdict": "connected" }),
        ConnectednessReport::NotConnected { torsion } => json!({
            "kind": "connectedness",
            "verdict": "not_connected",
            "torsion": torsion.iter().map(|t| json!({
                "irrep": t.label,
                "closure": labels(ring, &t.closure.members),
            })).collect::<Vec<_>>(),
        }),
    }
}

pub fn domain_doc(decision: &DomainDecision) -> Result<Value> {
    Ok(match decision {
        DomainDecision::Domain { x, min_poly, seed } => json!({
            "kind": "domain_decision",
            "verdict": "domain",
            "x": x.to_string(),
            "min_poly": min_poly.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "seed": seed,
        }),
        DomainDecision::NotDomain { witness, seed } => json!({
            "kind": "domain_decision",
            "verdict": "not_domain",
            "witness": serde_json::to_value(WitnessDoc::from_witness(witness)?)?,
            "seed": seed,
        }),
        DomainDecision::Undecided { trials, seed } => json!({
            "kind": "domain_decision",
            "verdict": "undecided",
            "trials": trials,
            "seed": seed,
        }),
        DomainDecision::Inapplicable { reason } => json!({
            "kind": "domain_decision",
            "verdict": "inapplicable",
            "reason": reason,
        }),
    })
}

pub fn gram_doc(report: &GramReport) -> Value {
    json!({
        "kind": "orthonormality",
        "passed": report.passed(),
        "gram": report.gram.iter()
            .map(|row| row.iter().map(|q| q.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn order_doc(element: &str, order: &ElementOrder, cap: u64) -> Value {
    match order {
        ElementOrder::Order(n) => json!({ "kind": "element_order", "element": element, "order": n }),
        ElementOrder::ExceedsCap => json!({
            "kind": "element_order",
            "element": element,
            "order": null,
            "exceeds_cap": cap,
        }),
    }
}

pub fn balls_doc(balls: &BallSizes) -> Value {
    json!({
        "kind": "ball_sizes",
        "sizes": balls.sizes,
        "truncated": balls.truncated,
    })
}

pub fn growth_doc(est: &GrowthEstimate, truncated: bool) -> Value {
    let class = match est.classification {
        GrowthClass::Polynomial(d) => json!({ "polynomial": d }),
        GrowthClass::ExponentialSuspected => json!("exponential_suspected"),
    };
    json!({
        "kind": "growth",
        "balls": est.balls,
        "m": est.m,
        "slope": est.slope,
        "classification": class,
        "truncated": truncated,
    })
}
