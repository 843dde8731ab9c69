//! Isomorphism invariants for telling subgroups apart.

use serde::{Deserialize, Serialize};
use serde_json::json;

use pgroup_core::{center_of, InducedSequence};

use crate::checklist::{Check, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub order_log: usize,
    pub abelianization: Vec<u128>,
    /// `(element order, count)`; absent above the enumeration cap.
    pub order_histogram: Option<Vec<(u128, u64)>>,
    pub center: Vec<u128>,
}

pub fn invariants(s: &InducedSequence<'_>) -> Invariants {
    Invariants {
        order_log: s.len(),
        abelianization: s.abelianization_invariants(),
        order_histogram: s
            .element_order_histogram()
            .ok()
            .map(|h| h.into_iter().collect()),
        center: center_of(s)
            .abelian_invariants()
            .expect("centers are abelian"),
    }
}

/// Name of the first invariant that differs, in the order order,
/// abelianization, element-order histogram, center.
pub fn first_difference(x: &Invariants, y: &Invariants) -> Option<&'static str> {
    if x.order_log != y.order_log {
        Some("order")
    } else if x.abelianization != y.abelianization {
        Some("abelianization")
    } else if x.order_histogram.is_some() && y.order_histogram.is_some() && x.order_histogram != y.order_histogram {
        Some("order-histogram")
    } else if x.center != y.center {
        Some("center")
    } else {
        None
    }
}

/// Passes when some invariant separates the two subgroups; otherwise
/// reports them as indistinguishable without claiming an isomorphism.
pub fn compare(name: &str, x: &InducedSequence<'_>, y: &InducedSequence<'_>) -> Check {
    let (ix, iy) = (invariants(x), invariants(y));
    match first_difference(&ix, &iy) {
        Some(inv) => Check::new(
            name,
            Status::Pass,
            json!({ "distinguished_by": inv, "first": ix, "second": iy }),
        ),
        None => Check::new(
            name,
            Status::NotApplicable,
            json!({ "distinguished_by": "indistinguishable by implemented invariants", "first": ix, "second": iy }),
        ),
    }
}
