//! Isomorphism type of `G'` and the power-centrality consequences.

use serde::{Deserialize, Serialize};
use serde_json::json;

use pgroup_core::center_of;

use crate::checklist::{Check, Checklist, Status};
use crate::context::Context;
use crate::error::{Result, VerifyError};
use crate::hypothesis::require;

/// `G'` is `X x C_p` (exponent `p`) or `Y x C_p` (exponent `p^2`), where
/// `X`, `Y` are the extraspecial groups of order `p^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DerivedType {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: DerivedType,
    pub exponent: u128,
    pub checklist: Checklist,
}

pub fn classify_derived_subgroup(ctx: &Context<'_>) -> Result<Classification> {
    require(ctx)?;
    let p = ctx.p() as u128;
    let d = ctx.derived(1);
    let d2 = ctx.derived(2);
    let mut checks = Checklist::new();
    checks.push(Check::assert("derived-order-p4", d.len() == 4, json!({ "log": d.len() })));
    checks.push(Check::assert("derived-nonabelian", !d.is_abelian(), json!({})));
    checks.push(Check::assert("second-derived-order-p", d2.len() == 1, json!({ "log": d2.len() })));
    let elementary = pgroup_core::is_elementary_abelian_section(&d, &d2)?;
    checks.push(Check::assert(
        "derived-quotient-elementary-rank-3",
        elementary && d.len() - d2.len() == 3,
        json!({ "rank": d.len() - d2.len() }),
    ));
    let z = center_of(&d).abelian_invariants()?;
    checks.push(Check::assert(
        "center-elementary-order-p2",
        z == vec![p, p],
        json!({ "invariants": z }),
    ));
    let exponent = d.exponent()?;
    checks.push(Check::assert(
        "exponent-p-or-p2",
        exponent == p || exponent == p * p,
        json!({ "exponent": exponent }),
    ));
    if !checks.passed() {
        return Err(VerifyError::UnexpectedType(format!(
            "G' fails {:?}",
            checks.failures().map(|c| &c.name).collect::<Vec<_>>()
        )));
    }
    let kind = if exponent == p { DerivedType::X } else { DerivedType::Y };
    Ok(Classification {
        kind,
        exponent,
        checklist: checks,
    })
}

/// `G^p <= Z(G)` for type X with `p >= 5`; `G^{p^2} <= Z(G)` for type Y.
pub fn verify_power_central(ctx: &Context<'_>) -> Result<Checklist> {
    let class = classify_derived_subgroup(ctx)?;
    let mut out = Checklist::new();
    let p = ctx.p();
    let k = match class.kind {
        DerivedType::X if p >= 5 => 1,
        DerivedType::X => {
            out.push(Check::new(
                "power-central",
                Status::NotApplicable,
                json!({ "type": "X", "p": p, "reason": "type X needs p >= 5" }),
            ));
            return Ok(out);
        }
        DerivedType::Y => 2,
    };
    let witness = json!({ "type": class.kind, "p": p, "power": (p as u64).pow(k) });
    match ctx.whole().agemo(k) {
        Ok(powers) => {
            let center = ctx.pcp.center();
            let mut w = witness;
            w["agemo_log"] = json!(powers.len());
            w["center_log"] = json!(center.len());
            out.push(Check::assert("power-central", powers.is_subgroup_of(&center), w));
        }
        Err(e @ pgroup_core::Error::EnumerationCap { .. }) => {
            let mut w = witness;
            w["reason"] = json!(e.to_string());
            out.push(Check::new("power-central", Status::Skipped, w));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(out)
}
