//! Structural statements checked directly against computed series.

use serde_json::json;

use pgroup_core::{lower_central_series_of, NormalWord};

use crate::checklist::{Check, Checklist, Status};
use crate::context::Context;
use crate::error::Result;
use crate::hypothesis::require;

/// Under the hypotheses: `|G' : gamma_3| = p`, `G'' = gamma_5`,
/// `[G', gamma_3] <= gamma_5` and `|gamma_5| = p`.
pub fn verify_theorem_1(ctx: &Context<'_>) -> Result<Checklist> {
    require(ctx)?;
    let mut out = Checklist::new();
    let g2 = ctx.gamma(2);
    let g3 = ctx.gamma(3);
    let g5 = ctx.gamma(5);
    out.push(Check::assert(
        "derived-over-gamma3-order-p",
        g2.len() - g3.len() == 1,
        json!({ "log_order": g2.len() - g3.len() }),
    ));
    let d2 = ctx.derived(2);
    out.push(Check::assert(
        "second-derived-equals-gamma5",
        d2 == g5,
        json!({ "second_derived_log": d2.len(), "gamma5_log": g5.len() }),
    ));
    let c = pgroup_core::commutator_subgroup(&g2, &g3);
    out.push(Check::assert(
        "derived-gamma3-commutator-in-gamma5",
        c.is_subgroup_of(&g5),
        json!({ "commutator_log": c.len() }),
    ));
    out.push(Check::assert(
        "gamma5-order-p",
        g5.len() == 1,
        json!({ "gamma5_log": g5.len() }),
    ));
    Ok(out)
}

/// `|G' : G''| >= p^3` whenever `G''` is nontrivial, and `|G''| = p` when
/// moreover `p` is odd and the bound is attained.
pub fn verify_hall_bounds(ctx: &Context<'_>) -> Checklist {
    let mut out = Checklist::new();
    let d1 = ctx.derived(1).len();
    let d2 = ctx.derived(2).len();
    let quotient = d1 - d2;
    let witness = json!({
        "p": ctx.p(),
        "derived_quotient_log": quotient,
        "second_derived_log": d2,
    });
    if d2 == 0 {
        out.push(Check::new("derived-quotient-at-least-p3", Status::NotApplicable, witness.clone()));
        out.push(Check::new("lower-bound-attained", Status::NotApplicable, witness.clone()));
        out.push(Check::new("second-derived-order-p", Status::NotApplicable, witness));
        return out;
    }
    out.push(Check::assert("derived-quotient-at-least-p3", quotient >= 3, witness.clone()));
    let attained = if quotient == 3 { Status::Pass } else { Status::NotApplicable };
    out.push(Check::new("lower-bound-attained", attained, witness.clone()));
    if ctx.p() != 2 && quotient == 3 {
        out.push(Check::assert("second-derived-order-p", d2 == 1, witness));
    } else {
        out.push(Check::new("second-derived-order-p", Status::NotApplicable, witness));
    }
    out
}

/// For `H = <gens>` with `G' = H' gamma_3(G)`: `H` is normal and
/// `gamma_i(H) = gamma_i(G)` for every `i >= 2`.
pub fn verify_transfer_lemma(ctx: &Context<'_>, gens: &[NormalWord]) -> Checklist {
    let mut out = Checklist::new();
    let h = ctx.pcp.induced_sequence(gens);
    let h_lcs = lower_central_series_of(&h);
    let h2 = h_lcs.get(1).cloned().unwrap_or_else(|| h.clone());
    let covered = h2.join(&ctx.gamma(3));
    let precondition = covered == ctx.gamma(2);
    let witness = json!({
        "h_log": h.len(),
        "derived_log": ctx.gamma(2).len(),
        "h_derived_times_gamma3_log": covered.len(),
    });
    if !precondition {
        out.push(Check::new(
            "precondition",
            Status::NotApplicable,
            json!({ "reason": "precondition fails", "orders": witness }),
        ));
        return out;
    }
    out.push(Check::new("precondition", Status::Pass, witness));
    out.push(Check::assert("h-normal", h.is_normal(), json!({ "h_log": h.len() })));
    for i in 2..=ctx.class() + 1 {
        let hi = h_lcs
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| pgroup_core::InducedSequence::trivial(ctx.pcp));
        let gi = ctx.gamma(i);
        out.push(Check::assert(
            format!("gamma{i}-equal"),
            hi == gi,
            json!({ "h_log": hi.len(), "g_log": gi.len() }),
        ));
    }
    out
}
