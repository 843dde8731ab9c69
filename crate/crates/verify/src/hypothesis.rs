//! The standing hypotheses: `p` odd, `|G' : G''| = p^3`, `G''` nontrivial.

use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{Result, VerifyError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub p: u32,
    pub order_log: usize,
    /// `log_p |G' : G''|`.
    pub derived_quotient_log: usize,
    /// `log_p |G''|`.
    pub second_derived_log: usize,
    pub p_odd: bool,
    pub satisfied: bool,
}

pub fn hypothesis_check(ctx: &Context<'_>) -> HypothesisReport {
    let d1 = ctx.derived(1).len();
    let d2 = ctx.derived(2).len();
    let p_odd = ctx.p() != 2;
    HypothesisReport {
        p: ctx.p(),
        order_log: ctx.pcp.n(),
        derived_quotient_log: d1 - d2,
        second_derived_log: d2,
        p_odd,
        satisfied: p_odd && d1 - d2 == 3 && d2 > 0,
    }
}

/// Errors unless `p` is odd and the hypotheses hold.
pub fn require(ctx: &Context<'_>) -> Result<HypothesisReport> {
    let report = hypothesis_check(ctx);
    if !report.p_odd {
        return Err(VerifyError::PrimeTwo);
    }
    if !report.satisfied {
        return Err(VerifyError::Hypothesis(format!(
            "|G':G''| = p^{}, |G''| = p^{}",
            report.derived_quotient_log, report.second_derived_log
        )));
    }
    Ok(report)
}
