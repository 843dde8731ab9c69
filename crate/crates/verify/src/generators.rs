//! Generator reduction, standard pairs and normalized generating sets.

use serde::{Deserialize, Serialize};
use serde_json::json;

use pgroup_core::{lower_central_series_of, FpMatrix, NormalWord};

use crate::checklist::{Check, Checklist};
use crate::context::Context;
use crate::error::{Result, VerifyError};
use crate::hypothesis::require;
use crate::theorems::verify_transfer_lemma;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionCase {
    /// `G' / gamma_3` cyclic; two generators suffice.
    Cyclic,
    /// `G' / gamma_3` elementary abelian of rank 2; three generators.
    ElementaryRank2,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reduction {
    pub case: ReductionCase,
    pub gens: Vec<NormalWord>,
    /// The construction needed the fallback search.
    pub searched: bool,
}

/// `G' = <gens>' gamma_3(G)`.
fn covers_derived(ctx: &Context<'_>, gens: &[NormalWord]) -> bool {
    let h = ctx.pcp.induced_sequence(gens);
    let h2 = pgroup_core::commutator_subgroup(&h, &h);
    h2.join(&ctx.gamma(3)) == ctx.gamma(2)
}

/// A subgroup `H` with at most three generators, normal in `G`, with
/// `gamma_i(H) = gamma_i(G)` for all `i >= 2`.
pub fn reduce_generators(ctx: &Context<'_>) -> Result<Reduction> {
    let sec = ctx.gamma_section(2);
    let reps = ctx.frattini_section().representatives();
    let outside_gamma3 = |x: &NormalWord, y: &NormalWord| !ctx.in_gamma(&ctx.comm(&[x, y]), 3);
    let reduction = match sec.rank() {
        0 => return Err(VerifyError::Degenerate),
        1 => {
            let mut found = None;
            'outer: for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    if outside_gamma3(&reps[i], &reps[j]) {
                        found = Some(vec![reps[i].clone(), reps[j].clone()]);
                        break 'outer;
                    }
                }
            }
            let gens = found.ok_or_else(|| {
                VerifyError::SearchExhausted("no generator pair with commutator outside gamma_3".into())
            })?;
            Reduction {
                case: ReductionCase::Cyclic,
                gens,
                searched: false,
            }
        }
        2 => {
            if !pgroup_core::is_elementary_abelian_section(&ctx.gamma(2), &ctx.gamma(3))? {
                return Err(VerifyError::Shape("G'/gamma_3 is cyclic of order p^2".into()));
            }
            reduce_rank_two(ctx, &reps)?
        }
        r => {
            return Err(VerifyError::Shape(format!("G'/gamma_3 has rank {r}")));
        }
    };
    let check = verify_transfer_lemma(ctx, &reduction.gens);
    if !check.passed() || check.status("precondition") != Some(crate::Status::Pass) {
        return Err(VerifyError::Contradiction(format!(
            "reduced subgroup fails the transfer conclusions: {:?}",
            check.failures().map(|c| &c.name).collect::<Vec<_>>()
        )));
    }
    Ok(reduction)
}

fn reduce_rank_two(ctx: &Context<'_>, reps: &[NormalWord]) -> Result<Reduction> {
    let p = ctx.p();
    let sec = ctx.gamma_section(2);
    let coords = |x: &NormalWord, y: &NormalWord| -> Result<Vec<u32>> {
        Ok(sec.coordinates(&ctx.comm(&[x, y]))?)
    };
    let rank_of = |rows: Vec<Vec<u32>>| FpMatrix::from_residue_rows(p, 2, rows).rank();
    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (i + 1..reps.len()).map(move |j| (i, j)))
        .collect();
    let mut first = None;
    let mut second = None;
    for &(i, j) in &pairs {
        let c = coords(&reps[i], &reps[j])?;
        match &first {
            None if c.iter().any(|&v| v != 0) => first = Some(((i, j), c)),
            Some((_, c1)) if rank_of(vec![c1.clone(), c.clone()]) == 2 => {
                second = Some((i, j));
                break;
            }
            _ => {}
        }
    }
    if let (Some(((ia, ib), _)), Some((ic, id))) = (first, second) {
        let (mut a, mut b) = (reps[ia].clone(), reps[ib].clone());
        let (mut c, mut d) = (reps[ic].clone(), reps[id].clone());
        let cross = [(&a, &c), (&a, &d), (&b, &c), (&b, &d)]
            .iter()
            .map(|(x, y)| outside_zero(&coords(x, y)))
            .collect::<Result<Vec<bool>>>()?;
        let gens = if cross.iter().all(|&nontrivial| !nontrivial) {
            let bc = ctx.mul(&[&b, &c]);
            vec![a, bc, d]
        } else {
            // relabel so that [a, c] is nontrivial modulo gamma_3
            if !cross[0] {
                if cross[1] {
                    std::mem::swap(&mut c, &mut d);
                } else if cross[2] {
                    std::mem::swap(&mut a, &mut b);
                } else {
                    std::mem::swap(&mut a, &mut b);
                    std::mem::swap(&mut c, &mut d);
                }
            }
            // [a, c] = [a, b]^alpha [c, d]^beta modulo gamma_3
            let ab = coords(&a, &b)?;
            let cd = coords(&c, &d)?;
            let ac = coords(&a, &c)?;
            let basis = FpMatrix::from_residue_rows(p, 2, vec![ab, cd]).transpose();
            let alpha = basis.solve(&ac)?.particular[0];
            if alpha != 0 {
                vec![a, c, d]
            } else {
                vec![a, b, c]
            }
        };
        if covers_derived(ctx, &gens) {
            return Ok(Reduction {
                case: ReductionCase::ElementaryRank2,
                gens,
                searched: false,
            });
        }
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            for k in j + 1..reps.len() {
                let gens = vec![reps[i].clone(), reps[j].clone(), reps[k].clone()];
                if covers_derived(ctx, &gens) {
                    return Ok(Reduction {
                        case: ReductionCase::ElementaryRank2,
                        gens,
                        searched: true,
                    });
                }
            }
        }
    }
    Err(VerifyError::SearchExhausted(
        "no generator triple H with G' = H' gamma_3".into(),
    ))
}

fn outside_zero(c: &Result<Vec<u32>>) -> Result<bool> {
    match c {
        Ok(v) => Ok(v.iter().any(|&x| x != 0)),
        Err(e) => Err(e.clone()),
    }
}

/// `[b,a]`, `[b,a,a]`, `[b,a,a,a]`, `[b,a,a,a,b]` generate the successive
/// lower central factors, while `[b,a,b]`, `[b,a,a,b]`, `[b,a,a,a,a]`
/// fall one term deeper.
pub fn is_standard_pair(ctx: &Context<'_>, a: &NormalWord, b: &NormalWord) -> bool {
    let generates = |x: &NormalWord, i: usize| ctx.gamma(i + 1).extended(std::slice::from_ref(x)) == ctx.gamma(i);
    let ba = ctx.comm(&[b, a]);
    let baa = ctx.comm(&[&ba, a]);
    let baaa = ctx.comm(&[&baa, a]);
    generates(&ba, 2)
        && generates(&baa, 3)
        && ctx.in_gamma(&ctx.comm(&[&ba, b]), 4)
        && generates(&baaa, 4)
        && ctx.in_gamma(&ctx.comm(&[&baa, b]), 5)
        && generates(&ctx.comm(&[&baaa, b]), 5)
        && ctx.in_gamma(&ctx.comm(&[&baaa, a]), 6)
}

/// A standard pair of `<x, y>`: `(x, y)` itself if it qualifies, then the
/// first pair `(x^i y^j, x^k y^l)` in lexicographic order of `(i, j, k, l)`.
/// The conditions only depend on the pair modulo the Frattini subgroup, so
/// the search is complete.
pub fn standard_pair_of(ctx: &Context<'_>, x: &NormalWord, y: &NormalWord) -> Result<(NormalWord, NormalWord)> {
    if is_standard_pair(ctx, x, y) {
        return Ok((x.clone(), y.clone()));
    }
    let p = ctx.p();
    let lift = |i: u32, j: u32| ctx.mul(&[&ctx.pow(x, i as i64), &ctx.pow(y, j as i64)]);
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                for l in 0..p {
                    if (i as u64 * l as u64 + (p - j) as u64 * k as u64).is_multiple_of(p as u64) {
                        continue;
                    }
                    let (a, b) = (lift(i, j), lift(k, l));
                    if is_standard_pair(ctx, &a, &b) {
                        return Ok((a, b));
                    }
                }
            }
        }
    }
    Err(VerifyError::SearchExhausted("no standard pair".into()))
}

/// Standard pair of a two-generator group satisfying the hypotheses.
pub fn standard_pair(ctx: &Context<'_>) -> Result<(NormalWord, NormalWord)> {
    require(ctx)?;
    let reps = ctx.frattini_section().representatives();
    if reps.len() != 2 {
        return Err(VerifyError::Shape(format!(
            "G needs {} generators, not 2",
            reps.len()
        )));
    }
    standard_pair_of(ctx, &reps[0], &reps[1])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Normalized {
    pub a: NormalWord,
    pub b: NormalWord,
    pub us: Vec<NormalWord>,
}

impl Normalized {
    pub fn all(&self) -> Vec<NormalWord> {
        let mut v = vec![self.a.clone(), self.b.clone()];
        v.extend(self.us.iter().cloned());
        v
    }
}

/// Minimal generating set `a, b, u_1, ..., u_r` with `(a, b)` a standard
/// pair of a two-generator reduction and each `u_i` centralizing `G'`.
pub fn normalize_generating_set(ctx: &Context<'_>) -> Result<Normalized> {
    require(ctx)?;
    let red = reduce_generators(ctx)?;
    if red.case != ReductionCase::Cyclic {
        return Err(VerifyError::Contradiction("G'/gamma_3 is not cyclic".into()));
    }
    let (a, b) = standard_pair_of(ctx, &red.gens[0], &red.gens[1])?;

    let mut basis = vec![a.clone(), b.clone()];
    for r in ctx.frattini_section().representatives() {
        let mut trial = basis.clone();
        trial.push(r);
        if ctx.independent_mod_frattini(&trial)? {
            basis = trial;
        }
    }
    let mut us = basis.split_off(2);

    let ba = ctx.comm(&[&b, &a]);
    let baa = ctx.comm(&[&ba, &a]);
    let baaa = ctx.comm(&[&baa, &a]);
    for u in &mut us {
        let alpha = ctx.ratio_in_factor(&ctx.comm(&[u, &a]), &ba, 2)?;
        let beta = ctx.ratio_in_factor(&ctx.comm(&[u, &b]), &ba, 2)?;
        *u = ctx.mul(&[u, &ctx.pow(&b, -(alpha as i64)), &ctx.pow(&a, beta as i64)]);
    }
    for u in &mut us {
        let ua = ctx.comm(&[u, &a]);
        let alpha = ctx.ratio_in_factor(&ua, &baa, 3)?;
        let rest = ctx.mul(&[&ua, &ctx.pow(&baa, -(alpha as i64))]);
        let beta = ctx.ratio_in_factor(&rest, &baaa, 4)?;
        *u = ctx.mul(&[u, &ctx.pow(&ba, -(alpha as i64)), &ctx.pow(&baa, -(beta as i64))]);
    }
    let n = Normalized { a, b, us };
    let check = check_normalized(ctx, &n)?;
    if !check.passed() {
        return Err(VerifyError::Contradiction(format!(
            "normalized set fails: {:?}",
            check.failures().map(|c| &c.name).collect::<Vec<_>>()
        )));
    }
    Ok(n)
}

/// The properties a normalized generating set must have.
pub fn check_normalized(ctx: &Context<'_>, n: &Normalized) -> Result<Checklist> {
    let mut out = Checklist::new();
    let all = n.all();
    let rank = ctx.frattini_section().rank();
    out.push(Check::assert(
        "minimal-generating-set",
        all.len() == rank && ctx.independent_mod_frattini(&all)?,
        json!({ "size": all.len(), "frattini_rank": rank }),
    ));
    let h = ctx.pcp.induced_sequence(&[n.a.clone(), n.b.clone()]);
    let h_lcs = lower_central_series_of(&h);
    let gamma_equal = (2..=ctx.class() + 1).all(|i| {
        h_lcs
            .get(i - 1)
            .map_or(ctx.gamma(i).is_trivial(), |hi| *hi == ctx.gamma(i))
    });
    out.push(Check::assert("pair-subgroup-normal", h.is_normal(), json!({ "h_log": h.len() })));
    out.push(Check::assert("pair-gamma-equal", gamma_equal, json!({})));
    out.push(Check::assert("standard-pair", is_standard_pair(ctx, &n.a, &n.b), json!({})));
    let derived = ctx.gamma(2).gens();
    let mut bad = Vec::new();
    for (i, u) in n.us.iter().enumerate() {
        if !ctx.in_gamma(&ctx.comm(&[&n.a, u]), 5) {
            bad.push(format!("[a,u{}] not in gamma5", i + 1));
        }
        if !ctx.in_gamma(&ctx.comm(&[&n.b, u]), 4) {
            bad.push(format!("[b,u{}] not in gamma4", i + 1));
        }
        for (j, v) in n.us.iter().enumerate().skip(i + 1) {
            if !ctx.in_gamma(&ctx.comm(&[u, v]), 5) {
                bad.push(format!("[u{},u{}] not in gamma5", i + 1, j + 1));
            }
        }
        if derived.iter().any(|d| !ctx.pcp.comm(u, d).is_identity()) {
            bad.push(format!("u{} does not centralize G'", i + 1));
        }
    }
    out.push(Check::assert("u-relations", bad.is_empty(), json!({ "violations": bad })));
    Ok(out)
}
