//! Central decompositions `G = HU` with `[H, U] = 1`, `H` small.

use serde::{Deserialize, Serialize};
use serde_json::json;

use pgroup_core::{commutator_subgroup, linalg::inv_mod, lower_central_series_of, NormalWord};

use crate::checklist::{Check, Checklist, Status};
use crate::context::Context;
use crate::error::{Result, VerifyError};
use crate::generators::{normalize_generating_set, Normalized};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Decomposition {
    pub normalized: Normalized,
    pub h_gens: Vec<NormalWord>,
    pub u_gens: Vec<NormalWord>,
    pub checklist: Checklist,
}

/// Which of the two intermediate shapes the first stage produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// Every `u_i` centralizes `a`.
    A,
    /// `u_2, ..., u_r` centralize `<a, u_1>`.
    B,
}

struct Work<'c, 'a> {
    ctx: &'c Context<'a>,
    z: NormalWord,
    w: NormalWord,
}

impl Work<'_, '_> {
    fn comm(&self, x: &NormalWord, y: &NormalWord) -> NormalWord {
        self.ctx.pcp.comm(x, y)
    }

    fn mul(&self, xs: &[&NormalWord]) -> NormalWord {
        self.ctx.mul(xs)
    }

    fn pow(&self, x: &NormalWord, k: i64) -> NormalWord {
        self.ctx.pow(x, k)
    }

    /// `e` with `x = z^e`.
    fn zexp(&self, x: &NormalWord) -> Result<u32> {
        if x.is_identity() {
            return Ok(0);
        }
        if !self.ctx.in_gamma(x, 5) {
            return Err(VerifyError::Contradiction(format!("{x} is not in gamma_5")));
        }
        self.ctx.ratio_in_factor(x, &self.z, 5)
    }

    /// `e` with `x = w^e` modulo `gamma_5`.
    fn wexp(&self, x: &NormalWord) -> Result<u32> {
        if !self.ctx.in_gamma(x, 4) {
            return Err(VerifyError::Contradiction(format!("{x} is not in gamma_4")));
        }
        self.ctx.ratio_in_factor(x, &self.w, 4)
    }

    fn inv(&self, e: u32) -> i64 {
        inv_mod(e, self.ctx.p()) as i64
    }

    /// Arranges `[u_{i+1}, u_i] = z` for `i < k` with `u_{i+2}, ...`
    /// centralizing `u_i`, and `u_{k+1}, ...` centralizing `u_k`.
    /// Returns `k`.
    fn chain(&self, us: &mut [NormalWord]) -> Result<usize> {
        let mut t = 0;
        while t < us.len() {
            let Some(j) = (t + 1..us.len()).find(|&j| !self.comm(&us[j], &us[t]).is_identity()) else {
                break;
            };
            us.swap(t + 1, j);
            let c = self.zexp(&self.comm(&us[t + 1], &us[t]))?;
            us[t + 1] = self.pow(&us[t + 1], self.inv(c));
            for i in t + 2..us.len() {
                let beta = self.zexp(&self.comm(&us[i], &us[t]))?;
                us[i] = self.mul(&[&us[i], &self.pow(&us[t + 1], -(beta as i64))]);
            }
            t += 1;
        }
        Ok(t + 1)
    }

    fn product(&self, xs: impl IntoIterator<Item = NormalWord>) -> NormalWord {
        xs.into_iter()
            .fold(self.ctx.pcp.identity(), |acc, x| self.mul(&[&acc, &x]))
    }

    fn stage_one(&self, a: &mut NormalWord, us: &mut [NormalWord]) -> Result<Shape> {
        let Some(first) = us.iter().position(|u| !self.comm(u, a).is_identity()) else {
            return Ok(Shape::A);
        };
        us.swap(0, first);
        let c = self.zexp(&self.comm(&us[0], a))?;
        us[0] = self.pow(&us[0], self.inv(c));
        for i in 1..us.len() {
            let alpha = self.zexp(&self.comm(&us[i], a))?;
            us[i] = self.mul(&[&us[i], &self.pow(&us[0], -(alpha as i64))]);
        }
        let k = self.chain(us)?;
        if k % 2 == 0 {
            let tail = self.product((1..k).step_by(2).map(|i| us[i].clone()));
            *a = self.mul(&[a, &tail]);
            Ok(Shape::A)
        } else {
            us[0] = self.product((0..k).step_by(2).map(|i| us[i].clone()));
            Ok(Shape::B)
        }
    }

    /// From shape A; returns generators of `H` beyond `a, b` and of `U`.
    fn stage_two(&self, b: &NormalWord, mut us: Vec<NormalWord>) -> Result<(Vec<NormalWord>, Vec<NormalWord>)> {
        let deep = |u: &NormalWord| self.ctx.in_gamma(&self.comm(u, b), 5);
        let Some(first) = us.iter().position(|u| !deep(u)) else {
            for u in &mut us {
                let g = self.zexp(&self.comm(u, b))?;
                *u = self.mul(&[u, &self.pow(&self.w, -(g as i64))]);
            }
            return Ok((Vec::new(), us));
        };
        us.swap(0, first);
        let c = self.wexp(&self.comm(&us[0], b))?;
        us[0] = self.pow(&us[0], self.inv(c));
        let rest = self.mul(&[&self.comm(&us[0], b), &self.pow(&self.w, -1)]);
        let g1 = self.zexp(&rest)?;
        us[0] = self.mul(&[&us[0], &self.pow(&self.w, -(g1 as i64))]);
        if self.comm(&us[0], b) != self.w {
            return Err(VerifyError::Contradiction("[u_1, b] != [b,a,a,a]".into()));
        }
        for i in 1..us.len() {
            let g = self.wexp(&self.comm(&us[i], b))?;
            us[i] = self.mul(&[&us[i], &self.pow(&us[0], -(g as i64))]);
            let d = self.zexp(&self.comm(&us[i], b))?;
            us[i] = self.mul(&[&us[i], &self.pow(&self.w, -(d as i64))]);
        }
        if us[1..].iter().all(|u| self.comm(u, &us[0]).is_identity()) {
            let u_gens = us.split_off(1);
            return Ok((us, u_gens));
        }
        let k = self.chain(&mut us)?;
        let odd = self.product((0..k).step_by(2).map(|i| us[i].clone()));
        if k % 2 == 0 {
            let even = self.product((1..k).step_by(2).map(|i| us[i].clone()));
            let u_gens = us[1..k - 1].iter().chain(&us[k..]).cloned().collect();
            Ok((vec![odd, even], u_gens))
        } else {
            Ok((vec![odd], us[1..].to_vec()))
        }
    }
}

/// `G = HU` with `H` normal on at most five generators, `gamma_i(H) =
/// gamma_i(G)` for `i >= 2`, `U` normal with `U' <= gamma_5`, `[H, U] = 1`.
pub fn central_decomposition(ctx: &Context<'_>) -> Result<Decomposition> {
    let normalized = normalize_generating_set(ctx)?;
    let (mut a, b) = (normalized.a.clone(), normalized.b.clone());
    let ba = ctx.comm(&[&b, &a]);
    let w = ctx.comm(&[&ba, &a, &a]);
    let z = ctx.comm(&[&w, &b]);
    let work = Work { ctx, z, w };
    let mut us = normalized.us.clone();
    let shape = work.stage_one(&mut a, &mut us)?;
    let (h_gens, u_gens) = match shape {
        Shape::A => {
            let (extra, u_gens) = work.stage_two(&b, us)?;
            let mut h = vec![a, b];
            h.extend(extra);
            (h, u_gens)
        }
        Shape::B => {
            let u1 = us.remove(0);
            let (extra, u_gens) = work.stage_two(&b, us)?;
            let mut h = vec![a, b];
            h.extend(extra);
            h.push(u1);
            (h, u_gens)
        }
    };
    let checklist = check_decomposition(ctx, &h_gens, &u_gens);
    if !checklist.passed() {
        return Err(VerifyError::Contradiction(format!(
            "decomposition fails: {:?}",
            checklist.failures().map(|c| &c.name).collect::<Vec<_>>()
        )));
    }
    Ok(Decomposition {
        normalized,
        h_gens,
        u_gens,
        checklist,
    })
}

/// Every postcondition of a central decomposition, for `H = <h_gens>`
/// and `U = <u_gens>`.
pub fn check_decomposition(ctx: &Context<'_>, h_gens: &[NormalWord], u_gens: &[NormalWord]) -> Checklist {
    let mut out = Checklist::new();
    let h = ctx.pcp.induced_sequence(h_gens);
    let u = ctx.pcp.induced_sequence(u_gens);
    out.push(Check::assert("h-normal", h.is_normal(), json!({ "h_log": h.len() })));
    out.push(Check::assert(
        "h-generators-at-most-5",
        h_gens.len() <= 5,
        json!({ "count": h_gens.len() }),
    ));
    let h_lcs = lower_central_series_of(&h);
    let mut mismatched = Vec::new();
    for i in 2..=ctx.class() + 1 {
        let hi = h_lcs
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| pgroup_core::InducedSequence::trivial(ctx.pcp));
        if hi != ctx.gamma(i) {
            mismatched.push(json!({ "i": i, "h_log": hi.len(), "g_log": ctx.gamma(i).len() }));
        }
    }
    out.push(Check::assert(
        "gamma-equal",
        mismatched.is_empty(),
        json!({ "mismatched": mismatched }),
    ));
    out.push(Check::assert("u-normal", u.is_normal(), json!({ "u_log": u.len() })));
    let u2 = commutator_subgroup(&u, &u);
    out.push(Check::assert(
        "u-derived-in-gamma5",
        u2.is_subgroup_of(&ctx.gamma(5)),
        json!({ "u_derived_log": u2.len() }),
    ));
    let commuting = h_gens
        .iter()
        .all(|x| u_gens.iter().all(|y| ctx.pcp.comm(x, y).is_identity()));
    out.push(Check::assert("h-u-commute", commuting, json!({})));
    let hu = h.join(&u);
    out.push(Check::assert(
        "g-equals-hu",
        hu.len() == ctx.pcp.n(),
        json!({
            "h_log": h.len(),
            "u_log": u.len(),
            "hu_log": hu.len(),
            "g_log": ctx.pcp.n(),
            "intersection_log": (h.len() + u.len()).saturating_sub(hu.len()),
        }),
    ));
    out
}

/// Tests `H = <gens>` with the largest candidate `U = C_G(H)`. Any valid
/// `U` lies inside `C_G(H)`, so a failure other than `U' <= gamma_5` rules
/// out every `U`; a failure of that condition alone is inconclusive.
pub fn test_with_centralizer(ctx: &Context<'_>, gens: &[NormalWord]) -> (Checklist, bool) {
    let u = ctx.pcp.centralizer(gens);
    let checks = check_decomposition(ctx, gens, &u.gens());
    let failed: Vec<&str> = checks.failures().map(|c| c.name.as_str()).collect();
    let inconclusive = failed == ["u-derived-in-gamma5"];
    (checks, inconclusive)
}

fn subset_check(ctx: &Context<'_>, name: String, gens: &[NormalWord], witness: serde_json::Value) -> Check {
    let (checks, inconclusive) = test_with_centralizer(ctx, gens);
    let failed: Vec<&String> = checks.failures().map(|c| &c.name).collect();
    let status = if inconclusive {
        Status::Skipped
    } else if failed.is_empty() {
        Status::Fail
    } else {
        Status::Pass
    };
    Check::new(name, status, json!({ "subset": witness, "failed": failed }))
}

/// One check per `size`-subset of `gens`; a check passes when that subset
/// cannot generate the `H` of a central decomposition.
pub fn subset_minimality(ctx: &Context<'_>, gens: &[NormalWord], size: usize) -> Checklist {
    let mut out = Checklist::new();
    for subset in subsets(gens.len(), size) {
        let chosen: Vec<NormalWord> = subset.iter().map(|&i| gens[i].clone()).collect();
        let name = format!("subset-{}", subset.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("-"));
        out.push(subset_check(ctx, name, &chosen, json!(subset)));
    }
    out
}

/// Like [`subset_minimality`] over every hyperplane of `G / Phi(G)`,
/// spanned by products of `basis` (a minimal generating set).
pub fn hyperplane_minimality(ctx: &Context<'_>, basis: &[NormalWord]) -> Checklist {
    let p = ctx.p();
    let d = basis.len();
    let mut out = Checklist::new();
    let lift = |v: &[u32]| {
        v.iter()
            .zip(basis)
            .fold(ctx.pcp.identity(), |acc, (&e, g)| ctx.mul(&[&acc, &ctx.pow(g, e as i64)]))
    };
    // functionals with leading coefficient 1, each up to scalar once
    for lead in 0..d {
        let free = d - lead - 1;
        for code in 0..(p as u64).pow(free as u32) {
            let mut f = vec![0u32; d];
            f[lead] = 1;
            let mut c = code;
            for slot in f.iter_mut().skip(lead + 1) {
                *slot = (c % p as u64) as u32;
                c /= p as u64;
            }
            let gens: Vec<NormalWord> = (0..d)
                .filter(|&j| j != lead)
                .map(|j| {
                    let mut v = vec![0u32; d];
                    v[j] = 1;
                    v[lead] = (p - f[j]) % p;
                    lift(&v)
                })
                .collect();
            out.push(subset_check(ctx, format!("hyperplane-{f:?}"), &gens, json!(f)));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::subsets;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 4).len(), 5);
        assert_eq!(subsets(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
