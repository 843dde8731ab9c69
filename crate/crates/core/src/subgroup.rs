//! Subgroups as induced sequences.
//!
//! An induced sequence holds at most one member per depth (index of the
//! first nonzero exponent), each with leading exponent 1, and is closed in
//! the sense that every p-th power and commutator of members sifts to the
//! identity. Every element of the subgroup is then uniquely a product
//! `m_1^e_1 ... m_k^e_k` over the members in depth order.
//!
//! Members are kept canonical: a member has exponent 0 at the depth of every
//! other member. Two sequences for the same subgroup are therefore equal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::inv_mod;
use crate::pcp::PcPresentation;
use crate::word::NormalWord;

#[derive(Clone)]
pub struct InducedSequence<'a> {
    pcp: &'a PcPresentation,
    /// `slots[d]` is the member of depth `d`, if any.
    slots: Vec<Option<NormalWord>>,
}

/// Result of sifting an element through a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sift {
    /// `(depth, e)` pairs with `x = prod m_depth^e * residual`, in depth order.
    pub exponents: Vec<(usize, u32)>,
    pub residual: NormalWord,
}

impl Sift {
    pub fn is_member(&self) -> bool {
        self.residual.is_identity()
    }
}

impl<'a> InducedSequence<'a> {
    pub fn trivial(pcp: &'a PcPresentation) -> Self {
        InducedSequence {
            pcp,
            slots: vec![None; pcp.n()],
        }
    }

    /// The whole group; its members are the pc generators.
    pub fn whole(pcp: &'a PcPresentation) -> Self {
        InducedSequence {
            pcp,
            slots: (0..pcp.n()).map(|i| Some(pcp.gen(i))).collect(),
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(pcp: &'a PcPresentation, gens: &[NormalWord]) -> Self {
        Self::normal_closure(pcp, gens, &[])
    }

    /// The smallest subgroup containing `gens` and normalized by every
    /// element of `conj_by`.
    pub fn normal_closure(pcp: &'a PcPresentation, gens: &[NormalWord], conj_by: &[NormalWord]) -> Self {
        let mut s = Self::trivial(pcp);
        s.close(gens.to_vec(), conj_by);
        s
    }

    /// The subgroup generated by the union of `self` and `gens`.
    pub fn extended(&self, gens: &[NormalWord]) -> Self {
        let mut s = self.clone();
        s.close(gens.to_vec(), &[]);
        s
    }

    /// The subgroup generated by `self` and `other`.
    pub fn join(&self, other: &InducedSequence<'_>) -> Self {
        self.extended(&other.gens())
    }

    fn close(&mut self, mut pending: Vec<NormalWord>, conj_by: &[NormalWord]) {
        let pcp = self.pcp;
        let p = pcp.p();
        while let Some(x) = pending.pop() {
            let r = self.sift(&x).residual;
            let Some(d) = r.depth() else { continue };
            let lead = r.exponents()[d];
            let r = if lead == 1 {
                r
            } else {
                pcp.power(&r, inv_mod(lead, p) as i64)
            };
            pending.push(pcp.power(&r, p as i64));
            for g in self.slots.iter().flatten() {
                pending.push(pcp.comm(&r, g));
            }
            for c in conj_by {
                pending.push(pcp.comm(&r, c));
            }
            self.slots[d] = Some(r);
        }
        self.canonicalize();
    }

    fn canonicalize(&mut self) {
        let pcp = self.pcp;
        let n = self.slots.len();
        for d in 0..n {
            let Some(mut g) = self.slots[d].take() else { continue };
            for d2 in d + 1..n {
                let e = g.exponents()[d2];
                if e == 0 {
                    continue;
                }
                if let Some(h) = &self.slots[d2] {
                    g = pcp.multiply(&g, &pcp.power(h, -(e as i64)));
                }
            }
            self.slots[d] = Some(g);
        }
    }

    pub fn pcp(&self) -> &'a PcPresentation {
        self.pcp
    }

    /// Number of members; the order is `p^len`.
    pub fn len(&self) -> usize {
        self.slots.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.is_empty()
    }

    pub fn order_log(&self) -> usize {
        self.len()
    }

    pub fn order(&self) -> Option<u128> {
        (self.pcp.p() as u128).checked_pow(self.len() as u32)
    }

    /// Members in depth order.
    pub fn gens(&self) -> Vec<NormalWord> {
        self.slots.iter().flatten().cloned().collect()
    }

    pub fn members(&self) -> impl Iterator<Item = &NormalWord> + '_ {
        self.slots.iter().flatten()
    }

    pub fn member_at(&self, depth: usize) -> Option<&NormalWord> {
        self.slots[depth].as_ref()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(d, s)| s.as_ref().map(|_| d))
            .collect()
    }

    /// Divides `x` from the left by members until its depth is not a pivot.
    pub fn sift(&self, x: &NormalWord) -> Sift {
        let pcp = self.pcp;
        let p = pcp.p();
        let mut x = x.clone();
        let mut exponents = Vec::new();
        while let Some(d) = x.depth() {
            let Some(g) = &self.slots[d] else { break };
            let e = x.exponents()[d];
            x = pcp.multiply(&pcp.power(g, (p - e) as i64), &x);
            exponents.push((d, e));
        }
        Sift {
            exponents,
            residual: x,
        }
    }

    pub fn contains(&self, x: &NormalWord) -> bool {
        self.sift(x).is_member()
    }

    pub fn contains_all<'b>(&self, xs: impl IntoIterator<Item = &'b NormalWord>) -> bool {
        xs.into_iter().all(|x| self.contains(x))
    }

    /// `self <= other`.
    pub fn is_subgroup_of(&self, other: &InducedSequence<'_>) -> bool {
        other.contains_all(self.members())
    }

    /// `self` is normalized by every element of `by`.
    pub fn is_normalized_by<'b>(&self, by: impl IntoIterator<Item = &'b NormalWord>) -> bool {
        let by: Vec<&NormalWord> = by.into_iter().collect();
        self.members()
            .all(|h| by.iter().all(|g| self.contains(&self.pcp.comm(h, g))))
    }

    /// Normal in the whole group.
    pub fn is_normal(&self) -> bool {
        let gens = self.pcp.generators();
        self.is_normalized_by(gens.iter())
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.gens();
        m.iter()
            .enumerate()
            .all(|(i, x)| m[..i].iter().all(|y| self.pcp.comm(x, y).is_identity()))
    }

    /// `prod m_i^{e_i}` over the members in depth order.
    pub fn element(&self, exps: &[u32]) -> NormalWord {
        let pcp = self.pcp;
        self.members()
            .zip(exps)
            .fold(pcp.identity(), |acc, (g, &e)| pcp.multiply(&acc, &pcp.power(g, e as i64)))
    }

    /// Exponent vector of a member with respect to the sequence.
    pub fn coordinates(&self, x: &NormalWord) -> Result<Vec<u32>> {
        let s = self.sift(x);
        if !s.is_member() {
            return Err(Error::NotContained);
        }
        let pivots = self.pivots();
        let mut out = vec![0; pivots.len()];
        for (d, e) in s.exponents {
            let k = pivots.binary_search(&d).expect("sift uses pivots");
            out[k] = e;
        }
        Ok(out)
    }

    pub fn to_report(&self) -> SubgroupReport {
        SubgroupReport {
            order_log: self.len(),
            pivots: self.pivots(),
            generators: self.gens(),
        }
    }
}

impl PartialEq for InducedSequence<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.slots == other.slots
    }
}

impl Eq for InducedSequence<'_> {}

impl fmt::Debug for InducedSequence<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.members()).finish()
    }
}

/// Serializable summary of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupReport {
    pub order_log: usize,
    pub pivots: Vec<usize>,
    pub generators: Vec<NormalWord>,
}

/// `[A, B]`, normal in `<A, B>`.
pub fn commutator_subgroup<'a>(a: &InducedSequence<'a>, b: &InducedSequence<'a>) -> InducedSequence<'a> {
    let pcp = a.pcp();
    let ag = a.gens();
    let bg = b.gens();
    let mut gens = Vec::with_capacity(ag.len() * bg.len());
    for x in &ag {
        for y in &bg {
            gens.push(pcp.comm(x, y));
        }
    }
    let conj: Vec<NormalWord> = ag.into_iter().chain(bg).collect();
    InducedSequence::normal_closure(pcp, &gens, &conj)
}

/// `gamma_1(s) = s`, `gamma_{i+1}(s) = [gamma_i(s), s]`, ending with the
/// trivial subgroup.
pub fn lower_central_series_of<'a>(s: &InducedSequence<'a>) -> Vec<InducedSequence<'a>> {
    let mut out = vec![s.clone()];
    while !out.last().unwrap().is_trivial() {
        let next = commutator_subgroup(out.last().unwrap(), s);
        if &next == out.last().unwrap() {
            // only for non-nilpotent input, impossible in a p-group
            break;
        }
        out.push(next);
    }
    out
}

/// `s, s', s'', ...` ending with the trivial subgroup.
pub fn derived_series_of<'a>(s: &InducedSequence<'a>) -> Vec<InducedSequence<'a>> {
    let mut out = vec![s.clone()];
    while !out.last().unwrap().is_trivial() {
        let last = out.last().unwrap();
        let next = commutator_subgroup(last, last);
        if &next == last {
            break;
        }
        out.push(next);
    }
    out
}

impl PcPresentation {
    pub fn induced_sequence(&self, gens: &[NormalWord]) -> InducedSequence<'_> {
        InducedSequence::generated(self, gens)
    }

    pub fn whole(&self) -> InducedSequence<'_> {
        InducedSequence::whole(self)
    }

    pub fn lower_central_series(&self) -> Vec<InducedSequence<'_>> {
        lower_central_series_of(&self.whole())
    }

    pub fn derived_series(&self) -> Vec<InducedSequence<'_>> {
        derived_series_of(&self.whole())
    }

    /// `gamma_i(G)` with `gamma_1 = G`; trivial beyond the class.
    pub fn gamma(&self, i: usize) -> InducedSequence<'_> {
        assert!(i >= 1, "the lower central series starts at gamma_1");
        let lcs = self.lower_central_series();
        lcs.get(i - 1)
            .cloned()
            .unwrap_or_else(|| InducedSequence::trivial(self))
    }

    /// `G^p G'`.
    pub fn frattini(&self) -> InducedSequence<'_> {
        let gens = self.generators();
        let mut words: Vec<NormalWord> = gens.iter().map(|g| self.power(g, self.p() as i64)).collect();
        for (i, x) in gens.iter().enumerate() {
            for y in &gens[..i] {
                words.push(self.comm(x, y));
            }
        }
        InducedSequence::normal_closure(self, &words, &gens)
    }
}

/// `a / b` is elementary abelian; `b` must be a normal subgroup of `a`.
pub fn is_elementary_abelian_section(a: &InducedSequence<'_>, b: &InducedSequence<'_>) -> Result<bool> {
    if !b.is_subgroup_of(a) {
        return Err(Error::NotContained);
    }
    if !b.is_normalized_by(a.members()) {
        return Err(Error::NotNormal);
    }
    let pcp = a.pcp();
    let m = a.gens();
    for (i, x) in m.iter().enumerate() {
        if !b.contains(&pcp.power(x, pcp.p() as i64)) {
            return Ok(false);
        }
        for y in &m[..i] {
            if !b.contains(&pcp.comm(x, y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A quotient `top / bottom` of subgroups with `bottom` normal in `top`,
/// represented without building a presentation for it.
#[derive(Clone, Debug)]
pub struct Section<'a> {
    top: InducedSequence<'a>,
    bottom: InducedSequence<'a>,
    /// Merged sequence: bottom members plus top members at the other depths.
    merged: InducedSequence<'a>,
    rep_depths: Vec<usize>,
}

impl<'a> Section<'a> {
    pub fn new(top: &InducedSequence<'a>, bottom: &InducedSequence<'a>) -> Result<Self> {
        if !bottom.is_subgroup_of(top) {
            return Err(Error::NotContained);
        }
        if !bottom.is_normalized_by(top.members()) {
            return Err(Error::NotNormal);
        }
        let mut merged = bottom.clone();
        let mut rep_depths = Vec::new();
        for d in top.pivots() {
            if merged.slots[d].is_none() {
                merged.slots[d] = top.slots[d].clone();
                rep_depths.push(d);
            }
        }
        Ok(Section {
            top: top.clone(),
            bottom: bottom.clone(),
            merged,
            rep_depths,
        })
    }

    pub fn top(&self) -> &InducedSequence<'a> {
        &self.top
    }

    pub fn bottom(&self) -> &InducedSequence<'a> {
        &self.bottom
    }

    /// `log_p |top / bottom|`.
    pub fn rank(&self) -> usize {
        self.rep_depths.len()
    }

    /// Coset representatives whose powers products exhaust the quotient.
    pub fn representatives(&self) -> Vec<NormalWord> {
        self.rep_depths
            .iter()
            .map(|&d| self.merged.slots[d].clone().unwrap())
            .collect()
    }

    /// Exponents of the coset `x * bottom` along the representatives.
    pub fn coordinates(&self, x: &NormalWord) -> Result<Vec<u32>> {
        let s = self.merged.sift(x);
        if !s.is_member() {
            return Err(Error::NotContained);
        }
        let mut out = vec![0; self.rep_depths.len()];
        for (d, e) in s.exponents {
            if let Ok(k) = self.rep_depths.binary_search(&d) {
                out[k] = e;
            }
        }
        Ok(out)
    }

    /// `prod r_i^{c_i}` over the representatives.
    pub fn lift(&self, coords: &[u32]) -> NormalWord {
        let pcp = self.top.pcp();
        self.representatives()
            .iter()
            .zip(coords)
            .fold(pcp.identity(), |acc, (r, &c)| pcp.multiply(&acc, &pcp.power(r, c as i64)))
    }
}
