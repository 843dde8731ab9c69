//! Centralizers.
//!
//! The lifting method walks down the series `G_i = <a_i, ..., a_{n-1}>`,
//! whose factors are central of order `p`. `K_i`, the set of elements of
//! the ambient subgroup whose commutators with `S` lie in `G_i`, shrinks to
//! the centralizer. On `K_i` the map `g -> (exponent of a_i in [g, s])_s` is
//! a homomorphism to an elementary abelian group, and `K_{i+1}` is its
//! kernel: generated by the nullspace products together with the p-th
//! powers and commutators of the members of `K_i`.

use crate::linalg::FpMatrix;
use crate::pcp::PcPresentation;
use crate::subgroup::InducedSequence;
use crate::word::NormalWord;

/// Ambient orders up to this size use enumeration.
pub const BRUTE_FORCE_LIMIT: u128 = 729;

/// `C_ambient(S)` by lifting.
pub fn centralizer_lifting<'a>(ambient: &InducedSequence<'a>, s: &[NormalWord]) -> InducedSequence<'a> {
    let pcp = ambient.pcp();
    let p = pcp.p();
    let s: Vec<&NormalWord> = s.iter().filter(|x| !x.is_identity()).collect();
    let mut k = ambient.clone();
    for layer in 0..pcp.n() {
        if s.is_empty() || k.is_trivial() {
            break;
        }
        let gens = k.gens();
        // rows: generators of K, columns: elements of S
        let rows: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| s.iter().map(|x| pcp.comm(g, x).exponents()[layer]).collect())
            .collect();
        if rows.iter().all(|r| r.iter().all(|&e| e == 0)) {
            continue;
        }
        // kernel of x -> x * M acting on row vectors
        let m = FpMatrix::from_residue_rows(p, s.len(), rows).transpose();
        let mut next: Vec<NormalWord> = m
            .nullspace()
            .iter()
            .map(|v| {
                gens.iter()
                    .zip(v)
                    .fold(pcp.identity(), |acc, (g, &c)| pcp.multiply(&acc, &pcp.power(g, c as i64)))
            })
            .collect();
        for (i, x) in gens.iter().enumerate() {
            next.push(pcp.power(x, p as i64));
            for y in &gens[..i] {
                next.push(pcp.comm(x, y));
            }
        }
        k = InducedSequence::normal_closure(pcp, &next, &gens);
    }
    k
}

/// `C_ambient(S)` by enumerating the ambient subgroup.
pub fn centralizer_brute_force<'a>(
    ambient: &InducedSequence<'a>,
    s: &[NormalWord],
) -> crate::error::Result<InducedSequence<'a>> {
    let pcp = ambient.pcp();
    let mut out = InducedSequence::trivial(pcp);
    ambient.for_each_element(|g| {
        if !out.contains(g) && s.iter().all(|x| pcp.comm(g, x).is_identity()) {
            out = out.extended(std::slice::from_ref(g));
        }
    })?;
    Ok(out)
}

/// `C_ambient(S)`, by enumeration for small ambient subgroups and by
/// lifting otherwise.
pub fn centralizer_in<'a>(ambient: &InducedSequence<'a>, s: &[NormalWord]) -> InducedSequence<'a> {
    if ambient.order().is_some_and(|o| o <= BRUTE_FORCE_LIMIT) {
        if let Ok(c) = centralizer_brute_force(ambient, s) {
            return c;
        }
    }
    centralizer_lifting(ambient, s)
}

impl PcPresentation {
    /// `C_G(S)`.
    pub fn centralizer(&self, s: &[NormalWord]) -> InducedSequence<'_> {
        centralizer_in(&self.whole(), s)
    }

    /// `Z(G)`.
    pub fn center(&self) -> InducedSequence<'_> {
        self.centralizer(&self.generators())
    }
}

/// `Z(H)` of a subgroup.
pub fn center_of<'a>(h: &InducedSequence<'a>) -> InducedSequence<'a> {
    centralizer_in(h, &h.gens())
}
