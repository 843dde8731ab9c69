//! Bridges between pc presentations and the table-based oracle.

use pgroup_core::{InducedSequence, NormalWord, PcPresentation};
use pgroup_oracle::{enumerate, Elem, FiniteGroup};

/// Power and commutator relators of `g` as words for coset enumeration.
pub fn pcp_relators(g: &PcPresentation) -> Vec<Vec<i32>> {
    let letters = |w: &NormalWord| -> Vec<i32> {
        w.letters()
            .flat_map(|(i, e)| std::iter::repeat_n(i as i32 + 1, e as usize))
            .collect()
    };
    let inverse = |w: Vec<i32>| -> Vec<i32> { w.into_iter().rev().map(|l| -l).collect() };
    let mut out = Vec::new();
    for i in 0..g.n() {
        let a = i as i32 + 1;
        let mut r = vec![a; g.p() as usize];
        r.extend(inverse(letters(g.power_tail(i))));
        out.push(r);
        for j in 0..i {
            let b = j as i32 + 1;
            let mut r = vec![-a, -b, a, b];
            r.extend(inverse(letters(g.comm_tail(i, j))));
            out.push(r);
        }
    }
    out
}

/// The group defined by the relations of `g`, by coset enumeration.
pub fn oracle(g: &PcPresentation, max_cosets: usize) -> Option<FiniteGroup> {
    let table = enumerate(g.n(), &pcp_relators(g), &[], max_cosets)?;
    let gens: Vec<Vec<u32>> = (0..g.n()).map(|i| table.permutation(i)).collect();
    Some(FiniteGroup::from_regular_action(&gens))
}

pub fn to_oracle(og: &FiniteGroup, w: &NormalWord) -> Elem {
    let word: Vec<i32> = w
        .letters()
        .flat_map(|(i, e)| std::iter::repeat_n(i as i32 + 1, e as usize))
        .collect();
    og.evaluate(&word)
}

/// Oracle images of the elements of `s`.
pub fn image_set(og: &FiniteGroup, s: &InducedSequence<'_>) -> std::collections::BTreeSet<Elem> {
    s.elements()
        .expect("small group")
        .iter()
        .map(|x| to_oracle(og, x))
        .collect()
}
