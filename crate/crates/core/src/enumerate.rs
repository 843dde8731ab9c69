//! Element enumeration and the invariants computed from it, plus abelian
//! invariants computed from power subgroups.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::limits::check_enumeration;
use crate::subgroup::InducedSequence;
use crate::word::NormalWord;

impl<'a> InducedSequence<'a> {
    /// Calls `f` on every element, each formed by one multiplication from a
    /// previously visited one.
    pub fn for_each_element(&self, mut f: impl FnMut(&NormalWord)) -> Result<()> {
        let pcp = self.pcp();
        check_enumeration(pcp.p(), self.len())?;
        let gens = self.gens();
        fn walk(
            pcp: &crate::pcp::PcPresentation,
            gens: &[NormalWord],
            prefix: &NormalWord,
            f: &mut dyn FnMut(&NormalWord),
        ) {
            let Some((g, rest)) = gens.split_first() else {
                f(prefix);
                return;
            };
            let mut x = prefix.clone();
            for e in 0..pcp.p() {
                if e > 0 {
                    x = pcp.multiply(&x, g);
                }
                walk(pcp, rest, &x, f);
            }
        }
        walk(pcp, &gens, &pcp.identity(), &mut f);
        Ok(())
    }

    pub fn elements(&self) -> Result<Vec<NormalWord>> {
        let mut out = Vec::new();
        self.for_each_element(|x| out.push(x.clone()))?;
        Ok(out)
    }

    /// Map from element order to the number of elements of that order.
    pub fn element_order_histogram(&self) -> Result<BTreeMap<u128, u64>> {
        let pcp = self.pcp();
        let p = pcp.p() as u128;
        let mut hist = BTreeMap::new();
        self.for_each_element(|x| {
            *hist.entry(p.pow(pcp.element_order_log(x))).or_insert(0) += 1;
        })?;
        Ok(hist)
    }

    /// Largest element order.
    pub fn exponent(&self) -> Result<u128> {
        let pcp = self.pcp();
        let mut k = 0;
        self.for_each_element(|x| k = k.max(pcp.element_order_log(x)))?;
        Ok((pcp.p() as u128).pow(k))
    }

    /// The subgroup generated by all `x^(p^k)` with `x` in `self`.
    pub fn agemo(&self, k: u32) -> Result<InducedSequence<'a>> {
        let pcp = self.pcp();
        let q = (pcp.p() as i64).pow(k);
        let mut out = InducedSequence::trivial(pcp);
        let mut fresh = Vec::new();
        self.for_each_element(|x| {
            let y = pcp.power(x, q);
            if !out.contains(&y) {
                fresh.push(y);
                out = out.extended(&fresh);
                fresh.clear();
            }
        })?;
        Ok(out)
    }

    /// Invariants `[p^l_1, p^l_2, ...]`, descending, of an abelian subgroup.
    pub fn abelian_invariants(&self) -> Result<Vec<u128>> {
        if !self.is_abelian() {
            return Err(Error::NotAbelian);
        }
        Ok(invariants_above(self, &InducedSequence::trivial(self.pcp())))
    }

    /// Invariants of `self / self'`.
    pub fn abelianization_invariants(&self) -> Vec<u128> {
        let derived = crate::subgroup::commutator_subgroup(self, self);
        invariants_above(self, &derived)
    }
}

/// Invariants of `a / b` for `b` normal in `a` with abelian quotient: with
/// `l_k = log_p |(a/b)^(p^k)|`, the number of cyclic factors of order at
/// least `p^(k+1)` is `l_k - l_(k+1)`.
fn invariants_above(a: &InducedSequence<'_>, b: &InducedSequence<'_>) -> Vec<u128> {
    let pcp = a.pcp();
    let p = pcp.p();
    let gens = a.gens();
    let base = b.len();
    let mut l = vec![a.len() - base];
    let mut powers = gens;
    while *l.last().unwrap() > 0 {
        powers = powers.iter().map(|g| pcp.power(g, p as i64)).collect();
        l.push(b.extended(&powers).len() - base);
    }
    let mut out = Vec::new();
    for k in (0..l.len() - 1).rev() {
        let at_least = l[k] - l[k + 1];
        let already = out.len();
        for _ in already..at_least {
            out.push((p as u128).pow(k as u32 + 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::pcp::{PcPresentation, PcpBuilder};

    #[test]
    fn c9_times_c3() {
        let g = PcpBuilder::new(3, vec![1, 1, 2])
            .power(0, &[(2, 1)])
            .build()
            .unwrap();
        let w = g.whole();
        assert_eq!(w.exponent().unwrap(), 9);
        assert_eq!(w.abelian_invariants().unwrap(), vec![9, 3]);
        assert_eq!(w.abelianization_invariants(), vec![9, 3]);
        let h = w.element_order_histogram().unwrap();
        assert_eq!(h.values().sum::<u64>(), 27);
        assert_eq!(h[&1], 1);
        assert_eq!(h[&3], 8);
        assert_eq!(h[&9], 18);
    }

    #[test]
    fn x27_exponent_and_agemo() {
        let g = PcpBuilder::new(3, vec![1, 1, 2])
            .comm(1, 0, &[(2, 1)])
            .build()
            .unwrap();
        assert_eq!(g.whole().exponent().unwrap(), 3);
        assert!(g.whole().agemo(1).unwrap().is_trivial());
        assert!(g.whole().abelian_invariants().is_err());
        assert_eq!(g.whole().abelianization_invariants(), vec![3, 3]);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let g = PcPresentation::elementary_abelian(5, 12).unwrap();
        // 5^12 > 2^22
        assert!(g.whole().exponent().is_err());
    }
}
