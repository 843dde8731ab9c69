//! Commutator identities used as independent checks on the collector.

use crate::error::Result;
use crate::pcp::PcPresentation;
use crate::subgroup::{commutator_subgroup, lower_central_series_of, InducedSequence};
use crate::word::NormalWord;

impl PcPresentation {
    /// `[x, y, z^x] [z, x, y^z] [y, z, x^y]`; always the identity.
    pub fn hall_witt_residual(&self, x: &NormalWord, y: &NormalWord, z: &NormalWord) -> NormalWord {
        let t = |a: &NormalWord, b: &NormalWord, c: &NormalWord| {
            self.comm(&self.comm(a, b), &self.conjugate(c, a))
        };
        self.product([&t(x, y, z), &t(z, x, y), &t(y, z, x)])
    }

    /// `[x, y, z[z, x]] [z, x, y[y, z]] [y, z, x[x, y]]`; always the identity.
    pub fn hall_witt_residual_alt(&self, x: &NormalWord, y: &NormalWord, z: &NormalWord) -> NormalWord {
        let t = |a: &NormalWord, b: &NormalWord, c: &NormalWord| {
            let shifted = self.multiply(c, &self.comm(c, a));
            self.comm(&self.comm(a, b), &shifted)
        };
        self.product([&t(x, y, z), &t(z, x, y), &t(y, z, x)])
    }

    /// `[x^p, y] ([x, y]^p)^{-1}` together with `(N')^p gamma_p(N)` for
    /// `N = <x, [x, y]>`; the residual always lies in that subgroup.
    pub fn collection_formula_residual(
        &self,
        x: &NormalWord,
        y: &NormalWord,
    ) -> Result<(NormalWord, InducedSequence<'_>)> {
        let p = self.p() as i64;
        let xy = self.comm(x, y);
        let lhs = self.comm(&self.power(x, p), y);
        let residual = self.multiply(&lhs, &self.invert(&self.power(&xy, p)));
        let n = InducedSequence::generated(self, &[x.clone(), xy]);
        let derived = commutator_subgroup(&n, &n);
        let powers = derived.agemo(1)?;
        let lcs = lower_central_series_of(&n);
        let gamma_p = lcs
            .get(self.p() as usize - 1)
            .cloned()
            .unwrap_or_else(|| InducedSequence::trivial(self));
        Ok((residual, powers.join(&gamma_p)))
    }
}
