//! Series and sections of a group, computed once and shared by the checks.

use pgroup_core::linalg::inv_mod;
use pgroup_core::{
    derived_series_of, lower_central_series_of, InducedSequence, NormalWord, PcPresentation, Section,
};

use crate::error::{Result, VerifyError};

pub struct Context<'a> {
    pub pcp: &'a PcPresentation,
    /// `gamma_1, gamma_2, ...` ending with the trivial group.
    pub lcs: Vec<InducedSequence<'a>>,
    /// `G, G', G'', ...` ending with the trivial group.
    pub derived: Vec<InducedSequence<'a>>,
    pub frattini: InducedSequence<'a>,
}

impl<'a> Context<'a> {
    pub fn new(pcp: &'a PcPresentation) -> Self {
        let whole = pcp.whole();
        Context {
            pcp,
            lcs: lower_central_series_of(&whole),
            derived: derived_series_of(&whole),
            frattini: pcp.frattini(),
        }
    }

    pub fn p(&self) -> u32 {
        self.pcp.p()
    }

    pub fn whole(&self) -> InducedSequence<'a> {
        self.pcp.whole()
    }

    /// `gamma_i(G)`, `i >= 1`.
    pub fn gamma(&self, i: usize) -> InducedSequence<'a> {
        self.lcs
            .get(i - 1)
            .cloned()
            .unwrap_or_else(|| InducedSequence::trivial(self.pcp))
    }

    /// `G^(i)` with `G^(0) = G`.
    pub fn derived(&self, i: usize) -> InducedSequence<'a> {
        self.derived
            .get(i)
            .cloned()
            .unwrap_or_else(|| InducedSequence::trivial(self.pcp))
    }

    pub fn class(&self) -> usize {
        self.lcs.len() - 1
    }

    /// `log_p |gamma_i / gamma_{i+1}|`.
    pub fn gamma_factor_rank(&self, i: usize) -> usize {
        self.gamma(i).len() - self.gamma(i + 1).len()
    }

    pub fn in_gamma(&self, x: &NormalWord, i: usize) -> bool {
        self.gamma(i).contains(x)
    }

    pub fn comm(&self, args: &[&NormalWord]) -> NormalWord {
        let owned: Vec<NormalWord> = args.iter().map(|x| (*x).clone()).collect();
        self.pcp.commutator(&owned).expect("at least two arguments")
    }

    pub fn mul(&self, words: &[&NormalWord]) -> NormalWord {
        self.pcp.product(words.iter().copied())
    }

    pub fn pow(&self, x: &NormalWord, k: i64) -> NormalWord {
        self.pcp.power(x, k)
    }

    /// `G / Phi(G)`.
    pub fn frattini_section(&self) -> Section<'a> {
        Section::new(&self.whole(), &self.frattini).expect("Phi(G) is normal")
    }

    /// `gamma_i / gamma_{i+1}`.
    pub fn gamma_section(&self, i: usize) -> Section<'a> {
        Section::new(&self.gamma(i), &self.gamma(i + 1)).expect("lower central terms are normal")
    }

    /// The `e` with `x = g^e` modulo `gamma_{i+1}`, where `g` generates
    /// the cyclic factor `gamma_i / gamma_{i+1}` and `x` lies in `gamma_i`.
    pub fn ratio_in_factor(&self, x: &NormalWord, g: &NormalWord, i: usize) -> Result<u32> {
        let sec = self.gamma_section(i);
        if sec.rank() != 1 {
            return Err(VerifyError::Shape(format!(
                "gamma_{i}/gamma_{} is not of order p",
                i + 1
            )));
        }
        let cx = sec.coordinates(x)?[0];
        let cg = sec.coordinates(g)?[0];
        if cg == 0 {
            return Err(VerifyError::Contradiction(format!(
                "{g} does not generate gamma_{i}/gamma_{}",
                i + 1
            )));
        }
        Ok(cx * inv_mod(cg, self.p()) % self.p())
    }

    /// Elements independent modulo `Phi(G)`.
    pub fn independent_mod_frattini(&self, xs: &[NormalWord]) -> Result<bool> {
        let sec = self.frattini_section();
        let rows = xs
            .iter()
            .map(|x| sec.coordinates(x))
            .collect::<Result<Vec<_>, _>>()?;
        let m = pgroup_core::FpMatrix::from_residue_rows(self.p(), sec.rank(), rows);
        Ok(m.rank() == xs.len())
    }
}
