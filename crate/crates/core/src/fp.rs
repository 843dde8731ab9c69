//! Finite presentations read as pro-p presentations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pcp::is_prime;
use crate::word::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpPresentation {
    pub p: u32,
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
    /// `(w1, w2)` meaning `w1 = w2`.
    pub relations: Vec<(FreeWord, FreeWord)>,
}

impl FpPresentation {
    pub fn new(
        p: u32,
        generators: Vec<String>,
        relators: Vec<FreeWord>,
        relations: Vec<(FreeWord, FreeWord)>,
    ) -> Result<Self> {
        let fp = FpPresentation {
            p,
            generators,
            relators,
            relations,
        };
        fp.validate()?;
        Ok(fp)
    }

    /// No relators at all.
    pub fn free(p: u32, rank: usize) -> Result<Self> {
        let names = (0..rank).map(|i| format!("x{}", i + 1)).collect();
        Self::new(p, names, Vec::new(), Vec::new())
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) || self.p >= 1 << 16 {
            return Err(Error::InvalidArgument(format!("{} is not a supported prime", self.p)));
        }
        let mut seen = std::collections::BTreeSet::new();
        for g in &self.generators {
            if !seen.insert(g.as_str()) {
                return Err(Error::InvalidArgument(format!("generator {g} declared twice")));
            }
        }
        let count = self.generators.len();
        let words = self
            .relators
            .iter()
            .chain(self.relations.iter().flat_map(|(a, b)| [a, b]));
        for w in words {
            w.validate().map_err(Error::InvalidArgument)?;
            if let Some(i) = w.max_generator() {
                if i >= count {
                    return Err(Error::UnknownGenerator { index: i, count });
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Relators followed by every relation `w1 = w2` rewritten as
    /// `w1 * w2^{-1}`.
    pub fn all_relators(&self) -> Vec<FreeWord> {
        self.relators
            .iter()
            .cloned()
            .chain(
                self.relations
                    .iter()
                    .map(|(a, b)| a.clone().mul(b.inverse())),
            )
            .collect()
    }
}
