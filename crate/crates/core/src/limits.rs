//! Resource caps, overridable through the environment.

use crate::error::{Error, Result};

pub const MAX_ENUMERATION_VAR: &str = "PGROUP_MAX_ENUMERATION";
pub const MAX_GENERATORS_VAR: &str = "PGROUP_MAX_GENERATORS";

pub const DEFAULT_MAX_ENUMERATION: u64 = 1 << 22;
pub const DEFAULT_MAX_GENERATORS: usize = 40;

fn env_or<T: std::str::FromStr>(var: &str, default: T) -> T {
    std::env::var(var)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(default)
}

/// Largest subgroup order that may be enumerated element by element.
pub fn max_enumeration() -> u64 {
    env_or(MAX_ENUMERATION_VAR, DEFAULT_MAX_ENUMERATION)
}

/// Largest number of pc generators a p-quotient may produce.
pub fn max_generators() -> usize {
    env_or(MAX_GENERATORS_VAR, DEFAULT_MAX_GENERATORS)
}

/// Fails unless `p^k` elements may be enumerated.
pub fn check_enumeration(p: u32, k: usize) -> Result<()> {
    let cap = max_enumeration();
    let within = (p as u64)
        .checked_pow(k as u32)
        .is_some_and(|order| order <= cap);
    if within {
        Ok(())
    } else {
        Err(Error::EnumerationCap {
            order: format!("{p}^{k}"),
            cap,
            var: MAX_ENUMERATION_VAR,
        })
    }
}
