//! Size caps on the expensive analyses.

use gamma_core::invariants::cheeger;

use crate::error::CliError;

pub const ENV_VAR: &str = "GAMMA_MAX_N";

/// Largest `n` the `b(G)` enumeration can address (one sign bit per vertex
/// but the first, in a `u64`).
pub const B_ORACLE_HARD_MAX_N: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub lp: usize,
    pub cheeger: usize,
    pub b_oracle: usize,
    pub spectral: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { lp: 60, cheeger: cheeger::DEFAULT_MAX_N, b_oracle: 12, spectral: 2000 }
    }
}

impl Caps {
    /// Every cap set to `max_n`, except where the implementation has a hard
    /// limit.
    pub fn overridden(max_n: usize) -> Self {
        Caps {
            lp: max_n,
            cheeger: max_n.min(cheeger::HARD_MAX_N),
            b_oracle: max_n.min(B_ORACLE_HARD_MAX_N),
            spectral: max_n,
        }
    }

    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var(ENV_VAR) {
            Err(std::env::VarError::NotPresent) => Ok(Caps::default()),
            Ok(v) => v
                .trim()
                .parse()
                .map(Caps::overridden)
                .map_err(|_| CliError::Input(format!("{ENV_VAR} must be a non-negative integer, got {v:?}"))),
            Err(_) => Err(CliError::Input(format!("{ENV_VAR} is not valid unicode"))),
        }
    }
}

pub fn check(what: &'static str, n: usize, max: usize) -> Result<(), CliError> {
    if n > max {
        Err(CliError::Cap { what, n, max })
    } else {
        Ok(())
    }
}
