//! Run configuration: enumeration caps, PRNG seed, and parallelism degree.

use std::num::NonZeroUsize;

use z4codes_core::analysis::AnalysisBudget;

/// Name of the environment variable that overrides the worker count.
pub const THREADS_ENV: &str = "Z4CODES_THREADS";

/// Caps and knobs shared by every command. All caps are positive; reports
/// embed the caps that were in force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Largest code size `|C|` that will be exhaustively enumerated.
    pub enumeration_cap: u128,
    /// Largest dual size `|C_dual|` that will be enumerated for projectivity
    /// and dual-distance questions.
    pub dual_cap: u128,
    /// Largest syndrome graph (in vertices) that will be materialized.
    pub vertex_cap: u128,
    /// Seed for the deterministic PRNG used by property suites.
    pub seed: u64,
    /// Enumeration parallelism degree.
    pub worker_count: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            enumeration_cap: 1 << 24,
            dual_cap: 1 << 20,
            vertex_cap: 1 << 14,
            seed: 0x7a34,
            worker_count: default_workers(),
        }
    }
}

/// Number of available cores, with a floor of one.
pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

/// The worker count requested by the environment, if any.
///
/// Returns `Ok(None)` when the variable is unset, `Err` with a message when
/// it is set to anything but a positive integer.
pub fn workers_from_env() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(format!("{THREADS_ENV} must be a positive integer"))
        }
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(Some(v)),
            _ => Err(format!(
                "{THREADS_ENV} must be a positive integer, found `{raw}`"
            )),
        },
    }
}

impl RunConfig {
    /// A config with the given caps, validating positivity.
    pub fn validate(&self) -> Result<(), String> {
        for (name, value) in [
            ("enumeration cap", self.enumeration_cap),
            ("dual cap", self.dual_cap),
            ("vertex cap", self.vertex_cap),
        ] {
            if value == 0 {
                return Err(format!("{name} must be positive"));
            }
        }
        if self.worker_count == 0 {
            return Err("worker count must be positive".to_string());
        }
        Ok(())
    }

    /// The analysis budget corresponding to these caps.
    pub fn analysis_budget(&self) -> AnalysisBudget {
        AnalysisBudget {
            enumeration_cap: self.enumeration_cap,
            dual_cap: self.dual_cap,
            ..AnalysisBudget::default()
        }
    }
}
