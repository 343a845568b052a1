//! Deterministic multi-worker codeword enumeration.
//!
//! The enumeration order of a standard-form code supports random access,
//! so the index space `0..|C|` splits into contiguous ranges that workers
//! scan independently; per-range weight distributions merge by addition,
//! which is order-independent, so the result is bit-identical for every
//! worker count.

use z4codes_core::analysis::{self, AnalysisBudget, CodeReport};
use z4codes_core::{Error, StandardForm, WeightDistribution};

use crate::config::RunConfig;

/// Computes the full Lee weight distribution, splitting the enumeration
/// across up to `workers` threads.
pub fn weight_distribution_parallel(form: &StandardForm, workers: usize) -> WeightDistribution {
    let size = form.size();
    let workers = (workers.max(1) as u128).min(size).max(1);
    if workers == 1 {
        return form.weight_distribution_range(0, size);
    }
    let chunk = size / workers;
    let remainder = size % workers;
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        let mut start = 0u128;
        for i in 0..workers {
            let end = start + chunk + u128::from(i < remainder);
            handles.push(scope.spawn(move || form.weight_distribution_range(start, end)));
            start = end;
        }
        debug_assert_eq!(start, size);
        let mut merged = WeightDistribution::new();
        for handle in handles {
            merged.merge(&handle.join().expect("enumeration worker panicked"));
        }
        merged
    })
}

/// Full analysis with the enumeration parallelized per the config.
///
/// `gray_linearity` requests the (more expensive) Gray-image linearity
/// check; `dual_cap_override` replaces the configured dual enumeration cap.
pub fn analyze_parallel(
    form: &StandardForm,
    config: &RunConfig,
    gray_linearity: bool,
    dual_cap_override: Option<u128>,
) -> z4codes_core::Result<CodeReport> {
    let mut budget: AnalysisBudget = config.analysis_budget();
    budget.gray_linearity = gray_linearity;
    if let Some(cap) = dual_cap_override {
        budget.dual_cap = cap;
    }
    let size = form.size();
    if size > budget.enumeration_cap {
        return Err(Error::BudgetExceeded {
            what: "codeword enumeration",
            required: size,
            limit: budget.enumeration_cap,
        });
    }
    let distribution = weight_distribution_parallel(form, config.worker_count);
    analysis::analyze_with_distribution(form, distribution, &budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use z4codes_core::constructions::build_family;

    fn form_under_test() -> StandardForm {
        build_family(2, 1, 2, 1 << 20)
            .unwrap()
            .standardize()
            .unwrap()
    }

    #[test]
    fn every_worker_count_gives_the_same_distribution() {
        let form = form_under_test();
        let reference = form.weight_distribution(1 << 20).unwrap();
        for workers in [1usize, 2, 3, 4, 7, 64, 1000] {
            assert_eq!(
                weight_distribution_parallel(&form, workers),
                reference,
                "workers = {workers}"
            );
        }
    }

    #[test]
    fn more_workers_than_codewords_is_fine() {
        let form = z4codes_core::GeneratorMatrix::from_digit_rows(&[vec![1, 1]])
            .unwrap()
            .standardize()
            .unwrap();
        let distribution = weight_distribution_parallel(&form, 64);
        assert_eq!(distribution.total(), 4);
    }

    #[test]
    fn parallel_analysis_matches_serial() {
        let form = form_under_test();
        let config = RunConfig {
            worker_count: 4,
            ..RunConfig::default()
        };
        let parallel = analyze_parallel(&form, &config, false, None).unwrap();
        let serial = analysis::analyze(&form, &config.analysis_budget()).unwrap();
        assert_eq!(parallel.distribution, serial.distribution);
        assert_eq!(parallel.min_distance, serial.min_distance);
        assert_eq!(parallel.family, serial.family);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let form = form_under_test();
        let config = RunConfig {
            enumeration_cap: 16,
            ..RunConfig::default()
        };
        assert!(matches!(
            analyze_parallel(&form, &config, false, None),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
