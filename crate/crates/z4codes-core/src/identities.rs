//! Exact checkers for the weight-sum identities satisfied by every
//! generator matrix over `Z4`.
//!
//! Writing `k` for the number of rows of `G`, `n` for its length, and
//! `x . c` for the inner product of a coefficient vector with a column,
//! the suite verifies:
//!
//! * **unit-column-sum** — for every nonzero column `c`:
//!   `sum over x in Z4^k of w_L(x . c) = 4^k`.
//! * **total-weight-sum** — when no column of `G` is zero:
//!   `sum over x in Z4^k of w_L(x G) = 4^k * n`, and equivalently
//!   `sum over codewords c of w_L(c) = |C| * n`.
//! * **even-subgroup-column-sum** — for every column `c`:
//!   `sum over x in (2Z4)^k of w_L(x . c)` equals `2^k` when `c` contains
//!   a unit and `0` when it does not.
//! * **coset-column-sum** — for every unit-containing column `c` and every
//!   nonzero coset `r + (2Z4)^k`: the same sum over the coset is `2^k`.
//! * **even-subgroup-code-sum** — when every column contains a unit:
//!   `sum over x in (2Z4)^k of w_L(x G) = 2^k * n`.
//! * **coset-code-sum** — same hypothesis, over every coset of `(2Z4)^k`:
//!   `sum over x in r + (2Z4)^k of w_L(x G) = 2^k * n`.
//! * **two-weight-quadratic** — for a projective two-weight code with
//!   weights `w1 < w2`:
//!   `n(2n+1) - (w1 + w2) 2n + 2 w1 w2 (1 - 1/|C|) = 0`, evaluated exactly
//!   after multiplying through by `|C|`.
//!
//! Checks whose hypotheses fail are reported as skipped with the reason;
//! a failed check carries a concrete witness. Identities that hold for all
//! matrices are hard invariants: a failure indicates a defect in the
//! arithmetic kernel.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::analysis::is_projective;
use crate::error::{Error, Result};
use crate::matrix::GeneratorMatrix;
use crate::z4::Z4;

/// Resource limits for [`identity_suite`]. The suite enumerates all `4^k`
/// coefficient vectors, so `max_rows` keeps it at desk scale.
#[derive(Clone, Debug)]
pub struct IdentityBudget {
    /// Largest number of matrix rows accepted.
    pub max_rows: usize,
    /// Dual enumeration cap for the projectivity gate of the quadratic
    /// identity.
    pub dual_cap: u128,
}

impl Default for IdentityBudget {
    fn default() -> Self {
        IdentityBudget {
            max_rows: 4,
            dual_cap: 1 << 16,
        }
    }
}

/// The identities the suite knows about, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    UnitColumnSum,
    TotalWeightSum,
    EvenSubgroupColumnSum,
    CosetColumnSum,
    EvenSubgroupCodeSum,
    CosetCodeSum,
    TwoWeightQuadratic,
}

impl IdentityId {
    /// All identities in report order.
    pub const ALL: [IdentityId; 7] = [
        IdentityId::UnitColumnSum,
        IdentityId::TotalWeightSum,
        IdentityId::EvenSubgroupColumnSum,
        IdentityId::CosetColumnSum,
        IdentityId::EvenSubgroupCodeSum,
        IdentityId::CosetCodeSum,
        IdentityId::TwoWeightQuadratic,
    ];

    /// Stable kebab-case name, as used in reports.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::UnitColumnSum => "unit-column-sum",
            IdentityId::TotalWeightSum => "total-weight-sum",
            IdentityId::EvenSubgroupColumnSum => "even-subgroup-column-sum",
            IdentityId::CosetColumnSum => "coset-column-sum",
            IdentityId::EvenSubgroupCodeSum => "even-subgroup-code-sum",
            IdentityId::CosetCodeSum => "coset-code-sum",
            IdentityId::TwoWeightQuadratic => "two-weight-quadratic",
        }
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    /// The identity holds on this matrix.
    Passed,
    /// The identity's hypotheses are not met; carries the reason.
    Skipped { reason: String },
    /// The identity is violated; carries a concrete witness.
    Failed { witness: String },
}

impl CheckStatus {
    /// True unless the check failed.
    pub fn is_ok(&self) -> bool {
        !matches!(self, CheckStatus::Failed { .. })
    }
}

/// One named check result.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub id: IdentityId,
    pub status: CheckStatus,
}

/// The outcome of the full suite on one matrix.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    /// Rows of the matrix the suite ran on.
    pub k: usize,
    /// Columns of the matrix.
    pub n: usize,
    /// All checks, in [`IdentityId::ALL`] order.
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    /// True when no check failed (skips are fine).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status.is_ok())
    }

    /// The status of one identity.
    pub fn status(&self, id: IdentityId) -> &CheckStatus {
        &self
            .checks
            .iter()
            .find(|c| c.id == id)
            .expect("all identities present")
            .status
    }
}

/// Runs every identity check against the given matrix.
pub fn identity_suite(g: &GeneratorMatrix, budget: &IdentityBudget) -> Result<IdentityReport> {
    let k = g.k();
    let n = g.n();
    // 16 is a hard ceiling (4^16 coefficient vectors is already far past
    // desk scale); the budget can only tighten it.
    let limit = budget.max_rows.min(16);
    if k > limit {
        return Err(Error::BudgetExceeded {
            what: "identity suite rows",
            required: k as u128,
            limit: limit as u128,
        });
    }

    let columns: Vec<Vec<u8>> = (0..n).map(|j| g.column_digits(j)).collect();
    let has_zero_column = columns.iter().any(|c| c.iter().all(|&d| d == 0));
    let all_columns_unit = columns
        .iter()
        .all(|c| c.iter().any(|&d| d & 1 == 1));

    let checks = alloc::vec![
        IdentityCheck {
            id: IdentityId::UnitColumnSum,
            status: check_unit_column_sum(&columns, k),
        },
        IdentityCheck {
            id: IdentityId::TotalWeightSum,
            status: check_total_weight_sum(g, has_zero_column),
        },
        IdentityCheck {
            id: IdentityId::EvenSubgroupColumnSum,
            status: check_even_subgroup_column_sum(&columns, k),
        },
        IdentityCheck {
            id: IdentityId::CosetColumnSum,
            status: check_coset_column_sum(&columns, k),
        },
        IdentityCheck {
            id: IdentityId::EvenSubgroupCodeSum,
            status: check_even_subgroup_code_sum(g, all_columns_unit),
        },
        IdentityCheck {
            id: IdentityId::CosetCodeSum,
            status: check_coset_code_sum(g, all_columns_unit),
        },
        IdentityCheck {
            id: IdentityId::TwoWeightQuadratic,
            status: check_two_weight_quadratic(g, budget),
        },
    ];
    Ok(IdentityReport { k, n, checks })
}

/// Inner product of a digit coefficient vector with a digit column, mod 4.
fn dot(coeffs: &[u8], column: &[u8]) -> u8 {
    coeffs
        .iter()
        .zip(column)
        .map(|(&a, &b)| (a as u32) * (b as u32))
        .sum::<u32>() as u8
        & 3
}

fn lee(d: u8) -> u64 {
    [0, 1, 2, 1][(d & 3) as usize]
}

/// Visits every coefficient vector `r + 2y` for `y` over `{0,1}^k`.
fn for_each_even_offset(k: usize, r: &[u8], mut visit: impl FnMut(&[u8])) {
    let mut coeffs = alloc::vec![0u8; k];
    for y in 0..(1u64 << k) {
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = (r[i] + 2 * (((y >> i) & 1) as u8)) & 3;
        }
        visit(&coeffs);
    }
}

/// Visits every coefficient vector in `Z4^k`.
fn for_each_coefficient(k: usize, mut visit: impl FnMut(&[u8])) {
    let mut coeffs = alloc::vec![0u8; k];
    for x in 0..(1u64 << (2 * k)) {
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = ((x >> (2 * i)) & 3) as u8;
        }
        visit(&coeffs);
    }
}

fn check_unit_column_sum(columns: &[Vec<u8>], k: usize) -> CheckStatus {
    let expected = 1u64 << (2 * k);
    let mut any = false;
    for (j, col) in columns.iter().enumerate() {
        if col.iter().all(|&d| d == 0) {
            continue;
        }
        any = true;
        let mut sum = 0u64;
        for_each_coefficient(k, |x| sum += lee(dot(x, col)));
        if sum != expected {
            return CheckStatus::Failed {
                witness: format!("column {j} = {col:?}: sum {sum}, expected {expected}"),
            };
        }
    }
    if any {
        CheckStatus::Passed
    } else {
        CheckStatus::Skipped {
            reason: String::from("no nonzero columns"),
        }
    }
}

fn check_total_weight_sum(g: &GeneratorMatrix, has_zero_column: bool) -> CheckStatus {
    if has_zero_column {
        return CheckStatus::Skipped {
            reason: String::from("matrix has a zero column"),
        };
    }
    let k = g.k();
    let n = g.n() as u128;
    // Coefficient-space form: sum over all x of w_L(x G) = 4^k * n.
    let mut sum = 0u128;
    for_each_coefficient(k, |x| {
        let coeffs: Vec<Z4> = x.iter().map(|&d| Z4::new(d)).collect();
        sum += g.combine(&coeffs).expect("length matches").lee_weight() as u128;
    });
    let expected = (1u128 << (2 * k)) * n;
    if sum != expected {
        return CheckStatus::Failed {
            witness: format!("coefficient-space weight sum {sum}, expected {expected}"),
        };
    }
    // Codeword form: sum over distinct codewords = |C| * n.
    let form = match g.standardize() {
        Ok(form) => form,
        Err(_) => unreachable!("matrix without zero columns is nonzero"),
    };
    let mut code_sum = 0u128;
    for word in form.codewords() {
        code_sum += word.lee_weight() as u128;
    }
    let code_expected = form.size() * n;
    if code_sum != code_expected {
        return CheckStatus::Failed {
            witness: format!("codeword weight sum {code_sum}, expected {code_expected}"),
        };
    }
    CheckStatus::Passed
}

fn check_even_subgroup_column_sum(columns: &[Vec<u8>], k: usize) -> CheckStatus {
    let zero = alloc::vec![0u8; k];
    for (j, col) in columns.iter().enumerate() {
        let has_unit = col.iter().any(|&d| d & 1 == 1);
        let expected = if has_unit { 1u64 << k } else { 0 };
        let mut sum = 0u64;
        for_each_even_offset(k, &zero, |x| sum += lee(dot(x, col)));
        if sum != expected {
            return CheckStatus::Failed {
                witness: format!("column {j} = {col:?}: sum {sum}, expected {expected}"),
            };
        }
    }
    CheckStatus::Passed
}

fn check_coset_column_sum(columns: &[Vec<u8>], k: usize) -> CheckStatus {
    let expected = 1u64 << k;
    let mut any = false;
    for (j, col) in columns.iter().enumerate() {
        if !col.iter().any(|&d| d & 1 == 1) {
            continue;
        }
        any = true;
        // Nonzero cosets of (2Z4)^k are indexed by r in {0,1}^k - {0}.
        let mut r = alloc::vec![0u8; k];
        for rep in 1..(1u64 << k) {
            for (i, ri) in r.iter_mut().enumerate() {
                *ri = ((rep >> i) & 1) as u8;
            }
            let mut sum = 0u64;
            for_each_even_offset(k, &r, |x| sum += lee(dot(x, col)));
            if sum != expected {
                return CheckStatus::Failed {
                    witness: format!(
                        "column {j} = {col:?}, coset {r:?}: sum {sum}, expected {expected}"
                    ),
                };
            }
        }
    }
    if any {
        CheckStatus::Passed
    } else {
        CheckStatus::Skipped {
            reason: String::from("no column contains a unit"),
        }
    }
}

fn check_even_subgroup_code_sum(g: &GeneratorMatrix, all_columns_unit: bool) -> CheckStatus {
    if !all_columns_unit {
        return CheckStatus::Skipped {
            reason: String::from("some column lies in (2Z4)^k"),
        };
    }
    let k = g.k();
    let zero = alloc::vec![0u8; k];
    let mut sum = 0u128;
    for_each_even_offset(k, &zero, |x| {
        let coeffs: Vec<Z4> = x.iter().map(|&d| Z4::new(d)).collect();
        sum += g.combine(&coeffs).expect("length matches").lee_weight() as u128;
    });
    let expected = (1u128 << k) * g.n() as u128;
    if sum == expected {
        CheckStatus::Passed
    } else {
        CheckStatus::Failed {
            witness: format!("even-subgroup weight sum {sum}, expected {expected}"),
        }
    }
}

fn check_coset_code_sum(g: &GeneratorMatrix, all_columns_unit: bool) -> CheckStatus {
    if !all_columns_unit {
        return CheckStatus::Skipped {
            reason: String::from("some column lies in (2Z4)^k"),
        };
    }
    let k = g.k();
    let expected = (1u128 << k) * g.n() as u128;
    let mut r = alloc::vec![0u8; k];
    for rep in 0..(1u64 << k) {
        for (i, ri) in r.iter_mut().enumerate() {
            *ri = ((rep >> i) & 1) as u8;
        }
        let mut sum = 0u128;
        for_each_even_offset(k, &r, |x| {
            let coeffs: Vec<Z4> = x.iter().map(|&d| Z4::new(d)).collect();
            sum += g.combine(&coeffs).expect("length matches").lee_weight() as u128;
        });
        if sum != expected {
            return CheckStatus::Failed {
                witness: format!("coset {r:?}: weight sum {sum}, expected {expected}"),
            };
        }
    }
    CheckStatus::Passed
}

fn check_two_weight_quadratic(g: &GeneratorMatrix, budget: &IdentityBudget) -> CheckStatus {
    let form = match g.standardize() {
        Ok(form) => form,
        Err(Error::DegenerateCode) => {
            return CheckStatus::Skipped {
                reason: String::from("zero matrix generates the trivial code"),
            }
        }
        Err(e) => {
            return CheckStatus::Skipped {
                reason: format!("standard form unavailable: {e}"),
            }
        }
    };
    let distribution = match form.weight_distribution(1 << (2 * form.k())) {
        Ok(d) => d,
        Err(e) => {
            return CheckStatus::Skipped {
                reason: format!("enumeration unavailable: {e}"),
            }
        }
    };
    let weights = distribution.nonzero_weights();
    if weights.len() != 2 {
        return CheckStatus::Skipped {
            reason: format!("code has {} nonzero weights, not 2", weights.len()),
        };
    }
    let projective = match is_projective(&form, budget.dual_cap) {
        Ok(p) => p.projective,
        Err(e) => {
            return CheckStatus::Failed {
                witness: format!("projectivity check errored: {e}"),
            }
        }
    };
    if !projective {
        return CheckStatus::Skipped {
            reason: String::from("code is not projective"),
        };
    }
    let n = form.n() as i128;
    let size = form.size() as i128;
    let (w1, w2) = (weights[0] as i128, weights[1] as i128);
    // n(2n+1) - (w1+w2) 2n + 2 w1 w2 (1 - 1/|C|) = 0, multiplied by |C|.
    let value = size * n * (2 * n + 1) - size * (w1 + w2) * 2 * n + 2 * w1 * w2 * (size - 1);
    if value == 0 {
        CheckStatus::Passed
    } else {
        CheckStatus::Failed {
            witness: format!(
                "quadratic residual {value} for n={n}, |C|={size}, w1={w1}, w2={w2}"
            ),
        }
    }
}
