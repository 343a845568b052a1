//! Code-level analysis: the Plotkin-type bound, projectivity, the
//! classification of Plotkin-optimal two-weight projective codes, binary
//! two-weight parameter matching for Gray images, and Gray-image linearity.
//!
//! The centerpiece is [`analyze`], which produces a [`CodeReport`] with
//! every derived quantity cross-checked:
//!
//! * the minimum distance comes from the full weight distribution;
//! * projectivity is decided by the standard-form column criterion (every
//!   column contains a unit, and no column repeats or appears negated) and,
//!   whenever the dual is small enough to enumerate, cross-checked against
//!   `d_L(dual) >= 3` — a disagreement is reported as
//!   [`Error::TheoremViolation`], never papered over;
//! * for two-weight projective codes the three equivalent optimality
//!   conditions (`d_L` attains the bound, the smaller weight equals `n`,
//!   the larger weight equals `|C|/2`) are all evaluated and must agree;
//! * Plotkin-optimal two-weight projective codes are matched against the
//!   unique parameter family `n = w1 = 2^{2k1+k2-1} - 2^{2k1+k2-t-1}`,
//!   `w2 = 2^{2k1+k2-1}`, with counts `2^{2k1+k2} - 2^t` and `2^t - 1`,
//!   recovering `t` exactly from the count of the larger weight;
//! * the Gray image of a matched code is checked against the classical
//!   binary two-weight family with parameters `(q, l, m) = (2, 2k1+k2,
//!   2k1+k2-t)`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;
use alloc::{vec, string::String};

use crate::code::{Code, WeightDistribution};
use crate::error::{Error, Result};
use crate::matrix::StandardForm;
use crate::vector::Z4Vector;

/// How projectivity was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectivityMethod {
    /// Standard-form column criterion only (dual too large to enumerate).
    ColumnCriterion,
    /// Dual minimum-distance enumeration only.
    DualEnumeration,
    /// Column criterion cross-checked against dual enumeration.
    Both,
}

impl ProjectivityMethod {
    /// Stable kebab-case name, as used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            ProjectivityMethod::ColumnCriterion => "column-criterion",
            ProjectivityMethod::DualEnumeration => "dual-enumeration",
            ProjectivityMethod::Both => "both",
        }
    }
}

/// Outcome of a projectivity decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projectivity {
    /// Whether the code is projective (`d_L(dual) >= 3`).
    pub projective: bool,
    /// How the answer was obtained.
    pub method: ProjectivityMethod,
    /// True when the dual is the zero code, making the distance condition
    /// vacuous (the dual minimum distance is `+infinity` by convention).
    pub dual_is_trivial: bool,
}

/// Coarse weight-class of a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightClass {
    /// Exactly one nonzero weight.
    OneWeight,
    /// Exactly two nonzero weights.
    TwoWeight,
    /// Three or more nonzero weights.
    Other,
}

impl WeightClass {
    /// Stable kebab-case name, as used in reports.
    pub fn as_str(self) -> &'static str {
        match self {
            WeightClass::OneWeight => "one-weight",
            WeightClass::TwoWeight => "two-weight",
            WeightClass::Other => "other",
        }
    }
}

/// The exact parameters of the Plotkin-optimal two-weight projective family
/// of type `4^{k1} 2^{k2}` with free parameter `t` in `1..=k1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    /// The family parameter, recovered from `A_{w2} = 2^t - 1`.
    pub t: usize,
    /// Code length (equals the minimum distance and the smaller weight).
    pub n: u128,
    /// The smaller nonzero weight, `2^{2k1+k2-1} - 2^{2k1+k2-t-1}`.
    pub w1: u128,
    /// The larger nonzero weight, `2^{2k1+k2-1} = |C| / 2`.
    pub w2: u128,
    /// Number of codewords of weight `w1`: `2^{2k1+k2} - 2^t`.
    pub count_w1: u128,
    /// Number of codewords of weight `w2`: `2^t - 1`.
    pub count_w2: u128,
}

impl FamilyParams {
    /// The closed-form parameters for type `4^{k1} 2^{k2}` and parameter
    /// `t`; fails when `t` is outside `1..=k1` or the exponents overflow.
    pub fn for_type(k1: usize, k2: usize, t: usize) -> Result<FamilyParams> {
        if k1 == 0 || t == 0 || t > k1 {
            return Err(Error::InvalidParameter {
                what: format!("family parameter t={t} must satisfy 1 <= t <= k1={k1}"),
            });
        }
        let e = 2 * k1 + k2;
        if e > 120 {
            return Err(Error::TypeTooLarge { k1, k2 });
        }
        let pow = |b: usize| 1u128 << b;
        let n = pow(e - 1) - pow(e - t - 1);
        Ok(FamilyParams {
            t,
            n,
            w1: n,
            w2: pow(e - 1),
            count_w1: pow(e) - pow(t),
            count_w2: pow(t) - 1,
        })
    }
}

/// All family rows realizable for a given type: one per `t` in `1..=k1`.
/// Types with `2*k1 + k2 < 2` carry no codes of interest and are rejected.
pub fn enumerate_family_parameters(k1: usize, k2: usize) -> Result<Vec<FamilyParams>> {
    if 2 * k1 + k2 < 2 {
        return Err(Error::InvalidParameter {
            what: format!("type 4^{k1} 2^{k2} is too small (need 2*k1 + k2 >= 2)"),
        });
    }
    (1..=k1).map(|t| FamilyParams::for_type(k1, k2, t)).collect()
}

/// The binary two-weight family parameters matched by the Gray image of a
/// Plotkin-optimal two-weight projective `Z4` code: base `q = 2`, ambient
/// exponent `l = 2k1 + k2`, and `m = l - t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Su1Match {
    pub q: u32,
    pub l: u32,
    pub m: u32,
}

/// The Plotkin-type bound `floor(|C| * n / (|C| - 1))` on the minimum Lee
/// distance of a code with `|C| >= 2` codewords and length `n`.
pub fn plotkin_bound(n: usize, size: u128) -> Result<u64> {
    if size < 2 {
        return Err(Error::InvalidParameter {
            what: String::from("Plotkin bound needs at least two codewords"),
        });
    }
    Ok((size * n as u128 / (size - 1)) as u64)
}

/// The maximum length of a projective code of type `4^{k1} 2^{k2}`:
/// `2^{2k1+k2-1} - 2^{k1+k2-1}` (the number of unit-containing columns up
/// to sign).
pub fn length_bound(k1: usize, k2: usize) -> Result<u128> {
    if k1 + k2 == 0 {
        return Err(Error::InvalidParameter {
            what: String::from("length bound needs k1 + k2 >= 1"),
        });
    }
    if 2 * k1 + k2 > 120 {
        return Err(Error::TypeTooLarge { k1, k2 });
    }
    Ok((1u128 << (2 * k1 + k2 - 1)) - (1u128 << (k1 + k2 - 1)))
}

/// Decides projectivity by the standard-form column criterion, cross-checked
/// against dual enumeration whenever `|dual| <= dual_cap`.
///
/// Column criterion: the code is projective exactly when every column of
/// the standard-form generator contains a unit and no column is repeated or
/// appears alongside its negation.
pub fn is_projective(form: &StandardForm, dual_cap: u128) -> Result<Projectivity> {
    let by_columns = column_criterion(form);

    let (method, dual_is_trivial, by_dual) = match form.dual() {
        Ok(Code::Trivial { .. }) => (ProjectivityMethod::Both, true, Some(true)),
        Ok(Code::Nontrivial(dual)) if dual.size() <= dual_cap => {
            let d = dual.min_lee_distance(dual_cap)?;
            (ProjectivityMethod::Both, false, Some(d >= 3))
        }
        Ok(Code::Nontrivial(_)) => (ProjectivityMethod::ColumnCriterion, false, None),
        Err(Error::TypeTooLarge { .. }) => (ProjectivityMethod::ColumnCriterion, false, None),
        Err(e) => return Err(e),
    };

    if let Some(by_dual) = by_dual {
        if by_dual != by_columns {
            return Err(Error::TheoremViolation {
                what: format!(
                    "projectivity criteria disagree: column criterion says {by_columns}, \
                     dual minimum distance says {by_dual}"
                ),
            });
        }
    }

    Ok(Projectivity {
        projective: by_columns,
        method,
        dual_is_trivial,
    })
}

fn column_criterion(form: &StandardForm) -> bool {
    let matrix = form.matrix();
    let mut seen: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for j in 0..form.n() {
        let col = matrix.column_digits(j);
        if !col.iter().any(|&d| d & 1 == 1) {
            return false;
        }
        *seen.entry(col).or_insert(0) += 1;
    }
    for (col, &count) in &seen {
        if count > 1 {
            return false;
        }
        let neg: Vec<u8> = col.iter().map(|&d| (4 - d) & 3).collect();
        debug_assert_ne!(&neg, col, "unit columns are never self-negated");
        if seen.contains_key(&neg) {
            return false;
        }
    }
    true
}

/// Searches for a nonzero dual codeword of Lee weight at most `max_weight`,
/// trying weights in increasing order; returns the first hit (in original
/// coordinates) or `None` if no dual word that light exists.
///
/// This is a support-enumeration search, exponential in `max_weight` but
/// independent of `|dual|`, so it stays cheap even when the dual is far too
/// large to enumerate.
pub fn search_low_weight_dual_word(
    form: &StandardForm,
    max_weight: u64,
) -> Option<(u64, Z4Vector)> {
    let rows: Vec<Vec<u8>> = form.matrix().rows().iter().map(|r| r.digits()).collect();
    let n = form.n();
    for w in 1..=max_weight {
        let mut support: Vec<(usize, u8)> = Vec::new();
        if let Some(word) = place_support(&rows, n, w, 0, &mut support) {
            // Translate back to the original column order.
            let mut digits = vec![0u8; n];
            for (p, &orig) in form.standard_to_original().iter().enumerate() {
                digits[orig] = word.get(p).value();
            }
            return Some((w, Z4Vector::from_digits(&digits)));
        }
    }
    None
}

fn place_support(
    rows: &[Vec<u8>],
    n: usize,
    remaining: u64,
    start: usize,
    support: &mut Vec<(usize, u8)>,
) -> Option<Z4Vector> {
    if remaining == 0 {
        let orthogonal = rows.iter().all(|row| {
            support
                .iter()
                .map(|&(pos, val)| (row[pos] * val) as u32)
                .sum::<u32>()
                % 4
                == 0
        });
        if !orthogonal {
            return None;
        }
        let mut digits = vec![0u8; n];
        for &(pos, val) in support.iter() {
            digits[pos] = val;
        }
        return Some(Z4Vector::from_digits(&digits));
    }
    for pos in start..n {
        for (val, cost) in [(1u8, 1u64), (3, 1), (2, 2)] {
            if cost <= remaining {
                support.push((pos, val));
                if let Some(word) = place_support(rows, n, remaining - cost, pos + 1, support) {
                    return Some(word);
                }
                support.pop();
            }
        }
    }
    None
}

/// Tests whether the Gray image of the code is linear (closed under xor).
/// Enumerates the code once and checks closure over all pairs; refuses to
/// run beyond `cap` codewords.
pub fn gray_linearity(form: &StandardForm, cap: u128) -> Result<bool> {
    let size = form.size();
    if size > cap {
        return Err(Error::BudgetExceeded {
            what: "Gray linearity set size",
            required: size,
            limit: cap,
        });
    }
    let images: Vec<_> = form.codewords().map(|w| w.gray_map()).collect();
    let set: BTreeSet<_> = images.iter().cloned().collect();
    for (i, a) in images.iter().enumerate() {
        for b in &images[i + 1..] {
            if !set.contains(&a.xor(b)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Resource caps for [`analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisBudget {
    /// Largest code that will be fully enumerated.
    pub enumeration_cap: u128,
    /// Largest dual that will be enumerated for the projectivity cross-check.
    pub dual_cap: u128,
    /// Largest code whose Gray image is tested for linearity.
    pub gray_cap: u128,
    /// Whether to run the (quadratic) Gray linearity test at all.
    pub gray_linearity: bool,
}

impl Default for AnalysisBudget {
    fn default() -> Self {
        AnalysisBudget {
            enumeration_cap: 1 << 24,
            dual_cap: 1 << 20,
            gray_cap: 1 << 12,
            gray_linearity: false,
        }
    }
}

/// Everything [`analyze`] derives about one code.
#[derive(Clone, Debug)]
pub struct CodeReport {
    /// Code length.
    pub n: usize,
    /// Number of order-four generator rows.
    pub k1: usize,
    /// Number of order-two generator rows.
    pub k2: usize,
    /// `4^{k1} * 2^{k2}`.
    pub size: u128,
    /// Minimum Lee distance.
    pub min_distance: u64,
    /// Full Lee weight distribution (including the zero word).
    pub distribution: WeightDistribution,
    /// `floor(|C| n / (|C| - 1))`.
    pub plotkin_bound: u64,
    /// Whether `min_distance` attains the bound.
    pub plotkin_optimal: bool,
    /// Whether the code is projective.
    pub projective: bool,
    /// How projectivity was established.
    pub projective_method: ProjectivityMethod,
    /// True when the dual is `{0}` and the projectivity condition is vacuous.
    pub dual_is_trivial: bool,
    /// One-weight / two-weight / other.
    pub weight_class: WeightClass,
    /// The distinct nonzero weights, ascending.
    pub weights: Vec<u64>,
    /// For Plotkin-optimal two-weight projective codes: the matched family
    /// row (always present for such codes — their parameters are forced).
    pub family: Option<FamilyParams>,
    /// The binary two-weight family matched by the Gray image, when `family`
    /// is present.
    pub su1: Option<Su1Match>,
    /// Whether the Gray image is linear, when the test was requested and
    /// affordable.
    pub gray_linear: Option<bool>,
}

/// Analyzes a standard-form code, enumerating its weight distribution.
pub fn analyze(form: &StandardForm, budget: &AnalysisBudget) -> Result<CodeReport> {
    let distribution = form.weight_distribution(budget.enumeration_cap)?;
    analyze_with_distribution(form, distribution, budget)
}

/// Like [`analyze`], but takes a precomputed weight distribution (e.g. from
/// a multi-worker enumeration). The distribution must account for exactly
/// `|C|` codewords.
pub fn analyze_with_distribution(
    form: &StandardForm,
    distribution: WeightDistribution,
    budget: &AnalysisBudget,
) -> Result<CodeReport> {
    let size = form.size();
    if distribution.total() != size {
        return Err(Error::InvalidParameter {
            what: format!(
                "distribution covers {} words but the code has {}",
                distribution.total(),
                size
            ),
        });
    }
    let n = form.n();
    let min_distance = distribution
        .min_nonzero_weight()
        .ok_or(Error::DegenerateCode)?;
    let bound = plotkin_bound(n, size)?;
    let plotkin_optimal = min_distance == bound;
    let projectivity = is_projective(form, budget.dual_cap)?;
    let weights = distribution.nonzero_weights();

    let (weight_class, family) = classify(
        form,
        &distribution,
        &weights,
        plotkin_optimal,
        projectivity.projective,
    )?;
    let su1 = match &family {
        Some(params) => Some(su1_match(params, form.k1(), form.k2())?),
        None => None,
    };
    let gray_linear = if budget.gray_linearity && size <= budget.gray_cap {
        Some(gray_linearity(form, budget.gray_cap)?)
    } else {
        None
    };

    Ok(CodeReport {
        n,
        k1: form.k1(),
        k2: form.k2(),
        size,
        min_distance,
        distribution,
        plotkin_bound: bound,
        plotkin_optimal,
        projective: projectivity.projective,
        projective_method: projectivity.method,
        dual_is_trivial: projectivity.dual_is_trivial,
        weight_class,
        weights,
        family,
        su1,
        gray_linear,
    })
}

/// Determines the weight class, enforces the optimality equivalences for
/// two-weight projective codes, and matches optimal codes to the family.
fn classify(
    form: &StandardForm,
    distribution: &WeightDistribution,
    weights: &[u64],
    plotkin_optimal: bool,
    projective: bool,
) -> Result<(WeightClass, Option<FamilyParams>)> {
    let class = match weights.len() {
        1 => WeightClass::OneWeight,
        2 => WeightClass::TwoWeight,
        _ => WeightClass::Other,
    };
    if class != WeightClass::TwoWeight || !projective {
        return Ok((class, None));
    }

    let (w1, w2) = (weights[0] as u128, weights[1] as u128);
    let n = form.n() as u128;
    let size = form.size();
    // For a two-weight projective code the following are equivalent:
    // attaining the Plotkin-type bound, w1 = n, and w2 = |C| / 2.
    let by_w1 = w1 == n;
    let by_w2 = 2 * w2 == size;
    if by_w1 != plotkin_optimal || by_w2 != plotkin_optimal {
        return Err(Error::TheoremViolation {
            what: format!(
                "optimality equivalences disagree: bound attained = {plotkin_optimal}, \
                 w1 = n is {by_w1}, 2*w2 = |C| is {by_w2}"
            ),
        });
    }
    if !plotkin_optimal {
        return Ok((class, None));
    }

    // Parameters are forced: A_{w2} = 2^t - 1 recovers t exactly.
    let count_w2 = distribution.count(weights[1]);
    let t = exact_log2(count_w2 + 1).ok_or_else(|| Error::TheoremViolation {
        what: format!(
            "count {count_w2} of the larger weight is not of the form 2^t - 1"
        ),
    })?;
    let params =
        FamilyParams::for_type(form.k1(), form.k2(), t).map_err(|_| Error::TheoremViolation {
            what: format!(
                "recovered family parameter t={t} is out of range for type 4^{} 2^{}",
                form.k1(),
                form.k2()
            ),
        })?;
    let observed = [
        ("n", n),
        ("w1", w1),
        ("w2", w2),
        ("count of w1", distribution.count(weights[0])),
        ("count of w2", count_w2),
    ];
    let predicted = [
        ("n", params.n),
        ("w1", params.w1),
        ("w2", params.w2),
        ("count of w1", params.count_w1),
        ("count of w2", params.count_w2),
    ];
    for ((label, got), (_, want)) in observed.iter().zip(&predicted) {
        if got != want {
            return Err(Error::TheoremViolation {
                what: format!("family mismatch at {label}: observed {got}, forced value {want}"),
            });
        }
    }
    Ok((class, Some(params)))
}

/// Verifies that the Gray image of a matched family code has exactly the
/// parameters of the binary two-weight family `(q, l, m) = (2, 2k1+k2,
/// 2k1+k2-t)` — length `2^l - 2^m`, weights `2^{l-1} - 2^{m-1}` and
/// `2^{l-1}`, counts `2^l - 2^{l-m}` and `2^{l-m} - 1`.
fn su1_match(params: &FamilyParams, k1: usize, k2: usize) -> Result<Su1Match> {
    let l = (2 * k1 + k2) as u32;
    let m = l - params.t as u32;
    debug_assert!(m >= 1);
    let pow = |b: u32| 1u128 << b;
    let checks = [
        ("Gray length", 2 * params.n, pow(l) - pow(m)),
        ("smaller weight", params.w1, pow(l - 1) - pow(m - 1)),
        ("larger weight", params.w2, pow(l - 1)),
        ("smaller-weight count", params.count_w1, pow(l) - pow(l - m)),
        ("larger-weight count", params.count_w2, pow(l - m) - 1),
    ];
    for (label, got, want) in checks {
        if got != want {
            return Err(Error::TheoremViolation {
                what: format!(
                    "binary two-weight family mismatch at {label}: {got} vs {want} \
                     for (q, l, m) = (2, {l}, {m})"
                ),
            });
        }
    }
    Ok(Su1Match { q: 2, l, m })
}

fn exact_log2(x: u128) -> Option<usize> {
    x.is_power_of_two().then(|| x.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::GeneratorMatrix;

    fn standard(rows: &[Vec<u8>]) -> StandardForm {
        GeneratorMatrix::from_digit_rows(rows)
            .unwrap()
            .standardize()
            .unwrap()
    }

    fn y2() -> StandardForm {
        standard(&[vec![1, 1, 1, 1, 0, 2], vec![0, 1, 2, 3, 1, 1]])
    }

    #[test]
    fn plotkin_bound_examples() {
        assert_eq!(plotkin_bound(14, 64).unwrap(), 14);
        assert_eq!(plotkin_bound(6, 16).unwrap(), 6);
        assert_eq!(plotkin_bound(1, 4).unwrap(), 1);
        assert_eq!(plotkin_bound(3, 4).unwrap(), 4);
        assert!(plotkin_bound(5, 1).is_err());
    }

    #[test]
    fn length_bound_examples() {
        assert_eq!(length_bound(2, 0).unwrap(), 6);
        assert_eq!(length_bound(0, 1).unwrap(), 0);
        assert_eq!(length_bound(3, 0).unwrap(), 28);
        assert_eq!(length_bound(1, 1).unwrap(), 2);
        assert!(length_bound(0, 0).is_err());
    }

    #[test]
    fn family_parameters_for_small_types() {
        let p = FamilyParams::for_type(2, 1, 1).unwrap();
        assert_eq!((p.n, p.w1, p.w2, p.count_w1, p.count_w2), (8, 8, 16, 30, 1));
        let p = FamilyParams::for_type(2, 1, 2).unwrap();
        assert_eq!(
            (p.n, p.w1, p.w2, p.count_w1, p.count_w2),
            (12, 12, 16, 28, 3)
        );
        let p = FamilyParams::for_type(1, 0, 1).unwrap();
        assert_eq!((p.n, p.w1, p.w2, p.count_w1, p.count_w2), (1, 1, 2, 2, 1));
        assert!(FamilyParams::for_type(2, 1, 3).is_err());
        assert!(FamilyParams::for_type(2, 1, 0).is_err());
        assert!(FamilyParams::for_type(0, 4, 1).is_err());
    }

    #[test]
    fn family_enumeration() {
        let rows = enumerate_family_parameters(2, 1).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].t, 1);
        assert_eq!(rows[1].t, 2);
        // No order-four rows means no family members, but the query is valid.
        assert!(enumerate_family_parameters(0, 3).unwrap().is_empty());
        // Degenerate types are rejected.
        assert!(enumerate_family_parameters(0, 1).is_err());
        assert!(enumerate_family_parameters(0, 0).is_err());
    }

    #[test]
    fn projectivity_of_a_known_projective_code() {
        let p = is_projective(&y2(), 1 << 20).unwrap();
        assert!(p.projective);
        assert_eq!(p.method, ProjectivityMethod::Both);
        assert!(!p.dual_is_trivial);
    }

    #[test]
    fn repeated_column_is_not_projective() {
        let p = is_projective(&standard(&[vec![1, 1]]), 1 << 20).unwrap();
        assert!(!p.projective);
        assert_eq!(p.method, ProjectivityMethod::Both);
    }

    #[test]
    fn negated_column_is_not_projective() {
        // Columns (1) and (3) = -(1).
        let p = is_projective(&standard(&[vec![1, 3]]), 1 << 20).unwrap();
        assert!(!p.projective);
    }

    #[test]
    fn unit_free_column_is_not_projective() {
        let p = is_projective(&standard(&[vec![1, 0], vec![0, 2]]), 1 << 20).unwrap();
        assert!(!p.projective);
    }

    #[test]
    fn full_space_is_vacuously_projective() {
        let p = is_projective(&standard(&[vec![1, 0], vec![0, 1]]), 1 << 20).unwrap();
        assert!(p.projective);
        assert!(p.dual_is_trivial);
        assert_eq!(p.method, ProjectivityMethod::Both);
    }

    #[test]
    fn tiny_dual_cap_falls_back_to_columns() {
        let p = is_projective(&y2(), 1).unwrap();
        assert!(p.projective);
        assert_eq!(p.method, ProjectivityMethod::ColumnCriterion);
    }

    #[test]
    fn criteria_agree_on_random_small_matrices() {
        // Sweep deterministic pseudo-random matrices and insist the column
        // criterion matches the dual minimum distance test.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = |m: u64| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) % m
        };
        let mut nontrivial = 0;
        for _ in 0..200 {
            let k = 1 + next(3) as usize;
            let n = 1 + next(6) as usize;
            let rows: Vec<Vec<u8>> = (0..k)
                .map(|_| (0..n).map(|_| next(4) as u8).collect())
                .collect();
            let Ok(g) = GeneratorMatrix::from_digit_rows(&rows) else {
                continue;
            };
            let Ok(s) = g.standardize() else { continue };
            let p = is_projective(&s, 1 << 16).unwrap();
            if p.method == ProjectivityMethod::Both && !p.dual_is_trivial {
                nontrivial += 1;
            }
        }
        assert!(nontrivial > 50, "agreement test barely exercised");
    }

    #[test]
    fn low_weight_dual_search_finds_nothing_below_three_for_projective() {
        assert!(search_low_weight_dual_word(&y2(), 2).is_none());
    }

    #[test]
    fn low_weight_dual_search_finds_light_words() {
        // Repeated columns force a dual word of weight 2: (1, -1, 0).
        let s = standard(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let (w, word) = search_low_weight_dual_word(&s, 2).unwrap();
        assert_eq!(w, 2);
        assert_eq!(word.lee_weight(), 2);
        for row in s.generator_in_original_order().rows() {
            assert_eq!(row.inner_product(&word).unwrap().value(), 0);
        }
    }

    #[test]
    fn analyze_the_type_16_two_weight_code() {
        let report = analyze(&y2(), &AnalysisBudget::default()).unwrap();
        assert_eq!((report.n, report.k1, report.k2), (6, 2, 0));
        assert_eq!(report.size, 16);
        assert_eq!(report.min_distance, 6);
        assert_eq!(report.plotkin_bound, 6);
        assert!(report.plotkin_optimal);
        assert!(report.projective);
        assert_eq!(report.weight_class, WeightClass::TwoWeight);
        assert_eq!(report.weights, vec![6, 8]);
        let family = report.family.expect("family forced");
        assert_eq!(family.t, 2);
        assert_eq!(
            (family.n, family.w1, family.w2, family.count_w1, family.count_w2),
            (6, 6, 8, 12, 3)
        );
        let su1 = report.su1.expect("matched");
        assert_eq!((su1.q, su1.l, su1.m), (2, 4, 2));
        assert!(report.gray_linear.is_none());
    }

    #[test]
    fn analyze_a_non_optimal_code() {
        // Single generator (1 2 3 0): weights 0,4,4,4 -> one-weight,
        // d = 4 < bound floor(4*4/3) = 5.
        let report = analyze(&standard(&[vec![1, 2, 3, 0]]), &AnalysisBudget::default()).unwrap();
        assert_eq!(report.min_distance, 4);
        assert_eq!(report.plotkin_bound, 5);
        assert!(!report.plotkin_optimal);
        assert_eq!(report.weight_class, WeightClass::OneWeight);
        assert!(report.family.is_none());
        assert!(report.su1.is_none());
    }

    #[test]
    fn gray_linearity_examples() {
        // Span of (1 2 3): Gray images form a Klein group, hence linear.
        let linear = standard(&[vec![1, 2, 3]]);
        assert_eq!(gray_linearity(&linear, 1 << 12).unwrap(), true);
        // Span of ((1 0 1),(0 1 1)): the xor of the generators' images
        // would need the word (1 1 0), but the code only holds (1 1 2).
        let nonlinear = standard(&[vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(gray_linearity(&nonlinear, 1 << 12).unwrap(), false);
        // Cap is enforced.
        assert!(matches!(
            gray_linearity(&linear, 3),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn analyze_rejects_mismatched_distribution() {
        let s = y2();
        let mut dist = WeightDistribution::new();
        dist.add(0, 1);
        assert!(matches!(
            analyze_with_distribution(&s, dist, &AnalysisBudget::default()),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn enumeration_cap_propagates() {
        let s = y2();
        let tight = AnalysisBudget {
            enumeration_cap: 8,
            ..AnalysisBudget::default()
        };
        assert!(matches!(
            analyze(&s, &tight),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn exact_log2_works() {
        assert_eq!(exact_log2(1), Some(0));
        assert_eq!(exact_log2(2), Some(1));
        assert_eq!(exact_log2(1 << 40), Some(40));
        assert_eq!(exact_log2(3), None);
        assert_eq!(exact_log2(0), None);
    }
}
