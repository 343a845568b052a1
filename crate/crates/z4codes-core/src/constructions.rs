//! Constructions of one-weight and two-weight codes over `Z4`.
//!
//! * [`one_weight`] — the simplex-like code of type `4^{k1} 2^{k2}` whose
//!   columns are all nonzero vectors of `Z4^{k1} x (2Z4)^{k2}`; every
//!   nonzero codeword has Lee weight `4^{k1} 2^{k2}`.
//! * [`two_weight_base`] — the recursive family `Y_k`: `Y_1 = (1)` and
//!   `Y_k` repeats `Y_{k-1}` four times, appends all `2^{k-1}` columns of
//!   `(2Z4)^{k-1}`, and closes with the row
//!   `(0...0 1...1 2...2 3...3 | 1...1)`. `Y_k` generates a free two-weight
//!   projective code of length `2^{k-1}(2^k - 1)` attaining the Plotkin-type
//!   bound, with weights `n` and `2^{2k-1}`.
//! * [`augment`] — the two generic extensions that preserve the two-weight
//!   optimal structure: the length-quadrupling step `(G G G G ; 0 1 2 3)`
//!   adding an order-four row, and the length-doubling step `(G G ; 0 2)`
//!   adding an order-two row. [`predict_augment`] computes the exact
//!   weight-distribution transfer law of either step for any input code.
//! * [`build_family`] — the full parametric family: every column of `Y_t`
//!   extended by all `4^{k1-t} 2^{k2}` suffixes in `Z4^{k1-t} x (2Z4)^{k2}`,
//!   yielding the Plotkin-optimal two-weight projective code of type
//!   `4^{k1} 2^{k2}` with parameter `t`; equal, column for column, to
//!   iterating `augment` on `Y_t` ([`build_family_by_augmentation`]).
//! * [`two_weight_nonoptimal_example`] — a fixed `3 x 14` generator whose
//!   code is two-weight (`12` and `16`) and projective but sits strictly
//!   below the Plotkin-type bound of `14`, showing the family does not
//!   exhaust two-weight projective codes.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::WeightDistribution;
use crate::error::{Error, Result};
use crate::matrix::GeneratorMatrix;

/// Checks a construction's column count against the cap before allocating.
fn check_columns(required: u128, cap: u128) -> Result<()> {
    if required > cap {
        Err(Error::BudgetExceeded {
            what: "construction columns",
            required,
            limit: cap,
        })
    } else {
        Ok(())
    }
}

/// The one-weight code of type `4^{k1} 2^{k2}`: columns are the nonzero
/// vectors of `Z4^{k1} x (2Z4)^{k2}` in odometer order (first coordinate
/// fastest), so `n = 4^{k1} 2^{k2} - 1` and every nonzero codeword has Lee
/// weight `4^{k1} 2^{k2}`.
pub fn one_weight(k1: usize, k2: usize, column_cap: u128) -> Result<GeneratorMatrix> {
    let k = k1 + k2;
    if k == 0 {
        return Err(Error::InvalidParameter {
            what: format!("one-weight construction needs k1 + k2 >= 1, got ({k1}, {k2})"),
        });
    }
    if 2 * k1 + k2 > 120 {
        return Err(Error::TypeTooLarge { k1, k2 });
    }
    let total: u128 = 1 << (2 * k1 + k2);
    check_columns(total - 1, column_cap)?;
    let n = (total - 1) as usize;
    let mut rows = vec![vec![0u8; n]; k];
    for idx in 1..total {
        let col = (idx - 1) as usize;
        for j in 0..k1 {
            rows[j][col] = ((idx >> (2 * j)) & 3) as u8;
        }
        for j in 0..k2 {
            rows[k1 + j][col] = 2 * (((idx >> (2 * k1 + j)) & 1) as u8);
        }
    }
    GeneratorMatrix::from_digit_rows(&rows)
}

/// The recursive two-weight base family `Y_k` (`k >= 1`): a `k x
/// 2^{k-1}(2^k - 1)` generator of a free Plotkin-optimal two-weight
/// projective code.
pub fn two_weight_base(k: usize, column_cap: u128) -> Result<GeneratorMatrix> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            what: alloc::string::String::from("base family needs k >= 1"),
        });
    }
    if 2 * k > 120 {
        return Err(Error::TypeTooLarge { k1: k, k2: 0 });
    }
    let n: u128 = (1 << (k - 1)) * ((1 << k) - 1);
    check_columns(n, column_cap)?;
    Ok(GeneratorMatrix::from_digit_rows(&base_digits(k)).expect("nonempty by construction"))
}

fn base_digits(k: usize) -> Vec<Vec<u8>> {
    if k == 1 {
        return vec![vec![1]];
    }
    let prev = base_digits(k - 1);
    let n_prev = prev[0].len();
    let evens = 1usize << (k - 1);
    let n = 4 * n_prev + evens;
    let mut rows = vec![vec![0u8; n]; k];
    // Upper block: Y_{k-1} repeated four times, then all columns of
    // (2Z4)^{k-1} in odometer order (including zero, coordinate 0 fastest).
    for (r, prev_row) in prev.iter().enumerate() {
        for rep in 0..4 {
            rows[r][rep * n_prev..(rep + 1) * n_prev].copy_from_slice(prev_row);
        }
        for (j, slot) in rows[r][4 * n_prev..].iter_mut().enumerate() {
            *slot = 2 * (((j >> r) & 1) as u8);
        }
    }
    // Closing row: 0...0 1...1 2...2 3...3 over the repeats, then 1...1.
    for rep in 0..4u8 {
        for slot in rows[k - 1][rep as usize * n_prev..(rep as usize + 1) * n_prev].iter_mut() {
            *slot = rep;
        }
    }
    for slot in rows[k - 1][4 * n_prev..].iter_mut() {
        *slot = 1;
    }
    rows
}

/// Which generic extension step to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AugmentMode {
    /// `(G G G G ; 0 1 2 3)` — quadruples the length, multiplies the code
    /// size by 4 (adds an order-four row).
    FullRow,
    /// `(G G ; 0 2)` — doubles the length, multiplies the code size by 2
    /// (adds an order-two row).
    HalfRow,
}

impl AugmentMode {
    /// The length multiplier of the step.
    pub fn length_factor(self) -> usize {
        match self {
            AugmentMode::FullRow => 4,
            AugmentMode::HalfRow => 2,
        }
    }

    /// Stable kebab-case name.
    pub fn as_str(self) -> &'static str {
        match self {
            AugmentMode::FullRow => "full-row",
            AugmentMode::HalfRow => "half-row",
        }
    }
}

/// Applies one extension step to a nonzero generator matrix.
pub fn augment(g: &GeneratorMatrix, mode: AugmentMode) -> Result<GeneratorMatrix> {
    if g.is_zero() {
        return Err(Error::DegenerateCode);
    }
    let n = g.n();
    let reps = mode.length_factor();
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(g.k() + 1);
    for row in g.rows() {
        let digits = row.digits();
        let mut wide = Vec::with_capacity(reps * n);
        for _ in 0..reps {
            wide.extend_from_slice(&digits);
        }
        rows.push(wide);
    }
    let mut tail = Vec::with_capacity(reps * n);
    let step = match mode {
        AugmentMode::FullRow => 1u8,
        AugmentMode::HalfRow => 2,
    };
    for rep in 0..reps {
        tail.extend(core::iter::repeat_n((rep as u8 * step) & 3, n));
    }
    rows.push(tail);
    GeneratorMatrix::from_digit_rows(&rows)
}

/// The exact weight-distribution transfer law of one extension step, valid
/// for any input code: writing `N` for the input length and `A` for its
/// distribution, the extended code has `A'(f*w) = A(w)` for `0 < w < N...`
/// — precisely, every input word of weight `w` reappears with weight `f*w`
/// (where `f` is the length factor), and the new coset copies contribute
/// `(f - 1) |C|` extra words of weight `f*N`.
pub fn predict_augment(
    distribution: &WeightDistribution,
    n: usize,
    mode: AugmentMode,
) -> WeightDistribution {
    let f = mode.length_factor() as u64;
    let size = distribution.total();
    let mut out = WeightDistribution::new();
    for (w, count) in distribution.iter() {
        out.add(f * w, count);
    }
    out.add(f * n as u64, (f as u128 - 1) * size);
    out
}

/// The full parametric family: the code of type `4^{k1} 2^{k2}` with
/// parameter `t` in `1..=k1`, generated by every column of `Y_t` extended
/// by all `4^{k1-t} 2^{k2}` suffixes over `Z4^{k1-t} x (2Z4)^{k2}`.
/// Suffixes vary slowest (odometer order), base columns fastest, which
/// makes the result literally equal to iterated augmentation.
pub fn build_family(k1: usize, k2: usize, t: usize, column_cap: u128) -> Result<GeneratorMatrix> {
    if t == 0 || t > k1 {
        return Err(Error::InvalidParameter {
            what: format!("family parameter t={t} must satisfy 1 <= t <= k1={k1}"),
        });
    }
    if 2 * k1 + k2 > 120 {
        return Err(Error::TypeTooLarge { k1, k2 });
    }
    let base = base_digits(t);
    let n_base = base[0].len() as u128;
    let a = k1 - t;
    let b = k2;
    let extensions: u128 = 1 << (2 * a + b);
    let n_total = n_base * extensions;
    check_columns(n_total, column_cap)?;
    let n = n_total as usize;
    let n_base = n_base as usize;
    let k = k1 + k2;
    let mut rows = vec![vec![0u8; n]; k];
    for e in 0..extensions {
        let offset = e as usize * n_base;
        // Base rows: a fresh copy of Y_t.
        for (r, base_row) in base.iter().enumerate() {
            rows[r][offset..offset + n_base].copy_from_slice(base_row);
        }
        // Extension rows: constant on each copy, running through
        // Z4^a x (2Z4)^b in odometer order.
        for j in 0..a {
            let digit = ((e >> (2 * j)) & 3) as u8;
            rows[t + j][offset..offset + n_base].fill(digit);
        }
        for j in 0..b {
            let digit = 2 * (((e >> (2 * a + j)) & 1) as u8);
            rows[t + a + j][offset..offset + n_base].fill(digit);
        }
    }
    GeneratorMatrix::from_digit_rows(&rows)
}

/// The same family built the long way: start from `Y_t`, apply the
/// order-four extension `k1 - t` times, then the order-two extension `k2`
/// times. Produces a matrix identical to [`build_family`].
pub fn build_family_by_augmentation(
    k1: usize,
    k2: usize,
    t: usize,
    column_cap: u128,
) -> Result<GeneratorMatrix> {
    if t == 0 || t > k1 {
        return Err(Error::InvalidParameter {
            what: format!("family parameter t={t} must satisfy 1 <= t <= k1={k1}"),
        });
    }
    if 2 * k1 + k2 > 120 {
        return Err(Error::TypeTooLarge { k1, k2 });
    }
    let n_final: u128 = ((1u128 << (t - 1)) * ((1 << t) - 1)) << (2 * (k1 - t) + k2);
    check_columns(n_final, column_cap)?;
    let mut g = two_weight_base(t, column_cap)?;
    for _ in 0..k1 - t {
        g = augment(&g, AugmentMode::FullRow)?;
    }
    for _ in 0..k2 {
        g = augment(&g, AugmentMode::HalfRow)?;
    }
    Ok(g)
}

/// A fixed `3 x 14` generator of a two-weight projective code of type `4^3`
/// with weights `12` and `16`: its minimum distance `12` sits strictly below
/// the Plotkin-type bound `14`, so two-weight projective codes exist outside
/// the Plotkin-optimal family.
pub fn two_weight_nonoptimal_example() -> GeneratorMatrix {
    GeneratorMatrix::from_digit_rows(&[
        vec![1, 0, 0, 3, 3, 3, 2, 0, 0, 3, 1, 2, 3, 3],
        vec![0, 1, 0, 2, 1, 3, 0, 1, 3, 2, 0, 1, 1, 1],
        vec![0, 0, 1, 2, 2, 2, 3, 1, 1, 1, 1, 2, 1, 3],
    ])
    .expect("fixed shape")
}
