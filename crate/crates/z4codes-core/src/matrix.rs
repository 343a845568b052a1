//! Generator matrices over `Z4`, column multiplicity profiles, and the
//! block standard form.
//!
//! Every nonzero matrix over `Z4` is row-equivalent, up to a column
//! permutation, to a unique-shape block matrix
//!
//! ```text
//!     ( I_k1   A    B )        A  over {0,1}
//!     ( 0    2I_k2  2D )       D  over {0,1},  B over Z4
//! ```
//!
//! whose row space is a code of type `4^{k1} 2^{k2}` and size
//! `4^{k1} * 2^{k2}`. The reduction below is deterministic: unit pivots are
//! taken on the leftmost remaining column that contains a unit (preferring a
//! pivot entry `1` over `3`), then order-two pivots on the leftmost
//! remaining column containing a `2`; pivot columns are rotated to the
//! front, preserving the relative order of all other columns.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vector::Z4Vector;
use crate::z4::Z4;

/// Maximum `2*k1 + k2` accepted, so `|C| = 4^{k1} 2^{k2}` fits in `u128`
/// with headroom for exact weighted sums.
const MAX_TYPE_EXPONENT: usize = 120;

/// Maximum number of rows for which column multiplicity profiles are kept
/// (columns are packed two bits per entry into a `u32` key).
pub const PROFILE_MAX_ROWS: usize = 16;

/// A `k x n` matrix over `Z4` whose row space is the code under study.
///
/// Rows need not be independent; [`GeneratorMatrix::standardize`] extracts
/// the type and a canonical generator of the same row space.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    rows: Vec<Z4Vector>,
    n: usize,
}

impl GeneratorMatrix {
    /// Builds a matrix from packed rows. All rows must have the same
    /// positive length and there must be at least one row.
    pub fn new(rows: Vec<Z4Vector>) -> Result<GeneratorMatrix> {
        let n = match rows.first() {
            Some(r) => r.len(),
            None => return Err(Error::EmptyMatrix),
        };
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::EmptyMatrix);
        }
        Ok(GeneratorMatrix { rows, n })
    }

    /// Builds a matrix from digit rows (values reduced mod 4).
    pub fn from_digit_rows(rows: &[Vec<u8>]) -> Result<GeneratorMatrix> {
        GeneratorMatrix::new(rows.iter().map(|r| Z4Vector::from_digits(r)).collect())
    }

    /// Number of rows.
    #[inline]
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns (the code length).
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The rows.
    #[inline]
    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    /// Row `i`.
    #[inline]
    pub fn row(&self, i: usize) -> &Z4Vector {
        &self.rows[i]
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    /// Column `j` as digits, top to bottom.
    pub fn column_digits(&self, j: usize) -> Vec<u8> {
        self.rows.iter().map(|r| r.get(j).value()).collect()
    }

    /// The codeword `x * G` for a coefficient row `x` of length `k`.
    pub fn combine(&self, coefficients: &[Z4]) -> Result<Z4Vector> {
        if coefficients.len() != self.k() {
            return Err(Error::DimensionMismatch {
                left: coefficients.len(),
                right: self.k(),
            });
        }
        let mut out = Z4Vector::zeros(self.n);
        for (row, &c) in self.rows.iter().zip(coefficients) {
            out.add_scaled_assign(row, c);
        }
        Ok(out)
    }

    /// Counts how often each column appears. Requires `k <= 16` so columns
    /// pack into `u32` keys.
    pub fn multiplicity_profile(&self) -> Result<MultiplicityProfile> {
        let k = self.k();
        if k > PROFILE_MAX_ROWS {
            return Err(Error::BudgetExceeded {
                what: "multiplicity profile rows",
                required: k as u128,
                limit: PROFILE_MAX_ROWS as u128,
            });
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for j in 0..self.n {
            *counts.entry(pack_column(&self.column_digits(j))).or_insert(0) += 1;
        }
        Ok(MultiplicityProfile {
            counts,
            k,
            n: self.n,
        })
    }

    /// Reduces to the block standard form, returning the type `(k1, k2)`,
    /// the permuted canonical generator, and the column permutation.
    ///
    /// Fails with [`Error::DegenerateCode`] on the zero matrix and with
    /// [`Error::TypeTooLarge`] if `2*k1 + k2` exceeds the exact-counting
    /// range.
    pub fn standardize(&self) -> Result<StandardForm> {
        let k = self.k();
        let n = self.n;
        let mut m: Vec<Vec<u8>> = (0..k).map(|i| self.rows[i].digits()).collect();
        // perm[p] = original index of the column now at position p.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut r = 0;

        // Phase 1: unit pivots. Scan for the leftmost column at position
        // >= r holding a unit in some row >= r; prefer a row where the
        // entry is 1, otherwise scale a 3 by 3.
        while r < k {
            let Some((col, row)) = find_unit_pivot(&m, r, n) else {
                break;
            };
            m.swap(r, row);
            if m[r][col] == 3 {
                scale_row(&mut m[r], 3);
            }
            debug_assert_eq!(m[r][col], 1);
            for i in 0..k {
                if i != r && m[i][col] != 0 {
                    let factor = m[i][col];
                    subtract_scaled(&mut m, i, r, factor);
                }
            }
            rotate_column_to(&mut m, &mut perm, col, r);
            r += 1;
        }
        let k1 = r;

        // Phase 2: order-two pivots. Every remaining row now lies in
        // (2Z4)^n, so pivots are entries equal to 2.
        while r < k {
            let Some((col, row)) = find_two_pivot(&m, r, n) else {
                break;
            };
            m.swap(r, row);
            debug_assert_eq!(m[r][col], 2);
            for i in 0..k {
                if i == r {
                    continue;
                }
                if i < k1 {
                    // Reduce the upper block mod 2 at this pivot column:
                    // entries 2 and 3 drop by the pivot row once.
                    if m[i][col] >= 2 {
                        subtract_scaled(&mut m, i, r, 1);
                    }
                } else if m[i][col] == 2 {
                    subtract_scaled(&mut m, i, r, 1);
                }
            }
            rotate_column_to(&mut m, &mut perm, col, r);
            r += 1;
        }
        let k2 = r - k1;

        if r == 0 {
            return Err(Error::DegenerateCode);
        }
        if 2 * k1 + k2 > MAX_TYPE_EXPONENT {
            return Err(Error::TypeTooLarge { k1, k2 });
        }
        // Rows past r must be identically zero: no unit survived phase 1
        // and no 2 survived phase 2.
        debug_assert!(m[r..].iter().all(|row| row.iter().all(|&d| d == 0)));
        m.truncate(r);

        let matrix = GeneratorMatrix::from_digit_rows(&m)?;
        Ok(StandardForm {
            matrix,
            k1,
            k2,
            perm,
        })
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GeneratorMatrix {}x{} [", self.k(), self.n())?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

fn find_unit_pivot(m: &[Vec<u8>], r: usize, n: usize) -> Option<(usize, usize)> {
    for col in r..n {
        let mut three_row = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            match row[col] {
                1 => return Some((col, i)),
                3 if three_row.is_none() => three_row = Some(i),
                _ => {}
            }
        }
        if let Some(i) = three_row {
            return Some((col, i));
        }
    }
    None
}

fn find_two_pivot(m: &[Vec<u8>], r: usize, n: usize) -> Option<(usize, usize)> {
    for col in r..n {
        for (i, row) in m.iter().enumerate().skip(r) {
            debug_assert!(row[col] & 1 == 0, "unit left after phase 1");
            if row[col] == 2 {
                return Some((col, i));
            }
        }
    }
    None
}

fn scale_row(row: &mut [u8], factor: u8) {
    for d in row {
        *d = (*d * factor) & 3;
    }
}

/// `m[target] -= factor * m[source]`, digitwise mod 4.
fn subtract_scaled(m: &mut [Vec<u8>], target: usize, source: usize, factor: u8) {
    debug_assert_ne!(target, source);
    let (a, b) = if target < source {
        let (lo, hi) = m.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (t, &s) in a.iter_mut().zip(b.iter()) {
        *t = t.wrapping_sub(factor * s) & 3;
    }
}

/// Moves the column at position `from` to position `to < from`, shifting the
/// columns in between one step right (a rotation, so their relative order
/// is preserved).
fn rotate_column_to(m: &mut [Vec<u8>], perm: &mut [usize], from: usize, to: usize) {
    debug_assert!(to <= from);
    if to == from {
        return;
    }
    for row in m.iter_mut() {
        row[to..=from].rotate_right(1);
    }
    perm[to..=from].rotate_right(1);
}

/// A generator matrix in block standard form, together with the code type
/// and the column permutation that produced it.
#[derive(Clone, PartialEq, Eq)]
pub struct StandardForm {
    matrix: GeneratorMatrix,
    k1: usize,
    k2: usize,
    /// `perm[p]` is the original index of the column at standard position `p`.
    perm: Vec<usize>,
}

impl StandardForm {
    /// The canonical generator matrix (in permuted coordinates).
    #[inline]
    pub fn matrix(&self) -> &GeneratorMatrix {
        &self.matrix
    }

    /// Number of order-four rows.
    #[inline]
    pub fn k1(&self) -> usize {
        self.k1
    }

    /// Number of order-two rows.
    #[inline]
    pub fn k2(&self) -> usize {
        self.k2
    }

    /// Total rank `k1 + k2`.
    #[inline]
    pub fn k(&self) -> usize {
        self.k1 + self.k2
    }

    /// The code length.
    #[inline]
    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    /// The code size `4^{k1} * 2^{k2}` (exact).
    pub fn size(&self) -> u128 {
        1u128 << (2 * self.k1 + self.k2)
    }

    /// For each standard-form position, the index of the original column.
    #[inline]
    pub fn standard_to_original(&self) -> &[usize] {
        &self.perm
    }

    /// For each original column index, its standard-form position.
    pub fn original_to_standard(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (p, &orig) in self.perm.iter().enumerate() {
            inv[orig] = p;
        }
        inv
    }

    /// The canonical generator with columns moved back to their original
    /// positions (same row space as the input matrix).
    pub fn generator_in_original_order(&self) -> GeneratorMatrix {
        let n = self.n();
        let rows = self
            .matrix
            .rows()
            .iter()
            .map(|row| {
                let mut digits = vec![0u8; n];
                for (p, &orig) in self.perm.iter().enumerate() {
                    digits[orig] = row.get(p).value();
                }
                Z4Vector::from_digits(&digits)
            })
            .collect();
        GeneratorMatrix::new(rows).expect("rows exist by construction")
    }

    /// The `{0,1}` block `A` (`k1 x k2`), as digit rows.
    pub(crate) fn block_a(&self) -> Vec<Vec<u8>> {
        (0..self.k1)
            .map(|i| {
                (self.k1..self.k1 + self.k2)
                    .map(|j| self.matrix.row(i).get(j).value())
                    .collect()
            })
            .collect()
    }

    /// The `Z4` block `B` (`k1 x (n - k1 - k2)`), as digit rows.
    pub(crate) fn block_b(&self) -> Vec<Vec<u8>> {
        (0..self.k1)
            .map(|i| {
                (self.k1 + self.k2..self.n())
                    .map(|j| self.matrix.row(i).get(j).value())
                    .collect()
            })
            .collect()
    }

    /// The `{0,1}` block `D` (`k2 x (n - k1 - k2)`): the halved entries of
    /// the lower-right block `2D`.
    pub(crate) fn block_d(&self) -> Vec<Vec<u8>> {
        (0..self.k2)
            .map(|i| {
                (self.k1 + self.k2..self.n())
                    .map(|j| self.matrix.row(self.k1 + i).get(j).value() / 2)
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for StandardForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StandardForm(k1={}, k2={}, n={}) {:?}",
            self.k1,
            self.k2,
            self.n(),
            self.matrix
        )
    }
}

/// How often each column appears in a generator matrix, with columns packed
/// two bits per entry into `u32` keys (least significant lane = row 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    counts: BTreeMap<u32, usize>,
    k: usize,
    n: usize,
}

/// Packs a digit column into a `u32` key (two bits per row).
pub fn pack_column(digits: &[u8]) -> u32 {
    debug_assert!(digits.len() <= PROFILE_MAX_ROWS);
    digits
        .iter()
        .enumerate()
        .fold(0u32, |acc, (i, &d)| acc | (((d & 3) as u32) << (2 * i)))
}

/// Unpacks a `u32` column key back into `k` digits.
pub fn unpack_column(key: u32, k: usize) -> Vec<u8> {
    (0..k).map(|i| ((key >> (2 * i)) & 3) as u8).collect()
}

/// The key of the negated column `3c = -c`.
pub fn negate_column_key(key: u32) -> u32 {
    const LO: u32 = 0x5555_5555;
    key ^ ((key & LO) << 1)
}

impl MultiplicityProfile {
    /// Multiplicity of the column with the given packed key.
    pub fn multiplicity_of_key(&self, key: u32) -> usize {
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Multiplicity of a digit column.
    pub fn multiplicity(&self, column: &[u8]) -> usize {
        debug_assert_eq!(column.len(), self.k);
        self.multiplicity_of_key(pack_column(column))
    }

    /// Number of rows the profile was taken over.
    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Total number of columns (with multiplicity).
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Iterates over `(packed column, multiplicity)` in key order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    /// Multiplicity of the zero column.
    pub fn zero_multiplicity(&self) -> usize {
        self.multiplicity_of_key(0)
    }
}
