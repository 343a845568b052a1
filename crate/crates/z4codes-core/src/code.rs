//! Codeword enumeration, Lee weight distributions, minimum distance, and
//! dual codes.
//!
//! A code of type `4^{k1} 2^{k2}` in standard form is enumerated in a fixed
//! mixed-radix order: coefficient index `i` in `0..4^{k1} * 2^{k2}` expands
//! into `k1` base-4 digits (least significant first, so the first generator
//! row cycles fastest) followed by `k2` binary digits selecting the
//! order-two rows, which already carry their factor of two. The scanner
//! steps incrementally — each
//! index increment adds one or a few generator rows — while
//! [`StandardForm::codeword_at`] provides random access at any index, so a
//! range `[start, end)` of the enumeration can be replayed independently.
//! Range results merge associatively, which is what makes multi-worker
//! weight distributions byte-identical to single-worker runs.
//!
//! The dual code is read off the standard-form blocks: with
//! `G = (I A B ; 0 2I 2D)` the dual is generated by one order-four row
//! `(-(A D e_m + B e_m) , D e_m , e_m)` per parity position `m` and one
//! order-two row `(2 A e_j , 2 e_j , 0)` per order-two position `j`
//! (all read columnwise); the result has type `4^{n-k1-k2} 2^{k2}`, so
//! `|C| * |C_dual| = 4^n` always holds.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::{GeneratorMatrix, StandardForm};
use crate::vector::Z4Vector;
use crate::z4::Z4;

impl StandardForm {
    /// The coefficient digits (length `k1 + k2`) of enumeration index
    /// `index`: values in `0..=3` for the order-four rows, then `0` or `1`
    /// for the order-two rows (which already carry their factor of two).
    pub fn coefficients_at(&self, index: u128) -> Vec<Z4> {
        debug_assert!(index < self.size());
        let k1 = self.k1();
        let k2 = self.k2();
        let mut coeffs = Vec::with_capacity(k1 + k2);
        for j in 0..k1 {
            coeffs.push(Z4::new(((index >> (2 * j)) & 3) as u8));
        }
        for j in 0..k2 {
            coeffs.push(Z4::new(((index >> (2 * k1 + j)) & 1) as u8));
        }
        coeffs
    }

    /// The codeword at enumeration index `index` (random access).
    pub fn codeword_at(&self, index: u128) -> Z4Vector {
        let mut word = Z4Vector::zeros(self.n());
        for (row, c) in self.matrix().rows().iter().zip(self.coefficients_at(index)) {
            word.add_scaled_assign(row, c);
        }
        word
    }

    /// Visits codewords `start..end` in enumeration order, stepping
    /// incrementally (one row addition per rolled digit).
    pub fn scan_codewords<F: FnMut(u128, &Z4Vector)>(&self, start: u128, end: u128, mut visit: F) {
        debug_assert!(start <= end && end <= self.size());
        if start >= end {
            return;
        }
        let k1 = self.k1();
        let rows = self.matrix().rows();
        let mut word = self.codeword_at(start);
        let mut index = start;
        loop {
            visit(index, &word);
            index += 1;
            if index >= end {
                return;
            }
            advance_word(&mut word, rows, k1, index - 1);
        }
    }

    /// Iterator over all codewords in enumeration order.
    pub fn codewords(&self) -> Codewords<'_> {
        Codewords {
            form: self,
            next_index: 0,
            current: Z4Vector::zeros(self.n()),
        }
    }

    /// The Lee weight distribution of the whole code, refusing to enumerate
    /// more than `cap` codewords.
    pub fn weight_distribution(&self, cap: u128) -> Result<WeightDistribution> {
        let size = self.size();
        if size > cap {
            return Err(Error::EnumerationLimit {
                required: size,
                cap,
            });
        }
        Ok(self.weight_distribution_range(0, size))
    }

    /// The Lee weight distribution of enumeration indices `start..end`
    /// (a partial distribution; totals add up under [`WeightDistribution::merge`]).
    pub fn weight_distribution_range(&self, start: u128, end: u128) -> WeightDistribution {
        let mut histogram = vec![0u128; 2 * self.n() + 1];
        self.scan_codewords(start, end, |_, w| {
            histogram[w.lee_weight() as usize] += 1;
        });
        WeightDistribution::from_histogram(&histogram)
    }

    /// The minimum Lee distance, computed by a dedicated scan over the
    /// nonzero codewords (independent of the distribution path).
    pub fn min_lee_distance(&self, cap: u128) -> Result<u64> {
        let size = self.size();
        if size > cap {
            return Err(Error::EnumerationLimit {
                required: size,
                cap,
            });
        }
        if size <= 1 {
            return Err(Error::UndefinedDistance);
        }
        let mut min = u64::MAX;
        self.scan_codewords(1, size, |_, w| {
            let lw = w.lee_weight();
            if lw < min {
                min = lw;
            }
        });
        Ok(min)
    }

    /// The dual code under the Euclidean inner product mod 4, in original
    /// coordinates and standardized. The trivial dual `{0}` (when `C` is
    /// all of `Z4^n`) is returned as [`Code::Trivial`].
    pub fn dual(&self) -> Result<Code> {
        let k1 = self.k1();
        let k2 = self.k2();
        let n = self.n();
        let free = n - k1 - k2;
        let a = self.block_a();
        let b = self.block_b();
        let d = self.block_d();

        let mut rows: Vec<Z4Vector> = Vec::with_capacity(free + k2);
        // One order-four row per parity position m: the column of C's
        // standard generator there is (B e_m ; 2 D e_m), and the row
        // (x, y, e_m) with y = D^T-selected bits, x = -(A y + B e_m)
        // is orthogonal to both row blocks of G.
        for m in 0..free {
            let mut digits = vec![0u8; n];
            for i in 0..k1 {
                let mut acc = b[i][m] as u32;
                for j in 0..k2 {
                    acc += (a[i][j] * d[j][m]) as u32;
                }
                digits[i] = ((4 - (acc % 4)) % 4) as u8;
            }
            for j in 0..k2 {
                digits[k1 + j] = d[j][m];
            }
            digits[k1 + k2 + m] = 1;
            rows.push(Z4Vector::from_digits(&digits));
        }
        // One order-two row per order-two position j: (2 A e_j , 2 e_j , 0).
        for j in 0..k2 {
            let mut digits = vec![0u8; n];
            for i in 0..k1 {
                digits[i] = (2 * a[i][j]) & 3;
            }
            digits[k1 + j] = 2;
            rows.push(Z4Vector::from_digits(&digits));
        }

        if rows.is_empty() {
            return Ok(Code::Trivial { length: n });
        }

        // Rows above are in standard (permuted) coordinates; move entries
        // back to the original column positions before standardizing.
        let perm = self.standard_to_original();
        let original_rows: Vec<Z4Vector> = rows
            .iter()
            .map(|row| {
                let mut digits = vec![0u8; n];
                for (p, &orig) in perm.iter().enumerate() {
                    digits[orig] = row.get(p).value();
                }
                Z4Vector::from_digits(&digits)
            })
            .collect();
        let dual = GeneratorMatrix::new(original_rows)?.standardize()?;
        debug_assert_eq!(dual.k1(), free);
        debug_assert_eq!(dual.k2(), k2);
        Ok(Code::Nontrivial(dual))
    }
}

/// Iterator over the codewords of a standard-form code in enumeration order.
pub struct Codewords<'a> {
    form: &'a StandardForm,
    next_index: u128,
    current: Z4Vector,
}

impl Iterator for Codewords<'_> {
    type Item = Z4Vector;

    fn next(&mut self) -> Option<Z4Vector> {
        let size = self.form.size();
        if self.next_index >= size {
            return None;
        }
        let out = self.current.clone();
        let prev = self.next_index;
        self.next_index += 1;
        if self.next_index < size {
            advance_word(
                &mut self.current,
                self.form.matrix().rows(),
                self.form.k1(),
                prev,
            );
        }
        Some(out)
    }
}

/// Steps a codeword from enumeration index `prev` to `prev + 1`: every
/// mixed-radix digit that changes contributes one row addition (order-two
/// rows have binary digits), and digit `j + 1` changes exactly when digit
/// `j` rolled over.
fn advance_word(word: &mut Z4Vector, rows: &[Z4Vector], k1: usize, prev: u128) {
    for (j, row) in rows.iter().enumerate() {
        word.add_assign_raw(row);
        let rolled = if j < k1 {
            (prev >> (2 * j)) & 3 == 3
        } else {
            (prev >> (2 * k1 + (j - k1))) & 1 == 1
        };
        if !rolled {
            return;
        }
    }
}

/// A code presented either as the trivial code `{0}` or by a standard form.
#[derive(Clone, Debug)]
pub enum Code {
    /// The zero code of the given length.
    Trivial { length: usize },
    /// A nonzero code, canonically presented.
    Nontrivial(StandardForm),
}

impl Code {
    /// The ambient length `n`.
    pub fn length(&self) -> usize {
        match self {
            Code::Trivial { length } => *length,
            Code::Nontrivial(form) => form.n(),
        }
    }

    /// The number of codewords.
    pub fn size(&self) -> u128 {
        match self {
            Code::Trivial { .. } => 1,
            Code::Nontrivial(form) => form.size(),
        }
    }

    /// True for the zero code.
    pub fn is_trivial(&self) -> bool {
        matches!(self, Code::Trivial { .. })
    }

    /// The standard form, if the code is nonzero.
    pub fn standard_form(&self) -> Option<&StandardForm> {
        match self {
            Code::Trivial { .. } => None,
            Code::Nontrivial(form) => Some(form),
        }
    }

    /// Minimum Lee distance; the trivial code has none
    /// ([`Error::UndefinedDistance`], conventionally `+infinity`).
    pub fn min_lee_distance(&self, cap: u128) -> Result<u64> {
        match self {
            Code::Trivial { .. } => Err(Error::UndefinedDistance),
            Code::Nontrivial(form) => form.min_lee_distance(cap),
        }
    }
}

/// A Lee weight histogram: how many codewords have each weight.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: BTreeMap<u64, u128>,
    total: u128,
}

impl WeightDistribution {
    /// An empty distribution.
    pub fn new() -> WeightDistribution {
        WeightDistribution {
            counts: BTreeMap::new(),
            total: 0,
        }
    }

    /// Builds from a dense histogram indexed by weight.
    pub fn from_histogram(histogram: &[u128]) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        let mut total = 0u128;
        for (w, &c) in histogram.iter().enumerate() {
            if c > 0 {
                counts.insert(w as u64, c);
                total += c;
            }
        }
        WeightDistribution { counts, total }
    }

    /// Adds `count` words of weight `weight`.
    pub fn add(&mut self, weight: u64, count: u128) {
        if count > 0 {
            *self.counts.entry(weight).or_insert(0) += count;
            self.total += count;
        }
    }

    /// Number of codewords of the given weight.
    pub fn count(&self, weight: u64) -> u128 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Total number of codewords accounted for.
    pub fn total(&self) -> u128 {
        self.total
    }

    /// Iterates `(weight, count)` in increasing weight order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u128)> + '_ {
        self.counts.iter().map(|(&w, &c)| (w, c))
    }

    /// The distinct nonzero weights, ascending.
    pub fn nonzero_weights(&self) -> Vec<u64> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    /// The smallest nonzero weight, i.e. the minimum distance of a linear
    /// code with this distribution.
    pub fn min_nonzero_weight(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// `sum_w w * A_w` as an exact 128-bit integer.
    pub fn weighted_sum(&self) -> u128 {
        self.counts
            .iter()
            .map(|(&w, &c)| (w as u128) * c)
            .sum()
    }

    /// Folds another (partial) distribution into this one.
    pub fn merge(&mut self, other: &WeightDistribution) {
        for (w, c) in other.iter() {
            self.add(w, c);
        }
    }
}

impl Default for WeightDistribution {
    fn default() -> Self {
        WeightDistribution::new()
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightDistribution{{")?;
        for (i, (w, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn standard(rows: &[Vec<u8>]) -> StandardForm {
        GeneratorMatrix::from_digit_rows(rows)
            .unwrap()
            .standardize()
            .unwrap()
    }

    #[test]
    fn enumeration_order_is_the_documented_odometer() {
        // Type 4^1 2^1 on ((1 1 1),(0 2 2)): first row cycles fastest.
        let s = standard(&[vec![1, 1, 1], vec![0, 2, 2]]);
        assert_eq!((s.k1(), s.k2()), (1, 1));
        let words: Vec<Vec<u8>> = s.codewords().map(|w| w.digits()).collect();
        assert_eq!(words.len(), 8);
        let r0 = s.matrix().row(0).digits();
        let r1 = s.matrix().row(1).digits();
        // Indices 0..4 cycle the first (order-four) row; index 4 flips the
        // binary digit, adding the order-two row itself.
        assert!(words[0].iter().all(|&d| d == 0));
        assert_eq!(words[1], r0);
        assert_eq!(words[2], r0.iter().map(|&d| (2 * d) & 3).collect::<Vec<_>>());
        assert_eq!(words[3], r0.iter().map(|&d| (3 * d) & 3).collect::<Vec<_>>());
        assert_eq!(words[4], r1);
        let sum: Vec<u8> = r0.iter().zip(&r1).map(|(&a, &b)| (a + b) & 3).collect();
        assert_eq!(words[5], sum);
    }

    #[test]
    fn codeword_at_matches_scan() {
        let s = standard(&[vec![1, 2, 3, 0], vec![0, 2, 2, 2], vec![1, 1, 1, 1]]);
        let size = s.size();
        let mut seen = Vec::new();
        s.scan_codewords(0, size, |i, w| {
            assert_eq!(i as usize, seen.len());
            seen.push(w.clone());
        });
        for (i, w) in seen.iter().enumerate() {
            assert_eq!(&s.codeword_at(i as u128), w, "index {i}");
        }
        // Iterator agrees too.
        let via_iter: Vec<Z4Vector> = s.codewords().collect();
        assert_eq!(via_iter, seen);
    }

    #[test]
    fn enumeration_is_the_whole_code_without_repeats() {
        let s = standard(&[vec![1, 1, 1], vec![0, 2, 2]]);
        let set: BTreeSet<Vec<u8>> = s.codewords().map(|w| w.digits()).collect();
        assert_eq!(set.len() as u128, s.size());
        // Matches the brute-force span over the original matrix.
        let mut brute = BTreeSet::new();
        for x in 0..16u32 {
            let c0 = (x & 3) as u8;
            let c1 = ((x >> 2) & 3) as u8;
            let word: Vec<u8> = (0..3)
                .map(|j| (c0 * [1u8, 1, 1][j] + c1 * [0u8, 2, 2][j]) & 3)
                .collect();
            brute.insert(word);
        }
        assert_eq!(set, brute);
    }

    #[test]
    fn range_split_merges_to_full_distribution() {
        let s = standard(&[vec![1, 2, 3, 0, 1], vec![0, 2, 2, 2, 0]]);
        let full = s.weight_distribution(1 << 20).unwrap();
        let size = s.size();
        for cut in [1, 3, size / 2, size - 1] {
            let mut merged = s.weight_distribution_range(0, cut);
            merged.merge(&s.weight_distribution_range(cut, size));
            assert_eq!(merged, full, "cut at {cut}");
        }
        assert_eq!(full.total(), size);
    }

    #[test]
    fn known_distribution_of_a_two_weight_code() {
        // ((1 1 1 1 0 2),(0 1 2 3 1 1)) has weights {6: 12, 8: 3} plus the
        // zero word; minimum distance 6.
        let s = standard(&[vec![1, 1, 1, 1, 0, 2], vec![0, 1, 2, 3, 1, 1]]);
        assert_eq!((s.k1(), s.k2()), (2, 0));
        let dist = s.weight_distribution(1 << 10).unwrap();
        assert_eq!(dist.count(0), 1);
        assert_eq!(dist.count(6), 12);
        assert_eq!(dist.count(8), 3);
        assert_eq!(dist.total(), 16);
        assert_eq!(dist.nonzero_weights(), vec![6, 8]);
        assert_eq!(s.min_lee_distance(1 << 10).unwrap(), 6);
        assert_eq!(dist.min_nonzero_weight(), Some(6));
        assert_eq!(dist.weighted_sum(), 6 * 12 + 8 * 3);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let s = standard(&[vec![1, 0], vec![0, 1]]);
        assert!(matches!(
            s.weight_distribution(15),
            Err(Error::EnumerationLimit {
                required: 16,
                cap: 15
            })
        ));
        assert!(s.weight_distribution(16).is_ok());
        assert!(matches!(
            s.min_lee_distance(1),
            Err(Error::EnumerationLimit { .. })
        ));
    }

    #[test]
    fn dual_of_full_space_is_trivial() {
        let s = standard(&[vec![1, 0], vec![0, 1]]);
        let dual = s.dual().unwrap();
        assert!(dual.is_trivial());
        assert_eq!(dual.size(), 1);
        assert_eq!(dual.length(), 2);
        assert!(matches!(
            dual.min_lee_distance(1 << 10),
            Err(Error::UndefinedDistance)
        ));
    }

    #[test]
    fn dual_of_the_two_code_is_itself() {
        // C = {0, 2} in Z4^1: self-dual.
        let s = standard(&[vec![2]]);
        let dual = s.dual().unwrap();
        let form = dual.standard_form().unwrap();
        assert_eq!((form.k1(), form.k2()), (0, 1));
        assert_eq!(form.matrix().row(0).digits(), vec![2]);
    }

    #[test]
    fn dual_is_orthogonal_and_has_complementary_size() {
        let cases: &[&[Vec<u8>]] = &[
            &[vec![1, 1, 1], vec![0, 2, 2]],
            &[vec![1, 2, 3, 0]],
            &[vec![2, 2], vec![0, 2]],
            &[vec![1, 3, 2, 1, 0], vec![0, 2, 2, 0, 2], vec![1, 1, 1, 1, 1]],
            &[vec![1, 0, 0, 3, 3], vec![0, 1, 0, 2, 1], vec![0, 0, 1, 2, 2]],
        ];
        for rows in cases {
            let s = standard(rows);
            let n = s.n();
            let dual = s.dual().unwrap();
            assert_eq!(
                s.size() * dual.size(),
                1u128 << (2 * n),
                "size product for {rows:?}"
            );
            if let Some(dform) = dual.standard_form() {
                let dgen = dform.generator_in_original_order();
                let cgen = s.generator_in_original_order();
                for crow in cgen.rows() {
                    for drow in dgen.rows() {
                        assert_eq!(
                            crow.inner_product(drow).unwrap(),
                            Z4::ZERO,
                            "non-orthogonal rows for {rows:?}"
                        );
                    }
                }
                // Every dual codeword is orthogonal to every code row
                // (spot-check the full dual for small cases).
                if dform.size() <= 256 {
                    for dword in dform.codewords() {
                        let back = dform.standard_to_original();
                        let mut digits = vec![0u8; n];
                        for (p, &orig) in back.iter().enumerate() {
                            digits[orig] = dword.get(p).value();
                        }
                        let dorig = Z4Vector::from_digits(&digits);
                        for crow in cgen.rows() {
                            assert_eq!(crow.inner_product(&dorig).unwrap(), Z4::ZERO);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn double_dual_returns_the_code() {
        let cases: &[&[Vec<u8>]] = &[
            &[vec![1, 1, 1], vec![0, 2, 2]],
            &[vec![2, 0, 2]],
            &[vec![1, 2, 3, 0], vec![0, 0, 2, 2]],
        ];
        for rows in cases {
            let s = standard(rows);
            let dual = s.dual().unwrap();
            let form = dual.standard_form().expect("not all of Z4^n");
            let double = form.dual().unwrap();
            let dd = double.standard_form().expect("nontrivial");
            assert_eq!(dd.size(), s.size());
            let original: BTreeSet<Vec<u8>> = collect_original_words(&s);
            let roundtrip: BTreeSet<Vec<u8>> = collect_original_words(dd);
            assert_eq!(original, roundtrip, "double dual changed the code");
        }
    }

    fn collect_original_words(s: &StandardForm) -> BTreeSet<Vec<u8>> {
        let back = s.standard_to_original();
        s.codewords()
            .map(|w| {
                let mut digits = vec![0u8; s.n()];
                for (p, &orig) in back.iter().enumerate() {
                    digits[orig] = w.get(p).value();
                }
                digits
            })
            .collect()
    }

    #[test]
    fn pure_order_two_code_enumerates_correctly() {
        // k1 = 0 path of the odometer.
        let s = standard(&[vec![2, 0, 2], vec![0, 2, 2]]);
        assert_eq!((s.k1(), s.k2()), (0, 2));
        let words: BTreeSet<Vec<u8>> = s.codewords().map(|w| w.digits()).collect();
        assert_eq!(words.len(), 4);
        assert!(words.contains(&vec![0, 0, 0]));
        let dist = s.weight_distribution(16).unwrap();
        assert_eq!(dist.total(), 4);
        assert_eq!(s.min_lee_distance(16).unwrap(), 4);
    }

    #[test]
    fn distribution_builder_helpers() {
        let mut d = WeightDistribution::new();
        d.add(0, 1);
        d.add(4, 6);
        d.add(4, 1);
        d.add(9, 0); // no-op
        assert_eq!(d.count(4), 7);
        assert_eq!(d.total(), 8);
        assert_eq!(d.nonzero_weights(), vec![4]);
        let via_hist = WeightDistribution::from_histogram(&[1, 0, 0, 0, 7]);
        assert_eq!(d, via_hist);
    }
}
