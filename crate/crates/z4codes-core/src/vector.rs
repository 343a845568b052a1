//! Bit-packed vectors over `Z4` and their binary Gray images.
//!
//! A [`Z4Vector`] stores 32 entries per `u64` word, two bits per entry:
//! entry `i` occupies bits `2i` (low bit `v0`) and `2i + 1` (high bit `v1`),
//! so the entry value is `2*v1 + v0`. All ring operations are word-parallel
//! and branch-free:
//!
//! * addition: `a ^ b ^ ((a & b & LO) << 1)` — the carry out of each low bit
//!   is injected into the high bit and the carry out of the high bit is
//!   discarded, which is exactly arithmetic mod 4 in every lane;
//! * negation: `v ^ ((v & LO) << 1)` — flips the high bit of odd lanes only
//!   (`-1 = 3`, `-3 = 1`, `-2 = 2`, `-0 = 0`);
//! * doubling: `(v & LO) << 1`;
//! * Lee weight: `popcount(v1) + popcount(v0 ^ v1)` per word, because the
//!   lane weights `0,1,2,1` decompose as `v1 + (v0 xor v1)`.
//!
//! The Gray map sends lane `v` to the bit pair `(v1, v0 ^ v1)`, i.e.
//! `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`, and is implemented one word at a
//! time (32 `Z4` lanes in, 64 bits out). It is an isometry from Lee distance
//! on `Z4^n` to Hamming distance on `F2^{2n}`.
//!
//! Invariant: bits beyond `2 * len` in the last word are always zero. Every
//! operation preserves this (carries never cross lane boundaries), so
//! weights and equality never need tail masking.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::z4::Z4;

/// Mask of all low lane bits (bit `2i` for every lane `i`).
const LO: u64 = 0x5555_5555_5555_5555;
/// `Z4` lanes per `u64` word.
const LANES: usize = 32;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(LANES)
}

/// Word-level addition in `Z4^32`.
#[inline]
fn word_add(a: u64, b: u64) -> u64 {
    a ^ b ^ ((a & b & LO) << 1)
}

/// Word-level negation in `Z4^32`.
#[inline]
fn word_neg(v: u64) -> u64 {
    v ^ ((v & LO) << 1)
}

/// Word-level doubling in `Z4^32`.
#[inline]
fn word_double(v: u64) -> u64 {
    (v & LO) << 1
}

/// Lee weight of one packed word.
#[inline]
fn word_lee_weight(v: u64) -> u32 {
    let hi = (v >> 1) & LO;
    let lo = v & LO;
    hi.count_ones() + (lo ^ hi).count_ones()
}

/// A vector over `Z4`, packed two bits per entry.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4Vector {
    words: Vec<u64>,
    len: usize,
}

impl Z4Vector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Z4Vector {
        Z4Vector {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// Builds a vector from integer digits; values are reduced mod 4.
    pub fn from_digits(digits: &[u8]) -> Z4Vector {
        let mut v = Z4Vector::zeros(digits.len());
        for (i, &d) in digits.iter().enumerate() {
            v.set(i, Z4::new(d));
        }
        v
    }

    /// The digits as plain bytes in `0..=3`.
    pub fn digits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i).value()).collect()
    }

    /// Number of entries.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the vector has no entries.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry `i`.
    #[inline]
    pub fn get(&self, i: usize) -> Z4 {
        debug_assert!(i < self.len);
        let w = self.words[i / LANES];
        Z4::new(((w >> (2 * (i % LANES))) & 3) as u8)
    }

    /// Sets entry `i`.
    #[inline]
    pub fn set(&mut self, i: usize, value: Z4) {
        debug_assert!(i < self.len);
        let shift = 2 * (i % LANES);
        let w = &mut self.words[i / LANES];
        *w = (*w & !(3u64 << shift)) | ((value.value() as u64) << shift);
    }

    /// Iterates over the entries.
    pub fn iter(&self) -> impl Iterator<Item = Z4> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// The Lee weight: the sum of the entry weights `0,1,2,1`.
    pub fn lee_weight(&self) -> u64 {
        self.words
            .iter()
            .map(|&w| word_lee_weight(w) as u64)
            .sum()
    }

    /// Entrywise sum in `Z4^n`.
    pub fn add(&self, other: &Z4Vector) -> Result<Z4Vector> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.add_assign_raw(other);
        Ok(out)
    }

    /// Entrywise difference in `Z4^n`.
    pub fn sub(&self, other: &Z4Vector) -> Result<Z4Vector> {
        self.check_len(other)?;
        let mut out = other.negate();
        out.add_assign_raw(self);
        Ok(out)
    }

    /// Entrywise negation.
    pub fn negate(&self) -> Z4Vector {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = word_neg(*w);
        }
        out
    }

    /// Entrywise scalar multiple.
    pub fn scaled(&self, scalar: Z4) -> Z4Vector {
        match scalar.value() {
            0 => Z4Vector::zeros(self.len),
            1 => self.clone(),
            2 => {
                let mut out = self.clone();
                for w in &mut out.words {
                    *w = word_double(*w);
                }
                out
            }
            _ => self.negate(),
        }
    }

    /// In-place `self += other` without a length check (lengths must match).
    #[inline]
    pub(crate) fn add_assign_raw(&mut self, other: &Z4Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, &b) in self.words.iter_mut().zip(&other.words) {
            *a = word_add(*a, b);
        }
    }

    /// In-place `self += scalar * other`.
    pub(crate) fn add_scaled_assign(&mut self, other: &Z4Vector, scalar: Z4) {
        debug_assert_eq!(self.len, other.len);
        match scalar.value() {
            0 => {}
            1 => self.add_assign_raw(other),
            2 => {
                for (a, &b) in self.words.iter_mut().zip(&other.words) {
                    *a = word_add(*a, word_double(b));
                }
            }
            _ => {
                for (a, &b) in self.words.iter_mut().zip(&other.words) {
                    *a = word_add(*a, word_neg(b));
                }
            }
        }
    }

    /// Lee distance `w_L(self - other)`.
    pub fn lee_distance(&self, other: &Z4Vector) -> Result<u64> {
        self.check_len(other)?;
        let mut total = 0u64;
        for (&a, &b) in self.words.iter().zip(&other.words) {
            total += word_lee_weight(word_add(a, word_neg(b))) as u64;
        }
        Ok(total)
    }

    /// The Euclidean inner product `sum_i self_i * other_i` in `Z4`.
    pub fn inner_product(&self, other: &Z4Vector) -> Result<Z4> {
        self.check_len(other)?;
        // Lanewise product of x = 2*x1 + x0 and y = 2*y1 + y0 mod 4 is
        // 2*(x1*y0 + x0*y1) + x0*y0, so the sum splits into a popcount of
        // low-bit products plus twice a parity-weighted popcount.
        let mut lo_count = 0u64;
        let mut hi_count = 0u64;
        for (&x, &y) in self.words.iter().zip(&other.words) {
            let xl = x & LO;
            let xh = (x >> 1) & LO;
            let yl = y & LO;
            let yh = (y >> 1) & LO;
            lo_count += (xl & yl).count_ones() as u64;
            hi_count += ((xh & yl) ^ (xl & yh)).count_ones() as u64;
        }
        Ok(Z4::new(((lo_count + 2 * hi_count) & 3) as u8))
    }

    /// The Gray image in `F2^{2n}`: entry `i` maps to bits `2i` and `2i+1`
    /// of the output, as the pair `(v1, v0 xor v1)`.
    pub fn gray_map(&self) -> BinaryVector {
        let bits: Vec<u64> = self
            .words
            .iter()
            .map(|&w| {
                let hi = (w >> 1) & LO;
                let lo = w & LO;
                hi | ((lo ^ hi) << 1)
            })
            .collect();
        BinaryVector {
            words: bits,
            len: 2 * self.len,
        }
    }

    /// Concatenates two vectors.
    pub fn concat(&self, other: &Z4Vector) -> Z4Vector {
        let mut digits = self.digits();
        digits.extend_from_slice(&other.digits());
        Z4Vector::from_digits(&digits)
    }

    #[inline]
    fn check_len(&self, other: &Z4Vector) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Vector[")?;
        for (i, d) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// A vector over `F2`, one bit per entry (64 per word), used for Gray images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryVector {
    words: Vec<u64>,
    len: usize,
}

impl BinaryVector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> BinaryVector {
        BinaryVector {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// Builds a vector from bits; values are reduced mod 2.
    pub fn from_bits(bits: &[u8]) -> BinaryVector {
        let mut v = BinaryVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.words[i / 64] |= 1u64 << (i % 64);
            }
        }
        v
    }

    /// The bits as plain bytes in `0..=1`.
    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Number of entries.
    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the vector has no entries.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Bit `i` as `0` or `1`.
    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.words[i / 64] >> (i % 64)) & 1) as u8
    }

    /// The Hamming weight.
    pub fn hamming_weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Entrywise xor.
    pub fn xor(&self, other: &BinaryVector) -> Result<BinaryVector> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(BinaryVector {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| a ^ b)
                .collect(),
            len: self.len,
        })
    }

    /// Hamming distance.
    pub fn hamming_distance(&self, other: &BinaryVector) -> Result<u64> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a ^ b).count_ones() as u64)
            .sum())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector[")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_lee_weight(digits: &[u8]) -> u64 {
        digits.iter().map(|&d| [0u64, 1, 2, 1][d as usize % 4]).sum()
    }

    #[test]
    fn weight_of_worked_examples() {
        // w_L(1 2 3 0) = 1 + 2 + 1 + 0 = 4.
        assert_eq!(Z4Vector::from_digits(&[1, 2, 3, 0]).lee_weight(), 4);
        assert_eq!(Z4Vector::zeros(10).lee_weight(), 0);
        assert_eq!(Z4Vector::from_digits(&[2; 5]).lee_weight(), 10);
    }

    #[test]
    fn distance_examples() {
        let a = Z4Vector::from_digits(&[1, 2, 3, 0]);
        let b = Z4Vector::from_digits(&[3, 2, 1, 1]);
        // differences: -2=2, 0, 2, -1=3 -> weights 2 + 0 + 2 + 1 = 5.
        assert_eq!(a.lee_distance(&b).unwrap(), 5);
        assert_eq!(b.lee_distance(&a).unwrap(), 5);
        assert_eq!(a.lee_distance(&a).unwrap(), 0);
    }

    #[test]
    fn gray_images_of_scalars() {
        // phi(0)=00, phi(1)=01, phi(2)=11, phi(3)=10 as (bit 2i, bit 2i+1).
        for (d, pair) in [(0u8, [0u8, 0]), (1, [0, 1]), (2, [1, 1]), (3, [1, 0])] {
            let g = Z4Vector::from_digits(&[d]).gray_map();
            assert_eq!(g.bits(), pair, "digit {d}");
        }
    }

    #[test]
    fn gray_is_weight_preserving_exhaustive_n3() {
        for x in 0u32..64 {
            let digits: Vec<u8> = (0..3).map(|j| ((x >> (2 * j)) & 3) as u8).collect();
            let v = Z4Vector::from_digits(&digits);
            assert_eq!(v.lee_weight(), v.gray_map().hamming_weight());
        }
    }

    #[test]
    fn gray_is_isometry_exhaustive_pairs_n2() {
        let all: Vec<Z4Vector> = (0u32..16)
            .map(|x| Z4Vector::from_digits(&[(x & 3) as u8, ((x >> 2) & 3) as u8]))
            .collect();
        for a in &all {
            for b in &all {
                let lee = a.lee_distance(b).unwrap();
                let ham = a
                    .gray_map()
                    .hamming_distance(&b.gray_map())
                    .unwrap();
                assert_eq!(lee, ham, "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let a = Z4Vector::from_digits(&[1, 2, 3]);
        let b = Z4Vector::from_digits(&[1, 1, 1]);
        // 1 + 2 + 3 = 6 = 2 mod 4.
        assert_eq!(a.inner_product(&b).unwrap(), Z4::TWO);
        let c = Z4Vector::from_digits(&[2, 3, 0]);
        // 1*2 + 2*3 + 0 = 8 = 0 mod 4.
        assert_eq!(a.inner_product(&c).unwrap(), Z4::ZERO);
        assert_eq!(
            Z4Vector::zeros(3).inner_product(&a).unwrap(),
            Z4::ZERO
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = Z4Vector::zeros(3);
        let b = Z4Vector::zeros(4);
        assert!(matches!(
            a.add(&b),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        ));
        assert!(a.inner_product(&b).is_err());
        assert!(a.lee_distance(&b).is_err());
    }

    #[test]
    fn long_vectors_cross_word_boundaries() {
        // 70 entries spans three words; make sure lane ops stay in-lane.
        let digits: Vec<u8> = (0..70).map(|i| (i % 4) as u8).collect();
        let v = Z4Vector::from_digits(&digits);
        assert_eq!(v.digits(), digits);
        assert_eq!(v.lee_weight(), naive_lee_weight(&digits));
        let w = v.add(&v).unwrap();
        let expect: Vec<u8> = digits.iter().map(|&d| (2 * d) % 4).collect();
        assert_eq!(w.digits(), expect);
    }

    proptest! {
        #[test]
        fn packed_add_matches_digitwise(a in proptest::collection::vec(0u8..4, 0..100),
                                        seed in any::<u64>()) {
            let b: Vec<u8> = a.iter().enumerate()
                .map(|(i, _)| ((seed >> (i % 61)) & 3) as u8)
                .collect();
            let va = Z4Vector::from_digits(&a);
            let vb = Z4Vector::from_digits(&b);
            let sum = va.add(&vb).unwrap();
            let expect: Vec<u8> = a.iter().zip(&b).map(|(&x, &y)| (x + y) % 4).collect();
            prop_assert_eq!(sum.digits(), expect);
        }

        #[test]
        fn packed_sub_neg_scale_match_digitwise(a in proptest::collection::vec(0u8..4, 1..80)) {
            let v = Z4Vector::from_digits(&a);
            let neg: Vec<u8> = a.iter().map(|&x| (4 - x) % 4).collect();
            prop_assert_eq!(v.negate().digits(), neg);
            for s in 0u8..4 {
                let scaled: Vec<u8> = a.iter().map(|&x| (s * x) % 4).collect();
                prop_assert_eq!(v.scaled(Z4::new(s)).digits(), scaled);
            }
            let zero = v.sub(&v).unwrap();
            prop_assert!(zero.is_zero());
        }

        #[test]
        fn packed_weight_and_inner_match_digitwise(
            a in proptest::collection::vec(0u8..4, 1..80),
            b_seed in any::<u64>(),
        ) {
            let b: Vec<u8> = a.iter().enumerate()
                .map(|(i, _)| ((b_seed >> ((3 * i) % 59)) & 3) as u8)
                .collect();
            let va = Z4Vector::from_digits(&a);
            let vb = Z4Vector::from_digits(&b);
            prop_assert_eq!(va.lee_weight(), naive_lee_weight(&a));
            let ip: u32 = a.iter().zip(&b).map(|(&x, &y)| (x as u32) * (y as u32)).sum();
            prop_assert_eq!(va.inner_product(&vb).unwrap(), Z4::new((ip % 4) as u8));
        }

        #[test]
        fn gray_is_isometry_random(
            a in proptest::collection::vec(0u8..4, 1..64),
            b_seed in any::<u64>(),
        ) {
            let b: Vec<u8> = a.iter().enumerate()
                .map(|(i, _)| ((b_seed >> ((5 * i) % 57)) & 3) as u8)
                .collect();
            let va = Z4Vector::from_digits(&a);
            let vb = Z4Vector::from_digits(&b);
            prop_assert_eq!(
                va.lee_distance(&vb).unwrap(),
                va.gray_map().hamming_distance(&vb.gray_map()).unwrap()
            );
        }

        #[test]
        fn triangle_inequality(
            a in proptest::collection::vec(0u8..4, 1..40),
            s1 in any::<u64>(),
            s2 in any::<u64>(),
        ) {
            let b: Vec<u8> = a.iter().enumerate().map(|(i, _)| ((s1 >> (i % 61)) & 3) as u8).collect();
            let c: Vec<u8> = a.iter().enumerate().map(|(i, _)| ((s2 >> (i % 53)) & 3) as u8).collect();
            let (va, vb, vc) = (
                Z4Vector::from_digits(&a),
                Z4Vector::from_digits(&b),
                Z4Vector::from_digits(&c),
            );
            let ab = va.lee_distance(&vb).unwrap();
            let bc = vb.lee_distance(&vc).unwrap();
            let ac = va.lee_distance(&vc).unwrap();
            prop_assert!(ac <= ab + bc);
        }
    }

    #[test]
    fn binary_vector_basics() {
        let v = BinaryVector::from_bits(&[1, 0, 1, 1]);
        assert_eq!(v.hamming_weight(), 3);
        assert_eq!(v.bits(), vec![1, 0, 1, 1]);
        let w = BinaryVector::from_bits(&[1, 1, 0, 1]);
        assert_eq!(v.hamming_distance(&w).unwrap(), 2);
        let x = v.xor(&w).unwrap();
        assert_eq!(x.bits(), vec![0, 1, 1, 0]);
        assert!(BinaryVector::zeros(5).xor(&BinaryVector::zeros(4)).is_err());
    }

    #[test]
    fn concat_appends() {
        let a = Z4Vector::from_digits(&[1, 2]);
        let b = Z4Vector::from_digits(&[3]);
        assert_eq!(a.concat(&b).digits(), vec![1, 2, 3]);
    }
}
