//! Syndrome (coset) graphs and exact strong-regularity verification.
//!
//! For a code of type `4^{k1} 2^{k2}` presented in standard form, the
//! quotient `Z4^n / C_dual` is isomorphic to the syndrome group
//! `Z4^{k1} x (2Z4)^{k2}`, and cosets at Lee distance 1 differ by a column
//! of the standard-form generator, up to sign. The syndrome graph is the
//! Cayley graph on the syndrome group with connection set
//! `{+-column} - {0}`; its degree equals `2n` exactly when the code is
//! projective.
//!
//! There are several inequivalent "syndrome graph" definitions in the
//! literature; this weight-1-error-coset realization is the one whose
//! parameters provably match the classification of Plotkin-optimal
//! two-weight projective codes. Its eigenvalues are Cayley-graph character
//! sums, `2n - 2w` for each nonzero Lee weight `w` of the code, so a
//! two-weight code with `w1 = n` yields exactly `{2n - 2*w2, 0}` as
//! restricted eigenvalues.
//!
//! [`verify_srg`] decides strong regularity by verifying the polynomial
//! identity `A^2 = k*I + lambda*A + mu*(J - I - A)` entrywise in exact
//! integers: the diagonal entries of `A^2` are the vertex degrees
//! (regularity check) and the off-diagonal entries are common-neighbor
//! counts, accumulated with bitset intersections and required to be a
//! constant `lambda` on adjacent pairs and `mu` on non-adjacent pairs.
//! For strongly regular graphs it derives the (integer) spectrum exactly
//! from `(v, k, lambda, mu)` and recognizes complete multipartite
//! structure `K_{a x m}` by comparing non-adjacency classes.
//! Plotkin-optimal two-weight projective codes of parameter `t` must
//! produce `K_{a x m}` with `a = 2^t` parts of size `m = 2^{2k1+k2-t}` and
//! spectrum `{(a-1)m, 0, -m}`; [`family_srg_claim`] builds that
//! expectation and [`SrgClaim::check`] compares it against a verified
//! graph.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::StandardForm;

const LO32: u32 = 0x5555_5555;

/// Lanewise sum of two packed syndrome keys in `Z4^16`.
#[inline]
fn key_add(a: u32, b: u32) -> u32 {
    a ^ b ^ ((a & b & LO32) << 1)
}

/// Lanewise negation of a packed syndrome key.
#[inline]
fn key_neg(v: u32) -> u32 {
    v ^ ((v & LO32) << 1)
}

/// The syndrome graph of a standard-form code.
pub struct SyndromeGraph {
    k1: usize,
    k2: usize,
    vertex_count: usize,
    words_per_row: usize,
    adjacency: Vec<u64>,
    connection: Vec<u32>,
}

/// Builds the syndrome graph, refusing to materialize more than
/// `vertex_cap` vertices.
pub fn syndrome_graph(form: &StandardForm, vertex_cap: u128) -> Result<SyndromeGraph> {
    let k1 = form.k1();
    let k2 = form.k2();
    let k = k1 + k2;
    if k > 16 {
        return Err(Error::BudgetExceeded {
            what: "syndrome group coordinates",
            required: k as u128,
            limit: 16,
        });
    }
    let size = form.size();
    if size > vertex_cap {
        return Err(Error::BudgetExceeded {
            what: "syndrome graph vertices",
            required: size,
            limit: vertex_cap,
        });
    }
    let vertex_count = size as usize;

    // Connection set: the standard-form columns and their negatives,
    // deduplicated, without zero.
    let mut connection: BTreeSet<u32> = BTreeSet::new();
    for j in 0..form.n() {
        let key = crate::matrix::pack_column(&form.matrix().column_digits(j));
        if key != 0 {
            connection.insert(key);
            connection.insert(key_neg(key));
        }
    }
    let connection: Vec<u32> = connection.into_iter().collect();

    let words_per_row = vertex_count.div_ceil(64);
    let mut adjacency = vec![0u64; vertex_count * words_per_row];
    for u in 0..vertex_count {
        let base = u * words_per_row;
        let key_u = key_of_index(u, k1, k2);
        for &c in &connection {
            let w = index_of_key(key_add(key_u, c), k1, k2);
            adjacency[base + w / 64] |= 1u64 << (w % 64);
        }
    }
    Ok(SyndromeGraph {
        k1,
        k2,
        vertex_count,
        words_per_row,
        adjacency,
        connection,
    })
}

/// Vertex index -> packed syndrome key: `k1` base-4 digits, then `k2`
/// binary digits placed as `{0, 2}` coordinates.
fn key_of_index(index: usize, k1: usize, k2: usize) -> u32 {
    let unit_mask = ((1u64 << (2 * k1)) - 1) as u32;
    let mut key = (index as u32) & unit_mask;
    for b in 0..k2 {
        let bit = (index >> (2 * k1 + b)) & 1;
        key |= (bit as u32) << (2 * (k1 + b) + 1);
    }
    key
}

/// Packed syndrome key -> vertex index (inverse of [`key_of_index`]).
fn index_of_key(key: u32, k1: usize, k2: usize) -> usize {
    let unit_mask = ((1u64 << (2 * k1)) - 1) as usize;
    let mut index = (key as usize) & unit_mask;
    for b in 0..k2 {
        debug_assert_eq!((key >> (2 * (k1 + b))) & 1, 0, "odd coordinate in 2Z4 slot");
        let bit = (key as usize >> (2 * (k1 + b) + 1)) & 1;
        index |= bit << (2 * k1 + b);
    }
    index
}

impl SyndromeGraph {
    /// Number of vertices, `4^{k1} 2^{k2}`.
    #[inline]
    pub fn vertices(&self) -> usize {
        self.vertex_count
    }

    /// The deduplicated connection set (packed syndrome keys).
    #[inline]
    pub fn connection_set(&self) -> &[u32] {
        &self.connection
    }

    /// Degree of one vertex.
    pub fn degree_of(&self, v: usize) -> u64 {
        self.row(v).iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Whether `u` and `v` are adjacent.
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    /// Visits every edge once, as `(u, v)` with `u < v`, ascending.
    pub fn for_each_edge(&self, mut visit: impl FnMut(usize, usize)) {
        for u in 0..self.vertex_count {
            for v in u + 1..self.vertex_count {
                if self.is_adjacent(u, v) {
                    visit(u, v);
                }
            }
        }
    }

    /// Number of edges.
    pub fn edge_count(&self) -> u128 {
        let twice: u128 = (0..self.vertex_count)
            .map(|v| self.degree_of(v) as u128)
            .sum();
        twice / 2
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adjacency[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    /// The syndrome group type the graph was built over.
    pub fn group_type(&self) -> (usize, usize) {
        (self.k1, self.k2)
    }
}

/// The four parameters of a strongly regular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SrgParams {
    /// Vertices.
    pub v: u128,
    /// Degree.
    pub k: u128,
    /// Common neighbors of adjacent pairs.
    pub lambda: u128,
    /// Common neighbors of non-adjacent pairs.
    pub mu: u128,
}

/// The outcome of exact strong-regularity verification.
#[derive(Clone, Debug)]
pub struct SrgVerdict {
    /// Whether the graph is strongly regular (complete and empty graphs are
    /// rejected as degenerate).
    pub is_srg: bool,
    /// The parameters, when strongly regular.
    pub params: Option<SrgParams>,
    /// Integer spectrum `[(eigenvalue, multiplicity); 3]`, largest first,
    /// when strongly regular with an integral spectrum.
    pub spectrum: Option<[(i128, u128); 3]>,
    /// `(parts, part size)` when the graph is complete multipartite.
    pub multipartite: Option<(u128, u128)>,
    /// Why verification failed, when it did.
    pub failure: Option<String>,
}

/// Verifies strong regularity by definition: regularity, then an exact
/// common-neighbor count over every vertex pair.
pub fn verify_srg(graph: &SyndromeGraph) -> SrgVerdict {
    let v = graph.vertices();
    let fail = |message: String| SrgVerdict {
        is_srg: false,
        params: None,
        spectrum: None,
        multipartite: multipartite_structure(graph),
        failure: Some(message),
    };
    if v < 2 {
        return fail(String::from("graph has fewer than two vertices"));
    }

    let degree = graph.degree_of(0);
    for u in 1..v {
        let d = graph.degree_of(u);
        if d != degree {
            return fail(format!(
                "not regular: vertex 0 has degree {degree}, vertex {u} has {d}"
            ));
        }
    }
    if degree == 0 {
        return fail(String::from("graph is empty"));
    }
    if degree as usize == v - 1 {
        return fail(String::from("graph is complete"));
    }

    let mut lambda: Option<u64> = None;
    let mut mu: Option<u64> = None;
    for u in 0..v {
        let row_u = graph.row(u);
        for w in u + 1..v {
            let common: u64 = row_u
                .iter()
                .zip(graph.row(w))
                .map(|(&a, &b)| (a & b).count_ones() as u64)
                .sum();
            let slot = if graph.is_adjacent(u, w) {
                &mut lambda
            } else {
                &mut mu
            };
            match slot {
                None => *slot = Some(common),
                Some(expected) if *expected != common => {
                    return fail(format!(
                        "common-neighbor count of pair ({u}, {w}) is {common}, \
                         earlier pairs gave {expected}"
                    ));
                }
                _ => {}
            }
        }
    }
    // degree >= 1 and not complete imply both pair kinds exist.
    let lambda = lambda.expect("some adjacent pair") as u128;
    let mu = mu.expect("some non-adjacent pair") as u128;
    let params = SrgParams {
        v: v as u128,
        k: degree as u128,
        lambda,
        mu,
    };
    // Double counting of paths of length two out of a fixed vertex forces
    // this feasibility identity; it cannot fail if the scans above were
    // consistent.
    debug_assert_eq!(
        params.k * (params.k - params.lambda - 1),
        (params.v - params.k - 1) * params.mu
    );
    SrgVerdict {
        is_srg: true,
        params: Some(params),
        spectrum: integral_spectrum(&params),
        multipartite: multipartite_structure(graph),
        failure: None,
    }
}

/// The exact integer spectrum of an SRG with the given parameters, or
/// `None` when the restricted eigenvalues are irrational.
fn integral_spectrum(p: &SrgParams) -> Option<[(i128, u128); 3]> {
    let (v, k, lambda, mu) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    let delta = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
    if delta < 0 {
        return None;
    }
    let d = (delta as u128).isqrt() as i128;
    if d * d != delta || d == 0 {
        // d == 0 would merge the restricted eigenvalues; that happens only
        // for disjoint unions handled elsewhere, and conference-like graphs
        // have irrational eigenvalues.
        return None;
    }
    if (lambda - mu + d) % 2 != 0 {
        return None;
    }
    let r = (lambda - mu + d) / 2;
    let s = (lambda - mu - d) / 2;
    // Multiplicities from the trace conditions f + g = v - 1 and
    // k + f r + g s = 0.
    let numerator = k + (v - 1) * r;
    if numerator % d != 0 {
        return None;
    }
    let g = numerator / d;
    let f = v - 1 - g;
    if f < 0 || g < 0 {
        return None;
    }
    debug_assert_eq!(k + f * r + g * s, 0);
    Some([(k, 1), (r, f as u128), (s, g as u128)])
}

/// Recognizes complete multipartite graphs `K_{a x m}`: the relation
/// "equal or non-adjacent" must be an equivalence with classes of one
/// common size `m >= 1`, and `a >= 2` classes.
fn multipartite_structure(graph: &SyndromeGraph) -> Option<(u128, u128)> {
    let v = graph.vertices();
    let wpr = graph.words_per_row;
    let tail_mask = if v % 64 == 0 {
        u64::MAX
    } else {
        (1u64 << (v % 64)) - 1
    };
    let class_of = |u: usize| -> Vec<u64> {
        let mut class: Vec<u64> = graph.row(u).iter().map(|&w| !w).collect();
        class[wpr - 1] &= tail_mask;
        class
    };
    let mut assigned = vec![false; v];
    let mut class_size: Option<usize> = None;
    let mut classes = 0u128;
    for u in 0..v {
        if assigned[u] {
            continue;
        }
        let class = class_of(u);
        let size: usize = class.iter().map(|w| w.count_ones() as usize).sum();
        if *class_size.get_or_insert(size) != size {
            return None;
        }
        classes += 1;
        for w in u..v {
            if (class[w / 64] >> (w % 64)) & 1 == 1 {
                if assigned[w] || class_of(w) != class {
                    return None;
                }
                assigned[w] = true;
            }
        }
    }
    let m = class_size? as u128;
    (classes >= 2 && m >= 1).then_some((classes, m))
}

/// What the syndrome graph of a Plotkin-optimal two-weight projective code
/// with parameters `(k1, k2, t)` must look like.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgClaim {
    /// Expected SRG parameters.
    pub params: SrgParams,
    /// Expected spectrum, largest eigenvalue first.
    pub spectrum: [(i128, u128); 3],
    /// Expected complete multipartite shape `(parts, part size)`.
    pub multipartite: (u128, u128),
}

/// Builds the claim for family parameters `(k1, k2, t)`: the graph is
/// `K_{a x m}` with `a = 2^t` parts of size `m = 2^{2k1+k2-t}`.
pub fn family_srg_claim(k1: usize, k2: usize, t: usize) -> Result<SrgClaim> {
    if t == 0 || t > k1 {
        return Err(Error::InvalidParameter {
            what: format!("family parameter t={t} must satisfy 1 <= t <= k1={k1}"),
        });
    }
    let e = 2 * k1 + k2;
    if e > 100 {
        return Err(Error::TypeTooLarge { k1, k2 });
    }
    let a = 1u128 << t;
    let m = 1u128 << (e - t);
    let v = 1u128 << e;
    let k = (a - 1) * m;
    Ok(SrgClaim {
        params: SrgParams {
            v,
            k,
            lambda: (a - 2) * m,
            mu: (a - 1) * m,
        },
        spectrum: [
            (k as i128, 1),
            (0, a * (m - 1)),
            (-(m as i128), a - 1),
        ],
        multipartite: (a, m),
    })
}

impl SrgClaim {
    /// Compares a verified graph against this claim; returns the first
    /// discrepancy as text.
    pub fn check(&self, verdict: &SrgVerdict) -> core::result::Result<(), String> {
        if !verdict.is_srg {
            return Err(match &verdict.failure {
                Some(why) => format!("graph is not strongly regular: {why}"),
                None => String::from("graph is not strongly regular"),
            });
        }
        let params = verdict.params.as_ref().expect("SRG has parameters");
        if *params != self.params {
            return Err(format!(
                "parameters {params:?} do not match the claim {:?}",
                self.params
            ));
        }
        match &verdict.spectrum {
            Some(spectrum) if *spectrum == self.spectrum => {}
            other => {
                return Err(format!(
                    "spectrum {other:?} does not match the claim {:?}",
                    self.spectrum
                ))
            }
        }
        match verdict.multipartite {
            Some(shape) if shape == self.multipartite => {}
            other => {
                return Err(format!(
                    "multipartite shape {other:?} does not match the claim {:?}",
                    self.multipartite
                ))
            }
        }
        Ok(())
    }
}
