//! Order complexes, boundary matrices, Betti numbers, and the Grassmannian
//! mod-2 oracle.
//!
//! GF(2) Betti numbers come from boundary-matrix ranks:
//! `β_p = f_p - rank ∂_p - rank ∂_{p+1}`. Small complexes use dense bitset
//! elimination; large ones switch to sparse column reduction with the
//! clearing optimization (pivot rows of `∂_{d+1}` mark columns of `∂_d`
//! that reduce to zero). Integral homology runs Smith normal form under an
//! explicit simplex budget and reports torsion coefficients.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::gf2::{reduce_columns, BitMatrix};
use crate::macph::Poset;
use crate::snf::smith_diagonal;
use num_bigint::BigInt;
use num_traits::One;

/// Default simplex budget for integral homology.
pub const DEFAULT_INTEGER_BUDGET: usize = 200_000;

/// Above this total simplex count, GF(2) ranks switch to the sparse engine.
const DENSE_LIMIT: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("complex has {total} simplices, over the budget of {budget}")]
    BudgetExceeded { total: usize, budget: usize },
}

/// An abstract simplicial complex. Simplices of dimension `d` are stored as
/// a flat array with stride `d+1`, each simplex a strictly ascending vertex
/// tuple, the tuples sorted lexicographically and duplicate-free.
pub struct SimplicialComplex {
    slabs: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    fn from_slabs(slabs: Vec<Vec<u32>>) -> SimplicialComplex {
        SimplicialComplex { slabs }
    }

    /// Builds the face closure of a set of maximal simplices (fixture-scale;
    /// vertex tuples need not be sorted).
    pub fn from_maximal(maximal: &[Vec<u32>]) -> SimplicialComplex {
        let mut per_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for simplex in maximal {
            let mut sorted = simplex.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let k = sorted.len();
            assert!(k > 0, "empty simplex");
            // every nonempty subset is a face
            for mask in 1u64..(1 << k) {
                let face: Vec<u32> = (0..k)
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| sorted[b])
                    .collect();
                let d = face.len() - 1;
                while per_dim.len() <= d {
                    per_dim.push(BTreeSet::new());
                }
                per_dim[d].insert(face);
            }
        }
        let slabs = per_dim
            .into_iter()
            .map(|set| set.into_iter().flatten().collect())
            .collect();
        SimplicialComplex::from_slabs(slabs)
    }

    /// Largest dimension with any simplex; the empty complex has dimension 0
    /// by convention and an empty f-vector.
    pub fn dim(&self) -> usize {
        self.slabs.len().saturating_sub(1)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.slabs.len()).map(|d| self.n_simplices(d)).collect()
    }

    pub fn n_simplices(&self, d: usize) -> usize {
        self.slabs.get(d).map_or(0, |s| s.len() / (d + 1))
    }

    pub fn total_simplices(&self) -> usize {
        self.f_vector().iter().sum()
    }

    pub fn simplex(&self, d: usize, i: usize) -> &[u32] {
        &self.slabs[d][i * (d + 1)..(i + 1) * (d + 1)]
    }

    pub fn iter_dim(&self, d: usize) -> impl Iterator<Item = &[u32]> {
        self.slabs
            .get(d)
            .map(|s| s.chunks_exact(d + 1))
            .into_iter()
            .flatten()
    }

    /// Index of a sorted vertex tuple among the `d`-simplices.
    fn position(&self, d: usize, face: &[u32]) -> Option<usize> {
        let slab = self.slabs.get(d)?;
        let stride = d + 1;
        let count = slab.len() / stride;
        let mut lo = 0usize;
        let mut hi = count;
        while lo < hi {
            let mid = (lo + hi) / 2;
            match slab[mid * stride..(mid + 1) * stride].cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    /// Every face of every simplex is present (test support).
    pub fn is_face_closed(&self) -> bool {
        for d in 1..self.slabs.len() {
            for s in self.iter_dim(d) {
                let mut face = vec![0u32; d];
                for omit in 0..=d {
                    collect_face(s, omit, &mut face);
                    if self.position(d - 1, &face).is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn collect_face(simplex: &[u32], omit: usize, out: &mut [u32]) {
    let mut w = 0;
    for (i, &v) in simplex.iter().enumerate() {
        if i != omit {
            out[w] = v;
            w += 1;
        }
    }
}

/// The order complex of a strict order given as a predicate on node
/// indices: `k`-simplices are the chains of size `k+1`, with vertex tuples
/// sorted by node index.
pub fn order_complex_of(n_nodes: usize, less: impl Fn(usize, usize) -> bool) -> SimplicialComplex {
    let succ: Vec<Vec<u32>> = (0..n_nodes)
        .map(|v| {
            (0..n_nodes)
                .filter(|&u| less(v, u))
                .map(|u| u as u32)
                .collect()
        })
        .collect();
    let mut slabs: Vec<Vec<u32>> = Vec::new();
    let mut chain: Vec<u32> = Vec::new();
    let mut stack: Vec<(u32, usize)> = Vec::new();
    for start in 0..n_nodes as u32 {
        chain.clear();
        stack.clear();
        stack.push((start, 0));
        while let Some((node, depth)) = stack.pop() {
            chain.truncate(depth);
            chain.push(node);
            let d = chain.len() - 1;
            while slabs.len() <= d {
                slabs.push(Vec::new());
            }
            let mut sorted = chain.clone();
            sorted.sort_unstable();
            slabs[d].extend_from_slice(&sorted);
            for &next in &succ[node as usize] {
                stack.push((next, depth + 1));
            }
        }
    }
    for (d, slab) in slabs.iter_mut().enumerate() {
        sort_chunks(slab, d + 1);
    }
    SimplicialComplex::from_slabs(slabs)
}

/// The order complex of a poset.
pub fn order_complex(poset: &Poset) -> SimplicialComplex {
    order_complex_of(poset.len(), |a, b| poset.strictly_less(a, b))
}

fn sort_chunks(flat: &mut Vec<u32>, stride: usize) {
    let count = flat.len() / stride;
    let mut order: Vec<u32> = (0..count as u32).collect();
    order.sort_by(|&a, &b| {
        flat[a as usize * stride..(a as usize + 1) * stride]
            .cmp(&flat[b as usize * stride..(b as usize + 1) * stride])
    });
    let mut out = Vec::with_capacity(flat.len());
    for &i in &order {
        out.extend_from_slice(&flat[i as usize * stride..(i as usize + 1) * stride]);
    }
    *flat = out;
}

pub fn euler_characteristic(complex: &SimplicialComplex) -> i64 {
    complex
        .f_vector()
        .iter()
        .enumerate()
        .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum()
}

/// Coefficient system of a Betti vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Coefficients {
    Gf2,
    Integer,
}

/// Per-dimension Betti numbers with a coefficient tag; integral results
/// carry torsion coefficients as `(dimension, [d1, d2, ...])`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub coefficients: Coefficients,
    pub betti: Vec<usize>,
    pub torsion: Vec<(usize, Vec<u64>)>,
}

impl BettiVector {
    pub fn euler_alternating(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Which GF(2) rank engine to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gf2Engine {
    /// Dense below [`DENSE_LIMIT`] total simplices, sparse above.
    Auto,
    Dense,
    Sparse,
}

/// GF(2) Betti numbers in every dimension of the complex.
pub fn betti_gf2(complex: &SimplicialComplex) -> BettiVector {
    betti_gf2_with(complex, Gf2Engine::Auto)
}

pub fn betti_gf2_with(complex: &SimplicialComplex, engine: Gf2Engine) -> BettiVector {
    let f = complex.f_vector();
    if f.is_empty() {
        return BettiVector {
            coefficients: Coefficients::Gf2,
            betti: vec![],
            torsion: vec![],
        };
    }
    let sparse = match engine {
        Gf2Engine::Auto => complex.total_simplices() > DENSE_LIMIT,
        Gf2Engine::Dense => false,
        Gf2Engine::Sparse => true,
    };
    let ranks = if sparse {
        ranks_sparse(complex)
    } else {
        ranks_dense(complex)
    };
    let betti = (0..f.len())
        .map(|d| f[d] - ranks[d] - ranks.get(d + 1).copied().unwrap_or(0))
        .collect();
    BettiVector {
        coefficients: Coefficients::Gf2,
        betti,
        torsion: vec![],
    }
}

/// `ranks[d] = rank ∂_d` over GF(2); `ranks[0] = 0`.
fn ranks_dense(complex: &SimplicialComplex) -> Vec<usize> {
    let dims = complex.f_vector().len();
    let mut ranks = vec![0usize; dims];
    for d in 1..dims {
        let nrows = complex.n_simplices(d);
        let ncols = complex.n_simplices(d - 1);
        let mut m = BitMatrix::zero(nrows, ncols.max(1));
        let mut face = vec![0u32; d];
        for (i, s) in complex.iter_dim(d).enumerate() {
            for omit in 0..=d {
                collect_face(s, omit, &mut face);
                let c = complex
                    .position(d - 1, &face)
                    .expect("complex not face-closed");
                m.flip(i, c);
            }
        }
        ranks[d] = m.rank();
    }
    ranks
}

fn ranks_sparse(complex: &SimplicialComplex) -> Vec<usize> {
    let dims = complex.f_vector().len();
    let mut ranks = vec![0usize; dims];
    // Process top-down so pivot rows of dimension d clear columns of d-1.
    let mut cleared: Vec<bool> = Vec::new();
    for d in (1..dims).rev() {
        let ncols = complex.n_simplices(d);
        let nrows = complex.n_simplices(d - 1);
        let mut columns: Vec<Option<Vec<u32>>> = Vec::with_capacity(ncols);
        let mut face = vec![0u32; d];
        for (i, s) in complex.iter_dim(d).enumerate() {
            if cleared.get(i).copied().unwrap_or(false) {
                columns.push(None);
                continue;
            }
            let mut col: Vec<u32> = (0..=d)
                .map(|omit| {
                    collect_face(s, omit, &mut face);
                    complex
                        .position(d - 1, &face)
                        .expect("complex not face-closed") as u32
                })
                .collect();
            col.sort_unstable();
            columns.push(Some(col));
        }
        // Cleared columns are creators: they reduce to zero and add nothing.
        let reduction = reduce_columns(columns, nrows);
        ranks[d] = reduction.rank;
        cleared = reduction.pivot_rows;
    }
    ranks
}

/// Integral Betti numbers and torsion via Smith normal form. Refuses
/// complexes above the simplex budget.
pub fn betti_integer(
    complex: &SimplicialComplex,
    budget: usize,
) -> Result<BettiVector, HomologyError> {
    let total = complex.total_simplices();
    if total > budget {
        return Err(HomologyError::BudgetExceeded { total, budget });
    }
    let f = complex.f_vector();
    if f.is_empty() {
        return Ok(BettiVector {
            coefficients: Coefficients::Integer,
            betti: vec![],
            torsion: vec![],
        });
    }
    let dims = f.len();
    let mut ranks = vec![0usize; dims + 1];
    let mut torsion: Vec<(usize, Vec<u64>)> = Vec::new();
    for d in 1..dims {
        let nrows = complex.n_simplices(d - 1);
        let ncols = complex.n_simplices(d);
        let mut m = vec![vec![BigInt::ZERO; ncols]; nrows];
        let mut face = vec![0u32; d];
        for (i, s) in complex.iter_dim(d).enumerate() {
            for omit in 0..=d {
                collect_face(s, omit, &mut face);
                let r = complex
                    .position(d - 1, &face)
                    .expect("complex not face-closed");
                m[r][i] = if omit % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
            }
        }
        let diag = smith_diagonal(m);
        ranks[d] = diag.len();
        let tor: Vec<u64> = diag
            .iter()
            .filter(|x| **x > BigInt::one())
            .map(|x| u64::try_from(x.clone()).expect("torsion coefficient exceeds u64"))
            .collect();
        if !tor.is_empty() {
            torsion.push((d - 1, tor));
        }
    }
    let betti = (0..dims).map(|d| f[d] - ranks[d] - ranks[d + 1]).collect();
    Ok(BettiVector {
        coefficients: Coefficients::Integer,
        betti,
        torsion,
    })
}

/// Mod-2 Betti numbers of the real Grassmannian `G(k,n)`:
/// `β_d` counts the partitions of `d` fitting in a `k × (n-k)` box, one
/// Schubert class each, computed by explicit partition enumeration.
pub fn grassmann_betti_mod2(k: usize, n: usize) -> BettiVector {
    assert!(k <= n, "need k <= n");
    let width = n - k;
    let mut counts = vec![0usize; k * width + 1];
    enumerate_box_partitions(k, width, 0, &mut counts);
    BettiVector {
        coefficients: Coefficients::Gf2,
        betti: counts,
        torsion: vec![],
    }
}

/// Visits every partition with at most `rows` parts, each at most `cap`,
/// tallying by weight. `acc` is the running sum of the fixed prefix.
fn enumerate_box_partitions(rows: usize, cap: usize, acc: usize, counts: &mut [usize]) {
    if rows == 0 || cap == 0 {
        counts[acc] += 1;
        return;
    }
    for first in (0..=cap).rev() {
        enumerate_box_partitions(rows - 1, first, acc + first, counts);
    }
}
