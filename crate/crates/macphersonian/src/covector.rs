//! Cocircuits, the covector sphere, topes, sphere verification, the
//! `maxcov` map, and the covector-axiom oracle.
//!
//! The covector sphere of a rank-3 oriented matroid is the join-semilattice
//! generated by the cocircuits inside `{0,+,-}^n ∪ {⊤}`, minus the top.
//! It is built here by worklist closure under pairwise joins and graded by
//! longest chain from the minimal elements; a valid oriented matroid yields
//! exactly three ranks (vertex, edge, and facet covectors). Lawrence's
//! representation theorem makes the result the face poset of a regular cell
//! decomposition of the 2-sphere, which is what [`verify_graded_elements`]
//! checks: Euler characteristic 2, the diamond property of a thin poset,
//! negation symmetry, tope supports, and GF(2) Betti numbers `(1,0,1)` of
//! the order complex.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::chirotope::{Chirotope, OrientedMatroid};
use crate::homology::{betti_gf2, order_complex_of};
use crate::sign::{packed, Sign, SignVector};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CovectorError {
    #[error("covector closure is not graded with 3 ranks (max rank {max_rank}, {size} elements)")]
    NotGraded { max_rank: usize, size: usize },
    #[error("cocircuit {0} is not minimal in the closure")]
    CocircuitNotMinimal(String),
    #[error("oriented matroids are not weak-order comparable")]
    NotComparable,
    #[error("no unique maximum below covector {0}: candidates {1:?}")]
    NoUniqueMaximum(String, Vec<String>),
    #[error("ground set sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// Cocircuits of a chirotope: for each independent pair `i<j`, the signed
/// set `x ↦ χ(i,j,x)` and its negative. Sorted, deduplicated, zero vectors
/// excluded.
pub fn cocircuits(chi: &Chirotope) -> Vec<SignVector> {
    cocircuits_of_map(chi.n(), chi.values())
}

/// Same as [`cocircuits`] but on a raw sign map in lexicographic triple
/// order, so invalid maps can be fed to the oracle pipeline.
pub fn cocircuits_of_map(n: usize, values: &[Sign]) -> Vec<SignVector> {
    let chi_at = |i: usize, j: usize, x: usize| -> Sign {
        if x == i || x == j {
            return Sign::Zero;
        }
        let (a, b, c, flip) = sort3(i, j, x);
        let v = values[crate::chirotope::triple_index(n, a, b, c)];
        if flip {
            v.negate()
        } else {
            v
        }
    };
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let sv = SignVector::new((1..=n).map(|x| chi_at(i, j, x)).collect());
            if !sv.is_zero() {
                out.push(sv.negate());
                out.push(sv);
            }
        }
    }
    out.sort_by_key(|v| v.encode_bytes());
    out.dedup();
    out
}

fn sort3(i: usize, j: usize, k: usize) -> (usize, usize, usize, bool) {
    let mut t = [i, j, k];
    let mut flip = false;
    if t[0] > t[1] {
        t.swap(0, 1);
        flip = !flip;
    }
    if t[1] > t[2] {
        t.swap(1, 2);
        flip = !flip;
    }
    if t[0] > t[1] {
        t.swap(0, 1);
        flip = !flip;
    }
    (t[0], t[1], t[2], flip)
}

/// Closes a cocircuit set under pairwise join (discarding `⊤`) and grades
/// the result by longest chain from the minimal elements. Fails unless the
/// ranks are exactly `{0,1,2}` and the given cocircuits are exactly the
/// minimal elements. Returns elements sorted by rank then encoding, with
/// their ranks.
pub fn covector_closure(
    n: usize,
    cocircuits: &[SignVector],
) -> Result<(Vec<SignVector>, Vec<u8>), CovectorError> {
    let mut elems: Vec<u32> = Vec::new();
    let mut seen: HashSet<u32> = HashSet::new();
    for c in cocircuits {
        let p = c.pack();
        if seen.insert(p) {
            elems.push(p);
        }
    }
    let n_cocs = elems.len();
    let mut idx = 0;
    while idx < elems.len() {
        let v = elems[idx];
        for k in 0..idx {
            if let Some(j) = packed::join(v, elems[k]) {
                if seen.insert(j) {
                    elems.push(j);
                }
            }
        }
        idx += 1;
    }

    // Longest chain from minimal elements; nonzero-support size strictly
    // increases along the order, so sorting by it gives a valid DP order.
    let mut order: Vec<usize> = (0..elems.len()).collect();
    order.sort_by_key(|&i| (packed::support_size(elems[i]), elems[i]));
    let mut rank = vec![0u8; elems.len()];
    let mut max_rank = 0usize;
    for (oi, &i) in order.iter().enumerate() {
        let mut r = 0;
        for &j in &order[..oi] {
            if elems[j] != elems[i] && packed::leq(elems[j], elems[i]) {
                r = r.max(rank[j] as usize + 1);
            }
        }
        rank[i] = r.min(255) as u8;
        max_rank = max_rank.max(r);
    }
    if max_rank != 2 {
        return Err(CovectorError::NotGraded {
            max_rank,
            size: elems.len(),
        });
    }
    // The generators must be exactly the minimal elements.
    for i in 0..n_cocs {
        if rank[i] != 0 {
            return Err(CovectorError::CocircuitNotMinimal(
                SignVector::unpack(elems[i], n).encode(),
            ));
        }
    }

    let mut pairs: Vec<(u8, SignVector)> = elems
        .iter()
        .zip(&rank)
        .map(|(&p, &r)| (r, SignVector::unpack(p, n)))
        .collect();
    pairs.sort_by_key(|(r, v)| (*r, v.encode_bytes()));
    let ranks = pairs.iter().map(|(r, _)| *r).collect();
    let elements = pairs.into_iter().map(|(_, v)| v).collect();
    Ok((elements, ranks))
}

/// The covector sphere `csph(M)` as a graded poset with three ranks.
pub struct CovectorSphere {
    om: OrientedMatroid,
    elements: Vec<SignVector>,
    packs: Vec<u32>,
    ranks: Vec<u8>,
    rank_offsets: [usize; 4],
}

impl CovectorSphere {
    pub fn build(om: &OrientedMatroid) -> Result<CovectorSphere, CovectorError> {
        let cocs = cocircuits(om.chirotope());
        let (elements, ranks) = covector_closure(om.n(), &cocs)?;
        let packs = elements.iter().map(|e| e.pack()).collect();
        let mut rank_offsets = [0usize; 4];
        for r in 0..3u8 {
            rank_offsets[r as usize + 1] =
                rank_offsets[r as usize] + ranks.iter().filter(|&&x| x == r).count();
        }
        Ok(CovectorSphere {
            om: om.clone(),
            elements,
            packs,
            ranks,
            rank_offsets,
        })
    }

    pub fn om(&self) -> &OrientedMatroid {
        &self.om
    }

    pub fn n(&self) -> usize {
        self.om.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// All elements, sorted by rank then encoding.
    pub fn elements(&self) -> &[SignVector] {
        &self.elements
    }

    pub fn rank_sizes(&self) -> [usize; 3] {
        [
            self.rank_offsets[1] - self.rank_offsets[0],
            self.rank_offsets[2] - self.rank_offsets[1],
            self.rank_offsets[3] - self.rank_offsets[2],
        ]
    }

    fn rank_slice(&self, r: usize) -> &[SignVector] {
        &self.elements[self.rank_offsets[r]..self.rank_offsets[r + 1]]
    }

    /// Vertex covectors (the minimal elements).
    pub fn cocircuits(&self) -> &[SignVector] {
        self.rank_slice(0)
    }

    pub fn edge_covectors(&self) -> &[SignVector] {
        self.rank_slice(1)
    }

    /// Facet covectors (the maximal elements).
    pub fn topes(&self) -> &[SignVector] {
        self.rank_slice(2)
    }

    pub fn rank_of(&self, v: &SignVector) -> Option<usize> {
        let p = v.pack();
        self.packs
            .iter()
            .position(|&q| q == p)
            .map(|i| self.ranks[i] as usize)
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.rank_of(v).is_some()
    }

    /// Covering pairs `(lo, hi)` as indices into [`Self::elements`].
    pub fn hasse_pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for lo in 0..self.len() {
            for hi in 0..self.len() {
                if self.ranks[hi] == self.ranks[lo] + 1
                    && packed::leq(self.packs[lo], self.packs[hi])
                {
                    out.push((lo as u32, hi as u32));
                }
            }
        }
        out
    }

    /// Runs the full sphere report, including the order-complex Betti check.
    pub fn verify(&self) -> SphereReport {
        verify_graded_elements(&self.om.support(), &self.elements, &self.ranks, true)
    }

    pub fn export(&self) -> SphereJson {
        SphereJson {
            om: self.om.text_form(),
            cocircuits: self.cocircuits().iter().map(|v| v.encode()).collect(),
            edges: self.edge_covectors().iter().map(|v| v.encode()).collect(),
            topes: self.topes().iter().map(|v| v.encode()).collect(),
            hasse: self.hasse_pairs().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl fmt::Debug for CovectorSphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [v, e, t] = self.rank_sizes();
        write!(
            f,
            "CovectorSphere({}, ranks {v}/{e}/{t})",
            self.om.text_form()
        )
    }
}

/// JSON export schema for a covector sphere.
#[derive(Serialize)]
pub struct SphereJson {
    pub om: String,
    pub cocircuits: Vec<String>,
    pub edges: Vec<String>,
    pub topes: Vec<String>,
    pub hasse: Vec<[u32; 2]>,
}

/// Result of the sphere checks, one flag per named property.
#[derive(Clone, Debug, Serialize)]
pub struct SphereReport {
    pub euler: i64,
    pub euler_ok: bool,
    pub diamond_ok: bool,
    pub negation_ok: bool,
    pub tope_support_ok: bool,
    /// GF(2) Betti numbers of the order complex, when computed.
    pub betti: Option<Vec<usize>>,
    pub betti_ok: bool,
    pub violation: Option<String>,
}

impl SphereReport {
    pub fn passed(&self) -> bool {
        self.euler_ok
            && self.diamond_ok
            && self.negation_ok
            && self.tope_support_ok
            && self.betti_ok
    }
}

/// Checks a graded covector set against the sphere properties:
/// (a) Euler characteristic `#vertex - #edge + #facet = 2`;
/// (b) the diamond property, every height-2 interval of `Cov ∪ {0,⊤}` has
///     exactly 4 elements;
/// (c) symmetry under negation;
/// plus tope supports equal to `expected_support` with all maximal elements
/// of facet rank, and optionally (d) GF(2) Betti numbers `(1,0,1)` of the
/// order complex.
pub fn verify_graded_elements(
    expected_support: &[usize],
    elements: &[SignVector],
    ranks: &[u8],
    check_betti: bool,
) -> SphereReport {
    let packs: Vec<u32> = elements.iter().map(|e| e.pack()).collect();
    let m = elements.len();
    let mut violation = None;
    let note = |v: String, violation: &mut Option<String>| {
        if violation.is_none() {
            *violation = Some(v);
        }
    };

    let count = |r: u8| ranks.iter().filter(|&&x| x == r).count() as i64;
    let euler = count(0) - count(1) + count(2);
    let euler_ok = euler == 2;
    if !euler_ok {
        note(format!("euler characteristic {euler} != 2"), &mut violation);
    }

    // Diamond property over the three height-2 interval families.
    let mut diamond_ok = true;
    for e in 0..m {
        if ranks[e] != 1 {
            continue;
        }
        let below = (0..m)
            .filter(|&c| ranks[c] == 0 && packed::leq(packs[c], packs[e]))
            .count();
        let above = (0..m)
            .filter(|&t| ranks[t] == 2 && packed::leq(packs[e], packs[t]))
            .count();
        if below != 2 || above != 2 {
            diamond_ok = false;
            note(
                format!(
                    "edge covector {} has {below} cocircuits below and {above} topes above",
                    elements[e]
                ),
                &mut violation,
            );
        }
    }
    for c in 0..m {
        if ranks[c] != 0 {
            continue;
        }
        for t in 0..m {
            if ranks[t] != 2 || !packed::leq(packs[c], packs[t]) {
                continue;
            }
            let middle = (0..m)
                .filter(|&e| {
                    ranks[e] == 1
                        && packed::leq(packs[c], packs[e])
                        && packed::leq(packs[e], packs[t])
                })
                .count();
            if middle != 2 {
                diamond_ok = false;
                note(
                    format!(
                        "interval [{}, {}] has {middle} edge covectors",
                        elements[c], elements[t]
                    ),
                    &mut violation,
                );
            }
        }
    }

    let set: HashSet<u32> = packs.iter().copied().collect();
    let negation_ok = packs.iter().all(|&p| set.contains(&packed::negate(p)));
    if !negation_ok {
        note(
            "element set is not closed under negation".into(),
            &mut violation,
        );
    }

    let support_packed: u32 = expected_support
        .iter()
        .fold(0u32, |acc, &i| acc | (0b11 << (2 * (i - 1))));
    let mut tope_support_ok = true;
    for i in 0..m {
        let maximal =
            !(0..m).any(|j| j != i && packs[i] != packs[j] && packed::leq(packs[i], packs[j]));
        if ranks[i] == 2 && packed::support_mask(packs[i]) != support_packed {
            tope_support_ok = false;
            note(
                format!("tope {} has wrong support", elements[i]),
                &mut violation,
            );
        }
        if maximal && ranks[i] != 2 {
            tope_support_ok = false;
            note(
                format!("maximal element {} has rank {}", elements[i], ranks[i]),
                &mut violation,
            );
        }
    }

    let (betti, betti_ok) = if check_betti {
        let complex = order_complex_of(m, |a, b| {
            packs[a] != packs[b] && packed::leq(packs[a], packs[b])
        });
        let bv = betti_gf2(&complex);
        let ok = bv.betti == [1, 0, 1];
        if !ok {
            note(
                format!("order complex Betti {:?} != [1,0,1]", bv.betti),
                &mut violation,
            );
        }
        (Some(bv.betti), ok)
    } else {
        (None, true)
    };

    SphereReport {
        euler,
        euler_ok,
        diamond_ok,
        negation_ok,
        tope_support_ok,
        betti,
        betti_ok,
        violation,
    }
}

/// Builds the covector sphere of `M` and runs every sphere check.
pub fn verify_sphere(om: &OrientedMatroid) -> Result<SphereReport, CovectorError> {
    Ok(CovectorSphere::build(om)?.verify())
}

/// The canonical map `cov(M1) → cov(M0)` for comparable oriented matroids,
/// sending a covector to the maximum covector of `M0` below it.
#[derive(Debug)]
pub struct MaxcovMap {
    table: Vec<(SignVector, SignVector)>,
    image: HashSet<u32>,
    cov0_size: usize,
}

impl MaxcovMap {
    /// Pairs `(σ1, maxcov(σ1))` over all of `cov(M1)`, in canonical order
    /// (the zero covector first, then the sphere order).
    pub fn pairs(&self) -> &[(SignVector, SignVector)] {
        &self.table
    }

    pub fn get(&self, upper: &SignVector) -> Option<&SignVector> {
        self.table
            .iter()
            .find(|(u, _)| u == upper)
            .map(|(_, lo)| lo)
    }

    /// True when the image is all of `cov(M0)`.
    pub fn is_surjective(&self) -> bool {
        self.image.len() == self.cov0_size
    }
}

/// Computes `maxcov(M0, M1)` from prebuilt spheres. The down-set maximum is
/// found by brute-force scan; a missing or non-unique maximum would
/// contradict Anderson's lemma and is reported as a structural error, never
/// resolved silently.
pub fn maxcov_between(
    lower: &CovectorSphere,
    upper: &CovectorSphere,
) -> Result<MaxcovMap, CovectorError> {
    if lower.n() != upper.n() {
        return Err(CovectorError::SizeMismatch(lower.n(), upper.n()));
    }
    if !lower.om().weak_leq(upper.om()) {
        return Err(CovectorError::NotComparable);
    }
    let n = lower.n();
    // cov(M) = csph(M) ∪ {0}
    let cov0: Vec<u32> = std::iter::once(0u32)
        .chain(lower.packs.iter().copied())
        .collect();
    let cov1: Vec<u32> = std::iter::once(0u32)
        .chain(upper.packs.iter().copied())
        .collect();

    let mut table = Vec::with_capacity(cov1.len());
    let mut image = HashSet::new();
    for &s1 in &cov1 {
        let down: Vec<u32> = cov0
            .iter()
            .copied()
            .filter(|&s0| packed::leq(s0, s1))
            .collect();
        let maxima: Vec<u32> = down
            .iter()
            .copied()
            .filter(|&c| down.iter().all(|&d| d == c || !packed::leq(c, d)))
            .collect();
        match maxima.as_slice() {
            [unique] => {
                image.insert(*unique);
                table.push((SignVector::unpack(s1, n), SignVector::unpack(*unique, n)));
            }
            _ => {
                return Err(CovectorError::NoUniqueMaximum(
                    SignVector::unpack(s1, n).encode(),
                    maxima
                        .iter()
                        .map(|&m| SignVector::unpack(m, n).encode())
                        .collect(),
                ))
            }
        }
    }
    Ok(MaxcovMap {
        table,
        image,
        cov0_size: cov0.len(),
    })
}

/// Convenience wrapper building both spheres.
pub fn maxcov(
    lower: &OrientedMatroid,
    upper: &OrientedMatroid,
) -> Result<MaxcovMap, CovectorError> {
    let s0 = CovectorSphere::build(lower)?;
    let s1 = CovectorSphere::build(upper)?;
    maxcov_between(&s0, &s1)
}

/// Report of the covector axioms V0-V3 on an arbitrary set of sign vectors.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomsReport {
    /// V0: the zero vector belongs to the set.
    pub zero_ok: bool,
    /// V1: the set is closed under negation.
    pub symmetry_ok: bool,
    /// V2: closed under composition.
    pub composition_ok: bool,
    /// V3: elimination between every pair at every separating coordinate.
    pub elimination_ok: bool,
    pub violation: Option<String>,
}

impl AxiomsReport {
    pub fn passed(&self) -> bool {
        self.zero_ok && self.symmetry_ok && self.composition_ok && self.elimination_ok
    }
}

/// Checks the vector axioms: `0 ∈ L`; `L = -L`; `σ∘τ ∈ L` for all pairs;
/// and elimination: for `σ(i) = -τ(i) ≠ 0` there is `υ ∈ L` with
/// `υ(i) = 0` agreeing with `σ∘τ` on every non-separating coordinate.
pub fn covector_axioms_check(l: &[SignVector]) -> AxiomsReport {
    let n = l.first().map_or(0, |v| v.len());
    let packs: Vec<u32> = l.iter().map(|v| v.pack()).collect();
    let set: HashSet<u32> = packs.iter().copied().collect();
    let mut violation = None;
    let note = |v: String, violation: &mut Option<String>| {
        if violation.is_none() {
            *violation = Some(v);
        }
    };

    let zero_ok = set.contains(&0);
    if !zero_ok {
        note("V0: zero vector missing".into(), &mut violation);
    }
    let symmetry_ok = packs.iter().all(|&p| set.contains(&packed::negate(p)));
    if !symmetry_ok {
        note("V1: not closed under negation".into(), &mut violation);
    }

    let mut composition_ok = true;
    'comp: for &a in &packs {
        for &b in &packs {
            if !set.contains(&packed::compose(a, b)) {
                composition_ok = false;
                note(
                    format!(
                        "V2: {} ∘ {} = {} missing",
                        SignVector::unpack(a, n),
                        SignVector::unpack(b, n),
                        SignVector::unpack(packed::compose(a, b), n)
                    ),
                    &mut violation,
                );
                break 'comp;
            }
        }
    }

    let mut elimination_ok = true;
    'elim: for (ai, &a) in packs.iter().enumerate() {
        for &b in packs.iter().skip(ai + 1) {
            let sep = separator_coords(a, b, n);
            if sep.is_empty() {
                continue;
            }
            let base = packed::compose(a, b);
            for &i in &sep {
                let free: Vec<usize> = sep.iter().copied().filter(|&j| j != i).collect();
                if !elimination_witness_exists(&set, base, i, &free) {
                    elimination_ok = false;
                    note(
                        format!(
                            "V3: no eliminating covector for {} and {} at coordinate {}",
                            SignVector::unpack(a, n),
                            SignVector::unpack(b, n),
                            i
                        ),
                        &mut violation,
                    );
                    break 'elim;
                }
            }
        }
    }

    AxiomsReport {
        zero_ok,
        symmetry_ok,
        composition_ok,
        elimination_ok,
        violation,
    }
}

/// 1-based coordinates where `a` and `b` carry opposite nonzero signs.
fn separator_coords(a: u32, b: u32, n: usize) -> Vec<usize> {
    (1..=n)
        .filter(|&i| {
            let shift = 2 * (i - 1);
            let (x, y) = ((a >> shift) & 0b11, (b >> shift) & 0b11);
            x != 0 && y != 0 && x != y
        })
        .collect()
}

/// Searches for `υ` with `υ(i) = 0`, fixed to `base` off the separator, and
/// arbitrary signs on the remaining separating coordinates.
fn elimination_witness_exists(set: &HashSet<u32>, base: u32, i: usize, free: &[usize]) -> bool {
    let cleared = base & !(0b11 << (2 * (i - 1)));
    let mut stack = vec![(cleared, 0usize)];
    while let Some((v, k)) = stack.pop() {
        if k == free.len() {
            if set.contains(&v) {
                return true;
            }
            continue;
        }
        let shift = 2 * (free[k] - 1);
        let blank = v & !(0b11 << shift);
        stack.push((blank, k + 1));
        stack.push((blank | (0b01 << shift), k + 1));
        stack.push((blank | (0b10 << shift), k + 1));
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::SignVector;

    fn om(n: usize, s: &str) -> OrientedMatroid {
        let values = SignVector::parse(s).unwrap().entries().to_vec();
        OrientedMatroid::from_chirotope(Chirotope::new(n, values).unwrap())
    }

    fn sv(s: &str) -> SignVector {
        SignVector::parse(s).unwrap()
    }

    #[test]
    fn octahedral_cocircuits() {
        let m = om(3, "+");
        let cocs = cocircuits(m.chirotope());
        let expected: Vec<SignVector> = ["00+", "00-", "0-0", "0+0", "+00", "-00"]
            .iter()
            .map(|s| sv(s))
            .collect();
        assert_eq!(cocs.len(), 6);
        for e in expected {
            assert!(cocs.contains(&e));
        }
    }

    #[test]
    fn loop_coordinate_is_zero_in_cocircuits() {
        let m = om(4, "+000");
        for c in cocircuits(m.chirotope()) {
            assert_eq!(c.get(4), Sign::Zero);
        }
    }

    #[test]
    fn uniform_n4_has_12_cocircuits() {
        let m = om(4, "++-+");
        assert_eq!(cocircuits(m.chirotope()).len(), 12);
    }

    #[test]
    fn sphere_n3() {
        let s = CovectorSphere::build(&om(3, "+")).unwrap();
        assert_eq!(s.len(), 26);
        assert_eq!(s.rank_sizes(), [6, 12, 8]);
        // all 8 sign vectors in {+,-}^3 are topes
        for t in s.topes() {
            assert_eq!(t.support().len(), 3);
        }
        assert_eq!(s.topes().len(), 8);
    }

    #[test]
    fn sphere_n4_uniform() {
        let s = CovectorSphere::build(&om(4, "++-+")).unwrap();
        assert_eq!(s.rank_sizes(), [12, 24, 14]);
        assert_eq!(s.topes().len(), 14);
    }

    #[test]
    fn sphere_with_loop_matches_smaller_sphere() {
        let small = CovectorSphere::build(&om(3, "+")).unwrap();
        let padded = CovectorSphere::build(&om(4, "+000")).unwrap();
        assert_eq!(padded.rank_sizes(), small.rank_sizes());
        let expected: Vec<String> = small
            .elements()
            .iter()
            .map(|v| format!("{}0", v.encode()))
            .collect();
        let got: Vec<String> = padded.elements().iter().map(|v| v.encode()).collect();
        assert_eq!(got, expected);
        // loop coordinate is 0 in every tope
        for t in padded.topes() {
            assert_eq!(t.get(4), Sign::Zero);
        }
    }

    #[test]
    fn verify_sphere_passes_on_valid_oms() {
        for (n, chi) in [(3, "+"), (4, "++-+"), (4, "+000"), (4, "++00")] {
            let report = verify_sphere(&om(n, chi)).unwrap();
            assert!(report.passed(), "{chi}: {:?}", report.violation);
            assert_eq!(report.euler, 2);
            assert_eq!(report.betti.as_deref(), Some(&[1, 0, 1][..]));
        }
    }

    #[test]
    fn corrupted_sphere_fails_euler() {
        let s = CovectorSphere::build(&om(3, "+")).unwrap();
        let mut elements = s.elements().to_vec();
        let mut ranks = s.ranks.clone();
        // delete one tope
        let t = elements
            .iter()
            .position(|v| v.support().len() == 3)
            .unwrap();
        elements.remove(t);
        ranks.remove(t);
        let report = verify_graded_elements(&[1, 2, 3], &elements, &ranks, false);
        assert!(!report.euler_ok);
        assert_eq!(report.euler, 1);
        assert!(!report.passed());
    }

    #[test]
    fn maxcov_identity() {
        for (n, chi) in [(3, "+"), (4, "++-+")] {
            let m = om(n, chi);
            let map = maxcov(&m, &m).unwrap();
            for (hi, lo) in map.pairs() {
                assert_eq!(hi, lo);
            }
            assert!(map.is_surjective());
        }
    }

    #[test]
    fn maxcov_loop_pair() {
        let m0 = om(4, "+000");
        let m1 = om(4, "++-+");
        let map = maxcov(&m0, &m1).unwrap();
        assert_eq!(map.get(&sv("++++")), Some(&sv("+++0")));
        assert_eq!(map.get(&sv("0000")), Some(&sv("0000")));
        assert!(map.is_surjective());
        // every value is the maximum of the down-set it came from
        let s0 = CovectorSphere::build(&m0).unwrap();
        let cov0: Vec<SignVector> = std::iter::once(SignVector::zero(4))
            .chain(s0.elements().iter().cloned())
            .collect();
        for (hi, lo) in map.pairs() {
            assert!(lo.leq_v(hi));
            for c in &cov0 {
                if c.leq_v(hi) {
                    assert!(c.leq_v(lo), "{c} below {hi} but not below maxcov {lo}");
                }
            }
        }
    }

    #[test]
    fn maxcov_rejects_incomparable() {
        // two distinct uniform OMs are incomparable
        let m0 = om(4, "++++");
        let m1 = om(4, "++-+");
        assert_eq!(maxcov(&m0, &m1).unwrap_err(), CovectorError::NotComparable);
    }

    #[test]
    fn axioms_pass_on_covector_set() {
        let s = CovectorSphere::build(&om(3, "+")).unwrap();
        let mut l = s.elements().to_vec();
        l.push(SignVector::zero(3));
        let report = covector_axioms_check(&l);
        assert!(report.passed(), "{:?}", report.violation);
    }

    #[test]
    fn axioms_fail_on_composition_gap() {
        let l = vec![sv("00"), sv("+0"), sv("0+"), sv("-0"), sv("0-")];
        let report = covector_axioms_check(&l);
        assert!(report.zero_ok && report.symmetry_ok);
        assert!(!report.composition_ok);
        assert!(!report.passed());
    }

    /// cov(delete(M, J)) must equal the restrictions of cov(M) to J, for
    /// every oriented matroid at n = 4 and every J that preserves rank 3.
    #[test]
    fn restriction_coherence_exhaustive_n4() {
        let oms = crate::macph::enumerate_oms(4).unwrap();
        let subsets: Vec<Vec<usize>> = vec![
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 4],
            vec![2, 3, 4],
            vec![1, 2, 3, 4],
        ];
        let mut checked = 0;
        for m in &oms {
            let s_full = CovectorSphere::build(m).unwrap();
            for j in &subsets {
                let restricted = match m.delete(j) {
                    Ok(r) => r,
                    Err(_) => continue, // rank drops inside J
                };
                let s_restricted = CovectorSphere::build(&restricted).unwrap();
                let mut projected: Vec<SignVector> = s_full
                    .elements()
                    .iter()
                    .map(|v| v.restrict(j))
                    .filter(|v| !v.is_zero())
                    .collect();
                projected.sort_by_key(|v| v.encode_bytes());
                projected.dedup();
                let mut expected: Vec<SignVector> = s_restricted.elements().to_vec();
                expected.sort_by_key(|v| v.encode_bytes());
                assert_eq!(projected, expected, "{} restricted to {j:?}", m.text_form());
                checked += 1;
            }
        }
        assert!(checked > 100, "only {checked} restrictions exercised");
    }

    #[test]
    fn sphere_export_shape() {
        let s = CovectorSphere::build(&om(3, "+")).unwrap();
        let json = s.export();
        assert_eq!(json.cocircuits.len(), 6);
        assert_eq!(json.edges.len(), 12);
        assert_eq!(json.topes.len(), 8);
        // each hasse edge goes one rank up: 12 edges have 2 cocircuits each,
        // 8 topes have 3 edges each
        assert_eq!(json.hasse.len(), 12 * 2 + 8 * 3);
    }
}
