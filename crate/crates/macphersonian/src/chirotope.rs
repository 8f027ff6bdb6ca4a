//! Rank-3 chirotopes and oriented matroids.
//!
//! A chirotope is stored as one sign per lexicographically ordered triple
//! `i<j<k` of the ground set `[n]`; evaluation on arbitrary index order
//! applies the permutation sign. Validity is the conjunction of three
//! checks: some entry is nonzero, the nonzero triples satisfy the matroid
//! basis-exchange axiom, and every 5-tuple of distinct elements satisfies
//! the three-term Grassmann-Plücker sign condition
//! `[abc][ade] - [abd][ace] + [abe][acd] = 0`: the multiset
//! `{P1, -P2, P3}` of its terms is either all zero or mixed-sign.
//!
//! An oriented matroid is the pair `{χ, -χ}`, represented canonically by
//! the lexicographically smaller encoding under the byte order
//! `'+' < '-' < '0'`.
//!
//! Text form: `n=<n>;chi=<string over {0,+,-}>` in lexicographic triple
//! order.

use std::fmt;

use thiserror::Error;

use crate::sign::{Sign, SignVector, Zero};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChirotopeError {
    #[error("ground set size {0} too small: rank-3 chirotopes need n >= 3")]
    GroundSetTooSmall(usize),
    #[error("value map has length {got}, expected C({n},3) = {expected}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("sign map violates the chirotope axioms: {0}")]
    Invalid(Violation),
    #[error("restriction to {0:?} drops rank below 3: no basis inside the index set")]
    RankDrop(Vec<usize>),
    #[error("malformed chirotope text form: {0}")]
    Parse(String),
}

/// First violated validity condition, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Every entry is zero, so the rank is below 3.
    AllZero,
    /// Bases `basis1`, `basis2` with no exchange for `removed ∈ basis1 \ basis2`.
    BasisExchange {
        basis1: [usize; 3],
        basis2: [usize; 3],
        removed: usize,
    },
    /// The three-term sign condition fails on this 5-tuple.
    GrassmannPlucker { tuple: [usize; 5] },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AllZero => write!(f, "all entries zero"),
            Violation::BasisExchange {
                basis1,
                basis2,
                removed,
            } => write!(
                f,
                "basis exchange fails for bases {basis1:?}, {basis2:?} removing {removed}"
            ),
            Violation::GrassmannPlucker { tuple } => {
                write!(f, "Grassmann-Plücker sign condition fails on {tuple:?}")
            }
        }
    }
}

/// Outcome of validating a raw sign map against the chirotope axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn violation(&self) -> Option<&Violation> {
        self.violation.as_ref()
    }
}

pub fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn choose3(n: usize) -> usize {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Lexicographically ordered triples `i<j<k` of `[n]`, 1-based.
pub fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(choose3(n));
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// Position of the sorted triple `i<j<k` in lexicographic order.
pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(1 <= i && i < j && j < k && k <= n);
    let mut idx = 0;
    for a in 1..i {
        idx += choose2(n - a);
    }
    for b in i + 1..j {
        idx += n - b;
    }
    idx + (k - j - 1)
}

/// Sign of the permutation sorting a 3-tuple of distinct values.
fn sort3_sign(mut t: [usize; 3]) -> (usize, usize, usize, Sign) {
    let mut sign = Sign::Plus;
    if t[0] > t[1] {
        t.swap(0, 1);
        sign = sign.negate();
    }
    if t[1] > t[2] {
        t.swap(1, 2);
        sign = sign.negate();
    }
    if t[0] > t[1] {
        t.swap(0, 1);
        sign = sign.negate();
    }
    (t[0], t[1], t[2], sign)
}

/// A validated rank-3 chirotope on ground set `[n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: usize,
    values: Vec<Sign>,
}

impl Chirotope {
    /// Validates and wraps a raw sign map given in lexicographic triple order.
    pub fn new(n: usize, values: Vec<Sign>) -> Result<Chirotope, ChirotopeError> {
        let report = validate(n, &values)?;
        match report.violation {
            None => Ok(Chirotope { n, values }),
            Some(v) => Err(ChirotopeError::Invalid(v)),
        }
    }

    /// Wraps a sign map known to be valid (e.g. produced by the enumerator).
    pub(crate) fn new_unchecked(n: usize, values: Vec<Sign>) -> Chirotope {
        debug_assert!(validate(n, &values).map(|r| r.is_valid()).unwrap_or(false));
        Chirotope { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }

    /// `χ(i,j,k)` for arbitrary 1-based indices: zero on repeats, otherwise
    /// the stored value times the sign of the sorting permutation.
    pub fn evaluate(&self, i: usize, j: usize, k: usize) -> Sign {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j) && (1..=self.n).contains(&k),
            "index out of range 1..={}",
            self.n
        );
        if i == j || j == k || i == k {
            return Zero;
        }
        let (a, b, c, sign) = sort3_sign([i, j, k]);
        self.values[triple_index(self.n, a, b, c)] * sign
    }

    pub fn negate(&self) -> Chirotope {
        Chirotope {
            n: self.n,
            values: self.values.iter().map(|s| s.negate()).collect(),
        }
    }

    /// Pointwise `≤_v` over all triples (the weak order on chirotopes).
    pub fn weak_leq(&self, other: &Chirotope) -> bool {
        assert_eq!(self.n, other.n, "ground set size mismatch");
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq_v(*b))
    }

    /// Sorted triples with nonzero sign.
    pub fn bases(&self) -> Vec<[usize; 3]> {
        triples(self.n)
            .into_iter()
            .enumerate()
            .filter(|(p, _)| !self.values[*p].is_zero())
            .map(|(_, t)| t)
            .collect()
    }

    pub fn is_uniform(&self) -> bool {
        self.values.iter().all(|s| !s.is_zero())
    }

    /// Elements belonging to no basis, 1-based ascending.
    pub fn loops(&self) -> Vec<usize> {
        let mut in_basis = vec![false; self.n + 1];
        for (p, t) in triples(self.n).into_iter().enumerate() {
            if !self.values[p].is_zero() {
                for e in t {
                    in_basis[e] = true;
                }
            }
        }
        (1..=self.n).filter(|&e| !in_basis[e]).collect()
    }

    /// The set of nonloops, 1-based ascending.
    pub fn support(&self) -> Vec<usize> {
        let loops = self.loops();
        (1..=self.n).filter(|e| !loops.contains(e)).collect()
    }

    /// Relabels by the permutation `π` of `[n]` given as its image array
    /// (`perm[i-1] = π(i)`): the result maps `(i,j,k)` to `χ(π(i),π(j),π(k))`.
    pub fn relabel(&self, perm: &[usize]) -> Chirotope {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = vec![false; self.n + 1];
        for &p in perm {
            assert!(
                (1..=self.n).contains(&p) && !seen[p],
                "not a permutation of [n]"
            );
            seen[p] = true;
        }
        let values = triples(self.n)
            .into_iter()
            .map(|[i, j, k]| self.evaluate(perm[i - 1], perm[j - 1], perm[k - 1]))
            .collect();
        Chirotope { n: self.n, values }
    }

    /// Restriction to the 1-based index set `J` (deletion of the complement),
    /// reindexed to `[|J|]` in increasing original order. Fails when no
    /// triple inside `J` is a basis.
    pub fn restrict_to(&self, j: &[usize]) -> Result<Chirotope, ChirotopeError> {
        let mut prev = 0;
        for &e in j {
            assert!(e >= 1 && e <= self.n, "restriction index {e} out of range");
            assert!(e > prev, "restriction indices must be strictly increasing");
            prev = e;
        }
        if j.len() < 3 {
            return Err(ChirotopeError::RankDrop(j.to_vec()));
        }
        let values: Vec<Sign> = triples(j.len())
            .into_iter()
            .map(|[a, b, c]| self.evaluate(j[a - 1], j[b - 1], j[c - 1]))
            .collect();
        if values.iter().all(|s| s.is_zero()) {
            return Err(ChirotopeError::RankDrop(j.to_vec()));
        }
        Ok(Chirotope { n: j.len(), values })
    }

    pub fn chi_string(&self) -> String {
        self.values.iter().map(|s| s.to_char()).collect()
    }

    pub fn encode_bytes(&self) -> Vec<u8> {
        self.values.iter().map(|s| s.byte()).collect()
    }

    pub fn text_form(&self) -> String {
        format!("n={};chi={}", self.n, self.chi_string())
    }

    /// Parses the text form `n=<n>;chi=<signs>`, validating the result.
    pub fn parse_text(s: &str) -> Result<Chirotope, ChirotopeError> {
        let (n, values) = parse_text_raw(s)?;
        Chirotope::new(n, values)
    }
}

/// Parses `n=<n>;chi=<signs>` without axiom validation.
pub fn parse_text_raw(s: &str) -> Result<(usize, Vec<Sign>), ChirotopeError> {
    let err = |m: &str| ChirotopeError::Parse(format!("{m}: {s:?}"));
    let rest = s.strip_prefix("n=").ok_or_else(|| err("missing n="))?;
    let (n_str, chi) = rest
        .split_once(";chi=")
        .ok_or_else(|| err("missing ;chi="))?;
    let n: usize = n_str.parse().map_err(|_| err("bad ground set size"))?;
    let values = SignVector::parse(chi)
        .map_err(|e| err(&e.to_string()))?
        .entries()
        .to_vec();
    if values.len() != choose3(n) {
        return Err(ChirotopeError::LengthMismatch {
            n,
            expected: choose3(n),
            got: values.len(),
        });
    }
    Ok((n, values))
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text_form())
    }
}

impl fmt::Debug for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chirotope({})", self.text_form())
    }
}

/// Validates a raw sign map in lexicographic triple order against the
/// rank-3 chirotope axioms. Returns the report, or an error when the map
/// length does not match `C(n,3)` or `n < 3`.
pub fn validate(n: usize, values: &[Sign]) -> Result<ValidationReport, ChirotopeError> {
    if n < 3 {
        return Err(ChirotopeError::GroundSetTooSmall(n));
    }
    if values.len() != choose3(n) {
        return Err(ChirotopeError::LengthMismatch {
            n,
            expected: choose3(n),
            got: values.len(),
        });
    }
    let tables = AxiomTables::new(n);
    Ok(tables.validate(values))
}

/// One three-term Grassmann-Plücker instance: three products of bracket
/// values. Each bracket is a stored triple position plus a flip for the
/// sorting permutation sign.
#[derive(Clone, Debug)]
pub(crate) struct GpInstance {
    /// `(position, flip)` for the six brackets
    /// `[abc],[ade],[abd],[ace],[abe],[acd]` in that order.
    pub brackets: [(u32, bool); 6],
    pub tuple: [usize; 5],
    pub max_pos: u32,
}

impl GpInstance {
    /// True when the multiset `{P1,-P2,P3}` is all zero or mixed-sign.
    pub fn holds(&self, values: &[Sign]) -> bool {
        let b = |i: usize| {
            let (pos, flip) = self.brackets[i];
            let v = values[pos as usize];
            if flip {
                v.negate()
            } else {
                v
            }
        };
        let terms = [b(0) * b(1), (b(2) * b(3)).negate(), b(4) * b(5)];
        let plus = terms.contains(&Sign::Plus);
        let minus = terms.contains(&Sign::Minus);
        (!plus && !minus) || (plus && minus)
    }
}

/// One basis-exchange instance: if `basis1` and `basis2` are both nonzero,
/// some candidate `(basis1 \ {removed}) ∪ {y}`, `y ∈ basis2 \ basis1`,
/// must be nonzero. Pairs sharing two elements are skipped: there the
/// single candidate is `basis2` itself.
#[derive(Clone, Debug)]
pub(crate) struct ExchangeInstance {
    pub b1_pos: u32,
    pub b2_pos: u32,
    pub candidates: Vec<u32>,
    pub basis1: [usize; 3],
    pub basis2: [usize; 3],
    pub removed: usize,
    pub max_pos: u32,
}

impl ExchangeInstance {
    pub fn holds(&self, values: &[Sign]) -> bool {
        values[self.b1_pos as usize].is_zero()
            || values[self.b2_pos as usize].is_zero()
            || self
                .candidates
                .iter()
                .any(|&c| !values[c as usize].is_zero())
    }
}

/// Precomputed axiom instances for ground set size `n`, grouped by the
/// largest triple position involved so the enumerator can check each
/// instance exactly once, as soon as its last entry is assigned.
pub(crate) struct AxiomTables {
    pub n: usize,
    pub gp: Vec<GpInstance>,
    pub exchange: Vec<ExchangeInstance>,
    pub gp_by_max: Vec<Vec<u32>>,
    pub ex_by_max: Vec<Vec<u32>>,
}

impl AxiomTables {
    pub fn new(n: usize) -> AxiomTables {
        assert!(n >= 3);
        let trs = triples(n);
        let ntr = trs.len();
        let pos = |t: [usize; 3]| triple_index(n, t[0], t[1], t[2]) as u32;
        let bracket = |a: usize, p: usize, q: usize| {
            let (x, y, z, sign) = sort3_sign([a, p, q]);
            (pos([x, y, z]), sign == Sign::Minus)
        };

        // Grassmann-Plücker: a ∈ [n], {w<x<y<z} ⊆ [n]\{a}, and the three
        // pairings of the 4-set. Every ordered 5-tuple of distinct elements
        // reduces to one of these under the sign-preserving symmetries of
        // the condition.
        let mut gp = Vec::new();
        for a in 1..=n {
            let rest: Vec<usize> = (1..=n).filter(|&e| e != a).collect();
            for q in combinations4(&rest) {
                let [w, x, y, z] = q;
                for [b, c, d, e] in [[w, x, y, z], [w, y, x, z], [w, z, x, y]] {
                    let brackets = [
                        bracket(a, b, c),
                        bracket(a, d, e),
                        bracket(a, b, d),
                        bracket(a, c, e),
                        bracket(a, b, e),
                        bracket(a, c, d),
                    ];
                    let max_pos = brackets.iter().map(|&(p, _)| p).max().unwrap();
                    gp.push(GpInstance {
                        brackets,
                        tuple: [a, b, c, d, e],
                        max_pos,
                    });
                }
            }
        }

        // Basis exchange over ordered pairs of triples sharing at most one
        // element.
        let mut exchange = Vec::new();
        for (p1, &b1) in trs.iter().enumerate() {
            for (p2, &b2) in trs.iter().enumerate() {
                if p1 == p2 {
                    continue;
                }
                let shared: Vec<usize> = b1.iter().copied().filter(|e| b2.contains(e)).collect();
                if shared.len() >= 2 {
                    continue;
                }
                let b2_only: Vec<usize> = b2.iter().copied().filter(|e| !b1.contains(e)).collect();
                for &x in b1.iter().filter(|e| !b2.contains(*e)) {
                    let keep: Vec<usize> = b1.iter().copied().filter(|&e| e != x).collect();
                    let candidates: Vec<u32> = b2_only
                        .iter()
                        .map(|&y| {
                            let (i, j, k, _) = sort3_sign([keep[0], keep[1], y]);
                            pos([i, j, k])
                        })
                        .collect();
                    let max_pos = candidates
                        .iter()
                        .copied()
                        .chain([p1 as u32, p2 as u32])
                        .max()
                        .unwrap();
                    exchange.push(ExchangeInstance {
                        b1_pos: p1 as u32,
                        b2_pos: p2 as u32,
                        candidates,
                        basis1: b1,
                        basis2: b2,
                        removed: x,
                        max_pos,
                    });
                }
            }
        }

        let mut gp_by_max = vec![Vec::new(); ntr];
        for (i, inst) in gp.iter().enumerate() {
            gp_by_max[inst.max_pos as usize].push(i as u32);
        }
        let mut ex_by_max = vec![Vec::new(); ntr];
        for (i, inst) in exchange.iter().enumerate() {
            ex_by_max[inst.max_pos as usize].push(i as u32);
        }

        AxiomTables {
            n,
            gp,
            exchange,
            gp_by_max,
            ex_by_max,
        }
    }

    pub fn validate(&self, values: &[Sign]) -> ValidationReport {
        debug_assert_eq!(values.len(), choose3(self.n));
        if values.iter().all(|s| s.is_zero()) {
            return ValidationReport {
                violation: Some(Violation::AllZero),
            };
        }
        for inst in &self.exchange {
            if !inst.holds(values) {
                return ValidationReport {
                    violation: Some(Violation::BasisExchange {
                        basis1: inst.basis1,
                        basis2: inst.basis2,
                        removed: inst.removed,
                    }),
                };
            }
        }
        for inst in &self.gp {
            if !inst.holds(values) {
                return ValidationReport {
                    violation: Some(Violation::GrassmannPlucker { tuple: inst.tuple }),
                };
            }
        }
        ValidationReport { violation: None }
    }
}

fn combinations4(items: &[usize]) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let m = items.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    out.push([items[a], items[b], items[c], items[d]]);
                }
            }
        }
    }
    out
}

/// An oriented matroid: the identification of a chirotope with its negative,
/// represented by the canonical member of the pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedMatroid {
    canonical: Chirotope,
}

impl OrientedMatroid {
    pub fn from_chirotope(chi: Chirotope) -> OrientedMatroid {
        let neg = chi.negate();
        let canonical = if chi.encode_bytes() <= neg.encode_bytes() {
            chi
        } else {
            neg
        };
        OrientedMatroid { canonical }
    }

    pub fn n(&self) -> usize {
        self.canonical.n()
    }

    /// The canonical representative of `{χ, -χ}`.
    pub fn chirotope(&self) -> &Chirotope {
        &self.canonical
    }

    pub fn chirotope_pair(&self) -> (Chirotope, Chirotope) {
        (self.canonical.clone(), self.canonical.negate())
    }

    /// The weak order on oriented matroids: `M0 ≤_w M1` iff some member of
    /// `chiro(M0)` is pointwise below some member of `chiro(M1)`.
    pub fn weak_leq(&self, other: &OrientedMatroid) -> bool {
        assert_eq!(self.n(), other.n(), "ground set size mismatch");
        self.canonical.weak_leq(&other.canonical)
            || self.canonical.weak_leq(&other.canonical.negate())
    }

    pub fn loops(&self) -> Vec<usize> {
        self.canonical.loops()
    }

    pub fn support(&self) -> Vec<usize> {
        self.canonical.support()
    }

    pub fn bases(&self) -> Vec<[usize; 3]> {
        self.canonical.bases()
    }

    /// Restriction to `J` (deletion of the complement), as an oriented
    /// matroid on `[|J|]`.
    pub fn delete(&self, j: &[usize]) -> Result<OrientedMatroid, ChirotopeError> {
        Ok(OrientedMatroid::from_chirotope(
            self.canonical.restrict_to(j)?,
        ))
    }

    pub fn text_form(&self) -> String {
        self.canonical.text_form()
    }

    pub fn parse_text(s: &str) -> Result<OrientedMatroid, ChirotopeError> {
        Ok(OrientedMatroid::from_chirotope(Chirotope::parse_text(s)?))
    }
}

impl fmt::Display for OrientedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text_form())
    }
}

impl fmt::Debug for OrientedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrientedMatroid({})", self.text_form())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::{Minus, Plus};

    fn chi(n: usize, s: &str) -> Chirotope {
        let values = SignVector::parse(s).unwrap().entries().to_vec();
        Chirotope::new(n, values).unwrap()
    }

    fn raw(s: &str) -> Vec<Sign> {
        SignVector::parse(s).unwrap().entries().to_vec()
    }

    #[test]
    fn triple_indexing_is_lexicographic() {
        for n in 3..=7 {
            let trs = triples(n);
            assert_eq!(trs.len(), choose3(n));
            for (p, [i, j, k]) in trs.iter().enumerate() {
                assert_eq!(triple_index(n, *i, *j, *k), p);
            }
        }
    }

    #[test]
    fn evaluate_alternation() {
        let c = chi(3, "+");
        assert_eq!(c.evaluate(1, 2, 3), Plus);
        assert_eq!(c.evaluate(2, 1, 3), Minus);
        assert_eq!(c.evaluate(3, 1, 2), Plus);
        assert_eq!(c.evaluate(1, 1, 2), Zero);
    }

    #[test]
    fn validate_realizable_quadruple() {
        // Realized by e1, e2, e3, (1,1,1): exact determinants give these signs.
        let r = validate(4, &raw("++-+")).unwrap();
        assert!(r.is_valid());
    }

    #[test]
    fn validate_all_zero() {
        let r = validate(4, &raw("0000")).unwrap();
        assert_eq!(r.violation(), Some(&Violation::AllZero));
    }

    #[test]
    fn validate_gp_counterexample() {
        // χ(123)=+, χ(124)=+, χ(125)=+, χ(134)=+, χ(135)=-, χ(145)=+,
        // rest zero: the terms {P1,-P2,P3} on (1,2,3,4,5) are all +.
        let r = validate(5, &raw("++++-+0000")).unwrap();
        assert_eq!(
            r.violation(),
            Some(&Violation::GrassmannPlucker {
                tuple: [1, 2, 3, 4, 5]
            })
        );
    }

    #[test]
    fn validate_wrong_length() {
        assert_eq!(
            validate(4, &raw("+-")),
            Err(ChirotopeError::LengthMismatch {
                n: 4,
                expected: 4,
                got: 2
            })
        );
        assert_eq!(
            validate(2, &raw("")),
            Err(ChirotopeError::GroundSetTooSmall(2))
        );
    }

    #[test]
    fn weak_order_examples() {
        let c0 = chi(4, "++-0");
        let c1 = chi(4, "++-+");
        assert!(c0.weak_leq(&c1));
        assert!(!c1.weak_leq(&c0));
        assert!(c1.weak_leq(&c1));
    }

    #[test]
    fn weak_order_om_examples() {
        let m0 = OrientedMatroid::from_chirotope(chi(4, "++-0"));
        let m1 = OrientedMatroid::from_chirotope(chi(4, "++-+"));
        assert!(m0.weak_leq(&m1));
        let m0_flipped = OrientedMatroid::from_chirotope(chi(4, "--+0"));
        assert!(m0_flipped.weak_leq(&m1));
        assert_eq!(m0, m0_flipped);
    }

    #[test]
    fn distinct_uniform_oms_are_incomparable() {
        // all-nonzero maps can only be pointwise-below when equal
        let mut uniforms = Vec::new();
        for bits in 0..16u32 {
            let values: Vec<Sign> = (0..4)
                .map(|i| if bits >> i & 1 == 0 { Plus } else { Minus })
                .collect();
            uniforms.push(OrientedMatroid::from_chirotope(
                Chirotope::new(4, values).unwrap(),
            ));
        }
        uniforms.sort_by_key(|m| m.chirotope().encode_bytes());
        uniforms.dedup();
        assert_eq!(uniforms.len(), 8);
        for a in &uniforms {
            for b in &uniforms {
                assert_eq!(a.weak_leq(b), a == b, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn loops_and_support() {
        assert_eq!(chi(4, "+000").loops(), vec![4]);
        assert_eq!(chi(4, "++-+").loops(), Vec::<usize>::new());
        assert_eq!(chi(3, "+").support(), vec![1, 2, 3]);
    }

    #[test]
    fn delete_examples() {
        let uniform = OrientedMatroid::from_chirotope(chi(4, "++-+"));
        let sub = uniform.delete(&[1, 2, 3]).unwrap();
        assert_eq!(sub.chirotope().chi_string(), "+");
        let all = uniform.delete(&[1, 2, 3, 4]).unwrap();
        assert_eq!(all, uniform);
        let degenerate = OrientedMatroid::from_chirotope(chi(4, "+000"));
        assert!(matches!(
            degenerate.delete(&[2, 3, 4]),
            Err(ChirotopeError::RankDrop(_))
        ));
    }

    #[test]
    fn relabel_examples() {
        let c = chi(3, "+");
        assert_eq!(c.relabel(&[1, 2, 3]).chi_string(), "+");
        assert_eq!(c.relabel(&[2, 1, 3]).chi_string(), "-");
    }

    #[test]
    fn canonical_is_sign_invariant_and_idempotent() {
        let c = chi(4, "--+0");
        let m = OrientedMatroid::from_chirotope(c.clone());
        let m_neg = OrientedMatroid::from_chirotope(c.negate());
        assert_eq!(m, m_neg);
        let again = OrientedMatroid::from_chirotope(m.chirotope().clone());
        assert_eq!(m, again);
        // canonical representative is the byte-smaller encoding
        assert_eq!(m.chirotope().chi_string(), "++-0");
    }

    #[test]
    fn text_form_roundtrip() {
        let c = chi(4, "++-+");
        assert_eq!(c.text_form(), "n=4;chi=++-+");
        assert_eq!(Chirotope::parse_text("n=4;chi=++-+").unwrap(), c);
        assert!(Chirotope::parse_text("n=4;chi=+").is_err());
        assert!(Chirotope::parse_text("chi=+").is_err());
        assert!(Chirotope::parse_text("n=4;chi=0000").is_err());
    }

    /// Full Grassmann-Plücker check over every ordered 5-tuple of distinct
    /// elements, as an oracle for the reduced instance set.
    fn gp_full(n: usize, values: &[Sign]) -> bool {
        let ev = |i: usize, j: usize, k: usize| -> Sign {
            if i == j || j == k || i == k {
                return Zero;
            }
            let (a, b, c, s) = sort3_sign([i, j, k]);
            values[triple_index(n, a, b, c)] * s
        };
        let mut stack = vec![Vec::new()];
        let mut tuples = Vec::new();
        while let Some(t) = stack.pop() {
            if t.len() == 5 {
                tuples.push(t);
                continue;
            }
            for e in 1..=n {
                if !t.contains(&e) {
                    let mut t2 = t.clone();
                    t2.push(e);
                    stack.push(t2);
                }
            }
        }
        tuples.iter().all(|t| {
            let (a, b, c, d, e) = (t[0], t[1], t[2], t[3], t[4]);
            let terms = [
                ev(a, b, c) * ev(a, d, e),
                (ev(a, b, d) * ev(a, c, e)).negate(),
                ev(a, b, e) * ev(a, c, d),
            ];
            let plus = terms.contains(&Plus);
            let minus = terms.contains(&Minus);
            (!plus && !minus) || (plus && minus)
        })
    }

    #[test]
    fn reduced_gp_instances_match_full_check() {
        // Deterministic pseudorandom sweep over raw maps at n = 5.
        let tables = AxiomTables::new(5);
        let ntr = choose3(5);
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..2000 {
            let mut values = Vec::with_capacity(ntr);
            for _ in 0..ntr {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                values.push(match (state >> 33) % 3 {
                    0 => Zero,
                    1 => Plus,
                    _ => Minus,
                });
            }
            let reduced = tables.gp.iter().all(|i| i.holds(&values));
            assert_eq!(reduced, gp_full(5, &values), "map {:?}", values);
        }
    }

    #[test]
    fn validity_is_negation_invariant() {
        let tables = AxiomTables::new(4);
        for bits in 0..81u32 {
            let mut v = Vec::with_capacity(4);
            let mut b = bits;
            for _ in 0..4 {
                v.push(match b % 3 {
                    0 => Zero,
                    1 => Plus,
                    _ => Minus,
                });
                b /= 3;
            }
            let neg: Vec<Sign> = v.iter().map(|s| s.negate()).collect();
            assert_eq!(
                tables.validate(&v).is_valid(),
                tables.validate(&neg).is_valid()
            );
        }
    }
}
