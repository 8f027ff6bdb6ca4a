//! Exact generation of realizable chirotopes from integer vector
//! configurations, and an independent geometric cocircuit oracle.
//!
//! All arithmetic is integer-exact: 3x3 determinants and cross products in
//! i64/i128 with a coordinate bound small enough that nothing overflows.
//! No floating point anywhere; a single wrong sign would silently corrupt
//! every structure built downstream.

use std::fmt;

use rand_core::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use thiserror::Error;

use crate::chirotope::{triples, Chirotope};
use crate::sign::{Sign, SignVector};

/// Coordinates above this cannot be guaranteed overflow-safe here.
pub const MAX_COORD_BOUND: i64 = 1 << 15;

const MAX_RESAMPLE: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizableError {
    #[error("configuration does not span R^3: every 3x3 determinant vanishes")]
    NonSpanning,
    #[error("need at least 3 vectors, got {0}")]
    TooFew(usize),
    #[error("coordinate bound {0} exceeds {MAX_COORD_BOUND}")]
    BoundTooLarge(i64),
    #[error("bound must be at least 1")]
    BoundTooSmall,
    #[error("no spanning configuration found after {MAX_RESAMPLE} draws")]
    ResampleBudget,
    #[error("malformed configuration text form: {0}")]
    Parse(String),
}

/// A finite configuration of integer vectors in R^3, indexed `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfig {
    vectors: Vec<[i64; 3]>,
}

impl VectorConfig {
    pub fn new(vectors: Vec<[i64; 3]>) -> VectorConfig {
        for v in &vectors {
            for &c in v {
                assert!(
                    c.abs() <= MAX_COORD_BOUND,
                    "coordinate {c} exceeds the overflow-safe bound"
                );
            }
        }
        VectorConfig { vectors }
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    /// Vector `i`, 1-based.
    pub fn vector(&self, i: usize) -> [i64; 3] {
        self.vectors[i - 1]
    }

    pub fn vectors(&self) -> &[[i64; 3]] {
        &self.vectors
    }

    pub fn spans(&self) -> bool {
        self.n() >= 3
            && triples(self.n())
                .into_iter()
                .any(|[i, j, k]| det3(self.vector(i), self.vector(j), self.vector(k)) != 0)
    }

    /// Text form `n=<n>;v=<x1,y1,z1;x2,y2,z2;...>`.
    pub fn text_form(&self) -> String {
        let coords = self
            .vectors
            .iter()
            .map(|v| format!("{},{},{}", v[0], v[1], v[2]))
            .collect::<Vec<_>>()
            .join(";");
        format!("n={};v={}", self.n(), coords)
    }

    pub fn parse_text(s: &str) -> Result<VectorConfig, RealizableError> {
        let err = |m: &str| RealizableError::Parse(format!("{m}: {s:?}"));
        let rest = s.strip_prefix("n=").ok_or_else(|| err("missing n="))?;
        let (n_str, coords) = rest.split_once(";v=").ok_or_else(|| err("missing ;v="))?;
        let n: usize = n_str.parse().map_err(|_| err("bad n"))?;
        let mut vectors = Vec::new();
        for part in coords.split(';').filter(|p| !p.is_empty()) {
            let nums: Vec<i64> = part
                .split(',')
                .map(|x| x.parse().map_err(|_| err("bad coordinate")))
                .collect::<Result<_, _>>()?;
            if nums.len() != 3 {
                return Err(err("vectors need exactly 3 coordinates"));
            }
            vectors.push([nums[0], nums[1], nums[2]]);
        }
        if vectors.len() != n {
            return Err(err("vector count does not match n"));
        }
        Ok(VectorConfig::new(vectors))
    }
}

impl fmt::Display for VectorConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text_form())
    }
}

/// Exact determinant of the 3x3 matrix with columns `a`, `b`, `c`.
pub fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i128 {
    let (a, b, c) = (
        [a[0] as i128, a[1] as i128, a[2] as i128],
        [b[0] as i128, b[1] as i128, b[2] as i128],
        [c[0] as i128, c[1] as i128, c[2] as i128],
    );
    a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1])
        + c[0] * (a[1] * b[2] - a[2] * b[1])
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [i64; 3], b: [i64; 3]) -> i128 {
    a.iter().zip(&b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// The order type of a spanning configuration:
/// `χ(i,j,k) = sign det(v_i, v_j, v_k)`.
pub fn order_type(config: &VectorConfig) -> Result<Chirotope, RealizableError> {
    let n = config.n();
    if n < 3 {
        return Err(RealizableError::TooFew(n));
    }
    let values: Vec<Sign> = triples(n)
        .into_iter()
        .map(|[i, j, k]| {
            Sign::from_i128(det3(config.vector(i), config.vector(j), config.vector(k)))
        })
        .collect();
    if values.iter().all(|s| s.is_zero()) {
        return Err(RealizableError::NonSpanning);
    }
    // Determinant signs always satisfy the chirotope axioms; a failure here
    // would be a bug in the axiom checker or in the arithmetic.
    Ok(Chirotope::new(n, values).expect("order type must be a valid chirotope"))
}

/// Cocircuits read off the geometry: for each pair `{i,j}` with
/// `v_i × v_j ≠ 0`, the sign vector `k ↦ sign⟨v_k, v_i × v_j⟩` and its
/// negative. Sorted and deduplicated.
pub fn geometric_cocircuits(config: &VectorConfig) -> Vec<SignVector> {
    let n = config.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let x = cross(config.vector(i), config.vector(j));
            if x == [0, 0, 0] {
                continue;
            }
            let sv = SignVector::new(
                (1..=n)
                    .map(|k| Sign::from_i128(dot(config.vector(k), x)))
                    .collect(),
            );
            if sv.is_zero() {
                continue;
            }
            out.push(sv.negate());
            out.push(sv);
        }
    }
    out.sort_by_key(|v| v.encode_bytes());
    out.dedup();
    out
}

/// Which degeneracies [`sample_config`] may inject.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegeneracyMix {
    pub duplicates: bool,
    pub negations: bool,
    pub zeros: bool,
    pub coplanar_triples: bool,
}

impl DegeneracyMix {
    pub fn none() -> DegeneracyMix {
        DegeneracyMix {
            duplicates: false,
            negations: false,
            zeros: false,
            coplanar_triples: false,
        }
    }

    pub fn all() -> DegeneracyMix {
        DegeneracyMix {
            duplicates: true,
            negations: true,
            zeros: true,
            coplanar_triples: true,
        }
    }

    fn enabled(&self) -> Vec<Kind> {
        let mut kinds = Vec::new();
        if self.duplicates {
            kinds.push(Kind::Duplicate);
        }
        if self.negations {
            kinds.push(Kind::Negation);
        }
        if self.zeros {
            kinds.push(Kind::Zero);
        }
        if self.coplanar_triples {
            kinds.push(Kind::Coplanar);
        }
        kinds
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Duplicate,
    Negation,
    Zero,
    Coplanar,
}

/// Deterministic seeded sampling of a spanning integer configuration in
/// `[-bound, bound]^3`. The generator is PCG-64 (`rand_pcg::Pcg64`) seeded
/// from the 64-bit seed, so streams are byte-identical across platforms.
/// Degeneracies, when enabled, each replace a vector with probability 1/8:
/// a duplicate of an earlier vector, a negated copy, the zero vector, or a
/// small integer combination `a·v_i + b·v_j` of two earlier vectors.
/// Resamples until the configuration spans.
pub fn sample_config(
    n: usize,
    seed: u64,
    bound: i64,
    mix: DegeneracyMix,
) -> Result<VectorConfig, RealizableError> {
    if n < 3 {
        return Err(RealizableError::TooFew(n));
    }
    if bound < 1 {
        return Err(RealizableError::BoundTooSmall);
    }
    if bound > MAX_COORD_BOUND {
        return Err(RealizableError::BoundTooLarge(bound));
    }
    let mut rng = Pcg64::seed_from_u64(seed);
    let span = (2 * bound + 1) as u64;
    let kinds = mix.enabled();
    let mut draws = 0usize;
    loop {
        let mut vectors: Vec<[i64; 3]> = Vec::with_capacity(n);
        for k in 0..n {
            draws += 1;
            if draws > MAX_RESAMPLE {
                return Err(RealizableError::ResampleBudget);
            }
            let mut coord = || (rng.next_u64() % span) as i64 - bound;
            let fresh = [coord(), coord(), coord()];
            let vec = if k >= 2 && !kinds.is_empty() && rng.next_u64() % 8 == 0 {
                let kind = kinds[(rng.next_u64() % kinds.len() as u64) as usize];
                let pick = |rng: &mut Pcg64| (rng.next_u64() % k as u64) as usize;
                match kind {
                    Kind::Duplicate => vectors[pick(&mut rng)],
                    Kind::Negation => {
                        let v = vectors[pick(&mut rng)];
                        [-v[0], -v[1], -v[2]]
                    }
                    Kind::Zero => [0, 0, 0],
                    Kind::Coplanar => {
                        let i = pick(&mut rng);
                        let j = (i + 1 + pick(&mut rng) % (k - 1).max(1)) % k;
                        let small = |rng: &mut Pcg64| (rng.next_u64() % 3) as i64 + 1;
                        let (a, b) = (small(&mut rng), small(&mut rng));
                        let (vi, vj) = (vectors[i], vectors[j]);
                        [
                            a * vi[0] + b * vj[0],
                            a * vi[1] + b * vj[1],
                            a * vi[2] + b * vj[2],
                        ]
                    }
                }
            } else {
                fresh
            };
            vectors.push(vec);
        }
        // Coplanar combinations reach at most 6*bound in absolute value,
        // still far inside the overflow-safe range, so skip the public
        // constructor's bound assertion.
        let config = VectorConfig { vectors };
        if config.spans() {
            return Ok(config);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chirotope::validate;
    use crate::covector::cocircuits;

    const E1: [i64; 3] = [1, 0, 0];
    const E2: [i64; 3] = [0, 1, 0];
    const E3: [i64; 3] = [0, 0, 1];

    #[test]
    fn identity_basis() {
        let cfg = VectorConfig::new(vec![E1, E2, E3]);
        assert_eq!(order_type(&cfg).unwrap().chi_string(), "+");
    }

    #[test]
    fn basis_plus_diagonal() {
        // Four exact determinants: (123)=1, (124)=1, (134)=-1, (234)=1.
        let cfg = VectorConfig::new(vec![E1, E2, E3, [1, 1, 1]]);
        assert_eq!(det3(E1, E2, E3), 1);
        assert_eq!(det3(E1, E2, [1, 1, 1]), 1);
        assert_eq!(det3(E1, E3, [1, 1, 1]), -1);
        assert_eq!(det3(E2, E3, [1, 1, 1]), 1);
        assert_eq!(order_type(&cfg).unwrap().chi_string(), "++-+");
    }

    #[test]
    fn duplicated_vector() {
        let cfg = VectorConfig::new(vec![E1, E2, E3, E3]);
        assert_eq!(order_type(&cfg).unwrap().chi_string(), "++00");
    }

    #[test]
    fn non_spanning_is_rejected() {
        let cfg = VectorConfig::new(vec![E1, [2, 0, 0], [-1, 0, 0]]);
        assert_eq!(order_type(&cfg), Err(RealizableError::NonSpanning));
        assert!(!cfg.spans());
    }

    #[test]
    fn octahedral_cocircuits() {
        let cfg = VectorConfig::new(vec![E1, E2, E3]);
        let geo = geometric_cocircuits(&cfg);
        assert_eq!(geo.len(), 6);
        let chi = order_type(&cfg).unwrap();
        assert_eq!(geo, cocircuits(&chi));
    }

    #[test]
    fn zero_vector_is_a_loop() {
        let cfg = VectorConfig::new(vec![E1, E2, E3, [0, 0, 0]]);
        for c in geometric_cocircuits(&cfg) {
            assert_eq!(c.get(4), Sign::Zero);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_config(5, 7, 100, DegeneracyMix::all()).unwrap();
        let b = sample_config(5, 7, 100, DegeneracyMix::all()).unwrap();
        assert_eq!(a, b);
        let c = sample_config(5, 8, 100, DegeneracyMix::all()).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sampling_rejects_bad_parameters() {
        assert_eq!(
            sample_config(2, 1, 10, DegeneracyMix::none()),
            Err(RealizableError::TooFew(2))
        );
        assert_eq!(
            sample_config(4, 1, 0, DegeneracyMix::none()),
            Err(RealizableError::BoundTooSmall)
        );
        assert_eq!(
            sample_config(4, 1, 1 << 20, DegeneracyMix::none()),
            Err(RealizableError::BoundTooLarge(1 << 20))
        );
    }

    #[test]
    fn degeneracy_mix_injects_dependent_pairs() {
        // With duplicates enabled, some seed in a short range must produce
        // a repeated or antipodal pair; determinism makes this stable.
        let mut found = false;
        for seed in 0..200 {
            let mix = DegeneracyMix {
                duplicates: true,
                negations: true,
                zeros: false,
                coplanar_triples: false,
            };
            let cfg = sample_config(6, seed, 50, mix).unwrap();
            let vs = cfg.vectors();
            'outer: for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let neg = [-vs[j][0], -vs[j][1], -vs[j][2]];
                    if vs[i] == vs[j] || vs[i] == neg {
                        found = true;
                        break 'outer;
                    }
                }
            }
            if found {
                break;
            }
        }
        assert!(found, "no dependent pair injected across 200 seeds");
        // And the order types remain valid chirotopes.
        for seed in 0..50 {
            let cfg = sample_config(5, seed, 30, DegeneracyMix::all()).unwrap();
            let chi = order_type(&cfg).unwrap();
            assert!(validate(5, chi.values()).unwrap().is_valid());
        }
    }

    #[test]
    fn negating_one_vector_flips_exactly_its_triples() {
        for seed in 0..20 {
            let cfg = sample_config(5, seed, 40, DegeneracyMix::none()).unwrap();
            let chi = order_type(&cfg).unwrap();
            let flip = 3usize;
            let mut vectors = cfg.vectors().to_vec();
            let v = vectors[flip - 1];
            vectors[flip - 1] = [-v[0], -v[1], -v[2]];
            let chi2 = order_type(&VectorConfig::new(vectors)).unwrap();
            for (pos, [i, j, k]) in triples(5).into_iter().enumerate() {
                let expected = if [i, j, k].contains(&flip) {
                    chi.values()[pos].negate()
                } else {
                    chi.values()[pos]
                };
                assert_eq!(chi2.values()[pos], expected);
            }
        }
    }

    #[test]
    fn order_type_invariant_under_even_rotation() {
        // Cyclic coordinate shift is an even rotation with determinant +1.
        for seed in 40..60 {
            let cfg = sample_config(4, seed, 25, DegeneracyMix::none()).unwrap();
            let rotated =
                VectorConfig::new(cfg.vectors().iter().map(|v| [v[2], v[0], v[1]]).collect());
            assert_eq!(order_type(&cfg).unwrap(), order_type(&rotated).unwrap());
        }
    }

    #[test]
    fn text_form_roundtrip() {
        let cfg = VectorConfig::new(vec![E1, [2, -3, 4]]);
        assert_eq!(cfg.text_form(), "n=2;v=1,0,0;2,-3,4");
        assert_eq!(VectorConfig::parse_text(&cfg.text_form()).unwrap(), cfg);
        assert!(VectorConfig::parse_text("n=2;v=1,0").is_err());
        assert!(VectorConfig::parse_text("v=1,0,0").is_err());
    }
}
