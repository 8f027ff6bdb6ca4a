//! Machine-checkable property suites: covector axioms, sphere checks,
//! `maxcov` well-definedness and surjectivity, the weak-map tope lemma, and
//! the realizable cross-oracle.
//!
//! Enumerative suites run exhaustively for `n <= 4` and on a deterministic
//! seeded sample at `n = 5`. Each suite aggregates one pass/fail line per
//! property with a count and the first failure, so reports stay readable at
//! thousands of cases.

use rand_core::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use serde::Serialize;

use crate::chirotope::OrientedMatroid;
use crate::covector::{cocircuits, covector_axioms_check, maxcov_between, CovectorSphere};
use crate::macph::{enumerate_oms, MacphError};
use crate::realizable::{geometric_cocircuits, order_type, sample_config, DegeneracyMix};
use crate::sign::{Sign, SignVector};

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Sample size for enumerative suites at n = 5.
    pub sample: usize,
    /// Number of seeded configurations for the realizable suite.
    pub count: usize,
}

impl Default for SuiteOptions {
    fn default() -> SuiteOptions {
        SuiteOptions {
            seed: 42,
            sample: 100,
            count: 1000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub checks: Vec<PropertyCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Aggregates per-case outcomes into one check line.
struct Aggregate {
    name: String,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Aggregate {
    fn new(name: &str) -> Aggregate {
        Aggregate {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn case(&mut self, passed: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !passed {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    fn finish(self) -> PropertyCheck {
        let detail = match &self.first_failure {
            None => format!("{} cases", self.cases),
            Some(f) => format!(
                "{} of {} cases failed; first: {}",
                self.failures, self.cases, f
            ),
        };
        PropertyCheck {
            name: self.name,
            passed: self.failures == 0,
            detail,
        }
    }
}

/// The oriented matroids a suite runs over: all of them for `n <= 4`, a
/// deterministic seeded sample at `n = 5`.
pub fn suite_oms(n: usize, opts: &SuiteOptions) -> Result<Vec<OrientedMatroid>, MacphError> {
    if !(3..=5).contains(&n) {
        return Err(MacphError::NOutOfRange(n));
    }
    let all = enumerate_oms(n)?;
    if n <= 4 || all.len() <= opts.sample {
        return Ok(all);
    }
    let mut rng = Pcg64::seed_from_u64(opts.seed);
    let mut indices: Vec<usize> = (0..all.len()).collect();
    // partial Fisher-Yates: the first `sample` entries become the sample
    for i in 0..opts.sample {
        let j = i + (rng.next_u64() as usize) % (indices.len() - i);
        indices.swap(i, j);
    }
    let mut picked: Vec<usize> = indices[..opts.sample].to_vec();
    picked.sort_unstable();
    Ok(picked.into_iter().map(|i| all[i].clone()).collect())
}

/// Covector axioms V0-V3 on every sampled oriented matroid, plus the
/// loop/covector-support equivalence.
pub fn run_axioms(n: usize, opts: &SuiteOptions) -> Result<SuiteReport, MacphError> {
    let oms = suite_oms(n, opts)?;
    let mut axioms = Aggregate::new("covector axioms V0-V3");
    let mut loops_eq = Aggregate::new("loops equal all-covector zero coordinates");
    for om in &oms {
        let sphere = CovectorSphere::build(om);
        match sphere {
            Ok(s) => {
                let mut l = s.elements().to_vec();
                l.push(SignVector::zero(n));
                let report = covector_axioms_check(&l);
                axioms.case(report.passed(), || {
                    format!(
                        "{}: {}",
                        om.text_form(),
                        report.violation.unwrap_or_default()
                    )
                });
                let cov_zero: Vec<usize> = (1..=n)
                    .filter(|&i| s.elements().iter().all(|v| v.get(i) == Sign::Zero))
                    .collect();
                loops_eq.case(cov_zero == om.loops(), || {
                    format!(
                        "{}: covector zeros {:?} vs loops {:?}",
                        om.text_form(),
                        cov_zero,
                        om.loops()
                    )
                });
            }
            Err(e) => axioms.case(false, || format!("{}: {}", om.text_form(), e)),
        }
    }
    Ok(SuiteReport {
        suite: "axioms".into(),
        n,
        checks: vec![axioms.finish(), loops_eq.finish()],
    })
}

/// Sphere checks on every sampled oriented matroid: Euler characteristic 2,
/// the diamond property, negation symmetry, tope supports, and order-complex
/// GF(2) Betti numbers `(1,0,1)`.
pub fn run_sphere(n: usize, opts: &SuiteOptions) -> Result<SuiteReport, MacphError> {
    let oms = suite_oms(n, opts)?;
    let mut builds = Aggregate::new("covector sphere builds graded with 3 ranks");
    let mut euler = Aggregate::new("euler characteristic equals 2");
    let mut diamond = Aggregate::new("diamond property (thinness)");
    let mut negation = Aggregate::new("negation symmetry");
    let mut topes = Aggregate::new("tope supports and maximal ranks");
    let mut betti = Aggregate::new("order complex has GF(2) Betti (1,0,1)");
    for om in &oms {
        match CovectorSphere::build(om) {
            Ok(s) => {
                builds.case(true, String::new);
                let r = s.verify();
                let tag = || om.text_form();
                euler.case(r.euler_ok, || format!("{}: euler {}", tag(), r.euler));
                diamond.case(r.diamond_ok, || format!("{}: {:?}", tag(), r.violation));
                negation.case(r.negation_ok, || format!("{}: {:?}", tag(), r.violation));
                topes.case(r.tope_support_ok, || {
                    format!("{}: {:?}", tag(), r.violation)
                });
                betti.case(r.betti_ok, || format!("{}: betti {:?}", tag(), r.betti));
            }
            Err(e) => builds.case(false, || format!("{}: {}", om.text_form(), e)),
        }
    }
    Ok(SuiteReport {
        suite: "sphere".into(),
        n,
        checks: vec![
            builds.finish(),
            euler.finish(),
            diamond.finish(),
            negation.finish(),
            topes.finish(),
            betti.finish(),
        ],
    })
}

/// `maxcov` well-definedness and surjectivity over every weak-order
/// comparable pair (exhaustive at `n <= 4`, within the sample at `n = 5`),
/// identity on equal pairs, and the weak-map tope lemma for pairs with
/// equal loop sets.
pub fn run_maxcov(n: usize, opts: &SuiteOptions) -> Result<SuiteReport, MacphError> {
    let oms = suite_oms(n, opts)?;
    let spheres: Vec<CovectorSphere> = oms
        .iter()
        .map(|om| CovectorSphere::build(om).expect("enumerated oriented matroids have spheres"))
        .collect();
    let mut defined = Aggregate::new("maxcov has unique maxima on all of cov(M1)");
    let mut surjective = Aggregate::new("maxcov is surjective onto cov(M0)");
    let mut identity = Aggregate::new("maxcov(M, M) is the identity");
    let mut weak_tope = Aggregate::new("facet covectors persist along equal-loop weak maps");
    for (i, mi) in oms.iter().enumerate() {
        for (j, mj) in oms.iter().enumerate() {
            if !mi.weak_leq(mj) {
                continue;
            }
            let pair = || format!("{} <= {}", mi.text_form(), mj.text_form());
            match maxcov_between(&spheres[i], &spheres[j]) {
                Ok(map) => {
                    defined.case(true, String::new);
                    surjective.case(map.is_surjective(), pair);
                    if i == j {
                        identity.case(map.pairs().iter().all(|(hi, lo)| hi == lo), pair);
                    }
                }
                Err(e) => defined.case(false, || format!("{}: {}", pair(), e)),
            }
            if i != j && mi.loops() == mj.loops() {
                let lower_topes = spheres[i].topes();
                let upper: std::collections::HashSet<&SignVector> =
                    spheres[j].topes().iter().collect();
                weak_tope.case(lower_topes.iter().all(|t| upper.contains(t)), pair);
            }
        }
    }
    Ok(SuiteReport {
        suite: "maxcov".into(),
        n,
        checks: vec![
            defined.finish(),
            surjective.finish(),
            identity.finish(),
            weak_tope.finish(),
        ],
    })
}

/// Realizable oracle: seeded integer configurations (degeneracies included)
/// must give valid order types whose cocircuits equal the geometric ones.
pub fn run_realizable(n: usize, opts: &SuiteOptions) -> Result<SuiteReport, MacphError> {
    if !(3..=9).contains(&n) {
        return Err(MacphError::NOutOfRange(n));
    }
    let mut valid = Aggregate::new("order types satisfy the chirotope axioms");
    let mut oracle = Aggregate::new("cocircuits equal geometric cocircuits");
    let bounds = [1i64, 3, 10, 100, 1000];
    for i in 0..opts.count {
        let seed = opts.seed.wrapping_add(i as u64);
        let mix = if i % 2 == 0 {
            DegeneracyMix::all()
        } else {
            DegeneracyMix::none()
        };
        let bound = bounds[i % bounds.len()];
        let cfg = match sample_config(n, seed, bound, mix) {
            Ok(c) => c,
            Err(e) => {
                valid.case(false, || format!("seed {seed}: sampling failed: {e}"));
                continue;
            }
        };
        match order_type(&cfg) {
            Ok(chi) => {
                valid.case(true, String::new);
                let combinatorial = cocircuits(&chi);
                let geometric = geometric_cocircuits(&cfg);
                oracle.case(combinatorial == geometric, || {
                    format!(
                        "seed {seed}: {} vs {} cocircuits",
                        combinatorial.len(),
                        geometric.len()
                    )
                });
            }
            Err(e) => valid.case(false, || format!("seed {seed} ({cfg}): {e}")),
        }
    }
    Ok(SuiteReport {
        suite: "realizable".into(),
        n,
        checks: vec![valid.finish(), oracle.finish()],
    })
}

/// Runs every suite applicable at `n`.
pub fn run_all(n: usize, opts: &SuiteOptions) -> Result<Vec<SuiteReport>, MacphError> {
    let mut reports = vec![
        run_axioms(n, opts)?,
        run_sphere(n, opts)?,
        run_maxcov(n, opts)?,
    ];
    if (3..=9).contains(&n) {
        reports.push(run_realizable(n, opts)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_n3() {
        let opts = SuiteOptions {
            count: 50,
            ..SuiteOptions::default()
        };
        for report in run_all(3, &opts).unwrap() {
            assert!(report.passed(), "{}: {:?}", report.suite, report.checks);
        }
    }

    #[test]
    fn suite_sampling_is_deterministic() {
        let opts = SuiteOptions {
            sample: 7,
            ..SuiteOptions::default()
        };
        let a = suite_oms(5, &opts).unwrap();
        let b = suite_oms(5, &opts).unwrap();
        assert_eq!(a.len(), 7);
        assert_eq!(
            a.iter().map(|m| m.text_form()).collect::<Vec<_>>(),
            b.iter().map(|m| m.text_form()).collect::<Vec<_>>()
        );
        let other = SuiteOptions {
            sample: 7,
            seed: 43,
            ..SuiteOptions::default()
        };
        let c = suite_oms(5, &other).unwrap();
        assert_ne!(
            a.iter().map(|m| m.text_form()).collect::<Vec<_>>(),
            c.iter().map(|m| m.text_form()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn out_of_range_is_rejected() {
        let opts = SuiteOptions::default();
        assert!(run_axioms(6, &opts).is_err());
        assert!(run_realizable(2, &opts).is_err());
    }
}
