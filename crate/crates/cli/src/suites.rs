//! Builds the list of checks for a `verify` invocation. Jobs are returned
//! in declaration order; the runner may execute them concurrently but
//! reports them in this order.

use schurpp_core::identities::{
    check_det_vanishing, check_lemma1, check_lemma2, check_littlewood, check_theorem1,
    check_theorem2, check_theorem3, check_theorem4, check_weyl_bn, DetVanishing, IdentityError,
    IdentityResult, LittlewoodFormula, WeylVariant,
};
use schurpp_core::planepart::{
    cross_check, Constraint, EnumerationCaps, GfSource, PPClass, PlanePartError, ProductKind,
    SpecializationRule, WeightRule,
};
use schurpp_core::{PartitionFilter, Polynomial};

/// A deferred check; the closure does all the work so the runner can time
/// it and run it on a worker thread.
pub struct Job {
    pub check: Box<dyn Fn() -> Result<IdentityResult, String> + Send + Sync>,
}

impl Job {
    fn new(f: impl Fn() -> Result<IdentityResult, IdentityError> + Send + Sync + 'static) -> Job {
        Job {
            check: Box::new(move || f().map_err(|e| e.to_string())),
        }
    }

    fn gf(f: impl Fn() -> Result<IdentityResult, PlanePartError> + Send + Sync + 'static) -> Job {
        Job {
            check: Box::new(move || f().map_err(|e| e.to_string())),
        }
    }
}

/// A malformed or inconsistent request; callers map this to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Grid overrides from the command line; `None` means the target's default
/// (acceptance) grid.
pub struct Grid {
    pub n: Option<Vec<usize>>,
    pub m: Option<Vec<u32>>,
    pub degree: u32,
    pub class: Option<String>,
}

impl Grid {
    fn ns(&self, default: &[usize]) -> Vec<usize> {
        self.n.clone().unwrap_or_else(|| default.to_vec())
    }

    fn ms(&self, default: &[u32]) -> Vec<u32> {
        self.m.clone().unwrap_or_else(|| default.to_vec())
    }

    /// Cross product of the overrides, or the default pair list.
    fn pairs(&self, default: &[(usize, u32)]) -> Vec<(usize, u32)> {
        match (&self.n, &self.m) {
            (None, None) => default.to_vec(),
            _ => {
                let ns = self.ns(&default.iter().map(|&(n, _)| n).collect::<Vec<_>>());
                let ms = self.ms(&default.iter().map(|&(_, m)| m).collect::<Vec<_>>());
                let mut out = Vec::new();
                for &n in &ns {
                    for &m in &ms {
                        out.push((n, m));
                    }
                }
                out.dedup();
                out
            }
        }
    }
}

pub const TARGETS: &[&str] = &[
    "all",
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "littlewood",
    "lemma1",
    "lemma2",
    "weyl",
    "detvanish",
    "gf-cross",
];

pub fn build_jobs(target: &str, grid: &Grid, caps: EnumerationCaps) -> Result<Vec<Job>, UsageError> {
    let mut jobs = Vec::new();
    match target {
        "thm1" => {
            for n in grid.ns(&[1, 2, 3]) {
                for m in grid.ms(&[0, 1, 2, 3, 4]) {
                    jobs.push(Job::new(move || check_theorem1(m, n)));
                }
            }
        }
        "thm2" => {
            for m in grid.ms(&[2, 4]) {
                if m % 2 != 0 {
                    return Err(usage(format!("thm2 needs even m, got {m}")));
                }
                for n in grid.ns(&[1, 2, 3]) {
                    jobs.push(Job::new(move || check_theorem2(m, n)));
                }
            }
        }
        "thm3" => {
            for (n, m) in grid.pairs(&[(2, 0), (2, 1), (2, 2), (2, 3), (4, 1), (4, 2)]) {
                if n % 2 != 0 {
                    return Err(usage(format!("thm3 needs even n, got {n}")));
                }
                jobs.push(Job::new(move || check_theorem3(m, n)));
            }
        }
        "thm4" => {
            let degree = grid.degree;
            for n in grid.ns(&[1, 2, 3]) {
                jobs.push(Job::new(move || check_theorem4(n, degree)));
            }
        }
        "littlewood" => {
            let degree = grid.degree;
            for which in [
                LittlewoodFormula::Unrestricted,
                LittlewoodFormula::EvenParts,
                LittlewoodFormula::EvenConjugate,
            ] {
                for n in grid.ns(&[1, 2, 3]) {
                    jobs.push(Job::new(move || check_littlewood(n, degree, which)));
                }
            }
        }
        "lemma1" => {
            for n in grid.ns(&[1, 2, 3, 4, 5]) {
                jobs.push(Job::new(move || check_lemma1(n)));
            }
        }
        "lemma2" => {
            for n in grid.ns(&[2, 4, 6]) {
                if n % 2 != 0 {
                    return Err(usage(format!("lemma2 needs even n, got {n}")));
                }
                jobs.push(Job::new(move || check_lemma2(n)));
            }
        }
        "weyl" => {
            for variant in [WeylVariant::Minus, WeylVariant::Plus, WeylVariant::EvenSubsets] {
                for n in grid.ns(&[1, 2, 3]) {
                    jobs.push(Job::new(move || check_weyl_bn(n, variant)));
                }
            }
        }
        "detvanish" => {
            for which in [DetVanishing::Thm2, DetVanishing::Thm3] {
                for n in grid.ns(&[2, 3]) {
                    if n < 2 {
                        return Err(usage(format!("detvanish needs n >= 2, got {n}")));
                    }
                    for m in grid.ms(&[1, 2, 4]) {
                        jobs.push(Job::new(move || check_det_vanishing(m, n, which)));
                    }
                }
            }
        }
        "gf-cross" => {
            jobs.extend(gf_cross_jobs(grid, caps)?);
        }
        "all" => {
            let defaults = Grid {
                n: None,
                m: None,
                degree: grid.degree,
                class: None,
            };
            for sub in TARGETS.iter().filter(|&&t| t != "all") {
                jobs.extend(build_jobs(sub, &defaults, caps)?);
            }
        }
        other => {
            return Err(usage(format!(
                "unknown target '{other}'; expected one of {}",
                TARGETS.join(", ")
            )));
        }
    }
    Ok(jobs)
}

pub const GF_CLASSES: &[&str] = &[
    "sym",
    "sym-orbit",
    "column-strict",
    "column-strict-even-rows",
    "sym-diag-even",
    "sym-diag-levels-even",
    "sym-all-heights-even",
];

/// The enumerated side plus every closed form it must match.
pub fn gf_class_sources(
    class: &str,
    n: usize,
    m: u32,
) -> Result<(GfSource, Vec<GfSource>), UsageError> {
    let sym_special = |filter, rule| GfSource::Specialized {
        m,
        n,
        filter,
        rule,
    };
    let product = |kind| GfSource::Product { kind, n, m };
    let spec = match class {
        "sym" => (
            GfSource::Enumerated {
                class: PPClass::symmetric_box(n, m, &[]),
                weight: WeightRule::Size,
            },
            vec![
                sym_special(PartitionFilter::All, SpecializationRule::SymWeight),
                product(ProductKind::MacMahonSym),
            ],
        ),
        "sym-orbit" => (
            GfSource::Enumerated {
                class: PPClass::symmetric_box(n, m, &[]),
                weight: WeightRule::OrbitCount,
            },
            vec![
                sym_special(PartitionFilter::All, SpecializationRule::OrbitWeight),
                product(ProductKind::OrbitSym),
            ],
        ),
        "column-strict" => (
            GfSource::Enumerated {
                class: PPClass::new(n, m as usize, n as u32, &[Constraint::ColumnStrict]),
                weight: WeightRule::Size,
            },
            vec![product(ProductKind::BenderKnuth)],
        ),
        "column-strict-even-rows" => (
            GfSource::Enumerated {
                class: PPClass::new(
                    n,
                    m as usize,
                    n as u32,
                    &[Constraint::ColumnStrict, Constraint::AllRowsEvenLength],
                ),
                weight: WeightRule::Size,
            },
            vec![product(ProductKind::EvenColumnsThm2Cor)],
        ),
        "sym-diag-even" => (
            GfSource::Enumerated {
                class: PPClass::symmetric_box(n, m, &[Constraint::DiagonalPartsEven]),
                weight: WeightRule::Size,
            },
            vec![
                sym_special(PartitionFilter::EvenParts, SpecializationRule::SymWeight),
                product(ProductKind::SizeEven),
            ],
        ),
        "sym-diag-levels-even" => (
            GfSource::Enumerated {
                class: PPClass::symmetric_box(n, m, &[Constraint::DiagonalLevelsEven]),
                weight: WeightRule::Size,
            },
            vec![
                sym_special(PartitionFilter::EvenConjugate, SpecializationRule::SymWeight),
                product(ProductKind::Thm3Cor),
                product(ProductKind::Thm3SSum),
            ],
        ),
        "sym-all-heights-even" => (
            GfSource::Enumerated {
                class: PPClass::symmetric_box(n, m, &[Constraint::AllHeightsEven]),
                weight: WeightRule::Size,
            },
            vec![product(ProductKind::SizeEven)],
        ),
        other => {
            return Err(usage(format!(
                "unknown class '{other}'; expected one of {}",
                GF_CLASSES.join(", ")
            )));
        }
    };
    Ok(spec)
}

fn default_grid(class: &str) -> Vec<(usize, u32)> {
    let square = |ns: &[usize], ms: &[u32]| {
        let mut out = Vec::new();
        for &n in ns {
            for &m in ms {
                out.push((n, m));
            }
        }
        out
    };
    match class {
        "sym" | "sym-orbit" | "column-strict" => square(&[1, 2, 3], &[1, 2, 3]),
        "column-strict-even-rows" => square(&[1, 2, 3], &[2]),
        "sym-diag-even" => square(&[1, 2, 3], &[2, 4]),
        "sym-diag-levels-even" => vec![(2, 1), (2, 2), (2, 3), (4, 1)],
        "sym-all-heights-even" => vec![(2, 2)],
        _ => unreachable!("grids exist for every known class"),
    }
}

fn class_jobs(
    class: &'static str,
    pairs: &[(usize, u32)],
    caps: EnumerationCaps,
    assert_inequality: bool,
) -> Result<Vec<Job>, UsageError> {
    let mut jobs = Vec::new();
    for &(n, m) in pairs {
        let (lhs, rhss) = gf_class_sources(class, n, m)?;
        for rhs in rhss {
            let lhs = lhs.clone();
            jobs.push(Job::gf(move || {
                let r = cross_check(class, &lhs, &rhs, caps)?;
                Ok(if assert_inequality {
                    // documented negative test: the check passes exactly
                    // when the two sides differ
                    IdentityResult {
                        identity: "gf-cross-negative".to_string(),
                        params: r.params.clone(),
                        holds: !r.holds,
                        witness_monomial: None,
                        witness: Polynomial::zero(),
                    }
                } else {
                    r
                })
            }));
        }
    }
    Ok(jobs)
}

fn gf_cross_jobs(grid: &Grid, caps: EnumerationCaps) -> Result<Vec<Job>, UsageError> {
    match &grid.class {
        Some(class) => {
            // explicit class: plain comparison, even for the known-false one
            let class = GF_CLASSES
                .iter()
                .find(|&&c| c == class.as_str())
                .ok_or_else(|| {
                    usage(format!(
                        "unknown class '{class}'; expected one of {}",
                        GF_CLASSES.join(", ")
                    ))
                })?;
            class_jobs(class, &grid.pairs(&default_grid(class)), caps, false)
        }
        None => {
            let mut jobs = Vec::new();
            for &class in GF_CLASSES {
                let negative = class == "sym-all-heights-even";
                jobs.extend(class_jobs(class, &default_grid(class), caps, negative)?);
            }
            Ok(jobs)
        }
    }
}
