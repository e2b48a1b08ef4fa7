//! End-to-end verification of `H_2(sl_n(R))` and `H_2(st_n(R))` against the
//! closed forms, with every intermediate certificate recorded.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use stlie_linalg::Field;

use crate::cyclic::{check_bicomplex, hc1_dim, kahler_hc1_char0};
use crate::error::{CoreError, Result};
use crate::homology::{h2_dim, Uce};
use crate::presets::AnyAlgebra;
use crate::report::{Check, Computed, Dimensions, Predictions, RingSummary, Verdict, VerifyReport, SCHEMA_VERSION};
use crate::ring::{radical, Algebra, QuotientRing};
use crate::sl::build_sl;
use crate::steinberg::{
    bracket_formula_suite, build_hat, build_psi, build_st, greatest_other, lift_generators, lift_generators_with,
    nu_relation_suite, offending_span, recenter, Carry, SteinbergModel,
};
use crate::with_algebra;

pub const DEFAULT_MAX_DIM: usize = 80;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest `dim sl_n(R)` attempted.
    pub max_dim: usize,
    /// Seed of the randomized well-definedness witness.
    pub seed: u64,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { max_dim: DEFAULT_MAX_DIM, seed: 0, timings: false }
    }
}

/// `n²·dim R − dim R + dim [R, R]`.
pub fn predicted_sl_dim<F: Field>(r: &Algebra<F>, n: usize) -> usize {
    let d = r.dim();
    n * n * d - d + r.commutator_subspace().dim()
}

fn check_input<F: Field>(r: &Algebra<F>, n: usize, max_dim: usize) -> Result<usize> {
    if n < 3 {
        return Err(CoreError::Input(format!("n must be at least 3, got {n}")));
    }
    r.validate()?;
    let dim = predicted_sl_dim(r, n);
    if dim > max_dim {
        return Err(CoreError::GuardExceeded { dim, max: max_dim });
    }
    Ok(dim)
}

/// `r(n)`: the modulus whose quotient `R_{r(n)}` carries the extra homology.
pub fn modulus(n: usize) -> Option<u64> {
    match n {
        3 => Some(3),
        4 => Some(2),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingInfo {
    pub schema_version: u32,
    pub ring: RingSummary,
    pub commutator: usize,
    pub ideal_2: usize,
    pub ideal_3: usize,
    pub quotient_2: usize,
    pub quotient_3: usize,
    pub hc1: usize,
}

fn summary<F: Field>(r: &Algebra<F>) -> RingSummary {
    RingSummary {
        field: r.field().kind().to_string(),
        dim: r.dim(),
        basis: r.labels().to_vec(),
        commutative: r.is_commutative(),
    }
}

pub fn ring_info<F: Field>(r: &Algebra<F>) -> Result<RingInfo> {
    r.validate()?;
    let q2 = r.quotient_rm(2)?;
    let q3 = r.quotient_rm(3)?;
    Ok(RingInfo {
        schema_version: SCHEMA_VERSION,
        ring: summary(r),
        commutator: r.commutator_subspace().dim(),
        ideal_2: q2.ideal().dim(),
        ideal_3: q3.ideal().dim(),
        quotient_2: q2.dim(),
        quotient_3: q3.dim(),
        hc1: hc1_dim(r)?,
    })
}

/// Closed-form `dim H_2` of `sl_n(R)` and `st_n(R)`: `6·dim R_{r(n)}·[n ∈ {3, 4}]`,
/// plus `dim HC_1(R)` for `sl`.
pub fn predictions<F: Field>(r: &Algebra<F>, n: usize) -> Result<Predictions> {
    let extra = match modulus(n) {
        Some(m) => 6 * r.quotient_rm(m)?.dim(),
        None => 0,
    };
    Ok(Predictions { h2_sl: extra + hc1_dim(r)?, h2_st: extra })
}

/// `dim H_2(sl_n(R))` by direct computation.
pub fn h2_sl<F: Field>(r: &Algebra<F>, n: usize, max_dim: usize) -> Result<usize> {
    check_input(r, n, max_dim)?;
    h2_dim(build_sl(r, n)?.lie())
}

fn steinberg_model<F: Field>(r: &Algebra<F>, n: usize, hc1: usize) -> Result<SteinbergModel<F>> {
    let sl = build_sl(r, n)?;
    let uce = Uce::new(sl.lie())?;
    let lifts = recenter(&uce, &sl, &lift_generators(&uce, &sl)?)?;
    let w = offending_span(&uce, &lifts)?;
    build_st(&uce, &sl, &lifts, &w, hc1)
}

/// `dim H_2(st_n(R))` by direct computation on the constructed `st_n(R)`.
pub fn h2_st<F: Field>(r: &Algebra<F>, n: usize, max_dim: usize) -> Result<usize> {
    check_input(r, n, max_dim)?;
    let hc1 = hc1_dim(r)?;
    h2_dim(steinberg_model(r, n, hc1)?.lie())
}

struct Run {
    timings: Option<BTreeMap<String, f64>>,
    checks: Vec<Check>,
    failed_stage: Option<String>,
}

impl Run {
    /// Runs one stage; an error becomes a failing `stage.<name>` check.
    fn stage<T>(&mut self, name: &str, body: impl FnOnce(&mut Vec<Check>) -> Result<T>) -> Option<T> {
        let start = Instant::now();
        let out = body(&mut self.checks);
        if let Some(t) = &mut self.timings {
            t.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
        }
        match out {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks.push(Check::fail(format!("stage.{name}"), e.to_string()));
                self.failed_stage = Some(name.to_string());
                None
            }
        }
    }
}

/// Runs the whole pipeline for `R` and `n`.
///
/// Input errors and the size guard are returned as `Err`; a failing stage
/// or certificate yields a report with verdict `FAIL`.
pub fn verify_main_theorem<F: Field>(r: &Algebra<F>, n: usize, opts: &VerifyOptions) -> Result<VerifyReport> {
    check_input(r, n, opts.max_dim)?;
    let mut run = Run { timings: opts.timings.then(BTreeMap::new), checks: Vec::new(), failed_stage: None };
    let mut dims = Dimensions { ring: r.dim(), commutator: r.commutator_subspace().dim(), ..Default::default() };
    let mut computed = Computed::default();
    let m = modulus(n);

    let ring_stage = run.stage("ring", |checks| {
        let q2 = r.quotient_rm(2)?;
        let q3 = r.quotient_rm(3)?;
        checks.push(Check::pass("ring.ideals"));
        checks.push(if r.left_commutator_ideal() == r.right_commutator_ideal() {
            Check::pass("ring.commutator_ideal_two_sided")
        } else {
            Check::fail("ring.commutator_ideal_two_sided", "R[R,R] ≠ [R,R]R")
        });
        checks.push(Check::from_result("cyclic.bicomplex", check_bicomplex(r)));
        let hc1 = hc1_dim(r)?;
        checks.push(if r.field().characteristic() == 0 && r.is_commutative() {
            Check::equal("cyclic.kahler_agreement", kahler_hc1_char0(r)?, hc1)
        } else {
            Check::skipped("cyclic.kahler_agreement", "needs a commutative algebra in characteristic 0")
        });
        Ok((q2, q3, hc1))
    });
    let predictions_for = |rm: Option<&QuotientRing<F>>, hc1: usize| {
        let extra = rm.map_or(0, |q| 6 * q.dim());
        Predictions { h2_sl: extra + hc1, h2_st: extra }
    };
    let finish = |run: Run, dims, computed, predictions| {
        let verdict = if run.failed_stage.is_none() && !run.checks.iter().any(Check::is_failure) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            ring: summary(r),
            n,
            radical: radical(n as u64),
            dims,
            predictions,
            computed,
            checks: run.checks,
            failed_stage: run.failed_stage,
            verdict,
            timings_ms: run.timings,
        }
    };
    let Some((q2, q3, hc1)) = ring_stage else {
        let p = Predictions { h2_sl: 0, h2_st: 0 };
        return Ok(finish(run, dims, computed, p));
    };
    dims.ideal_2 = q2.ideal().dim();
    dims.ideal_3 = q3.ideal().dim();
    dims.quotient_2 = q2.dim();
    dims.quotient_3 = q3.dim();
    dims.hc1 = hc1;
    let rm = match m {
        Some(2) => Some(&q2),
        Some(3) => Some(&q3),
        _ => None,
    };
    let predictions = predictions_for(rm, hc1);
    let extra = predictions.h2_st;

    let Some(sl) = run.stage("sl", |checks| {
        let sl = build_sl(r, n)?;
        checks.push(Check::from_result("sl.jacobi", sl.lie().validate_lie().map_err(|e| e.to_string())));
        checks.push(Check::from_result("sl.elementary_relations", sl.check_elementary_relations()));
        Ok(sl)
    }) else {
        return Ok(finish(run, dims, computed, predictions));
    };
    dims.sl = Some(sl.dim());

    let Some(uce) = run.stage("uce", |checks| {
        let uce = Uce::new(sl.lie())?;
        checks.push(Check::equal("theorem.h2_sl", uce.h2_of_base(), predictions.h2_sl));
        checks.push(Check::from_result("uce.certificates", uce.validate(opts.seed).map_err(|e| e.to_string())));
        Ok(uce)
    }) else {
        return Ok(finish(run, dims, computed, predictions));
    };
    dims.uce = Some(uce.dim());
    computed.h2_sl = Some(uce.h2_of_base());

    let Some(lifts) = run.stage("lifts", |checks| {
        let lifts = recenter(&uce, &sl, &lift_generators(&uce, &sl)?)?;
        checks.push(Check::pass("lifts.recentered"));
        let other = lift_generators_with(&uce, &sl, |i, j| greatest_other(n, i, j), Carry::Right)?;
        let other = recenter(&uce, &sl, &other)?;
        let same = (0..n).all(|i| {
            (0..n).filter(|&j| j != i).all(|j| (0..r.dim()).all(|l| lifts.basis(i, j, l) == other.basis(i, j, l)))
        });
        checks.push(if same {
            Check::pass("lifts.choice_independence")
        } else {
            Check::fail("lifts.choice_independence", "recentered lifts depend on the intermediate index")
        });
        Ok(lifts)
    }) else {
        return Ok(finish(run, dims, computed, predictions));
    };

    run.stage("nu", |checks| {
        match rm {
            Some(q) => checks.extend(nu_relation_suite(&uce, r, &lifts, q.ideal())),
            None => checks.push(Check::skipped("nu", format!("no ν relations for n = {n}"))),
        }
        Ok(())
    });

    let Some(w) = run.stage("offending_span", |checks| {
        let w = offending_span(&uce, &lifts)?;
        checks.push(Check::equal("theorem.w_dim", w.dim(), extra));
        Ok(w)
    }) else {
        return Ok(finish(run, dims, computed, predictions));
    };
    dims.offending_span = Some(w.dim());

    let Some(st) = run.stage("st", |checks| {
        let st = build_st(&uce, &sl, &lifts, &w, hc1)?;
        checks.extend(st.certificates().iter().cloned());
        Ok(st)
    }) else {
        return Ok(finish(run, dims, computed, predictions));
    };
    dims.st = Some(st.dim());

    run.stage("h2_st", |checks| {
        let h = h2_dim(st.lie())?;
        computed.h2_st = Some(h);
        checks.push(Check::equal("theorem.h2_st", h, extra));
        checks.push(Check::equal("st.h2_matches_uce", h, uce.dim() - st.dim()));
        Ok(())
    });

    run.stage("formulas", |checks| {
        checks.extend(bracket_formula_suite(&st));
        Ok(())
    });

    match rm {
        Some(q) => {
            run.stage("cocycle", |checks| {
                let psi = build_psi(&st, q)?;
                checks.push(Check::from_result("psi.cocycle", psi.verify_cocycle(&st)));
                checks.push(negative_control(&st, &psi, r.unit_index(), uce.dim())?);
                let hat = build_hat(&st, &psi)?;
                dims.st_hat = Some(hat.dim());
                checks.extend(hat.certify(uce.dim()));
                Ok(())
            });
        }
        None => {
            run.checks.push(Check::skipped("psi", format!("no cocycle for n = {n}")));
            run.checks.push(Check::skipped("hat", format!("st_{n}(R) is its own universal central extension")));
        }
    }

    run.stage("uce_closed", |checks| {
        checks.push(Check::equal("uce.centrally_closed", h2_dim(uce.carrier())?, 0));
        Ok(())
    });

    Ok(finish(run, dims, computed, predictions))
}

/// Zeroes `ψ(X_12(1), X_34(1))` for `n = 4` or `ψ(X_12(1), X_13(1))` for
/// `n = 3` in both orders; the cocycle condition or the hat certificates must fail.
fn negative_control<F: Field>(
    st: &SteinbergModel<F>,
    psi: &crate::steinberg::Cocycle<F>,
    unit: usize,
    uce_dim: usize,
) -> Result<Check> {
    let id = "psi.negative_control";
    if psi.block_dim() == 0 {
        return Ok(Check::skipped(id, "ψ vanishes identically"));
    }
    let a = psi.x_index(0, 1, unit);
    let b = if psi.n() == 4 { psi.x_index(2, 3, unit) } else { psi.x_index(0, 2, unit) };
    let bad = psi.with_pair_zeroed(a, b)?;
    if bad.verify_cocycle(st).is_err() {
        return Ok(Check::pass(id));
    }
    let hat = build_hat(st, &bad)?;
    Ok(if hat.certify(uce_dim).iter().any(Check::is_failure) {
        Check::pass(id)
    } else {
        Check::fail(id, "perturbed ψ passed every certificate")
    })
}

pub fn verify_any(r: &AnyAlgebra, n: usize, opts: &VerifyOptions) -> Result<VerifyReport> {
    with_algebra!(r, a => verify_main_theorem(a, n, opts))
}

pub fn ring_info_any(r: &AnyAlgebra) -> Result<RingInfo> {
    with_algebra!(r, a => ring_info(a))
}

pub fn h2_sl_any(r: &AnyAlgebra, n: usize, max_dim: usize) -> Result<usize> {
    with_algebra!(r, a => h2_sl(a, n, max_dim))
}

pub fn predictions_any(r: &AnyAlgebra, n: usize) -> Result<Predictions> {
    with_algebra!(r, a => predictions(a, n))
}

pub fn h2_st_any(r: &AnyAlgebra, n: usize, max_dim: usize) -> Result<usize> {
    with_algebra!(r, a => h2_st(a, n, max_dim))
}
