//! Acceptance gate: one line per criterion, nonzero exit if any fails or
//! exceeds its time limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use stlie_core::cyclic::hc1_dim;
use stlie_core::homology::{h2_dim, Uce};
use stlie_core::presets::{preset, AnyAlgebra};
use stlie_core::report::{Status, VerifyReport};
use stlie_core::ring::Algebra;
use stlie_core::sl::build_sl;
use stlie_core::steinberg::{build_hat, build_psi, build_st, lift_generators, offending_span, recenter};
use stlie_core::verify::{h2_sl_any, verify_any, VerifyOptions};
use stlie_core::with_algebra;
use stlie_linalg::Field;

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

/// Rings of the acceptance suite, each run at n = 3, 4, 5.
const SUITE: [&str; 7] = ["gf:2", "gf:3", "dual:2", "dual:3", "matrix:2:2", "q", "poly:q:x^2"];

/// Allows `sl_5(M_2(F_2))`, which has dimension 99.
const SUITE_MAX_DIM: usize = 100;

fn ring(name: &str) -> AnyAlgebra {
    preset(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn verify(name: &str, n: usize, max_dim: usize) -> Result<VerifyReport, String> {
    let opts = VerifyOptions { max_dim, ..Default::default() };
    verify_any(&ring(name), n, &opts).map_err(|e| format!("{name} n={n}: {e}"))
}

/// Full pipeline must pass and `H_2(st)` must equal `expected`.
fn h2_st_exact(name: &str, n: usize, expected: usize) -> Outcome {
    let rep = verify(name, n, SUITE_MAX_DIM)?;
    let got = rep.computed.h2_st.ok_or_else(|| format!("no H_2(st); failed stage {:?}", rep.failed_stage))?;
    if !rep.passed() {
        let failed: Vec<&str> = rep.checks.iter().filter(|c| c.is_failure()).map(|c| c.id.as_str()).collect();
        return Err(format!("verdict FAIL: {failed:?}"));
    }
    if got != expected {
        return Err(format!("dim H_2(st_{n}) = {got}, expected {expected}"));
    }
    Ok(format!("dim H_2(st_{n}) = {got}, W = {}", rep.dims.offending_span.unwrap_or(0)))
}

fn criterion_1() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_stlie"))
        .args(["verify", "--n", "4", "--preset", "gf:2", "--json", "-"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("exit code {:?}", out.status.code()));
    }
    let text = String::from_utf8_lossy(&out.stdout);
    let json = &text[text.find("{\n").ok_or("no JSON on stdout")?..];
    let v: serde_json::Value = serde_json::from_str(json).map_err(|e| e.to_string())?;
    if v["verdict"] != "PASS" || v["computed"]["h2_st"] != 6 {
        return Err(format!("verdict {}, H_2(st) {}", v["verdict"], v["computed"]["h2_st"]));
    }
    Ok("stlie verify exit 0, dim H_2(st_4) = 6".into())
}

fn criterion_7() -> Outcome {
    // Reference values of dim H_2(sl_n(R)) for n = 3, 4, 5.
    let reference: [(&str, [usize; 3]); 4] =
        [("gf:2", [0, 6, 0]), ("gf:3", [6, 0, 0]), ("dual:2", [1, 13, 1]), ("dual:3", [12, 0, 0])];
    let mut count = 0;
    for name in SUITE {
        let r = ring(name);
        for n in 3..=5 {
            let computed = h2_sl_any(&r, n, SUITE_MAX_DIM).map_err(|e| format!("{name} n={n}: {e}"))?;
            let predicted = with_algebra!(&r, a => decomposition(a, n)).map_err(|e| format!("{name}: {e}"))?;
            if computed != predicted {
                return Err(format!("{name} n={n}: H_2(sl) = {computed}, decomposition gives {predicted}"));
            }
            if let Some((_, vals)) = reference.iter().find(|(s, _)| *s == name) {
                if vals[n - 3] != computed {
                    return Err(format!("{name} n={n}: H_2(sl) = {computed}, reference {}", vals[n - 3]));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} (ring, n) instances agree"))
}

/// `6·dim R_{r(n)}·[n ∈ {3, 4}] + dim HC_1(R)`, with `HC_1` from the bicomplex.
fn decomposition<F: Field>(r: &Algebra<F>, n: usize) -> stlie_core::Result<usize> {
    let extra = match n {
        3 => 6 * r.quotient_rm(3)?.dim(),
        4 => 6 * r.quotient_rm(2)?.dim(),
        _ => 0,
    };
    Ok(extra + hc1_dim(r)?)
}

const COCYCLE_INSTANCES: [(&str, usize); 3] = [("gf:2", 4), ("dual:2", 4), ("gf:3", 3)];

/// Builds `ψ` directly and checks it exhaustively, then perturbs it.
fn cocycle_instance<F: Field>(r: &Algebra<F>, n: usize) -> Result<(), String> {
    let e = |e: stlie_core::CoreError| e.to_string();
    let sl = build_sl(r, n).map_err(e)?;
    let uce = Uce::new(sl.lie()).map_err(e)?;
    let lifts = recenter(&uce, &sl, &lift_generators(&uce, &sl).map_err(e)?).map_err(e)?;
    let w = offending_span(&uce, &lifts).map_err(e)?;
    let st = build_st(&uce, &sl, &lifts, &w, hc1_dim(r).map_err(e)?).map_err(e)?;
    let m = if n == 4 { 2 } else { 3 };
    let psi = build_psi(&st, &r.quotient_rm(m).map_err(e)?).map_err(e)?;
    psi.verify_cocycle(&st)?;
    let u = r.unit_index();
    let (a, b) = if n == 4 { (psi.x_index(0, 1, u), psi.x_index(2, 3, u)) } else { (psi.x_index(0, 1, u), psi.x_index(0, 2, u)) };
    let bad = psi.with_pair_zeroed(a, b).map_err(e)?;
    let hat_bad = build_hat(&st, &bad).map_err(e)?;
    if bad.verify_cocycle(&st).is_ok() && !hat_bad.certify(uce.dim()).iter().any(|c| c.is_failure()) {
        return Err("perturbed ψ was not detected".into());
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for (name, n) in COCYCLE_INSTANCES {
        with_algebra!(&ring(name), a => cocycle_instance(a, n)).map_err(|e| format!("{name} n={n}: {e}"))?;
    }
    Ok("3 instances: cocycle holds on all basis triples, perturbation detected".into())
}

fn criterion_9() -> Outcome {
    let mut dims = Vec::new();
    for (name, n) in COCYCLE_INSTANCES {
        let rep = verify(name, n, SUITE_MAX_DIM)?;
        for id in ["hat.centrally_closed", "hat.dim_matches_uce", "hat.kernel_central", "hat.jacobi"] {
            match rep.check(id) {
                Some(c) if c.status == Status::Pass => {}
                other => return Err(format!("{name} n={n}: {id} = {other:?}")),
            }
        }
        let hat = rep.dims.st_hat.ok_or("no hat dimension")?;
        if Some(hat) != rep.dims.uce {
            return Err(format!("{name} n={n}: dim hat {hat} ≠ dim uce {:?}", rep.dims.uce));
        }
        // independent of the report: H_2 of the hat algebra recomputed here
        let h = with_algebra!(&ring(name), a => hat_h2(a, n))?;
        if h != 0 {
            return Err(format!("{name} n={n}: H_2(hat) = {h}"));
        }
        dims.push(format!("{name}/{n}: {hat}"));
    }
    Ok(format!("dim hat = dim uce, H_2 = 0 ({})", dims.join(", ")))
}

fn hat_h2<F: Field>(r: &Algebra<F>, n: usize) -> Result<usize, String> {
    let e = |e: stlie_core::CoreError| e.to_string();
    let sl = build_sl(r, n).map_err(e)?;
    let uce = Uce::new(sl.lie()).map_err(e)?;
    let lifts = recenter(&uce, &sl, &lift_generators(&uce, &sl).map_err(e)?).map_err(e)?;
    let w = offending_span(&uce, &lifts).map_err(e)?;
    let st = build_st(&uce, &sl, &lifts, &w, hc1_dim(r).map_err(e)?).map_err(e)?;
    let psi = build_psi(&st, &r.quotient_rm(if n == 4 { 2 } else { 3 }).map_err(e)?).map_err(e)?;
    h2_dim(build_hat(&st, &psi).map_err(e)?.lie()).map_err(e)
}

/// All presets used for the ring-level properties.
const PRESETS: [&str; 12] = [
    "gf:2", "gf:3", "gf:5", "dual:2", "dual:3", "poly:2:x^3", "poly:3:x^2+1", "matrix:2:2", "matrix:3:2", "group:2:S3",
    "group:3:S3", "group:2:C4",
];

const CHAR0: [&str; 5] = ["q", "poly:q:x^2", "poly:q:x^3", "poly:q:x^2-1", "group:q:C3"];

fn criterion_10() -> Outcome {
    let families = ["jacobi", "formula.", "nu.", "st.decomposition", "st.torus_generators", "lifts.choice_independence"];
    let mut checked = 0;
    for name in SUITE {
        for n in 3..=5 {
            let rep = verify(name, n, SUITE_MAX_DIM)?;
            for c in &rep.checks {
                let in_family = families.iter().any(|f| c.id.contains(f)) || c.id == "uce.certificates";
                if in_family && c.is_failure() {
                    return Err(format!("{name} n={n}: {} ({})", c.id, c.detail));
                }
                if in_family && c.status == Status::Pass {
                    checked += 1;
                }
            }
            if !rep.passed() {
                return Err(format!("{name} n={n}: verdict FAIL"));
            }
        }
    }
    for name in PRESETS.iter().chain(CHAR0.iter()) {
        with_algebra!(&ring(name), a => ideal_properties(a)).map_err(|e| format!("{name}: {e}"))?;
    }
    for name in CHAR0 {
        let r = ring(name);
        let (k, b) = with_algebra!(&r, a => (stlie_core::cyclic::kahler_hc1_char0(a), hc1_dim(a)));
        let (k, b) = (k.map_err(|e| e.to_string())?, b.map_err(|e| e.to_string())?);
        if k != b {
            return Err(format!("{name}: Kähler {k} ≠ bicomplex {b}"));
        }
    }
    Ok(format!("{checked} property checks passed; ideals on {} presets; HC_1 oracles agree on {}", PRESETS.len() + CHAR0.len(), CHAR0.len()))
}

fn ideal_properties<F: Field>(r: &Algebra<F>) -> Result<(), String> {
    if r.left_commutator_ideal() != r.right_commutator_ideal() {
        return Err("R[R,R] ≠ [R,R]R".into());
    }
    for m in [2, 3] {
        let q = r.quotient_rm(m).map_err(|e| e.to_string())?;
        if !q.is_commutative() {
            return Err(format!("R_{m} is not commutative"));
        }
    }
    Ok(())
}

const CRITERIA: [Criterion; 11] = [
    Criterion { id: "1", title: "H_2(st_4(F_2)) = 6 via stlie verify", limit: secs(30), run: criterion_1 },
    Criterion { id: "2", title: "H_2(st_4(F_2[x]/x^2)) = 12", limit: secs(120), run: || h2_st_exact("dual:2", 4, 12) },
    Criterion { id: "3", title: "H_2(st_4(F_3)) = 0", limit: secs(60), run: || h2_st_exact("gf:3", 4, 0) },
    Criterion { id: "4", title: "H_2(st_4(M_2(F_2))) = 0", limit: secs(300), run: || h2_st_exact("matrix:2:2", 4, 0) },
    Criterion { id: "5a", title: "H_2(st_3(F_3)) = 6", limit: secs(30), run: || h2_st_exact("gf:3", 3, 6) },
    Criterion { id: "5b", title: "H_2(st_3(F_2)) = 0", limit: secs(30), run: || h2_st_exact("gf:2", 3, 0) },
    Criterion { id: "6", title: "H_2(st_5(F_2)) = 0", limit: secs(60), run: || h2_st_exact("gf:2", 5, 0) },
    Criterion { id: "7", title: "H_2(sl_n(R)) decomposition on the suite", limit: secs(300), run: criterion_7 },
    Criterion { id: "8", title: "cocycle certificates and negative control", limit: secs(300), run: criterion_8 },
    Criterion { id: "9", title: "extension is centrally closed with dim uce", limit: secs(300), run: criterion_9 },
    Criterion { id: "10", title: "property suites", limit: secs(600), run: criterion_10 },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; time limit exceeded")),
            Err(e) => (false, e),
        };
        failures += usize::from(!ok);
        println!(
            "criterion {:>3}  {}  {}  [{:.2}s / {}s]  {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
    }
    println!("acceptance: {} of {} criteria passed", CRITERIA.len() - failures, CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
