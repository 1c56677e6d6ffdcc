//! Acceptance criteria 1–8 against the default configuration (10⁴ samples,
//! seed 42). Prints one `criterion N: PASS|FAIL` line per criterion and
//! exits non-zero if any fails.

use std::sync::OnceLock;
use std::time::Duration;

use monopole_verify::emit::to_json;
use monopole_verify::{run, CheckResult, SuiteConfig, VerificationReport};

fn report() -> &'static VerificationReport {
    static REPORT: OnceLock<VerificationReport> = OnceLock::new();
    REPORT.get_or_init(|| run(&SuiteConfig::default()).expect("default config is valid"))
}

/// A named check with the tolerance it must meet and the samples it must use.
struct Requirement {
    name: &'static str,
    tolerance: f64,
    min_samples: usize,
}

const fn req(name: &'static str, tolerance: f64, min_samples: usize) -> Requirement {
    Requirement {
        name,
        tolerance,
        min_samples,
    }
}

fn problems(r: &Requirement) -> Option<String> {
    let Some(c) = report().get(r.name) else {
        return Some(format!("{}: not in the report", r.name));
    };
    let CheckResult {
        max_abs_err,
        tolerance,
        samples_used,
        pass,
        ..
    } = c;
    if !*pass || *max_abs_err > r.tolerance || *tolerance > r.tolerance || *samples_used < r.min_samples {
        Some(format!(
            "{}: err {max_abs_err:e} (tol {tolerance:e}, required {:e}), {samples_used} samples (required {})",
            r.name, r.tolerance, r.min_samples
        ))
    } else {
        None
    }
}

fn criterion(reqs: &[Requirement], extra: impl FnOnce() -> Vec<String>) -> Vec<String> {
    let mut failures: Vec<String> = reqs.iter().filter_map(problems).collect();
    failures.extend(extra());
    failures
}

fn notes_mention(name: &str, words: &[&str]) -> Vec<String> {
    let notes = report().get(name).map(|c| c.convention_notes.as_str()).unwrap_or("");
    words
        .iter()
        .filter(|w| !notes.contains(*w))
        .map(|w| format!("{name}: notes do not mention `{w}`"))
        .collect()
}

const N: usize = 10_000;

fn criterion_1_cocycle() -> Vec<String> {
    criterion(
        &[
            req("ej.cocycle.zero_translation", 1e-12, N),
            req("ej.cocycle.unitarity", 1e-12, N),
            req("ej.cocycle.reflection", 1e-12, N),
            req("ej.cocycle.ray_composition", 1e-12, N),
        ],
        Vec::new,
    )
}

fn criterion_2_projective_representation() -> Vec<String> {
    criterion(
        &[
            req("ej.translation.projective_composition", 1e-12, N),
            req("ej.multiplier.cancellation", 1e-12, N),
            req("ej.multiplier.associativity", 1e-12, N),
        ],
        Vec::new,
    )
}

fn criterion_3_geometric_phase() -> Vec<String> {
    criterion(
        &[
            req("ej.geometric_phase.constancy", 1e-6, 1_000),
            req("ej.geometric_phase.magnitude", 1e-6, 1_000),
        ],
        || notes_mention("ej.geometric_phase.magnitude", &["sign"]),
    )
}

fn criterion_4_gccr() -> Vec<String> {
    criterion(
        &[
            req("ej.gccr.nabla_x", 1e-8, N),
            req("ej.gccr.x_x", 1e-12, N),
            req("ej.gccr.nabla_nabla", 1e-8, N),
            req("ej.gccr.p_p", 1e-8, N),
            req("ej.gccr.l_j", 1e-8, N),
            req("ej.j.square", 1e-12, N),
            req("ej.j.unitary", 1e-12, N),
        ],
        Vec::new,
    )
}

fn criterion_5_weyl_system() -> Vec<String> {
    criterion(
        &[
            req("weyl.compose.translation", 1e-12, N),
            req("weyl.compose.position", 1e-12, N),
            req("weyl.compose.unit_norm", 1e-10, N),
            req("weyl.compose.mixed", 1e-10, N),
            req("weyl.compose.general", 1e-10, N),
            req("weyl.convention.oracle", 1e-10, 1),
        ],
        || {
            let mut v = notes_mention("weyl.convention.oracle", &["s = +1", "σ = -1"]);
            v.extend(notes_mention("weyl.compose.mixed", &["convention frozen"]));
            v
        },
    )
}

fn criterion_6_coadjoint() -> Vec<String> {
    criterion(
        &[
            req("orbit.casimir.invariance", 1e-10, 1_000),
            req("orbit.pauli_lubanski.covariance", 1e-10, N),
            req("orbit.structure.antisymmetry", 1e-10, 1),
            req("orbit.structure.jacobi", 1e-10, 1),
            req("orbit.structure.regeneration", 1e-8, N),
        ],
        Vec::new,
    )
}

fn criterion_7_massless_orbit() -> Vec<String> {
    criterion(
        &[
            req("orbit.chart.round_trip_chart", 1e-12, N),
            req("orbit.chart.round_trip_point", 1e-12, N),
            req("orbit.bracket.p_q", 1e-8, N),
            req("orbit.bracket.q_q", 1e-8, N),
            req("orbit.symplectic.inverse_is_bivector", 1e-8, N),
            req("orbit.q_action.time_translation", 1e-10, N),
            req("orbit.q_action.space_translation", 1e-10, N),
            req("orbit.q_action.rotation", 1e-10, N),
            req("orbit.duality.monopole", 1e-10, N),
        ],
        || notes_mention("orbit.duality.monopole", &["λ = ½", "exponent 2"]),
    )
}

fn criterion_8_determinism() -> Vec<String> {
    let first = to_json(report()).expect("serializable");
    let second = to_json(&run(&SuiteConfig::default()).unwrap()).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| to_json(&run(&SuiteConfig::default()).unwrap()).unwrap());
    let mut failures = Vec::new();
    if first != second {
        failures.push("two runs differ".to_string());
    }
    if first != single {
        failures.push("a single-threaded run differs".to_string());
    }
    failures
}

/// Every registered check passes and the run stays at desk scale.
fn default_run_passes_at_desk_scale() -> Vec<String> {
    let r = report();
    let mut failures: Vec<String> = r.failures().map(|c| format!("{} fails", c.name)).collect();
    if r.wall_time >= Duration::from_secs(60) {
        failures.push(format!("default run took {:?}", r.wall_time));
    }
    failures
}

fn main() {
    let criteria: [(&str, fn() -> Vec<String>); 9] = [
        ("criterion 1", criterion_1_cocycle),
        ("criterion 2", criterion_2_projective_representation),
        ("criterion 3", criterion_3_geometric_phase),
        ("criterion 4", criterion_4_gccr),
        ("criterion 5", criterion_5_weyl_system),
        ("criterion 6", criterion_6_coadjoint),
        ("criterion 7", criterion_7_massless_orbit),
        ("criterion 8", criterion_8_determinism),
        ("all checks at default config", default_run_passes_at_desk_scale),
    ];
    let mut failed = 0;
    for (label, run) in criteria {
        let failures = run();
        println!("{label}: {}", if failures.is_empty() { "PASS" } else { "FAIL" });
        for f in &failures {
            println!("    {f}");
        }
        failed += usize::from(!failures.is_empty());
    }
    println!("wall time of the default run: {:.2?}", report().wall_time);
    if failed > 0 {
        std::process::exit(1);
    }
}
