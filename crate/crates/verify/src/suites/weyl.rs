use rand::Rng;
use rand_chacha::ChaCha8Rng;

use monopole_core::field::{Field, ProbeFunction};
use monopole_core::quat::{qexp_pure, Quaternion, Vec3};
use monopole_core::sampling::{random_probe, SampleDomain};
use monopole_core::weyl::{
    calibrate, closed_form_phase, exact_phase, Ordering, WeylConvention, WeylLabel, WeylSystem,
    ORACLE_STEPS,
};

use super::TOL_WEYL;
use crate::config::Suite;
use crate::report::Tally;
use crate::runner::{Check, Ctx, Outcome};

/// Samples for checks that integrate the characteristic ODE.
const ORACLE_SAMPLES: usize = 1000;

const FROZEN_NOTE: &str = "convention frozen from the characteristic-ODE oracle: \
    PX phase w(a; x-a) exp(j(x-a) a'·(x-a)) exp(+½ j(x-a) a·a'), \
    T(α)T(β) = T(α+β) M(a,b) exp(-½ J (a·b' - b·a')); the defect D is the inner factor \
    T(α)T(β)ψ = T(α+β)[Dψ] at y = x - a - b, phases on the left";

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check {
        name,
        suite: Suite::Weyl,
        run,
    };
    vec![
        c("weyl.convention.oracle", convention_oracle),
        c("weyl.exact_exponential.closed_form", exact_exponential),
        c("weyl.forms.zero_label", forms_zero_label),
        c("weyl.forms.translation", forms_translation),
        c("weyl.forms.position", forms_position),
        c("weyl.forms.frozen_agreement", forms_frozen_agreement),
        c("weyl.forms.printed_defect_unit", printed_defect_unit),
        c("weyl.forms.printed_defect_predicted", printed_defect_predicted),
        c("weyl.compose.translation", compose_translation),
        c("weyl.compose.position", compose_position),
        c("weyl.compose.unit_norm", compose_unit_norm),
        c("weyl.compose.mixed", compose_mixed),
        c("weyl.compose.general", compose_general),
        c("weyl.compose.symplectic_isolation", compose_isolation),
    ]
}

fn system(ctx: &Ctx) -> WeylSystem {
    WeylSystem::new(ctx.kin, WeylConvention::FROZEN)
}

fn unit_box<R: Rng>(r: &mut R) -> Vec3 {
    Vec3::from_fn(|_, _| r.random_range(-1.0..=1.0))
}

/// A composition sample: two labels, a probe, and `x` built from a sampled
/// `y = x - a - b` so the probe is evaluated where it is not negligible.
struct Composition {
    alpha: WeylLabel,
    beta: WeylLabel,
    psi: ProbeFunction,
    x: Vec3,
}

fn composition<R, F>(d: &SampleDomain, r: &mut R, labels: F) -> Composition
where
    R: Rng,
    F: FnOnce(&SampleDomain, &mut R) -> (WeylLabel, WeylLabel),
{
    let psi = random_probe(r);
    let y = d.point(r);
    let (alpha, beta) = labels(d, r);
    Composition {
        x: y + alpha.a + beta.a,
        alpha,
        beta,
        psi,
    }
}

/// Deviation of the defect from the prediction under `system`.
fn defect_error(s: &WeylSystem, c: &Composition) -> Option<f64> {
    let d = s.compose_defect(&c.alpha, &c.beta, &c.psi, &c.x).ok()?;
    let p = s.predicted_defect(&c.alpha, &c.beta, &c.x).ok()?;
    Some(d.max_abs_diff(p.inner()))
}

fn general_labels(d: &SampleDomain, r: &mut ChaCha8Rng) -> (WeylLabel, WeylLabel) {
    (
        WeylLabel::new(d.vector(r), d.vector(r)),
        WeylLabel::new(d.vector(r), d.vector(r)),
    )
}

fn mixed_labels(d: &SampleDomain, r: &mut ChaCha8Rng) -> (WeylLabel, WeylLabel) {
    let (t, p) = (WeylLabel::translation(d.vector(r)), WeylLabel::position(d.vector(r)));
    if r.random_bool(0.5) {
        (t, p)
    } else {
        (p, t)
    }
}

fn convention_oracle(ctx: &Ctx) -> Outcome {
    let n = ctx.samples().min(ORACLE_SAMPLES / 4);
    let cal = calibrate(&ctx.kin, ctx.config.seed, n);
    let selected = cal.convention == WeylConvention::FROZEN;
    let residual = if selected {
        cal.exact_vs_plus.max(cal.mixed_vs_minus)
    } else {
        f64::INFINITY
    };
    let tally = Tally {
        used: cal.samples,
        skipped: 0,
        max_err: residual,
    };
    Outcome::new(
        tally,
        TOL_WEYL,
        format!(
            "oracle selects s = {:+}, σ = {:+}; exact exponential vs s = +1: {:.3e}, vs s = -1: {:.3e}; \
             mixed defect vs σ = +1: {:.3e}, vs σ = -1: {:.3e}; the usual written signs are s = -1, σ = +1",
            cal.convention.correction_sign,
            cal.convention.symplectic_sign,
            cal.exact_vs_plus,
            cal.exact_vs_minus,
            cal.mixed_vs_plus,
            cal.mixed_vs_minus,
        ),
    )
}

fn exact_exponential(ctx: &Ctx) -> Outcome {
    let s = system(ctx);
    let t = ctx.sample(
        "weyl.exact_exponential.closed_form",
        ctx.samples().min(ORACLE_SAMPLES),
        |d, r| {
            let x = d.point(r);
            let label = WeylLabel::new(unit_box(r), unit_box(r));
            let exact = exact_phase(&ctx.kin, &label, &x, ORACLE_STEPS).ok()?;
            Some(exact.max_abs_diff(s.phase(&label, &x).ok()?.inner()))
        },
    );
    Outcome::new(
        t,
        TOL_WEYL,
        format!(
            "RK4 with {ORACLE_STEPS} steps along the straight segment from x - a to x; labels in [-1, 1]³"
        ),
    )
}

/// `T(α)ψ(x)` from both closed forms under correction sign `s`.
fn both_forms(ctx: &Ctx, label: &WeylLabel, s: f64, psi: &ProbeFunction, x: &Vec3) -> Option<(Quaternion, Quaternion)> {
    let value = psi.eval(&(x - label.a));
    let px = closed_form_phase(&ctx.kin, label, Ordering::PX, s, x).ok()?;
    let xp = closed_form_phase(&ctx.kin, label, Ordering::XP, s, x).ok()?;
    Some((px * value, xp * value))
}

fn forms_zero_label(ctx: &Ctx) -> Outcome {
    let s = WeylConvention::PRINTED.correction_sign;
    let t = ctx.sample("weyl.forms.zero_label", ctx.samples(), |d, r| {
        let (x, psi) = (d.point(r), random_probe(r));
        let (px, xp) = both_forms(ctx, &WeylLabel::zero(), s, &psi, &x)?;
        let v = psi.eval(&x);
        Some(px.max_abs_diff(&v).max(xp.max_abs_diff(&v)))
    });
    Outcome::new(t, ctx.config.tol_exact, "T(0)ψ = ψ in both orderings")
}

fn forms_translation(ctx: &Ctx) -> Outcome {
    let s = WeylConvention::PRINTED.correction_sign;
    let t = ctx.sample("weyl.forms.translation", ctx.samples(), |d, r| {
        let (x, psi) = (d.point(r), random_probe(r));
        let a = d.vector(r);
        let (px, xp) = both_forms(ctx, &WeylLabel::translation(a), s, &psi, &x)?;
        let u = ctx.kin.apply_U(&a, &psi, &x).ok()?;
        Some(px.max_abs_diff(&u).max(xp.max_abs_diff(&u)))
    });
    Outcome::new(t, ctx.config.tol_exact, "label (a, 0) gives U(a) in both orderings")
}

fn forms_position(ctx: &Ctx) -> Outcome {
    let s = WeylConvention::PRINTED.correction_sign;
    let t = ctx.sample("weyl.forms.position", ctx.samples(), |d, r| {
        let (x, psi) = (d.point(r), random_probe(r));
        let ap = d.vector(r);
        let (px, xp) = both_forms(ctx, &WeylLabel::position(ap), s, &psi, &x)?;
        let expected = qexp_pure(&ctx.kin.jdir(&x).ok()?, ap.dot(&x)) * psi.eval(&x);
        Some(px.max_abs_diff(&expected).max(xp.max_abs_diff(&expected)))
    });
    Outcome::new(t, ctx.config.tol_exact, "label (0, a') gives exp(j(x) a'·x)ψ(x) in both orderings")
}

fn forms_frozen_agreement(ctx: &Ctx) -> Outcome {
    let s = WeylConvention::FROZEN.correction_sign;
    let t = ctx.sample("weyl.forms.frozen_agreement", ctx.samples(), |d, r| {
        let (x, psi) = (d.point(r), random_probe(r));
        let label = WeylLabel::new(d.vector(r), d.vector(r));
        let (px, xp) = both_forms(ctx, &label, s, &psi, &x)?;
        Some(px.max_abs_diff(&xp))
    });
    Outcome::new(t, TOL_WEYL, "PX and XP orderings coincide with correction sign s = +1")
}

/// Inner defect `Φ_PX⁻¹ Φ_XP` of the forms as usually written, with `j(x - a)`.
fn printed_defect<R: Rng>(ctx: &Ctx, d: &SampleDomain, r: &mut R) -> Option<(Quaternion, Quaternion)> {
    let x = d.point(r);
    let label = WeylLabel::new(d.vector(r), d.vector(r));
    let s = WeylConvention::PRINTED.correction_sign;
    let px = closed_form_phase(&ctx.kin, &label, Ordering::PX, s, &x).ok()?;
    let xp = closed_form_phase(&ctx.kin, &label, Ordering::XP, s, &x).ok()?;
    let j = ctx.kin.jdir(&(x - label.a)).ok()?;
    let predicted = qexp_pure(&j, 2.0 * label.a.dot(&label.a_prime));
    Some(((px.inverse() * xp).into_inner(), predicted.into_inner()))
}

fn printed_defect_unit(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("weyl.forms.printed_defect_unit", ctx.samples(), |d, r| {
        let (defect, _) = printed_defect(ctx, d, r)?;
        Some((defect.norm() - 1.0).abs())
    });
    Outcome::new(t, TOL_WEYL, "the written PX (-½) and XP (+½) forms differ by a unit quaternion")
}

fn printed_defect_predicted(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("weyl.forms.printed_defect_predicted", ctx.samples(), |d, r| {
        let (defect, predicted) = printed_defect(ctx, d, r)?;
        Some(defect.max_abs_diff(&predicted))
    });
    Outcome::new(
        t,
        TOL_WEYL,
        "with s = -1 the XP form equals the PX form times exp(2 j(x-a) a·a') on the inside; \
         conjugation w j(x-a) w* = j(x) moves the XP exponent across w",
    )
}

fn compose_translation(ctx: &Ctx) -> Outcome {
    let s = system(ctx);
    let t = ctx.sample("weyl.compose.translation", ctx.samples(), |d, r| {
        let c = composition(d, r, |d, r| {
            (WeylLabel::translation(d.vector(r)), WeylLabel::translation(d.vector(r)))
        });
        let defect = s.compose_defect(&c.alpha, &c.beta, &c.psi, &c.x).ok()?;
        let y = c.x - c.alpha.a - c.beta.a;
        let m = ctx.kin.multiplier_m(&c.alpha.a, &c.beta.a, &y).ok()?;
        Some(defect.max_abs_diff(m.inner()))
    });
    Outcome::new(t, ctx.config.tol_exact, "D = m(a, b; x - a - b)")
}

fn compose_position(ctx: &Ctx) -> Outcome {
    let s = system(ctx);
    let t = ctx.sample("weyl.compose.position", ctx.samples(), |d, r| {
        let c = composition(d, r, |d, r| {
            (WeylLabel::position(d.vector(r)), WeylLabel::position(d.vector(r)))
        });
        let defect = s.compose_defect(&c.alpha, &c.beta, &c.psi, &c.x).ok()?;
        Some(defect.max_abs_diff(&Quaternion::ONE))
    });
    Outcome::new(t, ctx.config.tol_exact, "position phases share the axis j(x) and commute")
}

fn compose_unit_norm(ctx: &Ctx) -> Outcome {
    let s = system(ctx);
    let t = ctx.sample("weyl.compose.unit_norm", ctx.samples(), |d, r| {
        let c = composition(d, r, general_labels);
        let defect = s.compose_defect(&c.alpha, &c.beta, &c.psi, &c.x).ok()?;
        Some((defect.norm() - 1.0).abs())
    });
    Outcome::new(t, TOL_WEYL, "")
}

/// Deviations under the frozen signs, and a smaller sample of deviations
/// with the written composition sign, for the notes.
fn compose_against_prediction<F>(ctx: &Ctx, id: &str, labels: F) -> (Tally, f64)
where
    F: Fn(&SampleDomain, &mut ChaCha8Rng) -> (WeylLabel, WeylLabel) + Sync,
{
    let frozen = system(ctx);
    let t = ctx.sample(id, ctx.samples(), |d, r| defect_error(&frozen, &composition(d, r, &labels)));
    let written = WeylSystem::new(
        ctx.kin,
        WeylConvention {
            symplectic_sign: WeylConvention::PRINTED.symplectic_sign,
            ..WeylConvention::FROZEN
        },
    );
    let alt = ctx.sample(id, ctx.samples().min(200), |d, r| {
        defect_error(&written, &composition(d, r, &labels))
    });
    (t, alt.max_err)
}

fn compose_mixed(ctx: &Ctx) -> Outcome {
    let (t, alt) = compose_against_prediction(ctx, "weyl.compose.mixed", mixed_labels);
    Outcome::new(
        t,
        TOL_WEYL,
        format!("{FROZEN_NOTE}; translation × position in both orders; with σ = +1 the deviation reaches {alt:.3e}"),
    )
}

fn compose_general(ctx: &Ctx) -> Outcome {
    let (t, alt) = compose_against_prediction(ctx, "weyl.compose.general", general_labels);
    Outcome::new(
        t,
        TOL_WEYL,
        format!("{FROZEN_NOTE}; with σ = +1 the deviation reaches {alt:.3e}"),
    )
}

fn compose_isolation(ctx: &Ctx) -> Outcome {
    let s = system(ctx);
    let t = ctx.sample("weyl.compose.symplectic_isolation", ctx.samples(), |d, r| {
        // a' = t a, b' = t b makes a·b' - b·a' vanish
        let c = composition(d, r, |d, r| {
            let (a, b) = (d.vector(r), d.vector(r));
            let k = r.random_range(-1.0..=1.0);
            (WeylLabel::new(a, a * k), WeylLabel::new(b, b * k))
        });
        let defect = s.compose_defect(&c.alpha, &c.beta, &c.psi, &c.x).ok()?;
        let y = c.x - c.alpha.a - c.beta.a;
        let m = ctx.kin.multiplier_m(&c.alpha.a, &c.beta.a, &y).ok()?;
        Some(defect.max_abs_diff(m.inner()))
    });
    Outcome::new(
        t,
        TOL_WEYL,
        "labels with a·b' = b·a' leave only the translation multiplier M(a, b)",
    )
}
