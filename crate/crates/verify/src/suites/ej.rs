use rand::Rng;

use monopole_core::ej::{connection_raw, monopole_flux, radial_unit_raw, Kinematics};
use monopole_core::field::{directional_fd, Differentiable, Field, ProbeFunction, Stencil};
use monopole_core::quat::{Quaternion, Vec3};
use monopole_core::sampling::{random_probe, random_quaternion, random_unit_vector};

use super::{scaled, TOL_COMMUTATOR, TOL_PHASE};
use crate::config::Suite;
use crate::report::Tally;
use crate::runner::{Check, Ctx, Outcome};

const LEFT: &str = "all phases act by left multiplication";

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check {
        name,
        suite: Suite::Ej,
        run,
    };
    vec![
        c("ej.cocycle.zero_translation", cocycle_zero),
        c("ej.cocycle.unitarity", cocycle_unitarity),
        c("ej.cocycle.reflection", cocycle_reflection),
        c("ej.cocycle.ray_composition", cocycle_ray),
        c("ej.translation.inverse", translation_inverse),
        c("ej.translation.projective_composition", projective_composition),
        c("ej.multiplier.cancellation", multiplier_cancellation),
        c("ej.multiplier.associativity", multiplier_associativity),
        c("ej.multiplier.unit_norm", multiplier_unit_norm),
        c("ej.multiplier.planar", multiplier_planar),
        c("ej.geometric_phase.constancy", phase_constancy),
        c("ej.geometric_phase.magnitude", phase_magnitude),
        c("ej.probe.gradient", probe_gradient),
        c("ej.nabla.generator", nabla_generator),
        c("ej.gccr.nabla_x", gccr_nabla_x),
        c("ej.gccr.x_x", gccr_x_x),
        c("ej.gccr.nabla_nabla", gccr_nabla_nabla),
        c("ej.gccr.p_p", gccr_p_p),
        c("ej.gccr.l_j", gccr_l_j),
        c("ej.j.square", j_square),
        c("ej.j.unitary", j_unitary),
        c("ej.j.commutes_with_x", j_commutes_with_x),
        c("ej.j.commutes_with_nabla", j_commutes_with_nabla),
        c("ej.l.so3_closure", so3_closure),
        c("ej.curvature.formula", curvature_formula),
        c("ej.curvature.connection_partials", connection_partials),
        c("ej.presymplectic.components", presymplectic_components),
    ]
}

fn e(i: usize) -> Vec3 {
    Vec3::ith(i, 1.0)
}

/// `∇_i ψ` as a field, with the gauge term unchecked so stencils may graze `r_min`.
fn nabla_field(psi: &ProbeFunction, i: usize) -> impl Fn(&Vec3) -> Quaternion + '_ {
    move |y| psi.partial(i, y) + connection_raw(&e(i), y) * psi.eval(y)
}

fn p_field(psi: &ProbeFunction, i: usize) -> impl Fn(&Vec3) -> Quaternion + '_ {
    let n = nabla_field(psi, i);
    move |y| radial_unit_raw(y) * n(y)
}

fn j_field(psi: &ProbeFunction) -> impl Fn(&Vec3) -> Quaternion + '_ {
    move |y| radial_unit_raw(y) * psi.eval(y)
}

/// A sample point, a probe, and the probe's value at the point.
fn point_and_probe<R: Rng>(d: &monopole_core::sampling::SampleDomain, r: &mut R) -> (Vec3, ProbeFunction) {
    (d.point(r), random_probe(r))
}

fn pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..3).flat_map(|i| (0..3).map(move |j| (i, j)))
}

fn cocycle_zero(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.cocycle.zero_translation", ctx.samples(), |d, r| {
        let w = ctx.kin.cocycle_w(&Vec3::zeros(), &d.point(r)).ok()?;
        Some(w.inner().max_abs_diff(&Quaternion::ONE))
    });
    Outcome::new(t, ctx.config.tol_exact, "w(0; x) = 1")
}

fn cocycle_unitarity(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.cocycle.unitarity", ctx.samples(), |d, r| {
        let w = ctx.kin.cocycle_w(&d.vector(r), &d.point(r)).ok()?;
        Some((w.into_inner() * w.into_inner().conj()).max_abs_diff(&Quaternion::ONE))
    });
    Outcome::new(t, ctx.config.tol_exact, "w w* = 1")
}

fn cocycle_reflection(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.cocycle.reflection", ctx.samples(), |d, r| {
        let (a, x) = (d.vector(r), d.point(r));
        let lhs = ctx.kin.cocycle_w(&a, &(x - a)).ok()?;
        let rhs = ctx.kin.cocycle_w(&-a, &x).ok()?.inverse();
        Some(lhs.inner().max_abs_diff(rhs.inner()))
    });
    Outcome::new(t, ctx.config.tol_exact, "w(a; x - a) = w*(-a; x)")
}

fn cocycle_ray(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.cocycle.ray_composition", ctx.samples(), |d, r| {
        let (a, x) = (d.vector(r), d.point(r));
        let (s, t) = (r.random_range(-1.0..=1.0), r.random_range(-1.0..=1.0));
        let k = &ctx.kin;
        let lhs = k.cocycle_w(&(a * t), &(x + a * s)).ok()? * k.cocycle_w(&(a * s), &x).ok()?;
        let rhs = k.cocycle_w(&(a * (s + t)), &x).ok()?;
        Some(lhs.inner().max_abs_diff(rhs.inner()))
    });
    Outcome::new(t, ctx.config.tol_exact, "w(ta; x + sa) w(sa; x) = w((s+t)a; x)")
}

fn translation_inverse(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.translation.inverse", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let a = d.vector(r);
        let k = &ctx.kin;
        k.apply_U(&a, &psi, &(x + a)).ok()?;
        let shifted = |y: &Vec3| k.apply_U(&a, &psi, y).unwrap_or(Quaternion::ZERO * f64::NAN);
        let back = k.apply_U(&-a, &shifted, &x).ok()?;
        Some(back.max_abs_diff(&psi.eval(&x)))
    });
    Outcome::new(t, ctx.config.tol_exact, "U(-a) U(a) ψ = ψ")
}

/// `U(a) U(b) ψ` at `x`, composed as operators.
fn uu(k: &Kinematics, a: &Vec3, b: &Vec3, psi: &dyn Field, x: &Vec3) -> Option<Quaternion> {
    let inner = k.apply_U(b, psi, &(x - a)).ok()?;
    Some(k.cocycle_w(a, &(x - a)).ok()? * inner)
}

fn projective_composition(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.translation.projective_composition", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let (a, b) = (d.vector(r), d.vector(r));
        let k = &ctx.kin;
        let lhs = uu(k, &a, &b, &psi, &x)?;
        let y = x - a - b;
        let m = k.multiplier_m(&a, &b, &y).ok()?;
        let rhs = k.cocycle_w(&(a + b), &y).ok()? * (m * psi.eval(&y));
        Some(lhs.max_abs_diff(&rhs))
    });
    Outcome::new(
        t,
        ctx.config.tol_exact,
        format!("U(a)U(b) = U(a+b)M(a,b), m = w*(a+b;x) w(a;x+b) w(b;x); {LEFT}"),
    )
}

fn multiplier_cancellation(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.multiplier.cancellation", ctx.samples(), |d, r| {
        let a = d.vector(r);
        let m = ctx.kin.multiplier_m(&a, &-a, &d.point(r)).ok()?;
        Some(m.inner().max_abs_diff(&Quaternion::ONE))
    });
    Outcome::new(t, ctx.config.tol_exact, "m(a, -a; x) = 1")
}

fn multiplier_associativity(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.multiplier.associativity", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let (a, b, c) = (d.vector(r), d.vector(r), d.vector(r));
        let k = &ctx.kin;
        let y = x - a - b - c;
        let value = psi.eval(&y);
        // U(a) [U(b) U(c)] = U(a) U(b+c) M(b,c)
        let inner_bc = k.multiplier_m(&b, &c, &y).ok()?;
        let left = k.cocycle_w(&a, &(x - a)).ok()?
            * k.cocycle_w(&(b + c), &y).ok()?
            * (inner_bc * value);
        // [U(a) U(b)] U(c) = U(a+b) M(a,b) U(c)
        let z = x - a - b;
        let right = k.cocycle_w(&(a + b), &z).ok()?
            * k.multiplier_m(&a, &b, &z).ok()?
            * (k.cocycle_w(&c, &y).ok()? * value);
        Some(left.max_abs_diff(&right))
    });
    Outcome::new(t, ctx.config.tol_exact, "U(a)[U(b)U(c)] = [U(a)U(b)]U(c) through the multiplier")
}

fn multiplier_unit_norm(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.multiplier.unit_norm", ctx.samples(), |d, r| {
        let m = ctx.kin.multiplier_m(&d.vector(r), &d.vector(r), &d.point(r)).ok()?;
        Some((m.inner().norm() - 1.0).abs())
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}

fn multiplier_planar(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.multiplier.planar", ctx.samples(), |d, r| {
        let n = random_unit_vector(r);
        let flat = |v: Vec3| v - n * n.dot(&v);
        let (x, a, b) = (flat(d.point(r)), flat(d.vector(r)), flat(d.vector(r)));
        if x.norm() <= d.r_min {
            return None;
        }
        // a planar loop subtends 0 or ±2π, the latter when it encloses the origin
        let corners = [x, x + b, x + a + b];
        let turns: Vec<f64> = (0..3)
            .map(|i| n.dot(&corners[i].cross(&corners[(i + 1) % 3])))
            .collect();
        let size = corners.iter().map(|c| c.norm_squared()).fold(0.0, f64::max);
        if turns.iter().any(|t| t.abs() <= 1e-9 * size) {
            return None;
        }
        let encloses = turns.iter().all(|t| *t > 0.0) || turns.iter().all(|t| *t < 0.0);
        let expected = if encloses { -Quaternion::ONE } else { Quaternion::ONE };
        let m = ctx.kin.multiplier_m(&a, &b, &x).ok()?;
        Some(m.inner().max_abs_diff(&expected))
    });
    Outcome::new(
        t,
        ctx.config.tol_exact,
        "x, a, b in a plane through the origin: m = 1, or -1 when the loop encloses the origin",
    )
}

/// Ratios over non-degenerate configurations, in sample order.
fn phase_ratios(ctx: &Ctx, swapped: bool) -> (Vec<f64>, usize) {
    let id = if swapped {
        "ej.geometric_phase.swapped"
    } else {
        "ej.geometric_phase"
    };
    ctx.collect(id, ctx.samples(), |d, r| {
        let (a, b, x) = (d.vector(r), d.vector(r), d.point(r));
        // keep the multiplier angle away from the branch cut at ±π
        let omega = ctx.kin.solid_angle(&x, &(x + b), &(x + a + b)).ok()?;
        if omega.abs() >= 0.9 * 2.0 * std::f64::consts::PI {
            return None;
        }
        if swapped {
            ctx.kin.geometric_phase_ratio_swapped(&a, &b, &x).ok()
        } else {
            ctx.kin.geometric_phase_ratio(&a, &b, &x).ok()
        }
    })
}

fn spread(v: &[f64]) -> (f64, f64, f64) {
    let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    (lo, hi, mean)
}

fn phase_constancy(ctx: &Ctx) -> Outcome {
    let (ratios, skipped) = phase_ratios(ctx, false);
    let (lo, hi, mean) = spread(&ratios);
    let (alt, _) = phase_ratios(ctx, true);
    let (alo, ahi, _) = spread(&alt);
    let tally = Tally {
        used: ratios.len(),
        skipped,
        max_err: if ratios.is_empty() { f64::INFINITY } else { hi - lo },
    };
    Outcome::new(
        tally,
        TOL_PHASE,
        format!(
            "angle of m(a,b;x) about j(x) over the solid angle of x → x+b → x+a+b, the loop the \
             multiplier traverses; fitted constant {mean:+.12}; the triangle x → x+a → x+a+b \
             gives ratios spread over [{alo:+.6}, {ahi:+.6}]"
        ),
    )
}

fn phase_magnitude(ctx: &Ctx) -> Outcome {
    let (ratios, skipped) = phase_ratios(ctx, false);
    let (_, _, mean) = spread(&ratios);
    let tally = ratios
        .iter()
        .map(|q| Tally::error(q.abs() - 0.5))
        .fold(Tally { skipped, ..Tally::default() }, Tally::merge);
    let sign = if mean >= 0.0 { "positive" } else { "negative" };
    Outcome::new(
        tally,
        TOL_PHASE,
        format!("|ratio| = 1/2; the sign is {sign} with right-handed solid angles and left-multiplied phases"),
    )
}

fn probe_gradient(ctx: &Ctx) -> Outcome {
    let h = ctx.config.fd_step;
    let t = ctx.sample("ej.probe.gradient", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        (0..3)
            .map(|i| {
                let an = psi.partial(i, &x);
                let fd = directional_fd(&psi, &e(i), &x, h, Stencil::Central3);
                scaled(an.max_abs_diff(&fd), an.max_abs())
            })
            .reduce(f64::max)
    });
    Outcome::new(t, ctx.config.tol_fd, "three-point central differences at fd_step")
}

fn nabla_generator(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.nabla.generator", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let u = random_unit_vector(r);
        let an = ctx.kin.apply_nabla(&u, &psi, &x).ok()?;
        let fd = ctx.kin.translation_derivative_fd(&u, &psi, &x).ok()?;
        Some(scaled((an + fd).max_abs(), an.max_abs()))
    });
    Outcome::new(
        t,
        ctx.config.tol_fd,
        "d/dt U(tu)ψ at t = 0 equals -∇_u ψ, i.e. U(a) = exp(-a·∇) = exp(J a·P) with P = J∇",
    )
}

fn gccr_nabla_x(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.gccr.nabla_x", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let k = &ctx.kin;
        let value = psi.eval(&x);
        pairs()
            .map(|(i, j)| {
                let xj = |y: &Vec3| psi.eval(y) * y[j];
                let lhs = k.nabla_fd(&e(i), &xj, &x).ok()? - k.apply_nabla(&e(i), &psi, &x).ok()? * x[j];
                let rhs = if i == j { value } else { Quaternion::ZERO };
                Some(lhs.max_abs_diff(&rhs))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(t, TOL_COMMUTATOR, "[∇_i, X_j] = δ_ij; outer ∇ by five-point differences")
}

fn gccr_x_x(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.gccr.x_x", ctx.samples(), |d, r| {
        let (x, q) = (d.point(r), random_quaternion(r));
        let k = &ctx.kin;
        pairs()
            .map(|(i, j)| {
                let a = k.apply_X(i, &k.apply_X(j, &q, &x), &x);
                let b = k.apply_X(j, &k.apply_X(i, &q, &x), &x);
                a.max_abs_diff(&b)
            })
            .reduce(f64::max)
    });
    Outcome::new(t, ctx.config.tol_exact, "[X_i, X_j] = 0")
}

fn gccr_nabla_nabla(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.gccr.nabla_nabla", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let k = &ctx.kin;
        let value = psi.eval(&x);
        pairs()
            .map(|(i, j)| {
                let ij = k.nabla_fd(&e(i), &nabla_field(&psi, j), &x).ok()?;
                let ji = k.nabla_fd(&e(j), &nabla_field(&psi, i), &x).ok()?;
                let expected = k.monopole_curvature(i, j, &x).ok()? * value;
                Some((ij - ji).max_abs_diff(&expected))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(
        t,
        TOL_COMMUTATOR,
        format!("[∇_i, ∇_j] = -½ j(x) ε_ijk x^k/‖x‖³; {LEFT}"),
    )
}

fn gccr_p_p(ctx: &Ctx) -> Outcome {
    let k = &ctx.kin;
    let commutator = |psi: &ProbeFunction, x: &Vec3, i: usize, j: usize| -> Option<Quaternion> {
        let jx = k.jdir(x).ok()?.as_quaternion();
        let ij = jx * k.nabla_fd(&e(i), &p_field(psi, j), x).ok()?;
        let ji = jx * k.nabla_fd(&e(j), &p_field(psi, i), x).ok()?;
        Some(ij - ji)
    };
    let t = ctx.sample("ej.gccr.p_p", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let value = psi.eval(&x);
        let jpsi = k.apply_J(&value, &x).ok()?;
        pairs()
            .map(|(i, j)| {
                let expected = jpsi * (0.5 * monopole_flux(i, j, &x));
                Some(commutator(&psi, &x, i, j)?.max_abs_diff(&expected))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    // how far the same commutator is from a real multiple of ψ
    let scalar = ctx.sample("ej.gccr.p_p", ctx.samples().min(200), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let value = psi.eval(&x);
        let c = commutator(&psi, &x, 0, 1)?;
        Some(c.max_abs_diff(&(value * (0.5 * monopole_flux(0, 1, &x)))))
    });
    Outcome::new(
        t,
        TOL_COMMUTATOR,
        format!(
            "[P_i, P_j] = -[∇_i, ∇_j] = +½ J ε_ijk x^k/‖x‖³ since J² = -1 and [J, ∇] = 0; \
             read without J as a real multiple of ψ the deviation reaches {:.3e}",
            scalar.max_err
        ),
    )
}

fn gccr_l_j(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.gccr.l_j", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let k = &ctx.kin;
        (0..3)
            .map(|i| {
                let lj = k.apply_l_fd(i, &j_field(&psi), &x);
                let jl = k.apply_J(&k.apply_L(i, &psi, &x), &x).ok()?;
                Some((lj - jl).max_abs())
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(
        t,
        TOL_COMMUTATOR,
        format!("L_i = ε_ijk x_j ∂_k - ½ e_i with the spin term on the left; {LEFT}"),
    )
}

fn j_square(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.j.square", ctx.samples(), |d, r| {
        let (x, q) = (d.point(r), random_quaternion(r));
        let jj = ctx.kin.apply_J(&ctx.kin.apply_J(&q, &x).ok()?, &x).ok()?;
        Some((jj + q).max_abs())
    });
    Outcome::new(t, ctx.config.tol_exact, "J² = -I")
}

fn j_unitary(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.j.unitary", ctx.samples(), |d, r| {
        let (x, q) = (d.point(r), random_quaternion(r));
        Some((ctx.kin.apply_J(&q, &x).ok()?.norm() - q.norm()).abs())
    });
    Outcome::new(t, ctx.config.tol_exact, "‖Jψ(x)‖ = ‖ψ(x)‖")
}

fn j_commutes_with_x(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.j.commutes_with_x", ctx.samples(), |d, r| {
        let (x, q) = (d.point(r), random_quaternion(r));
        let k = &ctx.kin;
        (0..3)
            .map(|i| {
                let a = k.apply_J(&k.apply_X(i, &q, &x), &x).ok()?;
                let b = k.apply_X(i, &k.apply_J(&q, &x).ok()?, &x);
                Some(a.max_abs_diff(&b))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}

fn j_commutes_with_nabla(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.j.commutes_with_nabla", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let k = &ctx.kin;
        (0..3)
            .map(|i| {
                let p = k.apply_P(i, &psi, &x).ok()?;
                let nj = k.nabla_fd(&e(i), &j_field(&psi), &x).ok()?;
                Some(p.max_abs_diff(&nj))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(t, TOL_COMMUTATOR, "J∇_i (analytic) against ∇_i(Jψ) by five-point differences")
}

fn so3_closure(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.l.so3_closure", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        let k = &ctx.kin;
        (0..3)
            .map(|i| {
                let (j, l) = ((i + 1) % 3, (i + 2) % 3);
                let lj = |y: &Vec3| k.apply_L(j, &psi, y);
                let li = |y: &Vec3| k.apply_L(i, &psi, y);
                let comm = k.apply_l_fd(i, &lj, &x) - k.apply_l_fd(j, &li, &x);
                (comm + k.apply_L(l, &psi, &x)).max_abs()
            })
            .reduce(f64::max)
    });
    Outcome::new(t, TOL_COMMUTATOR, "[L_i, L_j] = -ε_ijk L_k")
}

fn curvature_formula(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.curvature.formula", ctx.samples(), |d, r| {
        let (x, psi) = point_and_probe(d, r);
        pairs()
            .map(|(i, j)| ctx.kin.curvature_check(i, j, &x, &psi).ok())
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(
        t,
        TOL_COMMUTATOR,
        "Ω_ij = ∂_iA_j - ∂_jA_i + [A_i, A_j] = -½ ε_ijk x^k/‖x‖³ j(x), A = ½ (u×x)·e/‖x‖²",
    )
}

fn connection_partials(ctx: &Ctx) -> Outcome {
    let h = ctx.config.fd_step;
    let t = ctx.sample("ej.curvature.connection_partials", ctx.samples(), |d, r| {
        let x = d.point(r);
        pairs()
            .map(|(i, j)| {
                let an = ctx.kin.connection_partial(i, j, &x).ok()?;
                let aj = |y: &Vec3| connection_raw(&e(j), y);
                let fd = directional_fd(&aj, &e(i), &x, h, Stencil::Central5);
                Some(scaled(an.max_abs_diff(&fd), an.max_abs()))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(t, ctx.config.tol_fd, "analytic ∂A against five-point differences")
}

fn presymplectic_components(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("ej.presymplectic.components", ctx.samples(), |d, r| {
        let x = d.point(r);
        let xhat = x.normalize();
        pairs()
            .map(|(i, j)| {
                let omega = ctx.kin.curvature(i, j, &x).ok()?;
                let w = ctx.kin.presymplectic_extract(i, j, &x).ok()?;
                let expected = xhat * (-0.5 * monopole_flux(i, j, &x));
                let anti = ctx.kin.presymplectic_extract(j, i, &x).ok()?;
                let err = (w - expected)
                    .amax()
                    .max(omega.w.abs())
                    .max((w + anti).amax());
                Some(scaled(err, 0.5 / x.norm_squared()))
            })
            .try_fold(0.0_f64, |m, v| v.map(|v| m.max(v)))
    });
    Outcome::new(
        t,
        ctx.config.tol_exact,
        "ω_k(i, j) = coefficient of e_k in Ω_ij; scalar part zero, antisymmetric",
    )
}
