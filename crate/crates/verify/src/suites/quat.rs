use std::f64::consts::PI;

use rand::Rng;

use monopole_core::quat::{
    hopf_project, pauli_check, qexp_pure, rotate_vector, ImaginaryUnit, Quaternion, UnitQuaternion,
    Vec3,
};
use monopole_core::sampling::{random_quaternion, random_unit_vector};

use super::{scaled, TOL_ROUNDOFF};
use crate::config::Suite;
use crate::runner::{Check, Ctx, Outcome};

const NOTES: &str = "e0 = σ0, e_k = -iσ_k; rotate_vector(s, v) = s (v·e) s*, right-handed";

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check {
        name,
        suite: Suite::Quat,
        run,
    };
    vec![
        c("quat.associativity", associativity),
        c("quat.conj_norm", conj_norm),
        c("quat.conj_reverses_products", conj_reverses_products),
        c("quat.exp.group_law", exp_group_law),
        c("quat.exp.noncommuting_axes", exp_noncommuting_axes),
        c("quat.pauli.homomorphism", pauli_homomorphism),
        c("quat.hopf.unit_norm", hopf_unit_norm),
        c("quat.hopf.fiber_invariance", hopf_fiber_invariance),
        c("quat.hopf.matches_rotation", hopf_matches_rotation),
        c("quat.rotate.isometry", rotate_isometry),
        c("quat.rotate.right_handed", rotate_right_handed),
        c("quat.jdir.square", jdir_square),
    ]
}

fn unit<R: Rng>(rng: &mut R) -> Option<UnitQuaternion> {
    UnitQuaternion::new(random_quaternion(rng)).ok()
}

fn axis<R: Rng>(rng: &mut R) -> ImaginaryUnit {
    ImaginaryUnit::new(random_unit_vector(rng)).expect("unit vector")
}

fn associativity(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.associativity", ctx.samples(), |_, r| {
        let (a, b, c) = (random_quaternion(r), random_quaternion(r), random_quaternion(r));
        let err = ((a * b) * c).max_abs_diff(&(a * (b * c)));
        Some(scaled(err, a.norm() * b.norm() * c.norm()))
    });
    Outcome::new(t, TOL_ROUNDOFF, "relative to ‖a‖‖b‖‖c‖ above unit scale")
}

fn conj_norm(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.conj_norm", ctx.samples(), |_, r| {
        let q = random_quaternion(r);
        let p = q.conj() * q;
        let n2 = q.norm_squared();
        Some(scaled(p.v.amax().max((p.w - n2).abs()), n2))
    });
    Outcome::new(t, TOL_ROUNDOFF, "q* q = ‖q‖² e0")
}

fn conj_reverses_products(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.conj_reverses_products", ctx.samples(), |_, r| {
        let (a, b) = (random_quaternion(r), random_quaternion(r));
        Some((a * b).conj().max_abs_diff(&(b.conj() * a.conj())))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}

fn exp_group_law(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.exp.group_law", ctx.samples(), |_, r| {
        let n = axis(r);
        let (t1, t2) = (r.random_range(-PI..=PI), r.random_range(-PI..=PI));
        let lhs = qexp_pure(&n, t1) * qexp_pure(&n, t2);
        Some(lhs.inner().max_abs_diff(qexp_pure(&n, t1 + t2).inner()))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}

fn exp_noncommuting_axes(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.exp.noncommuting_axes", ctx.samples(), |_, r| {
        let theta = r.random_range(0.0..PI);
        if theta == 0.0 {
            return None;
        }
        let (e1, e2) = (ImaginaryUnit::basis(1), ImaginaryUnit::basis(2));
        let (a, b) = (qexp_pure(&e1, theta), qexp_pure(&e2, theta));
        let comm = (a * b).into_inner() - (b * a).into_inner();
        let norm = comm.norm();
        // [exp(e1 θ), exp(e2 θ)] = 2 sin²θ e3
        let expected = 2.0 * theta.sin().powi(2);
        Some(if norm > 0.0 {
            (norm - expected).abs()
        } else {
            f64::INFINITY
        })
    });
    Outcome::new(t, ctx.config.tol_exact, "‖[exp(e1θ), exp(e2θ)]‖ = 2 sin²θ > 0 on (0, π)")
}

fn pauli_homomorphism(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.pauli.homomorphism", ctx.samples(), |_, r| {
        Some(pauli_check(&random_quaternion(r), &random_quaternion(r)))
    });
    Outcome::new(t, TOL_ROUNDOFF, NOTES)
}

fn hopf_unit_norm(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.hopf.unit_norm", ctx.samples(), |_, r| {
        let s = unit(r)?;
        Some((hopf_project(&s).norm() - 1.0).abs())
    });
    Outcome::new(t, TOL_ROUNDOFF, "")
}

fn hopf_fiber_invariance(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.hopf.fiber_invariance", ctx.samples(), |_, r| {
        let s = unit(r)?;
        let phase = qexp_pure(&ImaginaryUnit::basis(3), r.random_range(-PI..=PI));
        Some((hopf_project(&(phase * s)) - hopf_project(&s)).amax())
    });
    Outcome::new(t, 1e-12, "fiber acts by left multiplication with exp(e3 t)")
}

fn hopf_matches_rotation(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.hopf.matches_rotation", ctx.samples(), |_, r| {
        let s = unit(r)?;
        Some((hopf_project(&s) - rotate_vector(&s.inverse(), &Vec3::z())).amax())
    });
    Outcome::new(
        t,
        1e-12,
        "x·σ = s⁻¹σ3 s in the matrix picture equals rotate_vector(s*, e3)",
    )
}

fn rotate_isometry(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.rotate.isometry", ctx.samples(), |d, r| {
        let s = unit(r)?;
        let v = d.vector(r);
        Some(scaled((rotate_vector(&s, &v).norm() - v.norm()).abs(), v.norm()))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}

fn rotate_right_handed(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.rotate.right_handed", ctx.samples(), |_, r| {
        let alpha = r.random_range(-2.0 * PI..=2.0 * PI);
        let s = qexp_pure(&ImaginaryUnit::basis(3), alpha / 2.0);
        let got = rotate_vector(&s, &Vec3::x());
        Some((got - Vec3::new(alpha.cos(), alpha.sin(), 0.0)).amax())
    });
    Outcome::new(t, ctx.config.tol_exact, NOTES)
}

fn jdir_square(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("quat.jdir.square", ctx.samples(), |d, r| {
        let j = ctx.kin.jdir(&d.point(r)).ok()?.as_quaternion();
        Some((j * j).max_abs_diff(&Quaternion::scalar(-1.0)))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}
