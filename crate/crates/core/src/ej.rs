//! Quaternionic kinematics of a particle in the field of a unit monopole.
//!
//! Wavefunctions are quaternion-valued. Translations carry a unit-quaternion
//! cocycle `w(a; x)`, the complex structure is the radial unit `j(x)`, and the
//! covariant derivative
//!
//! ```text
//! ∇_u = u·∂ + A(u, x),    A(u, x) = ½ (u × x)·e / ‖x‖²
//! ```
//!
//! acts with every quaternion factor on the left. In the commutator form
//! `A = k [e·x, e·dx] / ‖x‖²` the same potential corresponds to `k = -1/4`.
//!
//! Axis indices are zero-based throughout (`0, 1, 2` for `x, y, z`).

use crate::error::{Error, Result};
use crate::field::{directional_fd, Differentiable, Field, Stencil};
use crate::quat::{jdir, ImaginaryUnit, Quaternion, UnitQuaternion, Vec3};

/// Threshold on `|solid angle|` below which the phase ratio is not evaluated.
pub const MIN_SOLID_ANGLE: f64 = 1e-6;

/// Levi-Civita symbol on zero-based indices.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// `j(x)` as a quaternion without the exclusion check. Only for `x ≠ 0`.
pub fn radial_unit_raw(x: &Vec3) -> Quaternion {
    Quaternion::pure(x / x.norm())
}

/// `A(u, x)` without the exclusion check. Only for `x ≠ 0`.
pub fn connection_raw(u: &Vec3, x: &Vec3) -> Quaternion {
    Quaternion::pure(u.cross(x) * (0.5 / x.norm_squared()))
}

/// Regularity parameters shared by every operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kinematics {
    /// Exclusion radius around the monopole.
    pub r_min: f64,
    /// Angular margin for anti-parallel pairs and degenerate triangles.
    pub eps_cone: f64,
    /// Step for finite-difference derivatives of generic fields.
    pub fd_step: f64,
}

impl Default for Kinematics {
    fn default() -> Self {
        Self {
            r_min: 0.1,
            eps_cone: 1e-3,
            fd_step: 1e-4,
        }
    }
}

impl Kinematics {
    pub fn check_point(&self, x: &Vec3) -> Result<f64> {
        let n = x.norm();
        if n > self.r_min {
            Ok(n)
        } else {
            Err(Error::SingularPoint {
                norm: n,
                r_min: self.r_min,
            })
        }
    }

    pub fn jdir(&self, x: &Vec3) -> Result<ImaginaryUnit> {
        jdir(x, self.r_min)
    }

    /// The cocycle `w(a; x) = cos(α/2) + j(x × a) sin(α/2)`, where `α` is the
    /// angle between `x` and `x + a`. It is the rotation carrying the direction
    /// of `x` onto the direction of `x + a` through the smaller angle.
    pub fn cocycle_w(&self, a: &Vec3, x: &Vec3) -> Result<UnitQuaternion> {
        let y = x + a;
        let nx = self.check_point(x)?;
        let ny = self.check_point(&y)?;
        let c = x.cross(a);
        let sin_a = c.norm();
        let dot = x.dot(&y);
        if dot < 0.0 && sin_a < self.eps_cone * nx * ny {
            return Err(Error::AntipodalTranslation {
                deviation: sin_a / (nx * ny),
            });
        }
        if sin_a == 0.0 {
            return Ok(UnitQuaternion::IDENTITY);
        }
        let half = 0.5 * sin_a.atan2(dot);
        let (s, co) = half.sin_cos();
        Ok(UnitQuaternion::new_unchecked(Quaternion::from_parts(
            co,
            c * (s / sin_a),
        )))
    }

    /// `[U(a)ψ](x) = w(a; x - a) ψ(x - a)`.
    #[allow(non_snake_case)]
    pub fn apply_U<F: Field + ?Sized>(&self, a: &Vec3, psi: &F, x: &Vec3) -> Result<Quaternion> {
        let y = x - a;
        Ok(self.cocycle_w(a, &y)? * psi.eval(&y))
    }

    /// `m(a, b; x) = w*(a + b; x) w(a; x + b) w(b; x)`, the phase in
    /// `U(a) U(b) = U(a + b) M(a, b)`.
    pub fn multiplier_m(&self, a: &Vec3, b: &Vec3, x: &Vec3) -> Result<UnitQuaternion> {
        let w_ab = self.cocycle_w(&(a + b), x)?;
        let w_a = self.cocycle_w(a, &(x + b))?;
        let w_b = self.cocycle_w(b, x)?;
        Ok(w_ab.inverse() * w_a * w_b)
    }

    /// Oriented solid angle of the geodesic triangle with vertices along
    /// `v1, v2, v3` (Van Oosterom–Strackee).
    pub fn solid_angle(&self, v1: &Vec3, v2: &Vec3, v3: &Vec3) -> Result<f64> {
        if v1 == v2 || v2 == v3 || v1 == v3 {
            return Ok(0.0);
        }
        if [v1, v2, v3].iter().any(|v| !(v.norm() > 0.0)) {
            return Err(Error::DegenerateTriangle);
        }
        let [u1, u2, u3] = [v1, v2, v3].map(|v| v.normalize());
        for (p, q) in [(&u1, &u2), (&u2, &u3), (&u1, &u3)] {
            if p.cross(q).norm() < self.eps_cone {
                return Err(Error::DegenerateTriangle);
            }
        }
        let num = u1.dot(&u2.cross(&u3));
        let den = 1.0 + u1.dot(&u2) + u2.dot(&u3) + u3.dot(&u1);
        Ok(2.0 * num.atan2(den))
    }

    /// Signed rotation angle of `m(a, b; x)` about `j(x)`.
    pub fn multiplier_angle(&self, a: &Vec3, b: &Vec3, x: &Vec3) -> Result<f64> {
        let m = self.multiplier_m(a, b, x)?;
        let j = self.jdir(x)?;
        Ok(m.angle_about(j.axis()))
    }

    /// Ratio of the multiplier angle to the solid angle of the triangle
    /// traversed by `m(a, b; x)`: `x → x + b → x + a + b`.
    pub fn geometric_phase_ratio(&self, a: &Vec3, b: &Vec3, x: &Vec3) -> Result<f64> {
        let theta = self.multiplier_angle(a, b, x)?;
        let omega = self.solid_angle(x, &(x + b), &(x + a + b))?;
        if omega.abs() <= MIN_SOLID_ANGLE {
            return Err(Error::IllConditioned { solid_angle: omega });
        }
        Ok(theta / omega)
    }

    /// The same ratio against the triangle `x → x + a → x + a + b`, which is
    /// traversed by `m(b, a; x)` rather than `m(a, b; x)`. Kept to measure how
    /// far that reading is from a constant.
    pub fn geometric_phase_ratio_swapped(&self, a: &Vec3, b: &Vec3, x: &Vec3) -> Result<f64> {
        let theta = self.multiplier_angle(a, b, x)?;
        let omega = self.solid_angle(x, &(x + a), &(x + a + b))?;
        if omega.abs() <= MIN_SOLID_ANGLE {
            return Err(Error::IllConditioned { solid_angle: omega });
        }
        Ok(theta / omega)
    }

    /// Gauge term `A(u, x) = ½ (u × x)·e / ‖x‖²`.
    #[allow(non_snake_case)]
    pub fn connection_A(&self, u: &Vec3, x: &Vec3) -> Result<Quaternion> {
        self.check_point(x)?;
        Ok(connection_raw(u, x))
    }

    /// `∂_i A_j` at `x`, i.e. the derivative along axis `i` of `A(e_j, ·)`.
    pub fn connection_partial(&self, i: usize, j: usize, x: &Vec3) -> Result<Quaternion> {
        let r2 = self.check_point(x)?.powi(2);
        let ej = Vec3::ith(j, 1.0);
        let ei = Vec3::ith(i, 1.0);
        let v = ej.cross(&ei) * (0.5 / r2) - ej.cross(x) * (x[i] / (r2 * r2));
        Ok(Quaternion::pure(v))
    }

    /// `(∇_u ψ)(x)` with the analytic gradient of `ψ`.
    pub fn apply_nabla<F: Differentiable + ?Sized>(
        &self,
        u: &Vec3,
        psi: &F,
        x: &Vec3,
    ) -> Result<Quaternion> {
        Ok(psi.directional(u, x) + self.connection_A(u, x)? * psi.eval(x))
    }

    /// `(∇_u f)(x)` for an arbitrary field, with a five-point central
    /// difference for the derivative term.
    pub fn nabla_fd<F: Field + ?Sized>(&self, u: &Vec3, f: &F, x: &Vec3) -> Result<Quaternion> {
        let a = self.connection_A(u, x)?;
        Ok(directional_fd(f, u, x, self.fd_step, Stencil::Central5) + a * f.eval(x))
    }

    /// `d/dt [U(t u) ψ](x)` at `t = 0` by a three-point central difference.
    /// Equals `-(∇_u ψ)(x)`: `U(a) = exp(-a·∇)`.
    pub fn translation_derivative_fd<F: Field + ?Sized>(
        &self,
        u: &Vec3,
        psi: &F,
        x: &Vec3,
    ) -> Result<Quaternion> {
        self.check_point(x)?;
        let h = self.fd_step;
        let plus = self.apply_U(&(u * h), psi, x)?;
        let minus = self.apply_U(&(u * -h), psi, x)?;
        Ok((plus - minus) * (0.5 / h))
    }

    /// `(Jψ)(x) = j(x) ψ(x)`.
    #[allow(non_snake_case)]
    pub fn apply_J(&self, value: &Quaternion, x: &Vec3) -> Result<Quaternion> {
        Ok(self.jdir(x)?.as_quaternion() * *value)
    }

    /// `(X_i ψ)(x) = x_i ψ(x)`.
    #[allow(non_snake_case)]
    pub fn apply_X(&self, i: usize, value: &Quaternion, x: &Vec3) -> Quaternion {
        *value * x[i]
    }

    /// `P_i = J ∇_i`.
    #[allow(non_snake_case)]
    pub fn apply_P<F: Differentiable + ?Sized>(
        &self,
        i: usize,
        psi: &F,
        x: &Vec3,
    ) -> Result<Quaternion> {
        let nabla = self.apply_nabla(&Vec3::ith(i, 1.0), psi, x)?;
        self.apply_J(&nabla, x)
    }

    /// Rotation generator `L_i = ε_ijk x_j ∂_k - ½ e_i`, the spin term acting on the left.
    #[allow(non_snake_case)]
    pub fn apply_L<F: Differentiable + ?Sized>(&self, i: usize, psi: &F, x: &Vec3) -> Quaternion {
        let orbital = psi.directional(&Vec3::ith(i, 1.0).cross(x), x);
        orbital + Quaternion::basis(i + 1) * psi.eval(x) * -0.5
    }

    /// `L_i` on an arbitrary field, orbital term by five-point differences.
    pub fn apply_l_fd<F: Field + ?Sized>(&self, i: usize, f: &F, x: &Vec3) -> Quaternion {
        let u = Vec3::ith(i, 1.0).cross(x);
        let orbital = if u.norm() == 0.0 {
            Quaternion::ZERO
        } else {
            directional_fd(f, &u, x, self.fd_step, Stencil::Central5)
        };
        orbital + Quaternion::basis(i + 1) * f.eval(x) * -0.5
    }

    /// Curvature `Ω_ij = ∂_i A_j - ∂_j A_i + [A_i, A_j]` at `x`.
    pub fn curvature(&self, i: usize, j: usize, x: &Vec3) -> Result<Quaternion> {
        let ai = self.connection_A(&Vec3::ith(i, 1.0), x)?;
        let aj = self.connection_A(&Vec3::ith(j, 1.0), x)?;
        let d = self.connection_partial(i, j, x)? - self.connection_partial(j, i, x)?;
        Ok(d + ai * aj - aj * ai)
    }

    /// The monopole field strength `-½ ε_ijk x^k/‖x‖³ j(x)`.
    pub fn monopole_curvature(&self, i: usize, j: usize, x: &Vec3) -> Result<Quaternion> {
        let jx = self.jdir(x)?.as_quaternion();
        Ok(jx * (-0.5 * monopole_flux(i, j, x)))
    }

    /// Largest deviation of `Ω_ij ψ(x)` from `-½ ε_ijk x^k/‖x‖³ j(x) ψ(x)`.
    pub fn curvature_check<F: Field + ?Sized>(
        &self,
        i: usize,
        j: usize,
        x: &Vec3,
        psi: &F,
    ) -> Result<f64> {
        let value = psi.eval(x);
        let lhs = self.curvature(i, j, x)? * value;
        let rhs = self.monopole_curvature(i, j, x)? * value;
        Ok(lhs.max_abs_diff(&rhs))
    }

    /// Real components `(ω_1, ω_2, ω_3)` of `Ω_ij` along `e_1, e_2, e_3`.
    pub fn presymplectic_extract(&self, i: usize, j: usize, x: &Vec3) -> Result<Vec3> {
        let omega = self.curvature(i, j, x)?;
        // scalar part of e_k* Ω picks the e_k coefficient
        Ok(Vec3::from_fn(|k, _| {
            (Quaternion::basis(k + 1).conj() * omega).w
        }))
    }
}

/// `ε_ijk x^k / ‖x‖³`.
pub fn monopole_flux(i: usize, j: usize, x: &Vec3) -> f64 {
    let r3 = x.norm().powi(3);
    (0..3).map(|k| levi_civita(i, j, k) * x[k]).sum::<f64>() / r3
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_8};

    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::field::{ConstantField, ProbeFunction};

    fn kin() -> Kinematics {
        Kinematics::default()
    }

    fn v(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3::new(x, y, z)
    }

    fn probe() -> ProbeFunction {
        ProbeFunction::new(
            v(0.3, 0.1, -0.2),
            1.1,
            Quaternion::new(0.4, -0.7, 0.2, 0.5),
            [
                Quaternion::new(0.2, 0.1, 0.0, -0.3),
                Quaternion::new(-0.5, 0.6, 0.1, 0.2),
                Quaternion::new(0.0, -0.2, 0.8, 0.1),
            ],
        )
    }

    #[test]
    fn cocycle_examples() {
        let k = kin();
        let x = v(1.0, 0.0, 0.0);
        assert_eq!(k.cocycle_w(&Vec3::zeros(), &x).unwrap(), UnitQuaternion::IDENTITY);
        let w = k.cocycle_w(&v(0.0, 1.0, 0.0), &x).unwrap();
        let expected = Quaternion::new(FRAC_PI_8.cos(), 0.0, 0.0, FRAC_PI_8.sin());
        assert_abs_diff_eq!(w.inner().max_abs_diff(&expected), 0.0, epsilon = 1e-15);
        assert_eq!(k.cocycle_w(&v(2.0, 0.0, 0.0), &x).unwrap(), UnitQuaternion::IDENTITY);
    }

    #[test]
    fn cocycle_errors() {
        let k = kin();
        assert!(matches!(
            k.cocycle_w(&v(-2.0, 0.0, 0.0), &v(1.0, 0.0, 0.0)),
            Err(Error::AntipodalTranslation { .. })
        ));
        assert!(matches!(
            k.cocycle_w(&v(-2.0, 1e-5, 0.0), &v(1.0, 0.0, 0.0)),
            Err(Error::AntipodalTranslation { .. })
        ));
        assert!(matches!(
            k.cocycle_w(&v(-1.0, 0.0, 0.0), &v(1.0, 0.0, 0.0)),
            Err(Error::SingularPoint { .. })
        ));
        assert!(matches!(
            k.cocycle_w(&v(1.0, 0.0, 0.0), &v(0.05, 0.0, 0.0)),
            Err(Error::SingularPoint { .. })
        ));
    }

    #[test]
    fn cocycle_rotates_x_onto_x_plus_a() {
        let k = kin();
        let x = v(0.4, -1.1, 0.7);
        let a = v(1.3, 0.2, -0.9);
        let w = k.cocycle_w(&a, &x).unwrap();
        let r = crate::quat::rotate_vector(&w, &x.normalize());
        assert_abs_diff_eq!((r - (x + a).normalize()).amax(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn translation_examples() {
        let k = kin();
        let psi = probe();
        let x = v(0.9, -0.5, 1.2);
        assert_eq!(k.apply_U(&Vec3::zeros(), &psi, &x).unwrap(), psi.eval(&x));
        let a = v(0.3, 0.8, -0.4);
        let once = |y: &Vec3| k.apply_U(&a, &psi, y).unwrap();
        let back = k.apply_U(&-a, &once, &x).unwrap();
        assert!(back.max_abs_diff(&psi.eval(&x)) < 1e-12);
        let (s, t) = (0.7, -0.3);
        let first = |y: &Vec3| k.apply_U(&(a * s), &psi, y).unwrap();
        let both = k.apply_U(&(a * t), &first, &x).unwrap();
        let fused = k.apply_U(&(a * (s + t)), &psi, &x).unwrap();
        assert!(both.max_abs_diff(&fused) < 1e-12);
    }

    #[test]
    fn multiplier_examples() {
        let k = kin();
        let x = v(0.6, 1.0, -0.3);
        let a = v(-0.4, 0.2, 0.9);
        let one = Quaternion::ONE;
        let m = k.multiplier_m(&a, &-a, &x).unwrap();
        assert!(m.inner().max_abs_diff(&one) < 1e-12);
        assert!(k.multiplier_m(&Vec3::zeros(), &a, &x).unwrap().inner().max_abs_diff(&one) < 1e-15);
        assert!(k.multiplier_m(&a, &Vec3::zeros(), &x).unwrap().inner().max_abs_diff(&one) < 1e-15);
        // all three vertices in the plane spanned by e1, e2
        let m = k
            .multiplier_m(&v(0.3, 0.5, 0.0), &v(-0.8, 0.2, 0.0), &v(1.0, 0.4, 0.0))
            .unwrap();
        assert!(m.inner().max_abs_diff(&one) < 1e-12);
    }

    #[test]
    fn solid_angle_examples() {
        let k = kin();
        let (e1, e2, e3) = (Vec3::x(), Vec3::y(), Vec3::z());
        assert_abs_diff_eq!(k.solid_angle(&e1, &e2, &e3).unwrap(), FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(k.solid_angle(&e2, &e1, &e3).unwrap(), -FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(k.solid_angle(&e1, &e1, &e3).unwrap(), 0.0);
        assert_eq!(
            k.solid_angle(&e1, &(e1 * 2.0), &e3),
            Err(Error::DegenerateTriangle)
        );
    }

    #[test]
    fn geometric_phase_is_half_the_solid_angle() {
        let k = kin();
        let r1 = k
            .geometric_phase_ratio(&v(0.3, -0.9, 0.4), &v(0.5, 0.7, 0.2), &v(1.0, 0.2, -0.6))
            .unwrap();
        let r2 = k
            .geometric_phase_ratio(&v(-1.2, 0.1, 0.6), &v(0.3, -0.4, -1.1), &v(-0.4, 1.5, 0.8))
            .unwrap();
        assert_abs_diff_eq!(r1, r2, epsilon = 1e-6);
        assert_abs_diff_eq!(r1.abs(), 0.5, epsilon = 1e-6);
        assert!(matches!(
            k.geometric_phase_ratio(&v(0.3, 0.5, 0.0), &v(-0.8, 0.2, 0.0), &v(1.0, 0.4, 0.0)),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn connection_examples() {
        let k = kin();
        let x = v(0.3, -0.4, 1.2);
        assert_eq!(k.connection_A(&x.normalize(), &x).unwrap().max_abs(), 0.0);
        let a = k.connection_A(&Vec3::x(), &Vec3::z()).unwrap();
        assert_eq!(a, Quaternion::new(0.0, 0.0, -0.5, 0.0));
        let u = Vec3::y();
        let scaled = k.connection_A(&u, &(x * 3.0)).unwrap().norm();
        assert_abs_diff_eq!(scaled, k.connection_A(&u, &x).unwrap().norm() / 3.0, epsilon = 1e-15);
        assert!(k.connection_A(&u, &v(0.01, 0.0, 0.0)).is_err());
    }

    #[test]
    fn nabla_examples() {
        let k = kin();
        let q0 = Quaternion::new(0.2, -0.5, 0.1, 0.9);
        let x = v(0.4, 1.0, -0.8);
        let u = Vec3::z();
        let lhs = k.apply_nabla(&u, &ConstantField(q0), &x).unwrap();
        assert_eq!(lhs, k.connection_A(&u, &x).unwrap() * q0);
        // radial direction: gauge term vanishes
        let psi = probe();
        let ur = x.normalize();
        let lhs = k.apply_nabla(&ur, &psi, &x).unwrap();
        assert!(lhs.max_abs_diff(&psi.directional(&ur, &x)) < 1e-15);
    }

    #[test]
    fn nabla_generates_translations() {
        let k = kin();
        let psi = probe();
        let x = v(-0.7, 0.5, 1.1);
        let u = v(1.0, 2.0, -2.0) / 3.0;
        let an = k.apply_nabla(&u, &psi, &x).unwrap();
        let fd = k.translation_derivative_fd(&u, &psi, &x).unwrap();
        assert!((an + fd).max_abs() < 1e-6);
    }

    #[test]
    fn complex_structure() {
        let k = kin();
        let x = v(0.0, 0.0, 1.0);
        assert_eq!(k.apply_J(&Quaternion::ONE, &x).unwrap(), Quaternion::basis(3));
        let q = Quaternion::new(0.3, 0.1, -0.8, 0.4);
        let x = v(1.2, -0.3, 0.5);
        let jj = k.apply_J(&k.apply_J(&q, &x).unwrap(), &x).unwrap();
        assert!(jj.max_abs_diff(&-q) < 1e-15);
        assert_abs_diff_eq!(k.apply_J(&q, &x).unwrap().norm(), q.norm(), epsilon = 1e-15);
        assert_eq!(k.apply_X(0, &Quaternion::basis(2), &v(2.0, 0.0, 0.0)), Quaternion::basis(2) * 2.0);
    }

    #[test]
    fn rotation_generator_on_constants() {
        let k = kin();
        let x = v(0.5, 0.2, -0.4);
        for i in 0..3 {
            let l = k.apply_L(i, &ConstantField(Quaternion::ONE), &x);
            assert_eq!(l, Quaternion::basis(i + 1) * -0.5);
        }
    }

    #[test]
    fn connection_partials_match_differences() {
        let k = kin();
        let x = v(0.8, -0.3, 0.6);
        for i in 0..3 {
            for j in 0..3 {
                let aj = |y: &Vec3| connection_raw(&Vec3::ith(j, 1.0), y);
                let fd = directional_fd(&aj, &Vec3::ith(i, 1.0), &x, 1e-4, Stencil::Central5);
                let an = k.connection_partial(i, j, &x).unwrap();
                assert!(an.max_abs_diff(&fd) < 1e-10);
            }
        }
    }

    #[test]
    fn curvature_examples() {
        let k = kin();
        let psi = probe();
        let x = Vec3::z();
        assert_eq!(k.curvature(1, 1, &x).unwrap(), Quaternion::ZERO);
        let omega = k.curvature(0, 1, &x).unwrap();
        assert!(omega.max_abs_diff(&(Quaternion::basis(3) * -0.5)) < 1e-15);
        assert!(k.curvature_check(0, 1, &x, &psi).unwrap() < 1e-15);
        let y = v(-0.6, 1.3, 0.4);
        for (i, j) in [(0, 1), (1, 2), (0, 2), (2, 0)] {
            assert!(k.curvature_check(i, j, &y, &psi).unwrap() < 1e-12);
        }
    }

    #[test]
    fn presymplectic_examples() {
        let k = kin();
        let w = k.presymplectic_extract(0, 1, &Vec3::z()).unwrap();
        assert_abs_diff_eq!((w - v(0.0, 0.0, -0.5)).amax(), 0.0, epsilon = 1e-15);
        let y = v(0.7, -0.2, 1.1);
        assert_eq!(k.curvature(0, 2, &y).unwrap().w, 0.0);
        let w02 = k.presymplectic_extract(0, 2, &y).unwrap();
        let w20 = k.presymplectic_extract(2, 0, &y).unwrap();
        assert_abs_diff_eq!((w02 + w20).amax(), 0.0, epsilon = 1e-15);
    }
}
