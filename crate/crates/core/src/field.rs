//! Quaternion-valued wavefunctions on R³ and finite-difference derivatives.

use crate::quat::{Quaternion, Vec3};

/// A quaternion-valued function on R³.
pub trait Field {
    fn eval(&self, x: &Vec3) -> Quaternion;
}

impl<F> Field for F
where
    F: Fn(&Vec3) -> Quaternion,
{
    fn eval(&self, x: &Vec3) -> Quaternion {
        self(x)
    }
}

/// A field with closed-form first partial derivatives.
pub trait Differentiable: Field {
    /// `∂ψ/∂x_i` at `x`, `i` in `0..3`.
    fn partial(&self, i: usize, x: &Vec3) -> Quaternion;

    fn directional(&self, u: &Vec3, x: &Vec3) -> Quaternion {
        (0..3).fold(Quaternion::ZERO, |acc, i| acc + self.partial(i, x) * u[i])
    }
}

/// Central-difference stencils.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stencil {
    /// `(f(x+h) - f(x-h)) / 2h`, error O(h²).
    Central3,
    /// Five-point central difference, error O(h⁴).
    Central5,
}

/// Central difference of a quaternion-valued function of one real variable at `t`.
pub fn derivative<G>(g: G, t: f64, h: f64, stencil: Stencil) -> Quaternion
where
    G: Fn(f64) -> Quaternion,
{
    match stencil {
        Stencil::Central3 => (g(t + h) - g(t - h)) * (0.5 / h),
        Stencil::Central5 => {
            let near = g(t + h) - g(t - h);
            let far = g(t + 2.0 * h) - g(t - 2.0 * h);
            (near * 8.0 - far) * (1.0 / (12.0 * h))
        }
    }
}

/// Directional derivative `u·∂f` at `x` by central differences.
pub fn directional_fd<F: Field + ?Sized>(
    f: &F,
    u: &Vec3,
    x: &Vec3,
    h: f64,
    stencil: Stencil,
) -> Quaternion {
    derivative(|t| f.eval(&(x + u * t)), 0.0, h, stencil)
}

/// Gaussian-times-affine test wavefunction
/// `ψ(x) = exp(-‖x-c‖²/s²) (q0 + Σ (x_i - c_i) q_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeFunction {
    pub center: Vec3,
    pub width: f64,
    pub amplitude: Quaternion,
    pub linear: [Quaternion; 3],
}

impl ProbeFunction {
    pub fn new(center: Vec3, width: f64, amplitude: Quaternion, linear: [Quaternion; 3]) -> Self {
        assert!(width > 0.0, "probe width must be positive");
        Self {
            center,
            width,
            amplitude,
            linear,
        }
    }

    /// A constant-amplitude probe with no linear part. Its width still cuts it
    /// off far from the center.
    pub fn constant(amplitude: Quaternion, width: f64) -> Self {
        Self::new(Vec3::zeros(), width, amplitude, [Quaternion::ZERO; 3])
    }

    fn envelope(&self, d: &Vec3) -> f64 {
        (-d.norm_squared() / (self.width * self.width)).exp()
    }

    fn affine(&self, d: &Vec3) -> Quaternion {
        (0..3).fold(self.amplitude, |acc, i| acc + self.linear[i] * d[i])
    }
}

impl Field for ProbeFunction {
    fn eval(&self, x: &Vec3) -> Quaternion {
        let d = x - self.center;
        self.affine(&d) * self.envelope(&d)
    }
}

impl Differentiable for ProbeFunction {
    fn partial(&self, i: usize, x: &Vec3) -> Quaternion {
        let d = x - self.center;
        let g = self.envelope(&d);
        let s2 = self.width * self.width;
        (self.affine(&d) * (-2.0 * d[i] / s2) + self.linear[i]) * g
    }
}

/// A spatially constant field, so derivative terms of operators vanish identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantField(pub Quaternion);

impl Field for ConstantField {
    fn eval(&self, _x: &Vec3) -> Quaternion {
        self.0
    }
}

impl Differentiable for ConstantField {
    fn partial(&self, _i: usize, _x: &Vec3) -> Quaternion {
        Quaternion::ZERO
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe() -> ProbeFunction {
        ProbeFunction::new(
            Vec3::new(0.2, -0.4, 0.7),
            1.3,
            Quaternion::new(0.5, -0.2, 0.9, 0.1),
            [
                Quaternion::new(0.1, 0.3, -0.7, 0.2),
                Quaternion::new(-0.6, 0.0, 0.4, 0.8),
                Quaternion::new(0.3, -0.5, 0.2, -0.1),
            ],
        )
    }

    #[test]
    fn analytic_partials_match_central_differences() {
        let psi = probe();
        for x in [
            Vec3::new(1.0, 0.5, -0.3),
            Vec3::new(-1.2, 2.0, 0.4),
            Vec3::new(0.2, -0.4, 0.7),
        ] {
            for i in 0..3 {
                let an = psi.partial(i, &x);
                let fd = directional_fd(&psi, &Vec3::ith(i, 1.0), &x, 1e-4, Stencil::Central3);
                assert!(an.max_abs_diff(&fd) < 1e-6 * (1.0 + an.max_abs()));
            }
        }
    }

    #[test]
    fn five_point_stencil_is_fourth_order() {
        let g = |t: f64| Quaternion::new(t.sin(), t.cos(), (2.0 * t).exp(), t.powi(5));
        let exact = Quaternion::new(1.0_f64.cos(), -1.0_f64.sin(), 2.0 * 2.0_f64.exp(), 5.0);
        let e3 = derivative(g, 1.0, 1e-3, Stencil::Central3).max_abs_diff(&exact);
        let e5 = derivative(g, 1.0, 1e-3, Stencil::Central5).max_abs_diff(&exact);
        assert!(e5 < 1e-10, "{e5}");
        assert!(e5 < e3 * 1e-3);
    }

    #[test]
    fn probe_is_centered_gaussian() {
        let psi = probe();
        assert_eq!(psi.eval(&psi.center), psi.amplitude);
        let far = psi.eval(&Vec3::new(40.0, 0.0, 0.0));
        assert!(far.max_abs() < 1e-200);
    }
}
