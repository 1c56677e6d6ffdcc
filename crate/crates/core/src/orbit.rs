//! Coadjoint action of the (covering) Poincaré group on the dual of its Lie
//! algebra, the massless helicity orbits and their Lie–Poisson geometry.
//!
//! Coordinates on the dual are ordered `(h, p¹, p², p³, j¹, j², j³, k¹, k², k³)`,
//! paired with the basis `(H, P, J, K)`. The metric signature is `(-,+,+,+)`.
//!
//! Structure constants are not transcribed: they are read off the coadjoint
//! action by finite differences, so every sign follows from the action itself.

use std::f64::consts::PI;

use nalgebra::{Matrix3, Matrix6};

use crate::error::{Error, Result};
use crate::quat::{qexp_pure, rotate_vector, ImaginaryUnit, Vec3};

/// Dimension of the Poincaré algebra.
pub const DIM: usize = 10;

/// Default lower bound on `‖p‖` for chart points.
pub const P_MIN: f64 = 1e-6;

/// Step for finite-difference gradients and the structure-constant derivation.
pub const FD_STEP: f64 = 1e-5;

/// Scale-relative tolerance for the orbit constraints.
pub const ORBIT_TOL: f64 = 1e-9;

/// Largest distance of a derived structure constant from a half-integer.
pub const ROUNDING_TOL: f64 = 1e-6;

/// Names of the basis elements in coordinate order.
pub const BASIS: [&str; DIM] = ["H", "P1", "P2", "P3", "J1", "J2", "J3", "K1", "K2", "K3"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoadjointPoint {
    pub h: f64,
    pub p: Vec3,
    pub j: Vec3,
    pub k: Vec3,
}

impl CoadjointPoint {
    pub fn new(h: f64, p: Vec3, j: Vec3, k: Vec3) -> Self {
        Self { h, p, j, k }
    }

    pub fn from_array(y: &[f64; DIM]) -> Self {
        let v = |o: usize| Vec3::new(y[o], y[o + 1], y[o + 2]);
        Self::new(y[0], v(1), v(4), v(7))
    }

    pub fn to_array(&self) -> [f64; DIM] {
        let mut y = [0.0; DIM];
        y[0] = self.h;
        for i in 0..3 {
            y[1 + i] = self.p[i];
            y[4 + i] = self.j[i];
            y[7 + i] = self.k[i];
        }
        y
    }

    /// The coordinate vector of the `i`-th basis element.
    pub fn basis(i: usize) -> Self {
        let mut y = [0.0; DIM];
        y[i] = 1.0;
        Self::from_array(&y)
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    pub fn max_abs_diff(&self, other: &CoadjointPoint) -> f64 {
        let (a, b) = (self.to_array(), other.to_array());
        a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

/// One factor `exp(X)` of a group element, labeled by the column of the action table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupFactor {
    /// `exp(-a⁰ H)`.
    TimeTranslation { a0: f64 },
    /// `exp(a·P)`.
    SpaceTranslation { a: Vec3 },
    /// `exp(α m·J)`, `α ∈ [0, 4π)` on the double cover.
    Rotation { alpha: f64, axis: ImaginaryUnit },
    /// `exp(ζ n·K)`, `ζ ≥ 0`.
    Boost { zeta: f64, axis: ImaginaryUnit },
}

impl GroupFactor {
    pub fn time_translation(a0: f64) -> Self {
        GroupFactor::TimeTranslation { a0 }
    }

    pub fn space_translation(a: Vec3) -> Self {
        GroupFactor::SpaceTranslation { a }
    }

    /// Normalizes the axis and reduces the angle into `[0, 4π)`.
    pub fn rotation(alpha: f64, axis: Vec3) -> Result<Self> {
        Ok(GroupFactor::Rotation {
            alpha: alpha.rem_euclid(4.0 * PI),
            axis: ImaginaryUnit::new(axis)?,
        })
    }

    /// Normalizes the axis; a negative rapidity flips it.
    pub fn boost(zeta: f64, axis: Vec3) -> Result<Self> {
        let axis = ImaginaryUnit::new(if zeta < 0.0 { -axis } else { axis })?;
        Ok(GroupFactor::Boost {
            zeta: zeta.abs(),
            axis,
        })
    }

    /// `exp(t E_i)` for the basis element `E_i`.
    pub fn exp_basis(i: usize, t: f64) -> Self {
        let e = |o: usize| Vec3::ith(i - o, 1.0);
        match i {
            0 => GroupFactor::time_translation(-t),
            1..=3 => GroupFactor::space_translation(e(1) * t),
            4..=6 => GroupFactor::rotation(t, e(4)).expect("basis axis"),
            7..=9 => GroupFactor::boost(t, e(7)).expect("basis axis"),
            _ => panic!("basis index {i} out of range"),
        }
    }

    pub fn inverse(&self) -> Self {
        match *self {
            GroupFactor::TimeTranslation { a0 } => GroupFactor::TimeTranslation { a0: -a0 },
            GroupFactor::SpaceTranslation { a } => GroupFactor::SpaceTranslation { a: -a },
            GroupFactor::Rotation { alpha, axis } => GroupFactor::Rotation {
                alpha: (-alpha).rem_euclid(4.0 * PI),
                axis,
            },
            GroupFactor::Boost { zeta, axis } => GroupFactor::Boost {
                zeta,
                axis: ImaginaryUnit::new(-axis.axis()).expect("unit axis"),
            },
        }
    }
}

/// `R_{αm} v` through the half-angle quaternion.
pub fn rotate(alpha: f64, axis: &ImaginaryUnit, v: &Vec3) -> Vec3 {
    rotate_vector(&qexp_pure(axis, 0.5 * alpha), v)
}

/// The `(h, p)` rows of the table, applied to any four-vector `(t, v)`.
pub fn transform_four_vector(g: &GroupFactor, t: f64, v: &Vec3) -> (f64, Vec3) {
    match g {
        GroupFactor::TimeTranslation { .. } | GroupFactor::SpaceTranslation { .. } => (t, *v),
        GroupFactor::Rotation { alpha, axis } => (t, rotate(*alpha, axis, v)),
        GroupFactor::Boost { zeta, axis } => {
            let n = axis.axis();
            let (sh, ch) = (zeta.sinh(), zeta.cosh());
            let nv = n.dot(v);
            (ch * t - sh * nv, v - n * (sh * t) + n * ((ch - 1.0) * nv))
        }
    }
}

/// `Coad(g) y`.
pub fn coad_apply(g: &GroupFactor, y: &CoadjointPoint) -> CoadjointPoint {
    let CoadjointPoint { h, p, j, k } = *y;
    match g {
        GroupFactor::TimeTranslation { a0 } => CoadjointPoint::new(h, p, j, k - p * *a0),
        GroupFactor::SpaceTranslation { a } => CoadjointPoint::new(h, p, j + a.cross(&p), k + a * h),
        GroupFactor::Rotation { alpha, axis } => CoadjointPoint::new(
            h,
            rotate(*alpha, axis, &p),
            rotate(*alpha, axis, &j),
            rotate(*alpha, axis, &k),
        ),
        GroupFactor::Boost { zeta, axis } => {
            let n = axis.axis();
            let (sh, ch) = (zeta.sinh(), zeta.cosh());
            let (h2, p2) = transform_four_vector(g, h, &p);
            let j2 = j * ch + n.cross(&k) * sh - n * ((ch - 1.0) * n.dot(&j));
            let k2 = k * ch - n.cross(&j) * sh - n * ((ch - 1.0) * n.dot(&k));
            CoadjointPoint::new(h2, p2, j2, k2)
        }
    }
}

/// Applies the factors left to right.
pub fn coad_word(gs: &[GroupFactor], y: &CoadjointPoint) -> CoadjointPoint {
    gs.iter().fold(*y, |acc, g| coad_apply(g, &acc))
}

/// `(w⁰, w) = (j·p, p×k + h j)`.
pub fn pauli_lubanski(y: &CoadjointPoint) -> (f64, Vec3) {
    (y.j.dot(&y.p), y.p.cross(&y.k) + y.j * y.h)
}

/// `(C1, C2) = (-h² + p·p, -(j·p)² + ‖p×k + h j‖²)`.
pub fn casimirs(y: &CoadjointPoint) -> (f64, f64) {
    let (w0, w) = pauli_lubanski(y);
    (-y.h * y.h + y.p.norm_squared(), -w0 * w0 + w.norm_squared())
}

/// Magnitudes of the terms entering each Casimir, for relative comparisons.
pub fn casimir_scales(y: &CoadjointPoint) -> (f64, f64) {
    let (w0, w) = pauli_lubanski(y);
    (y.h * y.h + y.p.norm_squared(), w0 * w0 + w.norm_squared())
}

/// Point `(q, p, λ)` of the massless orbit of helicity `λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitChartPoint {
    pub q: Vec3,
    pub p: Vec3,
    pub lambda: f64,
}

impl OrbitChartPoint {
    pub fn new(q: Vec3, p: Vec3, lambda: f64) -> Self {
        Self { q, p, lambda }
    }

    pub fn max_abs_diff(&self, other: &OrbitChartPoint) -> f64 {
        (self.q - other.q)
            .amax()
            .max((self.p - other.p).amax())
            .max((self.lambda - other.lambda).abs())
    }
}

fn check_momentum(p: &Vec3) -> Result<f64> {
    let n = p.norm();
    if !(n > P_MIN) {
        return Err(Error::MomentumTooSmall { norm: n });
    }
    Ok(n)
}

/// `h = ‖p‖, j = λ p/‖p‖ + q×p, k = ‖p‖ q`.
pub fn chart_to_point(c: &OrbitChartPoint) -> Result<CoadjointPoint> {
    let n = check_momentum(&c.p)?;
    Ok(CoadjointPoint::new(
        n,
        c.p,
        c.p * (c.lambda / n) + c.q.cross(&c.p),
        c.q * n,
    ))
}

/// `q = k/h, λ = j·p/‖p‖`, after checking that `y` is on a positive-energy
/// massless orbit with `w ∥ (h, p)`.
pub fn point_to_chart(y: &CoadjointPoint) -> Result<OrbitChartPoint> {
    let n = check_momentum(&y.p)?;
    if !(y.h > P_MIN) {
        return Err(Error::OffOrbit {
            constraint: "energy",
            residual: y.h,
        });
    }
    let (c1, _) = casimirs(y);
    let (s1, _) = casimir_scales(y);
    if !(c1.abs() <= ORBIT_TOL * s1) {
        return Err(Error::OffOrbit {
            constraint: "mass shell",
            residual: c1.abs() / s1,
        });
    }
    let lambda = y.j.dot(&y.p) / n;
    let (w0, w) = pauli_lubanski(y);
    let residual = (w0 - lambda * y.h).abs().max((w - y.p * lambda).amax());
    let scale = y.h * y.j.norm() + n * (y.j.norm() + y.k.norm());
    if !(residual <= ORBIT_TOL * scale) {
        return Err(Error::OffOrbit {
            constraint: "helicity alignment",
            residual: residual / scale,
        });
    }
    Ok(OrbitChartPoint::new(y.k / y.h, y.p, lambda))
}

/// Coordinate derivative of `g ↦ Coad(exp(t E_i)) y` at `t = 0`.
pub fn infinitesimal_action_fd(i: usize, y: &CoadjointPoint, step: f64) -> [f64; DIM] {
    let plus = coad_apply(&GroupFactor::exp_basis(i, step), y).to_array();
    let minus = coad_apply(&GroupFactor::exp_basis(i, -step), y).to_array();
    std::array::from_fn(|m| (plus[m] - minus[m]) / (2.0 * step))
}

/// `c[i][j][k] = c^k_ij` with `[E_i, E_j] = c^k_ij E_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    pub c: [[[f64; DIM]; DIM]; DIM],
}

/// Diagnostics of the finite-difference derivation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derivation {
    /// Largest distance of a raw entry from its rounded half-integer value.
    pub rounding_residual: f64,
}

impl StructureConstants {
    /// Derives the table from the coadjoint action.
    ///
    /// With `y_m = ⟨y, E_m⟩`, differentiating `⟨Coad(exp tE_i) y, E_j⟩` gives
    /// `(ad*_i y)_j = -c^k_ij y_k`; the linear map is sampled on the basis
    /// covectors and each entry rounded to the nearest half-integer.
    pub fn derive() -> Result<(Self, Derivation)> {
        let mut c = [[[0.0; DIM]; DIM]; DIM];
        let mut residual = 0.0_f64;
        for (k, _) in BASIS.iter().enumerate() {
            let y = CoadjointPoint::basis(k);
            for (i, ci) in c.iter_mut().enumerate() {
                let column = infinitesimal_action_fd(i, &y, FD_STEP);
                for (j, cij) in ci.iter_mut().enumerate() {
                    let raw = -column[j];
                    let rounded = (2.0 * raw).round() / 2.0;
                    residual = residual.max((raw - rounded).abs());
                    cij[k] = rounded;
                }
            }
        }
        if !(residual <= ROUNDING_TOL) {
            return Err(Error::InconsistentTable { residual });
        }
        Ok((
            Self { c },
            Derivation {
                rounding_residual: residual,
            },
        ))
    }

    /// `max |c^k_ij + c^k_ji|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut r = 0.0_f64;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    r = r.max((self.c[i][j][k] + self.c[j][i][k]).abs());
                }
            }
        }
        r
    }

    /// `max |Σ_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj|` over all triples.
    pub fn jacobi_residual(&self) -> f64 {
        let c = &self.c;
        let mut r = 0.0_f64;
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    for l in 0..DIM {
                        let s: f64 = (0..DIM)
                            .map(|m| {
                                c[i][j][m] * c[m][k][l]
                                    + c[j][k][m] * c[m][i][l]
                                    + c[k][i][m] * c[m][j][l]
                            })
                            .sum();
                        r = r.max(s.abs());
                    }
                }
            }
        }
        r
    }

    /// `ad*_{E_i} y` built from the table.
    pub fn ad_star(&self, i: usize, y: &CoadjointPoint) -> [f64; DIM] {
        let y = y.to_array();
        std::array::from_fn(|j| -(0..DIM).map(|k| self.c[i][j][k] * y[k]).sum::<f64>())
    }

    /// Largest deviation between the table's `ad*` and finite differences of
    /// the action at `y`, over all basis elements.
    pub fn regeneration_residual(&self, y: &CoadjointPoint) -> f64 {
        (0..DIM)
            .map(|i| {
                let fd = infinitesimal_action_fd(i, y, FD_STEP);
                let table = self.ad_star(i, y);
                fd.iter().zip(&table).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// `[E_i, E_j]` as a coefficient vector.
    pub fn commutator(&self, i: usize, j: usize) -> [f64; DIM] {
        self.c[i][j]
    }

    /// `{f, g}(y) = c^k_ij ∂_i f ∂_j g y_k`.
    pub fn bracket<F, G>(&self, f: &F, g: &G, y: &CoadjointPoint) -> f64
    where
        F: PhaseFunction + ?Sized,
        G: PhaseFunction + ?Sized,
    {
        let (df, dg, ya) = (f.gradient(y), g.gradient(y), y.to_array());
        let mut s = 0.0;
        for i in 0..DIM {
            if df[i] == 0.0 {
                continue;
            }
            for j in 0..DIM {
                if dg[j] == 0.0 {
                    continue;
                }
                let ck: f64 = (0..DIM).map(|k| self.c[i][j][k] * ya[k]).sum();
                s += ck * df[i] * dg[j];
            }
        }
        s
    }
}

/// A smooth function on the dual of the algebra.
pub trait PhaseFunction {
    fn value(&self, y: &CoadjointPoint) -> f64;

    /// Gradient in the coordinates; central differences unless overridden.
    fn gradient(&self, y: &CoadjointPoint) -> [f64; DIM] {
        fd_gradient(|z| self.value(z), y, FD_STEP)
    }
}

pub fn fd_gradient<F>(f: F, y: &CoadjointPoint, step: f64) -> [f64; DIM]
where
    F: Fn(&CoadjointPoint) -> f64,
{
    let base = y.to_array();
    std::array::from_fn(|i| {
        let mut plus = base;
        let mut minus = base;
        plus[i] += step;
        minus[i] -= step;
        (f(&CoadjointPoint::from_array(&plus)) - f(&CoadjointPoint::from_array(&minus)))
            / (2.0 * step)
    })
}

/// Built-in observables with closed-form gradients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    /// The `i`-th linear coordinate.
    Coordinate(usize),
    /// `pⁱ`, `i` in `0..3`.
    Momentum(usize),
    /// `qⁱ = kⁱ/h`, `i` in `0..3`.
    Position(usize),
}

impl PhaseFunction for Observable {
    fn value(&self, y: &CoadjointPoint) -> f64 {
        match *self {
            Observable::Coordinate(i) => y.to_array()[i],
            Observable::Momentum(i) => y.p[i],
            Observable::Position(i) => y.k[i] / y.h,
        }
    }

    fn gradient(&self, y: &CoadjointPoint) -> [f64; DIM] {
        let mut g = [0.0; DIM];
        match *self {
            Observable::Coordinate(i) => g[i] = 1.0,
            Observable::Momentum(i) => g[1 + i] = 1.0,
            Observable::Position(i) => {
                g[0] = -y.k[i] / (y.h * y.h);
                g[7 + i] = 1.0 / y.h;
            }
        }
        g
    }
}

/// Any closure, differentiated numerically.
pub struct Numeric<F>(pub F);

impl<F: Fn(&CoadjointPoint) -> f64> PhaseFunction for Numeric<F> {
    fn value(&self, y: &CoadjointPoint) -> f64 {
        (self.0)(y)
    }
}

/// `B_ab = ε_abk p^k / ‖p‖³`.
fn monopole_block(p: &Vec3) -> Matrix3<f64> {
    let s = p / p.norm().powi(3);
    Matrix3::new(0.0, s.z, -s.y, -s.z, 0.0, s.x, s.y, -s.x, 0.0)
}

fn block_matrix(
    qq: &Matrix3<f64>,
    qp: &Matrix3<f64>,
    pq: &Matrix3<f64>,
    pp: &Matrix3<f64>,
) -> Matrix6<f64> {
    let mut m = Matrix6::zeros();
    m.fixed_view_mut::<3, 3>(0, 0).copy_from(qq);
    m.fixed_view_mut::<3, 3>(0, 3).copy_from(qp);
    m.fixed_view_mut::<3, 3>(3, 0).copy_from(pq);
    m.fixed_view_mut::<3, 3>(3, 3).copy_from(pp);
    m
}

/// `Ω_ab = ω(e_a, e_b)` in the basis `(∂q₁..∂q₃, ∂p₁..∂p₃)` for the 2-form
/// whose Poisson bivector is the orbit bracket:
/// `ω = dqⁱ∧dpⁱ + ½ λ ε_ijk p^k dpⁱ∧dpʲ / ‖p‖³`, i.e. `Ω_pp = +λ ε_abk p^k/‖p‖³`.
pub fn symplectic_matrix(c: &OrbitChartPoint) -> Result<Matrix6<f64>> {
    check_momentum(&c.p)?;
    let id = Matrix3::identity();
    Ok(block_matrix(
        &Matrix3::zeros(),
        &id,
        &-id,
        &(monopole_block(&c.p) * c.lambda),
    ))
}

/// The matrix of `ω = dqⁱ∧dpⁱ - λ ε_ijk p^k dpⁱ∧dpʲ / ‖p‖³` read literally,
/// which gives `Ω_pp = -2λ ε_abk p^k/‖p‖³`.
pub fn symplectic_matrix_as_printed(c: &OrbitChartPoint) -> Result<Matrix6<f64>> {
    check_momentum(&c.p)?;
    let id = Matrix3::identity();
    Ok(block_matrix(
        &Matrix3::zeros(),
        &id,
        &-id,
        &(monopole_block(&c.p) * (-2.0 * c.lambda)),
    ))
}

/// `Π_ab = {z_a, z_b}` over `z = (q, p)` from the Lie–Poisson engine.
pub fn poisson_bivector(table: &StructureConstants, c: &OrbitChartPoint) -> Result<Matrix6<f64>> {
    let y = chart_to_point(c)?;
    let obs = |a: usize| {
        if a < 3 {
            Observable::Position(a)
        } else {
            Observable::Momentum(a - 3)
        }
    };
    Ok(Matrix6::from_fn(|a, b| table.bracket(&obs(a), &obs(b), &y)))
}

/// Largest entry of `s Ω⁻¹ - Π`, with the overall sign `s` fixed by the
/// `(p₁, q₁)` entries. Returns `None` if `Ω` is singular.
pub fn inverse_bivector_residual(omega: &Matrix6<f64>, pi: &Matrix6<f64>) -> Option<f64> {
    let inv = omega.try_inverse()?;
    let sign = (pi[(3, 0)] / inv[(3, 0)]).signum();
    Some((inv * sign - pi).amax())
}

/// `max |q' - closed form|` for `q' = point_to_chart(Coad(g) chart_to_point(c)).q`.
/// Boosts have no closed form and yield `None`.
pub fn coad_q_action_check(g: &GroupFactor, c: &OrbitChartPoint) -> Result<Option<f64>> {
    let expected = match g {
        GroupFactor::TimeTranslation { a0 } => c.q - c.p * (*a0 / c.p.norm()),
        GroupFactor::SpaceTranslation { a } => c.q + a,
        GroupFactor::Rotation { alpha, axis } => rotate(*alpha, axis, &c.q),
        GroupFactor::Boost { .. } => return Ok(None),
    };
    let moved = point_to_chart(&coad_apply(g, &chart_to_point(c)?))?;
    Ok(Some((moved.q - expected).amax()))
}

/// Comparison of the orbit brackets with the monopole Poisson structure
/// `{p_i, xʲ} = δ, {xⁱ, xʲ} = 0, {p_i, p_j} = -g ε_ijk x^k/‖x‖ⁿ` under the
/// exchange `q ↔ p_monopole`, `p ↔ x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Duality {
    /// Max entry deviation with `g = λ` and `n = 3`.
    pub residual_cubic: f64,
    /// Max entry deviation with `g = ½` and `n = 2`, the normalization written
    /// for the monopole.
    pub residual_as_printed: f64,
    /// Max entry deviation with `g = ½` and `n = 3`.
    pub residual_half_cubic: f64,
}

/// Monopole bracket table `{z_a, z_b}` over `z = (p_monopole, x)`.
fn monopole_table(x: &Vec3, strength: f64, exponent: i32) -> Matrix6<f64> {
    let s = x / x.norm().powi(exponent);
    let eps_s = Matrix3::new(0.0, s.z, -s.y, -s.z, 0.0, s.x, s.y, -s.x, 0.0);
    let id = Matrix3::identity();
    block_matrix(&(eps_s * -strength), &id, &-id, &Matrix3::zeros())
}

pub fn monopole_duality_check(table: &StructureConstants, c: &OrbitChartPoint) -> Result<Duality> {
    let orbit = poisson_bivector(table, c)?;
    let dev = |g: f64, n: i32| (orbit - monopole_table(&c.p, g, n)).amax();
    Ok(Duality {
        residual_cubic: dev(c.lambda, 3),
        residual_as_printed: dev(0.5, 2),
        residual_half_cubic: dev(0.5, 3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn v(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3::new(x, y, z)
    }

    fn table() -> StructureConstants {
        StructureConstants::derive().unwrap().0
    }

    fn generic() -> CoadjointPoint {
        CoadjointPoint::new(1.3, v(0.2, -0.7, 0.5), v(0.4, 0.1, -0.9), v(-0.3, 0.8, 0.6))
    }

    #[test]
    fn boost_on_rest_energy() {
        let z = 0.7;
        let y = CoadjointPoint::new(1.0, Vec3::zeros(), Vec3::zeros(), Vec3::zeros());
        let out = coad_apply(&GroupFactor::boost(z, Vec3::z()).unwrap(), &y);
        assert_abs_diff_eq!(out.h, z.cosh(), epsilon = 1e-15);
        assert!((out.p - v(0.0, 0.0, -z.sinh())).amax() < 1e-15);
    }

    #[test]
    fn full_turn_is_identity() {
        let y = generic();
        let g = GroupFactor::rotation(2.0 * PI, v(1.0, 2.0, -0.5)).unwrap();
        assert!(coad_apply(&g, &y).max_abs_diff(&y) < 1e-14);
    }

    #[test]
    fn translation_shifts_angular_momentum() {
        let y = generic();
        let a = v(0.3, -0.2, 1.1);
        let out = coad_apply(&GroupFactor::space_translation(a), &y);
        assert!((out.j - (y.j + a.cross(&y.p))).amax() < 1e-15);
    }

    #[test]
    fn words_compose() {
        let y = generic();
        assert_eq!(coad_word(&[], &y), y);
        let n = v(0.3, 0.4, -0.2);
        let pair = [
            GroupFactor::boost(0.8, n).unwrap(),
            GroupFactor::boost(-0.8, n).unwrap(),
        ];
        assert!(coad_word(&pair, &y).max_abs_diff(&y) < 1e-12);
        let m = v(-1.0, 0.5, 2.0);
        let fused = coad_apply(&GroupFactor::rotation(1.9, m).unwrap(), &y);
        let split = coad_word(
            &[
                GroupFactor::rotation(0.7, m).unwrap(),
                GroupFactor::rotation(1.2, m).unwrap(),
            ],
            &y,
        );
        assert!(fused.max_abs_diff(&split) < 1e-12);
    }

    #[test]
    fn pauli_lubanski_and_casimirs() {
        let y = CoadjointPoint::new(1.0, Vec3::zeros(), v(0.0, 0.0, 3.0), Vec3::zeros());
        assert_eq!(pauli_lubanski(&y), (0.0, v(0.0, 0.0, 3.0)));
        assert_eq!(casimirs(&y), (-1.0, 9.0));
        let g = generic();
        let (w0, w) = pauli_lubanski(&g);
        assert!((-g.h * w0 + g.p.dot(&w)).abs() < 1e-15);
    }

    #[test]
    fn chart_examples() {
        let c = OrbitChartPoint::new(Vec3::zeros(), Vec3::z(), 2.0);
        let y = chart_to_point(&c).unwrap();
        assert_eq!(y, CoadjointPoint::new(1.0, Vec3::z(), v(0.0, 0.0, 2.0), Vec3::zeros()));
        assert_eq!(point_to_chart(&y).unwrap(), c);
        let c = OrbitChartPoint::new(v(0.3, -1.2, 0.8), v(-0.5, 0.9, 1.7), -1.5);
        let y = chart_to_point(&c).unwrap();
        let (c1, c2) = casimirs(&y);
        assert!(c1.abs() < 1e-14 && c2.abs() < 1e-12);
        let (w0, w) = pauli_lubanski(&y);
        assert!((w0 - c.lambda * y.h).abs() < 1e-14 && (w - y.p * c.lambda).amax() < 1e-14);
        assert!(point_to_chart(&y).unwrap().max_abs_diff(&c) < 1e-14);
    }

    #[test]
    fn massive_points_are_off_orbit() {
        let y = CoadjointPoint::new(2.0, Vec3::x(), Vec3::zeros(), Vec3::zeros());
        assert!(matches!(point_to_chart(&y), Err(Error::OffOrbit { .. })));
        let c = OrbitChartPoint::new(Vec3::zeros(), Vec3::zeros(), 1.0);
        assert!(matches!(chart_to_point(&c), Err(Error::MomentumTooSmall { .. })));
    }

    #[test]
    fn structure_constants_are_a_lie_algebra() {
        let (t, d) = StructureConstants::derive().unwrap();
        assert!(d.rounding_residual < 1e-8);
        assert_eq!(t.antisymmetry_residual(), 0.0);
        assert_eq!(t.jacobi_residual(), 0.0);
        assert!(t.regeneration_residual(&generic()) < 1e-8);
        // translations commute
        for i in 0..4 {
            for j in 0..4 {
                assert!(t.commutator(i, j).iter().all(|&c| c == 0.0));
            }
        }
        // [J1, J2] = ±J3 only
        let c = t.commutator(4, 5);
        assert_eq!(c[6].abs(), 1.0);
        assert_eq!(c.iter().filter(|&&x| x != 0.0).count(), 1);
    }

    #[test]
    fn orbit_brackets() {
        let t = table();
        let c = OrbitChartPoint::new(v(0.4, -0.1, 0.7), v(0.6, -1.1, 0.3), 0.8);
        let y = chart_to_point(&c).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let pq = t.bracket(&Observable::Momentum(i), &Observable::Position(j), &y);
                assert_abs_diff_eq!(pq, if i == j { -1.0 } else { 0.0 }, epsilon = 1e-12);
            }
        }
        let c = OrbitChartPoint::new(Vec3::zeros(), Vec3::z(), 1.7);
        let y = chart_to_point(&c).unwrap();
        let qq = t.bracket(&Observable::Position(0), &Observable::Position(1), &y);
        assert_abs_diff_eq!(qq, -1.7, epsilon = 1e-12);
        let f = Numeric(|y: &CoadjointPoint| y.h * y.k.x + y.j.y.sin());
        assert_eq!(t.bracket(&f, &f, &y).abs() < 1e-9, true);
    }

    #[test]
    fn symplectic_inverse_is_bivector() {
        let t = table();
        let c = OrbitChartPoint::new(v(0.1, 0.2, -0.4), v(-0.8, 0.3, 0.5), 1.3);
        let omega = symplectic_matrix(&c).unwrap();
        assert!((omega + omega.transpose()).amax() == 0.0);
        let pi = poisson_bivector(&t, &c).unwrap();
        assert!(inverse_bivector_residual(&omega, &pi).unwrap() < 1e-10);
        assert!(omega.determinant() > 0.0);
        let printed = symplectic_matrix_as_printed(&c).unwrap();
        assert!(inverse_bivector_residual(&printed, &pi).unwrap() > 1e-3);
        let flat = symplectic_matrix(&OrbitChartPoint { lambda: 0.0, ..c }).unwrap();
        assert_eq!(flat.fixed_view::<3, 3>(3, 3).amax(), 0.0);
        assert_abs_diff_eq!(omega.determinant(), flat.determinant(), epsilon = 1e-10);
    }

    #[test]
    fn q_action_closed_forms() {
        let c = OrbitChartPoint::new(Vec3::zeros(), Vec3::z(), 0.5);
        let g = GroupFactor::time_translation(0.9);
        let moved = point_to_chart(&coad_apply(&g, &chart_to_point(&c).unwrap())).unwrap();
        assert!((moved.q - v(0.0, 0.0, -0.9)).amax() < 1e-15);
        let c = OrbitChartPoint::new(v(0.3, 0.2, -0.5), v(1.0, -0.4, 0.6), -0.7);
        for g in [
            GroupFactor::time_translation(-1.3),
            GroupFactor::space_translation(v(0.5, 1.0, -2.0)),
            GroupFactor::rotation(2.2, v(0.1, -0.3, 1.0)).unwrap(),
        ] {
            assert!(coad_q_action_check(&g, &c).unwrap().unwrap() < 1e-12);
        }
        let boost = GroupFactor::boost(0.3, Vec3::x()).unwrap();
        assert_eq!(coad_q_action_check(&boost, &c).unwrap(), None);
    }

    #[test]
    fn duality_needs_cubic_normalization() {
        let t = table();
        let c = OrbitChartPoint::new(v(0.2, 0.1, 0.0), v(0.0, 0.0, 1.0), 0.5);
        let y = chart_to_point(&c).unwrap();
        let qq = t.bracket(&Observable::Position(0), &Observable::Position(1), &y);
        assert_abs_diff_eq!(qq, -0.5, epsilon = 1e-12);
        let c = OrbitChartPoint::new(v(0.2, 0.1, 0.0), v(0.3, -1.4, 0.9), 0.5);
        let d = monopole_duality_check(&t, &c).unwrap();
        assert!(d.residual_cubic < 1e-10 && d.residual_half_cubic < 1e-10);
        assert!(d.residual_as_printed > 1e-3);
        // p → 2p scales the q–q block by 1/4
        let y1 = chart_to_point(&c).unwrap();
        let y2 = chart_to_point(&OrbitChartPoint { p: c.p * 2.0, ..c }).unwrap();
        let b = |y: &CoadjointPoint| t.bracket(&Observable::Position(1), &Observable::Position(2), y);
        assert_abs_diff_eq!(b(&y2), b(&y1) / 4.0, epsilon = 1e-12);
    }
}
