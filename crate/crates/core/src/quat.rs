//! Hamilton quaternions split as scalar + 3-vector.
//!
//! The basis is `e0 = 1, e1, e2, e3` with `e_i e_j = -δ_ij + ε_ijk e_k`. A real
//! 3-vector `x` is identified with the pure quaternion `x·e`. All the phase
//! factors of the monopole kinematics act by *left* multiplication, so the
//! operator overloads here are the whole algebra the other modules need.
//!
//! The 2×2 complex matrix picture (`e0 = σ0`, `e_i = -iσ_i`) is confined to
//! [`pauli_matrix`], [`pauli_check`] and [`hopf_project`].

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use nalgebra::{Complex, Matrix2, Vector3};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;

/// Raw norms below this are treated as directionless.
pub const NORMALIZE_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    /// Coefficient of `e0`.
    pub w: f64,
    /// Coefficients of `(e1, e2, e3)`.
    pub v: Vec3,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion {
        w: 0.0,
        v: Vector3::new(0.0, 0.0, 0.0),
    };
    pub const ONE: Quaternion = Quaternion {
        w: 1.0,
        v: Vector3::new(0.0, 0.0, 0.0),
    };

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self {
            w,
            v: Vector3::new(x, y, z),
        }
    }

    pub fn from_parts(w: f64, v: Vec3) -> Self {
        Self { w, v }
    }

    /// The pure quaternion `v·e`.
    pub fn pure(v: Vec3) -> Self {
        Self { w: 0.0, v }
    }

    pub fn scalar(w: f64) -> Self {
        Self { w, v: Vec3::zeros() }
    }

    /// Basis unit `e_i` for `i` in `0..4`.
    pub fn basis(i: usize) -> Self {
        match i {
            0 => Self::ONE,
            1 => Self::new(0.0, 1.0, 0.0, 0.0),
            2 => Self::new(0.0, 0.0, 1.0, 0.0),
            3 => Self::new(0.0, 0.0, 0.0, 1.0),
            _ => panic!("quaternion basis index {i} out of range"),
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            w: self.w,
            v: -self.v,
        }
    }

    pub fn norm_squared(&self) -> f64 {
        self.w * self.w + self.v.norm_squared()
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Multiplicative inverse, `None` for the zero quaternion.
    pub fn inverse(&self) -> Option<Self> {
        let n2 = self.norm_squared();
        (n2 > 0.0).then(|| self.conj() * (1.0 / n2))
    }

    /// `self - q` measured as the largest absolute component difference.
    pub fn max_abs_diff(&self, q: &Quaternion) -> f64 {
        let d = *self - *q;
        d.w.abs().max(d.v.amax())
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.w.abs().max(self.v.amax())
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.w, self.v.x, self.v.y, self.v.z]
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.v.iter().all(|c| c.is_finite())
    }
}

/// Hamilton product.
pub fn qmul(q1: &Quaternion, q2: &Quaternion) -> Quaternion {
    Quaternion {
        w: q1.w * q2.w - q1.v.dot(&q2.v),
        v: q2.v * q1.w + q1.v * q2.w + q1.v.cross(&q2.v),
    }
}

pub fn qconj(q: &Quaternion) -> Quaternion {
    q.conj()
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        qmul(&self, &rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion {
            w: self.w * s,
            v: self.v * s,
        }
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w + rhs.w,
            v: self.v + rhs.v,
        }
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        self.w += rhs.w;
        self.v += rhs.v;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            w: self.w - rhs.w,
            v: self.v - rhs.v,
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            w: -self.w,
            v: -self.v,
        }
    }
}

/// A quaternion of norm one (an element of SU(2)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion(Quaternion::ONE);

    /// Normalizes `q`; rejects raw norms below [`NORMALIZE_THRESHOLD`].
    pub fn new(q: Quaternion) -> Result<Self> {
        let n = q.norm();
        if !(n >= NORMALIZE_THRESHOLD) {
            return Err(Error::DegenerateQuaternion { norm: n });
        }
        Ok(Self(q * (1.0 / n)))
    }

    /// Wraps a quaternion already known to be of unit norm.
    pub(crate) fn new_unchecked(q: Quaternion) -> Self {
        Self(q)
    }

    pub fn inner(&self) -> &Quaternion {
        &self.0
    }

    pub fn into_inner(self) -> Quaternion {
        self.0
    }

    /// Inverse, equal to the conjugate.
    pub fn inverse(&self) -> Self {
        Self(self.0.conj())
    }

    /// Signed angle `θ` such that `self ≈ cos θ + (n·e) sin θ`, read off from
    /// the projection of the vector part on the unit axis `n`.
    pub fn angle_about(&self, n: &Vec3) -> f64 {
        self.0.v.dot(n).atan2(self.0.w)
    }
}

impl Mul for UnitQuaternion {
    type Output = UnitQuaternion;
    fn mul(self, rhs: UnitQuaternion) -> UnitQuaternion {
        UnitQuaternion(self.0 * rhs.0)
    }
}

impl Mul<Quaternion> for UnitQuaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        self.0 * rhs
    }
}

impl From<UnitQuaternion> for Quaternion {
    fn from(u: UnitQuaternion) -> Quaternion {
        u.0
    }
}

/// A pure unit quaternion `n·e`; squares to `-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImaginaryUnit {
    axis: Vec3,
}

impl ImaginaryUnit {
    pub fn new(axis: Vec3) -> Result<Self> {
        let n = axis.norm();
        if !(n >= NORMALIZE_THRESHOLD) {
            return Err(Error::DegenerateQuaternion { norm: n });
        }
        Ok(Self { axis: axis / n })
    }

    /// `e_i` for `i` in `1..=3`.
    pub fn basis(i: usize) -> Self {
        Self {
            axis: Quaternion::basis(i).v,
        }
    }

    pub fn axis(&self) -> &Vec3 {
        &self.axis
    }

    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::pure(self.axis)
    }
}

/// `exp(n θ) = cos θ + n sin θ`.
pub fn qexp_pure(n: &ImaginaryUnit, theta: f64) -> UnitQuaternion {
    let (s, c) = theta.sin_cos();
    UnitQuaternion(Quaternion::from_parts(c, n.axis * s))
}

/// The radial imaginary unit `x·e / ‖x‖`.
pub fn jdir(x: &Vec3, r_min: f64) -> Result<ImaginaryUnit> {
    let n = x.norm();
    if !(n > r_min) {
        return Err(Error::SingularPoint { norm: n, r_min });
    }
    Ok(ImaginaryUnit { axis: x / n })
}

/// Conjugation `s (v·e) s*`, a right-handed rotation by twice the angle of `s`.
pub fn rotate_vector(s: &UnitQuaternion, v: &Vec3) -> Vec3 {
    (s.0 * Quaternion::pure(*v) * s.0.conj()).v
}

pub type Mat2c = Matrix2<Complex<f64>>;

/// The 2×2 complex matrix of `q` under `e0 = σ0`, `e_k = -iσ_k`.
pub fn pauli_matrix(q: &Quaternion) -> Mat2c {
    let c = Complex::new;
    // q0 σ0 - i (q1 σ1 + q2 σ2 + q3 σ3)
    Matrix2::new(
        c(q.w, -q.v.z),
        c(-q.v.y, -q.v.x),
        c(q.v.y, -q.v.x),
        c(q.w, q.v.z),
    )
}

fn pauli_sigma(k: usize) -> Mat2c {
    let z = Complex::new(0.0, 0.0);
    let one = Complex::new(1.0, 0.0);
    let i = Complex::new(0.0, 1.0);
    match k {
        1 => Matrix2::new(z, one, one, z),
        2 => Matrix2::new(z, -i, i, z),
        3 => Matrix2::new(one, z, z, -one),
        _ => panic!("Pauli index {k} out of range"),
    }
}

fn max_entry(m: &Mat2c) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Max-entry deviation between `matrix(q1 q2)` and `matrix(q1) matrix(q2)`.
pub fn pauli_check(q1: &Quaternion, q2: &Quaternion) -> f64 {
    let lhs = pauli_matrix(&(*q1 * *q2));
    let rhs = pauli_matrix(q1) * pauli_matrix(q2);
    max_entry(&(lhs - rhs))
}

/// Hopf projection `s ↦ x` with `x·σ = s⁻¹ σ3 s`, computed in the matrix picture.
pub fn hopf_project(s: &UnitQuaternion) -> Vec3 {
    let m = pauli_matrix(&s.0);
    let m_inv = pauli_matrix(&s.0.conj());
    let x_sigma = m_inv * pauli_sigma(3) * m;
    // x_k = tr(σ_k · x·σ) / 2
    Vec3::from_fn(|k, _| (pauli_sigma(k + 1) * x_sigma).trace().re / 2.0)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    use approx::assert_abs_diff_eq;

    use super::*;

    fn e(i: usize) -> Quaternion {
        Quaternion::basis(i)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(2) * e(3), e(1));
        assert_eq!(e(3) * e(1), e(2));
        assert_eq!(e(1) * e(1), -Quaternion::ONE);
        assert_eq!(e(2) * e(1), -e(3));
        let lhs = (Quaternion::ONE + e(1)) * (Quaternion::ONE - e(1));
        assert_eq!(lhs, Quaternion::scalar(2.0));
    }

    #[test]
    fn conjugation() {
        assert_eq!(e(2).conj(), -e(2));
        assert_eq!(Quaternion::ONE.conj(), Quaternion::ONE);
        let q = Quaternion::new(3.0, 4.0, 0.0, 0.0);
        assert_eq!(q.conj() * q, Quaternion::scalar(25.0));
    }

    #[test]
    fn exponential_of_pure_units() {
        let e3 = ImaginaryUnit::basis(3);
        assert_eq!(*qexp_pure(&e3, 0.0).inner(), Quaternion::ONE);
        assert_abs_diff_eq!(qexp_pure(&e3, FRAC_PI_2).inner().max_abs_diff(&e(3)), 0.0, epsilon = 1e-16);
        let e1 = ImaginaryUnit::basis(1);
        assert_abs_diff_eq!(
            qexp_pure(&e1, PI).inner().max_abs_diff(&-Quaternion::ONE),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn radial_unit() {
        let j = jdir(&Vec3::new(0.0, 0.0, 5.0), 0.1).unwrap();
        assert_eq!(j.as_quaternion(), e(3));
        let j = jdir(&Vec3::new(3.0, 4.0, 0.0), 0.1).unwrap();
        assert_abs_diff_eq!(j.axis().x, 0.6, epsilon = 1e-16);
        assert_abs_diff_eq!(j.axis().y, 0.8, epsilon = 1e-16);
        let sq = j.as_quaternion() * j.as_quaternion();
        assert_abs_diff_eq!(sq.max_abs_diff(&-Quaternion::ONE), 0.0, epsilon = 1e-15);
        assert!(matches!(
            jdir(&Vec3::zeros(), 0.1),
            Err(Error::SingularPoint { .. })
        ));
        assert!(jdir(&Vec3::new(0.05, 0.0, 0.0), 0.1).is_err());
    }

    #[test]
    fn unit_quaternion_rejects_short_inputs() {
        assert!(UnitQuaternion::new(Quaternion::new(1e-9, 0.0, 0.0, 0.0)).is_err());
        let u = UnitQuaternion::new(Quaternion::new(0.0, 3.0, 0.0, 4.0)).unwrap();
        assert_abs_diff_eq!(u.inner().norm(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn pauli_dictionary() {
        assert_eq!(pauli_matrix(&Quaternion::ONE), Mat2c::identity());
        assert_eq!(pauli_check(&Quaternion::ONE, &Quaternion::ONE), 0.0);
        assert_eq!(pauli_check(&e(1), &e(2)), 0.0);
        let minus_i_sigma3 = pauli_sigma(3) * Complex::new(0.0, -1.0);
        assert_eq!(pauli_matrix(&e(3)), minus_i_sigma3);
    }

    #[test]
    fn rotation_side_convention() {
        let s = qexp_pure(&ImaginaryUnit::basis(3), FRAC_PI_4);
        let r = rotate_vector(&s, &Vec3::x());
        assert_abs_diff_eq!((r - Vec3::y()).amax(), 0.0, epsilon = 1e-15);
        let v = Vec3::new(0.3, -1.2, 2.0);
        assert_eq!(rotate_vector(&UnitQuaternion::IDENTITY, &v), v);
    }

    #[test]
    fn hopf_projection_basics() {
        assert_abs_diff_eq!((hopf_project(&UnitQuaternion::IDENTITY) - Vec3::z()).amax(), 0.0);
        for t in [0.3, 1.7, -2.5] {
            let s = qexp_pure(&ImaginaryUnit::basis(3), t);
            assert_abs_diff_eq!((hopf_project(&s) - Vec3::z()).amax(), 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn angle_about_axis() {
        let n = ImaginaryUnit::new(Vec3::new(1.0, 2.0, -2.0)).unwrap();
        let u = qexp_pure(&n, -0.7);
        assert_abs_diff_eq!(u.angle_about(n.axis()), -0.7, epsilon = 1e-15);
    }
}
