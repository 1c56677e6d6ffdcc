//! Exponential quaternionic Weyl system `T(α) = exp(J[a·P + a'·X])`, `α = (a, a')`.
//!
//! Every `T(α)` acts as `(T(α)ψ)(x) = Φ_α(x) ψ(x - a)` for a unit-quaternion
//! phase `Φ_α`. Two closed forms are available, ordering the translation and
//! the position factor either way:
//!
//! ```text
//! PX:  Φ(x) = w(a; x-a) exp(j(x-a) a'·(x-a)) exp( s/2 j(x-a) a·a')
//! XP:  Φ(x) = exp(j(x) a'·x) w(a; x-a)      exp(-s/2 j(x-a) a·a')
//! ```
//!
//! The correction sign `s` is a convention. The exact exponential is obtained
//! independently by integrating the generator along the characteristic
//! `x - a + t a`, which selects [`WeylConvention::FROZEN`]. The forms as
//! usually printed ([`WeylConvention::PRINTED`]) use the opposite sign and
//! disagree with each other by the inner factor `exp(2 j(x-a) a·a')`.

use std::ops::{Add, Neg};

use crate::ej::{connection_raw, radial_unit_raw, Kinematics};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quat::{qexp_pure, Quaternion, UnitQuaternion, Vec3};
use crate::sampling::{random_probe, SampleDomain};

/// Wavefunction values below this norm are not divided by.
pub const MIN_AMPLITUDE: f64 = 1e-8;

/// Steps of the characteristic integrator used by the exact-exponential oracle.
pub const ORACLE_STEPS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylLabel {
    /// Translation part.
    pub a: Vec3,
    /// Position-phase part.
    pub a_prime: Vec3,
}

impl WeylLabel {
    pub fn new(a: Vec3, a_prime: Vec3) -> Self {
        Self { a, a_prime }
    }

    pub fn translation(a: Vec3) -> Self {
        Self::new(a, Vec3::zeros())
    }

    pub fn position(a_prime: Vec3) -> Self {
        Self::new(Vec3::zeros(), a_prime)
    }

    pub fn zero() -> Self {
        Self::new(Vec3::zeros(), Vec3::zeros())
    }

    /// `a·b' - b·a'`.
    pub fn symplectic(&self, other: &WeylLabel) -> f64 {
        self.a.dot(&other.a_prime) - other.a.dot(&self.a_prime)
    }

    pub fn is_finite(&self) -> bool {
        self.a.iter().chain(self.a_prime.iter()).all(|c| c.is_finite())
    }
}

impl Add for WeylLabel {
    type Output = WeylLabel;
    fn add(self, rhs: WeylLabel) -> WeylLabel {
        WeylLabel::new(self.a + rhs.a, self.a_prime + rhs.a_prime)
    }
}

impl Neg for WeylLabel {
    type Output = WeylLabel;
    fn neg(self) -> WeylLabel {
        WeylLabel::new(-self.a, -self.a_prime)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ordering {
    /// Translation factor leftmost.
    PX,
    /// Position factor leftmost.
    XP,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylConvention {
    /// `s` in the closed forms above.
    pub correction_sign: f64,
    /// `σ` in `T(α)T(β) = T(α+β) M(a,b) exp(σ/2 J (a·b' - b·a'))`.
    pub symplectic_sign: f64,
}

impl WeylConvention {
    /// Signs as the closed forms and the composition law are usually written.
    pub const PRINTED: WeylConvention = WeylConvention {
        correction_sign: -1.0,
        symplectic_sign: 1.0,
    };

    /// Signs selected by the characteristic-ODE oracle.
    pub const FROZEN: WeylConvention = WeylConvention {
        correction_sign: 1.0,
        symplectic_sign: -1.0,
    };
}

fn exp_j(x: &Vec3, theta: f64, kin: &Kinematics) -> Result<UnitQuaternion> {
    Ok(qexp_pure(&kin.jdir(x)?, theta))
}

/// Phase `Φ_α(x)` of the closed form for `ordering` with correction sign `s`.
pub fn closed_form_phase(
    kin: &Kinematics,
    label: &WeylLabel,
    ordering: Ordering,
    correction_sign: f64,
    x: &Vec3,
) -> Result<UnitQuaternion> {
    let (a, ap) = (&label.a, &label.a_prime);
    let y = x - a;
    let w = kin.cocycle_w(a, &y)?;
    let half = 0.5 * correction_sign * a.dot(ap);
    Ok(match ordering {
        Ordering::PX => w * exp_j(&y, ap.dot(&y), kin)? * exp_j(&y, half, kin)?,
        Ordering::XP => exp_j(x, ap.dot(x), kin)? * w * exp_j(&y, -half, kin)?,
    })
}

/// `(T(α)ψ)(x)` from the closed form as printed (PX with `-½`, XP with `+½`).
#[allow(non_snake_case)]
pub fn weyl_T<F: Field + ?Sized>(
    kin: &Kinematics,
    label: &WeylLabel,
    ordering: Ordering,
    psi: &F,
    x: &Vec3,
) -> Result<Quaternion> {
    let phase = closed_form_phase(kin, label, ordering, WeylConvention::PRINTED.correction_sign, x)?;
    Ok(phase * psi.eval(&(x - label.a)))
}

/// Phase of `exp(J[a·P + a'·X])` at `x` by RK4 integration of
/// `Φ' = (-A(a, z) + j(z) a'·z) Φ` along `z(t) = x - a + t a`, `t ∈ [0, 1]`.
///
/// The segment must stay outside the exclusion ball.
pub fn exact_phase(
    kin: &Kinematics,
    label: &WeylLabel,
    x: &Vec3,
    steps: usize,
) -> Result<Quaternion> {
    let (a, ap) = (label.a, label.a_prime);
    let start = x - a;
    let closest = segment_distance_to_origin(&start, x);
    if !(closest > kin.r_min) {
        return Err(Error::SingularPoint {
            norm: closest,
            r_min: kin.r_min,
        });
    }
    let generator = |t: f64| {
        let z = start + a * t;
        radial_unit_raw(&z) * ap.dot(&z) - connection_raw(&a, &z)
    };
    let dt = 1.0 / steps as f64;
    let mut phi = Quaternion::ONE;
    for n in 0..steps {
        let t = n as f64 * dt;
        let k1 = generator(t) * phi;
        let k2 = generator(t + 0.5 * dt) * (phi + k1 * (0.5 * dt));
        let k3 = generator(t + 0.5 * dt) * (phi + k2 * (0.5 * dt));
        let k4 = generator(t + dt) * (phi + k3 * dt);
        phi += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    }
    Ok(phi)
}

/// Distance from the origin to the segment `[p, q]`.
pub fn segment_distance_to_origin(p: &Vec3, q: &Vec3) -> f64 {
    let d = q - p;
    let len2 = d.norm_squared();
    if len2 == 0.0 {
        return p.norm();
    }
    let t = (-p.dot(&d) / len2).clamp(0.0, 1.0);
    (p + d * t).norm()
}

/// The Weyl operators under a fixed sign convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylSystem {
    pub kin: Kinematics,
    pub convention: WeylConvention,
}

impl WeylSystem {
    pub fn new(kin: Kinematics, convention: WeylConvention) -> Self {
        Self { kin, convention }
    }

    pub fn phase(&self, label: &WeylLabel, x: &Vec3) -> Result<UnitQuaternion> {
        closed_form_phase(
            &self.kin,
            label,
            Ordering::PX,
            self.convention.correction_sign,
            x,
        )
    }

    /// `(T(α) f)(x)` for an arbitrary field `f`.
    pub fn apply<F: Field + ?Sized>(&self, label: &WeylLabel, f: &F, x: &Vec3) -> Result<Quaternion> {
        Ok(self.phase(label, x)? * f.eval(&(x - label.a)))
    }

    /// The inner defect `D` with `T(α)T(β)ψ = T(α+β)[D ψ]`, evaluated at
    /// `y = x - a - b`. `T(α)T(β)ψ` is composed as operators; `D` is then
    /// isolated by stripping the phase of `T(α+β)` on the left and `ψ(y)` on
    /// the right.
    pub fn compose_defect<F: Field + ?Sized>(
        &self,
        alpha: &WeylLabel,
        beta: &WeylLabel,
        psi: &F,
        x: &Vec3,
    ) -> Result<Quaternion> {
        let y = x - alpha.a - beta.a;
        let value = psi.eval(&y);
        let norm = value.norm();
        if !(norm >= MIN_AMPLITUDE) {
            return Err(Error::NearZeroAmplitude { norm });
        }
        // evaluate T(β)ψ once at the only point T(α) reads it
        let inner_point = x - alpha.a;
        let inner_value = self.apply(beta, psi, &inner_point)?;
        let composed = self.phase(alpha, x)? * inner_value;
        let total = self.phase(&(*alpha + *beta), x)?;
        let inv = value.inverse().ok_or(Error::NearZeroAmplitude { norm })?;
        Ok(total.inverse() * composed * inv)
    }

    /// `m(a, b; y) exp(σ/2 j(y) (a·b' - b·a'))` at `y = x - a - b`.
    pub fn predicted_defect(
        &self,
        alpha: &WeylLabel,
        beta: &WeylLabel,
        x: &Vec3,
    ) -> Result<UnitQuaternion> {
        let y = x - alpha.a - beta.a;
        let m = self.kin.multiplier_m(&alpha.a, &beta.a, &y)?;
        let theta = 0.5 * self.convention.symplectic_sign * alpha.symplectic(beta);
        Ok(m * exp_j(&y, theta, &self.kin)?)
    }
}

/// Outcome of comparing the two closed forms over a sample domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormAgreement {
    /// Largest `|T_PX ψ(x) - T_XP ψ(x)|` (component max).
    pub max_deviation: f64,
    /// Largest `|‖D‖ - 1|` for the inner defect `D = Φ_PX⁻¹ Φ_XP`.
    pub defect_unit_deviation: f64,
    /// Largest deviation of `D` from `exp((1 - s) j(x-a) a·a')`.
    pub defect_prediction_deviation: f64,
    pub used: usize,
    pub skipped: usize,
}

impl FormAgreement {
    /// Whether the two forms agree to `tol` on every admissible sample.
    pub fn agrees(&self, tol: f64) -> bool {
        self.max_deviation <= tol
    }
}

/// Compares the PX and XP closed forms of `T(label)` under `correction_sign`
/// on `domain.count` points. Inadmissible points are skipped; at least 90%
/// must be admissible.
pub fn weyl_form_agreement<F: Field + ?Sized>(
    kin: &Kinematics,
    label: &WeylLabel,
    correction_sign: f64,
    psi: &F,
    domain: &SampleDomain,
) -> Result<FormAgreement> {
    let mut out = FormAgreement {
        max_deviation: 0.0,
        defect_unit_deviation: 0.0,
        defect_prediction_deviation: 0.0,
        used: 0,
        skipped: 0,
    };
    let predicted_angle = (1.0 - correction_sign) * label.a.dot(&label.a_prime);
    for i in 0..domain.count {
        let x = domain.point(&mut domain.rng("weyl.form_agreement", i));
        let px = closed_form_phase(kin, label, Ordering::PX, correction_sign, &x);
        let xp = closed_form_phase(kin, label, Ordering::XP, correction_sign, &x);
        let y = x - label.a;
        let (px, xp, j_y) = match (px, xp, kin.jdir(&y)) {
            (Ok(p), Ok(q), Ok(j)) => (p, q, j),
            _ => {
                out.skipped += 1;
                continue;
            }
        };
        out.used += 1;
        let value = psi.eval(&y);
        let dev = (px * value).max_abs_diff(&(xp * value));
        let defect = px.inverse() * xp;
        let predicted = qexp_pure(&j_y, predicted_angle);
        out.max_deviation = out.max_deviation.max(nan_to_inf(dev));
        out.defect_unit_deviation = out
            .defect_unit_deviation
            .max(nan_to_inf((defect.inner().norm() - 1.0).abs()));
        out.defect_prediction_deviation = out.defect_prediction_deviation.max(nan_to_inf(
            defect.inner().max_abs_diff(predicted.inner()),
        ));
    }
    if (out.skipped as f64) > 0.1 * domain.count as f64 {
        return Err(Error::InsufficientSamples {
            skipped: out.skipped,
            total: domain.count,
        });
    }
    Ok(out)
}

fn nan_to_inf(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// Residuals behind the choice of a [`WeylConvention`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calibration {
    pub convention: WeylConvention,
    /// Largest deviation of the exact exponential from the PX form with `s = +1`.
    pub exact_vs_plus: f64,
    /// Same with `s = -1`.
    pub exact_vs_minus: f64,
    /// Largest mixed-sector defect deviation from the prediction with `σ = +1`.
    pub mixed_vs_plus: f64,
    /// Same with `σ = -1`.
    pub mixed_vs_minus: f64,
    pub samples: usize,
}

/// Label components are drawn from `[-1, 1]³` to keep the oracle cheap and accurate.
fn small_vector<R: rand::Rng>(rng: &mut R) -> Vec3 {
    Vec3::from_fn(|_, _| rng.random_range(-1.0..=1.0))
}

/// Chooses the correction sign by the characteristic-ODE oracle, then the
/// symplectic sign by brute-force composition in the mixed sector
/// (translation × position in both orders).
pub fn calibrate(kin: &Kinematics, seed: u64, samples: usize) -> Calibration {
    let domain = SampleDomain {
        seed,
        count: samples,
        r_min: kin.r_min,
        eps_cone: kin.eps_cone,
        ..SampleDomain::default()
    };
    let mut exact_vs = [0.0_f64; 2];
    for i in 0..samples {
        let mut rng = domain.rng("weyl.calibrate.exponent", i);
        let drawn = domain.draw_admissible(&mut rng, |d, r| {
            let x = d.point(r);
            let label = WeylLabel::new(small_vector(r), small_vector(r));
            let exact = exact_phase(kin, &label, &x, ORACLE_STEPS).ok()?;
            let plus = closed_form_phase(kin, &label, Ordering::PX, 1.0, &x).ok()?;
            let minus = closed_form_phase(kin, &label, Ordering::PX, -1.0, &x).ok()?;
            Some((exact, plus, minus))
        });
        if let Some((exact, plus, minus)) = drawn {
            exact_vs[0] = exact_vs[0].max(exact.max_abs_diff(plus.inner()));
            exact_vs[1] = exact_vs[1].max(exact.max_abs_diff(minus.inner()));
        }
    }
    let correction_sign = if exact_vs[0] <= exact_vs[1] { 1.0 } else { -1.0 };

    let mut mixed_vs = [0.0_f64; 2];
    for i in 0..samples {
        let mut rng = domain.rng("weyl.calibrate.mixed", i);
        let drawn = domain.draw_admissible(&mut rng, |d, r| {
            let x = d.point(r);
            let psi = random_probe(r);
            let (t, p) = (small_vector(r), small_vector(r));
            let mut worst = [0.0_f64; 2];
            for (alpha, beta) in [
                (WeylLabel::translation(t), WeylLabel::position(p)),
                (WeylLabel::position(p), WeylLabel::translation(t)),
            ] {
                for (slot, sigma) in [(0, 1.0), (1, -1.0)] {
                    let system = WeylSystem::new(
                        *kin,
                        WeylConvention {
                            correction_sign,
                            symplectic_sign: sigma,
                        },
                    );
                    let d = system.compose_defect(&alpha, &beta, &psi, &x).ok()?;
                    let pred = system.predicted_defect(&alpha, &beta, &x).ok()?;
                    worst[slot] = worst[slot].max(d.max_abs_diff(pred.inner()));
                }
            }
            Some(worst)
        });
        if let Some(worst) = drawn {
            mixed_vs[0] = mixed_vs[0].max(worst[0]);
            mixed_vs[1] = mixed_vs[1].max(worst[1]);
        }
    }
    let symplectic_sign = if mixed_vs[0] <= mixed_vs[1] { 1.0 } else { -1.0 };

    Calibration {
        convention: WeylConvention {
            correction_sign,
            symplectic_sign,
        },
        exact_vs_plus: exact_vs[0],
        exact_vs_minus: exact_vs[1],
        mixed_vs_plus: mixed_vs[0],
        mixed_vs_minus: mixed_vs[1],
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ProbeFunction;

    fn v(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3::new(x, y, z)
    }

    fn probe() -> ProbeFunction {
        ProbeFunction::new(
            v(-0.2, 0.4, 0.1),
            1.4,
            Quaternion::new(0.8, 0.1, -0.3, 0.4),
            [
                Quaternion::new(0.1, -0.2, 0.3, 0.0),
                Quaternion::new(0.0, 0.5, -0.1, 0.2),
                Quaternion::new(-0.3, 0.0, 0.2, 0.6),
            ],
        )
    }

    #[test]
    fn zero_label_is_identity() {
        let kin = Kinematics::default();
        let psi = probe();
        let x = v(0.7, -0.4, 1.0);
        for ord in [Ordering::PX, Ordering::XP] {
            let t = weyl_T(&kin, &WeylLabel::zero(), ord, &psi, &x).unwrap();
            assert!(t.max_abs_diff(&psi.eval(&x)) < 1e-15);
        }
    }

    #[test]
    fn translation_label_is_u() {
        let kin = Kinematics::default();
        let psi = probe();
        let x = v(0.7, -0.4, 1.0);
        let a = v(0.3, 0.9, -0.2);
        let u = kin.apply_U(&a, &psi, &x).unwrap();
        for ord in [Ordering::PX, Ordering::XP] {
            let t = weyl_T(&kin, &WeylLabel::translation(a), ord, &psi, &x).unwrap();
            assert!(t.max_abs_diff(&u) < 1e-15);
        }
    }

    #[test]
    fn position_label_is_radial_phase() {
        let kin = Kinematics::default();
        let psi = probe();
        let x = v(0.7, -0.4, 1.0);
        let ap = v(-0.5, 0.2, 0.8);
        let expected = qexp_pure(&kin.jdir(&x).unwrap(), ap.dot(&x)) * psi.eval(&x);
        for ord in [Ordering::PX, Ordering::XP] {
            let t = weyl_T(&kin, &WeylLabel::position(ap), ord, &psi, &x).unwrap();
            assert!(t.max_abs_diff(&expected) < 1e-15);
        }
    }

    #[test]
    fn printed_forms_differ_by_the_predicted_factor() {
        let kin = Kinematics::default();
        let psi = probe();
        let domain = SampleDomain {
            count: 200,
            ..SampleDomain::default()
        };
        let label = WeylLabel::new(v(0.4, -0.3, 0.5), v(0.6, 0.2, 0.3));
        let printed = weyl_form_agreement(&kin, &label, -1.0, &psi, &domain).unwrap();
        assert!(!printed.agrees(1e-10));
        assert!(printed.defect_unit_deviation < 1e-10);
        assert!(printed.defect_prediction_deviation < 1e-10);
        let frozen = weyl_form_agreement(&kin, &label, 1.0, &psi, &domain).unwrap();
        assert!(frozen.agrees(1e-10), "{frozen:?}");
    }

    #[test]
    fn exact_exponential_reduces_to_known_sectors() {
        let kin = Kinematics::default();
        let x = v(1.2, 0.5, -0.7);
        let a = v(0.4, -0.2, 0.3);
        let exact = exact_phase(&kin, &WeylLabel::translation(a), &x, ORACLE_STEPS).unwrap();
        let w = kin.cocycle_w(&a, &(x - a)).unwrap();
        assert!(exact.max_abs_diff(w.inner()) < 1e-12);
        let ap = v(0.3, 0.1, -0.6);
        let exact = exact_phase(&kin, &WeylLabel::position(ap), &x, ORACLE_STEPS).unwrap();
        let expected = qexp_pure(&kin.jdir(&x).unwrap(), ap.dot(&x));
        assert!(exact.max_abs_diff(expected.inner()) < 1e-12);
    }

    #[test]
    fn oracle_selects_the_frozen_convention() {
        let kin = Kinematics::default();
        let cal = calibrate(&kin, 7, 40);
        assert_eq!(cal.convention, WeylConvention::FROZEN, "{cal:?}");
        assert!(cal.exact_vs_plus < 1e-10, "{cal:?}");
        assert!(cal.exact_vs_minus > 1e-3);
        assert!(cal.mixed_vs_minus < 1e-10, "{cal:?}");
        assert!(cal.mixed_vs_plus > 1e-3);
    }

    #[test]
    fn defect_rejects_vanishing_amplitude() {
        let system = WeylSystem::new(Kinematics::default(), WeylConvention::FROZEN);
        let zero = |_: &Vec3| Quaternion::ZERO;
        let alpha = WeylLabel::translation(v(0.1, 0.2, 0.0));
        let err = system
            .compose_defect(&alpha, &alpha, &zero, &v(1.0, 1.0, 1.0))
            .unwrap_err();
        assert!(matches!(err, Error::NearZeroAmplitude { .. }));
    }

    #[test]
    fn frozen_composition_law_holds_for_general_labels() {
        let system = WeylSystem::new(Kinematics::default(), WeylConvention::FROZEN);
        let domain = SampleDomain::default();
        let mut worst = 0.0_f64;
        for i in 0..300 {
            let mut rng = domain.rng("test.compose", i);
            let got = domain.draw_admissible(&mut rng, |d, r| {
                let x = d.point(r);
                let psi = random_probe(r);
                let alpha = WeylLabel::new(d.vector(r), d.vector(r));
                let beta = WeylLabel::new(d.vector(r), d.vector(r));
                let dd = system.compose_defect(&alpha, &beta, &psi, &x).ok()?;
                let pred = system.predicted_defect(&alpha, &beta, &x).ok()?;
                Some(dd.max_abs_diff(pred.inner()))
            });
            worst = worst.max(got.unwrap());
        }
        assert!(worst < 1e-10, "{worst}");
    }

    #[test]
    fn translation_sector_defect_is_the_multiplier() {
        let system = WeylSystem::new(Kinematics::default(), WeylConvention::FROZEN);
        let psi = probe();
        let (a, b, x) = (v(0.4, -1.1, 0.3), v(0.9, 0.2, -0.5), v(1.5, 0.3, 0.8));
        let d = system
            .compose_defect(&WeylLabel::translation(a), &WeylLabel::translation(b), &psi, &x)
            .unwrap();
        let m = system.kin.multiplier_m(&a, &b, &(x - a - b)).unwrap();
        assert!(d.max_abs_diff(m.inner()) < 1e-12);
    }

    #[test]
    fn symplectic_form_is_antisymmetric() {
        let al = WeylLabel::new(v(1.0, 2.0, 0.5), v(-0.3, 0.4, 1.1));
        let be = WeylLabel::new(v(0.2, -0.7, 0.9), v(0.6, 0.0, -0.8));
        assert_eq!(al.symplectic(&be), -be.symplectic(&al));
        assert_eq!(al.symplectic(&al), 0.0);
    }
}
