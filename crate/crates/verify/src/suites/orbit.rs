use std::f64::consts::PI;

use rand::Rng;

use monopole_core::ej::levi_civita;
use monopole_core::orbit::{
    casimir_scales, casimirs, chart_to_point, coad_apply, coad_q_action_check, coad_word,
    inverse_bivector_residual, monopole_duality_check, pauli_lubanski, point_to_chart,
    poisson_bivector, symplectic_matrix, symplectic_matrix_as_printed, transform_four_vector,
    CoadjointPoint, GroupFactor, Numeric, Observable, OrbitChartPoint, StructureConstants, BASIS,
    DIM, ROUNDING_TOL,
};
use monopole_core::sampling::{random_unit_vector, SampleDomain};

use super::{scaled, TOL_BRACKET, TOL_ORBIT};
use crate::config::Suite;
use crate::report::Tally;
use crate::runner::{Check, Ctx, Outcome};

/// Longest word used for invariance checks.
const MAX_WORD: usize = 5;

pub fn checks() -> Vec<Check> {
    let c = |name, run| Check {
        name,
        suite: Suite::Orbit,
        run,
    };
    vec![
        c("orbit.casimir.invariance", casimir_invariance),
        c("orbit.pauli_lubanski.orthogonality", pl_orthogonality),
        c("orbit.pauli_lubanski.covariance", pl_covariance),
        c("orbit.structure.rounding", structure_rounding),
        c("orbit.structure.antisymmetry", structure_antisymmetry),
        c("orbit.structure.jacobi", structure_jacobi),
        c("orbit.structure.translations_commute", structure_translations),
        c("orbit.structure.regeneration", structure_regeneration),
        c("orbit.chart.round_trip_chart", round_trip_chart),
        c("orbit.chart.round_trip_point", round_trip_point),
        c("orbit.chart.casimirs_vanish", chart_casimirs),
        c("orbit.chart.helicity_recovery", helicity_recovery),
        c("orbit.bracket.p_q", bracket_p_q),
        c("orbit.bracket.q_q", bracket_q_q),
        c("orbit.bracket.p_p", bracket_p_p),
        c("orbit.bracket.antisymmetry", bracket_antisymmetry),
        c("orbit.bracket.leibniz", bracket_leibniz),
        c("orbit.symplectic.inverse_is_bivector", inverse_is_bivector),
        c("orbit.symplectic.printed_form_discrepancy", printed_form_discrepancy),
        c("orbit.symplectic.liouville", liouville),
        c("orbit.q_action.time_translation", |ctx| q_action(ctx, "orbit.q_action.time_translation", 0)),
        c("orbit.q_action.space_translation", |ctx| q_action(ctx, "orbit.q_action.space_translation", 1)),
        c("orbit.q_action.rotation", |ctx| q_action(ctx, "orbit.q_action.rotation", 2)),
        c("orbit.duality.monopole", duality),
        c("orbit.duality.homogeneity", duality_homogeneity),
        c("orbit.rotation.period_2pi", rotation_period),
        c("orbit.word.inverse_pairs", inverse_pairs),
        c("orbit.word.rotation_fusion", rotation_fusion),
    ]
}

fn point<R: Rng>(d: &SampleDomain, r: &mut R) -> CoadjointPoint {
    let b = d.half_width;
    CoadjointPoint::new(r.random_range(-b..=b), d.vector(r), d.vector(r), d.vector(r))
}

/// Chart point with `‖p‖ > r_min` and helicity in `[-2, 2]`.
fn chart<R: Rng>(d: &SampleDomain, r: &mut R) -> OrbitChartPoint {
    OrbitChartPoint::new(d.vector(r), d.point(r), r.random_range(-2.0..=2.0))
}

/// One factor of each kind with equal probability; rapidities in `[0, 1]`.
fn factor<R: Rng>(d: &SampleDomain, r: &mut R) -> GroupFactor {
    factor_of_kind(r.random_range(0..4), d, r)
}

fn factor_of_kind<R: Rng>(kind: usize, d: &SampleDomain, r: &mut R) -> GroupFactor {
    let b = d.half_width;
    match kind {
        0 => GroupFactor::time_translation(r.random_range(-b..=b)),
        1 => GroupFactor::space_translation(d.vector(r)),
        2 => GroupFactor::rotation(r.random_range(0.0..4.0 * PI), random_unit_vector(r))
            .expect("unit axis"),
        _ => GroupFactor::boost(r.random_range(0.0..=1.0), random_unit_vector(r))
            .expect("unit axis"),
    }
}

/// Runs `f` against the derived structure constants, failing the check if
/// the derivation failed.
fn with_table(ctx: &Ctx, f: impl FnOnce(&StructureConstants) -> Outcome) -> Outcome {
    match ctx.table() {
        Ok((table, _)) => f(table),
        Err(e) => Outcome::new(Tally::error(f64::INFINITY), 0.0, format!("derivation failed: {e}")),
    }
}

fn casimir_invariance(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.casimir.invariance", ctx.samples(), |d, r| {
        let y = point(d, r);
        let len = r.random_range(1..=MAX_WORD);
        let word: Vec<_> = (0..len).map(|_| factor(d, r)).collect();
        let z = coad_word(&word, &y);
        let ((a1, a2), (b1, b2)) = (casimirs(&y), casimirs(&z));
        let ((s1, s2), (t1, t2)) = (casimir_scales(&y), casimir_scales(&z));
        Some(((a1 - b1).abs() / s1.max(t1)).max((a2 - b2).abs() / s2.max(t2)))
    });
    Outcome::new(
        t,
        TOL_ORBIT,
        format!(
            "words of 1 to {MAX_WORD} factors; error relative to the sum of squared terms; \
             C1 = -h² + p·p, C2 = -w0² + w·w"
        ),
    )
}

fn pl_orthogonality(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.pauli_lubanski.orthogonality", ctx.samples(), |d, r| {
        let y = point(d, r);
        let (w0, w) = pauli_lubanski(&y);
        let err = (-y.h * w0 + y.p.dot(&w)).abs();
        Some(scaled(err, y.h.abs() * w0.abs() + y.p.norm() * w.norm()))
    });
    Outcome::new(t, ctx.config.tol_exact, "-h w0 + p·w = 0, signature (-,+,+,+)")
}

fn pl_covariance(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.pauli_lubanski.covariance", ctx.samples(), |d, r| {
        let (y, g) = (point(d, r), factor(d, r));
        let (w0, w) = pauli_lubanski(&y);
        let (m0, m) = pauli_lubanski(&coad_apply(&g, &y));
        let (e0, e) = transform_four_vector(&g, w0, &w);
        Some(scaled((m0 - e0).abs().max((m - e).amax()), e0.abs().max(e.amax())))
    });
    Outcome::new(t, TOL_ORBIT, "(w0, w) transforms by the (h, p) rows of the action table")
}

fn structure_rounding(ctx: &Ctx) -> Outcome {
    match ctx.table() {
        Ok((_, der)) => Outcome::new(
            Tally::error(der.rounding_residual),
            ROUNDING_TOL,
            "raw finite-difference constants against their nearest half-integers",
        ),
        Err(e) => Outcome::new(Tally::error(f64::INFINITY), ROUNDING_TOL, e.to_string()),
    }
}

fn structure_antisymmetry(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let bracket = |i: usize, j: usize| {
            let c = table.commutator(i, j);
            (0..DIM)
                .filter(|&k| c[k] != 0.0)
                .map(|k| format!("{:+}{}", c[k], BASIS[k]))
                .collect::<String>()
        };
        Outcome::new(
            Tally::error(table.antisymmetry_residual()),
            TOL_ORBIT,
            format!(
                "derived by finite differences of the action table; [J1, J2] = {}, [J1, K2] = {}, \
                 [K1, K2] = {}, [J1, P2] = {}, [K1, H] = {}, [K1, P1] = {}",
                bracket(4, 5),
                bracket(4, 8),
                bracket(7, 8),
                bracket(4, 2),
                bracket(7, 0),
                bracket(7, 1),
            ),
        )
    })
}

fn structure_jacobi(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        Outcome::new(Tally::error(table.jacobi_residual()), TOL_ORBIT, "all basis triples")
    })
}

fn structure_translations(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let err = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .flat_map(|(i, j)| table.commutator(i, j))
            .fold(0.0, |m: f64, v| m.max(v.abs()));
        Outcome::new(Tally::error(err), ctx.config.tol_exact, "H and P commute among themselves")
    })
}

fn structure_regeneration(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let t = ctx.sample("orbit.structure.regeneration", ctx.samples(), |d, r| {
            Some(table.regeneration_residual(&point(d, r)))
        });
        Outcome::new(t, TOL_BRACKET, "ad* from the table against central differences with step 1e-5")
    })
}

fn round_trip_chart(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.chart.round_trip_chart", ctx.samples(), |d, r| {
        let c = chart(d, r);
        let back = point_to_chart(&chart_to_point(&c).ok()?).ok()?;
        Some(scaled(back.max_abs_diff(&c), c.q.amax()))
    });
    Outcome::new(t, ctx.config.tol_exact, "point_to_chart ∘ chart_to_point")
}

fn round_trip_point(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.chart.round_trip_point", ctx.samples(), |d, r| {
        let y = chart_to_point(&chart(d, r)).ok()?;
        let back = chart_to_point(&point_to_chart(&y).ok()?).ok()?;
        Some(scaled(back.max_abs_diff(&y), y.max_abs()))
    });
    Outcome::new(t, ctx.config.tol_exact, "chart_to_point ∘ point_to_chart on orbit points")
}

fn chart_casimirs(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.chart.casimirs_vanish", ctx.samples(), |d, r| {
        let y = chart_to_point(&chart(d, r)).ok()?;
        let ((c1, c2), (s1, _)) = (casimirs(&y), casimir_scales(&y));
        // w = p×k + h j cancels down to λp, so scale by the terms before cancellation
        let terms = (y.j.norm() * y.p.norm()).powi(2)
            + (y.p.norm() * y.k.norm() + y.h.abs() * y.j.norm()).powi(2);
        Some((c1.abs() / s1).max(c2.abs() / terms))
    });
    Outcome::new(
        t,
        ctx.config.tol_exact,
        "C1 = C2 = 0, relative to the squared magnitudes of the terms entering each",
    )
}

fn helicity_recovery(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.chart.helicity_recovery", ctx.samples(), |d, r| {
        let c = chart(d, r);
        let y = chart_to_point(&c).ok()?;
        let (w0, w) = pauli_lubanski(&y);
        let lambda = y.j.dot(&y.p) / y.p.norm();
        let aligned = (w0 - c.lambda * y.h).abs().max((w - y.p * c.lambda).amax());
        Some(scaled((lambda - c.lambda).abs().max(aligned), y.max_abs()))
    });
    Outcome::new(t, ctx.config.tol_exact, "j·p/‖p‖ = λ and w = λ (h, p)")
}

fn chart_bracket<F>(ctx: &Ctx, id: &str, notes: &str, f: F) -> Outcome
where
    F: Fn(&StructureConstants, &OrbitChartPoint, &CoadjointPoint) -> f64 + Sync,
{
    with_table(ctx, |table| {
        let t = ctx.sample(id, ctx.samples(), |d, r| {
            let c = chart(d, r);
            let y = chart_to_point(&c).ok()?;
            Some(f(table, &c, &y))
        });
        Outcome::new(t, TOL_BRACKET, notes)
    })
}

fn bracket_p_q(ctx: &Ctx) -> Outcome {
    chart_bracket(ctx, "orbit.bracket.p_q", "{pⁱ, qʲ} = -δ_ij with qʲ = kʲ/h", |table, _, y| {
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| {
                let b = table.bracket(&Observable::Momentum(i), &Observable::Position(j), y);
                (b + if i == j { 1.0 } else { 0.0 }).abs()
            })
            .fold(0.0, f64::max)
    })
}

fn bracket_q_q(ctx: &Ctx) -> Outcome {
    chart_bracket(
        ctx,
        "orbit.bracket.q_q",
        "{qⁱ, qʲ} = -λ ε_ijk p^k/‖p‖³",
        |table, c, y| {
            let s = c.p / c.p.norm().powi(3);
            (0..3)
                .flat_map(|i| (0..3).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let b = table.bracket(&Observable::Position(i), &Observable::Position(j), y);
                    let expected: f64 = -c.lambda * (0..3).map(|k| levi_civita(i, j, k) * s[k]).sum::<f64>();
                    scaled((b - expected).abs(), expected.abs())
                })
                .fold(0.0, f64::max)
        },
    )
}

fn bracket_p_p(ctx: &Ctx) -> Outcome {
    chart_bracket(ctx, "orbit.bracket.p_p", "{pⁱ, pʲ} = 0", |table, _, y| {
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| table.bracket(&Observable::Momentum(i), &Observable::Momentum(j), y).abs())
            .fold(0.0, f64::max)
    })
}

/// Random linear function `a·y` on the dual, with its coefficients.
fn linear<R: Rng>(r: &mut R) -> [f64; DIM] {
    std::array::from_fn(|_| r.random_range(-1.0..=1.0))
}

fn dot(a: &[f64; DIM], y: &CoadjointPoint) -> f64 {
    a.iter().zip(y.to_array()).map(|(a, b)| a * b).sum()
}

fn bracket_antisymmetry(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let t = ctx.sample("orbit.bracket.antisymmetry", ctx.samples(), |d, r| {
            let y = point(d, r);
            let (a, b) = (linear(r), linear(r));
            let f = Numeric(|z: &CoadjointPoint| dot(&a, z).sin() + dot(&b, z).powi(2));
            let g = Numeric(|z: &CoadjointPoint| (0.3 * dot(&b, z)).cos() * dot(&a, z));
            let fg = table.bracket(&f, &g, &y);
            let gf = table.bracket(&g, &f, &y);
            let ff = table.bracket(&f, &f, &y);
            Some(scaled((fg + gf).abs().max(ff.abs()), fg.abs()))
        });
        Outcome::new(t, TOL_BRACKET, "{f, g} = -{g, f} and {f, f} = 0 with numerical gradients")
    })
}

fn bracket_leibniz(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let t = ctx.sample("orbit.bracket.leibniz", ctx.samples(), |d, r| {
            let y = point(d, r);
            let (a, b, c) = (linear(r), linear(r), linear(r));
            let f = Numeric(|z: &CoadjointPoint| dot(&a, z));
            let g = Numeric(|z: &CoadjointPoint| dot(&b, z));
            let h = Numeric(|z: &CoadjointPoint| dot(&c, z));
            let product = Numeric(|z: &CoadjointPoint| dot(&a, z) * dot(&b, z));
            let lhs = table.bracket(&product, &h, &y);
            let rhs = dot(&a, &y) * table.bracket(&g, &h, &y) + dot(&b, &y) * table.bracket(&f, &h, &y);
            Some(scaled((lhs - rhs).abs(), lhs.abs()))
        });
        Outcome::new(t, TOL_BRACKET, "{fg, h} = f{g, h} + g{f, h} for linear f, g, h")
    })
}

fn inverse_is_bivector(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let t = ctx.sample("orbit.symplectic.inverse_is_bivector", ctx.samples(), |d, r| {
            let c = chart(d, r);
            let omega = symplectic_matrix(&c).ok()?;
            let pi = poisson_bivector(table, &c).ok()?;
            let err = inverse_bivector_residual(&omega, &pi)?;
            Some(scaled(err, pi.amax()))
        });
        Outcome::new(
            t,
            TOL_BRACKET,
            "Ω = [[0, I], [-I, λB]] with B_ab = ε_abk p^k/‖p‖³, i.e. \
             ω = dqⁱ∧dpⁱ + ½ λ ε_ijk p^k dpⁱ∧dpʲ/‖p‖³; Π = -Ω⁻¹, sign fixed by {p, q} = -δ",
        )
    })
}

fn printed_form_discrepancy(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let t = ctx.sample("orbit.symplectic.printed_form_discrepancy", ctx.samples(), |d, r| {
            let c = chart(d, r);
            let omega = symplectic_matrix_as_printed(&c).ok()?;
            let pi = poisson_bivector(table, &c).ok()?;
            let measured = inverse_bivector_residual(&omega, &pi)?;
            let b_max = (c.p / c.p.norm().powi(3)).amax();
            let predicted = 3.0 * c.lambda.abs() * b_max;
            Some(scaled((measured - predicted).abs(), predicted))
        });
        Outcome::new(
            t,
            TOL_BRACKET,
            "ω = dqⁱ∧dpⁱ - λ ε_ijk p^k dpⁱ∧dpʲ/‖p‖³ read literally has Ω_pp = -2λB, whose inverse \
             misses the Lie–Poisson q–q block by exactly 3|λ| max|B|; this check confirms that size",
        )
    })
}

fn liouville(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.symplectic.liouville", ctx.samples(), |d, r| {
        let c = chart(d, r);
        let flat = OrbitChartPoint { lambda: 0.0, ..c };
        let det = symplectic_matrix(&c).ok()?.determinant();
        let det0 = symplectic_matrix(&flat).ok()?.determinant();
        if !(det > 0.0 && det0 > 0.0) {
            return Some(f64::INFINITY);
        }
        Some((det.sqrt() - det0.sqrt()).abs())
    });
    Outcome::new(t, TOL_ORBIT, "det Ω > 0 and det(Ω)^½ = 1 for every λ: d³q d³p is a Liouville measure")
}

fn q_action(ctx: &Ctx, id: &str, kind: usize) -> Outcome {
    let t = ctx.sample(id, ctx.samples(), |d, r| {
        let c = chart(d, r);
        let g = factor_of_kind(kind, d, r);
        let err = coad_q_action_check(&g, &c).ok()??;
        Some(scaled(err, c.q.amax()))
    });
    let note = match kind {
        0 => "q → q - a⁰ p/‖p‖ under exp(-a⁰H)",
        1 => "q → q + a under exp(a·P)",
        _ => "q → R q under exp(α m·J)",
    };
    Outcome::new(t, TOL_ORBIT, note)
}

fn duality(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let (found, skipped) = ctx.collect("orbit.duality.monopole", ctx.samples(), |d, r| {
            let c = OrbitChartPoint { lambda: 0.5, ..chart(d, r) };
            let dual = monopole_duality_check(table, &c).ok()?;
            let scale = 1.0 / c.p.norm_squared();
            Some((scaled(dual.residual_cubic, scale), dual.residual_as_printed))
        });
        let tally = found
            .iter()
            .map(|(e, _)| Tally::error(*e))
            .fold(Tally { skipped, ..Tally::default() }, Tally::merge);
        let printed = found.iter().map(|(_, p)| *p).fold(0.0, f64::max);
        Outcome::new(
            tally,
            TOL_ORBIT,
            format!(
                "orbit p ↔ monopole x, orbit q ↔ monopole p, λ = ½; \
                 {{p_i, p_j}} = -½ ε_ijk x^k/‖x‖³ matches, while the exponent 2 written for the \
                 monopole bracket deviates by up to {printed:.3e}"
            ),
        )
    })
}

fn duality_homogeneity(ctx: &Ctx) -> Outcome {
    with_table(ctx, |table| {
        let t = ctx.sample("orbit.duality.homogeneity", ctx.samples(), |d, r| {
            let c = chart(d, r);
            let doubled = OrbitChartPoint { p: c.p * 2.0, ..c };
            let (y, z) = (chart_to_point(&c).ok()?, chart_to_point(&doubled).ok()?);
            let mut err = 0.0_f64;
            let mut size = 0.0_f64;
            for (i, j) in [(0, 1), (1, 2), (2, 0)] {
                let (qi, qj) = (Observable::Position(i), Observable::Position(j));
                let a = table.bracket(&qi, &qj, &y);
                err = err.max((0.25 * a - table.bracket(&qi, &qj, &z)).abs());
                size = size.max(a.abs());
            }
            Some(scaled(err, size))
        });
        Outcome::new(t, TOL_ORBIT, "p → 2p scales the q–q block by ¼")
    })
}

fn rotation_period(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.rotation.period_2pi", ctx.samples(), |d, r| {
        let y = point(d, r);
        let axis = random_unit_vector(r);
        let alpha = r.random_range(0.0..2.0 * PI);
        let a = coad_apply(&GroupFactor::rotation(alpha, axis).ok()?, &y);
        let b = coad_apply(&GroupFactor::rotation(alpha + 2.0 * PI, axis).ok()?, &y);
        Some(scaled(a.max_abs_diff(&b), y.max_abs()))
    });
    Outcome::new(
        t,
        ctx.config.tol_exact,
        "α and α + 2π act alike although they differ on the double cover",
    )
}

fn inverse_pairs(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.word.inverse_pairs", ctx.samples(), |d, r| {
        let (y, g) = (point(d, r), factor(d, r));
        let z = coad_word(&[g, g.inverse()], &y);
        Some(scaled(z.max_abs_diff(&y), y.max_abs()))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}

fn rotation_fusion(ctx: &Ctx) -> Outcome {
    let t = ctx.sample("orbit.word.rotation_fusion", ctx.samples(), |d, r| {
        let y = point(d, r);
        let axis = random_unit_vector(r);
        let (a, b) = (r.random_range(0.0..2.0 * PI), r.random_range(0.0..2.0 * PI));
        let split = coad_word(
            &[
                GroupFactor::rotation(a, axis).ok()?,
                GroupFactor::rotation(b, axis).ok()?,
            ],
            &y,
        );
        let fused = coad_apply(&GroupFactor::rotation(a + b, axis).ok()?, &y);
        Some(scaled(split.max_abs_diff(&fused), y.max_abs()))
    });
    Outcome::new(t, ctx.config.tol_exact, "")
}
