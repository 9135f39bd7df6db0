//! Wasm bindings for the browser demo: flat `Float64Array`-friendly
//! samplers for the three interactive views (Bessel comparison curves,
//! angular Mathieu comparison, elliptic lattice geometry). The page and
//! its canvas drawing live in `www/`; this crate only produces numbers.

use discrete_special::bessel::{continuous_bessel_j, discrete_bessel};
use discrete_special::mathieu_continuous::{AngularKind, MathieuSolution};
use discrete_special::mathieu_discrete::{DiscreteMathieu, EllipticLattice};
use wasm_bindgen::prelude::*;

/// `[rho, discrete, continuous]` triples over a uniform grid.
///
/// Returns an empty vector instead of failing on bad parameters so the
/// page can show "no data" without an exception path.
#[wasm_bindgen]
pub fn bessel_comparison(n_points: usize, order: i32, rho_max: f64, samples: usize) -> Vec<f64> {
    if samples < 2 || rho_max <= 0.0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(3 * samples);
    for i in 0..samples {
        let rho = rho_max * i as f64 / (samples - 1) as f64;
        let Ok(b) = discrete_bessel(n_points, order as i64, rho) else {
            return Vec::new();
        };
        out.push(rho);
        out.push(b);
        out.push(continuous_bessel_j(order as i64, rho));
    }
    out
}

/// `[psi, continued_discrete, continuous]` triples over one period.
#[wasm_bindgen]
pub fn mathieu_angular_comparison(
    n_points: usize,
    kind_is_ce: bool,
    order: usize,
    q: f64,
    samples: usize,
) -> Vec<f64> {
    if samples < 2 {
        return Vec::new();
    }
    let kind = if kind_is_ce {
        AngularKind::Ce
    } else {
        AngularKind::Se
    };
    let Ok(d) = DiscreteMathieu::with_max_tail(kind, order, q, n_points, 1.0) else {
        return Vec::new();
    };
    let continuous = match (kind, order) {
        (AngularKind::Se, 0) => None,
        _ => MathieuSolution::solve_order(kind, order, q).ok(),
    };
    let mut out = Vec::with_capacity(3 * samples);
    for i in 0..samples {
        let psi = std::f64::consts::TAU * i as f64 / (samples - 1) as f64;
        out.push(psi);
        out.push(d.continued(psi));
        out.push(continuous.as_ref().map_or(0.0, |sol| match kind {
            AngularKind::Ce => sol.ce(psi),
            AngularKind::Se => sol.se(psi),
        }));
    }
    out
}

/// Lattice values `[psi_m, sample]` pairs (the circles of the comparison
/// plot).
#[wasm_bindgen]
pub fn mathieu_lattice_samples(
    n_points: usize,
    kind_is_ce: bool,
    order: usize,
    q: f64,
) -> Vec<f64> {
    let kind = if kind_is_ce {
        AngularKind::Ce
    } else {
        AngularKind::Se
    };
    let Ok(d) = DiscreteMathieu::with_max_tail(kind, order, q, n_points, 1.0) else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(2 * n_points);
    for m in 0..n_points {
        out.push(d.circle().angle(m as i64));
        out.push(d.sample(m as i64));
    }
    out
}

/// `[varrho, m, x, y]` rows of the elliptic lattice for uniform radial
/// values `varrho_step, 2·varrho_step, …` up to `varrho_max`, plus the
/// `varrho = 0` focal segment.
#[wasm_bindgen]
pub fn elliptic_lattice_points(n_points: usize, varrho_max: f64, rings: usize) -> Vec<f64> {
    if n_points == 0 || rings == 0 || varrho_max <= 0.0 {
        return Vec::new();
    }
    let varrhos: Vec<f64> = (0..=rings)
        .map(|i| varrho_max * i as f64 / rings as f64)
        .collect();
    let lattice = EllipticLattice::new(n_points, varrhos);
    let mut out = Vec::new();
    for p in lattice.points() {
        out.push(p.varrho);
        out.push(p.m as f64);
        out.push(p.x);
        out.push(p.y);
    }
    out
}
