//! Browser bindings for the ZWM closed forms. Every curve comes back as a
//! flat `Float64Array` of rows, `stride` values per row.

use wasm_bindgen::prelude::*;

use squeeze_net::metrology::{self, DEFAULT_STEP};
use squeeze_net::{zwm, ProbeConfig, ZwmConfig};

fn js(e: squeeze_net::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn grid(a: f64, b: f64, points: usize) -> impl Iterator<Item = f64> {
    let n = points.max(2);
    (0..n).map(move |k| a + (b - a) * k as f64 / (n - 1) as f64)
}

/// Rows `(φ_S, n_S1, n_S2)` for `φ_S` over one period.
#[wasm_bindgen]
pub fn photocurrent_curve(
    g: f64,
    tmag: f64,
    theta_t: f64,
    points: usize,
) -> Result<Vec<f64>, JsError> {
    let mut out = Vec::with_capacity(3 * points);
    for phi in grid(0.0, std::f64::consts::TAU, points) {
        let p = zwm::photocurrents_closed(&ZwmConfig::new(g, tmag, theta_t, phi).map_err(js)?)
            .map_err(js)?;
        out.extend([phi, p.n_s1, p.n_s2]);
    }
    Ok(out)
}

/// Rows `(|T|, γ, γ_sequential)` for `|T|` in `[0, 1]`.
#[wasm_bindgen]
pub fn coherence_curve(g: f64, points: usize) -> Result<Vec<f64>, JsError> {
    if !(g.is_finite() && g > 0.0) {
        return Err(JsError::new("gain must be positive"));
    }
    Ok(grid(0.0, 1.0, points)
        .flat_map(|t| {
            [
                t,
                zwm::coherence_gamma_closed(g, t),
                zwm::coherence_gamma_sequential(g, t),
            ]
        })
        .collect())
}

/// Rows `(θ, F_closed, F_exact)` for `θ` over `[0, π]`.
#[wasm_bindgen]
pub fn qfi_curve(g: f64, tmag: f64, beta: f64, points: usize) -> Result<Vec<f64>, JsError> {
    let mut out = Vec::with_capacity(3 * points);
    for theta in grid(0.0, std::f64::consts::PI, points) {
        let pc = ProbeConfig::new(g, tmag, theta, beta).map_err(js)?;
        out.extend([
            theta,
            metrology::qfi_leading(&pc).map_err(js)?,
            metrology::qfi_full(&pc, DEFAULT_STEP).map_err(js)?,
        ]);
    }
    Ok(out)
}
