//! Values computed by `tools/frozen_oracle.py` at 40 digits from the
//! Bogoliubov action on `(a, a†)`, with no Takagi step, and frozen here.

#![allow(clippy::excessive_precision, clippy::approx_constant)]

use squeeze_net::metrology::{self, DEFAULT_STEP};
use squeeze_net::network::build_state;
use squeeze_net::{zwm, Complex64, ComplexMatrix, ProbeConfig, SqueezeMatrix, ZwmConfig};

/// `(g, |T|, θ_T, φ_S, n_S1, n_S2, γ)`
const SIGNALS: [[f64; 7]; 5] = [
    [
        0.2,
        0.5,
        0.3,
        1.1,
        2.0432522492516396e-2,
        6.0910808157531956e-2,
        9.8949690676000955e-2,
    ],
    [
        0.8,
        1.0,
        0.0,
        0.4,
        5.8871245063126887e-1,
        1.3396535368346188,
        1.0,
    ],
    [
        1.5,
        0.25,
        2.0,
        0.0,
        3.0497531093975907,
        6.4920243661564069,
        1.7702447631974245e-1,
    ],
    [
        1.0,
        0.75,
        -0.7,
        2.9,
        5.3674457202193484e-1,
        2.7760412788193515,
        6.6765799587702965e-1,
    ],
    [
        0.05,
        0.9,
        1.2,
        5.5,
        1.5913417431202629e-3,
        3.4162046890517307e-3,
        8.8385442905887035e-1,
    ],
];

/// `(g, |T|, θ, β, F)`
const FISHER: [[f64; 5]; 4] = [
    [0.15, 0.6, 0.9, 0.4, 3.853913410412025e-2],
    [0.5, 1.0, 1.5707963267948966, 1.0, 3.4253584817860161],
    [0.8, 0.3, 0.2, 2.0, 2.2414269420408252],
    [0.4, 0.7, 2.5, 0.0, 3.7962215105875993e-1],
];

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn photocurrents_match_reference() {
    for [g, t, th, phi, n1, n2, _] in SIGNALS {
        let cfg = ZwmConfig::new(g, t, th, phi).unwrap();
        let closed = zwm::photocurrents_closed(&cfg).unwrap();
        let pipe = zwm::photocurrents_pipeline(&cfg).unwrap();
        for (got, want) in [
            (closed.n_s1, n1),
            (closed.n_s2, n2),
            (pipe.n_s1, n1),
            (pipe.n_s2, n2),
        ] {
            assert!(rel(got, want) < 1e-12, "{cfg:?}: {got} vs {want}");
        }
    }
}

#[test]
fn coherence_matches_reference() {
    for [g, t, th, phi, _, _, gamma] in SIGNALS {
        let cfg = ZwmConfig::new(g, t, th, phi).unwrap();
        let got = zwm::coherence_gamma(&cfg).unwrap();
        assert!(!got.degenerate);
        assert!(
            (got.gamma - gamma).abs() < 1e-12,
            "{cfg:?}: {} vs {gamma}",
            got.gamma
        );
    }
}

#[test]
fn network_moments_match_reference() {
    let c = Complex64::new;
    let z = c(0.0, 0.0);
    #[rustfmt::skip]
    let l = ComplexMatrix::from_row_slice(3, 3, &[
        z,              c(0.3, -0.1),   c(0.2, 0.25),
        c(0.3, -0.1),   z,              c(-0.15, 0.05),
        c(0.2, 0.25),   c(-0.15, 0.05), z,
    ]);
    let st = build_state(&SqueezeMatrix::new(l).unwrap()).unwrap();
    let n = [
        2.1837744063886434e-1,
        1.3481889943304119e-1,
        1.3751433624613227e-1,
    ];
    for (j, want) in n.into_iter().enumerate() {
        assert!(rel(st.photon_number(j).unwrap(), want) < 1e-12);
    }
    let corr = st.mode_correlator(0, 1).unwrap();
    assert!((corr - c(-2.0107251324721304e-2, 5.4576825024243539e-2)).norm() < 1e-13);
}

#[test]
fn fisher_information_matches_reference() {
    for [g, t, th, beta, f] in FISHER {
        let pc = ProbeConfig::new(g, t, th, beta).unwrap();
        let got = metrology::qfi_full(&pc, DEFAULT_STEP).unwrap();
        assert!(rel(got, f) < 1e-8, "{pc:?}: {got} vs {f}");
    }
}
