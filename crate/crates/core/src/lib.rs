//! Gaussian simulation of multimode squeezed-state networks, the high-gain
//! Zou-Wang-Mandel interferometer, and a truncated-Fock brute-force verifier.

#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod linalg;
pub mod metrology;
pub mod network;
pub mod verify;
pub mod zwm;

pub use error::{Error, Result};
pub use gaussian::GaussianState;
pub use linalg::{Complex64, ComplexMatrix, RealMatrix};
pub use metrology::ProbeConfig;
pub use network::SqueezeMatrix;
pub use zwm::ZwmConfig;
