//! Frequency-domain building blocks for convolutional networks.
//!
//! Discrete transforms follow the unnormalized-forward convention:
//! `X[k] = Σ x[n]·e^{−2πikn/N}` and the inverse carries `1/N`.
//! Coefficients are stored in standard order (DC first, negative
//! frequencies in the upper half).
//!
//! Modules:
//! - [`dft`]: radix-2 FFT, naive DFT, 2-D transforms, spectral derivatives
//! - [`conv`]: direct and spectral linear convolution, product gradients
//! - [`activations`]: sigmoid, ReLU and step transforms
//! - [`pooling`]: box kernels, spectral truncation, global average pooling
//! - [`loss`]: binary cross-entropy forms
//! - [`laplace`]: real-exponent Laplace transforms
//! - [`quadrature`], [`hypergeometric`], [`finite_diff`]: numerical support

pub mod activations;
pub mod complex;
pub mod conv;
pub mod dft;
pub mod error;
pub mod finite_diff;
pub mod hypergeometric;
pub mod laplace;
pub mod loss;
pub mod pooling;
pub mod quadrature;
pub mod signal;

pub use complex::Complex;
pub use error::{Error, Result};
pub use signal::{ComplexSpectrum1D, ComplexSpectrum2D, RealSignal1D, RealSignal2D};
