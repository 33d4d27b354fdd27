//! Numerical harmonic analysis and Lévy process simulation on the
//! hyperbolic plane, realized as the symmetric space SL(2,ℝ)/SO(2).
//!
//! The crate provides five layers, each usable on its own:
//!
//! * [`lie`] — closed-form primitives for SL(2,ℝ): group operations,
//!   exponential/logarithm, Iwasawa and Cartan decompositions, and the
//!   Möbius projection to the upper half-plane.
//! * [`spherical`] — Harish-Chandra spherical functions, spherical
//!   principal-series matrices on truncated circle Fourier modes, and
//!   generalized spherical functions, all by trapezoid quadrature over
//!   the maximal compact subgroup.
//! * [`transform`] — the spherical transform of radial functions and of
//!   empirical measures, calibrated Plancherel inversion, and the
//!   operator-valued Fourier transform with its convolution identity.
//! * [`levy`] — samplers for geodesic flows, compound Poisson processes
//!   with geodesic jumps, and jump-diffusions driven through the group
//!   exponential (Marcus calculus), with reproducible RNG streams.
//! * [`verify`] — quantitative checks tying simulation to analysis:
//!   the Gangolli characteristic exponent, Lévy–Khintchine Monte Carlo
//!   reports, Hunt generator and semigroup checks, and a bi-invariance
//!   discriminator.
//!
//! All Monte Carlo drivers derive one RNG stream per path from a
//! `(seed, stream)` pair and reduce in a fixed order, so results are
//! bit-identical for any worker count (the `parallel` feature only
//! changes how batches are scheduled, never what they compute).

pub mod error;
pub mod levy;
pub mod lie;
pub mod par;
pub mod spherical;
pub mod stats;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
