//! Special functions on the `N`-point circle.
//!
//! The crate builds the two-dimensional Helmholtz machinery that survives
//! when the rotation group is cut down to `N` discrete directions: the
//! finite Fourier transform on the lattice `θ_m = 2πm/N`, the discrete
//! Bessel functions `B_n^(N)(ρ)` that replace `J_n(ρ)` in polar
//! coordinates, and the discrete angular/radial Mathieu functions that
//! replace `ce_n`, `se_n`, `Ce_n`, `Se_n` in elliptic coordinates.
//! Continuous counterparts are computed from scratch (power series, Miller
//! recurrence, tridiagonal eigenproblems) so that every lattice function
//! can be checked against the function it approximates.
//!
//! All values are `f64`, all constructions are pure, and nothing here holds
//! shared mutable state: evaluating grids from several threads is fine.

pub mod bessel;
pub mod circle;
pub mod mathieu_continuous;
pub mod mathieu_discrete;
pub mod tridiag;

pub use circle::{CircleError, CyclicSignal, DiscreteCircle};
