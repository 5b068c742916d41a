//! Spectral data of Sp(2n) covers: even characteristic polynomials, the
//! discriminant factorization, cover numerology and local degenerations.

mod data;
pub mod factorization;
pub mod families;
mod hamiltonian;
pub mod numerics;

pub use data::{build_p, symbol, SpectralData, HALF_VAR, SPECTRAL_VAR};
pub use factorization::{
    delta_at_top_zero, factorize_discriminant, factorize_symbolic, half_discriminant,
    scaling_action, Factorization, ScalingReport,
};
pub use families::{stratum_multiplicity, Detector, LocalFamily, Multiplicity};
pub use hamiltonian::{char_poly_hamiltonian, HamiltonianMatrix};
pub use numerics::{
    cover_numerics, dims_and_degrees, generic_profile, riemann_hurwitz, CoverNumerics, DimReport,
    Genus, GroupType,
};
