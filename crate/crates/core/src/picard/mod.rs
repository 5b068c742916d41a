//! Formal divisor-class algebra in the generators `λ`, `φ`, `δ` with
//! coefficients in `ℚ(n, g)`.

mod class;
mod identities;

pub use class::{star_class, PicClass, GENUS_VAR, RANK_VAR};
pub use identities::{
    all_identities, big_n, coarse_coefficients, coarse_identities, coarse_identity_check,
    component_classes, gl_class, gl_identities, gl_theorem_check, grid_check, hodge_lines, kappa_b,
    kappa_check, star_defect, theorem3_check, theorem3_identities, ComponentClasses, GridReport,
    Identity, IdentityCheck, IdentityReport, KappaReport, KappaSpec, GRID_MAX,
};
