//! Minimal resolutions, Ext, stable Hom, transposes, duals and
//! periodicity-based certificates.

mod certificate;
mod duality;
mod ext;
mod resolution;

pub use certificate::{
    ext_vanishing_certificate, is_gorenstein_projective, is_self_orthogonal, Certificate,
    ExtContext, GpCertificate, GpVerdict, Verdict, DEFAULT_BOUND,
};
pub use duality::{dual_star, dual_star_morphism, is_self_injective, transpose, vs_dual};
pub use ext::{ext_dim, ext_dims, stable_hom_dim, ExtCalculator};
pub use resolution::{is_projective, projective_cover, syzygy, ProjectiveCover, Resolution};
