//! Algebraic curvature calculus on ℝⁿ: double forms, Schouten-tensor
//! invariants, Gauss–Bonnet and Lovelock curvatures, model product spaces and
//! curvature-cone geometry.

pub mod cone_geometry;
pub mod double_forms;
pub mod error;
pub mod invariants;
pub mod model_spaces;
pub mod sampling;
pub mod tolerance;
pub mod verification;

pub use double_forms::{
    bianchi_project, g_power, kulkarni_nomizu, CurvatureStructure, DoubleForm, SymmetricForm,
};
pub use error::{Error, Result};
pub use tolerance::Tolerances;
