//! The `GL_2(p)` action on `Z(F_p)`, its orbits, and the catalog of loops
//! of order `p^3`.

pub mod action;
pub mod catalog;
pub mod free_hom;
pub(crate) mod linalg;
pub mod orbits;
pub mod quotient;
pub mod subspace;

pub use catalog::{
    classify_p3, CatalogEntry, Certificates, ClassificationReport, ClassifyOptions, Construction, FreeLoopCheck,
    GroupQuotient, NonIsoMethod, NonIsoWitness, OrbitSummary, DEFAULT_PRIME_CAP,
};
pub use action::{action_matrix, gl2_enumerate, gl2_generators, ActionMatrix, Mat2};
pub use free_hom::{iso_classes_via_free, FreeHom, FreeTarget};
pub use orbits::{
    compute_orbits, named_representative, named_representative_with, raw_orbits, Orbit, OrbitLabel, OrbitReport,
    SCHEMA_VERSION,
};
pub use quotient::{quotient_loop, FpQuotient};
pub use subspace::{grassmannian3, Subspace3, MAX_PRIME};
