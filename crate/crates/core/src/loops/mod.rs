//! Finite loops as explicit Cayley tables: validation, inner mappings,
//! associators, nuclei and center, quotients, and isomorphism testing.

mod automorphic;
mod cayley;
mod groups;
mod inner;
mod iso;
mod profile;
mod quotient;
mod subloop;

pub use automorphic::{
    associator, is_automorphic, AutomorphicCheck, AutomorphicMethod, AutomorphicWitness, Coverage,
    DEFAULT_SAMPLES, EXHAUSTIVE_A_LIMIT,
};
pub use cayley::{CayleyLoop, Side, DEFAULT_ORDER_CAP};
pub use groups::{catalog_group_descriptors, catalog_groups, exceptional_loop_8, AbelianGroup};
pub use inner::{inner_generators, inner_maps, InnerMap, Permutation};
pub use iso::{is_isomorphic, is_isomorphic_with, is_isomorphism, IsoOptions, IsoOutcome, NonIsoReason, DEFAULT_NODE_BUDGET};
pub use profile::{
    element_order, is_power_associative, nilpotency_class, order_spectrum, power_associativity_witness,
    structure_profile, Nilpotency, StructureProfile,
};
pub use quotient::{quotient, quotient_unchecked, Quotient};
pub use subloop::{
    associator_subloop, associator_values, center, invariant_subsets, left_nucleus, middle_nucleus, right_nucleus,
    InvariantSubsets, Subloop,
};
pub(crate) use subloop::UnionFind;
