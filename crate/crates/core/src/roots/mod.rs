//! Root systems, Weyl groups and exact character arithmetic.

pub mod branching;
pub mod character;
pub mod presets;
pub mod system;
pub mod tables;
pub mod virtual_rep;

pub use branching::{branch, half_spin_weights, kostant_multiplet, project_character, Projection};
pub use character::{
    alt_power, dominant_multiplicities, irrep_character, tensor_product, weyl_dim, weyl_orbit,
    WeightMultiset,
};
pub use presets::{named_weight, parse_weight, PRESET_NAMES};
pub use system::{
    build_root_system, coset_poincare_polynomial, euler_characteristic_coset, exponents, root_system_isomorphic,
    sphere_decomposition, weyl_enumerate, weyl_order, CartanType, PositiveRoot, RootSystem,
    Weight, WEYL_ENUMERATION_CAP,
};
pub use tables::{
    alternating_binomial_split, coset_dimension, exceptional_dimension_table,
    exterior_power_table, magic_square_table, oxidation_checks, sugra_triplet, ExceptionalRow,
    ExteriorRow, ExteriorTable, MagicCell, OxidationCheck,
};
pub use virtual_rep::{decompose, decompose_with, Term, VirtualRep};
