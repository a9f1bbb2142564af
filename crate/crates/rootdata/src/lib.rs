//! Root systems of the simple Lie algebras, their weights, and fixed-point
//! subalgebras of finite-order automorphisms in Kac coordinates.

mod classify;
mod error;
mod kac;
mod system;
mod types;
mod weights;

pub use classify::classify_cartan;
pub use error::RootError;
pub use kac::{affine_diagram, kac_fixed_subalgebra, AffineDiagram};
pub use system::{build_root_system, dual_coxeter, inner_product, weyl_dim, RootSystem, Weight};
pub use types::{parse_ideal_list, Family, SemisimpleTypeWithLevels, SimpleType};
pub use weights::{lin_min_over_weights, lowest_weight, weight_system, WeightSystem};
