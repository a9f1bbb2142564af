//! Lattice VOAs of two Niemeier lattices: glue-code assembly, order-3 isometries and their
//! standard lifts, twisted ground energies, and the fixed-point Lie algebras `(V^g)_1`.

pub mod algebra;
mod error;
pub mod fixed;
pub mod intmat;
pub mod isometry;
pub mod lattice;

pub use algebra::{lift, standard_lift, standard_lift_with_phase, Elem, LatticeLie, LieAutomorphism, PhaseFunction};
pub use error::LatticeError;
pub use fixed::{fixed_subalgebra, identify_type, FixedSubalgebra};
pub use isometry::{
    build_isometry, fixed_projection_norm, twisted_ground_energy, twisted_ground_energy_of, GroundEnergy, IsometryName,
    LatticeIsometry,
};
pub use lattice::{
    assemble_niemeier, count_a2_cubed_sublattices, count_sublattices, glue_automorphism_group_order, Discriminant,
    EvenLattice, GlueCode,
};
