//! Specialization at roots of unity: the trace-form semisimplicity test,
//! the semisimplicity criteria, Weyl modules of `S(2, r)`, and the module
//! structure of `S(1|1, r)`.

mod algebra;
mod criteria;
pub mod linalg;
mod s11;

pub use algebra::{
    build_specialized, semisimple_oracle, simple_counts, specialize_element, Certificate, SimpleCounts,
    SpecializedAlgebra, StructureConstants, DEFAULT_GUARD,
};
pub use criteria::{
    predict_semisimple, splitting_degree, weyl_irreducible_sl2, weyl_semisimple_sl2, SpecParams, Variant,
};
pub use s11::{maximal_vector_witness, s11_structure, MaximalVector, S11Report};
