//! Exact structure-constant algebras over ℚ and GF(p): radicals,
//! Wedderburn–Malcev complements, maximal tori and Cartan subalgebras of
//! the associated Lie algebra `A∘` (with `a ∘ b = ab − ba`).
//!
//! ```
//! use cartan_core::{cartan_subalgebra, presets};
//!
//! let kd6 = presets::from_preset("dihedral:3@GF(3)").unwrap();
//! let cert = cartan_subalgebra(&kd6, 0).unwrap();
//! assert_eq!(cert.cartan.dim(), 4);
//! ```

pub mod algebra;
pub mod constructions;
pub mod error;
pub mod field;
pub mod finite;
pub mod groups;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod presets;
pub mod radical;
pub mod subspace;
pub mod torus;
pub mod units;

pub use algebra::{Algebra, Element, LinearMap};
pub use constructions::{
    associative_closure, direct_product, is_ideal, is_multiplication_closed, is_unital_subalgebra, quotient,
    subalgebra, tensor_product, Quotient,
};
pub use error::{Error, Result};
pub use field::{scalar_arith, ArithOp, FieldSpec, Scalar};
pub use groups::{augmentation_left_ideal, cyclic, derived_subgroup, dihedral, group_algebra, GroupTable};
pub use lie::{center, centralizer, lie_normalizer, lower_central_series, LowerCentralSeries};
pub use linalg::Matrix;
pub use poly::{is_squarefree, minimal_polynomial, poly_gcd, Polynomial};
pub use radical::{
    conjugate_subalgebra, is_nilpotent_element, is_reduced, is_soluble, radical, radical_complement,
    RadicalDecomposition, Reducedness,
};
pub use subspace::Subspace;
pub use torus::{
    cartan_subalgebra, index_of_central_simple, is_separable_element, is_torus, lie_nilpotency_report, maximal_torus,
    soluble_hull, verify_cartan, CartanCertificate, CartanDiagnostics, LieNilpotencyReport, TorusCertificate,
};
pub use units::{group_nilpotency, unit_group, units_decomposition_check, GroupNilpotency, UnitGroup};
