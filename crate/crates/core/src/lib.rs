//! Tight regular polyhedra: closed-form classification of the types {p, q}
//! that admit a polyhedron with exactly 2pq flags, a coset-enumeration
//! oracle that re-derives the classification by brute force, and the
//! polyhedra themselves as combinatorial maps.

pub mod arith;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod export;
pub mod families;
pub mod group;
pub mod map;
pub mod oracle;
pub mod presentation;
pub mod sggi;
pub mod word;

pub use enumeration::{enumerate_cosets, enumerate_with, Strategy};
pub use error::{Error, Result};
pub use families::{
    classify_all, classify_nonorientable, classify_orientable, coxeter_presentation,
    delta_presentation, lambda_presentation, tight_existence, ClassParams, ClassRecord,
    ExistenceVerdict, NonOrientableParams, OrientableParams,
};
pub use group::{Element, RegularRepresentation, Subgroup};
pub use map::{build_map, map_invariants, validate_polyhedron, MapInvariants, MapStructure};
pub use presentation::{Family, Presentation};
pub use sggi::{SchlafliType, SggiReport};
pub use word::{Generator, Word};
