//! Integral cellular homology of real isotropic and orthogonal Grassmannians
//! of types B, C and D.
//!
//! Cells are indexed by double partitions drawn as half-shifted Young
//! diagrams. Boundary coefficients come from a closed form in the removed
//! box, cross-checked against root-system oracles, and homology is read off
//! the Smith normal form of the boundary matrices.
//!
//! ```
//! use shifted_homology::{homology, Family, GrassmannianSpec};
//!
//! // IG(1,4) is real projective 3-space.
//! let spec = GrassmannianSpec::new(Family::C, 2, 1).unwrap();
//! let h = homology(&spec).unwrap();
//! let text: Vec<String> = h.iter().map(|g| g.to_string()).collect();
//! assert_eq!(text, ["Z", "Z/2", "0", "Z"]);
//! ```

pub mod boundary;
pub mod chain;
pub mod error;
pub mod scalar;
pub mod shapes;
pub mod snf;
pub mod verify;
pub mod weyl;

pub use boundary::{
    coefficient, kappa_closed_form, kappa_phi_oracle, kappa_sigma_oracle, CoefficientReport,
};
pub use chain::{
    build_complex, build_complex_with, homology, ChainComplex, HomologyGroup, Orientation,
};
pub use error::{Error, Result};
pub use scalar::IntegerScalar;
pub use shapes::{
    enumerate_cells, enumerate_removals, partition_to_permutation, permutation_to_partition,
    row_reading_word, DType, DoublePartition, GrassmannianSpec, HalfShiftedDiagram, Removal,
};
pub use snf::{smith_normal_form, SmithForm, SparseMatrix};
pub use verify::{verify_spec, VerifyReport};
pub use weyl::{Family, LatticeVector, ReducedWord, Root, SignedPermutation};

/// Boundary matrices: entries are `0` or `±2`.
pub type BoundaryMatrix = SparseMatrix<i64>;
/// Arbitrary-precision matrices for elimination.
pub type IntMatrix = SparseMatrix<num_bigint::BigInt>;
