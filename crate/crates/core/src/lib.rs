//! Exact Ehrhart data for order polytopes and Gelfand–Tsetlin polytopes:
//! order polynomials over ideal lattices, hook formulas, exact LP membership
//! with certificates, integer decomposition checks, and exhaustive scans.

pub mod error;
pub mod exact;
pub mod fixtures;
pub mod gt;
pub mod hull;
pub mod poset;
pub mod reference;
pub mod search;
mod simplex;

pub use error::{Error, Result};
pub use exact::{
    binomial, determinant, interpolate_polynomial, power_sum_polynomial, ExactInt, ExactRational,
    IntMatrix, UniPolynomial,
};
pub use gt::{GTPattern, GtFace, Partition, RowSums};
pub use hull::{IdpViolation, LatticePoint, MembershipCertificate, VPolytope};
pub use poset::{HookMultiset, IdealLattice, Poset, RootedTree, YoungShape};
pub use search::{CanonicalPoset, ScanReport};
