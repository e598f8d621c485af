//! Exact Weyl-group combinatorics.
//!
//! The crate builds root systems for arbitrary Cartan types, computes longest
//! elements and relative Weyl groups of parabolic subgroups, attaches the
//! cuspidal label sets and irreducible-character label sets of the
//! classification, and enumerates the resulting parameter set of triples
//! `(J, epsilon, zeta)` together with its Harish-Chandra series structure.
//! A generic finite-group engine (enumeration, conjugacy classes,
//! centralizers, exact character tables) provides the brute-force oracles
//! used by the verification suite.
//!
//! All arithmetic is exact: roots are integer vectors, labels are symbolic
//! roots of unity, and character tables are computed over cyclotomic fields.
//! Every value is immutable after construction and all operations are pure
//! functions, so everything can be shared freely across threads.

pub mod cartan;
pub mod cuspidal;
mod diagram;
pub mod engine;
pub mod error;
pub mod irr;
pub mod param;
pub mod perm;
pub mod relative;
pub mod roots;
pub mod verify;

pub use cartan::{CartanComponent, CartanFamily, CartanType};
pub use cuspidal::{CuspidalLabel, CuspidalSet, PrimeMark};
pub use error::{Error, Result};
pub use irr::IrrLabel;
pub use param::{SeriesReport, SheafParameter};
pub use relative::RelativeWeylGroup;
pub use roots::{RootSystem, SubsetJ, WeylElement};
