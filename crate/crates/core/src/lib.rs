//! Exact computational machinery for the finite subgroups of SU(2) and their
//! wreath-product representations.
//!
//! The crate builds each group from exact quaternion (or matrix, or word)
//! arithmetic, replays the catalog of coset tables, and certifies the eleven
//! wreath embeddings plus the two exhaustive searches. Diagrams of wreath
//! elements can be rendered to SVG or ASCII.

pub mod catalog;
pub mod diagram;
pub mod embed;
pub mod error;
pub mod expr;
pub mod field;
pub mod group;
pub mod modmat;
pub mod perm;
pub mod quat;
pub mod verify;
pub mod wreath;

pub use error::Error;
pub use field::{FieldElem, Rational};
pub use group::{BlockSystem, CosetDecomposition, DicWord, FiniteGroup, GroupElem};
pub use perm::{Perm, SignedPerm};
pub use quat::{Mat3, Quaternion};
pub use wreath::WreathElem;

pub type Result<T> = std::result::Result<T, Error>;
