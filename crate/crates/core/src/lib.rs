//! Exact computations with lattice diagram determinants, the operators that
//! move their cells, and the ideals and bases attached to partitions with a
//! cell removed.

pub mod basis;
pub mod combinatorics;
pub mod determinant;
pub mod diagram;
pub mod error;
pub mod ideal;
pub mod linalg;
pub mod partition;
pub mod operators;
pub mod poly;
pub mod scalar;
pub mod symmetric;
pub mod tableau;
pub mod verify;

pub use diagram::{Cell, LatticeDiagram};
pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::{Context, Monomial, Polynomial, Var};
pub use scalar::Scalar;
pub use tableau::{Tableau, TableauFlavor};
