//! Exact computations with finite-dimensional coalgebras and comodules.

pub mod acceptance;
pub mod coalgebra;
pub mod comodule;
pub mod embeddings;
pub mod error;
pub mod exactlin;
pub mod ext;
pub mod localization;
pub mod oracle;

pub use coalgebra::{Coalgebra, Quiver};
pub use comodule::{Comodule, DimensionVector};
pub use error::{Error, Result};
pub use exactlin::{Field, Matrix, Scalar, Subspace};
