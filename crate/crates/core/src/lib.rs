//! Exact combinatorics of the tubular cluster algebra of weight type
//! (2,2,2,2): Schur roots, tagged arcs on the four-punctured sphere,
//! quiver mutation and exchange-graph exploration.

pub mod acceptance;
pub mod arcs;
pub mod error;
pub mod exchange;
pub mod lattice;
pub mod quat;
pub mod quiver;
pub mod roots;
pub mod slopes;

pub use error::{Error, Result};
pub use lattice::ClassVector;
pub use quat::QuatUnit;
pub use roots::RootIndex;
pub use slopes::Slope;
