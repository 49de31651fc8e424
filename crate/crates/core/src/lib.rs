pub mod arith;
pub mod duality;
pub mod error;
pub mod group;
pub mod oracle;
mod text;
pub mod topology;
pub mod torus;
pub mod zee;

pub use error::{Error, Result};
pub use group::{Element, FiniteAbelianGroup, Subgroup};
pub use torus::TorusValue;
