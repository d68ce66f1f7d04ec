//! Certify good ordinary reduction above a fixed prime for elliptic-curve families along
//! real or full cyclotomic towers: finite fields, polynomial arithmetic, supersingular sets,
//! residue places, and the certifier itself.

pub mod certifier;
pub mod cyclotomic;
pub mod error;
pub mod ffield;
pub mod frey;
pub mod parallel;
pub mod polyring;
pub mod supersingular;

pub use error::{Error, Result};
