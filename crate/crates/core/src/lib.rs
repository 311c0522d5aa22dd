//! Combinatorics of nilpotent orbits for classical and exceptional groups:
//! partitions and specialness, an `sl2` character calculus, orbit-raising
//! moves and the exceptional orbit tables.

pub mod error;
pub mod exceptional;
pub mod partitions;
pub mod raising;
pub mod sl2calc;
pub mod special;
pub mod suites;

pub use error::{OrbitError, Result};
pub use exceptional::{Classification, ExceptionalGroup, ExceptionalOrbitRecord};
pub use partitions::{Partition, WFlavor};
pub use raising::{GroupFlavor, OrbitWithForms, SquareClass};
pub use sl2calc::{ModuleExpr, SL2Module};
pub use special::SpecialFlavor;
