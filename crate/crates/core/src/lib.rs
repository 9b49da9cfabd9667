pub mod error;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{ElementTable, GroupHandle, Permutation};
pub mod structure;

pub use structure::{Caps, GroupStructure};
pub mod invgen;
pub mod chebotarev;
pub mod rational;
pub mod families;
pub mod cli;
