//! Word cobordisms and the grammars built on them.

pub mod acg;
pub mod category;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod laws;
pub mod llg;
pub mod mcfg;
pub mod mll;
pub mod multiword;
pub mod random;
pub mod render;
pub mod syntax;

pub use error::{Error, Result};
