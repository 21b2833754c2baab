//! File formats, the randomized law suite and the command line for
//! [`fsdist_core`].

pub mod cli;
pub mod error;
pub mod format;
pub mod harness;
pub mod point;

pub use cli::run;
pub use error::{CliError, FormatError};
pub use point::Point;
