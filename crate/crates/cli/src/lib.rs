//! Command-line front end for `liecoh-core` and the structure-constant file
//! format.

pub mod args;
pub mod file;
pub mod run;
pub mod select;
pub mod table;

pub use file::{load, parse, save, to_text, FileError};
pub use run::{run, CliError, Threads};
