//! Command-line front end for `coadjoint-core`: argument parsing, the JSON
//! envelope, and the human-readable Betti tables.

pub mod args;
pub mod commands;
pub mod json;
pub mod text;

pub use args::{Cli, Command, Format};
pub use commands::{run, Outcome};

/// Bumped only on breaking changes to the JSON layout.
pub const SCHEMA_VERSION: u64 = 1;

/// Exit statuses shared by every command.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
}
