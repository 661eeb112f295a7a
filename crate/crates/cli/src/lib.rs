//! Command-line front end for `summand`: ring descriptors in, verdict
//! reports out.
//!
//! ```
//! use clap::Parser;
//! use summand_cli::{run, Cli};
//!
//! let cli = Cli::parse_from(["summand", "check", "zmod-6", "--props", "ssp,sip,c3", "--format", "json"]);
//! let out = run(&cli);
//! assert_eq!(out.code, 0);
//! assert!(out.stdout.contains("\"verdicts\""));
//! ```

mod checks;
mod commands;
pub mod descriptor;
mod error;
pub mod fixtures;
pub mod report;

pub use checks::{verdict, verify_ring, ALL_PROPERTIES};
pub use commands::{
    check, run, verify, Cli, Command, FixtureAction, Format, MethodArg, Outcome, Prop, SideArg, EXIT_FAIL,
    EXIT_INVALID, EXIT_PASS,
};
pub use error::InputError;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
