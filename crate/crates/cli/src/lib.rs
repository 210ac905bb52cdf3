//! Library half of the `ak` command: query handlers, output envelope and
//! verification suites.

pub mod commands;
pub mod output;
pub mod suites;
