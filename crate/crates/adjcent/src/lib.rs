//! Standard-library companion to `adjcent-core`: edge-list files, summary
//! statistics, parameter sweeps and the `adjcent` command line.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod io;
pub mod summary;
pub mod sweep;

pub use adjcent_core as core;
