//! Std companion to `twindom-core`: the `trn` and matrix text formats, the
//! JSON `DOM*` report, thread-pool drivers for enumeration, and the CLI.

pub mod cli;
pub mod matrix;
pub mod parallel;
pub mod report;
pub mod trn;
