//! File format, example gallery and command-line driver for `homent`.

pub mod cli;
pub mod construct;
pub mod format;
pub mod gallery;
pub mod report;
pub mod scalar;
pub mod store;
pub mod verify;
