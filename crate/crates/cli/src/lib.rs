//! File formats shared by the `heffter` binary and its tests.

pub mod format;
