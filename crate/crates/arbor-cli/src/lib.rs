//! Library side of the `arbor` binary: argument types, command dispatch,
//! DOT export, and the acceptance rows (shared with the test suite).

pub mod accept;
pub mod args;
pub mod dot;
pub mod run;
