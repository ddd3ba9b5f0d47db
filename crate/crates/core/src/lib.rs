//! Exact counting of unlabeled simple graphs and multigraphs by number of
//! edges, through group averages over the pair group `S_n^(2)`, with
//! independent brute-force and linear-algebra cross-checks.

pub mod cli;
pub mod detmat;
pub mod error;
pub mod exec;
pub mod genfunc;
pub mod invariants;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Execution;
