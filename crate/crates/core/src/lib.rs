//! Rings of continuous functions `C(X, Y)` over finite spaces.
//!
//! `X` is a finite explicit topology (or the symbolic convergent sequence
//! ℕ ∪ {∞}) and `Y` a finite discrete algebra given by tables. The crate
//! computes quasi-components, zero sets and vanishing ideals, enumerates the
//! ideal lattice, classifies primes, and runs a registry of statement
//! checkers against concrete instances.

pub mod algebra;
pub mod command;
pub mod dsl;
pub mod funcspace;
pub mod ideals;
pub mod pointset;
pub mod report;
pub mod topology;
pub mod verify;
pub mod zariski;
