//! Gate and circuit representation with exact matrix semantics.

pub mod controlled;
pub mod gates;
pub mod level;

pub use controlled::{circuit_matrix, controlled_matrix, normalize_controls, Base, Circuit, ControlledGate};
pub use gates::{gate_matrix, Atom, GateWord};
pub use level::{embed_level, LevelMatrix};
