//! Ackermannian Goodstein sequences.
//!
//! Numbers are written in normal forms built from the Ackermann function
//! `A_a(k, b)`. Changing the base of such a normal form and subtracting one
//! gives Goodstein-style processes whose termination is witnessed by the
//! ordinal maps in [`ordinal_map`], valued in the notation system of
//! [`ordinal`].

pub mod ackmath;
pub mod base_change;
pub mod error;
pub mod goodstein;
pub mod normal_form;
pub mod ordinal;
pub mod ordinal_map;
pub mod verify;

pub use ackmath::{ack_eval, ack_iter, BoundedValue, Nat};
pub use error::{Error, Result};
pub use normal_form::{AckIndex, AckTerm, Mode};
pub use ordinal::Ordinal;
