//! Exact genus-0 Gromov-Witten invariants, quantum cohomology and Batyrev's
//! quantum ring for the even Hirzebruch surfaces `F_{2k}`.
//!
//! The crate is organised bottom-up:
//!
//! * [`toric`] holds the fan `Σ_κ`, curve classes and the transfer maps between
//!   `F_{2k}` and `F_0 = P¹ × P¹`.
//! * [`cohomology`] is the classical ring `H*(F_κ)` in the basis `1, Z1, Z4, Z1·Z4`.
//! * [`ring`] is exact sparse polynomial arithmetic in `Z1..Z4` with Laurent
//!   monomials in `q1, q2`, plus a rewrite-system completion for quotient rings.
//! * [`gw`] evaluates fixed-cross-ratio invariants through `F_0` and the `P¹`
//!   formula, and carries the closed forms used as independent oracles.
//! * [`quantum`] assembles quantum products, both presentations and the
//!   comparison against Batyrev's ring.
//! * [`cli`] is the command-line front end.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod gw;
pub mod quantum;
pub mod ring;
pub mod toric;

pub use cohomology::CohomologyElement;
pub use error::{Error, Result};
pub use ring::{Monomial, Presentation, QuantumElement};
pub use toric::{CurveClass, FanData};
