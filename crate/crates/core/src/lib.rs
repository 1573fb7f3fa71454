//! Exact polyadic rings, n-ary groups and polyadic group rings.
//!
//! * [`arity`]: admissible word lengths, polyadic powers, arity profiles.
//! * [`ngroup`]: finite n-ary groups, querelements, identities.
//! * [`pring`]: the `(2, q+1)`-rings `j_q Z`, optionally reduced mod `N`.
//! * [`groupring`]: the group ring `R[G]` with polyadic addition and
//!   convolution multiplication, augmentation and querelements.
//! * [`verify`]: axiom checks with exhaustive and sampled modes.
//! * [`dsl`]: element syntax, command runner and REPL behind the `pgr` CLI.

pub mod arity;
pub mod dsl;
pub mod error;
pub mod exec;
pub mod groupring;
pub mod ngroup;
pub mod pring;
pub mod verify;
pub mod worked;

pub use arity::{admissible_length, power_for_length, ArityProfile};
pub use error::{AlgebraError, Result};
pub use exec::Execution;
pub use groupring::{GroupRing, GroupRingElement};
pub use ngroup::{AdiagCyclic, AdiagKey, CyclicKey, DerivedCyclic, FiniteMagma, NaryGroup};
pub use pring::{PolyadicRing, RingScalar};
