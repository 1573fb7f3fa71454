//! The `pgr` command language: element syntax, configuration, command
//! runner and REPL.

pub mod command;
pub mod config;
pub mod parser;
pub mod repl;

use thiserror::Error;

use crate::arity::ArityProfile;
use crate::error::AlgebraError;
use crate::groupring::GroupRing;
use crate::ngroup::{AdiagCyclic, DerivedCyclic};

pub use command::{parse_command, run_command, Command, Outcome, RunOptions};
pub use config::{load_config, ContextSpec, GroupSpec, Overrides};
pub use parser::{parse_element, parse_in, print_canonical, ElementExpr};
pub use repl::Session;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status for malformed input.
pub const EXIT_PARSE: i32 = 1;
/// Exit status for arity, domain and configuration errors.
pub const EXIT_DOMAIN: i32 = 2;
/// Exit status when a verification reports a failing law.
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("parse error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Parse { offset: usize, expected: Vec<String>, found: String },

    #[error("key out of range: {0}")]
    KeyRange(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl DslError {
    pub fn exit_code(&self) -> i32 {
        match self {
            DslError::Parse { .. } => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        }
    }
}

/// The active group ring, for either group family.
#[derive(Clone, Debug)]
pub enum Context {
    Adiag(GroupRing<AdiagCyclic>),
    Derived(GroupRing<DerivedCyclic>),
}

impl Context {
    pub fn profile(&self) -> &ArityProfile {
        match self {
            Context::Adiag(gr) => gr.profile(),
            Context::Derived(gr) => gr.profile(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Context::Adiag(gr) => gr.label(),
            Context::Derived(gr) => gr.label(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Context::Adiag(gr) => gr.to_string(),
            Context::Derived(gr) => gr.to_string(),
        }
    }
}

impl Default for Context {
    fn default() -> Self {
        ContextSpec::default().build().expect("the default context is valid")
    }
}
