//! LTL to generalized Büchi construction, emptiness, satisfiability, the
//! three-valued verdict oracle and compiled monitor machines.

mod dot;
mod gba;
mod machine;
mod nnf;
mod oracle;

pub use dot::{gba_to_dot, monitor_to_dot};
pub use gba::{Gba, NodeSet};
pub use machine::{build_monitor, build_monitor_with_limits, MonitorAutomaton};
pub use nnf::{to_nnf, NnfFormula};
pub use oracle::{verdict_oracle, VerdictOracle};

use thiserror::Error;

use crate::limits::Limits;
use crate::syntax::{Formula, PropName};
use crate::trace::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("proposition {0} is not in the alphabet")]
    AlphabetMismatch(PropName),
    #[error("{resource} budget of {limit} exceeded")]
    BudgetExceeded {
        resource: &'static str,
        limit: usize,
    },
}

/// Build the generalized Büchi automaton recognising the formula's models.
pub fn to_buchi(formula: &Formula, alphabet: &Alphabet) -> Result<Gba, AutomataError> {
    Gba::build(formula, alphabet, &Limits::default())
}

pub fn to_buchi_with_limits(
    formula: &Formula,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<Gba, AutomataError> {
    Gba::build(formula, alphabet, limits)
}

/// Whether some infinite trace over the alphabet satisfies the formula.
pub fn sat(formula: &Formula, alphabet: &Alphabet) -> Result<bool, AutomataError> {
    sat_with_limits(formula, alphabet, &Limits::default())
}

pub fn sat_with_limits(
    formula: &Formula,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<bool, AutomataError> {
    Ok(!Gba::build(formula, alphabet, limits)?.is_empty())
}

/// Whether every infinite trace over the alphabet satisfies the formula.
pub fn valid(formula: &Formula, alphabet: &Alphabet) -> Result<bool, AutomataError> {
    valid_with_limits(formula, alphabet, &Limits::default())
}

pub fn valid_with_limits(
    formula: &Formula,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<bool, AutomataError> {
    Ok(!sat_with_limits(&Formula::not(formula.clone()), alphabet, limits)?)
}
