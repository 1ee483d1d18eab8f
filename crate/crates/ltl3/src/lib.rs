//! Three-valued runtime monitoring for linear temporal logic.
//!
//! A formula is checked against a growing finite trace and receives one of
//! three verdicts: `T` when every infinite continuation satisfies it, `F`
//! when every infinite continuation refutes it, and `?` otherwise. The crate
//! provides:
//!
//! * formula parsing, printing and desugaring ([`syntax`], [`parser`]),
//! * finite and ultimately-periodic (lasso) traces ([`trace`]),
//! * decision procedures for conventional LTL over lassos ([`semantics`]),
//! * an executable finite model of definitive-prefix sets ([`definitive`]),
//! * Büchi-based satisfiability, the verdict oracle and compiled monitor
//!   machines ([`automata`]),
//! * formula progression with local and semantic simplification
//!   ([`progression`]),
//! * streaming monitor sessions over either backend ([`monitor`]),
//! * safety/co-safety/liveness/co-liveness/monitorability classification
//!   ([`classify`]),
//! * exhaustive and seeded random generators for formulas and traces
//!   ([`enumeration`]).
//!
//! All values are immutable after construction and all functions are pure
//! except the explicitly mutable [`monitor::Monitor`] session.

pub mod automata;
pub mod classify;
pub mod definitive;
pub mod enumeration;
pub mod limits;
pub mod monitor;
pub mod parser;
pub mod progression;
pub mod semantics;
pub mod syntax;
pub mod trace;

pub use automata::{
    build_monitor, sat, to_buchi, to_nnf, valid, verdict_oracle, AutomataError, Gba,
    MonitorAutomaton, NnfFormula, VerdictOracle,
};
pub use classify::{classify_all, Classification, ClassifyReport};
pub use definitive::{BoundedUniverse, TraceSet, UniverseError};
pub use limits::Limits;
pub use monitor::{BackendKind, Monitor};
pub use parser::{parse, ParseError};
pub use progression::{
    collapse, run, simplify_local, step, verdict_progression, ProgressionError, SimplifyPolicy,
};
pub use semantics::{eval_classic, eval_polar, Answer, SemanticsError, Verdict};
pub use syntax::{render, render_grouped, Formula, PropName, PropNameError};
pub use trace::{Alphabet, FiniteTrace, LassoTrace, State};
