//! Resource budgets for the automata and progression machinery.

/// Caps on the constructions that can blow up: tableau nodes, powerset
/// monitor states and progressed formula size. Exceeding a cap raises an
/// explicit error instead of truncating silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of Büchi tableau nodes per automaton.
    pub max_gba_nodes: usize,
    /// Maximum number of determinized monitor states.
    pub max_monitor_states: usize,
    /// Maximum size of a progressed formula, measured in constructors.
    pub max_formula_size: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_gba_nodes: 20_000,
            max_monitor_states: 20_000,
            max_formula_size: 100_000,
        }
    }
}
