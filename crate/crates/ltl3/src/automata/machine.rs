//! Compiled three-valued monitor machines.
//!
//! Powerset determinization of the live-node restrictions of the automata
//! for the formula and its negation, paired into one deterministic, complete
//! Moore machine. The verdict of a state is `T` when no refuting node
//! remains, `F` when no satisfying node remains, and `?` otherwise; after
//! reading a finite trace the machine's verdict equals the verdict oracle's.

use std::collections::HashMap;

use crate::automata::gba::{Gba, NodeSet};
use crate::automata::AutomataError;
use crate::limits::Limits;
use crate::semantics::Verdict;
use crate::syntax::Formula;
use crate::trace::{Alphabet, FiniteTrace, State};

// 2^16 letters is the most a dense per-state table should ever hold.
const MAX_MONITOR_PROPS: usize = 16;

#[derive(Debug)]
pub(crate) struct MonitorState {
    pub(crate) satisfiers: NodeSet,
    pub(crate) refuters: NodeSet,
    pub(crate) verdict: Verdict,
}

/// Deterministic, complete monitor machine with verdict-labelled states.
#[derive(Debug)]
pub struct MonitorAutomaton {
    alphabet: Alphabet,
    pub(crate) states: Vec<MonitorState>,
    /// Dense table: `transitions[state * letters + letter_mask]`.
    transitions: Vec<u32>,
    letters: usize,
}

/// Build the monitor machine for `formula`.
pub fn build_monitor(
    formula: &Formula,
    alphabet: &Alphabet,
) -> Result<MonitorAutomaton, AutomataError> {
    build_monitor_with_limits(formula, alphabet, &Limits::default())
}

pub fn build_monitor_with_limits(
    formula: &Formula,
    alphabet: &Alphabet,
    limits: &Limits,
) -> Result<MonitorAutomaton, AutomataError> {
    if alphabet.len() > MAX_MONITOR_PROPS {
        return Err(AutomataError::BudgetExceeded {
            resource: "monitor alphabet propositions",
            limit: MAX_MONITOR_PROPS,
        });
    }
    let plain = Gba::build(formula, alphabet, limits)?;
    let negated = Gba::build(&Formula::not(formula.clone()), alphabet, limits)?;
    let letters = 1usize << alphabet.len();

    // Dead nodes never lead back to live ones, so tracking the live subsets
    // is closed under transitions and emptiness becomes an is-empty test.
    let live_restrict = |gba: &Gba, ids: &[usize]| {
        let live = gba.live();
        let mut set = NodeSet::new(gba.node_count());
        for &id in ids {
            if live[id] {
                set.insert(id);
            }
        }
        set
    };
    let advance_live = |gba: &Gba, current: &NodeSet, mask: u64| {
        let live = gba.live();
        let next = gba.advance(current, mask);
        let mut filtered = NodeSet::new(gba.node_count());
        for id in next.iter() {
            if live[id] {
                filtered.insert(id);
            }
        }
        filtered
    };

    let initial = (
        live_restrict(&plain, plain.initial()),
        live_restrict(&negated, negated.initial()),
    );

    let mut states: Vec<MonitorState> = Vec::new();
    let mut transitions: Vec<u32> = Vec::new();
    let mut table: HashMap<(NodeSet, NodeSet), usize> = HashMap::new();

    let verdict_of = |satisfiers: &NodeSet, refuters: &NodeSet| {
        debug_assert!(
            !(satisfiers.is_empty() && refuters.is_empty()),
            "a prefix cannot be both definitively true and false"
        );
        if refuters.is_empty() {
            Verdict::True
        } else if satisfiers.is_empty() {
            Verdict::False
        } else {
            Verdict::Unknown
        }
    };

    let mut intern = |pair: (NodeSet, NodeSet), states: &mut Vec<MonitorState>| {
        if let Some(&id) = table.get(&pair) {
            return Ok(id);
        }
        let id = states.len();
        if id >= limits.max_monitor_states {
            return Err(AutomataError::BudgetExceeded {
                resource: "monitor states",
                limit: limits.max_monitor_states,
            });
        }
        let verdict = verdict_of(&pair.0, &pair.1);
        table.insert(pair.clone(), id);
        states.push(MonitorState {
            satisfiers: pair.0,
            refuters: pair.1,
            verdict,
        });
        Ok(id)
    };

    let first = intern(initial, &mut states)?;
    debug_assert_eq!(first, 0);
    let mut done = 0usize;
    while done < states.len() {
        for mask in 0..letters as u64 {
            let next = (
                advance_live(&plain, &states[done].satisfiers, mask),
                advance_live(&negated, &states[done].refuters, mask),
            );
            let target = intern(next, &mut states)?;
            transitions.push(target as u32);
        }
        done += 1;
    }

    Ok(MonitorAutomaton {
        alphabet: alphabet.clone(),
        states,
        transitions,
        letters,
    })
}

impl MonitorAutomaton {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn verdict_of(&self, state: usize) -> Verdict {
        self.states[state].verdict
    }

    /// Deterministic transition on one observed state.
    pub fn step(&self, state: usize, observed: &State) -> Result<usize, AutomataError> {
        let mask = self.alphabet.state_mask(observed).ok_or_else(|| {
            let unknown = observed
                .iter()
                .find(|p| !self.alphabet.contains(p))
                .expect("some proposition is undeclared")
                .clone();
            AutomataError::AlphabetMismatch(unknown)
        })?;
        Ok(self.transitions[state * self.letters + mask as usize] as usize)
    }

    /// Verdict after reading a whole finite trace from the initial state.
    pub fn run(&self, t: &FiniteTrace) -> Result<Verdict, AutomataError> {
        let mut state = self.initial();
        for observed in t.iter() {
            state = self.step(state, observed)?;
        }
        Ok(self.verdict_of(state))
    }

    /// Raw transition targets of a state, in letter-mask order.
    pub(crate) fn targets(&self, state: usize) -> &[u32] {
        &self.transitions[state * self.letters..(state + 1) * self.letters]
    }

    pub(crate) fn letters(&self) -> usize {
        self.letters
    }
}
