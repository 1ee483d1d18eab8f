//! States, finite traces and lasso (ultimately periodic) traces.
//!
//! A state is the set of propositions that hold at an instant; the state
//! space of an alphabet is the full powerset of its propositions. Infinite
//! traces are represented exclusively as lassos `stem · loop · loop · …`,
//! which suffice as witnesses for every satisfiability or validity question
//! asked in this crate.

use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::PropName;

/// An ordered set of proposition names fixing the observation vocabulary.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    props: Vec<PropName>,
}

impl Alphabet {
    pub fn new(props: impl IntoIterator<Item = PropName>) -> Self {
        let set: BTreeSet<PropName> = props.into_iter().collect();
        Alphabet {
            props: set.into_iter().collect(),
        }
    }

    /// Convenience constructor from raw names.
    pub fn from_names<S: AsRef<str>>(
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, crate::syntax::PropNameError> {
        let props = names
            .into_iter()
            .map(|n| PropName::new(n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Alphabet::new(props))
    }

    pub fn props(&self) -> &[PropName] {
        &self.props
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }

    pub fn contains(&self, prop: &PropName) -> bool {
        self.props.binary_search(prop).is_ok()
    }

    pub fn index_of(&self, prop: &PropName) -> Option<usize> {
        self.props.binary_search(prop).ok()
    }

    /// Whether every proposition of `state` is declared here.
    pub fn admits(&self, state: &State) -> bool {
        state.iter().all(|p| self.contains(p))
    }

    /// Bitmask of `state` over this alphabet's ordering, or `None` if the
    /// state mentions an undeclared proposition or the alphabet exceeds the
    /// 64 propositions a mask can hold.
    pub fn state_mask(&self, state: &State) -> Option<u64> {
        let mut mask = 0u64;
        for prop in state.iter() {
            mask |= 1u64.checked_shl(self.index_of(prop)? as u32)?;
        }
        Some(mask)
    }

    pub fn state_from_mask(&self, mask: u64) -> State {
        State::new(
            self.props
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| p.clone()),
        )
    }

    /// Number of states, `2^|props|`.
    pub fn state_count(&self) -> usize {
        1usize << self.props.len()
    }

    /// All states of the powerset, in mask order.
    pub fn states(&self) -> impl Iterator<Item = State> + '_ {
        (0..self.state_count() as u64).map(|mask| self.state_from_mask(mask))
    }
}

/// One observation: the set of propositions true at an instant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct State {
    props: BTreeSet<PropName>,
}

impl State {
    pub fn new(props: impl IntoIterator<Item = PropName>) -> Self {
        State {
            props: props.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        State::default()
    }

    pub fn contains(&self, prop: &PropName) -> bool {
        self.props.contains(prop)
    }

    pub fn iter(&self) -> impl Iterator<Item = &PropName> {
        self.props.iter()
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.props.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A finite sequence of states, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteTrace {
    states: Vec<State>,
}

impl FiniteTrace {
    pub fn new(states: Vec<State>) -> Self {
        FiniteTrace { states }
    }

    pub fn empty() -> Self {
        FiniteTrace::default()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn get(&self, i: usize) -> Option<&State> {
        self.states.get(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = &State> {
        self.states.iter()
    }

    /// The trace without its first `min(n, len)` states; dropping past the
    /// end yields the empty trace.
    pub fn drop_prefix(&self, n: usize) -> FiniteTrace {
        let n = n.min(self.states.len());
        FiniteTrace::new(self.states[n..].to_vec())
    }

    /// New trace with `state` appended.
    pub fn extended(&self, state: State) -> FiniteTrace {
        let mut states = self.states.clone();
        states.push(state);
        FiniteTrace::new(states)
    }

    /// New trace with `state` prepended.
    pub fn prepended(&self, state: State) -> FiniteTrace {
        let mut states = vec![state];
        states.extend(self.states.iter().cloned());
        FiniteTrace::new(states)
    }

    /// Whether `self` is a prefix of `other`.
    pub fn is_prefix_of(&self, other: &FiniteTrace) -> bool {
        self.len() <= other.len() && self.states == other.states[..self.len()]
    }
}

impl FromIterator<State> for FiniteTrace {
    fn from_iter<T: IntoIterator<Item = State>>(iter: T) -> Self {
        FiniteTrace::new(iter.into_iter().collect())
    }
}

/// An ultimately periodic infinite trace `stem · loop · loop · …`.
///
/// The loop is never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoTrace {
    stem: FiniteTrace,
    cycle: FiniteTrace,
}

impl LassoTrace {
    /// Panics if `cycle` is empty; the denoted trace must be infinite.
    pub fn new(stem: FiniteTrace, cycle: FiniteTrace) -> Self {
        assert!(!cycle.is_empty(), "lasso loop must be nonempty");
        LassoTrace { stem, cycle }
    }

    pub fn stem(&self) -> &FiniteTrace {
        &self.stem
    }

    pub fn cycle(&self) -> &FiniteTrace {
        &self.cycle
    }

    /// Every state mentioned in stem or loop.
    pub fn all_states(&self) -> impl Iterator<Item = &State> {
        self.stem.iter().chain(self.cycle.iter())
    }

    /// The `i`-th state of the denoted infinite trace.
    pub fn state_at(&self, i: usize) -> &State {
        if i < self.stem.len() {
            &self.stem.states()[i]
        } else {
            &self.cycle.states()[(i - self.stem.len()) % self.cycle.len()]
        }
    }

    /// Drop `n` leading states of the denoted trace. Within the stem this
    /// shortens the stem; past it the stem empties and the loop rotates.
    pub fn drop_prefix(&self, n: usize) -> LassoTrace {
        if n <= self.stem.len() {
            LassoTrace::new(self.stem.drop_prefix(n), self.cycle.clone())
        } else {
            let k = (n - self.stem.len()) % self.cycle.len();
            let mut rotated = self.cycle.states()[k..].to_vec();
            rotated.extend_from_slice(&self.cycle.states()[..k]);
            LassoTrace::new(FiniteTrace::empty(), FiniteTrace::new(rotated))
        }
    }

    /// First `k` states of the denoted trace.
    pub fn unroll(&self, k: usize) -> FiniteTrace {
        (0..k).map(|i| self.state_at(i).clone()).collect()
    }

    /// New lasso with `state` prepended to the stem.
    pub fn prepended(&self, state: State) -> LassoTrace {
        LassoTrace::new(self.stem.prepended(state), self.cycle.clone())
    }

    /// Whether two lassos denote the same infinite trace. Compares unrollings
    /// of length `2 * (max stem + max loop)`, which by the Fine–Wilf
    /// periodicity bound decides equality of ultimately periodic words.
    pub fn denotes_same(&self, other: &LassoTrace) -> bool {
        let bound =
            2 * (self.stem.len().max(other.stem.len()) + self.cycle.len().max(other.cycle.len()));
        (0..bound).all(|i| self.state_at(i) == other.state_at(i))
    }
}
