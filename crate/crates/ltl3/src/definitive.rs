//! Executable finite model of definitive-prefix sets.
//!
//! The universe is every state sequence of length at most a fixed horizon
//! `N`. Length-`N` traces are *maximal* and play the role of the infinite
//! traces; shorter ones play the finite prefixes. Over this universe the
//! prefix, extension, definitive-prefix and prepend operators are computed
//! explicitly, so the lattice laws of definitive sets can be checked
//! exhaustively rather than assumed.
//!
//! A trace is *definitive* for a set when every extension of it stays a
//! prefix of the set; a set is definitive when it equals its own definitive
//! prefixes. The `definitive_union` is the join of the lattice of definitive
//! sets; `maximal_part` and `definitive_closure` form its isomorphism with
//! sets of maximal traces.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::trace::State;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("duplicate state in universe")]
    DuplicateState,
    #[error("universe too large ({0} traces)")]
    TooLarge(u128),
    #[error("operands live in different universes")]
    MixedUniverse,
    #[error("input set is not definitive")]
    NotDefinitive,
    #[error("input set contains a non-maximal trace")]
    NotAProperty,
}

const MAX_TRACES: u128 = 1 << 24;

/// All state sequences of length `<= horizon` over an explicit state list.
///
/// The state list need not be a powerset; degenerate universes (for example
/// a single state, making every proposition trivial) are allowed.
#[derive(Debug, PartialEq, Eq)]
pub struct BoundedUniverse {
    states: Vec<State>,
    horizon: usize,
    /// offsets[k] = index of the first trace of length k.
    offsets: Vec<usize>,
    total: usize,
}

impl BoundedUniverse {
    pub fn new(states: Vec<State>, horizon: usize) -> Result<Arc<Self>, UniverseError> {
        if horizon == 0 {
            return Err(UniverseError::ZeroHorizon);
        }
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(UniverseError::DuplicateState);
            }
        }
        let base = states.len() as u128;
        let mut offsets = Vec::with_capacity(horizon + 2);
        let mut total: u128 = 0;
        let mut pow: u128 = 1;
        for _ in 0..=horizon {
            offsets.push(total as usize);
            total += pow;
            if total > MAX_TRACES {
                return Err(UniverseError::TooLarge(total));
            }
            pow *= base;
        }
        offsets.push(total as usize);
        Ok(Arc::new(BoundedUniverse {
            states,
            horizon,
            offsets,
            total: total as usize,
        }))
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// Number of traces in the universe.
    pub fn trace_count(&self) -> usize {
        self.total
    }

    fn len_of(&self, id: usize) -> usize {
        debug_assert!(id < self.total);
        self.offsets.partition_point(|&o| o <= id) - 1
    }

    /// Decode a trace id into state indices.
    pub fn decode(&self, id: usize) -> Vec<usize> {
        let len = self.len_of(id);
        let mut rest = id - self.offsets[len];
        let base = self.states.len();
        let mut digits = vec![0usize; len];
        for slot in digits.iter_mut().rev() {
            *slot = rest % base;
            rest /= base;
        }
        digits
    }

    /// Encode state indices as a trace id. Panics on out-of-range input.
    pub fn encode(&self, digits: &[usize]) -> usize {
        assert!(digits.len() <= self.horizon, "trace longer than horizon");
        let base = self.states.len();
        let mut rest = 0usize;
        for &d in digits {
            assert!(d < base, "state index out of range");
            rest = rest * base + d;
        }
        self.offsets[digits.len()] + rest
    }

    fn is_maximal(&self, id: usize) -> bool {
        id >= self.offsets[self.horizon]
    }

    /// Id of the trace without its first state (the tail of the empty trace
    /// is the empty trace).
    fn tail(&self, id: usize) -> usize {
        let digits = self.decode(id);
        if digits.is_empty() {
            id
        } else {
            self.encode(&digits[1..])
        }
    }

    /// Children ids: every one-state extension still inside the universe.
    fn children(&self, id: usize) -> Vec<usize> {
        let digits = self.decode(id);
        if digits.len() == self.horizon {
            return Vec::new();
        }
        let mut extended = digits;
        extended.push(0);
        (0..self.states.len())
            .map(|s| {
                *extended.last_mut().unwrap() = s;
                self.encode(&extended)
            })
            .collect()
    }
}

/// A set of universe traces, stored as a bitset over trace ids.
#[derive(Clone, PartialEq, Eq)]
pub struct TraceSet {
    universe: Arc<BoundedUniverse>,
    bits: Vec<u64>,
}

impl TraceSet {
    pub fn empty(universe: &Arc<BoundedUniverse>) -> Self {
        let words = universe.total.div_ceil(64);
        TraceSet {
            universe: Arc::clone(universe),
            bits: vec![0; words],
        }
    }

    pub fn full(universe: &Arc<BoundedUniverse>) -> Self {
        let mut set = TraceSet::empty(universe);
        for id in 0..universe.total {
            set.insert(id);
        }
        set
    }

    pub fn from_ids(universe: &Arc<BoundedUniverse>, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut set = TraceSet::empty(universe);
        for id in ids {
            set.insert(id);
        }
        set
    }

    /// Build from explicit traces given as state-index sequences.
    pub fn from_traces(
        universe: &Arc<BoundedUniverse>,
        traces: impl IntoIterator<Item = Vec<usize>>,
    ) -> Self {
        let ids: Vec<usize> = traces.into_iter().map(|t| universe.encode(&t)).collect();
        TraceSet::from_ids(universe, ids)
    }

    pub fn universe(&self) -> &Arc<BoundedUniverse> {
        &self.universe
    }

    pub fn insert(&mut self, id: usize) {
        assert!(id < self.universe.total);
        self.bits[id / 64] |= 1 << (id % 64);
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.universe.total && self.bits[id / 64] & (1 << (id % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.total).filter(move |&id| self.contains(id))
    }

    fn same_universe(&self, other: &TraceSet) -> Result<(), UniverseError> {
        if Arc::ptr_eq(&self.universe, &other.universe) || *self.universe == *other.universe {
            Ok(())
        } else {
            Err(UniverseError::MixedUniverse)
        }
    }

    pub fn union(&self, other: &TraceSet) -> Result<TraceSet, UniverseError> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (w, o) in out.bits.iter_mut().zip(&other.bits) {
            *w |= o;
        }
        Ok(out)
    }

    pub fn intersection(&self, other: &TraceSet) -> Result<TraceSet, UniverseError> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (w, o) in out.bits.iter_mut().zip(&other.bits) {
            *w &= o;
        }
        Ok(out)
    }

    pub fn is_subset(&self, other: &TraceSet) -> Result<bool, UniverseError> {
        self.same_universe(other)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .all(|(w, o)| w & !o == 0))
    }

    /// All prefixes of members, the members included.
    pub fn prefixes(&self) -> TraceSet {
        let mut out = TraceSet::empty(&self.universe);
        for id in self.ids() {
            let digits = self.universe.decode(id);
            for len in 0..=digits.len() {
                out.insert(self.universe.encode(&digits[..len]));
            }
        }
        out
    }

    /// All in-universe extensions of members, the members included.
    pub fn extensions(&self) -> TraceSet {
        let mut out = TraceSet::empty(&self.universe);
        for id in 0..self.universe.total {
            let digits = self.universe.decode(id);
            let is_ext = (0..=digits.len())
                .any(|len| self.contains(self.universe.encode(&digits[..len])));
            if is_ext {
                out.insert(id);
            }
        }
        out
    }

    /// The definitive prefixes: traces all of whose extensions are prefixes
    /// of members.
    pub fn definitive_prefixes(&self) -> TraceSet {
        let prefixes = self.prefixes();
        let mut out = TraceSet::empty(&self.universe);
        // A trace qualifies iff it is itself a prefix of the set and all its
        // children qualify; maximal traces have no children. Ids grow with
        // length, so one descending sweep settles everything.
        for id in (0..self.universe.total).rev() {
            if !prefixes.contains(id) {
                continue;
            }
            if self
                .universe
                .children(id)
                .iter()
                .all(|&child| out.contains(child))
            {
                out.insert(id);
            }
        }
        out
    }

    /// Whether the set equals its own definitive prefixes.
    pub fn is_definitive(&self) -> bool {
        *self == self.definitive_prefixes()
    }

    /// Definitive prefixes of the union: the join of definitive sets.
    pub fn definitive_union(sets: &[TraceSet]) -> Result<TraceSet, UniverseError> {
        let Some((first, rest)) = sets.split_first() else {
            return Err(UniverseError::MixedUniverse);
        };
        let mut acc = first.clone();
        for set in rest {
            acc = acc.union(set)?;
        }
        Ok(acc.definitive_prefixes())
    }

    /// Restriction of a definitive set to its maximal traces: the linear-time
    /// property it denotes.
    pub fn maximal_part(&self) -> Result<TraceSet, UniverseError> {
        if !self.is_definitive() {
            return Err(UniverseError::NotDefinitive);
        }
        Ok(TraceSet::from_ids(
            &self.universe,
            self.ids().filter(|&id| self.universe.is_maximal(id)),
        ))
    }

    /// Definitive closure of a set of maximal traces: the definitive set
    /// denoting the property.
    pub fn definitive_closure(property: &TraceSet) -> Result<TraceSet, UniverseError> {
        if property.ids().any(|id| !property.universe.is_maximal(id)) {
            return Err(UniverseError::NotAProperty);
        }
        Ok(property.definitive_prefixes())
    }

    /// All universe traces whose tail (trace minus its first state) lies in
    /// this set. States prepended to maximal traces would exceed the horizon
    /// and are simply absent.
    pub fn prepend(&self) -> TraceSet {
        let mut out = TraceSet::empty(&self.universe);
        for id in 0..self.universe.total {
            if self.contains(self.universe.tail(id)) {
                out.insert(id);
            }
        }
        out
    }
}

impl fmt::Debug for TraceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut set = f.debug_set();
        for id in self.ids() {
            set.entry(&self.universe.decode(id));
        }
        set.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::PropName;

    /// Universe over two singleton-proposition states A and B, horizon 2.
    fn two_state_universe(horizon: usize) -> Arc<BoundedUniverse> {
        let a = State::new([PropName::new("a").unwrap()]);
        let b = State::new([PropName::new("b").unwrap()]);
        BoundedUniverse::new(vec![a, b], horizon).unwrap()
    }

    const A: usize = 0;
    const B: usize = 1;

    #[test]
    fn universe_enumeration() {
        let u = two_state_universe(2);
        assert_eq!(u.trace_count(), 7);
        assert_eq!(u.encode(&[]), 0);
        assert_eq!(u.decode(u.encode(&[A, B])), vec![A, B]);
        for id in 0..u.trace_count() {
            assert_eq!(u.encode(&u.decode(id)), id);
        }
    }

    #[test]
    fn prefixes_examples() {
        let u = two_state_universe(2);
        let x = TraceSet::from_traces(&u, [vec![A, B]]);
        let expected = TraceSet::from_traces(&u, [vec![], vec![A], vec![A, B]]);
        assert_eq!(x.prefixes(), expected);
        assert!(TraceSet::empty(&u).prefixes().is_empty());
        let two = TraceSet::from_traces(&u, [vec![A], vec![B]]);
        let expected = TraceSet::from_traces(&u, [vec![], vec![A], vec![B]]);
        assert_eq!(two.prefixes(), expected);
    }

    #[test]
    fn extensions_examples() {
        let u = two_state_universe(2);
        let x = TraceSet::from_traces(&u, [vec![A]]);
        let expected = TraceSet::from_traces(&u, [vec![A], vec![A, A], vec![A, B]]);
        assert_eq!(x.extensions(), expected);
        let eps = TraceSet::from_traces(&u, [vec![]]);
        assert_eq!(eps.extensions(), TraceSet::full(&u));
        let max = TraceSet::from_traces(&u, [vec![A, A]]);
        assert_eq!(max.extensions(), max);
    }

    /// All traces starting with the given state.
    fn starting_with(u: &Arc<BoundedUniverse>, first: usize) -> TraceSet {
        TraceSet::from_ids(
            u,
            (0..u.trace_count()).filter(|&id| u.decode(id).first() == Some(&first)),
        )
    }

    #[test]
    fn definitive_prefix_examples() {
        let u = two_state_universe(2);
        let xa = starting_with(&u, A);
        let xb = starting_with(&u, B);

        // The union of "starts with A" and "starts with B" gains the empty
        // trace: every extension of it begins with A or B.
        let union = xa.union(&xb).unwrap();
        assert!(union.definitive_prefixes().contains(u.encode(&[])));

        // Definitive sets are fixed by the operator.
        assert!(xa.is_definitive());
        assert_eq!(xa.definitive_prefixes(), xa);

        let single = TraceSet::from_traces(&u, [vec![A, B]]);
        assert_eq!(single.definitive_prefixes(), single);
    }

    #[test]
    fn is_definitive_examples() {
        let u = two_state_universe(2);
        assert!(TraceSet::empty(&u).is_definitive());
        assert!(TraceSet::full(&u).is_definitive());
        assert!(!TraceSet::from_traces(&u, [vec![A]]).is_definitive());
    }

    #[test]
    fn definitive_union_examples() {
        let u = two_state_universe(2);
        let xa = starting_with(&u, A);
        let xb = starting_with(&u, B);
        let joined = TraceSet::definitive_union(&[xa.clone(), xb]).unwrap();
        assert_eq!(joined, TraceSet::full(&u));

        let empty = TraceSet::empty(&u);
        assert_eq!(
            TraceSet::definitive_union(&[empty.clone(), empty.clone()]).unwrap(),
            empty
        );
        assert_eq!(TraceSet::definitive_union(&[xa.clone()]).unwrap(), xa);
    }

    #[test]
    fn mixed_universe_is_an_error() {
        let u2 = two_state_universe(2);
        let u3 = two_state_universe(3);
        let x = TraceSet::full(&u2);
        let y = TraceSet::full(&u3);
        assert_eq!(
            TraceSet::definitive_union(&[x, y]).unwrap_err(),
            UniverseError::MixedUniverse
        );
    }

    #[test]
    fn maximal_part_examples() {
        let u = two_state_universe(2);
        let full = TraceSet::full(&u);
        assert_eq!(
            full.maximal_part().unwrap(),
            TraceSet::from_traces(&u, [vec![A, A], vec![A, B], vec![B, A], vec![B, B]])
        );
        assert!(TraceSet::empty(&u).maximal_part().unwrap().is_empty());
        let xa = starting_with(&u, A);
        assert_eq!(
            xa.maximal_part().unwrap(),
            TraceSet::from_traces(&u, [vec![A, A], vec![A, B]])
        );
        let non_definitive = TraceSet::from_traces(&u, [vec![A]]);
        assert_eq!(
            non_definitive.maximal_part().unwrap_err(),
            UniverseError::NotDefinitive
        );
    }

    #[test]
    fn definitive_closure_examples() {
        let u = two_state_universe(2);
        let p = TraceSet::from_traces(&u, [vec![A, A], vec![A, B]]);
        assert_eq!(
            TraceSet::definitive_closure(&p).unwrap(),
            starting_with(&u, A)
        );
        let all_max = TraceSet::full(&u).maximal_part().unwrap();
        assert_eq!(
            TraceSet::definitive_closure(&all_max).unwrap(),
            TraceSet::full(&u)
        );
        assert!(TraceSet::definitive_closure(&TraceSet::empty(&u))
            .unwrap()
            .is_empty());
        let not_property = TraceSet::from_traces(&u, [vec![A]]);
        assert_eq!(
            TraceSet::definitive_closure(&not_property).unwrap_err(),
            UniverseError::NotAProperty
        );
    }

    #[test]
    fn prepend_examples() {
        let u = two_state_universe(2);
        assert_eq!(TraceSet::full(&u).prepend(), TraceSet::full(&u));
        let eps = TraceSet::from_traces(&u, [vec![]]);
        assert_eq!(
            eps.prepend(),
            TraceSet::from_traces(&u, [vec![], vec![A], vec![B]])
        );
        assert!(TraceSet::empty(&u).prepend().is_empty());
    }

    #[test]
    fn trivial_atom_universe() {
        // A single possible state makes every declared proposition trivial;
        // the lattice laws must still hold.
        let only = State::new([PropName::new("a").unwrap()]);
        let u = BoundedUniverse::new(vec![only], 3).unwrap();
        assert_eq!(u.trace_count(), 4);
        for ids in 0u32..16 {
            let x = TraceSet::from_ids(&u, (0..4).filter(|i| ids & (1 << i) != 0));
            let dp = x.definitive_prefixes();
            assert!(dp.is_subset(&x.prefixes()).unwrap());
            assert_eq!(dp.definitive_prefixes(), dp);
            if x.is_definitive() {
                assert!(x.prepend().is_definitive());
            }
        }
    }

    #[test]
    fn universe_validation() {
        let a = State::new([PropName::new("a").unwrap()]);
        assert_eq!(
            BoundedUniverse::new(vec![a.clone()], 0).unwrap_err(),
            UniverseError::ZeroHorizon
        );
        assert_eq!(
            BoundedUniverse::new(vec![a.clone(), a], 1).unwrap_err(),
            UniverseError::DuplicateState
        );
    }
}
