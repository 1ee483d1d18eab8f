//! Generalized Büchi automata via a declarative closure tableau.
//!
//! Nodes are locally consistent obligation sets over the interned negation
//! normal form of the formula. Conjunctions expand into both conjuncts,
//! disjunctions branch, until and release expand by their unfolding laws with
//! the postponed copy guarded behind a next-obligation, and next-obligations
//! are discharged on the transition. One acceptance set per until subformula
//! holds the nodes where that until is fulfilled or absent.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use crate::automata::nnf::{to_nnf, NnfFormula};
use crate::automata::AutomataError;
use crate::limits::Limits;
use crate::syntax::Formula;
use crate::trace::{Alphabet, FiniteTrace, LassoTrace, State};

// Beyond this many propositions the per-letter tables stop being sensible.
pub(crate) const MAX_AUTOMATON_PROPS: usize = 20;

/// Interned NNF node; children are arena ids, literals are alphabet indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Item {
    True,
    False,
    Lit(u32, bool),
    And(u32, u32),
    Or(u32, u32),
    Next(u32),
    Until(u32, u32),
    Release(u32, u32),
}

#[derive(Debug, Default)]
pub(crate) struct Arena {
    items: Vec<Item>,
    ids: HashMap<Item, u32>,
}

impl Arena {
    fn intern(&mut self, item: Item) -> u32 {
        if let Some(&id) = self.ids.get(&item) {
            return id;
        }
        let id = self.items.len() as u32;
        self.items.push(item);
        self.ids.insert(item, id);
        id
    }

    fn lookup(&self, item: Item) -> Option<u32> {
        self.ids.get(&item).copied()
    }

    pub(crate) fn get(&self, id: u32) -> Item {
        self.items[id as usize]
    }

    fn intern_formula(&mut self, f: &NnfFormula, alph: &Alphabet) -> Result<u32, AutomataError> {
        let item = match f {
            NnfFormula::True => Item::True,
            NnfFormula::False => Item::False,
            NnfFormula::Lit(name, positive) => {
                let index = alph
                    .index_of(name)
                    .ok_or_else(|| AutomataError::AlphabetMismatch(name.clone()))?;
                Item::Lit(index as u32, *positive)
            }
            NnfFormula::And(l, r) => Item::And(
                self.intern_formula(l, alph)?,
                self.intern_formula(r, alph)?,
            ),
            NnfFormula::Or(l, r) => Item::Or(
                self.intern_formula(l, alph)?,
                self.intern_formula(r, alph)?,
            ),
            NnfFormula::Next(c) => Item::Next(self.intern_formula(c, alph)?),
            NnfFormula::Until(l, r) => Item::Until(
                self.intern_formula(l, alph)?,
                self.intern_formula(r, alph)?,
            ),
            NnfFormula::Release(l, r) => Item::Release(
                self.intern_formula(l, alph)?,
                self.intern_formula(r, alph)?,
            ),
        };
        Ok(self.intern(item))
    }

    /// Human-readable rendering of an interned formula.
    pub(crate) fn display(&self, id: u32, alph: &Alphabet) -> String {
        match self.get(id) {
            Item::True => "true".into(),
            Item::False => "false".into(),
            Item::Lit(p, positive) => {
                let name = &alph.props()[p as usize];
                if positive {
                    name.to_string()
                } else {
                    format!("!{name}")
                }
            }
            Item::And(l, r) => format!("({} & {})", self.display(l, alph), self.display(r, alph)),
            Item::Or(l, r) => format!("({} | {})", self.display(l, alph), self.display(r, alph)),
            Item::Next(c) => format!("X {}", self.display(c, alph)),
            Item::Until(l, r) => {
                format!("({} U {})", self.display(l, alph), self.display(r, alph))
            }
            Item::Release(l, r) => {
                format!("({} R {})", self.display(l, alph), self.display(r, alph))
            }
        }
    }
}

/// Set of automaton node ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    bits: Vec<u64>,
}

impl NodeSet {
    pub(crate) fn new(node_count: usize) -> Self {
        NodeSet {
            bits: vec![0; node_count.div_ceil(64)],
        }
    }

    pub(crate) fn insert(&mut self, id: usize) {
        self.bits[id / 64] |= 1 << (id % 64);
    }

    pub fn contains(&self, id: usize) -> bool {
        self.bits
            .get(id / 64)
            .is_some_and(|w| w & (1 << (id % 64)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64).filter_map(move |b| (w & (1 << b) != 0).then_some(wi * 64 + b))
        })
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let ids: Vec<usize> = iter.into_iter().collect();
        let max = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut set = NodeSet::new(max);
        for id in ids {
            set.insert(id);
        }
        set
    }
}

#[derive(Debug)]
pub(crate) struct GbaNode {
    /// Every formula accumulated while expanding this node.
    pub(crate) members: Vec<u32>,
    /// Literal constraints a state must satisfy to leave this node.
    pub(crate) pos_mask: u64,
    pub(crate) neg_mask: u64,
    /// Nodes expanding the next-obligations.
    pub(crate) succs: Vec<usize>,
}

/// A generalized Büchi automaton for an LTL formula over an explicit
/// alphabet. Immutable once built; freely shareable across threads.
#[derive(Debug)]
pub struct Gba {
    alphabet: Alphabet,
    pub(crate) arena: Arena,
    pub(crate) nodes: Vec<GbaNode>,
    initial: Vec<usize>,
    /// Arena ids of the until subformulas, parallel to `acceptance`.
    untils: Vec<u32>,
    acceptance: Vec<NodeSet>,
    live: OnceLock<Vec<bool>>,
}

/// Expand one obligation set into every locally consistent node content.
fn expansions(arena: &Arena, seed: &[u32]) -> Vec<Vec<u32>> {
    struct Branch {
        members: BTreeSet<u32>,
        todo: Vec<u32>,
    }

    // Returns false when the branch became inconsistent.
    fn add(arena: &Arena, branch: &mut Branch, id: u32) -> bool {
        if !branch.members.insert(id) {
            return true;
        }
        match arena.get(id) {
            Item::False => return false,
            Item::Lit(p, positive) => {
                if let Some(opposite) = arena.lookup(Item::Lit(p, !positive)) {
                    if branch.members.contains(&opposite) {
                        return false;
                    }
                }
            }
            _ => {}
        }
        branch.todo.push(id);
        true
    }

    let mut stack = vec![Branch {
        members: BTreeSet::new(),
        todo: Vec::new(),
    }];
    for &id in seed {
        let branch = stack.last_mut().unwrap();
        if !add(arena, branch, id) {
            return Vec::new();
        }
    }

    let mut done: Vec<Vec<u32>> = Vec::new();
    'branches: while let Some(mut branch) = stack.pop() {
        while let Some(id) = branch.todo.pop() {
            match arena.get(id) {
                Item::True | Item::False | Item::Lit(..) | Item::Next(_) => {}
                Item::And(l, r) => {
                    if !add(arena, &mut branch, l) || !add(arena, &mut branch, r) {
                        continue 'branches;
                    }
                }
                Item::Or(l, r) => {
                    let mut right = Branch {
                        members: branch.members.clone(),
                        todo: branch.todo.clone(),
                    };
                    if add(arena, &mut right, r) {
                        stack.push(right);
                    }
                    if !add(arena, &mut branch, l) {
                        continue 'branches;
                    }
                }
                Item::Until(l, r) => {
                    // Fulfil now, or hold the left side and postpone.
                    let postponed = arena.lookup(Item::Next(id)).expect("wrapper interned");
                    let mut hold = Branch {
                        members: branch.members.clone(),
                        todo: branch.todo.clone(),
                    };
                    if add(arena, &mut hold, l) && add(arena, &mut hold, postponed) {
                        stack.push(hold);
                    }
                    if !add(arena, &mut branch, r) {
                        continue 'branches;
                    }
                }
                Item::Release(l, r) => {
                    // The right side holds now; release either fulfils with
                    // the left side or persists.
                    let postponed = arena.lookup(Item::Next(id)).expect("wrapper interned");
                    let mut persist = Branch {
                        members: branch.members.clone(),
                        todo: branch.todo.clone(),
                    };
                    if add(arena, &mut persist, r) && add(arena, &mut persist, postponed) {
                        stack.push(persist);
                    }
                    if !add(arena, &mut branch, l) || !add(arena, &mut branch, r) {
                        continue 'branches;
                    }
                }
            }
        }
        let content: Vec<u32> = branch.members.iter().copied().collect();
        if !done.contains(&content) {
            done.push(content);
        }
    }
    done
}

impl Gba {
    pub(crate) fn build(
        formula: &Formula,
        alphabet: &Alphabet,
        limits: &Limits,
    ) -> Result<Gba, AutomataError> {
        if alphabet.len() > MAX_AUTOMATON_PROPS {
            return Err(AutomataError::BudgetExceeded {
                resource: "alphabet propositions",
                limit: MAX_AUTOMATON_PROPS,
            });
        }
        let nnf = to_nnf(formula);
        let mut arena = Arena::default();
        let root = arena.intern_formula(&nnf, alphabet)?;
        // Pre-intern the postponed copies so expansion can stay immutable.
        for id in 0..arena.items.len() as u32 {
            if matches!(arena.get(id), Item::Until(..) | Item::Release(..)) {
                arena.intern(Item::Next(id));
            }
        }
        let untils: Vec<u32> = (0..arena.items.len() as u32)
            .filter(|&id| matches!(arena.get(id), Item::Until(..)))
            .collect();

        let mut nodes: Vec<GbaNode> = Vec::new();
        let mut table: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut expansion_memo: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
        let mut worklist: VecDeque<usize> = VecDeque::new();

        let mut instantiate = |contents: Vec<Vec<u32>>,
                               nodes: &mut Vec<GbaNode>,
                               worklist: &mut VecDeque<usize>|
         -> Result<Vec<usize>, AutomataError> {
            let mut ids = Vec::with_capacity(contents.len());
            for content in contents {
                let id = match table.get(&content) {
                    Some(&id) => id,
                    None => {
                        let id = nodes.len();
                        if id >= limits.max_gba_nodes {
                            return Err(AutomataError::BudgetExceeded {
                                resource: "tableau nodes",
                                limit: limits.max_gba_nodes,
                            });
                        }
                        let mut pos_mask = 0u64;
                        let mut neg_mask = 0u64;
                        for &m in &content {
                            if let Item::Lit(p, positive) = arena.get(m) {
                                if positive {
                                    pos_mask |= 1 << p;
                                } else {
                                    neg_mask |= 1 << p;
                                }
                            }
                        }
                        table.insert(content.clone(), id);
                        nodes.push(GbaNode {
                            members: content,
                            pos_mask,
                            neg_mask,
                            succs: Vec::new(),
                        });
                        worklist.push_back(id);
                        id
                    }
                };
                ids.push(id);
            }
            Ok(ids)
        };

        let initial = instantiate(expansions(&arena, &[root]), &mut nodes, &mut worklist)?;
        while let Some(id) = worklist.pop_front() {
            let mut obligations: Vec<u32> = nodes[id]
                .members
                .iter()
                .filter_map(|&m| match arena.get(m) {
                    Item::Next(c) => Some(c),
                    _ => None,
                })
                .collect();
            obligations.sort_unstable();
            obligations.dedup();
            let succs = match expansion_memo.get(&obligations) {
                Some(succs) => succs.clone(),
                None => {
                    let succs =
                        instantiate(expansions(&arena, &obligations), &mut nodes, &mut worklist)?;
                    expansion_memo.insert(obligations, succs.clone());
                    succs
                }
            };
            nodes[id].succs = succs;
        }

        let acceptance = untils
            .iter()
            .map(|&u| {
                let Item::Until(_, r) = arena.get(u) else {
                    unreachable!()
                };
                let mut set = NodeSet::new(nodes.len());
                for (id, node) in nodes.iter().enumerate() {
                    let has_until = node.members.binary_search(&u).is_ok();
                    let fulfilled = node.members.binary_search(&r).is_ok();
                    if !has_until || fulfilled {
                        set.insert(id);
                    }
                }
                set
            })
            .collect();

        Ok(Gba {
            alphabet: alphabet.clone(),
            arena,
            nodes,
            initial,
            untils,
            acceptance,
            live: OnceLock::new(),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    /// One set per until subformula in the closure.
    pub fn acceptance_sets(&self) -> &[NodeSet] {
        &self.acceptance
    }

    /// The obligation set labelling a node, rendered for display.
    pub fn node_label(&self, id: usize) -> Vec<String> {
        self.nodes[id]
            .members
            .iter()
            .map(|&m| self.arena.display(m, &self.alphabet))
            .collect()
    }

    pub(crate) fn state_mask(&self, state: &State) -> Result<u64, AutomataError> {
        self.alphabet.state_mask(state).ok_or_else(|| {
            let unknown = state
                .iter()
                .find(|p| !self.alphabet.contains(p))
                .expect("some proposition is undeclared")
                .clone();
            AutomataError::AlphabetMismatch(unknown)
        })
    }

    pub(crate) fn compatible(&self, node: usize, mask: u64) -> bool {
        let n = &self.nodes[node];
        n.pos_mask & mask == n.pos_mask && n.neg_mask & mask == 0
    }

    /// Successors of `node` when reading `state`.
    pub fn transitions(&self, node: usize, state: &State) -> Result<&[usize], AutomataError> {
        let mask = self.state_mask(state)?;
        if self.compatible(node, mask) {
            Ok(&self.nodes[node].succs)
        } else {
            Ok(&[])
        }
    }

    /// Nodes from which some accepting run exists.
    pub(crate) fn live(&self) -> &[bool] {
        self.live.get_or_init(|| {
            let adj: Vec<&[usize]> = self.nodes.iter().map(|n| n.succs.as_slice()).collect();
            let scc = StronglyConnected::of(&adj);
            let accepting = accepting_components(&scc, &adj, &self.acceptance, |v| v);
            // Live = can reach a node of an accepting component.
            let mut preds: Vec<Vec<usize>> = vec![Vec::new(); adj.len()];
            for (v, succs) in adj.iter().enumerate() {
                for &w in *succs {
                    preds[w].push(v);
                }
            }
            let mut live = vec![false; adj.len()];
            let mut queue: VecDeque<usize> = VecDeque::new();
            for v in 0..adj.len() {
                if accepting[scc.comp[v]] {
                    live[v] = true;
                    queue.push_back(v);
                }
            }
            while let Some(v) = queue.pop_front() {
                for &u in &preds[v] {
                    if !live[u] {
                        live[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            live
        })
    }

    /// Whether no accepting run starts at any of the given nodes.
    pub fn is_empty_from(&self, from: impl IntoIterator<Item = usize>) -> bool {
        let live = self.live();
        from.into_iter().all(|id| !live[id])
    }

    /// Whether the automaton's language is empty.
    pub fn is_empty(&self) -> bool {
        self.is_empty_from(self.initial.iter().copied())
    }

    /// Advance a node set by one observed state.
    pub(crate) fn advance(&self, current: &NodeSet, mask: u64) -> NodeSet {
        let mut next = NodeSet::new(self.nodes.len());
        for q in current.iter() {
            if self.compatible(q, mask) {
                for &s in &self.nodes[q].succs {
                    next.insert(s);
                }
            }
        }
        next
    }

    /// Node set reached by reading the whole finite trace from the start.
    pub fn read(&self, t: &FiniteTrace) -> Result<NodeSet, AutomataError> {
        let mut current = NodeSet::new(self.nodes.len());
        for &id in &self.initial {
            current.insert(id);
        }
        for state in t.iter() {
            let mask = self.state_mask(state)?;
            current = self.advance(&current, mask);
        }
        Ok(current)
    }

    /// Whether some run over the lasso visits every acceptance set
    /// infinitely often.
    pub fn accepts(&self, t: &LassoTrace) -> Result<bool, AutomataError> {
        let positions = t.stem().len() + t.cycle().len();
        let masks: Vec<u64> = (0..positions)
            .map(|i| self.state_mask(t.state_at(i)))
            .collect::<Result<_, _>>()?;
        let next_pos = |i: usize| if i + 1 < positions { i + 1 } else { t.stem().len() };
        let n = self.nodes.len();
        let product = positions * n;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); product];
        for pos in 0..positions {
            for q in 0..n {
                if self.compatible(q, masks[pos]) {
                    let target_pos = next_pos(pos);
                    adj[pos * n + q].extend(
                        self.nodes[q].succs.iter().map(|&s| target_pos * n + s),
                    );
                }
            }
        }
        // Position 0 pairs with each initial node.
        let initial: Vec<usize> = self.initial.clone();
        Ok(has_accepting_run(&adj, &initial, &self.acceptance, |id| {
            id % n
        }))
    }
}

pub(crate) struct StronglyConnected {
    pub(crate) comp: Vec<usize>,
    pub(crate) count: usize,
}

impl StronglyConnected {
    /// Iterative Tarjan over an adjacency list.
    pub(crate) fn of(adj: &[&[usize]]) -> StronglyConnected {
        let n = adj.len();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut comp = vec![UNSEEN; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut next_index = 0usize;
        let mut count = 0usize;

        for start in 0..n {
            if index[start] != UNSEEN {
                continue;
            }
            index[start] = next_index;
            low[start] = next_index;
            next_index += 1;
            stack.push(start);
            on_stack[start] = true;
            call.push((start, 0));

            while let Some(frame) = call.last_mut() {
                let (v, child) = *frame;
                if child < adj[v].len() {
                    frame.1 += 1;
                    let w = adj[v][child];
                    if index[w] == UNSEEN {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(parent) = call.last() {
                        let p = parent.0;
                        low[p] = low[p].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp[w] = count;
                            if w == v {
                                break;
                            }
                        }
                        count += 1;
                    }
                }
            }
        }
        StronglyConnected { comp, count }
    }
}

/// Components that contain an edge and intersect every acceptance set.
/// `project` maps a graph node to the id tested against the sets.
fn accepting_components(
    scc: &StronglyConnected,
    adj: &[&[usize]],
    acceptance: &[NodeSet],
    project: impl Fn(usize) -> usize,
) -> Vec<bool> {
    let mut internal_edge = vec![false; scc.count];
    for (v, succs) in adj.iter().enumerate() {
        for &w in *succs {
            if scc.comp[v] == scc.comp[w] {
                internal_edge[scc.comp[v]] = true;
            }
        }
    }
    let mut misses = vec![acceptance.len(); scc.count];
    for set in acceptance {
        let mut seen = vec![false; scc.count];
        for v in 0..adj.len() {
            let comp = scc.comp[v];
            if !seen[comp] && set.contains(project(v)) {
                seen[comp] = true;
                misses[comp] -= 1;
            }
        }
    }
    (0..scc.count)
        .map(|c| internal_edge[c] && misses[c] == 0)
        .collect()
}

/// Generalized Büchi emptiness on an explicit graph: some component
/// reachable from `initial` must contain an edge and intersect every
/// acceptance set (under `project`).
fn has_accepting_run(
    adj: &[Vec<usize>],
    initial: &[usize],
    acceptance: &[NodeSet],
    project: impl Fn(usize) -> usize,
) -> bool {
    let mut reachable = vec![false; adj.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &v in initial {
        if !reachable[v] {
            reachable[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !reachable[w] {
                reachable[w] = true;
                queue.push_back(w);
            }
        }
    }

    let slices: Vec<&[usize]> = adj.iter().map(|v| v.as_slice()).collect();
    let scc = StronglyConnected::of(&slices);
    let accepting = accepting_components(&scc, &slices, acceptance, project);
    (0..adj.len()).any(|v| reachable[v] && accepting[scc.comp[v]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::syntax::PropName;

    fn alph(names: &[&str]) -> Alphabet {
        Alphabet::from_names(names).unwrap()
    }

    fn st(names: &[&str]) -> State {
        State::new(names.iter().map(|n| PropName::new(*n).unwrap()))
    }

    fn lasso(stem: &[State], cycle: &[State]) -> LassoTrace {
        LassoTrace::new(
            FiniteTrace::new(stem.to_vec()),
            FiniteTrace::new(cycle.to_vec()),
        )
    }

    fn gba(text: &str, names: &[&str]) -> Gba {
        Gba::build(&parse(text).unwrap(), &alph(names), &Limits::default()).unwrap()
    }

    #[test]
    fn eventually_accepts_and_rejects() {
        let a = gba("F a", &["a"]);
        assert!(a.accepts(&lasso(&[], &[st(&["a"])])).unwrap());
        assert!(!a.accepts(&lasso(&[], &[st(&[])])).unwrap());
        assert!(a.accepts(&lasso(&[st(&[])], &[st(&["a"])])).unwrap());
    }

    #[test]
    fn contradiction_is_empty() {
        assert!(gba("!true", &["a"]).is_empty());
        assert!(gba("a & !a", &["a"]).is_empty());
        assert!(!gba("F a", &["a"]).is_empty());
    }

    #[test]
    fn always_accepts_only_constant_lasso() {
        let a = gba("G a", &["a"]);
        assert!(a.accepts(&lasso(&[], &[st(&["a"])])).unwrap());
        assert!(!a.accepts(&lasso(&[], &[st(&[])])).unwrap());
        assert!(!a.accepts(&lasso(&[st(&["a"])], &[st(&["a"]), st(&[])])).unwrap());
    }

    #[test]
    fn infinitely_often_matches_classic_evaluation() {
        let a = gba("G F p", &["p"]);
        assert!(a.accepts(&lasso(&[], &[st(&["p"]), st(&[])])).unwrap());
        assert!(!a.accepts(&lasso(&[st(&["p"])], &[st(&[])])).unwrap());
    }

    #[test]
    fn acceptance_sets_follow_until_count() {
        assert_eq!(gba("a U b", &["a", "b"]).acceptance_sets().len(), 1);
        assert_eq!(gba("(a U b) & F a", &["a", "b"]).acceptance_sets().len(), 2);
        assert_eq!(gba("X a", &["a"]).acceptance_sets().len(), 0);
        // Structurally shared untils intern to a single closure entry.
        assert_eq!(gba("(a U b) | (a U b)", &["a", "b"]).acceptance_sets().len(), 1);
    }

    #[test]
    fn alphabet_mismatch_reported() {
        let e = Gba::build(&parse("F z").unwrap(), &alph(&["a"]), &Limits::default());
        assert!(matches!(e, Err(AutomataError::AlphabetMismatch(_))));
        let a = gba("F a", &["a"]);
        assert!(matches!(
            a.accepts(&lasso(&[], &[st(&["zzz"])])),
            Err(AutomataError::AlphabetMismatch(_))
        ));
    }

    #[test]
    fn node_budget_is_enforced() {
        let tight = Limits {
            max_gba_nodes: 1,
            ..Limits::default()
        };
        let e = Gba::build(&parse("F a | G b").unwrap(), &alph(&["a", "b"]), &tight);
        assert!(matches!(
            e,
            Err(AutomataError::BudgetExceeded { resource: "tableau nodes", .. })
        ));
    }
}
