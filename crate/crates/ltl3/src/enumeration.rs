//! Exhaustive and seeded-random generators for formulas and traces.
//!
//! The exhaustive generators drive the equivalence sweeps: formulas are
//! enumerated by constructor count with no duplicates, traces in length-then
//! -lexicographic order so each trace follows its parent prefix.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::syntax::Formula;
use crate::trace::{Alphabet, FiniteTrace, LassoTrace, State};

/// All distinct formulas with at most `max_size` constructors over the
/// alphabet's atoms. Primitive constructors only.
pub fn enumerate_formulas(alphabet: &Alphabet, max_size: usize) -> Vec<Formula> {
    // by_size[s] holds every formula of exactly s constructors.
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(); max_size + 1];
    if max_size >= 1 {
        by_size[1].push(Formula::Top);
        for prop in alphabet.props() {
            by_size[1].push(Formula::atom(prop.clone()));
        }
    }
    for size in 2..=max_size {
        let mut batch = Vec::new();
        for f in &by_size[size - 1] {
            batch.push(Formula::not(f.clone()));
            batch.push(Formula::next(f.clone()));
        }
        for left_size in 1..size - 1 {
            let right_size = size - 1 - left_size;
            for l in &by_size[left_size] {
                for r in &by_size[right_size] {
                    batch.push(Formula::and(l.clone(), r.clone()));
                    batch.push(Formula::or(l.clone(), r.clone()));
                    batch.push(Formula::until(l.clone(), r.clone()));
                }
            }
        }
        by_size[size] = batch;
    }
    by_size.into_iter().flatten().collect()
}

/// All finite traces of length at most `max_len`, shortest first; every
/// trace appears after all of its prefixes.
pub fn enumerate_finite_traces(alphabet: &Alphabet, max_len: usize) -> Vec<FiniteTrace> {
    let states: Vec<State> = alphabet.states().collect();
    let mut out = vec![FiniteTrace::empty()];
    let mut frontier = vec![FiniteTrace::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * states.len());
        for t in &frontier {
            for s in &states {
                next.push(t.extended(s.clone()));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All lassos with `|stem| <= max_stem` and `1 <= |loop| <= max_loop`.
pub fn enumerate_lassos(alphabet: &Alphabet, max_stem: usize, max_loop: usize) -> Vec<LassoTrace> {
    let stems = enumerate_finite_traces(alphabet, max_stem);
    let cycles: Vec<FiniteTrace> = enumerate_finite_traces(alphabet, max_loop)
        .into_iter()
        .filter(|t| !t.is_empty())
        .collect();
    let mut out = Vec::with_capacity(stems.len() * cycles.len());
    for stem in &stems {
        for cycle in &cycles {
            out.push(LassoTrace::new(stem.clone(), cycle.clone()));
        }
    }
    out
}

/// Random state over the alphabet, each proposition independently fair.
pub fn random_state(rng: &mut impl Rng, alphabet: &Alphabet) -> State {
    State::new(
        alphabet
            .props()
            .iter()
            .filter(|_| rng.gen::<bool>())
            .cloned(),
    )
}

pub fn random_finite_trace(rng: &mut impl Rng, alphabet: &Alphabet, len: usize) -> FiniteTrace {
    (0..len).map(|_| random_state(rng, alphabet)).collect()
}

pub fn random_lasso(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    max_stem: usize,
    max_loop: usize,
) -> LassoTrace {
    let stem_len = rng.gen_range(0..=max_stem);
    let cycle_len = rng.gen_range(1..=max_loop.max(1));
    LassoTrace::new(
        random_finite_trace(rng, alphabet, stem_len),
        random_finite_trace(rng, alphabet, cycle_len),
    )
}

/// Random formula with exactly `size` constructors.
pub fn random_formula(rng: &mut impl Rng, alphabet: &Alphabet, size: usize) -> Formula {
    if size <= 1 {
        let atoms = alphabet.props();
        let pick = rng.gen_range(0..=atoms.len());
        return if pick == atoms.len() {
            Formula::Top
        } else {
            Formula::atom(atoms[pick].clone())
        };
    }
    if size == 2 || rng.gen_bool(0.4) {
        let inner = random_formula(rng, alphabet, size - 1);
        return if rng.gen::<bool>() {
            Formula::not(inner)
        } else {
            Formula::next(inner)
        };
    }
    let left_size = rng.gen_range(1..size - 1);
    let l = random_formula(rng, alphabet, left_size);
    let r = random_formula(rng, alphabet, size - 1 - left_size);
    match [0, 1, 2].choose(rng).unwrap() {
        0 => Formula::and(l, r),
        1 => Formula::or(l, r),
        _ => Formula::until(l, r),
    }
}
