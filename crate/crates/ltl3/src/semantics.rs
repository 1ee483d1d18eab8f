//! Decision procedures for conventional LTL over lasso traces.
//!
//! [`eval_classic`] decides the standard satisfaction relation by a least
//! fixpoint over the lasso's finitely many positions. [`eval_polar`] decides
//! membership in the answer-indexed trace families by structural recursion
//! carrying the desired answer; the two agree ([`eval_polar`] at
//! [`Answer::True`] equals [`eval_classic`], and at [`Answer::False`] its
//! negation), which the test suite checks exhaustively on small inputs.

use std::fmt;

use thiserror::Error;

use crate::syntax::{Formula, PropName};
use crate::trace::{Alphabet, LassoTrace};

/// The two-valued answer carried through polar evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    True,
    False,
}

impl Answer {
    pub fn flip(self) -> Answer {
        match self {
            Answer::True => Answer::False,
            Answer::False => Answer::True,
        }
    }
}

/// Three-valued monitoring verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    /// Exchange `T` and `F`; fix `?`. The verdict of a negated formula.
    pub fn negated(self) -> Verdict {
        match self {
            Verdict::True => Verdict::False,
            Verdict::False => Verdict::True,
            Verdict::Unknown => Verdict::Unknown,
        }
    }

    pub fn is_definitive(self) -> bool {
        self != Verdict::Unknown
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "T",
            Verdict::False => "F",
            Verdict::Unknown => "?",
        })
    }
}

impl std::str::FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(Verdict::True),
            "F" => Ok(Verdict::False),
            "?" => Ok(Verdict::Unknown),
            other => Err(format!("expected T, F or ?, got {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("proposition {0} is not in the alphabet")]
    UnknownProposition(PropName),
}

fn check_vocabulary(
    f: &Formula,
    t: &LassoTrace,
    alphabet: &Alphabet,
) -> Result<(), SemanticsError> {
    for prop in f.props() {
        if !alphabet.contains(&prop) {
            return Err(SemanticsError::UnknownProposition(prop));
        }
    }
    for state in t.all_states() {
        for prop in state.iter() {
            if !alphabet.contains(prop) {
                return Err(SemanticsError::UnknownProposition(prop.clone()));
            }
        }
    }
    Ok(())
}

/// Post-order list of subformulas; parents follow their children.
fn subformulas(f: &Formula) -> Vec<&Formula> {
    fn go<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::Top | Formula::Atom(_) => {}
            Formula::Not(c) | Formula::Next(c) => go(c, out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Until(l, r) => {
                go(l, out);
                go(r, out);
            }
        }
        out.push(f);
    }
    let mut out = Vec::new();
    go(f, &mut out);
    out
}

/// Whether the lasso satisfies the formula under conventional LTL semantics.
///
/// Positions `0 .. |stem| + |loop|` with the loop back-edge form a finite
/// graph; until is evaluated as a least fixpoint over this position set,
/// innermost subformulas first, and the result is read at position 0.
pub fn eval_classic(
    t: &LassoTrace,
    f: &Formula,
    alphabet: &Alphabet,
) -> Result<bool, SemanticsError> {
    check_vocabulary(f, t, alphabet)?;
    Ok(eval_classic_unchecked(t, f))
}

pub(crate) fn eval_classic_unchecked(t: &LassoTrace, f: &Formula) -> bool {
    let n = t.stem().len() + t.cycle().len();
    let next = |i: usize| if i + 1 < n { i + 1 } else { t.stem().len() };
    let subs = subformulas(f);
    // Memo table indexed by (subformula, position). Subformula identity is
    // by node here, not by structure; duplicates cost a little extra work.
    let mut table: Vec<Vec<bool>> = Vec::with_capacity(subs.len());
    let mut index_of = std::collections::HashMap::new();
    for (idx, sub) in subs.iter().enumerate() {
        index_of.insert(*sub as *const Formula, idx);
        let child = |c: &Formula| index_of[&(c as *const Formula)];
        let row: Vec<bool> = match sub {
            Formula::Top => vec![true; n],
            Formula::Atom(name) => (0..n).map(|i| t.state_at(i).contains(name)).collect(),
            Formula::Not(c) => {
                let c = child(c);
                (0..n).map(|i| !table[c][i]).collect()
            }
            Formula::And(l, r) => {
                let (l, r) = (child(l), child(r));
                (0..n).map(|i| table[l][i] && table[r][i]).collect()
            }
            Formula::Or(l, r) => {
                let (l, r) = (child(l), child(r));
                (0..n).map(|i| table[l][i] || table[r][i]).collect()
            }
            Formula::Next(c) => {
                let c = child(c);
                (0..n).map(|i| table[c][next(i)]).collect()
            }
            Formula::Until(l, r) => {
                let (l, r) = (child(l), child(r));
                // Least fixpoint from all-false.
                let mut row = vec![false; n];
                loop {
                    let mut changed = false;
                    for i in (0..n).rev() {
                        let v = table[r][i] || (table[l][i] && row[next(i)]);
                        if v != row[i] {
                            row[i] = v;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                row
            }
        };
        table.push(row);
    }
    table.last().map(|row| row[0]).unwrap_or(true)
}

/// Whether the lasso belongs to the answer-indexed family of `f` at `ans`.
///
/// Structural recursion carrying the answer: negation flips it, conjunction
/// intersects at `True` and unites at `False`, disjunction dually, atoms test
/// the first state, next recurses on the dropped trace and until uses its
/// existential form at `True` and the complemented form at `False`.
pub fn eval_polar(
    t: &LassoTrace,
    f: &Formula,
    ans: Answer,
    alphabet: &Alphabet,
) -> Result<bool, SemanticsError> {
    check_vocabulary(f, t, alphabet)?;
    Ok(polar(t, f, ans))
}

fn polar(t: &LassoTrace, f: &Formula, ans: Answer) -> bool {
    match f {
        Formula::Top => ans == Answer::True,
        Formula::Atom(name) => match ans {
            Answer::True => t.state_at(0).contains(name),
            Answer::False => !t.state_at(0).contains(name),
        },
        Formula::Not(c) => polar(t, c, ans.flip()),
        Formula::And(l, r) => match ans {
            Answer::True => polar(t, l, ans) && polar(t, r, ans),
            Answer::False => polar(t, l, ans) || polar(t, r, ans),
        },
        Formula::Or(l, r) => match ans {
            Answer::True => polar(t, l, ans) || polar(t, r, ans),
            Answer::False => polar(t, l, ans) && polar(t, r, ans),
        },
        Formula::Next(c) => polar(&t.drop_prefix(1), c, ans),
        Formula::Until(l, r) => {
            // Suffixes of a lasso repeat with period |loop| past the stem, so
            // witnesses beyond |stem| + |loop| positions reduce to earlier ones.
            let bound = t.stem().len() + t.cycle().len();
            let suffix = |k: usize| t.drop_prefix(k);
            match ans {
                Answer::True => (0..=bound).any(|k| {
                    polar(&suffix(k), r, Answer::True)
                        && (0..k).all(|i| polar(&suffix(i), l, Answer::True))
                }),
                Answer::False => (0..=bound).all(|k| {
                    polar(&suffix(k), r, Answer::False)
                        || (0..k).any(|i| polar(&suffix(i), l, Answer::False))
                }),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::syntax::PropName;
    use crate::trace::{FiniteTrace, State};

    fn st(names: &[&str]) -> State {
        State::new(names.iter().map(|n| PropName::new(*n).unwrap()))
    }

    fn lasso(stem: &[State], cycle: &[State]) -> LassoTrace {
        LassoTrace::new(
            FiniteTrace::new(stem.to_vec()),
            FiniteTrace::new(cycle.to_vec()),
        )
    }

    fn alph(names: &[&str]) -> Alphabet {
        Alphabet::from_names(names).unwrap()
    }

    #[test]
    fn classic_examples() {
        let a = alph(&["a"]);
        let fa = parse("F a").unwrap();
        assert!(eval_classic(&lasso(&[], &[st(&["a"])]), &fa, &a).unwrap());
        assert!(!eval_classic(&lasso(&[], &[st(&[])]), &fa, &a).unwrap());

        let ra = alph(&["r", "a"]);
        let req_ack = parse("G (r -> F a)").unwrap();
        assert!(eval_classic(&lasso(&[st(&["r"])], &[st(&["a"])]), &req_ack, &ra).unwrap());

        let p = alph(&["p"]);
        let gfp = parse("G F p").unwrap();
        assert!(eval_classic(&lasso(&[], &[st(&["p"]), st(&[])]), &gfp, &p).unwrap());
        assert!(!eval_classic(&lasso(&[st(&["p"])], &[st(&[])]), &gfp, &p).unwrap());
    }

    #[test]
    fn polar_examples() {
        let a = alph(&["a"]);
        let atom = parse("a").unwrap();
        assert!(eval_polar(&lasso(&[], &[st(&["a"])]), &atom, Answer::True, &a).unwrap());
        assert!(eval_polar(&lasso(&[], &[st(&[])]), &atom, Answer::False, &a).unwrap());
        let neg = parse("!a").unwrap();
        assert!(!eval_polar(&lasso(&[], &[st(&["a"])]), &neg, Answer::True, &a).unwrap());
    }

    #[test]
    fn unknown_proposition_is_an_error() {
        let a = alph(&["a"]);
        let f = parse("F b").unwrap();
        let t = lasso(&[], &[st(&["a"])]);
        assert!(matches!(
            eval_classic(&t, &f, &a),
            Err(SemanticsError::UnknownProposition(_))
        ));
        let g = parse("F a").unwrap();
        let bad = lasso(&[], &[st(&["zzz"])]);
        assert!(eval_classic(&bad, &g, &a).is_err());
    }

    #[test]
    fn until_unfolding_law() {
        let ab = alph(&["a", "b"]);
        let f = parse("a U b").unwrap();
        let unfolded = parse("b | (a & X (a U b))").unwrap();
        for t in crate::enumeration::enumerate_lassos(&ab, 1, 2) {
            assert_eq!(
                eval_classic(&t, &f, &ab).unwrap(),
                eval_classic(&t, &unfolded, &ab).unwrap(),
            );
        }
    }

    #[test]
    fn next_matches_drop() {
        let ab = alph(&["a", "b"]);
        let f = parse("X (a U b)").unwrap();
        let inner = parse("a U b").unwrap();
        for t in crate::enumeration::enumerate_lassos(&ab, 2, 2) {
            assert_eq!(
                eval_classic(&t, &f, &ab).unwrap(),
                eval_classic(&t.drop_prefix(1), &inner, &ab).unwrap(),
            );
        }
    }
}
