//! Definition-faithful verdict oracle.
//!
//! The verdict of a formula on a finite trace is `T` when every infinite
//! extension satisfies it and `F` when every extension refutes it. The
//! oracle decides this directly: it runs the node sets of the automata for
//! the negated and the plain formula over the trace and asks emptiness from
//! the reached sets. It is deliberately independent of formula progression,
//! serving as the reference the other evaluation routes are checked against.

use crate::automata::gba::Gba;
use crate::automata::AutomataError;
use crate::limits::Limits;
use crate::semantics::Verdict;
use crate::syntax::Formula;
use crate::trace::{Alphabet, FiniteTrace};

/// Reusable oracle holding the two automata for one formula.
#[derive(Debug)]
pub struct VerdictOracle {
    plain: Gba,
    negated: Gba,
}

impl VerdictOracle {
    pub fn new(formula: &Formula, alphabet: &Alphabet) -> Result<Self, AutomataError> {
        Self::with_limits(formula, alphabet, &Limits::default())
    }

    pub fn with_limits(
        formula: &Formula,
        alphabet: &Alphabet,
        limits: &Limits,
    ) -> Result<Self, AutomataError> {
        Ok(VerdictOracle {
            plain: Gba::build(formula, alphabet, limits)?,
            negated: Gba::build(&Formula::not(formula.clone()), alphabet, limits)?,
        })
    }

    /// Verdict for a finite trace. The empty trace reads as the initial
    /// node sets, so its verdict reduces to validity or unsatisfiability.
    pub fn verdict(&self, t: &FiniteTrace) -> Result<Verdict, AutomataError> {
        let refuters = self.negated.read(t)?;
        if self.negated.is_empty_from(refuters.iter()) {
            return Ok(Verdict::True);
        }
        let satisfiers = self.plain.read(t)?;
        if self.plain.is_empty_from(satisfiers.iter()) {
            return Ok(Verdict::False);
        }
        Ok(Verdict::Unknown)
    }
}

/// One-shot convenience wrapper around [`VerdictOracle`].
pub fn verdict_oracle(
    formula: &Formula,
    t: &FiniteTrace,
    alphabet: &Alphabet,
) -> Result<Verdict, AutomataError> {
    VerdictOracle::new(formula, alphabet)?.verdict(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;
    use crate::syntax::PropName;
    use crate::trace::State;

    fn alph(names: &[&str]) -> Alphabet {
        Alphabet::from_names(names).unwrap()
    }

    fn st(names: &[&str]) -> State {
        State::new(names.iter().map(|n| PropName::new(*n).unwrap()))
    }

    fn trace(states: &[State]) -> FiniteTrace {
        FiniteTrace::new(states.to_vec())
    }

    #[test]
    fn empty_trace_verdicts() {
        let a = alph(&["a"]);
        let split = parse("F a | F !a").unwrap();
        assert_eq!(
            verdict_oracle(&split, &FiniteTrace::empty(), &a).unwrap(),
            Verdict::True
        );
        let bc = alph(&["b", "c"]);
        let unrelated = parse("F b | F !c").unwrap();
        assert_eq!(
            verdict_oracle(&unrelated, &FiniteTrace::empty(), &bc).unwrap(),
            Verdict::Unknown
        );
        assert_eq!(
            verdict_oracle(&parse("F a").unwrap(), &FiniteTrace::empty(), &a).unwrap(),
            Verdict::Unknown
        );
    }

    #[test]
    fn until_prefix_stays_unknown() {
        let pq = alph(&["p", "q"]);
        let f = parse("p U q").unwrap();
        let ppp = trace(&[st(&["p"]), st(&["p"]), st(&["p"])]);
        assert_eq!(verdict_oracle(&f, &ppp, &pq).unwrap(), Verdict::Unknown);
        let good = trace(&[st(&["p"]), st(&["p"]), st(&["q"])]);
        assert_eq!(verdict_oracle(&f, &good, &pq).unwrap(), Verdict::True);
        let bad = trace(&[st(&["p"]), st(&[])]);
        assert_eq!(verdict_oracle(&f, &bad, &pq).unwrap(), Verdict::False);
    }

    #[test]
    fn definitive_verdicts_appear() {
        let a = alph(&["a"]);
        let oracle = VerdictOracle::new(&parse("G a").unwrap(), &a).unwrap();
        assert_eq!(oracle.verdict(&trace(&[st(&["a"])])).unwrap(), Verdict::Unknown);
        assert_eq!(
            oracle.verdict(&trace(&[st(&["a"]), st(&[])])).unwrap(),
            Verdict::False
        );
        let oracle = VerdictOracle::new(&parse("F a").unwrap(), &a).unwrap();
        assert_eq!(oracle.verdict(&trace(&[st(&[])])).unwrap(), Verdict::Unknown);
        assert_eq!(
            oracle.verdict(&trace(&[st(&[]), st(&["a"])])).unwrap(),
            Verdict::True
        );
    }
}
