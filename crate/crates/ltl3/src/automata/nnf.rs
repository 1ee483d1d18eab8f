//! Negation normal form.
//!
//! Negation is pushed to the literals using De Morgan and the until/release
//! duality `!(l U r) = !l R !r`. Release exists only here, as the automaton
//! construction's internal normal form; the public formula syntax has no
//! release constructor.

use std::fmt;

use crate::syntax::{Formula, PropName};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NnfFormula {
    True,
    False,
    /// A possibly negated atom; `positive: false` means the negation.
    Lit(PropName, bool),
    And(Box<NnfFormula>, Box<NnfFormula>),
    Or(Box<NnfFormula>, Box<NnfFormula>),
    Next(Box<NnfFormula>),
    Until(Box<NnfFormula>, Box<NnfFormula>),
    Release(Box<NnfFormula>, Box<NnfFormula>),
}

/// Convert to negation normal form. Semantically equivalent to the input.
pub fn to_nnf(f: &Formula) -> NnfFormula {
    positive(f)
}

fn positive(f: &Formula) -> NnfFormula {
    match f {
        Formula::Top => NnfFormula::True,
        Formula::Atom(name) => NnfFormula::Lit(name.clone(), true),
        Formula::Not(c) => negative(c),
        Formula::And(l, r) => NnfFormula::And(Box::new(positive(l)), Box::new(positive(r))),
        Formula::Or(l, r) => NnfFormula::Or(Box::new(positive(l)), Box::new(positive(r))),
        Formula::Next(c) => NnfFormula::Next(Box::new(positive(c))),
        Formula::Until(l, r) => NnfFormula::Until(Box::new(positive(l)), Box::new(positive(r))),
    }
}

fn negative(f: &Formula) -> NnfFormula {
    match f {
        Formula::Top => NnfFormula::False,
        Formula::Atom(name) => NnfFormula::Lit(name.clone(), false),
        Formula::Not(c) => positive(c),
        Formula::And(l, r) => NnfFormula::Or(Box::new(negative(l)), Box::new(negative(r))),
        Formula::Or(l, r) => NnfFormula::And(Box::new(negative(l)), Box::new(negative(r))),
        Formula::Next(c) => NnfFormula::Next(Box::new(negative(c))),
        Formula::Until(l, r) => NnfFormula::Release(Box::new(negative(l)), Box::new(negative(r))),
    }
}

impl fmt::Display for NnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NnfFormula::True => write!(f, "true"),
            NnfFormula::False => write!(f, "false"),
            NnfFormula::Lit(name, true) => write!(f, "{name}"),
            NnfFormula::Lit(name, false) => write!(f, "!{name}"),
            NnfFormula::And(l, r) => write!(f, "({l} & {r})"),
            NnfFormula::Or(l, r) => write!(f, "({l} | {r})"),
            NnfFormula::Next(c) => write!(f, "X {c}"),
            NnfFormula::Until(l, r) => write!(f, "({l} U {r})"),
            NnfFormula::Release(l, r) => write!(f, "({l} R {r})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn negated_until_becomes_release() {
        let f = parse("!(a U b)").unwrap();
        let nnf = to_nnf(&f);
        let NnfFormula::Release(l, r) = nnf else {
            panic!("expected release, got {nnf}");
        };
        assert!(matches!(*l, NnfFormula::Lit(ref n, false) if n.as_str() == "a"));
        assert!(matches!(*r, NnfFormula::Lit(ref n, false) if n.as_str() == "b"));
    }

    #[test]
    fn double_negation_vanishes() {
        let f = parse("!!a").unwrap();
        assert!(matches!(to_nnf(&f), NnfFormula::Lit(ref n, true) if n.as_str() == "a"));
    }

    #[test]
    fn negated_top_is_false() {
        assert_eq!(to_nnf(&parse("!true").unwrap()), NnfFormula::False);
        assert_eq!(to_nnf(&parse("false").unwrap()), NnfFormula::False);
    }

    #[test]
    fn de_morgan() {
        let f = parse("!(a & X b)").unwrap();
        let expected = NnfFormula::Or(
            Box::new(to_nnf(&parse("!a").unwrap())),
            Box::new(NnfFormula::Next(Box::new(to_nnf(&parse("!b").unwrap())))),
        );
        assert_eq!(to_nnf(&f), expected);
    }
}
