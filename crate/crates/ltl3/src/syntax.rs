//! Formula abstract syntax, construction helpers and printing.
//!
//! The primitive constructors are `true`, atoms, negation, conjunction,
//! disjunction, next and (strong) until. Everything else in the concrete
//! syntax — `false`, `->`, `F`, `G`, `R` — is desugared by the parser or by
//! the helper constructors here and never appears in the tree.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Keywords of the concrete syntax; not usable as atom names.
pub const RESERVED_WORDS: [&str; 7] = ["true", "false", "X", "F", "G", "U", "R"];

/// Name of an atomic proposition.
///
/// Must match `[A-Za-z_][A-Za-z0-9_]*` and must not be a reserved word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropName(String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropNameError {
    #[error("invalid proposition name {0:?}")]
    Invalid(String),
    #[error("{0:?} is a reserved word and cannot name a proposition")]
    Reserved(String),
}

impl PropName {
    pub fn new(name: impl Into<String>) -> Result<Self, PropNameError> {
        let name = name.into();
        let mut chars = name.chars();
        let head_ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        if !head_ok || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(PropNameError::Invalid(name));
        }
        if RESERVED_WORDS.contains(&name.as_str()) {
            return Err(PropNameError::Reserved(name));
        }
        Ok(PropName(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PropName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// LTL formula over the primitive constructors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Atom(PropName),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn top() -> Formula {
        Formula::Top
    }

    /// Canonical falsum: `!true`.
    pub fn bottom() -> Formula {
        Formula::not(Formula::Top)
    }

    pub fn atom(name: PropName) -> Formula {
        Formula::Atom(name)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn next(f: Formula) -> Formula {
        Formula::Next(Box::new(f))
    }

    pub fn until(l: Formula, r: Formula) -> Formula {
        Formula::Until(Box::new(l), Box::new(r))
    }

    /// `F f`, desugared to `true U f`.
    pub fn eventually(f: Formula) -> Formula {
        Formula::until(Formula::Top, f)
    }

    /// `G f`, desugared to `!(true U !f)`.
    pub fn always(f: Formula) -> Formula {
        Formula::not(Formula::until(Formula::Top, Formula::not(f)))
    }

    /// `l R r`, desugared to `!(!l U !r)`.
    pub fn release(l: Formula, r: Formula) -> Formula {
        Formula::not(Formula::until(Formula::not(l), Formula::not(r)))
    }

    /// `l -> r`, desugared to `!l | r`.
    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::or(Formula::not(l), r)
    }

    /// Whether this is the canonical falsum `!true`.
    pub fn is_bottom(&self) -> bool {
        matches!(self, Formula::Not(inner) if **inner == Formula::Top)
    }

    /// Set of atomic propositions occurring in the formula.
    pub fn props(&self) -> BTreeSet<PropName> {
        let mut out = BTreeSet::new();
        let mut todo = vec![self];
        while let Some(f) = todo.pop() {
            match f {
                Formula::Top => {}
                Formula::Atom(name) => {
                    out.insert(name.clone());
                }
                Formula::Not(c) | Formula::Next(c) => todo.push(c),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Until(l, r) => {
                    todo.push(l);
                    todo.push(r);
                }
            }
        }
        out
    }

    /// Number of constructors in the tree.
    pub fn size(&self) -> usize {
        let mut count = 0;
        let mut todo = vec![self];
        while let Some(f) = todo.pop() {
            count += 1;
            match f {
                Formula::Top | Formula::Atom(_) => {}
                Formula::Not(c) | Formula::Next(c) => todo.push(c),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Until(l, r) => {
                    todo.push(l);
                    todo.push(r);
                }
            }
        }
        count
    }
}

// Binding powers, loosest to tightest: | < & < U < prefix. Binary operators
// are right-associative, so the left operand is printed one level tighter.
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_UNTIL: u8 = 3;
const PREC_PREFIX: u8 = 4;

fn fmt_prec(f: &Formula, min: u8, out: &mut String) {
    match f {
        Formula::Top => out.push_str("true"),
        Formula::Atom(name) => out.push_str(name.as_str()),
        Formula::Not(c) => {
            out.push('!');
            fmt_prec(c, PREC_PREFIX, out);
        }
        Formula::Next(c) => {
            out.push_str("X ");
            fmt_prec(c, PREC_PREFIX, out);
        }
        Formula::And(l, r) => fmt_binary(l, " & ", r, PREC_AND, min, out),
        Formula::Or(l, r) => fmt_binary(l, " | ", r, PREC_OR, min, out),
        Formula::Until(l, r) => fmt_binary(l, " U ", r, PREC_UNTIL, min, out),
    }
}

fn fmt_binary(l: &Formula, op: &str, r: &Formula, prec: u8, min: u8, out: &mut String) {
    let paren = prec < min;
    if paren {
        out.push('(');
    }
    fmt_prec(l, prec + 1, out);
    out.push_str(op);
    fmt_prec(r, prec, out);
    if paren {
        out.push(')');
    }
}

/// Print with minimal parentheses. `parse(render(f))` is structurally `f`.
pub fn render(f: &Formula) -> String {
    let mut out = String::new();
    fmt_prec(f, 0, &mut out);
    out
}

/// Print with every nested binary operator parenthesised, e.g.
/// `true | (true & (true U a))`. Easier to read stepwise progression output.
pub fn render_grouped(f: &Formula) -> String {
    fn go(f: &Formula, top: bool, out: &mut String) {
        match f {
            Formula::Top => out.push_str("true"),
            Formula::Atom(name) => out.push_str(name.as_str()),
            Formula::Not(c) => {
                out.push('!');
                go(c, false, out);
            }
            Formula::Next(c) => {
                out.push_str("X ");
                go(c, false, out);
            }
            Formula::And(l, r) => binary(l, " & ", r, top, out),
            Formula::Or(l, r) => binary(l, " | ", r, top, out),
            Formula::Until(l, r) => binary(l, " U ", r, top, out),
        }
    }
    fn binary(l: &Formula, op: &str, r: &Formula, top: bool, out: &mut String) {
        if !top {
            out.push('(');
        }
        go(l, false, out);
        out.push_str(op);
        go(r, false, out);
        if !top {
            out.push(')');
        }
    }
    let mut out = String::new();
    go(f, true, &mut out);
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> PropName {
        PropName::new(name).unwrap()
    }

    #[test]
    fn prop_name_validation() {
        assert!(PropName::new("a").is_ok());
        assert!(PropName::new("_x9").is_ok());
        assert_eq!(
            PropName::new("9a"),
            Err(PropNameError::Invalid("9a".into()))
        );
        assert_eq!(PropName::new(""), Err(PropNameError::Invalid("".into())));
        assert_eq!(
            PropName::new("a b"),
            Err(PropNameError::Invalid("a b".into()))
        );
        for word in RESERVED_WORDS {
            assert_eq!(
                PropName::new(word),
                Err(PropNameError::Reserved(word.into()))
            );
        }
    }

    #[test]
    fn props_of_formula() {
        assert!(Formula::Top.props().is_empty());
        let f = Formula::until(Formula::atom(p("p")), Formula::atom(p("q")));
        let names: Vec<_> = f.props().into_iter().collect();
        assert_eq!(names, vec![p("p"), p("q")]);
    }

    #[test]
    fn size_counts_constructors() {
        assert_eq!(Formula::Top.size(), 1);
        assert_eq!(Formula::not(Formula::atom(p("a"))).size(), 2);
        assert_eq!(Formula::eventually(Formula::atom(p("a"))).size(), 3);
    }

    #[test]
    fn render_examples() {
        let a = || Formula::atom(p("a"));
        assert_eq!(render(&Formula::eventually(a())), "true U a");
        assert_eq!(render(&Formula::not(Formula::not(a()))), "!!a");
        let f = Formula::and(
            a(),
            Formula::or(Formula::atom(p("b")), Formula::atom(p("c"))),
        );
        assert_eq!(render(&f), "a & (b | c)");
    }

    #[test]
    fn render_respects_associativity() {
        let a = || Formula::atom(p("a"));
        let b = || Formula::atom(p("b"));
        let c = || Formula::atom(p("c"));
        let right = Formula::until(a(), Formula::until(b(), c()));
        assert_eq!(render(&right), "a U b U c");
        let left = Formula::until(Formula::until(a(), b()), c());
        assert_eq!(render(&left), "(a U b) U c");
        let and_right = Formula::and(a(), Formula::and(b(), c()));
        assert_eq!(render(&and_right), "a & b & c");
        let and_left = Formula::and(Formula::and(a(), b()), c());
        assert_eq!(render(&and_left), "(a & b) & c");
    }

    #[test]
    fn render_prefix_operators() {
        let a = || Formula::atom(p("a"));
        let b = || Formula::atom(p("b"));
        assert_eq!(render(&Formula::not(Formula::until(a(), b()))), "!(a U b)");
        assert_eq!(render(&Formula::next(Formula::and(a(), b()))), "X (a & b)");
        assert_eq!(render(&Formula::not(Formula::next(a()))), "!X a");
        assert_eq!(render(&Formula::bottom()), "!true");
    }

    #[test]
    fn grouped_rendering() {
        let fa = Formula::eventually(Formula::atom(p("a")));
        let stepped = Formula::or(Formula::Top, Formula::and(Formula::Top, fa));
        assert_eq!(render_grouped(&stepped), "true | (true & (true U a))");
        assert_eq!(
            render_grouped(&Formula::always(Formula::atom(p("a")))),
            "!(true U !a)"
        );
    }
}
