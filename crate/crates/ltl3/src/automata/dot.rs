//! GraphViz export of automata.

use std::fmt::Write;

use crate::automata::gba::Gba;
use crate::automata::machine::MonitorAutomaton;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Büchi automaton as `dot` text; node labels are the obligation sets.
pub fn gba_to_dot(gba: &Gba) -> String {
    let mut out = String::from("digraph gba {\n  rankdir=LR;\n  node [shape=box];\n");
    for id in 0..gba.node_count() {
        let obligations = gba.node_label(id);
        let label = if obligations.is_empty() {
            "{}".to_string()
        } else {
            obligations.join("\\n")
        };
        let marks: Vec<String> = gba
            .acceptance_sets()
            .iter()
            .enumerate()
            .filter(|(_, set)| set.contains(id))
            .map(|(i, _)| format!("A{i}"))
            .collect();
        let suffix = if marks.is_empty() {
            String::new()
        } else {
            format!("\\n[{}]", marks.join(","))
        };
        writeln!(out, "  n{id} [label=\"{}{suffix}\"];", escape(&label)).unwrap();
    }
    for &init in gba.initial() {
        writeln!(out, "  init{init} [shape=point]; init{init} -> n{init};").unwrap();
    }
    for id in 0..gba.node_count() {
        for state in gba.alphabet().states() {
            let succs = gba.transitions(id, &state).expect("state over own alphabet");
            for &succ in succs {
                writeln!(out, "  n{id} -> n{succ} [label=\"{}\"];", escape(&state.to_string()))
                    .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Monitor machine as `dot` text; node labels are verdicts.
pub fn monitor_to_dot(m: &MonitorAutomaton) -> String {
    let mut out = String::from("digraph monitor {\n  rankdir=LR;\n  node [shape=circle];\n");
    for (id, state) in m.states.iter().enumerate() {
        writeln!(out, "  s{id} [label=\"{}\"];", state.verdict).unwrap();
    }
    writeln!(out, "  init [shape=point]; init -> s{};", m.initial()).unwrap();
    for id in 0..m.state_count() {
        for (mask, &target) in m.targets(id).iter().enumerate() {
            let state = m.alphabet().state_from_mask(mask as u64);
            writeln!(
                out,
                "  s{id} -> s{target} [label=\"{}\"];",
                escape(&state.to_string())
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::machine::build_monitor;
    use crate::limits::Limits;
    use crate::parser::parse;
    use crate::trace::Alphabet;

    #[test]
    fn dot_outputs_are_well_formed() {
        let alph = Alphabet::from_names(["a"]).unwrap();
        let f = parse("F a").unwrap();
        let gba = Gba::build(&f, &alph, &Limits::default()).unwrap();
        let dot = gba_to_dot(&gba);
        assert!(dot.starts_with("digraph gba {"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("->"));

        let m = build_monitor(&f, &alph).unwrap();
        let dot = monitor_to_dot(&m);
        assert!(dot.starts_with("digraph monitor {"));
        assert!(dot.contains("label=\"?\""));
        assert!(dot.contains("label=\"T\""));
    }
}
