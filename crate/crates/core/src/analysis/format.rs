use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::pasep::RateKind;
use crate::Rational;

use super::solve::Distribution;
use super::system::{ChainState, TransitionSystem};

/// `state,probability_num,probability_den`, one row per state in system order.
pub fn distribution_csv<S: ChainState>(sys: &TransitionSystem<S>, d: &Distribution) -> String {
    let mut out = String::from("state,probability_num,probability_den\n");
    for (s, p) in sys.states().iter().zip(d.probs()) {
        writeln!(out, "{},{},{}", csv_field(&s.to_string()), p.numer(), p.denom()).expect("writing to a string");
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct Entry {
    state: String,
    projection: String,
    probability: String,
    probability_num: String,
    probability_den: String,
}

/// JSON array of `{state, projection, probability, probability_num, probability_den}`.
pub fn distribution_json<S: ChainState>(sys: &TransitionSystem<S>, d: &Distribution) -> serde_json::Value {
    let entries: Vec<Entry> = sys
        .states()
        .iter()
        .zip(d.probs())
        .map(|(s, p): (&S, &Rational)| Entry {
            state: s.to_string(),
            projection: s.word().to_string(),
            probability: p.to_string(),
            probability_num: p.numer().to_string(),
            probability_den: p.denom().to_string(),
        })
        .collect();
    serde_json::to_value(entries).expect("plain strings")
}

/// Empirical frequencies as JSON `{state, frequency}` entries.
pub fn frequencies_json<S: ChainState>(sys: &TransitionSystem<S>, d: &Distribution<f64>) -> serde_json::Value {
    #[derive(Serialize)]
    struct Freq {
        state: String,
        projection: String,
        frequency: f64,
    }
    let entries: Vec<Freq> = sys
        .states()
        .iter()
        .zip(d.probs())
        .map(|(s, &frequency)| Freq { state: s.to_string(), projection: s.word().to_string(), frequency })
        .collect();
    serde_json::to_value(entries).expect("finite floats")
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

/// Graphviz state diagram. Edges carry the rate kind (`a/(N+1)` and so on);
/// states over the same PASEP word share a cluster.
pub fn to_dot<S: ChainState>(sys: &TransitionSystem<S>, name: &str) -> String {
    let mut clusters: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (i, s) in sys.states().iter().enumerate() {
        clusters.entry(s.word().to_string()).or_default().push(i);
    }
    let grouped = clusters.values().any(|v| v.len() > 1);

    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    out.push_str("  node [shape=box];\n");
    for (c, (word, members)) in clusters.iter().enumerate() {
        let indent = if grouped { "    " } else { "  " };
        if grouped {
            writeln!(out, "  subgraph cluster_{c} {{").unwrap();
            writeln!(out, "    label=\"{word}\";").unwrap();
        }
        for &i in members {
            writeln!(out, "{indent}s{i} [label=\"{}\"];", escape(&sys.states()[i].node_label())).unwrap();
        }
        if grouped {
            out.push_str("  }\n");
        }
    }
    for from in 0..sys.len() {
        for e in sys.edges(from) {
            writeln!(out, "  s{from} -> s{} [label=\"{}\"];", e.to, e.kind.label()).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Edge counts by rate kind, for summaries.
pub fn edge_kind_counts<S: ChainState>(sys: &TransitionSystem<S>) -> BTreeMap<RateKind, usize> {
    let mut counts = BTreeMap::new();
    for from in 0..sys.len() {
        for e in sys.edges(from) {
            *counts.entry(e.kind).or_default() += 1;
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::analysis::solve::stationary_exact;
    use crate::analysis::system::{pasep_system, pt_system};
    use crate::pasep::PasepParams;

    #[test]
    fn csv_rows() {
        let sys = pasep_system(2).unwrap();
        let d = stationary_exact(&sys, &PasepParams::new(ratio(0, 1), ratio(1, 1), ratio(1, 1))).unwrap();
        let csv = distribution_csv(&sys, &d);
        assert_eq!(csv, "state,probability_num,probability_den\n00,1,5\n01,1,5\n10,2,5\n11,1,5\n");
        let json = distribution_json(&sys, &d);
        assert_eq!(json[2]["probability"], "2/5");
        assert_eq!(json[2]["state"], "10");
    }

    #[test]
    fn dot_labels() {
        let dot = to_dot(&pasep_system(2).unwrap(), "pasep");
        assert!(dot.starts_with("digraph \"pasep\" {"));
        for label in ["a/(N+1)", "b/(N+1)", "q/(N+1)", "1/(N+1)"] {
            assert!(dot.contains(&format!("[label=\"{label}\"]")), "{label}");
        }
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert!(!dot.contains("subgraph"));

        let dot = to_dot(&pt_system(3).unwrap(), "pt");
        assert_eq!(dot.matches("subgraph cluster_").count(), 8);
    }

    #[test]
    fn kind_counts() {
        let counts = edge_kind_counts(&pasep_system(2).unwrap());
        assert_eq!(counts[&RateKind::Alpha], 2);
        assert_eq!(counts[&RateKind::Beta], 2);
        assert_eq!(counts[&RateKind::One], 1);
        assert_eq!(counts[&RateKind::Q], 1);
    }
}
