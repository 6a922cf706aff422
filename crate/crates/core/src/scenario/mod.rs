//! Measurement scenarios: events, contexts, and their exclusivity structure.
//!
//! An event assigns outcomes to a set of settings (`1,0 | x,y` reads "outcome
//! 1 for x and 0 for y"). Two events are exclusive when some setting they both
//! assign receives different outcomes.

mod builtins;
mod dsl;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use dsl::{parse_scenario, write_scenario};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::maximal_cliques;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Event {
    assignments: BTreeMap<String, u32>,
}

impl Event {
    pub fn new<S: Into<String>>(pairs: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let mut assignments = BTreeMap::new();
        for (s, o) in pairs {
            let s = s.into();
            if assignments.insert(s.clone(), o).is_some() {
                return Err(Error::invalid(format!(
                    "setting `{s}` assigned twice in one event"
                )));
            }
        }
        if assignments.is_empty() {
            return Err(Error::invalid("event with no assignments"));
        }
        Ok(Event { assignments })
    }

    pub fn outcome(&self, setting: &str) -> Option<u32> {
        self.assignments.get(setting).copied()
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&str, u32)> {
        self.assignments.iter().map(|(s, &o)| (s.as_str(), o))
    }

    pub fn settings(&self) -> impl Iterator<Item = &str> {
        self.assignments.keys().map(String::as_str)
    }

    pub fn is_exclusive_with(&self, other: &Event) -> bool {
        self.assignments
            .iter()
            .any(|(s, o)| other.assignments.get(s).is_some_and(|p| p != o))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcomes: Vec<String> = self.assignments.values().map(u32::to_string).collect();
        let settings: Vec<&str> = self.settings().collect();
        write!(f, "{} | {}", outcomes.join(","), settings.join(","))
    }
}

pub type Context = BTreeSet<String>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scenario {
    events: Vec<Event>,
    contexts: Option<Vec<Context>>,
}

impl Scenario {
    pub fn new(events: Vec<Event>, contexts: Option<Vec<Context>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &events {
            if !seen.insert(e) {
                return Err(Error::invalid(format!("duplicate event `{e}`")));
            }
        }
        if let Some(ctx) = &contexts {
            for e in &events {
                if !ctx.iter().any(|c| e.settings().all(|s| c.contains(s))) {
                    return Err(Error::invalid(format!("event `{e}` lies in no context")));
                }
            }
        }
        Ok(Scenario { events, contexts })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn contexts(&self) -> Option<&[Context]> {
        self.contexts.as_deref()
    }

    /// Events whose settings all lie inside `context`.
    pub fn events_in(&self, context: &Context) -> Vec<usize> {
        (0..self.events.len())
            .filter(|&i| self.events[i].settings().all(|s| context.contains(s)))
            .collect()
    }
}

/// A family of cliques over a host graph (the constraint hypergraph of a
/// fractional packing).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueHypergraph {
    cliques: Vec<Vec<usize>>,
}

impl CliqueHypergraph {
    /// Validates that every member is a clique of `host`. Members are sorted
    /// and the family is deduplicated.
    pub fn new(host: &Graph, cliques: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(cliques.len());
        for mut c in cliques {
            c.sort_unstable();
            if c.is_empty() {
                return Err(Error::invalid("empty hyperedge"));
            }
            if c.iter().any(|&v| v >= host.order()) {
                return Err(Error::invalid(format!(
                    "hyperedge {c:?} has out-of-range vertex"
                )));
            }
            if !host.is_clique(&c) {
                return Err(Error::invalid(format!("hyperedge {c:?} is not a clique")));
            }
            out.push(c);
        }
        out.sort();
        out.dedup();
        Ok(CliqueHypergraph { cliques: out })
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Vertices of `0..n` not covered by any member.
    pub fn uncovered(&self, n: usize) -> Vec<usize> {
        let mut covered = vec![false; n];
        for &v in self.cliques.iter().flatten() {
            covered[v] = true;
        }
        (0..n).filter(|&v| !covered[v]).collect()
    }
}

/// Compiles a scenario into its exclusivity graph and clique hypergraph.
///
/// With contexts, the hypergraph holds the maximal cliques among the events
/// measurable in each context; without, it holds all maximal cliques.
pub fn exclusivity_graph(s: &Scenario) -> Result<(Graph, CliqueHypergraph)> {
    let n = s.events.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if s.events[i].is_exclusive_with(&s.events[j]) {
                g.add_edge(i, j);
            }
        }
    }
    debug_assert!(g.check_invariants());

    let cliques = match &s.contexts {
        None => maximal_cliques(&g)?,
        Some(contexts) => {
            let mut all = Vec::new();
            for c in contexts {
                let members = s.events_in(c);
                if members.is_empty() {
                    continue;
                }
                let sub = g.induced(&members)?;
                for clique in maximal_cliques(&sub)? {
                    all.push(clique.into_iter().map(|k| members[k]).collect());
                }
            }
            all
        }
    };
    let gamma = CliqueHypergraph::new(&g, cliques)?;
    Ok((g, gamma))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(pairs: &[(&str, u32)]) -> Event {
        Event::new(pairs.iter().map(|&(s, o)| (s, o))).unwrap()
    }

    #[test]
    fn exclusivity_rule() {
        let a = ev(&[("x", 1), ("y", 0)]);
        let b = ev(&[("x", 0), ("z", 0)]);
        let c = ev(&[("y", 0), ("z", 1)]);
        assert!(a.is_exclusive_with(&b));
        assert!(!a.is_exclusive_with(&c));
        assert!(b.is_exclusive_with(&c));
        assert!(!a.is_exclusive_with(&a));
    }

    #[test]
    fn event_invariants() {
        assert!(Event::new(Vec::<(&str, u32)>::new()).is_err());
        assert!(Event::new([("x", 0), ("x", 1)]).is_err());
    }

    #[test]
    fn scenario_invariants() {
        let a = ev(&[("x", 1)]);
        assert!(Scenario::new(vec![a.clone(), a.clone()], None).is_err());
        let ctx: Context = ["y".to_string()].into();
        assert!(Scenario::new(vec![a], Some(vec![ctx])).is_err());
    }

    #[test]
    fn single_event() {
        let s = Scenario::new(vec![ev(&[("x", 0)])], None).unwrap();
        let (g, gamma) = exclusivity_graph(&s).unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        assert_eq!(gamma.cliques(), &[vec![0]]);
    }

    #[test]
    fn hypergraph_rejects_non_cliques() {
        let g = crate::graph::make_cycle(5).unwrap();
        assert!(CliqueHypergraph::new(&g, vec![vec![0, 2]]).is_err());
        assert!(CliqueHypergraph::new(&g, vec![vec![9]]).is_err());
        let h = CliqueHypergraph::new(&g, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(h.cliques(), &[vec![0, 1]]);
        assert_eq!(h.uncovered(5), vec![2, 3, 4]);
    }
}
