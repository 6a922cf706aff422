use std::fs;
use std::path::Path;

use exclusivity::graph::parse_graph;
use exclusivity::scenario::{exclusivity_graph, parse_scenario, CliqueHypergraph};
use exclusivity::Graph;

use crate::CliError;

/// A graph read from disk. Scenario files (`.scn`) are compiled and keep
/// their context hypergraph.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub descriptor: String,
    pub graph: Graph,
    pub contexts: Option<CliqueHypergraph>,
    pub from_scenario: bool,
}

pub fn is_scenario_path(path: &Path) -> bool {
    path.extension().is_some_and(|e| e == "scn")
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    let wrap = |source| CliError::Input {
        path: path.to_owned(),
        source,
    };
    let descriptor = path.display().to_string();
    if is_scenario_path(path) {
        let scenario = parse_scenario(&text).map_err(wrap)?;
        let (graph, gamma) = exclusivity_graph(&scenario).map_err(wrap)?;
        let contexts = scenario.contexts().is_some().then_some(gamma);
        Ok(Loaded {
            descriptor,
            graph,
            contexts,
            from_scenario: true,
        })
    } else {
        let graph = parse_graph(&text).map_err(wrap)?;
        Ok(Loaded {
            descriptor,
            graph,
            contexts: None,
            from_scenario: false,
        })
    }
}
