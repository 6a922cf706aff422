use exclusivity::graph::{find_isomorphism, make_cycle, make_prism};
use exclusivity::invariants::fractional_packing;
use exclusivity::scenario::{
    builtin, exclusivity_graph, parse_scenario, write_scenario, BUILTIN_NAMES,
};
use exclusivity::BigRational;

const THREE_BOX: &str = "\
# Specker's three boxes
setting 1 2 3
context 1 2
context 1 3
context 2 3
event 1,0 | 1,2
event 0,1 | 1,2
event 1,0 | 1,3
event 0,1 | 1,3
event 1,0 | 2,3
event 0,1 | 2,3
";

#[test]
fn three_box_file_matches_builtin() {
    let parsed = parse_scenario(THREE_BOX).unwrap();
    assert_eq!(parsed.events().len(), 6);
    assert_eq!(parsed, builtin("three-box").unwrap());
    let (g, gamma) = exclusivity_graph(&parsed).unwrap();
    assert!(find_isomorphism(&g, &make_prism()).is_some());
    assert_eq!(gamma.len(), 3);
    assert_eq!(
        fractional_packing(&g, &gamma).unwrap().value,
        BigRational::from_integer(3.into())
    );
}

#[test]
fn builtins_survive_text_roundtrip() {
    for name in BUILTIN_NAMES {
        let s = builtin(name).unwrap();
        assert_eq!(parse_scenario(&write_scenario(&s)).unwrap(), s, "{name}");
    }
}

#[test]
fn kcbs_without_contexts_uses_all_cliques() {
    let text: String = builtin("kcbs")
        .unwrap()
        .events()
        .iter()
        .map(|e| format!("event {e}\n"))
        .collect();
    let s = parse_scenario(&text).unwrap();
    let (g, gamma) = exclusivity_graph(&s).unwrap();
    assert_eq!(g, make_cycle(5).unwrap());
    assert_eq!(gamma.len(), 5);
}

#[test]
fn compiled_graphs_are_simple() {
    for name in BUILTIN_NAMES {
        let (g, gamma) = exclusivity_graph(&builtin(name).unwrap()).unwrap();
        assert!(g.check_invariants());
        assert!(gamma.cliques().iter().all(|c| g.is_clique(c)));
    }
}
