//! Named scenarios: Specker's three boxes, KCBS, CHSH and Mermin.

use super::{Context, Event, Scenario};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 4] = ["three-box", "kcbs", "chsh", "mermin"];

pub fn builtin(name: &str) -> Result<Scenario> {
    match name {
        "three-box" => Ok(three_box()),
        "kcbs" => Ok(kcbs()),
        "chsh" => Ok(chsh()),
        "mermin" => Ok(mermin()),
        other => Err(Error::invalid(format!(
            "unknown builtin `{other}` (expected one of {})",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

fn context(ids: &[&str]) -> Context {
    ids.iter().map(|s| s.to_string()).collect()
}

fn event(pairs: &[(&str, u32)]) -> Event {
    Event::new(pairs.iter().map(|&(s, o)| (s, o))).expect("builtin events are well formed")
}

/// Boxes 1..3, two opened at a time; one found full (1) and the other empty (0).
fn three_box() -> Scenario {
    const PAIRS: [(&str, &str); 3] = [("1", "2"), ("1", "3"), ("2", "3")];
    let mut events = Vec::new();
    for (x, y) in PAIRS {
        for a in [1, 0] {
            events.push(event(&[(x, a), (y, 1 - a)]));
        }
    }
    let contexts = PAIRS.iter().map(|&(x, y)| context(&[x, y])).collect();
    Scenario::new(events, Some(contexts)).expect("valid builtin")
}

/// Events `1,0 | i,i+1` for i in 1..=5 (cyclically).
fn kcbs() -> Scenario {
    let ids: Vec<String> = (1..=5).map(|i| i.to_string()).collect();
    let mut events = Vec::new();
    let mut contexts = Vec::new();
    for i in 0..5 {
        let (x, y) = (ids[i].as_str(), ids[(i + 1) % 5].as_str());
        events.push(event(&[(x, 1), (y, 0)]));
        contexts.push(context(&[x, y]));
    }
    Scenario::new(events, Some(contexts)).expect("valid builtin")
}

/// `a,b | Ax,By` with a xor b = x*y.
fn chsh() -> Scenario {
    let mut events = Vec::new();
    let mut contexts = Vec::new();
    for x in 0..2u32 {
        for y in 0..2u32 {
            let (sa, sb) = (format!("A{x}"), format!("B{y}"));
            for a in 0..2u32 {
                let b = a ^ (x & y);
                events.push(event(&[(&sa, a), (&sb, b)]));
            }
            contexts.push(context(&[&sa, &sb]));
        }
    }
    Scenario::new(events, Some(contexts)).expect("valid builtin")
}

/// Three parties, contexts xyz in {001, 010, 100} with even parity of
/// outcomes and 111 with odd parity.
fn mermin() -> Scenario {
    const CONTEXTS: [([u32; 3], u32); 4] = [
        ([0, 0, 1], 0),
        ([0, 1, 0], 0),
        ([1, 0, 0], 0),
        ([1, 1, 1], 1),
    ];
    let mut events = Vec::new();
    let mut contexts = Vec::new();
    for (xyz, parity) in CONTEXTS {
        let ids = [
            format!("A{}", xyz[0]),
            format!("B{}", xyz[1]),
            format!("C{}", xyz[2]),
        ];
        for a in 0..2u32 {
            for b in 0..2u32 {
                let c = a ^ b ^ parity;
                events.push(event(&[(&ids[0], a), (&ids[1], b), (&ids[2], c)]));
            }
        }
        contexts.push(ids.into_iter().collect());
    }
    Scenario::new(events, Some(contexts)).expect("valid builtin")
}
