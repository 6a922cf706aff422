//! Line-oriented scenario format (`.scn`):
//!
//! ```text
//! # comment
//! setting 1
//! context 1 2
//! event 1,0 | 1,2
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{Context, Event, Scenario};
use crate::error::{Error, Result};

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let mut declared: BTreeSet<String> = BTreeSet::new();
    let mut contexts: Vec<(usize, Context)> = Vec::new();
    let mut events: Vec<(usize, Event)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "setting" => {
                let ids: Vec<&str> = rest.split_whitespace().collect();
                if ids.is_empty() {
                    return Err(Error::parse(line_no, "`setting` needs an identifier"));
                }
                declared.extend(ids.into_iter().map(str::to_string));
            }
            "context" => {
                let ids: Context = rest.split_whitespace().map(str::to_string).collect();
                if ids.is_empty() {
                    return Err(Error::parse(
                        line_no,
                        "`context` needs at least one setting",
                    ));
                }
                contexts.push((line_no, ids));
            }
            "event" => {
                let e = parse_event(rest).map_err(|m| Error::parse(line_no, m))?;
                if let Some((first, _)) = events.iter().find(|(_, other)| *other == e) {
                    return Err(Error::parse(
                        line_no,
                        format!("duplicate event `{e}` (first on line {first})"),
                    ));
                }
                events.push((line_no, e));
            }
            other => return Err(Error::parse(line_no, format!("unknown keyword `{other}`"))),
        }
    }

    if !declared.is_empty() {
        for (line, c) in &contexts {
            if let Some(s) = c.iter().find(|s| !declared.contains(*s)) {
                return Err(Error::parse(*line, format!("undeclared setting `{s}`")));
            }
        }
        for (line, e) in &events {
            if let Some(s) = e.settings().find(|s| !declared.contains(*s)) {
                return Err(Error::parse(*line, format!("undeclared setting `{s}`")));
            }
        }
    }
    if !contexts.is_empty() {
        for (line, e) in &events {
            if !contexts
                .iter()
                .any(|(_, c)| e.settings().all(|s| c.contains(s)))
            {
                return Err(Error::parse(
                    *line,
                    format!("event `{e}` lies in no context"),
                ));
            }
        }
    }

    let contexts = if contexts.is_empty() {
        None
    } else {
        Some(contexts.into_iter().map(|(_, c)| c).collect())
    };
    Scenario::new(events.into_iter().map(|(_, e)| e).collect(), contexts)
        .map_err(|e| Error::parse(text.lines().count().max(1), e.to_string()))
}

fn parse_event(body: &str) -> Result<Event, String> {
    let (outcomes, settings) = body
        .split_once('|')
        .ok_or_else(|| "expected `event <outcomes> | <settings>`".to_string())?;
    let outcomes: Vec<&str> = outcomes.split(',').map(str::trim).collect();
    let settings: Vec<&str> = settings.split(',').map(str::trim).collect();
    if outcomes.len() != settings.len() {
        return Err(format!(
            "{} outcomes for {} settings",
            outcomes.len(),
            settings.len()
        ));
    }
    let mut pairs = Vec::with_capacity(settings.len());
    for (o, s) in outcomes.iter().zip(&settings) {
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(format!("bad setting identifier `{s}`"));
        }
        let o: u32 = o.parse().map_err(|_| format!("bad outcome `{o}`"))?;
        pairs.push((*s, o));
    }
    Event::new(pairs).map_err(|e| e.to_string())
}

pub fn write_scenario(s: &Scenario) -> String {
    let mut out = String::new();
    if let Some(contexts) = s.contexts() {
        for c in contexts {
            let ids: Vec<&str> = c.iter().map(String::as_str).collect();
            writeln!(out, "context {}", ids.join(" ")).unwrap();
        }
    }
    for e in s.events() {
        writeln!(out, "event {e}").unwrap();
    }
    out
}
