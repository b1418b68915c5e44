//! The built-in example scenarios.

use crate::chevalley_weil::Scenario;
use crate::{Error, Result};

use super::parse_scenario;

macro_rules! corpus {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../scenarios/", $name, ".json")))),*]
    };
}

/// `(name, JSON source)` for every shipped scenario.
pub const CORPUS: &[(&str, &str)] = corpus![
    "p1_antipode",
    "genus2_hyperelliptic",
    "p1xp1_involution",
    "klein4_surface",
    "free_action_curve",
    "z4_curve",
    "s3_projective_line",
];

pub fn example_names() -> Vec<&'static str> {
    CORPUS.iter().map(|(name, _)| *name).collect()
}

/// The JSON source of a shipped scenario.
pub fn example_source(name: &str) -> Result<&'static str> {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, src)| *src)
        .ok_or_else(|| Error::UnknownExample {
            name: name.to_string(),
            available: example_names().iter().map(|s| s.to_string()).collect(),
        })
}

/// A shipped scenario, parsed.
pub fn example(name: &str) -> Result<Scenario> {
    parse_scenario(example_source(name)?).map_err(|e| e.error)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_example_parses() {
        for (name, _) in CORPUS {
            example(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn unknown_names_list_the_corpus() {
        match example_source("nope") {
            Err(Error::UnknownExample { available, .. }) => assert_eq!(available.len(), CORPUS.len()),
            other => panic!("{other:?}"),
        }
    }
}
