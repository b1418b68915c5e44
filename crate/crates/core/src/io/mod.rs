//! Scenario files, report rendering and the built-in examples.

mod corpus;
mod render;
mod scenario_file;

pub use corpus::{example, example_names, example_source, CORPUS};
pub use render::{
    multiplicity_line, render_json, render_text, JsonDelta, JsonGamma, JsonMultiplicity, JsonReport,
    JsonTraceRow, RenderOptions,
};
pub use scenario_file::{parse_scenario, LocatedError};
