//! Reading scenario files and rendering reports as text and JSON.

use ramiq::chevalley_weil::closed_form_deltas;
use ramiq::io::{example_names, example_source, parse_scenario, render_json, render_text, JsonReport, RenderOptions};
use ramiq::chi_g;

const CUSTOM: &str = r#"{
  "group": {"kind": "cyclic", "n": 3},
  "ambient": {"dim": 1, "genus": 0},
  "sheaf": {"kind": "general", "rank": 1, "degree": 0},
  "strata": [
    {"id": "0", "dim": 0, "stabilizer": [0, 1, 2],
     "normal": [{"character": {"0": [1, 0], "1": [3, 2], "2": [3, 1]}}],
     "sheaf": [{"character": "trivial", "rank": 1}]},
    {"id": "inf", "dim": 0, "stabilizer": [0, 1, 2],
     "normal": [{"character": {"0": [1, 0], "1": [3, 1], "2": [3, 2]}}],
     "sheaf": [{"character": "trivial", "rank": 1}]}
  ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("shipped scenarios: {}", example_names().join(", "));

    let s = parse_scenario(CUSTOM)?;
    let r = chi_g(&s)?;
    let deltas = closed_form_deltas(&s, &r)?;
    print!("{}", render_text(&r, Some(&deltas), RenderOptions { trace_table: true }));

    let json = render_json(&r, None);
    let back: JsonReport = serde_json::from_str(&json)?;
    for (name, m) in back.multiplicities()? {
        println!("from JSON: {name} = {m}");
    }

    // errors point at the offending line
    let broken = example_source("p1_antipode")?.replace("[0, 1]", "[1]");
    match parse_scenario(&broken) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
