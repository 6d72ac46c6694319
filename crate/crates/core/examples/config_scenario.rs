//! Runs a JSON scenario and prints its CSV, as `entlaser evolve` would write it.
//!
//! ```text
//! cargo run --release --example config_scenario -- configs/phase_mismatch.json
//! ```

use entlaser::cli::{run_evolve, ScenarioConfig};
use entlaser::Tolerances;

fn main() -> entlaser::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/configs/fig2_balanced.json").into());
    let config = ScenarioConfig::from_json(&std::fs::read_to_string(path)?)?;
    print!("{}", run_evolve(&config, &Tolerances::default())?.to_csv_string());
    Ok(())
}
