//! Scenario runner behind the `entlaser` binary: JSON configs in, CSV time
//! series and SVG charts out.

mod config;
mod oracle_check;
mod run;
mod series;
mod svg;

pub use config::{GridAxis, Observable, ScenarioConfig, SweepConfig, SweepField};
pub use oracle_check::{run_oracle_check, OracleCheckOptions, OracleReport, OracleSuite, PropertyLine};
pub use run::{
    fig2_config, run_evolve, run_fig2, run_sweep, run_thresholds, Fig2Output, SweepTable,
    FIG2_IMBALANCES,
};
pub use series::{format_number, TimeSeries};
pub use svg::{render_svg, Series};
