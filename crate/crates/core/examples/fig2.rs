//! Reproduces the three loss-imbalance curves and writes CSV and SVG files.
//!
//! ```text
//! cargo run --release --example fig2 -- [out_dir]
//! ```

use entlaser::cli::run_fig2;
use entlaser::Tolerances;
use std::path::PathBuf;

fn main() -> entlaser::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fig2_out".into()));
    let out = run_fig2(Some(&dir), &Tolerances::default())?;
    println!("{:>6} {:>12} {:>10} {:>10} {:>10}", "t", "N(Δλ=0)", "Δλ=0", "Δλ=0.001", "Δλ=0.002");
    let times = &out.runs[0].1.times;
    for k in (0..times.len()).step_by(20) {
        let n = out.runs[0].1.column("N").unwrap()[k];
        let r: Vec<f64> = out.runs.iter().map(|(_, ts)| ts.column("ratio").unwrap()[k]).collect();
        println!("{:>6.2} {:>12.4e} {:>10.5} {:>10.5} {:>10.5}", times[k], n, r[0], r[1], r[2]);
    }
    for f in out.files {
        println!("wrote {}", f.display());
    }
    Ok(())
}
