use super::config::{Observable, ScenarioConfig, SweepConfig};
use super::series::{format_number, TimeSeries};
use super::svg::{render_svg, Series};
use crate::engine::{
    apply_loss, apply_phase_mismatch, evolve_rk4, expect_j2, expect_quadratic, CovarianceState,
    DriftSpec, WitnessReport,
};
use crate::stokes::{number_quadratic_form, CMode, Quadrature};
use crate::witness::{criterion, thresholds, ThresholdReport, Verdict};
use crate::{Error, Result, Tolerances};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Runs are deterministic; the seed is recorded for uniformity with the
/// sampling commands.
const SEED: u64 = 0;

/// The state a detector sees: the phase-mismatch frame correction, then
/// post-hoc transmission.
fn observed(state: &CovarianceState, config: &ScenarioConfig) -> Result<CovarianceState> {
    let s = apply_phase_mismatch(state, config.spec.phase_mismatch);
    match config.post_loss {
        Some(eta) => apply_loss(&s, eta),
        None => Ok(s),
    }
}

fn sample_times(config: &ScenarioConfig) -> Vec<f64> {
    let mut times = Vec::new();
    let mut k = 0u64;
    loop {
        let t = k as f64 * config.sample_every;
        if t >= config.t_end * (1.0 - 1e-12) {
            break;
        }
        times.push(t);
        k += 1;
    }
    times.push(config.t_end);
    times
}

fn column_names(outputs: &[Observable]) -> Vec<String> {
    let mut names = Vec::new();
    for o in outputs {
        match o {
            Observable::PhotonNumber => names.push("N".to_string()),
            Observable::J2 => names.push("J2".to_string()),
            Observable::Ratio => names.push("ratio".to_string()),
            Observable::Variances => {
                for c in [CMode::C1, CMode::C2, CMode::C3, CMode::C4] {
                    let i = c.index() + 1;
                    names.push(format!("var_x{i}"));
                    names.push(format!("var_p{i}"));
                }
            }
            Observable::UncertaintyFloor => names.push("uncertainty_floor".to_string()),
        }
    }
    names
}

fn measure(state: &CovarianceState, outputs: &[Observable], tol: &Tolerances) -> Result<Vec<f64>> {
    let n = expect_quadratic(state, &number_quadratic_form()).max(0.0);
    let j2 = expect_j2(state, tol)?;
    let mut row = Vec::new();
    for o in outputs {
        match o {
            Observable::PhotonNumber => row.push(n),
            Observable::J2 => row.push(j2),
            Observable::Ratio => {
                row.push(WitnessReport::from_moments(j2, n, tol)?.ratio.unwrap_or(f64::NAN))
            }
            Observable::Variances => {
                for c in [CMode::C1, CMode::C2, CMode::C3, CMode::C4] {
                    let (x, p) = (Quadrature::X(c).index(), Quadrature::P(c).index());
                    row.push(state.sigma[(x, x)]);
                    row.push(state.sigma[(p, p)]);
                }
            }
            Observable::UncertaintyFloor => row.push(state.uncertainty_floor()),
        }
    }
    Ok(row)
}

fn base_metadata(config_json: String) -> Vec<(String, String)> {
    vec![
        ("tool".into(), format!("entlaser {VERSION}")),
        ("seed".into(), SEED.to_string()),
        ("config".into(), config_json),
    ]
}

/// Integrates from vacuum and records the requested observables at
/// `0, sample_every, 2·sample_every, …` and at `t_end`.
pub fn run_evolve(config: &ScenarioConfig, tol: &Tolerances) -> Result<TimeSeries> {
    config.validate()?;
    let names = column_names(&config.outputs);
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); names.len()];
    let times = sample_times(config);
    let mut state = CovarianceState::vacuum();
    for &t in &times {
        let span = t - state.t;
        if span > 0.0 {
            state = evolve_rk4(&state, &config.spec, t, config.step.min(span))?;
        }
        let row = measure(&observed(&state, config)?, &config.outputs, tol)?;
        for (col, v) in columns.iter_mut().zip(row) {
            col.push(v);
        }
    }
    Ok(TimeSeries {
        times,
        columns: names.into_iter().zip(columns).collect(),
        metadata: base_metadata(config.to_json()),
    })
}

/// Final-time results of a sweep, one row per grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub fields: Vec<String>,
    pub rows: Vec<SweepRow>,
    pub metadata: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub coordinates: Vec<f64>,
    pub n: f64,
    pub j2: f64,
    pub ratio: Option<f64>,
    pub verdict: Verdict,
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Entangled => "entangled",
        Verdict::Inconclusive => "inconclusive",
        Verdict::Vacuous => "vacuous",
    }
}

impl SweepTable {
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k}: {v}");
        }
        let _ = writeln!(out, "{},N,J2,ratio,verdict", self.fields.join(","));
        for r in &self.rows {
            let coords: Vec<String> = r.coordinates.iter().map(|&c| format_number(c)).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                coords.join(","),
                format_number(r.n),
                format_number(r.j2),
                format_number(r.ratio.unwrap_or(f64::NAN)),
                verdict_name(r.verdict)
            );
        }
        out
    }
}

/// Runs every grid point on up to `workers` threads (all cores if `None`).
/// Each point is evaluated exactly as [`run_evolve`] would at its final time.
pub fn run_sweep(config: &SweepConfig, workers: Option<usize>, tol: &Tolerances) -> Result<SweepTable> {
    let count = config.point_count();
    let budget = config.budget.unwrap_or(tol.max_sweep_runs);
    if count > budget {
        return Err(Error::RunBudget { count, budget });
    }
    let points = config.points();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let rows: Vec<Result<SweepRow>> = pool.install(|| {
        points
            .par_iter()
            .map(|(coords, point)| {
                let mut point = point.clone();
                point.outputs = vec![Observable::PhotonNumber, Observable::J2];
                let series = run_evolve(&point, tol)?;
                let n = *series.column("N").and_then(|c| c.last()).expect("N recorded");
                let j2 = *series.column("J2").and_then(|c| c.last()).expect("J2 recorded");
                let outcome = criterion(j2, n, tol)?;
                Ok(SweepRow { coordinates: coords.clone(), n, j2, ratio: outcome.ratio, verdict: outcome.verdict })
            })
            .collect()
    });
    Ok(SweepTable {
        fields: config.grid.iter().map(|a| a.field.name().to_string()).collect(),
        rows: rows.into_iter().collect::<Result<_>>()?,
        metadata: base_metadata(serde_json::to_string(config).expect("sweep serializes")),
    })
}

/// Human-readable and CSV renderings of the imperfection tolerances.
pub fn run_thresholds(n_mean: f64, kappa: f64) -> Result<(ThresholdReport, String, String)> {
    let r = thresholds(n_mean, kappa)?;
    let entries = [
        ("n_mean", r.n_mean, "target mean photon number"),
        ("kappa", r.kappa, "pair-creation rate"),
        ("delta_eta_max", r.delta_eta_max, "transmission imbalance, 2√2/√N"),
        ("delta_lambda_over_kappa_max", r.delta_lambda_over_kappa_max, "loss-rate imbalance over κ, 4/√N"),
        ("delta_lambda_max", r.delta_lambda_max, "loss-rate imbalance"),
        ("phi_max_sqrt", r.phi_max_sqrt, "phase mismatch, 4/(√3·√N)"),
        ("phi_max_linear", r.phi_max_linear, "phase mismatch, 4/(√3·N)"),
        ("eta_critical", r.eta_critical, "balanced transmission needed"),
    ];
    let mut text = String::new();
    let mut csv = String::from("quantity,value\n");
    for (name, value, what) in entries {
        let _ = writeln!(text, "{name:<28} {value:<12.4e} {what}");
        let _ = writeln!(csv, "{name},{}", format_number(value));
    }
    Ok((r, text, csv))
}

/// Loss-rate imbalances of the three published curves.
pub const FIG2_IMBALANCES: [f64; 3] = [0.0, 0.001, 0.002];

/// κ₀ = 1, mean loss 0.03, pump decay 0.01, sampled every 0.05 up to t = 8.
pub fn fig2_config(delta_lambda: f64) -> ScenarioConfig {
    let spec = DriftSpec::balanced(1.0, 0.01, 0.03).with_loss_imbalance(0.03, delta_lambda);
    ScenarioConfig {
        sample_every: 0.05,
        outputs: vec![Observable::PhotonNumber, Observable::J2, Observable::Ratio],
        ..ScenarioConfig::new(spec, 8.0)
    }
}

#[derive(Debug, Clone)]
pub struct Fig2Output {
    /// One series per entry of [`FIG2_IMBALANCES`].
    pub runs: Vec<(f64, TimeSeries)>,
    pub files: Vec<PathBuf>,
}

impl Fig2Output {
    /// All three curves side by side.
    pub fn combined(&self) -> TimeSeries {
        let mut columns = Vec::new();
        let mut configs = Vec::new();
        for (dl, ts) in &self.runs {
            for (name, col) in &ts.columns {
                columns.push((format!("{name}_dl{dl}"), col.clone()));
            }
            configs.push(ts.metadata("config").unwrap_or_default().to_string());
        }
        let mut metadata = base_metadata(format!("[{}]", configs.join(",")));
        metadata.insert(0, ("preset".into(), "fig2".into()));
        TimeSeries { times: self.runs[0].1.times.clone(), columns, metadata }
    }
}

/// Runs the three curves and, if `out_dir` is given, writes `fig2.csv`,
/// `fig2_ratio.svg` and `fig2_photons.svg` there.
pub fn run_fig2(out_dir: Option<&Path>, tol: &Tolerances) -> Result<Fig2Output> {
    let runs: Vec<(f64, TimeSeries)> = FIG2_IMBALANCES
        .par_iter()
        .map(|&dl| run_evolve(&fig2_config(dl), tol).map(|ts| (dl, ts)))
        .collect::<Result<_>>()?;
    let mut out = Fig2Output { runs, files: Vec::new() };
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir)?;
        let labels: Vec<String> = out.runs.iter().map(|(dl, _)| format!("Δλ = {dl}")).collect();
        let chart = |column: &str, log_y: bool, y_label: &str, title: &str| {
            let series: Vec<Series> = out
                .runs
                .iter()
                .zip(&labels)
                .map(|((_, ts), label)| Series { label, x: &ts.times, y: ts.column(column).expect("column recorded") })
                .collect();
            render_svg(title, "t (passes)", y_label, &series, log_y)
        };
        let ratio_svg = chart("ratio", false, "⟨J²⟩/⟨N⟩", "Witness ratio");
        let photons_svg = chart("N", true, "⟨N⟩", "Mean photon number");
        let files = [
            (dir.join("fig2.csv"), out.combined().to_csv_string()),
            (dir.join("fig2_ratio.svg"), ratio_svg),
            (dir.join("fig2_photons.svg"), photons_svg),
        ];
        for (path, body) in files {
            std::fs::write(&path, body)?;
            out.files.push(path);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::{GridAxis, SweepField};

    fn quick(spec: DriftSpec, t_end: f64) -> ScenarioConfig {
        ScenarioConfig { step: 0.01, sample_every: 0.25, ..ScenarioConfig::new(spec, t_end) }
    }

    #[test]
    fn zero_time_is_one_vacuum_row() {
        let ts = run_evolve(&quick(DriftSpec::lossless(1.0), 0.0), &Tolerances::default()).unwrap();
        assert_eq!(ts.times, vec![0.0]);
        assert_eq!(ts.column("N").unwrap(), &[0.0]);
        assert!(ts.column("ratio").unwrap()[0].is_nan());
    }

    #[test]
    fn samples_end_on_t_end() {
        let c = ScenarioConfig { sample_every: 0.3, ..quick(DriftSpec::lossless(1.0), 1.0) };
        let times = sample_times(&c);
        assert_eq!(times.len(), 5);
        assert_eq!(*times.last().unwrap(), 1.0);
        assert!((times[3] - 0.9).abs() < 1e-15);
    }

    #[test]
    fn columns_follow_declared_order() {
        let c = ScenarioConfig {
            outputs: vec![Observable::Ratio, Observable::Variances, Observable::PhotonNumber],
            ..quick(DriftSpec::lossless(1.0), 0.5)
        };
        let ts = run_evolve(&c, &Tolerances::default()).unwrap();
        let names: Vec<&str> = ts.columns.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names[0], "ratio");
        assert_eq!(names[1], "var_x1");
        assert_eq!(names[8], "var_p4");
        assert_eq!(names[9], "N");
        assert!(ts.columns.iter().all(|(_, v)| v.len() == ts.len()));
    }

    #[test]
    fn eta_sweep_on_ideal_state() {
        let sweep = SweepConfig {
            base: quick(DriftSpec::lossless(1.0), 0.5),
            grid: vec![GridAxis { field: SweepField::Eta, values: vec![0.2, 1.0 / 3.0, 0.5, 0.9] }],
            budget: None,
        };
        let table = run_sweep(&sweep, Some(2), &Tolerances::default()).unwrap();
        let expected = [0.6, 0.5, 0.375, 0.075];
        for (row, want) in table.rows.iter().zip(expected) {
            assert!((row.ratio.unwrap() - want).abs() < 1e-8, "{row:?}");
        }
        assert_eq!(table.rows[0].verdict, Verdict::Inconclusive);
        assert_eq!(table.rows[1].verdict, Verdict::Inconclusive);
        assert_eq!(table.rows[3].verdict, Verdict::Entangled);
    }

    #[test]
    fn single_point_sweep_matches_evolve() {
        let base = quick(DriftSpec::balanced(1.0, 0.01, 0.03), 1.3);
        let sweep = SweepConfig {
            base: base.clone(),
            grid: vec![GridAxis { field: SweepField::LossImbalance, values: vec![0.002] }],
            budget: Some(1),
        };
        let row = &run_sweep(&sweep, Some(1), &Tolerances::default()).unwrap().rows[0];
        let mut direct = base;
        direct.spec = direct.spec.with_loss_imbalance(0.03, 0.002);
        let ts = run_evolve(&direct, &Tolerances::default()).unwrap();
        assert_eq!(row.n, *ts.column("N").unwrap().last().unwrap());
        assert_eq!(row.ratio.unwrap(), *ts.column("ratio").unwrap().last().unwrap());
    }

    #[test]
    fn sweep_budget_refuses_with_count() {
        let sweep = SweepConfig {
            base: quick(DriftSpec::lossless(1.0), 0.5),
            grid: vec![
                GridAxis { field: SweepField::Eta, values: vec![0.5; 3] },
                GridAxis { field: SweepField::TEnd, values: vec![0.5; 4] },
            ],
            budget: Some(10),
        };
        match run_sweep(&sweep, None, &Tolerances::default()) {
            Err(Error::RunBudget { count: 12, budget: 10 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn threshold_outputs() {
        let (r, text, csv) = run_thresholds(1e6, 1.0).unwrap();
        assert!((r.delta_eta_max - 2.83e-3).abs() < 5e-6);
        assert!(text.contains("phi_max_sqrt"));
        assert_eq!(csv.lines().count(), 9);
        assert!(run_thresholds(0.0, 1.0).is_err());
    }
}
