//! The subcommands, as library functions so tests can drive them directly.

use std::path::{Path, PathBuf};

use crate::cache::{self, Stored};
use crate::config::Scenario;
use crate::dump;
use crate::error::{CliError, CliResult};
use crate::measure::{measure, measure_grids, Model, Selection};
use crate::report::{assess_all, RunReport};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub config: PathBuf,
    pub seed: Option<u64>,
    pub out: PathBuf,
    pub tol_scale: f64,
}

impl RunOptions {
    pub fn new(config: impl Into<PathBuf>, out: impl Into<PathBuf>) -> Self {
        Self {
            config: config.into(),
            seed: None,
            out: out.into(),
            tol_scale: 1.0,
        }
    }

    fn check(&self) -> CliResult<()> {
        if !(self.tol_scale.is_finite() && self.tol_scale > 0.0) {
            return Err(CliError::Config(format!("--tol-scale must be positive, got {}", self.tol_scale)));
        }
        Ok(())
    }
}

pub fn report_path(out: &Path) -> PathBuf {
    out.join("report.json")
}

fn write_report(out: &Path, r: &RunReport) -> CliResult<()> {
    let text = serde_json::to_string_pretty(r).map_err(|e| CliError::Io(e.to_string()))?;
    dump::write(&report_path(out), &(text + "\n"))
}

struct Prepared {
    scenario: Scenario,
    model: Model,
    seed: u64,
    hash: String,
}

fn prepare(o: &RunOptions) -> CliResult<Prepared> {
    o.check()?;
    let scenario = Scenario::load(&o.config)?;
    let model = Model::build(&scenario)?;
    Ok(Prepared {
        seed: scenario.seed(o.seed),
        hash: scenario.hash(),
        scenario,
        model,
    })
}

fn finish(o: &RunOptions, p: &Prepared, command: &str, b: crate::measure::Battery) -> CliResult<RunReport> {
    let tol = p.scenario.config.tolerances.scaled(o.tol_scale);
    let id = &p.scenario.config.id;
    let checks = assess_all(id, &b.measurements, &tol);
    let r = RunReport::new(command, id, &p.hash, p.seed, o.tol_scale, checks, b.timings);
    write_report(&o.out, &r)?;
    Ok(r)
}

/// Measures and assesses everything in one pass.
pub fn verify(o: &RunOptions) -> CliResult<RunReport> {
    let p = prepare(o)?;
    let (b, _, _) = measure(&p.scenario, &p.model, p.seed, Selection::All, &[], false)?;
    finish(o, &p, "verify", b)
}

/// Measures everything and caches the results and sampled grids; writes the
/// field dumps. Returns the cache manifest.
pub fn solve(o: &RunOptions) -> CliResult<cache::Manifest> {
    let p = prepare(o)?;
    let (b, grids, _) = measure(&p.scenario, &p.model, p.seed, Selection::All, &[], false)?;
    for (name, g) in &grids {
        dump::write(&o.out.join("fields").join(format!("{name}.csv")), &dump::field_csv(name, g))?;
    }
    let m = cache::manifest(&p.scenario.config.id, &p.hash, p.seed, &grids);
    let stored = Stored {
        measurements: b.measurements,
        timings: b.timings,
    };
    cache::save(&o.out, &m, &stored, &grids)?;
    Ok(m)
}

/// Re-assesses a cache written by [`solve`]. Grid checks are recomputed from
/// the cached samples; nothing else touches the solver.
pub fn report(o: &RunOptions) -> CliResult<RunReport> {
    o.check()?;
    let scenario = Scenario::load(&o.config)?;
    let hash = scenario.hash();
    let (manifest, mut stored, grids) = cache::load(&o.out, &hash, o.seed)?;
    let t = std::time::Instant::now();
    let recomputed = measure_grids(&scenario, &grids);
    for fresh in recomputed {
        let slot = stored
            .measurements
            .iter_mut()
            .find(|m| m.check == fresh.check && m.target == fresh.target)
            .ok_or_else(|| CliError::Cache(format!("cache lacks {}", fresh.label())))?;
        *slot = fresh;
    }
    stored.timings.insert("report_grid_checks".into(), t.elapsed().as_secs_f64());
    let tol = scenario.config.tolerances.scaled(o.tol_scale);
    let id = &scenario.config.id;
    let checks = assess_all(id, &stored.measurements, &tol);
    let r = RunReport::new("report", id, &hash, manifest.seed, o.tol_scale, checks, stored.timings);
    write_report(&o.out, &r)?;
    Ok(r)
}

/// Cone-angle probes only, at the configured feet plus `extra`.
pub fn probe_cone(o: &RunOptions, extra: &[[f64; 2]]) -> CliResult<RunReport> {
    let p = prepare(o)?;
    let (b, _, _) = measure(&p.scenario, &p.model, p.seed, Selection::Cone, extra, false)?;
    finish(o, &p, "probe-cone", b)
}

/// Geodesic shots only; writes `trajectories.csv`.
pub fn geodesic(o: &RunOptions) -> CliResult<RunReport> {
    let p = prepare(o)?;
    let (b, _, reports) = measure(&p.scenario, &p.model, p.seed, Selection::Geodesics, &[], true)?;
    dump::write(&o.out.join("trajectories.csv"), &dump::trajectory_csv(&reports))?;
    finish(o, &p, "geodesic", b)
}

/// A plain-text table of the checks.
pub fn render(r: &RunReport) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    let _ = writeln!(s, "scenario {} (seed {}, config {})", r.scenario, r.seed, &r.config_hash[..12]);
    for c in &r.checks {
        let label = match &c.target {
            Some(t) => format!("{}[{t}]", c.name),
            None => c.name.clone(),
        };
        let status = serde_json::to_value(c.status).unwrap();
        let _ = writeln!(s, "  {:<8} {label:<36} {}", status.as_str().unwrap_or("?"), c.message);
    }
    let _ = writeln!(
        s,
        "{} passed, {} failed, {} skipped, {} errors",
        r.summary.pass, r.summary.fail, r.summary.skipped, r.summary.error
    );
    s
}
