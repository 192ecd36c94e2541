//! End-to-end behaviour of the runner: reproducibility, caching, skips and
//! configuration errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use conekahler_cli::commands::{self, RunOptions};
use conekahler_cli::report::without_timings;
use conekahler_cli::{CliError, Status};
use serde_json::Value;

fn repo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

/// A cheap scenario touching every check family that has a constant-β fast path.
const SMALL: &str = r#"
id = "small"
seed = 3

[beta]
constant = 0.8

[charges]
points = []

[[grids]]
name = "g"
z = [0.7, 0.76]
x2 = [0.0, 0.06]
x3 = [0.0, 0.06]
spacing = 0.02

[checks.harmonicity]
points = [[0.5, 0.0, 0.0]]

[checks.max_principle]
samples = 20
z = [0.01, 2.0]
half_width = 2.0

[checks.metric_identities]
points = [[0.5, 0.1, 0.2]]

[checks.curvature]

[checks.cone]
probes = [[0.0, 0.0]]

[checks.quasi_isometry]

[checks.geodesics]
shots = 6
adversarial = 2
z = [0.5, 1.5]
x2 = [-1.0, 1.0]
x3 = [-1.0, 1.0]

[checks.geodesics.integrator]
length = 20.0
"#;

fn write_config(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn opts(config: &Path, out: &Path, seed: Option<u64>) -> RunOptions {
    let mut o = RunOptions::new(config, out);
    o.seed = seed;
    o
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn verify_is_reproducible_for_a_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "s.toml", SMALL);
    let a = commands::verify(&opts(&cfg, &dir.path().join("a"), Some(9))).unwrap();
    let b = commands::verify(&opts(&cfg, &dir.path().join("b"), Some(9))).unwrap();
    assert!(a.passed, "{}", commands::render(&a));
    assert_eq!(without_timings(&a), without_timings(&b));
    // the files on disk agree too, bit for bit outside the timings
    let mut fa = read_json(&dir.path().join("a/report.json"));
    let mut fb = read_json(&dir.path().join("b/report.json"));
    fa.as_object_mut().unwrap().remove("timings");
    fb.as_object_mut().unwrap().remove("timings");
    assert_eq!(fa, fb);
    assert_eq!(fa, without_timings(&a));
    let c = commands::verify(&opts(&cfg, &dir.path().join("c"), Some(10))).unwrap();
    assert_eq!(c.seed, 10);
    assert_ne!(without_timings(&a)["checks"], without_timings(&c)["checks"]);
}

#[test]
fn solve_then_report_matches_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "s.toml", SMALL);
    let out = dir.path().join("run");
    let direct = commands::verify(&opts(&cfg, &dir.path().join("direct"), None)).unwrap();
    let m = commands::solve(&opts(&cfg, &out, None)).unwrap();
    assert_eq!(m.grids, vec!["g".to_string()]);
    let field = fs::read_to_string(out.join("fields/g.csv")).unwrap();
    assert!(field.contains("# components: g_θθ g_θz g_θ2 g_θ3 g_zz g_z2 g_z3 g_22 g_23 g_33"));
    let cached = commands::report(&opts(&cfg, &out, None)).unwrap();
    assert_eq!(cached.checks, direct.checks);
    assert_eq!(cached.seed, direct.seed);
    assert_eq!(cached.config_hash, direct.config_hash);
    // a looser tolerance scale re-assesses without re-solving
    let loose = commands::report(&RunOptions { tol_scale: 10.0, ..opts(&cfg, &out, None) }).unwrap();
    assert_eq!(loose.checks.len(), direct.checks.len());
    assert_eq!(loose.tol_scale, 10.0);
}

#[test]
fn report_refuses_a_mismatched_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "s.toml", SMALL);
    let out = dir.path().join("run");
    assert!(matches!(commands::report(&opts(&cfg, &out, None)), Err(CliError::Cache(_))));
    commands::solve(&opts(&cfg, &out, None)).unwrap();
    let other = write_config(dir.path(), "t.toml", &SMALL.replace("constant = 0.8", "constant = 0.9"));
    assert!(matches!(commands::report(&opts(&other, &out, None)), Err(CliError::Cache(_))));
    assert!(matches!(commands::report(&opts(&cfg, &out, Some(99))), Err(CliError::Cache(_))));
    let manifest = out.join("cache/manifest.json");
    let mut m = read_json(&manifest);
    m["schema_hash"] = Value::String("0".repeat(64));
    fs::write(&manifest, serde_json::to_string(&m).unwrap()).unwrap();
    match commands::report(&opts(&cfg, &out, None)) {
        Err(CliError::Cache(msg)) => assert!(msg.contains("schema")),
        other => panic!("expected a schema refusal, got {other:?}"),
    }
}

#[test]
fn probe_on_a_charge_line_is_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let text = SMALL.replace("points = []", "points = [[1.0, 0.5, -0.5]]");
    let cfg = write_config(dir.path(), "c.toml", &text);
    let r = commands::probe_cone(&opts(&cfg, dir.path(), None), &[[0.5, -0.5]]).unwrap();
    let probes: Vec<_> = r.check("cone_angle").collect();
    assert_eq!(probes.len(), 2);
    assert_eq!(probes[0].status, Status::Pass);
    assert_eq!(probes[1].status, Status::Skipped);
    assert!(probes[1].passed);
    assert!(r.passed);
    let disk = read_json(&dir.path().join("report.json"));
    assert_eq!(disk["checks"][1]["status"], "skipped");
}

#[test]
fn geodesic_writes_trajectories() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "s.toml", SMALL);
    let r = commands::geodesic(&opts(&cfg, dir.path(), None)).unwrap();
    assert_eq!(r.checks.len(), 1);
    assert!(r.passed);
    let csv = fs::read_to_string(dir.path().join("trajectories.csv")).unwrap();
    let header = csv.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "shot,status,arc_length,theta,z,x2,x3,p0,p1,p2,p3,energy");
    let shots: std::collections::BTreeSet<&str> =
        csv.lines().skip(2).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(shots.len(), 8);
}

#[test]
fn reports_validate_against_the_shipped_schema() {
    let schema = read_json(&repo().join("docs/report.schema.json"));
    let validator = jsonschema::validator_for(&schema).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "s.toml", SMALL);
    commands::verify(&opts(&cfg, dir.path(), None)).unwrap();
    let report = read_json(&dir.path().join("report.json"));
    let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    let mut broken = report.clone();
    broken["checks"][0]["status"] = Value::String("maybe".into());
    assert!(!validator.is_valid(&broken));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_conekahler");
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "s.toml", SMALL);
    let ok = Command::new(bin)
        .args(["probe-cone", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(dir.path())
        .args(["--at", "0.5,0.5", "--seed", "4"])
        .output()
        .unwrap();
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("cone_angle[(0.5, 0.5)]"));
    assert_eq!(read_json(&dir.path().join("report.json"))["seed"], 4);

    // tolerances scaled to nothing make the probes fail
    let fail = Command::new(bin)
        .args(["probe-cone", "--tol-scale", "1e-30", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(2));

    let bad = write_config(dir.path(), "bad.toml", &SMALL.replace("[charges]\npoints = []", "[charges]\npoints = [[0.0, 1.0, 1.0]]"));
    let err = Command::new(bin).args(["verify", "--config"]).arg(&bad).arg("--out").arg(dir.path()).output().unwrap();
    assert_eq!(err.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&err.stderr).contains("error"));
}

#[test]
fn shipped_scenarios_parse() {
    let dir = repo().join("scenarios");
    let mut n = 0;
    for entry in fs::read_dir(&dir).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "toml") {
            let s = conekahler_cli::Scenario::load(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
            s.cone_angle_spec().unwrap();
            s.charge_config().unwrap();
            for g in &s.config.grids {
                assert_eq!(g.spacing, 0.02, "{}: default resolution", p.display());
            }
            n += 1;
        }
    }
    assert_eq!(n, 5);
}
