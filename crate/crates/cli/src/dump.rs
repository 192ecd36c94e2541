//! CSV dumps of sampled fields and geodesic trajectories.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use conekahler_core::verify::{FieldGrid, GeodesicReport};

use crate::error::{CliError, CliResult};

/// Column order of the metric components in field dumps.
pub const METRIC_COLUMNS: [&str; 10] = [
    "g_θθ", "g_θz", "g_θ2", "g_θ3", "g_zz", "g_z2", "g_z3", "g_22", "g_23", "g_33",
];

/// Field CSV: `#` header lines give the chart bounds, shape and component
/// order, followed by one row per node with `x3` varying fastest.
pub fn field_csv(name: &str, g: &FieldGrid) -> String {
    let hi = |k: usize| g.origin[k] + g.spacing * (g.shape[k] - 1) as f64;
    let mut s = String::new();
    let _ = writeln!(s, "# grid: {name}");
    let _ = writeln!(s, "# chart: (theta, z, x2, x3), theta in [0, 2*pi)");
    let _ = writeln!(
        s,
        "# bounds: z=[{:?}, {:?}] x2=[{:?}, {:?}] x3=[{:?}, {:?}]",
        g.origin[0],
        hi(0),
        g.origin[1],
        hi(1),
        g.origin[2],
        hi(2)
    );
    let _ = writeln!(s, "# shape: {} {} {}", g.shape[0], g.shape[1], g.shape[2]);
    let _ = writeln!(s, "# spacing: {:?}", g.spacing);
    let _ = writeln!(s, "# components: {}", METRIC_COLUMNS.join(" "));
    let _ = writeln!(s, "z,x2,x3,{}", METRIC_COLUMNS.join(","));
    for i in 0..g.shape[0] {
        for j in 0..g.shape[1] {
            for k in 0..g.shape[2] {
                let p = g.point(i, j, k);
                let row = &g.metric[g.index(i, j, k)];
                let _ = write!(s, "{:?},{:?},{:?}", p.z, p.x2, p.x3);
                for x in row {
                    let _ = write!(s, ",{x:?}");
                }
                s.push('\n');
            }
        }
    }
    s
}

/// Trajectory CSV: one row per accepted step of every shot.
pub fn trajectory_csv(reports: &[GeodesicReport]) -> String {
    let mut s = String::from("# momenta: (q, pi_z, pi_2, pi_3) of the reduced flow\n");
    s.push_str("shot,status,arc_length,theta,z,x2,x3,p0,p1,p2,p3,energy\n");
    for (n, r) in reports.iter().enumerate() {
        let status = serde_json::to_value(&r.status)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        let rows = if r.trajectory.is_empty() {
            vec![r.initial, r.last]
        } else {
            r.trajectory.clone()
        };
        for st in rows {
            let _ = write!(s, "{n},{status},{:?}", st.arc_length);
            for x in st.position.iter().chain(&st.momentum) {
                let _ = write!(s, ",{x:?}");
            }
            let _ = writeln!(s, ",{:?}", st.energy);
        }
    }
    s
}

pub fn write(path: &Path, text: &str) -> CliResult<()> {
    if let Some(d) = path.parent() {
        fs::create_dir_all(d).map_err(|e| CliError::Io(format!("{}: {e}", d.display())))?;
    }
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
