//! Suite runner.
//!
//! Suite file: `{"instances":[{"instance":"path","expect":"conjugate|unknown"}]}`.
//! Paths are relative to the suite file. An entry may name its own
//! `"group"` file; otherwise the `--group` file is used.

use std::path::{Path, PathBuf};

use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Value};

use super::{
    decision_json, exit, load_group, load_instance, load_instance_file, run_solve, Failure, Loaded,
};
use crate::gcp::{relative_length_bound, ConstantsProfile, SearchConfig, Verdict};
use crate::relative::relative_length;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
enum Expect {
    Conjugate,
    NotConjugate,
    Unknown,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    instance: PathBuf,
    #[serde(default = "unknown")]
    expect: Expect,
    group: Option<PathBuf>,
}

fn unknown() -> Expect {
    Expect::Unknown
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Suite {
    instances: Vec<Entry>,
}

/// Returns the result payload and the exit code: 0 when every expectation
/// holds, 1 otherwise.
pub(super) fn run(
    default_group: Option<&Path>,
    suite_path: &Path,
    profile: Option<&ConstantsProfile>,
    config: &SearchConfig,
    timing: bool,
) -> Result<(Value, i32), Failure> {
    let text = std::fs::read_to_string(suite_path)
        .map_err(|e| Failure::input(format!("{}: {e}", suite_path.display())))?;
    let suite: Suite = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", suite_path.display())))?;
    let base = suite_path.parent().unwrap_or(Path::new(""));
    let mut rows = Vec::new();
    let mut counts = [0usize; 3];
    let mut failures = 0;
    for entry in &suite.instances {
        let group = match (&entry.group, default_group) {
            (Some(p), _) => load_group(&base.join(p))?,
            (None, Some(p)) => load_group(p)?,
            (None, None) => {
                return Err(Failure::input(format!(
                    "{}: no group given",
                    entry.instance.display()
                )))
            }
        };
        let file = load_instance_file(&base.join(&entry.instance))?;
        let mut row = json!({
            "instance": entry.instance.display().to_string(),
            "expect": match entry.expect {
                Expect::Conjugate => "conjugate",
                Expect::NotConjugate => "not_conjugate",
                Expect::Unknown => "unknown",
            },
        });
        let verdict = match load_instance(&group, &file)? {
            Loaded::Inconsistent { .. } => {
                row["verdict"] = json!("not_conjugate");
                Verdict::NotConjugate { radius: 0u32.into() }
            }
            Loaded::Instance(inst) => {
                let d = run_solve(&inst, profile, config)?;
                let decision = decision_json(&group, &d);
                row["verdict"] = decision["verdict"].clone();
                row["elements_enumerated"] = json!(d.stats.elements_enumerated);
                if timing {
                    row["wall_time_ms"] = json!(d.stats.wall_time.as_secs_f64() * 1e3);
                }
                let bound = profile.and_then(|p| {
                    relative_length_bound(inst.mu() as u64, group.alphabet().len() as u64, p).ok()
                });
                row["relative_bound"] = json!(bound.as_ref().map(|b| b.to_string()));
                if let Some(w) = d.witness() {
                    let rel = relative_length(&group, w).ok();
                    row["witness_length"] = json!(group.x_length(w));
                    row["witness_relative_length"] = json!(rel);
                    if let (Some(rel), Some(b)) = (rel, &bound) {
                        row["ratio"] = json!(b.to_f64().map(|b| rel as f64 / b));
                    }
                }
                d.verdict
            }
        };
        let slot = match verdict {
            Verdict::Conjugate { .. } => 0,
            Verdict::NotConjugate { .. } => 1,
            Verdict::Inconclusive { .. } => 2,
        };
        counts[slot] += 1;
        let met = match entry.expect {
            Expect::Conjugate => slot == 0,
            Expect::NotConjugate => slot != 0,
            Expect::Unknown => true,
        };
        if !met {
            failures += 1;
        }
        row["expectation_met"] = json!(met);
        rows.push(row);
    }
    let result = json!({
        "total": rows.len(),
        "conjugate": counts[0],
        "not_conjugate": counts[1],
        "inconclusive": counts[2],
        "expectation_failures": failures,
        "rows": rows,
    });
    let code = if failures == 0 { 0 } else { exit::NOT_CONJUGATE };
    Ok((result, code))
}
