//! End-to-end binary checks: recipes execute, output lands where asked,
//! modes and exit codes behave.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_irsnoma"))
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

fn recipe(name: &str) -> PathBuf {
    repo_root().join("recipes").join(name)
}

#[test]
fn missing_config_exits_2() {
    let out = bin()
        .args(["outage-sweep", "--config", "/nonexistent/nope.toml"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
}

#[test]
fn invalid_config_exits_2_with_key_context() {
    let dir = std::env::temp_dir().join("irsnoma_cli_bad_cfg");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("bad.toml");
    std::fs::write(&p, "[network]\nreflecting_elements = 3\npartition = 2\ngroup_size = 2\n")
        .unwrap();
    let out = bin().args(["outage-sweep", "--config"]).arg(&p).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("K must equal P*Q"));

    std::fs::write(&p, "[network]\nnum_userz = 3\n").unwrap();
    let out = bin().args(["outage-sweep", "--config"]).arg(&p).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output_is_valid_enough() {
    let out = bin()
        .args(["outage-sweep", "--config"])
        .arg(recipe("fig2.toml"))
        .args(["--trials", "5000", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_start().starts_with('['));
    assert!(text.trim_end().ends_with(']'));
    assert!(text.contains("\"scheme\":\"irs-noma-psic\""));
    assert!(text.matches("\"method\":\"mc\"").count() > 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("irsnoma_cli_out");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("table.csv");
    let out = bin()
        .args(["outage-sweep", "--config"])
        .arg(recipe("fig2.toml"))
        .args(["--trials", "5000", "--out"])
        .arg(&p)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&p).unwrap();
    assert!(text.starts_with("scheme,user,metric,method,snr_db,"));
}

#[test]
fn ordering_override_changes_estimates_for_multi_group() {
    // two groups: the per-column analysis ensemble and the per-user selection
    // scheme are genuinely different estimands
    let a = bin()
        .args(["outage-sweep", "--config"])
        .arg(recipe("fig5.toml"))
        .args(["--trials", "40000", "--ordering", "per-column"])
        .output()
        .unwrap();
    let b = bin()
        .args(["outage-sweep", "--config"])
        .arg(recipe("fig5.toml"))
        .args(["--trials", "40000", "--ordering", "effective-gain"])
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn validate_flags_mismatched_ordering_with_exit_4() {
    // closed forms are derived for per-column ordering; validating the
    // selection-scheme simulation against them must breach the z budget
    let out = bin()
        .args(["validate", "--config"])
        .arg(recipe("fig6.toml"))
        .args(["--trials", "200000", "--ordering", "effective-gain"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("validation breach"));
}

#[test]
fn validate_passes_on_matched_ordering() {
    let out = bin()
        .args(["validate", "--config"])
        .arg(recipe("fig2.toml"))
        .args(["--trials", "100000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn validate_z_budget_holds_across_all_recipes() {
    for name in [
        "fig2.toml",
        "fig3.toml",
        "fig4.toml",
        "fig5.toml",
        "fig6.toml",
        "fig7.toml",
        "fig8.toml",
        "fig9.toml",
        "fig10.toml",
        "fig11.toml",
        "fig12.toml",
    ] {
        let out = bin()
            .args(["validate", "--config"])
            .arg(recipe(name))
            .args(["--trials", "40000", "--seed", "1"])
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn unsupported_quadrature_order_exits_3() {
    let out = bin()
        .args(["outage-sweep", "--config"])
        .arg(recipe("fig2.toml"))
        .args(["--trials", "1000", "--quad-u", "500"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("quadrature"));
}

#[test]
fn all_recipes_execute_quickly() {
    // every shipped recipe, reduced trial budget, well under the 5-minute line
    let start = std::time::Instant::now();
    for (recipe_name, experiment) in [
        ("fig2.toml", "outage-sweep"),
        ("fig3.toml", "outage-sweep"),
        ("fig4.toml", "outage-sweep"),
        ("fig5.toml", "outage-sweep"),
        ("fig6.toml", "outage-sweep"),
        ("fig7.toml", "distance-sweep"),
        ("fig8.toml", "power-grid"),
        ("fig9.toml", "ergodic-sweep"),
        ("fig10.toml", "ergodic-sweep"),
        ("fig11.toml", "energy-sweep"),
        ("fig12.toml", "energy-sweep"),
    ] {
        let out = bin()
            .args([experiment, "--config"])
            .arg(recipe(recipe_name))
            .args(["--trials", "100000"])
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{recipe_name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.lines().count() > 1, "{recipe_name}: empty table");
        // per-point failures would land in the error column
        for line in text.lines().skip(1) {
            assert!(line.ends_with(','), "{recipe_name}: error column not empty: {line}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "recipes took {elapsed:?}");
    println!("all 11 recipes at 1e5 trials in {elapsed:?}");
}
