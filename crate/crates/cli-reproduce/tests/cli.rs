//! End-to-end runs of the `reproduce` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn reproduce(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_reproduce"));
    cmd.args(args).env_remove("REPRODUCE_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn rows(path: &Path) -> Vec<Vec<String>> {
    let text = fs::read_to_string(path).unwrap();
    text.lines()
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

fn column(path: &Path, name: &str) -> Vec<f64> {
    let r = rows(path);
    let i = r[0].iter().position(|h| h == name).unwrap();
    r[1..].iter().map(|row| row[i].parse().unwrap()).collect()
}

#[test]
fn empty_state_gives_one_zero_energy_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("empty.csv");
    let o = reproduce(
        &[
            "solve",
            "--L",
            "12",
            "--m",
            "0",
            "--phi-min",
            "0.5",
            "--phi-max",
            "0.5",
            "--phi-steps",
            "1",
            "--out",
            out.to_str().unwrap(),
        ],
        &[],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = rows(&out);
    assert_eq!(r[0], ["phi", "x", "energy_re", "energy_im", "max_residual"]);
    assert_eq!(r.len(), 2);
    assert_eq!(column(&out, "energy_re"), [0.0]);
}

#[test]
fn trajectory_fit_and_byte_identical_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for (path, threads) in [(&a, "1"), (&b, "3")] {
        let o = reproduce(
            &[
                "trajectory",
                "--trajectory",
                "traj1",
                "--phi",
                "0",
                "--order",
                "14",
                "--xi",
                "0.5",
                "--kmin",
                "6",
                "--out",
                path.to_str().unwrap(),
            ],
            &[("REPRODUCE_THREADS", threads)],
        );
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let fits = dir.path().join("a_fits.csv");
    let estimate = column(&fits, "estimate")[0];
    println!("k_min = 6 extrapolation: {estimate:.6}");
    assert!((estimate + 1.002).abs() < 5e-3);
    for suffix in ["", "_partial_sums", "_fits"] {
        let x = fs::read(dir.path().join(format!("a{suffix}.csv"))).unwrap();
        let y = fs::read(dir.path().join(format!("b{suffix}.csv"))).unwrap();
        assert_eq!(x, y, "table {suffix} differs between runs");
    }
}

#[test]
fn figure_one_curves_overlay() {
    let dir = tempfile::tempdir().unwrap();
    let o = reproduce(&["figure", "1", "--out", dir.path().to_str().unwrap()], &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for (m, l) in [("0.25", 200), ("0.75", 100)] {
        let series = column(&dir.path().join(format!("fig1_series_m{m}.csv")), "value_re");
        let solver = column(&dir.path().join(format!("fig1_solver_m{m}_L{l}.csv")), "energy_re");
        assert_eq!(series.len(), solver.len());
        let worst = series
            .iter()
            .zip(&solver)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("m = {m}, L = {l}: largest series/solver gap {worst:.2e}");
        assert!(worst < 1e-2);
    }
}

#[test]
fn errors_exit_nonzero_without_partial_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = reproduce(&["figure", "4", "--out", dir.path().to_str().unwrap()], &[]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("figure 4"));
    let out = dir.path().join("bad.csv");
    let o = reproduce(
        &["solve", "--L", "7", "--m", "0.5", "--out", out.to_str().unwrap()],
        &[],
    );
    assert!(!o.status.success());
    let o = reproduce(
        &[
            "excitations",
            "--phi",
            "1.5",
            "--z-min",
            "-0.7",
            "--out",
            out.to_str().unwrap(),
        ],
        &[],
    );
    assert!(!o.status.success());
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn thread_flag_takes_precedence_over_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let args = [
        "solve",
        "--L",
        "8",
        "--m",
        "0.25",
        "--phi-steps",
        "2",
        "--out",
        out.to_str().unwrap(),
    ];
    let o = reproduce(&args, &[("REPRODUCE_THREADS", "many")]);
    assert!(!o.status.success());
    let mut with_flag = args.to_vec();
    with_flag.extend(["--threads", "2"]);
    let o = reproduce(&with_flag, &[("REPRODUCE_THREADS", "many")]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}
