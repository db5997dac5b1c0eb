use std::process::{Command, Output};

fn qheat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qheat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn point_row_matches_library() {
    let o = qheat(&["point", "--tl", "1.5", "--tr", "0.5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    let fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(fields.len(), 16);
    assert_eq!(&fields[..7], ["1.5", "0.5", "1.0", "1.0", "boson", "0.2", "1.0"]);
    let j: f64 = fields[11].parse().unwrap();
    assert!((j - 0.199_443_544_334_199_76).abs() < 1e-14);
    let p: f64 = fields[7..11].iter().map(|s| s.parse::<f64>().unwrap()).sum();
    assert!((p - 1.0).abs() < 1e-12);
}

#[test]
fn sweep_is_ascending() {
    let o = qheat(&["sweep", "--var", "tr", "--lo", "0.05", "--hi", "1.5", "--n", "100", "--tl", "1.5"]);
    assert!(o.status.success());
    let t_r: Vec<f64> =
        stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(t_r.len(), 100);
    assert_eq!(t_r[0], 0.05);
    assert_eq!(t_r[99], 1.5);
    assert!(t_r.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn bias_sweep_columns() {
    let o = qheat(&["sweep", "--var", "dt", "--ta", "1", "--lo", "-0.5", "--hi", "0.5", "--n", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0][..2], ["0.5", "1.5"]);
    assert_eq!(rows[1][..2], ["1.0", "1.0"]);
    assert_eq!(rows[2][..2], ["1.5", "0.5"]);
}

#[test]
fn death_line() {
    let o = qheat(&["death"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let (key, value) = text.trim_end().split_once(',').unwrap();
    assert_eq!(key, "T_death");
    let t: f64 = value.parse().unwrap();
    assert!((t - 1.0 / (1.0 + 2f64.sqrt()).ln()).abs() < 1e-6);
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rect.csv");
    let o = qheat(&["rect", "--n", "4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("dT,J_forward,J_reverse\n"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32, &str); 7] = [
        (&["point", "--tl", "1", "--tr", "1", "--bogus"], 2, "--bogus"),
        (&["point", "--tl", "-1", "--tr", "1"], 2, "--tl"),
        (&["point", "--tl", "1", "--tr", "1", "--kappa", "0"], 2, "--kappa"),
        (&["sweep", "--var", "tr", "--lo", "0.1", "--hi", "1"], 2, "--tl"),
        (&["sweep", "--var", "t", "--lo", "1", "--hi", "0.1"], 2, "--lo"),
        (&["point", "--tl", "1", "--tr", "1", "--epsilon", "1"], 3, "degenerate"),
        (&["death", "--epsilon", "0.5", "--kappa", "0.5"], 3, "degenerate"),
    ];
    for (args, code, needle) in cases {
        let o = qheat(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(o.stdout.is_empty());
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn frozen_channels_exit_degenerate() {
    let o = qheat(&["sweep", "--var", "t", "--lo", "0.1", "--hi", "1", "--n", "3", "--gamma-l", "0", "--gamma-r", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sweep point 0"));
}
