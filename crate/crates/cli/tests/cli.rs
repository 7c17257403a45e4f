//! End-to-end exercises of the binary: file round trips, output shape, and
//! the exit-code contract (0 pass, 1 fail, 2 usage, 3 inconclusive).

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minmodlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_square_fixture(path: &Path, count: u32) {
    let mut text = String::from("# minmodlab zeroset v1\n");
    for m in 1..=count {
        text.push_str(&format!("{}.0\t0.0\t1\t0.0\n", m * m));
    }
    std::fs::write(path, text).unwrap();
}

#[test]
fn quantities_single_zero_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let z = dir.path().join("z.txt");
    std::fs::write(&z, "# minmodlab zeroset v1\n0.0\t0.0\t1\t3.141592653589793\n").unwrap();
    let out = run(&["quantities", "--zeros", z.to_str().unwrap(), "--log-r", "0.6931471805599453"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n: 1.0000000000000000e0"), "{text}");
    assert!(text.contains("N: 6.9314718055994529e-1"), "{text}"); // ln 2
    assert!(text.contains("B: 1.0986122886681096e0"), "{text}"); // ln 3
    assert!(text.contains("a: 6.6666666666666663e-1"), "{text}"); // 2/3
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["quantities", "--log-r", "1.0"]); // missing --zeros
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    // unreadable input is an input error, also 2
    let out = run(&["quantities", "--zeros", "/nonexistent", "--log-r", "1.0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_with_witnesses_passes() {
    let dir = tempfile::tempdir().unwrap();
    let z = dir.path().join("sq.txt");
    write_square_fixture(&z, 30);
    let out = run(&[
        "orbit", "--zeros", z.to_str().unwrap(), "--log-r0", "100", "--steps", "2", "--lemma21",
        "--c", "2,2,2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("result: PASS"));
    assert!(text.contains("rho 1:"));
    assert!(text.contains("monotone: true"));
}

#[test]
fn check_verdicts_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let z = dir.path().join("sq.txt");
    write_square_fixture(&z, 30);
    // iterated-log growth condition holds on the window: exit 0
    let ok = run(&[
        "check", "--zeros", z.to_str().unwrap(), "--condition", "thm4", "--m", "2", "--log-lo",
        "30", "--log-hi", "10000",
    ]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("verdict: SatisfiedOnWindow"));
    // summability conditions are never decided from a window: exit 3
    let inc = run(&[
        "check", "--zeros", z.to_str().unwrap(), "--condition", "thm3", "--log-r0", "100",
        "--steps", "2",
    ]);
    assert_eq!(inc.status.code(), Some(3), "{}", stdout(&inc));
    // doubling-ratio probe is always a trend report: exit 3
    let probe = run(&[
        "check", "--zeros", z.to_str().unwrap(), "--condition", "c72", "--log-lo", "100",
        "--log-hi", "1000",
    ]);
    assert_eq!(probe.status.code(), Some(3));
}

#[test]
fn build_and_verify_counterexample_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("cex.txt");
    let built = run(&[
        "build-cex", "--r1", "4", "--rule", "invsqrt", "--terms", "3", "--out",
        spec.to_str().unwrap(),
    ]);
    assert_eq!(built.status.code(), Some(0), "{}", stdout(&built));
    let text = stdout(&built);
    assert!(text.contains("cert 1: 61=true 64=true 68=true"));
    assert!(text.contains("eps 5.0000000000000000e-1")); // eps_1 = 1/2
    let file = std::fs::read_to_string(&spec).unwrap();
    assert!(file.starts_with("# minmodlab zeroset v1\n# counterexample\n"));

    let order0 = run(&["verify-cex", "--spec", spec.to_str().unwrap(), "--check", "order0"]);
    assert_eq!(order0.status.code(), Some(0), "{}", stdout(&order0));
    let l62 = run(&[
        "verify-cex", "--spec", spec.to_str().unwrap(), "--check", "l62", "--k", "2", "--L", "2",
        "--samples", "64",
    ]);
    assert_eq!(l62.status.code(), Some(0), "{}", stdout(&l62));
    let trend = run(&["verify-cex", "--spec", spec.to_str().unwrap(), "--check", "c610"]);
    assert_eq!(trend.status.code(), Some(3));
}

#[test]
fn cartan_verify_and_forced_failure() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pts.txt");
    std::fs::write(
        &p,
        "# minmodlab points v1\n0.0\t0.0\n0.1\t0.0\n0.0\t0.1\n-0.1\t0.05\n",
    )
    .unwrap();
    let out = run(&["cartan", "--points", p.to_str().unwrap(), "--h", "0.2", "--verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("verify: PASS"));
    assert!(text.contains("radius-sum:"));
}

#[test]
fn escape_grid_writes_deterministic_csv_and_pgm() {
    let dir = tempfile::tempdir().unwrap();
    let z = dir.path().join("z.txt");
    // f(z) = (1 - z)^2
    std::fs::write(&z, "# minmodlab zeroset v1\n0.0\t0.6931471805599453\t2\t0.0\n").unwrap();
    let csv1 = dir.path().join("g1.csv");
    let csv2 = dir.path().join("g2.csv");
    let common = ["escape-grid", "--zeros", z.to_str().unwrap(), "--window", "-2,2,-2,2", "--res", "24,16", "--nmax", "20"];
    let a = bin().args(common).args(["--out", csv1.to_str().unwrap()]).output().unwrap();
    let b = bin().args(common).args(["--out", csv2.to_str().unwrap()]).output().unwrap();
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(b.status.code(), Some(0));
    let c1 = std::fs::read(&csv1).unwrap();
    assert_eq!(c1, std::fs::read(&csv2).unwrap());
    assert_eq!(String::from_utf8(c1).unwrap().lines().count(), 16);

    let pgm = dir.path().join("g.pgm");
    let p = bin().args(common).args(["--out", pgm.to_str().unwrap(), "--pgm"]).output().unwrap();
    assert_eq!(p.status.code(), Some(0));
    let pgm_text = std::fs::read_to_string(&pgm).unwrap();
    assert!(pgm_text.starts_with("P2\n24 16\n21\n"));
}

fn args_for_escape<'a>(z: &'a str, out: &'a str) -> Vec<&'a str> {
    vec![
        "escape-grid", "--zeros", z, "--window", "-2,2,-2,2", "--res", "8,8", "--nmax", "5",
        "--out", out,
    ]
}

#[test]
fn escape_grid_without_growth_reports_not_found() {
    let dir = tempfile::tempdir().unwrap();
    let z = dir.path().join("z.txt");
    // f(z) = 1 - z never satisfies log m(r) >= log r + 1: no default radius
    std::fs::write(&z, "# minmodlab zeroset v1\n0.0\t0.0\t1\t0.0\n").unwrap();
    let out_path = dir.path().join("g.csv");
    let z_str = z.to_str().unwrap().to_owned();
    let o_str = out_path.to_str().unwrap().to_owned();
    let out = bin().args(args_for_escape(&z_str, &o_str)).output().unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", stdout(&out));
    assert!(stdout(&out).contains("NOT_FOUND"));
}
