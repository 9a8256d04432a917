use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(format!("{name}.cfg"));
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contact-lie")).args(args).output().unwrap()
}

fn out(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn err(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_config_echoes_canonical_text() {
    let o = run(&["check-config", "--config", &fixture("block1_zero")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(out(&o).starts_with("ell: 1 0 0 0 0 0\nj0: zero\ngamma: 1 0 0\n"));
}

#[test]
fn config_errors_exit_2_with_constraint_or_line() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.cfg");
    fs::write(&missing, "ell: 1 0 0 0 0 0\nj0: zero\ngamma: 1 0 0\ngamma: 0 0 1\n").unwrap();
    let o = run(&["check-config", "--config", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("gamma-units"), "{}", err(&o));

    let sixth = dir.path().join("sixth.cfg");
    fs::write(&sixth, "ell: 0 0 0 0 0 1\nj0: naturals\ngamma: 0 1 0\n").unwrap();
    let o = run(&["check-config", "--config", sixth.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("constraint"), "{}", err(&o));

    let garbled = dir.path().join("garbled.cfg");
    fs::write(&garbled, "ell: 1 0 0 0 0 0\nj0 zero\n").unwrap();
    let o = run(&["check-config", "--config", garbled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("line 2"), "{}", err(&o));
}

#[test]
fn bracket_examples() {
    let c = fixture("block1_zero");
    let o = run(&["bracket", "--config", &c, "1*x[0,2,0]", "1*x[0,0,2]", "--oracle"]);
    assert_eq!((o.status.code(), out(&o).as_str()), (Some(0), "4*x[0,1,1]\n"));
    let o = run(&["bracket", "--config", &c, "2*x[1,-1,0] + 1*x[0,0,3]", "2*x[1,-1,0] + 1*x[0,0,3]"]);
    assert_eq!(out(&o), "0\n");
    let o = run(&["bracket", "--config", &c, "1*x[0,2,0]", "1*x[0,0,2,0,0]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mul_adds_exponents() {
    let o = run(&["mul", "--config", &fixture("block2_naturals"), "3*x[1,0,0]t[1,0,0]", "1/2*x[0,1,0]t[0,0,2]"]);
    assert_eq!(out(&o), "3/2*x[1,1,0]t[1,0,2]\n");
}

#[test]
fn table_is_deterministic_and_starts_with_header() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        let o = run(&["table", "--config", &fixture("block5_zero"), "--radius", "1", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("lhs_index,rhs_index,result_term_index,coefficient\n"));
    let o = run(&["table", "--config", &fixture("block5_zero"), "--radius", "0"]);
    assert_eq!(out(&o).lines().nth(1), Some("\"x[0,0,0]\",\"x[0,0,0]\",0,0"));
}

#[test]
fn derivation_commands() {
    let c = fixture("block2_naturals");
    let o = run(&["deriv", "check", "--config", &c, "dt(1') + -2*ad(1*x[1,0,0]t[0,0,1])", "--samples", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", out(&o));
    assert_eq!(out(&o), "derivation-law: 100/100 PASS\n");

    let o = run(&[
        "deriv",
        "decompose",
        "--config",
        &c,
        "3*dt(1') + dmu(1 0 0) + ad(1*x[1,-1,0] + 1/2*x[0,1,1]t[1,0,0])",
        "--radius",
        "3",
        "--inner-radius",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", err(&o));
    assert_eq!(out(&o), "dt(1'): 3\ndmu: [1,0,0]\nad: 1/2*x[0,1,1]t[1,0,0] + 1*x[1,-1,0]\n");

    // an outer index outside the allowed range is a usage error
    let o = run(&["deriv", "check", "--config", &c, "dt(1)"]);
    assert_eq!(o.status.code(), Some(2));
    // the grading operator alone is not a derivation
    let o = run(&["deriv", "decompose", "--config", &c, "pstar(1)", "--radius", "3", "--inner-radius", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(out(&o).starts_with("residual: "));
    // a window too small to pin the unknowns
    let o = run(&["deriv", "decompose", "--config", &c, "dt(1')", "--radius", "0", "--inner-radius", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(err(&o).contains("window too small"));
}

#[test]
fn cocycle_trivialize_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let c = fixture("block2_zero");
    let g = dir.path().join("g.txt");
    fs::write(&g, "x[1,0,0] 2\nx[0,-1,1]t[0,0,1] -3/4\n3*x[2,1,0] 1\n").unwrap();
    let f = dir.path().join("f.txt");
    let o = run(&[
        "cocycle",
        "trivialize",
        "--config",
        &c,
        "coboundary",
        g.to_str().unwrap(),
        "--out",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", err(&o));
    let text = fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("# method: case-A block2(p=1) [literal]\n"));
    assert_eq!(
        text.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>(),
        ["x[0,-1,1]t[0,0,1] -3/4", "x[1,0,0] 2", "x[2,1,0] 3"]
    );
    let o = run(&[
        "cocycle",
        "verify",
        "--config",
        &c,
        "coboundary",
        g.to_str().unwrap(),
        "--functional",
        f.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", out(&o));

    let wrong = dir.path().join("wrong.txt");
    fs::write(&wrong, "x[1,0,0] 2\n").unwrap();
    let o = run(&[
        "cocycle",
        "verify",
        "--config",
        &c,
        "coboundary",
        g.to_str().unwrap(),
        "--functional",
        wrong.to_str().unwrap(),
        "--radius",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(out(&o).contains("witness: psi("));
}

#[test]
fn cocycle_check_accepts_a_coboundary_table() {
    // ψ(u, v) = g([u, v]) for g the indicator of x[0,1,1], written out on
    // the pairs of the radius-1 window where it is nonzero
    let dir = tempfile::tempdir().unwrap();
    let c = fixture("block1_zero");
    let t = dir.path().join("t.txt");
    let table = run(&["table", "--config", &c, "--radius", "1"]);
    let mut lines = String::new();
    for row in out(&table).lines().skip(1) {
        let f: Vec<&str> = row.split("\",").collect();
        if f.len() == 3 && f[2].starts_with("\"x[0,1,1],") {
            let coef = f[2].rsplit(',').next().unwrap();
            lines.push_str(&format!("{} {} {coef}\n", &f[0][1..], &f[1][1..]));
        }
    }
    fs::write(&t, lines).unwrap();
    let o = run(&["cocycle", "check", "--config", &c, t.to_str().unwrap(), "--samples", "300"]);
    assert_eq!(o.status.code(), Some(0), "{}", out(&o));
}

#[test]
fn suite_reports_and_timing_split() {
    let o = run(&["suite", "--config", &fixture("block4_naturals"), "--seed", "9", "--samples", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", out(&o));
    let text = out(&o);
    assert!(text.starts_with("config: ell=0 0 0 1 0 0 j0=naturals rank=2\nseed: 9\nsamples: 50\n"));
    assert!(text.ends_with("overall: PASS\n"));
    assert!(!text.contains("duration"));
    assert!(err(&o).starts_with("duration: "));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["bracket"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
