use std::process::{Command, Output};

fn vp_interp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vp-interp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = vp_interp(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Data rows as numbers, skipping the metadata and header lines.
fn rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(2)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

fn assert_schema(text: &str, command: &str) {
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    let meta = lines.next().unwrap();
    assert!(
        meta.starts_with(&format!("# vp-interp v{} {command} ", env!("CARGO_PKG_VERSION"))),
        "{meta}"
    );
    let width = lines.next().unwrap().split(',').count();
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), width, "{line}");
        for c in cells {
            if let (Ok(_), Some((mantissa, _))) = (c.parse::<f64>(), c.split_once('e')) {
                let digits = mantissa.chars().filter(char::is_ascii_digit).count();
                assert_eq!(digits, 17, "{c}");
            }
        }
    }
}

#[test]
fn lebesgue_csv() {
    let text = stdout(&[
        "lebesgue", "--kind", "w1", "--theta", "0.5", "--n", "20,40", "--grid", "512",
    ]);
    assert_schema(&text, "lebesgue");
    assert_eq!(text.lines().nth(1), Some("n,m,lebesgue"));
    let r = rows(&text);
    assert_eq!((r[0][0], r[0][1]), (20.0, 10.0));
    assert_eq!((r[1][0], r[1][1]), (40.0, 20.0));
    assert!(r.iter().all(|row| row[2] >= 1.0 && row[2] < 2.0));

    let text = stdout(&["lebesgue", "--kind", "w2", "--n-max", "30", "--grid", "256"]);
    let r = rows(&text);
    assert_eq!(r.iter().map(|row| row[0]).collect::<Vec<_>>(), vec![10.0, 20.0, 30.0]);
    assert!(r.iter().all(|row| row[1] == 0.0));
}

#[test]
fn interp_is_deterministic() {
    let args = ["interp", "--n", "12", "--theta", "0.5", "--seed", "7", "--grid", "50"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    assert_schema(&a, "interp");
    let b = stdout(&["interp", "--n", "12", "--theta", "0.5", "--seed", "8", "--grid", "50"]);
    assert_ne!(a, b);
}

#[test]
fn interp_of_test_function() {
    let text = stdout(&["interp", "--n", "40", "--func", "f1", "--theta", "0.4", "--grid", "101"]);
    assert_schema(&text, "interp");
    assert!(text.lines().next().unwrap().contains("kind=w3"));
    assert_eq!(text.lines().nth(1), Some("t,x,interpolant,f,weighted_error"));
    for row in rows(&text) {
        assert!(row[4] < 1e-4, "{row:?}");
    }
}

#[test]
fn fundamental_polynomials_figure() {
    let text = stdout(&["figure", "--id", "fund", "--grid", "64"]);
    assert_schema(&text, "figure");
    assert_eq!(text.lines().nth(1), Some("t,x,phi_m0,phi_m7,phi_m15,phi_m29"));
    let r = rows(&text);
    let nodes: Vec<f64> = (1..=30)
        .map(|k| (2 * k - 1) as f64 * std::f64::consts::PI / 60.0)
        .collect();
    for (k, tk) in nodes.iter().enumerate() {
        let row = r.iter().find(|row| (row[0] - tk).abs() < 1e-12).expect("node on grid");
        let expected = if k == 14 { 1.0 } else { 0.0 };
        for v in &row[2..] {
            assert!((v - expected).abs() < 1e-9, "k={k}: {v}");
        }
    }
}

#[test]
fn gibbs_figure_overshoot_shrinks() {
    let text = stdout(&["figure", "--id", "gibbs", "--grid", "2048"]);
    assert_schema(&text, "figure");
    let r = rows(&text);
    let overshoot = |col: usize| {
        r.iter()
            .filter(|row| row[0] > 0.0 && row[0] < 0.5)
            .map(|row| row[col] - row[1])
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let o: Vec<f64> = (3..6).map(overshoot).collect();
    assert!(o.windows(2).all(|p| p[1] < p[0]), "{o:?}");
}

#[test]
fn lc_figure_out_of_range_grows() {
    let text = stdout(&[
        "figure", "--id", "lc", "--kind", "w1", "--gamma", "0.3", "--delta", "1.5",
    ]);
    assert_schema(&text, "figure");
    let lines: Vec<&str> = text.lines().skip(2).collect();
    let value = |l: &str| l.rsplit(',').next().unwrap().parse::<f64>().unwrap();
    assert!(lines[0].contains(",false,64,32,"));
    assert!(value(lines[lines.len() - 1]) > 2.0 * value(lines[0]));
}

#[test]
fn pointwise_figure() {
    let text = stdout(&[
        "figure",
        "--id",
        "pointwise",
        "--func",
        "f5",
        "--theta",
        "0.6",
        "--grid",
        "256",
    ]);
    assert_schema(&text, "figure");
    assert!(text.lines().next().unwrap().contains("n=50 m=30"));
    assert_eq!(rows(&text)[0].len(), 3);
}

#[test]
fn check_bounds_text() {
    let out = stdout(&["check-bounds", "--kind", "w3", "--gamma", "0.4", "--delta", "1.5"]);
    assert!(out.lines().nth(1).unwrap() == "VP: bounded");
    let out = stdout(&["check-bounds", "--kind", "w3", "--gamma", "0.4", "--delta", "0"]);
    assert!(out.contains("VP: unbounded (violated: 0 < delta <= 3/2)"));
    let out = stdout(&["check-bounds", "--kind", "w1", "--gamma", "0", "--delta", "0"]);
    assert!(out.contains("VP: bounded\nLagrange: log-growth regime\n"));
}

#[test]
fn small_table_lc() {
    let text = stdout(&["table-lc", "--n-max", "20", "--grid", "128"]);
    assert_schema(&text, "table-lc");
    assert_eq!(text.lines().count(), 2 + 36);
}

#[test]
fn error_table_check_mode() {
    let out = vp_interp(&["table-errors", "--panel", "f1f2", "--check"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_schema(&text, "table-errors");
    assert!(text.lines().nth(1).unwrap().ends_with(",vp_pass,lagrange_pass"));
    for line in text.lines().filter(|l| l.starts_with("f1,")) {
        assert!(line.ends_with(",true,true"), "{line}");
    }
    // the f2 reference rows are not all within a factor 2
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn writes_output_file() {
    let dir = std::env::temp_dir().join(format!("vp-interp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lc.csv");
    let out = vp_interp(&[
        "lebesgue",
        "--kind",
        "w4",
        "--n",
        "8",
        "--grid",
        "64",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_schema(&text, "lebesgue");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| vp_interp(args).status.code();
    assert_eq!(code(&["check-bounds", "--kind", "w5"]), Some(2));
    assert_eq!(code(&["check-bounds", "--kind", "w1", "--gamma", "-0.5"]), Some(2));
    assert_eq!(code(&["figure", "--id", "nope"]), Some(2));
    assert_eq!(
        code(&["lebesgue", "--kind", "w1", "--theta", "1.5", "--n", "10"]),
        Some(2)
    );
    assert_eq!(
        code(&["lebesgue", "--kind", "w1", "--theta", "0.05", "--n", "10"]),
        Some(2)
    );
    assert_eq!(code(&["lebesgue", "--kind", "w1"]), Some(2));
    assert_eq!(code(&["interp", "--n", "0"]), Some(2));
    assert_eq!(
        code(&[
            "lebesgue",
            "--kind",
            "w1",
            "--n",
            "4",
            "--out",
            "/nonexistent-dir/x.csv"
        ]),
        Some(4)
    );
    assert_eq!(code(&["--help"]), Some(0));
}
