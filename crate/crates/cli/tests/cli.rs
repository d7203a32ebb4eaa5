use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_vparity");
const CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");

fn vparity(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn trefoil_profile() {
    let o = vparity(&["invariants", "-c", "O1+ O2+ U1+ U2+"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("j2: [2]\n"), "{s}");
    assert!(s.contains("flags.slice_obstructed: true\n"), "{s}");
}

#[test]
fn hopf_json_schema() {
    let o = vparity(&["invariants", "-c", "O1+ U2+ / O2+ U1+", "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "components",
            "chords",
            "two_colourable",
            "j2",
            "j2_self",
            "naive",
            "ip_self",
            "ip_candidates",
            "lk",
            "flags"
        ]
    );
    assert_eq!(v["j2"], serde_json::json!([0, 2]));
    assert_eq!(v["ip_candidates"], serde_json::json!([0, 2]));
    assert_eq!(v["flags"]["chequerboard_certified"], true);
    // byte-stable
    assert_eq!(
        stdout(&vparity(&["invariants", "-c", "O1+ U2+ / O2+ U1+", "--json"])),
        text
    );
    // oracle and check agree with the default
    assert_eq!(
        stdout(&vparity(&[
            "invariants",
            "-c",
            "O1+ U2+ / O2+ U1+",
            "--json",
            "--oracle"
        ])),
        text
    );
    assert!(vparity(&["invariants", "-c", "O1+ U2+ / O2+ U1+", "--check"])
        .status
        .success());
}

#[test]
fn virtual_hopf_nulls_and_exit_codes() {
    let o = vparity(&["invariants", "-c", "O1+ / U1+", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["two_colourable"], false);
    assert_eq!(v["naive"], 1);
    assert!(v["j2"].is_null() && v["ip_self"].is_null());
    assert!(v["flags"]["slice_obstructed"].is_null());

    assert_eq!(
        vparity(&["invariants", "-c", "O1+ / U1+", "--field", "j2"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(vparity(&["project", "-c", "O1+ / U1+"]).status.code(), Some(3));
    assert_eq!(vparity(&["invariants", "-c", "O1+ U1-"]).status.code(), Some(2));
    assert_eq!(vparity(&["colourings", "-c", "X1+"]).status.code(), Some(2));
}

#[test]
fn field_selection() {
    let o = vparity(&[
        "invariants",
        "-c",
        "O1+ U2+ / O2+ U1+",
        "--field",
        "naive",
        "--field",
        "j2",
    ]);
    assert_eq!(stdout(&o), "naive: 2\nj2: [0,2]\n");
    assert_eq!(
        vparity(&["invariants", "-c", "_", "--field", "nope"]).status.code(),
        Some(1)
    );
}

#[test]
fn component_cap() {
    let code = vec!["_"; 21].join(" / ");
    let o = vparity(&["invariants", "-c", &code, "--field", "naive"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("cap"));
    assert_eq!(
        vparity(&["invariants", "-c", &code, "--field", "j2"]).status.code(),
        Some(1)
    );
    let o = vparity(&[
        "invariants",
        "-c",
        &code,
        "--field",
        "components",
        "--max-components",
        "21",
    ]);
    assert!(o.status.success());
    assert!(stderr(&o).is_empty());
}

#[test]
fn file_and_stdin_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.gauss");
    fs::write(&path, "# positive Hopf link\nO1+ U2+\nO2+ U1+\n").unwrap();
    let o = vparity(&["colourings", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "count: 4\ngenerating set:\n00\t0\n01\t2\n");

    let mut child = Command::new(BIN)
        .args(["invariants", "-", "--field", "j2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"O1+ O2+ U1+ U2+\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "j2: [2]\n");
}

#[test]
fn colourings_and_projection() {
    assert_eq!(
        stdout(&vparity(&["colourings", "-c", "O1+ / U1+"])),
        "count: 0\ndegenerate components: [0, 1]\n"
    );
    assert_eq!(
        stdout(&vparity(&["colourings", "-c", "_"])),
        "count: 2\ngenerating set:\n0\t0\n"
    );
    for c in ["0", "1"] {
        assert_eq!(
            stdout(&vparity(&["project", "-c", "O1+ O2+ U1+ U2+", "--colouring", c])),
            "_\n"
        );
    }
    assert_eq!(
        stdout(&vparity(&["project", "-c", "O1+ U2+ / O2+ U1+", "--colouring", "01"])),
        "_ / _\n"
    );
    assert_eq!(
        stdout(&vparity(&["project", "-c", "O1+ U2+ / O2+ U1+", "--colouring", "00"])),
        "O1+ U2+ / O2+ U1+\n"
    );
}

#[test]
fn shipped_corpus_is_green() {
    let o = vparity(&["census", CORPUS]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    let s = stdout(&o);
    assert!(s.starts_with("name\tn\tchords\tj2\tj2_self\tnaive\tip_self\tflags\tstatus\n"));
    for name in [
        "unknot",
        "unlink 2",
        "virtual trefoil",
        "Hopf",
        "virtual Hopf",
        "lk-zero witness",
    ] {
        assert!(
            s.lines()
                .any(|l| l.starts_with(&format!("{name}\t")) && l.ends_with("\tok")),
            "{name}: {s}"
        );
    }
}

fn copy_corpus(to: &Path) {
    for e in fs::read_dir(CORPUS).unwrap() {
        let p = e.unwrap().path();
        fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
    }
}

#[test]
fn corrupted_golden_is_named() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    let f = dir.path().join("knots.json");
    let text = fs::read_to_string(&f)
        .unwrap()
        .replacen("\"naive\": 0", "\"naive\": 5", 1);
    fs::write(&f, text).unwrap();
    let o = vparity(&["census", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("mismatch in unknot: naive"), "{}", stderr(&o));
}

#[test]
fn bad_entry_does_not_abort() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("a.json"),
        r#"[{"name": "broken", "gauss_code": "O1+"}, {"name": "fine", "gauss_code": "_", "expected": {"j2": [0]}}]"#,
    )
    .unwrap();
    let o = vparity(&["census", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("broken\t-"), "{s}");
    assert!(s.contains("fine\t1\t0\t(0)"), "{s}");
}

#[test]
fn empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let o = vparity(&["census", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().next(),
        Some("name\tn\tchords\tj2\tj2_self\tnaive\tip_self\tflags\tstatus")
    );
}

#[test]
fn bless_writes_oracle_goldens() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("t.json"),
        r#"[{"name": "trefoil", "gauss_code": "O1+ O2+ U1+ U2+"}]"#,
    )
    .unwrap();
    assert!(vparity(&["census", dir.path().to_str().unwrap(), "--bless"])
        .status
        .success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("t.json")).unwrap()).unwrap();
    assert_eq!(v[0]["expected"]["j2"], serde_json::json!([2]));
}

#[test]
fn fuzz_small_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w");
    let o = vparity(&[
        "fuzz",
        "--trials",
        "6",
        "--steps",
        "200",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("trials 6  steps 200  passed 6  failed 0\n"));
    assert!(!out.exists());
    assert_eq!(
        vparity(&["fuzz", "-c", "O1+ / U1+", "--trials", "1"]).status.code(),
        Some(3)
    );
}

#[test]
fn compare_and_search() {
    let o = vparity(&[
        "compare",
        "-c",
        "O1+ U2+ / O2+ U1+",
        "-c",
        "U1+ U2+ U3- U4- / O1+ O2+ O4- O3-",
    ]);
    let s = stdout(&o);
    assert!(s.contains("O1+ U2+ / O2+ U1+\t(0,2)\t2\t(0,2)\tfalse"), "{s}");
    assert!(s.contains("\t(-2,2)\t0\t(0,0)\ttrue"), "{s}");
    let o = vparity(&["search", "--max-chords", "4"]);
    assert_eq!(
        stdout(&o).lines().next(),
        Some("witness: U1+ U2+ U3- U4- / O1+ O2+ O4- O3-")
    );
    assert_eq!(vparity(&["search", "--max-chords", "3"]).status.code(), Some(1));
}
