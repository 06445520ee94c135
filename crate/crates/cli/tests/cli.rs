use std::path::PathBuf;
use std::process::{Command, Output};

fn instances() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn shipped(name: &str) -> PathBuf {
    instances().join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasihopf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quasihopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

/// Replaces the first data cell of a `[header]` block.
fn replace_first_cell(text: &str, header: &str, new: &str) -> String {
    let start = text.find(&format!("[{header}]")).expect("block present");
    let open = start + text[start..].find("data = [").unwrap();
    let q1 = open + text[open..].find('"').unwrap();
    let q2 = q1 + 1 + text[q1 + 1..].find('"').unwrap();
    format!("{}\"{new}\"{}", &text[..q1], &text[q2 + 1..])
}

/// A `+1` change to any cell makes the `h2` reassociator singular, so the perturbed
/// files carry the original inverse explicitly.
fn perturbed_h2() -> String {
    let text = std::fs::read_to_string(shipped("h2.qha")).unwrap();
    let start = text.find("[algebra.phi]").unwrap();
    let end = start + text[start..].find("]\n\n").unwrap() + 2;
    let block = text[start..end].replace("[algebra.phi]", "[algebra.phi_inv]");
    let with_inverse = format!("{}\n{}{}", &text[..end], block, &text[end..]);
    replace_first_cell(&with_inverse, "algebra.phi", "7/4")
}

fn ship_list() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(instances())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "qha"))
        .collect();
    v.sort();
    v
}

#[test]
fn h4_passes_every_suite() {
    let o = run(&["verify", shipped("h4.qha").to_str().unwrap(), "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn every_shipped_file_verifies_and_round_trips() {
    let files = ship_list();
    assert!(files.len() >= 5);
    for f in files {
        let p = f.to_str().unwrap();
        assert_eq!(run(&["verify", p]).status.code(), Some(0), "{p}");
        let emitted = run(&["emit", p]);
        assert_eq!(emitted.status.code(), Some(0));
        assert_eq!(emitted.stdout, std::fs::read(&f).unwrap(), "{p} is not in canonical form");
    }
}

#[test]
fn shipped_files_match_the_catalog() {
    let dir = std::env::temp_dir().join(format!("quasihopf-catalog-{}", std::process::id()));
    assert_eq!(run(&["catalog", dir.to_str().unwrap()]).status.code(), Some(0));
    for f in ship_list() {
        let fresh = std::fs::read(dir.join(f.file_name().unwrap())).expect("catalog entry exists");
        assert_eq!(fresh, std::fs::read(&f).unwrap(), "{}", f.display());
    }
}

#[test]
fn zero_denominator_in_phi_is_an_input_error_naming_the_field() {
    let text = std::fs::read_to_string(shipped("h2.qha")).unwrap();
    let p = scratch("bad-phi.qha", &replace_first_cell(&text, "algebra.phi", "1/0"));
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("algebra.phi.data[0]"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn wrong_dimensions_and_missing_blocks_are_input_errors() {
    let text = std::fs::read_to_string(shipped("kz2.qha")).unwrap();
    let p = scratch("no-beta.qha", &text.replace("[algebra.beta]", "[algebra.gamma]"));
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("beta"), "{}", stderr(&o));

    let p = scratch("short.qha", &text.replacen("dims = [2, 2, 2]", "dims = [2, 2, 3]", 1));
    assert_eq!(run(&["verify", p.to_str().unwrap()]).status.code(), Some(2));

    let o = run(&["verify", shipped("kz2.qha").to_str().unwrap(), "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn perturbed_phi_fails_qbi_with_a_cocycle_witness() {
    let p = scratch("perturbed.qha", &perturbed_h2());
    let o = run(&["verify", p.to_str().unwrap(), "--suite", "qbi"]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("FAIL") && l.contains("(q3)")), "{out}");
}

#[test]
fn missing_r_matrix_is_an_input_error_for_the_qt_suite_only() {
    let h2 = shipped("h2.qha");
    assert_eq!(run(&["verify", h2.to_str().unwrap(), "--suite", "qt"]).status.code(), Some(2));
    let o = run(&["verify", h2.to_str().unwrap(), "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("FINDING no R-matrix"));
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let p = shipped("kz2.qha");
    let base = run(&["verify", p.to_str().unwrap()]).stdout;
    for n in ["1", "3"] {
        let o = Command::new(env!("CARGO_BIN_EXE_quasihopf"))
            .args(["verify", p.to_str().unwrap()])
            .env("QHA_THREADS", n)
            .output()
            .unwrap();
        assert_eq!(o.stdout, base);
    }
}

#[test]
fn json_report_is_well_formed() {
    let o = run(&["verify", shipped("h4.qha").to_str().unwrap(), "--suite", "integrals", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "integrals");
    assert_eq!(v["failed"], 0);
    assert!(v["sections"].as_array().unwrap().iter().all(|s| s["entries"].is_array()));
}

#[test]
fn derive_outputs() {
    let o = run(&["derive", shipped("kz2.qha").to_str().unwrap(), "--what", "f"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("f = 1⊗1\n"));

    let o = run(&["derive", shipped("h2.qha").to_str().unwrap(), "--what", "pq"]);
    assert_eq!(stdout(&o).lines().count(), 4);

    let o = run(&["derive", shipped("h4.qha").to_str().unwrap(), "--what", "integrals"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn derive_refuses_when_prerequisites_fail() {
    let p = scratch("perturbed-derive.qha", &perturbed_h2());
    let o = run(&["derive", p.to_str().unwrap(), "--what", "f"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("prerequisite"));
}

#[test]
fn normalize_alpha_beta_rescales_before_checking() {
    let text = std::fs::read_to_string(shipped("kz2.qha")).unwrap();
    let scaled = replace_first_cell(&replace_first_cell(&text, "algebra.alpha", "2"), "algebra.beta", "1/2");
    let p = scratch("scaled.qha", &scaled);
    let plain = run(&["verify", p.to_str().unwrap(), "--suite", "qhopf"]);
    let normalized = run(&["verify", p.to_str().unwrap(), "--suite", "qhopf", "--normalize-alpha-beta"]);
    assert_eq!(normalized.status.code(), Some(0), "{}", stdout(&normalized));
    assert!(plain.status.code().is_some());
}
