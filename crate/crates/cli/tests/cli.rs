use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_star-anagrams"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn help_lists_every_subcommand() {
    let o = run(&["--help"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for sub in [
        "classify",
        "scan",
        "shapes",
        "autostars",
        "render",
        "gallery",
    ] {
        assert!(text.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn classify_exit_codes() {
    let star = run(&["classify", "EARTH", "HATER"]);
    assert_eq!(star.status.code(), Some(0));
    let text = stdout(&star);
    assert!(text.starts_with("perfect, O_rot=5, O_ref=5, S=2\n"));
    assert!(text.contains("path: [4,1,3,0,2]"));
    assert!(text.contains("steps: [2,2,2,2,2]"));

    let non = run(&["classify", "earth", "heart"]);
    assert_eq!(non.status.code(), Some(1));
    assert!(stdout(&non).starts_with("non-star\n"));

    let bad = run(&["classify", "EARTH", "MOON"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not anagrams"));

    assert_eq!(run(&["classify", "EARTH"]).status.code(), Some(2));
}

#[test]
fn classify_symmetric_pair() {
    let o = run(&["classify", "BORROWER", "REBORROW"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("symmetric, O_rot=2, O_ref=0\n"));
}

#[test]
fn shapes_rows_and_range() {
    let o = run(&["shapes", "7", "--format", "tabular"]);
    assert_eq!(
        stdout(&o),
        "n,asymmetric,symmetric,perfect,total\n7,0,3,2,5\n"
    );
    let o = run(&["shapes", "6"]);
    assert!(stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .eq(["6", "0", "1", "0", "1"]));
    assert_eq!(run(&["shapes", "4"]).status.code(), Some(2));
    assert_eq!(run(&["shapes", "13"]).status.code(), Some(2));
}

#[test]
fn scan_writes_reports_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let list = fixture("figures.txt");
    let oa = run(&["scan", &list, "--out", a.to_str().unwrap(), "--jobs", "1"]);
    let ob = run(&["scan", &list, "--out", b.to_str().unwrap(), "--jobs", "3"]);
    assert!(oa.status.success() && ob.status.success());
    for name in ["report.json", "stars.csv"] {
        assert_eq!(
            std::fs::read(a.join(name)).unwrap(),
            std::fs::read(b.join(name)).unwrap()
        );
    }
    let text = stdout(&oa);
    assert!(text.contains("26 anagrams, 18 stars"));
    assert!(text.contains("autostars: 1"));
    assert!(text.contains("symmetric stars all reverse"));
}

#[test]
fn scan_mini_list_without_autostars() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "scan",
        &fixture("mini.txt"),
        "--no-autostars",
        "--format",
        "structured",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(!stdout(&o).contains("autostars:"));
    assert!(!dir.path().join("stars.csv").exists());
    let json: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(json["anagrams"], 6);
    assert!(json.get("autostars").is_none());
}

#[test]
fn render_and_gallery() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("pentagon.svg");
    let o = run(&["render", "EARTH", "HEART", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("class=\"chord\"").count(), 5);

    let out = dir.path().join("scan");
    run(&["scan", &fixture("mini.txt"), "--out", out.to_str().unwrap()]);
    let gallery = dir.path().join("gallery");
    let o = run(&[
        "gallery",
        out.join("report.json").to_str().unwrap(),
        gallery.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(gallery.join("index.html").is_file());
    assert!(gallery.join("5/perfect/1/EARTH-HATER.svg").is_file());
}

#[test]
fn autostars_listing() {
    let o = run(&["autostars", &fixture("figures.txt"), "--format", "tabular"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "word,class,o_rot,o_ref,perfect_edge_lengths\nBERSERKER,perfect,9,9,2 4\n"
    );
    let missing = run(&["autostars", "/nonexistent/words.txt"]);
    assert_eq!(missing.status.code(), Some(3));
}
