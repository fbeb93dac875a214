use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use textproj::config::{schema, validate};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_textproj"));
    c.env_remove("TEXTPROJ_SEED").env_remove("RUST_LOG");
    c
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn ingest_rfc(dir: &Path) -> PathBuf {
    let out = dir.join("corpus.json");
    let f = fixtures();
    let o = run(&[
        "corpus",
        "ingest",
        "--root",
        f.join("rfc").to_str().unwrap(),
        "--manifest",
        f.join("rfc_manifest.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn write_config(dir: &Path, cfg: &Value) -> PathBuf {
    let p = dir.join("config.json");
    fs::write(&p, serde_json::to_string_pretty(cfg).unwrap()).unwrap();
    p
}

#[test]
fn help_lists_every_subcommand() {
    let o = run(&["--help"]);
    assert!(o.status.success());
    let help = String::from_utf8(o.stdout).unwrap();
    for sub in ["corpus", "clones", "ngram", "topics", "pos", "coding", "viz", "run"] {
        assert!(help.lines().any(|l| l.trim_start().starts_with(sub)), "{sub} missing from help");
        assert!(run(&[sub, "--help"]).status.success(), "{sub} --help failed");
    }
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["--no-such-flag"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn schema_validates_its_own_example() {
    let o = run(&["--schema"]);
    let printed = stdout_json(&o);
    assert_eq!(printed, schema());
    assert!(validate(&printed, &printed["examples"][0]).is_empty());
}

#[test]
fn missing_corpus_exits_2() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        &json!({"corpus": {"root": "does-not-exist"}, "stages": ["clones"], "output": "out"}),
    );
    let o = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not exist"));
}

#[test]
fn stochastic_stage_without_seed_exits_2() {
    let tmp = tempfile::tempdir().unwrap();
    let root = fixtures().join("rfc");
    let cfg = write_config(tmp.path(), &json!({"corpus": {"root": root}, "stages": ["topics"]}));
    let o = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .args(["run", "--config", cfg.to_str().unwrap(), "--out", tmp.path().join("r").to_str().unwrap()])
        .env("TEXTPROJ_SEED", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn empty_stage_list_gives_empty_bundle() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(tmp.path(), &json!({"corpus": {"root": "unused"}, "stages": [], "output": "bundle"}));
    let o = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let html = fs::read_to_string(tmp.path().join("bundle/index.html")).unwrap();
    assert!(html.contains("no analyses"));
    assert_eq!(fs::read_dir(tmp.path().join("bundle")).unwrap().count(), 1);
}

#[test]
fn clones_only_config_writes_clones_and_treemap() {
    let tmp = tempfile::tempdir().unwrap();
    let f = fixtures();
    let cfg = write_config(
        tmp.path(),
        &json!({
            "corpus": {"root": f.join("rfc"), "ignore_file": f.join("rfc_ignore.txt")},
            "stages": ["clones", "viz"],
            "seed": 1,
            "output": "bundle"
        }),
    );
    let o = run(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let dir = tmp.path().join("bundle");
    let clones: Value = serde_json::from_str(&fs::read_to_string(dir.join("clones.json")).unwrap()).unwrap();
    assert!(clones["stats"]["clone_coverage"].as_f64().unwrap() > 0.0);
    let svg = fs::read_to_string(dir.join("treemap.svg")).unwrap();
    assert_eq!(svg.matches("<rect").count(), 11);
    assert!(fs::read_to_string(dir.join("index.html")).unwrap().contains("treemap.svg"));
}

#[test]
fn corpus_and_clone_subcommands() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = ingest_rfc(tmp.path());
    let c: Value = serde_json::from_str(&fs::read_to_string(&corpus).unwrap()).unwrap();
    assert_eq!(c["documents"].as_array().unwrap().len(), 11);
    let clones = tmp.path().join("clones.json");
    let ignore = fixtures().join("rfc_ignore.txt");
    let o = run(&[
        "clones",
        "detect",
        "--corpus",
        corpus.to_str().unwrap(),
        "--ignore",
        ignore.to_str().unwrap(),
        "--out",
        clones.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let report: Value = serde_json::from_str(&fs::read_to_string(&clones).unwrap()).unwrap();
    let stats = stdout_json(&run(&[
        "clones",
        "stats",
        "--corpus",
        corpus.to_str().unwrap(),
        "--clones",
        clones.to_str().unwrap(),
    ]));
    assert_eq!(stats, report["stats"]);
    let gapped = report["groups"]
        .as_array()
        .unwrap()
        .iter()
        .find(|g| g["gap_edits"].as_u64().unwrap() > 0)
        .expect("a gapped group");
    let id = gapped["id"].to_string();
    let diff = stdout_json(&run(&[
        "clones",
        "diff",
        "--corpus",
        corpus.to_str().unwrap(),
        "--clones",
        clones.to_str().unwrap(),
        &id,
    ]));
    assert!(!diff["instances"].as_array().unwrap().is_empty());
    let o = run(&["clones", "diff", "--corpus", corpus.to_str().unwrap(), "--clones", clones.to_str().unwrap(), "9999"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn ngram_subcommands() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = ingest_rfc(tmp.path());
    let model = tmp.path().join("model.json");
    assert!(run(&["ngram", "train", "--corpus", corpus.to_str().unwrap(), "--out", model.to_str().unwrap()])
        .status
        .success());
    let text = fixtures().join("rfc/rfc2616.txt");
    let h = stdout_json(&run(&["ngram", "entropy", "--model", model.to_str().unwrap(), "--text", text.to_str().unwrap()]));
    assert!(h["cross_entropy"].as_f64().unwrap() > 0.0);
    let c = stdout_json(&run(&[
        "ngram",
        "categorize",
        "--profiles",
        fixtures().join("profiles").to_str().unwrap(),
        "--text",
        text.to_str().unwrap(),
    ]));
    assert_eq!(c["ranking"][0][0], "english");
    let s = stdout_json(&run(&["ngram", "series", "--corpus", corpus.to_str().unwrap(), "--query", "header"]));
    let versions: Vec<&str> = s.as_array().unwrap().iter().map(|p| p["version"].as_str().unwrap()).collect();
    assert_eq!(versions, ["1996", "1997", "1999"]);
}

#[test]
fn topics_pos_and_viz_subcommands() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = ingest_rfc(tmp.path());
    let c = corpus.to_str().unwrap();
    let model = tmp.path().join("topics.json");
    let o = run(&["topics", "fit", "--corpus", c, "--k", "3", "--iterations", "50", "--out", model.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "missing seed must be a configuration error");
    let o = bin()
        .args(["topics", "fit", "--corpus", c, "--k", "3", "--iterations", "50", "--out", model.to_str().unwrap()])
        .env("TEXTPROJ_SEED", "5")
        .output()
        .unwrap();
    assert!(o.status.success());
    let m = model.to_str().unwrap();
    assert_eq!(stdout_json(&run(&["topics", "show", "--model", m, "--topic", "0", "--top", "4"])).as_array().unwrap().len(), 4);
    assert!(stdout_json(&run(&["topics", "network", "--model", m])).is_object());

    let dot = run(&["pos", "er", "--corpus", c, "--doc", "rfc1945.txt", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().contains("\"HTTP communication\" -> \"user agent\""));
    let smells = stdout_json(&run(&["pos", "smells", "--corpus", c]));
    assert!(smells.as_array().unwrap().iter().any(|s| s["evidence"] == "be included"));
    let tags = run(&["pos", "tag", "--corpus", c, "--doc", "rfc2177.txt"]);
    assert!(String::from_utf8(tags.stdout).unwrap().contains("_"));
    assert_eq!(run(&["pos", "terms", "--corpus", c, "--doc", "nope"]).status.code(), Some(2));

    let out = tmp.path().join("viz");
    let o = out.to_str().unwrap();
    assert!(run(&["viz", "wordcloud", "--corpus", c, "--out", o, "--seed", "1"]).status.success());
    assert!(run(&["viz", "phrasenet", "--corpus", c, "--out", o]).status.success());
    let items = fixtures().join("table2.json");
    assert!(run(&["viz", "treemap", "--items", items.to_str().unwrap(), "--out", o]).status.success());
    assert!(run(&["viz", "textflow", "--corpus", c, "--terms", "request,response,header", "--out", o]).status.success());
    for f in ["wordcloud.svg", "phrasenet.svg", "treemap.svg", "textflow.svg"] {
        assert!(fs::read_to_string(out.join(f)).unwrap().starts_with("<svg"), "{f}");
    }
    let report = tmp.path().join("report");
    assert!(run(&["viz", "report", "--from", o, "--out", report.to_str().unwrap()]).status.success());
    let html = fs::read_to_string(report.join("index.html")).unwrap();
    assert!(html.contains("<svg"));
    assert_eq!(run(&["viz", "treemap", "--out", o, "--canvas", "0x5", "--items", "x"]).status.code(), Some(2));
}

#[test]
fn coding_subcommands() {
    let tmp = tempfile::tempdir().unwrap();
    let f = fixtures();
    let answers = tmp.path().join("answers.json");
    assert!(run(&[
        "corpus",
        "ingest",
        "--root",
        f.join("napire/answers").to_str().unwrap(),
        "--out",
        answers.to_str().unwrap()
    ])
    .status
    .success());
    let cb = f.join("napire/codebook.json");
    let cb = cb.to_str().unwrap();
    let v = stdout_json(&run(&["coding", "validate", "--codebook", cb, "--corpus", answers.to_str().unwrap()]));
    assert!(v["violations"].as_array().unwrap().is_empty());
    let counts = stdout_json(&run(&["coding", "counts", "--codebook", cb]));
    assert_eq!(counts["i_cr"], 22);
    let g = stdout_json(&run(&["coding", "condense", "--codebook", cb, "--min", "7"]));
    assert_eq!(g["nodes"].as_array().unwrap().len(), 7);
    let s = stdout_json(&run(&["coding", "saturation", "--codebook", cb, "--batch", "10"]));
    let total: u64 = s["new_codes"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum();
    assert_eq!(total, 13);
    let o = run(&["coding", "agreement", "--codebook", cb, "--coder", "A"]);
    assert_eq!(o.status.code(), Some(2));
}
