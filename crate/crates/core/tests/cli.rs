use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin(dir: &Path, args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_morgan-kit"))
        .args(args)
        .current_dir(dir)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(dir.path(), args, None);
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

#[test]
fn decide_exit_status() {
    assert_eq!(run(&["decide", "--calculus", "g3dm", "~~p => p"]).0, 0);
    assert_eq!(run(&["decide", "--calculus", "g3sdm", "p => ~~p"]).0, 1);
}

#[test]
fn translate_f() {
    let (code, out, _) = run(&["translate", "--map", "f", "p | q"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "~~(~~p | ~~q)");
}

#[test]
fn prove_prints_tree_or_not_derivable() {
    let (code, out, _) = run(&["prove", "~p => ~p"]);
    assert_eq!(code, 0);
    assert!(out.contains("[*]") && out.ends_with("~p => ~p   [~=>]\n"), "{out}");
    let (code, out, _) = run(&["prove", "p => ~~p"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "NOT DERIVABLE");
}

#[test]
fn prove_and_decide_agree() {
    for s in ["p => p", "~~p => p", "*p => ~p", "p & q => q | r", "~(p & q) => ~p | ~q", "=> ~F"] {
        for calc in ["g3sdm", "g3dm"] {
            if calc == "g3dm" && s.contains('*') {
                continue;
            }
            assert_eq!(run(&["prove", "--calculus", calc, s]).0, run(&["decide", "--calculus", calc, s]).0, "{calc} {s}");
        }
    }
}

#[test]
fn parse_errors_exit_2_with_caret() {
    let (code, _, err) = run(&["decide", "p & => q"]);
    assert_eq!(code, 2);
    assert!(err.contains("p & => q") && err.contains('^'), "{err}");
    let (code, _, err) = run(&["prove", "--calculus", "g3dm", "*p => p"]);
    assert_eq!(code, 2);
    assert!(err.contains("G3SDM"), "{err}");
}

#[test]
fn tampered_proof_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(dir.path(), &["prove", "--format", "json", "~p => ~p"], None);
    let mut proof: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    std::fs::write(dir.path().join("good.json"), proof.to_string()).unwrap();
    assert_eq!(bin(dir.path(), &["render", "good.json"], None).status.code(), Some(0));
    proof["root"]["children"][0]["rule"] = "=>&".into();
    std::fs::write(dir.path().join("bad.json"), proof.to_string()).unwrap();
    assert_eq!(bin(dir.path(), &["render", "bad.json"], None).status.code(), Some(3));
}

#[test]
fn batch_keeps_input_order() {
    let lines: Vec<String> = (0..40).map(|i| format!("{}p => p", "~~".repeat(i % 5))).collect();
    let input = lines.join("\n") + "\np =>\n";
    let dir = tempfile::tempdir().unwrap();
    let o = bin(dir.path(), &["decide", "--calculus", "g3dm", "--batch", "-"], Some(&input));
    assert_eq!(o.status.code(), Some(2));
    let out: Vec<serde_json::Value> =
        String::from_utf8(o.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(out.len(), 41);
    for (line, row) in lines.iter().zip(&out) {
        assert_eq!(row["input"], line.as_str());
        assert_eq!(row["derivable"], true);
    }
    assert_eq!(out[40]["pos"], 4);
}

#[test]
fn interpolate_prints_both_obligations() {
    let (code, out, _) = run(&["interpolate", "p ; q => p"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("interpolant: p\n"));
    assert!(out.contains("left:  p => p") && out.contains("right: p, q => p"));
}

#[test]
fn k_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(dir.path(), &["translate", "--map", "k", "~p => ~(p & q)"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "p' => #k0");
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("k-registry.json")).unwrap()).unwrap();
    assert_eq!(sidecar["classes"][0]["var"], "#k0");
    assert_eq!(sidecar["classes"][0]["representative"], "~(p & q)");
    let o = bin(dir.path(), &["translate", "--map", "k", "~(q & p)"], None);
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "#k0");
}

#[test]
fn validity_reports_witness() {
    assert_eq!(run(&["validity", "--variety", "dm", "p => ~~p"]).0, 0);
    let (code, out, _) = run(&["validity", "--variety", "sdm", "p => ~~p"]);
    assert_eq!(code, 1);
    assert!(out.contains("under p="), "{out}");
}

#[test]
fn corpus_is_reproducible() {
    let a = run(&["corpus", "--seed", "11", "--count", "25"]).1;
    let b = run(&["corpus", "--seed", "11", "--count", "25"]).1;
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 25);
}

#[test]
fn check_embedding_reports_agreement() {
    let (code, out, _) = run(&["check-embedding", "--kind", "dm-to-cl-h", "--seed", "2", "--count", "20"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("20/20"), "{out}");
}
