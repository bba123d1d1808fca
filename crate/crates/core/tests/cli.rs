use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use omega_lie::report::{Payload, Report};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omega-lie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Report) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = bin(&full);
    let report = Report::from_json(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (o.status.code().unwrap(), report)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const L1: &str = r#"{
  "name": "hand-written L_1",
  "dim": 3,
  "brackets": [
    {"i": 1, "j": 2, "coeffs": {"2": 1}},
    {"i": 2, "j": 3, "coeffs": {"3": "1"}}
  ],
  "omega": [{"i": 1, "j": 2, "value": "1"}]
}"#;

#[test]
fn file_and_catalog_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "l1.json", L1);
    let (code, from_file) = json(&["solve", "der", &path]);
    assert_eq!(code, 0);
    let (_, from_catalog) = json(&["solve", "der", "@L_1"]);
    assert_eq!(from_file.payload, from_catalog.payload);
    // Same table under a different name hashes the same.
    assert_eq!(
        from_file.algebra.unwrap().content_hash,
        from_catalog.algebra.unwrap().content_hash
    );
}

#[test]
fn export_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = bin(&["catalog", "export", "C_alpha", "--alpha", "5/3"]);
    assert!(o.status.success());
    let path = write(dir.path(), "c.json", &stdout(&o));
    let (_, a) = json(&["solve", "halfder", &path]);
    let (_, b) = json(&["solve", "halfder", "@C_alpha?alpha=5/3"]);
    assert_eq!(a.payload, b.payload);
    assert_eq!(a.algebra.unwrap().content_hash, b.algebra.unwrap().content_hash);
}

#[test]
fn solve_reports_rank_and_verdicts() {
    let (code, r) = json(&["solve", "der", "@L_{1,4}"]);
    assert_eq!(code, 0);
    match &r.payload {
        Payload::MapSpace { kind, rank, basis } => {
            assert_eq!(kind, "derivation");
            assert_eq!(*rank, 2);
            assert_eq!(basis.len(), 2);
        }
        other => panic!("unexpected payload {other:?}"),
    }
    assert_eq!(r.verdicts.len(), 1);
    assert!(r.verdicts[0].passed);

    let (_, d) = json(&["solve", "dder", "@B", "--delta", "1/2"]);
    let (_, h) = json(&["solve", "halfder", "@B"]);
    assert_eq!(d.payload, h.payload);
}

#[test]
fn json_is_well_formed_and_deterministic() {
    let args = ["--format", "json", "local", "der", "@E_{1,alpha}"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["payload"]["type"], "local_closure");
    assert_eq!(v["algebra"]["parameters"]["alpha"], "2");
    assert!(v["algebra"]["content_hash"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn seed_changes_only_random_samples() {
    let (_, a) = json(&["--seed", "1", "local", "der", "@L_{2,1}"]);
    let (_, b) = json(&["--seed", "2", "local", "der", "@L_{2,1}"]);
    let rank = |r: &Report| match &r.payload {
        Payload::LocalClosure { candidate_rank, certified, .. } => (*candidate_rank, *certified),
        p => panic!("{p:?}"),
    };
    assert_eq!(rank(&a), rank(&b));
}

#[test]
fn local_map_membership() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.json", "[[1,0,0],[0,1,0],[0,0,1]]");
    let (code, r) = json(&["local", "map", "@B", "--map", &id, "--space", "halfder"]);
    assert_eq!(code, 0);
    assert!(matches!(&r.payload, Payload::LocalMember { verdict, .. } if verdict == "LOCAL_CERTIFIED"));

    let (_, r) = json(&["local", "map", "@B", "--map", &id]);
    assert!(matches!(&r.payload, Payload::LocalMember { verdict, witness: Some(_), .. } if verdict == "NOT_LOCAL"));
}

#[test]
fn local_family_closure() {
    let dir = tempfile::tempdir().unwrap();
    let fam = write(
        dir.path(),
        "fam.json",
        r#"{
          "base": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
          "directions": [
            [[0,0,1,0],[0,0,-1,0],[0,0,1,0],[0,0,0,0]],
            [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,1,0]]
          ],
          "parameters": ["a", "b"],
          "open_conditions": [{"coeffs": {"a": 1}, "constant": 1}]
        }"#,
    );
    let (code, r) = json(&["local", "family", "@L_{1,1}", "--family", &fam]);
    assert_eq!(code, 0);
    assert!(matches!(&r.payload, Payload::AffineClosure { verdict, .. } if verdict == "MATCHES_FAMILY_HULL"));
}

#[test]
fn twolocal_text_output() {
    let o = bin(&["twolocal", "halfder", "@B"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("RIGID"), "{text}");
    assert!(text.contains("separating vector"), "{text}");
}

#[test]
fn catalog_commands() {
    let (_, r) = json(&["catalog", "list"]);
    match r.payload {
        Payload::CatalogList { entries } => {
            assert_eq!(entries.len(), 27);
            assert!(entries.iter().any(|e| e.key == "L_{2,4}" && e.dim == 4));
        }
        p => panic!("{p:?}"),
    }
    let o = bin(&["catalog", "show", "L_{1,1}"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("note:"));
}

#[test]
fn check_flags_bad_tables() {
    let dir = tempfile::tempdir().unwrap();
    // [e1,e2] = e3 with ω(e1,e2) = 1 breaks the ω-Jacobi identity.
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"name":"bad","dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":1}},{"i":1,"j":3,"coeffs":{"1":1}}],
            "omega":[{"i":1,"j":2,"value":1}]}"#,
    );
    let (code, r) = json(&["check", &bad]);
    assert_eq!(code, 1);
    assert!(matches!(&r.payload, Payload::Axioms { passed: false, failing, .. } if !failing.is_empty()));
    // Solvers refuse tables that are not ω-Lie algebras.
    assert_eq!(bin(&["solve", "der", &bad]).status.code(), Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&[]).status.code(), Some(2));
    assert_eq!(bin(&["solve", "nonsense", "@B"]).status.code(), Some(2));
    assert_eq!(bin(&["--format", "xml", "check", "@B"]).status.code(), Some(2));
    assert_eq!(bin(&["check", "/no/such/file.json"]).status.code(), Some(3));
    assert_eq!(bin(&["check", "@not_a_key"]).status.code(), Some(3));
    assert_eq!(bin(&["check", "@C_alpha?alpha=0"]).status.code(), Some(3));
    assert_eq!(bin(&["check", "@C_alpha?beta=3"]).status.code(), Some(3));
    assert_eq!(bin(&["solve", "dder", "@B"]).status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let garbage = write(dir.path(), "g.json", "{ not json");
    let o = bin(&["check", &garbage]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("g.json"));

    let wrong_dim = write(dir.path(), "m.json", "[[1,0],[0,1]]");
    assert_eq!(bin(&["local", "map", "@B", "--map", &wrong_dim]).status.code(), Some(3));

    assert!(bin(&["--help"]).status.success());
}

#[test]
fn verify_single_criterion() {
    let (code, r) = json(&["verify-paper", "--criterion", "10"]);
    assert_eq!(code, 0);
    assert!(matches!(&r.payload, Payload::Verify { criteria } if criteria.len() == 1 && criteria[0].passed));
    assert_eq!(bin(&["verify-paper", "--criterion", "12"]).status.code(), Some(3));
}
