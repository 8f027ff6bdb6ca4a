//! End-to-end tests of the `macph` binary: subcommand behavior, the
//! enumerate -> poset -> homology pipeline, exit codes, determinism, and
//! the digest-verified output cache.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn macph(dir: &TempDir, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macph"))
        .args(args)
        .current_dir(dir.path())
        .env("OMCACHE_DIR", dir.path().join("cache"))
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn assert_code(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout(out),
        stderr(out)
    );
}

#[test]
fn enumerate_counts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    // unoriented n=3: one OM
    let out = macph(&dir, &["enumerate", "--n", "3"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).lines().count(), 1);
    // oriented n=3: two chirotopes
    let out = macph(&dir, &["enumerate", "--n", "3", "--oriented"]);
    assert_code(&out, 0);
    assert_eq!(stdout(&out).lines().count(), 2);
    // uniform chirotopes at n=4: sixteen
    let out = macph(
        &dir,
        &["enumerate", "--n", "4", "--oriented", "--uniform-only"],
    );
    assert_code(&out, 0);
    assert_eq!(stdout(&out).lines().count(), 16);
    // invalid n is a usage error
    let out = macph(&dir, &["enumerate", "--n", "2"]);
    assert_code(&out, 2);
    let out = macph(&dir, &["enumerate", "--n", "9"]);
    assert_code(&out, 2);
}

#[test]
fn enumerate_record_shape() {
    let dir = TempDir::new().unwrap();
    let out = macph(&dir, &["enumerate", "--n", "4"]);
    assert_code(&out, 0);
    let mut uniform_seen = 0;
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], 4);
        let chi = v["chi"].as_str().unwrap();
        assert_eq!(chi.len(), 4);
        let topes = v["topes"].as_u64().unwrap();
        if !chi.contains('0') {
            assert_eq!(topes, 14, "uniform OMs have 14 topes");
            uniform_seen += 1;
        }
        if v["loops"].as_array().unwrap().is_empty() {
            assert!(topes >= 8);
        }
    }
    assert_eq!(uniform_seen, 8);
}

#[test]
fn rerun_is_byte_identical_with_and_without_cache() {
    let dir = TempDir::new().unwrap();
    let out_a = dir.path().join("a.jsonl");
    let out_b = dir.path().join("b.jsonl");
    let run = |path: &Path, extra: &[&str]| {
        let mut args = vec!["enumerate", "--n", "4", "--out", path.to_str().unwrap()];
        args.extend_from_slice(extra);
        let out = macph(&dir, &args);
        assert_code(&out, 0);
        out
    };
    run(&out_a, &["--no-cache"]);
    let second = run(&out_b, &[]);
    assert_eq!(fs::read(&out_a).unwrap(), fs::read(&out_b).unwrap());
    // third run hits the cache and still writes identical bytes
    let out_c = dir.path().join("c.jsonl");
    let third = run(&out_c, &[]);
    assert!(
        stderr(&third).contains("cache hit"),
        "stderr: {}",
        stderr(&third)
    );
    assert!(!stderr(&second).contains("cache hit"));
    assert_eq!(fs::read(&out_a).unwrap(), fs::read(&out_c).unwrap());
    // manifests sit next to outputs and record one output digest
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("a.jsonl.manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["command"], "enumerate");
    assert_eq!(manifest["output_digests"].as_object().unwrap().len(), 1);
}

#[test]
fn poset_shapes_and_input_errors() {
    let dir = TempDir::new().unwrap();
    let oms = dir.path().join("oms.jsonl");
    assert_code(
        &macph(
            &dir,
            &["enumerate", "--n", "3", "--out", oms.to_str().unwrap()],
        ),
        0,
    );
    let poset = dir.path().join("poset.json");
    let out = macph(
        &dir,
        &[
            "poset",
            "--in",
            oms.to_str().unwrap(),
            "--out",
            poset.to_str().unwrap(),
        ],
    );
    assert_code(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&poset).unwrap()).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(v["hasse"].as_array().unwrap().len(), 0);

    // oriented MacPhersonian at n=3: two incomparable chirotopes
    let chis = dir.path().join("chis.jsonl");
    assert_code(
        &macph(
            &dir,
            &[
                "enumerate",
                "--n",
                "3",
                "--oriented",
                "--out",
                chis.to_str().unwrap(),
            ],
        ),
        0,
    );
    let out = macph(
        &dir,
        &["poset", "--oriented", "--in", chis.to_str().unwrap()],
    );
    assert_code(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 2);
    assert_eq!(v["hasse"].as_array().unwrap().len(), 0);

    // malformed input: exit 3
    let bad = dir.path().join("bad.jsonl");
    fs::write(
        &bad,
        "{\"n\":4,\"chi\":\"0000\",\"loops\":[],\"topes\":0}\n",
    )
    .unwrap();
    assert_code(&macph(&dir, &["poset", "--in", bad.to_str().unwrap()]), 3);
    fs::write(&bad, "not json\n").unwrap();
    assert_code(&macph(&dir, &["poset", "--in", bad.to_str().unwrap()]), 3);
    assert_code(&macph(&dir, &["poset", "--in", "missing.jsonl"]), 3);
}

/// The full pipeline at n=4, against the Grassmannian expectations from the
/// main theorem: MacP(3,4) matches G(3,4) and OMacP(3,4) matches S^3.
#[test]
fn pipeline_homology_n4() {
    let dir = TempDir::new().unwrap();
    let oms = dir.path().join("oms.jsonl");
    let poset = dir.path().join("poset.json");
    assert_code(
        &macph(
            &dir,
            &["enumerate", "--n", "4", "--out", oms.to_str().unwrap()],
        ),
        0,
    );
    assert_code(
        &macph(
            &dir,
            &[
                "poset",
                "--in",
                oms.to_str().unwrap(),
                "--out",
                poset.to_str().unwrap(),
            ],
        ),
        0,
    );

    // gf2 with a correct expectation
    let out = macph(
        &dir,
        &[
            "homology",
            "--in",
            poset.to_str().unwrap(),
            "--expect",
            "3,4",
        ],
    );
    assert_code(&out, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["gf2_betti"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(
        report["complex"]["f_vector"],
        serde_json::json!([40, 232, 384, 192])
    );
    assert_eq!(report["euler"], serde_json::json!(0));

    // integral field reveals the RP^3 torsion
    let out = macph(
        &dir,
        &["homology", "--in", poset.to_str().unwrap(), "--field", "z"],
    );
    assert_code(&out, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["integral"]["betti"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(report["integral"]["torsion"], serde_json::json!([[1, [2]]]));

    // wrong expectation: exit 5
    let out = macph(
        &dir,
        &[
            "homology",
            "--in",
            poset.to_str().unwrap(),
            "--expect",
            "3,3",
        ],
    );
    assert_code(&out, 5);

    // tiny budget: exit 4 before any matrix work
    let out = macph(
        &dir,
        &[
            "homology",
            "--in",
            poset.to_str().unwrap(),
            "--budget",
            "10",
        ],
    );
    assert_code(&out, 4);

    // oriented pipeline gives the 3-sphere pattern
    let chis = dir.path().join("chis.jsonl");
    let oposet = dir.path().join("oposet.json");
    assert_code(
        &macph(
            &dir,
            &[
                "enumerate",
                "--n",
                "4",
                "--oriented",
                "--out",
                chis.to_str().unwrap(),
            ],
        ),
        0,
    );
    assert_code(
        &macph(
            &dir,
            &[
                "poset",
                "--oriented",
                "--in",
                chis.to_str().unwrap(),
                "--out",
                oposet.to_str().unwrap(),
            ],
        ),
        0,
    );
    let out = macph(&dir, &["homology", "--in", oposet.to_str().unwrap()]);
    assert_code(&out, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["gf2_betti"], serde_json::json!([1, 0, 0, 1]));
}

#[test]
fn verify_suites_and_grassmann_table() {
    let dir = TempDir::new().unwrap();
    let out = macph(&dir, &["verify", "sphere", "--n", "3"]);
    assert_code(&out, 0);
    assert!(stdout(&out).contains("[pass]"));

    let out = macph(
        &dir,
        &[
            "verify",
            "realizable",
            "--n",
            "6",
            "--count",
            "100",
            "--seed",
            "42",
        ],
    );
    assert_code(&out, 0);

    let out = macph(&dir, &["--json", "verify", "maxcov", "--n", "4"]);
    assert_code(&out, 0);
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(reports.as_array().unwrap().iter().all(|r| r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"].as_bool().unwrap())));

    let out = macph(&dir, &["grassmann", "--k", "3", "--n", "5"]);
    assert_code(&out, 0);
    assert!(stdout(&out).starts_with("1 1 2 2 2 1 1"));
    let out = macph(&dir, &["grassmann", "--k", "3", "--n", "4"]);
    assert!(stdout(&out).starts_with("1 1 1 1"));
    let out = macph(&dir, &["grassmann", "--k", "3", "--n", "3"]);
    assert!(stdout(&out).starts_with('1'));

    // usage error
    let out = macph(&dir, &["grassmann", "--k", "4", "--n", "3"]);
    assert_code(&out, 2);
}

#[test]
fn no_loops_filter() {
    let dir = TempDir::new().unwrap();
    let all = stdout(&macph(&dir, &["enumerate", "--n", "4"]));
    let filtered = stdout(&macph(&dir, &["enumerate", "--n", "4", "--no-loops"]));
    assert!(filtered.lines().count() < all.lines().count());
    for line in filtered.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["loops"].as_array().unwrap().is_empty());
    }
}

#[test]
fn threads_flag_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let one = stdout(&macph(
        &dir,
        &["--threads", "1", "enumerate", "--n", "5", "--oriented"],
    ));
    let two = stdout(&macph(
        &dir,
        &["--threads", "2", "enumerate", "--n", "5", "--oriented"],
    ));
    assert_eq!(one, two);
    assert_eq!(one.lines().count(), 3604);
}
