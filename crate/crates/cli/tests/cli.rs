use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn coskel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coskel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn coskel_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_coskel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json stdout")
}

#[test]
fn gen_emits_a_complex_that_reads_back() {
    let o = coskel(&["gen", "--name", "fig_running_example"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let v = coskel_stdin(&["validate", "--input", "-", "--output", "json"], &text);
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["f_vector"], serde_json::json!([7, 9, 3]));
}

#[test]
fn coskeleton_json_lists_every_degree() {
    let o = coskel(&[
        "coskeleton",
        "-k",
        "1",
        "--gen",
        "fig_running_example",
        "--output",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let groups = json(&o)["groups"].as_array().unwrap().clone();
    assert_eq!(groups.len(), 4);
    assert_eq!(groups[1]["degree"], 0);
    assert_eq!(groups[1]["rank"], 2);
    assert!(groups.iter().all(|g| g["torsion"].is_array()));
}

#[test]
fn torsion_is_reported() {
    // six-vertex RP^2
    let rp2 = r#"{"kind":"simplicial","facets":[[1,2,3],[1,3,4],[1,4,5],[1,5,6],[1,2,6],[2,3,5],[3,4,6],[2,4,5],[2,4,6],[3,5,6]]}"#;
    let o = coskel_stdin(&["homology", "--input", "-", "--output", "json"], rp2);
    assert_eq!(code(&o), 0);
    let g = &json(&o)["groups"][2];
    assert_eq!(g["degree"], 1);
    assert_eq!(g["torsion"], serde_json::json!([2]));
}

#[test]
fn cm_pair_exit_codes() {
    let a = coskel(&["check", "cm", "--gen", "fig_cm_pair(0)", "--coeff", "q"]);
    assert_eq!(code(&a), 0);
    let b = coskel(&[
        "check",
        "cm",
        "--gen",
        "fig_cm_pair(1)",
        "--coeff",
        "q",
        "--output",
        "json",
    ]);
    assert_eq!(code(&b), 1);
    let v = json(&b);
    assert_eq!(v["verdict"], false);
    assert!(v["witness"]["face"].is_string());
}

#[test]
fn les_csv_and_integer_rejection() {
    let o = coskel(&[
        "les",
        "-k",
        "2",
        "--coeff",
        "gf:2",
        "--gen",
        "cross_polytope_boundary(3)",
        "--output",
        "csv",
    ]);
    assert_eq!(code(&o), 0);
    let csv = String::from_utf8(o.stdout).unwrap();
    assert!(csv.starts_with("k,i,a,b,c\n"));
    assert_eq!(csv.lines().count(), 5);
    let z = coskel(&["les", "-k", "1", "--coeff", "z", "--gen", "simplex(2)"]);
    assert_eq!(code(&z), 2);
}

#[test]
fn leray_accepts_integers() {
    let o = coskel(&[
        "check",
        "leray",
        "--r",
        "1",
        "--coeff",
        "z",
        "--gen",
        "simplex(3)",
    ]);
    assert_eq!(code(&o), 0);
    let sq = coskel(&[
        "check",
        "leray",
        "--r",
        "1",
        "--gen",
        "cross_polytope_boundary(2)",
    ]);
    assert_eq!(code(&sq), 1);
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(code(&coskel(&["frobnicate"])), 2);
    assert_eq!(
        code(&coskel(&["homology", "--gen", "simplex(2)", "--coeff", "gf:4"])),
        2
    );
    assert_eq!(code(&coskel(&["gen", "--name", "klein_bottle"])), 2);
    assert_eq!(
        code(&coskel(&["homology", "--gen", "simplex(2)", "--output", "csv"])),
        0
    );
    assert_eq!(
        code(&coskel(&[
            "cm-seq",
            "--gen",
            "simplex(2)",
            "--coeff",
            "q",
            "--output",
            "csv"
        ])),
        2
    );
    let bad = coskel_stdin(
        &["validate", "--input", "-"],
        r#"{"kind":"cubical","ambient":2,"chi":["*"]}"#,
    );
    assert_eq!(code(&bad), 3);
    assert_eq!(code(&coskel(&["homology", "--input", "/nonexistent/x.json"])), 3);
}

#[test]
fn crossing_of_fig_crossing_example() {
    let o = coskel(&["cubical", "crossing", "--gen", "fig_crossing_example"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["kind"], "simplicial");
    let facets = v["facets"].as_array().unwrap();
    let verts: std::collections::BTreeSet<&str> = facets
        .iter()
        .flat_map(|f| f.as_array().unwrap().iter().map(|l| l.as_str().unwrap()))
        .collect();
    assert_eq!(verts.len(), 5);
}

#[test]
fn cat0_exit_codes() {
    assert_eq!(
        code(&coskel(&["cubical", "cat0", "--gen", "fig_cone_example"])),
        0
    );
    let annulus =
        r#"{"kind":"cubical","ambient":2,"cubes":[[[0,1],[0,0]],[[1,1],[0,1]],[[0,1],[1,1]],[[0,0],[0,1]]]}"#;
    let o = coskel_stdin(&["cubical", "cat0", "--input", "-", "--output", "json"], annulus);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["verdict"], "refuted");
}

#[test]
fn cubical_subcommands_run() {
    for args in [
        vec!["cubical", "hyperplanes", "--gen", "fig_hyperplane_example"],
        vec!["cubical", "iterated", "-j", "2", "--gen", "cube_grid(1,1,1)"],
        vec!["cubical", "embed", "--gen", "strip(3)", "--root", "0,0"],
        vec![
            "cubical",
            "verify",
            "--gen",
            "fig_cone_example",
            "--coeff",
            "gf:2",
        ],
    ] {
        let o = coskel(&args);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let cone = coskel_stdin(
        &["cubical", "cone", "--input", "-"],
        r#"{"kind":"simplicial","facets":[[1,2],[2,3],[3,4],[4,1]]}"#,
    );
    assert_eq!(code(&cone), 0);
    assert_eq!(json(&cone)["kind"], "cubical");
    let h = coskel(&[
        "cubical",
        "hyperplanes",
        "--gen",
        "fig_hyperplane_example",
        "--output",
        "json",
    ]);
    assert_eq!(json(&h)["count"], 6);
}

#[test]
fn seed_fills_random_specs_and_output_is_stable() {
    let a = coskel(&["gen", "--name", "random_flag(6,0.5)", "--seed", "9"]);
    let b = coskel(&["gen", "--name", "random_flag(6,0.5,9)"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let args = [
        "alexander",
        "-k",
        "1",
        "--gen",
        "cross_polytope_boundary(3)",
        "--output",
        "json",
    ];
    let (x, y) = (coskel(&args), coskel(&args));
    assert_eq!(code(&x), 0);
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn other_checks() {
    assert_eq!(
        code(&coskel(&[
            "check",
            "neighbourly",
            "--t",
            "2",
            "--gen",
            "cyclic_polytope_boundary(4,8)"
        ])),
        0
    );
    assert_eq!(
        code(&coskel(&[
            "check",
            "neighbourly",
            "--t",
            "2",
            "--gen",
            "cross_polytope_boundary(3)",
            "--method",
            "skeleton"
        ])),
        1
    );
    assert_eq!(
        code(&coskel(&[
            "check",
            "stacked",
            "--s",
            "1",
            "--gen",
            "stacked_ball(3,3)"
        ])),
        0
    );
    assert_eq!(code(&coskel(&["check", "ball", "--gen", "simplex(3)"])), 0);
    assert_eq!(code(&coskel(&["check", "sphere", "--gen", "simplex(3)"])), 1);
    assert_eq!(
        code(&coskel(&["check", "manifold", "--gen", "boundary_simplex(3)"])),
        0
    );
    assert_eq!(
        code(&coskel(&[
            "check",
            "neighbourly",
            "--t",
            "1",
            "--gen",
            "strip(2)"
        ])),
        3
    );
    let dual = coskel(&["dual", "--gen", "cube_grid(1,1,1)", "--output", "json"]);
    assert_eq!(code(&dual), 0);
    assert_eq!(json(&dual)["kind"], "poset");
    assert_eq!(
        code(&coskel(&[
            "cm-seq",
            "--gen",
            "boundary_simplex(3)",
            "--coeff",
            "gf:2"
        ])),
        0
    );
}
