//! End-to-end runs of the `kpartite` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use kpartite::graph::io::{decode_graph6, encode_graph6};
use kpartite::graph::is_isomorphic;
use kpartite::Graph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpartite"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    fs::write(&path, format!("{}\n", encode_graph6(g))).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn recognize_degree_sequences() {
    let out = run(&["recognize", "--degrees", "7,7,7,7,7,7,6,6,6,6"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(
        v["degree_equivalent_multipartite"]["parts"],
        serde_json::json!([3, 3, 4])
    );
    assert_eq!(v["graphical"], true);

    let out = run(&["recognize", "--degrees", "1,1,1,1"]);
    let v = json(&out);
    assert!(v["degree_equivalent_multipartite"].is_null());
    assert_eq!(
        v["degree_equivalent_clique_union"]["parts"],
        serde_json::json!([2, 2])
    );
}

#[test]
fn recognize_reads_degree_files_and_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let seq = dir.path().join("seq.txt");
    fs::write(&seq, "2 2 2 2 2 2\n").unwrap();
    let v = json(&run(&["recognize", "--degrees", seq.to_str().unwrap()]));
    assert_eq!(
        v["degree_equivalent_clique_union"]["parts"],
        serde_json::json!([3, 3])
    );

    let c6 = write_graph(dir.path(), "c6.g6", &Graph::cycle(6).unwrap());
    let v = json(&run(&["recognize", "--input", &c6]));
    assert!(v["clique_union"].is_null());
    assert_eq!(v["degree_equivalent_clique_union"]["k"], 2);
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(
        run(&["recognize", "--degrees", "1,x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["realize", "--degrees", "3,3,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["exact", "--alpha", "--input", "/nonexistent"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["find-sharp", "--profile", "3,3", "--patterns", "q9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify-theorem", "--max-n", "11"]).status.code(),
        Some(2)
    );
}

#[test]
fn exact_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = write_graph(dir.path(), "p.g6", &Graph::petersen());
    let v = json(&run(&["exact", "--alpha", "--input", &petersen]));
    assert_eq!(v["size"], 4);
    let v = json(&run(&["exact", "--omega", "--input", &petersen]));
    assert_eq!(v["size"], 2);

    let c6 = write_graph(dir.path(), "c6.g6", &Graph::cycle(6).unwrap());
    let out = run(&["witness", "--independent", "--input", &c6]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["size"], 3);
    assert_eq!(v["kind"], "independent-set");

    let canonical = write_graph(dir.path(), "k33.g6", &Graph::clique_union(&[3, 3]));
    assert_eq!(
        run(&["witness", "--input", &canonical]).status.code(),
        Some(2)
    );

    let co_c6 = write_graph(dir.path(), "cc6.g6", &Graph::cycle(6).unwrap().complement());
    let v = json(&run(&["witness", "--clique", "--input", &co_c6]));
    assert_eq!(v["kind"], "clique");
    assert_eq!(v["size"], 3);
}

#[test]
fn bounds_single_and_batch() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_graph(dir.path(), "c6.g6", &Graph::cycle(6).unwrap());
    let v = json(&run(&["bounds", "--input", &c6, "--exact"]));
    assert_eq!(v["caro_wei"], "2");
    assert_eq!(v["turan_alpha"], "2");
    assert_eq!(v["sharpened_alpha"], 3);
    assert_eq!(v["exact_alpha"], 3);
    assert_eq!(v["schema_version"], 1);

    let batch = dir.path().join("many.g6");
    fs::write(&batch, "DQc\nE?~o\n").unwrap();
    let out = run(&["bounds", "--input", batch.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("schema_version,id,n,m,caro_wei"));

    let out = run(&["bounds", "--input", dir.path().to_str().unwrap()]);
    assert_eq!(stdout(&out).lines().count(), 1 + 1 + 2);
}

#[test]
fn realize_enumerate_and_sample() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["realize", "--degrees", "2,2,2,2"]);
    let g = decode_graph6(stdout(&out).trim()).unwrap();
    assert!(is_isomorphic(&g, &Graph::cycle(4).unwrap()).unwrap());

    let listing = dir.path().join("all.g6");
    let out = run(&[
        "enumerate",
        "--degrees",
        "1,1,2,2,2",
        "--out",
        listing.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&listing).unwrap().lines().count(), 2);

    let c6 = write_graph(dir.path(), "c6.g6", &Graph::cycle(6).unwrap());
    let a = run(&["sample", "--input", &c6, "--steps", "50", "--seed", "3"]);
    let b = run(&["sample", "--input", &c6, "--steps", "50", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let walked = decode_graph6(stdout(&a).trim()).unwrap();
    assert_eq!(
        walked.degree_sequence(),
        Graph::cycle(6).unwrap().degree_sequence()
    );

    let out = run(&[
        "sample", "--input", &c6, "--steps", "5", "--format", "edges",
    ]);
    assert!(stdout(&out).starts_with("n=6"));
}

#[test]
fn reduce4_requires_cubic_input() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = write_graph(dir.path(), "p.g6", &Graph::petersen());
    let out = run(&["reduce4", "--input", &petersen]);
    let g = decode_graph6(stdout(&out).trim()).unwrap();
    assert_eq!(g.n(), 40);
    let c5 = write_graph(dir.path(), "c5.g6", &Graph::cycle(5).unwrap());
    assert_eq!(run(&["reduce4", "--input", &c5]).status.code(), Some(2));
}

#[test]
fn campaigns() {
    let out = run(&["verify-theorem", "--max-n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("schema_version,profile,k,n,realizations"));
    assert_eq!(text.lines().count(), 1 + 29);

    let out = run(&["find-sharp", "--profile", "3,3"]);
    let g = decode_graph6(stdout(&out).trim()).unwrap();
    assert!(is_isomorphic(&g, &Graph::cycle(6).unwrap()).unwrap());

    let out = run(&["find-sharp", "--profile", "3,3", "--patterns", "c5"]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());

    let out = run(&["sharpness", "--profiles", "3,3,4"]);
    assert!(out.status.success());
    assert!(stdout(&out)
        .lines()
        .skip(1)
        .all(|l| l.contains(",true,false,") || l.contains(",false,true,")));
}
