//! End-to-end runs of the `tw-approx` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tw_approx::graph::Graph;
use tw_approx::io::{emit_graph, parse_decomposition, parse_graph};
use tw_approx::report::{read_reports, COLUMNS};
use tw_approx::validate::check_tree_decomposition;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tw-approx"))
        .args(args)
        .output()
        .unwrap()
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let path = dir.join(name);
    fs::write(&path, emit_graph(g)).unwrap();
    path.to_str().unwrap().to_string()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn mindeg_on_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let gr = write_graph(dir.path(), "p10.gr", &Graph::path(10));
    let td = dir.path().join("p10.td");
    let csv = dir.path().join("r.csv");
    let o = run(&[
        "decompose",
        "--algo",
        "mindeg",
        "--in",
        &gr,
        "--out",
        td.to_str().unwrap(),
        "--report",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let parsed = parse_decomposition(&fs::read_to_string(&td).unwrap()).unwrap();
    assert_eq!(parsed.td.width() + 1, 2);
    let rows = read_reports(&csv).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0].graph.as_str(), rows[0].width_plus_one), ("p10", Some(2)));
}

#[test]
fn fixed_k_exceeds() {
    let dir = tempfile::tempdir().unwrap();
    let gr = write_graph(dir.path(), "k10.gr", &Graph::complete(10));
    let o = run(&["decompose", "--algo", "rs4", "--k", "2", "--in", &gr]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr(&o).trim(), "the treewidth exceeds 1");
    assert!(o.stdout.is_empty());
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.gr");
    fs::write(&bad, "p tw 3 5\n1 2\n2 3\n1 3\n3 1\n").unwrap();
    let o = run(&["decompose", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("declares 5 edges, found 4"), "{}", stderr(&o));

    let o = run(&["decompose", "--algo", "nope", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["decompose", "--k", "2", "--search", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dropped_edges_warn() {
    let dir = tempfile::tempdir().unwrap();
    let gr = dir.path().join("loop.gr");
    fs::write(&gr, "p tw 3 3\n1 2\n3 3\n2 3\n").unwrap();
    let o = run(&["decompose", "--algo", "mindeg", "--in", gr.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("dropped 1 self-loop or duplicate"));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("s td "));
}

#[test]
fn validate_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let gr = write_graph(dir.path(), "p3.gr", &Graph::path(3));
    let good = dir.path().join("good.td");
    fs::write(&good, "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n").unwrap();
    let o = run(&["validate", "--graph", &gr, "--td", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let bad = dir.path().join("bad.td");
    fs::write(&bad, "s td 2 2 3\nb 1 1 2\nb 2 3\n1 2\n").unwrap();
    let o = run(&["validate", "--graph", &gr, "--td", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "violation: edge 2 3 is in no bag\n");

    let garbled = dir.path().join("garbled.td");
    fs::write(&garbled, "s td 2 2 3\nb 1 1 2\n").unwrap();
    let o = run(&["validate", "--graph", &gr, "--td", garbled.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exact_small_and_oversize() {
    let dir = tempfile::tempdir().unwrap();
    let gr = write_graph(dir.path(), "g.gr", &Graph::grid(3, 3));
    let o = run(&["exact", "--in", &gr]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "3");
    let big = write_graph(dir.path(), "big.gr", &Graph::path(15));
    assert_eq!(run(&["exact", "--in", &big]).status.code(), Some(2));
}

#[test]
fn decompositions_round_trip_and_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = Graph::grid(4, 5);
    let gr = write_graph(dir.path(), "grid.gr", &g);
    for algo in ["rs4", "half45", "bg367", "mindeg", "generic"] {
        for extra in [&["--search"][..], &["--adaptive"][..], &["--k", "5"][..]] {
            let mut args = vec!["decompose", "--algo", algo, "--in", &gr];
            args.extend_from_slice(extra);
            let first = run(&args);
            let second = run(&args);
            assert_eq!(first.status.code(), Some(0), "{algo} {extra:?}: {}", stderr(&first));
            assert_eq!(first.stdout, second.stdout, "{algo} {extra:?} is not deterministic");
            let td_path = dir.path().join(format!("{algo}.td"));
            fs::write(&td_path, &first.stdout).unwrap();
            let parsed = parse_decomposition(&String::from_utf8_lossy(&first.stdout)).unwrap();
            check_tree_decomposition(&g, &parsed.td).unwrap();
            let v = run(&["validate", "--graph", &gr, "--td", td_path.to_str().unwrap()]);
            assert_eq!(v.status.code(), Some(0));
        }
    }
}

#[test]
fn bench_writes_one_row_per_cell() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    fs::create_dir(&corpus).unwrap();
    let graphs = [
        ("a_path", Graph::path(30)),
        ("b_cycle", Graph::cycle(25)),
        ("c_grid", Graph::grid(4, 6)),
        ("d_clique", Graph::complete(7)),
        (
            "e_tree",
            tw_approx::generators::random_tree(40, &mut tw_approx::generators::seeded(1)),
        ),
    ];
    for (name, g) in &graphs {
        write_graph(&corpus, &format!("{name}.gr"), g);
    }
    let csv = dir.path().join("bench.csv");
    let tds = dir.path().join("tds");
    fs::create_dir(&tds).unwrap();
    let o = run(&[
        "bench",
        "--dir",
        corpus.to_str().unwrap(),
        "--algos",
        "mindeg,half45,rs4",
        "--report",
        csv.to_str().unwrap(),
        "--td-dir",
        tds.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().next().unwrap(), COLUMNS.join(","));
    let rows = read_reports(&csv).unwrap();
    assert_eq!(rows.len(), 15);
    let cells: Vec<(String, String)> = rows.iter().map(|r| (r.graph.clone(), r.algorithm.clone())).collect();
    let mut expected = Vec::new();
    for (name, _) in &graphs {
        for algo in ["mindeg", "half45", "rs4"] {
            expected.push((name.to_string(), algo.to_string()));
        }
    }
    assert_eq!(cells, expected);
    for (row, (name, g)) in rows.iter().zip(graphs.iter().flat_map(|x| [x, x, x])) {
        assert_eq!((row.n, row.m), (g.n(), g.m()));
        assert_eq!(row.graph, *name);
        let td = fs::read_to_string(tds.join(format!("{name}.{}.td", row.algorithm))).unwrap();
        let parsed = parse_decomposition(&td).unwrap();
        assert_eq!(row.width_plus_one, Some(parsed.td.width() + 1));
    }
    // Appending keeps the single header.
    let again = run(&[
        "bench",
        "--dir",
        corpus.to_str().unwrap(),
        "--algos",
        "mindeg",
        "--report",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(read_reports(&csv).unwrap().len(), 20);
}

#[test]
fn generate_writes_parsable_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.gr");
    let o = run(&[
        "generate",
        "--family",
        "partial-k-tree",
        "--n",
        "30",
        "--k",
        "3",
        "--p",
        "0.8",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(parse_graph(&fs::read_to_string(&out).unwrap()).unwrap().graph.n(), 30);
    let cdir = dir.path().join("corpus");
    let o = run(&[
        "generate",
        "--family",
        "corpus",
        "--seed",
        "3",
        "--out",
        cdir.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_dir(&cdir).unwrap().count(), 5);
}

#[test]
fn in_process_entry_point() {
    assert_eq!(tw_approx::cli::cli_main(["tw-approx", "--help"]), 0);
    assert_eq!(tw_approx::cli::cli_main(["tw-approx", "frobnicate"]), 2);
}
