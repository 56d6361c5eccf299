//! End-to-end checks of the command-line surface: exit codes, file formats
//! and the auto dispatch.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_locol"))
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("locol-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn colour_w5_morass_exits_one_with_certificate() {
    let dir = workdir("w5");
    let w5 = dir.join("w5.edges");
    let gen = run(&["gen", "odd-wheel", "--rim", "5"]);
    assert!(gen.status.success());
    fs::write(&w5, &gen.stdout).unwrap();

    let out = run(&[
        "color",
        w5.to_str().unwrap(),
        "--k",
        "3",
        "--algorithm",
        "morass",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("morass_block"), "{text}");
    assert!(text.contains("\"node\": \"wheel\""), "{text}");
}

#[test]
fn analyze_fig3_reports_classes() {
    // the figure-3 graph: eight vertices, lambda 5 on one pair, kappa 4
    let dir = workdir("fig3");
    let path = dir.join("fig3.edges");
    let g = locol::fixtures::fig3();
    fs::write(&path, locol::io::write_edge_list(&g)).unwrap();

    let out = run(&["analyze", path.to_str().unwrap(), "--k", "4"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["c2"], true);
    assert_eq!(report["c1"], false);
    assert_eq!(report["max_lambda"], 5);
    assert_eq!(report["global_connectivity"], 4);
}

#[test]
fn verify_accepts_generated_colouring() {
    let dir = workdir("petersen");
    let path = dir.join("petersen.edges");
    let g = locol::fixtures::petersen();
    fs::write(&path, locol::io::write_edge_list(&g)).unwrap();

    let col = run(&["color", path.to_str().unwrap(), "--k", "3"]);
    assert!(
        col.status.success(),
        "{}",
        String::from_utf8_lossy(&col.stderr)
    );
    let col_path = dir.join("petersen.3col");
    fs::write(&col_path, &col.stdout).unwrap();

    let ver = run(&["verify", path.to_str().unwrap(), col_path.to_str().unwrap()]);
    assert_eq!(ver.status.code(), Some(0));

    // break the colouring: make the first two listed vertices equal
    let text = String::from_utf8_lossy(&col.stdout).into_owned();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let first_colour = lines[0].split_whitespace().nth(1).unwrap().to_string();
    let second_label = lines[1].split_whitespace().next().unwrap().to_string();
    lines[1] = format!("{second_label} {first_colour}");
    // vertices 0 and 1 are adjacent in the petersen outer cycle
    fs::write(&col_path, lines.join("\n")).unwrap();
    let bad = run(&["verify", path.to_str().unwrap(), col_path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn morass_certificate_round_trip() {
    let dir = workdir("morass");
    let edges = dir.join("m.edges");
    let cert = dir.join("m.json");
    let gen = bin()
        .args(["gen", "morass", "--rims", "5,5,3", "--seed", "7"])
        .args(["--certificate-out", cert.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(gen.status.success());
    fs::write(&edges, &gen.stdout).unwrap();

    let ok = run(&[
        "morass-verify",
        edges.to_str().unwrap(),
        cert.to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0));

    // damaging the graph invalidates the certificate
    let text = String::from_utf8_lossy(&gen.stdout).into_owned();
    let mut lines: Vec<&str> = text.lines().collect();
    let last = lines.len() - 1;
    lines.remove(last);
    fs::write(&edges, lines.join("\n")).unwrap();
    let bad = run(&[
        "morass-verify",
        edges.to_str().unwrap(),
        cert.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn seeded_generation_is_byte_identical() {
    let a = run(&["gen", "morass", "--rims", "5,7,5", "--seed", "42"]);
    let b = run(&["gen", "morass", "--rims", "5,7,5", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["gen", "morass", "--rims", "5,7,5", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn reduce_and_usage_errors() {
    let dir = workdir("reduce");
    let path = dir.join("w5.edges");
    let g = locol::morass::odd_wheel(5).unwrap();
    fs::write(&path, locol::io::write_edge_list(&g)).unwrap();

    let map = dir.join("map.json");
    let out = bin()
        .args(["reduce", "mlc3", path.to_str().unwrap()])
        .args(["--map-out", map.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let (h, _) = locol::io::parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!(h.n(), 5 + 9 * 5 - 17);
    let map_json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&map).unwrap()).unwrap();
    assert_eq!(map_json["notes"].as_array().unwrap().len(), 1);

    // missing --k is a usage error
    let bad = run(&["reduce", "mleck", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    // unreadable file is an IO error
    let gone = run(&["color", "/nonexistent/x.edges", "--k", "3"]);
    assert_eq!(gone.status.code(), Some(2));
}

#[test]
fn auto_dispatch_routes_by_class() {
    let dir = workdir("auto");
    // grid member: in the k-connected class, handled by the decomposition
    let grid = dir.join("grid.edges");
    fs::write(
        &grid,
        locol::io::write_edge_list(&locol::gadgets::grid_family(5).unwrap()),
    )
    .unwrap();
    let out = run(&["color", grid.to_str().unwrap(), "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));

    // K5 with k = 4: complete-graph obstruction via the same route
    let k5 = dir.join("k5.edges");
    fs::write(&k5, locol::io::write_edge_list(&locol::Graph::complete(5))).unwrap();
    let out = run(&["color", k5.to_str().unwrap(), "--k", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("complete"));

    // a tree is outside the k-connected classes: falls through to fpt
    let tree = dir.join("tree.edges");
    fs::write(&tree, locol::io::write_edge_list(&locol::Graph::path(5))).unwrap();
    let out = run(&["color", tree.to_str().unwrap(), "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn dimacs_input_works() {
    let dir = workdir("dimacs");
    let path = dir.join("c5.col");
    fs::write(&path, locol::io::write_dimacs(&locol::Graph::cycle(5))).unwrap();
    let out = run(&[
        "color",
        path.to_str().unwrap(),
        "--format",
        "dimacs",
        "--k",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
}
