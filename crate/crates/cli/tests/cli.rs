use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use ucf_cli::{run, Status};
use ucf_core::io::parse_family;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn tmp(name: &str, text: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn ucf(args: &[&str]) -> ucf_cli::CommandResult {
    run(std::iter::once("ucf").chain(args.iter().copied()))
}

fn sets(v: &Value) -> Vec<Vec<String>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| {
            s.as_array()
                .unwrap()
                .iter()
                .map(|l| l.as_str().unwrap().to_string())
                .collect()
        })
        .collect()
}

#[test]
fn e_sets_of_the_seven_element_example() {
    let seven_element = data("seven.fam");
    let r = ucf(&[
        "density",
        "esets",
        &seven_element,
        "--u",
        "a,b",
        "--x",
        "x4,x5",
        "--x",
        "x3",
        "--x",
        "x1 x4",
    ]);
    assert_eq!(r.status, Status::Holds);
    let rows = r.payload["e_sets"].as_array().unwrap();
    let expect: [&[&[&str]]; 3] = [
        &[&[], &["b"], &["a", "b"]],
        &[&["a"], &["b"], &["a", "b"]],
        &[&["a", "b"]],
    ];
    for (row, want) in rows.iter().zip(expect) {
        let want: Vec<Vec<String>> = want
            .iter()
            .map(|s| s.iter().map(|l| l.to_string()).collect())
            .collect();
        assert_eq!(sets(&row["e"]), want);
    }
    assert!(r.human_text.contains("E({x4,x5}) = {∅, {b}, {a b}}"));
}

#[test]
fn triangle_has_a_majority_element() {
    let r = ucf(&["check", "conjecture", &data("triangle.fam")]);
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.payload["witness"], serde_json::json!(["a"]));
    assert_eq!(r.payload["degree"], 3);
    assert!(r.human_text.contains("witness a, degree 3"));
}

#[test]
fn path_min_mu_is_one() {
    let r = ucf(&[
        "--json",
        "density",
        "min-mu",
        &data("path.fam"),
        "--u",
        "a,b",
    ]);
    assert_eq!(r.status, Status::Holds);
    assert_eq!(r.payload["min_mu"], "1/1");
    assert_eq!(
        sets(&r.payload["witness"]),
        vec![vec!["x".to_string(), "y".to_string()]]
    );
    let doc: Value = serde_json::from_str(&r.output()).unwrap();
    assert_eq!(doc["status"], "holds");
    let human = ucf(&["density", "min-mu", &data("path.fam"), "--u", "a,b"]).human_text;
    assert!(human.contains("min μ = 1") && human.contains("{x y}"));
}

#[test]
fn pentagon_values_are_exact() {
    let p = data("pentagon.fam");
    let r = ucf(&["density", "bound", &p, "--u", "v2,v3", "--brute"]);
    assert_eq!(r.payload["bound"], "9/4");
    assert_eq!(r.payload["counted"], "9/4");
    let r = ucf(&["density", "local", &p, "--u", "v0,v1"]);
    assert_eq!(r.payload["rho"], "7/17");
    let r = ucf(&[
        "matching",
        "--l",
        &p,
        "--p",
        &data("chain1.poset"),
        "--all-a",
    ]);
    assert_eq!(r.status, Status::Fails);
}

#[test]
fn failure_payload_family_round_trips() {
    let file = tmp("open.fam", "a\nb\n");
    let r = ucf(&["fam", "check-closed", &file]);
    assert_eq!(r.status, Status::Fails);
    let text = r.payload["family"].as_str().unwrap();
    let original = parse_family("a\nb\n").unwrap();
    assert_eq!(parse_family(text).unwrap(), original);

    let r = ucf(&[
        "matching",
        "--l",
        &data("pentagon.fam"),
        "--p",
        &data("chain1.poset"),
    ]);
    assert_eq!(r.status, Status::Fails);
    let back = parse_family(r.payload["family"].as_str().unwrap()).unwrap();
    assert_eq!(
        back,
        parse_family(&std::fs::read_to_string(data("pentagon.fam")).unwrap()).unwrap()
    );
}

#[test]
fn malformed_file_reports_line() {
    let file = tmp("bad.fam", "a b\nEMPTYSET c\n");
    let r = ucf(&["fam", "stats", &file]);
    assert_eq!(r.status, Status::Error);
    assert!(r.human_text.contains("line 2"), "{}", r.human_text);
}

#[test]
fn scans_do_not_depend_on_thread_count() {
    let one = ucf(&[
        "--threads",
        "1",
        "scan",
        "families",
        "--max-universe",
        "3",
        "--full",
    ]);
    let four = ucf(&[
        "--threads",
        "4",
        "scan",
        "families",
        "--max-universe",
        "3",
        "--full",
    ]);
    assert_eq!(one.status, Status::Holds);
    assert_eq!(one.payload, four.payload);
    let one = ucf(&["--threads", "1", "scan", "graphs", "--max-vertices", "4"]);
    let four = ucf(&["--threads", "4", "scan", "graphs", "--max-vertices", "4"]);
    assert_eq!(one.payload, four.payload);
}

#[test]
fn p_density_of_the_square() {
    let b2 = data("b2.poset");
    let r = ucf(&[
        "pdensity",
        "--lattice",
        &b2,
        "--poset",
        &data("chain1.poset"),
        "--witness",
        "a",
    ]);
    assert_eq!(r.payload["density"], "1/2");
    let r = ucf(&[
        "pdensity",
        "--lattice",
        &b2,
        "--poset",
        &data("chain2.poset"),
        "--witness",
        "a",
    ]);
    assert_eq!(r.payload["density"], "1/3");
    assert_eq!(r.status, Status::Holds);
}

#[test]
fn wojcik_commands() {
    assert_eq!(
        ucf(&["wojcik", "un", "11"]).payload["set"],
        serde_json::json!([2, 3])
    );
    let r = ucf(&["wojcik", "sm", "2"]);
    assert_eq!(r.payload["value"], "1/2");
    assert_eq!(r.status, Status::Holds);
    let r = ucf(&["wojcik", "tn", "6"]);
    assert!(r.payload["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["t"].as_u64() <= x["s_u"].as_u64()));
}

#[test]
fn exit_codes_from_the_binary() {
    let code = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_ucf"))
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(code(&["check", "conjecture", &data("triangle.fam")]), 0);
    assert_eq!(
        code(&[
            "matching",
            "--l",
            &data("pentagon.fam"),
            "--p",
            &data("chain1.poset")
        ]),
        1
    );
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["fam", "stats", "/nonexistent.fam"]), 2);
    assert_eq!(code(&["scan", "graphs", "--max-vertices", "9"]), 3);
}
