use std::path::PathBuf;
use std::process::{Command, Output};

use twobridge::golden::VerifySummary;
use twobridge::report::Report;
use twobridge::{KnotSpec, Slope};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twobridge")).args(args).output().unwrap()
}

fn table() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/table6.tsv")
}

fn spec(s: &str) -> KnotSpec {
    s.parse().unwrap()
}

#[test]
fn json_round_trips_and_matches_library() {
    let cases: Vec<(Vec<&str>, Report)> = vec![
        (vec!["info", "K(11,4)"], Report::info(&spec("K(11,4)")).unwrap()),
        (vec!["surfaces", "K(27,10)"], Report::surfaces(&spec("K(27,10)")).unwrap()),
        (vec!["seminorm", "J(4,4)", "3/7"], Report::seminorm(&spec("J(4,4)"), Some(Slope::new(3, 7).unwrap())).unwrap()),
        (vec!["casson", "K(27,10)", "1/2"], Report::casson(&spec("K(27,10)"), Slope::new(1, 2).unwrap()).unwrap()),
        (vec!["exceptional", "K(13,3)"], Report::exceptional(&spec("K(13,3)")).unwrap()),
        (vec!["degrees", "J(3,-4)"], Report::degrees(&spec("J(3,-4)")).unwrap()),
    ];
    for (args, expected) in cases {
        let mut full = vec!["--json"];
        full.extend(&args);
        let out = run(&full);
        assert!(out.status.success(), "{args:?}");
        let parsed: Report = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(parsed, expected, "{args:?}");
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(again.as_bytes(), &out.stdout[..], "{args:?}");
    }
}

#[test]
fn json_has_no_floats() {
    let out = run(&["--json", "casson", "K(15,4)", "3/2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    fn walk(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "{n}"),
            serde_json::Value::Array(a) => a.iter().for_each(walk),
            serde_json::Value::Object(o) => o.values().for_each(walk),
            _ => {}
        }
    }
    walk(&v);
    assert!([1, 2, 4].contains(&v["casson"]["value"]["den"].as_i64().unwrap()));
    assert!(v["knot"]["alpha"].is_i64() && v["surfaces"].is_array() && v["seminorm_terms"].is_array());
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["surfaces", "K(31,12)"],
        vec!["--json", "info", "K(29,8)"],
        vec!["--csv", "verify-table", table().to_str().unwrap()],
        vec!["verify-table", "--discover", table().to_str().unwrap()],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info", "K(4,1)"]).status.code(), Some(1));
    assert_eq!(run(&["info", "K(9,3)"]).status.code(), Some(1));
    assert_eq!(run(&["casson", "K(3,1)", "2/0"]).status.code(), Some(1));
    assert_eq!(run(&["nosuch"]).status.code(), Some(1));
    assert_eq!(run(&["casson", "K(5,2)", "4/1"]).status.code(), Some(3));
    assert_eq!(run(&["casson", "K(5,2)", "4/1", "--force"]).status.code(), Some(0));
    assert_eq!(run(&["nontriviality", "K(3,1)", "1"]).status.code(), Some(3));
    assert_eq!(run(&["casson", "K(3,1)", "1/1"]).status.code(), Some(0));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_values() {
    let out = String::from_utf8(run(&["casson", "K(3,1)", "1/1"]).stdout).unwrap();
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["value", "2"]), "{out}");
    let out = String::from_utf8(run(&["casson", "K(27,10)", "−1/2"]).stdout).unwrap();
    assert!(out.contains("-1/2"), "{out}");
    let out = String::from_utf8(run(&["surfaces", "K(11,4)"]).stdout).unwrap();
    assert_eq!(out.lines().filter(|l| l.starts_with('[')).count(), 4);
}

#[test]
fn csv_surfaces() {
    let out = run(&["--csv", "surfaces", "K(3,1)"]);
    let mut rdr = csv::Reader::from_reader(&out.stdout[..]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][2], "0");
    assert_eq!(&rows[0][3], "0");
    assert_eq!(&rows[1][2], "6");
    assert_eq!(&rows[1][3], "1");
}

#[test]
fn verify_table_rows_and_controls() {
    let out = run(&["--json", "verify-table", table().to_str().unwrap()]);
    let s: VerifySummary = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(s.rows.len(), 26);
    let dir = std::env::temp_dir().join(format!("twobridge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let text = std::fs::read_to_string(table()).unwrap();
    let tampered = text.replace("3_1\t3\t1\t0:0;6:2", "3_1\t3\t1\t0:0;6:4");
    assert_ne!(tampered, text);
    let first_rows: String = tampered.lines().take_while(|l| !l.starts_with("4_1")).map(|l| format!("{l}\n")).collect();
    let p = dir.join("tampered.tsv");
    std::fs::write(&p, first_rows).unwrap();
    let out = run(&["verify-table", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));

    let p = dir.join("empty.tsv");
    std::fs::write(&p, "").unwrap();
    assert_eq!(run(&["verify-table", p.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["verify-table", dir.join("missing.tsv").to_str().unwrap()]).status.code(), Some(1));

    let good: String = text.lines().filter(|l| !l.starts_with("8_8") && !l.starts_with("8_9")).map(|l| format!("{l}\n")).collect();
    let p = dir.join("consistent.tsv");
    std::fs::write(&p, good).unwrap();
    let out = run(&["verify-table", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("23 PASS, 1 KNOWN-MISMATCH, 0 FAIL"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn discover_reproduces_fixture() {
    let out = run(&["--json", "verify-table", "--discover", table().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let d: Vec<twobridge::golden::Discovery> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(d.len(), 26);
    assert_eq!(d.iter().filter(|x| x.exact.len() == 1).count(), 24);
    let near: Vec<&str> = d.iter().filter(|x| x.exact.is_empty()).map(|x| x.name.as_str()).collect();
    assert_eq!(near, ["8_8", "8_9"]);
}
