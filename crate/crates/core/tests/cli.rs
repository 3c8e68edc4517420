use std::io::Write;
use std::process::{Command, Output, Stdio};

use distance_antimagic::certificate::{Body, Certificate};
use distance_antimagic::{graph6, Classification};

fn dalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dalab"))
        .args(args)
        .output()
        .unwrap()
}

fn dalab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dalab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn certificate(o: &Output) -> Certificate {
    let c = Certificate::from_json(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    c.recheck().unwrap();
    c
}

fn temp_file(contents: &str) -> tempfile::TempPath {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f.into_temp_path()
}

fn path(p: &tempfile::TempPath) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_outputs_graph6() {
    let o = dalab(&["gen", "cycle", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(o.stdout, b"Cl\n");

    let o = dalab(&["gen", "friendship", "2"]);
    let g = graph6::decode(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!((g.order(), g.size()), (5, 6));

    let o = dalab(&["gen", "multipartite", "2", "3"]);
    let g = graph6::decode(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert_eq!((g.order(), g.size()), (5, 6));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(code(&dalab(&["gen", "sun", "2"])), 2);
    assert_eq!(code(&dalab(&["gen", "hypercube", "3"])), 2);
    assert_eq!(code(&dalab(&["gen", "cycle", "x"])), 2);
}

#[test]
fn label_commands() {
    let o = dalab(&["label", "complete", "4"]);
    assert_eq!(code(&o), 0);
    let c = certificate(&o);
    let Body::ConstructionVerified {
        labeling, profile, ..
    } = &c.body
    else {
        panic!("{}", c.kind())
    };
    assert_eq!(labeling.as_slice(), [1, 2, 3, 4]);
    assert_eq!(
        profile.classification,
        Classification::ArithmeticAntimagic { a: 6, d: 1 }
    );

    let o = dalab(&["label", "fan", "3"]);
    assert_eq!(code(&o), 3);
    let c = certificate(&o);
    assert!(matches!(c.body, Body::TwinObstruction { u: 1, w: 3, .. }));

    let o = dalab(&["label", "sun", "6"]);
    assert_eq!(code(&o), 0);
    let Body::ConstructionVerified { notes, profile, .. } = certificate(&o).body else {
        panic!()
    };
    assert!(profile.classification.is_antimagic());
    assert!(notes.iter().any(|n| n.contains("swapped")), "{notes:?}");

    let o = dalab(&["label", "cycle-ap", "6"]);
    assert_eq!(code(&o), 3);
    assert_eq!(certificate(&o).kind(), "infeasible");

    assert_eq!(code(&dalab(&["label", "prism-ap", "11"])), 4);
    assert_eq!(code(&dalab(&["label", "wheel", "2"])), 2);
}

#[test]
fn verify_labeling_files() {
    let f = temp_file("1 2 4 3\n");
    let o = dalab(&["verify", "cycle:4", path(&f)]);
    assert_eq!(code(&o), 0);
    let Body::LabelingChecked { profile, .. } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(profile.classification, Classification::Magic { k: 5 });

    let f = temp_file("1 2 3 4");
    let o = dalab(&["verify", "C~", path(&f)]);
    let Body::LabelingChecked { profile, .. } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(
        profile.classification,
        Classification::ArithmeticAntimagic { a: 6, d: 1 }
    );

    let o = dalab_stdin(&["verify", "cycle:5", "-", "--D", "0,2"], "1 2 3 4 5");
    let Body::LabelingChecked { profile, .. } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(profile.distances.to_string(), "{0,2}");

    let bad = temp_file("1 1 2 3");
    assert_eq!(code(&dalab(&["verify", "cycle:4", path(&bad)])), 2);
    let short = temp_file("1 2 3");
    assert_eq!(code(&dalab(&["verify", "cycle:4", path(&short)])), 2);
    assert_eq!(code(&dalab(&["verify", "C?", path(&short)])), 2);
}

#[test]
fn search_commands() {
    let o = dalab(&["search", "friendship:2", "--ap", "6", "1"]);
    assert_eq!(code(&o), 0);
    let Body::Found { profile, .. } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(
        profile.classification,
        Classification::ArithmeticAntimagic { a: 6, d: 1 }
    );

    let o = dalab(&["search", "cycle:4", "--antimagic"]);
    assert_eq!(code(&o), 3);
    assert_eq!(certificate(&o).kind(), "exhausted_none");

    let o = dalab(&["search", "wheel:5", "--ap", "1", "--workers", "4"]);
    assert_eq!(code(&o), 0);
    let Body::Found { profile, .. } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(profile.classification.progression().map(|p| p.1), Some(1));

    let o = dalab(&["search", "cycle:4", "--magic", "5"]);
    assert_eq!(code(&o), 0);

    let o = dalab(&[
        "search",
        "sun:5",
        "--ap",
        "any",
        "any",
        "--budget-nodes",
        "10",
    ]);
    assert_eq!(code(&o), 4);
    assert_eq!(certificate(&o).kind(), "budget_exceeded");

    assert_eq!(code(&dalab(&["search", "cycle:4"])), 2);
    assert_eq!(
        code(&dalab(&["search", "cycle:4", "--antimagic", "--magic"])),
        2
    );
}

#[test]
fn feasible_commands() {
    let o = dalab(&["feasible", "3", "8"]);
    let Body::Feasibility { rows } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(rows[0].pairs, [(10, 1)]);

    let o = dalab(&["feasible", "0", "5"]);
    let Body::Feasibility { rows } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(rows[0].pairs, [(0, 0)]);

    let o = dalab(&["feasible", "--prism", "3..10"]);
    let Body::Feasibility { rows } = certificate(&o).body else {
        panic!()
    };
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.pairs.len() == 1 && r.pairs[0].1 == 1));

    assert_eq!(code(&dalab(&["feasible", "5", "5"])), 2);
}

#[test]
fn conjecture_commands() {
    for extra in [
        &[][..],
        &["--all-subsets"][..],
        &["--max-subset-size", "2"][..],
    ] {
        let mut args = vec!["conjecture", "--catalog", "5"];
        args.extend_from_slice(extra);
        let o = dalab(&args);
        assert_eq!(code(&o), 0);
        let Body::ScanReport(r) = certificate(&o).body else {
            panic!()
        };
        assert_eq!(r.graphs, 52);
        assert_eq!(r.totals.counterexample, 0);
    }

    let o = dalab_stdin(&["conjecture", "-"], "Cl\nnot-graph6\nC~\n");
    assert_eq!(code(&o), 0);
    let Body::ScanReport(r) = certificate(&o).body else {
        panic!()
    };
    assert_eq!(r.input_errors.len(), 1);
    assert_eq!(r.graphs, 2);

    let o = dalab_stdin(&["conjecture", "-", "--budget-nodes", "1"], "Dhc\n");
    assert_eq!(code(&o), 4);
}

#[test]
fn output_is_reproducible() {
    let runs = [
        &[
            "conjecture",
            "--catalog",
            "6",
            "--all-subsets",
            "--workers",
            "4",
        ][..],
        &["search", "prism:6", "--ap", "1", "--workers", "3"][..],
        &["label", "wheel", "9"][..],
    ];
    for args in runs {
        let a = dalab(args);
        let b = dalab(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
    // payloads agree across worker counts
    let one = certificate(&dalab(&[
        "conjecture",
        "--catalog",
        "6",
        "--all-subsets",
        "--workers",
        "1",
    ]));
    let many = certificate(&dalab(&[
        "conjecture",
        "--catalog",
        "6",
        "--all-subsets",
        "--workers",
        "6",
    ]));
    assert_eq!(one.body, many.body);
}
