mod support;

use support::{input, report, sovhopf, stdout, CORPUS};
use sovhopf_cli::{build, schema::to_canonical_json, Workbench};

#[test]
fn build_output_matches_golden_bytes() {
    for e in CORPUS {
        let Some(args) = e.build else { continue };
        let out = sovhopf(&[&["build"], args].concat());
        assert_eq!(out.status.code(), Some(0), "{}", e.name);
        let expected = std::fs::read_to_string(input(e.name)).unwrap();
        assert_eq!(stdout(&out), expected, "{}", e.name);
    }
}

#[test]
fn fmt_is_idempotent_on_corpus() {
    for e in CORPUS.iter().filter(|e| e.exit != 3) {
        let path = input(e.name);
        let out = sovhopf(&["fmt", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", e.name);
        assert_eq!(stdout(&out), std::fs::read_to_string(&path).unwrap(), "{}", e.name);
    }
}

#[test]
fn verify_matches_golden_reports_and_exit_codes() {
    for e in CORPUS {
        let path = input(e.name);
        let out = sovhopf(&["verify", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(out.status.code(), Some(e.exit), "{}", e.name);
        if e.exit == 3 {
            assert!(out.stdout.is_empty());
            assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
            continue;
        }
        let expected = std::fs::read_to_string(report(e.name)).unwrap();
        assert_eq!(stdout(&out), expected, "{}", e.name);
    }
}

#[test]
fn summary_counts_equal_tallies() {
    for e in CORPUS.iter().filter(|e| e.exit != 3) {
        let text = std::fs::read_to_string(input(e.name)).unwrap();
        let wb = Workbench::from_json(&text).unwrap();
        let r = wb.verify(wb.policy(None, None)).unwrap();
        let count = |k: &str| r.checks.iter().filter(|c| c.verdict == k).count();
        assert_eq!(r.summary.pass, count("pass"));
        assert_eq!(r.summary.fail, count("fail"));
        assert_eq!(r.summary.inconclusive, count("inconclusive"));
        assert_eq!(r.exit_code, e.exit, "{}", e.name);
        if r.summary.fail == 0 && r.summary.inconclusive == 0 {
            assert_eq!(r.exit_code, 0);
        }
    }
}

#[test]
fn sweedler_with_counit_fails_verify_sovereign() {
    let out = sovhopf(&["verify", input("neg_sweedler_eps").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failing: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert!(failing.iter().any(|l| l.contains("verify_sovereign[eps]")), "{text}");
}

#[test]
fn text_report_is_deterministic() {
    let p = input("sweedler");
    let a = stdout(&sovhopf(&["verify", p.to_str().unwrap()]));
    let b = stdout(&sovhopf(&["verify", p.to_str().unwrap()]));
    assert_eq!(a, b);
    assert!(a.ends_with("summary: 20 pass, 0 fail, 0 inconclusive\n"));
}

#[test]
fn dims_command() {
    let dims = |name: &str, corep: &str, ch: &str| {
        let o = sovhopf(&["dims", input(name).to_str().unwrap(), "--corep", corep, "--char", ch]);
        (o.status.code(), stdout(&o))
    };
    assert_eq!(dims("hf_diag_1_q", "u", "Phi_F"), (Some(0), "left: q+1, right: (q+1)/q\n".into()));
    assert_eq!(dims("sweedler_finite", "regular", "Phi"), (Some(0), "left: 0, right: 0\n".into()));
    assert_eq!(dims("sweedler_finite", "trivial", "Phi"), (Some(0), "left: 1, right: 1\n".into()));
    assert_eq!(dims("hf_diag_1_q", "trivial", "Phi_F"), (Some(0), "left: 1, right: 1\n".into()));
    assert_eq!(dims("neg_sweedler_eps", "regular", "eps").0, Some(1));
    assert_eq!(dims("hf_diag_1_q", "w", "Phi_F").0, Some(3));
    assert_eq!(dims("hf_diag_1_q", "u", "Psi").0, Some(3));
}

#[test]
fn singular_matrix_is_an_input_error() {
    let o = sovhopf(&["build", "hf", "--matrix", "1,1;1,1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).to_lowercase().contains("singular"));
    assert!(matches!(build::hf("1,2;2,4", None), Err(e) if e.exit_code() == 3));
}

#[test]
fn eq2_has_two_nonzero_entries() {
    let input = build::eq(2, "q", None).unwrap();
    assert_eq!(input.sle_tensor.unwrap().entries.len(), 2);
}

#[test]
fn field_is_inferred_from_entries() {
    assert_eq!(build::hf("2,0;0,1/3", None).unwrap().field, "Q");
    assert_eq!(build::hf("1,0;0,q", None).unwrap().field, "Q(q)");
    assert_eq!(build::hf("1,0;0,t", Some("Q(t)")).unwrap().field, "Q(t)");
}

#[test]
fn low_fixed_degree_is_inconclusive() {
    let p = input("hf_diag_1_q");
    let o = sovhopf(&["verify", p.to_str().unwrap(), "--degree", "1", "--cap", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}

#[test]
fn usage_errors_exit_three_and_help_exits_zero() {
    assert_eq!(sovhopf(&["--help"]).status.code(), Some(0));
    assert_eq!(sovhopf(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(sovhopf(&["build", "hf"]).status.code(), Some(3));
    assert_eq!(sovhopf(&["verify", "/nonexistent.json"]).status.code(), Some(3));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.json");
    let o = sovhopf(&["build", "cyclic", "--n", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(input("z2")).unwrap());
}

#[test]
fn canonical_json_round_trips_through_the_library() {
    for e in CORPUS.iter().filter(|e| e.exit != 3) {
        let text = std::fs::read_to_string(input(e.name)).unwrap();
        let wb = Workbench::from_json(&text).unwrap();
        assert_eq!(wb.canonical_json(), text, "{}", e.name);
        assert_eq!(to_canonical_json(&wb.input), text, "{}", e.name);
    }
}
