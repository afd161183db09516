use std::process::{Command, Output};

fn negmom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negmom")).args(args).env("NEGMOM_THREADS", "2").output().expect("runs")
}

/// Stdout without the wall-time footer.
fn body(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n")
}

#[test]
fn bounded_dyck_counts() {
    let out = negmom(&["moment", "--n", "0..6", "--k", "3", "--b", "zero", "--lambda", "one"]);
    assert!(out.status.success());
    assert_eq!(body(&out), "1,0,1,0,2,0,5");
}

#[test]
fn negative_dyck_moments() {
    let out = negmom(&["moment", "--negative", "--n", "1..3", "--k", "3", "--b", "zero", "--lambda", "one"]);
    assert!(out.status.success());
    assert_eq!(body(&out), "0,2,0");
}

#[test]
fn zeroth_symbolic_moment() {
    let out = negmom(&["moment", "--n", "0", "--k", "0", "--b", "symbolic", "--lambda", "symbolic"]);
    assert_eq!(body(&out), "1");
}

#[test]
fn ill_defined_negative_request() {
    let out = negmom(&["moment", "--negative", "--n", "1..3", "--k", "2", "--b", "zero", "--lambda", "one"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("P_3(0) = 0"), "{err}");
}

#[test]
fn verify_ck_grid() {
    let out = negmom(&["verify", "ck", "--n", "1..5", "--k", "1..5"]);
    assert!(out.status.success());
    let text = body(&out);
    let pass = text.lines().filter(|l| l.starts_with("ck ") && l.ends_with("status=PASS")).count();
    assert_eq!(pass, 25);
    assert!(text.lines().next().unwrap().starts_with("ck params=n=1,k=1 "));
}

#[test]
fn verify_conj53_skips_by_hypothesis() {
    let out = negmom(&["verify", "conj53", "--n", "1..3", "--k", "1..3", "--m", "1..3"]);
    assert!(out.status.success());
    for line in body(&out).lines().filter(|l| l.starts_with("conj53")) {
        let get = |key: &str| -> u32 {
            let p = line.split(' ').nth(1).unwrap().trim_start_matches("params=");
            p.split(',').find_map(|kv| kv.strip_prefix(&format!("{key}="))).unwrap().parse().unwrap()
        };
        let skip = (get("k") + get("m")) % 3 == 2;
        assert_eq!(line.contains("status=SKIPPED"), skip, "{line}");
        assert_eq!(line.contains("status=PASS"), !skip, "{line}");
    }
}

#[test]
fn verify_rpp_json() {
    let out = negmom(&["verify", "rpp", "--n", "1", "--m", "1", "--k", "1", "--mode", "q", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "verify");
    assert_eq!(v["params"]["identity"], "rpp");
    let r = &v["results"][0];
    assert_eq!(r["status"], "PASS");
    assert_eq!(r["lhs"], "q^3 + q^2 + 2*q + 1");
    assert_eq!(r["params"]["n"], 1);
}

#[test]
fn unknown_identity_is_usage_error() {
    let out = negmom(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_spec_expression_is_usage_error() {
    let out = negmom(&["moment", "--n", "1", "--k", "1", "--b", "two"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sequence_examples() {
    let alt = negmom(&["sequence", "alt", "--n", "3", "--k", "2", "--emit", "count"]);
    assert_eq!(body(&alt), "5");
    let sch = negmom(&["sequence", "schroeder", "--n", "4", "--k", "1", "--emit", "count"]);
    assert_eq!(body(&sch), "5");
    let pv = negmom(&["sequence", "pv", "--ell", "2", "--n", "3", "--k", "1", "--emit", "list"]);
    assert_eq!(body(&pv), "(1,0,1)");
}

#[test]
fn sequence_weights_csv() {
    let out = negmom(&["sequence", "motzkin", "--n", "2", "--k", "1", "--emit", "weights", "--format", "csv"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "object,weight\nHH,b0^2\nUD,lam1\n");
}

#[test]
fn rpp_count_matches_weights_at_one() {
    let count = negmom(&["sequence", "rpp", "--n", "1", "--m", "1", "--k", "1"]);
    let list = negmom(&["sequence", "rpp", "--n", "1", "--m", "1", "--k", "1", "--emit", "list"]);
    assert_eq!(body(&count).parse::<usize>().unwrap(), body(&list).lines().count());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "pv3-rs", "--n", "1..3", "--k", "1..2", "--format", "json"];
    let a = negmom(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_negmom")).args(args).env("NEGMOM_THREADS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn list_names_every_required_identity() {
    let out = body(&negmom(&["list"]));
    for name in [
        "ck",
        "ck-rs",
        "thm15",
        "main",
        "conj50",
        "conj53",
        "thm34",
        "rpp",
        "pv2",
        "pv3a",
        "pv3b",
        "pv3-rs",
        "usmani",
        "vv-inv",
        "sigma",
        "alt-cf",
        "special-dets",
        "connection1",
        "connection2",
    ] {
        assert!(out.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}
