use std::path::Path;
use std::process::{Command, Output};

fn etakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etakit")).args(args).env_remove("ETAKIT_CONFIG").output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = etakit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap()
}

fn fails(args: &[&str], code: i32) -> String {
    let out = etakit(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    String::from_utf8(out.stderr).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn documented_examples() {
    // Against r4 - r0 the value is +1; -1 (against r0 - r4) agrees with it in R/2Z.
    assert_eq!(ok(&["eta", "cyclic", "--l", "8", "--a", "1,1", "--rho", "r4-r0"]), "1 (order 2 mod 2Z)\n");
    assert_eq!(ok(&["eta", "cyclic", "--l", "8", "--a", "1,1", "--rho", "r0-r4"]), "-1 (order 2 mod 2Z)\n");
    assert_eq!(ok(&["eta", "cyclic", "--l", "8", "--a", "1,1,1,1", "--rho", "r0-r4"]), "3/2 (order 2 mod Z)\n");
    assert_eq!(ok(&["eta", "bundle", "--l", "8", "--a", "1,1", "--chern", "2,0", "--rho", "r0-r1"]), "-7/8 (order 8 mod Z)\n");
    assert_eq!(ok(&["eta", "quaternion", "--k", "0", "--rho", "2-tau"]), "7/8 (order 8 mod Z)\n");
    assert_eq!(ok(&["nf", "--algebra", "sd", "--expr", "y*u^3"]), "y^3*u*P\n");
    assert_eq!(ok(&["order", "--value", "-17/4"]), "4\n");
    assert_eq!(ok(&["span", "--matrix", "1/2,1/4;0,1/8"]), "determinant 1/16\norder lower bound 2^4\n");
    assert_eq!(ok(&["restrict", "--group", "SD16", "--sub", "Q8", "--images", "s^2,t*s", "--rho", "2-rho"]), "2*r0 - tau\n");
    assert_eq!(ok(&["push", "--hom", "sd-m:4", "--p-image", "Z^2 + Z*tau^2", "--monomial", "tau^2*Z^3"]), "y*u*P\n");
    let wu = ok(&["wu", "--algebra", "m:4:nonspin"]);
    assert!(wu.contains("w1 = tau\n") && wu.contains("w2 = 0\n"), "{wu}");
}

#[test]
fn float_line() {
    let out = ok(&["eta", "quaternion", "--k", "0", "--rho", "2-tau", "--float"]);
    assert_eq!(out, "7/8 (order 8 mod Z)\nfloat 0.875000000000\n");
}

#[test]
fn json_matches_text() {
    let v = json(&["eta", "bundle", "--l", "8", "--a", "1,1,1,1,1,1", "--chern", "2,0,0,0,0,0", "--rho", "2*r0-r1-r3"]);
    let text = ok(&["eta", "bundle", "--l", "8", "--a", "1,1,1,1,1,1", "--chern", "2,0,0,0,0,0", "--rho", "2*r0-r1-r3"]);
    assert_eq!(text, format!("{} (order {} mod {})\n", v["value"].as_str().unwrap(), v["order"].as_str().unwrap(), v["modulus"].as_str().unwrap()));
    assert_eq!(v["value"], "-17/4");
    assert_eq!(v["order"], "4");
    assert_eq!(v["dimension"], 13);

    let span = json(&["span", "--matrix", "1/2,1/4;0,1/8"]);
    assert_eq!(span["determinant"], "1/16");
    assert_eq!(span["order_lower_bound"], "16");

    let basis = json(&["basis", "--algebra", "sd", "--degree", "3"]);
    assert_eq!(basis["basis"], serde_json::json!(["u", "y^3"]));
    assert_eq!(ok(&["basis", "--algebra", "sd", "--degree", "3"]), "dimension 2: u, y^3\n");

    let nf = json(&["nf", "--algebra", "sd", "--expr", "y*u^3"]);
    assert_eq!(nf["normal_form"], "y^3*u*P");

    let claims = json(&["verify", "--suite", "q8", "--q8-m-max", "1"]);
    let claims = claims.as_array().unwrap();
    let text = ok(&["verify", "--suite", "q8", "--q8-m-max", "1"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), claims.len());
    for c in claims {
        assert_eq!(c["status"], "pass");
        assert!(text.contains(&format!("PASS {} ", c["id"].as_str().unwrap())));
    }
}

#[test]
fn runs_are_byte_identical() {
    for args in [
        &["verify", "--suite", "all", "--q8-m-max", "2", "--sd16-m-max", "1", "--homology-n-max", "16"][..],
        &["--format", "json", "verify", "--suite", "sd16-odd,two-column", "--sd16-m-max", "1", "--homology-n-max", "20"],
        &["table", "--up-to", "24"],
    ] {
        let a = etakit(args);
        let b = etakit(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    // computation errors: 1, named
    let err = fails(&["eta", "cyclic", "--l", "8", "--a", "2,1", "--rho", "r4-r0"], 1);
    assert!(err.starts_with("error: NotFree:"), "{err}");
    // a failing claim: 1
    fails(&["verify", "--suite", "q8", "--q8-m-max", "9"], 1);
    // usage errors: 2, naming the flag
    let err = fails(&["order", "--value", "abc"], 2);
    assert!(err.contains("'--value'"), "{err}");
    let err = fails(&["nf", "--algebra", "nope", "--expr", "x"], 2);
    assert!(err.contains("'--algebra'"), "{err}");
    let err = fails(&["verify", "--suite", "bogus"], 2);
    assert!(err.contains("'--suite'"), "{err}");
    let err = fails(&["eta", "cyclic", "--l", "8", "--rho", "r0"], 2);
    assert!(err.contains("--a"), "{err}");
}

#[test]
fn config_files() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.json", "");
    assert_eq!(ok(&["--config", &empty, "nf", "--algebra", "sd", "--expr", "y*u^3"]), "y^3*u*P\n");

    let custom = write(
        dir.path(),
        "custom.json",
        r#"{"algebras": [{"name": "trunc", "generators": [{"name": "a", "degree": 1}], "relations": ["a^3"]}]}"#,
    );
    assert_eq!(ok(&["--config", &custom, "nf", "--algebra", "custom:trunc", "--expr", "a^2 + a^4 + a*a"]), "0\n");
    assert_eq!(ok(&["--config", &custom, "basis", "--algebra", "custom:trunc", "--degree", "2"]), "dimension 1: a^2\n");

    let out = Command::new(env!("CARGO_BIN_EXE_etakit"))
        .args(["basis", "--algebra", "custom:trunc", "--degree", "2"])
        .env("ETAKIT_CONFIG", &custom)
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "dimension 1: a^2\n");

    let bad_relation = write(
        dir.path(),
        "bad.json",
        r#"{"algebras": [{"name": "x", "generators": [{"name": "a", "degree": 1}], "relations": ["a^^2"]}]}"#,
    );
    let err = fails(&["--config", &bad_relation, "nf", "--algebra", "sd", "--expr", "y"], 2);
    assert!(err.contains("ParseError") && err.contains("position 2"), "{err}");

    let bad_json = write(dir.path(), "bad2.json", "{\n  \"degree_bound\": ,\n}");
    let err = fails(&["--config", &bad_json, "nf", "--algebra", "sd", "--expr", "y"], 2);
    assert!(err.contains("ParseError at line 2"), "{err}");

    let cap = write(dir.path(), "cap.json", r#"{"root_order_cap": 4}"#);
    let err = fails(&["--config", &cap, "eta", "cyclic", "--l", "8", "--a", "1,1", "--rho", "r4-r0"], 2);
    assert!(err.contains("'--l'"), "{err}");
}

const C4_TABLE: &str = r#"{"tables": {"c4": {"group": "C4",
  "classes": [{"name": "[1]", "size": 1}, {"name": "[g]", "size": 1}, {"name": "[g^2]", "size": 1}, {"name": "[g^3]", "size": 1}],
  "irreducibles": [
    {"name": "one", "values": ["1 @ n=4", "1 @ n=4", "1 @ n=4", "1 @ n=4"]},
    {"name": "chi", "values": ["1 @ n=4", "z @ n=4", "-1 @ n=4", "-z @ n=4"]},
    {"name": "sgn", "values": ["1 @ n=4", "-1 @ n=4", "1 @ n=4", "-1 @ n=4"]},
    {"name": "chibar", "values": ["1 @ n=4", "-z @ n=4", "-1 @ n=4", "z @ n=4"]}],
  "inclusions": [{"name": "square", "subgroup": "C2", "generator_images": ["g^2"]}]}}}"#;

#[test]
fn custom_tables_and_named_inclusions() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c4.json", C4_TABLE);
    let r = |images: &str, rho: &str| {
        ok(&["--config", &cfg, "restrict", "--group", "custom:c4", "--sub", "C2", "--images", images, "--rho", rho])
    };
    assert_eq!(r("@square", "chi + sgn"), "r0 + r1\n");
    assert_eq!(r("g^2", "chi"), "r1\n");
    assert_eq!(r("@square", "one"), "r0\n");
    let err = fails(&["--config", &cfg, "restrict", "--group", "custom:c4", "--sub", "C2", "--images", "@cube", "--rho", "chi"], 2);
    assert!(err.contains("'--images'"), "{err}");

    let broken = write(dir.path(), "broken.json", &C4_TABLE.replace("\"[1]\"", "\"1\""));
    let err = fails(&["--config", &broken, "nf", "--algebra", "sd", "--expr", "y"], 2);
    assert!(err.contains("ValidationError"), "{err}");
}
