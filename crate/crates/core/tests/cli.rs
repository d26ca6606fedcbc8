use extpark::cli::{dispatch, EXIT_ASSERTION, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    dispatch(std::iter::once("extpark").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, EXIT_OK, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn char_vector_json() {
    let v = json(&["char", "--n", "6", "--c", "3", "--json"]);
    let map = v.as_object().unwrap();
    assert_eq!(map.len(), 11);
    assert_eq!(map["3+3"], "9");
    assert_eq!(map["1+1+1+1+1+1"], "1296");
    assert_eq!(map.keys().next().unwrap(), "6");
}

#[test]
fn char_single_and_oracle() {
    assert_eq!(run(&["char", "--n", "6", "--c", "3", "--lambda", "3,3"]), (EXIT_OK, "9\n".into()));
    let v = json(&["char", "--n", "4", "--c", "2", "--oracle", "--json"]);
    assert_eq!(v["agrees"], true);
    let v = json(&["char", "--a", "3", "--b", "4", "--lambda", "2,1,1", "--oracle", "--json"]);
    assert_eq!(v["value"], "4");
    assert_eq!(v["oracle"], "4");
}

#[test]
fn orbits() {
    assert_eq!(run(&["orbits", "--n", "9", "--c", "1"]), (EXIT_OK, "300\n".into()));
    let v = json(&["orbits", "--n", "3", "--c", "3", "--oracle", "--list", "--json"]);
    assert_eq!(v["formula_count"], "2");
    assert_eq!(v["oracle_count"], "2");
    assert_eq!(v["orbits"].as_array().unwrap().len(), 2);
    let v = json(&["orbits", "--n", "6", "--c", "2", "--oracle", "--json"]);
    assert_eq!(v["formula_count"], v["oracle_count"]);
    let v = json(&["orbits-rational", "--a", "5", "--b", "3", "--oracle", "--json"]);
    assert_eq!(v["formula_count"], v["oracle_count"]);
}

#[test]
fn frob_bases() {
    let v = json(&["frob", "--n", "3", "--c", "1", "--basis", "p", "--json"]);
    assert_eq!(v["basis"], "p");
    assert_eq!(v["coeffs"]["2+1"], "1/2");
    let v = json(&["frob", "--n", "3", "--c", "3", "--basis", "s", "--json"]);
    assert_eq!(v["coeffs"]["3"], "2");
    assert_eq!(v["coeffs"]["1+1+1"], "1");
    let v = json(&["frob", "--n", "3", "--c", "3", "--basis", "h", "--json"]);
    assert_eq!(v["coeffs"]["2+1"], "-2");
    assert_eq!(v["h_positive"], false);
    let v = json(&["frob", "--n", "5", "--c", "1", "--basis", "h", "--json"]);
    assert_eq!(v["h_positive"], true);
}

#[test]
fn classify_json() {
    let v = json(&["classify", "--n", "12", "--json"]);
    assert_eq!(v["count"], 4);
    assert_eq!(v["classes"]["1"], serde_json::json!([1, 5, 7, 11]));
    assert_eq!(v["classes"]["6"], serde_json::json!([6, 12]));
}

#[test]
fn act_and_enumerate() {
    assert_eq!(run(&["act", "--n", "4", "--c", "3", "--perm", "1432", "--input", "0003"]), (EXIT_OK, "1011\n".into()));
    assert_eq!(run(&["act", "--n", "3", "--c", "2", "--perm", "213", "--input", "011"]), (EXIT_OK, "101\n".into()));
    let (code, out) = run(&["enumerate", "--n", "3", "--c", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 3);
    let v = json(&["enumerate", "--n", "4", "--json"]);
    assert_eq!(v["count"], 125);
    let v = json(&["enumerate", "--a", "3", "--b", "2", "--json"]);
    assert_eq!(v["count"], 4);
}

#[test]
fn slim() {
    assert_eq!(run(&["slim", "--n", "4", "dim"]), (EXIT_OK, "16\n".into()));
    let v = json(&["slim", "--n", "3", "char", "--json"]);
    assert_eq!(v["traces"]["2+1"], "1");
    assert_eq!(v["traces"]["3"], "0");
    let v = json(&["slim", "--n", "4", "verify-conjecture", "--json"]);
    assert_eq!(v["pass"], true);
    let v = json(&["slim", "--n", "3", "verify-table", "--json"]);
    assert_eq!(v["equivariant"], true);
    assert_eq!(run(&["slim", "--n", "6", "dim"]).0, EXIT_INVALID);
}

#[test]
fn selftest() {
    let (code, out) = run(&["selftest", "--max-n", "5"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).0, EXIT_INVALID);
    assert_eq!(run(&["char", "--n", "3", "--c", "7"]).0, EXIT_INVALID);
    assert_eq!(run(&["act", "--n", "4", "--c", "3", "--perm", "1432", "--input", "0001"]).0, EXIT_INVALID);
    assert_eq!(run(&["orbits-rational", "--a", "2", "--b", "4"]).0, EXIT_INVALID);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
    // exit code 2 is reserved for failed internal checks
    assert_ne!(EXIT_ASSERTION, EXIT_MISMATCH);
}

#[test]
fn output_is_deterministic() {
    let args = ["frob", "--n", "6", "--c", "3", "--basis", "s", "--json"];
    assert_eq!(run(&args), run(&args));
}
