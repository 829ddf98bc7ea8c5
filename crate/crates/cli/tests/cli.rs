use std::process::{Command, Output};

fn mfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mfs")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = mfs(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn product_small_expansion() {
    assert_eq!(stdout(&["product", "-l", "4", "-k", "3", "2,1", "2"]), "1 * 2,2,1\n1 * 3,1,1\n1 * 3,2\n");
}

#[test]
fn product_with_a_coefficient_two() {
    let out = stdout(&["product", "-l", "6", "-k", "6", "4,4,2,2", "3,3,3"]);
    assert!(out.lines().any(|l| l == "2 * 6,5,4,3,2,1"));
}

#[test]
fn product_zero_and_json() {
    assert_eq!(stdout(&["product", "-l", "1", "-k", "5", "3", "3"]), "");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["product", "--rows", "4", "--cols", "3", "2,1", "2", "--json"])).unwrap();
    assert_eq!(v["frame"], serde_json::json!([4, 3]));
    assert_eq!(v["terms"][0], serde_json::json!({"nu": [2, 2, 1], "coeff": 1}));
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_input_exits_nonzero() {
    for args in [
        &["product", "-l", "2", "-k", "2", "3", "1"][..],
        &["product", "-l", "2", "-k", "2", "1,2", "1"],
        &["product", "-l", "2", "-k", "2", "x", "1"],
        &["classify", "-l", "2", "-k", "2", "1,1,1", "0"],
    ] {
        let out = mfs(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn classify_examples() {
    let out = stdout(&["classify", "-l", "6", "-k", "6", "4,4,2,2,2", "3,3,3"]);
    assert!(out.ends_with("multiplicity_free (reason III)\n"), "{out}");

    let out = stdout(&["classify", "-l", "5", "-k", "5", "4,3,2,1", "4,4,2,2,1"]);
    assert!(out.contains("demolished: ((1), (1), 2x2)"), "{out}");
    assert!(out.contains("multiplicity_free"));

    let out = stdout(&["classify", "-l", "6", "-k", "5", "4,3,2,1", "4,4,2,2,1"]);
    assert!(out.contains("has_multiplicity"), "{out}");
}

#[test]
fn classify_verbose_and_json() {
    let out = stdout(&["classify", "-v", "-l", "7", "-k", "9", "6,5,4,3,2,1,1", "7,6,6,6,5,2"]);
    assert!(out.contains("full columns: 1,4,5\nfull rows: 3,4\n"), "{out}");
    assert!(out.contains("demolished: ((3,2,1), (5,4,4,2), 5x6)"), "{out}");

    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["classify", "--json", "-l", "6", "-k", "6", "4,4,2,2,2", "3,3,3"])).unwrap();
    assert_eq!(v["outcome"], "multiplicity_free");
    assert_eq!(v["reason"], "III");
    assert_eq!(v["case"], serde_json::Value::Null);

    let v: serde_json::Value = serde_json::from_str(&stdout(&["classify", "--json", "-l", "1", "-k", "5", "3", "3"])).unwrap();
    assert_eq!(v["outcome"], "zero_product");
}

#[test]
fn witness_examples() {
    let out = stdout(&["witness", "-l", "6", "-k", "6", "4,4,2,2", "3,3,3"]);
    assert!(out.starts_with("nu = ("), "{out}");
    assert!(out.contains("filling 1:") && out.contains("filling 2:"));

    assert_eq!(stdout(&["witness", "-l", "5", "-k", "6", "2,2", "3,3"]), "none\n");
    assert_eq!(stdout(&["witness", "--json", "-l", "5", "-k", "6", "2,2", "3,3"]), "null\n");
}

#[test]
fn constructed_hook_witness() {
    let args = ["witness", "--construct", "--json", "-l", "11", "-k", "13", "11,11,11,7,7,4,4,2,2", "12,1^9"];
    let v: serde_json::Value = serde_json::from_str(&stdout(&args)).unwrap();
    assert_eq!(v["nu"], serde_json::json!([13, 12, 12, 11, 8, 7, 5, 5, 3, 3, 1]));
    assert_eq!(v["fillings"].as_array().unwrap().len(), 2);
    assert_ne!(v["fillings"][0], v["fillings"][1]);
    let text = stdout(&args[..2].iter().chain(&args[3..]).copied().collect::<Vec<_>>());
    assert!(text.contains("steps:\n  hook construction"), "{text}");
}

#[test]
fn verify_sweeps_cleanly() {
    let out = stdout(&["verify", "--max-l", "1", "--max-k", "1"]);
    assert!(out.contains("pairs: 3\n") && out.contains("mismatches: 0\n"), "{out}");

    let out = stdout(&["verify", "--max-l", "4", "--max-k", "4"]);
    assert!(out.contains("mismatches: 0\n"), "{out}");
}

#[test]
fn verify_output_is_independent_of_jobs() {
    let one = stdout(&["verify", "--max-l", "4", "--max-k", "3", "--jobs", "1"]);
    let many = stdout(&["verify", "--max-l", "4", "--max-k", "3", "--jobs", "7"]);
    assert_eq!(one, many);
    let json = stdout(&["verify", "--max-l", "3", "--max-k", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert_eq!(v["frames"], 9);
}

#[test]
fn verify_rejects_zero_bounds() {
    assert!(!mfs(&["verify", "--max-l", "0", "--max-k", "3"]).status.success());
}

#[test]
fn enumerate_mf_lists_every_pair_in_2x2() {
    let out = stdout(&["enumerate-mf", "-l", "2", "-k", "2"]);
    // Six partitions fit in 2x2; all non-overlapping products there are multiplicity-free.
    let parts = ["0", "1", "1,1", "2", "2,1", "2,2"];
    let mut expected = 0;
    for a in parts {
        for b in parts {
            let classified = stdout(&["classify", "-l", "2", "-k", "2", a, b]);
            if !classified.contains("zero_product") {
                expected += 1;
                assert!(out.lines().any(|l| l == format!("{a}\t{b}")), "{a} {b}");
            }
        }
    }
    assert_eq!(out.lines().count(), expected);
    let mut sorted: Vec<&str> = out.lines().collect();
    sorted.sort();
    assert_eq!(sorted, out.lines().collect::<Vec<_>>());
}

#[test]
fn enumerate_mf_in_6x6() {
    let out = stdout(&["enumerate-mf", "-l", "6", "-k", "6"]);
    assert!(out.lines().any(|l| l == "4,4,2,2,2\t3,3,3"));
    assert!(!out.lines().any(|l| l == "4,4,2,2\t3,3,3"));
    let basic = stdout(&["enumerate-mf", "-l", "6", "-k", "6", "--basic-only"]);
    assert!(basic.lines().count() < out.lines().count());
    assert!(basic.lines().all(|l| out.lines().any(|m| m == l)));
}

#[test]
fn demolish_examples() {
    let out = stdout(&["demolish", "-l", "7", "-k", "9", "6,5,4,3,2,1,1", "7,6,6,6,5,2"]);
    assert!(out.contains("full columns: 1,4,5\nfull rows: 3,4\n"), "{out}");
    assert!(out.contains("basic demolition: ((3,2,1), (5,4,4,2), 5x6)"), "{out}");

    let out = stdout(&["demolish", "-l", "5", "-k", "8", "6,6,4,2", "4,3,2,2"]);
    assert!(out.contains("stembridge columns: 1,2,3,4,7,8\nstembridge rows: 1,5\n"), "{out}");

    let out = stdout(&["demolish", "-l", "2", "-k", "3", "", ""]);
    assert!(out.contains("full columns: -\nfull rows: -\n"), "{out}");
    assert!(out.contains("basic demolition: ((0), (0), 2x3)"), "{out}");

    let v: serde_json::Value = serde_json::from_str(&stdout(&["demolish", "--json", "-l", "2", "-k", "3", "", ""])).unwrap();
    assert_eq!(v["basic_demolition"], v["quadruple"]);
}
