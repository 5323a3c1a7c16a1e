use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("translim").chain(args.iter().copied());
    let code = translim_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, _) = run(&full);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn schemas_three() {
    let (code, out, _) = run(&["schemas", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[8], "count = 8 = 2^3");
    assert!(lines[0].starts_with("[3] "));
    assert!(lines[7].starts_with("[0, 1, 2, 3] "));
}

#[test]
fn schemas_reject_infinite_target() {
    let (code, _, err) = run(&["schemas", "w"]);
    assert_eq!(code, 2);
    assert!(err.contains("finite"));
}

#[test]
fn map_apply_table_row() {
    let (code, out, _) = run(&["map", "apply", "--from", "3", "--to", "2", "(0, 4, 2, 5, 3, 9)"]);
    assert_eq!((code, out.as_str()), (0, "(0, 4, 2, 5)\n"));
}

#[test]
fn map_apply_errors() {
    // not a member of X_3
    let (code, _, err) = run(&["map", "apply", "--from", "3", "--to", "2", "(0, 4, 2, 5)"]);
    assert_eq!(code, 1);
    assert!(err.contains("not in X_"));
    // upward map
    let (code, _, _) = run(&["map", "apply", "--from", "2", "--to", "3", "(0, 4, 2, 5)"]);
    assert_eq!(code, 1);
    // unparsable point
    let (code, _, _) = run(&["map", "apply", "--from", "3", "--to", "2", "(0, 4, 2, 5, 3"]);
    assert_eq!(code, 2);
}

#[test]
fn map_section_default_and_explicit_witness() {
    let (code, out, _) = run(&["map", "section", "--from", "2", "--to", "w", "(2, 9)"]);
    assert_eq!((code, out.as_str()), (0, "(2, 9, w, w + 1)\n"));
    let (code, out, _) = run(&["map", "section", "--from", "3", "--to", "5", "--gamma", "6", "(0, 4, 3, 9)"]);
    assert_eq!((code, out.as_str()), (0, "(0, 4, 3, 9, 5, 6)\n"));
    let (code, _, _) = run(&["map", "section", "--from", "3", "--to", "5", "--gamma", "5", "(0, 4, 3, 9)"]);
    assert_eq!(code, 1);
}

#[test]
fn ord_subcommands() {
    assert_eq!(run(&["ord", "compare", "w*2", "w + 5"]).1, "GT\n");
    assert_eq!(run(&["ord", "compare", "1 + w", "w"]).1, "EQ\n");
    assert_eq!(run(&["ord", "eval", "w + w^2"]).1, "w^2\n");
    assert_eq!(run(&["ord", "add", "w", "w"]).1, "w*2\n");
    assert_eq!(run(&["ord", "mul", "2", "w"]).1, "w\n");
    assert_eq!(run(&["ord", "mul", "w", "w"]).1, "w^2\n");
    let (code, _, err) = run(&["ord", "eval", "w*0"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 2"));
}

#[test]
fn point_subcommands() {
    let (code, out, _) = run(&["point", "validate", "(0, w)"]);
    assert_eq!(code, 0);
    assert!(out.contains("X_0"));
    let (code, out, _) = run(&["point", "validate", "(0, 2, 1, 1)"]);
    assert_eq!(code, 1);
    assert!(out.contains("α_3 < α_4"));
    let (code, out, _) = run(&["point", "info", "(0, 4, 1, 5, 2, 6)"]);
    assert_eq!(code, 0);
    assert!(out.contains("index  = 2") && out.contains("order  = 6") && out.contains("length = 3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["ord", "compare", "w"]).0, 2);
    assert_eq!(run(&["laws", "--bogus"]).0, 2);
    assert_eq!(run(&["oracle", "--pool", "5..2"]).0, 2);
    assert_eq!(run(&["demo", "thread", "--n", "0"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("schemas"));
}

#[test]
fn json_outputs() {
    let (code, v) = json(&["ord", "compare", "w*2", "w + 5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], "GT");

    let (_, v) = json(&["schemas", "2"]);
    assert_eq!(v["count"], 4);
    assert_eq!(v["schemas"][3]["chain"], serde_json::json!(["0", "1", "2"]));

    let (code, v) = json(&["oracle", "--pool", "0..4"]);
    assert_eq!(code, 0);
    let checks = v["report"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["failures"] == 0 && c["first_counterexample"].is_null()));

    let (code, v) = json(&["point", "validate", "(1, 5, 0, 7)"]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], false);

    let (code, v) = json(&["ord", "eval", "w +"]);
    assert_eq!(code, 2);
    assert_eq!(v["ok"], false);
}

#[test]
fn demos() {
    let (code, out, _) = run(&["demo", "f32"]);
    assert_eq!(code, 0);
    assert!(out.contains("(2, 4, 3, 5) ↦ (2, 4)"));
    assert!(out.contains("(0, 4, 1, 5, 2, 6, 3, 7) ↦ (0, 4, 1, 5, 2, 6)"));
    assert!(out.contains("8/8 rows verified"));

    let (code, out, _) = run(&["demo", "f32", "--transfinite"]);
    assert_eq!(code, 0);
    assert!(out.contains("(3, w) ↦ (2, w)"));

    let (code, out, _) = run(&["demo", "composition"]);
    assert_eq!(code, 0);
    assert!(out.contains("f^4_3 ∘ f^6_4 = f^6_3: ok"));

    let (code, v) = json(&["demo", "thread", "--n", "3", "--seed", "4"]);
    assert_eq!(code, 0);
    let lengths: Vec<u64> = v["profile"].as_array().unwrap().iter().map(|r| r["length"].as_u64().unwrap()).collect();
    assert_eq!(lengths, [1, 2, 3, 4]);

    let (_, v) = json(&["demo", "thread", "--n", "1"]);
    assert_eq!(v["profile"].as_array().unwrap().len(), 2);
}

#[test]
fn laws_custom_pool() {
    let (code, out, _) = run(&["laws", "--samples", "300", "--seed", "5", "--pool", "0..6"]);
    assert_eq!(code, 0);
    assert!(out.contains("result: PASS"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["laws", "--samples", "200", "--seed", "9"][..],
        &["demo", "thread", "--n", "12", "--seed", "3"],
        &["oracle", "--pool", "0, 1, w, w*2"],
    ] {
        assert_eq!(run(args), run(args));
    }
}
