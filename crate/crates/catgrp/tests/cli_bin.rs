//! End-to-end smoke test of the installed binary.

use std::process::Command;

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_catgrp"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout).into_owned()
        + &String::from_utf8_lossy(&out.stderr);
    (text, out.status.code().unwrap_or(-1))
}

#[test]
fn verify_and_actor_builtins() {
    let (text, code) = run(&["verify", "pair-gpgd:s3"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("pass"), "{text}");

    let (text, code) = run(&["actor", "pair-gpgd:s3"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.contains("36"));

    let (_, code) = run(&["verify", "pair-gpgd:nope"]);
    assert_eq!(code, 1);

    let (text, code) = run(&["--json", "center", "pair-gpgd:z3"]);
    assert_eq!(code, 0, "{text}");
    serde_json::from_str::<serde_json::Value>(text.trim()).expect("valid json");
}
