use std::io::Write;
use std::process::{Command, Output, Stdio};

use recdiv::json::TraceJson;
use recdiv_core::{mod_direct, DigitString, Lcg, Modulus};

fn recdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recdiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn recdiv_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_recdiv"))
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

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn verdict_exit_codes_match_oracle() {
    let mut rng = Lcg::new(77);
    let moduli = [2u64, 3, 5, 7, 9, 11, 13, 21, 49, 97, 101, 1];
    for i in 0..60 {
        let n = rng.digits(1 + i % 30);
        let v = moduli[i % moduli.len()];
        let chunk = (1 + i % 3).to_string();
        let text = n.to_text();
        let out = recdiv(&[
            "test",
            &text,
            "--modulus",
            &v.to_string(),
            "--chunk",
            &chunk,
        ]);
        let divisible = mod_direct(&n, Modulus::new(v).unwrap()) == 0;
        assert_eq!(
            code(&out),
            if divisible { 0 } else { 1 },
            "n = {text}, m = {v}"
        );
        let stdout = String::from_utf8(out.stdout).unwrap();
        let expected = if divisible {
            "divisible\n"
        } else {
            "not divisible\n"
        };
        assert_eq!(stdout, expected);
    }
    // a constructed multiple, so the divisible branch is exercised for large m
    let n = rng.digits(80).mul_small(999_999_937);
    assert_eq!(
        code(&recdiv(&[
            "test",
            &n.to_text(),
            "-m",
            "999999937",
            "-c",
            "5"
        ])),
        0
    );
}

#[test]
fn error_exit_codes() {
    let out = recdiv(&["test", "99", "--modulus", "6"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("factor"));
    assert_eq!(code(&recdiv(&["test", "9x9", "--modulus", "7"])), 2);
    assert_eq!(code(&recdiv(&["test", "99"])), 2);
    assert_eq!(code(&recdiv(&["test", "99", "-m", "seven"])), 2);
    assert_eq!(
        code(&recdiv(&["test", "99", "-m", "9223372036854775808"])),
        2
    );
    assert_eq!(
        code(&recdiv(&["test", "@/nonexistent/recdiv", "-m", "7"])),
        2
    );
    assert_eq!(code(&recdiv(&["frobnicate"])), 2);
    assert_eq!(code(&recdiv(&["multiplier", "-m", "20"])), 3);
    assert_eq!(code(&recdiv(&["table", "--max", "2000000"])), 2);
    assert_eq!(code(&recdiv(&["note1", "-m", "15", "--n", "30"])), 3);
}

#[test]
fn json_trace_round_trips_and_reverifies() {
    let mut rng = Lcg::new(5);
    for (v, chunk) in [(7u64, 1u32), (19, 1), (91, 2), (101, 3), (13, 7)] {
        let n = rng.digits(150);
        let out = recdiv(&[
            "test",
            &n.to_text(),
            "-m",
            &v.to_string(),
            "-c",
            &chunk.to_string(),
            "--json",
        ]);
        let doc: TraceJson = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc.modulus, v);
        assert_eq!(doc.chunk, chunk);
        assert_eq!(doc.steps[0].before, n.to_text());
        assert_eq!(doc.verify(), Ok(()));
        assert_eq!(doc.divisible, code(&out) == 0);
        assert_eq!(doc.divisible, mod_direct(&n, Modulus::new(v).unwrap()) == 0);
        // re-serializing reproduces the emitted line
        let line = String::from_utf8(out.stdout).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap(), line.trim_end());
    }
}

#[test]
fn json_for_unit_digit_moduli() {
    let out = recdiv(&["test", "1234", "-m", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["t"], serde_json::Value::Null);
    assert_eq!(doc["steps"].as_array().unwrap().len(), 0);
    assert_eq!(doc["divisible"], true);
}

#[test]
fn stdin_and_file_inputs() {
    let out = recdiv_stdin(&["test", "-", "-m", "7"], "  1_001 trailing ignored\n");
    assert_eq!(code(&out), 0);
    let out = recdiv_stdin(&["test", "-", "-m", "7"], "   \n");
    assert_eq!(code(&out), 2);

    let dir = std::env::temp_dir().join(format!("recdiv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("big.txt");
    let n = DigitString::from_u64(123_456_789)
        .mul_small(13)
        .shifted_left(400);
    let text = n.to_text();
    let wrapped: Vec<&str> = text
        .as_bytes()
        .chunks(64)
        .map(|c| std::str::from_utf8(c).unwrap())
        .collect();
    std::fs::write(&path, wrapped.join("\n")).unwrap();
    let out = recdiv(&[
        "test",
        &format!("@{}", path.display()),
        "-m",
        "13",
        "-c",
        "3",
    ]);
    assert_eq!(code(&out), 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn note1_survey_output_partitions_samples() {
    let out = recdiv(&[
        "note1",
        "-m",
        "13",
        "--survey",
        "--digits",
        "6",
        "--samples",
        "400",
        "--seed",
        "9",
    ]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let total: u64 = stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 400);
    let again = recdiv(&[
        "note1",
        "-m",
        "13",
        "--survey",
        "--digits",
        "6",
        "--samples",
        "400",
        "--seed",
        "9",
    ]);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), stdout);
}

#[test]
fn table_rows_satisfy_identity() {
    let out = recdiv(&["table", "--max", "2000"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("p,ud,t,k"));
    let mut rows = 0;
    for line in lines {
        let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let (p, ud, t, k) = (f[0], f[1], f[2], f[3]);
        assert_eq!(ud, p % 10);
        assert_eq!(10 * t + 1, k * p);
        assert!((1..=9).contains(&k));
        rows += 1;
    }
    // primes below 2000 minus {2, 5}
    assert_eq!(rows, 303 - 2);
}
