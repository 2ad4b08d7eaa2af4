//! Acceptance sweep for the command-line interface: exit codes, output
//! determinism, and the documented formats, exercised against the real
//! binary. Prints one pass/fail line and exits nonzero on failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Output};

fn ellint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ellint"))
        .args(args)
        .output()
        .expect("failed to spawn the ellint binary")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout was not UTF-8")
}

fn assert_exit(output: &Output, code: i32, what: &str) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "{what}: expected exit code {code}, got {:?}; stderr: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr),
    );
}

fn criterion_11() {
    // Two timing-suppressed full sweeps are byte-identical and exit 0.
    let first = ellint(&["verify-all", "--no-timing"]);
    let second = ellint(&["verify-all", "--no-timing"]);
    assert_exit(&first, 0, "verify-all --no-timing (first run)");
    assert_exit(&second, 0, "verify-all --no-timing (second run)");
    assert!(
        first.stdout == second.stdout,
        "two --no-timing sweeps differ ({} vs {} bytes)",
        first.stdout.len(),
        second.stdout.len()
    );

    // An unreachable tolerance turns passes into failures: exit 1.
    let strict = ellint(&["verify-all", "--k", "0.5", "--tol", "1e-30"]);
    assert_exit(&strict, 1, "verify-all --tol 1e-30");

    // Unknown table entry: usage error, exit 2.
    let unknown = ellint(&["verify", "GR-0.0.0"]);
    assert_exit(&unknown, 2, "verify of an unknown entry");

    // A modulus outside [0, 1): usage error, exit 2.
    let bad_modulus = ellint(&["eval", "K", "--k", "1"]);
    assert_exit(&bad_modulus, 2, "eval K at k=1");

    // K(0) = π/2 printed as a bare shortest round-trip value.
    let k0 = ellint(&["eval", "K", "--k", "0"]);
    assert_exit(&k0, 0, "eval K at k=0");
    assert_eq!(stdout_of(&k0).trim(), "1.5707963267948966");

    // A parameter-free entry verifies to a single-record JSON array with
    // pass=true.
    let lemniscatic = ellint(&["verify", "GR-8.129.1"]);
    assert_exit(&lemniscatic, 0, "verify GR-8.129.1");
    let records: serde_json::Value =
        serde_json::from_str(&stdout_of(&lemniscatic)).expect("verify output was not JSON");
    let array = records.as_array().expect("verify output was not an array");
    assert_eq!(array.len(), 1, "expected exactly one record");
    assert_eq!(
        array[0].get("pass").and_then(serde_json::Value::as_bool),
        Some(true),
        "record did not pass"
    );

    // The CSV sweep covers the whole catalog: header plus at least 136 rows.
    let csv = ellint(&["verify-all", "--format", "csv", "--tol", "1e-8"]);
    assert_exit(&csv, 0, "verify-all --format csv --tol 1e-8");
    let text = stdout_of(&csv);
    let lines: Vec<&str> = text.lines().collect();
    assert!(
        lines.len() >= 136,
        "expected at least 136 CSV lines, got {}",
        lines.len()
    );
    assert_eq!(
        lines[0], "id,params,lhs,rhs,abs_err,rel_err,pass,evals,elapsed_ms",
        "unexpected CSV header"
    );
}

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = catch_unwind(AssertUnwindSafe(criterion_11));
    let _ = std::panic::take_hook();
    match outcome {
        Ok(()) => println!("acceptance 11 command-line interface: PASS"),
        Err(payload) => {
            let message = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| (*s).to_string()))
                .unwrap_or_else(|| "panicked".to_string());
            println!("acceptance 11 command-line interface: FAIL — {message}");
            std::process::exit(1);
        }
    }
}
