use std::process::Command;

pub struct GoldenCase {
    pub line: usize,
    pub flags: Vec<String>,
    pub expr: String,
    pub exit: i32,
    pub expected: String,
}

pub fn golden_cases() -> Vec<GoldenCase> {
    include_str!("../golden/cli.golden")
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.starts_with('#') && !l.is_empty())
        .map(|(i, l)| {
            let fields: Vec<&str> = l.split('\t').collect();
            assert_eq!(fields.len(), 4, "golden line {}", i + 1);
            GoldenCase {
                line: i + 1,
                flags: fields[0].split_whitespace().map(String::from).collect(),
                expr: fields[1].to_string(),
                exit: fields[2].parse().expect("exit code"),
                expected: fields[3].to_string(),
            }
        })
        .collect()
}

/// Runs one case; `Err` describes the mismatch.
pub fn run_case(case: &GoldenCase) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_vecq"))
        .arg("eval")
        .args(&case.flags)
        .arg(&case.expr)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let got = if code == 0 {
        stdout.strip_suffix('\n').unwrap_or(&stdout).to_string()
    } else {
        if !stdout.is_empty() {
            return Err(format!("line {}: unexpected stdout {stdout:?}", case.line));
        }
        stderr.lines().next().unwrap_or_default().to_string()
    };
    if code != case.exit || got != case.expected {
        return Err(format!(
            "line {}: {:?}\n  expected exit {} {:?}\n  got      exit {code} {got:?}",
            case.line, case.expr, case.exit, case.expected
        ));
    }
    Ok(())
}
