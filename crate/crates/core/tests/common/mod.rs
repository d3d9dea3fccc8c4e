#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    manifest_dir().join("fixtures").join(name)
}

/// Run the `grainy` binary from the crate root.
pub fn grainy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grainy"))
        .current_dir(manifest_dir())
        .env_remove("GRAINY_MAXLEN_CAP")
        .args(args)
        .output()
        .expect("run grainy")
}

/// One committed CLI golden: arguments, expected exit status and the file
/// under `tests/golden/` holding the expected standard output.
pub struct GoldenCase {
    pub golden: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        golden: "eval_add.txt",
        args: &["eval", "1°3°4° + 1°2°(4)"],
        exit: 0,
    },
    GoldenCase {
        golden: "eval_mul.txt",
        args: &["eval", "1°3°4° * 1°2°(4)"],
        exit: 0,
    },
    GoldenCase {
        golden: "eval_geq.txt",
        args: &["eval", "0 >= 1°2°3°(5)"],
        exit: 0,
    },
    GoldenCase {
        golden: "eval_supp.txt",
        args: &["eval", "supp(supp(2°, 1°), 1°)"],
        exit: 0,
    },
    GoldenCase {
        golden: "table_3.txt",
        args: &["table", "3"],
        exit: 0,
    },
    GoldenCase {
        golden: "laws_4.txt",
        args: &["laws", "4"],
        exit: 0,
    },
    GoldenCase {
        golden: "laws_5_machine.txt",
        args: &["laws", "5", "--format", "machine"],
        exit: 0,
    },
    GoldenCase {
        golden: "hasse_2.txt",
        args: &["hasse", "2"],
        exit: 0,
    },
    GoldenCase {
        golden: "fuzzy_check_supp_high_low.txt",
        args: &[
            "fuzzy",
            "check-supp",
            "fixtures/high_educated.gfs",
            "fixtures/low_educated.gfs",
            "1°",
        ],
        exit: 0,
    },
    GoldenCase {
        golden: "fuzzy_check_supp_very.txt",
        args: &[
            "fuzzy",
            "check-supp",
            "fixtures/very_high.gfs",
            "fixtures/very_low.gfs",
            "1°",
        ],
        exit: 0,
    },
    GoldenCase {
        golden: "fuzzy_op_add_high.txt",
        args: &[
            "fuzzy",
            "op",
            "add",
            "fixtures/high_educated.gfs",
            "fixtures/high_educated.gfs",
            "--name",
            "HIGH_EDUCATED",
        ],
        exit: 0,
    },
    GoldenCase {
        golden: "fuzzy_show_high.txt",
        args: &["fuzzy", "show", "fixtures/high_educated.gfs"],
        exit: 0,
    },
    GoldenCase {
        golden: "fuzzy_supp_high.txt",
        args: &["fuzzy", "supp", "fixtures/high_educated.gfs", "1°"],
        exit: 0,
    },
];

/// Compare one case against its golden. With `UPDATE_GOLDEN=1` the golden
/// is rewritten instead.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let out = grainy(case.args);
    let path = manifest_dir().join("tests/golden").join(case.golden);
    let code = out.status.code().unwrap_or(-1);
    if code != case.exit {
        return Err(format!(
            "{}: exit {code}, expected {}; stderr: {}",
            case.golden,
            case.exit,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &out.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected != out.stdout {
        return Err(format!(
            "{}: output differs\n--- expected\n{}\n--- actual\n{}",
            case.golden,
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&out.stdout)
        ));
    }
    Ok(())
}
