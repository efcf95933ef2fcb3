#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub struct Entry {
    pub name: &'static str,
    /// `build` arguments reproducing the file, for builtins.
    pub build: Option<&'static [&'static str]>,
    pub exit: i32,
}

const fn builtin(name: &'static str, args: &'static [&'static str]) -> Entry {
    Entry { name, build: Some(args), exit: 0 }
}

const fn control(name: &'static str, exit: i32) -> Entry {
    Entry { name, build: None, exit }
}

pub const CORPUS: &[Entry] = &[
    builtin("hf_identity", &["hf", "--matrix", "1,0;0,1"]),
    builtin("hf_diag_1_q", &["hf", "--matrix", "1,0;0,q"]),
    builtin("hf_swap", &["hf", "--matrix", "0,1;1,0"]),
    builtin("eq2", &["eq", "--n", "2"]),
    builtin("hn1", &["hn", "--n", "1"]),
    builtin("hn2", &["hn", "--n", "2"]),
    builtin("sweedler", &["sweedler"]),
    builtin("sweedler_finite", &["sweedler", "--finite"]),
    builtin("z2", &["cyclic", "--n", "2"]),
    builtin("z3", &["cyclic", "--n", "3"]),
    builtin("laurent", &["laurent"]),
    control("neg_sweedler_eps", 1),
    control("neg_sweedler_bad_sigma", 1),
    control("neg_z3_wrong_antipode", 1),
    control("neg_unknown_field", 3),
    control("neg_unknown_generator", 3),
    control("neg_not_json", 3),
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn input(name: &str) -> PathBuf {
    golden_dir().join(format!("{name}.json"))
}

pub fn report(name: &str) -> PathBuf {
    golden_dir().join("reports").join(format!("{name}.json"))
}

pub fn sovhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sovhopf")).args(args).output().expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}
