//! Command implementations behind the `metabelian` binary.
//!
//! Each command returns its JSON (or word) output together with an exit
//! status: `0` on success, `1` when a check came back mathematically
//! alarming (a failed certificate, a nonempty fixed-point list), `2` for
//! usage errors.

use std::fs;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::ia_endo::{certify_no_fixed_points, EndoError, IAEndomorphism};
use crate::lie::{kernel_trivial_up_to, LieError};
use crate::magnus::{phi, GroupWord, WordError};
use crate::oracle::search_fixed_points_with_workers;

/// Everything here maps to exit status 2.
#[derive(Debug, Error)]
pub enum UsageError {
    #[error("{0}")]
    Word(#[from] WordError),
    #[error("{0}")]
    Endo(#[from] EndoError),
    #[error("{0}")]
    Lie(#[from] LieError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("rank {n} is below the minimum {min} for `{command}`")]
    RankTooSmall {
        command: &'static str,
        n: usize,
        min: usize,
    },
    #[error("endomorphism file has rank {file}, but --n is {flag}")]
    RankConflict { file: usize, flag: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Alarm,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Alarm => 1,
        }
    }
}

pub const USAGE_EXIT: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: Status,
}

fn json<T: Serialize>(value: &T, status: Status) -> Output {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    Output { text, status }
}

fn min_rank(command: &'static str, n: usize, min: usize) -> Result<(), UsageError> {
    if n < min {
        Err(UsageError::RankTooSmall { command, n, min })
    } else {
        Ok(())
    }
}

fn load_endo(n: usize, path: &Path) -> Result<IAEndomorphism, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let e = IAEndomorphism::from_json(&text)?;
    if e.rank() != n {
        return Err(UsageError::RankConflict {
            file: e.rank(),
            flag: n,
        });
    }
    Ok(e)
}

/// `phi --n N WORD`
pub fn cmd_phi(n: usize, word: &str) -> Result<Output, UsageError> {
    min_rank("phi", n, 2)?;
    let w = GroupWord::parse(n, word)?;
    Ok(json(&phi(&w), Status::Ok))
}

/// `apply --n N --endo FILE WORD`: prints the image word.
pub fn cmd_apply(n: usize, endo: &Path, word: &str) -> Result<Output, UsageError> {
    min_rank("apply", n, 2)?;
    let e = load_endo(n, endo)?;
    let w = GroupWord::parse(n, word)?;
    let image = e.apply(&w)?;
    Ok(Output {
        text: format!("{image}\n"),
        status: Status::Ok,
    })
}

/// `certify --n N`
pub fn cmd_certify(n: usize) -> Result<Output, UsageError> {
    min_rank("certify", n, 3)?;
    let c = certify_no_fixed_points(n)?;
    let status = if c.conclusion { Status::Ok } else { Status::Alarm };
    Ok(json(&c, status))
}

/// `oracle --n N --max-len L [--endo FILE]`, defaulting to `alpha_n`.
pub fn cmd_oracle(
    n: usize,
    max_len: usize,
    endo: Option<&Path>,
    workers: usize,
) -> Result<Output, UsageError> {
    let e = match endo {
        Some(path) => {
            min_rank("oracle", n, 1)?;
            load_endo(n, path)?
        }
        None => {
            min_rank("oracle", n, 3)?;
            IAEndomorphism::alpha_n(n)?
        }
    };
    let report = search_fixed_points_with_workers(&e, max_len, workers);
    let status = if report.fixed_points_found.is_empty() {
        Status::Ok
    } else {
        Status::Alarm
    };
    Ok(json(&report, status))
}

/// `lie-kernel --n N --max-degree D`
pub fn cmd_lie_kernel(n: usize, max_degree: usize) -> Result<Output, UsageError> {
    min_rank("lie-kernel", n, 3)?;
    let report = kernel_trivial_up_to(n, max_degree)?;
    let status = if report.trivial_kernel {
        Status::Ok
    } else {
        Status::Alarm
    };
    Ok(json(&report, status))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_commutator_json() {
        let out = cmd_phi(3, "[g1,g2]").unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["S"], serde_json::json!([0, 0, 0]));
        assert_eq!(v["gamma"], serde_json::json!(["1 - s2", "-1 + s1", "0"]));
        assert_eq!(out.status, Status::Ok);
    }

    #[test]
    fn phi_identity_and_product() {
        let v: serde_json::Value = serde_json::from_str(&cmd_phi(3, "").unwrap().text).unwrap();
        assert_eq!(v, serde_json::json!({"S": [0, 0, 0], "gamma": ["0", "0", "0"]}));
        let v: serde_json::Value =
            serde_json::from_str(&cmd_phi(3, "g1 g2").unwrap().text).unwrap();
        assert_eq!(v, serde_json::json!({"S": [1, 1, 0], "gamma": ["1", "s1", "0"]}));
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(cmd_phi(3, "g1 g9"), Err(UsageError::Word(_))));
        assert!(matches!(cmd_certify(2), Err(UsageError::RankTooSmall { .. })));
        assert!(matches!(cmd_lie_kernel(3, 0), Err(UsageError::Lie(_))));
    }

    #[test]
    fn certify_ok() {
        assert_eq!(cmd_certify(3).unwrap().status, Status::Ok);
    }
}
