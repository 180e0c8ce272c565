use std::fmt;

use crate::error::{Error, Result};

/// Starting abscissas `0 = a_0 < a_1 < ... < a_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StartSequence {
    a: Vec<i64>,
}

impl StartSequence {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        let mut errs = Vec::new();
        if a.is_empty() {
            errs.push("sequence must contain at least a_0".to_string());
        } else if a[0] != 0 {
            errs.push(format!("a_0 must be 0, got {}", a[0]));
        }
        for (i, w) in a.windows(2).enumerate() {
            if w[1] <= w[0] {
                errs.push(format!(
                    "sequence must be strictly increasing: a_{} = {} >= a_{} = {}",
                    i,
                    w[0],
                    i + 1,
                    w[1]
                ));
            }
        }
        if errs.is_empty() {
            Ok(StartSequence { a })
        } else {
            Err(Error::InvalidArgument(errs.join("; ")))
        }
    }

    /// Number of nontrivial paths; the sequence has `n + 1` entries.
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn last(&self) -> i64 {
        self.a[self.n()]
    }
}

impl fmt::Display for StartSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.a.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ã_i = a_n − a_{n−i}`.
pub fn dual_sequence(seq: &StartSequence) -> StartSequence {
    let n = seq.n();
    let an = seq.last();
    StartSequence {
        a: (0..=n).map(|i| an - seq.a[n - i]).collect(),
    }
}
