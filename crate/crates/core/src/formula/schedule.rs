use std::fmt;

use serde::{Deserialize, Serialize};

use super::{alpha, f0};

/// How a pivot schedule must end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Closure {
    /// `f(k-1) = f(1)` and `f(k) = f(2)`: the chain comes back to its
    /// opening stop, pivot included.
    #[default]
    Return,
    /// `f(k-1) = f(2)` and `f(k) = f(1)`: the chain ends on the opening
    /// line with the two pivot roles exchanged.
    Reversed,
}

/// A pivot sequence `f` and bit string `g` of common length `k`.
/// Entries of `f` are 1-based point indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Schedule {
    pub f: Vec<usize>,
    pub g: Vec<u8>,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScheduleError {
    #[error("length mismatch: k = {k}, |f| = {f_len}, |g| = {g_len}")]
    Length { k: usize, f_len: usize, g_len: usize },
    #[error("k = {k} exceeds the bound {bound}")]
    TooLong { k: usize, bound: usize },
    #[error("f({position}) = {value} is not an index in 1..={n}")]
    BadIndex { position: usize, value: usize, n: usize },
    #[error("g({position}) = {value} is not a bit")]
    BadBit { position: usize, value: u8 },
    #[error("f misses point {0}")]
    NotOnto(usize),
    #[error("f({position}) repeats one of the two preceding entries")]
    Repeat { position: usize },
    #[error("the last two entries do not close the schedule")]
    NotClosed,
    #[error("schedules need at least three points, got {0}")]
    TooFewPoints(usize),
}

impl Schedule {
    /// 1-based access; position 0 is the orientation reference `f0`.
    pub fn at(&self, i: usize, n: usize) -> usize {
        if i == 0 {
            f0(self.f[0], self.f[1], n)
        } else {
            self.f[i - 1]
        }
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.g[i - 1]
    }

    pub fn validate(&self, n: usize, closure: Closure) -> Result<(), ScheduleError> {
        validate_skeleton(&self.f, n, closure)?;
        if self.k != self.f.len() || self.k != self.g.len() {
            return Err(ScheduleError::Length { k: self.k, f_len: self.f.len(), g_len: self.g.len() });
        }
        if let Some(pos) = self.g.iter().position(|&b| b > 1) {
            return Err(ScheduleError::BadBit { position: pos + 1, value: self.g[pos] });
        }
        Ok(())
    }
}

impl fmt::Display for Schedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} f={:?} g={:?}", self.k, self.f, self.g)
    }
}

/// Membership of a pivot sequence prefix `f(1..=k)` in the schedule class.
pub fn validate_skeleton(f: &[usize], n: usize, closure: Closure) -> Result<(), ScheduleError> {
    if n < 3 {
        return Err(ScheduleError::TooFewPoints(n));
    }
    let k = f.len();
    if k > alpha(n) {
        return Err(ScheduleError::TooLong { k, bound: alpha(n) });
    }
    if k < 3 {
        return Err(ScheduleError::NotOnto(
            (1..=n).find(|i| !f.contains(i)).unwrap_or(n),
        ));
    }
    if let Some(pos) = f.iter().position(|&v| v == 0 || v > n) {
        return Err(ScheduleError::BadIndex { position: pos + 1, value: f[pos], n });
    }
    if let Some(missing) = (1..=n).find(|i| !f.contains(i)) {
        return Err(ScheduleError::NotOnto(missing));
    }
    for i in 2..k {
        if f[i] == f[i - 1] || f[i] == f[i - 2] {
            return Err(ScheduleError::Repeat { position: i + 1 });
        }
    }
    let closed = match closure {
        Closure::Return => f[k - 2] == f[0] && f[k - 1] == f[1],
        Closure::Reversed => f[k - 2] == f[1] && f[k - 1] == f[0],
    };
    if !closed {
        return Err(ScheduleError::NotClosed);
    }
    Ok(())
}
