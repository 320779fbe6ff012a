use super::schedule::{validate_skeleton, Closure};
use super::{alpha, FormulaError};

/// Largest point count enumerated without an explicit override.
pub const ENUMERATION_LIMIT: usize = 4;

/// Depth-first stream of every pivot sequence prefix `f(1..=k)` with
/// `k <= alpha(n)` that belongs to the schedule class under `closure`.
/// Prefixes come out in lexicographic order.
#[derive(Debug, Clone)]
pub struct KnEnumerator {
    n: usize,
    closure: Closure,
    max_k: usize,
    stack: Vec<Vec<usize>>,
}

impl KnEnumerator {
    fn new(n: usize, closure: Closure) -> Self {
        let mut stack = Vec::new();
        for a in (1..=n).rev() {
            for b in (1..=n).rev() {
                // f(1) = f(2) can never close: it forces f(k) = f(k-1)
                if a != b {
                    stack.push(vec![a, b]);
                }
            }
        }
        KnEnumerator { n, closure, max_k: alpha(n), stack }
    }

    fn can_still_cover(&self, prefix: &[usize]) -> bool {
        let missing = (1..=self.n).filter(|i| !prefix.contains(i)).count();
        prefix.len() + missing <= self.max_k
    }
}

impl Iterator for KnEnumerator {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while let Some(prefix) = self.stack.pop() {
            if prefix.len() < self.max_k {
                let (p1, p2) = (prefix[prefix.len() - 1], prefix[prefix.len() - 2]);
                for v in (1..=self.n).rev() {
                    if v != p1 && v != p2 {
                        let mut next = prefix.clone();
                        next.push(v);
                        if self.can_still_cover(&next) {
                            self.stack.push(next);
                        }
                    }
                }
            }
            if prefix.len() >= 3 && validate_skeleton(&prefix, self.n, self.closure).is_ok() {
                return Some(prefix);
            }
        }
        None
    }
}

/// Enumerate the schedule class for `n` points. Refuses `n` above
/// [`ENUMERATION_LIMIT`] unless `allow_large` is set.
pub fn enum_kn(n: usize, closure: Closure, allow_large: bool) -> Result<KnEnumerator, FormulaError> {
    if n < 3 {
        return Err(FormulaError::TooFewPoints(n));
    }
    if n > ENUMERATION_LIMIT && !allow_large {
        return Err(FormulaError::EnumerationTooLarge(n));
    }
    Ok(KnEnumerator::new(n, closure))
}
