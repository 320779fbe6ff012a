use serde::{Deserialize, Serialize};

use super::FormulaError;
use crate::engine::PointSet;
use crate::kernel::Sign;

/// The three bits selecting a variant of the first-point predicate.
///
/// `j` and `k` together fix whether the ray from `a` through `b` turns
/// toward the side of `p` (it does iff `j != k`); `k` and `l` together fix
/// whether `c` is met by that ray (`k == l`) or by its opposite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PiFlags {
    pub j: u8,
    pub k: u8,
    pub l: u8,
}

impl PiFlags {
    pub fn new(j: u8, k: u8, l: u8) -> PiFlags {
        assert!(j <= 1 && k <= 1 && l <= 1, "flags are bits");
        PiFlags { j, k, l }
    }

    pub fn all() -> impl Iterator<Item = PiFlags> {
        (0..8u8).map(|m| PiFlags::new(m >> 2 & 1, m >> 1 & 1, m & 1))
    }

    /// The ray from `a` through `b` turns toward the side of `p`.
    pub fn turns_toward_p(self) -> bool {
        self.j != self.k
    }

    /// `c` is met by the ray from `a` through `b` rather than its opposite.
    pub fn met_by_same_ray(self) -> bool {
        self.k == self.l
    }
}

/// Superscript negation: `phi` when `eps = 0`, `not phi` when `eps = 1`.
fn sup(eps: u8, phi: bool) -> bool {
    if eps == 0 {
        phi
    } else {
        !phi
    }
}

/// Subscript guard: falsum when `eps = 0`, `phi` when `eps = 1`.
fn sub(eps: u8, phi: bool) -> bool {
    eps == 1 && phi
}

/// Literal evaluation of the first-point predicate on point indices
/// (0-based): turning the line `ab` about `a`, with `p` fixing the sense,
/// `c` is the first point of the set that the line meets.
///
/// ```text
/// ( ^{(j+k+1) mod 2} d(a,c; b,p)  or  _{(j+l) mod 2}(p = c) )
///   and ^{(j+l) mod 2} d(a,b; c,p)
///   and for every other x:
///       ( ^{1-k} d(a,b; c,x) and ^{l} d(a,c; b,x) )
///    or ( ^{k} d(a,b; c,x)   and ^{1-l} d(a,c; b,x) )
/// ```
///
/// where `d(a,b; u,v)` says `u` and `v` are on opposite sides of line `ab`.
/// `c` may equal `p`.
pub fn pi_eval(
    set: &PointSet,
    a: usize,
    b: usize,
    p: usize,
    c: usize,
    flags: PiFlags,
) -> Result<bool, FormulaError> {
    let n = set.len();
    for index in [a, b, p, c] {
        if index >= n {
            return Err(FormulaError::IndexOutOfRange { index, n });
        }
    }
    if a == b || a == c || b == c || p == a || p == b {
        return Err(FormulaError::IndexCollision { a, b, p, c });
    }
    let PiFlags { j, k, l } = flags;
    let d = |x: usize, y: usize, u: usize, v: usize| set.opposite(x, y, u, v);

    let first = sup((j + k + 1) % 2, d(a, c, b, p)) || sub((j + l) % 2, p == c);
    if !first || !sup((j + l) % 2, d(a, b, c, p)) {
        return Ok(false);
    }
    let rest = (0..n)
        .filter(|&x| x != a && x != b && x != c && x != p)
        .all(|x| {
            let across_ab = d(a, b, c, x);
            let across_ac = d(a, c, b, x);
            (sup(1 - k, across_ab) && sup(l, across_ac)) || (sup(k, across_ab) && sup(1 - l, across_ac))
        });
    Ok(rest)
}

/// Flag triples under which `pi_eval` holds.
pub fn pi_flags_holding(
    set: &PointSet,
    a: usize,
    b: usize,
    p: usize,
    c: usize,
) -> Result<Vec<PiFlags>, FormulaError> {
    let mut out = Vec::new();
    for flags in PiFlags::all() {
        if pi_eval(set, a, b, p, c, flags)? {
            out.push(flags);
        }
    }
    Ok(out)
}

/// Flag triples consistent with a line through `a` and `b` turning about
/// `a` in the sense `turn`: the ray toward `b` turns toward `p` exactly
/// when `p` lies on the `turn` side of `ab`. Four of the eight triples
/// qualify, in two complementary pairs.
pub fn turning_flags(set: &PointSet, a: usize, b: usize, p: usize, turn: Sign) -> impl Fn(PiFlags) -> bool {
    let toward = set.orient(a, b, p) == turn;
    move |f: PiFlags| f.turns_toward_p() == toward
}

/// Points `c` (other than `a`, `b`) for which some admissible flag triple
/// makes the predicate hold. `admissible` filters the eight triples.
pub fn pi_first_points(
    set: &PointSet,
    a: usize,
    b: usize,
    p: usize,
    admissible: impl Fn(PiFlags) -> bool,
) -> Result<Vec<usize>, FormulaError> {
    let mut out = Vec::new();
    for c in (0..set.len()).filter(|&c| c != a && c != b) {
        for flags in PiFlags::all().filter(|&f| admissible(f)) {
            if pi_eval(set, a, b, p, c, flags)? {
                out.push(c);
                break;
            }
        }
    }
    Ok(out)
}
