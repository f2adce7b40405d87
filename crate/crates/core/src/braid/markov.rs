//! Markov moves. Closure invariants must not change under any of them.

use super::{BraidError, BraidWord, Sign};

/// `g · w · g⁻¹`.
pub(super) fn conjugate(w: &BraidWord, g: &BraidWord) -> Result<BraidWord, BraidError> {
    g.concat(w)?.concat(&g.invert())
}

/// Adds a strand and appends `σ_n^{±1}`, `n` the old strand count.
pub(super) fn stabilize(w: &BraidWord, sign: Sign) -> BraidWord {
    let n = w.strand_count();
    let mut letters = w.letters().to_vec();
    letters.push(sign.as_i32() * n as i32);
    BraidWord {
        strand_count: n + 1,
        letters,
    }
}

/// Removes the last strand when its column holds exactly one letter.
///
/// The word is rotated cyclically (a conjugation) so that letter comes last,
/// then it is dropped.
pub(super) fn destabilize(w: &BraidWord) -> Option<BraidWord> {
    let n = w.strand_count();
    if n < 2 {
        return None;
    }
    let top = (n - 1) as i32;
    let mut hits = w
        .letters()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.abs() == top);
    let (at, _) = hits.next()?;
    if hits.next().is_some() {
        return None;
    }
    let letters = w.letters()[at + 1..]
        .iter()
        .chain(&w.letters()[..at])
        .copied()
        .collect();
    Some(BraidWord {
        strand_count: n - 1,
        letters,
    })
}
