//! Reduced Burau representation and the Alexander polynomial of a closure.

use crate::algebra::{LaurentMatrix, LaurentPolynomial};
use crate::braid::BraidWord;

use super::InvariantError;

/// Product of the reduced Burau matrices of the letters of `w`.
///
/// `σ_i` differs from the identity only in row `i`, which reads
/// `t, -t, 1` in columns `i-1, i, i+1` (entries outside `1..n-1` dropped);
/// `σ_i⁻¹` has row `1, -t⁻¹, t⁻¹` there instead.
pub fn burau_reduced(w: &BraidWord) -> Result<LaurentMatrix, InvariantError> {
    let n = w.strand_count();
    if n < 2 {
        return Err(InvariantError::NoReducedBurau);
    }
    let mut m = LaurentMatrix::identity(n - 1);
    for &e in w.letters() {
        right_multiply_generator(&mut m, e);
    }
    Ok(m)
}

/// Entries `(column, value)` of the nontrivial row of the generator matrix.
fn generator_row(letter: i32, size: usize) -> Vec<(usize, LaurentPolynomial)> {
    let row = letter.unsigned_abs() as usize - 1;
    let (left, diag, right) = if letter > 0 {
        (
            LaurentPolynomial::t(),
            LaurentPolynomial::monomial(-1, 1),
            LaurentPolynomial::one(),
        )
    } else {
        (
            LaurentPolynomial::one(),
            LaurentPolynomial::monomial(-1, -1),
            LaurentPolynomial::monomial(1, -1),
        )
    };
    let mut entries = Vec::with_capacity(3);
    if row > 0 {
        entries.push((row - 1, left));
    }
    entries.push((row, diag));
    if row + 1 < size {
        entries.push((row + 1, right));
    }
    entries
}

/// `m ← m · G` where `G` is the identity outside one row.
fn right_multiply_generator(m: &mut LaurentMatrix, letter: i32) {
    let size = m.size();
    let row = letter.unsigned_abs() as usize - 1;
    let entries = generator_row(letter, size);
    for r in 0..size {
        let pivot = m.get(r, row).clone();
        if pivot.is_zero() {
            continue;
        }
        for (c, g) in &entries {
            let contribution = &pivot * g;
            let updated = if *c == row {
                contribution
            } else {
                m.get(r, *c) + &contribution
            };
            m.set(r, *c, updated);
        }
    }
}

/// One-variable Alexander polynomial of the closure of `w`, normalised to
/// lowest exponent 0 and positive leading coefficient.
///
/// Computed as `det(I - B(w)) / (1 + t + … + t^{n-1})` with `B` the reduced
/// Burau matrix.
pub fn alexander_polynomial(w: &BraidWord) -> Result<LaurentPolynomial, InvariantError> {
    let n = w.strand_count();
    if n == 1 {
        return Ok(LaurentPolynomial::one());
    }
    let burau = burau_reduced(w)?;
    let det = burau.identity_minus().determinant()?;
    let quotient = det
        .exact_div(&LaurentPolynomial::geometric_sum(n))
        .ok_or(InvariantError::InexactAlexanderDivision)?;
    Ok(quotient.normalized())
}
