//! Seifert matrix of a closed braid.
//!
//! Seifert's algorithm on a closed braid with coherently oriented strands
//! gives one disk per strand and one half-twisted band per letter. Two
//! consecutive letters in column `i` bound a loop through disks `i` and
//! `i + 1`; these loops, taken column by column, form a basis of the first
//! homology of the surface when it is connected.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{bareiss_determinant, IntegerMatrix, LaurentPolynomial};
use crate::braid::BraidWord;

/// A homology generator: the loop through the `ordinal`-th and
/// `ordinal + 1`-th letters of `column` (0-based ordinals).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeifertLoop {
    pub column: usize,
    pub ordinal: usize,
    /// Word positions of the two bounding letters.
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pub matrix: IntegerMatrix,
    pub basis_loops: Vec<SeifertLoop>,
    /// Some column carries no letter, so the surface and the link split.
    pub split: bool,
}

pub fn seifert_matrix(w: &BraidWord) -> SeifertData {
    let letters = w.letters();
    let columns = w.strand_count().saturating_sub(1);
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); columns];
    for (at, e) in letters.iter().enumerate() {
        positions[e.unsigned_abs() as usize - 1].push(at);
    }
    let split = positions.iter().any(Vec::is_empty);

    let mut basis_loops = Vec::new();
    for (c, occ) in positions.iter().enumerate() {
        for (ordinal, pair) in occ.windows(2).enumerate() {
            basis_loops.push(SeifertLoop {
                column: c + 1,
                ordinal,
                first: pair[0],
                second: pair[1],
            });
        }
    }

    let sign = |at: usize| letters[at].signum();
    let size = basis_loops.len();
    let mut matrix = IntegerMatrix::zeros(size, size);
    for (a, la) in basis_loops.iter().enumerate() {
        let (e1, e2) = (sign(la.first), sign(la.second));
        if e1 == e2 {
            matrix.set(a, a, -e1);
        }
        for (b, lb) in basis_loops.iter().enumerate().skip(a + 1) {
            if lb.column == la.column && lb.first == la.second {
                // shared band
                if e2 > 0 {
                    matrix.set(a, b, 1);
                } else {
                    matrix.set(b, a, -1);
                }
            } else if lb.column == la.column + 1 {
                let (s, t, u, v) = (la.first, la.second, lb.first, lb.second);
                if s < u && u < t && t < v {
                    matrix.set(b, a, 1);
                } else if u < s && s < v && v < t {
                    matrix.set(b, a, -1);
                }
            }
        }
    }

    SeifertData {
        matrix,
        basis_loops,
        split,
    }
}

impl SeifertData {
    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> IntegerMatrix {
        self.matrix
            .add(&self.matrix.transpose())
            .expect("a matrix and its transpose have the same shape when square")
    }

    /// `det(V + Vᵀ)`, or zero for a split surface.
    pub fn symmetrized_determinant(&self) -> BigInt {
        if self.split {
            return BigInt::zero();
        }
        self.symmetrized()
            .determinant()
            .expect("Bareiss on an integer matrix divides exactly")
    }

    /// `det(V - t·Vᵀ)`, the Alexander polynomial up to units; zero when split.
    pub fn alexander_polynomial(&self) -> LaurentPolynomial {
        if self.split {
            return LaurentPolynomial::zero();
        }
        let n = self.matrix.row_count();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        LaurentPolynomial::from_terms([
                            (0, self.matrix.get(r, c).clone()),
                            (1, -self.matrix.get(c, r).clone()),
                        ])
                    })
                    .collect()
            })
            .collect();
        bareiss_determinant(rows).expect("Bareiss over Z[t, 1/t] divides exactly")
    }
}

/// `det(V + Vᵀ)` of the Seifert data; zero when the surface is split.
pub fn symmetrized_determinant(data: &SeifertData) -> BigInt {
    data.symmetrized_determinant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn det(n: usize, letters: &[i32]) -> BigInt {
        symmetrized_determinant(&seifert_matrix(&word(n, letters)))
    }

    #[test]
    fn trefoil() {
        let data = seifert_matrix(&word(2, &[1, 1, 1]));
        assert_eq!(
            data.matrix,
            IntegerMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap()
        );
        assert!(!data.split);
        assert_eq!(data.symmetrized_determinant(), BigInt::from(3));
        assert_eq!(
            data.alexander_polynomial().normalized(),
            LaurentPolynomial::from_terms([(0, 1), (1, -1), (2, 1)])
        );
    }

    #[test]
    fn figure_eight_and_hopf() {
        assert_eq!(
            det(3, &[1, -2, 1, -2]).magnitude(),
            BigInt::from(5).magnitude()
        );
        assert_eq!(det(2, &[1, 1]).magnitude(), BigInt::from(2).magnitude());
    }

    #[test]
    fn basis_size_and_loop_order() {
        let w = word(4, &[1, 2, 1, 3, 2, 1, 3]);
        let data = seifert_matrix(&w);
        // columns hold 3, 2, 2 letters
        assert_eq!(data.matrix.row_count(), 2 + 1 + 1);
        let cols: Vec<usize> = data.basis_loops.iter().map(|l| l.column).collect();
        assert_eq!(cols, vec![1, 1, 2, 3]);
        assert_eq!(data.basis_loops[1].ordinal, 1);
        assert_eq!(
            (data.basis_loops[1].first, data.basis_loops[1].second),
            (2, 5)
        );
    }

    #[test]
    fn split_and_trivial_cases() {
        let unlink = seifert_matrix(&word(2, &[]));
        assert!(unlink.split);
        assert_eq!(unlink.matrix.row_count(), 0);
        assert_eq!(unlink.symmetrized_determinant(), BigInt::zero());

        // fewer than two letters per column: empty but connected
        let unknot = seifert_matrix(&word(3, &[1, 2]));
        assert!(!unknot.split);
        assert_eq!(unknot.symmetrized_determinant(), BigInt::from(1));
        assert_eq!(
            seifert_matrix(&word(1, &[])).symmetrized_determinant(),
            BigInt::from(1)
        );

        // a missing middle column splits the closure
        let two_trefoils = seifert_matrix(&word(4, &[1, 1, 1, 3, 3, 3]));
        assert!(two_trefoils.split);
        assert_eq!(two_trefoils.symmetrized_determinant(), BigInt::zero());
    }
}
