//! Words in the Artin generators of the braid group `B_n`.
//!
//! A letter `e > 0` stands for `σ_e` and `e < 0` for `σ_{|e|}⁻¹`; strands
//! and generator indices are 1-based throughout.

mod closure;
mod markov;
mod parse;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use closure::{LinkingMatrix, Permutation, StrandComponentMap};

/// Orientation sign of a crossing or of a braid letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of_letter(letter: i32) -> Sign {
        if letter > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("letter {letter} is out of range for {strand_count} strands")]
    LetterOutOfRange { letter: i32, strand_count: usize },
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("strand-count header `{0}` must be the first token")]
    MisplacedHeader(String),
    #[error("cannot determine the strand count of an empty word without a `B<n>` header")]
    UndeterminedStrandCount,
    #[error("strand counts differ ({left} vs {right})")]
    StrandCountMismatch { left: usize, right: usize },
}

/// A braid word on `strand_count` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strand_count == 0 {
            return Err(BraidError::ZeroStrands);
        }
        if let Some(&letter) = letters
            .iter()
            .find(|&&e| e == 0 || e.unsigned_abs() as usize >= strand_count)
        {
            return Err(BraidError::LetterOutOfRange {
                letter,
                strand_count,
            });
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    /// The identity braid on `strand_count` strands.
    pub fn identity(strand_count: usize) -> Result<Self, BraidError> {
        BraidWord::new(strand_count, Vec::new())
    }

    pub fn parse(text: &str) -> Result<Self, BraidError> {
        parse::parse_braid(text)
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_same_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strand_count: self.strand_count,
            letters,
        })
    }

    /// Group inverse: reversed word with every letter negated.
    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|e| -e).collect(),
        }
    }

    /// The mirror image: every crossing sign flipped, order kept.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().map(|e| -e).collect(),
        }
    }

    /// Deletes adjacent `e, -e` pairs until none are left.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.len());
        for &e in &self.letters {
            if stack.last() == Some(&-e) {
                stack.pop();
            } else {
                stack.push(e);
            }
        }
        BraidWord {
            strand_count: self.strand_count,
            letters: stack,
        }
    }

    /// The automorphism `σ_i ↦ σ_{n-i}` of `B_n`.
    pub fn tau(&self) -> BraidWord {
        let n = self.strand_count as i32;
        BraidWord {
            strand_count: self.strand_count,
            letters: self
                .letters
                .iter()
                .map(|&e| e.signum() * (n - e.abs()))
                .collect(),
        }
    }

    /// Writhe of the closed-braid diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&e| i64::from(e.signum())).sum()
    }

    /// Number of letters in each column `1..n`, indexed from 0.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strand_count.saturating_sub(1)];
        for &e in &self.letters {
            counts[e.unsigned_abs() as usize - 1] += 1;
        }
        counts
    }

    pub fn closure_permutation(&self) -> Permutation {
        closure::closure_permutation(self)
    }

    pub fn components(&self) -> StrandComponentMap {
        closure::components(self)
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        closure::linking_matrix(self)
    }

    pub fn conjugate(&self, by: &BraidWord) -> Result<BraidWord, BraidError> {
        markov::conjugate(self, by)
    }

    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        markov::stabilize(self, sign)
    }

    pub fn destabilize(&self) -> Option<BraidWord> {
        markov::destabilize(self)
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strand_count != other.strand_count {
            return Err(BraidError::StrandCountMismatch {
                left: self.strand_count,
                right: other.strand_count,
            });
        }
        Ok(())
    }
}

/// Canonical text form: `B<n>` followed by the signed letters.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.strand_count)?;
        for e in &self.letters {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_braid(s)
    }
}
