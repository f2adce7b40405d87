//! Link invariants of closed braids.
//!
//! The link determinant is computed twice: as `det(V + Vᵀ)` from the Seifert
//! matrix and as `Δ(-1)` from the reduced Burau representation. The two
//! routes share nothing beyond the braid word and must agree in absolute
//! value.

mod burau;
mod report;
mod seifert;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::braid::BraidWord;

pub use burau::{alexander_polynomial, burau_reduced};
pub use report::{full_report, InvariantReport, REPORT_SCHEMA};
pub use seifert::{seifert_matrix, symmetrized_determinant, SeifertData, SeifertLoop};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("the reduced Burau representation needs at least two strands")]
    NoReducedBurau,
    #[error("det(I - B) is not divisible by 1 + t + ... + t^(n-1)")]
    InexactAlexanderDivision,
    #[error("link determinant paths disagree: Seifert {seifert}, Burau {burau}")]
    PathMismatch { seifert: BigInt, burau: BigInt },
    #[error("polynomial {polynomial} cannot be evaluated at t = {t} over the integers")]
    NonIntegralEvaluation { polynomial: String, t: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Both signed determinant values, before the agreement check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantPaths {
    pub seifert: BigInt,
    pub burau: BigInt,
}

pub fn determinant_paths(w: &BraidWord) -> Result<DeterminantPaths, InvariantError> {
    let seifert = seifert_matrix(w).symmetrized_determinant();
    let burau = alexander_polynomial(w)?
        .evaluate(-1)
        .expect("a normalised polynomial has no negative powers");
    Ok(DeterminantPaths { seifert, burau })
}

/// `|det(V + Vᵀ)| = |Δ(-1)|`, after checking the two routes agree.
pub fn link_determinant(w: &BraidWord) -> Result<BigInt, InvariantError> {
    let paths = determinant_paths(w)?;
    if paths.seifert.abs() != paths.burau.abs() {
        return Err(InvariantError::PathMismatch {
            seifert: paths.seifert,
            burau: paths.burau,
        });
    }
    Ok(paths.seifert.abs())
}
