//! The two reference braids, embedded verbatim, and their constructions.
//!
//! Each full braid is its half-turn word followed by the `τ₉` image of it.
//! `Δ₄₅ = σ₄σ₅σ₄` is the contribution of a triple crossing at infinity.

use super::crossings::{
    apply_smoothing, project_crossings, ArrangementError, Projection, SmoothingChoice,
};
use super::direction::Direction2;
use super::geometry::build_configuration;
use super::sweep::{full_turn_from_half, sweep_half_turn, SweepError};
use crate::braid::BraidWord;

pub const STRANDS: usize = 9;

/// `σ₁Δ₄₅σ₈ · σ₂⁻¹ · σ₃σ₆ · σ₂Δ₄₅σ₇ · σ₃σ₆ · σ₁Δ₄₅σ₈ · σ₃σ₆ · σ₂Δ₄₅σ₇ · σ₃σ₆`
pub const BETA_PRIME_HALF: [i32; 29] = [
    1, 4, 5, 4, 8, -2, 3, 6, 2, 4, 5, 4, 7, 3, 6, 1, 4, 5, 4, 8, 3, 6, 2, 4, 5, 4, 7, 3, 6,
];

/// `(σ₁σ₄σ₇)σ₂⁻¹(σ₃σ₅)(σ₂σ₄σ₆)(σ₃σ₅)(σ₁σ₄σ₇)(σ₃σ₅)(σ₂σ₄σ₆)(σ₃σ₅)(σ₈σ₇⋯σ₁)`
pub const BETA_HALF: [i32; 29] = [
    1, 4, 7, -2, 3, 5, 2, 4, 6, 3, 5, 1, 4, 7, 3, 5, 2, 4, 6, 3, 5, 8, 7, 6, 5, 4, 3, 2, 1,
];

/// Strand of `β` whose closure is the axis component; the other strands
/// trace the curve.
pub const BETA_AXIS_STRAND: usize = 9;

/// Strand of `β'` carrying `L'`: position 5, between the four near and the
/// four far intersection points of the scanning line.
pub const BETA_PRIME_AXIS_STRAND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperBraids {
    pub beta: BraidWord,
    pub beta_prime: BraidWord,
    /// `β` with every `σ₂⁻¹` of the half-turn replaced by `σ₂`.
    pub beta_positive_variant: BraidWord,
    /// `β'` with the same replacement.
    pub beta_prime_positive_variant: BraidWord,
}

fn doubled(half: &[i32]) -> BraidWord {
    full_turn_from_half(
        &BraidWord::new(STRANDS, half.to_vec()).expect("fixture letters are in range"),
    )
}

fn positive(half: &[i32]) -> Vec<i32> {
    half.iter().map(|&e| if e == -2 { 2 } else { e }).collect()
}

pub fn paper_braids() -> PaperBraids {
    PaperBraids {
        beta: doubled(&BETA_HALF),
        beta_prime: doubled(&BETA_PRIME_HALF),
        beta_positive_variant: doubled(&positive(&BETA_HALF)),
        beta_prime_positive_variant: doubled(&positive(&BETA_PRIME_HALF)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
}

/// Half-turn braid of the `Oxy` projection under `choice`, starting from
/// the horizontal.
pub fn swept_half_turn(choice: &SmoothingChoice) -> Result<BraidWord, ConstructionError> {
    let lines = build_configuration();
    let events = apply_smoothing(&project_crossings(&lines, Projection::Oxy)?, choice)?;
    Ok(sweep_half_turn(&lines, &events, &Direction2::horizontal())?)
}

/// `half · τ₉(half)` of [`swept_half_turn`].
pub fn swept_braid(choice: &SmoothingChoice) -> Result<BraidWord, ConstructionError> {
    Ok(full_turn_from_half(&swept_half_turn(choice)?))
}
