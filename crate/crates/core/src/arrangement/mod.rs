//! Exact-rational reconstruction of an arrangement of eight lines in space,
//! its planar projections, and the braid swept out by a rotating line.

mod crossings;
mod direction;
mod fixtures;
mod geometry;
mod svg;
mod sweep;

pub use crossings::{
    apply_smoothing, crossings_to_json, project_crossings, ArrangementError, CrossingEvent,
    CrossingKind, CrossingLocation, Perturbation, Projection, Resolution, SmoothingChoice,
    CROSSINGS_SCHEMA,
};
pub use direction::Direction2;
pub use fixtures::{
    paper_braids, swept_braid, swept_half_turn, ConstructionError, PaperBraids, BETA_AXIS_STRAND,
    BETA_HALF, BETA_PRIME_AXIS_STRAND, BETA_PRIME_HALF, STRANDS,
};
pub use geometry::{
    build_configuration, rational_text, DoublePoint, LineLabel, OrientedLine3, Rational,
    RationalPoint3,
};
pub use svg::emit_projection_svg;
pub use sweep::{
    full_turn_from_half, page_signs, sweep_full_turn, sweep_half_turn, sweep_half_turn_steps,
    SweepError, SweepStep,
};
