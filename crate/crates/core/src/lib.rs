//! Exact link invariants of closed braids, and an exact-rational
//! reconstruction of a degree-8 real curve built from eight lines, whose
//! rotational sweep produces a braid.

pub mod algebra;
pub mod arrangement;
pub mod braid;
pub mod invariants;
