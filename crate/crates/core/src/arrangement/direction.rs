//! Exact planar directions ordered by angle without trigonometry.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::geometry::{rat, rational_text, Rational};

/// A ray from the origin, scaled so that `max(|x|, |y|) = 1`; two
/// directions are equal exactly when they describe the same ray.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Direction2 {
    x: Rational,
    y: Rational,
}

impl Direction2 {
    /// `None` for the zero vector.
    pub fn new(x: Rational, y: Rational) -> Option<Self> {
        let scale = if x.abs() > y.abs() { x.abs() } else { y.abs() };
        if scale.is_zero() {
            return None;
        }
        Some(Direction2 {
            x: x / &scale,
            y: y / &scale,
        })
    }

    pub fn from_integers(x: i64, y: i64) -> Option<Self> {
        Direction2::new(rat(x), rat(y))
    }

    /// The positive `x` direction, where the sweep starts.
    pub fn horizontal() -> Self {
        Direction2 {
            x: rat(1),
            y: rat(0),
        }
    }

    pub fn x(&self) -> &Rational {
        &self.x
    }

    pub fn y(&self) -> &Rational {
        &self.y
    }

    pub fn opposite(&self) -> Self {
        Direction2 {
            x: -self.x.clone(),
            y: -self.y.clone(),
        }
    }

    pub fn cross(&self, other: &Direction2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Direction2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// Whether the angle measured from `start` lies in `[0°, 180°)`.
    pub fn in_half_turn_from(&self, start: &Direction2) -> bool {
        let c = start.cross(self);
        c.is_positive() || (c.is_zero() && start.dot(self).is_positive())
    }

    /// Compares the counterclockwise angles from `start` to `self` and to
    /// `other`, both taken in `[0°, 360°)`.
    pub fn cmp_from(&self, other: &Direction2, start: &Direction2) -> Ordering {
        let (a, b) = (
            self.in_half_turn_from(start),
            other.in_half_turn_from(start),
        );
        if a != b {
            return if a { Ordering::Less } else { Ordering::Greater };
        }
        // same half-plane: counterclockwise order is the sign of the cross product
        let c = self.cross(other);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }

    /// Angle comparison from the positive `x` axis.
    pub fn cmp_angle(&self, other: &Direction2) -> Ordering {
        self.cmp_from(other, &Direction2::horizontal())
    }
}

impl fmt::Display for Direction2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            rational_text(&self.x),
            rational_text(&self.y)
        )
    }
}
