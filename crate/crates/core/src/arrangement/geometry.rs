//! The eight oriented lines `ℓ_k = p_k q_k` and `ℓ'_k = p_k q_{k+1}`.
//!
//! `p_0 = (3, -1, -1)`, `q_0 = (3, 1, 1)` and `p_k = R^k p_0`, `q_k = R^k q_0`
//! where `R(x, y, z) = (-y, x, z)` is the quarter turn about the `z`-axis `L`.
//! Every line is oriented with `dz > 0`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` form, or plain `p` for integers.
pub fn rational_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RationalPoint3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        RationalPoint3 { x, y, z }
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Self {
        RationalPoint3::new(rat(x), rat(y), rat(z))
    }

    /// `R(x, y, z) = (-y, x, z)`.
    pub fn rotate_quarter(&self) -> Self {
        RationalPoint3::new(-self.y.clone(), self.x.clone(), self.z.clone())
    }

    /// `self - other` as a vector.
    pub fn minus(&self, other: &RationalPoint3) -> [Rational; 3] {
        [&self.x - &other.x, &self.y - &other.y, &self.z - &other.z]
    }
}

impl fmt::Display for RationalPoint3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            rational_text(&self.x),
            rational_text(&self.y),
            rational_text(&self.z)
        )
    }
}

/// The designed spatial intersection points of the configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DoublePoint {
    P(u8),
    Q(u8),
}

impl DoublePoint {
    pub const ALL: [DoublePoint; 8] = [
        DoublePoint::P(0),
        DoublePoint::P(1),
        DoublePoint::P(2),
        DoublePoint::P(3),
        DoublePoint::Q(0),
        DoublePoint::Q(1),
        DoublePoint::Q(2),
        DoublePoint::Q(3),
    ];

    pub fn point(self) -> RationalPoint3 {
        let (mut p, k) = match self {
            DoublePoint::P(k) => (RationalPoint3::from_integers(3, -1, -1), k),
            DoublePoint::Q(k) => (RationalPoint3::from_integers(3, 1, 1), k),
        };
        for _ in 0..k % 4 {
            p = p.rotate_quarter();
        }
        p
    }
}

impl fmt::Display for DoublePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoublePoint::P(k) => write!(f, "p{k}"),
            DoublePoint::Q(k) => write!(f, "q{k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineLabel {
    /// `ℓ_k`
    Ell(u8),
    /// `ℓ'_k`
    EllPrime(u8),
    /// The `z`-axis.
    AxisL,
    /// The common line at infinity of the planes `z = const`.
    AxisLPrime,
}

impl LineLabel {
    /// Label of the image under `R`.
    pub fn rotated(self) -> LineLabel {
        match self {
            LineLabel::Ell(k) => LineLabel::Ell((k + 1) % 4),
            LineLabel::EllPrime(k) => LineLabel::EllPrime((k + 1) % 4),
            axis => axis,
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::Ell(k) => write!(f, "l{k}"),
            LineLabel::EllPrime(k) => write!(f, "l'{k}"),
            LineLabel::AxisL => f.write_str("L"),
            LineLabel::AxisLPrime => f.write_str("L'"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedLine3 {
    pub base: RationalPoint3,
    pub direction: [Rational; 3],
    pub label: LineLabel,
}

impl OrientedLine3 {
    /// The line through `a` and `b`, oriented so that `dz > 0`. `None` when
    /// the points coincide or span a horizontal line.
    pub fn through(label: LineLabel, a: &RationalPoint3, b: &RationalPoint3) -> Option<Self> {
        let mut direction = b.minus(a);
        if direction[2].is_zero() {
            return None;
        }
        if direction[2].is_negative() {
            direction = direction.map(|c| -c);
        }
        Some(OrientedLine3 {
            base: a.clone(),
            direction,
            label,
        })
    }

    /// The axis `L`, oriented upwards.
    pub fn axis() -> Self {
        OrientedLine3 {
            base: RationalPoint3::from_integers(0, 0, 0),
            direction: [rat(0), rat(0), rat(1)],
            label: LineLabel::AxisL,
        }
    }

    pub fn point_at(&self, t: &Rational) -> RationalPoint3 {
        let [dx, dy, dz] = &self.direction;
        RationalPoint3::new(
            &self.base.x + t * dx,
            &self.base.y + t * dy,
            &self.base.z + t * dz,
        )
    }

    pub fn contains(&self, p: &RationalPoint3) -> bool {
        let v = p.minus(&self.base);
        let d = &self.direction;
        (&v[1] * &d[2] - &v[2] * &d[1]).is_zero()
            && (&v[2] * &d[0] - &v[0] * &d[2]).is_zero()
            && (&v[0] * &d[1] - &v[1] * &d[0]).is_zero()
    }

    /// `x·dy - y·dx` along the line. It does not depend on the point, and
    /// its sign is the sign of the angular form `dθ` on the line.
    pub fn angular_form(&self) -> Rational {
        &self.base.x * &self.direction[1] - &self.base.y * &self.direction[0]
    }

    /// Image under `R`, with the label shifted.
    pub fn rotate_quarter(&self) -> Self {
        let [dx, dy, dz] = &self.direction;
        OrientedLine3 {
            base: self.base.rotate_quarter(),
            direction: [-dy.clone(), dx.clone(), dz.clone()],
            label: self.label.rotated(),
        }
    }
}

impl fmt::Display for OrientedLine3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [dx, dy, dz] = &self.direction;
        write!(
            f,
            "{}: {} + t({}, {}, {})",
            self.label,
            self.base,
            rational_text(dx),
            rational_text(dy),
            rational_text(dz)
        )
    }
}

/// `ℓ_0..ℓ_3` followed by `ℓ'_0..ℓ'_3`.
pub fn build_configuration() -> Vec<OrientedLine3> {
    let p = |k: u8| DoublePoint::P(k).point();
    let q = |k: u8| DoublePoint::Q(k).point();
    let mut lines = Vec::with_capacity(8);
    for k in 0..4 {
        lines.push(
            OrientedLine3::through(LineLabel::Ell(k), &p(k), &q(k)).expect("p_k, q_k differ in z"),
        );
    }
    for k in 0..4 {
        lines.push(
            OrientedLine3::through(LineLabel::EllPrime(k), &p(k), &q((k + 1) % 4))
                .expect("p_k, q_(k+1) differ in z"),
        );
    }
    lines
}
