//! Crossings of the projected arrangement.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use super::direction::Direction2;
use super::geometry::{
    rat, rational_text, DoublePoint, LineLabel, OrientedLine3, Rational, RationalPoint3,
};
use crate::braid::Sign;

/// Version tag of the JSON crossing list.
pub const CROSSINGS_SCHEMA: &str = "braidlink.crossings/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("{a} and {b} meet in space away from the designed double points")]
    UnexpectedIncidence { a: LineLabel, b: LineLabel },
    #[error("{a} and {b} project onto the same line")]
    CoincidentProjections { a: LineLabel, b: LineLabel },
    #[error("no perturbation chosen for double point {0}")]
    MissingPerturbation(DoublePoint),
}

/// Coordinate projections of the arrangement. `Oxy` is viewed from
/// `z = +∞`; `Oxz` is viewed from `y = -∞`, so that `(x, z, -y)` is a
/// right-handed screen frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Projection {
    Oxy,
    Oxz,
}

impl Projection {
    pub fn plane(self, p: &RationalPoint3) -> (Rational, Rational) {
        match self {
            Projection::Oxy => (p.x.clone(), p.y.clone()),
            Projection::Oxz => (p.x.clone(), p.z.clone()),
        }
    }

    pub fn plane_vector(self, v: &[Rational; 3]) -> (Rational, Rational) {
        match self {
            Projection::Oxy => (v[0].clone(), v[1].clone()),
            Projection::Oxz => (v[0].clone(), v[2].clone()),
        }
    }

    /// The dropped coordinate, `z` or `y`.
    pub fn complementary(self, p: &RationalPoint3) -> Rational {
        match self {
            Projection::Oxy => p.z.clone(),
            Projection::Oxz => p.y.clone(),
        }
    }

    pub fn complementary_axis(self) -> char {
        match self {
            Projection::Oxy => 'z',
            Projection::Oxz => 'y',
        }
    }

    /// Distance towards the viewer; the larger depth is drawn over.
    pub fn depth(self, p: &RationalPoint3) -> Rational {
        match self {
            Projection::Oxy => p.z.clone(),
            Projection::Oxz => -p.y.clone(),
        }
    }
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Projection::Oxy => "oxy",
            Projection::Oxz => "oxz",
        })
    }
}

impl FromStr for Projection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "oxy" => Ok(Projection::Oxy),
            "oxz" => Ok(Projection::Oxz),
            _ => Err(format!("unknown projection `{s}` (expected oxy or oxz)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    Finite,
    /// Two projected-parallel lines meeting `L'` at infinity.
    AtInfinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossingLocation {
    Point(Rational, Rational),
    Infinity(Direction2),
}

/// How a designed double point is perturbed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Perturbation {
    /// The two branches are pushed apart into a crossing of this sign.
    Crossing(Sign),
    /// The two branches are reconnected without crossing.
    Smoothing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Resolution {
    Crossing(Sign),
    /// A spatial intersection still awaiting a [`SmoothingChoice`].
    DoublePoint(DoublePoint),
    Perturbed(DoublePoint, Perturbation),
}

/// A perturbation for each designed double point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingChoice {
    choices: BTreeMap<DoublePoint, Perturbation>,
}

impl SmoothingChoice {
    pub fn new(entries: impl IntoIterator<Item = (DoublePoint, Perturbation)>) -> Self {
        SmoothingChoice {
            choices: entries.into_iter().collect(),
        }
    }

    /// `q_0` becomes a negative crossing; every other double point is
    /// smoothed.
    pub fn reference() -> Self {
        SmoothingChoice::with_q0(Sign::Negative)
    }

    /// As [`SmoothingChoice::reference`] with the crossing at `q_0` made
    /// positive.
    pub fn all_positive() -> Self {
        SmoothingChoice::with_q0(Sign::Positive)
    }

    fn with_q0(sign: Sign) -> Self {
        SmoothingChoice::new(DoublePoint::ALL.into_iter().map(|dp| {
            let perturbation = if dp == DoublePoint::Q(0) {
                Perturbation::Crossing(sign)
            } else {
                Perturbation::Smoothing
            };
            (dp, perturbation)
        }))
    }

    pub fn get(&self, point: DoublePoint) -> Option<Perturbation> {
        self.choices.get(&point).copied()
    }

    pub fn remove(&mut self, point: DoublePoint) -> Option<Perturbation> {
        self.choices.remove(&point)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingEvent {
    pub projection: Projection,
    pub kind: CrossingKind,
    pub location: CrossingLocation,
    /// Two labels for a finite crossing; two labels and `L'` at infinity.
    pub strands: Vec<LineLabel>,
    /// The strands from the one nearest the viewer to the farthest.
    pub over_under: Vec<LineLabel>,
    pub resolution: Resolution,
    /// The ray from the origin through the crossing, or the parallel
    /// direction in `[0°, 180°)` for a crossing at infinity; `None` for a
    /// crossing at the origin.
    pub sweep_angle: Option<Direction2>,
}

impl CrossingEvent {
    /// The crossing sign; `None` for pending double points and smoothings.
    pub fn sign(&self) -> Option<Sign> {
        match self.resolution {
            Resolution::Crossing(s) | Resolution::Perturbed(_, Perturbation::Crossing(s)) => {
                Some(s)
            }
            Resolution::DoublePoint(_) | Resolution::Perturbed(_, Perturbation::Smoothing) => None,
        }
    }

    pub fn double_point(&self) -> Option<DoublePoint> {
        match self.resolution {
            Resolution::DoublePoint(dp) | Resolution::Perturbed(dp, _) => Some(dp),
            Resolution::Crossing(_) => None,
        }
    }

    pub fn position(&self) -> Option<(&Rational, &Rational)> {
        match &self.location {
            CrossingLocation::Point(x, y) => Some((x, y)),
            CrossingLocation::Infinity(_) => None,
        }
    }

    /// Whether this finite crossing sits at the integer point `(x, y)`.
    pub fn is_at(&self, x: i64, y: i64) -> bool {
        self.position()
            .is_some_and(|(px, py)| *px == rat(x) && *py == rat(y))
    }

    pub fn to_json(&self) -> Value {
        let pair = |x: &Rational, y: &Rational| vec![rational_text(x), rational_text(y)];
        let (resolution, perturbation) = match self.resolution {
            Resolution::Crossing(_) => ("crossing", None),
            Resolution::DoublePoint(_) => ("double_point", None),
            Resolution::Perturbed(_, p) => (
                "perturbed",
                Some(match p {
                    Perturbation::Crossing(_) => "crossing",
                    Perturbation::Smoothing => "smoothing",
                }),
            ),
        };
        let json = EventJson {
            kind: match self.kind {
                CrossingKind::Finite => "finite",
                CrossingKind::AtInfinity => "at_infinity",
            },
            position: self.position().map(|(x, y)| pair(x, y)),
            direction: match &self.location {
                CrossingLocation::Infinity(d) => Some(pair(d.x(), d.y())),
                CrossingLocation::Point(..) => None,
            },
            strands: self.strands.iter().map(ToString::to_string).collect(),
            over_under: self.over_under.iter().map(ToString::to_string).collect(),
            sign: self.sign().map(Sign::as_i32),
            resolution,
            double_point: self.double_point().map(|dp| dp.to_string()),
            perturbation,
            sweep_angle: self.sweep_angle.as_ref().map(|d| pair(d.x(), d.y())),
        };
        serde_json::to_value(json).expect("event serialisation is infallible")
    }
}

#[derive(Serialize)]
struct EventJson {
    kind: &'static str,
    position: Option<Vec<String>>,
    direction: Option<Vec<String>>,
    strands: Vec<String>,
    over_under: Vec<String>,
    sign: Option<i32>,
    resolution: &'static str,
    double_point: Option<String>,
    perturbation: Option<&'static str>,
    sweep_angle: Option<Vec<String>>,
}

/// The crossing list as a JSON document.
pub fn crossings_to_json(projection: Projection, events: &[CrossingEvent]) -> Value {
    serde_json::json!({
        "schema": CROSSINGS_SCHEMA,
        "projection": projection.to_string(),
        "crossings": events.iter().map(CrossingEvent::to_json).collect::<Vec<_>>(),
    })
}

fn cross2(a: &(Rational, Rational), b: &(Rational, Rational)) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn sign_of(q: &Rational) -> Sign {
    if q.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Every pairwise crossing of the projected lines, sorted by sweep angle.
///
/// Lines that meet in space are flagged as [`Resolution::DoublePoint`].
/// Other finite crossings get the oriented-diagram sign: positive when the
/// over strand turns counterclockwise onto the under strand. In the `Oxy`
/// projection each parallel pair also meets `L'` in a triple crossing at
/// infinity, which the sweep reads as a positive half twist.
pub fn project_crossings(
    lines: &[OrientedLine3],
    projection: Projection,
) -> Result<Vec<CrossingEvent>, ArrangementError> {
    let mut events = Vec::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if let Some(event) = crossing_of(a, b, projection)? {
                events.push(event);
            }
        }
    }
    events.sort_by(|e, f| {
        match (&e.sweep_angle, &f.sweep_angle) {
            (Some(a), Some(b)) => a.cmp_angle(b),
            (a, b) => a.is_some().cmp(&b.is_some()),
        }
        .then_with(|| kind_rank(e.kind).cmp(&kind_rank(f.kind)))
        .then_with(|| e.strands.cmp(&f.strands))
    });
    Ok(events)
}

fn kind_rank(kind: CrossingKind) -> u8 {
    match kind {
        CrossingKind::Finite => 0,
        CrossingKind::AtInfinity => 1,
    }
}

fn crossing_of(
    a: &OrientedLine3,
    b: &OrientedLine3,
    projection: Projection,
) -> Result<Option<CrossingEvent>, ArrangementError> {
    let base_a = projection.plane(&a.base);
    let base_b = projection.plane(&b.base);
    let dir_a = projection.plane_vector(&a.direction);
    let dir_b = projection.plane_vector(&b.direction);
    let det = cross2(&dir_a, &dir_b);
    let offset = (&base_b.0 - &base_a.0, &base_b.1 - &base_a.1);

    if det.is_zero() {
        if cross2(&offset, &dir_a).is_zero() {
            return Err(ArrangementError::CoincidentProjections {
                a: a.label,
                b: b.label,
            });
        }
        if projection != Projection::Oxy {
            return Ok(None);
        }
        return Ok(Some(triple_at_infinity(a, b, &dir_a)));
    }

    let s = cross2(&offset, &dir_b) / &det;
    let t = cross2(&offset, &dir_a) / &det;
    let on_a = a.point_at(&s);
    let on_b = b.point_at(&t);
    let (x, y) = projection.plane(&on_a);
    let sweep_angle = Direction2::new(x.clone(), y.clone());

    let depth_a = projection.depth(&on_a);
    let depth_b = projection.depth(&on_b);
    let (over, under, resolution) = match depth_a.cmp(&depth_b) {
        Ordering::Equal => {
            let dp = DoublePoint::ALL
                .into_iter()
                .find(|dp| dp.point() == on_a)
                .ok_or(ArrangementError::UnexpectedIncidence {
                    a: a.label,
                    b: b.label,
                })?;
            (a, b, Resolution::DoublePoint(dp))
        }
        order => {
            let (over, under) = if order == Ordering::Greater {
                (a, b)
            } else {
                (b, a)
            };
            let sign = sign_of(&cross2(
                &projection.plane_vector(&over.direction),
                &projection.plane_vector(&under.direction),
            ));
            (over, under, Resolution::Crossing(sign))
        }
    };

    Ok(Some(CrossingEvent {
        projection,
        kind: CrossingKind::Finite,
        location: CrossingLocation::Point(x, y),
        strands: vec![a.label, b.label],
        over_under: vec![over.label, under.label],
        resolution,
        sweep_angle,
    }))
}

/// The triple point of two `Oxy`-parallel lines and `L'`. Strands are
/// ranked over/under by their rise `dz` per unit of the common horizontal
/// direction; `L'` rises at rate 0.
fn triple_at_infinity(
    a: &OrientedLine3,
    b: &OrientedLine3,
    dir_a: &(Rational, Rational),
) -> CrossingEvent {
    let mut class =
        Direction2::new(dir_a.0.clone(), dir_a.1.clone()).expect("lines are not vertical");
    if !class.in_half_turn_from(&Direction2::horizontal()) {
        class = class.opposite();
    }
    let rise = |line: &OrientedLine3| {
        let (dx, dy) = (&line.direction[0], &line.direction[1]);
        // (dx, dy) = λ · class
        let lambda = if class.x().is_zero() {
            dy / class.y()
        } else {
            dx / class.x()
        };
        &line.direction[2] / lambda
    };
    let mut ranked = vec![
        (rise(a), a.label),
        (rise(b), b.label),
        (rat(0), LineLabel::AxisLPrime),
    ];
    ranked.sort_by(|p, q| q.0.cmp(&p.0).then(p.1.cmp(&q.1)));

    CrossingEvent {
        projection: Projection::Oxy,
        kind: CrossingKind::AtInfinity,
        location: CrossingLocation::Infinity(class.clone()),
        strands: vec![a.label, b.label, LineLabel::AxisLPrime],
        over_under: ranked.into_iter().map(|(_, label)| label).collect(),
        resolution: Resolution::Crossing(Sign::Positive),
        sweep_angle: Some(class),
    }
}

/// Resolves every pending double point with `choice`; other events are
/// returned unchanged.
pub fn apply_smoothing(
    events: &[CrossingEvent],
    choice: &SmoothingChoice,
) -> Result<Vec<CrossingEvent>, ArrangementError> {
    events
        .iter()
        .map(|event| match event.resolution {
            Resolution::DoublePoint(dp) => {
                let perturbation = choice
                    .get(dp)
                    .ok_or(ArrangementError::MissingPerturbation(dp))?;
                Ok(CrossingEvent {
                    resolution: Resolution::Perturbed(dp, perturbation),
                    ..event.clone()
                })
            }
            _ => Ok(event.clone()),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::geometry::build_configuration;

    fn oxy() -> Vec<CrossingEvent> {
        project_crossings(&build_configuration(), Projection::Oxy).unwrap()
    }

    fn at(events: &[CrossingEvent], x: i64, y: i64) -> &CrossingEvent {
        events
            .iter()
            .find(|e| e.is_at(x, y))
            .unwrap_or_else(|| panic!("no crossing at ({x}, {y})"))
    }

    #[test]
    fn counts() {
        let events = oxy();
        let finite = events
            .iter()
            .filter(|e| e.kind == CrossingKind::Finite)
            .count();
        let pending = events.iter().filter(|e| e.double_point().is_some()).count();
        let triples = events
            .iter()
            .filter(|e| e.kind == CrossingKind::AtInfinity)
            .count();
        // 28 pairs: 4 parallel, 8 meeting in space, 16 disjoint
        assert_eq!((finite, pending, triples), (24, 8, 4));
    }

    #[test]
    fn annotated_points() {
        let events = oxy();
        for (x, y) in [
            (2, 0),
            (-2, 0),
            (5, 3),
            (-5, -3),
            (3, 3),
            (-3, -3),
            (3, 5),
            (-3, -5),
        ] {
            assert_eq!(
                at(&events, x, y).resolution,
                Resolution::Crossing(Sign::Positive)
            );
        }
        let mut labels = at(&events, 5, 3).strands.clone();
        labels.sort();
        assert_eq!(labels, vec![LineLabel::Ell(1), LineLabel::EllPrime(3)]);
        assert_eq!(
            at(&events, 3, 1).resolution,
            Resolution::DoublePoint(DoublePoint::Q(0))
        );
        assert_eq!(
            at(&events, -3, -1).resolution,
            Resolution::DoublePoint(DoublePoint::Q(2))
        );
        assert_eq!(
            at(&events, 3, -1).resolution,
            Resolution::DoublePoint(DoublePoint::P(0))
        );
    }

    #[test]
    fn over_strand_is_higher() {
        // at (2, 0): l'0 has z = -1/2, l'3 has z = 1/2
        let events = oxy();
        let e = at(&events, 2, 0);
        assert_eq!(
            e.over_under,
            vec![LineLabel::EllPrime(3), LineLabel::EllPrime(0)]
        );
    }

    #[test]
    fn triples_cover_the_four_parallel_classes() {
        let classes: Vec<String> = oxy()
            .iter()
            .filter(|e| e.kind == CrossingKind::AtInfinity)
            .map(|e| e.sweep_angle.as_ref().unwrap().to_string())
            .collect();
        assert_eq!(classes, vec!["(1, 0)", "(1, 1)", "(0, 1)", "(-1, 1)"]);
        for e in oxy().iter().filter(|e| e.kind == CrossingKind::AtInfinity) {
            assert_eq!(e.strands.len(), 3);
            assert!(e.strands.contains(&LineLabel::AxisLPrime));
        }
    }

    #[test]
    fn oxz_has_no_triples_and_the_same_double_points() {
        let events = project_crossings(&build_configuration(), Projection::Oxz).unwrap();
        assert!(events.iter().all(|e| e.kind == CrossingKind::Finite));
        // l1 and l3 project to x + z = 0 and x = z
        let centre = events.iter().find(|e| e.is_at(0, 0)).unwrap();
        assert_eq!(centre.sweep_angle, None);
        let mut dps: Vec<DoublePoint> = events
            .iter()
            .filter_map(CrossingEvent::double_point)
            .collect();
        dps.sort();
        assert_eq!(dps, DoublePoint::ALL.to_vec());
    }

    #[test]
    fn smoothing_choices() {
        let events = apply_smoothing(&oxy(), &SmoothingChoice::reference()).unwrap();
        assert_eq!(at(&events, 3, 1).sign(), Some(Sign::Negative));
        assert_eq!(at(&events, -3, -1).sign(), None);
        assert!(events
            .iter()
            .all(|e| !matches!(e.resolution, Resolution::DoublePoint(_))));

        let positive = apply_smoothing(&oxy(), &SmoothingChoice::all_positive()).unwrap();
        assert!(positive
            .iter()
            .filter_map(CrossingEvent::sign)
            .all(|s| s == Sign::Positive));

        let mut partial = SmoothingChoice::reference();
        partial.remove(DoublePoint::P(2));
        assert_eq!(
            apply_smoothing(&oxy(), &partial),
            Err(ArrangementError::MissingPerturbation(DoublePoint::P(2)))
        );
    }

    #[test]
    fn json_uses_exact_rationals() {
        let events = oxy();
        let json = crossings_to_json(Projection::Oxy, &events);
        assert_eq!(json["schema"], CROSSINGS_SCHEMA);
        let list = json["crossings"].as_array().unwrap();
        assert_eq!(list.len(), 28);
        let first = list
            .iter()
            .find(|e| e["position"] == serde_json::json!(["2", "0"]))
            .unwrap();
        assert_eq!(first["sign"], 1);
        assert_eq!(first["resolution"], "crossing");
        let triple = list.iter().find(|e| e["kind"] == "at_infinity").unwrap();
        assert_eq!(triple["direction"], serde_json::json!(["1", "0"]));
    }

    #[test]
    fn projection_parsing() {
        assert_eq!("OXY".parse::<Projection>(), Ok(Projection::Oxy));
        assert!("oyz".parse::<Projection>().is_err());
    }
}
