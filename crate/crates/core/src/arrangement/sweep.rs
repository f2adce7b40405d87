//! The braid read off by a line rotating about the origin of the `Oxy`
//! projection.
//!
//! At scanning direction `d` the projected line `n·p = c` meets the
//! scanning line at signed distance `r` with `1/r = n·d / c`. Strands are
//! placed at page position `u = 1/r`, ordered by decreasing `u`, so the
//! near points on the positive ray come first, then `L'` at `u = 0`, then
//! the points on the negative ray. A finite crossing at index `i` swaps
//! positions `i` and `i + 1`; the strand moving to `i + 1` is the one whose
//! `u` decreases faster (`du/dθ = n·d⊥ / c` is smaller). The letter is
//! positive when that strand has the larger page height `v = z·u`.
//!
//! This convention reproduces the displayed half-turn word letter for
//! letter, including the index `4` of every `Δ₄₅ = σ₄σ₅σ₄` at infinity.

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::crossings::{
    CrossingEvent, CrossingKind, CrossingLocation, Perturbation, Projection, Resolution,
};
use super::direction::Direction2;
use super::geometry::{DoublePoint, LineLabel, OrientedLine3, Rational};
use crate::braid::{BraidWord, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("the sweep is defined for the oxy projection only, not {0}")]
    UnsupportedProjection(Projection),
    #[error("double point {0} has not been perturbed")]
    UnresolvedDoublePoint(DoublePoint),
    #[error("non-commuting events at the same sweep angle {angle}: {first} and {second}")]
    GenericityViolation {
        angle: String,
        first: String,
        second: String,
    },
    #[error("crossing of {0} lies at the sweep centre")]
    CrossingAtCentre(String),
    #[error("{0} passes through the sweep centre")]
    LineThroughCentre(LineLabel),
    #[error("crossing refers to {0}, which is not among the swept lines")]
    UnknownLine(LineLabel),
}

/// One event met by the scanning line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepStep {
    /// The scanning direction at which the event is met.
    pub angle: Direction2,
    /// Index of the event in the input list.
    pub event: usize,
    /// Lowest strand position involved (1-based).
    pub position: usize,
    /// Braid letters contributed, empty for a smoothing.
    pub letters: Vec<i32>,
}

/// A projected line `n·p = c` in page coordinates.
struct PageLine {
    label: LineLabel,
    normal: (Rational, Rational),
    offset: Rational,
    line: OrientedLine3,
}

impl PageLine {
    fn new(line: &OrientedLine3) -> Result<Self, SweepError> {
        let normal = (-line.direction[1].clone(), line.direction[0].clone());
        let offset = &normal.0 * &line.base.x + &normal.1 * &line.base.y;
        if offset.is_zero() {
            return Err(SweepError::LineThroughCentre(line.label));
        }
        Ok(PageLine {
            label: line.label,
            normal,
            offset,
            line: line.clone(),
        })
    }

    /// `u = 1/r` at scanning direction `d`.
    fn u(&self, d: &Direction2) -> Rational {
        (&self.normal.0 * d.x() + &self.normal.1 * d.y()) / &self.offset
    }

    /// `du/dθ` at scanning direction `d`.
    fn du(&self, d: &Direction2) -> Rational {
        (&self.normal.1 * d.x() - &self.normal.0 * d.y()) / &self.offset
    }

    /// Height `z` above the projected point `(x, y)`.
    fn z_at(&self, x: &Rational, y: &Rational) -> Rational {
        let [dx, dy, _] = &self.line.direction;
        let t = if dx.is_zero() {
            (y - &self.line.base.y) / dy
        } else {
            (x - &self.line.base.x) / dx
        };
        self.line.point_at(&t).z
    }
}

struct Sweeper {
    lines: Vec<PageLine>,
}

impl Sweeper {
    fn new(lines: &[OrientedLine3]) -> Result<Self, SweepError> {
        Ok(Sweeper {
            lines: lines.iter().map(PageLine::new).collect::<Result<_, _>>()?,
        })
    }

    fn line(&self, label: LineLabel) -> Result<&PageLine, SweepError> {
        self.lines
            .iter()
            .find(|l| l.label == label)
            .ok_or(SweepError::UnknownLine(label))
    }

    fn strand_count(&self) -> usize {
        self.lines.len() + 1
    }

    /// Strand position and letters of `event` met at direction `d`.
    fn step(
        &self,
        event: &CrossingEvent,
        index: usize,
        d: &Direction2,
    ) -> Result<SweepStep, SweepError> {
        let pair: Vec<&PageLine> = event
            .strands
            .iter()
            .filter(|&&l| l != LineLabel::AxisLPrime)
            .map(|&l| self.line(l))
            .collect::<Result<_, _>>()?;
        let others = || {
            self.lines
                .iter()
                .filter(|l| pair.iter().all(|p| p.label != l.label))
        };

        let (position, letters) = match (&event.kind, &event.location) {
            (CrossingKind::AtInfinity, _) => {
                let position = 1 + others().filter(|l| l.u(d).is_positive()).count();
                let i = position as i32;
                let s = event.sign().map_or(1, Sign::as_i32);
                (position, vec![s * i, s * (i + 1), s * i])
            }
            (CrossingKind::Finite, CrossingLocation::Point(x, y)) => {
                let u = pair[0].u(d);
                let position =
                    1 + others().filter(|l| l.u(d) > u).count() + usize::from(u.is_negative());
                let sign = match event.resolution {
                    Resolution::DoublePoint(dp) => {
                        return Err(SweepError::UnresolvedDoublePoint(dp))
                    }
                    Resolution::Perturbed(_, Perturbation::Smoothing) => None,
                    Resolution::Perturbed(_, Perturbation::Crossing(s)) => Some(s),
                    Resolution::Crossing(_) => Some(page_sign(pair[0], pair[1], d, x, y)),
                };
                let letters = sign.map_or_else(Vec::new, |s| vec![s.as_i32() * position as i32]);
                (position, letters)
            }
            (CrossingKind::Finite, CrossingLocation::Infinity(_)) => {
                unreachable!("finite crossings carry a point")
            }
        };
        Ok(SweepStep {
            angle: d.clone(),
            event: index,
            position,
            letters,
        })
    }

    fn run(
        &self,
        events: &[CrossingEvent],
        start: &Direction2,
        full_turn: bool,
    ) -> Result<Vec<SweepStep>, SweepError> {
        let mut steps = Vec::new();
        for (index, event) in events.iter().enumerate() {
            if event.projection != Projection::Oxy {
                return Err(SweepError::UnsupportedProjection(event.projection));
            }
            let forward = event.sweep_angle.clone().ok_or_else(|| {
                let labels: Vec<String> = event.strands.iter().map(ToString::to_string).collect();
                SweepError::CrossingAtCentre(labels.join("/"))
            })?;
            let backward = forward.opposite();
            if full_turn {
                steps.push(self.step(event, index, &forward)?);
                steps.push(self.step(event, index, &backward)?);
            } else if forward.in_half_turn_from(start) {
                steps.push(self.step(event, index, &forward)?);
            } else {
                steps.push(self.step(event, index, &backward)?);
            }
        }
        steps.sort_by(|a, b| {
            a.angle
                .cmp_from(&b.angle, start)
                .then(a.position.cmp(&b.position))
        });
        check_generic(&steps, events)?;
        Ok(steps)
    }

    fn word(&self, steps: &[SweepStep]) -> BraidWord {
        let letters = steps
            .iter()
            .flat_map(|s| s.letters.iter().copied())
            .collect();
        BraidWord::new(self.strand_count(), letters)
            .expect("sweep positions stay within the strand count")
    }
}

/// Sign of the letter for a genuine crossing at `(x, y)` met at `d`.
fn page_sign(a: &PageLine, b: &PageLine, d: &Direction2, x: &Rational, y: &Rational) -> Sign {
    let (outgoing, incoming) = if a.du(d) < b.du(d) { (a, b) } else { (b, a) };
    let u = a.u(d);
    let v_out = outgoing.z_at(x, y) * &u;
    let v_in = incoming.z_at(x, y) * &u;
    if v_out > v_in {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Events met at one angle must act on disjoint strands, so that their
/// order does not matter.
fn check_generic(steps: &[SweepStep], events: &[CrossingEvent]) -> Result<(), SweepError> {
    let span = |s: &SweepStep| {
        let width = s
            .letters
            .iter()
            .map(|e| e.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        (s.position, width + 1)
    };
    let describe = |s: &SweepStep| {
        let labels: Vec<String> = events[s.event]
            .strands
            .iter()
            .map(ToString::to_string)
            .collect();
        labels.join("/")
    };
    for (i, a) in steps.iter().enumerate() {
        if a.letters.is_empty() {
            continue;
        }
        for b in steps[i + 1..].iter().take_while(|b| b.angle == a.angle) {
            if b.letters.is_empty() {
                continue;
            }
            let ((_, a_hi), (b_lo, _)) = (span(a), span(b));
            if b_lo <= a_hi {
                return Err(SweepError::GenericityViolation {
                    angle: a.angle.to_string(),
                    first: describe(a),
                    second: describe(b),
                });
            }
        }
    }
    Ok(())
}

/// Sweep steps over the half-turn `[start, start + 180°)`.
pub fn sweep_half_turn_steps(
    lines: &[OrientedLine3],
    events: &[CrossingEvent],
    start: &Direction2,
) -> Result<Vec<SweepStep>, SweepError> {
    Sweeper::new(lines)?.run(events, start, false)
}

/// The braid on `lines.len() + 1` strands (the last extra strand is `L'`)
/// read over the half-turn `[start, start + 180°)`. Each crossing is met
/// exactly once: a finite crossing at `X` is met at direction `X` or `-X`.
pub fn sweep_half_turn(
    lines: &[OrientedLine3],
    events: &[CrossingEvent],
    start: &Direction2,
) -> Result<BraidWord, SweepError> {
    let sweeper = Sweeper::new(lines)?;
    let steps = sweeper.run(events, start, false)?;
    Ok(sweeper.word(&steps))
}

/// The braid read over a full turn, meeting every crossing twice.
///
/// The same braid as [`full_turn_from_half`] of the half-turn word, though
/// commuting letters met at one angle may come out in another order.
pub fn sweep_full_turn(
    lines: &[OrientedLine3],
    events: &[CrossingEvent],
    start: &Direction2,
) -> Result<BraidWord, SweepError> {
    let sweeper = Sweeper::new(lines)?;
    let steps = sweeper.run(events, start, true)?;
    Ok(sweeper.word(&steps))
}

/// `half · τ(half)`: in the second half-turn the scanning line's
/// orientation is reversed, which reverses the order of the strands.
pub fn full_turn_from_half(half: &BraidWord) -> BraidWord {
    half.concat(&half.tau())
        .expect("τ preserves the strand count")
}

/// Page-height sign of each genuine crossing as met in the half-turn,
/// in sweep order. Used to cross-check the diagram signs.
pub fn page_signs(
    lines: &[OrientedLine3],
    events: &[CrossingEvent],
    start: &Direction2,
) -> Result<Vec<(usize, Sign)>, SweepError> {
    let sweeper = Sweeper::new(lines)?;
    let steps = sweeper.run(events, start, false)?;
    Ok(steps
        .iter()
        .filter(|s| {
            let e = &events[s.event];
            e.kind == CrossingKind::Finite && matches!(e.resolution, Resolution::Crossing(_))
        })
        .map(|s| (s.event, Sign::of_letter(s.letters[0])))
        .collect())
}
