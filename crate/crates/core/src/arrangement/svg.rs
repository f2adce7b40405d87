//! Schematic SVG drawing of a projected arrangement.
//!
//! The viewport is the square `[-7, 7]²`. Each line is drawn black where
//! the dropped coordinate is positive and grey where it is negative. At a
//! genuine crossing the under strand is interrupted by a halo around the
//! over strand. Coordinates are rounded from exact rationals, so the output
//! is byte-for-byte deterministic.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::crossings::{
    apply_smoothing, project_crossings, ArrangementError, CrossingEvent, CrossingKind,
    Perturbation, Projection, Resolution, SmoothingChoice,
};
use super::geometry::{rat, OrientedLine3, Rational};

const HALF_WIDTH: i64 = 7;
const PIXELS_PER_UNIT: i64 = 40;
const POSITIVE_TONE: &str = "#000000";
const NEGATIVE_TONE: &str = "#a0a0a0";

/// Rounds to two decimals, half away from zero.
fn decimal(q: &Rational) -> String {
    let scaled = q * rat(100);
    let (n, d) = (scaled.numer().abs(), scaled.denom().clone());
    let rounded: BigInt = Integer::div_floor(&(&n * 2 + &d), &(&d * 2));
    let (int, frac) = rounded.div_rem(&BigInt::from(100));
    let sign = if scaled.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if frac.is_zero() {
        format!("{sign}{int}")
    } else {
        let frac = format!("{frac:02}");
        format!("{sign}{int}.{}", frac.trim_end_matches('0'))
    }
}

fn screen(p: &(Rational, Rational)) -> (String, String) {
    let px = (&p.0 + rat(HALF_WIDTH)) * rat(PIXELS_PER_UNIT);
    let py = (rat(HALF_WIDTH) - &p.1) * rat(PIXELS_PER_UNIT);
    (decimal(&px), decimal(&py))
}

fn tone(value: &Rational) -> (&'static str, &'static str) {
    if value.is_negative() {
        ("negative", NEGATIVE_TONE)
    } else {
        ("positive", POSITIVE_TONE)
    }
}

/// Parameter interval of `base + t·dir` inside the viewport, if any.
fn clip(base: &(Rational, Rational), dir: &(Rational, Rational)) -> Option<(Rational, Rational)> {
    let (lo_bound, hi_bound) = (rat(-HALF_WIDTH), rat(HALF_WIDTH));
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (b, d) in [(&base.0, &dir.0), (&base.1, &dir.1)] {
        if d.is_zero() {
            if *b < lo_bound || *b > hi_bound {
                return None;
            }
            continue;
        }
        let (mut t0, mut t1) = ((&lo_bound - b) / d, (&hi_bound - b) / d);
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        lo = Some(lo.map_or(t0.clone(), |l| if t0 > l { t0.clone() } else { l }));
        hi = Some(hi.map_or(t1.clone(), |h| if t1 < h { t1.clone() } else { h }));
    }
    let (lo, hi) = (lo?, hi?);
    (lo < hi).then_some((lo, hi))
}

fn point_at(
    base: &(Rational, Rational),
    dir: &(Rational, Rational),
    t: &Rational,
) -> (Rational, Rational) {
    (&base.0 + t * &dir.0, &base.1 + t * &dir.1)
}

fn segment(
    out: &mut String,
    class: &str,
    stroke: &str,
    width: u32,
    a: &(Rational, Rational),
    b: &(Rational, Rational),
) {
    let ((x1, y1), (x2, y2)) = (screen(a), screen(b));
    let _ = writeln!(
        out,
        r#"    <line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="{width}"/>"#
    );
}

fn draw_line(out: &mut String, line: &OrientedLine3, projection: Projection) {
    let base = projection.plane(&line.base);
    let dir = projection.plane_vector(&line.direction);
    let _ = writeln!(out, r#"  <g class="strand" data-label="{}">"#, line.label);
    if let Some((lo, hi)) = clip(&base, &dir) {
        let comp_base = projection.complementary(&line.base);
        let comp_rate = match projection {
            Projection::Oxy => line.direction[2].clone(),
            Projection::Oxz => line.direction[1].clone(),
        };
        let mut cuts = vec![lo.clone()];
        if !comp_rate.is_zero() {
            let zero = -&comp_base / &comp_rate;
            if zero > lo && zero < hi {
                cuts.push(zero);
            }
        }
        cuts.push(hi);
        for pair in cuts.windows(2) {
            let mid = (&pair[0] + &pair[1]) / rat(2);
            let (class, stroke) = tone(&(&comp_base + &mid * &comp_rate));
            segment(
                out,
                class,
                stroke,
                2,
                &point_at(&base, &dir, &pair[0]),
                &point_at(&base, &dir, &pair[1]),
            );
        }
    }
    out.push_str("  </g>\n");
}

fn inside(p: (&Rational, &Rational)) -> bool {
    let w = rat(HALF_WIDTH);
    p.0.abs() <= w && p.1.abs() <= w
}

/// A short piece of the over strand drawn on a white halo.
fn draw_halo(
    out: &mut String,
    event: &CrossingEvent,
    lines: &[OrientedLine3],
    projection: Projection,
) {
    let Some((x, y)) = event.position() else {
        return;
    };
    let Some(over) = lines.iter().find(|l| l.label == event.over_under[0]) else {
        return;
    };
    let dir = projection.plane_vector(&over.direction);
    let scale = if dir.0.abs() > dir.1.abs() {
        dir.0.abs()
    } else {
        dir.1.abs()
    };
    let step = (&dir.0 / &scale / rat(4), &dir.1 / &scale / rat(4));
    let a = (x - &step.0, y - &step.1);
    let b = (x + &step.0, y + &step.1);

    let [dx, dy, dz] = &over.direction;
    let base = &over.base;
    let t = if !dx.is_zero() {
        (x - &base.x) / dx
    } else if projection == Projection::Oxy {
        (y - &base.y) / dy
    } else {
        (y - &base.z) / dz
    };
    let (class, stroke) = tone(&projection.complementary(&over.point_at(&t)));
    segment(out, "halo", "#ffffff", 8, &a, &b);
    segment(out, class, stroke, 2, &a, &b);
}

fn draw_marker(out: &mut String, event: &CrossingEvent) {
    let Some((x, y)) = event.position() else {
        return;
    };
    let (cx, cy) = screen(&(x.clone(), y.clone()));
    let (class, label) = match event.resolution {
        Resolution::Crossing(_) => ("crossing", String::new()),
        Resolution::DoublePoint(dp) => ("double-point", dp.to_string()),
        Resolution::Perturbed(dp, Perturbation::Crossing(s)) => {
            ("double-point crossing", format!("{dp} ({s})"))
        }
        Resolution::Perturbed(dp, Perturbation::Smoothing) => {
            ("double-point smoothing", dp.to_string())
        }
    };
    let strands: Vec<String> = event.strands.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        r#"    <circle class="{class}" cx="{cx}" cy="{cy}" r="3" data-strands="{}"/>"#,
        strands.join(" ")
    );
    if !label.is_empty() {
        let _ = writeln!(
            out,
            r#"    <text class="label" x="{cx}" y="{cy}" dx="5" dy="-5" font-size="11">{label}</text>"#
        );
    }
}

/// SVG drawing of `lines` projected by `projection`, with the double points
/// resolved by `choice`.
pub fn emit_projection_svg(
    lines: &[OrientedLine3],
    projection: Projection,
    choice: &SmoothingChoice,
) -> Result<String, ArrangementError> {
    let events = apply_smoothing(&project_crossings(lines, projection)?, choice)?;
    let size = 2 * HALF_WIDTH * PIXELS_PER_UNIT;
    let axis = projection.complementary_axis();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}" data-projection="{projection}" data-tone-coordinate="{axis}">"#
    );
    let _ = writeln!(
        out,
        "  <title>{projection} projection; black where {axis} &gt; 0, grey where {axis} &lt; 0</title>"
    );
    let _ = writeln!(
        out,
        r##"  <rect width="{size}" height="{size}" fill="#ffffff"/>"##
    );
    for line in lines {
        draw_line(&mut out, line, projection);
    }
    out.push_str("  <g class=\"halos\">\n");
    for event in &events {
        let genuine = matches!(event.resolution, Resolution::Crossing(_))
            || matches!(
                event.resolution,
                Resolution::Perturbed(_, Perturbation::Crossing(_))
            );
        if event.kind == CrossingKind::Finite && genuine && event.position().is_some_and(inside) {
            draw_halo(&mut out, event, lines, projection);
        }
    }
    out.push_str("  </g>\n  <g class=\"markers\">\n");
    for event in &events {
        if event.kind == CrossingKind::Finite && event.position().is_some_and(inside) {
            draw_marker(&mut out, event);
        }
    }
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::geometry::build_configuration;

    fn emit(projection: Projection) -> String {
        emit_projection_svg(
            &build_configuration(),
            projection,
            &SmoothingChoice::reference(),
        )
        .unwrap()
    }

    #[test]
    fn decimals_are_exact_roundings() {
        let q = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
        assert_eq!(decimal(&q(1, 3)), "0.33");
        assert_eq!(decimal(&q(-1, 3)), "-0.33");
        assert_eq!(decimal(&q(1, 8)), "0.13");
        assert_eq!(decimal(&q(5, 2)), "2.5");
        assert_eq!(decimal(&q(-1, 1000)), "0");
        assert_eq!(decimal(&q(280, 1)), "280");
    }

    #[test]
    fn structure_of_the_oxy_drawing() {
        let svg = emit(Projection::Oxy);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches(r#"<g class="strand""#).count(), 8);
        // every projected line crosses z = 0 inside the viewport
        assert!(svg.contains(r#"class="positive""#) && svg.contains(r#"class="negative""#));
        assert_eq!(svg.matches(r#"<circle class="crossing""#).count(), 16);
        assert_eq!(svg.matches(r#"class="double-point"#).count(), 8);
        assert!(svg.contains("q0 (-1)"));
        assert!(svg.contains(r#"data-tone-coordinate="z""#));
    }

    #[test]
    fn oxz_uses_y_for_the_tone() {
        let svg = emit(Projection::Oxz);
        assert!(svg.contains(r#"data-tone-coordinate="y""#));
        assert!(svg.contains("black where y &gt; 0"));
        assert_eq!(svg.matches(r#"<g class="strand""#).count(), 8);
    }

    #[test]
    fn output_is_deterministic() {
        assert_eq!(emit(Projection::Oxy), emit(Projection::Oxy));
        assert_eq!(emit(Projection::Oxz), emit(Projection::Oxz));
    }

    #[test]
    fn clipping() {
        let base = (rat(3), rat(0));
        assert_eq!(clip(&base, &(rat(0), rat(1))), Some((rat(-7), rat(7))));
        assert_eq!(clip(&(rat(8), rat(0)), &(rat(0), rat(1))), None);
    }
}
