//! Reproduction checks for the two embedded reference braids.

use braidlink::arrangement::{
    apply_smoothing, build_configuration, project_crossings, swept_half_turn, CrossingKind,
    DoublePoint, Projection, Resolution, SmoothingChoice, BETA_AXIS_STRAND, BETA_PRIME_AXIS_STRAND,
};
use braidlink::braid::BraidWord;
use braidlink::invariants::link_determinant;
use serde::Serialize;

/// Finite crossings of the `Oxy` projection annotated next to the
/// half-turn word, each listed with its antipode.
pub const ANNOTATED_CROSSINGS: [(i64, i64); 16] = [
    (2, 0),
    (-2, 0),
    (5, 3),
    (-5, -3),
    (3, 3),
    (-3, -3),
    (3, 5),
    (-3, -5),
    (0, 2),
    (0, -2),
    (-3, 5),
    (3, -5),
    (-3, 3),
    (3, -3),
    (-5, 3),
    (5, -3),
];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub struct Fixtures {
    pub beta: BraidWord,
    pub beta_prime: BraidWord,
}

fn check(id: usize, name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        id,
        name,
        passed,
        detail,
    }
}

fn determinant_text(w: &BraidWord) -> (Option<i64>, String) {
    match link_determinant(w) {
        Ok(d) => {
            let text = d.to_string();
            (text.parse().ok(), text)
        }
        Err(e) => (None, e.to_string()),
    }
}

/// Component count, whether the strands other than `axis` close up into a
/// single component, and the total linking number of those strands with
/// the axis component.
fn structure(w: &BraidWord, axis: usize) -> (usize, bool, i64) {
    let comps = w.components();
    let axis_id = comps.component_of(axis);
    let curve: Vec<usize> = (1..=w.strand_count())
        .filter(|&s| s != axis)
        .map(|s| comps.component_of(s))
        .collect();
    let single = curve.iter().all(|&c| c == curve[0] && c != axis_id);
    (
        comps.component_count(),
        single,
        w.linking_matrix().total_with(axis_id),
    )
}

pub fn run_checks(fixtures: &Fixtures) -> Vec<Check> {
    let mut checks = Vec::new();

    let (beta_det, beta_text) = determinant_text(&fixtures.beta);
    checks.push(check(
        1,
        "det(closure of beta) = 0",
        beta_det == Some(0),
        format!("computed {beta_text}"),
    ));
    let (prime_det, prime_text) = determinant_text(&fixtures.beta_prime);
    checks.push(check(
        2,
        "det(closure of beta') = 64",
        prime_det == Some(64),
        format!("computed {prime_text}"),
    ));

    let (n_beta, single_beta, lk_beta) = structure(&fixtures.beta, BETA_AXIS_STRAND);
    let (n_prime, single_prime, lk_prime) = structure(&fixtures.beta_prime, BETA_PRIME_AXIS_STRAND);
    checks.push(check(
        3,
        "2 components each, curve strands form one component",
        n_beta == 2 && n_prime == 2 && single_beta && single_prime,
        format!(
            "beta: {n_beta} components (curve {}), beta': {n_prime} components (curve {})",
            if single_beta { "connected" } else { "split" },
            if single_prime { "connected" } else { "split" },
        ),
    ));
    checks.push(check(
        4,
        "lk(curve, axis) equal for beta and beta'",
        lk_beta == lk_prime,
        format!("beta {lk_beta}, beta' {lk_prime}"),
    ));

    let fixture_half = &fixtures.beta_prime.letters()[..fixtures.beta_prime.len().min(29)];
    let (sweep_ok, sweep_detail) = match swept_half_turn(&SmoothingChoice::reference()) {
        Ok(half) if half.letters() == fixture_half => {
            (true, format!("{} letters match", half.len()))
        }
        Ok(half) => (false, format!("swept {half}")),
        Err(e) => (false, e.to_string()),
    };
    checks.push(check(
        5,
        "sweep reproduces the half-turn of beta'",
        sweep_ok,
        sweep_detail,
    ));

    let (geometry_ok, geometry_detail) = annotation_check();
    checks.push(check(
        6,
        "annotated crossings present",
        geometry_ok,
        geometry_detail,
    ));
    checks
}

fn annotation_check() -> (bool, String) {
    let lines = build_configuration();
    let events = match project_crossings(&lines, Projection::Oxy)
        .and_then(|e| apply_smoothing(&e, &SmoothingChoice::reference()))
    {
        Ok(events) => events,
        Err(e) => return (false, e.to_string()),
    };
    let missing: Vec<String> = ANNOTATED_CROSSINGS
        .iter()
        .filter(|&&(x, y)| {
            !events
                .iter()
                .any(|e| e.is_at(x, y) && matches!(e.resolution, Resolution::Crossing(_)))
        })
        .map(|(x, y)| format!("({x},{y})"))
        .collect();
    let q0 = events
        .iter()
        .any(|e| e.is_at(3, 1) && e.double_point() == Some(DoublePoint::Q(0)));
    let q2 = events
        .iter()
        .any(|e| e.is_at(-3, -1) && e.double_point() == Some(DoublePoint::Q(2)));
    let triples = events
        .iter()
        .filter(|e| e.kind == CrossingKind::AtInfinity)
        .count();
    let ok = missing.is_empty() && q0 && q2 && triples == 4;
    let detail = if ok {
        format!(
            "{} crossings, (3,1), (-3,-1), {triples} triples at infinity",
            ANNOTATED_CROSSINGS.len()
        )
    } else {
        format!("missing {missing:?}, q0 {q0}, q2 {q2}, {triples} triples")
    };
    (ok, detail)
}
