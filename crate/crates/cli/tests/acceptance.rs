//! Acceptance criteria, one test each. Every test writes a single
//! `[PASS]`/`[FAIL]` line to stderr (uncaptured) before asserting.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use braidlink::arrangement::{
    apply_smoothing, build_configuration, full_turn_from_half, paper_braids, project_crossings,
    sweep_half_turn, swept_braid, CrossingKind, Direction2, DoublePoint, Projection, Resolution,
    SmoothingChoice, BETA_AXIS_STRAND, BETA_PRIME_AXIS_STRAND, BETA_PRIME_HALF,
};
use braidlink::braid::{BraidWord, Sign};
use braidlink::invariants::{determinant_paths, full_report, link_determinant};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn verdict(id: &str, passed: bool, detail: &str) -> bool {
    let tag = if passed { "[PASS]" } else { "[FAIL]" };
    let _ = writeln!(std::io::stderr(), "{tag} {id}: {detail}");
    passed
}

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    let letters = if n < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let i = rng.random_range(1..n as i32);
                if rng.random_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect()
    };
    word(n, &letters)
}

fn det(w: &BraidWord) -> BigInt {
    link_determinant(w).expect("both determinant routes agree")
}

#[test]
fn c1_headline_determinants() {
    let start = Instant::now();
    let b = paper_braids();
    let (beta, beta_prime) = (det(&b.beta), det(&b.beta_prime));
    let elapsed = start.elapsed();
    let passed = beta == BigInt::from(0)
        && beta_prime == BigInt::from(64)
        && elapsed < Duration::from_secs(1);
    assert!(verdict(
        "C1 det(beta) = 0 and det(beta') = 64",
        passed,
        &format!("computed det(beta) = {beta}, det(beta') = {beta_prime} in {elapsed:.2?}"),
    ));
}

#[test]
fn c2_dual_path_agreement() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let trials = 1000;
    let mut mismatches = Vec::new();
    for _ in 0..trials {
        let n = rng.random_range(1..=6);
        let w = random_word(&mut rng, n, 20);
        let paths = determinant_paths(&w).unwrap();
        if paths.seifert.abs() != paths.burau.abs() {
            mismatches.push(w.to_string());
        }
    }
    let elapsed = start.elapsed();
    let passed = mismatches.is_empty() && elapsed < Duration::from_secs(30);
    assert!(verdict(
        "C2 |det(V+V^T)| = |Alexander(-1)|",
        passed,
        &format!(
            "{trials} words, {} mismatches {mismatches:?}, {elapsed:.2?}",
            mismatches.len()
        ),
    ));
}

#[test]
fn c3_markov_invariance() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let pairs = 200;
    let mut failures = Vec::new();
    for _ in 0..pairs {
        let n = rng.random_range(2..=6);
        let w = random_word(&mut rng, n, 20);
        let g = random_word(&mut rng, n, 8);
        let d = det(&w);
        if det(&w.conjugate(&g).unwrap()) != d {
            failures.push(format!("conjugate {w} by {g}"));
        }
        let top = n as i32;
        for sign in [1, -1] {
            let mut appended = w.letters().to_vec();
            appended.push(sign * top);
            let mut prepended = vec![sign * top];
            prepended.extend_from_slice(w.letters());
            for stabilized in [word(n + 1, &appended), word(n + 1, &prepended)] {
                if det(&stabilized) != d {
                    failures.push(format!("stabilize {w} to {stabilized}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let passed = failures.is_empty() && elapsed < Duration::from_secs(30);
    assert!(verdict(
        "C3 Markov invariance",
        passed,
        &format!(
            "{pairs} conjugations, {} stabilizations, failures {failures:?}, {elapsed:.2?}",
            pairs * 4
        ),
    ));
}

#[test]
fn c4_calibration() {
    let hopf = word(2, &[1, 1]);
    let cases = [
        ("trefoil", word(2, &[1, 1, 1]), 3),
        ("figure-eight", word(3, &[1, -2, 1, -2]), 5),
        ("Hopf link", hopf.clone(), 2),
        ("unknot", word(1, &[]), 1),
        ("one-crossing unknot", word(2, &[1]), 1),
        ("2-component unlink", word(2, &[]), 0),
    ];
    let mut detail = Vec::new();
    let mut passed = true;
    for (name, w, expected) in &cases {
        let d = det(w);
        passed &= d == BigInt::from(*expected);
        detail.push(format!("{name} {d}"));
    }
    let lk = hopf.linking_matrix().get(0, 1);
    passed &= lk == 1;
    detail.push(format!("lk(Hopf) {lk}"));
    assert!(verdict(
        "C4 calibration fixtures",
        passed,
        &detail.join(", ")
    ));
}

#[test]
fn c5_structure_of_the_links() {
    let b = paper_braids();
    let mut passed = true;
    let mut detail = Vec::new();
    let mut linking = Vec::new();
    for (name, w, axis) in [
        ("beta", &b.beta, BETA_AXIS_STRAND),
        ("beta'", &b.beta_prime, BETA_PRIME_AXIS_STRAND),
    ] {
        let comps = w.components();
        let axis_id = comps.component_of(axis);
        let curve: BTreeSet<usize> = (1..=9)
            .filter(|&s| s != axis)
            .map(|s| comps.component_of(s))
            .collect();
        let lk = w.linking_matrix().total_with(axis_id);
        passed &= comps.component_count() == 2 && curve.len() == 1 && !curve.contains(&axis_id);
        linking.push(lk);
        detail.push(format!(
            "{name}: {} components, curve strands in {} component(s), lk(curve, axis) = {lk}",
            comps.component_count(),
            curve.len()
        ));
    }
    passed &= linking[0] == linking[1] && linking[0] == 8;
    assert!(verdict(
        "C5 two components, connected curve, lk = 8",
        passed,
        &detail.join("; ")
    ));
}

/// Finite crossings annotated beside the half-turn word.
const ANNOTATED: [(i64, i64); 16] = [
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

#[test]
fn c6_geometry_reproduction() {
    let start = Instant::now();
    let lines = build_configuration();
    let raw = project_crossings(&lines, Projection::Oxy).unwrap();

    let genuine: BTreeSet<(String, String)> = raw
        .iter()
        .filter(|e| {
            matches!(e.resolution, Resolution::Crossing(_)) && e.kind == CrossingKind::Finite
        })
        .map(|e| {
            let (x, y) = e.position().unwrap();
            (x.to_string(), y.to_string())
        })
        .collect();
    let annotated: BTreeSet<(String, String)> = ANNOTATED
        .iter()
        .map(|(x, y)| (x.to_string(), y.to_string()))
        .collect();
    let double_points: BTreeSet<DoublePoint> =
        raw.iter().filter_map(|e| e.double_point()).collect();
    let q_points = raw.iter().any(|e| e.is_at(3, 1)) && raw.iter().any(|e| e.is_at(-3, -1));
    let triples = raw
        .iter()
        .filter(|e| e.kind == CrossingKind::AtInfinity)
        .count();

    let events = apply_smoothing(&raw, &SmoothingChoice::reference()).unwrap();
    let half = sweep_half_turn(&lines, &events, &Direction2::horizontal()).unwrap();
    let full = full_turn_from_half(&half);
    let same_report =
        full_report(&full, &[]).unwrap() == full_report(&paper_braids().beta_prime, &[]).unwrap();
    let elapsed = start.elapsed();

    let passed = genuine == annotated
        && double_points.len() == 8
        && q_points
        && triples == 4
        && half.letters() == BETA_PRIME_HALF
        && same_report
        && elapsed < Duration::from_secs(5);
    assert!(verdict(
        "C6 geometry reproduction",
        passed,
        &format!(
            "{} genuine crossings (annotated set equal: {}), {} double points, {triples} triples, \
             half-turn verbatim: {}, report equal: {same_report}, {elapsed:.2?}",
            genuine.len(),
            genuine == annotated,
            double_points.len(),
            half.letters() == BETA_PRIME_HALF,
        ),
    ));
}

/// Determinant of the all-positive construction, recorded on first
/// computation.
const POSITIVE_VARIANT_DETERMINANT: i64 = 0;

#[test]
fn c7_positive_variant_regression() {
    let w = swept_braid(&SmoothingChoice::all_positive()).unwrap();
    let no_negative = w
        .letters()
        .iter()
        .all(|&e| Sign::of_letter(e) == Sign::Positive);
    let d = det(&w);
    let passed = no_negative
        && d == BigInt::from(POSITIVE_VARIANT_DETERMINANT)
        && w == paper_braids().beta_prime_positive_variant;
    assert!(verdict(
        "C7 all-positive variant",
        passed,
        &format!(
            "{} letters, no negative letters: {no_negative}, determinant {d}",
            w.len()
        ),
    ));
}

#[test]
fn c8_excluded_properties() {
    // Hyperbolicity of the perturbed curve and the (dis)connectedness of its
    // hyperbolicity locus are out of reach here. The stand-in is that the
    // determinant separates the two links.
    let b = paper_braids();
    let (beta, beta_prime) = (det(&b.beta), det(&b.beta_prime));
    let separated =
        beta != beta_prime && (beta == BigInt::from(0) || beta_prime == BigInt::from(0));
    assert!(verdict(
        "C8 excluded (hyperbolicity, H(C) connectivity); stand-in: determinants separate",
        separated,
        &format!("det(beta) = {beta}, det(beta') = {beta_prime}"),
    ));
}
