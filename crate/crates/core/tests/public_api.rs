use braidlink::arrangement::{
    build_configuration, emit_projection_svg, paper_braids, project_crossings, swept_braid,
    Projection, SmoothingChoice, BETA_PRIME_HALF,
};
use braidlink::braid::{BraidWord, Sign};
use braidlink::invariants::{determinant_paths, full_report, link_determinant};
use num_bigint::BigInt;

#[test]
fn parsed_text_round_trips_through_display() {
    for text in ["B3 1 -2 1 -2", "B1", "B9 1 4 5 4 8 -2"] {
        let w = BraidWord::parse(text).unwrap();
        assert_eq!(BraidWord::parse(&w.to_string()).unwrap(), w);
    }
}

#[test]
fn report_combines_both_routes() {
    let w = BraidWord::parse("B3 1 -2 1 -2").unwrap();
    let paths = determinant_paths(&w).unwrap();
    let report = full_report(&w, &[2]).unwrap();
    assert_eq!(report.determinant(), BigInt::from(5));
    assert_eq!(report.determinant_seifert, paths.seifert);
    assert_eq!(report.determinant_burau, paths.burau);
    assert_eq!(report.to_json()["determinant"], 5);
}

#[test]
fn stabilized_mirror_keeps_the_determinant() {
    let w = BraidWord::parse("B4 1 -2 3 1 2 2 -3").unwrap();
    let d = link_determinant(&w).unwrap();
    assert_eq!(link_determinant(&w.mirror()).unwrap(), d);
    assert_eq!(link_determinant(&w.stabilize(Sign::Negative)).unwrap(), d);
    assert_eq!(link_determinant(&w.tau()).unwrap(), d);
}

#[test]
fn construction_reproduces_the_embedded_word() {
    let swept = swept_braid(&SmoothingChoice::reference()).unwrap();
    let fixture = paper_braids().beta_prime;
    assert_eq!(swept, fixture);
    assert_eq!(&swept.letters()[..BETA_PRIME_HALF.len()], BETA_PRIME_HALF);
}

#[test]
fn both_projections_are_drawable() {
    let lines = build_configuration();
    for projection in [Projection::Oxy, Projection::Oxz] {
        assert!(!project_crossings(&lines, projection).unwrap().is_empty());
        let svg = emit_projection_svg(&lines, projection, &SmoothingChoice::reference()).unwrap();
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
