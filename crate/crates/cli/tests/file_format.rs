use std::path::Path;

use liecoh::{load, parse, save, to_text, FileError};
use liecoh_core::catalog;
use liecoh_core::lie::LieAlgebra;
use liecoh_core::rational::int;
use liecoh_core::sl2::sl2;
use proptest::prelude::*;

#[test]
fn shipped_sl2_file_is_sl2() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sl2.json");
    let g = load(&path).unwrap();
    assert_eq!(g, sl2());
    assert_eq!(g.name(), "sl2");
    assert_eq!(to_text(&g), std::fs::read_to_string(&path).unwrap());
}

#[test]
fn bracket_index_out_of_range() {
    let text = r#"{"name": "bad", "dim": 3, "brackets": [[1, 4, [[1, "1"]]]]}"#;
    let err = parse(text).unwrap_err();
    assert!(matches!(err, FileError::Parse { line: 1, .. }), "{err}");
}

#[test]
fn coefficient_index_out_of_range() {
    let text = "{\n\"name\": \"bad\",\n\"dim\": 3,\n\"brackets\": [\n  [1, 2, [[7, \"1\"]]]\n]}";
    match parse(text).unwrap_err() {
        FileError::Parse { line, message, .. } => {
            assert_eq!(line, 5);
            assert!(message.contains("coefficient index 7"));
        }
        other => panic!("{other}"),
    }
}

#[test]
fn duplicate_pair_is_a_parse_error() {
    let text = "{\"name\": \"d\", \"dim\": 2, \"brackets\": [\n[1, 2, []],\n[1, 2, [[1, \"1\"]]]\n]}";
    match parse(text).unwrap_err() {
        FileError::Parse { line, message, .. } => {
            assert_eq!(line, 3);
            assert!(message.contains("twice"));
        }
        other => panic!("{other}"),
    }
}

#[test]
fn jacobi_violation_is_forwarded() {
    // [e1,e2] = e3, [e1,e3] = e1 and nothing else: the triple (e1,e2,e3)
    // picks up [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = [e2, -e1] = e3.
    let text = r#"{"name": "j", "dim": 3, "brackets": [[1, 2, [[3, "1"]]], [1, 3, [[1, "1"]]]]}"#;
    match parse(text).unwrap_err() {
        FileError::JacobiViolation(report) => assert_eq!(report.jacobi_triples(), vec![(0, 1, 2)]),
        other => panic!("{other}"),
    }
}

#[test]
fn catalog_algebras_round_trip_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    for entry in catalog::entries().iter().filter(|e| !e.is_external()) {
        let g = catalog::build_entry(entry).unwrap();
        let path = dir.path().join(format!("{}.json", entry.dim));
        save(&g, &path).unwrap();
        let back = load(&path).unwrap();
        assert_eq!(back, g, "{}", entry.label);
        assert_eq!(back.name(), g.name());
    }
}

#[test]
fn missing_file_is_an_io_error() {
    assert!(matches!(load(Path::new("/nonexistent/algebra.json")), Err(FileError::Io { .. })));
}

fn algebra_from_seed(dim: usize, scales: Vec<i64>) -> LieAlgebra {
    // a direct sum of copies of sl2 (scaled basis) padded with abelian dims
    let copies = dim / 3;
    let mut brackets = Vec::new();
    for c in 0..copies {
        let s = int(scales[c % scales.len()]);
        let (a, b, h) = (3 * c, 3 * c + 1, 3 * c + 2);
        let v = |k: usize, x| {
            let mut out = vec![int(0); dim];
            out[k] = x;
            out
        };
        brackets.push(((a, b), v(h, s.clone())));
        brackets.push(((a, h), v(a, int(-2) * &s)));
        brackets.push(((b, h), v(b, int(2) * &s)));
    }
    LieAlgebra::new("seeded", dim, brackets).unwrap()
}

proptest! {
    #[test]
    fn writer_output_parses_back(dim in 0usize..10, scales in proptest::collection::vec(1i64..50, 1..4)) {
        let g = algebra_from_seed(dim, scales);
        let text = to_text(&g);
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_text(&back), text);
    }
}
