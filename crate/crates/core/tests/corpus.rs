use khqt::analysis::{bundled_corpus, Analysis, TREFOIL_PD, TREFOIL_PERMUTATIONS};
use khqt::poly::jones_from_bracket;
use khqt::verify::{all_passed, verify_default};
use khqt::{parse_pd, Poly, Shading};

const JONES_REFERENCE: &str = include_str!("../data/jones_reference.tsv");

fn reference() -> Vec<(String, Poly)> {
    JONES_REFERENCE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (name, json) = l.split_once('\t').unwrap();
            let terms: Vec<(i64, i64)> = serde_json::from_str(json).unwrap();
            (name.to_string(), Poly::from_terms(terms))
        })
        .collect()
}

#[test]
fn bracket_matches_tabulated_jones() {
    let corpus = bundled_corpus();
    let table = reference();
    assert_eq!(table.len(), corpus.len());
    for e in &corpus {
        let (_, expected) = table.iter().find(|(n, _)| *n == e.name).unwrap();
        assert_eq!(&jones_from_bracket(&e.diagram).unwrap(), expected, "{}", e.name);
    }
}

#[test]
fn verify_suite_passes_on_corpus() {
    for e in bundled_corpus() {
        let checks = verify_default(&e.diagram);
        assert!(all_passed(&checks), "{}: {:#?}", e.name, checks.iter().filter(|c| !c.passed).collect::<Vec<_>>());
    }
}

#[test]
fn three_crossing_code_from_the_docs() {
    let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    assert_eq!(d.writhe(), -3);
    let v = jones_from_bracket(&d).unwrap();
    assert_eq!(v, Poly::from_terms([(-2, 1), (-6, 1), (-8, -1)]));
    let a = Analysis::from_diagram(&d, 16, Shading::Chosen).unwrap();
    let rg = &a.ribbon;
    assert_eq!((2 + rg.edge_count() - rg.vertex_count() - rg.face_count()) % 2, 0);
    let g = a.tait.as_ref().unwrap();
    assert!(g.edges.iter().all(|e| e.sign == g.edges[0].sign));
}

#[test]
fn worked_example_pd_matches_permutation_file() {
    let d = parse_pd(TREFOIL_PD).unwrap();
    let from_pd = Analysis::from_diagram(&d, 16, Shading::Chosen).unwrap();
    let src = khqt::Source::parse_permutations(TREFOIL_PERMUTATIONS).unwrap();
    let from_perm = Analysis::new(&src, 16).unwrap();
    let words = |a: &Analysis| {
        let mut w: Vec<(String, String, i64, i64)> = a
            .quasitrees
            .iter()
            .map(|r| (r.word.ascii(), r.tree.as_ref().unwrap().word.ascii(), r.grading.u, r.grading.v))
            .collect();
        w.sort();
        w
    };
    assert_eq!(words(&from_pd), words(&from_perm));
    assert_eq!(d.writhe(), from_perm.meta.unwrap().writhe);
    assert_eq!(d.c_plus(), from_perm.meta.unwrap().c_plus);
    let g = from_pd.tait.as_ref().unwrap();
    assert_eq!((g.vertex_count, g.e_plus(), g.e_minus()), (3, 2, 2));
    assert_eq!(from_pd.jones(khqt::Calibration::FROZEN).unwrap().equal, Some(true));
}
