use khqt::analysis::{bundled_corpus, Analysis};
use khqt::poly::jones_from_bracket;
use khqt::quasitree::{chord_diagram, enumerate_quasitrees};
use khqt::{Calibration, EdgeSet, Permutation, RibbonGraph, Shading, State};
use proptest::prelude::*;

fn arb_sigma0() -> impl Strategy<Value = Permutation> {
    (1usize..=6).prop_flat_map(|n| {
        Just((0..2 * n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap())
    })
}

fn connected(rg: &RibbonGraph) -> bool {
    rg.is_connected()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sigma0_round_trip(s in arb_sigma0()) {
        let rg = RibbonGraph::from_sigma0(s.clone()).unwrap();
        prop_assert_eq!(rg.sigma0(), &s);
        prop_assert_eq!(rg.sigma2(), &rg.sigma1().compose(&s.inverse()));
    }

    #[test]
    fn subgraph_euler_characteristic_is_even(s in arb_sigma0(), mask in any::<u32>()) {
        let rg = RibbonGraph::from_sigma0(s).unwrap();
        let h = EdgeSet(mask & EdgeSet::full(rg.edge_count()).0);
        prop_assert_eq!(rg.face_count_of_subgraph(EdgeSet::EMPTY), rg.vertex_count());
        prop_assert_eq!(rg.face_count_of_subgraph(EdgeSet::full(rg.edge_count())), rg.face_count());
        // V − E + F of every spanning subgraph is even, componentwise 2 − 2g
        let chi = rg.vertex_count() as i64 - h.len() as i64 + rg.face_count_of_subgraph(h) as i64;
        prop_assert_eq!(chi.rem_euclid(2), 0);
    }

    #[test]
    fn relabelling_keeps_orbit_counts(s in arb_sigma0(), swaps in any::<u32>(), seed in any::<u64>()) {
        let rg = RibbonGraph::from_sigma0(s).unwrap();
        let n = rg.edge_count();
        let mut order: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (x >> 33) as usize % (i + 1));
        }
        // edge e goes to order[e], with its ends swapped if the bit is set
        let images: Vec<u32> = (0..2 * n)
            .map(|h| (2 * order[h / 2] + ((h & 1) ^ (swaps >> (h / 2) & 1) as usize)) as u32)
            .collect();
        let tau = Permutation::from_images(images).unwrap();
        let other = RibbonGraph::from_sigma0(rg.sigma0().conjugate_by(&tau)).unwrap();
        prop_assert_eq!(other.vertex_count(), rg.vertex_count());
        prop_assert_eq!(other.face_count(), rg.face_count());
        prop_assert_eq!(other.is_connected(), rg.is_connected());
    }

    #[test]
    fn chord_genus_matches_euler_genus(s in arb_sigma0()) {
        let rg = RibbonGraph::from_sigma0(s).unwrap();
        prop_assume!(connected(&rg));
        let g = rg.genus().unwrap();
        let qs = enumerate_quasitrees(&rg, 16).unwrap();
        prop_assert!(!qs.is_empty());
        for q in qs {
            let cd = chord_diagram(&rg, &q).unwrap();
            prop_assert_eq!(cd.genus_from_chords().unwrap(), q.genus);
            prop_assert!(q.genus <= g);
            prop_assert!(cd.is_live(0));
        }
    }

    #[test]
    fn swapping_marks_keeps_gradings(s in arb_sigma0(), swaps in any::<u32>()) {
        let rg = RibbonGraph::from_sigma0(s).unwrap();
        prop_assume!(connected(&rg));
        let other = rg.swap_marks(EdgeSet(swaps & EdgeSet::full(rg.edge_count()).0));
        let gradings = |r: &RibbonGraph| {
            let mut v: Vec<_> = enumerate_quasitrees(r, 16).unwrap().into_iter().map(|q| {
                let cd = chord_diagram(r, &q).unwrap();
                (q.edges, khqt::quasitree::grading(&cd, &q))
            }).collect();
            v.sort();
            v
        };
        prop_assert_eq!(gradings(&rg), gradings(&other));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reordered_corpus_diagrams_keep_jones_and_bijection(index in 0usize..85, seed in any::<u64>(), state in any::<u32>()) {
        let corpus = bundled_corpus();
        let e = &corpus[index % corpus.len()];
        let n = e.diagram.crossing_count();
        let mut order: Vec<usize> = (0..n).collect();
        let mut x = seed;
        for i in (1..n).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (x >> 33) as usize % (i + 1));
        }
        let d = e.diagram.reorder(&order).unwrap();
        prop_assert_eq!(jones_from_bracket(&d).unwrap(), jones_from_bracket(&e.diagram).unwrap());
        let a = Analysis::from_diagram(&d, 16, Shading::Chosen).unwrap();
        prop_assert_eq!(a.jones(Calibration::FROZEN).unwrap().equal, Some(true));
        let rg = &a.ribbon;
        let s = State(EdgeSet(state & EdgeSet::full(n).0));
        prop_assert_eq!(rg.face_count_of_subgraph(s.0), d.smoothing_circle_count(s));
    }

    #[test]
    fn one_smoothing_change_moves_circles_by_one(index in 0usize..85, state in any::<u32>(), c in 0usize..9) {
        let corpus = bundled_corpus();
        let d = &corpus[index % corpus.len()].diagram;
        let n = d.crossing_count();
        let s = EdgeSet(state & EdgeSet::full(n).0);
        let mut t = s;
        t.0 ^= 1 << (c % n);
        let a = d.smoothing_circle_count(State(s)) as i64;
        let b = d.smoothing_circle_count(State(t)) as i64;
        prop_assert_eq!((a - b).abs(), 1);
    }
}
