//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if
//! any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use khqt::analysis::{
    bundled_corpus, calibration_candidates, tree_generating_polynomial, Analysis, Source,
    TREFOIL_PD, TREFOIL_PERMUTATIONS,
};
use khqt::linkdiag::CorpusEntry;
use khqt::poly::{jones_from_bracket, Calibration};
use khqt::quasitree::{tree_to_quasitree, DEFAULT_MAX_EDGES};
use khqt::treemodel::{count_spanning_trees_matrix_tree, enumerate_spanning_trees, tree_activities};
use khqt::{EdgeSet, RibbonGraph, Shading, State, TaitGraph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let corpus = bundled_corpus();
    let analyses: Vec<(String, Analysis)> = corpus
        .iter()
        .map(|e| {
            let a = Analysis::from_diagram(&e.diagram, DEFAULT_MAX_EDGES, Shading::Chosen)
                .unwrap_or_else(|err| panic!("{}: {err}", e.name));
            (e.name.clone(), a)
        })
        .collect();

    let criteria: Vec<(&str, Criterion<'_>)> = vec![
        ("worked example from sigma0 = (15724863)", Box::new(worked_example)),
        ("quasi-trees = spanning trees = Matrix-Tree, bijection round trip", Box::new(|| bijection(&corpus))),
        ("F(H) = |s| for every state of every diagram up to 10 crossings", Box::new(|| state_circles(&corpus))),
        ("chord-rank genus = Euler genus", Box::new(|| genus(&analyses))),
        ("chord liveness = Tutte liveness", Box::new(|| liveness(&analyses))),
        ("v(T) + g(Q) = (V(G) + E+ - V(RG))/2", Box::new(|| grading_constant(&analyses))),
        ("Euler characteristic = Jones polynomial", Box::new(|| jones(&analyses, &corpus))),
        ("0 <= g(Q) <= g(RG), thickness <= g(RG) + 1", Box::new(|| thickness(&analyses))),
        ("generating polynomial invariant under reorderings, swaps, shadings", Box::new(|| invariance(&corpus, &analyses))),
    ];

    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {title}: {detail} ({elapsed:.2}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}. {title}: {detail} ({elapsed:.2}s)", k + 1)
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(f)
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let src = Source::parse_permutations(TREFOIL_PERMUTATIONS).map_err(|e| e.to_string())?;
    let a = Analysis::new(&src, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
    let rg = &a.ribbon;
    ensure(rg.sigma2().to_compact_string() == "(14)(2835)(67)", || {
        format!("sigma2 = {}", rg.sigma2().to_compact_string())
    })?;
    let counts = (rg.vertex_count(), rg.edge_count(), rg.face_count(), a.ribbon_genus);
    ensure(counts == (1, 4, 3, 1), || format!("(V, E, F, g) = {counts:?}"))?;
    ensure(a.quasitrees.len() == 5, || format!("{} quasi-trees", a.quasitrees.len()))?;
    let pairs: BTreeSet<(String, String)> = a
        .quasitrees
        .iter()
        .map(|r| (r.word.unicode(), r.tree.as_ref().map(|t| t.word.unicode()).unwrap_or_default()))
        .collect();
    let bar = |s: &str| s.replace('~', "\u{305}");
    let expected: BTreeSet<(String, String)> = [
        ("LdDd", "ℓDD~d~"),
        ("LdℓD", "ℓDℓ~D~"),
        ("ℓDDd", "LdD~d~"),
        ("ℓDℓD", "Ldℓ~D~"),
        ("ℓℓdd", "LLd~d~"),
    ]
    .iter()
    .map(|(q, t)| (q.to_string(), bar(t)))
    .collect();
    ensure(pairs == expected, || format!("pairs {pairs:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok("sigma2, (V,E,F,g) = (1,4,3,1), five word pairs match".into())
}

fn bijection(corpus: &[CorpusEntry]) -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    single_threaded(|| -> Result<(), String> {
        for e in corpus {
            let a = Analysis::from_diagram(&e.diagram, DEFAULT_MAX_EDGES, Shading::Chosen)
                .map_err(|err| format!("{}: {err}", e.name))?;
            let g = a.tait.as_ref().unwrap();
            let trees = enumerate_spanning_trees(g).map_err(|err| err.to_string())?;
            let det = count_spanning_trees_matrix_tree(g);
            ensure(a.quasitrees.len() == trees.len() && det == trees.len().into(), || {
                format!("{}: {} quasi-trees, {} trees, det {det}", e.name, a.quasitrees.len(), trees.len())
            })?;
            let mut images = Vec::new();
            for r in &a.quasitrees {
                let t = r.tree.as_ref().unwrap().tree;
                let back = tree_to_quasitree(g, &t, &a.ribbon).map_err(|err| format!("{}: {err}", e.name))?;
                ensure(back == r.quasitree, || format!("{}: round trip moves {}", e.name, r.quasitree.edges))?;
                images.push(t);
            }
            images.sort();
            ensure(images == trees, || format!("{}: image is not the tree set", e.name))?;
            total += trees.len();
        }
        Ok(())
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{} diagrams, {total} pairs, single-threaded", corpus.len()))
}

fn state_circles(corpus: &[CorpusEntry]) -> Outcome {
    let mut states = 0u64;
    for e in corpus.iter().filter(|e| e.diagram.crossing_count() <= 10) {
        let rg = RibbonGraph::from_diagram(&e.diagram).map_err(|err| err.to_string())?;
        ensure(rg.vertex_count() == e.diagram.smoothing_circle_count(State::all_a()), || {
            format!("{}: all-A circles differ from V(RG)", e.name)
        })?;
        for mask in 0..1u32 << e.diagram.crossing_count() {
            let faces = rg.face_count_of_subgraph(EdgeSet(mask));
            let circles = e.diagram.smoothing_circle_count(State(EdgeSet(mask)));
            ensure(faces == circles, || format!("{}: B-set {}: {faces} faces, {circles} circles", e.name, EdgeSet(mask)))?;
            states += 1;
        }
    }
    Ok(format!("{states} states"))
}

fn genus(analyses: &[(String, Analysis)]) -> Outcome {
    let mut count = 0;
    for (name, a) in analyses {
        for r in &a.quasitrees {
            let rank_genus = r.chords.genus_from_chords().map_err(|e| format!("{name}: {e}"))?;
            let euler = (1 + r.quasitree.edges.len() as i64 - a.ribbon.vertex_count() as i64) / 2;
            ensure(rank_genus as i64 == euler && r.quasitree.genus as i64 == euler, || {
                format!("{name}: {} rank {rank_genus}, Euler {euler}", r.quasitree.edges)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} quasi-trees"))
}

fn liveness(analyses: &[(String, Analysis)]) -> Outcome {
    let mut edges = 0;
    for (name, a) in analyses {
        let g = a.tait.as_ref().unwrap();
        for r in &a.quasitrees {
            let t = r.tree.as_ref().unwrap();
            let tutte = tree_activities(g, &t.tree).live_set();
            ensure(tutte == r.chords.live(), || {
                format!("{name}: Q = {} chords {} vs T = {} edges {}", r.quasitree.edges, r.chords.live(), t.tree.edges, tutte)
            })?;
            ensure(t.grading.u == r.grading.u, || format!("{name}: u(T) != u(Q) at {}", r.quasitree.edges))?;
            edges += g.edge_count();
        }
    }
    Ok(format!("{edges} edge comparisons"))
}

fn grading_constant(analyses: &[(String, Analysis)]) -> Outcome {
    for (name, a) in analyses {
        let g = a.tait.as_ref().unwrap();
        let kappa = g.grading_constant(a.ribbon.vertex_count()).map_err(|e| format!("{name}: {e}"))?;
        for r in &a.quasitrees {
            let v = r.tree.as_ref().unwrap().grading.v;
            ensure(v + r.quasitree.genus as i64 == kappa, || format!("{name}: pair at {} gives {}", r.quasitree.edges, v + r.quasitree.genus as i64))?;
        }
    }
    let src = Source::parse_permutations(TREFOIL_PERMUTATIONS).map_err(|e| e.to_string())?;
    let a = Analysis::new(&src, DEFAULT_MAX_EDGES).map_err(|e| e.to_string())?;
    let g = a.tait.as_ref().unwrap();
    let kappa = g.grading_constant(a.ribbon.vertex_count()).map_err(|e| e.to_string())?;
    ensure((g.vertex_count, g.e_plus(), kappa) == (3, 2, 2), || {
        format!("worked example: V(G) = {}, E+ = {}, constant {kappa}", g.vertex_count, g.e_plus())
    })?;
    ensure(a.quasitrees.iter().all(|r| r.tree.as_ref().unwrap().grading.v + r.quasitree.genus as i64 == 2), || {
        "worked example pairs".into()
    })?;
    Ok(format!("{} diagrams; worked example constant (3 + 2 - 1)/2 = 2", analyses.len()))
}

fn jones(analyses: &[(String, Analysis)], corpus: &[CorpusEntry]) -> Outcome {
    let candidates = calibration_candidates().map_err(|e| e.to_string())?;
    ensure(candidates.contains(&Calibration::FROZEN), || format!("anchors admit {candidates:?}"))?;
    ensure(candidates.iter().all(|c| (c.sigma, c.shift) == (1, 1)), || format!("anchors admit {candidates:?}"))?;
    let mut knots = 0;
    for ((name, a), e) in analyses.iter().zip(corpus) {
        if !e.diagram.is_knot() {
            continue;
        }
        let j = a.jones(Calibration::FROZEN).map_err(|err| format!("{name}: {err}"))?;
        let bracket = jones_from_bracket(&e.diagram).map_err(|err| err.to_string())?;
        ensure(j.calibrated == bracket, || {
            format!("{name}: quasi-tree sum {} vs bracket {}", j.calibrated.to_text("t"), bracket.to_text("t"))
        })?;
        knots += 1;
    }
    Ok(format!("{knots} knots exact under q^j -> (-1)^(j+1) t^((j+1)/2)"))
}

fn thickness(analyses: &[(String, Analysis)]) -> Outcome {
    for (name, a) in analyses {
        let g = a.ribbon_genus;
        for r in &a.quasitrees {
            ensure(r.quasitree.genus <= g, || format!("{name}: {} genus {} > {g}", r.quasitree.edges, r.quasitree.genus))?;
        }
        let vs: BTreeSet<i64> = a.quasitrees.iter().map(|r| r.grading.v).collect();
        ensure(vs.len() <= g + 1, || format!("{name}: {} v-values, g(RG) = {g}", vs.len()))?;
    }
    Ok(format!("{} diagrams", analyses.len()))
}

fn invariance(corpus: &[CorpusEntry], analyses: &[(String, Analysis)]) -> Outcome {
    const TRIALS: usize = 100;
    let worked = khqt::parse_pd(TREFOIL_PD).map_err(|e| e.to_string())?;
    let worked_analysis = Analysis::from_diagram(&worked, DEFAULT_MAX_EDGES, Shading::Chosen).map_err(|e| e.to_string())?;
    let extra = [CorpusEntry { name: "trefoil-4".into(), diagram: worked }];
    let extra_analysis = [("trefoil-4".to_string(), worked_analysis)];
    let corpus: Vec<&CorpusEntry> = corpus.iter().chain(&extra).collect();
    let analyses: Vec<&(String, Analysis)> = analyses.iter().chain(&extra_analysis).collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut tied = 0;
    let mut reorder_failures: BTreeSet<&str> = BTreeSet::new();
    let mut first_reorder_failure = None;
    let mut other_failures = Vec::new();
    let mut euler_drift = Vec::new();
    for (e, (_, a)) in corpus.iter().zip(&analyses) {
        let base = a.generating_polynomial();
        let base_euler = a.jones(Calibration::FROZEN).map_err(|err| err.to_string())?.euler;
        let n = e.diagram.crossing_count();
        let g = a.tait.as_ref().unwrap();
        let tie = g.e_plus() == g.e_minus();
        tied += tie as usize;
        for trial in 0..TRIALS {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let d = e.diagram.reorder(&order).map_err(|err| err.to_string())?;
            let reordered = Analysis::from_diagram(&d, DEFAULT_MAX_EDGES, Shading::Chosen).map_err(|err| err.to_string())?;
            let p = reordered.generating_polynomial();
            if p != base {
                reorder_failures.insert(e.name.as_str());
                first_reorder_failure.get_or_insert_with(|| format!("{} order {order:?}", e.name));
            }
            let euler = reordered.jones(Calibration::FROZEN).map_err(|err| err.to_string())?.euler;
            if euler != base_euler {
                euler_drift.push(format!("{} order {order:?}", e.name));
            }

            let swaps = EdgeSet(rng.gen::<u32>() & EdgeSet::full(n).0);
            let rg = a.ribbon.swap_marks(swaps);
            let mut swapped = BTreeMap::new();
            for q in khqt::quasitree::enumerate_quasitrees(&rg, DEFAULT_MAX_EDGES).map_err(|err| err.to_string())? {
                let cd = khqt::quasitree::chord_diagram(&rg, &q).map_err(|err| err.to_string())?;
                *swapped.entry(khqt::quasitree::grading(&cd, &q)).or_insert(0) += 1;
            }
            if swapped != base {
                other_failures.push(format!("{} (trial {trial}) swapped at {swaps}", e.name));
            }

            for shading in [Shading::Chosen, Shading::Alternate] {
                let alt = TaitGraph::with_shading(&d, shading).map_err(|err| err.to_string())?;
                let t = tree_generating_polynomial(&reordered.ribbon, &alt).map_err(|err| err.to_string())?;
                if t != p {
                    other_failures.push(format!("{} (trial {trial}) {shading:?} shading, order {order:?}", e.name));
                }
            }
        }
    }
    let summary = format!(
        "{} diagrams x {TRIALS} trials, both shadings on every diagram ({tied} with E+ = E-): reorderings change the polynomial on {} diagrams {:?}, \
         first at {}; swaps and shadings: {} failures; Euler characteristic changed in {} trials",
        corpus.len(),
        reorder_failures.len(),
        reorder_failures,
        first_reorder_failure.as_deref().unwrap_or("-"),
        other_failures.len(),
        euler_drift.len(),
    );
    if reorder_failures.is_empty() && other_failures.is_empty() && euler_drift.is_empty() {
        Ok(summary)
    } else {
        Err(summary)
    }
}
