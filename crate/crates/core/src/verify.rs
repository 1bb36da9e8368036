//! Cross-oracle checks on a single input. Each check reports pass/fail with
//! a counterexample when it fails; none of them stop the others.

use serde::Serialize;

use crate::analysis::{tree_generating_polynomial, Analysis, Source};
use crate::edgeset::EdgeSet;
use crate::error::Error;
use crate::linkdiag::{LinkDiagram, Shading, State, TaitGraph};
use crate::poly::Calibration;
use crate::quasitree::{tree_to_quasitree, DEFAULT_MAX_EDGES};
use crate::ribbon::{PermutationInput, RibbonGraph};
use crate::treemodel::{count_spanning_trees_matrix_tree, enumerate_spanning_trees, tree_activities};

/// Face counts are compared with smoothings over all `2^n` states up to this many crossings.
pub const STATE_CHECK_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, passed: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, passed: false, detail: detail.into() }
    }

    fn from_result(name: &'static str, r: std::result::Result<String, String>) -> Check {
        match r {
            Ok(d) => Check::pass(name, d),
            Err(d) => Check::fail(name, d),
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn verify_source(source: &Source, max_edges: usize, calibration: Calibration) -> Vec<Check> {
    match source {
        Source::Diagram(d) => verify_diagram(d, max_edges, calibration),
        Source::Permutations(p) => verify_permutations(p, max_edges, calibration),
    }
}

pub fn verify_permutations(p: &PermutationInput, max_edges: usize, calibration: Calibration) -> Vec<Check> {
    let mut checks = Vec::new();
    if let Some(s2) = &p.sigma2 {
        match RibbonGraph::from_permutations(p.sigma0.clone(), s2) {
            Ok(_) => checks.push(Check::pass("sigma2", "sigma2 = sigma1 o sigma0^-1")),
            Err(Error::Sigma2Mismatch { orbit }) => {
                checks.push(Check::fail("sigma2", format!("given orbit {orbit} is not an orbit of sigma1 o sigma0^-1")));
                return checks;
            }
            Err(e) => {
                checks.push(Check::fail("sigma2", e.to_string()));
                return checks;
            }
        }
    }
    let analysis = match Analysis::from_permutations(p, max_edges) {
        Ok(a) => a,
        Err(e) => {
            checks.push(Check::fail("construction", e.to_string()));
            return checks;
        }
    };
    checks.extend(analysis_checks(&analysis));
    if analysis.meta.is_some() {
        checks.push(match analysis.jones(calibration) {
            Ok(j) => Check::pass("euler-characteristic", format!("calibrated {}", j.calibrated.to_text("t"))),
            Err(e) => Check::fail("euler-characteristic", e.to_string()),
        });
    }
    checks
}

pub fn verify_diagram(d: &LinkDiagram, max_edges: usize, calibration: Calibration) -> Vec<Check> {
    let mut checks = Vec::new();
    let ribbon = match RibbonGraph::from_diagram(d) {
        Ok(r) => r,
        Err(e) => return vec![Check::fail("ribbon-graph", e.to_string())],
    };
    checks.push(Check::from_result("all-a-circles", {
        let circles = d.smoothing_circle_count(State::all_a());
        if circles == ribbon.vertex_count() {
            Ok(format!("{circles} circles = V(RG)"))
        } else {
            Err(format!("all-A state has {circles} circles, ribbon graph {} vertices", ribbon.vertex_count()))
        }
    }));
    checks.push(state_circles(d, &ribbon));

    let g = match TaitGraph::from_diagram(d) {
        Ok(g) => g,
        Err(e) => {
            checks.push(Check::fail("tait-graph", e.to_string()));
            return checks;
        }
    };
    checks.push(Check::from_result("tait-partial-dual", {
        let dual = TaitGraph::from_ribbon(&ribbon, &g.signs()).map_err(|e| e.to_string());
        dual.and_then(|h| {
            let same = h.vertex_count == g.vertex_count
                && enumerate_spanning_trees(&h).map_err(|e| e.to_string())?
                    == enumerate_spanning_trees(&g).map_err(|e| e.to_string())?;
            if same {
                Ok("checkerboard graph and partial dual of RG have the same spanning trees".into())
            } else {
                Err(format!("checkerboard graph {:?} differs from partial dual {:?}", g, h))
            }
        })
    }));
    checks.push(Check::from_result("shading-flip", {
        TaitGraph::with_shading(d, Shading::Alternate).map_err(|e| e.to_string()).and_then(|alt| {
            let flipped = g.edges.iter().zip(&alt.edges).all(|(x, y)| x.sign == y.sign.flip());
            if flipped && g.e_plus() >= g.e_minus() {
                Ok(format!("E+ = {}, E- = {}", g.e_plus(), g.e_minus()))
            } else {
                Err("alternate shading does not negate every sign".into())
            }
        })
    }));

    let analysis = match Analysis::from_diagram(d, max_edges, Shading::Chosen) {
        Ok(a) => a,
        Err(e) => {
            checks.push(Check::fail("construction", e.to_string()));
            return checks;
        }
    };
    checks.extend(analysis_checks(&analysis));
    checks.push(Check::from_result("alternate-shading", {
        TaitGraph::with_shading(d, Shading::Alternate)
            .and_then(|alt| tree_generating_polynomial(&ribbon, &alt))
            .map_err(|e| e.to_string())
            .and_then(|p| {
                if p == analysis.generating_polynomial() {
                    Ok("tree-side generating polynomial agrees under both shadings".into())
                } else {
                    Err(format!("{p:?} vs {:?}", analysis.generating_polynomial()))
                }
            })
    }));
    checks.push(Check::from_result("mark-swap", {
        let swapped = ribbon.swap_marks(EdgeSet((0..ribbon.edge_count()).step_by(2).fold(0, |m, e| m | 1 << e)));
        crate::quasitree::enumerate_quasitrees(&swapped, max_edges)
            .map_err(|e| e.to_string())
            .and_then(|qs| {
                let mut poly = std::collections::BTreeMap::new();
                for q in qs {
                    let cd = crate::quasitree::chord_diagram(&swapped, &q).map_err(|e| e.to_string())?;
                    *poly.entry(crate::quasitree::grading(&cd, &q)).or_insert(0usize) += 1;
                }
                if poly == analysis.generating_polynomial() {
                    Ok("bigradings unchanged after swapping marks at odd-numbered edges".into())
                } else {
                    Err(format!("{poly:?} vs {:?}", analysis.generating_polynomial()))
                }
            })
    }));
    if d.is_knot() {
        checks.push(match analysis.jones(calibration) {
            Ok(j) if j.equal == Some(true) => {
                Check::pass("jones", format!("V = {}", j.calibrated.to_text("t")))
            }
            Ok(j) => Check::fail(
                "jones",
                format!(
                    "quasi-tree sum {} differs from bracket {}",
                    j.calibrated.to_text("t"),
                    j.bracket.map(|b| b.to_text("t")).unwrap_or_default()
                ),
            ),
            Err(e) => Check::fail("jones", e.to_string()),
        });
    }
    checks
}

fn state_circles(d: &LinkDiagram, ribbon: &RibbonGraph) -> Check {
    let n = d.crossing_count();
    if n > STATE_CHECK_LIMIT {
        return Check::pass("state-circles", format!("skipped above {STATE_CHECK_LIMIT} crossings"));
    }
    for mask in 0..1u32 << n {
        let h = EdgeSet(mask);
        let faces = ribbon.face_count_of_subgraph(h);
        let circles = d.smoothing_circle_count(State(h));
        if faces != circles {
            return Check::fail(
                "state-circles",
                format!("B-set {h}: F(H) = {faces} but the state has {circles} circles"),
            );
        }
    }
    Check::pass("state-circles", format!("F(H) = |s| on all {} states", 1u64 << n))
}

/// Checks that need only the assembled analysis.
pub fn analysis_checks(a: &Analysis) -> Vec<Check> {
    let mut checks = Vec::new();
    let rg = &a.ribbon;
    let q_count = a.quasitrees.len();

    checks.push(Check::from_result("genus", {
        let twice = 2 + rg.edge_count() as i64 - rg.vertex_count() as i64 - rg.face_count() as i64;
        if twice == 2 * a.ribbon_genus as i64 {
            Ok(format!("g(RG) = {}", a.ribbon_genus))
        } else {
            Err(format!("2 - V + E - F = {twice}"))
        }
    }));

    checks.push(Check::from_result("chord-genus", {
        let mut bad = None;
        for r in &a.quasitrees {
            match r.chords.genus_from_chords() {
                Ok(g) if g == r.quasitree.genus => {}
                Ok(g) => bad = Some(format!("{}: chord rank gives {g}, Euler {}", r.quasitree.edges, r.quasitree.genus)),
                Err(e) => bad = Some(e.to_string()),
            }
        }
        bad.map_or(Ok(format!("{q_count} quasi-trees")), Err)
    }));

    checks.push(Check::from_result("thickness", {
        let vs: std::collections::BTreeSet<i64> = a.quasitrees.iter().map(|r| r.grading.v).collect();
        let g = a.ribbon_genus;
        if let Some(r) = a.quasitrees.iter().find(|r| r.quasitree.genus > g) {
            Err(format!("{} has genus {} > g(RG) = {g}", r.quasitree.edges, r.quasitree.genus))
        } else if vs.len() > g + 1 {
            Err(format!("{} distinct v values exceed g(RG) + 1 = {}", vs.len(), g + 1))
        } else {
            Ok(format!("{} distinct v values, g(RG) + 1 = {}", vs.len(), g + 1))
        }
    }));

    let Some(g) = &a.tait else {
        return checks;
    };
    let trees = enumerate_spanning_trees(g);
    checks.push(Check::from_result("tree-count", {
        let det = count_spanning_trees_matrix_tree(g);
        match &trees {
            Ok(t) if t.len() == q_count && det == t.len().into() => {
                Ok(format!("{q_count} quasi-trees = {} trees = det {det}", t.len()))
            }
            Ok(t) => Err(format!("{q_count} quasi-trees, {} trees, Matrix-Tree {det}", t.len())),
            Err(e) => Err(e.to_string()),
        }
    }));

    checks.push(Check::from_result("bijection", {
        let mut images: Vec<_> = a.quasitrees.iter().filter_map(|r| r.tree.as_ref().map(|t| t.tree)).collect();
        images.sort();
        let mut bad = None;
        for r in &a.quasitrees {
            let Some(t) = &r.tree else { continue };
            match tree_to_quasitree(g, &t.tree, rg) {
                Ok(q) if q == r.quasitree => {}
                Ok(q) => bad = Some(format!("{} -> {} -> {}", r.quasitree.edges, t.tree.edges, q.edges)),
                Err(e) => bad = Some(e.to_string()),
            }
        }
        match (&trees, bad) {
            (_, Some(b)) => Err(b),
            (Ok(t), None) if *t == images => Ok("Q -> Q xor E+ is a bijection onto spanning trees".into()),
            (Ok(_), None) => Err("image of the quasi-trees is not the set of spanning trees".into()),
            (Err(e), None) => Err(e.to_string()),
        }
    }));

    checks.push(Check::from_result("grading-constant", {
        g.grading_constant(rg.vertex_count()).map_err(|e| e.to_string()).and_then(|kappa| {
            match a.quasitrees.iter().find(|r| {
                r.tree.as_ref().is_some_and(|t| t.grading.v + r.quasitree.genus as i64 != kappa)
            }) {
                Some(r) => Err(format!("pair at {} breaks v(T) + g(Q) = {kappa}", r.quasitree.edges)),
                None => Ok(format!("v(T) + g(Q) = {kappa} for every pair")),
            }
        })
    }));

    checks.push(Check::from_result("liveness", {
        let bad = a.quasitrees.iter().find_map(|r| {
            let t = r.tree.as_ref()?;
            let from_tree = tree_activities(g, &t.tree).live_set();
            (from_tree != r.chords.live()).then(|| {
                format!(
                    "Q = {} live chords {} but T = {} live edges {}",
                    r.quasitree.edges,
                    r.chords.live(),
                    t.tree.edges,
                    from_tree
                )
            })
        });
        bad.map_or(Ok("chord and Tutte liveness agree edge by edge".into()), Err)
    }));

    checks.push(Check::from_result("u-gradings", {
        let bad = a.quasitrees.iter().find_map(|r| {
            let t = r.tree.as_ref()?;
            (t.grading.u != r.grading.u)
                .then(|| format!("Q = {} has u = {}, T = {} has u = {}", r.quasitree.edges, r.grading.u, t.tree.edges, t.grading.u))
        });
        bad.map_or(Ok("u(T) = u(Q) for every pair".into()), Err)
    }));
    checks
}

/// Runs the suite on a diagram with the default limits.
pub fn verify_default(d: &LinkDiagram) -> Vec<Check> {
    verify_diagram(d, DEFAULT_MAX_EDGES, Calibration::FROZEN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::TREFOIL_PERMUTATIONS;
    use crate::linkdiag::parse_pd;

    #[test]
    fn trefoil_permutations_pass() {
        let p = PermutationInput::parse(TREFOIL_PERMUTATIONS).unwrap();
        let checks = verify_permutations(&p, 16, Calibration::FROZEN);
        assert!(all_passed(&checks), "{checks:#?}");
    }

    #[test]
    fn corrupted_sigma2_names_orbit() {
        let text = TREFOIL_PERMUTATIONS.replace("(14)(2835)(67)", "(14)(2853)(67)");
        let p = PermutationInput::parse(&text).unwrap();
        let checks = verify_permutations(&p, 16, Calibration::FROZEN);
        assert!(!all_passed(&checks));
        assert!(checks[0].detail.contains("(2 8 5 3)"), "{}", checks[0].detail);
    }

    #[test]
    fn small_diagrams_pass() {
        for code in ["X(1,2,2,1)", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)", "X(1,3,2,4) X(3,1,4,2)"] {
            let checks = verify_default(&parse_pd(code).unwrap());
            assert!(all_passed(&checks), "{code}: {checks:#?}");
        }
    }
}
