//! The full pipeline for one input: ribbon graph, Tait graph, quasi-trees
//! with their chord diagrams and gradings, the paired spanning trees, and
//! the Euler characteristic compared against the bracket.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::linkdiag::{parse_corpus, parse_pd, CorpusEntry, LinkDiagram, Shading, Sign, TaitGraph};
use crate::poly::bracket::normalize_bracket;
use crate::poly::{
    calibrate, euler_characteristic, kauffman_bracket, BigradedTable, Calibration, DiagramMeta,
};
use crate::quasitree::{
    chord_diagram, enumerate_quasitrees, grading, quasitree_to_tree, ActivityWord, Bigrading,
    ChordDiagram, QuasiTree,
};
use crate::ribbon::{PermutationInput, RibbonGraph};
use crate::treemodel::{enumerate_spanning_trees, tree_activities, tree_grading, SpanningTree};
use crate::Poly;

/// Prime knots through nine crossings plus a one-crossing unknot curl.
pub const BUNDLED_CORPUS: &str = include_str!("../data/knots.tsv");

/// The 4-crossing trefoil presented by permutations.
pub const TREFOIL_PERMUTATIONS: &str = include_str!("../data/trefoil4.perm");

/// A PD code for the same 4-crossing trefoil; its Tait graph has
/// `E₊ = E₋ = 2`.
pub const TREFOIL_PD: &str = include_str!("../data/trefoil4.pd");

pub fn bundled_corpus() -> Vec<CorpusEntry> {
    parse_corpus(BUNDLED_CORPUS).expect("bundled corpus parses")
}

/// Where an analysis came from.
#[derive(Clone, Debug)]
pub enum Source {
    Diagram(LinkDiagram),
    Permutations(PermutationInput),
}

impl Source {
    pub fn parse_pd(text: &str) -> Result<Source> {
        Ok(Source::Diagram(parse_pd(text)?))
    }

    pub fn parse_permutations(text: &str) -> Result<Source> {
        Ok(Source::Permutations(PermutationInput::parse(text)?))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiTreeRecord {
    pub quasitree: QuasiTree,
    #[serde(skip)]
    pub chords: ChordDiagram,
    pub word: ActivityWord,
    pub grading: Bigrading,
    /// Paired spanning tree, when edge signs are known.
    pub tree: Option<TreeRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeRecord {
    pub tree: SpanningTree,
    pub word: ActivityWord,
    pub grading: Bigrading,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub name: Option<String>,
    pub diagram: Option<LinkDiagram>,
    pub ribbon: RibbonGraph,
    pub ribbon_genus: usize,
    pub tait: Option<TaitGraph>,
    pub meta: Option<DiagramMeta>,
    pub components: Option<usize>,
    pub quasitrees: Vec<QuasiTreeRecord>,
}

impl Analysis {
    pub fn new(source: &Source, max_edges: usize) -> Result<Analysis> {
        match source {
            Source::Diagram(d) => Self::from_diagram(d, max_edges, Shading::Chosen),
            Source::Permutations(p) => Self::from_permutations(p, max_edges),
        }
    }

    pub fn from_diagram(d: &LinkDiagram, max_edges: usize, shading: Shading) -> Result<Analysis> {
        if d.crossing_count() > max_edges {
            return Err(Error::TooLarge { what: "diagram", got: d.crossing_count(), limit: max_edges });
        }
        let ribbon = RibbonGraph::from_diagram(d)?;
        let tait = TaitGraph::with_shading(d, shading)?;
        let meta = DiagramMeta {
            writhe: d.writhe(),
            c_plus: d.c_plus(),
            ribbon_vertices: ribbon.vertex_count(),
        };
        Self::assemble(None, Some(d.clone()), ribbon, Some(tait), Some(meta), Some(d.component_count()), max_edges)
    }

    pub fn from_permutations(p: &PermutationInput, max_edges: usize) -> Result<Analysis> {
        let ribbon = p.ribbon_graph()?;
        let tait = p.signs.as_ref().map(|s| TaitGraph::from_ribbon(&ribbon, s)).transpose()?;
        let meta = match (p.writhe, p.c_plus) {
            (Some(writhe), Some(c_plus)) => {
                Some(DiagramMeta { writhe, c_plus, ribbon_vertices: ribbon.vertex_count() })
            }
            _ => None,
        };
        Self::assemble(p.name.clone(), None, ribbon, tait, meta, None, max_edges)
    }

    fn assemble(
        name: Option<String>,
        diagram: Option<LinkDiagram>,
        ribbon: RibbonGraph,
        tait: Option<TaitGraph>,
        meta: Option<DiagramMeta>,
        components: Option<usize>,
        max_edges: usize,
    ) -> Result<Analysis> {
        let ribbon_genus = ribbon.genus()?;
        let mut quasitrees = Vec::new();
        for q in enumerate_quasitrees(&ribbon, max_edges)? {
            let chords = chord_diagram(&ribbon, &q)?;
            let word = chords.activity_word();
            let grading = grading(&chords, &q);
            let tree = match &tait {
                Some(g) => {
                    let tree = quasitree_to_tree(&ribbon, &q, g)?;
                    let word = tree_activities(g, &tree);
                    let grading = tree_grading(&word);
                    Some(TreeRecord { tree, word, grading })
                }
                None => None,
            };
            quasitrees.push(QuasiTreeRecord { quasitree: q, chords, word, grading, tree });
        }
        Ok(Analysis { name, diagram, ribbon, ribbon_genus, tait, meta, components, quasitrees })
    }

    pub fn signs(&self) -> Option<Vec<Sign>> {
        self.tait.as_ref().map(TaitGraph::signs)
    }

    /// `Σ x^u y^v` over quasi-trees.
    pub fn generating_polynomial(&self) -> BTreeMap<Bigrading, usize> {
        let mut out = BTreeMap::new();
        for r in &self.quasitrees {
            *out.entry(r.grading).or_insert(0) += 1;
        }
        out
    }

    fn require_knot(&self) -> Result<()> {
        match self.components {
            Some(c) if c != 1 => Err(Error::NotAKnot { components: c }),
            _ => Ok(()),
        }
    }

    pub fn meta(&self) -> Result<DiagramMeta> {
        self.meta.ok_or_else(|| Error::Missing("writhe and c_plus are needed for Khovanov indices".into()))
    }

    /// The bigraded generator table; knots only.
    pub fn table(&self) -> Result<BigradedTable> {
        self.require_knot()?;
        Ok(BigradedTable::from_gradings(self.meta()?, self.quasitrees.iter().map(|r| r.grading)))
    }

    /// Compares the calibrated quasi-tree Euler characteristic with the
    /// Jones polynomial from the bracket (knots given as diagrams).
    pub fn jones(&self, calibration: Calibration) -> Result<JonesComparison> {
        let table = self.table()?;
        let euler = euler_characteristic(&table);
        let calibrated = calibration.apply(&euler)?;
        let bracket = match &self.diagram {
            Some(d) => Some(normalize_bracket(&kauffman_bracket(d)?, d.writhe())?),
            None => None,
        };
        let equal = bracket.as_ref().map(|b| *b == calibrated);
        Ok(JonesComparison { euler, calibrated, bracket, equal, calibration })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JonesComparison {
    /// `Σ (−1)^i q^j`, doubled exponents in `q`.
    pub euler: Poly,
    /// The same after the calibration substitution, in `t`.
    pub calibrated: Poly,
    /// Writhe-normalised bracket in `t`, when a diagram is available.
    pub bracket: Option<Poly>,
    pub equal: Option<bool>,
    pub calibration: Calibration,
}

/// Spanning-tree side of the generating polynomial, `Σ x^{u(T)} y^{v(T) − κ}`
/// with `κ = (V(G) + E₊ − V(RG))/2`.
pub fn tree_generating_polynomial(ribbon: &RibbonGraph, g: &TaitGraph) -> Result<BTreeMap<Bigrading, usize>> {
    let kappa = g.grading_constant(ribbon.vertex_count())?;
    let mut out = BTreeMap::new();
    for t in enumerate_spanning_trees(g)? {
        let b = tree_grading(&tree_activities(g, &t));
        *out.entry(Bigrading { u: b.u, v: b.v - kappa }).or_insert(0) += 1;
    }
    Ok(out)
}

/// The candidate substitutions matching the unknot curl and the trefoil
/// from the bundled corpus.
pub fn calibration_candidates() -> Result<Vec<Calibration>> {
    let corpus = bundled_corpus();
    let mut anchors = Vec::new();
    for name in ["0_1", "3_1"] {
        let entry = corpus
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::Missing(format!("anchor {name} in bundled corpus")))?;
        let a = Analysis::from_diagram(&entry.diagram, crate::quasitree::DEFAULT_MAX_EDGES, Shading::Chosen)?;
        let chi = euler_characteristic(&a.table()?);
        let jones = normalize_bracket(&kauffman_bracket(&entry.diagram)?, entry.diagram.writhe())?;
        anchors.push((chi, jones));
    }
    calibrate(&anchors)
}

/// Edge subset helper for callers holding one-based edge numbers.
pub fn edges_one_based(edges: &[usize]) -> EdgeSet {
    EdgeSet::from_edges(edges.iter().map(|e| e - 1))
}
