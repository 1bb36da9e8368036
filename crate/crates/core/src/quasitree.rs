//! Quasi-trees (one-face spanning subgraphs), their ordered chord
//! diagrams, activities, genus and bigrading, and the correspondence with
//! spanning trees of the Tait graph.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::edgeset::{EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::linkdiag::{Sign, TaitGraph};
use crate::ribbon::RibbonGraph;
use crate::treemodel::{is_spanning_tree, SpanningTree};

/// Default bound on the edge count for exhaustive enumeration.
pub const DEFAULT_MAX_EDGES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuasiTree {
    pub edges: EdgeSet,
    pub genus: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Bigrading {
    pub u: i64,
    pub v: i64,
}

/// Every edge subset with exactly one boundary face, in increasing bitmask
/// order. Subsets whose size falls outside the Euler window
/// `V−1 ≤ |Q| ≤ V−1+2g`, `|Q| ≡ V−1 (mod 2)` are skipped unexamined.
pub fn enumerate_quasitrees(rg: &RibbonGraph, max_edges: usize) -> Result<Vec<QuasiTree>> {
    let n = rg.edge_count();
    let limit = max_edges.min(MAX_EDGES);
    if n > limit {
        return Err(Error::TooLarge { what: "ribbon graph", got: n, limit });
    }
    let v = rg.vertex_count();
    let g = rg.genus()?;
    let lo = v - 1;
    let hi = v - 1 + 2 * g;

    const CHUNK: u64 = 1 << 12;
    let total: u64 = 1 << n;
    let chunks = total.div_ceil(CHUNK);
    let found: Vec<Vec<QuasiTree>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut out = Vec::new();
            for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let size = mask.count_ones() as usize;
                if size < lo || size > hi || !(size - lo).is_multiple_of(2) {
                    continue;
                }
                let q = EdgeSet(mask as u32);
                if rg.face_count_of_subgraph(q) == 1 {
                    out.push(QuasiTree { edges: q, genus: (size - lo) / 2 });
                }
            }
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Wraps an edge set after checking it has one face.
pub fn quasitree_from_edges(rg: &RibbonGraph, edges: EdgeSet) -> Result<QuasiTree> {
    let faces = rg.face_count_of_subgraph(edges);
    if faces != 1 {
        return Err(Error::NotQuasiTree { edges: edges.to_string(), faces });
    }
    let twice = 1 + edges.len() as i64 - rg.vertex_count() as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Invariant(format!("quasi-tree {edges} has 2g = {twice}")));
    }
    Ok(QuasiTree { edges, genus: (twice / 2) as usize })
}

/// The ordered chord diagram of a quasi-tree: its boundary curve, marked by
/// half-edges, with chords joining `2i` and `2i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordDiagram {
    /// Half-edges in the order the boundary walk meets them, starting at 0.
    cyclic_order: Vec<usize>,
    position: Vec<usize>,
    in_quasitree: EdgeSet,
    live: EdgeSet,
}

/// Builds `C_Q`: the unique orbit of `σ₀` off `Q`, `σ₂⁻¹` on `Q`. The walk
/// keeps each vertex disc on its left, following the orientation carried
/// by `σ₀`; the opposite surface orientation would reverse the order
/// without changing any interleaving.
pub fn chord_diagram(rg: &RibbonGraph, q: &QuasiTree) -> Result<ChordDiagram> {
    let m = rg.half_edge_count();
    let mut cyclic_order = Vec::with_capacity(m);
    let mut x = 0;
    loop {
        cyclic_order.push(x);
        x = rg.boundary_step(q.edges, x);
        if x == 0 || cyclic_order.len() > m {
            break;
        }
    }
    if cyclic_order.len() != m {
        return Err(Error::NotQuasiTree {
            edges: q.edges.to_string(),
            faces: rg.face_count_of_subgraph(q.edges),
        });
    }
    Ok(ChordDiagram::from_cyclic_order(cyclic_order, q.edges))
}

impl ChordDiagram {
    /// `cyclic_order` must list every half-edge `0..2n` once.
    pub fn from_cyclic_order(cyclic_order: Vec<usize>, in_quasitree: EdgeSet) -> Self {
        let mut position = vec![0; cyclic_order.len()];
        for (k, &h) in cyclic_order.iter().enumerate() {
            position[h] = k;
        }
        let mut cd = ChordDiagram { cyclic_order, position, in_quasitree, live: EdgeSet::EMPTY };
        cd.live = cd.compute_liveness();
        cd
    }

    pub fn chord_count(&self) -> usize {
        self.cyclic_order.len() / 2
    }

    pub fn cyclic_order(&self) -> &[usize] {
        &self.cyclic_order
    }

    /// One-based marks, as printed.
    pub fn cyclic_order_one_based(&self) -> Vec<usize> {
        self.cyclic_order.iter().map(|h| h + 1).collect()
    }

    pub fn in_quasitree(&self) -> EdgeSet {
        self.in_quasitree
    }

    pub fn live(&self) -> EdgeSet {
        self.live
    }

    pub fn is_live(&self, chord: usize) -> bool {
        self.live.contains(chord)
    }

    /// Endpoint positions of a chord, smaller first.
    pub fn endpoints(&self, chord: usize) -> (usize, usize) {
        let a = self.position[2 * chord];
        let b = self.position[2 * chord + 1];
        (a.min(b), a.max(b))
    }

    /// Chords interleave iff exactly one endpoint of one lies strictly
    /// between the endpoints of the other.
    pub fn interleave(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.endpoints(i);
        let (c, d) = self.endpoints(j);
        let inside = |p: usize| a < p && p < b;
        inside(c) != inside(d)
    }

    fn compute_liveness(&self) -> EdgeSet {
        let n = self.chord_count();
        EdgeSet::from_edges((0..n).filter(|&j| (0..j).all(|i| !self.interleave(i, j))))
    }

    /// Interlacement rows restricted to chords of the quasi-tree.
    fn interlacement_rows(&self) -> Vec<u32> {
        let chords: Vec<usize> = self.in_quasitree.iter().collect();
        chords
            .iter()
            .map(|&i| {
                chords
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| i != j && self.interleave(i, j))
                    .fold(0u32, |row, (k, _)| row | (1 << k))
            })
            .collect()
    }

    /// Genus as half the rank over GF(2) of the interlacement matrix of the
    /// chords in the quasi-tree.
    pub fn genus_from_chords(&self) -> Result<usize> {
        let rank = gf2_rank(self.interlacement_rows());
        if !rank.is_multiple_of(2) {
            return Err(Error::Invariant(format!(
                "interlacement matrix of {} has odd rank {rank}",
                self.in_quasitree
            )));
        }
        Ok(rank / 2)
    }

    pub fn activity_word(&self) -> ActivityWord {
        ActivityWord(
            (0..self.chord_count())
                .map(|e| Activity {
                    in_set: self.in_quasitree.contains(e),
                    live: self.live.contains(e),
                    negative: false,
                })
                .collect(),
        )
    }
}

/// Rank over GF(2) of a matrix given as bitmask rows.
pub fn gf2_rank(mut rows: Vec<u32>) -> usize {
    let mut rank = 0;
    for bit in 0..32 {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank];
        for r in 0..rows.len() {
            if r != rank && rows[r] >> bit & 1 == 1 {
                rows[r] ^= p;
            }
        }
        rank += 1;
    }
    rank
}

/// `u = #{live ∉ Q} − #{live ∈ Q}`, `v = −g(Q)`.
pub fn grading(cd: &ChordDiagram, q: &QuasiTree) -> Bigrading {
    let live_in = cd.live().intersection(q.edges).len() as i64;
    let live_out = cd.live().difference(q.edges).len() as i64;
    Bigrading { u: live_out - live_in, v: -(q.genus as i64) }
}

/// One letter of an activity word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Activity {
    /// Edge lies in the tree or quasi-tree (capital letter).
    pub in_set: bool,
    pub live: bool,
    /// Negative Tait edge (barred letter).
    pub negative: bool,
}

impl Activity {
    fn letter(self, unicode: bool) -> &'static str {
        match (self.in_set, self.live, unicode) {
            (true, true, _) => "L",
            (true, false, _) => "D",
            (false, true, true) => "ℓ",
            (false, true, false) => "l",
            (false, false, _) => "d",
        }
    }
}

/// Activity letters in edge order: capital for edges in the set, `L`/`ℓ`
/// live, `D`/`d` dead, bar for negative edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActivityWord(pub Vec<Activity>);

impl ActivityWord {
    /// ASCII form: `l` for script ell, trailing `'` for a bar.
    pub fn ascii(&self) -> String {
        let mut s = String::new();
        for a in &self.0 {
            s.push_str(a.letter(false));
            if a.negative {
                s.push('\'');
            }
        }
        s
    }

    /// Unicode form: `ℓ`, bars as a combining overline.
    pub fn unicode(&self) -> String {
        let mut s = String::new();
        for a in &self.0 {
            s.push_str(a.letter(true));
            if a.negative {
                s.push('\u{305}');
            }
        }
        s
    }

    /// Marks letters of negative edges with a bar.
    pub fn with_signs(mut self, signs: &[Sign]) -> Self {
        for (a, s) in self.0.iter_mut().zip(signs) {
            a.negative = *s == Sign::Negative;
        }
        self
    }

    pub fn live_set(&self) -> EdgeSet {
        EdgeSet::from_edges(self.0.iter().enumerate().filter(|(_, a)| a.live).map(|(i, _)| i))
    }
}

impl fmt::Display for ActivityWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.unicode())
    }
}

impl Serialize for ActivityWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.unicode())
    }
}

/// `T = (E₊ ∖ Q) ∪ (E₋ ∩ Q)`, i.e. `Q △ E₊`. Fails unless `T` is a
/// spanning tree of `g` and `v(T) + g(Q)` equals the grading constant.
pub fn quasitree_to_tree(rg: &RibbonGraph, q: &QuasiTree, g: &TaitGraph) -> Result<SpanningTree> {
    let t = q.edges.symmetric_difference(g.positive_edges());
    if !is_spanning_tree(g, t) {
        return Err(Error::NotSpanningTree(t.to_string()));
    }
    let tree = SpanningTree { edges: t };
    let kappa = g.grading_constant(rg.vertex_count())?;
    let v_t = tree.positive_count(g) as i64;
    if v_t + q.genus as i64 != kappa {
        return Err(Error::Invariant(format!(
            "v(T) + g(Q) = {} + {} differs from (V(G) + E+ - V(RG))/2 = {kappa}",
            v_t, q.genus
        )));
    }
    Ok(tree)
}

/// Inverse of [`quasitree_to_tree`]: `Q = T △ E₊`.
pub fn tree_to_quasitree(g: &TaitGraph, t: &SpanningTree, rg: &RibbonGraph) -> Result<QuasiTree> {
    quasitree_from_edges(rg, t.edges.symmetric_difference(g.positive_edges()))
}
