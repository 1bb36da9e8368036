//! Spanning trees of the signed Tait graph: enumeration, the Matrix-Tree
//! count, Tutte activities and the tree bigrading.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Serialize;

use crate::edgeset::{DisjointSets, EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::linkdiag::{Sign, TaitGraph};
use crate::quasitree::{Activity, ActivityWord, Bigrading};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpanningTree {
    pub edges: EdgeSet,
}

impl SpanningTree {
    pub fn positive_count(&self, g: &TaitGraph) -> usize {
        self.edges.intersection(g.positive_edges()).len()
    }
}

/// True when `t` has `V − 1` edges, none of them closing a cycle.
pub fn is_spanning_tree(g: &TaitGraph, t: EdgeSet) -> bool {
    if t.len() + 1 != g.vertex_count {
        return false;
    }
    let mut dsu = DisjointSets::new(g.vertex_count);
    t.iter().all(|e| e < g.edge_count() && dsu.union(g.edges[e].a, g.edges[e].b))
}

/// All spanning trees in increasing bitmask order, by deletion/contraction
/// over the edges in index order. A branch is cut as soon as the remaining
/// edges can no longer connect the current components.
pub fn enumerate_spanning_trees(g: &TaitGraph) -> Result<Vec<SpanningTree>> {
    if g.edge_count() > MAX_EDGES {
        return Err(Error::TooLarge { what: "Tait graph", got: g.edge_count(), limit: MAX_EDGES });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected { components: 0 });
    }
    let mut out = Vec::new();
    let dsu = DisjointSets::new(g.vertex_count);
    branch(g, 0, EdgeSet::EMPTY, dsu, &mut out);
    out.sort();
    Ok(out)
}

fn branch(g: &TaitGraph, e: usize, chosen: EdgeSet, dsu: DisjointSets, out: &mut Vec<SpanningTree>) {
    if dsu.set_count() == 1 {
        out.push(SpanningTree { edges: chosen });
        return;
    }
    if e == g.edge_count() {
        return;
    }
    let mut reach = dsu.clone();
    for f in &g.edges[e..] {
        reach.union(f.a, f.b);
    }
    if reach.set_count() != 1 {
        return;
    }
    let edge = g.edges[e];
    let mut contracted = dsu.clone();
    if contracted.union(edge.a, edge.b) {
        let mut with = chosen;
        with.insert(e);
        branch(g, e + 1, with, contracted, out);
    }
    branch(g, e + 1, chosen, dsu, out);
}

/// Spanning-tree count as a cofactor of the Laplacian, by fraction-free
/// (Bareiss) elimination. Loops do not contribute.
pub fn count_spanning_trees_matrix_tree(g: &TaitGraph) -> BigInt {
    matrix_tree_count(g)
}

pub fn matrix_tree_count<C>(g: &TaitGraph) -> C
where
    C: Clone + Integer + Signed + From<i32>,
{
    let m = g.vertex_count.saturating_sub(1);
    let mut lap = vec![vec![C::zero(); m]; m];
    for e in g.edges.iter().filter(|e| !e.is_loop()) {
        for (x, y) in [(e.a, e.b), (e.b, e.a)] {
            if x > 0 {
                lap[x - 1][x - 1] = lap[x - 1][x - 1].clone() + C::one();
                if y > 0 {
                    lap[x - 1][y - 1] = lap[x - 1][y - 1].clone() - C::one();
                }
            }
        }
    }
    bareiss_determinant(lap)
}

/// Exact determinant of a square integer matrix.
pub fn bareiss_determinant<C>(mut a: Vec<Vec<C>>) -> C
where
    C: Clone + Integer + Signed + From<i32>,
{
    let n = a.len();
    if n == 0 {
        return C::one();
    }
    let mut sign = C::one();
    let mut prev = C::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = v / prev.clone();
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Edges other than `e` joining the two sides of `T − e`.
pub fn fundamental_cut(g: &TaitGraph, t: EdgeSet, e: usize) -> EdgeSet {
    let mut dsu = DisjointSets::new(g.vertex_count);
    for f in t.iter().filter(|&f| f != e) {
        dsu.union(g.edges[f].a, g.edges[f].b);
    }
    EdgeSet::from_edges((0..g.edge_count()).filter(|&f| {
        f != e && dsu.find(g.edges[f].a) != dsu.find(g.edges[f].b)
    }))
}

/// Tree edges on the path joining the ends of a non-tree edge `e`.
pub fn fundamental_cycle(g: &TaitGraph, t: EdgeSet, e: usize) -> EdgeSet {
    let mut adjacency = vec![Vec::new(); g.vertex_count];
    for f in t.iter() {
        adjacency[g.edges[f].a].push((g.edges[f].b, f));
        adjacency[g.edges[f].b].push((g.edges[f].a, f));
    }
    let (start, goal) = (g.edges[e].a, g.edges[e].b);
    let mut via = vec![None; g.vertex_count];
    let mut seen = vec![false; g.vertex_count];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(y, f) in &adjacency[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((x, f));
                stack.push(y);
            }
        }
    }
    let mut path = EdgeSet::EMPTY;
    let mut x = goal;
    while let Some((prev, f)) = via[x] {
        path.insert(f);
        x = prev;
    }
    path
}

/// A tree edge is live when no lower edge lies in its fundamental cut; a
/// non-tree edge when no lower edge lies in its fundamental cycle.
pub fn tree_activities(g: &TaitGraph, t: &SpanningTree) -> ActivityWord {
    ActivityWord(
        (0..g.edge_count())
            .map(|e| {
                let in_set = t.edges.contains(e);
                let witness = if in_set {
                    fundamental_cut(g, t.edges, e)
                } else {
                    fundamental_cycle(g, t.edges, e)
                };
                Activity {
                    in_set,
                    live: witness.0 & ((1u32 << e) - 1) == 0,
                    negative: g.edges[e].sign == Sign::Negative,
                }
            })
            .collect(),
    )
}

/// `u = #L − #ℓ − #L̄ + #ℓ̄`, `v` = number of positive tree edges.
pub fn tree_grading(word: &ActivityWord) -> Bigrading {
    let mut u = 0;
    let mut v = 0;
    for a in &word.0 {
        if a.live {
            let s = if a.in_set { 1 } else { -1 };
            u += if a.negative { -s } else { s };
        }
        if a.in_set && !a.negative {
            v += 1;
        }
    }
    Bigrading { u, v }
}
