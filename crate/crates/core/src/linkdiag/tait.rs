use crate::edgeset::{DisjointSets, EdgeSet};
use crate::error::{Error, Result};
use crate::ribbon::RibbonGraph;

use super::{LinkDiagram, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TaitEdge {
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
}

impl TaitEdge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

/// Which of the two checkerboard colour classes is shaded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shading {
    /// The class picked by [`TaitGraph::from_diagram`].
    Chosen,
    /// The complementary class (the planar dual, all signs flipped).
    Alternate,
}

/// Signed Tait multigraph: one vertex per shaded region, one edge per
/// crossing in crossing order. An edge is positive when A-smoothing its
/// crossing joins the shaded regions at its ends.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TaitGraph {
    pub vertex_count: usize,
    pub edges: Vec<TaitEdge>,
}

/// Faces of the underlying 4-valent plane graph. Corner `s = 4c + p` is the
/// region between positions `p` and `p + 1` at crossing `c`.
struct Faces {
    of_corner: Vec<usize>,
    count: usize,
}

fn faces(d: &LinkDiagram) -> Result<Faces> {
    let n = d.crossing_count();
    let mut of_corner = vec![usize::MAX; 4 * n];
    let mut count = 0;
    for start in 0..4 * n {
        if of_corner[start] != usize::MAX {
            continue;
        }
        let mut s = start;
        while of_corner[s] == usize::MAX {
            of_corner[s] = count;
            s = d.partner((s & !3) | ((s + 1) & 3));
        }
        if s != start {
            return Err(Error::NonPlanar("face boundary does not close".into()));
        }
        count += 1;
    }
    if count != n + 2 {
        return Err(Error::NonPlanar(format!(
            "{count} faces, a connected plane 4-valent graph with {n} vertices has {}",
            n + 2
        )));
    }
    Ok(Faces { of_corner, count })
}

/// Two-colours the faces so that regions sharing an arc differ.
fn checkerboard(d: &LinkDiagram, f: &Faces) -> Result<Vec<u8>> {
    let n = d.crossing_count();
    let mut adjacency = vec![Vec::new(); f.count];
    for c in 0..n {
        for p in 0..4 {
            let x = f.of_corner[4 * c + p];
            let y = f.of_corner[4 * c + (p + 1) % 4];
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
    }
    let mut colour = vec![u8::MAX; f.count];
    let first = f.of_corner[0];
    colour[first] = 0;
    let mut stack = vec![first];
    while let Some(x) = stack.pop() {
        for &y in &adjacency[x] {
            if colour[y] == u8::MAX {
                colour[y] = 1 - colour[x];
                stack.push(y);
            } else if colour[y] == colour[x] {
                return Err(Error::NonPlanar("regions admit no checkerboard colouring".into()));
            }
        }
    }
    Ok(colour)
}

fn shaded_graph(d: &LinkDiagram, f: &Faces, colour: &[u8], shaded: u8) -> TaitGraph {
    let mut index = vec![usize::MAX; f.count];
    let mut vertex_count = 0;
    for face in 0..f.count {
        if colour[face] == shaded {
            index[face] = vertex_count;
            vertex_count += 1;
        }
    }
    let edges = (0..d.crossing_count())
        .map(|c| {
            let corner = |p: usize| f.of_corner[4 * c + p];
            // A-smoothing opens a channel between corners 1 and 3.
            if colour[corner(1)] == shaded {
                TaitEdge { a: index[corner(1)], b: index[corner(3)], sign: Sign::Positive }
            } else {
                TaitEdge { a: index[corner(0)], b: index[corner(2)], sign: Sign::Negative }
            }
        })
        .collect();
    TaitGraph { vertex_count, edges }
}

impl TaitGraph {
    /// Checkerboard-colours `d` and shades the class with `E₊ ≥ E₋`. On a
    /// tie the class with fewer vertices wins; if that ties too, the class
    /// making edge 1 positive.
    pub fn from_diagram(d: &LinkDiagram) -> Result<TaitGraph> {
        Self::with_shading(d, Shading::Chosen)
    }

    pub fn with_shading(d: &LinkDiagram, shading: Shading) -> Result<TaitGraph> {
        let f = faces(d)?;
        let colour = checkerboard(d, &f)?;
        let g0 = shaded_graph(d, &f, &colour, 0);
        let g1 = shaded_graph(d, &f, &colour, 1);
        let key = |g: &TaitGraph| {
            (
                g.e_plus() as i64 - g.e_minus() as i64,
                -(g.vertex_count as i64),
                g.edges[0].sign == Sign::Positive,
            )
        };
        let (chosen, other) = if key(&g0) >= key(&g1) { (g0, g1) } else { (g1, g0) };
        Ok(match shading {
            Shading::Chosen => chosen,
            Shading::Alternate => other,
        })
    }

    /// Recovers the Tait graph from an all-A ribbon graph and the edge
    /// signs: it is the partial dual with respect to the positive edges.
    /// Its vertices are the boundary components of the spanning subgraph
    /// on the positive edges, and edge `e` joins the components that
    /// contain its two half-edges.
    pub fn from_ribbon(rg: &RibbonGraph, signs: &[Sign]) -> Result<TaitGraph> {
        if signs.len() != rg.edge_count() {
            return Err(Error::Missing(format!(
                "{} edge signs for a ribbon graph with {} edges",
                signs.len(),
                rg.edge_count()
            )));
        }
        let positive = EdgeSet::from_edges(
            signs.iter().enumerate().filter(|(_, &s)| s == Sign::Positive).map(|(e, _)| e),
        );
        let (component, vertex_count) = rg.boundary_components(positive);
        let edges = signs
            .iter()
            .enumerate()
            .map(|(e, &sign)| TaitEdge { a: component[2 * e], b: component[2 * e + 1], sign })
            .collect();
        Ok(TaitGraph { vertex_count, edges })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn e_plus(&self) -> usize {
        self.edges.iter().filter(|e| e.sign == Sign::Positive).count()
    }

    pub fn e_minus(&self) -> usize {
        self.edge_count() - self.e_plus()
    }

    pub fn positive_edges(&self) -> EdgeSet {
        EdgeSet::from_edges(
            self.edges.iter().enumerate().filter(|(_, e)| e.sign == Sign::Positive).map(|(i, _)| i),
        )
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for e in &self.edges {
            dsu.union(e.a, e.b);
        }
        dsu.set_count() == 1
    }

    /// `(V(G) + E₊(G) − V(RG)) / 2`, the constant `v(T) + g(Q)` of every
    /// corresponding tree/quasi-tree pair.
    pub fn grading_constant(&self, ribbon_vertices: usize) -> Result<i64> {
        let twice = self.vertex_count as i64 + self.e_plus() as i64 - ribbon_vertices as i64;
        if twice % 2 != 0 {
            return Err(Error::Invariant(format!(
                "V(G) + E+ - V(RG) = {twice} is odd"
            )));
        }
        Ok(twice / 2)
    }
}
