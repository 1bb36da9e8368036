//! Oriented ribbon graphs as permutation triples `(σ₀, σ₁, σ₂)` on the
//! half-edges `{0, …, 2n-1}`: `σ₀` rotates half-edges around vertices,
//! `σ₁` pairs `2e` with `2e + 1`, and `σ₂ = σ₁ ∘ σ₀⁻¹` walks faces.

use crate::edgeset::{DisjointSets, EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::linkdiag::{LinkDiagram, Sign};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    sigma0: Permutation,
    sigma0_inv: Permutation,
    sigma2: Permutation,
    sigma2_inv: Permutation,
}

/// The half-edge paired with `h` by `σ₁`.
#[inline]
pub fn sigma1(h: usize) -> usize {
    h ^ 1
}

impl RibbonGraph {
    /// Completes `σ₀` to a ribbon graph. The domain must be `{1..2n}`.
    pub fn from_sigma0(sigma0: Permutation) -> Result<Self> {
        let m = sigma0.len();
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::InvalidPermutation(format!(
                "sigma0 acts on {m} points; a ribbon graph needs 2n > 0"
            )));
        }
        if m / 2 > MAX_EDGES {
            return Err(Error::TooLarge { what: "ribbon graph", got: m / 2, limit: MAX_EDGES });
        }
        let sigma0_inv = sigma0.inverse();
        let sigma2 = Permutation::from_images(
            (0..m).map(|h| sigma1(sigma0_inv.apply(h)) as u32).collect(),
        )?;
        let sigma2_inv = sigma2.inverse();
        Ok(RibbonGraph { sigma0, sigma0_inv, sigma2, sigma2_inv })
    }

    /// Like [`from_sigma0`](Self::from_sigma0) but also checks a supplied
    /// `σ₂` against `σ₁ ∘ σ₀⁻¹`.
    pub fn from_permutations(sigma0: Permutation, sigma2: &Permutation) -> Result<Self> {
        let rg = Self::from_sigma0(sigma0)?;
        if sigma2.len() != rg.sigma2.len() {
            return Err(Error::Sigma2Mismatch {
                orbit: format!("sigma2 acts on {} points, expected {}", sigma2.len(), rg.sigma2.len()),
            });
        }
        if let Some(bad) = sigma2
            .cycles()
            .into_iter()
            .find(|c| c.iter().any(|&h| rg.sigma2.apply(h) != sigma2.apply(h)))
        {
            let inner: Vec<String> = bad.iter().map(|h| (h + 1).to_string()).collect();
            return Err(Error::Sigma2Mismatch { orbit: format!("({})", inner.join(" ")) });
        }
        Ok(rg)
    }

    /// The all-A ribbon graph of a diagram.
    ///
    /// Vertices are the circles of the all-A state. At crossing `i` the
    /// smoothing arc through positions (0,1) carries half-edge `2i` and the
    /// arc through (2,3) carries `2i + 1`. Circles are oriented so that the
    /// two arcs at every crossing run antiparallel across the A-channel
    /// (the band is untwisted); the circle through half-edge 0 runs from
    /// position 0 to position 1. `σ₀` lists half-edges along each circle.
    pub fn from_diagram(d: &LinkDiagram) -> Result<Self> {
        let n = d.crossing_count();
        let m = 2 * n;
        let half_edge = |slot: usize| 2 * (slot / 4) + ((slot & 3) >> 1);
        let forward_entry = |h: usize| 4 * (h / 2) + 2 * (h & 1);

        let mut circle = vec![usize::MAX; m];
        // whether the walk entered the arc at its even position
        let mut forward = vec![false; m];
        let mut next = vec![0usize; m];
        let mut circles = 0;
        for start in 0..m {
            if circle[start] != usize::MAX {
                continue;
            }
            let mut h = start;
            let mut entry = forward_entry(start);
            loop {
                circle[h] = circles;
                forward[h] = entry & 1 == 0;
                let exit = entry ^ 1;
                let next_entry = d.partner(exit);
                let g = half_edge(next_entry);
                next[h] = g;
                if g == start {
                    break;
                }
                h = g;
                entry = next_entry;
            }
            circles += 1;
        }

        // Orientation per circle: `flip[c]` reverses the walk above.
        let mut flip: Vec<Option<bool>> = vec![None; circles];
        flip[circle[0]] = Some(!forward[0]);
        let mut queue = vec![circle[0]];
        let mut by_circle: Vec<Vec<usize>> = vec![Vec::new(); circles];
        for h in 0..m {
            by_circle[circle[h]].push(h);
        }
        while let Some(c) = queue.pop() {
            let fc = flip[c].unwrap();
            for &h in &by_circle[c] {
                let g = sigma1(h);
                let want = forward[h] ^ fc ^ forward[g];
                match flip[circle[g]] {
                    None => {
                        flip[circle[g]] = Some(want);
                        queue.push(circle[g]);
                    }
                    Some(f) if f != want => {
                        return Err(Error::Invariant(format!(
                            "all-A state surface is not orientable at crossing {}",
                            h / 2 + 1
                        )))
                    }
                    _ => {}
                }
            }
        }

        let mut images = vec![0u32; m];
        for h in 0..m {
            if flip[circle[h]] == Some(true) {
                images[next[h]] = h as u32;
            } else {
                images[h] = next[h] as u32;
            }
        }
        Self::from_sigma0(Permutation::from_images(images)?)
    }

    pub fn edge_count(&self) -> usize {
        self.sigma0.len() / 2
    }

    pub fn half_edge_count(&self) -> usize {
        self.sigma0.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.sigma0.orbit_count()
    }

    pub fn face_count(&self) -> usize {
        self.sigma2.orbit_count()
    }

    pub fn sigma0(&self) -> &Permutation {
        &self.sigma0
    }

    pub fn sigma1(&self) -> Permutation {
        Permutation::from_images((0..self.half_edge_count()).map(|h| sigma1(h) as u32).collect())
            .expect("fixed-point-free involution")
    }

    pub fn sigma2(&self) -> &Permutation {
        &self.sigma2
    }

    #[inline]
    pub fn sigma0_apply(&self, h: usize) -> usize {
        self.sigma0.apply(h)
    }

    #[inline]
    pub fn sigma0_inv_apply(&self, h: usize) -> usize {
        self.sigma0_inv.apply(h)
    }

    #[inline]
    pub fn sigma2_inv_apply(&self, h: usize) -> usize {
        self.sigma2_inv.apply(h)
    }

    /// Boundary walk of the spanning subgraph `h`: `σ₂⁻¹` on half-edges of
    /// edges in `h`, `σ₀` elsewhere.
    #[inline]
    pub fn boundary_step(&self, h: EdgeSet, half_edge: usize) -> usize {
        if h.contains(half_edge / 2) {
            self.sigma2_inv.apply(half_edge)
        } else {
            self.sigma0.apply(half_edge)
        }
    }

    /// Whether `⟨σ₀, σ₁⟩` acts transitively.
    pub fn is_connected(&self) -> bool {
        let mut dsu = DisjointSets::new(self.half_edge_count());
        for h in 0..self.half_edge_count() {
            dsu.union(h, self.sigma0.apply(h));
            dsu.union(h, sigma1(h));
        }
        dsu.set_count() == 1
    }

    /// `g = (2 − V + E − F) / 2`; defined for connected graphs only.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Invariant("genus of a disconnected ribbon graph".into()));
        }
        let twice = 2 + self.edge_count() as i64 - self.vertex_count() as i64 - self.face_count() as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(Error::Invariant(format!(
                "Euler formula gives 2g = {twice} (V={}, E={}, F={})",
                self.vertex_count(),
                self.edge_count(),
                self.face_count()
            )));
        }
        Ok((twice / 2) as usize)
    }

    /// Faces of the spanning subgraph on the edges in `h`: the orbit count
    /// of the boundary walk. Disconnected subgraphs are allowed.
    pub fn face_count_of_subgraph(&self, h: EdgeSet) -> usize {
        let m = self.half_edge_count();
        let mut seen: u64 = 0;
        let mut orbits = 0;
        for start in 0..m {
            if seen >> start & 1 == 1 {
                continue;
            }
            orbits += 1;
            let mut x = start;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                x = self.boundary_step(h, x);
            }
        }
        orbits
    }

    /// Labels each half-edge with its boundary component in the spanning
    /// subgraph on `h`; returns the labels and the component count.
    pub fn boundary_components(&self, h: EdgeSet) -> (Vec<usize>, usize) {
        let m = self.half_edge_count();
        let mut label = vec![usize::MAX; m];
        let mut count = 0;
        for start in 0..m {
            if label[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while label[x] == usize::MAX {
                label[x] = count;
                x = self.boundary_step(h, x);
            }
            count += 1;
        }
        (label, count)
    }

    /// Relabels `2i ↔ 2i + 1` at every edge `i` in `edges`.
    pub fn swap_marks(&self, edges: EdgeSet) -> RibbonGraph {
        let tau = Permutation::from_images(
            (0..self.half_edge_count())
                .map(|h| if edges.contains(h / 2) { sigma1(h) as u32 } else { h as u32 })
                .collect(),
        )
        .expect("product of disjoint transpositions");
        RibbonGraph::from_sigma0(self.sigma0.conjugate_by(&tau)).expect("conjugate keeps the domain")
    }
}

/// The contents of a permutation input file.
///
/// ```text
/// # comment
/// name = trefoil-4
/// sigma0 = (1 5 7 2 4 8 6 3)
/// sigma2 = (1 4)(2 8 3 5)(6 7)   # optional; checked against sigma1 o sigma0^-1
/// signs = + + - -                # optional Tait edge signs
/// writhe = -4                    # optional diagram data for gradings
/// c_plus = 0
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationInput {
    pub name: Option<String>,
    pub sigma0: Permutation,
    pub sigma2: Option<Permutation>,
    pub signs: Option<Vec<Sign>>,
    pub writhe: Option<i64>,
    pub c_plus: Option<usize>,
}

impl PermutationInput {
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut sigma0_text = None;
        let mut sigma2_text = None;
        let mut signs = None;
        let mut writhe = None;
        let mut c_plus = None;
        let mut offset = 0;
        for line in text.lines() {
            let at = offset;
            offset += line.len() + 1;
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Syntax { offset: at, message };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key = value, got {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "sigma0" => sigma0_text = Some((at, value.to_string())),
                "sigma2" => sigma2_text = Some(value.to_string()),
                "signs" => {
                    signs = Some(
                        value
                            .split_whitespace()
                            .flat_map(|tok| tok.chars())
                            .filter(|c| *c != ',')
                            .map(|c| match c {
                                '+' => Ok(Sign::Positive),
                                '-' => Ok(Sign::Negative),
                                other => Err(bad(format!("bad sign {other:?}"))),
                            })
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "writhe" => writhe = Some(value.parse().map_err(|_| bad(format!("bad writhe {value:?}")))?),
                "c_plus" => c_plus = Some(value.parse().map_err(|_| bad(format!("bad c_plus {value:?}")))?),
                other => return Err(bad(format!("unknown key {other:?}"))),
            }
        }
        let (at, s0) = sigma0_text.ok_or_else(|| Error::Missing("sigma0 line".into()))?;
        let sigma0 = Permutation::parse_cycles(&s0, None).map_err(|e| match e {
            Error::Syntax { offset, message } => Error::Syntax { offset: at + offset, message },
            other => other,
        })?;
        let sigma2 = sigma2_text
            .map(|t| Permutation::parse_cycles(&t, Some(sigma0.len())))
            .transpose()?;
        if let Some(s) = &signs {
            if 2 * s.len() != sigma0.len() {
                return Err(Error::Missing(format!(
                    "{} signs given for {} edges",
                    s.len(),
                    sigma0.len() / 2
                )));
            }
        }
        Ok(PermutationInput { name, sigma0, sigma2, signs, writhe, c_plus })
    }

    pub fn ribbon_graph(&self) -> Result<RibbonGraph> {
        match &self.sigma2 {
            Some(s2) => RibbonGraph::from_permutations(self.sigma0.clone(), s2),
            None => RibbonGraph::from_sigma0(self.sigma0.clone()),
        }
    }
}
