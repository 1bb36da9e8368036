//! Link diagrams in planar-diagram (PD) notation, Kauffman states and their
//! smoothings, writhe, and the signed Tait graph.
//!
//! Convention: `X(a,b,c,d)` lists the four arc labels counterclockwise,
//! starting from the incoming under-strand. Positions `0` and `2` carry the
//! under-strand, `1` and `3` the over-strand. A crossing is positive when the
//! over-strand runs from position 3 to position 1 (right-hand rule).
//!
//! Internally every (crossing, position) pair is a *slot* `4c + p`; each arc
//! glues two slots together.

mod tait;

use std::collections::BTreeMap;
use std::fmt;

use crate::edgeset::{DisjointSets, EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};

pub use tait::{Shading, TaitEdge, TaitGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothing {
    A,
    B,
}

/// A Kauffman state: the set of crossings carrying the B-smoothing. Every
/// crossing not in the set is A-smoothed, so the state is always total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct State(pub EdgeSet);

impl State {
    pub fn all_a() -> Self {
        State(EdgeSet::EMPTY)
    }

    pub fn all_b(n: usize) -> Self {
        State(EdgeSet::full(n))
    }

    pub fn smoothing(self, crossing: usize) -> Smoothing {
        if self.0.contains(crossing) {
            Smoothing::B
        } else {
            Smoothing::A
        }
    }

    pub fn b_count(self) -> usize {
        self.0.len()
    }
}

/// A connected link diagram with ordered crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[u32; 4]>,
    signs: Vec<Sign>,
    /// `partner[s]` is the slot at the other end of the arc leaving slot `s`.
    partner: Vec<u32>,
    components: usize,
}

/// Parses PD text: whitespace-separated `X(a,b,c,d)` terms. `#` starts a
/// comment that runs to the end of the line.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let mut crossings = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    let syntax = |offset: usize, message: &str| Error::Syntax {
        offset,
        message: message.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if c != b'X' {
            return Err(syntax(i, "expected 'X('"));
        }
        i += 1;
        let close = match bytes.get(i) {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(syntax(i, "expected '(' after 'X'")),
        };
        let start = i + 1;
        let end = match bytes[start..].iter().position(|&b| b == close) {
            Some(k) => start + k,
            None => return Err(syntax(i, "unclosed crossing term")),
        };
        let fields: Vec<&str> = text[start..end].split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(syntax(start, "a crossing needs exactly four arc labels"));
        }
        let mut arcs = [0u32; 4];
        for (k, f) in fields.iter().enumerate() {
            arcs[k] = f
                .parse::<u32>()
                .map_err(|_| syntax(start, &format!("bad arc label {f:?}")))?;
        }
        crossings.push(arcs);
        i = end + 1;
    }
    LinkDiagram::from_crossings(crossings)
}

impl LinkDiagram {
    /// Validates a crossing list and derives orientation, signs and
    /// component count.
    pub fn from_crossings(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let n = crossings.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        if n > MAX_EDGES {
            return Err(Error::TooLarge { what: "diagram", got: n, limit: MAX_EDGES });
        }
        let mut occurrences: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (c, arcs) in crossings.iter().enumerate() {
            for (p, &a) in arcs.iter().enumerate() {
                occurrences.entry(a).or_default().push(4 * c + p);
            }
        }
        let mut partner = vec![0u32; 4 * n];
        for (&label, slots) in &occurrences {
            if slots.len() != 2 {
                return Err(Error::ArcMultiplicity { label, count: slots.len() });
            }
            partner[slots[0]] = slots[1] as u32;
            partner[slots[1]] = slots[0] as u32;
        }

        let mut dsu = DisjointSets::new(4 * n);
        for s in 0..4 * n {
            dsu.union(s, partner[s] as usize);
            dsu.union(s, s & !3);
        }
        if dsu.set_count() != 1 {
            return Err(Error::Disconnected { components: dsu.set_count() });
        }

        let (entry, components) = orient(&crossings, &partner)?;
        let signs = (0..n)
            .map(|c| if entry[4 * c + 3] { Sign::Positive } else { Sign::Negative })
            .collect();
        Ok(LinkDiagram { crossings, signs, partner, components })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    #[inline]
    pub(crate) fn partner(&self, slot: usize) -> usize {
        self.partner[slot] as usize
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    pub fn c_plus(&self) -> usize {
        self.signs.iter().filter(|&&s| s == Sign::Positive).count()
    }

    pub fn c_minus(&self) -> usize {
        self.crossing_count() - self.c_plus()
    }

    /// Number of circles after smoothing every crossing according to `state`.
    ///
    /// A-smoothing joins positions (0,1) and (2,3); B-smoothing joins (1,2)
    /// and (3,0).
    pub fn smoothing_circle_count(&self, state: State) -> usize {
        let n = self.crossing_count();
        let mut dsu = DisjointSets::new(4 * n);
        for s in 0..4 * n {
            dsu.union(s, self.partner[s] as usize);
        }
        for c in 0..n {
            let base = 4 * c;
            match state.smoothing(c) {
                Smoothing::A => {
                    dsu.union(base, base + 1);
                    dsu.union(base + 2, base + 3);
                }
                Smoothing::B => {
                    dsu.union(base + 1, base + 2);
                    dsu.union(base + 3, base);
                }
            }
        }
        dsu.set_count()
    }

    /// The same diagram with every crossing changed (over and under
    /// swapped). Orientation is kept, so every sign flips.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], s)| match s {
                // over-strand enters at position 3
                Sign::Positive => [d, a, b, c],
                Sign::Negative => [b, c, d, a],
            })
            .collect();
        LinkDiagram::from_crossings(crossings).expect("a crossing change keeps a diagram valid")
    }

    /// Reorders crossings: crossing `k` of the result is crossing
    /// `order[k]` of `self`.
    pub fn reorder(&self, order: &[usize]) -> Result<LinkDiagram> {
        let n = self.crossing_count();
        let mut seen = vec![false; n];
        for &k in order {
            if k >= n || std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidPermutation(format!("{order:?} is not an ordering of 0..{n}")));
            }
        }
        if order.len() != n {
            return Err(Error::InvalidPermutation(format!("{order:?} is not an ordering of 0..{n}")));
        }
        LinkDiagram::from_crossings(order.iter().map(|&k| self.crossings[k]).collect())
    }

    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|[a, b, c, d]| format!("X({a},{b},{c},{d})"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Orients every component. Returns, for every slot, whether the oriented
/// strand enters its crossing through that slot, plus the component count.
fn orient(crossings: &[[u32; 4]], partner: &[u32]) -> Result<(Vec<bool>, usize)> {
    let slots = partner.len();
    let mut visited = vec![false; slots];
    let mut entry = vec![false; slots];
    let mut components = 0;
    for start in 0..slots {
        if visited[start] {
            continue;
        }
        components += 1;
        // Walk the component, entering at `start`.
        let mut entries = Vec::new();
        let mut s = start;
        loop {
            let exit = (s & !3) | ((s + 2) & 3);
            visited[s] = true;
            visited[exit] = true;
            entries.push(s);
            s = partner[exit] as usize;
            if s == start {
                break;
            }
        }
        let mut forward: Option<bool> = None;
        for &s in &entries {
            let here = match s & 3 {
                0 => Some(true),
                2 => Some(false),
                _ => None,
            };
            if let Some(h) = here {
                match forward {
                    None => forward = Some(h),
                    Some(f) if f != h => {
                        return Err(Error::InconsistentOrientation { crossing: s / 4 + 1 })
                    }
                    _ => {}
                }
            }
        }
        let forward = forward.unwrap_or_else(|| {
            // Over-only component: keep the direction in which arc labels
            // increase.
            let labels: Vec<u32> = entries.iter().map(|&e| crossings[e / 4][e & 3]).collect();
            let (min, max) = (*labels.iter().min().unwrap(), *labels.iter().max().unwrap());
            let s = entries[0];
            let exit = (s & !3) | ((s + 2) & 3);
            let (label_in, label_out) = (crossings[s / 4][s & 3], crossings[exit / 4][exit & 3]);
            !(label_in == label_out + 1 || (label_in == min && label_out == max && min != max))
        });
        for &s in &entries {
            if forward {
                entry[s] = true;
            } else {
                entry[(s & !3) | ((s + 2) & 3)] = true;
            }
        }
    }
    Ok((entry, components))
}

/// One entry of a corpus file (`name<TAB>pdcode` per line).
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub diagram: LinkDiagram,
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (name, code) = line.split_once('\t').ok_or_else(|| Error::Corpus {
            line: k + 1,
            message: "expected name<TAB>pdcode".into(),
        })?;
        let diagram = parse_pd(code).map_err(|e| Error::Corpus { line: k + 1, message: e.to_string() })?;
        out.push(CorpusEntry { name: name.trim().to_string(), diagram });
    }
    Ok(out)
}
