//! Permutations of `{0, …, m-1}`, read and written in one-based cycle
//! notation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    map: Vec<u32>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { map: (0..m as u32).collect() }
    }

    /// Builds a permutation from its image table, `map[i] = π(i)`.
    pub fn from_images(map: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &x in &map {
            let x = x as usize;
            if x >= map.len() || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "image table {:?} is not a bijection",
                    map
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation on `{0..m}` from zero-based cycles; unlisted
    /// points are fixed.
    pub fn from_cycles(m: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut map: Vec<Option<u32>> = vec![None; m];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= m || y >= m {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside domain 1..={m}",
                        x.max(y) + 1
                    )));
                }
                if map[x].is_some() {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice",
                        x + 1
                    )));
                }
                map[x] = Some(y as u32);
            }
        }
        Ok(Permutation {
            map: map.into_iter().enumerate().map(|(i, y)| y.unwrap_or(i as u32)).collect(),
        })
    }

    /// Parses one-based cycle notation such as `(1 5 7 2)(3 4)` or the
    /// compact `(1572)(34)`. The compact form (no separators anywhere)
    /// reads every digit as its own point. The domain is `1..=max` unless
    /// `domain` is given.
    pub fn parse_cycles(text: &str, domain: Option<usize>) -> Result<Self> {
        let bad = |offset: usize, message: &str| Error::Syntax {
            offset,
            message: message.to_string(),
        };
        let mut raw: Vec<(usize, String)> = Vec::new();
        let mut current: Option<(usize, String)> = None;
        for (i, ch) in text.char_indices() {
            match (ch, current.as_mut()) {
                ('(', None) => current = Some((i, String::new())),
                ('(', Some(_)) => return Err(bad(i, "nested '('")),
                (')', Some(_)) => raw.push(current.take().unwrap()),
                (')', None) => return Err(bad(i, "unmatched ')'")),
                (c, Some((_, body))) if c.is_ascii_digit() || c == ',' || c.is_whitespace() => {
                    body.push(c)
                }
                (c, None) if c.is_whitespace() => {}
                _ => return Err(bad(i, &format!("unexpected character {ch:?}"))),
            }
        }
        if let Some((i, _)) = current {
            return Err(bad(i, "unclosed '('"));
        }
        let compact = raw
            .iter()
            .all(|(_, b)| !b.contains(|c: char| c == ',' || c.is_whitespace()));
        let mut cycles = Vec::with_capacity(raw.len());
        for (offset, body) in &raw {
            let points: Vec<usize> = if compact {
                body.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
            } else {
                body.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().map_err(|_| bad(*offset, "bad integer")))
                    .collect::<Result<_>>()?
            };
            if points.is_empty() {
                return Err(bad(*offset, "empty cycle"));
            }
            if points.contains(&0) {
                return Err(bad(*offset, "points are one-based"));
            }
            cycles.push(points.into_iter().map(|p| p - 1).collect::<Vec<_>>());
        }
        let max = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
        let m = domain.unwrap_or(max);
        Permutation::from_cycles(m, &cycles)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.map.len()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Permutation {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
        }
    }

    /// `τ ∘ self ∘ τ⁻¹` for an involution `τ` given as an image table.
    pub fn conjugate_by(&self, tau: &Permutation) -> Permutation {
        tau.compose(self).compose(&tau.inverse())
    }

    /// Cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn orbit_count(&self) -> usize {
        self.cycles().len()
    }

    /// One-based cycle notation with space separators, fixed points included.
    pub fn to_cycle_string(&self) -> String {
        self.render(" ")
    }

    /// The compact notation `(15724863)`; only unambiguous below 10 points.
    pub fn to_compact_string(&self) -> String {
        if self.len() < 10 {
            self.render("")
        } else {
            self.render(" ")
        }
    }

    fn render(&self, sep: &str) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", inner.join(sep))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}
