use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quasitree::Bigrading;

use super::{Coefficient, LaurentPoly};

/// Diagram data entering the index relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramMeta {
    pub writhe: i64,
    pub c_plus: usize,
    /// Vertex count of the all-A ribbon graph.
    pub ribbon_vertices: usize,
}

/// Khovanov homological degree `i` and quantum degree `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KhIndex {
    pub i: i64,
    pub j: i64,
}

/// Inverts `u = j − i − w + 1`, `v = j/2 − i + (V − c₊)/2`:
/// `j = 2(u + w − 1) − 2v + (V − c₊)`, `i = j − u − w + 1`.
pub fn khovanov_indices(b: Bigrading, meta: &DiagramMeta) -> KhIndex {
    let w = meta.writhe;
    let j = 2 * (b.u + w - 1) - 2 * b.v + (meta.ribbon_vertices as i64 - meta.c_plus as i64);
    KhIndex { i: j - b.u - w + 1, j }
}

pub fn uv_from_indices(k: KhIndex, meta: &DiagramMeta) -> Bigrading {
    let u = k.j - k.i - meta.writhe + 1;
    let twice_v = k.j - 2 * k.i + meta.ribbon_vertices as i64 - meta.c_plus as i64;
    Bigrading { u, v: twice_v.div_euclid(2) }
}

/// Generator counts of the quasi-tree complex by bigrading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedTable {
    pub meta: DiagramMeta,
    #[serde(serialize_with = "counts_as_rows")]
    pub counts: BTreeMap<Bigrading, usize>,
}

fn counts_as_rows<S: serde::Serializer>(
    counts: &BTreeMap<Bigrading, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Row {
        u: i64,
        v: i64,
        count: usize,
    }
    s.collect_seq(counts.iter().map(|(b, &count)| Row { u: b.u, v: b.v, count }))
}

impl BigradedTable {
    pub fn from_gradings<I: IntoIterator<Item = Bigrading>>(meta: DiagramMeta, gradings: I) -> Self {
        let mut counts = BTreeMap::new();
        for b in gradings {
            *counts.entry(b).or_insert(0) += 1;
        }
        BigradedTable { meta, counts }
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Number of distinct `v` values.
    pub fn thickness(&self) -> usize {
        self.counts.keys().map(|b| b.v).collect::<BTreeSet<_>>().len()
    }

    pub fn v_range(&self) -> Option<(i64, i64)> {
        let vs = self.counts.keys().map(|b| b.v);
        Some((vs.clone().min()?, vs.max()?))
    }

    /// `Σ x^u y^v` keyed by `(u, v)`; two tables have the same generating
    /// polynomial iff these maps are equal.
    pub fn generating_polynomial(&self) -> &BTreeMap<Bigrading, usize> {
        &self.counts
    }

    /// Rows `(u, v, i, j, count)`.
    pub fn rows(&self) -> Vec<(Bigrading, KhIndex, usize)> {
        self.counts.iter().map(|(&b, &c)| (b, khovanov_indices(b, &self.meta), c)).collect()
    }
}

/// `Σ (−1)^i q^j` over all generators; doubled exponents in `q`.
pub fn euler_characteristic(table: &BigradedTable) -> LaurentPoly<i64> {
    LaurentPoly::from_terms(table.rows().into_iter().map(|(_, k, c)| {
        let sign = if k.i.rem_euclid(2) == 0 { 1 } else { -1 };
        (2 * k.j, sign * c as i64)
    }))
}

/// Substitution `q^j ↦ ε^{j+s} t^{σ(j+s)/2}` taking the Euler
/// characteristic in `q` to a polynomial in `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Calibration {
    pub epsilon: i8,
    pub sigma: i8,
    pub shift: i64,
}

impl Calibration {
    /// The substitution fixed by [`calibrate`] on the unknot curl and the
    /// trefoil, `q = −t^{1/2}` with quantum degrees raised by one.
    pub const FROZEN: Calibration = Calibration { epsilon: -1, sigma: 1, shift: 1 };

    pub fn apply<C: Coefficient>(&self, p: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        let mut odd = None;
        let out = p.map_exponents(|doubled| {
            if doubled % 2 != 0 {
                odd = Some(doubled);
            }
            let e = doubled / 2 + self.shift;
            (self.epsilon < 0 && e.rem_euclid(2) == 1, self.sigma as i64 * e)
        });
        match odd {
            Some(e) => Err(Error::Invariant(format!("q-exponent {e}/2 is not an integer"))),
            None => Ok(out),
        }
    }

    /// All candidates, `ε, σ ∈ {±1}`, `s ∈ −3..=3`, in a fixed order.
    pub fn candidates() -> Vec<Calibration> {
        let mut out = Vec::new();
        for shift in [0, 1, -1, 2, -2, 3, -3] {
            for sigma in [1, -1] {
                for epsilon in [-1, 1] {
                    out.push(Calibration { epsilon, sigma, shift });
                }
            }
        }
        out
    }
}

/// Every candidate substitution taking each anchor's Euler characteristic
/// (in `q`) to its Jones polynomial (in `t`).
pub fn calibrate(anchors: &[(LaurentPoly<i64>, LaurentPoly<i64>)]) -> Result<Vec<Calibration>> {
    let found: Vec<Calibration> = Calibration::candidates()
        .into_iter()
        .filter(|c| anchors.iter().all(|(chi, jones)| c.apply(chi).as_ref() == Ok(jones)))
        .collect();
    if found.is_empty() {
        return Err(Error::Calibration);
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn meta() -> DiagramMeta {
        DiagramMeta { writhe: -4, c_plus: 0, ribbon_vertices: 1 }
    }

    #[test]
    fn curl_indices() {
        let m = DiagramMeta { writhe: -1, c_plus: 0, ribbon_vertices: 1 };
        let k = khovanov_indices(Bigrading { u: 1, v: 0 }, &m);
        assert_eq!(k, KhIndex { i: 0, j: -1 });
        let t = BigradedTable::from_gradings(m, [Bigrading { u: 1, v: 0 }]);
        let chi = euler_characteristic(&t);
        assert_eq!(chi, LaurentPoly::monomial(-2, 1));
        assert_eq!(Calibration::FROZEN.apply(&chi).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn worked_example_table() {
        let gradings = [(-1, -1), (0, -1), (1, -1), (2, -1), (2, 0)].map(|(u, v)| Bigrading { u, v });
        let t = BigradedTable::from_gradings(meta(), gradings);
        assert_eq!(t.total(), 5);
        assert_eq!(t.thickness(), 2);
        let chi = euler_characteristic(&t);
        assert_eq!(chi.term_count(), 3);
        // left-handed trefoil: t^-1 + t^-3 − t^-4
        let jones = LaurentPoly::from_terms([(-2, 1), (-6, 1), (-8, -1)]);
        assert_eq!(Calibration::FROZEN.apply(&chi).unwrap(), jones);
    }

    #[test]
    fn epsilon_is_invisible_on_knots() {
        let chi = LaurentPoly::from_terms([(-2, 1), (6, -3)]);
        let a = Calibration { epsilon: 1, ..Calibration::FROZEN }.apply(&chi).unwrap();
        let b = Calibration::FROZEN.apply(&chi).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn calibration_fails_on_nonsense() {
        let anchors = [(LaurentPoly::one(), LaurentPoly::monomial(2, 5))];
        assert_eq!(calibrate(&anchors), Err(Error::Calibration));
    }

    proptest! {
        #[test]
        fn indices_round_trip(u in -20i64..20, v in -10i64..=0, w in -15i64..15, cp in 0usize..15, vr in 1usize..15) {
            let m = DiagramMeta { writhe: w, c_plus: cp, ribbon_vertices: vr };
            let b = Bigrading { u, v };
            prop_assert_eq!(uv_from_indices(khovanov_indices(b, &m), &m), b);
        }

        #[test]
        fn u_shift_moves_indices(u in -20i64..20, v in -10i64..=0, d in -5i64..5) {
            let m = meta();
            let a = khovanov_indices(Bigrading { u, v }, &m);
            let b = khovanov_indices(Bigrading { u: u + d, v }, &m);
            prop_assert_eq!(b.j - a.j, 2 * d);
            prop_assert_eq!(b.i - a.i, d);
        }
    }
}
