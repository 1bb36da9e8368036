use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::edgeset::{EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::linkdiag::{LinkDiagram, State};

use super::{Coefficient, LaurentPoly};

/// `⟨D⟩ = Σ_s A^{#A(s) − #B(s)} δ^{|s| − 1}`, `δ = −A² − A⁻²`, as a
/// polynomial in `A` (doubled exponents, so `A^k` is stored at `2k`).
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly<i64>> {
    kauffman_bracket_generic(d)
}

pub fn kauffman_bracket_generic<C: Coefficient + Send + From<i32>>(d: &LinkDiagram) -> Result<LaurentPoly<C>> {
    bracket_with_extra_circles(d, 0)
}

/// Bracket of `D` together with `extra` distant unknotted circles.
pub fn bracket_with_extra_circles<C: Coefficient + Send + From<i32>>(
    d: &LinkDiagram,
    extra: usize,
) -> Result<LaurentPoly<C>> {
    let n = d.crossing_count();
    if n > MAX_EDGES {
        return Err(Error::TooLarge { what: "diagram", got: n, limit: MAX_EDGES });
    }
    // (A-count − B-count, circles) → number of states
    let histogram: BTreeMap<(i64, usize), i32> = (0..1u32 << n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut h, mask| {
            let state = State(EdgeSet(mask));
            let b = state.b_count() as i64;
            let circles = d.smoothing_circle_count(state) + extra;
            *h.entry((n as i64 - 2 * b, circles)).or_insert(0) += 1;
            h
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        });
    let delta = LaurentPoly::from_terms([(4, -C::one()), (-4, -C::one())]);
    let mut powers = vec![LaurentPoly::one()];
    let mut total = LaurentPoly::zero();
    for ((shift, circles), count) in histogram {
        while powers.len() < circles {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        let term = powers[circles - 1].shift(2 * shift).scale(&C::from(count));
        total = &total + &term;
    }
    Ok(total)
}

/// `V(t) = (−A³)^{−w} ⟨D⟩` with `A = t^{−1/4}`; doubled exponents in `t`.
pub fn jones_from_bracket(d: &LinkDiagram) -> Result<LaurentPoly<i64>> {
    let bracket = kauffman_bracket(d)?;
    normalize_bracket(&bracket, d.writhe())
}

/// Applies the writhe normalisation to a bracket in `A` and substitutes
/// `A = t^{−1/4}`.
pub fn normalize_bracket<C: Coefficient>(bracket: &LaurentPoly<C>, writhe: i64) -> Result<LaurentPoly<C>> {
    let mut odd = None;
    let out = bracket.map_exponents(|doubled_a| {
        let k = doubled_a / 2 - 3 * writhe;
        if k % 2 != 0 {
            odd = Some(k);
        }
        (writhe.rem_euclid(2) == 1, -k / 2)
    });
    match odd {
        Some(k) => Err(Error::Invariant(format!("normalised bracket has odd exponent A^{k}"))),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::parse_pd;

    type P = LaurentPoly<i64>;

    #[test]
    fn curl_bracket() {
        let d = parse_pd("X(1,2,2,1)").unwrap();
        // negative curl: all-A gives one circle, all-B two
        assert_eq!(kauffman_bracket(&d).unwrap(), P::monomial(-6, -1));
        assert_eq!(jones_from_bracket(&d).unwrap(), P::one());
        assert_eq!(jones_from_bracket(&d.mirror()).unwrap(), P::one());
    }

    #[test]
    fn trefoil_jones() {
        let d = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)").unwrap();
        assert_eq!(d.writhe(), 3);
        // t + t^3 − t^4
        let v = P::from_terms([(2, 1), (6, 1), (8, -1)]);
        assert_eq!(jones_from_bracket(&d).unwrap(), v);
        assert_eq!(jones_from_bracket(&d.mirror()).unwrap(), v.mirror());
    }

    #[test]
    fn split_circle_multiplies_by_delta() {
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let delta = P::from_terms([(4, -1), (-4, -1)]);
        let with: P = bracket_with_extra_circles(&d, 1).unwrap();
        assert_eq!(with, &kauffman_bracket(&d).unwrap() * &delta);
    }

    #[test]
    fn hopf_link_has_half_integer_exponents() {
        let d = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        let v = jones_from_bracket(&d).unwrap();
        assert!(v.terms().all(|(e, _)| e % 2 != 0));
        assert_eq!(v.term_count(), 2);
    }
}
