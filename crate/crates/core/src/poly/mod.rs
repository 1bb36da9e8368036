//! Exact Laurent polynomials in one variable with half-integer exponents,
//! the Kauffman bracket and Jones polynomial, and the bigraded table of
//! quasi-tree generators with its Euler characteristic.

pub mod bracket;
pub mod grading;

use std::collections::BTreeMap;
use std::fmt::{self, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

pub use bracket::{jones_from_bracket, kauffman_bracket, kauffman_bracket_generic};
pub use grading::{
    calibrate, euler_characteristic, khovanov_indices, uv_from_indices, BigradedTable, Calibration,
    DiagramMeta, KhIndex,
};

/// Everything a coefficient ring needs here.
pub trait Coefficient:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Signed + Display
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Signed + Display
{
}

/// `Σ c_e x^{e/2}`: keys are doubled exponents, zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `c · x^{doubled/2}`.
    pub fn monomial(doubled: i64, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(doubled, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, doubled: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(doubled).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&doubled);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(doubled exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, doubled: i64) -> C {
        self.terms.get(&doubled).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, x)| (e, x.clone() * c.clone())))
    }

    /// Multiplies by `x^{doubled/2}`.
    pub fn shift(&self, doubled: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + doubled, c.clone())).collect() }
    }

    /// `x ↦ x⁻¹`.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Substitutes exponents term by term: the term at doubled exponent `e`
    /// becomes `sign · c` at `f(e).1` where `f(e) = (sign, exponent)`.
    pub fn map_exponents<F: FnMut(i64) -> (bool, i64)>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| {
            let (negate, e2) = f(e);
            (e2, if negate { -c.clone() } else { c.clone() })
        }))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Terms present in exactly one of the two polynomials, or with
    /// different coefficients, as `(doubled exponent, self, other)`.
    pub fn diff(&self, other: &Self) -> Vec<(i64, C, C)> {
        let keys: std::collections::BTreeSet<i64> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.into_iter()
            .filter_map(|e| {
                let (a, b) = (self.coefficient(e), other.coefficient(e));
                (a != b).then_some((e, a, b))
            })
            .collect()
    }

    /// `c*x^e` terms joined by ` + ` and ` - `; half-integer exponents are
    /// written `p/2`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if e == 0 {
                out.push_str(&magnitude.to_string());
            } else {
                out.push_str(&format!("{magnitude}*{var}^{}", exponent_text(e)));
            }
        }
        out
    }
}

fn exponent_text(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl<C: Coefficient> Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("q"))
    }
}

/// JSON form: a list of `[doubled_exponent, coefficient]` pairs.
impl<C: Coefficient + Serialize> Serialize for LaurentPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<C: Coefficient> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: Coefficient> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: Self) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<C: Coefficient> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}
