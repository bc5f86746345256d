//! Exact bivariate polynomials with sparse integer-exponent terms, generic
//! over the coefficient scalar. The workspace mostly instantiates these with
//! arbitrary-precision integers and rationals (see the crate-root aliases),
//! but any exact signed scalar works.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{FromPrimitive, Signed};

/// Scalar types usable as polynomial and series coefficients: exact signed
/// arithmetic with equality. Implemented automatically for anything with the
/// right `num-traits` instances, e.g. `i64`, `BigInt`, `BigRational`.
pub trait Coefficient: Signed + FromPrimitive + Clone + Eq + fmt::Debug + fmt::Display {}

impl<T> Coefficient for T where T: Signed + FromPrimitive + Clone + Eq + fmt::Debug + fmt::Display {}

/// Display names for the two variables of a polynomial or series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarPair {
    pub first: char,
    pub second: char,
}

pub const XY: VarPair = VarPair {
    first: 'x',
    second: 'y',
};
pub const UV: VarPair = VarPair {
    first: 'u',
    second: 'v',
};

/// A bivariate polynomial stored as a sparse map from exponent pairs to
/// nonzero coefficients. The map keeps terms in a canonical order, so equal
/// polynomials compare equal structurally.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariatePolynomial<C: Coefficient> {
    terms: BTreeMap<(u32, u32), C>,
    vars: VarPair,
}

impl<C: Coefficient> BivariatePolynomial<C> {
    pub fn zero(vars: VarPair) -> Self {
        BivariatePolynomial {
            terms: BTreeMap::new(),
            vars,
        }
    }

    pub fn one(vars: VarPair) -> Self {
        Self::term(C::one(), 0, 0, vars)
    }

    /// The single term `c * first^i * second^j` (zero if `c` is zero).
    pub fn term(c: C, i: u32, j: u32, vars: VarPair) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivariatePolynomial { terms, vars }
    }

    /// The first variable as a polynomial.
    pub fn var_first(vars: VarPair) -> Self {
        Self::term(C::one(), 1, 0, vars)
    }

    /// The second variable as a polynomial.
    pub fn var_second(vars: VarPair) -> Self {
        Self::term(C::one(), 0, 1, vars)
    }

    pub fn vars(&self) -> VarPair {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `first^i * second^j` (zero when absent).
    pub fn coefficient(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero terms as `((i, j), coefficient)` in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn add_assign_term(&mut self, e: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    slot.insert(sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_assign_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, C::zero() - c.clone()))
                .collect(),
            vars: self.vars,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                out.add_assign_term((i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scaled(&self, c: &C) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, coeff) in self.terms() {
            out.add_assign_term(e, coeff.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at a point, in a possibly larger scalar (e.g. an
    /// integer polynomial at rational arguments).
    pub fn eval<R>(&self, first: &R, second: &R) -> R
    where
        R: Coefficient + From<C>,
    {
        let mut total = R::zero();
        for ((i, j), c) in self.terms() {
            let mut term = R::from(c.clone());
            for _ in 0..i {
                term = term * first.clone();
            }
            for _ in 0..j {
                term = term * second.clone();
            }
            total = total + term;
        }
        total
    }

    /// Total degree of the polynomial, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Largest exponent of each variable individually, `None` when zero.
    pub fn degrees(&self) -> Option<(u32, u32)> {
        if self.terms.is_empty() {
            return None;
        }
        let di = self.terms.keys().map(|&(i, _)| i).max().unwrap();
        let dj = self.terms.keys().map(|&(_, j)| j).max().unwrap();
        Some((di, dj))
    }

    /// Terms rendered as a JSON object `{"terms": [{"x": i, "y": j, "c":
    /// "coeff"}, ...]}` with the variable names as keys, in display order.
    pub fn to_json(&self) -> String {
        let mut entries = Vec::with_capacity(self.terms.len());
        for ((i, j), c) in self.display_ordered() {
            entries.push(format!(
                "{{\"{}\": {}, \"{}\": {}, \"c\": \"{}\"}}",
                self.vars.first, i, self.vars.second, j, c
            ));
        }
        format!("{{\"terms\": [{}]}}", entries.join(", "))
    }

    /// Terms in display order: total degree descending, then the first
    /// variable's exponent descending.
    fn display_ordered(&self) -> Vec<((u32, u32), &C)> {
        let mut list: Vec<_> = self.terms().collect();
        list.sort_by(|((i1, j1), _), ((i2, j2), _)| (i2 + j2, i2).cmp(&(i1 + j1, i1)));
        list
    }
}

impl<C: Coefficient> fmt::Display for BivariatePolynomial<C> {
    /// Canonical human-readable form: terms by total degree descending then
    /// first-variable exponent descending, unit coefficients elided, e.g.
    /// `x^2 + 2*x*y + y^2 - x - y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = C::one();
        let minus_one = C::zero() - C::one();
        for (idx, ((i, j), c)) in self.display_ordered().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = *c == one || *c == minus_one;
            let mut factors: Vec<String> = Vec::new();
            if !unit || (i == 0 && j == 0) {
                factors.push(magnitude.to_string());
            }
            for (var, e) in [(self.vars.first, i), (self.vars.second, j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for BivariatePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = BivariatePolynomial<i64>;

    fn x() -> P {
        P::var_first(XY)
    }

    fn y() -> P {
        P::var_second(XY)
    }

    #[test]
    fn display_orders_by_total_then_first_degree() {
        // (x + y)^2 - x - y
        let p = x().add(&y()).pow(2).sub(&x()).sub(&y());
        assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2 - x - y");
    }

    #[test]
    fn display_handles_constants_and_signs() {
        assert_eq!(P::zero(XY).to_string(), "0");
        assert_eq!(P::one(XY).to_string(), "1");
        assert_eq!(P::term(-3, 0, 0, XY).to_string(), "-3");
        assert_eq!(P::term(-1, 1, 0, XY).to_string(), "-x");
        assert_eq!(
            P::term(2, 0, 3, UV).sub(&P::one(UV)).to_string(),
            "2*v^3 - 1"
        );
    }

    #[test]
    fn addition_cancels_to_zero() {
        let p = x().mul(&y());
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.sub(&p).to_string(), "0");
    }

    #[test]
    fn multiplication_distributes() {
        let lhs = x().add(&y()).mul(&x().sub(&y()));
        let rhs = x().pow(2).sub(&y().pow(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_at_integers() {
        let p = x().pow(2).add(&y().scaled(&3));
        assert_eq!(p.eval(&2i64, &5i64), 19);
    }

    #[test]
    fn json_rendering_is_in_display_order() {
        let p = x().add(&y()).pow(2).sub(&x()).sub(&y());
        assert_eq!(
            p.to_json(),
            concat!(
                "{\"terms\": [",
                "{\"x\": 2, \"y\": 0, \"c\": \"1\"}, ",
                "{\"x\": 1, \"y\": 1, \"c\": \"2\"}, ",
                "{\"x\": 0, \"y\": 2, \"c\": \"1\"}, ",
                "{\"x\": 1, \"y\": 0, \"c\": \"-1\"}, ",
                "{\"x\": 0, \"y\": 1, \"c\": \"-1\"}",
                "]}"
            )
        );
    }

    #[test]
    fn degrees_report_each_variable() {
        let p = x().pow(3).mul(&y()).add(&y().pow(2));
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(p.degrees(), Some((3, 2)));
        assert_eq!(P::zero(XY).degrees(), None);
    }
}
