//! Bivariate power series truncated at a total-degree cap. Terms of total
//! degree beyond the cap are discarded by every operation, so arithmetic
//! stays exact on the retained window. This is the algebra behind the
//! distance generating series and its closed-form expansion.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{BivariatePolynomial, Coefficient, VarPair, UV};

/// Selects one of the two series variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

/// A bivariate series kept only up to (and including) total degree `cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coefficient> {
    cap: u32,
    terms: BTreeMap<(u32, u32), C>,
    vars: VarPair,
}

impl<C: Coefficient> TruncatedSeries<C> {
    pub fn zero(cap: u32, vars: VarPair) -> Self {
        TruncatedSeries {
            cap,
            terms: BTreeMap::new(),
            vars,
        }
    }

    pub fn one(cap: u32, vars: VarPair) -> Self {
        let mut s = Self::zero(cap, vars);
        s.add_assign_term((0, 0), C::one());
        s
    }

    /// The single term `c * first^i * second^j`, or zero if it falls outside
    /// the cap.
    pub fn term(c: C, i: u32, j: u32, cap: u32, vars: VarPair) -> Self {
        let mut s = Self::zero(cap, vars);
        s.add_assign_term((i, j), c);
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn vars(&self) -> VarPair {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    /// Nonzero retained terms as `((i, j), coefficient)` in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn add_assign_term(&mut self, e: (u32, u32), c: C) {
        if c.is_zero() || e.0 + e.1 > self.cap {
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

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                lhs: self.cap,
                rhs: other.cap,
            });
        }
        debug_assert_eq!(self.vars, other.vars);
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_assign_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_assign_term(e, C::zero() - c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.cap, self.vars);
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                out.add_assign_term((i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &C) -> Self {
        let mut out = Self::zero(self.cap, self.vars);
        for (e, coeff) in self.terms() {
            out.add_assign_term(e, coeff.clone() * c.clone());
        }
        out
    }

    /// Truncates a polynomial to a series with the given cap.
    pub fn from_polynomial(p: &BivariatePolynomial<C>, cap: u32) -> Self {
        let mut out = Self::zero(cap, p.vars());
        for (e, c) in p.terms() {
            out.add_assign_term(e, c.clone());
        }
        out
    }

    /// Terms in series display order: total degree ascending, then the
    /// first variable's exponent descending.
    fn display_ordered(&self) -> Vec<((u32, u32), &C)> {
        let mut list: Vec<_> = self.terms().collect();
        list.sort_by(|((i1, j1), _), ((i2, j2), _)| {
            (i1 + j1, std::cmp::Reverse(i1)).cmp(&(i2 + j2, std::cmp::Reverse(i2)))
        });
        list
    }
}

/// The expansion of `(1 - t)^{-m}` in the chosen variable `t`, truncated at
/// `cap`: coefficients are the binomials `C(m + k - 1, k)`, built by the
/// exact recurrence `c_{k+1} = c_k * (m + k) / (k + 1)`.
pub fn geometric_pow<C: Coefficient>(
    var: Var,
    m: u32,
    cap: u32,
    vars: VarPair,
) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(cap, vars);
    let mut coeff = C::one();
    for k in 0..=cap {
        let e = match var {
            Var::First => (k, 0),
            Var::Second => (0, k),
        };
        s.add_assign_term(e, coeff.clone());
        let num = C::from_u32(m + k).expect("small integer fits any coefficient type");
        let den = C::from_u32(k + 1).expect("small integer fits any coefficient type");
        // For m = 0 the numerator vanishes at k = 0, leaving the constant 1.
        coeff = coeff * num / den;
    }
    s
}

/// The polynomial `(1 - first*second)^m` as a truncated series: terms
/// `(-1)^k C(m, k) (first*second)^k`.
pub fn cross_pow<C: Coefficient>(m: u32, cap: u32, vars: VarPair) -> TruncatedSeries<C> {
    let mut s = TruncatedSeries::zero(cap, vars);
    let mut coeff = C::one();
    for k in 0..=m {
        let signed = if k % 2 == 0 {
            coeff.clone()
        } else {
            C::zero() - coeff.clone()
        };
        s.add_assign_term((k, k), signed);
        if k < m {
            let num = C::from_u32(m - k).expect("small integer fits any coefficient type");
            let den = C::from_u32(k + 1).expect("small integer fits any coefficient type");
            coeff = coeff * num / den;
        }
    }
    s
}

/// Expands `sum x^oi y^oe (x+y-1)^ie` under the substitution
/// `x -> 1/(1-u)`, `y -> 1/(1-v)` as a truncated series. Since
/// `x + y - 1 = (1 - uv) / ((1-u)(1-v))` under that substitution, each
/// `(oi, oe, ie)` summand becomes
/// `(1-u)^{-(oi+ie)} (1-v)^{-(oe+ie)} (1-uv)^{ie}`.
pub fn expand_transformed_tutte<C: Coefficient>(
    summands: &[(u32, u32, u32)],
    cap: u32,
) -> TruncatedSeries<C> {
    let vars = UV;
    let mut total = TruncatedSeries::zero(cap, vars);
    for &(oi, oe, ie) in summands {
        let u_part: TruncatedSeries<C> = geometric_pow(Var::First, oi + ie, cap, vars);
        let v_part: TruncatedSeries<C> = geometric_pow(Var::Second, oe + ie, cap, vars);
        let cross: TruncatedSeries<C> = cross_pow(ie, cap, vars);
        let product = u_part
            .mul(&v_part)
            .and_then(|p| p.mul(&cross))
            .expect("series share one cap");
        total = total.add(&product).expect("series share one cap");
    }
    total
}

impl<C: Coefficient> fmt::Display for TruncatedSeries<C> {
    /// Same term syntax as polynomials, but ordered by ascending total
    /// degree, e.g. `1 + u + v + u^2 + v^2`.
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

impl<C: Coefficient> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (+ degree > {})", self, self.cap)
    }
}
