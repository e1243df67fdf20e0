//! Multivariate Laurent polynomials in the formal variables `q`, `α`, `β`.
//!
//! Text form (used by the CLI and the golden tests):
//!
//! ```text
//! poly  := "0" | term (" + " term)*
//! term  := coeff " * q^" int " * a^" int " * b^" int
//! coeff := int | int "/" uint
//! ```
//!
//! `a` stands for `α` and `b` for `β`. Terms are printed in descending order
//! of the `q` exponent, then of the `α⁻¹` exponent, then of the `β⁻¹`
//! exponent, so a tableau weight `q^rk α^-f β^-u` sorts by `(rk, f, u)`
//! descending. The parser is more lenient: whitespace around `*` and `+`
//! is optional and each of the three variable factors may be omitted or
//! appear in any order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::scalar::Field;

/// Exponents of `q`, `α` and `β` in a Laurent monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Exponents {
    pub q: i32,
    pub a: i32,
    pub b: i32,
}

impl Exponents {
    pub const ZERO: Exponents = Exponents { q: 0, a: 0, b: 0 };

    pub const fn new(q: i32, a: i32, b: i32) -> Self {
        Exponents { q, a, b }
    }

    /// Display order: `q` descending, then `α` and `β` ascending.
    fn display_cmp(&self, other: &Self) -> Ordering {
        other
            .q
            .cmp(&self.q)
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
    }
}

impl Add for Exponents {
    type Output = Exponents;

    fn add(self, rhs: Exponents) -> Exponents {
        Exponents::new(self.q + rhs.q, self.a + rhs.a, self.b + rhs.b)
    }
}

/// A single term `coeff · q^i α^j β^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<C> {
    pub coeff: C,
    pub exps: Exponents,
}

impl<C: Field> Monomial<C> {
    pub fn new(coeff: C, exps: Exponents) -> Self {
        Monomial { coeff, exps }
    }

    pub fn unit(exps: Exponents) -> Self {
        Monomial { coeff: C::one(), exps }
    }

    pub fn scaled(&self, factor: &C) -> Self {
        Monomial { coeff: self.coeff.clone() * factor.clone(), exps: self.exps }
    }

    pub fn to_poly(&self) -> LaurentPoly<C> {
        LaurentPoly::from(self.clone())
    }
}

/// A Laurent polynomial in `q`, `α`, `β` kept in canonical form: no stored
/// coefficient is zero, and the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Exponents, C>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("zero base for variable `{0}` raised to a negative power")]
    DivisionByZero(char),
}

impl<C: Field> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Exponents::ZERO)
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn term(coeff: C, exps: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff);
        p
    }

    /// The monomial `q^i α^j β^k` with coefficient one.
    pub fn monomial(q: i32, a: i32, b: i32) -> Self {
        Self::term(C::one(), Exponents::new(q, a, b))
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn alpha() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn beta() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: Exponents) -> Option<&C> {
        self.terms.get(&exps)
    }

    /// Terms in display order.
    pub fn terms(&self) -> Vec<(Exponents, &C)> {
        let mut out: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        out.sort_by(|x, y| x.0.display_cmp(&y.0));
        out
    }

    /// The single term of a monomial, `None` for zero or multi-term values.
    pub fn as_monomial(&self) -> Option<Monomial<C>> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Monomial::new(c.clone(), *e))
    }

    fn add_term(&mut self, exps: Exponents, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.clone() + coeff;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, coeff);
            }
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.clone() * factor.clone());
        }
        out
    }

    /// Multiply every term by `q^i α^j β^k`.
    pub fn shift(&self, by: Exponents) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e + by, c.clone())).collect() }
    }

    /// Exchange the roles of `α` and `β`.
    pub fn swap_alpha_beta(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponents::new(e.q, e.b, e.a), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, q: &C, a: &C, b: &C) -> Result<C, EvalError> {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let qp = q.checked_powi(e.q).ok_or(EvalError::DivisionByZero('q'))?;
            let ap = a.checked_powi(e.a).ok_or(EvalError::DivisionByZero('a'))?;
            let bp = b.checked_powi(e.b).ok_or(EvalError::DivisionByZero('b'))?;
            acc = acc + c.clone() * qp * ap * bp;
        }
        Ok(acc)
    }

    /// Sum of all coefficients, i.e. the value at `q = α = β = 1`.
    pub fn coefficient_sum(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |acc, c| acc + c)
    }
}

impl<C: Field> From<Monomial<C>> for LaurentPoly<C> {
    fn from(m: Monomial<C>) -> Self {
        LaurentPoly::term(m.coeff, m.exps)
    }
}

impl<C: Field> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Field> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(mut self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Field> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Field> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Field> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self + &(-rhs)
    }
}

impl<C: Field> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Field> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self * &rhs
    }
}

impl<C: Field> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = LaurentPoly<C>>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<C: Field + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{} * q^{} * a^{} * b^{}", c, e.q, e.a, e.b)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse polynomial term `{term}`: {reason}")]
pub struct ParsePolyError {
    pub term: String,
    pub reason: String,
}

impl FromStr for LaurentPoly<BigRational> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut out = LaurentPoly::zero();
        if s == "0" {
            return Ok(out);
        }
        for raw in s.split('+') {
            let term = raw.trim();
            let fail = |reason: &str| ParsePolyError { term: term.to_string(), reason: reason.to_string() };
            if term.is_empty() {
                return Err(fail("empty term"));
            }
            let mut factors = term.split('*').map(str::trim);
            let coeff: BigRational = factors
                .next()
                .ok_or_else(|| fail("missing coefficient"))?
                .parse()
                .map_err(|_| fail("bad coefficient"))?;
            let mut exps = Exponents::ZERO;
            let mut seen = [false; 3];
            for factor in factors {
                let (var, exp) = factor.split_once('^').ok_or_else(|| fail("factor must look like `q^k`"))?;
                let exp: i32 = exp.trim().parse().map_err(|_| fail("bad exponent"))?;
                let slot = match var.trim() {
                    "q" => 0,
                    "a" => 1,
                    "b" => 2,
                    _ => return Err(fail("unknown variable")),
                };
                if seen[slot] {
                    return Err(fail("repeated variable"));
                }
                seen[slot] = true;
                match slot {
                    0 => exps.q = exp,
                    1 => exps.a = exp,
                    _ => exps.b = exp,
                }
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ratio;
    use proptest::prelude::*;

    type P = LaurentPoly<BigRational>;

    fn m(q: i32, a: i32, b: i32) -> P {
        P::monomial(q, a, b)
    }

    #[test]
    fn additive_identity_and_inverse() {
        let p = &m(1, -1, 0) + &m(0, 0, -2).scale(&ratio(3, 2));
        assert_eq!(&p + &P::zero(), p);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).len(), 0);
    }

    #[test]
    fn sum_of_shape_one_one_weights() {
        // the three fillings of shape (1,1): [1],[1]; [1],[0]; [0],[1]
        let p = m(1, -1, -1) + m(0, -1, 0) + m(0, 0, -1);
        assert_eq!(p.len(), 3);
        assert_eq!(p.coefficient_sum(), ratio(3, 1));
    }

    #[test]
    fn products() {
        assert_eq!(&m(2, -1, 0) * &m(1, 0, -1), m(3, -1, -1));
        let p = m(1, -1, 0) + m(0, 0, -1);
        assert_eq!(&p * &P::one(), p);
        assert!((&p * &P::zero()).is_zero());
    }

    #[test]
    fn evaluation() {
        let p = m(1, -1, 0) + m(0, 0, -1);
        assert_eq!(p.eval(&ratio(1, 2), &ratio(1, 3), &ratio(2, 3)).unwrap(), ratio(3, 1));
        assert_eq!(m(0, 0, -1).eval(&ratio(0, 1), &ratio(1, 1), &ratio(1, 2)).unwrap(), ratio(2, 1));
        assert_eq!(
            m(0, 0, -1).eval(&ratio(1, 1), &ratio(1, 1), &ratio(0, 1)),
            Err(EvalError::DivisionByZero('b'))
        );
        let one = ratio(1, 1);
        let p = m(3, -2, 1).scale(&ratio(5, 7)) + m(0, 0, 0).scale(&ratio(-1, 7));
        assert_eq!(p.eval(&one, &one, &one).unwrap(), p.coefficient_sum());
    }

    #[test]
    fn display_order_and_format() {
        let p = m(0, 0, -1) + m(0, -1, 0);
        assert_eq!(p.to_string(), "1 * q^0 * a^-1 * b^0 + 1 * q^0 * a^0 * b^-1");
        assert_eq!(P::zero().to_string(), "0");
        let p = m(1, -1, -1).scale(&ratio(-3, 4)) + m(0, 0, 0).scale(&ratio(2, 1));
        assert_eq!(p.to_string(), "-3/4 * q^1 * a^-1 * b^-1 + 2 * q^0 * a^0 * b^0");
    }

    #[test]
    fn lenient_parse() {
        let p: P = "2*q^1 + 1/3 * b^-2*a^1".parse().unwrap();
        assert_eq!(p, m(1, 0, 0).scale(&ratio(2, 1)) + m(0, 1, -2).scale(&ratio(1, 3)));
        assert!("1 * q^1 * q^2".parse::<P>().is_err());
        assert!("1 * z^1".parse::<P>().is_err());
        assert!("1/0 * q^1".parse::<P>().is_err());
        assert!(" + ".parse::<P>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(((-2i32..3, -2i32..3, -2i32..3), -4i64..5, 1i64..4), 0..5).prop_map(|terms| {
            terms
                .into_iter()
                .map(|((q, a, b), n, d)| P::term(ratio(n, d), Exponents::new(q, a, b)))
                .sum()
        })
    }

    fn arb_point() -> impl Strategy<Value = (BigRational, BigRational, BigRational)> {
        (1i64..6, 1i64..6, 1i64..6, 1i64..4).prop_map(|(x, y, z, d)| (ratio(x, d), ratio(y, d + 1), ratio(z, d + 2)))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
            prop_assert_eq!(&p + &r, &r + &p);
            prop_assert_eq!(&p * &r, &r * &p);
            prop_assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        }

        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), r in arb_poly(), (q, a, b) in arb_point()) {
            let ep = p.eval(&q, &a, &b).unwrap();
            let er = r.eval(&q, &a, &b).unwrap();
            prop_assert_eq!((&p + &r).eval(&q, &a, &b).unwrap(), ep.clone() + er.clone());
            prop_assert_eq!((&p * &r).eval(&q, &a, &b).unwrap(), ep * er);
        }

        #[test]
        fn text_form_round_trips(p in arb_poly()) {
            let back: P = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
