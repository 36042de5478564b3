//! Sparse truncated multivariate power series over exact rationals.
//!
//! A series lives in phase-space variables `t1..tN` and Novikov variables
//! `q1..qr`. Terms are kept in a `BTreeMap` keyed by exponent vectors; only
//! nonzero coefficients are stored. Two truncation bounds apply: total
//! t-degree (`trunc_t`) and total q-degree (`max_q`).
//!
//! Besides the truncation order, every series carries `valid_t`: the t-degree
//! up to which its coefficients agree with the exact, untruncated result.
//! Binary operations take the minimum of the operands' `valid_t`; each
//! t-derivative lowers it by one. Identity residuals are only asserted for
//! coefficients inside this window.
//!
//! Divisor directions act on Novikov variables through per-variable integer
//! charges: the partial derivative in direction `α` of a term `c·m` picks up
//! an extra `c·⟨charge(α), q-exponents⟩·m`. This keeps the exponential
//! divisor dependence exact per q-degree instead of Taylor-truncating it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::Zero;
use smallvec::SmallVec;

use crate::rat::{self, Rat};

/// Variable layout and truncation bounds shared by all series of one model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarShape {
    pub n_t: usize,
    pub n_q: usize,
    pub trunc_t: i64,
    pub max_q: i64,
    /// `charges[α][j]`: charge of phase-space variable `α` in Novikov
    /// variable `j`. Nonzero only for divisor directions.
    pub charges: Vec<Vec<i64>>,
}

impl VarShape {
    pub fn new(n_t: usize, n_q: usize, trunc_t: i64, max_q: i64, charges: Vec<Vec<i64>>) -> Self {
        assert_eq!(charges.len(), n_t, "one charge row per t-variable");
        for row in &charges {
            assert_eq!(row.len(), n_q, "one charge column per Novikov variable");
        }
        VarShape {
            n_t,
            n_q,
            trunc_t,
            max_q,
            charges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub t: SmallVec<[u16; 4]>,
    pub q: SmallVec<[u16; 2]>,
}

impl Monomial {
    pub fn unit(n_t: usize, n_q: usize) -> Self {
        Monomial {
            t: SmallVec::from_elem(0, n_t),
            q: SmallVec::from_elem(0, n_q),
        }
    }

    pub fn var(n_t: usize, n_q: usize, alpha: usize) -> Self {
        let mut m = Self::unit(n_t, n_q);
        m.t[alpha] = 1;
        m
    }

    pub fn t_degree(&self) -> i64 {
        self.t.iter().map(|&e| e as i64).sum()
    }

    pub fn q_degree(&self) -> i64 {
        self.q.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
            q: self.q.iter().zip(&other.q).map(|(a, b)| a + b).collect(),
        }
    }

    /// Render as e.g. `t1^2*t3*q^2`; the unit monomial renders as `1`.
    /// A single Novikov variable is written `q`, several as `q1..qr`.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.t.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("t{}", i + 1)),
                _ => parts.push(format!("t{}^{}", i + 1, e)),
            }
        }
        let single_q = self.q.len() == 1;
        for (j, &e) in self.q.iter().enumerate() {
            let name = if single_q {
                "q".to_string()
            } else {
                format!("q{}", j + 1)
            };
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{}^{}", name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parse the `render` syntax. Used by the CLI `--mutate-f1` slot flag.
    pub fn parse(s: &str, n_t: usize, n_q: usize) -> Result<Monomial, String> {
        let mut m = Self::unit(n_t, n_q);
        let s = s.trim();
        if s == "1" {
            return Ok(m);
        }
        for part in s.split('*') {
            let part = part.trim();
            let (var, exp) = match part.split_once('^') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim()
                        .parse::<u16>()
                        .map_err(|_| format!("bad exponent in {part:?}"))?,
                ),
                None => (part, 1),
            };
            if let Some(idx) = var.strip_prefix('t') {
                let i: usize = idx.parse().map_err(|_| format!("bad variable {var:?}"))?;
                if i == 0 || i > n_t {
                    return Err(format!("t-index out of range in {part:?}"));
                }
                m.t[i - 1] += exp;
            } else if var == "q" && n_q == 1 {
                m.q[0] += exp;
            } else if let Some(idx) = var.strip_prefix('q') {
                let j: usize = idx.parse().map_err(|_| format!("bad variable {var:?}"))?;
                if j == 0 || j > n_q {
                    return Err(format!("q-index out of range in {part:?}"));
                }
                m.q[j - 1] += exp;
            } else {
                return Err(format!("unknown variable {var:?}"));
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    shape: Arc<VarShape>,
    terms: BTreeMap<Monomial, Rat>,
    valid_t: i64,
}

impl TruncatedSeries {
    pub fn zero(shape: Arc<VarShape>) -> Self {
        let valid_t = shape.trunc_t;
        TruncatedSeries {
            shape,
            terms: BTreeMap::new(),
            valid_t,
        }
    }

    pub fn constant(shape: Arc<VarShape>, c: Rat) -> Self {
        let mut s = Self::zero(shape);
        if !c.is_zero() {
            let m = Monomial::unit(s.shape.n_t, s.shape.n_q);
            s.terms.insert(m, c);
        }
        s
    }

    pub fn monomial(shape: Arc<VarShape>, m: Monomial, c: Rat) -> Self {
        let mut s = Self::zero(shape);
        s.insert_term(m, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(
        shape: Arc<VarShape>,
        terms: I,
    ) -> Self {
        let mut s = Self::zero(shape);
        for (m, c) in terms {
            s.add_term(&m, c);
        }
        s
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.t.len(), self.shape.n_t);
        debug_assert_eq!(m.q.len(), self.shape.n_q);
        if c.is_zero() || m.t_degree() > self.shape.trunc_t || m.q_degree() > self.shape.max_q {
            return;
        }
        self.terms.insert(m, c);
    }

    fn add_term(&mut self, m: &Monomial, c: Rat) {
        if c.is_zero() || m.t_degree() > self.shape.trunc_t || m.q_degree() > self.shape.max_q {
            return;
        }
        match self.terms.get_mut(m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c);
            }
        }
    }

    pub fn shape(&self) -> &Arc<VarShape> {
        &self.shape
    }

    pub fn valid_t(&self) -> i64 {
        self.valid_t
    }

    pub fn with_valid_t(mut self, v: i64) -> Self {
        self.valid_t = v.min(self.shape.trunc_t);
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(rat::zero)
    }

    fn assert_same_shape(&self, other: &TruncatedSeries) {
        assert!(
            *self.shape == *other.shape,
            "series shape mismatch: {:?} vs {:?}",
            self.shape,
            other.shape
        );
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_shape(other);
        let mut out = self.clone();
        out.valid_t = self.valid_t.min(other.valid_t);
        for (m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_shape(other);
        let mut out = self.clone();
        out.valid_t = self.valid_t.min(other.valid_t);
        for (m, c) in &other.terms {
            out.add_term(m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> TruncatedSeries {
        self.scale(&rat::int(-1))
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.shape.clone());
        out.valid_t = self.valid_t;
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        self.assert_same_shape(other);
        let mut out = TruncatedSeries::zero(self.shape.clone());
        out.valid_t = self.valid_t.min(other.valid_t);
        if self.terms.is_empty() || other.terms.is_empty() {
            return out;
        }
        // Iterate the smaller factor on the outside.
        let (a, b) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &a.terms {
            let ta = ma.t_degree();
            let qa = ma.q_degree();
            for (mb, cb) in &b.terms {
                if ta + mb.t_degree() > self.shape.trunc_t || qa + mb.q_degree() > self.shape.max_q
                {
                    continue;
                }
                out.add_term(&ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Partial derivative in direction `alpha`, with the Novikov charge rule.
    pub fn deriv(&self, alpha: usize) -> TruncatedSeries {
        assert!(alpha < self.shape.n_t, "derivative index out of range");
        let mut out = TruncatedSeries::zero(self.shape.clone());
        out.valid_t = self.valid_t - 1;
        let charges = &self.shape.charges[alpha];
        for (m, c) in &self.terms {
            let e = m.t[alpha];
            if e > 0 {
                let mut lowered = m.clone();
                lowered.t[alpha] = e - 1;
                out.add_term(&lowered, c * rat::int(e as i64));
            }
            let weight: i64 =
                m.q.iter()
                    .zip(charges)
                    .map(|(&qe, &ch)| qe as i64 * ch)
                    .sum();
            if weight != 0 {
                out.add_term(m, c * rat::int(weight));
            }
        }
        out
    }

    /// True when every stored coefficient of t-degree ≤ `self.valid_t` is zero.
    pub fn is_zero_on_window(&self) -> bool {
        self.first_nonzero_on_window().is_none()
    }

    /// First (in monomial order) nonzero coefficient inside the valid window.
    pub fn first_nonzero_on_window(&self) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .find(|(m, _)| m.t_degree() <= self.valid_t)
    }

    /// Exact value at t = 0 with all Novikov variables set to 1 (summing the
    /// stored q-degrees up to `max_q`).
    pub fn eval_t0_q1(&self) -> Rat {
        let mut acc = rat::zero();
        for (m, c) in &self.terms {
            if m.t_degree() == 0 {
                acc += c.clone();
            }
        }
        acc
    }

    /// Restrict to terms of t-degree ≤ `deg` (used when comparing series
    /// computed at different truncation orders).
    pub fn truncate_t(&self, deg: i64) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.shape.clone());
        out.valid_t = self.valid_t.min(deg);
        for (m, c) in &self.terms {
            if m.t_degree() <= deg {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Sort by (t-degree, q-degree, exponents) for stable reading order.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.t_degree() + m.q_degree(), (*m).clone()));
        for (i, (m, c)) in terms.iter().enumerate() {
            let cs = rat::render(c);
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let mono = m.render();
            if mono == "1" {
                write!(f, "{}", mag)?;
            } else if mag == "1" {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn shape(n_t: usize, n_q: usize, trunc_t: i64, max_q: i64) -> Arc<VarShape> {
        // t2 is the divisor direction with charge 1 when there is a Novikov
        // variable (mirrors the projective-line layout used across tests).
        let charges = (0..n_t)
            .map(|i| {
                (0..n_q)
                    .map(|_| if i == 1 { 1 } else { 0 })
                    .collect::<Vec<_>>()
            })
            .collect();
        Arc::new(VarShape::new(n_t, n_q, trunc_t, max_q, charges))
    }

    fn var(sh: &Arc<VarShape>, alpha: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(sh.clone(), Monomial::var(sh.n_t, sh.n_q, alpha), int(1))
    }

    fn qvar(sh: &Arc<VarShape>, j: usize, e: u16) -> TruncatedSeries {
        let mut m = Monomial::unit(sh.n_t, sh.n_q);
        m.q[j] = e;
        TruncatedSeries::monomial(sh.clone(), m, int(1))
    }

    #[test]
    fn add_cancels_to_zero() {
        let sh = shape(3, 1, 8, 3);
        let t1 = var(&sh, 0);
        let sum = t1.add(&t1.neg());
        assert!(sum.is_empty());
        assert_eq!(sum.valid_t(), 8);
    }

    #[test]
    fn disjoint_monomials_concatenate() {
        // ½(t1)²t3 + ½t1(t2)²: the classical cubic part of the plane model.
        let sh = shape(3, 1, 8, 3);
        let t1 = var(&sh, 0);
        let t2 = var(&sh, 1);
        let t3 = var(&sh, 2);
        let a = t1.mul(&t1).mul(&t3).scale(&frac(1, 2));
        let b = t1.mul(&t2).mul(&t2).scale(&frac(1, 2));
        let f = a.add(&b);
        assert_eq!(f.len(), 2);
        let m1 = Monomial::parse("t1^2*t3", 3, 1).unwrap();
        let m2 = Monomial::parse("t1*t2^2", 3, 1).unwrap();
        assert_eq!(f.coeff(&m1), frac(1, 2));
        assert_eq!(f.coeff(&m2), frac(1, 2));
    }

    #[test]
    fn valid_t_takes_min_on_add() {
        let sh = shape(2, 1, 8, 3);
        let a = var(&sh, 0).with_valid_t(5);
        let b = var(&sh, 1).with_valid_t(7);
        assert_eq!(a.add(&b).valid_t(), 5);
        assert_eq!(a.mul(&b).valid_t(), 5);
    }

    #[test]
    fn product_of_binomials() {
        let sh = shape(2, 1, 8, 3);
        let one = TruncatedSeries::constant(sh.clone(), int(1));
        let t1 = var(&sh, 0);
        let p = one.add(&t1).mul(&one.sub(&t1));
        let m = Monomial::parse("t1^2", 2, 1).unwrap();
        assert_eq!(p.coeff(&Monomial::unit(2, 1)), int(1));
        assert_eq!(p.coeff(&m), int(-1));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let sh = shape(2, 1, 8, 3);
        let z = TruncatedSeries::zero(sh.clone());
        let t1 = var(&sh, 0);
        assert!(t1.mul(&z).is_empty());
    }

    #[test]
    fn square_of_q_exponential() {
        // In absorbed coordinates q stands for q·e^{t2}; expanding the
        // exponential explicitly must square consistently: the series
        // q·Σ (t2)^n/n! squared has q²(t2)²-coefficient 2²/2! = 2.
        let sh = shape(2, 1, 8, 3);
        let mut expq = TruncatedSeries::zero(sh.clone());
        let mut fact = int(1);
        for n in 0..=8u16 {
            if n > 0 {
                fact = fact * int(n as i64);
            }
            let mut m = Monomial::unit(2, 1);
            m.t[1] = n;
            m.q[0] = 1;
            expq = expq.add(&TruncatedSeries::monomial(
                sh.clone(),
                m,
                int(1) / fact.clone(),
            ));
        }
        let sq = expq.mul(&expq);
        let m = Monomial::parse("t2^2*q^2", 2, 1).unwrap();
        assert_eq!(sq.coeff(&m), int(2));
    }

    #[test]
    fn ordinary_partial_derivative() {
        // ∂/∂t1 of ½(t1)²t2 → t1·t2
        let sh = shape(2, 1, 8, 3);
        let t1 = var(&sh, 0);
        let t2 = var(&sh, 1);
        let f = t1.mul(&t1).mul(&t2).scale(&frac(1, 2));
        let d = f.deriv(0);
        let m = Monomial::parse("t1*t2", 2, 1).unwrap();
        assert_eq!(d.coeff(&m), int(1));
        assert_eq!(d.len(), 1);
        assert_eq!(d.valid_t(), 7);
    }

    #[test]
    fn divisor_charge_rule() {
        // With charge 1 on t2: ∂/∂t2 of q^d = d·q^d.
        let sh = shape(2, 1, 8, 3);
        let q = qvar(&sh, 0, 1);
        let d1 = q.deriv(1);
        assert_eq!(d1.coeff(&Monomial::parse("q", 2, 1).unwrap()), int(1));
        let q2 = qvar(&sh, 0, 2);
        let d2 = q2.deriv(1);
        assert_eq!(d2.coeff(&Monomial::parse("q^2", 2, 1).unwrap()), int(2));
        // t1 has no charge: derivative of q in direction t1 vanishes.
        assert!(q.deriv(0).is_empty());
    }

    #[test]
    fn exactness_across_truncation_orders() {
        // Coefficients inside the valid window agree between a low and a
        // high truncation order after the same computation.
        let lo = shape(2, 1, 5, 3);
        let hi = shape(2, 1, 9, 3);
        let build = |sh: &Arc<VarShape>| {
            let t1 = var(sh, 0);
            let t2 = var(sh, 1);
            let q = qvar(sh, 0, 1);
            let mut f = TruncatedSeries::constant(sh.clone(), int(1));
            // (1 + t1 + t2 + q)^4, then one derivative in the charged direction
            let base = f.add(&t1).add(&t2).add(&q);
            f = base.clone();
            for _ in 0..3 {
                f = f.mul(&base);
            }
            f.deriv(1)
        };
        let a = build(&lo);
        let b = build(&hi);
        assert_eq!(a.valid_t(), 4);
        for (m, c) in b.iter() {
            if m.t_degree() <= a.valid_t() {
                let mm = Monomial {
                    t: m.t.clone(),
                    q: m.q.clone(),
                };
                assert_eq!(a.coeff(&mm), c.clone(), "mismatch at {}", m.render());
            }
        }
    }

    #[test]
    fn monomial_parse_render_round_trip() {
        for s in ["1", "t1", "t1^2*t3*q^2", "q", "t2*q^3"] {
            let m = Monomial::parse(s, 3, 1).unwrap();
            assert_eq!(m.render(), s.to_string());
        }
        assert!(Monomial::parse("t9", 3, 1).is_err());
        assert!(Monomial::parse("x", 3, 1).is_err());
    }
}
