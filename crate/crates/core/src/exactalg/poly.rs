//! Sparse multivariate polynomials with arbitrary-precision rational coefficients.
//!
//! Every polynomial carries its own sorted list of variable names and only keeps
//! variables that actually occur, so two polynomials are equal exactly when their
//! term maps are equal. Terms are ordered graded-lexicographically, with the
//! variables compared in name order; the greatest key of the term map is the
//! leading term.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector under the graded-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, divisor: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect())
    }

    fn product(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type TermMap = BTreeMap<Monomial, Rational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: TermMap,
}

impl Default for MultiPoly {
    fn default() -> Self {
        Self::zero()
    }
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out: Vec<String> = a.iter().chain(b).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// Positions of `vars` inside the (sorted, superset) universe `target`.
fn index_map(vars: &[String], target: &[String]) -> Vec<usize> {
    vars.iter()
        .map(|v| {
            target
                .binary_search(v)
                .expect("variable missing from universe")
        })
        .collect()
}

fn remap(exps: &[u32], map: &[usize], len: usize) -> Monomial {
    let mut out = vec![0; len];
    for (e, &i) in exps.iter().zip(map) {
        out[i] = *e;
    }
    Monomial(out)
}

fn accumulate(terms: &mut TermMap, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: TermMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = TermMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), &[(name, 1)])
    }

    /// `c · ∏ name^exp`.
    pub fn monomial(c: Rational, powers: &[(&str, u32)]) -> Self {
        let vars: Vec<String> = powers.iter().map(|(v, _)| v.to_string()).collect();
        let exps: Vec<u32> = powers.iter().map(|(_, e)| *e).collect();
        Self::from_terms(&vars, [(exps, c)])
    }

    /// Builds a polynomial from raw `(exponents, coefficient)` pairs over `vars`.
    /// Duplicate monomials are summed; the variable list may be unsorted.
    pub fn from_terms<I>(vars: &[String], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let universe = union_vars(vars, &[]);
        assert_eq!(universe.len(), vars.len(), "duplicate variable names");
        let map = index_map(vars, &universe);
        let mut out = TermMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            accumulate(&mut out, remap(&exps, &map, universe.len()), c);
        }
        MultiPoly::normalized(universe, out)
    }

    /// Drops variables that no longer occur in any term.
    fn normalized(vars: Vec<String>, terms: TermMap) -> Self {
        let mut used = vec![false; vars.len()];
        for m in terms.keys() {
            for (u, e) in used.iter_mut().zip(&m.0) {
                *u |= *e > 0;
            }
        }
        if used.iter().all(|u| *u) {
            return MultiPoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|&i| used[i]).collect();
        let vars = keep.iter().map(|&i| vars[i].clone()).collect();
        let terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        MultiPoly { vars, terms }
    }

    fn aligned(&self, universe: &[String]) -> TermMap {
        if self.vars == universe {
            return self.terms.clone();
        }
        let map = index_map(&self.vars, universe);
        self.terms
            .iter()
            .map(|(m, c)| (remap(&m.0, &map, universe.len()), c.clone()))
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn contains_var(&self, var: &str) -> bool {
        self.var_index(var).is_some()
    }

    fn var_index(&self, var: &str) -> Option<usize> {
        self.vars.binary_search_by(|v| v.as_str().cmp(var)).ok()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total_degree)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Least exponent of `var` over all terms.
    pub fn order_at_zero(&self, var: &str) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::OrderOfZero);
        }
        Ok(match self.var_index(var) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0),
            None => 0,
        })
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn combine(&self, other: &MultiPoly, sign: bool) -> MultiPoly {
        let universe = union_vars(&self.vars, &other.vars);
        let mut terms = self.aligned(&universe);
        let map = index_map(&other.vars, &universe);
        for (m, c) in &other.terms {
            let c = if sign { c.clone() } else { -c };
            accumulate(&mut terms, remap(&m.0, &map, universe.len()), c);
        }
        MultiPoly::normalized(universe, terms)
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero();
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        let universe = union_vars(&self.vars, &other.vars);
        let a: Vec<(Monomial, &Rational)> = {
            let map = index_map(&self.vars, &universe);
            self.terms
                .iter()
                .map(|(m, c)| (remap(&m.0, &map, universe.len()), c))
                .collect()
        };
        let b: Vec<(Monomial, &Rational)> = {
            let map = index_map(&other.vars, &universe);
            other
                .terms
                .iter()
                .map(|(m, c)| (remap(&m.0, &map, universe.len()), c))
                .collect()
        };
        let mut terms = TermMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                accumulate(&mut terms, ma.product(mb), *ca * *cb);
            }
        }
        MultiPoly::normalized(universe, terms)
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let universe = union_vars(&self.vars, &divisor.vars);
        let mut rem = self.aligned(&universe);
        let div: Vec<(Monomial, Rational)> = divisor.aligned(&universe).into_iter().rev().collect();
        let (lead_m, lead_c) = div[0].clone();
        let mut quot = TermMap::new();
        while let Some((m, c)) = rem.iter().next_back() {
            if !lead_m.divides(m) {
                return None;
            }
            let qm = m.quotient(&lead_m);
            let qc = c / &lead_c;
            for (dm, dc) in &div {
                accumulate(&mut rem, qm.product(dm), -(&qc * dc));
            }
            quot.insert(qm, qc);
        }
        Some(MultiPoly::normalized(universe, quot))
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: &str, value: &MultiPoly) -> MultiPoly {
        let Some(idx) = self.var_index(var) else {
            return self.clone();
        };
        // group by exponent of `var`
        let mut by_power: BTreeMap<u32, TermMap> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let e = rest[idx];
            rest[idx] = 0;
            by_power
                .entry(e)
                .or_default()
                .insert(Monomial(rest), c.clone());
        }
        let mut out = MultiPoly::zero();
        let mut power = MultiPoly::one();
        let mut current = 0;
        for (e, terms) in by_power {
            while current < e {
                power = &power * value;
                current += 1;
            }
            let coeff = MultiPoly::normalized(self.vars.clone(), terms);
            out = &out + &(&coeff * &power);
        }
        out
    }

    /// Substitutes rational values for the assigned variables.
    pub fn evaluate(&self, values: &BTreeMap<String, Rational>) -> MultiPoly {
        let assigned: Vec<Option<&Rational>> = self.vars.iter().map(|v| values.get(v)).collect();
        let mut terms = TermMap::new();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut rest = m.0.clone();
            for (i, val) in assigned.iter().enumerate() {
                if let Some(val) = val {
                    c *= num_traits::pow(Rational::clone(val), rest[i] as usize);
                    rest[i] = 0;
                }
            }
            accumulate(&mut terms, Monomial(rest), c);
        }
        MultiPoly::normalized(self.vars.clone(), terms)
    }

    /// Full evaluation; every variable must be assigned.
    pub fn evaluate_all(&self, values: &BTreeMap<String, Rational>) -> Result<Rational> {
        if let Some(v) = self.vars.iter().find(|v| !values.contains_key(*v)) {
            return Err(Error::Unassigned(v.clone()));
        }
        Ok(self
            .evaluate(values)
            .constant_value()
            .expect("all variables assigned"))
    }

    pub fn derivative(&self, var: &str) -> MultiPoly {
        let Some(idx) = self.var_index(var) else {
            return MultiPoly::zero();
        };
        let mut terms = TermMap::new();
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] -= 1;
            accumulate(
                &mut terms,
                Monomial(exps),
                c * Rational::from_integer(e.into()),
            );
        }
        MultiPoly::normalized(self.vars.clone(), terms)
    }

    /// Dense coefficient list with respect to `var`: `self = Σ out[k]·var^k`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MultiPoly> {
        let Some(idx) = self.var_index(var) else {
            return if self.is_zero() {
                Vec::new()
            } else {
                vec![self.clone()]
            };
        };
        let mut buckets: Vec<TermMap> = vec![TermMap::new(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = m.0.clone();
            let e = rest[idx] as usize;
            rest[idx] = 0;
            buckets[e].insert(Monomial(rest), c.clone());
        }
        buckets
            .into_iter()
            .map(|t| MultiPoly::normalized(self.vars.clone(), t))
            .collect()
    }

    /// Sum of `weight(var)·exponent` for each term; `None` if the terms disagree.
    pub fn weighted_degree(&self, weights: &BTreeMap<String, u32>) -> Option<Option<u32>> {
        let w: Vec<u32> = self
            .vars
            .iter()
            .map(|v| weights.get(v).copied().unwrap_or(0))
            .collect();
        let mut degrees = self
            .terms
            .keys()
            .map(|m| m.0.iter().zip(&w).map(|(e, w)| e * w).sum::<u32>());
        let Some(first) = degrees.next() else {
            return Some(None);
        };
        degrees.all(|d| d == first).then_some(Some(first))
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.product(rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
