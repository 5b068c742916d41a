use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// Quotient of two polynomials.
///
/// Normalized by content: the denominator's leading coefficient is 1, and
/// the fraction collapses to a polynomial when the denominator divides the
/// numerator. Common factors are cancelled only when the denominator is
/// univariate; there is no multivariate GCD, so equality goes through
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(),
            };
        }
        if let Some(q) = num.div_exact(&den) {
            return RatFunc {
                num: q,
                den: MultiPoly::one(),
            };
        }
        let (num, den) = cancel_univariate(num, den);
        if let Some(q) = num.div_exact(&den) {
            return RatFunc {
                num: q,
                den: MultiPoly::one(),
            };
        }
        let lc = den.leading_coefficient().expect("nonzero").recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn integer(c: i64) -> Self {
        Self::from_poly(MultiPoly::integer(c))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(Rational::new(num.into(), den.into()))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.den == other.den {
            return Self::normalize(&self.num + &other.num, self.den.clone());
        }
        Self::normalize(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        Self::normalize(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        Self::normalize(self.num.pow(e), self.den.pow(e))
    }

    pub fn substitute(&self, var: &str, value: &RatFunc) -> RatFunc {
        // clear the denominator of `value` by homogenizing each side to a common degree
        let d = self.num.degree_in(var).max(self.den.degree_in(var));
        let lift = |p: &MultiPoly| -> MultiPoly {
            p.coefficients_in(var)
                .iter()
                .enumerate()
                .map(|(k, c)| c * &(&value.num.pow(k as u32) * &value.den.pow(d - k as u32)))
                .fold(MultiPoly::zero(), |acc, t| &acc + &t)
        };
        Self::normalize(lift(&self.num), lift(&self.den))
    }

    pub fn evaluate(&self, values: &BTreeMap<String, Rational>) -> Result<Rational> {
        let den = self.den.evaluate_all(values)?;
        if den.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.evaluate_all(values)? / den)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }
}

/// Dense coefficients (constant term first) of a polynomial in one variable.
fn dense(p: &MultiPoly, var: &str) -> Vec<Rational> {
    let k = p.vars().iter().position(|v| v == var);
    let mut out = Vec::new();
    for (e, c) in p.terms() {
        let d = k.map_or(0, |k| e[k] as usize);
        if out.len() <= d {
            out.resize(d + 1, Rational::zero());
        }
        out[d] = c.clone();
    }
    out
}

fn trim(mut a: Vec<Rational>) -> Vec<Rational> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let lb = b.last().expect("nonzero divisor");
    while a.len() >= b.len() {
        let f = a.last().expect("nonempty") / lb;
        let shift = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            a[shift + i] -= &f * c;
        }
        a = trim(a);
    }
    a
}

fn gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    while !b.is_empty() {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    a
}

/// Cancels the GCD of numerator and denominator when the denominator
/// involves a single variable.
fn cancel_univariate(num: MultiPoly, den: MultiPoly) -> (MultiPoly, MultiPoly) {
    let [var] = den.vars() else {
        return (num, den);
    };
    let var = var.clone();
    let others: Vec<usize> = (0..num.vars().len())
        .filter(|&i| num.vars()[i] != var)
        .collect();
    let k = num.vars().iter().position(|v| *v == var);
    let mut groups: BTreeMap<Vec<u32>, Vec<Rational>> = BTreeMap::new();
    for (e, c) in num.terms() {
        let key: Vec<u32> = others.iter().map(|&i| e[i]).collect();
        let d = k.map_or(0, |k| e[k] as usize);
        let g = groups.entry(key).or_default();
        if g.len() <= d {
            g.resize(d + 1, Rational::zero());
        }
        g[d] = c.clone();
    }
    let mut g = dense(&den, &var);
    for coeffs in groups.into_values() {
        if g.len() <= 1 {
            break;
        }
        g = gcd(g, trim(coeffs));
    }
    if g.len() <= 1 {
        return (num, den);
    }
    let x = MultiPoly::var(&var);
    let divisor = g.iter().enumerate().fold(MultiPoly::zero(), |acc, (i, c)| {
        &acc + &x.pow(i as u32).scale(c)
    });
    match (num.div_exact(&divisor), den.div_exact(&divisor)) {
        (Some(a), Some(b)) => (a, b),
        _ => (num, den),
    }
}

/// `a = b` iff `a.num · b.den = b.num · a.den`.
pub fn ratfunc_equal(a: &RatFunc, b: &RatFunc) -> bool {
    &a.num * &b.den == &b.num * &a.den
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        ratfunc_equal(self, other)
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.fmt(f);
        }
        let wrap = |p: &MultiPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

/// Serialized as its printed form.
impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
