use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::exactalg::{RatFunc, Rational};

pub const RANK_VAR: &str = "n";
pub const GENUS_VAR: &str = "g";

/// `a·λ + b·φ + c·δ` with coefficients in `ℚ(n, g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicClass {
    pub lambda: RatFunc,
    pub phi: RatFunc,
    pub delta: RatFunc,
}

impl PicClass {
    pub fn new(lambda: RatFunc, phi: RatFunc, delta: RatFunc) -> Self {
        PicClass { lambda, phi, delta }
    }

    pub fn zero() -> Self {
        PicClass::new(RatFunc::zero(), RatFunc::zero(), RatFunc::zero())
    }

    pub fn lambda() -> Self {
        PicClass::new(RatFunc::integer(1), RatFunc::zero(), RatFunc::zero())
    }

    pub fn phi() -> Self {
        PicClass::new(RatFunc::zero(), RatFunc::integer(1), RatFunc::zero())
    }

    pub fn delta() -> Self {
        PicClass::new(RatFunc::zero(), RatFunc::zero(), RatFunc::integer(1))
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.phi.is_zero() && self.delta.is_zero()
    }

    pub fn add(&self, other: &PicClass) -> PicClass {
        PicClass::new(
            self.lambda.add(&other.lambda),
            self.phi.add(&other.phi),
            self.delta.add(&other.delta),
        )
    }

    pub fn sub(&self, other: &PicClass) -> PicClass {
        PicClass::new(
            self.lambda.sub(&other.lambda),
            self.phi.sub(&other.phi),
            self.delta.sub(&other.delta),
        )
    }

    pub fn scale(&self, c: &RatFunc) -> PicClass {
        PicClass::new(self.lambda.mul(c), self.phi.mul(c), self.delta.mul(c))
    }

    pub fn substitute(&self, var: &str, value: &RatFunc) -> PicClass {
        PicClass::new(
            self.lambda.substitute(var, value),
            self.phi.substitute(var, value),
            self.delta.substitute(var, value),
        )
    }

    /// Names of the generators whose coefficients are nonzero.
    pub fn support(&self) -> Vec<&'static str> {
        [
            ("lambda", &self.lambda),
            ("phi", &self.phi),
            ("delta", &self.delta),
        ]
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(name, _)| name)
        .collect()
    }

    /// Coefficients at a point `(n, g)`; fails on a pole.
    pub fn evaluate(&self, n: i64, g: i64) -> Result<[Rational; 3]> {
        let point: BTreeMap<String, Rational> = [
            (RANK_VAR.to_string(), Rational::from_integer(n.into())),
            (GENUS_VAR.to_string(), Rational::from_integer(g.into())),
        ]
        .into();
        Ok([
            self.lambda.evaluate(&point)?,
            self.phi.evaluate(&point)?,
            self.delta.evaluate(&point)?,
        ])
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})λ + ({})φ + ({})δ",
            self.lambda, self.phi, self.delta
        )
    }
}

impl Serialize for PicClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<&str, String> = [
            ("lambda", self.lambda.to_string()),
            ("phi", self.phi.to_string()),
            ("delta", self.delta.to_string()),
        ]
        .into();
        map.serialize(serializer)
    }
}

/// `N((N+1)(12λ - δ) - 2(g-1)(2N+1)φ)`.
pub fn star_class(big_n: &RatFunc) -> PicClass {
    let one = RatFunc::integer(1);
    let g1 = RatFunc::var(GENUS_VAR).sub(&one);
    let n_n1 = big_n.mul(&big_n.add(&one));
    let two_n1 = big_n.mul(&RatFunc::integer(2)).add(&one);
    PicClass::new(
        n_n1.mul(&RatFunc::integer(12)),
        RatFunc::integer(-2).mul(&g1).mul(big_n).mul(&two_n1),
        n_n1.neg(),
    )
}
