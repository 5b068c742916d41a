//! The discriminant of an even polynomial splits as `W = c · Q_{2n} · Δ²`
//! with `Δ = disc(P̃)` and `|c| = 4ⁿ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::data::{symbol, SpectralData, HALF_VAR};
use crate::error::{Error, Result};
use crate::exactalg::{discriminant, MultiPoly, Rational, UniPoly};

/// Largest `n` handled with fully symbolic coefficients.
pub const MAX_SYMBOLIC_N: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    /// `disc_v(P)`.
    pub w: MultiPoly,
    /// `disc_q(P̃)`, or 1 when `n = 1`.
    pub delta: MultiPoly,
    /// Reduced discriminant `c · Q_{2n} · Δ`.
    pub w_prime: MultiPoly,
    pub constant: Rational,
}

/// `Δ`, with the convention `Δ = 1` for `n = 1`.
pub fn half_discriminant(data: &SpectralData) -> Result<MultiPoly> {
    if data.n() == 1 {
        return Ok(MultiPoly::one());
    }
    discriminant(&data.p_tilde())
}

pub fn factorize_discriminant(data: &SpectralData) -> Result<Factorization> {
    let n = data.n();
    let w = discriminant(&data.p())?;
    let delta = half_discriminant(data)?;
    let base = data.top() * &delta;
    let product = &base * &delta;
    let expected = Rational::from_integer(BigInt::from(4).pow(n as u32));
    let constant = w
        .div_exact(&product)
        .and_then(|q| q.constant_value())
        .filter(|c| c.abs() == expected);
    let Some(constant) = constant else {
        let guess = if n.is_multiple_of(2) {
            expected
        } else {
            -expected
        };
        let residual = &w - &product.scale(&guess);
        return Err(Error::FactorizationViolated {
            residual: residual.to_string(),
        });
    };
    let w_prime = base.scale(&constant);
    Ok(Factorization {
        n,
        w,
        delta,
        w_prime,
        constant,
    })
}

pub fn factorize_symbolic(n: usize) -> Result<Factorization> {
    if !(1..=MAX_SYMBOLIC_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_SYMBOLIC_N as i64,
        });
    }
    factorize_discriminant(&SpectralData::symbolic(n)?)
}

/// Outcome of checking the ℂ* action `Q_{2j} ↦ ξ^{2j} Q_{2j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalingReport {
    pub n: usize,
    /// `ξ^{2n} P(ξ^{-1} v)` equals `P` built from the scaled coefficients.
    pub polynomial_matches: bool,
    pub delta_weight: u32,
    pub delta_matches: bool,
    pub w_weight: u32,
    pub w_matches: bool,
    pub residual: Option<String>,
}

impl ScalingReport {
    pub fn passed(&self) -> bool {
        self.polynomial_matches && self.delta_matches && self.w_matches
    }
}

pub const SCALE_VAR: &str = "xi";

fn scale_symbols(p: &MultiPoly, n: usize) -> MultiPoly {
    let xi = MultiPoly::var(SCALE_VAR);
    (1..=n).fold(p.clone(), |acc, j| {
        let s = MultiPoly::var(&symbol(2 * j));
        acc.substitute(&symbol(2 * j), &(&xi.pow(2 * j as u32) * &s))
    })
}

/// Weights of the symbols: `Q_{2j}` has weight `2j`.
pub fn symbol_weights(n: usize) -> BTreeMap<String, u32> {
    (1..=n).map(|j| (symbol(2 * j), 2 * j as u32)).collect()
}

/// Checks the scaling action on symbolic data, reusing an already computed
/// factorization for `Δ` and `W`.
pub fn scaling_action(fact: &Factorization) -> Result<ScalingReport> {
    let n = fact.n;
    let data = SpectralData::symbolic(n)?;
    let xi = MultiPoly::var(SCALE_VAR);
    let p = data.p();
    let deg = 2 * n;
    let homogenized = UniPoly::new(
        p.var(),
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * &xi.pow((deg - k) as u32))
            .collect(),
    )?;
    let scaled_data = data.map(|_, q| scale_symbols(q, n));
    let scaled_p = scaled_data.p();
    let polynomial_matches = homogenized == scaled_p;

    let delta_weight = (2 * n * (n - 1)) as u32;
    let w_weight = (2 * n * (2 * n - 1)) as u32;
    let delta_residual = &scale_symbols(&fact.delta, n) - &(&xi.pow(delta_weight) * &fact.delta);
    let w_residual = &scale_symbols(&fact.w, n) - &(&xi.pow(w_weight) * &fact.w);
    let residual = [
        (!polynomial_matches).then(|| {
            format!(
                "P: {}",
                homogenized
                    .sub(&scaled_p)
                    .map(|r| r.to_string())
                    .unwrap_or_default()
            )
        }),
        (!delta_residual.is_zero()).then(|| format!("Delta: {delta_residual}")),
        (!w_residual.is_zero()).then(|| format!("W: {w_residual}")),
    ]
    .into_iter()
    .flatten()
    .reduce(|a, b| format!("{a}; {b}"));
    Ok(ScalingReport {
        n,
        polynomial_matches,
        delta_weight,
        delta_matches: delta_residual.is_zero(),
        w_weight,
        w_matches: w_residual.is_zero(),
        residual,
    })
}

/// At a zero of `Q_{2n}`, `P̃ = q·R(q)` and `Δ = Q_{2n-2}² · disc(R)`.
///
/// Returns `Δ|_{Q_{2n}=0} / Q_{2n-2}²`, which must equal `disc(R)` (1 for `n = 2`).
pub fn delta_at_top_zero(n: usize) -> Result<(MultiPoly, MultiPoly)> {
    if n < 2 {
        return Err(Error::Precondition("needs n >= 2".into()));
    }
    let data = SpectralData::symbolic(n)?;
    let restricted = half_discriminant(&data)?.substitute(&symbol(2 * n), &MultiPoly::zero());
    let sub_top = MultiPoly::var(&symbol(2 * n - 2));
    let quotient =
        restricted
            .div_exact(&sub_top.pow(2))
            .ok_or_else(|| Error::FactorizationViolated {
                residual: restricted.to_string(),
            })?;
    let deflated = UniPoly::new(HALF_VAR, data.p_tilde().coeffs()[1..].to_vec())?;
    let deflated_disc = if n == 2 {
        MultiPoly::one()
    } else {
        discriminant(&deflated)?
    };
    Ok((quotient, deflated_disc))
}

/// Sign of the factorization constant relative to `4ⁿ`.
pub fn constant_sign(c: &Rational) -> i8 {
    if c.is_negative() {
        -1
    } else if c.is_zero() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(i: usize) -> MultiPoly {
        MultiPoly::var(&symbol(i))
    }

    fn int(c: i64) -> MultiPoly {
        MultiPoly::integer(c)
    }

    #[test]
    fn rank_one_factorization() {
        let f = factorize_symbolic(1).unwrap();
        assert_eq!(f.w, &int(-4) * &q(2));
        assert!(f.delta.is_one());
        assert_eq!(f.constant, Rational::from_integer((-4).into()));
    }

    #[test]
    fn rank_two_factorization() {
        let f = factorize_symbolic(2).unwrap();
        let delta = &q(2).pow(2) - &(&int(4) * &q(4));
        assert_eq!(f.delta, delta);
        assert_eq!(f.w, &(&int(16) * &q(4)) * &delta.pow(2));
        assert_eq!(f.constant, Rational::from_integer(16.into()));
        assert_eq!(f.w_prime, &(&int(16) * &q(4)) * &delta);
    }

    #[test]
    fn rank_two_concrete_delta() {
        let x = MultiPoly::var("x");
        let t = MultiPoly::var("t");
        let data = SpectralData::new(2, [(2, x.clone()), (4, &x + &t)].into()).unwrap();
        let f = factorize_discriminant(&data).unwrap();
        let expected = &(&x.pow(2) - &(&int(4) * &x)) - &(&int(4) * &t);
        assert_eq!(f.delta, expected);
    }

    #[test]
    fn degenerate_concrete_data_is_reported() {
        // Q_4 = 0 makes Q_{2n}·Δ² vanish while W vanishes too; division by zero fails.
        let data =
            SpectralData::new(2, [(2, MultiPoly::one()), (4, MultiPoly::zero())].into()).unwrap();
        assert!(matches!(
            factorize_discriminant(&data),
            Err(Error::FactorizationViolated { .. })
        ));
    }

    #[test]
    fn symbolic_range() {
        assert!(matches!(
            factorize_symbolic(0),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            factorize_symbolic(5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn scaling_weights() {
        for n in 1..=3 {
            let f = factorize_symbolic(n).unwrap();
            let report = scaling_action(&f).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.w_weight as usize, 2 * n * (2 * n - 1));
            let weights = symbol_weights(n);
            assert_eq!(f.w.weighted_degree(&weights), Some(Some(report.w_weight)));
            if n > 1 {
                assert_eq!(
                    f.delta.weighted_degree(&weights),
                    Some(Some(report.delta_weight))
                );
            }
        }
    }

    #[test]
    fn perfect_square_at_zero_of_top_coefficient() {
        for n in 2..=3 {
            let (quotient, deflated) = delta_at_top_zero(n).unwrap();
            assert_eq!(quotient, deflated);
        }
    }
}
