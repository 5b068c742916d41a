use std::fmt;

use super::MultiPoly;
use crate::error::{Error, Result};

/// Polynomial in one distinguished variable with `MultiPoly` coefficients.
///
/// `coeffs[k]` multiplies `var^k`. The zero polynomial has no coefficients;
/// otherwise the last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<MultiPoly>,
}

impl UniPoly {
    pub fn new(var: &str, mut coeffs: Vec<MultiPoly>) -> Result<Self> {
        if coeffs.iter().any(|c| c.contains_var(var)) {
            return Err(Error::CoefficientInMainVariable(var.to_string()));
        }
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        Ok(UniPoly {
            var: var.to_string(),
            coeffs,
        })
    }

    /// Views `p` as a polynomial in `var`.
    pub fn from_multi(p: &MultiPoly, var: &str) -> Self {
        UniPoly {
            var: var.to_string(),
            coeffs: p.coefficients_in(var),
        }
    }

    pub fn to_multi(&self) -> MultiPoly {
        let x = MultiPoly::var(&self.var);
        self.coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| &(&acc * &x) + c)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Coefficient of `var^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&MultiPoly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(MultiPoly::is_one)
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &MultiPoly::integer(k as i64) * c)
            .collect();
        UniPoly {
            var: self.var.clone(),
            coeffs,
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> UniPoly {
        let mut coeffs: Vec<MultiPoly> = self.coeffs.iter().map(f).collect();
        while coeffs.last().is_some_and(MultiPoly::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            var: self.var.clone(),
            coeffs,
        }
    }

    pub fn rename(&self, var: &str) -> Result<UniPoly> {
        UniPoly::new(var, self.coeffs.clone())
    }

    /// Horner evaluation at a polynomial value of the main variable.
    pub fn evaluate(&self, value: &MultiPoly) -> MultiPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(), |acc, c| &(&acc * value) + c)
    }

    fn check_var(&self, other: &UniPoly) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var.clone(), other.var.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            &self.var,
            (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_var(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            &self.var,
            (0..len).map(|k| &self.coeff(k) - &other.coeff(k)).collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(&self.var, Vec::new());
        }
        let mut coeffs = vec![MultiPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        UniPoly::new(&self.var, coeffs)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_multi().fmt(f)
    }
}
