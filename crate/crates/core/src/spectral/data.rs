use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, UniPoly};

/// Spectral variable of `P`.
pub const SPECTRAL_VAR: &str = "v";
/// Variable of the half-degree polynomial `P̃`, standing for `v²`.
pub const HALF_VAR: &str = "q";

/// Coefficients `Q_2, Q_4, …, Q_{2n}` of an even characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    n: usize,
    q: BTreeMap<usize, MultiPoly>,
}

pub fn symbol(index: usize) -> String {
    format!("Q{index}")
}

impl SpectralData {
    /// `q` must hold exactly the indices `2, 4, …, 2n`.
    pub fn new(n: usize, q: BTreeMap<usize, MultiPoly>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpectralData("n must be positive".into()));
        }
        let expected: Vec<usize> = (1..=n).map(|j| 2 * j).collect();
        let got: Vec<usize> = q.keys().copied().collect();
        if got != expected {
            return Err(Error::InvalidSpectralData(format!(
                "expected coefficient indices {expected:?}, got {got:?}"
            )));
        }
        if let Some((k, _)) = q
            .iter()
            .find(|(_, p)| p.contains_var(SPECTRAL_VAR) || p.contains_var(HALF_VAR))
        {
            return Err(Error::InvalidSpectralData(format!(
                "Q{k} involves the spectral variable"
            )));
        }
        Ok(SpectralData { n, q })
    }

    /// Fully symbolic data: `Q_{2j}` is the variable `Q{2j}`.
    pub fn symbolic(n: usize) -> Result<Self> {
        let q = (1..=n)
            .map(|j| (2 * j, MultiPoly::var(&symbol(2 * j))))
            .collect();
        Self::new(n, q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Q_index`; index 0 is the leading 1.
    pub fn coefficient(&self, index: usize) -> MultiPoly {
        if index == 0 {
            return MultiPoly::one();
        }
        self.q.get(&index).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &BTreeMap<usize, MultiPoly> {
        &self.q
    }

    /// `Q_{2n}`, the constant term of `P̃`.
    pub fn top(&self) -> &MultiPoly {
        &self.q[&(2 * self.n)]
    }

    pub fn map(&self, f: impl Fn(usize, &MultiPoly) -> MultiPoly) -> SpectralData {
        SpectralData {
            n: self.n,
            q: self.q.iter().map(|(k, p)| (*k, f(*k, p))).collect(),
        }
    }

    /// `P̃(q) = qⁿ + Q_2 q^{n-1} + … + Q_{2n}`.
    pub fn p_tilde(&self) -> UniPoly {
        let coeffs = (0..=self.n)
            .map(|k| self.coefficient(2 * (self.n - k)))
            .collect();
        UniPoly::new(HALF_VAR, coeffs).expect("validated coefficients")
    }

    /// `P(v) = P̃(v²)`.
    pub fn p(&self) -> UniPoly {
        let coeffs = (0..=2 * self.n)
            .map(|k| {
                if k % 2 == 0 {
                    self.coefficient(2 * self.n - k)
                } else {
                    MultiPoly::zero()
                }
            })
            .collect();
        UniPoly::new(SPECTRAL_VAR, coeffs).expect("validated coefficients")
    }
}

/// Returns `(P, P̃)`.
pub fn build_p(data: &SpectralData) -> (UniPoly, UniPoly) {
    (data.p(), data.p_tilde())
}
