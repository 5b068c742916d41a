//! One-parameter local families crossing a discriminant component, and the
//! vanishing order of the matching detector along the family.
//!
//! A family lives in the base coordinate `x` and the transversal parameter
//! `t`; at `t = 0` the named degeneration sits at `x = 0`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::data::{SpectralData, HALF_VAR};
use super::factorization::half_discriminant;
use crate::component::Component;
use crate::error::{Error, Result};
use crate::exactalg::{discriminant, rational, resultant, MultiPoly, Rational, UniPoly};

pub const BASE_VAR: &str = "x";
pub const ARC_VAR: &str = "t";

/// Maximum number of perturbations tried when a fixture fails genericity.
pub const MAX_RETRIES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFamily {
    pub label: Component,
    pub n: usize,
    #[serde(rename = "Q")]
    pub q: BTreeMap<usize, MultiPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Detector {
    /// `disc_x(Q_{2n})`
    TopDiscriminant,
    /// `Res_x(Q_{2n}, Δ)`
    TopDeltaResultant,
    /// `disc_x(Δ)`
    DeltaDiscriminant,
}

impl Detector {
    pub fn for_component(c: Component) -> Detector {
        match c.locus() {
            1 => Detector::TopDiscriminant,
            2 => Detector::TopDeltaResultant,
            _ => Detector::DeltaDiscriminant,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Detector::TopDiscriminant => "disc_x(Q2n)",
            Detector::TopDeltaResultant => "Res_x(Q2n, Delta)",
            Detector::DeltaDiscriminant => "disc_x(Delta)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicity {
    pub label: Component,
    pub order: u32,
    pub detector: Detector,
    pub detector_value: MultiPoly,
    pub delta: MultiPoly,
}

fn x() -> MultiPoly {
    MultiPoly::var(BASE_VAR)
}

fn t() -> MultiPoly {
    MultiPoly::var(ARC_VAR)
}

fn int(c: i64) -> MultiPoly {
    MultiPoly::integer(c)
}

fn konst(c: &Rational) -> MultiPoly {
    MultiPoly::constant(c.clone())
}

/// Reads `Q_2 … Q_{2n}` off a monic `P̃` given as a polynomial in `q`.
fn from_p_tilde(label: Component, n: usize, p_tilde: &MultiPoly) -> LocalFamily {
    let u = UniPoly::from_multi(p_tilde, HALF_VAR);
    debug_assert_eq!(u.degree(), Some(n));
    let q = (1..=n).map(|j| (2 * j, u.coeff(n - j))).collect();
    LocalFamily { label, n, q }
}

/// Default free constants of each built-in fixture.
pub fn default_constants(_label: Component) -> Vec<Rational> {
    vec![rational(1, 1)]
}

impl LocalFamily {
    pub fn new(label: Component, n: usize, q: BTreeMap<usize, MultiPoly>) -> Result<Self> {
        let family = LocalFamily { label, n, q };
        family.spectral_data()?;
        if n < label.min_n() {
            return Err(Error::Precondition(format!(
                "component {label} needs n >= {}",
                label.min_n()
            )));
        }
        Ok(family)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: LocalFamily = serde_json::from_str(s).map_err(|e| Error::Encoding(e.to_string()))?;
        LocalFamily::new(f.label, f.n, f.q)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family serializes")
    }

    pub fn spectral_data(&self) -> Result<SpectralData> {
        SpectralData::new(self.n, self.q.clone())
    }

    /// Built-in fixture with explicit free constants (one per fixture).
    pub fn fixture_with(label: Component, constants: &[Rational]) -> LocalFamily {
        let a = konst(&constants[0]);
        let q = MultiPoly::var(HALF_VAR);
        let quarter = MultiPoly::constant(rational(1, 4));
        match label {
            // Q_4 acquires a double zero, Δ stays a unit.
            Component::B => LocalFamily {
                label,
                n: 2,
                q: [(2, a), (4, &x().pow(2) - &t())].into(),
            },
            // zero of Q_4 meets a zero of Δ where Q_2 also vanishes
            Component::Ac => LocalFamily {
                label,
                n: 2,
                q: [(2, &a * &(&x() - &t())), (4, x())].into(),
            },
            // P̃ = (q - x)((q - a)² - (x + t))
            Component::Bm => {
                let quad = &(&q - &a).pow(2) - &(&x() + &t());
                from_p_tilde(label, 3, &(&(&q - &x()) * &quad))
            }
            // Δ = x² - t
            Component::Bb => LocalFamily {
                label,
                n: 2,
                q: [
                    (2, &a + &x()),
                    (
                        4,
                        &quarter * &(&(&a.pow(2) + &(&(&int(2) * &a) * &x())) + &t()),
                    ),
                ]
                .into(),
            },
            // P̃ = (q - a)³ + (x + t)(q - a) + (x + 2t)
            Component::Cc => {
                let s = &q - &a;
                let alpha = &x() + &t();
                let beta = &x() + &(&int(2) * &t());
                from_p_tilde(label, 3, &(&(&s.pow(3) + &(&alpha * &s)) + &beta))
            }
            // P̃ = f·g, two quadratics whose double roots appear at x = ±t;
            // Res(f, g) = (4 + t)² does not depend on x.
            Component::Mm => {
                let u = &quarter * &(&(&x() - &t()) * &(&(&int(8) + &x()) + &t()));
                let w = &quarter * &(&(&x() + &t()) * &(&(&x() - &t()) - &int(8)));
                let b = &a + &int(4);
                let f = &(&q.pow(2) + &(&a * &q)) + &(&quarter * &(&a.pow(2) - &u));
                let g = &(&q.pow(2) + &(&b * &q)) + &(&quarter * &(&b.pow(2) - &w));
                from_p_tilde(label, 4, &(&f * &g))
            }
        }
    }

    /// Built-in fixture, perturbing the free constants by +1 until it passes
    /// the genericity checks (at most [`MAX_RETRIES`] perturbations).
    pub fn fixture(label: Component) -> Result<LocalFamily> {
        let mut constants = default_constants(label);
        let mut last_err = None;
        for _ in 0..=MAX_RETRIES {
            let family = LocalFamily::fixture_with(label, &constants);
            match family.check_generic() {
                Ok(()) => return Ok(family),
                Err(e) => last_err = Some(e),
            }
            for c in &mut constants {
                *c += rational(1, 1);
            }
        }
        Err(last_err.expect("at least one attempt"))
    }

    fn at_origin(&self, p: &MultiPoly) -> Rational {
        let vals: BTreeMap<String, Rational> = [
            (BASE_VAR.to_string(), Rational::zero()),
            (ARC_VAR.to_string(), Rational::zero()),
        ]
        .into();
        p.evaluate(&vals)
            .constant_value()
            .expect("family polynomials only involve x and t")
    }

    /// Auxiliary nonvanishing conditions at the merge point plus a nonzero
    /// detector that vanishes at `t = 0`.
    pub fn check_generic(&self) -> Result<()> {
        let data = self.spectral_data()?;
        if let Some(extra) = self
            .q
            .values()
            .flat_map(|p| p.vars().iter())
            .find(|v| *v != BASE_VAR && *v != ARC_VAR)
        {
            return Err(Error::InvalidSpectralData(format!(
                "family coefficients may only involve x and t, found `{extra}`"
            )));
        }
        let n = self.n;
        let top = self.at_origin(data.top());
        let fail = |msg: &str| Err(Error::DegenerateFamily(format!("{}: {msg}", self.label)));
        match self.label {
            Component::B => {
                if !top.is_zero() {
                    return fail("Q2n must vanish at the merge point");
                }
                if self.at_origin(&half_discriminant(&data)?).is_zero() {
                    return fail("Delta vanishes at the merge point");
                }
            }
            Component::Bb | Component::Cc | Component::Mm => {
                if top.is_zero() {
                    return fail("Q2n vanishes at the merge point");
                }
            }
            Component::Ac => {
                // 0 is a double root of P̃(0, 0, ·); the deflated polynomial must be generic
                let below = self.at_origin(&data.coefficient(2 * n - 2));
                if !top.is_zero() || !below.is_zero() {
                    return fail("0 must be a double root at the merge point");
                }
                if self.at_origin(&data.coefficient(2 * n - 4)).is_zero() {
                    return fail("0 is more than a double root");
                }
                if n >= 4 {
                    let deflated: Vec<MultiPoly> = (0..=n - 2)
                        .map(|k| konst(&self.at_origin(&data.coefficient(2 * (n - 2 - k)))))
                        .collect();
                    let disc = discriminant(&UniPoly::new(HALF_VAR, deflated)?)?;
                    if disc.is_zero() {
                        return fail("deflated discriminant vanishes at the merge point");
                    }
                }
            }
            Component::Bm => {
                if self.at_origin(&data.coefficient(2 * n - 2)).is_zero() {
                    return fail("0 must stay a simple root");
                }
            }
        }
        let (detector_value, _) = self.detector_value()?;
        if detector_value.is_zero() {
            return fail("detector vanishes identically");
        }
        if detector_value.order_at_zero(ARC_VAR)? == 0 {
            return fail("detector does not vanish at t = 0");
        }
        Ok(())
    }

    fn detector_value(&self) -> Result<(MultiPoly, MultiPoly)> {
        let data = self.spectral_data()?;
        let delta = half_discriminant(&data)?;
        let top = UniPoly::from_multi(data.top(), BASE_VAR);
        let value = match Detector::for_component(self.label) {
            Detector::TopDiscriminant => discriminant_in_base(&top)?,
            Detector::TopDeltaResultant => resultant(&top, &UniPoly::from_multi(&delta, BASE_VAR))?,
            Detector::DeltaDiscriminant => {
                discriminant_in_base(&UniPoly::from_multi(&delta, BASE_VAR))?
            }
        };
        Ok((value, delta))
    }
}

/// Discriminant in `x` of a polynomial that need not be monic.
///
/// A constant leading coefficient is divided out first. Otherwise
/// `Res_x(f, f')` is returned; it differs from the discriminant by the factor
/// `±lc`, which is a unit near `t = 0` whenever `lc(t = 0) ≠ 0`.
fn discriminant_in_base(f: &UniPoly) -> Result<MultiPoly> {
    let lc = f
        .leading_coefficient()
        .ok_or_else(|| Error::DegenerateFamily("zero polynomial".into()))?;
    match lc.constant_value() {
        Some(c) => {
            let inv = c.recip();
            discriminant(&f.map_coeffs(|p| p.scale(&inv)))
        }
        None => {
            let at_zero = lc.substitute(ARC_VAR, &MultiPoly::zero());
            if at_zero.is_zero() {
                return Err(Error::DegenerateFamily(
                    "leading coefficient vanishes at t = 0".into(),
                ));
            }
            resultant(f, &f.derivative())
        }
    }
}

/// Order in `t` of the detector matching the family's component.
pub fn stratum_multiplicity(family: &LocalFamily) -> Result<Multiplicity> {
    family.check_generic()?;
    let (detector_value, delta) = family.detector_value()?;
    Ok(Multiplicity {
        label: family.label,
        order: detector_value.order_at_zero(ARC_VAR)?,
        detector: Detector::for_component(family.label),
        detector_value,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bb_family_delta_and_order() {
        let f = LocalFamily::fixture(Component::Bb).unwrap();
        let m = stratum_multiplicity(&f).unwrap();
        assert_eq!(m.delta, &x().pow(2) - &t());
        assert_eq!(m.detector_value, &int(4) * &t());
        assert_eq!(m.order, 1);
    }

    #[test]
    fn ac_family_resultant_is_t_squared() {
        let f = LocalFamily::fixture(Component::Ac).unwrap();
        let m = stratum_multiplicity(&f).unwrap();
        assert_eq!(m.detector, Detector::TopDeltaResultant);
        assert_eq!(m.detector_value, t().pow(2));
        assert_eq!(m.order, 2);
    }

    #[test]
    fn orders_of_all_fixtures() {
        let expected = [
            (Component::B, 1),
            (Component::Ac, 2),
            (Component::Bm, 1),
            (Component::Bb, 1),
            (Component::Cc, 3),
            (Component::Mm, 2),
        ];
        for (label, order) in expected {
            let f = LocalFamily::fixture(label).unwrap();
            assert_eq!(stratum_multiplicity(&f).unwrap().order, order, "{label}");
        }
    }

    #[test]
    fn cc_delta_closed_form() {
        // Δ = -4α³ - 27β² with α = x + t, β = x + 2t
        let f = LocalFamily::fixture(Component::Cc).unwrap();
        let m = stratum_multiplicity(&f).unwrap();
        let alpha = &x() + &t();
        let beta = &x() + &(&int(2) * &t());
        assert_eq!(
            m.delta,
            &(&int(-4) * &alpha.pow(3)) - &(&int(27) * &beta.pow(2))
        );
    }

    #[test]
    fn degenerate_family_rejected() {
        // Q_2 = 0 puts the bb fixture's Q_4 through zero at the merge point
        let mut f = LocalFamily::fixture(Component::Bb).unwrap();
        f.q.insert(2, x());
        f.q.insert(
            4,
            &(&x().pow(2) - &t()) * &MultiPoly::constant(rational(1, 4)),
        );
        assert!(matches!(
            stratum_multiplicity(&f),
            Err(Error::DegenerateFamily(_))
        ));
    }

    #[test]
    fn perturbation_schedule_recovers() {
        // a = 0 breaks the mm fixture (Q8 vanishes at the origin); a = 1 is fine
        let broken = LocalFamily::fixture_with(Component::Mm, &[rational(0, 1)]);
        assert!(broken.check_generic().is_err());
        let fixed = LocalFamily::fixture_with(Component::Mm, &[rational(1, 1)]);
        assert!(fixed.check_generic().is_ok());
    }

    #[test]
    fn json_round_trip() {
        let f = LocalFamily::fixture(Component::Cc).unwrap();
        let s = f.to_json();
        assert!(s.starts_with(r#"{"label":"cc","n":3,"Q":{"2":"#));
        assert_eq!(LocalFamily::from_json(&s).unwrap(), f);
    }

    #[test]
    fn json_rejects_bad_families() {
        let bad_n = r#"{"label": "mm", "n": 2, "Q": {"2": {"vars": [], "terms": []}, "4": {"vars": [], "terms": []}}}"#;
        assert!(LocalFamily::from_json(bad_n).is_err());
        let missing = r#"{"label": "bb", "n": 2, "Q": {"2": {"vars": [], "terms": []}}}"#;
        assert!(LocalFamily::from_json(missing).is_err());
        assert!(LocalFamily::from_json(r#"{"label": "zz", "n": 2, "Q": {}}"#).is_err());
    }
}
