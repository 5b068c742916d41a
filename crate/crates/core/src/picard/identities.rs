//! The divisor-class identities for the discriminant components, checked
//! symbolically in `ℚ(n, g)` and on a grid of points.

use serde::Serialize;

use super::class::{star_class, PicClass, GENUS_VAR, RANK_VAR};
use crate::error::{Error, Result};
use crate::exactalg::{RatFunc, Rational};

fn n() -> RatFunc {
    RatFunc::var(RANK_VAR)
}

fn int(c: i64) -> RatFunc {
    RatFunc::integer(c)
}

fn g1() -> RatFunc {
    RatFunc::var(GENUS_VAR).sub(&int(1))
}

/// `N = 2n(2n - 1)`, the degree of the full discriminant.
pub fn big_n() -> RatFunc {
    int(2).mul(&n()).mul(&int(2).mul(&n()).sub(&int(1)))
}

/// `12λ - δ`.
fn hodge_minus_boundary() -> PicClass {
    PicClass::lambda().scale(&int(12)).sub(&PicClass::delta())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    /// `lhs - rhs` when nonzero.
    pub residual: Option<PicClass>,
}

impl IdentityCheck {
    fn compare(name: &'static str, lhs: &PicClass, rhs: &PicClass) -> Self {
        let diff = lhs.sub(rhs);
        IdentityCheck {
            name,
            holds: diff.is_zero(),
            residual: (!diff.is_zero()).then_some(diff),
        }
    }

    fn scalar(name: &'static str, lhs: &RatFunc, rhs: &RatFunc) -> Self {
        let diff = PicClass::new(lhs.sub(rhs), RatFunc::zero(), RatFunc::zero());
        IdentityCheck {
            name,
            holds: diff.is_zero(),
            residual: (!diff.is_zero()).then_some(diff),
        }
    }
}

/// A named identity `lhs = rhs` kept unevaluated for grid checks.
#[derive(Clone, Debug)]
pub struct Identity {
    pub name: &'static str,
    pub lhs: PicClass,
    pub rhs: PicClass,
}

impl Identity {
    fn new(name: &'static str, lhs: PicClass, rhs: PicClass) -> Self {
        Identity { name, lhs, rhs }
    }

    pub fn check(&self) -> IdentityCheck {
        IdentityCheck::compare(self.name, &self.lhs, &self.rhs)
    }
}

/// The three component classes in closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClasses {
    pub pd1: PicClass,
    pub pd2: PicClass,
    pub pd3: PicClass,
}

pub fn component_classes() -> ComponentClasses {
    let n = n();
    let two_n = int(2).mul(&n);
    let m = int(2).mul(&n.pow(2)).sub(&two_n);
    let pd1 = hodge_minus_boundary()
        .scale(&two_n.add(&int(1)))
        .sub(&PicClass::phi().scale(&int(2).mul(&g1()).mul(&int(4).mul(&n).add(&int(1)))))
        .scale(&two_n);
    let pd2 = hodge_minus_boundary()
        .sub(&PicClass::phi().scale(&int(4).mul(&g1())))
        .scale(&int(8).mul(&n.pow(2)).mul(&n.sub(&int(1))));
    let square = int(4).mul(&n.pow(2)).sub(&int(4).mul(&n)).add(&int(1));
    let pd3 = hodge_minus_boundary()
        .scale(&m.add(&int(1)))
        .sub(&PicClass::phi().scale(&int(2).mul(&g1()).mul(&square)))
        .scale(&m);
    ComponentClasses { pd1, pd2, pd3 }
}

/// Each line `λ = a·PD + b·φ + δ/12`, as `(a, b)`.
pub fn hodge_lines() -> [(RatFunc, RatFunc); 3] {
    let n = n();
    let two_n = int(2).mul(&n);
    let m = int(2).mul(&n.pow(2)).sub(&two_n);
    let inv = |r: RatFunc| int(1).div(&r).expect("nonzero symbolic denominator");
    [
        (
            inv(int(12).mul(&two_n).mul(&two_n.add(&int(1)))),
            g1().mul(&int(4).mul(&n).add(&int(1)))
                .div(&int(6).mul(&two_n.add(&int(1))))
                .expect("nonzero"),
        ),
        (
            inv(int(12 * 8).mul(&n.pow(2)).mul(&n.sub(&int(1)))),
            g1().div(&int(3)).expect("nonzero"),
        ),
        (
            inv(int(12).mul(&m).mul(&m.add(&int(1)))),
            g1().mul(&int(4).mul(&n.pow(2)).sub(&int(4).mul(&n)).add(&int(1)))
                .div(&int(6).mul(&m.add(&int(1))))
                .expect("nonzero"),
        ),
    ]
}

fn twelfth_delta() -> PicClass {
    PicClass::delta().scale(&RatFunc::ratio(1, 12))
}

pub fn theorem3_identities() -> Vec<Identity> {
    let n = n();
    let ComponentClasses { pd1, pd2, pd3 } = component_classes();
    let two_n = int(2).mul(&n);
    let two_n2 = int(2).mul(&n.pow(2));
    let m = two_n2.sub(&two_n);
    let mut out = vec![
        Identity::new("pd1_is_star_2n", pd1.clone(), star_class(&two_n)),
        Identity::new("pd3_is_star_2n2_minus_2n", pd3.clone(), star_class(&m)),
        Identity::new(
            "components_sum_to_star_2n2",
            pd1.add(&pd2).add(&pd3),
            star_class(&two_n2),
        ),
        Identity::new(
            "pd2_is_star_difference",
            star_class(&two_n2)
                .sub(&star_class(&two_n))
                .sub(&star_class(&m)),
            pd2.clone(),
        ),
    ];
    let names = [
        ("hodge_line_1", "hodge_line_1_solved"),
        ("hodge_line_2", "hodge_line_2_solved"),
        ("hodge_line_3", "hodge_line_3_solved"),
    ];
    for (((a, b), pd), (line, solved)) in hodge_lines().into_iter().zip([pd1, pd2, pd3]).zip(names)
    {
        let rhs = pd
            .scale(&a)
            .add(&PicClass::phi().scale(&b))
            .add(&twelfth_delta());
        out.push(Identity::new(line, PicClass::lambda(), rhs));
        let back = PicClass::lambda()
            .sub(&PicClass::phi().scale(&b))
            .sub(&twelfth_delta())
            .scale(&int(1).div(&a).expect("nonzero"));
        out.push(Identity::new(solved, back, pd));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    fn from_identities(ids: &[Identity]) -> Self {
        IdentityReport {
            checks: ids.iter().map(Identity::check).collect(),
        }
    }
}

pub fn theorem3_check() -> IdentityReport {
    IdentityReport::from_identities(&theorem3_identities())
}

/// `κ_B / (g - 1)` in the three closed forms, as functions of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaSpec {
    pub sum_form: RatFunc,
    pub poly_form: RatFunc,
    pub radical_form: RatFunc,
}

impl KappaSpec {
    pub fn agree(&self) -> bool {
        self.sum_form == self.poly_form && self.poly_form == self.radical_form
    }

    /// `κ_B` at a point.
    pub fn value(&self, n: i64, g: i64) -> Result<Rational> {
        let v = self
            .sum_form
            .substitute(RANK_VAR, &int(n))
            .evaluate(&Default::default())?;
        Ok(v * Rational::from_integer((g - 1).into()))
    }
}

/// `m(m + 2N)/(m + N)` summed over the zero multiset
/// `{1^{4n(g-1)}, 2^{4n(n-1)(g-1)}}`, divided by `12N²(g - 1)`.
pub fn kappa_b() -> KappaSpec {
    let n = n();
    let nn = big_n();
    let term = |m: i64| {
        let m = int(m);
        m.mul(&m.add(&int(2).mul(&nn)))
            .div(&m.add(&nn))
            .expect("N > 0 symbolically")
    };
    let simple = int(4).mul(&n);
    let double = int(4).mul(&n).mul(&n.sub(&int(1)));
    let sum_form = simple
        .mul(&term(1))
        .add(&double.mul(&term(2)))
        .div(&int(12).mul(&nn.pow(2)))
        .expect("nonzero");
    let poly = |cs: &[i64]| {
        cs.iter().enumerate().fold(RatFunc::zero(), |acc, (k, &c)| {
            acc.add(&int(c).mul(&n.pow(k as u32)))
        })
    };
    let poly_form = poly(&[1, -3, 12, -16, 16])
        .div(&poly(&[0, -12, 60, -168, 288, -288, 192]))
        .expect("nonzero");
    // √(4N + 1) = 4n - 1 for N = 2n(2n - 1)
    let root = int(4).mul(&n).sub(&int(1));
    let radical_form = int(4)
        .mul(&nn.pow(2))
        .add(&int(8).mul(&nn))
        .add(&root)
        .add(&int(5))
        .div(&int(12).mul(&nn).mul(&nn.add(&int(1))).mul(&nn.add(&int(2))))
        .expect("nonzero");
    KappaSpec {
        sum_form,
        poly_form,
        radical_form,
    }
}

/// `(c₁, c₂, c₃)` as functions of `n`.
pub fn coarse_coefficients() -> [RatFunc; 3] {
    let nn = big_n();
    let n1 = nn.add(&int(1));
    let n2 = nn.add(&int(2));
    let inv = |r: RatFunc| int(1).div(&r).expect("nonzero");
    [
        inv(int(12).mul(&nn).mul(&n1)),
        int(2)
            .mul(&nn)
            .add(&int(3))
            .div(&int(12).mul(&nn).mul(&n1).mul(&n2))
            .expect("nonzero"),
        inv(int(3).mul(&nn).mul(&n2)),
    ]
}

pub fn coarse_identities() -> Vec<Identity> {
    let kappa = kappa_b().sum_form.mul(&g1());
    let nn = big_n();
    let [c1, c2, c3] = coarse_coefficients();
    let ComponentClasses { pd1, pd2, pd3 } = component_classes();
    let rhs = PicClass::phi()
        .scale(&nn.mul(&kappa))
        .add(&pd1.scale(&c1))
        .add(&pd2.scale(&c2))
        .add(&pd3.scale(&c3))
        .add(&twelfth_delta());
    let n1 = nn.add(&int(1));
    let n2 = nn.add(&int(2));
    let split = int(1)
        .div(&int(6).mul(&n1).mul(&n2))
        .and_then(|a| Ok(a.add(&int(1).div(&int(4).mul(&nn).mul(&n1).mul(&n2))?)))
        .expect("nonzero");
    let psi = PicClass::phi().scale(&nn);
    vec![
        Identity::new("coarse_relation", PicClass::lambda(), rhs),
        Identity::new(
            "c2_partial_fractions",
            PicClass::lambda().scale(&c2),
            PicClass::lambda().scale(&split),
        ),
        Identity::new(
            "psi_is_n_phi",
            psi.scale(&kappa),
            PicClass::phi().scale(&nn.mul(&kappa)),
        ),
    ]
}

pub fn coarse_identity_check() -> IdentityReport {
    IdentityReport::from_identities(&coarse_identities())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KappaReport {
    pub spec: KappaSpec,
    pub checks: Vec<IdentityCheck>,
}

impl KappaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn kappa_check() -> KappaReport {
    let spec = kappa_b();
    let checks = vec![
        IdentityCheck::scalar("kappa_sum_equals_poly", &spec.sum_form, &spec.poly_form),
        IdentityCheck::scalar(
            "kappa_sum_equals_radical",
            &spec.sum_form,
            &spec.radical_form,
        ),
        IdentityCheck::scalar(
            "root_squared",
            &int(4).mul(&n()).sub(&int(1)).pow(2),
            &int(4).mul(&big_n()).add(&int(1)),
        ),
    ];
    KappaReport { spec, checks }
}

/// The rank-`n` general linear class `n(n-1)((n²-n+1)(12λ-δ) - 2(g-1)(2n²-2n+1)φ)`.
pub fn gl_class() -> PicClass {
    let n = n();
    let m = n.pow(2).sub(&n);
    hodge_minus_boundary()
        .scale(&m.add(&int(1)))
        .sub(&PicClass::phi().scale(&int(2).mul(&g1()).mul(&int(2).mul(&m).add(&int(1)))))
        .scale(&m)
}

pub fn gl_identities() -> Vec<Identity> {
    let n = n();
    vec![Identity::new(
        "gl_is_star_n_n_minus_1",
        gl_class(),
        star_class(&n.pow(2).sub(&n)),
    )]
}

pub fn gl_theorem_check() -> IdentityReport {
    IdentityReport::from_identities(&gl_identities())
}

/// `star(N₁ + N₃) - star(N₁) - star(N₃)` for `N₁ = 2n`, `N₃ = 2n² - 2n`;
/// nonzero, since the pattern is not additive.
pub fn star_defect() -> PicClass {
    let two_n = int(2).mul(&n());
    let m = int(2).mul(&n().pow(2)).sub(&two_n);
    star_class(&two_n.add(&m))
        .sub(&star_class(&two_n))
        .sub(&star_class(&m))
}

pub fn all_identities() -> Vec<Identity> {
    let mut out = theorem3_identities();
    out.extend(coarse_identities());
    out.extend(gl_identities());
    out
}

/// Largest `n` and `g` of the evaluation grid.
pub const GRID_MAX: i64 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridReport {
    pub points_checked: usize,
    pub poles_skipped: usize,
    /// `(identity, n, g)` where the numeric verdict differs from the symbolic one.
    pub disagreements: Vec<(String, i64, i64)>,
}

/// Evaluates each identity at `n ∈ 1..=n_max`, `g ∈ 2..=g_max`, skipping
/// points where a side has a pole, and compares with the symbolic verdict.
pub fn grid_check(ids: &[Identity], n_max: i64, g_max: i64) -> Result<GridReport> {
    if n_max < 1 || g_max < 2 {
        return Err(Error::Precondition(
            "grid needs n_max >= 1 and g_max >= 2".into(),
        ));
    }
    let mut report = GridReport {
        points_checked: 0,
        poles_skipped: 0,
        disagreements: Vec::new(),
    };
    for id in ids {
        let symbolic = id.check().holds;
        for n in 1..=n_max {
            for g in 2..=g_max {
                match (id.lhs.evaluate(n, g), id.rhs.evaluate(n, g)) {
                    (Ok(a), Ok(b)) => {
                        report.points_checked += 1;
                        // a false identity may still hold at isolated points
                        if symbolic && a != b {
                            report.disagreements.push((id.name.to_string(), n, g));
                        }
                    }
                    (Err(Error::Pole), _) | (_, Err(Error::Pole)) => report.poles_skipped += 1,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                }
            }
        }
    }
    Ok(report)
}
