use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::registry::CheckId;
use super::report::{Params, VerificationReport as R};
use super::SuiteConfig;
use crate::component::Component;
use crate::error::Result;
use crate::exactalg::{
    discriminant, ratfunc_equal, rational, resultant, MultiPoly, RatFunc, Rational, UniPoly,
};
use crate::monodromy::{
    classify_merge, enumerate_all_merges, enumerate_local_monodromies, generic_witness,
    validate_global_monodromy, LocalMonodromy, MergeOutcome, Permutation, SheetInvolution,
    ZeroKind,
};
use crate::picard::{
    all_identities, coarse_coefficients, coarse_identity_check, gl_theorem_check, grid_check,
    kappa_check, star_class, theorem3_check, IdentityReport, PicClass, GENUS_VAR, RANK_VAR,
};
use crate::spectral::{
    build_p, char_poly_hamiltonian, cover_numerics, delta_at_top_zero, dims_and_degrees,
    factorize_symbolic, generic_profile, riemann_hurwitz, scaling_action, stratum_multiplicity,
    Genus, GroupType, HamiltonianMatrix, LocalFamily, SpectralData,
};

/// Number of random matrices per rank.
pub const HAMILTONIAN_SAMPLES: usize = 100;
pub const MAX_HAMILTONIAN_N: usize = 5;
pub const MAX_SCALING_N: usize = 4;
pub const MAX_DIM_RANK: u64 = 8;

fn p(k: &'static str, v: impl ToString) -> (&'static str, String) {
    (k, v.to_string())
}

fn err_report(check: CheckId, params: Params, e: crate::error::Error) -> R {
    R::fail(
        check,
        params,
        format!("error: {e}"),
        json!({ "error": e.to_string() }),
    )
}

/// Collapses a `Result<R>` into a record, turning errors into failures.
fn guard(check: CheckId, params: Params, f: impl FnOnce(Params) -> Result<R>) -> R {
    match f(params.clone()) {
        Ok(r) => r,
        Err(e) => err_report(check, params, e),
    }
}

fn mp(s: &str) -> MultiPoly {
    MultiPoly::var(s)
}

fn int(c: i64) -> MultiPoly {
    MultiPoly::integer(c)
}

// ---- exactalg -------------------------------------------------------------

pub fn poly_arith() -> R {
    let id = CheckId::PolyArith;
    guard(id, vec![], |params| {
        let (x, y) = (mp("x"), mp("y"));
        let sum = &x + &y;
        let ok = &(&sum * &sum) - &(&(&x * &x) + &(&y * &y)) == &(&int(2) * &x) * &y
            && sum.substitute("y", &x) == &int(2) * &x
            && x.pow(3).derivative("x") == &int(3) * &x.pow(2)
            && sum.evaluate_all(
                &[
                    ("x".to_string(), rational(1, 2)),
                    ("y".to_string(), rational(3, 2)),
                ]
                .into(),
            )? == rational(2, 1);
        Ok(R::verdict(
            id,
            params,
            ok,
            "ring laws, substitution, derivative, evaluation",
            || json!({ "sum_squared": (&sum * &sum).to_string() }),
        ))
    })
}

pub fn resultant_check() -> R {
    let id = CheckId::Resultant;
    guard(id, vec![], |params| {
        let v = mp("v");
        let f = UniPoly::from_multi(&(&v.pow(2) - &int(1)), "v");
        let g = UniPoly::from_multi(&(&v.pow(2) - &int(4)), "v");
        let r = resultant(&f, &g)?;
        let (a, b) = (mp("a"), mp("b"));
        let lin = |c: &MultiPoly| UniPoly::from_multi(&(&mp("x") - c), "x");
        let r2 = resultant(&lin(&a), &lin(&b))?;
        let ok = r == int(9) && r2 == &a - &b;
        Ok(R::verdict(
            id,
            params,
            ok,
            "Res(v^2-1, v^2-4) = 9; Res(x-a, x-b) = a-b",
            || json!({ "res1": r.to_string(), "res2": r2.to_string() }),
        ))
    })
}

pub fn discriminant_check() -> R {
    let id = CheckId::Discriminant;
    guard(id, vec![], |params| {
        let q = mp("q");
        let (q2, q4) = (mp("Q2"), mp("Q4"));
        let f = UniPoly::from_multi(&(&(&q.pow(2) + &(&q2 * &q)) + &q4), "q");
        let d = discriminant(&f)?;
        let expected = &q2.pow(2) - &(&int(4) * &q4);
        Ok(R::verdict(
            id,
            params,
            d == expected,
            "disc(q^2 + Q2 q + Q4) = Q2^2 - 4 Q4",
            || json!({ "discriminant": d.to_string() }),
        ))
    })
}

pub fn order_at_zero_check() -> R {
    let id = CheckId::OrderAtZero;
    guard(id, vec![], |params| {
        let t = mp("t");
        let x = mp("x");
        let p1 = &(&t.pow(3) * &x) + &t.pow(5);
        let ok = p1.order_at_zero("t")? == 3
            && int(7).order_at_zero("t")? == 0
            && MultiPoly::zero().order_at_zero("t").is_err();
        Ok(R::verdict(
            id,
            params,
            ok,
            "ord_t(t^3 x + t^5) = 3, ord_t(7) = 0, zero rejected",
            || json!({ "order": p1.order_at_zero("t").ok() }),
        ))
    })
}

pub fn ratfunc_equal_check() -> R {
    let id = CheckId::RatfuncEqual;
    guard(id, vec![], |params| {
        let n = RatFunc::var("N");
        let one = RatFunc::integer(1);
        let n1 = n.add(&one);
        let n2 = n.add(&RatFunc::integer(2));
        let c2 = n
            .mul(&RatFunc::integer(2))
            .add(&RatFunc::integer(3))
            .div(&RatFunc::integer(12).mul(&n).mul(&n1).mul(&n2))?;
        let split = one
            .div(&RatFunc::integer(6).mul(&n1).mul(&n2))?
            .add(&one.div(&RatFunc::integer(4).mul(&n).mul(&n1).mul(&n2))?);
        let ok = ratfunc_equal(&c2, &split)
            && ratfunc_equal(&RatFunc::ratio(10, 72), &RatFunc::ratio(5, 36))
            && !ratfunc_equal(&c2, &one);
        Ok(R::verdict(
            id,
            params,
            ok,
            "partial fractions and constant ratios compare equal",
            || json!({ "lhs": c2.to_string(), "rhs": split.to_string() }),
        ))
    })
}

// ---- spectral -------------------------------------------------------------

pub fn build_p_check(n: usize) -> R {
    let id = CheckId::BuildP;
    guard(id, vec![p("n", n)], |params| {
        let data = SpectralData::symbolic(n)?;
        let (big, half) = build_p(&data);
        let v = mp("v");
        let even = half.evaluate(&v.pow(2));
        let ok = big.to_multi() == even && big.degree() == Some(2 * n) && half.is_monic();
        Ok(R::verdict(
            id,
            params,
            ok,
            format!("P(v) = P~(v^2), degree {}", 2 * n),
            || json!({ "P": big.to_multi().to_string(), "Ptilde": half.to_multi().to_string() }),
        ))
    })
}

pub fn hamiltonian_check(n: usize, seed: u64) -> R {
    let id = CheckId::CharPolyHamiltonian;
    let params = vec![
        p("n", n),
        p("samples", HAMILTONIAN_SAMPLES),
        p("seed", seed),
    ];
    guard(id, params, |params| {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(n as u64));
        for k in 0..HAMILTONIAN_SAMPLES {
            let x = HamiltonianMatrix::random(n, &mut rng);
            if !x.satisfies_hamiltonian_identity() {
                return Ok(R::fail(
                    id,
                    params,
                    format!("sample {k} is not Hamiltonian"),
                    json!({ "sample": k }),
                ));
            }
            match char_poly_hamiltonian(&x) {
                Ok((poly, _)) if poly.degree() == Some(2 * n) && poly.is_monic() => {}
                Ok((poly, _)) => {
                    return Ok(R::fail(
                        id,
                        params,
                        format!("sample {k}: bad degree"),
                        json!({ "sample": k, "poly": poly.to_multi().to_string() }),
                    ))
                }
                Err(e) => {
                    return Ok(R::fail(
                        id,
                        params,
                        format!("sample {k}: {e}"),
                        json!({ "sample": k, "error": e.to_string() }),
                    ))
                }
            }
        }
        Ok(R::pass(id, params, "all odd coefficients vanish"))
    })
}

pub fn factorization_checks(n: usize) -> Vec<R> {
    let params = vec![p("n", n)];
    let f = match factorize_symbolic(n) {
        Ok(f) => f,
        Err(e) => return vec![err_report(CheckId::FactorizeDiscriminant, params, e)],
    };
    let mut out = vec![R::pass(
        CheckId::FactorizeDiscriminant,
        params.clone(),
        format!("W = {} * Q{} * Delta^2, |c| = 4^{n}", f.constant, 2 * n),
    )
    .with_witness(json!({ "constant": f.constant.to_string(), "w_terms": f.w.num_terms(), "delta_terms": f.delta.num_terms() }))];
    let sign_ok = f.constant == Rational::from_integer((-4i64).pow(n as u32).into());
    out.push(
        R::report_only(
            CheckId::FactorizationSign,
            params.clone(),
            format!(
                "c = {} {} (-4)^{n}",
                f.constant,
                if sign_ok { "=" } else { "!=" }
            ),
        )
        .with_witness(json!({ "constant": f.constant.to_string() })),
    );
    if n <= MAX_SCALING_N {
        out.push(guard(CheckId::ScalingAction, params, |params| {
            let s = scaling_action(&f)?;
            Ok(R::verdict(
                CheckId::ScalingAction,
                params,
                s.passed(),
                format!("Delta weight {}, W weight {}", s.delta_weight, s.w_weight),
                || serde_json::to_value(&s).unwrap_or(Value::Null),
            ))
        }));
    }
    out
}

pub fn numerics_checks(n: u64, g: u64) -> Vec<R> {
    let params = vec![p("g", g), p("n", n)];
    let mut out = Vec::new();
    out.push(guard(CheckId::CoverNumerics, params.clone(), |params| {
        let c = cover_numerics(n, g)?;
        let g1 = g - 1;
        let big_n = 2 * n * (2 * n - 1);
        let ok = c.is_consistent()
            && c.big_n == big_n
            && c.simple_zeros == 4 * n * g1
            && c.double_zeros == 4 * n * (n - 1) * g1
            && c.r == 4 * n * n * g1
            && c.branch_with_mult == 2 * big_n * g1;
        Ok(R::verdict(
            CheckId::CoverNumerics,
            params,
            ok,
            format!("N = {big_n}, r = {}", c.r),
            || serde_json::to_value(c).unwrap_or(Value::Null),
        ))
    }));
    out.push(guard(CheckId::RiemannHurwitz, params.clone(), |params| {
        let profile = generic_profile(n, g)?;
        let genus = riemann_hurwitz(2 * n, g, &profile)?;
        let expected = (4 * n * n * (g - 1) + 1) as i64;
        Ok(R::verdict(
            CheckId::RiemannHurwitz,
            params,
            genus == Genus::Genus(expected),
            format!("genus {expected}"),
            || json!({ "genus": format!("{genus:?}") }),
        ))
    }));
    out.push(guard(
        CheckId::DimsAndDegrees,
        vec![p("g", g), p("group", "Sp"), p("rank", n)],
        |params| {
            let r = dims_and_degrees(GroupType::Sp, n, g)?;
            let ok = r.identities_hold()
                && r.fixed_base_dim == n * (2 * n + 1) * (g - 1)
                && r.variable_base_dim == (r.dim_group + 3) * (g - 1);
            Ok(R::verdict(
                CheckId::DimsAndDegrees,
                params,
                ok,
                format!("dim = {}", r.fixed_base_dim),
                || serde_json::to_value(&r).unwrap_or(Value::Null),
            ))
        },
    ));
    out
}

pub fn lie_type_checks(g: u64) -> Vec<R> {
    let mut out = Vec::new();
    for group in [GroupType::A, GroupType::B, GroupType::C, GroupType::D] {
        let min = if group == GroupType::D { 2 } else { 1 };
        for rank in min..=MAX_DIM_RANK {
            let params = vec![p("g", g), p("group", group), p("rank", rank)];
            out.push(guard(CheckId::DimsAndDegrees, params, |params| {
                let r = dims_and_degrees(group, rank, g)?;
                Ok(R::verdict(
                    CheckId::DimsAndDegrees,
                    params,
                    r.identities_hold(),
                    format!("sum(2d-1) = dim G = {}", r.dim_group),
                    || serde_json::to_value(&r).unwrap_or(Value::Null),
                ))
            }));
        }
    }
    out
}

fn multiplicity_record(family: &LocalFamily, params: Params, expect: bool) -> R {
    let id = CheckId::StratumMultiplicity;
    guard(id, params, |params| {
        let m = stratum_multiplicity(family)?;
        let witness = json!({
            "order": m.order,
            "detector": m.detector.name(),
            "detector_value": m.detector_value.to_string(),
            "delta": m.delta.to_string(),
        });
        let coefficient = m.label.class_coefficient();
        let detail = format!("order {} via {}", m.order, m.detector.name());
        if !expect {
            return Ok(R::pass(id, params, detail).with_witness(witness));
        }
        if m.label == Component::Ac {
            // Δ restricted to Q_{2n} = 0 is Q_{2n-2}²·disc(R), a perfect square
            let n = family.n;
            let (quotient, deflated) = delta_at_top_zero(n)?;
            let square = quotient == deflated;
            return Ok(R::report_only(
                id,
                params,
                format!(
                    "{detail}; class coefficient {coefficient}; Delta|Q{}=0 = Q{}^2 * disc(R) {}",
                    2 * n,
                    2 * n - 2,
                    if square { "holds" } else { "fails" }
                ),
            )
            .with_witness(witness));
        }
        Ok(R::verdict(
            id,
            params,
            m.order == coefficient,
            format!("{detail}, class coefficient {coefficient}"),
            || witness.clone(),
        )
        .with_witness(witness.clone()))
    })
}

pub fn multiplicity_checks(extra: Option<&LocalFamily>) -> Vec<R> {
    let mut out: Vec<R> = Component::ALL
        .iter()
        .map(|&c| {
            let params = vec![p("family", "fixture"), p("label", c)];
            match LocalFamily::fixture(c) {
                Ok(f) => multiplicity_record(&f, params, true),
                Err(e) => err_report(CheckId::StratumMultiplicity, params, e),
            }
        })
        .collect();
    if let Some(f) = extra {
        out.push(multiplicity_record(
            f,
            vec![p("family", "input"), p("label", f.label)],
            false,
        ));
    }
    out
}

// ---- monodromy ------------------------------------------------------------

pub fn local_monodromy_check(n: usize) -> R {
    let id = CheckId::EnumerateLocalMonodromies;
    let q = enumerate_local_monodromies(n, ZeroKind::Qzero);
    let d = enumerate_local_monodromies(n, ZeroKind::DeltaZero);
    let sigma = SheetInvolution::new(n);
    let ok = q.len() == n
        && d.len() == n * (n - 1)
        && q.iter()
            .chain(&d)
            .all(|m| m.perm().commutes_with(sigma.perm()));
    R::verdict(
        id,
        vec![p("n", n)],
        ok,
        format!("{} Qzero, {} DeltaZero", q.len(), d.len()),
        || json!({ "qzero": q.len(), "deltazero": d.len() }),
    )
}

fn lm(kind: ZeroKind, len: usize, s: &str) -> Result<LocalMonodromy> {
    LocalMonodromy::new(kind, Permutation::parse(len, s)?)
}

/// The four worked merges, checked once.
pub fn classify_examples() -> R {
    let id = CheckId::ClassifyMerge;
    guard(id, vec![p("case", "examples")], |params| {
        use ZeroKind::{DeltaZero as D, Qzero as Q};
        let cases = [
            (
                lm(Q, 2, "(1 2)")?,
                lm(Q, 2, "(1 2)")?,
                Some(Component::B),
                "()",
            ),
            (
                lm(Q, 4, "(1 2)")?,
                lm(D, 4, "(1 3)(2 4)")?,
                Some(Component::Ac),
                "(1 4 2 3)",
            ),
            (
                lm(D, 4, "(1 3)(2 4)")?,
                lm(D, 4, "(1 4)(2 3)")?,
                None,
                "(1 2)(3 4)",
            ),
            (
                lm(D, 6, "(1 3)(2 4)")?,
                lm(D, 6, "(1 5)(2 6)")?,
                Some(Component::Cc),
                "(1 3 5)(2 4 6)",
            ),
        ];
        let mut seen = Vec::new();
        let mut ok = true;
        for (s1, s2, label, product) in &cases {
            let o = classify_merge(s1, s2)?;
            let excluded = matches!(o, MergeOutcome::Excluded { .. });
            ok &= o.label() == *label
                && o.product().to_string() == *product
                && (label.is_some() || excluded);
            seen.push(json!({ "s1": s1.perm(), "s2": s2.perm(), "outcome": o }));
        }
        Ok(R::verdict(
            id,
            params,
            ok,
            "b, ac, excluded, cc worked cases",
            || Value::Array(seen),
        ))
    })
}

/// Invariants of the classification over every ordered pair on `2n` sheets.
pub fn classify_invariants(n: usize) -> R {
    let id = CheckId::ClassifyMerge;
    guard(id, vec![p("n", n)], |params| {
        let locals: Vec<_> = [ZeroKind::Qzero, ZeroKind::DeltaZero]
            .into_iter()
            .flat_map(|k| enumerate_local_monodromies(n, k))
            .collect();
        let mut problems = Vec::new();
        let mut excluded = 0;
        for s1 in &locals {
            for s2 in &locals {
                let o = classify_merge(s1, s2)?;
                let regluing = s1.kind() == ZeroKind::DeltaZero
                    && s2.kind() == ZeroKind::DeltaZero
                    && s1.pairs() == s2.pairs()
                    && s1 != s2;
                let is_excluded = matches!(o, MergeOutcome::Excluded { .. });
                excluded += usize::from(is_excluded);
                if is_excluded != regluing {
                    problems.push(format!(
                        "exclusion mismatch at {} , {}",
                        s1.perm(),
                        s2.perm()
                    ));
                }
                if classify_merge(s2, s1)?.label() != o.label() {
                    problems.push(format!("asymmetric label at {} , {}", s1.perm(), s2.perm()));
                }
                if let MergeOutcome::Class(c) = &o {
                    let expected_delta = if c.label == Component::Bb { -1 } else { 0 };
                    if c.genus_delta != expected_delta {
                        problems.push(format!(
                            "{} changes the genus by {}",
                            c.label, c.genus_delta
                        ));
                    }
                    if c.label == Component::Ac && c.fiber_size != 2 * n - 3 {
                        problems.push(format!("ac fiber size {}", c.fiber_size));
                    }
                }
            }
        }
        Ok(R::verdict(
            id,
            params,
            problems.is_empty(),
            format!(
                "{} ordered pairs, {excluded} excluded; ac fiber 2n-3, only bb changes genus (-1)",
                locals.len().pow(2)
            ),
            || json!({ "problems": problems }),
        ))
    })
}

pub fn merge_table_checks(n: usize) -> Vec<R> {
    let params = vec![p("n", n)];
    match enumerate_all_merges(n) {
        Ok(t) => {
            let labels: Vec<&str> = t.classes.keys().map(|c| c.as_str()).collect();
            let resolutions: BTreeMap<&str, usize> = t
                .resolutions
                .iter()
                .map(|(c, k)| (c.as_str(), *k))
                .collect();
            vec![
                R::pass(
                    CheckId::EnumerateAllMerges,
                    params.clone(),
                    format!(
                        "classes {{{}}}, one orbit each; {} excluded pairs",
                        labels.join(","),
                        t.excluded_pairs
                    ),
                )
                .with_witness(t.to_json()),
                R::report_only(
                    CheckId::ResolutionCounts,
                    params,
                    resolutions
                        .iter()
                        .map(|(l, k)| format!("{l}:{k}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                )
                .with_witness(json!(resolutions)),
            ]
        }
        Err(e) => vec![err_report(CheckId::EnumerateAllMerges, params, e)],
    }
}

pub fn global_checks(n: usize, g: u64) -> Vec<R> {
    let id = CheckId::ValidateGlobalMonodromy;
    let mut out = vec![guard(
        id,
        vec![p("case", "generic"), p("g", g), p("n", n)],
        |params| {
            let (gammas, a, b) = generic_witness(n, g)?;
            let r = validate_global_monodromy(n, &gammas, &a, &b, Some(g))?;
            Ok(R::verdict(
                id,
                params,
                r.passed(),
                format!("{} local monodromies close the relation", gammas.len()),
                || serde_json::to_value(&r).unwrap_or(Value::Null),
            ))
        },
    )];
    if n == 1 && g == 2 {
        // three transpositions cannot close the relation
        out.push(guard(
            id,
            vec![p("case", "odd"), p("g", g), p("n", n)],
            |params| {
                let gammas = vec![lm(ZeroKind::Qzero, 2, "(1 2)")?; 3];
                let idp = Permutation::identity(2);
                let r = validate_global_monodromy(
                    1,
                    &gammas,
                    std::slice::from_ref(&idp),
                    std::slice::from_ref(&idp),
                    None,
                )?;
                Ok(R::verdict(
                    id,
                    params,
                    !r.relation_holds,
                    "odd product rejected",
                    || serde_json::to_value(&r).unwrap_or(Value::Null),
                ))
            },
        ));
    }
    out
}

// ---- picard ---------------------------------------------------------------

fn identity_record(id: CheckId, report: IdentityReport) -> R {
    let names: Vec<&str> = report.checks.iter().map(|c| c.name).collect();
    let ok = report.passed();
    R::verdict(
        id,
        vec![],
        ok,
        format!("{} identities hold: {}", names.len(), names.join(", ")),
        || serde_json::to_value(&report).unwrap_or(Value::Null),
    )
}

pub fn star_class_check() -> R {
    let id = CheckId::StarClass;
    let g1 = RatFunc::var(GENUS_VAR).sub(&RatFunc::integer(1));
    let two = star_class(&RatFunc::integer(2));
    let expected = PicClass::new(
        RatFunc::integer(72),
        RatFunc::integer(-20).mul(&g1),
        RatFunc::integer(-6),
    );
    let ok = two == expected && star_class(&RatFunc::zero()).is_zero();
    R::verdict(
        id,
        vec![],
        ok,
        "star(2) = 72 lambda - 20(g-1) phi - 6 delta; star(0) = 0",
        || json!({ "star_2": two }),
    )
}

pub fn theorem3_record() -> R {
    identity_record(CheckId::Theorem3, theorem3_check())
}

pub fn kappa_record() -> R {
    let id = CheckId::KappaB;
    guard(id, vec![], |params| {
        let r = kappa_check();
        let v1 = r.spec.value(1, 2)?;
        let v2 = r.spec.value(2, 2)?;
        let ok = r.passed() && r.spec.agree() && v1 == rational(5, 36) && v2 == rational(19, 728);
        Ok(R::verdict(
            id,
            params,
            ok,
            format!("three forms agree; n=1: ({v1})(g-1), n=2: ({v2})(g-1)"),
            || serde_json::to_value(&r).unwrap_or(Value::Null),
        ))
    })
}

pub fn coarse_record() -> R {
    let id = CheckId::CoarseIdentity;
    guard(id, vec![], |params| {
        let report = coarse_identity_check();
        let [c1, c2, c3] = coarse_coefficients();
        let at2 = |c: &RatFunc| {
            c.substitute(RANK_VAR, &RatFunc::integer(2))
                .evaluate(&BTreeMap::new())
        };
        let lam = at2(&c1)? * rational(240, 1)
            + at2(&c2)? * rational(384, 1)
            + at2(&c3)? * rational(240, 1);
        let phi = at2(&c1)? * rational(72, 1)
            + at2(&c2)? * rational(128, 1)
            + at2(&c3)? * rational(72, 1);
        let ok = report.passed() && lam == rational(1, 1) && phi == rational(57, 182);
        Ok(R::verdict(
            id,
            params,
            ok,
            format!("holds in Q(n,g); n=2 lambda sum {lam}, phi balance {phi}"),
            || serde_json::to_value(&report).unwrap_or(Value::Null),
        ))
    })
}

pub fn gl_record() -> R {
    identity_record(CheckId::GlTheorem, gl_theorem_check())
}

pub fn grid_record(n_max: i64, g_max: i64) -> R {
    let id = CheckId::PicardGrid;
    let params = vec![p("g_max", g_max), p("n_max", n_max)];
    guard(id, params, |params| {
        let ids = all_identities();
        let symbolic_ok = ids.iter().all(|i| i.check().holds);
        let r = grid_check(&ids, n_max, g_max)?;
        Ok(R::verdict(
            id,
            params,
            symbolic_ok && r.disagreements.is_empty(),
            format!(
                "{} identities, {} points, {} poles skipped",
                ids.len(),
                r.points_checked,
                r.poles_skipped
            ),
            || serde_json::to_value(&r).unwrap_or(Value::Null),
        ))
    })
}

/// Every job of the configured run, as independent closures.
pub(super) fn jobs(cfg: &SuiteConfig) -> Vec<Box<dyn Fn() -> Vec<R> + Send + Sync + '_>> {
    let mut jobs: Vec<Box<dyn Fn() -> Vec<R> + Send + Sync + '_>> = Vec::new();
    let wants = |id: CheckId| cfg.scope.includes(id);
    let ns = |cap: usize| (cfg.min_n..=cfg.max_n.min(cap)).collect::<Vec<usize>>();
    let gs: Vec<u64> = (cfg.min_g..=cfg.max_g).collect();

    if wants(CheckId::PolyArith) {
        jobs.push(Box::new(|| vec![poly_arith()]));
        jobs.push(Box::new(|| vec![resultant_check()]));
        jobs.push(Box::new(|| vec![discriminant_check()]));
        for n in ns(usize::MAX) {
            jobs.push(Box::new(move || vec![build_p_check(n)]));
        }
        for n in ns(MAX_HAMILTONIAN_N) {
            let seed = cfg.seed;
            jobs.push(Box::new(move || vec![hamiltonian_check(n, seed)]));
        }
        for n in ns(crate::spectral::factorization::MAX_SYMBOLIC_N) {
            jobs.push(Box::new(move || factorization_checks(n)));
        }
    }
    if wants(CheckId::CoverNumerics) {
        for n in ns(usize::MAX) {
            for &g in &gs {
                jobs.push(Box::new(move || numerics_checks(n as u64, g)));
            }
        }
        for &g in &gs {
            jobs.push(Box::new(move || lie_type_checks(g)));
        }
    }
    if wants(CheckId::StratumMultiplicity) {
        jobs.push(Box::new(|| vec![order_at_zero_check()]));
        jobs.push(Box::new(|| multiplicity_checks(cfg.family.as_ref())));
    }
    if wants(CheckId::ClassifyMerge) {
        jobs.push(Box::new(|| vec![classify_examples()]));
        for n in ns(crate::monodromy::MAX_MERGE_N) {
            jobs.push(Box::new(move || vec![local_monodromy_check(n)]));
            jobs.push(Box::new(move || vec![classify_invariants(n)]));
            jobs.push(Box::new(move || merge_table_checks(n)));
            for &g in &gs {
                jobs.push(Box::new(move || global_checks(n, g)));
            }
        }
    }
    if wants(CheckId::Theorem3) {
        jobs.push(Box::new(|| vec![ratfunc_equal_check()]));
        jobs.push(Box::new(|| vec![star_class_check()]));
        jobs.push(Box::new(|| vec![theorem3_record()]));
        jobs.push(Box::new(|| vec![kappa_record()]));
        jobs.push(Box::new(|| vec![coarse_record()]));
        jobs.push(Box::new(|| vec![gl_record()]));
        let (n_max, g_max) = (cfg.max_n as i64, cfg.max_g as i64);
        jobs.push(Box::new(move || vec![grid_record(n_max, g_max)]));
    }
    jobs
}
