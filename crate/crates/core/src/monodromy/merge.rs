//! Classification of two merging branch points by the product of their local
//! monodromies, and orbit counts over the centralizer of the sheet involution.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::local::{enumerate_local_monodromies, LocalMonodromy, SheetInvolution, ZeroKind};
use super::perm::Permutation;
use crate::component::Component;
use crate::error::{Error, Result};
use crate::spectral::{generic_profile, riemann_hurwitz, Genus};

/// Largest `n` for the exhaustive orbit scan.
pub const MAX_MERGE_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerationClass {
    pub label: Component,
    pub min_n: usize,
    pub product: Permutation,
    pub cycle_type: Vec<usize>,
    pub ramification_profile: Vec<u32>,
    pub nodes: u32,
    pub genus_delta: i64,
    /// `Σ(b_p - 1)` over the merged fibre, each node counting 1.
    pub total_branching: u32,
    /// Points of the fibre over the merge point.
    pub fiber_size: usize,
    pub sigma_invariant_cycles: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum MergeOutcome {
    Class(DegenerationClass),
    /// More than one ramification point of the product is fixed by the involution.
    Excluded {
        product: Permutation,
        fixed_cycles: usize,
    },
    Inadmissible {
        product: Permutation,
        reason: String,
    },
}

impl MergeOutcome {
    pub fn label(&self) -> Option<Component> {
        match self {
            MergeOutcome::Class(c) => Some(c.label),
            _ => None,
        }
    }

    pub fn product(&self) -> &Permutation {
        match self {
            MergeOutcome::Class(c) => &c.product,
            MergeOutcome::Excluded { product, .. } | MergeOutcome::Inadmissible { product, .. } => {
                product
            }
        }
    }
}

fn branching_of(kind: ZeroKind) -> usize {
    match kind {
        ZeroKind::Qzero => 1,
        ZeroKind::DeltaZero => 2,
    }
}

/// Change of the cover genus when two generic zeros are replaced by the merged
/// fibre; an inconsistent parity (a node replacing a branch point) counts as 0.
fn genus_change(n: usize, removed: usize, profile: &[u32], nodes: u32) -> Result<i64> {
    let g = 2;
    let generic = generic_profile(n as u64, g)?;
    let before = riemann_hurwitz(2 * n as u64, g, &generic)?;
    let mut merged = generic[removed..].to_vec();
    merged.extend_from_slice(profile);
    merged.extend(std::iter::repeat_n(2, nodes as usize));
    let after = riemann_hurwitz(2 * n as u64, g, &merged)?;
    Ok(match (before, after) {
        (Genus::Genus(a), Genus::Genus(b)) => b - a,
        _ => 0,
    })
}

pub fn classify_merge(s1: &LocalMonodromy, s2: &LocalMonodromy) -> Result<MergeOutcome> {
    if s1.n() != s2.n() {
        return Err(Error::MonodromyMismatch(format!(
            "{} and {} act on different sheets",
            s1.perm(),
            s2.perm()
        )));
    }
    // re-validate in case the values were built by deserialization
    LocalMonodromy::new(s1.kind(), s1.perm().clone())?;
    LocalMonodromy::new(s2.kind(), s2.perm().clone())?;

    let n = s1.n();
    let sigma = SheetInvolution::new(n);
    let product = s1.perm().then(s2.perm());
    let kinds = (s1.kind(), s2.kind());

    if kinds == (ZeroKind::Qzero, ZeroKind::Qzero) && s1 != s2 {
        return Ok(MergeOutcome::Inadmissible {
            product,
            reason: "merging zeros of Q_2n must swap the same conjugate pair".into(),
        });
    }
    let nontrivial = product.nontrivial_cycles();
    let fixed_cycles = nontrivial.iter().filter(|c| sigma.fixes_cycle(c)).count();
    if fixed_cycles > 1 {
        return Ok(MergeOutcome::Excluded {
            product,
            fixed_cycles,
        });
    }

    let p1: BTreeSet<usize> = s1.pairs().into_iter().collect();
    let p2: BTreeSet<usize> = s2.pairs().into_iter().collect();
    let shared = p1.intersection(&p2).count();
    let (label, nodes) = match kinds {
        (ZeroKind::Qzero, ZeroKind::Qzero) => (Component::B, 1),
        (ZeroKind::DeltaZero, ZeroKind::DeltaZero) if s1 == s2 => (Component::Bb, 2),
        (ZeroKind::DeltaZero, ZeroKind::DeltaZero) if shared == 1 => (Component::Cc, 0),
        (ZeroKind::DeltaZero, ZeroKind::DeltaZero) if shared == 0 => (Component::Mm, 0),
        (ZeroKind::DeltaZero, ZeroKind::DeltaZero) => {
            return Err(Error::MonodromyMismatch(format!(
                "unexpected product {product} for {} and {}",
                s1.perm(),
                s2.perm()
            )))
        }
        _ if shared > 0 => (Component::Ac, 0),
        _ => (Component::Bm, 0),
    };

    let cycle_type = product.cycle_type();
    let ramification_profile: Vec<u32> = cycle_type.iter().map(|&l| l as u32).collect();
    let total_branching = ramification_profile.iter().map(|b| b - 1).sum::<u32>() + nodes;
    let removed = branching_of(s1.kind()) + branching_of(s2.kind());
    let genus_delta = genus_change(n, removed, &ramification_profile, nodes)?;
    Ok(MergeOutcome::Class(DegenerationClass {
        label,
        min_n: label.min_n(),
        fiber_size: product.cycles().len() - nodes as usize,
        product,
        cycle_type,
        ramification_profile,
        nodes,
        genus_delta,
        total_branching,
        sigma_invariant_cycles: fixed_cycles,
    }))
}

/// Ordered factorizations `p = t1·t2` of a class product by local monodromies
/// of the same kinds, supported on the sheets moved by the original pair.
pub fn resolution_count(s1: &LocalMonodromy, s2: &LocalMonodromy) -> usize {
    let n = s1.n();
    let support: BTreeSet<usize> = s1
        .perm()
        .support()
        .into_iter()
        .chain(s2.perm().support())
        .collect();
    let p = s1.perm().then(s2.perm());
    let within = |m: &LocalMonodromy| m.perm().support().iter().all(|i| support.contains(i));
    let firsts: Vec<_> = enumerate_local_monodromies(n, s1.kind())
        .into_iter()
        .filter(within)
        .collect();
    let seconds: Vec<_> = enumerate_local_monodromies(n, s2.kind())
        .into_iter()
        .filter(within)
        .collect();
    firsts
        .iter()
        .flat_map(|a| seconds.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a.perm().then(b.perm()) == p)
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergeTable {
    pub n: usize,
    /// Orbits of admissible pairs per label.
    pub classes: BTreeMap<Component, usize>,
    /// Ordered pairs ruled out by the involution.
    pub excluded_pairs: usize,
    #[serde(skip)]
    pub inadmissible_pairs: usize,
    /// Resolution count of each class, from its canonical representative.
    #[serde(skip)]
    pub resolutions: BTreeMap<Component, usize>,
    #[serde(skip)]
    pub representatives: BTreeMap<Component, (LocalMonodromy, LocalMonodromy)>,
}

impl MergeTable {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("table serializes")
    }
}

/// Classifies every ordered pair of local monodromies on `2n` sheets and
/// counts orbits under simultaneous conjugation by the centralizer of the
/// involution. Mixed pairs are taken with the `Q_{2n}` zero first.
pub fn enumerate_all_merges(n: usize) -> Result<MergeTable> {
    if !(1..=MAX_MERGE_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_MERGE_N as i64,
        });
    }
    let sigma = SheetInvolution::new(n);
    let gens = sigma.centralizer_generators();
    let locals: Vec<LocalMonodromy> = [ZeroKind::Qzero, ZeroKind::DeltaZero]
        .into_iter()
        .flat_map(|k| enumerate_local_monodromies(n, k))
        .collect();

    let mut excluded_pairs = 0;
    let mut inadmissible_pairs = 0;
    let mut admissible = BTreeMap::new();
    for s1 in &locals {
        for s2 in &locals {
            match classify_merge(s1, s2)? {
                MergeOutcome::Excluded { .. } => excluded_pairs += 1,
                MergeOutcome::Inadmissible { .. } => inadmissible_pairs += 1,
                MergeOutcome::Class(c) if s1.kind() <= s2.kind() => {
                    admissible.insert((s1.clone(), s2.clone()), c.label);
                }
                MergeOutcome::Class(_) => {}
            }
        }
    }

    let mut classes = BTreeMap::new();
    let mut representatives = BTreeMap::new();
    let mut visited = BTreeSet::new();
    for (pair, label) in &admissible {
        if visited.contains(pair) {
            continue;
        }
        // the first unvisited pair in sorted order is the orbit minimum
        let mut frontier = vec![pair.clone()];
        visited.insert(pair.clone());
        while let Some((a, b)) = frontier.pop() {
            for h in &gens {
                let next = (a.conjugate_by(h), b.conjugate_by(h));
                if visited.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        *classes.entry(*label).or_insert(0) += 1;
        representatives
            .entry(*label)
            .or_insert_with(|| pair.clone());
    }

    let found: BTreeSet<Component> = classes.keys().copied().collect();
    let expected: BTreeSet<Component> = Component::realizable(n).into_iter().collect();
    if found != expected || classes.values().any(|&c| c != 1) {
        return Err(Error::MonodromyMismatch(format!(
            "orbit table {classes:?} does not match the realizable components {expected:?}"
        )));
    }
    let resolutions = representatives
        .iter()
        .map(|(l, (a, b))| (*l, resolution_count(a, b)))
        .collect();
    Ok(MergeTable {
        n,
        classes,
        excluded_pairs,
        inadmissible_pairs,
        resolutions,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lm(kind: ZeroKind, len: usize, s: &str) -> LocalMonodromy {
        LocalMonodromy::new(kind, Permutation::parse(len, s).unwrap()).unwrap()
    }

    fn class(o: MergeOutcome) -> DegenerationClass {
        match o {
            MergeOutcome::Class(c) => c,
            other => panic!("expected a class, got {other:?}"),
        }
    }

    use ZeroKind::{DeltaZero as D, Qzero as Q};

    #[test]
    fn rank_one_double_zero() {
        let s = lm(Q, 2, "(1 2)");
        let c = class(classify_merge(&s, &s).unwrap());
        assert_eq!(c.label, Component::B);
        assert!(c.product.is_identity());
        assert_eq!((c.nodes, c.genus_delta, c.total_branching), (1, 0, 1));
    }

    #[test]
    fn four_cycle_from_shared_pair() {
        let c = class(classify_merge(&lm(Q, 4, "(1 2)"), &lm(D, 4, "(1 3)(2 4)")).unwrap());
        assert_eq!(c.label, Component::Ac);
        assert_eq!(c.product.to_string(), "(1 4 2 3)");
        assert_eq!(
            (c.ramification_profile.clone(), c.total_branching),
            (vec![4], 3)
        );
        assert_eq!(c.fiber_size, 1);
    }

    #[test]
    fn two_gluings_of_the_same_pairs_are_excluded() {
        let o = classify_merge(&lm(D, 4, "(1 3)(2 4)"), &lm(D, 4, "(1 4)(2 3)")).unwrap();
        assert_eq!(
            o,
            MergeOutcome::Excluded {
                product: Permutation::parse(4, "(1 2)(3 4)").unwrap(),
                fixed_cycles: 2
            }
        );
    }

    #[test]
    fn triple_root_product() {
        let c = class(classify_merge(&lm(D, 6, "(1 3)(2 4)"), &lm(D, 6, "(1 5)(2 6)")).unwrap());
        assert_eq!(c.label, Component::Cc);
        assert_eq!(c.product.to_string(), "(1 3 5)(2 4 6)");
        assert_eq!(
            (c.ramification_profile.clone(), c.genus_delta),
            (vec![3, 3], 0)
        );
    }

    #[test]
    fn other_shapes() {
        let c = class(classify_merge(&lm(Q, 6, "(5 6)"), &lm(D, 6, "(1 3)(2 4)")).unwrap());
        assert_eq!(
            (c.label, c.cycle_type.clone(), c.sigma_invariant_cycles),
            (Component::Bm, vec![2, 2, 2], 1)
        );
        let d = lm(D, 4, "(1 3)(2 4)");
        let c = class(classify_merge(&d, &d).unwrap());
        assert_eq!(
            (c.label, c.nodes, c.genus_delta, c.total_branching),
            (Component::Bb, 2, -1, 2)
        );
        let c = class(classify_merge(&lm(D, 8, "(1 3)(2 4)"), &lm(D, 8, "(5 7)(6 8)")).unwrap());
        assert_eq!(
            (c.label, c.cycle_type.clone(), c.total_branching),
            (Component::Mm, vec![2, 2, 2, 2], 4)
        );
        let o = classify_merge(&lm(Q, 4, "(1 2)"), &lm(Q, 4, "(3 4)")).unwrap();
        assert!(matches!(o, MergeOutcome::Inadmissible { .. }));
    }

    #[test]
    fn mismatched_sheets_rejected() {
        assert!(classify_merge(&lm(Q, 2, "(1 2)"), &lm(Q, 4, "(1 2)")).is_err());
    }

    #[test]
    fn orbit_tables() {
        let t1 = enumerate_all_merges(1).unwrap();
        assert_eq!(
            t1.classes.keys().copied().collect::<Vec<_>>(),
            [Component::B]
        );
        let t2 = enumerate_all_merges(2).unwrap();
        assert_eq!(
            t2.classes.keys().copied().collect::<Vec<_>>(),
            [Component::B, Component::Ac, Component::Bb]
        );
        assert_eq!(t2.excluded_pairs, 2);
        let t4 = enumerate_all_merges(4).unwrap();
        assert_eq!(t4.classes.len(), 6);
        assert!(enumerate_all_merges(0).is_err());
        assert!(enumerate_all_merges(7).is_err());
    }

    #[test]
    fn table_json_shape() {
        let v = enumerate_all_merges(3).unwrap().to_json();
        assert_eq!(
            v,
            serde_json::json!({
                "n": 3,
                "classes": {"b": 1, "ac": 1, "bm": 1, "bb": 1, "cc": 1},
                "excluded_pairs": 6
            })
        );
    }

    /// Every permutation of `0..len`, by Heap's algorithm.
    fn all_permutations(len: usize) -> Vec<Permutation> {
        let mut a: Vec<usize> = (0..len).collect();
        let mut c = vec![0; len];
        let mut out = vec![Permutation::new(a.clone()).unwrap()];
        let mut i = 0;
        while i < len {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                out.push(Permutation::new(a.clone()).unwrap());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    #[test]
    fn resolution_counts_match_brute_force() {
        let n = 4;
        let table = enumerate_all_merges(n).unwrap();
        let everything = all_permutations(2 * n);
        for (label, (s1, s2)) in &table.representatives {
            let support: BTreeSet<usize> = s1
                .perm()
                .support()
                .into_iter()
                .chain(s2.perm().support())
                .collect();
            let p = s1.perm().then(s2.perm());
            let brute = everything
                .iter()
                .filter(|t1| t1.support().iter().all(|i| support.contains(i)))
                .filter(|t1| LocalMonodromy::new(s1.kind(), (*t1).clone()).is_ok())
                .filter(|t1| {
                    let t2 = t1.inverse().then(&p);
                    t2.support().iter().all(|i| support.contains(i))
                        && LocalMonodromy::new(s2.kind(), t2).is_ok()
                })
                .count();
            assert_eq!(table.resolutions[label], brute, "{label}");
        }
        let frozen: Vec<usize> = table.resolutions.values().copied().collect();
        assert_eq!(frozen, [1, 2, 1, 2, 3, 2]);
    }

    #[test]
    fn invariants_for_all_pairs() {
        for n in 1..=MAX_MERGE_N {
            let sigma = SheetInvolution::new(n);
            let locals: Vec<_> = [Q, D]
                .into_iter()
                .flat_map(|k| enumerate_local_monodromies(n, k))
                .collect();
            for s1 in &locals {
                for s2 in &locals {
                    let o = classify_merge(s1, s2).unwrap();
                    let same_pairs_regluing =
                        s1.kind() == D && s2.kind() == D && s1.pairs() == s2.pairs() && s1 != s2;
                    assert_eq!(
                        matches!(o, MergeOutcome::Excluded { .. }),
                        same_pairs_regluing
                    );
                    let swapped = classify_merge(s2, s1).unwrap();
                    assert_eq!(o.label(), swapped.label());
                    if let MergeOutcome::Class(c) = o {
                        assert!(c.product.commutes_with(sigma.perm()));
                        assert_eq!(c.genus_delta, if c.label == Component::Bb { -1 } else { 0 });
                        if c.label == Component::Ac {
                            assert_eq!(c.fiber_size, 2 * n - 3);
                        }
                        let expected_total = match c.label {
                            Component::B => 1,
                            Component::Bb => 2,
                            Component::Ac | Component::Bm => 3,
                            Component::Cc | Component::Mm => 4,
                        };
                        assert_eq!(c.total_branching, expected_total);
                        assert!(c.min_n <= n);
                    }
                }
            }
        }
    }

    fn pair_strategy() -> impl Strategy<Value = (usize, usize, usize, usize)> {
        (1..=5usize).prop_flat_map(|n| {
            let m = n + n * (n - 1);
            let order = (1..=n).product::<usize>() << n;
            (Just(n), 0..m, 0..m, 0..order)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn classification_is_conjugation_equivariant((n, i, j, h) in pair_strategy()) {
            let sigma = SheetInvolution::new(n);
            let locals: Vec<_> = [Q, D].into_iter().flat_map(|k| enumerate_local_monodromies(n, k)).collect();
            let elems = sigma.centralizer_elements();
            let h = &elems[h % elems.len()];
            let (s1, s2) = (&locals[i], &locals[j]);
            let before = classify_merge(s1, s2).unwrap();
            let after = classify_merge(&s1.conjugate_by(h), &s2.conjugate_by(h)).unwrap();
            prop_assert_eq!(before.label(), after.label());
            prop_assert_eq!(before.product().conjugate_by(h), after.product().clone());
        }
    }
}
