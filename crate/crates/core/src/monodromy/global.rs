use serde::Serialize;

use super::local::{enumerate_local_monodromies, LocalMonodromy, SheetInvolution, ZeroKind};
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::spectral::cover_numerics;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalReport {
    pub n: usize,
    pub relation_holds: bool,
    pub transitive: bool,
    pub sigma_compatible: bool,
    /// Only checked when a generic base genus is given.
    pub counts_match: Option<bool>,
    pub first_violation: Option<String>,
}

impl GlobalReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.then(b).then(&a.inverse()).then(&b.inverse())
}

fn is_transitive(len: usize, gens: &[&Permutation]) -> bool {
    if len == 0 {
        return true;
    }
    let mut seen = vec![false; len];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for g in gens {
            let j = g.apply(i);
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Checks `γ₁⋯γ_r · ∏ [αᵢ, βᵢ] = id`, transitivity, compatibility with the
/// sheet involution and, for `generic_genus = Some(g)`, the number of local
/// monodromies of each kind.
pub fn validate_global_monodromy(
    n: usize,
    gammas: &[LocalMonodromy],
    alphas: &[Permutation],
    betas: &[Permutation],
    generic_genus: Option<u64>,
) -> Result<GlobalReport> {
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if alphas.len() != betas.len() {
        return Err(Error::Precondition(format!(
            "{} alphas but {} betas",
            alphas.len(),
            betas.len()
        )));
    }
    let len = 2 * n;
    let all_perms: Vec<&Permutation> = gammas
        .iter()
        .map(LocalMonodromy::perm)
        .chain(alphas)
        .chain(betas)
        .collect();
    if let Some(p) = all_perms.iter().find(|p| p.len() != len) {
        return Err(Error::MonodromyMismatch(format!(
            "{p} does not act on {len} sheets"
        )));
    }
    if let Some(g) = generic_genus {
        if alphas.len() as u64 != g {
            return Err(Error::Precondition(format!(
                "genus {g} needs {g} pairs of handle generators, got {}",
                alphas.len()
            )));
        }
    }

    let sigma = SheetInvolution::new(n);
    let product = gammas
        .iter()
        .map(|m| m.perm().clone())
        .chain(alphas.iter().zip(betas).map(|(a, b)| commutator(a, b)))
        .fold(Permutation::identity(len), |acc, p| acc.then(&p));
    let relation_holds = product.is_identity();
    let transitive = is_transitive(len, &all_perms);
    let sigma_compatible = all_perms.iter().all(|p| p.commutes_with(sigma.perm()));
    let counts_match = match generic_genus {
        Some(g) => {
            let c = cover_numerics(n as u64, g)?;
            let q = gammas
                .iter()
                .filter(|m| m.kind() == ZeroKind::Qzero)
                .count() as u64;
            let d = gammas.len() as u64 - q;
            Some(q == c.simple_zeros && d == c.double_zeros)
        }
        None => None,
    };

    let first_violation = if !relation_holds {
        Some(format!("relation: product is {product}"))
    } else if !transitive {
        Some("generated subgroup is not transitive".to_string())
    } else if !sigma_compatible {
        Some("a generator does not commute with the sheet involution".to_string())
    } else if counts_match == Some(false) {
        Some("local monodromy counts differ from a generic cover".to_string())
    } else {
        None
    };
    Ok(GlobalReport {
        n,
        relation_holds,
        transitive,
        sigma_compatible,
        counts_match,
        first_violation,
    })
}

/// A generic-count witness: every local monodromy appears twice in a row, so
/// the product of the `γ`'s is the identity, and the handles act trivially.
pub fn generic_witness(
    n: usize,
    g: u64,
) -> Result<(Vec<LocalMonodromy>, Vec<Permutation>, Vec<Permutation>)> {
    let c = cover_numerics(n as u64, g)?;
    let mut gammas = Vec::new();
    for (kind, count) in [
        (ZeroKind::Qzero, c.simple_zeros),
        (ZeroKind::DeltaZero, c.double_zeros),
    ] {
        let pool = enumerate_local_monodromies(n, kind);
        for k in 0..(count / 2) as usize {
            let m = &pool[k % pool.len()];
            gammas.push(m.clone());
            gammas.push(m.clone());
        }
    }
    let id = Permutation::identity(2 * n);
    Ok((gammas, vec![id.clone(); g as usize], vec![id; g as usize]))
}
