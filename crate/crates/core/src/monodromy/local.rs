use serde::Serialize;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// `v ↦ -v` on the fibre: swaps sheets `2k-1` and `2k` (0-based `2k`, `2k+1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheetInvolution {
    n: usize,
    sigma: Permutation,
}

impl SheetInvolution {
    pub fn new(n: usize) -> Self {
        let images = (0..2 * n).map(|i| i ^ 1).collect();
        SheetInvolution {
            n,
            sigma: Permutation::new(images).expect("pair swap is a bijection"),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &Permutation {
        &self.sigma
    }

    pub fn partner(&self, sheet: usize) -> usize {
        sheet ^ 1
    }

    pub fn pair_of(&self, sheet: usize) -> usize {
        sheet / 2
    }

    /// Whether the cycle is mapped onto itself (as a set) by the involution.
    pub fn fixes_cycle(&self, cycle: &[usize]) -> bool {
        cycle.iter().all(|&i| cycle.contains(&self.partner(i)))
    }

    /// Generators of the centralizer of the involution (the hyperoctahedral
    /// group): the flip of the first pair and the swaps of adjacent pairs.
    pub fn centralizer_generators(&self) -> Vec<Permutation> {
        let len = 2 * self.n;
        let mut gens = vec![Permutation::from_cycles(len, &[&[0, 1]]).expect("valid")];
        for k in 0..self.n.saturating_sub(1) {
            let (a, b) = (2 * k, 2 * k + 2);
            gens.push(Permutation::from_cycles(len, &[&[a, b], &[a + 1, b + 1]]).expect("valid"));
        }
        gens
    }

    /// Every element of the centralizer, by closure under the generators.
    pub fn centralizer_elements(&self) -> Vec<Permutation> {
        let gens = self.centralizer_generators();
        let mut seen = std::collections::BTreeSet::new();
        let id = Permutation::identity(2 * self.n);
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        seen.into_iter().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ZeroKind {
    /// Zero of `Q_{2n}`: a transposition of one conjugate pair.
    Qzero,
    /// Zero of `Δ`: `(a c)(σa σc)` across two conjugate pairs.
    DeltaZero,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LocalMonodromy {
    kind: ZeroKind,
    perm: Permutation,
}

impl LocalMonodromy {
    pub fn new(kind: ZeroKind, perm: Permutation) -> Result<Self> {
        if !perm.len().is_multiple_of(2) || perm.is_empty() {
            return Err(Error::MonodromyMismatch(format!(
                "{perm} must act on an even, nonzero number of sheets"
            )));
        }
        let sigma = SheetInvolution::new(perm.len() / 2);
        if !perm.commutes_with(sigma.perm()) {
            return Err(Error::MonodromyMismatch(format!(
                "{perm} does not commute with the sheet involution"
            )));
        }
        let cycles = perm.nontrivial_cycles();
        let ok = match kind {
            ZeroKind::Qzero => {
                cycles.len() == 1 && cycles[0] == [cycles[0][0], sigma.partner(cycles[0][0])]
            }
            ZeroKind::DeltaZero => {
                cycles.len() == 2 && cycles.iter().all(|c| c.len() == 2 && !sigma.fixes_cycle(c))
            }
        };
        if !ok {
            return Err(Error::MonodromyMismatch(format!(
                "{perm} is not of kind {kind:?}"
            )));
        }
        Ok(LocalMonodromy { kind, perm })
    }

    pub fn kind(&self) -> ZeroKind {
        self.kind
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn n(&self) -> usize {
        self.perm.len() / 2
    }

    /// Conjugate pairs (0-based pair indices) touched by the permutation.
    pub fn pairs(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.perm.support().iter().map(|i| i / 2).collect();
        p.dedup();
        p
    }

    pub fn conjugate_by(&self, h: &Permutation) -> LocalMonodromy {
        LocalMonodromy {
            kind: self.kind,
            perm: self.perm.conjugate_by(h),
        }
    }
}

/// All local monodromies of the given kind on `2n` sheets.
pub fn enumerate_local_monodromies(n: usize, kind: ZeroKind) -> Vec<LocalMonodromy> {
    let len = 2 * n;
    let mut out = Vec::new();
    match kind {
        ZeroKind::Qzero => {
            for k in 0..n {
                let perm = Permutation::from_cycles(len, &[&[2 * k, 2 * k + 1]]).expect("valid");
                out.push(LocalMonodromy { kind, perm });
            }
        }
        ZeroKind::DeltaZero => {
            for k in 0..n {
                for l in k + 1..n {
                    let (a, b) = (2 * k, 2 * k + 1);
                    for c in [2 * l, 2 * l + 1] {
                        let d = c ^ 1;
                        let perm =
                            Permutation::from_cycles(len, &[&[a, c], &[b, d]]).expect("valid");
                        out.push(LocalMonodromy { kind, perm });
                    }
                }
            }
        }
    }
    out
}
