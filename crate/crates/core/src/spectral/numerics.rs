//! Closed-form counts for a generic cover over a genus-`g` base: zeros,
//! branch points, the cover genus, and dimensions of the spaces of spectral data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverNumerics {
    pub n: u64,
    pub g: u64,
    /// Degree `2n(2n-1)` of the full discriminant `W`.
    pub big_n: u64,
    /// Zeros of `Q_{2n}`.
    pub simple_zeros: u64,
    /// Zeros of `Δ`, double zeros of `W`.
    pub double_zeros: u64,
    pub r: u64,
    pub branch_with_mult: u64,
    pub genus_hat: u64,
    /// Degrees of `Q_{2n}`, `W'`, `Δ`.
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

impl CoverNumerics {
    pub fn is_consistent(&self) -> bool {
        self.r == self.simple_zeros + self.double_zeros
            && self.branch_with_mult == self.simple_zeros + 2 * self.double_zeros
            && self.branch_with_mult == 2 * self.big_n * (self.g - 1)
            && self.n2 == self.n1 + self.n3
    }

    /// Zero multiset of `W` as `(multiplicity, count)`.
    pub fn zero_multiset(&self) -> [(u64, u64); 2] {
        [(1, self.simple_zeros), (2, self.double_zeros)]
    }
}

pub fn cover_numerics(n: u64, g: u64) -> Result<CoverNumerics> {
    if n < 1 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if g < 2 {
        return Err(Error::Precondition("base genus must be at least 2".into()));
    }
    let big_n = 2 * n * (2 * n - 1);
    let out = CoverNumerics {
        n,
        g,
        big_n,
        simple_zeros: 4 * n * (g - 1),
        double_zeros: 4 * n * (n - 1) * (g - 1),
        r: 4 * n * n * (g - 1),
        branch_with_mult: 2 * big_n * (g - 1),
        genus_hat: 4 * n * n * (g - 1) + 1,
        n1: 2 * n,
        n2: 2 * n * n,
        n3: 2 * n * (n - 1),
    };
    debug_assert!(out.is_consistent());
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Genus {
    Genus(i64),
    /// `sheets·(2g-2) + Σ(b_p - 1)` is odd; the profile is inconsistent.
    NonInteger(i64),
}

/// Riemann–Hurwitz: `2ĝ - 2 = sheets·(2g - 2) + Σ(b_p - 1)`.
pub fn riemann_hurwitz(sheets: u64, g: u64, branching: &[u32]) -> Result<Genus> {
    if sheets < 1 || g < 2 {
        return Err(Error::Precondition("need sheets >= 1 and g >= 2".into()));
    }
    if branching.contains(&0) {
        return Err(Error::Precondition(
            "ramification orders are at least 1".into(),
        ));
    }
    let rhs =
        sheets as i64 * (2 * g as i64 - 2) + branching.iter().map(|b| *b as i64 - 1).sum::<i64>();
    Ok(if rhs % 2 == 0 {
        Genus::Genus(rhs / 2 + 1)
    } else {
        Genus::NonInteger(rhs)
    })
}

/// Generic ramification profile: one order-2 point over each zero of `Q_{2n}`
/// and two order-2 points over each zero of `Δ`.
pub fn generic_profile(n: u64, g: u64) -> Result<Vec<u32>> {
    let c = cover_numerics(n, g)?;
    Ok(vec![2; (c.simple_zeros + 2 * c.double_zeros) as usize])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupType {
    /// `Sp(2n)`, same root system as `C_n`.
    Sp,
    Gl,
    A,
    B,
    C,
    D,
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "Sp" | "sp" => GroupType::Sp,
            "GL" | "gl" => GroupType::Gl,
            "A" => GroupType::A,
            "B" => GroupType::B,
            "C" => GroupType::C,
            "D" => GroupType::D,
            other => return Err(Error::UnsupportedGroup(other.to_string())),
        })
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::Sp => "Sp",
            GroupType::Gl => "GL",
            GroupType::A => "A",
            GroupType::B => "B",
            GroupType::C => "C",
            GroupType::D => "D",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub group: String,
    pub rank: u64,
    pub g: u64,
    pub degrees: Vec<u64>,
    pub dim_group: u64,
    /// `Σ (2d_j - 1)`.
    pub degree_sum: u64,
    pub semisimple: bool,
    /// `Σ h⁰(K^{d_j})`, the dimension of the fixed-base space.
    pub fixed_base_dim: u64,
    pub variable_base_dim: u64,
}

impl DimReport {
    /// The identities that must hold: `Σ(2d_j-1) = dim G`, and for semisimple
    /// groups `dim 𝔐_Σ = (g-1)·dim G` and variable-base `(dim G + 3)(g-1)`.
    pub fn identities_hold(&self) -> bool {
        let g1 = self.g - 1;
        let base = self.degree_sum == self.dim_group
            && self.variable_base_dim == self.fixed_base_dim + 3 * g1;
        if !self.semisimple {
            return base;
        }
        base && self.fixed_base_dim == g1 * self.dim_group
            && self.variable_base_dim == (self.dim_group + 3) * g1
    }
}

/// `h⁰(Σ, K^d)` for a smooth genus-`g` curve.
pub fn sections_of_canonical_power(d: u64, g: u64) -> u64 {
    match d {
        0 => 1,
        1 => g,
        _ => (2 * d - 1) * (g - 1),
    }
}

pub fn dims_and_degrees(group: GroupType, rank: u64, g: u64) -> Result<DimReport> {
    if g < 2 {
        return Err(Error::Precondition("base genus must be at least 2".into()));
    }
    let min_rank = if group == GroupType::D { 2 } else { 1 };
    if rank < min_rank {
        return Err(Error::Precondition(format!(
            "{group} needs rank >= {min_rank}"
        )));
    }
    let k = rank;
    let (degrees, dim_group): (Vec<u64>, u64) = match group {
        GroupType::A => ((2..=k + 1).collect(), k * (k + 2)),
        GroupType::B | GroupType::C | GroupType::Sp => {
            ((1..=k).map(|j| 2 * j).collect(), k * (2 * k + 1))
        }
        GroupType::D => {
            let mut d: Vec<u64> = (1..k).map(|j| 2 * j).collect();
            d.push(k);
            d.sort_unstable();
            (d, k * (2 * k - 1))
        }
        GroupType::Gl => ((1..=k).collect(), k * k),
    };
    let degree_sum = degrees.iter().map(|d| 2 * d - 1).sum();
    let fixed_base_dim = degrees
        .iter()
        .map(|&d| sections_of_canonical_power(d, g))
        .sum::<u64>();
    Ok(DimReport {
        group: group.to_string(),
        rank,
        g,
        degrees,
        dim_group,
        degree_sum,
        semisimple: group != GroupType::Gl,
        fixed_base_dim,
        variable_base_dim: fixed_base_dim + 3 * (g - 1),
    })
}

/// `Σ_{j=1}^n (4j - 1)(g - 1)`, the fixed-base dimension of the Sp(2n) space.
pub fn sp_fixed_base_sum(n: u64, g: u64) -> u64 {
    (1..=n).map(|j| (4 * j - 1) * (g - 1)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_genus_two() {
        let c = cover_numerics(2, 2).unwrap();
        assert_eq!(
            (
                c.big_n,
                c.simple_zeros,
                c.double_zeros,
                c.r,
                c.branch_with_mult,
                c.genus_hat
            ),
            (12, 8, 8, 16, 24, 17)
        );
        assert_eq!((c.n1, c.n2, c.n3), (4, 8, 4));
    }

    #[test]
    fn rank_one_genus_two() {
        let c = cover_numerics(1, 2).unwrap();
        assert_eq!(
            (c.big_n, c.simple_zeros, c.double_zeros, c.r, c.genus_hat),
            (2, 4, 0, 4, 5)
        );
    }

    #[test]
    fn genus_one_rejected() {
        assert!(cover_numerics(1, 1).is_err());
    }

    #[test]
    fn generic_genus_from_profile() {
        let profile = generic_profile(2, 2).unwrap();
        assert_eq!(profile.iter().map(|b| b - 1).sum::<u32>(), 8 + 16);
        assert_eq!(riemann_hurwitz(4, 2, &profile).unwrap(), Genus::Genus(17));
    }

    #[test]
    fn odd_profile_flagged() {
        assert_eq!(riemann_hurwitz(2, 2, &[2]).unwrap(), Genus::NonInteger(5));
        assert!(riemann_hurwitz(2, 2, &[0]).is_err());
    }

    #[test]
    fn sp4_dimensions() {
        let r = dims_and_degrees(GroupType::C, 2, 2).unwrap();
        assert_eq!(r.degrees, vec![2, 4]);
        assert_eq!(
            (r.dim_group, r.fixed_base_dim, r.variable_base_dim),
            (10, 10, 13)
        );
        assert_eq!(sp_fixed_base_sum(2, 2), 10);
        assert!(r.identities_hold());
    }

    #[test]
    fn a2_dimensions() {
        let r = dims_and_degrees(GroupType::A, 2, 3).unwrap();
        assert_eq!(r.degrees, vec![2, 3]);
        assert_eq!((r.dim_group, r.degree_sum, r.variable_base_dim), (8, 8, 22));
    }

    #[test]
    fn sp2_is_quadratic_differentials() {
        let r = dims_and_degrees(GroupType::Sp, 1, 2).unwrap();
        assert_eq!(r.degrees, vec![2]);
        assert_eq!(r.fixed_base_dim, 3);
    }

    #[test]
    fn gl_is_not_semisimple() {
        let r = dims_and_degrees(GroupType::Gl, 3, 4).unwrap();
        assert_eq!(r.degree_sum, 9);
        assert_eq!(r.fixed_base_dim, 9 * 3 + 1);
        assert!(r.identities_hold());
    }

    #[test]
    fn unsupported_labels() {
        assert!("E".parse::<GroupType>().is_err());
        assert!(dims_and_degrees(GroupType::D, 1, 2).is_err());
    }
}
