use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Irreducible components of the three discriminant loci.
///
/// `B` lives in the first locus (two zeros of `Q_{2n}` merge), `Ac` and `Bm`
/// in the second (`Q_{2n}` and `Δ` share a zero), `Bb`, `Cc` and `Mm` in the
/// third (two zeros of `Δ` merge).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    B,
    Ac,
    Bm,
    Bb,
    Cc,
    Mm,
}

impl Component {
    pub const ALL: [Component; 6] = [
        Component::B,
        Component::Ac,
        Component::Bm,
        Component::Bb,
        Component::Cc,
        Component::Mm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Component::B => "b",
            Component::Ac => "ac",
            Component::Bm => "bm",
            Component::Bb => "bb",
            Component::Cc => "cc",
            Component::Mm => "mm",
        }
    }

    /// Smallest half-rank for which the component exists.
    pub fn min_n(self) -> usize {
        match self {
            Component::B => 1,
            Component::Ac | Component::Bb => 2,
            Component::Bm | Component::Cc => 3,
            Component::Mm => 4,
        }
    }

    /// Index of the discriminant locus containing the component.
    pub fn locus(self) -> u8 {
        match self {
            Component::B => 1,
            Component::Ac | Component::Bm => 2,
            Component::Bb | Component::Cc | Component::Mm => 3,
        }
    }

    /// Coefficient of the component in its locus class:
    /// `[PD_3] = [bb] + 2[mm] + 3[cc]`, all others 1.
    pub fn class_coefficient(self) -> u32 {
        match self {
            Component::Mm => 2,
            Component::Cc => 3,
            _ => 1,
        }
    }

    /// Components present for half-rank `n`.
    pub fn realizable(n: usize) -> Vec<Component> {
        Component::ALL
            .into_iter()
            .filter(|c| c.min_n() <= n)
            .collect()
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Component::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown component label `{s}`")))
    }
}
