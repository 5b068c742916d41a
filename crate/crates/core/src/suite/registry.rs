use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scope {
    All,
    Factorization,
    Monodromy,
    Multiplicity,
    Picard,
    Numerics,
}

impl Scope {
    pub const ALL: [Scope; 6] = [
        Scope::All,
        Scope::Factorization,
        Scope::Monodromy,
        Scope::Multiplicity,
        Scope::Picard,
        Scope::Numerics,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Factorization => "factorization",
            Scope::Monodromy => "monodromy",
            Scope::Multiplicity => "multiplicity",
            Scope::Picard => "picard",
            Scope::Numerics => "numerics",
        }
    }

    pub fn includes(self, check: CheckId) -> bool {
        self == Scope::All || check.scope() == self
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::ALL
            .into_iter()
            .find(|sc| sc.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown scope `{s}`")))
    }
}

macro_rules! checks {
    ($($variant:ident => $name:literal, $scope:ident;)*) => {
        /// Every check the suite can emit.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckId {
            $($variant,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$variant => $name,)*
                }
            }

            pub fn scope(self) -> Scope {
                match self {
                    $(CheckId::$variant => Scope::$scope,)*
                }
            }
        }
    };
}

checks! {
    PolyArith => "exactalg.poly_arith", Factorization;
    Resultant => "exactalg.resultant", Factorization;
    Discriminant => "exactalg.discriminant", Factorization;
    OrderAtZero => "exactalg.order_at_zero", Multiplicity;
    RatfuncEqual => "exactalg.ratfunc_equal", Picard;
    BuildP => "spectral.build_p", Factorization;
    CharPolyHamiltonian => "spectral.char_poly_hamiltonian", Factorization;
    FactorizeDiscriminant => "spectral.factorize_discriminant", Factorization;
    FactorizationSign => "spectral.factorization_sign", Factorization;
    ScalingAction => "spectral.scaling_action", Factorization;
    CoverNumerics => "spectral.cover_numerics", Numerics;
    RiemannHurwitz => "spectral.riemann_hurwitz", Numerics;
    DimsAndDegrees => "spectral.dims_and_degrees", Numerics;
    StratumMultiplicity => "spectral.stratum_multiplicity", Multiplicity;
    EnumerateLocalMonodromies => "monodromy.enumerate_local_monodromies", Monodromy;
    ClassifyMerge => "monodromy.classify_merge", Monodromy;
    EnumerateAllMerges => "monodromy.enumerate_all_merges", Monodromy;
    ResolutionCounts => "monodromy.resolution_counts", Monodromy;
    ValidateGlobalMonodromy => "monodromy.validate_global_monodromy", Monodromy;
    StarClass => "picard.star_class", Picard;
    Theorem3 => "picard.theorem3_check", Picard;
    KappaB => "picard.kappa_b", Picard;
    CoarseIdentity => "picard.coarse_identity_check", Picard;
    GlTheorem => "picard.gl_theorem_check", Picard;
    PicardGrid => "picard.grid", Picard;
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_prefixed_by_module() {
        let mut names: Vec<_> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), CheckId::ALL.len());
        for n in names {
            let module = n.split('.').next().unwrap();
            assert!(
                ["exactalg", "spectral", "monodromy", "picard"].contains(&module),
                "{n}"
            );
        }
    }

    #[test]
    fn scope_round_trip() {
        for s in Scope::ALL {
            assert_eq!(s.as_str().parse::<Scope>().unwrap(), s);
        }
        assert!("everything".parse::<Scope>().is_err());
    }
}
