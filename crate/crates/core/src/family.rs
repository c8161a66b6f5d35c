use std::fmt;
use std::str::FromStr;

/// The three tree families studied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Binary trees; a lone child is still marked left or right.
    BinaryPlane,
    /// Plane trees with at most two ordered, unmarked children.
    PlaneOneTwo,
    /// Binary trees whose right edges are colored blue or red.
    ColoredRightBinary,
}

impl FamilyId {
    pub const ALL: [FamilyId; 3] = [
        FamilyId::BinaryPlane,
        FamilyId::PlaneOneTwo,
        FamilyId::ColoredRightBinary,
    ];

    /// Short name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyId::BinaryPlane => "binary",
            FamilyId::PlaneOneTwo => "one2",
            FamilyId::ColoredRightBinary => "colored",
        }
    }

    /// Largest size for which the brute-force oracle is run by default.
    pub fn default_oracle_limit(self) -> usize {
        match self {
            FamilyId::BinaryPlane | FamilyId::PlaneOneTwo => 14,
            FamilyId::ColoredRightBinary => 12,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family {0:?} (expected binary, one2 or colored)")]
pub struct UnknownFamily(pub String);

impl FromStr for FamilyId {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "binary" => Ok(FamilyId::BinaryPlane),
            "one2" => Ok(FamilyId::PlaneOneTwo),
            "colored" => Ok(FamilyId::ColoredRightBinary),
            other => Err(UnknownFamily(other.to_string())),
        }
    }
}

/// Which series is substituted at `x^2` in the functional equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// The hipster series itself.
    Exact,
    /// The family's chain series; yields coefficients `g_n >= h_n`.
    Upper,
    /// The family's total-count series; yields coefficients `f_n <= h_n`.
    Lower,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "exact",
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
        })
    }
}
