use std::fmt;
use std::str::FromStr;

use super::supernatural::{parse_supernatural, SupernaturalNumber};
use crate::arith::{checked_lcm, gcd};
use crate::error::{Error, Result};
use crate::text::Cursor;

/// Number of independent non-torsion generators, kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeRank {
    Finite(u64),
    Continuum,
}

impl FreeRank {
    pub fn is_zero(self) -> bool {
        self == FreeRank::Finite(0)
    }
}

impl fmt::Display for FreeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeRank::Finite(n) => write!(f, "{n}"),
            FreeRank::Continuum => write!(f, "c"),
        }
    }
}

/// A subgroup `S` of `ℤ̂ = 𝕋`, described by its torsion part and a free rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusSubgroupDesc {
    pub torsion: SupernaturalNumber,
    pub free_rank: FreeRank,
}

impl TorusSubgroupDesc {
    pub fn new(torsion: SupernaturalNumber, free_rank: FreeRank) -> Self {
        TorusSubgroupDesc { torsion, free_rank }
    }

    /// `τ_S` separates points iff `S` is infinite.
    pub fn is_hausdorff(&self) -> bool {
        !self.torsion.is_finite() || !self.free_rank.is_zero()
    }

    pub fn with_free_rank(&self, free_rank: FreeRank) -> Self {
        TorusSubgroupDesc {
            torsion: self.torsion.clone(),
            free_rank,
        }
    }
}

/// `tors=<supernatural>,free=<n|c>`.
impl fmt::Display for TorusSubgroupDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tors={},free={}", self.torsion, self.free_rank)
    }
}

impl FromStr for TorusSubgroupDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect("tors=")?;
        let torsion = parse_supernatural(&mut cur)?;
        cur.expect(",free=")?;
        let free_rank = if cur.eat("c") {
            FreeRank::Continuum
        } else {
            FreeRank::Finite(cur.number()?)
        };
        cur.finish()?;
        Ok(TorusSubgroupDesc { torsion, free_rank })
    }
}

/// The subgroup `kℤ` of the integers; `k = 0` is `{0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntSubgroup(pub u64);

impl IntSubgroup {
    pub fn generator(self) -> u64 {
        self.0
    }

    /// `self ⊇ other`.
    pub fn contains_subgroup(self, other: IntSubgroup) -> bool {
        match (self.0, other.0) {
            (_, 0) => true,
            (0, _) => false,
            (a, b) => b % a == 0,
        }
    }

    /// `n1ℤ ∩ n2ℤ = lcm(n1, n2)ℤ`.
    pub fn intersection(self, other: IntSubgroup) -> Result<IntSubgroup> {
        checked_lcm(self.0, other.0)
            .map(IntSubgroup)
            .ok_or_else(|| Error::Overflow(format!("lcm({}, {})", self.0, other.0)))
    }

    /// `n1ℤ + n2ℤ = gcd(n1, n2)ℤ`.
    pub fn sum(self, other: IntSubgroup) -> IntSubgroup {
        IntSubgroup(gcd(self.0, other.0))
    }
}

impl fmt::Display for IntSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Z", self.0)
    }
}

impl FromStr for IntSubgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let k = cur.number()?;
        cur.expect("Z")?;
        cur.finish()?;
        Ok(IntSubgroup(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_grammar() {
        let d: TorusSubgroupDesc = "tors=2^2*3,free=0".parse().unwrap();
        assert_eq!(d.torsion, "12".parse().unwrap());
        assert_eq!(d.free_rank, FreeRank::Finite(0));
        assert_eq!(d.to_string(), "tors=2^2*3,free=0");
        let d: TorusSubgroupDesc = "tors=all{2},free=c".parse().unwrap();
        assert_eq!(d.free_rank, FreeRank::Continuum);
        assert_eq!(d.to_string(), "tors=all{2},free=c");
        assert!(matches!(
            "tors=2,free=x".parse::<TorusSubgroupDesc>(),
            Err(Error::Parse { position: 12, .. })
        ));
        assert!(matches!(
            "tors=2;free=1".parse::<TorusSubgroupDesc>(),
            Err(Error::Parse { position: 6, .. })
        ));
    }

    #[test]
    fn hausdorff_flag() {
        let h = |s: &str| s.parse::<TorusSubgroupDesc>().unwrap().is_hausdorff();
        assert!(!h("tors=12,free=0"));
        assert!(h("tors=12,free=1"));
        assert!(h("tors=2^inf,free=0"));
        assert!(!h("tors=1,free=0"));
        assert!(h("tors=all{2},free=0"));
    }

    #[test]
    fn integer_subgroups() {
        assert_eq!("8Z".parse::<IntSubgroup>().unwrap(), IntSubgroup(8));
        assert_eq!(IntSubgroup(0).to_string(), "0Z");
        assert!(IntSubgroup(2).contains_subgroup(IntSubgroup(8)));
        assert!(!IntSubgroup(8).contains_subgroup(IntSubgroup(2)));
        assert!(IntSubgroup(8).contains_subgroup(IntSubgroup(0)));
        assert!(!IntSubgroup(0).contains_subgroup(IntSubgroup(3)));
        assert_eq!(IntSubgroup(4).intersection(IntSubgroup(6)).unwrap(), IntSubgroup(12));
        assert_eq!(IntSubgroup(4).intersection(IntSubgroup(0)).unwrap(), IntSubgroup(0));
        assert_eq!(IntSubgroup(4).sum(IntSubgroup(6)), IntSubgroup(2));
        assert!("Z".parse::<IntSubgroup>().is_err());
    }
}
