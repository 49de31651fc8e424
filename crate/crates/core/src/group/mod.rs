//! Finite abelian groups in invariant-factor form, their elements and subgroups.

mod enumerate;
pub(crate) mod lattice;
mod parse;
mod subgroup;

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{factorize, partitions};
use crate::error::{Error, Result};

pub use enumerate::{enumerate_subgroups, groups_of_order, groups_up_to, DEFAULT_ENUMERATION_BOUND};
pub use parse::{parse_element, parse_group, parse_subgroup};
pub use subgroup::{quotient_group, QuotientGroup, Subgroup};

/// Whether a group is a primal group `G` or stands for its character group `Ĝ`.
///
/// A finite group and its dual share invariant factors; the side only keeps
/// the two roles from being mixed up.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Primal,
    Dual,
}

/// `Z(d_1) ⊕ … ⊕ Z(d_k)` with `d_1 | d_2 | … | d_k` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    side: Side,
}

/// Coordinates of a group element in invariant-factor form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<u64>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: u64,
    pub exponent: u64,
    /// `r_p(G)` for every prime dividing the order.
    pub p_ranks: BTreeMap<u64, usize>,
}

impl FiniteAbelianGroup {
    /// Builds a group from an invariant-factor chain. Fails unless every factor
    /// is at least 2 and each divides the next.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::Precondition(format!(
                "invariant factor {bad} must be at least 2"
            )));
        }
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::Precondition(format!(
                "invariant factors must form a divisibility chain, but {} does not divide {}",
                w[0], w[1]
            )));
        }
        factors
            .iter()
            .try_fold(1u64, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::Overflow("group order does not fit in 64 bits".into()))?;
        Ok(FiniteAbelianGroup {
            factors,
            side: Side::Primal,
        })
    }

    /// Normalizes an arbitrary list of cyclic orders `Z(n_1) ⊕ … ⊕ Z(n_r)` to
    /// invariant-factor form. Factors equal to 1 are dropped.
    pub fn from_cyclic_orders(orders: &[u64]) -> Result<Self> {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            if n == 0 {
                return Err(Error::Precondition("Z(0) is not a finite group".into()));
            }
            for (p, e) in factorize(n) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        Self::from_prime_powers(by_prime)
    }

    fn from_prime_powers(mut by_prime: BTreeMap<u64, Vec<u32>>) -> Result<Self> {
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; rank];
        for (p, exps) in by_prime.iter_mut() {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (i, &e) in exps.iter().enumerate() {
                let pe = p
                    .checked_pow(e)
                    .ok_or_else(|| Error::Overflow("group order does not fit in 64 bits".into()))?;
                let slot = &mut factors[rank - 1 - i];
                *slot = slot
                    .checked_mul(pe)
                    .ok_or_else(|| Error::Overflow("group order does not fit in 64 bits".into()))?;
            }
        }
        Self::new(factors)
    }

    /// Every abelian group of order `n` as a product of cyclic prime powers
    /// given by one partition per prime; used by the group corpus.
    pub(crate) fn from_partitions(parts: &[(u64, Vec<u32>)]) -> Result<Self> {
        Self::from_prime_powers(parts.iter().cloned().collect())
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            factors: Vec::new(),
            side: Side::Primal,
        }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::from_cyclic_orders(&[n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_dual(&self) -> bool {
        self.side == Side::Dual
    }

    /// The character group: same invariant factors, opposite side.
    pub fn dual(&self) -> Self {
        FiniteAbelianGroup {
            factors: self.factors.clone(),
            side: match self.side {
                Side::Primal => Side::Dual,
                Side::Dual => Side::Primal,
            },
        }
    }

    /// Same invariant factors, regardless of side.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self.factors == other.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn invariants(&self) -> GroupInvariants {
        let mut p_ranks = BTreeMap::new();
        for &d in &self.factors {
            for (p, _) in factorize(d) {
                *p_ranks.entry(p).or_insert(0) += 1;
            }
        }
        GroupInvariants {
            order: self.order(),
            exponent: self.exponent(),
            p_ranks,
        }
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// Validates coordinates against the invariant factors.
    pub fn element(&self, coords: Vec<u64>) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::MalformedElement(format!(
                "expected {} coordinates for {}, got {}",
                self.rank(),
                self,
                coords.len()
            )));
        }
        if let Some((i, (&x, &d))) = coords
            .iter()
            .zip(&self.factors)
            .enumerate()
            .find(|(_, (&x, &d))| x >= d)
        {
            return Err(Error::MalformedElement(format!(
                "coordinate {i} is {x}, outside [0, {d})"
            )));
        }
        Ok(Element(coords))
    }

    pub(crate) fn check_element(&self, x: &Element) -> Result<()> {
        self.element(x.0.clone()).map(|_| ())
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((&x, &y), &d)| ((x as u128 + y as u128) % d as u128) as u64)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &d)| (d - x) % d)
                .collect(),
        )
    }

    pub fn scale(&self, n: u64, a: &Element) -> Element {
        Element(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &d)| ((x as u128 * n as u128) % d as u128) as u64)
                .collect(),
        )
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: &Element) -> u64 {
        a.0.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / crate::arith::gcd(x, d))
            .fold(1, |acc, o| crate::arith::checked_lcm(acc, o).expect("order fits"))
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let total = self.order();
        (0..total).map(move |idx| self.element_at(idx))
    }

    /// Mixed-radix index, the last coordinate varying fastest; matches [`Self::elements`].
    pub fn element_index(&self, a: &Element) -> u64 {
        a.0.iter()
            .zip(&self.factors)
            .fold(0, |acc, (&x, &d)| acc * d + x)
    }

    pub fn element_at(&self, mut idx: u64) -> Element {
        let mut coords = vec![0; self.rank()];
        for (c, &d) in coords.iter_mut().zip(&self.factors).rev() {
            *c = idx % d;
            idx /= d;
        }
        Element(coords)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "Z(1)");
        }
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z({d})")?;
        }
        Ok(())
    }
}

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// All abelian groups of order `n`, one per isomorphism class.
pub(crate) fn isomorphism_classes(n: u64) -> Vec<FiniteAbelianGroup> {
    let primes = factorize(n);
    let mut choices: Vec<Vec<(u64, Vec<u32>)>> = vec![Vec::new()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for prefix in &choices {
            for part in partitions(e) {
                let mut c = prefix.clone();
                c.push((p, part));
                next.push(c);
            }
        }
        choices = next;
    }
    let mut groups: Vec<FiniteAbelianGroup> = choices
        .iter()
        .map(|c| FiniteAbelianGroup::from_partitions(c).expect("corpus orders are small"))
        .collect();
    groups.sort();
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_to_invariant_factors() {
        let g = FiniteAbelianGroup::from_cyclic_orders(&[2, 3]).unwrap();
        assert_eq!(g.factors(), &[6]);
        let g = FiniteAbelianGroup::from_cyclic_orders(&[4, 2]).unwrap();
        assert_eq!(g.factors(), &[2, 4]);
        let g = FiniteAbelianGroup::from_cyclic_orders(&[6, 10, 1]).unwrap();
        assert_eq!(g.factors(), &[2, 30]);
        assert!(FiniteAbelianGroup::from_cyclic_orders(&[1]).unwrap().is_trivial());
        assert!(FiniteAbelianGroup::new(vec![4, 2]).is_err());
        assert!(FiniteAbelianGroup::new(vec![1]).is_err());
    }

    #[test]
    fn invariants_examples() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        let inv = g.invariants();
        assert_eq!((inv.order, inv.exponent), (8, 4));
        assert_eq!(inv.p_ranks, BTreeMap::from([(2, 2)]));

        let t = FiniteAbelianGroup::trivial().invariants();
        assert_eq!((t.order, t.exponent), (1, 1));
        assert!(t.p_ranks.is_empty());

        let z6 = FiniteAbelianGroup::cyclic(6).unwrap().invariants();
        assert_eq!(z6.p_ranks, BTreeMap::from([(2, 1), (3, 1)]));
    }

    #[test]
    fn element_validation() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        assert!(g.element(vec![1, 3]).is_ok());
        assert!(matches!(g.element(vec![2, 0]), Err(Error::MalformedElement(_))));
        assert!(matches!(g.element(vec![1]), Err(Error::MalformedElement(_))));
    }

    #[test]
    fn element_indexing_round_trips() {
        let g = FiniteAbelianGroup::new(vec![2, 6]).unwrap();
        for (i, x) in g.elements().enumerate() {
            assert_eq!(g.element_index(&x), i as u64);
        }
        assert_eq!(g.element_order(&g.element(vec![1, 2]).unwrap()), 6);
    }

    #[test]
    fn dual_is_an_involution() {
        let g = FiniteAbelianGroup::new(vec![2, 4]).unwrap();
        assert!(g.dual().is_dual());
        assert_eq!(g.dual().factors(), g.factors());
        assert_eq!(g.dual().dual(), g);
    }

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = [1, 2, 4, 8, 16, 32, 36, 64]
            .iter()
            .map(|&n| isomorphism_classes(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 4, 11]);
    }
}
