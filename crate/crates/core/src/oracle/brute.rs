//! Definition-level computations by full scans over elements and characters.
//!
//! Nothing here calls the closure or density formulas of the topology
//! module; only enumeration, canonical subgroups and the evaluation pairing.

use crate::duality::pairing_numerator;
use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, Element, FiniteAbelianGroup, Subgroup, DEFAULT_ENUMERATION_BOUND};
use crate::topology::PrecompactTopology;

/// Largest group order the oracle handles (bitsets are 256 bits wide).
pub const ORACLE_MAX_ORDER: u64 = 256;

/// A set of element indices below [`ORACLE_MAX_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub(crate) struct Bits([u64; 4]);

impl Bits {
    pub fn full(n: usize) -> Bits {
        let mut b = Bits::default();
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(self, other: Bits) -> Bits {
        Bits(std::array::from_fn(|w| self.0[w] & other.0[w]))
    }

    pub fn is_subset(self, other: Bits) -> bool {
        (0..4).all(|w| self.0[w] & !other.0[w] == 0)
    }

    pub fn len(self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..4).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let t = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + t)
            })
        })
    }
}

/// Pairing tables and subgroup bitsets for one group and its dual.
pub(crate) struct GroupTables {
    pub group: FiniteAbelianGroup,
    pub dual: FiniteAbelianGroup,
    pub n: usize,
    pub primal: Vec<Subgroup>,
    pub dual_subs: Vec<Subgroup>,
    pub primal_bits: Vec<Bits>,
    pub dual_bits: Vec<Bits>,
    /// `pairing[φ][g]`: `φ(g)` times the exponent.
    pub pairing: Vec<Vec<u32>>,
    /// `ker[φ] = {g : φ(g) = 0}`.
    pub ker: Vec<Bits>,
    /// `kills[g] = {φ : φ(g) = 0}`.
    pub kills: Vec<Bits>,
}

pub(crate) fn subgroup_bits(h: &Subgroup) -> Bits {
    let g = h.parent();
    let mut b = Bits::default();
    for x in h.elements() {
        b.insert(g.element_index(x) as usize);
    }
    b
}

impl GroupTables {
    pub fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        if group.order() > ORACLE_MAX_ORDER {
            return Err(Error::Capacity {
                order: group.order(),
                bound: ORACLE_MAX_ORDER,
            });
        }
        let dual = group.dual();
        let n = group.order() as usize;
        let primal = enumerate_subgroups(group, ORACLE_MAX_ORDER)?;
        let dual_subs = enumerate_subgroups(&dual, ORACLE_MAX_ORDER)?;
        let elements: Vec<Element> = group.elements().collect();
        let f = group.factors();
        let pairing: Vec<Vec<u32>> = elements
            .iter()
            .map(|phi| {
                elements
                    .iter()
                    .map(|g| pairing_numerator(f, phi.coords(), g.coords()) as u32)
                    .collect()
            })
            .collect();
        let mut ker = vec![Bits::default(); n];
        let mut kills = vec![Bits::default(); n];
        for (phi, row) in pairing.iter().enumerate() {
            for (g, &v) in row.iter().enumerate() {
                if v == 0 {
                    ker[phi].insert(g);
                    kills[g].insert(phi);
                }
            }
        }
        Ok(GroupTables {
            group: group.clone(),
            dual,
            n,
            primal_bits: primal.iter().map(subgroup_bits).collect(),
            dual_bits: dual_subs.iter().map(subgroup_bits).collect(),
            primal,
            dual_subs,
            pairing,
            ker,
            kills,
        })
    }

    /// `A(S,H)` by scanning: characters of `S` vanishing at every element of `H`.
    pub fn ann_in_dual(&self, s: Bits, h: Bits) -> Bits {
        h.iter().fold(s, |acc, g| acc.and(self.kills[g]))
    }

    /// `A(H,T)` by scanning: elements of `H` killed by every character of `T`.
    pub fn ann_in_group(&self, h: Bits, t: Bits) -> Bits {
        t.iter().fold(h, |acc, phi| acc.and(self.ker[phi]))
    }

    /// `{g : φ(g) = 0 for all φ ∈ A(S,H)}`.
    pub fn closure(&self, s: Bits, h: Bits) -> Bits {
        self.ann_in_group(Bits::full(self.n), self.ann_in_dual(s, h))
    }

    /// `φ[H] = φ[G]` for every `φ ∈ S`.
    pub fn dense_by_images(&self, s: Bits, h: Bits) -> bool {
        s.iter().all(|phi| {
            let row = &self.pairing[phi];
            let mut on_h = Bits::default();
            for g in h.iter() {
                on_h.insert(row[g] as usize);
            }
            (0..self.n).all(|g| on_h.contains(row[g] as usize))
        })
    }

    /// `φ(g) ∈ φ[H]` for every `φ ∈ S`.
    pub fn in_image_closure(&self, s: Bits, h: Bits, g: usize) -> bool {
        s.iter().all(|phi| {
            let row = &self.pairing[phi];
            h.iter().any(|x| row[x] == row[g])
        })
    }

    pub fn to_subgroup(&self, b: Bits) -> Subgroup {
        let gens: Vec<Element> = b.iter().map(|i| self.group.element_at(i as u64)).collect();
        Subgroup::generated(&self.group, &gens).expect("indices of the group")
    }
}

fn check_order(group: &FiniteAbelianGroup) -> Result<()> {
    if group.order() > DEFAULT_ENUMERATION_BOUND {
        return Err(Error::Capacity {
            order: group.order(),
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    Ok(())
}

/// The closure of `H` as `{g : φ(g) = 0 for all φ ∈ A(S,H)}`, by full scans.
pub fn closure_by_definition(topo: &PrecompactTopology, h: &Subgroup) -> Result<Subgroup> {
    let group = topo.group();
    check_order(group)?;
    if h.parent() != group {
        return Err(Error::GroupMismatch(format!("H is not a subgroup of {group}")));
    }
    let f = group.factors();
    let killers: Vec<&Element> = topo
        .s()
        .elements()
        .iter()
        .filter(|phi| {
            h.elements()
                .iter()
                .all(|x| pairing_numerator(f, phi.coords(), x.coords()) == 0)
        })
        .collect();
    let kept: Vec<Element> = group
        .elements()
        .filter(|g| {
            killers
                .iter()
                .all(|phi| pairing_numerator(f, phi.coords(), g.coords()) == 0)
        })
        .collect();
    Subgroup::generated(group, &kept)
}

/// Density of `H` as `φ[H] = φ[G]` for every `φ ∈ S`, by image enumeration.
pub fn dense_by_definition(topo: &PrecompactTopology, h: &Subgroup) -> Result<bool> {
    let group = topo.group();
    check_order(group)?;
    if h.parent() != group {
        return Err(Error::GroupMismatch(format!("H is not a subgroup of {group}")));
    }
    let f = group.factors();
    Ok(topo.s().elements().iter().all(|phi| {
        let on_h: std::collections::BTreeSet<u64> = h
            .elements()
            .iter()
            .map(|x| pairing_numerator(f, phi.coords(), x.coords()))
            .collect();
        group
            .elements()
            .all(|g| on_h.contains(&pairing_numerator(f, phi.coords(), g.coords())))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, parse_subgroup};

    #[test]
    fn definitional_closure_examples() {
        let g = parse_group("Z(4)").unwrap();
        let s = parse_subgroup(&g.dual(), "gens=[2]").unwrap();
        let t = PrecompactTopology::new(&g, &s).unwrap();
        let c = closure_by_definition(&t, &Subgroup::trivial(&g)).unwrap();
        assert_eq!(c, parse_subgroup(&g, "gens=[2]").unwrap());
        let bohr = PrecompactTopology::bohr(&g).unwrap();
        let anti = PrecompactTopology::anti_discrete(&g).unwrap();
        for h in crate::group::enumerate_subgroups(&g, 256).unwrap() {
            assert_eq!(closure_by_definition(&bohr, &h).unwrap(), h);
            assert!(closure_by_definition(&anti, &h).unwrap().is_whole());
        }
    }

    #[test]
    fn definitional_density_examples() {
        let g = parse_group("Z(4)").unwrap();
        let anti = PrecompactTopology::anti_discrete(&g).unwrap();
        assert!(dense_by_definition(&anti, &Subgroup::trivial(&g)).unwrap());
        let bohr = PrecompactTopology::bohr(&g).unwrap();
        let two = parse_subgroup(&g, "gens=[2]").unwrap();
        assert!(!dense_by_definition(&bohr, &two).unwrap());
        assert!(dense_by_definition(&bohr, &Subgroup::whole(&g)).unwrap());
    }

    #[test]
    fn tables_match_single_calls() {
        let g = parse_group("Z(2)xZ(4)").unwrap();
        let t = GroupTables::new(&g).unwrap();
        for (s, sb) in t.dual_subs.iter().zip(&t.dual_bits) {
            let topo = PrecompactTopology::new(&g, s).unwrap();
            for (h, hb) in t.primal.iter().zip(&t.primal_bits) {
                let c = t.to_subgroup(t.closure(*sb, *hb));
                assert_eq!(c, closure_by_definition(&topo, h).unwrap());
                assert_eq!(t.dense_by_images(*sb, *hb), dense_by_definition(&topo, h).unwrap());
            }
        }
    }

    #[test]
    fn bits_basics() {
        let mut b = Bits::default();
        b.insert(3);
        b.insert(200);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![3, 200]);
        assert_eq!(b.len(), 2);
        assert!(b.is_subset(Bits::full(256)));
        assert!(!Bits::full(4).is_subset(b));
    }
}
