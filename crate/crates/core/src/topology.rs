//! Precompact topologies `τ_S` on a finite abelian group `G`, one per `S ≤ Ĝ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::duality::{annihilate, Character, DualSubgroup};
use crate::error::{Error, Result};
use crate::group::{enumerate_subgroups, Element, FiniteAbelianGroup, Subgroup};

/// The topology `τ_S`, with its kernel `N = A(G,S)` (the closure of `{0}`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrecompactTopology {
    group: FiniteAbelianGroup,
    s: DualSubgroup,
    kernel: Subgroup,
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A subgroup of `G`.
    Subgroup(Subgroup),
    /// A subgroup of `Ĝ`.
    DualSubgroup(DualSubgroup),
    Character(Character),
    Element(Element),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Subgroup(h) => write!(f, "subgroup {h}"),
            Witness::DualSubgroup(l) => write!(f, "dual subgroup {l}"),
            Witness::Character(c) => write!(f, "character {c}"),
            Witness::Element(x) => write!(f, "element {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn no(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

impl PrecompactTopology {
    pub fn new(group: &FiniteAbelianGroup, s: &DualSubgroup) -> Result<Self> {
        if group.is_dual() {
            return Err(Error::GroupMismatch(format!(
                "topologies live on primal groups, got the dual group {group}"
            )));
        }
        if *s.parent() != group.dual() {
            return Err(Error::GroupMismatch(format!(
                "S must be a subgroup of the dual of {group}"
            )));
        }
        Ok(PrecompactTopology {
            group: group.clone(),
            kernel: annihilate(&Subgroup::whole(group), s),
            s: s.clone(),
        })
    }

    /// `τ_b`, given by the full dual.
    pub fn bohr(group: &FiniteAbelianGroup) -> Result<Self> {
        Self::new(group, &Subgroup::whole(&group.dual()))
    }

    pub fn anti_discrete(group: &FiniteAbelianGroup) -> Result<Self> {
        Self::new(group, &Subgroup::trivial(&group.dual()))
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn s(&self) -> &DualSubgroup {
        &self.s
    }

    /// `A(G,S)`.
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn is_hausdorff(&self) -> bool {
        self.kernel.is_trivial()
    }

    fn check(&self, h: &Subgroup) -> Result<()> {
        if *h.parent() != self.group {
            return Err(Error::GroupMismatch(format!(
                "subgroup of {}{} used with a topology on {}",
                if h.parent().is_dual() { "dual " } else { "" },
                h.parent(),
                self.group
            )));
        }
        Ok(())
    }

    /// `A(Ĝ,H)`.
    fn full_annihilator(&self, h: &Subgroup) -> DualSubgroup {
        annihilate(&Subgroup::whole(self.s.parent()), h)
    }

    /// `A(G, A(S,H))`.
    pub fn closure(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check(h)?;
        Ok(annihilate(&Subgroup::whole(&self.group), &annihilate(&self.s, h)))
    }

    pub fn is_closed(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.closure(h)? == *h)
    }

    /// Closedness verdict with the closure as witness when `H` is not closed.
    pub fn closed_verdict(&self, h: &Subgroup) -> Result<Verdict> {
        let c = self.closure(h)?;
        Ok(if c == *h {
            Verdict::yes()
        } else {
            Verdict::no(Witness::Subgroup(c))
        })
    }

    /// The finite-index test: `H` closed iff `A(Ĝ,H) ⊆ S`.
    pub fn is_closed_by_annihilator(&self, h: &Subgroup) -> Result<bool> {
        self.check(h)?;
        self.s.contains_subgroup(&self.full_annihilator(h))
    }

    /// `H` dense iff `A(Ĝ,H) ∩ S = {0}`; a nonzero character of `S` vanishing on `H` refutes it.
    pub fn dense_verdict(&self, h: &Subgroup) -> Result<Verdict> {
        self.check(h)?;
        let meet = self.full_annihilator(h).intersection(&self.s)?;
        Ok(match meet.generators().first() {
            None => Verdict::yes(),
            Some(phi) => Verdict::no(Witness::Character(
                Character::from_dual_element(self.s.parent(), phi)?,
            )),
        })
    }

    pub fn is_dense(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.dense_verdict(h)?.holds)
    }

    /// Whether `H` is dense in `N`, i.e. `N ⊆ cl(H)`. Requires `H ≤ N`.
    pub fn is_dense_in(&self, h: &Subgroup, n: &Subgroup) -> Result<bool> {
        self.check(n)?;
        if !n.contains_subgroup(h)? {
            return Err(Error::Precondition(format!("H = {h} is not contained in N = {n}")));
        }
        self.closure(h)?.contains_subgroup(n)
    }
}

/// All subgroups of `G` and of `Ĝ` in canonical order, plus memoized closed families.
pub struct SubgroupLattices {
    group: FiniteAbelianGroup,
    primal: Vec<Subgroup>,
    dual: Vec<DualSubgroup>,
    dual_index: HashMap<DualSubgroup, usize>,
    families: Vec<OnceLock<Vec<bool>>>,
}

impl SubgroupLattices {
    pub fn new(group: &FiniteAbelianGroup, bound: u64) -> Result<Self> {
        if group.is_dual() {
            return Err(Error::GroupMismatch(format!("expected a primal group, got dual {group}")));
        }
        let primal = enumerate_subgroups(group, bound)?;
        let dual: Vec<Subgroup> = primal.iter().map(|h| h.retag(&group.dual())).collect();
        let dual_index = dual.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(SubgroupLattices {
            group: group.clone(),
            families: (0..dual.len()).map(|_| OnceLock::new()).collect(),
            primal,
            dual,
            dual_index,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn primal(&self) -> &[Subgroup] {
        &self.primal
    }

    pub fn dual(&self) -> &[DualSubgroup] {
        &self.dual
    }

    fn check(&self, topo: &PrecompactTopology) -> Result<()> {
        if topo.group != self.group {
            return Err(Error::GroupMismatch(format!(
                "topology on {} used with the subgroup lattices of {}",
                topo.group, self.group
            )));
        }
        Ok(())
    }

    /// Closedness of every subgroup of `G` under `τ_S`, indexed like [`Self::primal`].
    pub fn family_mask(&self, topo: &PrecompactTopology) -> Result<&[bool]> {
        self.check(topo)?;
        let i = self.dual_index[&topo.s];
        Ok(self.families[i].get_or_init(|| {
            self.primal
                .iter()
                .map(|h| topo.is_closed(h).expect("same group"))
                .collect()
        }))
    }

    fn topology(&self, s: &DualSubgroup) -> PrecompactTopology {
        PrecompactTopology::new(&self.group, s).expect("dual subgroup of this group")
    }

    /// The closed subgroups of `τ_S` in canonical order.
    pub fn closed_family(&self, topo: &PrecompactTopology) -> Result<Vec<Subgroup>> {
        let mask = self.family_mask(topo)?;
        Ok(self
            .primal
            .iter()
            .zip(mask)
            .filter(|(_, &c)| c)
            .map(|(h, _)| h.clone())
            .collect())
    }

    /// Compares closed families directly and through the criterion
    /// `L ∩ S1 = L ∩ S2` for every `L ≤ Ĝ`; the two must agree.
    pub fn same_closed_family(
        &self,
        t1: &PrecompactTopology,
        t2: &PrecompactTopology,
    ) -> Result<SameFamily> {
        let m1 = self.family_mask(t1)?;
        let m2 = self.family_mask(t2)?;
        let h_witness = self
            .primal
            .iter()
            .zip(m1.iter().zip(m2))
            .find(|(_, (a, b))| a != b)
            .map(|(h, _)| h.clone());
        let mut l_witness = None;
        for l in [&t1.s, &t2.s].into_iter().chain(&self.dual) {
            if l.intersection(&t1.s)? != l.intersection(&t2.s)? {
                l_witness = Some(l.clone());
                break;
            }
        }
        if h_witness.is_some() != l_witness.is_some() {
            return Err(Error::Inconsistent(format!(
                "closed families of S1 = {} and S2 = {} {} but the intersection criterion says {}",
                t1.s,
                t2.s,
                if h_witness.is_none() { "agree" } else { "differ" },
                if l_witness.is_none() { "same" } else { "different" },
            )));
        }
        Ok(SameFamily {
            holds: h_witness.is_none(),
            distinguishing_subgroup: h_witness,
            distinguishing_dual: l_witness,
        })
    }

    fn same_family_as(&self, topo: &PrecompactTopology) -> Result<Vec<&DualSubgroup>> {
        let target = self.family_mask(topo)?;
        let mut out = Vec::new();
        for t in &self.dual {
            if self.family_mask(&self.topology(t))? == target {
                out.push(t);
            }
        }
        Ok(out)
    }

    /// The sum of every `T ⊇ S` with the same closed family, re-verified to
    /// have that family itself.
    pub fn greatest_same_family(&self, topo: &PrecompactTopology) -> Result<DualSubgroup> {
        let mut acc = topo.s.clone();
        for t in self.same_family_as(topo)? {
            if t.contains_subgroup(&topo.s)? {
                acc = acc.sum(t)?;
            }
        }
        let result = self.topology(&acc);
        if self.family_mask(&result)? != self.family_mask(topo)? {
            return Err(Error::Inconsistent(format!(
                "sum {acc} of same-family supergroups of {} changes the closed family",
                topo.s
            )));
        }
        Ok(acc)
    }

    /// The inclusion-minimal `T` with the same closed family as `S`.
    pub fn minimal_same_family(&self, topo: &PrecompactTopology) -> Result<Vec<DualSubgroup>> {
        let same = self.same_family_as(topo)?;
        let mut out = Vec::new();
        for t in &same {
            let mut minimal = true;
            for u in &same {
                if u != t && t.contains_subgroup(u)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push((*t).clone());
            }
        }
        Ok(out)
    }

    /// `S ∩ K` dense in `K` for every `K ≤ Ĝ`; in the discrete dual that means `K ⊆ S`.
    pub fn totally_dense_verdict(&self, s: &DualSubgroup) -> Result<Verdict> {
        if *s.parent() != self.group.dual() {
            return Err(Error::GroupMismatch(format!("S is not a subgroup of the dual of {}", self.group)));
        }
        for k in &self.dual {
            if s.intersection(k)? != *k {
                return Ok(Verdict::no(Witness::DualSubgroup(k.clone())));
            }
        }
        Ok(Verdict::yes())
    }

    /// Every subgroup closed. Cross-checked against total density of `S` and against `S = Ĝ`.
    pub fn sc_verdict(&self, topo: &PrecompactTopology) -> Result<Verdict> {
        let mask = self.family_mask(topo)?;
        let first_open = mask.iter().position(|&c| !c);
        let td = self.totally_dense_verdict(&topo.s)?.holds;
        let full = topo.s.is_whole();
        let sc = first_open.is_none();
        if sc != td || sc != full {
            return Err(Error::Inconsistent(format!(
                "S = {}: every-subgroup-closed {sc}, totally dense {td}, S = Ĝ {full}",
                topo.s
            )));
        }
        Ok(match first_open {
            None => Verdict::yes(),
            Some(i) => Verdict::no(Witness::Subgroup(self.primal[i].clone())),
        })
    }

    /// Topological simplicity by definition, by `L ∩ S = {0}` for all proper
    /// `L ≤ Ĝ`, and by injectivity of every nonzero character in `S`. The
    /// anti-discrete topology counts as simple.
    pub fn simple_verdict(&self, topo: &PrecompactTopology) -> Result<Verdict> {
        let verdicts = self.simple_verdicts(topo)?;
        if verdicts.definition.holds != verdicts.proper_meets_trivially
            || verdicts.definition.holds != verdicts.all_injective
        {
            return Err(Error::Inconsistent(format!(
                "S = {}: simple by definition {}, proper-closed criterion {}, injectivity criterion {}",
                topo.s, verdicts.definition.holds, verdicts.proper_meets_trivially, verdicts.all_injective
            )));
        }
        Ok(verdicts.definition)
    }

    /// The three simplicity verdicts, without asserting that they agree.
    pub fn simple_verdicts(&self, topo: &PrecompactTopology) -> Result<SimplicityVerdicts> {
        let mask = self.family_mask(topo)?;
        let offending = self
            .primal
            .iter()
            .zip(mask)
            .find(|(h, &c)| c && !h.is_trivial() && !h.is_whole())
            .map(|(h, _)| h.clone());
        let mut proper_meets_trivially = true;
        for l in self.dual.iter().filter(|l| !l.is_whole()) {
            if !l.intersection(&topo.s)?.is_trivial() {
                proper_meets_trivially = false;
                break;
            }
        }
        let dual = self.group.dual();
        let all_injective = topo
            .s
            .elements()
            .iter()
            .filter(|phi| !phi.is_zero())
            .all(|phi| {
                Character::from_dual_element(&dual, phi)
                    .expect("element of the dual")
                    .is_injective()
            });
        Ok(SimplicityVerdicts {
            definition: match offending {
                None => Verdict::yes(),
                Some(h) => Verdict::no(Witness::Subgroup(h)),
            },
            proper_meets_trivially,
            all_injective,
        })
    }

    /// `S` meets every nontrivial `B ≤ Ĝ`; compared with the absence of
    /// proper dense subgroups of `(G, τ_S)`.
    pub fn essential_verdict(&self, topo: &PrecompactTopology) -> Result<Essential> {
        self.check(topo)?;
        let mut missed = None;
        for b in self.dual.iter().filter(|b| !b.is_trivial()) {
            if b.intersection(&topo.s)?.is_trivial() {
                missed = Some(b.clone());
                break;
            }
        }
        let mut proper_dense = None;
        for h in self.primal.iter().filter(|h| !h.is_whole()) {
            if topo.is_dense(h)? {
                proper_dense = Some(h.clone());
                break;
            }
        }
        let equivalence_holds = missed.is_none() == proper_dense.is_none();
        Ok(Essential {
            essential: match missed {
                None => Verdict::yes(),
                Some(b) => Verdict::no(Witness::DualSubgroup(b)),
            },
            equivalence_holds,
            proper_dense_subgroup: proper_dense,
        })
    }

    /// Every verdict of the classification record.
    pub fn classify(&self, topo: &PrecompactTopology) -> Result<Classification> {
        let sc = self.sc_verdict(topo)?;
        let totally_dense = self.totally_dense_verdict(&topo.s)?;
        let simple = self.simple_verdict(topo)?;
        let essential = self.essential_verdict(topo)?;
        if !essential.equivalence_holds {
            return Err(Error::Inconsistent(format!(
                "S = {}: essential {} but proper dense subgroup {:?}",
                topo.s, essential.essential.holds, essential.proper_dense_subgroup
            )));
        }
        Ok(Classification {
            hausdorff: topo.is_hausdorff(),
            sc,
            totally_dense,
            simple,
            essential: essential.essential,
            kernel: topo.kernel.clone(),
            closed_family: self.closed_family(topo)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SameFamily {
    pub holds: bool,
    /// A subgroup of `G` closed in exactly one of the two topologies.
    pub distinguishing_subgroup: Option<Subgroup>,
    /// Some `L ≤ Ĝ` with `L ∩ S1 ≠ L ∩ S2`.
    pub distinguishing_dual: Option<DualSubgroup>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityVerdicts {
    pub definition: Verdict,
    pub proper_meets_trivially: bool,
    pub all_injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Essential {
    pub essential: Verdict,
    pub equivalence_holds: bool,
    pub proper_dense_subgroup: Option<Subgroup>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub hausdorff: bool,
    pub sc: Verdict,
    pub totally_dense: Verdict,
    pub simple: Verdict,
    pub essential: Verdict,
    pub kernel: Subgroup,
    pub closed_family: Vec<Subgroup>,
}

/// `τ_S` with `S = Σ A(Ĝ, H_i)`: the coarsest topology of that form in which every `H_i` is closed.
pub fn topology_closing_family(
    group: &FiniteAbelianGroup,
    family: &[Subgroup],
) -> Result<PrecompactTopology> {
    let dual = group.dual();
    let mut s = Subgroup::trivial(&dual);
    for h in family {
        if h.parent() != group {
            return Err(Error::GroupMismatch(format!("{h} is not a subgroup of {group}")));
        }
        s = s.sum(&annihilate(&Subgroup::whole(&dual), h))?;
    }
    PrecompactTopology::new(group, &s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{parse_group, parse_subgroup, DEFAULT_ENUMERATION_BOUND};

    fn setup(g: &str) -> (FiniteAbelianGroup, SubgroupLattices) {
        let g = parse_group(g).unwrap();
        let lat = SubgroupLattices::new(&g, DEFAULT_ENUMERATION_BOUND).unwrap();
        (g, lat)
    }

    fn topo(g: &FiniteAbelianGroup, s: &str) -> PrecompactTopology {
        PrecompactTopology::new(g, &parse_subgroup(&g.dual(), s).unwrap()).unwrap()
    }

    fn sub(g: &FiniteAbelianGroup, spec: &str) -> Subgroup {
        parse_subgroup(g, spec).unwrap()
    }

    #[test]
    fn closure_examples() {
        let (g, _) = setup("Z(4)");
        let t = topo(&g, "gens=[2]");
        let two = sub(&g, "gens=[2]");
        assert_eq!(t.closure(&Subgroup::trivial(&g)).unwrap(), two);
        assert!(t.is_closed(&two).unwrap());
        assert!(!t.is_closed(&Subgroup::trivial(&g)).unwrap());
        assert_eq!(t.kernel(), &two);
        assert!(!t.is_hausdorff());

        let bohr = PrecompactTopology::bohr(&g).unwrap();
        let anti = PrecompactTopology::anti_discrete(&g).unwrap();
        for h in [Subgroup::trivial(&g), two.clone(), Subgroup::whole(&g)] {
            assert_eq!(bohr.closure(&h).unwrap(), h);
            assert!(anti.closure(&h).unwrap().is_whole());
        }
    }

    #[test]
    fn density_examples() {
        let (g, _) = setup("Z(4)");
        let anti = PrecompactTopology::anti_discrete(&g).unwrap();
        assert!(anti.is_dense(&Subgroup::trivial(&g)).unwrap());
        let t = topo(&g, "gens=[2]");
        let v = t.dense_verdict(&sub(&g, "gens=[2]")).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().to_string(), "character chi[2]");
        assert!(t.is_dense(&Subgroup::whole(&g)).unwrap());

        let two = sub(&g, "gens=[2]");
        assert!(t.is_dense_in(&Subgroup::trivial(&g), &two).unwrap());
        assert!(t.is_dense_in(&two, &two).unwrap());
        let bohr = PrecompactTopology::bohr(&g).unwrap();
        assert!(!bohr.is_dense_in(&Subgroup::trivial(&g), &two).unwrap());
        assert!(matches!(
            t.is_dense_in(&two, &Subgroup::trivial(&g)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn closed_family_examples() {
        let (g, lat) = setup("Z(2)xZ(2)");
        let t = topo(&g, "gens=[1,0]");
        let fam = lat.closed_family(&t).unwrap();
        assert_eq!(fam, vec![sub(&g, "gens=[0,1]"), Subgroup::whole(&g)]);
        let bohr = PrecompactTopology::bohr(&g).unwrap();
        assert_eq!(lat.closed_family(&bohr).unwrap().len(), 5);
        let anti = PrecompactTopology::anti_discrete(&g).unwrap();
        assert_eq!(lat.closed_family(&anti).unwrap(), vec![Subgroup::whole(&g)]);
    }

    #[test]
    fn same_family_examples() {
        let (g, lat) = setup("Z(2)xZ(2)");
        let t1 = topo(&g, "gens=[1,0]");
        let t2 = topo(&g, "gens=[0,1]");
        let r = lat.same_closed_family(&t1, &t2).unwrap();
        assert!(!r.holds);
        assert_eq!(r.distinguishing_dual, Some(t1.s().clone()));
        assert!(lat.same_closed_family(&t1, &t1).unwrap().holds);

        let (g, lat) = setup("Z(4)");
        let ts: Vec<_> = lat.dual().iter().map(|s| PrecompactTopology::new(&g, s).unwrap()).collect();
        for a in &ts {
            for b in &ts {
                assert_eq!(lat.same_closed_family(a, b).unwrap().holds, a == b);
            }
        }
    }

    #[test]
    fn extremal_examples() {
        let (g, lat) = setup("Z(4)");
        let bohr = PrecompactTopology::bohr(&g).unwrap();
        assert!(lat.greatest_same_family(&bohr).unwrap().is_whole());
        let t = topo(&g, "gens=[2]");
        assert_eq!(&lat.greatest_same_family(&t).unwrap(), t.s());
        assert_eq!(lat.minimal_same_family(&t).unwrap(), vec![t.s().clone()]);
        assert_eq!(lat.minimal_same_family(&bohr).unwrap(), vec![bohr.s().clone()]);
        let anti = PrecompactTopology::anti_discrete(&g).unwrap();
        assert_eq!(lat.minimal_same_family(&anti).unwrap(), vec![anti.s().clone()]);

        let (g, lat) = setup("Z(2)xZ(2)");
        let t = topo(&g, "gens=[1,1]");
        assert_eq!(&lat.greatest_same_family(&t).unwrap(), t.s());
    }

    #[test]
    fn sc_and_total_density() {
        let (g, lat) = setup("Z(8)");
        let bohr = PrecompactTopology::bohr(&g).unwrap();
        assert!(lat.sc_verdict(&bohr).unwrap().holds);
        let t = topo(&g, "gens=[2]");
        let v = lat.sc_verdict(&t).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Subgroup(Subgroup::trivial(&g))));
        assert_eq!(t.closure(&Subgroup::trivial(&g)).unwrap(), sub(&g, "gens=[4]"));

        let (g, lat) = setup("Z(4)");
        let v = lat.totally_dense_verdict(&sub(&g.dual(), "gens=[2]")).unwrap();
        assert_eq!(v.witness, Some(Witness::DualSubgroup(Subgroup::whole(&g.dual()))));
        assert!(!lat.totally_dense_verdict(&Subgroup::trivial(&g.dual())).unwrap().holds);

        let (t, lat) = setup("Z(1)");
        let any = PrecompactTopology::anti_discrete(&t).unwrap();
        assert!(lat.sc_verdict(&any).unwrap().holds);
    }

    #[test]
    fn simplicity_examples() {
        let (g, lat) = setup("Z(4)");
        assert!(lat.simple_verdict(&PrecompactTopology::anti_discrete(&g).unwrap()).unwrap().holds);
        let v = lat.simple_verdict(&PrecompactTopology::bohr(&g).unwrap()).unwrap();
        assert_eq!(v.witness, Some(Witness::Subgroup(sub(&g, "gens=[2]"))));
        let (g, lat) = setup("Z(5)");
        assert!(lat.simple_verdict(&PrecompactTopology::bohr(&g).unwrap()).unwrap().holds);
    }

    #[test]
    fn essential_examples() {
        let (g, lat) = setup("Z(4)");
        let e = lat.essential_verdict(&PrecompactTopology::bohr(&g).unwrap()).unwrap();
        assert!(e.essential.holds && e.equivalence_holds);
        let e = lat.essential_verdict(&PrecompactTopology::anti_discrete(&g).unwrap()).unwrap();
        assert!(!e.essential.holds && e.equivalence_holds);
        assert_eq!(e.proper_dense_subgroup, Some(Subgroup::trivial(&g)));
        let e = lat.essential_verdict(&topo(&g, "gens=[2]")).unwrap();
        assert!(e.essential.holds && e.equivalence_holds);
    }

    #[test]
    fn closing_family_examples() {
        let g = parse_group("Z(4)").unwrap();
        let t = topology_closing_family(&g, &[sub(&g, "gens=[2]")]).unwrap();
        assert_eq!(t.s(), &sub(&g.dual(), "gens=[2]"));
        let t = topology_closing_family(&g, &[Subgroup::whole(&g)]).unwrap();
        assert!(t.s().is_trivial());
        let v4 = parse_group("Z(2)xZ(2)").unwrap();
        let fam = [sub(&v4, "gens=[1,0]"), sub(&v4, "gens=[0,1]")];
        let t = topology_closing_family(&v4, &fam).unwrap();
        assert!(t.s().is_whole());
        for h in &fam {
            assert!(t.is_closed(h).unwrap());
        }
    }

    #[test]
    fn mismatched_groups_are_rejected() {
        let g = parse_group("Z(4)").unwrap();
        assert!(matches!(
            PrecompactTopology::new(&g, &Subgroup::whole(&g)),
            Err(Error::GroupMismatch(_))
        ));
        let t = PrecompactTopology::bohr(&g).unwrap();
        let other = parse_group("Z(2)").unwrap();
        assert!(matches!(t.closure(&Subgroup::whole(&other)), Err(Error::GroupMismatch(_))));
    }
}
