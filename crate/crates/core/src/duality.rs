//! Characters, the evaluation pairing and the annihilator calculus.
//!
//! `Ĝ` has the same invariant factors as `G`; the coefficient vector `c`
//! stands for the character `x ↦ Σ c_i x_i / d_i mod 1`. The pairing is
//! symmetric in `(c, x)`, so one routine computes annihilators on both sides.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::group::lattice::{self, Row};
use crate::group::{quotient_group, Element, FiniteAbelianGroup, Subgroup};
use crate::torus::TorusValue;

/// A subgroup of a dual group `Ĝ`; it stands for the topology `τ_S` on `G`.
pub type DualSubgroup = Subgroup;

/// The character group, flagged as the opposite side. `dual_group(dual_group(G)) = G`.
pub fn dual_group(group: &FiniteAbelianGroup) -> FiniteAbelianGroup {
    group.dual()
}

/// A homomorphism `G → ℚ/ℤ` in coefficient form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    group: FiniteAbelianGroup,
    coeffs: Element,
}

impl Character {
    pub fn new(group: &FiniteAbelianGroup, coeffs: Vec<u64>) -> Result<Self> {
        primal(group)?;
        Ok(Character {
            group: group.clone(),
            coeffs: group.dual().element(coeffs)?,
        })
    }

    /// The character named by an element of `Ĝ`.
    pub fn from_dual_element(dual: &FiniteAbelianGroup, phi: &Element) -> Result<Self> {
        if !dual.is_dual() {
            return Err(Error::GroupMismatch(format!("{dual} is not a dual group")));
        }
        Character::new(&dual.dual(), phi.coords().to_vec())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[u64] {
        self.coeffs.coords()
    }

    /// The same character as an element of `Ĝ`.
    pub fn as_dual_element(&self) -> &Element {
        &self.coeffs
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn evaluate(&self, x: &Element) -> Result<TorusValue> {
        evaluate(self, x)
    }

    /// Whether the character has trivial kernel on `G`.
    pub fn is_injective(&self) -> bool {
        let span = Subgroup::generated(&self.group.dual(), std::slice::from_ref(&self.coeffs))
            .expect("coefficients validated on construction");
        annihilate(&Subgroup::whole(&self.group), &span).is_trivial()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{}", self.coeffs)
    }
}

fn primal(group: &FiniteAbelianGroup) -> Result<()> {
    if group.is_dual() {
        return Err(Error::GroupMismatch(format!(
            "expected a primal group, got the dual group {group}"
        )));
    }
    Ok(())
}

/// `Σ c_i x_i (e / d_i) mod e` where `e` is the exponent: the pairing value times `e`.
pub(crate) fn pairing_numerator(factors: &[u64], c: &[u64], x: &[u64]) -> u64 {
    let e = factors.last().copied().unwrap_or(1) as u128;
    let mut acc = 0u128;
    for ((&ci, &xi), &d) in c.iter().zip(x).zip(factors) {
        acc = (acc + (ci as u128 * xi as u128 % d as u128) * (e / d as u128)) % e;
    }
    acc as u64
}

/// `chi(x) = Σ c_i x_i / d_i mod 1`.
pub fn evaluate(chi: &Character, x: &Element) -> Result<TorusValue> {
    chi.group.check_element(x).map_err(|e| match e {
        Error::MalformedElement(m) => Error::GroupMismatch(m),
        other => other,
    })?;
    let f = chi.group.factors();
    Ok(TorusValue::new(
        pairing_numerator(f, chi.coeffs(), x.coords()),
        chi.group.exponent(),
    ))
}

/// Which code path computes an annihilator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnnihilatorMethod {
    /// Scan when the searched subgroup has at most 64 elements, else congruence.
    Auto,
    /// Solve the linear congruence system given by the constraint generators.
    Congruence,
    /// Test every element of the searched subgroup.
    Scan,
}

const SCAN_LIMIT: u64 = 64;

fn check_pair(dual_side: &Subgroup, primal_side: &Subgroup) -> Result<()> {
    let d = dual_side.parent();
    let g = primal_side.parent();
    if !d.is_dual() || g.is_dual() || !d.is_isomorphic(g) {
        return Err(Error::GroupMismatch(format!(
            "expected a subgroup of a dual group and a subgroup of its primal group, got {}{d} and {}{g}",
            if d.is_dual() { "dual " } else { "" },
            if g.is_dual() { "dual " } else { "" },
        )));
    }
    Ok(())
}

/// `A(S, H) = {φ ∈ S : φ[H] = 0}`.
pub fn annihilator_in_dual(s: &DualSubgroup, h: &Subgroup) -> Result<DualSubgroup> {
    annihilator_in_dual_with(s, h, AnnihilatorMethod::Auto)
}

pub fn annihilator_in_dual_with(
    s: &DualSubgroup,
    h: &Subgroup,
    method: AnnihilatorMethod,
) -> Result<DualSubgroup> {
    check_pair(s, h)?;
    Ok(annihilate_with(s, h, method))
}

/// `A(H, S) = {g ∈ H : φ(g) = 0 for all φ ∈ S}`; with `H = G` this is the kernel of `τ_S`.
pub fn annihilator_in_group(h: &Subgroup, s: &DualSubgroup) -> Result<Subgroup> {
    annihilator_in_group_with(h, s, AnnihilatorMethod::Auto)
}

pub fn annihilator_in_group_with(
    h: &Subgroup,
    s: &DualSubgroup,
    method: AnnihilatorMethod,
) -> Result<Subgroup> {
    check_pair(s, h)?;
    Ok(annihilate_with(h, s, method))
}

pub(crate) fn annihilate(target: &Subgroup, constraints: &Subgroup) -> Subgroup {
    annihilate_with(target, constraints, AnnihilatorMethod::Auto)
}

/// Elements of `target` pairing to zero with every element of `constraints`.
fn annihilate_with(target: &Subgroup, constraints: &Subgroup, method: AnnihilatorMethod) -> Subgroup {
    let scan = match method {
        AnnihilatorMethod::Auto => target.order() <= SCAN_LIMIT,
        AnnihilatorMethod::Congruence => false,
        AnnihilatorMethod::Scan => true,
    };
    if scan {
        annihilate_by_scan(target, constraints)
    } else {
        annihilate_by_congruence(target, constraints)
    }
}

fn annihilate_by_scan(target: &Subgroup, constraints: &Subgroup) -> Subgroup {
    let factors = target.parent().factors();
    let gens = constraints.generators();
    let kept: Vec<Element> = target
        .elements()
        .iter()
        .filter(|t| {
            gens.iter()
                .all(|w| pairing_numerator(factors, w.coords(), t.coords()) == 0)
        })
        .cloned()
        .collect();
    Subgroup::generated(target.parent(), &kept).expect("elements of the parent")
}

fn annihilate_by_congruence(target: &Subgroup, constraints: &Subgroup) -> Subgroup {
    let parent = target.parent();
    let factors = parent.factors();
    let k = factors.len();
    let e = parent.exponent() as i128;
    let gens = constraints.generators();
    let m = gens.len();
    // Solutions t of Σ_i t_i w_i (e/d_i) ≡ 0 (mod e) for each generator w:
    // rows [W_i | e_i] and [e·e_j | 0]; rows whose pivot lies past the first
    // m columns span the solution lattice.
    let mut rows: Vec<Row> = Vec::with_capacity(k + m);
    for (i, &d) in factors.iter().enumerate() {
        let mut r = vec![0i128; m + k];
        for (j, w) in gens.iter().enumerate() {
            r[j] = w.coords()[i] as i128 * (e / d as i128);
        }
        r[m + i] = 1;
        rows.push(r);
    }
    for j in 0..m {
        let mut r = vec![0i128; m + k];
        r[j] = e;
        rows.push(r);
    }
    let (hnf, pivots) = lattice::hermite(rows, m + k);
    let solutions: Vec<Row> = hnf
        .into_iter()
        .zip(pivots)
        .filter(|&(_, c)| c >= m)
        .map(|(r, _)| r[m..].to_vec())
        .collect();
    let full = Subgroup::from_rows(parent, &solutions);
    full.intersection(target).expect("same parent")
}

/// One named check of [`check_duality_invariants`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub checks: Vec<DualityCheck>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DualityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Per prime, the sorted exponents of the elementary divisors.
fn elementary_divisors(factors: &[u64]) -> BTreeMap<u64, Vec<u32>> {
    let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in factors {
        for (p, e) in factorize(d) {
            out.entry(p).or_default().push(e);
        }
    }
    for v in out.values_mut() {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    out
}

/// Whether a finite abelian group with invariant factors `a` embeds in one with factors `b`.
pub(crate) fn embeds(a: &[u64], b: &[u64]) -> bool {
    let ea = elementary_divisors(a);
    let eb = elementary_divisors(b);
    ea.iter().all(|(p, xs)| {
        let ys = eb.get(p).map(Vec::as_slice).unwrap_or(&[]);
        xs.len() <= ys.len() && xs.iter().zip(ys).all(|(x, y)| x <= y)
    })
}

fn show(f: &[u64]) -> String {
    FiniteAbelianGroup::new(f.to_vec())
        .map(|g| g.to_string())
        .unwrap_or_else(|_| format!("{f:?}"))
}

/// Checks the finite consequences of the duality between `H ≤ G` and `S ≤ Ĝ`:
/// (i) `A(Ĝ,H) ≅ G/H`, (ii) `Ĝ/A(Ĝ,H) ≅ H`, (iii) `S/A(S,H)` embeds in `Ĥ`.
pub fn check_duality_invariants(
    group: &FiniteAbelianGroup,
    h: &Subgroup,
    s: &DualSubgroup,
) -> Result<DualityReport> {
    primal(group)?;
    if h.parent() != group {
        return Err(Error::GroupMismatch(format!("H is not a subgroup of {group}")));
    }
    check_pair(s, h)?;
    let dual = group.dual();
    let ann = annihilate(&Subgroup::whole(&dual), h);
    let ann_s = annihilate(s, h);

    let a = ann.invariant_factors();
    let gh = quotient_group(group, h)?.group().factors().to_vec();
    let q = quotient_group(&dual, &ann)?.group().factors().to_vec();
    let hf = h.invariant_factors();
    let sq = s.quotient_by(&ann_s)?.group().factors().to_vec();

    Ok(DualityReport {
        checks: vec![
            DualityCheck {
                name: "annihilator_is_quotient",
                holds: a == gh,
                detail: format!("A(Ĝ,H) ≅ {}, G/H ≅ {}", show(&a), show(&gh)),
            },
            DualityCheck {
                name: "dual_quotient_is_subgroup",
                holds: q == hf,
                detail: format!("Ĝ/A(Ĝ,H) ≅ {}, H ≅ {}", show(&q), show(&hf)),
            },
            DualityCheck {
                name: "restriction_embeds",
                holds: embeds(&sq, &hf),
                detail: format!("S/A(S,H) ≅ {}, Ĥ ≅ {}", show(&sq), show(&hf)),
            },
        ],
    })
}

/// `H = A(G, A(Ĝ, H))`.
pub fn reflexivity_check(group: &FiniteAbelianGroup, h: &Subgroup) -> Result<bool> {
    primal(group)?;
    if h.parent() != group {
        return Err(Error::GroupMismatch(format!("H is not a subgroup of {group}")));
    }
    let ann = annihilate(&Subgroup::whole(&group.dual()), h);
    Ok(annihilate(&Subgroup::whole(group), &ann) == *h)
}
