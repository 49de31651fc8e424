use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use super::lattice::{self, Row};
use super::{Element, FiniteAbelianGroup};
use crate::error::{Error, Result};

/// A subgroup in canonical form.
///
/// The canonical form is the Hermite basis of the preimage lattice in `ℤ^k`,
/// so two generating sets of the same subgroup always produce equal values.
/// Ordering is by `(order, sorted element list)`.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteAbelianGroup,
    basis: Vec<Row>,
    order: u64,
    elements: OnceLock<Vec<Element>>,
}

impl Subgroup {
    /// The canonical form of `⟨gens⟩`.
    pub fn generated(parent: &FiniteAbelianGroup, gens: &[Element]) -> Result<Self> {
        for g in gens {
            parent.check_element(g)?;
        }
        let rows: Vec<Row> = gens
            .iter()
            .map(|g| g.coords().iter().map(|&x| x as i128).collect())
            .collect();
        Ok(Self::from_rows(parent, &rows))
    }

    /// Canonicalizes the subgroup spanned by arbitrary integer rows taken mod the factors.
    pub(crate) fn from_rows(parent: &FiniteAbelianGroup, rows: &[Row]) -> Self {
        let moduli: Vec<i128> = parent.factors().iter().map(|&d| d as i128).collect();
        let basis = lattice::canonical_basis(rows, &moduli);
        let index: u64 = basis.iter().enumerate().map(|(i, r)| r[i] as u64).product();
        Subgroup {
            parent: parent.clone(),
            order: parent.order() / index,
            basis,
            elements: OnceLock::new(),
        }
    }

    pub fn trivial(parent: &FiniteAbelianGroup) -> Self {
        Self::from_rows(parent, &[])
    }

    pub fn whole(parent: &FiniteAbelianGroup) -> Self {
        let k = parent.rank();
        let rows: Vec<Row> = (0..k)
            .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
            .collect();
        Self::from_rows(parent, &rows)
    }

    pub fn parent(&self) -> &FiniteAbelianGroup {
        &self.parent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn index(&self) -> u64 {
        self.parent.order() / self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.order()
    }

    /// The canonical generators: nonzero basis rows reduced mod the factors.
    pub fn generators(&self) -> Vec<Element> {
        self.basis
            .iter()
            .map(|row| {
                Element(
                    row.iter()
                        .zip(self.parent.factors())
                        .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
                        .collect(),
                )
            })
            .filter(|e| !e.is_zero())
            .collect()
    }

    /// The same subgroup viewed inside an isomorphic parent (e.g. flipping the side).
    pub(crate) fn retag(&self, parent: &FiniteAbelianGroup) -> Subgroup {
        debug_assert!(parent.is_isomorphic(&self.parent));
        Subgroup {
            parent: parent.clone(),
            basis: self.basis.clone(),
            order: self.order,
            elements: self.elements.clone(),
        }
    }

    fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::GroupMismatch(format!(
                "subgroups of {}{} and {}{}",
                side_tag(&self.parent),
                self.parent,
                side_tag(&other.parent),
                other.parent
            )));
        }
        Ok(())
    }

    pub fn contains(&self, x: &Element) -> Result<bool> {
        self.parent.check_element(x).map_err(|e| match e {
            Error::MalformedElement(m) => Error::GroupMismatch(m),
            other => other,
        })?;
        Ok(self.contains_unchecked(x))
    }

    pub(crate) fn contains_unchecked(&self, x: &Element) -> bool {
        let v: Row = x.coords().iter().map(|&c| c as i128).collect();
        lattice::coordinates(&self.basis, &v).is_some()
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> Result<bool> {
        self.same_parent(other)?;
        Ok(other
            .basis
            .iter()
            .all(|row| lattice::coordinates(&self.basis, row).is_some()))
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let rows: Vec<Row> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_rows(&self.parent, &rows))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let k = self.parent.rank();
        // Rows (b, b) for b in L1 and (b, 0) for b in L2; combinations with a
        // vanishing left block carry L1 ∩ L2 in the right block.
        let mut rows: Vec<Row> = Vec::with_capacity(2 * k);
        for b in &self.basis {
            rows.push(b.iter().chain(b).copied().collect());
        }
        for b in &other.basis {
            rows.push(b.iter().copied().chain(std::iter::repeat(0).take(k)).collect());
        }
        let (hnf, pivots) = lattice::hermite(rows, 2 * k);
        let meet: Vec<Row> = hnf
            .into_iter()
            .zip(pivots)
            .filter(|&(_, c)| c >= k)
            .map(|(r, _)| r[k..].to_vec())
            .collect();
        Ok(Self::from_rows(&self.parent, &meet))
    }

    /// Elements sorted lexicographically; computed once and cached.
    pub fn elements(&self) -> &[Element] {
        self.elements.get_or_init(|| {
            let factors = self.parent.factors();
            let k = factors.len();
            let counts: Vec<u64> = (0..k)
                .map(|i| factors[i] / self.basis[i][i] as u64)
                .collect();
            let mut out = Vec::with_capacity(self.order as usize);
            let mut c = vec![0u64; k];
            loop {
                let mut v = vec![0i128; k];
                for (i, &ci) in c.iter().enumerate() {
                    if ci != 0 {
                        for (vj, bj) in v.iter_mut().zip(&self.basis[i]) {
                            *vj += ci as i128 * bj;
                        }
                    }
                }
                out.push(Element(
                    v.iter()
                        .zip(factors)
                        .map(|(&x, &d)| x.rem_euclid(d as i128) as u64)
                        .collect(),
                ));
                // odometer
                let mut i = k;
                loop {
                    if i == 0 {
                        out.sort();
                        return out;
                    }
                    i -= 1;
                    c[i] += 1;
                    if c[i] < counts[i] {
                        break;
                    }
                    c[i] = 0;
                }
            }
        })
    }

    /// Invariant factors of the subgroup as an abstract group.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let trivial = Subgroup::trivial(&self.parent);
        relative_smith(self, &trivial).diagonal
    }

    /// `self / inner` together with its projection map. `inner` must lie in `self`.
    pub fn quotient_by(&self, inner: &Subgroup) -> Result<QuotientGroup> {
        if !self.contains_subgroup(inner)? {
            return Err(Error::Precondition(format!(
                "{inner} is not contained in {self}"
            )));
        }
        let rel = relative_smith(self, inner);
        let group = FiniteAbelianGroup::new(rel.diagonal.clone())
            .expect("Smith diagonal is a divisibility chain");
        Ok(QuotientGroup {
            group,
            outer: self.clone(),
            transform: rel.transform,
            kept: rel.kept,
        })
    }
}

struct Relative {
    diagonal: Vec<u64>,
    transform: Vec<Row>,
    kept: Vec<(usize, i128)>,
}

/// Smith form of `inner`'s lattice written in coordinates of `outer`'s lattice.
fn relative_smith(outer: &Subgroup, inner: &Subgroup) -> Relative {
    let k = outer.parent.rank();
    let coeffs: Vec<Row> = inner
        .basis
        .iter()
        .map(|row| lattice::coordinates(&outer.basis, row).expect("inner lies in outer"))
        .collect();
    let smith = lattice::smith(coeffs, k);
    let kept: Vec<(usize, i128)> = smith
        .diagonal
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .map(|(i, &s)| (i, s))
        .collect();
    Relative {
        diagonal: kept.iter().map(|&(_, s)| s as u64).collect(),
        transform: smith.right,
        kept,
    }
}

/// A quotient `outer / inner` in invariant-factor form with its projection.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    group: FiniteAbelianGroup,
    outer: Subgroup,
    transform: Vec<Row>,
    kept: Vec<(usize, i128)>,
}

impl QuotientGroup {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Image of an element of the outer subgroup in the quotient.
    pub fn project(&self, x: &Element) -> Result<Element> {
        self.outer.parent.check_element(x)?;
        let v: Row = x.coords().iter().map(|&c| c as i128).collect();
        let y = lattice::coordinates(&self.outer.basis, &v).ok_or_else(|| {
            Error::Precondition(format!("{x} is not in {}", self.outer))
        })?;
        let coords = self
            .kept
            .iter()
            .map(|&(j, s)| {
                let z: i128 = y.iter().zip(&self.transform).map(|(yi, row)| yi * row[j]).sum();
                z.rem_euclid(s) as u64
            })
            .collect();
        Ok(Element(coords))
    }
}

/// `G / H` with its projection map.
pub fn quotient_group(group: &FiniteAbelianGroup, h: &Subgroup) -> Result<QuotientGroup> {
    if h.parent() != group {
        return Err(Error::GroupMismatch(format!(
            "subgroup of {} used with {}",
            h.parent(),
            group
        )));
    }
    Subgroup::whole(group).quotient_by(h)
}

fn side_tag(g: &FiniteAbelianGroup) -> &'static str {
    if g.is_dual() {
        "dual "
    } else {
        ""
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.basis == other.basis
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.basis.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parent
            .cmp(&other.parent)
            .then(self.order.cmp(&other.order))
            .then_with(|| {
                if self.basis == other.basis {
                    Ordering::Equal
                } else {
                    self.elements().cmp(other.elements())
                }
            })
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({}{} ≥ {self}, order {})", side_tag(&self.parent), self.parent, self.order)
    }
}

/// Canonical spec form, e.g. `gens=[1,0],[0,2]`; dual-side subgroups carry a `dual:` prefix.
impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parent.is_dual() {
            write!(f, "dual:")?;
        }
        write!(f, "gens=")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
