use std::collections::HashSet;

use super::{isomorphism_classes, FiniteAbelianGroup, Subgroup};
use crate::error::{Error, Result};

/// Largest group order accepted by [`enumerate_subgroups`] unless overridden.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 256;

/// Every subgroup of `group`, without duplicates, in canonical order.
///
/// Subgroups are built as sums of cyclic subgroups. Fails with a capacity
/// error when the group order exceeds `bound`.
pub fn enumerate_subgroups(group: &FiniteAbelianGroup, bound: u64) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::Capacity {
            order: group.order(),
            bound,
        });
    }
    let mut seen = HashSet::new();
    let mut cyclic = Vec::new();
    for x in group.elements() {
        let h = Subgroup::generated(group, std::slice::from_ref(&x))?;
        if seen.insert(h.clone()) {
            cyclic.push(h);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclic {
                if h.contains_subgroup(c)? {
                    continue;
                }
                let s = h.sum(c)?;
                if seen.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort();
    Ok(all)
}

/// One group per isomorphism class of order `n`, in canonical order.
pub fn groups_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
    if n == 0 {
        return Vec::new();
    }
    isomorphism_classes(n)
}

/// One group per isomorphism class of every order `1..=max_order`, by order.
pub fn groups_up_to(max_order: u64) -> Vec<FiniteAbelianGroup> {
    (1..=max_order).flat_map(groups_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(f: &[u64]) -> usize {
        let g = FiniteAbelianGroup::new(f.to_vec()).unwrap();
        enumerate_subgroups(&g, DEFAULT_ENUMERATION_BOUND).unwrap().len()
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(count(&[]), 1);
        assert_eq!(count(&[4]), 3);
        assert_eq!(count(&[2, 2]), 5);
        assert_eq!(count(&[7]), 2);
        assert_eq!(count(&[12]), 6);
        assert_eq!(count(&[2, 2, 2]), 16);
        assert_eq!(count(&[2, 4]), 8);
        assert_eq!(count(&[3, 3]), 6);
        assert_eq!(count(&[2, 2, 2, 2, 2, 2]), 2825);
    }

    #[test]
    fn order_is_canonical() {
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let subs = enumerate_subgroups(&g, DEFAULT_ENUMERATION_BOUND).unwrap();
        let orders: Vec<u64> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 4]);
        assert!(subs[0].is_trivial() && subs[2].is_whole());
    }

    #[test]
    fn capacity_error_names_the_bound() {
        let g = FiniteAbelianGroup::new(vec![512]).unwrap();
        let err = enumerate_subgroups(&g, DEFAULT_ENUMERATION_BOUND).unwrap_err();
        assert_eq!(err, Error::Capacity { order: 512, bound: 256 });
        assert!(err.to_string().contains("256"));
    }

    #[test]
    fn corpus_sizes() {
        assert_eq!(groups_of_order(1), vec![FiniteAbelianGroup::trivial()]);
        // number of abelian groups of order n for n = 1..=16
        let counts: Vec<usize> = (1..=16).map(|n| groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(groups_up_to(36).len(), 62);
    }
}
