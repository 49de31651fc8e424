use precompact::group::{
    enumerate_subgroups, groups_of_order, parse_element, parse_group, parse_subgroup, quotient_group,
};
use precompact::{FiniteAbelianGroup, Subgroup};

fn grp(s: &str) -> FiniteAbelianGroup {
    parse_group(s).unwrap()
}

fn sub(g: &FiniteAbelianGroup, s: &str) -> Subgroup {
    parse_subgroup(g, s).unwrap()
}

fn elems(h: &Subgroup) -> Vec<String> {
    h.elements().iter().map(ToString::to_string).collect()
}

#[test]
fn spans() {
    let z4 = grp("Z(4)");
    let two = Subgroup::generated(&z4, &[parse_element(&z4, "[2]").unwrap()]).unwrap();
    assert_eq!(elems(&two), ["[0]", "[2]"]);
    assert_eq!(Subgroup::generated(&z4, &[]).unwrap().order(), 1);
    let v = grp("Z(2)xZ(2)");
    let d = sub(&v, "gens=[1,1]");
    assert_eq!(elems(&d), ["[0,0]", "[1,1]"]);
}

#[test]
fn membership() {
    let z4 = grp("Z(4)");
    let two = sub(&z4, "gens=[2]");
    assert!(two.contains(&parse_element(&z4, "[2]").unwrap()).unwrap());
    assert!(!two.contains(&parse_element(&z4, "[1]").unwrap()).unwrap());
    let v = grp("Z(2)xZ(2)");
    assert!(!sub(&v, "gens=[1,1]").contains(&parse_element(&v, "[1,0]").unwrap()).unwrap());
}

#[test]
fn sums_and_intersections() {
    let z4 = grp("Z(4)");
    let two = sub(&z4, "gens=[2]");
    assert_eq!(two.sum(&two).unwrap(), two);
    assert_eq!(two.intersection(&two).unwrap(), two);
    let v = grp("Z(2)xZ(2)");
    let (a, b, d) = (sub(&v, "gens=[1,0]"), sub(&v, "gens=[0,1]"), sub(&v, "gens=[1,1]"));
    assert!(a.sum(&b).unwrap().is_whole());
    assert!(d.sum(&a).unwrap().is_whole());
    assert!(a.intersection(&b).unwrap().is_trivial());
    let z8 = grp("Z(8)");
    let meet = sub(&z8, "gens=[2]").intersection(&sub(&z8, "gens=[1]")).unwrap();
    assert_eq!(elems(&meet), ["[0]", "[2]", "[4]", "[6]"]);
}

#[test]
fn quotients() {
    let z4 = grp("Z(4)");
    assert_eq!(quotient_group(&z4, &sub(&z4, "gens=[2]")).unwrap().group().to_string(), "Z(2)");
    assert_eq!(quotient_group(&z4, &Subgroup::trivial(&z4)).unwrap().group().to_string(), "Z(4)");
    let g = grp("Z(2)xZ(4)");
    assert_eq!(quotient_group(&g, &sub(&g, "gens=[1,2]")).unwrap().group().to_string(), "Z(4)");
}

#[test]
fn subgroup_counts() {
    let count = |s: &str| enumerate_subgroups(&grp(s), 256).unwrap().len();
    assert_eq!(count("Z(4)"), 3);
    assert_eq!(count("Z(2)xZ(2)"), 5);
    for p in [2, 3, 5, 7, 11, 13, 31] {
        assert_eq!(count(&format!("Z({p})")), 2);
    }
    assert_eq!(count("Z(2)xZ(2)xZ(2)"), 16);
    assert_eq!(groups_of_order(16).len(), 5);
}

#[test]
fn invariants() {
    let g = grp("Z(4)xZ(2)");
    assert_eq!(g.to_string(), "Z(2)xZ(4)");
    let inv = g.invariants();
    assert_eq!((inv.order, inv.exponent), (8, 4));
    assert_eq!(inv.p_ranks.get(&2), Some(&2));
    let t = FiniteAbelianGroup::trivial().invariants();
    assert_eq!((t.order, t.exponent, t.p_ranks.len()), (1, 1, 0));
    let z6 = grp("Z(6)").invariants();
    assert_eq!((z6.p_ranks[&2], z6.p_ranks[&3]), (1, 1));
}

#[test]
fn malformed_specs() {
    assert!(parse_group("Z(0)").is_err());
    assert!(parse_group("Z(4)x").is_err());
    let z4 = grp("Z(4)");
    assert!(parse_element(&z4, "[4]").is_err());
    assert!(parse_element(&z4, "[1,0]").is_err());
    assert!(parse_subgroup(&z4, "dual:all").is_err());
    assert!(parse_subgroup(&z4.dual(), "dual:all").unwrap().is_whole());
}
