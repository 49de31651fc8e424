use precompact::duality::{
    annihilator_in_dual, annihilator_in_dual_with, annihilator_in_group, check_duality_invariants, dual_group,
    evaluate, reflexivity_check, AnnihilatorMethod, Character,
};
use precompact::group::{enumerate_subgroups, groups_up_to, parse_element, parse_group, parse_subgroup};
use precompact::{FiniteAbelianGroup, Subgroup, TorusValue};

fn grp(s: &str) -> FiniteAbelianGroup {
    parse_group(s).unwrap()
}

#[test]
fn dual_groups() {
    for s in ["Z(4)", "Z(2)xZ(4)"] {
        let g = grp(s);
        assert!(dual_group(&g).is_isomorphic(&g));
        assert!(dual_group(&g).is_dual());
    }
    assert!(dual_group(&FiniteAbelianGroup::trivial()).is_trivial());
}

#[test]
fn character_values() {
    let z4 = grp("Z(4)");
    let chi = Character::new(&z4, vec![1]).unwrap();
    assert_eq!(evaluate(&chi, &parse_element(&z4, "[2]").unwrap()).unwrap(), TorusValue::new(1, 2));
    let g = grp("Z(2)xZ(4)");
    let zero = Character::new(&g, vec![0, 0]).unwrap();
    let chi = Character::new(&g, vec![1, 1]).unwrap();
    for x in g.elements() {
        assert!(evaluate(&zero, &x).unwrap().is_zero());
    }
    assert!(evaluate(&chi, &parse_element(&g, "[1,2]").unwrap()).unwrap().is_zero());
}

#[test]
fn annihilators() {
    let z4 = grp("Z(4)");
    let dual = z4.dual();
    let two = parse_subgroup(&z4, "gens=[2]").unwrap();
    let dual_two = parse_subgroup(&dual, "gens=[2]").unwrap();
    assert_eq!(annihilator_in_dual(&Subgroup::whole(&dual), &two).unwrap(), dual_two);
    assert_eq!(annihilator_in_dual(&dual_two, &two).unwrap(), dual_two);
    assert_eq!(annihilator_in_group(&Subgroup::whole(&z4), &dual_two).unwrap(), two);
    assert!(annihilator_in_group(&Subgroup::whole(&z4), &Subgroup::whole(&dual)).unwrap().is_trivial());
    assert!(annihilator_in_group(&Subgroup::whole(&z4), &Subgroup::trivial(&dual)).unwrap().is_whole());
    for s in enumerate_subgroups(&dual, 256).unwrap() {
        assert!(annihilator_in_dual(&s, &Subgroup::whole(&z4)).unwrap().is_trivial());
    }
}

#[test]
fn both_annihilator_methods_agree() {
    for g in groups_up_to(24) {
        let subs = enumerate_subgroups(&g, 256).unwrap();
        let duals = enumerate_subgroups(&g.dual(), 256).unwrap();
        for s in &duals {
            for h in &subs {
                let a = annihilator_in_dual_with(s, h, AnnihilatorMethod::Congruence).unwrap();
                let b = annihilator_in_dual_with(s, h, AnnihilatorMethod::Scan).unwrap();
                assert_eq!(a, b, "{g} {s} {h}");
            }
        }
    }
}

#[test]
fn duality_invariants_examples() {
    let z4 = grp("Z(4)");
    let all = Subgroup::whole(&z4.dual());
    let two = parse_subgroup(&z4, "gens=[2]").unwrap();
    assert!(check_duality_invariants(&z4, &two, &all).unwrap().passed());
    assert!(check_duality_invariants(&z4, &Subgroup::whole(&z4), &all).unwrap().passed());
    let v = grp("Z(2)xZ(2)");
    let d = parse_subgroup(&v, "gens=[1,1]").unwrap();
    assert!(check_duality_invariants(&v, &d, &Subgroup::whole(&v.dual())).unwrap().passed());
    assert_eq!(annihilator_in_dual(&Subgroup::whole(&v.dual()), &d).unwrap().order(), 2);
}

#[test]
fn reflexivity_examples() {
    let z4 = grp("Z(4)");
    assert!(reflexivity_check(&z4, &parse_subgroup(&z4, "gens=[2]").unwrap()).unwrap());
    assert!(reflexivity_check(&z4, &Subgroup::trivial(&z4)).unwrap());
    let g = grp("Z(2)xZ(4)");
    assert!(reflexivity_check(&g, &parse_subgroup(&g, "gens=[0,2]").unwrap()).unwrap());
    assert!(reflexivity_check(&g.dual(), &Subgroup::trivial(&g.dual())).is_err());
}
