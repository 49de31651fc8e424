use precompact::zee::{
    big_m_s, c_set_contains, classify_int, closure_int, is_closed_int, is_dense_int, lcm_closure, lcm_set, m_s,
    IntSubgroup, SupernaturalNumber, TorusSubgroupDesc,
};

fn desc(s: &str) -> TorusSubgroupDesc {
    s.parse().unwrap()
}

fn divisors_up_to(sn: &SupernaturalNumber, n: u64) -> Vec<u64> {
    (1..=n).filter(|&d| sn.divides(d)).collect()
}

#[test]
fn lcms() {
    assert_eq!(lcm_set(&[4, 6]).unwrap(), 12);
    assert_eq!(lcm_set(&[17]).unwrap(), 17);
    assert_eq!(lcm_set(&[4, 6, 10]).unwrap(), 60);
    assert!(lcm_set(&[]).is_err());
    assert!(lcm_set(&[3, 0]).is_err());
    assert!(lcm_set(&[u64::MAX, u64::MAX - 1]).is_err());
}

#[test]
fn lcm_closures() {
    let c = lcm_closure(&[4, 6]).unwrap();
    assert_eq!(c.to_string(), "2^2*3");
    assert_eq!(divisors_up_to(&c, 100), [1, 2, 3, 4, 6, 12]);
    assert!(lcm_closure(&[1]).unwrap().is_one());
    assert_eq!(lcm_closure(&[8, 12, 18]).unwrap().to_string(), "2^3*3^2");
}

#[test]
fn c_set() {
    let s = desc("tors=2^2*3,free=0");
    assert!(c_set_contains(&s, 12).unwrap());
    assert!(!c_set_contains(&s, 8).unwrap());
    assert!(c_set_contains(&desc("tors=1,free=c"), 1).unwrap());
    assert!(c_set_contains(&s, 0).is_err());
}

#[test]
fn closures_of_kz() {
    let s = desc("tors=2^2*3,free=0");
    assert_eq!(closure_int(&s, IntSubgroup(8)).unwrap(), IntSubgroup(4));
    assert_eq!(closure_int(&desc("tors=2^inf,free=0"), IntSubgroup(12)).unwrap(), IntSubgroup(4));
    assert_eq!(closure_int(&s, IntSubgroup(12)).unwrap(), IntSubgroup(12));
    assert!(is_closed_int(&s, IntSubgroup(12)).unwrap());
    assert!(is_dense_int(&s, IntSubgroup(5)).unwrap());
    assert!(!is_dense_int(&s, IntSubgroup(10)).unwrap());
    for k in 1..200 {
        assert!(is_dense_int(&desc("tors=1,free=1"), IntSubgroup(k)).unwrap());
        assert!(is_closed_int(&desc("tors=all,free=0"), IntSubgroup(k)).unwrap());
    }
}

#[test]
fn closure_of_zero() {
    assert_eq!(closure_int(&desc("tors=12,free=0"), IntSubgroup(0)).unwrap(), IntSubgroup(12));
    assert_eq!(closure_int(&desc("tors=12,free=1"), IntSubgroup(0)).unwrap(), IntSubgroup(0));
    assert_eq!(closure_int(&desc("tors=2^inf,free=0"), IntSubgroup(0)).unwrap(), IntSubgroup(0));
    assert!(is_dense_int(&desc("tors=1,free=0"), IntSubgroup(0)).unwrap());
    assert!(!is_dense_int(&desc("tors=1,free=1"), IntSubgroup(0)).unwrap());
}

#[test]
fn small_and_large_subgroups() {
    let s = desc("tors=2^2*3,free=1");
    let m = m_s(&s);
    assert_eq!(m.to_string(), "tors=2^2*3,free=0");
    assert!(!m.is_hausdorff());
    assert_eq!(m_s(&desc("tors=2^inf,free=0")), desc("tors=2^inf,free=0"));
    assert_eq!(m_s(&desc("tors=1,free=2")), desc("tors=1,free=0"));
    assert_eq!(big_m_s(&desc("tors=2^2*3,free=0")).to_string(), "tors=2^2*3,free=c");
    assert_eq!(big_m_s(&desc("tors=all,free=0")).to_string(), "tors=all,free=c");
}

#[test]
fn classifications() {
    let c = classify_int(&desc("tors=1,free=1"));
    assert!(c.topologically_simple && c.hausdorff && !c.has_nontrivial_closed);
    assert!(classify_int(&desc("tors=all,free=0")).sc);
    let c = classify_int(&desc("tors=3^inf,free=0"));
    assert!(!c.sc && !c.topologically_simple && c.hausdorff);
    assert_eq!(c.family_descriptor.to_string(), "3^inf");
    assert!(!classify_int(&desc("tors=6,free=0")).hausdorff);
}
