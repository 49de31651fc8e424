//! Suites for the integer model, over fixed grids of descriptors.

use std::collections::HashMap;

use super::report::TheoremReport;
use crate::error::Result;
use crate::zee::{
    c_set_contains, classify_int, closure_int, is_closed_int, is_dense_int, lcm_closure, m_s, Exponent,
    FreeRank, IntSubgroup, SupernaturalNumber, TorusSubgroupDesc,
};

/// Primes carrying explicit exponents in the descriptor grid.
pub const GRID_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
/// Largest `k` for which `kℤ` is tested.
pub const GRID_MAX_K: u64 = 1000;
/// `C ⊆ {1..LCM_SET_MAX}` in the lcm-closure suite.
pub const LCM_SET_MAX: u64 = 60;
pub const LCM_SET_SIZE: usize = 5;
/// Divisor sets are compared on `{1..LCM_RANGE}`.
pub const LCM_RANGE: u64 = 3600;

const GRID_EXPONENTS: [Exponent; 5] = [
    Exponent::Finite(0),
    Exponent::Finite(1),
    Exponent::Finite(2),
    Exponent::Finite(3),
    Exponent::Infinite,
];

/// One grid point: an exponent per grid prime, plus the exponent of every other prime.
#[derive(Debug, Clone, Copy)]
pub struct GridPoint {
    pub exponents: [Exponent; 6],
    pub default_infinite: bool,
}

impl GridPoint {
    pub fn torsion(&self) -> SupernaturalNumber {
        SupernaturalNumber::from_exponents(GRID_PRIMES.into_iter().zip(self.exponents), self.default_infinite)
            .expect("grid primes are prime")
    }

    fn exponent_of(&self, p: u64) -> Exponent {
        match GRID_PRIMES.iter().position(|&q| q == p) {
            Some(i) => self.exponents[i],
            None if self.default_infinite => Exponent::Infinite,
            None => Exponent::Finite(0),
        }
    }
}

/// Every exponent choice over the grid primes, with and without an infinite default.
pub fn descriptor_grid() -> Vec<GridPoint> {
    let mut out = Vec::with_capacity(2 * 5usize.pow(6));
    for default_infinite in [false, true] {
        for code in 0..5usize.pow(6) {
            let mut c = code;
            let exponents = std::array::from_fn(|_| {
                let e = GRID_EXPONENTS[c % 5];
                c /= 5;
                e
            });
            out.push(GridPoint {
                exponents,
                default_infinite,
            });
        }
    }
    out
}

/// Smallest-prime-factor sieve on `0..=n`.
fn spf_table(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            for j in (i..=n).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    spf
}

/// `t ∈ C_S` read off the grid exponents directly.
fn in_c_table(point: &GridPoint, spf: &[u32]) -> Vec<bool> {
    (0..spf.len())
        .map(|t| {
            if t == 0 {
                return false;
            }
            let mut rest = t;
            while rest > 1 {
                let p = spf[rest] as usize;
                let mut e = 0;
                while rest % p == 0 {
                    rest /= p;
                    e += 1;
                }
                let ok = match point.exponent_of(p as u64) {
                    Exponent::Infinite => true,
                    Exponent::Finite(a) => e <= a,
                };
                if !ok {
                    return false;
                }
            }
            true
        })
        .collect()
}

fn divisor_lists(n: u64) -> Vec<Vec<u64>> {
    (0..=n)
        .map(|k| if k == 0 { Vec::new() } else { (1..=k).filter(|t| k % t == 0).collect() })
        .collect()
}

pub(crate) fn run(id: &str) -> Option<Result<TheoremReport>> {
    match id {
        "zee_divisor_oracle" => Some(Ok(divisor_oracle())),
        "zee_lcm_closure" => Some(lcm_closure_suite()),
        "zee_torsion_determinism" => Some(Ok(torsion_determinism())),
        _ => None,
    }
}

fn desc(point: &GridPoint, free: FreeRank) -> TorusSubgroupDesc {
    TorusSubgroupDesc::new(point.torsion(), free)
}

fn divisor_oracle() -> TheoremReport {
    let mut report = TheoremReport::new("zee_divisor_oracle");
    let spf = spf_table(GRID_MAX_K as usize);
    let divs = divisor_lists(GRID_MAX_K);
    for point in descriptor_grid() {
        let s = desc(&point, FreeRank::Finite(0));
        let in_c = in_c_table(&point, &spf);
        for k in 1..=GRID_MAX_K {
            let check = (|| {
                let ds = &divs[k as usize];
                let t = *ds.iter().filter(|&&t| in_c[t as usize]).max().expect("1 divides k");
                let dense = k == 1 || ds.iter().all(|&d| d == 1 || !in_c[d as usize]);
                let got = closure_int(&s, IntSubgroup(k)).map_err(|e| e.to_string())?;
                let closed = is_closed_int(&s, IntSubgroup(k)).map_err(|e| e.to_string())?;
                let got_dense = is_dense_int(&s, IntSubgroup(k)).map_err(|e| e.to_string())?;
                let member = c_set_contains(&s, k).map_err(|e| e.to_string())?;
                if got != IntSubgroup(t) || closed != in_c[k as usize] || member != in_c[k as usize] || got_dense != dense {
                    return Err(format!(
                        "k = {k}: closure {got} (divisor scan {t}Z), closed {closed}, in C_S {member} \
                         (scan {}), dense {got_dense} (scan {dense})",
                        in_c[k as usize]
                    ));
                }
                Ok(())
            })();
            report.record(&"Z", Some(&IntSubgroup(k)), Some(&s), check);
        }
    }
    report
}

/// Verdicts that must not depend on the free rank.
#[derive(Debug, PartialEq, Eq)]
struct TorsionVerdicts {
    closure: IntSubgroup,
    closed: bool,
    dense: bool,
    member: bool,
}

fn torsion_verdicts(s: &TorusSubgroupDesc, k: u64) -> Result<TorsionVerdicts> {
    let h = IntSubgroup(k);
    Ok(TorsionVerdicts {
        closure: closure_int(s, h)?,
        closed: is_closed_int(s, h)?,
        dense: is_dense_int(s, h)?,
        member: c_set_contains(s, k)?,
    })
}

fn torsion_determinism() -> TheoremReport {
    let mut report = TheoremReport::new("zee_torsion_determinism");
    let frees = [FreeRank::Finite(0), FreeRank::Finite(1), FreeRank::Continuum];
    for point in descriptor_grid() {
        let descs = frees.map(|f| desc(&point, f));
        let check = (|| {
            let base = classify_int(&descs[0]);
            for d in &descs[1..] {
                let c = classify_int(d);
                if (c.sc, c.topologically_simple, c.has_nontrivial_closed, &c.family_descriptor)
                    != (base.sc, base.topologically_simple, base.has_nontrivial_closed, &base.family_descriptor)
                {
                    return Err(format!("classification differs at {d}"));
                }
                if m_s(d) != m_s(&descs[0]) {
                    return Err(format!("mS differs at {d}"));
                }
            }
            Ok(())
        })();
        report.record(&"Z", None, Some(&descs[0]), check);
        for k in 1..=GRID_MAX_K {
            let check = (|| {
                let base = torsion_verdicts(&descs[0], k).map_err(|e| e.to_string())?;
                for d in &descs[1..] {
                    let v = torsion_verdicts(d, k).map_err(|e| e.to_string())?;
                    if v != base {
                        return Err(format!("free rank {}: {v:?} vs {base:?}", d.free_rank));
                    }
                }
                Ok(())
            })();
            report.record(&"Z", Some(&IntSubgroup(k)), Some(&descs[0]), check);
        }
    }
    report
}

const RANGE_WORDS: usize = (LCM_RANGE as usize + 64) / 64;

type RangeBits = [u64; RANGE_WORDS];

/// `{n ≤ LCM_RANGE : n | x}`.
fn divisor_bits(x: u64) -> RangeBits {
    let mut b = [0u64; RANGE_WORDS];
    for n in 1..=LCM_RANGE.min(x) {
        if x % n == 0 {
            b[n as usize / 64] |= 1 << (n % 64);
        }
    }
    b
}

/// `{n ≤ LCM_RANGE : n divides N}` using the implementation's divisibility test.
fn supernatural_bits(sn: &SupernaturalNumber) -> RangeBits {
    let mut b = [0u64; RANGE_WORDS];
    for n in 1..=LCM_RANGE {
        if sn.divides(n) {
            b[n as usize / 64] |= 1 << (n % 64);
        }
    }
    b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct LcmSearch {
    report: TheoremReport,
    chosen: Vec<u64>,
    oracle_memo: HashMap<u64, RangeBits>,
    impl_memo: HashMap<SupernaturalNumber, RangeBits>,
}

impl LcmSearch {
    /// `lcms` holds the lcm of every nonempty subset of `chosen`; `bits` their divisors.
    fn visit(&mut self, start: u64, lcms: &[u64], bits: &RangeBits) {
        if self.chosen.len() == LCM_SET_SIZE {
            return;
        }
        for c in start..=LCM_SET_MAX {
            let mut next: Vec<u64> = lcms.to_vec();
            for x in lcms.iter().copied().chain([1]) {
                let l = x / gcd(x, c) * c;
                if !next.contains(&l) {
                    next.push(l);
                }
            }
            let mut union = *bits;
            for &l in &next[lcms.len()..] {
                let d = self.oracle_memo.entry(l).or_insert_with(|| divisor_bits(l));
                for (u, w) in union.iter_mut().zip(d.iter()) {
                    *u |= w;
                }
            }
            self.chosen.push(c);
            let check = match lcm_closure(&self.chosen) {
                Ok(sn) => {
                    let got = *self.impl_memo.entry(sn.clone()).or_insert_with(|| supernatural_bits(&sn));
                    if got == union {
                        Ok(())
                    } else {
                        Err(format!("C = {:?}: closure {sn} has the wrong divisor set", self.chosen))
                    }
                }
                Err(e) => Err(format!("C = {:?}: {e}", self.chosen)),
            };
            self.report.record(&"Z", None, None, check);
            self.visit(c + 1, &next, &union);
            self.chosen.pop();
        }
    }
}

/// Every `C ⊆ {1..60}` with `1 ≤ |C| ≤ 5`: the divisors of the lcm-closure
/// supernatural match the union of divisors of all subset lcms, on `1..=3600`.
fn lcm_closure_suite() -> Result<TheoremReport> {
    let mut search = LcmSearch {
        report: TheoremReport::new("zee_lcm_closure"),
        chosen: Vec::new(),
        oracle_memo: HashMap::new(),
        impl_memo: HashMap::new(),
    };
    search.visit(1, &[], &[0; RANGE_WORDS]);
    Ok(search.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let grid = descriptor_grid();
        assert_eq!(grid.len(), 31250);
        assert_eq!(grid[0].torsion(), SupernaturalNumber::one());
        assert_eq!(grid[15625].torsion().to_string(), "all{2^0,3^0,5^0,7^0,11^0,13^0}");
        assert!(grid.last().unwrap().torsion().is_all());
    }

    #[test]
    fn oracle_table_matches_exponents() {
        let spf = spf_table(100);
        let p = GridPoint {
            exponents: [Exponent::Finite(2), Exponent::Finite(1), Exponent::Finite(0), Exponent::Infinite, Exponent::Finite(0), Exponent::Finite(0)],
            default_infinite: false,
        };
        let in_c = in_c_table(&p, &spf);
        let members: Vec<usize> = (1..=100).filter(|&t| in_c[t]).collect();
        assert_eq!(members, vec![1, 2, 3, 4, 6, 7, 12, 14, 21, 28, 42, 49, 84, 98]);
    }

    #[test]
    fn divisor_bits_small() {
        let b = divisor_bits(12);
        let got: Vec<u64> = (1..=20).filter(|&n| b[n as usize / 64] >> (n % 64) & 1 == 1).collect();
        assert_eq!(got, vec![1, 2, 3, 4, 6, 12]);
    }
}
