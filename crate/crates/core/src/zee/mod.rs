//! Precompact topologies on the integers.
//!
//! A subgroup `S ≤ ℤ̂ = 𝕋` is described by its torsion part, a supernatural
//! number `N` (so `1/n ∈ S` iff `n | N`), and a symbolic free rank. The set
//! `C_S` of `n` with `nℤ` closed is exactly the divisor set of `N`.

mod descriptor;
mod supernatural;

pub use descriptor::{FreeRank, IntSubgroup, TorusSubgroupDesc};
pub use supernatural::{Exponent, SupernaturalNumber};

use crate::arith::{checked_lcm, divisors, factorize};
use crate::error::{Error, Result};

/// `lcm(a, b)` of positive integers.
pub fn lcm_pair(a: u64, b: u64) -> Result<u64> {
    lcm_set(&[a, b])
}

/// The least common multiple of a nonempty set of positive integers.
pub fn lcm_set(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::Precondition("lcm of an empty set".into()));
    }
    values.iter().try_fold(1u64, |acc, &n| {
        if n == 0 {
            return Err(Error::Precondition("lcm of a set containing 0".into()));
        }
        checked_lcm(acc, n).ok_or_else(|| Error::Overflow(format!("lcm overflows at {n}")))
    })
}

/// The lcm-closure of `C` as a supernatural number: `∏ p^{max v_p(c)}`.
/// Its divisor set is the smallest lcm-closed, divisor-closed set containing `C`.
pub fn lcm_closure(values: &[u64]) -> Result<SupernaturalNumber> {
    let mut out = SupernaturalNumber::one();
    for &c in values {
        if c == 0 {
            return Err(Error::Precondition("lcm closure of a set containing 0".into()));
        }
        out = out.lcm(&SupernaturalNumber::from_integer(c)?);
    }
    Ok(out)
}

/// `n ∈ C_S`, i.e. `nℤ` is closed in `τ_S`. Use [`closure_int`] for `n = 0`.
pub fn c_set_contains(s: &TorusSubgroupDesc, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition(
            "C_S membership is defined for n ≥ 1; test {0} with is_closed_int".into(),
        ));
    }
    Ok(s.torsion.divides(n))
}

/// The largest divisor `t` of `k` lying in `C_S`, from the factorization of `k`.
pub fn closure_generator_factored(torsion: &SupernaturalNumber, k_factors: &[(u64, u32)]) -> u64 {
    k_factors
        .iter()
        .map(|&(p, e)| match torsion.exponent(p) {
            Exponent::Finite(a) => p.pow(e.min(a)),
            Exponent::Infinite => p.pow(e),
        })
        .product()
}

/// The `τ_S`-closure of `kℤ`. For `k ≥ 1` it is `tℤ` with `t` the largest
/// divisor of `k` in `C_S`. The closure of `{0}` is `A(ℤ,S)`: `Nℤ` when `S`
/// is the finite group `⟨1/N⟩`, and `{0}` otherwise.
pub fn closure_int(s: &TorusSubgroupDesc, h: IntSubgroup) -> Result<IntSubgroup> {
    match h.0 {
        0 => {
            if s.free_rank.is_zero() && s.torsion.is_finite() {
                s.torsion.to_integer().map(IntSubgroup).ok_or_else(|| {
                    Error::Overflow(format!("torsion {} does not fit in 64 bits", s.torsion))
                })
            } else {
                Ok(IntSubgroup(0))
            }
        }
        k => Ok(IntSubgroup(closure_generator_factored(&s.torsion, &factorize(k)))),
    }
}

pub fn is_closed_int(s: &TorusSubgroupDesc, h: IntSubgroup) -> Result<bool> {
    Ok(closure_int(s, h)? == h)
}

/// Density of a subgroup `kℤ` by the divisor conditions: `kℤ = ℤ`, or `k ∉ C_S`
/// and no `s > 1` in `C_S` divides `k` (for `k = 0`, `{0}` not closed and `C_S = {1}`).
pub fn is_dense_by_divisors(s: &TorusSubgroupDesc, h: IntSubgroup) -> Result<bool> {
    match h.0 {
        1 => Ok(true),
        0 => Ok(!is_closed_int(s, h)? && s.torsion.is_one()),
        k => {
            let in_c = c_set_contains(s, k)?;
            let divisor_in_c = divisors(k)
                .into_iter()
                .filter(|&d| d > 1)
                .any(|d| s.torsion.divides(d));
            Ok(!in_c && !divisor_in_c)
        }
    }
}

/// Density of `kℤ`: the closure is `ℤ`. Cross-checked against [`is_dense_by_divisors`].
pub fn is_dense_int(s: &TorusSubgroupDesc, h: IntSubgroup) -> Result<bool> {
    let by_closure = closure_int(s, h)? == IntSubgroup(1);
    let by_divisors = is_dense_by_divisors(s, h)?;
    if by_closure != by_divisors {
        return Err(Error::Inconsistent(format!(
            "density of {h} in τ_S for S = {s}: closure says {by_closure}, divisor criterion says {by_divisors}"
        )));
    }
    Ok(by_closure)
}

/// `mS = ⟨1/n : n ∈ C_S⟩`: the torsion part alone, the smallest subgroup with the same closed family.
pub fn m_s(s: &TorusSubgroupDesc) -> TorusSubgroupDesc {
    s.with_free_rank(FreeRank::Finite(0))
}

/// `MS = mS × F` with `F` of continuum rank: the largest subgroup with the same closed family.
pub fn big_m_s(s: &TorusSubgroupDesc) -> TorusSubgroupDesc {
    s.with_free_rank(FreeRank::Continuum)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntClassification {
    pub hausdorff: bool,
    /// Every subgroup of `ℤ` is closed.
    pub sc: bool,
    pub topologically_simple: bool,
    pub has_nontrivial_closed: bool,
    /// `C_S` is the divisor set of this number.
    pub family_descriptor: SupernaturalNumber,
}

pub fn classify_int(s: &TorusSubgroupDesc) -> IntClassification {
    IntClassification {
        hausdorff: s.is_hausdorff(),
        sc: s.torsion.is_all(),
        topologically_simple: s.torsion.is_one(),
        has_nontrivial_closed: !s.torsion.is_one(),
        family_descriptor: s.torsion.clone(),
    }
}
