use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};
use crate::text::Cursor;

/// A prime exponent of a supernatural number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exponent {
    Finite(u32),
    Infinite,
}

impl Exponent {
    pub fn is_zero(self) -> bool {
        self == Exponent::Finite(0)
    }

    /// Whether `p^e` with this exponent allows `e` copies of `p`.
    pub fn admits(self, e: u32) -> bool {
        match self {
            Exponent::Finite(a) => e <= a,
            Exponent::Infinite => true,
        }
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exponent::Finite(a), Exponent::Finite(b)) => a.cmp(b),
            (Exponent::Finite(_), Exponent::Infinite) => Ordering::Less,
            (Exponent::Infinite, Exponent::Finite(_)) => Ordering::Greater,
            (Exponent::Infinite, Exponent::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A formal product `∏ p^{a_p}` with `a_p ∈ ℕ ∪ {∞}`.
///
/// Primes missing from the map carry the default exponent, which is either
/// 0 or ∞. Map entries never repeat the default, so equal numbers have equal
/// representations. The number stands for the subgroup of `ℚ/ℤ` generated by
/// `1/n` for every ordinary `n` it is divisible by.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupernaturalNumber {
    exponents: BTreeMap<u64, Exponent>,
    default_infinite: bool,
}

impl SupernaturalNumber {
    /// The number 1 (the trivial subgroup).
    pub fn one() -> Self {
        SupernaturalNumber {
            exponents: BTreeMap::new(),
            default_infinite: false,
        }
    }

    /// Every prime with exponent ∞ (all of `ℚ/ℤ`).
    pub fn all() -> Self {
        SupernaturalNumber {
            exponents: BTreeMap::new(),
            default_infinite: true,
        }
    }

    /// `p^∞`, the Prüfer `p`-group.
    pub fn prime_power_infinite(p: u64) -> Result<Self> {
        Self::from_exponents([(p, Exponent::Infinite)], false)
    }

    pub fn from_integer(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("0 is not a supernatural number".into()));
        }
        Ok(SupernaturalNumber {
            exponents: factorize(n)
                .into_iter()
                .map(|(p, e)| (p, Exponent::Finite(e)))
                .collect(),
            default_infinite: false,
        })
    }

    /// Builds a number from explicit prime exponents over the given default.
    /// Later entries for the same prime replace earlier ones.
    pub fn from_exponents(
        entries: impl IntoIterator<Item = (u64, Exponent)>,
        default_infinite: bool,
    ) -> Result<Self> {
        let mut out = SupernaturalNumber {
            exponents: BTreeMap::new(),
            default_infinite,
        };
        for (p, e) in entries {
            if !is_prime(p) {
                return Err(Error::Precondition(format!("{p} is not a prime")));
            }
            out.set(p, e);
        }
        Ok(out)
    }

    fn default_exponent(&self) -> Exponent {
        if self.default_infinite {
            Exponent::Infinite
        } else {
            Exponent::Finite(0)
        }
    }

    fn set(&mut self, p: u64, e: Exponent) {
        if e == self.default_exponent() {
            self.exponents.remove(&p);
        } else {
            self.exponents.insert(p, e);
        }
    }

    pub fn exponent(&self, p: u64) -> Exponent {
        self.exponents
            .get(&p)
            .copied()
            .unwrap_or_else(|| self.default_exponent())
    }

    /// Explicit entries; every other prime has the default exponent.
    pub fn entries(&self) -> impl Iterator<Item = (u64, Exponent)> + '_ {
        self.exponents.iter().map(|(&p, &e)| (p, e))
    }

    pub fn default_is_infinite(&self) -> bool {
        self.default_infinite
    }

    /// An ordinary positive integer: default 0 and no infinite entry.
    pub fn is_finite(&self) -> bool {
        !self.default_infinite && self.exponents.values().all(|e| *e != Exponent::Infinite)
    }

    pub fn is_one(&self) -> bool {
        !self.default_infinite && self.exponents.is_empty()
    }

    pub fn is_all(&self) -> bool {
        self.default_infinite && self.exponents.is_empty()
    }

    /// The integer value when finite and representable.
    pub fn to_integer(&self) -> Option<u64> {
        if !self.is_finite() {
            return None;
        }
        self.exponents.iter().try_fold(1u64, |acc, (&p, e)| match e {
            Exponent::Finite(a) => p.checked_pow(*a).and_then(|q| acc.checked_mul(q)),
            Exponent::Infinite => None,
        })
    }

    /// Whether the ordinary integer `n ≥ 1` divides this number; `false` for 0.
    pub fn divides(&self, n: u64) -> bool {
        n != 0 && self.divides_factored(&factorize(n))
    }

    /// [`Self::divides`] for an already factored integer.
    pub fn divides_factored(&self, factors: &[(u64, u32)]) -> bool {
        factors.iter().all(|&(p, e)| self.exponent(p).admits(e))
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Self) -> Self {
        self.combine(other, std::cmp::max)
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Self) -> Self {
        self.combine(other, std::cmp::min)
    }

    fn combine(&self, other: &Self, f: fn(Exponent, Exponent) -> Exponent) -> Self {
        let default = f(self.default_exponent(), other.default_exponent());
        let mut out = SupernaturalNumber {
            exponents: BTreeMap::new(),
            default_infinite: default == Exponent::Infinite,
        };
        for &p in self.exponents.keys().chain(other.exponents.keys()) {
            out.set(p, f(self.exponent(p), other.exponent(p)));
        }
        out
    }

    /// Divisibility between supernatural numbers.
    pub fn divides_supernatural(&self, other: &Self) -> bool {
        if self.default_infinite && !other.default_infinite {
            return false;
        }
        self.exponents
            .keys()
            .chain(other.exponents.keys())
            .all(|&p| self.exponent(p) <= other.exponent(p))
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, p: u64, e: Exponent) -> fmt::Result {
    match e {
        Exponent::Finite(1) => write!(f, "{p}"),
        Exponent::Finite(a) => write!(f, "{p}^{a}"),
        Exponent::Infinite => write!(f, "{p}^inf"),
    }
}

/// `1`, `2^3*5^inf`, `all`, or `all{2^3,3,5^0}` (every prime ∞ except those listed).
impl fmt::Display for SupernaturalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.default_infinite {
            write!(f, "all")?;
            if self.exponents.is_empty() {
                return Ok(());
            }
            write!(f, "{{")?;
            for (i, (&p, &e)) in self.exponents.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                match e {
                    Exponent::Finite(1) => write!(f, "{p}")?,
                    Exponent::Finite(a) => write!(f, "{p}^{a}")?,
                    Exponent::Infinite => unreachable!("entries differ from the default"),
                }
            }
            return write!(f, "}}");
        }
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (i, (&p, &e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write_power(f, p, e)?;
        }
        Ok(())
    }
}

fn exponent(cur: &mut Cursor<'_>, allow_inf: bool) -> Result<Exponent> {
    if !cur.eat("^") {
        return Ok(Exponent::Finite(1));
    }
    if allow_inf && cur.eat("inf") {
        return Ok(Exponent::Infinite);
    }
    let at = cur.pos();
    let e = cur.number()?;
    u32::try_from(e)
        .map(Exponent::Finite)
        .map_err(|_| Error::parse(at, "exponent is too large"))
}

pub(crate) fn parse_supernatural(cur: &mut Cursor<'_>) -> Result<SupernaturalNumber> {
    if cur.eat("all") {
        let mut out = SupernaturalNumber::all();
        if cur.eat("{") {
            loop {
                let at = cur.pos();
                let p = cur.number()?;
                if !is_prime(p) {
                    return Err(Error::parse(at, format!("{p} is not a prime")));
                }
                if out.exponents.contains_key(&p) {
                    return Err(Error::parse(at, format!("prime {p} listed twice")));
                }
                let e = exponent(cur, true)?;
                out.set(p, e);
                if cur.eat("}") {
                    break;
                }
                cur.expect(",")?;
            }
        }
        return Ok(out);
    }
    let mut out = SupernaturalNumber::one();
    loop {
        let at = cur.pos();
        let base = cur.number()?;
        if base == 0 {
            return Err(Error::parse(at, "factor must be positive"));
        }
        let e = exponent(cur, true)?;
        for (p, m) in factorize(base) {
            let add = match e {
                Exponent::Infinite => Exponent::Infinite,
                Exponent::Finite(a) => match m.checked_mul(a) {
                    Some(x) => Exponent::Finite(x),
                    None => return Err(Error::parse(at, "exponent is too large")),
                },
            };
            let next = match (out.exponent(p), add) {
                (Exponent::Finite(x), Exponent::Finite(y)) => Exponent::Finite(
                    x.checked_add(y)
                        .ok_or_else(|| Error::parse(at, "exponent is too large"))?,
                ),
                _ => Exponent::Infinite,
            };
            out.set(p, next);
        }
        if !cur.eat("*") {
            break;
        }
    }
    Ok(out)
}

impl FromStr for SupernaturalNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let out = parse_supernatural(&mut cur)?;
        cur.finish()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sn(s: &str) -> SupernaturalNumber {
        s.parse().unwrap()
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(sn("1"), SupernaturalNumber::one());
        assert_eq!(sn("all"), SupernaturalNumber::all());
        assert_eq!(sn("12").to_string(), "2^2*3");
        assert_eq!(sn("2^2*3").to_integer(), Some(12));
        assert_eq!(sn("2*2*3"), sn("12"));
        assert_eq!(sn("6^inf").to_string(), "2^inf*3^inf");
        assert_eq!(sn("2^3*5^inf").to_string(), "2^3*5^inf");
        assert_eq!(sn("2^0").to_string(), "1");
        assert_eq!(sn("all{2^3,3,5^0}").to_string(), "all{2^3,3,5^0}");
        assert_eq!(sn("all{7^inf}"), SupernaturalNumber::all());
        assert_eq!(sn("all{5^0,2^3}").to_string(), "all{2^3,5^0}");
    }

    #[test]
    fn grammar_errors() {
        assert!(matches!("".parse::<SupernaturalNumber>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("2^".parse::<SupernaturalNumber>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("0".parse::<SupernaturalNumber>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("all{4}".parse::<SupernaturalNumber>(), Err(Error::Parse { position: 4, .. })));
        assert!(matches!("all{2,2}".parse::<SupernaturalNumber>(), Err(Error::Parse { position: 6, .. })));
        assert!(matches!("2*3x".parse::<SupernaturalNumber>(), Err(Error::Parse { position: 3, .. })));
    }

    #[test]
    fn divisibility() {
        let s = sn("2^2*3");
        assert!(s.divides(12) && s.divides(1) && s.divides(4));
        assert!(!s.divides(8) && !s.divides(5) && !s.divides(0));
        let p = sn("2^inf");
        assert!(p.divides(1024) && !p.divides(6));
        let a = sn("all{2}");
        assert!(a.divides(2 * 59_049) && !a.divides(4));
        assert!(SupernaturalNumber::all().divides(999_983));
    }

    #[test]
    fn finiteness() {
        assert!(sn("12").is_finite());
        assert!(!sn("2^inf").is_finite());
        assert!(!sn("all{2^3}").is_finite());
        assert_eq!(sn("2^70").to_integer(), None);
        assert!(sn("1").is_one() && sn("all").is_all());
    }

    #[test]
    fn lcm_and_gcd() {
        assert_eq!(sn("4").lcm(&sn("6")), sn("12"));
        assert_eq!(sn("4").gcd(&sn("6")), sn("2"));
        assert_eq!(sn("2^inf").lcm(&sn("3")), sn("2^inf*3"));
        assert_eq!(sn("all{2}").gcd(&sn("2^inf*3^2")), sn("2*3^2"));
        assert!(sn("2").divides_supernatural(&sn("all{2}")));
        assert!(!sn("all").divides_supernatural(&sn("2^inf")));
    }

    fn arb_exponent() -> impl Strategy<Value = Exponent> {
        prop_oneof![(0u32..5).prop_map(Exponent::Finite), Just(Exponent::Infinite)]
    }

    fn arb_supernatural() -> impl Strategy<Value = SupernaturalNumber> {
        let primes = prop::sample::subsequence(vec![2u64, 3, 5, 7, 11, 13, 97], 0..5);
        (primes, prop::collection::vec(arb_exponent(), 7), any::<bool>()).prop_map(|(ps, es, d)| {
            SupernaturalNumber::from_exponents(ps.into_iter().zip(es), d).unwrap()
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(s in arb_supernatural()) {
            let text = s.to_string();
            let back: SupernaturalNumber = text.parse().unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn divides_matches_exponents(s in arb_supernatural(), n in 1u64..5000) {
            let expected = factorize(n).into_iter().all(|(p, e)| match s.exponent(p) {
                Exponent::Finite(a) => e <= a,
                Exponent::Infinite => true,
            });
            prop_assert_eq!(s.divides(n), expected);
        }
    }
}
