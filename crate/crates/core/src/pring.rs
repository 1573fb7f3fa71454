//! Concrete polyadic rings over j-roots of minus one.
//!
//! A [`PolyadicRing`] with root order `q >= 2` has underlying set `j*Z` where
//! `j^q = -1`. Addition is binary, and only products of `q + 1` factors close
//! on the set: `(j k_1)...(j k_{q+1}) = -j (k_1...k_{q+1})`, a nonderived
//! `(2, q+1)`-ring. Scalars store the integer coefficient `k`. Root order
//! `q = 1` is the ordinary integers as a `(2,2)`-ring.
//!
//! Optional reduction mod `N` gives finite rings for exhaustive checks. The
//! zeroless substructure of odd multiples and the adjoined external zero
//! cover rings without a native zero.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arity::try_polyadic_power;
use crate::error::{AlgebraError, Result};

/// Exact ring element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingScalar {
    /// `j * k`, stored as `k` (reduced when the ring is modular).
    Coeff(BigInt),
    /// Externally adjoined zero.
    AdjoinedZero,
}

impl RingScalar {
    pub fn coeff(&self) -> Option<&BigInt> {
        match self {
            RingScalar::Coeff(k) => Some(k),
            RingScalar::AdjoinedZero => None,
        }
    }
}

impl From<i64> for RingScalar {
    fn from(k: i64) -> Self {
        RingScalar::Coeff(BigInt::from(k))
    }
}

impl From<BigInt> for RingScalar {
    fn from(k: BigInt) -> Self {
        RingScalar::Coeff(k)
    }
}

/// Which coefficients belong to the carrier set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    All,
    /// Odd coefficients only. Closed under multiplication, has no zero, and
    /// sums of two members leave it.
    OddMultiples,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyadicRing {
    q: u32,
    modulus: Option<u64>,
    carrier: Carrier,
    adjoined_zero: bool,
}

/// Distinct identity candidates for rings over `Z` (and ±1 sampling).
const SMALL_UNITS: [i64; 2] = [-1, 1];

impl PolyadicRing {
    /// `j_q * Z` with `j_q^q = -1`.
    pub fn jroot(q: u32) -> Result<Self> {
        if q < 1 {
            return Err(AlgebraError::Incompatible("root order must be at least 1".into()));
        }
        Ok(PolyadicRing { q, modulus: None, carrier: Carrier::All, adjoined_zero: false })
    }

    /// The ordinary integers as a `(2,2)`-ring.
    pub fn integers() -> Self {
        PolyadicRing { q: 1, modulus: None, carrier: Carrier::All, adjoined_zero: false }
    }

    /// Same ring with coefficients reduced mod `modulus`.
    pub fn with_modulus(mut self, modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(AlgebraError::Incompatible(format!("modulus must be at least 2, got {modulus}")));
        }
        if self.carrier != Carrier::All {
            return Err(AlgebraError::Incompatible("modular reduction needs the full carrier".into()));
        }
        self.modulus = Some(modulus);
        Ok(self)
    }

    /// The zeroless substructure `{ j k : k odd }` over `Z`.
    pub fn odd_multiples(q: u32) -> Result<Self> {
        let mut r = Self::jroot(q)?;
        r.carrier = Carrier::OddMultiples;
        Ok(r)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn has_adjoined_zero(&self) -> bool {
        self.adjoined_zero
    }

    pub fn is_finite(&self) -> bool {
        self.modulus.is_some()
    }

    pub fn add_arity(&self) -> usize {
        2
    }

    pub fn mul_arity(&self) -> usize {
        self.q as usize + 1
    }

    /// Sign picked up by a product of `q + 1` factors: `j^(q+1) = -j` for
    /// `q >= 2`; plain integers have no `j`.
    fn product_sign(&self) -> i32 {
        if self.q == 1 {
            1
        } else {
            -1
        }
    }

    /// Ring symbol in the concrete syntax: `j`, `j4`, ... or empty for `Z`.
    pub fn symbol(&self) -> String {
        match self.q {
            1 => String::new(),
            2 => "j".into(),
            q => format!("j{q}"),
        }
    }

    pub fn label(&self) -> String {
        let base = match self.q {
            1 => "Z".to_string(),
            _ => format!("{}Z", self.symbol()),
        };
        let base = match self.carrier {
            Carrier::All => base,
            Carrier::OddMultiples => format!("{base}[odd]"),
        };
        let base = match self.modulus {
            Some(n) => format!("{base} mod {n}"),
            None => base,
        };
        if self.adjoined_zero {
            format!("{base} + adjoined zero")
        } else {
            base
        }
    }

    fn reduce(&self, k: BigInt) -> BigInt {
        match self.modulus {
            Some(n) => k.mod_floor(&BigInt::from(n)),
            None => k,
        }
    }

    /// Scalar with coefficient `k`, reduced into the ring.
    pub fn scalar(&self, k: impl Into<BigInt>) -> RingScalar {
        RingScalar::Coeff(self.reduce(k.into()))
    }

    pub fn contains(&self, r: &RingScalar) -> bool {
        match r {
            RingScalar::AdjoinedZero => self.adjoined_zero,
            RingScalar::Coeff(k) => {
                let in_range = match self.modulus {
                    Some(n) => !k.is_negative() && *k < BigInt::from(n),
                    None => true,
                };
                in_range && (self.carrier == Carrier::All || k.is_odd())
            }
        }
    }

    fn check_members(&self, polyad: &[RingScalar]) -> Result<()> {
        match polyad.iter().find(|r| !self.contains(r)) {
            Some(r) => Err(AlgebraError::NotAMember(self.format(r))),
            None => Ok(()),
        }
    }

    fn close(&self, k: BigInt) -> Result<RingScalar> {
        let r = RingScalar::Coeff(self.reduce(k));
        if self.contains(&r) {
            Ok(r)
        } else {
            Err(AlgebraError::NotClosed(self.format(&r)))
        }
    }

    /// Binary addition. The adjoined zero is neutral.
    pub fn radd(&self, polyad: &[RingScalar]) -> Result<RingScalar> {
        if polyad.len() != self.add_arity() {
            return Err(AlgebraError::ArityMismatch { expected: self.add_arity(), got: polyad.len() });
        }
        self.check_members(polyad)?;
        self.add_unchecked(polyad)
    }

    fn add_unchecked(&self, polyad: &[RingScalar]) -> Result<RingScalar> {
        let coeffs: Vec<&BigInt> = polyad.iter().filter_map(RingScalar::coeff).collect();
        match coeffs.len() {
            0 => Ok(RingScalar::AdjoinedZero),
            1 => Ok(RingScalar::Coeff(coeffs[0].clone())),
            _ => self.close(coeffs.into_iter().sum()),
        }
    }

    /// `(q+1)`-ary multiplication: coefficient `-(k_1 ... k_{q+1})`. The
    /// adjoined zero absorbs.
    pub fn rmul(&self, polyad: &[RingScalar]) -> Result<RingScalar> {
        if polyad.len() != self.mul_arity() {
            return Err(AlgebraError::ArityMismatch { expected: self.mul_arity(), got: polyad.len() });
        }
        self.check_members(polyad)?;
        self.mul_unchecked(polyad)
    }

    fn mul_unchecked(&self, polyad: &[RingScalar]) -> Result<RingScalar> {
        let mut prod = BigInt::from(self.product_sign());
        for r in polyad {
            match r {
                RingScalar::AdjoinedZero => return Ok(RingScalar::AdjoinedZero),
                RingScalar::Coeff(k) => prod *= k,
            }
        }
        self.close(prod)
    }

    /// The zero: native `0` when the carrier contains it, the adjoined zero
    /// when one was added, otherwise `None`.
    pub fn rzero(&self) -> Option<RingScalar> {
        if self.adjoined_zero {
            Some(RingScalar::AdjoinedZero)
        } else if self.carrier == Carrier::All {
            Some(RingScalar::Coeff(BigInt::zero()))
        } else {
            None
        }
    }

    pub fn is_zero(&self, r: &RingScalar) -> bool {
        self.rzero().as_ref() == Some(r)
    }

    /// Extends the ring by an external zero; unchanged if a zero exists.
    pub fn radjoin_zero(&self) -> PolyadicRing {
        if self.rzero().is_some() {
            return self.clone();
        }
        let mut r = self.clone();
        r.adjoined_zero = true;
        r
    }

    /// Every element of a finite ring.
    pub fn elements(&self) -> Result<Vec<RingScalar>> {
        let n = self.modulus.ok_or(AlgebraError::InfiniteUniverse)?;
        let mut v: Vec<RingScalar> = (0..n).map(|k| RingScalar::Coeff(BigInt::from(k))).collect();
        if self.adjoined_zero {
            v.push(RingScalar::AdjoinedZero);
        }
        Ok(v)
    }

    /// `mu[r, .., e, ..]` restores `r` for every placement of `r`.
    fn neutral_for(&self, e: &RingScalar, r: &RingScalar) -> bool {
        let n = self.mul_arity();
        (0..n).all(|pos| {
            let mut w = vec![e.clone(); n];
            w[pos] = r.clone();
            self.mul_unchecked(&w).as_ref() == Ok(r)
        })
    }

    /// All multiplicative identities. Finite rings are searched exhaustively.
    /// Over `Z` the condition `-k e^q = k` reduces to `e^q = -1`, solved by
    /// `e = -1` exactly when `q` is odd (and `e = 1` for plain integers).
    pub fn ridentity_search(&self) -> Vec<RingScalar> {
        let candidates: Vec<RingScalar> = match self.elements() {
            Ok(all) => {
                return all
                    .iter()
                    .filter(|e| all.iter().all(|r| self.neutral_for(e, r)))
                    .cloned()
                    .collect();
            }
            Err(_) => SMALL_UNITS.iter().map(|&k| RingScalar::from(k)).collect(),
        };
        let samples: Vec<RingScalar> = (-5i64..=5)
            .map(RingScalar::from)
            .filter(|r| self.contains(r))
            .collect();
        candidates
            .into_iter()
            .filter(|e| self.contains(e))
            .filter(|e| {
                let analytic = match self.q {
                    1 => e == &RingScalar::from(1),
                    q => q % 2 == 1 && e == &RingScalar::from(-1),
                };
                analytic && samples.iter().all(|r| self.neutral_for(e, r))
            })
            .collect()
    }

    /// True when `qr` is a querelement of `r` in every position.
    pub fn is_querelement(&self, r: &RingScalar, qr: &RingScalar) -> bool {
        let n = self.mul_arity();
        (0..n).all(|pos| {
            let mut w = vec![r.clone(); n];
            w[pos] = qr.clone();
            self.mul_unchecked(&w).as_ref() == Ok(r)
        })
    }

    /// Querelement `q` with `mu[q, r, .., r] = r` in every position.
    ///
    /// The zero is never invertible: it absorbs every polyad, so the defining
    /// equation holds vacuously for it. Over `Z` the only candidate is
    /// `-k / k^q`, which is integral only for `k = ±1`.
    pub fn rquer(&self, r: &RingScalar) -> Result<RingScalar> {
        if self.mul_arity() < 3 {
            return Err(AlgebraError::Incompatible(
                "querelements need a multiplication of arity at least 3".into(),
            ));
        }
        if !self.contains(r) {
            return Err(AlgebraError::NotAMember(self.format(r)));
        }
        let not_found = || AlgebraError::NotFound(format!("querelement of {}", self.format(r)));
        if self.is_zero(r) {
            return Err(not_found());
        }
        if let Ok(all) = self.elements() {
            return all.into_iter().find(|c| self.is_querelement(r, c)).ok_or_else(not_found);
        }
        let k = r.coeff().ok_or_else(not_found)?;
        let denom = k.pow(self.q) * BigInt::from(self.product_sign());
        if denom.is_zero() || !k.is_multiple_of(&denom) {
            return Err(not_found());
        }
        let cand = RingScalar::Coeff(k / denom);
        if self.contains(&cand) && self.is_querelement(r, &cand) {
            Ok(cand)
        } else {
            Err(not_found())
        }
    }

    /// The unit set: elements that have a querelement.
    pub fn runits(&self) -> Result<Vec<RingScalar>> {
        let candidates = match self.elements() {
            Ok(all) => all,
            Err(_) => SMALL_UNITS.iter().map(|&k| RingScalar::from(k)).collect(),
        };
        let mut units = Vec::new();
        for c in candidates.into_iter().filter(|c| self.contains(c)) {
            match self.rquer(&c) {
                Ok(_) => units.push(c),
                Err(AlgebraError::NotFound(_)) => {}
                Err(e) => return Err(e),
            }
        }
        units.sort();
        Ok(units)
    }

    /// True iff `r^<ell>` (under multiplication) is the zero.
    pub fn rnilpotent_check(&self, r: &RingScalar, ell: u64) -> Result<bool> {
        let z = self.rzero().ok_or(AlgebraError::NoZero)?;
        if !self.contains(r) {
            return Err(AlgebraError::NotAMember(self.format(r)));
        }
        let p = try_polyadic_power(self.mul_arity(), r, ell, |w| self.mul_unchecked(w))?;
        Ok(p == z)
    }

    /// Concrete syntax for a scalar: `-5j`, `7j4`, `3`, or `z*` for the
    /// adjoined zero.
    pub fn format(&self, r: &RingScalar) -> String {
        match r {
            RingScalar::Coeff(k) => format!("{k}{}", self.symbol()),
            RingScalar::AdjoinedZero => "z*".into(),
        }
    }

    /// Uniform coefficient in `[lo, hi]` (reduced), for sampling.
    pub fn sample(&self, rng: &mut impl rand::Rng, lo: i64, hi: i64) -> RingScalar {
        loop {
            let r = self.scalar(rng.gen_range(lo..=hi));
            if self.contains(&r) {
                return r;
            }
        }
    }
}

impl fmt::Display for PolyadicRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} as a (2,{})-ring", self.label(), self.mul_arity())
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingScalar::Coeff(k) => write!(f, "{k}"),
            RingScalar::AdjoinedZero => f.write_str("z*"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn jz() -> PolyadicRing {
        PolyadicRing::jroot(2).unwrap()
    }

    fn s(k: i64) -> RingScalar {
        RingScalar::from(k)
    }

    #[test]
    fn addition() {
        let r = jz();
        assert_eq!(r.radd(&[s(2), s(-7)]), Ok(s(-5)));
        assert_eq!(r.radd(&[s(11), s(0)]), Ok(s(11)));
        let m5 = jz().with_modulus(5).unwrap();
        assert_eq!(m5.radd(&[s(3), s(4)]), Ok(s(2)));
        assert_eq!(r.radd(&[s(1)]), Err(AlgebraError::ArityMismatch { expected: 2, got: 1 }));
        assert!(m5.radd(&[s(7), s(1)]).is_err());
    }

    #[test]
    fn multiplication() {
        let r = jz();
        assert_eq!(r.rmul(&[s(5), s(2), s(-4)]), Ok(s(40)));
        assert_eq!(r.rmul(&[s(1), s(1), s(1)]), Ok(s(-1)));
        let j4 = PolyadicRing::jroot(4).unwrap();
        assert_eq!(j4.mul_arity(), 5);
        assert_eq!(j4.rmul(&vec![s(1); 5]), Ok(s(-1)));
        assert_eq!(PolyadicRing::integers().rmul(&[s(3), s(2)]), Ok(s(6)));
        assert!(r.rmul(&[s(1), s(1)]).is_err());
    }

    #[test]
    fn zeros() {
        assert_eq!(jz().rzero(), Some(s(0)));
        assert_eq!(jz().with_modulus(5).unwrap().rzero(), Some(s(0)));
        let odd = PolyadicRing::odd_multiples(2).unwrap();
        assert_eq!(odd.rzero(), None);
        let ext = odd.radjoin_zero();
        assert_eq!(ext.rzero(), Some(RingScalar::AdjoinedZero));
        assert_eq!(jz().radjoin_zero(), jz());
        // laws of the adjoined zero
        let z = RingScalar::AdjoinedZero;
        for k in [-5i64, -1, 1, 3, 7] {
            assert_eq!(ext.radd(&[s(k), z.clone()]), Ok(s(k)));
            assert_eq!(ext.radd(&[z.clone(), s(k)]), Ok(s(k)));
            for pos in 0..3 {
                let mut w = vec![s(k), s(3), s(-1)];
                w[pos] = z.clone();
                assert_eq!(ext.rmul(&w), Ok(z.clone()));
            }
        }
        assert_eq!(ext.radd(&[z.clone(), z.clone()]), Ok(z));
        // odd + odd is even
        assert!(matches!(odd.radd(&[s(1), s(3)]), Err(AlgebraError::NotClosed(_))));
        assert_eq!(odd.rmul(&[s(1), s(3), s(5)]), Ok(s(-15)));
    }

    #[test]
    fn identities() {
        assert!(jz().ridentity_search().is_empty());
        assert_eq!(jz().with_modulus(5).unwrap().ridentity_search(), vec![s(2), s(3)]);
        assert!(jz().with_modulus(3).unwrap().ridentity_search().is_empty());
        assert!(PolyadicRing::jroot(4).unwrap().ridentity_search().is_empty());
        assert_eq!(PolyadicRing::jroot(3).unwrap().ridentity_search(), vec![s(-1)]);
        assert_eq!(PolyadicRing::integers().ridentity_search(), vec![s(1)]);
    }

    #[test]
    fn querelements_and_units() {
        let r = jz();
        assert_eq!(r.rquer(&s(1)), Ok(s(-1)));
        assert_eq!(r.rquer(&s(-1)), Ok(s(1)));
        assert!(matches!(r.rquer(&s(2)), Err(AlgebraError::NotFound(_))));
        assert!(matches!(r.rquer(&s(0)), Err(AlgebraError::NotFound(_))));
        assert_eq!(r.runits(), Ok(vec![s(-1), s(1)]));
        assert_eq!(jz().with_modulus(5).unwrap().runits(), Ok(vec![s(1), s(2), s(3), s(4)]));
        assert_eq!(jz().with_modulus(4).unwrap().runits(), Ok(vec![s(1), s(3)]));
        assert!(PolyadicRing::integers().rquer(&s(1)).is_err());
    }

    #[test]
    fn nilpotents() {
        assert_eq!(jz().rnilpotent_check(&s(0), 1), Ok(true));
        assert_eq!(jz().rnilpotent_check(&s(1), 1), Ok(false));
        assert_eq!(jz().with_modulus(8).unwrap().rnilpotent_check(&s(2), 1), Ok(true));
        let odd = PolyadicRing::odd_multiples(2).unwrap();
        assert_eq!(odd.rnilpotent_check(&s(1), 1), Err(AlgebraError::NoZero));
    }

    #[test]
    fn commutativity_mod_5() {
        let r = jz().with_modulus(5).unwrap();
        let all = r.elements().unwrap();
        for w in std::iter::repeat_n(all.iter(), 3).multi_cartesian_product() {
            let w: Vec<RingScalar> = w.into_iter().cloned().collect();
            let base = r.rmul(&w).unwrap();
            for p in w.iter().cloned().permutations(3) {
                assert_eq!(r.rmul(&p).unwrap(), base);
            }
        }
    }

    #[test]
    fn formatting() {
        let r = jz();
        assert_eq!(r.format(&s(-105)), "-105j");
        assert_eq!(PolyadicRing::jroot(4).unwrap().format(&s(3)), "3j4");
        assert_eq!(PolyadicRing::integers().format(&s(3)), "3");
        assert_eq!(r.label(), "jZ");
        assert_eq!(jz().with_modulus(5).unwrap().label(), "jZ mod 5");
    }
}
