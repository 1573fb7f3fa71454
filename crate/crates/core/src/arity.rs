//! Arity bookkeeping: admissible word lengths, polyadic powers and the
//! arity profile of a group ring.
//!
//! A word can be composed by `ell` nested applications of an `n`-ary
//! operation only when its length is `ell * (n - 1) + 1`. Everything here is
//! overflow-checked `u64` arithmetic.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};

fn check_arity(n: u64) -> Result<()> {
    if n < 2 {
        return Err(AlgebraError::InvalidArity(n));
    }
    Ok(())
}

fn check_power(ell: u64) -> Result<()> {
    if ell < 1 {
        return Err(AlgebraError::InvalidPower(ell));
    }
    Ok(())
}

/// Length of a word composed by `ell` applications of an `n`-ary operation.
pub fn admissible_length(n: u64, ell: u64) -> Result<u64> {
    check_arity(n)?;
    check_power(ell)?;
    ell.checked_mul(n - 1)
        .and_then(|x| x.checked_add(1))
        .ok_or(AlgebraError::Overflow)
}

/// Inverse of [`admissible_length`]: the number of `n`-ary applications that
/// consume a word of length `len`.
pub fn power_for_length(n: u64, len: u64) -> Result<u64> {
    check_arity(n)?;
    if len < n || !(len - 1).is_multiple_of(n - 1) {
        return Err(AlgebraError::InadmissibleLength { arity: n, len });
    }
    Ok((len - 1) / (n - 1))
}

/// The six input arities/powers and the two derived group-ring arities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ArityProfile {
    m_r: u64,
    n_r: u64,
    n_g: u64,
    ell_m: u64,
    ell_n: u64,
    ell_g: u64,
    add_arity: u64,
    mul_arity: u64,
}

impl ArityProfile {
    /// Validates a profile. The multiplicative arity must come out the same
    /// from the ring side `ell_n*(n_r-1)+1` and the group side
    /// `ell_g*(n_g-1)+1`.
    pub fn new(m_r: u64, n_r: u64, n_g: u64, ell_m: u64, ell_n: u64, ell_g: u64) -> Result<Self> {
        for n in [m_r, n_r, n_g] {
            check_arity(n)?;
        }
        for ell in [ell_m, ell_n, ell_g] {
            check_power(ell)?;
        }
        let ring_side = ell_n.checked_mul(n_r - 1).ok_or(AlgebraError::Overflow)?;
        let group_side = ell_g.checked_mul(n_g - 1).ok_or(AlgebraError::Overflow)?;
        if ring_side != group_side {
            return Err(AlgebraError::QuantizationMismatch { ring_side, group_side });
        }
        let mul_arity = admissible_length(n_r, ell_n)?;
        debug_assert_eq!(Ok(mul_arity), admissible_length(n_g, ell_g));
        Ok(ArityProfile {
            m_r,
            n_r,
            n_g,
            ell_m,
            ell_n,
            ell_g,
            add_arity: admissible_length(m_r, ell_m)?,
            mul_arity,
        })
    }

    /// Profile with every polyadic power equal to one.
    pub fn unit_powers(m_r: u64, n_r: u64, n_g: u64) -> Result<Self> {
        Self::new(m_r, n_r, n_g, 1, 1, 1)
    }

    pub fn m_r(&self) -> u64 {
        self.m_r
    }
    pub fn n_r(&self) -> u64 {
        self.n_r
    }
    pub fn n_g(&self) -> u64 {
        self.n_g
    }
    pub fn ell_m(&self) -> u64 {
        self.ell_m
    }
    pub fn ell_n(&self) -> u64 {
        self.ell_n
    }
    pub fn ell_g(&self) -> u64 {
        self.ell_g
    }

    /// Arity of the group-ring addition.
    pub fn add_arity(&self) -> u64 {
        self.add_arity
    }

    /// Arity of the group-ring multiplication.
    pub fn mul_arity(&self) -> u64 {
        self.mul_arity
    }
}

impl fmt::Display for ArityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "m_r={} n_r={} n_g={} ell_m={} ell_n={} ell_g={} => (M_r, N_r) = ({}, {})",
            self.m_r,
            self.n_r,
            self.n_g,
            self.ell_m,
            self.ell_n,
            self.ell_g,
            self.add_arity,
            self.mul_arity
        )
    }
}

/// Left-nested composition of a fallible `n`-ary operation over a word of
/// admissible length `ell*(n-1)+1`:
/// `op[op[...op[w_1..w_n]...], w_.., ...]`.
pub fn try_iterate_op<T, E, F>(n: usize, ell: u64, word: &[T], mut op: F) -> std::result::Result<T, E>
where
    T: Clone,
    E: From<AlgebraError>,
    F: FnMut(&[T]) -> std::result::Result<T, E>,
{
    let expected = admissible_length(n as u64, ell)?;
    if word.len() as u64 != expected {
        return Err(AlgebraError::InadmissibleLength { arity: n as u64, len: word.len() as u64 }.into());
    }
    let mut acc = op(&word[..n])?;
    let mut buf = Vec::with_capacity(n);
    for chunk in word[n..].chunks(n - 1) {
        buf.clear();
        buf.push(acc);
        buf.extend_from_slice(chunk);
        acc = op(&buf)?;
    }
    Ok(acc)
}

/// Infallible variant of [`try_iterate_op`].
pub fn iterate_op<T, F>(n: usize, ell: u64, word: &[T], mut op: F) -> Result<T>
where
    T: Clone,
    F: FnMut(&[T]) -> T,
{
    try_iterate_op(n, ell, word, |w: &[T]| Ok::<T, AlgebraError>(op(w)))
}

/// Polyadic power `x^<ell>`: `ell` nested applications over `ell*(n-1)+1`
/// copies of `x`.
pub fn polyadic_power<T, F>(n: usize, x: &T, ell: u64, op: F) -> Result<T>
where
    T: Clone,
    F: FnMut(&[T]) -> T,
{
    let len = admissible_length(n as u64, ell)?;
    let word = vec![x.clone(); len as usize];
    iterate_op(n, ell, &word, op)
}

/// Fallible variant of [`polyadic_power`].
pub fn try_polyadic_power<T, E, F>(n: usize, x: &T, ell: u64, op: F) -> std::result::Result<T, E>
where
    T: Clone,
    E: From<AlgebraError>,
    F: FnMut(&[T]) -> std::result::Result<T, E>,
{
    let len = admissible_length(n as u64, ell)?;
    let word = vec![x.clone(); len as usize];
    try_iterate_op(n, ell, &word, op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn admissible_lengths() {
        assert_eq!(admissible_length(3, 2), Ok(5));
        assert_eq!(admissible_length(5, 1), Ok(5));
        for k in 1..20 {
            assert_eq!(admissible_length(2, k), Ok(k + 1));
        }
        assert_eq!(admissible_length(1, 3), Err(AlgebraError::InvalidArity(1)));
        assert_eq!(admissible_length(3, 0), Err(AlgebraError::InvalidPower(0)));
        assert_eq!(admissible_length(u64::MAX, 3), Err(AlgebraError::Overflow));
    }

    #[test]
    fn powers_from_lengths() {
        assert_eq!(power_for_length(3, 7), Ok(3));
        assert_eq!(
            power_for_length(3, 6),
            Err(AlgebraError::InadmissibleLength { arity: 3, len: 6 })
        );
        assert_eq!(power_for_length(2, 9), Ok(8));
        assert!(power_for_length(4, 1).is_err());
    }

    #[test]
    fn profiles() {
        let p = ArityProfile::new(2, 3, 3, 1, 1, 1).unwrap();
        assert_eq!((p.add_arity(), p.mul_arity()), (2, 3));
        let p = ArityProfile::new(2, 5, 3, 1, 1, 2).unwrap();
        assert_eq!((p.add_arity(), p.mul_arity()), (2, 5));
        let p = ArityProfile::new(2, 3, 3, 2, 1, 1).unwrap();
        assert_eq!(p.add_arity(), 3);
        assert_eq!(
            ArityProfile::new(2, 3, 4, 1, 1, 1),
            Err(AlgebraError::QuantizationMismatch { ring_side: 2, group_side: 3 })
        );
        assert_eq!(ArityProfile::new(2, 1, 3, 1, 1, 1), Err(AlgebraError::InvalidArity(1)));
    }

    #[test]
    fn iteration_is_left_nested() {
        let sum = |w: &[i64]| w.iter().sum::<i64>();
        assert_eq!(iterate_op(2, 3, &[1, 2, 3, 4], sum), Ok(10));
        // a non-associative op exposes the bracketing: (a - b) - c - d ...
        let sub = |w: &[i64]| w[0] - w[1];
        assert_eq!(iterate_op(2, 3, &[10, 1, 2, 3], sub), Ok(4));
        let tern = |w: &[i64]| w[0] - w[1] + 2 * w[2];
        // op[op[1,2,3],4,5] = op[5,4,5] = 11
        assert_eq!(iterate_op(3, 2, &[1, 2, 3, 4, 5], tern), Ok(11));
        assert_eq!(
            iterate_op(3, 2, &[1, 2, 3, 4], tern),
            Err(AlgebraError::InadmissibleLength { arity: 3, len: 4 })
        );
    }

    #[test]
    fn single_power_is_single_application() {
        let op = |w: &[i64]| w[0] * 7 - w[1] + w[2];
        assert_eq!(iterate_op(3, 1, &[3, 4, 5], op), Ok(op(&[3, 4, 5])));
        assert_eq!(polyadic_power(2, &2i64, 3, |w: &[i64]| w[0] + w[1]), Ok(8));
    }

    proptest! {
        #[test]
        fn power_length_round_trip(n in 2u64..1000, ell in 1u64..100_000) {
            let len = admissible_length(n, ell).unwrap();
            prop_assert_eq!(power_for_length(n, len), Ok(ell));
        }

        #[test]
        fn only_admissible_lengths_invert(n in 2u64..50, len in 2u64..2000) {
            match power_for_length(n, len) {
                Ok(ell) => prop_assert_eq!(admissible_length(n, ell), Ok(len)),
                Err(_) => prop_assert!(len < n || (len - 1) % (n - 1) != 0),
            }
        }
    }
}
