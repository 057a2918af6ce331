//! Integer types usable as a γ-set count.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, Unsigned};

use crate::error::{Error, Result};

/// An unsigned integer with checked arithmetic.
///
/// Implemented for every primitive unsigned integer and for
/// [`num_bigint::BigUint`]. Fixed-width types report overflow as
/// [`Error::Overflow`] instead of wrapping.
pub trait Count:
    Unsigned
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromPrimitive
    + Clone
    + Ord
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    fn from_usize_checked(v: usize) -> Result<Self> {
        Self::from_usize(v).ok_or(Error::Overflow)
    }

    fn add_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn mul_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    fn incr(&mut self) -> Result<()> {
        *self = self.add_checked(&Self::one())?;
        Ok(())
    }
}

impl<T> Count for T where
    T: Unsigned
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + FromPrimitive
        + Clone
        + Ord
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// `C(n, k)` computed by the multiplicative recurrence, each step exact.
///
/// Every intermediate value is some `C(n, i)` with `i <= k`, so this fails
/// with [`Error::Overflow`] only when the result itself does not fit in `C`.
pub fn binomial<C: Count>(n: usize, k: usize) -> Result<C> {
    if k > n {
        return Ok(C::zero());
    }
    let k = k.min(n - k);
    let mut acc = C::one();
    for i in 0..k {
        // acc = C(n, i); acc * (n - i) / (i + 1) is integral and, once the
        // fraction is reduced, den divides acc.
        let g = gcd(n - i, i + 1);
        let num = C::from_usize_checked((n - i) / g)?;
        let den = C::from_usize_checked((i + 1) / g)?;
        acc = acc.checked_div(&den).ok_or(Error::Overflow)?.mul_checked(&num)?;
    }
    Ok(acc)
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial::<u64>(6, 3).unwrap(), 20);
        assert_eq!(binomial::<u64>(5, 0).unwrap(), 1);
        assert_eq!(binomial::<u64>(5, 5).unwrap(), 1);
        assert_eq!(binomial::<u64>(3, 4).unwrap(), 0);
        assert_eq!(binomial::<u8>(10, 5).unwrap(), 252);
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40 {
            for k in 1..n {
                let lhs = binomial::<u128>(n, k).unwrap();
                let rhs = binomial::<u128>(n - 1, k - 1).unwrap() + binomial::<u128>(n - 1, k).unwrap();
                assert_eq!(lhs, rhs, "C({n},{k})");
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(binomial::<u8>(20, 10), Err(Error::Overflow));
        assert_eq!(binomial::<u128>(200, 100), Err(Error::Overflow));
        let exact = binomial::<BigUint>(200, 100).unwrap();
        assert_eq!(
            exact.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }

    #[test]
    fn full_capacity_fits_in_u128() {
        assert_eq!(
            binomial::<u128>(128, 64).unwrap(),
            23951146041928082866135587776380551750
        );
    }

    #[test]
    fn incr_detects_wrap() {
        let mut c: u8 = 254;
        c.incr().unwrap();
        assert_eq!(c, 255);
        assert_eq!(c.incr(), Err(Error::Overflow));
    }
}
