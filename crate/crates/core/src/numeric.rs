//! Small integer helpers.

use crate::error::{Error, Result};

/// Deterministic trial-division primality test.
pub fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rejects non-primes with a precondition error.
pub fn require_prime(p: i64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not prime")))
    }
}

/// p^r with overflow detection.
pub fn checked_pow(p: i64, r: u32) -> Result<i64> {
    p.checked_pow(r)
        .ok_or_else(|| Error::Precondition(format!("{p}^{r} overflows i64")))
}

/// Primes in `lo..=hi`.
pub fn primes_between(lo: i64, hi: i64) -> Vec<i64> {
    (lo.max(2)..=hi).filter(|&p| is_prime(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(primes_between(0, 20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(!is_prime(1) && !is_prime(-7) && is_prime(31));
        assert!(require_prime(9).is_err());
        assert_eq!(checked_pow(5, 3).unwrap(), 125);
        assert!(checked_pow(10, 30).is_err());
    }
}
