use crate::error::{Error, Result};

pub fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    if m % 2 == 0 {
        return m == 2;
    }
    if m % 3 == 0 {
        return m == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 || m % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Largest prime `<= m`, by trial division.
pub fn largest_prime_leq(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::invalid(format!("no prime <= {m}")));
    }
    Ok((2..=m).rev().find(|&c| is_prime(c)).expect("2 is prime"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(largest_prime_leq(10).unwrap(), 7);
        assert_eq!(largest_prime_leq(2).unwrap(), 2);
        assert_eq!(largest_prime_leq(11).unwrap(), 11);
        assert!(largest_prime_leq(1).is_err());
        assert!(largest_prime_leq(0).is_err());
    }

    #[test]
    fn agrees_with_sieve() {
        const LIMIT: usize = 1_000_000;
        let mut composite = vec![false; LIMIT + 1];
        let mut last = 0;
        let mut largest = vec![0u64; LIMIT + 1];
        for i in 2..=LIMIT {
            if !composite[i] {
                last = i as u64;
                let mut j = i * i;
                while j <= LIMIT {
                    composite[j] = true;
                    j += i;
                }
            }
            largest[i] = last;
        }
        assert_eq!(largest[LIMIT], 999_983);
        assert_eq!(largest_prime_leq(LIMIT as u64).unwrap(), 999_983);
        for m in (2..LIMIT).step_by(9973) {
            assert_eq!(largest_prime_leq(m as u64).unwrap(), largest[m], "m = {m}");
        }
    }
}
