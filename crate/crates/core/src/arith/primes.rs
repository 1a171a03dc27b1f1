use crate::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Miller-Rabin with the first twelve prime bases, which is deterministic
/// for every `n < 3.3·10^24` and therefore for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in `[lo, hi]`, ascending, by a sieve segmented to the range.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let root = (hi as f64).sqrt() as u64 + 1;
    let base = simple_sieve(root);
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &q in &base {
        if q * q > hi {
            break;
        }
        let mut start = (q * q).max(lo.div_ceil(q) * q);
        while start <= hi {
            composite[(start - lo) as usize] = true;
            start += q;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    primes_in_range(2, n)
}

fn simple_sieve(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Smallest-prime-factor table for `0..=n` (entries 0 and 1 are 0).
pub fn smallest_prime_factors(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Trial-division factorisation of `n ≥ 1`; all factored inputs in this
/// crate are small.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            let mut e = 0;
            while n.is_multiple_of(q) {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(q, _)| q).collect()
}

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && factorize(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn census_primes() {
        assert!(is_prime(1009));
        assert!(is_prime(24359));
        assert!(!is_prime(1));
    }

    #[test]
    fn large_primes_and_pseudoprimes() {
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(!is_prime(3_825_123_056_546_413_051));
        assert!(is_prime((1 << 61) - 1));
    }

    #[test]
    fn ranges() {
        assert_eq!(primes_in_range(2, 12), vec![2, 3, 5, 7, 11]);
        assert_eq!(primes_in_range(4079, 4079), vec![4079]);
        assert!(primes_in_range(24, 28).is_empty());
        assert!(primes_in_range(10, 3).is_empty());
        let segment = primes_in_range(1_000_000, 1_001_000);
        assert!(segment.iter().all(|&p| is_prime(p)));
        assert_eq!(
            segment.len(),
            (1_000_000..=1_001_000).filter(|&n| is_prime(n)).count()
        );
    }

    #[test]
    fn pi_of_three_hundred_thousand() {
        // plain Eratosthenes oracle
        let n = 300_000usize;
        let mut mark = vec![true; n + 1];
        mark[0] = false;
        mark[1] = false;
        for i in 2..=n {
            if mark[i] {
                for j in (2 * i..=n).step_by(i) {
                    mark[j] = false;
                }
            }
        }
        let expected = mark.iter().filter(|&&b| b).count();
        assert_eq!(expected, 25_997);
        assert_eq!(primes_up_to(300_000).len(), expected);
    }

    #[test]
    fn spf_and_factorize() {
        let spf = smallest_prime_factors(100);
        assert_eq!(spf[97], 97);
        assert_eq!(spf[91], 7);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_squarefree(-39));
        assert!(!is_squarefree(18));
        assert!(!is_squarefree(0));
    }
}
