use crate::arith::{kronecker, p_star, smallest_prime_factors};
use crate::elliptic::Level;
use crate::{Error, Result};

use super::BaseTable;

/// `a_1 … a_nmax` of `C(N,p)`, stored at indices `1..=nmax` (index 0 is 0).
///
/// Prime coefficients are `χ(ℓ)·a_ℓ(E_N)` with `χ = (p*/·)`, `a_p = 0`, and
/// the table is filled in by multiplicativity and the Hecke recursion
/// `a_{ℓ^k} = a_ℓ·a_{ℓ^{k−1}} − ℓ·a_{ℓ^{k−2}}` at good primes
/// (`a_{ℓ^k} = a_ℓ^k` at bad ones).
pub fn coefficients(level: Level, p: u64, nmax: usize, base: &BaseTable) -> Result<Vec<i64>> {
    if nmax == 0 {
        return Err(Error::InvalidArgument("nmax must be positive".into()));
    }
    let n_level = level.value();
    crate::elliptic::require_twist_condition(n_level, p)?;
    if base.limit() < nmax as u64 {
        return Err(Error::TableTooShort {
            have: base.limit() as usize,
            need: nmax,
        });
    }
    let ps = p_star(p)?;
    let spf = smallest_prime_factors(nmax);
    let mut a = vec![0i64; nmax + 1];
    a[1] = 1;
    for n in 2..=nmax {
        let l = spf[n] as usize;
        let mut m = n;
        while m % l == 0 {
            m /= l;
        }
        if m > 1 {
            a[n] = a[n / m] * a[m];
            continue;
        }
        let lu = l as u64;
        let al = if lu == p {
            0
        } else {
            kronecker(ps, l as i64) as i64 * base.ap(level, lu).expect("prime within table")
        };
        a[n] = if n == l {
            al
        } else if lu == p || lu == n_level {
            al * a[n / l]
        } else {
            al * a[n / l] - (l as i64) * a[n / l / l]
        };
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;
    use crate::elliptic::{ap, c_curve};

    #[test]
    fn spec_examples() {
        let base = BaseTable::compute(5000);
        let a = coefficients(Level::Eleven, 4079, 4100, &base).unwrap();
        assert_eq!(a[1], 1);
        // (−4079/2) = +1 since −4079 ≡ 1 (mod 8)
        assert_eq!(a[2], -2);
        assert_eq!(a[4079], 0);
        assert_eq!(a[11], -1); // χ(11) = (11/4079) = −1 times split +1
        assert!(coefficients(Level::Eleven, 4079, 0, &base).is_err());
        assert!(coefficients(Level::Eleven, 4079, 6000, &base).is_err());
        assert!(coefficients(Level::Eleven, 7, 100, &base).is_err());
    }

    #[test]
    fn prime_coefficients_match_the_twisted_model() {
        // a_ℓ of C(N,p) computed from the twisted integral model directly
        let base = BaseTable::compute(400);
        for (n, p) in [(11u64, 47u64), (19, 5591), (11, 1009)] {
            let level = Level::try_from(n).unwrap();
            let curve = c_curve(n, p).unwrap();
            let a = coefficients(level, p, 400, &base).unwrap();
            for l in crate::arith::primes_in_range(5, 400) {
                if l == n || l == p {
                    continue;
                }
                assert_eq!(a[l as usize], ap(&curve, l).unwrap(), "C({n},{p}) at {l}");
            }
        }
    }

    #[test]
    fn multiplicativity_and_hasse_over_whole_table() {
        let base = BaseTable::compute(20_000);
        for (level, p) in [
            (Level::Eleven, 47u64),
            (Level::Nineteen, 1129),
            (Level::Eleven, 101),
        ] {
            let a = coefficients(level, p, 20_000, &base).unwrap();
            let n_level = level.value();
            for n in 2..a.len() {
                let f = factorize(n as u64);
                if f.len() == 1 {
                    let (l, k) = f[0];
                    if k == 1 && l != n_level && l != p {
                        assert!((a[n] * a[n]) as u64 <= 4 * l);
                    }
                    if k >= 2 {
                        let lk = n;
                        let l = l as usize;
                        if l as u64 == n_level || l as u64 == p {
                            assert_eq!(a[lk], a[l].pow(k));
                        } else {
                            assert_eq!(a[lk], a[l] * a[lk / l] - l as i64 * a[lk / l / l]);
                        }
                    }
                } else {
                    let (l, k) = f[0];
                    let pk = l.pow(k) as usize;
                    assert_eq!(a[n], a[pk] * a[n / pk]);
                }
            }
        }
    }
}
