//! Exact integer counting helpers: binomials, multinomials, Stirling numbers
//! of the second kind, factorials, and Euler's totient.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero outside `0..=n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `C(n; parts)`. The parts must sum to `n`.
pub fn multinomial(n: u32, parts: &[u32]) -> BigInt {
    assert_eq!(
        parts.iter().sum::<u32>(),
        n,
        "multinomial parts must sum to n"
    );
    let mut acc = factorial(n);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

/// Stirling number of the second kind `S(n, k)`: the number of partitions of
/// an `n`-set into `k` nonempty blocks.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if n == 0 && k == 0 {
        return BigInt::one();
    }
    if k == 0 || k > n {
        return BigInt::zero();
    }
    // S(n,k) = k*S(n-1,k) + S(n-1,k-1), row by row
    let mut row = vec![BigInt::zero(); k as usize + 1];
    row[0] = BigInt::one(); // S(0,0)
    for _ in 1..=n {
        for j in (1..=k as usize).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k as usize].clone()
}

/// Euler's totient `phi(m)` for `m >= 1`, by trial-division factorization.
/// On prime powers this is `p^k - p^(k-1)` and it is multiplicative across
/// coprime factors.
pub fn totient(m: u64) -> u64 {
    assert!(m >= 1, "totient is defined for m >= 1");
    let mut m = m;
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut pk = 1u64;
            while m % p == 0 {
                m /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1 + (p & 1); // 2, 3, 5, 7, ...
    }
    if m > 1 {
        phi *= m - 1;
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomial_edges() {
        for n in 0..10 {
            assert_eq!(binomial(n, 0), big(1));
            assert_eq!(binomial(n, n), big(1));
        }
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(3, 5), big(0));
    }

    #[test]
    fn multinomial_matches_binomial() {
        assert_eq!(multinomial(7, &[3, 4]), binomial(7, 3));
        assert_eq!(multinomial(6, &[2, 2, 2]), big(90));
        assert_eq!(multinomial(0, &[]), big(1));
    }

    #[test]
    fn stirling_small_table() {
        assert_eq!(stirling2(0, 0), big(1));
        assert_eq!(stirling2(3, 2), big(3));
        assert_eq!(stirling2(4, 2), big(7));
        assert_eq!(stirling2(5, 3), big(25));
        assert_eq!(stirling2(9, 1), big(1));
        assert_eq!(stirling2(9, 9), big(1));
        assert_eq!(stirling2(4, 5), big(0));
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(2), 1);
        assert_eq!(totient(3), 2);
        assert_eq!(totient(8), 4); // 2^3 - 2^2
        assert_eq!(totient(9), 6);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(97), 96);
    }

    #[test]
    fn totient_is_multiplicative_on_coprimes() {
        for m in 1..40u64 {
            for n in 1..40u64 {
                if num_integer::gcd(m, n) == 1 {
                    assert_eq!(totient(m * n), totient(m) * totient(n));
                }
            }
        }
    }
}
