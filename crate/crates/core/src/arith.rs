//! Small integer arithmetic helpers: primes, factorization, p-parts.
//!
//! Everything here operates on `u64`; group orders never exceed the element
//! cap, so trial division is plenty.

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Panics on overflow (unreachable at desk scale).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending. π(n) in the usual notation.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// The p-part of `n`: the largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut part = 1;
    let mut n = n;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

/// The p'-part of `n`: `n` with all factors of `p` removed.
pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

/// True iff `n` is a power of `p` (including p^0 = 1).
pub fn is_p_power(n: u64, p: u64) -> bool {
    p_part(n, p) == n
}

/// True iff every prime divisor of `n` lies in `set`.
pub fn is_sigma_number(n: u64, set: &[u64]) -> bool {
    prime_divisors(n).iter().all(|p| set.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_basics() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(48), vec![(2, 4), (3, 1)]);
        assert_eq!(factorize(1092), vec![(2, 2), (3, 1), (7, 1), (13, 1)]);
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
    }

    #[test]
    fn parts() {
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(p_part(48, 3), 3);
        assert_eq!(p_part(48, 5), 1);
        assert_eq!(p_prime_part(48, 2), 3);
        assert!(is_p_power(8, 2));
        assert!(is_p_power(1, 7));
        assert!(!is_p_power(12, 2));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(gcd(7, 0), 7);
    }
}
