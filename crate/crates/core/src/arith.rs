//! Small integer number theory used across the crate.

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

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `n`; requires gcd(a, n) = 1. Order mod 1 is 1.
pub fn multiplicative_order(a: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut t = 1;
    let mut x = a % n;
    while x != 1 {
        x = ((x as u128 * a as u128) % n as u128) as u64;
        t += 1;
    }
    t
}

/// Returns `Some(p, e)` when `q = p^e` for a prime `p`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

/// Binomial coefficient with the convention C(a, b) = 0 for b < 0 or b > a (a ≥ 0).
pub fn binomial(a: i64, b: i64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if b < 0 || a < 0 || b > a {
        return BigInt::from(0);
    }
    let b = b.min(a - b);
    let mut acc = BigInt::from(1);
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// The quadratic residues mod an odd prime `n`, sorted.
pub fn quadratic_residues(n: u64) -> Vec<u64> {
    let mut r: Vec<u64> = (1..=(n - 1) / 2).map(|x| x * x % n).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// floor(sqrt(n)).
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_orders() {
        assert!(is_prime(2) && is_prime(23) && !is_prime(1) && !is_prime(91));
        assert_eq!(multiplicative_order(4, 5), 2);
        assert_eq!(multiplicative_order(3, 23), 11);
        assert_eq!(multiplicative_order(9, 91), 3);
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(2, -1), 0.into());
        assert_eq!(binomial(2, 3), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
    }

    #[test]
    fn residues_mod_23() {
        assert_eq!(
            quadratic_residues(23),
            vec![1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18]
        );
        assert_eq!(quadratic_residues(13), vec![1, 3, 4, 9, 10, 12]);
        assert_eq!(isqrt(64), 8);
        assert_eq!(isqrt(63), 7);
    }
}
