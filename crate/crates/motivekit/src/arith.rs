//! Small integer number theory: factorization, radicals, CRT coefficients.

use num_integer::Integer;

/// Greatest common divisor on unsigned 64-bit integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least common multiple; panics on overflow in debug builds.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Trial-division primality test; adequate for the word-sized inputs used here.
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

/// Prime factorization `n = ∏ p_i^{r_i}` with ascending primes. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut r = 0;
            while n % p == 0 {
                n /= p;
                r += 1;
            }
            out.push((p, r));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product of the distinct prime divisors of `n` (the radical); `radical(1) = 1`.
pub fn radical(n: u64) -> u64 {
    factorize(n).iter().map(|&(p, _)| p).product::<u64>().max(1)
}

/// Modular inverse of `a` modulo `m` for coprime inputs.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// The CRT idempotent for a coprime splitting `n = q·m`: the unique
/// `c mod n` with `c ≡ 1 (mod q)` and `c ≡ 0 (mod m)`.
pub fn crt_idempotent(q: u64, m: u64) -> u64 {
    debug_assert_eq!(gcd(q, m), 1);
    if q == 1 {
        return 0;
    }
    let inv = mod_inverse(m % q, q).expect("coprime by assumption");
    (m % (q * m)) * inv % (q * m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(6), vec![(2, 1), (3, 1)]);
        assert_eq!(factorize(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factorize(8), vec![(2, 3)]);
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(1), 1);
        assert_eq!(radical(12), 6);
        assert_eq!(radical(7), 7);
    }

    #[test]
    fn crt_idempotents() {
        // 6 = 2·3: c ≡ 1 mod 2, 0 mod 3 → 3; c ≡ 1 mod 3, 0 mod 2 → 4.
        assert_eq!(crt_idempotent(2, 3), 3);
        assert_eq!(crt_idempotent(3, 2), 4);
        assert_eq!(crt_idempotent(4, 15), 45 % 60);
        assert_eq!(crt_idempotent(1, 30), 0);
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(5, 1), Some(0));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
