//! Factored-integer arithmetic, deterministic primality, and factorization.
//!
//! Everything here works on u128 values with u64 prime factors, which covers
//! every order that occurs in the simple-group scans (largest is below 2^80).

use std::fmt;

/// A positive integer stored as its prime factorization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredInteger {
    /// (prime, exponent) pairs with primes strictly ascending, exponents >= 1.
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn one() -> FactoredInteger {
        FactoredInteger { factors: vec![] }
    }

    pub fn from_factors(factors: Vec<(u64, u32)>) -> FactoredInteger {
        for w in factors.windows(2) {
            assert!(w[0].0 < w[1].0, "primes must be strictly ascending");
        }
        for &(p, e) in &factors {
            assert!(e >= 1 && is_prime(p), "{p}^{e} is not a prime power");
        }
        FactoredInteger { factors }
    }

    pub fn factor(n: u128) -> FactoredInteger {
        assert!(n >= 1, "only positive integers can be factored");
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut primes: Vec<u64> = Vec::new();
        collect_prime_factors(n, &mut primes);
        primes.sort_unstable();
        primes.dedup();
        for p in primes {
            let mut e = 0u32;
            let mut m = n;
            while m % p as u128 == 0 {
                m /= p as u128;
                e += 1;
            }
            factors.push((p, e));
        }
        FactoredInteger { factors }
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn value(&self) -> u128 {
        self.factors
            .iter()
            .map(|&(p, e)| (p as u128).pow(e))
            .product()
    }

    /// Number of distinct prime divisors, π(m).
    pub fn prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &FactoredInteger) -> FactoredInteger {
        let mut out: Vec<(u64, u32)> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let a = self.factors.get(i);
            let b = other.factors.get(j);
            match (a, b) {
                (Some(&(p, e)), Some(&(q, f))) if p == q => {
                    out.push((p, e + f));
                    i += 1;
                    j += 1;
                }
                (Some(&(p, e)), Some(&(q, _))) if p < q => {
                    out.push((p, e));
                    i += 1;
                }
                (Some(_), Some(&(q, f))) => {
                    out.push((q, f));
                    j += 1;
                }
                (Some(&(p, e)), None) => {
                    out.push((p, e));
                    i += 1;
                }
                (None, Some(&(q, f))) => {
                    out.push((q, f));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        FactoredInteger { factors: out }
    }

    pub fn gcd(&self, other: &FactoredInteger) -> FactoredInteger {
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let f = other.exponent_of(p);
                if f == 0 {
                    None
                } else {
                    Some((p, e.min(f)))
                }
            })
            .collect();
        FactoredInteger { factors }
    }

    /// Exact division; panics unless other divides self.
    pub fn div_exact(&self, other: &FactoredInteger) -> FactoredInteger {
        assert!(other.divides(self), "inexact division");
        let factors = self
            .factors
            .iter()
            .filter_map(|&(p, e)| {
                let f = other.exponent_of(p);
                if e == f {
                    None
                } else {
                    Some((p, e - f))
                }
            })
            .collect();
        FactoredInteger { factors }
    }

    pub fn divides(&self, other: &FactoredInteger) -> bool {
        self.factors
            .iter()
            .all(|&(p, e)| other.exponent_of(p) >= e)
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<u128> {
        let mut out: Vec<u128> = vec![1];
        for &(p, e) in &self.factors {
            let prev = out.clone();
            let mut pe: u128 = 1;
            for _ in 0..e {
                pe *= p as u128;
                out.extend(prev.iter().map(|d| d * pe));
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        r += 1;
    }
    // This witness set is known to be exact below 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// If n = p^k for a prime p and k >= 1, return (p, k).
pub fn prime_power_base(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    if is_prime(n) {
        return Some((n, 1));
    }
    // The base must be the smallest prime factor; trial roots suffice because
    // a composite n = p^k with k >= 2 has p <= n^(1/2) <= 2^32.
    for k in (2..=63u32).rev() {
        let p = integer_kth_root(n, k);
        if p >= 2 && p.checked_pow(k) == Some(n) && is_prime(p) {
            return Some((p, k));
        }
    }
    None
}

fn integer_kth_root(n: u64, k: u32) -> u64 {
    let mut r = (n as f64).powf(1.0 / k as f64).round() as u64;
    while r > 1 && r.checked_pow(k).map_or(true, |v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(k).map_or(false, |v| v <= n) {
        r += 1;
    }
    r
}

fn collect_prime_factors(mut n: u128, out: &mut Vec<u64>) {
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p as u128 == 0 {
            out.push(p);
            n /= p as u128;
        }
    }
    if n == 1 {
        return;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if m <= u64::MAX as u128 && is_prime(m as u64) {
            out.push(m as u64);
            continue;
        }
        let d = pollard_rho(m);
        stack.push(d);
        stack.push(m / d);
    }
}

/// Find a nontrivial factor of composite odd n (Brent's variant).
fn pollard_rho(n: u128) -> u128 {
    assert!(n > 1 && n % 2 != 0);
    let gcd = |mut a: u128, mut b: u128| {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    assert!(n < 1u128 << 126, "modulus too large");
    let mulm = |mut a: u128, mut b: u128| -> u128 {
        // Double-and-add keeps intermediates below 2*n; slow but safe, and
        // this path only runs for factors that survive trial division.
        a %= n;
        b %= n;
        let mut acc = 0u128;
        while b > 0 {
            if b & 1 == 1 {
                acc = (acc + a) % n;
            }
            a = (a + a) % n;
            b >>= 1;
        }
        acc
    };
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mulm(x, x) + c) % n;
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_range() {
        let primes: Vec<u64> = (0..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]
        );
        assert!(is_prime(16515073));
        assert!(is_prime(2752513));
        assert!(!is_prime(16515075));
    }

    #[test]
    fn factor_round_trip() {
        for n in [1u128, 2, 2520, 40320, 50803200, 19998720, 16515073 * 16515074] {
            let f = FactoredInteger::factor(n);
            assert_eq!(f.value(), n);
        }
        let f = FactoredInteger::factor(2520);
        assert_eq!(f.factors(), &[(2, 3), (3, 2), (5, 1), (7, 1)]);
        assert_eq!(f.prime_count(), 4);
        assert_eq!(FactoredInteger::one().prime_count(), 0);
    }

    #[test]
    fn mul_gcd_div() {
        let a = FactoredInteger::factor(360);
        let b = FactoredInteger::factor(84);
        assert_eq!(a.mul(&b).value(), 360 * 84);
        assert_eq!(a.gcd(&b).value(), 12);
        assert_eq!(a.div_exact(&FactoredInteger::factor(45)).value(), 8);
        assert!(FactoredInteger::factor(12).divides(&a));
        assert!(!FactoredInteger::factor(7).divides(&a));
    }

    #[test]
    fn divisor_enumeration() {
        let d = FactoredInteger::factor(12).divisors();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(FactoredInteger::one().divisors(), vec![1]);
        // 2*3^3*7^2 has 2*4*3 = 24 divisors
        assert_eq!(FactoredInteger::factor(2 * 27 * 49).divisors().len(), 24);
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_base(64), Some((2, 6)));
        assert_eq!(prime_power_base(125), Some((5, 3)));
        assert_eq!(prime_power_base(27), Some((3, 3)));
        assert_eq!(prime_power_base(13), Some((13, 1)));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(1), None);
    }

    #[test]
    fn display_form() {
        assert_eq!(FactoredInteger::factor(50803200).to_string(), "2^9*3^4*5^2*7^2");
        assert_eq!(FactoredInteger::one().to_string(), "1");
    }
}
