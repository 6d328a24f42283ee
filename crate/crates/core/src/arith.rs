//! Sieved arithmetic-function tables and the divisor-sum / Chebyshev
//! primitives built on them.

use std::ops::AddAssign;

use crate::error::{Error, Result};

/// Largest supported table bound.
pub const MAX_TABLE_LIMIT: u64 = 100_000_000;

/// Immutable table of d, μ, φ, λ, Ω, Λ and primality for 1..=limit.
///
/// All per-n vectors are indexed by n itself; slot 0 is padding.
#[derive(Clone, Debug)]
pub struct ArithTable {
    limit: usize,
    d: Vec<u16>,
    mu: Vec<i8>,
    phi: Vec<u32>,
    liouville: Vec<i8>,
    big_omega: Vec<u8>,
    von_mangoldt: Vec<f64>,
    is_prime: Vec<bool>,
    primes: Vec<u32>,
}

/// Builds the table for 1..=limit with a single linear sieve pass.
pub fn build_table(limit: u64) -> Result<ArithTable> {
    ArithTable::new(limit)
}

impl ArithTable {
    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 || limit > MAX_TABLE_LIMIT {
            return Err(Error::Size {
                what: "table limit",
                requested: limit,
                limit: MAX_TABLE_LIMIT,
            });
        }
        let n = limit as usize;
        let mut d = vec![0u16; n + 1];
        let mut mu = vec![0i8; n + 1];
        let mut phi = vec![0u32; n + 1];
        let mut big_omega = vec![0u8; n + 1];
        let mut von_mangoldt = vec![0f64; n + 1];
        let mut is_prime = vec![false; n + 1];
        // exponent of the smallest prime factor, and whether n is a prime power
        let mut spf_exp = vec![0u8; n + 1];
        let mut prime_power = vec![false; n + 1];
        let mut primes: Vec<u32> = Vec::with_capacity(if n < 10 { 4 } else { n / 8 });

        d[1] = 1;
        mu[1] = 1;
        phi[1] = 1;
        for i in 2..=n {
            if d[i] == 0 {
                is_prime[i] = true;
                primes.push(i as u32);
                d[i] = 2;
                mu[i] = -1;
                phi[i] = (i - 1) as u32;
                big_omega[i] = 1;
                spf_exp[i] = 1;
                prime_power[i] = true;
                von_mangoldt[i] = (i as f64).ln();
            }
            for &p in &primes {
                let p = p as usize;
                let m = match i.checked_mul(p) {
                    Some(m) if m <= n => m,
                    _ => break,
                };
                big_omega[m] = big_omega[i] + 1;
                if i % p == 0 {
                    // p is the smallest prime factor of i
                    let e = spf_exp[i] as u16;
                    spf_exp[m] = spf_exp[i] + 1;
                    d[m] = d[i] / (e + 1) * (e + 2);
                    mu[m] = 0;
                    phi[m] = phi[i] * p as u32;
                    if prime_power[i] {
                        prime_power[m] = true;
                        von_mangoldt[m] = von_mangoldt[i];
                    }
                    break;
                }
                spf_exp[m] = 1;
                d[m] = d[i] * 2;
                mu[m] = -mu[i];
                phi[m] = phi[i] * (p as u32 - 1);
            }
        }
        let liouville = big_omega
            .iter()
            .map(|&w| if w % 2 == 0 { 1 } else { -1 })
            .collect();

        Ok(Self {
            limit: n,
            d,
            mu,
            phi,
            liouville,
            big_omega,
            von_mangoldt,
            is_prime,
            primes,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit as u64
    }

    /// Number of divisors. Panics if `n` is 0 or beyond the limit, like
    /// every per-n accessor here.
    pub fn d(&self, n: u64) -> u32 {
        self.d[self.index(n)] as u32
    }

    pub fn mu(&self, n: u64) -> i8 {
        self.mu[self.index(n)]
    }

    pub fn phi(&self, n: u64) -> u64 {
        self.phi[self.index(n)] as u64
    }

    pub fn liouville(&self, n: u64) -> i8 {
        self.liouville[self.index(n)]
    }

    pub fn big_omega(&self, n: u64) -> u8 {
        self.big_omega[self.index(n)]
    }

    pub fn von_mangoldt(&self, n: u64) -> f64 {
        self.von_mangoldt[self.index(n)]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n as usize <= self.limit && self.is_prime[n as usize]
    }

    /// All primes up to the limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    /// π(x) for x within the table.
    pub fn prime_count(&self, x: u64) -> usize {
        self.primes.partition_point(|&p| (p as u64) <= x)
    }

    /// Primes ≤ x (clamped to the table).
    pub fn primes_up_to(&self, x: u64) -> &[u32] {
        &self.primes[..self.prime_count(x)]
    }

    #[inline]
    fn index(&self, n: u64) -> usize {
        assert!(
            n >= 1 && n as usize <= self.limit,
            "n = {n} outside table 1..={}",
            self.limit
        );
        n as usize
    }

    pub(crate) fn check_covers(&self, what: &'static str, n: u64) -> Result<()> {
        if n > self.limit as u64 {
            Err(Error::OutOfRange {
                what,
                requested: n,
                limit: self.limit as u64,
            })
        } else {
            Ok(())
        }
    }
}

/// bₙ = Σ_{m|n} aₘ, where `a[i]` holds a_{i+1}; the result uses the same
/// offset. Harmonic-sum loop, O(N log N).
pub fn divisor_convolve_with_one<T>(a: &[T]) -> Result<Vec<T>>
where
    T: Copy + Default + AddAssign,
{
    if a.len() as u64 > MAX_TABLE_LIMIT {
        return Err(Error::Size {
            what: "sequence length",
            requested: a.len() as u64,
            limit: MAX_TABLE_LIMIT,
        });
    }
    let n = a.len();
    let mut b = vec![T::default(); n];
    for m in 1..=n {
        let am = a[m - 1];
        let mut k = m;
        while k <= n {
            b[k - 1] += am;
            k += m;
        }
    }
    Ok(b)
}

/// ⌊x⌋ for the nonnegative real bounds used by the Chebyshev sums.
fn floor_bound(x: f64, what: &'static str, table: &ArithTable) -> Result<u64> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!("{what} needs a finite x ≥ 0, got {x}")));
    }
    let n = x.floor() as u64;
    table.check_covers(what, n)?;
    Ok(n)
}

/// ϑ(x) = Σ_{p≤x} log p.
pub fn chebyshev_theta(x: f64, table: &ArithTable) -> Result<f64> {
    let n = floor_bound(x, "chebyshev_theta", table)?;
    Ok(table
        .primes_up_to(n)
        .iter()
        .map(|&p| (p as f64).ln())
        .sum())
}

/// ψ(x) = Σ_{n≤x} Λ(n).
pub fn chebyshev_psi(x: f64, table: &ArithTable) -> Result<f64> {
    let n = floor_bound(x, "chebyshev_psi", table)? as usize;
    Ok(table.von_mangoldt[1..=n].iter().sum())
}

/// ψ(x) through Σ_m ϑ(x^{1/m}), the prime-power decomposition.
pub fn chebyshev_psi_via_theta(x: f64, table: &ArithTable) -> Result<f64> {
    let n = floor_bound(x, "chebyshev_psi_via_theta", table)?;
    let mut total = 0.0;
    for m in 1u32.. {
        // largest r with r^m ≤ n, corrected for floating error in the root
        let mut r = (n as f64).powf(1.0 / m as f64).round() as u64;
        while r > 0 && r.checked_pow(m).map_or(true, |v| v > n) {
            r -= 1;
        }
        while (r + 1).checked_pow(m).is_some_and(|v| v <= n) {
            r += 1;
        }
        if r < 2 {
            break;
        }
        total += chebyshev_theta(r as f64, table)?;
    }
    Ok(total)
}

/// Σ_{p≤x} 1/p.
pub fn prime_reciprocal_sum(x: f64, table: &ArithTable) -> Result<f64> {
    if x < 2.0 {
        return Err(Error::domain(format!(
            "prime_reciprocal_sum needs x ≥ 2, got {x}"
        )));
    }
    let n = floor_bound(x, "prime_reciprocal_sum", table)?;
    Ok(table
        .primes_up_to(n)
        .iter()
        .map(|&p| 1.0 / p as f64)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Trial-division factorisation, the independent oracle for the sieve.
    fn factor(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn table_of_one() {
        let t = build_table(1).unwrap();
        assert_eq!(t.d(1), 1);
        assert_eq!(t.mu(1), 1);
        assert_eq!(t.phi(1), 1);
        assert_eq!(t.von_mangoldt(1), 0.0);
        assert_eq!(t.liouville(1), 1);
        assert!(t.primes().is_empty());
    }

    #[test]
    fn size_guard() {
        assert!(matches!(build_table(0), Err(Error::Size { .. })));
        assert!(matches!(
            build_table(MAX_TABLE_LIMIT + 1),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn von_mangoldt_examples() {
        let t = build_table(125).unwrap();
        assert_eq!(t.von_mangoldt(12), 0.0);
        assert!((t.von_mangoldt(125) - 5f64.ln()).abs() < 1e-15);
        assert!((t.von_mangoldt(64) - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn divisor_counts_match_series_display() {
        let t = build_table(7).unwrap();
        let d: Vec<u32> = (1..=7).map(|n| t.d(n)).collect();
        assert_eq!(d, vec![1, 2, 2, 3, 2, 4, 2]);
    }

    #[test]
    fn sieve_matches_trial_division_to_ten_thousand() {
        let t = build_table(10_000).unwrap();
        for n in 1..=10_000u64 {
            let f = factor(n);
            let d: u32 = f.iter().map(|&(_, e)| e + 1).product();
            let omega: u32 = f.iter().map(|&(_, e)| e).sum();
            let mu = if f.iter().any(|&(_, e)| e > 1) {
                0
            } else if f.len() % 2 == 0 {
                1
            } else {
                -1
            };
            let phi: u64 = f
                .iter()
                .map(|&(p, e)| (p - 1) * p.pow(e - 1))
                .product();
            let lam = if f.len() == 1 { (f[0].0 as f64).ln() } else { 0.0 };
            assert_eq!(t.d(n), d, "d({n})");
            assert_eq!(t.big_omega(n) as u32, omega, "Ω({n})");
            assert_eq!(t.mu(n), mu, "μ({n})");
            assert_eq!(t.phi(n), phi, "φ({n})");
            assert_eq!(t.liouville(n), if omega % 2 == 0 { 1 } else { -1 });
            assert_eq!(t.von_mangoldt(n), lam, "Λ({n})");
            assert_eq!(t.is_prime(n), f.len() == 1 && f[0].1 == 1);
        }
    }

    #[test]
    fn divisor_sum_invariants() {
        let t = build_table(3000).unwrap();
        for n in 1..=3000u64 {
            let divs: Vec<u64> = (1..=n).filter(|m| n % m == 0).collect();
            assert_eq!(t.d(n) as usize, divs.len());
            let mu_sum: i64 = divs.iter().map(|&m| t.mu(m) as i64).sum();
            assert_eq!(mu_sum, (n == 1) as i64);
            let phi_sum: u64 = divs.iter().map(|&m| t.phi(m)).sum();
            assert_eq!(phi_sum, n);
            let lam_sum: f64 = divs.iter().map(|&m| t.von_mangoldt(m)).sum();
            assert!((lam_sum - (n as f64).ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn multiplicativity_on_random_coprime_pairs() {
        let limit = 1_000_000u64;
        let t = build_table(limit).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(307);
        let mut checked = 0;
        while checked < 200 {
            let a = rng.gen_range(1..=1000u64);
            let b = rng.gen_range(1..=1000u64);
            if gcd(a, b) != 1 {
                continue;
            }
            let ab = a * b;
            assert_eq!(t.d(ab), t.d(a) * t.d(b));
            assert_eq!(t.mu(ab), t.mu(a) * t.mu(b));
            assert_eq!(t.phi(ab), t.phi(a) * t.phi(b));
            assert_eq!(t.liouville(ab), t.liouville(a) * t.liouville(b));
            checked += 1;
        }
    }

    #[test]
    fn convolution_examples() {
        let t = build_table(2000).unwrap();
        let ones = vec![1u32; 2000];
        let b = divisor_convolve_with_one(&ones).unwrap();
        for n in 1..=2000u64 {
            assert_eq!(b[n as usize - 1], t.d(n));
        }
        let mu: Vec<i64> = (1..=2000).map(|n| t.mu(n) as i64).collect();
        let b = divisor_convolve_with_one(&mu).unwrap();
        assert_eq!(b[0], 1);
        assert!(b[1..].iter().all(|&v| v == 0));
        let lam: Vec<f64> = (1..=2000).map(|n| t.von_mangoldt(n)).collect();
        let b = divisor_convolve_with_one(&lam).unwrap();
        for (i, v) in b.iter().enumerate() {
            assert!((v - ((i + 1) as f64).ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn chebyshev_small_values() {
        let t = build_table(100).unwrap();
        assert_eq!(chebyshev_theta(1.0, &t).unwrap(), 0.0);
        assert_eq!(chebyshev_theta(2.0, &t).unwrap(), 2f64.ln());
        assert!((chebyshev_theta(10.0, &t).unwrap() - 210f64.ln()).abs() < 1e-13);
        assert!((chebyshev_theta(10.9, &t).unwrap() - 210f64.ln()).abs() < 1e-13);
        assert_eq!(chebyshev_psi(1.0, &t).unwrap(), 0.0);
        assert_eq!(chebyshev_psi(0.5, &t).unwrap(), 0.0);
        let psi8 = 3.0 * 2f64.ln() + 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((chebyshev_psi(8.0, &t).unwrap() - psi8).abs() < 1e-13);
        assert!(matches!(
            chebyshev_theta(101.0, &t),
            Err(Error::OutOfRange { .. })
        ));
        assert!(chebyshev_psi(-1.0, &t).is_err());
    }

    #[test]
    fn psi_two_routes_agree() {
        let t = build_table(100_000).unwrap();
        for &x in &[2.0, 8.0, 100.0, 1024.0, 4096.0, 99_999.5] {
            let a = chebyshev_psi(x, &t).unwrap();
            let b = chebyshev_psi_via_theta(x, &t).unwrap();
            assert!((a - b).abs() <= 1e-9 * a.max(1.0), "x={x}: {a} vs {b}");
            assert!(a - chebyshev_theta(x, &t).unwrap() >= 0.0);
        }
    }

    #[test]
    fn theta_below_pi_log_x() {
        let t = build_table(100_000).unwrap();
        for &x in &[10.0, 100.0, 1000.0, 10_000.0, 100_000.0] {
            let theta = chebyshev_theta(x, &t).unwrap();
            let pi = t.prime_count(x as u64) as f64;
            assert!(theta / x <= pi * x.ln() / x);
        }
    }

    #[test]
    fn prime_reciprocals() {
        let t = build_table(100).unwrap();
        assert_eq!(prime_reciprocal_sum(2.0, &t).unwrap(), 0.5);
        let want = 1.0 / 2.0 + 1.0 / 3.0 + 1.0 / 5.0 + 1.0 / 7.0;
        assert!((prime_reciprocal_sum(10.0, &t).unwrap() - want).abs() < 1e-15);
        assert!(prime_reciprocal_sum(1.5, &t).is_err());
    }
}
