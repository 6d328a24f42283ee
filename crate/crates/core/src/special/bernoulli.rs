use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest K accepted by [`bernoulli_numbers`] (so B₀..B₄₀₀).
pub const MAX_BERNOULLI_COUNT: usize = 200;

/// Exact Bernoulli numbers B₀..B_{2K} with B₁ = −1/2, plus f64 images.
///
/// The f64 image of |B_m| overflows to infinity beyond m ≈ 260.
#[derive(Clone, Debug)]
pub struct BernoulliCache {
    exact: Vec<BigRational>,
    approx: Vec<f64>,
}

impl BernoulliCache {
    /// Largest index held, 2K.
    pub fn max_index(&self) -> usize {
        self.exact.len() - 1
    }

    pub fn exact(&self, m: usize) -> &BigRational {
        &self.exact[m]
    }

    pub fn approx(&self, m: usize) -> f64 {
        self.approx[m]
    }

    pub fn exact_all(&self) -> &[BigRational] {
        &self.exact
    }
}

/// B₀..B_{2K} from Σ_{j=0}^{m} C(m+1, j) B_j = 0 (m ≥ 1).
pub fn bernoulli_numbers(count: usize) -> Result<BernoulliCache> {
    if count > MAX_BERNOULLI_COUNT {
        return Err(Error::Size {
            what: "Bernoulli count",
            requested: count as u64,
            limit: MAX_BERNOULLI_COUNT as u64,
        });
    }
    let top = 2 * count;
    let mut exact: Vec<BigRational> = Vec::with_capacity(top + 1);
    exact.push(BigRational::one());
    for m in 1..=top {
        if m > 1 && m % 2 == 1 {
            exact.push(BigRational::zero());
            continue;
        }
        // Σ_{j<m} C(m+1, j) B_j, skipping the vanishing odd indices
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (j, bj) in exact.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * BigRational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        exact.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    let approx = exact
        .iter()
        .map(|b| b.to_f64().unwrap_or(f64::NAN))
        .collect();
    Ok(BernoulliCache { exact, approx })
}

fn small_table() -> &'static BernoulliCache {
    static TABLE: OnceLock<BernoulliCache> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_numbers(60).expect("within guard"))
}

/// B_m as f64 for m ≤ 120, from a lazily built shared cache.
pub fn bernoulli_f64(m: usize) -> f64 {
    small_table().approx(m)
}

/// sₖ = ½ + Σ_{n=1}^{k} (−1)^{n+1} B_{2n}/(2n) for k = 1..=K.
///
/// Euler's series for γ. It diverges: the values approach γ only briefly
/// before the Bernoulli growth takes over.
pub fn gamma_bernoulli_partial_sums(count: usize) -> Result<Vec<f64>> {
    const MAX: usize = 40;
    if count > MAX {
        return Err(Error::Size {
            what: "γ partial-sum count",
            requested: count as u64,
            limit: MAX as u64,
        });
    }
    let cache = bernoulli_numbers(count)?;
    let mut acc = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut out = Vec::with_capacity(count);
    for n in 1..=count {
        let term = cache.exact(2 * n) / BigRational::from_integer(BigInt::from(2 * n));
        if n % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
        out.push(acc.to_f64().unwrap_or(f64::NAN));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::EULER_GAMMA;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Akiyama–Tanigawa, an independent route (it yields B₁ = +1/2).
    fn akiyama_tanigawa(top: usize) -> Vec<BigRational> {
        let mut a: Vec<BigRational> = Vec::new();
        let mut out = Vec::new();
        for m in 0..=top {
            a.push(rat(1, m as i64 + 1));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
            }
            out.push(a[0].clone());
        }
        out
    }

    #[test]
    fn leading_values() {
        let c = bernoulli_numbers(6).unwrap();
        assert_eq!(c.max_index(), 12);
        assert_eq!(c.exact(0), &rat(1, 1));
        assert_eq!(c.exact(1), &rat(-1, 2));
        assert_eq!(c.exact(2), &rat(1, 6));
        assert_eq!(c.exact(4), &rat(-1, 30));
        assert_eq!(c.exact(6), &rat(1, 42));
        assert_eq!(c.exact(7), &rat(0, 1));
        assert_eq!(c.exact(12), &rat(-691, 2730));
    }

    #[test]
    fn recurrence_holds_exactly() {
        let c = bernoulli_numbers(40).unwrap();
        for m in 1..=c.max_index() - 1 {
            let mut acc = BigRational::zero();
            let mut binom = BigInt::one();
            for j in 0..=m {
                acc += c.exact(j) * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            assert!(acc.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn agrees_with_akiyama_tanigawa() {
        let c = bernoulli_numbers(30).unwrap();
        let at = akiyama_tanigawa(60);
        for m in 0..=60 {
            if m == 1 {
                assert_eq!(at[1], -c.exact(1).clone());
            } else {
                assert_eq!(&at[m], c.exact(m), "B_{m}");
            }
        }
    }

    #[test]
    fn size_guard() {
        assert!(bernoulli_numbers(MAX_BERNOULLI_COUNT).is_ok());
        assert!(matches!(
            bernoulli_numbers(MAX_BERNOULLI_COUNT + 1),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn float_images() {
        assert!((bernoulli_f64(12) + 691.0 / 2730.0).abs() < 1e-16);
        assert_eq!(bernoulli_f64(9), 0.0);
    }

    #[test]
    fn gamma_series_is_asymptotic() {
        let s = gamma_bernoulli_partial_sums(40).unwrap();
        assert!((s[0] - (0.5 + 1.0 / 12.0)).abs() < 1e-15);
        assert!((s[1] - (0.5 + 1.0 / 12.0 + 1.0 / 120.0)).abs() < 1e-15);
        let errs: Vec<f64> = s.iter().map(|v| (v - EULER_GAMMA).abs()).collect();
        let best = errs
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        assert!(best < 3, "best index {best}");
        // strictly growing error from there on, without bound
        for w in errs[best..].windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!(errs[39] > 1e20);
        assert!(gamma_bernoulli_partial_sums(41).is_err());
    }
}
