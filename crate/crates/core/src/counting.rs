//! Exact counts of complete cobweb posets and level-typed relations.
//!
//! Everything here is arbitrary precision; no floating point is involved.
//!
//! The number of surjections `[n] → [k]` is evaluated two ways, as
//! `k!·S(n,k)` and by inclusion–exclusion `Σ_r (−1)^{k−r} C(k,r) r^n`.
//! A variant sometimes printed as `Σ_r (−1)^{n−k} r^n C(n,r)` does not
//! alternate and sums binomials over `n`; it disagrees with `k!·S(n,k)`
//! (for `n = k = 2` it gives 6 rather than 2) and is not computed.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact non-negative count.
pub type BigCount = BigUint;

/// Largest `n` accepted by [`relations_total`].
pub const RELATIONS_TOTAL_MAX_N: usize = 24;

/// Largest exponent `∏ f_r` accepted by [`relations_of_type`].
pub const RELATIONS_MAX_EXPONENT: usize = 1 << 24;

/// Ordered tuple of positive parts `⟨f_1, …, f_k⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CompositionType(Vec<usize>);

impl CompositionType {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Argument(
                "composition type needs at least one part".into(),
            ));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Argument(format!(
                "part {pos} is zero; parts must be positive"
            )));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `∏ f_r` as an exact integer.
    pub fn product(&self) -> BigCount {
        self.0.iter().map(|&p| BigCount::from(p)).product()
    }

    /// Parses comma-separated parts such as `2,3,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(1, format!("invalid part `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for CompositionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

pub fn factorial(n: usize) -> BigCount {
    (1..=n).map(BigCount::from).product()
}

pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / ∏ f_i!`: ordered partitions of an `n`-set with block sizes `t`.
pub fn multinomial(n: usize, t: &CompositionType) -> Result<BigCount> {
    if t.total() != n {
        return Err(Error::Argument(format!(
            "parts of {t} sum to {}, not {n}",
            t.total()
        )));
    }
    let denom: BigCount = t.parts().iter().map(|&f| factorial(f)).product();
    Ok(factorial(n) / denom)
}

/// Stirling numbers of the second kind by `S(n,k) = k·S(n−1,k) + S(n−1,k−1)`.
pub fn stirling2(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let mut row = vec![BigCount::zero(); k + 1];
    row[0] = BigCount::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigCount::zero();
    }
    row[k].clone()
}

/// Surjections `[n] → [k]` as `k!·S(n,k)`. Zero when `k > n`.
pub fn surjection_count(n: usize, k: usize) -> BigCount {
    let count = factorial(k) * stirling2(n, k);
    debug_assert_eq!(count, surjection_count_inclusion_exclusion(n, k));
    count
}

/// Surjections `[n] → [k]` as `Σ_{r=0}^{k} (−1)^{k−r} C(k,r) r^n`.
pub fn surjection_count_inclusion_exclusion(n: usize, k: usize) -> BigCount {
    let mut sum = BigInt::zero();
    for r in 0..=k {
        let term = BigInt::from(binomial(k, r)) * BigInt::from(r).pow(n as u32);
        if (k - r).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    debug_assert!(!sum.is_negative());
    sum.to_biguint().expect("surjection count is non-negative")
}

/// Ordered Bell (Fubini) number `Σ_{k=1}^{n} k!·S(n,k)`.
pub fn fubini(n: usize) -> BigCount {
    (1..=n).map(|k| surjection_count(n, k)).sum()
}

/// `2^(∏ f_r) − 1`: non-empty relations inside `V_1 × … × V_k`.
pub fn relations_of_type(t: &CompositionType) -> Result<BigCount> {
    let exp = t
        .parts()
        .iter()
        .try_fold(1usize, |acc, &p| acc.checked_mul(p));
    let exp = exp
        .filter(|&e| e <= RELATIONS_MAX_EXPONENT)
        .ok_or_else(|| Error::Size(format!("product of {t} exceeds {RELATIONS_MAX_EXPONENT}")))?;
    Ok((BigCount::one() << exp) - BigCount::one())
}

/// `Σ_t (2^(∏ t) − 1)` over all compositions `t` of `n`.
pub fn relations_total(n: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    if n > RELATIONS_TOTAL_MAX_N {
        return Err(Error::Size(format!(
            "relations_total is limited to n <= {RELATIONS_TOTAL_MAX_N}, got {n}"
        )));
    }
    compositions(n, None)?.map(|t| relations_of_type(&t)).sum()
}

/// Lexicographic stream of the compositions of `n`, optionally into exactly
/// `k` parts.
#[derive(Debug, Clone)]
pub struct Compositions {
    n: usize,
    parts: Option<usize>,
    current: Option<Vec<usize>>,
}

pub fn compositions(n: usize, k: Option<usize>) -> Result<Compositions> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    let first = match k {
        Some(k) if k == 0 || k > n => {
            return Err(Error::Argument(format!(
                "need 1 <= k <= n, got k = {k}, n = {n}"
            )))
        }
        Some(k) => {
            let mut v = vec![1; k];
            v[k - 1] = n - k + 1;
            v
        }
        None => vec![1; n],
    };
    Ok(Compositions {
        n,
        parts: k,
        current: Some(first),
    })
}

impl Compositions {
    fn successor(&self, c: &[usize]) -> Option<Vec<usize>> {
        match self.parts {
            None => {
                // bump the second-to-last part, refill the rest with ones
                let m = c.len();
                if m < 2 {
                    return None;
                }
                let mut next = c[..m - 1].to_vec();
                next[m - 2] += 1;
                next.extend(std::iter::repeat_n(1, c[m - 1] - 1));
                Some(next)
            }
            Some(k) => {
                // rightmost i whose suffix can give up one unit
                let mut suffix = c[k - 1];
                for i in (0..k - 1).rev() {
                    if suffix > k - 1 - i {
                        let mut next = c[..=i].to_vec();
                        next[i] += 1;
                        let head: usize = next.iter().sum();
                        next.extend(std::iter::repeat_n(1, k - 2 - i));
                        next.push(self.n - head - (k - 2 - i));
                        return Some(next);
                    }
                    suffix += c[i];
                }
                None
            }
        }
    }
}

impl Iterator for Compositions {
    type Item = CompositionType;

    fn next(&mut self) -> Option<CompositionType> {
        let current = self.current.take()?;
        self.current = self.successor(&current);
        Some(CompositionType(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(parts: &[usize]) -> CompositionType {
        CompositionType::new(parts.to_vec()).unwrap()
    }

    fn n(v: u64) -> BigCount {
        BigCount::from(v)
    }

    /// Ordered partitions of {0..n} with the given block sizes, listed by
    /// assigning each element a block label and checking the label counts.
    fn listed_ordered_partitions(sizes: &[usize]) -> u64 {
        let total: usize = sizes.iter().sum();
        let k = sizes.len() as u64;
        (0..k.pow(total as u32))
            .filter(|&code| {
                let mut hist = vec![0; sizes.len()];
                let mut c = code;
                for _ in 0..total {
                    hist[(c % k) as usize] += 1;
                    c /= k;
                }
                hist == sizes
            })
            .count() as u64
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(5, &t(&[5])).unwrap(), n(1));
        assert_eq!(listed_ordered_partitions(&[2, 3]), 10);
        assert_eq!(multinomial(5, &t(&[2, 3])).unwrap(), n(10));
        assert_eq!(listed_ordered_partitions(&[1, 1, 1]), 6);
        assert_eq!(multinomial(3, &t(&[1, 1, 1])).unwrap(), n(6));
        assert!(matches!(
            multinomial(4, &t(&[2, 3])),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn stirling_examples() {
        for k in 0..8 {
            assert_eq!(stirling2(k, k), n(1));
        }
        // {1,2,3} into 2 blocks: {1}{23} {2}{13} {3}{12}
        assert_eq!(stirling2(3, 2), n(3));
        assert_eq!(stirling2(4, 2), n(7));
        assert_eq!(stirling2(4, 0), n(0));
        assert_eq!(stirling2(2, 5), n(0));
    }

    #[test]
    fn surjection_examples() {
        for m in 1..6 {
            assert_eq!(surjection_count(m, 1), n(1));
        }
        assert_eq!(surjection_count(3, 2), n(6));
        assert_eq!(surjection_count(4, 3), n(36));
        assert_eq!(surjection_count(2, 3), n(0));
    }

    #[test]
    fn surjection_formulas_agree_up_to_30() {
        for m in 0..=30 {
            for k in 0..=30 {
                assert_eq!(
                    factorial(k) * stirling2(m, k),
                    surjection_count_inclusion_exclusion(m, k),
                    "n={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn fubini_examples() {
        assert_eq!(fubini(1), n(1));
        assert_eq!(fubini(3), n(13));
        assert_eq!(fubini(4), n(75));
    }

    #[test]
    fn relations_examples() {
        assert_eq!(relations_of_type(&t(&[1])).unwrap(), n(1));
        assert_eq!(relations_of_type(&t(&[2, 3])).unwrap(), n(63));
        assert_eq!(relations_of_type(&t(&[2, 2, 1])).unwrap(), n(15));
        assert_eq!(relations_total(1).unwrap(), n(1));
        assert_eq!(relations_total(2).unwrap(), n(4));
        assert_eq!(relations_total(3).unwrap(), n(14));
        assert!(matches!(relations_total(25), Err(Error::Size(_))));
        assert!(relations_total(24).is_ok());
    }

    #[test]
    fn composition_examples() {
        let all: Vec<_> = compositions(3, None).unwrap().collect();
        assert_eq!(all, vec![t(&[1, 1, 1]), t(&[1, 2]), t(&[2, 1]), t(&[3])]);
        let two: Vec<_> = compositions(4, Some(2)).unwrap().collect();
        assert_eq!(two, vec![t(&[1, 3]), t(&[2, 2]), t(&[3, 1])]);
        assert_eq!(
            compositions(1, None).unwrap().collect::<Vec<_>>(),
            vec![t(&[1])]
        );
        assert!(compositions(3, Some(0)).is_err());
        assert!(compositions(3, Some(4)).is_err());
        assert!(compositions(0, None).is_err());
    }

    #[test]
    fn composition_streams_are_sorted_and_complete() {
        for m in 1..=10 {
            let all: Vec<_> = compositions(m, None).unwrap().collect();
            assert_eq!(all.len(), 1 << (m - 1));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|c| c.total() == m));
            for k in 1..=m {
                let exact: Vec<_> = compositions(m, Some(k)).unwrap().collect();
                assert_eq!(BigCount::from(exact.len()), binomial(m - 1, k - 1));
                assert!(exact.windows(2).all(|w| w[0] < w[1]));
                let filtered: Vec<_> = all.iter().filter(|c| c.len() == k).cloned().collect();
                assert_eq!(exact, filtered);
            }
        }
    }

    #[test]
    fn composition_stream_is_restartable() {
        let mut it = compositions(5, None).unwrap();
        it.next();
        let fork = it.clone();
        assert_eq!(it.collect::<Vec<_>>(), fork.collect::<Vec<_>>());
    }

    #[test]
    fn multinomial_row_sums_equal_surjections() {
        for m in 1..=10 {
            for k in 1..=m {
                let sum: BigCount = compositions(m, Some(k))
                    .unwrap()
                    .map(|c| multinomial(m, &c).unwrap())
                    .sum();
                assert_eq!(sum, surjection_count(m, k));
            }
            let total: BigCount = (1..=m).map(|k| surjection_count(m, k)).sum();
            assert_eq!(fubini(m), total);
        }
    }

    #[test]
    fn composition_type_parsing() {
        assert_eq!(CompositionType::parse("2, 3,1").unwrap(), t(&[2, 3, 1]));
        assert!(matches!(
            CompositionType::parse("2,0"),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            CompositionType::parse("2,x"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(t(&[2, 3]).to_string(), "<2,3>");
    }
}
