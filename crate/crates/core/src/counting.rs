//! Closed forms for the number of monobricks and semibricks.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Large Schröder number `S_n = Σ_{i=0}^{n} C(n,i) C(n+i,i) / (i+1)`.
pub fn schroder_count(n: u64) -> BigUint {
    (0..=n)
        .map(|i| {
            let numerator = binomial(n, i) * binomial(n + i, i);
            let divisor = BigUint::from(i + 1);
            debug_assert!((&numerator % &divisor).is_zero());
            numerator / divisor
        })
        .sum()
}

/// Monobricks over `B_n`: `2 Σ_{i=0}^{n-1} C(n-1,i) C(n+i,i)`. Zero for `n = 0`.
pub fn b_count(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let sum: BigUint = (0..n).map(|i| binomial(n - 1, i) * binomial(n + i, i)).sum();
    sum * 2u32
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

pub fn central_binomial(n: u64) -> BigUint {
    binomial(2 * n, n)
}

/// `a_n`: mono-crossing admissible diagrams on `[n]`, i.e. `S_{n-1}`.
pub fn a_count(n: u64) -> BigUint {
    assert!(n >= 1, "a_n is indexed from 1");
    schroder_count(n - 1)
}

/// `b_n = a_n + Σ_{i=1}^{n} i · a_i · a_{n+1-i}`, checked against [`b_count`].
pub fn recurrence_check(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let rhs: BigUint = a_count(n)
        + (1..=n)
            .map(|i| BigUint::from(i) * a_count(i) * a_count(n + 1 - i))
            .sum::<BigUint>();
    rhs == b_count(n)
}

/// Closed forms and (optionally) an enumerated count for one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub n: u64,
    /// Mono-crossing admissible diagrams on `[n]`.
    pub a_n: BigUint,
    /// Mono-crossing diagrams on `[n]`.
    pub b_n: BigUint,
    pub catalan: BigUint,
    pub central_binomial: BigUint,
    pub enumerated: Option<BigUint>,
}

impl CountReport {
    pub fn closed_forms(n: u64) -> Self {
        CountReport {
            n,
            a_n: if n >= 1 { a_count(n) } else { BigUint::one() },
            b_n: b_count(n),
            catalan: catalan(n),
            central_binomial: central_binomial(n),
            enumerated: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn schroder_examples() {
        assert_eq!(schroder_count(0), big(1));
        assert_eq!(schroder_count(3), big(22));
        assert_eq!(schroder_count(5), big(394));
    }

    #[test]
    fn b_count_examples() {
        assert_eq!(b_count(1), big(2));
        assert_eq!(b_count(2), big(8));
        assert_eq!(b_count(4), big(192));
    }

    #[test]
    fn recurrence_examples() {
        assert!(recurrence_check(1));
        assert!(recurrence_check(2));
        assert!(recurrence_check(5));
        assert!(!recurrence_check(0));
    }

    /// Independent route: Schröder numbers via `(n+1) S_{n+1} = 3(2n+1) S_n - (n-1) S_{n-1}`.
    #[test]
    fn schroder_matches_three_term_recurrence() {
        let mut s = vec![big(1), big(2)];
        for n in 1..25u64 {
            let next =
                (big(3) * big(2 * n + 1) * &s[n as usize] - big(n - 1) * &s[n as usize - 1]) / big(n + 2);
            s.push(next);
        }
        for (n, v) in s.iter().enumerate() {
            assert_eq!(&schroder_count(n as u64), v, "S_{n}");
        }
    }

    #[test]
    fn catalan_and_central() {
        let cat: Vec<u64> = vec![1, 1, 2, 5, 14, 42, 132, 429];
        for (n, c) in cat.iter().enumerate() {
            assert_eq!(catalan(n as u64), big(*c));
        }
        assert_eq!(central_binomial(7), big(3432));
    }

    #[test]
    fn large_values_are_exact() {
        // S_30 = 6 ... checked against the three-term recurrence above; here only
        // that no precision is lost far beyond u64 range.
        let s = schroder_count(60);
        assert!(s.bits() > 64);
        assert!(recurrence_check(40));
    }
}
