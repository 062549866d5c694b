use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A polynomial in `q` with `i128` coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `1 - q^i` for `i >= 1`.
    pub fn one_minus_q_pow(i: usize) -> IntPolynomial {
        let mut c = vec![0; i + 1];
        c[0] = 1;
        c[i] -= 1;
        IntPolynomial::new(c)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^n`; zero outside the support.
    pub fn coefficient(&self, n: i64) -> i128 {
        usize::try_from(n).ok().and_then(|n| self.coeffs.get(n)).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] = a.checked_mul(*b).and_then(|p| c[i + j].checked_add(p)).expect("coefficient overflow");
            }
        }
        IntPolynomial::new(c)
    }

    /// Exact quotient by `1 - q^i`, or `None` if the division leaves a remainder.
    pub fn div_one_minus_q_pow(&self, i: usize) -> Option<IntPolynomial> {
        assert!(i >= 1);
        let n = self.coeffs.len();
        if n == 0 {
            return Some(IntPolynomial::zero());
        }
        if n <= i {
            return None;
        }
        // a = (1 - q^i) b  gives  b_t = a_t + b_{t-i}
        let mut b = vec![0i128; n - i];
        for t in 0..n - i {
            b[t] = self.coeffs[t] + if t >= i { b[t - i] } else { 0 };
        }
        (IntPolynomial::new(b.clone()).mul(&IntPolynomial::one_minus_q_pow(i)) == *self).then(|| IntPolynomial::new(b))
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            f.write_str(sign)?;
            match (n, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}*")?,
            }
            match n {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{n}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `[j+k, k]_q = Π_{i=1..k} (1 - q^{j+i}) / (1 - q^i)`.
pub fn gaussian_binomial(j: usize, k: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for i in 1..=k {
        // after step i this is [j+i, i]_q, so every division is exact
        acc = acc
            .mul(&IntPolynomial::one_minus_q_pow(j + i))
            .div_one_minus_q_pow(i)
            .expect("Gaussian binomial is a polynomial");
    }
    acc
}

/// Counts `p(j, k, n)` of partitions of `n` into at most `k` parts, each at
/// most `j`, for every `n` in `0..=jk`.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    counts: Vec<u128>,
}

impl PartitionTable {
    /// Built from `p(j,k,n) = p(j,k-1,n) + p(j-1,k,n-k)`.
    pub fn new(j: usize, k: usize) -> PartitionTable {
        let top = j * k;
        // layer[k'][n] = p(j', k', n) for the current j'
        let mut layer: Vec<Vec<u128>> = (0..=k).map(|_| unit(top)).collect();
        for _ in 1..=j {
            let mut next: Vec<Vec<u128>> = Vec::with_capacity(k + 1);
            next.push(unit(top));
            for kk in 1..=k {
                let row: Vec<u128> = (0..=top)
                    .map(|n| {
                        let fewer = next[kk - 1][n];
                        let exact = if n >= kk { layer[kk][n - kk] } else { 0 };
                        fewer.checked_add(exact).expect("partition count overflow")
                    })
                    .collect();
                next.push(row);
            }
            layer = next;
        }
        PartitionTable { counts: layer.swap_remove(k) }
    }

    pub fn count(&self, n: i64) -> u128 {
        usize::try_from(n).ok().and_then(|n| self.counts.get(n)).copied().unwrap_or(0)
    }

    /// `N(j,k,n) = p(j,k,n) - p(j,k,n-1)`.
    pub fn multiplicity(&self, n: i64) -> i128 {
        self.count(n) as i128 - self.count(n - 1) as i128
    }
}

fn unit(top: usize) -> Vec<u128> {
    let mut v = vec![0; top + 1];
    v[0] = 1;
    v
}

pub fn partition_count(j: usize, k: usize, n: i64) -> u128 {
    if n < 0 || n as u128 > (j * k) as u128 {
        return 0;
    }
    PartitionTable::new(j, k).count(n)
}

/// `N(j,k,n)`: for `0 <= n <= jk/2` the multiplicity of `V_{jk-2n}` in
/// `Λ^j(V_{j+k-1})`.
pub fn multiplicity_n(j: usize, k: usize, n: i64) -> i128 {
    if n < 0 || n as u128 > (j * k) as u128 + 1 {
        return 0;
    }
    PartitionTable::new(j, k).multiplicity(n)
}

/// `c_0..=c_up_to`: partitions into parts from `{2, 3, 4}`.
pub fn c_coefficients(up_to: usize) -> Vec<u128> {
    let mut c = vec![0u128; up_to + 1];
    c[0] = 1;
    for part in [2, 3, 4] {
        for n in part..=up_to {
            c[n] += c[n - part];
        }
    }
    c
}

/// Multiplicity of `V_{2ℓ}` in `Λ^4(V_{k+3})`: `c_{2k-ℓ} - c_{2k-2ℓ+1}`.
pub fn lambda4_multiplicity(ell: usize, k: usize) -> u128 {
    let a = (2 * k).checked_sub(ell);
    let b = (2 * k + 1).checked_sub(2 * ell);
    let c = c_coefficients(a.unwrap_or(0).max(b.unwrap_or(0)));
    let at = |i: Option<usize>| i.map_or(0, |i| c[i]);
    at(a).checked_sub(at(b)).expect("multiplicity is nonnegative")
}

/// Multiplicity of `V_m` in `Λ^3(V_m)`: with `m = 6q + r` it is `q + 1` for
/// `r ∈ {3, 5}` and `q` otherwise.
pub fn lambda3_self_multiplicity(m: usize) -> usize {
    let (q, r) = (m / 6, m % 6);
    if r == 3 || r == 5 {
        q + 1
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Partitions of `n` into at most `k` parts each at most `j`, by listing
    /// non-increasing sequences.
    fn enumerate(j: usize, k: usize, n: usize) -> u128 {
        fn go(max: usize, slots: usize, left: usize) -> u128 {
            if left == 0 {
                return 1;
            }
            if slots == 0 {
                return 0;
            }
            (1..=max.min(left)).map(|p| go(p, slots - 1, left - p)).sum()
        }
        go(j, k, n)
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 2).coeffs(), &[1, 1, 2, 1, 1]);
        assert_eq!(gaussian_binomial(5, 0), IntPolynomial::one());
        assert_eq!(gaussian_binomial(2, 2).to_string(), "1+q+2*q^2+q^3+q^4");
    }

    #[test]
    fn gaussian_shape() {
        for j in 0..=12 {
            for k in 0..=12 {
                let g = gaussian_binomial(j, k);
                assert_eq!(g.degree(), Some(j * k));
                assert!(g.is_palindromic());
                assert_eq!(g.coeffs().iter().sum::<i128>(), crate::subsets::binomial(j + k, k) as i128);
                let half = j * k / 2;
                assert!(g.coeffs()[..=half].windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn counts_match_enumeration_and_gaussian() {
        assert_eq!(partition_count(4, 3, 5), 4);
        assert_eq!(partition_count(2, 2, 2), 2);
        assert_eq!(partition_count(7, 3, 0), 1);
        assert_eq!(partition_count(2, 2, -1), 0);
        assert_eq!(partition_count(2, 2, 5), 0);
        for j in 0..=8 {
            for k in 0..=8 {
                let g = gaussian_binomial(j, k);
                let t = PartitionTable::new(j, k);
                for n in 0..=(j * k) as i64 {
                    assert_eq!(t.count(n), enumerate(j, k, n as usize));
                    assert_eq!(t.count(n) as i128, g.coefficient(n));
                    assert_eq!(t.count(n), PartitionTable::new(k, j).count(n));
                    assert_eq!(t.count(n), t.count((j * k) as i64 - n));
                }
            }
        }
    }

    #[test]
    fn multiplicity_is_one_minus_q_times_gaussian() {
        for j in 0..=10 {
            for k in 0..=10 {
                let shifted = gaussian_binomial(j, k).mul(&IntPolynomial::one_minus_q_pow(1));
                for n in -2..=(j * k) as i64 + 3 {
                    assert_eq!(multiplicity_n(j, k, n), shifted.coefficient(n), "N({j},{k},{n})");
                }
            }
        }
        assert_eq!(multiplicity_n(2, 2, 2), 1);
    }

    #[test]
    fn c_series() {
        assert_eq!(c_coefficients(8), vec![1, 0, 1, 1, 2, 1, 3, 2, 4]);
        // d_m: partitions of m into parts from {1, 2, 3}
        let mut d = vec![0u128; 16];
        d[0] = 1;
        for part in [1, 2, 3] {
            for n in part..16 {
                d[n] += d[n - part];
            }
        }
        let c = c_coefficients(40);
        for m in 0..16 {
            assert_eq!(c[2 * m + 3], d[m]);
        }
    }

    #[test]
    fn lambda4_agrees_with_n() {
        for k in 1..=30 {
            assert_eq!(lambda4_multiplicity(1, k), 0);
            for ell in 1..=2 * k + 2 {
                let n = multiplicity_n(4, k, 2 * k as i64 - ell as i64);
                assert_eq!(lambda4_multiplicity(ell, k) as i128, n.max(0), "ell={ell} k={k}");
            }
        }
        assert_eq!(lambda4_multiplicity(4, 4), 2);
        assert_eq!(lambda4_multiplicity(2, 2), 1);
    }

    #[test]
    fn lambda3_examples() {
        assert_eq!(lambda3_self_multiplicity(3), 1);
        assert_eq!(lambda3_self_multiplicity(6), 1);
        assert_eq!(lambda3_self_multiplicity(2), 0);
    }
}
