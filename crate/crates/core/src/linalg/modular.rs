//! Rank modulo word-sized primes.
//!
//! The modular rank never exceeds the rational rank. Two independent random
//! primes above `2^30` that agree are taken as strong evidence of the exact
//! value; callers decide whether that is good enough.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand_core::RngCore;

use super::eliminate::{eliminate, Fp, Reduction, Row};
use super::SparseMatrix;

/// Smallest prime the random selection may return.
pub const MIN_PRIME: u64 = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModularError {
    #[error("prime {0} divides a denominator of the matrix")]
    PrimeDividesDenominator(u64),
}

/// Outcome of [`two_prime_rank`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularRank {
    pub rank: usize,
    pub primes: [u64; 2],
    /// Both primes produced the same rank.
    pub agreed: bool,
}

fn reduce(value: &BigInt, p: u64) -> u64 {
    value.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Rank of `m` over `F_p`. `p` must be an odd prime below `2^63`.
pub fn rank_mod_p(m: &SparseMatrix, p: u64) -> Result<usize, ModularError> {
    let mut rows: Vec<Row<Fp>> = Vec::with_capacity(m.rows());
    for row in m.row_lists() {
        let mut out = Vec::with_capacity(row.len());
        for (c, v) in row {
            let den = reduce(v.denom(), p);
            if den == 0 {
                return Err(ModularError::PrimeDividesDenominator(p));
            }
            let num = Fp { value: reduce(v.numer(), p), modulus: p };
            let x = num.mul(Fp { value: den, modulus: p }.inv());
            if x.value != 0 {
                out.push((c, x));
            }
        }
        rows.push(out);
    }
    Ok(eliminate(rows, m.cols(), Reduction::Rank).expect("field elimination cannot overflow").pivots.len())
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly drawn start in `[2^30, 2^31)`, advanced to the next prime.
pub fn random_prime<R: RngCore + ?Sized>(rng: &mut R) -> u64 {
    let mut candidate = MIN_PRIME + (rng.next_u64() % MIN_PRIME);
    candidate |= 1;
    while !is_prime(candidate) {
        candidate += 2;
    }
    candidate
}

/// Rank modulo two distinct random primes. A prime dividing some denominator
/// is replaced by a fresh draw.
pub fn two_prime_rank<R: RngCore + ?Sized>(m: &SparseMatrix, rng: &mut R) -> ModularRank {
    let mut primes = [0u64; 2];
    let mut ranks = [0usize; 2];
    let mut i = 0;
    while i < 2 {
        let p = random_prime(rng);
        if i == 1 && p == primes[0] {
            continue;
        }
        if let Ok(r) = rank_mod_p(m, p) {
            primes[i] = p;
            ranks[i] = r;
            i += 1;
        }
    }
    ModularRank { rank: ranks[0].max(ranks[1]), primes, agreed: ranks[0] == ranks[1] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(561) && !is_prime(1_000_000_007 * 3));
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn small_prime_can_drop_rank() {
        let m = SparseMatrix::from_dense(2, &[vec![int(1), int(2)], vec![int(3), int(1)]]);
        assert_eq!(super::super::rank(&m), 2);
        assert_eq!(rank_mod_p(&m, 5).unwrap(), 1);
        assert_eq!(rank_mod_p(&m, 7).unwrap(), 2);
    }

    #[test]
    fn denominator_divisible_by_prime() {
        let m = SparseMatrix::from_dense(1, &[vec![crate::rational::Rational::new(1.into(), 7.into())]]);
        assert_eq!(rank_mod_p(&m, 7), Err(ModularError::PrimeDividesDenominator(7)));
    }
}
