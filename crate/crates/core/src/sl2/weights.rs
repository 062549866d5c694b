use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use super::partitions::PartitionTable;
use super::{ensure_sl2, Sl2Error};
use crate::lie::Representation;
use crate::linalg::{self, SparseMatrix};
use crate::rational::Rational;
use crate::subsets::{binomial, for_each_subset};

/// Largest number of subsets the brute-force plethysm will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 1_000_000;

/// Multiplicities of `e3`-eigenvalues. Only positive multiplicities are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    weights: BTreeMap<i64, usize>,
}

impl WeightMultiset {
    pub fn new() -> WeightMultiset {
        WeightMultiset::default()
    }

    pub fn add(&mut self, weight: i64, count: usize) {
        if count > 0 {
            *self.weights.entry(weight).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, weight: i64) -> usize {
        self.weights.get(&weight).copied().unwrap_or(0)
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> usize {
        self.weights.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.weights.iter().map(|(&w, &c)| (w, c))
    }

    pub fn is_symmetric(&self) -> bool {
        self.iter().all(|(w, c)| self.multiplicity(-w) == c)
    }
}

impl FromIterator<i64> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut w = WeightMultiset::new();
        for x in iter {
            w.add(x, 1);
        }
        w
    }
}

/// Highest weight `m` to multiplicity of `V_m`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sl2Decomposition {
    parts: BTreeMap<usize, usize>,
}

impl Sl2Decomposition {
    pub fn new() -> Sl2Decomposition {
        Sl2Decomposition::default()
    }

    /// A single irreducible `V_m`.
    pub fn irreducible(m: usize) -> Sl2Decomposition {
        let mut d = Sl2Decomposition::new();
        d.add(m, 1);
        d
    }

    pub fn add(&mut self, m: usize, count: usize) {
        if count > 0 {
            *self.parts.entry(m).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, m: usize) -> usize {
        self.parts.get(&m).copied().unwrap_or(0)
    }

    /// Total dimension `Σ mult(m)·(m+1)`.
    pub fn dim(&self) -> usize {
        self.parts.iter().map(|(m, c)| c * (m + 1)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(m, multiplicity)` in increasing `m`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().map(|(&m, &c)| (m, c))
    }

    /// The weights of the module this decomposition describes.
    pub fn weights(&self) -> WeightMultiset {
        let mut w = WeightMultiset::new();
        for (m, c) in self.iter() {
            for i in 0..=m {
                w.add(m as i64 - 2 * i as i64, c);
            }
        }
        w
    }
}

impl FromIterator<(usize, usize)> for Sl2Decomposition {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut d = Sl2Decomposition::new();
        for (m, c) in iter {
            d.add(m, c);
        }
        d
    }
}

/// `V_0+V_4+2V_8`, or `0` for the zero module.
impl fmt::Display for Sl2Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "V_{m}")?;
        }
        Ok(())
    }
}

fn as_integer(r: &Rational) -> Option<i64> {
    if r.denom() == &1.into() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Dimensions of the integer eigenspaces of `ρ(e3)`.
pub fn weight_multiplicities(rho: &Representation) -> Result<WeightMultiset, Sl2Error> {
    ensure_sl2(rho)?;
    let d = rho.dim();
    let h = rho.action(2);
    let mut w = WeightMultiset::new();
    if h.iter().all(|(r, c, _)| r == c) {
        for i in 0..d {
            if let Some(x) = as_integer(&h.at(i, i)) {
                w.add(x, 1);
            }
        }
    } else {
        let bound = d as i64;
        for lambda in -bound..=bound {
            let shifted = h.sub(&SparseMatrix::identity(d).scale(&Rational::from_integer(lambda.into())));
            w.add(lambda, d - linalg::rank(&shifted));
        }
    }
    if w.total() != d {
        return Err(Sl2Error::NotWeightDiagonalizable { found: w.total(), dim: d });
    }
    Ok(w)
}

/// Peels highest weights: `mult(V_k) = w(k) - w(k+2)`.
pub fn decompose(w: &WeightMultiset) -> Result<Sl2Decomposition, Sl2Error> {
    if let Some((weight, _)) = w.iter().find(|&(x, c)| w.multiplicity(-x) != c) {
        return Err(Sl2Error::NotAModule { weight });
    }
    let top = w.iter().map(|(x, _)| x).max().unwrap_or(0);
    let mut out = Sl2Decomposition::new();
    for k in (0..=top).rev() {
        let here = w.multiplicity(k);
        let above = w.multiplicity(k + 2);
        if here < above {
            return Err(Sl2Error::NotAModule { weight: k });
        }
        out.add(k as usize, here - above);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExteriorMethod {
    /// Sum weights over every j-subset of the weights of `V_m`.
    Brute,
    /// Read multiplicities off the Gaussian binomial coefficients.
    Formula,
}

/// `Λ^j(V_m)` as a sum of irreducibles.
pub fn exterior_power_decomposition(m: usize, j: usize, method: ExteriorMethod) -> Result<Sl2Decomposition, Sl2Error> {
    if j > m + 1 {
        return Ok(Sl2Decomposition::new());
    }
    match method {
        ExteriorMethod::Brute => {
            let subsets = binomial(m + 1, j);
            if subsets > BRUTE_FORCE_LIMIT {
                return Err(Sl2Error::TooLarge { subsets, limit: BRUTE_FORCE_LIMIT });
            }
            let weights: Vec<i64> = (0..=m).map(|i| m as i64 - 2 * i as i64).collect();
            let mut w = WeightMultiset::new();
            for_each_subset(&weights, j, |s| w.add(s.iter().sum(), 1));
            decompose(&w)
        }
        ExteriorMethod::Formula => {
            let k = m + 1 - j;
            let table = PartitionTable::new(j, k);
            let top = j * k;
            let mut out = Sl2Decomposition::new();
            for n in 0..=top / 2 {
                let mult = table.multiplicity(n as i64);
                let mult = usize::try_from(mult).expect("multiplicity below the middle is nonnegative");
                out.add(top - 2 * n, mult);
            }
            Ok(out)
        }
    }
}

/// `dim Hom_sl2(A, B)` by Schur's lemma.
pub fn hom_dim(a: &Sl2Decomposition, b: &Sl2Decomposition) -> usize {
    a.iter().map(|(m, c)| c * b.multiplicity(m)).sum()
}

/// `V_a ⊗ V_b = V_{a+b} + V_{a+b-2} + ... + V_{|a-b|}`.
pub fn clebsch_gordan(a: usize, b: usize) -> Sl2Decomposition {
    let lo = a.abs_diff(b);
    (0..=a.min(b)).map(|i| (lo + 2 * i, 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::irrep;

    fn ws(pairs: &[(i64, usize)]) -> WeightMultiset {
        let mut w = WeightMultiset::new();
        for &(x, c) in pairs {
            w.add(x, c);
        }
        w
    }

    #[test]
    fn weights_of_irreducibles_and_sums() {
        assert_eq!(weight_multiplicities(&irrep(3)).unwrap(), ws(&[(3, 1), (1, 1), (-1, 1), (-3, 1)]));
        let v = irrep(1).direct_sum(&irrep(1)).unwrap();
        assert_eq!(weight_multiplicities(&v).unwrap(), ws(&[(1, 2), (-1, 2)]));
        let l2 = irrep(3).exterior_power(2);
        assert_eq!(weight_multiplicities(&l2).unwrap(), ws(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
    }

    #[test]
    fn non_diagonal_h_uses_ranks() {
        // conjugate V_2 by a unipotent change of basis
        let v = irrep(2);
        let p = SparseMatrix::from_triplets(
            3,
            3,
            [(0, 0, 1), (1, 1, 1), (2, 2, 1), (0, 1, 1)].map(|(r, c, x)| (r, c, crate::rational::int(x))),
        );
        let pinv = SparseMatrix::from_triplets(
            3,
            3,
            [(0, 0, 1), (1, 1, 1), (2, 2, 1), (0, 1, -1)].map(|(r, c, x)| (r, c, crate::rational::int(x))),
        );
        let actions = v.actions().iter().map(|a| p.mul(a).mul(&pinv)).collect();
        let conj = Representation::new(crate::sl2::sl2(), 3, actions).unwrap();
        assert!(!conj.action(2).iter().all(|(r, c, _)| r == c));
        assert_eq!(weight_multiplicities(&conj).unwrap(), ws(&[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn peeling() {
        assert_eq!(decompose(&ws(&[(2, 1), (0, 1), (-2, 1)])).unwrap().to_string(), "V_2");
        let d = decompose(&ws(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])).unwrap();
        assert_eq!(d.to_string(), "V_0+V_4");
        assert_eq!(decompose(&ws(&[(0, 3)])).unwrap().to_string(), "3V_0");
        assert_eq!(decompose(&WeightMultiset::new()).unwrap().to_string(), "0");
    }

    #[test]
    fn peeling_rejects_non_modules() {
        assert_eq!(decompose(&ws(&[(2, 1), (-2, 1)])), Err(Sl2Error::NotAModule { weight: 0 }));
        assert_eq!(decompose(&ws(&[(1, 1)])), Err(Sl2Error::NotAModule { weight: 1 }));
    }

    #[test]
    fn reconstruction_round_trip() {
        let w = weight_multiplicities(&irrep(5).exterior_power(3)).unwrap();
        assert_eq!(decompose(&w).unwrap().weights(), w);
    }

    #[test]
    fn exterior_examples() {
        for method in [ExteriorMethod::Brute, ExteriorMethod::Formula] {
            let e = |m, j| exterior_power_decomposition(m, j, method).unwrap().to_string();
            assert_eq!(e(6, 3), "V_0+V_4+V_6+V_8+V_12");
            assert_eq!(e(7, 4), "V_0+2V_4+2V_8+V_10+V_12+V_16");
            assert_eq!(e(5, 1), "V_5");
            assert_eq!(e(8, 3), "V_2+2V_6+V_8+V_10+V_12+V_14+V_18");
            assert_eq!(e(3, 5), "0");
            assert_eq!(e(3, 0), "V_0");
            assert_eq!(e(3, 4), "V_0");
        }
    }

    #[test]
    fn brute_force_limit() {
        assert_eq!(
            exterior_power_decomposition(40, 10, ExteriorMethod::Brute),
            Err(Sl2Error::TooLarge { subsets: binomial(41, 10), limit: BRUTE_FORCE_LIMIT })
        );
        assert!(exterior_power_decomposition(40, 10, ExteriorMethod::Formula).is_ok());
    }

    #[test]
    fn schur_and_clebsch_gordan() {
        let v = |m| Sl2Decomposition::irreducible(m);
        assert_eq!(hom_dim(&v(4), &v(4)), 1);
        let l2v3 = exterior_power_decomposition(3, 2, ExteriorMethod::Formula).unwrap();
        assert_eq!(hom_dim(&l2v3, &v(3)), 0);
        let two_v1: Sl2Decomposition = [(1, 2)].into_iter().collect();
        assert_eq!(hom_dim(&two_v1, &two_v1), 4);
        assert_eq!(clebsch_gordan(1, 1).to_string(), "V_0+V_2");
        assert_eq!(clebsch_gordan(5, 0).to_string(), "V_5");
        assert_eq!(clebsch_gordan(2, 1).to_string(), "V_1+V_3");
    }

    #[test]
    fn tensor_product_matches_clebsch_gordan() {
        for a in 0..4 {
            for b in 0..4 {
                let t = irrep(a).tensor(&irrep(b)).unwrap();
                let d = decompose(&weight_multiplicities(&t).unwrap()).unwrap();
                assert_eq!(d, clebsch_gordan(a, b));
                assert_eq!(d.dim(), (a + 1) * (b + 1));
            }
        }
    }
}
