//! Sparse row elimination shared by the exact and modular rank paths.
//!
//! Rows are kept primitive over the integers (fraction-free elimination with
//! content removal), or reduced modulo a prime. Pivots follow a Markowitz-style
//! rule: the shortest active row, then its column with the fewest active rows.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Rational;

pub(crate) type Row<T> = Vec<(usize, T)>;

/// Scalars that sparse elimination can run over.
pub(crate) trait ElimScalar: Clone {
    fn is_zero(&self) -> bool;
    /// Multipliers `(p, q)` such that `p * a - q * pivot` cancels a target entry `a`.
    fn multipliers(pivot: &Self, target: &Self) -> (Self, Self);
    /// `p * x - q * y`, or `None` on overflow.
    fn mul_sub(p: &Self, x: &Self, q: &Self, y: &Self) -> Option<Self>;
    /// `p * x`, or `None` on overflow.
    fn mul(p: &Self, x: &Self) -> Option<Self>;
    /// `-(q * y)`, or `None` on overflow.
    fn neg_mul(q: &Self, y: &Self) -> Option<Self>;
    /// Rescales a row to a canonical multiple (no-op over fields).
    fn normalize(row: &mut Row<Self>);
}

impl ElimScalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn multipliers(pivot: &i64, target: &i64) -> (i64, i64) {
        let g = pivot.gcd(target);
        (pivot / g, target / g)
    }

    fn mul_sub(p: &i64, x: &i64, q: &i64, y: &i64) -> Option<i64> {
        p.checked_mul(*x)?.checked_sub(q.checked_mul(*y)?)
    }

    fn mul(p: &i64, x: &i64) -> Option<i64> {
        p.checked_mul(*x)
    }

    fn neg_mul(q: &i64, y: &i64) -> Option<i64> {
        q.checked_mul(*y)?.checked_neg()
    }

    fn normalize(row: &mut Row<i64>) {
        let g = row.iter().fold(0i64, |g, (_, v)| g.gcd(v));
        if g > 1 {
            for (_, v) in row.iter_mut() {
                *v /= g;
            }
        }
    }
}

impl ElimScalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn multipliers(pivot: &BigInt, target: &BigInt) -> (BigInt, BigInt) {
        let g = pivot.gcd(target);
        (pivot / &g, target / &g)
    }

    fn mul_sub(p: &BigInt, x: &BigInt, q: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(p * x - q * y)
    }

    fn mul(p: &BigInt, x: &BigInt) -> Option<BigInt> {
        Some(p * x)
    }

    fn neg_mul(q: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(-(q * y))
    }

    fn normalize(row: &mut Row<BigInt>) {
        let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
        if !g.is_one() && !Zero::is_zero(&g) {
            for (_, v) in row.iter_mut() {
                *v /= &g;
            }
        }
    }
}

/// An element of the prime field `F_p` for a runtime prime `p < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp {
    pub(crate) value: u64,
    pub(crate) modulus: u64,
}

impl Fp {
    pub(crate) fn mul(self, other: Fp) -> Fp {
        Fp { value: ((self.value as u128 * other.value as u128) % self.modulus as u128) as u64, modulus: self.modulus }
    }

    pub(crate) fn sub(self, other: Fp) -> Fp {
        let v =
            if self.value >= other.value { self.value - other.value } else { self.value + self.modulus - other.value };
        Fp { value: v, modulus: self.modulus }
    }

    pub(crate) fn pow(self, mut exp: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { value: 1 % self.modulus, modulus: self.modulus };
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            exp >>= 1;
        }
        acc
    }

    pub(crate) fn inv(self) -> Fp {
        self.pow(self.modulus - 2)
    }
}

impl ElimScalar for Fp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn multipliers(pivot: &Fp, target: &Fp) -> (Fp, Fp) {
        (Fp { value: 1, modulus: pivot.modulus }, target.mul(pivot.inv()))
    }

    fn mul_sub(p: &Fp, x: &Fp, q: &Fp, y: &Fp) -> Option<Fp> {
        Some(p.mul(*x).sub(q.mul(*y)))
    }

    fn mul(p: &Fp, x: &Fp) -> Option<Fp> {
        Some(Fp::mul(*p, *x))
    }

    fn neg_mul(q: &Fp, y: &Fp) -> Option<Fp> {
        let zero = Fp { value: 0, modulus: q.modulus };
        Some(zero.sub(q.mul(*y)))
    }

    fn normalize(_row: &mut Row<Fp>) {}
}

/// Whether finished pivot rows take part in later eliminations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Reduction {
    /// Forward elimination only; pivot rows are dropped once used.
    Rank,
    /// Gauss-Jordan: every pivot column ends up nonzero in exactly one row.
    Reduced,
}

/// Pivot rows produced by [`eliminate`], each tagged with its pivot column.
pub(crate) struct Echelon<T> {
    pub(crate) pivots: Vec<(usize, Row<T>)>,
}

fn lookup<T>(row: &Row<T>, col: usize) -> Option<&T> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `p * x - q * y` over sorted sparse rows, dropping cancelled entries.
fn combine<T: ElimScalar>(p: &T, x: &Row<T>, q: &T, y: &Row<T>) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (col, value) = if take_x {
            let v = T::mul(p, &x[i].1)?;
            i += 1;
            (x[i - 1].0, v)
        } else if take_y {
            let v = T::neg_mul(q, &y[j].1)?;
            j += 1;
            (y[j - 1].0, v)
        } else {
            let v = T::mul_sub(p, &x[i].1, q, &y[j].1)?;
            i += 1;
            j += 1;
            (x[i - 1].0, v)
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    Some(out)
}

/// Eliminates `rows` (sorted sparse rows over `ncols` columns). Returns `None`
/// if the scalar type overflowed.
pub(crate) fn eliminate<T: ElimScalar>(mut rows: Vec<Row<T>>, ncols: usize, mode: Reduction) -> Option<Echelon<T>> {
    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0usize; ncols];
    for (r, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_rows[*c].push(r);
            col_count[*c] += 1;
        }
    }
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    loop {
        let mut best: Option<usize> = None;
        for (r, row) in rows.iter().enumerate() {
            if active[r] && best.is_none_or(|b| row.len() < rows[b].len()) {
                best = Some(r);
                if row.len() == 1 {
                    break;
                }
            }
        }
        let Some(pr) = best else { break };
        let pc =
            rows[pr].iter().map(|(c, _)| *c).min_by_key(|c| (col_count[*c], *c)).expect("active rows are nonempty");
        let pivot_value = lookup(&rows[pr], pc).expect("pivot entry present").clone();

        let mut targets = core::mem::take(&mut col_rows[pc]);
        targets.sort_unstable();
        targets.dedup();
        for r2 in targets {
            if r2 == pr || !(active[r2] || mode == Reduction::Reduced) {
                continue;
            }
            let Some(target_value) = lookup(&rows[r2], pc) else { continue };
            let (p, q) = T::multipliers(&pivot_value, target_value);
            let mut updated = combine(&p, &rows[r2], &q, &rows[pr])?;
            T::normalize(&mut updated);
            let old = core::mem::take(&mut rows[r2]);
            // Column bookkeeping: compare old and new supports.
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < updated.len() {
                let oc = old.get(i).map(|e| e.0);
                let nc = updated.get(j).map(|e| e.0);
                match (oc, nc) {
                    (Some(a), Some(b)) if a == b => {
                        i += 1;
                        j += 1;
                    }
                    (Some(a), nc) if nc.is_none_or(|b| a < b) => {
                        if active[r2] {
                            col_count[a] -= 1;
                        }
                        i += 1;
                    }
                    (_, Some(b)) => {
                        col_rows[b].push(r2);
                        if active[r2] {
                            col_count[b] += 1;
                        }
                        j += 1;
                    }
                    _ => unreachable!(),
                }
            }
            if updated.is_empty() {
                active[r2] = false;
            }
            rows[r2] = updated;
        }
        col_rows[pc] = vec![pr];
        active[pr] = false;
        for (c, _) in &rows[pr] {
            col_count[*c] -= 1;
        }
        pivots.push((pc, pr));
        if mode == Reduction::Rank {
            rows[pr] = Vec::new();
        }
    }

    let pivots = pivots.into_iter().map(|(c, r)| (c, core::mem::take(&mut rows[r]))).collect();
    Some(Echelon { pivots })
}

/// Clears denominators of each row and converts to integers.
pub(crate) fn integer_rows(rows: Vec<Vec<(usize, Rational)>>) -> Vec<Row<BigInt>> {
    rows.into_iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
            let mut out: Row<BigInt> =
                row.into_iter().map(|(c, v)| (c, (v * Rational::from_integer(lcm.clone())).to_integer())).collect();
            BigInt::normalize(&mut out);
            out
        })
        .collect()
}

/// Narrows rows to `i64` when every entry is small enough to leave headroom.
pub(crate) fn narrow_rows(rows: &[Row<BigInt>]) -> Option<Vec<Row<i64>>> {
    const LIMIT: i64 = 1 << 40;
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|(c, v)| v.to_i64().filter(|x| x.abs() < LIMIT).map(|x| (*c, x)))
                .collect::<Option<Row<i64>>>()
        })
        .collect()
}

pub(crate) fn widen_row(row: Row<i64>) -> Row<BigInt> {
    row.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect()
}

/// Exact elimination: tries machine integers first and falls back to big
/// integers if anything overflows.
pub(crate) fn eliminate_exact(rows: Vec<Vec<(usize, Rational)>>, ncols: usize, mode: Reduction) -> Echelon<BigInt> {
    let rows = integer_rows(rows);
    if let Some(small) = narrow_rows(&rows) {
        if let Some(e) = eliminate(small, ncols, mode) {
            return Echelon { pivots: e.pivots.into_iter().map(|(c, r)| (c, widen_row(r))).collect() };
        }
    }
    eliminate(rows, ncols, mode).expect("big integer elimination cannot overflow")
}
