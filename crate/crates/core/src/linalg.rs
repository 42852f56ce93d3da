//! Exact rank of sparse integer matrices over `Q`.
//!
//! Rows are reduced by fraction-free elimination: a row whose leading column
//! already has a pivot is replaced by `p·row − r·pivot` and divided by the gcd
//! of its entries. Arithmetic runs in `i64` with overflow checks and restarts
//! in `BigInt` if any step overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, i64)>;

trait Entry: Clone + Integer + Signed {
    fn checked_combination(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn checked_combination(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
}

impl Entry for BigInt {
    fn checked_combination(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
}

/// `a·u − b·v` for sparse rows, divided by the content of the result.
fn combine<T: Entry>(a: &T, u: &[(usize, T)], b: &T, v: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let zero = T::zero();
    let mut out = Vec::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() || j < v.len() {
        let cu = u.get(i).map_or(usize::MAX, |e| e.0);
        let cv = v.get(j).map_or(usize::MAX, |e| e.0);
        let col = cu.min(cv);
        let x = if cu == col { i += 1; &u[i - 1].1 } else { &zero };
        let y = if cv == col { j += 1; &v[j - 1].1 } else { &zero };
        let val = T::checked_combination(a, x, b, y)?;
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    let g = out.iter().fold(T::zero(), |g, (_, x)| g.gcd(x));
    if !g.is_zero() && g != T::one() {
        for (_, x) in &mut out {
            *x = x.div_floor(&g);
        }
    }
    Some(out)
}

fn rank_with<T: Entry>(rows: impl Iterator<Item = Vec<(usize, T)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in rows {
        while let Some((col, lead)) = row.first().cloned() {
            match pivots.get(&col) {
                Some(p) => {
                    let plead = p[0].1.clone();
                    let g = plead.gcd(&lead);
                    row = combine(&(plead / g.clone()), &row, &(lead / g), p)?;
                }
                None => {
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Rank over `Q` of the matrix with the given rows.
pub fn rank(rows: &[SparseRow]) -> usize {
    if let Some(r) = rank_with(rows.iter().cloned()) {
        return r;
    }
    rank_with(
        rows.iter()
            .map(|r| r.iter().map(|&(c, x)| (c, BigInt::from(x))).collect::<Vec<_>>()),
    )
    .expect("BigInt arithmetic cannot overflow")
}

/// Rank of a dense integer matrix, for small checks.
pub fn rank_dense(matrix: &[Vec<i64>]) -> usize {
    let rows: Vec<SparseRow> = matrix
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| **x != 0).map(|(c, &x)| (c, x)).collect())
        .collect();
    rank(&rows)
}
