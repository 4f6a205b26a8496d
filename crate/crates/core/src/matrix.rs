//! Exact integer and rational linear algebra used throughout the crate.
//!
//! Everything here works over `BigInt` / `BigRational`; no floating point.
//! Matrices are plain `Vec<Vec<_>>` in row-major order.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IMat = Vec<Vec<Int>>;
pub type QMat = Vec<Vec<Rat>>;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> IMat {
    let n = a.len();
    let k = if n > 0 { a[0].len() } else { 0 };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(k, b.len(), "dimension mismatch in mat_mul");
    let mut out = vec![vec![Int::zero(); m]; n];
    for i in 0..n {
        for (l, bl) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &bl[j];
            }
        }
    }
    out
}

pub fn mat_mul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> QMat {
    let n = a.len();
    let k = if n > 0 { a[0].len() } else { 0 };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(k, b.len(), "dimension mismatch in mat_mul_rat");
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for (l, bl) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &bl[j];
            }
        }
    }
    out
}

pub fn to_rat(m: &[Vec<Int>]) -> QMat {
    m.iter()
        .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect()
}

/// Determinant by the Bareiss fraction-free algorithm.
pub fn det(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "det needs a square matrix");
    let mut a: IMat = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            // pivot search
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse_rat(m: &[Vec<Rat>]) -> Option<QMat> {
    let n = m.len();
    let mut a: QMat = m.to_vec();
    let mut inv = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[i][j] -= t;
                let t = &f * &inv[col][j];
                inv[i][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Row Hermite normal form (row-style, pivots left to right).
///
/// Returns the HNF with zero rows removed, so the result is a basis of the
/// row lattice of `m`.
pub fn row_hnf(m: &[Vec<Int>]) -> IMat {
    let mut a: IMat = m.to_vec();
    if a.is_empty() {
        return a;
    }
    let cols = a[0].len();
    let mut row = 0;
    for col in 0..cols {
        if row >= a.len() {
            break;
        }
        // clear the column below `row` with euclidean row operations
        loop {
            let mut min_i = None;
            for i in row..a.len() {
                if !a[i][col].is_zero() {
                    let better = match min_i {
                        None => true,
                        Some(m) => a[i][col].abs() < a[m as usize][col].abs(),
                    };
                    if better {
                        min_i = Some(i as isize);
                    }
                }
            }
            let Some(pi) = min_i else { break };
            let pi = pi as usize;
            a.swap(row, pi);
            let mut done = true;
            for i in row + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = div_round(&a[i][col], &a[row][col]);
                for j in 0..cols {
                    let t = &q * &a[row][j];
                    a[i][j] -= t;
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[row][col].is_zero() {
            continue;
        }
        if a[row][col].is_negative() {
            for j in 0..cols {
                a[row][j] = -a[row][j].clone();
            }
        }
        // reduce entries above the pivot
        for i in 0..row {
            let q = a[i][col].div_floor(&a[row][col]);
            if !q.is_zero() {
                for j in 0..cols {
                    let t = &q * &a[row][j];
                    a[i][j] -= t;
                }
            }
        }
        row += 1;
    }
    a.truncate(row);
    a
}

fn div_round(a: &Int, b: &Int) -> Int {
    // quotient rounding to nearest, so remainders shrink fast
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the integer kernel `{x : m x = 0}` (column vectors, returned as rows).
///
/// The basis is saturated: it spans ker(m) ∩ ℤⁿ.
pub fn kernel_basis(m: &[Vec<Int>]) -> IMat {
    let rows = m.len();
    let cols = if rows > 0 { m[0].len() } else { 0 };
    // row-reduce [mᵀ | I]; rows with zero mᵀ-part give the kernel
    let mut aug: IMat = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut r: Vec<Int> = (0..rows).map(|i| m[i][j].clone()).collect();
        for k in 0..cols {
            r.push(if k == j { Int::one() } else { Int::zero() });
        }
        aug.push(r);
    }
    let h = row_hnf_full(&aug, rows);
    let mut ker = Vec::new();
    for r in h {
        if r[..rows].iter().all(|x| x.is_zero()) {
            ker.push(r[rows..].to_vec());
        }
    }
    ker
}

/// Row HNF that only pivots on the first `pivot_cols` columns and keeps all rows.
fn row_hnf_full(m: &[Vec<Int>], pivot_cols: usize) -> IMat {
    let mut a: IMat = m.to_vec();
    if a.is_empty() {
        return a;
    }
    let cols = a[0].len();
    let mut row = 0;
    for col in 0..pivot_cols {
        if row >= a.len() {
            break;
        }
        loop {
            let mut min_i = None;
            for i in row..a.len() {
                if !a[i][col].is_zero() {
                    let better = match min_i {
                        None => true,
                        Some(m) => a[i][col].abs() < a[m as usize][col].abs(),
                    };
                    if better {
                        min_i = Some(i as isize);
                    }
                }
            }
            let Some(pi) = min_i else { break };
            a.swap(row, pi as usize);
            let mut done = true;
            for i in row + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = div_round(&a[i][col], &a[row][col]);
                for j in 0..cols {
                    let t = &q * &a[row][j];
                    a[i][j] -= t;
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !a[row][col].is_zero() {
            row += 1;
        }
    }
    a
}

/// Elementary divisors of the Smith normal form, including the trivial ones.
///
/// Returned sorted with each divisor dividing the next, all positive.
pub fn snf_divisors(m: &[Vec<Int>]) -> Vec<Int> {
    let mut a: IMat = m.to_vec();
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut divisors = Vec::new();
    let mut top = 0;
    while top < rows && top < cols {
        // find the nonzero entry of smallest absolute value in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if !a[i][j].is_zero() {
                    let better = match &pivot {
                        None => true,
                        Some((pi, pj)) => a[i][j].abs() < a[*pi][*pj].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(top, pi);
        for r in a.iter_mut() {
            r.swap(top, pj);
        }
        // clear row and column of the pivot
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in top + 1..rows {
                if a[i][top].is_zero() {
                    continue;
                }
                let q = div_round(&a[i][top], &a[top][top]);
                for j in top..cols {
                    let t = &q * &a[top][j];
                    a[i][j] -= t;
                }
                if !a[i][top].is_zero() {
                    // smaller remainder: swap up and restart
                    a.swap(top, i);
                    dirty = true;
                }
            }
            for j in top + 1..cols {
                if a[top][j].is_zero() {
                    continue;
                }
                let q = div_round(&a[top][j], &a[top][top]);
                for r in a.iter_mut().skip(top) {
                    let t = &q * &r[top];
                    r[j] -= t;
                }
                if !a[top][j].is_zero() {
                    for r in a.iter_mut() {
                        r.swap(top, j);
                    }
                    dirty = true;
                }
            }
        }
        // enforce divisibility: pivot must divide every remaining entry
        let mut fixed = false;
        'outer: for i in top + 1..rows {
            for j in top + 1..cols {
                if !(&a[i][j] % &a[top][top]).is_zero() {
                    // add row i to row top and redo this pivot
                    for jj in top..cols {
                        let t = a[i][jj].clone();
                        a[top][jj] += t;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }
        divisors.push(a[top][top].abs());
        top += 1;
    }
    divisors
}

/// Solve `a x = b` over the rationals; `None` if inconsistent.
pub fn solve_rat(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows > 0 { a[0].len() } else { 0 };
    let mut m: QMat = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for j in col..=cols {
            m[row][j] /= &pv;
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    let t = &f * &m[row][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    // consistency
    for r in m.iter().skip(row) {
        if !r[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][cols].clone();
    }
    Some(x)
}

/// Rank of an integer matrix.
pub fn rank(m: &[Vec<Int>]) -> usize {
    row_hnf(m).len()
}
