//! Dense exact linear algebra over ℚ and ℤ.
//!
//! Everything here is sized for the small matrices this crate produces
//! (coboundary operators of fixture complexes, reflection matrices, blade
//! multiplication tables), so the implementations favor clarity over
//! asymptotics: Gaussian elimination over ℚ, and Smith normal form over ℤ
//! by repeated euclidean row/column reduction with all four transform
//! matrices tracked exactly.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use std::ops::Index;

/// Dense row-major matrix over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut m = RatMat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer entries given as `i64`, for fixed test matrices.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> RatMat {
        RatMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        RatMat::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }

    pub fn add(&self, rhs: &RatMat) -> RatMat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        RatMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &RatMat) -> RatMat {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        RatMat::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }

    pub fn scale(&self, t: &BigRational) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |i, j| t * &self[(i, j)])
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-exact Gaussian elimination. Square only.
    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for t in 0..n {
            let Some(p) = (t..n).find(|&i| !a[(i, t)].is_zero()) else {
                return BigRational::zero();
            };
            if p != t {
                for j in 0..n {
                    let tmp = a[(t, j)].clone();
                    let pv = a[(p, j)].clone();
                    a.set(t, j, pv);
                    a.set(p, j, tmp);
                }
                det = -det;
            }
            let pivot = a[(t, t)].clone();
            det *= &pivot;
            for i in t + 1..n {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let f = &a[(i, t)] / &pivot;
                for j in t..n {
                    let v = &a[(i, j)] - &f * &a[(t, j)];
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    /// Rank over ℚ.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (m, n) = (self.rows, self.cols);
        let mut rank = 0;
        let mut col = 0;
        while rank < m && col < n {
            let Some(p) = (rank..m).find(|&i| !a[(i, col)].is_zero()) else {
                col += 1;
                continue;
            };
            for j in 0..n {
                let tmp = a[(rank, j)].clone();
                let pv = a[(p, j)].clone();
                a.set(rank, j, pv);
                a.set(p, j, tmp);
            }
            let pivot = a[(rank, col)].clone();
            for i in rank + 1..m {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] / &pivot;
                for j in col..n {
                    let v = &a[(i, j)] - &f * &a[(rank, j)];
                    a.set(i, j, v);
                }
            }
            rank += 1;
            col += 1;
        }
        rank
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

/// Dense row-major matrix over ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut m = IntMat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().map(|&x| BigInt::from(x))).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        IntMat::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| BigRational::from_integer(self[(i, j)].clone()) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// Rows `r..` as a new matrix.
    pub fn rows_from(&self, r: usize) -> IntMat {
        assert!(r <= self.rows);
        IntMat::from_fn(self.rows - r, self.cols, |i, j| self[(i + r, j)].clone())
    }

    /// Column `j` as a vector.
    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |i, j| {
            BigRational::from_integer(self[(i, j)].clone())
        })
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self[(i, c)].clone();
            self.set(i, c, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self[(r, j)].clone();
            self.set(r, j, v);
        }
    }

    /// row_i += k * row_j
    fn row_add(&mut self, i: usize, j: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self[(i, c)] + k * &self[(j, c)];
            self.set(i, c, v);
        }
    }

    /// col_i += k * col_j
    fn col_add(&mut self, i: usize, j: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self[(r, i)] + k * &self[(r, j)];
            self.set(r, i, v);
        }
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

/// Smith normal form `d = u · a · v` with unimodular `u`, `v` and their
/// exact inverses. The diagonal of `d` is nonnegative with each entry
/// dividing the next; `factors` lists the nonzero entries.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
    pub rank: usize,
    pub factors: Vec<BigInt>,
}

struct Reducer {
    s: IntMat,
    u: IntMat,
    u_inv: IntMat,
    v: IntMat,
    v_inv: IntMat,
}

impl Reducer {
    fn row_swap(&mut self, i: usize, j: usize) {
        self.s.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn row_neg(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// row_i += k * row_j, with the inverse fold on u_inv.
    fn row_op(&mut self, i: usize, j: usize, k: &BigInt) {
        self.s.row_add(i, j, k);
        self.u.row_add(i, j, k);
        self.u_inv.col_add(j, i, &-k.clone());
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.s.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// col_j += k * col_i, with the inverse fold on v_inv.
    fn col_op(&mut self, j: usize, i: usize, k: &BigInt) {
        self.s.col_add(j, i, k);
        self.v.col_add(j, i, k);
        self.v_inv.row_add(i, j, &-k.clone());
    }
}

pub fn smith_normal_form(a: &IntMat) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut r = Reducer {
        s: a.clone(),
        u: IntMat::identity(m),
        u_inv: IntMat::identity(m),
        v: IntMat::identity(n),
        v_inv: IntMat::identity(n),
    };

    let mut t = 0;
    'pivot: while t < m.min(n) {
        // Deterministic pivot: smallest |entry| in the trailing block,
        // first in row-major order among ties.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if r.s[(i, j)].is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if r.s[(bi, bj)].abs() <= r.s[(i, j)].abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != t {
            r.row_swap(t, pi);
        }
        if pj != t {
            r.col_swap(t, pj);
        }

        loop {
            // Clear below the pivot.
            for i in t + 1..m {
                if !r.s[(i, t)].is_zero() {
                    let q = &r.s[(i, t)] / &r.s[(t, t)];
                    r.row_op(i, t, &-q);
                }
            }
            if let Some(i) = (t + 1..m).find(|&i| !r.s[(i, t)].is_zero()) {
                // Leftover remainder is strictly smaller; promote and redo.
                r.row_swap(t, i);
                continue;
            }
            // Clear right of the pivot.
            for j in t + 1..n {
                if !r.s[(t, j)].is_zero() {
                    let q = &r.s[(t, j)] / &r.s[(t, t)];
                    r.col_op(j, t, &-q);
                }
            }
            if let Some(j) = (t + 1..n).find(|&j| !r.s[(t, j)].is_zero()) {
                r.col_swap(t, j);
                continue;
            }
            // Pivot must divide the rest of the block for the factor chain.
            let nondiv = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(&r.s[(i, j)] % &r.s[(t, t)]).is_zero());
            if let Some((i, _)) = nondiv {
                r.row_op(t, i, &BigInt::one());
                continue;
            }
            break;
        }
        if r.s[(t, t)].is_negative() {
            r.row_neg(t);
        }
        t += 1;
        continue 'pivot;
    }

    let rank = t;
    let factors = (0..rank).map(|i| r.s[(i, i)].clone()).collect();
    SmithForm {
        d: r.s,
        u: r.u,
        u_inv: r.u_inv,
        v: r.v,
        v_inv: r.v_inv,
        rank,
        factors,
    }
}
