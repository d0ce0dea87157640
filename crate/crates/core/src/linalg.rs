//! Exact integer and rational matrices.
//!
//! Matrices are small (rank of the lattice, at most a dozen or so) so everything
//! is dense, row-major and backed by big integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn vec_gcd(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self::from_fn(rows.len(), cols, |r, c| int(rows[r][c]))
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        IntMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: &[Vec<BigInt>]) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn set_col(&mut self, c: usize, v: &[BigInt]) {
        for (r, x) in v.iter().enumerate() {
            self.set(r, c, x.clone());
        }
    }

    pub fn to_rows_i64(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| i64::try_from(x).expect("entry exceeds i64"))
                    .collect()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            Rat::from_integer(self.get(r, c).clone())
        })
    }

    /// Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if !self.is_unimodular() {
            return None;
        }
        self.to_rat().inverse()?.to_int()
    }

    pub fn permutation(perm: &[usize]) -> IntMatrix {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.set(p, i, BigInt::one());
        }
        m
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let n = rows.len();
        RatMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: &[Vec<Rat>]) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).to_integer()
        }))
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in 0..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in 0..self.cols {
                    let v = self.get(i, j) - &f * self.get(r, j);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
                return Rat::zero();
            };
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det *= &piv;
            for i in c + 1..n {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c) / &piv;
                for j in c..n {
                    let v = a.get(i, j) - &f * a.get(c, j);
                    a.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = RatMatrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// Basis of the right null space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -a.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `self * x = b`, with free variables set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch");
        let mut aug = RatMatrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Scales a rational vector to the primitive integer vector on the same ray.
pub fn primitive_on_ray(v: &[Rat]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = vec_gcd(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Column operations bringing `a` to a lower echelon form. Returns the
/// transformed matrix, the unimodular transform `u` with `a * u = h`, and the
/// number of nonzero columns (which come first).
pub fn column_echelon(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut p = 0;
    for i in 0..m {
        if p == n {
            break;
        }
        for j in p + 1..n {
            if h.get(i, j).is_zero() {
                continue;
            }
            let (x, y) = (h.get(i, p).clone(), h.get(i, j).clone());
            let (g, s, t) = ext_gcd(&x, &y);
            let (xg, yg) = (&x / &g, &y / &g);
            for mat in [&mut h, &mut u] {
                for r in 0..mat.rows() {
                    let cp = mat.get(r, p).clone();
                    let cj = mat.get(r, j).clone();
                    mat.set(r, p, &s * &cp + &t * &cj);
                    mat.set(r, j, &xg * &cj - &yg * &cp);
                }
            }
        }
        if !h.get(i, p).is_zero() {
            p += 1;
        }
    }
    (h, u, p)
}

/// Basis (as columns) of the integer kernel `{x in Z^n : a x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let (_, u, rank) = column_echelon(a);
    let cols: Vec<Vec<BigInt>> = (rank..a.cols()).map(|c| u.col(c)).collect();
    let mut k = IntMatrix::from_cols(&cols);
    if cols.is_empty() {
        k = IntMatrix::zeros(a.cols(), 0);
    }
    reduce_basis_columns(&k)
}

/// Deterministic tidying of a lattice basis: lower Hermite form on the
/// transposed basis, so that the result depends only on the lattice.
pub fn reduce_basis_columns(k: &IntMatrix) -> IntMatrix {
    if k.cols() == 0 {
        return k.clone();
    }
    hermite_rows(&k.transpose()).transpose()
}

/// Row Hermite normal form of a matrix with independent rows.
pub fn hermite_rows(a: &IntMatrix) -> IntMatrix {
    let (m, n) = (a.rows(), a.cols());
    let mut h: Vec<Vec<BigInt>> = (0..m).map(|r| a.row(r).to_vec()).collect();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let Some(p) = (r..m)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()))
            else {
                break;
            };
            h.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                let pr = h[r].clone();
                for (x, y) in h[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if (r..m).all(|i| h[i][c].is_zero()) {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if q.is_zero() {
                continue;
            }
            let pr = h[r].clone();
            for (x, y) in h[i].iter_mut().zip(&pr) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    IntMatrix::from_rows(h)
}

/// A unimodular matrix whose first column is the primitive vector `d`.
pub fn complete_to_unimodular(d: &[BigInt]) -> Option<IntMatrix> {
    let n = d.len();
    let row = IntMatrix::from_rows(vec![d.to_vec()]);
    let (h, u, _) = column_echelon(&row);
    let g = h.get(0, 0).clone();
    if !g.abs().is_one() {
        return None;
    }
    let w = u.inverse_unimodular()?.transpose();
    let mut v = w;
    if g.is_negative() {
        for r in 0..n {
            let x = -v.get(r, 0).clone();
            v.set(r, 0, x);
        }
    }
    debug_assert_eq!(v.col(0), d.to_vec());
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = m(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = 2*(-26) + (-2) = -54
        assert_eq!(a.det(), int(-54));
        assert_eq!(a.to_rat().det(), rat(-54));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det(), int(-1));
    }

    #[test]
    fn kernel_of_fan_vectors() {
        let a = m(&[&[0, -1, 0, 1], &[1, 0, -1, 0]]);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        // e1+e3 and e2+e4 span the kernel, so the index is one
        let target = m(&[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]);
        let both = IntMatrix::from_cols(&[k.col(0), k.col(1)]);
        assert_eq!(both, reduce_basis_columns(&target));
    }

    #[test]
    fn completion_has_given_first_column() {
        let d = vec![int(3), int(5), int(-7)];
        let v = complete_to_unimodular(&d).unwrap();
        assert!(v.is_unimodular());
        assert_eq!(v.col(0), d);
        assert!(complete_to_unimodular(&[int(2), int(4)]).is_none());
    }

    #[test]
    fn inverse_and_solve() {
        let a = m(&[&[1, 2], &[3, 5]]);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), IntMatrix::identity(2));
        let s = a.to_rat().solve(&[rat(1), rat(1)]).unwrap();
        assert_eq!(s, vec![rat(-3), rat(2)]);
    }
}
