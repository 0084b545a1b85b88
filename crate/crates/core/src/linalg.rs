//! Exact linear algebra over an integer ring: fraction-free reduced row
//! echelon forms, ranks, kernels and span membership.

use num_traits::Zero;

use crate::scalar::Scalar;

/// A matrix in fraction-free reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<C> {
    pub ncols: usize,
    pub rows: Vec<Vec<C>>,
    pub pivots: Vec<usize>,
}

fn content<C: Scalar>(row: &[C]) -> C {
    row.iter().fold(C::zero(), |g, x| g.gcd(x))
}

fn normalize<C: Scalar>(row: &mut [C]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
    if let Some(first) = row.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// `target <- a * target - b * source`, with `a, b` chosen to cancel column `col`.
fn eliminate<C: Scalar>(target: &mut [C], source: &[C], col: usize) {
    let b = target[col].clone();
    if b.is_zero() {
        return;
    }
    let a = source[col].clone();
    let g = a.gcd(&b);
    let (a, b) = (a / g.clone(), b / g);
    for (t, s) in target.iter_mut().zip(source) {
        *t = a.clone() * t.clone() - b.clone() * s.clone();
    }
    normalize(target);
}

impl<C: Scalar> Echelon<C> {
    /// Reduce the given rows, each of length `ncols`.
    pub fn new(ncols: usize, input: Vec<Vec<C>>) -> Self {
        let mut e = Echelon { ncols, rows: Vec::new(), pivots: Vec::new() };
        for r in input {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows; the result is zero iff `v` is in the span
    /// (up to a nonzero integer multiple).
    pub fn reduce(&self, v: &[C]) -> Vec<C> {
        assert_eq!(v.len(), self.ncols, "vector length");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            eliminate(&mut w, row, p);
        }
        w
    }

    pub fn contains(&self, v: &[C]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Add a row; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<C>) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        normalize(&mut w);
        for row in self.rows.iter_mut() {
            eliminate(row, &w, p);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, w);
        self.pivots.insert(at, p);
        true
    }

    /// Integer basis of `{x : row . x = 0 for every row}`.
    pub fn kernel(&self) -> Vec<Vec<C>> {
        let mut out = Vec::new();
        let lcm = self.rows.iter().zip(&self.pivots).fold(C::one(), |l, (r, &p)| l.lcm(&r[p]));
        for f in 0..self.ncols {
            if self.pivots.contains(&f) {
                continue;
            }
            let mut v = vec![C::zero(); self.ncols];
            v[f] = lcm.clone();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -(lcm.clone() * row[f].clone() / row[p].clone());
            }
            normalize(&mut v);
            out.push(v);
        }
        out
    }
}

/// Rank of a list of rows of equal length.
pub fn rank<C: Scalar>(ncols: usize, rows: Vec<Vec<C>>) -> usize {
    Echelon::new(ncols, rows).rank()
}

/// Kernel of the map `x -> M x` for `M` given by its rows.
pub fn kernel<C: Scalar>(ncols: usize, rows: Vec<Vec<C>>) -> Vec<Vec<C>> {
    Echelon::new(ncols, rows).kernel()
}

/// Transpose of a dense matrix with `ncols` columns.
pub fn transpose<C: Scalar>(ncols: usize, rows: &[Vec<C>]) -> Vec<Vec<C>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

/// Dense matrix product.
pub fn mat_mul<C: Scalar>(a: &[Vec<C>], b: &[Vec<C>], inner: usize, ncols: usize) -> Vec<Vec<C>> {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|c| {
                    (0..inner).fold(C::zero(), |acc, t| {
                        if row[t].is_zero() {
                            acc
                        } else {
                            acc + row[t].clone() * b[t][c].clone()
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
pub fn determinant<C: Scalar>(m: &[Vec<C>]) -> C {
    let n = m.len();
    if n == 0 {
        return C::one();
    }
    let mut a: Vec<Vec<C>> = m.to_vec();
    let mut sign = C::one();
    let mut prev = C::one();
    for i in 0..n {
        if a[i][i].is_zero() {
            match (i + 1..n).find(|&r| !a[r][i].is_zero()) {
                Some(r) => {
                    a.swap(i, r);
                    sign = -sign;
                }
                None => return C::zero(),
            }
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let v = a[i][i].clone() * a[r][c].clone() - a[r][i].clone() * a[i][c].clone();
                a[r][c] = v / prev.clone();
            }
            a[r][i] = C::zero();
        }
        prev = a[i][i].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
