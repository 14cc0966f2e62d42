//! Exact matrices over the rationals and over rational polynomials.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged matrix rows".into()));
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// Rank over the rationals. Each row is scaled to integers and the
    /// elimination runs fraction-free (Bareiss), so every intermediate is an
    /// exact integer and no tolerance is involved.
    pub fn exact_rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = Rational::lcm_denominators(row);
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                    m[i][j] = v.div_floor(&prev);
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&i| !a[(i, col)].is_zero())?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let pivot = a[(col, col)].recip().unwrap();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &pivot;
                inv[(col, j)] = &inv[(col, j)] * &pivot;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let x = &a[(col, j)] * &f;
                    a[(i, j)] -= x;
                    let y = &inv[(col, j)] * &f;
                    inv[(i, j)] -= y;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Characteristic polynomial `det(xI - A)` (monic) by Faddeev-LeVerrier.
    pub fn characteristic_polynomial(&self) -> UniPoly<Rational> {
        assert_eq!(self.rows, self.cols, "non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut m = RatMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k)/k
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self * &m;
            coeffs[n - k] = -(am.trace() / Rational::from(k as u64));
        }
        UniPoly::new(coeffs)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_poly(&self, p: &UniPoly<Rational>) -> Self {
        let n = self.rows;
        let mut acc = RatMatrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &acc * self;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// Diagonalizable over the complex numbers: the squarefree part of the
    /// characteristic polynomial annihilates the matrix.
    pub fn is_semisimple(&self) -> bool {
        let sf = self.characteristic_polynomial().squarefree_part();
        self.eval_poly(&sf).is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        let n = self.rows;
        let mut p = self.clone();
        for _ in 1..n.max(1) {
            p = &p * self;
        }
        p.is_zero()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl<'b> Mul<&'b RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &'b RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl<'b> Add<&'b RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &'b RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'b> Sub<&'b RatMatrix> for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &'b RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Determinant of a square matrix of polynomials by Bareiss elimination;
/// every division is exact in the polynomial ring.
pub fn poly_determinant(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "non-square matrix");
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return MPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = MPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::mpoly::pvar;

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).exact_rank(), 3);
        assert_eq!(RatMatrix::zeros(3, 6).exact_rank(), 0);
        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).exact_rank(), 1);
        let m = RatMatrix::from_rows(vec![
            vec![Rational::new(1, 2), Rational::new(1, 3)],
            vec![Rational::new(3, 2), Rational::from(1)],
        ])
        .unwrap();
        assert_eq!(m.exact_rank(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(3));
        assert!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn characteristic_polynomial_and_semisimplicity() {
        let j = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(!j.is_semisimple());
        assert!(j.is_nilpotent());
        let d = RatMatrix::from_i64(&[&[-2, 0], &[0, 2]]);
        assert!(d.is_semisimple());
        // x^2 - 4
        assert_eq!(
            d.characteristic_polynomial(),
            UniPoly::new(vec![Rational::from(-4), Rational::zero(), Rational::one()])
        );
        // rotation: irreducible char poly, still semisimple over C
        assert!(RatMatrix::from_i64(&[&[0, -1], &[1, 0]]).is_semisimple());
        // 3x3 Jordan block with eigenvalue 5
        assert!(!RatMatrix::from_i64(&[&[5, 1, 0], &[0, 5, 1], &[0, 0, 5]]).is_semisimple());
    }

    #[test]
    fn symbolic_determinant() {
        let (a, b, c, d) = (pvar("a"), pvar("b"), pvar("c"), pvar("d"));
        let det = poly_determinant(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        assert_eq!(det, &a * &d - &b * &c);
        // needs a row swap
        let z = MPoly::zero();
        let det = poly_determinant(vec![
            vec![z.clone(), a.clone(), z.clone()],
            vec![b.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), c.clone()],
        ]);
        assert_eq!(det, -(&(&a * &b) * &c));
    }
}
