//! Discriminants of univariate polynomials with symbolic coefficients.

use super::matrix::poly_determinant;
use super::mpoly::{MPoly, Symbol};
use crate::error::Error;

/// Sylvester resultant of `p` and `q`, given as coefficient lists in
/// ascending degree (leading coefficients must be nonzero).
pub fn resultant(p: &[MPoly], q: &[MPoly]) -> MPoly {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in p.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in q.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    poly_determinant(rows)
}

/// Discriminant of `p` as a polynomial in `var`, with the usual
/// normalization `disc = (-1)^(n(n-1)/2) / a_n * Res(p, p')`, so a monic
/// polynomial's discriminant is the product of squared root differences.
pub fn discriminant(p: &MPoly, var: &Symbol) -> Result<MPoly, Error> {
    let coeffs = p.coefficients_in(var);
    let n = coeffs.len() - 1;
    if n == 0 {
        return Err(Error::DegreeMismatch {
            expected: "at least 1".into(),
            found: 0,
        });
    }
    let deriv = p.partial_derivative(var).coefficients_in(var);
    let res = resultant(&coeffs, &deriv);
    let lead = &coeffs[n];
    let d = res
        .div_exact(lead)
        .expect("leading coefficient divides the resultant");
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Discriminant of a polynomial of degree exactly 4 in `var`.
pub fn univariate_discriminant(p: &MPoly, var: &Symbol) -> Result<MPoly, Error> {
    let deg = p.degree_in(var);
    if deg != 4 {
        return Err(Error::DegreeMismatch {
            expected: "4".into(),
            found: deg,
        });
    }
    discriminant(p, var)
}
