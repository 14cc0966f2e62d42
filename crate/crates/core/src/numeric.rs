//! Floating-point evaluation of polynomials whose symbolic form is built
//! exactly elsewhere.

use std::ops::{Add, Mul};

use crate::exactmath::{MPoly, Symbol};

/// A polynomial with `f64` coefficients over a fixed variable order.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(Vec<(usize, u32)>, f64)>,
}

impl CompiledPoly {
    /// Compiles `p` over `order`. Variables of `p` missing from `order`
    /// panic, so callers specialize parameters first.
    pub fn new(p: &MPoly, order: &[Symbol]) -> Self {
        let idx: Vec<usize> = p
            .vars()
            .iter()
            .map(|v| {
                order
                    .iter()
                    .position(|o| o == v)
                    .unwrap_or_else(|| panic!("variable {v} not in evaluation order"))
            })
            .collect();
        let terms = p
            .terms()
            .map(|(e, c)| {
                let pows = e
                    .iter()
                    .zip(&idx)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, i)| (*i, *k))
                    .collect();
                (pows, c.to_f64())
            })
            .collect();
        CompiledPoly { terms }
    }

    pub fn eval<T>(&self, x: &[T]) -> T
    where
        T: Copy + Add<Output = T> + Mul<Output = T> + From<f64>,
    {
        let mut acc = T::from(0.0);
        for (pows, c) in &self.terms {
            let mut t = T::from(*c);
            for &(i, k) in pows {
                for _ in 0..k {
                    t = t * x[i];
                }
            }
            acc = acc + t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{pvar, sym};
    use num_complex::Complex64;

    #[test]
    fn evaluates_in_given_order() {
        let p = pvar("x").pow(2) * pvar("y") - MPoly::from(3) * pvar("y");
        let c = CompiledPoly::new(&p, &[sym("y"), sym("x")]);
        assert_eq!(c.eval(&[2.0, 3.0]), 18.0 - 6.0);
        let z = c.eval(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]);
        assert_eq!(z, Complex64::new(-4.0, 0.0));
    }
}
