use nalgebra::DMatrix;

use crate::error::Result;
use crate::exactmath::{MPoly, RatMatrix, Rational};
use crate::numeric::CompiledPoly;

use super::hamiltonians::{specialized_h, HFormulaVariant};
use super::types::{phase_symbols, CurveParams, PhasePoint};

/// Default relative singular-value tolerance for the floating rank.
pub const DEFAULT_RANK_TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct RankInfo {
    pub rank: usize,
    /// Corank `3 - rank`.
    pub d: usize,
    /// `6 - rank`.
    pub dim_ker: usize,
    /// Singular values, largest first (floating path only).
    pub singular_values: Vec<f64>,
}

impl RankInfo {
    fn from_rank(rank: usize, singular_values: Vec<f64>) -> Self {
        RankInfo {
            rank,
            d: 3 - rank,
            dim_ker: 6 - rank,
            singular_values,
        }
    }
}

/// The symbolic 3x6 Jacobian `[dh_i / d(u, eta)]` over a fixed curve.
pub fn jacobian_polys(curve: &CurveParams, variant: HFormulaVariant) -> [[MPoly; 6]; 3] {
    let hs = specialized_h(curve, variant);
    let vars = phase_symbols();
    hs.map(|h| std::array::from_fn(|k| h.partial_derivative(&vars[k])))
}

/// Exact rank of `DF` at a rational point.
pub fn jacobian_rank(
    curve: &CurveParams,
    pt: &PhasePoint<Rational>,
    variant: HFormulaVariant,
) -> Result<RankInfo> {
    curve.validate()?;
    let vals = pt.assignment();
    let jac = jacobian_polys(curve, variant);
    let mut rows = Vec::with_capacity(3);
    for row in &jac {
        rows.push(row.iter().map(|p| p.eval(&vals)).collect::<Result<Vec<_>>>()?);
    }
    let m = RatMatrix::from_rows(rows)?;
    Ok(RankInfo::from_rank(m.exact_rank(), Vec::new()))
}

/// Compiled floating Jacobian, for repeated evaluation.
pub struct FloatJacobian {
    entries: Vec<CompiledPoly>,
}

impl FloatJacobian {
    pub fn new(curve: &CurveParams, variant: HFormulaVariant) -> Self {
        let order = phase_symbols();
        let entries = jacobian_polys(curve, variant)
            .iter()
            .flatten()
            .map(|p| CompiledPoly::new(p, &order))
            .collect();
        FloatJacobian { entries }
    }

    pub fn eval(&self, x: &[f64; 6]) -> DMatrix<f64> {
        DMatrix::from_fn(3, 6, |r, c| self.entries[r * 6 + c].eval(x))
    }
}

/// Number of singular values above `tol * sigma_max`.
pub fn numeric_rank(m: &DMatrix<f64>, tol: f64) -> (usize, Vec<f64>) {
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    let top = sv.first().copied().unwrap_or(0.0);
    let rank = if top == 0.0 {
        0
    } else {
        sv.iter().filter(|s| **s > tol * top).count()
    };
    (rank, sv)
}

/// Floating rank of `DF` with relative tolerance `tol`.
pub fn jacobian_rank_f64(
    curve: &CurveParams,
    pt: &[f64; 6],
    variant: HFormulaVariant,
    tol: f64,
) -> Result<RankInfo> {
    curve.validate()?;
    let m = FloatJacobian::new(curve, variant).eval(pt);
    let (rank, sv) = numeric_rank(&m, tol);
    Ok(RankInfo::from_rank(rank, sv))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve() -> CurveParams {
        CurveParams::from_i64(2, 3, 5).unwrap()
    }

    #[test]
    fn zero_section_has_rank_zero() {
        let pt = PhasePoint::from_i64([3, -1, 2, 0, 0, 0]);
        let info = jacobian_rank(&curve(), &pt, HFormulaVariant::CANONICAL).unwrap();
        assert_eq!((info.rank, info.d, info.dim_ker), (0, 3, 6));
    }

    #[test]
    fn generic_point_has_full_rank() {
        let pt = PhasePoint::from_i64([3, -1, 2, 1, 4, -2]);
        let info = jacobian_rank(&curve(), &pt, HFormulaVariant::CANONICAL).unwrap();
        assert_eq!(info.rank, 3);
    }

    #[test]
    fn fixed_locus_has_rank_one() {
        let pt = PhasePoint::from_i64([3, 0, 0, 2, 0, 0]);
        let info = jacobian_rank(&curve(), &pt, HFormulaVariant::CANONICAL).unwrap();
        assert_eq!((info.rank, info.d), (1, 2));
    }

    #[test]
    fn float_rank_agrees_with_exact() {
        for arr in [[3, -1, 2, 1, 4, -2], [3, 0, 0, 2, 0, 0], [1, 1, 1, 0, 0, 0]] {
            let pt = PhasePoint::from_i64(arr);
            let exact = jacobian_rank(&curve(), &pt, HFormulaVariant::CANONICAL).unwrap();
            let fl = jacobian_rank_f64(&curve(), &pt.to_f64(), HFormulaVariant::CANONICAL, DEFAULT_RANK_TOL)
                .unwrap();
            assert_eq!(exact.rank, fl.rank);
        }
    }
}
