use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::Field;

use super::matpoly::MatPoly2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroType {
    Semisimple,
    Nilpotent,
}

impl fmt::Display for ZeroType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeroType::Semisimple => "semisimple",
            ZeroType::Nilpotent => "nilpotent",
        })
    }
}

impl std::str::FromStr for ZeroType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "semisimple" | "s" => Ok(ZeroType::Semisimple),
            "nilpotent" | "n" => Ok(ZeroType::Nilpotent),
            _ => Err(Error::Parse(format!("unknown zero type {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroClassification<F: Field> {
    /// Largest `k` with `Phi = z^k phi`.
    pub order: usize,
    /// Type of `phi(0)`; reported only when `order >= 1`.
    pub derivative_type: Option<ZeroType>,
    pub det_phi_at_0: F,
    /// Order of vanishing of `det Phi` at 0, `None` when `det Phi` vanishes
    /// to the truncation degree.
    pub det_order: Option<usize>,
}

/// Writes `Phi = z^k phi` with `phi(0) != 0` and classifies `phi(0)`: a
/// nonzero traceless 2x2 matrix is semisimple iff its determinant is nonzero.
pub fn classify_zero<F: Field>(phi_big: &MatPoly2<F>) -> Result<ZeroClassification<F>> {
    let order = phi_big.order().ok_or(Error::OrderExceedsTruncation)?;
    let phi = phi_big.shift_down(order);
    let (a, b, c) = phi.at_zero();
    let det0 = -(a.clone() * a) - b * c;
    let derivative_type = (order >= 1).then(|| {
        if det0.is_zero() {
            ZeroType::Nilpotent
        } else {
            ZeroType::Semisimple
        }
    });
    Ok(ZeroClassification {
        order,
        derivative_type,
        det_phi_at_0: det0,
        det_order: phi_big.det().valuation(),
    })
}

/// Dimension counts for a Higgs field on a genus-`g` curve vanishing on
/// `D = sum m_k x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub genus: u32,
    pub deg_d: i64,
    pub nilpotent_zeros: usize,
    /// Rank of `DF`: `3g - 3 - deg D`.
    pub rank: i64,
    /// `3g - 3 + deg D`.
    pub dim_ker: i64,
    /// `6g - 6 - 2 deg D`.
    pub dim_critical_locus: i64,
    pub ok: bool,
    /// The violated inequality when `ok` is false.
    pub violation: Option<String>,
}

/// Checks `1 <= deg D <= 2g - 2` and `4g - 4 >= 2 deg D + #nilpotent` (the
/// quadratic differential `det Phi` has `4g - 4` zeros, of order `2m` at a
/// semisimple zero and at least `2m + 1` at a nilpotent one).
pub fn validate_zero_data(genus: u32, zeros: &[(u32, ZeroType)]) -> Result<DimensionReport> {
    if genus < 2 {
        return Err(Error::InvalidInput(format!("genus {genus} < 2")));
    }
    if zeros.iter().any(|(m, _)| *m == 0) {
        return Err(Error::InvalidInput("zero orders must be >= 1".into()));
    }
    let g = genus as i64;
    let deg_d: i64 = zeros.iter().map(|(m, _)| *m as i64).sum();
    let nilpotent_zeros = zeros.iter().filter(|(_, t)| *t == ZeroType::Nilpotent).count();
    let violation = if deg_d < 1 {
        Some(format!("deg D = {deg_d} < 1"))
    } else if deg_d > 2 * g - 2 {
        Some(format!("deg D = {deg_d} > 2g-2 = {}", 2 * g - 2))
    } else if 4 * g - 4 < 2 * deg_d + nilpotent_zeros as i64 {
        Some(format!(
            "2 deg D + #nilpotent = {} > 4g-4 = {}",
            2 * deg_d + nilpotent_zeros as i64,
            4 * g - 4
        ))
    } else {
        None
    };
    Ok(DimensionReport {
        genus,
        deg_d,
        nilpotent_zeros,
        rank: 3 * g - 3 - deg_d,
        dim_ker: 3 * g - 3 + deg_d,
        dim_critical_locus: 6 * g - 6 - 2 * deg_d,
        ok: violation.is_none(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rational;

    fn m(s: &str) -> MatPoly2 {
        MatPoly2::parse(s, Some(6)).unwrap()
    }

    #[test]
    fn classification_examples() {
        let c = classify_zero(&m("[[z,0],[0,-z]]")).unwrap();
        assert_eq!(c.order, 1);
        assert_eq!(c.derivative_type, Some(ZeroType::Semisimple));
        assert_eq!(c.det_phi_at_0, Rational::from(-1));
        assert_eq!(c.det_order, Some(2));

        let c = classify_zero(&m("[[0,z],[0,0]]")).unwrap();
        assert_eq!(c.derivative_type, Some(ZeroType::Nilpotent));
        assert_eq!(c.det_order, None);

        let c = classify_zero(&m("[[0,z^2],[1,0]]")).unwrap();
        assert_eq!(c.order, 0);
        assert_eq!(c.derivative_type, None);

        let c = classify_zero(&m("[[0,z^2],[z^3,0]]")).unwrap();
        assert_eq!((c.order, c.derivative_type), (2, Some(ZeroType::Nilpotent)));
        assert_eq!(c.det_order, Some(5));

        assert!(matches!(
            classify_zero(&m("[[0,0],[0,0]]")),
            Err(Error::OrderExceedsTruncation)
        ));
    }

    #[test]
    fn dimension_examples() {
        let r = validate_zero_data(2, &[(1, ZeroType::Semisimple)]).unwrap();
        assert_eq!((r.deg_d, r.rank, r.dim_ker, r.dim_critical_locus, r.ok), (1, 2, 4, 4, true));
        let r = validate_zero_data(2, &[(2, ZeroType::Semisimple)]).unwrap();
        assert!(r.ok);
        assert_eq!(r.dim_critical_locus, 2);
        let r = validate_zero_data(2, &[(1, ZeroType::Semisimple); 3]).unwrap();
        assert!(!r.ok);
        assert!(r.violation.unwrap().contains("2g-2"));
        let r = validate_zero_data(2, &[(2, ZeroType::Nilpotent)]).unwrap();
        assert!(!r.ok);
        assert!(validate_zero_data(1, &[]).is_err());
    }
}
