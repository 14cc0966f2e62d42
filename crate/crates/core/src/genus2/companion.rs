use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::types::{BranchPoint, CurveParams};

/// Branch points of `w~^2 = (a z + b)(z - z_2)...(z - z_6)`: the curve obtained
/// by replacing the branch point `z_{z1_index}` (1-based, in the order
/// `0, 1, inf, r, s, t`) by the root `-b/a`. The new root comes first, then
/// the retained points in their original order.
pub fn c1_companion_branch_points(
    z1_index: usize,
    a: &Rational,
    b: &Rational,
    curve: &CurveParams,
) -> Result<Vec<BranchPoint>> {
    curve.validate()?;
    if !(1..=6).contains(&z1_index) {
        return Err(Error::InvalidInput(format!(
            "branch index {z1_index} outside 1..6"
        )));
    }
    if a.is_zero() {
        return Err(Error::DegenerateCompanion(
            "a z + b has no finite root when a = 0".into(),
        ));
    }
    let root = BranchPoint::Finite(-(b / a));
    let retained: Vec<BranchPoint> = curve
        .branch_points()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| i + 1 != z1_index)
        .map(|(_, p)| p)
        .collect();
    if retained.contains(&root) {
        return Err(Error::DegenerateCompanion(format!(
            "root {root} coincides with a retained branch point"
        )));
    }
    let mut out = vec![root];
    out.extend(retained);
    Ok(out)
}
