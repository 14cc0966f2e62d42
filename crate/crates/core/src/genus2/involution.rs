use std::collections::HashMap;
use std::ops::Neg;

use crate::exactmath::{sym, MPoly, Symbol};

use super::hamiltonians::{h_polynomials, HFormulaVariant};
use super::types::PhasePoint;

/// `(u0, u1, u2, eta0, eta1, eta2) -> (u0, -u1, -u2, eta0, -eta1, -eta2)`.
pub fn involution_apply<T: Clone + Neg<Output = T>>(pt: &PhasePoint<T>) -> PhasePoint<T> {
    PhasePoint {
        u: [pt.u[0].clone(), -pt.u[1].clone(), -pt.u[2].clone()],
        eta: [pt.eta[0].clone(), -pt.eta[1].clone(), -pt.eta[2].clone()],
    }
}

fn flipped() -> [Symbol; 4] {
    ["u1", "u2", "eta1", "eta2"].map(sym)
}

/// `p` composed with the involution.
pub fn involution_pullback(p: &MPoly) -> MPoly {
    let subs: HashMap<Symbol, MPoly> = flipped()
        .into_iter()
        .map(|s| {
            let v = -MPoly::var(s.clone());
            (s, v)
        })
        .collect();
    p.substitute(&subs)
}

/// Parity test: `p` is invariant iff every monomial has even total degree in
/// `u1, u2, eta1, eta2`.
pub fn is_involution_invariant(p: &MPoly) -> bool {
    let idx: Vec<usize> = p
        .vars()
        .iter()
        .enumerate()
        .filter(|(_, v)| flipped().contains(v))
        .map(|(i, _)| i)
        .collect();
    p.terms()
        .all(|(e, _)| idx.iter().map(|&i| e[i]).sum::<u32>() % 2 == 0)
}

/// `h_i o sigma = h_i` for `i = 0, 1, 2`, checked by substitution.
pub fn invariance_check(variant: HFormulaVariant) -> bool {
    h_polynomials(variant)
        .iter()
        .all(|h| &involution_pullback(h) == h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::pvar;

    #[test]
    fn flips_the_stated_coordinates() {
        let p = PhasePoint::from_i64([1, 2, 3, 4, 5, 6]);
        assert_eq!(involution_apply(&p), PhasePoint::from_i64([1, -2, -3, 4, -5, -6]));
        assert_eq!(involution_apply(&involution_apply(&p)), p);
    }

    #[test]
    fn fixed_points_are_the_stated_locus() {
        let p = PhasePoint::from_i64([7, 0, 0, -3, 0, 0]);
        assert_eq!(involution_apply(&p), p);
        let q = PhasePoint::from_i64([7, 0, 1, -3, 0, 0]);
        assert_ne!(involution_apply(&q), q);
    }

    #[test]
    fn variant_invariance() {
        assert!(invariance_check(HFormulaVariant::FullyCorrected));
        assert!(invariance_check(HFormulaVariant::Eta1Corrected));
        assert!(!invariance_check(HFormulaVariant::AsPrinted));
    }

    #[test]
    fn perturbed_h0_is_not_invariant() {
        let h0 = &h_polynomials(HFormulaVariant::CANONICAL)[0];
        let bad = h0 + &(pvar("u1") * pvar("eta0").pow(2));
        assert!(!is_involution_invariant(&bad));
        assert_ne!(involution_pullback(&bad), bad);
        assert!(is_involution_invariant(h0));
    }

    #[test]
    fn float_points_flip_too() {
        let p = PhasePoint::new([0.5, 1.5, -2.0], [1.0, 0.0, 3.0]);
        let q = involution_apply(&p);
        assert_eq!(q.u, [0.5, -1.5, 2.0]);
    }
}
