//! Symplectic pairing, Hessian residues and the nondegeneracy test on the
//! truncated loop algebra `sl2[z]/z^k`.

use crate::error::{Error, Result};
use crate::exactmath::{Field, RatMatrix, Rational};

use super::matpoly::{MatPoly2, SlBasis};

fn check_truncation<F: Field>(k: usize, need: usize, ms: &[&MatPoly2<F>]) {
    assert!(k >= 1, "k must be at least 1");
    for m in ms {
        assert!(m.n >= need, "truncation {} below required degree {need}", m.n);
    }
}

/// Coefficient of `z^(k-1)` in `tr(psi1 [phi, psi2])`.
pub fn symplectic_pairing<F: Field>(phi: &MatPoly2<F>, psi1: &MatPoly2<F>, psi2: &MatPoly2<F>, k: usize) -> F {
    check_truncation(k, k - 1, &[phi, psi1, psi2]);
    psi1.trace_product(&phi.bracket(psi2)).coeff(k - 1)
}

/// Coefficient of `z^(k-1-i)` in `tr([phi, psi1] [phi, psi2])`.
pub fn hessian_residue<F: Field>(
    phi: &MatPoly2<F>,
    i: usize,
    k: usize,
    psi1: &MatPoly2<F>,
    psi2: &MatPoly2<F>,
) -> F {
    assert!(i < k, "need 0 <= i < k");
    check_truncation(k, k - 1, &[phi, psi1, psi2]);
    phi.bracket(psi1).trace_product(&phi.bracket(psi2)).coeff(k - 1 - i)
}

/// The same residue written in terms of variations: coefficient of
/// `z^(k-1-i)` in `tr(dot1 dot2)`.
pub fn hessian_residue_of_variations<F: Field>(dot1: &MatPoly2<F>, dot2: &MatPoly2<F>, i: usize, k: usize) -> F {
    assert!(i < k, "need 0 <= i < k");
    check_truncation(k, k - 1, &[dot1, dot2]);
    dot1.trace_product(dot2).coeff(k - 1 - i)
}

#[derive(Clone, Debug)]
pub struct NondegeneracyReport {
    pub k: usize,
    /// Labels of the basis chosen for the complement of the centralizer.
    pub basis: Vec<String>,
    /// Matrix of the symplectic pairing on that basis.
    pub omega: RatMatrix,
    /// Hessian forms `H_0 .. H_{k-1}`.
    pub hessians: Vec<RatMatrix>,
    /// `X_i = omega^{-1} H_i`, so that `omega(X_i a, b) = H_i(a, b)` with
    /// `omega(a, b) = a^T omega b`.
    pub operators: Vec<RatMatrix>,
    pub commuting: bool,
    pub all_semisimple: bool,
    /// Dimension of the span of the `X_i`.
    pub span_rank: usize,
    pub cartan: bool,
}

fn coords(m: &MatPoly2<Rational>, k: usize) -> Vec<Rational> {
    (0..k)
        .flat_map(|j| {
            let (a, b, c) = m.coeff(j);
            [a, b, c]
        })
        .collect()
}

/// Builds the Hessian operators of a zero `Phi = z^k phi` on
/// `sl2[z]/z^k` modulo the centralizer of `phi`, and tests whether they span
/// a commutative algebra of semisimple elements of dimension `k`.
pub fn nondegeneracy_check(phi: &MatPoly2<Rational>, k: usize) -> Result<NondegeneracyReport> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let (a0, b0, c0) = phi.at_zero();
    if a0.is_zero() && b0.is_zero() && c0.is_zero() {
        return Err(Error::DegenerateLocalModel("phi(0) = 0".into()));
    }
    let n = 2 * k + 2;
    let phi = phi.with_truncation(n);

    let full: Vec<(String, MatPoly2<Rational>)> = (0..k)
        .flat_map(|j| SlBasis::ALL.map(|s| (s.label(j), MatPoly2::basis(s, j, n))))
        .collect();

    // ad(phi) on sl2[z]/z^k must have a k-dimensional kernel.
    let ad = RatMatrix::from_rows(
        full.iter()
            .map(|(_, b)| coords(&phi.bracket(b), k))
            .collect(),
    )?;
    let kernel_dim = 3 * k - ad.exact_rank();
    if kernel_dim != k {
        return Err(Error::DegenerateLocalModel(format!(
            "centralizer has dimension {kernel_dim}, expected {k}"
        )));
    }

    // The centralizer is spanned by z^j phi; complete it greedily.
    let mut span: Vec<Vec<Rational>> = (0..k).map(|j| coords(&phi.shift_up(j), k)).collect();
    let mut chosen = Vec::new();
    for (label, b) in &full {
        let mut trial = span.clone();
        trial.push(coords(b, k));
        if RatMatrix::from_rows(trial.clone())?.exact_rank() == trial.len() {
            span = trial;
            chosen.push((label.clone(), b.clone()));
        }
    }
    debug_assert_eq!(chosen.len(), 2 * k);

    let form = |f: &dyn Fn(&MatPoly2<Rational>, &MatPoly2<Rational>) -> Rational| -> Result<RatMatrix> {
        RatMatrix::from_rows(
            chosen
                .iter()
                .map(|(_, x)| chosen.iter().map(|(_, y)| f(x, y)).collect())
                .collect(),
        )
    };
    let omega = form(&|x, y| symplectic_pairing(&phi, x, y, k))?;
    let omega_inv = omega
        .inverse()
        .ok_or_else(|| Error::DegenerateLocalModel("pairing is degenerate on the quotient".into()))?;
    let mut hessians = Vec::with_capacity(k);
    let mut operators = Vec::with_capacity(k);
    for i in 0..k {
        let h = form(&|x, y| hessian_residue(&phi, i, k, x, y))?;
        operators.push(&omega_inv * &h);
        hessians.push(h);
    }

    let commuting = operators
        .iter()
        .enumerate()
        .all(|(i, x)| operators[i + 1..].iter().all(|y| x.commutator(y).is_zero()));
    let all_semisimple = operators.iter().all(RatMatrix::is_semisimple);
    let span_rank = RatMatrix::from_rows(operators.iter().map(|x| x.entries().to_vec()).collect())?.exact_rank();
    let cartan = commuting && all_semisimple && span_rank == k;
    Ok(NondegeneracyReport {
        k,
        basis: chosen.into_iter().map(|(l, _)| l).collect(),
        omega,
        hessians,
        operators,
        commuting,
        all_semisimple,
        span_rank,
        cartan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn m(s: &str) -> MatPoly2 {
        MatPoly2::parse(s, Some(6)).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let (h, e, f) = (m("[[1,0],[0,-1]]"), m("[[0,1],[0,0]]"), m("[[0,0],[1,0]]"));
        assert_eq!(symplectic_pairing(&h, &e, &f, 1), q(-2));
        assert_eq!(symplectic_pairing(&h, &f, &e, 1), q(2));
        assert_eq!(symplectic_pairing(&h, &e, &h, 1), q(0));
    }

    #[test]
    fn hessian_examples() {
        let (h, e, f) = (m("[[1,0],[0,-1]]"), m("[[0,1],[0,0]]"), m("[[0,0],[1,0]]"));
        assert_eq!(hessian_residue(&h, 0, 1, &e, &f), q(-4));
        assert_eq!(hessian_residue(&h, 0, 1, &e, &e), q(0));
        let dot1 = h.bracket(&e);
        let dot2 = h.bracket(&f);
        assert_eq!(hessian_residue_of_variations(&dot1, &dot2, 0, 1), q(-4));
    }

    #[test]
    fn semisimple_k1_is_cartan() {
        let r = nondegeneracy_check(&m("[[1,0],[0,-1]]"), 1).unwrap();
        assert_eq!(r.basis, ["e", "f"]);
        assert_eq!(r.operators[0], RatMatrix::from_i64(&[&[-2, 0], &[0, 2]]));
        assert!(r.cartan);
    }

    #[test]
    fn nilpotent_k1_is_not() {
        let r = nondegeneracy_check(&m("[[0,1],[0,0]]"), 1).unwrap();
        assert_eq!(r.basis, ["h", "f"]);
        assert_eq!(r.omega, RatMatrix::from_i64(&[&[0, 2], &[-2, 0]]));
        assert_eq!(r.hessians[0], RatMatrix::from_i64(&[&[0, 0], &[0, 2]]));
        assert_eq!(r.operators[0], RatMatrix::from_i64(&[&[0, -1], &[0, 0]]));
        assert!(!r.cartan);
    }

    #[test]
    fn higher_order_zero_has_nilpotent_hessian() {
        let r = nondegeneracy_check(&m("[[1 + z, 2z],[-z, -1 - z]]"), 2).unwrap();
        assert!(r.commuting);
        assert!(r.operators[1].is_nilpotent());
        assert!(!r.operators[1].is_zero());
        assert!(!r.cartan);
    }

    #[test]
    fn vanishing_phi_is_rejected() {
        assert!(matches!(
            nondegeneracy_check(&m("[[z,0],[0,-z]]"), 1),
            Err(Error::DegenerateLocalModel(_))
        ));
    }
}
