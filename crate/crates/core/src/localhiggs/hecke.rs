use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{Field, QuadraticNumber, Rational, UniPoly};

use super::matpoly::MatPoly2;

/// A direction `(u : v)`, read as the covector `x -> u x2 - v x1`; its
/// kernel is spanned by the vector `(u, v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Direction<F: Field> {
    pub u: F,
    pub v: F,
}

impl<F: Field> fmt::Display for Direction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.u, self.v)
    }
}

/// Hecke modification of `Phi = z phi` along `alpha`: conjugate by a
/// constant `g` with first row `(-v, u)` and `det g = 1`, then change basis
/// by `e1 -> z e1`, giving
/// `Phi' = [[a' z, b'], [c' z^2, -a' z]]` where `g phi g^{-1} = [[a', b'], [c', -a']]`.
/// The characteristic polynomial is unchanged.
pub fn hecke_transform<F: Field>(phi_big: &MatPoly2<F>, alpha: &Direction<F>) -> Result<MatPoly2<F>> {
    match phi_big.order() {
        None => return Err(Error::OrderExceedsTruncation),
        Some(0) => return Err(Error::HiggsNotVanishing),
        Some(_) => {}
    }
    let (u, v) = (alpha.u.clone(), alpha.v.clone());
    let g = if !u.is_zero() {
        let w = (-F::one()).div(&u).expect("u is nonzero");
        [[-v, u], [w, F::zero()]]
    } else if !v.is_zero() {
        let w = (-F::one()).div(&v).expect("v is nonzero");
        [[-v, u], [F::zero(), w]]
    } else {
        return Err(Error::InvalidInput("direction (0:0)".into()));
    };
    let phi = phi_big.shift_down(1);
    let t = phi.conjugate(g);
    let n = phi_big.n;
    Ok(MatPoly2::new(t.a.shift_up(1), t.b, t.c.shift_up(2), n))
}

#[derive(Clone, Debug)]
pub struct HeckeCritical {
    /// `(b'(0), 2 a'(0), -c'(0))`: coefficients of `v^2`, `uv`, `u^2`.
    pub quadratic: [Rational; 3],
    /// `a'(0)^2 + b'(0) c'(0)`.
    pub discriminant: Rational,
    /// The two roots, exact in the rationals or in `Q(sqrt D)`.
    pub roots: Vec<Direction<QuadraticNumber>>,
}

/// Directions at which the Hecke curve meets the critical locus: the roots of
/// `v^2 b' + 2 u v a' - u^2 c'` with `[[a', b'], [c', -a']] = phi(0)`. These
/// are the eigenvector lines of `phi(0)`.
pub fn hecke_critical_alphas(phi: &MatPoly2<Rational>) -> Result<HeckeCritical> {
    let (a, b, c) = phi.at_zero();
    let quadratic = [b.clone(), &a * &Rational::from(2), -c.clone()];
    let disc = &(&a * &a) + &(&b * &c);
    if disc.is_zero() {
        return Err(Error::DoublePointNotOrdinary);
    }
    let sqrt = match disc.sqrt_exact() {
        Some(r) => QuadraticNumber::rational(r),
        None => QuadraticNumber::new(Rational::zero(), Rational::one(), disc.clone()),
    };
    let lift = QuadraticNumber::rational;
    let roots = if !b.is_zero() {
        // u = 1: b v^2 + 2 a v - c = 0
        let inv_b = lift(b.recip().expect("b is nonzero"));
        [sqrt.clone(), -sqrt]
            .into_iter()
            .map(|s| Direction {
                u: QuadraticNumber::rational(Rational::one()),
                v: (lift(-a.clone()) + s) * inv_b.clone(),
            })
            .collect()
    } else {
        // u (2 a v - c u) = 0 with a != 0
        vec![
            Direction {
                u: lift(Rational::one()),
                v: lift(&c / &(&a * &Rational::from(2))),
            },
            Direction {
                u: lift(Rational::zero()),
                v: lift(Rational::one()),
            },
        ]
    };
    Ok(HeckeCritical {
        quadratic,
        discriminant: disc,
        roots,
    })
}

/// `tr(M^2)` as a polynomial, truncated at `M.n`.
pub fn trace_square<F: Field>(m: &MatPoly2<F>) -> UniPoly<F> {
    m.trace_product(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localhiggs::{classify_zero, ZeroType};

    fn m(s: &str) -> MatPoly2 {
        MatPoly2::parse(s, Some(6)).unwrap()
    }

    fn dir(u: i64, v: i64) -> Direction<Rational> {
        Direction { u: u.into(), v: v.into() }
    }

    #[test]
    fn diagonal_case() {
        let big = m("[[z,0],[0,-z]]");
        let t = hecke_transform(&big, &dir(0, 1)).unwrap();
        let c = classify_zero(&t).unwrap();
        assert_eq!((c.order, c.derivative_type), (1, Some(ZeroType::Semisimple)));
        assert_eq!(trace_square(&t).coeffs(), &[0.into(), 0.into(), Rational::from(2)]);
    }

    #[test]
    fn preserves_trace_square() {
        let big = m("[[0,z],[z,0]]");
        for (u, v) in [(1, 0), (0, 1), (2, 3), (-1, 5)] {
            let t = hecke_transform(&big, &dir(u, v)).unwrap();
            assert_eq!(trace_square(&t), trace_square(&big));
        }
    }

    #[test]
    fn generic_direction_gives_nonvanishing_field() {
        let t = hecke_transform(&m("[[z,0],[0,-z]]"), &dir(1, 1)).unwrap();
        assert_eq!(t.order(), Some(0));
    }

    #[test]
    fn needs_a_zero() {
        assert!(matches!(
            hecke_transform(&m("[[1,0],[0,-1]]"), &dir(1, 0)),
            Err(Error::HiggsNotVanishing)
        ));
    }

    #[test]
    fn critical_alphas_diagonal() {
        let h = hecke_critical_alphas(&m("[[1,0],[0,-1]]")).unwrap();
        assert_eq!(h.quadratic, [0.into(), 2.into(), 0.into()]);
        let shown: Vec<String> = h.roots.iter().map(ToString::to_string).collect();
        assert_eq!(shown.len(), 2);
        assert!(h.roots.contains(&Direction {
            u: QuadraticNumber::rational(1.into()),
            v: QuadraticNumber::rational(0.into())
        }));
        assert!(h.roots.contains(&Direction {
            u: QuadraticNumber::rational(0.into()),
            v: QuadraticNumber::rational(1.into())
        }));
    }

    #[test]
    fn critical_alphas_gaussian() {
        let phi = m("[[0,1],[-1,0]]");
        let h = hecke_critical_alphas(&phi).unwrap();
        assert_eq!(h.quadratic, [1.into(), 0.into(), 1.into()]);
        for root in &h.roots {
            assert_eq!(root.v.clone() * root.v.clone(), QuadraticNumber::rational((-1).into()));
            let big = phi.shift_up(1).lift::<QuadraticNumber>();
            let t = hecke_transform(&big, root).unwrap();
            let c = classify_zero(&t).unwrap();
            assert_eq!((c.order, c.derivative_type), (1, Some(ZeroType::Semisimple)));
            assert_eq!(trace_square(&t), trace_square(&big));
        }
    }

    #[test]
    fn non_ordinary_rejected() {
        assert!(matches!(
            hecke_critical_alphas(&m("[[0,1],[0,0]]")),
            Err(Error::DoublePointNotOrdinary)
        ));
    }
}
