//! The Kummer quartic of the genus-2 curve in the affine chart of `P^3`, its
//! pencil in `r`, a numeric node search, and the elliptic fiber over the
//! `d = 2` critical locus with its discriminant.

mod nodes;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::Result;
use crate::exactmath::{pvar, sym, univariate_discriminant, MPoly, Rational, Symbol};
use crate::genus2::CurveParams;
use crate::numeric::CompiledPoly;

pub use nodes::{kummer_singular_search, KummerNode, NodeSearchOptions};

fn c(n: i64) -> MPoly {
    MPoly::from(n)
}

fn build(w: &MPoly) -> MPoly {
    let (u0, u1, u2) = (pvar("u0"), pvar("u1"), pvar("u2"));
    let (r, s, t) = (pvar("r"), pvar("s"), pvar("t"));
    let one = c(1);
    let sq = |p: &MPoly| p.pow(2);
    let quartics = &(&(u0.pow(4) + u1.pow(4)) + &u2.pow(4)) + &w.pow(4);
    let k1 = &t * &(&s - &one);
    let k2 = c(8) * (&(&r * &(&(&s - &t) + &one)) - &s);
    let k3 = c(2) * (&(&(&s * &t) + &t) - &(c(2) * &s));
    let k4 = c(2) * (&(&s - &one) * &(&(c(2) * &r) - &t));
    let k5 = &t * &(&(c(2) * &r) - &(&s + &one));
    &(&(&(&k1 * &quartics) - &(&k2 * &(&(&u0 * &u1) * &(&u2 * w))))
        - &(&k3 * &(&(&sq(&u1) * &sq(&u2)) + &(&sq(&u0) * &sq(w)))))
        - &(&k4 * &(&(&sq(&u2) * &sq(&u0)) + &(&sq(&u1) * &sq(w))))
        + (&k5 * &(&(&sq(&u0) * &sq(&u1)) + &(&sq(&u2) * &sq(w))))
}

/// The Kummer quartic `Q(u0, u1, u2; r, s, t)` exactly as displayed, in the
/// affine chart with homogenizing coordinate 1.
pub fn kummer_polynomial() -> &'static MPoly {
    static Q: OnceLock<MPoly> = OnceLock::new();
    Q.get_or_init(|| build(&c(1)))
}

/// The homogeneous form in `u0, u1, u2, w`, obtained by attaching `w` to the
/// `+1` terms. Setting `w = 1` recovers [`kummer_polynomial`].
pub fn kummer_homogeneous() -> &'static MPoly {
    static Q: OnceLock<MPoly> = OnceLock::new();
    Q.get_or_init(|| build(&pvar("w")))
}

/// `Q` at a rational affine point over the given curve.
pub fn kummer_eval(curve: &CurveParams, u: &[Rational; 3]) -> Result<Rational> {
    curve.validate()?;
    let mut vals = curve.assignment();
    for (name, v) in ["u0", "u1", "u2"].iter().zip(u) {
        vals.insert(sym(name), v.clone());
    }
    kummer_polynomial().eval(&vals)
}

/// `Q` with `r, s, t` substituted: a polynomial in `u0, u1, u2`.
pub fn kummer_specialized(curve: &CurveParams) -> MPoly {
    kummer_polynomial().specialize(&curve.assignment())
}

/// Decomposition `Q = Q0 + r Q1`.
#[derive(Clone, Debug)]
pub struct PencilReport {
    pub degree_in_r: u32,
    pub q0: MPoly,
    pub q1: MPoly,
    /// `Q0 + r Q1 == Q`.
    pub reconstructs: bool,
}

pub fn pencil_check() -> PencilReport {
    let q = kummer_polynomial();
    let r = sym("r");
    let q0 = q.coefficient_of(&r, 0);
    let q1 = q.coefficient_of(&r, 1);
    let reconstructs = &(&q0 + &(&pvar("r") * &q1)) == q;
    PencilReport {
        degree_in_r: q.degree_in(&r),
        q0,
        q1,
        reconstructs,
    }
}

/// For each pair of coordinates, whether `Q` is invariant under flipping the
/// signs of both: `[(u1,u2), (u0,u1), (u0,u2)]`. The first pair is the
/// `u`-part of the genus-2 involution.
pub fn kummer_sign_flip_invariance() -> [bool; 3] {
    let q = kummer_polynomial();
    [("u1", "u2"), ("u0", "u1"), ("u0", "u2")].map(|(a, b)| {
        let subs: HashMap<Symbol, MPoly> = [(sym(a), -pvar(a)), (sym(b), -pvar(b))].into();
        &q.substitute(&subs) == q
    })
}

/// Right-hand side of `y^2 = st(x^2-1)^2 + 4s x^2 - t(x^2+1)^2`, the fiber over
/// the fixed locus, as a quartic in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticQuartic {
    /// `[A, B, C, D, E]` for `A x^4 + B x^3 + C x^2 + D x + E`.
    pub coeffs: [MPoly; 5],
}

impl EllipticQuartic {
    pub fn polynomial(&self) -> MPoly {
        let x = pvar("x");
        self.coeffs
            .iter()
            .enumerate()
            .fold(MPoly::zero(), |acc, (i, c)| &acc + &(c * &x.pow(4 - i as u32)))
    }

    pub fn at(&self, s: &Rational, t: &Rational) -> [Rational; 5] {
        let vals = HashMap::from([(sym("s"), s.clone()), (sym("t"), t.clone())]);
        self.coeffs
            .clone()
            .map(|c| c.eval(&vals).expect("coefficients only involve s, t"))
    }
}

/// The quartic with symbolic `s, t`.
pub fn c2_fiber_quartic_symbolic() -> EllipticQuartic {
    let (x, s, t) = (pvar("x"), pvar("s"), pvar("t"));
    let x2 = x.pow(2);
    let rhs = &(&(&(&s * &t) * &(&x2 - &c(1)).pow(2)) + &(&(c(4) * &s) * &x2)) - &(&t * &(&x2 + &c(1)).pow(2));
    let cs = rhs.coefficients_in(&sym("x"));
    EllipticQuartic {
        coeffs: std::array::from_fn(|i| cs.get(4 - i).cloned().unwrap_or_else(MPoly::zero)),
    }
}

/// The quartic at given `s, t`, coefficients `[A, B, C, D, E]`.
pub fn c2_fiber_quartic(s: &Rational, t: &Rational) -> [Rational; 5] {
    c2_fiber_quartic_symbolic().at(s, t)
}

#[derive(Clone, Debug)]
pub struct DiscriminantIdentity {
    pub lhs: MPoly,
    pub rhs: MPoly,
    pub equal: bool,
}

/// `disc_x` of the fiber quartic against `4096 s^2 t^2 (s-1)^2 (s-t)^2 (t-1)^2`.
pub fn c2_discriminant_identity() -> DiscriminantIdentity {
    let lhs = univariate_discriminant(&c2_fiber_quartic_symbolic().polynomial(), &sym("x"))
        .expect("the fiber quartic has degree 4 in x");
    let (s, t) = (pvar("s"), pvar("t"));
    let one = c(1);
    let rhs = c(4096)
        * (&(&(&s * &t) * &(&s - &one)) * &(&(&s - &t) * &(&t - &one))).pow(2);
    let equal = lhs == rhs;
    DiscriminantIdentity { lhs, rhs, equal }
}

/// One row `(u0, u1, Q)` of a planar slice.
pub type MeshRow = (f64, f64, f64);

/// Samples `Q` on the slice `u2 = u2_value`, over the square
/// `[lo, hi]^2` with the given step, `u0` varying slowest.
pub fn kummer_mesh(curve: &CurveParams, u2_value: f64, lo: f64, hi: f64, step: f64) -> Result<Vec<MeshRow>> {
    curve.validate()?;
    let valid = step > 0.0 && hi >= lo;
    if !valid {
        return Err(crate::Error::InvalidInput(
            "mesh needs step > 0 and hi >= lo".into(),
        ));
    }
    let q = CompiledPoly::new(&kummer_specialized(curve), &["u0", "u1", "u2"].map(sym));
    let n = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    let grid: Vec<f64> = (0..n).map(|i| lo + i as f64 * step).collect();
    let mut rows = Vec::with_capacity(n * n);
    for &a in &grid {
        for &b in &grid {
            rows.push((a, b, q.eval(&[a, b, u2_value])));
        }
    }
    Ok(rows)
}

/// CSV text with header `u0,u1,Q` and LF line endings; floats carry 17
/// significant digits.
pub fn mesh_csv(rows: &[MeshRow]) -> String {
    let mut out = String::from("u0,u1,Q\n");
    for (a, b, q) in rows {
        let _ = writeln!(out, "{a:.16e},{b:.16e},{q:.16e}");
    }
    out
}
