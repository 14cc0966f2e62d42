//! The three Hamiltonians `h0, h1, h2` of the genus-2 system, in the affine
//! chart `(u0, u1, u2)` of `P^3` with conjugate momenta `(eta0, eta1, eta2)`
//! and branch parameters `r, s, t`. The overall constant is dropped.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactmath::{pvar, MPoly, Rational};

use super::types::{CurveParams, PhasePoint, QuadDiff};

/// Which transcription of the Hamiltonians to use.
///
/// The published display has two slips, both in the coefficient of a
/// momentum inside a squared bracket. `AsPrinted` reproduces it verbatim,
/// `Eta1Corrected` restores `eta1` in the fourth bracket of `h0` only, and
/// `FullyCorrected` additionally replaces `eta1(u2^2+1)` by `eta1(u1^2+1)` in
/// the third bracket of `h2`. Only `FullyCorrected` Poisson-commutes; see
/// [`super::commutation_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HFormulaVariant {
    AsPrinted,
    Eta1Corrected,
    FullyCorrected,
}

impl HFormulaVariant {
    pub const ALL: [HFormulaVariant; 3] = [
        HFormulaVariant::AsPrinted,
        HFormulaVariant::Eta1Corrected,
        HFormulaVariant::FullyCorrected,
    ];

    /// The variant selected by the commutation oracle.
    pub const CANONICAL: HFormulaVariant = HFormulaVariant::FullyCorrected;

    pub fn name(self) -> &'static str {
        match self {
            HFormulaVariant::AsPrinted => "printed",
            HFormulaVariant::Eta1Corrected => "eta1",
            HFormulaVariant::FullyCorrected => "corrected",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for HFormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HFormulaVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "printed" | "as_printed" => Ok(HFormulaVariant::AsPrinted),
            "eta1" | "eta1_corrected" => Ok(HFormulaVariant::Eta1Corrected),
            "corrected" | "fully_corrected" => Ok(HFormulaVariant::FullyCorrected),
            _ => Err(Error::Parse(format!(
                "unknown variant {s:?} (expected printed, eta1 or corrected)"
            ))),
        }
    }
}

fn c(n: i64) -> MPoly {
    MPoly::from(n)
}

fn build(variant: HFormulaVariant) -> [MPoly; 3] {
    let (u0, u1, u2) = (pvar("u0"), pvar("u1"), pvar("u2"));
    let (e0, e1, e2) = (pvar("eta0"), pvar("eta1"), pvar("eta2"));
    let (r, s, t) = (pvar("r"), pvar("s"), pvar("t"));
    let one = c(1);
    let sq = |p: &MPoly| p.pow(2);
    // sum of eta_i * v_i
    let pair = |v: [&MPoly; 3]| &(&(&e0 * v[0]) + &(&e1 * v[1])) + &(&e2 * v[2]);

    let u0u1 = &u0 * &u1;
    let u0u2 = &u0 * &u2;
    let u1u2 = &u1 * &u2;
    let u0sq = sq(&u0);
    let u1sq = sq(&u1);
    let u2sq = sq(&u2);

    // h0
    let a = pair([&(&u0sq - &one), &(&u0u1 + &u2), &(&u0u2 + &u1)]);
    let b = pair([&(&u0u1 - &u2), &(&u1sq + &one), &(&u1u2 + &u0)]);
    let cc = &(&e0 * &u0) + &(&e1 * &u1);
    let d_second = match variant {
        HFormulaVariant::AsPrinted => &e0,
        _ => &e1,
    };
    let d = &(&(&e0 * &(&u0sq + &one)) + &(d_second * &(&u0u1 + &u2))) + &(&e2 * &(&u0u2 - &u1));
    let rst = &(&r * &s) * &t;
    let h0 = &(&(&rst * &sq(&a)) - &(&(&s * &t) * &sq(&b)))
        + &(&(&(c(4) * &r) * &s) * &sq(&cc))
        - &(&(&r * &t) * &sq(&d));

    // h1
    let p = pair([&u0, &u1, &u2]);
    let psq = sq(&p);
    let esq_plus = &(&sq(&e0) + &sq(&e1)) + &sq(&e2);
    let esq_mixed = &(&sq(&e0) - &sq(&e1)) + &sq(&e2);
    let terms = [
        &(&t * &(&(&u0sq + &u1sq) + &(&u2sq + &one))) * &(&esq_plus + &psq),
        &(&(&s * &t) * &(&(&u0sq - &u1sq) + &(&u2sq - &one))) * &(&esq_mixed - &psq),
        &(&(c(4) * &r) * &(&u0u2 - &u1)) * &(&(&e0 * &e2) + &(&p * &e1)),
        &(&(&(c(4) * &s) * &r) * &(&u0u2 + &u1)) * &(&(&e2 * &e0) - &(&p * &e1)),
        &(&(c(4) * &s) * &(&u1u2 + &u0)) * &(&(&e1 * &e2) - &(&p * &e0)),
        &(&(&(c(4) * &r) * &t) * &(&u0u1 + &u2)) * &(&(&e0 * &e1) - &(&p * &e2)),
    ];
    let h1 = terms.iter().fold(MPoly::zero(), |acc, x| &acc + x);

    // h2
    let e = pair([&(&u0u2 + &u1), &(&u1u2 + &u0), &(&u2sq - &one)]);
    let g = pair([&(&u0u2 - &u1), &(&u1u2 + &u0), &(&u2sq + &one)]);
    let third_eta1 = match variant {
        HFormulaVariant::FullyCorrected => &u1sq + &one,
        _ => &u2sq + &one,
    };
    let hb = &(&(&e0 * &(&u0u1 + &u2)) + &(&e2 * &(&u1u2 - &u0))) + &(&e1 * &third_eta1);
    let last = &(&e1 * &u1) + &(&e2 * &u2);
    let h2 = &(&(&s * &sq(&e)) - &sq(&g)) - &(&t * &sq(&hb)) + (&(c(4) * &r) * &sq(&last));

    [h0, h1, h2]
}

static CACHE: [OnceLock<[MPoly; 3]>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];

/// Symbolic `(h0, h1, h2)` in `u, eta, r, s, t`. Each is a quadratic form in
/// the momenta. Built once per variant and cached.
pub fn h_polynomials(variant: HFormulaVariant) -> &'static [MPoly; 3] {
    CACHE[variant.index()].get_or_init(|| build(variant))
}

/// `(h0, h1, h2)` at a rational point of `T*P^3` over a given curve.
pub fn eval_f(
    curve: &CurveParams,
    pt: &PhasePoint<Rational>,
    variant: HFormulaVariant,
) -> Result<QuadDiff<Rational>> {
    curve.validate()?;
    let mut vals = curve.assignment();
    vals.extend(pt.assignment());
    let hs = h_polynomials(variant);
    let a = [hs[0].eval(&vals)?, hs[1].eval(&vals)?, hs[2].eval(&vals)?];
    Ok(QuadDiff { a })
}

/// `h_i` with `r, s, t` substituted: polynomials in the phase variables only.
pub fn specialized_h(curve: &CurveParams, variant: HFormulaVariant) -> [MPoly; 3] {
    let vals = curve.assignment();
    let hs = h_polynomials(variant);
    [
        hs[0].specialize(&vals),
        hs[1].specialize(&vals),
        hs[2].specialize(&vals),
    ]
}
