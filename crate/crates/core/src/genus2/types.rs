use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{sym, Rational, Symbol};

/// Branch data of `w^2 = z(z-1)(z-r)(z-s)(z-t)`, the genus-2 curve with
/// branch points `0, 1, inf, r, s, t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveParams {
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
}

impl CurveParams {
    /// Validated constructor: `r, s, t` pairwise distinct and outside `{0, 1}`.
    pub fn new(r: Rational, s: Rational, t: Rational) -> Result<Self> {
        let c = CurveParams { r, s, t };
        c.validate()?;
        Ok(c)
    }

    pub fn from_i64(r: i64, s: i64, t: i64) -> Result<Self> {
        CurveParams::new(r.into(), s.into(), t.into())
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [("r", &self.r), ("s", &self.s), ("t", &self.t)];
        for (name, v) in vals {
            if v.is_zero() || v.is_one() {
                return Err(Error::InvalidCurve(format!(
                    "{name} = {v} collides with a fixed branch point"
                )));
            }
        }
        if self.r == self.s || self.r == self.t || self.s == self.t {
            return Err(Error::InvalidCurve("r, s, t must be distinct".into()));
        }
        Ok(())
    }

    /// Parses `r,s,t` (each entry `p` or `p/q`).
    pub fn parse(text: &str) -> Result<Self> {
        let vals = parse_rationals(text, 3)?;
        let [r, s, t]: [Rational; 3] = vals.try_into().expect("length checked");
        CurveParams::new(r, s, t)
    }

    pub fn assignment(&self) -> HashMap<Symbol, Rational> {
        HashMap::from([
            (sym("r"), self.r.clone()),
            (sym("s"), self.s.clone()),
            (sym("t"), self.t.clone()),
        ])
    }

    /// The six branch points in the order `z1..z6 = 0, 1, inf, r, s, t`.
    pub fn branch_points(&self) -> [BranchPoint; 6] {
        [
            BranchPoint::Finite(Rational::zero()),
            BranchPoint::Finite(Rational::one()),
            BranchPoint::Infinity,
            BranchPoint::Finite(self.r.clone()),
            BranchPoint::Finite(self.s.clone()),
            BranchPoint::Finite(self.t.clone()),
        ]
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.r, self.s, self.t)
    }
}

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchPoint {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for BranchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchPoint::Finite(q) => write!(f, "{q}"),
            BranchPoint::Infinity => f.write_str("inf"),
        }
    }
}

/// A point `(u0, u1, u2, eta0, eta1, eta2)` in the affine chart of `T*P^3`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhasePoint<T = Rational> {
    pub u: [T; 3],
    pub eta: [T; 3],
}

impl<T: Clone> PhasePoint<T> {
    pub fn new(u: [T; 3], eta: [T; 3]) -> Self {
        PhasePoint { u, eta }
    }

    pub fn from_array(c: [T; 6]) -> Self {
        let [a, b, cc, d, e, f] = c;
        PhasePoint {
            u: [a, b, cc],
            eta: [d, e, f],
        }
    }

    pub fn to_array(&self) -> [T; 6] {
        [
            self.u[0].clone(),
            self.u[1].clone(),
            self.u[2].clone(),
            self.eta[0].clone(),
            self.eta[1].clone(),
            self.eta[2].clone(),
        ]
    }
}

impl PhasePoint<Rational> {
    pub fn from_i64(c: [i64; 6]) -> Self {
        PhasePoint::from_array(c.map(Rational::from))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let vals = parse_rationals(text, 6)?;
        let arr: [Rational; 6] = vals.try_into().expect("length checked");
        Ok(PhasePoint::from_array(arr))
    }

    pub fn to_f64(&self) -> [f64; 6] {
        self.to_array().map(|q| q.to_f64())
    }

    pub fn assignment(&self) -> HashMap<Symbol, Rational> {
        phase_symbols()
            .into_iter()
            .zip(self.to_array())
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for PhasePoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.u[0], self.u[1], self.u[2], self.eta[0], self.eta[1], self.eta[2]
        )
    }
}

/// The quadratic differential `(a0 + a1 z + a2 z^2) dz^2 / f(z)`, stored by
/// its numerator coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadDiff<T = Rational> {
    pub a: [T; 3],
}

impl QuadDiff<Rational> {
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Rational::is_zero)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let vals = parse_rationals(text, 3)?;
        Ok(QuadDiff {
            a: vals.try_into().expect("length checked"),
        })
    }

    pub fn to_f64(&self) -> QuadDiff<f64> {
        QuadDiff {
            a: [self.a[0].to_f64(), self.a[1].to_f64(), self.a[2].to_f64()],
        }
    }
}

impl<T: fmt::Display> fmt::Display for QuadDiff<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a[0], self.a[1], self.a[2])
    }
}

/// `u0, u1, u2, eta0, eta1, eta2`.
pub fn phase_symbols() -> [Symbol; 6] {
    ["u0", "u1", "u2", "eta0", "eta1", "eta2"].map(sym)
}

pub(crate) fn parse_rationals(text: &str, n: usize) -> Result<Vec<Rational>> {
    let vals = text
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<Rational>>>()?;
    if vals.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} comma-separated values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}
