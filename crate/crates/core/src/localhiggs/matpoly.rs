use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::{Field, Rational, UniPoly};

/// A traceless matrix `[[a, b], [c, -a]]` of polynomials in `z`, reduced
/// modulo `z^(n+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatPoly2<F: Field = Rational> {
    pub a: UniPoly<F>,
    pub b: UniPoly<F>,
    pub c: UniPoly<F>,
    /// Truncation degree: coefficients of `z^k` with `k > n` are dropped.
    pub n: usize,
}

impl<F: Field> MatPoly2<F> {
    pub fn new(a: UniPoly<F>, b: UniPoly<F>, c: UniPoly<F>, n: usize) -> Self {
        MatPoly2 {
            a: a.truncate(n),
            b: b.truncate(n),
            c: c.truncate(n),
            n,
        }
    }

    pub fn zero(n: usize) -> Self {
        MatPoly2::new(UniPoly::zero(), UniPoly::zero(), UniPoly::zero(), n)
    }

    /// Constant matrix `[[a, b], [c, -a]]`.
    pub fn constant(a: F, b: F, c: F, n: usize) -> Self {
        MatPoly2::new(UniPoly::constant(a), UniPoly::constant(b), UniPoly::constant(c), n)
    }

    /// `h = diag(1, -1)`, `e = [[0,1],[0,0]]`, `f = [[0,0],[1,0]]` times `z^j`.
    pub fn basis(kind: SlBasis, j: usize, n: usize) -> Self {
        let one = || UniPoly::monomial(F::one(), j);
        let (a, b, c) = match kind {
            SlBasis::H => (one(), UniPoly::zero(), UniPoly::zero()),
            SlBasis::E => (UniPoly::zero(), one(), UniPoly::zero()),
            SlBasis::F => (UniPoly::zero(), UniPoly::zero(), one()),
        };
        MatPoly2::new(a, b, c, n)
    }

    pub fn with_truncation(&self, n: usize) -> Self {
        MatPoly2::new(self.a.clone(), self.b.clone(), self.c.clone(), n)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Largest `k` with `z^k` dividing every entry; `None` if zero.
    pub fn order(&self) -> Option<usize> {
        [&self.a, &self.b, &self.c]
            .iter()
            .filter_map(|p| p.valuation())
            .min()
    }

    /// Entries at `z = 0` as `(a(0), b(0), c(0))`.
    pub fn at_zero(&self) -> (F, F, F) {
        (self.a.coeff(0), self.b.coeff(0), self.c.coeff(0))
    }

    /// Coefficient matrix of `z^k` as `(a_k, b_k, c_k)`.
    pub fn coeff(&self, k: usize) -> (F, F, F) {
        (self.a.coeff(k), self.b.coeff(k), self.c.coeff(k))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.n.min(o.n);
        MatPoly2::new(self.a.add(&o.a), self.b.add(&o.b), self.c.add(&o.c), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.n.min(o.n);
        MatPoly2::new(self.a.sub(&o.a), self.b.sub(&o.b), self.c.sub(&o.c), n)
    }

    pub fn scale(&self, s: &F) -> Self {
        MatPoly2::new(self.a.scale(s), self.b.scale(s), self.c.scale(s), self.n)
    }

    /// `z^k * self`, still truncated at `n`.
    pub fn shift_up(&self, k: usize) -> Self {
        MatPoly2::new(self.a.shift_up(k), self.b.shift_up(k), self.c.shift_up(k), self.n)
    }

    /// `self / z^k`; the caller guarantees divisibility. The truncation
    /// degree drops by `k`.
    pub fn shift_down(&self, k: usize) -> Self {
        MatPoly2::new(
            self.a.shift_down(k),
            self.b.shift_down(k),
            self.c.shift_down(k),
            self.n.saturating_sub(k),
        )
    }

    /// `[self, o]`, reduced at the smaller truncation.
    pub fn bracket(&self, o: &Self) -> Self {
        let n = self.n.min(o.n);
        let m = |x: &UniPoly<F>, y: &UniPoly<F>| x.mul_trunc(y, n);
        let two = F::one() + F::one();
        let a = m(&self.b, &o.c).sub(&m(&self.c, &o.b));
        let b = m(&self.a, &o.b).sub(&m(&self.b, &o.a)).scale(&two);
        let c = m(&self.c, &o.a).sub(&m(&self.a, &o.c)).scale(&two);
        MatPoly2::new(a, b, c, n)
    }

    /// `tr(self * o) = 2 a a' + b c' + c b'`, truncated.
    pub fn trace_product(&self, o: &Self) -> UniPoly<F> {
        let n = self.n.min(o.n);
        let m = |x: &UniPoly<F>, y: &UniPoly<F>| x.mul_trunc(y, n);
        let two = F::one() + F::one();
        m(&self.a, &o.a)
            .scale(&two)
            .add(&m(&self.b, &o.c))
            .add(&m(&self.c, &o.b))
    }

    /// `det = -a^2 - b c`, truncated.
    pub fn det(&self) -> UniPoly<F> {
        let n = self.n;
        self.a
            .mul_trunc(&self.a, n)
            .add(&self.b.mul_trunc(&self.c, n))
            .neg()
    }

    /// `g M g^{-1}` for a constant `g` with `det g = 1`, given row-major.
    pub fn conjugate(&self, g: [[F; 2]; 2]) -> Self {
        let [[p, q], [r, s]] = g;
        // g^{-1} = [[s, -q], [-r, p]]; entries of g M g^{-1} expanded
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let lin = |x: F, pa: &UniPoly<F>, y: F, pb: &UniPoly<F>, w: F, pc: &UniPoly<F>| {
            pa.scale(&x).add(&pb.scale(&y)).add(&pc.scale(&w))
        };
        let two = F::one() + F::one();
        let na = lin(p.clone() * s.clone() + q.clone() * r.clone(), a, -(p.clone() * r.clone()), b, q.clone() * s.clone(), c);
        let nb = lin(-(two.clone() * p.clone() * q.clone()), a, p.clone() * p.clone(), b, -(q.clone() * q.clone()), c);
        let nc = lin(two * r.clone() * s.clone(), a, -(r.clone() * r), b, s.clone() * s, c);
        MatPoly2::new(na, nb, nc, self.n)
    }

    /// Evaluates the entries at `z = x`.
    pub fn eval(&self, x: &F) -> (F, F, F) {
        (self.a.eval(x), self.b.eval(x), self.c.eval(x))
    }
}

impl MatPoly2<Rational> {
    /// The same matrix over a larger field.
    pub fn lift<G: Field>(&self) -> MatPoly2<G> {
        let l = |p: &UniPoly<Rational>| UniPoly::new(p.coeffs().iter().map(G::from_rational).collect());
        MatPoly2::new(l(&self.a), l(&self.b), l(&self.c), self.n)
    }

    /// Parses `[[p11, p12], [p21, p22]]` with entries polynomials in `z`
    /// (`3/2`, `z`, `-2 z^3`, `1 + 1/2*z^2`, ...). The matrix must be
    /// traceless: `p22 = -p11`. The truncation degree is `n`, or the largest
    /// degree present when `n` is `None`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| Error::Parse(format!("expected [[..,..],[..,..]], got {text:?}")))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(Error::Parse("expected two rows".into()));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(Error::Parse("expected two entries per row".into()));
            }
            for cell in cells {
                entries.push(parse_z_poly(cell)?);
            }
        }
        let [a, b, c, d]: [UniPoly<Rational>; 4] = entries.try_into().expect("four entries");
        if !a.add(&d).is_zero() {
            return Err(Error::InvalidInput("matrix must be traceless".into()));
        }
        let deg = [&a, &b, &c].iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        Ok(MatPoly2::new(a, b, c, n.unwrap_or(deg.max(1))))
    }
}

impl FromStr for MatPoly2<Rational> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MatPoly2::parse(s, None)
    }
}

impl<F: Field> fmt::Display for MatPoly2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}],[{}, {}]]", self.a, self.b, self.c, self.a.neg())
    }
}

/// Basis of `sl2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlBasis {
    H,
    E,
    F,
}

impl SlBasis {
    pub const ALL: [SlBasis; 3] = [SlBasis::H, SlBasis::E, SlBasis::F];

    pub fn label(self, j: usize) -> String {
        let base = match self {
            SlBasis::H => "h",
            SlBasis::E => "e",
            SlBasis::F => "f",
        };
        match j {
            0 => base.to_string(),
            1 => format!("{base}*z"),
            _ => format!("{base}*z^{j}"),
        }
    }
}

/// Parses a polynomial in `z` with rational coefficients (no whitespace).
pub fn parse_z_poly(text: &str) -> Result<UniPoly<Rational>> {
    let bad = || Error::Parse(format!("cannot parse polynomial {text:?}"));
    if text.is_empty() {
        return Err(bad());
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let chars: Vec<char> = text.chars().collect();
    for i in 1..chars.len() {
        let prev = chars[i - 1];
        if (chars[i] == '+' || chars[i] == '-') && !matches!(prev, '*' | '/' | '^' | '+' | '-') {
            terms.push(chars[start..i].iter().collect::<String>());
            start = i;
        }
    }
    terms.push(chars[start..].iter().collect());
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let mut body = term.as_str();
        let mut negative = false;
        while let Some(c) = body.chars().next().filter(|c| *c == '+' || *c == '-') {
            negative ^= c == '-';
            body = &body[1..];
        }
        let (coef, power) = match body.find('z') {
            None => (body.parse::<Rational>().map_err(|_| bad())?, 0usize),
            Some(pos) => {
                let head = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                let coef = if head.is_empty() {
                    Rational::one()
                } else {
                    head.parse::<Rational>().map_err(|_| bad())?
                };
                let tail = &body[pos + 1..];
                let power = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|p| p.parse::<usize>().ok())
                        .ok_or_else(bad)?
                };
                (coef, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        let coef = if negative { -coef } else { coef };
        coeffs[power] = &coeffs[power] + &coef;
    }
    Ok(UniPoly::new(coeffs))
}
