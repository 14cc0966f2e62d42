//! Multivariate polynomials over the rationals with named variables.
//!
//! Variables are aligned by name, never by position. Every polynomial keeps
//! only the variables it actually uses, sorted by the global [`Symbol`]
//! order, so derived equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::rational::Rational;
use crate::error::Error;

/// Symbols with a fixed position in the global variable order. Anything else
/// sorts after these, alphabetically.
const PRIORITY: [&str; 13] = [
    "u0", "u1", "u2", "eta0", "eta1", "eta2", "r", "s", "t", "z", "x", "w", "y",
];

/// A variable name: ASCII letter followed by letters, digits or `_`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(name: &str) -> Result<Self, Error> {
        let mut chars = name.chars();
        let valid = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if valid {
            Ok(Symbol(name.to_owned()))
        } else {
            Err(Error::UnknownSymbol(name.to_owned()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    fn rank(&self) -> usize {
        PRIORITY
            .iter()
            .position(|p| *p == self.0)
            .unwrap_or(PRIORITY.len())
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand for building symbols from string literals in code.
///
/// Panics on an invalid name; use [`Symbol::new`] for untrusted input.
pub fn sym(name: &str) -> Symbol {
    Symbol::new(name).expect("invalid symbol literal")
}

type Exponents = Vec<u32>;

/// Graded lexicographic comparison of exponent vectors (aligned to the same
/// variable list).
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    vars: Vec<Symbol>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(s: Symbol) -> Self {
        MPoly::monomial(Rational::one(), &[(s, 1)])
    }

    /// `coeff * prod(v^e)`; repeated variables multiply.
    pub fn monomial(coeff: Rational, powers: &[(Symbol, u32)]) -> Self {
        let mut map: BTreeMap<Symbol, u32> = BTreeMap::new();
        for (s, e) in powers {
            *map.entry(s.clone()).or_default() += e;
        }
        let vars: Vec<Symbol> = map.keys().cloned().collect();
        let exps: Vec<u32> = map.values().copied().collect();
        MPoly::from_terms(vars, [(exps, coeff)])
    }

    /// Builds a polynomial from raw terms over `vars` (any order, duplicates
    /// not allowed). Like terms are combined and the result normalized.
    pub fn from_terms(
        vars: Vec<Symbol>,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
        let sorted_vars: Vec<Symbol> = order.iter().map(|&i| vars[i].clone()).collect();
        assert!(
            sorted_vars.windows(2).all(|w| w[0] != w[1]),
            "duplicate variables"
        );
        let mut out: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length mismatch");
            let e: Exponents = order.iter().map(|&i| e[i]).collect();
            *out.entry(e).or_default() += c;
        }
        MPoly {
            vars: sorted_vars,
            terms: out,
        }
        .normalized()
    }

    /// Drops zero coefficients and unused variables.
    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len())
            .map(|i| self.terms.keys().any(|e| e[i] != 0))
            .collect();
        if used.iter().all(|u| *u) {
            return self;
        }
        let vars = self
            .vars
            .iter()
            .zip(&used)
            .filter(|(_, u)| **u)
            .map(|(v, _)| v.clone())
            .collect();
        let terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(e, c)| {
                let e = e
                    .into_iter()
                    .zip(&used)
                    .filter(|(_, u)| **u)
                    .map(|(x, _)| x)
                    .collect();
                (e, c)
            })
            .collect();
        MPoly { vars, terms }
    }

    pub fn vars(&self) -> &[Symbol] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as (exponents aligned with [`MPoly::vars`], coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Terms sorted in descending graded-lexicographic order.
    pub fn terms_grlex(&self) -> Vec<(&[u32], &Rational)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, s: &Symbol) -> u32 {
        match self.vars.iter().position(|v| v == s) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.vars.is_empty() => self.terms.values().next().cloned(),
            _ => None,
        }
    }

    /// Coefficient of `s^k`, as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, s: &Symbol, k: u32) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == s) else {
            return if k == 0 { self.clone() } else { MPoly::zero() };
        };
        let terms = self.terms.iter().filter(|(e, _)| e[i] == k).map(|(e, c)| {
            let mut e = e.clone();
            e[i] = 0;
            (e, c.clone())
        });
        MPoly::from_terms(self.vars.clone(), terms)
    }

    /// Coefficients `[c0, c1, ..., cd]` of `self` viewed as a polynomial in `s`.
    pub fn coefficients_in(&self, s: &Symbol) -> Vec<MPoly> {
        (0..=self.degree_in(s))
            .map(|k| self.coefficient_of(s, k))
            .collect()
    }

    /// Coefficient of a monomial given by `(symbol, exponent)` pairs; symbols
    /// not listed must have exponent zero.
    pub fn coeff(&self, powers: &[(Symbol, u32)]) -> Rational {
        let probe = MPoly::monomial(Rational::one(), powers);
        let (pe, _) = probe.terms.iter().next().expect("monomial is nonzero");
        if !probe.vars.iter().all(|v| self.vars.contains(v)) {
            return Rational::zero();
        }
        let mut e = vec![0u32; self.vars.len()];
        for (v, x) in probe.vars.iter().zip(pe) {
            let i = self.vars.iter().position(|w| w == v).unwrap();
            e[i] = *x;
        }
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    fn aligned(&self, vars: &[Symbol]) -> BTreeMap<Exponents, Rational> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("var in union"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0u32; vars.len()];
                for (k, &i) in idx.iter().enumerate() {
                    out[i] = e[k];
                }
                (out, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &MPoly) -> Vec<Symbol> {
        let set: BTreeSet<Symbol> = self.vars.iter().chain(&other.vars).cloned().collect();
        set.into_iter().collect()
    }

    fn add_scaled(&self, other: &MPoly, sign: &Rational) -> MPoly {
        let vars = self.union_vars(other);
        let mut terms = self.aligned(&vars);
        for (e, c) in other.aligned(&vars) {
            *terms.entry(e).or_default() += c * sign;
        }
        MPoly { vars, terms }.normalized()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative. Differentiating by a variable that does not
    /// occur gives zero.
    pub fn partial_derivative(&self, s: &Symbol) -> MPoly {
        let Some(i) = self.vars.iter().position(|v| v == s) else {
            return MPoly::zero();
        };
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e = e.clone();
            let k = e[i];
            e[i] -= 1;
            (e, c * Rational::from(k))
        });
        MPoly::from_terms(self.vars.clone(), terms)
    }

    /// [`MPoly::partial_derivative`] by name; rejects malformed names.
    pub fn derivative_by_name(&self, name: &str) -> Result<MPoly, Error> {
        Ok(self.partial_derivative(&Symbol::new(name)?))
    }

    /// Substitutes rational values for some variables.
    pub fn specialize(&self, values: &HashMap<Symbol, Rational>) -> MPoly {
        let pows: Vec<Option<&Rational>> = self.vars.iter().map(|v| values.get(v)).collect();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut c = c.clone();
            let mut e = e.clone();
            for (k, p) in pows.iter().enumerate() {
                if let Some(v) = p {
                    c *= v.pow(e[k]);
                    e[k] = 0;
                }
            }
            (e, c)
        });
        MPoly::from_terms(self.vars.clone(), terms)
    }

    /// Full evaluation. Errors if a variable has no value.
    pub fn eval(&self, values: &HashMap<Symbol, Rational>) -> Result<Rational, Error> {
        if let Some(v) = self.vars.iter().find(|v| !values.contains_key(*v)) {
            return Err(Error::InvalidInput(format!("no value for variable {v}")));
        }
        Ok(self
            .specialize(values)
            .as_constant()
            .expect("fully specialized"))
    }

    /// Replaces each listed variable by a polynomial.
    pub fn substitute(&self, subs: &HashMap<Symbol, MPoly>) -> MPoly {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (v, &k) in self.vars.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                let factor = match subs.get(v) {
                    Some(p) => p.pow(k),
                    None => MPoly::monomial(Rational::one(), &[(v.clone(), k)]),
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    /// Leading term in grlex order: (exponents, coefficient).
    fn leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder. A single divisor is always a Groebner basis of its ideal,
    /// so the grlex division algorithm decides divisibility.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let vars = self.union_vars(divisor);
        let d = MPoly {
            vars: vars.clone(),
            terms: divisor.aligned(&vars),
        };
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = MPoly {
            vars: vars.clone(),
            terms: self.aligned(&vars),
        };
        let mut quot: BTreeMap<Exponents, Rational> = BTreeMap::new();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponents = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = &rc / &dc;
            for (e, c) in &d.terms {
                let ee: Exponents = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let slot = rem.terms.entry(ee.clone()).or_default();
                *slot -= c * &qc;
                if slot.is_zero() {
                    rem.terms.remove(&ee);
                }
            }
            quot.insert(qe, qc);
        }
        Some(MPoly { vars, terms: quot }.normalized())
    }

    /// Lowest-degree terms first, at most `n` of them; used in diagnostics.
    pub fn smallest_terms(&self, n: usize) -> Vec<String> {
        let mut v = self.terms_grlex();
        v.reverse();
        v.into_iter()
            .take(n)
            .map(|(e, c)| format_term(&self.vars, e, c))
            .collect()
    }
}

fn format_term(vars: &[Symbol], e: &[u32], c: &Rational) -> String {
    let mut s = c.to_string();
    for (v, &k) in vars.iter().zip(e) {
        match k {
            0 => {}
            1 => {
                s.push('*');
                s.push_str(v.name());
            }
            _ => s.push_str(&format!("*{}^{}", v.name(), k)),
        }
    }
    s
}

/// Canonical text form: terms in descending grlex order joined by ` + `,
/// each `num/den` followed by `*var^exp` factors. Zero prints as `0/1`.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0/1");
        }
        let parts: Vec<String> = self
            .terms_grlex()
            .into_iter()
            .map(|(e, c)| format_term(&self.vars, e, c))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MPoly {
    type Err = Error;

    /// Parses the canonical form. The leading coefficient of a term may be
    /// omitted (`u0^2*r` means `1/1*u0^2*r`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut out = MPoly::zero();
        for term in s.split(" + ") {
            let mut coeff = Rational::one();
            let mut powers = Vec::new();
            for (k, factor) in term.trim().split('*').enumerate() {
                let factor = factor.trim();
                if k == 0 {
                    if let Ok(c) = factor.parse::<Rational>() {
                        coeff = c;
                        continue;
                    }
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                    ),
                    None => (factor, 1),
                };
                powers.push((Symbol::new(name)?, exp));
            }
            out = &out + &MPoly::monomial(coeff, &powers);
        }
        Ok(out)
    }
}

impl<'b> Add<&'b MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'b MPoly) -> MPoly {
        self.add_scaled(rhs, &Rational::one())
    }
}

impl<'b> Sub<&'b MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'b MPoly) -> MPoly {
        self.add_scaled(rhs, &Rational::from(-1))
    }
}

impl<'b> Mul<&'b MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'b MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let vars = self.union_vars(rhs);
        let a = self.aligned(&vars);
        let b = rhs.aligned(&vars);
        let mut terms: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_default() += ca * cb;
            }
        }
        MPoly { vars, terms }.normalized()
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&Rational::from(-1))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'a MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                self.$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(Rational::from(c))
    }
}

/// Shorthand: the polynomial consisting of a single variable.
pub fn pvar(name: &str) -> MPoly {
    MPoly::var(sym(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> MPoly {
        MPoly::from(n)
    }

    #[test]
    fn difference_of_squares() {
        let z = pvar("z");
        let p = (&z + &c(1)) * (&z - &c(1));
        assert_eq!(p, &z.pow(2) - &c(1));
        assert_eq!(p.to_string(), "1/1*z^2 + -1/1");
    }

    #[test]
    fn additive_identity_and_binomial() {
        let p = pvar("u0") * pvar("eta1") + c(3);
        assert_eq!(&p + &MPoly::zero(), p);
        let b = (pvar("u0") + pvar("eta0")).pow(2);
        let expect = pvar("u0").pow(2) + c(2) * pvar("u0") * pvar("eta0") + pvar("eta0").pow(2);
        assert_eq!(b, expect);
    }

    #[test]
    fn derivatives() {
        let p = pvar("u0").pow(2) * pvar("eta1");
        assert_eq!(p.partial_derivative(&sym("u0")), c(2) * pvar("u0") * pvar("eta1"));
        assert!(c(7).partial_derivative(&sym("u0")).is_zero());
        assert!(matches!(
            p.derivative_by_name("2bad"),
            Err(Error::UnknownSymbol(_))
        ));
        assert!(p.derivative_by_name("").is_err());
    }

    #[test]
    fn variables_align_by_name() {
        let a = MPoly::from_terms(vec![sym("t"), sym("u0")], [(vec![1, 2], Rational::one())]);
        let b = MPoly::from_terms(vec![sym("u0"), sym("t")], [(vec![2, 1], Rational::one())]);
        assert_eq!(a, b);
        assert_eq!(a.vars(), &[sym("u0"), sym("t")]);
        // cancellation removes the variable entirely
        let d = &a - &b;
        assert!(d.is_zero());
        assert!(d.vars().is_empty());
    }

    #[test]
    fn grlex_display_and_parse() {
        let p = pvar("r") * pvar("s") - pvar("u0").pow(3) + MPoly::constant(Rational::new(1, 2));
        let text = p.to_string();
        assert_eq!(text, "-1/1*u0^3 + 1/1*r*s + 1/2");
        assert_eq!(text.parse::<MPoly>().unwrap(), p);
        assert_eq!("0/1".parse::<MPoly>().unwrap(), MPoly::zero());
        assert_eq!("u0^2*r".parse::<MPoly>().unwrap(), pvar("u0").pow(2) * pvar("r"));
    }

    #[test]
    fn exact_division() {
        let x = pvar("x");
        let y = pvar("y");
        let f = (&x + &y) * (&x - c(2) * &y + c(3));
        assert_eq!(f.div_exact(&(&x + &y)).unwrap(), &x - c(2) * &y + c(3));
        assert!(f.div_exact(&(&x + c(5))).is_none());
        assert_eq!(MPoly::zero().div_exact(&x).unwrap(), MPoly::zero());
    }

    #[test]
    fn coefficients_and_degree() {
        let p = pvar("r") * pvar("s") + pvar("s").pow(2) - c(4);
        assert_eq!(p.degree_in(&sym("r")), 1);
        assert_eq!(p.coefficient_of(&sym("r"), 1), pvar("s"));
        assert_eq!(p.coefficient_of(&sym("r"), 0), pvar("s").pow(2) - c(4));
        assert_eq!(p.coeff(&[(sym("s"), 2)]), Rational::one());
        assert_eq!(p.coeff(&[]), Rational::from(-4));
        assert_eq!(p.coeff(&[(sym("u0"), 1)]), Rational::zero());
    }

    #[test]
    fn substitution_and_eval() {
        let p = pvar("x").pow(2) + pvar("y");
        let mut subs = HashMap::new();
        subs.insert(sym("x"), pvar("y") + c(1));
        assert_eq!(p.substitute(&subs), pvar("y").pow(2) + c(3) * pvar("y") + c(1));
        let mut vals = HashMap::new();
        vals.insert(sym("x"), Rational::from(3));
        assert!(p.eval(&vals).is_err());
        vals.insert(sym("y"), Rational::new(1, 2));
        assert_eq!(p.eval(&vals).unwrap(), Rational::new(19, 2));
    }
}
