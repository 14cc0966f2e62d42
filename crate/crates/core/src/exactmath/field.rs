//! Scalar fields used by the generic univariate and matrix-polynomial code:
//! the rationals and real/imaginary quadratic extensions `Q(sqrt d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// Exact field arithmetic. All operations are total except `inv` of zero.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Element `re + im*sqrt(radicand)` of a quadratic extension of the rationals.
///
/// The radicand is carried by every element with a nonzero irrational part;
/// rational elements (`im == 0`) have no radicand and mix freely with any
/// extension. Combining irrational parts over different radicands panics.
#[derive(Clone)]
pub struct QuadraticNumber {
    pub re: Rational,
    pub im: Rational,
    radicand: Option<Rational>,
}

impl QuadraticNumber {
    /// `re + im*sqrt(radicand)`. The radicand must not be a rational square.
    pub fn new(re: Rational, im: Rational, radicand: Rational) -> Self {
        assert!(
            radicand.sqrt_exact().is_none(),
            "radicand {radicand} is a rational square"
        );
        let radicand = if im.is_zero() { None } else { Some(radicand) };
        QuadraticNumber { re, im, radicand }
    }

    pub fn rational(re: Rational) -> Self {
        QuadraticNumber {
            re,
            im: Rational::zero(),
            radicand: None,
        }
    }

    /// The Gaussian rational `re + im*i`.
    pub fn gaussian(re: Rational, im: Rational) -> Self {
        QuadraticNumber::new(re, im, Rational::from(-1))
    }

    pub fn radicand(&self) -> Option<&Rational> {
        self.radicand.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    fn merged(a: &Option<Rational>, b: &Option<Rational>) -> Option<Rational> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixing quadratic extensions");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn normalized(self) -> Self {
        if self.im.is_zero() {
            QuadraticNumber {
                radicand: None,
                ..self
            }
        } else {
            self
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber {
            re: self.re.clone(),
            im: -&self.im,
            radicand: self.radicand.clone(),
        }
    }

    /// Approximate complex value.
    pub fn to_complex(&self) -> num_complex::Complex64 {
        let re = self.re.to_f64();
        match &self.radicand {
            None => num_complex::Complex64::new(re, 0.0),
            Some(d) => {
                let d = d.to_f64();
                let im = self.im.to_f64();
                if d >= 0.0 {
                    num_complex::Complex64::new(re + im * d.sqrt(), 0.0)
                } else {
                    num_complex::Complex64::new(re, im * (-d).sqrt())
                }
            }
        }
    }
}

impl PartialEq for QuadraticNumber {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re
            && self.im == other.im
            && (self.im.is_zero() || self.radicand == other.radicand)
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.radicand {
            None => write!(f, "{}", self.re),
            Some(d) => write!(f, "{}+{}*sqrt({})", self.re, self.im, d),
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for QuadraticNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let radicand = Self::merged(&self.radicand, &rhs.radicand);
        QuadraticNumber {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
            radicand,
        }
        .normalized()
    }
}

impl Sub for QuadraticNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticNumber {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticNumber {
            re: -self.re,
            im: -self.im,
            radicand: self.radicand,
        }
    }
}

impl Mul for QuadraticNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let radicand = Self::merged(&self.radicand, &rhs.radicand);
        let mut re = &self.re * &rhs.re;
        if let Some(d) = &radicand {
            re += &self.im * &rhs.im * d;
        }
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        QuadraticNumber { re, im, radicand }.normalized()
    }
}

impl Field for QuadraticNumber {
    fn zero() -> Self {
        QuadraticNumber::rational(Rational::zero())
    }
    fn one() -> Self {
        QuadraticNumber::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        match &self.radicand {
            None => self.re.recip().map(QuadraticNumber::rational),
            Some(d) => {
                // norm is nonzero because d is not a rational square
                let norm = &self.re * &self.re - &self.im * &self.im * d;
                let inv = norm.recip()?;
                Some(QuadraticNumber {
                    re: &self.re * &inv,
                    im: -(&self.im * &inv),
                    radicand: Some(d.clone()),
                })
            }
        }
    }
    fn from_rational(q: &Rational) -> Self {
        QuadraticNumber::rational(q.clone())
    }
}
