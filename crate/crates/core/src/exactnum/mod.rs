//! Exact arithmetic: rationals and elements of cyclotomic fields `Q(zeta_n)`.
//!
//! A [`CyclotomicNumber`] is stored densely in the power basis
//! `1, z, ..., z^(phi(n)-1)` modulo the `n`-th cyclotomic polynomial, so every
//! value has exactly one representation at a given order. Values of different
//! orders are combined in `Q(zeta_lcm)`.

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use poly::cyclotomic_polynomial;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num / den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` as a rational, for any integer exponent.
pub fn pow2(e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("ParseError at {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Element of `Q(zeta_n)` in normal form.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

/// The four field operations, for callers that pick one at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(
    a: &CyclotomicNumber,
    b: &CyclotomicNumber,
    op: ArithOp,
) -> Result<CyclotomicNumber, ExactError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

fn euler_phi(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        Self { order, coeffs: vec![Rational::zero(); euler_phi(order)] }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, Rational::one())
    }

    pub fn from_rational(order: u32, r: Rational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_rational(order, Rational::from_integer(BigInt::from(n)))
    }

    /// `zeta_n^k`, reduced.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Self::from_power_coeffs(order, raw)
    }

    /// Builds `sum_i coeffs[i] * zeta_n^i` for an arbitrary-length coefficient list.
    pub fn from_power_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let phi = cyclotomic_polynomial(order);
        let mut folded = coeffs;
        // z^n = 1 first, so the Phi_n reduction only ever sees degree < n.
        let n = order as usize;
        if folded.len() > n {
            for i in n..folded.len() {
                let c = std::mem::take(&mut folded[i]);
                folded[i % n] += c;
            }
            folded.truncate(n);
        }
        Self { order, coeffs: poly::reduce_mod_monic(folded, &phi) }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coefficients, length `phi(order)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the value in `Q(zeta_m)`; `m` must be a multiple of the order.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.order == 0, "cannot embed order {} into {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::from_power_coeffs(m, raw)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = a.order.lcm(&b.order);
            (a.embed(m), b.embed(m))
        }
    }

    /// Applies the field automorphism `zeta -> zeta^g` (`g` coprime to the order).
    pub fn galois(&self, g: i64) -> Self {
        let n = self.order as i64;
        assert!(g.gcd(&n) == 1, "Galois exponent {g} not coprime to {n}");
        let mut raw = vec![Rational::zero(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * g).rem_euclid(n) as usize;
            raw[e] += c;
        }
        Self::from_power_coeffs(self.order, raw)
    }

    /// Complex conjugation `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    /// The constant coefficient, when every other coefficient vanishes.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Double precision value at `zeta_n = exp(2 pi i / n)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN)
            })
            .sum()
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.order);
        let inv = poly::inverse_mod(&self.coeffs, &phi).ok_or(ExactError::DivisionByZero)?;
        Ok(Self::from_power_coeffs(self.order, inv))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        let (a, b) = Self::common(self, rhs);
        Ok(&a * &b.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Largest absolute numerator or denominator among the coefficients.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .flat_map(|c| [c.numer().abs(), c.denom().clone()])
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        let (mut a, b) = CyclotomicNumber::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        let (mut a, b) = CyclotomicNumber::common(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::common(self, rhs);
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        let mut raw = vec![Rational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        CyclotomicNumber::from_power_coeffs(a.order, raw)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: Self) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{c}*z^{i}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0 @ n={}", self.order)
        } else {
            write!(f, "{} @ n={}", terms.join(" + "), self.order)
        }
    }
}

struct TermParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> TermParser<'a> {
    fn err(&self, message: impl Into<String>) -> ExactError {
        ExactError::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse::<BigInt>().map_err(|_| {
            self.pos = start;
            self.err("expected integer")
        })
    }

    /// One signed term `c*z^k`, `c`, `z^k` or `z`; returns (coefficient, exponent).
    fn term(&mut self, negate: bool) -> Result<(Rational, i64), ExactError> {
        let mut coeff = Rational::one();
        let mut exp = 0i64;
        let mut sign_neg = negate;
        while let Some(c @ (b'-' | b'+')) = self.peek() {
            if c == b'-' {
                sign_neg = !sign_neg;
            }
            self.pos += 1;
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.integer()?
                } else {
                    BigInt::one()
                };
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                coeff = Rational::new(num, den);
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    exp = self.zeta_power()?;
                }
            }
            Some(b'z') => exp = self.zeta_power()?,
            _ => return Err(self.err("expected coefficient or z")),
        }
        if sign_neg {
            coeff = -coeff;
        }
        Ok((coeff, exp))
    }

    fn zeta_power(&mut self) -> Result<i64, ExactError> {
        if self.peek() != Some(b'z') {
            return Err(self.err("expected z"));
        }
        self.pos += 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            e.to_i64().ok_or_else(|| self.err("exponent out of range"))
        } else {
            Ok(1)
        }
    }
}

impl FromStr for CyclotomicNumber {
    type Err = ExactError;

    /// Parses `c*z^k + ... @ n=N`; the `@ n=N` suffix is mandatory.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let at = s.rfind('@').ok_or(ExactError::Parse {
            position: s.len(),
            message: "missing `@ n=<order>` suffix".into(),
        })?;
        let suffix = s[at + 1..].trim();
        let order: u32 = suffix
            .strip_prefix("n=")
            .and_then(|t| t.trim().parse().ok())
            .filter(|n| *n > 0)
            .ok_or(ExactError::Parse { position: at + 1, message: "bad order suffix".into() })?;
        let body = &s[..at];
        let mut parser = TermParser { src: body.as_bytes(), pos: 0 };
        let mut raw = vec![Rational::zero(); order as usize];
        let mut first = true;
        loop {
            let negate = if first {
                false
            } else {
                match parser.peek() {
                    None => break,
                    Some(b'+') => {
                        parser.pos += 1;
                        false
                    }
                    Some(b'-') => {
                        parser.pos += 1;
                        true
                    }
                    Some(_) => return Err(parser.err("expected `+` or `-` between terms")),
                }
            };
            first = false;
            let (c, e) = parser.term(negate)?;
            raw[e.rem_euclid(order as i64) as usize] += c;
            if parser.peek().is_none() {
                break;
            }
        }
        Ok(Self::from_power_coeffs(order, raw))
    }
}
