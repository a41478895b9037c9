use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::grouprep::VirtualCharacter;

/// The subgroup an eta value is reduced by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Modulus {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "2Z")]
    TwoZ,
}

impl Modulus {
    /// `2Z` exactly when the manifold dimension and the character type allow
    /// the sharper range: real characters in dimensions `3 mod 8`, quaternionic
    /// ones in dimensions `7 mod 8`. Everything else is read in `R/Z`.
    pub fn select(rho: &VirtualCharacter, dimension: u32) -> Self {
        match dimension % 8 {
            3 if rho.is_real_type() => Modulus::TwoZ,
            7 if rho.is_quaternion_type() => Modulus::TwoZ,
            _ => Modulus::Z,
        }
    }

    fn generator(self) -> BigInt {
        match self {
            Modulus::Z => BigInt::one(),
            Modulus::TwoZ => BigInt::from(2),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Modulus::Z => "Z",
            Modulus::TwoZ => "2Z",
        })
    }
}

/// Least `m >= 1` with `m * v` in the modulus subgroup.
pub fn eta_order(v: &Rational, modulus: Modulus) -> BigInt {
    if v.is_zero() {
        return BigInt::one();
    }
    let num = v.numer().abs();
    let den = v.denom().clone();
    // m p / q in cZ  <=>  c q | m p  <=>  (c q / gcd(p, c q)) | m
    let cq = modulus.generator() * den;
    let g = num.gcd(&cq);
    cq / g
}

/// An exact eta value together with the range it is read in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EtaValue {
    pub value: Rational,
    pub modulus: Modulus,
}

impl EtaValue {
    pub fn new(value: Rational, modulus: Modulus) -> Self {
        Self { value, modulus }
    }

    pub fn order(&self) -> BigInt {
        eta_order(&self.value, self.modulus)
    }

    /// Representative in `[0, 1)` or `[0, 2)`.
    pub fn reduced(&self) -> Rational {
        let c = Rational::from_integer(self.modulus.generator());
        let q = (&self.value / &c).floor();
        &self.value - q * c
    }

    /// Equality in `R / modulus`; values read in different ranges never agree.
    pub fn congruent(&self, other: &EtaValue) -> bool {
        self.modulus == other.modulus && self.reduced() == other.reduced()
    }
}

impl fmt::Display for EtaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {} mod {})", self.value, self.order(), self.modulus)
    }
}
