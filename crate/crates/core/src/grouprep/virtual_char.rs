use std::fmt;
use std::sync::Arc;

use super::table::CharacterTable;
use super::GroupError;
use crate::exactnum::CyclotomicNumber;

/// An integer combination of the irreducibles of a character table.
#[derive(Debug, Clone)]
pub struct VirtualCharacter {
    table: Arc<CharacterTable>,
    coeffs: Vec<i64>,
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for VirtualCharacter {}

pub(crate) fn same_table(a: &Arc<CharacterTable>, b: &Arc<CharacterTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl VirtualCharacter {
    pub fn new(table: Arc<CharacterTable>, coeffs: Vec<i64>) -> Result<Self, GroupError> {
        if coeffs.len() != table.len() {
            return Err(GroupError::ShapeMismatch(format!(
                "{} coefficients for {} irreducibles",
                coeffs.len(),
                table.len()
            )));
        }
        Ok(Self { table, coeffs })
    }

    pub fn zero(table: Arc<CharacterTable>) -> Self {
        let n = table.len();
        Self { table, coeffs: vec![0; n] }
    }

    pub fn trivial(table: Arc<CharacterTable>) -> Self {
        Self::irreducible_at(table, 0)
    }

    pub fn irreducible(table: Arc<CharacterTable>, name: &str) -> Result<Self, GroupError> {
        let i = table
            .index_of(name)
            .ok_or_else(|| GroupError::UnknownCharacter(name.to_string()))?;
        Ok(Self::irreducible_at(table, i))
    }

    pub fn irreducible_at(table: Arc<CharacterTable>, i: usize) -> Self {
        let mut v = Self::zero(table);
        v.coeffs[i] = 1;
        v
    }

    /// Re-expresses a class function (class order) in the irreducible basis.
    pub fn from_class_function(
        table: Arc<CharacterTable>,
        values: &[CyclotomicNumber],
    ) -> Result<Self, GroupError> {
        if values.len() != table.group().classes().len() {
            return Err(GroupError::ShapeMismatch(format!(
                "{} values for {} classes",
                values.len(),
                table.group().classes().len()
            )));
        }
        let coeffs = table.decompose(values)?;
        Ok(Self { table, coeffs })
    }

    /// Parses expressions such as `2 - tau`, `(2-tau)^2` or `r0 - k1 + 3*k3`.
    /// Integers stand for multiples of the trivial character.
    pub fn parse(table: Arc<CharacterTable>, text: &str) -> Result<Self, GroupError> {
        let mut p = Parser { table: &table, src: text.as_bytes(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(v)
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, name: &str) -> Option<i64> {
        self.table.index_of(name).map(|i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn value_at_class(&self, class: usize) -> CyclotomicNumber {
        let mut s = CyclotomicNumber::zero(self.table.field_order());
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let v = self.table.value(i, class);
                s = s + v * &CyclotomicNumber::from_integer(v.order(), c);
            }
        }
        s
    }

    pub fn class_values(&self) -> Vec<CyclotomicNumber> {
        (0..self.table.group().classes().len()).map(|c| self.value_at_class(c)).collect()
    }

    /// Value at the identity.
    pub fn virtual_dimension(&self) -> i64 {
        self.coeffs.iter().enumerate().map(|(i, c)| c * self.table.degree(i)).sum()
    }

    fn check_same(&self, other: &Self) -> Result<(), GroupError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(GroupError::ShapeMismatch("characters of different groups".into()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { table: Arc::clone(&self.table), coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { table: Arc::clone(&self.table), coeffs })
    }

    /// Tensor product, computed pointwise on classes and decomposed again.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, GroupError> {
        self.check_same(other)?;
        let a = self.class_values();
        let b = other.class_values();
        let prod: Vec<CyclotomicNumber> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        Self::from_class_function(Arc::clone(&self.table), &prod)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self { table: Arc::clone(&self.table), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::trivial(Arc::clone(&self.table));
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("products of characters stay virtual characters");
        }
        acc
    }

    pub fn conjugate(&self) -> Self {
        let vals: Vec<CyclotomicNumber> = self.class_values().iter().map(|v| v.conjugate()).collect();
        Self::from_class_function(Arc::clone(&self.table), &vals).expect("conjugate of a character")
    }

    /// True when the character lies in the real representation ring:
    /// quaternion-type constituents occur with even multiplicity and complex
    /// constituents pair up with their conjugates.
    pub fn is_real_type(&self) -> bool {
        self.type_check(-1)
    }

    /// True when the character lies in the quaternionic representation ring.
    pub fn is_quaternion_type(&self) -> bool {
        self.type_check(1)
    }

    fn type_check(&self, needs_even: i32) -> bool {
        let conj = self.conjugate();
        if conj.coeffs != self.coeffs {
            return false;
        }
        (0..self.table.len()).all(|i| {
            self.table.indicator(i) != needs_even || self.coeffs[i] % 2 == 0
        })
    }
}

/// Frobenius–Schur indicator of an irreducible character.
pub fn frobenius_schur(chi: &VirtualCharacter) -> Result<i32, GroupError> {
    let nonzero: Vec<(usize, i64)> =
        chi.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
    match nonzero.as_slice() {
        [(i, 1)] => Ok(chi.table.indicator(*i)),
        _ => Err(GroupError::NotIrreducible),
    }
}

impl CharacterTable {
    /// `|G|^-1 sum_g chi_i(g^2)`, computed by summing over classes.
    pub fn indicator(&self, irr: usize) -> i32 {
        let g = self.group();
        let mut s = CyclotomicNumber::zero(self.field_order());
        for (c, class) in g.classes().iter().enumerate() {
            let v = self.value(irr, self.square_class(c));
            s = s + v * &CyclotomicNumber::from_integer(v.order(), class.size() as i64);
        }
        let r = s.as_rational().expect("indicator sum is rational");
        let r = r / crate::exactnum::rat(g.order() as i64, 1);
        assert!(r.is_integer(), "indicator must be an integer");
        i32::try_from(r.to_integer()).expect("indicator in -1..=1")
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = &self.table.names()[i];
            let mag = c.unsigned_abs();
            let body = if mag == 1 { name.clone() } else { format!("{mag}*{name}") };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    table: &'a Arc<CharacterTable>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> GroupError {
        GroupError::ParseExpr { position: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<VirtualCharacter, GroupError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.scaled(-1)
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<VirtualCharacter, GroupError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.checked_mul(&self.power()?)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<VirtualCharacter, GroupError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).ok().filter(|&e| e <= 64).ok_or_else(|| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| GroupError::ParseExpr { position: start, message: "integer overflow".into() })
    }

    fn atom(&mut self) -> Result<VirtualCharacter, GroupError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power()?.scaled(-1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(VirtualCharacter::trivial(Arc::clone(self.table)).scaled(n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                VirtualCharacter::irreducible(Arc::clone(self.table), name).map_err(|_| GroupError::ParseExpr {
                    position: start,
                    message: format!("unknown character {name:?}"),
                })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
