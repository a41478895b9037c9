//! The additive structure of `ker(Ap)` in `ko_n(BSD_16)`, kept as the literal
//! group-order strings and parsed on demand.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::VerifyError;

/// `(n, one column, two column)` for the dimensions listed individually.
const EXPLICIT: &[(u32, &str, &str)] = &[
    (3, "[4], [8], [8]", "0"),
    (4, "0", "2"),
    (5, "[2]", "0"),
    (6, "0", "0"),
    (7, "[2], [4], [16], [32]", "0"),
    (8, "2", "2"),
    (9, "2, [2]", "0"),
    (10, "0", "2"),
    (11, "[8], [16], [128], [128]", "0"),
    (12, "0", "2^2"),
    (13, "[4]", "0"),
    (14, "0", "2"),
    (15, "[2], [8], [16], [256], [512]", "0"),
];

/// Rows for `n = 8k + r >= 16`, indexed by `r`.
const PERIODIC: [(&str, &str); 8] = [
    ("2^2", "2^k"),
    ("2^2, [2^k]", "0"),
    ("0", "2^k"),
    ("[2^(k-1)], [2*4^k], [4^(k+1)], [8*16^k], [8*16^k]", "0"),
    ("0", "2^(k+1)"),
    ("[2^(k+1)]", "0"),
    ("0", "2^k"),
    ("[2^k], [2*4^k], [4^(k+1)], [16^(k+1)], [2*16^(k+1)]", "0"),
];

/// One summand: `[N]` is cyclic of order `N`, a bare `2^r` is elementary abelian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub text: String,
    pub order: BigUint,
    pub cyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KerApRow {
    pub n: u32,
    /// `"11"` for a listed dimension, `"8k+3"` for a periodic one.
    pub pattern: String,
    pub k: Option<u32>,
    pub one_column: Vec<Summand>,
    /// Rank of the two column as an `F_2` vector space.
    pub two_column_rank: u32,
}

impl KerApRow {
    pub fn one_column_order(&self) -> BigUint {
        self.one_column.iter().fold(BigUint::one(), |acc, s| acc * &s.order)
    }

    pub fn one_column_orders(&self) -> Vec<BigUint> {
        self.one_column.iter().map(|s| s.order.clone()).collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct KerApTable;

impl KerApTable {
    /// The row for dimension `n`, with `k` substituted in periodic rows.
    pub fn lookup(&self, n: u32) -> Result<KerApRow, VerifyError> {
        if n < 3 {
            return Ok(KerApRow { n, pattern: "n<3".into(), k: None, one_column: vec![], two_column_rank: 0 });
        }
        let (pattern, k, one, two) = match EXPLICIT.iter().find(|(m, _, _)| *m == n) {
            Some((_, one, two)) => (n.to_string(), None, *one, *two),
            None => {
                let (one, two) = PERIODIC[(n % 8) as usize];
                (format!("8k+{}", n % 8), Some(n / 8), one, two)
            }
        };
        let kv = k.unwrap_or(0);
        let one_column = parse_summands(one, kv)?;
        let two_order = parse_summands(two, kv)?.iter().fold(BigUint::one(), |acc, s| acc * &s.order);
        let two_column_rank = log2_exact(&two_order)
            .ok_or_else(|| VerifyError::Table(format!("two column {two:?} is not a power of two")))?;
        Ok(KerApRow { n, pattern, k, one_column, two_column_rank })
    }

    /// Rows for every dimension `0..=up_to`.
    pub fn rows(&self, up_to: u32) -> Result<Vec<KerApRow>, VerifyError> {
        (0..=up_to).map(|n| self.lookup(n)).collect()
    }
}

fn log2_exact(v: &BigUint) -> Option<u32> {
    if v.is_zero() || (v & (v - 1u32)) != BigUint::zero() {
        return None;
    }
    Some((v.bits() - 1) as u32)
}

fn parse_summands(text: &str, k: u32) -> Result<Vec<Summand>, VerifyError> {
    if text.trim() == "0" {
        return Ok(vec![]);
    }
    text.split(',')
        .map(|part| {
            let part = part.trim();
            let (inner, cyclic) = match part.strip_prefix('[').and_then(|p| p.strip_suffix(']')) {
                Some(inner) => (inner, true),
                None => (part, false),
            };
            let value = OrderExpr { src: inner.as_bytes(), pos: 0, k: i64::from(k) }.parse()?;
            let order = value
                .to_biguint()
                .filter(|v| !v.is_zero())
                .ok_or_else(|| VerifyError::Table(format!("{part:?} does not evaluate to a group order")))?;
            Ok(Summand { text: part.to_string(), order, cyclic })
        })
        .collect()
}

/// Integer expressions in `k` with `+ - * ^` and parentheses.
struct OrderExpr<'a> {
    src: &'a [u8],
    pos: usize,
    k: i64,
}

impl OrderExpr<'_> {
    fn parse(mut self) -> Result<num_bigint::BigInt, VerifyError> {
        let v = self.sum()?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(v)
    }

    fn err(&self, msg: &str) -> VerifyError {
        VerifyError::Table(format!("{msg} at {} in {:?}", self.pos, String::from_utf8_lossy(self.src)))
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

    fn sum(&mut self) -> Result<num_bigint::BigInt, VerifyError> {
        let mut v = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let r = self.product()?;
            v = if op == b'+' { v + r } else { v - r };
        }
        Ok(v)
    }

    fn product(&mut self) -> Result<num_bigint::BigInt, VerifyError> {
        let mut v = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            v *= self.power()?;
        }
        Ok(v)
    }

    fn power(&mut self) -> Result<num_bigint::BigInt, VerifyError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.atom()?;
        let e = e.to_u32().ok_or_else(|| self.err("exponent must be a small non-negative integer"))?;
        Ok(num_traits::pow(base, e as usize))
    }

    fn atom(&mut self) -> Result<num_bigint::BigInt, VerifyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'k') => {
                self.pos += 1;
                Ok(self.k.into())
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                Ok(s.parse::<num_bigint::BigInt>().expect("digits parse"))
            }
            _ => Err(self.err("expected a number, k or '('")),
        }
    }
}
