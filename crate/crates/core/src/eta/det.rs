use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::EtaError;
use crate::exactnum::Rational;

/// Determinant of a square rational matrix: clear denominators row by row,
/// then run Bareiss fraction-free elimination over the integers.
pub fn determinant(rows: &[Vec<Rational>]) -> Result<Rational, EtaError> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(EtaError::NotSquare);
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            r.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    Ok(Rational::new(sign * &m[n - 1][n - 1], scale))
}

/// Order in `R/Z` of the determinant: a lower bound for the order of the
/// subgroup spanned by the rows. An integral determinant gives the trivial
/// bound 1.
pub fn span_order_lower_bound(rows: &[Vec<Rational>]) -> Result<BigInt, EtaError> {
    Ok(determinant(rows)?.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        if m.len() == 1 {
            return m[0][0].clone();
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<Rational>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
                let s = if j % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                s * &m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        let id = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        assert_eq!(span_order_lower_bound(&id).unwrap(), BigInt::from(1));
        let m = vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]];
        assert_eq!(determinant(&m).unwrap(), rat(1, 10) - rat(1, 12));
        let swap = vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]];
        assert_eq!(determinant(&swap).unwrap(), rat(-1, 1));
        assert!(matches!(determinant(&[vec![rat(1, 1)], vec![]]), Err(EtaError::NotSquare)));
    }

    #[test]
    fn matches_cofactor_expansion() {
        let m: Vec<Vec<Rational>> = (0..5)
            .map(|i| (0..5).map(|j| rat(((i * 7 + j * 3) % 11) as i64 - 5, 1 + ((i + 2 * j) % 4) as i64)).collect())
            .collect();
        assert_eq!(determinant(&m).unwrap(), cofactor_det(&m));
        let mut sing = m.clone();
        sing[3] = sing[1].clone();
        assert_eq!(determinant(&sing).unwrap(), rat(0, 1));
    }
}
