//! Dense univariate polynomials over the integers and the rationals.
//!
//! Only what the cyclotomic field needs: cyclotomic polynomials by recursive
//! division, reduction modulo a monic polynomial, and the extended Euclidean
//! algorithm over `Q[x]`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// The result is cached; `Phi_n` for `n <= 64` has only tiny coefficients but
/// the cache avoids recomputing the divisor chain on every field operation.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let computed = Arc::new(compute_cyclotomic(n));
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(n, Arc::clone(&computed));
    computed
}

fn compute_cyclotomic(n: u32) -> Vec<BigInt> {
    // x^n - 1
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    acc[0] = BigInt::from(-1);
    acc[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            acc = exact_div_monic(&acc, &phi_d);
        }
    }
    acc
}

/// Divides `num` by the monic `den`, panicking if the remainder is non-zero.
fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "non-exact cyclotomic division");
    quot
}

/// Reduces `coeffs` in place modulo the monic integer polynomial `modulus` and
/// truncates to `deg(modulus)` coefficients.
pub fn reduce_mod_monic(mut coeffs: Vec<Rational>, modulus: &[BigInt]) -> Vec<Rational> {
    let phi = modulus.len() - 1;
    if coeffs.len() > phi {
        for top in (phi..coeffs.len()).rev() {
            let c = std::mem::take(&mut coeffs[top]);
            if c.is_zero() {
                continue;
            }
            let base = top - phi;
            for (j, mj) in modulus.iter().enumerate().take(phi) {
                if !mj.is_zero() {
                    coeffs[base + j] -= &c * Rational::from_integer(mj.clone());
                }
            }
        }
    }
    coeffs.resize(phi, Rational::zero());
    coeffs
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dd] / lead;
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
        }
        quot[i] = c;
    }
    rem.truncate(dd);
    trim(&mut rem);
    (quot, rem)
}

fn sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 });
    let mut out = vec![Rational::zero(); len];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the monic `modulus`, or `None` when they share a factor.
pub fn inverse_mod(a: &[Rational], modulus: &[BigInt]) -> Option<Vec<Rational>> {
    let m: Vec<Rational> = modulus.iter().cloned().map(Rational::from_integer).collect();
    let mut r0 = m;
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<Rational> = Vec::new();
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1);
        let s2 = sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is the gcd; it must be a non-zero constant.
    if r0.len() != 1 {
        return None;
    }
    let inv_lead = Rational::one() / &r0[0];
    Some(s0.into_iter().map(|c| c * &inv_lead).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn two_power_cyclotomics_are_binomial() {
        for k in 1..=6u32 {
            let n = 1u32 << k;
            let phi = cyclotomic_polynomial(n);
            let mut expected = vec![BigInt::zero(); n as usize / 2 + 1];
            expected[0] = BigInt::one();
            expected[n as usize / 2] = BigInt::one();
            assert_eq!(*phi, expected, "n = {n}");
        }
    }

    #[test]
    fn degree_is_euler_phi() {
        for n in 1..=64u32 {
            let phi = (1..=n).filter(|k| num_integer::gcd(*k, n) == 1).count();
            assert_eq!(cyclotomic_polynomial(n).len() - 1, phi, "n = {n}");
        }
    }
}
