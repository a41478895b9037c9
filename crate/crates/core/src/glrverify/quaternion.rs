use std::sync::Arc;

use super::{fmt_order, order_pow2, shown, ClaimResult};
use crate::eta::{eta_order, span_order_lower_bound, EtaError, EtaValue, Manifold, Modulus};
use crate::exactnum::{pow2, rat, Rational};
use crate::grouprep::{builtin_table, quaternion_free_rep_on, CharacterTable, GroupTag, VirtualCharacter};

pub const Q8_M_MAX: u32 = 8;

/// `eta(S^{4k+3}/(k+1)tau)((2 - tau)^p) = (4^p / 4^{k+1} + 6 * 2^p / 2^{k+1}) / 8`,
/// written out separately for each `p` as in the hand computation.
pub fn q8_closed_form(k: i64, p: u32) -> Rational {
    match p {
        1 => pow2(-(2 * k + 3)) + rat(3, 1) * pow2(-(k + 2)),
        2 => rat(2, 1) * pow2(-2 * (k + 1)) + rat(3, 1) * pow2(-(k + 1)),
        3 => rat(2, 1) * pow2(-2 * k) + rat(6, 1) * pow2(-(k + 1)),
        _ => (pow2(2 * i64::from(p)) * pow2(-2 * (k + 1)) + rat(6, 1) * pow2(i64::from(p)) * pow2(-(k + 1))) * rat(1, 8),
    }
}

/// The value of `v` in `R/Z` after dividing by the generator of its range.
pub(crate) fn normalized(v: &EtaValue) -> Rational {
    match v.modulus {
        Modulus::Z => v.value.clone(),
        Modulus::TwoZ => &v.value / rat(2, 1),
    }
}

pub(crate) fn q8_space_form(q8: &Arc<CharacterTable>, k: u32) -> Result<Manifold, EtaError> {
    Ok(Manifold::spherical(quaternion_free_rep_on(Arc::clone(q8), k)?, None))
}

/// Matrix of normalized eta values: one row per character, one column per
/// manifold.
pub(crate) fn eta_matrix(rhos: &[VirtualCharacter], manifolds: &[Manifold]) -> Result<Vec<Vec<Rational>>, EtaError> {
    rhos.iter()
        .map(|r| manifolds.iter().map(|m| Ok(normalized(&m.eta_value(r)?))).collect())
        .collect()
}

/// Space forms spanning the quaternion part in dimension `n = 8m + 3` or
/// `8m + 7`: `S^n/Q_8` and, when `m > 0`, the Bott product with `S^{n-8}/Q_8`.
pub(crate) fn q8_generators(q8: &Arc<CharacterTable>, n: u32) -> Result<Vec<Manifold>, EtaError> {
    let k = (n - 3) / 4;
    let mut out = vec![q8_space_form(q8, k)?];
    if k >= 2 {
        out.push(q8_space_form(q8, k - 2)?.bott());
    }
    Ok(out)
}

/// Characters detecting the quaternion part: `2 - tau` with `(2 - tau)^2` in
/// dimensions `3 mod 8`, `(2 - tau)^3` in dimensions `7 mod 8`.
pub(crate) fn q8_detectors(q8: &Arc<CharacterTable>, n: u32) -> Vec<VirtualCharacter> {
    let base = VirtualCharacter::parse(Arc::clone(q8), "2 - tau").expect("builtin character");
    let second = if n % 8 == 3 { base.pow(2) } else { base.pow(3) };
    vec![base, second]
}

/// Order lower bound of the span of the quaternion space forms in dimension `n`.
pub(crate) fn q8_span_order(q8: &Arc<CharacterTable>, n: u32) -> Result<num_bigint::BigInt, EtaError> {
    let ms = q8_generators(q8, n)?;
    let rhos = q8_detectors(q8, n);
    span_order_lower_bound(&eta_matrix(&rhos[..ms.len()], &ms)?)
}

/// Closed forms and orders of the quaternionic space forms for
/// `k <= 2 m_max + 1`, and the determinant bounds in dimensions `8m+3`,
/// `8m+7` for `m <= m_max`.
pub fn verify_q8_orders(m_max: u32) -> Vec<ClaimResult> {
    if m_max > Q8_M_MAX {
        return vec![ClaimResult::new("q8.bound", "runtime guard on m", format!("m <= {Q8_M_MAX}"), format!("m = {m_max}"))];
    }
    let q8 = match builtin_table(GroupTag::Q8) {
        Ok(t) => t,
        Err(e) => return vec![ClaimResult::new("q8.table", "builtin Q8 character table", "ok", e)],
    };
    let mut out = Vec::new();
    let two_minus_tau = VirtualCharacter::parse(Arc::clone(&q8), "2 - tau").expect("builtin character");
    for k in 0..=2 * m_max + 1 {
        let man = q8_space_form(&q8, k);
        let dim = 4 * k + 3;
        for p in 1..=3u32 {
            let rho = two_minus_tau.pow(p);
            out.push(ClaimResult::new(
                format!("q8.closed-form.k{k}.p{p}"),
                format!("eta of S^{dim}/Q8 against (2-tau)^{p} equals its closed form"),
                q8_closed_form(i64::from(k), p),
                shown(man.as_ref().map_err(Clone::clone).and_then(|m| m.eta(&rho))),
            ));
        }
        let value = man.as_ref().map_err(Clone::clone).and_then(|m| m.eta(&two_minus_tau));
        for (modulus, extra) in [(Modulus::Z, 3u64), (Modulus::TwoZ, 4)] {
            out.push(ClaimResult::new(
                format!("q8.order.k{k}.mod-{modulus}"),
                format!("eta of S^{dim}/Q8 against 2-tau has order 2^(2k+{extra}) in R/{modulus}"),
                order_pow2(2 * u64::from(k) + extra),
                shown(value.as_ref().map(|v| fmt_order(&eta_order(v, modulus)))),
            ));
        }
    }
    for m in 0..=m_max {
        for (r, base) in [(3u32, 3u64), (7, 6)] {
            let n = 8 * m + r;
            out.push(ClaimResult::new(
                format!("q8.span-order.n{n}"),
                format!("determinant of the quaternion eta matrix in dimension 8m+{r} has order 2^(6m+{base})"),
                order_pow2(6 * u64::from(m) + base),
                shown(q8_span_order(&q8, n).map(|o| fmt_order(&o))),
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_agree_with_general_formula() {
        for k in -2..6 {
            for p in 1..=3 {
                let general = (pow2(2 * i64::from(p)) * pow2(-2 * (k + 1))
                    + rat(6, 1) * pow2(i64::from(p)) * pow2(-(k + 1)))
                    * rat(1, 8);
                assert_eq!(q8_closed_form(k, p), general, "k={k} p={p}");
            }
        }
        assert_eq!(q8_closed_form(0, 1), rat(7, 8));
    }

    #[test]
    fn small_bound_passes() {
        let claims = verify_q8_orders(2);
        let bad: Vec<_> = claims.iter().filter(|c| !c.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        let eleven = claims.iter().find(|c| c.id == "q8.span-order.n11").unwrap();
        assert_eq!(eleven.computed, "2^9");
        let seven = claims.iter().find(|c| c.id == "q8.span-order.n7").unwrap();
        assert_eq!(seven.computed, "2^6");
        assert_eq!(verify_q8_orders(9)[0].status, super::super::Status::Fail);
    }
}
