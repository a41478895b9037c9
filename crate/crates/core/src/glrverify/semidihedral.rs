use std::sync::Arc;

use num_bigint::BigInt;

use super::quaternion::{eta_matrix, normalized, q8_closed_form, q8_span_order};
use super::{fmt_order, order_pow2, shown, ClaimResult, KerApTable};
use crate::eta::{eta_order, span_order_lower_bound, EtaError, LensSpec, Manifold, Modulus};
use crate::exactnum::{pow2, rat, Rational};
use crate::grouprep::{
    builtin_table, quaternion_free_rep_on, restrict_virtual, CharacterTable, GroupError, GroupTag, Inclusion,
    VirtualCharacter,
};

pub const SD16_M_MAX: u32 = 4;

/// Candidate images of the quaternion generators `i, j` in `SD_16`; both
/// generate `<s^2, ts>`.
pub const Q8_LABELINGS: [[&str; 2]; 2] = [["s^2", "t*s"], ["t*s", "s^2"]];

/// Characters of `SD_16` used as eta-vector coordinates: the three
/// non-trivial linear characters (named by their kernels), `2 - rho^2`,
/// `2 - rho`, and the real character restricting to `(2 - tau)^2`.
pub const SD16_COLUMNS: [&str; 6] = ["r0 - d8", "r0 - c8", "r0 - q8", "2 - rho2", "2 - rho", "4 + rho*rho5 - 2*(rho + rho5)"];

struct Groups {
    sd: Arc<CharacterTable>,
    q8: Arc<CharacterTable>,
    c8: Arc<CharacterTable>,
    c4: Arc<CharacterTable>,
    s_in: Inclusion,
    t_in: Inclusion,
    q_in: Inclusion,
    cols: Vec<VirtualCharacter>,
}

impl Groups {
    fn new(labeling: [&str; 2]) -> Result<Self, GroupError> {
        let sd = builtin_table(GroupTag::SD16)?;
        let q8 = builtin_table(GroupTag::Q8)?;
        let c8 = builtin_table(GroupTag::Cyclic(8))?;
        let c4 = builtin_table(GroupTag::Cyclic(4))?;
        let c2 = builtin_table(GroupTag::Cyclic(2))?;
        let s_in = Inclusion::new(Arc::clone(&c8), Arc::clone(&sd), &["s"])?;
        let t_in = Inclusion::new(Arc::clone(&c2), Arc::clone(&sd), &["t"])?;
        let q_in = Inclusion::new(Arc::clone(&q8), Arc::clone(&sd), &labeling)?;
        let cols = SD16_COLUMNS
            .iter()
            .map(|e| VirtualCharacter::parse(Arc::clone(&sd), e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { sd, q8, c8, c4, s_in, t_in, q_in, cols })
    }

    fn sd_char(&self, e: &str) -> VirtualCharacter {
        VirtualCharacter::parse(Arc::clone(&self.sd), e).expect("builtin character")
    }

    /// `L^n(8; (1,1) or (1,1,1,1), then m copies of (1,1,5,5))` on `<s>`.
    fn lens_weights(n: u32) -> Vec<i64> {
        let mut a: Vec<i64> = if n % 8 == 3 { vec![1, 1] } else { vec![1, 1, 1, 1] };
        for _ in 0..n / 8 {
            a.extend([1, 1, 5, 5]);
        }
        a
    }

    fn lens(&self, n: u32) -> Manifold {
        Manifold::lens(LensSpec::sphere(8, Self::lens_weights(n)), Some(self.s_in.clone()))
    }

    fn projective(&self, n: u32) -> Manifold {
        Manifold::lens(LensSpec::sphere(2, vec![1; (n as usize + 1) / 2]), Some(self.t_in.clone()))
    }

    fn quaternion(&self, k: u32, into_sd: bool) -> Result<Manifold, EtaError> {
        let rep = quaternion_free_rep_on(Arc::clone(&self.q8), k)?;
        Ok(Manifold::spherical(rep, into_sd.then(|| self.q_in.clone())))
    }

    /// `S^n/<i> - S^n/<j>` for the cyclic subgroups of order 4 of `Q_8`,
    /// each with the restricted quaternionic action.
    fn cyclic_difference(&self, n: u32, into_sd: bool) -> Result<Manifold, EtaError> {
        let rep = quaternion_free_rep_on(Arc::clone(&self.q8), (n - 3) / 4)?;
        let part = |g: &str| -> Result<Manifold, EtaError> {
            let iota = Inclusion::new(Arc::clone(&self.c4), Arc::clone(&self.q8), &[g])?;
            let push = if into_sd { iota.then(&self.q_in)? } else { iota.clone() };
            Ok(Manifold::spherical(rep.restrict(&iota)?, Some(push)))
        };
        Ok(Manifold::difference(part("i")?, part("j")?))
    }

    /// Normalized entry in `R/Z`.
    fn entry(&self, m: &Manifold, col: usize) -> Result<Rational, EtaError> {
        Ok(normalized(&m.eta_value(&self.cols[col])?))
    }

    fn entry_order(&self, m: &Manifold, col: usize) -> Result<BigInt, EtaError> {
        Ok(eta_order(&self.entry(m, col)?, Modulus::Z))
    }

    /// Column 1 + column 3 - column 2: the combination that vanishes on
    /// everything induced from `Q_8`.
    fn cancellation(&self, m: &Manifold) -> Result<Rational, EtaError> {
        Ok(self.entry(m, 0)? + self.entry(m, 2)? - self.entry(m, 1)?)
    }
}

fn labeling_name(l: [&str; 2]) -> String {
    format!("i->{}, j->{}", l[0], l[1])
}

/// Eta-vector entries, determinant bounds and order accounting in
/// dimensions `8m+3` and `8m+7`, `m <= m_max`. The quaternion subgroup
/// labeling is searched: the first labeling under which every claim holds is
/// used and returned.
pub fn verify_sd16_odd(m_max: u32) -> (Vec<ClaimResult>, String) {
    if m_max > SD16_M_MAX {
        let c = ClaimResult::new("sd16-odd.bound", "runtime guard on m", format!("m <= {SD16_M_MAX}"), format!("m = {m_max}"));
        return (vec![c], "none".into());
    }
    let mut first = None;
    for labeling in Q8_LABELINGS {
        let claims = odd_claims(labeling, m_max);
        if claims.iter().all(ClaimResult::passed) {
            return (claims, labeling_name(labeling));
        }
        first.get_or_insert((claims, format!("{} (no admissible labeling)", labeling_name(labeling))));
    }
    first.expect("at least one labeling")
}

fn odd_claims(labeling: [&str; 2], m_max: u32) -> Vec<ClaimResult> {
    let g = match Groups::new(labeling) {
        Ok(g) => g,
        Err(e) => return vec![ClaimResult::new("sd16-odd.setup", "subgroup inclusions into SD16", "ok", e)],
    };
    let mut out = restriction_claims(&g, labeling);
    for m in 0..=m_max {
        out.extend(claims_8m3(&g, m));
        out.extend(claims_8m7(&g, m));
    }
    out
}

fn restriction_claims(g: &Groups, labeling: [&str; 2]) -> Vec<ClaimResult> {
    let lab = labeling_name(labeling);
    let restrict = |e: &str, iota: &Inclusion| shown(restrict_virtual(&g.sd_char(e), iota));
    let q8_char = |e: &str| VirtualCharacter::parse(Arc::clone(&g.q8), e).expect("builtin character");
    vec![
        ClaimResult::new(
            "sd16-odd.restrict.rho2-to-q8",
            format!("chi_rho2 restricts to k1 + k3 on the quaternion subgroup ({lab})"),
            "k1 + k3",
            restrict("rho2", &g.q_in),
        ),
        ClaimResult::new(
            "sd16-odd.restrict.rho-to-q8",
            "chi_rho restricts to tau on the quaternion subgroup",
            "tau",
            restrict("rho", &g.q_in),
        ),
        ClaimResult::new(
            "sd16-odd.restrict.rho5-to-q8",
            "chi_rho5 restricts to tau on the quaternion subgroup",
            "tau",
            restrict("rho5", &g.q_in),
        ),
        ClaimResult::new(
            "sd16-odd.restrict.c8-d8-agree-on-q8",
            "the characters with kernels C8 and D8 restrict to the same character of Q8",
            restrict("c8", &g.q_in),
            restrict("d8", &g.q_in),
        ),
        ClaimResult::new(
            "sd16-odd.restrict.q8-trivial-on-q8",
            "the character with kernel Q8 restricts trivially to Q8",
            "r0",
            restrict("q8", &g.q_in),
        ),
        ClaimResult::new(
            "sd16-odd.restrict.q8-on-t",
            "the character with kernel Q8 is non-trivial on <t>",
            "r1",
            restrict("q8", &g.t_in),
        ),
        ClaimResult::new(
            "sd16-odd.restrict.square-column",
            "4 + rho*rho5 - 2(rho + rho5) restricts to (2 - tau)^2",
            q8_char("2 - tau").pow(2),
            restrict(SD16_COLUMNS[5], &g.q_in),
        ),
        ClaimResult::new(
            "sd16-odd.square-column-real",
            "4 + rho*rho5 - 2(rho + rho5) is of real type",
            true,
            g.cols[5].is_real_type(),
        ),
    ]
}

fn order_claim(id: String, anchor: String, expected_exp: u64, computed: Result<BigInt, EtaError>) -> ClaimResult {
    ClaimResult::new(id, anchor, order_pow2(expected_exp), shown(computed.map(|o| fmt_order(&o))))
}

fn claims_8m3(g: &Groups, m: u32) -> Vec<ClaimResult> {
    let n = 8 * m + 3;
    let mu = u64::from(m);
    let p = |s: &str| format!("sd16-odd.n{n}.{s}");
    let mut out = Vec::new();

    let lens = g.lens(n);
    for col in [0usize, 2] {
        out.push(order_claim(
            p(&format!("lens.col{}", col + 1)),
            format!("lens space on <s>: coordinate {} has order 2^(m+1)", col + 1),
            mu + 1,
            g.entry_order(&lens, col),
        ));
    }
    out.push(ClaimResult::new(
        p("lens.col2"),
        "lens space on <s>: the character with kernel C8 gives zero",
        0,
        shown(g.entry(&lens, 1)),
    ));

    let rp = g.projective(n);
    for (col, e) in [(0usize, None), (1, Some(3u64)), (2, Some(3)), (3, Some(3)), (4, Some(2))] {
        let expected = e.map_or(0, |e| 4 * mu + e);
        out.push(order_claim(
            p(&format!("projective.col{}", col + 1)),
            format!("real projective space on <t>: coordinate {} has order 2^{}", col + 1, e.map_or("0".into(), |e| format!("(4m+{e})"))),
            expected,
            g.entry_order(&rp, col),
        ));
    }

    let diff = g.cyclic_difference(n, true);
    let diff_local = g.cyclic_difference(n, false);
    out.extend(cyclic_difference_claims(g, n, &diff, &diff_local));
    if let Ok(d) = &diff {
        for col in [2usize, 4, 5] {
            out.push(ClaimResult::new(
                p(&format!("cyclic-difference.col{}", col + 1)),
                format!("difference of cyclic quaternion quotients: coordinate {} vanishes", col + 1),
                0,
                shown(g.entry(d, col)),
            ));
        }
        out.push(ClaimResult::new(
            p("cyclic-difference.col4"),
            "difference of cyclic quaternion quotients: coordinate 4 is 2^(-2m-2) after halving",
            pow2(-(2 * i64::from(m) + 2)),
            shown(g.entry(d, 3)),
        ));
    }

    let k = i64::from(2 * m);
    let mq = g.quaternion(2 * m, true);
    let mut quaternion_rows = vec![("space-form", mq.clone(), k)];
    if m >= 1 {
        quaternion_rows.push(("bott-product", g.quaternion(2 * m - 2, true).map(Manifold::bott), k - 2));
    }
    for (name, man, kk) in &quaternion_rows {
        let man = man.as_ref().map_err(Clone::clone);
        out.push(ClaimResult::new(
            p(&format!("{name}.col5")),
            "quaternion space form: coordinate 5 equals 1/2^(2k+3) + 3/2^(k+2)",
            q8_closed_form(*kk, 1),
            shown(man.clone().and_then(|mm| g.entry(mm, 4))),
        ));
        out.push(ClaimResult::new(
            p(&format!("{name}.col6")),
            "quaternion space form: coordinate 6 equals half of the (2-tau)^2 closed form",
            q8_closed_form(*kk, 2) * rat(1, 2),
            shown(man.clone().and_then(|mm| g.entry(mm, 5))),
        ));
        out.push(ClaimResult::new(
            p(&format!("{name}.col3")),
            "quaternion space form: the character with kernel Q8 gives zero",
            0,
            shown(man.and_then(|mm| g.entry(mm, 2))),
        ));
    }

    let mut rows: Vec<(&str, Result<Manifold, EtaError>)> =
        vec![("projective", Ok(rp.clone())), ("cyclic-difference", diff.clone())];
    rows.extend(quaternion_rows.iter().map(|(nm, mm, _)| (*nm, mm.clone())));
    out.push(order_claim(
        p("lens.cancellation"),
        "lens space: coordinates 1 + 3 - 2 have order 2^m".into(),
        mu,
        g.cancellation(&lens).map(|v| eta_order(&v, Modulus::Z)),
    ));
    for (name, man) in &rows {
        out.push(ClaimResult::new(
            p(&format!("{name}.cancellation")),
            "coordinates 1 + 3 - 2 vanish in R/Z away from the lens space",
            "1",
            shown(man.as_ref().map_err(Clone::clone).and_then(|mm| g.cancellation(mm)).map(|v| fmt_order(&eta_order(&v, Modulus::Z)))),
        ));
    }

    let quaternion_mans: Result<Vec<Manifold>, EtaError> = quaternion_rows.iter().map(|(_, mm, _)| mm.clone()).collect();
    let det = quaternion_mans.and_then(|ms| {
        let cols = [g.cols[4].clone(), g.cols[5].clone()];
        span_order_lower_bound(&eta_matrix(&cols[..ms.len()], &ms)?)
    });
    out.push(order_claim(p("quaternion.span-order"), "coordinates 5, 6 on the quaternion space forms span order 8^(2m+1)".into(), 6 * mu + 3, det.clone()));

    let kappa = diff.as_ref().map_err(Clone::clone).and_then(|d| Ok(d.eta_value(&g.cols[3])?.order()));
    let rp_order = g.entry_order(&rp, 2);
    let cyclic = g.cancellation(&lens).map(|v| eta_order(&v, Modulus::Z));
    let before: Result<BigInt, EtaError> = (|| Ok(kappa.clone()? * det.clone()? * rp_order.clone()?))();
    out.push(order_claim(
        p("accounting.induced"),
        "2^(2m+2) * 8^(2m+1) * 2^(4m+3) = 2^(8+12m) from Q8 and <t>".into(),
        8 + 12 * mu,
        before.clone(),
    ));
    out.push(total_claim(n, p("accounting.total"), before.and_then(|b| Ok(b * cyclic?))));
    out
}

fn cyclic_difference_claims(
    g: &Groups,
    n: u32,
    diff: &Result<Manifold, EtaError>,
    diff_local: &Result<Manifold, EtaError>,
) -> Vec<ClaimResult> {
    let m = i64::from(n / 8);
    let p = |s: &str| format!("sd16-odd.n{n}.{s}");
    let (value, exp) = if n % 8 == 3 { (pow2(-2 * m - 1), 2 * m + 2) } else { (pow2(-2 * m - 2), 2 * m + 2) };
    let modulus = if n % 8 == 3 { "R/2Z" } else { "R/Z" };
    let mut out = Vec::new();
    let q8_vector = ["r0 - k1", "r0 - k3", "2 - tau", "(2 - tau)^2"];
    let expected_vector: Vec<Rational> = vec![value.clone(), rat(0, 1), rat(0, 1), rat(0, 1)];
    let computed = diff_local.as_ref().map_err(Clone::clone).and_then(|d| {
        q8_vector
            .iter()
            .map(|e| d.eta(&VirtualCharacter::parse(Arc::clone(&g.q8), e)?))
            .collect::<Result<Vec<_>, _>>()
    });
    out.push(ClaimResult::new(
        p("cyclic-difference.q8-vector"),
        "eta vector (r0-k1, r0-k3, 2-tau, (2-tau)^2) of the cyclic quaternion difference",
        fmt_list(&expected_vector),
        shown(computed.map(|v| fmt_list(&v))),
    ));
    let on_sd = diff.as_ref().map_err(Clone::clone).and_then(|d| d.eta_value(&g.cols[3]));
    out.push(ClaimResult::new(
        p("cyclic-difference.rho2"),
        format!("eta against 2 - chi_rho2 is 2^({}) in {modulus}", if n % 8 == 3 { "-2m-1" } else { "-2m-2" }),
        format!("{value} in {modulus}"),
        shown(on_sd.clone().map(|v| format!("{} in R/{}", v.value, v.modulus))),
    ));
    out.push(order_claim(
        p("cyclic-difference.rho2-order"),
        format!("eta against 2 - chi_rho2 has order 2^(2m+2) in {modulus}"),
        exp as u64,
        on_sd.map(|v| v.order()),
    ));
    out
}

fn fmt_list(v: &[Rational]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn total_claim(n: u32, id: String, computed: Result<BigInt, EtaError>) -> ClaimResult {
    let expected = KerApTable
        .lookup(n)
        .map(|row| fmt_order(&row.one_column_order().into()))
        .unwrap_or_else(|e| format!("error: {e}"));
    ClaimResult::new(
        id,
        format!("spanned order equals the one-column order of ker(Ap) in dimension {n}"),
        expected,
        shown(computed.map(|o| fmt_order(&o))),
    )
}

fn claims_8m7(g: &Groups, m: u32) -> Vec<ClaimResult> {
    let n = 8 * m + 7;
    let mu = u64::from(m);
    let p = |s: &str| format!("sd16-odd.n{n}.{s}");
    let mut out = Vec::new();

    let rp = g.projective(n);
    let rp_order = g.entry_order(&rp, 2);
    out.push(order_claim(
        p("projective.col3"),
        "real projective space on <t>: the character with kernel Q8 has order 2^(4m+4)".into(),
        4 * mu + 4,
        rp_order.clone(),
    ));

    let diff = g.cyclic_difference(n, true);
    let diff_local = g.cyclic_difference(n, false);
    out.extend(cyclic_difference_claims(g, n, &diff, &diff_local));
    let kappa = diff.as_ref().map_err(Clone::clone).and_then(|d| Ok(d.eta_value(&g.cols[3])?.order()));

    let q8_det = q8_span_order(&g.q8, n);
    out.push(order_claim(
        p("quaternion.q8-span-order"),
        "quaternion space forms span order 2^(6m+6) in ko(BQ8)".into(),
        6 * mu + 6,
        q8_det.clone(),
    ));
    // 2 - tau is quaternionic on Q8 but 2 - chi_rho is not, so its value is
    // read in R/Z rather than R/2Z on SD16.
    let ratio: Result<Rational, EtaError> = (|| {
        let local = g.quaternion(2 * m + 1, false)?;
        let pushed = g.quaternion(2 * m + 1, true)?;
        let tau = VirtualCharacter::parse(Arc::clone(&g.q8), "2 - tau")?;
        let on_q8 = local.eta_value(&tau)?.order();
        let on_sd = pushed.eta_value(&g.cols[4])?.order();
        Ok(Rational::new(on_sd, on_q8))
    })();
    out.push(ClaimResult::new(
        p("quaternion.range-loss"),
        "2 - chi_rho is not quaternionic, so the order from 2 - tau halves".to_string(),
        rat(1, 2),
        shown(ratio.clone()),
    ));
    let quaternion_part = q8_det.and_then(|d| Ok((Rational::from_integer(d) * ratio?).to_integer()));
    let before: Result<BigInt, EtaError> = (|| Ok(rp_order? * kappa? * quaternion_part?))();
    out.push(order_claim(
        p("accounting.induced"),
        "2^(4m+4) * 2^(2m+1) * 8^(2m+2) = 2^(11+12m) from Q8 and <t>".into(),
        11 + 12 * mu,
        before.clone(),
    ));

    let c8_part: Result<(Modulus, BigInt), EtaError> = (|| {
        let rho = VirtualCharacter::parse(Arc::clone(&g.c8), "2*r4 - 2*r0")?;
        let lens = Manifold::lens(LensSpec::sphere(8, Groups::lens_weights(n)), None);
        let v = lens.eta_value(&rho)?;
        Ok((v.modulus, v.order()))
    })();
    out.push(ClaimResult::new(
        p("lens.quaternionic-range"),
        "2 r4 - 2 r0 is quaternionic on C8, so its eta value lies in R/2Z",
        Modulus::TwoZ,
        shown(c8_part.as_ref().map(|(md, _)| *md).map_err(Clone::clone)),
    ));
    out.push(order_claim(
        p("lens.quaternionic-order"),
        "eta of the lens space against 2 r4 - 2 r0 has order 2^(m+1) in R/2Z".into(),
        mu + 1,
        c8_part.clone().map(|(_, o)| o),
    ));
    let lens_sd = g.lens(n);
    out.push(order_claim(
        p("lens.col1"),
        "lens space on <s>: coordinate 1 has the same order 2^(m+1) in R/Z".into(),
        mu + 1,
        g.entry_order(&lens_sd, 0),
    ));
    let total = before.and_then(|b| Ok(b * c8_part?.1));
    out.push(total_claim(n, p("accounting.total"), total));
    out
}

/// Lens-space bundles over `S^2` in dimensions 5 and 13, pushed into
/// `SD_16` along `<s>`.
pub fn verify_sd16_bundles() -> Vec<ClaimResult> {
    let setup = || -> Result<(Arc<CharacterTable>, Arc<CharacterTable>, Inclusion), GroupError> {
        let sd = builtin_table(GroupTag::SD16)?;
        let c8 = builtin_table(GroupTag::Cyclic(8))?;
        let iota = Inclusion::new(Arc::clone(&c8), Arc::clone(&sd), &["s"])?;
        Ok((sd, c8, iota))
    };
    let (sd, c8, iota) = match setup() {
        Ok(x) => x,
        Err(e) => return vec![ClaimResult::new("sd16-bundles.setup", "subgroup <s> of SD16", "ok", e)],
    };
    let mut out = vec![ClaimResult::new(
        "sd16-bundles.restrict.rho",
        "chi_rho restricts to r1 + r3 on <s>",
        "r1 + r3",
        shown(VirtualCharacter::parse(Arc::clone(&sd), "rho").and_then(|r| restrict_virtual(&r, &iota))),
    )];
    let cases: [(usize, [(&str, Rational); 2], Rational, u64); 2] = [
        (2, [("r0 - r1", rat(-7, 8)), ("r0 - r3", rat(-5, 8))], rat(-3, 2), 1),
        (6, [("r0 - r1", rat(-17, 8) - rat(1, 32)), ("r0 - r3", rat(-17, 8) + rat(1, 32))], rat(-17, 4), 2),
    ];
    for (len, parts, sum, order_exp) in cases {
        let mut chern = vec![0i64; len];
        chern[0] = 2;
        let spec = LensSpec::bundle(8, vec![1; len], chern);
        let n = spec.dimension();
        for (rho, expected) in parts {
            let value = VirtualCharacter::parse(Arc::clone(&c8), rho)
                .map_err(EtaError::from)
                .and_then(|r| crate::eta::eta_lens_bundle(&spec, &r));
            out.push(ClaimResult::new(
                format!("sd16-bundles.n{n}.{}", rho.replace(' ', "")),
                format!("lens bundle of dimension {n} against {rho}"),
                expected,
                shown(value),
            ));
        }
        let pushed = Manifold::lens(spec.clone(), Some(iota.clone()));
        let value = VirtualCharacter::parse(Arc::clone(&sd), "2 - rho").map_err(EtaError::from).and_then(|r| pushed.eta_value(&r));
        out.push(ClaimResult::new(
            format!("sd16-bundles.n{n}.sum"),
            format!("naturality: eta of the pushed bundle against 2 - chi_rho is the sum, dimension {n}"),
            sum,
            shown(value.as_ref().map(|v| v.value.clone()).map_err(Clone::clone)),
        ));
        out.push(order_claim(
            format!("sd16-bundles.n{n}.order"),
            format!("the sum has order 2^{order_exp} in R/Z"),
            order_exp,
            value.clone().map(|v| eta_order(&v.value, Modulus::Z)),
        ));
        out.push(ClaimResult::new(
            format!("sd16-bundles.n{n}.table"),
            format!("order matches the one-column order of ker(Ap) in dimension {n}"),
            shown(KerApTable.lookup(n).map(|r| fmt_order(&r.one_column_order().into()))),
            shown(value.map(|v| fmt_order(&eta_order(&v.value, Modulus::Z)))),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_dimensions_pass_with_first_labeling() {
        let (claims, labeling) = verify_sd16_odd(2);
        let bad: Vec<_> = claims.iter().filter(|c| !c.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert_eq!(labeling, "i->s^2, j->t*s");
        let three = claims.iter().find(|c| c.id == "sd16-odd.n3.accounting.induced").unwrap();
        assert_eq!(three.computed, "2^8");
    }

    #[test]
    fn swapped_labeling_is_rejected() {
        let claims = odd_claims(Q8_LABELINGS[1], 0);
        let rho2 = claims.iter().find(|c| c.id == "sd16-odd.restrict.rho2-to-q8").unwrap();
        assert_eq!(rho2.computed, "k2 + k3");
        assert!(!rho2.passed());
    }

    #[test]
    fn bundles_pass() {
        let claims = verify_sd16_bundles();
        let bad: Vec<_> = claims.iter().filter(|c| !c.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(claims.iter().any(|c| c.id == "sd16-bundles.n13.r0-r3" && c.computed == "-67/32"));
    }
}
