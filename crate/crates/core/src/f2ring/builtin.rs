//! The algebras and maps used by the verification harness.
//!
//! Names accepted by [`algebra`]: `d8`, `v2`, `sd`, `m:<n>`, `lens:<n>`.
//! Steenrod data by [`steenrod`]: `v2`, `sd`, `m:<n>:spin`, `m:<n>:nonspin`.

use super::{AlgebraSpec, F2Element, F2Error, GradedHom, PresentedF2Algebra, SteenrodData};

/// Mod-2 cohomology of the dihedral group of order 8.
pub fn d8() -> PresentedF2Algebra {
    PresentedF2Algebra::new(
        AlgebraSpec::new("d8", &[("alpha", 1), ("beta", 1), ("delta", 2)], &["alpha*beta + beta^2"])
            .with_precedence(&["alpha", "beta", "delta"]),
    )
    .expect("builtin presentation")
}

/// Mod-2 cohomology of the Klein four group.
pub fn v2() -> PresentedF2Algebra {
    PresentedF2Algebra::new(AlgebraSpec::new("v2", &[("p", 1), ("q", 1)], &[])).expect("builtin presentation")
}

/// Mod-2 cohomology of the semi-dihedral groups.
pub fn sd() -> PresentedF2Algebra {
    PresentedF2Algebra::new(
        AlgebraSpec::new(
            "sd",
            &[("x", 1), ("y", 1), ("u", 3), ("P", 4)],
            &["x*y + x^2", "x*u", "x^3", "u^2 + (x^2 + y^2)*P"],
        )
        .with_precedence(&["u", "P", "y", "x"]),
    )
    .expect("builtin presentation")
}

/// `Z2[sigma, tau, Z] / (sigma^2, sigma*tau + tau^2, Z^n)`, a Poincaré
/// algebra of formal dimension `2n` with top class `Z^{n-1} tau^2`.
pub fn m(n: u32) -> Result<PresentedF2Algebra, F2Error> {
    if n < 2 {
        return Err(F2Error::UnknownAlgebra(format!("m:{n}")));
    }
    let zn = format!("Z^{n}");
    let mut spec = AlgebraSpec::new(
        &format!("m:{n}"),
        &[("sigma", 1), ("tau", 1), ("Z", 2)],
        &["sigma^2", "sigma*tau + tau^2", &zn],
    )
    .with_precedence(&["sigma", "tau", "Z"])
    .with_poincare(2 * n, &format!("Z^{}*sigma*tau", n - 1));
    spec.degree_bound = spec.degree_bound.max(2 * n + 2);
    PresentedF2Algebra::new(spec)
}

/// `Z2[X, t] / (X^n, t^2)` with `deg X = 2`, `deg t = 1`.
pub fn lens(n: u32) -> Result<PresentedF2Algebra, F2Error> {
    if n < 1 {
        return Err(F2Error::UnknownAlgebra(format!("lens:{n}")));
    }
    let xn = format!("X^{n}");
    let mut spec = AlgebraSpec::new(&format!("lens:{n}"), &[("X", 2), ("t", 1)], &[&xn, "t^2"])
        .with_poincare(2 * n - 1, &format!("X^{}*t", n - 1));
    spec.degree_bound = spec.degree_bound.max(2 * n + 1);
    PresentedF2Algebra::new(spec)
}

fn parse_n(s: &str, full: &str) -> Result<u32, F2Error> {
    s.parse().map_err(|_| F2Error::UnknownAlgebra(full.to_string()))
}

pub fn algebra(name: &str) -> Result<PresentedF2Algebra, F2Error> {
    let parts: Vec<&str> = name.trim().split(':').collect();
    match parts.as_slice() {
        ["d8"] => Ok(d8()),
        ["v2"] => Ok(v2()),
        ["sd"] => Ok(sd()),
        ["m", n] | ["m", n, _] => m(parse_n(n, name)?),
        ["lens", n] => lens(parse_n(n, name)?),
        _ => Err(F2Error::UnknownAlgebra(name.to_string())),
    }
}

/// `Sq^2 u` on the semi-dihedral algebra; the only value consistent with the
/// relations once the other squares are fixed (see the solver test below).
pub const SD_SQ2_U: &str = "y^2*u + y*P + x*P";

/// Squares on the semi-dihedral algebra: `Sq^1 u = 0`, `Sq^2 P = u^2`,
/// `Sq^1 P = Sq^3 P = 0` (P reduces an integral class), and `Sq^2 u` as solved.
pub fn sd_steenrod() -> SteenrodData {
    SteenrodData::from_strings(
        sd(),
        &[("u", 1, "0"), ("u", 2, SD_SQ2_U), ("P", 1, "0"), ("P", 2, "u^2"), ("P", 3, "0")],
    )
    .expect("builtin Steenrod data")
}

/// Which value of `Sq^1 Z` is used on `m:<n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `Sq^1 Z = Z sigma`
    Spin,
    /// `Sq^1 Z = Z (tau + sigma)`
    NonSpin,
}

impl Branch {
    pub fn sq1_z(self) -> &'static str {
        match self {
            Branch::Spin => "Z*sigma",
            Branch::NonSpin => "Z*(tau + sigma)",
        }
    }
}

pub fn m_steenrod(n: u32, branch: Branch) -> Result<SteenrodData, F2Error> {
    SteenrodData::from_strings(m(n)?, &[("Z", 1, branch.sq1_z())])
}

pub fn steenrod(name: &str) -> Result<SteenrodData, F2Error> {
    let parts: Vec<&str> = name.trim().split(':').collect();
    match parts.as_slice() {
        ["v2"] => SteenrodData::new(v2(), &[]),
        ["sd"] => Ok(sd_steenrod()),
        ["m", n, "spin"] => m_steenrod(parse_n(n, name)?, Branch::Spin),
        ["m", n, "nonspin"] => m_steenrod(parse_n(n, name)?, Branch::NonSpin),
        ["lens", n] => SteenrodData::from_strings(lens(parse_n(n, name)?)?, &[("X", 1, "0")]),
        _ => Err(F2Error::UnknownAlgebra(name.to_string())),
    }
}

/// Restriction `sd -> d8`: `x -> 0, y -> alpha, u -> alpha*delta, P -> delta^2`.
pub fn sd_to_d8() -> GradedHom {
    GradedHom::from_strings(sd(), d8(), &[("x", "0"), ("y", "alpha"), ("u", "alpha*delta"), ("P", "delta^2")])
        .expect("builtin hom")
}

/// Restriction `d8 -> v2`: `alpha -> p, beta -> 0, delta -> q(p+q)`.
pub fn d8_to_v2() -> GradedHom {
    GradedHom::from_strings(d8(), v2(), &[("alpha", "p"), ("beta", "0"), ("delta", "q*(p + q)")])
        .expect("builtin hom")
}

/// `sd -> m:<n>`: `x -> tau, y -> sigma, u -> Z(tau+sigma)` and `P` as given.
pub fn sd_to_m(n: u32, p_image: &str) -> Result<GradedHom, F2Error> {
    GradedHom::from_strings(sd(), m(n)?, &[("x", "tau"), ("y", "sigma"), ("u", "Z*(tau + sigma)"), ("P", p_image)])
}

/// Admissible values of `Sq^1 Z` on `m:<n>`: those giving consistent
/// Steenrod data with `Sq^1` of the image of `u` equal to zero, further
/// filtered by `extra`.
pub fn sq1_branch_enumerate(n: u32, extra: impl Fn(&SteenrodData) -> bool) -> Result<Vec<F2Element>, F2Error> {
    let alg = m(n)?;
    let z = alg.generator_index("Z").expect("Z");
    let fu = alg.parse("Z*(tau + sigma)")?;
    let found = super::solve_unknown_squares(&alg, &[], &[(z, 1)], |s| s.sq(1, &fu).is_zero() && extra(s))?;
    Ok(found.into_iter().map(|(v, _)| v.into_iter().next().expect("one unknown")).collect())
}
