//! Claim-by-claim verification of the eta-invariant, order-accounting and
//! mod-2 homology computations behind positive scalar curvature realization
//! of `ker(Ap)` for the semi-dihedral group of order 16.
//!
//! Every check produces a [`ClaimResult`] comparing a canonical rendering of
//! the expected exact value with the computed one; nothing is compared in
//! floating point.

mod cohomology;
mod kerap;
mod quaternion;
mod semidihedral;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cohomology::{verify_klein_span, verify_top_class, verify_two_column, P_IMAGE};
pub use kerap::{KerApRow, KerApTable, Summand};
pub use quaternion::verify_q8_orders;
pub use semidihedral::{verify_sd16_bundles, verify_sd16_odd, Q8_LABELINGS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("table entry: {0}")]
    Table(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked statement. `status` is `pass` exactly when the two renderings agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

impl ClaimResult {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self { id: id.into(), anchor: anchor.into(), expected, computed, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Renders a computation for comparison; errors never match an expectation.
pub(crate) fn shown<T: fmt::Display, E: fmt::Display>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// Canonical rendering of a group order: `1`, `2^e`, or decimal otherwise.
pub fn fmt_order(n: &BigInt) -> String {
    if n.is_one() {
        return "1".into();
    }
    if n.is_positive() && n.bits() > 0 && (n & (n - 1u32)) == BigInt::from(0) {
        return format!("2^{}", n.bits() - 1);
    }
    n.to_string()
}

pub(crate) fn order_pow2(e: u64) -> String {
    fmt_order(&(BigInt::one() << e))
}

/// A group of verifiers that can be selected on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Quaternion space forms: closed forms, orders, two-by-two determinants.
    Q8,
    /// Odd dimensions `8m+3`, `8m+7` for `SD_16`: eta-vector entries and order accounting.
    Sd16Odd,
    /// Lens-space bundles in dimensions 5 and 13.
    Sd16Bundles,
    /// The class dual to `y u P^{2k-1}` realized by a lens bundle over the circle.
    TopClass,
    /// Span of the Klein-four classes pushed to the dihedral group.
    KleinSpan,
    /// Two-column ranks reached through the dihedral group.
    TwoColumn,
    /// Internal consistency of the `ker(Ap)` table.
    Table,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Q8, Suite::Sd16Odd, Suite::Sd16Bundles, Suite::TopClass, Suite::KleinSpan, Suite::TwoColumn, Suite::Table];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Q8 => "q8",
            Suite::Sd16Odd => "sd16-odd",
            Suite::Sd16Bundles => "sd16-bundles",
            Suite::TopClass => "top-class",
            Suite::KleinSpan => "klein-span",
            Suite::TwoColumn => "two-column",
            Suite::Table => "table",
        }
    }

    /// Parses a comma-separated list; `all` selects every suite, the empty
    /// string none.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>, VerifyError> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bounds used by [`run_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub q8_m_max: u32,
    pub sd16_m_max: u32,
    pub top_class_dims: [u32; 4],
    pub homology_n_max: u32,
}

impl Default for ReportParams {
    fn default() -> Self {
        Self { q8_m_max: 8, sd16_m_max: 4, top_class_dims: [4, 8, 12, 16], homology_n_max: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suites: Vec<Suite>,
    pub claims: Vec<ClaimResult>,
    /// Images of `i, j` for the quaternion subgroup, when the odd-dimension suite ran.
    pub q8_labeling: Option<String>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| !c.passed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// The machine-readable form: a JSON array of claims.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.claims).expect("claims serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let mark = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {} [{}] expected {} computed {}\n", c.id, c.anchor, c.expected, c.computed));
        }
        if let Some(l) = &self.q8_labeling {
            out.push_str(&format!("quaternion subgroup labeling: {l}\n"));
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} claims, {} passed, {} failed\n", self.claims.len(), self.claims.len() - failed, failed));
        out
    }
}

/// Runs the selected suites concurrently and concatenates their claims in
/// suite order.
pub fn run_report(selection: &[Suite], params: &ReportParams) -> Report {
    let mut suites = selection.to_vec();
    suites.sort();
    suites.dedup();
    let results: Vec<(Vec<ClaimResult>, Option<String>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, params))).collect();
        handles.into_iter().map(|h| h.join().expect("verifier thread")).collect()
    });
    let mut claims = Vec::new();
    let mut q8_labeling = None;
    for (c, l) in results {
        claims.extend(c);
        q8_labeling = q8_labeling.or(l);
    }
    Report { suites, claims, q8_labeling }
}

fn run_suite(s: Suite, p: &ReportParams) -> (Vec<ClaimResult>, Option<String>) {
    match s {
        Suite::Q8 => (verify_q8_orders(p.q8_m_max), None),
        Suite::Sd16Odd => {
            let (claims, labeling) = verify_sd16_odd(p.sd16_m_max);
            (claims, Some(labeling))
        }
        Suite::Sd16Bundles => (verify_sd16_bundles(), None),
        Suite::TopClass => (p.top_class_dims.iter().flat_map(|&n| verify_top_class(n)).collect(), None),
        Suite::KleinSpan => (verify_klein_span(p.homology_n_max), None),
        Suite::TwoColumn => (verify_two_column(p.homology_n_max), None),
        Suite::Table => (verify_table(), None),
    }
}

/// Consistency of the table with the group orders and ranks used elsewhere.
pub fn verify_table() -> Vec<ClaimResult> {
    let t = KerApTable;
    let mut out = Vec::new();
    for m in 0..8u32 {
        for (r, base) in [(3u32, 8u64), (7, 12)] {
            let n = 8 * m + r;
            out.push(ClaimResult::new(
                format!("table.one-column-order.n{n}"),
                format!("one-column order in dimension 8m+{r} is 2^({base}+13m)"),
                order_pow2(base + 13 * u64::from(m)),
                shown(t.lookup(n).map(|row| fmt_order(&row.one_column_order().into()))),
            ));
        }
    }
    for n in 0..=64u32 {
        let expected = if n % 2 == 1 || n < 4 {
            0
        } else {
            let big_k = n / 8;
            if n % 8 == 4 {
                big_k + 1
            } else {
                big_k
            }
        };
        out.push(ClaimResult::new(
            format!("table.two-column-rank.n{n}"),
            "two-column rank: K+1 in 8K+4, K in 8K, 8K+2, 8K+6, zero in odd dimensions",
            expected,
            shown(t.lookup(n).map(|row| row.two_column_rank)),
        ));
    }
    for m in 0..8u32 {
        let n = 8 * m + 5;
        out.push(ClaimResult::new(
            format!("table.one-column-order.n{n}"),
            "one-column order in dimension 8m+5 is 2^(m+1)",
            order_pow2(u64::from(m) + 1),
            shown(t.lookup(n).map(|row| fmt_order(&row.one_column_order().into()))),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_status_is_string_equality() {
        assert!(ClaimResult::new("a", "x", "7/8", "7/8").passed());
        assert!(!ClaimResult::new("a", "x", "7/8", "-7/8").passed());
        assert!(!ClaimResult::new("a", "x", "1", shown::<i32, _>(Err("boom"))).passed());
    }

    #[test]
    fn order_rendering() {
        assert_eq!(fmt_order(&BigInt::from(1)), "1");
        assert_eq!(fmt_order(&BigInt::from(512)), "2^9");
        assert_eq!(fmt_order(&BigInt::from(12)), "12");
        assert_eq!(order_pow2(0), "1");
    }

    #[test]
    fn suite_selection() {
        assert_eq!(Suite::parse_list("").unwrap(), vec![]);
        assert_eq!(Suite::parse_list("q8").unwrap(), vec![Suite::Q8]);
        assert_eq!(Suite::parse_list("all").unwrap().len(), 7);
        assert!(Suite::parse_list("q9").is_err());
        assert!(run_report(&[], &ReportParams::default()).claims.is_empty());
    }

    #[test]
    fn table_claims_pass() {
        let claims = verify_table();
        let bad: Vec<_> = claims.iter().filter(|c| !c.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }

    #[test]
    fn full_report_passes() {
        let report = run_report(&Suite::ALL, &ReportParams::default());
        let bad: Vec<_> = report.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(report.claims.len() >= 40);
        assert_eq!(report.q8_labeling.as_deref(), Some("i->s^2, j->t*s"));
    }
}
