//! Check results and suite reports.
//!
//! A check computes both sides of one identity exactly and stores their
//! difference; `pass` means the discrepancy is identically zero, so there
//! is no tolerance anywhere. Elapsed times are the only nondeterministic
//! field in a report and can be stripped with
//! [`SuiteReport::canonical_data_json`] for byte-level comparison.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::qfield::RationalFunction;
use crate::qnumbers::NumberFamily;
use crate::qpolynomials::QPoly;

/// Outcome of one identity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Parameters a check ran with; absent fields do not apply.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<NumberFamily>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant: Option<String>,
}

impl CheckParams {
    pub fn none() -> Self {
        CheckParams::default()
    }

    pub fn n(n: usize) -> Self {
        CheckParams {
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn family(family: NumberFamily) -> Self {
        CheckParams {
            family: Some(family),
            ..Default::default()
        }
    }

    pub fn family_n(family: NumberFamily, n: usize) -> Self {
        CheckParams {
            family: Some(family),
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn nm(n: usize, m: u32) -> Self {
        CheckParams {
            n: Some(n),
            m: Some(m),
            ..Default::default()
        }
    }

    pub fn with_variant(mut self, variant: &str) -> Self {
        self.variant = Some(variant.to_string());
        self
    }
}

impl fmt::Display for CheckParams {
    fmt_params_display!();
}

macro_rules! fmt_params_display {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut wrote = false;
            if let Some(family) = self.family {
                write!(f, "family={family}")?;
                wrote = true;
            }
            if let Some(n) = self.n {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "n={n}")?;
                wrote = true;
            }
            if let Some(m) = self.m {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "m={m}")?;
                wrote = true;
            }
            if let Some(variant) = &self.variant {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "variant={variant}")?;
            }
            Ok(())
        }
    };
}
use fmt_params_display;

/// Exact symbolic difference between the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Discrepancy {
    Scalar(RationalFunction),
    Poly(QPoly),
}

impl Discrepancy {
    pub fn zero() -> Self {
        Discrepancy::Scalar(RationalFunction::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Discrepancy::Scalar(v) => v.is_zero(),
            Discrepancy::Poly(p) => p.is_zero(),
        }
    }
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::Scalar(v) => write!(f, "{v}"),
            Discrepancy::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// One executed check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: CheckParams,
    pub status: CheckStatus,
    /// Informational results are recorded but never gate the suite.
    pub informational: bool,
    pub discrepancy: Discrepancy,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn new(
        name: &str,
        params: CheckParams,
        discrepancy: Discrepancy,
        informational: bool,
        elapsed: Duration,
    ) -> Self {
        let status = if discrepancy.is_zero() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckResult {
            name: name.to_string(),
            params,
            status,
            informational,
            discrepancy,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Table entry to perturb before running the suite; demonstrates that the
/// checks are sensitive to every stored number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaultSpec {
    pub family: NumberFamily,
    pub index: usize,
}

impl FromStr for FaultSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (family, index) = s
            .split_once(':')
            .ok_or_else(|| format!("expected FAMILY:INDEX, got {s:?}"))?;
        Ok(FaultSpec {
            family: family.parse()?,
            index: index
                .parse()
                .map_err(|_| format!("invalid index {index:?}"))?,
        })
    }
}

/// Invalid suite configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid configuration: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

/// Grid the suite runs over.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Top index for the polynomial identity checks.
    pub max_n: usize,
    /// Top index for the Srivastava-Pinter style relations.
    pub sp_max_n: usize,
    /// Scaling parameters m for those relations.
    pub m_values: Vec<u32>,
    /// Depth of the number tables for dual-path and parity checks.
    pub table_max_n: usize,
    /// Depth of the classical-limit check on numbers.
    pub limit_max_n: usize,
    /// Depth of the classical-limit check on two-variable polynomials.
    pub poly_limit_max_n: usize,
    /// Largest odd index of the tangent-Genocchi check.
    pub tangent_max_odd: usize,
    /// Also evaluate the literal (unscaled) form of the Euler-via-Bernoulli
    /// relation and record it informationally.
    pub sp2_printed_variant: bool,
    /// Optional fault injection, echoed in the report.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inject_fault: Option<FaultSpec>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 12,
            sp_max_n: 8,
            m_values: vec![1, 2, 3],
            table_max_n: 24,
            limit_max_n: 16,
            poly_limit_max_n: 10,
            tangent_max_odd: 15,
            sp2_printed_variant: true,
            inject_fault: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.m_values.is_empty() {
            return Err(ConfigError("m_values must be nonempty".into()));
        }
        if self.m_values.iter().any(|&m| m == 0) {
            return Err(ConfigError("m values must be positive".into()));
        }
        if self.tangent_max_odd == 0 || self.tangent_max_odd % 2 == 0 {
            return Err(ConfigError("tangent_max_odd must be odd".into()));
        }
        if let Some(fault) = &self.inject_fault {
            let depth = self.number_table_depth();
            if fault.index > depth {
                return Err(ConfigError(format!(
                    "fault index {} exceeds table depth {depth}",
                    fault.index
                )));
            }
        }
        Ok(())
    }

    /// Depth the number tables must reach to serve every check.
    pub fn number_table_depth(&self) -> usize {
        [
            self.table_max_n,
            self.limit_max_n,
            self.max_n + 1,
            self.sp_max_n + 2,
            self.poly_limit_max_n,
            self.tangent_max_odd + 2,
        ]
        .into_iter()
        .max()
        .unwrap()
    }
}

/// Pass/fail counts, acceptance-bearing and informational kept apart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub informational_pass: usize,
    pub informational_fail: usize,
}

/// Full outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
    pub summary: SuiteSummary,
}

impl SuiteReport {
    pub fn new(config: SuiteConfig, results: Vec<CheckResult>) -> Self {
        let mut summary = SuiteSummary::default();
        for r in &results {
            match (r.informational, r.passed()) {
                (false, true) => summary.pass += 1,
                (false, false) => summary.fail += 1,
                (true, true) => summary.informational_pass += 1,
                (true, false) => summary.informational_fail += 1,
            }
        }
        SuiteReport {
            config,
            results,
            summary,
        }
    }

    /// True when every acceptance-bearing check passed.
    pub fn all_gating_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the elapsed-time metadata removed: the byte-deterministic
    /// data section of the report.
    pub fn canonical_data_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Some(results) = value.get_mut("results").and_then(|v| v.as_array_mut()) {
            for r in results {
                if let Some(obj) = r.as_object_mut() {
                    obj.remove("elapsed_ms");
                }
            }
        }
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            let tag = match (r.passed(), r.informational) {
                (true, false) => "PASS",
                (false, false) => "FAIL",
                (true, true) => "pass (info)",
                (false, true) => "fail (info)",
            };
            write!(f, "{tag:<12} {:<24} {}", r.name, r.params)?;
            if !r.passed() {
                write!(f, "  discrepancy: {}", r.discrepancy)?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "summary: {} passed, {} failed ({} informational passed, {} informational failed)",
            self.summary.pass,
            self.summary.fail,
            self.summary.informational_pass,
            self.summary.informational_fail
        )
    }
}
