//! Verification suites and report rendering shared by the binary and the
//! acceptance tests.

pub mod suites;

use serde::Serialize;

/// Runtime configuration: truncation orders and brute-force bounds, with
/// environment-variable overrides.
#[derive(Debug, Clone, Copy)]
pub struct RunConfig {
    pub order1: usize,
    pub order2: usize,
    pub weyl_rank_bound: u32,
    pub atlas_rank_bound: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { order1: 60, order2: 14, weyl_rank_bound: 7, atlas_rank_bound: 12 }
    }
}

impl RunConfig {
    /// Defaults overridden by CHARLAB_ORDER1, CHARLAB_ORDER2,
    /// CHARLAB_WEYL_BOUND, CHARLAB_ATLAS_BOUND.
    pub fn from_env() -> Self {
        let mut cfg = RunConfig::default();
        let read = |name: &str| std::env::var(name).ok().and_then(|v| v.parse::<u64>().ok());
        if let Some(v) = read("CHARLAB_ORDER1") {
            cfg.order1 = v.max(1) as usize;
        }
        if let Some(v) = read("CHARLAB_ORDER2") {
            cfg.order2 = v.max(1) as usize;
        }
        if let Some(v) = read("CHARLAB_WEYL_BOUND") {
            cfg.weyl_rank_bound = v.max(1) as u32;
        }
        if let Some(v) = read("CHARLAB_ATLAS_BOUND") {
            cfg.atlas_rank_bound = v.max(1) as u32;
        }
        cfg
    }
}

/// One verification check outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    pub fn pass(check: impl Into<String>) -> Self {
        CheckResult { check: check.into(), ok: true, detail: None }
    }

    pub fn fail(check: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckResult { check: check.into(), ok: false, detail: Some(detail.into()) }
    }

    pub fn of(check: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        CheckResult {
            check: check.into(),
            ok,
            detail: if ok || detail.is_empty() { None } else { Some(detail) },
        }
    }
}
