//! Verification harness: every closed form and structural claim in the crate
//! cross-checked against independent brute force, packaged as named checks
//! for the CLI and the acceptance suite.

use crate::cartan::{CartanFamily, CartanType};
use crate::error::Result;

pub mod checks;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> CheckOutcome {
        CheckOutcome {
            name: name.to_string(),
            passed: false,
            detail,
        }
    }
}

/// Scope and budget knobs for the harness.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Exceptional and A-family ranks are scanned up to this rank.
    pub max_rank: u8,
    /// Classical families are scanned up to this rank (at least `max_rank`).
    pub classical_rank: u8,
    /// Full-enumeration cap for the brute-force jobs.
    pub enum_bound: u64,
    /// Include the opt-in heavy jobs (full class count of the largest rank-8
    /// group).
    pub heavy: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_rank: 8,
            classical_rank: 12,
            enum_bound: crate::engine::DEFAULT_ENUM_BOUND,
            heavy: false,
        }
    }
}

/// All irreducible types within the configured scope.
pub fn types_in_scope(cfg: &VerifyConfig) -> Vec<CartanType> {
    let mut out = Vec::new();
    let classical = cfg.classical_rank.max(cfg.max_rank);
    for n in 1..=cfg.max_rank {
        out.push(CartanType::irreducible(CartanFamily::A, n).unwrap());
    }
    for n in 2..=classical {
        out.push(CartanType::irreducible(CartanFamily::B, n).unwrap());
    }
    for n in 3..=classical {
        out.push(CartanType::irreducible(CartanFamily::C, n).unwrap());
    }
    for n in 4..=classical {
        out.push(CartanType::irreducible(CartanFamily::D, n).unwrap());
    }
    if cfg.max_rank >= 2 {
        out.push(CartanType::irreducible(CartanFamily::G, 2).unwrap());
    }
    if cfg.max_rank >= 4 {
        out.push(CartanType::irreducible(CartanFamily::F, 4).unwrap());
    }
    for n in 6..=cfg.max_rank.min(8) {
        out.push(CartanType::irreducible(CartanFamily::E, n).unwrap());
    }
    out
}

/// Runs every check in the standard suite.
pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    out.push(checks::root_counts(cfg)?);
    out.push(checks::longest_elements(cfg)?);
    out.push(checks::subdiagram_consistency(cfg)?);
    out.push(checks::order_formula_soundness(cfg)?);
    out.push(checks::relative_type_fixtures()?);
    out.push(checks::involution_and_stability(cfg)?);
    out.push(checks::parabolic_irreducibility(cfg)?);
    out.push(checks::cuspidal_fixtures()?);
    out.push(checks::irr_counts_vs_brute_force(cfg)?);
    out.push(checks::normalizer_complement(cfg)?);
    out.push(checks::parametrization_totals()?);
    out.push(checks::m_set_and_tables()?);
    out.push(checks::determinism()?);
    if cfg.heavy {
        out.push(checks::heavy_top_rank_class_count(cfg)?);
    }
    Ok(out)
}
