//! Representation-type decisions for finite EI-categories.
//!
//! [`classify`] runs a fixed sequence of rules. The first rule that reaches
//! a conclusion determines the verdict; with `run_all` set, the remaining
//! rules still run and their conclusions are attached as supporting
//! certificates, so that conflicting conclusions are detected.

mod context;
mod recheck;
mod rules;
mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use context::{Block, Context, FoundPresentation};
pub use recheck::recheck;
pub use rules::run_rule;
pub use search::{
    block_candidates, one_loop_finite, two_simples_decision, TwoSimplesFamily, TwoSimplesParameters,
};

use crate::algebra::{AlgebraError, group_simple_count};
use crate::endotriv::EndotrivError;
use crate::fincat::{CategoryError, FiniteCategory};
use crate::linfield::{lcm, splitting_degree, Field, FieldError, FieldSpec};
use crate::oracle::OracleError;
use crate::presentations::{PresentationError, VerifyOptions};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReptypeError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Endotriv(#[from] EndotrivError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Finite,
    Infinite,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleId {
    GroupObjects,
    ParallelKronecker,
    Endotrivialization,
    FreeAction,
    String,
    TwoSimples,
    CoprimeHereditary,
    OracleFamily,
}

impl RuleId {
    /// Rules in the order they are applied.
    pub const ALL: [RuleId; 8] = [
        RuleId::GroupObjects,
        RuleId::ParallelKronecker,
        RuleId::Endotrivialization,
        RuleId::FreeAction,
        RuleId::String,
        RuleId::TwoSimples,
        RuleId::CoprimeHereditary,
        RuleId::OracleFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::GroupObjects => "group_objects",
            RuleId::ParallelKronecker => "parallel_kronecker",
            RuleId::Endotrivialization => "endotrivialization",
            RuleId::FreeAction => "free_action",
            RuleId::String => "string",
            RuleId::TwoSimples => "two_simples",
            RuleId::CoprimeHereditary => "coprime_hereditary",
            RuleId::OracleFamily => "oracle_family",
        }
    }
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A conclusion of one rule with the data needed to re-check it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub rule: RuleId,
    pub verdict: Verdict,
    pub summary: String,
    pub witness: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleAttempt {
    pub rule: RuleId,
    pub outcome: Verdict,
    pub reason: String,
}

pub enum RuleOutcome {
    Fires(Certificate),
    Declines(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRef {
    pub p: u32,
    pub k: u32,
}

/// Which automorphism group orders the characteristic divides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regime {
    pub p: u32,
    pub divides: Vec<String>,
    pub coprime: bool,
    /// Set when the field was chosen automatically as a stand-in for
    /// characteristic zero.
    pub coprime_auto: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepTypeVerdict {
    pub verdict: Verdict,
    pub rule: Option<RuleId>,
    pub witness: serde_json::Value,
    pub field: FieldRef,
    pub regime: Regime,
    pub notes: Vec<String>,
    pub supporting: Vec<Certificate>,
    pub attempted: Vec<RuleAttempt>,
    /// Some rule concluded Finite and another Infinite.
    pub conflict: bool,
}

impl RepTypeVerdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        self.supporting.iter().find(|c| Some(c.rule) == self.rule)
    }

    pub fn certificate_for(&self, rule: RuleId) -> Option<&Certificate> {
        self.supporting.iter().find(|c| c.rule == rule)
    }
}

/// Whether and where the brute-force family rule counts representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Off,
    /// Dimension vector derived from a Euclidean component, if any.
    Auto { budget: u128 },
    Fixed { dims: Vec<usize>, budget: u128 },
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub run_all: bool,
    pub verify: VerifyOptions,
    pub oracle: OracleMode,
    /// Minimum growth of the indecomposable count from `F_q` to `F_{q^2}`.
    pub oracle_threshold: u128,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            run_all: true,
            verify: VerifyOptions::default(),
            oracle: OracleMode::Auto { budget: crate::oracle::DEFAULT_BUDGET },
            oracle_threshold: 2,
        }
    }
}

fn regime(c: &FiniteCategory, p: u32, auto: bool) -> Regime {
    let divides: Vec<String> = (0..c.object_count())
        .filter(|&x| c.automorphisms(x).len() % p as usize == 0)
        .map(|x| c.object_id(x).to_string())
        .collect();
    Regime { p, coprime: divides.is_empty(), divides, coprime_auto: auto }
}

/// Smallest prime dividing no automorphism group order, over the field
/// containing all roots of unity of the exponent.
pub fn coprime_field(c: &FiniteCategory) -> Result<Field, ReptypeError> {
    let orders: Vec<u64> = (0..c.object_count()).map(|x| c.automorphisms(x).len() as u64).collect();
    let exponent = (0..c.object_count()).map(|x| c.automorphism_group(x).exponent()).fold(1, lcm);
    let p = (2u32..).find(|&p| crate::linfield::is_prime(p as u64) && orders.iter().all(|o| o % p as u64 != 0)).unwrap();
    let k = splitting_degree(p, exponent).unwrap_or(1);
    Ok(Field::new(p, k)?)
}

/// Number of simple `kC`-modules over a splitting field of characteristic `p`.
pub fn simple_count(c: &FiniteCategory, p: u32) -> usize {
    (0..c.object_count()).map(|x| group_simple_count(&c.automorphism_group(x), p)).sum()
}

pub fn classify(c: &FiniteCategory, field: &Field, opts: &ClassifyOptions) -> Result<RepTypeVerdict, ReptypeError> {
    classify_in(c, field, opts, false)
}

/// Characteristic-zero query answered in a coprime characteristic.
pub fn classify_coprime(c: &FiniteCategory, opts: &ClassifyOptions) -> Result<RepTypeVerdict, ReptypeError> {
    c.require_ei()?;
    let (skel, _) = c.skeletalize();
    let field = coprime_field(&skel)?;
    classify_in(c, &field, opts, true)
}

fn classify_in(
    c: &FiniteCategory,
    field: &Field,
    opts: &ClassifyOptions,
    auto: bool,
) -> Result<RepTypeVerdict, ReptypeError> {
    c.require_ei()?;
    let (skel, _) = c.skeletalize();
    let ctx = Context::new(skel, field.clone(), opts.clone());
    let mut primary: Option<Certificate> = None;
    let mut supporting = Vec::new();
    let mut attempted = Vec::new();
    let mut notes = Vec::new();
    for rule in RuleId::ALL {
        if primary.is_some() && !opts.run_all {
            break;
        }
        match run_rule(rule, &ctx) {
            Ok(RuleOutcome::Fires(cert)) => {
                attempted.push(RuleAttempt { rule, outcome: cert.verdict, reason: cert.summary.clone() });
                if primary.is_none() {
                    primary = Some(cert.clone());
                }
                supporting.push(cert);
            }
            Ok(RuleOutcome::Declines(reason)) => {
                attempted.push(RuleAttempt { rule, outcome: Verdict::Unknown, reason });
            }
            Err(e) => {
                attempted.push(RuleAttempt { rule, outcome: Verdict::Unknown, reason: format!("error: {e}") });
            }
        }
    }
    notes.extend(ctx.notes());
    let conflict = supporting.iter().any(|c| c.verdict == Verdict::Finite)
        && supporting.iter().any(|c| c.verdict == Verdict::Infinite);
    if conflict {
        notes.push("rules disagree; see supporting certificates".into());
    }
    let spec: FieldSpec = field.spec();
    Ok(RepTypeVerdict {
        verdict: primary.as_ref().map_or(Verdict::Unknown, |c| c.verdict),
        rule: primary.as_ref().map(|c| c.rule),
        witness: primary.as_ref().map_or(serde_json::Value::Null, |c| c.witness.clone()),
        field: FieldRef { p: spec.p, k: spec.k },
        regime: regime(ctx.category(), field.p(), auto),
        notes,
        supporting,
        attempted,
        conflict,
    })
}
