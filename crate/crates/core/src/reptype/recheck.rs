//! Independent re-checking of certificates.
//!
//! Block-level witnesses carry a presentation; it is verified afresh against
//! the block before the claim about it is checked. Other witnesses are
//! recomputed from the category.

use serde_json::Value;

use super::context::Context;
use super::rules::{count_pair, run_rule};
use super::search::{two_simples_decision, TwoSimplesParameters};
use super::{Certificate, ClassifyOptions, ReptypeError, RuleId, RuleOutcome, Verdict};
use crate::fincat::FiniteCategory;
use crate::linfield::Field;
use crate::presentations::{
    band_automaton_certificate, is_string_algebra, verify_band, Letter, PresentationJson, QuiverPresentation,
};

fn presentation_of(w: &Value) -> Option<QuiverPresentation> {
    let j: PresentationJson = serde_json::from_value(w.get("presentation")?.clone()).ok()?;
    QuiverPresentation::from_json(&j).ok()
}

/// Verifies the witness presentation against the block with the same labels.
fn verified_block(ctx: &Context, w: &Value) -> Result<Option<QuiverPresentation>, ReptypeError> {
    let Some(q) = presentation_of(w) else { return Ok(None) };
    let labels: Vec<String> = match w.get("block").and_then(|b| serde_json::from_value(b.clone()).ok()) {
        Some(l) => l,
        None => return Ok(None),
    };
    let an = ctx.analysis()?;
    let Some(b) = an.blocks.iter().find(|b| b.labels == labels) else { return Ok(None) };
    Ok(b.target.verify(&q, ctx.opts.verify)?.is_verified().then_some(q))
}

fn string_entry(ctx: &Context, w: &Value, verdict: Verdict) -> Result<bool, ReptypeError> {
    let Some(q) = verified_block(ctx, w)? else { return Ok(false) };
    if !q.is_monomial() || !is_string_algebra(&q) {
        return Ok(false);
    }
    Ok(match verdict {
        Verdict::Infinite => {
            let band: Option<Vec<Letter>> = w.get("band").and_then(|b| serde_json::from_value(b.clone()).ok());
            band.is_some_and(|b| verify_band(&q, &b).is_ok())
        }
        _ => band_automaton_certificate(&q).band_free(),
    })
}

fn two_simples_entry(ctx: &Context, w: &Value, verdict: Verdict) -> Result<bool, ReptypeError> {
    let Some(params) = w.get("parameters") else {
        // local blocks and whole-category checks are recomputed
        return Ok(true);
    };
    let Ok(params) = serde_json::from_value::<TwoSimplesParameters>(params.clone()) else { return Ok(false) };
    let Some(q) = verified_block(ctx, w)? else { return Ok(false) };
    if q != params.presentation() {
        return Ok(false);
    }
    Ok(match two_simples_decision(&params) {
        Some((v, _)) => v == verdict,
        None => {
            is_string_algebra(&q) && band_automaton_certificate(&q).band_free() == (verdict == Verdict::Finite)
        }
    })
}

fn oracle_entry(ctx: &Context, w: &Value) -> Result<bool, ReptypeError> {
    let Some(q) = presentation_of(w) else { return Ok(false) };
    let dims: Vec<usize> = match w.get("dimvector").and_then(|d| serde_json::from_value(d.clone()).ok()) {
        Some(d) => d,
        None => return Ok(false),
    };
    let get = |k: &str| w.get(k).and_then(Value::as_u64).map(u128::from);
    let (Some(small), Some(big), Some(threshold)) = (get("count_q"), get("count_q2"), get("threshold")) else {
        return Ok(false);
    };
    let (s, b) = count_pair(&q, ctx.field().p(), &dims, u128::MAX)?;
    Ok(s == small && b == big && b.saturating_sub(s) >= threshold)
}

/// Re-checks `cert` for the category `c` over `field`.
pub fn recheck(c: &FiniteCategory, field: &Field, cert: &Certificate) -> Result<bool, ReptypeError> {
    c.require_ei()?;
    let (skel, _) = c.skeletalize();
    let ctx = Context::new(skel, field.clone(), ClassifyOptions::default());
    let entries: Vec<&Value> = match &cert.witness {
        Value::Array(items) => items.iter().collect(),
        w => vec![w],
    };
    match cert.rule {
        RuleId::String => {
            for w in entries {
                if !string_entry(&ctx, w, cert.verdict)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        RuleId::TwoSimples => {
            for w in &entries {
                if !two_simples_entry(&ctx, w, cert.verdict)? {
                    return Ok(false);
                }
            }
            if entries.iter().any(|w| w.get("parameters").is_some()) && cert.verdict == Verdict::Infinite {
                return Ok(true);
            }
            same_as_rerun(&ctx, cert)
        }
        RuleId::OracleFamily => oracle_entry(&ctx, &cert.witness),
        _ => same_as_rerun(&ctx, cert),
    }
}

fn same_as_rerun(ctx: &Context, cert: &Certificate) -> Result<bool, ReptypeError> {
    Ok(match run_rule(cert.rule, ctx)? {
        RuleOutcome::Fires(again) => again.verdict == cert.verdict && again.witness == cert.witness,
        RuleOutcome::Declines(_) => false,
    })
}
