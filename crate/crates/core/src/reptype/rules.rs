use serde_json::json;

use super::context::{Block, Context};
use super::search::{truncation, two_simples_decision, TwoSimplesFamily};
use super::{Certificate, OracleMode, ReptypeError, RuleId, RuleOutcome, Verdict};
use crate::algebra::{group_rep_finite, sylow_order, sylow_p_cyclic};
use crate::endotriv::{endotrivialize, is_endotrivial};
use crate::fincat::FiniteCategory;
use crate::linfield::Field;
use crate::oracle::{count_indecomposables, CountOptions, OracleError, RepSystem};
use crate::presentations::{
    band_automaton_certificate, classify_graph, is_string_algebra, null_root, separated_quiver, word_label,
    GraphTag, QuiverPresentation, UndirectedGraph,
};

type RuleResult = Result<RuleOutcome, ReptypeError>;

fn fires(rule: RuleId, verdict: Verdict, summary: impl Into<String>, witness: serde_json::Value) -> RuleResult {
    Ok(RuleOutcome::Fires(Certificate { rule, verdict, summary: summary.into(), witness }))
}

fn declines(reason: impl Into<String>) -> RuleResult {
    Ok(RuleOutcome::Declines(reason.into()))
}

pub fn run_rule(rule: RuleId, ctx: &Context) -> RuleResult {
    match rule {
        RuleId::GroupObjects => group_objects(ctx),
        RuleId::ParallelKronecker => parallel_kronecker(ctx),
        RuleId::Endotrivialization => endotrivialization(ctx),
        RuleId::FreeAction => free_action(ctx),
        RuleId::String => string(ctx),
        RuleId::TwoSimples => two_simples(ctx),
        RuleId::CoprimeHereditary => coprime_hereditary(ctx),
        RuleId::OracleFamily => oracle_family(ctx),
    }
}

fn group_objects(ctx: &Context) -> RuleResult {
    let c = ctx.category();
    let p = ctx.field().p();
    for x in 0..c.object_count() {
        let g = c.automorphism_group(x);
        if g.order() % p as usize == 0 && !sylow_p_cyclic(&g, p) {
            return fires(
                RuleId::GroupObjects,
                Verdict::Infinite,
                format!("Aut({}) has a non-cyclic Sylow {p}-subgroup", c.object_id(x)),
                json!({ "object": c.object_id(x), "order": g.order(), "sylow_order": sylow_order(&g, p) }),
            );
        }
    }
    declines("every Sylow p-subgroup of an automorphism group is cyclic")
}

/// Pairs of distinct objects with at least two morphisms between them.
fn parallel_pairs(c: &FiniteCategory) -> Vec<(usize, usize)> {
    let n = c.object_count();
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && c.hom(x, y).len() >= 2).collect()
}

fn parallel_witness(q: &FiniteCategory, x: usize, y: usize) -> serde_json::Value {
    let morphisms: Vec<&str> = q.hom(x, y).iter().map(|&f| q.morphism_id(f)).collect();
    json!({ "x": q.object_id(x), "y": q.object_id(y), "morphisms": morphisms })
}

fn parallel_kronecker(ctx: &Context) -> RuleResult {
    let e = endotrivialize(ctx.category())?;
    match parallel_pairs(&e.quotient).first() {
        Some(&(x, y)) => fires(
            RuleId::ParallelKronecker,
            Verdict::Infinite,
            format!(
                "the endotrivialization has {} parallel morphisms {} -> {}",
                e.quotient.hom(x, y).len(),
                e.quotient.object_id(x),
                e.quotient.object_id(y)
            ),
            parallel_witness(&e.quotient, x, y),
        ),
        None => declines("the endotrivialization has no parallel morphisms between distinct objects"),
    }
}

fn poset_components(c: &FiniteCategory) -> Vec<Vec<usize>> {
    let n = c.object_count();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(comp: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while comp[r] != r {
            r = comp[r];
        }
        comp[i] = r;
        r
    }
    for x in 0..n {
        for y in 0..n {
            if !c.hom(x, y).is_empty() {
                let (a, b) = (find(&mut comp, x), find(&mut comp, y));
                comp[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for x in 0..n {
        let r = find(&mut comp, x);
        match root_of[r] {
            Some(g) => groups[g].push(x),
            None => {
                root_of[r] = Some(groups.len());
                groups.push(vec![x]);
            }
        }
    }
    groups
}

fn endotrivialization(ctx: &Context) -> RuleResult {
    let c = ctx.category();
    let e = endotrivialize(c)?;
    if let Some(&(x, y)) = parallel_pairs(&e.quotient).first() {
        return fires(
            RuleId::Endotrivialization,
            Verdict::Infinite,
            "the endotrivialization contains a Kronecker subquiver",
            parallel_witness(&e.quotient, x, y),
        );
    }
    if !is_endotrivial(c) {
        return declines("the category has non-trivial endomorphisms");
    }
    let chains = poset_components(c).into_iter().all(|comp| {
        comp.iter().all(|&a| comp.iter().all(|&b| !c.hom(a, b).is_empty() || !c.hom(b, a).is_empty()))
    });
    if chains {
        let objects: Vec<&str> = (0..c.object_count()).map(|x| c.object_id(x)).collect();
        fires(
            RuleId::Endotrivialization,
            Verdict::Finite,
            "a disjoint union of chains",
            json!({ "objects": objects, "chains": poset_components(c).len() }),
        )
    } else {
        declines("the object poset is not a union of chains")
    }
}

fn free_action(ctx: &Context) -> RuleResult {
    let c = ctx.category();
    let n = c.object_count();
    for x in 0..n {
        for y in 0..n {
            if x == y || c.hom(x, y).is_empty() {
                continue;
            }
            let act = c.hom_action(x, y);
            if act.aut_x.len() < 2 || act.aut_y.len() < 2 {
                continue;
            }
            let props = act.properties();
            if props.is_free {
                let stabilizers = vec![1usize; act.size()];
                return fires(
                    RuleId::FreeAction,
                    Verdict::Infinite,
                    format!(
                        "Aut({}) x Aut({}) acts freely on {} morphisms {} -> {}",
                        c.object_id(y),
                        c.object_id(x),
                        act.size(),
                        c.object_id(x),
                        c.object_id(y)
                    ),
                    json!({
                        "x": c.object_id(x),
                        "y": c.object_id(y),
                        "aut_x": act.aut_x.len(),
                        "aut_y": act.aut_y.len(),
                        "hom": act.size(),
                        "orbits": props.orbit_count,
                        "stabilizers": stabilizers,
                    }),
                );
            }
        }
    }
    declines("no free action of two non-trivial automorphism groups")
}

fn block_json(b: &Block, q: &QuiverPresentation) -> serde_json::Value {
    json!({
        "block": b.labels,
        "presentation": q.to_json(),
        "relations": q.relation_labels(),
    })
}

fn string(ctx: &Context) -> RuleResult {
    let an = ctx.analysis()?;
    let mut missing = None;
    let mut finite = Vec::new();
    for (i, b) in an.blocks.iter().enumerate() {
        let Some(found) = ctx.block_presentation(i)? else {
            missing.get_or_insert(format!("no verified presentation for block {}", b.labels.join(",")));
            continue;
        };
        let q = &found.presentation;
        if !q.is_monomial() || !is_string_algebra(q) {
            missing.get_or_insert(format!("block {} is not a string algebra", b.labels.join(",")));
            continue;
        }
        let cert = band_automaton_certificate(q);
        match &cert.band {
            Some(band) => {
                let mut w = block_json(b, q);
                w["band"] = json!(band);
                w["band_label"] = json!(word_label(q, band));
                return fires(
                    RuleId::String,
                    Verdict::Infinite,
                    format!("string algebra with band {}", word_label(q, band)),
                    w,
                );
            }
            None => {
                let mut w = block_json(b, q);
                w["automaton"] = json!({ "window": cert.window, "states": cert.states, "edges": cert.edges });
                finite.push(w);
            }
        }
    }
    match missing {
        Some(reason) => declines(reason),
        None => fires(RuleId::String, Verdict::Finite, "every block is a band-free string algebra", json!(finite)),
    }
}

fn two_simples(ctx: &Context) -> RuleResult {
    let c = ctx.category();
    let p = ctx.field().p();
    let an = ctx.analysis()?;
    let total = an.split.quiver.vertices.len();
    let n = c.object_count();
    if total == 2 && n == 1 {
        let g = c.automorphism_group(0);
        let finite = group_rep_finite(&g, p);
        let verdict = if finite { Verdict::Finite } else { Verdict::Infinite };
        return fires(
            RuleId::TwoSimples,
            verdict,
            format!("group algebra with {} Sylow {p}-subgroup", if finite { "cyclic" } else { "non-cyclic" }),
            json!({ "object": c.object_id(0), "sylow_cyclic": finite }),
        );
    }
    if total == 2 && n == 2 {
        for x in 0..n {
            let g = c.automorphism_group(x);
            if !sylow_p_cyclic(&g, p) {
                return fires(
                    RuleId::TwoSimples,
                    Verdict::Infinite,
                    format!("Aut({}) has a non-cyclic Sylow {p}-subgroup", c.object_id(x)),
                    json!({ "object": c.object_id(x) }),
                );
            }
        }
        for (x, y) in [(0, 1), (1, 0)] {
            if c.hom(x, y).is_empty() {
                continue;
            }
            let orbits = c.hom_action(x, y).properties().orbit_count;
            if orbits > 1 {
                return fires(
                    RuleId::TwoSimples,
                    Verdict::Infinite,
                    format!("{orbits} orbits on morphisms {} -> {}", c.object_id(x), c.object_id(y)),
                    json!({ "x": c.object_id(x), "y": c.object_id(y), "orbits": orbits }),
                );
            }
        }
    }
    let mut finite = Vec::new();
    for (i, b) in an.blocks.iter().enumerate() {
        let name = b.labels.join(",");
        if b.simple_count() == 1 && b.arrows[0][0] <= 1 {
            finite.push(json!({ "block": b.labels, "reason": "local with at most one loop" }));
            continue;
        }
        if b.simple_count() > 2 {
            return declines(format!("block {name} has {} simples", b.simple_count()));
        }
        let Some(found) = ctx.block_presentation(i)? else {
            return declines(format!("no verified presentation for block {name}"));
        };
        let Some(params) = found.parameters else {
            return declines(format!("block {name} is not in the two-simple families"));
        };
        let mut w = block_json(b, &found.presentation);
        w["parameters"] = json!(params);
        let decided = two_simples_decision(&params).or_else(|| {
            let q = &found.presentation;
            if params.family == TwoSimplesFamily::TwoLoop && is_string_algebra(q) {
                let cert = band_automaton_certificate(q);
                Some(match &cert.band {
                    Some(band) => (Verdict::Infinite, format!("band {}", word_label(q, band))),
                    None => (Verdict::Finite, "band-free string algebra".to_string()),
                })
            } else {
                None
            }
        });
        match decided {
            Some((Verdict::Infinite, why)) => {
                w["reason"] = json!(why);
                return fires(RuleId::TwoSimples, Verdict::Infinite, format!("block {name}: {why}"), w);
            }
            Some((_, why)) => {
                w["reason"] = json!(why);
                finite.push(w);
            }
            None => return declines(format!("parameters of block {name} are not decided by the tables")),
        }
    }
    fires(RuleId::TwoSimples, Verdict::Finite, "every block has finite type by the family tables", json!(finite))
}

fn has_length_two_paths(m: &[Vec<usize>]) -> bool {
    let n = m.len();
    (0..n).any(|i| (0..n).any(|j| m[i][j] > 0 && (0..n).any(|k| m[j][k] > 0)))
}

fn graph_verdict(rule: RuleId, g: &UndirectedGraph, what: &str) -> RuleResult {
    let class = classify_graph(g);
    let verdict = if class.is_dynkin() { Verdict::Finite } else { Verdict::Infinite };
    fires(rule, verdict, format!("{what} is {}", class.summary()), json!({ "graph": g, "class": class }))
}

fn coprime_hereditary(ctx: &Context) -> RuleResult {
    let an = ctx.analysis()?;
    let q = &an.split.quiver;
    if an.rad2_zero {
        if has_length_two_paths(&q.arrows) {
            let g = separated_quiver(&q.vertices, &q.arrows);
            return graph_verdict(RuleId::CoprimeHereditary, &g, "radical square zero; the separated quiver");
        }
        return graph_verdict(RuleId::CoprimeHereditary, &UndirectedGraph::of_quiver(q), "hereditary; the Ext-quiver");
    }
    let coprime = (0..ctx.category().object_count())
        .all(|x| ctx.category().automorphisms(x).len() % ctx.field().p() as usize != 0);
    if !coprime {
        return declines("characteristic divides an automorphism group order");
    }
    for (i, b) in an.blocks.iter().enumerate() {
        match ctx.block_presentation(i)? {
            Some(f) if f.presentation.relations.is_empty() => {}
            _ => return declines(format!("block {} has no relation-free presentation", b.labels.join(","))),
        }
    }
    graph_verdict(RuleId::CoprimeHereditary, &UndirectedGraph::of_quiver(q), "hereditary; the Ext-quiver")
}

/// Presentation used for counting: the verified one, or `kQ/J^2` when the
/// block has radical square zero.
fn counting_presentation(ctx: &Context, i: usize) -> Result<Option<QuiverPresentation>, ReptypeError> {
    let b = &ctx.analysis()?.blocks[i];
    if let Some(f) = ctx.block_presentation(i)? {
        return Ok(Some(f.presentation.clone()));
    }
    Ok(if b.loewy_length <= 2 { truncation(&b.labels, &b.arrows, 2) } else { None })
}

/// `delta_v + delta_v'` for the first Euclidean component of the separated
/// quiver.
pub(crate) fn auto_dims(labels: &[String], arrows: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = labels.len();
    let g = separated_quiver(labels, arrows);
    let class = classify_graph(&g);
    let comps = g.components();
    let (k, _) = class.components.iter().enumerate().find(|(_, c)| c.tag == GraphTag::Euclidean)?;
    let comp = &comps[k];
    let root = null_root(&g, comp)?;
    let mut dims = vec![0usize; n];
    for (idx, &v) in comp.iter().enumerate() {
        dims[v % n] += root[idx] as usize;
    }
    Some(dims)
}

pub(crate) fn count_pair(
    q: &QuiverPresentation,
    p: u32,
    dims: &[usize],
    budget: u128,
) -> Result<(u128, u128), ReptypeError> {
    let sys = RepSystem::from_presentation(q);
    let opts = CountOptions { budget, ..CountOptions::default() };
    let small = count_indecomposables(&sys, &Field::prime(p)?, dims, &opts)?;
    let big = count_indecomposables(&sys, &Field::new(p, 2)?, dims, &opts)?;
    Ok((small.indecomposable_classes, big.indecomposable_classes))
}

fn oracle_family(ctx: &Context) -> RuleResult {
    let (budget, fixed) = match &ctx.opts.oracle {
        OracleMode::Off => return declines("oracle disabled"),
        OracleMode::Auto { budget } => (*budget, None),
        OracleMode::Fixed { dims, budget } => (*budget, Some(dims.clone())),
    };
    let an = ctx.analysis()?;
    let p = ctx.field().p();
    let mut reasons = Vec::new();
    for (i, b) in an.blocks.iter().enumerate() {
        let dims = match &fixed {
            Some(all) => {
                if all.len() != an.split.quiver.vertices.len() {
                    return declines(format!("dimension vector needs {} entries", an.split.quiver.vertices.len()));
                }
                let outside = (0..all.len()).any(|v| all[v] > 0 && !b.vertices.contains(&v));
                let inside = b.vertices.iter().any(|&v| all[v] > 0);
                if outside || !inside {
                    continue;
                }
                b.vertices.iter().map(|&v| all[v]).collect()
            }
            None => match auto_dims(&b.labels, &b.arrows) {
                Some(d) => d,
                None => continue,
            },
        };
        let Some(q) = counting_presentation(ctx, i)? else {
            reasons.push(format!("no presentation for block {}", b.labels.join(",")));
            continue;
        };
        match count_pair(&q, p, &dims, budget) {
            Ok((small, big)) => {
                let grew = big.saturating_sub(small);
                let w = json!({
                    "block": b.labels,
                    "presentation": q.to_json(),
                    "dimvector": dims,
                    "p": p,
                    "count_q": small,
                    "count_q2": big,
                    "threshold": ctx.opts.oracle_threshold,
                });
                if grew >= ctx.opts.oracle_threshold {
                    return fires(
                        RuleId::OracleFamily,
                        Verdict::Infinite,
                        format!("indecomposables of dimension {dims:?}: {small} over F_{p}, {big} over F_{p}^2"),
                        w,
                    );
                }
                reasons.push(format!("counts {small} and {big} at {dims:?}"));
            }
            Err(ReptypeError::Oracle(OracleError::BudgetExceeded { .. })) => {
                reasons.push(format!("budget exceeded at {dims:?}"));
            }
            Err(e) => return Err(e),
        }
    }
    if reasons.is_empty() {
        declines("no Euclidean dimension vector to test")
    } else {
        declines(reasons.join("; "))
    }
}
