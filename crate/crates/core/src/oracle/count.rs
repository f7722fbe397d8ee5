//! Enumeration of representations with a fixed dimension vector and
//! counting of isomorphism classes of indecomposables.
//!
//! The fast count uses `#classes = sum_V |Aut V| / prod_v |GL(d_v)|` over
//! indecomposable tuples `V`, with the first generator reduced to orbit
//! representatives.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::endo::{are_isomorphic, aut_count, indecomposable_weight};
use super::{OracleError, RepArrow, RepSystem, Representation, RepresentationReport};
use crate::linfield::{Elem, Field, FieldSpec, Matrix, Poly};

pub const DEFAULT_BUDGET: u128 = 1 << 30;

/// Largest matrix space whose orbits are computed explicitly.
const ORBIT_SPACE_LIMIT: u128 = 1 << 22;

#[derive(Clone, Debug)]
pub struct CountOptions {
    /// Maximum number of candidate tuples visited.
    pub budget: u128,
    pub parallel: bool,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions { budget: DEFAULT_BUDGET, parallel: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub dimvector: Vec<usize>,
    pub field: FieldSpec,
    /// Number of tuples of matrices satisfying the relations.
    pub total_reps: u128,
    pub indecomposable_classes: u128,
    pub method: String,
    /// One representative per class (pairwise method only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<RepresentationReport>,
}

/// `|GL(n, q)|`.
pub fn gl_order(n: usize, q: u128) -> u128 {
    let qn = q.pow(n as u32);
    (0..n).map(|i| qn - q.pow(i as u32)).product()
}

fn matrix_space(q: u128, rows: usize, cols: usize) -> u128 {
    q.checked_pow((rows * cols) as u32).unwrap_or(u128::MAX)
}

fn decode(field: &Field, rows: usize, cols: usize, mut t: u128) -> Matrix {
    let q = field.order() as u128;
    let data = (0..rows * cols)
        .map(|_| {
            let d = (t % q) as u32;
            t /= q;
            Elem(d)
        })
        .collect();
    Matrix::from_vec(field, rows, cols, data)
}

fn encode(m: &Matrix) -> u128 {
    let q = m.field().order() as u128;
    m.data().iter().rev().fold(0u128, |acc, e| acc * q + e.0 as u128)
}

/// Generators of `GL(n, q)`: a diagonal unit, an elementary transvection,
/// a transposition and an `n`-cycle.
fn gl_generators(field: &Field, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    if n == 0 {
        return gens;
    }
    if field.order() > 2 {
        let mut d = Matrix::identity(field, n);
        d.set(0, 0, field.primitive_element());
        gens.push(d);
    }
    if n >= 2 {
        let mut e = Matrix::identity(field, n);
        e.set(0, 1, Elem::ONE);
        gens.push(e);
        let mut t = Matrix::zeros(field, n, n);
        for i in 0..n {
            let j = match i {
                0 => 1,
                1 => 0,
                _ => i,
            };
            t.set(i, j, Elem::ONE);
        }
        gens.push(t);
    }
    if n >= 3 {
        let mut c = Matrix::zeros(field, n, n);
        for i in 0..n {
            c.set((i + 1) % n, i, Elem::ONE);
        }
        gens.push(c);
    }
    gens
}

fn monic_polys(field: &Field, d: usize) -> Vec<Poly> {
    let q = field.order() as u128;
    (0..q.pow(d as u32))
        .map(|mut t| {
            let mut c: Vec<Elem> = (0..d)
                .map(|_| {
                    let e = Elem((t % q) as u32);
                    t /= q;
                    e
                })
                .collect();
            c.push(Elem::ONE);
            Poly::new(field, c)
        })
        .collect()
}

/// Chains `f_1 | f_2 | ... | f_r` of monic non-constant polynomials with
/// total degree `n`: the rational canonical forms of `n x n` matrices.
fn invariant_factor_chains(field: &Field, n: usize) -> Vec<Vec<Poly>> {
    fn go(field: &Field, left: usize, chain: &mut Vec<Poly>, out: &mut Vec<Vec<Poly>>) {
        if left == 0 {
            out.push(chain.clone());
            return;
        }
        let next: Vec<Poly> = match chain.last() {
            None => (1..=left).flat_map(|d| monic_polys(field, d)).collect(),
            Some(prev) => {
                let dp = prev.degree().unwrap_or(0);
                if dp > left {
                    return;
                }
                (0..=left - dp).flat_map(|d| monic_polys(field, d)).map(|g| prev.mul(&g)).collect()
            }
        };
        for f in next {
            let d = f.degree().unwrap_or(0);
            chain.push(f);
            go(field, left - d, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    go(field, n, &mut Vec::new(), &mut out);
    out
}

fn block_companion(field: &Field, n: usize, chain: &[Poly]) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    let mut at = 0;
    for f in chain {
        let d = f.degree().unwrap_or(0);
        for i in 1..d {
            m.set(at + i, at + i - 1, Elem::ONE);
        }
        for i in 0..d {
            m.set(at + i, at + d - 1, field.neg(f.coeff(i)));
        }
        at += d;
    }
    m
}

/// Conjugacy class representatives of `n x n` matrices with class sizes
/// `|GL(n)| / |centralizer|`.
fn conjugacy_classes(field: &Field, n: usize) -> Result<Vec<(Matrix, u128)>, OracleError> {
    let gl = gl_order(n, field.order() as u128);
    invariant_factor_chains(field, n)
        .into_iter()
        .map(|chain| {
            let m = block_companion(field, n, &chain);
            let v = Representation {
                field: field.clone(),
                vertices: vec!["v".into()],
                dims: vec![n],
                arrows: vec![RepArrow { label: "m".into(), src: 0, tgt: 0 }],
                maps: vec![m.clone()],
            };
            Ok((m, gl / aut_count(&v)?))
        })
        .collect()
}

/// Orbit representatives of the first generator's matrix under base change,
/// with orbit sizes.
fn first_orbits(field: &Field, dims: &[usize], sys: &RepSystem) -> Result<Vec<(Matrix, u128)>, OracleError> {
    let a = &sys.arrows[0];
    let (rows, cols) = (dims[a.tgt], dims[a.src]);
    let q = field.order() as u128;
    let size = matrix_space(q, rows, cols);
    if size > ORBIT_SPACE_LIMIT {
        if a.src == a.tgt {
            return conjugacy_classes(field, rows);
        }
        return Ok((0..size).map(|t| (decode(field, rows, cols, t), 1)).collect());
    }
    let moves: Vec<Box<dyn Fn(&Matrix) -> Matrix + Sync>> = if a.src == a.tgt {
        gl_generators(field, rows)
            .into_iter()
            .map(|g| {
                let inv = g.inverse().expect("generator is invertible");
                Box::new(move |m: &Matrix| g.mul(m).mul(&inv)) as Box<dyn Fn(&Matrix) -> Matrix + Sync>
            })
            .collect()
    } else {
        let left = gl_generators(field, rows)
            .into_iter()
            .map(|g| Box::new(move |m: &Matrix| g.mul(m)) as Box<dyn Fn(&Matrix) -> Matrix + Sync>);
        let right = gl_generators(field, cols)
            .into_iter()
            .map(|g| Box::new(move |m: &Matrix| m.mul(&g)) as Box<dyn Fn(&Matrix) -> Matrix + Sync>);
        left.chain(right).collect()
    };
    let mut seen = vec![false; size as usize];
    let mut out = Vec::new();
    for start in 0..size as usize {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 0u128;
        while let Some(t) = stack.pop() {
            count += 1;
            let m = decode(field, rows, cols, t as u128);
            for mv in &moves {
                let n = encode(&mv(&m)) as usize;
                if !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            }
        }
        out.push((decode(field, rows, cols, start as u128), count));
    }
    Ok(out)
}

/// Depth-first assignment of generators `i..`, checking each relation as
/// soon as its last generator is fixed.
#[allow(clippy::too_many_arguments)]
fn dfs<F: FnMut(&[Matrix]) -> Result<(), OracleError>>(
    sys: &RepSystem,
    ready: &[Vec<usize>],
    field: &Field,
    dims: &[usize],
    maps: &mut Vec<Matrix>,
    i: usize,
    visit: &mut F,
) -> Result<(), OracleError> {
    if i == sys.arrows.len() {
        return visit(maps);
    }
    let a = &sys.arrows[i];
    let (rows, cols) = (dims[a.tgt], dims[a.src]);
    let size = matrix_space(field.order() as u128, rows, cols);
    for t in 0..size {
        maps[i] = decode(field, rows, cols, t);
        if ready[i].iter().all(|&r| sys.relation_holds(field, dims, maps, r)) {
            dfs(sys, ready, field, dims, maps, i + 1, visit)?;
        }
    }
    Ok(())
}

fn search_size(field: &Field, dims: &[usize], sys: &RepSystem, skip_first: usize) -> u128 {
    let q = field.order() as u128;
    sys.arrows
        .iter()
        .skip(skip_first)
        .fold(1u128, |acc, a| acc.saturating_mul(matrix_space(q, dims[a.tgt], dims[a.src])))
}

/// Calls `visit` on every tuple of generator matrices satisfying the
/// relations; returns the number of such tuples.
pub fn for_each_rep<F: FnMut(&[Matrix])>(
    sys: &RepSystem,
    field: &Field,
    dims: &[usize],
    budget: u128,
    mut visit: F,
) -> Result<u128, OracleError> {
    sys.check_dims(dims)?;
    let size = search_size(field, dims, sys, 0);
    if size > budget {
        return Err(OracleError::BudgetExceeded { size, budget });
    }
    let ready = sys.ready();
    let mut maps: Vec<Matrix> = sys.arrows.iter().map(|a| Matrix::zeros(field, dims[a.tgt], dims[a.src])).collect();
    let mut n = 0u128;
    dfs(sys, &ready, field, dims, &mut maps, 0, &mut |m: &[Matrix]| {
        n += 1;
        visit(m);
        Ok(())
    })?;
    Ok(n)
}

pub fn enumerate_reps(
    sys: &RepSystem,
    field: &Field,
    dims: &[usize],
    budget: u128,
) -> Result<Vec<Representation>, OracleError> {
    let mut out = Vec::new();
    for_each_rep(sys, field, dims, budget, |m| out.push(sys.representation(field, dims, m.to_vec())))?;
    Ok(out)
}

/// Generator with the largest matrix space first, so that orbit reduction
/// removes as much of the search as possible.
fn best_first(field: &Field, dims: &[usize], sys: &RepSystem) -> RepSystem {
    let q = field.order() as u128;
    let first = (0..sys.arrows.len())
        .filter(|&i| {
            let a = &sys.arrows[i];
            a.src == a.tgt || matrix_space(q, dims[a.tgt], dims[a.src]) <= ORBIT_SPACE_LIMIT
        })
        .max_by_key(|&i| {
            let a = &sys.arrows[i];
            (dims[a.tgt] * dims[a.src], std::cmp::Reverse(i))
        })
        .unwrap_or(0);
    let mut order = vec![first];
    order.extend((0..sys.arrows.len()).filter(|&i| i != first));
    sys.reordered(&order)
}

/// Number of isomorphism classes of indecomposable representations with
/// dimension vector `dims`.
pub fn count_indecomposables(
    sys: &RepSystem,
    field: &Field,
    dims: &[usize],
    opts: &CountOptions,
) -> Result<OracleReport, OracleError> {
    sys.check_dims(dims)?;
    let q = field.order() as u128;
    let group: u128 = dims.iter().map(|&d| gl_order(d, q)).product();
    let report = |total, classes| OracleReport {
        dimvector: dims.to_vec(),
        field: field.spec(),
        total_reps: total,
        indecomposable_classes: classes,
        method: "orbit-weighted".into(),
        witnesses: Vec::new(),
    };
    if sys.arrows.is_empty() {
        let v = sys.representation(field, dims, Vec::new());
        let w = indecomposable_weight(&v)?.unwrap_or(0);
        return Ok(report(1, w / group));
    }
    let sys = best_first(field, dims, sys);
    let orbits = first_orbits(field, dims, &sys)?;
    let size = (orbits.len() as u128).saturating_mul(search_size(field, dims, &sys, 1));
    if size > opts.budget {
        return Err(OracleError::BudgetExceeded { size, budget: opts.budget });
    }
    let ready = sys.ready();
    let per_orbit = |(rep, orbit): &(Matrix, u128)| -> Result<(u128, u128), OracleError> {
        let mut maps: Vec<Matrix> = sys.arrows.iter().map(|a| Matrix::zeros(field, dims[a.tgt], dims[a.src])).collect();
        maps[0] = rep.clone();
        if !ready[0].iter().all(|&r| sys.relation_holds(field, dims, &maps, r)) {
            return Ok((0, 0));
        }
        let (mut total, mut weight) = (0u128, 0u128);
        dfs(&sys, &ready, field, dims, &mut maps, 1, &mut |m: &[Matrix]| {
            total += 1;
            if let Some(w) = indecomposable_weight(&sys.representation(field, dims, m.to_vec()))? {
                weight += w;
            }
            Ok(())
        })?;
        Ok((total * orbit, weight * orbit))
    };
    let parts: Vec<(u128, u128)> = if opts.parallel {
        orbits.par_iter().map(per_orbit).collect::<Result<_, _>>()?
    } else {
        orbits.iter().map(per_orbit).collect::<Result<_, _>>()?
    };
    let total: u128 = parts.iter().map(|p| p.0).sum();
    let weight: u128 = parts.iter().map(|p| p.1).sum();
    if weight % group != 0 {
        return Err(OracleError::Malformed(format!("weighted sum {weight} is not divisible by {group}")));
    }
    Ok(report(total, weight / group))
}

/// Reference count: enumerate every tuple, keep the indecomposables and
/// partition them by explicit isomorphism tests.
pub fn count_indecomposables_naive(
    sys: &RepSystem,
    field: &Field,
    dims: &[usize],
    budget: u128,
) -> Result<OracleReport, OracleError> {
    let reps = enumerate_reps(sys, field, dims, budget)?;
    let total = reps.len() as u128;
    let mut classes: Vec<Representation> = Vec::new();
    for v in reps {
        if indecomposable_weight(&v)?.is_none() {
            continue;
        }
        let mut new = true;
        for c in &classes {
            if are_isomorphic(c, &v, budget)? {
                new = false;
                break;
            }
        }
        if new {
            classes.push(v);
        }
    }
    Ok(OracleReport {
        dimvector: dims.to_vec(),
        field: field.spec(),
        total_reps: total,
        indecomposable_classes: classes.len() as u128,
        method: "pairwise".into(),
        witnesses: classes.iter().map(|c| c.to_report()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{quiver, QuiverPresentation};

    fn kronecker() -> QuiverPresentation {
        quiver(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")])
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(0, 2), 1);
        assert_eq!(gl_order(1, 3), 2);
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(2, 3), 48);
    }

    #[test]
    fn kronecker_counts() {
        let sys = RepSystem::from_presentation(&kronecker());
        for (q, k, want) in [(2, 1, 3), (2, 2, 5), (3, 1, 4)] {
            let f = Field::new(q, k).unwrap();
            let fast = count_indecomposables(&sys, &f, &[1, 1], &CountOptions::default()).unwrap();
            let slow = count_indecomposables_naive(&sys, &f, &[1, 1], DEFAULT_BUDGET).unwrap();
            assert_eq!(fast.indecomposable_classes, want);
            assert_eq!(slow.indecomposable_classes, want);
            assert_eq!(fast.total_reps, slow.total_reps);
        }
    }

    #[test]
    fn loop_with_square_zero() {
        let mut q = quiver(&["1"], &[("a", "1", "1")]);
        q.zero_relation(&["a", "a"]).unwrap();
        let sys = RepSystem::from_presentation(&q);
        let f = Field::prime(2).unwrap();
        let r = count_indecomposables(&sys, &f, &[2], &CountOptions::default()).unwrap();
        assert_eq!(r.total_reps, 4);
        assert_eq!(r.indecomposable_classes, 1);
    }

    #[test]
    fn a2_counts() {
        let sys = RepSystem::from_presentation(&quiver(&["1", "2"], &[("a", "1", "2")]));
        let f = Field::prime(2).unwrap();
        let r = count_indecomposables(&sys, &f, &[1, 1], &CountOptions::default()).unwrap();
        assert_eq!((r.total_reps, r.indecomposable_classes), (2, 1));
        let r = count_indecomposables(&sys, &f, &[1, 0], &CountOptions::default()).unwrap();
        assert_eq!(r.indecomposable_classes, 1);
        let r = count_indecomposables(&sys, &f, &[2, 1], &CountOptions::default()).unwrap();
        assert_eq!(r.indecomposable_classes, 0);
    }

    #[test]
    fn group_of_order_two_in_char_three() {
        let c = crate::fincat::FiniteCategory::from_group("x", &crate::fincat::Group::cyclic(2, "g", "1"));
        let sys = RepSystem::from_category(&c);
        let f = Field::prime(3).unwrap();
        let r = count_indecomposables(&sys, &f, &[1], &CountOptions::default()).unwrap();
        assert_eq!((r.total_reps, r.indecomposable_classes), (2, 2));
        let r = count_indecomposables(&sys, &f, &[2], &CountOptions::default()).unwrap();
        assert_eq!(r.indecomposable_classes, 0);
    }

    #[test]
    fn budget_is_enforced() {
        let sys = RepSystem::from_presentation(&kronecker());
        let f = Field::prime(2).unwrap();
        let err = count_indecomposables(&sys, &f, &[3, 3], &CountOptions { budget: 10, parallel: false });
        assert!(matches!(err, Err(OracleError::BudgetExceeded { .. })));
    }

    #[test]
    fn similarity_classes() {
        for (p, k, n, classes) in [(2, 1, 1, 2), (2, 1, 2, 6), (3, 1, 2, 12), (2, 2, 2, 20), (2, 1, 3, 14)] {
            let f = Field::new(p, k).unwrap();
            let cc = conjugacy_classes(&f, n).unwrap();
            assert_eq!(cc.len(), classes, "q={} n={n}", f.order());
            let total: u128 = cc.iter().map(|c| c.1).sum();
            assert_eq!(total, (f.order() as u128).pow((n * n) as u32));
        }
    }

    #[test]
    fn canonical_forms_match_orbit_search() {
        let f = Field::prime(3).unwrap();
        let sys = RepSystem::from_presentation(&quiver(&["1"], &[("a", "1", "1")]));
        let mut bfs: Vec<u128> = first_orbits(&f, &[2], &sys).unwrap().into_iter().map(|o| o.1).collect();
        let mut rcf: Vec<u128> = conjugacy_classes(&f, 2).unwrap().into_iter().map(|o| o.1).collect();
        bfs.sort();
        rcf.sort();
        assert_eq!(bfs, rcf);
    }

    #[test]
    fn large_loop_uses_canonical_forms() {
        let c = crate::fincat::FiniteCategory::from_group("x", &crate::fincat::Group::cyclic(2, "g", "1"));
        let sys = RepSystem::from_category(&c);
        let f = Field::new(2, 2).unwrap();
        let r = count_indecomposables(&sys, &f, &[4], &CountOptions::default()).unwrap();
        assert_eq!(r.indecomposable_classes, 0);
        let r = count_indecomposables(&sys, &f, &[2], &CountOptions::default()).unwrap();
        assert_eq!(r.indecomposable_classes, 1);
    }
}
