use std::collections::HashMap;

use super::{Path, PresentationError, QuiverPresentation};
use crate::algebra::StructureAlgebra;
use crate::linfield::{Elem, Field, Subspace};

/// Hard cap on the number of paths enumerated up to the length bound.
pub const MAX_PATHS: usize = 20_000;

/// `kQ/(I + J^{L+1})` with its path basis.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    pub algebra: StructureAlgebra,
    /// Surviving paths, one per basis element, shortest first.
    pub paths: Vec<Path>,
    pub bound: usize,
}

impl PresentedAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Image of a path (zero if it lies in the ideal).
    pub fn element_of_path(&self, p: &Path) -> Vec<Elem> {
        self.paths
            .iter()
            .position(|q| q == p)
            .map(|i| self.algebra.basis_vec(i))
            .unwrap_or_else(|| self.algebra.zero())
    }
}

fn enumerate_paths(q: &QuiverPresentation, bound: usize) -> Result<Vec<Path>, PresentationError> {
    let mut layer: Vec<Path> = (0..q.vertex_count()).map(|v| Path { vertex: v, arrows: Vec::new() }).collect();
    let mut all = layer.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for p in &layer {
            let t = q.path_tgt(p);
            for a in 0..q.arrow_count() {
                if q.src(a) == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { vertex: p.vertex, arrows });
                }
            }
        }
        all.extend(next.iter().cloned());
        if all.len() > MAX_PATHS {
            return Err(PresentationError::TooManyPaths(MAX_PATHS));
        }
        layer = next;
    }
    Ok(all)
}

/// `kQ/(I + J^{L+1})` for `L = bound`. Fails unless every path of length
/// `L` already lies in `I + J^{L+1}`, which forces `J^L` into `I`.
pub fn presented_algebra(
    q: &QuiverPresentation,
    field: &Field,
    bound: usize,
) -> Result<PresentedAlgebra, PresentationError> {
    let mut paths = enumerate_paths(q, bound)?;
    // longest first, so echelon pivots land on long paths
    paths.sort_by(|a, b| b.arrows.len().cmp(&a.arrows.len()).then_with(|| a.cmp(b)));
    let n = paths.len();
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let concat = |first: &Path, then: &Path| -> Option<usize> {
        if q.path_tgt(first) != q.path_src(then) || first.arrows.len() + then.arrows.len() > bound {
            return None;
        }
        let mut arrows = first.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        let vertex = if arrows.is_empty() { first.vertex } else { q.path_src(first) };
        index.get(&Path { vertex, arrows }).copied()
    };

    let arrow_paths: Vec<Path> = (0..q.arrow_count()).map(|a| Path { vertex: q.src(a), arrows: vec![a] }).collect();
    let mut ideal = Subspace::zero(field, n);
    let mut work: Vec<Vec<Elem>> = Vec::new();
    for r in &q.relations {
        let mut v = vec![Elem::ZERO; n];
        for (c, p) in &r.terms {
            if let Some(&i) = index.get(p) {
                v[i] = field.add(v[i], field.from_int(*c));
            }
        }
        work.push(v);
    }
    while let Some(v) = work.pop() {
        if !ideal.insert(v.clone()) {
            continue;
        }
        for ap in &arrow_paths {
            let mut before = vec![Elem::ZERO; n];
            let mut after = vec![Elem::ZERO; n];
            for (i, &c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if let Some(j) = concat(ap, &paths[i]) {
                    before[j] = field.add(before[j], c);
                }
                if let Some(j) = concat(&paths[i], ap) {
                    after[j] = field.add(after[j], c);
                }
            }
            work.push(before);
            work.push(after);
        }
    }
    for (i, p) in paths.iter().enumerate() {
        if p.arrows.len() == bound && ideal.reduce(&unit_vec(n, i)).iter().any(|e| !e.is_zero()) {
            return Err(PresentationError::NotFiniteDimensionalWithinBound(bound));
        }
    }

    let mut keep = ideal.complement_coords();
    keep.sort_by(|&a, &b| paths[a].arrows.len().cmp(&paths[b].arrows.len()).then_with(|| paths[a].cmp(&paths[b])));
    let project = |v: &[Elem]| -> Vec<Elem> {
        let r = ideal.reduce(v);
        keep.iter().map(|&i| r[i]).collect()
    };
    let mut dense = Vec::with_capacity(keep.len() * keep.len());
    for &a in &keep {
        for &b in &keep {
            // basis product "b after a" in composition terms is a then b as paths;
            // the algebra product x*y is x after y, i.e. path y then x
            let mut v = vec![Elem::ZERO; n];
            if let Some(j) = concat(&paths[b], &paths[a]) {
                v[j] = Elem::ONE;
            }
            dense.push(project(&v));
        }
    }
    let kept_paths: Vec<Path> = keep.iter().map(|&i| paths[i].clone()).collect();
    let labels = kept_paths.iter().map(|p| q.path_label(p)).collect();
    let trivial: Vec<Vec<Elem>> = (0..q.vertex_count())
        .map(|v| project(&unit_vec(n, index[&Path { vertex: v, arrows: Vec::new() }])))
        .collect();
    let mut unit = vec![Elem::ZERO; keep.len()];
    for t in &trivial {
        for (u, &x) in unit.iter_mut().zip(t) {
            *u = field.add(*u, x);
        }
    }
    let algebra = StructureAlgebra::from_dense(field, labels, dense, unit)
        .with_objects(q.vertices.iter().cloned().zip(trivial).collect());
    Ok(PresentedAlgebra { algebra, paths: kept_paths, bound })
}

fn unit_vec(n: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; n];
    v[i] = Elem::ONE;
    v
}

/// Smallest bound in `1..=max_bound` for which [`presented_algebra`]
/// succeeds.
pub fn presented_algebra_auto(
    q: &QuiverPresentation,
    field: &Field,
    max_bound: usize,
) -> Result<PresentedAlgebra, PresentationError> {
    let mut last = PresentationError::NotFiniteDimensionalWithinBound(0);
    for l in 1..=max_bound.max(1) {
        match presented_algebra(q, field, l) {
            Ok(a) => return Ok(a),
            Err(e @ PresentationError::NotFiniteDimensionalWithinBound(_)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::quiver;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn loop_squared() {
        let mut q = quiver(&["1"], &[("a", "1", "1")]);
        q.zero_relation(&["a", "a"]).unwrap();
        let a = presented_algebra(&q, &f2(), 2).unwrap();
        assert_eq!(a.dim(), 2);
        a.algebra.check().unwrap();
        assert!(presented_algebra(&q, &f2(), 1).is_err());
        assert_eq!(presented_algebra_auto(&q, &f2(), 8).unwrap().bound, 2);
    }

    #[test]
    fn one_loop_then_arrow() {
        // a^2 = 0 at 1, b: 1 -> 2, g^2 = 0 at 2, b a = 0, g b = 0
        let mut q = quiver(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2"), ("g", "2", "2")]);
        for r in ["a^2", "g^2", "b a", "g b"] {
            q.add_relation_text(r).unwrap();
        }
        let a = presented_algebra_auto(&q, &f2(), 8).unwrap();
        assert_eq!(a.dim(), 5);
        a.algebra.check().unwrap();
    }

    #[test]
    fn commutativity_relation() {
        let mut q = quiver(&["1", "2"], &[("a", "1", "1"), ("b", "1", "2"), ("g", "2", "2")]);
        for r in ["a^2", "g^2", "b a - g b"] {
            q.add_relation_text(r).unwrap();
        }
        let a = presented_algebra_auto(&q, &f2(), 8).unwrap();
        // e1, e2, a, b, g, ba = gb; g b a = g^2 b = 0
        assert_eq!(a.dim(), 6);
        a.algebra.check().unwrap();
    }

    #[test]
    fn product_direction() {
        let q = quiver(&["1", "2"], &[("b", "1", "2")]);
        let a = presented_algebra(&q, &f2(), 2).unwrap();
        let e1 = a.element_of_path(&Path { vertex: 0, arrows: vec![] });
        let e2 = a.element_of_path(&Path { vertex: 1, arrows: vec![] });
        let b = a.element_of_path(&Path { vertex: 0, arrows: vec![0] });
        assert_eq!(a.algebra.mul(&e2, &b), b);
        assert_eq!(a.algebra.mul(&b, &e1), b);
        assert!(a.algebra.is_zero(&a.algebra.mul(&b, &e2)));
    }

    #[test]
    fn free_loop_is_unbounded() {
        let q = quiver(&["1"], &[("a", "1", "1")]);
        assert!(matches!(
            presented_algebra_auto(&q, &f2(), 6),
            Err(PresentationError::NotFiniteDimensionalWithinBound(6))
        ));
    }
}
