//! Checking a candidate bound-quiver presentation against a computed
//! algebra by searching for an explicit isomorphism onto its basic algebra.

use serde::{Deserialize, Serialize};

use super::{presented_algebra_auto, PresentationError, QuiverPresentation};
use crate::algebra::{basic_algebra, primitive_idempotents_split, BasicAlgebra, StructureAlgebra};
use crate::linfield::{Elem, Field, FieldSpec, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Maximum number of partial assignments visited.
    pub budget: u64,
    /// Largest path length tried for the presented algebra.
    pub max_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: 200_000, max_bound: 32 }
    }
}

/// The isomorphism found: vertices to primitive idempotents and arrows to
/// elements of the (possibly extended) algebra, in its basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub field: FieldSpec,
    pub vertices: Vec<(String, String)>,
    pub arrows: Vec<(String, Vec<u32>)>,
    /// Arrow images written as combinations of basis labels.
    pub arrow_terms: Vec<(String, String)>,
    /// False when only the basic algebra (a proper corner) matched.
    pub algebra_is_basic: bool,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verification {
    Verified(Box<Witness>),
    NotVerified { reason: String },
    Unknown { budget: u64 },
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verification::Verified(w) => Some(w),
            _ => None,
        }
    }
}

fn not_verified(reason: impl Into<String>) -> Result<Verification, PresentationError> {
    Ok(Verification::NotVerified { reason: reason.into() })
}

/// All nonzero prime-field combinations of up to three fiber vectors;
/// otherwise combinations of at most two with coefficients `±1`.
fn candidates(field: &Field, fiber: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let len = fiber.first().map(|v| v.len()).unwrap_or(0);
    let combine = |coeffs: &[(usize, Elem)]| -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; len];
        for &(i, c) in coeffs {
            for (x, &y) in v.iter_mut().zip(&fiber[i]) {
                *x = field.add(*x, field.mul(c, y));
            }
        }
        v
    };
    let primes: Vec<Elem> = field.prime_subfield().collect();
    let mut out = Vec::new();
    if fiber.len() <= 3 {
        let p = primes.len();
        let total = p.pow(fiber.len() as u32);
        for mut t in 1..total {
            let mut coeffs = Vec::new();
            for i in 0..fiber.len() {
                coeffs.push((i, primes[t % p]));
                t /= p;
            }
            out.push(combine(&coeffs));
        }
    } else {
        let one = field.one();
        let minus = field.neg(one);
        for i in 0..fiber.len() {
            out.push(combine(&[(i, one)]));
        }
        for i in 0..fiber.len() {
            for j in i + 1..fiber.len() {
                out.push(combine(&[(i, one), (j, one)]));
                if minus != one {
                    out.push(combine(&[(i, one), (j, minus)]));
                }
            }
        }
    }
    out
}

struct Search<'a> {
    q: &'a QuiverPresentation,
    b: &'a StructureAlgebra,
    cands: Vec<Vec<Vec<Elem>>>,
    idem: Vec<Vec<Elem>>,
    // relations checkable once arrows 0..=k are assigned
    ready: Vec<Vec<usize>>,
    budget: u64,
    visited: u64,
}

impl Search<'_> {
    fn path_image(&self, img: &[Vec<Elem>], p: &super::Path) -> Vec<Elem> {
        let mut x = self.idem[p.vertex].clone();
        for &a in &p.arrows {
            x = self.b.mul(&img[a], &x);
        }
        x
    }

    fn relation_holds(&self, img: &[Vec<Elem>], r: usize) -> bool {
        let f = self.b.field();
        let mut acc = self.b.zero();
        for (c, p) in &self.q.relations[r].terms {
            let v = self.path_image(img, p);
            acc = self.b.add(&acc, &self.b.scale(f.from_int(*c), &v));
        }
        self.b.is_zero(&acc)
    }

    fn surjective(&self, img: &[Vec<Elem>]) -> bool {
        let n = self.b.dim();
        let mut span = Subspace::zero(self.b.field(), n);
        let mut work: Vec<Vec<Elem>> = self.idem.iter().chain(img).cloned().collect();
        while let Some(v) = work.pop() {
            if span.insert(v.clone()) {
                for a in img {
                    work.push(self.b.mul(a, &v));
                }
            }
        }
        span.dim() == n
    }

    /// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
    fn run(&mut self, img: &mut Vec<Vec<Elem>>) -> Option<bool> {
        let k = img.len();
        if k == self.q.arrow_count() {
            return Some(self.surjective(img));
        }
        for c in 0..self.cands[k].len() {
            self.visited += 1;
            if self.visited > self.budget {
                return None;
            }
            img.push(self.cands[k][c].clone());
            let ok = self.ready[k].iter().all(|&r| self.relation_holds(img, r));
            if ok && self.run(img)? {
                return Some(true);
            }
            img.pop();
        }
        Some(false)
    }
}

fn permutations(n: usize, accept: &dyn Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, accept: &dyn Fn(&[usize]) -> bool, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            if accept(cur) {
                out.push(cur.clone());
            }
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, cur, used, accept, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], accept, &mut out);
    out
}

/// A split algebra with its basic algebra, reused across candidates.
#[derive(Clone, Debug)]
pub struct VerifyTarget {
    pub algebra: StructureAlgebra,
    pub basic: BasicAlgebra,
}

impl VerifyTarget {
    /// Extends scalars first if `a/rad` does not split.
    pub fn new(a: &StructureAlgebra) -> Result<VerifyTarget, PresentationError> {
        let (alg, d) = primitive_idempotents_split(a)?;
        let basic = basic_algebra(&alg, &d);
        Ok(VerifyTarget { algebra: alg, basic })
    }

    pub fn basic_dim(&self) -> usize {
        self.basic.algebra.dim()
    }

    pub fn verify(&self, q: &QuiverPresentation, opts: VerifyOptions) -> Result<Verification, PresentationError> {
        verify_against(self, q, opts)
    }
}

/// Searches for an isomorphism from the presented algebra onto the basic
/// algebra of `a` (extending scalars first if `a/rad` does not split).
pub fn verify_presentation(
    a: &StructureAlgebra,
    q: &QuiverPresentation,
    opts: VerifyOptions,
) -> Result<Verification, PresentationError> {
    VerifyTarget::new(a)?.verify(q, opts)
}

fn verify_against(
    target: &VerifyTarget,
    q: &QuiverPresentation,
    opts: VerifyOptions,
) -> Result<Verification, PresentationError> {
    let alg = &target.algebra;
    let field = alg.field().clone();
    let basic = &target.basic;
    let b = &basic.algebra;
    let pres = match presented_algebra_auto(q, &field, opts.max_bound) {
        Ok(p) => p,
        Err(PresentationError::NotFiniteDimensionalWithinBound(l)) => {
            return not_verified(format!("presented algebra not finite-dimensional up to path length {l}"))
        }
        Err(e) => return Err(e),
    };
    if b.dim() != pres.dim() {
        return not_verified(format!("dimension {} of the basic algebra differs from {}", b.dim(), pres.dim()));
    }
    let r = basic.idempotents.len();
    if r != q.vertex_count() {
        return not_verified(format!("{r} simple modules but {} vertices", q.vertex_count()));
    }
    let rad = &basic.radical;
    let rad2 = b.product_space(rad.basis(), rad.basis());
    let fibers: Vec<Vec<Vec<Vec<Elem>>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let (ei, ej) = (&basic.idempotents[i], &basic.idempotents[j]);
                    let mut low = b.sandwich(ej, rad2.basis(), ei);
                    let top = b.sandwich(ej, rad.basis(), ei);
                    top.basis().iter().filter(|v| low.insert((*v).clone())).cloned().collect()
                })
                .collect()
        })
        .collect();
    let m = q.arrow_matrix();
    let perms = permutations(r, &|s: &[usize]| (0..r).all(|i| (0..r).all(|j| m[i][j] == fibers[s[i]][s[j]].len())));
    if perms.is_empty() {
        return not_verified("the quiver differs from the Ext-quiver");
    }
    let mut ready = vec![Vec::new(); q.arrow_count()];
    for (ri, rel) in q.relations.iter().enumerate() {
        let last = rel.terms.iter().flat_map(|(_, p)| p.arrows.iter().copied()).max().unwrap_or(0);
        ready[last].push(ri);
    }
    let mut exhausted_budget = false;
    let mut visited = 0;
    for s in perms {
        let cands = (0..q.arrow_count())
            .map(|k| candidates(&field, &fibers[s[q.src(k)]][s[q.tgt(k)]]))
            .collect();
        let idem = (0..r).map(|v| basic.idempotents[s[v]].clone()).collect();
        let mut search =
            Search { q, b, cands, idem, ready: ready.clone(), budget: opts.budget.saturating_sub(visited), visited: 0 };
        let mut img = Vec::new();
        let found = search.run(&mut img);
        visited += search.visited;
        match found {
            Some(true) => {
                let lift = |v: &[Elem]| -> Vec<Elem> {
                    let mut out = alg.zero();
                    for (c, row) in v.iter().zip(basic.space.basis()) {
                        out = alg.add(&out, &alg.scale(*c, row));
                    }
                    out
                };
                let images: Vec<Vec<Elem>> = img.iter().map(|v| lift(v)).collect();
                let terms = images.iter().map(|v| element_terms(alg, v)).collect::<Vec<_>>();
                let witness = Witness {
                    field: field.spec(),
                    vertices: (0..r).map(|v| (q.vertices[v].clone(), basic.vertices[s[v]].clone())).collect(),
                    arrows: q.arrows.iter().zip(&images).map(|(a, v)| (a.id.clone(), v.iter().map(|e| e.0).collect())).collect(),
                    arrow_terms: q.arrows.iter().zip(terms).map(|(a, t)| (a.id.clone(), t)).collect(),
                    algebra_is_basic: b.dim() == alg.dim(),
                    dim: b.dim(),
                };
                return Ok(Verification::Verified(Box::new(witness)));
            }
            Some(false) => {}
            None => {
                exhausted_budget = true;
                break;
            }
        }
    }
    if exhausted_budget {
        Ok(Verification::Unknown { budget: opts.budget })
    } else {
        not_verified("no arrow assignment in the candidate set satisfies the relations and generates the algebra")
    }
}

/// `"c*label + ..."` with coefficient 1 omitted.
pub fn element_terms(a: &StructureAlgebra, v: &[Elem]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if *c == Elem::ONE { a.labels()[i].clone() } else { format!("{}*{}", c.0, a.labels()[i]) })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::category_algebra;
    use crate::corpus::two_by_two;
    use crate::presentations::quiver;

    fn case(i: u8, rels: &[&str]) -> Verification {
        let c = two_by_two(i).build().unwrap();
        let a = category_algebra(&c, &Field::prime(2).unwrap());
        let mut q = quiver(&["1", "2"], &[("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "2")]);
        for r in rels {
            q.add_relation_text(r).unwrap();
        }
        verify_presentation(&a, &q, VerifyOptions::default()).unwrap()
    }

    #[test]
    fn two_by_two_cases() {
        assert!(case(1, &["alpha^2", "gamma^2", "beta alpha", "gamma beta"]).is_verified());
        assert!(case(4, &["alpha^2", "gamma^2", "beta alpha - gamma beta"]).is_verified());
        assert!(case(5, &["alpha^2", "gamma^2"]).is_verified());
    }

    #[test]
    fn wrong_presentations() {
        // dimension mismatch
        assert!(!case(1, &["alpha^2", "gamma^2"]).is_verified());
        // right dimension, wrong relations
        assert!(!case(4, &["alpha^2", "gamma^2", "beta alpha", "gamma beta alpha"]).is_verified());
    }
}
