//! Endotrivialization: the quotient of an EI-category identifying morphisms
//! that differ by an endomorphism twist.

use thiserror::Error;

use crate::fincat::{CategoryBuilder, CategoryError, FiniteCategory, Functor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EndotrivError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("category is not skeletal: {0} and {1} are isomorphic")]
    NotSkeletal(String, String),
    #[error("composition is not well defined on classes of {g} o {f}")]
    IncompatibleQuotient { g: String, f: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endotrivialization {
    pub source: FiniteCategory,
    pub quotient: FiniteCategory,
    /// Quotient functor; identity on objects.
    pub functor: Functor,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root
        if ra < rb {
            self.0[rb] = ra;
        } else if rb < ra {
            self.0[ra] = rb;
        }
    }
}

/// Class representative of each morphism under the transitive hull of `~`.
pub fn twist_classes(c: &FiniteCategory) -> Vec<usize> {
    let n = c.morphism_count();
    let mut uf = UnionFind((0..n).collect());
    let m = c.object_count();
    for w in 0..m {
        let ends = c.endomorphisms(w);
        let id = c.identity(w);
        for a in 0..m {
            for &f1 in c.hom(a, w) {
                for b in 0..m {
                    for &f2 in c.hom(w, b) {
                        let base = c.compose(f2, f1);
                        for &h in ends {
                            if h != id {
                                uf.union(base, c.compose(f2, c.compose(h, f1)));
                            }
                        }
                    }
                }
            }
        }
    }
    (0..n).map(|f| uf.find(f)).collect()
}

pub fn endotrivialize(c: &FiniteCategory) -> Result<Endotrivialization, EndotrivError> {
    c.require_ei()?;
    let reps = c.iso_representatives();
    if let Some((x, &r)) = reps.iter().enumerate().find(|(x, r)| x != *r) {
        return Err(EndotrivError::NotSkeletal(c.object_id(r).into(), c.object_id(x).into()));
    }
    let class = twist_classes(c);
    // name each class after its identity or else its smallest member
    let name = |root: usize| -> String {
        let x = c.dom(root);
        if c.dom(root) == c.cod(root) {
            c.morphism_id(c.identity(x)).to_string()
        } else {
            c.morphism_id(root).to_string()
        }
    };
    let mut b = CategoryBuilder::new();
    for x in 0..c.object_count() {
        b.object(c.object_id(x)).identity(c.object_id(x), c.morphism_id(c.identity(x)));
    }
    let roots: Vec<usize> = (0..c.morphism_count()).filter(|&f| class[f] == f).collect();
    for &r in &roots {
        b.morphism(&name(r), c.object_id(c.dom(r)), c.object_id(c.cod(r)));
    }
    let n = c.morphism_count();
    let mut induced = vec![None; n * n];
    for (g, f) in c.composable_pairs() {
        let (cg, cf, cgf) = (class[g], class[f], class[c.compose(g, f)]);
        match induced[cg * n + cf] {
            None => induced[cg * n + cf] = Some(cgf),
            Some(prev) if prev != cgf => {
                return Err(EndotrivError::IncompatibleQuotient {
                    g: c.morphism_id(g).into(),
                    f: c.morphism_id(f).into(),
                })
            }
            _ => {}
        }
    }
    for &g in &roots {
        for &f in &roots {
            if let Some(gf) = induced[g * n + f] {
                b.compose(&name(g), &name(f), &name(gf));
            }
        }
    }
    let quotient = b.build()?;
    let functor = Functor {
        objects: (0..c.object_count()).collect(),
        morphisms: (0..n).map(|f| quotient.morphism_index(&name(class[f])).unwrap()).collect(),
    };
    Ok(Endotrivialization { source: c.clone(), quotient, functor })
}

pub fn is_endotrivial(c: &FiniteCategory) -> bool {
    (0..c.object_count()).all(|x| c.endomorphisms(x).len() == 1)
}

impl Endotrivialization {
    /// All functors `Q -> D` with `G o F' = F`, where `G` is the quotient
    /// functor. Candidates for each class are the images of its members.
    pub fn factorizations(&self, f: &Functor, d: &FiniteCategory) -> Vec<Functor> {
        let q = &self.quotient;
        let mut cands: Vec<Vec<usize>> = vec![Vec::new(); q.morphism_count()];
        for (m, &cls) in self.functor.morphisms.iter().enumerate() {
            let img = f.morphisms[m];
            if !cands[cls].contains(&img) {
                cands[cls].push(img);
            }
        }
        let mut out = Vec::new();
        let mut choice = vec![0usize; q.morphism_count()];
        loop {
            let cand = Functor {
                objects: f.objects.clone(),
                morphisms: cands.iter().zip(&choice).map(|(c, &i)| c[i]).collect(),
            };
            if cand.validate(q, d).is_ok() && self.functor.compose(&cand) == *f {
                out.push(cand);
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < cands[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        out
    }

    /// True iff `F: C -> D` into an endotrivial `D` factors uniquely through
    /// the quotient.
    pub fn check_universal_property(&self, f: &Functor, d: &FiniteCategory) -> bool {
        if !is_endotrivial(d) || f.validate(&self.source, d).is_err() {
            return false;
        }
        self.factorizations(f, d).len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::Group;

    #[test]
    fn group_collapses_to_point() {
        let c = FiniteCategory::from_group("x", &Group::symmetric(3, "1"));
        let e = endotrivialize(&c).unwrap();
        assert_eq!(e.quotient.morphism_count(), 1);
        assert!(is_endotrivial(&e.quotient));
        assert!(!is_endotrivial(&c));
    }

    #[test]
    fn poset_is_fixed() {
        let c = FiniteCategory::from_poset(&["a", "b", "c"], |x, y| x <= y).unwrap();
        let e = endotrivialize(&c).unwrap();
        assert_eq!(e.quotient, c);
        let id = Functor { objects: vec![0, 1, 2], morphisms: (0..c.morphism_count()).collect() };
        assert!(e.check_universal_property(&id, &c));
    }

    #[test]
    fn terminal_target() {
        let c = FiniteCategory::from_group("x", &Group::cyclic(2, "g", "1"));
        let t = FiniteCategory::from_group("*", &Group::trivial("1"));
        let e = endotrivialize(&c).unwrap();
        let f = Functor { objects: vec![0], morphisms: vec![0, 0] };
        assert!(e.check_universal_property(&f, &t));
    }
}
