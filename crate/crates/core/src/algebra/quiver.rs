use serde::{Deserialize, Serialize};

use super::idempotents::{primitive_idempotents_split, IdempotentDecomposition};
use super::radical::{loewy_length, radical_series};
use super::{AlgebraError, StructureAlgebra};
use crate::linfield::{Elem, Subspace};

/// Ext-quiver: `arrows[i][j]` arrows from vertex `i` to vertex `j`, where
/// `m(i -> j) = dim e_j (rad / rad^2) e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub src: String,
    pub tgt: String,
    pub multiplicity: usize,
}

impl ExtQuiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.iter().flatten().sum()
    }

    pub fn loops(&self, i: usize) -> usize {
        self.arrows[i][i]
    }

    pub fn entries(&self) -> Vec<ArrowEntry> {
        let mut out = Vec::new();
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    out.push(ArrowEntry {
                        src: self.vertices[i].clone(),
                        tgt: self.vertices[j].clone(),
                        multiplicity: m,
                    });
                }
            }
        }
        out
    }

    /// Connected components of the underlying graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut stack = vec![s];
            comp[s] = c;
            let mut members = Vec::new();
            while let Some(v) = stack.pop() {
                members.push(v);
                for w in 0..n {
                    if comp[w] == usize::MAX && (self.arrows[v][w] > 0 || self.arrows[w][v] > 0) {
                        comp[w] = c;
                        stack.push(w);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }
}

/// Computes the Ext-quiver from a split decomposition.
pub fn ext_quiver(a: &StructureAlgebra, d: &IdempotentDecomposition) -> Result<ExtQuiver, AlgebraError> {
    if !d.is_split() {
        let degree = d.degrees.iter().copied().max().unwrap_or(1) as u32;
        return Err(AlgebraError::NonSplit { degree });
    }
    let rad = &d.radical;
    let rad2 = a.product_space(rad.basis(), rad.basis());
    let reps = d.representatives();
    let mut arrows = vec![vec![0; reps.len()]; reps.len()];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            let (ei, ej) = (&d.idempotents[ri], &d.idempotents[rj]);
            let top = a.sandwich(ej, rad.basis(), ei).dim();
            let low = a.sandwich(ej, rad2.basis(), ei).dim();
            arrows[i][j] = top - low;
        }
    }
    Ok(ExtQuiver { vertices: reps.iter().map(|&r| d.labels[r].clone()).collect(), arrows })
}

/// Basic algebra `eAe` for `e` the sum of one idempotent per simple class.
#[derive(Clone, Debug)]
pub struct BasicAlgebra {
    pub algebra: StructureAlgebra,
    /// Vertex idempotents in the coordinates of `algebra`.
    pub idempotents: Vec<Vec<Elem>>,
    pub vertices: Vec<String>,
    pub radical: Subspace,
    /// The corner `eAe` inside `A`; basis row `i` is basis element `i`.
    pub space: Subspace,
}

pub fn basic_algebra(a: &StructureAlgebra, d: &IdempotentDecomposition) -> BasicAlgebra {
    let reps = d.representatives();
    let mut e = a.zero();
    for &r in &reps {
        e = a.add(&e, &d.idempotents[r]);
    }
    let basis: Vec<Vec<Elem>> = (0..a.dim()).map(|i| a.basis_vec(i)).collect();
    let space = a.sandwich(&e, &basis, &e);
    let b = a.restrict(&space, &e, None);
    let idempotents = reps.iter().map(|&r| space.coords(&d.idempotents[r]).unwrap()).collect();
    let radical = Subspace::span(
        a.field(),
        b.dim(),
        a.sandwich(&e, d.radical.basis(), &e).basis().iter().map(|v| space.coords(v).unwrap()),
    );
    BasicAlgebra {
        algebra: b,
        idempotents,
        vertices: reps.iter().map(|&r| d.labels[r].clone()).collect(),
        radical,
        space,
    }
}

/// Everything computed from an algebra at once, over a splitting field.
#[derive(Clone, Debug)]
pub struct AlgebraAnalysis {
    pub algebra: StructureAlgebra,
    pub decomposition: IdempotentDecomposition,
    pub radical_series: Vec<Subspace>,
    pub loewy_length: usize,
    pub quiver: ExtQuiver,
    /// Extension degree applied to reach a splitting field, if any.
    pub extended_to: Option<u32>,
}

pub fn analyze(a: &StructureAlgebra) -> Result<AlgebraAnalysis, AlgebraError> {
    let (alg, d) = primitive_idempotents_split(a)?;
    let extended_to = (alg.field().k() != a.field().k()).then(|| alg.field().k());
    let series = radical_series(&alg, &d.radical);
    let ll = loewy_length(&alg, &d.radical);
    let quiver = ext_quiver(&alg, &d)?;
    Ok(AlgebraAnalysis {
        algebra: alg,
        decomposition: d,
        radical_series: series,
        loewy_length: ll,
        quiver,
        extended_to,
    })
}
