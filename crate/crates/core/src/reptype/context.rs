//! Shared, lazily computed data for the rules: the split category algebra,
//! its blocks and a verified presentation of each block.

use std::cell::{OnceCell, RefCell};

use super::search::{find_presentation, TwoSimplesParameters};
use super::{ClassifyOptions, ReptypeError};
use crate::algebra::{analyze, category_algebra, loewy_length, AlgebraAnalysis};
use crate::fincat::FiniteCategory;
use crate::linfield::{Elem, Field};
use crate::presentations::{QuiverPresentation, VerifyTarget, Witness};

#[derive(Clone, Debug)]
pub struct FoundPresentation {
    pub presentation: QuiverPresentation,
    pub witness: Witness,
    pub parameters: Option<TwoSimplesParameters>,
}

/// A block of the split algebra: a connected component of its Ext-quiver.
pub struct Block {
    /// Ext-quiver vertex indices.
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    /// Arrow multiplicities between the block's vertices.
    pub arrows: Vec<Vec<usize>>,
    pub target: VerifyTarget,
    pub loewy_length: usize,
    presentation: OnceCell<Result<Option<FoundPresentation>, ReptypeError>>,
    notes: RefCell<Vec<String>>,
}

impl Block {
    pub fn simple_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn basic_dim(&self) -> usize {
        self.target.basic_dim()
    }

    pub fn has_length_two_paths(&self) -> bool {
        let n = self.vertices.len();
        (0..n).any(|i| (0..n).any(|j| self.arrows[i][j] > 0 && (0..n).any(|k| self.arrows[j][k] > 0)))
    }
}

pub struct Analysis {
    pub split: AlgebraAnalysis,
    pub blocks: Vec<Block>,
    pub rad2_zero: bool,
}

pub struct Context {
    category: FiniteCategory,
    field: Field,
    pub opts: ClassifyOptions,
    analysis: OnceCell<Result<Analysis, ReptypeError>>,
}

fn build_analysis(c: &FiniteCategory, field: &Field) -> Result<Analysis, ReptypeError> {
    let a = category_algebra(c, field);
    let split = analyze(&a)?;
    let alg = &split.algebra;
    let d = &split.decomposition;
    let q = &split.quiver;
    let components = q.components();
    let mut blocks = Vec::new();
    for comp in &components {
        let block_alg = if components.len() == 1 {
            alg.clone()
        } else {
            let mut e = alg.zero();
            for (i, idem) in d.idempotents.iter().enumerate() {
                if comp.contains(&d.classes[i]) {
                    e = alg.add(&e, idem);
                }
            }
            let all: Vec<Vec<Elem>> = (0..alg.dim()).map(|i| alg.basis_vec(i)).collect();
            let space = alg.sandwich(&e, &all, &e);
            alg.restrict(&space, &e, None)
        };
        let target = VerifyTarget::new(&block_alg)?;
        let loewy = loewy_length(&target.basic.algebra, &target.basic.radical);
        blocks.push(Block {
            vertices: comp.clone(),
            labels: comp.iter().map(|&v| q.vertices[v].clone()).collect(),
            arrows: comp.iter().map(|&i| comp.iter().map(|&j| q.arrows[i][j]).collect()).collect(),
            target,
            loewy_length: loewy,
            presentation: OnceCell::new(),
            notes: RefCell::new(Vec::new()),
        });
    }
    let rad2_zero = split.loewy_length <= 2;
    Ok(Analysis { split, blocks, rad2_zero })
}

impl Context {
    pub fn new(category: FiniteCategory, field: Field, opts: ClassifyOptions) -> Context {
        Context { category, field, opts, analysis: OnceCell::new() }
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn analysis(&self) -> Result<&Analysis, ReptypeError> {
        self.analysis.get_or_init(|| build_analysis(&self.category, &self.field)).as_ref().map_err(|e| e.clone())
    }

    /// A verified presentation of block `i`, searched once.
    pub fn block_presentation(&self, i: usize) -> Result<Option<&FoundPresentation>, ReptypeError> {
        let an = self.analysis()?;
        let b = &an.blocks[i];
        let found = b.presentation.get_or_init(|| {
            let (found, notes) = find_presentation(b, self.opts.verify)?;
            b.notes.borrow_mut().extend(notes);
            Ok(found)
        });
        found.as_ref().map(|o| o.as_ref()).map_err(|e| e.clone())
    }

    /// Diagnostics collected while searching for presentations.
    pub fn notes(&self) -> Vec<String> {
        match self.analysis.get() {
            Some(Ok(an)) => an.blocks.iter().flat_map(|b| b.notes.borrow().clone()).collect(),
            _ => Vec::new(),
        }
    }
}
