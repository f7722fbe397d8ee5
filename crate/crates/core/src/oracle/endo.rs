//! Homomorphism spaces, isomorphism and indecomposability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{OracleError, Representation};
use crate::algebra::{decompose, is_local, unit_count, StructureAlgebra};
use crate::linfield::{Elem, Field, Matrix, Subspace};

/// A morphism of representations: one block per vertex.
pub type Blocks = Vec<Matrix>;

const PROBES: usize = 8;

/// Basis of `Hom(V, W)`: solutions of `phi_t M_a = M'_a phi_s` for all arrows.
pub fn hom_basis(v: &Representation, w: &Representation) -> Vec<Blocks> {
    let f = &v.field;
    let nv = v.vertices.len();
    let mut off = vec![0; nv + 1];
    for i in 0..nv {
        off[i + 1] = off[i] + w.dims[i] * v.dims[i];
    }
    let vars = off[nv];
    let mut rows: Vec<Vec<Elem>> = Vec::new();
    for (a, arrow) in v.arrows.iter().enumerate() {
        let (s, t) = (arrow.src, arrow.tgt);
        let (m, mp) = (&v.maps[a], &w.maps[a]);
        for i in 0..w.dims[t] {
            for j in 0..v.dims[s] {
                let mut row = vec![Elem::ZERO; vars];
                for k in 0..v.dims[t] {
                    let idx = off[t] + i * v.dims[t] + k;
                    row[idx] = f.add(row[idx], m.get(k, j));
                }
                for l in 0..w.dims[s] {
                    let idx = off[s] + l * v.dims[s] + j;
                    row[idx] = f.sub(row[idx], mp.get(i, l));
                }
                if row.iter().any(|e| !e.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        (0..vars)
            .map(|i| {
                let mut e = vec![Elem::ZERO; vars];
                e[i] = Elem::ONE;
                e
            })
            .collect()
    } else {
        Matrix::from_rows(f, &rows).nullspace_basis()
    };
    sol.into_iter()
        .map(|x| (0..nv).map(|i| Matrix::from_vec(f, w.dims[i], v.dims[i], x[off[i]..off[i + 1]].to_vec())).collect())
        .collect()
}

pub fn end_basis(v: &Representation) -> Vec<Blocks> {
    hom_basis(v, v)
}

fn combine(field: &Field, basis: &[Blocks], coeffs: &[Elem]) -> Blocks {
    let mut out: Blocks = basis[0].iter().map(|b| Matrix::zeros(field, b.rows(), b.cols())).collect();
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, m) in out.iter_mut().zip(b) {
            *o = o.add(&m.scale(*c));
        }
    }
    out
}

fn is_invertible(phi: &Blocks) -> bool {
    phi.iter().all(|b| b.rows() == 0 || b.is_invertible())
}

fn is_nilpotent(phi: &Blocks) -> bool {
    phi.iter().all(|b| b.rows() == 0 || b.pow(b.rows() as u64).is_zero())
}

fn block_diag(field: &Field, phi: &Blocks) -> Matrix {
    phi.iter().fold(Matrix::zeros(field, 0, 0), |acc, b| acc.direct_sum(b))
}

fn end_algebra(v: &Representation, basis: &[Blocks]) -> Result<StructureAlgebra, OracleError> {
    let mats: Vec<Matrix> = basis.iter().map(|b| block_diag(&v.field, b)).collect();
    Ok(StructureAlgebra::from_matrix_basis(&v.field, &mats)?)
}

/// Vertices with nonzero spaces split into more than one class under the
/// nonzero maps.
fn support_disconnected(v: &Representation) -> bool {
    let n = v.vertices.len();
    let support: Vec<usize> = (0..n).filter(|&i| v.dims[i] > 0).collect();
    if support.len() <= 1 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![support[0]];
    seen[support[0]] = true;
    while let Some(x) = stack.pop() {
        for (a, m) in v.arrows.iter().zip(&v.maps) {
            if m.is_zero() {
                continue;
            }
            for (p, q) in [(a.src, a.tgt), (a.tgt, a.src)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    support.iter().any(|&i| !seen[i])
}

/// An endomorphism that is neither nilpotent nor invertible, if the probes
/// (basis elements, then seeded random combinations) find one.
fn fitting_probe(v: &Representation, basis: &[Blocks]) -> Option<Blocks> {
    let f = &v.field;
    for b in basis {
        if !is_invertible(b) && !is_nilpotent(b) {
            return Some(b.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..PROBES {
        let coeffs: Vec<Elem> = (0..basis.len()).map(|_| Elem(rng.gen_range(0..f.order()))).collect();
        let phi = combine(f, basis, &coeffs);
        if !is_invertible(&phi) && !is_nilpotent(&phi) {
            return Some(phi);
        }
    }
    None
}

/// True iff `End(V)` is local.
pub fn is_indecomposable(v: &Representation) -> Result<bool, OracleError> {
    if v.is_zero() {
        return Ok(false);
    }
    if support_disconnected(v) {
        return Ok(false);
    }
    let basis = end_basis(v);
    if basis.len() == 1 {
        return Ok(true);
    }
    if fitting_probe(v, &basis).is_some() {
        return Ok(false);
    }
    Ok(is_local(&end_algebra(v, &basis)?)?)
}

/// `Some(|Aut V|)` when `V` is indecomposable.
pub(crate) fn indecomposable_weight(v: &Representation) -> Result<Option<u128>, OracleError> {
    if v.is_zero() || support_disconnected(v) {
        return Ok(None);
    }
    let basis = end_basis(v);
    if basis.len() == 1 {
        return Ok(Some(v.field.order() as u128 - 1));
    }
    if fitting_probe(v, &basis).is_some() {
        return Ok(None);
    }
    let alg = end_algebra(v, &basis)?;
    if !is_local(&alg)? {
        return Ok(None);
    }
    Ok(Some(unit_count(&alg)?))
}

/// `|Aut(V)|`, the unit count of `End(V)`.
pub fn aut_count(v: &Representation) -> Result<u128, OracleError> {
    let basis = end_basis(v);
    if basis.len() == 1 {
        return Ok(v.field.order() as u128 - 1);
    }
    if basis.is_empty() {
        return Ok(1);
    }
    Ok(unit_count(&end_algebra(v, &basis)?)?)
}

/// Searches `Hom(V, W)` for an invertible element: exhaustively when the
/// space has at most `budget` elements, otherwise by seeded sampling
/// (which can only confirm isomorphism).
pub fn are_isomorphic(v: &Representation, w: &Representation, budget: u128) -> Result<bool, OracleError> {
    if v.dims != w.dims || v.arrows != w.arrows {
        return Ok(false);
    }
    if v.is_zero() {
        return Ok(true);
    }
    let h = hom_basis(v, w);
    if h.is_empty() || h.len() != end_basis(v).len() || h.len() != end_basis(w).len() {
        return Ok(false);
    }
    let f = &v.field;
    let q = f.order() as u128;
    let size = q.checked_pow(h.len() as u32).unwrap_or(u128::MAX);
    if size <= budget {
        let mut coeffs = vec![Elem::ZERO; h.len()];
        for mut t in 1..size {
            for c in coeffs.iter_mut() {
                *c = Elem((t % q) as u32);
                t /= q;
            }
            if is_invertible(&combine(f, &h, &coeffs)) {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..budget.min(1 << 16) {
        let coeffs: Vec<Elem> = (0..h.len()).map(|_| Elem(rng.gen_range(0..f.order()))).collect();
        if is_invertible(&combine(f, &h, &coeffs)) {
            return Ok(true);
        }
    }
    Err(OracleError::BudgetExceeded { size, budget })
}

fn subrepresentation(v: &Representation, spaces: &[Subspace]) -> Representation {
    let f = &v.field;
    let maps = v
        .arrows
        .iter()
        .zip(&v.maps)
        .map(|(a, m)| {
            let (src, tgt) = (&spaces[a.src], &spaces[a.tgt]);
            let cols: Vec<Vec<Elem>> = src
                .basis()
                .iter()
                .map(|b| tgt.coords(&m.mul_vec(b)).expect("subspaces are invariant"))
                .collect();
            Matrix::from_rows(f, &cols).transpose_or_empty(tgt.dim(), src.dim())
        })
        .collect();
    Representation {
        field: f.clone(),
        vertices: v.vertices.clone(),
        dims: spaces.iter().map(|s| s.dim()).collect(),
        arrows: v.arrows.clone(),
        maps,
    }
}

trait TransposeOrEmpty {
    fn transpose_or_empty(&self, rows: usize, cols: usize) -> Matrix;
}

impl TransposeOrEmpty for Matrix {
    fn transpose_or_empty(&self, rows: usize, cols: usize) -> Matrix {
        if cols == 0 || rows == 0 {
            Matrix::zeros(self.field(), rows, cols)
        } else {
            self.transpose()
        }
    }
}

/// Fitting decomposition `V = ker(phi^N) + im(phi^N)` for an endomorphism
/// that is neither nilpotent nor invertible; `None` if `V` is
/// indecomposable (or zero).
pub fn split(v: &Representation) -> Result<Option<(Representation, Representation)>, OracleError> {
    if v.is_zero() {
        return Ok(None);
    }
    let basis = end_basis(v);
    let phi = match fitting_probe(v, &basis) {
        Some(p) => p,
        None => {
            let alg = end_algebra(v, &basis)?;
            let d = decompose(&alg)?;
            if d.idempotents.len() < 2 {
                return Ok(None);
            }
            combine(&v.field, &basis, &d.idempotents[0])
        }
    };
    let n = v.total_dim() as u64;
    let f = &v.field;
    let powered: Vec<Matrix> = phi.iter().map(|b| b.pow(n)).collect();
    let image: Vec<Subspace> = powered
        .iter()
        .map(|e| Subspace::span(f, e.rows(), (0..e.cols()).map(|c| (0..e.rows()).map(|r| e.get(r, c)).collect())))
        .collect();
    let kernel: Vec<Subspace> =
        powered.iter().map(|e| Subspace::span(f, e.rows(), e.nullspace_basis())).collect();
    Ok(Some((subrepresentation(v, &kernel), subrepresentation(v, &image))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::RepArrow;

    fn kronecker(f: &Field, a: i64, b: i64) -> Representation {
        Representation {
            field: f.clone(),
            vertices: vec!["1".into(), "2".into()],
            dims: vec![1, 1],
            arrows: vec![
                RepArrow { label: "a".into(), src: 0, tgt: 1 },
                RepArrow { label: "b".into(), src: 0, tgt: 1 },
            ],
            maps: vec![Matrix::from_ints(f, &[&[a]]), Matrix::from_ints(f, &[&[b]])],
        }
    }

    #[test]
    fn kronecker_basics() {
        let f = Field::prime(2).unwrap();
        let v = kronecker(&f, 1, 0);
        assert!(is_indecomposable(&v).unwrap());
        assert_eq!(end_basis(&v).len(), 1);
        assert!(are_isomorphic(&v, &v, 1 << 16).unwrap());
        assert!(!are_isomorphic(&v, &kronecker(&f, 0, 1), 1 << 16).unwrap());
        let z = kronecker(&f, 0, 0);
        assert!(!is_indecomposable(&z).unwrap());
        let (a, b) = split(&z).unwrap().unwrap();
        assert_eq!(a.total_dim() + b.total_dim(), 2);
    }

    #[test]
    fn direct_sum_splits() {
        let f = Field::prime(3).unwrap();
        let v = kronecker(&f, 1, 0).direct_sum(&kronecker(&f, 0, 1));
        assert!(!is_indecomposable(&v).unwrap());
        let (a, b) = split(&v).unwrap().unwrap();
        assert_eq!(a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect::<Vec<_>>(), v.dims);
        assert_eq!(aut_count(&kronecker(&f, 1, 1)).unwrap(), 2);
    }
}
