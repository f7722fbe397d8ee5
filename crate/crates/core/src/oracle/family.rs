//! Explicit representations of two-object categories whose automorphism
//! groups act freely on the hom set: the one-parameter families `V_lambda`
//! and the embedding of `k(G x H)`-modules.

use serde::{Deserialize, Serialize};

use super::endo::{are_isomorphic, end_basis, hom_basis};
use super::{OracleError, RepArrow, Representation};
use crate::algebra::{decompose, group_algebra, radical, sylow_p_cyclic};
use crate::fincat::{FiniteCategory, Group, HomAction};
use crate::linfield::{Elem, Field, Matrix, Subspace};

/// A `kG`-module: one matrix per group element, `mats[a * b] = mats[a] mats[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupModule {
    pub field: Field,
    pub mats: Vec<Matrix>,
    /// Number of radical layers kept from the projective cover it came from.
    pub layers: usize,
    /// Radical length of that projective cover.
    pub cover_layers: usize,
}

impl GroupModule {
    pub fn dim(&self) -> usize {
        self.mats.first().map_or(0, |m| m.rows())
    }

    pub fn is_simple(&self) -> bool {
        self.layers == 1
    }

    pub fn is_module(&self, g: &Group) -> bool {
        self.mats.len() == g.order()
            && self.mats[g.identity()].is_identity()
            && (0..g.order()).all(|a| (0..g.order()).all(|b| self.mats[g.mul(a, b)] == self.mats[a].mul(&self.mats[b])))
    }

    /// One-dimensional module from a character.
    pub fn character(field: &Field, values: Vec<Elem>) -> GroupModule {
        GroupModule {
            field: field.clone(),
            mats: values.into_iter().map(|v| Matrix::scalar(field, 1, v)).collect(),
            layers: 1,
            cover_layers: 1,
        }
    }

    pub fn direct_sum(&self, other: &GroupModule) -> GroupModule {
        GroupModule {
            field: self.field.clone(),
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.direct_sum(b)).collect(),
            layers: self.layers.max(other.layers),
            cover_layers: self.cover_layers.max(other.cover_layers),
        }
    }

    /// Change of basis: columns of `p` are the new basis vectors.
    pub fn rebase(&self, p: &Matrix) -> GroupModule {
        let inv = p.inverse().expect("change of basis is invertible");
        GroupModule { mats: self.mats.iter().map(|m| inv.mul(m).mul(p)).collect(), ..self.clone() }
    }

    /// The module as a representation of the one-vertex quiver with a loop
    /// per group element.
    pub fn as_representation(&self, g: &Group) -> Representation {
        Representation {
            field: self.field.clone(),
            vertices: vec!["*".into()],
            dims: vec![self.dim()],
            arrows: g.labels().iter().map(|l| RepArrow { label: l.clone(), src: 0, tgt: 0 }).collect(),
            maps: self.mats.clone(),
        }
    }

    pub fn end_dim(&self, g: &Group) -> usize {
        end_basis(&self.as_representation(g)).len()
    }
}

/// Action of `a` on the quotient `U / W` of left-ideal subspaces, in a basis
/// completing `W` to `U`.
fn quotient_module(g: &Group, field: &Field, alg_left: &[Matrix], u: &Subspace, w: &Subspace) -> Vec<Matrix> {
    let mut ext = w.clone();
    let mut top = Vec::new();
    for b in u.basis() {
        if ext.insert(b.clone()) {
            top.push(b.clone());
        }
    }
    let mut cols: Vec<Vec<Elem>> = w.basis().to_vec();
    cols.extend(top.iter().cloned());
    let n = u.ambient();
    let basis = Matrix::from_vec(
        field,
        n,
        cols.len(),
        (0..n).flat_map(|r| cols.iter().map(move |c| c[r])).collect(),
    );
    let skip = w.dim();
    (0..g.order())
        .map(|a| {
            let mut m = Matrix::zeros(field, top.len(), top.len());
            for (j, t) in top.iter().enumerate() {
                let image = alg_left[a].mul_vec(t);
                let coords = basis.solve(&image).expect("shapes agree").expect("U is invariant");
                for i in 0..top.len() {
                    m.set(i, j, coords[skip + i]);
                }
            }
            m
        })
        .collect()
}

/// Indecomposable `kG`-modules of the form `P / rad^j P` for the projective
/// indecomposables `P`, up to isomorphism, ordered by dimension.
pub fn group_modules(g: &Group, field: &Field) -> Result<Vec<GroupModule>, OracleError> {
    let a = group_algebra(g, field);
    let d = decompose(&a)?;
    let rad = radical(&a)?;
    let left: Vec<Matrix> = (0..g.order()).map(|i| a.left_matrix(&a.basis_vec(i))).collect();
    let n = a.dim();
    let mut out: Vec<GroupModule> = Vec::new();
    for r in d.representatives() {
        let e = &d.idempotents[r];
        let p = Subspace::span(field, n, (0..n).map(|i| a.mul(&a.basis_vec(i), e)));
        let mut layers = vec![p.clone()];
        loop {
            let last = layers.last().unwrap();
            let next = a.product_space(rad.basis(), last.basis());
            if next.dim() == last.dim() {
                break;
            }
            let done = next.is_zero();
            layers.push(next);
            if done {
                break;
            }
        }
        let cover_layers = layers.len() - 1;
        for j in 1..=cover_layers {
            let m = GroupModule {
                field: field.clone(),
                mats: quotient_module(g, field, &left, &p, &layers[j]),
                layers: j,
                cover_layers,
            };
            let rep = m.as_representation(g);
            let mut known = false;
            for o in &out {
                if o.dim() == m.dim() && are_isomorphic(&o.as_representation(g), &rep, 1 << 20)? {
                    known = true;
                    break;
                }
            }
            if !known {
                out.push(m);
            }
        }
    }
    out.sort_by_key(|m| (m.dim(), m.layers));
    Ok(out)
}

/// Commuting actions of `Aut(y)` (on the left) and `Aut(x)` on one space,
/// indexed like the hom action's `aut_y` and `aut_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductModule {
    pub field: Field,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl ProductModule {
    pub fn dim(&self) -> usize {
        self.left.first().map_or(0, |m| m.rows())
    }

    /// `k(Aut(y) x Aut(x))` acting on itself.
    pub fn regular(c: &FiniteCategory, field: &Field) -> Result<ProductModule, OracleError> {
        let (_, _, act) = frame(c)?;
        let gy = c.automorphism_group(act.y);
        let gx = c.automorphism_group(act.x);
        let (ny, nx) = (gy.order(), gx.order());
        let perm = |f: &dyn Fn(usize, usize) -> (usize, usize)| {
            let mut m = Matrix::zeros(field, ny * nx, ny * nx);
            for a in 0..ny {
                for b in 0..nx {
                    let (a2, b2) = f(a, b);
                    m.set(a2 * nx + b2, a * nx + b, Elem::ONE);
                }
            }
            m
        };
        Ok(ProductModule {
            field: field.clone(),
            left: (0..ny).map(|h| perm(&|a, b| (gy.mul(h, a), b))).collect(),
            right: (0..nx).map(|g| perm(&|a, b| (a, gx.mul(g, b)))).collect(),
        })
    }

    pub fn trivial(c: &FiniteCategory, field: &Field) -> Result<ProductModule, OracleError> {
        let (_, _, act) = frame(c)?;
        Ok(ProductModule {
            field: field.clone(),
            left: act.aut_y.iter().map(|_| Matrix::identity(field, 1)).collect(),
            right: act.aut_x.iter().map(|_| Matrix::identity(field, 1)).collect(),
        })
    }

    pub fn direct_sum(&self, other: &ProductModule) -> ProductModule {
        ProductModule {
            field: self.field.clone(),
            left: self.left.iter().zip(&other.left).map(|(a, b)| a.direct_sum(b)).collect(),
            right: self.right.iter().zip(&other.right).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }
}

/// The two objects `x`, `y` with `C(x, y)` non-empty and the hom action.
fn frame(c: &FiniteCategory) -> Result<(usize, usize, HomAction), OracleError> {
    if c.object_count() != 2 {
        return Err(OracleError::RegimeMismatch(format!("expected two objects, found {}", c.object_count())));
    }
    let (x, y) = match (c.hom(0, 1).is_empty(), c.hom(1, 0).is_empty()) {
        (false, true) => (0, 1),
        (true, false) => (1, 0),
        _ => return Err(OracleError::RegimeMismatch("expected morphisms in exactly one direction".into())),
    };
    Ok((x, y, c.hom_action(x, y)))
}

fn arrows_of(c: &FiniteCategory) -> Vec<RepArrow> {
    (0..c.morphism_count())
        .map(|m| RepArrow { label: c.morphism_id(m).to_string(), src: c.dom(m), tgt: c.cod(m) })
        .collect()
}

/// Representation on every morphism: `V(h f0 g) = N(h) A M(g)` on the orbit
/// of `f0 = hom[first]`, zero on the other orbits.
fn assemble(
    c: &FiniteCategory,
    act: &HomAction,
    vx: &[Matrix],
    vy: &[Matrix],
    orbit_maps: &[(usize, Matrix)],
) -> Result<Representation, OracleError> {
    let props = act.properties();
    if !props.is_free {
        return Err(OracleError::ActionNotFree);
    }
    let field = vx[0].field().clone();
    let (dx, dy) = (vx[0].rows(), vy[0].rows());
    let mut dims = vec![0; 2];
    dims[act.x] = dx;
    dims[act.y] = dy;
    let mut maps: Vec<Option<Matrix>> = vec![None; c.morphism_count()];
    for (i, &m) in act.aut_x.iter().enumerate() {
        maps[m] = Some(vx[i].clone());
    }
    for (i, &m) in act.aut_y.iter().enumerate() {
        maps[m] = Some(vy[i].clone());
    }
    for orbit in &props.orbits {
        let f0 = orbit[0];
        let a = orbit_maps
            .iter()
            .find(|(o, _)| *o == f0)
            .map(|(_, a)| a.clone())
            .unwrap_or_else(|| Matrix::zeros(&field, dy, dx));
        for h in 0..act.aut_y.len() {
            for g in 0..act.aut_x.len() {
                let i = act.act(h, f0, g);
                maps[act.hom[i]] = Some(vy[h].mul(&a).mul(&vx[g]));
            }
        }
    }
    Ok(Representation {
        field,
        vertices: c.objects().to_vec(),
        dims,
        arrows: arrows_of(c),
        maps: maps.into_iter().map(|m| m.expect("every morphism is covered")).collect(),
    })
}

/// `F(M)(x) = F(M)(y) = M`; every orbit representative acts as the identity
/// and `F(M)(h f0 g) = M(h, g)`.
pub fn induce_from_product(c: &FiniteCategory, m: &ProductModule) -> Result<Representation, OracleError> {
    let (_, _, act) = frame(c)?;
    if m.left.len() != act.aut_y.len() || m.right.len() != act.aut_x.len() {
        return Err(OracleError::Malformed("module does not match the automorphism groups".into()));
    }
    let id = Matrix::identity(&m.field, m.dim());
    let reps: Vec<(usize, Matrix)> = act.properties().orbits.iter().map(|o| (o[0], id.clone())).collect();
    assemble(c, &act, &m.right, &m.left, &reps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyRegime {
    /// Both group algebras semisimple, both groups nonabelian.
    SemisimpleNonabelian,
    /// Both group algebras semisimple, at least one group abelian.
    SemisimpleAbelian,
    /// Some group order divisible by the characteristic, cyclic Sylow subgroups.
    Modular,
}

impl FamilyRegime {
    pub fn detect(c: &FiniteCategory, field: &Field) -> Result<FamilyRegime, OracleError> {
        let (x, y, _) = frame(c)?;
        let p = field.p() as usize;
        let groups = [c.automorphism_group(x), c.automorphism_group(y)];
        if groups.iter().any(|g| g.order() % p == 0) {
            if groups.iter().all(|g| sylow_p_cyclic(g, p as u32)) {
                return Ok(FamilyRegime::Modular);
            }
            return Err(OracleError::RegimeMismatch("a Sylow subgroup is not cyclic".into()));
        }
        if groups.iter().all(|g| !g.is_abelian()) {
            Ok(FamilyRegime::SemisimpleNonabelian)
        } else {
            Ok(FamilyRegime::SemisimpleAbelian)
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyWitness {
    pub lambda: Elem,
    pub regime: FamilyRegime,
    pub representation: Representation,
    /// The map `V(x) -> V(y)` on the chosen orbit representative.
    pub a_lambda: Matrix,
    pub m: GroupModule,
    pub n: GroupModule,
    /// Unipotent Jordan block of a Sylow generator on the modular side.
    pub s_block: Option<Matrix>,
}

/// `A_lambda`: `1, 0 / lambda, 1` in the leading block, zero elsewhere.
pub fn a_lambda(field: &Field, rows: usize, cols: usize, lambda: Elem) -> Matrix {
    let mut a = Matrix::zeros(field, rows, cols);
    a.set(0, 0, Elem::ONE);
    a.set(1, 0, lambda);
    a.set(1, 1, Elem::ONE);
    a
}

/// Sum of two non-isomorphic one-dimensional modules.
fn two_characters(mods: &[GroupModule]) -> Option<GroupModule> {
    let lines: Vec<&GroupModule> = mods.iter().filter(|m| m.dim() == 1 && m.is_simple()).collect();
    (lines.len() >= 2).then(|| lines[0].direct_sum(lines[1]))
}

fn simple_split(g: &Group, mods: &[GroupModule]) -> Option<GroupModule> {
    mods.iter().find(|m| m.dim() >= 2 && m.is_simple() && m.end_dim(g) == 1).cloned()
}

fn generator_of_sylow(g: &Group, p: usize) -> Option<usize> {
    let mut sylow = 1;
    while g.order() % (sylow * p) == 0 {
        sylow *= p;
    }
    (0..g.order()).find(|&a| g.element_order(a) == sylow)
}

/// A module whose Sylow generator has a `p`-dimensional unipotent Jordan
/// block as a direct summand, rebased so that the block comes first.
fn modular_module(g: &Group, field: &Field, mods: &[GroupModule]) -> Option<(GroupModule, Matrix)> {
    let p = field.p() as usize;
    let d = generator_of_sylow(g, p)?;
    for m in mods {
        let n = m.dim();
        if n < p.max(2) {
            continue;
        }
        let u = m.mats[d].sub(&Matrix::identity(field, n));
        let top = u.pow(p as u64 - 1);
        let cand: Vec<Vec<Elem>> = (0..n)
            .map(|i| {
                let mut e = vec![Elem::ZERO; n];
                e[i] = Elem::ONE;
                e
            })
            .collect();
        for v in cand {
            if top.mul_vec(&v).iter().all(|e| e.is_zero()) {
                continue;
            }
            let mut chain = vec![v.clone()];
            for _ in 1..p {
                let next = u.mul_vec(chain.last().unwrap());
                chain.push(next);
            }
            chain.reverse();
            if let Some(basis) = complement_basis(field, &m.mats[d], &chain) {
                let rebased = m.rebase(&basis);
                let s = Matrix::from_vec(
                    field,
                    p,
                    p,
                    (0..p).flat_map(|r| (0..p).map(move |c| (r, c))).map(|(r, c)| rebased.mats[d].get(r, c)).collect(),
                );
                return Some((rebased, s));
            }
        }
    }
    None
}

/// Basis `chain ++ complement` where the complement is invariant under `d`.
fn complement_basis(field: &Field, d: &Matrix, chain: &[Vec<Elem>]) -> Option<Matrix> {
    let n = d.rows();
    let k = chain.len();
    let big = Representation {
        field: field.clone(),
        vertices: vec!["*".into()],
        dims: vec![n],
        arrows: vec![RepArrow { label: "d".into(), src: 0, tgt: 0 }],
        maps: vec![d.clone()],
    };
    let incl = Matrix::from_vec(field, n, k, (0..n).flat_map(|r| chain.iter().map(move |c| c[r])).collect());
    let dk = Matrix::from_vec(
        field,
        k,
        k,
        (0..k)
            .flat_map(|r| (0..k).map(move |c| (r, c)))
            .map(|(r, c)| if r == c || c == r + 1 { Elem::ONE } else { Elem::ZERO })
            .collect(),
    );
    if d.mul(&incl) != incl.mul(&dk) {
        return None;
    }
    let small = Representation { dims: vec![k], maps: vec![dk], ..big.clone() };
    let homs = hom_basis(&big, &small);
    // find pi with pi * incl = I
    let rows: Vec<Vec<Elem>> = (0..k * k)
        .map(|e| homs.iter().map(|h| h[0].mul(&incl).data()[e]).collect())
        .collect();
    let target: Vec<Elem> = Matrix::identity(field, k).data().to_vec();
    let coeffs = if homs.is_empty() { None } else { Matrix::from_rows(field, &rows).solve(&target).ok()? }?;
    let mut pi = Matrix::zeros(field, k, n);
    for (c, h) in coeffs.iter().zip(&homs) {
        pi = pi.add(&h[0].scale(*c));
    }
    let mut cols: Vec<Vec<Elem>> = chain.to_vec();
    cols.extend(pi.nullspace_basis());
    if cols.len() != n {
        return None;
    }
    let b = Matrix::from_vec(field, n, n, (0..n).flat_map(|r| cols.iter().map(move |c| c[r])).collect());
    b.is_invertible().then_some(b)
}

fn side_module(
    g: &Group,
    field: &Field,
    regime: FamilyRegime,
) -> Result<(GroupModule, Option<Matrix>), OracleError> {
    let mods = group_modules(g, field)?;
    let p = field.p() as usize;
    if regime == FamilyRegime::Modular && g.order() % p == 0 {
        return modular_module(g, field, &mods)
            .map(|(m, s)| (m, Some(s)))
            .ok_or_else(|| OracleError::ModuleNotFound("no module with a full Jordan block".into()));
    }
    if g.is_abelian() {
        two_characters(&mods)
            .map(|m| (m, None))
            .ok_or_else(|| OracleError::ModuleNotFound("fewer than two one-dimensional modules".into()))
    } else {
        simple_split(g, &mods)
            .map(|m| (m, None))
            .ok_or_else(|| OracleError::ModuleNotFound("no absolutely simple module of dimension at least 2".into()))
    }
}

/// `V_lambda` with `V(x) = M`, `V(y) = N` and `A_lambda` on one free orbit.
pub fn build_family(
    c: &FiniteCategory,
    field: &Field,
    lambda: Elem,
    regime: FamilyRegime,
) -> Result<FamilyWitness, OracleError> {
    let detected = FamilyRegime::detect(c, field)?;
    if detected != regime {
        return Err(OracleError::RegimeMismatch(format!("category is in regime {detected:?}, not {regime:?}")));
    }
    let (x, y, act) = frame(c)?;
    if !act.properties().is_free {
        return Err(OracleError::ActionNotFree);
    }
    let (m, s_x) = side_module(&c.automorphism_group(x), field, regime)?;
    let (n, s_y) = side_module(&c.automorphism_group(y), field, regime)?;
    let a = a_lambda(field, n.dim(), m.dim(), lambda);
    let rep = assemble(c, &act, &m.mats, &n.mats, &[(act.properties().orbits[0][0], a.clone())])?;
    Ok(FamilyWitness { lambda, regime, representation: rep, a_lambda: a, m, n, s_block: s_x.or(s_y) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle::{is_functor, is_indecomposable};

    #[test]
    fn modules_of_small_groups() {
        let f5 = Field::prime(5).unwrap();
        let s3 = Group::symmetric(3, "1");
        let mods = group_modules(&s3, &f5).unwrap();
        let dims: Vec<usize> = mods.iter().map(|m| m.dim()).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        assert!(mods.iter().all(|m| m.is_module(&s3)));
        let f2 = Field::prime(2).unwrap();
        let z2 = Group::cyclic(2, "g", "1");
        let mods = group_modules(&z2, &f2).unwrap();
        assert_eq!(mods.iter().map(|m| m.dim()).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn regular_induction_is_functorial() {
        let c = corpus::two_by_two(5).build().unwrap();
        let f = Field::prime(2).unwrap();
        let reg = ProductModule::regular(&c, &f).unwrap();
        let v = induce_from_product(&c, &reg).unwrap();
        assert_eq!(v.dims, vec![4, 4]);
        assert!(is_functor(&c, &v));
        let t = induce_from_product(&c, &ProductModule::trivial(&c, &f).unwrap()).unwrap();
        assert!(t.maps.iter().all(|m| m.is_identity()));
        let s = induce_from_product(&c, &reg.direct_sum(&ProductModule::trivial(&c, &f).unwrap())).unwrap();
        assert_eq!(s, v.direct_sum(&t));
    }

    fn z2_s3() -> FiniteCategory {
        corpus::free_product(&Group::cyclic(2, "g", "1"), &Group::symmetric(3, "1")).build().unwrap()
    }

    #[test]
    fn abelian_regime_family() {
        let c = z2_s3();
        let f = Field::prime(5).unwrap();
        assert_eq!(FamilyRegime::detect(&c, &f).unwrap(), FamilyRegime::SemisimpleAbelian);
        let w1 = build_family(&c, &f, Elem(1), FamilyRegime::SemisimpleAbelian).unwrap();
        let w2 = build_family(&c, &f, Elem(2), FamilyRegime::SemisimpleAbelian).unwrap();
        assert_eq!(w1.m.dim(), 2);
        assert_eq!(w1.n.dim(), 2);
        assert!(is_functor(&c, &w1.representation));
        assert!(is_indecomposable(&w1.representation).unwrap());
        assert!(!are_isomorphic(&w1.representation, &w2.representation, 1 << 20).unwrap());
        assert!(build_family(&c, &f, Elem(1), FamilyRegime::Modular).is_err());
    }

    #[test]
    fn modular_regime_family() {
        let c = z2_s3();
        let f = Field::prime(2).unwrap();
        assert_eq!(FamilyRegime::detect(&c, &f).unwrap(), FamilyRegime::Modular);
        let w = build_family(&c, &f, Elem(1), FamilyRegime::Modular).unwrap();
        let s = w.s_block.clone().unwrap();
        assert_eq!(s, Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]));
        assert!(is_functor(&c, &w.representation));
        assert!(is_indecomposable(&w.representation).unwrap());
    }

    #[test]
    fn a_lambda_shape() {
        let f = Field::prime(5).unwrap();
        let a = a_lambda(&f, 3, 2, Elem(0));
        assert_eq!(a.rank(), 2);
        let a = a_lambda(&f, 2, 2, Elem(3));
        assert_eq!(a, Matrix::from_ints(&f, &[&[1, 0], &[3, 1]]));
    }
}
