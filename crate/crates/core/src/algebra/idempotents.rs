//! Primitive orthogonal idempotents: split the semisimple quotient on
//! minimal polynomials, then lift through the radical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::radical::radical;
use super::{AlgebraError, StructureAlgebra};
use crate::linfield::{lcm, DependencyFinder, Elem, Field, Poly, Subspace};

/// Random candidates tried per corner before exhaustive search.
const RANDOM_TRIES: usize = 64;
/// Largest corner size `q^d` searched exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

/// Complete family of orthogonal idempotents. `degrees[i]` is the dimension
/// of `e_i (A/rad) e_i` over the field: 1 for split primitives, `d > 1` when
/// that corner is the field of `q^d` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentDecomposition {
    pub field: Field,
    pub idempotents: Vec<Vec<Elem>>,
    pub labels: Vec<String>,
    pub degrees: Vec<usize>,
    /// Simple-class index of each idempotent.
    pub classes: Vec<usize>,
    pub class_count: usize,
    pub radical: Subspace,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentReport {
    pub field: crate::linfield::FieldSpec,
    pub labels: Vec<String>,
    pub idempotents: Vec<Vec<u32>>,
    pub classes: Vec<usize>,
    pub seed: u64,
}

impl IdempotentDecomposition {
    pub fn is_split(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// One idempotent per simple class, lowest index first.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.class_count).map(|c| self.classes.iter().position(|&k| k == c).unwrap()).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.class_count];
        for &c in &self.classes {
            out[c] += 1;
        }
        out
    }

    pub fn report(&self) -> IdempotentReport {
        IdempotentReport {
            field: self.field.spec(),
            labels: self.labels.clone(),
            idempotents: self.idempotents.iter().map(|v| v.iter().map(|e| e.0).collect()).collect(),
            classes: self.classes.clone(),
            seed: self.seed,
        }
    }
}

fn seed() -> u64 {
    std::env::var("EIREP_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

/// Minimal polynomial of `x` in `alg`, monic, low-to-high coefficients.
pub fn element_min_poly(alg: &StructureAlgebra, x: &[Elem]) -> Poly {
    let mut finder = DependencyFinder::new(alg.field(), alg.dim());
    let mut power = alg.unit().to_vec();
    loop {
        if let Some(c) = finder.push(power.clone()) {
            return Poly::new(alg.field(), c);
        }
        power = alg.mul(&power, x);
    }
}

/// Orthogonal idempotents `u_i(x)` from a coprime factorization of the
/// minimal polynomial of `x` (one per distinct irreducible factor).
fn crt_idempotents(alg: &StructureAlgebra, x: &[Elem], m: &Poly, seed: u64) -> Result<Vec<Vec<Elem>>, AlgebraError> {
    let factors = m.factor_seeded(seed)?;
    if factors.len() < 2 {
        return Ok(Vec::new());
    }
    let f = alg.field();
    let mut out = Vec::new();
    for (fi, mult) in &factors {
        let mut pi = Poly::one(f);
        for _ in 0..*mult {
            pi = pi.mul(fi);
        }
        let gi = m.quo(&pi);
        // gi * s = 1 mod pi
        let (g, s, _) = gi.ext_gcd(&pi);
        let s = s.scale(f.inv_nz(g.lead()));
        let ui = gi.mul(&s).rem(m);
        out.push(alg.eval_poly(ui.coeffs(), x));
    }
    Ok(out)
}

enum Corner {
    Split(Vec<Vec<Elem>>),
    Field(usize),
}

/// Splits the corner `e Q e` of a semisimple algebra if possible.
fn split_corner(q: &StructureAlgebra, e: &[Elem], rng: &mut ChaCha8Rng, seed: u64) -> Result<Corner, AlgebraError> {
    let basis = (0..q.dim()).map(|i| q.basis_vec(i)).collect::<Vec<_>>();
    let space = q.sandwich(e, &basis, e);
    let d = space.dim();
    if d <= 1 {
        return Ok(Corner::Field(d.max(1)));
    }
    let corner = q.restrict(&space, e, None);
    let commutative = corner.is_commutative();
    let fq = q.field().clone();
    let lift = |c: &[Elem]| -> Vec<Elem> {
        let mut v = q.zero();
        for (ci, row) in c.iter().zip(space.basis()) {
            if !ci.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = fq.add(*x, fq.mul(*ci, r));
                }
            }
        }
        v
    };
    let try_elem = |x: Vec<Elem>| -> Result<Option<Corner>, AlgebraError> {
        let m = element_min_poly(&corner, &x);
        let parts = crt_idempotents(&corner, &x, &m, seed)?;
        if !parts.is_empty() {
            return Ok(Some(Corner::Split(parts.iter().map(|p| lift(p)).collect())));
        }
        if commutative && m.degree() == Some(d) {
            return Ok(Some(Corner::Field(d)));
        }
        Ok(None)
    };
    for i in 0..d {
        if let Some(c) = try_elem(corner.basis_vec(i))? {
            return Ok(c);
        }
    }
    let order = fq.order();
    for _ in 0..RANDOM_TRIES {
        let x: Vec<Elem> = (0..d).map(|_| Elem(rng.gen_range(0..order))).collect();
        if let Some(c) = try_elem(x)? {
            return Ok(c);
        }
    }
    let total = (0..d).try_fold(1u64, |acc, _| acc.checked_mul(order as u64).filter(|&t| t <= EXHAUSTIVE_LIMIT));
    if total.is_some() {
        let mut x = vec![Elem::ZERO; d];
        loop {
            let mut i = 0;
            while i < d {
                x[i] = Elem(x[i].0 + 1);
                if x[i].0 < order {
                    break;
                }
                x[i] = Elem::ZERO;
                i += 1;
            }
            if i == d {
                break;
            }
            if let Some(c) = try_elem(x.clone())? {
                return Ok(c);
            }
        }
    }
    Err(AlgebraError::SplitFailed(d))
}

/// Splits `start` (orthogonal idempotents of a semisimple `q` summing to 1)
/// into primitives; returns each with its corner degree and the index of
/// the starting idempotent it came from.
fn split_semisimple(
    q: &StructureAlgebra,
    start: &[Vec<Elem>],
    seed: u64,
) -> Result<Vec<(Vec<Elem>, usize, usize)>, AlgebraError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (origin, e) in start.iter().enumerate() {
        let mut stack = vec![e.clone()];
        let mut done = Vec::new();
        while let Some(e) = stack.pop() {
            match split_corner(q, &e, &mut rng, seed)? {
                Corner::Field(d) => done.push((e, d, origin)),
                Corner::Split(parts) => {
                    for p in parts.into_iter().rev() {
                        stack.push(p);
                    }
                }
            }
        }
        out.extend(done);
    }
    Ok(out)
}

/// Lifts `x` with `x^2 - x` nilpotent to an idempotent by `x <- 3x^2 - 2x^3`.
pub fn lift_idempotent(a: &StructureAlgebra, x: &[Elem]) -> Result<Vec<Elem>, AlgebraError> {
    let f = a.field();
    let (three, two) = (f.from_int(3), f.from_int(2));
    let mut x = x.to_vec();
    for _ in 0..64 {
        let x2 = a.mul(&x, &x);
        if x2 == x {
            return Ok(x);
        }
        let x3 = a.mul(&x2, &x);
        x = a.sub(&a.scale(three, &x2), &a.scale(two, &x3));
    }
    Err(AlgebraError::LiftFailed)
}

/// Wedderburn-type decomposition; corners that are proper field extensions
/// are reported through `degrees` rather than as an error.
pub fn decompose(a: &StructureAlgebra) -> Result<IdempotentDecomposition, AlgebraError> {
    let seed = seed();
    let rad = radical(a)?;
    let (q, keep) = a.quotient(&rad);
    let start_a: Vec<(String, Vec<Elem>)> = if a.object_idempotents().is_empty() {
        vec![("1".to_string(), a.unit().to_vec())]
    } else {
        a.object_idempotents().to_vec()
    };
    let project = |v: &[Elem]| -> Vec<Elem> {
        let r = rad.reduce(v);
        keep.iter().map(|&i| r[i]).collect()
    };
    let start_q: Vec<Vec<Elem>> = start_a.iter().map(|(_, v)| project(v)).collect();
    let prims = split_semisimple(&q, &start_q, seed)?;
    let unproject = |v: &[Elem]| -> Vec<Elem> {
        let mut out = a.zero();
        for (&i, &c) in keep.iter().zip(v) {
            out[i] = c;
        }
        out
    };
    let mut idempotents = Vec::new();
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    let mut qbar = Vec::new();
    for (origin, (name, ex)) in start_a.iter().enumerate() {
        let group: Vec<&(Vec<Elem>, usize, usize)> = prims.iter().filter(|p| p.2 == origin).collect();
        let mut rest = ex.clone();
        for (j, (ebar, d, _)) in group.iter().enumerate() {
            let e = if j + 1 == group.len() {
                rest.clone()
            } else {
                let pre = unproject(ebar);
                let x = a.mul(&a.mul(&rest, &pre), &rest);
                lift_idempotent(a, &x)?
            };
            rest = a.sub(&rest, &e);
            idempotents.push(e);
            labels.push(if group.len() == 1 { name.clone() } else { format!("{name}.{j}") });
            degrees.push(*d);
            qbar.push(ebar.clone());
        }
    }
    // e_i ~ e_j iff e_i Q e_j != 0
    let r = qbar.len();
    let mut classes = vec![usize::MAX; r];
    let mut count = 0;
    let qbasis: Vec<Vec<Elem>> = (0..q.dim()).map(|i| q.basis_vec(i)).collect();
    for i in 0..r {
        if classes[i] != usize::MAX {
            continue;
        }
        classes[i] = count;
        for j in i + 1..r {
            if classes[j] == usize::MAX && !q.sandwich(&qbar[i], &qbasis, &qbar[j]).is_zero() {
                classes[j] = count;
            }
        }
        count += 1;
    }
    Ok(IdempotentDecomposition {
        field: a.field().clone(),
        idempotents,
        labels,
        degrees,
        classes,
        class_count: count,
        radical: rad,
        seed,
    })
}

/// Complete set of primitive orthogonal idempotents over the given field;
/// fails with the splitting degree when the semisimple quotient does not
/// split.
pub fn primitive_idempotents(a: &StructureAlgebra) -> Result<IdempotentDecomposition, AlgebraError> {
    let d = decompose(a)?;
    let degree = d.degrees.iter().fold(1u64, |acc, &x| lcm(acc, x as u64));
    if degree > 1 {
        return Err(AlgebraError::NonSplit { degree: degree as u32 });
    }
    Ok(d)
}

/// Like [`primitive_idempotents`], extending scalars until the quotient
/// splits. Returns the (possibly extended) algebra with its decomposition.
pub fn primitive_idempotents_split(
    a: &StructureAlgebra,
) -> Result<(StructureAlgebra, IdempotentDecomposition), AlgebraError> {
    match primitive_idempotents(a) {
        Ok(d) => Ok((a.clone(), d)),
        Err(AlgebraError::NonSplit { degree }) => {
            let ext = a.extend_scalars(a.field().k() * degree)?;
            let d = primitive_idempotents(&ext)?;
            Ok((ext, d))
        }
        Err(e) => Err(e),
    }
}

/// True iff `A` is local: `A/rad` is a field (division algebras over finite
/// fields are commutative).
pub fn is_local(a: &StructureAlgebra) -> Result<bool, AlgebraError> {
    if a.dim() == 0 {
        return Ok(false);
    }
    let rad = radical(a)?;
    let (q, _) = a.quotient(&rad);
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    match split_corner(&q, q.unit(), &mut rng, seed())? {
        Corner::Field(_) => Ok(true),
        Corner::Split(_) => Ok(false),
    }
}

/// Order of the unit group: `q^{dim rad} * prod |GL_{n_i}(q^{d_i})|`.
pub fn unit_count(a: &StructureAlgebra) -> Result<u128, AlgebraError> {
    let d = decompose(a)?;
    let q = a.field().order() as u128;
    let overflow = || AlgebraError::Overflow;
    let mut total = q.checked_pow(d.radical.dim() as u32).ok_or_else(overflow)?;
    let sizes = d.class_sizes();
    for c in 0..d.class_count {
        let i = d.classes.iter().position(|&k| k == c).unwrap();
        let qd = q.checked_pow(d.degrees[i] as u32).ok_or_else(overflow)?;
        let n = sizes[c] as u32;
        let qn = qd.checked_pow(n).ok_or_else(overflow)?;
        for j in 0..n {
            let term = qn - qd.checked_pow(j).ok_or_else(overflow)?;
            total = total.checked_mul(term).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}
