//! Property tests for presentations, the representation oracle and the
//! classifier.

mod common;

use common::{bundled, field, thicken};
use eirep_core::corpus;
use eirep_core::oracle::{
    are_isomorphic, build_family, count_indecomposables, enumerate_reps, induce_from_product, is_functor,
    is_indecomposable, split, CountOptions, FamilyRegime, ProductModule,
};
use eirep_core::presentations::{
    band_automaton_certificate, classify_graph, null_root, presented_algebra, presented_algebra_auto, two_loop,
    verify_presentation, GraphTag, Letter, QuiverPresentation, UndirectedGraph, VerifyOptions,
};
use eirep_core::reptype::{classify, ClassifyOptions, OracleMode};
use eirep_core::fincat::TwoObjectSpec;
use eirep_core::{Elem, Field, FiniteCategory, Group, Matrix, RepSystem, Representation};
use nalgebra::DMatrix;
use proptest::prelude::*;

const BUDGET: u128 = 1 << 20;

fn loop_params() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, t)| (Just(m), 1..=m, 1..=t, Just(t)))
}

fn unitriangular(f: &Field, n: usize, seeds: &[u32], upper: bool) -> Matrix {
    let mut m = Matrix::identity(f, n);
    let mut k = 0;
    for r in 0..n {
        for c in 0..n {
            if (upper && c > r) || (!upper && c < r) {
                let s = seeds[k % seeds.len()].wrapping_add(k as u32);
                m.set(r, c, f.elements().nth((s % f.order()) as usize).unwrap());
                k += 1;
            }
        }
    }
    m
}

/// Invertible matrix `L U` built from the seeds.
fn invertible(f: &Field, n: usize, seeds: &[u32]) -> Matrix {
    unitriangular(f, n, seeds, false).mul(&unitriangular(f, n, &seeds.iter().map(|s| s ^ 0x9e37).collect::<Vec<_>>(), true))
}

/// Small systems with a dimension vector and field, cheap to enumerate.
fn rep_case() -> impl Strategy<Value = (RepSystem, Vec<usize>, Field)> {
    let cases: Vec<(&'static str, Vec<usize>, u32)> = vec![
        ("kronecker", vec![1, 1], 2),
        ("kronecker", vec![2, 1], 2),
        ("kronecker", vec![1, 1], 3),
        ("a2", vec![2, 2], 2),
        ("case1", vec![1, 1], 2),
        ("case1", vec![2, 1], 2),
        ("case5", vec![1, 1], 3),
        ("c_prime", vec![2, 1], 2),
    ];
    (0..cases.len()).prop_map(move |i| {
        let (name, dims, p) = cases[i].clone();
        (RepSystem::from_category(&bundled(name)), dims, field(p))
    })
}

fn is_primitive(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n % d == 0).all(|d| (0..n).any(|i| w[i] != w[i % d]))
}

/// Independent string check on a few periods of the band.
fn band_is_string(q: &QuiverPresentation, w: &[Letter]) -> bool {
    let walk: Vec<Letter> = w.iter().cycle().take(3 * w.len()).copied().collect();
    let ends = |l: Letter| if l.inverse { (q.tgt(l.arrow), q.src(l.arrow)) } else { (q.src(l.arrow), q.tgt(l.arrow)) };
    for pair in walk.windows(2) {
        if ends(pair[0]).1 != ends(pair[1]).0 {
            return false;
        }
        if pair[0].arrow == pair[1].arrow && pair[0].inverse != pair[1].inverse {
            return false;
        }
    }
    let zero = q.zero_paths();
    for i in 0..walk.len() {
        for j in i + 1..=walk.len() {
            let run = &walk[i..j];
            if run.iter().all(|l| !l.inverse) || run.iter().all(|l| l.inverse) {
                let mut arrows: Vec<usize> = run.iter().map(|l| l.arrow).collect();
                if run[0].inverse {
                    arrows.reverse();
                }
                if zero.iter().any(|z| arrows.windows(z.arrows.len()).any(|s| s == z.arrows.as_slice())) {
                    return false;
                }
            }
        }
    }
    true
}

fn cartan(g: &UndirectedGraph, comp: &[usize]) -> DMatrix<f64> {
    let adj = g.adjacency();
    DMatrix::from_fn(comp.len(), comp.len(), |i, j| {
        let d = if i == j { 2.0 } else { 0.0 };
        d - adj[comp[i]][comp[j]] as f64
    })
}

fn z2_s3() -> TwoObjectSpec {
    corpus::free_product(&Group::cyclic(2, "g", "1"), &Group::symmetric(3, "1"))
}

fn family_category() -> impl Strategy<Value = (FiniteCategory, Field)> {
    prop_oneof![
        Just((corpus::two_by_two(5), 2u32, 1u32)),
        Just((corpus::two_by_two(5), 3, 1)),
        Just((corpus::free_transitive(2, 3), 7, 1)),
        Just((corpus::free_transitive(3, 2), 2, 2)),
        Just((z2_s3(), 5, 1)),
        Just((z2_s3(), 2, 1)),
    ]
    .prop_map(|(s, p, k)| (s.build().unwrap(), Field::new(p, k).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn presented_dimension_stable_past_nilpotency((m, n, s, t) in loop_params(), p in prop_oneof![Just(2u32), Just(3u32)]) {
        let q = two_loop(m, n, s, t);
        let f = field(p);
        let base = presented_algebra_auto(&q, &f, 16).unwrap();
        for extra in 1..=2 {
            prop_assert_eq!(presented_algebra(&q, &f, base.bound + extra).unwrap().dim(), base.dim());
        }
    }

    #[test]
    fn verified_presentations_have_the_right_dimension(a in loop_params(), b in loop_params()) {
        let f = field(2);
        let target = presented_algebra_auto(&two_loop(a.0, a.1, a.2, a.3), &f, 16).unwrap();
        let q = two_loop(b.0, b.1, b.2, b.3);
        let v = verify_presentation(&target.algebra, &q, VerifyOptions::default()).unwrap();
        if v.is_verified() {
            prop_assert_eq!(presented_algebra_auto(&q, &f, 16).unwrap().dim(), target.dim());
        }
        if a == b {
            prop_assert!(v.is_verified());
        }
    }

    #[test]
    fn band_witnesses_are_primitive_strings((m, n, s, t) in loop_params()) {
        let q = two_loop(m, n, s, t);
        let cert = band_automaton_certificate(&q);
        if let Some(w) = &cert.band {
            prop_assert!(is_primitive(w));
            prop_assert!(band_is_string(&q, w));
            prop_assert!(w.iter().any(|l| l.inverse) && w.iter().any(|l| !l.inverse));
        }
    }

    #[test]
    fn graph_classes_match_cartan_spectra(n in 1usize..=6, bits in proptest::collection::vec(0usize..4, 36)) {
        // sparse multigraph: multiplicity 1 with probability 1/4, occasionally 2
        let mut m = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in i..n {
                let b = bits[i * 6 + j];
                m[i][j] = match (i == j, b) {
                    (true, 3) if bits[(j * 6 + i) % 36] == 3 => 1,
                    (false, 3) => if bits[(j * 6 + i) % 36] == 3 { 2 } else { 1 },
                    _ => 0,
                };
            }
        }
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let g = UndirectedGraph::from_multiplicities(labels, &m);
        let class = classify_graph(&g);
        for (comp, cls) in g.components().iter().zip(&class.components) {
            let eig = cartan(&g, comp).symmetric_eigen().eigenvalues;
            let min = eig.iter().cloned().fold(f64::INFINITY, f64::min);
            match cls.tag {
                GraphTag::DynkinADE => prop_assert!(min > 1e-9, "{} {min}", cls.name),
                GraphTag::Euclidean => {
                    prop_assert!(min.abs() < 1e-9, "{} {min}", cls.name);
                    let root = null_root(&g, comp).unwrap();
                    let c = cartan(&g, comp);
                    let v = DMatrix::from_fn(comp.len(), 1, |i, _| root[i] as f64);
                    prop_assert!((c * v).norm() < 1e-9);
                    prop_assert!(root.iter().all(|&r| r > 0));
                }
                GraphTag::Other => prop_assert!(min < -1e-9, "{} {min}", cls.name),
            }
        }
    }

    #[test]
    fn krull_schmidt_splittings((sys, dims, f) in rep_case()) {
        for v in enumerate_reps(&sys, &f, &dims, BUDGET).unwrap() {
            let indec = is_indecomposable(&v).unwrap();
            match split(&v).unwrap() {
                Some((a, b)) => {
                    prop_assert!(!indec);
                    prop_assert!(!a.is_zero() && !b.is_zero());
                    for part in [&a, &b] {
                        part.check_shapes().unwrap();
                        prop_assert!(sys.holds(&f, &part.dims, &part.maps));
                    }
                    let sum: Vec<usize> = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
                    prop_assert_eq!(&sum, &dims);
                    prop_assert!(are_isomorphic(&v, &a.direct_sum(&b), BUDGET).unwrap());
                }
                None => prop_assert!(indec || v.is_zero()),
            }
        }
    }

    #[test]
    fn counts_ignore_basis_changes((sys, dims, f) in rep_case(), seeds in proptest::collection::vec(any::<u32>(), 1..12)) {
        let p: Vec<Matrix> = dims.iter().map(|&d| invertible(&f, d, &seeds)).collect();
        let mut classes: Vec<Representation> = Vec::new();
        for v in enumerate_reps(&sys, &f, &dims, BUDGET).unwrap() {
            let w = v.conjugate(&p);
            prop_assert!(sys.holds(&f, &w.dims, &w.maps));
            prop_assert_eq!(is_indecomposable(&w).unwrap(), is_indecomposable(&v).unwrap());
            if is_indecomposable(&w).unwrap() && !classes.iter().any(|c| are_isomorphic(c, &w, BUDGET).unwrap()) {
                classes.push(w);
            }
        }
        let opts = CountOptions { budget: BUDGET, ..CountOptions::default() };
        let count = count_indecomposables(&sys, &f, &dims, &opts).unwrap().indecomposable_classes;
        prop_assert_eq!(classes.len() as u128, count);
    }

    #[test]
    fn isomorphism_is_an_equivalence((sys, dims, f) in rep_case(), seeds in proptest::collection::vec(any::<u32>(), 1..12)) {
        let reps = enumerate_reps(&sys, &f, &dims, BUDGET).unwrap();
        let sample: Vec<&Representation> = reps.iter().step_by((reps.len() / 12).max(1)).collect();
        let p: Vec<Matrix> = dims.iter().map(|&d| invertible(&f, d, &seeds)).collect();
        for a in &sample {
            prop_assert!(are_isomorphic(a, a, BUDGET).unwrap());
            prop_assert!(are_isomorphic(a, &a.conjugate(&p), BUDGET).unwrap());
            for b in &sample {
                let ab = are_isomorphic(a, b, BUDGET).unwrap();
                prop_assert_eq!(ab, are_isomorphic(b, a, BUDGET).unwrap());
                if !ab {
                    continue;
                }
                for c in &sample {
                    if are_isomorphic(b, c, BUDGET).unwrap() {
                        prop_assert!(are_isomorphic(a, c, BUDGET).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn induced_modules_are_functors((c, f) in family_category()) {
        let regular = ProductModule::regular(&c, &f).unwrap();
        let trivial = ProductModule::trivial(&c, &f).unwrap();
        let sum = regular.direct_sum(&trivial);
        let (r, t, s) = (
            induce_from_product(&c, &regular).unwrap(),
            induce_from_product(&c, &trivial).unwrap(),
            induce_from_product(&c, &sum).unwrap(),
        );
        for v in [&r, &t, &s] {
            prop_assert!(is_functor(&c, v));
        }
        prop_assert!(are_isomorphic(&s, &r.direct_sum(&t), BUDGET).unwrap());
    }

    #[test]
    fn family_members_are_functors((c, f) in family_category(), lambda in any::<u32>()) {
        let regime = FamilyRegime::detect(&c, &f).unwrap();
        let l = f.elements().nth((lambda % f.order()) as usize).unwrap_or(Elem::ZERO);
        let w = build_family(&c, &f, l, regime).unwrap();
        prop_assert!(is_functor(&c, &w.representation));
        prop_assert_eq!(w.a_lambda.get(1, 0), l);
    }

    #[test]
    fn skeleton_does_not_change_the_verdict(i in 0usize..128, p in prop_oneof![Just(2u32), Just(3u32)]) {
        let all = corpus::two_object_corpus(&[1, 2, 4], 4);
        let c = all[i % all.len()].1.build().unwrap();
        let opts = ClassifyOptions { oracle: OracleMode::Off, ..ClassifyOptions::default() };
        let f = field(p);
        let thick = thicken(&c, 0);
        prop_assert_eq!(classify(&thick, &f, &opts).unwrap().verdict, classify(&c, &f, &opts).unwrap().verdict);
    }
}
