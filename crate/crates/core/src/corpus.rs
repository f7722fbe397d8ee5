//! Named example categories.

use crate::fincat::{CategoryBuilder, CategoryJson, FiniteCategory, Group, TwoObjectSpec};

fn z(n: usize, gen: &str, id: &str) -> Group {
    Group::cyclic(n, gen, id)
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn identity_rows(order: usize, n: usize) -> Vec<Vec<usize>> {
    vec![(0..n).collect(); order]
}

/// The five two-object categories with `Aut(x) = <f>` and `Aut(y) = <g>`
/// both of order 2, numbered 1 to 5.
pub fn two_by_two(case: u8) -> TwoObjectSpec {
    let g = z(2, "f", "1x");
    let h = z(2, "g", "1y");
    let (hom, right, left) = match case {
        1 => (names("i", 1), identity_rows(2, 1), identity_rows(2, 1)),
        2 => (names("i", 2), identity_rows(2, 2), vec![vec![0, 1], vec![1, 0]]),
        3 => (names("i", 2), vec![vec![0, 1], vec![1, 0]], identity_rows(2, 2)),
        4 => (names("i", 2), vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1], vec![1, 0]]),
        5 => (
            names("i", 4),
            vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2]],
            vec![vec![0, 1, 2, 3], vec![2, 3, 0, 1]],
        ),
        _ => panic!("case must be 1..=5"),
    };
    TwoObjectSpec::from_actions(&g, &h, &hom, &right, &left)
}

/// `Aut(x) = Z2 = <g>` acting trivially, `Aut(y) = Z3 = <h>` permuting
/// `f1 -> f2 -> f3` cyclically.
pub fn z2_z3_three() -> TwoObjectSpec {
    let g = z(2, "g", "1x");
    let h = z(3, "h", "1y");
    let hom = names("f", 3);
    let left = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    TwoObjectSpec::from_actions(&g, &h, &hom, &identity_rows(2, 3), &left)
}

/// `Aut(x) = Z4 = <f>` permuting four morphisms `x -> y` cyclically.
pub fn cyclic_four() -> TwoObjectSpec {
    let g = z(4, "f", "1x");
    let h = Group::trivial("1y");
    let hom = names("i", 4);
    let right = (0..4).map(|a| (0..4).map(|i| (i + a) % 4).collect()).collect::<Vec<_>>();
    TwoObjectSpec::from_actions(&g, &h, &hom, &right, &identity_rows(1, 4))
}

/// `Aut(a) = Z4 = <g>`, one morphism `h: a -> b` with `h g = h`.
pub fn cyclic_four_single() -> TwoObjectSpec {
    let g = z(4, "g", "1a");
    let h = Group::trivial("1b");
    let mut s = TwoObjectSpec::from_actions(&g, &h, &["h".to_string()], &identity_rows(4, 1), &identity_rows(1, 1));
    s.x = "a".into();
    s.y = "b".into();
    s
}

/// Two objects with `Aut(x) = Z_m`, `Aut(y) = Z_n` and the free transitive
/// action on `m n` morphisms, labelled `k{i}_{j}` for `(f^i, g^j)`.
pub fn free_transitive(m: usize, n: usize) -> TwoObjectSpec {
    let g = z(m, "f", "1x");
    let h = z(n, "g", "1y");
    let hom: Vec<String> = (0..m * n).map(|t| format!("k{}_{}", t / n, t % n)).collect();
    let right = (0..m).map(|a| (0..m * n).map(|t| ((t / n + a) % m) * n + t % n).collect()).collect::<Vec<_>>();
    let left = (0..n).map(|b| (0..m * n).map(|t| (t / n) * n + (t % n + b) % n).collect()).collect::<Vec<_>>();
    TwoObjectSpec::from_actions(&g, &h, &hom, &right, &left)
}

/// `C(x, y) = G x H` with both groups acting by multiplication, so the
/// product action is free and transitive. Element labels are prefixed by
/// the object.
pub fn free_product(g: &Group, h: &Group) -> TwoObjectSpec {
    let relabel = |grp: &Group, o: &str| {
        let labels = (0..grp.order())
            .map(|a| if a == grp.identity() { format!("1{o}") } else { format!("{o}{}", grp.labels()[a]) })
            .collect();
        grp.with_labels(labels)
    };
    let (g, h) = (relabel(g, "x"), relabel(h, "y"));
    let (m, n) = (g.order(), h.order());
    let hom: Vec<String> = (0..m * n).map(|t| format!("k{}_{}", t / n, t % n)).collect();
    let right = (0..m).map(|a| (0..m * n).map(|t| g.mul(t / n, a) * n + t % n).collect()).collect::<Vec<_>>();
    let left = (0..n).map(|b| (0..m * n).map(|t| (t / n) * n + h.mul(b, t % n)).collect()).collect::<Vec<_>>();
    TwoObjectSpec::from_actions(&g, &h, &hom, &right, &left)
}

/// Single morphism `x -> y` with `Aut(x) = Z_m`, `Aut(y) = Z_n`.
pub fn single_morphism(m: usize, n: usize) -> TwoObjectSpec {
    let g = z(m, "f", "1x");
    let h = z(n, "g", "1y");
    TwoObjectSpec::from_actions(&g, &h, &["i".to_string()], &identity_rows(m, 1), &identity_rows(n, 1))
}

/// Subgroups of `Z_n x Z_m` as sorted element lists, pairs encoded `b * m + a`.
fn subgroups(n: usize, m: usize) -> Vec<Vec<usize>> {
    let add = |u: usize, v: usize| ((u / m + v / m) % n) * m + (u % m + v % m) % m;
    let closure = |gens: &[usize]| {
        let mut set = vec![0usize];
        let mut i = 0;
        while i < set.len() {
            for &g in gens {
                let s = add(set[i], g);
                if !set.contains(&s) {
                    set.push(s);
                }
            }
            i += 1;
        }
        set.sort();
        set
    };
    let mut out: Vec<Vec<usize>> = Vec::new();
    for u in 0..n * m {
        for v in u..n * m {
            let s = closure(&[u, v]);
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort_by_key(|s| std::cmp::Reverse(s.len()));
    out
}

/// Every two-object category with `Aut(x) = Z_m`, `Aut(y) = Z_n` for `m, n`
/// in `orders` and at most `max_hom` morphisms `x -> y`, one per isomorphism
/// class of biset: disjoint unions of coset spaces `(Z_n x Z_m) / S`.
pub fn two_object_corpus(orders: &[usize], max_hom: usize) -> Vec<(String, TwoObjectSpec)> {
    let mut out = Vec::new();
    for &m in orders {
        for &n in orders {
            let subs = subgroups(n, m);
            let index = |s: &Vec<usize>| n * m / s.len();
            // multisets of subgroup positions with total index <= max_hom
            let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
            while let Some((chosen, size)) = stack.pop() {
                if !chosen.is_empty() {
                    let name = format!(
                        "z{m}_z{n}_{}",
                        chosen.iter().map(|&i| format!("s{i}")).collect::<Vec<_>>().join("_")
                    );
                    out.push((name, biset(m, n, chosen.iter().map(|&i| &subs[i]))));
                }
                let from = chosen.last().copied().unwrap_or(0);
                for i in from..subs.len() {
                    if size + index(&subs[i]) <= max_hom {
                        let mut next = chosen.clone();
                        next.push(i);
                        stack.push((next, size + index(&subs[i])));
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn biset<'a>(m: usize, n: usize, parts: impl Iterator<Item = &'a Vec<usize>>) -> TwoObjectSpec {
    let g = z(m, "f", "1x");
    let h = z(n, "g", "1y");
    // hom elements: (part, coset representative)
    let mut points: Vec<(usize, Vec<usize>)> = Vec::new();
    for (k, s) in parts.enumerate() {
        for u in 0..n * m {
            let coset: Vec<usize> = {
                let mut c: Vec<usize> =
                    s.iter().map(|&v| ((u / m + v / m) % n) * m + (u % m + v % m) % m).collect();
                c.sort();
                c
            };
            if !points.iter().any(|(j, c)| *j == k && *c == coset) {
                points.push((k, coset));
            }
        }
    }
    let find = |k: usize, u: usize| points.iter().position(|(j, c)| *j == k && c.contains(&u)).unwrap();
    let shift = |(k, c): &(usize, Vec<usize>), db: usize, da: usize| {
        let u = c[0];
        find(*k, ((u / m + db) % n) * m + (u % m + da) % m)
    };
    let hom: Vec<String> = (0..points.len()).map(|i| format!("i{i}")).collect();
    let right = (0..m).map(|a| points.iter().map(|p| shift(p, 0, a)).collect()).collect::<Vec<Vec<usize>>>();
    let left = (0..n).map(|b| points.iter().map(|p| shift(p, b, 0)).collect()).collect::<Vec<Vec<usize>>>();
    TwoObjectSpec::from_actions(&g, &h, &hom, &right, &left)
}

/// Two parallel arrows between two objects with trivial automorphisms.
pub fn kronecker() -> FiniteCategory {
    let mut b = CategoryBuilder::new();
    b.object("x").object("y").identity("x", "1x").identity("y", "1y");
    b.morphism("1x", "x", "x").morphism("1y", "y", "y");
    b.morphism("a", "x", "y").morphism("b", "x", "y");
    b.build().expect("kronecker")
}

/// Free category on `a -> b -> d`, `a -> c -> d` (no commutativity).
pub fn square_free() -> FiniteCategory {
    let mut b = CategoryBuilder::new();
    for o in ["a", "b", "c", "d"] {
        b.object(o).identity(o, &format!("1{o}")).morphism(&format!("1{o}"), o, o);
    }
    b.morphism("alpha", "a", "b").morphism("beta", "a", "c");
    b.morphism("gamma", "b", "d").morphism("delta", "c", "d");
    b.morphism("gamma.alpha", "a", "d").morphism("delta.beta", "a", "d");
    b.compose("gamma", "alpha", "gamma.alpha").compose("delta", "beta", "delta.beta");
    b.build().expect("square")
}

/// Poset category of the diamond `a < b, c < d`.
pub fn diamond() -> FiniteCategory {
    FiniteCategory::from_poset(&["a", "b", "c", "d"], |x, y| x == y || x == 0 || y == 3).expect("diamond")
}

/// Path category of `A_n` with linear orientation.
pub fn chain(n: usize) -> FiniteCategory {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    FiniteCategory::from_poset(&refs, |x, y| x <= y).expect("chain")
}

/// Every bundled example as `(file stem, description)`.
pub fn bundle() -> Vec<(String, CategoryJson)> {
    let two = |s: TwoObjectSpec| CategoryJson::TwoObject { two_object: s };
    let full = |c: FiniteCategory| CategoryJson::Full(c.to_raw());
    let mut out: Vec<(String, CategoryJson)> = (1..=5).map(|i| (format!("case{i}"), two(two_by_two(i)))).collect();
    out.push(("z2_z3_three".into(), two(z2_z3_three())));
    out.push(("c".into(), two(cyclic_four())));
    out.push(("c_prime".into(), two(cyclic_four_single())));
    out.push(("kronecker".into(), full(kronecker())));
    out.push(("square".into(), full(square_free())));
    out.push(("diamond".into(), full(diamond())));
    out.push(("a2".into(), full(chain(2))));
    out.push(("free_z2_z2".into(), two(free_transitive(2, 2))));
    out.push(("single_z2_z3".into(), two(single_morphism(2, 3))));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundle_builds() {
        for (name, c) in bundle() {
            let cat = c.build().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(cat.is_ei(), "{name}");
        }
    }

    #[test]
    fn two_object_corpus_builds() {
        let all = two_object_corpus(&[1, 2, 4], 4);
        for (name, spec) in &all {
            let c = spec.build().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(c.is_ei(), "{name}");
        }
        // Z2 x Z2 has five subgroups; the free orbit alone has size 4
        assert_eq!(subgroups(2, 2).len(), 5);
        assert!(all.iter().any(|(n, _)| n == "z1_z1_s0"));
        let names: std::collections::BTreeSet<_> = all.iter().map(|a| &a.0).collect();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn sizes() {
        assert_eq!(cyclic_four_single().build().unwrap().morphism_count(), 6);
        assert_eq!(z2_z3_three().build().unwrap().morphism_count(), 8);
        assert_eq!(free_transitive(2, 3).build().unwrap().morphism_count(), 11);
    }
}
