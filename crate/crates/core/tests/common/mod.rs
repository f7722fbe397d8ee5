#![allow(dead_code)]

use eirep_core::fincat::CategoryBuilder;
use eirep_core::{corpus, Field, FiniteCategory};

pub fn field(p: u32) -> Field {
    Field::prime(p).unwrap()
}

pub fn bundled(name: &str) -> FiniteCategory {
    corpus::bundle()
        .into_iter()
        .find(|(n, _)| n == name)
        .unwrap_or_else(|| panic!("no bundled {name}"))
        .1
        .build()
        .unwrap()
}

/// `c` with an extra object isomorphic to `x`.
pub fn thicken(c: &FiniteCategory, x: usize) -> FiniteCategory {
    let copy = format!("{}'", c.object_id(x));
    let objects: Vec<(String, usize)> =
        (0..c.object_count()).map(|o| (c.object_id(o).to_string(), o)).chain([(copy, x)]).collect();
    let orig = c.object_count();
    let label = |a: usize, b: usize, f: usize| {
        if a < orig && b < orig {
            c.morphism_id(f).to_string()
        } else {
            format!("{}@{}>{}", c.morphism_id(f), objects[a].0, objects[b].0)
        }
    };
    let mut bld = CategoryBuilder::new();
    for (name, _) in &objects {
        bld.object(name);
    }
    for a in 0..objects.len() {
        for b in 0..objects.len() {
            for &f in c.hom(objects[a].1, objects[b].1) {
                bld.morphism(&label(a, b, f), &objects[a].0, &objects[b].0);
            }
        }
        bld.identity(&objects[a].0, &label(a, a, c.identity(objects[a].1)));
    }
    for a in 0..objects.len() {
        for b in 0..objects.len() {
            for d in 0..objects.len() {
                for &f in c.hom(objects[a].1, objects[b].1) {
                    for &g in c.hom(objects[b].1, objects[d].1) {
                        bld.compose(&label(b, d, g), &label(a, b, f), &label(a, d, c.compose(g, f)));
                    }
                }
            }
        }
    }
    bld.build().unwrap()
}
