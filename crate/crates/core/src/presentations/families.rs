//! The bound quivers arising from two-object categories with two simple
//! modules. A loop of nilpotency index 1 is omitted.

use super::{quiver, QuiverPresentation};

fn base(with_alpha: bool, with_gamma: bool) -> QuiverPresentation {
    let mut arrows = vec![("beta", "1", "2")];
    if with_alpha {
        arrows.insert(0, ("alpha", "1", "1"));
    }
    if with_gamma {
        arrows.push(("gamma", "2", "2"));
    }
    quiver(&["1", "2"], &arrows)
}

fn add(q: &mut QuiverPresentation, text: &str) {
    q.add_relation_text(text).expect("family relation is well formed");
}

/// Loop `alpha` at 1, `beta: 1 -> 2`, with `alpha^m = 0 = beta alpha^n`.
pub fn one_loop(m: usize, n: usize) -> QuiverPresentation {
    two_loop(m, n, 1, 1)
}

/// Adds a loop `gamma` at 2 with `gamma^t = 0 = gamma^s beta`.
pub fn two_loop(m: usize, n: usize, s: usize, t: usize) -> QuiverPresentation {
    let mut q = base(m > 1, t > 1);
    if m > 1 {
        add(&mut q, &format!("alpha^{m}"));
        if n < m {
            add(&mut q, &format!("beta alpha^{n}"));
        }
    }
    if t > 1 {
        add(&mut q, &format!("gamma^{t}"));
        if s < t {
            add(&mut q, &format!("gamma^{s} beta"));
        }
    }
    q
}

/// [`two_loop`] with the extra relation `gamma^e beta = beta alpha^f`.
pub fn two_loop_commuting(m: usize, n: usize, s: usize, t: usize, e: usize, f: usize) -> QuiverPresentation {
    let mut q = two_loop(m, n, s, t);
    if m > 1 && t > 1 {
        add(&mut q, &format!("gamma^{e} beta - beta alpha^{f}"));
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfield::Field;
    use crate::presentations::presented_algebra_auto;

    fn dim(q: &QuiverPresentation) -> usize {
        presented_algebra_auto(q, &Field::prime(2).unwrap(), 16).unwrap().dim()
    }

    #[test]
    fn dimensions() {
        // e1, e2, alpha, beta
        assert_eq!(dim(&one_loop(2, 1)), 4);
        // plus beta alpha
        assert_eq!(dim(&one_loop(2, 2)), 5);
        assert_eq!(dim(&one_loop(4, 1)), 6);
        assert_eq!(dim(&one_loop(1, 1)), 3);
        // e1 e2 a b g, b a, g b, g b a
        assert_eq!(dim(&two_loop(2, 2, 2, 2)), 8);
        assert_eq!(dim(&two_loop(2, 1, 1, 2)), 5);
        assert_eq!(dim(&two_loop_commuting(2, 2, 2, 2, 1, 1)), 6);
    }
}
