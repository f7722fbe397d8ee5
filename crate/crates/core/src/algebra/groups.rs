//! Group-theoretic criteria for simple modules and representation type.

use crate::fincat::Group;
use crate::linfield::prime_factors;

fn p_regular(g: &Group, a: usize, p: u32) -> bool {
    p == 0 || g.element_order(a) % p as usize != 0
}

/// Number of conjugacy classes of `p`-regular elements (`p = 0`: all).
pub fn group_simple_count(g: &Group, p: u32) -> usize {
    g.conjugacy_classes().iter().filter(|c| p_regular(g, c[0], p)).count()
}

pub fn is_trivial_or_p_group(g: &Group, p: u32) -> bool {
    let n = g.order() as u64;
    n == 1 || (p > 1 && prime_factors(n) == vec![p as u64])
}

/// Largest power of `p` dividing `|G|`.
pub fn sylow_order(g: &Group, p: u32) -> usize {
    let mut n = g.order();
    let mut out = 1;
    while p > 1 && n % p as usize == 0 {
        n /= p as usize;
        out *= p as usize;
    }
    out
}

/// A Sylow `p`-subgroup is cyclic iff some element has order `|P|`.
pub fn sylow_p_cyclic(g: &Group, p: u32) -> bool {
    let s = sylow_order(g, p);
    (0..g.order()).any(|a| g.element_order(a) == s)
}

/// A cyclic `p`-subgroup or `p'`-group: the group-algebra criterion for
/// finite representation type of one-object categories.
pub fn group_rep_finite(g: &Group, p: u32) -> bool {
    sylow_p_cyclic(g, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(group_simple_count(&Group::cyclic(4, "g", "1"), 2), 1);
        assert_eq!(group_simple_count(&Group::symmetric(3, "1"), 3), 2);
        assert_eq!(group_simple_count(&Group::cyclic(2, "g", "1"), 3), 2);
        assert_eq!(group_simple_count(&Group::symmetric(3, "1"), 0), 3);
    }

    #[test]
    fn p_groups() {
        assert!(is_trivial_or_p_group(&Group::cyclic(4, "g", "1"), 2));
        assert!(!is_trivial_or_p_group(&Group::cyclic(6, "g", "1"), 2));
        assert!(is_trivial_or_p_group(&Group::trivial("1"), 5));
    }

    #[test]
    fn sylow() {
        let z2 = Group::cyclic(2, "g", "1");
        assert!(sylow_p_cyclic(&Group::cyclic(4, "g", "1"), 2));
        assert!(!sylow_p_cyclic(&Group::direct_product(&z2, &z2), 2));
        assert!(sylow_p_cyclic(&Group::symmetric(3, "1"), 3));
        assert!(sylow_p_cyclic(&Group::symmetric(3, "1"), 5));
    }
}
