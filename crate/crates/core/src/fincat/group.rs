//! Finite groups given by Cayley tables.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::CategoryError;

/// Cayley-table description used by the JSON builder form:
/// `table[i][j]` names the product `elements[i] * elements[j]`
/// (composition: `elements[i]` after `elements[j]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl Group {
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group, CategoryError> {
        let n = labels.len();
        let bad = |msg: String| CategoryError::NotAGroup(msg);
        if n == 0 {
            return Err(bad("empty group".into()));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity".into()))?;
        let mut inverses = vec![0; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad(format!("{} has no inverse", labels[a])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!(
                            "not associative on ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Group { labels, table, identity, inverses })
    }

    pub fn from_cayley(c: &CayleyTable) -> Result<Group, CategoryError> {
        let idx = |s: &str| {
            c.elements
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| CategoryError::NotAGroup(format!("unknown element {s}")))
        };
        let mut seen = BTreeSet::new();
        if !c.elements.iter().all(|e| seen.insert(e)) {
            return Err(CategoryError::NotAGroup("duplicate element".into()));
        }
        let table = c
            .table
            .iter()
            .map(|row| row.iter().map(|s| idx(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Group::from_table(c.elements.clone(), table)
    }

    pub fn to_cayley(&self) -> CayleyTable {
        CayleyTable {
            elements: self.labels.clone(),
            table: self
                .table
                .iter()
                .map(|r| r.iter().map(|&x| self.labels[x].clone()).collect())
                .collect(),
        }
    }

    /// Cyclic group of order `n` with labels `prefix^0 .. prefix^{n-1}`
    /// (the identity is labelled `identity`).
    pub fn cyclic(n: usize, generator: &str, identity: &str) -> Group {
        let labels = (0..n)
            .map(|i| match i {
                0 => identity.to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}^{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group::from_table(labels, table).expect("cyclic group")
    }

    pub fn trivial(identity: &str) -> Group {
        Group::cyclic(1, "_", identity)
    }

    /// Symmetric group on `n` points; elements labelled by their images.
    pub fn symmetric(n: usize, identity: &str) -> Group {
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        // generate all permutations in lexicographic order
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
            perms.push(cur.clone());
        }
        let labels = perms
            .iter()
            .enumerate()
            .map(|(k, p)| {
                if k == 0 {
                    identity.to_string()
                } else {
                    format!("s{}", p.iter().map(|x| x.to_string()).collect::<String>())
                }
            })
            .collect();
        let pos = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        // (a * b)(i) = a(b(i))
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| pos(&b.iter().map(|&i| a[i]).collect())).collect())
            .collect();
        Group::from_table(labels, table).expect("symmetric group")
    }

    pub fn direct_product(a: &Group, b: &Group) -> Group {
        let (na, nb) = (a.order(), b.order());
        let labels = (0..na * nb)
            .map(|i| format!("({},{})", a.labels[i / nb], b.labels[i % nb]))
            .collect();
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.table[x / nb][y / nb] * nb + b.table[x % nb][y % nb])
                    .collect()
            })
            .collect();
        Group::from_table(labels, table).expect("direct product")
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Group {
        assert_eq!(labels.len(), self.labels.len());
        Group { labels, ..self.clone() }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|a| self.element_order(a) == self.order())
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.table[self.table[g][a]][self.inverses[g]])
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            class.sort();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Subgroup generated by a set of elements.
    pub fn generated(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = [self.identity].into_iter().collect();
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1u64, |acc, a| crate::linfield::lcm(acc, self.element_order(a) as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_basics() {
        let s3 = Group::symmetric(3, "1");
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn cyclic_and_product() {
        let z2 = Group::cyclic(2, "g", "1");
        let v4 = Group::direct_product(&z2, &z2);
        assert!(v4.is_abelian());
        assert!(!v4.is_cyclic());
        assert!(Group::cyclic(4, "g", "1").is_cyclic());
        assert_eq!(Group::cyclic(6, "g", "1").exponent(), 6);
    }

    #[test]
    fn cayley_roundtrip() {
        let z3 = Group::cyclic(3, "h", "1y");
        let c = z3.to_cayley();
        assert_eq!(Group::from_cayley(&c).unwrap(), z3);
    }

    #[test]
    fn rejects_non_group() {
        let labels = vec!["1".to_string(), "e".to_string()];
        let table = vec![vec![0, 1], vec![1, 1]];
        assert!(Group::from_table(labels, table).is_err());
    }
}
