//! Underlying graphs of quivers and their Dynkin/Euclidean recognition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::ExtQuiver;

use super::QuiverPresentation;

/// Undirected multigraph; loops are edges `(i, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndirectedGraph {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    /// From arrow multiplicities `m[i][j]` (`i -> j`), forgetting orientation.
    pub fn from_multiplicities(labels: Vec<String>, m: &[Vec<usize>]) -> UndirectedGraph {
        let mut edges = Vec::new();
        for (i, row) in m.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                for _ in 0..k {
                    edges.push((i.min(j), i.max(j)));
                }
            }
        }
        edges.sort();
        UndirectedGraph { labels, edges }
    }

    pub fn of_quiver(q: &ExtQuiver) -> UndirectedGraph {
        UndirectedGraph::from_multiplicities(q.vertices.clone(), &q.arrows)
    }

    pub fn of_presentation(p: &QuiverPresentation) -> UndirectedGraph {
        UndirectedGraph::from_multiplicities(p.vertices.clone(), &p.arrow_matrix())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_of = vec![usize::MAX; n];
        for v in 0..n {
            let r = find(&mut parent, v);
            if root_of[r] == usize::MAX {
                root_of[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_of[r]].push(v);
        }
        comps
    }

    /// Symmetric adjacency counts; a loop adds 2 to the diagonal.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0; n]; n];
        for &(i, j) in &self.edges {
            a[i][j] += 1;
            a[j][i] += 1;
        }
        a
    }
}

/// Separated quiver of arrow multiplicities: vertices `v` and `v'`, one edge
/// `i -- j'` per arrow `i -> j`.
pub fn separated_quiver(labels: &[String], m: &[Vec<usize>]) -> UndirectedGraph {
    let n = labels.len();
    let mut all: Vec<String> = labels.to_vec();
    all.extend(labels.iter().map(|l| format!("{l}'")));
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for _ in 0..m[i][j] {
                edges.push((i, n + j));
            }
        }
    }
    UndirectedGraph { labels: all, edges }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GraphTag {
    DynkinADE,
    Euclidean,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    A(usize),
    D(usize),
    E(usize),
    AffineA(usize),
    AffineD(usize),
    AffineE(usize),
    Other,
}

impl GraphKind {
    pub fn tag(self) -> GraphTag {
        match self {
            GraphKind::A(_) | GraphKind::D(_) | GraphKind::E(_) => GraphTag::DynkinADE,
            GraphKind::AffineA(_) | GraphKind::AffineD(_) | GraphKind::AffineE(_) => GraphTag::Euclidean,
            GraphKind::Other => GraphTag::Other,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::A(n) => write!(f, "A{n}"),
            GraphKind::D(n) => write!(f, "D{n}"),
            GraphKind::E(n) => write!(f, "E{n}"),
            GraphKind::AffineA(n) => write!(f, "~A{n}"),
            GraphKind::AffineD(n) => write!(f, "~D{n}"),
            GraphKind::AffineE(n) => write!(f, "~E{n}"),
            GraphKind::Other => write!(f, "other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentClass {
    pub vertices: Vec<String>,
    pub kind: GraphKind,
    pub tag: GraphTag,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    /// Worst tag over the components (`Other` > `Euclidean` > Dynkin).
    pub tag: GraphTag,
    pub components: Vec<ComponentClass>,
}

impl GraphClass {
    pub fn is_dynkin(&self) -> bool {
        self.tag == GraphTag::DynkinADE
    }

    /// Component names joined by `" + "`, e.g. `"A1 + D4"`.
    pub fn summary(&self) -> String {
        self.components.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(" + ")
    }
}

pub fn classify_graph(g: &UndirectedGraph) -> GraphClass {
    let components: Vec<ComponentClass> = g
        .components()
        .into_iter()
        .map(|vs| {
            let kind = classify_component(g, &vs);
            ComponentClass {
                vertices: vs.iter().map(|&v| g.labels[v].clone()).collect(),
                kind,
                tag: kind.tag(),
                name: kind.to_string(),
            }
        })
        .collect();
    let tag = components.iter().map(|c| c.tag).max().unwrap_or(GraphTag::DynkinADE);
    GraphClass { tag, components }
}

fn classify_component(g: &UndirectedGraph, vs: &[usize]) -> GraphKind {
    let n = vs.len();
    let edges: Vec<(usize, usize)> = g.edges.iter().copied().filter(|(a, _)| vs.contains(a)).collect();
    let e = edges.len();
    if edges.iter().any(|(a, b)| a == b) {
        return if n == 1 && e == 1 { GraphKind::AffineA(0) } else { GraphKind::Other };
    }
    let mut simple = edges.clone();
    simple.dedup();
    if simple.len() != e {
        return if n == 2 && e == 2 { GraphKind::AffineA(1) } else { GraphKind::Other };
    }
    let adj = |v: usize| -> Vec<usize> {
        edges.iter().filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None }).collect()
    };
    let deg = |v: usize| adj(v).len();
    if e == n {
        return if n >= 3 && vs.iter().all(|&v| deg(v) == 2) { GraphKind::AffineA(n - 1) } else { GraphKind::Other };
    }
    if e + 1 != n {
        return GraphKind::Other;
    }
    let branch: Vec<usize> = vs.iter().copied().filter(|&v| deg(v) >= 3).collect();
    // number of vertices on the arm leaving `from` towards `next`
    let arm = |from: usize, next: usize| -> usize {
        let (mut prev, mut cur, mut len) = (from, next, 1);
        loop {
            let nb: Vec<usize> = adj(cur).into_iter().filter(|&w| w != prev).collect();
            if nb.len() != 1 {
                return len;
            }
            prev = cur;
            cur = nb[0];
            len += 1;
        }
    };
    match branch.as_slice() {
        [] => GraphKind::A(n),
        [c] if deg(*c) == 3 => {
            let mut legs: Vec<usize> = adj(*c).into_iter().map(|w| arm(*c, w)).collect();
            legs.sort();
            match (legs[0], legs[1], legs[2]) {
                (1, 1, k) => GraphKind::D(k + 3),
                (1, 2, 2) => GraphKind::E(6),
                (1, 2, 3) => GraphKind::E(7),
                (1, 2, 4) => GraphKind::E(8),
                (2, 2, 2) => GraphKind::AffineE(6),
                (1, 3, 3) => GraphKind::AffineE(7),
                (1, 2, 5) => GraphKind::AffineE(8),
                _ => GraphKind::Other,
            }
        }
        [c] if deg(*c) == 4 && n == 5 => GraphKind::AffineD(4),
        [b1, b2] if deg(*b1) == 3 && deg(*b2) == 3 => {
            let leaves_at = |b: usize| adj(b).into_iter().filter(|&w| deg(w) == 1).count();
            if leaves_at(*b1) == 2 && leaves_at(*b2) == 2 {
                GraphKind::AffineD(n - 1)
            } else {
                GraphKind::Other
            }
        }
        _ => GraphKind::Other,
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Positive generator of the kernel of the Cartan form `2I - A` on a
/// component, when that kernel is one-dimensional and spanned by a positive
/// vector (exactly the Euclidean case).
pub fn null_root(g: &UndirectedGraph, component: &[usize]) -> Option<Vec<u64>> {
    let adj = g.adjacency();
    let n = component.len();
    // rows of (numerator, common denominator) kept integral by cross-multiplying
    let mut m: Vec<Vec<i128>> = component
        .iter()
        .map(|&i| component.iter().map(|&j| if i == j { 2 } else { 0 } - adj[i][j] as i128).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, r);
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let (a, b) = (m[row][col], m[r][col]);
                for c in 0..n {
                    m[r][c] = m[r][c] * a - m[row][c] * b;
                }
                let d = m[r].iter().fold(0, |acc, &x| gcd(acc, x));
                if d > 1 {
                    m[r].iter_mut().for_each(|x| *x /= d);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if n - pivots.len() != 1 {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    // x_free = L, x_pivot = -m[r][free] * L / m[r][pivot]
    let lcm = pivots.iter().enumerate().fold(1i128, |acc, (r, &c)| acc / gcd(acc, m[r][c]) * m[r][c].abs());
    let mut x = vec![0i128; n];
    x[free] = lcm;
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = -m[r][free] * lcm / m[r][c];
    }
    let d = x.iter().fold(0, |acc, &v| gcd(acc, v));
    let sign = if x.iter().any(|&v| v < 0) { -1 } else { 1 };
    let x: Vec<i128> = x.iter().map(|&v| sign * v / d).collect();
    x.iter().all(|&v| v > 0).then(|| x.iter().map(|&v| v as u64).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UndirectedGraph {
        UndirectedGraph { labels: (0..n).map(|i| i.to_string()).collect(), edges: edges.to_vec() }
    }

    fn kind(n: usize, edges: &[(usize, usize)]) -> GraphKind {
        let c = classify_graph(&graph(n, edges));
        assert_eq!(c.components.len(), 1);
        c.components[0].kind
    }

    #[test]
    fn null_roots() {
        let star = UndirectedGraph { labels: (0..5).map(|i| i.to_string()).collect(), edges: vec![(0, 1), (0, 2), (0, 3), (0, 4)] };
        assert_eq!(null_root(&star, &[0, 1, 2, 3, 4]), Some(vec![2, 1, 1, 1, 1]));
        let cycle = UndirectedGraph { labels: (0..3).map(|i| i.to_string()).collect(), edges: vec![(0, 1), (1, 2), (2, 0)] };
        assert_eq!(null_root(&cycle, &[0, 1, 2]), Some(vec![1, 1, 1]));
        let a3 = UndirectedGraph { labels: (0..3).map(|i| i.to_string()).collect(), edges: vec![(0, 1), (1, 2)] };
        assert_eq!(null_root(&a3, &[0, 1, 2]), None);
    }

    #[test]
    fn templates() {
        assert_eq!(kind(1, &[]), GraphKind::A(1));
        assert_eq!(kind(3, &[(0, 1), (1, 2)]), GraphKind::A(3));
        assert_eq!(kind(4, &[(0, 1), (0, 2), (0, 3)]), GraphKind::D(4));
        assert_eq!(kind(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]), GraphKind::E(6));
        assert_eq!(kind(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]), GraphKind::AffineD(4));
        assert_eq!(kind(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]), GraphKind::AffineD(5));
        assert_eq!(kind(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]), GraphKind::AffineA(3));
        assert_eq!(kind(2, &[(0, 1), (0, 1)]), GraphKind::AffineA(1));
        assert_eq!(kind(1, &[(0, 0)]), GraphKind::AffineA(0));
        assert_eq!(kind(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]), GraphKind::AffineE(6));
        assert_eq!(kind(2, &[(0, 1), (0, 1), (0, 1)]), GraphKind::Other);
    }

    #[test]
    fn separated() {
        // loop at 0, arrow 0 -> 1: separated quiver 0 - 0', 0 - 1'
        let labels = vec!["x".to_string(), "y".to_string()];
        let s = separated_quiver(&labels, &[vec![1, 1], vec![0, 0]]);
        let c = classify_graph(&s);
        assert_eq!(c.summary(), "A3 + A1");
        assert!(c.is_dynkin());
    }
}
