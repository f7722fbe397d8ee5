//! String algebras and bands.
//!
//! Walks are written in traversal order. A direct letter `a` moves from the
//! source of `a` to its target, an inverse letter `a^-1` the other way.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Path, QuiverPresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    fn start(self, q: &QuiverPresentation) -> usize {
        if self.inverse {
            q.tgt(self.arrow)
        } else {
            q.src(self.arrow)
        }
    }

    fn end(self, q: &QuiverPresentation) -> usize {
        if self.inverse {
            q.src(self.arrow)
        } else {
            q.tgt(self.arrow)
        }
    }

    pub fn label(self, q: &QuiverPresentation) -> String {
        let id = &q.arrows[self.arrow].id;
        if self.inverse {
            format!("{id}^-1")
        } else {
            id.clone()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.arrow, if self.inverse { "-" } else { "+" })
    }
}

pub fn word_label(q: &QuiverPresentation, w: &[Letter]) -> String {
    w.iter().map(|l| l.label(q)).collect::<Vec<_>>().join(" ")
}

/// Monomial, at most two arrows in and out of each vertex, and unique
/// continuation on both sides of every arrow.
pub fn is_string_algebra(q: &QuiverPresentation) -> bool {
    if !q.is_monomial() {
        return false;
    }
    let n = q.vertex_count();
    let mut ins = vec![0; n];
    let mut outs = vec![0; n];
    for a in 0..q.arrow_count() {
        outs[q.src(a)] += 1;
        ins[q.tgt(a)] += 1;
    }
    if ins.iter().chain(&outs).any(|&d| d > 2) {
        return false;
    }
    let zero = q.zero_paths();
    let is_zero2 = |first: usize, then: usize| zero.iter().any(|p| p.arrows == [first, then]);
    (0..q.arrow_count()).all(|b| {
        let after = (0..q.arrow_count()).filter(|&g| q.src(g) == q.tgt(b) && !is_zero2(b, g)).count();
        let before = (0..q.arrow_count()).filter(|&d| q.tgt(d) == q.src(b) && !is_zero2(d, b)).count();
        after <= 1 && before <= 1
    })
}

struct Checker<'a> {
    q: &'a QuiverPresentation,
    zero: Vec<Path>,
    window: usize,
}

impl<'a> Checker<'a> {
    fn new(q: &'a QuiverPresentation) -> Checker<'a> {
        let zero = q.zero_paths();
        let window = zero.iter().map(|p| p.arrows.len()).max().unwrap_or(0).max(2);
        Checker { q, zero, window }
    }

    fn letters(&self) -> Vec<Letter> {
        (0..self.q.arrow_count())
            .flat_map(|a| [Letter { arrow: a, inverse: false }, Letter { arrow: a, inverse: true }])
            .collect()
    }

    fn contains_zero(&self, arrows: &[usize]) -> bool {
        self.zero.iter().any(|z| arrows.windows(z.arrows.len()).any(|w| w == z.arrows.as_slice()))
    }

    /// Checks the constraints whose windows end at the last letter of `w`,
    /// assuming the prefix was already valid.
    fn extends(&self, w: &[Letter]) -> bool {
        let k = w.len();
        if k < 2 {
            return true;
        }
        let (x, y) = (w[k - 2], w[k - 1]);
        if x.end(self.q) != y.start(self.q) || (x.arrow == y.arrow && x.inverse != y.inverse) {
            return false;
        }
        // maximal same-direction run ending at y, up to the window size
        let mut run = vec![y.arrow];
        for l in w[..k - 1].iter().rev() {
            if l.inverse != y.inverse || run.len() == self.window {
                break;
            }
            run.push(l.arrow);
        }
        if !y.inverse {
            run.reverse();
        }
        !self.contains_zero(&run)
    }

    fn is_string(&self, w: &[Letter]) -> bool {
        (1..=w.len()).all(|i| self.extends(&w[..i]))
    }

    /// Every power of `w` is a string: checks a long enough repetition.
    fn is_cyclic_string(&self, w: &[Letter]) -> bool {
        if w.is_empty() || w[0].start(self.q) != w[w.len() - 1].end(self.q) {
            return false;
        }
        let reps = self.window / w.len() + 2;
        let long: Vec<Letter> = w.iter().copied().cycle().take(w.len() * reps).collect();
        self.is_string(&long)
    }
}

fn is_primitive(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).filter(|d| n % d == 0).all(|d| (0..n).any(|i| w[i] != w[i % d]))
}

fn primitive_root(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    for d in 1..=n {
        if n % d == 0 && (0..n).all(|i| w[i] == w[i % d]) {
            return w[..d].to_vec();
        }
    }
    w.to_vec()
}

/// Checks that `w` is a band: a closed walk all of whose powers are strings,
/// using both direct and inverse letters, and not a proper power.
pub fn verify_band(q: &QuiverPresentation, w: &[Letter]) -> Result<(), String> {
    let c = Checker::new(q);
    if !c.is_cyclic_string(w) {
        return Err("some power of the walk is not a string".into());
    }
    if !(w.iter().any(|l| l.inverse) && w.iter().any(|l| !l.inverse)) {
        return Err("the walk uses letters of one direction only".into());
    }
    if !is_primitive(w) {
        return Err("the walk is a proper power".into());
    }
    Ok(())
}

/// Default search bound: twice the arrow count times the longest relation.
pub fn default_band_bound(q: &QuiverPresentation) -> usize {
    let r = q.zero_paths().iter().map(|p| p.arrows.len()).max().unwrap_or(1);
    2 * q.arrow_count() * r
}

/// Shortest band of length at most `bound`, by exhaustive search over strings.
pub fn find_band_bounded(q: &QuiverPresentation, bound: usize) -> Option<Vec<Letter>> {
    let c = Checker::new(q);
    let letters = c.letters();
    for len in 2..=bound {
        let mut stack: Vec<Vec<Letter>> = letters.iter().map(|&l| vec![l]).collect();
        while let Some(w) = stack.pop() {
            if w.len() == len {
                if verify_band(q, &w).is_ok() {
                    return Some(w);
                }
                continue;
            }
            for &l in letters.iter().rev() {
                let mut next = w.clone();
                next.push(l);
                if c.extends(&next) {
                    stack.push(next);
                }
            }
        }
    }
    None
}

/// Finite automaton whose bi-infinite paths are exactly the periodic strings:
/// states are strings of length `window - 1`, edges strings of length
/// `window`. A band exists iff some strongly connected component carries
/// both a direct and an inverse edge; otherwise the algebra is band-free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandCertificate {
    pub window: usize,
    pub states: usize,
    pub edges: usize,
    /// A band when one exists.
    pub band: Option<Vec<Letter>>,
    pub band_label: Option<String>,
}

impl BandCertificate {
    pub fn band_free(&self) -> bool {
        self.band.is_none()
    }
}

pub fn band_automaton_certificate(q: &QuiverPresentation) -> BandCertificate {
    let c = Checker::new(q);
    let letters = c.letters();
    let w = c.window;
    let mut words: Vec<Vec<Letter>> = letters.iter().map(|&l| vec![l]).collect();
    let mut states_words = Vec::new();
    for len in 1..=w {
        if len == w - 1 {
            states_words = words.clone();
        }
        if len == w {
            break;
        }
        let mut next = Vec::new();
        for x in &words {
            for &l in &letters {
                let mut y = x.clone();
                y.push(l);
                if c.extends(&y) {
                    next.push(y);
                }
            }
        }
        words = next;
    }
    let edge_words = words;
    let state_index: HashMap<Vec<Letter>, usize> =
        states_words.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    // (from, to, last letter)
    let edges: Vec<(usize, usize, Letter)> = edge_words
        .iter()
        .filter_map(|e| {
            let from = *state_index.get(&e[..w - 1])?;
            let to = *state_index.get(&e[1..])?;
            Some((from, to, e[w - 1]))
        })
        .collect();
    let n = states_words.len();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(f, _, _)) in edges.iter().enumerate() {
        out[f].push(i);
    }
    let comp = scc(n, &edges);
    let mut band = None;
    'outer: for (i, &(fi, ti, li)) in edges.iter().enumerate() {
        if comp[fi] != comp[ti] || li.inverse {
            continue;
        }
        for (j, &(fj, tj, lj)) in edges.iter().enumerate() {
            if !lj.inverse || comp[fj] != comp[fi] || comp[tj] != comp[fi] {
                continue;
            }
            let p1 = bfs_edges(&edges, &out, ti, fj);
            let p2 = bfs_edges(&edges, &out, tj, fi);
            if let (Some(p1), Some(p2)) = (p1, p2) {
                let mut cycle = vec![i];
                cycle.extend(p1);
                cycle.push(j);
                cycle.extend(p2);
                let word: Vec<Letter> = cycle.iter().map(|&e| edges[e].2).collect();
                let root = primitive_root(&word);
                debug_assert!(verify_band(q, &root).is_ok());
                band = Some(root);
                break 'outer;
            }
        }
    }
    BandCertificate {
        window: w,
        states: n,
        edges: edges.len(),
        band_label: band.as_ref().map(|b| word_label(q, b)),
        band,
    }
}

fn bfs_edges(edges: &[(usize, usize, Letter)], out: &[Vec<usize>], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut seen = vec![false; out.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(s) = queue.pop_front() {
        if s == to {
            let mut path = Vec::new();
            let mut cur = to;
            while cur != from {
                let e = prev[&cur];
                path.push(e);
                cur = edges[e].0;
            }
            path.reverse();
            return Some(path);
        }
        for &e in &out[s] {
            let t = edges[e].1;
            if !seen[t] {
                seen[t] = true;
                prev.insert(t, e);
                queue.push_back(t);
            }
        }
    }
    None
}

/// Strongly connected component index of every state (Kosaraju).
fn scc(n: usize, edges: &[(usize, usize, Letter)]) -> Vec<usize> {
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for &(f, t, _) in edges {
        fwd[f].push(t);
        bwd[t].push(f);
    }
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, i)) = stack.pop() {
            if i < fwd[v].len() {
                stack.push((v, i + 1));
                let w = fwd[v][i];
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut c = 0;
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = c;
        while let Some(v) = stack.pop() {
            for &w in &bwd[v] {
                if comp[w] == usize::MAX {
                    comp[w] = c;
                    stack.push(w);
                }
            }
        }
        c += 1;
    }
    comp
}
