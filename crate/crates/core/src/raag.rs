//! Defining-graph analysis for right-angled Artin groups: how many trees a
//! proper, factor-preserving action needs.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_EXACT_VERTICES: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = SimpleGraph { n, edges: BTreeSet::new() };
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.add_edge(u, v, i + 1)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        if u == v {
            return Err(Error::LoopEdge { line, vertex: u });
        }
        if u >= self.n || v >= self.n {
            return Err(Error::Parse(format!("line {line}: vertex out of range 0..{}", self.n)));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u, v });
        }
        Ok(())
    }

    /// Optional `vertices <n>` header, then `u v` per line; `#` starts a
    /// comment. Without a header the vertex count is one more than the
    /// largest label.
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared = None;
        let mut pairs = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: {raw:?}", i + 1)));
            match fields.as_slice() {
                ["vertices", n] => declared = Some(num(n)?),
                [u, v] => pairs.push((i + 1, num(u)?, num(v)?)),
                _ => return Err(Error::Parse(format!("line {}: {raw:?}", i + 1))),
            }
        }
        let n = declared.unwrap_or_else(|| pairs.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));
        let mut g = SimpleGraph { n, edges: BTreeSet::new() };
        for (line, u, v) in pairs {
            g.add_edge(u, v, line)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adjacent(u, v)).collect()
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle with n ≥ 3")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph")
    }

    pub fn edgeless(n: usize) -> Self {
        SimpleGraph { n, edges: BTreeSet::new() }
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph")
    }

    fn masks(&self) -> Vec<u64> {
        let mut m = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            m[u] |= 1 << v;
            m[v] |= 1 << u;
        }
        m
    }

    fn check_size(&self) -> Result<()> {
        if self.n > MAX_EXACT_VERTICES {
            Err(Error::TooLarge(self.n))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.n)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// An odd closed path found by breadth-first 2-coloring, or `None` when the
/// graph is bipartite.
pub fn find_odd_closed_path(g: &SimpleGraph) -> Option<Vec<usize>> {
    let mut color: Vec<Option<bool>> = vec![None; g.n];
    let mut parent = vec![usize::MAX; g.n];
    for s in 0..g.n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].expect("colored"));
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].expect("colored") => {
                        return Some(join_at_ancestor(&parent, u, v));
                    }
                    _ => {}
                }
            }
        }
    }
    None
}

/// The tree paths from `u` and `v` up to their common ancestor, closed by
/// the edge `u v`.
fn join_at_ancestor(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let up = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let (pu, pv) = (up(u), up(v));
    let mut i = pu.len();
    let mut j = pv.len();
    while i > 1 && j > 1 && pu[i - 2] == pv[j - 2] {
        i -= 1;
        j -= 1;
    }
    // pu[i-1] == pv[j-1] is the common ancestor
    let mut cycle: Vec<usize> = pu[..i].to_vec();
    cycle.extend(pv[..j - 1].iter().rev());
    cycle
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    find_odd_closed_path(g).is_none()
}

/// Shrinks an odd closed path to a chord-free odd cycle.
pub fn induced_odd_cycle(g: &SimpleGraph, path: &[usize]) -> Result<Vec<usize>> {
    let len = path.len();
    if len == 0 || (0..len).any(|i| path[i] >= g.n || !g.adjacent(path[i], path[(i + 1) % len])) {
        return Err(Error::NotAClosedPath);
    }
    if len.is_multiple_of(2) {
        return Err(Error::NotOdd);
    }
    let mut walk = path.to_vec();
    // split at repeated vertices
    'repeat: loop {
        for i in 0..walk.len() {
            for j in i + 1..walk.len() {
                if walk[i] == walk[j] {
                    let inner: Vec<usize> = walk[i..j].to_vec();
                    let mut outer: Vec<usize> = walk[j..].to_vec();
                    outer.extend_from_slice(&walk[..i]);
                    walk = if inner.len() % 2 == 1 { inner } else { outer };
                    continue 'repeat;
                }
            }
        }
        break;
    }
    // split along chords
    'chord: loop {
        let l = walk.len();
        for i in 0..l {
            for j in i + 2..l {
                if (i == 0 && j == l - 1) || !g.adjacent(walk[i], walk[j]) {
                    continue;
                }
                let side: Vec<usize> = walk[i..=j].to_vec();
                let mut other: Vec<usize> = walk[j..].to_vec();
                other.extend_from_slice(&walk[..=i]);
                walk = if side.len() % 2 == 1 { side } else { other };
                continue 'chord;
            }
        }
        break;
    }
    Ok(walk)
}

/// True when `cycle` is an odd cycle of length ≥ 3 whose vertex set spans
/// no other edges.
pub fn is_induced_odd_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    if l < 3 || l.is_multiple_of(2) || distinct.len() != l {
        return false;
    }
    (0..l).all(|i| {
        (i + 1..l).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == l - 1);
            g.adjacent(cycle[i], cycle[j]) == consecutive
        })
    })
}

pub fn is_proper_coloring(g: &SimpleGraph, coloring: &[usize]) -> bool {
    coloring.len() == g.n && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

fn try_color(masks: &[u64], k: usize, colors: &mut [Option<usize>], used: usize) -> bool {
    // DSATUR: the uncolored vertex seeing the most distinct colors
    let mut best: Option<(usize, u32, u32)> = None;
    for v in 0..masks.len() {
        if colors[v].is_some() {
            continue;
        }
        let sat = (0..masks.len())
            .filter(|&u| masks[v] >> u & 1 == 1)
            .filter_map(|u| colors[u])
            .fold(0u64, |acc, c| acc | 1 << c)
            .count_ones();
        let deg = masks[v].count_ones();
        if best.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
            best = Some((v, sat, deg));
        }
    }
    let Some((v, _, _)) = best else { return true };
    for c in 0..k.min(used + 1) {
        let clash = (0..masks.len()).any(|u| masks[v] >> u & 1 == 1 && colors[u] == Some(c));
        if clash {
            continue;
        }
        colors[v] = Some(c);
        if try_color(masks, k, colors, used.max(c + 1)) {
            return true;
        }
        colors[v] = None;
    }
    false
}

/// Exact chromatic number with an optimal coloring.
pub fn chromatic_number(g: &SimpleGraph) -> Result<(usize, Vec<usize>)> {
    g.check_size()?;
    if g.n == 0 {
        return Ok((0, Vec::new()));
    }
    let masks = g.masks();
    let start = max_clique(g)?.0.max(1);
    for k in start..=g.n {
        let mut colors = vec![None; g.n];
        if try_color(&masks, k, &mut colors, 0) {
            return Ok((k, colors.into_iter().map(|c| c.expect("all colored")).collect()));
        }
    }
    unreachable!("n colors always suffice")
}

/// Maximum clique by Bron–Kerbosch with pivoting.
pub fn max_clique(g: &SimpleGraph) -> Result<(usize, Vec<usize>)> {
    g.check_size()?;
    let masks = g.masks();
    fn bk(masks: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut u64) {
        if p == 0 && x == 0 {
            if r.count_ones() > best.count_ones() {
                *best = r;
            }
            return;
        }
        if r.count_ones() + p.count_ones() <= best.count_ones() {
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !masks[pivot];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(masks, r | 1 << v, p & masks[v], x & masks[v], best);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let all = if g.n == 64 { u64::MAX } else { (1u64 << g.n) - 1 };
    let mut best = 0u64;
    bk(&masks, 0, all, 0, &mut best);
    let witness: Vec<usize> = (0..g.n).filter(|&v| best >> v & 1 == 1).collect();
    Ok((witness.len(), witness))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePlan {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub coloring: Vec<usize>,
    pub clique: Vec<usize>,
    pub odd_cycle: Option<Vec<usize>>,
}

/// Bounds on the number of trees: the chromatic number above; clique size,
/// 3 for an odd cycle, 2 for an edge and 1 below.
pub fn tree_count_plan(g: &SimpleGraph) -> Result<TreePlan> {
    let (chi, coloring) = chromatic_number(g)?;
    let (omega, clique) = max_clique(g)?;
    let odd_cycle = match find_odd_closed_path(g) {
        Some(p) => Some(induced_odd_cycle(g, &p)?),
        None => None,
    };
    let mut lower = omega.max(1);
    if g.edge_count() > 0 {
        lower = lower.max(2);
    }
    if odd_cycle.is_some() {
        lower = lower.max(3);
    }
    let upper = chi.max(1);
    let exact = (lower == upper).then_some(upper);
    Ok(TreePlan { lower, upper, exact, coloring, clique, odd_cycle })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    NoEmbedding,
    Unknown,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::NoEmbedding => "NoEmbedding",
            Obstruction::Unknown => "Unknown",
        })
    }
}

/// A RAAG with an odd cycle in its graph cannot sit inside one whose graph
/// is bipartite.
pub fn embedding_obstruction(sub: &SimpleGraph, sup: &SimpleGraph) -> Obstruction {
    if !is_bipartite(sub) && is_bipartite(sup) {
        Obstruction::NoEmbedding
    } else {
        Obstruction::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let g = SimpleGraph::parse("vertices 2\n0 1").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(SimpleGraph::parse("0 0"), Err(Error::LoopEdge { line: 1, vertex: 0 }));
        assert_eq!(
            SimpleGraph::parse("# pair\n0 1\n1 0\n"),
            Err(Error::DuplicateEdge { line: 3, u: 1, v: 0 })
        );
        let c5 = SimpleGraph::parse("0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(c5, SimpleGraph::cycle(5));
        assert!(SimpleGraph::parse("vertices 2\n0 5").is_err());
    }

    #[test]
    fn odd_paths() {
        let c = find_odd_closed_path(&SimpleGraph::cycle(5)).unwrap();
        assert_eq!(c.len(), 5);
        assert!(is_bipartite(&SimpleGraph::path(4)));
        assert!(is_bipartite(&SimpleGraph::edgeless(0)));
    }

    #[test]
    fn chord_split_keeps_triangle() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.push((0, 2));
        let g = SimpleGraph::new(5, edges).unwrap();
        assert_eq!(induced_odd_cycle(&g, &[0, 1, 2, 3, 4]).unwrap(), vec![0, 1, 2]);
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(induced_odd_cycle(&c5, &[0, 1, 2, 3, 4]).unwrap(), vec![0, 1, 2, 3, 4]);
        assert_eq!(induced_odd_cycle(&c5, &[0, 1, 3]), Err(Error::NotAClosedPath));
        let c4 = SimpleGraph::cycle(4);
        assert_eq!(induced_odd_cycle(&c4, &[0, 1, 2, 3]), Err(Error::NotOdd));
    }

    #[test]
    fn seven_cycle_with_chord() {
        // chord {0, 3} splits C7 into a 4-cycle side and a 5-cycle side
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 3));
        let g = SimpleGraph::new(7, edges).unwrap();
        let c = induced_odd_cycle(&g, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(c, vec![3, 4, 5, 6, 0]);
        assert!(is_induced_odd_cycle(&g, &c));
    }

    #[test]
    fn walk_with_repeat() {
        // two triangles sharing vertex 0, walked as a 6-step closed path plus a bridge
        let g = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let c = induced_odd_cycle(&g, &[0, 1, 2, 0, 3, 4, 0, 1, 2]).unwrap();
        assert!(is_induced_odd_cycle(&g, &c));
    }

    #[test]
    fn colorings_and_cliques() {
        assert_eq!(chromatic_number(&SimpleGraph::cycle(5)).unwrap().0, 3);
        assert_eq!(chromatic_number(&SimpleGraph::path(4)).unwrap().0, 2);
        assert_eq!(chromatic_number(&SimpleGraph::complete(3)).unwrap().0, 3);
        assert_eq!(max_clique(&SimpleGraph::complete(3)).unwrap().0, 3);
        assert_eq!(max_clique(&SimpleGraph::cycle(5)).unwrap().0, 2);
        assert_eq!(max_clique(&SimpleGraph::edgeless(4)).unwrap().0, 1);
        assert_eq!(chromatic_number(&SimpleGraph::edgeless(41)), Err(Error::TooLarge(41)));
    }

    #[test]
    fn plans() {
        let exact = |g: &SimpleGraph| tree_count_plan(g).unwrap().exact;
        assert_eq!(exact(&SimpleGraph::cycle(5)), Some(3));
        assert_eq!(exact(&SimpleGraph::path(4)), Some(2));
        assert_eq!(exact(&SimpleGraph::complete(3)), Some(3));
        assert_eq!(exact(&SimpleGraph::petersen()), Some(3));
        assert_eq!(exact(&SimpleGraph::edgeless(5)), Some(1));
    }

    #[test]
    fn obstruction() {
        let (c5, p4) = (SimpleGraph::cycle(5), SimpleGraph::path(4));
        assert_eq!(embedding_obstruction(&c5, &p4), Obstruction::NoEmbedding);
        assert_eq!(embedding_obstruction(&p4, &c5), Obstruction::Unknown);
        assert_eq!(embedding_obstruction(&c5, &c5), Obstruction::Unknown);
    }
}
