use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 100_000;

/// A permutation of `{0, …, n−1}` stored as its image list. Products
/// compose right to left: `(p·q)(i) = p(q(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let points: Vec<usize> = open[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {s:?}"))))
                .collect::<Result<_>>()?;
            for (k, &pt) in points.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::Parse(format!("point {pt} outside degree {degree}")));
                }
                if seen[pt] {
                    return Err(Error::Parse(format!("point {pt} repeated in {text:?}")));
                }
                seen[pt] = true;
                images[pt] = points[(k + 1) % points.len()] as u32;
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cyc.push(i);
                i = self.apply(i);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// A permutation group with its full sorted element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

fn closure(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = g.compose(s);
            if !seen.contains(&h) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                seen.insert(h.clone());
                queue.push_back(h);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::with_cap(degree, generators, DEFAULT_CAP)
    }

    pub fn with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidArgument(format!("generator {g} has degree {} not {degree}", g.degree())));
        }
        let generators: Vec<Perm> = generators.into_iter().filter(|g| !g.is_identity()).collect();
        let elements = closure(degree, &generators, cap)?;
        Ok(PermGroup { degree, generators, elements })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), elements: vec![Perm::identity(degree)] }
    }

    /// The subgroup with exactly these elements (assumed closed), with a
    /// greedily chosen generating set.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for g in &elements {
            if !span.contains(g) {
                generators.push(g.clone());
                span = closure(degree, &generators, usize::MAX)
                    .expect("uncapped")
                    .into_iter()
                    .collect();
            }
        }
        PermGroup { degree, generators, elements }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n <= 1 {
            return Ok(Self::trivial(n));
        }
        let mut swap = Perm::identity(n).0;
        swap.swap(0, 1);
        let cycle = Perm((0..n as u32).map(|i| (i + 1) % n as u32).collect());
        Self::new(n, vec![Perm(swap), cycle])
    }

    pub fn alternating(n: usize) -> Result<Self> {
        let gens = (2..n)
            .map(|k| {
                let mut im = Perm::identity(n).0;
                im[0] = 1;
                im[1] = k as u32;
                im[k] = 0;
                Perm(im)
            })
            .collect();
        Self::new(n, gens)
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n <= 1 {
            return Ok(Self::trivial(n));
        }
        Self::new(n, vec![Perm((0..n as u32).map(|i| (i + 1) % n as u32).collect())])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    pub fn intersection(&self, other: &PermGroup) -> PermGroup {
        let elements = self.elements.iter().filter(|g| other.contains(g)).cloned().collect();
        Self::from_elements(self.degree, elements)
    }

    /// `[self : sub]`, after checking containment.
    pub fn index_of(&self, sub: &PermGroup) -> Result<usize> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup(format!("order {} subgroup not contained", sub.order())));
        }
        Ok(self.order() / sub.order())
    }

    pub fn is_normal_in(&self, g: &PermGroup) -> bool {
        g.generators.iter().all(|x| {
            let xi = x.inverse();
            self.generators.iter().all(|h| self.contains(&x.compose(h).compose(&xi)))
        })
    }

    pub fn generators_text(&self) -> String {
        if self.generators.is_empty() {
            return "()".to_string();
        }
        self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
    }
}

/// Order of the group generated by `generators`, refusing to enumerate more
/// than `cap` elements.
pub fn group_order(degree: usize, generators: &[Perm], cap: usize) -> Result<usize> {
    Ok(PermGroup::with_cap(degree, generators.to_vec(), cap)?.order())
}
