//! Finite permutation groups: coset actions, index-4 refinement, index-chain
//! conversion and coset trees.

mod chain;
mod perm;
mod tree;

use std::path::Path;

pub use chain::{chain_4_to_3, core, coset_action, refine_index4, Conversion, CosetAction, IndexChain};
pub use perm::{group_order, Perm, PermGroup, DEFAULT_CAP};
pub use tree::{build_coset_tree, kernel_at_depth, tree_action, CosetTree};

use crate::error::{Error, Result};

/// Generators in cycle notation, one per line, with an optional
/// `degree <n>` line and `#` comments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorList {
    pub degree: Option<usize>,
    pub cycles: Vec<String>,
}

impl GeneratorList {
    pub fn parse(text: &str) -> Result<Self> {
        let mut degree = None;
        let mut cycles = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("degree") {
                let n = rest.trim().parse().map_err(|_| Error::Parse(format!("bad degree line {line:?}")))?;
                degree = Some(n);
            } else {
                cycles.push(line.to_string());
            }
        }
        Ok(GeneratorList { degree, cycles })
    }

    /// One more than the largest point mentioned.
    pub fn implied_degree(&self) -> usize {
        self.cycles
            .iter()
            .flat_map(|c| c.split(|ch: char| !ch.is_ascii_digit()))
            .filter_map(|s| s.parse::<usize>().ok())
            .map(|p| p + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn into_group(&self, degree: usize) -> Result<PermGroup> {
        let gens = self.cycles.iter().map(|c| Perm::parse_cycles(c, degree)).collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }
}

fn common_degree(lists: &[GeneratorList]) -> usize {
    lists.iter().map(|l| l.degree.unwrap_or(0).max(l.implied_degree())).max().unwrap_or(0)
}

/// Parses a group and a subgroup given as generator lists over a common
/// point set.
pub fn parse_group_pair(group: &str, subgroup: &str) -> Result<(PermGroup, PermGroup)> {
    let lists = [GeneratorList::parse(group)?, GeneratorList::parse(subgroup)?];
    let n = common_degree(&lists);
    Ok((lists[0].into_group(n)?, lists[1].into_group(n)?))
}

/// Parses a chain given as generator lists separated by `---` lines, the
/// first being `G₀`.
pub fn parse_chain(text: &str) -> Result<IndexChain> {
    let mut sections = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            sections.push(String::new());
        } else {
            let s = sections.last_mut().expect("nonempty");
            s.push_str(line);
            s.push('\n');
        }
    }
    chain_from_sections(&sections)
}

fn chain_from_sections(sections: &[String]) -> Result<IndexChain> {
    let lists = sections.iter().map(|s| GeneratorList::parse(s)).collect::<Result<Vec<_>>>()?;
    let n = common_degree(&lists);
    let groups = lists.iter().map(|l| l.into_group(n)).collect::<Result<Vec<_>>>()?;
    IndexChain::new(groups)
}

/// Reads a chain from a file (sections separated by `---`) or from a
/// directory whose files, in name order, are the successive subgroups.
pub fn read_chain(path: &Path) -> Result<IndexChain> {
    if path.is_dir() {
        let mut files: Vec<_> = std::fs::read_dir(path)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        let sections = files.iter().map(std::fs::read_to_string).collect::<std::io::Result<Vec<_>>>()?;
        chain_from_sections(&sections)
    } else {
        parse_chain(&std::fs::read_to_string(path)?)
    }
}

/// Leaf `(i₁, …, i_d)` of the rooted `k`-ary tree of depth `d` is the point
/// `Σ i_j k^{d−j}`.
fn leaf_rotation(k: usize, depth: usize, level: usize) -> Perm {
    let n = k.pow(depth as u32);
    let block = k.pow((depth - level - 1) as u32);
    let images = (0..n)
        .map(|leaf| {
            if leaf / (block * k) != 0 {
                return leaf as u32;
            }
            let digit = (leaf / block) % k;
            (leaf - digit * block + ((digit + 1) % k) * block) as u32
        })
        .collect();
    Perm::from_images(images).expect("rotation is a bijection")
}

/// The iterated wreath product of `C_k` acting on the leaves of the rooted
/// `k`-ary tree of depth `depth`: generated by rotating the children of the
/// leftmost vertex at each level.
pub fn cyclic_tree_group(k: usize, depth: usize) -> Result<PermGroup> {
    if k < 2 || depth == 0 {
        return Err(Error::InvalidArgument("need k ≥ 2 and depth ≥ 1".into()));
    }
    let gens = (0..depth).map(|l| leaf_rotation(k, depth, l)).collect();
    PermGroup::new(k.pow(depth as u32), gens)
}

/// `G > Stab(v₁) > … > Stab(v_depth)` for the leftmost vertices `v_l` at
/// each level; every step has index `k`.
pub fn leftmost_stabilizer_chain(g: &PermGroup, k: usize, depth: usize) -> Result<IndexChain> {
    let mut subgroups = vec![g.clone()];
    for l in 1..=depth {
        let block = k.pow((depth - l) as u32);
        let els = g.elements().iter().filter(|x| x.apply(0) < block).cloned().collect();
        subgroups.push(PermGroup::from_elements(g.degree(), els));
    }
    IndexChain::new(subgroups)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_files() {
        let (g, h) = parse_group_pair("# S4\ndegree 4\n(0 1)\n(0 1 2 3)\n", "(1 2)\n(1 2 3)").unwrap();
        assert_eq!((g.order(), h.order()), (24, 6));
        let chain = parse_chain("(0 1 2)\n(0 1)\n---\n(0 1 2)\n---\n").unwrap();
        assert_eq!(chain.indices(), &[2, 3]);
    }

    #[test]
    fn wreath_product_order() {
        let g = cyclic_tree_group(4, 2).unwrap();
        assert_eq!(g.order(), 1024);
        let chain = leftmost_stabilizer_chain(&g, 4, 2).unwrap();
        assert_eq!(chain.indices(), &[4, 4]);
        assert_eq!(cyclic_tree_group(2, 3).unwrap().order(), 128);
    }
}
