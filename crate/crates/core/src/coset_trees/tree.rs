use super::chain::{coset_action, CosetAction, IndexChain};
use super::perm::{Perm, PermGroup};
use crate::error::{Error, Result};

/// The rooted tree whose level-`l` vertices are the left cosets of `G_l`,
/// truncated at `depth`. Node `k` at level `l` is the coset with index `k`
/// in the action of `G₀` on `G₀/G_l`.
#[derive(Clone, Debug)]
pub struct CosetTree {
    group: PermGroup,
    levels: Vec<CosetAction>,
    parents: Vec<Vec<usize>>,
}

pub fn build_coset_tree(chain: &IndexChain, depth: usize) -> Result<CosetTree> {
    if depth > chain.len() {
        return Err(Error::DepthExceedsChain { depth, len: chain.len() });
    }
    let g = chain.group();
    let levels: Vec<CosetAction> =
        chain.subgroups()[..=depth].iter().map(|h| coset_action(g, h)).collect::<Result<_>>()?;
    let mut parents = vec![Vec::new()];
    for l in 1..=depth {
        let above = &levels[l - 1];
        let ps = levels[l]
            .representatives
            .iter()
            .map(|r| above.coset_of(r).expect("representatives lie in G"))
            .collect();
        parents.push(ps);
    }
    Ok(CosetTree { group: g.clone(), levels, parents })
}

impl CosetTree {
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level_size(&self, l: usize) -> usize {
        self.levels[l].index
    }

    pub fn parent(&self, l: usize, node: usize) -> Option<usize> {
        (l > 0).then(|| self.parents[l][node])
    }

    pub fn children(&self, l: usize, node: usize) -> Vec<usize> {
        if l >= self.depth() {
            return Vec::new();
        }
        (0..self.level_size(l + 1)).filter(|&k| self.parents[l + 1][k] == node).collect()
    }

    pub fn degree(&self, l: usize, node: usize) -> usize {
        self.children(l, node).len() + usize::from(l > 0)
    }

    pub fn node_count(&self) -> usize {
        (0..=self.depth()).map(|l| self.level_size(l)).sum()
    }

    /// Degrees per level, as sorted distinct values.
    pub fn level_degrees(&self) -> Vec<Vec<usize>> {
        (0..=self.depth())
            .map(|l| {
                let mut ds: Vec<usize> = (0..self.level_size(l)).map(|k| self.degree(l, k)).collect();
                ds.sort_unstable();
                ds.dedup();
                ds
            })
            .collect()
    }
}

/// The permutation of each level induced by `g`.
pub fn tree_action(g: &Perm, tree: &CosetTree) -> Result<Vec<Perm>> {
    if !tree.group.contains(g) {
        return Err(Error::NotInGroup);
    }
    tree.levels.iter().map(|ca| ca.act(g)).collect()
}

/// Elements of `G₀` fixing every node down to `depth`.
pub fn kernel_at_depth(chain: &IndexChain, depth: usize) -> Result<PermGroup> {
    let tree = build_coset_tree(chain, depth)?;
    let g = chain.group();
    let fixed: Vec<Perm> = g
        .elements()
        .iter()
        .filter(|x| tree_action(x, &tree).map(|ps| ps.iter().all(Perm::is_identity)).unwrap_or(false))
        .cloned()
        .collect();
    Ok(PermGroup::from_elements(g.degree(), fixed))
}
