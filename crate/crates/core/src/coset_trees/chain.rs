use std::collections::HashMap;

use super::perm::{Perm, PermGroup};
use crate::error::{Error, Result};

/// The action of `G` by left multiplication on the left cosets of `H`.
/// Coset 0 is `H` itself.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub index: usize,
    pub representatives: Vec<Perm>,
    coset_of: HashMap<Perm, usize>,
    pub image: PermGroup,
    pub kernel: PermGroup,
}

impl CosetAction {
    pub fn coset_of(&self, g: &Perm) -> Option<usize> {
        self.coset_of.get(g).copied()
    }

    /// The permutation of cosets induced by `g ∈ G`.
    pub fn act(&self, g: &Perm) -> Result<Perm> {
        let images = self
            .representatives
            .iter()
            .map(|r| self.coset_of(&g.compose(r)).map(|k| k as u32).ok_or(Error::NotInGroup))
            .collect::<Result<Vec<u32>>>()?;
        Perm::from_images(images)
    }
}

pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<CosetAction> {
    let index = g.index_of(h)?;
    let mut coset_of: HashMap<Perm, usize> = HashMap::with_capacity(g.order());
    let mut representatives = Vec::with_capacity(index);
    for x in g.elements() {
        if coset_of.contains_key(x) {
            continue;
        }
        let k = representatives.len();
        representatives.push(x.clone());
        for y in h.elements() {
            coset_of.insert(x.compose(y), k);
        }
    }
    let mut ca = CosetAction {
        index,
        representatives,
        coset_of,
        image: PermGroup::trivial(index),
        kernel: PermGroup::trivial(g.degree()),
    };
    let image_gens = g.generators().iter().map(|s| ca.act(s)).collect::<Result<Vec<_>>>()?;
    ca.image = PermGroup::new(index, image_gens)?;
    let kernel: Vec<Perm> = g
        .elements()
        .iter()
        .filter(|x| ca.representatives.iter().enumerate().all(|(k, r)| ca.coset_of(&x.compose(r)) == Some(k)))
        .cloned()
        .collect();
    ca.kernel = PermGroup::from_elements(g.degree(), kernel);
    Ok(ca)
}

/// The core of `H` in `G`: the largest normal subgroup of `G` inside `H`.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    Ok(coset_action(g, h)?.kernel)
}

/// A descending chain `H₀ ⩾ H₁ ⩾ …` with consecutive repeats removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexChain {
    subgroups: Vec<PermGroup>,
    indices: Vec<usize>,
}

impl IndexChain {
    pub fn new(subgroups: Vec<PermGroup>) -> Result<Self> {
        let mut kept: Vec<PermGroup> = Vec::with_capacity(subgroups.len());
        let mut indices = Vec::new();
        for s in subgroups {
            if let Some(prev) = kept.last() {
                if *prev == s {
                    continue;
                }
                indices.push(prev.index_of(&s)?);
            }
            kept.push(s);
        }
        if kept.is_empty() {
            return Err(Error::InvalidArgument("empty chain".into()));
        }
        Ok(IndexChain { subgroups: kept, indices })
    }

    pub fn subgroups(&self) -> &[PermGroup] {
        &self.subgroups
    }

    pub fn group(&self) -> &PermGroup {
        &self.subgroups[0]
    }

    pub fn terminal(&self) -> &PermGroup {
        self.subgroups.last().expect("nonempty")
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max_step(&self) -> usize {
        self.indices.iter().copied().max().unwrap_or(1)
    }

    pub fn total_index(&self) -> usize {
        self.indices.iter().product()
    }

    /// Re-checks every containment by membership.
    pub fn verify(&self) -> bool {
        self.subgroups.windows(2).all(|w| w[1].is_subgroup_of(&w[0]))
            && self.subgroups.windows(2).zip(&self.indices).all(|(w, &i)| w[0].order() == i * w[1].order())
    }
}

fn subgroups_of(q: &PermGroup) -> Vec<PermGroup> {
    let mut found: Vec<PermGroup> = Vec::new();
    let els = q.elements();
    for (i, x) in els.iter().enumerate() {
        for y in &els[i..] {
            let s = PermGroup::new(q.degree(), vec![x.clone(), y.clone()]).expect("subgroup of a small group");
            if !found.contains(&s) {
                found.push(s);
            }
        }
    }
    found.sort_by(|a, b| (a.order(), a.elements()).cmp(&(b.order(), b.elements())));
    found
}

fn pick<'a>(subs: &'a [PermGroup], order: usize, inside: &PermGroup, containing: &PermGroup) -> Result<&'a PermGroup> {
    subs.iter()
        .find(|s| s.order() == order && s.is_subgroup_of(inside) && containing.is_subgroup_of(s))
        .ok_or_else(|| Error::InvalidArgument(format!("no subgroup of order {order} in the expected position")))
}

/// For `[G : H] = 4`, a chain from `G` to `core(H)` with every step of
/// index 2 or 3, chosen by the order of the image of `G` in `Sym(4)`.
pub fn refine_index4(g: &PermGroup, h: &PermGroup) -> Result<IndexChain> {
    let ca = coset_action(g, h)?;
    if ca.index != 4 {
        return Err(Error::WrongIndex(ca.index));
    }
    let q = &ca.image;
    let one = PermGroup::trivial(4);
    let rho_h = PermGroup::from_elements(4, q.elements().iter().filter(|x| x.apply(0) == 0).cloned().collect());
    let subs = subgroups_of(q);
    let waypoints: Vec<PermGroup> = match q.order() {
        4 => vec![q.clone(), pick(&subs, 2, q, &rho_h)?.clone(), one],
        8 => vec![q.clone(), pick(&subs, 4, q, &rho_h)?.clone(), rho_h, one],
        12 | 24 => {
            let a = if q.order() == 24 { pick(&subs, 12, q, &one)?.clone() } else { q.clone() };
            let v = pick(&subs, 4, &a, &one)?.clone();
            let c = pick(&subs, 2, &v, &one)?.clone();
            vec![q.clone(), a, v, c, one]
        }
        n => return Err(Error::InvalidArgument(format!("image of order {n} is not transitive on 4 points"))),
    };
    let images: Vec<Perm> = g.elements().iter().map(|x| ca.act(x)).collect::<Result<_>>()?;
    let pullback = |s: &PermGroup| {
        let els = g.elements().iter().zip(&images).filter(|(_, im)| s.contains(im)).map(|(x, _)| x.clone()).collect();
        PermGroup::from_elements(g.degree(), els)
    };
    IndexChain::new(waypoints.iter().map(pullback).collect())
}

/// Result of [`chain_4_to_3`]: the new chain and the waypoints `K_j ≤ G_j`.
#[derive(Clone, Debug)]
pub struct Conversion {
    pub chain: IndexChain,
    pub waypoints: Vec<PermGroup>,
}

/// Replaces every index-4 step: `K_{j+1}` is `K_j ∩ G_{j+1}`, or its core in
/// `K_j` when that intersection has index 4, with the refinement of that step
/// spliced in.
pub fn chain_4_to_3(chain: &IndexChain) -> Result<Conversion> {
    if let Some((step, &index)) = chain.indices().iter().enumerate().find(|(_, &i)| i > 4) {
        return Err(Error::StepTooLarge { step, index });
    }
    let mut k = chain.group().clone();
    let mut waypoints = vec![k.clone()];
    let mut out = vec![k.clone()];
    for next in &chain.subgroups()[1..] {
        let t = k.intersection(next);
        if k.index_of(&t)? == 4 {
            let refined = refine_index4(&k, &t)?;
            out.extend(refined.subgroups()[1..].iter().cloned());
            k = refined.terminal().clone();
        } else {
            out.push(t.clone());
            k = t;
        }
        waypoints.push(k.clone());
    }
    Ok(Conversion { chain: IndexChain::new(out)?, waypoints })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn coset_action_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let stab = PermGroup::new(4, vec![p("(1 2)", 4), p("(1 2 3)", 4)]).unwrap();
        let ca = coset_action(&s4, &stab).unwrap();
        assert_eq!((ca.index, ca.image.order(), ca.kernel.order()), (4, 24, 1));

        let c4 = PermGroup::cyclic(4).unwrap();
        let ca = coset_action(&c4, &PermGroup::trivial(4)).unwrap();
        assert_eq!((ca.index, ca.image.order()), (4, 4));

        let a4 = PermGroup::alternating(4).unwrap();
        let c3 = PermGroup::new(4, vec![p("(0 1 2)", 4)]).unwrap();
        let ca = coset_action(&a4, &c3).unwrap();
        assert_eq!((ca.index, ca.image.order()), (4, 12));
    }

    #[test]
    fn not_a_subgroup() {
        let c3 = PermGroup::new(4, vec![p("(0 1 2)", 4)]).unwrap();
        let c2 = PermGroup::new(4, vec![p("(0 1)", 4)]).unwrap();
        assert!(matches!(coset_action(&c3, &c2), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn refinement_steps() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let stab = PermGroup::new(4, vec![p("(1 2)", 4), p("(1 2 3)", 4)]).unwrap();
        assert_eq!(refine_index4(&s4, &stab).unwrap().indices(), &[2, 3, 2, 2]);
        let a4 = PermGroup::alternating(4).unwrap();
        let c3 = PermGroup::new(4, vec![p("(0 1 2)", 4)]).unwrap();
        assert_eq!(refine_index4(&a4, &c3).unwrap().indices(), &[3, 2, 2]);
        let c4 = PermGroup::cyclic(4).unwrap();
        assert_eq!(refine_index4(&c4, &PermGroup::trivial(4)).unwrap().indices(), &[2, 2]);
        let d4 = PermGroup::new(4, vec![p("(0 1 2 3)", 4), p("(1 3)", 4)]).unwrap();
        let refl = PermGroup::new(4, vec![p("(1 3)", 4)]).unwrap();
        let chain = refine_index4(&d4, &refl).unwrap();
        assert_eq!(chain.indices(), &[2, 2, 2]);
        assert!(chain.verify());
        assert_eq!(refine_index4(&s4, &PermGroup::alternating(4).unwrap()), Err(Error::WrongIndex(2)));
    }

    #[test]
    fn conversion_without_index_four_is_identity() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let c3 = PermGroup::cyclic(3).unwrap();
        let chain = IndexChain::new(vec![s3, c3, PermGroup::trivial(3)]).unwrap();
        assert_eq!(chain_4_to_3(&chain).unwrap().chain, chain);
    }

    #[test]
    fn single_step_conversion_matches_refinement() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let stab = PermGroup::new(4, vec![p("(1 2)", 4), p("(1 2 3)", 4)]).unwrap();
        let chain = IndexChain::new(vec![s4.clone(), stab.clone()]).unwrap();
        assert_eq!(chain_4_to_3(&chain).unwrap().chain, refine_index4(&s4, &stab).unwrap());
    }
}
