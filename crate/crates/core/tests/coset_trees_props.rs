use proptest::prelude::*;
use treecert::coset_trees::{
    build_coset_tree, chain_4_to_3, core, coset_action, kernel_at_depth, parse_chain, refine_index4, tree_action,
    IndexChain, Perm, PermGroup,
};

const N: usize = 6;

fn perm() -> impl Strategy<Value = Perm> {
    Just((0..N as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Perm::from_images(images).unwrap())
}

fn group() -> impl Strategy<Value = PermGroup> {
    prop::collection::vec(perm(), 1..=2).prop_map(|gens| PermGroup::new(N, gens).unwrap())
}

fn orbit(g: &PermGroup, x: usize) -> Vec<usize> {
    let mut pts: Vec<usize> = g.elements().iter().map(|e| e.apply(x)).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn stabilizer(g: &PermGroup, x: usize) -> PermGroup {
    PermGroup::from_elements(N, g.elements().iter().filter(|e| e.apply(x) == x).cloned().collect())
}

/// `G` with a point whose orbit has size 4, and that point's stabilizer.
fn index4_pair() -> impl Strategy<Value = (PermGroup, PermGroup)> {
    group().prop_filter_map("no orbit of size 4", |g| {
        let x = (0..N).find(|&x| orbit(&g, x).len() == 4)?;
        let h = stabilizer(&g, x);
        Some((g, h))
    })
}

/// `G > Stab(x₁) > Stab(x₁, x₂) > …` following points in order.
fn stabilizer_chain(g: &PermGroup, points: &[usize]) -> IndexChain {
    let mut subs = vec![g.clone()];
    for &x in points {
        let next = stabilizer(subs.last().unwrap(), x);
        subs.push(next);
    }
    IndexChain::new(subs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn refinement_reaches_the_core((g, h) in index4_pair()) {
        let chain = refine_index4(&g, &h).unwrap();
        prop_assert!(chain.verify());
        prop_assert!(chain.max_step() <= 3);
        prop_assert_eq!(chain.group(), &g);
        let k = core(&g, &h).unwrap();
        prop_assert_eq!(chain.terminal(), &k);
        prop_assert_eq!(chain.total_index(), g.index_of(&k).unwrap());
        prop_assert!(k.is_normal_in(&g));
        prop_assert!(k.is_subgroup_of(&h));
    }

    #[test]
    fn conversion_waypoints_lie_in_the_input(g in group(), points in Just((0..N).collect::<Vec<_>>()).prop_shuffle()) {
        let chain = stabilizer_chain(&g, &points[..3]);
        prop_assume!(chain.max_step() <= 4);
        let conv = chain_4_to_3(&chain).unwrap();
        prop_assert!(conv.chain.verify());
        prop_assert!(conv.chain.max_step() <= 3);
        prop_assert_eq!(conv.waypoints.len(), chain.subgroups().len());
        for (k, gj) in conv.waypoints.iter().zip(chain.subgroups()) {
            prop_assert!(k.is_subgroup_of(gj));
            prop_assert!(conv.chain.subgroups().contains(k));
        }
        prop_assert!(conv.chain.terminal().is_subgroup_of(chain.terminal()));
    }

    #[test]
    fn coset_tree_degrees(g in group(), points in Just((0..N).collect::<Vec<_>>()).prop_shuffle()) {
        let chain = stabilizer_chain(&g, &points[..3]);
        let depth = chain.len();
        let tree = build_coset_tree(&chain, depth).unwrap();
        let d = chain.max_step();
        for l in 0..=depth {
            prop_assert_eq!(tree.level_size(l), g.index_of(&chain.subgroups()[l]).unwrap());
            for node in 0..tree.level_size(l) {
                let deg = tree.degree(l, node);
                let expected = if l == depth { usize::from(l > 0) } else { chain.indices()[l] + usize::from(l > 0) };
                prop_assert_eq!(deg, expected);
                prop_assert!(deg <= d + 1);
            }
        }
        prop_assert_eq!(kernel_at_depth(&chain, depth).unwrap(), core(&g, chain.terminal()).unwrap());
    }

    #[test]
    fn tree_action_is_an_action(g in group(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let chain = stabilizer_chain(&g, &[0, 1]);
        let tree = build_coset_tree(&chain, chain.len()).unwrap();
        let a = i.get(g.elements());
        let b = j.get(g.elements());
        let ab = tree_action(&a.compose(b), &tree).unwrap();
        let (ta, tb) = (tree_action(a, &tree).unwrap(), tree_action(b, &tree).unwrap());
        for l in 0..ab.len() {
            prop_assert_eq!(&ab[l], &ta[l].compose(&tb[l]));
        }
        prop_assert!(tree_action(&Perm::identity(N), &tree).unwrap().iter().all(Perm::is_identity));
        // parents are respected: g maps children of v to children of g·v
        for l in 1..ab.len() {
            for node in 0..tree.level_size(l) {
                let parent = tree.parent(l, node).unwrap();
                prop_assert_eq!(tree.parent(l, ta[l].apply(node)).unwrap(), ta[l - 1].apply(parent));
            }
        }
    }

    #[test]
    fn coset_action_kernel_is_normal((g, h) in index4_pair()) {
        let ca = coset_action(&g, &h).unwrap();
        prop_assert_eq!(ca.index, 4);
        prop_assert_eq!(ca.image.order() * ca.kernel.order(), g.order());
        prop_assert!(ca.kernel.is_normal_in(&g));
    }
}

#[test]
fn cyclic_eight_gives_the_binary_tree() {
    let chain = parse_chain("(0 1 2 3 4 5 6 7)\n---\n(0 2 4 6)(1 3 5 7)\n---\n(0 4)(1 5)(2 6)(3 7)\n---\ndegree 8\n").unwrap();
    assert_eq!(chain.indices(), &[2, 2, 2]);
    let tree = build_coset_tree(&chain, 3).unwrap();
    assert_eq!(tree.level_degrees(), vec![vec![2], vec![3], vec![3], vec![1]]);
    assert_eq!((0..=3).map(|l| tree.level_size(l)).collect::<Vec<_>>(), vec![1, 2, 4, 8]);
    assert_eq!(kernel_at_depth(&chain, 3).unwrap().order(), 1);
}
