mod common;

use common::*;
use proptest::prelude::*;
use treecert::matrix2::{parse_matrix, reduced_word_count, visit_reduced_words, word_eval, GroupWord, WordEvaluator};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn det_is_multiplicative(m1 in sl2(5, 2, 3), m2 in sl2(5, 2, 3), s in nonzero_rational(5, 1)) {
        let scaled = m1.scale(&s);
        prop_assert_eq!(scaled.mul(&m2).det(), scaled.det().mul(&m2.det()));
        prop_assert!(m1.det().is_one());
        prop_assert!(m1.mul(&m1.inv().unwrap()).is_identity());
    }

    #[test]
    fn word_eval_is_a_homomorphism(asg in assignment(3), w1 in word(&['a', 'b'], 6), w2 in word(&['a', 'b'], 6)) {
        let ev = WordEvaluator::new(&asg).unwrap();
        let joined = ev.eval(&w1.concat(&w2)).unwrap();
        prop_assert_eq!(&joined, &ev.eval(&w1).unwrap().mul(&ev.eval(&w2).unwrap()));
        prop_assert!(ev.eval(&w1.concat(&w1.inverse())).unwrap().is_identity());
        prop_assert_eq!(ev.eval(&w1.free_reduce()).unwrap(), ev.eval(&w1).unwrap());
        prop_assert_eq!(word_eval(&w1, &asg).unwrap(), ev.eval(&w1).unwrap());
    }

    #[test]
    fn trace_is_conjugation_invariant(g in sl2(7, 2, 3), h in sl2(7, 2, 3)) {
        prop_assert_eq!(g.mul(&h).mul(&g.inv().unwrap()).trace(), h.trace());
    }

    #[test]
    fn display_parse_round_trip(m in sl2(11, 2, 3)) {
        prop_assert_eq!(parse_matrix(field(11), &m.to_string()).unwrap(), m);
    }

    #[test]
    fn reduction_is_idempotent(w in word(&['a', 'b', 'c'], 12)) {
        let r = w.free_reduce();
        prop_assert!(r.is_freely_reduced());
        prop_assert_eq!(r.free_reduce(), r.clone());
        let c = w.cyclic_reduce();
        prop_assert_eq!(c.cyclic_reduce(), c.clone());
        prop_assert!(c.len() <= r.len());
    }
}

#[test]
fn reduced_word_counts_match_enumeration() {
    for (k, alphabet) in [(2u64, &['a', 'b'][..]), (3, &['a', 'b', 'c'][..])] {
        for maxlen in 0..=5 {
            let mut n = 0u64;
            visit_reduced_words(alphabet, maxlen, &mut |w| {
                assert!(GroupWord::new(w.to_vec()).is_freely_reduced());
                n += 1;
            });
            assert_eq!(n, reduced_word_count(k, maxlen as u32));
        }
    }
    // 4·3⁹ words of length exactly 10 over {a, b}
    assert_eq!(reduced_word_count(2, 10) - reduced_word_count(2, 9), 4 * 3u64.pow(9));
}
