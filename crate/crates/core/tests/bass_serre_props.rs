mod common;

use std::collections::BTreeMap;

use common::*;
use proptest::prelude::*;
use treecert::algebra::RationalFunction;
use treecert::bass_serre::amalgam::{self, amalgam_reduce};
use treecert::bass_serre::hnn::{self, britton_reduce, hnn_translation_data, phi, theta, TreeAction};
use treecert::bass_serre::{three_tree_certificate, two_tree_certificate};
use treecert::matrix2::{word_eval, GroupWord, Matrix2};
use treecert::surface::standard_quadruple;
use treecert::valuation_bt::Mat;

/// `x ↦ [[1,1],[0,1]]`, `y ↦ [[1,u²],[0,1]]`, `s ↦ diag(u, u⁻¹)` with `u`
/// the field variable: a matrix image of the HNN group.
fn hnn_matrices() -> BTreeMap<char, Mat> {
    let f = field(7);
    let (zero, one) = (RationalFunction::zero(f), RationalFunction::one(f));
    let u = RationalFunction::x(f);
    BTreeMap::from([
        ('x', Matrix2::new(one.clone(), one.clone(), zero.clone(), one.clone())),
        ('y', Matrix2::new(one.clone(), u.mul(&u), zero.clone(), one.clone())),
        ('s', Matrix2::new(u.clone(), zero.clone(), zero, u.inv().unwrap())),
    ])
}

fn splice(w: &GroupWord, at: usize, r: &GroupWord) -> GroupWord {
    let at = at.min(w.len());
    let mut letters = w.letters()[..at].to_vec();
    letters.extend_from_slice(r.letters());
    letters.extend_from_slice(&w.letters()[at..]);
    GroupWord::new(letters)
}

fn s_sum(w: &GroupWord) -> i64 {
    w.letters().iter().filter(|l| l.generator == 's').map(|l| if l.inverse { -1 } else { 1 }).sum()
}

const HNN_RELATORS: [&str; 4] = ["xyXY", "sxSY", "YsxS", "yxYX"];
const SURFACE_RELATORS: [&str; 3] = ["abABcdCD", "cdCDabAB", "dcDCbaBA"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn britton_normal_form(w in word(&hnn::ALPHABET, 12), at in 0usize..13, r in 0usize..4) {
        let nf = britton_reduce(&w);
        prop_assert_eq!(britton_reduce(&nf.to_word()), nf.clone());
        let asg = hnn_matrices();
        prop_assert_eq!(word_eval(&nf.to_word(), &asg).unwrap(), word_eval(&w, &asg).unwrap());
        let rel = hnn::parse_word(HNN_RELATORS[r]).unwrap();
        prop_assert_eq!(britton_reduce(&splice(&w, at, &rel)), nf);
        prop_assert!(britton_reduce(&w.concat(&w.inverse())).is_identity());
    }

    #[test]
    fn hnn_translation_data_is_a_conjugacy_invariant(w in word(&hnn::ALPHABET, 10), u in word(&hnn::ALPHABET, 4)) {
        let conj = u.concat(&w).concat(&u.inverse());
        prop_assert_eq!(hnn_translation_data(&conj), hnn_translation_data(&w));
        if hnn_translation_data(&w) == TreeAction::Elliptic {
            prop_assert_eq!(s_sum(&w), 0);
        }
    }

    #[test]
    fn theta_and_phi_are_homomorphisms(w1 in word(&hnn::ALPHABET, 10), w2 in word(&hnn::ALPHABET, 10), r in 0usize..4) {
        let w12 = w1.concat(&w2);
        prop_assert_eq!(theta(&w12), theta(&w1) + theta(&w2));
        prop_assert_eq!(phi(&w12), phi(&w1).compose(phi(&w2)));
        let rel = hnn::parse_word(HNN_RELATORS[r]).unwrap();
        prop_assert_eq!(theta(&rel), 0);
        prop_assert_eq!(phi(&rel), hnn::Dihedral::IDENTITY);
        prop_assert_eq!(phi(&w1.inverse()), phi(&w1).inverse());
    }

    #[test]
    fn amalgam_normal_form(w in word(&amalgam::ALPHABET, 10), at in 0usize..11, r in 0usize..3) {
        let nf = amalgam_reduce(&w);
        prop_assert_eq!(amalgam_reduce(&nf.to_word()), nf.clone());
        let rel = amalgam::parse_word(SURFACE_RELATORS[r]).unwrap();
        prop_assert_eq!(amalgam_reduce(&splice(&w, at, &rel)), nf.clone());
        prop_assert!(amalgam_reduce(&w.concat(&w.inverse())).is_identity());
        prop_assert!(amalgam_reduce(&rel).is_identity());
        // free reduction of the normal-form word never lengthens beyond the input's syllable structure
        prop_assert!(nf.syllable_count() <= w.free_reduce().len());
    }

    #[test]
    fn amalgam_cyclic_length_is_a_conjugacy_invariant(w in word(&amalgam::ALPHABET, 8), u in word(&amalgam::ALPHABET, 3)) {
        let conj = u.concat(&w).concat(&u.inverse());
        let (a, b) = (amalgam_reduce(&w), amalgam_reduce(&conj));
        prop_assert_eq!(a.cyclic_length(), b.cyclic_length());
        prop_assert_eq!(a.is_elliptic(), b.is_elliptic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn amalgam_normal_form_matches_the_matrix_image(w in word(&amalgam::ALPHABET, 8)) {
        let q = standard_quadruple(3).unwrap();
        let nf = amalgam_reduce(&w);
        prop_assert_eq!(q.eval(&nf.to_word()).unwrap(), q.eval(&w).unwrap());
    }
}

#[test]
fn certificates_are_monotone() {
    let mut prev: Option<(i64, i64, i64)> = None;
    for l in 1..=7 {
        let r = three_tree_certificate(l).unwrap();
        assert!(r.passed());
        let c = |k: &str| r.get_counter(k).unwrap();
        let now = (c("words"), c("elements"), c("hyperbolic_hnn"));
        if let Some(p) = prev {
            assert!(now.0 > p.0 && now.1 > p.1 && now.2 >= p.2);
        }
        prev = Some(now);
    }
    let mut prev: Option<(i64, i64)> = None;
    for l in 1..=4 {
        let r = two_tree_certificate(l).unwrap();
        assert!(r.passed());
        let now = (r.get_counter("words").unwrap(), r.get_counter("elements").unwrap());
        if let Some(p) = prev {
            assert!(now.0 > p.0 && now.1 > p.1);
        }
        prev = Some(now);
    }
    assert!(three_tree_certificate(13).is_err());
    assert!(two_tree_certificate(11).is_err());
}
