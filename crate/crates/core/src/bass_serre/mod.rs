//! Word-level Bass–Serre certificates for two groups acting properly on
//! products of trees.

pub mod amalgam;
pub mod hnn;

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix2::{visit_reduced_extensions, GroupWord, Letter};
use crate::report::Report;

pub use amalgam::{amalgam_reduce, free_quotient, AmalgamNormalForm, Factor};
pub use hnn::{britton_reduce, hnn_translation_data, phi, theta, Dihedral, HnnNormalForm, TreeAction};

pub const THREE_TREE_MAX: usize = 12;
pub const TWO_TREE_MAX: usize = 10;

const MAX_LISTED: usize = 10;

/// Distinct nontrivial normal forms of the reduced words of length
/// `≤ maxlen`, plus the number of words visited.
fn distinct_elements<N, F>(alphabet: &[char], maxlen: usize, reduce: F) -> (u64, Vec<N>)
where
    N: Eq + Hash + Send + Ord,
    F: Fn(&[Letter]) -> Option<N> + Sync,
{
    let starts: Vec<Letter> = alphabet
        .iter()
        .flat_map(|&g| [Letter::new(g, false), Letter::new(g, true)])
        .collect();
    let parts: Vec<(u64, HashSet<N>)> = starts
        .par_iter()
        .map(|&l| {
            let mut words = 0u64;
            let mut seen = HashSet::new();
            visit_reduced_extensions(alphabet, &[l], maxlen, &mut |w| {
                words += 1;
                if let Some(nf) = reduce(w) {
                    seen.insert(nf);
                }
            });
            (words, seen)
        })
        .collect();
    let mut words = 0;
    let mut all = HashSet::new();
    for (n, s) in parts {
        words += n;
        all.extend(s);
    }
    let mut elements: Vec<N> = all.into_iter().collect();
    elements.sort_unstable();
    (words, elements)
}

impl PartialOrd for HnnNormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HnnNormalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |n: &Self| {
            let w = n.to_word();
            (w.len(), w.to_string())
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for AmalgamNormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AmalgamNormalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

fn listed(items: &[String]) -> String {
    let shown: Vec<&str> = items.iter().take(MAX_LISTED).map(String::as_str).collect();
    let more = items.len().saturating_sub(MAX_LISTED);
    if more > 0 {
        format!("{} (+{more} more)", shown.join(", "))
    } else {
        shown.join(", ")
    }
}

/// Coverage of a single HNN element by the three trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreeTreeCoverage {
    pub hnn: bool,
    pub theta: bool,
    pub phi: bool,
}

impl ThreeTreeCoverage {
    pub fn of(w: &GroupWord) -> Self {
        ThreeTreeCoverage {
            hnn: matches!(hnn_translation_data(w), TreeAction::Hyperbolic { .. }),
            theta: theta(w) != 0,
            phi: phi(w).is_hyperbolic(),
        }
    }

    pub fn covered(self) -> bool {
        self.hnn || self.theta || self.phi
    }
}

/// Every nontrivial element of `⟨s, x, y | [x, y], sxs⁻¹ = y⟩` spelled by a
/// reduced word of length `≤ maxlen` is hyperbolic in at least one of the
/// Bass–Serre tree, the line via `θ`, or the line via `φ`.
pub fn three_tree_certificate(maxlen: usize) -> Result<Report> {
    if maxlen > THREE_TREE_MAX {
        return Err(Error::InvalidArgument(format!("maxlen {maxlen} exceeds {THREE_TREE_MAX}")));
    }
    let (words, elements) = distinct_elements(&hnn::ALPHABET, maxlen, |w| {
        let nf = HnnNormalForm::of_letters(w);
        (!nf.is_identity()).then_some(nf)
    });
    let results: Vec<(ThreeTreeCoverage, bool, String)> = elements
        .par_iter()
        .map(|nf| {
            let w = nf.to_word();
            let cov = ThreeTreeCoverage::of(&w);
            let s_sum: i64 = w
                .letters()
                .iter()
                .filter(|l| l.generator == 's')
                .map(|l| if l.inverse { -1 } else { 1 })
                .sum();
            let elliptic_ok = cov.hnn || s_sum == 0;
            (cov, elliptic_ok, w.to_string())
        })
        .collect();

    let mut report = Report::new(format!("bassserre certify --group f2byz --maxlen {maxlen}"));
    let count = |f: &dyn Fn(&ThreeTreeCoverage) -> bool| results.iter().filter(|r| f(&r.0)).count() as i64;
    report.counter("words", words as i64);
    report.counter("elements", elements.len() as i64);
    report.counter("hyperbolic_hnn", count(&|c| c.hnn));
    report.counter("hyperbolic_theta", count(&|c| c.theta));
    report.counter("hyperbolic_phi", count(&|c| c.phi));
    let violations: Vec<String> =
        results.iter().filter(|r| !r.0.covered()).map(|r| r.2.clone()).collect();
    report.counter("violations", violations.len() as i64);
    report.check("three_tree_coverage", violations.is_empty(), listed(&violations));
    let bad_elliptic: Vec<String> = results.iter().filter(|r| !r.1).map(|r| r.2.clone()).collect();
    report.check("elliptic_zero_stable_sum", bad_elliptic.is_empty(), listed(&bad_elliptic));
    Ok(report)
}

/// Coverage of a single surface-group element by the two trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoTreeCoverage {
    pub amalgam: bool,
    pub free_quotient: bool,
}

impl TwoTreeCoverage {
    pub fn of(nf: &AmalgamNormalForm) -> Self {
        TwoTreeCoverage {
            amalgam: !nf.is_elliptic(),
            free_quotient: !free_quotient(&nf.to_word()).is_empty(),
        }
    }

    pub fn covered(self) -> bool {
        self.amalgam || self.free_quotient
    }
}

/// Every nontrivial element of the genus-2 surface group spelled by a
/// reduced word of length `≤ maxlen` over `a, b, c, d` is hyperbolic on the
/// amalgam tree or has nontrivial image in the free quotient.
pub fn two_tree_certificate(maxlen: usize) -> Result<Report> {
    if maxlen > TWO_TREE_MAX {
        return Err(Error::InvalidArgument(format!("maxlen {maxlen} exceeds {TWO_TREE_MAX}")));
    }
    let (words, elements) = distinct_elements(&amalgam::ALPHABET, maxlen, |w| {
        let nf = AmalgamNormalForm::of_letters(w);
        (!nf.is_identity()).then_some(nf)
    });
    let results: Vec<(TwoTreeCoverage, String)> =
        elements.par_iter().map(|nf| (TwoTreeCoverage::of(nf), nf.to_string())).collect();

    let mut report = Report::new(format!("bassserre certify --group s2 --maxlen {maxlen}"));
    report.counter("words", words as i64);
    report.counter("elements", elements.len() as i64);
    report.counter("hyperbolic_amalgam", results.iter().filter(|r| r.0.amalgam).count() as i64);
    report.counter(
        "hyperbolic_free_quotient",
        results.iter().filter(|r| r.0.free_quotient).count() as i64,
    );
    let violations: Vec<String> =
        results.iter().filter(|r| !r.0.covered()).map(|r| r.1.clone()).collect();
    report.counter("violations", violations.len() as i64);
    report.check("two_tree_coverage", violations.is_empty(), listed(&violations));
    Ok(report)
}
