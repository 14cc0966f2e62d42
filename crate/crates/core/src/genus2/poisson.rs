use rayon::prelude::*;

use crate::exactmath::{sym, MPoly, Symbol};

use super::hamiltonians::{h_polynomials, HFormulaVariant};

fn canonical_pairs() -> [(Symbol, Symbol); 3] {
    [
        (sym("u0"), sym("eta0")),
        (sym("u1"), sym("eta1")),
        (sym("u2"), sym("eta2")),
    ]
}

/// Canonical bracket `{f, g} = sum_i df/du_i dg/deta_i - df/deta_i dg/du_i`.
/// Any other variables (`r, s, t`, ...) are treated as constants.
pub fn poisson_bracket(f: &MPoly, g: &MPoly) -> MPoly {
    let mut acc = MPoly::zero();
    for (u, e) in canonical_pairs() {
        let a = &f.partial_derivative(&u) * &g.partial_derivative(&e);
        let b = &f.partial_derivative(&e) * &g.partial_derivative(&u);
        acc = &acc + &(&a - &b);
    }
    acc
}

/// One pairwise bracket `{h_i, h_j}` in a [`CommutationReport`].
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub bracket: MPoly,
    /// Up to five lowest-degree monomials, for diagnosing a nonzero bracket.
    pub smallest_terms: Vec<String>,
}

impl BracketEntry {
    pub fn is_zero(&self) -> bool {
        self.bracket.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct CommutationReport {
    pub variant: HFormulaVariant,
    pub pairs: Vec<BracketEntry>,
    pub all_zero: bool,
}

/// Expands `{h0,h1}`, `{h0,h2}`, `{h1,h2}` symbolically in `u, eta, r, s, t`.
pub fn commutation_report(variant: HFormulaVariant) -> CommutationReport {
    let hs = h_polynomials(variant);
    let pairs: Vec<BracketEntry> = [(0, 1), (0, 2), (1, 2)]
        .into_par_iter()
        .map(|(i, j)| {
            let bracket = poisson_bracket(&hs[i], &hs[j]);
            let smallest_terms = bracket.smallest_terms(5);
            BracketEntry {
                i,
                j,
                bracket,
                smallest_terms,
            }
        })
        .collect();
    let all_zero = pairs.iter().all(BracketEntry::is_zero);
    CommutationReport {
        variant,
        pairs,
        all_zero,
    }
}
