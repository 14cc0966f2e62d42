#![allow(dead_code)]

use critloc::exactmath::{sym, MPoly, Rational, Symbol};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

/// Sparse polynomial in the given variables with bounded degree per variable.
pub fn mpoly(names: &'static [&'static str], max_deg: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    let vars: Vec<Symbol> = names.iter().map(|n| sym(n)).collect();
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, names.len()), rational()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        terms.into_iter().fold(MPoly::zero(), |acc, (exps, c)| {
            let powers: Vec<(Symbol, u32)> = vars.iter().cloned().zip(exps).collect();
            &acc + &MPoly::monomial(c, &powers)
        })
    })
}
