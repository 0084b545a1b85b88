#![allow(dead_code)]

use forkalg::algebra::{BasisElement, DiagramAlgebra};
use forkalg::weights::{Permutation, Weight};
use forkalg::Scalar;

pub fn w(s: &str) -> Weight {
    Weight::parse(s).unwrap()
}

pub fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

/// Index of `(lower eta^sigma upper)` in the basis of `alg`.
pub fn basis_index<C: Scalar>(
    alg: &DiagramAlgebra<C>,
    lower: &str,
    eta: &str,
    sigma: &Permutation,
    upper: &str,
) -> usize {
    let b = BasisElement::new(w(lower), w(eta), sigma.clone(), w(upper)).unwrap();
    alg.index_of(&b).unwrap()
}

/// Pairs `(n, k)` with `n` in the given range and `0 <= k <= n`.
pub fn blocks(ns: std::ops::RangeInclusive<usize>) -> Vec<(usize, usize)> {
    ns.flat_map(|n| (0..=n).map(move |k| (n, k))).collect()
}
