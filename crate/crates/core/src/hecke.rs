//! The Hecke algebra of `S_n` in Soergel's normalization
//! (`H_i^2 = (v^-1 - v) H_i + 1`), its bar involution and the
//! Kazhdan-Lusztig basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::polyring::Laurent;
use crate::quotient::BSequence;
use crate::scalar::Scalar;
use crate::weights::{Permutation, Weight};

/// `sum_w c_w H_w` with Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement<C> {
    n: usize,
    terms: BTreeMap<Permutation, Laurent<C>>,
}

impl<C: Scalar> HeckeElement<C> {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::standard(Permutation::identity(n))
    }

    /// The standard basis element `H_w`.
    pub fn standard(w: Permutation) -> Self {
        let n = w.size();
        let mut terms = BTreeMap::new();
        terms.insert(w, Laurent::one());
        HeckeElement { n, terms }
    }

    /// `H_i`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::standard(Permutation::simple(n, i))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Permutation) -> Laurent<C> {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Permutation, c: &Laurent<C>) {
        if c.is_zero() {
            return;
        }
        let s = &self.coeff(&w) + c;
        if s.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Laurent::mono(0, -C::one())))
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        let mut r = Self::zero(self.n);
        for (w, a) in &self.terms {
            r.add_term(w.clone(), &(a * c));
        }
        r
    }

    /// Right multiplication by `H_i`.
    pub fn mul_right_hi(&self, i: usize) -> Self {
        let q = Laurent::from_pairs([(-1, C::one()), (1, -C::one())]);
        let mut r = Self::zero(self.n);
        for (w, c) in &self.terms {
            let ws = w.mul_simple_right(i);
            r.add_term(ws, c);
            if w.has_right_descent(i) {
                r.add_term(w.clone(), &(c * &q));
            }
        }
        r
    }

    /// Right multiplication by `C_i = H_i + v`.
    pub fn mul_right_ci(&self, i: usize) -> Self {
        self.mul_right_hi(i).add(&self.scale(&Laurent::v_pow(1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero(self.n);
        for (w, c) in &other.terms {
            let mut x = self.clone();
            for i in w.reduced_word() {
                x = x.mul_right_hi(i);
            }
            r = r.add(&x.scale(c));
        }
        r
    }

    /// Bar involution using a cache of `bar(H_w)`.
    pub fn bar_with(&self, cache: &BarCache<C>) -> Self {
        let mut r = Self::zero(self.n);
        for (w, c) in &self.terms {
            r = r.add(&cache.bar_standard(w).scale(&c.bar()));
        }
        r
    }

    pub fn bar(&self) -> Self {
        self.bar_with(&BarCache::new(self.n))
    }

    /// Standard-basis inner product, `<H_w, H_w'> = delta`.
    pub fn inner(&self, other: &Self) -> Laurent<C> {
        let mut l = Laurent::zero();
        for (w, c) in &self.terms {
            if let Some(d) = other.terms.get(w) {
                l = &l + &(c * d);
            }
        }
        l
    }
}

impl<C: Scalar> fmt::Display for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*H[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Memo table for `bar(H_w)`, the product of `bar(H_a) = H_a + v - v^-1`
/// over a reduced word of `w`.
#[derive(Debug)]
pub struct BarCache<C> {
    n: usize,
    table: RwLock<HashMap<Permutation, Arc<HeckeElement<C>>>>,
}

impl<C: Scalar> BarCache<C> {
    pub fn new(n: usize) -> Self {
        BarCache { n, table: RwLock::new(HashMap::new()) }
    }

    pub fn bar_standard(&self, w: &Permutation) -> Arc<HeckeElement<C>> {
        if let Some(x) = self.table.read().expect("bar cache").get(w) {
            return x.clone();
        }
        let word = w.reduced_word();
        let x = match word.last() {
            None => HeckeElement::one(self.n),
            Some(&i) => {
                let prefix = w.mul_simple_right(i);
                let y = self.bar_standard(&prefix);
                let shift = Laurent::from_pairs([(1, C::one()), (-1, -C::one())]);
                y.mul_right_hi(i).add(&y.scale(&shift))
            }
        };
        let x = Arc::new(x);
        self.table.write().expect("bar cache").insert(w.clone(), x.clone());
        x
    }
}

/// How the inductive construction picks the simple reflection to peel off.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordChoice {
    /// Last letter of the lexicographically smallest reduced word.
    LexMin,
    /// Largest right descent.
    LargestDescent,
}

/// Memoized Kazhdan-Lusztig basis of the Hecke algebra of `S_n`.
#[derive(Debug)]
pub struct KlTable<C> {
    n: usize,
    choice: WordChoice,
    table: RwLock<HashMap<Permutation, Arc<HeckeElement<C>>>>,
}

impl<C: Scalar> KlTable<C> {
    pub fn new(n: usize) -> Self {
        Self::with_choice(n, WordChoice::LexMin)
    }

    pub fn with_choice(n: usize, choice: WordChoice) -> Self {
        KlTable { n, choice, table: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn peel(&self, w: &Permutation) -> usize {
        match self.choice {
            WordChoice::LexMin => *w.reduced_word().last().expect("non-identity"),
            WordChoice::LargestDescent => (1..w.size()).rev().find(|&i| w.has_right_descent(i)).expect("non-identity"),
        }
    }

    /// `C_w`, built from `C_{w s_i} C_i` by removing lower canonical
    /// elements with nonzero constant coefficient, longest first.
    pub fn canonical(&self, w: &Permutation) -> Arc<HeckeElement<C>> {
        assert_eq!(w.size(), self.n, "permutation size");
        if let Some(x) = self.table.read().expect("kl table").get(w) {
            return x.clone();
        }
        let x = if w.is_identity() {
            HeckeElement::one(self.n)
        } else {
            let i = self.peel(w);
            let shorter = w.mul_simple_right(i);
            let mut x = self.canonical(&shorter).mul_right_ci(i);
            loop {
                let next = x
                    .terms()
                    .filter(|(y, c)| *y != w && !c.coeff(0).is_zero())
                    .map(|(y, c)| (y.length(), y.clone(), c.coeff(0)))
                    .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
                let Some((_, y, mu)) = next else { break };
                let cy = self.canonical(&y);
                x = x.sub(&cy.scale(&Laurent::mono(0, mu)));
            }
            x
        };
        let x = Arc::new(x);
        self.table.write().expect("kl table").insert(w.clone(), x.clone());
        x
    }

    /// Coefficient of `H_{w'}` in `C_w`.
    pub fn kl_poly(&self, w_prime: &Permutation, w: &Permutation) -> Laurent<C> {
        self.canonical(w).coeff(w_prime)
    }
}

/// `w_k z` for the coset representative of `z`.
pub fn wk_z(z: &Weight) -> Permutation {
    Permutation::longest_parabolic(z.n(), z.k()).compose(&z.to_permutation())
}

/// Closed formula for `C_{w_k z}`.
pub fn explicit_c<C: Scalar>(z: &Weight) -> HeckeElement<C> {
    let n = z.n();
    let k = z.k();
    let top = wk_z(z).length() as i32;
    let dist = z.vee_dist();
    let mut r = HeckeElement::zero(n);
    for wp in Permutation::all(k) {
        let base = wp.embed(n);
        let lw = wp.length() as i32;
        let mut idx = vec![0usize; dist.len()];
        loop {
            let mut word = Vec::new();
            for (j, &i) in idx.iter().enumerate() {
                let kj = k + j + 1;
                for t in 1..=i {
                    word.push(kj - t);
                }
            }
            let mut perm = base.clone();
            for &a in &word {
                perm = perm.mul_simple_right(a);
            }
            let s: usize = idx.iter().sum();
            r.add_term(perm, &Laurent::v_pow(top - lw - s as i32));
            let mut p = 0;
            loop {
                if p == idx.len() {
                    break;
                }
                if idx[p] < dist[p] {
                    idx[p] += 1;
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == idx.len() {
                break;
            }
        }
    }
    r
}

/// Number of standard terms of the closed formula, `k! * prod (z^down_j + 1)`.
pub fn explicit_c_term_count(z: &Weight) -> u64 {
    factorial(z.k()) * z.vee_dist().iter().map(|&d| d as u64 + 1).product::<u64>()
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// `v^{-l(w_k z)} sum_{w'} P_{w', w_k z}(v^2)`.
pub fn graded_dim_soergel<C: Scalar>(table: &KlTable<C>, z: &Weight) -> Laurent<C> {
    let w = wk_z(z);
    let c = table.canonical(&w);
    let mut l = Laurent::zero();
    for (_, p) in c.terms() {
        l = &l + &p.at_v_squared();
    }
    l.shift(-(w.length() as i32))
}

/// `k! * prod` with the factor at `j + 1` raised by one, for `z^down_j = z^down_{j+1}`.
/// Here `j` ranges over `k+1 .. n-1` as in the down-distance indexing.
pub fn cor34_count(z: &Weight, j: usize) -> Result<u64> {
    let k = z.k();
    let n = z.n();
    if j <= k || j >= n {
        return Err(Error::Invalid(format!("index {j} must lie in {}..{}", k + 1, n - 1)));
    }
    let d = z.vee_dist();
    let at = |i: usize| d[i - k - 1];
    if at(j) != at(j + 1) {
        return Err(Error::Invalid(format!("down distances at {j} and {} differ", j + 1)));
    }
    let mut count = factorial(k);
    for i in k + 1..=n {
        count *= at(i) as u64 + if i == j + 1 { 2 } else { 1 };
    }
    Ok(count)
}

/// Indices `j` where the hypothesis `z^down_j = z^down_{j+1}` holds.
pub fn cor34_indices(z: &Weight) -> Vec<usize> {
    let k = z.k();
    let d = z.vee_dist();
    (k + 1..z.n()).filter(|&j| d[j - k - 1] == d[j - k]).collect()
}

/// The sequence presenting `C_{s_j w_k z}`: the b-sequence of `z` with the
/// entry at `l = j - z^down_j` raised by one.
pub fn a_sequence(z: &Weight, j: usize) -> Result<BSequence> {
    cor34_count(z, j)?;
    let k = z.k();
    let l = j - z.vee_dist()[j - k - 1];
    let mut a = z.b_seq().0;
    a[l - 1] += 1;
    Ok(BSequence(a))
}

/// `s_j w_k z`.
pub fn sj_wk_z(z: &Weight, j: usize) -> Permutation {
    Permutation::simple(z.n(), j).compose(&wk_z(z))
}
