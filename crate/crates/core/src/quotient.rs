//! Quotients `R_b = R / I_b` of the polynomial ring by ideals generated
//! by complete symmetric polynomials in initial segments of variables,
//! together with their monomial bases, Hom-space bases and duality.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::polyring::{h_initial, Laurent, Monomial, Polynomial};
use crate::scalar::Scalar;

/// A sequence `(b_1, ..., b_n)` of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BSequence(pub Vec<u32>);

impl BSequence {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::Invalid(format!("b-sequence entries must be positive: {values:?}")));
        }
        Ok(BSequence(values))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// Weakly decreasing with steps of at most one.
    pub fn is_b_prime(&self) -> bool {
        self.0.iter().all(|&b| b >= 1) && self.0.windows(2).all(|w| w[0] >= w[1] && w[1] + 1 >= w[0])
    }

    /// The sequences arising from weights with `k` up-symbols.
    pub fn is_b_class(&self, k: usize) -> bool {
        self.is_b_prime() && self.0.last() == Some(&1) && self.0.first().is_some_and(|&b| b as usize <= k + 1)
    }

    /// `b_1 * ... * b_n`.
    pub fn product(&self) -> u64 {
        self.0.iter().map(|&b| b as u64).product()
    }

    /// Exponent vector `b - 1`, the unique top-degree basis monomial.
    pub fn top_monomial(&self) -> Monomial {
        Monomial(self.0.iter().map(|b| b - 1).collect())
    }
}

impl fmt::Display for BSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `R / I_b` with the Groebner basis `h_{b_i}(x_1, ..., x_i)`.
#[derive(Debug)]
pub struct QuotientRing<C> {
    b: BSequence,
    generators: Vec<Polynomial<C>>,
    /// `h_{b_i}(x_1..x_i) - x_i^{b_i}`.
    tails: Vec<Polynomial<C>>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    cache: RwLock<HashMap<Monomial, Polynomial<C>>>,
}

impl<C: Scalar> QuotientRing<C> {
    pub fn new(b: BSequence) -> Result<Self> {
        if b.0.contains(&0) {
            return Err(Error::Invalid(format!("b-sequence entries must be positive: {b}")));
        }
        let n = b.n();
        let mut generators = Vec::with_capacity(n);
        let mut tails = Vec::with_capacity(n);
        for i in 1..=n {
            let g: Polynomial<C> = h_initial(n, b.get(i), i);
            let mut lead = vec![0; n];
            lead[i - 1] = b.get(i);
            let t = &g - &Polynomial::monomial(Monomial(lead));
            generators.push(g);
            tails.push(t);
        }
        let basis = box_monomials(&vec![0; n], &b.0);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(QuotientRing { b, generators, tails, basis, index, cache: RwLock::new(HashMap::new()) })
    }

    pub fn b(&self) -> &BSequence {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    /// Standard monomials in ascending monomial order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        m.0.iter().zip(&self.b.0).all(|(j, b)| j < b)
    }

    /// Reduce modulo `I_b`, always eliminating the largest non-standard term.
    pub fn normal_form(&self, p: &Polynomial<C>) -> Polynomial<C> {
        if p.n() != self.n() {
            panic!("normal_form: polynomial in {} variables, ring in {}", p.n(), self.n());
        }
        let mut out = Polynomial::zero(self.n());
        for (m, c) in p.terms() {
            let r = self.normal_form_monomial(m);
            for (rm, rc) in r.terms() {
                out.add_term(rm.clone(), rc.clone() * c.clone());
            }
        }
        out
    }

    /// Normal form of a single monomial, memoized.
    pub fn normal_form_monomial(&self, m: &Monomial) -> Polynomial<C> {
        if self.is_standard(m) {
            return Polynomial::monomial(m.clone());
        }
        if let Some(r) = self.cache.read().expect("normal form cache").get(m) {
            return r.clone();
        }
        let r = self.reduce(m);
        self.cache.write().expect("normal form cache").insert(m.clone(), r.clone());
        r
    }

    fn reduce(&self, m: &Monomial) -> Polynomial<C> {
        let n = self.n();
        let mut work: BTreeMap<Monomial, C> = BTreeMap::new();
        work.insert(m.clone(), C::one());
        let mut out = Polynomial::zero(n);
        while let Some((top, c)) = work.pop_last() {
            match (1..=n).rev().find(|&i| top.exp(i) >= self.b.get(i)) {
                None => out.add_term(top, c),
                Some(i) => {
                    let mut q = top.0.clone();
                    q[i - 1] -= self.b.get(i);
                    let q = Monomial(q);
                    for (tm, tc) in self.tails[i - 1].terms() {
                        let key = tm.mul(&q);
                        let add = -(tc.clone() * c.clone());
                        let entry = work.entry(key);
                        match entry {
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert(add);
                            }
                            std::collections::btree_map::Entry::Occupied(mut o) => {
                                let s = o.get().clone() + add;
                                if s.is_zero() {
                                    o.remove();
                                } else {
                                    *o.get_mut() = s;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero_mod(&self, p: &Polynomial<C>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Graded dimension with `deg x_i = 2`, shifted by `shift`.
    pub fn graded_dim(&self, shift: i32) -> Laurent<C> {
        let mut l = Laurent::zero();
        for m in &self.basis {
            l.add_term(m.degree() + shift, C::one());
        }
        l
    }

    /// Coordinates of the normal form of `p` in the monomial basis.
    pub fn coordinates(&self, p: &Polynomial<C>) -> Vec<(usize, C)> {
        let r = self.normal_form(p);
        r.terms().map(|(m, c)| (self.basis_index(m).expect("normal form is standard"), c.clone())).collect()
    }
}

/// All exponent vectors `lo_i <= j_i < hi_i`, ascending in monomial order.
pub fn box_monomials(lo: &[u32], hi: &[u32]) -> Vec<Monomial> {
    let n = lo.len();
    let mut out = Vec::new();
    if lo.iter().zip(hi).any(|(l, h)| l >= h) {
        return out;
    }
    let mut cur: Vec<u32> = lo.to_vec();
    loop {
        out.push(Monomial(cur.clone()));
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out;
            }
            cur[i] += 1;
            if cur[i] < hi[i] {
                break;
            }
            cur[i] = lo[i];
            i += 1;
        }
    }
}

/// Monomial basis of `Hom_R(R_b, R_{b'})`: morphisms `1 -> x^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomBasis {
    pub source: BSequence,
    pub target: BSequence,
    pub lower: Vec<u32>,
    pub monomials: Vec<Monomial>,
}

impl HomBasis {
    pub fn contains(&self, m: &Monomial) -> bool {
        m.0.iter().zip(&self.lower).zip(&self.target.0).all(|((j, c), b)| c <= j && j < b)
    }

    /// Graded dimension, counting `deg x_i = 2` plus `shift`.
    pub fn graded_dim<C: Scalar>(&self, shift: i32) -> Laurent<C> {
        let mut l = Laurent::zero();
        for m in &self.monomials {
            l.add_term(m.degree() + shift, C::one());
        }
        l
    }
}

/// `c_i = max(b'_i - b_i, 0)`.
pub fn hom_lower_bound(b: &BSequence, b_prime: &BSequence) -> Vec<u32> {
    b.0.iter().zip(&b_prime.0).map(|(x, y)| y.saturating_sub(*x)).collect()
}

pub fn hom_basis(b: &BSequence, b_prime: &BSequence) -> Result<HomBasis> {
    if b.n() != b_prime.n() {
        return Err(Error::VariableCount(b.n(), b_prime.n()));
    }
    let lower = hom_lower_bound(b, b_prime);
    let monomials = box_monomials(&lower, &b_prime.0);
    Ok(HomBasis { source: b.clone(), target: b_prime.clone(), lower, monomials })
}

/// The duality `Hom(R_b, R_{b'}) -> Hom(R_{b'}, R_b)`, sending `1 -> x^j`
/// to `1 -> x^{b-1} / x^{b'-1} * x^j`.
pub fn theta_dual(m: &Monomial, b: &BSequence, b_prime: &BSequence) -> Result<Monomial> {
    let mut e = Vec::with_capacity(m.n());
    for i in 0..m.n() {
        let v = m.0[i] as i64 + b.0[i] as i64 - b_prime.0[i] as i64;
        if v < 0 {
            return Err(Error::Internal(format!("theta image of {m} has negative exponent")));
        }
        e.push(v as u32);
    }
    let image = Monomial(e);
    let target = hom_basis(b_prime, b)?;
    if !target.contains(&image) {
        return Err(Error::Internal(format!("theta image {image} outside the target Hom basis")));
    }
    Ok(image)
}
