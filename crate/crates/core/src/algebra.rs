//! The graded algebra `A_{n,k}` on oriented fork diagrams, with products
//! computed through Hom spaces between Soergel modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{
    diagram_degree, enhanced_lower_degree, is_oriented, max_orientation, monomial_to_diagram, orientations, p_monomial,
    Classified, SchubertTable,
};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::polyring::{Laurent, Monomial, Polynomial};
use crate::quotient::QuotientRing;
use crate::scalar::Scalar;
use crate::weights::{block, EnhancedWeight, Permutation, Weight};

/// A basis vector `(underline(lower) eta^sigma overline(upper))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BasisElement {
    pub lower: Weight,
    pub eta: Weight,
    pub sigma: Permutation,
    pub upper: Weight,
}

impl BasisElement {
    pub fn new(lower: Weight, eta: Weight, sigma: Permutation, upper: Weight) -> Result<Self> {
        if sigma.size() != eta.k() {
            return Err(Error::Invalid(format!("sigma {sigma} is not a permutation of {} letters", eta.k())));
        }
        if !is_oriented(&lower, &eta) || !is_oriented(&upper, &eta) {
            return Err(Error::Invalid(format!("({lower} {eta} {upper}) is not an oriented diagram")));
        }
        Ok(BasisElement { lower, eta, sigma, upper })
    }

    pub fn degree(&self) -> i32 {
        diagram_degree(&self.lower, &self.eta, &self.sigma, &self.upper).expect("basis elements are oriented")
    }

    /// The mirror diagram `(upper eta^sigma lower)`.
    pub fn star(&self) -> BasisElement {
        BasisElement {
            lower: self.upper.clone(),
            eta: self.eta.clone(),
            sigma: self.sigma.clone(),
            upper: self.lower.clone(),
        }
    }

    /// Parse `(lower=^v^ eta=^v^ sigma=2,1 upper=v^^)`.
    pub fn parse(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut fields: HashMap<&str, &str> = HashMap::new();
        for part in body.split_whitespace() {
            let (key, value) =
                part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, found {part:?}")))?;
            fields.insert(key, value);
        }
        let get =
            |key: &str| fields.get(key).copied().ok_or_else(|| Error::Parse(format!("missing field {key} in {s:?}")));
        let lower = Weight::parse(get("lower")?)?;
        let eta = Weight::parse(get("eta")?)?;
        let upper = Weight::parse(get("upper")?)?;
        let sigma_text = fields.get("sigma").copied().unwrap_or("");
        let sigma =
            if sigma_text.is_empty() { Permutation::identity(eta.k()) } else { Permutation::parse(sigma_text)? };
        BasisElement::new(lower, eta, sigma, upper)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma: Vec<String> = self.sigma.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "(lower={} eta={} sigma={} upper={})", self.lower, self.eta, sigma.join(","), self.upper)
    }
}

/// A sparse linear combination of basis vectors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element<C> {
    terms: BTreeMap<usize, C>,
}

impl<C: Scalar> Element<C> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, C::one())
    }

    pub fn term(i: usize, c: C) -> Self {
        let mut e = Self::zero();
        e.add_term(i, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, C)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (i, c) in it {
            e.add_term(i, c);
        }
        e
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &C)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn coeff(&self, i: usize) -> C {
        self.terms.get(&i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, i: usize, c: C) {
        if c.is_zero() {
            return;
        }
        let s = self.coeff(i) + c;
        if s.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, s);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(i, x)| (*i, x.clone() * c.clone())).collect() }
    }

    /// Dense coordinate vector of length `dim`.
    pub fn to_dense(&self, dim: usize) -> Vec<C> {
        let mut v = vec![C::zero(); dim];
        for (i, c) in self.terms() {
            v[i] = c.clone();
        }
        v
    }
}

type Terms<C> = Vec<(usize, C)>;
type Product<C> = Arc<Terms<C>>;

/// `A_{n,k}` with a fixed basis and memoized structure constants.
#[derive(Debug)]
pub struct DiagramAlgebra<C> {
    n: usize,
    k: usize,
    weights: Vec<Weight>,
    weight_index: HashMap<Weight, usize>,
    perms: Vec<Permutation>,
    table: SchubertTable,
    basis: Vec<BasisElement>,
    degrees: Vec<i32>,
    /// `(lower, eta, sigma, upper)` as weight and permutation indices.
    keys: Vec<(usize, usize, usize, usize)>,
    index: HashMap<(usize, usize, usize, usize), usize>,
    p_monos: Vec<Monomial>,
    rings: Vec<QuotientRing<C>>,
    by_lower: Vec<Vec<usize>>,
    by_upper: Vec<Vec<usize>>,
    idempotents: Vec<usize>,
    products: RwLock<HashMap<(usize, usize), Product<C>>>,
}

impl<C: Scalar> DiagramAlgebra<C> {
    /// Build `A_{n,k}`, refusing `n` above [`crate::size_cap`].
    pub fn build(n: usize, k: usize) -> Result<Self> {
        let cap = crate::size_cap();
        if n > cap {
            return Err(Error::Cap { n, cap });
        }
        if k > n {
            return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
        }
        let weights = block(n, k)?;
        let weight_index: HashMap<Weight, usize> = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let table = SchubertTable::new(k)?;
        let perms = table.perms().to_vec();
        let mut basis = Vec::new();
        let mut keys = Vec::new();
        for (ui, upper) in weights.iter().enumerate() {
            for (li, lower) in weights.iter().enumerate() {
                for eta in orientations(lower, upper) {
                    let ei = weight_index[&eta];
                    for (si, sigma) in perms.iter().enumerate() {
                        basis.push(BasisElement {
                            lower: lower.clone(),
                            eta: eta.clone(),
                            sigma: sigma.clone(),
                            upper: upper.clone(),
                        });
                        keys.push((li, ei, si, ui));
                    }
                }
            }
        }
        let index = keys.iter().copied().enumerate().map(|(i, key)| (key, i)).collect();
        let degrees = basis.iter().map(BasisElement::degree).collect();
        let p_monos =
            basis.iter().map(|b| p_monomial(&b.lower, &b.eta, &b.sigma, &table)).collect::<Result<Vec<_>>>()?;
        let rings = weights.iter().map(|w| QuotientRing::new(w.b_seq())).collect::<Result<Vec<_>>>()?;
        let mut by_lower = vec![Vec::new(); weights.len()];
        let mut by_upper = vec![Vec::new(); weights.len()];
        for (i, &(li, _, _, ui)) in keys.iter().enumerate() {
            by_lower[li].push(i);
            by_upper[ui].push(i);
        }
        let e = Permutation::identity(k);
        let idempotents = weights
            .iter()
            .enumerate()
            .map(|(wi, _)| {
                let si = perms.binary_search(&e).expect("identity permutation");
                keys.iter().position(|&key| key == (wi, wi, si, wi)).expect("identity diagram is a basis element")
            })
            .collect();
        Ok(DiagramAlgebra {
            n,
            k,
            weights,
            weight_index,
            perms,
            table,
            basis,
            degrees,
            keys,
            index,
            p_monos,
            rings,
            by_lower,
            by_upper,
            idempotents,
            products: RwLock::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight_index(&self, w: &Weight) -> Option<usize> {
        self.weight_index.get(w).copied()
    }

    /// `S_k` in lexicographic order.
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn schubert_table(&self) -> &SchubertTable {
        &self.table
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    /// `(lower, eta, sigma, upper)` indices of a basis vector.
    pub fn key(&self, i: usize) -> (usize, usize, usize, usize) {
        self.keys[i]
    }

    pub fn lower_of(&self, i: usize) -> usize {
        self.keys[i].0
    }

    pub fn upper_of(&self, i: usize) -> usize {
        self.keys[i].3
    }

    pub fn index_of(&self, b: &BasisElement) -> Option<usize> {
        let key = (
            self.weight_index(&b.lower)?,
            self.weight_index(&b.eta)?,
            self.perms.binary_search(&b.sigma).ok()?,
            self.weight_index(&b.upper)?,
        );
        self.index.get(&key).copied()
    }

    pub fn index_from_key(&self, key: (usize, usize, usize, usize)) -> Option<usize> {
        self.index.get(&key).copied()
    }

    /// Basis vectors whose lower weight is `weights()[w]`.
    pub fn with_lower(&self, w: usize) -> &[usize] {
        &self.by_lower[w]
    }

    /// Basis vectors whose upper weight is `weights()[w]`.
    pub fn with_upper(&self, w: usize) -> &[usize] {
        &self.by_upper[w]
    }

    /// Index of `e_lambda` for the weight `weights()[w]`.
    pub fn idempotent(&self, w: usize) -> usize {
        self.idempotents[w]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// The monomial `p_{lower eta^sigma}` naming basis vector `i` as a morphism.
    pub fn p_monomial(&self, i: usize) -> &Monomial {
        &self.p_monos[i]
    }

    /// The quotient ring `R_lambda` of `weights()[w]`.
    pub fn ring(&self, w: usize) -> &QuotientRing<C> {
        &self.rings[w]
    }

    pub fn one(&self) -> Element<C> {
        Element::from_terms(self.idempotents.iter().map(|&i| (i, C::one())))
    }

    /// Read a morphism `C_source -> C_target` given by a polynomial and
    /// express it in the basis, dropping illicit monomials.
    pub fn morphism_to_element(&self, poly: &Polynomial<C>, source: usize, target: usize) -> Result<Element<C>> {
        let reduced = self.rings[target].normal_form(poly);
        let mut out = Element::zero();
        for (m, c) in reduced.terms() {
            match monomial_to_diagram(m, &self.weights[source], &self.weights[target], &self.table)? {
                Classified::Illicit => {}
                Classified::Licit { eta, sigma } => {
                    let ei = self.weight_index[&eta];
                    let si = self.perms.binary_search(&sigma).expect("permutation in S_k");
                    let idx = self
                        .index
                        .get(&(target, ei, si, source))
                        .copied()
                        .ok_or_else(|| Error::Internal(format!("diagram ({target},{ei},{si},{source}) missing")))?;
                    out.add_term(idx, c.clone());
                }
            }
        }
        Ok(out)
    }

    fn compute_product(&self, i: usize, j: usize) -> Vec<(usize, C)> {
        let (a, _, _, b) = self.keys[i];
        let (c, _, _, d) = self.keys[j];
        if b != c {
            return Vec::new();
        }
        let m = self.p_monos[i].mul(&self.p_monos[j]);
        let poly = Polynomial::monomial(m);
        let e = self
            .morphism_to_element(&poly, d, a)
            .unwrap_or_else(|err| panic!("product of basis vectors {i} and {j}: {err}"));
        e.terms().map(|(t, x)| (t, x.clone())).collect()
    }

    /// Structure constants of the product of basis vectors `i` and `j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Product<C> {
        if self.keys[i].3 != self.keys[j].0 {
            return Arc::new(Vec::new());
        }
        if let Some(p) = self.products.read().expect("product cache").get(&(i, j)) {
            return p.clone();
        }
        let p = Arc::new(self.compute_product(i, j));
        self.products.write().expect("product cache").insert((i, j), p.clone());
        p
    }

    /// Fill the product cache for every pair with matching inner weights.
    pub fn compute_all_products(&self) {
        let pairs: Vec<(usize, usize)> = self.compatible_pairs();
        let computed: Vec<((usize, usize), Product<C>)> =
            pairs.par_iter().map(|&(i, j)| ((i, j), Arc::new(self.compute_product(i, j)))).collect();
        let mut cache = self.products.write().expect("product cache");
        for (key, p) in computed {
            cache.insert(key, p);
        }
    }

    /// All basis pairs `(i, j)` with `upper(i) = lower(j)`, in lexicographic order.
    pub fn compatible_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for &j in &self.by_lower[self.keys[i].3] {
                out.push((i, j));
            }
        }
        out
    }

    pub fn mul(&self, x: &Element<C>, y: &Element<C>) -> Element<C> {
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            let b = self.keys[i].3;
            for (j, c) in y.terms() {
                if self.keys[j].0 != b {
                    continue;
                }
                for (t, s) in self.basis_product(i, j).iter() {
                    out.add_term(*t, a.clone() * c.clone() * s.clone());
                }
            }
        }
        out
    }

    pub fn star_index(&self, i: usize) -> usize {
        let (l, e, s, u) = self.keys[i];
        self.index[&(u, e, s, l)]
    }

    pub fn star(&self, x: &Element<C>) -> Element<C> {
        Element::from_terms(x.terms().map(|(i, c)| (self.star_index(i), c.clone())))
    }

    /// The common degree of the terms of `x`, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self, x: &Element<C>) -> Option<i32> {
        let mut it = x.terms().map(|(i, _)| self.degrees[i]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// `grdim e_lambda A e_mu` for all pairs of weights.
    pub fn graded_cartan(&self) -> Vec<Vec<Laurent<C>>> {
        let w = self.weights.len();
        let mut m = vec![vec![Laurent::zero(); w]; w];
        for (i, &(l, _, _, u)) in self.keys.iter().enumerate() {
            m[l][u].add_term(self.degrees[i], C::one());
        }
        m
    }

    /// `k(k-1) + 2 defect(lambda)`, the top degree of `e_lambda A e_lambda`.
    pub fn top_degree_formula(&self, w: usize) -> i32 {
        let k = self.k as i32;
        k * (k - 1) + 2 * self.weights[w].defect() as i32
    }

    /// The chosen top element of `e_lambda A e_lambda`: every down rightmost on
    /// its fork and `sigma` the longest permutation.
    pub fn xi_max(&self, w: usize) -> usize {
        let lambda = &self.weights[w];
        let eta = max_orientation(lambda);
        let key = (
            w,
            self.weight_index[&eta],
            self.perms.binary_search(&Permutation::longest(self.k)).expect("longest permutation"),
            w,
        );
        self.index[&key]
    }

    /// `Theta_lambda(x y)`: coefficient of `xi_max(lambda)` in `e_lambda x y e_lambda`.
    pub fn theta_lambda(&self, w: usize, x: &Element<C>, y: &Element<C>) -> C {
        self.mul(x, y).coeff(self.xi_max(w))
    }

    /// `theta(x, y)`: the sum of `Theta_lambda(x y)` over maximal-defect `lambda`.
    pub fn theta(&self, x: &Element<C>, y: &Element<C>) -> C {
        let xy = self.mul(x, y);
        self.max_defect_weights().into_iter().fold(C::zero(), |acc, w| acc + xy.coeff(self.xi_max(w)))
    }

    pub fn max_defect_weights(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&w| self.weights[w].is_max_defect()).collect()
    }

    /// Gram matrix of `Theta_lambda` on the basis of `e_lambda A e_lambda`.
    pub fn theta_gram_lambda(&self, w: usize) -> (Vec<usize>, Vec<Vec<C>>) {
        let idx: Vec<usize> = self.by_lower[w].iter().copied().filter(|&i| self.keys[i].3 == w).collect();
        let xi = self.xi_max(w);
        let gram = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| {
                        let p = self.basis_product(i, j);
                        p.iter().find(|(t, _)| *t == xi).map(|(_, c)| c.clone()).unwrap_or_else(C::zero)
                    })
                    .collect()
            })
            .collect();
        (idx, gram)
    }

    /// Gram matrix of `theta` between `e_def A` (rows) and `A e_def` (columns).
    pub fn theta_gram_def(&self) -> (Vec<usize>, Vec<usize>, Vec<Vec<C>>) {
        let defs = self.max_defect_weights();
        let rows: Vec<usize> = defs.iter().flat_map(|&w| self.by_lower[w].iter().copied()).collect();
        let cols: Vec<usize> = defs.iter().flat_map(|&w| self.by_upper[w].iter().copied()).collect();
        let xis: Vec<usize> = defs.iter().map(|&w| self.xi_max(w)).collect();
        let gram = rows
            .par_iter()
            .map(|&i| {
                cols.iter()
                    .map(|&j| {
                        let p = self.basis_product(i, j);
                        p.iter().filter(|(t, _)| xis.contains(t)).fold(C::zero(), |acc, (_, c)| acc + c.clone())
                    })
                    .collect()
            })
            .collect();
        (rows, cols, gram)
    }

    /// Verify the graded cellular structure with cells `lambda^sigma`.
    pub fn check_cellular(&self) -> CellularReport {
        let mut report = CellularReport::default();
        let cells: Vec<EnhancedWeight> = self
            .weights
            .iter()
            .flat_map(|w| self.perms.iter().map(move |s| EnhancedWeight { weight: w.clone(), sigma: s.clone() }))
            .collect();

        // The cell order: irreflexive and transitive; the quoted preorder is recorded too.
        let mut strict_ok = true;
        let mut antisymmetric = true;
        for a in &cells {
            if a.strictly_above(a) {
                strict_ok = false;
            }
            for b in &cells {
                if a != b && a.preceq(b) && b.preceq(a) {
                    antisymmetric = false;
                }
                if a.strictly_above(b) && b.strictly_above(a) {
                    strict_ok = false;
                }
                if a.strictly_above(b) {
                    for c in &cells {
                        if b.strictly_above(c) && !a.strictly_above(c) {
                            strict_ok = false;
                        }
                    }
                }
            }
        }
        report.gc1_order = strict_ok;
        report.preorder_antisymmetric = antisymmetric;
        if !strict_ok {
            report.failures.push("cell order is not a strict partial order".into());
        }

        // Index sets, injectivity and the basis property.
        let mut seen = vec![false; self.dim()];
        let mut count = 0;
        for cell in &cells {
            let iset: Vec<&Weight> = self.weights.iter().filter(|a| is_oriented(a, &cell.weight)).collect();
            for a in &iset {
                for b in &iset {
                    let be = BasisElement {
                        lower: (*a).clone(),
                        eta: cell.weight.clone(),
                        sigma: cell.sigma.clone(),
                        upper: (*b).clone(),
                    };
                    match self.index_of(&be) {
                        Some(i) if !seen[i] => {
                            seen[i] = true;
                            count += 1;
                        }
                        _ => report.failures.push(format!("cell datum element {be} missing or repeated")),
                    }
                }
            }
        }
        report.gc2_gc3_basis = count == self.dim() && seen.iter().all(|&s| s);

        // Anti-automorphism: C_{i,j} -> C_{j,i} is the star map and reverses products.
        let pairs = self.compatible_pairs();
        let star_ok = pairs.par_iter().all(|&(i, j)| {
            let lhs = self.star(&self.mul(&Element::basis(i), &Element::basis(j)));
            let rhs = self.mul(&Element::basis(self.star_index(j)), &Element::basis(self.star_index(i)));
            lhs == rhs
        }) && (0..self.dim()).all(|i| {
            let s = self.star_index(i);
            let (l, e, p, u) = self.keys[i];
            self.keys[s] == (u, e, p, l)
        });
        report.gc4_anti = star_ok;
        if !star_ok {
            report.failures.push("star is not an anti-automorphism".into());
        }

        // Grading from the cell degree function.
        let mut grading_ok = true;
        for (i, b) in self.basis.iter().enumerate() {
            let ls = b.sigma.length() as i32;
            let da = enhanced_lower_degree(&b.lower, &b.eta, &b.sigma).expect("oriented") - ls;
            let db = enhanced_lower_degree(&b.upper, &b.eta, &b.sigma).expect("oriented") - ls;
            if da + db != self.degrees[i] {
                grading_ok = false;
            }
        }
        let additive = pairs.par_iter().all(|&(i, j)| {
            self.basis_product(i, j).iter().all(|(t, _)| self.degrees[*t] == self.degrees[i] + self.degrees[j])
        });
        report.gc6_grading = grading_ok && additive;
        if !report.gc6_grading {
            report.failures.push("degrees are not additive".into());
        }

        // x C^{mu^tau}_{alpha,beta} modulo higher cells, with scalars independent of beta.
        type Key = (usize, usize, usize, usize);
        type Entry<C> = (Key, usize, Terms<C>);
        let results: Vec<(bool, Vec<Entry<C>>, Vec<String>)> = pairs
            .par_iter()
            .map(|&(x, c)| {
                let (_, ce, cs, cu) = self.keys[c];
                let cell = EnhancedWeight { weight: self.weights[ce].clone(), sigma: self.perms[cs].clone() };
                let mut same = Vec::new();
                let mut ok = true;
                let mut msgs = Vec::new();
                for (t, coeff) in self.basis_product(x, c).iter() {
                    let (tl, te, ts, tu) = self.keys[*t];
                    if tu != cu {
                        ok = false;
                        msgs.push(format!("product {x}*{c} changes the upper weight"));
                    }
                    if te == ce && ts == cs {
                        same.push((tl, coeff.clone()));
                    } else {
                        let other = EnhancedWeight { weight: self.weights[te].clone(), sigma: self.perms[ts].clone() };
                        if !other.strictly_above(&cell) {
                            ok = false;
                            msgs.push(format!("product {x}*{c} has a term {t} outside higher cells"));
                        }
                    }
                }
                let alpha = self.keys[c].0;
                (ok, vec![((x, alpha, ce, cs), cu, same)], msgs)
            })
            .collect();
        let mut gc5 = true;
        let mut groups: BTreeMap<Key, Vec<(usize, Terms<C>)>> = BTreeMap::new();
        for (ok, entries, msgs) in results {
            gc5 &= ok;
            report.failures.extend(msgs);
            for (key, beta, v) in entries {
                groups.entry(key).or_default().push((beta, v));
            }
        }
        report.gc5 = gc5;
        let mut indep = true;
        for ((x, alpha, ce, cs), list) in &groups {
            let mut betas: Vec<usize> = self
                .weights
                .iter()
                .enumerate()
                .filter(|(_, b)| is_oriented(b, &self.weights[*ce]))
                .map(|(i, _)| i)
                .collect();
            betas.sort();
            let first = &list[0].1;
            if list.iter().any(|(_, v)| v != first) || list.len() != betas.len() {
                indep = false;
                report
                    .failures
                    .push(format!("scalars for x={x} on cell ({alpha},{ce},{cs}) depend on the upper index"));
            }
        }
        report.gc5_independent = indep;

        // Products with b = overline(lambda) and sigma = e land exactly on (a mu^tau d).
        let e_idx = self.perms.binary_search(&Permutation::identity(self.k)).expect("identity");
        report.leading_rule = pairs.par_iter().all(|&(x, c)| {
            let (a, le, ls, b) = self.keys[x];
            let (_, me, mt, d) = self.keys[c];
            if le != b || ls != e_idx {
                return true;
            }
            match self.index.get(&(a, me, mt, d)) {
                Some(&target) => {
                    let p = self.basis_product(x, c);
                    p.len() == 1 && p[0].0 == target && p[0].1.is_one()
                }
                None => true,
            }
        });
        if !report.leading_rule {
            report.failures.push("the identity-enhanced leading rule fails".into());
        }
        report
    }

    /// Stable serialization of the basis and all nonzero structure constants.
    pub fn export(&self) -> Result<ExportedAlgebra> {
        self.compute_all_products();
        let basis = self
            .basis
            .iter()
            .zip(&self.degrees)
            .map(|(b, &degree)| ExportedBasis {
                lower: b.lower.to_string(),
                eta: b.eta.to_string(),
                sigma: b.sigma.one_line().to_vec(),
                upper: b.upper.to_string(),
                degree,
            })
            .collect();
        let mut products = Vec::new();
        for (i, j) in self.compatible_pairs() {
            let p = self.basis_product(i, j);
            if p.is_empty() {
                continue;
            }
            let mut terms = Vec::with_capacity(p.len());
            for (t, c) in p.iter() {
                let c = c.to_i64().ok_or_else(|| Error::Internal(format!("coefficient {c} exceeds i64")))?;
                terms.push((*t, c));
            }
            products.push((i, j, terms));
        }
        Ok(ExportedAlgebra { n: self.n, k: self.k, basis, products })
    }
}

/// Outcome of the cellularity verification.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CellularReport {
    pub gc1_order: bool,
    /// Whether the quoted preorder on enhanced weights is antisymmetric.
    pub preorder_antisymmetric: bool,
    pub gc2_gc3_basis: bool,
    pub gc4_anti: bool,
    pub gc5: bool,
    pub gc5_independent: bool,
    pub gc6_grading: bool,
    pub leading_rule: bool,
    pub failures: Vec<String>,
}

impl CellularReport {
    pub fn passed(&self) -> bool {
        self.gc1_order
            && self.gc2_gc3_basis
            && self.gc4_anti
            && self.gc5
            && self.gc5_independent
            && self.gc6_grading
            && self.leading_rule
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExportedBasis {
    pub lower: String,
    pub eta: String,
    pub sigma: Vec<usize>,
    pub upper: String,
    pub degree: i32,
}

/// The JSON form `{n, k, basis, products}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ExportedAlgebra {
    pub n: usize,
    pub k: usize,
    pub basis: Vec<ExportedBasis>,
    pub products: Vec<ExportedProduct>,
}

/// Structure constants `(i, j, [(t, c)])` of `b_i b_j = sum c b_t`.
pub type ExportedProduct = (usize, usize, Vec<(usize, i64)>);

impl ExportedAlgebra {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl<C: Scalar> DiagramAlgebra<C> {
    /// Human readable form of an element, one signed term per basis vector.
    pub fn render(&self, x: &Element<C>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in x.terms() {
            parts.push(format!("{} * {}", c, self.basis[i]));
        }
        parts.join("\n")
    }
}

impl<C: Scalar> Element<C> {
    /// Whether all coefficients vanish after reduction against `span`.
    pub fn in_span(&self, span: &Echelon<C>) -> bool {
        span.contains(&self.to_dense(span.ncols))
    }
}
