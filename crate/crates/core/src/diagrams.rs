//! Fork diagrams, their orientations and degrees, Schubert monomials and
//! the bijection between oriented diagrams and licit Hom monomials.
//!
//! A lower fork diagram is always of the form `underline(lambda)` for a
//! weight of the block, so diagrams are handled through their weights.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};
use crate::quotient::{hom_basis, hom_lower_bound};
use crate::scalar::Scalar;
use crate::weights::{Permutation, Sym, Weight};

/// Leading monomials of the Schubert polynomials of `S_k`.
#[derive(Clone, Debug)]
pub struct SchubertTable {
    k: usize,
    perms: Vec<Permutation>,
    exponents: Vec<Vec<u32>>,
    inverse: HashMap<Vec<u32>, usize>,
}

impl SchubertTable {
    pub fn new(k: usize) -> Result<Self> {
        if k > 8 {
            return Err(Error::Cap { n: k, cap: 8 });
        }
        let perms = Permutation::all(k);
        let exponents: Vec<Vec<u32>> =
            perms.iter().map(|w| w.lehmer_code().into_iter().map(|c| c as u32).collect()).collect();
        let inverse = exponents.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ok(SchubertTable { k, perms, exponents, inverse })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Exponent vector of the leading Schubert monomial of `w`.
    pub fn exponents(&self, w: &Permutation) -> &[u32] {
        let i = self.index_of(w);
        &self.exponents[i]
    }

    fn index_of(&self, w: &Permutation) -> usize {
        self.perms.binary_search(w).expect("permutation of the table size")
    }

    /// The leading Schubert monomial as a monomial in `x_1..x_k`.
    pub fn monomial(&self, w: &Permutation) -> Monomial {
        Monomial(self.exponents(w).to_vec())
    }

    /// Permutation whose leading Schubert monomial has these exponents.
    pub fn lookup(&self, exps: &[u32]) -> Option<&Permutation> {
        self.inverse.get(exps).map(|&i| &self.perms[i])
    }
}

/// `c_i = #{j < w^-1(i) : w(j) > i}`, the exponent formula in its literal form.
pub fn quoted_schubert_exponents(w: &Permutation) -> Vec<u32> {
    let inv = w.inverse();
    (1..=w.size()).map(|i| (1..inv.apply(i)).filter(|&j| w.apply(j) > i).count() as u32).collect()
}

/// The Schubert polynomial `d_{w^-1 w_0}(x_1^{k-1} x_2^{k-2} ... x_{k-1})`,
/// where `d_{s_{a_1} ... s_{a_p}} = d_{a_1} o ... o d_{a_p}`.
pub fn schubert_polynomial<C: Scalar>(w: &Permutation) -> Polynomial<C> {
    let k = w.size();
    let delta = Monomial((0..k).map(|i| (k - 1 - i) as u32).collect());
    let u = w.inverse().compose(&Permutation::longest(k));
    let mut p = Polynomial::monomial(delta);
    for &a in u.reduced_word().iter().rev() {
        p = p.demazure(a);
    }
    p
}

/// A lower fork diagram: `rays` initial up-rays followed by forks, each a
/// run of consecutive vertices given as `(first, last)` (1-based).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ForkDiagram {
    pub n: usize,
    pub rays: usize,
    pub forks: Vec<(usize, usize)>,
}

impl ForkDiagram {
    pub fn fork_sizes(&self) -> Vec<usize> {
        self.forks.iter().map(|(a, b)| b - a + 1).collect()
    }

    /// One text line: `|` for rays and single-vertex forks, brackets for wider forks.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for _ in 0..self.rays {
            s.push('|');
        }
        for &(a, b) in &self.forks {
            if a == b {
                s.push('|');
            } else {
                s.push('[');
                for _ in a + 1..b {
                    s.push('-');
                }
                s.push(']');
            }
        }
        s
    }
}

impl fmt::Display for ForkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The unique lower fork diagram making `lambda` an orientation of degree 0:
/// initial ups become rays, every down starts a fork absorbing the ups after it.
pub fn underline(lambda: &Weight) -> ForkDiagram {
    let n = lambda.n();
    let vees = lambda.vee_pos();
    let rays = vees.first().map_or(n, |&p| p - 1);
    let mut forks = Vec::with_capacity(vees.len());
    for (j, &p) in vees.iter().enumerate() {
        let end = vees.get(j + 1).map_or(n, |&q| q - 1);
        forks.push((p, end));
    }
    ForkDiagram { n, rays, forks }
}

/// Whether `underline(lambda) eta` is oriented: initial rays carry ups and
/// every fork carries exactly one down.
pub fn is_oriented(lambda: &Weight, eta: &Weight) -> bool {
    if lambda.n() != eta.n() {
        return false;
    }
    let d = underline(lambda);
    if (1..=d.rays).any(|p| eta.at(p) != Sym::Up) {
        return false;
    }
    d.forks.iter().all(|&(a, b)| (a..=b).filter(|&p| eta.at(p) == Sym::Down).count() == 1)
}

/// The positional form `v^l_i <= v^e_i < v^l_{i+1}` with `v^l_{n-k+1} = n + 1`.
pub fn is_oriented_positional(lambda: &Weight, eta: &Weight) -> bool {
    if lambda.n() != eta.n() || lambda.k() != eta.k() {
        return false;
    }
    let l = lambda.vee_pos();
    let e = eta.vee_pos();
    let n = lambda.n();
    (0..l.len()).all(|i| l[i] <= e[i] && e[i] < l.get(i + 1).copied().unwrap_or(n + 1))
}

/// Existence of `eta` with `underline(lambda) eta overline(mu)` oriented.
pub fn orientable(lambda: &Weight, mu: &Weight) -> bool {
    let l = lambda.vee_pos();
    let m = mu.vee_pos();
    (0..l.len().saturating_sub(1)).all(|i| l[i] < m[i + 1] && m[i] < l[i + 1])
}

/// All `eta` with `underline(lambda) eta overline(mu)` oriented, in block order.
pub fn orientations(lambda: &Weight, mu: &Weight) -> Vec<Weight> {
    let n = lambda.n();
    let l = lambda.vee_pos();
    let m = mu.vee_pos();
    let h = l.len();
    let ranges: Vec<(usize, usize)> = (0..h)
        .map(|j| {
            let lo = l[j].max(m[j]);
            let hi = l.get(j + 1).copied().unwrap_or(n + 1).min(m.get(j + 1).copied().unwrap_or(n + 1)) - 1;
            (lo, hi)
        })
        .collect();
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = ranges.iter().map(|r| r.0).collect();
    loop {
        out.push(Weight::from_vee_pos(n, &cur).expect("orientation positions increase"));
        let mut i = h;
        loop {
            if i == 0 {
                out.sort_by_key(|w| w.block_key());
                return out;
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                    *c = ranges[j].0;
                }
                break;
            }
        }
    }
}

/// `deg(underline(lambda) eta)`: how far each down moved to the right.
pub fn lower_degree(lambda: &Weight, eta: &Weight) -> Result<i32> {
    if !is_oriented(lambda, eta) {
        return Err(Error::Invalid(format!("underline({lambda}) {eta} is not oriented")));
    }
    Ok(lambda.vee_pos().iter().zip(eta.vee_pos()).map(|(a, b)| (b - a) as i32).sum())
}

/// `deg(underline(lambda) eta^sigma)`.
pub fn enhanced_lower_degree(lambda: &Weight, eta: &Weight, sigma: &Permutation) -> Result<i32> {
    Ok(lower_degree(lambda, eta)? + 2 * sigma.length() as i32)
}

/// `deg(underline(alpha) eta^sigma overline(beta))`.
pub fn diagram_degree(alpha: &Weight, eta: &Weight, sigma: &Permutation, beta: &Weight) -> Result<i32> {
    Ok(lower_degree(alpha, eta)? + lower_degree(beta, eta)? + 2 * sigma.length() as i32)
}

/// `p_{underline(lambda) eta^sigma}`: the Schubert monomial of `sigma` in the
/// up-position variables of `eta`, times `x_{v^l_j} ... x_{v^e_j - 1}` for all `j`.
pub fn p_monomial(lambda: &Weight, eta: &Weight, sigma: &Permutation, table: &SchubertTable) -> Result<Monomial> {
    if !is_oriented(lambda, eta) {
        return Err(Error::Invalid(format!("underline({lambda}) {eta} is not oriented")));
    }
    let n = lambda.n();
    let mut e = vec![0u32; n];
    for (pos, x) in eta.wedge_pos().iter().zip(table.exponents(sigma)) {
        e[pos - 1] += x;
    }
    for (a, b) in lambda.vee_pos().iter().zip(eta.vee_pos()) {
        for slot in e.iter_mut().take(b - 1).skip(a - 1) {
            *slot += 1;
        }
    }
    Ok(Monomial(e))
}

/// The licit/illicit classification of a Hom monomial and the diagram it names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classified {
    Licit { eta: Weight, sigma: Permutation },
    Illicit,
}

/// For each `j`, the end `l_j` of the longest run `x_{v^mu_j} ... x_{l_j - 1}`
/// dividing `m`.
pub fn run_ends(m: &Monomial, mu: &Weight) -> Vec<usize> {
    let n = mu.n();
    mu.vee_pos()
        .iter()
        .map(|&start| {
            let mut end = start;
            while end <= n && m.exp(end) > 0 {
                end += 1;
            }
            end
        })
        .collect()
}

/// Classify `1 -> m` in `Hom(C_lambda, C_mu)` (source `lambda`, target `mu`) by
/// the run-length test and, if licit, return the diagram
/// `underline(mu) eta^sigma overline(lambda)` it corresponds to.
pub fn monomial_to_diagram(m: &Monomial, lambda: &Weight, mu: &Weight, table: &SchubertTable) -> Result<Classified> {
    let n = mu.n();
    let ends = run_ends(m, mu);
    let lv = lambda.vee_pos();
    let mv = mu.vee_pos();
    for (j, &l) in ends.iter().enumerate() {
        let bound = lv.get(j + 1).copied().unwrap_or(n + 1).min(mv.get(j + 1).copied().unwrap_or(n + 1));
        if l >= bound {
            return Ok(Classified::Illicit);
        }
    }
    let eta = Weight::from_vee_pos(n, &ends)?;
    if !is_oriented(mu, &eta) || !is_oriented(lambda, &eta) {
        return Err(Error::Internal(format!("licit monomial {m} gives an unoriented diagram")));
    }
    let base = p_monomial(mu, &eta, &Permutation::identity(eta.k()), table)?;
    let rest = base.div_into(m).ok_or_else(|| Error::Internal(format!("{base} does not divide {m}")))?;
    let mut exps = Vec::with_capacity(eta.k());
    for p in 1..=n {
        if eta.at(p) == Sym::Up {
            exps.push(rest.exp(p));
        } else if rest.exp(p) != 0 {
            return Err(Error::Internal(format!("{m} has a factor at the down position {p}")));
        }
    }
    let sigma =
        table.lookup(&exps).ok_or_else(|| Error::Internal(format!("{rest} is not a Schubert monomial")))?.clone();
    Ok(Classified::Licit { eta, sigma })
}

/// `p_{underline(mu) eta^sigma}` for the diagram `underline(mu) eta^sigma overline(lambda)`.
pub fn diagram_to_monomial(mu: &Weight, eta: &Weight, sigma: &Permutation, table: &SchubertTable) -> Result<Monomial> {
    p_monomial(mu, eta, sigma, table)
}

/// Licit monomials of `Hom(C_lambda, C_mu)` in the monomial basis order.
pub fn licit_monomials(
    lambda: &Weight,
    mu: &Weight,
    table: &SchubertTable,
) -> Result<Vec<(Monomial, Weight, Permutation)>> {
    let hb = hom_basis(&lambda.b_seq(), &mu.b_seq())?;
    let mut out = Vec::new();
    for m in hb.monomials {
        if let Classified::Licit { eta, sigma } = monomial_to_diagram(&m, lambda, mu, table)? {
            out.push((m, eta, sigma));
        }
    }
    Ok(out)
}

/// The whole Hom space is illicit when some `v^z_j >= v^z'_{j+1}` or
/// `v^z'_j >= v^z_{j+1}`.
pub fn illicit_case_i(z: &Weight, z_prime: &Weight) -> bool {
    let a = z.vee_pos();
    let b = z_prime.vee_pos();
    (0..a.len().saturating_sub(1)).any(|j| a[j] >= b[j + 1] || b[j] >= a[j + 1])
}

/// Generating illicit monomials `x_{v^z_j} ... x_{beta(j)} * x^c` of the
/// second case, for source `z` and target `z'`.
pub fn illicit_generators(z: &Weight, z_prime: &Weight) -> Vec<Monomial> {
    let n = z.n();
    let a = z.vee_pos();
    let b = z_prime.vee_pos();
    let c = hom_lower_bound(&z.b_seq(), &z_prime.b_seq());
    let h = a.len();
    (0..h)
        .map(|j| {
            let beta = if j + 1 < h { a[j + 1].min(b[j + 1]) - 1 } else { n };
            Monomial::chain(n, a[j], beta).mul(&Monomial(c.clone()))
        })
        .collect()
}

/// Minimal and maximal degree of `e_lambda A e_mu` by the closed formulas.
pub fn min_max_degree_formula(lambda: &Weight, mu: &Weight) -> (i32, i32) {
    let n = lambda.n() as i64;
    let k = lambda.k() as i64;
    let l = lambda.vee_pos();
    let m = mu.vee_pos();
    let h = l.len();
    let vmin = |i: usize| -> i64 {
        if i >= h {
            n + 1
        } else {
            l[i].min(m[i]) as i64
        }
    };
    let min: i64 = (0..h).map(|i| (l[i] as i64 - m[i] as i64).abs()).sum();
    let max: i64 = k * (k - 1)
        + (0..h).map(|i| (vmin(i + 1) - 1 - l[i] as i64).abs() + (vmin(i + 1) - 1 - m[i] as i64).abs()).sum::<i64>();
    (min as i32, max as i32)
}

/// The maximal-degree orientation of `underline(lambda)`: every down at the
/// right end of its fork.
pub fn max_orientation(lambda: &Weight) -> Weight {
    let d = underline(lambda);
    let ends: Vec<usize> = d.forks.iter().map(|&(_, b)| b).collect();
    Weight::from_vee_pos(lambda.n(), &ends).expect("fork ends increase")
}

/// Text picture of `underline(alpha) eta^sigma overline(beta)`: upper forks,
/// the weight, lower forks.
pub fn render_diagram(alpha: &Weight, eta: &Weight, sigma: &Permutation, beta: &Weight) -> String {
    format!("{}\n{}  sigma={}\n{}", underline(beta).render(), eta, sigma, underline(alpha).render())
}
