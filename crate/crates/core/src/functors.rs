//! The bimodules `F_k` and `E_k` between `A_{n,k}` and `A_{n,k+1}`, the
//! homomorphism `Psi` they are built from, adjunction tables and the
//! comparison of their endomorphism rings with `C[x_1..x_n]/I_k`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{DiagramAlgebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::polyring::{complete_symmetric, Laurent, Monomial, Polynomial};
use crate::repr::{Column, GradedModule};
use crate::scalar::Scalar;
use crate::weights::{Sym, Weight};

/// `lambda^(up)`: replace the leading down of `lambda` by an up.
pub fn weight_lift(lambda: &Weight) -> Result<Weight> {
    if !lambda.starts_with(Sym::Down) {
        return Err(Error::Invalid(format!("{lambda} does not start with a down")));
    }
    Ok(lambda.flip_first())
}

/// `mu^(down)`: replace the leading up of `mu` by a down.
pub fn weight_drop(mu: &Weight) -> Result<Weight> {
    if !mu.starts_with(Sym::Up) {
        return Err(Error::Invalid(format!("{mu} does not start with an up")));
    }
    Ok(mu.flip_first())
}

/// Indices of the weights starting with a down, whose idempotents sum to `e^down`.
pub fn down_weights<C: Scalar>(alg: &DiagramAlgebra<C>) -> Vec<usize> {
    (0..alg.weights().len()).filter(|&w| alg.weights()[w].starts_with(Sym::Down)).collect()
}

/// Indices of the weights starting with an up, whose idempotents sum to `e^up`.
pub fn up_weights<C: Scalar>(alg: &DiagramAlgebra<C>) -> Vec<usize> {
    (0..alg.weights().len()).filter(|&w| alg.weights()[w].starts_with(Sym::Up)).collect()
}

/// The homomorphism `e^up A_{k+1} e^up -> e^down A_k e^down`, stored by its
/// values on the basis of `A_{k+1}` (zero off the `e^up` corner).
#[derive(Clone, Debug)]
pub struct Psi<C> {
    images: Vec<Element<C>>,
}

impl<C: Scalar> Psi<C> {
    /// Relabel both weights by `weight_drop` and read the same polynomial as a
    /// morphism of `A_k`, discarding monomials that become illicit.
    pub fn new(small: &DiagramAlgebra<C>, big: &DiagramAlgebra<C>) -> Result<Self> {
        check_pair(small, big)?;
        let images = (0..big.dim())
            .into_par_iter()
            .map(|i| {
                let (a, _, _, b) = big.key(i);
                let (wa, wb) = (&big.weights()[a], &big.weights()[b]);
                if !wa.starts_with(Sym::Up) || !wb.starts_with(Sym::Up) {
                    return Ok(Element::zero());
                }
                let target = small.weight_index(&weight_drop(wa)?).ok_or_else(|| missing(wa))?;
                let source = small.weight_index(&weight_drop(wb)?).ok_or_else(|| missing(wb))?;
                let poly = Polynomial::monomial(big.p_monomial(i).clone());
                small.morphism_to_element(&poly, source, target)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Psi { images })
    }

    pub fn image_of_basis(&self, i: usize) -> &Element<C> {
        &self.images[i]
    }

    pub fn apply(&self, x: &Element<C>) -> Element<C> {
        let mut out = Element::zero();
        for (i, c) in x.terms() {
            out = out.add(&self.images[i].scale(c));
        }
        out
    }

    /// Whether `Psi(xy) = Psi(x) Psi(y)` for the given basis pairs of `A_{k+1}`.
    pub fn multiplicative_on(
        &self,
        small: &DiagramAlgebra<C>,
        big: &DiagramAlgebra<C>,
        pairs: &[(usize, usize)],
    ) -> bool {
        pairs.par_iter().all(|&(x, y)| {
            let lhs = self.apply(&big.mul(&Element::basis(x), &Element::basis(y)));
            lhs == small.mul(&self.images[x], &self.images[y])
        })
    }

    /// Rank of the image in each degree against `grdim e^down A_k e^down`.
    pub fn image_graded_rank(&self, small: &DiagramAlgebra<C>, big: &DiagramAlgebra<C>) -> (Laurent<C>, Laurent<C>) {
        let downs = down_weights(small);
        let corner: Vec<usize> = (0..small.dim())
            .filter(|&i| downs.contains(&small.lower_of(i)) && downs.contains(&small.upper_of(i)))
            .collect();
        let mut target = Laurent::zero();
        for &i in &corner {
            target.add_term(small.degree(i), C::one());
        }
        let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for i in 0..big.dim() {
            if !self.images[i].is_zero() {
                by_degree.entry(big.degree(i)).or_default().push(i);
            }
        }
        let ranks: Vec<(i32, usize)> = by_degree
            .into_par_iter()
            .map(|(d, idx)| {
                let rows = idx.iter().map(|&i| self.images[i].to_dense(small.dim())).collect();
                (d, Echelon::new(small.dim(), rows).rank())
            })
            .collect();
        let mut image = Laurent::zero();
        for (d, r) in ranks {
            image.add_term(d, C::int(r as i64));
        }
        (image, target)
    }
}

fn missing(w: &Weight) -> Error {
    Error::Internal(format!("dropped weight of {w} is not in the smaller block"))
}

fn check_pair<C: Scalar>(small: &DiagramAlgebra<C>, big: &DiagramAlgebra<C>) -> Result<()> {
    if small.n() != big.n() || small.k() + 1 != big.k() {
        return Err(Error::Invalid(format!(
            "expected A_(n,k) and A_(n,k+1), got A_({},{}) and A_({},{})",
            small.n(),
            small.k(),
            big.n(),
            big.k()
        )));
    }
    Ok(())
}

/// A graded bimodule given by left and right action matrices on a common basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<C> {
    pub name: String,
    /// `(n, k)` of the algebra acting on the left.
    pub left_algebra: (usize, usize),
    /// `(n, k)` of the algebra acting on the right.
    pub right_algebra: (usize, usize),
    pub labels: Vec<String>,
    pub degrees: Vec<i32>,
    /// `left[x][j]`: `x . b_j`.
    pub left: Vec<Vec<Column<C>>>,
    /// `right[y][j]`: `b_j . y`.
    pub right: Vec<Vec<Column<C>>>,
}

fn apply_columns<C: Scalar>(cols: &[Column<C>], v: &BTreeMap<usize, C>) -> BTreeMap<usize, C> {
    let mut out: BTreeMap<usize, C> = BTreeMap::new();
    for (j, vc) in v {
        for (r, c) in &cols[*j] {
            let e = out.entry(*r).or_insert_with(C::zero);
            *e = e.clone() + vc.clone() * c.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn unit_vector<C: Scalar>(j: usize) -> BTreeMap<usize, C> {
    [(j, C::one())].into_iter().collect()
}

impl<C: Scalar> Bimodule<C> {
    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn graded_dim(&self) -> Laurent<C> {
        let mut l = Laurent::zero();
        for &d in &self.degrees {
            l.add_term(d, C::one());
        }
        l
    }

    /// The underlying left module.
    pub fn left_module(&self) -> GradedModule<C> {
        GradedModule::new(self.name.clone(), self.labels.clone(), self.degrees.clone(), self.left.clone())
    }

    /// `(x . b_j) . y = x . (b_j . y)` for every pair of basis vectors and every `j`,
    /// together with compatibility of both actions with the grading.
    pub fn check_commute(&self, left_degrees: &[i32], right_degrees: &[i32]) -> Result<()> {
        for (x, cols) in self.left.iter().enumerate() {
            for (j, col) in cols.iter().enumerate() {
                if col.iter().any(|(r, _)| self.degrees[*r] != self.degrees[j] + left_degrees[x]) {
                    return Err(Error::Verification(format!("{}: left action of {x} breaks the grading", self.name)));
                }
            }
        }
        for (y, cols) in self.right.iter().enumerate() {
            for (j, col) in cols.iter().enumerate() {
                if col.iter().any(|(r, _)| self.degrees[*r] != self.degrees[j] + right_degrees[y]) {
                    return Err(Error::Verification(format!("{}: right action of {y} breaks the grading", self.name)));
                }
            }
        }
        let bad = (0..self.left.len()).into_par_iter().find_any(|&x| {
            (0..self.right.len()).any(|y| {
                (0..self.dim()).any(|j| {
                    let v = unit_vector::<C>(j);
                    let xy = apply_columns(&self.right[y], &apply_columns(&self.left[x], &v));
                    let yx = apply_columns(&self.left[x], &apply_columns(&self.right[y], &v));
                    xy != yx
                })
            })
        });
        match bad {
            Some(x) => Err(Error::Verification(format!(
                "{}: left action of {x} does not commute with the right action",
                self.name
            ))),
            None => Ok(()),
        }
    }

    /// `b . (y z) = (b . y) . z` for the given basis pairs of the right algebra.
    pub fn check_right_module(&self, right: &DiagramAlgebra<C>, pairs: &[(usize, usize)]) -> Result<()> {
        let bad = pairs.par_iter().find_any(|&&(y, z)| {
            let yz = right.mul(&Element::basis(y), &Element::basis(z));
            (0..self.dim()).any(|j| {
                let v = unit_vector::<C>(j);
                let step = apply_columns(&self.right[z], &apply_columns(&self.right[y], &v));
                let mut direct: BTreeMap<usize, C> = BTreeMap::new();
                for (t, c) in yz.terms() {
                    for (r, rc) in apply_columns(&self.right[t], &v) {
                        let e = direct.entry(r).or_insert_with(C::zero);
                        *e = e.clone() + c.clone() * rc;
                    }
                }
                direct.retain(|_, c| !c.is_zero());
                step != direct
            })
        });
        match bad {
            Some((y, z)) => Err(Error::Verification(format!("{}: right action fails on pair ({y}, {z})", self.name))),
            None => Ok(()),
        }
    }

    /// Graded dimension of `left(x) right(y) M`, the image of the two commuting
    /// idempotent actions, computed as a trace.
    pub fn corner_dim(&self, x: usize, y: usize) -> Laurent<C> {
        let mut l = Laurent::zero();
        for j in 0..self.dim() {
            let img = apply_columns(&self.left[x], &apply_columns(&self.right[y], &unit_vector::<C>(j)));
            if let Some(c) = img.get(&j) {
                l.add_term(self.degrees[j], c.clone());
            }
        }
        l
    }
}

/// `F_k = A_k e^down` with the right action of `A_{k+1}` through `Psi`.
pub fn build_f<C: Scalar>(small: &DiagramAlgebra<C>, big: &DiagramAlgebra<C>, psi: &Psi<C>) -> Result<Bimodule<C>> {
    check_pair(small, big)?;
    let downs = down_weights(small);
    let basis: Vec<usize> = (0..small.dim()).filter(|&i| downs.contains(&small.upper_of(i))).collect();
    let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(p, &b)| (b, p)).collect();
    let to_columns = |e: &Element<C>| -> Column<C> { e.terms().map(|(t, c)| (pos[&t], c.clone())).collect() };
    let left: Vec<Vec<Column<C>>> = (0..small.dim())
        .into_par_iter()
        .map(|x| basis.iter().map(|&b| to_columns(&small.mul(&Element::basis(x), &Element::basis(b)))).collect())
        .collect();
    let right: Vec<Vec<Column<C>>> = (0..big.dim())
        .into_par_iter()
        .map(|y| {
            let py = psi.image_of_basis(y);
            basis.iter().map(|&b| to_columns(&small.mul(&Element::basis(b), py))).collect()
        })
        .collect();
    Ok(Bimodule {
        name: format!("F_{}", small.k()),
        left_algebra: (small.n(), small.k()),
        right_algebra: (big.n(), big.k()),
        labels: basis.iter().map(|&b| small.element(b).to_string()).collect(),
        degrees: basis.iter().map(|&b| small.degree(b)).collect(),
        left,
        right,
    })
}

/// `E_k`: `F_k` with both actions turned around by the anti-involutions `star`.
pub fn build_e<C: Scalar>(small: &DiagramAlgebra<C>, big: &DiagramAlgebra<C>, f: &Bimodule<C>) -> Bimodule<C> {
    let left = (0..big.dim()).map(|a| f.right[big.star_index(a)].clone()).collect();
    let right = (0..small.dim()).map(|b| f.left[small.star_index(b)].clone()).collect();
    let labels = f
        .labels
        .iter()
        .map(|l| crate::algebra::BasisElement::parse(l).map(|b| b.star().to_string()).unwrap_or_else(|_| l.clone()))
        .collect();
    Bimodule {
        name: format!("E_{}", small.k()),
        left_algebra: (big.n(), big.k()),
        right_algebra: (small.n(), small.k()),
        labels,
        degrees: f.degrees.clone(),
        left,
        right,
    }
}

/// For every weight `mu` of `A_{k+1}`: whether `F_k e_mu` is `A_k e_(mu^(down))`
/// when `mu` starts with an up and zero otherwise.
pub fn check_f_on_projectives<C: Scalar>(
    small: &DiagramAlgebra<C>,
    big: &DiagramAlgebra<C>,
    f: &Bimodule<C>,
) -> Vec<(usize, bool)> {
    (0..big.weights().len())
        .map(|mu| {
            let e = big.idempotent(mu);
            let image: Vec<usize> = (0..f.dim()).filter(|&j| !f.right[e][j].is_empty()).collect();
            let identity_on_image = image.iter().all(|&j| f.right[e][j] == vec![(j, C::one())]);
            let ok = match weight_drop(&big.weights()[mu]) {
                Err(_) => image.is_empty(),
                Ok(lam) => {
                    let Some(l) = small.weight_index(&lam) else { return (mu, false) };
                    let expected: Vec<String> =
                        small.with_upper(l).iter().map(|&b| small.element(b).to_string()).collect();
                    let got: Vec<String> = image.iter().map(|&j| f.labels[j].clone()).collect();
                    let p = crate::repr::projective(small, l);
                    let sub_degrees: Vec<i32> = image.iter().map(|&j| f.degrees[j]).collect();
                    identity_on_image && got == expected && sub_degrees == p.degrees()
                }
            };
            (mu, ok)
        })
        .collect()
}

/// One entry of the adjunction table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionEntry<C> {
    /// Weight index in `A_{k+1}`.
    pub mu: usize,
    /// Weight index in `A_k`.
    pub nu: usize,
    /// `grdim Hom_{A_k}(F P(mu), P(nu))`.
    pub lhs: Laurent<C>,
    /// `grdim Hom_{A_{k+1}}(P(mu), E P(nu))`.
    pub rhs: Laurent<C>,
}

/// Both sides of the hom-tensor adjunction on all pairs of projectives.
pub fn adjunction_table<C: Scalar>(
    small: &DiagramAlgebra<C>,
    big: &DiagramAlgebra<C>,
    e: &Bimodule<C>,
) -> Vec<AdjunctionEntry<C>> {
    let cartan = small.graded_cartan();
    let mut out = Vec::new();
    for mu in 0..big.weights().len() {
        for (nu, &idem) in small.idempotents().iter().enumerate() {
            let lhs = match weight_drop(&big.weights()[mu]).ok().and_then(|l| small.weight_index(&l)) {
                Some(l) => cartan[l][nu].clone(),
                None => Laurent::zero(),
            };
            let rhs = e.corner_dim(big.idempotent(mu), idem);
            out.push(AdjunctionEntry { mu, nu, lhs, rhs });
        }
    }
    out
}

/// Graded dimension of `B (x)_A M` by degreewise linear algebra on `B (x) M`
/// modulo the balancing relations.
pub fn tensor_graded_dim<C: Scalar>(b: &Bimodule<C>, m: &GradedModule<C>) -> Laurent<C> {
    let mut cells: BTreeMap<i32, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..b.dim() {
        for j in 0..m.dim() {
            cells.entry(b.degrees[i] + m.degree(j)).or_default().push((i, j));
        }
    }
    let dims: Vec<(i32, usize)> = cells
        .into_par_iter()
        .map(|(d, pairs)| {
            let col: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(c, &p)| (p, c)).collect();
            let mut ech = Echelon::new(pairs.len(), Vec::new());
            'outer: for x in 0..b.right.len() {
                for i in 0..b.dim() {
                    for j in 0..m.dim() {
                        let bx = &b.right[x][i];
                        let xm = m.act_basis(x, j);
                        let deg = match (bx.first(), xm.first()) {
                            (Some((r, _)), _) => b.degrees[*r] + m.degree(j),
                            (None, Some((r, _))) => b.degrees[i] + m.degree(*r),
                            (None, None) => continue,
                        };
                        if deg != d {
                            continue;
                        }
                        let mut row = vec![C::zero(); pairs.len()];
                        for (r, c) in bx {
                            row[col[&(*r, j)]] = row[col[&(*r, j)]].clone() + c.clone();
                        }
                        for (r, c) in xm {
                            row[col[&(i, *r)]] = row[col[&(i, *r)]].clone() - c.clone();
                        }
                        ech.insert(row);
                        if ech.rank() == pairs.len() {
                            break 'outer;
                        }
                    }
                }
            }
            (d, pairs.len() - ech.rank())
        })
        .collect();
    let mut l = Laurent::zero();
    for (d, k) in dims {
        l.add_term(d, C::int(k as i64));
    }
    l
}

/// The generators of `I_k`: `h_{k+1}` in at most `n-k` variables and
/// `h_{n-m+1}` in `m > n-k` variables, over every subset of variables.
pub fn ideal_generators<C: Scalar>(n: usize, k: usize) -> Vec<Polynomial<C>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let m = vars.len();
        let j = if m <= n - k { k + 1 } else { n - m + 1 };
        out.push(complete_symmetric(n, j as u32, &vars));
    }
    out
}

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if e.len() + 1 == n {
            e.push(left);
            out.push(Monomial(e.clone()));
            e.pop();
            return;
        }
        for a in (0..=left).rev() {
            e.push(a);
            go(n, left - a, e, out);
            e.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// `grdim C[x_1..x_n]/I_k` with `deg x_i = 2`, and the first polynomial degree
/// in which the quotient vanishes.
pub fn presentation_graded_dim<C: Scalar>(n: usize, k: usize) -> (Laurent<C>, u32) {
    let gens = ideal_generators::<C>(n, k);
    let mut out = Laurent::zero();
    let mut d = 0u32;
    loop {
        let monos = monomials_of_degree(n, d);
        let col: BTreeMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut ech = Echelon::new(monos.len(), Vec::new());
        for g in &gens {
            let Some((lead, _)) = g.leading_term() else { continue };
            let gd = lead.total();
            if gd > d {
                continue;
            }
            for shift in monomials_of_degree(n, d - gd) {
                let mut row = vec![C::zero(); monos.len()];
                for (m, c) in g.mul_monomial(&shift).terms() {
                    row[col[m]] = c.clone();
                }
                ech.insert(row);
                if ech.rank() == monos.len() {
                    break;
                }
            }
            if ech.rank() == monos.len() {
                break;
            }
        }
        let q = monos.len() - ech.rank();
        if q == 0 {
            return (out, d);
        }
        out.add_term(2 * d as i32, C::int(q as i64));
        d += 1;
    }
}

/// Basis indices of `e^down A_k e^down`.
pub fn down_corner<C: Scalar>(alg: &DiagramAlgebra<C>) -> Vec<usize> {
    let downs = down_weights(alg);
    (0..alg.dim()).filter(|&i| downs.contains(&alg.lower_of(i)) && downs.contains(&alg.upper_of(i))).collect()
}

/// Graded dimension of the space of `z` in the span of `candidates` with
/// `z g = g z` for every `g` in `tests`, one degree at a time.
fn commutant_graded_dim<C: Scalar>(alg: &DiagramAlgebra<C>, candidates: &[usize], tests: &[Element<C>]) -> Laurent<C> {
    let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for &i in candidates {
        by_degree.entry(alg.degree(i)).or_default().push(i);
    }
    let dims: Vec<(i32, usize)> = by_degree
        .into_par_iter()
        .map(|(d, idx)| {
            // Column c holds the commutators [b_c, g] stacked over all g.
            let mut rows: BTreeMap<(usize, usize), Vec<C>> = BTreeMap::new();
            for (c, &i) in idx.iter().enumerate() {
                let bi = Element::basis(i);
                for (gi, g) in tests.iter().enumerate() {
                    let comm = alg.mul(&bi, g).sub(&alg.mul(g, &bi));
                    for (t, coeff) in comm.terms() {
                        rows.entry((gi, t)).or_insert_with(|| vec![C::zero(); idx.len()])[c] = coeff.clone();
                    }
                }
            }
            let mut ech = Echelon::new(idx.len(), Vec::new());
            for (_, row) in rows {
                ech.insert(row);
                if ech.rank() == idx.len() {
                    break;
                }
            }
            (d, idx.len() - ech.rank())
        })
        .collect();
    let mut l = Laurent::zero();
    for (d, k) in dims {
        l.add_term(d, C::int(k as i64));
    }
    l
}

/// Graded dimension of the center of `e^down A_k e^down`.
pub fn center_graded_dim<C: Scalar>(alg: &DiagramAlgebra<C>) -> Laurent<C> {
    let corner = down_corner(alg);
    let tests: Vec<Element<C>> = corner.iter().map(|&i| Element::basis(i)).collect();
    commutant_graded_dim(alg, &corner, &tests)
}

/// Graded dimension of the bimodule endomorphisms of `F_k`: right
/// multiplications by `e^down A_k e^down` that commute with the right action
/// of every basis vector of `A_{k+1}`.
pub fn bimodule_end_graded_dim<C: Scalar>(small: &DiagramAlgebra<C>, psi: &Psi<C>, big_dim: usize) -> Laurent<C> {
    let corner = down_corner(small);
    let tests: Vec<Element<C>> = (0..big_dim).map(|y| psi.image_of_basis(y).clone()).filter(|e| !e.is_zero()).collect();
    commutant_graded_dim(small, &corner, &tests)
}

/// Graded dimensions of `Z(e^down A_k e^down)`, of `End(F_k)` and of
/// `C[x]/I_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport<C> {
    pub n: usize,
    pub k: usize,
    pub center: Laurent<C>,
    pub end_f: Laurent<C>,
    pub presentation: Laurent<C>,
    /// First polynomial degree in which `C[x]/I_k` vanishes.
    pub stabilization_degree: u32,
}

impl<C: Scalar> CenterReport<C> {
    pub fn passed(&self) -> bool {
        self.center == self.presentation && self.end_f == self.presentation
    }
}

pub fn center_vs_presentation<C: Scalar>(
    small: &DiagramAlgebra<C>,
    big: &DiagramAlgebra<C>,
    psi: &Psi<C>,
) -> CenterReport<C> {
    let (presentation, stabilization_degree) = presentation_graded_dim(small.n(), small.k());
    CenterReport {
        n: small.n(),
        k: small.k(),
        center: center_graded_dim(small),
        end_f: bimodule_end_graded_dim(small, psi, big.dim()),
        presentation,
        stabilization_degree,
    }
}

/// Everything built for one pair `A_{n,k}`, `A_{n,k+1}`.
#[derive(Debug)]
pub struct FunctorPair<C> {
    pub small: DiagramAlgebra<C>,
    pub big: DiagramAlgebra<C>,
    pub psi: Psi<C>,
    pub f: Bimodule<C>,
    pub e: Bimodule<C>,
}

impl<C: Scalar> FunctorPair<C> {
    pub fn build(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::Invalid(format!("functors need k < n, got n={n} k={k}")));
        }
        let small = DiagramAlgebra::build(n, k)?;
        let big = DiagramAlgebra::build(n, k + 1)?;
        let psi = Psi::new(&small, &big)?;
        let f = build_f(&small, &big, &psi)?;
        let e = build_e(&small, &big, &f);
        Ok(FunctorPair { small, big, psi, f, e })
    }
}
