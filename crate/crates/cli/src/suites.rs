//! Verification suites run by `forkalg verify`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use forkalg::algebra::{DiagramAlgebra, Element};
use forkalg::diagrams::{quoted_schubert_exponents, schubert_polynomial, SchubertTable};
use forkalg::functors::{adjunction_table, center_vs_presentation, check_f_on_projectives, FunctorPair};
use forkalg::hecke::{explicit_c, graded_dim_soergel, wk_z, KlTable};
use forkalg::linalg::determinant;
use forkalg::polyring::{Laurent, Monomial, Polynomial};
use forkalg::quotient::QuotientRing;
use forkalg::repr::{properly_stratified_check, self_dual_projectives};
use forkalg::weights::{block, Permutation};
use forkalg::{Int, IntDiagramAlgebra, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Polyring,
    Quotient,
    Hecke,
    Psi,
    Algebra,
    Cellular,
    Stratified,
    Duality,
    Functors,
    All,
}

/// One line of a suite report.
#[derive(Clone, Debug)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(suite: &'static str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { suite, name: name.into(), passed, detail: detail.into() }
    }
}

/// Run `suite` on `A_{n,k}` for every `k` in `ks`.
pub fn run(suite: Suite, n: usize, ks: &[usize]) -> Result<Vec<Check>> {
    let all = [
        Suite::Polyring,
        Suite::Quotient,
        Suite::Hecke,
        Suite::Psi,
        Suite::Algebra,
        Suite::Cellular,
        Suite::Stratified,
        Suite::Duality,
        Suite::Functors,
    ];
    let suites: Vec<Suite> = if suite == Suite::All { all.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::Polyring => out.extend(polyring(n)),
            Suite::Hecke => out.extend(hecke(n)?),
            _ => {
                for &k in ks {
                    match s {
                        Suite::Quotient => out.extend(quotient(n, k)?),
                        Suite::Psi | Suite::Functors if k < n => {
                            let fp = FunctorPair::<Int>::build(n, k)?;
                            out.extend(if s == Suite::Psi { psi(&fp) } else { functors(&fp) });
                        }
                        Suite::Psi | Suite::Functors => {}
                        _ => {
                            let alg = IntDiagramAlgebra::build(n, k)?;
                            alg.compute_all_products();
                            out.extend(match s {
                                Suite::Algebra => algebra(&alg),
                                Suite::Cellular => cellular(&alg),
                                Suite::Stratified => stratified(&alg),
                                _ => duality(&alg),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn polyring(n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let monos: Vec<Monomial> = forkalg::functors::monomials_of_degree(n, 3);
    let nil =
        (1..n).all(|i| monos.iter().all(|m| Polynomial::<Int>::monomial(m.clone()).demazure(i).demazure(i).is_zero()));
    out.push(Check::new("polyring", format!("demazure squares vanish, n={n}"), nil, ""));
    let braid = (1..n.saturating_sub(1)).all(|i| {
        monos.iter().all(|m| {
            let p = Polynomial::<Int>::monomial(m.clone());
            p.demazure(i).demazure(i + 1).demazure(i) == p.demazure(i + 1).demazure(i).demazure(i + 1)
        })
    });
    out.push(Check::new("polyring", format!("demazure braid relations, n={n}"), braid, ""));
    let k = n.min(5);
    let table = SchubertTable::new(k);
    let ok = table.is_ok_and(|t| {
        t.perms().iter().all(|w| {
            schubert_polynomial::<Int>(w).terms().next_back().is_some()
                && t.exponents(w) == quoted_schubert_exponents(&w.inverse()).as_slice()
        })
    });
    out.push(Check::new("polyring", format!("schubert table is the inverse code table, k={k}"), ok, ""));
    out
}

fn quotient(n: usize, k: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for z in block(n, k)? {
        let b = z.b_seq();
        let ring = QuotientRing::<Int>::new(b.clone())?;
        let dim_ok = ring.dim() as u64 == b.product() && ring.graded_dim(0).eval_one() == Int::from(b.product());
        let idem = ring.basis().iter().all(|m| {
            let p = Polynomial::monomial(m.mul(m));
            let nf = ring.normal_form(&p);
            ring.normal_form(&nf) == nf
        });
        out.push(Check::new(
            "quotient",
            format!("R_{z}: dim = prod b and nf idempotent"),
            dim_ok && idem,
            format!("b = {b}"),
        ));
    }
    Ok(out)
}

fn hecke(n: usize) -> Result<Vec<Check>> {
    let table = KlTable::<Int>::new(n);
    let mut out = Vec::new();
    for k in 0..=n {
        let mut ok = true;
        let mut dims = true;
        for z in block(n, k)? {
            let w = wk_z(&z);
            let c = explicit_c::<Int>(&z);
            ok &= *table.canonical(&w) == c && c.coeff(&Permutation::identity(n)) == Laurent::v_pow(w.length() as i32);
            let b = z.b_seq().product();
            dims &= graded_dim_soergel(&table, &z).eval_one() == Int::from(b);
        }
        out.push(Check::new("hecke", format!("explicit C = canonical C, n={n} k={k}"), ok, ""));
        out.push(Check::new("hecke", format!("KL dimension = prod b, n={n} k={k}"), dims, ""));
    }
    Ok(out)
}

fn psi(fp: &FunctorPair<Int>) -> Vec<Check> {
    let (n, k) = (fp.small.n(), fp.small.k());
    let pairs = fp.big.compatible_pairs();
    let step = (pairs.len() / 20_000).max(1);
    let sample: Vec<(usize, usize)> = pairs.iter().copied().step_by(step).collect();
    let mult = fp.psi.multiplicative_on(&fp.small, &fp.big, &sample);
    let (image, target) = fp.psi.image_graded_rank(&fp.small, &fp.big);
    vec![
        Check::new("psi", format!("psi multiplicative, n={n} k={k}"), mult, format!("{} pairs", sample.len())),
        Check::new(
            "psi",
            format!("psi surjective, n={n} k={k}"),
            image == target,
            format!("image {image}, target {target}"),
        ),
    ]
}

fn functors(fp: &FunctorPair<Int>) -> Vec<Check> {
    let (n, k) = (fp.small.n(), fp.small.k());
    let f144 = check_f_on_projectives(&fp.small, &fp.big, &fp.f).iter().all(|p| p.1);
    let mut out = vec![Check::new("functors", format!("F on projectives, n={n} k={k}"), f144, "")];
    if n <= 4 {
        let fc = fp.f.check_commute(fp.small.degrees(), fp.big.degrees());
        let ec = fp.e.check_commute(fp.big.degrees(), fp.small.degrees());
        let detail = [&fc, &ec].iter().filter_map(|r| r.as_ref().err().map(|e| e.to_string())).collect::<Vec<_>>();
        out.push(Check::new("functors", format!("bimodule axioms, n={n} k={k}"), detail.is_empty(), detail.join("; ")));
    }
    let adj = adjunction_table(&fp.small, &fp.big, &fp.e).iter().all(|e| e.lhs == e.rhs);
    out.push(Check::new("functors", format!("adjunction table, n={n} k={k}"), adj, ""));
    let c = center_vs_presentation(&fp.small, &fp.big, &fp.psi);
    out.push(Check::new(
        "functors",
        format!("center = C[x]/I_k, n={n} k={k}"),
        c.passed(),
        format!("center {}, End(F) {}, presentation {}", c.center, c.end_f, c.presentation),
    ));
    out
}

fn algebra(alg: &DiagramAlgebra<Int>) -> Vec<Check> {
    let (n, k) = (alg.n(), alg.k());
    let one = alg.one();
    let unit = (0..alg.dim()).all(|i| {
        let x = Element::basis(i);
        alg.mul(&one, &x) == x && alg.mul(&x, &one) == x
    });
    let pairs = alg.compatible_pairs();
    let grading = pairs.iter().all(|&(x, y)| {
        let d = alg.degree(x) + alg.degree(y);
        alg.basis_product(x, y).iter().all(|(t, _)| alg.degree(*t) == d)
    });
    let star = pairs.iter().all(|&(x, y)| {
        let xy = alg.mul(&Element::basis(x), &Element::basis(y));
        alg.star(&xy) == alg.mul(&alg.star(&Element::basis(y)), &alg.star(&Element::basis(x)))
    });
    let assoc = pairs.iter().all(|&(x, y)| {
        let xy = alg.mul(&Element::basis(x), &Element::basis(y));
        alg.with_lower(alg.upper_of(y)).iter().all(|&z| {
            let ez = Element::basis(z);
            alg.mul(&xy, &ez) == alg.mul(&Element::basis(x), &alg.mul(&Element::basis(y), &ez))
        })
    });
    vec![
        Check::new("algebra", format!("unit, n={n} k={k}"), unit, format!("dim {}", alg.dim())),
        Check::new("algebra", format!("grading additive, n={n} k={k}"), grading, ""),
        Check::new("algebra", format!("star anti-automorphism, n={n} k={k}"), star, ""),
        Check::new("algebra", format!("associativity, n={n} k={k}"), assoc, ""),
    ]
}

fn cellular(alg: &DiagramAlgebra<Int>) -> Vec<Check> {
    let r = alg.check_cellular();
    vec![Check::new(
        "cellular",
        format!("graded cellular datum, n={} k={}", alg.n(), alg.k()),
        r.passed(),
        r.failures.join("; "),
    )]
}

fn stratified(alg: &DiagramAlgebra<Int>) -> Vec<Check> {
    let r = properly_stratified_check(alg, alg.n() <= 4);
    vec![Check::new(
        "stratified",
        format!("properly stratified, n={} k={}", alg.n(), alg.k()),
        r.passed(),
        r.failures.join("; "),
    )]
}

fn duality(alg: &DiagramAlgebra<Int>) -> Vec<Check> {
    let (n, k) = (alg.n(), alg.k());
    let cartan = alg.graded_cartan();
    let nw = alg.weights().len();
    let symmetric = (0..nw).all(|a| (0..nw).all(|b| cartan[a][b] == cartan[b][a]));
    let top = (0..nw).all(|w| {
        let c = &cartan[w][w];
        let t = alg.top_degree_formula(w);
        c.max_exp() == Some(t) && c.coeff(t) == Int::from(1)
    });
    let md = alg.max_defect_weights();
    let local = md.iter().all(|&w| determinant(&alg.theta_gram_lambda(w).1) != Int::from(0));
    let (_, _, gram) = alg.theta_gram_def();
    let global = determinant(&gram) != Int::from(0);
    let sd: BTreeSet<usize> = self_dual_projectives(alg).into_iter().collect();
    let expected: BTreeSet<usize> = md.iter().copied().collect();
    vec![
        Check::new("duality", format!("cartan symmetric, n={n} k={k}"), symmetric, ""),
        Check::new("duality", format!("top degree k(k-1)+2 defect, n={n} k={k}"), top, ""),
        Check::new("duality", format!("theta non-degenerate, n={n} k={k}"), local && global, ""),
        Check::new(
            "duality",
            format!("self-dual projectives = max defect, n={n} k={k}"),
            sd == expected,
            format!("{sd:?}"),
        ),
    ]
}
