use std::collections::BTreeSet;

use forkalg::diagrams::{
    diagram_degree, diagram_to_monomial, enhanced_lower_degree, illicit_case_i, illicit_generators, is_oriented,
    is_oriented_positional, licit_monomials, lower_degree, max_orientation, min_max_degree_formula,
    monomial_to_diagram, orientable, orientations, p_monomial, quoted_schubert_exponents, schubert_polynomial,
    underline, Classified, ForkDiagram, SchubertTable,
};
use forkalg::polyring::{Monomial, Polynomial};
use forkalg::quotient::{hom_basis, QuotientRing};
use forkalg::weights::{block, Permutation, Weight};
use forkalg::{Int, IntPolynomial};

fn w(s: &str) -> Weight {
    Weight::parse(s).unwrap()
}

fn perm(v: &[usize]) -> Permutation {
    Permutation::new(v.to_vec()).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial(e.to_vec())
}

/// Orientations by scanning the whole block.
fn brute_orientations(lambda: &Weight, mu: &Weight) -> Vec<Weight> {
    block(lambda.n(), lambda.k())
        .unwrap()
        .into_iter()
        .filter(|eta| is_oriented(lambda, eta) && is_oriented(mu, eta))
        .collect()
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[test]
fn schubert_table_small_cases() {
    let t = SchubertTable::new(3).unwrap();
    let s = perm(&[2, 1, 3]);
    let tt = perm(&[1, 3, 2]);
    let cases = [
        (Permutation::identity(3), [0, 0, 0]),
        (s.clone(), [1, 0, 0]),
        (tt.clone(), [0, 1, 0]),
        (s.compose(&tt), [1, 1, 0]),
        (tt.compose(&s), [2, 0, 0]),
        (Permutation::longest(3), [2, 1, 0]),
    ];
    for (p, e) in cases {
        assert_eq!(t.exponents(&p), &e, "{p}");
        assert_eq!(t.lookup(&e), Some(&p));
    }
    assert_eq!(SchubertTable::new(0).unwrap().perms().len(), 1);
    assert!(SchubertTable::new(9).is_err());
}

#[test]
fn schubert_table_is_the_staircase_and_matches_demazure_operators() {
    for k in 0..=6 {
        let t = SchubertTable::new(k).unwrap();
        let mut seen = BTreeSet::new();
        for p in t.perms() {
            let e = t.exponents(p);
            assert!(e.iter().enumerate().all(|(i, &c)| c as usize <= k - 1 - i));
            assert_eq!(t.monomial(p).degree(), 2 * p.length() as i32);
            assert_eq!(quoted_schubert_exponents(&p.inverse()), e);
            seen.insert(e.to_vec());
        }
        assert_eq!(seen.len(), factorial(k));
    }
    for k in 1..=4 {
        let t = SchubertTable::new(k).unwrap();
        for p in t.perms() {
            let s: IntPolynomial = schubert_polynomial(p);
            let (top, c) = s.leading_term().unwrap();
            assert_eq!(top.0, t.exponents(p), "{p}");
            assert_eq!(c, &Int::from(1));
        }
    }
}

#[test]
fn underline_examples() {
    let d = underline(&w("^^v^^^vv^v"));
    assert_eq!(d, ForkDiagram { n: 10, rays: 2, forks: vec![(3, 6), (7, 7), (8, 9), (10, 10)] });
    assert_eq!(d.fork_sizes(), vec![4, 1, 2, 1]);
    assert_eq!(underline(&w("^^^^")), ForkDiagram { n: 4, rays: 4, forks: vec![] });
    for n in 1..=6 {
        for k in 0..=n {
            let blk = block(n, k).unwrap();
            let set: BTreeSet<String> = blk.iter().map(|x| format!("{:?}", underline(x))).collect();
            assert_eq!(set.len(), blk.len());
            for x in &blk {
                assert!(is_oriented(x, x));
                assert_eq!(lower_degree(x, x).unwrap(), 0);
            }
        }
    }
}

#[test]
fn orientation_examples() {
    assert!(!is_oriented(&w("^v^"), &w("v^^")));
    assert!(!is_oriented_positional(&w("^v^"), &w("v^^")));
    assert!(is_oriented(&w("v^^"), &w("^v^")));
    assert!(lower_degree(&w("^v^"), &w("v^^")).is_err());
}

#[test]
fn orientation_tests_agree() {
    for n in 1..=6 {
        for k in 0..=n {
            let blk = block(n, k).unwrap();
            for lam in &blk {
                for eta in &blk {
                    assert_eq!(is_oriented(lam, eta), is_oriented_positional(lam, eta), "{lam} {eta}");
                }
                for mu in &blk {
                    let brute = brute_orientations(lam, mu);
                    assert_eq!(orientations(lam, mu), brute, "{lam} {mu}");
                    assert_eq!(orientable(lam, mu), !brute.is_empty(), "{lam} {mu}");
                    assert_eq!(illicit_case_i(lam, mu), brute.is_empty(), "{lam} {mu}");
                }
            }
        }
    }
}

#[test]
fn degrees_of_the_running_example() {
    let alpha = w("^v^^^^v");
    let lam = w("^^v^^^v");
    let beta = w("v^^v^^^");
    assert_eq!(lower_degree(&alpha, &lam).unwrap(), 1);
    assert_eq!(lower_degree(&beta, &lam).unwrap(), 5);
    let e = Permutation::identity(5);
    assert_eq!(diagram_degree(&alpha, &lam, &e, &beta).unwrap(), 6);
    for s in Permutation::all(5).iter().step_by(7) {
        assert_eq!(diagram_degree(&alpha, &lam, s, &beta).unwrap(), 6 + 2 * s.length() as i32);
    }
}

#[test]
fn degree_and_polynomial_formulas() {
    for (n, k) in [(5, 2), (5, 3), (4, 2), (6, 3)] {
        let t = SchubertTable::new(k).unwrap();
        let blk = block(n, k).unwrap();
        for lam in &blk {
            for eta in blk.iter().filter(|eta| is_oriented(lam, eta)) {
                for s in t.perms() {
                    let expected = lam.length() as i32 - eta.length() as i32 + 2 * s.length() as i32;
                    assert_eq!(enhanced_lower_degree(lam, eta, s).unwrap(), expected);
                    let total = s.length() as i32 + lam.length() as i32 - eta.length() as i32;
                    assert_eq!(p_monomial(lam, eta, s, &t).unwrap().degree(), 2 * total);
                }
                assert_eq!(p_monomial(lam, lam, &Permutation::identity(k), &t).unwrap(), Monomial::one(n));
            }
        }
    }
}

#[test]
fn diagram_monomial_bijection() {
    for n in 1..=6 {
        for k in 0..=n {
            let t = SchubertTable::new(k).unwrap();
            let blk = block(n, k).unwrap();
            for lam in &blk {
                for mu in &blk {
                    let hb = hom_basis(&lam.b_seq(), &mu.b_seq()).unwrap();
                    let etas = brute_orientations(lam, mu);
                    let mut images = BTreeSet::new();
                    for eta in &etas {
                        for s in t.perms() {
                            let m = diagram_to_monomial(mu, eta, s, &t).unwrap();
                            assert!(hb.contains(&m), "{m} not in the Hom basis");
                            let back = monomial_to_diagram(&m, lam, mu, &t).unwrap();
                            assert_eq!(back, Classified::Licit { eta: eta.clone(), sigma: s.clone() });
                            let morphism_degree = m.degree() - mu.length() as i32 + lam.length() as i32;
                            assert_eq!(morphism_degree, diagram_degree(mu, eta, s, lam).unwrap());
                            images.insert(m);
                        }
                    }
                    let licit = licit_monomials(lam, mu, &t).unwrap();
                    assert_eq!(licit.len(), factorial(k) * etas.len(), "{lam} {mu}");
                    assert_eq!(licit.iter().map(|x| x.0.clone()).collect::<BTreeSet<_>>(), images);
                }
            }
        }
    }
}

#[test]
fn min_and_max_degrees() {
    for n in 1..=6 {
        for k in 0..=n {
            let t = SchubertTable::new(k).unwrap();
            let blk = block(n, k).unwrap();
            for lam in &blk {
                for mu in &blk {
                    let degrees: Vec<i32> = orientations(lam, mu)
                        .iter()
                        .flat_map(|eta| t.perms().iter().map(move |s| diagram_degree(lam, eta, s, mu).unwrap()))
                        .collect();
                    if let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) {
                        assert_eq!(min_max_degree_formula(lam, mu), (lo, hi), "{lam} {mu}");
                    }
                }
            }
        }
    }
}

#[test]
fn generators_of_illicit_morphisms_are_illicit() {
    for n in 1..=6 {
        for k in 0..=n {
            let t = SchubertTable::new(k).unwrap();
            let blk = block(n, k).unwrap();
            for z in &blk {
                for zp in blk.iter().filter(|zp| !illicit_case_i(z, zp)) {
                    for g in illicit_generators(z, zp) {
                        assert_eq!(
                            monomial_to_diagram(&g, z, zp, &t).unwrap(),
                            Classified::Illicit,
                            "{g}: {z} -> {zp}"
                        );
                    }
                }
            }
        }
    }
    assert!(illicit_case_i(&w("^vv^"), &w("vv^^")));
    assert!(!illicit_case_i(&w("^v^v"), &w("v^v^")));
}

#[test]
fn max_orientation_has_top_degree() {
    for n in 1..=6 {
        for k in 0..=n {
            for lam in block(n, k).unwrap() {
                let eta = max_orientation(&lam);
                let top = orientations(&lam, &lam).iter().map(|e| lower_degree(&lam, e).unwrap()).max().unwrap();
                assert_eq!(lower_degree(&lam, &eta).unwrap(), top);
                let k = k as i32;
                let w0 = Permutation::longest(lam.k());
                assert_eq!(diagram_degree(&lam, &eta, &w0, &lam).unwrap(), k * (k - 1) + 2 * lam.defect() as i32);
            }
        }
    }
}

#[test]
fn multiplication_example_steps() {
    let t = SchubertTable::new(3).unwrap();
    let a = w("v^^^v");
    let c = w("v^^v^");
    let mu = w("^v^v^");
    let d = w("v^v^^");
    assert_eq!(a.b_seq().0, vec![4, 3, 2, 1, 1]);
    assert_eq!(p_monomial(&c, &mu, &Permutation::identity(3), &t).unwrap(), mono(&[1, 0, 0, 0, 0]));
    let ring = QuotientRing::<Int>::new(a.b_seq()).unwrap();
    let nf = ring.normal_form(&Polynomial::monomial(mono(&[3, 0, 0, 1, 0])));
    assert_eq!(nf, Polynomial::parse("-x1^3*x2 - x1^3*x3", 5).unwrap());
    assert_eq!(monomial_to_diagram(&mono(&[3, 1, 0, 0, 0]), &d, &a, &t).unwrap(), Classified::Illicit);
    assert_eq!(
        monomial_to_diagram(&mono(&[3, 0, 1, 0, 0]), &d, &a, &t).unwrap(),
        Classified::Licit { eta: w("^v^^v"), sigma: Permutation::longest(3) }
    );
}
