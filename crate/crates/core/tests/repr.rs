#![allow(clippy::needless_range_loop)]

mod common;

use common::blocks;
use forkalg::algebra::DiagramAlgebra;
use forkalg::polyring::Laurent;
use forkalg::repr::{
    cell, decomposition_matrix, lower_set, probe_independent, projective, proper_filtration, proper_standard,
    properly_stratified_check, quantum_factorial, radical_filtration, self_dual_projectives, self_duality, simple,
    standard, standard_filtration, GradedModule,
};
use forkalg::weights::Permutation;
use forkalg::{Int, IntDiagramAlgebra, IntGradedModule, LaurentV};

fn built(n: usize, k: usize) -> IntDiagramAlgebra {
    let alg = DiagramAlgebra::build(n, k).unwrap();
    alg.compute_all_products();
    alg
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn all_modules(alg: &IntDiagramAlgebra) -> Vec<IntGradedModule> {
    let mut out = Vec::new();
    for w in 0..alg.weights().len() {
        out.push(simple(alg, w));
        out.push(projective(alg, w));
        out.push(standard(alg, w));
        out.push(proper_standard(alg, w));
        for tau in 0..alg.perms().len() {
            out.push(cell(alg, w, tau));
        }
    }
    out
}

#[test]
fn quantum_factorial_values() {
    let lp = |s: &str| -> LaurentV { Laurent::parse(s).unwrap() };
    assert_eq!(quantum_factorial::<Int>(0), LaurentV::one());
    assert_eq!(quantum_factorial::<Int>(1), LaurentV::one());
    assert_eq!(quantum_factorial::<Int>(2), lp("1+v^2"));
    assert_eq!(quantum_factorial::<Int>(3), lp("1+2*v^2+2*v^4+v^6"));
    for k in 0..=6 {
        assert_eq!(quantum_factorial::<Int>(k).eval_one(), Int::from(factorial(k)));
        let by_length =
            Permutation::all(k).iter().fold(LaurentV::zero(), |acc, s| &acc + &LaurentV::v_pow(2 * s.length() as i32));
        assert_eq!(quantum_factorial::<Int>(k), by_length);
    }
}

#[test]
fn module_axioms() {
    for (n, k) in blocks(1..=3) {
        let alg = built(n, k);
        let pairs = alg.compatible_pairs();
        for m in all_modules(&alg) {
            m.check_axioms(&alg, &pairs).unwrap_or_else(|e| panic!("{}: {e}", m.name()));
        }
    }
    for k in 1..=3 {
        let alg = built(4, k);
        let pairs: Vec<(usize, usize)> = alg.compatible_pairs().into_iter().step_by(5).collect();
        for m in all_modules(&alg) {
            m.check_axioms(&alg, &pairs).unwrap_or_else(|e| panic!("{}: {e}", m.name()));
        }
    }
}

#[test]
fn dimensions_of_modules() {
    for (n, k) in blocks(1..=4) {
        let alg = built(n, k);
        let cartan = alg.graded_cartan();
        let qf = quantum_factorial::<Int>(k);
        let nw = alg.weights().len();
        for w in 0..nw {
            let l = simple(&alg, w);
            assert_eq!((l.dim(), l.degrees()), (1, &[0][..]));
            let p = projective(&alg, w);
            let column = (0..nw).fold(LaurentV::zero(), |acc, m| &acc + &cartan[m][w]);
            assert_eq!(p.graded_dim(), column);
            let cs = lower_set(&alg, w);
            let d = standard(&alg, w);
            let b = proper_standard(&alg, w);
            assert_eq!(d.dim(), factorial(k) * cs.len());
            assert_eq!(b.dim(), cs.len());
            assert_eq!(d.graded_dim(), &qf * &b.graded_dim());
            for (tau, s) in alg.perms().iter().enumerate() {
                let v = cell(&alg, w, tau);
                assert_eq!(v.graded_dim(), b.graded_dim().shift(2 * s.length() as i32));
            }
        }
    }
}

#[test]
fn identity_cell_module_is_the_proper_standard() {
    for (n, k) in blocks(1..=4) {
        let alg = built(n, k);
        let e = alg.perms().binary_search(&Permutation::identity(k)).unwrap();
        for w in 0..alg.weights().len() {
            let v = cell(&alg, w, e);
            let b = proper_standard(&alg, w);
            assert_eq!(v.degrees(), b.degrees());
            for x in 0..alg.dim() {
                for j in 0..v.dim() {
                    assert_eq!(v.act_basis(x, j), b.act_basis(x, j), "A_{n},{k} x={x} col={j}");
                }
            }
        }
    }
}

#[test]
fn standard_modules_do_not_depend_on_the_probe() {
    for (n, k) in blocks(1..=4) {
        let alg = built(n, k);
        for w in 0..alg.weights().len() {
            assert!(probe_independent(&alg, w), "A_{n},{k} weight {w}");
        }
    }
}

#[test]
fn decomposition_matrix_is_unitriangular() {
    for (n, k) in blocks(1..=5) {
        let alg: IntDiagramAlgebra = DiagramAlgebra::build(n, k).unwrap();
        let d = decomposition_matrix(&alg);
        let w = alg.weights();
        for l in 0..w.len() {
            assert_eq!(d[l][l], LaurentV::one());
            for m in 0..w.len() {
                if !d[l][m].is_zero() {
                    assert!(w[l].bruhat_leq(&w[m]).unwrap());
                }
            }
        }
    }
}

#[test]
fn filtrations_are_verified() {
    for (n, k) in blocks(1..=4) {
        let alg = built(n, k);
        for w in 0..alg.weights().len() {
            for f in [standard_filtration(&alg, w), proper_filtration(&alg, w), radical_filtration(&alg, w)] {
                assert!(f.verified(), "A_{n},{k} weight {w}: {:?}", f.failures);
            }
            let total: usize = standard_filtration(&alg, w).layers.iter().map(|l| l.size).sum();
            assert_eq!(total, projective(&alg, w).dim());
            assert_eq!(proper_filtration(&alg, w).layers.len(), factorial(k));
        }
    }
}

#[test]
fn properly_stratified() {
    for (n, k) in blocks(1..=4) {
        let r = properly_stratified_check(&built(n, k), true);
        assert!(r.passed(), "A_{n},{k}: {:?}", r.failures);
    }
    for k in 0..=5 {
        let r = properly_stratified_check(&built(5, k), false);
        assert!(r.passed(), "A_5,{k}: {:?}", r.failures);
    }
}

#[test]
fn self_dual_projectives_have_maximal_defect() {
    for (n, k) in blocks(1..=4) {
        let alg = built(n, k);
        assert_eq!(self_dual_projectives(&alg), alg.max_defect_weights(), "A_{n},{k}");
        for s in self_duality(&alg).into_iter().filter(|s| alg.weights()[s.weight].is_max_defect()) {
            assert!(s.palindromic, "A_{n},{k} weight {}", s.weight);
            assert!(s.socle_has_tilde, "A_{n},{k} weight {}", s.weight);
            assert_eq!(s.top_degree, alg.top_degree_formula(s.weight));
        }
    }
}

#[test]
fn direct_sums_and_shifts() {
    let alg = built(3, 1);
    let parts: Vec<IntGradedModule> = (0..alg.weights().len()).map(|w| projective(&alg, w)).collect();
    let sum = GradedModule::direct_sum("A".into(), &parts);
    assert_eq!(sum.dim(), alg.dim());
    sum.check_axioms(&alg, &alg.compatible_pairs()).unwrap();
    let shifted = parts[0].shifted(4);
    assert_eq!(shifted.graded_dim(), parts[0].graded_dim().shift(4));
    let chars = sum.character(&alg);
    let cartan = alg.graded_cartan();
    for (m, ch) in chars.iter().enumerate() {
        let row = cartan[m].iter().fold(LaurentV::zero(), |acc, c| &acc + c);
        assert_eq!(ch, &row);
    }
}
