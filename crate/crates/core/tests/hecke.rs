use forkalg::hecke::{
    a_sequence, cor34_count, cor34_indices, explicit_c, explicit_c_term_count, factorial, graded_dim_soergel, sj_wk_z,
    wk_z, BarCache, HeckeElement, KlTable, WordChoice,
};
use forkalg::polyring::Laurent;
use forkalg::quotient::QuotientRing;
use forkalg::weights::{block, Permutation, Weight};
use forkalg::{Int, IntHeckeElement, LaurentV};
use proptest::prelude::*;

fn h(w: &[usize]) -> IntHeckeElement {
    HeckeElement::standard(Permutation::new(w.to_vec()).unwrap())
}

fn gen(n: usize, i: usize) -> IntHeckeElement {
    HeckeElement::generator(n, i)
}

fn lp(s: &str) -> LaurentV {
    Laurent::parse(s).unwrap()
}

/// The characterization of the canonical basis: bar invariant, leading
/// coefficient one, every other coefficient in `v Z[v]`.
fn is_canonical_element(c: &IntHeckeElement, w: &Permutation, bar: &BarCache<Int>) -> bool {
    if c.bar_with(bar) != *c || c.coeff(w) != LaurentV::one() {
        return false;
    }
    c.terms().all(|(y, p)| y == w || (y.bruhat_leq(w) && p.min_exp().is_some_and(|e| e >= 1)))
}

#[test]
fn quadratic_and_braid_relations() {
    for n in 2..=5 {
        let one = HeckeElement::<Int>::one(n);
        for i in 1..n {
            let hi = gen(n, i);
            let lhs = hi.mul(&hi);
            let rhs = one.add(&hi.scale(&lp("v^-1-v")));
            assert_eq!(lhs, rhs, "H_{i}^2");
            let inverse = hi.add(&one.scale(&lp("v-v^-1")));
            assert_eq!(hi.mul(&inverse), one);
            for j in 1..n {
                let hj = gen(n, j);
                if i.abs_diff(j) == 1 {
                    assert_eq!(hi.mul(&hj).mul(&hi), hj.mul(&hi).mul(&hj));
                } else if i != j {
                    assert_eq!(hi.mul(&hj), hj.mul(&hi));
                }
            }
        }
    }
}

#[test]
fn standard_basis_multiplies_along_reduced_words() {
    for n in 1..=4 {
        for w in Permutation::all(n) {
            let mut x = HeckeElement::<Int>::one(n);
            for i in w.reduced_word() {
                x = x.mul(&gen(n, i));
            }
            assert_eq!(x, HeckeElement::standard(w));
        }
    }
}

#[test]
fn bar_involution_examples() {
    let n = 3;
    let bar = BarCache::<Int>::new(n);
    let h1 = gen(n, 1);
    let expected = h1.add(&HeckeElement::one(n).scale(&lp("v-v^-1")));
    assert_eq!(h1.bar_with(&bar), expected);
    let c1 = h1.add(&HeckeElement::one(n).scale(&lp("v")));
    assert_eq!(c1.bar_with(&bar), c1);
    for w in Permutation::all(n) {
        let hw = HeckeElement::<Int>::standard(w);
        assert_eq!(hw.bar_with(&bar).bar_with(&bar), hw);
    }
}

#[test]
fn canonical_basis_is_characterized() {
    for n in 1..=5 {
        let table = KlTable::<Int>::new(n);
        let bar = BarCache::<Int>::new(n);
        for w in Permutation::all(n) {
            let c = table.canonical(&w);
            assert!(is_canonical_element(&c, &w, &bar), "C_{w}");
        }
    }
}

#[test]
fn canonical_basis_small_cases() {
    let table = KlTable::<Int>::new(3);
    let s1 = Permutation::simple(3, 1);
    let c = table.canonical(&s1);
    assert_eq!(*c, h(&[2, 1, 3]).add(&HeckeElement::one(3).scale(&lp("v"))));
    let w0 = Permutation::longest(3);
    let cw0 = table.canonical(&w0);
    assert_eq!(cw0.len(), 6);
    for y in Permutation::all(3) {
        assert_eq!(cw0.coeff(&y), LaurentV::v_pow((3 - y.length()) as i32));
    }
    assert_eq!(table.kl_poly(&Permutation::identity(3), &w0), LaurentV::v_pow(3));
}

#[test]
fn longest_parabolic_canonical_element() {
    for n in 1..=6 {
        let table = KlTable::<Int>::new(n);
        for k in 0..=n {
            let wk = Permutation::longest_parabolic(n, k);
            let c = table.canonical(&wk);
            let l = wk.length();
            assert_eq!(c.len() as u64, factorial(k));
            for (y, p) in c.terms() {
                assert_eq!(*p, LaurentV::v_pow((l - y.length()) as i32), "C_w{k}, H_{y}");
            }
        }
    }
}

#[test]
fn explicit_formula_matches_inductive_construction() {
    for n in 1..=6 {
        let table = KlTable::<Int>::new(n);
        for k in 0..=n {
            for z in block(n, k).unwrap() {
                let w = wk_z(&z);
                let c = explicit_c::<Int>(&z);
                assert_eq!(*table.canonical(&w), c, "C_(w_k {z})");
                assert_eq!(c.coeff(&Permutation::identity(n)), LaurentV::v_pow(w.length() as i32));
                assert_eq!(c.len() as u64, explicit_c_term_count(&z));
                assert_eq!(c.coeff(&w), LaurentV::one());
            }
        }
    }
}

#[test]
fn kl_dimension_matches_quotient_ring() {
    for n in 1..=6 {
        let table = KlTable::<Int>::new(n);
        for k in 0..=n {
            for z in block(n, k).unwrap() {
                let b = z.b_seq();
                let term_count = factorial(k) * z.vee_dist().iter().map(|&d| d as u64 + 1).product::<u64>();
                assert_eq!(b.product(), term_count, "{z}");
                let soergel = graded_dim_soergel(&table, &z);
                assert_eq!(soergel.eval_one(), Int::from(b.product()));
                let ring = QuotientRing::<Int>::new(b).unwrap();
                assert_eq!(soergel, ring.graded_dim(-(wk_z(&z).length() as i32)), "{z}");
            }
        }
    }
}

#[test]
fn one_step_longer_elements() {
    for n in 2..=6 {
        let table = KlTable::<Int>::new(n);
        for k in 0..=n {
            for z in block(n, k).unwrap() {
                for j in cor34_indices(&z) {
                    let w = sj_wk_z(&z, j);
                    assert_eq!(w.length(), wk_z(&z).length() + 1);
                    let c = table.canonical(&w);
                    let count = cor34_count(&z, j).unwrap();
                    assert_eq!(c.len() as u64, count, "{z} j={j}");
                    let a = a_sequence(&z, j).unwrap();
                    assert_eq!(a.product(), count);
                    let sum = c.terms().fold(LaurentV::zero(), |acc, (_, p)| &acc + &p.at_v_squared());
                    assert_eq!(sum.eval_one(), Int::from(count));
                    let ring = QuotientRing::<Int>::new(a).unwrap();
                    assert_eq!(sum.shift(-(w.length() as i32)), ring.graded_dim(-(w.length() as i32)), "{z} j={j}");
                }
            }
        }
    }
    let z = Weight::parse("v^^v").unwrap();
    assert!(cor34_count(&z, 3).is_err());
}

#[test]
fn word_choice_does_not_matter() {
    for n in 1..=5 {
        let a = KlTable::<Int>::with_choice(n, WordChoice::LexMin);
        let b = KlTable::<Int>::with_choice(n, WordChoice::LargestDescent);
        for w in Permutation::all(n) {
            assert_eq!(a.canonical(&w), b.canonical(&w), "C_{w}");
        }
    }
}

fn arb_element(n: usize) -> impl Strategy<Value = IntHeckeElement> {
    let perms = Permutation::all(n);
    let len = perms.len();
    prop::collection::vec((0..len, -2i32..3, -3i64..4), 0..4).prop_map(move |terms| {
        let mut x = HeckeElement::zero(n);
        for (i, e, c) in terms {
            x.add_term(perms[i].clone(), &Laurent::mono(e, Int::from(c)));
        }
        x
    })
}

proptest! {
    #[test]
    fn hecke_algebra_axioms(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        let bar = BarCache::<Int>::new(3);
        prop_assert_eq!(a.mul(&b).bar_with(&bar), a.bar_with(&bar).mul(&b.bar_with(&bar)));
        prop_assert_eq!(a.bar_with(&bar).bar_with(&bar), a);
    }
}
