use std::collections::{BTreeSet, VecDeque};

use forkalg::quotient::BSequence;
use forkalg::weights::{block, block_cmp, EnhancedWeight, Permutation, Sym, Weight};
use proptest::prelude::*;

fn w(s: &str) -> Weight {
    Weight::parse(s).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Everything reachable from `x` by moving a down to the right past some up.
fn bruhat_upper_set(x: &Weight) -> BTreeSet<String> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([x.clone()]);
    seen.insert(x.to_string());
    while let Some(y) = queue.pop_front() {
        let s = y.symbols();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] == Sym::Down && s[j] == Sym::Up {
                    let mut t = s.to_vec();
                    t.swap(i, j);
                    let z = Weight::new(t);
                    if seen.insert(z.to_string()) {
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    seen
}

fn inversions(p: &Permutation) -> usize {
    let v = p.one_line();
    (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
}

#[test]
fn block_examples() {
    let names: Vec<String> = block(3, 2).unwrap().iter().map(|x| x.to_string()).collect();
    let set: BTreeSet<&str> = names.iter().map(|s| s.as_str()).collect();
    assert_eq!(set, BTreeSet::from(["^^v", "^v^", "v^^"]));
    assert_eq!(block(8, 4).unwrap().len(), 70);
    for n in 0..=8 {
        for k in 0..=n {
            let b = block(n, k).unwrap();
            assert_eq!(b.len(), binomial(n, k));
            assert!(b.windows(2).all(|p| block_cmp(&p[0], &p[1]).is_lt()));
            assert!(b.iter().all(|x| x.n() == n && x.k() == k));
        }
    }
}

#[test]
fn encodings_of_the_running_example() {
    let z = w("^^v^vv^v");
    assert_eq!(z.b_seq(), BSequence(vec![4, 3, 3, 2, 2, 2, 1, 1]));
    assert_eq!(z.wedge_dist(), vec![0, 0, 1, 3]);
    assert_eq!(z.vee_dist(), vec![2, 1, 1, 0]);
    assert_eq!(Weight::from_b_seq(&z.b_seq(), 4).unwrap(), z);
    assert_eq!(Weight::from_wedge_dist(8, &[0, 0, 1, 3]).unwrap(), z);
    assert_eq!(Weight::from_vee_dist(8, 4, &[2, 1, 1, 0]).unwrap(), z);
    assert_eq!(Weight::from_vee_pos(8, &[3, 5, 6, 8]).unwrap(), z);
    assert_eq!(w("^v").b_seq(), BSequence(vec![1, 1]));
    assert_eq!(w("v^").b_seq(), BSequence(vec![2, 1]));
}

#[test]
fn encodings_round_trip_on_every_block() {
    for n in 0..=7 {
        for k in 0..=n {
            for z in block(n, k).unwrap() {
                assert!(n == 0 || z.b_seq().is_b_class(k), "{z}");
                assert_eq!(Weight::from_b_seq(&z.b_seq(), k).unwrap(), z);
                assert_eq!(Weight::from_wedge_dist(n, &z.wedge_dist()).unwrap(), z);
                assert_eq!(Weight::from_vee_dist(n, k, &z.vee_dist()).unwrap(), z);
                assert_eq!(Weight::parse(&z.to_string()).unwrap(), z);
            }
        }
    }
}

#[test]
fn words_and_lengths() {
    for n in 1..=7 {
        for k in 0..=n {
            let e = Weight::identity(n, k);
            assert_eq!(e.length(), 0);
            for z in block(n, k).unwrap() {
                let p = z.to_permutation();
                assert_eq!(e.act(&p), z);
                assert_eq!(p.length(), z.length());
                assert_eq!(inversions(&p), z.length());
                assert_eq!(z.wedge_dist().iter().sum::<usize>(), z.length());
                assert_eq!(z.vee_dist().iter().sum::<usize>(), z.length());
                for word in [z.wedge_word(), z.vee_word()] {
                    assert_eq!(word.len(), z.length());
                    let q = Permutation::from_word(n, &word).unwrap();
                    assert_eq!(q.length(), word.len(), "{z}: {word:?} is reduced");
                    assert_eq!(q, p, "{z}: {word:?}");
                }
                let parabolic = Permutation::longest_parabolic(n, k);
                for i in 1..n {
                    assert_eq!(parabolic.has_right_descent(i), i < k);
                }
                assert_eq!(parabolic.length(), k * k.saturating_sub(1) / 2);
            }
        }
    }
}

#[test]
fn bruhat_order_matches_swap_closure() {
    for n in 1..=6 {
        for k in 0..=n {
            let blk = block(n, k).unwrap();
            for x in &blk {
                let up = bruhat_upper_set(x);
                for y in &blk {
                    assert_eq!(x.bruhat_leq(y).unwrap(), up.contains(&y.to_string()), "{x} <= {y}");
                }
            }
        }
    }
    assert!(w("^v").bruhat_leq(&w("^vv")).is_err());
}

#[test]
fn defect_and_tilde() {
    assert_eq!(w("v^^v").defect(), 2);
    assert_eq!(w("^v^").defect(), 1);
    assert_eq!(w("^^v").defect(), 0);
    assert_eq!(w("^^v").tilde(), w("v^^"));
    assert_eq!(w("^v^").tilde(), w("v^^"));
    for n in 1..=7 {
        for k in 0..=n {
            let blk = block(n, k).unwrap();
            let md = Weight::max_defect(n, k);
            assert_eq!(blk.iter().map(|z| z.defect()).max().unwrap(), md);
            for z in &blk {
                let t = z.tilde();
                assert!(t.is_max_defect(), "{z}");
                assert_eq!(z.is_max_defect(), z.starts_with(Sym::Down) || k == n || k == 0);
                assert_eq!(t.n(), n);
                assert_eq!(t.k(), k);
            }
        }
    }
}

#[test]
fn enhanced_weight_orders() {
    let lam = w("^v^");
    let mu = w("v^^");
    let s = Permutation::simple(2, 1);
    let e = Permutation::identity(2);
    let a = EnhancedWeight::new(lam.clone(), s.clone()).unwrap();
    let b = EnhancedWeight::new(lam.clone(), e.clone()).unwrap();
    let c = EnhancedWeight::new(mu.clone(), e.clone()).unwrap();
    assert!(b.preceq(&a) && !a.preceq(&b));
    assert!(a.strictly_above(&b) && !b.strictly_above(&a));
    assert!(c.preceq(&b) && c.preceq(&a));
    assert!(b.strictly_above(&c) && a.strictly_above(&c));
    assert!(EnhancedWeight::new(lam, Permutation::identity(3)).is_err());
}

fn arb_perm(m: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=m).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn permutation_group_laws(m in 1usize..7, seed in any::<u64>()) {
        let all = Permutation::all(m);
        let pick = |s: u64| all[(s % all.len() as u64) as usize].clone();
        let (u, v, x) = (pick(seed), pick(seed / 7 + 3), pick(seed / 49 + 11));
        prop_assert_eq!(u.compose(&v).compose(&x), u.compose(&v.compose(&x)));
        prop_assert!(u.compose(&u.inverse()).is_identity());
        prop_assert_eq!(u.compose(&v).inverse(), v.inverse().compose(&u.inverse()));
        for p in 1..=m {
            prop_assert_eq!(u.compose(&v).apply(p), u.apply(v.apply(p)));
        }
    }

    #[test]
    fn lengths_words_and_codes(p in (1usize..8).prop_flat_map(arb_perm)) {
        let m = p.size();
        prop_assert_eq!(p.length(), inversions(&p));
        prop_assert_eq!(p.inverse().length(), p.length());
        let word = p.reduced_word();
        prop_assert_eq!(word.len(), p.length());
        prop_assert_eq!(Permutation::from_word(m, &word).unwrap(), p.clone());
        prop_assert_eq!(Permutation::from_lehmer_code(&p.lehmer_code()).unwrap(), p.clone());
        prop_assert_eq!(p.lehmer_code().iter().sum::<usize>(), p.length());
        prop_assert!(Permutation::identity(m).bruhat_leq(&p));
        prop_assert!(p.bruhat_leq(&Permutation::longest(m)));
        for i in 1..m {
            let ps = p.mul_simple_right(i);
            prop_assert_eq!(p.has_right_descent(i), ps.length() < p.length());
            prop_assert_eq!(p.has_right_descent(i), ps.bruhat_leq(&p));
            let sp = p.mul_simple_left(i);
            prop_assert_eq!(p.has_left_descent(i), sp.length() < p.length());
        }
    }

    #[test]
    fn action_is_a_right_action(m in 1usize..7, k in 0usize..7, seed in any::<u64>()) {
        let k = k.min(m);
        let all = Permutation::all(m);
        let u = all[(seed % all.len() as u64) as usize].clone();
        let v = all[((seed / 13) % all.len() as u64) as usize].clone();
        let e = Weight::identity(m, k);
        prop_assert_eq!(e.act(&u).act(&v), e.act(&u.compose(&v)));
        let z = e.act(&u);
        prop_assert!(z.to_permutation().length() <= u.length());
    }
}
