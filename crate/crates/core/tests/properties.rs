use proptest::prelude::*;

use ptorus::dcat::{in_restriction_lattice, multidegree, DivisorTerm, InFiberForm, MultiDegree};
use ptorus::freegroup::{peripheral_check, CyclicWord, FreeAutomorphism, Letter, ReducedWord};
use ptorus::mcg::{MappingClassGroup, Twist, TwistGenerator};
use ptorus::perm::Permutation;
use ptorus::surface::{intersection_number, CurveOnSurface, TorusModel};

fn letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0..rank, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)), 0..=max_len)
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = ReducedWord> {
    letters(rank, max_len).prop_map(ReducedWord::reduce)
}

/// Products of elementary Nielsen moves on three generators.
fn automorphism() -> impl Strategy<Value = FreeAutomorphism> {
    prop::collection::vec((0..3usize, 1..3usize, any::<bool>(), any::<bool>()), 0..5).prop_map(|moves| {
        let mut phi = FreeAutomorphism::identity(3);
        for (i, d, e, left) in moves {
            let j = (i + d) % 3;
            let x = |g, inv| Letter::new(g, inv);
            let mut imgs: Vec<_> = (0..3).map(ReducedWord::generator).collect();
            let mut inv = imgs.clone();
            if left {
                imgs[i] = ReducedWord::reduce([x(j, e), x(i, false)]);
                inv[i] = ReducedWord::reduce([x(j, !e), x(i, false)]);
            } else {
                imgs[i] = ReducedWord::reduce([x(i, false), x(j, e)]);
                inv[i] = ReducedWord::reduce([x(i, false), x(j, !e)]);
            }
            phi = FreeAutomorphism::new(imgs, inv).unwrap().compose(&phi).unwrap();
        }
        phi
    })
}

fn twist_word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<TwistGenerator>> {
    prop::collection::vec((0..3usize, 1..=n, prop_oneof![Just(1i64), Just(-1i64)]), 0..=max_len).prop_map(
        |v| {
            v.into_iter()
                .map(|(kind, k, p)| {
                    let t = match kind {
                        0 => Twist::Y,
                        1 => Twist::T(k),
                        _ => Twist::H(k),
                    };
                    TwistGenerator::new(t, p)
                })
                .collect()
        },
    )
}

proptest! {
    #[test]
    fn reduction_is_idempotent(ls in letters(3, 12)) {
        let w = ReducedWord::reduce(ls);
        prop_assert_eq!(ReducedWord::reduce(w.letters().iter().copied()), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| p[0] != p[1].inverse()));
    }

    #[test]
    fn words_form_a_group(a in word(3, 8), b in word(3, 8), c in word(3, 8)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
    }

    #[test]
    fn cyclic_words_ignore_rotation_and_conjugation(a in word(3, 8), c in word(3, 4)) {
        prop_assert_eq!(CyclicWord::new(&a.conjugate_by(&c)), CyclicWord::new(&a));
        let inv = CyclicWord::new(&a.inverse());
        prop_assert!(CyclicWord::new(&a).same_unoriented(&inv));
    }

    #[test]
    fn automorphisms_invert_and_compose(phi in automorphism(), psi in automorphism(), w in word(3, 6)) {
        prop_assert!(phi.compose(&phi.inverse()).unwrap().is_identity());
        let both = phi.compose(&psi).unwrap();
        prop_assert_eq!(both.apply(&w).unwrap(), phi.apply(&psi.apply(&w).unwrap()).unwrap());
    }

    #[test]
    fn conjugations_are_inner(phi in automorphism(), c in word(3, 4)) {
        let conj = FreeAutomorphism::conjugation(3, &c);
        let found = conj.is_inner();
        prop_assert!(found.as_ref().is_some_and(|w| conj.is_conjugation_by(w)));
        // φ c φ^-1 is conjugation by φ(c).
        let twisted = phi.compose(&conj).unwrap().compose(&phi.inverse()).unwrap();
        prop_assert!(twisted.is_conjugation_by(&phi.apply(&c).unwrap()));
    }

    #[test]
    fn permutations_form_a_group(v in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
                                 u in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(v).unwrap();
        let q = Permutation::from_images(u).unwrap();
        prop_assert_eq!(p.then(&p.inverse()), Permutation::identity(6));
        prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
    }

    #[test]
    fn lattice_members_have_degree_zero(n in 2..9usize, coeffs in prop::collection::vec(-3i64..=3, 8)) {
        let form = InFiberForm::new(n);
        let combo = (1..=n).fold(MultiDegree::zero(n), |acc, i| acc.add(&form.row(i).scale(coeffs[i - 1])));
        prop_assert!(in_restriction_lattice(&combo));
        prop_assert_eq!(combo.total(), 0);
        let mut off = combo.clone();
        off.0[0] += 1;
        prop_assert!(!in_restriction_lattice(&off));
    }

    #[test]
    fn multidegree_is_additive(n in 2..9usize, a in prop::collection::vec((-2i64..=2, 1..=8usize, any::<bool>()), 0..6),
                               b in prop::collection::vec((-2i64..=2, 1..=8usize, any::<bool>()), 0..6)) {
        let terms = |v: &[(i64, usize, bool)]| -> Vec<(i64, DivisorTerm)> {
            v.iter()
                .map(|&(c, i, pt)| {
                    let i = (i - 1) % n + 1;
                    (c, if pt { DivisorTerm::Point(i) } else { DivisorTerm::Component(i) })
                })
                .collect()
        };
        let (ta, tb) = (terms(&a), terms(&b));
        let joint: Vec<_> = ta.iter().chain(&tb).copied().collect();
        prop_assert_eq!(multidegree(n, &joint), multidegree(n, &ta).add(&multidegree(n, &tb)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn peripheral_permutation_is_multiplicative(w1 in twist_word(3, 3), w2 in twist_word(3, 3)) {
        let g = MappingClassGroup::shared(3).unwrap();
        let (a, b) = (g.class(w1).unwrap(), g.class(w2).unwrap());
        let ab = a.then(&b).unwrap();
        let pa = peripheral_check(&a.outer().aut, g.peripheral()).unwrap();
        let pb = peripheral_check(&b.outer().aut, g.peripheral()).unwrap();
        prop_assert_eq!(&peripheral_check(&ab.outer().aut, g.peripheral()).unwrap(), &pa.then(&pb));
        prop_assert_eq!(ab.perm(), &pa.then(&pb));
    }

    #[test]
    fn intersection_is_symmetric(n in 2..6usize, x in 0..12usize, y in 0..12usize) {
        let m = TorusModel::new(n).unwrap();
        let pick = |k: usize| -> CurveOnSurface {
            match k % 3 {
                0 => m.curve_a(),
                1 => m.curve_b(k / 3 % n + 1).unwrap(),
                _ => m.base_arc(k / 3 % n + 1).unwrap(),
            }
        };
        let (cx, cy) = (pick(x), pick(y));
        match (intersection_number(&m, &cx, &cy), intersection_number(&m, &cy, &cx)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(_), Err(_)) => {}
            other => prop_assert!(false, "asymmetric: {:?}", other),
        }
    }
}
