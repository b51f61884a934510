use std::sync::OnceLock;

use num_traits::Zero;
use proptest::prelude::*;
use unipotent_e6::borel::{BorelElement, BorelGroup, TorusElement, UnipotentElement, F3, N_POS};
use unipotent_e6::fourier::{fourier_matrix, fourier_matrix_from_pairs, pair_set_with, FiniteGroupModel, GroupSpec};
use unipotent_e6::hecke::{HeckeAlgebra, HeckeElement};
use unipotent_e6::pipeline::e6_root_system;
use unipotent_e6::rootdata::RootSystem;
use unipotent_e6::scalars::{ratio, LaurentPolynomial};
use unipotent_e6::weyl::WeylData;
use unipotent_e6::Case;

fn roots() -> &'static RootSystem {
    static RS: OnceLock<RootSystem> = OnceLock::new();
    RS.get_or_init(|| e6_root_system().unwrap())
}

fn borel(case: Case) -> &'static BorelGroup {
    static G: OnceLock<[BorelGroup; 2]> = OnceLock::new();
    let gs = G.get_or_init(|| Case::BOTH.map(|c| BorelGroup::new(roots(), c).unwrap()));
    &gs[case as usize]
}

fn weyl(case: Case) -> &'static WeylData {
    static W: OnceLock<[WeylData; 2]> = OnceLock::new();
    let ws = W.get_or_init(|| Case::BOTH.map(|c| WeylData::build(roots(), c).unwrap()));
    &ws[case as usize]
}

fn any_case() -> impl Strategy<Value = Case> {
    prop_oneof![Just(Case::Untwisted), Just(Case::Twisted)]
}

fn unipotent() -> impl Strategy<Value = UnipotentElement> {
    prop::array::uniform32(0i64..3).prop_flat_map(|head| {
        prop::array::uniform4(0i64..3).prop_map(move |tail| {
            let mut c = [F3::ZERO; N_POS];
            for (x, v) in c.iter_mut().zip(head.iter().chain(tail.iter())) {
                *x = F3::new(*v);
            }
            UnipotentElement::from_coeffs(c)
        })
    })
}

fn torus() -> impl Strategy<Value = TorusElement> {
    (0usize..64).prop_map(|k| TorusElement::all()[k])
}

fn borel_element() -> impl Strategy<Value = BorelElement> {
    (unipotent(), torus()).prop_map(|(u, t)| BorelElement { u, t })
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-5i64..=5, 1i64..=4, -4i32..=6), 0..5)
        .prop_map(|ts| LaurentPolynomial::from_terms(ts.into_iter().map(|(n, d, e)| (ratio(n, d), e))))
}

/// A random reduced word for `w`, peeling off a random left descent at each
/// step.
fn random_reduced_word(wd: &WeylData, mut w: usize, choices: &[usize]) -> Vec<usize> {
    let g = &wd.group;
    let mut word = Vec::new();
    let mut k = 0;
    while g.length(w) > 0 {
        let descents: Vec<usize> = (0..g.rank()).filter(|&s| g.length(g.left_mul(s, w)) < g.length(w)).collect();
        let s = descents[choices[k % choices.len()] % descents.len()];
        k += 1;
        word.push(s);
        w = g.left_mul(s, w);
    }
    word
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn borel_multiplication_is_associative(case in any_case(), a in borel_element(), b in borel_element(), c in borel_element()) {
        let g = borel(case);
        prop_assert_eq!(g.borel_multiply(&g.borel_multiply(&a, &b), &c), g.borel_multiply(&a, &g.borel_multiply(&b, &c)));
    }

    #[test]
    fn borel_inverse(case in any_case(), a in borel_element()) {
        let g = borel(case);
        let id = BorelElement { u: UnipotentElement::identity(), t: TorusElement::identity() };
        prop_assert_eq!(g.borel_multiply(&a, &g.borel_inverse(&a)), id);
        prop_assert_eq!(g.borel_multiply(&g.borel_inverse(&a), &a), id);
    }

    #[test]
    fn unipotent_inverse(case in any_case(), a in unipotent()) {
        let g = borel(case);
        prop_assert!(g.multiply(&a, &g.inverse(&a)).is_identity());
    }

    #[test]
    fn frobenius_is_a_homomorphism(case in any_case(), a in borel_element(), b in borel_element()) {
        let g = borel(case);
        let lhs = g.frobenius_borel(&g.borel_multiply(&a, &b));
        let rhs = g.borel_multiply(&g.frobenius_borel(&a), &g.frobenius_borel(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_has_order_dividing_two(case in any_case(), a in borel_element()) {
        let g = borel(case);
        let f2 = g.frobenius_borel(&g.frobenius_borel(&a));
        match case {
            Case::Untwisted => prop_assert_eq!(g.frobenius_borel(&a), a),
            Case::Twisted => prop_assert_eq!(f2, a),
        }
    }

    #[test]
    fn torus_conjugation_is_an_automorphism(case in any_case(), t in torus(), a in unipotent(), b in unipotent()) {
        let g = borel(case);
        let lhs = g.torus_conjugate(&t, &g.multiply(&a, &b));
        let rhs = g.multiply(&g.torus_conjugate(&t, &a), &g.torus_conjugate(&t, &b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn torus_conjugation_matches_borel_product(case in any_case(), t in torus(), a in unipotent()) {
        let g = borel(case);
        let tb = BorelElement { u: UnipotentElement::identity(), t };
        let ab = BorelElement { u: a, t: TorusElement::identity() };
        let conj = g.borel_multiply(&g.borel_multiply(&tb, &ab), &g.borel_inverse(&tb));
        prop_assert_eq!(conj, BorelElement { u: g.torus_conjugate(&t, &a), t: TorusElement::identity() });
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPolynomial::one(), a.clone());
    }

    #[test]
    fn specialization_is_a_ring_map(a in laurent(), b in laurent(), q in prop_oneof![Just(2i64), Just(3), Just(-1), Just(9)]) {
        let (x, y) = (a.specialize_int(q).unwrap(), b.specialize_int(q).unwrap());
        prop_assert_eq!((&a * &b).specialize_int(q).unwrap(), &x * &y);
        prop_assert_eq!((&a + &b).specialize_int(q).unwrap(), &x + &y);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hecke_basis_is_independent_of_reduced_word(case in any_case(), w in 0usize..51840, picks in prop::collection::vec(0usize..6, 1..8)) {
        let wd = weyl(case);
        let w = w % wd.group.order();
        let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
        let word = random_reduced_word(wd, w, &picks);
        prop_assert_eq!(word.len(), wd.group.length(w));
        prop_assert_eq!(h.word_product(&word), HeckeElement::basis(w));
    }

    #[test]
    fn hecke_specializes_to_the_group_algebra(case in any_case(), word in prop::collection::vec(0usize..6, 0..10)) {
        let wd = weyl(case);
        let word: Vec<usize> = word.into_iter().map(|s| s % wd.group.rank()).collect();
        let h = HeckeAlgebra::for_case(&wd.group, case).unwrap();
        let at_one = h.specialize_at_one(&h.word_product(&word));
        let w = wd.group.word_index(&word);
        prop_assert_eq!(at_one.len(), 1);
        prop_assert_eq!(at_one.get(&w), Some(&ratio(1, 1)));
    }

    #[test]
    fn hecke_multiplication_routes_agree(word_a in prop::collection::vec(0usize..4, 0..6), word_b in prop::collection::vec(0usize..4, 0..6)) {
        let wd = weyl(Case::Twisted);
        let h = HeckeAlgebra::for_case(&wd.group, Case::Twisted).unwrap();
        let (a, b) = (h.word_product(&word_a), h.word_product(&word_b));
        let joined: Vec<usize> = word_a.iter().chain(&word_b).copied().collect();
        prop_assert_eq!(h.multiply(&a, &b), h.word_product(&joined));
        prop_assert_eq!(h.multiply_right(&a, &b), h.word_product(&joined));
    }

    #[test]
    fn fourier_matrix_is_independent_of_representatives(spec in prop_oneof![Just(GroupSpec::Z2), Just(GroupSpec::Z3), Just(GroupSpec::S3)], pick in 0usize..6) {
        let g = FiniteGroupModel::build(spec).unwrap();
        let base = fourier_matrix(&g).unwrap();
        let pairs = pair_set_with(&g, |class| class[pick % class.len()]).unwrap();
        let other = fourier_matrix_from_pairs(&g, pairs).unwrap();
        prop_assert_eq!(base.size(), other.size());
        for r in &base.index {
            for c in &base.index {
                let (r, c) = (r.label(), c.label());
                prop_assert_eq!(base.entry(&r, &c), other.entry(&r, &c), "{} {}", r, c);
            }
        }
    }
}

#[test]
fn laurent_zero_is_additive_identity() {
    let p = LaurentPolynomial::term(3, -2);
    assert_eq!(&p + &LaurentPolynomial::zero(), p);
    assert!(LaurentPolynomial::zero().coeff(0).is_zero());
}
