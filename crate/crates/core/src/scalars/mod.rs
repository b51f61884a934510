//! Exact scalars: Laurent polynomials in `q` over ℚ, the field ℚ(θ) with θ a
//! primitive cube root of unity, and expressions linear in an unknown sign ξ.

mod cyc3;
mod laurent;
mod sign;

pub use cyc3::{Cyc3, Cyc3Laurent};
pub use laurent::{rat, ratio, LaurentPolynomial};
pub use sign::{Sign, SignLinear};

/// Serializes any `Display` value as a string.
pub fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-20i64..20, 1i64..5, -6i32..8), 0..6)
            .prop_map(|ts| LaurentPolynomial::from_terms(ts.into_iter().map(|(n, d, e)| (ratio(n, d), e))))
    }

    proptest! {
        #[test]
        fn specialization_is_multiplicative(a in laurent(), b in laurent(), q0 in prop::sample::select(vec![-3i64, -1, 1, 2, 3, 9])) {
            let lhs = (&a * &b).specialize_int(q0).unwrap();
            let rhs = a.specialize_int(q0).unwrap() * b.specialize_int(q0).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert!(a.terms().all(|(_, c)| *c != rat(0)));
        }

        #[test]
        fn render_parse_roundtrip(a in laurent()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPolynomial>().unwrap(), a);
        }

        #[test]
        fn exact_division_roundtrip(a in laurent(), b in laurent()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }
}
