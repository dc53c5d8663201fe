//! Property tests over random points, flats, matrices and polynomials.

use proptest::prelude::*;
use segre_pg72::anf::{anf_from_pointset, substitute, Anf};
use segre_pg72::gf2::{Bits256, Flat, GfMatrix, GfVector, PointSet};

fn point() -> impl Strategy<Value = GfVector> {
    (1u8..=255).prop_map(GfVector)
}

fn anf() -> impl Strategy<Value = Anf> {
    any::<[u64; 4]>().prop_map(|w| Anf(Bits256(w)))
}

fn invertible() -> impl Strategy<Value = GfMatrix> {
    any::<u64>()
        .prop_map(GfMatrix::from_u64)
        .prop_filter("invertible", |a| a.is_invertible())
}

proptest! {
    #[test]
    fn span_is_idempotent(pts in prop::collection::vec(point(), 1..6)) {
        let x = Flat::span(&pts).unwrap();
        let again = Flat::span(&x.points().collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert!(pts.iter().all(|&p| x.contains(p)));
        prop_assert_eq!(x.point_count(), (1usize << x.rank()) - 1);
    }

    #[test]
    fn point_text_roundtrips(p in point()) {
        prop_assert_eq!(GfVector::parse_shorthand(&p.shorthand()).unwrap(), p);
        prop_assert_eq!(GfVector::from_hex(&p.to_hex()).unwrap(), p);
    }

    #[test]
    fn anf_text_roundtrips(f in anf()) {
        prop_assert_eq!(Anf::from_hex(&f.to_hex()).unwrap(), f);
        prop_assert_eq!(Anf::from_monomial_strings(&f.to_monomial_strings()).unwrap(), f);
        let json = serde_json::to_string(&f).unwrap();
        let terms: Vec<String> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Anf::from_monomial_strings(&terms).unwrap(), f);
    }

    #[test]
    fn mobius_transform_is_an_involution(f in anf()) {
        prop_assert_eq!(Anf::from_truth_table(f.truth_table()), f);
    }

    #[test]
    fn pointset_equation_roundtrips(bits in any::<[u64; 4]>()) {
        let psi = PointSet::from_bits(Bits256(bits)) & PointSet::all();
        let f = anf_from_pointset(&psi);
        prop_assert_eq!(f.zero_set(), psi);
        prop_assert!(!f.constant_term());
    }

    #[test]
    fn substitution_is_evaluation_after_the_map(f in anf(), a in invertible(), x in 0u8..=255) {
        let g = substitute(&f, &a).unwrap();
        prop_assert_eq!(g.evaluate(GfVector(x)), f.evaluate(a.apply(GfVector(x))));
        prop_assert_eq!(g.degree(), f.degree());
    }

    #[test]
    fn product_is_pointwise(f in anf(), g in anf(), x in 0u8..=255) {
        let x = GfVector(x);
        prop_assert_eq!((f * g).evaluate(x), f.evaluate(x) & g.evaluate(x));
        prop_assert_eq!((f + g).evaluate(x), f.evaluate(x) ^ g.evaluate(x));
    }
}
