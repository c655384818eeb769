use chopf_core::colorcore::parking::{is_parking, parkize};
use chopf_core::colorcore::perm::{compose, inverse, is_permutation};
use chopf_core::colorcore::word::standardize;
use chopf_core::colorcore::{ColorMonoid, ColoredPerm};
use chopf_core::fqsym::{f_to_g, g_to_f, Phi};
use chopf_core::symql::VectorComposition;
use proptest::prelude::*;

fn colored_perm(max: usize, l: i64) -> impl Strategy<Value = ColoredPerm> {
    (1..=max).prop_flat_map(move |n| {
        (Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(0..l, n))
            .prop_map(|(p, c)| ColoredPerm::new(p, c).unwrap())
    })
}

proptest! {
    #[test]
    fn parkize_gives_a_parking_function(w in prop::collection::vec(1u32..12, 0..9)) {
        let a = parkize(&w);
        prop_assert!(is_parking(&a));
        prop_assert_eq!(standardize(&a), standardize(&w));
        prop_assert_eq!(parkize(&a), a);
    }

    #[test]
    fn standardization_is_a_permutation(w in prop::collection::vec(1u32..6, 0..10)) {
        let s = standardize(&w);
        prop_assert!(is_permutation(&s));
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                prop_assert_eq!(w[i] > w[j], s[i] > s[j]);
            }
        }
    }

    #[test]
    fn inverse_composes_to_identity(h in colored_perm(7, 1)) {
        let p = h.perm();
        let id: Vec<u32> = (1..=p.len() as u32).collect();
        prop_assert_eq!(compose(p, &inverse(p)), id);
    }

    #[test]
    fn colored_perm_literal_round_trip(h in colored_perm(7, 4), shift in -12i64..12) {
        let h = ColoredPerm::new(h.perm().to_vec(), h.colors().iter().map(|c| c + shift).collect()).unwrap();
        prop_assert_eq!(h.to_string().parse::<ColoredPerm>().unwrap(), h);
    }

    #[test]
    fn f_g_relabelings_invert(h in colored_perm(6, 3), inv in any::<bool>()) {
        let m = ColorMonoid::Cyclic(3);
        let phi = if inv { Phi::Inverse } else { Phi::Identity };
        prop_assert_eq!(g_to_f(&f_to_g(&h, m, phi).unwrap(), m, phi).unwrap(), h);
    }

    #[test]
    fn vector_composition_recode_round_trip(cols in prop::collection::vec(prop::collection::vec(0u32..3, 3), 1..5)) {
        prop_assume!(cols.iter().all(|c| c.iter().any(|&x| x > 0)));
        let v = VectorComposition::from_columns(cols).unwrap();
        let (d, c) = v.recode();
        prop_assert_eq!(VectorComposition::decode(&d, &c).unwrap(), v.clone());
        prop_assert_eq!(v.to_string().parse::<VectorComposition>().unwrap(), v);
    }
}
