//! Level `ℓ` noncommutative symmetric functions `Sym^(ℓ)`, their duals
//! `QSym^(ℓ)`, the Mantaci-Reutenauer subalgebra and the internal product.

pub mod mr;
pub mod multisym;
pub mod qsym;
pub mod ribbon;
pub mod sym;
pub mod vector;

pub use mr::{mr_coproduct, mr_dual_coproduct, mr_dual_product, mr_internal, mr_product, MRBasis, MRDualBasis};
pub use multisym::{commutative_image, multisym_internal, ColumnMultiset};
pub use qsym::{m_coproduct, m_expand, m_product, quasi_ribbon, ColoredMonomial, QSymBasis};
pub use ribbon::{ribbon_to_s, s_to_ribbon};
pub use sym::{
    dij, fold_colors, g_to_s, monomial_product_oracle, s_coproduct, s_embed, s_embed_element, s_internal, s_internal_nat,
    s_internal_via_embedding, s_product, SymBasis,
};
pub use vector::{ColoredComposition, PartiteNumber, VectorComposition};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorcore::{ColorMonoid, ColoredPerm, Composition};
    use crate::fqsym::{expand_g_to_words, f_to_g_element, g_coproduct, g_product, Phi};
    use crate::linear::{bilinear, laws, Bialgebra, Element};

    type E = Element<VectorComposition, i64>;

    fn vc(s: &str) -> VectorComposition {
        s.parse().unwrap()
    }

    fn e(terms: &[(i64, &str)]) -> E {
        Element::from_terms(terms.iter().map(|&(c, s)| (vc(s), c)))
    }

    fn s(x: &str) -> E {
        Element::basis(vc(x))
    }

    const N: ColorMonoid = ColorMonoid::Naturals;

    #[test]
    fn embedding_examples() {
        let g = |x: &str| -> ColoredPerm { x.parse().unwrap() };
        let got: Element<ColoredPerm, i64> = s_embed(&vc("[1,1]"), ColorMonoid::Cyclic(2)).unwrap();
        assert_eq!(got, Element::sum_of([g("12;01"), g("12;10")]));
        assert_eq!(s_embed::<i64>(&vc("[2,0]"), N).unwrap(), Element::basis(g("12;00")));
        assert!(s_embed::<i64>(&vc("[0,0,1]"), ColorMonoid::Cyclic(2)).is_err());
    }

    #[test]
    fn embedding_is_a_morphism() {
        let m = ColorMonoid::Cyclic(2);
        let keys: Vec<VectorComposition> = (0..=3).flat_map(|n| VectorComposition::all(n, 2)).collect();
        for a in &keys {
            let ea = s_embed::<i64>(a, m).unwrap();
            let lhs = ea.map_linear(g_coproduct);
            let rhs = s_coproduct::<i64>(a).map_linear(|(l, r)| {
                crate::linear::tensor(&s_embed(l, m).unwrap(), &s_embed(r, m).unwrap())
            });
            assert_eq!(lhs, rhs, "coproduct of {a}");
            for b in &keys {
                if a.weight() + b.weight() > 3 {
                    continue;
                }
                let prod = bilinear(&ea, &s_embed(b, m).unwrap(), g_product);
                assert_eq!(prod, s_embed(&a.concat(b), m).unwrap());
            }
        }
    }

    #[test]
    fn coproduct_example() {
        let got = s_coproduct::<i64>(&vc("[1,0,2]"));
        let want: Element<(VectorComposition, VectorComposition), i64> = Element::sum_of(
            [
                ("[1,0,2]", ""),
                ("[0,0,2]", "[1,0,0]"),
                ("[1,0,1]", "[0,0,1]"),
                ("[0,0,1]", "[1,0,1]"),
                ("[1,0,0]", "[0,0,2]"),
                ("", "[1,0,2]"),
            ]
            .map(|(a, b)| (vc(a), vc(b))),
        );
        assert_eq!(got, want);
        assert_eq!(s_coproduct::<i64>(&vc("")), Element::basis((vc(""), vc(""))));
    }

    #[test]
    fn hopf_and_duality() {
        let sym = SymBasis::cyclic(2);
        let qsym = QSymBasis { rows: 2 };
        laws::bialgebra_suite(&sym, 2, 4, 60, 3).unwrap();
        laws::bialgebra_suite(&qsym, 2, 4, 60, 4).unwrap();
        laws::adjunction_exhaustive(&sym, &qsym, 4).unwrap();
        laws::adjunction_exhaustive(&qsym, &sym, 4).unwrap();
        for x in laws::random_elements(&sym, 4, 30, 9) {
            let d = sym.coproduct(&x);
            assert_eq!(crate::linear::swap(&d), d);
        }
    }

    #[test]
    fn monomial_products() {
        let p = monomial_product_oracle(&[1, 1], &[1], 3).unwrap();
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(vec![1, 1, 1], 3), (vec![2, 1], 1)]);
        let p = monomial_product_oracle(&[2, 1, 1], &[2, 1], 3).unwrap();
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(vec![3, 2, 2], 2), (vec![3, 3, 1], 2), (vec![4, 2, 1], 1)]);
        let p = monomial_product_oracle(&[], &[2, 1], 3).unwrap();
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(vec![2, 1], 1)]);
        assert!(monomial_product_oracle(&[1, 1, 1, 1], &[], 3).is_err());
    }

    #[test]
    fn internal_examples() {
        assert_eq!(s_internal(&s("[2,2]"), &s("[3,1]"), N).unwrap(), e(&[(3, "[1,3]"), (1, "[2,1,1]")]));
        assert_eq!(
            s_internal(&s("[0,2,1]"), &s("[1,1,1]"), N).unwrap(),
            e(&[(1, "[0,1,1,0,1]"), (2, "[0,1,0,2]"), (2, "[0,0,2,1]")])
        );
        let z3 = ColorMonoid::Cyclic(3);
        let want = e(&[(2, "[0,2,1]"), (2, "[2,1,0]"), (2, "[1,0,2]")]);
        assert_eq!(s_internal(&s("[0,2,1]"), &s("[1,1,1]"), z3).unwrap(), want);
        assert_eq!(s_internal_via_embedding(&s("[0,2,1]"), &s("[1,1,1]"), z3).unwrap(), want);
        let z2 = ColorMonoid::Cyclic(2);
        let want = e(&[(1, "[1,1],[1,0]"), (1, "[1,0],[1,0],[0,1]"), (1, "[0,1],[0,1],[0,1]")]);
        assert_eq!(s_internal(&s("[1,1],[0,1]"), &s("[0,1],[2,0]"), z2).unwrap(), want);
        assert!(s_internal(&s("[1]"), &s("[2]"), N).unwrap().is_empty());
    }

    #[test]
    fn internal_matches_embedding_small() {
        for l in 1..=3u32 {
            for monoid in [ColorMonoid::Cyclic(l), N] {
                for n in 0..=3 {
                    let keys = VectorComposition::all(n, l as usize);
                    for a in &keys {
                        for b in &keys {
                            let (x, y) = (Element::basis(a.clone()), Element::basis(b.clone()));
                            let fast: E = s_internal(&x, &y, monoid).unwrap();
                            assert_eq!(fast, s_internal_via_embedding(&x, &y, monoid).unwrap(), "{a} * {b} over {monoid}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn splitting_and_commutation() {
        let m = ColorMonoid::Cyclic(2);
        let sym = SymBasis::cyclic(2);
        let via = |x: &E, y: &E| s_internal_via_embedding(x, y, m).unwrap();
        let rand: Vec<E> = laws::random_elements(&sym, 2, 36, 5).into_iter().filter(|x| !x.is_empty()).collect();
        for w in rand.chunks_exact(3) {
            let (f1, f2) = (&w[0], &w[1]);
            let n = f1.max_degree().unwrap() + f2.max_degree().unwrap();
            for g in VectorComposition::all(n, 2).iter().step_by(7) {
                let g = Element::basis(g.clone());
                let lhs = via(&sym.product(f1, f2), &g);
                let rhs = sym.coproduct(&g).map_linear(|(a, b)| {
                    let l = via(f1, &Element::basis(a.clone()));
                    let r = via(f2, &Element::basis(b.clone()));
                    sym.product(&l, &r)
                });
                assert_eq!(lhs, rhs);
            }
        }
        for n in 1..=4 {
            for i in PartiteNumber::all(n, 2) {
                let si = Element::basis(VectorComposition::column(i));
                for j in VectorComposition::all(n, 2) {
                    let sj = Element::basis(j);
                    assert_eq!(via(&si, &sj), via(&sj, &si));
                }
            }
        }
    }

    #[test]
    fn elimination_round_trip() {
        let m = ColorMonoid::Cyclic(3);
        let sym = SymBasis::cyclic(3);
        for x in laws::random_elements(&sym, 4, 20, 2) {
            assert_eq!(g_to_s(&s_embed_element(&x, m).unwrap(), m).unwrap(), x);
        }
        let stray: Element<ColoredPerm, i64> = Element::basis("12;10".parse().unwrap());
        assert!(g_to_s(&stray, m).is_err());
    }

    #[test]
    fn dimensions() {
        for (l, want) in [(2usize, vec![1, 2, 7, 24, 82]), (3, vec![1, 3, 15, 73, 354])] {
            let got: Vec<usize> = (0..=4).map(|n| VectorComposition::all(n, l).len()).collect();
            assert_eq!(got, want);
        }
    }

    fn poly_product(
        x: &Element<ColoredMonomial, i64>,
        y: &Element<ColoredMonomial, i64>,
    ) -> Element<ColoredMonomial, i64> {
        bilinear(x, y, |a, b| {
            Element::basis(ColoredMonomial::from_factors(a.factors().iter().chain(b.factors()).copied()))
        })
    }

    #[test]
    fn monomial_basis() {
        assert_eq!(
            m_product::<i64>(&vc("[1,0]"), &vc("[0,1]")),
            e(&[(1, "[1,0],[0,1]"), (1, "[0,1],[1,0]"), (1, "[1,1]")])
        );
        assert_eq!(m_product::<i64>(&vc(""), &vc("[2]")), s("[2]"));
        let keys: Vec<VectorComposition> = (0..=2).flat_map(|n| VectorComposition::all(n, 2)).collect();
        for a in &keys {
            for b in &keys {
                let lhs = poly_product(&m_expand(a, 3), &m_expand(b, 3));
                let rhs = m_product::<i64>(a, b).map_linear(|k| m_expand(k, 3));
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
        let d = m_coproduct::<i64>(&vc("[1,0],[0,2]"));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(vc("[1,0]"), vc("[0,2]"))), 1);
    }

    #[test]
    fn quasi_ribbons() {
        assert_eq!(quasi_ribbon::<i64>(&vc("[1,1]")), e(&[(1, "[1,1]"), (1, "[1,0],[0,1]")]));
        assert_eq!(quasi_ribbon::<i64>(&vc("[3]")), e(&[(1, "[3]"), (1, "[2],[1]"), (1, "[1],[2]"), (1, "[1],[1],[1]")]));
        let m = ColorMonoid::Cyclic(3);
        for n in 1..=4 {
            for i in VectorComposition::all(n, 3).iter().step_by(3) {
                let (d, c) = i.recode();
                let comp = Composition::from_descent_set(n, &d[..d.len() - 1]).unwrap();
                let mut top = n as u32;
                let mut sigma = Vec::new();
                for &p in comp.parts() {
                    sigma.extend(top - p + 1..=top);
                    top -= p;
                }
                let f: Element<ColoredPerm, i64> = Element::basis(ColoredPerm::new(sigma, c).unwrap());
                let words = expand_g_to_words(&f_to_g_element(&f, m, Phi::Identity).unwrap(), n as u32);
                let lhs = crate::symql::qsym::commutative_image(&words);
                let rhs = quasi_ribbon::<i64>(i).map_linear(|k| m_expand(k, n as u32));
                assert_eq!(lhs, rhs, "{i}");
            }
        }
    }

    #[test]
    fn mantaci_reutenauer() {
        let cc = |x: &str| -> ColoredComposition { x.parse().unwrap() };
        let mre = |terms: &[(i64, &str)]| -> Element<ColoredComposition, i64> {
            Element::from_terms(terms.iter().map(|&(c, x)| (cc(x), c)))
        };
        for n in 1..=3 {
            for (a, b) in [(0, 0), (0, 1), (1, 1)] {
                let got = mr_internal(
                    &mre(&[(1, &format!("({n};{a})"))]),
                    &mre(&[(1, &format!("({n};{b})"))]),
                    2,
                )
                .unwrap();
                assert_eq!(got, mre(&[(1, &format!("({n};{})", (a + b) % 2))]));
            }
        }
        assert_eq!(mr_dual_product::<i64>(&cc("(1;0)"), &cc("(1;0)")), mre(&[(2, "(1;0),(1;0)"), (1, "(2;0)")]));
        assert_eq!(mr_dual_product::<i64>(&cc("(1;0)"), &cc("(1;1)")), mre(&[(1, "(1;0),(1;1)"), (1, "(1;1),(1;0)")]));
        let (mr, dual) = (MRBasis { l: 2 }, MRDualBasis { l: 2 });
        laws::bialgebra_suite(&mr, 2, 4, 60, 6).unwrap();
        laws::bialgebra_suite(&dual, 2, 4, 60, 7).unwrap();
        laws::adjunction_exhaustive(&mr, &dual, 4).unwrap();
        laws::adjunction_exhaustive(&dual, &mr, 4).unwrap();
        for n in 1..=3 {
            let keys = ColoredComposition::all(n, 2);
            for a in &keys {
                for b in &keys {
                    mr_internal::<i64>(&Element::basis(a.clone()), &Element::basis(b.clone()), 2).unwrap();
                }
            }
            let unit: Element<ColoredComposition, i64> = Element::basis(cc(&format!("({n};0)")));
            for a in &keys {
                let x = Element::basis(a.clone());
                assert_eq!(mr_internal(&unit, &x, 2).unwrap(), x);
            }
        }
    }

    #[test]
    fn multisymmetric_image() {
        let h = |cols: &[&str]| ColumnMultiset::new(cols.iter().map(|c| vc(c).columns()[0].clone()).collect());
        let x = Element::basis(h(&["[3,1]", "[0,1]"]));
        let y = Element::basis(h(&["[2,1]", "[1,1]"]));
        let got: Element<ColumnMultiset, i64> = multisym_internal(&x, &y, N).unwrap();
        let want = Element::from_terms(
            [
                (2, ["[2,1,0]", "[0,0,1]", "[0,1,0]"]),
                (1, ["[2,0,1]", "[1,0,0]", "[0,0,1]"]),
                (1, ["[2,0,1]", "[0,1,0]", "[0,1,0]"]),
                (2, ["[1,2,0]", "[1,0,0]", "[0,0,1]"]),
                (2, ["[1,2,0]", "[0,1,0]", "[0,1,0]"]),
                (2, ["[1,1,0]", "[1,0,1]", "[0,1,0]"]),
                (1, ["[1,1,0]", "[1,1,0]", "[0,0,1]"]),
                (1, ["[2,0,0]", "[1,0,1]", "[0,0,1]"]),
                (4, ["[1,1,0]", "[0,2,0]", "[0,1,0]"]),
                (2, ["[2,0,0]", "[0,2,0]", "[0,0,1]"]),
            ]
            .map(|(c, cols)| (h(&cols), c)),
        );
        assert_eq!(got, want);
        assert_eq!(commutative_image(&s("[1,0],[0,1]")), commutative_image(&s("[0,1],[1,0]")));
    }

    #[test]
    fn multisymmetric_well_defined() {
        use crate::colorcore::util::multiset_permutations;
        for n in 1..=4 {
            let keys = VectorComposition::all(n, 2);
            for a in keys.iter().filter(|k| k.columns().windows(2).all(|w| w[0] <= w[1])) {
                let lifts: Vec<VectorComposition> = multiset_permutations(a.columns())
                    .into_iter()
                    .map(|c| VectorComposition::new(c).unwrap())
                    .collect();
                for b in keys.iter().step_by(5) {
                    let y = Element::basis(b.clone());
                    let images: Vec<_> = lifts
                        .iter()
                        .map(|l| commutative_image(&s_internal::<i64>(&Element::basis(l.clone()), &y, N).unwrap()))
                        .collect();
                    assert!(images.windows(2).all(|w| w[0] == w[1]), "{a} * {b}");
                }
            }
        }
    }

    #[test]
    fn ribbons() {
        let c = |p: &[u32]| Composition::new(p.to_vec()).unwrap();
        let got = ribbon_to_s::<i64>(&c(&[1, 1]));
        assert_eq!(got, Element::from_terms([(c(&[1, 1]), 1), (c(&[2]), -1)]));
        assert_eq!(ribbon_to_s::<i64>(&c(&[3])), Element::basis(c(&[3])));
        for n in 0..=6 {
            for i in Composition::all(n) {
                let r = ribbon_to_s::<i64>(&i);
                assert_eq!(ribbon::s_to_ribbon_element(&r), Element::basis(i.clone()));
                assert_eq!(ribbon::ribbon_to_s_element(&s_to_ribbon::<i64>(&i)), Element::basis(i.clone()));
            }
        }
    }
}
