//! The series `Θ = Π^←_{l ≥ 0} σ_1(A^{(l)})` in `FQSym^(N)`, truncated by
//! degree and color level.

use num_bigint::BigInt;

use crate::colorcore::perm::{descents, identity};
use crate::colorcore::util::permutations;
use crate::colorcore::{Color, ColorMonoid, ColoredPerm};
use crate::fqsym::{g_coproduct, GBasis};
use crate::linear::{tensor, Bialgebra, BasisKey, Element, Tensor};

type GElement = Element<ColoredPerm, BigInt>;

fn truncate<K: BasisKey>(x: &Element<K, BigInt>, deg: usize) -> Element<K, BigInt> {
    x.filter(|k| k.degree() <= deg)
}

/// `σ_1(A^{(l)}) = Σ_{n ≤ deg} G_{id_n, l^n}`.
pub fn theta_factor(l: Color, deg: usize) -> GElement {
    Element::sum_of((0..=deg).map(|n| ColoredPerm::new(identity(n), vec![l; n]).expect("identity")))
}

/// `Π^←_{l_max ≥ l ≥ 0} σ_1(A^{(l)})` up to degree `deg`.
pub fn theta(l_max: Color, deg: usize) -> GElement {
    let g = GBasis::new(ColorMonoid::Naturals);
    (0..=l_max).rev().fold(Element::one(), |acc, l| truncate(&g.product(&acc, &theta_factor(l, deg)), deg))
}

/// `Θ` read off the descent form: `G_{σ,c}` occurs once for every color word
/// `c` that is weakly decreasing, drops strictly at each descent of `σ`, and
/// stays in `0..=l_max`.
pub fn theta_by_descents(l_max: Color, deg: usize) -> GElement {
    fn colorings(n: usize, strict: &[bool], l_max: Color) -> Vec<Vec<Color>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, strict: &[bool], hi: Color, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            let top = match cur.last() {
                None => hi,
                Some(&c) if strict[cur.len() - 1] => c - 1,
                Some(&c) => c,
            };
            for c in 0..=top {
                cur.push(c);
                rec(n, strict, hi, cur, out);
                cur.pop();
            }
        }
        rec(n, strict, l_max, &mut cur, &mut out);
        out
    }
    let mut out = Element::zero();
    for n in 0..=deg {
        for s in permutations(n) {
            let mut strict = vec![false; n.saturating_sub(1)];
            for d in descents(&s) {
                strict[d - 1] = true;
            }
            for c in colorings(n, &strict, l_max) {
                out.add_term(ColoredPerm::new(s.clone(), c).expect("permutation"), BigInt::from(1));
            }
        }
    }
    out
}

/// `Δx − x ⊗ x`, keeping only terms of total degree at most `deg`.
pub fn grouplike_defect(x: &GElement, deg: usize) -> Tensor<ColoredPerm, BigInt> {
    let mut d: Tensor<ColoredPerm, BigInt> = x.map_linear(g_coproduct);
    d.add_scaled(&tensor(x, x), &BigInt::from(-1));
    truncate(&d, deg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_one_slice() {
        let t = theta(2, 3);
        let slice = t.homogeneous_component(1);
        let want: GElement = Element::sum_of((0..=2).map(|l| ColoredPerm::new(vec![1], vec![l]).unwrap()));
        assert_eq!(slice, want);
        assert_eq!(t.homogeneous_component(0), Element::one());
    }

    #[test]
    fn factors_are_grouplike() {
        for l in 0..=3 {
            assert!(grouplike_defect(&theta_factor(l, 4), 4).is_empty());
        }
    }

    #[test]
    fn theta_is_grouplike() {
        assert!(grouplike_defect(&theta(2, 3), 3).is_empty());
        assert!(grouplike_defect(&theta(3, 4), 4).is_empty());
    }

    #[test]
    fn product_matches_descent_form() {
        for l_max in 0..=3 {
            assert_eq!(theta(l_max, 4), theta_by_descents(l_max, 4), "l_max = {l_max}");
        }
    }
}
