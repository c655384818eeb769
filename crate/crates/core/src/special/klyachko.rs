//! Klyachko elements `K_n(q) = Σ q^{maj(I)} R_I` and their multiparameter
//! lift `𝐊_n = Σ q^{MAJ(I)} R_I`, realized in `FQSym^(Z)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::colorcore::perm::{descents, identity};
use crate::colorcore::util::permutations;
use crate::colorcore::{Color, ColoredPerm, Composition};
use crate::fqsym::GBasis;
use crate::linear::{tensor, Bialgebra, Element, Monomial, Poly, Tensor, Var};
use crate::symql::ribbon::{composition_to_vector, ribbon_to_s_element};
use crate::symql::sym::s_coproduct;
use crate::symql::VectorComposition;
use crate::ZPoly;

/// The single parameter `q`.
pub const Q: Var = Var::new('q', 0);

/// The parameter `q_i`, `i >= 1`.
pub fn q_var(i: usize) -> Var {
    Var::new('q', i as u32)
}

/// An exponent vector `α` standing for `q_1^{α_1} … q_n^{α_n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QMonomial(Vec<i64>);

impl QMonomial {
    pub fn new(mut exponents: Vec<i64>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        QMonomial(exponents)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    /// The exponent vector with length at least `n`.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &QMonomial) -> QMonomial {
        let n = self.0.len().max(other.0.len());
        let (a, b) = (self.padded(n), other.padded(n));
        QMonomial::new(a.iter().zip(&b).map(|(x, y)| x + y).collect())
    }

    /// Normal form modulo `q_1 … q_n = 1`: the minimum exponent is made 0.
    pub fn affine_reduced(&self, n: usize) -> QMonomial {
        let v = self.padded(n);
        let m = v.iter().copied().min().unwrap_or(0);
        QMonomial::new(v.into_iter().map(|e| e - m).collect())
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.0.iter().enumerate().map(|(i, &e)| (q_var(i + 1), e as i32)))
    }

    pub fn from_monomial(m: &Monomial) -> Option<QMonomial> {
        let mut v = Vec::new();
        for &(var, e) in m.exponents() {
            if var.family != 'q' || var.index == 0 {
                return None;
            }
            let i = var.index as usize;
            if v.len() < i {
                v.resize(i, 0);
            }
            v[i - 1] = e as i64;
        }
        Some(QMonomial::new(v))
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial())
    }
}

pub fn maj(i: &Composition) -> usize {
    i.maj()
}

/// `q^{MAJ(I)}`: block `k` of `I = (i_1,…,i_r)` carries exponent `r − k`.
pub fn multi_maj(i: &Composition) -> QMonomial {
    let r = i.length();
    let mut v = Vec::with_capacity(i.size());
    for (k, &p) in i.parts().iter().enumerate() {
        v.extend(std::iter::repeat((r - 1 - k) as i64).take(p as usize));
    }
    QMonomial::new(v)
}

/// `K_n(q) = Σ_{I ⊨ n} q^{maj(I)} R_I`, in the ribbon basis.
pub fn klyachko_ribbon(n: usize) -> Element<Composition, ZPoly> {
    Element::from_terms(Composition::all(n).into_iter().map(|i| {
        let c = Poly::monomial(Monomial::var(Q, maj(&i) as i32), BigInt::one());
        (i, c)
    }))
}

/// `K_n(q)` in the complete basis `S^I`.
pub fn klyachko(n: usize) -> Element<Composition, ZPoly> {
    ribbon_to_s_element(&klyachko_ribbon(n))
}

/// `𝐊_n = Σ_{I ⊨ n} q^{MAJ(I)} R_I`, in the ribbon basis.
pub fn klyachko_multi_ribbon(n: usize) -> Element<Composition, ZPoly> {
    Element::from_terms(Composition::all(n).into_iter().map(|i| {
        let c = Poly::monomial(multi_maj(&i).to_monomial(), BigInt::one());
        (i, c)
    }))
}

/// `𝐊_n = Σ_σ G_{σ, MAJ(Des σ)}` in `FQSym^(Z)`.
pub fn klyachko_multi(n: usize) -> Element<ColoredPerm, BigInt> {
    Element::sum_of(permutations(n).into_iter().map(|s| {
        let i = Composition::from_descent_set(n, &descents(&s)).expect("descent set of a permutation");
        let colors: Vec<Color> = multi_maj(&i).padded(n);
        ColoredPerm::new(s, colors).expect("permutation")
    }))
}

/// `𝐊_n` computed from its expansion on `S^J q^α`, each mapped to
/// `Σ_{Des σ ⊆ Des J} G_{σ,α}` through products of identities.
pub fn klyachko_multi_via_s(n: usize) -> Element<ColoredPerm, BigInt> {
    let g = GBasis::new(crate::colorcore::ColorMonoid::Integers);
    let s = ribbon_to_s_element(&klyachko_multi_ribbon(n));
    let mut out = Element::zero();
    for (j, c) in s.iter() {
        let factors: Vec<Element<ColoredPerm, BigInt>> = j
            .parts()
            .iter()
            .map(|&p| Element::basis(ColoredPerm::new(identity(p as usize), vec![0; p as usize]).expect("identity")))
            .collect();
        let sj = g.product_all(&factors);
        for (m, a) in c.terms() {
            let alpha = QMonomial::from_monomial(m).expect("q monomial").padded(n);
            for (h, b) in sj.iter() {
                let key = ColoredPerm::new(h.perm().to_vec(), alpha.clone()).expect("permutation");
                out.add_term(key, a.clone() * b.clone());
            }
        }
    }
    out
}

/// Sends every `q_i` to `q`.
pub fn specialize_single(x: &Element<Composition, ZPoly>) -> Element<Composition, ZPoly> {
    x.map_coeffs(|c| {
        let mut p = Poly::zero();
        for (m, a) in c.terms() {
            let d: i32 = m.exponents().iter().filter(|(v, _)| v.family == 'q').map(|&(_, e)| e).sum();
            p.add_term(Monomial::var(Q, d), a.clone());
        }
        p
    })
}

/// `ΔK_n(q) − K_n ⊗ 1 − 1 ⊗ K_n` in level 1, coefficients reduced modulo
/// the cyclotomic polynomial `Φ_n(q)`.
pub fn primitivity_defect(n: usize) -> Tensor<VectorComposition, ZPoly> {
    let k = klyachko(n).map_keys(composition_to_vector);
    let one = Element::basis(VectorComposition::empty());
    let mut d: Tensor<VectorComposition, ZPoly> = k.map_linear(s_coproduct);
    d.add_scaled(&tensor(&k, &one), &-ZPoly::one());
    d.add_scaled(&tensor(&one, &k), &-ZPoly::one());
    let phi = Poly::cyclotomic(n as u64, Q);
    Element::from_terms(d.iter().map(|(key, c)| (key.clone(), c.rem_monic(Q, &phi))))
}

/// Whether `K_n(ζ)` is primitive for a primitive `n`-th root of unity `ζ`.
pub fn primitivity_check(n: usize) -> bool {
    primitivity_defect(n).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn qm(pairs: &[(usize, i64)]) -> QMonomial {
        let mut v = vec![0; 4];
        for &(i, e) in pairs {
            v[i - 1] = e;
        }
        QMonomial::new(v)
    }

    #[test]
    fn maj_statistics() {
        assert_eq!(maj(&comp("4")), 0);
        assert_eq!(maj(&comp("2,1")), 2);
        assert_eq!(maj(&comp("1,1,1")), 3);
        assert_eq!(multi_maj(&comp("3")), QMonomial::default());
        assert_eq!(multi_maj(&comp("2,1")), qm(&[(1, 1), (2, 1)]));
        assert_eq!(multi_maj(&comp("1,2")), qm(&[(1, 1)]));
        assert_eq!(multi_maj(&comp("1,1,1")), qm(&[(1, 2), (2, 1)]));
        let k4 = [
            ("4", qm(&[])),
            ("3,1", qm(&[(1, 1), (2, 1), (3, 1)])),
            ("2,2", qm(&[(1, 1), (2, 1)])),
            ("2,1,1", qm(&[(1, 2), (2, 2), (3, 1)])),
            ("1,3", qm(&[(1, 1)])),
            ("1,2,1", qm(&[(1, 2), (2, 1), (3, 1)])),
            ("1,1,2", qm(&[(1, 2), (2, 1)])),
            ("1,1,1,1", qm(&[(1, 3), (2, 2), (3, 1)])),
        ];
        for (i, m) in k4 {
            assert_eq!(multi_maj(&comp(i)), m, "{i}");
            assert_eq!(multi_maj(&comp(i)).degree(), maj(&comp(i)) as i64);
        }
        assert_eq!(multi_maj(&comp("1,1,1")).to_string(), "q1^2*q2");
    }

    #[test]
    fn affine_reduction() {
        let m = QMonomial::new(vec![2, 1, 1]);
        assert_eq!(m.affine_reduced(3), QMonomial::new(vec![1]));
        assert_eq!(m.affine_reduced(4), m);
        assert_eq!(m.mul(&QMonomial::new(vec![0, 0, 0, 1])).exponents(), &[2, 1, 1, 1]);
    }

    #[test]
    fn single_parameter() {
        let k3 = klyachko_ribbon(3);
        let q = |e: i32| Poly::monomial(Monomial::var(Q, e), BigInt::one());
        assert_eq!(k3.coeff(&comp("2,1")), q(2));
        assert_eq!(k3.coeff(&comp("1,2")), q(1));
        assert_eq!(k3.coeff(&comp("1,1,1")), q(3));
        assert_eq!(klyachko(1), Element::basis(comp("1")));
        for n in 1..=5 {
            assert_eq!(specialize_single(&klyachko_multi_ribbon(n)), klyachko_ribbon(n));
        }
    }

    #[test]
    fn multi_parameter_constructions_agree() {
        for n in 1..=5 {
            assert_eq!(klyachko_multi(n), klyachko_multi_via_s(n), "n = {n}");
        }
        assert_eq!(klyachko_multi(3).len(), 6);
    }

    #[test]
    fn cyclotomic_primitivity() {
        let k2 = klyachko(2);
        let minus_one = Poly::constant(BigInt::from(-1));
        let at = |c: &ZPoly| c.substitute(Q, &minus_one);
        assert_eq!(at(&k2.coeff(&comp("2"))), Poly::constant(BigInt::from(2)));
        assert_eq!(at(&k2.coeff(&comp("1,1"))), minus_one);
        for n in 1..=6 {
            assert!(primitivity_check(n), "n = {n}");
        }
        let k3 = klyachko(3).map_keys(composition_to_vector);
        let d: Tensor<VectorComposition, ZPoly> = k3.map_linear(s_coproduct);
        assert!(d.len() > 2);
    }
}
