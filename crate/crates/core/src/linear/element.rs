//! Sparse finitely supported linear combinations of basis keys.

use std::collections::BTreeMap;
use std::fmt::{self, Debug};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use super::coeff::Coeff;

/// A basis key of a graded connected algebra.
pub trait BasisKey: Clone + Ord + Debug + Send + Sync {
    fn degree(&self) -> usize;

    /// The key of the unit (the empty object).
    fn unit() -> Self;
}

impl<A: BasisKey, B: BasisKey> BasisKey for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }

    fn unit() -> Self {
        (A::unit(), B::unit())
    }
}

impl<A: BasisKey, B: BasisKey, C: BasisKey> BasisKey for (A, B, C) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree() + self.2.degree()
    }

    fn unit() -> Self {
        (A::unit(), B::unit(), C::unit())
    }
}

/// `Σ c_k k` over basis keys `K` with coefficients in `R`; zero coefficients
/// are never stored, so equality is equality of elements.
#[derive(Clone, PartialEq)]
pub struct Element<K: Ord, R> {
    terms: BTreeMap<K, R>,
}

pub type Tensor<K, R> = Element<(K, K), R>;

impl<K: BasisKey, R: Coeff> Default for Element<K, R> {
    fn default() -> Self {
        Element::zero()
    }
}

impl<K: BasisKey, R: Coeff> Element<K, R> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Element::basis(K::unit())
    }

    pub fn basis(k: K) -> Self {
        Element::monomial(k, R::one())
    }

    pub fn monomial(k: K, c: R) -> Self {
        let mut e = Element::zero();
        e.add_term(k, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, R)>) -> Self {
        let mut e = Element::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    /// Sum of keys, each with coefficient one (repeats accumulate).
    pub fn sum_of(keys: impl IntoIterator<Item = K>) -> Self {
        Element::from_terms(keys.into_iter().map(|k| (k, R::one())))
    }

    pub fn add_term(&mut self, k: K, c: R) {
        if c.is_zero() {
            return;
        }
        if let Some(old) = self.terms.get_mut(&k) {
            let s = std::mem::replace(old, R::zero()) + c;
            if s.is_zero() {
                self.terms.remove(&k);
            } else {
                *old = s;
            }
        } else {
            self.terms.insert(k, c);
        }
    }

    pub fn add_scaled(&mut self, other: &Element<K, R>, c: &R) {
        for (k, d) in &other.terms {
            self.add_term(k.clone(), c.clone() * d.clone());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> R {
        self.terms.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Element::from_terms(self.terms.iter().map(|(k, d)| (k.clone(), c.clone() * d.clone())))
    }

    /// Linear extension of a key-level map.
    pub fn map_linear<K2: BasisKey>(&self, f: impl Fn(&K) -> Element<K2, R>) -> Element<K2, R> {
        let mut out = Element::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a map sending keys to keys.
    pub fn map_keys<K2: BasisKey>(&self, f: impl Fn(&K) -> K2) -> Element<K2, R> {
        Element::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn map_coeffs<R2: Coeff>(&self, f: impl Fn(&R) -> R2) -> Element<K, R2> {
        Element::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&K) -> bool) -> Self {
        Element { terms: self.terms.iter().filter(|(k, _)| pred(k)).map(|(k, c)| (k.clone(), c.clone())).collect() }
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        self.filter(|k| k.degree() == d)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|k| k.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Counit: the coefficient of the unit key.
    pub fn counit(&self) -> R {
        self.coeff(&K::unit())
    }

    /// Text form using `show` for keys, e.g. `2*F[12;01] - F[21;10]`.
    pub fn render_with(&self, show: impl Fn(&K) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_form();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                if abs.needs_parens() {
                    s.push_str(&format!("({abs})*"));
                } else {
                    s.push_str(&format!("{abs}*"));
                }
            }
            s.push_str(&show(k));
        }
        s
    }
}

/// Bilinear extension of a key-level rule.
pub fn bilinear<K1, K2, K3, R>(
    x: &Element<K1, R>,
    y: &Element<K2, R>,
    f: impl Fn(&K1, &K2) -> Element<K3, R>,
) -> Element<K3, R>
where
    K1: BasisKey,
    K2: BasisKey,
    K3: BasisKey,
    R: Coeff,
{
    let mut out = Element::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&f(a, b), &(ca.clone() * cb.clone()));
        }
    }
    out
}

/// Rewrites `x` in a sub-basis: `canon` names the sub-basis element a key
/// belongs to and `expand` gives that element in the ambient basis. Returns
/// `None` unless `x` is exactly a combination of the expansions.
pub fn regroup<K, K2, R>(
    x: &Element<K, R>,
    canon: impl Fn(&K) -> Option<K2>,
    expand: impl Fn(&K2) -> Element<K, R>,
) -> Option<Element<K2, R>>
where
    K: BasisKey,
    K2: BasisKey,
    R: Coeff,
{
    let mut out: BTreeMap<K2, R> = BTreeMap::new();
    for (k, c) in x.iter() {
        out.entry(canon(k)?).or_insert_with(|| c.clone());
    }
    let out = Element::from_terms(out);
    (out.map_linear(expand) == *x).then_some(out)
}

/// `x ⊗ y`.
pub fn tensor<A: BasisKey, B: BasisKey, R: Coeff>(x: &Element<A, R>, y: &Element<B, R>) -> Element<(A, B), R> {
    bilinear(x, y, |a, b| Element::basis((a.clone(), b.clone())))
}

/// Exchanges the tensor factors.
pub fn swap<A: BasisKey, B: BasisKey, R: Coeff>(x: &Element<(A, B), R>) -> Element<(B, A), R> {
    x.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// Product in `A ⊗ A` induced by a product on `A`:
/// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
pub fn tensor_product<K: BasisKey, R: Coeff>(
    x: &Tensor<K, R>,
    y: &Tensor<K, R>,
    mul: impl Fn(&K, &K) -> Element<K, R>,
) -> Tensor<K, R> {
    bilinear(x, y, |(a, b), (c, d)| tensor(&mul(a, c), &mul(b, d)))
}

/// `(Δ ⊗ id)` applied to a tensor.
pub fn apply_left<K: BasisKey, R: Coeff>(
    x: &Tensor<K, R>,
    f: impl Fn(&K) -> Tensor<K, R>,
) -> Element<(K, K, K), R> {
    x.map_linear(|(a, b)| f(a).map_keys(|(p, q)| (p.clone(), q.clone(), b.clone())))
}

/// `(id ⊗ Δ)` applied to a tensor.
pub fn apply_right<K: BasisKey, R: Coeff>(
    x: &Tensor<K, R>,
    f: impl Fn(&K) -> Tensor<K, R>,
) -> Element<(K, K, K), R> {
    x.map_linear(|(a, b)| f(b).map_keys(|(p, q)| (a.clone(), p.clone(), q.clone())))
}

/// Diagonal pairing `⟨x, y⟩ = Σ_k x_k y_k` between dual bases sharing keys.
pub fn pairing<K: BasisKey, R: Coeff>(x: &Element<K, R>, y: &Element<K, R>) -> R {
    let (small, large) = if x.len() <= y.len() { (x, y) } else { (y, x) };
    small.iter().fold(R::zero(), |acc, (k, c)| acc + c.clone() * large.coeff(k))
}

impl<K: BasisKey, R: Coeff> AddAssign<&Element<K, R>> for Element<K, R> {
    fn add_assign(&mut self, rhs: &Element<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: BasisKey, R: Coeff> SubAssign<&Element<K, R>> for Element<K, R> {
    fn sub_assign(&mut self, rhs: &Element<K, R>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: BasisKey, R: Coeff> Add for Element<K, R> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: BasisKey, R: Coeff> Add for &Element<K, R> {
    type Output = Element<K, R>;

    fn add(self, rhs: Self) -> Element<K, R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: BasisKey, R: Coeff> Sub for Element<K, R> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: BasisKey, R: Coeff> Sub for &Element<K, R> {
    type Output = Element<K, R>;

    fn sub(self, rhs: Self) -> Element<K, R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: BasisKey, R: Coeff> Neg for Element<K, R> {
    type Output = Self;

    fn neg(self) -> Self {
        Element { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: BasisKey, R: Coeff> Mul<R> for Element<K, R> {
    type Output = Self;

    fn mul(self, c: R) -> Self {
        self.scale(&c)
    }
}

impl<K: BasisKey, R: Coeff> Zero for Element<K, R> {
    fn zero() -> Self {
        Element::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: BasisKey, R: Coeff> FromIterator<(K, R)> for Element<K, R> {
    fn from_iter<T: IntoIterator<Item = (K, R)>>(iter: T) -> Self {
        Element::from_terms(iter)
    }
}

impl<K: BasisKey, R: Coeff> Debug for Element<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|k| format!("{k:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    impl BasisKey for Vec<u8> {
        fn degree(&self) -> usize {
            self.len()
        }

        fn unit() -> Self {
            Vec::new()
        }
    }

    type E = Element<Vec<u8>, i64>;

    fn concat(a: &Vec<u8>, b: &Vec<u8>) -> E {
        let mut w = a.clone();
        w.extend(b);
        E::basis(w)
    }

    fn random(rng: &mut ChaCha8Rng) -> E {
        (0..rng.gen_range(0..5))
            .map(|_| {
                let len = rng.gen_range(0..3);
                ((0..len).map(|_| rng.gen_range(0..2u8)).collect::<Vec<u8>>(), rng.gen_range(-3..=3))
            })
            .collect()
    }

    #[test]
    fn cancellation_and_accumulation() {
        let x = vec![1u8];
        let mut e = E::monomial(x.clone(), 2);
        e.add_term(x.clone(), 3);
        assert_eq!(e.coeff(&x), 5);
        let z = &e - &e;
        assert!(z.is_empty());
        assert_eq!(z.render_with(|_| String::new()), "0");
    }

    #[test]
    fn bilinearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
            let (a, b) = (rng.gen_range(-4..=4i64), rng.gen_range(-4..=4i64));
            let lhs = bilinear(&(x.scale(&a) + y.scale(&b)), &z, concat);
            let rhs = bilinear(&x, &z, concat).scale(&a) + bilinear(&y, &z, concat).scale(&b);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rendering() {
        let e: E = [(vec![1u8], -1), (vec![], 2), (vec![0u8, 1], 1)].into_iter().collect();
        assert_eq!(e.render_with(|k| format!("w{k:?}")), "2*w[] + w[0, 1] - w[1]");
        let t = tensor(&e, &E::one());
        assert_eq!(swap(&swap(&t)), t);
        assert_eq!(pairing(&e, &e), 6);
        assert_eq!(e.counit(), 2);
    }
}
