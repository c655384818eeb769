//! Checks of the bialgebra axioms and of duality, exhaustive over small
//! degrees or on seeded random elements. Each check returns a description
//! of the first counterexample found.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::Bialgebra;
use super::element::{apply_left, apply_right, pairing, tensor, tensor_product, BasisKey, Element, Tensor};

pub type Check = Result<(), String>;

type E<A> = Element<<A as Bialgebra>::Key, i64>;

/// All basis keys of degree `<= max`.
pub fn keys_up_to<A: Bialgebra>(alg: &A, max: usize) -> Vec<A::Key> {
    (0..=max).flat_map(|n| alg.basis(n)).collect()
}

pub fn associativity<A: Bialgebra>(alg: &A, elems: &[E<A>]) -> Check {
    for x in elems {
        for y in elems {
            let xy = alg.product(x, y);
            for z in elems {
                let lhs = alg.product(&xy, z);
                let rhs = alg.product(x, &alg.product(y, z));
                if lhs != rhs {
                    return Err(format!("(xy)z != x(yz) for x={x:?}, y={y:?}, z={z:?}"));
                }
            }
        }
    }
    Ok(())
}

pub fn unit<A: Bialgebra>(alg: &A, elems: &[E<A>]) -> Check {
    let one = Element::one();
    for x in elems {
        if &alg.product(&one, x) != x || &alg.product(x, &one) != x {
            return Err(format!("1 is not a unit for {x:?}"));
        }
    }
    Ok(())
}

pub fn coassociativity<A: Bialgebra>(alg: &A, elems: &[E<A>]) -> Check {
    for x in elems {
        let d = alg.coproduct(x);
        let lhs = apply_left(&d, |k| alg.coproduct_key(k));
        let rhs = apply_right(&d, |k| alg.coproduct_key(k));
        if lhs != rhs {
            return Err(format!("coproduct not coassociative on {x:?}"));
        }
    }
    Ok(())
}

pub fn counit<A: Bialgebra>(alg: &A, elems: &[E<A>]) -> Check {
    for x in elems {
        let d = alg.coproduct(x);
        let left = d.map_linear(|(a, b)| if a.degree() == 0 { Element::monomial(b.clone(), 1) } else { Element::zero() });
        let right = d.map_linear(|(a, b)| if b.degree() == 0 { Element::monomial(a.clone(), 1) } else { Element::zero() });
        if &left != x || &right != x {
            return Err(format!("counit fails on {x:?}"));
        }
    }
    Ok(())
}

/// `Δ(xy) = Δ(x)Δ(y)`.
pub fn compatibility<A: Bialgebra>(alg: &A, elems: &[E<A>]) -> Check {
    let coproducts: Vec<Tensor<A::Key, i64>> = elems.iter().map(|x| alg.coproduct(x)).collect();
    for (x, dx) in elems.iter().zip(&coproducts) {
        for (y, dy) in elems.iter().zip(&coproducts) {
            let lhs = alg.coproduct(&alg.product(x, y));
            let rhs = tensor_product(dx, dy, |a, b| alg.product_keys(a, b));
            if lhs != rhs {
                return Err(format!("Δ(xy) != Δ(x)Δ(y) for x={x:?}, y={y:?}"));
            }
        }
    }
    Ok(())
}

/// `⟨Δ_A u, v ⊗ w⟩ = ⟨u, v ·_B w⟩` for bases in diagonal duality.
pub fn adjunction<A, B>(a: &A, b: &B, us: &[E<A>], vs: &[E<B>]) -> Check
where
    A: Bialgebra,
    B: Bialgebra<Key = A::Key>,
{
    for u in us {
        let du = a.coproduct(u);
        for v in vs {
            for w in vs {
                let lhs = pairing(&du, &tensor(v, w));
                let rhs = pairing(u, &b.product(v, w));
                if lhs != rhs {
                    return Err(format!("<Δu, v⊗w> = {lhs} but <u, vw> = {rhs} for u={u:?}, v={v:?}, w={w:?}"));
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive adjunction over all basis keys with `deg v + deg w <= max`.
pub fn adjunction_exhaustive<A, B>(a: &A, b: &B, max: usize) -> Check
where
    A: Bialgebra,
    B: Bialgebra<Key = A::Key>,
{
    let keys = keys_up_to(b, max);
    for v in &keys {
        for w in &keys {
            if v.degree() + w.degree() > max {
                continue;
            }
            let vw: E<B> = b.product_keys(v, w);
            for u in a.basis(v.degree() + w.degree()) {
                let lhs: i64 = a.coproduct_key::<i64>(&u).coeff(&(v.clone(), w.clone()));
                if lhs != vw.coeff(&u) {
                    return Err(format!("<Δu, v⊗w> = {lhs} but <u, vw> = {} for u={u:?}, v={v:?}, w={w:?}", vw.coeff(&u)));
                }
            }
        }
    }
    Ok(())
}

/// Basis elements of degree `<= max`.
pub fn basis_elements<A: Bialgebra>(alg: &A, max: usize) -> Vec<E<A>> {
    keys_up_to(alg, max).into_iter().map(Element::basis).collect()
}

/// Seeded random homogeneous elements with small integer coefficients and
/// degrees in `1..=max`.
pub fn random_elements<A: Bialgebra>(alg: &A, max: usize, count: usize, seed: u64) -> Vec<E<A>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases: Vec<Vec<A::Key>> = (0..=max).map(|n| alg.basis(n)).collect();
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max);
            let terms = rng.gen_range(1..=3);
            let mut e = Element::zero();
            for _ in 0..terms {
                if let Some(k) = bases[n].choose(&mut rng) {
                    e.add_term(k.clone(), rng.gen_range(-3..=3));
                }
            }
            e
        })
        .collect()
}

/// Runs the full bialgebra suite: exhaustive on basis elements up to
/// `exhaustive` and on `trials` random elements up to `random_max`.
/// Triple-product checks on random elements use consecutive triples.
pub fn bialgebra_suite<A: Bialgebra>(alg: &A, exhaustive: usize, random_max: usize, trials: usize, seed: u64) -> Check {
    let basis = basis_elements(alg, exhaustive);
    associativity(alg, &basis)?;
    unit(alg, &basis)?;
    coassociativity(alg, &basis)?;
    counit(alg, &basis)?;
    compatibility(alg, &basis)?;
    let rand = random_elements(alg, random_max, trials, seed);
    for w in rand.chunks(3) {
        if let [x, y, z] = w {
            let lhs = alg.product(&alg.product(x, y), z);
            let rhs = alg.product(x, &alg.product(y, z));
            if lhs != rhs {
                return Err(format!("(xy)z != x(yz) for x={x:?}, y={y:?}, z={z:?}"));
            }
        }
    }
    coassociativity(alg, &rand)?;
    counit(alg, &rand)?;
    for w in rand.chunks(2) {
        if let [x, y] = w {
            compatibility(alg, &[x.clone(), y.clone()])?;
        }
    }
    Ok(())
}
/// Exhaustive checks on basis keys whose total degree is at most
/// `exhaustive`, then `trials` random triples of elements of degrees
/// `1..=random_max`.
pub fn bounded_suite<A: Bialgebra>(alg: &A, exhaustive: usize, random_max: usize, trials: usize, seed: u64) -> Check {
    let basis = basis_elements(alg, exhaustive);
    let deg = |x: &E<A>| x.max_degree().unwrap_or(0);
    for x in &basis {
        for y in basis.iter().filter(|y| deg(x) + deg(y) <= exhaustive) {
            compatibility_on(alg, x, y)?;
            let zs: Vec<E<A>> = basis.iter().filter(|z| deg(x) + deg(y) + deg(z) <= exhaustive).cloned().collect();
            associativity_on(alg, x, y, &zs)?;
        }
    }
    unit(alg, &basis)?;
    coassociativity(alg, &basis)?;
    counit(alg, &basis)?;
    let rand = random_elements(alg, random_max, 3 * trials, seed);
    for w in rand.chunks(3) {
        if let [x, y, z] = w {
            associativity_on(alg, x, y, std::slice::from_ref(z))?;
            compatibility_on(alg, x, y)?;
            coassociativity(alg, std::slice::from_ref(x))?;
            counit(alg, std::slice::from_ref(x))?;
        }
    }
    Ok(())
}

fn compatibility_on<A: Bialgebra>(alg: &A, x: &E<A>, y: &E<A>) -> Check {
    let lhs = alg.coproduct(&alg.product(x, y));
    let rhs = tensor_product(&alg.coproduct(x), &alg.coproduct(y), |a, b| alg.product_keys(a, b));
    if lhs != rhs {
        return Err(format!("Δ(xy) != Δ(x)Δ(y) for x={x:?}, y={y:?}"));
    }
    Ok(())
}

fn associativity_on<A: Bialgebra>(alg: &A, x: &E<A>, y: &E<A>, zs: &[E<A>]) -> Check {
    let xy = alg.product(x, y);
    for z in zs {
        if alg.product(&xy, z) != alg.product(x, &alg.product(y, z)) {
            return Err(format!("(xy)z != x(yz) for x={x:?}, y={y:?}, z={z:?}"));
        }
    }
    Ok(())
}

