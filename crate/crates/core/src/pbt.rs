//! Colored planar binary trees `PBT^(ℓ)`, realized in `FQSym^(ℓ)` through
//! binary search tree insertion.

use std::fmt;
use std::str::FromStr;

use crate::colorcore::perm::{color_words, inverse};
use crate::colorcore::util::permutations;
use crate::colorcore::tree::bst_insert;
use crate::colorcore::word::{format_colors, parse_integers, ColoredWord};
use crate::colorcore::{BinaryTree, Color, ColoredPerm};
use crate::error::{Error, Result};
use crate::fqsym::{f_coproduct, f_product};
use crate::linear::{bilinear, regroup, tensor, BasisKey, Bialgebra, Coeff, Element, Tensor};

/// A tree with one color per internal node; node `v` in infix order carries
/// `colors[v - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColoredTree {
    tree: BinaryTree,
    colors: Vec<Color>,
}

impl ColoredTree {
    pub fn new(tree: BinaryTree, colors: Vec<Color>) -> Result<Self> {
        if tree.size() != colors.len() {
            return Err(Error::LengthMismatch { expected: tree.size(), found: colors.len() });
        }
        Ok(ColoredTree { tree, colors })
    }

    pub fn tree(&self) -> &BinaryTree {
        &self.tree
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn size(&self) -> usize {
        self.colors.len()
    }

    /// The key of the `P` element containing `F_{σ,w}`.
    pub fn of_colored_perm(h: &ColoredPerm) -> ColoredTree {
        let inv = inverse(h.perm());
        let colors = inv.iter().map(|&i| h.colors()[i as usize - 1]).collect();
        ColoredTree { tree: bst_insert(h.perm()), colors }
    }

    pub fn all(n: usize, palette: &[Color]) -> Vec<ColoredTree> {
        let words = color_words(n, palette);
        let mut out = Vec::new();
        for t in BinaryTree::all(n) {
            for u in &words {
                out.push(ColoredTree { tree: t.clone(), colors: u.clone() });
            }
        }
        out.sort();
        out
    }

    /// Algebra generators: trees whose root has an empty right subtree.
    pub fn generators(n: usize, palette: &[Color]) -> Vec<ColoredTree> {
        ColoredTree::all(n, palette).into_iter().filter(|t| t.tree.has_empty_right_branch()).collect()
    }
}

impl BasisKey for ColoredTree {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        ColoredTree::default()
    }
}

impl fmt::Display for ColoredTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.tree, format_colors(&self.colors))
    }
}

impl FromStr for ColoredTree {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (t, c) = s.rsplit_once(';').unwrap_or((s, ""));
        let tree: BinaryTree = t.parse().map_err(|e: Error| e.to_string())?;
        let colors = if c.trim().is_empty() { vec![0; tree.size()] } else { parse_integers(c)? };
        ColoredTree::new(tree, colors).map_err(|e| e.to_string())
    }
}

/// `P_{T,u} = Σ F_{σ, (u_{σ(1)},…,u_{σ(n)})}` over `σ` inserting to `T`.
pub fn p_element<R: Coeff>(k: &ColoredTree) -> Element<ColoredPerm, R> {
    let n = k.size();
    Element::sum_of(permutations(n).into_iter().filter(|s| bst_insert(s) == k.tree).map(|s| {
        let colors = s.iter().map(|&v| k.colors[v as usize - 1]).collect();
        ColoredPerm::from_word_unchecked(ColoredWord { letters: s, colors })
    }))
}

pub fn p_element_of<R: Coeff>(x: &Element<ColoredTree, R>) -> Element<ColoredPerm, R> {
    x.map_linear(p_element)
}

/// Inverse of [`p_element_of`] on its image.
pub fn f_to_p<R: Coeff>(x: &Element<ColoredPerm, R>) -> Result<Element<ColoredTree, R>> {
    regroup(x, |h| Some(ColoredTree::of_colored_perm(h)), p_element)
        .ok_or_else(|| Error::NotInSubspace(format!("{} is not a combination of P elements", x.render_with(|k| format!("F[{k}]")))))
}

pub fn p_product<R: Coeff>(a: &ColoredTree, b: &ColoredTree) -> Result<Element<ColoredTree, R>> {
    f_to_p(&bilinear(&p_element::<R>(a), &p_element::<R>(b), f_product))
}

pub fn p_coproduct<R: Coeff>(a: &ColoredTree) -> Result<Tensor<ColoredTree, R>> {
    let t = p_element::<R>(a).map_linear(f_coproduct);
    let canon = |(l, r): &(ColoredPerm, ColoredPerm)| {
        Some((ColoredTree::of_colored_perm(l), ColoredTree::of_colored_perm(r)))
    };
    regroup(&t, canon, |(l, r)| tensor(&p_element::<R>(l), &p_element::<R>(r)))
        .ok_or_else(|| Error::NotInSubspace(format!("ΔP[{a}] does not regroup")))
}

#[derive(Clone, Debug)]
pub struct PBasis {
    pub palette: Vec<Color>,
}

impl Bialgebra for PBasis {
    type Key = ColoredTree;

    fn product_keys<R: Coeff>(&self, a: &ColoredTree, b: &ColoredTree) -> Element<ColoredTree, R> {
        p_product(a, b).expect("P elements are closed under product")
    }

    fn coproduct_key<R: Coeff>(&self, a: &ColoredTree) -> Tensor<ColoredTree, R> {
        p_coproduct(a).expect("P elements are closed under coproduct")
    }

    fn basis(&self, n: usize) -> Vec<ColoredTree> {
        ColoredTree::all(n, &self.palette)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::laws;
    use std::collections::BTreeSet;

    fn k(s: &str) -> ColoredTree {
        s.parse().unwrap()
    }

    #[test]
    fn elements() {
        let one: Element<ColoredPerm, i64> = p_element(&k("(•,•);1"));
        assert_eq!(one, Element::basis("1;1".parse().unwrap()));
        let total: usize = BinaryTree::all(3).iter().map(|t| p_element::<i64>(&ColoredTree { tree: t.clone(), colors: vec![0; 3] }).len()).sum();
        assert_eq!(total, 6);
        assert!(ColoredTree::new(BinaryTree::all(2)[0].clone(), vec![0]).is_err());
    }

    #[test]
    fn dimensions_and_independence() {
        let dims: Vec<usize> = (1..=4).map(|n| ColoredTree::all(n, &[0, 1]).len()).collect();
        assert_eq!(dims, vec![2, 8, 40, 224]);
        let gens: Vec<usize> = (1..=4).map(|n| ColoredTree::generators(n, &[0, 1]).len()).collect();
        assert_eq!(gens, vec![2, 4, 16, 80]);
        for n in 0..=4 {
            let mut seen = BTreeSet::new();
            for t in ColoredTree::all(n, &[0, 1]) {
                for (h, _) in p_element::<i64>(&t).iter() {
                    assert!(seen.insert(h.clone()));
                }
            }
            assert_eq!(seen.len(), (1..=n).product::<usize>() << n);
        }
    }

    #[test]
    fn products() {
        let dot = k("(•,•);0");
        let got = p_product::<i64>(&dot, &dot).unwrap();
        let want: Element<ColoredTree, i64> = Element::sum_of([k("((•,•),•);00"), k("(•,(•,•));00")]);
        assert_eq!(got, want);
        for p in 0..=4 {
            for q in 0..=4 - p {
                for a in ColoredTree::all(p, &[0, 1]) {
                    for b in ColoredTree::all(q, &[0, 1]) {
                        let x = p_product::<i64>(&a, &b).unwrap();
                        assert!(x.iter().all(|(_, &c)| c > 0));
                    }
                }
            }
        }
    }

    #[test]
    fn coproducts() {
        for n in 0..=4 {
            for a in ColoredTree::all(n, &[0, 1]) {
                assert!(p_coproduct::<i64>(&a).unwrap().iter().all(|(_, &c)| c > 0));
            }
        }
    }

    #[test]
    fn hopf_laws() {
        laws::bialgebra_suite(&PBasis { palette: vec![0, 1] }, 2, 2, 30, 9).unwrap();
    }
}
