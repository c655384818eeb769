//! Colored noncommutative Lagrange inversion: the solution of
//! `g = Σ_n S_n g^n` with `S_n = Σ_k b_k S_n^{(k)}`, and Raney's formula.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::colorcore::parking::nondecreasing_parking_functions;
use crate::colorcore::perm::color_words;
use crate::colorcore::util::{factorial, multinomial, weak_compositions};
use crate::colorcore::word::{format_colors, format_letters, parse_integers};
use crate::colorcore::Color;
use crate::linear::{BasisKey, Element, Monomial, Poly, Var};
use crate::QPoly;

/// A word `S_{i_1}^{(k_1)} … S_{i_m}^{(k_m)}`, the letter `b_k` fused into
/// the color of each factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TreeWord {
    arities: Vec<u32>,
    colors: Vec<Color>,
}

impl TreeWord {
    pub fn new(arities: Vec<u32>, colors: Vec<Color>) -> crate::Result<Self> {
        if arities.len() != colors.len() {
            return Err(crate::Error::LengthMismatch { expected: arities.len(), found: colors.len() });
        }
        Ok(TreeWord { arities, colors })
    }

    pub fn arities(&self) -> &[u32] {
        &self.arities
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn concat(&self, other: &TreeWord) -> TreeWord {
        let mut t = self.clone();
        t.arities.extend_from_slice(&other.arities);
        t.colors.extend_from_slice(&other.colors);
        t
    }

    pub fn tree(&self) -> Option<PlaneTree> {
        PlaneTree::from_polish(&self.arities)
    }
}

impl BasisKey for TreeWord {
    fn degree(&self) -> usize {
        self.arities.iter().map(|&a| a as usize).sum()
    }

    fn unit() -> Self {
        TreeWord::default()
    }
}

impl fmt::Display for TreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", format_letters(&self.arities), format_colors(&self.colors))
    }
}

impl FromStr for TreeWord {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (a, c) = s.split_once(';').unwrap_or((s, ""));
        let arities: Vec<u32> = parse_integers(a)?
            .into_iter()
            .map(|x| u32::try_from(x).map_err(|_| format!("negative arity {x}")))
            .collect::<std::result::Result<_, _>>()?;
        let colors = if c.trim().is_empty() { vec![0; arities.len()] } else { parse_integers(c)? };
        TreeWord::new(arities, colors).map_err(|e| e.to_string())
    }
}

/// An ordered (plane) tree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    /// Reads a preorder list of arities; `None` unless it encodes exactly one tree.
    pub fn from_polish(arities: &[u32]) -> Option<PlaneTree> {
        fn read(a: &[u32], pos: &mut usize) -> Option<PlaneTree> {
            let k = *a.get(*pos)?;
            *pos += 1;
            let children = (0..k).map(|_| read(a, pos)).collect::<Option<Vec<_>>>()?;
            Some(PlaneTree { children })
        }
        let mut pos = 0;
        let t = read(arities, &mut pos)?;
        (pos == arities.len()).then_some(t)
    }

    pub fn to_polish(&self) -> Vec<u32> {
        let mut out = vec![self.children.len() as u32];
        for c in &self.children {
            out.extend(c.to_polish());
        }
        out
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// `Ev(π).0`: the multiplicities of `1, …, n` in `π`, then `0`.
pub fn evaluation_word(pi: &[u32]) -> Vec<u32> {
    let mut ev = vec![0; pi.len() + 1];
    for &a in pi {
        ev[a as usize - 1] += 1;
    }
    ev
}

/// The degree `n` component of `g`: `Σ_{π ∈ NDPF_n} S^{Ev(π).0}` with every
/// factor colored in all `l` ways.
pub fn lagrange_component(n: usize, l: u32) -> Element<TreeWord, BigInt> {
    let palette: Vec<Color> = (0..l as Color).collect();
    let words = color_words(n + 1, &palette);
    let mut out = Element::zero();
    for pi in nondecreasing_parking_functions(n) {
        let ev = evaluation_word(&pi);
        for c in &words {
            out.add_term(TreeWord { arities: ev.clone(), colors: c.clone() }, BigInt::one());
        }
    }
    out
}

/// The homogeneous components of `g` in degrees `0..=deg`.
pub fn lagrange_solve(deg: usize, l: u32) -> Vec<Element<TreeWord, BigInt>> {
    (0..=deg).map(|n| lagrange_component(n, l)).collect()
}

type Graded = Vec<Element<TreeWord, BigInt>>;

fn graded_product(x: &Graded, y: &Graded, deg: usize) -> Graded {
    let mut out: Graded = vec![Element::zero(); deg + 1];
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate().take((deg + 1).saturating_sub(i)) {
            for (a, c) in xi.iter() {
                for (b, d) in yj.iter() {
                    out[i + j].add_term(a.concat(b), c.clone() * d.clone());
                }
            }
        }
    }
    out
}

/// `Σ_n S_n g^n` in degrees `0..=deg`, for `g` given by its components.
/// Only the part of `g^n` of degree at most `deg − n` is formed.
pub fn lagrange_rhs(g: &[Element<TreeWord, BigInt>], deg: usize, l: u32) -> Vec<Element<TreeWord, BigInt>> {
    let mut g: Graded = g.to_vec();
    g.resize(deg + 1, Element::zero());
    let mut out: Graded = vec![Element::zero(); deg + 1];
    let mut power: Graded = vec![Element::zero(); deg + 1];
    power[0] = Element::one();
    for n in 0..=deg {
        let mut s_n: Graded = vec![Element::zero(); deg + 1];
        s_n[n] = Element::sum_of((0..l as Color).map(|k| TreeWord { arities: vec![n as u32], colors: vec![k] }));
        for (o, t) in out.iter_mut().zip(graded_product(&s_n, &power, deg)) {
            o.add_scaled(&t, &BigInt::one());
        }
        power = graded_product(&power, &g, deg.saturating_sub(n + 1));
        power.resize(deg + 1, Element::zero());
    }
    out
}

/// `g − Σ_n S_n g^n` in degrees `0..=deg`; zero when the solution is right.
pub fn lagrange_defect(deg: usize, l: u32) -> Vec<Element<TreeWord, BigInt>> {
    let g = lagrange_solve(deg, l);
    let mut d = lagrange_rhs(&g, deg, l);
    for (di, gi) in d.iter_mut().zip(&g) {
        di.add_scaled(gi, &-BigInt::one());
    }
    d
}

pub fn y_var(k: usize) -> Var {
    Var::new('y', k as u32 + 1)
}

pub fn z_var(k: usize) -> Var {
    Var::new('z', k as u32 + 1)
}

fn ratio(a: BigInt, b: BigInt) -> BigRational {
    BigRational::new(a, b)
}

/// `S_i^{(k)} ↦ y_k z_k^i / i!` on each factor; the power of `t` is the
/// number of factors and is left implicit.
pub fn raney_specialize(x: &Element<TreeWord, BigInt>) -> QPoly {
    let mut out = Poly::zero();
    for (w, c) in x.iter() {
        let mut m = Monomial::one();
        let mut den = BigInt::one();
        for (&a, &k) in w.arities.iter().zip(&w.colors) {
            let k = k as usize;
            m = m.mul(&Monomial::from_pairs([(y_var(k), 1), (z_var(k), a as i32)]));
            den *= factorial(a as u64);
        }
        out.add_term(m, ratio(c.clone(), den));
    }
    out
}

/// The coefficient of `t^{n+1}` in the specialized solution.
pub fn raney_coefficient(n: usize, l: u32) -> QPoly {
    raney_specialize(&lagrange_component(n, l))
}

/// `g_n = (1/(n+1)) Σ binom(n+1; 𝐧) binom(n; 𝐪) Π y_k^{n_k} (n_k z_k)^{q_k}`.
pub fn raney_closed(n: usize, l: u32) -> QPoly {
    let mut out = Poly::zero();
    for nv in weak_compositions(n as u32 + 1, l as usize) {
        let a = multinomial(&nv.iter().map(|&x| x as u64).collect::<Vec<_>>());
        for qv in weak_compositions(n as u32, l as usize) {
            let mut c = a.clone() * multinomial(&qv.iter().map(|&x| x as u64).collect::<Vec<_>>());
            for (&nk, &qk) in nv.iter().zip(&qv) {
                c *= BigInt::from(nk).pow(qk);
            }
            if c.is_zero() {
                continue;
            }
            let m = Monomial::from_pairs(
                (0..l as usize).flat_map(|k| [(y_var(k), nv[k] as i32), (z_var(k), qv[k] as i32)]),
            );
            out.add_term(m, ratio(c, BigInt::from(n + 1)));
        }
    }
    out
}

/// Sets every variable of `p` to 1.
pub fn evaluate_at_ones(p: &QPoly) -> BigRational {
    p.terms().map(|(_, c)| c.clone()).fold(BigRational::zero(), |a, b| a + b)
}
