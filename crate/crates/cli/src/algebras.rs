//! The algebras reachable from the command line, with their literal tags,
//! key parsers and JSON key forms.

use std::fmt::Display;
use std::str::FromStr;

use chopf_core::colorcore::{ColorMonoid, ColoredPerm};
use chopf_core::colorcore::ColoredPf;
use chopf_core::fqsym::{internal_product_strict, Basis, FBasis, GBasis};
use chopf_core::linear::{Bialgebra, BasisKey, Element, Tensor};
use chopf_core::pbt::{ColoredTree, PBasis};
use chopf_core::pqsym::typeb::{NcbBasis, NcbKey};
use chopf_core::pqsym::{PFBasis, PGBasis};
use chopf_core::symql::{mr_internal, s_internal, ColoredComposition, MRBasis, MRDualBasis, QSymBasis, SymBasis, VectorComposition};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::literal::parse_terms;

pub type Q = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    FqsymG,
    FqsymF,
    Sym,
    QSym,
    Mr,
    MrDual,
    PqsymG,
    PqsymF,
    Ncb,
    Pbt,
}

pub const KINDS: &[(Kind, &str, &str)] = &[
    (Kind::FqsymG, "fqsym-g", "G"),
    (Kind::FqsymF, "fqsym-f", "F"),
    (Kind::Sym, "sym", "S"),
    (Kind::QSym, "qsym", "M"),
    (Kind::Mr, "mr", "Smr"),
    (Kind::MrDual, "mr-dual", "Mmr"),
    (Kind::PqsymG, "pqsym-g", "Gp"),
    (Kind::PqsymF, "pqsym-f", "Fp"),
    (Kind::Ncb, "ncb", "Pb"),
    (Kind::Pbt, "pbt", "P"),
];

impl Kind {
    pub fn name(self) -> &'static str {
        KINDS.iter().find(|k| k.0 == self).expect("listed").1
    }

    pub fn tag(self) -> &'static str {
        KINDS.iter().find(|k| k.0 == self).expect("listed").2
    }

    pub fn from_tag(tag: &str) -> Option<Kind> {
        KINDS.iter().find(|k| k.2 == tag).map(|k| k.0)
    }

    /// The dual basis in the duality pairing, when there is one.
    pub fn dual(self) -> Option<Kind> {
        Some(match self {
            Kind::FqsymG => Kind::FqsymF,
            Kind::FqsymF => Kind::FqsymG,
            Kind::Sym => Kind::QSym,
            Kind::QSym => Kind::Sym,
            Kind::Mr => Kind::MrDual,
            Kind::MrDual => Kind::Mr,
            Kind::PqsymG => Kind::PqsymF,
            Kind::PqsymF => Kind::PqsymG,
            Kind::Ncb | Kind::Pbt => return None,
        })
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Kind, String> {
        let s = match s {
            "fqsym" | "g" => "fqsym-g",
            "f" => "fqsym-f",
            "pqsym" => "pqsym-g",
            "mr-m" => "mr-dual",
            "typeb" | "pb" => "ncb",
            other => other,
        };
        KINDS.iter().find(|k| k.1 == s).map(|k| k.0).ok_or_else(|| {
            let names: Vec<&str> = KINDS.iter().map(|k| k.1).collect();
            format!("unknown algebra `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// An algebra as seen from the command line.
pub trait Surface {
    type Alg: Bialgebra;

    fn kind(&self) -> Kind;
    fn alg(&self) -> &Self::Alg;
    fn monoid(&self) -> ColorMonoid;
    fn parse_key(&self, body: &str) -> Result<Key<Self>, String>;
    fn key_body(&self, k: &Key<Self>) -> String;
    fn key_json(&self, k: &Key<Self>) -> Value;

    fn internal(&self, _x: &E<Self>, _y: &E<Self>) -> Result<E<Self>, String> {
        Err(format!("no internal product on {}", self.kind().name()))
    }

    fn show(&self, k: &Key<Self>) -> String {
        if *k == <Key<Self> as BasisKey>::unit() {
            "1".to_string()
        } else {
            format!("{}[{}]", self.kind().tag(), self.key_body(k))
        }
    }

    fn parse(&self, src: &str) -> Result<E<Self>, String> {
        let mut out = Element::zero();
        for t in parse_terms(src).map_err(|e| format!("{e} in `{src}`"))? {
            let key = match &t.tag {
                None => <Key<Self> as BasisKey>::unit(),
                Some(tag) if tag == self.kind().tag() => self.parse_key(&t.body).map_err(|e| format!("{tag}[{}]: {e}", t.body))?,
                Some(tag) => {
                    return Err(match Kind::from_tag(tag) {
                        Some(k) => format!("`{tag}[...]` belongs to {}, not {}", k.name(), self.kind().name()),
                        None => format!("unknown basis tag `{tag}`"),
                    })
                }
            };
            out.add_term(key, t.coeff);
        }
        Ok(out)
    }

    fn render(&self, x: &E<Self>) -> String {
        let unit = <Key<Self> as BasisKey>::unit();
        render_terms(x.iter().map(|(k, c)| ((*k != unit).then(|| self.show(k)), c)))
    }

    fn render_tensor(&self, x: &Tensor<Key<Self>, Q>) -> String {
        render_terms(x.iter().map(|((a, b), c)| (Some(format!("{} ⊗ {}", self.show(a), self.show(b))), c)))
    }

    fn colors_json(&self) -> Value {
        match self.monoid() {
            ColorMonoid::Cyclic(l) => json!({"kind": "mod", "l": l}),
            ColorMonoid::Naturals => json!({"kind": "nat"}),
            ColorMonoid::Integers => json!({"kind": "int"}),
        }
    }

    fn json(&self, x: &E<Self>) -> Value {
        let terms: Vec<Value> = x.iter().map(|(k, c)| json!({"coeff": c.to_string(), "key": self.key_json(k)})).collect();
        json!({"algebra": self.kind().name(), "colors": self.colors_json(), "terms": terms})
    }

    fn tensor_json(&self, x: &Tensor<Key<Self>, Q>) -> Value {
        let terms: Vec<Value> = x
            .iter()
            .map(|((a, b), c)| json!({"coeff": c.to_string(), "key": [self.key_json(a), self.key_json(b)]}))
            .collect();
        json!({"algebra": format!("{0}⊗{0}", self.kind().name()), "colors": self.colors_json(), "terms": terms})
    }
}

/// `c1*k1 + c2*k2 - ...`; a term without a key is a scalar.
pub fn render_terms<'a>(terms: impl Iterator<Item = (Option<String>, &'a Q)>) -> String {
    let mut s = String::new();
    for (i, (k, c)) in terms.enumerate() {
        let neg = c < &Q::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        s.push_str(match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        match k {
            None => s.push_str(&abs.to_string()),
            Some(k) if abs.is_one() => s.push_str(&k),
            Some(k) => s.push_str(&format!("{abs}*{k}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub type Key<S> = <<S as Surface>::Alg as Bialgebra>::Key;
pub type E<S> = Element<Key<S>, Q>;

fn check_colors(monoid: ColorMonoid, colors: &[i64]) -> Result<(), String> {
    monoid.validate_word(colors).map_err(|e| e.to_string())
}

fn parse_via<K: FromStr>(body: &str) -> Result<K, String>
where
    K::Err: Display,
{
    body.trim().parse::<K>().map_err(|e| e.to_string())
}

fn perm_json(k: &ColoredPerm) -> Value {
    json!({"perm": k.perm(), "colors": k.colors()})
}

fn require_cyclic(monoid: ColorMonoid, what: &str) -> Result<u32, String> {
    monoid.order().ok_or_else(|| format!("{what} needs --colors mod:l"))
}

fn rows_of(monoid: ColorMonoid) -> Result<usize, String> {
    match monoid {
        ColorMonoid::Cyclic(l) => Ok(l as usize),
        ColorMonoid::Naturals => Ok(2),
        ColorMonoid::Integers => Err("Sym and QSym need --colors nat or mod:l".into()),
    }
}

pub struct Fqsym<A> {
    kind: Kind,
    alg: A,
}

pub fn fqsym_g(monoid: ColorMonoid) -> Fqsym<GBasis> {
    Fqsym { kind: Kind::FqsymG, alg: GBasis::new(monoid) }
}

pub fn fqsym_f(monoid: ColorMonoid) -> Fqsym<FBasis> {
    Fqsym { kind: Kind::FqsymF, alg: FBasis::new(monoid) }
}

macro_rules! fqsym_surface {
    ($basis:ty, $which:expr) => {
        impl Surface for Fqsym<$basis> {
            type Alg = $basis;

            fn kind(&self) -> Kind {
                self.kind
            }

            fn alg(&self) -> &$basis {
                &self.alg
            }

            fn monoid(&self) -> ColorMonoid {
                self.alg.monoid
            }

            fn parse_key(&self, body: &str) -> Result<ColoredPerm, String> {
                let k: ColoredPerm = parse_via(body)?;
                check_colors(self.monoid(), k.colors())?;
                Ok(k)
            }

            fn key_body(&self, k: &ColoredPerm) -> String {
                k.to_string()
            }

            fn key_json(&self, k: &ColoredPerm) -> Value {
                perm_json(k)
            }

            fn internal(&self, x: &E<Self>, y: &E<Self>) -> Result<E<Self>, String> {
                internal_product_strict(x, y, $which, self.monoid()).map_err(|e| e.to_string())
            }
        }
    };
}

fqsym_surface!(GBasis, Basis::G);
fqsym_surface!(FBasis, Basis::F);

pub struct Vector<A> {
    kind: Kind,
    monoid: ColorMonoid,
    alg: A,
}

pub fn sym(monoid: ColorMonoid) -> Result<Vector<SymBasis>, String> {
    let rows = rows_of(monoid)?;
    Ok(Vector { kind: Kind::Sym, monoid, alg: SymBasis::new(monoid, rows) })
}

pub fn qsym(monoid: ColorMonoid) -> Result<Vector<QSymBasis>, String> {
    let rows = rows_of(monoid)?;
    Ok(Vector { kind: Kind::QSym, monoid, alg: QSymBasis { rows } })
}

fn parse_vector(monoid: ColorMonoid, body: &str) -> Result<VectorComposition, String> {
    let k: VectorComposition = parse_via(body)?;
    if let Some(l) = monoid.order() {
        if k.height() > l as usize {
            return Err(format!("columns have more than {l} rows"));
        }
    }
    Ok(k)
}

fn vector_body(monoid: ColorMonoid, k: &VectorComposition) -> String {
    let rows = monoid.order().map(|l| l as usize).unwrap_or(1);
    k.fmt_padded(rows)
}

fn vector_json(k: &VectorComposition) -> Value {
    let cols: Vec<Vec<u32>> = k.columns().iter().map(|c| c.entries().to_vec()).collect();
    json!({"columns": cols})
}

macro_rules! vector_surface {
    ($basis:ty, $internal:expr) => {
        impl Surface for Vector<$basis> {
            type Alg = $basis;

            fn kind(&self) -> Kind {
                self.kind
            }

            fn alg(&self) -> &$basis {
                &self.alg
            }

            fn monoid(&self) -> ColorMonoid {
                self.monoid
            }

            fn parse_key(&self, body: &str) -> Result<VectorComposition, String> {
                parse_vector(self.monoid, body)
            }

            fn key_body(&self, k: &VectorComposition) -> String {
                vector_body(self.monoid, k)
            }

            fn key_json(&self, k: &VectorComposition) -> Value {
                vector_json(k)
            }

            fn internal(&self, x: &E<Self>, y: &E<Self>) -> Result<E<Self>, String> {
                #[allow(clippy::redundant_closure_call)]
                ($internal)(self, x, y)
            }
        }
    };
}

vector_surface!(SymBasis, |s: &Vector<SymBasis>, x: &E<Vector<SymBasis>>, y: &E<Vector<SymBasis>>| s_internal(x, y, s.monoid)
    .map_err(|e| e.to_string()));
vector_surface!(QSymBasis, |_: &Vector<QSymBasis>, _: &E<Vector<QSymBasis>>, _: &E<Vector<QSymBasis>>| Err(
    "no internal product on qsym; use sym".to_string()
));

pub struct Mr<A> {
    kind: Kind,
    l: u32,
    alg: A,
}

pub fn mr(monoid: ColorMonoid) -> Result<Mr<MRBasis>, String> {
    let l = require_cyclic(monoid, "MR")?;
    Ok(Mr { kind: Kind::Mr, l, alg: MRBasis { l } })
}

pub fn mr_dual(monoid: ColorMonoid) -> Result<Mr<MRDualBasis>, String> {
    let l = require_cyclic(monoid, "MR")?;
    Ok(Mr { kind: Kind::MrDual, l, alg: MRDualBasis { l } })
}

macro_rules! mr_surface {
    ($basis:ty, $has_internal:expr) => {
        impl Surface for Mr<$basis> {
            type Alg = $basis;

            fn kind(&self) -> Kind {
                self.kind
            }

            fn alg(&self) -> &$basis {
                &self.alg
            }

            fn monoid(&self) -> ColorMonoid {
                ColorMonoid::Cyclic(self.l)
            }

            fn parse_key(&self, body: &str) -> Result<ColoredComposition, String> {
                let k: ColoredComposition = parse_via(body)?;
                check_colors(self.monoid(), k.colors())?;
                Ok(k)
            }

            fn key_body(&self, k: &ColoredComposition) -> String {
                k.to_string()
            }

            fn key_json(&self, k: &ColoredComposition) -> Value {
                json!({"parts": k.parts(), "colors": k.colors()})
            }

            fn internal(&self, x: &E<Self>, y: &E<Self>) -> Result<E<Self>, String> {
                if $has_internal {
                    mr_internal(x, y, self.l).map_err(|e| e.to_string())
                } else {
                    Err("no internal product on mr-dual; use mr".to_string())
                }
            }
        }
    };
}

mr_surface!(MRBasis, true);
mr_surface!(MRDualBasis, false);

pub struct Pqsym<A> {
    kind: Kind,
    monoid: ColorMonoid,
    alg: A,
}

pub fn pqsym_g(monoid: ColorMonoid) -> Pqsym<PGBasis> {
    Pqsym { kind: Kind::PqsymG, monoid, alg: PGBasis::new(monoid) }
}

pub fn pqsym_f(monoid: ColorMonoid) -> Pqsym<PFBasis> {
    Pqsym { kind: Kind::PqsymF, monoid, alg: PFBasis::new(monoid) }
}

macro_rules! pqsym_surface {
    ($basis:ty) => {
        impl Surface for Pqsym<$basis> {
            type Alg = $basis;

            fn kind(&self) -> Kind {
                self.kind
            }

            fn alg(&self) -> &$basis {
                &self.alg
            }

            fn monoid(&self) -> ColorMonoid {
                self.monoid
            }

            fn parse_key(&self, body: &str) -> Result<ColoredPf, String> {
                let k: ColoredPf = parse_via(body)?;
                check_colors(self.monoid, k.colors())?;
                Ok(k)
            }

            fn key_body(&self, k: &ColoredPf) -> String {
                k.to_string()
            }

            fn key_json(&self, k: &ColoredPf) -> Value {
                json!({"letters": k.letters(), "colors": k.colors()})
            }
        }
    };
}

pqsym_surface!(PGBasis);
pqsym_surface!(PFBasis);

pub struct Ncb {
    alg: NcbBasis,
}

pub fn ncb(monoid: ColorMonoid) -> Result<Ncb, String> {
    let l = require_cyclic(monoid, "NC^B")?;
    Ok(Ncb { alg: NcbBasis { l } })
}

impl Surface for Ncb {
    type Alg = NcbBasis;

    fn kind(&self) -> Kind {
        Kind::Ncb
    }

    fn alg(&self) -> &NcbBasis {
        &self.alg
    }

    fn monoid(&self) -> ColorMonoid {
        ColorMonoid::Cyclic(self.alg.l)
    }

    fn parse_key(&self, body: &str) -> Result<NcbKey, String> {
        let k: NcbKey = parse_via(body)?;
        check_colors(self.monoid(), k.colors())?;
        Ok(k)
    }

    fn key_body(&self, k: &NcbKey) -> String {
        k.to_string()
    }

    fn key_json(&self, k: &NcbKey) -> Value {
        json!({"letters": k.letters(), "factor_colors": k.colors()})
    }
}

pub struct Pbt {
    monoid: ColorMonoid,
    alg: PBasis,
}

pub fn pbt(monoid: ColorMonoid) -> Pbt {
    Pbt { monoid, alg: PBasis { palette: monoid.palette(2) } }
}

impl Surface for Pbt {
    type Alg = PBasis;

    fn kind(&self) -> Kind {
        Kind::Pbt
    }

    fn alg(&self) -> &PBasis {
        &self.alg
    }

    fn monoid(&self) -> ColorMonoid {
        self.monoid
    }

    fn parse_key(&self, body: &str) -> Result<ColoredTree, String> {
        let k: ColoredTree = parse_via(body)?;
        check_colors(self.monoid, k.colors())?;
        Ok(k)
    }

    fn key_body(&self, k: &ColoredTree) -> String {
        k.to_string()
    }

    fn key_json(&self, k: &ColoredTree) -> Value {
        json!({"tree": k.tree().to_string(), "colors": k.colors()})
    }
}

/// Runs `$body` with `$s` bound to the surface of `$kind` over `$monoid`.
#[macro_export]
macro_rules! with_surface {
    ($kind:expr, $monoid:expr, $s:ident => $body:expr) => {{
        use $crate::algebras as a;
        match $kind {
            a::Kind::FqsymG => {
                let $s = a::fqsym_g($monoid);
                $body
            }
            a::Kind::FqsymF => {
                let $s = a::fqsym_f($monoid);
                $body
            }
            a::Kind::Sym => {
                let $s = a::sym($monoid).map_err($crate::CliError::Usage)?;
                $body
            }
            a::Kind::QSym => {
                let $s = a::qsym($monoid).map_err($crate::CliError::Usage)?;
                $body
            }
            a::Kind::Mr => {
                let $s = a::mr($monoid).map_err($crate::CliError::Usage)?;
                $body
            }
            a::Kind::MrDual => {
                let $s = a::mr_dual($monoid).map_err($crate::CliError::Usage)?;
                $body
            }
            a::Kind::PqsymG => {
                let $s = a::pqsym_g($monoid);
                $body
            }
            a::Kind::PqsymF => {
                let $s = a::pqsym_f($monoid);
                $body
            }
            a::Kind::Ncb => {
                let $s = a::ncb($monoid).map_err($crate::CliError::Usage)?;
                $body
            }
            a::Kind::Pbt => {
                let $s = a::pbt($monoid);
                $body
            }
        }
    }};
}
