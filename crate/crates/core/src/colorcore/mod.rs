//! Combinatorial kernels: colors, words, permutations, parking functions,
//! compositions and trees.

pub mod color;
pub mod composition;
pub mod parking;
pub mod perm;
pub mod tree;
pub mod util;
pub mod word;

pub use color::{Color, ColorMonoid};
pub use composition::Composition;
pub use parking::ColoredPf;
pub use perm::ColoredPerm;
pub use tree::BinaryTree;
pub use word::ColoredWord;

use crate::linear::BasisKey;

impl BasisKey for ColoredWord {
    fn degree(&self) -> usize {
        self.len()
    }

    fn unit() -> Self {
        ColoredWord::empty()
    }
}

impl BasisKey for ColoredPerm {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        ColoredPerm::empty()
    }
}

impl BasisKey for ColoredPf {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        ColoredPf::empty()
    }
}

impl BasisKey for Composition {
    fn degree(&self) -> usize {
        self.size()
    }

    fn unit() -> Self {
        Composition::empty()
    }
}
