//! Planar binary trees and binary search tree insertion.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A planar binary tree. `Leaf` is the empty tree; the size of a tree is its
/// number of internal nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    /// Left and right subtrees of the root.
    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    /// All trees with `n` nodes.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for m in 1..=n {
            let mut trees = Vec::new();
            for k in 0..m {
                for l in &table[k] {
                    for r in &table[m - 1 - k] {
                        trees.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            trees.sort();
            table.push(trees);
        }
        table.swap_remove(n)
    }

    /// True when the root has no right subtree.
    pub fn has_empty_right_branch(&self) -> bool {
        matches!(self, BinaryTree::Node(_, r) if r.is_leaf())
    }
}

/// Shape of the binary search tree obtained by inserting the letters of `w`
/// from right to left (smaller values to the left).
pub fn bst_insert(w: &[u32]) -> BinaryTree {
    fn go(values: &[u32]) -> BinaryTree {
        // The first inserted value is the root; the rest split by comparison.
        match values.split_first() {
            None => BinaryTree::Leaf,
            Some((&root, rest)) => {
                let left: Vec<u32> = rest.iter().copied().filter(|&x| x < root).collect();
                let right: Vec<u32> = rest.iter().copied().filter(|&x| x > root).collect();
                BinaryTree::node(go(&left), go(&right))
            }
        }
    }
    let mut order = w.to_vec();
    order.reverse();
    let t = go(&order);
    debug_assert_eq!(t.size(), w.len());
    t
}

impl Ord for BinaryTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| match (self, other) {
            (BinaryTree::Leaf, BinaryTree::Leaf) => Ordering::Equal,
            (BinaryTree::Node(a, b), BinaryTree::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
            _ => unreachable!("trees of equal size"),
        })
    }
}

impl PartialOrd for BinaryTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for BinaryTree {
    fn default() -> Self {
        BinaryTree::Leaf
    }
}

/// `•` for a leaf, `(L,R)` for a node.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "•"),
            BinaryTree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    /// Accepts `•`, `.` or `o` for leaves.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::InvalidTree(format!("trailing input at {pos} in `{s}`")));
        }
        Ok(t)
    }
}

fn parse_tree(c: &[char], pos: &mut usize) -> Result<BinaryTree> {
    let err = |p: usize, what: &str| Error::InvalidTree(format!("expected {what} at {p}"));
    match c.get(*pos) {
        Some('•') | Some('.') | Some('o') => {
            *pos += 1;
            Ok(BinaryTree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let l = parse_tree(c, pos)?;
            if c.get(*pos) != Some(&',') {
                return Err(err(*pos, "`,`"));
            }
            *pos += 1;
            let r = parse_tree(c, pos)?;
            if c.get(*pos) != Some(&')') {
                return Err(err(*pos, "`)`"));
            }
            *pos += 1;
            Ok(BinaryTree::node(l, r))
        }
        _ => Err(err(*pos, "a tree")),
    }
}
