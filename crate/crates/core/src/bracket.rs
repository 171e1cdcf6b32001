//! Bracket arrangements on products of length `n` as full binary trees.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Algebra;
use crate::error::{check_len, Error, Result};
use crate::linalg::Vector;
use crate::scalar::Scalar;

/// Largest product length for which arrangements are enumerated.
pub const MAX_LEAVES: usize = 8;

/// Leaves carry their 1-based position in the product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

fn check_length(n: usize, max: usize) -> Result<()> {
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange { order: n, min: 2, max })
    }
}

impl BracketTree {
    fn node(l: BracketTree, r: BracketTree) -> BracketTree {
        BracketTree::Node(Box::new(l), Box::new(r))
    }

    /// `((..(x1 x2) ..) x_{n-1}) x_n`.
    pub fn left_comb(n: usize) -> Result<BracketTree> {
        check_length(n, usize::MAX)?;
        let mut t = BracketTree::Leaf(1);
        for i in 2..=n {
            t = BracketTree::node(t, BracketTree::Leaf(i));
        }
        Ok(t)
    }

    /// `x1 (x2 (.. (x_{n-1} x_n)..))`.
    pub fn right_comb(n: usize) -> Result<BracketTree> {
        check_length(n, usize::MAX)?;
        let mut t = BracketTree::Leaf(n);
        for i in (1..n).rev() {
            t = BracketTree::node(BracketTree::Leaf(i), t);
        }
        Ok(t)
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BracketTree::Leaf(_))
    }

    /// Compact form, e.g. `((xx)x)`.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        self.write_compact(&mut s);
        s
    }

    fn write_compact(&self, out: &mut String) {
        match self {
            BracketTree::Leaf(_) => out.push('x'),
            BracketTree::Node(l, r) => {
                out.push('(');
                l.write_compact(out);
                r.write_compact(out);
                out.push(')');
            }
        }
    }

    /// Accepts `((xx)x)` and the labelled `((x1 x2) x3)`; whitespace is
    /// ignored and labels must follow left-to-right numbering.
    pub fn parse(text: &str) -> Result<BracketTree> {
        let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &chars, at: 0, next_leaf: 1, len: text.len() };
        let tree = p.tree()?;
        if p.at != chars.len() {
            return Err(Error::Parse { pos: chars[p.at].0, msg: "trailing input".into() });
        }
        Ok(tree)
    }

    /// Evaluates `[x_1, ..., x_n]_f` in `a`.
    pub fn evaluate(&self, a: &Algebra, args: &[Vector]) -> Result<Vector> {
        check_len(self.leaf_count(), args.len())?;
        for x in args {
            check_len(a.dim(), x.len())?;
        }
        Ok(self.eval_unchecked(a, args))
    }

    pub(crate) fn eval_unchecked<V: AsRef<[Scalar]>>(&self, a: &Algebra, args: &[V]) -> Vector {
        match self {
            BracketTree::Leaf(i) => args[i - 1].as_ref().to_vec(),
            BracketTree::Node(l, r) => a.mul(&l.eval_unchecked(a, args), &r.eval_unchecked(a, args)),
        }
    }

    /// Same tree with leaves renumbered from `start`.
    fn shifted(&self, by: usize) -> BracketTree {
        match self {
            BracketTree::Leaf(i) => BracketTree::Leaf(i + by),
            BracketTree::Node(l, r) => BracketTree::node(l.shifted(by), r.shifted(by)),
        }
    }
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    at: usize,
    next_leaf: usize,
    len: usize,
}

impl Parser<'_> {
    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |c| c.0)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|c| c.1)
    }

    fn tree(&mut self) -> Result<BracketTree> {
        match self.peek() {
            Some('x') => {
                self.at += 1;
                let start = self.pos();
                let mut digits = String::new();
                while let Some(c) = self.peek().filter(char::is_ascii_digit) {
                    digits.push(c);
                    self.at += 1;
                }
                let leaf = self.next_leaf;
                if !digits.is_empty() && digits.parse::<usize>().ok() != Some(leaf) {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("leaf label x{digits} out of order, expected x{leaf}"),
                    });
                }
                self.next_leaf += 1;
                Ok(BracketTree::Leaf(leaf))
            }
            Some('(') => {
                self.at += 1;
                let l = self.tree()?;
                let r = self.tree()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse { pos: self.pos(), msg: "expected ')'".into() });
                }
                self.at += 1;
                Ok(BracketTree::node(l, r))
            }
            Some(c) => Err(Error::Parse { pos: self.pos(), msg: format!("unexpected {c:?}") }),
            None => Err(Error::Parse { pos: self.pos(), msg: "unexpected end of input".into() }),
        }
    }
}

impl FromStr for BracketTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BracketTree::parse(s)
    }
}

/// Labelled form, e.g. `((x1 x2) x3)`.
impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(i) => write!(f, "x{i}"),
            BracketTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// All arrangements of length `n`, ordered by size of the left subtree and
/// then recursively.
pub fn enumerate_arrangements(n: usize) -> Result<Vec<BracketTree>> {
    check_length(n, MAX_LEAVES)?;
    Ok(shapes(n))
}

fn shapes(n: usize) -> Vec<BracketTree> {
    if n == 1 {
        return vec![BracketTree::Leaf(1)];
    }
    let mut out = Vec::new();
    for k in 1..n {
        let rights = shapes(n - k);
        for l in shapes(k) {
            for r in &rights {
                out.push(BracketTree::node(l.clone(), r.shifted(k)));
            }
        }
    }
    out
}
