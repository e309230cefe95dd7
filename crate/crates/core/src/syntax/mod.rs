//! Parse-tree ingestion, tree navigation, and permutation algebra.
//!
//! All types here are immutable after construction and safe to share across
//! parallel workers. Token indices are 1-based throughout; 0 is reserved for
//! "no position" in order-preference vectors.

mod dep;
mod perm;
mod ptb;

pub use dep::{parse_dependencies, parse_dependency_file};
pub use perm::{apply_permutation, identity, invert, is_permutation};
pub use ptb::parse_ptb;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SyntaxError {
    #[error("PTB format error at offset {offset}: {msg}")]
    PtbFormat { offset: usize, msg: String },
    #[error("dependency format error at line {line}: {msg}")]
    DepFormat { line: usize, msg: String },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("not a permutation of 1..={n}: {why}")]
    NotAPermutation { n: usize, why: String },
    #[error("length mismatch: sequence has {seq} elements, permutation has {perm}")]
    LengthMismatch { seq: usize, perm: usize },
}

/// A single token with its 1-based sentence position and POS tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub index: usize,
    pub pos_tag: String,
}

impl Token {
    pub fn new(surface: impl Into<String>, index: usize, pos_tag: impl Into<String>) -> Self {
        let surface = surface.into();
        debug_assert!(index >= 1, "token indices are 1-based");
        debug_assert!(!surface.is_empty(), "token surface must be non-empty");
        Token { surface, index, pos_tag: pos_tag.into() }
    }
}

/// Inclusive token-index interval `[start, end]`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start >= 1 && start <= end);
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false // spans are non-empty by construction
    }

    pub fn contains(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    /// Proper containment: inside `self` but not equal to it.
    pub fn strictly_inside(&self, outer: Span) -> bool {
        outer.contains(*self) && *self != outer
    }

    pub fn disjoint(&self, other: Span) -> bool {
        self.end < other.start || other.end < self.start
    }
}

/// A constituency-parse node. Leaves carry exactly one token; the leaf label
/// is the token's POS tag. Internal labels come from an open string
/// vocabulary so any treebank convention ingests cleanly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituencyTree {
    pub label: String,
    pub children: Vec<ConstituencyTree>,
    pub span: Span,
    pub leaf_token: Option<Token>,
}

impl ConstituencyTree {
    pub fn leaf(token: Token) -> Self {
        ConstituencyTree {
            label: token.pos_tag.clone(),
            span: Span::new(token.index, token.index),
            children: Vec::new(),
            leaf_token: Some(token),
        }
    }

    /// Build an internal node; children must cover a contiguous interval in
    /// order, without gaps or overlaps.
    pub fn internal(
        label: impl Into<String>,
        children: Vec<ConstituencyTree>,
    ) -> Result<Self, SyntaxError> {
        if children.is_empty() {
            return Err(SyntaxError::InvalidTree("internal node with no children".into()));
        }
        for pair in children.windows(2) {
            if pair[1].span.start != pair[0].span.end + 1 {
                return Err(SyntaxError::InvalidTree(format!(
                    "child spans not contiguous: [{},{}] then [{},{}]",
                    pair[0].span.start, pair[0].span.end, pair[1].span.start, pair[1].span.end
                )));
            }
        }
        let span = Span::new(children[0].span.start, children.last().unwrap().span.end);
        Ok(ConstituencyTree { label: label.into(), children, span, leaf_token: None })
    }

    pub fn is_leaf(&self) -> bool {
        self.leaf_token.is_some()
    }

    /// Tokens in left-to-right surface order covering `self.span`.
    pub fn yield_tokens(&self) -> Vec<&Token> {
        let mut out = Vec::with_capacity(self.span.len());
        self.collect_yield(&mut out);
        out
    }

    fn collect_yield<'a>(&'a self, out: &mut Vec<&'a Token>) {
        if let Some(tok) = &self.leaf_token {
            out.push(tok);
        } else {
            for c in &self.children {
                c.collect_yield(out);
            }
        }
    }

    /// All nodes in pre-order (self first, then children left to right).
    pub fn nodes_preorder(&self) -> Vec<&ConstituencyTree> {
        let mut out = Vec::new();
        self.collect_preorder(&mut out);
        out
    }

    fn collect_preorder<'a>(&'a self, out: &mut Vec<&'a ConstituencyTree>) {
        out.push(self);
        for c in &self.children {
            c.collect_preorder(out);
        }
    }

    /// Serialize back to single-line PTB bracketing.
    pub fn to_ptb_string(&self) -> String {
        let mut s = String::new();
        self.write_ptb(&mut s);
        s
    }

    fn write_ptb(&self, out: &mut String) {
        if let Some(tok) = &self.leaf_token {
            out.push('(');
            out.push_str(&tok.pos_tag);
            out.push(' ');
            out.push_str(&tok.surface);
            out.push(')');
        } else {
            out.push('(');
            out.push_str(&self.label);
            for c in &self.children {
                out.push(' ');
                c.write_ptb(out);
            }
            out.push(')');
        }
    }
}

/// A dependency tree over a token sequence; `heads[i]` is the 1-based head of
/// token `i + 1`, with 0 marking the single root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependencyTree {
    pub tokens: Vec<Token>,
    pub heads: Vec<usize>,
}

impl DependencyTree {
    /// Validates arity, head range, single root, and acyclicity.
    pub fn new(tokens: Vec<Token>, heads: Vec<usize>) -> Result<Self, SyntaxError> {
        let n = tokens.len();
        if heads.len() != n {
            return Err(SyntaxError::InvalidTree(format!(
                "{} tokens but {} head entries",
                n,
                heads.len()
            )));
        }
        let mut roots = 0usize;
        for (i, &h) in heads.iter().enumerate() {
            if h > n {
                return Err(SyntaxError::InvalidTree(format!(
                    "token {} has out-of-range head {}",
                    i + 1,
                    h
                )));
            }
            if h == i + 1 {
                return Err(SyntaxError::InvalidTree(format!("token {} is its own head", i + 1)));
            }
            if h == 0 {
                roots += 1;
            }
        }
        if roots != 1 {
            return Err(SyntaxError::InvalidTree(format!("expected exactly 1 root, found {roots}")));
        }
        // Walking head links from every token must reach the root within n steps.
        for start in 1..=n {
            let mut cur = start;
            let mut steps = 0;
            while heads[cur - 1] != 0 {
                cur = heads[cur - 1];
                steps += 1;
                if steps > n {
                    return Err(SyntaxError::InvalidTree(format!(
                        "cycle detected through token {start}"
                    )));
                }
            }
        }
        Ok(DependencyTree { tokens, heads })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// 1-based index of the root token.
    pub fn root(&self) -> usize {
        self.heads.iter().position(|&h| h == 0).map(|i| i + 1).expect("validated single root")
    }

    /// 1-based indices of the dependents of `head`, in surface order.
    pub fn children(&self, head: usize) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.heads[i - 1] == head).collect()
    }

    /// Depth-first pre-order traversal from the root; children in surface order.
    pub fn traverse_preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        self.visit(self.root(), &mut out);
        out
    }

    fn visit(&self, node: usize, out: &mut Vec<usize>) {
        out.push(node);
        for c in self.children(node) {
            self.visit(c, out);
        }
    }
}

/// A rule application recorded while deriving a sentence reordering, for
/// per-derivation reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleApplication {
    /// Depth of the rewritten subtree below the sentence root.
    pub level: usize,
    /// The abstracted phrase the transducer saw, space-joined.
    pub abstracted_input: String,
    /// The transducer output, space-joined.
    pub output: String,
}

/// A scored permutation of source token indices. `perm[i]` is the 1-based
/// source index generated at output slot `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Reordering {
    pub perm: Vec<usize>,
    /// Log-probability-scale score; the identity reordering scores 0.
    pub score: f64,
    /// Phrase-level rules applied to derive this reordering.
    pub provenance: Vec<RuleApplication>,
}

impl Reordering {
    pub fn identity(n: usize) -> Self {
        Reordering { perm: identity(n), score: 0.0, provenance: Vec::new() }
    }

    pub fn new(perm: Vec<usize>, score: f64) -> Result<Self, SyntaxError> {
        if !is_permutation(&perm) {
            return Err(SyntaxError::NotAPermutation {
                n: perm.len(),
                why: format!("{perm:?}"),
            });
        }
        Ok(Reordering { perm, score, provenance: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// Per-source-token output slots: entry `i` is the 1-based position at
    /// which source token `i + 1` should be generated. This is the inverse
    /// permutation of `perm` and the form consumed by the order-aware
    /// encoder.
    pub fn order_positions(&self) -> Vec<usize> {
        invert(&self.perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tok(s: &str, i: usize) -> Token {
        Token::new(s, i, "X")
    }

    #[test]
    fn internal_rejects_gap() {
        let a = ConstituencyTree::leaf(tok("a", 1));
        let c = ConstituencyTree::leaf(tok("c", 3));
        assert!(ConstituencyTree::internal("NP", vec![a, c]).is_err());
    }

    #[test]
    fn yield_matches_span() {
        let leaves: Vec<_> = (1..=3).map(|i| ConstituencyTree::leaf(tok("w", i))).collect();
        let t = ConstituencyTree::internal("NP", leaves).unwrap();
        assert_eq!(t.span, Span::new(1, 3));
        assert_eq!(t.yield_tokens().len(), 3);
    }

    #[test]
    fn dependency_cycle_detected() {
        let tokens = vec![tok("a", 1), tok("b", 2)];
        assert!(DependencyTree::new(tokens, vec![2, 1]).is_err());
    }

    #[test]
    fn dependency_multi_root_rejected() {
        let tokens = vec![tok("a", 1), tok("b", 2)];
        assert!(DependencyTree::new(tokens, vec![0, 0]).is_err());
    }

    #[test]
    fn dependency_root_and_children() {
        let tokens = vec![tok("a", 1), tok("b", 2), tok("c", 3)];
        let t = DependencyTree::new(tokens, vec![2, 0, 2]).unwrap();
        assert_eq!(t.root(), 2);
        assert_eq!(t.children(2), vec![1, 3]);
        assert_eq!(t.traverse_preorder(), vec![2, 1, 3]);
    }

    #[test]
    fn order_positions_are_inverse() {
        let r = Reordering::new(vec![4, 5, 1, 2, 3], -1.0).unwrap();
        // source token 1 is generated at slot 3, token 4 at slot 1, ...
        assert_eq!(r.order_positions(), vec![3, 4, 5, 1, 2]);
    }
}
