//! Penn-Treebank-style bracketed tree reader.
//!
//! One tree per line, UTF-8. A node whose body is a single bare word becomes
//! a leaf (its label is the token's POS tag). A label-less outer wrapper
//! around a single tree, as emitted by several treebanks, is unwrapped.

use super::{ConstituencyTree, Span, SyntaxError, Token};

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    next_index: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError::PtbFormat { offset: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t') | Some(b'\n') | Some(b'\r')) {
            self.pos += 1;
        }
    }

    fn read_atom(&mut self) -> String {
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b == b'(' || b == b')' || b.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn parse_node(&mut self) -> Result<ConstituencyTree, SyntaxError> {
        self.skip_ws();
        if self.peek() != Some(b'(') {
            return Err(self.err("expected '('"));
        }
        let open_at = self.pos;
        self.pos += 1;
        self.skip_ws();
        let label = self.read_atom();
        self.skip_ws();

        let mut subtrees: Vec<ConstituencyTree> = Vec::new();
        let mut words: Vec<String> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b'(') => {
                    subtrees.push(self.parse_node()?);
                }
                Some(_) => {
                    let w = self.read_atom();
                    if w.is_empty() {
                        return Err(self.err("empty atom"));
                    }
                    words.push(w);
                }
                None => {
                    self.pos = open_at;
                    return Err(self.err("unbalanced brackets: '(' never closed"));
                }
            }
        }

        if label.is_empty() {
            // Label-less wrapper around exactly one subtree is tolerated.
            if subtrees.len() == 1 && words.is_empty() {
                return Ok(subtrees.pop().unwrap());
            }
            self.pos = open_at;
            return Err(self.err("empty constituent label"));
        }
        if subtrees.is_empty() && words.len() == 1 {
            let index = self.next_index;
            self.next_index += 1;
            let tok = Token::new(words.pop().unwrap(), index, label);
            return Ok(ConstituencyTree::leaf(tok));
        }
        if subtrees.is_empty() && words.is_empty() {
            self.pos = open_at;
            return Err(self.err(format!("constituent '{label}' has no content")));
        }
        // Bare words mixed under a phrasal node: promote each to a leaf tagged
        // with the enclosing label, merged in surface order with the subtrees.
        if !words.is_empty() {
            // Words read after subtrees lost their interleaving; reject the
            // ambiguous case instead of silently reordering tokens.
            if !subtrees.is_empty() {
                self.pos = open_at;
                return Err(self.err(format!(
                    "constituent '{label}' mixes bare words with subtrees"
                )));
            }
            for w in words {
                let index = self.next_index;
                self.next_index += 1;
                subtrees.push(ConstituencyTree::leaf(Token::new(w, index, label.clone())));
            }
        }
        ConstituencyTree::internal(label, subtrees)
            .map_err(|e| SyntaxError::PtbFormat { offset: open_at, msg: e.to_string() })
    }
}

/// Parse a single bracketed tree; spans are computed and leaves numbered 1..n.
pub fn parse_ptb(text: &str) -> Result<ConstituencyTree, SyntaxError> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0, next_index: 1 };
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let tree = cur.parse_node()?;
    cur.skip_ws();
    if let Some(b) = cur.peek() {
        if b == b')' {
            return Err(cur.err("unbalanced brackets: unexpected ')'"));
        }
        return Err(cur.err("trailing content after tree"));
    }
    debug_assert_eq!(tree.span, Span::new(1, cur.next_index - 1));
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_leaf_tree() {
        let t = parse_ptb("(S (NP (PRP I)) (VP (VBD ran)))").unwrap();
        assert_eq!(t.span, Span::new(1, 2));
        let toks = t.yield_tokens();
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[0].surface, "I");
        assert_eq!(toks[0].pos_tag, "PRP");
        assert_eq!(toks[1].surface, "ran");
        assert_eq!(toks[1].pos_tag, "VBD");
    }

    #[test]
    fn unbalanced_is_an_error_with_offset() {
        match parse_ptb("(S") {
            Err(SyntaxError::PtbFormat { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected format error, got {other:?}"),
        }
        assert!(parse_ptb("(S (NP (PRP I))").is_err());
        assert!(parse_ptb("(S (NP (PRP I))))").is_err());
    }

    #[test]
    fn empty_constituent_rejected() {
        assert!(parse_ptb("()").is_err());
        assert!(parse_ptb("(S ())").is_err());
        assert!(parse_ptb("(S ( ) (VP (VB go)))").is_err());
    }

    #[test]
    fn outer_wrapper_unwraps() {
        let a = parse_ptb("((S (NP (PRP I)) (VP (VBD ran))))").unwrap();
        let b = parse_ptb("(S (NP (PRP I)) (VP (VBD ran)))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn serialization_round_trips() {
        let src = "(S (NP (DT the) (NN dog)) (VP (VBD barked)) (. .))";
        let t = parse_ptb(src).unwrap();
        assert_eq!(t.to_ptb_string(), src);
        assert_eq!(parse_ptb(&t.to_ptb_string()).unwrap(), t);
    }
}
