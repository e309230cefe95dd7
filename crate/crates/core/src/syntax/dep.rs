//! Dependency file reader: one token per line, fields
//! `index<TAB>surface<TAB>pos<TAB>head`, blank line between sentences.

use super::{DependencyTree, SyntaxError, Token};

/// Parse one sentence worth of tab-separated dependency lines.
pub fn parse_dependencies(text: &str) -> Result<DependencyTree, SyntaxError> {
    let mut trees = parse_dependency_file(text)?;
    match trees.len() {
        1 => Ok(trees.pop().unwrap()),
        0 => Err(SyntaxError::DepFormat { line: 1, msg: "no tokens".into() }),
        n => Err(SyntaxError::DepFormat {
            line: 1,
            msg: format!("expected one sentence, found {n}"),
        }),
    }
}

/// Parse a whole file of blank-line-separated sentences.
pub fn parse_dependency_file(text: &str) -> Result<Vec<DependencyTree>, SyntaxError> {
    let mut trees = Vec::new();
    let mut tokens: Vec<Token> = Vec::new();
    let mut heads: Vec<usize> = Vec::new();
    let mut first_line = 1usize;

    let flush = |tokens: &mut Vec<Token>,
                 heads: &mut Vec<usize>,
                 first_line: usize,
                 trees: &mut Vec<DependencyTree>|
     -> Result<(), SyntaxError> {
        if tokens.is_empty() {
            return Ok(());
        }
        let tree = DependencyTree::new(std::mem::take(tokens), std::mem::take(heads))
            .map_err(|e| SyntaxError::DepFormat { line: first_line, msg: e.to_string() })?;
        trees.push(tree);
        Ok(())
    };

    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() {
            flush(&mut tokens, &mut heads, first_line, &mut trees)?;
            first_line = lineno + 1;
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(SyntaxError::DepFormat {
                line: lineno,
                msg: format!("expected 4 tab-separated fields, found {}", fields.len()),
            });
        }
        let index: usize = fields[0].trim().parse().map_err(|_| SyntaxError::DepFormat {
            line: lineno,
            msg: format!("bad token index '{}'", fields[0]),
        })?;
        if index != tokens.len() + 1 {
            return Err(SyntaxError::DepFormat {
                line: lineno,
                msg: format!("token index {} out of sequence (expected {})", index, tokens.len() + 1),
            });
        }
        let surface = fields[1].trim();
        if surface.is_empty() {
            return Err(SyntaxError::DepFormat { line: lineno, msg: "empty surface form".into() });
        }
        let head: usize = fields[3].trim().parse().map_err(|_| SyntaxError::DepFormat {
            line: lineno,
            msg: format!("bad head index '{}'", fields[3]),
        })?;
        tokens.push(Token::new(surface, index, fields[2].trim()));
        heads.push(head);
    }
    flush(&mut tokens, &mut heads, first_line, &mut trees)?;
    Ok(trees)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_token_sentence() {
        let t = parse_dependencies("1\tthe\tDT\t2\n2\tdog\tNN\t0\n3\tran\tVBD\t2\n").unwrap();
        assert_eq!(t.root(), 2);
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn cycle_is_rejected() {
        assert!(parse_dependencies("1\ta\tX\t2\n2\tb\tX\t1\n").is_err());
    }

    #[test]
    fn out_of_range_head_rejected() {
        assert!(parse_dependencies("1\ta\tX\t5\n").is_err());
    }

    #[test]
    fn blank_lines_split_sentences() {
        let trees =
            parse_dependency_file("1\ta\tX\t0\n\n1\tb\tY\t2\n2\tc\tZ\t0\n").unwrap();
        assert_eq!(trees.len(), 2);
        assert_eq!(trees[0].len(), 1);
        assert_eq!(trees[1].len(), 2);
    }
}
