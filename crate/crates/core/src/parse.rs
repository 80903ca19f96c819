//! Ideal expressions: `(x*z, x*w, y*z, y*w)`.
//!
//! ```text
//! ideal := '(' term (',' term)* ')'
//! term  := var ('*' var)* | '1'
//! ```
//!
//! `(0)` denotes the zero ideal and a `1` term the unit ideal, matching how
//! ideals are printed. Repeated variables in a term collapse. Whitespace is
//! ignored everywhere. Positions in errors are byte offsets.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{SquarefreeIdeal, VarSet, VariableContext};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Comma,
    Star,
    Ident(&'a str),
    Number(&'a str),
    End,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    /// Next token and its starting offset.
    fn next(&mut self) -> Result<(Token<'a>, usize)> {
        let bytes = self.text.as_bytes();
        while self.pos < bytes.len() && (bytes[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(start) else {
            return Ok((Token::End, start));
        };
        let single = |t| Ok((t, start));
        match b {
            b'(' => {
                self.pos += 1;
                single(Token::Open)
            }
            b')' => {
                self.pos += 1;
                single(Token::Close)
            }
            b',' => {
                self.pos += 1;
                single(Token::Comma)
            }
            b'*' => {
                self.pos += 1;
                single(Token::Star)
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok((Token::Ident(&self.text[start..self.pos]), start))
            }
            b if b.is_ascii_digit() => {
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                Ok((Token::Number(&self.text[start..self.pos]), start))
            }
            _ => Err(Error::Parse {
                position: start,
                expected: "'(', ')', ',', '*' or a variable name".into(),
            }),
        }
    }
}

fn expected<T>(position: usize, what: &str) -> Result<T> {
    Err(Error::Parse { position, expected: what.into() })
}

/// Parses an expression into generator supports (not yet minimalized).
pub fn parse_ideal_expression(text: &str, ctx: &VariableContext) -> Result<Vec<VarSet>> {
    let mut lex = Lexer::new(text);
    let (tok, pos) = lex.next()?;
    if tok != Token::Open {
        return expected(pos, "'('");
    }

    let mut supports = Vec::new();
    let mut zero = false;
    loop {
        let (tok, pos) = lex.next()?;
        let mut term = VarSet::EMPTY;
        let mut tok = match tok {
            Token::Number("0") if supports.is_empty() && !zero => {
                zero = true;
                lex.next()?
            }
            Token::Number("1") => {
                supports.push(VarSet::EMPTY);
                lex.next()?
            }
            Token::Ident(name) => {
                term = term.with(lookup(ctx, name, pos)?);
                loop {
                    let (next, pos) = lex.next()?;
                    if next != Token::Star {
                        break (next, pos);
                    }
                    match lex.next()? {
                        (Token::Ident(name), pos) => term = term.with(lookup(ctx, name, pos)?),
                        (_, pos) => return expected(pos, "variable name after '*'"),
                    }
                }
            }
            _ => return expected(pos, "variable name"),
        };
        if !term.is_empty() {
            supports.push(term);
        }
        if zero {
            // `0` must be the only term
            if tok.0 != Token::Close {
                return expected(tok.1, "')' after 0");
            }
        }
        match tok.0 {
            Token::Comma => continue,
            Token::Close => {
                tok = lex.next()?;
                if tok.0 != Token::End {
                    return expected(tok.1, "end of input");
                }
                return Ok(supports);
            }
            _ => return expected(tok.1, "',' or ')'"),
        }
    }
}

fn lookup(ctx: &VariableContext, name: &str, pos: usize) -> Result<usize> {
    ctx.index_of(name).ok_or_else(|| Error::Parse {
        position: pos,
        expected: format!("a declared variable (`{name}` is not declared)"),
    })
}

/// Parses and normalizes in one step.
pub fn parse_ideal(text: &str, ctx: &Arc<VariableContext>) -> Result<SquarefreeIdeal> {
    SquarefreeIdeal::from_sets(ctx, parse_ideal_expression(text, ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::make_context;

    fn ctx() -> Arc<VariableContext> {
        make_context(&["x", "y", "z", "w"]).unwrap()
    }

    fn names(c: &VariableContext, sets: &[VarSet]) -> Vec<Vec<String>> {
        sets.iter().map(|s| c.set_names(*s)).collect()
    }

    #[test]
    fn accepts_the_grammar() {
        let c = ctx();
        let got = parse_ideal_expression("(x*z, x*w, y*z, y*w)", &c).unwrap();
        assert_eq!(
            names(&c, &got),
            vec![vec!["x", "z"], vec!["x", "w"], vec!["y", "z"], vec!["y", "w"]]
        );
        let got = parse_ideal_expression("  ( y ,x * z )  ", &c).unwrap();
        assert_eq!(names(&c, &got), vec![vec!["y"], vec!["x", "z"]]);
        let got = parse_ideal_expression("(x*x*y)", &c).unwrap();
        assert_eq!(names(&c, &got), vec![vec!["x", "y"]]);
    }

    #[test]
    fn zero_and_unit() {
        let c = ctx();
        assert!(parse_ideal("(0)", &c).unwrap().is_zero());
        assert!(parse_ideal("(1)", &c).unwrap().is_unit());
        assert!(parse_ideal("(x, 1)", &c).unwrap().is_unit());
        assert!(matches!(parse_ideal("(0, x)", &c), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_ideal("(x, 0)", &c), Err(Error::Parse { position: 4, .. })));
    }

    #[test]
    fn rejects_with_positions() {
        let c = make_context(&["x"]).unwrap();
        assert_eq!(
            parse_ideal_expression("(x*q)", &c),
            Err(Error::Parse {
                position: 3,
                expected: "a declared variable (`q` is not declared)".into()
            })
        );
        let cases = [
            ("x", 0),
            ("", 0),
            ("()", 1),
            ("(x", 2),
            ("(x,)", 3),
            ("(x*)", 3),
            ("(x) y", 4),
            ("(x y)", 3),
            ("(x # y)", 3),
        ];
        for (text, position) in cases {
            match parse_ideal_expression(text, &c) {
                Err(Error::Parse { position: p, .. }) => assert_eq!(p, position, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn display_round_trips() {
        let c = ctx();
        for text in ["(x*z, x*w, y*z, y*w)", "(y, x*z)", "(0)", "(1)"] {
            let i = parse_ideal(text, &c).unwrap();
            assert_eq!(parse_ideal(&i.to_string(), &c).unwrap(), i);
        }
    }
}

#[cfg(test)]
mod fuzz {
    use super::*;
    use crate::ideal::make_context;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn never_panics_and_positions_are_in_range(text in "[()xyzq*, 01#]{0,24}") {
            let c = make_context(&["x", "y", "z"]).unwrap();
            if let Err(e) = parse_ideal_expression(&text, &c) {
                match e {
                    Error::Parse { position, .. } => prop_assert!(position <= text.len()),
                    other => prop_assert!(false, "unexpected error {other:?}"),
                }
            }
        }

        #[test]
        fn arbitrary_unicode_never_panics(text in "\\PC{0,32}") {
            let c = make_context(&["x", "y"]).unwrap();
            let _ = parse_ideal_expression(&text, &c);
        }
    }
}
