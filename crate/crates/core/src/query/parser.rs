//! Recursive-descent parser for query expressions.

use crate::algebra::Condition;
use crate::error::{LatqlError, Result};

use super::ast::{QueryAst, SemanticsSpec, KEYWORDS};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Keyword(&'static str),
    Punct(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    loop {
        let (tline, tcol) = (line, col);
        let Some(&c) = chars.peek() else {
            tokens.push(Token { tok: Tok::Eof, line, col });
            return Ok(tokens);
        };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
            }
            '(' | ')' | '[' | ']' | '{' | '}' | ',' | ';' | '&' | '|' | '!' | '=' => {
                bump(&mut chars);
                tokens.push(Token { tok: Tok::Punct(c), line: tline, col: tcol });
            }
            '"' => {
                bump(&mut chars);
                let mut s = String::new();
                loop {
                    match chars.peek() {
                        None => {
                            return Err(LatqlError::QuerySyntax {
                                line: tline,
                                col: tcol,
                                message: "unterminated string".into(),
                            })
                        }
                        Some('"') => {
                            bump(&mut chars);
                            break;
                        }
                        Some('\\') => {
                            bump(&mut chars);
                            match chars.peek() {
                                Some(&e @ ('"' | '\\')) => {
                                    bump(&mut chars);
                                    s.push(e);
                                }
                                _ => {
                                    return Err(LatqlError::QuerySyntax {
                                        line: tline,
                                        col: tcol,
                                        message: "invalid escape".into(),
                                    })
                                }
                            }
                        }
                        Some(_) => s.push(bump(&mut chars)),
                    }
                }
                tokens.push(Token { tok: Tok::Ident(s), line: tline, col: tcol });
            }
            c if c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-') => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '-') {
                        s.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                let tok = match KEYWORDS.iter().find(|&&k| k == s) {
                    Some(&k) => Tok::Keyword(k),
                    None => Tok::Ident(s),
                };
                tokens.push(Token { tok, line: tline, col: tcol });
            }
            other => {
                return Err(LatqlError::QuerySyntax {
                    line: tline,
                    col: tcol,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> LatqlError {
        let t = self.peek();
        LatqlError::QuerySyntax {
            line: t.line,
            col: t.col,
            message: message.into(),
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<()> {
        if self.peek().tok == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match &self.peek().tok {
            Tok::Ident(_) => {
                let Tok::Ident(s) = self.next().tok else { unreachable!() };
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn name_list(&mut self, open: char, close: char) -> Result<Vec<String>> {
        self.expect_punct(open)?;
        let mut names = Vec::new();
        if self.peek().tok != Tok::Punct(close) {
            loop {
                names.push(self.ident("a name")?);
                if self.peek().tok == Tok::Punct(',') {
                    self.next();
                } else {
                    break;
                }
            }
        }
        self.expect_punct(close)?;
        Ok(names)
    }

    fn expr(&mut self) -> Result<QueryAst> {
        match self.peek().tok.clone() {
            Tok::Ident(_) => Ok(QueryAst::Ref(self.ident("a name")?)),
            Tok::Keyword(k) => {
                self.next();
                self.expect_punct('(')?;
                let ast = match k {
                    "BUILD" => QueryAst::Build(Box::new(self.expr()?)),
                    "SELECT" => {
                        let e = self.expr()?;
                        self.expect_punct(',')?;
                        let cond = self.condition()?;
                        QueryAst::Select(Box::new(e), cond)
                    }
                    "PROJECT" => {
                        let e = self.expr()?;
                        self.expect_punct(',')?;
                        let attrs = self.name_list('[', ']')?;
                        QueryAst::Project(Box::new(e), attrs)
                    }
                    "APPOSE" | "SUBPOSE" | "GLUE" | "JOIN" => {
                        let a = Box::new(self.expr()?);
                        self.expect_punct(',')?;
                        let b = Box::new(self.expr()?);
                        match k {
                            "APPOSE" => QueryAst::Appose(a, b),
                            "SUBPOSE" => QueryAst::Subpose(a, b),
                            "GLUE" => QueryAst::Glue(a, b),
                            _ => QueryAst::Join(a, b),
                        }
                    }
                    "GENERALIZE" => {
                        let e = self.expr()?;
                        self.expect_punct(',')?;
                        let cover = self.ident("a cover name")?;
                        self.expect_punct(',')?;
                        let sem = match self.peek().tok {
                            Tok::Keyword("exists") => SemanticsSpec::Exists,
                            Tok::Keyword("forall") => SemanticsSpec::ForAll,
                            Tok::Keyword("alpha") => SemanticsSpec::Alpha,
                            _ => return Err(self.error("expected exists, forall or alpha")),
                        };
                        self.next();
                        QueryAst::Generalize(Box::new(e), cover, sem)
                    }
                    "APPROX" => {
                        let e = self.expr()?;
                        self.expect_punct(',')?;
                        let objs = self.name_list('{', '}')?;
                        self.expect_punct(';')?;
                        let attrs = self.name_list('{', '}')?;
                        QueryAst::Approx(Box::new(e), objs, attrs)
                    }
                    other => return Err(self.error(format!("'{other}' is not an operator"))),
                };
                self.expect_punct(')')?;
                Ok(ast)
            }
            _ => Err(self.error("expected an expression")),
        }
    }

    /// Atom: NAME or NAME = VALUE (the latter resolves to "name:value").
    fn atom(&mut self) -> Result<String> {
        let name = self.ident("an attribute")?;
        if self.peek().tok == Tok::Punct('=') {
            self.next();
            let value = self.ident("a value")?;
            Ok(format!("{name}:{value}"))
        } else {
            Ok(name)
        }
    }

    fn condition(&mut self) -> Result<Condition> {
        // or-level
        let mut terms = vec![self.cond_and()?];
        while self.peek().tok == Tok::Punct('|') {
            self.next();
            terms.push(self.cond_and()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Condition::Or(terms)
        })
    }

    fn cond_and(&mut self) -> Result<Condition> {
        let mut terms = vec![self.cond_unary()?];
        while self.peek().tok == Tok::Punct('&') {
            self.next();
            terms.push(self.cond_unary()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Condition::And(terms)
        })
    }

    fn cond_unary(&mut self) -> Result<Condition> {
        match self.peek().tok {
            Tok::Punct('!') => {
                self.next();
                // negation applies to atoms only; allow one pair of parens
                if self.peek().tok == Tok::Punct('(') {
                    self.next();
                    let a = self.atom().map_err(|_| {
                        self.error("negation applies to atoms only")
                    })?;
                    self.expect_punct(')')?;
                    Ok(Condition::Not(a))
                } else {
                    Ok(Condition::Not(self.atom()?))
                }
            }
            Tok::Punct('(') => {
                self.next();
                let c = self.condition()?;
                self.expect_punct(')')?;
                Ok(c)
            }
            _ => Ok(Condition::Atom(self.atom()?)),
        }
    }
}

/// Parse a complete query; trailing input is a syntax error.
pub fn parse_query(input: &str) -> Result<QueryAst> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let ast = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(ast)
}
