//! Formula syntax: tree representation, parser, printer, substitution.
//!
//! The connectives are conjunction `&`, disjunction `|`, negation `~` and
//! the modal-like operator `#` (nabla). Unicode `∧ ∨ ¬ ∇` are accepted on
//! input. Precedence from tightest to loosest: prefix `~`/`#`, then `&`,
//! then `|`; binary connectives associate to the left.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A propositional formula over `{&, |, ~, #}`.
///
/// Structural equality is syntactic; nothing is normalized. The derived
/// `Ord` is an arbitrary but fixed structural order used to keep formula
/// sets canonical.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(String),
    Neg(Box<Formula>),
    Nabla(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    pub fn nabla(f: Formula) -> Formula {
        Formula::Nabla(Box::new(f))
    }

    pub fn and(f: Formula, g: Formula) -> Formula {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: Formula, g: Formula) -> Formula {
        Formula::Or(Box::new(f), Box::new(g))
    }

    /// The consistency operator `~#(f & ~f)`.
    pub fn circ(f: Formula) -> Formula {
        Formula::neg(Formula::bullet(f))
    }

    /// The inconsistency operator `#(f & ~f)`.
    pub fn bullet(f: Formula) -> Formula {
        Formula::nabla(Formula::and(f.clone(), Formula::neg(f)))
    }

    /// Names of the propositional variables occurring in the formula.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut acc = BTreeSet::new();
        self.collect_vars(&mut acc);
        acc
    }

    fn collect_vars(&self, acc: &mut BTreeSet<String>) {
        match self {
            Formula::Var(name) => {
                acc.insert(name.clone());
            }
            Formula::Neg(f) | Formula::Nabla(f) => f.collect_vars(acc),
            Formula::And(f, g) | Formula::Or(f, g) => {
                f.collect_vars(acc);
                g.collect_vars(acc);
            }
        }
    }

    /// Replace every occurrence of the variable `var` by `g`.
    pub fn substitute(&self, var: &str, g: &Formula) -> Formula {
        match self {
            Formula::Var(name) if name == var => g.clone(),
            Formula::Var(_) => self.clone(),
            Formula::Neg(f) => Formula::neg(f.substitute(var, g)),
            Formula::Nabla(f) => Formula::nabla(f.substitute(var, g)),
            Formula::And(f, h) => Formula::and(f.substitute(var, g), h.substitute(var, g)),
            Formula::Or(f, h) => Formula::or(f.substitute(var, g), h.substitute(var, g)),
        }
    }

    /// Number of connectives and variables; handy as a size measure.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Neg(f) | Formula::Nabla(f) => 1 + f.size(),
            Formula::And(f, g) | Formula::Or(f, g) => 1 + f.size() + g.size(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(_, _) => 1,
            Formula::And(_, _) => 2,
            Formula::Neg(_) | Formula::Nabla(_) => 3,
            Formula::Var(_) => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let needs_parens = self.precedence() < min;
        if needs_parens {
            write!(f, "(")?;
        }
        match self {
            Formula::Var(name) => write!(f, "{name}")?,
            Formula::Neg(inner) => {
                write!(f, "~")?;
                inner.fmt_prec(f, 3)?;
            }
            Formula::Nabla(inner) => {
                write!(f, "#")?;
                inner.fmt_prec(f, 3)?;
            }
            Formula::And(l, r) => {
                l.fmt_prec(f, 2)?;
                write!(f, " & ")?;
                r.fmt_prec(f, 3)?;
            }
            Formula::Or(l, r) => {
                l.fmt_prec(f, 1)?;
                write!(f, " | ")?;
                r.fmt_prec(f, 2)?;
            }
        }
        if needs_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

/// Syntax error with the byte position where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at position {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    And,
    Or,
    Neg,
    Nabla,
    LParen,
    RParen,
    Comma,
    Arrow,     // =>
    CellSep,   // || in n-sequent cell syntax
    Semicolon, // ; in signed n-sequent syntax
    Colon,
    Ident(String),
    Value(String), // truth value name such as 1/3
}

pub(crate) struct Lexer {
    pub tokens: Vec<(usize, Token)>,
    pub end: usize,
}

/// Tokenize the input. `sequent_mode` additionally recognizes `,`, `=>`,
/// `||`, `;`, `:` and truth-value names, which the plain formula grammar
/// does not use.
pub(crate) fn lex(src: &str, sequent_mode: bool) -> Result<Lexer, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < src.len() {
        let rest = &src[i..];
        let c = rest.chars().next().unwrap();
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let tok = match c {
            '&' | '∧' => Some(Token::And),
            '∨' => Some(Token::Or),
            '|' => {
                if sequent_mode && bytes.get(i + 1) == Some(&b'|') {
                    tokens.push((i, Token::CellSep));
                    i += 2;
                    continue;
                }
                Some(Token::Or)
            }
            '~' | '¬' => Some(Token::Neg),
            '#' | '∇' => Some(Token::Nabla),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = tok {
            tokens.push((i, tok));
            i += c.len_utf8();
            continue;
        }
        if sequent_mode {
            match c {
                ',' => {
                    tokens.push((i, Token::Comma));
                    i += 1;
                    continue;
                }
                ';' => {
                    tokens.push((i, Token::Semicolon));
                    i += 1;
                    continue;
                }
                ':' => {
                    tokens.push((i, Token::Colon));
                    i += 1;
                    continue;
                }
                '=' if bytes.get(i + 1) == Some(&b'>') => {
                    tokens.push((i, Token::Arrow));
                    i += 2;
                    continue;
                }
                '⇒' => {
                    tokens.push((i, Token::Arrow));
                    i += c.len_utf8();
                    continue;
                }
                '0' | '1' | '2' => {
                    // truth value names: 0, 1, 1/3, 2/3
                    let name = if rest.starts_with("1/3") || rest.starts_with("2/3") {
                        &rest[..3]
                    } else {
                        &rest[..1]
                    };
                    tokens.push((i, Token::Value(name.to_string())));
                    i += name.len();
                    continue;
                }
                _ => {}
            }
        }
        if c.is_ascii_lowercase() || c.is_ascii_uppercase() {
            let len = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            tokens.push((i, Token::Ident(rest[..len].to_string())));
            i += len;
            continue;
        }
        return Err(ParseError {
            pos: i,
            msg: format!("unexpected character `{c}`"),
        });
    }
    Ok(Lexer {
        tokens,
        end: src.len(),
    })
}

pub(crate) struct Parser {
    lexer: Lexer,
    pub pos: usize,
    allow_metavars: bool,
}

impl Parser {
    pub fn new(lexer: Lexer, allow_metavars: bool) -> Self {
        Parser {
            lexer,
            pos: 0,
            allow_metavars,
        }
    }

    pub fn peek(&self) -> Option<&Token> {
        self.lexer.tokens.get(self.pos).map(|(_, t)| t)
    }

    pub fn peek_pos(&self) -> usize {
        self.lexer
            .tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.lexer.end)
    }

    pub fn bump(&mut self) -> Option<Token> {
        let tok = self.lexer.tokens.get(self.pos).map(|(_, t)| t.clone());
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.peek_pos(),
            msg: msg.into(),
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(tok) => Err(self.error(format!("unexpected trailing input `{tok:?}`"))),
        }
    }

    pub fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunct()?;
        while matches!(self.peek(), Some(Token::Or)) {
            self.bump();
            let rhs = self.conjunct()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunct(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some(Token::And)) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Token::Neg) => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Some(Token::Nabla) => {
                self.bump();
                Ok(Formula::nabla(self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Token::LParen) => {
                self.bump();
                let inner = self.formula()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(self.error("expected `)`")),
                }
            }
            Some(Token::Ident(name)) => {
                let ok_var = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_lowercase());
                let ok_meta = self.allow_metavars
                    && name.len() == 1
                    && name.chars().next().is_some_and(|c| c.is_ascii_uppercase());
                if !(ok_var || ok_meta) {
                    return Err(self.error(format!(
                        "invalid variable name `{name}` (expected [a-z][a-z0-9_]*)"
                    )));
                }
                self.bump();
                Ok(Formula::Var(name))
            }
            Some(tok) => Err(self.error(format!("expected a formula, found `{tok:?}`"))),
            None => Err(ParseError {
                pos: self.lexer.end,
                msg: "expected a formula, found end of input".into(),
            }),
        }
    }
}

/// Parse a formula. Variables must match `[a-z][a-z0-9_]*`.
pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(lex(src, false)?, false);
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

/// Parse a rule-schema formula: like [`parse_formula`] but single
/// uppercase letters are accepted as metavariables.
pub fn parse_schema_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(lex(src, false)?, true);
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}
