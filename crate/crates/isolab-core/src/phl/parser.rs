use thiserror::Error;

use super::formula::{Equation, Formula, Sequent};
use super::signature::{Context, OpDecl, Signature};
use super::term::Term;
use super::theory::Theory;

/// Parse failure with 1-based source position.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("parse error at {line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

const KEYWORDS: [&str; 6] = ["theory", "sort", "op", "axiom", "forall", "def"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Semi,
    Comma,
    Eq,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Arrow,
    Turnstile,
    Eof,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::Turnstile => write!(f, "`|-`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '\''
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek_char()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek_char() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
    }

    fn next_tok(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        self.skip_trivia();
        let (line, col) = (self.line, self.col);
        let Some(c) = self.peek_char() else {
            return Ok((Tok::Eof, line, col));
        };
        let tok = match c {
            ':' => {
                self.bump();
                Tok::Colon
            }
            ';' => {
                self.bump();
                Tok::Semi
            }
            ',' => {
                self.bump();
                Tok::Comma
            }
            '=' => {
                self.bump();
                Tok::Eq
            }
            '(' => {
                self.bump();
                Tok::LParen
            }
            ')' => {
                self.bump();
                Tok::RParen
            }
            '[' => {
                self.bump();
                Tok::LBracket
            }
            ']' => {
                self.bump();
                Tok::RBracket
            }
            '-' => {
                self.bump();
                if self.peek_char() == Some('>') {
                    self.bump();
                    Tok::Arrow
                } else {
                    return Err(self.error("expected `->`"));
                }
            }
            '|' => {
                self.bump();
                if self.peek_char() == Some('-') {
                    self.bump();
                    Tok::Turnstile
                } else {
                    return Err(self.error("expected `|-`"));
                }
            }
            c if is_ident_start(c) => {
                let start = self.pos;
                while let Some(c) = self.peek_char() {
                    if is_ident_continue(c) {
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(self.src[start..self.pos].to_string())
            }
            c => return Err(self.error(format!("unexpected character `{c}`"))),
        };
        Ok((tok, line, col))
    }
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let mut toks = Vec::new();
        loop {
            let t = lexer.next_tok()?;
            let done = t.0 == Tok::Eof;
            toks.push(t);
            if done {
                break;
            }
        }
        Ok(Parser { toks, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (_, line, col) = &self.toks[self.at];
        ParseError {
            line: *line,
            col: *col,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        if self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(format!("expected {want}, found {}", self.peek())))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => Err(self.error_here(format!("expected {what}, found {other}"))),
        }
    }

    fn expect_name(&mut self, what: &str) -> Result<String, ParseError> {
        let err = self.error_here(format!("reserved word cannot be used as {what}"));
        let s = self.expect_ident(what)?;
        if KEYWORDS.contains(&s.as_str()) {
            return Err(err);
        }
        Ok(s)
    }

    fn at_ident(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == word)
    }

    fn theory(&mut self) -> Result<Theory, ParseError> {
        if !self.at_ident("theory") {
            return Err(self.error_here("expected `theory` header"));
        }
        self.bump();
        let name = self.expect_name("theory name")?;
        let mut sig = Signature::default();
        let mut axioms = Vec::new();
        loop {
            if self.at_ident("sort") {
                self.bump();
                let s = self.expect_name("sort name")?;
                let err = self.error_here("");
                sig.add_sort(s).map_err(|e| ParseError {
                    message: e.to_string(),
                    ..err
                })?;
                self.expect(&Tok::Semi)?;
            } else if self.at_ident("op") {
                self.bump();
                let name = self.expect_name("operation name")?;
                self.expect(&Tok::Colon)?;
                let mut arg_sorts = Vec::new();
                while let Tok::Ident(_) = self.peek() {
                    arg_sorts.push(self.expect_name("argument sort")?);
                }
                self.expect(&Tok::Arrow)?;
                let result_sort = self.expect_name("result sort")?;
                let err = self.error_here("");
                sig.add_op(OpDecl {
                    name,
                    arg_sorts,
                    result_sort,
                })
                .map_err(|e| ParseError {
                    message: e.to_string(),
                    ..err
                })?;
                self.expect(&Tok::Semi)?;
            } else if self.at_ident("axiom") {
                self.bump();
                let seq = self.sequent(&sig)?;
                axioms.push(seq);
                self.expect(&Tok::Semi)?;
            } else if *self.peek() == Tok::Eof {
                break;
            } else {
                return Err(
                    self.error_here(format!("expected `sort`, `op` or `axiom`, found {}", self.peek()))
                );
            }
        }
        let theory = Theory::new(name, sig, axioms);
        if let Err(e) = theory.check() {
            // Sort errors inside axioms are reported without a position: the
            // offending term is named in the message instead.
            return Err(ParseError {
                line: 0,
                col: 0,
                message: e.to_string(),
            });
        }
        Ok(theory)
    }

    fn sequent(&mut self, sig: &Signature) -> Result<Sequent, ParseError> {
        let mut vars = Vec::new();
        if self.at_ident("forall") {
            self.bump();
            loop {
                let v = self.expect_name("variable name")?;
                self.expect(&Tok::Colon)?;
                let s = self.expect_name("variable sort")?;
                if !sig.has_sort(&s) {
                    return Err(self.error_here(format!("unknown sort `{s}`")));
                }
                if vars.iter().any(|(n, _): &(String, String)| *n == v) {
                    return Err(self.error_here(format!("duplicate variable `{v}`")));
                }
                vars.push((v, s));
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        let context = Context(vars);
        self.expect(&Tok::LBracket)?;
        let premise = if *self.peek() == Tok::RBracket {
            Vec::new()
        } else {
            self.formula(sig, &context)?
        };
        self.expect(&Tok::RBracket)?;
        self.expect(&Tok::Turnstile)?;
        let conclusion = self.formula(sig, &context)?;
        Ok(Sequent::new(context, premise, conclusion))
    }

    fn formula(&mut self, sig: &Signature, ctx: &Context) -> Result<Formula, ParseError> {
        let mut eqs = vec![self.equation(sig, ctx)?];
        while *self.peek() == Tok::Comma {
            self.bump();
            eqs.push(self.equation(sig, ctx)?);
        }
        Ok(eqs)
    }

    fn equation(&mut self, sig: &Signature, ctx: &Context) -> Result<Equation, ParseError> {
        if self.at_ident("def") {
            self.bump();
            self.expect(&Tok::LParen)?;
            let t = self.term(sig, ctx)?;
            self.expect(&Tok::RParen)?;
            return Ok(Equation::defined(t));
        }
        let lhs = self.term(sig, ctx)?;
        self.expect(&Tok::Eq)?;
        let rhs = self.term(sig, ctx)?;
        Ok(Equation::new(lhs, rhs))
    }

    fn term(&mut self, sig: &Signature, ctx: &Context) -> Result<Term, ParseError> {
        let head_err = self.error_here("");
        let head = self.expect_name("term")?;
        if *self.peek() == Tok::LParen {
            self.bump();
            let mut args = Vec::new();
            if *self.peek() != Tok::RParen {
                args.push(self.term(sig, ctx)?);
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.term(sig, ctx)?);
                }
            }
            self.expect(&Tok::RParen)?;
            if sig.op(&head).is_none() {
                return Err(ParseError {
                    message: format!("unknown operation `{head}`"),
                    ..head_err
                });
            }
            return Ok(Term::app(head, args));
        }
        // A bare identifier is a context variable if declared, otherwise a
        // constant of the signature.
        if let Some(sort) = ctx.sort_of(&head) {
            return Ok(Term::var(head.clone(), sort));
        }
        match sig.op(&head) {
            Some(decl) if decl.arity() == 0 => Ok(Term::constant(head)),
            Some(_) => Err(ParseError {
                message: format!("operation `{head}` used without arguments"),
                ..head_err
            }),
            None => Err(ParseError {
                message: format!("`{head}` is neither a context variable nor a constant"),
                ..head_err
            }),
        }
    }
}

/// Parse a complete theory from `.thy` surface syntax.
pub fn parse_theory(source: &str) -> Result<Theory, ParseError> {
    let mut p = Parser::new(source)?;
    let t = p.theory()?;
    Ok(t)
}

/// Parse a single term against a given signature and variable context
/// (used for terms supplied on the command line).
pub fn parse_term_in_context(
    sig: &Signature,
    ctx: &Context,
    source: &str,
) -> Result<Term, ParseError> {
    let mut p = Parser::new(source)?;
    let t = p.term(sig, ctx)?;
    if *p.peek() != Tok::Eof {
        return Err(p.error_here(format!("unexpected {} after term", p.peek())));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    const MONOID_SRC: &str = "\
theory monoid

sort M;

op e : -> M;
op mul : M M -> M;

axiom forall x:M, y:M [] |- def(mul(x, y));
axiom [] |- def(e);
axiom forall x:M, y:M, z:M [] |- mul(mul(x, y), z) = mul(x, mul(y, z));
axiom forall x:M [] |- mul(e, x) = x;
axiom forall x:M [] |- mul(x, e) = x;
";

    #[test]
    fn parses_monoid_theory() {
        let t = parse_theory(MONOID_SRC).unwrap();
        assert_eq!(t.name, "monoid");
        assert_eq!(t.signature.sorts, vec!["M"]);
        assert_eq!(t.signature.ops.len(), 2);
        assert_eq!(t.axioms.len(), 5);
        assert!(t.axioms[0].conclusion[0].is_definedness());
    }

    #[test]
    fn reports_position_of_syntax_error() {
        let err = parse_theory("theory t\nsort M\nsort N;").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("expected `;`"), "{err}");
    }

    #[test]
    fn reports_sort_error_naming_offending_term() {
        let src = "\
theory t
sort M;
sort N;
op f : M -> N;
axiom forall x:M [] |- f(f(x)) = f(x);
";
        let err = parse_theory(src).unwrap_err();
        assert!(err.message.contains("f(f(x))"), "{err}");
    }

    #[test]
    fn premise_may_be_empty_or_compound() {
        let src = "\
theory t
sort A;
op c : -> A;
op p : A A -> A;
axiom forall x:A [def(p(x, x)), p(x, c) = x] |- p(c, x) = x;
";
        let t = parse_theory(src).unwrap();
        assert_eq!(t.axioms[0].premise.len(), 2);
    }

    #[test]
    fn rejects_reserved_words_as_names() {
        let err = parse_theory("theory t\nsort def;").unwrap_err();
        assert!(err.message.contains("reserved"), "{err}");
    }
}
