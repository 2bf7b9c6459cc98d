//! Concrete syntax for formulas and law templates.
//!
//! Grammar: atoms `[a-z][a-zA-Z0-9_]*`; constants `F` and `T` (`T` parses
//! as `~F`); negation `~`; conjunction `&`; disjunction `|`; implication
//! `->` (right-associative); bi-implication `<->` (parses as the
//! conjunction of both implications); precedence `~ > & > | > -> > <->`;
//! parentheses allowed; whitespace insignificant. Law templates use the
//! same grammar with metavariables `A`, `B`, `C` in place of atoms.

use crate::formula::Formula;
use crate::laws::{LawSchema, MetaVar, Template};
use std::fmt;
use thiserror::Error;

/// A syntax error with its byte offset and the tokens that would have
/// been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: found {}, expected {}",
            self.position,
            self.found,
            self.expected.join(" or ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Meta(MetaVar),
    Falsum,
    Verum,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(name) => format!("atom '{name}'"),
            Tok::Meta(var) => format!("metavariable '{var}'"),
            Tok::Falsum => "'F'".into(),
            Tok::Verum => "'T'".into(),
            Tok::Not => "'~'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Implies => "'->'".into(),
            Tok::Iff => "'<->'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '~' => tokens.push(Token { tok: Tok::Not, pos }),
            '&' => tokens.push(Token { tok: Tok::And, pos }),
            '|' => tokens.push(Token { tok: Tok::Or, pos }),
            '(' => tokens.push(Token {
                tok: Tok::LParen,
                pos,
            }),
            ')' => tokens.push(Token {
                tok: Tok::RParen,
                pos,
            }),
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    tokens.push(Token {
                        tok: Tok::Implies,
                        pos,
                    });
                    i += 1;
                } else {
                    return Err(ParseError {
                        position: pos,
                        found: format!("'{c}'"),
                        expected: vec!["'->'"],
                    });
                }
            }
            '<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    tokens.push(Token { tok: Tok::Iff, pos });
                    i += 2;
                } else {
                    return Err(ParseError {
                        position: pos,
                        found: format!("'{c}'"),
                        expected: vec!["'<->'"],
                    });
                }
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len() && is_ident_continue(bytes[i]) {
                    i += 1;
                }
                tokens.push(Token {
                    tok: Tok::Atom(input[start..i].to_string()),
                    pos,
                });
                continue;
            }
            'A'..='Z' => {
                let start = i;
                while i < bytes.len() && is_ident_continue(bytes[i]) {
                    i += 1;
                }
                let tok = match &input[start..i] {
                    "F" => Tok::Falsum,
                    "T" => Tok::Verum,
                    "A" => Tok::Meta(MetaVar::A),
                    "B" => Tok::Meta(MetaVar::B),
                    "C" => Tok::Meta(MetaVar::C),
                    other => {
                        return Err(ParseError {
                            position: pos,
                            found: format!("'{other}'"),
                            expected: vec!["an atom", "'F'", "'T'", "'A'", "'B'", "'C'"],
                        })
                    }
                };
                tokens.push(Token { tok, pos });
                continue;
            }
            _ => {
                return Err(ParseError {
                    position: pos,
                    found: format!("'{c}'"),
                    expected: vec!["a formula token"],
                })
            }
        }
        i += 1;
    }
    tokens.push(Token {
        tok: Tok::Eof,
        pos: input.len(),
    });
    Ok(tokens)
}

fn is_ident_continue(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

/// Syntax tree shared by both leaf disciplines.
enum Ast {
    Atom(String),
    Meta(MetaVar),
    Falsum,
    Not(Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
    Implies(Box<Ast>, Box<Ast>),
}

impl Ast {
    fn not(inner: Ast) -> Ast {
        Ast::Not(Box::new(inner))
    }

    fn into_formula(self) -> Formula {
        match self {
            Ast::Atom(name) => Formula::Atom(name),
            Ast::Meta(_) => unreachable!("rejected while parsing"),
            Ast::Falsum => Formula::Falsum,
            Ast::Not(x) => Formula::not(x.into_formula()),
            Ast::And(l, r) => Formula::and(l.into_formula(), r.into_formula()),
            Ast::Or(l, r) => Formula::or(l.into_formula(), r.into_formula()),
            Ast::Implies(l, r) => Formula::implies(l.into_formula(), r.into_formula()),
        }
    }

    fn into_template(self) -> Template {
        match self {
            Ast::Atom(_) => unreachable!("rejected while parsing"),
            Ast::Meta(var) => Template::Meta(var),
            Ast::Falsum => Template::Falsum,
            Ast::Not(x) => Template::not(x.into_template()),
            Ast::And(l, r) => Template::and(l.into_template(), r.into_template()),
            Ast::Or(l, r) => Template::or(l.into_template(), r.into_template()),
            Ast::Implies(l, r) => Template::implies(l.into_template(), r.into_template()),
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum LeafMode {
    Atoms,
    Metavars,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    mode: LeafMode,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn advance(&mut self) -> Tok {
        let tok = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let token = &self.tokens[self.pos];
        ParseError {
            position: token.pos,
            found: token.tok.describe(),
            expected,
        }
    }

    // iff := imp ('<->' iff)?     expands to (l -> r) & (r -> l)
    fn iff_expr(&mut self) -> Result<Ast, ParseError> {
        let lhs = self.imp_expr()?;
        if *self.peek() == Tok::Iff {
            self.advance();
            let rhs = self.iff_expr()?;
            let (l2, r2) = clone_pair(&lhs, &rhs);
            return Ok(Ast::And(
                Box::new(Ast::Implies(Box::new(lhs), Box::new(rhs))),
                Box::new(Ast::Implies(Box::new(r2), Box::new(l2))),
            ));
        }
        Ok(lhs)
    }

    // imp := or ('->' imp)?
    fn imp_expr(&mut self) -> Result<Ast, ParseError> {
        let lhs = self.or_expr()?;
        if *self.peek() == Tok::Implies {
            self.advance();
            let rhs = self.imp_expr()?;
            return Ok(Ast::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    // or := and ('|' and)*
    fn or_expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.and_expr()?;
        while *self.peek() == Tok::Or {
            self.advance();
            let rhs = self.and_expr()?;
            lhs = Ast::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    // and := unary ('&' unary)*
    fn and_expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.advance();
            let rhs = self.unary()?;
            lhs = Ast::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Not {
            self.advance();
            return Ok(Ast::not(self.unary()?));
        }
        self.primary()
    }

    fn leaf_expectations(&self) -> Vec<&'static str> {
        match self.mode {
            LeafMode::Atoms => vec!["an atom", "'F'", "'T'", "'~'", "'('"],
            LeafMode::Metavars => vec!["'A'", "'B'", "'C'", "'F'", "'T'", "'~'", "'('"],
        }
    }

    fn primary(&mut self) -> Result<Ast, ParseError> {
        match self.peek().clone() {
            Tok::Atom(name) => {
                if self.mode != LeafMode::Atoms {
                    return Err(self.error(self.leaf_expectations()));
                }
                self.advance();
                Ok(Ast::Atom(name))
            }
            Tok::Meta(var) => {
                if self.mode != LeafMode::Metavars {
                    return Err(self.error(self.leaf_expectations()));
                }
                self.advance();
                Ok(Ast::Meta(var))
            }
            Tok::Falsum => {
                self.advance();
                Ok(Ast::Falsum)
            }
            Tok::Verum => {
                self.advance();
                Ok(Ast::not(Ast::Falsum))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.iff_expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(vec!["')'"]));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.error(self.leaf_expectations())),
        }
    }

    fn parse_all(&mut self) -> Result<Ast, ParseError> {
        let ast = self.iff_expr()?;
        if *self.peek() != Tok::Eof {
            return Err(self.error(vec!["end of input", "a connective"]));
        }
        Ok(ast)
    }
}

fn clone_pair(lhs: &Ast, rhs: &Ast) -> (Ast, Ast) {
    fn clone_ast(ast: &Ast) -> Ast {
        match ast {
            Ast::Atom(name) => Ast::Atom(name.clone()),
            Ast::Meta(var) => Ast::Meta(*var),
            Ast::Falsum => Ast::Falsum,
            Ast::Not(x) => Ast::not(clone_ast(x)),
            Ast::And(l, r) => Ast::And(Box::new(clone_ast(l)), Box::new(clone_ast(r))),
            Ast::Or(l, r) => Ast::Or(Box::new(clone_ast(l)), Box::new(clone_ast(r))),
            Ast::Implies(l, r) => Ast::Implies(Box::new(clone_ast(l)), Box::new(clone_ast(r))),
        }
    }
    (clone_ast(lhs), clone_ast(rhs))
}

fn parse(text: &str, mode: LeafMode) -> Result<Ast, ParseError> {
    let tokens = lex(text)?;
    Parser {
        tokens,
        pos: 0,
        mode,
    }
    .parse_all()
}

/// Parses a formula.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parse(text, LeafMode::Atoms).map(Ast::into_formula)
}

/// Parses a law template: metavariables `A`, `B`, `C` in place of atoms.
pub fn parse_template(text: &str) -> Result<Template, ParseError> {
    parse(text, LeafMode::Metavars).map(Ast::into_template)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawLineError {
    #[error("expected `NAME: LHS == RHS`")]
    Shape,
    #[error("invalid law name '{0}'")]
    Name(String),
    #[error("left-hand side: {0}")]
    Lhs(ParseError),
    #[error("right-hand side: {0}")]
    Rhs(ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct LawFileError {
    pub line: usize,
    #[source]
    pub source: LawLineError,
}

/// Parses one law of the form `NAME: LHS == RHS`.
pub fn parse_law_line(line: &str) -> Result<LawSchema, LawLineError> {
    let (name, body) = line.split_once(':').ok_or(LawLineError::Shape)?;
    let name = name.trim();
    let valid_name = !name.is_empty()
        && name.chars().next().unwrap().is_ascii_alphabetic()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    if !valid_name {
        return Err(LawLineError::Name(name.to_string()));
    }
    let (lhs, rhs) = body.split_once("==").ok_or(LawLineError::Shape)?;
    let lhs = parse_template(lhs).map_err(LawLineError::Lhs)?;
    let rhs = parse_template(rhs).map_err(LawLineError::Rhs)?;
    Ok(LawSchema::new(name, lhs, rhs))
}

/// Parses a law file: one `NAME: LHS == RHS` per line, blank lines
/// ignored.
pub fn parse_law_file(text: &str) -> Result<Vec<LawSchema>, LawFileError> {
    let mut laws = Vec::new();
    for (index, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let law = parse_law_line(line).map_err(|source| LawFileError {
            line: index + 1,
            source,
        })?;
        laws.push(law);
    }
    Ok(laws)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::atom("p")
    }

    fn q() -> Formula {
        Formula::atom("q")
    }

    #[test]
    fn precedence_binds_not_then_and_then_or_then_implies() {
        assert_eq!(
            parse_formula("p & ~p -> q").unwrap(),
            Formula::implies(Formula::and(p(), Formula::not(p())), q())
        );
        assert_eq!(
            parse_formula("~p | q & r").unwrap(),
            Formula::or(Formula::not(p()), Formula::and(q(), Formula::atom("r")))
        );
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse_formula("p -> q -> r").unwrap(),
            Formula::implies(p(), Formula::implies(q(), Formula::atom("r")))
        );
    }

    #[test]
    fn and_or_are_left_associative() {
        assert_eq!(
            parse_formula("p & q & r").unwrap(),
            Formula::and(Formula::and(p(), q()), Formula::atom("r"))
        );
        assert_eq!(
            parse_formula("p | q | r").unwrap(),
            Formula::or(Formula::or(p(), q()), Formula::atom("r"))
        );
    }

    #[test]
    fn bi_implication_expands() {
        assert_eq!(
            parse_formula("a <-> b").unwrap(),
            Formula::and(
                Formula::implies(Formula::atom("a"), Formula::atom("b")),
                Formula::implies(Formula::atom("b"), Formula::atom("a"))
            )
        );
    }

    #[test]
    fn constants_expand() {
        assert_eq!(parse_formula("T").unwrap(), Formula::verum());
        assert_eq!(parse_formula("F").unwrap(), Formula::Falsum);
        assert_eq!(
            parse_formula("p & F").unwrap(),
            Formula::and(p(), Formula::Falsum)
        );
    }

    #[test]
    fn errors_carry_position_and_expectations() {
        let err = parse_formula("p & ").unwrap_err();
        assert_eq!(err.position, 4);
        assert_eq!(err.found, "end of input");
        assert!(err.expected.contains(&"an atom"));

        let err = parse_formula("p q").unwrap_err();
        assert_eq!(err.position, 2);

        let err = parse_formula("(p | q").unwrap_err();
        assert_eq!(err.found, "end of input");
        assert!(err.expected.contains(&"')'"));

        let err = parse_formula("p - q").unwrap_err();
        assert_eq!(err.position, 2);
        assert_eq!(err.expected, vec!["'->'"]);
    }

    #[test]
    fn metavariables_are_rejected_in_formulas_and_atoms_in_templates() {
        let err = parse_formula("A & p").unwrap_err();
        assert_eq!(err.position, 0);
        assert_eq!(err.found, "metavariable 'A'");

        let err = parse_template("A & p").unwrap_err();
        assert_eq!(err.position, 4);
        assert_eq!(err.found, "atom 'p'");
    }

    #[test]
    fn unknown_uppercase_identifiers_are_rejected() {
        let err = parse_formula("Foo").unwrap_err();
        assert_eq!(err.found, "'Foo'");
    }

    #[test]
    fn templates_parse_like_formulas() {
        use crate::laws::{MetaVar, Template as T};
        assert_eq!(
            parse_template("A & F").unwrap(),
            T::and(T::meta(MetaVar::A), T::falsum())
        );
        assert_eq!(
            parse_template("~(A -> B)").unwrap(),
            T::not(T::implies(T::meta(MetaVar::A), T::meta(MetaVar::B)))
        );
    }

    #[test]
    fn builtin_laws_roundtrip_through_the_law_grammar() {
        for law in crate::laws::builtin_laws() {
            let reparsed = parse_law_line(&law.to_string()).unwrap();
            assert_eq!(reparsed, law);
        }
    }

    #[test]
    fn law_files_report_the_offending_line() {
        let text = "good: A & B == B & A\n\nbad line\n";
        let err = parse_law_file(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.source, LawLineError::Shape);

        let text = "1bad: A == A\n";
        assert!(matches!(
            parse_law_file(text).unwrap_err().source,
            LawLineError::Name(_)
        ));

        let laws = parse_law_file("comm: A & B == B & A\nid: A | F == A\n").unwrap();
        assert_eq!(laws.len(), 2);
        assert_eq!(laws[0].name, "comm");
    }
}
