use crate::span::{Cursor, SourceSpan};

use super::ast::{Category, Determinacy, Number, SemanticFunction, SyntacticFunction, Tense};
use super::NotationError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Tense(Tense),
    Perfect,
    Progressive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    LParen,
    RParen,
    Colon,
    /// Quoted lexeme form without the quotes.
    Lexeme(String),
    Category(Category),
    Operator(Operator),
    /// The predication variable `e`.
    PredVar,
    /// A determiner/number/variable cluster such as `d1x`, `imx` or `x`.
    TermVar(Determinacy, Number),
    SemFunc(SemanticFunction),
    SynFunc(SyntacticFunction),
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::Colon => "':'".into(),
            TokenKind::Lexeme(form) => format!("lexeme '{form}'"),
            TokenKind::Category(c) => format!("category [{}]", c.letter()),
            TokenKind::Operator(Operator::Tense(t)) => format!("operator {}", t.token()),
            TokenKind::Operator(Operator::Perfect) => "operator Pf".into(),
            TokenKind::Operator(Operator::Progressive) => "operator Prog".into(),
            TokenKind::PredVar => "'e'".into(),
            TokenKind::TermVar(..) => "term variable".into(),
            TokenKind::SemFunc(s) => format!("function {}", s.token()),
            TokenKind::SynFunc(s) => format!("function {}", s.token()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

/// Splits FG notation into tokens. Whitespace separates tokens and is
/// otherwise ignored.
pub fn tokenize(text: &str) -> Result<Vec<Token>, NotationError> {
    let mut cursor = Cursor::new(text);
    let mut tokens = Vec::new();
    while let Some(c) = cursor.peek() {
        let start = cursor.mark();
        match c {
            c if c.is_whitespace() => {
                cursor.bump();
            }
            '(' | ')' | ':' => {
                cursor.bump();
                let kind = match c {
                    '(' => TokenKind::LParen,
                    ')' => TokenKind::RParen,
                    _ => TokenKind::Colon,
                };
                tokens.push(Token {
                    kind,
                    span: cursor.span_from(start),
                });
            }
            '\'' => tokens.push(lex_quoted(&mut cursor)?),
            '[' => tokens.push(lex_category(&mut cursor)?),
            c if c.is_ascii_alphanumeric() => {
                let mut word = String::new();
                while let Some(c) = cursor.peek().filter(char::is_ascii_alphanumeric) {
                    word.push(c);
                    cursor.bump();
                }
                classify_word(&word, cursor.span_from(start), &mut tokens)?;
            }
            _ => return Err(NotationError::UnknownCharacter(cursor.here())),
        }
    }
    Ok(tokens)
}

fn lex_quoted(cursor: &mut Cursor<'_>) -> Result<Token, NotationError> {
    let start = cursor.mark();
    cursor.bump();
    let mut form = String::new();
    loop {
        match cursor.peek() {
            Some('\'') => {
                cursor.bump();
                break;
            }
            None | Some('\n') => {
                return Err(NotationError::UnterminatedLexeme(cursor.span_from(start)));
            }
            Some(c) => {
                form.push(c);
                cursor.bump();
            }
        }
    }
    let span = cursor.span_from(start);
    if form.is_empty() || !form.chars().all(|c| c.is_ascii_lowercase()) {
        return Err(NotationError::InvalidLexeme(span));
    }
    Ok(Token {
        kind: TokenKind::Lexeme(form),
        span,
    })
}

fn lex_category(cursor: &mut Cursor<'_>) -> Result<Token, NotationError> {
    let start = cursor.mark();
    cursor.bump();
    let category = match cursor.peek() {
        Some('N') => Category::N,
        Some('V') => Category::V,
        Some('A') => Category::A,
        _ => return Err(NotationError::InvalidCategory(cursor.span_from(start))),
    };
    cursor.bump();
    if cursor.peek() != Some(']') {
        return Err(NotationError::InvalidCategory(cursor.span_from(start)));
    }
    cursor.bump();
    Ok(Token {
        kind: TokenKind::Category(category),
        span: cursor.span_from(start),
    })
}

fn classify_word(word: &str, span: SourceSpan, out: &mut Vec<Token>) -> Result<(), NotationError> {
    if word == "e" {
        out.push(Token {
            kind: TokenKind::PredVar,
            span,
        });
        return Ok(());
    }
    if let Some((det, num)) = term_variable(word) {
        out.push(Token {
            kind: TokenKind::TermVar(det, num),
            span,
        });
        return Ok(());
    }
    if let Some(op) = operator(word) {
        out.push(Token {
            kind: TokenKind::Operator(op),
            span,
        });
        return Ok(());
    }
    split_function(word, span, out)
}

fn term_variable(word: &str) -> Option<(Determinacy, Number)> {
    let mut rest = word.strip_suffix('x')?;
    let det = match rest.chars().next() {
        Some('d') => Determinacy::Def,
        Some('i') => Determinacy::Indef,
        _ => Determinacy::Unspecified,
    };
    if det != Determinacy::Unspecified {
        rest = &rest[1..];
    }
    let num = match rest {
        "" => Number::Unspecified,
        "1" => Number::Sg,
        "m" => Number::Pl,
        _ => return None,
    };
    Some((det, num))
}

fn operator(word: &str) -> Option<Operator> {
    match word.to_ascii_lowercase().as_str() {
        "past" => Some(Operator::Tense(Tense::Past)),
        "pres" => Some(Operator::Tense(Tense::Pres)),
        "pf" => Some(Operator::Perfect),
        "prog" => Some(Operator::Progressive),
        _ => None,
    }
}

/// Splits a composite function word such as `RecSubj` by longest match over
/// the semantic functions; the remainder must be a syntactic function.
fn split_function(word: &str, span: SourceSpan, out: &mut Vec<Token>) -> Result<(), NotationError> {
    let semantic = SemanticFunction::ALL
        .into_iter()
        .filter(|f| word.starts_with(f.token()))
        .max_by_key(|f| f.token().len())
        .ok_or(NotationError::UnknownWord(span))?;
    let prefix = semantic.token().len();
    out.push(Token {
        kind: TokenKind::SemFunc(semantic),
        span: SourceSpan {
            length: prefix,
            ..span
        },
    });
    let rest = &word[prefix..];
    if rest.is_empty() {
        return Ok(());
    }
    let rest_span = SourceSpan::new(
        span.offset + prefix,
        span.line,
        span.column + prefix,
        rest.len(),
    );
    let syntactic = SyntacticFunction::ALL
        .into_iter()
        .find(|f| f.token() == rest)
        .ok_or(NotationError::UnknownFunction(rest_span))?;
    out.push(Token {
        kind: TokenKind::SynFunc(syntactic),
        span: rest_span,
    });
    Ok(())
}
