use crate::span::{end_span, Cursor, SourceSpan};

use super::{FdgError, Layer, Restrictor, RlNode, TokenSets};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Word(String),
    Index(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: SourceSpan,
}

fn lex(text: &str) -> Result<Vec<Token>, FdgError> {
    let mut cursor = Cursor::new(text);
    let mut tokens = Vec::new();
    while let Some(c) = cursor.peek() {
        let start = cursor.mark();
        let tok = match c {
            c if c.is_whitespace() => {
                cursor.bump();
                continue;
            }
            '(' | ')' | '[' | ']' | ':' => {
                cursor.bump();
                match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    _ => Tok::Colon,
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut word = String::new();
                while let Some(c) = cursor.peek().filter(char::is_ascii_alphabetic) {
                    word.push(c);
                    cursor.bump();
                }
                Tok::Word(word)
            }
            c if c.is_ascii_digit() => Tok::Index(digits(&mut cursor)),
            '_' => {
                cursor.bump();
                if cursor.peek() != Some('{') {
                    return Err(syntax(cursor.here(), &["'{'"]));
                }
                cursor.bump();
                let n = digits(&mut cursor);
                if n.is_empty() {
                    return Err(syntax(cursor.here(), &["index digits"]));
                }
                if cursor.peek() != Some('}') {
                    return Err(syntax(cursor.here(), &["'}'"]));
                }
                cursor.bump();
                Tok::Index(n)
            }
            _ => {
                return Err(syntax(
                    cursor.here(),
                    &["'('", "')'", "'['", "']'", "':'", "word", "index"],
                ))
            }
        };
        tokens.push(Token {
            tok,
            span: cursor.span_from(start),
        });
    }
    Ok(tokens)
}

fn digits(cursor: &mut Cursor<'_>) -> String {
    let mut s = String::new();
    while let Some(c) = cursor.peek().filter(char::is_ascii_digit) {
        s.push(c);
        cursor.bump();
    }
    s
}

fn syntax(span: SourceSpan, expected: &[&str]) -> FdgError {
    FdgError::SyntaxError {
        span,
        expected: expected.iter().map(|s| s.to_string()).collect(),
    }
}

/// Parses one Representational Level structure. Any layer may be the entry
/// point; inside a bracketed head only e, f, x, l and t are allowed.
pub fn parse_rl(text: &str, sets: &TokenSets) -> Result<RlNode, FdgError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        pos: 0,
        eof: end_span(text),
        sets,
    };
    let node = parser.node(true)?;
    if let Some(token) = parser.tokens.get(parser.pos) {
        return Err(syntax(token.span, &["end of input"]));
    }
    Ok(node)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    eof: SourceSpan,
    sets: &'a TokenSets,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn span(&self) -> SourceSpan {
        self.tokens.get(self.pos).map_or(self.eof, |t| t.span)
    }

    fn bump(&mut self) -> SourceSpan {
        let span = self.span();
        self.pos += 1;
        span
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<SourceSpan, FdgError> {
        if self.peek() == Some(&tok) {
            Ok(self.bump())
        } else {
            Err(syntax(self.span(), &[name]))
        }
    }

    fn layer_expected(top: bool) -> &'static [&'static str] {
        if top {
            &["layer p, e, f, x, l or t"]
        } else {
            &["layer e, f, x, l or t"]
        }
    }

    fn layer(&mut self, top: bool) -> Result<Layer, FdgError> {
        match self.peek() {
            Some(Tok::Word(w)) => match Layer::from_letter(w) {
                Some(layer) if top || layer.nestable() => {
                    self.bump();
                    Ok(layer)
                }
                _ => Err(syntax(self.span(), Self::layer_expected(top))),
            },
            _ => Err(syntax(self.span(), Self::layer_expected(top))),
        }
    }

    fn index(&mut self) -> Result<u32, FdgError> {
        match self.peek() {
            Some(Tok::Index(digits)) => {
                let value = digits
                    .parse()
                    .map_err(|_| syntax(self.span(), &["index"]))?;
                self.bump();
                Ok(value)
            }
            _ => Err(syntax(self.span(), &["index"])),
        }
    }

    fn node(&mut self, top: bool) -> Result<RlNode, FdgError> {
        let open = self.expect(Tok::LParen, "'('")?;
        let mut operator = None;
        if let Some(Tok::Word(word)) = self.peek() {
            let is_layer = Layer::from_letter(word).is_some_and(|l| top || l.nestable());
            if !is_layer {
                if self.sets.is_operator(word) {
                    operator = Some(word.clone());
                    self.bump();
                } else if word.starts_with(|c: char| c.is_ascii_uppercase()) {
                    return Err(FdgError::UnknownOperator {
                        token: word.clone(),
                        span: self.span(),
                    });
                }
            }
        }
        let layer = self.layer(top)?;
        let index = self.index()?;
        let mut restrictors = Vec::new();
        while self.peek() == Some(&Tok::Colon) {
            self.bump();
            let lemma = match self.peek() {
                Some(Tok::Word(w)) if w.chars().all(|c| c.is_ascii_lowercase()) => {
                    let w = w.clone();
                    self.bump();
                    Some(w)
                }
                Some(Tok::Word(_)) => {
                    return Err(syntax(self.span(), &["lowercase lemma", "'['", "'('"]))
                }
                _ => None,
            };
            let children = if self.peek() == Some(&Tok::LBracket) {
                self.bump();
                let mut children = Vec::new();
                while self.peek() == Some(&Tok::LParen) {
                    children.push(self.node(false)?);
                }
                self.expect(Tok::RBracket, "']'")?;
                Some(children)
            } else {
                None
            };
            let ref_open = self.expect(Tok::LParen, "'('")?;
            match self.peek() {
                Some(Tok::Word(w)) if Layer::from_letter(w) == Some(layer) => {
                    self.bump();
                }
                _ => {
                    let wanted = format!("'{}'", layer.letter());
                    return Err(syntax(self.span(), &[wanted.as_str()]));
                }
            }
            let ref_index = self.index()?;
            let ref_close = self.expect(Tok::RParen, "')'")?;
            restrictors.push(Restrictor {
                lemma,
                children,
                ref_index,
                ref_span: ref_open.to(ref_close),
            });
        }
        let close = self.expect(Tok::RParen, "')'")?;
        let mut function = None;
        if let Some(Tok::Word(word)) = self.peek() {
            if !self.sets.is_function(word) {
                return Err(FdgError::UnknownFunction {
                    token: word.clone(),
                    span: self.span(),
                });
            }
            function = Some(word.clone());
            self.bump();
        }
        Ok(RlNode {
            layer,
            index,
            operator,
            restrictors,
            function,
            span: open.to(close),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<RlNode, FdgError> {
        parse_rl(text, &TokenSets::default())
    }

    #[test]
    fn individual_with_function() {
        let node = parse("(x1:im(x1))Ag").unwrap();
        assert_eq!(node.layer, Layer::Individual);
        assert_eq!(node.index, 1);
        assert_eq!(node.head(), Some("im"));
        assert_eq!(node.restrictor_refs(), vec![(Layer::Individual, 1)]);
        assert_eq!(node.function.as_deref(), Some("Ag"));
        assert_eq!(node.restrictors[0].ref_span.column, 7);
        assert_eq!(node.restrictors[0].ref_span.length, 4);
    }

    #[test]
    fn uppercase_lemma_rejected() {
        assert!(matches!(
            parse("(x1:Im(x1))"),
            Err(FdgError::SyntaxError { .. })
        ));
    }

    #[test]
    fn unknown_tokens() {
        assert!(matches!(
            parse("(x1:im(x1))Foo"),
            Err(FdgError::UnknownFunction { token, .. }) if token == "Foo"
        ));
        assert!(matches!(
            parse("(Fut x1)"),
            Err(FdgError::UnknownOperator { token, .. }) if token == "Fut"
        ));
        let sets = TokenSets::load("operators:\nFut\n").unwrap();
        assert!(parse_rl("(Fut x1)", &sets).is_ok());
    }

    #[test]
    fn content_only_at_top() {
        assert!(parse("(p1)").is_ok());
        assert!(parse("(e1:[(p1)](e1))").is_err());
        assert!(parse("(p1:[(e1)](p1))").is_ok());
    }

    #[test]
    fn reference_layer_must_match() {
        assert!(parse("(x1:im(f1))").is_err());
        assert!(parse("(x1:im(x2))").is_ok());
    }

    #[test]
    fn headless_and_empty_heads() {
        assert!(parse("(x1)").is_ok());
        let node = parse("(x1:(x1))").unwrap();
        assert_eq!(node.restrictors[0].lemma, None);
        assert_eq!(node.restrictors[0].children, None);
        let node = parse("(x1:[](x1))").unwrap();
        assert_eq!(node.restrictors[0].children, Some(vec![]));
    }

    #[test]
    fn subscript_indices() {
        assert_eq!(
            parse("(x_{1}:im(x_{1}))Ag").unwrap(),
            parse("(x1:im(x1))Ag").unwrap()
        );
        assert!(parse("(x_{}:im(x1))").is_err());
        assert!(parse("(x_1)").is_err());
    }

    #[test]
    fn truncated() {
        let text = "(x1:im(x1)";
        match parse(text) {
            Err(FdgError::SyntaxError { span, .. }) => assert_eq!(span.column, text.len()),
            other => panic!("{other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("(x1) (x2)").is_err());
    }
}
