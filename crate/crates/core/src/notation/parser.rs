use crate::span::{end_span, SourceSpan};

use super::ast::*;
use super::lexer::{tokenize, Operator, Token, TokenKind};
use super::NotationError;

/// Parses one FG underlying structure:
///
/// ```text
/// predication := '(' operator* 'e' ':' head ':'? argument* ')'
/// head        := lexeme '[V]' | term
/// term        := '(' det? num? 'x' ':' lexeme '[N]' (':' (lexeme '[A]' | predication))* ')'
/// argument    := term semfunc synfunc?
/// ```
pub fn parse_structure(text: &str) -> Result<Predication, NotationError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(NotationError::EmptyStructure);
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        eof: end_span(text),
    };
    let predication = parser.predication()?;
    if let Some(token) = parser.peek() {
        return Err(NotationError::SyntaxError {
            span: token.span,
            expected: vec!["end of input".into()],
        });
    }
    Ok(predication)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: SourceSpan,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<&TokenKind> {
        self.peek().map(|t| &t.kind)
    }

    fn next(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn error(&self, expected: &[&str]) -> NotationError {
        NotationError::SyntaxError {
            span: self.peek().map_or(self.eof, |t| t.span),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, kind: TokenKind, name: &str) -> Result<SourceSpan, NotationError> {
        match self.peek() {
            Some(token) if token.kind == kind => Ok(self.next().unwrap().span),
            _ => Err(self.error(&[name])),
        }
    }

    fn predication(&mut self) -> Result<Predication, NotationError> {
        let open = self.expect(TokenKind::LParen, "'('")?;
        let mut operators = PredOperators::default();
        let mut tense_seen = false;
        while let Some(TokenKind::Operator(op)) = self.peek_kind().cloned() {
            let span = self.next().unwrap().span;
            let duplicate = match op {
                Operator::Tense(t) => {
                    let seen = tense_seen;
                    tense_seen = true;
                    operators.tense = t;
                    seen
                }
                Operator::Perfect => std::mem::replace(&mut operators.perfect, true),
                Operator::Progressive => std::mem::replace(&mut operators.progressive, true),
            };
            if duplicate {
                return Err(NotationError::DuplicateOperator(span));
            }
        }
        self.expect(TokenKind::PredVar, "'e'")?;
        self.expect(TokenKind::Colon, "':'")?;
        let head = match self.peek_kind() {
            Some(TokenKind::Lexeme(_)) => Head::Verbal(self.lexeme(Category::V)?),
            Some(TokenKind::LParen) => Head::Copular(Box::new(self.term()?)),
            _ => return Err(self.error(&["verb lexeme", "'('"])),
        };
        if self.peek_kind() == Some(&TokenKind::Colon) {
            self.next();
        }
        let mut arguments = Vec::new();
        while self.peek_kind() == Some(&TokenKind::LParen) {
            arguments.push(self.argument()?);
        }
        let close = self.expect(TokenKind::RParen, "')'")?;
        let span = open.to(close);
        if matches!(head, Head::Copular(_))
            && !(arguments.len() == 1 && arguments[0].semantic == SemanticFunction::Zero)
        {
            return Err(NotationError::InvalidCopula(span));
        }
        Ok(Predication {
            operators,
            head,
            arguments,
            span,
        })
    }

    fn lexeme(&mut self, category: Category) -> Result<Lexeme, NotationError> {
        let form = match self.peek_kind() {
            Some(TokenKind::Lexeme(form)) => form.clone(),
            _ => return Err(self.error(&["lexeme"])),
        };
        self.next();
        let wanted = match category {
            Category::N => "'[N]'",
            Category::V => "'[V]'",
            Category::A => "'[A]'",
        };
        self.expect(TokenKind::Category(category), wanted)?;
        Ok(Lexeme { form, category })
    }

    fn term(&mut self) -> Result<Term, NotationError> {
        let open = self.expect(TokenKind::LParen, "'('")?;
        let (determinacy, number) = match self.peek_kind() {
            Some(TokenKind::TermVar(d, n)) => (*d, *n),
            _ => return Err(self.error(&["term variable"])),
        };
        self.next();
        self.expect(TokenKind::Colon, "':'")?;
        let head = self.lexeme(Category::N)?;
        let mut modifiers = Vec::new();
        let mut restrictors = Vec::new();
        while self.peek_kind() == Some(&TokenKind::Colon) {
            self.next();
            match self.peek_kind() {
                Some(TokenKind::Lexeme(_)) => modifiers.push(self.lexeme(Category::A)?),
                Some(TokenKind::LParen) => restrictors.push(self.predication()?),
                _ => return Err(self.error(&["adjective lexeme", "'('"])),
            }
        }
        let close = self.expect(TokenKind::RParen, "')'")?;
        Ok(Term {
            determinacy,
            number,
            head,
            modifiers,
            restrictors,
            span: open.to(close),
        })
    }

    fn argument(&mut self) -> Result<Argument, NotationError> {
        let term = self.term()?;
        let semantic = match self.peek_kind() {
            Some(TokenKind::SemFunc(f)) => *f,
            _ => return Err(self.error(&["semantic function"])),
        };
        self.next();
        let syntactic = match self.peek_kind() {
            Some(TokenKind::SynFunc(f)) => {
                let f = *f;
                self.next();
                Some(f)
            }
            _ => None,
        };
        Ok(Argument {
            term,
            semantic,
            syntactic,
        })
    }
}
