//! The FG underlying-structure notation: tokenizer, parser and canonical
//! serializer.

mod ast;
mod lexer;
mod parser;

pub use ast::*;
pub use lexer::{tokenize, Operator, Token, TokenKind};
pub use parser::parse_structure;

use crate::span::SourceSpan;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotationError {
    #[error("{0}: unknown character")]
    UnknownCharacter(SourceSpan),
    #[error("{0}: unterminated lexeme")]
    UnterminatedLexeme(SourceSpan),
    #[error("{0}: lexeme must be lowercase letters a-z")]
    InvalidLexeme(SourceSpan),
    #[error("{0}: expected category [N], [V] or [A]")]
    InvalidCategory(SourceSpan),
    #[error("{0}: unknown syntactic function")]
    UnknownFunction(SourceSpan),
    #[error("{0}: unknown word")]
    UnknownWord(SourceSpan),
    #[error("{span}: expected {}", expected.join(" or "))]
    SyntaxError {
        span: SourceSpan,
        expected: Vec<String>,
    },
    #[error("{0}: operator given twice")]
    DuplicateOperator(SourceSpan),
    #[error("{0}: a copular predication takes exactly one zero-function argument")]
    InvalidCopula(SourceSpan),
    #[error("empty structure")]
    EmptyStructure,
}

impl NotationError {
    pub fn span(&self) -> Option<SourceSpan> {
        match self {
            NotationError::UnknownCharacter(s)
            | NotationError::UnterminatedLexeme(s)
            | NotationError::InvalidLexeme(s)
            | NotationError::InvalidCategory(s)
            | NotationError::UnknownFunction(s)
            | NotationError::UnknownWord(s)
            | NotationError::DuplicateOperator(s)
            | NotationError::InvalidCopula(s)
            | NotationError::SyntaxError { span: s, .. } => Some(*s),
            NotationError::EmptyStructure => None,
        }
    }
}
