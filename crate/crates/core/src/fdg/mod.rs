//! Functional Discourse Grammar, Representational Level: parser, validator,
//! typesetter and parse-tree printer.
//!
//! The accepted notation is
//!
//! ```text
//! content    : '(' OPERATOR? 'p' X ( ':' head '(' 'p' X ')' )* ')' FUNCTION? ;
//! soaffairs  : '(' OPERATOR? 'e' X ( ':' head '(' 'e' X ')' )* ')' FUNCTION? ;
//! property   : ... 'f' ...   individual : ... 'x' ...
//! location   : ... 'l' ...   time       : ... 't' ...
//! head       : LEMMA? ( '[' ( soaffairs | property | individual | location | time )* ']' )? ;
//! LEMMA      : 'a'..'z'+ ;   X : '0'..'9'+ ;
//! ```
//!
//! An index may also be written in subscript markup, `x_{1}`, so that
//! typeset output parses back.

mod format;
mod parser;
mod tree;
mod validate;

use std::fmt;

pub use format::{format_rl, FormatStyle};
pub use parser::parse_rl;
pub use tree::rl_tree;
pub use validate::{validate_rl, Diagnostic, Severity};

use crate::span::SourceSpan;

/// Layers of the Representational Level with the grammar rule naming each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Content,
    SoAffairs,
    Property,
    Individual,
    Location,
    Time,
}

impl Layer {
    pub const ALL: [Layer; 6] = [
        Layer::Content,
        Layer::SoAffairs,
        Layer::Property,
        Layer::Individual,
        Layer::Location,
        Layer::Time,
    ];

    pub fn letter(self) -> char {
        match self {
            Layer::Content => 'p',
            Layer::SoAffairs => 'e',
            Layer::Property => 'f',
            Layer::Individual => 'x',
            Layer::Location => 'l',
            Layer::Time => 't',
        }
    }

    pub fn rule(self) -> &'static str {
        match self {
            Layer::Content => "content",
            Layer::SoAffairs => "soaffairs",
            Layer::Property => "property",
            Layer::Individual => "individual",
            Layer::Location => "location",
            Layer::Time => "time",
        }
    }

    /// Whether the layer may appear inside a bracketed head. Content is
    /// only an entry point.
    pub fn nestable(self) -> bool {
        self != Layer::Content
    }

    pub fn from_letter(word: &str) -> Option<Layer> {
        Layer::ALL.into_iter().find(|l| {
            let mut chars = word.chars();
            chars.next() == Some(l.letter()) && chars.next().is_none()
        })
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One `':' head '(' layer index ')'` group of a node.
#[derive(Debug, Clone)]
pub struct Restrictor {
    pub lemma: Option<String>,
    /// `None` when no bracket was written, `Some(vec![])` for `[]`.
    pub children: Option<Vec<RlNode>>,
    pub ref_index: u32,
    /// Span of the closing `(x1)` reference.
    pub ref_span: SourceSpan,
}

impl PartialEq for Restrictor {
    fn eq(&self, other: &Self) -> bool {
        self.lemma == other.lemma
            && self.children == other.children
            && self.ref_index == other.ref_index
    }
}

impl Eq for Restrictor {}

#[derive(Debug, Clone)]
pub struct RlNode {
    pub layer: Layer,
    pub index: u32,
    pub operator: Option<String>,
    pub restrictors: Vec<Restrictor>,
    pub function: Option<String>,
    pub span: SourceSpan,
}

impl PartialEq for RlNode {
    fn eq(&self, other: &Self) -> bool {
        self.layer == other.layer
            && self.index == other.index
            && self.operator == other.operator
            && self.restrictors == other.restrictors
            && self.function == other.function
    }
}

impl Eq for RlNode {}

impl RlNode {
    /// Lemma of the first head, if any.
    pub fn head(&self) -> Option<&str> {
        self.restrictors.iter().find_map(|r| r.lemma.as_deref())
    }

    /// Bracketed sub-structures of all heads, in order.
    pub fn children(&self) -> impl Iterator<Item = &RlNode> {
        self.restrictors
            .iter()
            .flat_map(|r| r.children.iter().flatten())
    }

    pub fn restrictor_refs(&self) -> Vec<(Layer, u32)> {
        self.restrictors
            .iter()
            .map(|r| (self.layer, r.ref_index))
            .collect()
    }
}

/// Closed token sets for functions and operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSets {
    pub functions: Vec<String>,
    pub operators: Vec<String>,
}

impl Default for TokenSets {
    fn default() -> Self {
        TokenSets {
            functions: ["Ag", "Pat", "Inst"].map(String::from).to_vec(),
            operators: ["Past", "Pres"].map(String::from).to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct TokenSetError {
    pub line: usize,
    pub message: String,
}

impl TokenSets {
    /// Reads a token-set file with `functions:` and `operators:` sections,
    /// one token per line. Tokens are added to the default sets.
    pub fn load(text: &str) -> Result<TokenSets, TokenSetError> {
        let mut sets = TokenSets::default();
        let mut section: Option<&mut Vec<String>> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line {
                "functions:" => section = Some(&mut sets.functions),
                "operators:" => section = Some(&mut sets.operators),
                token => {
                    let err = |message: &str| TokenSetError {
                        line: i + 1,
                        message: message.to_string(),
                    };
                    let target = section
                        .as_deref_mut()
                        .ok_or_else(|| err("token outside a section"))?;
                    let mut chars = token.chars();
                    let valid = chars.next().is_some_and(|c| c.is_ascii_uppercase())
                        && chars.all(|c| c.is_ascii_alphabetic());
                    if !valid {
                        return Err(err("tokens are an uppercase letter followed by letters"));
                    }
                    if !target.iter().any(|t| t == token) {
                        target.push(token.to_string());
                    }
                }
            }
        }
        Ok(sets)
    }

    pub fn is_function(&self, token: &str) -> bool {
        self.functions.iter().any(|t| t == token)
    }

    pub fn is_operator(&self, token: &str) -> bool {
        self.operators.iter().any(|t| t == token)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FdgError {
    #[error("{span}: expected {}", expected.join(" or "))]
    SyntaxError {
        span: SourceSpan,
        expected: Vec<String>,
    },
    #[error("{span}: unknown function '{token}'")]
    UnknownFunction { token: String, span: SourceSpan },
    #[error("{span}: unknown operator '{token}'")]
    UnknownOperator { token: String, span: SourceSpan },
}

impl FdgError {
    pub fn span(&self) -> SourceSpan {
        match self {
            FdgError::SyntaxError { span, .. }
            | FdgError::UnknownFunction { span, .. }
            | FdgError::UnknownOperator { span, .. } => *span,
        }
    }
}
