//! Typed syntax tree for FG underlying clause structures.
//!
//! Equality on the tree types ignores source spans, so a structure parsed
//! from its canonical serialization compares equal to the original.

use std::fmt;

use crate::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Tense {
    Past,
    #[default]
    Pres,
}

impl Tense {
    /// Surface token, also used as the mapping-config key.
    pub fn token(self) -> &'static str {
        match self {
            Tense::Past => "Past",
            Tense::Pres => "Pres",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PredOperators {
    pub tense: Tense,
    pub perfect: bool,
    pub progressive: bool,
}

/// Mapping-config keys for the aspect operators.
pub const PERFECT_TOKEN: &str = "Pf";
pub const PROGRESSIVE_TOKEN: &str = "Prog";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    N,
    V,
    A,
}

impl Category {
    pub fn letter(self) -> char {
        match self {
            Category::N => 'N',
            Category::V => 'V',
            Category::A => 'A',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lexeme {
    pub form: String,
    pub category: Category,
}

impl Lexeme {
    pub fn new(form: impl Into<String>, category: Category) -> Self {
        Lexeme {
            form: form.into(),
            category,
        }
    }
}

impl fmt::Display for Lexeme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}'[{}]", self.form, self.category.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Determinacy {
    Def,
    Indef,
    #[default]
    Unspecified,
}

impl Determinacy {
    pub fn token(self) -> Option<&'static str> {
        match self {
            Determinacy::Def => Some("d"),
            Determinacy::Indef => Some("i"),
            Determinacy::Unspecified => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Number {
    Sg,
    Pl,
    #[default]
    Unspecified,
}

impl Number {
    pub fn token(self) -> Option<&'static str> {
        match self {
            Number::Sg => Some("1"),
            Number::Pl => Some("m"),
            Number::Unspecified => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemanticFunction {
    Ag,
    Go,
    Rec,
    Zero,
}

impl SemanticFunction {
    pub const ALL: [SemanticFunction; 4] = [
        SemanticFunction::Ag,
        SemanticFunction::Go,
        SemanticFunction::Rec,
        SemanticFunction::Zero,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SemanticFunction::Ag => "Ag",
            SemanticFunction::Go => "Go",
            SemanticFunction::Rec => "Rec",
            SemanticFunction::Zero => "0",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SyntacticFunction {
    Subj,
    Obj,
}

impl SyntacticFunction {
    pub const ALL: [SyntacticFunction; 2] = [SyntacticFunction::Subj, SyntacticFunction::Obj];

    pub fn token(self) -> &'static str {
        match self {
            SyntacticFunction::Subj => "Subj",
            SyntacticFunction::Obj => "Obj",
        }
    }
}

/// A referring expression: `(dmx:'book'[N]:'old'[A])`.
#[derive(Debug, Clone)]
pub struct Term {
    pub determinacy: Determinacy,
    pub number: Number,
    pub head: Lexeme,
    pub modifiers: Vec<Lexeme>,
    pub restrictors: Vec<Predication>,
    pub span: SourceSpan,
}

impl Term {
    /// True when neither determinacy nor number was written.
    pub fn is_bare(&self) -> bool {
        self.determinacy == Determinacy::Unspecified && self.number == Number::Unspecified
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.determinacy == other.determinacy
            && self.number == other.number
            && self.head == other.head
            && self.modifiers == other.modifiers
            && self.restrictors == other.restrictors
    }
}

impl Eq for Term {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Argument {
    pub term: Term,
    pub semantic: SemanticFunction,
    pub syntactic: Option<SyntacticFunction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Head {
    Verbal(Lexeme),
    Copular(Box<Term>),
}

#[derive(Debug, Clone)]
pub struct Predication {
    pub operators: PredOperators,
    pub head: Head,
    pub arguments: Vec<Argument>,
    pub span: SourceSpan,
}

impl PartialEq for Predication {
    fn eq(&self, other: &Self) -> bool {
        self.operators == other.operators
            && self.head == other.head
            && self.arguments == other.arguments
    }
}

impl Eq for Predication {}

// Canonical serialization: capitalized operators, explicit colon before the
// argument list, single spaces between arguments.

impl fmt::Display for Predication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if self.operators.tense == Tense::Past {
            f.write_str("Past ")?;
        }
        if self.operators.perfect {
            write!(f, "{PERFECT_TOKEN} ")?;
        }
        if self.operators.progressive {
            write!(f, "{PROGRESSIVE_TOKEN} ")?;
        }
        f.write_str("e:")?;
        match &self.head {
            Head::Verbal(lexeme) => write!(f, "{lexeme}")?,
            Head::Copular(term) => write!(f, "{term}")?,
        }
        if !self.arguments.is_empty() {
            f.write_str(":")?;
            for (i, arg) in self.arguments.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{arg}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        if let Some(d) = self.determinacy.token() {
            f.write_str(d)?;
        }
        if let Some(n) = self.number.token() {
            f.write_str(n)?;
        }
        write!(f, "x:{}", self.head)?;
        for modifier in &self.modifiers {
            write!(f, ":{modifier}")?;
        }
        for restrictor in &self.restrictors {
            write!(f, ":{restrictor}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.term, self.semantic.token())?;
        if let Some(syn) = self.syntactic {
            f.write_str(syn.token())?;
        }
        Ok(())
    }
}
