//! Sentence generation from Functional Grammar underlying structures.
//!
//! The pipeline is [`notation::parse_structure`] → [`facts::compile`] →
//! [`realizer::realize`]: a structure such as
//! `(e:'love'[V]:(x:'man'[N])AgSubj (x:'woman'[N])GoObj)` is parsed into a
//! typed tree, compiled into node/property fact triples, and realized as
//! "The man loves the woman" using the lexicon's morphology.
//!
//! [`fdg`] is a separate front end that parses, validates and typesets
//! Representational Level structures of Functional Discourse Grammar.

pub mod cli;
pub mod facts;
pub mod fdg;
pub mod lexicon;
pub mod mapping;
pub mod notation;
pub mod prolog;
pub mod realizer;
pub mod span;

pub use facts::{compile, query, FactBase, NodeId, Value};
pub use lexicon::{load_lexicon, plural_form, verb_forms, Lexicon};
pub use mapping::{load_mapping, MappingConfig, PrepositionMap};
pub use notation::{parse_structure, tokenize, Predication};
pub use realizer::{realize, realize_with};
pub use span::SourceSpan;
