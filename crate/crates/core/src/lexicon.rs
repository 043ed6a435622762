//! Lexical entries stored as Prolog-style fact records:
//!
//! ```text
//! verb(<lemma>, <state|action>, [<past|regular>, <participle|regular>], [[<role>, <restriction>], ...]).
//! noun(<lemma>, <plural|regular>, [<feature>, ...], <proper|common>).
//! adj(<lemma>).
//! ```
//!
//! Frame slots may carry a trailing variable (`[agent, animate, X1]`) and a
//! verb record may end with a satellite variable (`Sat`); both are accepted
//! and discarded.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::prolog::{read_clauses, PlTerm};

pub const SEED_LEXICON: &str = include_str!("../data/lexicon.pl");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexiconError {
    #[error("line {line}: malformed record: {reason}")]
    MalformedRecord { line: usize, reason: String },
    #[error("duplicate {category} '{lemma}'")]
    DuplicateLemma {
        category: &'static str,
        lemma: String,
    },
    #[error("unknown aktionsart '{0}'")]
    UnknownAktionsart(String),
    #[error("unknown lexeme '{0}'")]
    UnknownLexeme(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aktionsart {
    State,
    Action,
}

impl Aktionsart {
    fn name(self) -> &'static str {
        match self {
            Aktionsart::State => "state",
            Aktionsart::Action => "action",
        }
    }
}

/// An inflected form: either listed verbatim or produced by the regular rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Form {
    Regular,
    Irregular(String),
}

impl Form {
    fn from_atom(atom: &str) -> Form {
        match atom {
            "regular" => Form::Regular,
            other => Form::Irregular(other.to_string()),
        }
    }

    fn resolve(&self, regular: impl FnOnce() -> String) -> String {
        match self {
            Form::Regular => regular(),
            Form::Irregular(form) => form.clone(),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Regular => f.write_str("regular"),
            Form::Irregular(form) => f.write_str(form),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameSlot {
    pub role: String,
    pub restriction: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbEntry {
    pub lemma: String,
    pub aktionsart: Aktionsart,
    pub past: Form,
    pub participle: Form,
    pub frame: Vec<FrameSlot>,
}

impl VerbEntry {
    pub fn has_role(&self, role: &str) -> bool {
        self.frame.iter().any(|slot| slot.role == role)
    }

    /// Position of `role` in the argument frame.
    pub fn frame_position(&self, role: &str) -> Option<usize> {
        self.frame.iter().position(|slot| slot.role == role)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounEntry {
    pub lemma: String,
    pub plural: Form,
    pub features: BTreeSet<String>,
    pub proper: bool,
}

impl NounEntry {
    pub fn is_personal(&self) -> bool {
        self.features.contains("human") || self.features.contains("animate")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjEntry {
    pub lemma: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Lexicon {
    pub verbs: BTreeMap<String, VerbEntry>,
    pub nouns: BTreeMap<String, NounEntry>,
    pub adjectives: BTreeMap<String, AdjEntry>,
}

impl Lexicon {
    pub fn seed() -> Self {
        load_lexicon(SEED_LEXICON).expect("bundled lexicon is valid")
    }

    pub fn verb(&self, lemma: &str) -> Result<&VerbEntry, LexiconError> {
        self.verbs
            .get(lemma)
            .ok_or_else(|| LexiconError::UnknownLexeme(lemma.to_string()))
    }

    pub fn noun(&self, lemma: &str) -> Result<&NounEntry, LexiconError> {
        self.nouns
            .get(lemma)
            .ok_or_else(|| LexiconError::UnknownLexeme(lemma.to_string()))
    }

    pub fn adjective(&self, lemma: &str) -> Result<&AdjEntry, LexiconError> {
        self.adjectives
            .get(lemma)
            .ok_or_else(|| LexiconError::UnknownLexeme(lemma.to_string()))
    }

    /// Canonical record form, one record per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for verb in self.verbs.values() {
            let frame: Vec<String> = verb
                .frame
                .iter()
                .map(|slot| format!("[{}, {}]", slot.role, slot.restriction))
                .collect();
            out.push_str(&format!(
                "verb({}, {}, [{}, {}], [{}]).\n",
                verb.lemma,
                verb.aktionsart.name(),
                verb.past,
                verb.participle,
                frame.join(", ")
            ));
        }
        for noun in self.nouns.values() {
            let features: Vec<&str> = noun.features.iter().map(String::as_str).collect();
            out.push_str(&format!(
                "noun({}, {}, [{}], {}).\n",
                noun.lemma,
                noun.plural,
                features.join(", "),
                if noun.proper { "proper" } else { "common" }
            ));
        }
        for adj in self.adjectives.values() {
            out.push_str(&format!("adj({}).\n", adj.lemma));
        }
        out
    }
}

pub fn load_lexicon(text: &str) -> Result<Lexicon, LexiconError> {
    let clauses = read_clauses(text).map_err(|e| LexiconError::MalformedRecord {
        line: e.line,
        reason: e.message,
    })?;
    let mut lexicon = Lexicon::default();
    for clause in clauses {
        let line = clause.line;
        let malformed = |reason: &str| LexiconError::MalformedRecord {
            line,
            reason: reason.to_string(),
        };
        let PlTerm::Compound(functor, args) = &clause.term else {
            return Err(malformed("expected verb(...), noun(...) or adj(...)"));
        };
        match (functor.as_str(), args.as_slice()) {
            ("verb", [lemma, akt, forms, frame])
            | ("verb", [lemma, akt, forms, frame, PlTerm::Var(_)]) => {
                let lemma = lemma_of(lemma).ok_or_else(|| malformed("verb lemma"))?;
                let aktionsart = match akt.as_name() {
                    Some("state") => Aktionsart::State,
                    Some("action") => Aktionsart::Action,
                    _ => return Err(LexiconError::UnknownAktionsart(akt.to_string())),
                };
                let (past, participle) = match forms.as_list() {
                    Some([past, participle]) => (
                        form_of(past).ok_or_else(|| malformed("past form"))?,
                        form_of(participle).ok_or_else(|| malformed("participle form"))?,
                    ),
                    _ => return Err(malformed("expected [past, participle]")),
                };
                let slots = frame
                    .as_list()
                    .ok_or_else(|| malformed("expected frame list"))?;
                let mut entries: Vec<FrameSlot> = Vec::new();
                for slot in slots {
                    let slot = match slot.as_list() {
                        Some([role, restr]) | Some([role, restr, PlTerm::Var(_)]) => FrameSlot {
                            role: lemma_of(role).ok_or_else(|| malformed("frame role"))?,
                            restriction: lemma_of(restr)
                                .ok_or_else(|| malformed("frame restriction"))?,
                        },
                        _ => return Err(malformed("expected [role, restriction] frame slot")),
                    };
                    if entries.iter().any(|s| s.role == slot.role) {
                        return Err(malformed("repeated role in frame"));
                    }
                    entries.push(slot);
                }
                if !(1..=3).contains(&entries.len()) {
                    return Err(malformed("frame must have 1 to 3 slots"));
                }
                insert(
                    &mut lexicon.verbs,
                    "verb",
                    lemma.clone(),
                    VerbEntry {
                        lemma,
                        aktionsart,
                        past,
                        participle,
                        frame: entries,
                    },
                )?;
            }
            ("noun", [lemma, plural, features, kind]) => {
                let lemma = lemma_of(lemma).ok_or_else(|| malformed("noun lemma"))?;
                let plural = form_of(plural).ok_or_else(|| malformed("plural form"))?;
                let features = features
                    .as_list()
                    .ok_or_else(|| malformed("expected feature list"))?
                    .iter()
                    .map(|f| lemma_of(f).ok_or_else(|| malformed("feature")))
                    .collect::<Result<BTreeSet<_>, _>>()?;
                let proper = match kind.as_name() {
                    Some("proper") => true,
                    Some("common") => false,
                    _ => return Err(malformed("expected proper or common")),
                };
                if proper && plural != Form::Regular {
                    return Err(malformed("proper nouns take no plural form"));
                }
                insert(
                    &mut lexicon.nouns,
                    "noun",
                    lemma.clone(),
                    NounEntry {
                        lemma,
                        plural,
                        features,
                        proper,
                    },
                )?;
            }
            ("adj", [lemma]) => {
                let lemma = lemma_of(lemma).ok_or_else(|| malformed("adjective lemma"))?;
                insert(
                    &mut lexicon.adjectives,
                    "adjective",
                    lemma.clone(),
                    AdjEntry { lemma },
                )?;
            }
            _ => return Err(malformed("expected verb/4, verb/5, noun/4 or adj/1")),
        }
    }
    Ok(lexicon)
}

fn insert<T>(
    map: &mut BTreeMap<String, T>,
    category: &'static str,
    lemma: String,
    entry: T,
) -> Result<(), LexiconError> {
    if map.contains_key(&lemma) {
        return Err(LexiconError::DuplicateLemma { category, lemma });
    }
    map.insert(lemma, entry);
    Ok(())
}

fn lemma_of(term: &PlTerm) -> Option<String> {
    term.as_name()
        .filter(|s| !s.is_empty() && s.chars().all(|c| c.is_ascii_lowercase()))
        .map(str::to_string)
}

fn form_of(term: &PlTerm) -> Option<Form> {
    lemma_of(term).map(|s| Form::from_atom(&s))
}

// Regular English morphology.

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn ends_consonant_y(word: &str) -> bool {
    let mut rev = word.chars().rev();
    rev.next() == Some('y') && rev.next().is_some_and(|c| !is_vowel(c))
}

/// `love` → `loved`, `carry` → `carried`, `walk` → `walked`.
pub fn regular_past(lemma: &str) -> String {
    if lemma.ends_with('e') {
        format!("{lemma}d")
    } else if ends_consonant_y(lemma) {
        format!("{}ied", &lemma[..lemma.len() - 1])
    } else {
        format!("{lemma}ed")
    }
}

/// Shared by regular noun plurals and third-person singular verb forms.
pub fn sibilant_suffix(word: &str) -> String {
    if ["s", "x", "z", "ch", "sh"]
        .iter()
        .any(|end| word.ends_with(end))
    {
        format!("{word}es")
    } else if ends_consonant_y(word) {
        format!("{}ies", &word[..word.len() - 1])
    } else {
        format!("{word}s")
    }
}

pub fn present_participle(lemma: &str) -> String {
    match lemma.strip_suffix('e') {
        Some(stem) if !stem.is_empty() && !stem.ends_with('e') => format!("{stem}ing"),
        _ => format!("{lemma}ing"),
    }
}

pub fn verb_forms(lex: &Lexicon, lemma: &str) -> Result<(String, String), LexiconError> {
    let verb = lex.verb(lemma)?;
    Ok((
        verb.past.resolve(|| regular_past(lemma)),
        verb.participle.resolve(|| regular_past(lemma)),
    ))
}

pub fn plural_form(lex: &Lexicon, lemma: &str) -> Result<String, LexiconError> {
    let noun = lex.noun(lemma)?;
    Ok(noun.plural.resolve(|| sibilant_suffix(lemma)))
}
