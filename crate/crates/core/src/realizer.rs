//! English surface realization from a compiled fact base.
//!
//! Clause order is subject, verb group, object, then the remaining arguments
//! in argument-frame order, each introduced by the preposition its role maps
//! to. Passive clauses move the agent to a final `by` phrase. Copular clauses
//! realize as subject, a form of `be`, and the predicate nominal. Restrictor
//! predications become relative clauses: the argument repeating the head
//! noun without determiner or number is the gap, and a relative pronoun is
//! fronted in its place.

use crate::facts::{query, FactBase, NodeId, Value};
use crate::lexicon::{present_participle, sibilant_suffix, verb_forms, Lexicon, LexiconError};
use crate::mapping::PrepositionMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealizeError {
    #[error("unsupported illocution '{0}'")]
    UnsupportedIllocution(String),
    #[error("clause {0} has no subject or zero-function argument")]
    NoSubject(NodeId),
    #[error("unknown lexeme '{0}'")]
    UnknownLexeme(String),
    #[error("fact base has no root node")]
    EmptyFactBase,
    #[error("missing fact ({node}, {key})")]
    MissingFact { node: NodeId, key: String },
    #[error("unexpected value {value} for ({node}, {key})")]
    UnexpectedValue {
        node: NodeId,
        key: String,
        value: String,
    },
    #[error("relative clause {0} has no argument coreferent with its head noun")]
    NoRelativeGap(NodeId),
}

impl From<LexiconError> for RealizeError {
    fn from(err: LexiconError) -> Self {
        match err {
            LexiconError::UnknownLexeme(lemma) => RealizeError::UnknownLexeme(lemma),
            other => RealizeError::UnknownLexeme(other.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tense {
    Past,
    Pres,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Voice {
    Active,
    Passive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Sg3,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbGroupSpec {
    pub lemma: String,
    pub tense: Tense,
    pub perfect: bool,
    pub progressive: bool,
    pub voice: Voice,
    pub agreement: Agreement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Verb<'a> {
    Have,
    Be,
    Lexical(&'a str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NonFinite {
    Participle,
    Gerund,
}

fn finite(
    verb: Verb<'_>,
    tense: Tense,
    agreement: Agreement,
    lex: &Lexicon,
) -> Result<String, RealizeError> {
    let sg3 = agreement == Agreement::Sg3;
    Ok(match (verb, tense) {
        (Verb::Have, Tense::Pres) => if sg3 { "has" } else { "have" }.to_string(),
        (Verb::Have, Tense::Past) => "had".to_string(),
        (Verb::Be, Tense::Pres) => if sg3 { "is" } else { "are" }.to_string(),
        (Verb::Be, Tense::Past) => if sg3 { "was" } else { "were" }.to_string(),
        (Verb::Lexical(lemma), Tense::Pres) => {
            lex.verb(lemma)?;
            if sg3 {
                sibilant_suffix(lemma)
            } else {
                lemma.to_string()
            }
        }
        (Verb::Lexical(lemma), Tense::Past) => verb_forms(lex, lemma)?.0,
    })
}

fn non_finite(verb: Verb<'_>, form: NonFinite, lex: &Lexicon) -> Result<String, RealizeError> {
    Ok(match (verb, form) {
        (Verb::Have, NonFinite::Participle) => "had".to_string(),
        (Verb::Have, NonFinite::Gerund) => "having".to_string(),
        (Verb::Be, NonFinite::Participle) => "been".to_string(),
        (Verb::Be, NonFinite::Gerund) => "being".to_string(),
        (Verb::Lexical(lemma), NonFinite::Participle) => verb_forms(lex, lemma)?.1,
        (Verb::Lexical(lemma), NonFinite::Gerund) => {
            lex.verb(lemma)?;
            present_participle(lemma)
        }
    })
}

/// Builds the auxiliary chain perfect → progressive → passive → main verb.
/// Only the first element is finite; each auxiliary selects the form of the
/// element after it.
fn verb_chain(
    main: Verb<'_>,
    tense: Tense,
    perfect: bool,
    progressive: bool,
    voice: Voice,
    agreement: Agreement,
    lex: &Lexicon,
) -> Result<Vec<String>, RealizeError> {
    let mut chain: Vec<(Verb<'_>, Option<NonFinite>)> = Vec::new();
    if perfect {
        chain.push((Verb::Have, Some(NonFinite::Participle)));
    }
    if progressive {
        chain.push((Verb::Be, Some(NonFinite::Gerund)));
    }
    if voice == Voice::Passive {
        chain.push((Verb::Be, Some(NonFinite::Participle)));
    }
    chain.push((main, None));

    let mut words = Vec::with_capacity(chain.len());
    let mut governed: Option<NonFinite> = None;
    for (i, (verb, selects)) in chain.iter().enumerate() {
        let word = if i == 0 {
            finite(*verb, tense, agreement, lex)?
        } else {
            non_finite(*verb, governed.expect("auxiliary governs next form"), lex)?
        };
        words.push(word);
        governed = *selects;
    }
    Ok(words)
}

pub fn inflect_verb(spec: &VerbGroupSpec, lex: &Lexicon) -> Result<Vec<String>, RealizeError> {
    lex.verb(&spec.lemma)?;
    verb_chain(
        Verb::Lexical(&spec.lemma),
        spec.tense,
        spec.perfect,
        spec.progressive,
        spec.voice,
        spec.agreement,
        lex,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Det {
    Def,
    Indef,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Num {
    Singular,
    Plural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounPhraseSpec {
    pub det: Det,
    pub num: Num,
    pub proper: bool,
    pub lemma: String,
    pub modifiers: Vec<String>,
    pub relative_clause: Option<String>,
}

fn capitalize(word: &str) -> String {
    let mut chars = word.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

pub fn realize_term(np: &NounPhraseSpec, lex: &Lexicon) -> Result<String, RealizeError> {
    let noun = lex.noun(&np.lemma)?;
    let mut words: Vec<String> = Vec::new();
    if np.proper || noun.proper {
        words.push(capitalize(&np.lemma));
    } else {
        let head = match np.num {
            Num::Singular => np.lemma.clone(),
            Num::Plural => crate::lexicon::plural_form(lex, &np.lemma)?,
        };
        let next = np.modifiers.first().unwrap_or(&head);
        match (np.det, np.num) {
            (Det::Def, _) => words.push("the".into()),
            (Det::Indef, Num::Singular) => {
                let vowel = next.starts_with(['a', 'e', 'i', 'o', 'u']);
                words.push(if vowel { "an" } else { "a" }.into());
            }
            (Det::Indef, Num::Plural) => {}
        }
        words.extend(np.modifiers.iter().cloned());
        words.push(head);
    }
    if let Some(relative) = &np.relative_clause {
        words.push(relative.clone());
    }
    Ok(words.join(" "))
}

/// The verb group realized for one clause (main or relative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseTrace {
    pub node: NodeId,
    pub verb_group: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub text: String,
    pub clauses: Vec<ClauseTrace>,
}

/// Realizes the fact base with the default role→preposition table.
pub fn realize(fb: &FactBase, lex: &Lexicon) -> Result<String, RealizeError> {
    realize_with(fb, lex, &PrepositionMap::default())
}

pub fn realize_with(
    fb: &FactBase,
    lex: &Lexicon,
    preps: &PrepositionMap,
) -> Result<String, RealizeError> {
    realize_traced(fb, lex, preps).map(|r| r.text)
}

pub fn realize_traced(
    fb: &FactBase,
    lex: &Lexicon,
    preps: &PrepositionMap,
) -> Result<Realization, RealizeError> {
    match fb.clause_prop("illocution").and_then(Value::as_str) {
        Some("decl") | None => {}
        Some(other) => return Err(RealizeError::UnsupportedIllocution(other.to_string())),
    }
    let root = fb.root().ok_or(RealizeError::EmptyFactBase)?;
    let mut realizer = Realizer {
        fb,
        lex,
        preps,
        clauses: Vec::new(),
    };
    let words = realizer.clause(root, None)?;
    let text = capitalize(&words.join(" "));
    Ok(Realization {
        text,
        clauses: realizer.clauses,
    })
}

/// The noun a relative clause restricts.
#[derive(Debug, Clone, Copy)]
struct Antecedent<'a> {
    lemma: &'a str,
    plural: bool,
    personal: bool,
}

struct Realizer<'a> {
    fb: &'a FactBase,
    lex: &'a Lexicon,
    preps: &'a PrepositionMap,
    clauses: Vec<ClauseTrace>,
}

/// A clause constituent before the gap is removed.
struct Constituent {
    node: NodeId,
    preposition: Option<String>,
    words: Vec<String>,
}

impl<'a> Realizer<'a> {
    fn text(&self, node: NodeId, key: &str) -> Result<&'a str, RealizeError> {
        let value = query(self.fb, node, key).ok_or_else(|| RealizeError::MissingFact {
            node,
            key: key.to_string(),
        })?;
        value
            .as_str()
            .ok_or_else(|| self.unexpected(node, key, value))
    }

    fn flag(&self, node: NodeId, key: &str) -> Result<bool, RealizeError> {
        match self.text(node, key)? {
            "true" => Ok(true),
            "false" => Ok(false),
            other => Err(self.unexpected(node, key, &Value::atom(other))),
        }
    }

    fn unexpected(&self, node: NodeId, key: &str, value: &Value) -> RealizeError {
        RealizeError::UnexpectedValue {
            node,
            key: key.to_string(),
            value: value.to_string(),
        }
    }

    fn optional(&self, node: NodeId, key: &str) -> Option<&'a str> {
        query(self.fb, node, key).and_then(Value::as_str)
    }

    fn is_bare(&self, node: NodeId) -> bool {
        self.optional(node, "bare") == Some("true")
    }

    fn plural(&self, node: NodeId) -> Result<bool, RealizeError> {
        match self.text(node, "num")? {
            "plural" => Ok(true),
            "singular" => Ok(false),
            other => Err(self.unexpected(node, "num", &Value::atom(other))),
        }
    }

    /// Realizes a term node, including any relative clauses it carries.
    fn noun_phrase(&mut self, node: NodeId) -> Result<String, RealizeError> {
        let lemma = self.text(node, "lex")?;
        let noun = self.lex.noun(lemma)?;
        let bare = self.is_bare(node);
        let plural = self.plural(node)?;
        // A term written without determiner or number refers definitely.
        let det = if bare {
            Det::Def
        } else {
            match self.text(node, "det")? {
                "def" => Det::Def,
                "indef" => Det::Indef,
                other => return Err(self.unexpected(node, "det", &Value::atom(other))),
            }
        };
        let proper = self.flag(node, "proper")?;
        let modifiers = query(self.fb, node, "modifs")
            .and_then(Value::as_list)
            .map(<[String]>::to_vec)
            .unwrap_or_default();
        let antecedent = Antecedent {
            lemma,
            plural,
            personal: noun.is_personal(),
        };
        let mut relatives = Vec::new();
        for restrictor in self.fb.subnodes(node) {
            relatives.push(self.clause(restrictor, Some(antecedent))?.join(" "));
        }
        let np = NounPhraseSpec {
            det,
            num: if plural { Num::Plural } else { Num::Singular },
            proper,
            lemma: lemma.to_string(),
            modifiers,
            relative_clause: (!relatives.is_empty()).then(|| relatives.join(" and ")),
        };
        realize_term(&np, self.lex)
    }

    fn role(&self, node: NodeId) -> Result<&'a str, RealizeError> {
        self.text(node, "role")
    }

    fn relation(&self, node: NodeId) -> Result<&'a str, RealizeError> {
        self.text(node, "relation")
    }

    fn clause(
        &mut self,
        pred: NodeId,
        antecedent: Option<Antecedent<'_>>,
    ) -> Result<Vec<String>, RealizeError> {
        let tense = match self.text(pred, "tense")? {
            "past" => Tense::Past,
            "pres" => Tense::Pres,
            other => return Err(self.unexpected(pred, "tense", &Value::atom(other))),
        };
        let perfect = self.flag(pred, "perfect")?;
        let progressive = self.flag(pred, "progressive")?;
        let voice = match self.text(pred, "voice")? {
            "active" => Voice::Active,
            "passive" => Voice::Passive,
            other => return Err(self.unexpected(pred, "voice", &Value::atom(other))),
        };
        let copular = query(self.fb, pred, "nav")
            .and_then(Value::as_list)
            .is_some_and(|nav| nav.first().map(String::as_str) == Some("N"));
        let subnodes = self.fb.subnodes(pred);

        let gap = match antecedent {
            Some(ante) => Some(
                subnodes
                    .iter()
                    .copied()
                    .find(|n| {
                        self.optional(*n, "lex") == Some(ante.lemma)
                            && self.is_bare(*n)
                            && self.fb.subnodes(*n).is_empty()
                    })
                    .ok_or(RealizeError::NoRelativeGap(pred))?,
            ),
            None => None,
        };

        let subject = subnodes
            .iter()
            .copied()
            .find(|n| self.relation(*n) == Ok("subject"))
            .or_else(|| {
                subnodes
                    .iter()
                    .copied()
                    .find(|n| self.role(*n) == Ok("zero"))
            })
            .ok_or(RealizeError::NoSubject(pred))?;
        let subject_plural = match (gap, antecedent) {
            (Some(g), Some(ante)) if g == subject => ante.plural,
            _ => self.plural(subject)?,
        };
        let agreement = if subject_plural {
            Agreement::Other
        } else {
            Agreement::Sg3
        };

        let (main, postverbal): (Verb<'_>, Vec<NodeId>) = if copular {
            let predicate: Vec<NodeId> = subnodes
                .iter()
                .copied()
                .filter(|n| *n != subject && self.role(*n) == Ok("pred"))
                .collect();
            (Verb::Be, predicate)
        } else {
            let lemma = self.text(pred, "lex")?;
            let verb = self.lex.verb(lemma)?;
            let rank = |node: NodeId| -> (u8, usize) {
                let role = self.role(node).unwrap_or("");
                let relation = self.relation(node).unwrap_or("");
                let position = verb.frame_position(role).unwrap_or(usize::MAX);
                if relation == "object" {
                    (0, position)
                } else if voice == Voice::Passive && role == "agent" {
                    (2, position)
                } else {
                    (1, position)
                }
            };
            let mut rest: Vec<NodeId> =
                subnodes.iter().copied().filter(|n| *n != subject).collect();
            rest.sort_by_key(|n| rank(*n));
            (Verb::Lexical(lemma), rest)
        };

        let verb_group = verb_chain(
            main,
            tense,
            perfect,
            progressive,
            voice,
            agreement,
            self.lex,
        )?;

        let mut constituents = Vec::new();
        constituents.push(Constituent {
            node: subject,
            preposition: None,
            words: Vec::new(),
        });
        for node in postverbal {
            let preposition = if copular || self.relation(node)? == "object" {
                None
            } else {
                self.preps.get(self.role(node)?).map(str::to_string)
            };
            constituents.push(Constituent {
                node,
                preposition,
                words: Vec::new(),
            });
        }
        for c in &mut constituents {
            if Some(c.node) == gap {
                continue;
            }
            c.words = vec![self.noun_phrase(c.node)?];
        }

        let mut words = Vec::new();
        if let Some(ante) = antecedent {
            words.push(if ante.personal { "who" } else { "which" }.to_string());
        }
        // Subject, verb group, then the postverbal constituents. A gap leaves
        // only its preposition behind.
        for (i, c) in constituents.iter().enumerate() {
            words.extend(c.preposition.iter().cloned());
            words.extend(c.words.iter().cloned());
            if i == 0 {
                words.extend(verb_group.iter().cloned());
            }
        }
        self.clauses.push(ClauseTrace {
            node: pred,
            verb_group,
        });
        Ok(words)
    }
}
