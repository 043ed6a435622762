#![allow(dead_code)]

use fgram::fdg::{Layer, Restrictor, RlNode};
use fgram::notation::*;
use fgram::span::SourceSpan;
use proptest::prelude::*;

pub const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{GOLDEN}/{name}")).unwrap()
}

fn operators() -> impl Strategy<Value = PredOperators> {
    (
        prop_oneof![Just(Tense::Past), Just(Tense::Pres)],
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(tense, perfect, progressive)| PredOperators {
            tense,
            perfect,
            progressive,
        })
}

fn determinacy() -> impl Strategy<Value = Determinacy> {
    prop_oneof![
        Just(Determinacy::Def),
        Just(Determinacy::Indef),
        Just(Determinacy::Unspecified)
    ]
}

fn number() -> impl Strategy<Value = Number> {
    prop_oneof![
        Just(Number::Sg),
        Just(Number::Pl),
        Just(Number::Unspecified)
    ]
}

fn lemma() -> impl Strategy<Value = String> {
    "[a-z]{1,7}"
}

fn semantic() -> impl Strategy<Value = SemanticFunction> {
    proptest::sample::select(SemanticFunction::ALL.to_vec())
}

fn syntactic() -> impl Strategy<Value = Option<SyntacticFunction>> {
    proptest::option::of(proptest::sample::select(SyntacticFunction::ALL.to_vec()))
}

/// Arbitrary well-formed structures over free lemmas, for parser properties.
pub fn arb_structure() -> BoxedStrategy<Predication> {
    arb_predication(2)
}

fn arb_term(depth: u32) -> BoxedStrategy<Term> {
    let restrictors = if depth == 0 {
        Just(Vec::new()).boxed()
    } else {
        prop::collection::vec(arb_predication(depth - 1), 0..2).boxed()
    };
    (
        determinacy(),
        number(),
        lemma(),
        prop::collection::vec(lemma(), 0..3),
        restrictors,
    )
        .prop_map(|(determinacy, number, head, modifiers, restrictors)| Term {
            determinacy,
            number,
            head: Lexeme::new(head, Category::N),
            modifiers: modifiers
                .into_iter()
                .map(|m| Lexeme::new(m, Category::A))
                .collect(),
            restrictors,
            span: SourceSpan::default(),
        })
        .boxed()
}

fn arb_argument(depth: u32) -> BoxedStrategy<Argument> {
    (arb_term(depth), semantic(), syntactic())
        .prop_map(|(term, semantic, syntactic)| Argument {
            term,
            semantic,
            syntactic,
        })
        .boxed()
}

fn arb_predication(depth: u32) -> BoxedStrategy<Predication> {
    let verbal = (
        operators(),
        lemma(),
        prop::collection::vec(arb_argument(depth), 0..4),
    )
        .prop_map(|(operators, verb, arguments)| Predication {
            operators,
            head: Head::Verbal(Lexeme::new(verb, Category::V)),
            arguments,
            span: SourceSpan::default(),
        });
    let copular = (operators(), arb_term(depth), arb_term(depth), syntactic()).prop_map(
        |(operators, head, subject, syntactic)| Predication {
            operators,
            head: Head::Copular(Box::new(head)),
            arguments: vec![Argument {
                term: subject,
                semantic: SemanticFunction::Zero,
                syntactic,
            }],
            span: SourceSpan::default(),
        },
    );
    prop_oneof![3 => verbal, 1 => copular].boxed()
}

// Realizable structures over the seed lexicon.

const COMMON: [&str; 5] = ["man", "woman", "farmer", "duckling", "book"];
const PROPER: [&str; 2] = ["mary", "john"];
const ADJECTIVES: [&str; 3] = ["old", "soft", "young"];

fn seed_term(depth: u32) -> BoxedStrategy<Term> {
    let common = (
        prop_oneof![Just(Determinacy::Def), Just(Determinacy::Indef)],
        prop_oneof![Just(Number::Sg), Just(Number::Pl)],
        proptest::sample::select(COMMON.to_vec()),
        proptest::sample::subsequence(ADJECTIVES.to_vec(), 0..=2),
        any::<bool>(),
    );
    let relative = if depth == 0 {
        Just(None).boxed()
    } else {
        proptest::option::weighted(0.3, seed_restrictor_shape(depth - 1)).boxed()
    };
    let common_term = (common, relative).prop_map(|((d, n, head, mods, bare), relative)| {
        let (determinacy, number) = if bare {
            (Determinacy::Unspecified, Number::Unspecified)
        } else {
            (d, n)
        };
        Term {
            determinacy,
            number,
            head: Lexeme::new(head, Category::N),
            modifiers: mods
                .into_iter()
                .map(|m| Lexeme::new(m, Category::A))
                .collect(),
            restrictors: relative
                .map(|shape: RestrictorShape| vec![shape.build(head)])
                .unwrap_or_default(),
            span: SourceSpan::default(),
        }
    });
    let proper = proptest::sample::select(PROPER.to_vec()).prop_map(|name| Term {
        determinacy: Determinacy::Def,
        number: Number::Sg,
        head: Lexeme::new(name, Category::N),
        modifiers: Vec::new(),
        restrictors: Vec::new(),
        span: SourceSpan::default(),
    });
    prop_oneof![4 => common_term, 1 => proper].boxed()
}

/// A relative clause whose gap is filled in once the head noun is known.
#[derive(Debug, Clone)]
pub struct RestrictorShape {
    clause: Predication,
    gap_slot: usize,
}

impl RestrictorShape {
    fn build(mut self, head: &str) -> Predication {
        // Other bare mentions of the head noun would compete for the gap.
        for (i, arg) in self.clause.arguments.iter_mut().enumerate() {
            if i != self.gap_slot && arg.term.is_bare() && arg.term.head.form == head {
                arg.term.determinacy = Determinacy::Def;
                arg.term.number = Number::Sg;
            }
        }
        let gap = &mut self.clause.arguments[self.gap_slot].term;
        gap.determinacy = Determinacy::Unspecified;
        gap.number = Number::Unspecified;
        gap.head = Lexeme::new(head, Category::N);
        gap.modifiers.clear();
        gap.restrictors.clear();
        self.clause
    }
}

fn seed_restrictor_shape(depth: u32) -> BoxedStrategy<RestrictorShape> {
    (seed_verbal(depth), any::<prop::sample::Index>())
        .prop_map(|(clause, index)| {
            let gap_slot = index.index(clause.arguments.len());
            RestrictorShape { clause, gap_slot }
        })
        .boxed()
}

/// Verbal clause with a subject and optional object, roles drawn from the
/// verb's frame.
fn seed_verbal(depth: u32) -> BoxedStrategy<Predication> {
    let love = Just(("love", vec![SemanticFunction::Ag, SemanticFunction::Go]));
    let give = Just((
        "give",
        vec![
            SemanticFunction::Ag,
            SemanticFunction::Go,
            SemanticFunction::Rec,
        ],
    ));
    prop_oneof![love, give]
        .prop_flat_map(|(verb, roles)| {
            let len = roles.len();
            (Just(verb), proptest::sample::subsequence(roles, 1..=len))
        })
        .prop_flat_map(move |(verb, roles)| {
            (
                Just(verb),
                Just(roles),
                operators(),
                prop::collection::vec(seed_term(depth), 3),
                any::<prop::sample::Index>(),
                any::<bool>(),
                any::<bool>(),
            )
        })
        .prop_map(|(verb, roles, operators, terms, subj, with_obj, shuffle)| {
            let count = roles.len();
            let mut chosen = roles;
            if shuffle {
                chosen.reverse();
            }
            let subject = subj.index(count);
            let mut arguments: Vec<Argument> = chosen
                .into_iter()
                .zip(terms)
                .map(|(semantic, term)| Argument {
                    term,
                    semantic,
                    syntactic: None,
                })
                .collect();
            arguments[subject].syntactic = Some(SyntacticFunction::Subj);
            if with_obj {
                if let Some(obj) = arguments
                    .iter_mut()
                    .find(|a| a.syntactic.is_none() && a.semantic == SemanticFunction::Go)
                {
                    obj.syntactic = Some(SyntacticFunction::Obj);
                }
            }
            Predication {
                operators,
                head: Head::Verbal(Lexeme::new(verb, Category::V)),
                arguments,
                span: SourceSpan::default(),
            }
        })
        .boxed()
}

/// Structures that parse, compile and realize against the seed lexicon.
pub fn arb_realizable() -> BoxedStrategy<Predication> {
    let copular =
        (operators(), seed_term(1), seed_term(0)).prop_map(|(operators, head, subject)| {
            Predication {
                operators,
                head: Head::Copular(Box::new(head)),
                arguments: vec![Argument {
                    term: subject,
                    semantic: SemanticFunction::Zero,
                    syntactic: None,
                }],
                span: SourceSpan::default(),
            }
        });
    prop_oneof![3 => seed_verbal(2), 1 => copular].boxed()
}

// Finite verb forms of the seed lexicon, classified without reference to
// the realizer's own verb-group logic.

fn verb_vocabulary() -> (Vec<&'static str>, Vec<&'static str>, Vec<&'static str>) {
    // (finite only, non-finite only, ambiguous between past and participle)
    let finite = vec![
        "is", "are", "was", "were", "has", "have", "loves", "gives", "believes", "love", "give",
        "believe", "gave",
    ];
    let non_finite = vec![
        "been",
        "being",
        "having",
        "given",
        "loving",
        "giving",
        "believing",
    ];
    let ambiguous = vec!["had", "loved", "believed"];
    (finite, non_finite, ambiguous)
}

pub fn finite_count(group: &[String]) -> usize {
    let (finite, non_finite, ambiguous) = verb_vocabulary();
    group
        .iter()
        .enumerate()
        .filter(|(i, w)| {
            let w = w.as_str();
            assert!(
                finite.contains(&w) || non_finite.contains(&w) || ambiguous.contains(&w),
                "unexpected verb form {w}"
            );
            finite.contains(&w) || (ambiguous.contains(&w) && *i == 0)
        })
        .count()
}

// Well-formed Representational Level trees with matching coreference.

pub fn arb_rl() -> impl Strategy<Value = RlNode> {
    let lemma = "[a-z]{1,6}";
    let leaf = (
        prop::sample::select(vec![
            Layer::SoAffairs,
            Layer::Property,
            Layer::Individual,
            Layer::Location,
            Layer::Time,
        ]),
        1u32..20,
        prop::option::of(prop::sample::select(vec!["Past", "Pres"])),
        prop::option::of(lemma),
        prop::option::of(prop::sample::select(vec!["Ag", "Pat", "Inst"])),
    )
        .prop_map(|(layer, index, op, lemma, function)| {
            rl_node(layer, index, op, lemma, None, function)
        });
    let nested = leaf.prop_recursive(3, 24, 4, move |inner| {
        (
            prop::sample::select(vec![
                Layer::SoAffairs,
                Layer::Property,
                Layer::Individual,
                Layer::Location,
                Layer::Time,
            ]),
            1u32..20,
            prop::option::of(prop::sample::select(vec!["Past", "Pres"])),
            prop::option::of(lemma),
            prop::collection::vec(inner, 0..4),
            prop::option::of(prop::sample::select(vec!["Ag", "Pat", "Inst"])),
        )
            .prop_map(|(layer, index, op, lemma, children, function)| {
                rl_node(layer, index, op, lemma, Some(children), function)
            })
    });
    (any::<bool>(), nested).prop_map(|(wrap, inner)| {
        if wrap {
            rl_node(Layer::Content, 1, None, None, Some(vec![inner]), None)
        } else {
            inner
        }
    })
}

pub fn rl_node(
    layer: Layer,
    index: u32,
    operator: Option<&str>,
    lemma: Option<String>,
    children: Option<Vec<RlNode>>,
    function: Option<&str>,
) -> RlNode {
    let restrictors = if lemma.is_none() && children.is_none() {
        Vec::new()
    } else {
        vec![Restrictor {
            lemma,
            children,
            ref_index: index,
            ref_span: SourceSpan::default(),
        }]
    };
    RlNode {
        layer,
        index,
        operator: operator.map(String::from),
        restrictors,
        function: function.map(String::from),
        span: SourceSpan::default(),
    }
}
