mod common;

use std::collections::BTreeSet;

use common::*;
use fgram::facts::{parse_facts, CompileError};
use fgram::mapping::REQUIRED_KEYS;
use fgram::notation::parse_structure;
use fgram::{compile, query, FactBase, Lexicon, MappingConfig, NodeId, Value};
use proptest::prelude::*;

fn compile_text(text: &str) -> FactBase {
    compile(
        &parse_structure(text).unwrap(),
        &MappingConfig::seed(),
        &Lexicon::seed(),
    )
    .unwrap()
}

/// Records written in a two-column layout, one per `).`.
fn layout_records(text: &str) -> BTreeSet<String> {
    text.split(").")
        .map(|r| r.trim())
        .filter(|r| !r.is_empty())
        .map(|r| format!("{r})"))
        .collect()
}

#[test]
fn reference_dump_record_set() {
    let fb = compile_text(&golden("old_farmers.fg"));
    let expected = layout_records(&golden("old_farmers_records.txt"));
    // 4 node records, 2 clause props, 10 props on x1 and 30 on x2-x4
    assert_eq!(expected.len(), 46);
    assert_eq!(fb.records(), expected);
    assert_eq!(fb.nodes().len(), 4);
    assert_eq!(fb.clause_props().len(), 2);
    assert_eq!(fb.props(NodeId(1)).len(), 10);
    let term_props: usize = (2..=4).map(|n| fb.props(NodeId(n)).len()).sum();
    assert_eq!(term_props, 30);
}

#[test]
fn reference_dump_dump_is_byte_exact() {
    let fb = compile_text(&golden("old_farmers.fg"));
    assert_eq!(fb.dump(), golden("old_farmers.facts"));
}

#[test]
fn reference_dump_parses_back() {
    let parsed = parse_facts(&golden("old_farmers_records.txt")).unwrap();
    let fb = compile_text(&golden("old_farmers.fg"));
    assert_eq!(parsed.records(), fb.records());
}

#[test]
fn queries_on_reference_dump() {
    let fb = parse_facts(&golden("old_farmers.facts")).unwrap();
    assert_eq!(query(&fb, NodeId(2), "num"), Some(&Value::atom("plural")));
    assert_eq!(query(&fb, NodeId(2), "nonexistent"), None);
    assert_eq!(
        query(&fb, NodeId(1), "subnodes"),
        Some(&Value::List(vec!["x2".into(), "x3".into(), "x4".into()]))
    );
}

#[test]
fn bare_terms_compile_to_indef_singular() {
    let fb = compile_text("(e:'love'[V]:(x:'man'[N])AgSubj (x:'woman'[N])GoObj)");
    for node in [NodeId(2), NodeId(3)] {
        assert_eq!(query(&fb, node, "num"), Some(&Value::atom("singular")));
        assert_eq!(query(&fb, node, "det"), Some(&Value::atom("indef")));
    }
    assert_eq!(query(&fb, NodeId(1), "voice"), Some(&Value::atom("active")));
    assert_eq!(query(&fb, NodeId(1), "tense"), Some(&Value::atom("pres")));
}

#[test]
fn every_role_is_checked_against_the_frame() {
    let lex = Lexicon::seed();
    let love = lex.verbs.get("love").unwrap();
    for (token, role) in [
        ("Ag", "agent"),
        ("Go", "goal"),
        ("Rec", "recipient"),
        ("0", "zero"),
    ] {
        let text = format!("(e:'love'[V]:(x:'man'[N])AgSubj (x:'woman'[N]){token})");
        let result = compile(
            &parse_structure(&text).unwrap(),
            &MappingConfig::seed(),
            &lex,
        );
        if love.has_role(role) {
            assert!(result.is_ok(), "{token}");
        } else {
            assert_eq!(
                result.unwrap_err(),
                CompileError::RoleMismatch {
                    lemma: "love".into(),
                    role: role.into()
                }
            );
        }
    }
}

const FIXED_DEFAULTS: [&str; 13] = [
    "pred",
    "term",
    "ind",
    "active",
    "passive",
    "decl",
    "mainclause",
    "null",
    "restarg",
    "true",
    "false",
    "singular",
    "indef",
];

fn atom_values(fb: &FactBase) -> Vec<String> {
    let mut values: Vec<String> = fb
        .clause_props()
        .iter()
        .filter_map(|(_, v)| v.as_atom().map(String::from))
        .collect();
    for (node, _) in fb.nodes() {
        for (key, value) in fb.props(*node) {
            if key == "lex" || key == "modifs" || key == "subnodes" || key == "nav" {
                continue;
            }
            values.push(value.as_atom().expect("atomic property").to_string());
        }
    }
    values
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn emitted_values_are_mapped_or_fixed(ast in arb_realizable()) {
        let mapping = MappingConfig::seed();
        let fb = compile(&ast, &mapping, &Lexicon::seed()).unwrap();
        let mapped: BTreeSet<&str> = mapping.entries().map(|(_, v)| v).collect();
        let tokens: BTreeSet<&str> = REQUIRED_KEYS.into_iter().collect();
        for value in atom_values(&fb) {
            prop_assert!(
                mapped.contains(value.as_str()) || FIXED_DEFAULTS.contains(&value.as_str()),
                "raw value {}", value
            );
            prop_assert!(!tokens.contains(value.as_str()) || mapped.contains(value.as_str()));
        }
    }

    #[test]
    fn subnodes_close_over_the_node_set(ast in arb_realizable()) {
        let fb = compile(&ast, &MappingConfig::seed(), &Lexicon::seed()).unwrap();
        let mut reached = vec![fb.root().unwrap()];
        for (node, level) in fb.nodes() {
            for child in fb.subnodes(*node) {
                prop_assert_eq!(fb.level(child), Some(level + 1));
                reached.push(child);
            }
        }
        reached.sort();
        let all: Vec<NodeId> = fb.nodes().iter().map(|(n, _)| *n).collect();
        prop_assert_eq!(reached, all.clone());
        prop_assert_eq!(fb.level(NodeId(1)), Some(0));
        // pre-order numbering: ids are dense and every child follows its parent
        for (i, node) in all.iter().enumerate() {
            prop_assert_eq!(node.0 as usize, i + 1);
            for child in fb.subnodes(*node) {
                prop_assert!(child > *node);
            }
        }
    }

    #[test]
    fn voice_rule(ast in arb_realizable()) {
        let fb = compile(&ast, &MappingConfig::seed(), &Lexicon::seed()).unwrap();
        for (node, _) in fb.nodes() {
            if query(&fb, *node, "type") != Some(&Value::atom("pred")) {
                continue;
            }
            let non_agent_subject = fb.subnodes(*node).into_iter().any(|c| {
                query(&fb, c, "relation") == Some(&Value::atom("subject"))
                    && query(&fb, c, "role") != Some(&Value::atom("agent"))
            });
            let expected = if non_agent_subject { "passive" } else { "active" };
            prop_assert_eq!(query(&fb, *node, "voice"), Some(&Value::atom(expected)));
        }
    }

    #[test]
    fn dump_round_trips(ast in arb_realizable()) {
        let fb = compile(&ast, &MappingConfig::seed(), &Lexicon::seed()).unwrap();
        prop_assert_eq!(parse_facts(&fb.dump()).unwrap(), fb);
    }
}

#[test]
fn seed_mapping_never_leaves_tokens_unmapped() {
    // every token the parser can produce is a required key, and the seed
    // config carries all of them
    let mapping = MappingConfig::seed();
    for key in REQUIRED_KEYS {
        assert!(mapping.get(key).is_some());
    }
}
