mod common;

use common::*;
use fgram::fdg::{
    format_rl, parse_rl, rl_tree, validate_rl, FdgError, FormatStyle, Layer, RlNode, TokenSets,
};
use fgram::SourceSpan;
use proptest::prelude::*;

fn sets() -> TokenSets {
    TokenSets::default()
}

fn parse(text: &str) -> Result<RlNode, FdgError> {
    parse_rl(text, &sets())
}

fn trim_lines(text: &str) -> String {
    text.lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn sample_structure_parses_and_validates() {
    let text = golden("knife.rl");
    let node = parse(&text).unwrap();
    assert_eq!(node.layer, Layer::Content);
    assert!(validate_rl(&node).is_empty(), "{:?}", validate_rl(&node));
}

#[test]
fn sample_structure_indented_layout() {
    let text = golden("knife.rl");
    let node = parse(&text).unwrap();
    assert_eq!(
        trim_lines(&format_rl(&node, FormatStyle::INDENTED)),
        trim_lines(&text)
    );
}

#[test]
fn sample_structure_compact_and_subscript() {
    let node = parse(&golden("knife.rl")).unwrap();
    assert_eq!(
        format_rl(&node, FormatStyle::COMPACT),
        "(p1:[(Past e1:[(f1:tek[(x1:im(x1))Ag (x2:naif(x2))Inst](f1)) (f2:kot[(x1:im(x1))Ag (x3:mi(x3))Pat](f2))](e1))](p1))"
    );
    assert!(format_rl(&node, FormatStyle::SUBSCRIPT)
        .starts_with("(p_{1}:[(Past e_{1}:[(f_{1}:tek[(x_{1}:im(x_{1}))Ag"));
}

#[test]
fn sample_structure_tree_shape() {
    let node = parse(&golden("knife.rl")).unwrap();
    let tree = rl_tree(&node);
    let rules: Vec<(usize, &str)> = tree
        .lines()
        .map(|l| {
            let depth = (l.len() - l.trim_start().len()) / 2;
            (depth, l.trim_start())
        })
        .filter(|(_, t)| !t.contains(' '))
        .collect();
    let expected = [
        (0, "content"),
        (1, "head"),
        (2, "soaffairs"),
        (3, "head"),
        (4, "property"),
        (5, "head"),
        (6, "individual"),
        (7, "head"),
        (6, "individual"),
        (7, "head"),
        (4, "property"),
        (5, "head"),
        (6, "individual"),
        (7, "head"),
        (6, "individual"),
        (7, "head"),
    ];
    assert_eq!(rules, expected);
    assert!(tree.contains(&format!("\n{}OPERATOR Past\n", "  ".repeat(3))));
    assert!(tree.contains(&format!("\n{}LEMMA tek\n", "  ".repeat(6))));
    assert!(tree.contains(&format!("\n{}FUNCTION Inst\n", "  ".repeat(7))));
    for punct in ['(', ')', '[', ']', ':'] {
        assert!(!tree.contains(punct));
    }
}

#[test]
fn unknown_function_reports_token_and_position() {
    let text = "(p1:[(e1:[(x1:im(x1))Foo](e1))](p1))";
    match parse(text) {
        Err(FdgError::UnknownFunction { token, span }) => {
            assert_eq!(token, "Foo");
            assert_eq!(span.column, text.find("Foo").unwrap() + 1);
        }
        other => panic!("{other:?}"),
    }
}

// Grammar fidelity: every sentence derivable with one-token alphabets
// parses; every single-character corruption of it does not.

fn sentences(depth: u32, top: bool) -> Vec<String> {
    let layers: &[char] = if top {
        &['p', 'e', 'x']
    } else {
        &['e', 'f', 'x', 'l', 't']
    };
    let inner: Vec<String> = if depth == 0 {
        Vec::new()
    } else {
        sample(sentences(depth - 1, false), 6)
    };
    let mut heads = vec![String::new(), "a".to_string()];
    for bracket in bracket_contents(&inner) {
        heads.push(format!("[{bracket}]"));
        heads.push(format!("a[{bracket}]"));
    }
    let mut out = Vec::new();
    for &layer in layers {
        for op in ["", "Past "] {
            for function in ["", "Ag"] {
                out.push(format!("({op}{layer}1){function}"));
                for head in &heads {
                    out.push(format!("({op}{layer}1:{head}({layer}1)){function}"));
                }
            }
            if let Some(h) = heads.last() {
                out.push(format!("({op}{layer}1:{h}({layer}1):a({layer}1))"));
            }
        }
    }
    out
}

fn bracket_contents(inner: &[String]) -> Vec<String> {
    let mut out = vec![String::new()];
    out.extend(inner.iter().cloned());
    if inner.len() >= 2 {
        out.push(format!("{} {}", inner[0], inner[inner.len() - 1]));
    }
    out
}

fn sample(mut items: Vec<String>, keep: usize) -> Vec<String> {
    if items.len() <= keep {
        return items;
    }
    let step = items.len() / keep;
    items = items.into_iter().step_by(step.max(1)).collect();
    items.truncate(keep);
    items
}

#[test]
fn derivable_sentences_parse() {
    let all = sentences(3, true);
    assert!(all.len() > 100);
    for s in &all {
        let node = parse(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        assert!(validate_rl(&node).iter().all(|d| !d.is_error()), "{s}");
    }
}

#[test]
fn corrupted_sentences_are_rejected() {
    for s in sample(sentences(2, true), 60) {
        for (i, c) in s.char_indices() {
            if "()[]:1".contains(c) {
                let mut m = s.clone();
                m.remove(i);
                assert!(parse(&m).is_err(), "deleting {c:?} at {i}: {m}");
            }
        }
        for i in 0..=s.len() {
            for junk in ["%", "Zz"] {
                let mut m = s.clone();
                m.insert_str(i, junk);
                assert!(parse(&m).is_err(), "inserting {junk:?} at {i}: {m}");
            }
        }
    }
}

#[test]
fn nested_content_rejected() {
    assert!(parse("(e1:[(p1)](e1))").is_err());
}

// Coreference: every restrictor reference, shifted by one, yields exactly
// one mismatch at that reference.

fn collect_refs(node: &RlNode, out: &mut Vec<SourceSpan>) {
    for r in &node.restrictors {
        out.push(r.ref_span);
        for child in r.children.iter().flatten() {
            collect_refs(child, out);
        }
    }
}

#[test]
fn each_perturbed_reference_is_caught_once() {
    let text = golden("knife.rl");
    let mut refs = Vec::new();
    collect_refs(&parse(&text).unwrap(), &mut refs);
    assert_eq!(refs.len(), 8);
    for span in refs {
        let original = &text[span.offset..span.offset + span.length];
        let digits: String = original.chars().filter(char::is_ascii_digit).collect();
        let bumped = original.replace(&digits, &(digits.parse::<u32>().unwrap() + 1).to_string());
        let mutated = format!(
            "{}{}{}",
            &text[..span.offset],
            bumped,
            &text[span.offset + span.length..]
        );
        let diags = validate_rl(&parse(&mutated).unwrap());
        let errors: Vec<_> = diags.iter().filter(|d| d.is_error()).collect();
        assert_eq!(errors.len(), 1, "{mutated}");
        assert_eq!(errors[0].code, "CorefMismatch");
        assert_eq!(errors[0].span.line, span.line);
        assert_eq!(errors[0].span.column, span.column);
    }
}

// Round trips through every layout.

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn format_round_trips_in_every_style(tree in arb_rl()) {
        for style in FormatStyle::ALL {
            let text = format_rl(&tree, style);
            let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
            prop_assert_eq!(&back, &tree);
            prop_assert_eq!(format_rl(&back, style), text);
        }
    }

    #[test]
    fn generated_structures_validate_clean(tree in arb_rl()) {
        prop_assert!(validate_rl(&tree).iter().all(|d| !d.is_error()));
    }
}
