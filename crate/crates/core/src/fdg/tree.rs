use super::RlNode;

/// Text rendering of the derivation tree: one node per line, two spaces of
/// indentation per level. Rule nodes print the rule name; token leaves print
/// the token kind and text (`OPERATOR Past`, `LAYER e`, `X 1`, `LEMMA tek`,
/// `FUNCTION Ag`). Punctuation is omitted.
pub fn rl_tree(node: &RlNode) -> String {
    let mut out = String::new();
    write_rule(&mut out, node, 0);
    out
}

fn line(out: &mut String, depth: usize, text: &str) {
    out.push_str(&"  ".repeat(depth));
    out.push_str(text);
    out.push('\n');
}

fn write_rule(out: &mut String, node: &RlNode, depth: usize) {
    line(out, depth, node.layer.rule());
    let inner = depth + 1;
    if let Some(op) = &node.operator {
        line(out, inner, &format!("OPERATOR {op}"));
    }
    line(out, inner, &format!("LAYER {}", node.layer));
    line(out, inner, &format!("X {}", node.index));
    for restrictor in &node.restrictors {
        line(out, inner, "head");
        if let Some(lemma) = &restrictor.lemma {
            line(out, inner + 1, &format!("LEMMA {lemma}"));
        }
        for child in restrictor.children.iter().flatten() {
            write_rule(out, child, inner + 1);
        }
        line(out, inner, &format!("LAYER {}", node.layer));
        line(out, inner, &format!("X {}", restrictor.ref_index));
    }
    if let Some(function) = &node.function {
        line(out, inner, &format!("FUNCTION {function}"));
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_rl, TokenSets};
    use super::*;

    #[test]
    fn smallest_tree() {
        let node = parse_rl("(x1)", &TokenSets::default()).unwrap();
        assert_eq!(rl_tree(&node), "individual\n  LAYER x\n  X 1\n");
    }

    #[test]
    fn operator_is_first_token_of_soaffairs() {
        let node = parse_rl("(Past e1:[(x1:im(x1))Ag](e1))", &TokenSets::default()).unwrap();
        let tree = rl_tree(&node);
        let mut lines = tree.lines();
        assert_eq!(lines.next(), Some("soaffairs"));
        assert_eq!(lines.next(), Some("  OPERATOR Past"));
        assert!(tree.contains(
            "\n    individual\n      LAYER x\n      X 1\n      head\n        LEMMA im\n"
        ));
        assert!(tree.ends_with("  LAYER e\n  X 1\n"));
    }
}
