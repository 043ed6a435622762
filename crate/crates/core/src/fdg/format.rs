use std::fmt::Write;

use super::{Layer, RlNode};

/// Layout and index rendering for [`format_rl`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FormatStyle {
    /// One bracketed child per line, four spaces per nesting level.
    pub indented: bool,
    /// Indices as `x_{1}` instead of `x1`.
    pub subscript: bool,
}

impl FormatStyle {
    pub const COMPACT: FormatStyle = FormatStyle {
        indented: false,
        subscript: false,
    };
    pub const INDENTED: FormatStyle = FormatStyle {
        indented: true,
        subscript: false,
    };
    pub const SUBSCRIPT: FormatStyle = FormatStyle {
        indented: false,
        subscript: true,
    };
    pub const SUBSCRIPT_INDENTED: FormatStyle = FormatStyle {
        indented: true,
        subscript: true,
    };

    pub const ALL: [FormatStyle; 4] = [
        FormatStyle::COMPACT,
        FormatStyle::INDENTED,
        FormatStyle::SUBSCRIPT,
        FormatStyle::SUBSCRIPT_INDENTED,
    ];

    pub fn from_name(name: &str) -> Option<FormatStyle> {
        match name {
            "compact" => Some(FormatStyle::COMPACT),
            "indented" => Some(FormatStyle::INDENTED),
            "subscript" => Some(FormatStyle::SUBSCRIPT),
            "subscript-indented" => Some(FormatStyle::SUBSCRIPT_INDENTED),
            _ => None,
        }
    }
}

pub fn format_rl(node: &RlNode, style: FormatStyle) -> String {
    let mut out = String::new();
    write_node(&mut out, node, style, 0);
    out
}

fn write_index(out: &mut String, layer: Layer, index: u32, style: FormatStyle) {
    if style.subscript {
        write!(out, "{layer}_{{{index}}}").unwrap();
    } else {
        write!(out, "{layer}{index}").unwrap();
    }
}

fn write_node(out: &mut String, node: &RlNode, style: FormatStyle, depth: usize) {
    out.push('(');
    if let Some(op) = &node.operator {
        out.push_str(op);
        out.push(' ');
    }
    write_index(out, node.layer, node.index, style);
    for restrictor in &node.restrictors {
        out.push(':');
        if let Some(lemma) = &restrictor.lemma {
            out.push_str(lemma);
        }
        if let Some(children) = &restrictor.children {
            out.push('[');
            if style.indented && !children.is_empty() {
                let pad = "    ".repeat(depth + 1);
                for child in children {
                    out.push('\n');
                    out.push_str(&pad);
                    write_node(out, child, style, depth + 1);
                }
                out.push('\n');
                out.push_str(&"    ".repeat(depth));
            } else {
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    write_node(out, child, style, depth + 1);
                }
            }
            out.push(']');
        }
        out.push('(');
        write_index(out, node.layer, restrictor.ref_index, style);
        out.push(')');
    }
    out.push(')');
    if let Some(function) = &node.function {
        out.push_str(function);
    }
}
