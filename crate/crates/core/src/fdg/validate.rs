use std::collections::HashMap;
use std::fmt;

use crate::span::SourceSpan;

use super::RlNode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
    pub span: SourceSpan,
}

impl Diagnostic {
    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(
            f,
            "{severity}[{}] {}: {}",
            self.code, self.span, self.message
        )
    }
}

/// Checks beyond the grammar: every `(x1)` reference must repeat its node's
/// own layer and index, and sibling nodes sharing a layer and index must
/// share a head. An empty list means the structure is valid.
pub fn validate_rl(node: &RlNode) -> Vec<Diagnostic> {
    let mut diagnostics = Vec::new();
    check(node, &mut diagnostics);
    diagnostics
}

fn check(node: &RlNode, out: &mut Vec<Diagnostic>) {
    let own = format!("{}{}", node.layer, node.index);
    for restrictor in &node.restrictors {
        if restrictor.ref_index != node.index {
            out.push(Diagnostic {
                severity: Severity::Error,
                code: "CorefMismatch",
                message: format!(
                    "reference ({}{}) does not match node {own}",
                    node.layer, restrictor.ref_index
                ),
                span: restrictor.ref_span,
            });
        }
        let Some(children) = &restrictor.children else {
            continue;
        };
        let mut seen: HashMap<(char, u32), &RlNode> = HashMap::new();
        for child in children {
            let key = (child.layer.letter(), child.index);
            match seen.get(&key) {
                Some(first) if first.head() != child.head() => out.push(Diagnostic {
                    severity: Severity::Warning,
                    code: "DuplicateDefinition",
                    message: format!(
                        "{}{} is defined again with a different head ({} vs {})",
                        child.layer,
                        child.index,
                        first.head().unwrap_or("none"),
                        child.head().unwrap_or("none")
                    ),
                    span: child.span,
                }),
                Some(_) => {}
                None => {
                    seen.insert(key, child);
                }
            }
            check(child, out);
        }
    }
}
