//! Compilation of a parsed structure into node/property fact triples, and
//! the textual fact dump:
//!
//! ```text
//! node(x1, 0).
//! prop(clause, illocution, decl).
//! prop(x1, tense, past).
//! prop(x1, subnodes, [x2, x3, x4]).
//! prop(x1, lex, 'give').
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::lexicon::Lexicon;
use crate::mapping::MappingConfig;
use crate::notation::{
    Head, Predication, SemanticFunction, SyntacticFunction, Term, PERFECT_TOKEN, PROGRESSIVE_TOKEN,
};
use crate::prolog::{read_clauses, PlTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn parse(s: &str) -> Option<NodeId> {
        let n: u32 = s.strip_prefix('x')?.parse().ok()?;
        (n > 0 && !s[1..].starts_with('0')).then_some(NodeId(n))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Atom(String),
    /// A lexeme, written quoted: `'give'`.
    Lexeme(String),
    List(Vec<String>),
}

impl Value {
    pub fn atom(s: impl Into<String>) -> Value {
        Value::Atom(s.into())
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Value::Atom(s) => Some(s),
            _ => None,
        }
    }

    /// Atom or lexeme text.
    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::Atom(s) | Value::Lexeme(s) => Some(s),
            Value::List(_) => None,
        }
    }

    pub fn as_list(&self) -> Option<&[String]> {
        match self {
            Value::List(items) => Some(items),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(s) => f.write_str(s),
            Value::Lexeme(s) => write!(f, "'{s}'"),
            Value::List(items) => write!(f, "[{}]", items.join(", ")),
        }
    }
}

/// Node records plus per-node and clause-level properties. Properties of a
/// node keep their insertion order, which is the dump order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactBase {
    nodes: Vec<(NodeId, u32)>,
    props: BTreeMap<NodeId, Vec<(String, Value)>>,
    clause: Vec<(String, Value)>,
}

impl FactBase {
    pub fn nodes(&self) -> &[(NodeId, u32)] {
        &self.nodes
    }

    pub fn level(&self, node: NodeId) -> Option<u32> {
        self.nodes.iter().find(|(n, _)| *n == node).map(|(_, l)| *l)
    }

    pub fn props(&self, node: NodeId) -> &[(String, Value)] {
        self.props.get(&node).map_or(&[], Vec::as_slice)
    }

    pub fn clause_props(&self) -> &[(String, Value)] {
        &self.clause
    }

    pub fn clause_prop(&self, key: &str) -> Option<&Value> {
        self.clause.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn root(&self) -> Option<NodeId> {
        self.nodes.first().map(|(n, _)| *n)
    }

    /// Child nodes listed under `subnodes`, or none.
    pub fn subnodes(&self, node: NodeId) -> Vec<NodeId> {
        query(self, node, "subnodes")
            .and_then(Value::as_list)
            .map(|items| items.iter().filter_map(|s| NodeId::parse(s)).collect())
            .unwrap_or_default()
    }

    /// Every record as its textual form without the final period, for
    /// set comparisons.
    pub fn records(&self) -> BTreeSet<String> {
        self.dump()
            .lines()
            .filter(|l| !l.is_empty())
            .map(|l| l.trim_end_matches('.').to_string())
            .collect()
    }

    /// Node records, then clause properties, then each node's properties in
    /// node order; groups are separated by a blank line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (node, level) in &self.nodes {
            out.push_str(&format!("node({node}, {level}).\n"));
        }
        if !self.clause.is_empty() {
            out.push('\n');
            for (key, value) in &self.clause {
                out.push_str(&format!("prop(clause, {key}, {value}).\n"));
            }
        }
        for (node, _) in &self.nodes {
            let props = self.props(*node);
            if props.is_empty() {
                continue;
            }
            out.push('\n');
            for (key, value) in props {
                out.push_str(&format!("prop({node}, {key}, {value}).\n"));
            }
        }
        out
    }

    fn add_node(&mut self, level: u32) -> NodeId {
        let id = NodeId(self.nodes.len() as u32 + 1);
        self.nodes.push((id, level));
        id
    }

    fn set(&mut self, node: NodeId, key: &str, value: Value) {
        self.props
            .entry(node)
            .or_default()
            .push((key.to_string(), value));
    }
}

/// Value stored for `(node, key)`, if any.
pub fn query<'a>(fb: &'a FactBase, node: NodeId, key: &str) -> Option<&'a Value> {
    fb.props
        .get(&node)?
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompileError {
    #[error("no mapping for token '{0}'")]
    UnmappedToken(String),
    #[error("unknown lexeme '{0}'")]
    UnknownLexeme(String),
    #[error("verb '{lemma}' has no {role} in its argument frame")]
    RoleMismatch { lemma: String, role: String },
}

pub fn compile(
    ast: &Predication,
    mapping: &MappingConfig,
    lexicon: &Lexicon,
) -> Result<FactBase, CompileError> {
    let mut compiler = Compiler {
        mapping,
        lexicon,
        fb: FactBase::default(),
    };
    compiler.predication(ast, 0)?;
    compiler.fb.clause = vec![
        ("illocution".into(), Value::atom("decl")),
        ("type".into(), Value::atom("mainclause")),
    ];
    Ok(compiler.fb)
}

struct Compiler<'a> {
    mapping: &'a MappingConfig,
    lexicon: &'a Lexicon,
    fb: FactBase,
}

fn bool_value(b: bool) -> Value {
    Value::atom(if b { "true" } else { "false" })
}

impl Compiler<'_> {
    fn map(&self, token: &str) -> Result<String, CompileError> {
        self.mapping
            .get(token)
            .map(str::to_string)
            .ok_or_else(|| CompileError::UnmappedToken(token.to_string()))
    }

    fn predication(&mut self, pred: &Predication, level: u32) -> Result<NodeId, CompileError> {
        let id = self.fb.add_node(level);
        let mut children = Vec::new();
        let (lex, nav) = match &pred.head {
            Head::Verbal(verb) => {
                let entry = self
                    .lexicon
                    .verbs
                    .get(&verb.form)
                    .ok_or_else(|| CompileError::UnknownLexeme(verb.form.clone()))?;
                for arg in &pred.arguments {
                    let role = self.map(arg.semantic.token())?;
                    if !entry.has_role(&role) {
                        return Err(CompileError::RoleMismatch {
                            lemma: verb.form.clone(),
                            role,
                        });
                    }
                }
                (verb.form.clone(), "V")
            }
            Head::Copular(term) => {
                children.push(self.term(term, level + 1, Value::atom("pred"), None)?);
                (term.head.form.clone(), "N")
            }
        };
        for arg in &pred.arguments {
            let role = Value::Atom(self.map(arg.semantic.token())?);
            children.push(self.term(&arg.term, level + 1, role, arg.syntactic)?);
        }

        let voice = if pred.arguments.iter().any(|a| {
            a.syntactic == Some(SyntacticFunction::Subj) && a.semantic != SemanticFunction::Ag
        }) {
            "passive"
        } else {
            "active"
        };
        let ops = pred.operators;
        let tense = self.map(ops.tense.token())?;
        let perfect_key = self.map(PERFECT_TOKEN)?;
        let progressive_key = self.map(PROGRESSIVE_TOKEN)?;
        self.fb.set(id, "type", Value::atom("pred"));
        self.fb.set(id, "tense", Value::Atom(tense));
        self.fb.set(id, &perfect_key, bool_value(ops.perfect));
        self.fb
            .set(id, &progressive_key, bool_value(ops.progressive));
        self.fb.set(id, "mode", Value::atom("ind"));
        self.fb.set(id, "voice", Value::atom(voice));
        self.fb.set(id, "subnodes", node_list(&children));
        self.fb.set(id, "lex", Value::Lexeme(lex));
        self.fb.set(id, "nav", Value::List(vec![nav.into()]));
        self.fb.set(id, "det", Value::atom("def"));
        Ok(id)
    }

    fn term(
        &mut self,
        term: &Term,
        level: u32,
        role: Value,
        syntactic: Option<SyntacticFunction>,
    ) -> Result<NodeId, CompileError> {
        let id = self.fb.add_node(level);
        let noun = self
            .lexicon
            .nouns
            .get(&term.head.form)
            .ok_or_else(|| CompileError::UnknownLexeme(term.head.form.clone()))?;
        let proper = noun.proper;
        for modifier in &term.modifiers {
            if !self.lexicon.adjectives.contains_key(&modifier.form) {
                return Err(CompileError::UnknownLexeme(modifier.form.clone()));
            }
        }
        let mut children = Vec::new();
        for restrictor in &term.restrictors {
            children.push(self.predication(restrictor, level + 1)?);
        }

        let relation = match syntactic {
            Some(f) => self.map(f.token())?,
            None => "restarg".to_string(),
        };
        let num = match term.number.token() {
            Some(t) => self.map(t)?,
            None => "singular".to_string(),
        };
        let det = match term.determinacy.token() {
            Some(t) => self.map(t)?,
            None => "indef".to_string(),
        };
        self.fb.set(id, "type", Value::atom("term"));
        self.fb.set(id, "role", role);
        self.fb.set(id, "relation", Value::Atom(relation));
        self.fb.set(id, "proper", bool_value(proper));
        self.fb.set(id, "pragmatic", Value::atom("null"));
        self.fb.set(id, "num", Value::Atom(num));
        self.fb.set(
            id,
            "modifs",
            Value::List(term.modifiers.iter().map(|m| m.form.clone()).collect()),
        );
        self.fb
            .set(id, "lex", Value::Lexeme(term.head.form.clone()));
        self.fb.set(id, "nav", Value::List(vec!["N".into()]));
        self.fb.set(id, "det", Value::Atom(det));
        if !children.is_empty() {
            self.fb.set(id, "subnodes", node_list(&children));
        }
        if term.is_bare() {
            self.fb.set(id, "bare", Value::atom("true"));
        }
        Ok(id)
    }
}

fn node_list(nodes: &[NodeId]) -> Value {
    Value::List(nodes.iter().map(NodeId::to_string).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FactParseError {
    pub line: usize,
    pub message: String,
}

/// Reads a fact dump back into a [`FactBase`]. Record order within the text
/// is free; node properties keep the order they appear in.
pub fn parse_facts(text: &str) -> Result<FactBase, FactParseError> {
    let clauses = read_clauses(text).map_err(|e| FactParseError {
        line: e.line,
        message: e.message,
    })?;
    let mut fb = FactBase::default();
    for clause in clauses {
        let err = |message: &str| FactParseError {
            line: clause.line,
            message: message.to_string(),
        };
        let PlTerm::Compound(functor, args) = &clause.term else {
            return Err(err("expected node(...) or prop(...)"));
        };
        match (functor.as_str(), args.as_slice()) {
            ("node", [PlTerm::Atom(id), PlTerm::Int(level)]) => {
                let id = NodeId::parse(id).ok_or_else(|| err("bad node id"))?;
                if fb.nodes.iter().any(|(n, _)| *n == id) {
                    return Err(err("duplicate node"));
                }
                fb.nodes.push((id, *level as u32));
            }
            ("prop", [PlTerm::Atom(owner), PlTerm::Atom(key), value]) => {
                let value = match value {
                    PlTerm::Atom(s) => Value::Atom(s.clone()),
                    PlTerm::Quoted(s) => Value::Lexeme(s.clone()),
                    PlTerm::List(items) => Value::List(
                        items
                            .iter()
                            .map(|item| match item {
                                PlTerm::Atom(s) | PlTerm::Var(s) => Ok(s.clone()),
                                _ => Err(err("list items must be atoms")),
                            })
                            .collect::<Result<_, _>>()?,
                    ),
                    _ => return Err(err("unsupported property value")),
                };
                let slot = if owner == "clause" {
                    &mut fb.clause
                } else {
                    let id = NodeId::parse(owner).ok_or_else(|| err("bad node id"))?;
                    fb.props.entry(id).or_default()
                };
                if slot.iter().any(|(k, _)| k == key) {
                    return Err(err("duplicate property"));
                }
                slot.push((key.clone(), value));
            }
            _ => return Err(err("expected node(Id, Level) or prop(Owner, Key, Value)")),
        }
    }
    fb.nodes.sort();
    if let Some(owner) = fb.props.keys().find(|id| fb.level(**id).is_none()) {
        return Err(FactParseError {
            line: 0,
            message: format!("properties for undeclared node {owner}"),
        });
    }
    Ok(fb)
}
