//! Reader for the small Prolog fact syntax used by lexicon files and fact
//! dumps: `name(arg, ...).` clauses whose arguments are atoms, quoted atoms,
//! variables, integers, lists or nested compounds. `%` starts a comment.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlTerm {
    Atom(String),
    Quoted(String),
    Var(String),
    Int(u64),
    List(Vec<PlTerm>),
    Compound(String, Vec<PlTerm>),
}

impl PlTerm {
    /// Atom or quoted-atom text.
    pub fn as_name(&self) -> Option<&str> {
        match self {
            PlTerm::Atom(s) | PlTerm::Quoted(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[PlTerm]> {
        match self {
            PlTerm::List(items) => Some(items),
            _ => None,
        }
    }
}

impl fmt::Display for PlTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlTerm::Atom(s) | PlTerm::Var(s) => f.write_str(s),
            PlTerm::Quoted(s) => write!(f, "'{s}'"),
            PlTerm::Int(n) => write!(f, "{n}"),
            PlTerm::List(items) => {
                f.write_str("[")?;
                write_args(f, items)?;
                f.write_str("]")
            }
            PlTerm::Compound(name, args) => {
                write!(f, "{name}(")?;
                write_args(f, args)?;
                f.write_str(")")
            }
        }
    }
}

fn write_args(f: &mut fmt::Formatter<'_>, items: &[PlTerm]) -> fmt::Result {
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

/// One `term.` clause and the line it starts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub line: usize,
    pub term: PlTerm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlError {
    pub line: usize,
    pub message: String,
}

pub fn read_clauses(text: &str) -> Result<Vec<Clause>, PlError> {
    let mut reader = Reader {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
    };
    let mut clauses = Vec::new();
    loop {
        reader.skip_layout();
        if reader.at_end() {
            return Ok(clauses);
        }
        let line = reader.line;
        let term = reader.term()?;
        reader.skip_layout();
        if reader.peek() != Some('.') {
            return Err(PlError {
                line,
                message: "expected '.' after clause".into(),
            });
        }
        reader.bump();
        clauses.push(Clause { line, term });
    }
}

struct Reader {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Reader {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn error(&self, message: &str) -> PlError {
        PlError {
            line: self.line,
            message: message.to_string(),
        }
    }

    fn skip_layout(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' {
                while !matches!(self.peek(), None | Some('\n')) {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn word(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_alphanumeric() || *c == '_') {
            s.push(c);
            self.bump();
        }
        s
    }

    fn term(&mut self) -> Result<PlTerm, PlError> {
        self.skip_layout();
        match self.peek() {
            Some('[') => {
                self.bump();
                let items = self.sequence(']')?;
                Ok(PlTerm::List(items))
            }
            Some('\'') => {
                self.bump();
                let mut s = String::new();
                loop {
                    match self.bump() {
                        Some('\'') => break,
                        Some('\n') | None => return Err(self.error("unterminated quoted atom")),
                        Some(c) => s.push(c),
                    }
                }
                Ok(PlTerm::Quoted(s))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.word();
                digits
                    .parse()
                    .map(PlTerm::Int)
                    .map_err(|_| self.error("malformed integer"))
            }
            Some(c) if c.is_uppercase() || c == '_' => Ok(PlTerm::Var(self.word())),
            Some(c) if c.is_lowercase() => {
                let name = self.word();
                if self.peek() == Some('(') {
                    self.bump();
                    let args = self.sequence(')')?;
                    if args.is_empty() {
                        return Err(self.error("compound term without arguments"));
                    }
                    Ok(PlTerm::Compound(name, args))
                } else {
                    Ok(PlTerm::Atom(name))
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    /// Comma-separated terms up to `close`; the opening bracket is consumed.
    fn sequence(&mut self, close: char) -> Result<Vec<PlTerm>, PlError> {
        let mut items = Vec::new();
        self.skip_layout();
        if self.peek() == Some(close) {
            self.bump();
            return Ok(items);
        }
        loop {
            items.push(self.term()?);
            self.skip_layout();
            match self.bump() {
                Some(',') => continue,
                Some(c) if c == close => return Ok(items),
                _ => return Err(self.error(&format!("expected ',' or '{close}'"))),
            }
        }
    }
}
