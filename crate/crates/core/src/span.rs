use std::fmt;

/// A region of the input text. `offset` is the 0-based character offset of
/// the first character; `line` and `column` are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SourceSpan {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    pub fn new(offset: usize, line: usize, column: usize, length: usize) -> Self {
        SourceSpan {
            offset,
            line,
            column,
            length: length.max(1),
        }
    }

    /// Span covering `self` through the end of `other`, assuming both are on
    /// the same logical stream and `other` starts after `self`.
    pub fn to(self, other: SourceSpan) -> SourceSpan {
        let end = other.offset + other.length;
        SourceSpan {
            length: end.saturating_sub(self.offset).max(1),
            ..self
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

/// Character cursor that tracks line and column while scanning.
#[derive(Debug, Clone)]
pub(crate) struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pub offset: usize,
    pub line: usize,
    pub column: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            offset: 0,
            line: 1,
            column: 1,
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        self.offset += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    pub fn span_from(&self, start: (usize, usize, usize)) -> SourceSpan {
        SourceSpan::new(start.0, start.1, start.2, self.offset - start.0)
    }

    pub fn mark(&self) -> (usize, usize, usize) {
        (self.offset, self.line, self.column)
    }

    pub fn here(&self) -> SourceSpan {
        SourceSpan::new(self.offset, self.line, self.column, 1)
    }
}

/// Span of the last character of `text`, used for end-of-input errors so
/// that reported positions always lie inside the input.
pub(crate) fn end_span(text: &str) -> SourceSpan {
    let mut cursor = Cursor::new(text);
    let mut last = SourceSpan::new(0, 1, 1, 1);
    while cursor.peek().is_some() {
        let here = cursor.here();
        let c = cursor.bump();
        if !matches!(c, Some(c) if c.is_whitespace()) {
            last = here;
        }
    }
    last
}
