//! The `fgram` command line: an interactive prompt, batch realization and
//! fact dumps, and the FDG Representational Level tools.
//!
//! Exit codes: 0 success, 1 semantic or validation failure, 2 syntax
//! failure, 3 configuration failure.

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::facts::{compile, CompileError, FactBase};
use crate::fdg::{format_rl, parse_rl, rl_tree, validate_rl, FormatStyle, TokenSets};
use crate::lexicon::{load_lexicon, Lexicon};
use crate::mapping::{load_mapping, MappingConfig, PrepositionMap};
use crate::notation::{parse_structure, NotationError};
use crate::realizer::{realize_with, RealizeError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC: i32 = 1;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

pub const PROMPT: &str = ">> ";

#[derive(Debug, Parser)]
#[command(
    name = "fgram",
    version,
    about = "Generate English sentences from Functional Grammar structures"
)]
struct Args {
    /// Lexicon fact file (defaults to the bundled seed lexicon).
    #[arg(long, global = true, env = "FGR_LEXICON", value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Token-to-fact-value mapping (key=value).
    #[arg(long, global = true, value_name = "PATH")]
    mapping: Option<PathBuf>,
    /// Role-to-preposition table (key=value).
    #[arg(long, global = true, value_name = "PATH")]
    prepositions: Option<PathBuf>,
    /// FDG function and operator token sets.
    #[arg(long = "token-sets", global = true, value_name = "PATH")]
    token_sets: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Read structures at a `>>` prompt and print the realized sentences.
    Repl,
    /// Realize every blank-line-separated structure in a file.
    Realize { input: PathBuf },
    /// Dump the compiled facts of every structure in a file.
    Facts { input: PathBuf },
    /// Validate an FDG Representational Level structure.
    FdgValidate { input: PathBuf },
    /// Typeset an FDG Representational Level structure.
    FdgFormat {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Style::Compact)]
        style: Style,
        /// Combine subscript markup with the indented layout.
        #[arg(long)]
        indent: bool,
    },
    /// Print the parse tree of an FDG Representational Level structure.
    FdgTree { input: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    Compact,
    Indented,
    Subscript,
}

/// Loaded configuration shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Engine {
    pub lexicon: Lexicon,
    pub mapping: MappingConfig,
    pub prepositions: PrepositionMap,
    pub token_sets: TokenSets,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            lexicon: Lexicon::seed(),
            mapping: MappingConfig::seed(),
            prepositions: PrepositionMap::default(),
            token_sets: TokenSets::default(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error(transparent)]
    Notation(#[from] NotationError),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Notation(_) => EXIT_SYNTAX,
            _ => EXIT_SEMANTIC,
        }
    }
}

impl Engine {
    pub fn compile(&self, text: &str) -> Result<FactBase, PipelineError> {
        let ast = parse_structure(text)?;
        Ok(compile(&ast, &self.mapping, &self.lexicon)?)
    }

    pub fn realize(&self, text: &str) -> Result<String, PipelineError> {
        let fb = self.compile(text)?;
        Ok(realize_with(&fb, &self.lexicon, &self.prepositions)?)
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn load_engine(args: &Args) -> Result<Engine, String> {
    let mut engine = Engine::default();
    if let Some(path) = &args.lexicon {
        engine.lexicon =
            load_lexicon(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = &args.mapping {
        engine.mapping =
            load_mapping(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = &args.prepositions {
        engine.prepositions =
            PrepositionMap::load(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if let Some(path) = &args.token_sets {
        engine.token_sets =
            TokenSets::load(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(engine)
}

pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let engine = match load_engine(&args) {
        Ok(engine) => engine,
        Err(message) => {
            let _ = writeln!(err, "fgram: {message}");
            return EXIT_CONFIG;
        }
    };
    let result = match args.command.unwrap_or(Command::Repl) {
        Command::Repl => repl(&engine, input, out, err),
        Command::Realize { input } => run_batch(&engine, &input, BatchMode::Realize, out, err),
        Command::Facts { input } => run_batch(&engine, &input, BatchMode::Facts, out, err),
        Command::FdgValidate { input } => fdg_command(&engine, &input, FdgMode::Validate, out, err),
        Command::FdgFormat {
            input,
            style,
            indent,
        } => {
            let style = match style {
                Style::Compact if indent => FormatStyle::INDENTED,
                Style::Compact => FormatStyle::COMPACT,
                Style::Indented => FormatStyle::INDENTED,
                Style::Subscript if indent => FormatStyle::SUBSCRIPT_INDENTED,
                Style::Subscript => FormatStyle::SUBSCRIPT,
            };
            fdg_command(&engine, &input, FdgMode::Format(style), out, err)
        }
        Command::FdgTree { input } => fdg_command(&engine, &input, FdgMode::Tree, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "fgram: {e}");
            EXIT_CONFIG
        }
    }
}

/// Net parenthesis depth of `line`, ignoring quoted lexemes.
fn paren_balance(line: &str) -> i64 {
    let mut depth = 0;
    let mut quoted = false;
    for c in line.chars() {
        match c {
            '\'' => quoted = !quoted,
            '(' if !quoted => depth += 1,
            ')' if !quoted => depth -= 1,
            _ => {}
        }
    }
    depth
}

/// Interactive loop. A structure may span several lines; it is submitted
/// once its parentheses balance. Runs until end of input.
pub fn repl(
    engine: &Engine,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut buffer = String::new();
    let mut depth = 0i64;
    write!(out, "{PROMPT}")?;
    out.flush()?;
    let mut line = String::new();
    loop {
        line.clear();
        if input.read_line(&mut line)? == 0 {
            break;
        }
        if buffer.is_empty() && line.trim().is_empty() {
            write!(out, "{PROMPT}")?;
            out.flush()?;
            continue;
        }
        buffer.push_str(&line);
        depth += paren_balance(&line);
        if depth > 0 {
            continue;
        }
        submit(engine, &buffer, out, err)?;
        buffer.clear();
        depth = 0;
        write!(out, "{PROMPT}")?;
        out.flush()?;
    }
    if !buffer.trim().is_empty() {
        submit(engine, &buffer, out, err)?;
    }
    writeln!(out)?;
    Ok(EXIT_OK)
}

fn submit(
    engine: &Engine,
    text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<()> {
    match engine.realize(text) {
        Ok(sentence) => writeln!(out, "{sentence}"),
        Err(e) => writeln!(err, "error: {e}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BatchMode {
    Realize,
    Facts,
}

/// Splits text into blocks separated by blank lines.
pub fn blocks(text: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    blocks
}

/// Processes every block of `path`; exits 0 only if all blocks succeed,
/// otherwise 1 with one error line per failing block.
pub fn run_batch(
    engine: &Engine,
    path: &Path,
    mode: BatchMode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let text = match read(path) {
        Ok(text) => text,
        Err(message) => {
            writeln!(err, "fgram: {message}")?;
            return Ok(EXIT_CONFIG);
        }
    };
    let mut failed = false;
    let mut first_dump = true;
    for (i, block) in blocks(&text).iter().enumerate() {
        let result = match mode {
            BatchMode::Realize => engine.realize(block).map(|s| format!("{s}\n")),
            BatchMode::Facts => engine.compile(block).map(|fb| fb.dump()),
        };
        match result {
            Ok(text) => {
                if mode == BatchMode::Facts && !std::mem::take(&mut first_dump) {
                    writeln!(out)?;
                }
                out.write_all(text.as_bytes())?;
            }
            Err(e) => {
                failed = true;
                writeln!(err, "block {}: {e}", i + 1)?;
            }
        }
    }
    Ok(if failed { EXIT_SEMANTIC } else { EXIT_OK })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FdgMode {
    Validate,
    Format(FormatStyle),
    Tree,
}

pub fn fdg_command(
    engine: &Engine,
    path: &Path,
    mode: FdgMode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let text = match read(path) {
        Ok(text) => text,
        Err(message) => {
            writeln!(err, "fgram: {message}")?;
            return Ok(EXIT_CONFIG);
        }
    };
    let node = match parse_rl(&text, &engine.token_sets) {
        Ok(node) => node,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_SYNTAX);
        }
    };
    match mode {
        FdgMode::Validate => {
            let diagnostics = validate_rl(&node);
            for d in &diagnostics {
                writeln!(err, "{d}")?;
            }
            Ok(if diagnostics.iter().any(|d| d.is_error()) {
                EXIT_SEMANTIC
            } else {
                EXIT_OK
            })
        }
        FdgMode::Format(style) => {
            writeln!(out, "{}", format_rl(&node, style))?;
            Ok(EXIT_OK)
        }
        FdgMode::Tree => {
            out.write_all(rl_tree(&node).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}
