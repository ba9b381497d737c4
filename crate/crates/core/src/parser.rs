//! Text formats: atoms, problem files, atom lists, and team CSV.
//!
//! Atom grammar:
//!
//! ```text
//! atom  := "dep(" vars "," vars ")" | "ind(" vars "," vars ")"
//!        | "abs(" vars ")"         | "cind(" vars "," vars "," vars ")"
//! vars  := "()" | ident+
//! ident := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `cind(x, z, y)` is x independent of y given z. A problem file lists
//! premises one per line and ends with a single `|- <atom>` query line; `#`
//! starts a comment.

use std::fmt::Write as _;

use crate::atom::{Atom, AtomKind, Problem};
use crate::error::{Error, Result};
use crate::team::Team;
use crate::vars::{VarSet, Vocab};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Open,
    Close,
    Comma,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col_base: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize, col_base: usize) -> Self {
        Lexer {
            src,
            pos: 0,
            line,
            col_base,
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.col_base + self.src[..at].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    /// Next token with its starting byte offset.
    fn next(&mut self) -> Result<Option<(usize, Tok<'a>)>> {
        self.skip_ws();
        let start = self.pos;
        let Some(c) = self.src[start..].chars().next() else {
            return Ok(None);
        };
        let tok = match c {
            '(' => Tok::Open,
            ')' => Tok::Close,
            ',' => Tok::Comma,
            c if c.is_ascii_alphabetic() || c == '_' => {
                let len = self.src[start..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.src.len() - start);
                self.pos += len;
                return Ok(Some((start, Tok::Ident(&self.src[start..start + len]))));
            }
            other => return Err(self.error(start, format!("unexpected character `{other}`"))),
        };
        self.pos += 1;
        Ok(Some((start, tok)))
    }

    fn peek(&mut self) -> Result<Option<(usize, Tok<'a>)>> {
        let save = self.pos;
        let tok = self.next();
        self.pos = save;
        tok
    }

    fn expect(&mut self, want: Tok<'static>, what: &str) -> Result<()> {
        match self.next()? {
            Some((_, tok)) if tok == want => Ok(()),
            Some((at, _)) => Err(self.error(at, format!("expected {what}"))),
            None => Err(self.error(self.src.len(), format!("expected {what}, found end of input"))),
        }
    }
}

/// How variable names are resolved while parsing.
enum Names<'v> {
    /// Unknown names are interned.
    Open(&'v mut Vocab),
    /// Unknown names are an error.
    Closed(&'v Vocab),
}

impl Names<'_> {
    fn resolve(&mut self, name: &str) -> Result<crate::vars::VarId> {
        match self {
            Names::Open(v) => v.intern(name),
            Names::Closed(v) => v
                .lookup(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string())),
        }
    }
}

fn parse_atom_at(src: &str, line: usize, col_base: usize, names: &mut Names<'_>) -> Result<Atom> {
    let mut lx = Lexer::new(src, line, col_base);
    let (at, kind) = match lx.next()? {
        Some((at, Tok::Ident(word))) => match AtomKind::from_keyword(word) {
            Some(kind) => (at, kind),
            None => {
                return Err(lx.error(at, format!("unknown atom kind `{word}`")));
            }
        },
        Some((at, _)) => return Err(lx.error(at, "expected an atom keyword")),
        None => return Err(lx.error(0, "empty atom")),
    };
    lx.expect(Tok::Open, "`(`")?;
    let mut sets = Vec::with_capacity(kind.arity());
    for i in 0..kind.arity() {
        if i > 0 {
            lx.expect(Tok::Comma, "`,`")?;
        }
        sets.push(parse_vars(&mut lx, kind, names)?);
    }
    lx.expect(Tok::Close, "`)`")?;
    if let Some((extra, _)) = lx.next()? {
        return Err(lx.error(extra, "trailing input after atom"));
    }
    Atom::from_sets(kind, &sets).map_err(|e| match e {
        Error::DepConstraint => lx.error(at, e.to_string()),
        other => other,
    })
}

fn parse_vars(lx: &mut Lexer<'_>, kind: AtomKind, names: &mut Names<'_>) -> Result<VarSet> {
    match lx.peek()? {
        Some((_, Tok::Open)) => {
            lx.next()?;
            lx.expect(Tok::Close, "`)` closing the empty list")?;
            Ok(VarSet::EMPTY)
        }
        Some((_, Tok::Ident(_))) => {
            let mut set = VarSet::EMPTY;
            while let Some((at, Tok::Ident(name))) = lx.peek()? {
                lx.next()?;
                let id = names.resolve(name).map_err(|e| match e {
                    Error::UnknownVariable(_) | Error::InvalidVariableName(_) => {
                        lx.error(at, e.to_string())
                    }
                    other => other,
                })?;
                if kind == AtomKind::AbsInd && set.contains(id) {
                    return Err(lx.error(at, format!("variable `{name}` listed twice")));
                }
                set.insert(id);
            }
            Ok(set)
        }
        Some((at, _)) => Err(lx.error(at, "expected variables or `()`")),
        None => Err(lx.error(lx.src.len(), "expected variables, found end of input")),
    }
}

/// Parses one atom, interning new variable names into `vocab`.
pub fn parse_atom(text: &str, vocab: &mut Vocab) -> Result<Atom> {
    parse_atom_at(text, 1, 0, &mut Names::Open(vocab))
}

/// Parses one atom whose variables must already be in `vocab`.
pub fn parse_atom_in(text: &str, vocab: &Vocab) -> Result<Atom> {
    parse_atom_at(text, 1, 0, &mut Names::Closed(vocab))
}

/// Splits off a `#` comment and surrounding whitespace; returns the content
/// and its column offset.
fn strip_line(raw: &str) -> (&str, usize) {
    let content = raw.split('#').next().unwrap_or("");
    let trimmed_start = content.len() - content.trim_start().len();
    let col = content[..trimmed_start].chars().count();
    (content.trim(), col)
}

/// Parses a problem file.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let mut vocab = Vocab::new();
    let mut sigma = Vec::new();
    let mut goals = Vec::new();
    let mut kind: Option<AtomKind> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let (content, col) = strip_line(raw);
        if content.is_empty() {
            continue;
        }
        let (body, col, is_goal) = match content.strip_prefix("|-") {
            Some(rest) => {
                let lead = rest.len() - rest.trim_start().len();
                (rest.trim(), col + 2 + lead, true)
            }
            None => (content, col, false),
        };
        if !is_goal && !goals.is_empty() {
            return Err(Error::Syntax {
                line: line_no,
                column: col + 1,
                message: "premise after the `|-` query line".into(),
            });
        }
        let atom = parse_atom_at(body, line_no, col, &mut Names::Open(&mut vocab))?;
        match kind {
            None => kind = Some(atom.kind()),
            Some(k) if k != atom.kind() => {
                return Err(Error::MixedKinds {
                    expected: k,
                    found: atom.kind(),
                })
            }
            _ => {}
        }
        if is_goal {
            goals.push(atom);
        } else {
            sigma.push(atom);
        }
    }
    if goals.len() != 1 {
        return Err(Error::QueryCount(goals.len()));
    }
    Problem::new(vocab, sigma, goals[0])
}

/// Parses a file of atoms (one per line, `#` comments) against a fixed
/// vocabulary; unknown variables are errors.
pub fn parse_atom_list(text: &str, vocab: &Vocab) -> Result<Vec<Atom>> {
    let mut atoms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let (content, col) = strip_line(raw);
        if content.is_empty() {
            continue;
        }
        atoms.push(parse_atom_at(content, i + 1, col, &mut Names::Closed(vocab))?);
    }
    Ok(atoms)
}

pub fn print_atom(atom: &Atom, vocab: &Vocab) -> String {
    atom.display(vocab).to_string()
}

/// Prints a problem in file form: premises in canonical order, then the query.
pub fn print_problem(problem: &Problem) -> String {
    let mut out = String::new();
    for atom in problem.sigma() {
        let _ = writeln!(out, "{}", atom.display(problem.vocab()));
    }
    let _ = writeln!(out, "|- {}", problem.goal().display(problem.vocab()));
    out
}

/// Parses a team from CSV: a header of distinct variable names, then rows of
/// opaque string values. Lines starting with `#` are comments. Repeated rows
/// collapse.
pub fn parse_team_csv(bytes: &[u8]) -> Result<Team> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .comment(Some(b'#'))
        .flexible(true)
        .from_reader(bytes);
    let header = reader.headers().map_err(|e| Error::Csv(e.to_string()))?.clone();
    if header.is_empty() || (header.len() == 1 && header[0].is_empty()) {
        return Err(Error::EmptyHeader);
    }
    let vocab = Vocab::from_names(header.iter())?;
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Csv(e.to_string()))?;
        if record.len() != header.len() {
            return Err(Error::RaggedRow {
                row: i + 1,
                expected: header.len(),
                found: record.len(),
            });
        }
        rows.push(record.iter().map(str::to_string).collect::<Vec<_>>());
    }
    Team::new(vocab, rows)
}

/// Prints a team as CSV with a header row.
pub fn print_team_csv(team: &Team) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let header: Vec<&str> = team.columns().iter().map(|&v| team.vocab().name(v)).collect();
    writer.write_record(&header).expect("in-memory write");
    for row in 0..team.len() {
        writer.write_record(team.row_strings(row)).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
