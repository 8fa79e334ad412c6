//! Line-oriented text format for netlists.
//!
//! ```text
//! # comment
//! circuit pp_half_sub
//! lines 3
//! line 1 input A
//! line 2 const 0
//! line 3 input B
//! gate MUX 1 2 3
//! output 2 Diff
//! output 3 Borrow
//! garbage 1
//! ```
//!
//! Lines without an `output` directive are garbage. The serializer emits the
//! directives in the order above with indices ascending, and lists every
//! garbage line explicitly.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Circuit, GateInstance, InputRole, Line, OutputRole};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown directive `{0}`")]
    UnknownDirective(String),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unexpected token `{0}`")]
    Trailing(String),
    #[error("`{0}` is not a valid number")]
    BadNumber(String),
    #[error("`{0}` appears more than once")]
    Repeated(&'static str),
    #[error("`{0}` must come after `lines`")]
    BeforeLines(&'static str),
    #[error("missing `circuit` header")]
    MissingHeader,
    #[error("line {line} out of range 1..={count}")]
    LineOutOfRange { line: usize, count: usize },
    #[error("line {0} has no input role")]
    MissingInputRole(usize),
    #[error("line {0} already has an input role")]
    DuplicateInputRole(usize),
    #[error("line {0} already has an output role")]
    DuplicateOutputRole(usize),
}

struct Tokens<'a> {
    line: usize,
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        let text = text.split('#').next().unwrap_or("");
        let mut items = Vec::new();
        let mut start = None;
        for (i, ch) in text.char_indices() {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    items.push((s, &text[s..i]));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if let Some(s) = start {
            items.push((s, &text[s..]));
        }
        Self {
            line,
            items,
            pos: 0,
        }
    }

    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column,
            kind,
        }
    }

    /// Column of the next token, or one past the end.
    fn column(&self) -> usize {
        match self.items.get(self.pos) {
            Some((c, _)) => c + 1,
            None => self.items.last().map_or(1, |(c, t)| c + t.len() + 1),
        }
    }

    fn word(&mut self, what: &'static str) -> Result<(usize, &'a str), ParseError> {
        let col = self.column();
        let (c, t) = *self
            .items
            .get(self.pos)
            .ok_or_else(|| self.err(col, ParseErrorKind::Expected(what)))?;
        self.pos += 1;
        Ok((c + 1, t))
    }

    fn number(&mut self, what: &'static str) -> Result<(usize, usize), ParseError> {
        let (col, t) = self.word(what)?;
        t.parse()
            .map(|n| (col, n))
            .map_err(|_| self.err(col, ParseErrorKind::BadNumber(t.to_string())))
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.items.get(self.pos) {
            Some((c, t)) => Err(self.err(c + 1, ParseErrorKind::Trailing(t.to_string()))),
            None => Ok(()),
        }
    }

    fn is_done(&self) -> bool {
        self.pos >= self.items.len()
    }
}

pub fn parse_netlist(text: &str) -> Result<Circuit, ParseError> {
    let mut name: Option<String> = None;
    let mut inputs: Option<Vec<Option<InputRole>>> = None;
    let mut outputs: Vec<Option<OutputRole>> = Vec::new();
    let mut instances = Vec::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let mut tok = Tokens::new(n + 1, raw);
        last_line = n + 1;
        if tok.is_done() {
            continue;
        }
        let (col, directive) = tok.word("directive")?;
        match directive {
            "circuit" => {
                if name.is_some() {
                    return Err(tok.err(col, ParseErrorKind::Repeated("circuit")));
                }
                name = Some(tok.word("circuit name")?.1.to_string());
            }
            "lines" => {
                if inputs.is_some() {
                    return Err(tok.err(col, ParseErrorKind::Repeated("lines")));
                }
                let (_, count) = tok.number("line count")?;
                inputs = Some(vec![None; count]);
                outputs = vec![None; count];
            }
            "line" => {
                let roles = inputs
                    .as_mut()
                    .ok_or_else(|| tok.err(col, ParseErrorKind::BeforeLines("line")))?;
                let (icol, idx) = tok.number("line index")?;
                let slot = slot_mut(roles, idx).map_err(|k| tok.err(icol, k))?;
                let (kcol, kind) = tok.word("`input` or `const`")?;
                let role = match kind {
                    "input" => InputRole::Named(tok.word("input label")?.1.to_string()),
                    "const" => {
                        let (vcol, v) = tok.word("constant value")?;
                        match v {
                            "0" => InputRole::Const(false),
                            "1" => InputRole::Const(true),
                            _ => return Err(tok.err(vcol, ParseErrorKind::Expected("0 or 1"))),
                        }
                    }
                    _ => return Err(tok.err(kcol, ParseErrorKind::Expected("`input` or `const`"))),
                };
                if slot.replace(role).is_some() {
                    return Err(tok.err(icol, ParseErrorKind::DuplicateInputRole(idx)));
                }
            }
            "gate" => {
                let (_, gate) = tok.word("gate name")?;
                let mut lines = Vec::new();
                while !tok.is_done() {
                    lines.push(tok.number("line index")?.1);
                }
                if lines.is_empty() {
                    return Err(tok.err(tok.column(), ParseErrorKind::Expected("line index")));
                }
                instances.push(GateInstance::new(gate, lines));
            }
            "output" | "garbage" => {
                let what = if directive == "output" {
                    "output"
                } else {
                    "garbage"
                };
                if inputs.is_none() {
                    return Err(tok.err(col, ParseErrorKind::BeforeLines(what)));
                }
                let (icol, idx) = tok.number("line index")?;
                let slot = slot_mut(&mut outputs, idx).map_err(|k| tok.err(icol, k))?;
                let role = if directive == "output" {
                    OutputRole::Named(tok.word("output label")?.1.to_string())
                } else {
                    OutputRole::Garbage
                };
                if slot.replace(role).is_some() {
                    return Err(tok.err(icol, ParseErrorKind::DuplicateOutputRole(idx)));
                }
            }
            other => return Err(tok.err(col, ParseErrorKind::UnknownDirective(other.to_string()))),
        }
        tok.finish()?;
    }

    let eof = |kind| ParseError {
        line: last_line + 1,
        column: 1,
        kind,
    };
    let name = name.ok_or_else(|| eof(ParseErrorKind::MissingHeader))?;
    let inputs = inputs.ok_or_else(|| eof(ParseErrorKind::Expected("`lines` directive")))?;
    let lines = inputs
        .into_iter()
        .zip(outputs)
        .enumerate()
        .map(|(i, (input, output))| {
            Ok(Line {
                input: input.ok_or_else(|| eof(ParseErrorKind::MissingInputRole(i + 1)))?,
                output: output.unwrap_or(OutputRole::Garbage),
            })
        })
        .collect::<Result<_, ParseError>>()?;
    Ok(Circuit {
        name,
        lines,
        instances,
    })
}

fn slot_mut<T>(slots: &mut [Option<T>], idx: usize) -> Result<&mut Option<T>, ParseErrorKind> {
    let count = slots.len();
    if idx == 0 || idx > count {
        return Err(ParseErrorKind::LineOutOfRange { line: idx, count });
    }
    Ok(&mut slots[idx - 1])
}

pub fn serialize_netlist(circuit: &Circuit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "circuit {}", circuit.name);
    let _ = writeln!(out, "lines {}", circuit.lines.len());
    for (i, line) in circuit.lines.iter().enumerate() {
        let _ = match &line.input {
            InputRole::Named(label) => writeln!(out, "line {} input {label}", i + 1),
            InputRole::Const(v) => writeln!(out, "line {} const {}", i + 1, u8::from(*v)),
        };
    }
    for inst in &circuit.instances {
        out.push_str("gate ");
        out.push_str(&inst.gate);
        for l in &inst.lines {
            let _ = write!(out, " {l}");
        }
        out.push('\n');
    }
    for (i, label) in circuit.named_outputs() {
        let _ = writeln!(out, "output {} {label}", i + 1);
    }
    for i in circuit.garbage_lines() {
        let _ = writeln!(out, "garbage {}", i + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gate::GateLibrary;
    use crate::netlist::NetlistError;

    const SAMPLE: &str = "\
# half subtractor from a single MUX
circuit hs
lines 3
line 1 input A
line 2 const 0
line 3 input B
gate MUX 1 2 3   # Q = A^B, R = A'B
output 2 Diff
output 3 Borrow
";

    #[test]
    fn parses_sample() {
        let c = parse_netlist(SAMPLE).unwrap();
        assert_eq!(c.name, "hs");
        assert_eq!(c.lines.len(), 3);
        assert_eq!(c.lines[1].input, InputRole::Const(false));
        assert_eq!(c.lines[0].output, OutputRole::Garbage);
        assert_eq!(c.instances, vec![GateInstance::new("MUX", vec![1, 2, 3])]);
    }

    #[test]
    fn serializer_is_canonical() {
        let c = parse_netlist(SAMPLE).unwrap();
        let text = serialize_netlist(&c);
        assert_eq!(
            text,
            "circuit hs\nlines 3\nline 1 input A\nline 2 const 0\nline 3 input B\n\
             gate MUX 1 2 3\noutput 2 Diff\noutput 3 Borrow\ngarbage 1\n"
        );
        assert_eq!(parse_netlist(&text).unwrap(), c);
    }

    #[test]
    fn out_of_range_references() {
        let text = SAMPLE.replace("gate MUX 1 2 3", "gate MUX 1 2 9");
        let c = parse_netlist(&text).unwrap();
        assert!(matches!(
            c.validate(&GateLibrary::new()),
            Err(NetlistError::LineOutOfRange {
                line: 9,
                count: 3,
                ..
            })
        ));
        let err = parse_netlist(&SAMPLE.replace("output 3 Borrow", "output 9 Borrow")).unwrap_err();
        assert_eq!(
            err.kind,
            ParseErrorKind::LineOutOfRange { line: 9, count: 3 }
        );
        assert_eq!((err.line, err.column), (9, 8));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_netlist("circuit x\nlines 2\nline 1 inptu A\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 8));
        let err = parse_netlist("circuit x\nlines two\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BadNumber("two".into()));
        assert_eq!((err.line, err.column), (2, 7));
        let err = parse_netlist("circuit x\nlines 1\nline 1 const 2\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Expected("0 or 1"));
        let err = parse_netlist("circuit x\nwires 3\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownDirective("wires".into()));
        let err = parse_netlist("circuit x y\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Trailing("y".into()));
        assert_eq!(err.column, 11);
    }

    #[test]
    fn structural_errors() {
        let err = parse_netlist("lines 1\nline 1 input A\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingHeader);
        let err = parse_netlist("circuit x\nlines 2\nline 1 input A\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MissingInputRole(2));
        let err = parse_netlist("circuit x\nline 1 input A\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::BeforeLines("line"));
        let err = parse_netlist("circuit x\nlines 1\nline 1 input A\noutput 1 P\ngarbage 1\n")
            .unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateOutputRole(1));
        let err = parse_netlist("circuit x\nlines 1\nline 1 input A\ngate NOT\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Expected("line index"));
    }
}
