use std::io::Read;

use serde::Serialize;
use serde_json::json;
use spexlab::graph::graph6_decode;
use spexlab::Graph;

use crate::args::Format;

/// Failure of a command, with its exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input { line: Option<usize>, message: String },
    Core(spexlab::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(spexlab::Error::Convergence { .. } | spexlab::Error::Numeric(_)) => 1,
            _ => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input { .. } => "input",
            CliError::Core(e) => match e {
                spexlab::Error::InvalidSpec(_) => "invalid_spec",
                spexlab::Error::Parse { .. } => "parse",
                spexlab::Error::Convergence { .. } => "convergence",
                spexlab::Error::InvalidInput(_) => "invalid_input",
                spexlab::Error::Precondition(_) => "precondition",
                spexlab::Error::Feasibility(_) => "feasibility",
                spexlab::Error::NotEquitable { .. } => "not_equitable",
                spexlab::Error::Numeric(_) => "numeric",
            },
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => m.clone(),
            CliError::Input { line: Some(l), message } => format!("line {l}: {message}"),
            CliError::Input { line: None, message } => message.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let line = match self {
            CliError::Input { line, .. } => *line,
            _ => None,
        };
        json!({ "error": { "kind": self.kind(), "message": self.message(), "line": line } }).to_string()
    }
}

impl From<spexlab::Error> for CliError {
    fn from(e: spexlab::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Graphs from a graph6 file or standard input, with their 1-based line numbers.
pub fn read_graphs(path: &str) -> CliResult<Vec<(usize, Graph)>> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input { line: None, message: format!("cannot read standard input: {e}") })?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Input { line: None, message: format!("cannot read `{path}`: {e}") })?
    };
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6_decode(line).map_err(|e| CliError::Input { line: Some(i + 1), message: e.to_string() })?;
        out.push((i + 1, g));
    }
    Ok(out)
}

/// Accumulates output so nothing is printed when a command fails halfway.
pub struct Output {
    buf: String,
}

impl Output {
    pub fn new() -> Self {
        Output { buf: String::new() }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.buf.push_str(s.as_ref());
        self.buf.push('\n');
    }

    pub fn json<T: Serialize>(&mut self, value: &T) {
        self.line(serde_json::to_string(value).expect("reports serialise"));
    }

    pub fn csv<I, S>(&mut self, rows: I)
    where
        I: IntoIterator<Item = Vec<S>>,
        S: AsRef<str>,
    {
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        for row in rows {
            w.write_record(row.iter().map(|c| c.as_ref())).expect("in-memory write");
        }
        let bytes = w.into_inner().expect("in-memory flush");
        self.buf.push_str(std::str::from_utf8(&bytes).expect("utf-8 fields"));
    }

    pub fn into_string(self) -> String {
        self.buf
    }
}

pub fn unsupported(format: Format, command: &str) -> CliError {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::G6 => "g6",
    };
    CliError::Usage(format!("--format {name} is not supported by `{command}`"))
}
