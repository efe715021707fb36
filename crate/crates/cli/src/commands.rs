use serde::Serialize;
use spexlab::graph::{graph6_encode, FamilySpec};
use spexlab::quotient::verify_lemma32;
use spexlab::search::{
    conjecture_scan, ex_search, hill_climb, lemma27_scan, spex_search, ConjectureKind, PredicateSpec, SearchReport,
};
use spexlab::spectral::{spectral_radius_with, SpectralOptions, SpectralResult};
use spexlab::structure::{chromatic_number, contains_generalized_book, is_color_critical, is_r_colorable, BookWitness};
use spexlab::verify::{verify_edge_count, verify_rotation_random, verify_wilf_random};

use crate::args::*;
use crate::io::{read_graphs, unsupported, CliError, CliResult, Output};

/// Output text and whether the command's checks passed.
pub struct Finished {
    pub text: String,
    pub passed: bool,
}

fn done(out: Output) -> CliResult<Finished> {
    Ok(Finished { text: out.into_string(), passed: true })
}

fn require(value: Option<usize>, flag: &str, family: &str) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} needs {flag}")))
}

pub fn construct(args: &ConstructArgs, format: Format) -> CliResult<Finished> {
    let spec = match args.family {
        FamilyName::Complete => FamilySpec::Complete { n: require(args.n, "--n", "complete")? },
        FamilyName::Turan => FamilySpec::Turan { r: require(args.r, "--r", "turan")?, n: require(args.n, "--n", "turan")? },
        FamilyName::Book => FamilySpec::Book { r: require(args.r, "--r", "book")?, k: require(args.k, "--k", "book")? },
        FamilyName::Ygraph => FamilySpec::Ygraph { r: require(args.r, "--r", "ygraph")?, n: require(args.n, "--n", "ygraph")? },
        FamilyName::Ugraph => FamilySpec::Ugraph { m: require(args.m.or(args.n), "--m", "ugraph")? },
        FamilyName::Multipartite => FamilySpec::Multipartite {
            parts: args.parts.clone().ok_or_else(|| CliError::Usage("--family multipartite needs --parts".into()))?,
        },
    };
    let g = spec.build()?;
    let g6 = graph6_encode(&g);
    let mut out = Output::new();
    match format {
        Format::G6 => out.line(&g6),
        Format::Json => out.json(&serde_json::json!({
            "family": spec, "graph6": g6, "n": g.order(), "m": g.edge_count()
        })),
        Format::Csv => out.csv([
            vec!["graph6".to_string(), "n".into(), "m".into()],
            vec![g6, g.order().to_string(), g.edge_count().to_string()],
        ]),
    }
    done(out)
}

#[derive(Serialize)]
struct SpectrumLine {
    line: usize,
    graph6: String,
    n: usize,
    m: usize,
    #[serde(flatten)]
    result: SpectralResult,
}

pub fn spectrum(args: &SpectrumArgs, format: Format, seed: u64) -> CliResult<Finished> {
    if format == Format::G6 {
        return Err(unsupported(format, "spectrum"));
    }
    if !(args.tol > 0.0) || args.max_iter == 0 {
        return Err(CliError::Usage("--tol must be positive and --max-iter non-zero".into()));
    }
    let graphs = read_graphs(&args.input.input)?;
    let opts = SpectralOptions { tol: args.tol, max_iter: args.max_iter, seed, compensated: args.compensated };
    let mut out = Output::new();
    let mut rows = vec![["line", "graph6", "n", "m", "rho", "residual", "iterations", "disconnected"].map(String::from).to_vec()];
    for (line, g) in graphs {
        let result = spectral_radius_with(&g, &opts).map_err(|e| match e {
            spexlab::Error::InvalidInput(m) => CliError::Input { line: Some(line), message: m },
            other => CliError::Core(other),
        })?;
        let rec = SpectrumLine { line, graph6: graph6_encode(&g), n: g.order(), m: g.edge_count(), result };
        match format {
            Format::Json => out.json(&rec),
            _ => rows.push(vec![
                line.to_string(),
                rec.graph6.clone(),
                rec.n.to_string(),
                rec.m.to_string(),
                format!("{:.15}", rec.result.rho),
                format!("{:e}", rec.result.residual),
                rec.result.iterations.to_string(),
                rec.result.disconnected.to_string(),
            ]),
        }
    }
    if format == Format::Csv {
        out.csv(rows);
    }
    done(out)
}

#[derive(Serialize)]
struct BookCheck {
    r: usize,
    k: usize,
    contains: bool,
    witness: Option<BookWitness>,
}

#[derive(Serialize)]
struct PartiteCheck {
    r: usize,
    colorable: bool,
    coloring: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct CriticalCheck {
    critical: bool,
    edge: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct CheckLine {
    line: usize,
    graph6: String,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    book: Option<BookCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rpartite: Option<PartiteCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chromatic_number: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    color_critical: Option<CriticalCheck>,
}

pub fn check(args: &CheckArgs, format: Format) -> CliResult<Finished> {
    if format == Format::G6 {
        return Err(unsupported(format, "check"));
    }
    let graphs = read_graphs(&args.input.input)?;
    let mut out = Output::new();
    let mut rows = vec![[
        "line", "graph6", "n", "m", "book", "contains_book", "rpartite", "colorable", "chromatic_number", "color_critical",
    ]
    .map(String::from)
    .to_vec()];
    let at_line = |line: usize| move |e: spexlab::Error| CliError::Input { line: Some(line), message: e.to_string() };
    for (line, g) in graphs {
        let book = match args.book {
            Some((r, k)) => {
                let witness = contains_generalized_book(&g, r, k).map_err(at_line(line))?;
                Some(BookCheck { r, k, contains: witness.is_some(), witness })
            }
            None => None,
        };
        let rpartite = args.rpartite.map(|r| {
            let coloring = is_r_colorable(&g, r);
            PartiteCheck { r, colorable: coloring.is_some(), coloring }
        });
        let chromatic = args.chromatic.then(|| chromatic_number(&g));
        let critical = if args.color_critical {
            let edge = is_color_critical(&g).map_err(at_line(line))?;
            Some(CriticalCheck { critical: edge.is_some(), edge })
        } else {
            None
        };
        let rec = CheckLine {
            line,
            graph6: graph6_encode(&g),
            n: g.order(),
            m: g.edge_count(),
            book,
            rpartite,
            chromatic_number: chromatic,
            color_critical: critical,
        };
        match format {
            Format::Json => out.json(&rec),
            _ => {
                let opt = |o: Option<String>| o.unwrap_or_default();
                rows.push(vec![
                    line.to_string(),
                    rec.graph6.clone(),
                    rec.n.to_string(),
                    rec.m.to_string(),
                    opt(rec.book.as_ref().map(|b| format!("{},{}", b.r, b.k))),
                    opt(rec.book.as_ref().map(|b| b.contains.to_string())),
                    opt(rec.rpartite.as_ref().map(|p| p.r.to_string())),
                    opt(rec.rpartite.as_ref().map(|p| p.colorable.to_string())),
                    opt(rec.chromatic_number.map(|c| c.to_string())),
                    opt(rec.color_critical.as_ref().map(|c| c.critical.to_string())),
                ]);
            }
        }
    }
    if format == Format::Csv {
        out.csv(rows);
    }
    done(out)
}

fn predicate(p: &PredicateArgs) -> PredicateSpec {
    PredicateSpec {
        forbid_book: p.forbid_book,
        require_non_r_partite: p.non_r_partite,
        require_connected: p.connected,
        forbid_clique: p.forbid_clique,
    }
}

fn emit_search(rep: &SearchReport, format: Format) -> Output {
    let mut out = Output::new();
    match format {
        Format::Json => out.json(rep),
        Format::G6 => rep.champions.iter().for_each(|c| out.line(&c.graph6)),
        Format::Csv => {
            let mut rows = vec![["graph6", "objective", "value", "edges", "rho"].map(String::from).to_vec()];
            for c in &rep.champions {
                rows.push(vec![
                    c.graph6.clone(),
                    serde_json::to_value(rep.objective).unwrap().as_str().unwrap_or_default().to_string(),
                    format!("{}", c.value),
                    c.edges.to_string(),
                    format!("{:.15}", c.rho),
                ]);
            }
            out.csv(rows);
        }
    }
    out
}

pub fn search(cmd: &SearchCommand, format: Format, jobs: usize) -> CliResult<Finished> {
    match cmd {
        SearchCommand::Spex(a) => done(emit_search(&spex_search(a.n, &predicate(&a.predicate), jobs)?, format)),
        SearchCommand::Ex(a) => done(emit_search(&ex_search(a.n, &predicate(&a.predicate), jobs)?, format)),
        SearchCommand::Climb(a) => {
            let pred = predicate(&a.predicate);
            let graphs = read_graphs(&a.input.input)?;
            let mut out = Output::new();
            let mut rows = vec![["line", "start_graph6", "final_graph6", "start_rho", "final_rho", "moves", "local_max"]
                .map(String::from)
                .to_vec()];
            for (line, g) in graphs {
                let rep = hill_climb(&g, &pred, a.budget, a.tol).map_err(|e| match e {
                    spexlab::Error::InvalidInput(m) => CliError::Input { line: Some(line), message: m },
                    other => CliError::Core(other),
                })?;
                match format {
                    Format::Json => out.json(&serde_json::json!({ "line": line, "start_graph6": graph6_encode(&g), "report": rep })),
                    Format::G6 => out.line(&rep.final_graph6),
                    Format::Csv => rows.push(vec![
                        line.to_string(),
                        graph6_encode(&g),
                        rep.final_graph6.clone(),
                        format!("{:.15}", rep.start_rho),
                        format!("{:.15}", rep.final_rho),
                        rep.trace.len().to_string(),
                        rep.local_max.to_string(),
                    ]),
                }
            }
            if format == Format::Csv {
                out.csv(rows);
            }
            done(out)
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a, T: Serialize> {
    check: &'a str,
    passed: bool,
    report: T,
}

fn emit_verify<T: Serialize>(check: &str, passed: bool, report: T, format: Format) -> CliResult<Finished> {
    let mut out = Output::new();
    match format {
        Format::Json => out.json(&VerifyOutput { check, passed, report }),
        Format::Csv => out.csv([vec!["check", "passed"], vec![check, if passed { "true" } else { "false" }]]),
        Format::G6 => return Err(unsupported(format, "verify")),
    }
    Ok(Finished { text: out.into_string(), passed })
}

pub fn verify(cmd: &VerifyCommand, format: Format, seed: u64) -> CliResult<Finished> {
    if format == Format::G6 {
        return Err(unsupported(format, "verify"));
    }
    match *cmd {
        VerifyCommand::Lemma32 { n } => {
            let rep = verify_lemma32(n)?;
            emit_verify("lemma32", rep.passed(), rep, format)
        }
        VerifyCommand::Lemma27 { r, n } => {
            let rep = lemma27_scan(r, n)?;
            emit_verify("lemma27", rep.passed(), rep, format)
        }
        VerifyCommand::Lemma28 { r, n_max } => {
            let rep = verify_edge_count(r, n_max)?;
            emit_verify("lemma28", rep.passed, rep, format)
        }
        VerifyCommand::Wilf { n_max, r, trials, tol } => {
            let rep = verify_wilf_random(r, n_max, trials, seed, tol)?;
            emit_verify("wilf", rep.passed, rep, format)
        }
        VerifyCommand::Rotation { trials, margin } => {
            let rep = verify_rotation_random(trials, seed, margin)?;
            emit_verify("rotation", rep.passed, rep, format)
        }
    }
}

pub fn scan(args: &ScanArgs, format: Format, jobs: usize) -> CliResult<Finished> {
    let kind = match args.kind {
        ScanKind::NosalBook => ConjectureKind::NosalBook { k: args.k.unwrap_or(2) },
        ScanKind::LiuMiaoU => ConjectureKind::LiuMiaoU { k: args.k.unwrap_or(2) },
        ScanKind::Sqrt2mBound => ConjectureKind::Sqrt2mBound { r: args.r.unwrap_or(3), k: args.k.unwrap_or(1) },
    };
    let rep = conjecture_scan(kind, args.max_n, jobs)?;
    let mut out = Output::new();
    match format {
        Format::Json => out.json(&rep),
        Format::G6 => rep.violations.iter().for_each(|v| out.line(&v.graph6)),
        Format::Csv => {
            let mut rows = vec![["status", "graph6", "n", "m", "rho", "bound"].map(String::from).to_vec()];
            let tagged = rep
                .violations
                .iter()
                .map(|v| ("violation", v))
                .chain(rep.equality_witnesses.iter().map(|v| ("equality", v)));
            for (status, v) in tagged {
                rows.push(vec![
                    status.to_string(),
                    v.graph6.clone(),
                    v.n.to_string(),
                    v.m.to_string(),
                    format!("{:.15}", v.rho),
                    format!("{:.15}", v.bound),
                ]);
            }
            out.csv(rows);
        }
    }
    done(out)
}
