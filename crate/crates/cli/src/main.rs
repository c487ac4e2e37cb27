use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use braidcover::braid::{beta_tilde_formula, Representation};
use braidcover::groupoid::{dehn_twist, lift_beta};
use braidcover::surface::{surface, table, SurfaceData};
use braidcover::verify::run_suite;
use braidcover::{BraidWord, FreeAutomorphism, GeneratorSymbol, GroupoidFunctor, Params, Suite};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Braid group actions on the free group of a cyclic branched cover.
#[derive(Parser)]
#[command(name = "braidcover", version)]
struct Cli {
    /// Output mode; `json` prints one JSON object per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Upper bound on the length of any intermediate word or path.
    #[arg(long, default_value_t = Params::DEFAULT_LETTER_BUDGET, global = true)]
    letter_budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Dims {
    /// Number of sheets.
    #[arg(long)]
    d: usize,
    /// Number of branch points.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Genus, boundary count and rank of the cover.
    Surface {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
    },
    /// Surface data for n = 1..=n-max.
    Tables {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n_max: u64,
    },
    /// Edge images of the lifted half twist.
    Lift {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        i: usize,
    },
    /// Edge images of the Dehn twist about the loop x[i,j].
    Dehn {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        j: i64,
    },
    /// Generator images of beta_i.
    Aut {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        i: usize,
    },
    /// Automorphism of a braid word such as "1 2 -1".
    Eval {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Abelianized integer matrix of a braid word.
    Matrix {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Runs a verification suite; exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
}

struct Out {
    format: Format,
    buf: String,
}

impl Out {
    fn text(&mut self, s: impl std::fmt::Display) {
        if self.format == Format::Text {
            let _ = writeln!(self.buf, "{s}");
        }
    }

    fn record(&mut self, r: &impl Serialize) {
        if self.format == Format::Json {
            self.buf.push_str(&serde_json::to_string(r).expect("records serialize"));
            self.buf.push('\n');
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum Source {
    Vertex(String),
    Edge(String),
    Generator(String),
}

#[derive(Serialize)]
struct Image {
    #[serde(flatten)]
    source: Source,
    image: String,
}

#[derive(Serialize)]
struct MatrixRow {
    row: String,
    entries: Vec<i64>,
}

#[derive(Serialize)]
struct Determinant {
    determinant: String,
}

#[derive(Serialize)]
struct Summary {
    d: usize,
    n: usize,
    passed: usize,
    total: usize,
}

fn functor(out: &mut Out, f: &GroupoidFunctor) {
    out.text(f.to_string().trim_end());
    for (v, w) in f.moved_vertices() {
        out.record(&Image {
            source: Source::Vertex(v.to_string()),
            image: w.to_string(),
        });
    }
    for (e, p) in f.edge_images() {
        out.record(&Image {
            source: Source::Edge(e.to_string()),
            image: p.to_string(),
        });
    }
}

fn automorphism(out: &mut Out, f: &FreeAutomorphism) {
    out.text(f.to_string().trim_end());
    for s in GeneratorSymbol::all(f.params()) {
        out.record(&Image {
            source: Source::Generator(s.to_string()),
            image: f.image(s).to_string(),
        });
    }
}

fn surface_table(out: &mut Out, rows: &[SurfaceData]) {
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| [r.n, r.boundary, r.genus, r.rank].map(|v| v.to_string()))
        .collect();
    let header = ["n", "b", "g", "rank"];
    let widths: Vec<usize> = (0..4)
        .map(|c| cells.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap())
        .collect();
    let line = |r: [&str; 4]| {
        r.iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    out.text(line(header));
    for (row, c) in rows.iter().zip(&cells) {
        out.text(line([&c[0], &c[1], &c[2], &c[3]]));
        out.record(row);
    }
}

fn params(dims: &Dims, budget: usize) -> braidcover::Result<Params> {
    Ok(Params::new(dims.d, dims.n)?.with_letter_budget(budget))
}

/// Returns the exit status for a successful run: 0, or 1 on verification failure.
fn run(cli: &Cli, out: &mut Out) -> braidcover::Result<u8> {
    let budget = cli.letter_budget;
    match &cli.command {
        Command::Surface { d, n } => {
            let s = surface(*d, *n)?;
            out.text(format_args!("b={} g={} rank={}", s.boundary, s.genus, s.rank));
            out.record(&s);
        }
        Command::Tables { d, n_max } => surface_table(out, &table(*d, *n_max)?),
        Command::Lift { dims, i } => functor(out, &lift_beta(params(dims, budget)?, *i)?),
        Command::Dehn { dims, i, j } => functor(out, &dehn_twist(params(dims, budget)?, *i, *j)?),
        Command::Aut { dims, i } => automorphism(out, &beta_tilde_formula(params(dims, budget)?, *i)?),
        Command::Eval { dims, word } => {
            let q = params(dims, budget)?;
            let w = BraidWord::parse(q, word)?;
            automorphism(out, &Representation::new(q)?.evaluate(&w)?);
        }
        Command::Matrix { dims, word } => {
            let q = params(dims, budget)?;
            let w = BraidWord::parse(q, word)?;
            let m = Representation::new(q)?.matrix(&w)?;
            let det = m.determinant();
            out.text(m.to_string().trim_end());
            out.text(format_args!("det={det}"));
            for (s, entries) in GeneratorSymbol::all(&q).zip(m.rows()) {
                out.record(&MatrixRow {
                    row: s.to_string(),
                    entries,
                });
            }
            out.record(&Determinant {
                determinant: det.to_string(),
            });
        }
        Command::Verify { dims, suite } => {
            let report = run_suite(params(dims, budget)?, *suite);
            out.text(report.to_string().trim_end());
            for c in &report.checks {
                out.record(c);
            }
            out.record(&Summary {
                d: report.d,
                n: report.n,
                passed: report.checks.iter().filter(|c| c.passed).count(),
                total: report.checks.len(),
            });
            return Ok(if report.all_passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        format: cli.format,
        buf: String::new(),
    };
    let status = match run(&cli, &mut out) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.buf.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::from(status)
}
