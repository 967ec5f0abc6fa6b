//! Command-line front end.
//!
//! Every command is a pure function of its flags. Results go to stdout,
//! diagnostics to stderr. Exit codes: 0 success, 1 usage error, 2 domain error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cohomology::{parse_symbols, CohomologyElement, Symbol};
use crate::error::Error;
use crate::gw::{closed_form_invariant, f2k_invariant, Gamma, InvariantQuery, Lemma};
use crate::quantum::{
    batyrev_presentation, batyrev_product, compare_rings, irreducibility_obstruction,
    m_fold_quantum_product, printed_qh_relations, qh_presentation,
};
use crate::ring::serial::ElementJson;
use crate::ring::{Presentation, QuantumElement, ORDER_ID};
use crate::toric::{build_fan, nonnegative_hilbert_basis, ray_coordinates, CurveClass};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hirzebruch",
    version,
    about = "Gromov-Witten invariants and quantum rings of even Hirzebruch surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rays, primitive collections and relation lattice of F_kappa.
    Fan {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// A ring presentation and its completed rewrite rules.
    Present {
        #[arg(long, value_enum)]
        ring: Ring,
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Also echo the quantum relations in their commonly printed form
        /// (q2^-k), which is not used for computation.
        #[arg(long)]
        paper_variant: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One Gromov-Witten invariant of F_2k.
    Invariant {
        #[arg(long)]
        k: i64,
        /// Curve class as r,s.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Comma-separated insertions (Z1..Z4, pt, 1; X^n repeats X).
        #[arg(long)]
        insertions: String,
        #[arg(long, default_value = "pt")]
        gamma: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed-form invariant table, every row checked against the engine.
    Table {
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Product of factors in the classical, quantum or Batyrev ring.
    Product {
        #[arg(long, value_enum)]
        ring: Ring,
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        factors: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quantum versus Batyrev product, with the difference attributed to classes.
    Compare {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        factors: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Why a class cannot be carried by an irreducible curve, if it cannot.
    Obstruction {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// The surface, given either as `--kappa κ` (F_κ) or `--k k` (F_2k).
#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub kappa: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Classical,
    Qh,
    Batyrev,
}

impl Ring {
    fn name(&self) -> &'static str {
        match self {
            Ring::Classical => "classical",
            Ring::Qh => "qh",
            Ring::Batyrev => "batyrev",
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other),
        }
    }
}

type CmdResult = std::result::Result<Output, Failure>;

struct Output {
    stdout: String,
    stderr: String,
}

impl Output {
    fn new(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion
                | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
                    if !e.use_stderr() =>
                {
                    Outcome {
                        stdout: text,
                        stderr: String::new(),
                        code: EXIT_OK,
                    }
                }
                _ => Outcome {
                    stdout: String::new(),
                    stderr: format!("error[usage]: {}\n{text}", first_line(&text)),
                    code: EXIT_USAGE,
                },
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => Outcome {
            stdout: out.stdout,
            stderr: out.stderr,
            code: EXIT_OK,
        },
        Err(Failure::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error[usage]: {msg}\n"),
            code: EXIT_USAGE,
        },
        Err(Failure::Domain(err)) => Outcome {
            stdout: String::new(),
            stderr: format!("error[{}]: {err}\n", err.code()),
            code: EXIT_DOMAIN,
        },
    }
}

fn first_line(s: &str) -> &str {
    s.lines()
        .next()
        .unwrap_or("")
        .trim_start_matches("error: ")
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Fan { surface, format } => fan(surface, *format),
        Command::Present {
            ring,
            surface,
            paper_variant,
            format,
        } => present(*ring, surface, *paper_variant, *format),
        Command::Invariant {
            k,
            class,
            insertions,
            gamma,
            format,
        } => invariant(*k, class, insertions, gamma, *format),
        Command::Table { lemma, k, format } => table(lemma, *k, *format),
        Command::Product {
            ring,
            surface,
            factors,
            format,
        } => product(*ring, surface, factors, *format),
        Command::Compare {
            surface,
            factors,
            format,
        } => compare(surface, factors, *format),
        Command::Obstruction {
            surface,
            class,
            format,
        } => obstruction(surface, class, *format),
    }
}

fn non_negative(v: i64) -> Result<u32, Failure> {
    u32::try_from(v).map_err(|_| Failure::Domain(Error::NegativeKappa(v)))
}

impl SurfaceArgs {
    fn kappa(&self) -> Result<u32, Failure> {
        match (self.kappa, self.k) {
            (Some(kappa), None) => non_negative(kappa),
            (None, Some(k)) => non_negative(k.saturating_mul(2)),
            (Some(_), Some(_)) => Err(Failure::Usage("give either --kappa or --k, not both".into())),
            (None, None) => Err(Failure::Usage("one of --kappa or --k is required".into())),
        }
    }

    /// `k` for surfaces that must be even.
    fn half(&self) -> Result<u32, Failure> {
        let kappa = self.kappa()?;
        if kappa % 2 != 0 {
            return Err(Failure::Domain(Error::OddKappa(kappa)));
        }
        Ok(kappa / 2)
    }
}

fn parse_class(s: &str) -> Result<CurveClass, Failure> {
    let bad = || Failure::Usage(format!("class {s:?} is not of the form r,s"));
    let (r, t) = s.split_once(',').ok_or_else(bad)?;
    let r = r.trim().parse().map_err(|_| bad())?;
    let t = t.trim().parse().map_err(|_| bad())?;
    Ok(CurveClass::new(r, t))
}

fn parse_factors(list: &str) -> Result<Vec<Symbol>, Failure> {
    let syms = parse_symbols(list)?;
    if syms.is_empty() {
        return Err(Failure::Usage("empty factor list".into()));
    }
    Ok(syms)
}

fn classes(symbols: &[Symbol], kappa: u32) -> Vec<CohomologyElement> {
    symbols.iter().map(|s| s.class(kappa)).collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn class_json(c: CurveClass) -> Value {
    json!([c.r, c.s])
}

fn fan(surface: &SurfaceArgs, format: Format) -> CmdResult {
    let kappa = surface.kappa()?;
    let fan = build_fan(kappa as i64)?;
    let hilbert = nonnegative_hilbert_basis(kappa);
    let out = match format {
        Format::Json => pretty(&json!({
            "surface": format!("F{kappa}"),
            "rays": fan.rays,
            "primitive_collections": fan.primitive_collections,
            "lattice_basis": fan.lattice_basis,
            "nonnegative_generators": hilbert.iter().map(|c| class_json(*c)).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!("surface F{kappa}\n");
            let rays: Vec<String> = fan
                .rays
                .iter()
                .enumerate()
                .map(|(i, v)| format!("v{}=({},{})", i + 1, v[0], v[1]))
                .collect();
            writeln!(s, "rays {}", rays.join(" ")).unwrap();
            let pc: Vec<String> = fan
                .primitive_collections
                .iter()
                .map(|p| format!("{{{},{}}}", p[0], p[1]))
                .collect();
            writeln!(s, "primitive collections {}", pc.join(" ")).unwrap();
            let [l1, l2] = fan.lattice_basis;
            writeln!(
                s,
                "relation basis l1=({},{},{},{}) l2=({},{},{},{})",
                l1[0], l1[1], l1[2], l1[3], l2[0], l2[1], l2[2], l2[3]
            )
            .unwrap();
            let gens: Vec<String> = hilbert.iter().map(|c| c.to_string()).collect();
            writeln!(s, "nonnegative generators {}", gens.join(" ")).unwrap();
            s
        }
    };
    Ok(Output::new(out))
}

fn classical_presentation(kappa: u32) -> Result<Presentation, Error> {
    let z = QuantumElement::z;
    Presentation::new(
        "classical",
        kappa,
        vec![1, 4],
        vec![(2, z(1)), (3, z(4) - z(1) * kappa as i64)],
        vec![z(1) * z(2), z(3) * z(4)],
    )
}

fn present(ring: Ring, surface: &SurfaceArgs, paper_variant: bool, format: Format) -> CmdResult {
    let kappa = surface.kappa()?;
    let p = match ring {
        Ring::Classical => classical_presentation(kappa)?,
        Ring::Qh => qh_presentation(surface.half()?)?,
        Ring::Batyrev => batyrev_presentation(kappa)?,
    };
    let printed = (paper_variant && ring == Ring::Qh).then(|| printed_qh_relations(kappa / 2));
    let subs: Vec<String> = p
        .linear_substitutions
        .iter()
        .map(|(v, e)| format!("Z{v} -> {e}"))
        .collect();
    let out = match format {
        Format::Json => {
            let mut v = json!({
                "surface": format!("F{kappa}"),
                "ring": ring.name(),
                "order": ORDER_ID,
                "generators": p.active_variables.iter().map(|v| format!("Z{v}")).collect::<Vec<_>>(),
                "substitutions": subs,
                "source_relations": p.source_relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "relations": p.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "rules": p.completed_rules.iter().map(|r| json!({"lead": r.lead.to_string(), "tail": r.tail.to_string()})).collect::<Vec<_>>(),
            });
            if let Some(printed) = &printed {
                v["printed_relations"] = json!(printed.iter().map(|r| r.to_string()).collect::<Vec<_>>());
                v["note"] = json!(PRINTED_NOTE);
            }
            pretty(&v)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "ring {} surface F{kappa}", ring.name()).unwrap();
            writeln!(s, "order {ORDER_ID}").unwrap();
            let gens: Vec<String> = p.active_variables.iter().map(|v| format!("Z{v}")).collect();
            writeln!(s, "generators {}", gens.join(" ")).unwrap();
            writeln!(s, "substitutions {}", subs.join("; ")).unwrap();
            writeln!(s, "relations").unwrap();
            for r in &p.relations {
                writeln!(s, "  {r}").unwrap();
            }
            writeln!(s, "rules").unwrap();
            for r in &p.completed_rules {
                writeln!(s, "  {} -> {}", r.lead, r.tail).unwrap();
            }
            if let Some(printed) = &printed {
                writeln!(s, "printed relations (documentation only, not used)").unwrap();
                for r in printed {
                    writeln!(s, "  {r}").unwrap();
                }
                writeln!(s, "note: {PRINTED_NOTE}").unwrap();
            }
            s
        }
    };
    Ok(Output::new(out))
}

const PRINTED_NOTE: &str = "the printed q2^-k disagrees with the invariants, which put Z1*Z1 at \
class (1,k), i.e. q1*q2^k; the transfer to F0 used is l1 -> l1 - k*l2, l2 -> l2";

fn invariant(k: i64, class: &str, insertions: &str, gamma: &str, format: Format) -> CmdResult {
    let k = non_negative(k)?;
    let class = parse_class(class)?;
    let gamma: Gamma = gamma.parse()?;
    let symbols = parse_symbols(insertions)?;
    let q = InvariantQuery::new(k, class, classes(&symbols, 2 * k), gamma);
    let value = f2k_invariant(&q)?;
    let closed = closed_form_invariant(&q);
    if let Some(c) = closed {
        if c != value {
            return Err(Failure::Domain(Error::Mismatch(format!(
                "engine {value} vs closed form {c} at class {class}"
            ))));
        }
    }
    let out = match format {
        Format::Text => format!("{value}\n"),
        Format::Json => pretty(&json!({
            "surface": format!("F{}", 2 * k),
            "class": class_json(class),
            "insertions": symbols.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "gamma": gamma.to_string(),
            "marked_points": q.marked_points(),
            "value": value,
            "closed_form": closed,
        })),
    };
    Ok(Output::new(out))
}

fn table(lemma: &str, k: i64, format: Format) -> CmdResult {
    let lemma: Lemma = lemma.parse()?;
    let k = non_negative(k)?;
    let rows = lemma.support(k);
    for row in &rows {
        let engine = f2k_invariant(&lemma.query(k, row.class))?;
        if engine != row.value {
            return Err(Failure::Domain(Error::Mismatch(format!(
                "{} row at class {}: closed form {} vs engine {engine}",
                lemma.name(),
                row.class,
                row.value
            ))));
        }
    }
    let out = match format {
        Format::Text => {
            let mut s = format!("lemma {} k={k} gamma={}\n", lemma.name(), lemma.gamma());
            for row in &rows {
                if let Some(r) = row.r {
                    write!(s, "r={r} ").unwrap();
                }
                writeln!(s, "class={} value={}", row.class, row.value).unwrap();
            }
            s
        }
        Format::Json => pretty(&json!({
            "lemma": lemma.name(),
            "surface": format!("F{}", 2 * k),
            "gamma": lemma.gamma().to_string(),
            "rows": rows.iter().map(|row| json!({
                "r": row.r,
                "class": class_json(row.class),
                "value": row.value,
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Output::new(out))
}

fn product(ring: Ring, surface: &SurfaceArgs, factors: &str, format: Format) -> CmdResult {
    let symbols = parse_factors(factors)?;
    let (kappa, element) = match ring {
        Ring::Classical => {
            let kappa = surface.kappa()?;
            let p = classes(&symbols, kappa)
                .iter()
                .fold(CohomologyElement::one(), |acc, c| acc.product(c, kappa));
            (kappa, p.to_polynomial())
        }
        Ring::Qh => {
            let k = surface.half()?;
            let p = m_fold_quantum_product(k, &classes(&symbols, 2 * k))?;
            (2 * k, p.into_element())
        }
        Ring::Batyrev => {
            let kappa = surface.kappa()?;
            if kappa % 2 != 0 {
                return Err(Failure::Domain(Error::OddKappa(kappa)));
            }
            (kappa, batyrev_product(kappa, &classes(&symbols, kappa))?)
        }
    };
    element.assert_integral()?;
    let stdout = match format {
        Format::Text => format!("{element}\n"),
        Format::Json => {
            let v = serde_json::to_value(ElementJson::new(kappa, ring.name(), &element)).expect("json");
            pretty(&v)
        }
    };
    let stderr = match (ring, format) {
        (Ring::Batyrev, Format::Text) => format!("order: {ORDER_ID}\n"),
        _ => String::new(),
    };
    Ok(Output { stdout, stderr })
}

fn compare(surface: &SurfaceArgs, factors: &str, format: Format) -> CmdResult {
    let k = surface.half()?;
    let symbols = parse_factors(factors)?;
    let report = compare_rings(k, &classes(&symbols, 2 * k))?;
    let names: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
    let out = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("json");
            v["surface"] = json!(format!("F{}", 2 * k));
            v["order"] = json!(ORDER_ID);
            v["factor_symbols"] = json!(names);
            pretty(&v)
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "surface F{} factors {}", 2 * k, names.join(",")).unwrap();
            writeln!(s, "qh          {}", report.qh_classical_basis).unwrap();
            writeln!(s, "qh-star     {}", report.qh_normal_form).unwrap();
            writeln!(s, "batyrev     {}", report.batyrev_result).unwrap();
            writeln!(s, "discrepancy {}", report.discrepancy).unwrap();
            for t in &report.nodal_attribution {
                let basis = crate::ring::Monomial::new(t.basis, [0, 0]);
                write!(s, "nodal class={} basis={basis} coeff={}", t.class, t.coeff).unwrap();
                if let Some(o) = &t.obstruction {
                    write!(s, " ({o})").unwrap();
                }
                s.push('\n');
            }
            writeln!(
                s,
                "batyrev-included {}",
                if report.batyrev_included { "yes" } else { "no" }
            )
            .unwrap();
            s
        }
    };
    Ok(Output::new(out))
}

fn obstruction(surface: &SurfaceArgs, class: &str, format: Format) -> CmdResult {
    let kappa = surface.kappa()?;
    let class = parse_class(class)?;
    let witness = irreducibility_obstruction(kappa, class);
    let out = match format {
        Format::Text => match &witness {
            Some(w) => format!("{w}\n"),
            None => "none\n".to_string(),
        },
        Format::Json => pretty(&json!({
            "surface": format!("F{kappa}"),
            "class": class_json(class),
            "coordinates": ray_coordinates(kappa, class),
            "obstruction": witness,
        })),
    };
    Ok(Output::new(out))
}
