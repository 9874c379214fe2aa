use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use lieindex::catalog::{self, catalog_get, default_case_ids, manifest, CaseId};
use lieindex::error::Error;
use lieindex::index::{index_bbw, index_product, IndexInput};
use lieindex::obstruction::{check_obstruction, checked_summand_index, serialize_bigint};
use lieindex::parse::parse_weight_for;
use lieindex::reproduce::run_battery;
use lieindex::reps::{
    dominant_multiplicities, tensor_decompose, weight_multiplicities, IrrepLabel,
};
use lieindex::roots::{RootSystem, SimpleType};
use lieindex::weight::{rational_string, Weight};

const EXIT_USAGE: u8 = 64;
const EXIT_MISMATCH: u8 = 2;
const EXIT_FAILURE: u8 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "lieindex",
    version,
    about = "Exact root systems, characters and twisted Dirac indices"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the positive roots, simple roots and rho of a simple type.
    Roots { r#type: String },
    /// Weyl dimension of an irreducible representation.
    Dim { r#type: String, weight: String },
    /// Weight multiplicities of an irreducible representation.
    Mult {
        r#type: String,
        weight: String,
        /// Only list dominant weights.
        #[arg(long)]
        dominant: bool,
    },
    /// Decompose a tensor product of two irreducibles.
    Tensor {
        r#type: String,
        w1: String,
        w2: String,
    },
    /// Twisted Dirac index for G, rho_K and mu, by both routes.
    Index {
        #[arg(long = "g")]
        g: String,
        #[arg(long = "rho-k")]
        rho_k: String,
        #[arg(long)]
        mu: String,
    },
    /// Run the obstruction criterion on a catalog space.
    Check { case: String, params: Vec<u32> },
    /// Index of Sym^(n-2) H ⊗ TM on a quaternion-Kähler symmetric space.
    Wolf { case: String, n: u32 },
    /// List the catalog; optionally write the JSON manifest.
    Catalog {
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Run the reference battery; exits 2 on any mismatch.
    Reproduce,
}

enum Failure {
    Usage(String),
    Mismatch,
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownCase(_)
            | Error::InvalidParams { .. }
            | Error::Parse { .. }
            | Error::LengthMismatch { .. }
            | Error::UnsupportedType { .. }
            | Error::NotDominant { .. }
            | Error::SystemMismatch { .. } => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn system(label: &str) -> Result<RootSystem, Error> {
    RootSystem::build(label.parse::<SimpleType>()?)
}

fn irrep(label: &str, weight: &str) -> Result<IrrepLabel, Error> {
    let g = system(label)?;
    let w = parse_weight_for(weight, g.ambient_rank())?;
    IrrepLabel::new(g, w)
}

#[derive(Serialize)]
struct RootsOut {
    r#type: String,
    ambient_rank: usize,
    rho: Weight,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
}

fn cmd_roots(label: &str, fmt: Format) -> Outcome {
    let g = system(label)?;
    let out = RootsOut {
        r#type: g.label().to_string(),
        ambient_rank: g.ambient_rank(),
        rho: g.half_sum_positive_roots(),
        simple_roots: g.simple_roots().to_vec(),
        positive_roots: g.positive_roots().to_vec(),
    };
    if fmt == Format::Json {
        return Ok(to_json(&out));
    }
    let mut s = String::new();
    let _ = writeln!(s, "type: {}", out.r#type);
    let _ = writeln!(s, "positive roots: {}", out.positive_roots.len());
    let _ = writeln!(s, "rho: {}", out.rho);
    let _ = writeln!(s, "simple roots:");
    for r in &out.simple_roots {
        let _ = writeln!(s, "  {r}");
    }
    let _ = writeln!(s, "positive roots:");
    for r in &out.positive_roots {
        let _ = writeln!(s, "  {r}");
    }
    Ok(s)
}

#[derive(Serialize)]
struct DimOut {
    r#type: String,
    highest_weight: Weight,
    #[serde(serialize_with = "serialize_bigint")]
    dim: BigInt,
}

fn cmd_dim(label: &str, weight: &str, fmt: Format) -> Outcome {
    let r = irrep(label, weight)?;
    let out = DimOut {
        r#type: r.system().label().to_string(),
        highest_weight: r.highest_weight().clone(),
        dim: r.dim(),
    };
    Ok(match fmt {
        Format::Json => to_json(&out),
        Format::Text => format!("{}\n", out.dim),
    })
}

#[derive(Serialize)]
struct WeightCount {
    weight: Weight,
    multiplicity: u64,
}

fn aligned(rows: &[(String, String)]) -> String {
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(a, b)| format!("{a:<w$}  {b:>4}\n"))
        .collect()
}

fn cmd_mult(label: &str, weight: &str, dominant: bool, fmt: Format) -> Outcome {
    let r = irrep(label, weight)?;
    let rows: Vec<WeightCount> = if dominant {
        dominant_multiplicities(&r)
            .into_iter()
            .map(|(weight, multiplicity)| WeightCount {
                weight,
                multiplicity,
            })
            .collect()
    } else {
        weight_multiplicities(&r)
            .iter()
            .map(|(w, m)| WeightCount {
                weight: w.clone(),
                multiplicity: m,
            })
            .collect()
    };
    Ok(match fmt {
        Format::Json => to_json(&rows),
        Format::Text => aligned(
            &rows
                .iter()
                .map(|c| (c.weight.to_string(), c.multiplicity.to_string()))
                .collect::<Vec<_>>(),
        ),
    })
}

#[derive(Serialize)]
struct TensorPart {
    weight: Weight,
    multiplicity: u64,
    #[serde(serialize_with = "serialize_bigint")]
    dim: BigInt,
}

fn cmd_tensor(label: &str, w1: &str, w2: &str, fmt: Format) -> Outcome {
    let a = irrep(label, w1)?;
    let b = irrep(label, w2)?;
    let parts: Vec<TensorPart> = tensor_decompose(&a, &b)?
        .iter()
        .map(|(w, m)| TensorPart {
            weight: w.clone(),
            multiplicity: m,
            dim: lieindex::reps::weyl_dim_of(a.system(), w).expect("dominant summand"),
        })
        .collect();
    if fmt == Format::Json {
        return Ok(to_json(&parts));
    }
    let ww = parts
        .iter()
        .map(|p| p.weight.to_string().len())
        .max()
        .unwrap_or(0);
    Ok(parts
        .iter()
        .map(|p| {
            format!(
                "{:<ww$}  x{}  dim {}\n",
                p.weight.to_string(),
                p.multiplicity,
                p.dim
            )
        })
        .collect())
}

#[derive(Serialize)]
struct IndexOut {
    g: String,
    rho_g: Weight,
    rho_k: Weight,
    mu: Weight,
    index_product: String,
    #[serde(serialize_with = "serialize_opt_bigint")]
    index_bbw: Option<BigInt>,
    routes_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn serialize_opt_bigint<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => serialize_bigint(b, s),
        None => s.serialize_none(),
    }
}

fn cmd_index(g: &str, rho_k: &str, mu: &str, fmt: Format) -> Outcome {
    let g = system(g)?;
    let n = g.ambient_rank();
    let input = IndexInput::new(g, parse_weight_for(rho_k, n)?, parse_weight_for(mu, n)?)?;
    let product = index_product(&input);
    let (bbw, note) = match index_bbw(&input) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let agree = bbw
        .as_ref()
        .is_some_and(|b| product.is_integer() && &product.to_integer() == b);
    let out = IndexOut {
        g: input.g_roots.label().to_string(),
        rho_g: input.rho_g.clone(),
        rho_k: input.rho_k.clone(),
        mu: input.mu.clone(),
        index_product: rational_string(&product),
        index_bbw: bbw,
        routes_agree: agree,
        note,
    };
    if fmt == Format::Json {
        return Ok(to_json(&out));
    }
    let mut s = String::new();
    let _ = writeln!(s, "product formula: {product}");
    match &out.index_bbw {
        Some(v) => {
            let _ = writeln!(s, "dominance route: {v}");
        }
        None => {
            let _ = writeln!(
                s,
                "dominance route: undefined ({})",
                out.note.as_deref().unwrap_or("")
            );
        }
    }
    let _ = writeln!(s, "routes agree: {}", if agree { "yes" } else { "no" });
    Ok(s)
}

fn cmd_check(name: &str, params: &[u32], fmt: Format) -> Outcome {
    let case = catalog_get(CaseId::parse(name, params)?)?;
    let report = check_obstruction(&case)?;
    Ok(match fmt {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    })
}

#[derive(Serialize)]
struct WolfSummand {
    weight: Weight,
    #[serde(serialize_with = "serialize_bigint")]
    index: BigInt,
}

#[derive(Serialize)]
struct WolfOut {
    case: String,
    summands: Vec<WolfSummand>,
    #[serde(serialize_with = "serialize_bigint")]
    total_index: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    expected: BigInt,
}

fn cmd_wolf(name: &str, n: u32, fmt: Format) -> Outcome {
    let id = CaseId::parse(name, &[n])?;
    if !matches!(id, CaseId::HpN { .. } | CaseId::Gr2Cn2 { .. }) {
        return Err(Failure::Usage(format!(
            "{name} is not a quaternion-Kähler family (use hp or gr2)"
        )));
    }
    let case = catalog_get(id)?;
    let summands = catalog::wolf_space_twist_summands(&case)?
        .iter()
        .map(|r| {
            let w = r.highest_weight().clone();
            checked_summand_index(&case, &w).map(|index| WolfSummand { weight: w, index })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let total: BigInt = summands.iter().map(|s| &s.index).sum();
    let expected = -BigInt::from(case.metadata.b0 + case.metadata.b2);
    let out = WolfOut {
        case: case.name(),
        summands,
        total_index: total,
        expected,
    };
    let text = match fmt {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "case: {}", out.case);
            for sm in &out.summands {
                let _ = writeln!(s, "  {}  {:>3}", sm.weight, sm.index);
            }
            let _ = writeln!(s, "{}", out.total_index);
            s
        }
    };
    if out.total_index != out.expected {
        eprintln!(
            "expected -(b2 + b0) = {}, computed {}",
            out.expected, out.total_index
        );
        print!("{text}");
        return Err(Failure::Mismatch);
    }
    Ok(text)
}

fn cmd_catalog(manifest_path: Option<&PathBuf>, fmt: Format) -> Outcome {
    let cases = default_case_ids()
        .into_iter()
        .map(catalog_get)
        .collect::<Result<Vec<_>, Error>>()?;
    let records = manifest(&cases);
    if let Some(path) = manifest_path {
        std::fs::write(path, to_json(&records))
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display())))?;
    }
    if fmt == Format::Json {
        return Ok(to_json(&records));
    }
    let nw = records.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let gw = records.iter().map(|r| r.g.len()).max().unwrap_or(0);
    let kw = records.iter().map(|r| r.k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for r in &records {
        let _ = writeln!(
            s,
            "{:<nw$}  {:<gw$}  {:<kw$}  dim {:>3}  spin {:<3}  twist {}",
            r.name,
            r.g,
            r.k,
            r.metadata.dimension,
            if r.metadata.is_spin { "yes" } else { "no" },
            r.twist
        );
    }
    Ok(s)
}

fn cmd_reproduce(fmt: Format) -> Outcome {
    let checks = run_battery();
    let failed = checks.iter().filter(|c| !c.pass).count();
    let text = match fmt {
        Format::Json => to_json(&checks),
        Format::Text => {
            let aw = checks
                .iter()
                .map(|c| c.anchor.chars().count())
                .max()
                .unwrap_or(0);
            let mut s = String::new();
            for c in &checks {
                let pad = aw - c.anchor.chars().count();
                let _ = writeln!(
                    s,
                    "{}  {}{}  expected {}  computed {}",
                    if c.pass { "ok  " } else { "FAIL" },
                    c.anchor,
                    " ".repeat(pad),
                    c.expected,
                    c.computed
                );
            }
            let _ = writeln!(s, "{} checks, {} failed", checks.len(), failed);
            s
        }
    };
    if failed > 0 {
        print!("{text}");
        return Err(Failure::Mismatch);
    }
    Ok(text)
}

fn run(cli: Cli) -> Outcome {
    let fmt = if cli.json { Format::Json } else { cli.format };
    match &cli.command {
        Command::Roots { r#type } => cmd_roots(r#type, fmt),
        Command::Dim { r#type, weight } => cmd_dim(r#type, weight, fmt),
        Command::Mult {
            r#type,
            weight,
            dominant,
        } => cmd_mult(r#type, weight, *dominant, fmt),
        Command::Tensor { r#type, w1, w2 } => cmd_tensor(r#type, w1, w2, fmt),
        Command::Index { g, rho_k, mu } => cmd_index(g, rho_k, mu, fmt),
        Command::Check { case, params } => cmd_check(case, params, fmt),
        Command::Wolf { case, n } => cmd_wolf(case, *n, fmt),
        Command::Catalog { manifest } => cmd_catalog(manifest.as_ref(), fmt),
        Command::Reproduce => cmd_reproduce(fmt),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `lieindex --help` for usage");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
