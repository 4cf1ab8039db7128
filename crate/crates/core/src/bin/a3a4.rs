//! Command-line surface over the library: catalog queries, angle solving,
//! tiling verification, generation, and geometry export.

use a3a4::catalog::{
    self, antiprism_family, cuboct_family, prism_family, sporadic, Protoset, TilingCount,
};
use a3a4::error::Error;
use a3a4::geom::{export_obj, realize};
use a3a4::sphtrig::{areas, residuals, AngleTriple};
use a3a4::tiling::{
    build_named, flip_walk, icosahedral_merges, matching_count, registry_protoset,
    tiling_from_json, tiling_to_json, validate,
};
use a3a4::vertexcomb::enumerate_vertex_types;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::f64::consts::PI;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "a3a4", version, about = "Edge-to-edge spherical tilings by congruent regular triangles and congruent rhombi")]
struct Cli {
    /// Report output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Angle display units.
    #[arg(long, value_enum, default_value_t = Units::Pi)]
    units: Units,
    /// Numerical tolerance override for vertex enumeration and validation.
    #[arg(long)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Units {
    Pi,
    Radians,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog queries.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Solve family angles.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Enumerate vertex types for given angles.
    Enumerate(EnumerateArgs),
    /// Validate a tiling JSON file against a protoset.
    Verify(VerifyArgs),
    /// Generate tilings.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Export a registry tiling's spherical geometry.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// All families and sporadic rows.
    List,
    /// One protoset in full precision.
    Show { id: String },
}

#[derive(Subcommand)]
enum SolveCmd {
    Antiprism {
        #[arg(long)]
        n: u32,
    },
    Prism {
        /// Triangle angle α: a float in radians, `acos(X)`, or `X pi`.
        #[arg(long)]
        alpha: String,
    },
    Cuboct {
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
    #[arg(long)]
    gamma: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Path to a `tiling/1` JSON document.
    file: String,
    /// Protoset: a registry id, `prism@alpha=EXPR`, `cuboct@alpha=EXPR`, or
    /// `antiprism@n=N`. Defaults to the document's embedded id.
    #[arg(long)]
    protoset: Option<String>,
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// Icosahedral merge tilings with `m` rhombi.
    Merges {
        #[arg(long)]
        m: usize,
        /// Deduplicate up to icosahedral symmetry.
        #[arg(long)]
        dedup: bool,
    },
    /// The flip-family tiling reached after `k` forward flips.
    Flips {
        #[arg(long)]
        k: u32,
    },
}

#[derive(Args)]
struct ExportArgs {
    /// Registry tiling id.
    id: String,
    /// Protoset override (same syntax as `verify --protoset`).
    #[arg(long)]
    protoset: Option<String>,
    #[arg(long, value_enum, default_value_t = ExportFormat::Obj)]
    format: ExportFormat,
    /// Output path; `-` for stdout.
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ExportFormat {
    Obj,
    Json,
}

/// Parses an angle expression: a radians float, `acos(X)`, a rational
/// `P/Q` (of π when suffixed `pi`), or `X pi`.
fn parse_expr(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix("acos(").and_then(|r| r.strip_suffix(')')) {
        return Ok(parse_expr(inner)?.acos());
    }
    if let Some(x) = s.strip_suffix("pi") {
        let x = x.trim_end_matches('*').trim();
        if x.is_empty() {
            return Ok(PI);
        }
        return Ok(parse_expr(x)? * PI);
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: f64 = p.trim().parse().map_err(|_| format!("bad number {p:?}"))?;
        let q: f64 = q.trim().parse().map_err(|_| format!("bad number {q:?}"))?;
        return Ok(p / q);
    }
    s.parse().map_err(|_| format!("bad angle expression {s:?}"))
}

/// Parses a protoset spec: registry id or `family@key=value`.
fn parse_protoset(s: &str) -> Result<Protoset, String> {
    if let Some((fam, arg)) = s.split_once('@') {
        let (key, val) = arg
            .split_once('=')
            .ok_or_else(|| format!("expected {fam}@key=value, got {s:?}"))?;
        return match (fam, key) {
            ("prism", "alpha") => prism_family(parse_expr(val)?).map_err(|e| e.to_string()),
            ("cuboct", "alpha") => cuboct_family(parse_expr(val)?).map_err(|e| e.to_string()),
            ("antiprism", "n") => {
                let n = val.parse().map_err(|_| format!("bad n {val:?}"))?;
                antiprism_family(n).map_err(|e| e.to_string())
            }
            _ => Err(format!("unknown protoset spec {s:?}")),
        };
    }
    registry_protoset(s)
        .or_else(|_| sporadic(s))
        .map_err(|e| e.to_string())
}

fn angle_str(x: f64, units: Units) -> String {
    match units {
        Units::Pi => format!("{:.12}π", x / PI),
        Units::Radians => format!("{x:.12}"),
    }
}

fn protoset_json(p: &Protoset, units: Units) -> serde_json::Value {
    let conv = |x: f64| match units {
        Units::Pi => x / PI,
        Units::Radians => x,
    };
    serde_json::json!({
        "schema": "protoset/1",
        "family": p.family.label(),
        "units": if units == Units::Pi { "pi" } else { "radians" },
        "alpha": conv(p.angles.alpha),
        "beta": conv(p.angles.beta),
        "gamma": conv(p.angles.gamma),
        "a": conv(p.a.a),
        "residuals": { "r1": residuals(&p.angles).0, "r2": residuals(&p.angles).1 },
        "expected_avcs": p.expected_avcs.iter().map(|(avc, c)| serde_json::json!({
            "avc": avc.iter().map(|(t, n)| format!("{n}{t}")).collect::<Vec<_>>(),
            "tilings": match c { TilingCount::Known(k) => serde_json::json!(k),
                                 TilingCount::Unknown => serde_json::json!("unknown") },
        })).collect::<Vec<_>>(),
    })
}

fn show_protoset(p: &Protoset, format: Format, units: Units) {
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&protoset_json(p, units)).unwrap()
        );
        return;
    }
    println!("family: {}", p.family.label());
    if let Some(d) = p.table_digits {
        println!(
            "table digits (π-units): {}, {}, {}; {}",
            d.alpha, d.beta, d.gamma, d.a
        );
    }
    println!("alpha = {}", angle_str(p.angles.alpha, units));
    println!("beta  = {}", angle_str(p.angles.beta, units));
    println!("gamma = {}", angle_str(p.angles.gamma, units));
    println!("a     = {}", angle_str(p.a.a, units));
    let (r1, r2) = residuals(&p.angles);
    println!("residuals: r1 = {r1:.3e}, r2 = {r2:.3e}");
    let ar = areas(&p.angles);
    println!(
        "areas: triangle {:.12}, rhombus {:.12}",
        ar.s_triangle, ar.s_rhombus
    );
    for (avc, count) in &p.expected_avcs {
        let terms: Vec<String> = avc.iter().map(|(t, n)| format!("{n}{t}")).collect();
        let c = match count {
            TilingCount::Known(k) => k.to_string(),
            TilingCount::Unknown => "?".into(),
        };
        println!("avc: {{{}}} : {c} tilings", terms.join(", "));
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let units = cli.units;
    let format = cli.format;
    match cli.command {
        Command::Catalog(CatalogCmd::List) => {
            if format == Format::Json {
                let doc = catalog::export_json().map_err(|e| e.to_string())?;
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                return Ok(0);
            }
            println!("prism family        T(2a³,3a⁴; 6αβγ)            alpha in [arccos(1/8), π/2)");
            println!("cuboct family       T(8a³,6a⁴; 12α²βγ)          alpha in [arccos(1/3), π/2)");
            println!("antiprism family    T(2a³,(6n−3)a⁴; …)          n ≥ 3");
            println!("icosahedral merges  icosahedron with m rhombi   m = 1..9");
            println!("sporadic rows:");
            for p in catalog::all_sporadic().map_err(|e| e.to_string())? {
                let id = match &p.family {
                    catalog::Family::Sporadic { id } => id.clone(),
                    _ => "20-2m,m".into(),
                };
                let d = p
                    .table_digits
                    .map(|d| format!("{}, {}, {}; {}", d.alpha, d.beta, d.gamma, d.a))
                    .unwrap_or_default();
                println!("  {id:<10} {d}");
            }
            Ok(0)
        }
        Command::Catalog(CatalogCmd::Show { id }) => {
            let p = parse_protoset(&id)?;
            show_protoset(&p, format, units);
            Ok(0)
        }
        Command::Solve(cmd) => {
            let p = match cmd {
                SolveCmd::Antiprism { n } => antiprism_family(n),
                SolveCmd::Prism { alpha } => prism_family(parse_expr(&alpha)?),
                SolveCmd::Cuboct { alpha } => cuboct_family(parse_expr(&alpha)?),
            }
            .map_err(|e| e.to_string())?;
            show_protoset(&p, format, units);
            Ok(0)
        }
        Command::Enumerate(args) => {
            let t = AngleTriple::new(
                parse_expr(&args.alpha)?,
                parse_expr(&args.beta)?,
                parse_expr(&args.gamma)?,
            );
            let tol = cli.tol.unwrap_or(a3a4::vertexcomb::DEFAULT_VERTEX_TOL);
            let types = enumerate_vertex_types(&t, tol);
            if format == Format::Json {
                let doc = serde_json::json!({
                    "schema": "vertex-types/1",
                    "types": types.iter().map(|v| serde_json::json!({
                        "type": v.to_string(),
                        "n": [v.n1, v.n2, v.n3],
                        "degree": v.degree(),
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                for v in types {
                    println!("{v}  degree {}", v.degree());
                }
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let text =
                std::fs::read_to_string(&args.file).map_err(|e| format!("{}: {e}", args.file))?;
            let (t, doc_id) = tiling_from_json(&text)
                .or_else(|_| a3a4::geom::embedded_tiling_from_json(&text))
                .map_err(|e| e.to_string())?;
            let spec = args
                .protoset
                .or(doc_id)
                .ok_or("no --protoset given and the document carries no id")?;
            let p = parse_protoset(&spec)?;
            let tol = cli.tol.unwrap_or(1e-6);
            let report = validate(&t, &p.angles, tol);
            if format == Format::Json {
                let doc = serde_json::json!({
                    "schema": "validation/1",
                    "edge_to_edge_ok": report.edge_to_edge_ok,
                    "degree_ok": report.degree_ok,
                    "euler_ok": report.euler_ok,
                    "max_vertex_defect": report.max_vertex_defect,
                    "no_alpha3": report.no_alpha3,
                    "avc": report.avc.iter().map(|(v, n)| format!("{n}{v}")).collect::<Vec<_>>(),
                    "all_green": report.all_green(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("edge-to-edge: {}", report.edge_to_edge_ok);
                println!("degrees 3..7: {}", report.degree_ok);
                println!("euler:        {}", report.euler_ok);
                println!("max vertex defect: {:.3e}", report.max_vertex_defect);
                println!("no α³ vertex: {}", report.no_alpha3);
                let terms: Vec<String> =
                    report.avc.iter().map(|(v, n)| format!("{n}{v}")).collect();
                println!("avc: {{{}}}", terms.join(", "));
                println!("verdict: {}", if report.all_green() { "PASS" } else { "FAIL" });
            }
            Ok(if report.all_green() { 0 } else { 1 })
        }
        Command::Generate(GenerateCmd::Merges { m, dedup }) => {
            let tilings = icosahedral_merges(m, dedup).map_err(|e| e.to_string())?;
            eprintln!(
                "m = {m}: {} tilings ({}; matchings oracle: {})",
                tilings.len(),
                if dedup { "deduplicated" } else { "all matchings" },
                matching_count(m)
            );
            let entries: Vec<(String, _)> = tilings
                .into_iter()
                .enumerate()
                .map(|(i, t)| (format!("icosahedral-merge-{m}-{}", i + 1), t))
                .collect();
            println!("{}", a3a4::tiling::tilings_to_json_array(&entries));
            Ok(0)
        }
        Command::Generate(GenerateCmd::Flips { k }) => {
            let base = build_named("20,24.2").map_err(|e| e.to_string())?;
            let chain = flip_walk(&base, k).map_err(|e| e.to_string())?;
            let t = chain.last().unwrap();
            println!("{}", tiling_to_json(t, Some(&format!("20,24.2@k={k}"))));
            Ok(0)
        }
        Command::Export(args) => {
            let t = build_named(&args.id).map_err(|e| e.to_string())?;
            let p = match &args.protoset {
                Some(s) => parse_protoset(s)?,
                None => registry_protoset(&args.id).map_err(|e| e.to_string())?,
            };
            let tol = cli.tol.unwrap_or(1e-7);
            let emb = match realize(&t, &p, tol) {
                Ok(e) => e,
                Err(e @ Error::ClosureFailure { .. }) => {
                    eprintln!("{e}");
                    return Ok(1);
                }
                Err(e) => return Err(e.to_string()),
            };
            let payload = match args.format {
                ExportFormat::Obj => export_obj(&emb),
                ExportFormat::Json => a3a4::geom::export_json(&emb, Some(&args.id)),
            };
            if args.out == "-" {
                print!("{payload}");
            } else {
                std::fs::write(&args.out, payload).map_err(|e| format!("{}: {e}", args.out))?;
                eprintln!(
                    "wrote {} ({} vertices, defect {:.3e})",
                    args.out,
                    emb.positions.len(),
                    emb.closure_defect
                );
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
