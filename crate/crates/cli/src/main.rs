use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::json;

use g2cells::cell::{self, DominantWeight, LowestCell, W0Index};
use g2cells::kl::{cache_info, CacheInfo};
use g2cells::rep::{self, Weight};
use g2cells::weyl::bruhat_leq;
use g2cells::{Error, GroupElement, KlConfig, KlEngine, OutputFormat, RunConfig, VERSION};

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_INVARIANT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "g2cells", version, about = "Kazhdan-Lusztig computations for the affine Weyl group of type G2")]
struct Cli {
    /// KL cache file, loaded before and written after KL computations.
    #[arg(long, global = true, env = "G2CELLS_CACHE")]
    cache: Option<PathBuf>,

    /// Output format: text, json, csv or latex.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Longest element the engine will index.
    #[arg(long, global = true, default_value_t = 40)]
    max_length: usize,

    /// Cap on the support of intermediate products.
    #[arg(long, global = true, default_value_t = 20_000)]
    max_support: usize,

    /// Worker threads for table commands.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Largest n_alpha in the mu-table sweep.
    #[arg(long, global = true, default_value_t = 1)]
    bound_a: u32,

    /// Largest n_beta in the mu-table sweep.
    #[arg(long, global = true, default_value_t = 1)]
    bound_b: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical reduced word and length.
    Reduce { word: String },
    /// Length of the element.
    Length { word: String },
    /// Whether u <= w in the Bruhat order.
    Bruhat { u: String, w: String },
    /// The Kazhdan-Lusztig polynomial P_{u,w} in q.
    Klpoly { u: String, w: String },
    /// Leading coefficient mu(u, w).
    Mu { u: String, w: String },
    /// C_x C_y in the canonical basis.
    Cproduct { x: String, y: String },
    /// Decomposition d_u t_λ w0 d_v^{-1} in the lowest cell.
    Cell { word: String },
    /// The 144-pair delta table.
    DeltaTable,
    /// mu on pairs of one left cell of c0 with bounded weights.
    MuTable,
    /// Decomposition of V(λ) ⊗ V(λ').
    Repmult { lambda: String, lambda2: String },
    /// Inspect or remove the KL cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    Info,
    Clear,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::NotInLowestCell(_) => EXIT_PARSE,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        e if e.is_invariant() => EXIT_INVARIANT,
        _ => EXIT_OTHER,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn config_of(cli: &Cli) -> g2cells::Result<RunConfig> {
    let config = RunConfig {
        cache_path: cli.cache.clone(),
        format: cli.format.parse()?,
        kl: KlConfig {
            max_length: cli.max_length,
            max_support: cli.max_support,
            ..KlConfig::default()
        },
        jobs: cli.jobs,
        bound_a: cli.bound_a,
        bound_b: cli.bound_b,
        ..RunConfig::default()
    };
    config.validate()?;
    Ok(config)
}

struct Session {
    config: RunConfig,
    kl: Arc<KlEngine>,
}

impl Session {
    fn open(config: RunConfig) -> g2cells::Result<Session> {
        let kl = Arc::new(KlEngine::new(config.kl.clone()));
        if let Some(p) = &config.cache_path {
            if p.exists() {
                kl.load_cache(p)?;
            }
        }
        Ok(Session { config, kl })
    }

    fn close(&self) -> g2cells::Result<()> {
        if let Some(p) = &self.config.cache_path {
            kl_store(&self.kl, p)?;
        }
        Ok(())
    }
}

fn kl_store(kl: &KlEngine, path: &std::path::Path) -> g2cells::Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    kl.store_cache(path)?;
    Ok(())
}

fn parse(word: &str) -> g2cells::Result<GroupElement> {
    GroupElement::parse(word)
}

fn digits_or_e(g: &GroupElement) -> String {
    if g.is_identity() {
        "e".into()
    } else {
        g.digits()
    }
}

fn header(config: &RunConfig, comment: &str) -> String {
    format!(
        "{comment} g2cells {VERSION} v0=(1/4,1/4) {}\n",
        config.fingerprint()
    )
}

fn meta(config: &RunConfig) -> serde_json::Value {
    json!({
        "version": VERSION,
        "v0": "(1/4,1/4)",
        "config": config.fingerprint(),
    })
}

fn scalar(format: OutputFormat, key: &str, value: serde_json::Value, text: String) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", json!({ key: value })),
        _ => format!("{text}\n"),
    }
}

fn run(cli: Cli) -> g2cells::Result<String> {
    let config = config_of(&cli)?;
    let format = config.format;
    match &cli.command {
        Command::Reduce { word } => {
            let g = parse(word)?;
            Ok(match format {
                OutputFormat::Json => {
                    format!("{}\n", json!({"word": g.digits(), "length": g.length()}))
                }
                OutputFormat::Csv => format!("word,length\n{},{}\n", g.digits(), g.length()),
                _ => format!("{} {}\n", digits_or_e(&g), g.length()),
            })
        }
        Command::Length { word } => {
            let g = parse(word)?;
            Ok(scalar(format, "length", json!(g.length()), g.length().to_string()))
        }
        Command::Bruhat { u, w } => {
            let b = bruhat_leq(&parse(u)?, &parse(w)?);
            Ok(scalar(format, "leq", json!(b), b.to_string()))
        }
        Command::Klpoly { u, w } => {
            let (u, w) = (parse(u)?, parse(w)?);
            let s = Session::open(config)?;
            let p = s.kl.kl_poly(&u, &w)?;
            s.close()?;
            let text = p.q_text().unwrap_or_else(|| p.to_string());
            Ok(scalar(format, "P", json!(text), text.clone()))
        }
        Command::Mu { u, w } => {
            let (u, w) = (parse(u)?, parse(w)?);
            let s = Session::open(config)?;
            let m = s.kl.mu(&u, &w)?;
            s.close()?;
            Ok(scalar(format, "mu", json!(m), m.to_string()))
        }
        Command::Cproduct { x, y } => {
            let (x, y) = (parse(x)?, parse(y)?);
            let s = Session::open(config)?;
            let c = s.kl.c_product(&x, &y)?;
            s.close()?;
            Ok(match format {
                OutputFormat::Json => {
                    let terms: Vec<_> = c
                        .terms()
                        .rev()
                        .map(|(z, h)| json!({"w": z.digits(), "coeff": h.quantum_text(), "v": h.to_string()}))
                        .collect();
                    format!("{}\n", json!({"terms": terms}))
                }
                OutputFormat::Csv => {
                    let mut out = String::from("w,coeff\n");
                    for (z, h) in c.terms().rev() {
                        out.push_str(&format!("{},{}\n", z.digits(), h.quantum_text()));
                    }
                    out
                }
                _ => format!("{c}\n"),
            })
        }
        Command::Cell { word } => {
            let g = parse(word)?;
            let d = cell::decompose_c0(&g)?;
            Ok(match (format, d) {
                (OutputFormat::Json, Some(d)) => format!(
                    "{}\n",
                    json!({"u": d.u.name(), "lambda": [d.lambda.n_alpha, d.lambda.n_beta], "v": d.v.name()})
                ),
                (OutputFormat::Json, None) => format!("{}\n", json!(null)),
                (_, Some(d)) => format!("{d}\n"),
                (_, None) => "none\n".into(),
            })
        }
        Command::DeltaTable => {
            let s = Session::open(config.clone())?;
            let table = config.install(|| cell::delta_table(&s.kl))??;
            s.close()?;
            Ok(match format {
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({
                        "meta": meta(&config),
                        "rows": cell::delta_table_json(&table),
                    }))
                    .expect("json")
                ),
                OutputFormat::Csv => header(&config, "#") + &cell::delta_table_csv(&table),
                OutputFormat::Latex => header(&config, "%") + &cell::delta_table_latex(&table),
                OutputFormat::Text => {
                    let mut out = header(&config, "#");
                    for r in &table {
                        out.push_str(&format!(
                            "{:>2} {:<7} {:<11} {:>2} {:<7} {:<11} {} {} {} {}\n",
                            r.u.index() + 1,
                            r.u.name(),
                            r.u.d_word(),
                            r.uprime.index() + 1,
                            r.uprime.name(),
                            r.uprime.d_word(),
                            r.delta[0],
                            r.delta[1],
                            r.delta[2],
                            r.class
                        ));
                    }
                    out
                }
            })
        }
        Command::MuTable => {
            let s = Session::open(config.clone())?;
            let lc = LowestCell::new(Arc::clone(&s.kl));
            config.install(|| lc.table().map(|_| ()))??;
            let mut weights = Vec::new();
            for a in 0..=config.bound_a {
                for b in 0..=config.bound_b {
                    weights.push(DominantWeight::new(a, b));
                }
            }
            let mut rows = Vec::new();
            for u in W0Index::all() {
                for &x in &weights {
                    for up in W0Index::all() {
                        for &xp in &weights {
                            rows.push((u, x, up, xp, lc.mu_from_parts(u, x, up, xp)?));
                        }
                    }
                }
            }
            s.close()?;
            Ok(mu_table_text(&config, &rows))
        }
        Command::Repmult { lambda, lambda2 } => {
            let l1 = Weight::parse(lambda)?;
            let l2 = Weight::parse(lambda2)?;
            let d = rep::char_product_oracle(l1, l2, config.oracle_dim_cap)?;
            if d != rep::tensor_decomposition(l1, l2)? {
                return Err(Error::Invariant(format!(
                    "Klimyk formula and character product disagree on {l1} x {l2}"
                )));
            }
            let rows: Vec<(Weight, u64, u64)> = d
                .iter()
                .rev()
                .map(|(&nu, &m)| Ok((nu, m, rep::weyl_dim(nu)?)))
                .collect::<g2cells::Result<_>>()?;
            Ok(match format {
                OutputFormat::Json => format!(
                    "{}\n",
                    json!(rows
                        .iter()
                        .map(|(nu, m, d)| json!({"weight": nu.to_string(), "mult": m, "dim": d}))
                        .collect::<Vec<_>>())
                ),
                OutputFormat::Csv => {
                    let mut out = String::from("weight_a,weight_b,mult,dim\n");
                    for (nu, m, d) in &rows {
                        out.push_str(&format!("{},{},{m},{d}\n", nu.n_alpha, nu.n_beta));
                    }
                    out
                }
                _ => rows
                    .iter()
                    .map(|(nu, m, d)| format!("{nu} mult {m} dim {d}\n"))
                    .collect(),
            })
        }
        Command::Cache { action } => {
            let path = config
                .cache_path
                .clone()
                .ok_or_else(|| Error::Parse("no cache path (use --cache or G2CELLS_CACHE)".into()))?;
            match action {
                CacheAction::Info => {
                    if !path.exists() {
                        return Ok(format!("{}: no cache\n", path.display()));
                    }
                    let CacheInfo {
                        columns,
                        entries,
                        max_length,
                    } = cache_info(&path)?;
                    Ok(match format {
                        OutputFormat::Json => format!(
                            "{}\n",
                            json!({"path": path.display().to_string(), "columns": columns, "entries": entries, "max_length": max_length})
                        ),
                        _ => format!(
                            "{}: {columns} columns, {entries} entries, longest w of length {max_length}\n",
                            path.display()
                        ),
                    })
                }
                CacheAction::Clear => {
                    if path.exists() {
                        std::fs::remove_file(&path)?;
                        Ok(format!("removed {}\n", path.display()))
                    } else {
                        Ok(format!("{}: no cache\n", path.display()))
                    }
                }
            }
        }
    }
}

type MuRow = (W0Index, DominantWeight, W0Index, DominantWeight, u64);

fn mu_table_text(config: &RunConfig, rows: &[MuRow]) -> String {
    match config.format {
        OutputFormat::Json => format!(
            "{}\n",
            json!({
                "meta": meta(config),
                "rows": rows.iter().map(|(u, x, up, xp, m)| json!({
                    "u": u.name(), "d_u": u.d_word(), "x": x.to_string(),
                    "uprime": up.name(), "d_uprime": up.d_word(), "xprime": xp.to_string(),
                    "mu": m,
                })).collect::<Vec<_>>(),
            })
        ),
        OutputFormat::Csv => {
            let mut out = header(config, "#");
            out.push_str("u_word,d_u,x_a,x_b,uprime_word,d_uprime,xprime_a,xprime_b,mu\n");
            for (u, x, up, xp, m) in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{m}\n",
                    u.name(),
                    u.d_word(),
                    x.n_alpha,
                    x.n_beta,
                    up.name(),
                    up.d_word(),
                    xp.n_alpha,
                    xp.n_beta
                ));
            }
            out
        }
        OutputFormat::Latex => {
            let mut out = header(config, "%");
            out.push_str("\\begin{tabular}{llllr}\n$d_u$ & $x$ & $d_{u'}$ & $x'$ & $\\mu$ \\\\\n\\hline\n");
            for (u, x, up, xp, m) in rows.iter().filter(|r| r.4 > 0) {
                out.push_str(&format!(
                    "${}$ & ${x}$ & ${}$ & ${xp}$ & {m} \\\\\n",
                    u.d_word(),
                    up.d_word()
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
        OutputFormat::Text => {
            let mut out = header(config, "#");
            let max = rows.iter().map(|r| r.4).max().unwrap_or(0);
            out.push_str(&format!("# pairs {} max mu {max}\n", rows.len()));
            for (u, x, up, xp, m) in rows.iter().filter(|r| r.4 > 0) {
                out.push_str(&format!("{} {x} {} {xp} {m}\n", u.d_word(), up.d_word()));
            }
            out
        }
    }
}
