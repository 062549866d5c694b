use std::collections::BTreeMap;
use std::time::Instant;

use liecoh_core::catalog::{self, CatalogEntry, Recipe, RowReport, TableReport};
use liecoh_core::cohomology::{
    betti_numbers_with, hochschild_serre_adjoint, invariant_cohomology, les_report, sl2_factorization, BettiTable,
    RankMethod, RankSource,
};
use liecoh_core::lie::{center, is_nilpotent, is_perfect, LieAlgebra, Representation};
use liecoh_core::sl2::{
    c_coefficients, exterior_power_decomposition, lambda3_self_multiplicity, lambda4_multiplicity, multiplicity_n,
    partition_count, ExteriorMethod,
};
use liecoh_core::subsets::binomial;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{
    AlgebraSource, CatalogCommand, Cli, CohomologyArgs, Command, DecomposeArgs, InvariantArgs, LesArgs, Method,
    ModuleKind, MultiplicityQuery, Plethysm, TableArgs, TableFormat, TextFormat,
};
use crate::file;
use crate::select::{SelectError, Selector};
use crate::table;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

impl From<SelectError> for CliError {
    fn from(e: SelectError) -> Self {
        match e {
            SelectError::Malformed(_) => CliError::Usage(e.to_string()),
            other => domain(other),
        }
    }
}

/// How many worker threads table rows may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    /// Rayon's default pool.
    Default,
    Sequential,
    Fixed(usize),
}

impl Threads {
    /// Reads a `LIECOH_THREADS` value; `0` means sequential.
    pub fn parse(value: Option<&str>) -> Result<Threads, CliError> {
        match value.map(str::trim) {
            None | Some("") => Ok(Threads::Default),
            Some(v) => match v.parse::<usize>() {
                Ok(0) => Ok(Threads::Sequential),
                Ok(n) => Ok(Threads::Fixed(n)),
                Err(_) => Err(CliError::Usage(format!("LIECOH_THREADS must be a nonnegative integer, got {v:?}"))),
            },
        }
    }

    fn map<T, R, F>(self, items: &[T], f: F) -> Result<Vec<R>, CliError>
    where
        T: Sync,
        R: Send,
        F: Fn(usize, &T) -> R + Sync + Send,
    {
        match self {
            Threads::Sequential => Ok(items.iter().enumerate().map(|(i, t)| f(i, t)).collect()),
            Threads::Default => Ok(items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()),
            Threads::Fixed(n) => {
                let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(domain)?;
                Ok(pool.install(|| items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect()))
            }
        }
    }
}

/// Runs `f` with the rank method selected on the command line. `salt`
/// separates the prime streams of independent computations.
fn with_rank_method<T>(cli: &Cli, salt: u64, f: impl FnOnce(&mut RankMethod<'_>) -> T) -> T {
    if cli.fast_rank {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed.wrapping_add(salt));
        f(&mut RankMethod::Modular(&mut rng))
    } else {
        f(&mut RankMethod::Exact)
    }
}

fn select(source: &AlgebraSource) -> Result<LieAlgebra, CliError> {
    let selector = match (&source.algebra, &source.file) {
        (Some(label), None) => Selector::parse(label)?,
        (None, Some(path)) => Selector::from_file(path),
        _ => return Err(CliError::Usage("give exactly one of --algebra and --file".into())),
    };
    Ok(selector.build()?)
}

fn number(v: impl TryInto<i64> + TryInto<u64> + ToString + Copy) -> Value {
    if let Ok(x) = TryInto::<u64>::try_into(v) {
        json!(x)
    } else if let Ok(x) = TryInto::<i64>::try_into(v) {
        json!(x)
    } else {
        json!(v.to_string())
    }
}

fn source_name(s: RankSource) -> &'static str {
    match s {
        RankSource::Exact => "exact",
        RankSource::Modular => "modular",
        RankSource::Assembled => "assembled",
    }
}

pub fn betti_json(t: &BettiTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| json!({ "degree": r.degree, "cochain_dim": r.cochain_dim, "rank": r.rank, "dim": r.dim }))
        .collect();
    let euler = if t.is_complete() { number(t.euler_characteristic()) } else { Value::Null };
    json!({
        "algebra": t.algebra,
        "module": t.module,
        "source": source_name(t.source),
        "top_degree": t.top_degree,
        "dims": t.dims(),
        "rows": rows,
        "euler_characteristic": euler,
    })
}

/// Output of one command: a JSON record, or preformatted text.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record { command: &'static str, parameters: Value, result: Value },
    Text(String),
}

impl Output {
    fn record(command: &'static str, parameters: Value, result: Value) -> Output {
        Output::Record { command, parameters, result }
    }

    /// The document written to standard output.
    pub fn render(&self, elapsed_ms: Option<u128>) -> String {
        match self {
            Output::Text(t) => t.clone(),
            Output::Record { command, parameters, result } => {
                let mut doc = json!({ "command": command, "parameters": parameters, "result": result });
                if let Some(ms) = elapsed_ms {
                    doc["elapsed_ms"] = number(ms);
                }
                let mut text = serde_json::to_string_pretty(&doc).expect("values serialize");
                text.push('\n');
                text
            }
        }
    }
}

/// Executes a parsed command line and returns the standard-output document.
pub fn run(cli: &Cli, threads: Threads) -> Result<String, CliError> {
    let start = Instant::now();
    let output = execute(cli, threads)?;
    let elapsed = start.elapsed();
    log::info!("finished in {:.3} s", elapsed.as_secs_f64());
    Ok(output.render(cli.timing.then_some(elapsed.as_millis())))
}

pub fn execute(cli: &Cli, threads: Threads) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate { file } => {
            let g = file::load(file).map_err(domain)?;
            let result = json!({
                "name": g.name(),
                "dim": g.dim(),
                "nonzero_brackets": g.nonzero_brackets().count(),
                "perfect": is_perfect(&g),
                "nilpotent": is_nilpotent(&g),
                "center_dim": center(&g).len(),
            });
            Ok(Output::record("validate", json!({ "file": file.display().to_string() }), result))
        }
        Command::Cohomology(args) => cohomology(cli, args),
        Command::InvariantCohomology(args) => invariant(args),
        Command::Decompose(args) => decompose(args),
        Command::Multiplicity(q) => Ok(multiplicity(q)),
        Command::LesReport(args) => les(args),
        Command::Table(args) => table_command(cli, args, threads),
        Command::Catalog(CatalogCommand::List) => Ok(Output::record("catalog list", json!({}), catalog_list())),
        Command::Catalog(CatalogCommand::Build { label, out }) => {
            let entry = catalog::lookup(label).map_err(domain)?;
            let g = catalog::build_entry(entry).map_err(domain)?;
            file::save(&g, out).map_err(domain)?;
            let result =
                json!({ "key": entry.key(), "label": entry.label, "dim": g.dim(), "out": out.display().to_string() });
            Ok(Output::record("catalog build", json!({ "label": label }), result))
        }
    }
}

fn source_json(s: &AlgebraSource) -> Value {
    json!({ "algebra": s.algebra, "file": s.file.as_ref().map(|p| p.display().to_string()) })
}

fn cohomology(cli: &Cli, args: &CohomologyArgs) -> Result<Output, CliError> {
    let g = select(&args.source)?;
    let max = args.max_degree.unwrap_or(g.dim());
    let degrees = args.min_degree..=max;
    let table = match args.method {
        Method::Direct => {
            let module = match args.module {
                ModuleKind::Adjoint => Representation::adjoint(&g),
                ModuleKind::Trivial => Representation::trivial(&g, 1),
            };
            with_rank_method(cli, 0, |m| betti_numbers_with(&g, &module, degrees, m)).map_err(domain)?
        }
        Method::HochschildSerre if args.module == ModuleKind::Adjoint => {
            hochschild_serre_adjoint(&g, degrees).map_err(domain)?
        }
        Method::HochschildSerre => {
            return Err(CliError::Usage("the hochschild-serre method supports the adjoint module only".into()))
        }
    };
    let mut parameters = source_json(&args.source);
    parameters["module"] = json!(match args.module {
        ModuleKind::Adjoint => "adjoint",
        ModuleKind::Trivial => "trivial",
    });
    parameters["min_degree"] = json!(args.min_degree);
    parameters["max_degree"] = json!(max);
    parameters["method"] = json!(match args.method {
        Method::Direct => "direct",
        Method::HochschildSerre => "hochschild-serre",
    });
    parameters["fast_rank"] = json!(cli.fast_rank);
    Ok(Output::record("cohomology", parameters, betti_json(&table)))
}

fn invariant(args: &InvariantArgs) -> Result<Output, CliError> {
    let g = select(&args.source)?;
    let f = sl2_factorization(&g).map_err(domain)?;
    let max = args.max_degree.unwrap_or(f.radical.dim());
    let table = invariant_cohomology(&f.radical, &f.module, &f.action, 0..=max).map_err(domain)?;
    let mut parameters = source_json(&args.source);
    parameters["max_degree"] = json!(max);
    let mut result = betti_json(&table);
    result["radical_dim"] = json!(f.radical.dim());
    Ok(Output::record("invariant-cohomology", parameters, result))
}

fn decompose(args: &DecomposeArgs) -> Result<Output, CliError> {
    let method = match args.method {
        Plethysm::Formula => ExteriorMethod::Formula,
        Plethysm::Brute => ExteriorMethod::Brute,
    };
    let d = exterior_power_decomposition(args.of, args.exterior, method).map_err(domain)?;
    if args.format == TextFormat::Text {
        return Ok(Output::Text(format!("{d}\n")));
    }
    let components: Vec<Value> = d.iter().map(|(m, c)| json!({ "highest_weight": m, "multiplicity": c })).collect();
    let result = json!({
        "decomposition": d.to_string(),
        "dim": d.dim(),
        "binomial": binomial(args.of + 1, args.exterior),
        "components": components,
    });
    let method = match args.method {
        Plethysm::Formula => "formula",
        Plethysm::Brute => "brute",
    };
    Ok(Output::record("decompose", json!({ "exterior": args.exterior, "of": args.of, "method": method }), result))
}

fn multiplicity(q: &MultiplicityQuery) -> Output {
    let (parameters, result) = match *q {
        MultiplicityQuery::N { j, k, n } => {
            (json!({ "query": "N", "j": j, "k": k, "n": n }), json!({ "value": number(multiplicity_n(j, k, n)) }))
        }
        MultiplicityQuery::P { j, k, n } => {
            (json!({ "query": "p", "j": j, "k": k, "n": n }), json!({ "value": number(partition_count(j, k, n)) }))
        }
        MultiplicityQuery::C { up_to } => {
            let values: Vec<Value> = c_coefficients(up_to).into_iter().map(number).collect();
            (json!({ "query": "c", "up_to": up_to }), json!({ "values": values }))
        }
        MultiplicityQuery::Lambda3Self { m } => {
            (json!({ "query": "lambda3-self", "m": m }), json!({ "value": lambda3_self_multiplicity(m) }))
        }
        MultiplicityQuery::Lambda4 { ell, k } => (
            json!({ "query": "lambda4", "ell": ell, "k": k }),
            json!({ "value": number(lambda4_multiplicity(ell, k)) }),
        ),
    };
    Output::record("multiplicity", parameters, result)
}

fn les(args: &LesArgs) -> Result<Output, CliError> {
    let report = les_report(args.m, args.max_degree).map_err(domain)?;
    let rows: Vec<Value> = report
        .shown()
        .iter()
        .map(|r| json!({ "degree": r.degree, "radical": r.radical, "adjoint": r.adjoint, "quotient": r.quotient }))
        .collect();
    let odd = report.odd.as_ref().map_or(Value::Null, |o| {
        let four: Vec<Value> = o.four_term.iter().map(|&(k, s)| json!({ "degree": k, "alternating_sum": s })).collect();
        json!({ "vanishing": o.vanishing, "four_term": four })
    });
    let result = json!({
        "rows": rows,
        "alternating_sum": report.alternating_sum,
        "odd": odd,
        "holds": report.holds(),
    });
    Ok(Output::record("les-report", json!({ "m": args.m, "max_degree": args.max_degree }), result))
}

fn table_command(cli: &Cli, args: &TableArgs, threads: Threads) -> Result<Output, CliError> {
    let mut external = BTreeMap::new();
    if let Some(path) = &args.external {
        let g = file::load(path).map_err(domain)?;
        let key = catalog::table_entries().find(|e| e.is_external()).map(CatalogEntry::key).expect("one external row");
        external.insert(key.to_string(), g);
    }
    let entries: Vec<&'static CatalogEntry> = catalog::table_entries().collect();
    let rows: Vec<RowReport> = threads.map(&entries, |i, e| {
        with_rank_method(cli, i as u64, |m| catalog::verify_entry(e, external.get(e.key()), m))
    })?;
    let report = TableReport { rows };
    Ok(match args.format {
        TableFormat::Json => {
            let parameters = json!({ "external": args.external.as_ref().map(|p| p.display().to_string()), "fast_rank": cli.fast_rank });
            Output::record("table", parameters, table::json_rows(&report))
        }
        TableFormat::Csv => Output::Text(table::csv(&report)),
        TableFormat::Latex => Output::Text(table::latex(&report)),
    })
}

fn catalog_list() -> Value {
    let entries: Vec<Value> = catalog::entries()
        .iter()
        .map(|e| {
            json!({
                "key": e.key(),
                "keys": e.keys,
                "label": e.label,
                "algebra": e.name,
                "dim": e.dim,
                "recipe": if e.recipe == Recipe::External { "external" } else { "built-in" },
                "in_table": e.in_table,
                "expected": { "h0": e.expected.h0, "h1": e.expected.h1, "h2": e.expected.h2 },
            })
        })
        .collect();
    json!({ "entries": entries })
}
