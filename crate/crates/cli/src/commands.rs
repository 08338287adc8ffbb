use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use sigma_hyper::independence::{alpha_closed_form, alpha_k, alpha_k_detail, colouring_bounds};
use sigma_hyper::matching::{MatchOptions, Strategy};
use sigma_hyper::oracle::{bf_alpha_k, bf_colouring_spectrum, bf_max_intersection, bf_max_matching, OracleBudget};
use sigma_hyper::{count_edges, enumerate_edges, make_spec, verify_matching, HypergraphSpec, Matching, VertexSet};

use crate::args::{Command, OracleQuery, SpecArgs, StrategyArg};

/// What a command prints, and the exit code it asks for.
pub struct Output {
    pub json: Value,
    pub table: Vec<String>,
    pub code: u8,
}

impl Output {
    fn new(json: Value, table: Vec<String>) -> Self {
        Output { json, table, code: 0 }
    }
}

pub const EXIT_VIOLATIONS: u8 = 4;

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn inline_spec(args: &SpecArgs) -> Result<Option<HypergraphSpec>> {
    match (args.n, args.q, &args.sigma, &args.spec) {
        (Some(n), Some(q), Some(sigma), None) => Ok(Some(make_spec(n, q, sigma)?)),
        (None, None, None, Some(path)) => {
            let text = read_input(path)?;
            Ok(Some(serde_json::from_str(&text).with_context(|| format!("parsing spec {}", path.display()))?))
        }
        (None, None, None, None) => Ok(None),
        _ => bail!(InputError("give either --n, --q and --sigma, or --spec FILE".into())),
    }
}

fn require_spec(args: &SpecArgs) -> Result<HypergraphSpec> {
    inline_spec(args)?.ok_or_else(|| InputError("missing spec: give --n, --q and --sigma, or --spec FILE".into()).into())
}

/// Bad command-line input detected after parsing.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn budget() -> Result<OracleBudget> {
    let base = OracleBudget::default();
    match std::env::var("SIGMA_HYPER_BUDGET") {
        Ok(raw) => {
            let factor: u32 = raw
                .trim()
                .parse()
                .ok()
                .filter(|&f| f >= 1)
                .ok_or_else(|| InputError(format!("SIGMA_HYPER_BUDGET must be a positive integer, got {raw:?}")))?;
            Ok(base.scaled(factor))
        }
        Err(_) => Ok(base),
    }
}

fn header(spec: &HypergraphSpec) -> String {
    spec.to_string()
}

pub fn run(command: Command) -> Result<Output> {
    match command {
        Command::Alpha { spec, k, all } => alpha(&require_spec(&spec)?, k, all),
        Command::AlphaClosed { spec } => {
            let spec = require_spec(&spec)?;
            let (value, j) = alpha_closed_form(&spec);
            Ok(Output::new(
                json!({ "spec": spec, "alpha": value, "j": j }),
                vec![header(&spec), format!("alpha = {value}"), format!("maximizing j = {}", opt(j))],
            ))
        }
        Command::Bounds { spec, alpha, beta } => {
            let spec = require_spec(&spec)?;
            let b = colouring_bounds(&spec, alpha, beta)?;
            let mut value = serde_json::to_value(b)?;
            value["spec"] = json!(spec);
            value["alpha"] = json!(alpha);
            value["beta"] = json!(beta);
            Ok(Output::new(
                value,
                vec![
                    header(&spec),
                    format!("({alpha}, {beta})-colouring"),
                    format!("alpha_beta(H)   {}", b.alpha_beta_ind),
                    format!("alpha(H)        {}", b.alpha_ind),
                    format!("colours >=      {}", b.chi_lower),
                    format!("feasible        {}", b.feasible),
                ],
            ))
        }
        Command::Match { spec, strategy, permissive, emit } => {
            matching(&require_spec(&spec)?, strategy, MatchOptions { permissive }, emit)
        }
        Command::Verify { matching, spec } => verify(&matching, &spec),
        Command::Edges { spec, count: _, list, limit } => edges(&require_spec(&spec)?, list, limit),
        Command::Oracle { query } => oracle(query),
        Command::Sweep { paper_example: _, max_n, max_q } => sweep(max_n, max_q),
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

fn join(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn alpha(spec: &HypergraphSpec, k: Option<usize>, all: bool) -> Result<Output> {
    let ks: Vec<usize> = if all { (1..spec.r()).collect() } else { k.into_iter().collect() };
    let mut rows = Vec::new();
    let mut table = vec![header(spec), "k  alpha_k  profile".into()];
    for k in ks {
        let d = alpha_k_detail(spec, k)?;
        table.push(format!("{:<2} {:<8} {}", k, d.value, join(&d.profile)));
        rows.push(json!({ "k": k, "alpha_k": d.value, "profile": d.profile, "sequence": d.sequence }));
    }
    let json = if all {
        json!({ "spec": spec, "values": rows })
    } else {
        let mut row = rows.pop().expect("one k");
        row["spec"] = json!(spec);
        row
    };
    Ok(Output::new(json, table))
}

fn strategy(arg: StrategyArg) -> Strategy {
    match arg {
        StrategyArg::Auto => Strategy::Auto,
        StrategyArg::Diagonal => Strategy::Diagonal,
        StrategyArg::Rectangular => Strategy::Rectangular,
        StrategyArg::Rgood => Strategy::RGood,
        StrategyArg::Greedy => Strategy::Greedy,
    }
}

fn matching(spec: &HypergraphSpec, arg: StrategyArg, options: MatchOptions, emit: bool) -> Result<Output> {
    let report = strategy(arg).run(spec, options)?;
    let mut value = serde_json::to_value(&report)?;
    value["spec"] = json!(spec);
    if emit {
        value["matching"] = serde_json::to_value(&report.matching)?;
    }
    let mut table = vec![
        header(spec),
        format!("strategy   {}", report.strategy),
        format!("nu         {}", report.nu),
        format!("unmatched  {}", report.unmatched_count),
    ];
    table.extend(report.certificates.iter().map(|c| format!("  {:<26} {}", c.name, c.value)));
    if emit {
        for (i, edge) in report.matching.edges.iter().enumerate() {
            let parts: Vec<String> =
                edge.parts().iter().map(|p| format!("{}:{}", p.class, join(&p.rows))).collect();
            table.push(format!("  E{:<4} {}", i + 1, parts.join(" ")));
        }
    }
    Ok(Output::new(value, table))
}

fn verify(path: &Path, spec_args: &SpecArgs) -> Result<Output> {
    let text = read_input(path)?;
    let doc: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let spec = match inline_spec(spec_args)? {
        Some(spec) => spec,
        None => match doc.get("spec") {
            Some(s) => serde_json::from_value(s.clone()).context("parsing the document's spec")?,
            None => bail!(InputError("no spec given and the document has no \"spec\" field".into())),
        },
    };
    let body = doc.get("matching").cloned().unwrap_or(doc);
    let m: Matching = serde_json::from_value(body).context("parsing the matching")?;
    let report = verify_matching(&spec, &m);
    let valid = report.is_valid();
    let mut table = vec![header(&spec), format!("edges {}, valid {valid}", m.len())];
    table.extend(report.violations.iter().map(|v| format!("  {}", serde_json::to_string(v).unwrap_or_default())));
    Ok(Output {
        json: json!({ "spec": spec, "valid": valid, "edges": m.len(), "violations": report.violations }),
        table,
        code: if valid { 0 } else { EXIT_VIOLATIONS },
    })
}

fn edges(spec: &HypergraphSpec, list: bool, limit: Option<usize>) -> Result<Output> {
    let count = count_edges(spec)?;
    let mut json = json!({ "spec": spec, "count": count });
    let mut table = vec![header(spec), format!("edges {count}")];
    if list {
        let listed: Vec<_> = enumerate_edges(spec).take(limit.unwrap_or(usize::MAX)).collect();
        for e in &listed {
            let parts: Vec<String> = e.parts().iter().map(|p| format!("{}:{}", p.class, join(&p.rows))).collect();
            table.push(format!("  {}", parts.join(" ")));
        }
        json["edges"] = serde_json::to_value(&listed)?;
    }
    Ok(Output::new(json, table))
}

fn oracle(query: OracleQuery) -> Result<Output> {
    let budget = budget()?;
    Ok(match query {
        OracleQuery::Alpha { spec, k } => {
            let spec = require_spec(&spec)?;
            let value = bf_alpha_k(&spec, k, &budget)?;
            Output::new(json!({ "spec": spec, "k": k, "alpha_k": value }), vec![header(&spec), format!("alpha_{k} = {value}")])
        }
        OracleQuery::Match { spec } => {
            let spec = require_spec(&spec)?;
            let nu = bf_max_matching(&spec, &budget)?;
            Output::new(json!({ "spec": spec, "nu": nu }), vec![header(&spec), format!("nu = {nu}")])
        }
        OracleQuery::Colouring { spec, alpha, beta } => {
            let spec = require_spec(&spec)?;
            let s = bf_colouring_spectrum(&spec, alpha, beta, &budget)?;
            Output::new(
                json!({ "spec": spec, "alpha": alpha, "beta": beta, "chi": s.chi, "chi_bar": s.chi_bar }),
                vec![
                    header(&spec),
                    format!("({alpha}, {beta})-colouring"),
                    format!("chi      {}", opt(s.chi)),
                    format!("chi_bar  {}", opt(s.chi_bar)),
                ],
            )
        }
        OracleQuery::Intersection { spec, profile } => {
            let spec = require_spec(&spec)?;
            let set = VertexSet::from_profile(&spec, &profile)?;
            let value = bf_max_intersection(&spec, &set, &budget)?;
            Output::new(
                json!({ "spec": spec, "profile": profile, "max_intersection": value }),
                vec![header(&spec), format!("profile {}: max intersection {value}", join(&profile))],
            )
        }
    })
}

fn sweep(max_n: usize, max_q: usize) -> Result<Output> {
    let mut rows = Vec::new();
    let mut mismatches = 0;
    let mut table = vec!["sigma = (4,3,2)".into(), "  n   q  a6  a7  a8   closed a6 a7 a8".into()];
    for n in 3..=max_n {
        for q in 4..=max_q {
            let spec = make_spec(n, q, &[4, 3, 2])?;
            let [a6, a7, a8] = [6, 7, 8].map(|k| alpha_k(&spec, k));
            let (a6, a7, a8) = (a6?, a7?, a8?);
            let c6 = if n + 1 >= q { 2 * n } else { q + n - 1 };
            let c7 = if n >= q { 2 * n + 1 } else { 2 * q };
            let c8 = (3 * n).max(q + 2 * n - 2).max(2 * q + n - 2);
            let agree = (a6, a7, a8) == (c6, c7, c8);
            mismatches += usize::from(!agree);
            table.push(format!(
                "{n:>3} {q:>3} {a6:>3} {a7:>3} {a8:>3}   {c6:>6} {c7:>2} {c8:>2}{}",
                if agree { "" } else { "  MISMATCH" }
            ));
            rows.push(json!({
                "n": n, "q": q,
                "alpha_6": a6, "alpha_7": a7, "alpha_8": a8,
                "closed_6": c6, "closed_7": c7, "closed_8": c8,
                "agree": agree,
            }));
        }
    }
    table.push(format!("mismatches {mismatches}"));
    Ok(Output {
        json: json!({ "sigma": [4, 3, 2], "rows": rows, "mismatches": mismatches }),
        table,
        code: if mismatches == 0 { 0 } else { EXIT_VIOLATIONS },
    })
}
