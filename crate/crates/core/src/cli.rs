//! Command line surface. Every subcommand builds a `serde_json::Value`
//! (sorted keys) and prints it either as JSON or as an aligned table.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a mathematical check
//! reported a failure.

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bgg_hodge::{
    bgg_complex, claim_84_check, claim_87_check, coherent_degrees, hodge_weights, j_b, kostant_dimension_identity,
    kostant_euler_identity, kostant_mod_p, strata_dims,
};
use crate::error::Error;
use crate::hecke_params::{
    ao_predicate, ao_valuations, satake_restrict, solve_slope_system, spin_slopes, valuations_from_slopes,
    SlopeConvention, SlopeOutcome, SlopeSystem, TorusDoubleCoset,
};
use crate::root_datum::{dual_root_datum, motivic_weight, rho, rho_tilde, roots, RootDatum, Weight};
use crate::verify::run_all;
use crate::weyl::{enumerate, kostant_reps, longest_kostant, Parabolic};
use crate::weyl_modules::plethysm::{idempotent_check, weyl_lattice};
use crate::weyl_modules::tensor::{traceless_subspace, DEFAULT_TENSOR_BUDGET};
use crate::Rational;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("could not serialize report: {0}")]
    Json(#[from] serde_json::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Spin,
    Displayed,
}

#[derive(Debug, Parser)]
#[command(name = "siegel-bgg", version, about = "Weight combinatorics for GSp(2g) and GSpin(2g+1)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Upper bound on tensor dimensions and enumeration sizes.
    #[arg(long, default_value_t = DEFAULT_TENSOR_BUDGET, global = true)]
    pub budget: u128,
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    #[arg(long)]
    pub g: Option<usize>,
    /// `a_g,...,a_1` or `a_g,...,a_1;c`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Central value; defaults to `a_g + ... + a_1`.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root datum of GSp(2g) and its dual.
    Roots {
        #[arg(long)]
        g: usize,
    },
    /// The Weyl group `{±1}^g ⋊ S_g`.
    Weyl {
        #[arg(long)]
        g: usize,
    },
    /// Kostant representatives for the Siegel parabolic, or `P_r` with `--r`.
    Kostant {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// The weights `j_B`.
    Hodge(WeightArgs),
    /// BGG complex descriptor.
    Bgg {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Kostant decomposition along the boundary stratum of corank `r`.
    KostantModp {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Jump separation on single strata; all `r` when `--r` is omitted.
    Claim84 {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Jump separation along chains of strata.
    Claim87 {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Integral Weyl module as the image of a Young symmetrizer.
    Lattice {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u64,
    },
    /// Traceless tensors in `V^{⊗s}`.
    Traceless {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        s: usize,
    },
    /// Measured `Θ² - κΘ` and the splitting `ker Φ ⊕ im Ψ`.
    IdempotentCheck {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        p: u64,
    },
    /// `ord ξ_J` from `t` (display order) and `z`.
    Slopes {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Solve for `(t, z)` from slopes indexed by subset bitmask, or from `j_B`
    /// of `--lambda`.
    SolveSlopes {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        slopes: Option<String>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Spin)]
        convention: ConventionArg,
    },
    /// Ordinarity predicate `v_r = a_{r+1} + ... + a_g`.
    Ao {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, allow_hyphen_values = true)]
        valuations: Option<String>,
    },
    /// Restriction of a diagonal double coset to genus `g - r`.
    Satake {
        /// Exponents `e_1,...,e_{2g}`.
        #[arg(long, allow_hyphen_values = true)]
        diag: String,
        #[arg(long)]
        r: usize,
    },
    /// Dimensions of the boundary strata.
    Strata {
        #[arg(long)]
        g: usize,
    },
    /// Run every acceptance check.
    VerifyAll {
        #[arg(long)]
        g: Option<usize>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse and run; never exits the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((value, ok)) => {
            let stdout = match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("values serialize")),
                Format::Table => render_table(&value),
            };
            Outcome { code: if ok { 0 } else { 2 }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn to_value<T: Serialize>(v: &T) -> CliResult<Value> {
    Ok(serde_json::to_value(v)?)
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| CliError::Usage(format!("cannot parse {what} entry '{x}'"))))
        .collect()
}

fn parse_rational(s: &str) -> CliResult<Rational> {
    s.trim().parse().map_err(|_| CliError::Usage(format!("cannot parse rational '{s}'")))
}

/// `"5,5"` or `"5,5;10"`, with `--c` as an alternative central value.
pub fn parse_weight(args: &WeightArgs) -> CliResult<Weight> {
    let Some(text) = &args.lambda else {
        let g = args.g.ok_or_else(|| CliError::Usage("need --lambda or --g".into()))?;
        return Ok(Weight::new(vec![0; g], args.c.unwrap_or(0))?);
    };
    let (coords_text, central_text) = match text.split_once(';') {
        Some((a, c)) => (a, Some(c)),
        None => (text.as_str(), None),
    };
    let coords: Vec<i64> = parse_list(coords_text, "weight")?;
    if coords.is_empty() {
        return Err(Error::ZeroGenus.into());
    }
    if let Some(g) = args.g {
        if g != coords.len() {
            return Err(Error::GenusMismatch { expected: g, got: coords.len() }.into());
        }
    }
    let inline = central_text
        .map(|c| c.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("cannot parse central value '{c}'"))))
        .transpose()?;
    let central = match (inline, args.c) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::Usage(format!("central value given twice: {a} and {b}")));
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => coords.iter().sum(),
    };
    Ok(Weight::new(coords, central)?)
}

fn execute(cli: &Cli) -> CliResult<(Value, bool)> {
    match &cli.command {
        Command::Roots { g } => roots_report(*g).map(|v| (v, true)),
        Command::Weyl { g } => {
            let elements = enumerate(*g)?;
            let mut by_length = std::collections::BTreeMap::new();
            for w in &elements {
                *by_length.entry(w.length()).or_insert(0usize) += 1;
            }
            let rows: Vec<Value> =
                elements.iter().map(|w| json!({"element": w.to_string(), "length": w.length()})).collect();
            Ok((
                json!({
                    "g": g,
                    "order": elements.len(),
                    "longest": crate::weyl::WeylElement::longest(*g).to_string(),
                    "length_counts": by_length.iter().map(|(l, n)| json!({"length": l, "count": n})).collect::<Vec<_>>(),
                    "elements": rows,
                }),
                true,
            ))
        }
        Command::Kostant { g, r } => {
            let parabolic = r.map_or(Parabolic::Siegel, Parabolic::P);
            let table = kostant_reps(*g, parabolic)?;
            let mut v = to_value(&table)?;
            v["count"] = json!(table.len());
            if parabolic == Parabolic::Siegel {
                v["longest"] = json!(longest_kostant(*g)?.to_string());
            }
            Ok((v, true))
        }
        Command::Hodge(w) => {
            let lambda = parse_weight(w)?;
            let weights = hodge_weights(&lambda)?;
            let mut distinct = weights.clone();
            distinct.dedup();
            Ok((
                json!({
                    "g": lambda.genus(),
                    "lambda": lambda,
                    "weights": weights,
                    "distinct": distinct.len() == weights.len(),
                    "motivic_weight": motivic_weight(&lambda)?,
                }),
                true,
            ))
        }
        Command::Bgg { weight, p } => {
            let lambda = parse_weight(weight)?;
            let desc = bgg_complex(&lambda, *p)?;
            let ok = desc.checks.all();
            let mut v = to_value(&desc)?;
            v["coherent_degrees"] = to_value(&coherent_degrees(&lambda)?)?;
            Ok((v, ok))
        }
        Command::KostantModp { weight, r, p } => {
            let lambda = parse_weight(weight)?;
            let dec = kostant_mod_p(&lambda, *r, *p)?;
            let rows: Vec<Value> = dec
                .degrees
                .iter()
                .flat_map(|d| d.terms.iter().map(move |t| (d.degree, t)))
                .map(|(degree, t)| {
                    json!({
                        "degree": degree,
                        "element": t.element,
                        "mu_l": t.mu_l,
                        "mu_h": t.mu_h,
                        "l_dominant": t.l_dominant,
                        "h_dominant": t.h_dominant,
                    })
                })
                .collect();
            let identity = kostant_dimension_identity(&lambda, *r)?;
            Ok((
                json!({
                    "g": dec.g,
                    "r": dec.r,
                    "lambda": dec.lambda,
                    "p": dec.p,
                    "p_small": dec.p_small,
                    "all_dominant": dec.all_dominant,
                    "terms": rows,
                    "dimension_sum": identity.lhs.to_string(),
                    "weyl_dimension": identity.rhs.to_string(),
                    "dimension_sum_equals_weyl_dimension": identity.holds,
                    "euler_identity": kostant_euler_identity(&lambda, *r)?,
                }),
                dec.all_dominant,
            ))
        }
        Command::Claim84 { weight, r } => {
            let lambda = parse_weight(weight)?;
            let g = lambda.genus();
            let ranks: Vec<usize> = r.map_or_else(|| (1..=g).collect(), |r| vec![r]);
            let mut rows = Vec::new();
            let mut passes = true;
            let mut top = 0;
            for r in ranks {
                let report = claim_84_check(&lambda, r)?;
                passes &= report.passes;
                top = report.top;
                for row in report.rows {
                    let mut v = to_value(&row)?;
                    v["r"] = json!(r);
                    rows.push(v);
                }
            }
            Ok((json!({"g": g, "lambda": lambda, "top": top, "passes": passes, "rows": rows}), passes))
        }
        Command::Claim87 { weight, depth } => {
            let lambda = parse_weight(weight)?;
            let report = claim_87_check(&lambda, *depth)?;
            let ok = report.passes && report.iterated_matches_composite;
            Ok((to_value(&report)?, ok))
        }
        Command::Lattice { weight, p } => {
            let lambda = parse_weight(weight)?;
            let report = weyl_lattice(&lambda, *p, cli.budget)?;
            let ok = report.rank_matches_weyl_dimension;
            Ok((to_value(&report)?, ok))
        }
        Command::Traceless { g, s } => {
            let t = traceless_subspace(*g, *s, cli.budget)?;
            let ok = t.dim + t.insertion_rank == t.ambient_dim;
            Ok((to_value(&t)?, ok))
        }
        Command::IdempotentCheck { g, s, p } => {
            let report = idempotent_check(*g, *s, *p, cli.budget)?;
            Ok((to_value(&report)?, true))
        }
        Command::Slopes { t, z } => {
            let t: Vec<Rational> = parse_list::<String>(t, "t")?.iter().map(|x| parse_rational(x)).collect::<CliResult<_>>()?;
            let z = parse_rational(z)?;
            let sys = spin_slopes(&t, &z)?;
            let g = sys.g;
            let full = (1u32 << g) - 1;
            let two_z = z.clone() + z.clone();
            let symmetric = sys.iter().all(|(j, v)| v.clone() + sys.get(crate::hecke_params::Subset(full ^ j.0)).clone() == two_z);
            Ok((
                json!({
                    "g": g,
                    "t": t.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "z": z.to_string(),
                    "slopes": to_value(&sys)?,
                    "complementary_sums_equal_2z": symmetric,
                }),
                true,
            ))
        }
        Command::SolveSlopes { weight, slopes, convention } => solve_slopes(weight, slopes.as_deref(), *convention),
        Command::Ao { weight, valuations } => {
            let lambda = parse_weight(weight)?;
            let expected = ao_valuations(&lambda);
            let given: Vec<Rational> = match valuations {
                Some(v) => parse_list::<String>(v, "valuation")?.iter().map(|x| parse_rational(x)).collect::<CliResult<_>>()?,
                None => expected.iter().map(|&e| Rational::from_integer(e.into())).collect(),
            };
            let holds = ao_predicate(&given, &lambda)?;
            Ok((
                json!({
                    "g": lambda.genus(),
                    "lambda": lambda,
                    "valuations": given.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "expected": expected,
                    "holds": holds,
                }),
                true,
            ))
        }
        Command::Satake { diag, r } => {
            let coset = TorusDoubleCoset::new(parse_list(diag, "exponent")?)?;
            let image = satake_restrict(&coset, *r)?;
            Ok((
                json!({
                    "input": coset,
                    "r": r,
                    "image": image,
                    "is_zero": image.is_none(),
                }),
                true,
            ))
        }
        Command::Strata { g } => Ok((json!({"g": g, "dims": strata_dims(*g)}), true)),
        Command::VerifyAll { g } => {
            let report = run_all(g.unwrap_or(5));
            let ok = report.all_passed();
            Ok((to_value(&report)?, ok))
        }
    }
}

fn roots_report(g: usize) -> CliResult<Value> {
    let datum = RootDatum::symplectic(g)?;
    let dual = dual_root_datum(&datum);
    let all: Vec<Value> = roots(g)
        .iter()
        .map(|r| json!({"vector": r.vector, "coroot": r.coroot, "length": r.length, "positive": r.positive}))
        .collect();
    Ok(json!({
        "g": g,
        "datum": datum,
        "cartan": datum.cartan_matrix(),
        "dual": dual,
        "dual_cartan": dual.cartan_matrix(),
        "roots": all,
        "rho": rho(g),
        "rho_tilde": rho_tilde(g),
    }))
}

fn solve_slopes(weight: &WeightArgs, slopes: Option<&str>, convention: ConventionArg) -> CliResult<(Value, bool)> {
    let convention = match convention {
        ConventionArg::Spin => SlopeConvention::Spin,
        ConventionArg::Displayed => SlopeConvention::Displayed,
    };
    let lambda = if slopes.is_none() || weight.lambda.is_some() { Some(parse_weight(weight)?) } else { None };
    let values: Vec<Rational> = match (slopes, &lambda) {
        (Some(s), _) => parse_list::<String>(s, "slope")?.iter().map(|x| parse_rational(x)).collect::<CliResult<_>>()?,
        (None, Some(l)) => (0..1u32 << l.genus()).map(|m| Rational::from_integer(j_b(l, m).into())).collect(),
        (None, None) => unreachable!("a weight is parsed when no slopes are given"),
    };
    let n = values.len();
    if !n.is_power_of_two() || n < 2 {
        return Err(CliError::Usage(format!("{n} slopes; need 2^g, indexed by subset bitmask")));
    }
    let g = n.trailing_zeros() as usize;
    if let Some(expected) = weight.g {
        if expected != g {
            return Err(Error::GenusMismatch { expected, got: g }.into());
        }
    }
    let sys = SlopeSystem::new(g, values)?;
    let outcome = solve_slope_system(&sys, convention);
    let (names, candidate) = match &outcome {
        SlopeOutcome::Consistent { solution } => (convention, solution),
        SlopeOutcome::Inconsistent { candidate, .. } => (convention, candidate),
    };
    let (coord_key, central_key) = match names {
        SlopeConvention::Spin => ("t", "z"),
        SlopeConvention::Displayed => ("x", "y"),
    };
    let mut solution = Map::new();
    solution.insert(coord_key.into(), json!(candidate.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    solution.insert(central_key.into(), json!(candidate.central.to_string()));
    let violations = match &outcome {
        SlopeOutcome::Inconsistent { violations, .. } => to_value(violations)?,
        SlopeOutcome::Consistent { .. } => json!([]),
    };
    let mut v = json!({
        "g": g,
        "convention": convention,
        "slopes": to_value(&sys)?,
        "consistent": outcome.is_consistent(),
        "solution": Value::Object(solution),
        "violations": violations,
    });
    if let (Some(lambda), Some(sol)) = (&lambda, outcome.solution()) {
        let expected: Vec<Rational> =
            (1..=g).rev().map(|i| Rational::from_integer((-(lambda.a(i) + i as i64)).into())).collect();
        v["lambda"] = json!(lambda);
        v["coords_match_minus_a_plus_i"] = json!(sol.coords == expected);
        if convention == SlopeConvention::Spin {
            let derived = valuations_from_slopes(sol);
            v["derived_valuations"] = json!(derived.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            v["derived_valuations_satisfy_ao"] = json!(ao_predicate(&derived, lambda)?);
            let half_w = Rational::new(motivic_weight(lambda)?.into(), 2.into());
            v["z_equals_half_motivic_weight"] = json!(sol.central == half_w);
        }
    }
    Ok((v, true))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

fn grid(items: &[Value]) -> String {
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for k in item.as_object().expect("rows are objects").keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let rows: Vec<Vec<String>> =
        items.iter().map(|item| columns.iter().map(|c| item.get(c).map_or_else(String::new, cell)).collect()).collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| rows.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(&columns);
    out.push_str(&line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>()));
    for r in &rows {
        out.push_str(&line(r));
    }
    out
}

fn flatten(prefix: &str, v: &Value, scalars: &mut Vec<(String, String)>, tables: &mut Vec<(String, Vec<Value>)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, inner, scalars, tables);
            }
        }
        Value::Array(items) if is_table(v) => tables.push((prefix.to_string(), items.clone())),
        other => scalars.push((prefix.to_string(), cell(other))),
    }
}

/// Aligned key/value lines, then one grid per list of records.
pub fn render_table(v: &Value) -> String {
    if let Value::Array(items) = v {
        if is_table(v) {
            return grid(items);
        }
    }
    let mut scalars = Vec::new();
    let mut tables = Vec::new();
    flatten("", v, &mut scalars, &mut tables);
    let width = scalars.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in &scalars {
        out.push_str(&format!("{k:<width$}  {val}\n"));
    }
    for (k, items) in &tables {
        out.push_str(&format!("\n{k}:\n"));
        out.push_str(&grid(items));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json_of(args: &[&str]) -> (i32, Value) {
        let mut full = vec!["siegel-bgg"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--format", "json"]);
        let out = run(full);
        (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
    }

    #[test]
    fn weight_parsing() {
        let args = |l: &str, c: Option<i64>| WeightArgs { g: None, lambda: Some(l.into()), c };
        assert_eq!(parse_weight(&args("5,5", None)).unwrap().to_string(), "(5,5;10)");
        assert_eq!(parse_weight(&args("5,5;2", None)).unwrap().central(), 2);
        assert_eq!(parse_weight(&args("5,5", Some(4))).unwrap().central(), 4);
        assert!(matches!(parse_weight(&args("5,5;2", Some(4))), Err(CliError::Usage(_))));
        assert!(matches!(parse_weight(&args("5,5", Some(3))), Err(CliError::Library(Error::ParityViolation { .. }))));
        assert!(matches!(parse_weight(&args("5,x", None)), Err(CliError::Usage(_))));
        let zero = WeightArgs { g: Some(3), lambda: None, c: None };
        assert_eq!(parse_weight(&zero).unwrap(), Weight::zero(3));
    }

    #[test]
    fn hodge_json() {
        let (code, v) = json_of(&["hodge", "--g", "2", "--lambda", "5,5", "--c", "10"]);
        assert_eq!(code, 0);
        assert_eq!(v["weights"], json!([0, 6, 7, 13]));
    }

    #[test]
    fn solve_slopes_inconsistent() {
        let (code, v) = json_of(&["solve-slopes", "--slopes", "0,6,7,14"]);
        assert_eq!(code, 0);
        assert_eq!(v["consistent"], json!(false));
        assert_eq!(v["violations"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn table_rendering() {
        let v = json!({"b": 1, "a": "x", "rows": [{"k": 1, "v": [1, 2]}, {"k": 22}]});
        let t = render_table(&v);
        assert_eq!(t, "a  x\nb  1\n\nrows:\nk   v\n--  -----\n1   [1,2]\n22\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["siegel-bgg", "hodge", "--lambda", "1,2"]).code, 1);
        assert_eq!(run(["siegel-bgg", "nonsense"]).code, 1);
        assert_eq!(run(["siegel-bgg", "strata"]).code, 1);
        assert_eq!(run(["siegel-bgg", "--help"]).code, 0);
    }
}
