//! Command-line front end: statistics, tables, verifiers, basis expansion,
//! continued-fraction moments, and the history bijection.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use gammacf::cfrac::{
    family_derange_big_d, family_derange_small_d, family_r_euler, jf_moments, JFraction,
};
use gammacf::colored::{b_excedance_stats, colored_stats, cros_colored, ColoredPermutation};
use gammacf::laguerre::{
    history_weight_exponents, phi, phi_inverse, sigma_weight_exponents, weight_monomial_string,
    LaguerreHistory,
};
use gammacf::perm::{
    boundary_stats, crossing_stats, cyclic_stats, fmax, linear_stats, pattern_stats,
    vincular_counts, BoundaryConvention, Permutation,
};
use gammacf::poly::{expand_sz_basis, gamma_expand, IntPoly};
use gammacf::verify::{self, Budget, TableFormat, TableName};

#[derive(Parser)]
#[command(name = "gammacf", version, about = "Exact permutation statistics, gamma expansions, continued-fraction moments, and colored Laguerre histories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every statistic of a permutation or colored permutation
    Stats(StatsArgs),
    /// Emit a named coefficient table
    Table(TableArgs),
    /// Run identity verifiers
    Verify(VerifyArgs),
    /// Expand a polynomial in the gamma or SZ basis
    Expand(ExpandArgs),
    /// Continued-fraction moments of a named or custom family
    Cfrac(CfracArgs),
    /// Apply the Laguerre-history bijection or its inverse
    Bijection(BijectionArgs),
}

#[derive(Args)]
struct StatsArgs {
    /// One-line word, e.g. "9 3 7 4 6 10 5 8 1 2" or "4 7^1 2 5^1 1^2 6 3"
    #[arg(long)]
    perm: String,
    /// Color radix; omit for a plain permutation
    #[arg(long)]
    r: Option<u32>,
}

#[derive(Args)]
struct TableArgs {
    /// gamma_q | inv_DE | gamma2 | hatgamma2 | D_poly | d_poly
    #[arg(long)]
    name: String,
    /// Largest n
    #[arg(long)]
    n: usize,
    /// Color radix for D_poly / d_poly
    #[arg(long, default_value_t = 2)]
    r: u32,
    /// csv | json
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long)]
    max_cardinality: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity name; see --list
    #[arg(long, conflicts_with = "all")]
    identity: Option<String>,
    /// Run every verifier at the acceptance ranges
    #[arg(long)]
    all: bool,
    /// List identity names
    #[arg(long)]
    list: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<u32>,
    /// Enumeration cap override (both groups)
    #[arg(long, alias = "max-cardinality")]
    budget: Option<u64>,
    /// Machine-readable report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExpandArgs {
    /// Ascending coefficients, comma-separated
    #[arg(long)]
    coeffs: String,
    /// gamma | sz
    #[arg(long)]
    basis: String,
    /// Degree bound d for gamma; index bound n for sz
    #[arg(long)]
    d: usize,
}

#[derive(Args)]
struct CfracArgs {
    /// derange-D | derange-d | r-euler
    #[arg(long)]
    family: Option<String>,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Emit moments mu_0..mu_order
    #[arg(long)]
    order: usize,
    /// Custom diagonal coefficients b_0,b_1,... (integers)
    #[arg(long, requires = "custom_lam", conflicts_with = "family")]
    custom_b: Option<String>,
    /// Custom lambda_1,lambda_2,... (integers)
    #[arg(long, requires = "custom_b")]
    custom_lam: Option<String>,
}

#[derive(Args)]
struct BijectionArgs {
    /// Colored permutation, e.g. "4 7^1 2 5^1 1^2 6 3"
    #[arg(long, conflicts_with = "invert")]
    perm: Option<String>,
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Invert a history read from --history
    #[arg(long, requires = "history")]
    invert: bool,
    /// Path to a history JSON file
    #[arg(long)]
    history: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Stats(args) => stats(args),
        Command::Table(args) => table(args),
        Command::Verify(args) => verify_cmd(args),
        Command::Expand(args) => expand(args),
        Command::Cfrac(args) => cfrac(args),
        Command::Bijection(args) => bijection(args),
    }
}

fn stats(args: StatsArgs) -> Result<ExitCode, String> {
    match args.r {
        None => {
            let p: Permutation = args.perm.parse().map_err(|e| format!("{e}"))?;
            let doc = json!({
                "perm": p.to_string(),
                "n": p.n(),
                "linear": linear_stats(&p),
                "crossing": crossing_stats(&p),
                "cyclic": cyclic_stats(&p),
                "boundary": {
                    "pad_zero_zero": boundary_stats(&p, BoundaryConvention::PadZeroZero),
                    "pad_zero_np1": boundary_stats(&p, BoundaryConvention::PadZeroNp1),
                    "pad_right_zero": boundary_stats(&p, BoundaryConvention::PadRightZero),
                },
                "pattern": pattern_stats(&p),
                "fmax": fmax(&p),
                "vincular": vincular_counts(&p),
            });
            println!("{doc}");
        }
        Some(r) => {
            let s = ColoredPermutation::parse(&args.perm, r).map_err(|e| format!("{e}"))?;
            let mut doc = json!({
                "perm": s.to_string(),
                "n": s.n(),
                "r": r,
                "colored": colored_stats(&s),
                "cros": cros_colored(&s),
                "weight": weight_monomial_string(&sigma_weight_exponents(&s)),
            });
            if r == 2 {
                let b = b_excedance_stats(&s).map_err(|e| format!("{e}"))?;
                doc["b_stats"] = serde_json::to_value(b).expect("serializes");
            }
            println!("{doc}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table(args: TableArgs) -> Result<ExitCode, String> {
    let name = TableName::from_str(&args.name).map_err(|e| format!("{e}"))?;
    let format = TableFormat::from_str(&args.format).map_err(|e| format!("{e}"))?;
    let budget = args.max_cardinality.map(Budget::uniform).unwrap_or_default();
    let out =
        verify::emit_table(name, args.n, args.r, format, &budget).map_err(|e| format!("{e}"))?;
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.list {
        for name in verify::IDENTITY_NAMES {
            println!("{name}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let budget = args.budget.map(Budget::uniform).unwrap_or_default();
    let seed = verify::seed_from_env();
    let reports = if args.all {
        verify::run_all(&budget, seed).map_err(|e| format!("{e}"))?
    } else {
        let name = args.identity.ok_or("pass --identity NAME, --all, or --list")?;
        vec![verify::run_one(&name, args.n, args.r, &budget, seed).map_err(|e| format!("{e}"))?]
    };
    let all_pass = reports.iter().all(|r| r.passed());
    if args.json {
        let doc = json!({ "all_pass": all_pass, "reports": reports });
        println!("{doc}");
    } else {
        for r in &reports {
            println!("{}", r.one_line());
        }
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn parse_bigints(text: &str) -> Result<Vec<BigInt>, String> {
    text.split(',')
        .map(|tok| tok.trim().parse::<BigInt>().map_err(|_| format!("bad integer {tok:?}")))
        .collect()
}

fn expand(args: ExpandArgs) -> Result<ExitCode, String> {
    let coeffs = parse_bigints(&args.coeffs)?;
    let p = IntPoly::from_coeffs(coeffs);
    match args.basis.as_str() {
        "gamma" => {
            let gv = gamma_expand(&p, args.d).map_err(|e| format!("{e}"))?;
            let entries: Vec<String> = gv.gammas.iter().map(|g| g.to_string()).collect();
            println!("{{\"basis\":\"gamma\",\"d\":{},\"gammas\":[{}]}}", args.d, entries.join(","));
        }
        "sz" => {
            let coeffs = expand_sz_basis(&p, args.d).map_err(|e| format!("{e}"))?;
            let entries: Vec<String> = coeffs.iter().map(|g| g.to_string()).collect();
            println!("{{\"basis\":\"sz\",\"n\":{},\"coeffs\":[{}]}}", args.d, entries.join(","));
        }
        other => return Err(format!("unknown basis {other:?}; use gamma or sz")),
    }
    Ok(ExitCode::SUCCESS)
}

fn cfrac(args: CfracArgs) -> Result<ExitCode, String> {
    let order = args.order;
    let h_max = order / 2 + 1;
    let (label, moments): (String, Vec<IntPoly>) = match (&args.family, &args.custom_b) {
        (Some(fam), None) => match fam.as_str() {
            "derange-D" => (
                format!("derange-D r={}", args.r),
                jf_moments(&family_derange_big_d(args.r, h_max), order)
                    .map_err(|e| format!("{e}"))?,
            ),
            "derange-d" => (
                format!("derange-d r={}", args.r),
                jf_moments(&family_derange_small_d(args.r, h_max), order)
                    .map_err(|e| format!("{e}"))?,
            ),
            "r-euler" => {
                let mu = jf_moments(&family_r_euler(args.r, h_max), order)
                    .map_err(|e| format!("{e}"))?;
                (format!("r-euler r={}", args.r), mu.into_iter().map(IntPoly::constant).collect())
            }
            other => return Err(format!("unknown family {other:?}")),
        },
        (None, Some(bs)) => {
            let b = parse_bigints(bs)?;
            let lam = parse_bigints(args.custom_lam.as_deref().ok_or("missing --custom-lam")?)?;
            let jf = JFraction::new(b, lam);
            let mu = jf_moments(&jf, order).map_err(|e| format!("{e}"))?;
            ("custom".to_string(), mu.into_iter().map(IntPoly::constant).collect())
        }
        _ => return Err("pass either --family or --custom-b/--custom-lam".to_string()),
    };
    let rows: Vec<String> = moments.iter().map(|p| p.to_json("t")).collect();
    println!("{{\"family\":\"{}\",\"order\":{},\"moments\":[{}]}}", label, order, rows.join(","));
    Ok(ExitCode::SUCCESS)
}

fn bijection(args: BijectionArgs) -> Result<ExitCode, String> {
    if args.invert {
        let path = args.history.ok_or("pass --history FILE")?;
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
        let hist = LaguerreHistory::from_json(&text).map_err(|e| format!("{e}"))?;
        let sigma = phi_inverse(&hist).map_err(|e| format!("{e}"))?;
        println!("{sigma}");
        return Ok(ExitCode::SUCCESS);
    }
    let word = args.perm.ok_or("pass --perm \"...\" (or --invert --history FILE)")?;
    let sigma = ColoredPermutation::parse(&word, args.r).map_err(|e| format!("{e}"))?;
    let hist = phi(&sigma);
    println!("{}", hist.to_json());
    println!("{}", weight_monomial_string(&history_weight_exponents(&hist)));
    Ok(ExitCode::SUCCESS)
}
