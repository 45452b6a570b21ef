use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ospz::cli_io::{
    matrix_json, matrix_latex, parse_uea, parse_z, render_phi_table, render_uea, render_z, run_suite, uea_json,
    z_json, Format, Suite, SuiteOptions, SuiteReport,
};
use ospz::coeff::Rational;
use ospz::projector::diamond;
use ospz::rep::{example_rho, example_rho_full, RhoMatrices, TensorModule};
use ospz::uea::theta;
use ospz::zalg::{tilde_to_z, z_multiply, z_theta, ZGen};

#[derive(Parser)]
#[command(name = "ospz", version, about = "Exact calculator for the reduction algebra of osp(1|2) x osp(1|2)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Also write the JSON form of the result to this file.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    U,
    Z,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression.
    Normalize {
        expr: String,
        #[arg(long, value_enum, default_value = "u")]
        algebra: AlgebraArg,
    },
    /// Diamond product of two classes in U/II, given as U expressions.
    Diamond { left: String, right: String },
    /// Product of two Z expressions.
    Zmul { left: String, right: String },
    /// The anti-automorphism Theta.
    Theta {
        expr: String,
        #[arg(long, value_enum, default_value = "z")]
        algebra: AlgebraArg,
    },
    /// Image in Z of the class of a U expression modulo II.
    Project { expr: String },
    /// kappa_n and phi_n for n up to a bound.
    PhiTable {
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// The module C[x] (x) V(lambda) and its primitive vectors.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        options: VerifyArgs,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Primitive vectors, weight by weight.
    Primitives {
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
        /// Lowest weight index m (eigenvalue m + 1/2); defaults to -lambda.
        #[arg(long, allow_hyphen_values = true)]
        min: Option<i64>,
        /// Highest weight index m; defaults to trunc - lambda.
        #[arg(long, allow_hyphen_values = true)]
        max: Option<i64>,
    },
    /// Matrices of the Z generators on the primitive vectors of C[x] (x) V(1).
    Rho {
        #[arg(long, default_value_t = 8)]
        trunc: u32,
        /// Use all three primitive vectors instead of the window {-1/2, 1/2}.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    max_exp: u16,
    #[arg(long, default_value_t = 4)]
    degree: u32,
    #[arg(long, default_value_t = 8)]
    trunc: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    seeds: u64,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// What a command produced: display text, its JSON form, and whether it
/// counts as a verification failure.
struct Output {
    text: String,
    json: serde_json::Value,
    failed: bool,
}

impl Output {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Self { text, json, failed: false }
    }
}

fn color_enabled() -> bool {
    match std::env::var("OSPZ_COLOR").as_deref() {
        Ok("1") => true,
        Ok("0") => false,
        _ => std::io::stdout().is_terminal(),
    }
}

fn colorize(report: &str) -> String {
    report
        .replace("[pass]", "\x1b[32m[pass]\x1b[0m")
        .replace("[FAIL]", "\x1b[31m[FAIL]\x1b[0m")
}

fn uea_output(e: &ospz::uea::UeaElement, format: Format) -> Output {
    Output::ok(render_uea(e, format), uea_json(e))
}

fn z_output(e: &ospz::zalg::ZElement, format: Format) -> Output {
    Output::ok(render_z(e, format), z_json(e))
}

fn half(m: i64) -> Rational {
    Rational::new((2 * m + 1).into(), 2.into())
}

fn primitives(lambda: u32, trunc: u32, min: Option<i64>, max: Option<i64>, format: Format) -> ospz::Result<Output> {
    let module = TensorModule::new(trunc, lambda);
    let lo = min.unwrap_or(-(lambda as i64));
    let hi = max.unwrap_or(trunc as i64 - lambda as i64);
    let vectors = module.primitive_vectors(lo..=hi)?;
    let rows: Vec<(Rational, String)> = vectors
        .iter()
        .map(|v| (half(module.weight_of(v).expect("primitive vectors are weight vectors")), module.format_vector(v)))
        .collect();
    let json = json!({
        "lambda": lambda,
        "trunc": trunc,
        "vectors": rows.iter().map(|(h, v)| json!({ "h": h.to_string(), "vector": v })).collect::<Vec<_>>(),
    });
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json"),
        _ => rows.iter().map(|(h, v)| format!("H = {h}: {v}")).collect::<Vec<_>>().join("\n"),
    };
    Ok(Output::ok(text, json))
}

fn rho_output(rho: &RhoMatrices, format: Format) -> Output {
    let gens: Vec<ZGen> = (-2..=2).map(ZGen::new).collect();
    let json = json!({
        "weights": rho.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "matrices": gens
            .iter()
            .map(|&g| (g.token(), matrix_json(rho.generator(g))))
            .collect::<serde_json::Map<_, _>>(),
    });
    let text = match format {
        Format::Text => {
            let weights: Vec<String> = rho.weights.iter().map(|w| w.to_string()).collect();
            let mut lines = vec![format!("H eigenvalues: {}", weights.join(", "))];
            lines.extend(gens.iter().map(|&g| format!("rho({}) = {}", g.token(), rho.generator(g))));
            lines.join("\n")
        }
        Format::Latex => gens
            .iter()
            .map(|&g| format!("\\rho({}) &= {}", g.latex(), matrix_latex(rho.generator(g))))
            .collect::<Vec<_>>()
            .join(" \\\\\n"),
        Format::Json => serde_json::to_string_pretty(&json).expect("json"),
    };
    Output::ok(text, json)
}

fn verify(suite: Suite, args: &VerifyArgs, format: Format) -> Output {
    let options = SuiteOptions {
        n: args.n,
        max_exp: args.max_exp,
        degree: args.degree,
        trunc: args.trunc,
        seed: args.seed,
        seeds: args.seeds,
    };
    let report: SuiteReport = run_suite(suite, &options);
    let text = match format {
        Format::Json => report.to_json().trim_end().to_string(),
        _ if color_enabled() => colorize(report.to_text().trim_end()),
        _ => report.to_text().trim_end().to_string(),
    };
    Output {
        text,
        json: serde_json::to_value(&report).expect("report serializes"),
        failed: !report.all_passed(),
    }
}

fn run(cli: &Cli) -> ospz::Result<Output> {
    let format = cli.format;
    Ok(match &cli.command {
        Command::Normalize { expr, algebra: AlgebraArg::U } => uea_output(&parse_uea(expr)?, format),
        Command::Normalize { expr, algebra: AlgebraArg::Z } => z_output(&parse_z(expr)?, format),
        Command::Diamond { left, right } => uea_output(&diamond(&parse_uea(left)?, &parse_uea(right)?), format),
        Command::Zmul { left, right } => z_output(&z_multiply(&parse_z(left)?, &parse_z(right)?), format),
        Command::Theta { expr, algebra: AlgebraArg::U } => uea_output(&theta(&parse_uea(expr)?), format),
        Command::Theta { expr, algebra: AlgebraArg::Z } => z_output(&z_theta(&parse_z(expr)?), format),
        Command::Project { expr } => z_output(&tilde_to_z(&parse_uea(expr)?), format),
        Command::PhiTable { n } => {
            let json: serde_json::Value =
                serde_json::from_str(&render_phi_table(*n, Format::Json)).expect("phi table json");
            Output::ok(render_phi_table(*n, format).trim_end().to_string(), json)
        }
        Command::Rep(RepCommand::Primitives { lambda, trunc, min, max }) => {
            primitives(*lambda, *trunc, *min, *max, format)?
        }
        Command::Rep(RepCommand::Rho { trunc, full }) => {
            let rho = if *full { example_rho_full(*trunc)? } else { example_rho(*trunc)? };
            rho_output(&rho, format)
        }
        Command::Verify { suite, options } => verify(*suite, options, format),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    println!("{}", out.text);
    if let Some(path) = &cli.json_out {
        let body = serde_json::to_string_pretty(&out.json).expect("json") + "\n";
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if out.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
