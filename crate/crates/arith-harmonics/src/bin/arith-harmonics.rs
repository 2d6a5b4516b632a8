use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use arith_harmonics::analytic::ComplexParam;
use arith_harmonics::arith::{ArithKind, Sieve};
use arith_harmonics::cli::{
    self, exit_code, figure_data, render_figure_csv, render_reports, render_scan_csv, run_suite,
    FigureKind, OutputFormat, RunConfig, SuiteOverrides, IDENTITY_NAMES,
};
use arith_harmonics::identities::CorrelationKind;

/// Arithmetic-function harmonics: sieves, convolution algebras, Franel
/// integrals, Gram spectra and series identities, each as a verifiable run.
#[derive(Parser)]
#[command(name = "arith-harmonics", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format: csv, json or table
    #[arg(long, default_value = "table")]
    format: String,
    /// Write output to this path instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Seed for the randomized property suites (byte-reproducible runs)
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Dump an arithmetic-function table as rows (n, value)
    Sieve {
        /// One of: mu, lambda, phi, jordan, sigma, mangoldt, theta, n-simple, omega, mu-abs
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 100)]
        n_max: u64,
        /// Jordan totient order (with --kind jordan)
        #[arg(long)]
        k: Option<u32>,
        /// Exponent for sigma, as a complex "re+imi" (with --kind sigma)
        #[arg(long)]
        a: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a named identity-verification suite
    Verify {
        /// Identity name; see --list
        identity: Option<String>,
        /// List the registered identities and exit
        #[arg(long)]
        list: bool,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long)]
        r_max: Option<u64>,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        n_terms: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the figure data (partial sums of Σ w(n)/n cos 2πnt) as CSV
    Figure {
        /// fig1 (Möbius weights) or fig2 (Liouville weights)
        #[arg(long)]
        which: String,
        #[arg(long, default_value_t = 100_000)]
        n_terms: usize,
        #[arg(long, default_value_t = 2000)]
        grid_points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Correlation trend scan over μ or λ with shifts and exponents
    Scan {
        /// mu or lambda
        #[arg(long, default_value = "mu")]
        kind: String,
        /// Comma-separated distinct shifts, e.g. "0,1"
        #[arg(long, default_value = "0")]
        shifts: String,
        /// Comma-separated exponents in {1,2}, one per shift
        #[arg(long, default_value = "1")]
        exponents: String,
        #[arg(long, default_value_t = 1_000_000)]
        m_limit: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dump the Gram matrix M_{s,N} (csv) or its spectrum summary (json)
    Gram {
        #[arg(long, default_value_t = 2.0)]
        s: f64,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coefficient dump of a series family as rows (n, re, im)
    Coeffs {
        /// polylog, mobius, liouville, ramanujan or estermann
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "2")]
        s: String,
        /// second parameter: l for ramanujan, a for estermann
        #[arg(long)]
        a: Option<String>,
        #[arg(long, default_value_t = 64)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Asymptotic fit of Σ(cos(x/j) − 1): grid CSV or the fit summary JSON
    Fit {
        #[arg(long, default_value_t = 10_000.0)]
        x_max: f64,
        #[arg(long, default_value_t = 40)]
        n_points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn write_out(path: &Option<std::path::PathBuf>, content: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content),
        None => std::io::stdout().write_all(content.as_bytes()),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => usage_error(&e.to_string()),
    }
}

fn run(cli: Cli) -> arith_harmonics::Result<ExitCode> {
    match cli.command {
        Command::Sieve {
            kind,
            n_max,
            k,
            a,
            output,
        } => {
            let format: OutputFormat = output.format.parse()?;
            let sieve = Sieve::new(n_max as usize)?;
            let mut params = BTreeMap::new();
            params.insert("kind".into(), kind.clone());
            params.insert("n_max".into(), n_max.to_string());
            let cfg = RunConfig {
                subcommand: "sieve".into(),
                params,
                output_format: format,
                seed: output.seed,
            };
            let rows: Vec<(usize, String)> = match kind.as_str() {
                "mangoldt" => sieve
                    .mangoldt()
                    .iter()
                    .map(|(n, v)| (n, cli::fmt_f64(*v)))
                    .collect(),
                "sigma" => {
                    let ap: ComplexParam = a.as_deref().unwrap_or("0").parse()?;
                    sieve
                        .sigma(ap.as_complex())
                        .iter()
                        .map(|(n, v)| (n, format!("{},{}", cli::fmt_f64(v.re), cli::fmt_f64(v.im))))
                        .collect()
                }
                other => {
                    let tag = match other {
                        "mu" => ArithKind::Mu,
                        "lambda" => ArithKind::Lambda,
                        "phi" => ArithKind::Phi,
                        "jordan" => ArithKind::Jordan(k.unwrap_or(1)),
                        "theta" => ArithKind::Theta,
                        "n-simple" => ArithKind::NSimple,
                        "omega" => ArithKind::Omega,
                        "mu-abs" => ArithKind::MuAbs,
                        unknown => {
                            return Err(arith_harmonics::Error::InvalidArgument(format!(
                                "unknown sieve kind {unknown:?}"
                            )))
                        }
                    };
                    sieve
                        .table_int(&tag)?
                        .iter()
                        .map(|(n, v)| (n, v.to_string()))
                        .collect()
                }
            };
            let mut s = String::new();
            use std::fmt::Write as _;
            let _ = writeln!(
                s,
                "# arith-harmonics sieve kind={kind} n_max={n_max} seed={}",
                cfg.seed
            );
            s.push_str("n,value\n");
            for (n, v) in rows {
                let _ = writeln!(s, "{n},{v}");
            }
            write_out(&output.out, &s).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            list,
            s,
            k,
            q,
            m,
            n,
            a,
            b,
            d,
            x,
            tau,
            r_max,
            n_max,
            n_terms,
            tol,
            output,
        } => {
            if list {
                let mut out = String::new();
                use std::fmt::Write as _;
                for name in IDENTITY_NAMES {
                    let _ = writeln!(out, "{name:<18} {}", cli::identity_description(name));
                }
                write_out(&output.out, &out).map_err(io_err)?;
                return Ok(ExitCode::SUCCESS);
            }
            let Some(name) = identity else {
                return Err(arith_harmonics::Error::InvalidArgument(
                    "missing identity name (or use --list)".into(),
                ));
            };
            let format: OutputFormat = output.format.parse()?;
            let s_parsed = match s {
                Some(raw) => Some(raw.parse::<ComplexParam>()?),
                None => None,
            };
            let ov = SuiteOverrides {
                s: s_parsed,
                k,
                q,
                m,
                n,
                a,
                b,
                d,
                x,
                tau,
                r_max,
                n_max,
                n_terms,
                tol,
                seed: output.seed,
            };
            let reports = run_suite(&name, &ov)?;
            let mut params = BTreeMap::new();
            params.insert("identity".into(), name.clone());
            if let Some(v) = &ov.s {
                params.insert("s".into(), v.to_string());
            }
            if let Some(v) = ov.n_terms {
                params.insert("n_terms".into(), v.to_string());
            }
            let cfg = RunConfig {
                subcommand: format!("verify {name}"),
                params,
                output_format: format,
                seed: output.seed,
            };
            write_out(&output.out, &render_reports(&cfg, &reports)).map_err(io_err)?;
            Ok(ExitCode::from(exit_code(&reports) as u8))
        }
        Command::Figure {
            which,
            n_terms,
            grid_points,
            output,
        } => {
            let kind: FigureKind = which.parse()?;
            let data = figure_data(kind, n_terms, grid_points)?;
            let mut params = BTreeMap::new();
            params.insert("which".into(), which.clone());
            params.insert("n_terms".into(), n_terms.to_string());
            params.insert("grid_points".into(), grid_points.to_string());
            let cfg = RunConfig {
                subcommand: "figure".into(),
                params,
                output_format: OutputFormat::Csv,
                seed: output.seed,
            };
            write_out(&output.out, &render_figure_csv(&cfg, &data)).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gram { s, n, output } => {
            use arith_harmonics::gram::GramSpec;
            let format: OutputFormat = output.format.parse()?;
            let g = GramSpec::new(s, n)?;
            let content = match format {
                OutputFormat::Json => {
                    let (lmin, lmax) = g.extreme_eigenvalues()?;
                    let window = if s > 1.0 {
                        Some(g.eigenvalue_bounds()?)
                    } else {
                        None
                    };
                    let v = serde_json::json!({
                        "config": {"subcommand": "gram", "s": s, "n": n, "seed": output.seed},
                        "det": g.det(),
                        "det_closed_form": g.det_closed_form()?,
                        "lambda_min": lmin,
                        "lambda_max": lmax,
                        "zeta_window": window.map(|(lo, hi)| vec![lo, hi]),
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                _ => {
                    let mut text =
                        format!("# arith-harmonics gram s={s} n={n} seed={}\n", output.seed);
                    use std::fmt::Write as _;
                    for i in 0..n {
                        let row: Vec<String> =
                            (0..n).map(|j| cli::fmt_f64(g.matrix()[(i, j)])).collect();
                        let _ = writeln!(text, "{}", row.join(","));
                    }
                    text
                }
            };
            write_out(&output.out, &content).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeffs {
            family,
            s,
            a,
            order,
            output,
        } => {
            use arith_harmonics::series::{
                estermann_coeffs, mobius_coeffs, polylog_coeffs, TruncatedSeries,
            };
            let sp: ComplexParam = s.parse()?;
            let sc = sp.as_complex();
            let coeffs: TruncatedSeries<num_complex::Complex64> = match family.as_str() {
                "polylog" => polylog_coeffs(sc, order)?,
                "mobius" => mobius_coeffs(sc, order)?,
                "liouville" => {
                    let sieve = Sieve::new(order)?;
                    let lam = sieve.lambda();
                    TruncatedSeries::new(
                        (1..=order)
                            .map(|n| {
                                num_complex::Complex64::new(n as f64, 0.0).powc(-sc)
                                    * *lam.get(n) as f64
                            })
                            .collect(),
                    )?
                }
                "ramanujan" => {
                    let l: u64 = a.as_deref().unwrap_or("1").parse().map_err(|_| {
                        arith_harmonics::Error::InvalidArgument(
                            "bad --a (expected integer l)".into(),
                        )
                    })?;
                    let mut v = Vec::with_capacity(order);
                    for k in 1..=order as u64 {
                        let c = arith_harmonics::arith::ramanujan_sum(k, l)?;
                        v.push(num_complex::Complex64::new(k as f64, 0.0).powc(-sc) * c as f64);
                    }
                    TruncatedSeries::new(v)?
                }
                "estermann" => {
                    let ap: ComplexParam = a.as_deref().unwrap_or("0").parse()?;
                    estermann_coeffs(sc, ap.as_complex(), order)?
                }
                other => {
                    return Err(arith_harmonics::Error::InvalidArgument(format!(
                        "unknown series family {other:?}"
                    )))
                }
            };
            let format: OutputFormat = output.format.parse()?;
            let content = match format {
                OutputFormat::Json => {
                    let rows: Vec<serde_json::Value> = coeffs
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(i, c)| serde_json::json!({"n": i + 1, "re": c.re, "im": c.im}))
                        .collect();
                    let v = serde_json::json!({
                        "config": {"subcommand": "coeffs", "family": family, "s": s, "order": order},
                        "coefficients": rows,
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                _ => {
                    let mut text = format!(
                        "# arith-harmonics coeffs family={family} s={s} order={order} seed={}\n",
                        output.seed
                    );
                    text.push_str("n,re,im\n");
                    use std::fmt::Write as _;
                    for (i, c) in coeffs.coeffs().iter().enumerate() {
                        let _ = writeln!(
                            text,
                            "{},{},{}",
                            i + 1,
                            cli::fmt_f64(c.re),
                            cli::fmt_f64(c.im)
                        );
                    }
                    text
                }
            };
            write_out(&output.out, &content).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit {
            x_max,
            n_points,
            output,
        } => {
            use arith_harmonics::asympt::linear_term_and_remainder;
            let fit = linear_term_and_remainder(x_max, n_points)?;
            let format: OutputFormat = output.format.parse()?;
            let content = match format {
                OutputFormat::Json => {
                    let v = serde_json::json!({
                        "config": {"subcommand": "fit", "x_max": x_max, "n_points": n_points},
                        "fit": fit,
                    });
                    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
                }
                _ => {
                    let mut text = format!(
                        "# arith-harmonics fit x_max={x_max} n_points={n_points} linear_coeff={} remainder_exponent={} seed={}\n",
                        cli::fmt_f64(fit.linear_coeff),
                        cli::fmt_f64(fit.remainder_exponent),
                        output.seed
                    );
                    text.push_str("x,F\n");
                    use std::fmt::Write as _;
                    for (x, v) in fit.x_grid.iter().zip(&fit.values) {
                        let _ = writeln!(text, "{},{}", cli::fmt_f64(*x), cli::fmt_f64(*v));
                    }
                    text
                }
            };
            write_out(&output.out, &content).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            kind,
            shifts,
            exponents,
            m_limit,
            output,
        } => {
            let ck = match kind.as_str() {
                "mu" => CorrelationKind::Mobius,
                "lambda" => CorrelationKind::Liouville,
                other => {
                    return Err(arith_harmonics::Error::InvalidArgument(format!(
                        "unknown scan kind {other:?}"
                    )))
                }
            };
            let shift_vals: Vec<u64> = shifts
                .split(',')
                .map(|t| t.trim().parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| arith_harmonics::Error::InvalidArgument("bad --shifts".into()))?;
            let exp_vals: Vec<u8> = exponents
                .split(',')
                .map(|t| t.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| arith_harmonics::Error::InvalidArgument("bad --exponents".into()))?;
            let scan = cli::scan_data(ck, &shift_vals, &exp_vals, m_limit)?;
            let mut params = BTreeMap::new();
            params.insert("kind".into(), kind.clone());
            params.insert("shifts".into(), shifts.clone());
            params.insert("exponents".into(), exponents.clone());
            params.insert("m_limit".into(), m_limit.to_string());
            let cfg = RunConfig {
                subcommand: "scan".into(),
                params,
                output_format: OutputFormat::Csv,
                seed: output.seed,
            };
            write_out(&output.out, &render_scan_csv(&cfg, &scan)).map_err(io_err)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn io_err(e: std::io::Error) -> arith_harmonics::Error {
    arith_harmonics::Error::InvalidArgument(format!("io error: {e}"))
}
