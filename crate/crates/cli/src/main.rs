//! `flagbundle`: compute flag-manifold invariants, run the verification
//! suites, solve astheno loci, and regenerate the example reports.

mod config;
mod output;
mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{Format, RunConfig};
use flagbundle_core::kt_cyt::{astheno_locus, astheno_residual};
use flagbundle_core::parabolic::ParabolicDatum;
use flagbundle_core::report::standard_examples;
use flagbundle_core::rootsystem::Rational;

#[derive(Parser)]
#[command(
    name = "flagbundle",
    about = "Lie-theoretic invariants of flag manifolds and verification of \
             Hermitian structures on their circle bundles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// RNG seed for sample points.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Number of sample points per check.
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Base finite-difference step (effective step scales with ‖z‖).
    #[arg(long, global = true)]
    fd_step: Option<f64>,

    /// Tolerance override, repeatable: --tol einstein=1e-3
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE")]
    tol: Vec<String>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Optional key=value config file; flags override it.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Flag-manifold invariants of a parabolic datum such as "A3/{1,3}".
    Invariants { datum: String },
    /// Run a verification suite: einstein, curvature, nijenhuis, cyt, lck,
    /// nonkahler.
    Verify {
        suite: String,
        /// Parabolic datum; product suites take "A1/{}xA1/{}".
        datum: String,
        /// Canonical-bundle root multiple ℓ (cyt, lck, curvature).
        #[arg(long, default_value_t = 1)]
        ell: i64,
        /// Tsukada parameter a (nijenhuis).
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        /// Tsukada parameter b (nijenhuis).
        #[arg(long, default_value_t = 1.0)]
        b: f64,
    },
    /// Astheno-Kähler locus for dimensions m1 m2 or two parabolic data.
    Astheno { first: String, second: String },
    /// Regenerate a document: "table1" or "examples".
    Report {
        name: String,
        /// Full-flag datum for the last table row (must have empty Θ).
        #[arg(long, default_value = "A3/{}")]
        full_flag: String,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. `... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let cfg = match RunConfig::resolve(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = match &cli.command {
        Command::Invariants { datum } => cmd_invariants(datum, &cfg),
        Command::Verify {
            suite,
            datum,
            ell,
            a,
            b,
        } => suites::cmd_verify(suite, datum, *ell, *a, *b, &cfg),
        Command::Astheno { first, second } => cmd_astheno(first, second, &cfg),
        Command::Report { name, full_flag } => cmd_report(name, full_flag, &cfg),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_invariants(datum: &str, cfg: &RunConfig) -> Result<bool, String> {
    let p = ParabolicDatum::parse(datum).map_err(|e| e.to_string())?;
    let inv = p.flag_invariants();
    match cfg.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&inv).unwrap()),
        Format::Csv => {
            println!("field,value");
            println!("lie_type,{}", inv.lie_type);
            println!("theta,{}", output::join_usize(&inv.theta));
            println!("m_theta,{}", inv.m_theta);
            println!("picard_rank,{}", inv.picard_rank);
            println!("delta_p_root,{}", output::join_i64(&inv.delta_p_root));
            println!("delta_p_weight,{}", output::join_i64(&inv.delta_p_weight));
            println!("pairings,{}", output::join_i64(&inv.pairings));
            println!("fano_index,{}", inv.fano_index);
        }
        Format::Markdown => {
            println!("# {} invariants", p);
            println!();
            println!("| field | value |");
            println!("|---|---|");
            println!("| complex dimension m_Θ | {} |", inv.m_theta);
            println!("| Picard rank | {} |", inv.picard_rank);
            println!("| δ_P (simple-root basis) | {:?} |", inv.delta_p_root);
            println!("| δ_P (weight basis) | {:?} |", inv.delta_p_weight);
            println!("| pairings ⟨δ_P, h_α^∨⟩ on Σ\\Θ | {:?} |", inv.pairings);
            println!("| Fano index | {} |", inv.fano_index);
            println!(
                "| complement roots | {} |",
                inv.complement_pos_roots
                    .iter()
                    .map(|r| format!("{r:?}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let flags: Vec<String> = inv
                .minuscule_flags
                .iter()
                .enumerate()
                .filter_map(|(i, f)| f.map(|b| format!("α{}:{}", i + 1, b)))
                .collect();
            println!("| minuscule (unpainted nodes) | {} |", flags.join(", "));
        }
    }
    Ok(true)
}

fn cmd_astheno(first: &str, second: &str, cfg: &RunConfig) -> Result<bool, String> {
    let dims = |s: &str| -> Result<i64, String> {
        if let Ok(v) = s.parse::<i64>() {
            if v < 1 {
                return Err(format!("dimension must be positive, got {v}"));
            }
            Ok(v)
        } else {
            let p = ParabolicDatum::parse(s).map_err(|e| e.to_string())?;
            Ok(p.complement_roots().len() as i64)
        }
    };
    let m1 = dims(first)?;
    let m2 = dims(second)?;
    let locus = astheno_locus(m1, m2);
    let points = locus.sample_points(cfg.samples.clamp(5, 50));
    let max_res = points
        .iter()
        .map(|&(a, b)| astheno_residual(m1, m2, a, b).abs())
        .fold(0.0f64, f64::max);

    #[derive(serde::Serialize)]
    struct AsthenoOut<'a> {
        locus: &'a flagbundle_core::kt_cyt::AsthenoCircle,
        sample_points: &'a [(f64, f64)],
        max_residual: f64,
    }

    match cfg.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&AsthenoOut {
                locus: &locus,
                sample_points: &points,
                max_residual: max_res,
            })
            .unwrap()
        ),
        Format::Csv => {
            println!("a,b,residual");
            for (a, b) in &points {
                println!("{a},{b},{}", astheno_residual(m1, m2, *a, *b));
            }
        }
        Format::Markdown => {
            println!("# astheno locus for (m1, m2) = ({m1}, {m2})");
            println!();
            if locus.degenerate {
                println!("vertical line a = {}", rat(locus.line_a.unwrap()));
            } else {
                println!(
                    "circle (a − ({}))² + b² = {}{}",
                    rat(locus.center_a.unwrap()),
                    rat(locus.radius_sq.unwrap()),
                    if locus.has_nonreal_solutions {
                        ""
                    } else {
                        "  (no solutions with b ≠ 0)"
                    }
                );
            }
            if locus.dimension_warning {
                println!();
                println!("warning: m1 + m2 + 1 ≤ 3, outside the theorem hypothesis");
            }
            println!();
            println!("| a | b | condition residual |");
            println!("|---|---|---|");
            for (a, b) in &points {
                println!(
                    "| {a:.6} | {b:.6} | {:.3e} |",
                    astheno_residual(m1, m2, *a, *b)
                );
            }
            println!();
            println!("max residual over samples: {max_res:.3e}");
        }
    }
    Ok(max_res <= 1e-10)
}

fn rat(r: Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn cmd_report(name: &str, full_flag: &str, cfg: &RunConfig) -> Result<bool, String> {
    match name {
        "table1" => {
            let ff = ParabolicDatum::parse(full_flag).map_err(|e| e.to_string())?;
            let rows = flagbundle_core::kt_cyt::table1(&ff).map_err(|e| e.to_string())?;
            match cfg.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap())
                }
                Format::Csv => {
                    println!("manifold,base,m_theta,fano_index,su_index");
                    for r in &rows {
                        println!(
                            "{},{},{},{},{}",
                            r.manifold, r.base, r.m_theta, r.fano_index, r.su_index
                        );
                    }
                }
                Format::Markdown => {
                    let header: Vec<String> = rows
                        .iter()
                        .map(|r| format!("Hol ⊂ {}", r.holonomy_bound))
                        .collect();
                    let body: Vec<String> = rows.iter().map(|r| r.manifold.clone()).collect();
                    println!("| {} |", header.join(" | "));
                    println!("|{}|", vec!["---"; rows.len()].join("|"));
                    println!("| {} |", body.join(" | "));
                }
            }
            Ok(true)
        }
        "examples" => {
            let rows = standard_examples().map_err(|e| e.to_string())?;
            match cfg.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&rows).unwrap())
                }
                Format::Csv => {
                    println!("name,datum,m_theta,fano,canonical_ell,quasi_potential");
                    for r in &rows {
                        println!(
                            "{},{},{},{},{},\"{}\"",
                            r.name,
                            r.datum,
                            r.invariants.m_theta,
                            r.invariants.fano_index,
                            output::join_i64(&r.canonical_bundle_ell),
                            r.quasi_potential
                        );
                    }
                }
                Format::Markdown => {
                    for r in &rows {
                        println!("## {} ({})", r.name, r.datum);
                        println!();
                        println!(
                            "- m_Θ = {}, Picard rank {}, Fano index {}",
                            r.invariants.m_theta, r.invariants.picard_rank, r.invariants.fano_index
                        );
                        println!("- Q(K^(1/I)) Euler vector: {:?}", r.canonical_bundle_ell);
                        println!("- quasi-potential: log[ {} ]", r.quasi_potential);
                        println!(
                            "- CYT constants (ℓ=1): λ = {}, ω₀ = {}·ρ₀, ψ = {}·ω₀ (m = {})",
                            r.cyt_lambda,
                            r.cyt_omega0_scale,
                            r.psi_over_omega0,
                            r.invariants.m_theta
                        );
                        println!();
                    }
                }
            }
            Ok(true)
        }
        other => Err(format!(
            "unknown report {other:?}; expected table1 or examples"
        )),
    }
}
