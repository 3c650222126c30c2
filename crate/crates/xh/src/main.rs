//! `xh`: construct, verify, and export exceptional Hermite data.
//!
//! Exit codes: 0 on success, 1 when a verification ran and failed, 2 on
//! usage errors.  Output on stdout is deterministic for a fixed
//! invocation; wall time goes to stderr.  The environment variable
//! `XH_PRECISION` overrides the high-precision digit count (default 30).

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::process::ExitCode;
use std::time::Instant;

use xhermite::numeric::Ctx;
use xhermite::operators::{
    hermite_tests, verify_eigen, verify_eigen_general, verify_factorizations, verify_intertwining,
};
use xhermite::orthogonality::gram_matrix;
use xhermite::partition::{sweep_partitions, Partition};
use xhermite::poly::{rat_to_f64, Degree, Poly, Rat};
use xhermite::recurrence::{generate_via_recurrence, verify_induction_identity, verify_recurrence};
use xhermite::report::VerifyReport;
use xhermite::spectral::{potential, regularity_theorem_check};
use xhermite::subspace::{codim_report, primitivity_check, root_constraints};
use xhermite::wronskians::{h_lambda, h_lambda_j, IndexStatus, XHermiteFamily};

#[derive(Parser)]
#[command(name = "xh", version, about = "Exceptional Hermite polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a Wronskian-Hermite polynomial with metadata.
    Poly(PolyArgs),
    /// Export the rational-extension potential, or run the regularity sweep.
    Potential(PotentialArgs),
    /// Verify eigenvalue, intertwining and factorization identities.
    Verify(VerifyArgs),
    /// Exceptional-subspace diagnostics: codimension, constraints, primitivity.
    Subspace(SubspaceArgs),
    /// Gram matrix of an X-family against the closed-form norms.
    Gram(GramArgs),
    /// Verify or run the (2ℓ+3)-term recurrence.
    Recur(RecurArgs),
    /// Exhaustive verification battery up to a weight bound.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct PolyArgs {
    /// Comma-separated partition, e.g. 1,1,3,3 (empty for the classical case).
    #[arg(long, default_value = "")]
    partition: String,
    /// Index j of H_{λ,j}.
    #[arg(long)]
    j: u32,
    /// Interpret the partition as the base of an X-family (uses λ²).
    #[arg(long)]
    xfamily: bool,
    /// Emit JSON (the default output format).
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PotentialArgs {
    #[arg(long, default_value = "")]
    partition: String,
    /// Number of sample points for the CSV export.
    #[arg(long, default_value_t = 401)]
    samples: u32,
    /// Sample range as lo:hi.
    #[arg(long, default_value = "-6:6", allow_hyphen_values = true)]
    range: String,
    /// Emit x,U(x) rows.
    #[arg(long)]
    csv: bool,
    /// Run the Krein-Adler regularity sweep instead of exporting.
    #[arg(long)]
    check_regularity: bool,
    /// Weight bound for --check-regularity.
    #[arg(long, default_value_t = 6)]
    max_weight: u32,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "")]
    partition: String,
    /// Largest index swept by the eigen and intertwining checks.
    #[arg(long, default_value_t = 10)]
    jmax: u32,
}

#[derive(Args)]
struct SubspaceArgs {
    #[arg(long, default_value = "")]
    partition: String,
    /// Report the codimension by both routes.
    #[arg(long)]
    codim: bool,
    /// Report the simple-root constraints.
    #[arg(long)]
    constraints: bool,
    /// Root-refinement tolerance for --constraints.
    #[arg(long, default_value_t = 1e-40)]
    precision: f64,
}

#[derive(Args)]
struct GramArgs {
    #[arg(long, default_value = "")]
    partition: String,
    #[arg(long, default_value_t = 8)]
    jmax: u32,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Emit i,j,value,error,closed,deviation rows instead of JSON.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct RecurArgs {
    #[arg(long, default_value = "")]
    partition: String,
    /// Verify the residual is the zero polynomial for n up to this bound.
    #[arg(long, default_value_t = 10)]
    nmax: i64,
    #[arg(long)]
    verify: bool,
    /// Regenerate H_{λ,0..N} by forward-solving the recurrence.
    #[arg(long)]
    generate: Option<u32>,
    /// Compare the regenerated family against direct Wronskians.
    #[arg(long)]
    compare_wronskian: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 6)]
    max_weight: u32,
}

fn fmt15(x: f64) -> String {
    format!("{x:.14e}")
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct PolyOutput {
    partition: Vec<u32>,
    j: u32,
    coeffs: Poly,
    degree: Option<usize>,
    parity: Option<xhermite::poly::Parity>,
    excluded: Vec<u32>,
    status: String,
}

fn cmd_poly(args: &PolyArgs) -> Result<i32, String> {
    let lambda = parse_partition(&args.partition)?;
    let (poly, excluded, status) = if args.xfamily {
        let fam = XHermiteFamily::new(lambda.clone()).map_err(|e| e.to_string())?;
        let p = fam.poly(args.j).map_err(|e| e.to_string())?;
        (p, fam.excluded().to_vec(), "proper".to_string())
    } else {
        let w = h_lambda_j(&lambda, args.j as i64);
        let status = match w.status {
            IndexStatus::Proper => "proper",
            IndexStatus::DependentIndex => "dependent-index",
            IndexStatus::NegativeIndex => "negative-index",
        };
        (w.poly, lambda.gaps().values().to_vec(), status.to_string())
    };
    let out = PolyOutput {
        partition: lambda.parts().to_vec(),
        j: args.j,
        degree: match poly.degree() {
            Degree::NegInf => None,
            Degree::Of(d) => Some(d),
        },
        parity: poly.parity(),
        coeffs: poly,
        excluded,
        status,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(0)
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("range must be lo:hi, got {s:?}"))?;
    let lo: f64 = lo.parse().map_err(|_| format!("bad range bound {lo:?}"))?;
    let hi: f64 = hi.parse().map_err(|_| format!("bad range bound {hi:?}"))?;
    if hi <= lo {
        return Err(format!("range must be increasing, got {s:?}"));
    }
    Ok((lo, hi))
}

fn cmd_potential(args: &PotentialArgs) -> Result<i32, String> {
    if args.check_regularity {
        let report = regularity_theorem_check(args.max_weight);
        #[derive(Serialize)]
        struct Out {
            max_weight: u32,
            partitions_checked: usize,
            all_agree: bool,
        }
        let out = Out {
            max_weight: report.max_weight,
            partitions_checked: report.entries.len(),
            all_agree: report.all_agree,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
        );
        return Ok(if report.all_agree { 0 } else { 1 });
    }

    let lambda = parse_partition(&args.partition)?;
    if args.samples < 2 {
        return Err("need at least 2 samples".into());
    }
    let pot = potential(&lambda);
    let (lo, hi) = parse_range(&args.range)?;
    if args.csv {
        println!("x,U");
        // exact rational grid keeps the evaluation exact until formatting
        let lo_r = f64_to_rat(lo);
        let hi_r = f64_to_rat(hi);
        let step = (&hi_r - &lo_r) / Rat::from_integer((args.samples as i64 - 1).into());
        for i in 0..args.samples {
            let x = &lo_r + &step * Rat::from_integer((i as i64).into());
            match pot.u.eval(&x) {
                Ok(u) => println!("{},{}", fmt15(rat_to_f64(&x)), fmt15(rat_to_f64(&u))),
                Err(_) => println!("{},nan", fmt15(rat_to_f64(&x))),
            }
        }
    } else {
        #[derive(Serialize)]
        struct Out {
            partition: Vec<u32>,
            regular: bool,
            numerator: Poly,
            denominator: Poly,
        }
        let out = Out {
            partition: lambda.parts().to_vec(),
            regular: pot.regular,
            numerator: pot.u.num().clone(),
            denominator: pot.u.den().clone(),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
        );
    }
    Ok(0)
}

fn f64_to_rat(x: f64) -> Rat {
    // CLI ranges are human-entered decimals; a denominator of 10^6 is exact
    // for them
    let scaled = (x * 1e6).round() as i64;
    Rat::new(scaled.into(), 1_000_000.into())
}

#[derive(Serialize)]
struct VerifyOutput {
    partition: Vec<u32>,
    checks: Vec<String>,
    failures: Vec<xhermite::report::CheckFailure>,
}

fn report_to_output(lambda: &Partition, reports: Vec<VerifyReport>) -> VerifyOutput {
    let mut merged = VerifyReport::new(lambda.to_string());
    for r in reports {
        merged.absorb(r);
    }
    VerifyOutput {
        partition: lambda.parts().to_vec(),
        checks: merged.checks,
        failures: merged.failures,
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, String> {
    let lambda = parse_partition(&args.partition)?;
    let tests: Vec<Poly> = hermite_tests(args.jmax)
        .into_iter()
        .enumerate()
        .filter(|(j, _)| !lambda.gaps().contains(*j as u32))
        .map(|(_, p)| p)
        .collect();

    let mut reports = vec![
        verify_eigen_general(&lambda, args.jmax),
        verify_intertwining(&lambda, &tests),
    ];
    for k in (0..=4).filter(|&k| !lambda.gaps().contains(k)) {
        reports.push(verify_factorizations(&lambda, k, &tests).map_err(|e| e.to_string())?);
    }
    if lambda.is_reduced() {
        let fam = XHermiteFamily::new(lambda.clone()).map_err(|e| e.to_string())?;
        reports.push(verify_eigen(&fam, args.jmax));
    }
    let out = report_to_output(&lambda, reports);
    let code = if out.failures.is_empty() { 0 } else { 1 };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(code)
}

fn cmd_subspace(args: &SubspaceArgs) -> Result<i32, String> {
    let lambda = parse_partition(&args.partition)?;
    #[derive(Serialize)]
    struct ConstraintOut {
        xi: [String; 2],
        r: [String; 2],
        multiplicity: u32,
    }
    #[derive(Serialize)]
    struct Out {
        partition: Vec<u32>,
        #[serde(skip_serializing_if = "Option::is_none")]
        codimension: Option<xhermite::subspace::CodimReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        constraints: Option<Vec<ConstraintOut>>,
        primitivity: xhermite::subspace::PrimitivityReport,
    }

    let codimension = args.codim.then(|| codim_report(&lambda));
    let constraints = if args.constraints {
        let ctx = Ctx::new(60);
        let cs = root_constraints(&lambda, args.precision).map_err(|e| e.to_string())?;
        Some(
            cs.iter()
                .map(|c| ConstraintOut {
                    xi: [fmt15(ctx.to_f64(&c.xi.re)), fmt15(ctx.to_f64(&c.xi.im))],
                    r: [fmt15(ctx.to_f64(&c.r.re)), fmt15(ctx.to_f64(&c.r.im))],
                    multiplicity: c.multiplicity,
                })
                .collect(),
        )
    } else {
        None
    };
    let out = Out {
        partition: lambda.parts().to_vec(),
        codimension,
        constraints,
        primitivity: primitivity_check(&lambda),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(0)
}

fn cmd_gram(args: &GramArgs) -> Result<i32, String> {
    let lambda = parse_partition(&args.partition)?;
    let fam = XHermiteFamily::new(lambda).map_err(|e| e.to_string())?;
    let ctx = Ctx::from_env();
    let report = gram_matrix(&fam, args.jmax, args.tol, &ctx).map_err(|e| e.to_string())?;
    let threshold = 10.0 * args.tol;
    let ok = report.ok(threshold);
    if args.csv {
        println!("i,j,value,abs_error,closed_form,deviation");
        for e in &report.entries {
            let closed = e.closed_form.map(fmt15).unwrap_or_else(|| "".to_string());
            println!(
                "{},{},{},{},{},{}",
                e.i,
                e.j,
                fmt15(e.value),
                fmt15(e.abs_error_estimate),
                closed,
                fmt15(e.deviation)
            );
        }
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
        );
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_recur(args: &RecurArgs) -> Result<i32, String> {
    let lambda = parse_partition(&args.partition)?;
    if let Some(n) = args.generate {
        let generated = generate_via_recurrence(&lambda, n as usize);
        let mut matches = true;
        if args.compare_wronskian {
            for (m, g) in generated.iter().enumerate() {
                if g != &h_lambda_j(&lambda, m as i64).poly {
                    matches = false;
                }
            }
        }
        #[derive(Serialize)]
        struct Out {
            partition: Vec<u32>,
            n: u32,
            polys: Vec<Poly>,
            #[serde(skip_serializing_if = "Option::is_none")]
            matches_direct_wronskians: Option<bool>,
        }
        let out = Out {
            partition: lambda.parts().to_vec(),
            n,
            polys: generated,
            matches_direct_wronskians: args.compare_wronskian.then_some(matches),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
        );
        return Ok(if matches { 0 } else { 1 });
    }

    // --verify is the default action
    let reports = vec![
        verify_recurrence(&lambda, args.nmax),
        verify_induction_identity(&lambda, args.nmax.max(0)),
    ];
    let out = report_to_output(&lambda, reports);
    let code = if out.failures.is_empty() { 0 } else { 1 };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(code)
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32, String> {
    let w = args.max_weight;
    let mut checks: Vec<String> = Vec::new();
    let mut failures: Vec<String> = Vec::new();
    let mut record = |name: String, ok: bool| {
        if !ok {
            failures.push(name.clone());
        }
        checks.push(name);
    };

    let regularity = regularity_theorem_check(w);
    record(
        format!("krein-adler equivalence (weight <= {w})"),
        regularity.all_agree,
    );

    for l in sweep_partitions(w) {
        let h = h_lambda(&l);
        record(
            format!("degree law {l}"),
            h.degree() == Degree::Of(l.weight() as usize),
        );
        let refl_ok = if l.weight() % 2 == 0 {
            h.reflect() == h
        } else {
            h.reflect() == -&h
        };
        record(format!("parity law {l}"), refl_ok);
        let codim = codim_report(&l);
        record(
            format!("codimension degree count {l}"),
            codim.missing_degree_count == l.weight() as usize,
        );
        record(
            format!("codimension rank route {l}"),
            (codim.divisibility_rank == l.weight() as usize) == codim.squarefree,
        );
    }

    let small = w.min(4);
    for l in sweep_partitions(small) {
        record(
            format!("eigenrelation {l}"),
            verify_eigen_general(&l, 8).ok(),
        );
        let generated = generate_via_recurrence(&l, 8);
        let matches = generated
            .iter()
            .enumerate()
            .all(|(n, g)| g == &h_lambda_j(&l, n as i64).poly);
        record(format!("recurrence dual oracle {l}"), matches);
    }

    #[derive(Serialize)]
    struct Out {
        max_weight: u32,
        checks_run: usize,
        failures: Vec<String>,
    }
    let code = if failures.is_empty() { 0 } else { 1 };
    let out = Out {
        max_weight: w,
        checks_run: checks.len(),
        failures,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let result = match &cli.command {
        Command::Poly(args) => cmd_poly(args),
        Command::Potential(args) => cmd_potential(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Subspace(args) => cmd_subspace(args),
        Command::Gram(args) => cmd_gram(args),
        Command::Recur(args) => cmd_recur(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    eprintln!("elapsed {:.3} s", started.elapsed().as_secs_f64());
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
