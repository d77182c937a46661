use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcrank::crank_gf::{build_Ct, build_crank_gf, reduce_mod_phi3, scan, verify_theorem, DEFAULT_DIRECT_BOUND};
use qcrank::cyclotomic::format_rational;
use qcrank::modular_cert::{certify, coset_reps, cusp_reps, index_gamma0, orbit, wang_applies, RaduTuple};
use qcrank::partition::{count_t_core, crank_table};
use qcrank::{CycElem, EtaQuotientSpec};

#[derive(Parser)]
#[command(name = "qcrank", version, about = "Crank generating functions for t-core partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Check the explained classes of C^(t) end to end.
    Verify {
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = DEFAULT_DIRECT_BOUND)]
        nmax: u64,
    },
    /// Build a vanishing certificate for one progression of an eta-quotient.
    Certify {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Auxiliary vector, one entry per divisor of N.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
    },
    /// Print the square-class orbit of β.
    Orbit {
        #[command(flatten)]
        tuple: TupleArgs,
    },
    /// Cusp representatives and index of Γ0(N).
    Cusps {
        #[arg(long = "N")]
        n: u64,
    },
    /// Reduce C^(t) modulo Φ3 to an eta-quotient.
    Reduce {
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 200)]
        precision: usize,
    },
    /// Enumeration tables: p^(t)(n) with --t, else crank counts M(m, n).
    Oracle {
        #[arg(long)]
        t: Option<u32>,
        #[arg(long, default_value_t = 20)]
        nmax: u32,
    },
    /// Residues β mod α with p^(t)(αn + β) ≡ 0 mod the modulus for n ≤ nmax.
    Scan {
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 3)]
        modulus: u64,
        #[arg(long)]
        alpha: Option<u64>,
        #[arg(long, default_value_t = 20)]
        nmax: u64,
    },
    /// Coefficients of C^(t) mod Φ3 with --t, else of C(ζ, q) mod Φ_modulus.
    Dump {
        #[arg(long)]
        t: Option<u64>,
        #[arg(long, default_value_t = 5)]
        modulus: u32,
        #[arg(long, default_value_t = 50)]
        precision: usize,
    },
}

#[derive(Args)]
struct TupleArgs {
    #[arg(long)]
    alpha: u64,
    #[arg(long = "M")]
    m: u64,
    /// Level; defaults to M.
    #[arg(long = "N")]
    n: Option<u64>,
    /// Eta exponents, one per divisor of M.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    r: Vec<i64>,
    #[arg(long)]
    beta: u64,
}

impl TupleArgs {
    fn build(&self) -> Result<RaduTuple, Failure> {
        let tuple = RaduTuple::from_parts(self.alpha, self.m, self.n.unwrap_or(self.m), &self.r, self.beta)
            .map_err(|e| Failure::Usage(format!("--r: {e}")))?;
        tuple.validate().map_err(|e| Failure::Usage(format!("--beta/--alpha: {e}")))?;
        Ok(tuple)
    }
}

enum Failure {
    Usage(String),
}

/// A rendered report plus the mathematical verdict, if the command has one.
struct Report {
    human: String,
    json: Value,
    tsv: String,
    failure: Option<String>,
}

fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    strs(xs).join(sep)
}

fn cyc_json(c: &CycElem) -> Value {
    json!(strs(c.coeffs()))
}

fn usage<E: std::fmt::Display>(flag: &'static str) -> impl Fn(E) -> Failure {
    move |e| Failure::Usage(format!("{flag}: {e}"))
}

fn run(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Verify { t, nmax } => {
            let report = verify_theorem(*t, *nmax).map_err(usage("--t"))?;
            let mut human = format!("t = {t}, direct check through n = {nmax}\n");
            let _ = writeln!(human, "reduction: r = {}, j = {}", report.reduction.spec, report.reduction.j);
            let _ = writeln!(human, "explained: {{{}}}", join(&report.explained, ","));
            let _ = writeln!(human, "vanishing mod 3 but unexplained: {{{}}}", join(&report.unexplained_vanishing, ","));
            for c in &report.certificates {
                let _ = writeln!(human, "certificate {}: orbit {{{}}}, floor(nu) = {}, {}", c.tuple, join(&c.orbit, ","), c.nu_floor, c.verdict);
            }
            let _ = writeln!(human, "theorem match: {}", report.theorem_match);
            let tsv = report.explained.iter().map(|b| format!("{b}\n")).collect();
            let failure = (!report.theorem_match).then(|| {
                let listed: BTreeSet<u64> =
                    report.certificates.iter().flat_map(|c| c.orbit.iter().copied()).collect();
                let mut why = format!(
                    "explained {{{}}} vs certified {{{}}}",
                    join(&report.explained, ","),
                    join(&listed, ",")
                );
                for c in report.certificates.iter().filter(|c| !c.verdict.is_proven()) {
                    let _ = write!(why, "; {}: {}", c.tuple, c.verdict);
                }
                why
            });
            Ok(Report { human, json: report.to_json(), tsv, failure })
        }
        Command::Certify { tuple, a } => {
            let tuple = tuple.build()?;
            let a = EtaQuotientSpec::new(tuple.level(), a).map_err(usage("--a"))?;
            let cert = certify(&tuple, &a).map_err(usage("--a"))?;
            let mut human = format!("tuple {tuple}, a = {a}\n");
            let _ = writeln!(human, "kappa = {}, pi = ({}, {})", cert.kappa, cert.pi.0, cert.pi.1);
            let _ = writeln!(human, "orbit {{{}}}, beta_min = {}", join(&cert.orbit, ","), cert.beta_min);
            for (g, p) in cert.reps.iter().zip(&cert.p_values) {
                let _ = writeln!(human, "  {g}: p_lower = {}, p_star = {}", format_rational(&p.p_lower), format_rational(&p.p_star));
            }
            let _ = writeln!(human, "nu = {}, floor(nu) = {}", format_rational(&cert.nu), cert.nu_floor);
            let _ = writeln!(human, "verdict: {}", cert.verdict);
            let mut tsv = String::new();
            for (i, (g, p)) in cert.reps.iter().zip(&cert.p_values).enumerate() {
                let [a, b, c, d] = g.entries();
                let _ = writeln!(tsv, "{i}\t{a}\t{b}\t{c}\t{d}\t{}\t{}", format_rational(&p.p_lower), format_rational(&p.p_star));
            }
            let failure = match &cert.verdict {
                qcrank::modular_cert::Verdict::Failed(why) => Some(why.clone()),
                _ => None,
            };
            Ok(Report { human, json: cert.to_json(), tsv, failure })
        }
        Command::Orbit { tuple } => {
            let tuple = tuple.build()?;
            let orb = orbit(&tuple).map_err(usage("--alpha"))?;
            Ok(Report {
                human: format!("orbit of {} under {tuple}: {{{}}}\n", tuple.beta(), join(&orb, ",")),
                json: json!({ "tuple": tuple.to_string(), "orbit": strs(&orb) }),
                tsv: orb.iter().map(|b| format!("{b}\n")).collect(),
                failure: None,
            })
        }
        Command::Cusps { n } => {
            if *n == 0 {
                return Err(Failure::Usage("--N: level must be positive".into()));
            }
            let cusps = cusp_reps(*n);
            let reps = coset_reps(*n);
            let index = index_gamma0(*n);
            let mut human = format!("Gamma0({n}): index {index}, {} cusp classes\n", cusps.len());
            let mut tsv = String::new();
            for g in &cusps {
                let (a, c) = g.cusp();
                let _ = writeln!(human, "  {a}/{c}  {g}");
                let [a, b, c, d] = g.entries();
                let _ = writeln!(tsv, "{a}\t{b}\t{c}\t{d}");
            }
            let _ = writeln!(human, "double-coset representatives ({}): {}", if wang_applies(*n) { "lower-triangular" } else { "cusp-based" }, join(&reps, ", "));
            let entries = |gs: &[qcrank::modular_cert::CosetRep]| -> Vec<Vec<String>> { gs.iter().map(|g| strs(g.entries())).collect() };
            Ok(Report {
                human,
                json: json!({
                    "N": n.to_string(),
                    "index": index.to_string(),
                    "cusps": entries(&cusps),
                    "reps": entries(&reps),
                }),
                tsv,
                failure: None,
            })
        }
        Command::Reduce { t, precision } => match reduce_mod_phi3(*t, *precision) {
            Ok(red) => Ok(Report {
                human: format!(
                    "C^({t}) = eta{} * prod (1-q^{}n)^{} mod Phi3, checked to q^{}\n",
                    red.spec,
                    3 * t,
                    red.j,
                    red.verified_to
                ),
                json: json!({
                    "t": t.to_string(),
                    "r": strs(red.spec.values()),
                    "j": red.j.to_string(),
                    "verified_to": red.verified_to.to_string(),
                }),
                tsv: format!("{}\t{}\n", join(red.spec.values(), ","), red.j),
                failure: None,
            }),
            Err(e @ qcrank::crank_gf::CrankError::ReductionMismatch { .. }) => Ok(Report {
                human: format!("{e}\n"),
                json: json!({ "t": t.to_string(), "error": e.to_string() }),
                tsv: String::new(),
                failure: Some(e.to_string()),
            }),
            Err(e) => Err(Failure::Usage(format!("--t: {e}"))),
        },
        Command::Oracle { t: Some(t), nmax } => {
            let counts = (0..=*nmax)
                .map(|n| count_t_core(n, *t).map(|c| (n, c)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage("--nmax"))?;
            let tsv: String = counts.iter().map(|(n, c)| format!("{n}\t{c}\n")).collect();
            Ok(Report {
                human: tsv.clone(),
                json: json!({
                    "t": t.to_string(),
                    "counts": counts.iter().map(|(n, c)| json!({"n": n.to_string(), "count": c.to_string()})).collect::<Vec<_>>(),
                }),
                tsv,
                failure: None,
            })
        }
        Command::Oracle { t: None, nmax } => {
            let table = crank_table(*nmax).map_err(usage("--nmax"))?;
            let tsv: String = table.entries().map(|(m, n, c)| format!("{m}\t{n}\t{c}\n")).collect();
            let rows: Vec<Value> = table
                .entries()
                .map(|(m, n, c)| json!({"m": m.to_string(), "n": n.to_string(), "count": c.to_string()}))
                .collect();
            Ok(Report { human: tsv.clone(), json: json!({ "crank_counts": rows }), tsv, failure: None })
        }
        Command::Scan { t, modulus, alpha, nmax } => {
            let alpha = alpha.unwrap_or(3 * t);
            let found = scan(*t, *modulus, alpha, *nmax).map_err(usage("--modulus/--alpha"))?;
            Ok(Report {
                human: format!(
                    "p^({t})({alpha}n + b) = 0 mod {modulus} for n <= {nmax} at b in {{{}}}\n",
                    join(&found.residues, ",")
                ),
                json: json!({
                    "t": t.to_string(),
                    "modulus": modulus.to_string(),
                    "alpha": alpha.to_string(),
                    "nmax": nmax.to_string(),
                    "residues": strs(&found.residues),
                }),
                tsv: found.residues.iter().map(|b| format!("{b}\n")).collect(),
                failure: None,
            })
        }
        Command::Dump { t, modulus, precision } => {
            let series = match t {
                Some(t) => build_Ct(*t, *precision).map_err(usage("--t"))?,
                None => build_crank_gf(*modulus, *precision).map_err(usage("--modulus"))?,
            };
            let tsv: String =
                series.coeffs().iter().enumerate().map(|(i, c)| format!("{i}\t{}\n", join(c.coeffs(), ","))).collect();
            Ok(Report {
                human: tsv.clone(),
                json: json!({
                    "order": series.coeffs()[0].order().to_string(),
                    "coefficients": series.coeffs().iter().map(cyc_json).collect::<Vec<_>>(),
                }),
                tsv,
                failure: None,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.common.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool is configured once");
    }
    let report = match run(&cli.command) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.common.format {
        Format::Human => report.human,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("report serializes") + "\n",
        Format::Tsv => report.tsv,
    };
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: --out: {e}");
        return ExitCode::from(2);
    }
    match report.failure {
        Some(why) => {
            eprintln!("failed: {why}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
