use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use caloop::classify::{classify_p3, compute_orbits, named_representative, quotient_loop, ClassifyOptions, OrbitLabel};
use caloop::loops::{
    exceptional_loop_8, is_automorphic, is_isomorphic, power_associativity_witness, structure_profile,
    AutomorphicMethod, CayleyLoop, Coverage, IsoOutcome, NonIsoReason, DEFAULT_SAMPLES,
};
use caloop::primes::require_prime;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "caloop", version, about = "Commutative automorphic loops of order p^3")]
struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, env = "CALOOP_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and certify the seven loops of order p^3.
    Classify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check identity (A) exhaustively everywhere.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, default_value_t = DEFAULT_SAMPLES, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Orbits of GL_2(p) on the 3-dimensional subspaces of Z(F_p).
    Orbits {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check properties of a Cayley table file.
    Verify {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "loop,comm,auto,pa")]
        check: Vec<Check>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether two tables are isomorphic (exit 0 yes, 1 no).
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Write the Cayley table of one catalog loop.
    Export {
        #[arg(long)]
        p: u32,
        /// Q1..Q5, or exceptional-8 when p = 2.
        #[arg(long)]
        which: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    Loop,
    Comm,
    Auto,
    Pa,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_table(path: &Path) -> Result<CayleyLoop> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    CayleyLoop::parse(&text).with_context(|| format!("{}", path.display()))
}

fn run_classify(p: u32, out: Option<&Path>, exhaustive: bool, samples: u64, seed: u64) -> Result<ExitCode> {
    let opts = ClassifyOptions { exhaustive, samples, seed, ..Default::default() };
    let report = classify_p3(p, opts)?;
    emit(out, &(serde_json::to_string_pretty(&report)? + "\n"))?;
    for e in &report.entries {
        eprintln!(
            "{:<14} order {:>4}  center {:>4}  {}",
            e.name,
            e.profile.order,
            e.profile.center_size,
            if e.profile.is_group { "group" } else { "nonassociative" }
        );
    }
    eprintln!("{} loops of order {}, all certificates passed", report.entries.len(), p.pow(3));
    Ok(ExitCode::SUCCESS)
}

fn run_orbits(p: u32, out: Option<&Path>) -> Result<ExitCode> {
    let report = compute_orbits(p)?;
    emit(out, &(serde_json::to_string_pretty(&report)? + "\n"))?;
    for o in &report.orbits {
        eprintln!("{}: {} subspaces, representative {}", o.label, o.size, o.named_representative);
    }
    eprintln!("{} orbits over {} subspaces", report.orbits.len(), report.total_subspaces);
    Ok(ExitCode::SUCCESS)
}

fn run_verify(path: &Path, checks: &[Check], samples: u64, seed: u64) -> Result<ExitCode> {
    // Parsing already enforces the loop axioms.
    let q = read_table(path)?;
    let mut ok = true;
    let mut traits = Vec::new();
    if checks.contains(&Check::Loop) {
        println!("loop: yes (order {})", q.order());
    }
    let commutative = match q.commutativity_witness() {
        None => true,
        Some((a, b)) => {
            if checks.contains(&Check::Comm) {
                println!("commutative: no ({a}*{b} = {}, {b}*{a} = {})", q.mul(a, b), q.mul(b, a));
                ok = false;
            }
            false
        }
    };
    if commutative {
        traits.push("commutative");
        if checks.contains(&Check::Comm) {
            println!("commutative: yes");
        }
    }
    if checks.contains(&Check::Auto) {
        let method = if commutative {
            AutomorphicMethod::IdentityA { coverage: Coverage::Auto, samples, seed }
        } else {
            AutomorphicMethod::Inner
        };
        let c = is_automorphic(&q, method)?;
        let how = format!("{}, {}, {} checks", c.method, if c.exhaustive { "exhaustive" } else { "sampled" }, c.checked);
        match c.counterexample {
            None => {
                traits.push("automorphic");
                println!("automorphic: yes ({how})");
            }
            Some(w) => {
                ok = false;
                println!("automorphic: no ({how}); witness {}", serde_json::to_string(&w)?);
            }
        }
    }
    if checks.contains(&Check::Pa) {
        match power_associativity_witness(&q) {
            None => println!("power-associative: yes"),
            Some((x, i, j)) => {
                ok = false;
                println!("power-associative: no (x = {x}: x^{i} x^{j} != x^{})", i + j);
            }
        }
    }
    let profile = structure_profile(&q);
    if profile.is_group {
        traits.push("group");
    }
    let summary = if traits.is_empty() { "loop".to_string() } else { traits.join(" ") };
    println!("{summary}, center size {}", profile.center_size);
    println!("profile: {}", serde_json::to_string(&profile)?);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run_iso(a: &Path, b: &Path) -> Result<ExitCode> {
    let (qa, qb) = (read_table(a)?, read_table(b)?);
    match is_isomorphic(&qa, &qb)? {
        IsoOutcome::Isomorphic(map) => {
            let map: Vec<String> = map.iter().map(u32::to_string).collect();
            println!("isomorphic: {}", map.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        IsoOutcome::NotIsomorphic(NonIsoReason::Invariant(field)) => {
            println!("not isomorphic: {field} differs");
            Ok(ExitCode::from(1))
        }
        IsoOutcome::NotIsomorphic(NonIsoReason::SearchExhausted { nodes }) => {
            println!("not isomorphic: search exhausted after {nodes} nodes");
            Ok(ExitCode::from(1))
        }
    }
}

fn run_export(p: u32, which: &str, out: Option<&Path>) -> Result<ExitCode> {
    require_prime(p as u64)?;
    let table = if which.eq_ignore_ascii_case("exceptional-8") {
        if p != 2 {
            bail!("exceptional-8 exists only for p = 2");
        }
        exceptional_loop_8()
    } else {
        let label: OrbitLabel = which.parse()?;
        quotient_loop(&named_representative(p, label)?)?
    };
    emit(out, &table.to_text())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Classify { p, out, exhaustive, samples, seed } => {
            run_classify(p, out.as_deref(), exhaustive, samples, seed)
        }
        Command::Orbits { p, out } => run_orbits(p, out.as_deref()),
        Command::Verify { table, check, samples, seed } => run_verify(&table, &check, samples, seed),
        Command::Iso { a, b } => run_iso(&a, &b),
        Command::Export { p, which, out } => run_export(p, &which, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_iso = matches!(cli.command, Command::Iso { .. });
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            // `iso` reserves 1 for "not isomorphic".
            ExitCode::from(if is_iso { 2 } else { 1 })
        }
    }
}
