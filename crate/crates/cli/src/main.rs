use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mfs::{
    classify, expand_product, find_witness, has_multiplicity_bruteforce, overlaps, witness_via_reduction, Axis,
    Frame, LineRef, Partition, RichardsonQuadruple, Verdict,
};
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "mfs", version, about = "Schubert products on Grassmannians and multiplicity-freeness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand σ_λ · σ_μ into Schubert classes.
    Product(Pair),
    /// Decide in closed form whether the product has a coefficient ≥ 2.
    Classify {
        #[command(flatten)]
        pair: Pair,
        /// Print the demolition trace.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Show a shape ν and two LR fillings proving c ≥ 2, or "none".
    Witness {
        #[command(flatten)]
        pair: Pair,
        /// Build the witness by reduction instead of searching the expansion.
        #[arg(long)]
        construct: bool,
    },
    /// Compare the classifier with the brute-force oracle on every pair in every frame up to the bounds.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        max_l: u16,
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        max_k: u16,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List the multiplicity-free pairs in a frame.
    EnumerateMf {
        #[command(flatten)]
        frame: FrameArgs,
        /// Only pairs whose quadruple is already basic.
        #[arg(long)]
        basic_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Show line statuses, the basic demolition and the Stembridge lines.
    Demolish(Pair),
}

#[derive(Args, Clone, Copy)]
struct FrameArgs {
    /// Number of rows ℓ.
    #[arg(short = 'l', long = "rows")]
    rows: usize,
    /// Number of columns k.
    #[arg(short = 'k', long = "cols")]
    cols: usize,
}

impl FrameArgs {
    fn frame(self) -> Frame {
        Frame::new(self.rows, self.cols)
    }
}

#[derive(Args)]
struct Pair {
    #[command(flatten)]
    frame: FrameArgs,
    /// λ, e.g. "4,4,2,2" or "7^5,3"; "" or "0" for the empty partition.
    #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
    lam: Partition,
    /// μ, same format as λ.
    #[arg(value_parser = parse_partition, allow_hyphen_values = true)]
    mu: Partition,
    #[arg(long)]
    json: bool,
}

impl Pair {
    fn check(&self) -> mfs::Result<Frame> {
        let f = self.frame.frame();
        self.lam.check_fits(f)?;
        self.mu.check_fits(f)?;
        Ok(f)
    }

    fn quadruple(&self) -> mfs::Result<Option<RichardsonQuadruple>> {
        let f = self.check()?;
        if overlaps(&self.lam, &self.mu, f) {
            return Ok(None);
        }
        RichardsonQuadruple::new(self.lam.clone(), self.mu.clone(), f).map(Some)
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: mfs::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Product(pair) => product(&pair),
        Command::Classify { pair, verbose } => classify_cmd(&pair, verbose),
        Command::Witness { pair, construct } => witness(&pair, construct),
        Command::Verify {
            max_l,
            max_k,
            jobs,
            json,
        } => verify(max_l.into(), max_k.into(), jobs, json),
        Command::EnumerateMf {
            frame,
            basic_only,
            json,
        } => enumerate_mf(frame.frame(), basic_only, json),
        Command::Demolish(pair) => demolish(&pair),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn print_json(v: &impl serde::Serialize) -> Result<(), serde_json::Error> {
    println!("{}", serde_json::to_string(v)?);
    Ok(())
}

fn product(pair: &Pair) -> CmdResult {
    let e = expand_product(&pair.lam, &pair.mu, pair.check()?)?;
    if pair.json {
        print_json(&e)?;
    } else {
        print!("{e}");
    }
    Ok(ExitCode::SUCCESS)
}

fn lines(ls: impl IntoIterator<Item = LineRef>, axis: Axis) -> Vec<usize> {
    ls.into_iter().filter(|l| l.axis == axis).map(|l| l.index).collect()
}

fn list(v: &[usize]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn classify_cmd(pair: &Pair, verbose: bool) -> CmdResult {
    let f = pair.check()?;
    let v = classify(&pair.lam, &pair.mu, f)?;
    if pair.json {
        print_json(&v)?;
        return Ok(ExitCode::SUCCESS);
    }
    if verbose {
        println!("input: (({}), ({}), {f})", pair.lam, pair.mu);
        if let Some(q) = pair.quadruple()? {
            let full = q.full_lines();
            println!("full columns: {}", list(&lines(full.iter().copied(), Axis::Column)));
            println!("full rows: {}", list(&lines(full, Axis::Row)));
        }
    }
    print_verdict(&v, verbose);
    Ok(ExitCode::SUCCESS)
}

fn print_verdict(v: &Verdict, verbose: bool) {
    if let Some(d) = &v.demolished {
        println!("demolished: {d}");
        if verbose && !d.frame().is_degenerate() {
            for (name, p) in [("lambda", d.lam()), ("mu", d.mu())] {
                let short = p.shortness(d.frame()).map_or("-".into(), |s| s.to_string());
                println!("  {name}: {:?}, shortness {short}", p.shape_class());
            }
        }
    }
    println!("{v}");
}

fn witness(pair: &Pair, construct: bool) -> CmdResult {
    let w = match pair.quadruple()? {
        None => None,
        Some(q) if construct => witness_via_reduction(&q).ok(),
        Some(q) => find_witness(&q),
    };
    match (w, pair.json) {
        (None, true) => println!("null"),
        (None, false) => println!("none"),
        (Some(w), true) => print_json(&w)?,
        (Some(w), false) => {
            print!("{w}");
            if construct {
                println!();
                println!("steps:");
                for s in w.steps() {
                    println!("  {s}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

struct Mismatch {
    q: RichardsonQuadruple,
    check: &'static str,
    classified: String,
    oracle: String,
}

impl Mismatch {
    fn to_json(&self) -> Value {
        json!({
            "lam": self.q.lam(),
            "mu": self.q.mu(),
            "frame": self.q.frame(),
            "check": self.check,
            "classify": self.classified,
            "oracle": self.oracle,
        })
    }
}

fn verdict_word(has: bool) -> String {
    if has { "has_multiplicity" } else { "multiplicity_free" }.to_string()
}

/// Every check run on one quadruple: the classifier against the oracle, then
/// the demolition invariants.
fn verify_one(q: &RichardsonQuadruple) -> (usize, Vec<Mismatch>) {
    let brute = |q: &RichardsonQuadruple| has_multiplicity_bruteforce(q.lam(), q.mu(), q.frame()).expect("fits");
    let mut out = Vec::new();
    let mut miss = |check, classified: String, oracle: String| {
        out.push(Mismatch {
            q: q.clone(),
            check,
            classified,
            oracle,
        })
    };
    let has = brute(q);
    let v = classify(q.lam(), q.mu(), q.frame()).expect("fits");
    if v.has_multiplicity() != has {
        miss("classify", v.to_string(), verdict_word(has));
    }
    let mut checks = 1;

    let d = q.basic_demolition();
    checks += 1;
    if !d.is_basic() {
        miss("basic demolition is basic", d.to_string(), "not basic".into());
    } else if brute(&d) != has {
        miss("basic demolition keeps the verdict", verdict_word(!has), verdict_word(has));
    }

    let empty = q.empty_lines();
    if !empty.is_empty() {
        let e = expand_product(q.lam(), q.mu(), q.frame()).expect("fits");
        for line in empty {
            checks += 1;
            let r = q.remove_empty_line(line).expect("empty line");
            if expand_product(r.lam(), r.mu(), r.frame()).expect("fits").terms() != e.terms() {
                miss("empty-line removal keeps the expansion", format!("{line} removed"), "changed".into());
            }
        }
    }
    for line in q.stembridge_lines() {
        checks += 1;
        let s = q.stembridge_demolish(line).expect("stembridge line");
        if !has && brute(&s) {
            miss("stembridge demolition lifts multiplicity", format!("{line}: {s}"), verdict_word(has));
        }
    }
    (checks, out)
}

fn verify(max_l: usize, max_k: usize, jobs: Option<usize>, json: bool) -> CmdResult {
    let started = Instant::now();
    let mut frames = Vec::new();
    let mut quads = Vec::new();
    for l in 1..=max_l {
        for k in 1..=max_k {
            let f = Frame::new(l, k);
            frames.push(f);
            let parts = f.partitions();
            for lam in &parts {
                for mu in &parts {
                    if let Ok(q) = RichardsonQuadruple::new(lam.clone(), mu.clone(), f) {
                        quads.push(q);
                    }
                }
            }
        }
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        pool = pool.num_threads(n);
    }
    let results: Vec<(usize, Vec<Mismatch>)> = pool.build()?.install(|| quads.par_iter().map(verify_one).collect());
    let checks: usize = results.iter().map(|r| r.0).sum();
    let mismatches: Vec<Mismatch> = results.into_iter().flat_map(|r| r.1).collect();

    if json {
        print_json(&json!({
            "frames": frames.len(),
            "max": [max_l, max_k],
            "pairs": quads.len(),
            "checks": checks,
            "mismatches": mismatches.iter().map(Mismatch::to_json).collect::<Vec<_>>(),
        }))?;
    } else {
        println!("frames: {} (1x1 to {max_l}x{max_k})", frames.len());
        println!("pairs: {}", quads.len());
        println!("checks: {checks}");
        println!("mismatches: {}", mismatches.len());
        for m in &mismatches {
            println!("  {} [{}]: classify {}, oracle {}", m.q, m.check, m.classified, m.oracle);
        }
    }
    eprintln!("elapsed: {:.2}s", started.elapsed().as_secs_f64());
    Ok(if mismatches.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn enumerate_mf(f: Frame, basic_only: bool, json: bool) -> CmdResult {
    let parts = f.partitions();
    let mut found = Vec::new();
    for lam in &parts {
        for mu in &parts {
            let Ok(q) = RichardsonQuadruple::new(lam.clone(), mu.clone(), f) else {
                continue;
            };
            if basic_only && !q.is_basic() {
                continue;
            }
            if !classify(lam, mu, f)?.has_multiplicity() {
                found.push(q);
            }
        }
    }
    if json {
        let v: Vec<Value> = found.iter().map(|q| json!({ "lam": q.lam(), "mu": q.mu() })).collect();
        print_json(&json!({ "frame": f, "pairs": v }))?;
    } else {
        for q in &found {
            println!("{}\t{}", q.lam(), q.mu());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn demolish(pair: &Pair) -> CmdResult {
    let Some(q) = pair.quadruple()? else {
        return Err(Box::new(mfs::Error::Overlap {
            lam: pair.lam.clone(),
            mu: pair.mu.clone(),
            frame: pair.frame.frame(),
        }));
    };
    let full = q.full_lines();
    let empty = q.empty_lines();
    let stembridge = q.stembridge_lines();
    let basic = q.basic_demolition();
    if pair.json {
        let axes = |ls: &[LineRef]| {
            json!({
                "columns": lines(ls.iter().copied(), Axis::Column),
                "rows": lines(ls.iter().copied(), Axis::Row),
            })
        };
        print_json(&json!({
            "quadruple": q,
            "full": axes(&full),
            "empty": axes(&empty),
            "stembridge": axes(&stembridge),
            "basic_demolition": basic,
        }))?;
        return Ok(ExitCode::SUCCESS);
    }
    println!("quadruple: {q}");
    for (name, ls) in [("full", &full), ("empty", &empty), ("stembridge", &stembridge)] {
        println!("{name} columns: {}", list(&lines(ls.iter().copied(), Axis::Column)));
        println!("{name} rows: {}", list(&lines(ls.iter().copied(), Axis::Row)));
    }
    println!("basic demolition: {basic}");
    Ok(ExitCode::SUCCESS)
}
