//! Command-line front end. Exit codes: 0 success, 1 hypothesis or
//! length violation, 2 input error, 3 internal verification failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use apc::analysis::{
    find_good_cycles, find_good_pairs, parallel_partition, singular_vertices,
    theorem2_hypotheses, verify_lemma4, GoodPair, HypothesisViolation,
};
use apc::cgs::{generate_no_good_pair, generate_random, CgsError};
use apc::doc::{
    certificate_to_document, parse_certificate, parse_instance, render_certificate, render_dot,
    render_instance, verify_certificate, DocError, NamedInstance,
};
use apc::oracle::{brute_vertex_pancyclic, EnumerationBudget};
use apc::synthesis::{certify_vertex_pancyclic, pancyclic_cycle, SynthesisError};

#[derive(Parser)]
#[command(name = "apc", about = "Alternating-cycle analysis and synthesis for colored generalized sums", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenMode {
    NoGoodPair,
    Random,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze an instance: good pairs, good cycles, singular vertices,
    /// parallel classes, and the exterior consistency report.
    Check { file: PathBuf },
    /// Construct one alternating cycle of the given length through the
    /// given vertex.
    Cycle {
        file: PathBuf,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        length: usize,
    },
    /// Emit a full vertex-pancyclicity certificate as JSON.
    Certify {
        file: PathBuf,
        /// Cross-check against exhaustive enumeration when the instance
        /// fits the budget.
        #[arg(long)]
        oracle: bool,
    },
    /// Generate a random instance and print its JSON document.
    Gen {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = GenMode::NoGoodPair)]
        mode: GenMode,
    },
    /// Render an instance as an undirected DOT graph.
    Export {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
        /// "vertex,length": draw one constructed cycle bold.
        #[arg(long)]
        highlight: Option<String>,
    },
    /// Exhaustively enumerate alternating cycles and decide
    /// vertex-pancyclicity by brute force.
    Oracle { file: PathBuf },
    /// Re-verify a certificate against its instance using only the
    /// alternation checker.
    Verify { instance: PathBuf, certificate: PathBuf },
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

fn budget() -> Result<EnumerationBudget, Failure> {
    let mut b = EnumerationBudget::default();
    if let Ok(raw) = std::env::var("APC_BUDGET") {
        b.max_vertices = raw
            .trim()
            .parse()
            .map_err(|_| fail(2, format!("APC_BUDGET {raw:?} is not a vertex count")))?;
    }
    Ok(b)
}

fn load(path: &PathBuf) -> Result<NamedInstance, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn fmt_pair(named: &NamedInstance, gp: &GoodPair) -> String {
    format!(
        "({}{}, {}{}) [{}]",
        named.name(gp.e1.0),
        named.name(gp.e1.1),
        named.name(gp.e2.0),
        named.name(gp.e2.1),
        gp.color
    )
}

fn fmt_violation(named: &NamedInstance, v: &HypothesisViolation) -> String {
    match v {
        HypothesisViolation::GoodPair(gp) => format!("good pair {}", fmt_pair(named, gp)),
        HypothesisViolation::GoodCycle(gc) => format!(
            "good cycle {} {} {} {} [{}]",
            named.name(gc.vertices[0]),
            named.name(gc.vertices[1]),
            named.name(gc.vertices[2]),
            named.name(gc.vertices[3]),
            gc.color
        ),
        HypothesisViolation::SingularSide { summand, toward, witness, color } => format!(
            "singular side: every vertex of summand {summand} is singular toward summand {toward} (witness {}, {color}-singular)",
            named.name(*witness)
        ),
    }
}

fn synthesis_failure(named: &NamedInstance, e: SynthesisError) -> Failure {
    match e {
        SynthesisError::HypothesisViolated(v) => {
            fail(1, format!("hypothesis violated: {}", fmt_violation(named, &v)))
        }
        SynthesisError::LengthOutOfRange(_) | SynthesisError::OddLength(_) => {
            fail(1, e.to_string())
        }
        SynthesisError::VertexNotInPair(v) => {
            fail(2, format!("vertex {} not in the instance", named.name(v)))
        }
        other => fail(3, other.to_string()),
    }
}

fn cmd_check(file: &PathBuf) -> Result<(), Failure> {
    let named = load(file)?;
    let inst = &named.inst;
    let k = inst.summand_count();
    let sizes: Vec<String> = inst.summands().iter().map(|s| s.len().to_string()).collect();
    println!("summands: {k} (sizes {})", sizes.join(", "));
    let (red, blue) = inst.exterior().fold((0usize, 0usize), |(r, b), (_, _, c)| match c {
        apc::EdgeColor::Red => (r + 1, b),
        apc::EdgeColor::Blue => (r, b + 1),
    });
    println!("vertices: {}", inst.vertex_count());
    println!("exterior edges: {} ({red} red / {blue} blue)", inst.exterior_count());

    let mut all_pairs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let pairs = find_good_pairs(inst, i, j).expect("valid indices");
            for gp in &pairs {
                println!("  good pair between {i} and {j}: {}", fmt_pair(&named, gp));
            }
            all_pairs.extend(pairs);
        }
    }
    println!("good pairs: {}", all_pairs.len());

    let cycles = find_good_cycles(inst);
    for gc in &cycles {
        println!(
            "  good cycle: {} {} {} {} [{}]",
            named.name(gc.vertices[0]),
            named.name(gc.vertices[1]),
            named.name(gc.vertices[2]),
            named.name(gc.vertices[3]),
            gc.color
        );
    }
    println!("good cycles: {}", cycles.len());

    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let sing = singular_vertices(inst, i, j).expect("valid indices");
            let list: Vec<String> = sing
                .iter()
                .map(|&(v, c)| format!("{} ({c})", named.name(v)))
                .collect();
            println!(
                "singular vertices of summand {i} toward {j}: {}",
                if list.is_empty() { "none".to_string() } else { list.join(", ") }
            );
        }
    }

    for i in 0..k {
        for j in i + 1..k {
            if find_good_pairs(inst, i, j).expect("valid indices").is_empty() {
                let classes = parallel_partition(inst, i, j).expect("good-pair-free");
                let size = classes.first().map_or(0, |c| c.edges.len());
                println!(
                    "parallel classes between {i} and {j}: {} classes of size {size}",
                    classes.len()
                );
                let report = verify_lemma4(inst, i, j).expect("good-pair-free");
                for check in &report.checks {
                    let tag = if check.passed { "ok" } else { "FAIL" };
                    println!("  [{tag}] {}: {}", check.name, check.detail);
                }
            } else {
                println!("parallel classes between {i} and {j}: skipped (good pair present)");
            }
        }
    }

    match theorem2_hypotheses(inst) {
        Ok(()) => {
            println!("hypotheses: satisfied");
            Ok(())
        }
        Err(v) => Err(fail(1, format!("hypotheses violated: {}", fmt_violation(&named, &v)))),
    }
}

fn cmd_cycle(file: &PathBuf, vertex: &str, length: usize) -> Result<(), Failure> {
    let named = load(file)?;
    let v = named.resolve(vertex).map_err(|e| fail(2, e.to_string()))?;
    let cycle =
        pancyclic_cycle(&named.inst, v, length).map_err(|e| synthesis_failure(&named, e))?;
    let ids: Vec<&str> = cycle.vertices().iter().map(|&u| named.name(u)).collect();
    println!("{}", ids.join(" "));
    Ok(())
}

fn cmd_certify(file: &PathBuf, oracle: bool) -> Result<(), Failure> {
    let named = load(file)?;
    let cert =
        certify_vertex_pancyclic(&named.inst).map_err(|e| synthesis_failure(&named, e))?;
    let doc = certificate_to_document(&named, &cert);
    verify_certificate(&named, &doc)
        .map_err(|e| fail(3, format!("emitted certificate failed re-verification: {e}")))?;
    print!("{}", render_certificate(&doc));
    if oracle {
        let b = budget()?;
        if named.inst.vertex_count() > b.max_vertices {
            eprintln!(
                "oracle agreement: skipped ({} vertices over budget {})",
                named.inst.vertex_count(),
                b.max_vertices
            );
        } else {
            let report = brute_vertex_pancyclic(named.inst.flatten(), &b)
                .map_err(|e| fail(3, e.to_string()))?;
            if !report.pancyclic {
                return Err(fail(
                    3,
                    format!("oracle disagrees: {} uncovered cells", report.missing.len()),
                ));
            }
            eprintln!("oracle agreement: exact");
        }
    }
    Ok(())
}

fn cmd_gen(sizes: &[usize], seed: u64, mode: GenMode) -> Result<(), Failure> {
    let inst = match mode {
        GenMode::NoGoodPair => generate_no_good_pair(sizes, seed),
        GenMode::Random => generate_random(sizes, seed),
    }
    .map_err(|e| match e {
        e @ CgsError::RetriesExhausted(_) => fail(1, e.to_string()),
        other => fail(2, other.to_string()),
    })?;
    print!("{}", render_instance(&NamedInstance::with_default_names(inst)));
    Ok(())
}

fn cmd_export(file: &PathBuf, dot: &PathBuf, highlight: Option<&str>) -> Result<(), Failure> {
    let named = load(file)?;
    let cycle = match highlight {
        None => None,
        Some(raw) => {
            let (name, len) = raw
                .split_once(',')
                .ok_or_else(|| fail(2, format!("highlight {raw:?} is not \"vertex,length\"")))?;
            let v = named.resolve(name.trim()).map_err(|e| fail(2, e.to_string()))?;
            let len: usize = len
                .trim()
                .parse()
                .map_err(|_| fail(2, format!("highlight length {len:?} is not a number")))?;
            let cycle =
                pancyclic_cycle(&named.inst, v, len).map_err(|e| synthesis_failure(&named, e))?;
            Some(cycle.vertices().to_vec())
        }
    };
    let rendered = render_dot(&named, cycle.as_deref());
    std::fs::write(dot, rendered)
        .map_err(|e| fail(2, format!("cannot write {}: {e}", dot.display())))?;
    Ok(())
}

fn cmd_oracle(file: &PathBuf) -> Result<(), Failure> {
    let named = load(file)?;
    let b = budget()?;
    let cycles = apc::oracle::enumerate_alternating_cycles(named.inst.flatten(), &b)
        .map_err(|e| fail(2, e.to_string()))?;
    println!("alternating cycles: {}", cycles.len());
    let report =
        brute_vertex_pancyclic(named.inst.flatten(), &b).map_err(|e| fail(2, e.to_string()))?;
    for &(v, len) in &report.missing {
        println!("  missing: {} at length {len}", named.name(v));
    }
    if report.pancyclic {
        println!("vertex alternating-pancyclic: yes");
        Ok(())
    } else {
        println!("vertex alternating-pancyclic: no");
        Err(fail(1, format!("{} uncovered (vertex, length) cells", report.missing.len())))
    }
}

fn cmd_verify(instance: &PathBuf, certificate: &PathBuf) -> Result<(), Failure> {
    let named = load(instance)?;
    let text = std::fs::read_to_string(certificate)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", certificate.display())))?;
    let doc = parse_certificate(&text)
        .map_err(|e| fail(2, format!("{}: {e}", certificate.display())))?;
    match verify_certificate(&named, &doc) {
        Ok(n) => {
            println!("verified {n} entries");
            Ok(())
        }
        Err(e @ (DocError::Json(_) | DocError::UnknownName(_))) => Err(fail(2, e.to_string())),
        Err(e) => Err(fail(1, e.to_string())),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Check { file } => cmd_check(file),
        Cmd::Cycle { file, vertex, length } => cmd_cycle(file, vertex, *length),
        Cmd::Certify { file, oracle } => cmd_certify(file, *oracle),
        Cmd::Gen { sizes, seed, mode } => cmd_gen(sizes, *seed, *mode),
        Cmd::Export { file, dot, highlight } => cmd_export(file, dot, highlight.as_deref()),
        Cmd::Oracle { file } => cmd_oracle(file),
        Cmd::Verify { instance, certificate } => cmd_verify(instance, certificate),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
