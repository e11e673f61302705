//! Command-line surface. Subcommand results land on stdout in the text
//! format (or as bare counts); diagnostics go to stderr, outcomes to the
//! exit code.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclepack::{
    admissible_system_order, build, count_inside, decide_a2p, enumerate_inside, leave_spec, parse,
    serialize, verify_certificate, verify_packing, A2PCertificate, A2pOutcome, Budget, CertMode,
    OctCycle, Packing, Variant, CYCLE_LEN,
};

#[derive(Parser)]
#[command(
    name = "cyclepack",
    version,
    about = "Maximum 8-cycle packings of complete graphs, with inside-cycle certificates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a maximum packing of order N and print or save it
    Construct {
        #[arg(short = 'n', long = "order", value_name = "N")]
        n: usize,
        /// Build a packing with no leave-preserving inside selection
        #[arg(long)]
        not_a2p: bool,
        /// Omit the inside selection from the output
        #[arg(long)]
        no_cert: bool,
        /// Write to a file instead of stdout
        #[arg(short = 'o', long = "output", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check a packing file; exit 0 iff every clause passes
    Verify {
        file: PathBuf,
        /// Also match the leave against the tabulated isomorphism type
        #[arg(long)]
        strict_leave: bool,
    },
    /// Decide whether a packing admits an inside selection
    A2p {
        file: PathBuf,
        /// strict pins the leave; relaxed lets it move
        #[arg(long, value_enum, default_value_t = ModeArg::Relaxed)]
        mode: ModeArg,
        #[arg(long, value_name = "K")]
        budget_nodes: Option<u64>,
        #[arg(long, value_name = "S")]
        budget_secs: Option<u64>,
    },
    /// List or count the inside cycles of one 8-cycle
    Inside {
        /// The cycle, as eight space-separated labels
        #[arg(long, value_name = "\"a b c d e f g h\"")]
        cycle: String,
        /// Print how many there are instead of listing them
        #[arg(long)]
        count: bool,
    },
    /// Print the minimum-leave shape for order N
    Spectrum {
        #[arg(short = 'n', long = "order", value_name = "N")]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum ModeArg {
    Strict,
    Relaxed,
}

impl From<ModeArg> for CertMode {
    fn from(m: ModeArg) -> CertMode {
        match m {
            ModeArg::Strict => CertMode::Strict,
            ModeArg::Relaxed => CertMode::Relaxed,
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Construct {
            n,
            not_a2p,
            no_cert,
            output,
        } => construct(n, not_a2p, no_cert, output),
        Cmd::Verify { file, strict_leave } => verify(&file, strict_leave),
        Cmd::A2p {
            file,
            mode,
            budget_nodes,
            budget_secs,
        } => a2p(&file, mode.into(), budget_nodes, budget_secs),
        Cmd::Inside { cycle, count } => inside(&cycle, count),
        Cmd::Spectrum { n } => spectrum(n),
    }
}

fn construct(n: usize, not_a2p: bool, no_cert: bool, output: Option<PathBuf>) -> ExitCode {
    let variant = if not_a2p { Variant::NotA2p } else { Variant::A2p };
    let built = match build(n, variant) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(w) = &built.witness {
        let at: Vec<String> = w.support().iter().map(ToString::to_string).collect();
        eprintln!(
            "no leave-preserving selection: contains {} at vertices {}",
            w.key,
            at.join(" ")
        );
    }
    let cert = if no_cert {
        None
    } else {
        built.certificate.as_ref()
    };
    let text = serialize(&built.packing, cert);
    match output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn read_packing(file: &PathBuf) -> Result<(Packing, Option<A2PCertificate>), String> {
    let text =
        fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    parse(&text).map_err(|e| e.to_string())
}

fn verify(file: &PathBuf, strict_leave: bool) -> ExitCode {
    let (p, cert) = match read_packing(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = verify_packing(&p, strict_leave);
    eprint!("{report}");
    let mut ok = report.pass();
    if let Some(cert) = cert {
        let report = verify_certificate(&p, &cert);
        eprint!("{report}");
        ok &= report.pass();
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn a2p(
    file: &PathBuf,
    mode: CertMode,
    budget_nodes: Option<u64>,
    budget_secs: Option<u64>,
) -> ExitCode {
    let (p, _) = match read_packing(file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let mut budget = Budget::default();
    if let Some(k) = budget_nodes {
        budget.max_nodes = k;
    }
    if let Some(s) = budget_secs {
        budget.max_millis = s.saturating_mul(1000);
    }
    match decide_a2p(&p, mode, budget) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Ok(A2pOutcome::Sat(cert, stats)) => {
            let mut out = String::new();
            for c in &cert.insides {
                out.push_str("inside");
                for v in c.vertices() {
                    let _ = write!(out, " {v}");
                }
                out.push('\n');
            }
            let _ = writeln!(out, "mode {}", cert.mode.name());
            print!("{out}");
            eprintln!(
                "sat ({} mode) after {} nodes, {} ms",
                cert.mode.name(),
                stats.nodes,
                stats.millis
            );
            ExitCode::SUCCESS
        }
        Ok(A2pOutcome::Unsat(stats)) => {
            eprintln!(
                "unsat: exhausted after {} nodes, {} ms",
                stats.nodes, stats.millis
            );
            ExitCode::from(1)
        }
        Ok(A2pOutcome::Timeout(stats)) => {
            eprintln!(
                "timeout after {} nodes, {} ms",
                stats.nodes, stats.millis
            );
            ExitCode::from(2)
        }
    }
}

fn inside(cycle: &str, count: bool) -> ExitCode {
    let labels: Result<Vec<usize>, _> = cycle.split_whitespace().map(str::parse).collect();
    let cycle = labels
        .map_err(|e| format!("bad label: {e}"))
        .and_then(|ls| {
            if ls.len() == CYCLE_LEN {
                let mut raw = [0; CYCLE_LEN];
                raw.copy_from_slice(&ls);
                OctCycle::new(raw).map_err(|e| e.to_string())
            } else {
                Err(format!("expected {CYCLE_LEN} labels, got {}", ls.len()))
            }
        });
    let cycle = match cycle {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if count {
        println!("{}", count_inside(&cycle));
    } else {
        let mut out = String::new();
        for m in &enumerate_inside(&cycle).members {
            let line: Vec<String> = m.vertices().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        print!("{out}");
    }
    ExitCode::SUCCESS
}

fn spectrum(n: usize) -> ExitCode {
    match leave_spec(n) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(spec) => {
            println!("order {n}");
            println!("leave-size {}", spec.edge_count());
            println!("leave-type {}", spec.kind.name());
            println!(
                "system {}",
                if admissible_system_order(n) {
                    "yes"
                } else {
                    "no"
                }
            );
            ExitCode::SUCCESS
        }
    }
}
