use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use blockwitness::degree::degree;
use blockwitness::factored::{is_prime, ArithError};
use blockwitness::oracle::{check_conj_b, check_conj_c, cross_validate, GroupKind, OracleError};
use blockwitness::table::{audit, export_sn_table, parse_table_bytes, Conjecture, Verdict};
use blockwitness::{construct_witness, partitions_of, Partition, Witness, WitnessError};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

/// Character-degree witnesses and block checks for symmetric groups.
#[derive(Parser)]
#[command(name = "blockwitness", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct and verify a witness character for (n, p, q).
    Witness {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive cross-divisibility check.
    VerifyC {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "sn")]
        group: GroupKind,
    },
    /// Exhaustive comparison of the p'- and q'-parts of the principal blocks.
    VerifyB {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Run the witness construction over every prime pair for a range of n.
    Scan {
        #[arg(long, default_value_t = 9)]
        n_min: u64,
        #[arg(long, default_value_t = 28)]
        n_max: u64,
        #[arg(long)]
        cross_validate: bool,
    },
    /// Degrees of all characters of S_n, or of one.
    Degrees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        partition: Option<Partition>,
    },
    /// Audit a character-table summary file.
    CheckTable {
        file: PathBuf,
        #[arg(long)]
        conjecture: Conjecture,
    },
    /// Print the summary file for S_n.
    ExportTable {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
}

enum Failure {
    /// Condition failed, violation found, or the input was deferred.
    Negative,
    Usage(String),
    Internal(String),
}

type Outcome = Result<(), Failure>;

fn witness_error(e: WitnessError) -> Failure {
    match e {
        WitnessError::Params(p) => Failure::Usage(p.to_string()),
        e if e.is_deferral() => {
            println!("{e}");
            Failure::Negative
        }
        e => Failure::Internal(e.to_string()),
    }
}

fn oracle_error(e: OracleError) -> Failure {
    match e {
        OracleError::Params(p) => Failure::Usage(p.to_string()),
        OracleError::Arith(a) => Failure::Internal(a.to_string()),
    }
}

fn arith_error(e: ArithError) -> Failure {
    Failure::Internal(e.to_string())
}

fn first(set: &std::collections::BTreeSet<Partition>) -> String {
    set.iter()
        .next()
        .map_or("-".to_string(), Partition::to_string)
}

fn print_witness(w: &Witness, as_json: bool) {
    let case = w.case_id().label();
    let spec = w.candidate.spec.to_string();
    if as_json {
        let v = json!({
            "case": case,
            "partition": w.partition.to_string(),
            "host": w.host_prime(),
            "divisor": w.divisor_prime(),
            "degree": w.degree.to_decimal(),
            "factored": w.degree.to_factored_string(),
            "v_host": w.host_valuation,
            "v_divisor": w.divisor_valuation,
            "spec": spec,
        });
        println!("{v}");
    } else {
        println!(
            "case={case} partition={} host={} divisor={} degree={} factored={} v_host={} v_divisor={} spec={spec}",
            w.partition,
            w.host_prime(),
            w.divisor_prime(),
            w.degree,
            w.degree.to_factored_string(),
            w.host_valuation,
            w.divisor_valuation,
        );
    }
}

fn witness(n: u64, p: u64, q: u64, as_json: bool) -> Outcome {
    let w = construct_witness(n, p, q).map_err(witness_error)?;
    print_witness(&w, as_json);
    Ok(())
}

fn verify_c(n: u64, p: u64, q: u64, group: GroupKind) -> Outcome {
    let r = check_conj_c(n, p, q, group).map_err(oracle_error)?;
    println!(
        "verify-c group={group} n={n} p={p} q={q} condition={} witnesses_p={} witnesses_q={} example_p={} example_q={}",
        r.condition_holds,
        r.witnesses_p_block.len(),
        r.witnesses_q_block.len(),
        first(&r.witnesses_p_block),
        first(&r.witnesses_q_block),
    );
    if r.condition_holds {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn verify_b(n: u64, p: u64, q: u64) -> Outcome {
    let r = check_conj_b(n, p, q).map_err(oracle_error)?;
    let only_p: Vec<_> = r.set_b_p.difference(&r.set_b_q).collect();
    println!(
        "verify-b n={n} p={p} q={q} sets_equal={} size_p={} size_q={} violation={} example={}",
        r.sets_equal,
        r.set_b_p.len(),
        r.set_b_q.len(),
        r.set_violation(),
        only_p.first().map_or("-".to_string(), |l| l.to_string()),
    );
    if r.condition_holds {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn scan_cap() -> Result<Option<u64>, Failure> {
    match std::env::var("BLOCKWITNESS_SCAN_MAX") {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("BLOCKWITNESS_SCAN_MAX={s:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

struct ScanLine {
    text: String,
    internal: Option<String>,
    disagrees: bool,
}

fn scan_one(n: u64, p: u64, q: u64, with_oracle: bool) -> ScanLine {
    let (constructed, agree, oracle) = if with_oracle {
        match cross_validate(n, p, q) {
            Ok(cv) => {
                let agree = cv.oracle_agrees.map_or("-".to_string(), |a| a.to_string());
                (cv.constructor, agree, Some(cv.oracle_condition_holds))
            }
            Err(e) => {
                return ScanLine {
                    text: format!("result n={n} p={p} q={q} case=error agree=-"),
                    internal: Some(e.to_string()),
                    disagrees: false,
                }
            }
        }
    } else {
        (construct_witness(n, p, q), "-".to_string(), None)
    };
    let case = match &constructed {
        Ok(w) => w.case_id().label().to_string(),
        Err(WitnessError::SmallN { .. }) => "small-n".into(),
        Err(WitnessError::AbelianSylowDeferred { .. }) => "abelian-sylow".into(),
        Err(WitnessError::CaseTreeFalsified { .. }) => "falsified".into(),
        Err(WitnessError::GuardViolated { .. }) => "guard-violated".into(),
        Err(WitnessError::Params(_)) => "params".into(),
    };
    let mut text = format!("result n={n} p={p} q={q} case={case} agree={agree}");
    if let Some(holds) = oracle {
        let _ = write!(text, " oracle={holds}");
    }
    if let Ok(w) = &constructed {
        let _ = write!(text, " partition={}", w.partition);
    }
    ScanLine {
        disagrees: agree == "false" || oracle == Some(false),
        internal: constructed
            .err()
            .filter(WitnessError::is_internal)
            .map(|e| e.to_string()),
        text,
    }
}

fn scan(n_min: u64, n_max: u64, with_oracle: bool) -> Outcome {
    let n_max = match scan_cap()? {
        Some(cap) => n_max.min(cap),
        None => n_max,
    };
    let tuples: Vec<(u64, u64, u64)> = (n_min.max(2)..=n_max)
        .flat_map(|n| {
            let primes: Vec<u64> = (2..=n).filter(|&x| is_prime(x)).collect();
            let mut pairs = Vec::new();
            for (i, &p) in primes.iter().enumerate() {
                for &q in &primes[..i] {
                    pairs.push((n, p, q));
                }
            }
            pairs
        })
        .collect();
    let lines: Vec<ScanLine> = tuples
        .par_iter()
        .map(|&(n, p, q)| scan_one(n, p, q, with_oracle))
        .collect();
    let mut internal = Vec::new();
    let mut disagreements = 0;
    for line in &lines {
        println!("{}", line.text);
        if let Some(e) = &line.internal {
            internal.push(e.clone());
        }
        if line.disagrees {
            disagreements += 1;
        }
    }
    println!(
        "summary tuples={} internal={} disagreements={disagreements}",
        lines.len(),
        internal.len()
    );
    if !internal.is_empty() {
        return Err(Failure::Internal(internal.join("\n")));
    }
    if disagreements > 0 {
        return Err(Failure::Negative);
    }
    Ok(())
}

fn degrees(n: usize, partition: Option<Partition>) -> Outcome {
    let print = |lam: &Partition| -> Outcome {
        let d = degree(lam).map_err(arith_error)?;
        println!(
            "partition={lam} degree={d} factored={}",
            d.to_factored_string()
        );
        Ok(())
    };
    match partition {
        Some(lam) if lam.size() != n => Err(Failure::Usage(format!(
            "partition {lam} has size {}, not {n}",
            lam.size()
        ))),
        Some(lam) => print(&lam),
        None => partitions_of(n).try_for_each(|lam| print(&lam)),
    }
}

fn check_table(file: PathBuf, which: Conjecture) -> Outcome {
    let bytes = std::fs::read(&file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let summary = parse_table_bytes(&bytes)
        .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let findings = audit(&summary, which);
    for f in &findings {
        println!("{f}");
    }
    if findings.iter().any(|f| f.verdict == Verdict::Violation) {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn export_table(n: u64, primes: Vec<u64>) -> Outcome {
    let text = export_sn_table(n, &primes).map_err(|e| Failure::Usage(e.to_string()))?;
    print!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Witness { n, p, q, json } => witness(n, p, q, json),
        Command::VerifyC { n, p, q, group } => verify_c(n, p, q, group),
        Command::VerifyB { n, p, q } => verify_b(n, p, q),
        Command::Scan {
            n_min,
            n_max,
            cross_validate,
        } => scan(n_min, n_max, cross_validate),
        Command::Degrees { n, partition } => degrees(n, partition),
        Command::CheckTable { file, conjecture } => check_table(file, conjecture),
        Command::ExportTable { n, primes } => export_table(n, primes),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            eprintln!(
                "{}",
                rendered.lines().next().unwrap_or("error: bad arguments")
            );
            return ExitCode::from(2);
        }
    };
    let argv: Vec<String> = std::env::args().collect();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("bug: internal consistency failure");
            eprintln!("bug: argv={argv:?}");
            for line in msg.lines() {
                eprintln!("bug: {line}");
            }
            eprintln!("bug: please report this with the lines above");
            ExitCode::from(3)
        }
    }
}
