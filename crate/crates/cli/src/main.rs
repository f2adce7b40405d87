//! `braidlink`: link invariants of closed braids and the line-arrangement
//! braid construction.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on a
//! usage or input error.

mod verify;

use std::io::Read;
use std::process::ExitCode;

use braidlink::arrangement::{
    apply_smoothing, build_configuration, crossings_to_json, emit_projection_svg, paper_braids,
    project_crossings, swept_braid, swept_half_turn, PaperBraids, Projection, SmoothingChoice,
};
use braidlink::braid::BraidWord;
use braidlink::invariants::{full_report, seifert_matrix};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use verify::{run_checks, Fixtures};

/// Writes to standard output, ignoring errors such as a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

const VERIFY_SCHEMA: &str = "braidlink.verify/1";

#[derive(Parser)]
#[command(
    name = "braidlink",
    version,
    about = "Exact link invariants of closed braids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the closure of a braid word.
    Invariants {
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
        /// Also evaluate the Alexander polynomial at this integer.
        #[arg(long = "alexander-at", value_name = "T", allow_negative_numbers = true)]
        alexander_at: Vec<i64>,
        /// Include the Seifert matrix.
        #[arg(long)]
        matrices: bool,
        /// Braid text such as `B3 1 -2 1`, `@path` to read a file, or `-`
        /// for standard input.
        #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
        word: Vec<String>,
    },
    /// The embedded reference braids.
    Paper {
        #[command(subcommand)]
        command: PaperCommand,
    },
    /// Build the line arrangement and emit a braid, crossing list or drawing.
    Construct {
        #[arg(long, value_enum, default_value_t = ProjectionArg::Oxy)]
        projection: ProjectionArg,
        #[arg(long, value_enum, default_value_t = SmoothingArg::Paper)]
        smoothing: SmoothingArg,
        #[arg(long, value_enum, default_value_t = Emit::Braid)]
        emit: Emit,
        /// Emit only the half-turn word.
        #[arg(long)]
        half: bool,
    },
}

#[derive(Subcommand)]
enum PaperCommand {
    /// Recompute the reference values and print a pass/fail table.
    Verify {
        #[arg(long)]
        json: bool,
        /// Report the invariants of a variant instead of checking values.
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        /// Replace the embedded beta (braid text, `@path` or `-`).
        #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
        beta: Option<String>,
        /// Replace the embedded beta' (braid text, `@path` or `-`).
        #[arg(long = "beta-prime", value_name = "WORD", allow_hyphen_values = true)]
        beta_prime: Option<String>,
    },
    /// Print the embedded braid words.
    Braids {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    /// The crossing at q0 made positive.
    PositiveQ0,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProjectionArg {
    Oxy,
    Oxz,
}

#[derive(Clone, Copy, ValueEnum)]
enum SmoothingArg {
    Paper,
    AllPositive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Braid,
    Crossings,
    Svg,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn read_word(arg: &str) -> Result<BraidWord, Failure> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        buf
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?
    } else {
        arg.to_string()
    };
    BraidWord::parse(&text).map_err(|e| usage(format!("invalid braid: {e}")))
}

fn big_json(value: &num_bigint::BigInt) -> Value {
    value
        .to_i64()
        .map_or_else(|| Value::from(value.to_string()), Value::from)
}

fn print_json(value: &Value) {
    outln!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON values serialise")
    );
}

fn cmd_invariants(
    json: bool,
    points: &[i64],
    matrices: bool,
    word: &[String],
) -> Result<(), Failure> {
    let w = if word.len() == 1 {
        read_word(&word[0])?
    } else {
        read_word(&word.join(" "))?
    };
    let report = full_report(&w, points).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    let seifert = matrices.then(|| seifert_matrix(&w));
    if json {
        let mut value = report.to_json();
        if let Some(data) = &seifert {
            let rows: Vec<Vec<Value>> = data
                .matrix
                .to_rows()
                .iter()
                .map(|row| row.iter().map(big_json).collect())
                .collect();
            value["seifert_matrix"] = json!(rows);
        }
        print_json(&value);
    } else {
        out!("{report}");
        if let Some(data) = &seifert {
            outln!("seifert matrix:");
            for line in data.matrix.to_string().lines() {
                outln!("  {line}");
            }
        }
    }
    Ok(())
}

fn cmd_verify(
    json: bool,
    variant: Option<Variant>,
    beta: Option<&str>,
    beta_prime: Option<&str>,
) -> Result<(), Failure> {
    let embedded = paper_braids();
    if let Some(Variant::PositiveQ0) = variant {
        return report_variant(json, &embedded);
    }
    let fixtures = Fixtures {
        beta: beta.map(read_word).transpose()?.unwrap_or(embedded.beta),
        beta_prime: beta_prime
            .map(read_word)
            .transpose()?
            .unwrap_or(embedded.beta_prime),
    };
    let checks = run_checks(&fixtures);
    let passed = checks.iter().all(|c| c.passed);
    if json {
        print_json(&json!({
            "schema": VERIFY_SCHEMA,
            "passed": passed,
            "checks": checks,
        }));
    } else {
        for c in &checks {
            outln!(
                "{}  {}  {}  ({})",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.detail
            );
        }
    }
    if passed {
        Ok(())
    } else {
        let failing: Vec<String> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{} ({})", c.id, c.name))
            .collect();
        Err(Failure {
            code: 1,
            message: format!("failed: {}", failing.join(", ")),
        })
    }
}

fn report_variant(json: bool, embedded: &PaperBraids) -> Result<(), Failure> {
    let swept = swept_braid(&SmoothingChoice::all_positive()).map_err(|e| usage(e.to_string()))?;
    let entries = [
        ("beta", &embedded.beta_positive_variant),
        ("beta'", &embedded.beta_prime_positive_variant),
        ("swept", &swept),
    ];
    let mut reports = Vec::new();
    for (name, w) in entries {
        let report = full_report(w, &[]).map_err(|e| Failure {
            code: 1,
            message: e.to_string(),
        })?;
        reports.push((name, w, report));
    }
    if json {
        let list: Vec<Value> = reports
            .iter()
            .map(|(name, w, r)| json!({"name": name, "word": w.to_string(), "report": r.to_json()}))
            .collect();
        print_json(&json!({"schema": VERIFY_SCHEMA, "variant": "positive-q0", "braids": list}));
    } else {
        for (name, w, r) in &reports {
            outln!("{name}: {w}");
            for line in r.to_string().lines() {
                outln!("  {line}");
            }
        }
    }
    Ok(())
}

fn cmd_braids(json: bool) {
    let b = paper_braids();
    let entries = [
        ("beta", &b.beta),
        ("beta'", &b.beta_prime),
        ("beta positive variant", &b.beta_positive_variant),
        ("beta' positive variant", &b.beta_prime_positive_variant),
    ];
    if json {
        let map: serde_json::Map<String, Value> = entries
            .iter()
            .map(|(name, w)| (name.to_string(), Value::from(w.to_string())))
            .collect();
        print_json(&Value::Object(map));
    } else {
        for (name, w) in entries {
            outln!("{name}: {w}");
        }
    }
}

fn cmd_construct(
    projection: ProjectionArg,
    smoothing: SmoothingArg,
    emit: Emit,
    half: bool,
) -> Result<(), Failure> {
    let projection = match projection {
        ProjectionArg::Oxy => Projection::Oxy,
        ProjectionArg::Oxz => Projection::Oxz,
    };
    let choice = match smoothing {
        SmoothingArg::Paper => SmoothingChoice::reference(),
        SmoothingArg::AllPositive => SmoothingChoice::all_positive(),
    };
    let lines = build_configuration();
    match emit {
        Emit::Braid => {
            if projection != Projection::Oxy {
                return Err(usage("a braid is swept from the oxy projection only"));
            }
            let w = if half {
                swept_half_turn(&choice)
            } else {
                swept_braid(&choice)
            }
            .map_err(|e| usage(e.to_string()))?;
            outln!("{w}");
        }
        Emit::Crossings => {
            let events = project_crossings(&lines, projection)
                .and_then(|e| apply_smoothing(&e, &choice))
                .map_err(|e| usage(e.to_string()))?;
            print_json(&crossings_to_json(projection, &events));
        }
        Emit::Svg => {
            let svg = emit_projection_svg(&lines, projection, &choice)
                .map_err(|e| usage(e.to_string()))?;
            out!("{svg}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariants {
            json,
            alexander_at,
            matrices,
            word,
        } => cmd_invariants(*json, alexander_at, *matrices, word),
        Command::Paper { command } => match command {
            PaperCommand::Verify {
                json,
                variant,
                beta,
                beta_prime,
            } => cmd_verify(*json, *variant, beta.as_deref(), beta_prime.as_deref()),
            PaperCommand::Braids { json } => {
                cmd_braids(*json);
                Ok(())
            }
        },
        Command::Construct {
            projection,
            smoothing,
            emit,
            half,
        } => cmd_construct(*projection, *smoothing, *emit, *half),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("braidlink: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
