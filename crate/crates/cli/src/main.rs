//! `qsquares` — construct the q-analogue polynomials `C_n(q)` / `Γ_n(q)`,
//! verify their coefficient identities over ranges, and emit related
//! integer sequences and primitive Pythagorean triples.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod render;

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qsquares::{
    build_c, build_gamma, divisor_count_mod, generate_primitive_triples, r2_bruteforce,
    verify_range, CenteredPolynomial, CheckName,
};

/// Ranges past this make the brute-force r2 oracle the dominant cost.
const LARGE_N_WARNING_THRESHOLD: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "qsquares",
    version,
    about = "q-analogue polynomials of the sum-of-two-squares count: construction, identity verification, sequences, triples"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print C_n(q) or Gamma_n(q)
    Poly {
        /// Polynomial family
        #[arg(value_enum)]
        kind: KindArg,
        /// Center exponent n; the polynomial has degree 2n
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Run identity checks for every n in a range
    Verify {
        /// Inclusive range of n, written LO..HI
        #[arg(long, value_parser = parse_range)]
        range: NRange,
        /// Comma-separated checks to run (default: all of lemma1, lemma2,
        /// prop1_pos, prop1_neg, qanalogue, theorem1, structural)
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Option<Vec<CheckName>>,
        /// Worker threads (default: available parallelism)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Emit one statistic value per n over a range
    Sequence {
        /// Which statistic to emit
        #[arg(value_enum)]
        stat: Stat,
        /// Inclusive range of n, written LO..HI
        #[arg(long, value_parser = parse_range)]
        range: NRange,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// List primitive Pythagorean triples with hypotenuse at most a bound
    Triples {
        /// Largest hypotenuse to include
        #[arg(long)]
        z_limit: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    C,
    Gamma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Plain text for reading
    Human,
    /// Comma-separated with a header row
    Csv,
    /// One JSON object per line, each carrying "v":1
    Jsonlines,
    /// OEIS b-file lines "n value" (sequences only)
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    /// r2(n): integer pairs (x, y) with x^2 + y^2 = n
    R2,
    /// Divisors of n congruent to 1 mod 4
    D14,
    /// Divisors of n congruent to 3 mod 4
    D34,
    /// Sum of the positive coefficients of Gamma_n
    Possum,
    /// Sum of the negative coefficients of Gamma_n
    Negsum,
    /// 1 if every coefficient of Gamma_n is nonnegative, else 0
    Nonneg,
}

impl Stat {
    fn as_str(self) -> &'static str {
        match self {
            Stat::R2 => "r2",
            Stat::D14 => "d14",
            Stat::D34 => "d34",
            Stat::Possum => "possum",
            Stat::Negsum => "negsum",
            Stat::Nonneg => "nonneg",
        }
    }

    fn value(self, n: u64) -> i64 {
        match self {
            Stat::R2 => r2_bruteforce(n) as i64,
            Stat::D14 => divisor_count_mod(n, 1, 4) as i64,
            Stat::D34 => divisor_count_mod(n, 3, 4) as i64,
            Stat::Possum => build_gamma(n).expect("n >= 1").positive_sum() as i64,
            Stat::Negsum => build_gamma(n).expect("n >= 1").negative_sum(),
            Stat::Nonneg => build_gamma(n).expect("n >= 1").is_nonnegative() as i64,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct NRange {
    lo: u64,
    hi: u64,
}

fn parse_range(s: &str) -> Result<NRange, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
    let lo = lo.parse().map_err(|_| format!("invalid lower bound `{lo}`"))?;
    let hi = hi.parse().map_err(|_| format!("invalid upper bound `{hi}`"))?;
    Ok(NRange { lo, hi })
}

fn parse_check(s: &str) -> Result<CheckName, qsquares::Error> {
    s.parse()
}

fn warn_if_large(hi: u64) {
    if hi > LARGE_N_WARNING_THRESHOLD {
        eprintln!(
            "warning: n beyond {LARGE_N_WARNING_THRESHOLD} makes the brute-force r2 oracle \
             the bottleneck; expect long runtimes"
        );
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match command {
        Command::Poly { kind, n, format } => {
            let poly = build_poly(kind, n)?;
            warn_if_large(n);
            match format {
                Format::Human => render::poly_human(&mut out, &poly),
                Format::Csv => render::poly_csv(&mut out, &poly),
                Format::Jsonlines => render::poly_jsonlines(&mut out, &poly),
                Format::Bfile => return Err(bfile_misuse()),
            }
            .map_err(io_failure)?;
            0
        }
        Command::Verify { range, checks, jobs, format } => {
            let selected = checks.unwrap_or_else(|| CheckName::ALL.to_vec());
            let jobs = jobs.unwrap_or_else(default_jobs);
            if jobs == 0 {
                return Err("--jobs must be at least 1".into());
            }
            if format == Format::Bfile {
                return Err(bfile_misuse());
            }
            warn_if_large(range.hi);
            let (reports, summary) = verify_range(range.lo, range.hi, &selected, jobs)
                .map_err(|e| e.to_string())?;
            match format {
                Format::Human => render::verify_human(&mut out, &reports, &summary),
                Format::Csv => render::verify_csv(&mut out, &reports),
                Format::Jsonlines => render::verify_jsonlines(&mut out, &reports, &summary),
                Format::Bfile => unreachable!(),
            }
            .map_err(io_failure)?;
            render::failures_to_stderr(&reports);
            if format == Format::Csv {
                eprintln!("{}", render::summary_line(&summary));
            }
            verify_exit_code(&summary)
        }
        Command::Sequence { stat, range, format } => {
            if range.lo == 0 || range.lo > range.hi {
                return Err(format!(
                    "invalid range {}..{}: need 1 <= lo <= hi",
                    range.lo, range.hi
                ));
            }
            warn_if_large(range.hi);
            let values = (range.lo..=range.hi).map(|n| (n, stat.value(n)));
            match format {
                Format::Human => render::sequence_human(&mut out, values),
                Format::Csv => render::sequence_csv(&mut out, values),
                Format::Jsonlines => render::sequence_jsonlines(&mut out, stat.as_str(), values),
                Format::Bfile => render::sequence_bfile(&mut out, values),
            }
            .map_err(io_failure)?;
            0
        }
        Command::Triples { z_limit, format } => {
            let triples = generate_primitive_triples(z_limit);
            match format {
                Format::Human => render::triples_human(&mut out, &triples),
                Format::Csv => render::triples_csv(&mut out, &triples),
                Format::Jsonlines => render::triples_jsonlines(&mut out, &triples),
                Format::Bfile => return Err(bfile_misuse()),
            }
            .map_err(io_failure)?;
            0
        }
    };
    out.flush().map_err(io_failure)?;
    Ok(code)
}

fn build_poly(kind: KindArg, n: u64) -> Result<CenteredPolynomial, String> {
    let built = match kind {
        KindArg::C => build_c(n),
        KindArg::Gamma => build_gamma(n),
    };
    built.map_err(|_| "n must be at least 1".to_string())
}

fn verify_exit_code(summary: &qsquares::VerificationSummary) -> u8 {
    if summary.all_passed() {
        0
    } else {
        1
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

fn bfile_misuse() -> String {
    "bfile format applies only to scalar-per-n sequences (use the sequence subcommand)".into()
}

fn io_failure(e: std::io::Error) -> String {
    format!("failed to write output: {e}")
}
