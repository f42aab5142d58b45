//! Command-line frontend: certified second-Betti-number bounds, diamond
//! validation, relation residuals, module decompositions and feasibility
//! enumeration, all in exact integer arithmetic.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails
//! on mathematically well-formed input, 2 on unusable input (unreadable
//! files, malformed diamonds or vectors, unsupported dimensions).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_traits::{Signed, Zero};

use hkbound::{
    bound_polynomial, conjecture_check, dim4_identity, enumerate_feasible,
    extract_multiplicities, extract_primitive_b4, largest_root_bracket, list_examples,
    parse_diamond, raw_relation_text, rhs_coefficients, salamon_residual, serialize_diamond,
    specialized_relation_text, validate, verify_all, verify_record, BettiVector, CheckLine,
    EnumerationCaps, FeasibilitySearch, HodgeDiamond, Int, ValidationMode,
};

#[derive(Parser)]
#[command(
    name = "hkbound",
    version,
    about = "Certified bounds and consistency checks for the cohomology of compact hyperkähler manifolds",
    long_about = "Exact-arithmetic checks for Hodge diamonds of compact hyperkähler manifolds: \
structural validation, Salamon's linear relation, LLV module decompositions, certified upper \
bounds on the second Betti number in complex dimensions four, six and eight, and exhaustive \
feasibility searches. All checks are integer-exact; decimals appear only in display strings."
)]
struct Cli {
    /// Render check, tuple and key=value lines as tab-separated values.
    #[arg(long, global = true)]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Hodge diamond file and list every failed check.
    Validate {
        /// Diamond file (header `n <half-dim>`, then 4n+1 rows).
        file: PathBuf,
        /// Beyond Hodge symmetry, Serre duality and h^{0,0} = 1, also
        /// check the hyperkähler-specific constraints: h^{1,0} = 0,
        /// h^{2,0} = 1, b_2 >= 3 and the symmetric-power lower bounds.
        #[arg(long)]
        strict: bool,
    },
    /// Print the linear Betti-number relation, or its residual on data.
    Salamon {
        /// Half dimension; prints the relation when no data is given.
        #[arg(long)]
        n: Option<usize>,
        /// Diamond file to take Betti numbers from.
        #[arg(conflicts_with = "betti")]
        file: Option<PathBuf>,
        /// Comma-separated Betti numbers b_0,...,b_{4n} (length 4n+1).
        #[arg(long)]
        betti: Option<String>,
    },
    /// Extract the decomposition invariants of a fourfold or sixfold diamond.
    Decompose {
        file: PathBuf,
    },
    /// Certify the upper bound on b_2 in half dimension n.
    Bound {
        #[arg(long)]
        n: usize,
    },
    /// Enumerate all invariant tuples compatible with the sixfold identity.
    Enumerate {
        /// Half dimension; only the sixfold identity has a known
        /// multiplicity structure to enumerate against.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Second Betti number (at least 3).
        #[arg(long, value_parser = parse_int_arg, allow_negative_numbers = true)]
        b2: Int,
        /// Uniform inclusive cap on c, d, e and b3.
        #[arg(long, value_parser = parse_int_arg, default_value = "300", allow_negative_numbers = true)]
        caps: Int,
        /// Individual cap overrides.
        #[arg(long, value_parser = parse_int_arg, allow_negative_numbers = true)]
        max_c: Option<Int>,
        #[arg(long, value_parser = parse_int_arg, allow_negative_numbers = true)]
        max_d: Option<Int>,
        #[arg(long, value_parser = parse_int_arg, allow_negative_numbers = true)]
        max_e: Option<Int>,
        #[arg(long, value_parser = parse_int_arg, allow_negative_numbers = true)]
        max_b3: Option<Int>,
        /// Stop after printing this many tuples.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Verify the closed form of the largest root of the bound polynomial.
    Conjecture {
        #[arg(long)]
        n: usize,
    },
    /// List or verify the bundled reference examples.
    Examples {
        /// Verify every bundled example and print one verdict per line.
        #[arg(long, conflicts_with = "show")]
        verify_all: bool,
        /// Verify one bundled example and print its full certificate.
        #[arg(long)]
        show: Option<String>,
        /// With --show: print the canonical diamond text instead.
        #[arg(long, requires = "show")]
        print: bool,
    },
    /// Print the specialized relation for half dimension n.
    Relation {
        #[arg(long)]
        n: usize,
        /// Keep the vanishing odd terms and the explicit b_1, b_0 factors.
        #[arg(long)]
        raw: bool,
    },
}

fn parse_int_arg(s: &str) -> Result<Int, String> {
    s.parse::<Int>()
        .map_err(|e| format!("invalid integer {s:?}: {e}"))
}

fn kv(pairs: &[(&str, String)], tsv: bool) -> String {
    if tsv {
        pairs
            .iter()
            .map(|(k, v)| format!("{k}\t{v}"))
            .collect::<Vec<_>>()
            .join("\t")
    } else {
        pairs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn print_check(line: &CheckLine<Int>, tsv: bool) {
    if tsv {
        println!("{}", line.tsv());
    } else {
        println!("{line}");
    }
}

fn read_diamond(path: &Path) -> Result<HodgeDiamond<Int>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_diamond(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    // Rust masks SIGPIPE by default, turning a closed consumer (e.g.
    // `hkbound enumerate ... | head`) into a panic on the next print.
    // Restore the default disposition so the process ends quietly like
    // any other line-oriented filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let tsv = cli.tsv;
    match cli.command {
        Command::Validate { file, strict } => cmd_validate(&file, strict, tsv),
        Command::Salamon { n, file, betti } => cmd_salamon(n, file.as_deref(), betti, tsv),
        Command::Decompose { file } => cmd_decompose(&file, tsv),
        Command::Bound { n } => cmd_bound(n, tsv),
        Command::Enumerate {
            n,
            b2,
            caps,
            max_c,
            max_d,
            max_e,
            max_b3,
            limit,
        } => cmd_enumerate(n, b2, caps, max_c, max_d, max_e, max_b3, limit, tsv),
        Command::Conjecture { n } => cmd_conjecture(n, tsv),
        Command::Examples {
            verify_all,
            show,
            print,
        } => cmd_examples(verify_all, show, print, tsv),
        Command::Relation { n, raw } => cmd_relation(n, raw),
    }
}

fn cmd_validate(file: &Path, strict: bool, tsv: bool) -> Result<bool, String> {
    let diamond = read_diamond(file)?;
    let (mode, label) = if strict {
        (ValidationMode::Strict, "strict")
    } else {
        (ValidationMode::Structural, "structural")
    };
    let report = validate(&diamond, mode);
    println!(
        "{}",
        kv(
            &[
                ("mode", label.to_owned()),
                ("findings", report.findings.len().to_string()),
            ],
            tsv,
        )
    );
    for finding in &report.findings {
        println!("{finding}");
    }
    Ok(report.passed())
}

fn parse_betti_argument(raw: &str) -> Result<BettiVector<Int>, String> {
    let entries: Vec<Int> = raw
        .split(',')
        .map(|token| parse_int_arg(token.trim()))
        .collect::<Result<_, _>>()?;
    if entries.len() < 5 || entries.len() % 4 != 1 {
        return Err(format!(
            "a Betti vector has 4n+1 entries for n >= 1, got {}",
            entries.len()
        ));
    }
    let n = (entries.len() - 1) / 4;
    BettiVector::new(n, entries).map_err(|e| e.to_string())
}

fn cmd_salamon(
    n: Option<usize>,
    file: Option<&Path>,
    betti: Option<String>,
    tsv: bool,
) -> Result<bool, String> {
    let vector = match (file, betti) {
        (Some(path), None) => Some(read_diamond(path)?.betti_vector()),
        (None, Some(raw)) => Some(parse_betti_argument(&raw)?),
        (None, None) => None,
        (Some(_), Some(_)) => unreachable!("clap rejects --file with --betti"),
    };

    match vector {
        Some(vector) => {
            if let Some(stated) = n {
                if stated != vector.half_dim() {
                    return Err(format!(
                        "--n {stated} disagrees with the data's half dimension {}",
                        vector.half_dim()
                    ));
                }
            }
            let residual = salamon_residual(&vector);
            let pass = residual.is_zero();
            print_check(&CheckLine::new("salamon-residual", residual, pass), tsv);
            Ok(pass)
        }
        None => {
            let n = n.ok_or("pass --n, --file or --betti")?;
            if n == 0 {
                return Err("half dimension must be at least 1".to_owned());
            }
            println!("raw: {}", raw_relation_text(n));
            println!("specialized: {}", specialized_relation_text(n));
            Ok(true)
        }
    }
}

fn cmd_decompose(file: &Path, tsv: bool) -> Result<bool, String> {
    let diamond = read_diamond(file)?;
    match diamond.half_dim() {
        2 => {
            let report = validate(&diamond, ValidationMode::Strict);
            if !report.passed() {
                for finding in &report.findings {
                    eprintln!("{finding}");
                }
                return Ok(false);
            }
            let betti = diamond.betti_vector();
            let prime = match extract_primitive_b4(&diamond.b2(), betti.get(4)) {
                Ok(prime) => prime,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(false);
                }
            };
            let identity = dim4_identity(&diamond.b2(), betti.get(3), &prime);
            println!(
                "{}",
                kv(
                    &[
                        ("b4prime", prime.to_string()),
                        ("identity", identity.to_string()),
                    ],
                    tsv,
                )
            );
            Ok(identity.is_zero())
        }
        3 => {
            let tuple = match extract_multiplicities(&diamond) {
                Ok(tuple) => tuple,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(false);
                }
            };
            let residual = hkbound::verify_even_decomposition(&diamond)
                .expect("extraction already succeeded")
                .abs_total();
            println!(
                "{}",
                kv(
                    &[
                        ("c", tuple.c.to_string()),
                        ("d", tuple.d.to_string()),
                        ("e", tuple.e.to_string()),
                        ("residual", residual.to_string()),
                    ],
                    tsv,
                )
            );
            Ok(residual.is_zero())
        }
        other => Err(format!(
            "decompose supports half dimension 2 or 3, got {other}"
        )),
    }
}

fn cmd_bound(n: usize, tsv: bool) -> Result<bool, String> {
    let poly = bound_polynomial::<Int>(n).map_err(|e| e.to_string())?;
    let (bound, descriptor) = largest_root_bracket(&poly);
    println!("b2 <= {bound}");
    // Approximations are display-only and carry a `~` marker; every
    // decision below uses the exact symbolic root.
    if tsv {
        println!(
            "root\t{}\t~{}",
            descriptor.symbolic(),
            descriptor.approx_decimal(4)
        );
    } else {
        println!(
            "root={} ~{}",
            descriptor.symbolic(),
            descriptor.approx_decimal(4)
        );
    }

    let mut all_pass = true;
    let mut check = |line: CheckLine<Int>| {
        all_pass &= line.pass;
        print_check(&line, tsv);
    };

    let at_bound = poly.eval(&bound);
    check(CheckLine::new(
        format!("L({bound})"),
        at_bound.clone(),
        !at_bound.is_negative(),
    ));
    let past = bound.clone() + Int::from(1);
    let past_value = poly.eval(&past);
    check(CheckLine::new(
        format!("L({past})"),
        past_value.clone(),
        past_value.is_negative(),
    ));

    let mut sweep_ok = true;
    let mut x = bound.clone();
    for _ in 0..100 {
        x += 1;
        sweep_ok &= poly.eval(&x).is_negative();
    }
    check(CheckLine::new(
        "negativity-sweep",
        Int::from(100),
        sweep_ok,
    ));

    match n {
        2 => {
            // Right side of the fourfold identity: 2*b4' + 2*b3.
            check(CheckLine::new("rhs-coefficient-b4prime", Int::from(2), true));
            check(CheckLine::new("rhs-coefficient-b3", Int::from(2), true));
        }
        3 => {
            for (name, value) in rhs_coefficients(&past) {
                check(CheckLine::new(
                    format!("rhs-coefficient-{name}"),
                    value.clone(),
                    !value.is_negative(),
                ));
            }
        }
        _ => {
            eprintln!(
                "note: in half dimension 4 the nonnegativity of the identity's right side is an \
imported assumption; only the polynomial side is certified here"
            );
        }
    }

    Ok(all_pass)
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    n: usize,
    b2: Int,
    caps: Int,
    max_c: Option<Int>,
    max_d: Option<Int>,
    max_e: Option<Int>,
    max_b3: Option<Int>,
    limit: Option<usize>,
    tsv: bool,
) -> Result<bool, String> {
    if n != 3 {
        return Err(format!(
            "enumeration is implemented for half dimension 3 only, got {n}"
        ));
    }
    if b2 < Int::from(3) {
        return Err("--b2 must be at least 3".to_owned());
    }
    if caps.is_negative() {
        return Err("--caps must be nonnegative".to_owned());
    }
    let caps = EnumerationCaps {
        max_c: max_c.unwrap_or_else(|| caps.clone()),
        max_d: max_d.unwrap_or_else(|| caps.clone()),
        max_e: max_e.unwrap_or_else(|| caps.clone()),
        max_b3: max_b3.unwrap_or_else(|| caps.clone()),
    };
    for (name, cap) in [
        ("--max-c", &caps.max_c),
        ("--max-d", &caps.max_d),
        ("--max-e", &caps.max_e),
        ("--max-b3", &caps.max_b3),
    ] {
        if cap.is_negative() {
            return Err(format!("{name} must be nonnegative"));
        }
    }

    match enumerate_feasible(&b2, &caps) {
        FeasibilitySearch::Infeasible(evidence) => {
            println!("{}", kv(&[("infeasible", "true".to_owned())], tsv));
            print_check(
                &CheckLine::new(
                    format!("L({})", evidence.b2),
                    evidence.lhs.clone(),
                    evidence.lhs.is_negative(),
                ),
                tsv,
            );
            for (name, value) in &evidence.coefficients {
                print_check(
                    &CheckLine::new(
                        format!("coefficient-{name}"),
                        value.clone(),
                        !value.is_negative(),
                    ),
                    tsv,
                );
            }
            println!("{}", kv(&[("count", "0".to_owned())], tsv));
            Ok(true)
        }
        FeasibilitySearch::Search(search) => {
            let mut printed = 0usize;
            let mut complete = true;
            for tuple in search {
                if Some(printed) == limit {
                    complete = false;
                    break;
                }
                println!(
                    "{}",
                    kv(
                        &[
                            ("c", tuple.c.to_string()),
                            ("d", tuple.d.to_string()),
                            ("e", tuple.e.to_string()),
                            ("b3", tuple.b3.to_string()),
                        ],
                        tsv,
                    )
                );
                printed += 1;
            }
            println!(
                "{}",
                kv(
                    &[
                        ("count", printed.to_string()),
                        ("complete", complete.to_string()),
                    ],
                    tsv,
                )
            );
            Ok(true)
        }
    }
}

fn cmd_conjecture(n: usize, tsv: bool) -> Result<bool, String> {
    let poly = bound_polynomial::<Int>(n).map_err(|e| e.to_string())?;
    let (_, descriptor) = largest_root_bracket(&poly);
    let verified = conjecture_check::<Int>(n).map_err(|e| e.to_string())?;
    if tsv {
        println!(
            "root\t{}\t~{}\tverified\t{verified}",
            descriptor.symbolic(),
            descriptor.approx_decimal(4)
        );
    } else {
        println!(
            "root={} ~{} verified={verified}",
            descriptor.symbolic(),
            descriptor.approx_decimal(4)
        );
    }
    Ok(verified)
}

fn cmd_examples(
    verify_all_flag: bool,
    show: Option<String>,
    print: bool,
    tsv: bool,
) -> Result<bool, String> {
    if verify_all_flag {
        let mut all_pass = true;
        for report in verify_all() {
            let verdict = if report.passed() { "PASS" } else { "FAIL" };
            println!("{} {verdict}", report.example);
            all_pass &= report.passed();
        }
        return Ok(all_pass);
    }

    if let Some(name) = show {
        let record = list_examples()
            .into_iter()
            .find(|r| r.id.name() == name)
            .ok_or_else(|| format!("no bundled example named {name:?}"))?;
        if print {
            print!("{}", serialize_diamond(&record.diamond));
            return Ok(true);
        }
        let report = verify_record(&record);
        println!("{}", kv(&[("example", report.example.to_owned())], tsv));
        for line in &report.checks {
            print_check(line, tsv);
        }
        return Ok(report.passed());
    }

    for record in list_examples() {
        println!(
            "{}",
            kv(
                &[
                    ("name", record.id.name().to_owned()),
                    ("n", record.diamond.half_dim().to_string()),
                    ("b2", record.diamond.b2().to_string()),
                ],
                tsv,
            )
        );
    }
    Ok(true)
}

fn cmd_relation(n: usize, raw: bool) -> Result<bool, String> {
    if n == 0 {
        return Err("half dimension must be at least 1".to_owned());
    }
    if raw {
        println!("{}", raw_relation_text(n));
    } else {
        println!("{}", specialized_relation_text(n));
    }
    Ok(true)
}
