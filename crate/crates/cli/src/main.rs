//! Command-line front end: parameter reports, encoding, repair, brute-force
//! verification, storage simulation and the built-in reference cases.
//!
//! Exit codes: 0 success, 1 data error (unrecoverable erasures, failed
//! cases), 2 config/input error, 3 work cap exceeded, 4 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use seplrc::cases;
use seplrc::code::{CodeError, GhwRow, ParamReport, WorkCaps};
use seplrc::config::{self, BuiltCode, CodeConfig, ConfigError};
use seplrc::galois::FieldElement;
use seplrc::storesim::{self, FailurePattern};

#[derive(Parser)]
#[command(
    name = "seplrc",
    about = "Locally recoverable evaluation codes from curves with separated variables",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the parameter report of the code described by a JSON config
    Params {
        config: PathBuf,
        /// Print machine-readable JSON only
        #[arg(long)]
        json: bool,
        /// Number of generalized-weight rows to include
        #[arg(long)]
        ghw: Option<u64>,
        /// Write the generator matrix to a file
        #[arg(long, value_name = "FILE")]
        export_matrix: Option<PathBuf>,
    },
    /// Encode messages into codeword files
    Encode {
        config: PathBuf,
        /// File with one message per line (dim V canonical integers each)
        #[arg(long, conflicts_with = "random")]
        message: Option<PathBuf>,
        /// Generate this many random messages instead
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fill the "?" erasures of a codeword file by local repair
    Repair {
        config: PathBuf,
        codeword: PathBuf,
        /// Write the repaired codeword here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run both repair paths and insist they agree
        #[arg(long)]
        cross_check: bool,
    },
    /// Run the exhaustive oracles and diff them against the bound report
    Verify {
        config: PathBuf,
        /// Compute the exact weight hierarchy up to this t
        #[arg(long, default_value_t = 1)]
        ghw: u64,
        /// Cap on oracle steps (applies to both scan strategies)
        #[arg(long)]
        max_work: Option<u64>,
    },
    /// Spread codewords over virtual nodes, fail some, account repairs
    Simulate {
        config: PathBuf,
        #[arg(long)]
        nodes: usize,
        /// "single" or "random:K"
        #[arg(long, default_value = "single")]
        pattern: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// File with one codeword per line
        #[arg(long)]
        objects: PathBuf,
    },
    /// Rerun the built-in reference cases and compare against known values
    PaperExamples {
        /// Run a single case (ex3.3a, ex3.3b, ex3.3c, ex3.3d, ex3.8, ex5.4,
        /// ex6.1, ex6.2, ex6.3)
        #[arg(long)]
        case: Option<String>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Failure {
        match e {
            ConfigError::Code(CodeError::WorkCapExceeded { what, required, cap }) => {
                Failure::new(3, format!("{what} needs {required} steps, cap is {cap}"))
            }
            other => Failure::new(2, other.to_string()),
        }
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Failure {
        match e {
            CodeError::WorkCapExceeded { what, required, cap } => {
                Failure::new(3, format!("{what} needs {required} steps, cap is {cap}"))
            }
            other => Failure::new(2, other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(4),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<BuiltCode, Failure> {
    let text = read_file(path)?;
    let cfg = CodeConfig::from_json(&text)?;
    Ok(cfg.build()?)
}

fn write_or_print(out: Option<&PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Params { config, json, ghw, export_matrix } => {
            let built = load(&config)?;
            let mut report = built.code.params(&built.policy)?;
            if let Some(t_max) = ghw {
                report.ghw = built.code.ghw_bounds(t_max, &built.policy)?;
            }
            if let Some(path) = export_matrix {
                write_or_print(Some(&path), &built.code.generator_export())?;
            }
            let json_text = serde_json::to_string_pretty(&report).expect("report serialize");
            if json {
                println!("{json_text}");
            } else {
                print!("{}", render_report(&report));
                println!("--- json ---");
                println!("{json_text}");
            }
            Ok(())
        }
        Command::Encode { config, message, random, seed, out } => {
            let built = load(&config)?;
            let code = &built.code;
            let field = code.curve().field().clone();
            let messages: Vec<Vec<FieldElement>> = match (message, random) {
                (Some(path), None) => {
                    let text = read_file(&path)?;
                    let mut msgs = Vec::new();
                    for line in text.lines().filter(|l| !l.trim().is_empty()) {
                        let parsed = config::parse_codeword(&field, line)?;
                        let msg: Option<Vec<FieldElement>> = parsed.into_iter().collect();
                        let msg = msg.ok_or_else(|| {
                            Failure::new(2, "messages must not contain erasures")
                        })?;
                        msgs.push(msg);
                    }
                    msgs
                }
                (None, Some(count)) => {
                    use rand::{Rng, SeedableRng};
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                    let q = u64::from(field.q());
                    (0..count)
                        .map(|_| {
                            (0..code.dim_v())
                                .map(|_| field.element(rng.gen_range(0..q)).unwrap())
                                .collect()
                        })
                        .collect()
                }
                _ => return Err(Failure::new(4, "pass exactly one of --message or --random")),
            };
            let mut output = String::new();
            for msg in &messages {
                let cw = code.encode(msg)?;
                let symbols: Vec<Option<FieldElement>> = cw.into_iter().map(Some).collect();
                output.push_str(&config::format_codeword(&symbols));
                output.push('\n');
            }
            write_or_print(out.as_ref(), &output)
        }
        Command::Repair { config, codeword, out, cross_check } => {
            let built = load(&config)?;
            let code = &built.code;
            let field = code.curve().field().clone();
            let text = read_file(&codeword)?;
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| Failure::new(2, "codeword file is empty"))?;
            let mut symbols = config::parse_codeword(&field, line)?;
            if symbols.len() != code.n() as usize {
                return Err(Failure::new(
                    2,
                    format!(
                        "codeword has {} symbols, code length is {}",
                        symbols.len(),
                        code.n()
                    ),
                ));
            }
            let erased: Vec<usize> =
                (0..symbols.len()).filter(|&i| symbols[i].is_none()).collect();
            let mut fibre_losses = vec![0usize; code.fibres().len()];
            for &p in &erased {
                fibre_losses[code.recovery_map(p).0] += 1;
            }
            let mut globals = Vec::new();
            for &p in &erased {
                if fibre_losses[code.recovery_map(p).0] == 1 {
                    let res = if cross_check {
                        code.repair_cross_checked(&symbols, p)
                    } else {
                        code.repair(&symbols, p)
                    }
                    .map_err(|e| Failure::new(1, e.to_string()))?;
                    println!(
                        "position {p}: method={} value={} symbols_read={}",
                        res.method.label(),
                        res.value,
                        res.symbols_read
                    );
                    symbols[p] = Some(res.value);
                } else {
                    globals.push(p);
                }
            }
            if !globals.is_empty() {
                let decoded = code
                    .erasure_decode(&symbols)
                    .map_err(|e| Failure::new(1, e.to_string()))?;
                let reads = symbols.iter().filter(|s| s.is_some()).count();
                for &p in &globals {
                    println!(
                        "position {p}: method=global-decode value={} symbols_read={reads}",
                        decoded[p]
                    );
                    symbols[p] = Some(decoded[p]);
                }
            }
            if let Some(path) = out {
                let line = config::format_codeword(&symbols);
                write_or_print(Some(&path), &format!("{line}\n"))?;
            }
            Ok(())
        }
        Command::Verify { config, ghw, max_work } => {
            let built = load(&config)?;
            let code = &built.code;
            let mut caps = WorkCaps::default();
            if let Some(cap) = max_work {
                caps.max_codewords = cap;
                caps.max_subsets = cap;
            }
            let report = code.params(&built.policy)?;
            let d = code.brute_min_distance(&caps)?;
            println!("exact d = {d}");
            let lower = report.d_lower.value;
            if d < lower {
                return Err(Failure::new(1, format!("exact d {d} below bound {lower}")));
            }
            if let Some(upper) = &report.d_upper {
                if d > upper.value {
                    return Err(Failure::new(
                        1,
                        format!("exact d {d} above upper bound {}", upper.value),
                    ));
                }
            }
            let k = code.k();
            let defect = code.n() + 2 - (k + d + k.div_ceil(code.locality()));
            println!("exact defect = {defect}");
            if ghw >= 1 {
                let hierarchy = code.brute_weight_hierarchy(ghw, &caps)?;
                let rows = code.ghw_bounds(ghw, &built.policy)?;
                let pretty: Vec<String> = hierarchy.iter().map(u64::to_string).collect();
                println!("exact hierarchy: {}", pretty.join(","));
                for (row, &dt) in rows.iter().zip(&hierarchy) {
                    let ok = row.lower <= dt && dt <= row.upper;
                    println!(
                        "  t={}: exact {dt}, bounds [{}, {}] {}",
                        row.t,
                        row.lower,
                        row.upper,
                        if ok { "ok" } else { "VIOLATED" }
                    );
                    if !ok {
                        return Err(Failure::new(1, format!("bound violated at t={}", row.t)));
                    }
                }
                let ranks = code.rank_indices_exact(&hierarchy);
                if let Some(t) = ranks.opt_rank.exact {
                    println!("optimal rank = {t}");
                }
                if let Some(t) = ranks.mds_rank.exact {
                    println!("mds rank = {t}");
                }
            }
            Ok(())
        }
        Command::Simulate { config, nodes, pattern, seed, objects } => {
            let built = load(&config)?;
            let code = &built.code;
            let field = code.curve().field().clone();
            let pattern = parse_pattern(&pattern)?;
            let text = read_file(&objects)?;
            let mut stored = Vec::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let parsed = config::parse_codeword(&field, line)?;
                let cw: Option<Vec<FieldElement>> = parsed.into_iter().collect();
                stored.push(cw.ok_or_else(|| {
                    Failure::new(2, "stored objects must not contain erasures")
                })?);
            }
            let stats = storesim::simulate(code, &stored, nodes, pattern, seed)
                .map_err(|e| Failure::new(2, e.to_string()))?;
            print!("{stats}");
            println!("--- json ---");
            println!("{}", stats.to_json());
            Ok(())
        }
        Command::PaperExamples { case } => {
            let reports = match case {
                Some(name) => {
                    let report = cases::run_case(&name).ok_or_else(|| {
                        Failure::new(
                            4,
                            format!(
                                "unknown case {name:?}; known: {}",
                                cases::CASE_NAMES.join(", ")
                            ),
                        )
                    })?;
                    vec![report]
                }
                None => cases::run_all(),
            };
            let mut all_ok = true;
            for report in &reports {
                print!("{}", report.render());
                all_ok &= report.passed();
            }
            println!("---");
            for report in &reports {
                println!(
                    "{:8} {}",
                    report.name,
                    if report.passed() { "pass" } else { "FAIL" }
                );
            }
            if all_ok {
                Ok(())
            } else {
                Err(Failure::new(1, "some cases failed"))
            }
        }
    }
}

fn parse_pattern(text: &str) -> Result<FailurePattern, Failure> {
    if text == "single" {
        return Ok(FailurePattern::SingleNode);
    }
    if let Some(rest) = text.strip_prefix("random:") {
        let k: usize = rest
            .parse()
            .map_err(|_| Failure::new(4, format!("bad node count in pattern {text:?}")))?;
        return Ok(FailurePattern::RandomNodes(k));
    }
    Err(Failure::new(4, format!("unknown pattern {text:?}; use single or random:K")))
}

fn render_report(r: &ParamReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "[{}, {}, d>={}] code of locality {}\n",
        r.n, r.k, r.d_lower.value, r.locality
    ));
    out.push_str(&format!("  dim V              {}\n", r.dim_v));
    out.push_str(&format!("  pole bound m       {}\n", r.m));
    out.push_str(&format!("  abundance w        {}\n", r.w));
    out.push_str(&format!("  genus              {}\n", r.genus));
    out.push_str(&format!("  semigroup          {}\n", r.semigroup_certificate));
    out.push_str(&format!(
        "  d lower            {}  [{} / {}]\n",
        r.d_lower.value, r.d_lower.rule, r.d_lower.certification
    ));
    if let Some(upper) = &r.d_upper {
        out.push_str(&format!("  d upper            {}  [{}]\n", upper.value, upper.rule));
    }
    if r.abundant_by_fibre_product {
        out.push_str("  abundant           yes (fibre product vanishes everywhere)\n");
    }
    out.push_str(&format!("  defect bound       {}\n", r.defect_upper));
    if let Some(cf) = &r.defect_closed_form {
        out.push_str(&format!(
            "  defect closed form {} (case {}, consistent: {})\n",
            cf.value, cf.case, cf.consistent
        ));
    }
    if !r.kernel.is_empty() {
        out.push_str("  kernel basis:\n");
        for k in &r.kernel {
            out.push_str(&format!("    {}\n", k.display));
        }
    }
    if !r.ghw.is_empty() {
        out.push_str("  generalized weights:\n");
        for row in &r.ghw {
            out.push_str(&render_ghw_row(row));
        }
    }
    if !r.fibre_sum_uppers.is_empty() {
        out.push_str("  fibre-divisor uppers:\n");
        for e in &r.fibre_sum_uppers {
            out.push_str(&format!("    drop {} fibre(s): d_{} <= {}\n", e.mu, e.t, e.upper));
        }
    }
    out
}

fn render_ghw_row(row: &GhwRow) -> String {
    format!(
        "    t={}: {} <= d_{} <= {}  [{}]\n",
        row.t, row.lower, row.t, row.upper, row.lower_certification
    )
}
