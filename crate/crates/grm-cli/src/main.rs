//! `grm`: compute Gabriel-Roiter measures on finite posets and on categories
//! of quiver representations over a prime field.
//!
//! Exit codes: 0 success, 1 I/O or parse failure, 2 validation failure,
//! 3 not equivalent, 4 budget exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grm_core::dot::poset_to_dot;
use grm_core::json::{
    detection_result_to_doc, ind_poset_to_doc, length_function_from_doc,
    length_function_order_doc, main_property_report_to_doc, measure_to_doc, quiver_from_doc,
    LengthFunctionDoc, MeasureDoc, QuiverDoc, QuiverInput,
};
use grm_core::length::{equivalence_witness, LengthFunction};
use grm_core::measure::{iterate_measure, measure_dp};
use grm_core::repcat::{enumerate_ind, CategoryLengthFunction, Fp, IndPoset};
use grm_core::testing;
use grm_core::verify::{
    check_main_property, check_socle_lemma, detect_injectives, detect_injectives_advisory,
    detect_simples, detect_simples_advisory,
};
use grm_core::Error;

const EXIT_IO: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_NOT_EQUIVALENT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "grm", version, about = "Gabriel-Roiter measures on posets and quiver categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the (iterated) chain length function of a length function.
    Measure(MeasureArgs),
    /// Decide whether two length functions on the same poset are equivalent.
    Equiv(EquivArgs),
    /// Operations on the category of representations of a quiver.
    Quiver(QuiverArgs),
}

#[derive(Args)]
struct MeasureArgs {
    /// Length function JSON: {"poset": {...}, "values": {...}}.
    #[arg(long)]
    input: PathBuf,
    /// Iteration count: n = 1 is λ*, n = 2 is (λ*)*, and so on.
    #[arg(short = 'n', long = "iterations", default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct EquivArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    input2: PathBuf,
}

#[derive(Args)]
struct QuiverArgs {
    #[command(subcommand)]
    command: QuiverCommand,
}

#[derive(Args)]
struct QuiverCommon {
    /// Quiver JSON: {"vertices": [...], "arrows": [...], "p": 2,
    /// "maxLen": 5, "simpleLengths": {...}}.
    #[arg(long)]
    input: PathBuf,
    /// Override the field characteristic from the input file.
    #[arg(long)]
    field: Option<u8>,
    /// Override the enumeration length bound from the input file.
    #[arg(long)]
    max_len: Option<usize>,
}

#[derive(Subcommand)]
enum QuiverCommand {
    /// Enumerate the indecomposable classes and the subobject poset.
    Ind {
        #[command(flatten)]
        common: QuiverCommon,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Order the classes by the Gabriel-Roiter measure ℓ*.
    Measure {
        #[command(flatten)]
        common: QuiverCommon,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Order the classes by the n-fold iterated measure.
    Iterate {
        #[command(flatten)]
        common: QuiverCommon,
        #[arg(short = 'n', long = "iterations", default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check Gabriel's main property exhaustively.
    VerifyMain {
        #[command(flatten)]
        common: QuiverCommon,
        /// Largest number of direct summands per tested sum.
        #[arg(long, default_value_t = 2)]
        max_summands: usize,
        /// Also check two random positive length functions drawn from this
        /// seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Detect the injective indecomposables by measure maximality.
    DetectInjectives {
        #[command(flatten)]
        common: QuiverCommon,
        /// Allow truncated enumerations; the answer is then advisory.
        #[arg(long)]
        advisory: bool,
    },
    /// Detect the simple classes by measure minimality.
    DetectSimples {
        #[command(flatten)]
        common: QuiverCommon,
        #[arg(long)]
        advisory: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit)
        }
    }
}

struct Failure {
    exit: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let exit = match &e {
            Error::Parse(_) => EXIT_IO,
            Error::BudgetExceeded(_)
            | Error::IterationBudgetExceeded { .. }
            | Error::HomSpaceTooLarge(_)
            | Error::BoundTooTight { .. } => EXIT_BUDGET,
            _ => EXIT_VALIDATION,
        };
        let message = match &e {
            Error::InvalidLengthFunction(report) => {
                format!("not a length function:\n{}", report)
            }
            _ => e.to_string(),
        };
        Failure { exit, message }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        exit: EXIT_IO,
        message: format!("cannot read {}: {}", path.display(), e),
    })?;
    serde_json::from_str(&text).map_err(|e| Failure {
        exit: EXIT_IO,
        message: format!("cannot parse {}: {}", path.display(), e),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Measure(args) => cmd_measure(args),
        Command::Equiv(args) => cmd_equiv(args),
        Command::Quiver(args) => cmd_quiver(args.command),
    }
}

fn cmd_measure(args: MeasureArgs) -> Result<ExitCode, Failure> {
    let doc: LengthFunctionDoc = read_json(&args.input)?;
    let lambda = length_function_from_doc(&doc)?;
    match args.format {
        Format::Dot => {
            print!("{}", poset_to_dot(lambda.poset(), "poset"));
            return Ok(ExitCode::SUCCESS);
        }
        Format::Json | Format::Table => {}
    }
    let iterated = iterate_measure(&lambda, args.n)?;
    let out = length_function_order_doc(&iterated)?;
    emit_measure(&out, args.format);
    Ok(ExitCode::SUCCESS)
}

fn emit_measure(doc: &MeasureDoc, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(doc).unwrap()),
        Format::Table => {
            println!("{:<6} {:<16} value", "rank", "element");
            for (k, id) in doc.order.iter().enumerate() {
                println!(
                    "{:<6} {:<16} {}",
                    k + 1,
                    id,
                    render_value(&doc.values[id])
                );
            }
            if !doc.ties.is_empty() {
                let groups: Vec<String> =
                    doc.ties.iter().map(|g| format!("{{{}}}", g.join(", "))).collect();
                println!("ties: {}", groups.join(" "));
            }
        }
        Format::Dot => unreachable!("dot handled by the caller"),
    }
}

fn render_value(doc: &grm_core::json::ValueDoc) -> String {
    use grm_core::json::ValueDoc;
    match doc {
        ValueDoc::Int(n) => n.to_string(),
        ValueDoc::Str(s) => s.clone(),
        ValueDoc::List(entries) => {
            let inner: Vec<String> = entries.iter().map(render_value).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

fn cmd_equiv(args: EquivArgs) -> Result<ExitCode, Failure> {
    let f = length_function_from_doc(&read_json::<LengthFunctionDoc>(&args.input)?)?;
    let g = length_function_from_doc(&read_json::<LengthFunctionDoc>(&args.input2)?)?;
    match equivalence_witness(&f, &g)? {
        None => {
            println!("equivalent");
            Ok(ExitCode::SUCCESS)
        }
        Some((x, y)) => {
            println!("not equivalent: witness pair ({}, {})", x, y);
            Ok(ExitCode::from(EXIT_NOT_EQUIVALENT))
        }
    }
}

fn load_quiver(common: &QuiverCommon) -> Result<(QuiverInput, IndPoset), Failure> {
    let doc: QuiverDoc = read_json(&common.input)?;
    let mut input = quiver_from_doc(&doc)?;
    if let Some(p) = common.field {
        input.field = Fp::new(p)?;
    }
    if let Some(max_len) = common.max_len {
        input.max_len = max_len;
    }
    let ip = enumerate_ind(&input.quiver, input.field, input.max_len)?;
    Ok((input, ip))
}

fn quiver_measure_function(
    input: &QuiverInput,
    ip: &IndPoset,
    n: usize,
) -> Result<LengthFunction, Error> {
    let base = ip.base_length_function(&input.ell)?;
    iterate_measure(&base, n)
}

fn cmd_quiver(command: QuiverCommand) -> Result<ExitCode, Failure> {
    match command {
        QuiverCommand::Ind { common, format } => {
            let (_, ip) = load_quiver(&common)?;
            match format {
                Format::Json => {
                    let doc = ind_poset_to_doc(&ip);
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Table => {
                    println!("{:<16} {:<12} length", "class", "dims");
                    for c in ip.classes() {
                        println!("{:<16} {:<12} {}", c.label, format!("{:?}", c.rep.dims()), c.length);
                    }
                    println!(
                        "{} classes, {} cover pairs{}",
                        ip.classes().len(),
                        ip.poset().covers().len(),
                        if ip.is_truncated() { ", truncated" } else { "" }
                    );
                }
                Format::Dot => {
                    print!("{}", poset_to_dot(ip.poset(), "ind"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        QuiverCommand::Measure { common, format } => {
            let (input, ip) = load_quiver(&common)?;
            let measure = measure_dp(&ip.base_length_function(&input.ell)?)?;
            let doc = measure_to_doc(&measure)?;
            emit_format(&doc, format, &ip)?;
            Ok(ExitCode::SUCCESS)
        }
        QuiverCommand::Iterate { common, n, format } => {
            let (input, ip) = load_quiver(&common)?;
            let iterated = quiver_measure_function(&input, &ip, n)?;
            let doc = length_function_order_doc(&iterated)?;
            emit_format(&doc, format, &ip)?;
            Ok(ExitCode::SUCCESS)
        }
        QuiverCommand::VerifyMain {
            common,
            max_summands,
            seed,
        } => {
            let (input, ip) = load_quiver(&common)?;
            let mut ells: Vec<(String, CategoryLengthFunction)> =
                vec![("input".to_owned(), input.ell.clone())];
            if let Some(seed) = seed {
                let mut rng = testing::rng(seed);
                for k in 0..2 {
                    let values =
                        testing::random_positive_rationals(&mut rng, input.quiver.vertex_count());
                    ells.push((
                        format!("random{}", k + 1),
                        CategoryLengthFunction::new(values)?,
                    ));
                }
            }
            let mut all_clean = true;
            let mut reports = serde_json::Map::new();
            for (name, ell) in &ells {
                let report = check_main_property(&ip, ell, max_summands)?;
                let socle = check_socle_lemma(&ip, ell)?;
                all_clean &= report.is_empty() && socle.is_empty();
                let mut doc =
                    serde_json::to_value(main_property_report_to_doc(&report)).unwrap();
                doc["socleLemmaViolations"] =
                    serde_json::Value::from(socle.violations.len());
                reports.insert(name.clone(), doc);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(reports)).unwrap()
            );
            if all_clean {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VALIDATION))
            }
        }
        QuiverCommand::DetectInjectives { common, advisory } => {
            let (input, ip) = load_quiver(&common)?;
            let result = if advisory {
                detect_injectives_advisory(&ip)?
            } else {
                detect_injectives(&ip)?
            };
            let mut doc = serde_json::to_value(detection_result_to_doc(
                &input.quiver,
                &result,
            ))
            .unwrap();
            doc["advisory"] = serde_json::Value::from(result.advisory);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        QuiverCommand::DetectSimples { common, advisory } => {
            let (input, ip) = load_quiver(&common)?;
            let result = if advisory {
                detect_simples_advisory(&ip)?
            } else {
                detect_simples(&ip)?
            };
            let mut doc = serde_json::to_value(detection_result_to_doc(
                &input.quiver,
                &result,
            ))
            .unwrap();
            doc["advisory"] = serde_json::Value::from(result.advisory);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_format(doc: &MeasureDoc, format: Format, ip: &IndPoset) -> Result<(), Failure> {
    match format {
        Format::Dot => print!("{}", poset_to_dot(ip.poset(), "ind")),
        other => emit_measure(doc, other),
    }
    Ok(())
}
