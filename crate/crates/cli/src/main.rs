use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vanishoff::chartab::{character_degrees, dixon_character_table, CharacterTable, Cyclotomic};
use vanishoff::group::{parse_group_spec, realize, DEFAULT_ORDER_LIMIT};
use vanishoff::harness::{
    analyze, corpus, verify_corpus, AnalyzeOptions, Report, Summary, VerifyOptions, CACHE_ENV,
};
use vanishoff::structure::{conjugacy_classes, derived_subgroup};
use vanishoff::vanishing::Verdict;
use vanishoff::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;

/// Vanishing-off subgroups, Camina elements and character tables of
/// finite groups.
#[derive(Parser)]
#[command(name = "vanishoff", version)]
struct Cli {
    /// Refuse to enumerate groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_LIMIT)]
    order_limit: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group and print or write its report.
    Analyze {
        file: PathBuf,
        /// Write the JSON report here ("-" for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Skip the character table and the checks that need it.
        #[arg(long)]
        no_chartab: bool,
        /// Report cache directory.
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        /// Record wall-clock time per stage in the report.
        #[arg(long)]
        timing: bool,
        /// Name recorded in the report.
        #[arg(long)]
        name: Option<String>,
    },
    /// Check the built-in example corpus against its golden data.
    Verify {
        /// Verify a single entry by exact name.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        /// Write the verification summary as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print the character table of a group.
    Chartab { file: PathBuf },
    /// List the corpus, or print the presentation of one entry.
    Corpus { name: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Analyze {
            file,
            json,
            no_chartab,
            cache,
            timing,
            name,
        } => {
            let source = read(&file)?;
            let opts = AnalyzeOptions {
                chartab: !no_chartab,
                cache_dir: cache,
                order_limit: cli.order_limit,
                name,
                record_timing: timing,
            };
            let report = analyze(&source, &opts)?;
            match json.as_deref() {
                Some(p) if p == Path::new("-") => print!("{}", report.to_json()),
                Some(p) => {
                    fs::write(p, report.to_json())?;
                    print_summary(&report, &file);
                }
                None => print_summary(&report, &file),
            }
            Ok(if report.theorems.all_passed() {
                0
            } else {
                EXIT_FAILED
            })
        }
        Command::Verify { only, cache, json } => {
            let opts = VerifyOptions {
                only,
                cache_dir: cache,
                order_limit: cli.order_limit,
            };
            let summary = verify_corpus(&opts)?;
            print_verification(&summary);
            if let Some(p) = json {
                let text = serde_json::to_string_pretty(&summary).expect("summary serializes");
                fs::write(p, text + "\n")?;
            }
            Ok(if summary.all_passed() { 0 } else { EXIT_FAILED })
        }
        Command::Chartab { file } => {
            let source = read(&file)?;
            let spec = parse_group_spec(&source)?;
            let g = realize(&spec, cli.order_limit)?;
            let classes = conjugacy_classes(&g);
            let t = dixon_character_table(&g, &classes)?;
            print_table(&g, &t);
            Ok(match t.check(derived_subgroup(&g).index()) {
                Ok(()) => 0,
                Err(msg) => {
                    eprintln!("table check failed: {msg}");
                    EXIT_FAILED
                }
            })
        }
        Command::Corpus { name: None } => {
            for e in corpus() {
                println!("{}", e.name);
            }
            Ok(0)
        }
        Command::Corpus { name: Some(name) } => {
            let entry = corpus()
                .into_iter()
                .find(|e| e.name == name)
                .ok_or(Error::UnknownEntry(name))?;
            print!("{}", entry.source);
            Ok(0)
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_summary(r: &Report, file: &Path) {
    let m = &r.meta;
    let name = m.name.clone().unwrap_or_else(|| file.display().to_string());
    let class = match m.nilpotence_class {
        Some(c) => format!("nilpotent of class {c}"),
        None if m.solvable => "solvable, not nilpotent".into(),
        None => "not solvable".into(),
    };
    println!("{name}: order {}, {class}", m.order);
    println!("conjugacy classes: {}", r.structure.class_count);
    if let Some(c) = &r.characters {
        println!(
            "character degrees: {:?} (Dixon prime {}, conductor {})",
            c.cd, c.dixon_prime, c.conductor
        );
    }
    let v = &r.vanishing;
    match &v.degenerate {
        Some(note) => println!("V(G): {note}"),
        None => {
            println!(
                "V(G) = <{}>, order {}, index {}",
                v.v.generators.join(", "),
                v.v.order,
                v.v.index
            );
            if let Some(q) = &v.quotient {
                println!("G/V(G): {}", q.description);
            }
            let orders: Vec<String> = v.v_series.iter().map(|s| s.order.to_string()).collect();
            println!("|V_i|: {}", orders.join(", "));
            println!("vanishing height: {}", v.height);
            println!(
                "Camina group: {}, generalized Camina group: {}, VZ-group: {}",
                yes_no(v.is_camina_group),
                yes_no(v.is_generalized_camina_group),
                yes_no(v.is_vz_group)
            );
            println!("Camina elements: {}", v.camina_elements.len());
        }
    }
    let count = |want: Verdict| {
        r.theorems
            .clauses
            .iter()
            .filter(|c| c.verdict == want)
            .count()
    };
    println!(
        "theorem clauses: {} pass, {} not applicable, {} fail",
        count(Verdict::Pass),
        count(Verdict::NotApplicable),
        count(Verdict::Fail)
    );
    for c in r
        .theorems
        .clauses
        .iter()
        .filter(|c| c.verdict == Verdict::Fail)
    {
        println!("  FAIL {}: {} ({})", c.id, c.statement, c.witness);
    }
}

fn print_verification(s: &Summary) {
    for e in &s.entries {
        let order = e.order.map(|n| format!(" (order {n})")).unwrap_or_default();
        let status = if e.passed() { "ok  " } else { "FAIL" };
        println!(
            "{status} {}{order}: {} golden values",
            e.name, e.golden_checked
        );
        for d in &e.diffs {
            println!(
                "     {}: expected {}, got {}",
                d.field, d.expected, d.actual
            );
        }
        for id in &e.theorem_failures {
            println!("     theorem clause {id} failed");
        }
        if let Some(err) = &e.error {
            println!("     error: {err}");
        }
    }
    println!("{} passed, {} failed", s.passed(), s.failed());
}

/// `3`, `-1`, `z^2+z^5`, `-2-z^3` with `z` the primitive root of unity.
fn format_value(c: &Cyclotomic) -> String {
    if let Some(n) = c.as_integer() {
        return n.to_string();
    }
    let mut s = String::new();
    for (k, &a) in c.reduced().iter().enumerate().filter(|(_, &a)| a != 0) {
        let sign = if a < 0 {
            "-"
        } else if s.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = a.unsigned_abs();
        let coef = if mag == 1 && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let power = match k {
            0 => String::new(),
            1 => "z".into(),
            _ => format!("z^{k}"),
        };
        s += &format!("{sign}{coef}{power}");
    }
    s
}

fn print_table(g: &vanishoff::group::GroupTable, t: &CharacterTable) {
    let classes = t.classes();
    let k = t.len();
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(k + 2);
    let mut reps = vec!["class".to_string()];
    let mut sizes = vec!["size".to_string()];
    for c in 0..k {
        reps.push(g.label(classes.representative(c)).to_string());
        sizes.push(classes.size(c).to_string());
    }
    grid.push(reps);
    grid.push(sizes);
    for row in 0..k {
        let mut line = vec![format!("X.{}", row + 1)];
        line.extend(t.row(row).iter().map(format_value));
        grid.push(line);
    }
    let widths: Vec<usize> = (0..=k)
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    println!(
        "order {}, {} classes, degrees {:?}, z = exp(2 pi i / {})",
        g.order(),
        k,
        character_degrees(t).1,
        t.conductor()
    );
    for r in &grid {
        let cells: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        println!("{}", cells.join("  "));
    }
}
