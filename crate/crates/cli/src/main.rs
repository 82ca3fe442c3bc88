use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};

use lkit_core::report::{from_toml, to_toml};
use lkit_core::search::{additivity_audit, run_search, Budget, SearchReport};
use lkit_core::svg::{render_svg, RenderStyle};
use lkit_core::{
    connected_sum, fingerprint, format_word, orient, parse_word, split_at, standard_unknot, Error,
    FrontWord, LaurentPoly, DEFAULT_CROSSING_LIMIT,
};

#[derive(Parser)]
#[command(name = "lkit", version, about = "Legendrian front toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print tb, rotation, cusp and crossing counts of a front word.
    Info { word: String },
    /// Connected sum of two knot fronts.
    Connect { word1: String, word2: String },
    /// Split a front along a width-2 vertical line after `--at` events.
    Split {
        word: String,
        #[arg(long)]
        at: usize,
    },
    /// Print the Jones class of a knot front.
    Classify {
        word: String,
        #[arg(long, default_value_t = DEFAULT_CROSSING_LIMIT)]
        max_crossings: usize,
    },
    /// Saucer front with the given numbers of up and down zigzags.
    StandardUnknot {
        #[arg(long, default_value_t = 0)]
        up: usize,
        #[arg(long, default_value_t = 0)]
        down: usize,
    },
    /// Exhaustive max-tb search; writes a report document.
    Search {
        #[arg(long, default_value_t = 8)]
        max_events: usize,
        #[arg(long, default_value_t = 4)]
        max_width: usize,
        #[arg(long, default_value_t = 12)]
        max_crossings: usize,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads; the report does not depend on this.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Connected-sum additivity audit on bucket pairs of a report.
    ///
    /// Pairs are separated by `;`, members by `,`. A member is a bucket index
    /// (0-based, report order) or a front word whose class is looked up.
    Audit {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        pairs: String,
    },
    /// Render a front as SVG.
    Render {
        word: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 40.0)]
        column: f64,
        #[arg(long, default_value_t = 20.0)]
        gap: f64,
        #[arg(long, default_value_t = 1.0)]
        sharpness: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let limit = err
                .downcast_ref::<Error>()
                .is_some_and(Error::is_limit);
            ExitCode::from(if limit { 2 } else { 1 })
        }
    }
}

fn word(text: &str) -> anyhow::Result<FrontWord> {
    Ok(parse_word(text)?)
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Info { word: w } => {
            let f = word(&w)?;
            println!("word: {f}");
            println!("components: {}", f.component_count());
            println!("left_cusps: {}", f.left_cusp_count());
            println!("right_cusps: {}", f.right_cusp_count());
            println!("crossings: {}", f.crossing_count());
            println!("max_width: {}", f.max_width());
            if f.component_count() == 1 {
                let o = orient(&f)?;
                println!("writhe: {}", o.writhe());
                println!("tb: {}", o.tb());
                println!("rotation: {}", o.rotation());
                println!("up_cusps: {}", o.up_cusps());
                println!("down_cusps: {}", o.down_cusps());
            }
        }
        Command::Connect { word1, word2 } => {
            let sum = connected_sum(&word(&word1)?, &word(&word2)?)?;
            println!("{}", format_word(&sum));
        }
        Command::Split { word: w, at } => {
            let (l, r) = split_at(&word(&w)?, at)?;
            println!("{}", format_word(&l));
            println!("{}", format_word(&r));
        }
        Command::Classify { word: w, max_crossings } => {
            let fp = fingerprint(&word(&w)?, max_crossings)?;
            println!("{}", fp.jones_class);
        }
        Command::StandardUnknot { up, down } => {
            println!("{}", format_word(&standard_unknot(up, down)));
        }
        Command::Search {
            max_events,
            max_width,
            max_crossings,
            out,
            workers,
        } => {
            let budget = Budget::new(max_events, max_width, max_crossings)?;
            let workers = workers.unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |n| n.get())
            });
            let report = run_search(&budget, workers)?;
            fs::write(&out, to_toml(&report))
                .with_context(|| format!("writing {}", out.display()))?;
            println!(
                "enumerated {} words ({} skipped) into {} Jones classes in {:.2?}",
                report.enumerated,
                report.skipped,
                report.buckets.len(),
                report.elapsed
            );
            for (class, rec) in &report.buckets {
                println!("max_tb {:>3}  witness {}  class {}", rec.max_tb, rec.witness, class);
            }
        }
        Command::Audit { report, pairs } => {
            let text = fs::read_to_string(&report)
                .with_context(|| format!("reading {}", report.display()))?;
            let report = from_toml(&text)?;
            report.verify_witnesses()?;
            let pairs = parse_pairs(&report, &pairs)?;
            let audit = additivity_audit(&report, &pairs)?;
            for t in &audit.triples {
                println!(
                    "{} | lhs {} rhs {} | spliced tb {} ({}){} | {} x {}",
                    t.status,
                    t.lhs_max,
                    t.rhs_sum,
                    t.spliced_tb,
                    t.witness_spliced,
                    if t.out_of_budget { " OUT_OF_BUDGET" } else { "" },
                    t.f1.jones_class,
                    t.f2.jones_class
                );
            }
            let bad = audit.violations().count();
            if bad > 0 {
                bail!("{bad} pair(s) fall below the spliced witness inside the budget");
            }
        }
        Command::Render {
            word: w,
            out,
            column,
            gap,
            sharpness,
        } => {
            let style = RenderStyle::new(column, gap, sharpness)?;
            let svg = render_svg(&word(&w)?, &style);
            fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
        }
    }
    Ok(())
}

fn bucket_ref(report: &SearchReport, member: &str) -> anyhow::Result<LaurentPoly> {
    let member = member.trim();
    if let Ok(i) = member.parse::<usize>() {
        return report
            .buckets
            .keys()
            .nth(i)
            .cloned()
            .ok_or_else(|| anyhow!(Error::UnknownBucket(format!("index {i}"))));
    }
    let f = word(member)?;
    Ok(fingerprint(&f, report.budget.max_crossings)?.jones_class)
}

fn parse_pairs(report: &SearchReport, text: &str) -> anyhow::Result<Vec<(LaurentPoly, LaurentPoly)>> {
    text.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|pair| {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| anyhow!("pair {pair:?} needs two members separated by ','"))?;
            Ok((bucket_ref(report, a)?, bucket_ref(report, b)?))
        })
        .collect()
}
