use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use star_anagrams::corpus::{
    export_report, find_autostars, import_report, load_wordlist_file, scan, AutostarInventory,
    CorpusReport, ReportFormat, ScanConfig, DEFAULT_CAP,
};
use star_anagrams::render::{render_gallery, render_polygon, FigureSpec, RenderOptions};
use star_anagrams::shapes::enumerate_star_shapes;
use star_anagrams::{classify_anagram, AnagramPair, Error, StarClass};

const EXIT_NON_STAR: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FAILURE: u8 = 3;

/// Detect, classify, cluster and draw star anagrams.
#[derive(Parser, Debug)]
#[command(name = "star-anagrams", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one ordered anagram pair (exit 0 for a star, 1 for a non-star)
    Classify {
        first: String,
        second: String,
        /// Refuse pairs with more candidate paths than this
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Scan a word list; writes report.json and stars.csv and prints a histogram
    Scan {
        wordlist: PathBuf,
        #[command(flatten)]
        work: Work,
        /// Write only this report format
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Skip the autostar search
        #[arg(long)]
        no_autostars: bool,
        /// Directory for the report files
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Count unique star polygons on N points (5 to 12)
    Shapes {
        #[arg(value_parser = clap::value_parser!(u64).range(5..=12))]
        n: u64,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List words that are star anagrams of themselves
    Autostars {
        wordlist: PathBuf,
        #[command(flatten)]
        work: Work,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the selected path of a pair as an SVG figure
    Render {
        first: String,
        second: String,
        /// Output file (.svg)
        output: PathBuf,
        /// Label each chord with its step
        #[arg(long)]
        steps: bool,
        /// Label each node with its index
        #[arg(long)]
        indices: bool,
        #[arg(long)]
        caption: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
    },
    /// Draw every star of a structured report into a directory tree
    Gallery { report: PathBuf, outdir: PathBuf },
}

#[derive(Args, Debug)]
struct Work {
    /// Pairs and autostar words with more paths than this are excluded
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
    /// Worker threads (default: all cores)
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Structured,
    Tabular,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Structured => ReportFormat::Structured,
            Format::Tabular => ReportFormat::Tabular,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let usage = err.chain().any(|e| {
                matches!(
                    e.downcast_ref::<Error>(),
                    Some(
                        Error::NotAnAnagram { .. }
                            | Error::InvalidWord { .. }
                            | Error::UnsupportedLength { .. }
                            | Error::PathCountExceedsCap { .. }
                            | Error::PathCountOverflow
                    )
                )
            });
            ExitCode::from(if usage { EXIT_USAGE } else { EXIT_FAILURE })
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Classify { first, second, cap } => classify(&first, &second, cap),
        Command::Scan {
            wordlist,
            work,
            format,
            no_autostars,
            out,
        } => {
            let config = ScanConfig {
                cap: work.cap,
                jobs: work.jobs.map(|j| j as usize),
                autostars: !no_autostars,
            };
            scan_command(&wordlist, &config, format, &out)
        }
        Command::Shapes { n, format, out } => {
            let census = enumerate_star_shapes(n as usize)?;
            let mut text = String::new();
            match format {
                None => {
                    text.push_str(" N  asymmetric  symmetric  perfect  total\n");
                    let (a, s, p, t) = census.row();
                    text.push_str(&format!("{n:>2}  {a:>10}  {s:>9}  {p:>7}  {t:>5}\n"));
                }
                Some(Format::Tabular) => {
                    let (a, s, p, t) = census.row();
                    text.push_str("n,asymmetric,symmetric,perfect,total\n");
                    text.push_str(&format!("{n},{a},{s},{p},{t}\n"));
                }
                Some(Format::Structured) => {
                    text = serde_json::to_string_pretty(&census)? + "\n";
                }
            }
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Autostars {
            wordlist,
            work,
            format,
            out,
        } => {
            let list = load_wordlist_file(&wordlist)
                .with_context(|| format!("reading {}", wordlist.display()))?;
            let inventory = find_autostars(&list, work.cap, work.jobs.map(|j| j as usize));
            let text = match format {
                None => autostar_text(&inventory),
                Some(Format::Tabular) => autostar_csv(&inventory),
                Some(Format::Structured) => serde_json::to_string_pretty(&inventory)? + "\n",
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Render {
            first,
            second,
            output,
            steps,
            indices,
            caption,
            cap,
        } => {
            let pair = AnagramPair::parse(&first, &second)?;
            let c = classify_anagram(&pair, cap)?;
            let caption = caption
                .or_else(|| Some(format!("{} \u{2192} {}  {c}", pair.first(), pair.second())));
            let spec = FigureSpec::new(
                pair,
                c.path.clone(),
                RenderOptions {
                    show_steps: steps,
                    show_indices: indices,
                    caption,
                    ..RenderOptions::default()
                },
            )?;
            fs::write(&output, render_polygon(&spec))
                .with_context(|| format!("writing {}", output.display()))?;
            println!("{c}");
            println!("wrote {}", output.display());
            Ok(0)
        }
        Command::Gallery { report, outdir } => {
            let file =
                File::open(&report).with_context(|| format!("reading {}", report.display()))?;
            let report = import_report(io::BufReader::new(file))
                .with_context(|| format!("parsing {}", report.display()))?;
            let written = render_gallery(&report, &outdir)?;
            let figures = written
                .iter()
                .filter(|p| p.extension().is_some_and(|e| e == "svg"))
                .count();
            println!(
                "wrote {figures} figures and {} index pages under {}",
                written.len() - figures,
                outdir.display()
            );
            Ok(0)
        }
    }
}

fn classify(first: &str, second: &str, cap: Option<u64>) -> anyhow::Result<u8> {
    let pair = AnagramPair::parse(first, second)?;
    let c = classify_anagram(&pair, cap)?;
    println!("{c}");
    if let Some(l) = c.edge_length() {
        println!("L={l}");
    }
    if !c.class.is_star() {
        println!("O_rot=-1, O_ref=-1");
    }
    println!("path: {}", c.path);
    let steps: Vec<String> = c
        .path
        .steps()
        .as_slice()
        .iter()
        .map(i32::to_string)
        .collect();
    println!("steps: [{}]", steps.join(","));
    Ok(if c.class.is_star() { 0 } else { EXIT_NON_STAR })
}

fn scan_command(
    wordlist: &FsPath,
    config: &ScanConfig,
    format: Option<Format>,
    out: &FsPath,
) -> anyhow::Result<u8> {
    let list =
        load_wordlist_file(wordlist).with_context(|| format!("reading {}", wordlist.display()))?;
    let report = scan(&list, config);
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let formats = match format {
        Some(f) => vec![f],
        None => vec![Format::Structured, Format::Tabular],
    };
    let mut written = Vec::new();
    for f in formats {
        let name = match f {
            Format::Structured => "report.json",
            Format::Tabular => "stars.csv",
        };
        let path = out.join(name);
        let file = File::create(&path).with_context(|| format!("writing {}", path.display()))?;
        let mut w = BufWriter::new(file);
        export_report(&report, f.into(), &mut w)?;
        w.flush()?;
        written.push(path);
    }
    print!("{}", histogram(&report));
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(0)
}

fn histogram(report: &CorpusReport) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "{} words, {} anagrams, {} stars ({:.2}%)\n",
        report.words,
        report.anagrams,
        report.stars(),
        100.0 * report.star_fraction()
    ));
    s.push_str(&format!(
        "asymmetric {}, symmetric {}, perfect {}; {} clusters\n\n",
        report.class_total(StarClass::Asymmetric),
        report.class_total(StarClass::Symmetric),
        report.class_total(StarClass::Perfect),
        report.cluster_count()
    ));
    s.push_str(" N  anagrams  non-star  excluded   asymmetric    symmetric      perfect\n");
    let widest = report
        .lengths
        .iter()
        .map(|l| l.stars())
        .max()
        .unwrap_or(0)
        .max(1);
    let mut bars = String::new();
    for l in &report.lengths {
        let cell = |class| match l.bucket(class).filter(|b| b.count > 0) {
            Some(b) => format!("{} ({})", b.count, b.clusters.len()),
            None => "-".to_string(),
        };
        s.push_str(&format!(
            "{:>2}  {:>8}  {:>8}  {:>8}  {:>11}  {:>11}  {:>11}\n",
            l.len,
            l.anagrams,
            l.non_stars,
            l.excluded,
            cell(StarClass::Asymmetric),
            cell(StarClass::Symmetric),
            cell(StarClass::Perfect)
        ));
        if l.stars() > 0 {
            let mut bar = String::new();
            for (class, glyph) in [
                (StarClass::Asymmetric, 'a'),
                (StarClass::Symmetric, 's'),
                (StarClass::Perfect, 'p'),
            ] {
                let count = l.bucket(class).map_or(0, |b| b.count);
                let width = (count * 50).div_ceil(widest);
                bar.extend(std::iter::repeat_n(glyph, width));
            }
            bars.push_str(&format!("{:>2} |{bar} {}\n", l.len, l.stars()));
        }
    }
    s.push_str("(counts with cluster counts in parentheses)\n");
    if !bars.is_empty() {
        s.push('\n');
        s.push_str(&bars);
    }
    let r = &report.reversal;
    s.push_str(&format!(
        "\nreversal check: {} stars, {} symmetric; {} starriness and {} perfection violations\n",
        r.stars_checked,
        r.symmetric_checked,
        r.starriness_violations.len(),
        r.perfection_violations.len()
    ));
    if r.symmetry_counterexamples.is_empty() {
        s.push_str("symmetric stars all reverse to symmetric or perfect stars\n");
    } else {
        s.push_str(&format!(
            "!! {} SYMMETRIC STARS REVERSE TO ASYMMETRIC STARS:\n",
            r.symmetry_counterexamples.len()
        ));
        for c in &r.symmetry_counterexamples {
            s.push_str(&format!(
                "!!   {}->{} reverses to {}\n",
                c.first, c.second, c.reversed_class
            ));
        }
    }
    if !report.excluded_pairs.is_empty() {
        s.push_str(&format!(
            "{} pairs excluded by the path cap\n",
            report.excluded_pairs.len()
        ));
    }
    if let Some(a) = &report.autostars {
        s.push_str(&format!(
            "autostars: {} ({} asymmetric, {} symmetric, {} perfect) of {} examined; {} excluded\n",
            a.total(),
            a.asymmetric,
            a.symmetric,
            a.perfect,
            a.examined,
            a.excluded.len()
        ));
    }
    s
}

fn autostar_text(inv: &AutostarInventory) -> String {
    let mut s = format!(
        "{} autostars ({} asymmetric, {} symmetric, {} perfect) of {} examined; {} excluded at cap {}\n",
        inv.total(),
        inv.asymmetric,
        inv.symmetric,
        inv.perfect,
        inv.examined,
        inv.excluded.len(),
        inv.cap
    );
    for e in &inv.entries {
        s.push_str(&format!(
            "{}  {}  O_rot={} O_ref={}",
            e.word, e.class, e.o_rot, e.o_ref
        ));
        if !e.perfect_edge_lengths.is_empty() {
            let ls: Vec<String> = e.perfect_edge_lengths.iter().map(u32::to_string).collect();
            s.push_str(&format!("  L={}", ls.join(",")));
        }
        s.push('\n');
    }
    for x in &inv.excluded {
        match x.paths {
            Some(p) => s.push_str(&format!("excluded {} ({p} paths)\n", x.word)),
            None => s.push_str(&format!("excluded {} (path count overflows)\n", x.word)),
        }
    }
    s
}

fn autostar_csv(inv: &AutostarInventory) -> String {
    let mut s = String::from("word,class,o_rot,o_ref,perfect_edge_lengths\n");
    for e in &inv.entries {
        let ls: Vec<String> = e.perfect_edge_lengths.iter().map(u32::to_string).collect();
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            e.word,
            e.class,
            e.o_rot,
            e.o_ref,
            ls.join(" ")
        ));
    }
    s
}

fn emit(out: Option<&FsPath>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
