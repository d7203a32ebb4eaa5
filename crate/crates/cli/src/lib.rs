//! Command implementations behind the `vparity` binary.

pub mod corpus;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{Map, Value};
use vparity::colouring::{degenerate_components, require_colourable};
use vparity::invariants::{two_colour_writhe_enum, two_colour_writhe_fast_capped, DEFAULT_COMPONENT_CAP};
use vparity::moves::{fuzz_trial, AxiomReport, MoveClass, TrialReport, WalkConfig};
use vparity::random::random_diagram;
use vparity::search::{lk_zero_witness, LK_ZERO_WITNESS};
use vparity::{
    colourings, generating_set, parse, project, report_with, serialize, writhe, Error, GaussDiagram, J2Method,
    ReportOptions, TwoColouring, WritheProfile,
};

use corpus::{corpus_files, mismatches, read_entries, write_entries, CorpusEntry};

#[derive(Debug, Parser)]
#[command(name = "vparity", version, about = "2-colour parity invariants of virtual links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the invariant profile of one diagram.
    Invariants(InvariantsArgs),
    /// Count the 2-colourings and list the generating set with writhes.
    Colourings(InputArgs),
    /// Delete the odd chords under a colouring.
    Project {
        #[command(flatten)]
        input: InputArgs,
        /// Colouring as a bit string, one bit per component (default all 0).
        #[arg(long)]
        colouring: Option<String>,
    },
    /// Check the parity axioms and invariance along random move sequences.
    Fuzz(FuzzArgs),
    /// J², naive writhe and IP candidates side by side.
    Compare {
        /// Files holding one Gauss code each.
        paths: Vec<PathBuf>,
        /// Inline Gauss codes.
        #[arg(short, long = "code")]
        codes: Vec<String>,
    },
    /// Recompute every corpus entry and diff against its golden values.
    Census {
        dir: PathBuf,
        /// Rewrite the golden values from the enumeration oracle.
        #[arg(long)]
        bless: bool,
    },
    /// Search 2-component diagrams for zero linking number with nonzero J².
    Search {
        #[arg(long, default_value_t = 6)]
        max_chords: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// File holding one Gauss code, or `-` for standard input.
    #[arg(required_unless_present = "code", conflicts_with = "code")]
    pub path: Option<String>,
    /// Gauss code given inline.
    #[arg(short, long)]
    pub code: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub json: bool,
    /// Evaluate J² by enumerating the generating set.
    #[arg(long, conflicts_with = "check")]
    pub oracle: bool,
    /// Evaluate J² both ways and fail if they differ.
    #[arg(long)]
    pub check: bool,
    /// Largest component count for which J² is computed.
    #[arg(long, default_value_t = DEFAULT_COMPONENT_CAP, conflicts_with = "no_cap")]
    pub max_components: usize,
    #[arg(long)]
    pub no_cap: bool,
    /// Print only these fields (repeatable).
    #[arg(long = "field")]
    pub fields: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct FuzzArgs {
    /// Start every trial here instead of cycling through built-in diagrams.
    #[arg(short, long)]
    pub code: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 12)]
    pub max_chords: usize,
    /// Directory for failure witnesses.
    #[arg(long, default_value = "fuzz-witnesses")]
    pub out: PathBuf,
}

/// Exit status for an error: 2 for unparsable input, 3 for a colouring
/// request on a diagram with degenerate components, 1 otherwise.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Syntax { .. } | Error::Label { .. }) => 2,
        Some(Error::NotTwoColourable(_)) => 3,
        _ => 1,
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Invariants(args) => cmd_invariants(&args, out),
        Command::Colourings(input) => cmd_colourings(&read_diagram(&input)?, out),
        Command::Project { input, colouring } => cmd_project(&read_diagram(&input)?, colouring.as_deref(), out),
        Command::Fuzz(args) => cmd_fuzz(&args, out),
        Command::Compare { paths, codes } => cmd_compare(&paths, &codes, out),
        Command::Census { dir, bless } => cmd_census(&dir, bless, out),
        Command::Search { max_chords } => cmd_search(max_chords, out),
    }
}

fn read_diagram(input: &InputArgs) -> Result<GaussDiagram> {
    let text = match (&input.code, input.path.as_deref()) {
        (Some(code), _) => code.clone(),
        (None, Some("-")) => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
        (None, Some(path)) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        (None, None) => bail!("no input given"),
    };
    Ok(parse(&text)?)
}

fn profile_value(p: &WritheProfile) -> Value {
    serde_json::to_value(p).expect("profile serializes")
}

/// One `name: value` line per leaf, nested objects flattened with dots.
fn write_fields(out: &mut dyn Write, prefix: &str, v: &Map<String, Value>) -> io::Result<()> {
    for (k, val) in v {
        let name = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match val {
            Value::Object(m) => write_fields(out, &name, m)?,
            other => writeln!(out, "{name}: {other}")?,
        }
    }
    Ok(())
}

const COLOURING_FIELDS: [&str; 2] = ["j2", "j2_self"];

pub fn cmd_invariants(args: &InvariantsArgs, out: &mut dyn Write) -> Result<u8> {
    let d = read_diagram(&args.input)?;
    let cap = (!args.no_cap).then_some(args.max_components);
    let wants_j2 = args.check || args.fields.iter().any(|f| COLOURING_FIELDS.contains(&f.as_str()));
    if wants_j2 {
        require_colourable(&d)?;
    }
    let method = if args.oracle { J2Method::Oracle } else { J2Method::Fast };
    let profile = report_with(
        &d,
        ReportOptions {
            method,
            component_cap: cap,
        },
    );

    if args.check {
        let fast = two_colour_writhe_fast_capped(&d, cap)?;
        let slow = two_colour_writhe_enum(&d)?;
        if fast != slow {
            bail!("fast path {fast:?} disagrees with enumeration {slow:?}");
        }
    }
    if profile.two_colourable && profile.j2.is_none() {
        // only the cap can leave j2 empty on a colourable diagram
        let err = Error::TooManyComponents {
            components: profile.components,
            cap: args.max_components,
        };
        if args.fields.iter().any(|f| f == "j2") {
            return Err(err.into());
        }
        eprintln!("warning: {err}; j2 omitted (use --no-cap)");
    }

    let full = match profile_value(&profile) {
        Value::Object(m) => m,
        _ => unreachable!(),
    };
    let shown: Map<String, Value> = if args.fields.is_empty() {
        full
    } else {
        args.fields
            .iter()
            .map(|f| {
                full.get(f)
                    .map(|v| (f.clone(), v.clone()))
                    .ok_or_else(|| anyhow!("unknown field `{f}`"))
            })
            .collect::<Result<_>>()?
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(shown))?)?;
    } else {
        write_fields(out, "", &shown)?;
    }
    Ok(0)
}

pub fn cmd_colourings(d: &GaussDiagram, out: &mut dyn Write) -> Result<u8> {
    let all = colourings(d);
    writeln!(out, "count: {}", all.len())?;
    let bad = degenerate_components(d);
    if !bad.is_empty() {
        writeln!(out, "degenerate components: {bad:?}")?;
        return Ok(0);
    }
    writeln!(out, "generating set:")?;
    for c in generating_set(d.circles().len()).iter() {
        writeln!(out, "{c}\t{}", writhe(d, c)?)?;
    }
    Ok(0)
}

pub fn cmd_project(d: &GaussDiagram, colouring: Option<&str>, out: &mut dyn Write) -> Result<u8> {
    let c = match colouring {
        Some(s) => s.parse::<TwoColouring>()?,
        None => TwoColouring::base(d.circles().len()),
    };
    writeln!(out, "{}", serialize(&project(d, &c)?))?;
    Ok(0)
}

fn fuzz_starts(args: &FuzzArgs) -> Result<Vec<(GaussDiagram, u64)>> {
    let fixed = args.code.as_deref().map(parse).transpose()?;
    let named: Vec<GaussDiagram> = ["O1+ O2+ U1+ U2+", "O1+ U2+ / O2+ U1+", "_", "_ / _", LK_ZERO_WITNESS]
        .iter()
        .map(|s| parse(s).expect("built-in codes parse"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    Ok((0..args.trials)
        .map(|i| {
            let seed = args.seed.wrapping_add(i as u64);
            let d = match &fixed {
                Some(d) => d.clone(),
                None if i < named.len() => named[i].clone(),
                None => {
                    let (n, k) = (rng.gen_range(1..=3), rng.gen_range(0..=6));
                    random_diagram(&mut rng, n, k, true)
                }
            };
            (d, seed)
        })
        .collect())
}

fn witness_text(t: &TrialReport, max_chords: usize) -> String {
    let mut s = format!("# seed {}\n", t.seed);
    for v in [&t.two_colour.violation, &t.naive.violation].into_iter().flatten() {
        s += &format!("# {v}\n");
    }
    if let Some(d) = &t.drift {
        s += &format!("# {} changed at step {}: {}\n", d.field, d.step, d.diagram);
    }
    s += &format!(
        "# replay: vparity fuzz --code '{}' --seed {} --trials 1 --steps {} --max-chords {max_chords}\n",
        t.start,
        t.seed,
        t.moves.len()
    );
    s += &format!("start: {}\n", t.start);
    for m in &t.moves {
        s += &format!("{m}\n");
    }
    s
}

pub fn cmd_fuzz(args: &FuzzArgs, out: &mut dyn Write) -> Result<u8> {
    let starts = fuzz_starts(args)?;
    for (d, _) in &starts {
        require_colourable(d)?;
    }
    let reports: Vec<TrialReport> = starts
        .par_iter()
        .map(|(d, seed)| {
            fuzz_trial(
                d,
                &WalkConfig {
                    steps: args.steps,
                    seed: *seed,
                    max_chords: args.max_chords,
                },
            )
        })
        .collect::<vparity::Result<_>>()?;

    let mut total = AxiomReport::default();
    let (mut projections, mut degenerate) = (0, 0);
    let failed: Vec<(usize, &TrialReport)> = reports.iter().enumerate().filter(|(_, t)| !t.passed()).collect();
    for t in &reports {
        total.merge(&AxiomReport {
            violation: None,
            ..t.two_colour.clone()
        });
        projections += t.projections;
        degenerate += t.degenerate_projections;
    }
    writeln!(
        out,
        "trials {}  steps {}  passed {}  failed {}",
        reports.len(),
        args.steps,
        reports.len() - failed.len(),
        failed.len()
    )?;
    let count = |c| total.moves.get(&c).copied().unwrap_or(0);
    writeln!(
        out,
        "moves  R1+ {}  R1- {}  R2+ {}  R2- {}  R3 {}",
        count(MoveClass::R1Insert),
        count(MoveClass::R1Delete),
        count(MoveClass::R2Insert),
        count(MoveClass::R2Delete),
        count(MoveClass::R3)
    )?;
    let h = total.r3_odd_counts;
    writeln!(
        out,
        "R3 odd chords per colouring  0: {}  1: {}  2: {}  3: {}",
        h[0], h[1], h[2], h[3]
    )?;
    writeln!(out, "degenerate projections {degenerate}/{projections}")?;

    if !failed.is_empty() {
        fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
        for (i, t) in &failed {
            let path = args.out.join(format!("trial-{i:04}.txt"));
            fs::write(&path, witness_text(t, args.max_chords))?;
            writeln!(out, "FAIL trial {i}: witness written to {}", path.display())?;
        }
        return Ok(1);
    }
    Ok(0)
}

fn fmt_j2(j: &Option<Vec<i64>>) -> String {
    match j {
        Some(v) => format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
        None => "null".into(),
    }
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "null".into(), |x| x.to_string())
}

pub fn cmd_compare(paths: &[PathBuf], codes: &[String], out: &mut dyn Write) -> Result<u8> {
    let mut inputs: Vec<(String, String)> = Vec::new();
    for p in paths {
        inputs.push((
            p.display().to_string(),
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        ));
    }
    inputs.extend(codes.iter().map(|c| (c.clone(), c.clone())));
    writeln!(out, "input\tj2\tnaive\tip_candidates\tlk_zero")?;
    for (name, text) in inputs {
        let d = parse(&text)?;
        let r = report_with(&d, ReportOptions::default());
        let ip = r.ip_candidates.map(|[a, b]| format!("({a},{b})"));
        let lk_zero = r.lk.iter().flatten().all(|&x| x == 0);
        writeln!(
            out,
            "{name}\t{}\t{}\t{}\t{lk_zero}",
            fmt_j2(&r.j2),
            r.naive,
            fmt_opt(ip)
        )?;
    }
    Ok(0)
}

fn flag_names(p: &WritheProfile) -> String {
    let f = &p.flags;
    let mut v = Vec::new();
    if f.chequerboard_certified {
        v.push("chequerboard");
    }
    if f.slice_obstructed == Some(true) {
        v.push("slice");
    }
    if f.amphichiral_obstructed == Some(true) {
        v.push("amphichiral");
    }
    if f.cb_concordance_obstructed == Some(true) {
        v.push("cb_concordance");
    }
    if f.compatible {
        v.push("compatible");
    }
    if v.is_empty() {
        "-".into()
    } else {
        v.join(",")
    }
}

enum Row {
    Ok(WritheProfile),
    Mismatch(WritheProfile, Vec<String>),
    Error(String),
}

fn census_row(entry: &CorpusEntry) -> Row {
    let d = match parse(&entry.gauss_code) {
        Ok(d) => d,
        Err(e) => return Row::Error(e.to_string()),
    };
    let p = report_with(&d, ReportOptions::default());
    match &entry.expected {
        Some(exp) => {
            let diff = mismatches(exp, &profile_value(&p));
            if diff.is_empty() {
                Row::Ok(p)
            } else {
                Row::Mismatch(p, diff)
            }
        }
        None => Row::Ok(p),
    }
}

fn bless(path: &Path) -> Result<usize> {
    let mut entries = read_entries(path)?;
    for e in &mut entries {
        let d = parse(&e.gauss_code).with_context(|| format!("{}: {}", path.display(), e.name))?;
        let p = report_with(
            &d,
            ReportOptions {
                method: J2Method::Oracle,
                component_cap: None,
            },
        );
        e.expected = Some(profile_value(&p));
    }
    write_entries(path, &entries)?;
    Ok(entries.len())
}

pub fn cmd_census(dir: &Path, bless_goldens: bool, out: &mut dyn Write) -> Result<u8> {
    let files = corpus_files(dir)?;
    if bless_goldens {
        for f in &files {
            let n = bless(f)?;
            writeln!(out, "blessed {n} entries in {}", f.display())?;
        }
    }
    let mut entries = Vec::new();
    for f in &files {
        entries.extend(read_entries(f)?);
    }
    let rows: Vec<Row> = entries.par_iter().map(census_row).collect();

    writeln!(out, "name\tn\tchords\tj2\tj2_self\tnaive\tip_self\tflags\tstatus")?;
    let mut bad = 0;
    for (e, row) in entries.iter().zip(&rows) {
        let (p, status) = match row {
            Row::Ok(p) => (Some(p), "ok".to_string()),
            Row::Mismatch(p, fields) => {
                bad += 1;
                eprintln!("mismatch in {}: {}", e.name, fields.join(", "));
                (Some(p), format!("MISMATCH {}", fields.join(",")))
            }
            Row::Error(msg) => {
                bad += 1;
                eprintln!("error in {}: {msg}", e.name);
                (None, format!("ERROR {msg}"))
            }
        };
        match p {
            Some(p) => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{status}",
                e.name,
                p.components,
                p.chords,
                fmt_j2(&p.j2),
                fmt_opt(p.j2_self),
                p.naive,
                fmt_opt(p.ip_self),
                flag_names(p)
            )?,
            None => writeln!(out, "{}\t-\t-\t-\t-\t-\t-\t-\t{status}", e.name)?,
        }
    }
    writeln!(
        out,
        "# {} entries, {} ok, {bad} failing",
        entries.len(),
        entries.len() - bad
    )?;
    Ok(if bad == 0 { 0 } else { 1 })
}

pub fn cmd_search(max_chords: usize, out: &mut dyn Write) -> Result<u8> {
    match lk_zero_witness(max_chords) {
        Some(o) => {
            writeln!(out, "witness: {}", serialize(&o.witness))?;
            writeln!(out, "j2: {}", fmt_j2(&Some(o.j2.clone())))?;
            writeln!(out, "examined: {}", o.examined)?;
            Ok(0)
        }
        None => {
            writeln!(out, "no witness with at most {max_chords} chords")?;
            Ok(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<u8>, String) {
        let cli = Cli::try_parse_from(std::iter::once("vparity").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn colourings_examples() {
        let (r, s) = run_args(&["colourings", "-c", "O1+ U2+ / O2+ U1+"]);
        assert_eq!(r.unwrap(), 0);
        assert_eq!(s, "count: 4\ngenerating set:\n00\t0\n01\t2\n");
        let (_, s) = run_args(&["colourings", "-c", "O1+ / U1+"]);
        assert!(s.starts_with("count: 0\n"));
        let (_, s) = run_args(&["colourings", "-c", "_"]);
        assert_eq!(s, "count: 2\ngenerating set:\n0\t0\n");
    }

    #[test]
    fn exit_codes() {
        let (r, _) = run_args(&["invariants", "-c", "O1+ O2+"]);
        assert_eq!(exit_code(&r.unwrap_err()), 2);
        let (r, _) = run_args(&["invariants", "-c", "O1+ / U1+", "--field", "j2"]);
        assert_eq!(exit_code(&r.unwrap_err()), 3);
        let (r, s) = run_args(&["invariants", "-c", "O1+ / U1+"]);
        assert_eq!(r.unwrap(), 0);
        assert!(s.contains("two_colourable: false"));
        assert!(s.contains("naive: 1"));
    }

    #[test]
    fn project_trefoil() {
        let (_, s) = run_args(&["project", "-c", "O1+ O2+ U1+ U2+", "--colouring", "1"]);
        assert_eq!(s, "_\n");
    }
}
