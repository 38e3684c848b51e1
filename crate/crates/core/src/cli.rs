//! Command-line front end. [`run`] takes the argument list and output
//! streams and returns the process exit code.
//!
//! Exit codes: 0 pass, 1 fail, 2 invalid input, 3 checker disagreement.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::artin::{
    check_four_cycles_not_misdirected, check_three_cycles_directed, dual_table, dual_weights, grading_check,
    OrientedLabeledGraph,
};
use crate::conditions::{
    check_systolic_conditions_with, CheckOptions, Reading, CONDITION_VARIABLES, DEFAULT_WITNESS_CAP,
};
use crate::corpus::{corpus, corpus_entry};
use crate::cycles::check_six_large_with_cap;
use crate::free::counterexample_realization;
use crate::garside::{check_gcd_condition, classify_garside, garside_weights, AmalgamSpec, GarsideTable};
use crate::link::build_link;
use crate::order_conditions::check_conditions_via_orders_with;
use crate::table::{ProductTable, Side};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

pub const WITNESS_CAP_ENV: &str = "SYSPRES_WITNESS_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "syspres",
    version,
    about = "Systolicity checks for triangular presentations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, clap::Args)]
struct CheckFlags {
    /// List witnesses of failing conditions.
    #[arg(long)]
    witnesses: bool,
    /// Also decide 6-largeness of the link and compare verdicts.
    #[arg(long)]
    link_oracle: bool,
    /// Also run the divisibility-order checker and compare verdicts.
    #[arg(long)]
    order_checker: bool,
    /// Evaluate the conclusions exactly as written instead of by diagonals.
    #[arg(long)]
    literal: bool,
    /// Worker threads for the condition searches.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a table file and decide the five conditions.
    Check {
        file: PathBuf,
        #[command(flatten)]
        flags: CheckFlags,
        /// Write the link of the identity as text.
        #[arg(long, value_name = "FILE")]
        emit_link: Option<PathBuf>,
        /// Write the link as a graphviz digraph.
        #[arg(long, value_name = "FILE")]
        emit_dot: Option<PathBuf>,
    },
    /// Generate the Garside table of an amalgam spec such as "2x3" or "1x2;1x3".
    Garside {
        spec: String,
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
        /// Run validation, the gcd test, the conditions and the link oracle.
        #[arg(long)]
        check: bool,
        /// Classify the generated table and compare with the spec.
        #[arg(long)]
        classify_roundtrip: bool,
        #[arg(long)]
        witnesses: bool,
    },
    /// Build the dual presentation of an oriented labelled Artin graph.
    Artin {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        emit_dual: Option<PathBuf>,
        /// Check the dual table (conditions and link oracle).
        #[arg(long)]
        check: bool,
        #[arg(long)]
        witnesses: bool,
    },
    /// Recover the amalgam spec of a Garside table.
    Classify { file: PathBuf },
    /// The five free-group counterexamples.
    Counterexamples {
        /// Run the word checks and the condition checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        index: Option<u8>,
    },
    /// Built-in examples.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
}

/// Collects human-readable lines and `KEY=VALUE` pairs.
#[derive(Default)]
struct Report {
    text: String,
    machine: Vec<(String, String)>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn kv(&mut self, k: impl Into<String>, v: impl ToString) {
        self.machine.push((k.into(), v.to_string()));
    }

    fn render(&self) -> String {
        let mut out = self.text.clone();
        if !self.machine.is_empty() {
            out.push_str("[machine]\n");
            for (k, v) in &self.machine {
                let _ = writeln!(out, "{k}={v}");
            }
        }
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

/// Something went wrong before a verdict could be reached.
struct Invalid(String);

fn witness_cap() -> Result<usize, Invalid> {
    match std::env::var(WITNESS_CAP_ENV) {
        Err(_) => Ok(DEFAULT_WITNESS_CAP),
        Ok(v) => v.trim().parse().map_err(|_| {
            Invalid(format!(
                "{WITNESS_CAP_ENV} must be a nonnegative integer, got {v:?}"
            ))
        }),
    }
}

fn read(path: &Path) -> Result<String, Invalid> {
    std::fs::read_to_string(path).map_err(|e| Invalid(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Invalid> {
    std::fs::write(path, contents).map_err(|e| Invalid(format!("{}: {e}", path.display())))
}

fn load_table(path: &Path) -> Result<ProductTable, Invalid> {
    let text = read(path)?;
    let table = ProductTable::parse(&text).map_err(|e| Invalid(format!("{}: {e}", path.display())))?;
    ensure_valid(&table)?;
    Ok(table)
}

fn ensure_valid(table: &ProductTable) -> Result<(), Invalid> {
    let report = table.validate();
    if report.is_valid() {
        return Ok(());
    }
    let mut msg = format!(
        "table is not restricted triangular ({} violations)",
        report.violations.len()
    );
    for v in &report.violations {
        let _ = write!(msg, "\n  {}", table.describe_violation(v));
    }
    Err(Invalid(msg))
}

/// Condition verdicts plus optional oracles. Returns the exit code.
fn check_table(table: &ProductTable, flags: &CheckFlags, rep: &mut Report) -> Result<i32, Invalid> {
    let opts = CheckOptions {
        witness_cap: witness_cap()?,
        reading: if flags.literal {
            Reading::Literal
        } else {
            Reading::Diagonal
        },
        jobs: flags.jobs.max(1),
    };
    rep.line(format!("generators: {}", table.len()));
    rep.line(format!("products: {}", table.num_products()));
    rep.kv("GENERATORS", table.len());
    rep.kv("PRODUCTS", table.num_products());
    rep.kv("READING", if flags.literal { "literal" } else { "diagonal" });

    let conds = check_systolic_conditions_with(table, &opts);
    for o in &conds.outcomes {
        let mut line = format!("condition {}: {}", o.condition, verdict(o.passed()));
        if !o.passed() {
            let _ = write!(
                line,
                " ({} witnesses{})",
                o.total,
                if o.truncated { ", truncated" } else { "" }
            );
        }
        rep.line(line);
        rep.kv(format!("CONDITION_{}", o.condition), verdict(o.passed()));
        rep.kv(format!("CONDITION_{}_WITNESSES", o.condition), o.total);
        if flags.witnesses {
            for w in &o.witnesses {
                let vars = CONDITION_VARIABLES[usize::from(o.condition) - 1];
                let parts: Vec<String> = vars
                    .iter()
                    .zip(w)
                    .map(|(v, &g)| format!("{v}={}", table.name(g)))
                    .collect();
                rep.line(format!("  witness: {}", parts.join(" ")));
            }
        }
    }
    let overall = conds.overall();
    let mut mismatch = false;

    if flags.link_oracle {
        let link = build_link(table);
        let six = check_six_large_with_cap(&link, opts.witness_cap);
        rep.line(format!(
            "link: vertices={} edges={} 4-cycles={} 5-cycles={} diagonal-free={}",
            link.num_vertices(),
            link.edges().len(),
            six.four_cycles,
            six.five_cycles,
            six.total_diagonal_free
        ));
        if flags.witnesses {
            for c in &six.diagonal_free {
                rep.line(format!("  diagonal-free cycle: {}", c.display(&link)));
            }
        }
        let agree = six.passed() == overall;
        rep.line(format!(
            "link oracle: {}{}",
            verdict(six.passed()),
            if agree { "" } else { " MISMATCH" }
        ));
        rep.kv("LINK_VERTICES", link.num_vertices());
        rep.kv("LINK_EDGES", link.edges().len());
        rep.kv("LINK_4_CYCLES", six.four_cycles);
        rep.kv("LINK_5_CYCLES", six.five_cycles);
        rep.kv("LINK_DIAGONAL_FREE", six.total_diagonal_free);
        rep.kv("LINK_ORACLE", verdict(six.passed()));
        mismatch |= !agree;
    }
    if flags.order_checker {
        match check_conditions_via_orders_with(table, &opts) {
            Ok(r) => {
                let agree = r.overall() == overall;
                let failing: Vec<String> = r.failing().iter().map(u8::to_string).collect();
                rep.line(format!(
                    "order checker: {}{}{}",
                    verdict(r.overall()),
                    if failing.is_empty() {
                        String::new()
                    } else {
                        format!(" (fails {})", failing.join(","))
                    },
                    if agree { "" } else { " MISMATCH" }
                ));
                if r.verdicts() != conds.verdicts() {
                    rep.line("  note: per-condition verdicts differ from the direct checker");
                }
                rep.kv("ORDER_CHECKER", verdict(r.overall()));
                mismatch |= !agree;
            }
            Err(e) => {
                rep.line(format!("order checker: {e} MISMATCH"));
                rep.kv("ORDER_CHECKER", "ERROR");
                mismatch = true;
            }
        }
    }
    rep.line(format!("overall: {}", verdict(overall)));
    rep.kv("OVERALL", verdict(overall));
    Ok(if mismatch {
        EXIT_MISMATCH
    } else if overall {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn cmd_check(
    file: &Path,
    flags: &CheckFlags,
    emit_link: Option<&Path>,
    emit_dot: Option<&Path>,
    rep: &mut Report,
) -> Result<i32, Invalid> {
    let table = load_table(file)?;
    if emit_link.is_some() || emit_dot.is_some() {
        let link = build_link(&table);
        if let Some(p) = emit_link {
            write_file(p, &link.to_text())?;
        }
        if let Some(p) = emit_dot {
            write_file(p, &link.to_dot())?;
        }
    }
    rep.line(format!("table: {}", file.display()));
    check_table(&table, flags, rep)
}

fn full_flags(witnesses: bool) -> CheckFlags {
    CheckFlags {
        witnesses,
        link_oracle: true,
        order_checker: true,
        literal: false,
        jobs: 1,
    }
}

fn cmd_garside(
    spec: &str,
    emit: Option<&Path>,
    check: bool,
    roundtrip: bool,
    witnesses: bool,
    rep: &mut Report,
) -> Result<i32, Invalid> {
    let spec: AmalgamSpec = spec.parse().map_err(|e| Invalid(format!("spec {spec:?}: {e}")))?;
    let g = GarsideTable::new(&spec);
    rep.line(format!("spec: {}", g.spec));
    rep.kv("SPEC", &g.spec);
    if let Some(p) = emit {
        write_file(p, &g.table.to_text())?;
    }
    let mut code = EXIT_PASS;
    if check {
        ensure_valid(&g.table)?;
        let graded = grading_check(&g.table, &garside_weights(&g.spec)).unwrap_or(false);
        rep.line(format!("grading: {}", verdict(graded)));
        let gcd = check_gcd_condition(&g.table).map_err(|e| Invalid(e.to_string()))?;
        rep.line(format!("gcd condition: {}", verdict(gcd.passed())));
        rep.kv("GCD", verdict(gcd.passed()));
        if witnesses {
            for w in &gcd.witnesses {
                rep.line(format!(
                    "  witness: {} meet of {} and {} is {}",
                    side_name(w.side),
                    g.table.name(w.s),
                    g.table.name(w.t),
                    g.table.elem_name(w.meet)
                ));
            }
        }
        code = check_table(&g.table, &full_flags(witnesses), rep)?;
        let systolic = code == EXIT_PASS;
        if !graded || (code != EXIT_MISMATCH && gcd.passed() != systolic) {
            rep.line("gcd condition and systolicity disagree MISMATCH");
            code = EXIT_MISMATCH;
        }
    }
    if roundtrip {
        let ok = match classify_garside(&g.table) {
            Ok(s) => {
                rep.line(format!("classified: {s}"));
                s == g.spec
            }
            Err(e) => {
                rep.line(format!("classified: error: {e}"));
                false
            }
        };
        rep.line(format!("round trip: {}", verdict(ok)));
        rep.kv("ROUNDTRIP", verdict(ok));
        if !ok {
            code = EXIT_MISMATCH;
        }
    }
    Ok(code)
}

fn cmd_artin(
    file: &Path,
    emit_dual: Option<&Path>,
    check: bool,
    witnesses: bool,
    rep: &mut Report,
) -> Result<i32, Invalid> {
    let text = read(file)?;
    let graph =
        OrientedLabeledGraph::parse(&text).map_err(|e| Invalid(format!("{}: {e}", file.display())))?;
    rep.line(format!("graph: {}", file.display()));
    rep.line(format!("vertices: {}", graph.vertices().len()));
    rep.line(format!("edges: {}", graph.edges().len()));
    let bad_triangles = check_three_cycles_directed(&graph);
    rep.line(format!(
        "3-cycles directed: {}",
        verdict(bad_triangles.is_empty())
    ));
    rep.kv("THREE_CYCLES_DIRECTED", verdict(bad_triangles.is_empty()));
    let misdirected = check_four_cycles_not_misdirected(&graph);
    rep.line(format!(
        "4-cycles not misdirected: {}",
        verdict(misdirected.is_empty())
    ));
    rep.kv("FOUR_CYCLES_NOT_MISDIRECTED", verdict(misdirected.is_empty()));
    let dual = dual_table(&graph).map_err(|e| Invalid(e.to_string()))?;
    for w in &dual.warnings {
        rep.line(format!("warning: {w}"));
    }
    let graded = grading_check(&dual.table, &dual_weights(&graph)).unwrap_or(false);
    rep.line(format!("grading: {}", verdict(graded)));
    if let Some(p) = emit_dual {
        write_file(p, &dual.table.to_text())?;
    }
    let mut code = if graded { EXIT_PASS } else { EXIT_MISMATCH };
    if check {
        ensure_valid(&dual.table)?;
        let c = check_table(&dual.table, &full_flags(witnesses), rep)?;
        code = code.max(c);
    }
    Ok(code)
}

fn cmd_classify(file: &Path, rep: &mut Report) -> Result<i32, Invalid> {
    let table = load_table(file)?;
    let gcd = check_gcd_condition(&table);
    match gcd {
        Ok(r) if r.passed() => {}
        Ok(r) => {
            let w = r.witnesses[0];
            rep.line(format!(
                "not systolic Garside: {} meet of {} and {} is {}",
                side_name(w.side),
                table.name(w.s),
                table.name(w.t),
                table.elem_name(w.meet)
            ));
            rep.kv("CLASSIFY", "FAIL");
            return Ok(EXIT_FAIL);
        }
        Err(e) => {
            rep.line(format!("not systolic Garside: {e}"));
            rep.kv("CLASSIFY", "FAIL");
            return Ok(EXIT_FAIL);
        }
    }
    match classify_garside(&table) {
        Ok(spec) => {
            rep.line(format!("spec: {spec}"));
            rep.kv("CLASSIFY", "PASS");
            rep.kv("SPEC", spec);
            Ok(EXIT_PASS)
        }
        Err(e) => {
            rep.line(format!("not systolic Garside: {e}"));
            rep.kv("CLASSIFY", "FAIL");
            Ok(EXIT_FAIL)
        }
    }
}

fn cmd_counterexamples(verify: bool, index: Option<u8>, rep: &mut Report) -> i32 {
    let indices: Vec<u8> = index.map_or((1..=5).collect(), |i| vec![i]);
    let mut all = true;
    for i in indices {
        let c = counterexample_realization(i);
        let rels: Vec<String> = c.triples.iter().map(|(p, q, r)| format!("{p}{q}={r}")).collect();
        let images: Vec<String> = c
            .symbols
            .iter()
            .filter(|s| !c.realization.basis.contains(s))
            .map(|s| format!("{s}={}", c.realization.image(*s)))
            .collect();
        rep.line(format!(
            "R{i}: relations {}; free on {}; {}",
            rels.join(" "),
            c.realization.basis.iter().collect::<String>(),
            images.join(" ")
        ));
        if !verify {
            continue;
        }
        let v = c.verify();
        let words = match v.first_failure {
            None => format!("PASS ({} triples)", v.triples_checked),
            Some(((a, b, g), f)) => format!("FAIL at ({a},{b},{g}): {f:?}"),
        };
        let failing = check_systolic_conditions_with(&c.table(), &CheckOptions::default()).failing();
        let ok = v.passed() && failing == vec![i];
        all &= ok;
        let failing: Vec<String> = failing.iter().map(u8::to_string).collect();
        rep.line(format!(
            "R{i}: words {words}; fails condition {}; {}",
            if failing.is_empty() {
                "none".into()
            } else {
                failing.join(",")
            },
            verdict(ok)
        ));
        rep.kv(format!("R{i}"), verdict(ok));
    }
    if all {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_corpus(action: &CorpusAction, rep: &mut Report) -> Result<i32, Invalid> {
    match action {
        CorpusAction::List => {
            for e in corpus() {
                rep.line(format!("{:<28} {:<8} {}", e.name, e.item.kind(), e.description));
            }
        }
        CorpusAction::Show { name } => {
            let e = corpus_entry(name).ok_or_else(|| Invalid(format!("no corpus entry {name:?}")))?;
            rep.text.push_str(&e.item.to_text());
        }
    }
    Ok(EXIT_PASS)
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut rep = Report::default();
    let result = match &cli.command {
        Command::Check {
            file,
            flags,
            emit_link,
            emit_dot,
        } => cmd_check(file, flags, emit_link.as_deref(), emit_dot.as_deref(), &mut rep),
        Command::Garside {
            spec,
            emit,
            check,
            classify_roundtrip,
            witnesses,
        } => cmd_garside(
            spec,
            emit.as_deref(),
            *check,
            *classify_roundtrip,
            *witnesses,
            &mut rep,
        ),
        Command::Artin {
            file,
            emit_dual,
            check,
            witnesses,
        } => cmd_artin(file, emit_dual.as_deref(), *check, *witnesses, &mut rep),
        Command::Classify { file } => cmd_classify(file, &mut rep),
        Command::Counterexamples { verify, index } => Ok(cmd_counterexamples(*verify, *index, &mut rep)),
        Command::Corpus { action } => cmd_corpus(action, &mut rep),
    };
    let _ = out.write_all(rep.render().as_bytes());
    match result {
        Ok(code) => code,
        Err(Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}
