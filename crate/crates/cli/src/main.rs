//! `orbits`: command-line front end for the partition calculus and the
//! exceptional-table verifier.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use orbits_core::exceptional::{calibrate, load_table, table, verify_table, TABLE_SCHEMA_VERSION};
use orbits_core::partitions::{enumerate_classical, is_classical};
use orbits_core::raising::{raisable_indices, raise_chain};
use orbits_core::special::{is_special, metaplectic_expansion_recipe, special_expansion};
use orbits_core::suites::{run_suites, SuiteBounds, SuiteReport, PROPERTY_SUITES, TABLE_SUITES};
use orbits_core::{
    ExceptionalGroup, ExceptionalOrbitRecord, GroupFlavor, OrbitError, Partition, SpecialFlavor,
    WFlavor,
};

const SCHEMA_VERSION: u32 = 1;
const TABLE_ENV: &str = "ORBITS_TABLE_PATH";

#[derive(Parser)]
#[command(name = "orbits", version, about = "Nilpotent orbit partition calculus and table verifier")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scope {
    Tables,
    Properties,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Classical validity, specialness and raisable slots of a partition.
    Classify {
        /// Form flavor: sp or o.
        #[arg(long)]
        flavor: WFlavor,
        #[arg(short, long, allow_hyphen_values = true)]
        partition: Partition,
    },
    /// Special expansion of a partition.
    Expand {
        /// symplectic, metaplectic or orthogonal.
        #[arg(long)]
        flavor: SpecialFlavor,
        #[arg(short, long, allow_hyphen_values = true)]
        partition: Partition,
        /// Use the closed-form metaplectic recipe instead of the search.
        #[arg(long)]
        recipe: bool,
    },
    /// Raises at the smallest raisable slot until the partition is special.
    RaiseChain {
        /// sp, metaplectic-sp or o.
        #[arg(long)]
        group: GroupFlavor,
        #[arg(short, long, allow_hyphen_values = true)]
        partition: Partition,
        /// Check the terminal against the special expansion.
        #[arg(long)]
        verify: bool,
    },
    /// Recomputes the exceptional tables and runs the property suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Restrict table checks to one group.
        #[arg(long)]
        group: Option<ExceptionalGroup>,
        /// Cap the partition totals swept by the property suites.
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Lists the classical partitions of `n`.
    Enumerate {
        /// sp or o.
        #[arg(long)]
        flavor: WFlavor,
        #[arg(long)]
        n: u32,
        /// Keep special partitions only (symplectic-special for sp).
        #[arg(long)]
        special_only: bool,
        /// Specialness to filter by; implies --special-only.
        #[arg(long)]
        special: Option<SpecialFlavor>,
        /// Print only the number of partitions.
        #[arg(long)]
        count: bool,
    },
    /// Prints the active exceptional table as JSON.
    Table,
}

/// Failure before any verdict: bad input or unreadable data.
struct UsageError(String);

impl From<OrbitError> for UsageError {
    fn from(e: OrbitError) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<(Value, String, bool), UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((mut doc, text, ok)) => {
            match cli.format {
                Format::Json => {
                    doc["schema_version"] = SCHEMA_VERSION.into();
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
                Format::Text => print!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            if cli.format == Format::Json {
                println!("{}", json!({ "schema_version": SCHEMA_VERSION, "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Classify { flavor, partition } => classify(flavor, &partition),
        Command::Expand { flavor, partition, recipe } => expand(flavor, &partition, recipe),
        Command::RaiseChain { group, partition, verify } => chain(group, &partition, verify),
        Command::Verify { scope, group, max_n } => verify(scope, group, max_n),
        Command::Enumerate { flavor, n, special_only, special, count } => {
            let filter = match (special, special_only) {
                (Some(f), _) => Some(f),
                (None, true) => Some(match flavor {
                    WFlavor::SymplecticW => SpecialFlavor::SymplecticSpecial,
                    WFlavor::OrthogonalW => SpecialFlavor::OrthogonalSpecial,
                }),
                (None, false) => None,
            };
            enumerate(flavor, n, filter, count)
        }
        Command::Table => {
            let rows = active_table()?;
            let doc = json!({ "schema_version": TABLE_SCHEMA_VERSION, "records": rows });
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            Ok((doc, text, true))
        }
    }
}

/// Text form of a partition; the empty partition prints as `[]`.
fn show(p: &Partition) -> String {
    if p.is_empty() {
        "[]".into()
    } else {
        p.to_string()
    }
}

fn show_list(v: &[u32]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

fn specials_for(flavor: WFlavor) -> &'static [SpecialFlavor] {
    match flavor {
        WFlavor::SymplecticW => &[SpecialFlavor::SymplecticSpecial, SpecialFlavor::MetaplecticSpecial],
        WFlavor::OrthogonalW => &[SpecialFlavor::OrthogonalSpecial],
    }
}

fn groups_for(flavor: WFlavor) -> Vec<GroupFlavor> {
    GroupFlavor::ALL.into_iter().filter(|g| g.w_flavor() == flavor).collect()
}

fn classify(flavor: WFlavor, p: &Partition) -> CmdResult {
    let classical = is_classical(flavor, p);
    let mut text = format!("partition: {}\n{}: {classical}\n", show(p), flavor.name());
    let mut doc = json!({
        "command": "classify",
        "partition": p,
        "flavor": flavor,
        "classical": classical,
    });
    if classical {
        let mut special = serde_json::Map::new();
        for &f in specials_for(flavor) {
            let s = is_special(f, p)?;
            text += &format!("{}: {s}\n", f.name());
            special.insert(f.name().into(), s.into());
        }
        let mut raisable = serde_json::Map::new();
        for g in groups_for(flavor) {
            let idx = raisable_indices(g, p)?;
            text += &format!("raisable ({}): {}\n", g.name(), show_list(&idx));
            raisable.insert(g.name().into(), json!(idx));
        }
        doc["special"] = special.into();
        doc["raisable"] = raisable.into();
    }
    Ok((doc, text, true))
}

fn expand(flavor: SpecialFlavor, p: &Partition, recipe: bool) -> CmdResult {
    if recipe && flavor != SpecialFlavor::MetaplecticSpecial {
        return Err(UsageError("--recipe applies to the metaplectic flavor only".into()));
    }
    let e = if recipe {
        metaplectic_expansion_recipe(p)?
    } else {
        special_expansion(flavor, p)?
    };
    let method = if recipe { "recipe" } else { "search" };
    let doc = json!({
        "command": "expand",
        "flavor": flavor.name(),
        "method": method,
        "input": p,
        "expansion": &e,
    });
    Ok((doc, format!("{}\n", show(&e)), true))
}

fn chain(group: GroupFlavor, p: &Partition, verify: bool) -> CmdResult {
    if !is_classical(group.w_flavor(), p) {
        return Err(OrbitError::NotClassical {
            flavor: group.w_flavor().name().into(),
            partition: p.to_string(),
        }
        .into());
    }
    let c = raise_chain(group, p)?;
    let mut text = format!("input: {}\n", show(&c.input));
    if c.steps.is_empty() {
        text += "no raisable slot\n";
    }
    for (k, s) in c.steps.iter().enumerate() {
        text += &format!("step {}: raise at {} -> {}\n", k + 1, s.index, show(&s.partition));
    }
    text += &format!("terminal: {}\n", show(&c.terminal));
    let mut doc = json!({ "command": "raise-chain", "chain": &c });
    let mut ok = true;
    if verify {
        let e = special_expansion(group.special_flavor(), p)?;
        ok = e == c.terminal;
        text += &format!(
            "expansion: {}\n{}\n",
            show(&e),
            if ok { "PASS terminal matches the expansion" } else { "FAIL terminal differs from the expansion" }
        );
        doc["expansion"] = json!(e);
        doc["verified"] = ok.into();
    }
    Ok((doc, text, ok))
}

fn enumerate(flavor: WFlavor, n: u32, filter: Option<SpecialFlavor>, count: bool) -> CmdResult {
    if let Some(f) = filter {
        if f.w_flavor() != flavor {
            return Err(UsageError(format!("{} does not apply to {} partitions", f.name(), flavor.name())));
        }
    }
    let mut ps = Vec::new();
    for p in enumerate_classical(flavor, n)? {
        if let Some(f) = filter {
            if !is_special(f, &p)? {
                continue;
            }
        }
        ps.push(p);
    }
    let mut doc = json!({
        "command": "enumerate",
        "flavor": flavor,
        "n": n,
        "special": filter.map(|f| f.name()),
        "count": ps.len(),
    });
    let text = if count {
        format!("{}\n", ps.len())
    } else {
        doc["partitions"] = json!(ps);
        ps.iter().map(|p| show(p) + "\n").collect()
    };
    Ok((doc, text, true))
}

fn active_table() -> Result<Vec<ExceptionalOrbitRecord>, UsageError> {
    match std::env::var_os(TABLE_ENV) {
        Some(path) => {
            let body = std::fs::read_to_string(&path)
                .map_err(|e| UsageError(format!("{TABLE_ENV}={}: {e}", path.to_string_lossy())))?;
            Ok(load_table(&body)?)
        }
        None => Ok(table().to_vec()),
    }
}

#[derive(Serialize)]
struct RowLine {
    group: ExceptionalGroup,
    label: String,
    passed: bool,
    expected: String,
    recomputed: Option<String>,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct GroupSummary {
    group: ExceptionalGroup,
    passed: usize,
    rows: usize,
    calibrated: bool,
}

fn suite_line(r: &SuiteReport) -> String {
    let mut s = format!(
        "{} suite {:<22} checked {:>7}, failed {}, {:.3}s\n",
        if r.passed() { "PASS" } else { "FAIL" },
        r.name,
        r.checked,
        r.failed,
        r.elapsed.as_secs_f64()
    );
    if let Some(w) = r.witnesses.first() {
        s += &format!("     witness: {w}\n");
    }
    s
}

fn verify(scope: Scope, group: Option<ExceptionalGroup>, max_n: Option<u32>) -> CmdResult {
    let mut text = String::new();
    let mut doc = json!({ "command": "verify" });
    let mut first_failure: Option<String> = None;
    let mut note = |w: String| {
        if first_failure.is_none() {
            first_failure = Some(w);
        }
    };

    if scope != Scope::Properties {
        let all = active_table()?;
        let rows: Vec<ExceptionalOrbitRecord> = all
            .iter()
            .filter(|r| group.is_none_or(|g| r.group == g))
            .cloned()
            .collect();
        if rows.is_empty() {
            return Err(UsageError("no table rows selected".into()));
        }
        let mut lines = Vec::new();
        for rep in verify_table(&rows) {
            let passed = rep.passed();
            let shown = rep.recomputed.map(|c| c.mark()).unwrap_or_else(|| "?".into());
            text += &format!("{} {} {:<12} {}\n", if passed { "PASS" } else { "FAIL" }, rep.group, rep.label, shown);
            if let Some(f) = rep.failures.first() {
                text += &format!("     {f}\n");
                note(format!("{} {}: {f}", rep.group, rep.label));
            }
            lines.push(RowLine {
                group: rep.group,
                label: rep.label,
                passed,
                expected: rep.expected.mark(),
                recomputed: rep.recomputed.map(|c| c.mark()),
                failures: rep.failures,
            });
        }

        let calibration = calibrate(&rows);
        let mut summaries = Vec::new();
        for g in ExceptionalGroup::ALL {
            let of_g: Vec<&RowLine> = lines.iter().filter(|l| l.group == g).collect();
            if of_g.is_empty() {
                continue;
            }
            let full: Vec<_> = calibration.iter().filter(|c| c.group == g && c.matches_all()).collect();
            let calibrated = full.len() == 1 && full[0].builtin;
            if !calibrated {
                let names: Vec<&str> = full.iter().map(|c| c.candidate.as_str()).collect();
                note(format!("{g}: node orders matching every row: {names:?}"));
            }
            let passed = of_g.iter().filter(|l| l.passed).count();
            text += &format!(
                "{g}: {passed}/{} rows pass, node order {}\n",
                of_g.len(),
                if calibrated { "calibrated" } else { "NOT calibrated" }
            );
            summaries.push(GroupSummary { group: g, passed, rows: of_g.len(), calibrated });
        }
        doc["rows"] = json!(lines);
        doc["groups"] = json!(summaries);

        // The table suites compare against the complete printed tables.
        if group.is_none() {
            let reports = run_suites(TABLE_SUITES, &SuiteBounds::default(), &all);
            for r in &reports {
                text += &suite_line(r);
                if let Some(w) = r.witnesses.first().filter(|_| !r.passed()) {
                    note(format!("{}: {w}", r.name));
                }
            }
            doc["table_suites"] = json!(reports);
        }
    }

    if scope != Scope::Tables {
        let bounds = max_n.map_or_else(SuiteBounds::default, SuiteBounds::capped);
        let reports = run_suites(PROPERTY_SUITES, &bounds, &[]);
        for r in &reports {
            text += &suite_line(r);
            if let Some(w) = r.witnesses.first().filter(|_| !r.passed()) {
                note(format!("{}: {w}", r.name));
            }
        }
        doc["property_suites"] = json!(reports);
    }

    let ok = first_failure.is_none();
    match &first_failure {
        None => text += "all checks pass\n",
        Some(w) => text += &format!("first failure: {w}\n"),
    }
    doc["passed"] = ok.into();
    doc["first_failure"] = json!(first_failure);
    Ok((doc, text, ok))
}
