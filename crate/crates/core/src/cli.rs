//! Command-line front end.
//!
//! Exit codes: `0` when every check passed or the query was answered, `1`
//! when a property is violated or a counterexample was found, `2` on
//! input errors (bad flags, unreadable or malformed files, exhausted
//! search budgets).
//!
//! Reports are plain text by default. `--format json`, or
//! `ROUGHALG_FORMAT=json` in the environment, switches to a canonical JSON
//! document; the flag wins over the variable.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{
    check_axiom, classify_with, find_identities_with, AxiomId, AxiomReport, AxiomSets,
    IdentityScope, Label, ZProfile,
};
use crate::format::{parse_algebra_file, parse_partition, parse_subset, parse_svmap, AlgebraFile};
use crate::gas::{is_strong_sv_morphism, is_sv_morphism, MorphismReport};
use crate::ideals::{enumerate_ideals, is_ideal, is_strong_ideal, survey_ideals, IdealReport, IdealSurvey};
use crate::relations::{
    is_complete_congruence, is_congruence, is_equivalence, relation_from_ideal, EquivalenceCheck,
};
use crate::rough::{
    check_congruence_laws, check_equivalence_laws, check_pawlak_laws, ApproximationSpace, LawGroup,
    LawReport, LawStatus, PropertyId,
};
use crate::search::{
    enumerate_algebras, enumerate_congruences, find_counterexample, sweep, Finding, LawTally,
    Limits, PartitionScope, SearchSpec, Target,
};
use crate::{Error, FiniteAlgebra, Partition, Subset};

/// Environment variable selecting the report format.
pub const FORMAT_ENV: &str = "ROUGHALG_FORMAT";

#[derive(Debug, Parser)]
#[command(name = "roughalg", version, about = "Check finite BO/BH/Z-algebras and rough approximations over them")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZProfileArg {
    Literal,
    Relaxed,
}

impl From<ZProfileArg> for ZProfile {
    fn from(z: ZProfileArg) -> Self {
        match z {
            ZProfileArg::Literal => ZProfile::Literal,
            ZProfileArg::Relaxed => ZProfile::Relaxed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check axioms and report which labels (B, BH, BO, Z) hold.
    Check {
        file: PathBuf,
        /// Comma-separated labels (b, bh, bo, z, all) and/or axioms (C1..C7).
        #[arg(long)]
        axioms: Option<String>,
        #[arg(long, value_enum, default_value = "literal")]
        z_profile: ZProfileArg,
        /// Keep at most this many witnesses per axiom.
        #[arg(long)]
        witness_limit: Option<usize>,
    },
    /// List left, right and two-sided identities.
    Identities {
        file: PathBuf,
        /// Only require `x*e = x` for `x != e`.
        #[arg(long)]
        excluding_self: bool,
    },
    /// Enumerate ideals.
    Ideals {
        file: PathBuf,
        #[arg(long)]
        strong: bool,
        /// Also list subsets satisfying conditions 1 and 3 only.
        #[arg(long, conflicts_with = "strong")]
        survey: bool,
    },
    /// Enumerate congruences and mark the complete ones.
    Congruences { file: PathBuf },
    /// Lower and upper approximations of a subset.
    Approx {
        file: PathBuf,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        set: String,
        #[arg(long)]
        lower: bool,
        #[arg(long)]
        upper: bool,
        #[arg(long)]
        boundary: bool,
        #[arg(long)]
        pair: bool,
    },
    /// Check a law group or a named claim.
    Verify {
        file: PathBuf,
        /// Law group: 2-1, 3-1 or 3-2.
        #[arg(long, required_unless_present = "claim", conflicts_with = "claim")]
        prop: Option<String>,
        /// b-algebra, bh-algebra, bo-algebra, z-algebra, ideal, bo-ideal,
        /// bh-ideal, z-ideal, strong-ideal, equivalence, congruence,
        /// complete-congruence.
        #[arg(long)]
        claim: Option<String>,
        /// Sweep every subset pair (and every admissible partition unless
        /// one is given).
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        set: Option<String>,
        /// Second subset for binary laws; defaults to `--set`.
        #[arg(long)]
        set_b: Option<String>,
        #[arg(long, value_enum, default_value = "literal")]
        z_profile: ZProfileArg,
    },
    /// Enumerate models or hunt for counterexamples.
    Search {
        #[arg(long)]
        order: usize,
        /// Comma-separated labels and/or axioms.
        #[arg(long)]
        axioms: String,
        #[arg(long, conflicts_with = "find")]
        count: bool,
        /// Property id such as `2-1.11-sup` or `3-2.2`.
        #[arg(long)]
        find: Option<String>,
        /// all, congruences, complete or non-complete. Defaults to
        /// congruences for 3-2 properties and all otherwise.
        #[arg(long)]
        scope: Option<String>,
        /// Print every model.
        #[arg(long, conflicts_with = "find")]
        list: bool,
        #[arg(long)]
        max_models: Option<u64>,
        #[arg(long)]
        time_budget_ms: Option<u64>,
        #[arg(long, value_enum, default_value = "literal")]
        z_profile: ZProfileArg,
    },
    /// Check whether a set-valued map is a (strong) morphism.
    Morphism {
        /// Source algebra.
        file: PathBuf,
        /// Target algebra; defaults to the source.
        #[arg(long)]
        target: Option<PathBuf>,
        /// Map syntax `x:img;x:img;...`.
        #[arg(long)]
        map: String,
        #[arg(long)]
        strong: bool,
    },
}

#[derive(Debug, clap::Args)]
struct SpaceArgs {
    /// Partition, e.g. `0,1|2|3`.
    #[arg(long, conflicts_with = "ideal")]
    partition: Option<String>,
    /// Subset whose induced relation `x*y, y*x ∈ I` gives the classes.
    #[arg(long)]
    ideal: Option<String>,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: u8,
    json: String,
    text: String,
}

impl Report {
    fn new<T: Serialize>(code: u8, body: &T, text: String) -> Self {
        Self {
            code,
            json: serde_json::to_string_pretty(body).expect("reports serialize") + "\n",
            text,
        }
    }
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Report, InputError>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => Outcome {
            code: report.code,
            stdout: match cli.format {
                Format::Text => report.text,
                Format::Json => report.json,
            },
            stderr: String::new(),
        },
        Err(InputError(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Check {
            file,
            axioms,
            z_profile,
            witness_limit,
        } => cmd_check(&file, axioms.as_deref(), z_profile.into(), witness_limit),
        Command::Identities {
            file,
            excluding_self,
        } => cmd_identities(&file, excluding_self),
        Command::Ideals {
            file,
            strong,
            survey,
        } => cmd_ideals(&file, strong, survey),
        Command::Congruences { file } => cmd_congruences(&file),
        Command::Approx {
            file,
            space,
            set,
            lower,
            upper,
            boundary,
            pair,
        } => cmd_approx(&file, &space, &set, [lower, upper, boundary, pair]),
        Command::Verify {
            file,
            prop,
            claim,
            exhaustive,
            space,
            set,
            set_b,
            z_profile,
        } => match (prop, claim) {
            (Some(group), _) => cmd_verify_prop(&file, &group, exhaustive, &space, set.as_deref(), set_b.as_deref()),
            (None, Some(claim)) => cmd_verify_claim(&file, &claim, &space, set.as_deref(), z_profile.into()),
            (None, None) => Err(InputError("one of --prop or --claim is required".into())),
        },
        Command::Search {
            order,
            axioms,
            count: _,
            find,
            scope,
            list,
            max_models,
            time_budget_ms,
            z_profile,
        } => {
            let limits = Limits {
                max_models,
                time_budget: time_budget_ms.map(Duration::from_millis),
                ..Limits::default()
            };
            let axioms = search_axioms(&axioms, z_profile.into())?;
            match find {
                Some(p) => cmd_search_find(order, axioms, &p, scope.as_deref(), limits),
                None => cmd_search_count(order, axioms, list, limits),
            }
        }
        Command::Morphism {
            file,
            target,
            map,
            strong,
        } => cmd_morphism(&file, target.as_deref(), &map, strong),
    }
}

fn load(path: &Path) -> Result<AlgebraFile, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_algebra_file(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn describe(f: &AlgebraFile) -> String {
    format!(
        "algebra {} (order {}, zero {})",
        f.name.as_deref().unwrap_or("<unnamed>"),
        f.algebra.order(),
        f.algebra.zero()
    )
}

#[derive(Serialize)]
struct AlgebraInfo {
    name: Option<String>,
    order: usize,
    zero: usize,
}

impl From<&AlgebraFile> for AlgebraInfo {
    fn from(f: &AlgebraFile) -> Self {
        Self {
            name: f.name.clone(),
            order: f.algebra.order(),
            zero: f.algebra.zero(),
        }
    }
}

fn tuple(t: &[usize]) -> String {
    format!("({})", t.iter().join(","))
}

fn joined<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let s = items.into_iter().join(" ");
    if s.is_empty() {
        "none".into()
    } else {
        s
    }
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

/// A `--axioms` request: whole labels, plus loose axioms.
struct AxiomRequest {
    labels: Vec<Label>,
    loose: Vec<AxiomId>,
}

fn parse_axiom_request(spec: &str) -> Result<AxiomRequest, InputError> {
    let mut labels = Vec::new();
    let mut loose = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if tok.eq_ignore_ascii_case("all") {
            labels.extend(Label::ALL);
        } else if let Ok(l) = tok.parse::<Label>() {
            labels.push(l);
        } else {
            loose.push(tok.parse::<AxiomId>().map_err(|_| {
                InputError(format!("unknown label or axiom `{tok}`"))
            })?);
        }
    }
    if labels.is_empty() && loose.is_empty() {
        return Err(InputError("empty axiom list".into()));
    }
    labels.dedup();
    Ok(AxiomRequest { labels, loose })
}

fn search_axioms(spec: &str, z: ZProfile) -> Result<Vec<AxiomId>, InputError> {
    let req = parse_axiom_request(spec)?;
    let sets = AxiomSets::new(z);
    let set: BTreeSet<AxiomId> = req
        .labels
        .iter()
        .flat_map(|&l| sets.axioms(l).iter().copied())
        .chain(req.loose)
        .collect();
    Ok(set.into_iter().collect())
}

#[derive(Serialize)]
struct LabelCheck {
    label: Option<Label>,
    holds: bool,
    axioms: Vec<AxiomReport>,
}

#[derive(Serialize)]
struct CheckBody {
    command: &'static str,
    algebra: AlgebraInfo,
    z_profile: ZProfile,
    labels: BTreeSet<Label>,
    checks: Vec<LabelCheck>,
    passed: bool,
}

fn cmd_check(path: &Path, axioms: Option<&str>, z: ZProfile, limit: Option<usize>) -> CmdResult {
    let file = load(path)?;
    let alg = &file.algebra;
    let sets = AxiomSets::new(z);
    let request = match axioms {
        Some(spec) => parse_axiom_request(spec)?,
        None => AxiomRequest {
            labels: Label::ALL.to_vec(),
            loose: Vec::new(),
        },
    };
    let report = |a: AxiomId| {
        let mut r = check_axiom(alg, a);
        if let Some(cap) = limit {
            r.witnesses.truncate(cap.max(1));
        }
        r
    };
    let mut checks: Vec<LabelCheck> = request
        .labels
        .iter()
        .map(|&l| {
            let axioms: Vec<_> = sets.axioms(l).iter().map(|&a| report(a)).collect();
            LabelCheck {
                label: Some(l),
                holds: axioms.iter().all(|r| r.holds),
                axioms,
            }
        })
        .collect();
    if !request.loose.is_empty() {
        let axioms: Vec<_> = request.loose.iter().map(|&a| report(a)).collect();
        checks.push(LabelCheck {
            label: None,
            holds: axioms.iter().all(|r| r.holds),
            axioms,
        });
    }
    let passed = checks.iter().all(|c| c.holds);
    let labels = classify_with(alg, &sets);

    let mut text = format!("{}\n", describe(&file));
    writeln!(text, "labels: {}", joined(&labels)).unwrap();
    for c in &checks {
        let head = c.label.map_or("axioms".to_string(), |l| l.to_string());
        let cells = c
            .axioms
            .iter()
            .map(|r| format!("{} {}", r.axiom, mark(r.holds)))
            .join(" ");
        writeln!(text, "{head}: {cells}").unwrap();
        for r in c.axioms.iter().filter(|r| !r.holds) {
            writeln!(
                text,
                "  {} ({}) fails at {}; {} violation(s)",
                r.axiom,
                r.axiom.formula(),
                r.witnesses.iter().map(|w| tuple(w)).join(" "),
                r.violations
            )
            .unwrap();
        }
    }
    let code = if axioms.is_some() && !passed { 1 } else { 0 };
    let body = CheckBody {
        command: "check",
        algebra: (&file).into(),
        z_profile: z,
        labels,
        checks,
        passed,
    };
    Ok(Report::new(code, &body, text))
}

fn cmd_identities(path: &Path, excluding_self: bool) -> CmdResult {
    let file = load(path)?;
    let scope = if excluding_self {
        IdentityScope::ExcludingSelf
    } else {
        IdentityScope::AllElements
    };
    let ids = find_identities_with(&file.algebra, scope);
    let text = format!(
        "{}\nleft identities: {}\nright identities: {}\ntwo-sided identities: {}\n",
        describe(&file),
        ids.left,
        ids.right,
        ids.two_sided
    );
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        algebra: AlgebraInfo,
        excluding_self: bool,
        #[serde(flatten)]
        identities: crate::Identities,
    }
    let body = Body {
        command: "identities",
        algebra: (&file).into(),
        excluding_self,
        identities: ids,
    };
    Ok(Report::new(0, &body, text))
}

fn cmd_ideals(path: &Path, strong: bool, survey: bool) -> CmdResult {
    let file = load(path)?;
    let alg = &file.algebra;
    let mut text = format!("{}\n", describe(&file));
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        algebra: AlgebraInfo,
        strong: bool,
        ideals: Vec<Subset>,
        #[serde(skip_serializing_if = "Option::is_none")]
        survey: Option<IdealSurvey>,
    }
    let ideals = enumerate_ideals(alg, strong)?;
    writeln!(text, "{} {}:", ideals.len(), if strong { "strong ideals" } else { "ideals" }).unwrap();
    for i in &ideals {
        writeln!(text, "  {i}").unwrap();
    }
    let survey = if survey {
        let s = survey_ideals(alg)?;
        writeln!(text, "strong ideals: {}", joined(&s.strong_ideals)).unwrap();
        writeln!(text, "conditions 1 and 3 only: {}", joined(&s.condition_three)).unwrap();
        writeln!(
            text,
            "of which not ideals: {}",
            joined(&s.condition_three_not_ideal)
        )
        .unwrap();
        Some(s)
    } else {
        None
    };
    let body = Body {
        command: "ideals",
        algebra: (&file).into(),
        strong,
        ideals,
        survey,
    };
    Ok(Report::new(0, &body, text))
}

fn cmd_congruences(path: &Path) -> CmdResult {
    let file = load(path)?;
    let alg = &file.algebra;
    #[derive(Serialize)]
    struct Entry {
        partition: Partition,
        complete: bool,
    }
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        algebra: AlgebraInfo,
        congruences: Vec<Entry>,
    }
    let congruences = enumerate_congruences(alg)?
        .into_iter()
        .map(|p| {
            let complete = is_complete_congruence(alg, &p).expect("enumerated congruence").holds();
            Entry {
                partition: p,
                complete,
            }
        })
        .collect::<Vec<_>>();
    let mut text = format!("{}\n{} congruences:\n", describe(&file), congruences.len());
    for c in &congruences {
        writeln!(
            text,
            "  {}{}",
            c.partition,
            if c.complete { "  (complete)" } else { "" }
        )
        .unwrap();
    }
    let body = Body {
        command: "congruences",
        algebra: (&file).into(),
        congruences,
    };
    Ok(Report::new(0, &body, text))
}

#[derive(Serialize)]
struct NotEquivalenceBody<'a> {
    command: &'static str,
    ideal: Subset,
    equivalence: &'a EquivalenceCheck,
}

/// Space from `--partition` or `--ideal`. The inner `Err` carries a
/// finished exit-1 report when the ideal relation is not an equivalence.
fn build_space(
    alg: &FiniteAlgebra,
    args: &SpaceArgs,
    command: &'static str,
) -> Result<Result<ApproximationSpace, Report>, InputError> {
    let n = alg.order();
    match (&args.partition, &args.ideal) {
        (Some(p), _) => {
            let p = parse_partition(p, n)?;
            Ok(Ok(ApproximationSpace::with_algebra(alg.clone(), p)?))
        }
        (None, Some(i)) => {
            let ideal = parse_subset(i, n)?;
            let check = is_equivalence(&relation_from_ideal(alg, &ideal))?;
            if check.holds() {
                Ok(Ok(ApproximationSpace::from_ideal(alg.clone(), &ideal)?))
            } else {
                let text = format!("relation induced by {ideal} is not an equivalence: {check}\n");
                let body = NotEquivalenceBody {
                    command,
                    ideal,
                    equivalence: &check,
                };
                Ok(Err(Report::new(1, &body, text)))
            }
        }
        (None, None) => Err(InputError("one of --partition or --ideal is required".into())),
    }
}

fn cmd_approx(path: &Path, space: &SpaceArgs, set: &str, flags: [bool; 4]) -> CmdResult {
    let file = load(path)?;
    let space = match build_space(&file.algebra, space, "approx")? {
        Ok(s) => s,
        Err(report) => return Ok(report),
    };
    let a = parse_subset(set, file.algebra.order())?;
    let [lower, upper, boundary, pair] = flags;
    let all = !flags.iter().any(|&f| f);
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        partition: Partition,
        set: Subset,
        #[serde(skip_serializing_if = "Option::is_none")]
        lower: Option<Subset>,
        #[serde(skip_serializing_if = "Option::is_none")]
        upper: Option<Subset>,
        #[serde(skip_serializing_if = "Option::is_none")]
        boundary: Option<Subset>,
        #[serde(skip_serializing_if = "Option::is_none")]
        definable: Option<bool>,
    }
    let body = Body {
        command: "approx",
        partition: space.partition().clone(),
        set: a,
        lower: (all || lower || pair).then(|| space.lower(&a)),
        upper: (all || upper || pair).then(|| space.upper(&a)),
        boundary: (all || boundary).then(|| space.boundary(&a)),
        definable: (all || boundary).then(|| space.is_definable(&a)),
    };
    let mut text = format!("partition {}\nset {}\n", body.partition, a);
    for (name, v) in [("lower", body.lower), ("upper", body.upper), ("boundary", body.boundary)] {
        if let Some(v) = v {
            writeln!(text, "{name}: {v}").unwrap();
        }
    }
    if let Some(d) = body.definable {
        writeln!(text, "{}", if d { "definable" } else { "rough" }).unwrap();
    }
    Ok(Report::new(0, &body, text))
}

fn status_text(s: LawStatus) -> String {
    match s {
        LawStatus::Holds => "holds".into(),
        LawStatus::Vacuous => "holds (vacuous)".into(),
        LawStatus::Fails { element } => format!("FAILS (element {element})"),
        LawStatus::NotApplicable => "n/a".into(),
    }
}

fn cmd_verify_prop(
    path: &Path,
    group: &str,
    exhaustive: bool,
    space_args: &SpaceArgs,
    set: Option<&str>,
    set_b: Option<&str>,
) -> CmdResult {
    let group: LawGroup = group.parse().map_err(InputError)?;
    let file = load(path)?;
    let alg = &file.algebra;
    let n = alg.order();
    let given_space = if space_args.partition.is_some() || space_args.ideal.is_some() {
        match build_space(alg, space_args, "verify")? {
            Ok(s) => Some(s),
            Err(report) => return Ok(report),
        }
    } else {
        None
    };
    if let (LawGroup::Congruence, Some(space)) = (group, &given_space) {
        if let Some(w) = is_congruence(alg, space.partition())?.witness {
            return Err(Error::NotCongruence(w).into());
        }
    }

    if exhaustive {
        let partitions = match (&given_space, group) {
            (Some(s), _) => vec![s.partition().clone()],
            (None, LawGroup::Congruence) => enumerate_congruences(alg)?,
            (None, _) => {
                if n > crate::search::DEFAULT_MAX_CONGRUENCE_ORDER {
                    return Err(Error::TooLarge {
                        n,
                        limit: crate::search::DEFAULT_MAX_CONGRUENCE_ORDER,
                    }
                    .into());
                }
                Partition::enumerate(n).collect()
            }
        };
        let tallies = sweep(alg, group, &partitions)?;
        let violated = tallies.iter().any(|t| !t.holds());
        #[derive(Serialize)]
        struct Body {
            command: &'static str,
            algebra: AlgebraInfo,
            group: LawGroup,
            exhaustive: bool,
            partitions: usize,
            subset_pairs: usize,
            tallies: Vec<LawTally>,
            passed: bool,
        }
        let mut text = format!(
            "{}\nlaw group {}: {} partition(s) x {} subset pairs\n",
            describe(&file),
            group.code(),
            partitions.len(),
            1usize << (2 * n)
        );
        for t in &tallies {
            write!(
                text,
                "  {:<10} {} violation(s) of {}",
                t.id.to_string(),
                t.violations,
                t.evaluated
            )
            .unwrap();
            if t.vacuous > 0 {
                write!(text, ", {} vacuous", t.vacuous).unwrap();
            }
            if let Some(c) = &t.first_violation {
                write!(
                    text,
                    "; first: partition {} A={} B={} element {}",
                    c.partition, c.a, c.b, c.element
                )
                .unwrap();
            }
            text.push('\n');
        }
        let body = Body {
            command: "verify",
            algebra: (&file).into(),
            group,
            exhaustive: true,
            partitions: partitions.len(),
            subset_pairs: 1 << (2 * n),
            tallies,
            passed: !violated,
        };
        return Ok(Report::new(u8::from(violated), &body, text));
    }

    let space = given_space
        .ok_or_else(|| InputError("--partition or --ideal is required without --exhaustive".into()))?;
    let set = set.ok_or_else(|| InputError("--set is required without --exhaustive".into()))?;
    let a = parse_subset(set, n)?;
    let b = match set_b {
        Some(s) => parse_subset(s, n)?,
        None => a,
    };
    let report: LawReport = match group {
        LawGroup::Pawlak => check_pawlak_laws(&space, &a, &b),
        LawGroup::Equivalence => check_equivalence_laws(&space, &a, &b),
        LawGroup::Congruence => check_congruence_laws(alg, space.partition(), &a, &b)?,
    };
    let mut text = format!(
        "{}\nlaw group {} on partition {} with A={} B={}\n",
        describe(&file),
        group.code(),
        space.partition(),
        a,
        b
    );
    if let Some(c) = report.congruence {
        writeln!(text, "congruence: {} complete: {}", c.congruence, c.complete).unwrap();
    }
    for o in &report.outcomes {
        writeln!(text, "  {:<10} {}", o.id.to_string(), status_text(o.status)).unwrap();
    }
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        algebra: AlgebraInfo,
        partition: Partition,
        a: Subset,
        b: Subset,
        report: LawReport,
        passed: bool,
    }
    let passed = report.all_hold();
    let body = Body {
        command: "verify",
        algebra: (&file).into(),
        partition: space.partition().clone(),
        a,
        b,
        report,
        passed,
    };
    Ok(Report::new(u8::from(!passed), &body, text))
}

fn cmd_verify_claim(
    path: &Path,
    claim: &str,
    space_args: &SpaceArgs,
    set: Option<&str>,
    z: ZProfile,
) -> CmdResult {
    let file = load(path)?;
    let alg = &file.algebra;
    let n = alg.order();
    let need_set = || -> Result<Subset, InputError> {
        let s = set.ok_or_else(|| InputError(format!("claim `{claim}` needs --set")))?;
        Ok(parse_subset(s, n)?)
    };
    let need_partition = || -> Result<Partition, InputError> {
        let p = space_args
            .partition
            .as_deref()
            .ok_or_else(|| InputError(format!("claim `{claim}` needs --partition")))?;
        Ok(parse_partition(p, n)?)
    };

    let (holds, detail, lines): (bool, serde_json::Value, Vec<String>) = match claim {
        "b-algebra" | "bh-algebra" | "bo-algebra" | "z-algebra" => {
            let label: Label = claim.trim_end_matches("-algebra").parse().map_err(InputError)?;
            let reports: Vec<AxiomReport> = AxiomSets::new(z)
                .axioms(label)
                .iter()
                .map(|&a| check_axiom(alg, a))
                .collect();
            let lines = reports
                .iter()
                .map(|r| match r.witnesses.first() {
                    None => format!("{} ✓", r.axiom),
                    Some(w) => format!("{} ✗ first witness {}", r.axiom, tuple(w)),
                })
                .collect();
            (reports.iter().all(|r| r.holds), serde_json::to_value(&reports)?, lines)
        }
        "ideal" | "bo-ideal" | "bh-ideal" | "z-ideal" | "strong-ideal" => {
            let s = need_set()?;
            let r: IdealReport = if claim == "strong-ideal" {
                is_strong_ideal(alg, &s)
            } else {
                is_ideal(alg, &s)
            };
            let mut lines = vec![format!("subset {s}")];
            if !r.contains_zero {
                lines.push(format!("condition 1 fails: {} ∉ I", alg.zero()));
            }
            if !r.absorption_witnesses.is_empty() {
                lines.push(format!(
                    "condition 2 fails at {}",
                    r.absorption_witnesses
                        .iter()
                        .map(|(x, y)| format!("(x={x}, y={y})"))
                        .join(" ")
                ));
            }
            if let Some(ws) = r.strong_witnesses.as_ref().filter(|w| !w.is_empty()) {
                lines.push(format!(
                    "condition 3 fails at {}",
                    ws.iter()
                        .map(|(x, y, z)| format!("(x={x}, y={y}, z={z})"))
                        .join(" ")
                ));
            }
            let holds = if claim == "strong-ideal" {
                r.is_strong()
            } else {
                r.is_ideal()
            };
            (holds, serde_json::to_value(&r)?, lines)
        }
        "equivalence" => {
            let i = space_args
                .ideal
                .as_deref()
                .or(set)
                .ok_or_else(|| InputError("claim `equivalence` needs --ideal".into()))?;
            let ideal = parse_subset(i, n)?;
            let check = is_equivalence(&relation_from_ideal(alg, &ideal))?;
            (check.holds(), serde_json::to_value(&check)?, vec![check.to_string()])
        }
        "congruence" => {
            let p = need_partition()?;
            let v = is_congruence(alg, &p)?;
            let line = v.witness.map_or("congruence".to_string(), |w| w.to_string());
            (v.holds(), serde_json::to_value(&v)?, vec![line])
        }
        "complete-congruence" => {
            let p = need_partition()?;
            match is_complete_congruence(alg, &p) {
                Ok(v) => {
                    let line = v.witness.map_or("complete congruence".to_string(), |w| {
                        format!(
                            "[{}]*[{}] differs from [{}] at element {}",
                            w.x,
                            w.y,
                            alg.op(w.x, w.y),
                            w.element
                        )
                    });
                    (v.holds(), serde_json::to_value(&v)?, vec![line])
                }
                Err(Error::NotCongruence(w)) => (
                    false,
                    serde_json::json!({ "not_congruence": w }),
                    vec![format!("not a congruence: {w}")],
                ),
                Err(e) => return Err(e.into()),
            }
        }
        other => return Err(InputError(format!("unknown claim `{other}`"))),
    };

    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        algebra: AlgebraInfo,
        claim: String,
        holds: bool,
        detail: serde_json::Value,
    }
    let mut text = format!(
        "{}\nclaim {claim}: {}\n",
        describe(&file),
        if holds { "holds" } else { "FALSE" }
    );
    for l in lines {
        writeln!(text, "  {l}").unwrap();
    }
    let body = Body {
        command: "verify",
        algebra: (&file).into(),
        claim: claim.to_string(),
        holds,
        detail,
    };
    Ok(Report::new(u8::from(!holds), &body, text))
}

fn budget_report(command: &'static str, e: Error) -> CmdResult {
    match e {
        Error::BudgetExceeded { count, reason } => {
            #[derive(Serialize)]
            struct Body {
                command: &'static str,
                complete: bool,
                reason: &'static str,
                count: u64,
            }
            let text = format!("search stopped early ({reason}); {count} model(s) explored\n");
            let body = Body {
                command,
                complete: false,
                reason,
                count,
            };
            Ok(Report::new(2, &body, text))
        }
        other => Err(other.into()),
    }
}

fn cmd_search_count(order: usize, axioms: Vec<AxiomId>, list: bool, limits: Limits) -> CmdResult {
    let spec = SearchSpec {
        limits,
        ..SearchSpec::count(order, &axioms)
    };
    let mut models = Vec::new();
    let res = enumerate_algebras(&spec, |alg| {
        if list {
            models.push(alg.clone());
        }
        ControlFlow::Continue(())
    });
    let count = match res {
        Ok(c) => c,
        Err(e) => return budget_report("search", e),
    };
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        order: usize,
        axioms: Vec<AxiomId>,
        count: u64,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        models: Vec<FiniteAlgebra>,
    }
    let mut text = format!(
        "order {order}, axioms {}: {count} model(s)\n",
        axioms.iter().join(",")
    );
    for m in &models {
        text.push('\n');
        text.push_str(&crate::format::render_algebra(m, None));
    }
    let body = Body {
        command: "search",
        order,
        axioms,
        count,
        models,
    };
    Ok(Report::new(0, &body, text))
}

fn cmd_search_find(
    order: usize,
    axioms: Vec<AxiomId>,
    property: &str,
    scope: Option<&str>,
    limits: Limits,
) -> CmdResult {
    let property: PropertyId = property.parse().map_err(InputError)?;
    let scope = match scope {
        Some(s) => s.parse().map_err(InputError)?,
        None if property.group == LawGroup::Congruence => PartitionScope::Congruences,
        None => PartitionScope::All,
    };
    let spec = SearchSpec {
        order,
        axioms: axioms.clone(),
        target: Target::Property(property),
        scope,
        limits,
    };
    let finding = match find_counterexample(&spec) {
        Ok(f) => f,
        Err(e) => return budget_report("search", e),
    };
    #[derive(Serialize)]
    struct Body {
        command: &'static str,
        order: usize,
        axioms: Vec<AxiomId>,
        property: PropertyId,
        scope: PartitionScope,
        finding: Option<Finding>,
    }
    let mut text = format!(
        "order {order}, axioms {}, property {property}, scope {}\n",
        axioms.iter().join(","),
        serde_json::to_value(scope)?.as_str().unwrap_or_default()
    );
    match &finding {
        None => text.push_str("no counterexample\n"),
        Some(f) => {
            let c = &f.counterexample;
            writeln!(
                text,
                "counterexample: partition {} A={} B={} element {}",
                c.partition, c.a, c.b, c.element
            )
            .unwrap();
            text.push_str(&crate::format::render_algebra(&f.algebra, None));
        }
    }
    let code = u8::from(finding.is_some());
    let body = Body {
        command: "search",
        order,
        axioms,
        property,
        scope,
        finding,
    };
    Ok(Report::new(code, &body, text))
}

fn cmd_morphism(path: &Path, target: Option<&Path>, map: &str, strong: bool) -> CmdResult {
    let source = load(path)?;
    let target = match target {
        Some(t) => load(t)?,
        None => source.clone(),
    };
    let f = parse_svmap(map, source.algebra.order(), target.algebra.order())?;
    let report: MorphismReport = if strong {
        is_strong_sv_morphism(&f, &source.algebra, &target.algebra)?
    } else {
        is_sv_morphism(&f, &source.algebra, &target.algebra)?
    };
    let kind = if strong { "strong set-valued morphism" } else { "set-valued morphism" };
    let mut text = format!(
        "source {}\ntarget {}\nmap {}\n",
        describe(&source),
        describe(&target),
        crate::format::render_svmap(&f)
    );
    match report.verdict.witness {
        None => writeln!(text, "{kind}: holds").unwrap(),
        Some(w) => writeln!(
            text,
            "{kind}: FALSE at (x={}, y={}): element {} {}",
            w.x,
            w.y,
            w.element,
            match w.direction {
                crate::gas::Direction::ProductNotInImage => "in F(x)*F(y) but not in F(x*y)",
                crate::gas::Direction::ImageNotInProduct => "in F(x*y) but not in F(x)*F(y)",
            }
        )
        .unwrap(),
    }
    writeln!(
        text,
        "source labels: {}\ntarget labels: {}",
        joined(&report.source_labels),
        joined(&report.target_labels)
    )
    .unwrap();
    #[derive(Serialize)]
    struct Body<'a> {
        command: &'static str,
        map: &'a crate::SetValuedMap,
        #[serde(flatten)]
        report: &'a MorphismReport,
    }
    let code = u8::from(!report.holds());
    let body = Body {
        command: "morphism",
        map: &f,
        report: &report,
    };
    Ok(Report::new(code, &body, text))
}
