//! periodica: command-line front door for the periodic-subset library.
//!
//! Exit codes: 0 success, 1 domain error (structured JSON on stderr),
//! 2 usage error.

use clap::{Args, Parser, Subcommand};
use periodica_core::magma::{builders, FiniteMagma};
use periodica_core::realline::{parse_rational, ExactReal, RayInterval, SupValue};
use periodica_core::verify::{run_suite, Scope};
use periodica_core::{algebra, io, periodic, realline, represent, solver, topology, Subset};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "periodica",
    version,
    about = "Periodic subsets of finite magmas and exact periodic real sets"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized verification batteries.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TableArg {
    /// Cayley table JSON file.
    #[arg(long)]
    table: PathBuf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural queries and table generation.
    Magma {
        #[command(subcommand)]
        cmd: MagmaCmd,
    },
    /// Power-magma arithmetic on subsets.
    Subset {
        #[command(subcommand)]
        cmd: SubsetCmd,
    },
    /// Largest B-periodic subset of A (greatest fixpoint).
    Kernel {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Largest Y inside A with BY inside Y.
    Upk {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Start St_B(A) = A \ BA.
    Start {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Summand {x : Bx inside A}.
    Summand {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Kernel/free split with the three-class tag.
    Classify {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Well left (BB, B)-started test, all three kernel variants.
    Wellstarted {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "BB")]
        bb: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Three-part split A = C ∪ BF ∪ E.
    Decompose {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "BB")]
        bb: String,
        #[arg(long = "B")]
        b: String,
        /// Left identity to fix (defaults to the least one).
        #[arg(long)]
        l: Option<usize>,
    },
    /// Representation machinery.
    Represent {
        #[command(subcommand)]
        cmd: RepresentCmd,
    },
    /// Power-semigroup equation solvers.
    Solve {
        #[command(subcommand)]
        cmd: SolveCmd,
    },
    /// Alexandrov topologies of periodic-type subsets.
    Topo {
        #[command(subcommand)]
        cmd: TopoCmd,
    },
    /// Exact periodic real sets.
    Real {
        #[command(subcommand)]
        cmd: RealCmd,
    },
    /// Run theorem-keyed verification suites.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap for exhaustive scopes.
        #[arg(long)]
        max_n: Option<usize>,
        /// List available suites and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum MagmaCmd {
    /// Report structural flags of a table.
    Check {
        #[command(flatten)]
        table: TableArg,
    },
    /// Generate a builder table as JSON.
    Gen {
        /// cyclic | left-zero | right-zero | function-monoid | dihedral
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Output path (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SubsetCmd {
    /// Product set AB.
    Product {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// |AB| = |A||B| directness test.
    Direct {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// A ∩ BA = ∅ test.
    AntiTransfer {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Compare B with its canonical inverse.
    Symmetry {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Search for G = A·B with the given factor sizes.
    Factorize {
        #[command(flatten)]
        table: TableArg,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand)]
enum RepresentCmd {
    /// Full diagnosis of A = BB*D ∪ B^1*E.
    Report {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "BB")]
        bb: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        l: Option<usize>,
        /// Optional fixed transversal.
        #[arg(long)]
        transversal: Option<String>,
    },
    /// D with A = BB*D for a BB-periodic A.
    Periodic {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "BB")]
        bb: String,
    },
    /// Build BB*D ∪ <B>^1*E.
    Generate {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "BB")]
        bb: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "D")]
        d: String,
        #[arg(long = "E")]
        e: String,
    },
    /// Positive-negative partitions of a group.
    Partitions {
        #[command(flatten)]
        table: TableArg,
    },
    /// Positive subset / positive subsemigroup test.
    Positive {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
    },
    /// Experiment: scan for counterexamples to the well-started closure
    /// question (B, BB closed, B·BB = BB: is BB·D ∪ B^1·E always well
    /// (BB,B)-started with kernel BB·D?). Reports, asserts nothing.
    Explore {
        #[command(flatten)]
        table: TableArg,
        /// Maximum number of candidates to report.
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
}

#[derive(Subcommand)]
enum SolveCmd {
    /// BY inside A.
    Upper {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
    },
    /// B^1 Y inside A.
    Inside {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
    },
    /// BY inside Y inside A.
    Sandwich {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
    },
    /// BY = A.
    Eq {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
    },
    /// (BB·D ∪ BY) disjointly joined with Y = A.
    Split {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "BB")]
        bb: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "D")]
        d: String,
        #[arg(long = "A")]
        a: String,
    },
}

#[derive(Subcommand)]
enum TopoCmd {
    /// Minimal neighbourhoods of the upper-periodic or periodic topology.
    Build {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        /// upper | periodic
        #[arg(long, default_value = "upper")]
        kind: String,
        /// Write the preorder as GraphViz DOT to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    Open {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "A")]
        a: String,
        #[arg(long, default_value = "upper")]
        kind: String,
    },
    Count {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
        #[arg(long, default_value = "upper")]
        kind: String,
    },
    Semigroup {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
    },
    Group {
        #[command(flatten)]
        table: TableArg,
        #[arg(long = "B")]
        b: String,
    },
    /// τ with B = X: left ideals and the empty set.
    Ideals {
        #[command(flatten)]
        table: TableArg,
    },
}

#[derive(Args)]
struct SetArg {
    /// Real-set JSON file.
    #[arg(long)]
    set: PathBuf,
}

#[derive(Subcommand)]
enum RealCmd {
    /// Exact membership test.
    Member {
        #[command(flatten)]
        set: SetArg,
        /// Exact number, e.g. "5/2" or "1/2+sqrt2*1/4".
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Periodic kernel (the lattice part).
    Pk {
        #[command(flatten)]
        set: SetArg,
    },
    /// Periodic-free part.
    Pf {
        #[command(flatten)]
        set: SetArg,
    },
    /// Start cells (the E half).
    St {
        #[command(flatten)]
        set: SetArg,
    },
    /// Main concentration number sup(A \ (A+1)).
    Delta {
        #[command(flatten)]
        set: SetArg,
    },
    /// The set of concentration numbers.
    Coc {
        #[command(flatten)]
        set: SetArg,
    },
    /// Concentration number of the summand set.
    Sigma {
        #[command(flatten)]
        set: SetArg,
    },
    /// First, second, or third class.
    Classify {
        #[command(flatten)]
        set: SetArg,
    },
    /// Additive-closure criterion plus the windowed oracle.
    Semigroup {
        #[command(flatten)]
        set: SetArg,
    },
    /// Subtractive-D test (subgroups have no start part).
    Subgroup {
        #[command(flatten)]
        set: SetArg,
    },
    /// (1/b)·A in canonical unit form.
    Rescale {
        #[command(flatten)]
        set: SetArg,
        /// Nonzero rational modulus, e.g. "2" or "-1/2".
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Generator and shift of a member.
    Project {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Build H1 + H2 ∪ H2 from first- and second-class semigroups.
    Mix {
        /// First-class semigroup file.
        #[arg(long)]
        h1: PathBuf,
        /// Second-class semigroup file.
        #[arg(long)]
        h2: PathBuf,
    },
}

struct Failure {
    kind: &'static str,
    message: String,
}

impl From<periodica_core::Error> for Failure {
    fn from(e: periodica_core::Error) -> Failure {
        Failure {
            kind: "domain",
            message: e.to_string(),
        }
    }
}

impl From<realline::RealError> for Failure {
    fn from(e: realline::RealError) -> Failure {
        Failure {
            kind: "domain",
            message: e.to_string(),
        }
    }
}

fn fail(kind: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        kind,
        message: message.into(),
    }
}

type CmdResult = Result<(Value, String), Failure>;

fn load_table(arg: &TableArg) -> Result<FiniteMagma, Failure> {
    Ok(io::load_magma(&arg.table)?)
}

fn parse_subset(m: &FiniteMagma, text: &str) -> Result<Subset, Failure> {
    Ok(Subset::parse(m.size(), text)?)
}

fn pick_l(m: &FiniteMagma, l: Option<usize>) -> Result<usize, Failure> {
    match l {
        Some(l) => {
            if m.left_identities().contains(l) {
                Ok(l)
            } else {
                Err(fail("domain", format!("{l} is not a left identity")))
            }
        }
        None => m
            .left_identities()
            .first()
            .ok_or_else(|| fail("domain", "the magma has no left identity; pass --l")),
    }
}

fn sup_to_value(v: &SupValue) -> Value {
    match v {
        SupValue::ZeroConvention => json!({"kind": "ZeroConvention", "value": "0"}),
        SupValue::PlusInfinity => json!({"kind": "PlusInfinity"}),
        SupValue::Finite { value, attained } => {
            json!({"kind": "Finite", "value": value.to_string(), "attained": attained})
        }
    }
}

fn ray_to_value(r: &RayInterval) -> Value {
    match r {
        RayInterval::AllReals => json!({"kind": "AllReals"}),
        RayInterval::Empty => json!({"kind": "Empty"}),
        RayInterval::ClosedRay(lo) => json!({"kind": "ClosedRay", "lo": lo.to_string()}),
        RayInterval::OpenRay(lo) => json!({"kind": "OpenRay", "lo": lo.to_string()}),
    }
}

/// `p/q`, `sqrtM`, or sums like `1/2+sqrt2*1/4` and `3-sqrt3*1/2`.
fn parse_exact(text: &str) -> Result<ExactReal, Failure> {
    let cleaned = text.replace(' ', "");
    let mut terms: Vec<String> = Vec::new();
    let mut term = String::new();
    for (i, c) in cleaned.chars().enumerate() {
        if (c == '+' || c == '-') && i > 0 && !term.ends_with('/') && !term.ends_with('*') {
            terms.push(term.clone());
            term.clear();
        }
        if !(c == '+' && term.is_empty()) {
            term.push(c);
        }
    }
    if !term.is_empty() {
        terms.push(term);
    }
    let mut out = ExactReal::zero();
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.as_str()),
        };
        let parsed = if let Some(rest) = body.strip_prefix("sqrt") {
            let (rad, coeff) = match rest.split_once('*') {
                Some((r, c)) => (r, c),
                None => (rest, "1"),
            };
            let rad: u64 = rad
                .parse()
                .map_err(|_| fail("usage", format!("bad radicand in {text:?}")))?;
            ExactReal::sqrt_term(rad, parse_rational(coeff).map_err(|e| fail("usage", e))?)
        } else {
            ExactReal::from_rational(parse_rational(body).map_err(|e| fail("usage", e))?)
        };
        out = out + if neg { -parsed } else { parsed };
    }
    Ok(out)
}

fn real_set_value(a: &realline::UnitPeriodicRealSet) -> Value {
    serde_json::to_value(io::real_set_to_dto(a)).expect("serializable")
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.cmd {
        Cmd::Magma { cmd } => magma_cmd(cmd),
        Cmd::Subset { cmd } => subset_cmd(cmd),
        Cmd::Kernel { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let (k, iters) = periodic::periodic_kernel_with_iterations(&m, &a, &b);
            Ok((
                json!({"kernel": k.to_hex(), "iterations": iters}),
                format!("kernel = {k} ({iters} fixpoint rounds)"),
            ))
        }
        Cmd::Upk { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let k = periodic::upper_periodic_kernel(&m, &a, &b);
            Ok((json!({"upk": k.to_hex()}), format!("upk = {k}")))
        }
        Cmd::Start { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let s = periodic::start(&m, &a, &b);
            Ok((json!({"start": s.to_hex()}), format!("start = {s}")))
        }
        Cmd::Summand { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let s = periodic::summand(&m, &a, &b);
            Ok((json!({"summand": s.to_hex()}), format!("summand = {s}")))
        }
        Cmd::Classify { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let c = periodic::classify(&m, &a, &b);
            Ok((
                json!({
                    "tag": format!("{:?}", c.tag),
                    "kernel": c.kernel.to_hex(),
                    "free": c.free_part.to_hex(),
                }),
                format!("{:?}: kernel = {}, free = {}", c.tag, c.kernel, c.free_part),
            ))
        }
        Cmd::Wellstarted { table, a, bb, b } => {
            let m = load_table(table)?;
            let (a, bb, b) = (
                parse_subset(&m, a)?,
                parse_subset(&m, bb)?,
                parse_subset(&m, b)?,
            );
            let r = periodic::well_started_report(&m, &a, &bb, &b)?;
            let human = format!(
                "well started: {} (via upper kernel: {}, via summand: {}, eq. 2.4: {:?})",
                r.via_kernel, r.via_upper_kernel, r.via_summand, r.eq_2_4
            );
            Ok((serde_json::to_value(&r).expect("serializable"), human))
        }
        Cmd::Decompose { table, a, bb, b, l } => {
            let m = load_table(table)?;
            let (a, bb, b) = (
                parse_subset(&m, a)?,
                parse_subset(&m, bb)?,
                parse_subset(&m, b)?,
            );
            let l = pick_l(&m, *l)?;
            let (c, bf, e) = periodic::decompose_three_parts(&m, &a, &bb, &b, l)?;
            Ok((
                json!({"c": c.to_hex(), "bf": bf.to_hex(), "e": e.to_hex()}),
                format!("C = {c}, BF = {bf}, E = {e}"),
            ))
        }
        Cmd::Represent { cmd } => represent_cmd(cmd),
        Cmd::Solve { cmd } => solve_cmd(cmd),
        Cmd::Topo { cmd } => topo_cmd(cmd),
        Cmd::Real { cmd } => real_cmd(cmd),
        Cmd::Verify { suite, max_n, list } => {
            if *list {
                let names = periodica_core::verify::suite_names();
                return Ok((json!({"suites": names}), names.join("\n")));
            }
            let scope = Scope {
                max_n: max_n.unwrap_or_else(periodica_core::max_exhaustive_n),
                seed: cli.seed,
            };
            let report = run_suite(suite, &scope);
            let mut human = String::new();
            for e in &report.entries {
                human.push_str(&format!(
                    "{:28} [{}] {}/{}{}\n",
                    e.theorem_id,
                    e.fixture,
                    e.cases_passed,
                    e.cases_run,
                    match &e.counterexample {
                        Some(cx) => format!("  counterexample: {cx}"),
                        None => String::new(),
                    }
                ));
            }
            human.push_str(&format!(
                "{} in {} ms",
                if report.passed { "PASS" } else { "FAIL" },
                report.wall_time_ms
            ));
            let value = serde_json::to_value(&report).expect("serializable");
            if report.passed {
                Ok((value, human))
            } else {
                Err(Failure {
                    kind: "verify",
                    message: if cli.json {
                        value.to_string()
                    } else {
                        human
                    },
                })
            }
        }
    }
}

fn magma_cmd(cmd: &MagmaCmd) -> CmdResult {
    match cmd {
        MagmaCmd::Check { table } => {
            let m = load_table(table)?;
            let lids = m.left_identities();
            let value = json!({
                "n": m.size(),
                "associative": m.is_associative(),
                "left_identities": lids.to_hex(),
                "identity": m.identity(),
                "group": m.is_group(),
            });
            let human = format!(
                "n = {}, associative = {}, left identities = {}, identity = {:?}, group = {}",
                m.size(),
                m.is_associative(),
                lids,
                m.identity(),
                m.is_group()
            );
            Ok((value, human))
        }
        MagmaCmd::Gen { kind, n, out } => {
            let m = match kind.as_str() {
                "cyclic" => builders::cyclic(*n),
                "left-zero" => builders::left_zero(*n),
                "right-zero" => builders::right_zero(*n),
                "dihedral" => builders::dihedral(*n),
                "function-monoid" => {
                    if !(1..=4).contains(n) {
                        return Err(fail("usage", "function-monoid needs 1 <= n <= 4"));
                    }
                    builders::function_monoid(*n)
                }
                other => return Err(fail("usage", format!("unknown builder {other:?}"))),
            };
            let text = io::magma_to_string(&m);
            if let Some(path) = out {
                std::fs::write(path, &text).map_err(|e| fail("io", format!("{path:?}: {e}")))?;
                Ok((
                    json!({"written": path.display().to_string(), "n": m.size()}),
                    format!("wrote {} ({} elements)", path.display(), m.size()),
                ))
            } else {
                Ok((serde_json::from_str(&text).expect("valid json"), text))
            }
        }
    }
}

fn subset_cmd(cmd: &SubsetCmd) -> CmdResult {
    match cmd {
        SubsetCmd::Product { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let p = algebra::product(&m, &a, &b)?;
            Ok((json!({"result": p.to_hex()}), format!("AB = {p}")))
        }
        SubsetCmd::Direct { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let direct = algebra::is_direct(&m, &a, &b)?;
            let product = m.product(&a, &b);
            Ok((
                json!({"result": direct, "witnesses": {"product": product.to_hex(),
                       "size": product.len(), "expected": a.len() * b.len()}}),
                format!(
                    "direct = {direct} (|AB| = {}, |A||B| = {})",
                    product.len(),
                    a.len() * b.len()
                ),
            ))
        }
        SubsetCmd::AntiTransfer { table, a, b } => {
            let m = load_table(table)?;
            let (a, b) = (parse_subset(&m, a)?, parse_subset(&m, b)?);
            let anti = algebra::is_anti_left_transference(&m, &a, &b)?;
            Ok((
                json!({"result": anti}),
                format!("anti-left transference = {anti}"),
            ))
        }
        SubsetCmd::Symmetry { table, b, l } => {
            let m = load_table(table)?;
            let b = parse_subset(&m, b)?;
            let l = pick_l(&m, *l)?;
            let kind = algebra::symmetry_kind(&m, &b, l)?;
            let inv = m.canonical_inverse(&b, l)?;
            Ok((
                json!({"result": format!("{kind:?}"), "witnesses": {"inverse": inv.to_hex()}}),
                format!("{kind:?} (canonical inverse = {inv})"),
            ))
        }
        SubsetCmd::Factorize { table, a, b } => {
            let m = load_table(table)?;
            let (sa, sb) = algebra::search_factorization(&m, *a, *b)?;
            Ok((
                json!({"result": true, "witnesses": {"a": sa.to_hex(), "b": sb.to_hex()}}),
                format!("G = A*B with A = {sa}, B = {sb}"),
            ))
        }
    }
}

fn represent_cmd(cmd: &RepresentCmd) -> CmdResult {
    match cmd {
        RepresentCmd::Report {
            table,
            a,
            bb,
            b,
            l,
            transversal,
        } => {
            let m = load_table(table)?;
            let (a, bb, b) = (
                parse_subset(&m, a)?,
                parse_subset(&m, bb)?,
                parse_subset(&m, b)?,
            );
            let l = pick_l(&m, *l)?;
            let t = transversal
                .as_ref()
                .map(|t| parse_subset(&m, t))
                .transpose()?;
            let r = represent::representation_report(&m, &a, &bb, &b, l, t.as_ref())?;
            let human = format!(
                "D = {}, E = {}, direct = {}/{}, disjoint = {}, reconstructs = {}, well started = {}",
                r.d,
                r.e,
                r.first_half_direct,
                r.second_half_direct,
                r.halves_disjoint,
                r.reconstructs,
                r.well_started
            );
            Ok((serde_json::to_value(&r).expect("serializable"), human))
        }
        RepresentCmd::Periodic { table, a, bb } => {
            let m = load_table(table)?;
            let (a, bb) = (parse_subset(&m, a)?, parse_subset(&m, bb)?);
            let ctx = m.right_transversal(&bb)?;
            let d = represent::periodic_representation(&m, &ctx, &a)?;
            Ok((json!({"d": d.to_hex()}), format!("D = {d}")))
        }
        RepresentCmd::Generate { table, bb, b, d, e } => {
            let m = load_table(table)?;
            let (bb, b, d, e) = (
                parse_subset(&m, bb)?,
                parse_subset(&m, b)?,
                parse_subset(&m, d)?,
                parse_subset(&m, e)?,
            );
            let out = represent::generate_upper_periodic(&m, &bb, &b, &d, &e)?;
            Ok((json!({"a": out.to_hex()}), format!("A = {out}")))
        }
        RepresentCmd::Partitions { table } => {
            let m = load_table(table)?;
            let parts = represent::enumerate_positive_partitions(&m)?;
            let listed: Vec<Value> = parts
                .iter()
                .take(64)
                .map(|p| {
                    json!({"plus": p.g_plus.to_hex(), "minus": p.g_minus.to_hex(),
                           "two": p.g_two.to_hex()})
                })
                .collect();
            Ok((
                json!({"count": parts.len(), "partitions": listed}),
                format!("{} positive-negative partitions", parts.len()),
            ))
        }
        RepresentCmd::Positive { table, b } => {
            let m = load_table(table)?;
            let b = parse_subset(&m, b)?;
            let positive = represent::is_positive_subset(&m, &b)?;
            let subsemigroup = represent::is_positive_subsemigroup(&m, &b)?;
            Ok((
                json!({"positive": positive, "subsemigroup": subsemigroup}),
                format!("positive = {positive}, positive subsemigroup = {subsemigroup}"),
            ))
        }
        RepresentCmd::Explore { table, limit } => {
            let m = load_table(table)?;
            let (scanned, candidates) = represent::scan_wellstarted_closure(&m, *limit)?;
            let human = if candidates.is_empty() {
                format!("{scanned} tuples scanned, no counterexample candidates")
            } else {
                format!("{scanned} tuples scanned, {} candidates found", candidates.len())
            };
            Ok((
                json!({"scanned": scanned,
                       "candidates": serde_json::to_value(&candidates).expect("serializable")}),
                human,
            ))
        }
    }
}

fn solution_set_value(s: &solver::SolutionSet) -> Value {
    json!({
        "top": s.top.to_hex(),
        "count": s.count.to_string(),
        "all": s.all.as_ref().map(|v| v.iter().map(|y| y.to_hex()).collect::<Vec<_>>()),
    })
}

fn solve_cmd(cmd: &SolveCmd) -> CmdResult {
    match cmd {
        SolveCmd::Upper { table, b, a } => {
            let m = load_table(table)?;
            let (b, a) = (parse_subset(&m, b)?, parse_subset(&m, a)?);
            let s = solver::solve_upper(&m, &b, &a);
            Ok((
                solution_set_value(&s),
                format!("top = {}, {} solutions", s.top, s.count),
            ))
        }
        SolveCmd::Inside { table, b, a } => {
            let m = load_table(table)?;
            let (b, a) = (parse_subset(&m, b)?, parse_subset(&m, a)?);
            let s = solver::solve_upper_inside(&m, &b, &a);
            Ok((
                solution_set_value(&s),
                format!("top = {}, {} solutions", s.top, s.count),
            ))
        }
        SolveCmd::Sandwich { table, b, a } => {
            let m = load_table(table)?;
            let (b, a) = (parse_subset(&m, b)?, parse_subset(&m, a)?);
            let s = solver::solve_sandwich(&m, &b, &a)?;
            Ok((
                solution_set_value(&s),
                format!("top = {}, {} solutions", s.top, s.count),
            ))
        }
        SolveCmd::Eq { table, b, a } => {
            let m = load_table(table)?;
            let (b, a) = (parse_subset(&m, b)?, parse_subset(&m, a)?);
            let sols = solver::solve_equation(&m, &b, &a)?;
            let listed: Vec<String> = sols.iter().map(|y| y.to_hex()).collect();
            Ok((
                json!({"solutions": listed}),
                format!("{} solutions", sols.len()),
            ))
        }
        SolveCmd::Split { table, bb, b, d, a } => {
            let m = load_table(table)?;
            let (bb, b, d, a) = (
                parse_subset(&m, bb)?,
                parse_subset(&m, b)?,
                parse_subset(&m, d)?,
                parse_subset(&m, a)?,
            );
            let s = solver::solve_split(&m, &bb, &b, &d, &a)?;
            let listed: Vec<String> = s.solutions.iter().map(|y| y.to_hex()).collect();
            Ok((
                json!({"solutions": listed, "unique": s.unique}),
                format!("{} solutions, unique = {}", s.solutions.len(), s.unique),
            ))
        }
    }
}

fn topo_kind(kind: &str) -> Result<topology::TopologyKind, Failure> {
    match kind {
        "upper" => Ok(topology::TopologyKind::UpperPeriodic),
        "periodic" => Ok(topology::TopologyKind::Periodic),
        other => Err(fail("usage", format!("unknown topology kind {other:?}"))),
    }
}

fn topo_cmd(cmd: &TopoCmd) -> CmdResult {
    match cmd {
        TopoCmd::Build {
            table,
            b,
            kind,
            dot,
        } => {
            let m = load_table(table)?;
            let b = parse_subset(&m, b)?;
            let k = topo_kind(kind)?;
            let t = topology::build_topology(&m, &b, k)?;
            let neighborhoods: Vec<String> = (0..m.size())
                .map(|y| t.neighborhood(y).to_hex())
                .collect();
            if let Some(path) = dot {
                std::fs::write(path, t.to_dot())
                    .map_err(|e| fail("io", format!("{path:?}: {e}")))?;
            }
            // the periodic kind carries the two readings of its condition
            let conditions = match k {
                topology::TopologyKind::Periodic => Some(
                    serde_json::to_value(topology::periodic_conditions(&m, &b)?)
                        .expect("serializable"),
                ),
                topology::TopologyKind::UpperPeriodic => None,
            };
            let human = (0..m.size())
                .map(|y| format!("N({y}) = {}", t.neighborhood(y)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((
                json!({"neighborhoods": neighborhoods, "conditions": conditions}),
                human,
            ))
        }
        TopoCmd::Open { table, b, a, kind } => {
            let m = load_table(table)?;
            let (b, a) = (parse_subset(&m, b)?, parse_subset(&m, a)?);
            let t = topology::build_topology(&m, &b, topo_kind(kind)?)?;
            let open = t.is_open(&a);
            Ok((json!({"open": open}), format!("open = {open}")))
        }
        TopoCmd::Count { table, b, kind } => {
            let m = load_table(table)?;
            let b = parse_subset(&m, b)?;
            let t = topology::build_topology(&m, &b, topo_kind(kind)?)?;
            let count = t.count_opens()?;
            Ok((
                json!({"opens": count.to_string()}),
                format!("{count} open sets"),
            ))
        }
        TopoCmd::Semigroup { table, b } => {
            let m = load_table(table)?;
            let b = parse_subset(&m, b)?;
            let r = topology::is_topological_semigroup(&m, &b)?;
            let human = format!(
                "topological semigroup = {} (B closed = {}, left normal = {}, basis continuity = {})",
                r.continuous, r.b_subsemigroup, r.left_normal, r.basis_continuous
            );
            Ok((serde_json::to_value(&r).expect("serializable"), human))
        }
        TopoCmd::Group { table, b } => {
            let m = load_table(table)?;
            let b = parse_subset(&m, b)?;
            let r = topology::is_topological_group(&m, &b)?;
            let human = format!(
                "topological group = {} (normal = {}, basis of {} cosets)",
                r.topological_group,
                r.normal,
                r.basis.len()
            );
            Ok((serde_json::to_value(&r).expect("serializable"), human))
        }
        TopoCmd::Ideals { table } => {
            let m = load_table(table)?;
            let t = topology::ideal_topology(&m)?;
            let neighborhoods: Vec<String> = (0..m.size())
                .map(|y| t.neighborhood(y).to_hex())
                .collect();
            let verified = if m.size() <= 16 {
                Subset::all(m.size())
                    .all(|a| t.is_open(&a) == topology::is_left_ideal_or_empty(&m, &a))
            } else {
                true
            };
            Ok((
                json!({"neighborhoods": neighborhoods, "verified": verified}),
                format!("left-ideal topology, predicate cross-check = {verified}"),
            ))
        }
    }
}

fn real_cmd(cmd: &RealCmd) -> CmdResult {
    let load = |p: &PathBuf| -> Result<realline::UnitPeriodicRealSet, Failure> {
        Ok(io::load_real_set(p)?)
    };
    match cmd {
        RealCmd::Member { set, x } => {
            let a = load(&set.set)?;
            let x = parse_exact(x)?;
            let member = a.membership(&x);
            Ok((json!({"member": member}), format!("member = {member}")))
        }
        RealCmd::Pk { set } => {
            let a = load(&set.set)?;
            let pk = a.pk()?;
            Ok((real_set_value(&pk), format!("Pk: D = {:?}", pk.d())))
        }
        RealCmd::Pf { set } => {
            let a = load(&set.set)?;
            let pf = a.pf()?;
            Ok((real_set_value(&pf), format!("Pf: E = {:?}", pf.e())))
        }
        RealCmd::St { set } => {
            let a = load(&set.set)?;
            let st = a.st()?;
            let cells: Vec<Value> = st
                .cells()
                .iter()
                .map(|c| serde_json::to_value(io::cell_to_dto(c)).expect("serializable"))
                .collect();
            Ok((json!({"start": cells}), format!("St = {st:?}")))
        }
        RealCmd::Delta { set } => {
            let a = load(&set.set)?;
            let d = a.delta()?;
            Ok((sup_to_value(&d), format!("delta = {d:?}")))
        }
        RealCmd::Coc { set } => {
            let a = load(&set.set)?;
            let c = a.coc()?;
            Ok((ray_to_value(&c), format!("Coc = {c:?}")))
        }
        RealCmd::Sigma { set } => {
            let a = load(&set.set)?;
            let s = a.sigma()?;
            Ok((sup_to_value(&s), format!("sigma = {s:?}")))
        }
        RealCmd::Classify { set } => {
            let a = load(&set.set)?;
            let c = a.classify()?;
            Ok((json!({"class": format!("{c:?}")}), format!("{c:?}")))
        }
        RealCmd::Semigroup { set } => {
            let a = load(&set.set)?;
            let criterion = a.is_semigroup()?;
            let oracle = a.semigroup_closure_oracle()?;
            Ok((
                json!({"semigroup": criterion, "closure_oracle": oracle,
                       "discrepancy": criterion != oracle}),
                format!("semigroup = {criterion} (closure oracle = {oracle})"),
            ))
        }
        RealCmd::Subgroup { set } => {
            let a = load(&set.set)?;
            let s = a.is_subgroup()?;
            Ok((json!({"subgroup": s}), format!("subgroup = {s}")))
        }
        RealCmd::Rescale { set, b } => {
            let a = load(&set.set)?;
            let b = parse_rational(b).map_err(|e| fail("usage", e))?;
            let scaled = a.rescale(&b)?;
            Ok((
                real_set_value(&scaled),
                format!(
                    "rescaled: D = {:?}, E = {:?}, mirrored = {}",
                    scaled.d(),
                    scaled.e(),
                    scaled.is_mirrored()
                ),
            ))
        }
        RealCmd::Project { set, x } => {
            let a = load(&set.set)?;
            let x = parse_exact(x)?;
            let p = a.project(&x)?;
            Ok((
                json!({"part": format!("{:?}", p.part),
                       "generator": p.generator.to_string(),
                       "shift": p.shift.to_string()}),
                format!(
                    "{:?} part, generator {}, shift {}",
                    p.part, p.generator, p.shift
                ),
            ))
        }
        RealCmd::Mix { h1, h2 } => {
            let h1 = load(h1)?;
            let h2 = load(h2)?;
            let mixed = realline::construct_mixed(&h1, &h2)?;
            Ok((
                real_set_value(&mixed),
                "third-class semigroup built".to_string(),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, human)) => {
            if cli.json {
                println!("{value}");
            } else {
                println!("{human}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.kind == "verify" {
                // verify failures still print the full report on stdout
                println!("{}", f.message);
            } else {
                eprintln!("{}", json!({"error": f.message, "kind": f.kind}));
            }
            ExitCode::from(1)
        }
    }
}
