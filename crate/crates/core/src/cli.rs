//! Command-line front end. Each subcommand produces a [`RunReport`] printed
//! as JSON on stdout; a one-line summary goes to stderr.
//!
//! Exit codes: 0 decided, 1 input error, 2 budget exceeded.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::alternation::{
    check_witness, membership_a1, membership_oracle, membership_via_gstar, MembershipVerdict, Witness,
};
use crate::embedding::{
    cut_along, min_genus, parse_embedding, surgery_reduce, write_embedding, AlternatingWitness, Budget,
};
use crate::error::{Error, Result};
use crate::formats::{parse_terminal_graph, write_canonical};
use crate::graph::TerminalGraph;
use crate::obstruction::{
    builtin_catalog, search_obstructions, torus_witness, verify_obstruction, write_catalog, Catalog, SearchConstraints,
};
use crate::planarity::{is_planar, planar, verify_planarity, Planarity};

/// Environment variable holding the default budget.
pub const BUDGET_ENV: &str = "XYALT_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "xyalt", version, about = "Two-terminal alternating embeddings")]
pub struct Cli {
    /// Node-expansion budget for exhaustive searches (graph count for `search`).
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u64>,
    /// Re-validate every witness in the report before printing it.
    #[arg(long, global = true)]
    pub check_witness: bool,
    /// Include wall-clock time in the report (it is then not byte-stable).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DeciderArg {
    /// Cut at both terminals and test planarity.
    #[value(alias = "a1")]
    Cut,
    /// Search for an alternating toroidal embedding.
    Oracle,
    /// Genus of the graph with `K5 - xy` glued on.
    Gstar,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Planarity with an embedding or a Kuratowski subgraph.
    Planar { path: PathBuf },
    /// Minimum orientable genus.
    Genus { path: PathBuf },
    /// Membership in the class.
    Membership {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "cut")]
        decider: DeciderArg,
        /// Write an alternating toroidal embedding, when the witness has
        /// one, in the text format read by `surgery`.
        #[arg(long)]
        embedding_out: Option<PathBuf>,
    },
    /// Checks whether the graph is a minor-minimal non-member.
    Verify { path: PathBuf },
    /// Exhaustive obstruction search.
    Search {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        require_xy_edge: bool,
        #[arg(long, default_value_t = 3)]
        min_degree: usize,
        /// Also write the catalog file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The built-in obstruction catalog.
    Catalog {
        /// Attach a torus embedding to each entry.
        #[arg(long)]
        torus: bool,
    },
    /// Surgery on an embedding with an alternating face, then cutting.
    Surgery { path: PathBuf },
}

#[derive(Clone, Debug, Serialize)]
pub struct BudgetStatus {
    pub limit: Option<u64>,
    pub used: u64,
    pub exceeded: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub subcommand: &'static str,
    /// SHA-256 of the input file.
    pub input_digest: Option<String>,
    pub verdict: Value,
    pub witness: Value,
    pub budget: BudgetStatus,
    /// Set when `--check-witness` was given.
    pub witness_checked: Option<bool>,
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Decided = 0,
    InputError = 1,
    BudgetExceeded = 2,
}

pub struct Outcome {
    pub report: Option<RunReport>,
    pub summary: String,
    pub status: ExitStatus,
}

fn read_input(path: &Path) -> Result<(String, String)> {
    let mut bytes = Vec::new();
    let io = |e: std::io::Error| Error::Precondition(format!("{}: {e}", path.display()));
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes).map_err(io)?;
    } else {
        bytes = std::fs::read(path).map_err(io)?;
    }
    let digest = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    let text = String::from_utf8(bytes).map_err(|_| Error::Precondition(format!("{}: not UTF-8", path.display())))?;
    Ok((text, digest))
}

fn read_graph(path: &Path) -> Result<(TerminalGraph, String)> {
    let (text, digest) = read_input(path)?;
    Ok((parse_terminal_graph(&text)?, digest))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

/// What a subcommand computed, before budget bookkeeping.
struct Run {
    digest: Option<String>,
    verdict: Value,
    witness: Value,
    checked: Option<bool>,
    summary: String,
    /// A search stopped early.
    partial: bool,
}

fn check_membership(g: &TerminalGraph, v: &MembershipVerdict) -> bool {
    check_witness(g, v).is_ok()
}

fn catalog_value(c: &Catalog) -> Value {
    json!({ "complete": c.complete, "count": c.entries.len(), "entries": c.entries, "file": write_catalog(c) })
}

fn run(cli: &Cli, budget: &mut Budget) -> Result<Run> {
    let check = cli.check_witness;
    let opt = |b: bool| check.then_some(b);
    Ok(match &cli.command {
        Command::Planar { path } => {
            let (g, digest) = read_graph(path)?;
            let p = is_planar(g.graph());
            let verdict = json!({ "planar": p.is_planar() });
            let witness = match &p {
                Planarity::Planar(e) => json!({ "embedding": e }),
                Planarity::NonPlanar(k) => json!({ "kuratowski": k }),
            };
            let summary = format!("planar: {}", p.is_planar());
            Run { digest: Some(digest), verdict, witness, checked: opt(verify_planarity(g.graph(), &p)), summary, partial: false }
        }
        Command::Genus { path } => {
            let (g, digest) = read_graph(path)?;
            let r = min_genus(&g.graph().to_multigraph(), budget)?;
            let ok = r.embedding.host().edges == g.graph().edges()
                && r.embedding.validate().is_ok()
                && r.embedding.genus() == Ok(r.genus);
            Run {
                digest: Some(digest),
                verdict: json!({ "genus": r.genus }),
                witness: json!({ "embedding": r.embedding }),
                checked: opt(ok),
                summary: format!("genus: {}", r.genus),
                partial: false,
            }
        }
        Command::Membership { path, decider, embedding_out } => {
            let (g, digest) = read_graph(path)?;
            let v = match decider {
                DeciderArg::Cut => membership_a1(&g)?,
                DeciderArg::Oracle => membership_oracle(&g, budget)?,
                DeciderArg::Gstar => membership_via_gstar(&g, budget)?,
            };
            if let Some(out) = embedding_out {
                let Witness::Alternating { component, witness } = &v.witness else {
                    return Err(Error::Precondition("witness has no alternating embedding; use --decider oracle".into()));
                };
                let at = |t: usize| component.iter().position(|&c| c == t).expect("terminals in component");
                let text = write_embedding(&witness.embedding, Some((at(g.x()), at(g.y()))));
                std::fs::write(out, text).map_err(|e| Error::Precondition(format!("{}: {e}", out.display())))?;
            }
            Run {
                digest: Some(digest),
                verdict: json!({ "member": v.member, "decider": v.decider }),
                witness: to_value(&v.witness),
                checked: opt(check && check_membership(&g, &v)),
                summary: format!("member: {}", v.member),
                partial: false,
            }
        }
        Command::Verify { path } => {
            let (g, digest) = read_graph(path)?;
            let v = verify_obstruction(&g)?;
            // The minor table is the witness; re-checking decides `g` itself
            // with a certificate and each one-step minor again.
            let ok = check && {
                let m = membership_a1(&g)?;
                check_membership(&g, &m) && m.member == v.member && v == verify_obstruction(&g)?
            };
            let tag = v.classification.as_ref().map(|c| c.tag());
            Run {
                digest: Some(digest),
                verdict: json!({
                    "member": v.member,
                    "is_obstruction": v.is_obstruction,
                    "classification": tag,
                    "canonical": write_canonical(&g),
                }),
                witness: json!({ "minors": v.minors }),
                checked: opt(ok),
                summary: format!("is_obstruction: {}", v.is_obstruction),
                partial: false,
            }
        }
        Command::Search { max_n, require_xy_edge, min_degree, out } => {
            let c = SearchConstraints {
                max_n: *max_n,
                require_xy_edge: *require_xy_edge,
                min_degree: *min_degree,
                max_graphs: budget.limit(),
            };
            let cat = search_obstructions(&c)?;
            if let Some(out) = out {
                std::fs::write(out, write_catalog(&cat))
                    .map_err(|e| Error::Precondition(format!("{}: {e}", out.display())))?;
            }
            let ok = check && verify_entries(&cat)?;
            Run {
                digest: None,
                verdict: catalog_value(&cat),
                witness: Value::Null,
                checked: opt(ok),
                summary: format!("{} obstructions{}", cat.entries.len(), if cat.complete { "" } else { " (incomplete)" }),
                partial: !cat.complete,
            }
        }
        Command::Catalog { torus } => {
            let cat = builtin_catalog()?;
            let mut witnesses = Vec::new();
            let mut ok = true;
            if *torus {
                for e in &cat.entries {
                    let g = e.terminal_graph()?;
                    let w = torus_witness(&g, budget)?;
                    ok &= w.verify(&g);
                    witnesses.push(json!({ "name": e.name, "method": w.method, "embedding": w.embedding }));
                }
            }
            if check {
                ok &= verify_entries(&cat)?;
            }
            Run {
                digest: None,
                verdict: catalog_value(&cat),
                witness: if *torus { json!({ "torus": witnesses }) } else { Value::Null },
                checked: opt(ok),
                summary: format!("{} catalog entries", cat.entries.len()),
                partial: false,
            }
        }
        Command::Surgery { path } => {
            let (text, digest) = read_input(path)?;
            let (emb, terminals) = parse_embedding(&text)?;
            let (x, y) = terminals.ok_or_else(|| Error::Precondition("embedding file has no `t x y` line".into()))?;
            let (face, positions) = emb
                .trace_faces()
                .iter()
                .enumerate()
                .find_map(|(i, f)| f.alternation(x, y).map(|p| (i, p)))
                .ok_or_else(|| Error::Precondition("no face on which the terminals alternate".into()))?;
            let w = AlternatingWitness { embedding: emb.clone(), face, positions };
            let (reduced, curve) = surgery_reduce(&emb, &w)?;
            let cut = cut_along(&reduced, &curve)?;
            let (before, after) = (emb.euler_genus(), reduced.euler_genus());
            let cut_genus = cut.embedding.euler_genus();
            let ok = check
                && after + 1 == before
                && planar(&cut.embedding.host().simple()?)
                && cut.embedding.trace_faces()[cut.face].has_cyclic_order(&[cut.x1, cut.y1, cut.x2, cut.y2]);
            Run {
                digest: Some(digest),
                verdict: json!({
                    "euler_genus_before": before,
                    "euler_genus_after": after,
                    "cut_euler_genus": cut_genus,
                    "cut_orientable": cut.embedding.is_orientable(),
                }),
                witness: json!({ "alternating_face": face, "positions": positions, "curve": curve, "reduced": reduced, "cut": cut }),
                checked: opt(ok),
                summary: format!("Euler genus {before} -> {after}"),
                partial: false,
            }
        }
    })
}

fn verify_entries(c: &Catalog) -> Result<bool> {
    for e in &c.entries {
        if !verify_obstruction(&e.terminal_graph()?)?.is_obstruction {
            return Ok(false);
        }
    }
    Ok(true)
}

fn subcommand(c: &Command) -> &'static str {
    match c {
        Command::Planar { .. } => "planar",
        Command::Genus { .. } => "genus",
        Command::Membership { .. } => "membership",
        Command::Verify { .. } => "verify",
        Command::Search { .. } => "search",
        Command::Catalog { .. } => "catalog",
        Command::Surgery { .. } => "surgery",
    }
}

/// Runs one parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let mut budget = cli.budget.map_or_else(Budget::unlimited, Budget::new);
    let start = Instant::now();
    let result = run(cli, &mut budget);
    let elapsed = start.elapsed();
    let status = |exceeded| BudgetStatus { limit: cli.budget, used: budget.used(), exceeded };
    let report = |r: &Run, exceeded| RunReport {
        subcommand: subcommand(&cli.command),
        input_digest: r.digest.clone(),
        verdict: r.verdict.clone(),
        witness: r.witness.clone(),
        budget: status(exceeded),
        witness_checked: r.checked,
        elapsed_ms: cli.timing.then_some(elapsed.as_millis()),
    };
    match result {
        Ok(r) if r.checked == Some(false) => Outcome {
            report: Some(report(&r, r.partial)),
            summary: format!("{}; witness check FAILED", r.summary),
            status: ExitStatus::InputError,
        },
        Ok(r) => Outcome {
            report: Some(report(&r, r.partial)),
            summary: format!("{} ({:.2?})", r.summary, elapsed),
            status: if r.partial { ExitStatus::BudgetExceeded } else { ExitStatus::Decided },
        },
        Err(Error::BudgetExceeded(n)) => Outcome {
            report: Some(RunReport {
                subcommand: subcommand(&cli.command),
                input_digest: None,
                verdict: Value::Null,
                witness: Value::Null,
                budget: status(true),
                witness_checked: None,
                elapsed_ms: cli.timing.then_some(elapsed.as_millis()),
            }),
            summary: format!("budget of {n} exceeded"),
            status: ExitStatus::BudgetExceeded,
        },
        Err(e) => Outcome { report: None, summary: format!("error: {e}"), status: ExitStatus::InputError },
    }
}
