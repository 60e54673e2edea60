//! Thin CLI over the library: run corpus verifications, Koszul homology,
//! Čech cohomology tables and the weak-proregularity tester on fixture
//! rings. Exit codes: 0 all pass, 1 some failure, 2 unknown/bound-exhausted
//! present, 3 usage or malformed input.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;
use torsionlab::corpus::report::Status;
use torsionlab::corpus::{self, CheckParams};
use torsionlab::graded::{CyclicModule, Window};
use torsionlab::homology::cech::cech_dims;
use torsionlab::homology::koszul::{koszul_homology_dims, koszul_homology_integers, KoszulComplexSpec};
use torsionlab::homology::wpr::{wpr_test, WprInstance, WprVerdict};
use torsionlab::rings::monomial::Monomial;
use torsionlab::rings::mpoly::{MonomialRing, VarSet};
use torsionlab::rings::serial;
use torsionlab::rings::{RingDescriptor, RingElement};

#[derive(Parser)]
#[command(name = "torsionlab", version, about = "Exact torsion-functor and local-cohomology laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run corpus checks (all of them by default)
    Verify {
        /// Check ids, e.g. 2.120 or 3.x
        ids: Vec<String>,
        #[command(flatten)]
        params: ParamArgs,
        /// Emit the canonical JSON report instead of a table
        #[arg(long)]
        json: bool,
    },
    /// List the corpus check ids and what they verify
    List,
    /// Koszul homology dimensions H_i(a^u, R) on a window
    Koszul {
        /// Path to a ring descriptor JSON file (not needed with --integers)
        #[arg(long)]
        ring: Option<PathBuf>,
        /// Comma-separated monomials, e.g. x,y or x^2*y
        #[arg(long)]
        seq: Option<String>,
        /// Integer sequence over the integers, e.g. 6,10
        #[arg(long)]
        integers: Option<String>,
        /// Homological degree i
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Power u of the sequence
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[arg(long, default_value = "0:6", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        json: bool,
    },
    /// Čech cohomology table with stabilization powers
    Cohomology {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        seq: String,
        /// Cohomological degree i
        #[arg(long, default_value_t = 0)]
        degree: usize,
        #[arg(long, default_value = "-4:4", allow_hyphen_values = true)]
        window: String,
        /// Extra powers to try past the per-piece floor
        #[arg(long, default_value_t = 6)]
        power_bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Weak-proregularity tester
    Wpr {
        #[command(flatten)]
        ring: RingArg,
        /// Sequence (for graded/schematic fixtures), e.g. x or x,y
        #[arg(long)]
        seq: Option<String>,
        /// Bounds U V for the pro-zero search
        #[arg(long, num_args = 2, default_values_t = [4u32, 8])]
        bounds: Vec<u32>,
        /// Degree bound for witness searches in schematic families
        #[arg(long, default_value_t = 10)]
        degree_bound: u32,
        #[arg(long, default_value = "total:6", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long, default_value_t = 12)]
    bound: u32,
    #[arg(long, default_value_t = 8)]
    window: u32,
    #[arg(long, default_value_t = 0x7012_5AB5)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long, default_value_t = 2)]
    levels: u32,
    #[arg(long, default_value_t = 100)]
    samples: u32,
}

impl ParamArgs {
    fn to_params(&self) -> CheckParams {
        CheckParams {
            bound: self.bound,
            window: self.window,
            seed: self.seed,
            p: self.p,
            levels: self.levels,
            samples: self.samples,
        }
    }
}

#[derive(Args)]
struct RingArg {
    /// Path to a ring descriptor JSON file
    #[arg(long)]
    ring: PathBuf,
}

struct UsageError(String);

impl From<String> for UsageError {
    fn from(s: String) -> Self {
        UsageError(s)
    }
}

fn load_ring(path: &PathBuf) -> Result<(RingDescriptor, Vec<RingElement>), UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("invalid JSON in {}: {e}", path.display()))?;
    serial::ring_with_generators_from_json(&value).map_err(|e| UsageError(e.to_string()))
}

fn monomial_ring_of(ring: &RingDescriptor) -> Result<MonomialRing, UsageError> {
    match ring {
        RingDescriptor::Monomial(r) => Ok(r.clone()),
        _ => Err(UsageError(format!("{} fixtures have no monomial grading", ring.family()))),
    }
}

fn parse_seq(ring: &MonomialRing, seq: &str) -> Result<Vec<Monomial>, UsageError> {
    seq.split(',')
        .map(|s| {
            ring.parse_monomial(s.trim())
                .ok_or_else(|| UsageError(format!("cannot parse monomial '{s}' in this ring")))
        })
        .collect()
}

/// "a:b" (all variables), "a:b,c:d" (per variable) or "total:N".
fn parse_window(spec: &str, nvars: usize) -> Result<Window, UsageError> {
    if let Some(total) = spec.strip_prefix("total:") {
        let cap: i32 = total.parse().map_err(|_| format!("bad window '{spec}'"))?;
        return Ok(Window::nonneg_total(nvars, cap));
    }
    let ranges: Vec<(i32, i32)> = spec
        .split(',')
        .map(|part| {
            let (lo, hi) = part
                .split_once(':')
                .ok_or_else(|| format!("bad window component '{part}'"))?;
            let lo: i32 = lo.trim().parse().map_err(|_| format!("bad window bound '{lo}'"))?;
            let hi: i32 = hi.trim().parse().map_err(|_| format!("bad window bound '{hi}'"))?;
            Ok::<(i32, i32), String>((lo, hi))
        })
        .collect::<Result<_, _>>()?;
    let ranges = if ranges.len() == 1 {
        vec![ranges[0]; nvars]
    } else if ranges.len() == nvars {
        ranges
    } else {
        return Err(UsageError(format!(
            "window has {} components but the ring has {nvars} variables",
            ranges.len()
        )));
    };
    Ok(Window::boxed(
        ranges.iter().map(|r| r.0).collect(),
        ranges.iter().map(|r| r.1).collect(),
    ))
}

fn run() -> Result<ExitCode, UsageError> {
    let cli = Cli::try_parse().map_err(|e| {
        // let clap print its own help/version output
        if e.use_stderr() {
            UsageError(e.to_string())
        } else {
            e.print().ok();
            std::process::exit(0);
        }
    })?;

    match cli.command {
        Command::List => {
            for (id, description) in corpus::reference_index() {
                println!("{id:14} {description}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { ids, params, json } => {
            let params = params.to_params();
            let ids: Vec<String> = if ids.is_empty() {
                corpus::CHECK_IDS.iter().map(|s| s.to_string()).collect()
            } else {
                ids
            };
            let mut checks = Vec::new();
            for id in &ids {
                let report = corpus::run_check(id, &params).map_err(|e| UsageError(e.to_string()))?;
                checks.push(report);
            }
            let suite = corpus::report::SuiteReport { checks };
            if json {
                println!("{}", serde_json::to_string_pretty(&suite.to_json(true)).unwrap());
            } else {
                for c in &suite.checks {
                    println!("{:14} {:8} {:5} ms  {} sub-checks", c.check_id, c.status().as_str(), c.runtime_ms, c.witnesses.len());
                    for w in &c.witnesses {
                        println!("    [{:^15}] {}: {}", w.status.as_str(), w.claim, w.detail);
                    }
                }
                println!("overall: {}", suite.status().as_str());
            }
            Ok(exit_of(suite.status()))
        }
        Command::Koszul { ring, seq, integers, degree, power, window, json } => {
            if let Some(ints) = integers {
                let seq: Vec<i64> = ints
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| format!("bad integer '{s}'")))
                    .collect::<Result<_, String>>()?;
                let hs = koszul_homology_integers(&seq).map_err(|e| UsageError(e.to_string()))?;
                if json {
                    let pieces: Vec<_> = hs
                        .iter()
                        .enumerate()
                        .map(|(i, h)| json!({"degree": i, "rank": h.rank, "invariant_factors": h.invariant_factors.iter().map(|d| d.to_string()).collect::<Vec<_>>()}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&json!({"op": "koszul-integers", "sequence": seq, "pieces": pieces})).unwrap());
                } else {
                    for (i, h) in hs.iter().enumerate() {
                        println!("H_{i} = {h}");
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            let ring = ring.ok_or_else(|| UsageError("--ring is required without --integers".into()))?;
            let (descriptor, _) = load_ring(&ring)?;
            let mring = monomial_ring_of(&descriptor)?;
            let module = CyclicModule::ring_as_module(mring.clone());
            let seq = seq.ok_or_else(|| UsageError("--seq is required".into()))?;
            let monomials = parse_seq(&mring, &seq)?;
            let w = parse_window(&window, mring.num_vars())?;
            let spec = KoszulComplexSpec::new(monomials, power).map_err(|e| UsageError(e.to_string()))?;
            let dims = koszul_homology_dims(&module, &spec, degree, &w)
                .map_err(|e| UsageError(e.to_string()))?;
            if json {
                let pieces: Vec<_> = dims.iter().map(|(d, n)| json!({"degree": d, "dim": n})).collect();
                println!("{}", serde_json::to_string_pretty(&json!({"op": "koszul", "i": degree, "power": power, "pieces": pieces})).unwrap());
            } else {
                for (d, n) in dims.iter().filter(|(_, n)| *n > 0) {
                    println!("H_{degree}(a^{power})_{d:?} has dim {n}");
                }
                let total: usize = dims.iter().map(|(_, n)| n).sum();
                println!("total over window: {total}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology { ring, seq, degree, window, power_bound, json } => {
            let (descriptor, _) = load_ring(&ring.ring)?;
            let mring = monomial_ring_of(&descriptor)?;
            let module = CyclicModule::ring_as_module(mring.clone());
            let monomials = parse_seq(&mring, &seq)?;
            let w = parse_window(&window, mring.num_vars())?;
            let pieces = cech_dims(&module, &monomials, degree, &w, power_bound)
                .map_err(|e| UsageError(e.to_string()))?;
            let exhausted = pieces.iter().filter(|p| p.stabilized_at.is_none()).count();
            if json {
                let rows: Vec<_> = pieces
                    .iter()
                    .map(|p| json!({"degree": p.degree, "dim": p.dim, "stabilized_at": p.stabilized_at}))
                    .collect();
                let verdict = if exhausted == 0 { "stabilized" } else { "bound-exhausted" };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "op": "cech",
                        "i": degree,
                        "window": [w.lo, w.hi],
                        "pieces": rows,
                        "verdict": verdict,
                    }))
                    .unwrap()
                );
            } else {
                for p in pieces.iter().filter(|p| p.dim > 0 || p.stabilized_at.is_none()) {
                    match p.stabilized_at {
                        Some(u) => println!("H^{degree} at {:?}: dim {} (stabilized at u = {u})", p.degree, p.dim),
                        None => println!("H^{degree} at {:?}: dim {} (bound exhausted)", p.degree, p.dim),
                    }
                }
                let total: usize = pieces.iter().map(|p| p.dim).sum();
                println!("total over window: {total}; unstabilized pieces: {exhausted}");
            }
            Ok(if exhausted == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
        }
        Command::Wpr { ring, seq, bounds, degree_bound, window, json } => {
            let (descriptor, generators) = load_ring(&ring.ring)?;
            let (u_bound, v_bound) = (bounds[0], bounds[1]);
            let instance = match &descriptor {
                RingDescriptor::Monomial(r) => {
                    let seq = seq.ok_or_else(|| UsageError("--seq is required for monomial rings".into()))?;
                    let monomials = parse_seq(r, &seq)?;
                    match (&r.vars, monomials.as_slice()) {
                        // schematic variable families go through the
                        // normal-form witness search; a graded window would
                        // silently miss the high-index cycles
                        (VarSet::Indexed { .. } | VarSet::HeadIndexed { .. }, [single]) => {
                            let vars: Vec<u32> = single.support().collect();
                            if vars.len() != 1 || single.total_degree() != 1 {
                                return Err(UsageError("schematic fixtures need a single-variable sequence".into()));
                            }
                            WprInstance::PrincipalSchematic {
                                ring: r.clone(),
                                variable: vars[0],
                                degree_bound,
                            }
                        }
                        (VarSet::Named(_), _) => WprInstance::GradedMonomial {
                            module: CyclicModule::ring_as_module(r.clone()),
                            sequence: monomials,
                            window: parse_window(&window, r.num_vars())?,
                        },
                        _ => {
                            return Err(UsageError(
                                "schematic fixtures need a single-variable sequence".into(),
                            ))
                        }
                    }
                }
                RingDescriptor::TowerLocalized(r) => WprInstance::TowerPrincipal { ring: *r },
                RingDescriptor::ProductOfFields(r) => {
                    let e = match generators.first() {
                        Some(RingElement::Product(e)) => e.clone(),
                        _ => return Err(UsageError("product fixtures need an idempotent generator".into())),
                    };
                    WprInstance::ProductIdempotent { ring: *r, idempotent: e }
                }
                RingDescriptor::EventualSequences(r) => {
                    let e = match generators.first() {
                        Some(RingElement::Eventual(e)) => e.clone(),
                        _ => return Err(UsageError("sequence fixtures need an idempotent generator".into())),
                    };
                    WprInstance::EventualIdempotent { ring: *r, idempotent: e }
                }
                other => {
                    return Err(UsageError(format!(
                        "the tester does not handle the {} family",
                        other.family()
                    )))
                }
            };
            let verdict = wpr_test(&instance, u_bound, v_bound).map_err(|e| UsageError(e.to_string()))?;
            let (text, code) = match &verdict {
                WprVerdict::ProZeroCertified { pairs, detail } => (
                    format!("ProZeroCertified: {} pairs; {detail}", pairs.len()),
                    ExitCode::SUCCESS,
                ),
                WprVerdict::NotProZeroUpTo { v_bound, u, witness } => (
                    format!("NotProZeroUpTo({v_bound}) at u = {u}: {witness}"),
                    ExitCode::SUCCESS,
                ),
                WprVerdict::Unknown { reason } => (format!("Unknown: {reason}"), ExitCode::from(2)),
            };
            if json {
                let v = match &verdict {
                    WprVerdict::ProZeroCertified { pairs, detail } => json!({
                        "kind": "pro-zero-certified",
                        "pairs": pairs.iter().map(|p| json!([p.homological_degree, p.u, p.v])).collect::<Vec<_>>(),
                        "detail": detail,
                    }),
                    WprVerdict::NotProZeroUpTo { v_bound, u, witness } => json!({
                        "kind": "not-pro-zero-up-to",
                        "v_bound": v_bound,
                        "u": u,
                        "witness": witness,
                    }),
                    WprVerdict::Unknown { reason } => json!({"kind": "unknown", "reason": reason}),
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "op": "wpr",
                        "bounds": [u_bound, v_bound],
                        "verdict": v,
                    }))
                    .unwrap()
                );
            } else {
                println!("{text}");
            }
            Ok(code)
        }
    }
}

fn exit_of(status: Status) -> ExitCode {
    match status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
        Status::Unknown => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}
