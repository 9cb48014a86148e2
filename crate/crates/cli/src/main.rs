use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::Value;

use cqg_core::chartable::{char_table_to_fusion_ring, haar_orthonormality_check};
use cqg_core::connectedness::{connectedness_report, torsion_check, TorsionVerdict, DEFAULT_CAP};
use cqg_core::fusion::{validate, RingElement, RingRef, Su2};
use cqg_core::group::{
    ball_sizes, element_order, group_fusion_ring, growth_degree_estimate, kaplansky_witness, ElementOrder,
    GroupElement, DEFAULT_BALL_LIMIT,
};
use cqg_core::io::{self, FusionRingDoc, WitnessDoc};
use cqg_core::irreducibility::{
    bounded_group_ring_search, bounded_zero_divisor_search, commutative_domain_decision, multimatrix_zero_divisor,
    witness_from_torsion, DomainDecision, ZeroDivisorWitness, DEFAULT_SEED,
};
use cqg_core::Error;

const SUCCESS: u8 = 0;
const NEGATIVE: u8 = 1;
const INCONCLUSIVE: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "cqg", version, about = "Exact fusion-ring and group-ring computations")]
struct Cli {
    /// Also write a machine-readable report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fusion-ring axioms.
    Validate { ring: PathBuf },
    /// Multiply two ring elements.
    Tensor { ring: PathBuf, x: String, y: String },
    /// Decide whether an irreducible is torsion.
    Torsion {
        /// Ring file followed by the irreducible, or only the irreducible with --su2.
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        /// Use the built-in representation ring of SU(2).
        #[arg(long)]
        su2: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// List the torsion irreducibles of a finite ring.
    Connected { ring: PathBuf },
    /// Domain decision for a commutative finite ring (seed from CQG_SEED).
    Domain {
        ring: PathBuf,
        #[arg(long, default_value_t = 64)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        height: u64,
    },
    /// Zero-divisor witness from a torsion irreducible.
    Witness {
        ring: PathBuf,
        irrep: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exhaustive search for a zero product among small elements.
    Search {
        ring: PathBuf,
        #[arg(long, default_value_t = 2)]
        support: usize,
        #[arg(long, default_value_t = 1)]
        height: u64,
    },
    /// Check a character table and convert it to a fusion ring.
    IngestChartable { table: PathBuf },
    /// Computations in a discrete group.
    Group {
        group: PathBuf,
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Central-idempotent witness in a sum of matrix algebras.
    Multimatrix {
        #[arg(required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// Order of an element (a name from the file or a normal form).
    Order {
        element: String,
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
    /// Witness (1 - g)(1 + g + ... + g^(n-1)) = 0.
    Kaplansky {
        element: String,
        #[arg(long, default_value_t = 64)]
        cap: u64,
    },
    /// Ball sizes in the standard generators, or in the given ones.
    Balls {
        #[arg(long, default_value_t = 10)]
        radius: usize,
        /// Comma-separated generators; must be closed under inverses.
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_BALL_LIMIT)]
        limit: usize,
    },
    /// Growth-degree estimate from ball sizes.
    Growth {
        #[arg(long, default_value_t = 14)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_BALL_LIMIT)]
        limit: usize,
    },
    /// Fusion ring of a finite group.
    Fusion,
    /// Exhaustive zero-product search over a ball of the group.
    Search {
        #[arg(long, default_value_t = 2)]
        window: usize,
        #[arg(long, default_value_t = 2)]
        support: usize,
        #[arg(long, default_value_t = 1)]
        height: u64,
    },
}

/// What a command produced: a human report, an optional machine report and
/// an exit status.
struct Outcome {
    text: String,
    doc: Option<Value>,
    status: u8,
}

impl Outcome {
    fn new(text: impl Into<String>, doc: Option<Value>, status: u8) -> Self {
        Outcome {
            text: text.into(),
            doc,
            status,
        }
    }
}

type CmdResult = Result<Outcome, Error>;

fn exit_status(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } | Error::TorsionFreeAtCap(_) | Error::Unsupported(_) => INCONCLUSIVE,
        Error::TrivialRepresentation
        | Error::NoDimensionFunction
        | Error::InconsistentDimension { .. }
        | Error::SingleBlock
        | Error::IdentityElement
        | Error::InfiniteGroup
        | Error::NotOrthonormal
        | Error::NonIntegralMultiplicity { .. }
        | Error::NegativeMultiplicity { .. }
        | Error::WitnessRejected(_) => NEGATIVE,
        _ => USAGE,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_ring(path: &Path) -> Result<RingRef, Error> {
    io::parse_ring(&read(path)?)
}

fn seed() -> Result<u64, Error> {
    match std::env::var("CQG_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("CQG_SEED must be an unsigned integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn witness_outcome(w: &ZeroDivisorWitness, heading: &str) -> CmdResult {
    let doc = WitnessDoc::from_witness(w)?;
    let status = if doc.verified { SUCCESS } else { NEGATIVE };
    let text = format!(
        "{heading}\n  a = {}\n  b = {}\n  derivation: {}\n  verified: {}",
        w.factors_display().0,
        w.factors_display().1,
        w.derivation.kind(),
        doc.verified
    );
    Ok(Outcome::new(text, Some(serde_json::to_value(doc)?), status))
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Validate { ring } => {
            let r = load_ring(&ring)?;
            let Some(finite) = r.as_finite() else {
                return Err(Error::LazyRingRejected);
            };
            let report = validate(finite);
            let mut text = format!("rank {}: ", finite.rank());
            if report.passed() {
                text.push_str("all axioms hold");
            } else {
                text.push_str(&format!("{} violation(s)", report.violations.len()));
                for v in &report.violations {
                    text.push_str(&format!("\n  {v}"));
                }
            }
            let status = if report.passed() { SUCCESS } else { NEGATIVE };
            Ok(Outcome::new(text, Some(io::validation_doc(&report)), status))
        }
        Command::Tensor { ring, x, y } => {
            let r = load_ring(&ring)?;
            let (a, b) = (RingElement::parse(&r, &x)?, RingElement::parse(&r, &y)?);
            let p = a.multiply(&b)?;
            let doc = serde_json::json!({
                "kind": "product",
                "x": a.to_string(),
                "y": b.to_string(),
                "product": p.to_string(),
            });
            Ok(Outcome::new(format!("({a}) * ({b}) = {p}"), Some(doc), SUCCESS))
        }
        Command::Torsion { args, su2, cap } => {
            let (r, irrep): (RingRef, &str) = match (su2, args.as_slice()) {
                (true, [irrep]) => (Arc::new(Su2), irrep),
                (false, [ring, irrep]) => (load_ring(Path::new(ring))?, irrep),
                _ => return Err(Error::Parse("expected `torsion <ring.json> <irrep>` or `torsion --su2 <irrep>`".into())),
            };
            let u = RingElement::parse(&r, irrep)?;
            let verdict = torsion_check(&u, cap)?;
            let doc = io::torsion_doc(&r, irrep, &verdict);
            Ok(match &verdict {
                TorsionVerdict::Torsion { closure } => {
                    let names: Vec<_> = closure.members.iter().map(|&i| r.label(i)).collect();
                    Outcome::new(format!("{irrep} is torsion; closure {{{}}}", names.join(", ")), Some(doc), SUCCESS)
                }
                TorsionVerdict::Inconclusive { stage, support } => Outcome::new(
                    format!("{irrep}: inconclusive, closure reached {support} irreducibles at cap {stage}"),
                    Some(doc),
                    INCONCLUSIVE,
                ),
            })
        }
        Command::Connected { ring } => {
            let r = load_ring(&ring)?;
            let report = connectedness_report(&r)?;
            let text = match &report {
                cqg_core::connectedness::ConnectednessReport::Connected => "connected".to_string(),
                cqg_core::connectedness::ConnectednessReport::NotConnected { torsion } => {
                    let names: Vec<_> = torsion.iter().map(|t| t.label.as_str()).collect();
                    format!("not connected; nontrivial torsion irreducibles: {}", names.join(", "))
                }
            };
            Ok(Outcome::new(text, Some(io::connectedness_doc(&r, &report)), SUCCESS))
        }
        Command::Domain { ring, trials, height } => {
            let r = load_ring(&ring)?;
            let seed = seed()?;
            let decision = commutative_domain_decision(&r, trials, height, seed)?;
            let doc = io::domain_doc(&decision)?;
            Ok(match &decision {
                DomainDecision::Domain { x, min_poly, .. } => Outcome::new(
                    format!("domain: {x} has irreducible minimal polynomial {min_poly} of full degree (seed {seed})"),
                    Some(doc),
                    SUCCESS,
                ),
                DomainDecision::NotDomain { witness, .. } => {
                    let text = format!("not a domain: {witness} (seed {seed})");
                    Outcome::new(text, Some(doc), SUCCESS)
                }
                DomainDecision::Undecided { trials, .. } => {
                    Outcome::new(format!("undecided after {trials} samples (seed {seed})"), Some(doc), INCONCLUSIVE)
                }
                DomainDecision::Inapplicable { reason } => {
                    Outcome::new(format!("inapplicable: {reason}"), Some(doc), INCONCLUSIVE)
                }
            })
        }
        Command::Witness { ring, irrep, cap } => {
            let r = load_ring(&ring)?;
            let u = RingElement::parse(&r, &irrep)?;
            witness_outcome(&witness_from_torsion(&u, cap)?, &format!("zero divisors from {irrep}"))
        }
        Command::Search { ring, support, height } => {
            let r = load_ring(&ring)?;
            match bounded_zero_divisor_search(&r, support, height)? {
                Some(w) => witness_outcome(&w, "found"),
                None => Ok(Outcome::new(
                    format!("no zero product with support <= {support} and height <= {height}"),
                    Some(serde_json::json!({ "kind": "search", "found": false, "support": support, "height": height })),
                    INCONCLUSIVE,
                )),
            }
        }
        Command::IngestChartable { table } => {
            let t = io::parse_table(&read(&table)?)?;
            let gram = haar_orthonormality_check(&t)?;
            if !gram.passed() {
                let mut text = "characters are not orthonormal:".to_string();
                for (i, j, v) in &gram.deviations {
                    text.push_str(&format!("\n  <{}, {}> = {v}", t.labels[*i], t.labels[*j]));
                }
                return Ok(Outcome::new(text, Some(io::gram_doc(&gram)), NEGATIVE));
            }
            let ring = char_table_to_fusion_ring(&t)?;
            let mut text = format!("orthonormal; fusion ring of rank {}", ring.rank());
            for i in 0..ring.rank() {
                for j in i..ring.rank() {
                    let r = ring.clone().into_ref();
                    let p = RingElement::basis(&r, i)?.multiply(&RingElement::basis(&r, j)?)?;
                    text.push_str(&format!("\n  {} * {} = {p}", ring.labels()[i], ring.labels()[j]));
                }
            }
            let doc = serde_json::to_value(FusionRingDoc::from_ring(&ring, None))?;
            Ok(Outcome::new(text, Some(doc), SUCCESS))
        }
        Command::Group { group, action } => run_group(&group, action),
        Command::Multimatrix { sizes } => {
            witness_outcome(&multimatrix_zero_divisor(&sizes)?, &format!("central idempotents of {sizes:?}"))
        }
    }
}

fn run_group(path: &Path, action: GroupAction) -> CmdResult {
    let (doc, group) = io::parse_group(&read(path)?)?;
    let group = Arc::new(group);
    match action {
        GroupAction::Order { element, cap } => {
            let g = doc.element(&group, &element)?;
            let order = element_order(&group, &g, cap)?;
            let label = group.label(&g);
            let vdoc = io::order_doc(&label, &order, cap);
            Ok(match order {
                ElementOrder::Order(n) => Outcome::new(format!("{label} has order {n}"), Some(vdoc), SUCCESS),
                ElementOrder::ExceedsCap => {
                    Outcome::new(format!("{label} has order > {cap}"), Some(vdoc), INCONCLUSIVE)
                }
            })
        }
        GroupAction::Kaplansky { element, cap } => {
            let g = doc.element(&group, &element)?;
            let w = kaplansky_witness(&group, &g, cap)?;
            witness_outcome(&w, &format!("zero divisors from {}", group.label(&g)))
        }
        GroupAction::Balls { radius, gens, limit } => {
            let gens: Vec<GroupElement> = match gens {
                Some(list) => list
                    .iter()
                    .map(|s| doc.element(&group, s))
                    .collect::<Result<_, _>>()?,
                None => group.standard_generators(),
            };
            let balls = ball_sizes(&group, &gens, radius, limit)?;
            let sizes: Vec<String> = balls.sizes.iter().map(u64::to_string).collect();
            let mut text = format!("|B_0..B_{}| = {}", balls.sizes.len() - 1, sizes.join(" "));
            if balls.truncated {
                text.push_str(&format!("\n  stopped at {limit} elements"));
            }
            let status = if balls.truncated { INCONCLUSIVE } else { SUCCESS };
            Ok(Outcome::new(text, Some(io::balls_doc(&balls)), status))
        }
        GroupAction::Growth { radius, limit } => {
            let balls = ball_sizes(&group, &group.standard_generators(), radius, limit)?;
            let est = growth_degree_estimate(&balls.sizes)?;
            let class = match est.classification {
                cqg_core::group::GrowthClass::Polynomial(d) => format!("polynomial of degree {d}"),
                cqg_core::group::GrowthClass::ExponentialSuspected => "exponential suspected".into(),
            };
            let text = format!("doubling slope {:.3} at m = {}; {class}", est.slope, est.m);
            let status = if balls.truncated { INCONCLUSIVE } else { SUCCESS };
            Ok(Outcome::new(text, Some(io::growth_doc(&est, balls.truncated)), status))
        }
        GroupAction::Fusion => {
            let ring = group_fusion_ring(&group)?;
            let fdoc = FusionRingDoc::from_ring(&ring, doc.name.clone());
            let text = format!(
                "fusion ring of rank {} ({})",
                ring.rank(),
                if ring.is_commutative() { "commutative" } else { "noncommutative" }
            );
            Ok(Outcome::new(text, Some(serde_json::to_value(fdoc)?), SUCCESS))
        }
        GroupAction::Search { window, support, height } => match bounded_group_ring_search(&group, window, support, height)? {
            Some(w) => witness_outcome(&w, "found"),
            None => Ok(Outcome::new(
                format!("no zero product over the radius-{window} ball with support <= {support} and height <= {height}"),
                Some(serde_json::json!({
                    "kind": "search", "found": false, "window": window, "support": support, "height": height,
                })),
                INCONCLUSIVE,
            )),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { SUCCESS });
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.text);
            if let (Some(path), Some(doc)) = (&cli.json, &outcome.doc) {
                let written = io::to_json(doc).and_then(|text| {
                    std::fs::write(path, text).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
                });
                if let Err(e) = written {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE);
                }
            }
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
    }
}
