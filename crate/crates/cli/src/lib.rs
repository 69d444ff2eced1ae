//! The `eqkit` command line.
//!
//! Exit codes: 0 when every check passes, 1 on any failure, 2 when the only
//! non-passing checks are inconclusive, 64 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use eqkit::hopf::{equitable_hopf_formula_check, HopfData, PrimitiveKind};
use eqkit::presentation::MembershipConfig;
use eqkit::report::{emit_report, CheckEntry, ReportFormat, VerificationReport, Witness};
use eqkit::{
    compute_symmetrizer, parse_cartan_file, parse_expression, Error, Flavor, IsoMaps, NCPoly, PresentationSpec,
    SymmetrizedCartan,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "eqkit", version, about = "Symbolic checks for the Chevalley and equitable presentations of U_q(g)")]
struct Cli {
    /// Cartan matrix file: the rank, then one row per line.
    #[arg(long, global = true, value_name = "FILE")]
    cartan: Option<PathBuf>,
    #[arg(long, global = true, default_value = "chevalley")]
    flavor: Flavor,
    /// Rewrite step budget per normal-form call (default: $EQKIT_FUEL or 1000000).
    #[arg(long, global = true)]
    fuel: Option<u64>,
    /// Seed for the random evaluation points of sampled membership.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest multidegree enumerated by Serre-ideal membership.
    #[arg(long, global = true, value_name = "N")]
    degree_cap: Option<usize>,
    #[arg(long, global = true, default_value = "text")]
    format: ReportFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Cartan matrix and print its symmetrizer.
    Validate,
    /// Certify the isomorphism between the two presentations.
    Verify,
    /// Print the normal form of an expression.
    Reduce { expr: String },
    /// Decide whether an expression vanishes in the algebra.
    Member {
        expr: String,
        /// Decide by evaluation at random rational points instead of exactly.
        #[arg(long)]
        sampled: bool,
    },
    /// Check the Hopf axioms; for the equitable flavor also the formulas
    /// against the Chevalley structure.
    HopfCheck,
    /// Test whether `u` is (quasi) twisted primitive for the group-like `g`.
    Twisted {
        u: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        quasi: bool,
    },
    /// Solve for the (quasi) twisted primitives among bounded monomials.
    SolveTwisted {
        #[arg(long)]
        g: String,
        #[arg(long, default_value_t = 1)]
        bound: usize,
        #[arg(long)]
        quasi: bool,
    },
}

struct Context {
    sc: SymmetrizedCartan,
    fuel: Option<u64>,
    membership: MembershipConfig,
}

impl Context {
    fn presentation(&self, flavor: Flavor) -> PresentationSpec {
        let p = PresentationSpec::new(flavor, &self.sc).with_membership(self.membership.clone());
        match self.fuel {
            Some(f) => p.with_fuel(f),
            None => p,
        }
    }

    fn parse(&self, text: &str, flavor: Flavor) -> eqkit::Result<NCPoly> {
        Ok(parse_expression(text, flavor, &self.sc)?.poly)
    }
}

fn load_cartan(path: &Path) -> Result<SymmetrizedCartan, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let gcm = parse_cartan_file(&text).map_err(describe)?;
    compute_symmetrizer(gcm).map_err(describe)
}

fn describe(e: Error) -> String {
    let kind = format!("{e:?}");
    let kind = kind.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string();
    format!("{kind}: {e}")
}

/// Runs one invocation, writing the report to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let path = cli.cartan.as_deref().ok_or("--cartan <FILE> is required")?;
    let sc = load_cartan(path)?;
    let mut membership = MembershipConfig::default();
    if let Some(seed) = cli.seed {
        membership.seed = seed;
    }
    if let Some(cap) = cli.degree_cap {
        membership.degree_cap = cap;
    }
    let ctx = Context { sc, fuel: cli.fuel, membership };
    let flavor = cli.flavor;
    let io = |e: std::io::Error| e.to_string();

    let report = match cli.command {
        Command::Validate => {
            writeln!(out, "{}", ctx.sc).map_err(io)?;
            return Ok(EXIT_OK);
        }
        Command::Verify => {
            let maps = IsoMaps::with_presentations(
                Arc::new(ctx.presentation(Flavor::Chevalley)),
                Arc::new(ctx.presentation(Flavor::Equitable)),
            );
            maps.verify()
        }
        Command::Reduce { expr } => {
            let p = ctx.parse(&expr, flavor).map_err(describe)?;
            return match ctx.presentation(flavor).normal_form(&p) {
                Ok(nf) => {
                    writeln!(out, "{nf}").map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(e @ Error::FuelExhausted(_)) => {
                    writeln!(err, "inconclusive: {e}").map_err(io)?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(e) => Err(describe(e)),
            };
        }
        Command::Member { expr, sampled } => {
            let p = ctx.parse(&expr, flavor).map_err(describe)?;
            let pres = ctx.presentation(flavor);
            let entry = CheckEntry::run("member", || {
                let holds = if sampled { pres.serre_ideal_member_sampled(&p)? } else { pres.serre_ideal_member(&p)? };
                Ok((!holds).then(|| Witness::Poly(pres.normal_form(&p).unwrap_or(p.clone()))))
            });
            VerificationReport::from_entries(ctx.sc.gcm().to_string(), vec![entry])
        }
        Command::HopfCheck => {
            let pres = Arc::new(ctx.presentation(flavor));
            let mut report = HopfData::standard(pres).check_hopf_axioms();
            if flavor == Flavor::Equitable {
                report.merge_prefixed("formula.", equitable_hopf_formula_check(&ctx.sc));
            }
            report
        }
        Command::Twisted { u, g, quasi } => {
            let (u, g) = (ctx.parse(&u, flavor).map_err(describe)?, ctx.parse(&g, flavor).map_err(describe)?);
            let h = HopfData::standard(Arc::new(ctx.presentation(flavor)));
            let name = if quasi { "quasi_twisted" } else { "twisted" };
            let outcome = match if quasi { h.is_quasi_twisted_primitive(&u, &g) } else { h.is_twisted_primitive(&u, &g) } {
                Err(Error::NotGroupLike) => return Err(describe(Error::NotGroupLike)),
                other => other,
            };
            VerificationReport::from_entries(
                ctx.sc.gcm().to_string(),
                vec![CheckEntry::run(name, || Ok((!outcome?).then(|| Witness::Poly(u.clone()))))],
            )
        }
        Command::SolveTwisted { g, bound, quasi } => {
            let g = ctx.parse(&g, flavor).map_err(describe)?;
            let h = HopfData::standard(Arc::new(ctx.presentation(flavor)));
            let kind = if quasi { PrimitiveKind::QuasiTwisted } else { PrimitiveKind::Twisted };
            return match h.solve_twisted_space(&g, bound, kind) {
                Ok(basis) => {
                    for u in &basis {
                        writeln!(out, "{u}").map_err(io)?;
                    }
                    writeln!(out, "dimension={}", basis.len()).map_err(io)?;
                    Ok(EXIT_OK)
                }
                Err(e @ (Error::FuelExhausted(_) | Error::WindowTooSmall { .. })) => {
                    writeln!(err, "inconclusive: {e}").map_err(io)?;
                    Ok(EXIT_INCONCLUSIVE)
                }
                Err(e) => Err(describe(e)),
            };
        }
    };

    out.write_all(emit_report(&report, cli.format).as_bytes()).map_err(io)?;
    if cli.format == ReportFormat::Text {
        for e in report.failures() {
            if let Some(w) = &e.witness {
                writeln!(err, "{} {}: {w}", e.name, e.status).map_err(io)?;
            }
        }
    }
    Ok(report.exit_code())
}
