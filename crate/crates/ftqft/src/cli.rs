use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ftqft_core::cochain::EquivariantCochain;
use ftqft_core::group::GSet;
use ftqft_core::Bounds;

use crate::commands;
use crate::error::CliError;
use crate::input::{
    load_cochain, load_group, load_gset, load_presentation, Input, InputRecord, LoadedCochain, LoadedGroup,
};
use crate::report::{Envelope, Outcome};

#[derive(Parser, Debug)]
#[command(name = "ftqft", version, about = "Exact computations for finite gauge theories")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for every randomized step; recorded in the report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on enumeration work units.
    #[arg(long, global = true, env = "FTQFT_MAX_WORK")]
    pub max_work: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Group structure.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Character table with exact cyclotomic values.
    Chartable(GroupArg),
    /// Cocycle condition and cohomology class of a cochain.
    Cocycle {
        #[command(subcommand)]
        action: CocycleAction,
    },
    /// Partition functions of the gauged sigma model.
    Tqft {
        #[command(subcommand)]
        action: TqftAction,
    },
    /// Frobenius algebra attached to the circle.
    Frobenius(TwistArgs),
    /// Modular data and fusion ring of the twisted Drinfeld double.
    Verlinde(VerlindeArgs),
    /// Rank identities for the Rarita-Schwinger symbol complex.
    RsVerify(RsVerifyArgs),
    /// Particle content and pfaffian bookkeeping in dimension n.
    RsContent(DimArg),
    /// Anomaly pipeline for fibers of dimension n.
    Anomaly(DimArg),
}

#[derive(Subcommand, Debug)]
pub enum GroupAction {
    Info(GroupArg),
}

#[derive(Subcommand, Debug)]
pub enum CocycleAction {
    Check(CocycleArgs),
}

#[derive(Subcommand, Debug)]
pub enum TqftAction {
    Z(TqftZArgs),
}

#[derive(Args, Debug)]
pub struct GroupArg {
    #[arg(long)]
    pub group: PathBuf,
}

#[derive(Args, Debug)]
pub struct TwistArgs {
    #[arg(long)]
    pub group: PathBuf,
    /// G-set; defaults to a point.
    #[arg(long)]
    pub gset: Option<PathBuf>,
    /// Equivariant cochain B; defaults to zero.
    #[arg(long)]
    pub cocycle: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CocycleArgs {
    #[arg(long)]
    pub group: PathBuf,
    #[arg(long)]
    pub gset: Option<PathBuf>,
    #[arg(long)]
    pub cocycle: PathBuf,
}

#[derive(Args, Debug)]
pub struct TqftZArgs {
    #[command(flatten)]
    pub twist: TwistArgs,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub dim: u8,
    #[arg(long)]
    pub genus: Option<u32>,
    /// Also count untwisted fields on a manifold with this π₁ presentation.
    #[arg(long)]
    pub presentation: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerlindeArgs {
    #[arg(long)]
    pub group: PathBuf,
    /// Transitive G-set; the theory is computed on a point stabilizer.
    #[arg(long)]
    pub gset: Option<PathBuf>,
    /// Normalized 3-cocycle; defaults to zero.
    #[arg(long)]
    pub omega: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RsVerifyArgs {
    #[arg(long)]
    pub dim: usize,
    /// Extra covector such as "1,1/2,0,0"; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Vec<String>,
    /// Number of seeded random non-null covectors.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
}

#[derive(Args, Debug)]
pub struct DimArg {
    #[arg(long)]
    pub dim: u64,
}

struct Session {
    inputs: Vec<InputRecord>,
    bounds: Bounds,
    seed: u64,
}

impl Session {
    fn read(&mut self, role: &'static str, path: &Path) -> Result<Input, CliError> {
        let input = Input::read(role, path)?;
        self.inputs.push(input.record.clone());
        Ok(input)
    }

    fn group(&mut self, path: &Path) -> Result<LoadedGroup, CliError> {
        let input = self.read("group", path)?;
        load_group(&input, &self.bounds, self.seed)
    }

    fn gset(&mut self, g: &LoadedGroup, path: Option<&PathBuf>) -> Result<Arc<GSet>, CliError> {
        match path {
            Some(p) => {
                let input = self.read("gset", p)?;
                load_gset(&input, g)
            }
            None => Ok(Arc::new(GSet::point(g.group.clone()))),
        }
    }

    fn cochain(
        &mut self,
        role: &'static str,
        g: &LoadedGroup,
        set: Option<&Arc<GSet>>,
        path: &Path,
    ) -> Result<LoadedCochain, CliError> {
        let input = self.read(role, path)?;
        load_cochain(&input, g, set)
    }

    /// Group, G-set and twist of the given degree, the twist defaulting to zero.
    fn twist(&mut self, args: &TwistArgs, degree: usize) -> Result<EquivariantCochain, CliError> {
        let g = self.group(&args.group)?;
        let set = self.gset(&g, args.gset.as_ref())?;
        let b = match &args.cocycle {
            Some(p) => self.cochain("cocycle", &g, Some(&set), p)?.on_set(&set),
            None => EquivariantCochain::zero(set, degree),
        };
        if b.degree() != degree {
            return Err(CliError::Parse(format!("expected a cochain of degree {degree}, got {}", b.degree())));
        }
        Ok(b)
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Group { .. } => "group info",
        Command::Chartable(_) => "chartable",
        Command::Cocycle { .. } => "cocycle check",
        Command::Tqft { .. } => "tqft z",
        Command::Frobenius(_) => "frobenius",
        Command::Verlinde(_) => "verlinde",
        Command::RsVerify(_) => "rs-verify",
        Command::RsContent(_) => "rs-content",
        Command::Anomaly(_) => "anomaly",
    }
}

fn dispatch(cli: &Cli, s: &mut Session) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Group { action: GroupAction::Info(a) } => Ok(commands::group_info(&s.group(&a.group)?)),
        Command::Chartable(a) => {
            let g = s.group(&a.group)?;
            commands::chartable(&g, &s.bounds)
        }
        Command::Cocycle { action: CocycleAction::Check(a) } => {
            let g = s.group(&a.group)?;
            let set = match &a.gset {
                Some(p) => Some(s.gset(&g, Some(p))?),
                None => None,
            };
            let c = s.cochain("cocycle", &g, set.as_ref(), &a.cocycle)?;
            Ok(commands::cocycle_check(&g, &c))
        }
        Command::Tqft { action: TqftAction::Z(a) } => {
            let b = s.twist(&a.twist, a.dim as usize)?;
            let mut out = if a.dim == 1 {
                commands::tqft_z_1d(&b)?
            } else {
                let genus = a.genus.ok_or_else(|| CliError::Parse("--genus is required with --dim 2".into()))?;
                commands::tqft_z_2d(&b, genus)?
            };
            if let Some(p) = &a.presentation {
                let input = s.read("presentation", p)?;
                let pres = load_presentation(&input)?;
                let count = commands::fields_count(b.gset(), &pres, &s.bounds)?;
                out.result["untwisted_fields_on_presented_manifold"] = count;
            }
            Ok(out)
        }
        Command::Frobenius(a) => {
            let b = s.twist(a, 2)?;
            commands::frobenius(&b)
        }
        Command::Verlinde(a) => {
            let g = s.group(&a.group)?;
            let set = match &a.gset {
                Some(p) => Some(s.gset(&g, Some(p))?),
                None => None,
            };
            let omega = match &a.omega {
                Some(p) => Some(s.cochain("omega", &g, None, p)?),
                None => None,
            };
            commands::verlinde(&g, omega, set.as_ref())
        }
        Command::RsVerify(a) => commands::rs_verify(a.dim, &a.k, a.random, s.seed),
        Command::RsContent(a) => {
            let n = usize::try_from(a.dim).map_err(|_| CliError::Parse("dimension too large".into()))?;
            commands::rs_content(n)
        }
        Command::Anomaly(a) => commands::anomaly(a.dim),
    }
}

/// Runs one invocation and returns the exit status together with the text
/// destined for stdout and stderr.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { (1, String::new(), text) } else { (0, text, String::new()) };
        }
    };
    let mut bounds = Bounds::default();
    if let Some(w) = cli.max_work {
        bounds.max_work = w;
    }
    let mut session = Session { inputs: Vec::new(), bounds, seed: cli.seed };
    let outcome = match dispatch(&cli, &mut session) {
        Ok(o) => o,
        Err(e) => return (e.exit_code(), String::new(), format!("error: {e}\n")),
    };
    let envelope = Envelope {
        tool: "ftqft",
        version: env!("CARGO_PKG_VERSION"),
        command: command_name(&cli.command),
        seed: cli.seed,
        inputs: &session.inputs,
        result: &outcome.result,
    };
    match cli.format {
        Format::Json => (0, envelope.to_json(), String::new()),
        Format::Csv => match envelope.to_csv(&outcome.table) {
            Ok(s) => (0, s, String::new()),
            Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
        },
    }
}
