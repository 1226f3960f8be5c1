use bimaps::qseries::Rat;
use bimaps::slices::FaceWeights;
use clap::{Parser, Subcommand, ValueEnum};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "bimaps",
    version,
    about = "Distance-dependent two-point functions of vertex-bicolored planar maps as exact series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Map family or integrable system [default: quad, or tricolor for `tricolor`].
    #[arg(long, global = true, value_enum)]
    pub family: Option<FamilyArg>,

    /// Face weights g_1,g_2,... for `--family general` (rationals like 1/2).
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    pub g: Option<Vec<String>>,

    /// Truncation order (total degree).
    #[arg(
        long,
        global = true,
        env = "BIMAPS_ORDER",
        default_value_t = 6,
        value_parser = clap::value_parser!(u32).range(1..)
    )]
    pub order: u32,

    /// Largest index or distance emitted.
    #[arg(long = "i-max", global = true, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    pub i_max: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for random rational sample points.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Computational route; defaults depend on the command and family.
    #[arg(long, global = true, value_enum)]
    pub route: Option<Route>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Two-point functions G_i of both root colors.
    Twopoint,
    /// Slice generating functions B_i, W_i (or the P/Q, R/S ladders).
    Ladder,
    /// Hankel determinants of the F_n sequences.
    Hankel,
    /// Hard-dimer polynomials on bicolored segments with up to `--i-max` links.
    Dimers,
    /// The three-color system T_i, U_i, V_i and its parameters.
    Tricolor,
    /// Run invariant suites and report pass/fail per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Twopoint => "twopoint",
            Command::Ladder => "ladder",
            Command::Hankel => "hankel",
            Command::Dimers => "dimers",
            Command::Tricolor => "tricolor",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    Quad,
    Hex,
    General,
    Ternary,
    Binary,
    Tricolor,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Perturbative solution of the recursion.
    Recursion,
    /// Continued-fraction coefficients from Hankel determinants.
    Hankel,
    /// Explicit parametrized solution.
    Closed,
    /// Hankel determinants by direct evaluation.
    Det,
    /// Hankel determinants from hard dimers.
    Lgv,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Recursion => "recursion",
            Route::Hankel => "hankel",
            Route::Closed => "closed",
            Route::Det => "det",
            Route::Lgv => "lgv",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Qseries,
    Paths,
    Slices,
    Hankel,
    Closedform,
    Dimers,
    Extensions,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Qseries,
        Suite::Paths,
        Suite::Slices,
        Suite::Hankel,
        Suite::Closedform,
        Suite::Dimers,
        Suite::Extensions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qseries => "qseries",
            Suite::Paths => "paths",
            Suite::Slices => "slices",
            Suite::Hankel => "hankel",
            Suite::Closedform => "closedform",
            Suite::Dimers => "dimers",
            Suite::Extensions => "extensions",
            Suite::All => "all",
        }
    }
}

/// Validated family selection.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Quad,
    Hex,
    General(FaceWeights),
    Ternary,
    Binary,
    Tricolor,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Quad => "quad",
            Family::Hex => "hex",
            Family::General(_) => "general",
            Family::Ternary => "ternary",
            Family::Binary => "binary",
            Family::Tricolor => "tricolor",
        }
    }

    /// Face weights of a map family.
    pub fn face_weights(&self) -> Option<FaceWeights> {
        match self {
            Family::Quad => Some(FaceWeights::quad()),
            Family::Hex => Some(FaceWeights::hex()),
            Family::General(g) => Some(g.clone()),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub family: Family,
    pub order: u32,
    pub i_max: usize,
    pub format: Format,
    pub seed: u64,
    pub route: Option<Route>,
}

fn parse_weights(list: &[String]) -> Result<FaceWeights, CliError> {
    let mut g = Vec::with_capacity(list.len());
    for s in list {
        let r: Rat = s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid face weight `{s}`")))?;
        g.push(r);
    }
    FaceWeights::new(g).map_err(|e| CliError::Usage(e.to_string()))
}

impl JobConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let default = if cli.command == Command::Tricolor {
            FamilyArg::Tricolor
        } else {
            FamilyArg::Quad
        };
        let family_arg = cli.family.unwrap_or(default);
        let family = match family_arg {
            FamilyArg::Quad => Family::Quad,
            FamilyArg::Hex => Family::Hex,
            FamilyArg::General => {
                let list = cli
                    .g
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("--family general requires --g".into()))?;
                Family::General(parse_weights(list)?)
            }
            FamilyArg::Ternary => Family::Ternary,
            FamilyArg::Binary => Family::Binary,
            FamilyArg::Tricolor => Family::Tricolor,
        };
        if cli.g.is_some() && family_arg != FamilyArg::General {
            return Err(CliError::Usage("--g is only meaningful with --family general".into()));
        }
        let cfg = JobConfig {
            command: cli.command,
            family,
            order: cli.order,
            i_max: cli.i_max as usize,
            format: cli.format,
            seed: cli.seed,
            route: cli.route,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.order == 0 {
            return Err(CliError::Usage("--order must be at least 1".into()));
        }
        if self.i_max == 0 {
            return Err(CliError::Usage("--i-max must be at least 1".into()));
        }
        let fam = &self.family;
        let bad = |what: &str| Err(CliError::Usage(format!("{what} is not available for `{}`", self.command.name())));
        match &self.command {
            Command::Twopoint | Command::Hankel if fam.face_weights().is_none() => bad(&format!("family {}", fam.name())),
            Command::Ladder if *fam == Family::Tricolor => bad("family tricolor"),
            Command::Tricolor if *fam != Family::Tricolor => bad(&format!("family {}", fam.name())),
            _ => self.route_for().map(|_| ()),
        }
    }

    /// Route actually used, after applying defaults.
    pub fn route_for(&self) -> Result<Option<Route>, CliError> {
        let closed_ok = matches!(self.family, Family::Quad | Family::Hex | Family::Ternary | Family::Binary);
        let usage = |r: Route| {
            Err(CliError::Usage(format!(
                "route {} is not available for `{}` with family {}",
                r.name(),
                self.command.name(),
                self.family.name()
            )))
        };
        match &self.command {
            Command::Twopoint | Command::Ladder => {
                let default = if matches!(self.family, Family::Quad | Family::Hex) {
                    Route::Closed
                } else {
                    Route::Recursion
                };
                let r = self.route.unwrap_or(default);
                match r {
                    Route::Recursion => Ok(Some(r)),
                    Route::Closed if closed_ok => Ok(Some(r)),
                    Route::Hankel if self.family.face_weights().is_some() => Ok(Some(r)),
                    _ => usage(r),
                }
            }
            Command::Hankel => {
                let r = self.route.unwrap_or(Route::Det);
                match r {
                    Route::Det => Ok(Some(r)),
                    Route::Lgv if matches!(self.family, Family::Quad | Family::Hex) => Ok(Some(r)),
                    _ => usage(r),
                }
            }
            _ => match self.route {
                None => Ok(None),
                Some(r) => usage(r),
            },
        }
    }
}
