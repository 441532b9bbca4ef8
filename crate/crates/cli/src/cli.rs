use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "asw", version, about = "Exact conductor counts for abelian p-extensions of F_q(T)")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Prime p.
    #[arg(long)]
    pub p: u64,
    /// Cyclic type e1,e2,... (weakly decreasing), e.g. `2,1` for Z/p^2 × Z/p.
    #[arg(long, value_parser = parse_type, allow_hyphen_values = false)]
    pub group: CyclicType,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicType(pub Vec<u32>);

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a finite abelian p-group.
    Group(GroupArgs),
    /// The polynomial f_G, its weight polynomials, and optional quotient counts.
    Delsarte {
        #[command(flatten)]
        group: GroupArgs,
        /// Index vector x_i = [p^{i-1}A : p^iA] of an abelian group A.
        #[arg(long, value_delimiter = ',')]
        index: Option<Vec<u64>>,
    },
    /// Local Euler factors, symbolic in the residue norm.
    LocalFactor {
        #[command(flatten)]
        group: GroupArgs,
        /// Truncation order in u (at least p^e).
        #[arg(long)]
        trunc: usize,
    },
    /// Global conductor series and its counting function.
    Series {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        trunc: usize,
    },
    /// Normalized growth of the counting function.
    Diagnose {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        trunc: usize,
    },
    /// Brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Discriminant bounds and exponents.
    #[command(subcommand)]
    Bounds(BoundsCommand),
    /// Engine coefficients against the Artin-Schreier oracle, degree by degree.
    Compare {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        trunc: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// One-unit group of F_q[T]/π^m.
    Unit {
        #[arg(long)]
        q: u64,
        /// Coefficients of the monic irreducible π, constant term first.
        #[arg(long, value_delimiter = ',')]
        pi: Vec<u32>,
        #[arg(long)]
        m: u32,
    },
    /// Artin-Schreier counts over F_p(T).
    Asw {
        #[arg(long)]
        p: u64,
        /// Constant field size; must equal p.
        #[arg(long)]
        q: Option<u64>,
        /// Module component `c0,c1,...:exp` or `inf:exp`; repeatable.
        #[arg(long = "place", value_parser = parse_place)]
        places: Vec<PlaceArg>,
        /// Count all conductors up to this degree instead of one module.
        #[arg(long, conflicts_with = "places")]
        n: Option<usize>,
        /// Rank of the elementary abelian group (with `--n`).
        #[arg(long, default_value_t = 1, requires = "n")]
        rank: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceArg {
    /// `None` for the infinite place.
    pub pi: Option<Vec<u32>>,
    pub exp: u32,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Local discriminant exponent bound for a conductor exponent.
    Disc {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        f_exp: u64,
    },
    /// Degree bound on the discriminant of a squareful conductor.
    Norm {
        #[command(flatten)]
        group: GroupArgs,
        /// Conductor component `deg:exp`; repeatable.
        #[arg(long = "place", value_parser = parse_deg_exp, required = true)]
        places: Vec<(u64, u32)>,
    },
    /// Lower, conjectured and upper discriminant-count exponents.
    Summary(GroupArgs),
    /// Discriminant series for Z/p.
    Zseries {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        trunc: usize,
    },
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}")))
        .collect()
}

fn parse_type(s: &str) -> Result<CyclicType, String> {
    let v = parse_list(s)?;
    if v.contains(&0) {
        return Err("exponents must be positive".into());
    }
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err("cyclic type must be weakly decreasing".into());
    }
    Ok(CyclicType(v))
}

fn split_exp(s: &str) -> Result<(&str, u32), String> {
    let (head, exp) = s.rsplit_once(':').ok_or_else(|| format!("`{s}`: expected `...:exp`"))?;
    let exp = exp.trim().parse().map_err(|e| format!("exponent `{exp}`: {e}"))?;
    Ok((head, exp))
}

fn parse_place(s: &str) -> Result<PlaceArg, String> {
    let (head, exp) = split_exp(s)?;
    let pi = match head.trim() {
        "inf" => None,
        h => Some(parse_list(h)?),
    };
    Ok(PlaceArg { pi, exp })
}

fn parse_deg_exp(s: &str) -> Result<(u64, u32), String> {
    let (head, exp) = split_exp(s)?;
    let deg = head.trim().parse().map_err(|e| format!("degree `{head}`: {e}"))?;
    Ok((deg, exp))
}
