use clap::{Args, Parser, Subcommand, ValueEnum};
use uqsl2::ncore::{GenSymbol, Presentation};
use uqsl2::qfield::{check_admissible, parse_rational, Rational};

use crate::suites::Scope;

#[derive(Debug, Parser)]
#[command(name = "uqsl2", version, about = "Exact computations in U_q(sl2), Chevalley and equitable presentations")]
pub struct Cli {
    /// Output format; `csv` and `latex` apply to `rep` only.
    #[arg(long, global = true, value_enum, env = "UQSL2_FORMAT", default_value = "text")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the PBW normal form of an expression.
    Normalize(NormalizeArgs),
    /// Emit one generator matrix of L(n, eps).
    Rep(RepArgs),
    /// Compute Omega on L(n, eps), or compare its two constructions.
    Omega(OmegaArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Evaluate a scalar, or an element on a module, at a rational q.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresentationArg {
    Chevalley,
    Equitable,
}

impl From<PresentationArg> for Presentation {
    fn from(p: PresentationArg) -> Self {
        match p {
            PresentationArg::Chevalley => Presentation::Chevalley,
            PresentationArg::Equitable => Presentation::Equitable,
        }
    }
}

#[derive(Debug, Args)]
pub struct NormalizeArgs {
    #[arg(long, value_enum, default_value = "chevalley")]
    pub presentation: PresentationArg,

    #[arg(allow_hyphen_values = true)]
    pub expr: String,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    #[arg(long)]
    pub n: u32,

    /// `+1` or `-1`.
    #[arg(long, value_parser = parse_eps, allow_hyphen_values = true)]
    pub eps: i8,

    #[arg(long, value_enum, default_value = "equitable")]
    pub basis: PresentationArg,

    /// One of k, k^-1, e, f, x, x^-1, y, z.
    #[arg(long, value_parser = parse_gen)]
    pub gen: GenSymbol,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OmegaMode {
    Compositional,
    ClosedForm,
    Check,
}

#[derive(Debug, Args)]
pub struct OmegaArgs {
    #[arg(long)]
    pub n: u32,

    #[arg(long, value_parser = parse_eps, allow_hyphen_values = true, default_value = "+1")]
    pub eps: i8,

    #[arg(long, value_enum, default_value = "compositional")]
    pub mode: OmegaMode,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value = "all")]
    pub scope: Scope,

    /// Largest highest weight of the simple modules checked.
    #[arg(long, default_value_t = 8)]
    pub nmax: u32,

    /// Window `|i| <= w, 0 <= j <= w` for the infinite-dimensional modules.
    #[arg(long, default_value_t = 4)]
    pub window: u32,

    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,

    /// Also re-check at this many random rational values of q.
    #[arg(long = "q-spot", default_value_t = 0)]
    pub q_spot: usize,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(allow_hyphen_values = true, conflicts_with = "expr_flag")]
    pub expr: Option<String>,

    #[arg(long = "expr", id = "expr_flag", allow_hyphen_values = true)]
    pub expr_flag: Option<String>,

    #[arg(long, value_enum, default_value = "chevalley")]
    pub presentation: PresentationArg,

    /// Evaluate on L(n, eps), given as `n,eps`.
    #[arg(long, value_parser = parse_rep, allow_hyphen_values = true)]
    pub rep: Option<(u32, i8)>,

    /// Admissible rational value: not 0, 1 or -1.
    #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
    pub q: Rational,
}

pub fn parse_eps(s: &str) -> Result<i8, String> {
    match s.trim() {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(format!("eps must be +1 or -1, got '{other}'")),
    }
}

pub fn parse_gen(s: &str) -> Result<GenSymbol, String> {
    GenSymbol::from_name(s.trim()).ok_or_else(|| format!("unknown generator '{s}'"))
}

pub fn parse_rep(s: &str) -> Result<(u32, i8), String> {
    let (n, eps) = s.split_once(',').ok_or_else(|| format!("expected n,eps, got '{s}'"))?;
    let n = n.trim().parse().map_err(|_| format!("bad highest weight '{n}'"))?;
    Ok((n, parse_eps(eps)?))
}

pub fn parse_q(s: &str) -> Result<Rational, String> {
    let q0 = parse_rational(s.trim()).ok_or_else(|| format!("'{s}' is not a rational number"))?;
    check_admissible(&q0).map_err(|e| e.to_string())?;
    Ok(q0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_parsers() {
        assert_eq!(parse_eps("+1"), Ok(1));
        assert_eq!(parse_eps("-1"), Ok(-1));
        assert!(parse_eps("2").is_err());
        assert_eq!(parse_gen("k^-1"), Ok(GenSymbol::KInv));
        assert_eq!(parse_rep("3,-1"), Ok((3, -1)));
        assert!(parse_rep("3").is_err());
        assert!(parse_q("1").is_err());
        assert!(parse_q("0").is_err());
        assert_eq!(parse_q("7/3").unwrap().to_string(), "7/3");
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
