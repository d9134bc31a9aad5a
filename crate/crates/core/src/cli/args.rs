//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "liecheck",
    version,
    about = "Exact checks for root systems, linkage and weight searches"
)]
pub struct Cli {
    /// Directory receiving JSON (and CSV) reports.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel commands.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Ignore the result cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Root system data.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Linkage decisions.
    #[command(subcommand)]
    Linkage(LinkageCmd),
    /// Weight-equation searches.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Audits over the in-scope weights.
    #[command(subcommand)]
    Audit(AuditCmd),
    /// Socle-weight multisets.
    #[command(subcommand)]
    Socle(SocleCmd),
    /// Type C second cohomology.
    #[command(subcommand)]
    Typec(TypecCmd),
    /// Run the fixed battery of reference checks.
    VerifyAll {
        /// Smaller ranges for a fast run.
        #[arg(long)]
        quick: bool,
    },
}

/// `--type E8`, or `--type E --rank 8`.
#[derive(Debug, Clone, Args, Serialize)]
pub struct TypeArg {
    #[arg(long = "type")]
    #[serde(rename = "type")]
    pub type_name: String,
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootsysCmd {
    Info(TypeArg),
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkageCmd {
    /// Decide whether λ and μ are linked.
    Check {
        #[command(flatten)]
        #[serde(flatten)]
        ty: TypeArg,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        /// Use W ⋉ pX(T) instead of W ⋉ pZΦ.
        #[arg(long)]
        extended: bool,
    },
    /// α₀ versus ᾱ in B_n.
    LemmaB {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        p: i64,
    },
    /// ω₂ versus 2ω₁ in C_n under extended linkage.
    LemmaC {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        p: i64,
    },
    /// ᾱ versus α₀ in F4 and G2.
    F4g2 {
        #[arg(long)]
        p: i64,
    },
    /// ω_j versus 0 in C_n under extended linkage.
    TypecZero {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        j: usize,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SearchArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ty: TypeArg,
    #[arg(long)]
    pub p: i64,
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    /// Coordinates "1,0,…", "table2:long", "table2:short" or "wK".
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchCmd {
    /// Σ of two root multiples plus ν equal to (p^r − 1)σ.
    TwoRootSum {
        #[command(flatten)]
        #[serde(flatten)]
        args: SearchArgs,
        /// Range ν over all weights of H⁰(λ) instead of dominant ν ≤ λ.
        #[arg(long)]
        saturated: bool,
    },
    /// The E₂ weight families.
    E2Forms(SearchArgs),
    /// Nonzero T(F_q)-fixed socle weights.
    FixedPoints(SearchArgs),
    /// Dot-action identities at p = 5.
    Remark44(SearchArgs),
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditCmd {
    /// Maxima of (s_α·λ*, γ∨); all audited types when --type is absent.
    Inequalities {
        #[arg(long = "type")]
        #[serde(rename = "type")]
        type_name: Option<String>,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SocleCmd {
    /// Socle-weight multiset of H⁰(λ) restricted to U_r.
    Compute {
        #[command(flatten)]
        #[serde(flatten)]
        args: SearchArgs,
        /// m_σ source: zero, builtin, superset, or a JSON file.
        #[arg(long, default_value = "zero")]
        msigma: String,
        /// Also evaluate the small-weight formula and compare.
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TypecCmd {
    /// dim H²(G, L(ω_j)) for C_n.
    H2 {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        #[serde(flatten)]
        provider: ProviderArg,
    },
    /// Nonvanishing table over a range of ranks.
    Table {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        #[serde(flatten)]
        provider: ProviderArg,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ProviderArg {
    /// Structure source: "rule", "c12p3", or a diagram JSON file (needs a single n).
    #[arg(long, default_value = "rule")]
    pub provider: String,
}
