//! Command-line front end. Every command produces one JSON document; the
//! table format is a rendering of the same document.

mod render;
mod sweep;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::chebotarev::{
    chebotarev_exact, chebotarev_mc, ratios, DistinctTildeFamily,
};
use crate::error::{Error, Result};
use crate::families::Catalog;
use crate::invgen::{
    build_profile, chief_bound_check, class_count_bounds, d_i_exact, invariably_generates,
    invgen_sample_refuter, row_of_element,
};
use crate::perm::{GroupHandle, Permutation, DEFAULT_ENUMERATION_CAP};
use crate::rational::{to_decimal, to_f64};
use crate::structure::{Caps, GroupStructure, DEFAULT_LATTICE_CAP, DEFAULT_SUBSET_CAP};

pub use sweep::Suite;

/// Seed used when `--seed 0` (the default) is given.
pub const DEFAULT_SEED: u64 = 0x1D5E_ED00_C0FF_EE01;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

const AFTER_HELP: &str = "\
Environment:
  INVGEN_ENUM_CAP      largest group whose elements are enumerated (default 200000)
  INVGEN_LATTICE_CAP   largest group whose full subgroup list is built (default 20000)
  INVGEN_SUBSET_CAP    largest number of distinct ~M sets for exact inclusion-exclusion (default 24)

Exit codes: 0 ok, 1 assertion failure, 2 cap exceeded, 3 input error.
A seed of 0 selects a fixed built-in seed; runs never read the clock.";

#[derive(Parser, Debug)]
#[command(name = "invgen", version, about = "Invariable generation and Chebotarev invariants of permutation groups", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Catalog file replacing the built-in one.
    #[arg(long, global = true)]
    pub catalog: Option<std::path::PathBuf>,
    #[arg(long, global = true, env = "INVGEN_ENUM_CAP", default_value_t = DEFAULT_ENUMERATION_CAP,
          value_parser = positive)]
    pub enum_cap: usize,
    #[arg(long, global = true, env = "INVGEN_LATTICE_CAP", default_value_t = DEFAULT_LATTICE_CAP,
          value_parser = positive)]
    pub lattice_cap: usize,
    #[arg(long, global = true, env = "INVGEN_SUBSET_CAP", default_value_t = DEFAULT_SUBSET_CAP,
          value_parser = positive)]
    pub subset_cap: usize,
}

impl GlobalArgs {
    pub fn caps(&self) -> Caps {
        Caps {
            enumeration: self.enum_cap,
            lattice: self.lattice_cap,
            subsets: self.subset_cap,
        }
    }

    fn catalog(&self) -> Result<Catalog> {
        match &self.catalog {
            Some(p) => Catalog::load(p),
            None => Ok(Catalog::builtin()),
        }
    }
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

/// A catalog name, or inline generators with a degree.
#[derive(Args, Debug, Clone)]
pub struct Selector {
    /// Catalog group name.
    #[arg(conflicts_with = "gens", required_unless_present = "gens")]
    pub group: Option<String>,
    /// Generators in cycle notation separated by `;`.
    #[arg(long, requires = "degree")]
    pub gens: Option<String>,
    #[arg(long)]
    pub degree: Option<usize>,
}

impl Selector {
    fn resolve(&self, catalog: &Catalog) -> Result<(String, GroupHandle)> {
        match (&self.group, &self.gens, self.degree) {
            (Some(name), _, _) => Ok((name.clone(), catalog.instantiate(name)?)),
            (None, Some(gens), Some(degree)) => Ok((gens.clone(), GroupHandle::parse(gens, degree)?)),
            _ => Err(Error::InvalidArgument("give a catalog name or --gens with --degree".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order, conjugacy classes, maximal subgroup classes, nilpotency, chief series.
    Analyze {
        #[command(flatten)]
        selector: Selector,
    },
    /// Invariable generation: d_I, the generation test, or the sampling refuter.
    Invgen {
        #[command(flatten)]
        selector: Selector,
        /// Minimal invariable generating number with a witness.
        #[arg(long)]
        di: bool,
        /// Class labels separated by `,` or elements in cycle notation separated by `;`.
        #[arg(long)]
        check: Option<String>,
        /// Overgroup (catalog name) whose conjugation fuses classes.
        #[arg(long)]
        fuse: Option<String>,
        /// Randomized necessary-condition check of --check elements; needs no enumeration.
        #[arg(long, requires = "check")]
        refute: bool,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Chebotarev invariant: exact by inclusion-exclusion or by Monte Carlo.
    Chebotarev {
        #[command(flatten)]
        selector: Selector,
        #[arg(long, conflicts_with = "mc")]
        exact: bool,
        #[arg(long)]
        mc: bool,
        #[arg(long, default_value_t = 20_000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a family of assertions over the whole catalog.
    Sweep {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Result of one invocation: the document and whether it records a failure.
pub struct Outcome {
    pub document: Value,
    pub assertion_failed: bool,
}

impl Outcome {
    fn ok(document: Value) -> Self {
        Outcome {
            document,
            assertion_failed: false,
        }
    }
}

pub fn effective_seed(seed: u64) -> u64 {
    if seed == 0 {
        DEFAULT_SEED
    } else {
        seed
    }
}

/// `{num, den, decimal}` for an exact rational.
pub fn rational_json(q: &BigRational) -> Value {
    let mut v = serde_json::to_value(crate::rational::ExactJson(q.clone())).expect("serializable");
    v["decimal"] = Value::String(to_decimal(q, 6));
    v
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::CapExceeded { .. } => "cap_exceeded",
        Error::Io(_) => "io",
        _ => "input",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({"error": error_kind(e), "message": e.to_string()});
    if let Error::CapExceeded { what, size, cap } = e {
        v["cap"] = json!({"what": what, "size": size, "limit": cap});
    }
    v
}

/// Parses arguments, runs, and returns `(exit code, stdout, stderr)`.
pub fn run_from<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                (code, text, String::new())
            } else {
                (code, String::new(), text)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = render::render(&out.document, cli.global.format);
            if out.assertion_failed {
                let failing = out.document.get("failures").cloned().unwrap_or(Value::Null);
                (EXIT_ASSERTION, text, format!("assertion failure: {failing}\n"))
            } else {
                (EXIT_OK, text, String::new())
            }
        }
        Err(e) => (exit_code(&e), String::new(), format!("{}\n", error_json(&e))),
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let caps = cli.global.caps();
    let catalog = cli.global.catalog()?;
    match &cli.command {
        Command::Analyze { selector } => {
            let (name, group) = selector.resolve(&catalog)?;
            cmd_analyze(&name, &group, &caps).map(Outcome::ok)
        }
        Command::Invgen {
            selector,
            di,
            check,
            fuse,
            refute,
            trials,
            seed,
        } => {
            let (name, group) = selector.resolve(&catalog)?;
            let overgroup = fuse.as_ref().map(|f| catalog.instantiate(f)).transpose()?;
            if *refute {
                let check = check.as_deref().expect("clap requires --check");
                return cmd_refute(&name, &group, check, overgroup.as_ref(), *trials, *seed)
                    .map(Outcome::ok);
            }
            if !*di && check.is_none() {
                return Err(Error::InvalidArgument("give --di, --check or --refute".into()));
            }
            cmd_invgen(&name, &group, &caps, *di, check.as_deref(), overgroup.as_ref())
                .map(Outcome::ok)
        }
        Command::Chebotarev {
            selector,
            exact: _,
            mc,
            trials,
            seed,
        } => {
            let (name, group) = selector.resolve(&catalog)?;
            let mc = mc.then_some((*trials, effective_seed(*seed)));
            cmd_chebotarev(&name, &group, &caps, mc).map(Outcome::ok)
        }
        Command::Sweep { suite, seed } => cmd_sweep(*suite, &catalog, &caps, effective_seed(*seed)),
    }
}

pub fn cmd_analyze(name: &str, group: &GroupHandle, caps: &Caps) -> Result<Value> {
    let g = GroupStructure::new(group, caps)?;
    let classes: Vec<Value> = g
        .classes()
        .classes()
        .iter()
        .map(|c| {
            json!({
                "label": c.label,
                "size": c.size,
                "element_order": c.element_order,
                "representative": g.table().element(c.representative).to_string(),
            })
        })
        .collect();
    let profile = build_profile(&g, None)?;
    let maximal: Vec<Value> = g
        .maximal_subgroups()
        .iter()
        .zip(profile.column_labels())
        .map(|(m, label)| {
            json!({
                "label": label,
                "order": m.order(),
                "class_size": m.class_size,
                "core_order": m.core_order,
                "v": rational_json(&m.v),
            })
        })
        .collect();
    let series = g.chief_series();
    let factors: Vec<Value> = series
        .factors
        .iter()
        .map(|f| json!({"order": f.order, "abelian": f.abelian, "description": f.description}))
        .collect();
    Ok(json!({
        "group": name,
        "degree": group.degree(),
        "order": g.order(),
        "classes": classes,
        "maximal_classes": maximal,
        "nilpotent": g.is_nilpotent(),
        "solvable": g.is_solvable(),
        "chief_series": {"factors": factors, "a": series.a, "b": series.b},
    }))
}

fn parse_elements(text: &str, degree: usize) -> Result<Vec<Permutation>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse_cycles(s, degree))
        .collect()
}

fn is_element_list(text: &str) -> bool {
    text.contains('(')
}

pub fn cmd_invgen(
    name: &str,
    group: &GroupHandle,
    caps: &Caps,
    di: bool,
    check: Option<&str>,
    overgroup: Option<&GroupHandle>,
) -> Result<Value> {
    let g = GroupStructure::new(group, caps)?;
    let fusion = overgroup.map(|a| g.fuse_classes_under(a)).transpose()?;
    let profile = build_profile(&g, fusion.as_ref())?;
    let mut out = json!({"group": name, "order": g.order(), "fused": profile.is_fused()});
    if di {
        let cover = d_i_exact(&profile);
        let bounds = class_count_bounds(&g);
        let chief = chief_bound_check(&g)?;
        out["d_i"] = json!(cover.as_ref().map(|c| c.size));
        out["witness"] = json!(cover.as_ref().map(|c| c
            .witness
            .iter()
            .map(|&r| profile.row_labels()[r].clone())
            .collect::<Vec<_>>()));
        out["bounds"] = json!({
            "k_G": bounds.k_g,
            "cyclic_classes": bounds.cyclic_classes,
            "a_plus_2b": chief.a_plus_2b,
            "log2_order": chief.log2_order,
        });
    }
    if let Some(text) = check {
        let rows = if is_element_list(text) {
            parse_elements(text, group.degree())?
                .iter()
                .map(|p| row_of_element(&g, &profile, p))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|l| profile.row_of_label(l))
                .collect::<Result<Vec<_>>>()?
        };
        out["check"] = json!({
            "rows": rows.iter().map(|&r| profile.row_labels()[r].clone()).collect::<Vec<_>>(),
            "invariably_generates": invariably_generates(&profile, &rows)?,
        });
    }
    Ok(out)
}

pub fn cmd_refute(
    name: &str,
    group: &GroupHandle,
    check: &str,
    overgroup: Option<&GroupHandle>,
    trials: usize,
    seed: u64,
) -> Result<Value> {
    if !is_element_list(check) {
        return Err(Error::InvalidArgument(
            "--refute needs elements in cycle notation".into(),
        ));
    }
    let elements = parse_elements(check, group.degree())?;
    let seed = effective_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let verdict = invgen_sample_refuter(group, &elements, trials, &mut rng, overgroup)?;
    Ok(json!({
        "group": name,
        "order": group.order().to_string(),
        "elements": elements.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "seed": seed,
        "refuter": verdict,
    }))
}

pub fn cmd_chebotarev(
    name: &str,
    group: &GroupHandle,
    caps: &Caps,
    mc: Option<(usize, u64)>,
) -> Result<Value> {
    let g = GroupStructure::new(group, caps)?;
    let mut out = json!({"group": name, "order": g.order()});
    let c = match mc {
        None => {
            let family = DistinctTildeFamily::new(&g, true);
            let c = chebotarev_exact(&family, caps.subsets).map_err(|e| match e {
                Error::CapExceeded { what, size, cap } => Error::CapExceeded {
                    what: if what == "distinct ~M sets" {
                        "distinct ~M sets (use --mc)"
                    } else {
                        what
                    },
                    size,
                    cap,
                },
                e => e,
            })?;
            out["exact"] = rational_json(&c);
            to_f64(&c)
        }
        Some((trials, seed)) => {
            let est = chebotarev_mc(&g, trials, seed)?;
            out["mc"] = serde_json::to_value(&est).expect("serializable");
            est.mean
        }
    };
    out["ratios"] = serde_json::to_value(ratios(c, g.order())).expect("serializable");
    Ok(out)
}

/// Runs one suite over the catalog; the outcome fails if any row fails.
pub fn cmd_sweep(suite: Suite, catalog: &Catalog, caps: &Caps, seed: u64) -> Result<Outcome> {
    sweep::run(suite, catalog, caps, seed)
}
