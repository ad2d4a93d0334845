//! `whecke`: reports and verification suites for wreath Hecke algebras.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wreath_hecke::crystal::{build_crystal, crystal_vs_branching, integral_scalars};
use wreath_hecke::cyclotomic::{build_cyclo, CycloWeight};
use wreath_hecke::groups::{FiniteGroup, GroupSpec};
use wreath_hecke::hecke::center::CandidateKind;
use wreath_hecke::hecke::{HeckeAlgebra, TermJson};
use wreath_hecke::perm::factorial;
use wreath_hecke::report::Report;
use wreath_hecke::repmod::branch::branch;
use wreath_hecke::repmod::wreath_modules::RepContext;
use wreath_hecke::wreath::{
    brute_force_p_regular_classes, class_count_series, p_regular_types, verify_jm_identities, WreathAlgebra,
    WreathGroup,
};
use wreath_hecke::{Field, FieldSpec};

/// Version of the JSON report layout.
const SCHEMA_VERSION: u32 = 1;

/// Largest `|G_n|` for which `classes` enumerates elements directly.
const BRUTE_FORCE_LIMIT: usize = 200_000;

#[derive(Parser)]
#[command(name = "whecke", version, about = "Exact computations in wreath Hecke algebras over finite fields")]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p-regular conjugacy classes of G ≀ S_n, by type and by enumeration.
    Classes {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    /// Coefficients of the p-regular class count generating series.
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max: usize,
    },
    /// Check the Jucys–Murphy identities in the group algebra of G ≀ S_n.
    Jm {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    #[command(subcommand)]
    Hecke(HeckeCommand),
    /// Check that e_1, e_2 are central and compare the coefficient criterion
    /// for the center with a direct commutator test.
    Center {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50)]
        candidates: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    #[command(subcommand)]
    Cyclo(CycloCommand),
    /// Socles of restrictions of simple modules of G ≀ S_n.
    Branch {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
    #[command(subcommand)]
    Crystal(CrystalCommand),
}

#[derive(Subcommand)]
enum HeckeCommand {
    /// Product of two elements given as JSON term lists.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        a: PathBuf,
        b: PathBuf,
    },
    /// Defining relations, PBW oracle and associativity fuzzing.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CycloCommand {
    /// Dimension of the cyclotomic quotient for a dominant weight.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Lambda0")]
        weight: String,
    },
}

#[derive(Subcommand)]
enum CrystalCommand {
    /// The crystal of the weight twisted by the scalars of G, to a depth.
    Graph {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "Lambda0")]
        weight: String,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Compare the crystal with the branching graph of simple modules.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct Common {
    /// `trivial`, `cyclic:R`, `dihedral:R`, `symmetric:M` or group JSON.
    #[arg(long, default_value = "trivial")]
    group: String,
    /// Characteristic.
    #[arg(long)]
    p: u32,
    /// Explicit field as JSON `{"p":..,"m":..,"modulus":[..]}`; defaults to GF(p).
    #[arg(long)]
    field: Option<String>,
}

impl Common {
    fn group(&self) -> anyhow::Result<Arc<FiniteGroup>> {
        let spec: GroupSpec = self.group.parse()?;
        Ok(Arc::new(FiniteGroup::build(&spec)?))
    }

    fn field(&self) -> anyhow::Result<Field> {
        let spec = match &self.field {
            Some(s) => serde_json::from_str::<FieldSpec>(s).context("field spec")?,
            None => FieldSpec::prime(self.p),
        };
        if spec.p != self.p {
            bail!("field characteristic {} does not match --p {}", spec.p, self.p);
        }
        Ok(Field::new(&spec)?)
    }

    fn header(&self, command: &str) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("schema_version".into(), json!(SCHEMA_VERSION));
        m.insert("command".into(), json!(command));
        m.insert("group".into(), json!(self.group));
        m.insert("p".into(), json!(self.p));
        m
    }
}

/// A finished command: what to print and whether its checks passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn json(mut head: serde_json::Map<String, Value>, body: Value, report: Option<&Report>) -> Output {
        if let Value::Object(fields) = body {
            head.extend(fields);
        }
        let passed = report.is_none_or(Report::all_passed);
        if let Some(r) = report {
            head.insert("passed".into(), json!(passed));
            head.insert("checks".into(), json!(r.len()));
            head.insert("failures".into(), json!(r.failures()));
        }
        let text = serde_json::to_string_pretty(&Value::Object(head)).expect("serializable") + "\n";
        Output { text, passed }
    }
}

fn wreath_group(common: &Common, n: usize) -> anyhow::Result<Arc<WreathGroup>> {
    Ok(WreathGroup::new(common.group()?, n)?)
}

fn cmd_classes(common: &Common, n: usize) -> anyhow::Result<Output> {
    let g = common.group()?;
    let types = p_regular_types(&g, common.p, n);
    let wg = WreathGroup::new(g.clone(), n)?;
    let brute = (wg.order() <= BRUTE_FORCE_LIMIT).then(|| brute_force_p_regular_classes(&wg, common.p));
    let mut report = Report::new();
    if let Some(b) = brute {
        report.push_detail("type count equals enumeration", b == types.len(), format!("{} vs {b}", types.len()));
    }
    let body = json!({ "n": n, "count": types.len(), "brute_force": brute, "types": types });
    Ok(Output::json(common.header("classes"), body, Some(&report)))
}

fn cmd_series(common: &Common, max: usize) -> anyhow::Result<Output> {
    let g = common.group()?;
    let body = json!({ "max": max, "coefficients": class_count_series(&g, common.p, max) });
    Ok(Output::json(common.header("series"), body, None))
}

fn cmd_jm(common: &Common, n: usize) -> anyhow::Result<Output> {
    let alg = WreathAlgebra::new(wreath_group(common, n)?, common.field()?);
    let report = verify_jm_identities(&alg)?;
    Ok(Output::json(common.header("jm"), json!({ "n": n }), Some(&report)))
}

fn read_element(h: &HeckeAlgebra, path: &PathBuf) -> anyhow::Result<wreath_hecke::hecke::HeckeElement> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let terms: Vec<TermJson> = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(h.from_json(&terms)?)
}

fn cmd_hecke(cmd: &HeckeCommand) -> anyhow::Result<Output> {
    match cmd {
        HeckeCommand::Mul { common, n, a, b } => {
            let h = HeckeAlgebra::new(wreath_group(common, *n)?, common.field()?);
            let product = h.checked_mul(&read_element(&h, a)?, &read_element(&h, b)?)?;
            let body = json!({ "n": n, "product": h.to_json(&product) });
            Ok(Output::json(common.header("hecke mul"), body, None))
        }
        HeckeCommand::Verify { common, n, samples, seed } => {
            let h = HeckeAlgebra::new(wreath_group(common, *n)?, common.field()?);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut report = h.verify_relations();
            report.extend(h.verify_oracle(&mut rng, *samples, 3, 2)?);
            report.extend(h.verify_associativity(&mut rng, *samples, 3, 2));
            let body = json!({ "n": n, "samples": samples, "seed": seed });
            Ok(Output::json(common.header("hecke verify"), body, Some(&report)))
        }
    }
}

fn cmd_center(common: &Common, n: usize, candidates: usize, seed: u64) -> anyhow::Result<Output> {
    let h = HeckeAlgebra::new(wreath_group(common, n)?, common.field()?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new();
    for k in 1..=2.min(n) {
        report.push(format!("e_{k} is central"), h.is_central(&h.elementary_symmetric(k)));
    }
    let mut central = 0;
    for c in 0..candidates {
        let kind = CandidateKind::ALL[c % CandidateKind::ALL.len()];
        let z = h.random_center_candidate(&mut rng, kind, 2);
        let direct = h.is_central(&z);
        central += usize::from(direct);
        report.push_detail(
            format!("candidate {c}: criterion agrees with commutators"),
            direct == h.center_coeff_check(&z),
            format!("{kind:?}, central: {direct}"),
        );
    }
    let body = json!({ "n": n, "seed": seed, "candidates": candidates, "central": central });
    Ok(Output::json(common.header("center"), body, Some(&report)))
}

fn cmd_cyclo(cmd: &CycloCommand) -> anyhow::Result<Output> {
    let CycloCommand::Dim { common, n, weight } = cmd;
    let w: CycloWeight = weight.parse()?;
    let wg = wreath_group(common, *n)?;
    let expected = (w.degree() as usize).pow(*n as u32) * factorial(*n) * wg.base_size();
    let alg = build_cyclo(wg, common.field()?, &w)?;
    let mut report = Report::new();
    report.push_detail("dimension is d^n n! |G|^n", alg.dim() == expected, format!("{} vs {expected}", alg.dim()));
    let body = json!({ "n": n, "weight": w.to_json(), "dim": alg.dim(), "expected": expected });
    Ok(Output::json(common.header("cyclo dim"), body, Some(&report)))
}

fn cmd_branch(common: &Common, n: usize) -> anyhow::Result<Output> {
    let ctx = RepContext::new(common.group()?, common.p)?;
    let b = branch(&ctx, n)?;
    let body = json!({ "n": n, "field_order": ctx.field.order(), "edges": b.edges });
    Ok(Output::json(common.header("branch"), body, Some(&b.checks)))
}

fn cmd_crystal(cmd: &CrystalCommand) -> anyhow::Result<Output> {
    match cmd {
        CrystalCommand::Graph { common, weight, depth, format } => {
            let ctx = RepContext::new(common.group()?, common.p)?;
            let w: CycloWeight = weight.parse()?;
            let graph = build_crystal(&w, &integral_scalars(&ctx)?, common.p, *depth)?;
            match format {
                GraphFormat::Dot => Ok(Output { text: graph.to_dot(), passed: true }),
                GraphFormat::Json => {
                    let mut body = graph.to_json();
                    body["depth"] = json!(depth);
                    body["weight"] = w.to_json();
                    Ok(Output::json(common.header("crystal graph"), body, None))
                }
            }
        }
        CrystalCommand::Check { common, n } => {
            let ctx = RepContext::new(common.group()?, common.p)?;
            let report = crystal_vs_branching(&ctx, *n)?;
            Ok(Output::json(common.header("crystal check"), json!({ "n": n }), Some(&report)))
        }
    }
}

fn dispatch(command: &Command) -> anyhow::Result<Output> {
    match command {
        Command::Classes { common, n } => cmd_classes(common, *n),
        Command::Series { common, max } => cmd_series(common, *max),
        Command::Jm { common, n } => cmd_jm(common, *n),
        Command::Hecke(cmd) => cmd_hecke(cmd),
        Command::Center { common, n, candidates, seed } => cmd_center(common, *n, *candidates, *seed),
        Command::Cyclo(cmd) => cmd_cyclo(cmd),
        Command::Branch { common, n } => cmd_branch(common, *n),
        Command::Crystal(cmd) => cmd_crystal(cmd),
    }
}

fn diagnostic(kind: &str, message: &str) -> ExitCode {
    let d = json!({ "schema_version": SCHEMA_VERSION, "error": { "kind": kind, "message": message.trim_end() } });
    eprintln!("{d}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => return diagnostic("usage", &e.render().to_string()),
    };
    let out = match dispatch(&cli.command) {
        Ok(out) => out,
        Err(e) => return diagnostic("invalid", &format!("{e:#}")),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &out.text) {
                return diagnostic("io", &format!("writing {}: {e}", path.display()));
            }
        }
        None => print!("{}", out.text),
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
