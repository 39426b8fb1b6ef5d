//! The `siltlab` command line.
//!
//! Exit codes: `0` when every certificate of the run holds, `1` when a
//! mathematical certificate fails (the report names it), `2` for usage
//! errors and exhausted budgets.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{enumerate_reps, Algebra, PathAlgebra, RepCatalog, DEFAULT_BUDGET};
use crate::complexes::{GVector, TwoTermComplex};
use crate::error::{Error, Result};
use crate::field::{format_rational, Field, FieldSpec, PrimeField, Rationals};
use crate::io::{algebra_to_json, complex_to_json, parse_algebra, parse_complex, parse_representation};
use crate::nested_colimit::{
    bongartz_limit_check, build_system_prefix, kronecker_chain, limit_torsion_class, mittag_leffler_check, LimitReport,
    NestedChain, DEFAULT_GROWTH_CAP,
};
use crate::silting::{mutate, Direction, SiltingComplex};
use crate::stability::{
    explore_fan, format_theta, parse_theta, render_svg, theta_from_ints, wall, Constraint, Picture, SubquotientData,
    Theta,
};

const BASIS_NOTE: &str = "vectors are written in the basis [P_1], ..., [P_l] of indecomposable projectives, \
in vertex order; for the Kronecker algebra 1 => 2 the g-vector (-(2i-1), 2i+1) reads (2i+1, -(2i-1)) \
in the reversed basis [P_2], [P_1]";

#[derive(Parser, Debug)]
#[command(name = "siltlab", version, about = "Two-term silting complexes, g-vector fans and nested silting chains")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Algebra: a JSON file, `kronecker` or `linear:N`.
    #[arg(long, global = true, default_value = "kronecker")]
    pub algebra: String,
    /// Ground field: `Q` or a prime `p`.
    #[arg(long, global = true, default_value = "2")]
    pub field: String,
    /// Cap on enumeration work and explored chambers.
    #[arg(long, global = true, env = "SILTLAB_BUDGET")]
    pub budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Output file; standard output when absent. Required for SVG.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Explore the g-vector fan by mutation from A.
    Fan {
        /// Number of chambers to keep.
        #[arg(long, default_value_t = 64)]
        chambers: usize,
    },
    /// Walls of modules given as representation JSON files.
    Walls {
        #[arg(long = "module", required = true)]
        modules: Vec<PathBuf>,
    },
    /// Semistability and numerical torsion classes of a module.
    Semistable {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        module: PathBuf,
    },
    /// Mutate a silting complex at one summand.
    Mutate {
        /// `A`, `A[1]` or a complex JSON file.
        #[arg(long)]
        silting: String,
        /// 1-based summand index in the printed order.
        #[arg(long)]
        summand: usize,
        #[arg(long, default_value = "left")]
        dir: String,
    },
    /// Bongartz completion of a presilting complex and its approach sequence.
    Bongartz {
        /// `P<i>`, `P<i>[1]` (1-based vertex) or a complex JSON file.
        #[arg(long)]
        complex: String,
        #[arg(long, default_value_t = 6)]
        steps: usize,
        /// Dimension box for the torsion-class comparison (finite fields only).
        #[arg(long)]
        dim_bound: Option<String>,
    },
    /// Build the directed system of a nested chain and check it.
    ChainColimit {
        /// `auto:kronecker:N` or a JSON file holding a list of complexes.
        #[arg(long)]
        chain: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Dimension box of the test modules (finite fields only).
        #[arg(long)]
        dim_bound: Option<String>,
        /// Bound on the total dimension of the test modules.
        #[arg(long)]
        total_bound: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_GROWTH_CAP)]
        growth_cap: usize,
    },
}

/// A finished command: its report, an optional picture and the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub picture: Option<Picture>,
    pub status: u8,
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NestednessViolation(_)
        | Error::ApproximationNotMono
        | Error::ConeNotInAddT
        | Error::LinearSolveFailure(_)
        | Error::DecompositionFailure(_) => 1,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load_algebra(spec: &str) -> Result<PathAlgebra> {
    match spec {
        "kronecker" => Ok(PathAlgebra::kronecker()),
        _ => match spec.strip_prefix("linear:") {
            Some(n) => {
                let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad algebra `{spec}`")))?;
                if n == 0 {
                    return Err(Error::Invalid("linear:N needs N ≥ 1".into()));
                }
                Ok(PathAlgebra::linear(n))
            }
            None => parse_algebra(&read(Path::new(spec))?),
        },
    }
}

fn parse_bound(s: &str, l: usize) -> Result<Vec<usize>> {
    let v: Vec<usize> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad dimension bound `{s}`"))))
        .collect::<Result<_>>()?;
    if v.len() != l {
        return Err(Error::Invalid(format!("dimension bound needs {l} entries")));
    }
    Ok(v)
}

/// `A`, `A[1]`, `P<i>`, `P<i>[1]` or a complex JSON file.
fn parse_complex_spec<F: Field>(alg: &Algebra<F>, spec: &str) -> Result<TwoTermComplex<F>> {
    let (body, shifted) = match spec.strip_suffix("[1]") {
        Some(b) => (b, true),
        None => (spec, false),
    };
    if body == "A" {
        return Ok(if shifted {
            TwoTermComplex::regular_shift(alg)
        } else {
            TwoTermComplex::regular(alg)
        });
    }
    if let Some(i) = body.strip_prefix('P').and_then(|i| i.parse::<usize>().ok()) {
        if i == 0 || i > alg.rank() {
            return Err(Error::Invalid(format!("no projective P{i}")));
        }
        return Ok(if shifted {
            TwoTermComplex::shifted_stalk(alg, vec![i - 1])
        } else {
            TwoTermComplex::stalk(alg, vec![i - 1])
        });
    }
    parse_complex(alg, &read(Path::new(spec))?)
}

fn gvec_json(g: &GVector) -> Value {
    json!(g)
}

fn silting_json<F: Field>(t: &SiltingComplex<F>) -> Value {
    json!({
        "g_vector": gvec_json(&t.g_vector()),
        "summands": t.summands().iter().map(|s| json!({
            "g_vector": gvec_json(&s.g_vector()),
            "complex": complex_to_json(s),
        })).collect::<Vec<_>>(),
    })
}

fn rationals_json(v: &[num_rational::BigRational]) -> Value {
    json!(v.iter().map(format_rational).collect::<Vec<_>>())
}

fn header<F: Field>(alg: &Algebra<F>, verb: &str) -> Value {
    json!({
        "verb": verb,
        "field": alg.field().spec().to_string(),
        "algebra": algebra_to_json(alg.path_algebra()),
        "basis": BASIS_NOTE,
    })
}

fn catalog_for<F: Field>(alg: &Algebra<F>, bound: &str, total: Option<usize>, budget: usize) -> Result<RepCatalog<F>> {
    let b = parse_bound(bound, alg.rank())?;
    enumerate_reps(alg, &b, total, budget)
}

fn limit_json(r: &LimitReport) -> Value {
    json!({
        "theta": format_theta(&r.theta),
        "scalings": r.scalings.as_ref().map(|s| rationals_json(s)),
        "modules_in_tbar": r.b_count,
        "intersection_sizes": r.s_counts,
        "sandwich": r.sandwich,
        "stabilization_stage": r.stabilization,
        "residual_modules": r.residual,
    })
}

fn cmd_fan<F: Field>(alg: &Algebra<F>, cfg: &RunConfig, chambers: usize) -> Result<Outcome> {
    let budget = cfg.budget.unwrap_or(chambers);
    let fan = explore_fan(alg, budget)?;
    let mut picture = Picture::default();
    let mut rows = Vec::new();
    for (i, c) in fan.chambers.iter().enumerate() {
        let gens: Vec<Theta> = c.silting.summand_g_vectors().iter().map(|g| theta_from_ints(g)).collect();
        if gens.len() == 2 {
            picture.add_chamber(&gens[0], &gens[1]);
            for g in &gens {
                picture.add_ray(g);
            }
        }
        rows.push(json!({
            "index": i,
            "silting": silting_json(&c.silting),
            "rays": gens.iter().map(format_theta).collect::<Vec<_>>(),
            "neighbors": c.neighbors.iter().map(|(j, k)| json!({"summand": j + 1, "key": k})).collect::<Vec<_>>(),
        }));
    }
    picture.rays.sort();
    picture.rays.dedup();
    let mut report = header(alg, "fan");
    report["complete"] = json!(fan.complete);
    report["chamber_count"] = json!(fan.chambers.len());
    report["chambers"] = json!(rows);
    Ok(Outcome {
        report,
        picture: Some(picture),
        status: if fan.complete { 0 } else { 2 },
    })
}

fn cmd_walls<F: Field>(alg: &Algebra<F>, cfg: &RunConfig, modules: &[PathBuf]) -> Result<Outcome> {
    let budget = cfg.budget.unwrap_or(DEFAULT_BUDGET);
    let mut picture = Picture::default();
    let mut rows = Vec::new();
    for path in modules {
        let m = parse_representation(alg, &read(path)?)?;
        let w = wall(&m, budget)?;
        picture.add_wall(&w.generators);
        rows.push(json!({
            "module": path.display().to_string(),
            "dim": m.dims(),
            "dimension": w.dimension(),
            "generators": w.generators.iter().map(format_theta).collect::<Vec<_>>(),
            "halfspaces": w.halfspaces.iter().map(|h| json!({
                "normal": format_theta(&h.normal),
                "kind": match h.kind { Constraint::Geq => ">=", Constraint::Eq => "=" },
            })).collect::<Vec<_>>(),
        }));
    }
    let mut report = header(alg, "walls");
    report["walls"] = json!(rows);
    Ok(Outcome {
        report,
        picture: Some(picture),
        status: 0,
    })
}

fn cmd_semistable<F: Field>(alg: &Algebra<F>, cfg: &RunConfig, theta: &str, module: &Path) -> Result<Outcome> {
    let theta = parse_theta(theta)?;
    if theta.len() != alg.rank() {
        return Err(Error::Invalid(format!("θ needs {} entries", alg.rank())));
    }
    let m = parse_representation(alg, &read(module)?)?;
    let data = SubquotientData::of(&m, cfg.budget.unwrap_or(DEFAULT_BUDGET))?;
    let mut report = header(alg, "semistable");
    report["theta"] = json!(format_theta(&theta));
    report["dim"] = json!(m.dims());
    report["theta_of_module"] = json!(format_rational(&crate::stability::theta_eval(&theta, m.dims())));
    report["semistable"] = json!(data.is_semistable(&theta));
    report["in_tbar"] = json!(data.in_tbar(&theta));
    report["in_t"] = json!(data.in_t_strict(&theta));
    report["in_f"] = json!(data.in_f(&theta));
    report["in_fbar"] = json!(data.in_fbar(&theta));
    Ok(Outcome {
        report,
        picture: None,
        status: 0,
    })
}

fn cmd_mutate<F: Field>(alg: &Algebra<F>, silting: &str, summand: usize, dir: &str) -> Result<Outcome> {
    let t = SiltingComplex::new(&parse_complex_spec(alg, silting)?)?;
    if summand == 0 || summand > t.summands().len() {
        return Err(Error::Invalid(format!("summand must lie in 1..={}", t.summands().len())));
    }
    let dir: Direction = dir.parse()?;
    let n = mutate(&t, summand - 1, dir)?;
    let mut report = header(alg, "mutate");
    report["input"] = silting_json(&t);
    report["summand"] = json!(summand);
    report["direction"] = json!(format!("{dir:?}").to_lowercase());
    report["result"] = silting_json(&n);
    report["complex"] = json!(complex_to_json(n.complex()));
    Ok(Outcome {
        report,
        picture: None,
        status: 0,
    })
}

fn cmd_bongartz<F: Field>(
    alg: &Algebra<F>,
    cfg: &RunConfig,
    complex: &str,
    steps: usize,
    dim_bound: Option<&str>,
) -> Result<Outcome> {
    let budget = cfg.budget.unwrap_or(DEFAULT_BUDGET);
    let u = parse_complex_spec(alg, complex)?;
    let catalog = dim_bound.map(|b| catalog_for(alg, b, None, budget)).transpose()?;
    let r = bongartz_limit_check(&u, steps, catalog.as_ref(), budget)?;
    let mut report = header(alg, "bongartz");
    report["presilting"] = json!({"g_vector": gvec_json(&u.g_vector()), "complex": complex_to_json(&u)});
    report["complement"] = json!(complex_to_json(&r.complement));
    report["completion"] = silting_json(&r.completion);
    report["is_silting"] = json!(r.is_silting);
    report["first_index"] = json!(r.first_index);
    report["thetas"] = json!(r.thetas.iter().map(format_theta).collect::<Vec<_>>());
    report["in_chamber"] = json!(r.in_chamber);
    report["limit"] = r.limit.as_ref().map_or(Value::Null, limit_json);
    report["holds"] = json!(r.holds());
    Ok(Outcome {
        report,
        picture: None,
        status: if r.holds() { 0 } else { 1 },
    })
}

fn load_chain<F: Field>(alg: &Algebra<F>, spec: &str) -> Result<NestedChain<F>> {
    if let Some(n) = spec.strip_prefix("auto:kronecker:") {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad chain `{spec}`")))?;
        return kronecker_chain(alg, n);
    }
    let v: Vec<Value> = serde_json::from_str(&read(Path::new(spec))?)?;
    let items = v
        .into_iter()
        .map(|x| {
            let c = match x {
                Value::String(s) => parse_complex_spec(alg, &s)?,
                other => crate::io::complex_from_json(alg, &serde_json::from_value(other)?)?,
            };
            SiltingComplex::new(&c)
        })
        .collect::<Result<Vec<_>>>()?;
    NestedChain::new(items)
}

#[allow(clippy::too_many_arguments)]
fn cmd_chain_colimit<F: Field>(
    alg: &Algebra<F>,
    cfg: &RunConfig,
    chain: &str,
    theta: Option<&str>,
    dim_bound: Option<&str>,
    total_bound: Option<usize>,
    growth_cap: usize,
) -> Result<Outcome> {
    let budget = cfg.budget.unwrap_or(DEFAULT_BUDGET);
    let chain = load_chain(alg, chain)?;
    let (system, stopped) = build_system_prefix(&chain, growth_cap)?;
    let mut ok = system.certificates_hold() && system.composites_consistent();
    let stages: Vec<Value> = system
        .stages
        .iter()
        .map(|s| {
            let c = &s.certificates;
            json!({
                "index": s.index,
                "rows_exact": c.rows_exact,
                "squares_commute": c.squares_commute,
                "split_mono": c.split_mono,
                "hom_z_t1": c.hom_z,
                "hom_z_prime_t1": c.hom_z_prime,
                "preenvelope": c.preenvelope,
                "preenvelope_prime": c.preenvelope_prime,
                "z_g_vector": gvec_json(&s.z.g_vector()),
                "z_prime_g_vector": gvec_json(&s.z_prime.g_vector()),
                "next_sizes": [s.next_row.t1.size(), s.next_row.t2.size()],
                "holds": c.all_hold(),
            })
        })
        .collect();
    let add: Vec<Value> = system
        .add_checks
        .iter()
        .enumerate()
        .map(|(i, a)| {
            json!({
                "index": i,
                "contained": a.contained,
                "multiplicities": a.multiplicities,
                "minimal_size": a.minimal_size,
                "decomposition": a.decomposition,
                "holds": a.holds(),
            })
        })
        .collect();
    let mut report = header(alg, "chain-colimit");
    report["chain"] = json!(chain.items().iter().map(|t| gvec_json(&t.g_vector())).collect::<Vec<_>>());
    report["stages"] = json!(stages);
    report["add_checks"] = json!(add);
    report["composites_consistent"] = json!(system.composites_consistent());
    report["stages_built"] = json!(system.stages.len());
    report["stopped"] = json!(stopped.as_ref().map(|e| e.to_string()));
    let catalog = match dim_bound {
        Some(b) => Some(catalog_for(alg, b, total_bound, budget)?),
        None => None,
    };
    if let Some(cat) = &catalog {
        let ml = mittag_leffler_check(&system, &cat.indecomposables)?;
        ok &= ml.all_surjective();
        report["mittag_leffler"] = json!({
            "test_modules": cat.indecomposables.len(),
            "outside_last_aisle": ml.invalid,
            "all_surjective": ml.all_surjective(),
            "entries": ml.entries.iter().map(|e| json!({
                "module": e.module,
                "dim": cat.indecomposables[e.module].dims(),
                "stage": e.stage,
                "source_dim": e.source_dim,
                "target_dim": e.target_dim,
                "rank": e.rank,
                "surjective": e.surjective,
            })).collect::<Vec<_>>(),
        });
    }
    if let Some(th) = theta {
        let th = parse_theta(th)?;
        if th.len() != alg.rank() {
            return Err(Error::Invalid(format!("θ needs {} entries", alg.rank())));
        }
        match &catalog {
            Some(cat) => {
                let lim = limit_torsion_class(&chain, &th, cat, budget)?;
                ok &= lim.sandwich;
                report["modules"] = json!(cat.modules.len());
                report["limit"] = limit_json(&lim);
            }
            None => {
                let gs: Vec<GVector> = chain.items().iter().map(|t| t.g_vector()).collect();
                let sc = crate::nested_colimit::chain_scalings(&gs, &th);
                report["limit"] = json!({
                    "theta": format_theta(&th),
                    "scalings": sc.as_ref().map(|s| rationals_json(s)),
                });
            }
        }
    }
    report["holds"] = json!(ok);
    let status = match (ok, &stopped) {
        (false, _) => 1,
        (true, Some(_)) => 2,
        (true, None) => 0,
    };
    Ok(Outcome {
        report,
        picture: None,
        status,
    })
}

fn run_with<F: Field>(field: F, cli: &Cli) -> Result<Outcome> {
    let cfg = &cli.config;
    let alg = load_algebra(&cfg.algebra)?.over(field)?;
    if cfg.format == Format::Svg {
        if alg.rank() != 2 {
            return Err(Error::Invalid("SVG output needs an algebra with two vertices".into()));
        }
        if !matches!(cli.command, Command::Fan { .. } | Command::Walls { .. }) {
            return Err(Error::Invalid("SVG output is available for `fan` and `walls`".into()));
        }
        if cfg.out.is_none() {
            return Err(Error::Invalid("SVG output needs --out".into()));
        }
    }
    match &cli.command {
        Command::Fan { chambers } => cmd_fan(&alg, cfg, *chambers),
        Command::Walls { modules } => cmd_walls(&alg, cfg, modules),
        Command::Semistable { theta, module } => cmd_semistable(&alg, cfg, theta, module),
        Command::Mutate { silting, summand, dir } => cmd_mutate(&alg, silting, *summand, dir),
        Command::Bongartz {
            complex,
            steps,
            dim_bound,
        } => cmd_bongartz(&alg, cfg, complex, *steps, dim_bound.as_deref()),
        Command::ChainColimit {
            chain,
            theta,
            dim_bound,
            total_bound,
            growth_cap,
        } => cmd_chain_colimit(
            &alg,
            cfg,
            chain,
            theta.as_deref(),
            dim_bound.as_deref(),
            *total_bound,
            *growth_cap,
        ),
    }
}

/// Run a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    match cli.config.field.parse::<FieldSpec>()? {
        FieldSpec::Rational => run_with(Rationals, cli),
        FieldSpec::Prime(p) => run_with(PrimeField::new(p)?, cli),
    }
}

fn write_outputs(cfg: &RunConfig, o: &Outcome) -> Result<()> {
    let text = serde_json::to_string_pretty(&o.report)? + "\n";
    match (cfg.format, &cfg.out) {
        (Format::Json, None) => print!("{text}"),
        (Format::Json, Some(p)) => std::fs::write(p, text)?,
        (Format::Svg, Some(p)) => {
            let picture = o.picture.clone().unwrap_or_default();
            let mut report = o.report.clone();
            report["picture"] = serde_json::to_value(&picture)?;
            std::fs::write(p.with_extension("json"), serde_json::to_string_pretty(&report)? + "\n")?;
            std::fs::write(p, render_svg(&picture)?)?;
        }
        (Format::Svg, None) => return Err(Error::Invalid("SVG output needs --out".into())),
    }
    Ok(())
}

/// Parse `args`, run the command and return the exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(o) => match write_outputs(&cli.config, &o) {
            Ok(()) => o.status,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Outcome> {
        let mut v = vec!["siltlab"];
        v.extend_from_slice(args);
        execute(&Cli::try_parse_from(v).unwrap())
    }

    #[test]
    fn fan_of_a2_is_complete() {
        let o = run(&["--algebra", "linear:2", "fan"]).unwrap();
        assert_eq!(o.status, 0);
        assert_eq!(o.report["chamber_count"], 5);
        let o = run(&["fan", "--chambers", "4"]).unwrap();
        assert_eq!(o.status, 2);
        assert_eq!(o.report["chamber_count"], 4);
        assert_eq!(o.report["complete"], false);
    }

    #[test]
    fn svg_needs_rank_two() {
        let e = run(&["--algebra", "linear:3", "--format", "svg", "--out", "/tmp/x.svg", "fan"]).unwrap_err();
        assert_eq!(exit_code(&e), 2);
    }

    #[test]
    fn mutate_first_summand_of_a() {
        let o = run(&["mutate", "--silting", "A", "--summand", "1", "--dir", "left"]).unwrap();
        assert_eq!(o.report["result"]["g_vector"], json!([-1, 3]));
        assert!(run(&["mutate", "--silting", "A", "--summand", "3"]).is_err());
    }

    #[test]
    fn complex_shorthands() {
        let alg = PathAlgebra::kronecker().over(Rationals).unwrap();
        assert_eq!(parse_complex_spec(&alg, "P2[1]").unwrap().g_vector(), vec![0, -1]);
        assert_eq!(parse_complex_spec(&alg, "A").unwrap().g_vector(), vec![1, 1]);
        assert!(parse_complex_spec(&alg, "P3").is_err());
    }
}
