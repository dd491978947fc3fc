//! Command-line frontend: construction, facet emission, membership checks,
//! vertex realization, indecomposability, matroid checks, and the
//! acceptance self-test, all with JSON on standard output.
//!
//! Exit codes: 0 on success (or membership), 1 on a non-member verdict
//! (certificate in the JSON), 2 on usage or input errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use coxcone::coxfan::CoxeterFan;
use coxcone::defcone;
use coxcone::field::Scalar;
use coxcone::rootsys::{AmbientDirection, Family, RootSystem, RootSystemSpec};
use coxcone::selftest;
use coxcone::submod::{
    self, facet_inequalities, is_submodular_local, FacetInequality, GlobalCheck, LocalCheck,
    SupportFunction, SupportFunctionFile,
};
use coxcone::weyl::WeylGroup;

#[derive(Parser)]
#[command(
    name = "coxcone",
    about = "Exact root-system, Weyl-group, and deformation-cone computations",
    long_about = "Families: A, B, C, D, E6, F4, G2, H3, H4, I2 (with --m). \
                  Generator and weight indices are 1-based."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orders, counts, and Cartan data of a root system
    Info(SystemArgs),
    /// Emit the deduplicated facet inequalities of the submodular cone
    Facets(SystemArgs),
    /// Decide membership of a support function in the submodular cone
    Check(CheckArgs),
    /// Realize the vertices of a submodular support function
    Vertices(VerticesArgs),
    /// Emit the support function of a fundamental coweight polytope
    Weightpoly(WeightpolyArgs),
    /// Nef dimension and indecomposability of a submodular support function
    Indecomposable(HInputArgs),
    /// Test a set of parabolic coset representatives for the matroid property
    MatroidCheck(MatroidArgs),
    /// Run the acceptance self-test suite
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct SystemArgs {
    /// Family name (A, B, C, D, E6, F4, G2, H3, H4, I2)
    family: String,
    /// Rank (must match fixed-rank families)
    rank: usize,
    /// Dihedral order for I2 (3, 4, 5, or 6)
    #[arg(long)]
    m: Option<usize>,
    /// Weyl enumeration cap
    #[arg(long, default_value_t = coxcone::weyl::DEFAULT_CAP)]
    wcap: usize,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[command(flatten)]
    input: HInput,
    /// Use the global (ray-pair) oracle instead of the local one
    #[arg(long)]
    global: bool,
}

#[derive(Args)]
struct VerticesArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[command(flatten)]
    input: HInput,
    /// Also emit ambient coordinates (classical families only)
    #[arg(long)]
    ambient: bool,
}

#[derive(Args)]
struct HInputArgs {
    #[command(flatten)]
    system: SystemArgs,
    #[command(flatten)]
    input: HInput,
}

#[derive(Args)]
struct WeightpolyArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Index k of the fundamental coweight (1-based)
    #[arg(long)]
    fundamental: usize,
}

#[derive(Args)]
struct MatroidArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// JSON file {"I": [..], "reps": [[..], ..]} with 1-based generator
    /// indices; each rep is a word in the generators
    #[arg(short = 'f', long = "file")]
    file: String,
}

#[derive(Args)]
struct SelftestArgs {
    /// Also run the H4 third-fundamental-weight computation (slow)
    #[arg(long)]
    include_h4: bool,
}

/// Support-function source: a JSON file or a fundamental coweight index.
#[derive(Args)]
struct HInput {
    /// Support function JSON file
    #[arg(short = 'f', long = "file")]
    file: Option<String>,
    /// Use the k-th fundamental coweight polytope instead of a file (1-based)
    #[arg(long, conflicts_with = "file")]
    fundamental: Option<usize>,
}

struct Context {
    spec: RootSystemSpec,
    rs: RootSystem,
    weyl: WeylGroup,
    fan: CoxeterFan,
}

fn build_context(args: &SystemArgs) -> Result<Context, String> {
    let family: Family = args.family.parse().map_err(|e| format!("{e}"))?;
    let spec = if family == Family::I2 {
        let m = args
            .m
            .ok_or_else(|| "I2 requires --m (3, 4, 5, or 6)".to_string())?;
        if args.rank != 2 {
            return Err("I2 has rank 2".to_string());
        }
        RootSystemSpec::i2(m)
    } else {
        if args.m.is_some() {
            return Err("--m is only valid for I2".to_string());
        }
        RootSystemSpec::new(family, args.rank)
    };
    let rs = RootSystem::build(spec).map_err(|e| format!("{e}"))?;
    let weyl = WeylGroup::enumerate(&rs, args.wcap).map_err(|e| format!("{e}"))?;
    let fan = CoxeterFan::build(&rs, &weyl);
    Ok(Context {
        spec,
        rs,
        weyl,
        fan,
    })
}

fn load_support_function(ctx: &Context, input: &HInput) -> Result<SupportFunction, String> {
    match (&input.file, input.fundamental) {
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let file: SupportFunctionFile = serde_json::from_str(&text).map_err(|e| {
                format!(
                    "{path}: malformed JSON at line {}, column {}: {e}",
                    e.line(),
                    e.column()
                )
            })?;
            if file.rootsystem != ctx.spec {
                return Err(format!(
                    "{path}: file is for {} but the command names {}",
                    file.rootsystem, ctx.spec
                ));
            }
            file.into_function(&ctx.fan)
                .map_err(|e| format!("{path}: {e}"))
        }
        (None, Some(k)) => {
            if k == 0 || k > ctx.rs.rank {
                return Err(format!(
                    "--fundamental {k} is out of range 1..={}",
                    ctx.rs.rank
                ));
            }
            defcone::support_weight_polytope(&ctx.rs, &ctx.fan, &ctx.rs.fund_coweights[k - 1])
                .map_err(|e| format!("{e}"))
        }
        (None, None) => Err("provide a support function with -f FILE or --fundamental K".into()),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

fn matrix_json(m: &coxcone::linalg::Matrix) -> serde_json::Value {
    json!((0..m.rows).map(|r| m.row(r).to_vec()).collect::<Vec<_>>())
}

fn functional_json(fan: &CoxeterFan, functional: &[(u32, Scalar)]) -> serde_json::Value {
    json!(functional
        .iter()
        .map(|(ray, coeff)| json!({
            "ray": fan.rays[*ray as usize].coords,
            "coeff": coeff,
        }))
        .collect::<Vec<_>>())
}

fn emit(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn cmd_info(args: &SystemArgs) -> Result<ExitCode, String> {
    let ctx = build_context(args)?;
    let facets = facet_inequalities(&ctx.rs, &ctx.weyl, &ctx.fan);
    let value = json!({
        "family": ctx.spec.family.to_string(),
        "rank": ctx.rs.rank,
        "m": ctx.spec.dihedral_m,
        "crystallographic": ctx.rs.crystallographic,
        "weyl_order": ctx.weyl.order(),
        "positive_roots": ctx.rs.pos_roots.len(),
        "ray_count": ctx.fan.ray_count(),
        "wall_count": ctx.fan.walls.len(),
        "facet_count": facets.len(),
        "cartan": matrix_json(&ctx.rs.cartan),
        "inverse_cartan": matrix_json(&ctx.rs.inverse_cartan),
        "gram": matrix_json(&ctx.rs.gram),
        "dynkin_edges": ctx.rs.dynkin_edges.iter()
            .map(|&(i, j, m)| json!([i + 1, j + 1, m]))
            .collect::<Vec<_>>(),
        "fund_weights": ctx.rs.fund_weights,
        "fund_coweights": ctx.rs.fund_coweights,
    });
    emit(&value);
    Ok(ExitCode::SUCCESS)
}

fn cmd_facets(args: &SystemArgs) -> Result<ExitCode, String> {
    let ctx = build_context(args)?;
    let facets = facet_inequalities(&ctx.rs, &ctx.weyl, &ctx.fan);
    let value = json!({
        "rootsystem": ctx.spec,
        "count": facets.len(),
        "facets": facets.iter().map(|f| json!({
            "gen": f.gen + 1,
            "coset_rep_word": ctx.weyl.element(f.coset_key).word
                .iter().map(|&i| i as usize + 1).collect::<Vec<_>>(),
            "functional": functional_json(&ctx.fan, &f.functional),
        })).collect::<Vec<_>>(),
    });
    emit(&value);
    Ok(ExitCode::SUCCESS)
}

fn violation_json(
    ctx: &Context,
    facets: &[FacetInequality],
    h: &SupportFunction,
    use_global: bool,
) -> Option<serde_json::Value> {
    if use_global {
        match submod::is_submodular_global(&ctx.rs, &ctx.weyl, &ctx.fan, h) {
            GlobalCheck::Member => None,
            GlobalCheck::ViolatedPair(a, b) => Some(json!({
                "kind": "ray_pair",
                "rays": [ctx.fan.rays[a as usize].coords, ctx.fan.rays[b as usize].coords],
            })),
        }
    } else {
        match is_submodular_local(facets, h) {
            LocalCheck::Member => None,
            LocalCheck::Violated(facet) => Some(json!({
                "kind": "facet",
                "gen": facet.gen + 1,
                "functional": functional_json(&ctx.fan, &facet.functional),
                "value": CoxeterFan::apply_functional(&facet.functional, &h.values),
            })),
        }
    }
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode, String> {
    let ctx = build_context(&args.system)?;
    let h = load_support_function(&ctx, &args.input)?;
    let facets = facet_inequalities(&ctx.rs, &ctx.weyl, &ctx.fan);
    match violation_json(&ctx, &facets, &h, args.global) {
        None => {
            emit(&json!({"member": true}));
            Ok(ExitCode::SUCCESS)
        }
        Some(certificate) => {
            emit(&json!({"member": false, "certificate": certificate}));
            Ok(ExitCode::FAILURE)
        }
    }
}

fn cmd_vertices(args: &VerticesArgs) -> Result<ExitCode, String> {
    let ctx = build_context(&args.system)?;
    let h = load_support_function(&ctx, &args.input)?;
    let facets = facet_inequalities(&ctx.rs, &ctx.weyl, &ctx.fan);
    if let Some(certificate) = violation_json(&ctx, &facets, &h, false) {
        emit(&json!({"member": false, "certificate": certificate}));
        return Ok(ExitCode::FAILURE);
    }
    let realized = defcone::vertices(&ctx.rs, &ctx.weyl, &ctx.fan, &facets, &h)
        .map_err(|e| format!("{e}"))?;
    let ambient = if args.ambient {
        let converted: Result<Vec<_>, _> = realized
            .vertices
            .iter()
            .map(|v| ctx.rs.ambient_convert(v, AmbientDirection::ToAmbient))
            .collect();
        Some(converted.map_err(|e| format!("{e}"))?)
    } else {
        None
    };
    let mut value = json!({
        "count": realized.vertices.len(),
        "vertices": realized.vertices,
    });
    if let Some(ambient) = ambient {
        value["ambient"] = json!(ambient);
    }
    emit(&value);
    Ok(ExitCode::SUCCESS)
}

fn cmd_weightpoly(args: &WeightpolyArgs) -> Result<ExitCode, String> {
    let ctx = build_context(&args.system)?;
    let k = args.fundamental;
    if k == 0 || k > ctx.rs.rank {
        return Err(format!(
            "--fundamental {k} is out of range 1..={}",
            ctx.rs.rank
        ));
    }
    let h = defcone::support_weight_polytope(&ctx.rs, &ctx.fan, &ctx.rs.fund_coweights[k - 1])
        .map_err(|e| format!("{e}"))?;
    let file = SupportFunctionFile::from_function(ctx.spec, &ctx.fan, &h);
    emit(&serde_json::to_value(&file).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_indecomposable(args: &HInputArgs) -> Result<ExitCode, String> {
    let ctx = build_context(&args.system)?;
    let h = load_support_function(&ctx, &args.input)?;
    let facets = facet_inequalities(&ctx.rs, &ctx.weyl, &ctx.fan);
    if let Some(certificate) = violation_json(&ctx, &facets, &h, false) {
        emit(&json!({"member": false, "certificate": certificate}));
        return Ok(ExitCode::FAILURE);
    }
    let nef =
        defcone::nef_dimension_at(&ctx.rs, &ctx.fan, &facets, &h).map_err(|e| format!("{e}"))?;
    emit(&json!({
        "member": true,
        "nef_dimension": nef,
        "indecomposable": nef == 1,
    }));
    Ok(ExitCode::SUCCESS)
}

#[derive(serde::Deserialize)]
struct MatroidInput {
    #[serde(rename = "I")]
    stabilizer: Vec<usize>,
    reps: Vec<Vec<usize>>,
}

fn cmd_matroid_check(args: &MatroidArgs) -> Result<ExitCode, String> {
    let ctx = build_context(&args.system)?;
    let text = fs::read_to_string(&args.file).map_err(|e| format!("{}: {e}", args.file))?;
    let input: MatroidInput = serde_json::from_str(&text).map_err(|e| {
        format!(
            "{}: malformed JSON at line {}, column {}: {e}",
            args.file,
            e.line(),
            e.column()
        )
    })?;
    let to_zero_based = |indices: &[usize], what: &str| -> Result<Vec<usize>, String> {
        indices
            .iter()
            .map(|&i| {
                if i == 0 || i > ctx.rs.rank {
                    Err(format!(
                        "{what} index {i} is out of range 1..={}",
                        ctx.rs.rank
                    ))
                } else {
                    Ok(i - 1)
                }
            })
            .collect()
    };
    let stabilizer = to_zero_based(&input.stabilizer, "stabilizer")?;
    let reps: Result<Vec<u32>, String> = input
        .reps
        .iter()
        .map(|word| {
            let word = to_zero_based(word, "generator")?;
            Ok(word
                .iter()
                .fold(coxcone::weyl::IDENTITY, |acc, &i| ctx.weyl.right_mul(acc, i)))
        })
        .collect();
    match defcone::coxeter_matroid_check(&ctx.rs, &ctx.weyl, &stabilizer, &reps?) {
        Ok(defcone::MatroidCheck::Matroid) => {
            emit(&json!({"matroid": true}));
            Ok(ExitCode::SUCCESS)
        }
        Ok(defcone::MatroidCheck::ViolatingEdge(a, b)) => {
            emit(&json!({
                "matroid": false,
                "violating_edge": {"rep_indices": [a, b]},
            }));
            Ok(ExitCode::FAILURE)
        }
        Err(e) => Err(format!("{e}")),
    }
}

fn cmd_selftest(args: &SelftestArgs) -> ExitCode {
    let reports = selftest::run_all(args.include_h4);
    let mut failed = 0usize;
    for report in &reports {
        println!("{}", report.line());
        if !report.passed {
            failed += 1;
        }
    }
    emit(&json!({
        "criteria": reports.len(),
        "failed": failed,
    }));
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Info(args) => cmd_info(args),
        Command::Facets(args) => cmd_facets(args),
        Command::Check(args) => cmd_check(args),
        Command::Vertices(args) => cmd_vertices(args),
        Command::Weightpoly(args) => cmd_weightpoly(args),
        Command::Indecomposable(args) => cmd_indecomposable(args),
        Command::MatroidCheck(args) => cmd_matroid_check(args),
        Command::Selftest(args) => return cmd_selftest(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
