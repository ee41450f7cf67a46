//! Command-line front end: exact-arithmetic orbifold Riemann-Roch
//! computations with JSON/CSV/text reports and a one-shot verification
//! suite. Exit status is 0 only when every oracle comparison passes;
//! mathematical mismatches exit 1 with the expected-vs-computed diff in
//! the report, usage errors exit 2.

mod report;

use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use orbihrr::arith::rat_int;
use orbihrr::bg::{dft, idft, parseval_check, BgModel};
use orbihrr::groups::{
    group_from_json, hom_fixed_dim_oracle, representation_from_json, PermGroup, Representation,
    DEFAULT_CLOSURE_BOUND,
};
use orbihrr::mukai::{euler_pairing, mukai_pairing, mukai_vector, verify_isometry, InertiaModel};
use orbihrr::wps::{monomial_count, WpsModel};
use orbihrr::{Cyclotomic, KClass};

use report::{Format, Report};

/// Environment variable overriding the group-closure bound.
const MAX_GROUP_ORDER_ENV: &str = "ORBIHRR_MAX_GROUP_ORDER";

#[derive(Parser)]
#[command(name = "orbihrr", version, about = "Exact orbifold Riemann-Roch on weighted projective stacks and classifying stacks")]
struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Append float renderings of exact values (diagnostic only).
    #[arg(long, global = true)]
    approx: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weighted projective stack computations.
    Wps {
        #[command(subcommand)]
        cmd: WpsCmd,
    },
    /// Classifying-stack computations for a finite permutation group.
    Bg {
        #[command(subcommand)]
        cmd: BgCmd,
    },
    /// Discrete Fourier transform over exact cyclotomics.
    Dft(DftArgs),
    /// Inverse discrete Fourier transform.
    Idft(TransformArgs),
    /// Parseval identity check on integer vectors.
    Parseval(ParsevalArgs),
    /// Mukai-pairing isometry computations.
    Mukai {
        #[command(subcommand)]
        cmd: MukaiCmd,
    },
    /// Run the full verification suite.
    Selftest,
}

#[derive(Subcommand)]
enum WpsCmd {
    /// List the inertia sectors.
    Inertia(WeightsArg),
    /// Euler characteristic of O(d) with per-sector contributions.
    Chi {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Sweep d = 0..=dmax against the weighted monomial count.
    HrrVerify {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long, default_value_t = 40)]
        dmax: i64,
    },
    /// Print the Grothendieck-ring presentation.
    Kring(WeightsArg),
    /// Print the orbifold Todd class per sector.
    Orbtd(WeightsArg),
}

#[derive(Args)]
struct WeightsArg {
    /// Comma-separated positive weights, e.g. 2,3.
    #[arg(long)]
    weights: String,
}

#[derive(Subcommand)]
enum BgCmd {
    /// chi(BG, rep) = dim of the invariant subspace.
    EulerChar {
        #[command(flatten)]
        io: GroupRepArgs,
    },
    /// Euler pairing of two representations (needs exactly two --rep).
    Pairing {
        #[command(flatten)]
        io: GroupRepArgs,
    },
    /// Orbifold Chern character (the character as a class function).
    Orbch {
        #[command(flatten)]
        io: GroupRepArgs,
    },
    /// Gram matrix of a representation pool against the projector oracle.
    VerifyOrthogonality {
        #[command(flatten)]
        io: GroupRepArgs,
    },
}

#[derive(Args)]
struct GroupRepArgs {
    /// Path to the group JSON file.
    #[arg(long)]
    group: String,
    /// Path to a representation JSON file (repeatable).
    #[arg(long = "rep", required = true)]
    reps: Vec<String>,
}

#[derive(Args)]
struct DftArgs {
    #[arg(long)]
    n: u64,
    /// Comma-separated cyclotomic coefficients.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Apply the inverse transform instead.
    #[arg(long)]
    inverse: bool,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
}

#[derive(Args)]
struct ParsevalArgs {
    #[arg(long)]
    n: u64,
    /// Comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    g: String,
}

#[derive(Copy, Clone, ValueEnum)]
enum ModelKind {
    Wps,
    Bg,
}

#[derive(Subcommand)]
enum MukaiCmd {
    /// Verify chi(x, y) = <v(x), v(y)> over a pair family.
    Verify(MukaiArgs),
    /// Evaluate both sides for a single pair.
    Pairing(MukaiArgs),
}

#[derive(Args)]
struct MukaiArgs {
    #[arg(long, value_enum)]
    model: ModelKind,
    /// Weights for the wps model.
    #[arg(long)]
    weights: Option<String>,
    /// Monomial degree cap for `verify --model wps`: pairs from 1..x^xmax.
    #[arg(long)]
    xmax: Option<u32>,
    /// K-class expression in x for `pairing --model wps`.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Second K-class expression in x.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Group file for the bg model.
    #[arg(long)]
    group: Option<String>,
    /// Representation files for the bg model (repeatable).
    #[arg(long = "rep")]
    reps: Vec<String>,
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.cmd) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis();
            if cli.approx {
                report.fill_approx();
            }
            println!("{}", report.render(cli.format));
            std::process::exit(if report.pass { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cmd: &Cmd) -> Result<Report> {
    match cmd {
        Cmd::Wps { cmd } => run_wps(cmd),
        Cmd::Bg { cmd } => run_bg(cmd),
        Cmd::Dft(args) => {
            if args.inverse {
                run_transform("idft", args.n, &args.coeffs, true)
            } else {
                run_transform("dft", args.n, &args.coeffs, false)
            }
        }
        Cmd::Idft(args) => run_transform("idft", args.n, &args.coeffs, true),
        Cmd::Parseval(args) => run_parseval(args),
        Cmd::Mukai { cmd } => run_mukai(cmd),
        Cmd::Selftest => run_selftest(),
    }
}

fn parse_weights(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .with_context(|| format!("bad weight {t:?}"))
        })
        .collect()
}

fn parse_cyclotomics(s: &str) -> Result<Vec<Cyclotomic>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Cyclotomic>()
                .map_err(|e| anyhow!("bad coefficient {t:?}: {e}"))
        })
        .collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .with_context(|| format!("bad integer {t:?}"))
        })
        .collect()
}

fn closure_bound() -> Result<usize> {
    match std::env::var(MAX_GROUP_ORDER_ENV) {
        Ok(v) => v
            .parse::<usize>()
            .with_context(|| format!("bad {MAX_GROUP_ORDER_ENV} value {v:?}")),
        Err(_) => Ok(DEFAULT_CLOSURE_BOUND),
    }
}

fn load_group(path: &str) -> Result<Arc<PermGroup>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    Ok(group_from_json(&text, closure_bound()?)?)
}

fn load_rep(path: &str, group: &Arc<PermGroup>) -> Result<Representation> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let rep = representation_from_json(&text, group)?;
    rep.verify()
        .with_context(|| format!("verifying the representation in {path}"))?;
    Ok(rep)
}

fn sector_key(label: &str) -> String {
    format!("g={label}")
}

fn run_wps(cmd: &WpsCmd) -> Result<Report> {
    match cmd {
        WpsCmd::Inertia(w) => {
            let weights = parse_weights(&w.weights)?;
            let model = WpsModel::new(&weights)?;
            let mut report = Report::new("wps inertia");
            report.input("weights", w.weights.clone());
            let mut sectors = Map::new();
            for s in model.sectors() {
                sectors.insert(
                    sector_key(&s.label),
                    json!({
                        "dim": s.dim,
                        "fixed_weights": s.fixed.iter().map(|&i| weights[i]).collect::<Vec<_>>(),
                        "normal_weights": s.normal_weights,
                        "volume": s.volume,
                        "g": s.g.to_string(),
                    }),
                );
            }
            report.result("sectors", Value::Object(sectors));
            report.result("count", model.sectors().len());
            report.result(
                "dims",
                Value::Array(model.sector_dims().iter().map(|&d| json!(d)).collect()),
            );
            report.check(
                "distinguished sector has the stack dimension",
                model.dim(),
                model.sectors()[0].dim,
            );
            Ok(report)
        }
        WpsCmd::Chi { weights, d } => {
            let ws = parse_weights(&weights.weights)?;
            let model = WpsModel::new(&ws)?;
            let mut report = Report::new("wps chi");
            report.input("weights", weights.weights.clone());
            report.input("d", *d);
            let x = model.kring().monomial(*d);
            let contributions = model.euler_char_contributions(&x)?;
            let chi = model.euler_char(&x)?;
            let mut sectors = Map::new();
            for (s, c) in model.sectors().iter().zip(&contributions) {
                sectors.insert(sector_key(&s.label), json!(c.to_string()));
            }
            report.result("chi", chi.to_string());
            report.result("sectors", Value::Object(sectors));
            if *d >= 0 {
                report.check(
                    "chi matches the weighted monomial count",
                    monomial_count(&ws, *d),
                    &chi,
                );
            }
            Ok(report)
        }
        WpsCmd::HrrVerify { weights, dmax } => {
            let ws = parse_weights(&weights.weights)?;
            let model = WpsModel::new(&ws)?;
            let mut report = Report::new("wps hrr-verify");
            report.input("weights", weights.weights.clone());
            report.input("dmax", *dmax);
            let mut equalities = 0u64;
            for d in 0..=*dmax {
                let chi = model.euler_char_of_line(d)?;
                let oracle = rat_int(monomial_count(&ws, d) as i64);
                if chi == oracle {
                    equalities += 1;
                }
                report.check(&format!("d={d}"), &oracle, &chi);
            }
            report.result("equalities", equalities);
            Ok(report)
        }
        WpsCmd::Kring(w) => {
            let weights = parse_weights(&w.weights)?;
            let model = WpsModel::new(&weights)?;
            let ring = model.kring();
            let mut report = Report::new("wps kring");
            report.input("weights", w.weights.clone());
            report.result("relation", ring.relation_laurent().to_string());
            report.result("presentation", ring.presentation());
            report.result("degree", ring.degree());
            // the relation is e^K of the tangent weights, up to the unit x^deg
            let ek = ring.euler_class(&weights.iter().map(|&a| (a as i64, 1)).collect::<Vec<_>>())?;
            let shifted = ek.mul(&ring.monomial(ring.degree()))?;
            report.check_bool(
                "relation equals the Euler-class product after units",
                shifted.is_zero(),
                &shifted,
            );
            Ok(report)
        }
        WpsCmd::Orbtd(w) => {
            let weights = parse_weights(&w.weights)?;
            let model = WpsModel::new(&weights)?;
            let mut report = Report::new("wps orbtd");
            report.input("weights", w.weights.clone());
            let orbtd = model.orbtd();
            let mut sectors = Map::new();
            for (s, c) in model.sectors().iter().zip(orbtd.iter()) {
                sectors.insert(sector_key(&s.label), json!(c.to_string()));
            }
            report.result("orbtd", Value::Object(sectors));
            let chi_o = model.integrate(&orbtd);
            report.result("integral", chi_o.to_string());
            report.check("integral of orbtd equals chi(O) = 1", 1, &chi_o);
            Ok(report)
        }
    }
}

fn run_bg(cmd: &BgCmd) -> Result<Report> {
    match cmd {
        BgCmd::EulerChar { io } => {
            let group = load_group(&io.group)?;
            if io.reps.len() != 1 {
                bail!("euler-char takes exactly one --rep");
            }
            let rep = load_rep(&io.reps[0], &group)?;
            let model = BgModel::new(group.clone());
            let mut report = Report::new("bg euler-char");
            report.input("group", io.group.clone());
            report.input("rep", io.reps[0].clone());
            let chi = model.euler_char(&rep)?;
            report.result("chi", chi.to_string());
            report.result("group_order", group.order());
            let trivial = Representation::trivial(group.clone());
            report.check(
                "equals the invariant-Hom projector oracle",
                hom_fixed_dim_oracle(&trivial, &rep)?,
                &chi,
            );
            Ok(report)
        }
        BgCmd::Pairing { io } => {
            let group = load_group(&io.group)?;
            if io.reps.len() != 2 {
                bail!("pairing takes exactly two --rep");
            }
            let a = load_rep(&io.reps[0], &group)?;
            let b = load_rep(&io.reps[1], &group)?;
            let model = BgModel::new(group);
            let mut report = Report::new("bg pairing");
            report.input("group", io.group.clone());
            report.input("rep_a", io.reps[0].clone());
            report.input("rep_b", io.reps[1].clone());
            let pairing = model.euler_pairing(&a, &b)?;
            report.result("pairing", pairing.to_string());
            report.check(
                "equals the invariant-Hom projector oracle",
                hom_fixed_dim_oracle(&a, &b)?,
                &pairing,
            );
            Ok(report)
        }
        BgCmd::Orbch { io } => {
            let group = load_group(&io.group)?;
            if io.reps.len() != 1 {
                bail!("orbch takes exactly one --rep");
            }
            let rep = load_rep(&io.reps[0], &group)?;
            let model = BgModel::new(group.clone());
            let mut report = Report::new("bg orbch");
            report.input("group", io.group.clone());
            report.input("rep", io.reps[0].clone());
            let values = model.orbch_values(&rep)?;
            report.result(
                "orbch",
                Value::Array(values.iter().map(|v| json!(v.to_string())).collect()),
            );
            let classes: Vec<Value> = group
                .classes()
                .iter()
                .map(|c| {
                    json!({
                        "size": c.size,
                        "centralizer_order": c.centralizer_order,
                        "representative_order": c.representative_order,
                    })
                })
                .collect();
            report.result("classes", Value::Array(classes));
            report.check(
                "component at the identity class is the dimension",
                rep.dim(),
                &values[0],
            );
            Ok(report)
        }
        BgCmd::VerifyOrthogonality { io } => {
            let group = load_group(&io.group)?;
            let pool: Vec<Representation> = io
                .reps
                .iter()
                .map(|p| load_rep(p, &group))
                .collect::<Result<_>>()?;
            let model = BgModel::new(group);
            let mut report = Report::new("bg verify-orthogonality");
            report.input("group", io.group.clone());
            report.input("reps", io.reps.join(","));
            let mut gram = Vec::new();
            for (i, a) in pool.iter().enumerate() {
                let mut row = Vec::new();
                for (j, b) in pool.iter().enumerate() {
                    let pairing = model.euler_pairing(a, b)?;
                    report.check(
                        &format!("pairing[{i}][{j}] equals the projector oracle"),
                        hom_fixed_dim_oracle(a, b)?,
                        &pairing,
                    );
                    row.push(json!(pairing.to_string()));
                }
                gram.push(Value::Array(row));
            }
            report.result("gram", Value::Array(gram));
            Ok(report)
        }
    }
}

fn run_transform(name: &str, n: u64, coeffs: &str, inverse: bool) -> Result<Report> {
    let f = parse_cyclotomics(coeffs)?;
    let mut report = Report::new(name);
    report.input("n", n);
    report.input("coeffs", coeffs);
    let out = if inverse { idft(n, &f)? } else { dft(n, &f)? };
    report.result(
        "transform",
        Value::Array(out.iter().map(|c| json!(c.to_string())).collect()),
    );
    let round = if inverse { dft(n, &out)? } else { idft(n, &out)? };
    report.check_bool(
        "round-trip through the inverse transform returns the input",
        round == f,
        if round == f { "identical" } else { "differs" },
    );
    Ok(report)
}

fn run_parseval(args: &ParsevalArgs) -> Result<Report> {
    let f = parse_ints(&args.f)?;
    let g = parse_ints(&args.g)?;
    let mut report = Report::new("parseval");
    report.input("n", args.n);
    report.input("f", args.f.clone());
    report.input("g", args.g.clone());
    let (lhs, rhs) = parseval_check(args.n, &f, &g)?;
    report.result("euler_pairing", lhs.to_string());
    report.result("weighted_inner_product", rhs.to_string());
    report.check("Parseval identity", &lhs, &rhs);
    Ok(report)
}

fn wps_model_from(args: &MukaiArgs) -> Result<WpsModel> {
    let weights = args
        .weights
        .as_ref()
        .ok_or_else(|| anyhow!("--model wps requires --weights"))?;
    Ok(WpsModel::new(&parse_weights(weights)?)?)
}

fn bg_model_from(args: &MukaiArgs) -> Result<(BgModel, Vec<Representation>)> {
    let path = args
        .group
        .as_ref()
        .ok_or_else(|| anyhow!("--model bg requires --group"))?;
    let group = load_group(path)?;
    if args.reps.is_empty() {
        bail!("--model bg requires at least one --rep");
    }
    let pool = args
        .reps
        .iter()
        .map(|p| load_rep(p, &group))
        .collect::<Result<_>>()?;
    Ok((BgModel::new(group), pool))
}

fn isometry_checks<M: InertiaModel>(
    report: &mut Report,
    model: &M,
    pairs: &[(String, M::KElem, M::KElem)],
) -> Result<()> {
    for (label, x, y) in pairs {
        let check = verify_isometry(model, x, y)?;
        report.check(&format!("isometry {label}"), &check.lhs, &check.rhs);
    }
    report.result("pairs", pairs.len());
    Ok(())
}

fn run_mukai(cmd: &MukaiCmd) -> Result<Report> {
    match cmd {
        MukaiCmd::Verify(args) => {
            let mut report = Report::new("mukai verify");
            match args.model {
                ModelKind::Wps => {
                    let model = wps_model_from(args)?;
                    let xmax = args.xmax.unwrap_or(4);
                    report.input("model", "wps");
                    report.input("weights", args.weights.clone().unwrap_or_default());
                    report.input("xmax", xmax);
                    let mut pairs = Vec::new();
                    for a in 0..=xmax {
                        for b in 0..=xmax {
                            pairs.push((
                                format!("(x^{a}, x^{b})"),
                                model.kring().monomial(a as i64),
                                model.kring().monomial(b as i64),
                            ));
                        }
                    }
                    isometry_checks(&mut report, &model, &pairs)?;
                }
                ModelKind::Bg => {
                    let (model, pool) = bg_model_from(args)?;
                    report.input("model", "bg");
                    report.input("group", args.group.clone().unwrap_or_default());
                    report.input("reps", args.reps.join(","));
                    let mut pairs = Vec::new();
                    for (i, a) in pool.iter().enumerate() {
                        for (j, b) in pool.iter().enumerate() {
                            pairs.push((format!("(rep{i}, rep{j})"), a.clone(), b.clone()));
                        }
                    }
                    isometry_checks(&mut report, &model, &pairs)?;
                }
            }
            Ok(report)
        }
        MukaiCmd::Pairing(args) => {
            let mut report = Report::new("mukai pairing");
            match args.model {
                ModelKind::Wps => {
                    let model = wps_model_from(args)?;
                    let x_text = args.x.as_ref().ok_or_else(|| anyhow!("--x required"))?;
                    let y_text = args.y.as_ref().ok_or_else(|| anyhow!("--y required"))?;
                    report.input("model", "wps");
                    report.input("weights", args.weights.clone().unwrap_or_default());
                    report.input("x", x_text.clone());
                    report.input("y", y_text.clone());
                    let x: KClass = model.kring().parse(x_text)?;
                    let y: KClass = model.kring().parse(y_text)?;
                    fill_pairing_report(&mut report, &model, &x, &y)?;
                }
                ModelKind::Bg => {
                    let (model, pool) = bg_model_from(args)?;
                    if pool.len() != 2 {
                        bail!("mukai pairing --model bg takes exactly two --rep");
                    }
                    report.input("model", "bg");
                    report.input("group", args.group.clone().unwrap_or_default());
                    report.input("reps", args.reps.join(","));
                    fill_pairing_report(&mut report, &model, &pool[0], &pool[1])?;
                }
            }
            Ok(report)
        }
    }
}

fn fill_pairing_report<M: InertiaModel>(
    report: &mut Report,
    model: &M,
    x: &M::KElem,
    y: &M::KElem,
) -> Result<()> {
    let lhs = euler_pairing(model, x, y)?;
    let vx = mukai_vector(model, x)?;
    let vy = mukai_vector(model, y)?;
    let rhs = mukai_pairing(model, &vx, &vy)?;
    report.result("euler_pairing", lhs.to_string());
    report.result("mukai_pairing", rhs.to_string());
    report.result(
        "mukai_vector_x",
        Value::Array(vx.iter().map(|s| json!(s.to_string())).collect()),
    );
    report.result(
        "mukai_vector_y",
        Value::Array(vy.iter().map(|s| json!(s.to_string())).collect()),
    );
    report.check("isometry", &lhs, &rhs);
    Ok(())
}

fn run_selftest() -> Result<Report> {
    let mut report = Report::new("selftest");
    let mut criteria = Vec::new();
    for r in orbihrr::selftest::run_all() {
        report.check_bool(&format!("criterion {} ({})", r.id, r.name), r.pass, &r.detail);
        criteria.push(json!({
            "id": r.id,
            "name": r.name,
            "pass": r.pass,
            "detail": r.detail,
            "elapsed_ms": r.elapsed_ms,
        }));
    }
    report.result("criteria", Value::Array(criteria));
    Ok(report)
}
