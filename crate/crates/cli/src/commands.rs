use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use ramsey_simple::analysis::{
    monte_carlo, neighbourhood_profile, well_behaved, EstimateReport, WellBehavedConfig,
};
use ramsey_simple::arrowing::{arrows, is_minimal_ramsey, necessity_gamma, triangle_refuter};
use ramsey_simple::bounds::{
    corollary_curves, kogan_sparse_set, parse_p_grid, qtilde_bounds, write_curves_csv,
    BoundsConfig, CurveConfig, KoganConfig,
};
use ramsey_simple::forest::{
    balanced_colouring, colour_g_minus_z, construct_szz, find_mono_forest, random_colouring,
    MonoForest, ProofCase, SzzGraph,
};
use ramsey_simple::format::{
    parse_affine, parse_coloured, parse_graph, write_affine, write_coloured, write_edge_list,
    write_szz, SzzHeader,
};
use ramsey_simple::gamma::{
    affine_gamma_with_prime, build_affine_gamma, build_empty_gamma, build_random_gamma,
    check_cover_condition, check_degree_condition, CoverMode,
};
use ramsey_simple::gnp::sample_gnp;
use ramsey_simple::{ColouredGraph, Error, Graph, Seed};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::CliError;

pub struct Ctx {
    pub timing: bool,
}

/// A finished command: its JSON result and whether a budget cap was hit.
pub struct Outcome {
    pub result: Value,
    pub budget_hit: bool,
}

impl Outcome {
    fn ok<T: Serialize>(value: T) -> Result<Self, CliError> {
        Ok(Outcome {
            result: serde_json::to_value(value)?,
            budget_hit: false,
        })
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::input(path, e))
}

fn load_coloured(path: &Path) -> Result<ColouredGraph, CliError> {
    let text = read(path)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let parsed = if first.is_some_and(|l| l.starts_with("affine")) {
        parse_affine(&text).map(|a| a.coloured)
    } else {
        parse_coloured(&text)
    };
    parsed.map_err(|e| CliError::input(path, e))
}

fn resolve(source: &GraphSource, seed: Option<u64>) -> Result<Graph, CliError> {
    match (&source.graph, source.n, source.p) {
        (Some(path), _, _) => load_graph(path),
        (None, Some(n), Some(p)) => {
            let seed =
                seed.ok_or_else(|| CliError::Usage("sampling G(n, p) needs --seed".into()))?;
            Ok(sample_gnp(n, p, Seed(seed))?)
        }
        _ => Err(CliError::Usage("give --graph PATH or --n N --p P".into())),
    }
}

fn szz(forest: &Path, q: usize, cap: u64) -> Result<(Graph, SzzGraph), CliError> {
    let f = load_graph(forest)?;
    let g = construct_szz(&f, q, cap)?;
    Ok((f, g))
}

pub fn run(cmd: &Command, ctx: &Ctx) -> Result<Outcome, CliError> {
    match cmd {
        Command::Sample(a) => {
            let g = sample_gnp(a.n, a.p, Seed(a.seed))?;
            if let Some(path) = &a.write {
                write(path, &write_edge_list(&g))?;
            }
            Outcome::ok(json!({
                "n": g.n(),
                "m": g.m(),
                "min_degree": g.min_degree(),
                "max_degree": g.max_degree(),
            }))
        }
        Command::Profile(a) => Outcome::ok(neighbourhood_profile(&resolve(&a.source, a.seed)?)?),
        Command::WbCheck(a) => {
            let g = resolve(&a.source, Some(a.seed))?;
            let cfg = WellBehavedConfig {
                w4_samples: a.w4_samples,
                seed: Seed(a.seed).trial(1),
            };
            Outcome::ok(well_behaved(&g, &cfg)?)
        }
        Command::Mc(a) => {
            let r = monte_carlo(a.property, a.n, a.p, a.trials, Seed(a.seed))?;
            if let Some(path) = &a.out {
                write(
                    path,
                    &format!("{}\n{}\n", EstimateReport::CSV_HEADER, r.csv_row()),
                )?;
            }
            let confirmed = r.confirms(a.threshold);
            Outcome::ok(json!({ "estimate": r, "confirmed": confirmed }))
        }
        Command::GammaBuild(a) => gamma_build(a),
        Command::GammaVerify(a) => {
            let gamma = load_coloured(&a.gamma)?;
            let forest = load_graph(&a.forest)?;
            let mode = match (a.samples, a.seed) {
                (Some(samples), Some(seed)) => CoverMode::Sampled {
                    samples,
                    seed: Seed(seed),
                },
                _ => CoverMode::Exhaustive,
            };
            Outcome::ok(check_cover_condition(&gamma, &forest, a.delta, mode)?)
        }
        Command::Arrow(a) => arrow(a, ctx),
        Command::Minimal(a) => minimal(a),
        Command::Necessity(a) => {
            let g = load_graph(&a.host)?;
            let h = load_graph(&a.target)?;
            let c = a.colouring.as_deref().map(load_coloured).transpose()?;
            match necessity_gamma(&g, &h, a.q, a.w, c.as_ref(), &a.budget.budget()) {
                Err(e @ Error::BudgetExceeded { .. }) => budget_outcome(&e),
                r => Outcome::ok(r?),
            }
        }
        Command::RefuteTriangle(a) => {
            let g = load_graph(&a.host)?;
            let h = load_graph(&a.target)?;
            let c = load_coloured(&a.colouring)?;
            let r = triangle_refuter(&g, a.w, &h, &c)?;
            Outcome::ok(json!({
                "v": r.v,
                "colour": r.colour,
                "u_set": r.u_set,
                "extension": write_coloured(&r.extension),
            }))
        }
        Command::SzzBuild(a) => {
            let (_, g) = szz(&a.forest, a.q, a.max_host_edges)?;
            if let Some(path) = &a.write {
                write(path, &write_szz(&g.header(), &g.graph))?;
            }
            Outcome::ok(json!({
                "header": g.header(),
                "n": g.graph.n(),
                "m": g.graph.m(),
                "min_degree": g.graph.min_degree(),
                "bipartition": g.bipartition,
            }))
        }
        Command::SzzColour(a) => {
            let (_, g) = szz(&a.forest, a.q, a.max_host_edges)?;
            let c = colour_g_minus_z(&g)?;
            if let Some(path) = &a.write {
                write(path, &write_coloured(&c))?;
            }
            let classes: Vec<Value> = (1..=g.q)
                .map(|i| {
                    let class = c.class(i);
                    json!({ "colour": i, "edges": class.m(), "max_degree": class.max_degree() })
                })
                .collect();
            Outcome::ok(json!({
                "header": g.header(),
                "classes": classes,
                "forest_free": true,
                "pendant_min_degree": g.graph.min_degree(),
            }))
        }
        Command::SzzMono(a) => szz_mono(a),
        Command::Bounds(a) => {
            let g = resolve(&a.source, a.seed)?;
            let profile = neighbourhood_profile(&g)?;
            let cfg = BoundsConfig {
                eps: a.eps,
                log_constant: a.log_constant,
            };
            Outcome::ok(qtilde_bounds(&profile, g.n(), &cfg)?)
        }
        Command::Curves(a) => {
            let grid = parse_p_grid(&a.p_grid)?;
            let cfg = CurveConfig {
                margin: a.margin,
                k_max: a.k_max,
            };
            let rows = corollary_curves(a.n, &grid, &cfg)?;
            if let Some(path) = &a.out {
                let mut buf = Vec::new();
                write_curves_csv(&rows, &mut buf).map_err(|e| CliError::Io(e.to_string()))?;
                write(path, &String::from_utf8(buf).expect("CSV is UTF-8"))?;
            }
            Outcome::ok(json!({ "leading_order": true, "rows": rows }))
        }
        Command::Kogan(a) => {
            let g = resolve(&a.source, Some(a.seed))?;
            let cfg = KoganConfig {
                restarts: a.restarts,
                seed: Seed(a.seed).trial(1),
            };
            Outcome::ok(kogan_sparse_set(&g, a.k, &cfg)?)
        }
        Command::Replay(_) => unreachable!("replay is handled by the caller"),
    }
}

fn gamma_build(a: &GammaBuildArgs) -> Result<Outcome, CliError> {
    let (coloured, text, prime) = match a.kind {
        GammaKind::Affine => {
            let g = match a.prime {
                Some(s) => affine_gamma_with_prime(s, a.q, a.delta)?,
                None => build_affine_gamma(a.delta, a.q, a.lambda, a.eps)?,
            };
            let text = write_affine(&g);
            (g.coloured, text, Some(g.s))
        }
        GammaKind::Random => {
            let seed = a
                .seed
                .ok_or_else(|| CliError::Usage("random gadgets need --seed".into()))?;
            let g = build_random_gamma(a.delta, a.q, Seed(seed))?;
            let text = write_coloured(&g);
            (g, text, None)
        }
        GammaKind::Empty => {
            let g = build_empty_gamma(a.delta, a.q)?;
            let text = write_coloured(&g);
            (g, text, None)
        }
    };
    if let Some(path) = &a.write {
        write(path, &text)?;
    }
    let degree = check_degree_condition(&coloured, a.delta);
    let class_edges: Vec<usize> = (1..=a.q).map(|c| coloured.class(c).m()).collect();
    Outcome::ok(json!({
        "kind": a.kind,
        "s": prime,
        "order": coloured.n(),
        "edges": coloured.graph().m(),
        "class_edges": class_edges,
        "degree_ok": degree.ok,
        "max_colour_degree": degree.max_colour_degree,
    }))
}

fn budget_outcome(e: &Error) -> Result<Outcome, CliError> {
    let Error::BudgetExceeded { nodes, reason, .. } = e else {
        unreachable!("only called on budget errors")
    };
    Ok(Outcome {
        result: json!({ "arrows": null, "nodes": nodes, "budget_hit": true, "reason": reason }),
        budget_hit: true,
    })
}

fn arrow(a: &ArrowArgs, ctx: &Ctx) -> Result<Outcome, CliError> {
    let g = load_graph(&a.host)?;
    let h = load_graph(&a.target)?;
    match arrows(&g, &h, a.q, &a.budget.budget()) {
        Err(e @ Error::BudgetExceeded { .. }) => budget_outcome(&e),
        r => {
            let r = r?;
            Outcome::ok(json!({
                "arrows": r.arrows,
                "witness": r.witness.as_ref().map(write_coloured),
                "nodes": r.stats.nodes,
                "millis": ctx.timing.then_some(r.stats.millis),
                "budget_hit": false,
            }))
        }
    }
}

fn minimal(a: &ArrowArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.host)?;
    let h = load_graph(&a.target)?;
    let r = match is_minimal_ramsey(&g, &h, a.q, &a.budget.budget()) {
        Err(e @ Error::BudgetExceeded { .. }) => return budget_outcome(&e),
        r => r?,
    };
    let deletions = |ds: &[ramsey_simple::arrowing::Deletion]| -> Vec<Value> {
        ds.iter()
            .map(|d| json!({ "removed": d.removed, "arrows": d.arrows, "witness": d.witness.as_ref().map(write_coloured) }))
            .collect()
    };
    Outcome::ok(json!({
        "is_ramsey": r.is_ramsey,
        "minimal": r.minimal,
        "host_min_degree": g.min_degree(),
        "edge_deletions": deletions(&r.edge_deletions),
        "vertex_deletions": deletions(&r.vertex_deletions),
        "nodes": r.nodes,
        "budget_hit": false,
    }))
}

#[derive(Serialize)]
struct MonoSummary {
    header: SzzHeader,
    colouring: String,
    trials: u64,
    successes: u64,
    cases: BTreeMap<&'static str, u64>,
    colours: BTreeMap<usize, u64>,
    failures: Vec<(u64, String)>,
    first: Option<MonoForest>,
}

fn szz_mono(a: &SzzMonoArgs) -> Result<Outcome, CliError> {
    let (_, g) = szz(&a.forest, a.q, a.max_host_edges)?;
    let fixed = match a.colouring.as_str() {
        "random" | "balanced" => None,
        path => Some(load_coloured(Path::new(path))?),
    };
    let trials = if fixed.is_some() { 1 } else { a.trials };
    if fixed.is_none() && a.seed.is_none() {
        return Err(CliError::Usage("generated colourings need --seed".into()));
    }
    let seed = Seed(a.seed.unwrap_or(0));
    let results: Vec<Result<MonoForest, Error>> = (0..trials)
        .into_par_iter()
        .map(|k| {
            let phi = match (&fixed, a.colouring.as_str()) {
                (Some(c), _) => c.clone(),
                (None, "balanced") => balanced_colouring(&g, seed.trial(k)),
                _ => random_colouring(&g, seed.trial(k)),
            };
            find_mono_forest(&g, &phi)
        })
        .collect();
    let mut summary = MonoSummary {
        header: g.header(),
        colouring: a.colouring.clone(),
        trials,
        successes: 0,
        cases: BTreeMap::new(),
        colours: BTreeMap::new(),
        failures: Vec::new(),
        first: None,
    };
    for (k, r) in results.into_iter().enumerate() {
        match r {
            Ok(m) => {
                summary.successes += 1;
                let case = match m.case {
                    ProofCase::RepeatedColour => "repeated_colour",
                    ProofCase::Balanced => "balanced",
                };
                *summary.cases.entry(case).or_default() += 1;
                *summary.colours.entry(m.colour).or_default() += 1;
                summary.first.get_or_insert(m);
            }
            Err(e) if fixed.is_some() => return Err(e.into()),
            Err(e) => summary.failures.push((k as u64, e.to_string())),
        }
    }
    if !summary.failures.is_empty() {
        return Err(CliError::Failed(serde_json::to_value(&summary)?));
    }
    Outcome::ok(summary)
}
