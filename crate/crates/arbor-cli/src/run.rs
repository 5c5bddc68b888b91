use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use arbor_core::{
    io as fmt_io, verify_certificate, verify_coloring, CoverMode, ForestClass, Graph, Star,
    StarDecomposition,
};
use arbor_gen::FamilySpec;
use arbor_solve::{
    acyclic_chromatic_number, chromatic_number, decide_cover, edge_chromatic_number, min_cover,
    check_inequality_chain, ArborParam, Budget, ColoringOutcome, SolveRequest, SolveStatus,
};

use crate::accept;
use crate::args::*;
use crate::dot::to_dot;

#[derive(Debug)]
pub enum CliError {
    /// Exit code 64.
    Usage(String),
    /// Exit code 65.
    Format(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Format(msg) => write!(f, "{msg}"),
        }
    }
}

pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Param(args) => run_param(args),
        Command::Decide(args) => run_decide(args),
        Command::Build(args) => run_build(args),
        Command::Certify(args) => run_certify(args),
        Command::Chain(args) => run_chain(args),
        Command::Reproduce(args) => run_reproduce(args),
        Command::Dot(args) => run_dot(args),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Format(format!("cannot read {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    fmt_io::parse_graph(&read_file(path)?)
        .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Format(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_class(tag: &str) -> Result<ForestClass, CliError> {
    ForestClass::from_tag(tag).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_mode(tag: &str) -> Result<CoverMode, CliError> {
    CoverMode::from_tag(tag).map_err(|e| CliError::Usage(e.to_string()))
}

fn resolve_budget(args: &BudgetArgs) -> Budget {
    let mut budget = Budget::default();
    if let Ok(env_nodes) = std::env::var("ARBOR_BUDGET_NODES") {
        if let Ok(n) = env_nodes.parse::<u64>() {
            budget.max_nodes = n;
        }
    }
    if let Some(n) = args.budget_nodes {
        budget.max_nodes = n;
    }
    if let Some(s) = args.budget_secs {
        budget.max_millis = s.saturating_mul(1000);
    }
    budget
}

fn run_gen(args: GenArgs) -> Result<i32, CliError> {
    let (spec, out) = match args.family {
        FamilyCmd::Complete { n, out } => (FamilySpec::Complete { n }, out),
        FamilyCmd::CompleteBipartite { m, n, out } => (FamilySpec::CompleteBipartite { m, n }, out),
        FamilyCmd::Cycle { n, out } => (FamilySpec::Cycle { n }, out),
        FamilyCmd::Path { n, out } => (FamilySpec::Path { n }, out),
        FamilyCmd::PathPower { n, p, out } => (FamilySpec::PathPower { n, p }, out),
        FamilyCmd::DoubleWheel { l, out } => (FamilySpec::DoubleWheel { l }, out),
        FamilyCmd::Gk { k, out } => (FamilySpec::Gk { k }, out),
        FamilyCmd::Prop2Gadget { k, out } => (FamilySpec::Prop2Gadget { k }, out),
        FamilyCmd::PlanarIaGadget { out } => (FamilySpec::PlanarIaGadget, out),
        FamilyCmd::DegenerateLb { d, n_override, out } => {
            (FamilySpec::DegenerateLb { d, n_override }, out)
        }
        FamilyCmd::RandomDegenerate { n, d, seed, out } => {
            (FamilySpec::RandomDegenerate { n, d, seed }, out)
        }
        FamilyCmd::RandomInterval { n, seed, out } => (FamilySpec::RandomInterval { n, seed }, out),
        FamilyCmd::Subdivide { input, out } => {
            let g = read_graph(&input)?;
            let sd = arbor_gen::subdivide_once(&g);
            write_out(&out.output, &fmt_io::write_graph(&sd.graph))?;
            if let Some(role_path) = &out.roles {
                let mut text = String::new();
                for (e, &w) in &sd.edge_vertex {
                    text.push_str(&format!("role {w} subdivision:{}-{}\n", e.u(), e.v()));
                }
                fs::write(role_path, text).map_err(|e| {
                    CliError::Format(format!("cannot write {}: {e}", role_path.display()))
                })?;
            }
            return Ok(0);
        }
    };
    let generated = spec.build().map_err(|e| CliError::Usage(e.to_string()))?;
    write_out(&out.output, &fmt_io::write_graph(&generated.graph))?;
    if let Some(role_path) = &out.roles {
        let mut text = String::new();
        for (v, tag) in &generated.roles {
            text.push_str(&format!("role {v} {tag}\n"));
        }
        fs::write(role_path, text)
            .map_err(|e| CliError::Format(format!("cannot write {}: {e}", role_path.display())))?;
    }
    for note in &generated.notes {
        eprintln!("{note}");
    }
    Ok(0)
}

fn run_param(args: ParamArgs) -> Result<i32, CliError> {
    let g = read_graph(&args.graph)?;
    let budget = resolve_budget(&args.budget);

    if let Some(param) = &args.param {
        let result = match param.as_str() {
            "chi" => chromatic_number(&g, budget),
            "chi-prime" => edge_chromatic_number(&g, budget),
            "chi-acyc" => acyclic_chromatic_number(&g, budget),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown parameter `{other}` (chi, chi-prime, chi-acyc)"
                )))
            }
        };
        return Ok(match result.outcome {
            ColoringOutcome::Found { value, certificate } => {
                println!("{value}");
                if let Some(out) = &args.output {
                    fs::write(out, fmt_io::write_coloring(&certificate)).map_err(|e| {
                        CliError::Format(format!("cannot write {}: {e}", out.display()))
                    })?;
                }
                0
            }
            ColoringOutcome::BudgetExhausted { lower, .. } => {
                eprintln!("budget exhausted; proven lower bound {lower}");
                2
            }
        });
    }

    let class = parse_class(args.class.as_deref().ok_or_else(|| {
        CliError::Usage("either --class or --param is required".into())
    })?)?;
    let mode = parse_mode(&args.mode)?;
    let req = SolveRequest::new(&g, class, mode).with_budget(budget);
    let result = min_cover(&req).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(match result.status {
        SolveStatus::Feasible(cert) => {
            println!("{}", cert.k());
            eprintln!(
                "{} {} optimum {} ({} nodes, {} ms)",
                class,
                mode,
                cert.k(),
                result.stats.nodes,
                result.stats.elapsed.as_millis()
            );
            if let Some(out) = &args.output {
                fs::write(out, fmt_io::write_certificate(&cert)).map_err(|e| {
                    CliError::Format(format!("cannot write {}: {e}", out.display()))
                })?;
            }
            0
        }
        SolveStatus::BudgetExhausted { lower, .. } => {
            eprintln!("budget exhausted; optimum is at least {lower}");
            2
        }
        SolveStatus::Infeasible => unreachable!("minimize never ends infeasible"),
    })
}

fn parse_load_bounds(specs: &[String]) -> Result<BTreeMap<usize, usize>, CliError> {
    let mut out = BTreeMap::new();
    for s in specs {
        let (v, t) = s
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("load bound `{s}` is not `vertex:count`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex in `{s}`")))?;
        let t: usize = t
            .parse()
            .map_err(|_| CliError::Usage(format!("bad count in `{s}`")))?;
        out.insert(v, t);
    }
    Ok(out)
}

fn run_decide(args: DecideArgs) -> Result<i32, CliError> {
    let g = read_graph(&args.graph)?;
    let class = parse_class(&args.class)?;
    let mode = parse_mode(&args.mode)?;
    let mut req = SolveRequest::new(&g, class, mode)
        .decide(args.k)
        .with_budget(resolve_budget(&args.budget));
    req.load_caps = parse_load_bounds(&args.load_caps)?;
    req.load_floors = parse_load_bounds(&args.load_floors)?;

    let result = decide_cover(&req).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(match result.status {
        SolveStatus::Feasible(cert) => {
            println!("feasible with {} parts", cert.k());
            if let Some(out) = &args.output {
                fs::write(out, fmt_io::write_certificate(&cert)).map_err(|e| {
                    CliError::Format(format!("cannot write {}: {e}", out.display()))
                })?;
            }
            0
        }
        SolveStatus::Infeasible => {
            println!("infeasible");
            1
        }
        SolveStatus::BudgetExhausted { .. } => {
            println!("budget-exhausted");
            2
        }
    })
}

fn read_coloring(path: &Path) -> Result<arbor_core::ColoringCertificate, CliError> {
    fmt_io::parse_coloring(&read_file(path)?)
        .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn read_certificate(path: &Path) -> Result<arbor_core::CoverCertificate, CliError> {
    fmt_io::parse_certificate(&read_file(path)?)
        .map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn parse_star_decomposition(text: &str, minor: &Graph) -> Result<StarDecomposition, CliError> {
    let mut stars = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        if it.next() != Some("s") {
            return Err(CliError::Format(format!(
                "star decomposition lines start with `s`, got `{line}`"
            )));
        }
        let center: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| CliError::Format(format!("bad center in `{line}`")))?;
        let leaves: Vec<usize> = it
            .map(|t| {
                t.parse()
                    .map_err(|_| CliError::Format(format!("bad leaf `{t}`")))
            })
            .collect::<Result<_, _>>()?;
        stars.push(Star { center, leaves });
    }
    Ok(StarDecomposition {
        stars,
        minor_edges: minor.edges().to_vec(),
    })
}

fn run_build(args: BuildArgs) -> Result<i32, CliError> {
    match args.op {
        BuildOp::Layers {
            graph,
            cert,
            modulus,
            output,
        } => {
            let g = read_graph(&graph)?;
            let cert = read_certificate(&cert)?;
            let split = arbor_construct::split_layers(&g, &cert, modulus)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write_out(&output, &fmt_io::write_certificate(&split))?;
            Ok(0)
        }
        BuildOp::Degen { graph, output } => {
            let g = read_graph(&graph)?;
            let (_, cert) = arbor_construct::degeneracy_star_cover(&g);
            write_out(&output, &fmt_io::write_certificate(&cert))?;
            Ok(0)
        }
        BuildOp::AcyclicPairs {
            graph,
            coloring,
            output,
        } => {
            let g = read_graph(&graph)?;
            let col = read_coloring(&coloring)?;
            let cover = arbor_construct::acyclic_pairs_cover(&g, &col)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write_out(&output, &fmt_io::write_certificate(&cover.certificate))?;
            Ok(0)
        }
        BuildOp::AcyclicMatchings {
            graph,
            coloring,
            output,
        } => {
            let g = read_graph(&graph)?;
            let col = read_coloring(&coloring)?;
            let cover = arbor_construct::acyclic_matching_cover(&g, &col)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write_out(&output, &fmt_io::write_certificate(&cover.certificate))?;
            Ok(0)
        }
        BuildOp::LeafSplit {
            graph,
            cert,
            coloring,
            output,
        } => {
            let g = read_graph(&graph)?;
            let stars = read_certificate(&cert)?;
            let col = read_coloring(&coloring)?;
            let split = arbor_construct::leaf_color_split(&g, &stars, &col)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write_out(&output, &fmt_io::write_certificate(&split.certificate))?;
            Ok(0)
        }
        BuildOp::MinorColoring {
            graph,
            stars,
            minor,
            phi,
            isa,
            output,
        } => {
            let g = read_graph(&graph)?;
            let minor_graph = read_graph(&minor)?;
            let dec = parse_star_decomposition(&read_file(&stars)?, &minor_graph)?;
            let phi = read_coloring(&phi)?;
            let isa = read_certificate(&isa)?;
            let out = arbor_construct::shallow_minor_coloring(&g, &dec, &phi, &isa)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            write_out(&output, &fmt_io::write_coloring(&out.certificate))?;
            Ok(0)
        }
    }
}

fn run_certify(args: CertifyArgs) -> Result<i32, CliError> {
    let g = read_graph(&args.graph)?;
    let text = read_file(&args.certificate)?;
    let first = text.split_ascii_whitespace().next().unwrap_or("");
    match first {
        "c" => {
            let cert = fmt_io::parse_certificate(&text)
                .map_err(|e| CliError::Format(format!("{}: {e}", args.certificate.display())))?;
            let report = verify_certificate(&g, &cert);
            if report.is_valid() {
                println!("valid {} {} with {} parts", cert.mode, cert.class, cert.k());
                Ok(0)
            } else {
                println!("invalid\n{}", report.summary());
                Ok(1)
            }
        }
        "col" => {
            let col = fmt_io::parse_coloring(&text)
                .map_err(|e| CliError::Format(format!("{}: {e}", args.certificate.display())))?;
            match verify_coloring(&g, &col) {
                Ok(true) => {
                    println!("valid {} coloring with {} colors", col.kind, col.c);
                    Ok(0)
                }
                Ok(false) => {
                    println!("invalid {} coloring", col.kind);
                    Ok(1)
                }
                Err(e) => Err(CliError::Format(e.to_string())),
            }
        }
        _ => Err(CliError::Format(
            "file is neither a certificate (`c`) nor a coloring (`col`)".into(),
        )),
    }
}

fn run_chain(args: ChainArgs) -> Result<i32, CliError> {
    let g = read_graph(&args.graph)?;
    let budget = resolve_budget(&args.budget);
    let (params, exhausted) = accept::compute_all_params(&g, budget);
    for p in ArborParam::ALL {
        match params.get(&p) {
            Some(v) => println!("{p} = {v}"),
            None => println!("{p} = ? (budget exhausted)"),
        }
    }
    let violations = check_inequality_chain(&params);
    if violations.is_empty() {
        println!("chain: ok ({} parameters)", params.len());
        Ok(if exhausted { 2 } else { 0 })
    } else {
        for v in &violations {
            println!("chain: {v}");
        }
        Ok(1)
    }
}

fn run_reproduce(args: ReproduceArgs) -> Result<i32, CliError> {
    let rows = accept::run_rows(args.extended, args.seed);
    let mut gating_failures = 0;
    for row in &rows {
        let (status, note) = match &row.outcome {
            accept::RowOutcome::Pass(note) => ("pass", note.clone()),
            accept::RowOutcome::Fail(note) => {
                if row.gating {
                    gating_failures += 1;
                }
                ("FAIL", note.clone())
            }
            accept::RowOutcome::Info(note) => ("info", note.clone()),
        };
        println!(
            "{status:4}  {:<34} {:>8} ms  {note}",
            row.id,
            row.millis
        );
    }
    if gating_failures > 0 {
        println!("{gating_failures} gating row(s) failed");
        Ok(1)
    } else {
        println!("all gating rows pass");
        Ok(0)
    }
}

fn run_dot(args: DotArgs) -> Result<i32, CliError> {
    let g = read_graph(&args.graph)?;
    let cert = match &args.cert {
        Some(path) => Some(read_certificate(path)?),
        None => None,
    };
    write_out(&args.output, &to_dot(&g, cert.as_ref()))?;
    Ok(0)
}
