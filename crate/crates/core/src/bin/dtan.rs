use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use dynkin_tangent::config::{RunConfig, CHARACTERISTIC_ENV};
use dynkin_tangent::degeneration::{degenerates, is_in_cm, DegenerationPoset, Orbit};
use dynkin_tangent::dynkin::QuiverJson;
use dynkin_tangent::mesh::{gamma_to_dot, MeshValueJson, SummandJson};
use dynkin_tangent::reps::RepJson;
use dynkin_tangent::tangent::{
    dimension_vectors_up_to, tangent_to_cm, tangent_to_orbit, verify_pair, verify_theorem,
    VerifyOptions,
};
use dynkin_tangent::{
    DimVector, DynkinGraph, DynkinQuiver, DynkinType, Error, MatrixRep, MeshCategory,
    ObjectMultiset, RepContext, SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "dtan",
    version,
    about = "Degenerations and tangent spaces for Dynkin quivers"
)]
struct Cli {
    /// Prime characteristic of the ground field.
    #[arg(long, global = true, env = CHARACTERISTIC_ENV)]
    characteristic: Option<u64>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads, 0 for all cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graph data of a Dynkin diagram or quiver.
    Quiver {
        #[command(subcommand)]
        cmd: QuiverCmd,
    },
    /// Positive roots.
    Roots {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        json: bool,
    },
    /// The AR quiver with dimension vectors.
    ArQuiver {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Write the AR quiver as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write vertices and meshes as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Orbits of a dimension vector and their degeneration order.
    Orbits {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long, value_parser = parse_dimv)]
        dimv: DimVector,
        /// Write the degeneration poset as JSON to this file.
        #[arg(long)]
        poset: Option<PathBuf>,
        /// Write the Hasse diagram as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Whether N lies in the orbit closure of M.
    Degeneration {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long = "M")]
        m: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
    },
    /// The defect function δ_{M,N}.
    Delta {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long = "M")]
        m: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
        /// Write the mesh function as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Tangent spaces to the orbit and to the rank scheme at N.
    Tangent {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long = "M")]
        m: PathBuf,
        #[arg(long = "N")]
        n: PathBuf,
        /// Write a basis of T_N C_M as JSON matrices to this file.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Certifies equality of the tangent spaces of orbit closures and rank
    /// schemes over a family of dimension vectors.
    VerifyD {
        #[command(flatten)]
        quiver: QuiverArgs,
        /// Largest total dimension.
        #[arg(long)]
        max_dim: Option<i64>,
        /// Largest coordinate.
        #[arg(long, default_value_t = 2)]
        max_coord: i64,
        /// Single pair instead of a sweep: the orbit M (multiset or
        /// representation file).
        #[arg(long = "M", requires = "n")]
        m: Option<PathBuf>,
        /// The degeneration N of M.
        #[arg(long = "N", requires = "m")]
        n: Option<PathBuf>,
        /// Single dimension vector instead of a sweep.
        #[arg(long, value_parser = parse_dimv)]
        dimv: Option<DimVector>,
        /// Descent candidates tried per tangent vector.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        no_replay: bool,
        /// Random tangent vectors certified per pair on top of the basis.
        #[arg(long, default_value_t = 0)]
        random_vectors: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Representations given by matrices.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
}

#[derive(Subcommand)]
enum QuiverCmd {
    Info {
        #[command(flatten)]
        quiver: QuiverArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// Indecomposable summands of a representation.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone)]
struct QuiverArgs {
    /// Quiver JSON file.
    #[arg(long, conflicts_with_all = ["ty", "rank"])]
    quiver: Option<PathBuf>,
    #[arg(long = "type", value_parser = parse_type)]
    ty: Option<DynkinType>,
    #[arg(long)]
    rank: Option<usize>,
    /// Comma separated arrows `s>t`.
    #[arg(long)]
    orientation: Option<String>,
}

fn parse_type(s: &str) -> Result<DynkinType, String> {
    match s.to_ascii_uppercase().as_str() {
        "A" => Ok(DynkinType::A),
        "D" => Ok(DynkinType::D),
        "E" => Ok(DynkinType::E),
        _ => Err(format!("unknown Dynkin type `{s}`")),
    }
}

fn parse_dimv(s: &str) -> Result<DimVector, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()
        .map(DimVector)
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("{0}: {1}")]
    Json(PathBuf, serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(path.into(), e))
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.into(), e))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    write_text(
        path,
        &(serde_json::to_string_pretty(value).expect("serializable") + "\n"),
    )
}

impl QuiverArgs {
    fn graph(&self) -> CliResult<DynkinGraph> {
        Ok(self.load()?.graph().clone())
    }

    fn load(&self) -> CliResult<DynkinQuiver> {
        if let Some(path) = &self.quiver {
            return Ok(DynkinQuiver::from_json(&read_json::<QuiverJson>(path)?)?);
        }
        let (Some(ty), Some(rank)) = (self.ty, self.rank) else {
            return Err(CliError::Usage(
                "give --quiver FILE or --type and --rank".into(),
            ));
        };
        let graph = DynkinGraph::build(ty, rank)?;
        Ok(match &self.orientation {
            Some(o) => DynkinQuiver::parse_orientation(graph, o)?,
            None => DynkinQuiver::with_default_orientation(graph),
        })
    }
}

/// A multiset file `[{p, a, mult}]` or a representation file.
#[derive(Deserialize)]
#[serde(untagged)]
enum ObjectFile {
    Multiset(Vec<SummandJson>),
    Rep(RepJson),
}

struct Session {
    config: RunConfig,
}

impl Session {
    fn context(&self, quiver: DynkinQuiver) -> CliResult<RepContext> {
        let cat = Arc::new(MeshCategory::new(quiver));
        Ok(RepContext::new(cat, self.config.field()?, self.config.seed)
            .with_attempts(self.config.realize_attempts))
    }

    fn object(&self, ctx: &RepContext, path: &Path) -> CliResult<ObjectMultiset> {
        match read_json::<ObjectFile>(path)? {
            ObjectFile::Multiset(list) => Ok(ObjectMultiset::from_json(ctx.cat().zdelta(), &list)?),
            ObjectFile::Rep(json) => Ok(ctx.decompose(&self.rep(ctx, &json)?)?),
        }
    }

    fn rep(&self, ctx: &RepContext, json: &RepJson) -> CliResult<MatrixRep> {
        if DynkinQuiver::from_json(&json.quiver)? != **ctx.quiver() {
            return Err(Error::QuiverMismatch.into());
        }
        Ok(MatrixRep::from_json_with(
            ctx.quiver().clone(),
            json,
            ctx.field(),
        )?)
    }

    fn point(&self, ctx: &RepContext, path: &Path) -> CliResult<MatrixRep> {
        match read_json::<ObjectFile>(path)? {
            ObjectFile::Multiset(list) => {
                Ok(ctx.realize_sum(&ObjectMultiset::from_json(ctx.cat().zdelta(), &list)?)?)
            }
            ObjectFile::Rep(json) => self.rep(ctx, &json),
        }
    }
}

fn show_multiset(graph: &DynkinGraph, m: &ObjectMultiset) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|(v, k)| {
            let s = format!("v({},{})", v.p, graph.label(v.a));
            if k > 1 {
                format!("{s}^{k}")
            } else {
                s
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Serialize)]
struct InfoJson {
    schema_version: u32,
    quiver: QuiverJson,
    n_delta: i64,
    phi: Vec<String>,
    maximal_root: Vec<i64>,
    positive_roots: usize,
}

#[derive(Serialize)]
struct ArVertexJson {
    p: i64,
    a: String,
    dimv: Vec<i64>,
}

#[derive(Serialize)]
struct ArQuiverJson {
    schema_version: u32,
    quiver: QuiverJson,
    n_delta: i64,
    vertices: Vec<ArVertexJson>,
    meshes: Vec<MeshValueJson>,
}

#[derive(Serialize)]
struct DeltaJson {
    schema_version: u32,
    delta: Vec<MeshValueJson>,
}

#[derive(Serialize)]
struct TangentJson {
    schema_version: u32,
    orbit_tangent_dim: usize,
    tangent_dim: usize,
    /// Per arrow `s>t`, the matrices of each basis vector.
    basis: Vec<std::collections::BTreeMap<String, Vec<Vec<i64>>>>,
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let mut config = RunConfig::from_env();
    if let Some(p) = cli.characteristic {
        config.characteristic = p;
    }
    config.seed = cli.seed;
    config.threads = cli.threads;
    config.install_threads();
    let session = Session { config };
    match cli.cmd {
        Cmd::Quiver {
            cmd: QuiverCmd::Info { quiver, json },
        } => {
            let q = quiver.load()?;
            let g = q.graph();
            let phi: Vec<String> = g.phi().iter().map(|&b| g.label(b).to_string()).collect();
            if json {
                let info = InfoJson {
                    schema_version: SCHEMA_VERSION,
                    quiver: q.to_json(),
                    n_delta: g.delta_number(),
                    phi,
                    maximal_root: g.maximal_root().0,
                    positive_roots: g.positive_roots().len(),
                };
                println!(
                    "{}",
                    serde_json::to_string_pretty(&info).expect("serializable")
                );
            } else {
                println!("graph: {}", g.name());
                println!("vertices: {}", g.labels().join(" "));
                let edges: Vec<String> = g
                    .edges()
                    .iter()
                    .map(|&(a, b)| format!("{}-{}", g.label(a), g.label(b)))
                    .collect();
                println!("edges: {}", edges.join(" "));
                println!("orientation: {}", q.orientation_string());
                println!("n_delta: {}", g.delta_number());
                let phi_pairs: Vec<String> = g
                    .labels()
                    .iter()
                    .zip(&phi)
                    .map(|(a, b)| format!("{a}->{b}"))
                    .collect();
                println!("phi: {}", phi_pairs.join(" "));
                println!("maximal root: {}", g.maximal_root());
                println!("positive roots: {}", g.positive_roots().len());
            }
        }
        Cmd::Roots { quiver, json } => {
            let g = quiver.graph()?;
            let roots = g.positive_roots();
            if json {
                let rows: Vec<&Vec<i64>> = roots.iter().map(|r| &r.0).collect();
                println!("{}", serde_json::to_string(&rows).expect("serializable"));
            } else {
                for r in &roots {
                    println!("{r}");
                }
                println!("{} positive roots", roots.len());
            }
        }
        Cmd::ArQuiver { quiver, dot, json } => {
            let cat = MeshCategory::new(quiver.load()?);
            let g = cat.graph();
            if let Some(path) = &dot {
                write_text(path, &gamma_to_dot(&cat))?;
            }
            let doc = ArQuiverJson {
                schema_version: SCHEMA_VERSION,
                quiver: cat.quiver().to_json(),
                n_delta: g.delta_number(),
                vertices: cat
                    .gamma()
                    .vertices()
                    .iter()
                    .map(|&v| ArVertexJson {
                        p: v.p,
                        a: g.label(v.a).to_string(),
                        dimv: cat.dimension_vector_of(v).expect("window vertex").0,
                    })
                    .collect(),
                meshes: cat
                    .gamma()
                    .meshes()
                    .iter()
                    .map(|m| MeshValueJson {
                        p: m.p,
                        a: g.label(m.a).to_string(),
                        value: 1,
                    })
                    .collect(),
            };
            match &json {
                Some(path) => write_json(path, &doc)?,
                None if dot.is_none() => println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                ),
                None => {}
            }
            println!(
                "{} vertices, {} meshes",
                doc.vertices.len(),
                doc.meshes.len()
            );
        }
        Cmd::Orbits {
            quiver,
            dimv,
            poset,
            dot,
        } => {
            let cat = MeshCategory::new(quiver.load()?);
            let ps = DegenerationPoset::build(&cat, &dimv)?;
            ps.validate()?;
            for (i, o) in ps.orbits.iter().enumerate() {
                println!(
                    "{i}: dim {} codim {}  {}",
                    o.dimension,
                    o.codimension(&cat),
                    show_multiset(cat.graph(), &o.multiset)
                );
            }
            println!(
                "{} orbits, {} covering relations",
                ps.len(),
                ps.covers().len()
            );
            if let Some(path) = &poset {
                write_json(path, &ps.to_json(&cat))?;
            }
            if let Some(path) = &dot {
                write_text(path, &ps.to_dot(&cat))?;
            }
        }
        Cmd::Degeneration { quiver, m, n } => {
            let ctx = session.context(quiver.load()?)?;
            let cat = ctx.cat();
            let om = Orbit::new(cat, session.object(&ctx, &m)?);
            let on = Orbit::new(cat, session.object(&ctx, &n)?);
            println!(
                "M = {}  (orbit dim {})",
                show_multiset(cat.graph(), &om.multiset),
                om.dimension
            );
            println!(
                "N = {}  (orbit dim {})",
                show_multiset(cat.graph(), &on.multiset),
                on.dimension
            );
            let deg = degenerates(cat, &om, &on)?;
            println!("N in closure of O_M: {deg}");
            println!("N in C_M: {}", is_in_cm(cat, &om, &on)?);
        }
        Cmd::Delta { quiver, m, n, json } => {
            let ctx = session.context(quiver.load()?)?;
            let cat = ctx.cat();
            let delta = cat.delta_pair(&session.object(&ctx, &m)?, &session.object(&ctx, &n)?)?;
            for (mesh, value) in delta.iter() {
                println!("m({},{}) = {value}", mesh.p, cat.graph().label(mesh.a));
            }
            println!("nonnegative: {}", delta.is_nonnegative());
            if let Some(path) = &json {
                write_json(
                    path,
                    &DeltaJson {
                        schema_version: SCHEMA_VERSION,
                        delta: delta.to_json(cat.graph()),
                    },
                )?;
            }
        }
        Cmd::Tangent {
            quiver,
            m,
            n,
            basis,
        } => {
            let ctx = session.context(quiver.load()?)?;
            let om = Orbit::new(ctx.cat(), session.object(&ctx, &m)?);
            let point = session.point(&ctx, &n)?;
            let t_orbit = tangent_to_orbit(&point)?;
            let t = tangent_to_cm(&ctx, &om, &point)?;
            println!("dim Z1(N,N) = {}", t.ambient_dim());
            println!("dim T_N O_N = {}", t_orbit.dim());
            println!("dim T_N C_M = {}", t.dim());
            if let Some(path) = &basis {
                let g = ctx.cat().graph();
                let arrows = ctx.quiver().arrows();
                let doc = TangentJson {
                    schema_version: SCHEMA_VERSION,
                    orbit_tangent_dim: t_orbit.dim(),
                    tangent_dim: t.dim(),
                    basis: t
                        .basis()
                        .iter()
                        .map(|z| {
                            arrows
                                .iter()
                                .zip(&z.maps)
                                .map(|(&(s, tt), mat)| {
                                    (
                                        format!("{}>{}", g.label(s), g.label(tt)),
                                        mat.to_signed_rows(),
                                    )
                                })
                                .collect()
                        })
                        .collect(),
                };
                write_json(path, &doc)?;
            }
        }
        Cmd::VerifyD {
            quiver,
            max_dim,
            max_coord,
            m,
            n: n_path,
            dimv,
            budget,
            no_replay,
            random_vectors,
            report,
        } => {
            let q = quiver.load()?;
            let n = q.num_vertices();
            let ctx = session.context(q)?;
            let mut opts = VerifyOptions {
                replay: !no_replay,
                random_vectors,
                ..Default::default()
            };
            if let Some(b) = budget {
                opts.budget.max_candidates = b;
            }
            let rep = match (m, n_path) {
                (Some(m), Some(np)) => {
                    let om = Orbit::new(ctx.cat(), session.object(&ctx, &m)?);
                    let on = Orbit::new(ctx.cat(), session.object(&ctx, &np)?);
                    verify_pair(&ctx, &om, &on, &opts)?
                }
                _ => {
                    let dims = match dimv {
                        Some(d) => vec![d],
                        None => dimension_vectors_up_to(n, max_coord, max_dim),
                    };
                    verify_theorem(&ctx, &dims, &opts)?
                }
            };
            let s = &rep.summary;
            if rep.experimental {
                println!("type E run: experimental");
            }
            println!(
                "{} dimension vectors, {} pairs, {} tangent vectors, {} certified",
                s.dimension_vectors, s.instances, s.vectors, s.certified
            );
            println!(
                "leaves: {} orbit, {} curve; descent nodes {} in {} pairs; max depth {}",
                s.orbit_leaves,
                s.curve_leaves,
                s.descent_nodes,
                s.instances_with_descent,
                s.max_depth
            );
            for (inst, f) in rep.findings().take(10) {
                println!(
                    "finding at {:?}: {}",
                    inst.dimv,
                    serde_json::to_string(f).expect("serializable")
                );
            }
            let verdict = serde_json::to_value(rep.verdict).expect("serializable");
            println!("verdict: {}", verdict.as_str().unwrap_or_default());
            if let Some(path) = &report {
                write_json(path, &rep)?;
            }
            return Ok(ExitCode::from(rep.verdict.exit_code() as u8));
        }
        Cmd::Rep {
            cmd: RepCmd::Decompose { input, json },
        } => {
            let doc: RepJson = read_json(&input)?;
            let q = DynkinQuiver::from_json(&doc.quiver)?;
            let ctx = session.context(q)?;
            let rep = MatrixRep::from_json_with(ctx.quiver().clone(), &doc, ctx.field())?;
            let m = ctx.decompose(&rep)?;
            let g = ctx.cat().graph();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&m.to_json(g)).expect("serializable")
                );
            } else {
                println!("dimv {}", rep.dimv());
                for (v, k) in m.iter() {
                    let d = ctx.cat().dimension_vector_of(v)?;
                    println!("v({},{}) x{k}  dimv {d}", v.p, g.label(v.a));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
