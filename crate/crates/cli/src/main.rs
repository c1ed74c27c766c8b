use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coskel_core::characterizations::{
    alexander_duality_check, check_cohen_macaulay, check_leray, check_neighbourly, check_stacked,
    classify_homology_type, dual_boundary_flip, induced_leray_reading, HomologyType,
};
use coskel_core::cubical_cat0::{
    ardila_embedding, cat0_certify, crossing_complex, cubical_cone, hyperplanes, iterated_hyperplanes,
    verify_crossing_equivalence, verify_hyperplane_identity, Cat0Verdict,
};
use coskel_core::exact_sequences::{cm_sequence_check, exactness_audit, les_table};
use coskel_core::generators::{generate, GeneratorSpec, Param};
use coskel_core::io::{read_complex, write_complex};
use coskel_core::{
    cohomology, coskeleton_faces, homology, open_set_cohomology, open_set_homology, Coefficients, Complex,
    CubicalComplex, Error, HomologyProfile, Method,
};
use serde_json::{json, Value};

mod render;

use render::{profile_csv, profile_json, profile_text, Report};

#[derive(Parser)]
#[command(
    name = "coskel",
    version,
    about = "Co-skeletons, links and exact homology of finite complexes"
)]
struct Cli {
    /// Coefficient ring: z, q or gf:p. Defaults to z for homology, coskeleton
    /// and alexander, q elsewhere.
    #[arg(long, global = true, value_parser = parse_coeff)]
    coeff: Option<Coefficients>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Seed appended to random generator specs that omit one.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
    Csv,
}

/// Where the complex comes from: a JSON file (`-` for stdin) or a generator spec.
#[derive(Args, Clone)]
struct Source {
    #[arg(long, conflicts_with = "gen")]
    input: Option<String>,
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced homology of |X|.
    Homology {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        cohomology: bool,
    },
    /// Reduced homology of the co-skeleton skel^c_k.
    Coskeleton {
        #[command(flatten)]
        src: Source,
        #[arg(short)]
        k: i32,
        #[arg(long)]
        cohomology: bool,
    },
    /// Evaluate a predicate.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Table of the link / co-skeleton long exact sequence.
    Les {
        #[command(flatten)]
        src: Source,
        #[arg(short)]
        k: i32,
    },
    /// Short exact sequences and the Euler relation of a Cohen-Macaulay complex.
    CmSeq {
        #[command(flatten)]
        src: Source,
    },
    /// Boundary complex of the dual of a polytope given by its face lattice.
    Dual {
        #[command(flatten)]
        src: Source,
    },
    /// Alexander duality between skel_k and skel^c_k of a homology sphere.
    Alexander {
        #[command(flatten)]
        src: Source,
        #[arg(short)]
        k: i32,
    },
    /// Cubical complexes and their hyperplanes.
    Cubical {
        #[command(subcommand)]
        what: CubicalCmd,
    },
    /// Emit a generated complex as JSON.
    Gen {
        /// Generator spec, e.g. `cyclic_polytope_boundary(4,8)`.
        #[arg(long)]
        name: String,
    },
    /// Validate a complex file.
    Validate {
        #[command(flatten)]
        src: Source,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Definition,
    Coskeleton,
    Skeleton,
    Combinatorial,
    Induced,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Definition => Method::Definition,
            MethodArg::Coskeleton => Method::Coskeleton,
            MethodArg::Skeleton => Method::Skeleton,
            MethodArg::Combinatorial => Method::Combinatorial,
            MethodArg::Induced => Method::Induced,
        }
    }
}

#[derive(Subcommand)]
enum CheckCmd {
    Cm {
        #[command(flatten)]
        src: Source,
        #[arg(long, value_enum, default_value = "definition")]
        method: MethodArg,
    },
    Leray {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        r: i32,
        /// `induced` reads Leray through induced subcomplexes.
        #[arg(long, value_enum, default_value = "definition")]
        method: MethodArg,
    },
    Stacked {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        s: i32,
        #[arg(long, value_enum, default_value = "definition")]
        method: MethodArg,
    },
    Neighbourly {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        t: i32,
        #[arg(long, value_enum, default_value = "combinatorial")]
        method: MethodArg,
    },
    Ball {
        #[command(flatten)]
        src: Source,
    },
    Sphere {
        #[command(flatten)]
        src: Source,
    },
    Manifold {
        #[command(flatten)]
        src: Source,
    },
}

#[derive(Subcommand)]
enum CubicalCmd {
    Hyperplanes {
        #[command(flatten)]
        src: Source,
    },
    /// All j-fold intersections of hyperplanes.
    Iterated {
        #[command(flatten)]
        src: Source,
        #[arg(short)]
        j: usize,
    },
    Crossing {
        #[command(flatten)]
        src: Source,
    },
    /// Cubical cone over a flag simplicial complex.
    Cone {
        #[command(flatten)]
        src: Source,
    },
    Cat0 {
        #[command(flatten)]
        src: Source,
    },
    /// Embedding into the cube on the hyperplanes.
    Embed {
        #[command(flatten)]
        src: Source,
        /// Root vertex as a 0/1 string or comma separated coordinates.
        #[arg(long)]
        root: Option<String>,
    },
    /// Hyperplane identity for every k, then the crossing-complex transfer.
    Verify {
        #[command(flatten)]
        src: Source,
        #[arg(short)]
        k: Option<i32>,
    },
}

/// Exit statuses.
const FALSE: u8 = 1;
const USAGE: u8 = 2;
const INVALID: u8 = 3;

fn parse_coeff(s: &str) -> Result<Coefficients, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::FieldRequired(_)
        | Error::OutOfRange(_)
        | Error::NotPrime(_)
        | Error::UnknownGenerator(_)
        | Error::InvalidParameters(_) => USAGE,
        _ => INVALID,
    }
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        msg: msg.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match report.render(cli.output) {
            Ok(s) => {
                print!("{s}");
                ExitCode::from(report.status)
            }
            Err(f) => fail(f),
        },
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    eprintln!("coskel: {}", f.msg);
    ExitCode::from(f.code)
}

fn with_seed(mut spec: GeneratorSpec, seed: u64) -> GeneratorSpec {
    let arity = match spec.name.as_str() {
        "erdos_simplicial" | "random_flag" => 3,
        "random_pure" => 4,
        _ => return spec,
    };
    if spec.params.len() + 1 == arity {
        spec.params.push(Param::Int(seed as i64));
    }
    spec
}

fn generate_seeded(name: &str, seed: u64) -> Result<Complex, Failure> {
    let spec: GeneratorSpec = name.parse().map_err(|e: Error| usage(e.to_string()))?;
    Ok(generate(&with_seed(spec, seed))?)
}

fn load(src: &Source, seed: u64) -> Result<Complex, Failure> {
    if let Some(name) = &src.gen {
        return generate_seeded(name, seed);
    }
    let path = src
        .input
        .as_deref()
        .ok_or_else(|| usage("one of --input or --gen is required"))?;
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure {
        code: INVALID,
        msg: format!("{path}: {e}"),
    })?;
    Ok(read_complex(&text)?)
}

fn load_cubical(src: &Source, seed: u64) -> Result<CubicalComplex, Failure> {
    match load(src, seed)? {
        Complex::Cubical(c) => Ok(c),
        other => Err(Failure {
            code: INVALID,
            msg: format!("expected a cubical complex, got a {} one", other.kind()),
        }),
    }
}

fn verdict_status(ok: bool) -> u8 {
    if ok {
        0
    } else {
        FALSE
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let seed = cli.seed;
    let integral = matches!(
        cli.command,
        Command::Homology { .. } | Command::Coskeleton { .. } | Command::Alexander { .. }
    );
    let coeff = cli.coeff.unwrap_or(if integral {
        Coefficients::Integers
    } else {
        Coefficients::Rationals
    });
    match &cli.command {
        Command::Homology { src, cohomology: co } => {
            let x = load(src, seed)?;
            let p = x.face_poset();
            let h = match (&x, co) {
                (Complex::Simplicial(s), false) => homology(s, coeff),
                (Complex::Simplicial(s), true) => cohomology(s, coeff),
                (_, false) => coskel_core::poset_homology(&p, coeff),
                (_, true) => open_set_cohomology(&coskeleton_faces(&p, -1), coeff)?,
            };
            Ok(profile_report(&h, p.dim(), *co))
        }
        Command::Coskeleton {
            src,
            k,
            cohomology: co,
        } => {
            let p = load(src, seed)?.face_poset();
            let faces = coskeleton_faces(&p, *k);
            let h = if *co {
                open_set_cohomology(&faces, coeff)?
            } else {
                open_set_homology(&faces, coeff)?
            };
            Ok(profile_report(&h, p.dim(), *co))
        }
        Command::Check { what } => check(what, coeff, seed),
        Command::Les { src, k } => {
            let p = load(src, seed)?.face_poset();
            let t = les_table(&p, *k, coeff)?;
            let audit = exactness_audit(&t);
            let mut text = format!(
                "k = {}, d = {}, over {}\n     i      a      b      c\n",
                t.k, t.d, t.coeff
            );
            for r in &t.rows {
                text += &format!("{:>6} {:>6} {:>6} {:>6}\n", r.i, r.a, r.b, r.c);
            }
            text += &format!("audit: {}\n", if audit.passed { "passed" } else { "FAILED" });
            Ok(Report {
                json: json!({ "table": t, "audit": audit }),
                text,
                csv: Some(t.to_csv()),
                status: verdict_status(audit.passed),
            })
        }
        Command::CmSeq { src } => {
            let p = load(src, seed)?.face_poset();
            let r = cm_sequence_check(&p, coeff)?;
            let mut text = String::new();
            for s in &r.short {
                text += &format!(
                    "k = {}: 0 -> {} -> {} -> {} -> 0 {}\n",
                    s.k,
                    s.left,
                    s.middle,
                    s.right,
                    if s.holds { "exact" } else { "NOT exact" }
                );
            }
            text += &format!(
                "long sequence: {} | {:?} | {}, alternating sum {}\n",
                r.leading, r.link_terms, r.trailing, r.alternating_sum
            );
            Ok(Report::new(json!(r), text, verdict_status(r.holds)))
        }
        Command::Dual { src } => {
            let p = load(src, seed)?.face_poset();
            let dual = Complex::Poset(dual_boundary_flip(&p)?);
            let text = write_complex(&dual) + "\n";
            Ok(Report::new(
                serde_json::from_str(&text).expect("valid json"),
                text,
                0,
            ))
        }
        Command::Alexander { src, k } => {
            let p = load(src, seed)?.face_poset();
            let r = alexander_duality_check(&p, *k, coeff)?;
            let mut text = format!("d = {}, k = {}, over {}\n", r.d, r.k, r.coeff);
            for row in &r.rows {
                text += &format!(
                    "i = {:>2}: H^i(skel) = {}, H_(d-i-1)(coskel) = {}; H_i(skel) = {}, H^(d-i-1)(coskel) = {}\n",
                    row.i,
                    render::group(coeff, &row.skel_cohomology),
                    render::group(coeff, &row.coskel_homology),
                    render::group(coeff, &row.skel_homology),
                    render::group(coeff, &row.coskel_cohomology),
                );
            }
            text += &format!("holds: {}\n", r.holds);
            Ok(Report::new(json!(r), text, verdict_status(r.holds)))
        }
        Command::Cubical { what } => cubical(what, coeff, seed),
        Command::Gen { name } => {
            let c = generate_seeded(name, seed)?;
            let text = write_complex(&c) + "\n";
            Ok(Report::new(
                serde_json::from_str(&text).expect("valid json"),
                text,
                0,
            ))
        }
        Command::Validate { src } => {
            let x = load(src, seed)?;
            let f = x.f_vector();
            Ok(Report::new(
                json!({ "valid": true, "kind": x.kind(), "dim": x.dim(), "f_vector": f }),
                format!("valid {} complex, dim {}, f = {:?}\n", x.kind(), x.dim(), f),
                0,
            ))
        }
    }
}

fn profile_report(h: &HomologyProfile, dim: i32, co: bool) -> Report {
    Report {
        json: profile_json(h, dim),
        text: profile_text(h, dim, co),
        csv: Some(profile_csv(h, dim)),
        status: 0,
    }
}

fn check(what: &CheckCmd, coeff: Coefficients, seed: u64) -> Result<Report, Failure> {
    let verdict = match what {
        CheckCmd::Cm { src, method } => {
            check_cohen_macaulay(&load(src, seed)?.face_poset(), coeff, (*method).into())
        }
        CheckCmd::Leray { src, r, method } => {
            let p = load(src, seed)?.face_poset();
            match method {
                MethodArg::Induced => induced_leray_reading(&p, *r, coeff)?,
                m => check_leray(&p, *r, coeff, (*m).into())?,
            }
        }
        CheckCmd::Stacked { src, s, method } => {
            check_stacked(&load(src, seed)?.face_poset(), *s, coeff, (*method).into())?
        }
        CheckCmd::Neighbourly { src, t, method } => {
            let x = load(src, seed)?;
            let delta = x.as_simplicial().ok_or(Error::NotSimplicial)?;
            check_neighbourly(delta, *t, (*method).into())?
        }
        CheckCmd::Ball { src } | CheckCmd::Sphere { src } | CheckCmd::Manifold { src } => {
            let p = load(src, seed)?.face_poset();
            let c = classify_homology_type(&p, coeff);
            let ok = match what {
                CheckCmd::Ball { .. } => c.kind == HomologyType::Ball,
                CheckCmd::Sphere { .. } => c.kind == HomologyType::Sphere,
                _ => matches!(c.kind, HomologyType::Sphere | HomologyType::Manifold),
            };
            let j = json!({
                "kind": c.kind,
                "dim": c.dim,
                "coeff": coeff,
                "verdict": ok,
                "boundary": c.boundary.iter().map(|f| p.label(*f)).collect::<Vec<_>>(),
                "witness": c.witness,
            });
            let mut text = format!("homology type over {coeff}: {:?}, dim {}\n", c.kind, c.dim);
            if let Some(w) = &c.witness {
                text += &format!("witness: {w}\n");
            }
            return Ok(Report::new(j, text, verdict_status(ok)));
        }
    };
    let status = verdict_status(verdict.verdict);
    Ok(Report::new(json!(verdict), format!("{verdict}\n"), status))
}

fn parse_root(c: &CubicalComplex, s: &str) -> Result<Vec<(i64, i64)>, Failure> {
    let bad = || usage(format!("cannot read root {s:?}"));
    let coords: Vec<i64> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    } else if s.len() == c.ambient() && s.bytes().all(|b| b == b'0' || b == b'1') {
        s.bytes().map(|b| ((b - b'0') as i64) * c.span()).collect()
    } else {
        return Err(bad());
    };
    if coords.len() != c.ambient() {
        return Err(bad());
    }
    Ok(coords.into_iter().map(|x| (x, x)).collect())
}

fn cubical(what: &CubicalCmd, coeff: Coefficients, seed: u64) -> Result<Report, Failure> {
    match what {
        CubicalCmd::Hyperplanes { src } => {
            let c = load_cubical(src, seed)?;
            let hs = hyperplanes(&c)?;
            let mut text = format!("{} hyperplanes\n", hs.len());
            let mut arr = Vec::new();
            for h in &hs {
                let mids: Vec<String> = h.midcubes.iter().map(|(q, _)| c.cube_label(q)).collect();
                text += &format!(
                    "H{}: {} edges, f = {:?}, cubes {}\n",
                    h.id,
                    h.edges.len(),
                    h.complex.f_vector(),
                    mids.join(" ")
                );
                arr.push(json!({
                    "id": h.id,
                    "edges": h.edges.iter().map(|e| c.cube_label(e)).collect::<Vec<_>>(),
                    "midcubes": h.midcubes.iter().map(|(q, dir)| json!({"cube": c.cube_label(q), "direction": dir})).collect::<Vec<_>>(),
                    "f_vector": h.complex.f_vector(),
                }));
            }
            Ok(Report::new(
                json!({ "count": hs.len(), "hyperplanes": arr }),
                text,
                0,
            ))
        }
        CubicalCmd::Iterated { src, j } => {
            let c = load_cubical(src, seed)?;
            let parts = iterated_hyperplanes(&c, *j)?;
            let mut text = format!("{} intersections of {j} hyperplanes\n", parts.len());
            let mut arr = Vec::new();
            for p in &parts {
                text += &format!("f = {:?}\n", p.f_vector());
                let doc: Value = serde_json::from_str(&write_complex(&p.clone().into())).expect("valid json");
                arr.push(json!({ "f_vector": p.f_vector(), "complex": doc }));
            }
            Ok(Report::new(
                json!({ "j": j, "count": parts.len(), "complexes": arr }),
                text,
                0,
            ))
        }
        CubicalCmd::Crossing { src } => {
            let c = load_cubical(src, seed)?;
            let x = crossing_complex(&c)?;
            let text = write_complex(&x.complex.into()) + "\n";
            Ok(Report::new(
                serde_json::from_str(&text).expect("valid json"),
                text,
                0,
            ))
        }
        CubicalCmd::Cone { src } => {
            let x = load(src, seed)?;
            let delta = x.as_simplicial().ok_or(Error::NotSimplicial)?;
            let text = write_complex(&cubical_cone(delta)?.into()) + "\n";
            Ok(Report::new(
                serde_json::from_str(&text).expect("valid json"),
                text,
                0,
            ))
        }
        CubicalCmd::Cat0 { src } => {
            let c = load_cubical(src, seed)?;
            let cert = cat0_certify(&c);
            let status = verdict_status(cert.verdict == Cat0Verdict::Verified);
            let text = format!("{}\n", render::certificate(&cert));
            Ok(Report::new(json!(cert), text, status))
        }
        CubicalCmd::Embed { src, root } => {
            let c = load_cubical(src, seed)?;
            let root = match root {
                Some(s) => parse_root(&c, s)?,
                None => c
                    .vertices()
                    .first()
                    .cloned()
                    .ok_or_else(|| usage("complex has no vertices"))?,
            };
            let e = ardila_embedding(&c, &root)?;
            let mut text = format!("m = {}, root {}\n", e.m, c.cube_label(&e.root));
            for (v, bits) in &e.vertices {
                text += &format!("{} -> {bits}\n", c.cube_label(v));
            }
            text += &format!(
                "consistent: {}, hyperplanes match: {}\n",
                e.consistent, e.hyperplanes_match
            );
            let j = json!({
                "m": e.m,
                "root": c.cube_label(&e.root),
                "vertices": e.vertices.iter().map(|(v, b)| json!({"vertex": c.cube_label(v), "image": b})).collect::<Vec<_>>(),
                "cubes": e.cubes.iter().map(|(q, b)| json!({"cube": c.cube_label(q), "image": b})).collect::<Vec<_>>(),
                "consistent": e.consistent,
                "hyperplanes_match": e.hyperplanes_match,
            });
            Ok(Report::new(
                j,
                text,
                verdict_status(e.consistent && e.hyperplanes_match),
            ))
        }
        CubicalCmd::Verify { src, k } => {
            let c = load_cubical(src, seed)?;
            let ks: Vec<i32> = match k {
                Some(k) => vec![*k],
                None => (-1..=c.dim()).collect(),
            };
            let mut identity = Vec::new();
            let mut text = String::new();
            for &k in &ks {
                let ok = verify_hyperplane_identity(&c, k)?;
                text += &format!("hyperplane identity at k = {k}: {ok}\n");
                identity.push(json!({ "k": k, "holds": ok }));
            }
            let mut ok = identity.iter().all(|v| v["holds"] == json!(true));
            let cert = cat0_certify(&c);
            let crossing = if cert.is_verified() {
                let r = verify_crossing_equivalence(&c, coeff)?;
                text += &format!(
                    "crossing transfer over {coeff}: {} (betti failures {:?}, facet bijection {}, cone {:?})\n",
                    r.holds, r.betti_failures, r.facet_bijection, r.cone_detected
                );
                ok &= r.holds;
                json!(r)
            } else {
                text += &format!("crossing transfer skipped: {}\n", render::certificate(&cert));
                Value::Null
            };
            Ok(Report::new(
                json!({ "identity": identity, "certificate": cert, "crossing": crossing, "holds": ok }),
                text,
                verdict_status(ok),
            ))
        }
    }
}
