//! Named families, figure complexes and seeded random complexes.
//!
//! Specs are written `name(arg, …)`; arguments are integers, floats or
//! nested specs, e.g. `cyclic_polytope_boundary(4,8)` or
//! `cubical_cone(cross_polytope_boundary(3))`. Random families take the
//! seed as their last argument.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{binomial, Complex, Cube, CubicalComplex, SimplicialComplex};
use crate::cubical_cat0::cubical_cone;
use crate::error::{Error, Result};
use crate::io::read_complex;

#[derive(Debug, Clone, PartialEq)]
pub enum Param {
    Int(i64),
    Float(f64),
    Spec(GeneratorSpec),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(i) => write!(f, "{i}"),
            Param::Float(x) => write!(f, "{x:?}"),
            Param::Spec(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub name: String,
    pub params: Vec<Param>,
}

impl GeneratorSpec {
    pub fn new(name: &str, params: Vec<Param>) -> Self {
        GeneratorSpec {
            name: name.to_string(),
            params,
        }
    }

    /// Shorthand for integer-only specs.
    pub fn ints(name: &str, params: &[i64]) -> Self {
        Self::new(name, params.iter().map(|&i| Param::Int(i)).collect())
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(Param::to_string).collect();
            write!(f, "({})", ps.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            i: 0,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(Error::Parse(format!("trailing input in generator spec {s:?}")));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn token(&mut self, ok: impl Fn(u8) -> bool) -> &str {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && ok(self.s[self.i]) {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i]).expect("ascii")
    }

    fn spec(&mut self) -> Result<GeneratorSpec> {
        let name = self.token(|c| c.is_ascii_alphanumeric() || c == b'_').to_string();
        if name.is_empty() || !name.as_bytes()[0].is_ascii_alphabetic() {
            return Err(Error::Parse("expected a generator name".into()));
        }
        let mut params = Vec::new();
        if self.eat(b'(') && !self.eat(b')') {
            loop {
                params.push(self.param()?);
                if self.eat(b')') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(Error::Parse("expected ',' or ')' in generator spec".into()));
                }
            }
        }
        Ok(GeneratorSpec { name, params })
    }

    fn param(&mut self) -> Result<Param> {
        self.skip_ws();
        match self.s.get(self.i) {
            Some(c) if c.is_ascii_alphabetic() => Ok(Param::Spec(self.spec()?)),
            _ => {
                let t = self.token(|c| c.is_ascii_digit() || b"+-.eE".contains(&c));
                if let Ok(i) = t.parse::<i64>() {
                    Ok(Param::Int(i))
                } else {
                    t.parse::<f64>()
                        .map(Param::Float)
                        .map_err(|_| Error::Parse(format!("bad generator argument {t:?}")))
                }
            }
        }
    }
}

const FIG_RUNNING: &str = include_str!("../fixtures/fig_running_example.json");
const FIG_CM_A: &str = include_str!("../fixtures/fig_cm_pair_a.json");
const FIG_CM_B: &str = include_str!("../fixtures/fig_cm_pair_b.json");
const FIG_STACKED_A: &str = include_str!("../fixtures/fig_stacked_pair_a.json");
const FIG_STACKED_B: &str = include_str!("../fixtures/fig_stacked_pair_b.json");
const FIG_HYPERPLANE: &str = include_str!("../fixtures/fig_hyperplane_example.json");
const FIG_CROSSING: &str = include_str!("../fixtures/fig_crossing_example.json");
const FIG_CONE_BASE: &str = include_str!("../fixtures/fig_cone_base.json");

fn fixture(json: &str) -> Complex {
    read_complex(json).expect("shipped fixtures are valid")
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

struct Args<'a> {
    spec: &'a GeneratorSpec,
}

impl Args<'_> {
    fn count(&self, n: usize) -> Result<()> {
        if self.spec.params.len() != n {
            return Err(bad(format!("{} takes {n} argument(s)", self.spec.name)));
        }
        Ok(())
    }

    fn int(&self, i: usize) -> Result<i64> {
        match self.spec.params.get(i) {
            Some(Param::Int(v)) => Ok(*v),
            _ => Err(bad(format!(
                "argument {} of {} must be an integer",
                i + 1,
                self.spec.name
            ))),
        }
    }

    fn nat(&self, i: usize) -> Result<usize> {
        let v = self.int(i)?;
        usize::try_from(v).map_err(|_| bad(format!("argument {} of {} must be >= 0", i + 1, self.spec.name)))
    }

    fn prob(&self, i: usize) -> Result<f64> {
        let p = match self.spec.params.get(i) {
            Some(Param::Float(x)) => *x,
            Some(Param::Int(v)) => *v as f64,
            _ => {
                return Err(bad(format!(
                    "argument {} of {} must be a number",
                    i + 1,
                    self.spec.name
                )))
            }
        };
        if !(0.0..=1.0).contains(&p) {
            return Err(bad(format!("probability {p} outside [0, 1]")));
        }
        Ok(p)
    }

    fn seed(&self, i: usize) -> Result<u64> {
        Ok(self.int(i)? as u64)
    }
}

/// Builds the complex named by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<Complex> {
    let a = Args { spec };
    let simplicial = |s: Result<SimplicialComplex>| s.map(Complex::from);
    match spec.name.as_str() {
        "simplex" => {
            a.count(1)?;
            simplicial(Ok(simplex(a.nat(0)?)))
        }
        "simplex_skeleton" => {
            a.count(2)?;
            simplicial(Ok(simplex(a.nat(0)?).skeleton(a.int(1)? as i32)))
        }
        "boundary_simplex" => {
            a.count(1)?;
            simplicial(Ok(boundary_simplex(a.nat(0)?)))
        }
        "cross_polytope_boundary" => {
            a.count(1)?;
            simplicial(cross_polytope_boundary(a.nat(0)?))
        }
        "cyclic_polytope_boundary" => {
            a.count(2)?;
            simplicial(cyclic_polytope_boundary(a.nat(0)?, a.nat(1)?))
        }
        "stacked_ball" => {
            a.count(2)?;
            simplicial(stacked_ball(a.nat(0)?, a.nat(1)?))
        }
        "fig_running_example" => {
            a.count(0)?;
            Ok(fixture(FIG_RUNNING))
        }
        "fig_cm_pair" => {
            a.count(1)?;
            member(a.int(0)?, FIG_CM_A, FIG_CM_B)
        }
        "fig_stacked_pair" => {
            a.count(1)?;
            member(a.int(0)?, FIG_STACKED_A, FIG_STACKED_B)
        }
        "fig_hyperplane_example" => {
            a.count(0)?;
            Ok(fixture(FIG_HYPERPLANE))
        }
        "fig_crossing_example" => {
            a.count(0)?;
            Ok(fixture(FIG_CROSSING))
        }
        "fig_cone_example" => {
            a.count(0)?;
            Ok(cubical_cone(&fig_cone_base())?.into())
        }
        "cube_grid" => {
            let sizes = (0..spec.params.len())
                .map(|i| a.nat(i))
                .collect::<Result<Vec<_>>>()?;
            Ok(cube_grid(&sizes)?.into())
        }
        "strip" => {
            a.count(1)?;
            let m = a.nat(0)?;
            if m == 0 {
                return Err(bad("strip needs m >= 1"));
            }
            Ok(cube_grid(&[m, 1])?.into())
        }
        "cubical_cone" => {
            a.count(1)?;
            let base = match &spec.params[0] {
                Param::Spec(s) => generate(s)?,
                _ => return Err(bad("cubical_cone takes a generator spec")),
            };
            let delta = base
                .as_simplicial()
                .ok_or_else(|| bad("cubical_cone needs a simplicial base"))?;
            Ok(cubical_cone(delta)?.into())
        }
        "erdos_simplicial" => {
            a.count(3)?;
            simplicial(Ok(erdos_simplicial(a.nat(0)?, a.prob(1)?, a.seed(2)?)))
        }
        "random_flag" => {
            a.count(3)?;
            simplicial(Ok(random_flag(a.nat(0)?, a.prob(1)?, a.seed(2)?)))
        }
        "random_pure" => {
            a.count(4)?;
            simplicial(random_pure(a.nat(0)?, a.nat(1)?, a.nat(2)?, a.seed(3)?))
        }
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}

/// Parses and generates in one step.
pub fn generate_str(spec: &str) -> Result<Complex> {
    generate(&spec.parse()?)
}

fn member(i: i64, a: &str, b: &str) -> Result<Complex> {
    match i {
        0 => Ok(fixture(a)),
        1 => Ok(fixture(b)),
        _ => Err(bad("figure pairs have members 0 and 1")),
    }
}

/// `Δ` of Fig. 11: triangle 123 with the path 3-4-5-2.
pub fn fig_cone_base() -> SimplicialComplex {
    match fixture(FIG_CONE_BASE) {
        Complex::Simplicial(s) => s,
        _ => unreachable!("fixture is simplicial"),
    }
}

/// The `n`-simplex on vertices `0..=n`.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(n + 1, vec![(0..=n).collect()]).expect("simplex")
}

/// `∂Δ^n`, an `(n−1)`-sphere; `∂Δ^0` is the empty complex.
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::empty();
    }
    simplex(n).skeleton(n as i32 - 1)
}

/// Boundary of the `d`-dimensional cross-polytope; vertices `2i`, `2i+1`
/// are antipodal.
pub fn cross_polytope_boundary(d: usize) -> Result<SimplicialComplex> {
    if d == 0 || d > 12 {
        return Err(bad("cross_polytope_boundary needs 1 <= d <= 12"));
    }
    let facets = (0u32..1 << d).map(|mask| (0..d).map(|i| 2 * i + (mask >> i & 1) as usize).collect());
    SimplicialComplex::from_facets(2 * d, facets)
}

/// Facets of the cyclic `d`-polytope on `n` vertices by Gale evenness: a
/// `d`-set `S` is a facet when every run of `S` strictly between two
/// non-members has even length.
pub fn cyclic_polytope_boundary(d: usize, n: usize) -> Result<SimplicialComplex> {
    if d < 2 || n <= d || n > 24 {
        return Err(bad("cyclic_polytope_boundary needs 2 <= d < n <= 24"));
    }
    let mut facets = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == d && gale_even(mask, n) {
            facets.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    SimplicialComplex::from_facets(n, facets)
}

fn gale_even(mask: u32, n: usize) -> bool {
    let mut run = 0;
    let mut seen_gap = false;
    for i in 0..n {
        if mask >> i & 1 == 1 {
            run += 1;
        } else {
            if seen_gap && run % 2 == 1 {
                return false;
            }
            seen_gap = true;
            run = 0;
        }
    }
    true
}

/// `m` `d`-simplices in a path: `{i, …, i+d}` for `i < m`.
pub fn stacked_ball(d: usize, m: usize) -> Result<SimplicialComplex> {
    if d == 0 || m == 0 {
        return Err(bad("stacked_ball needs d >= 1 and m >= 1"));
    }
    SimplicialComplex::from_facets(m + d, (0..m).map(|i| (i..=i + d).collect()))
}

/// Grid of unit cubes `[0,n_1] × … × [0,n_N]`.
pub fn cube_grid(sizes: &[usize]) -> Result<CubicalComplex> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(bad("cube_grid needs at least one positive size"));
    }
    let mut cubes: Vec<Cube> = vec![Vec::new()];
    for &n in sizes {
        cubes = cubes
            .into_iter()
            .flat_map(|c| {
                (0..n as i64).map(move |a| {
                    let mut c = c.clone();
                    c.push((a, a + 1));
                    c
                })
            })
            .collect();
    }
    CubicalComplex::new(sizes.len(), cubes)
}

/// Every vertex, and each 2-, 3- and 4-subset independently with
/// probability `p`, `p²`, `p³`; closed downward.
pub fn erdos_simplicial(n: usize, p: f64, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut facets: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as i32;
        if (2..=4).contains(&size) && rng.gen_bool(p.powi(size - 1)) {
            facets.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    SimplicialComplex::from_facets(n, facets).expect("random complex")
}

/// Clique complex of `G(n, p)`.
#[allow(clippy::needless_range_loop)]
pub fn random_flag(n: usize, p: f64, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let e = rng.gen_bool(p);
            adj[i][j] = e;
            adj[j][i] = e;
        }
    }
    let mut cliques = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    while let Some(c) = stack.pop() {
        let last = *c.last().expect("non-empty");
        let mut maximal = true;
        for v in 0..n {
            if c.iter().all(|&u| adj[u][v]) {
                maximal = false;
                if v > last {
                    let mut d = c.clone();
                    d.push(v);
                    stack.push(d);
                }
            }
        }
        if maximal {
            cliques.push(c);
        }
    }
    SimplicialComplex::from_facets(n, cliques).expect("clique complex")
}

/// `m` distinct random `d`-faces on `n` vertices. Only vertices that are
/// used appear in the result.
pub fn random_pure(d: usize, n: usize, m: usize, seed: u64) -> Result<SimplicialComplex> {
    if d + 1 > n || n > 24 {
        return Err(bad("random_pure needs d + 1 <= n <= 24"));
    }
    if m as u64 > binomial(n as u64, d as u64 + 1) {
        return Err(bad(format!("only C({n},{}) faces of dimension {d} exist", d + 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
    while chosen.len() < m {
        let mut f: Vec<usize> = sample(&mut rng, n, d + 1).into_vec();
        f.sort_unstable();
        chosen.insert(f);
    }
    let facets: Vec<Vec<String>> = chosen
        .iter()
        .map(|f| f.iter().map(|v| v.to_string()).collect())
        .collect();
    if facets.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    SimplicialComplex::from_labelled(&facets)
}

/// Every catalog entry with default parameters.
pub fn catalog() -> Vec<GeneratorSpec> {
    [
        "simplex(3)",
        "simplex_skeleton(4,1)",
        "boundary_simplex(3)",
        "boundary_simplex(4)",
        "cross_polytope_boundary(3)",
        "cyclic_polytope_boundary(4,7)",
        "stacked_ball(3,3)",
        "fig_running_example",
        "fig_cm_pair(0)",
        "fig_cm_pair(1)",
        "fig_stacked_pair(0)",
        "fig_stacked_pair(1)",
        "fig_hyperplane_example",
        "fig_crossing_example",
        "fig_cone_example",
        "cube_grid(2,2)",
        "strip(3)",
        "cubical_cone(cross_polytope_boundary(2))",
    ]
    .iter()
    .map(|s| s.parse().expect("catalog specs parse"))
    .collect()
}

/// Catalog plus `random` seeded simplicial complexes on at most 7 vertices,
/// cycling through the three random models.
pub fn corpus(random: usize, seed: u64) -> Vec<(String, Complex)> {
    let mut out: Vec<(String, Complex)> = catalog()
        .into_iter()
        .map(|s| {
            let c = generate(&s).expect("catalog entries generate");
            (s.to_string(), c)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let n = rng.gen_range(3..=7usize);
        let s = rng.gen::<u32>() as i64;
        let spec = match i % 3 {
            0 => GeneratorSpec::new(
                "erdos_simplicial",
                vec![
                    Param::Int(n as i64),
                    Param::Float(rng.gen_range(0.2..0.8)),
                    Param::Int(s),
                ],
            ),
            1 => GeneratorSpec::new(
                "random_flag",
                vec![
                    Param::Int(n as i64),
                    Param::Float(rng.gen_range(0.3..0.9)),
                    Param::Int(s),
                ],
            ),
            _ => {
                let d = rng.gen_range(1..=2usize).min(n - 1);
                let max = binomial(n as u64, d as u64 + 1) as usize;
                let m = rng.gen_range(1..=max.min(8));
                GeneratorSpec::ints("random_pure", &[d as i64, n as i64, m as i64, s])
            }
        };
        let c = generate(&spec).expect("random specs are feasible");
        out.push((spec.to_string(), c));
    }
    out
}
