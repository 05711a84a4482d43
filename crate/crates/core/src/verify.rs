//! Oracle suites run by `positroid verify` and by the acceptance run.

use std::collections::BTreeSet;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::corpus;
use crate::error::{Error, Result};
use crate::geometry::{
    graph_from_tiling, membrane_from_graph, tiling_from_graph, validate_subdivision,
    CyclicProjection,
};
use crate::graph::GrassmannianGraph;
use crate::measurement::{Measurement, TorusElement, VertexData};
use crate::moves::{build_reduced_plabic, flip_graph, neighbours};
use crate::positroid::{is_positroid, DecoratedPermutation};

const MAX_FAILURES: usize = 10;

/// One named property checked over some number of cases.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "cases": c.cases,
                "passed": c.passed(),
                "failures": c.failures,
                "millis": c.millis as u64,
            })).collect::<Vec<_>>(),
        })
    }
}

struct Recorder {
    check: Check,
    start: Instant,
}

impl Recorder {
    fn new(name: &str) -> Self {
        Recorder {
            check: Check {
                name: name.into(),
                cases: 0,
                failures: Vec::new(),
                millis: 0,
            },
            start: Instant::now(),
        }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.check.cases += 1;
        if !ok && self.check.failures.len() < MAX_FAILURES {
            self.check.failures.push(what());
        }
    }

    /// Records an error from the code under test as a failed case.
    fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.case(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn done(mut self) -> Check {
        self.check.millis = self.start.elapsed().as_millis();
        self.check
    }
}

pub const SUITES: [&str; 4] = ["bijections", "graphs", "measure", "tilings"];

pub fn run_suite(suite: &str, max_n: usize) -> Result<Report> {
    let checks = match suite {
        "bijections" => bijections(max_n),
        "graphs" => graphs(max_n)?,
        "measure" => measure(max_n, 20, 10)?,
        "tilings" => tilings(max_n)?,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {other:?}; expected one of {SUITES:?}"
            )))
        }
    };
    Ok(Report {
        suite: suite.into(),
        checks,
    })
}

fn show(w: &DecoratedPermutation) -> String {
    serde_json::to_string(w).unwrap_or_default()
}

/// Permutation → necklace → positroid → necklace → permutation, exhaustively.
pub fn bijections(max_n: usize) -> Vec<Check> {
    let mut round = Recorder::new("perm -> necklace -> positroid -> necklace -> perm");
    let mut positroid = Recorder::new("bases of the necklace's positroid form a positroid");
    let mut affine = Recorder::new("bounded affine permutation round trip");
    for n in 1..=max_n {
        for w in DecoratedPermutation::all(n) {
            let nk = w.necklace();
            let m = nk.positroid();
            let back = m.necklace();
            let ok = back == nk && back.permutation().as_ref() == Ok(&w);
            round.case(ok, || format!("{} fails the round trip", show(&w)));
            positroid.case(is_positroid(n, m.bases()) == Ok(true), || {
                show(&w).to_string()
            });
            let f = w.bounded_affine();
            affine.case(
                DecoratedPermutation::from_bounded_affine(&f).as_ref() == Ok(&w),
                || show(&w),
            );
        }
    }
    vec![round.done(), positroid.done(), affine.done()]
}

/// Structural checks on one graph of type `(k, n)` for strand permutation `w`.
struct GraphChecks {
    strands: Recorder,
    positroid: Recorder,
    helicity: Recorder,
    faces: Recorder,
    moves: Recorder,
}

impl GraphChecks {
    fn new() -> Self {
        GraphChecks {
            strands: Recorder::new("strand permutation of the built graph"),
            positroid: Recorder::new(
                "M(G) from orientations equals the positroid of the necklace of w",
            ),
            helicity: Recorder::new("|I(O)| = k for every perfect orientation"),
            faces: Recorder::new("face count = cell dimension + 1"),
            moves: Recorder::new("moves preserve the strand permutation"),
        }
    }

    fn run(&mut self, g: &GrassmannianGraph, w: &DecoratedPermutation, tag: &str) {
        let k = w.helicity();
        let got = g.strand_permutation();
        self.strands
            .case(got.as_ref() == Ok(w), || format!("{tag}: got {got:?}"));
        let m = g.positroid_of_graph();
        self.positroid
            .case(m.as_ref() == Ok(&w.necklace().positroid()), || {
                format!("{tag}: positroids differ")
            });
        let orientations = g.enumerate_perfect_orientations();
        let conserved = !orientations.is_empty()
            && orientations
                .iter()
                .all(|o| g.boundary_sources(o).len() == k)
            && g.graph_helicity() == num_rational::Ratio::from_integer(k as i64);
        self.helicity
            .case(conserved, || format!("{tag}: helicity not conserved"));
        self.faces
            .case(g.faces().count() == w.cell_dimension() + 1, || {
                format!(
                    "{tag}: {} faces for a cell of dimension {}",
                    g.faces().count(),
                    w.cell_dimension()
                )
            });
        for (kind, h) in neighbours(g) {
            let same = h.strand_permutation().as_ref() == Ok(w);
            self.moves.case(same, || {
                format!("{tag}: move {kind:?} changed the permutation")
            });
        }
    }

    fn done(self) -> Vec<Check> {
        vec![
            self.strands.done(),
            self.positroid.done(),
            self.helicity.done(),
            self.faces.done(),
            self.moves.done(),
        ]
    }
}

/// Built graphs for every decorated permutation (n ≤ min(max_n, 6)) and
/// every node of the flip graphs for the listed types.
pub fn graphs(max_n: usize) -> Result<Vec<Check>> {
    let mut c = GraphChecks::new();
    for n in 1..=max_n.min(6) {
        for w in DecoratedPermutation::all(n) {
            let tag = show(&w);
            let g = c.strands.result(build_reduced_plabic(&w), || tag.clone());
            if let Some(g) = g {
                c.run(&g, &w, &tag);
            }
        }
    }
    let mut out = c.done();
    out.extend(flip_graph_checks(&[(1, 5), (2, 4), (2, 5), (3, 6)], max_n)?);
    Ok(out)
}

/// The graph/positroid consistency checks over whole flip graphs.
pub fn flip_graph_checks(types: &[(usize, usize)], max_n: usize) -> Result<Vec<Check>> {
    let mut positroid = Recorder::new("flip graph: M(G) equals the positroid of w_G");
    let mut faces = Recorder::new("flip graph: k(n-k)+1 faces");
    let mut helicity = Recorder::new("flip graph: |I(O)| = k for every perfect orientation");
    for &(k, n) in types.iter().filter(|t| t.1 <= max_n) {
        let fg = flip_graph(k, n)?;
        for (p, g) in fg.nodes.iter().enumerate() {
            let tag = format!("({k},{n}) node {p}");
            let Some(w) = positroid.result(g.strand_permutation(), || tag.clone()) else {
                continue;
            };
            let expected = w.necklace().positroid();
            positroid.case(g.positroid_of_graph().as_ref() == Ok(&expected), || {
                tag.clone()
            });
            faces.case(g.faces().count() == k * (n - k) + 1, || {
                format!("{tag}: {} faces", g.faces().count())
            });
            let os = g.enumerate_perfect_orientations();
            helicity.case(
                !os.is_empty() && os.iter().all(|o| g.boundary_sources(o).len() == k),
                || tag.clone(),
            );
        }
    }
    Ok(vec![positroid.done(), faces.done(), helicity.done()])
}

fn random_positive<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(rng.gen_range(1..=20).into(), rng.gen_range(1..=9).into())
}

/// Seeded measurement checks on the corpus graphs with `n ≤ max_n`.
pub fn measure(max_n: usize, samples: u64, tori: usize) -> Result<Vec<Check>> {
    let mut relations = Recorder::new("Plücker relations hold exactly");
    let mut support = Recorder::new("support equals M(G)");
    let mut positive = Recorder::new("strictly positive on M(G)");
    let mut invariance = Recorder::new("invariant under the internal torus");
    let mut equivariance = Recorder::new("equivariant under the boundary torus");
    for (name, g) in corpus::measurement_corpus()?
        .into_iter()
        .filter(|(_, g)| g.n() <= max_n)
    {
        let m = Measurement::new(&g)?;
        let bases: BTreeSet<_> = g.positroid_of_graph()?.bases().clone();
        for seed in 0..samples {
            let tag = format!("{name} seed {seed}");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let data = VertexData::sample(&g, &mut rng);
            let Some(p) = relations.result(m.apply(&data), || tag.clone()) else {
                continue;
            };
            relations.case(p.satisfies_relations(), || tag.clone());
            support.case(p.support() == bases, || tag.clone());
            positive.case(p.coords.values().all(|x| x.is_positive()), || tag.clone());
            for t in 0..tori {
                let ti = TorusElement::random_internal(&g, &mut rng);
                let moved = ti.act(&g, &data).and_then(|d| m.apply(&d));
                invariance.case(moved.is_ok_and(|q| q.projectively_eq(&p)), || {
                    format!("{tag} torus {t}")
                });
            }
            let tb: Vec<BigRational> = (0..g.n()).map(|_| random_positive(&mut rng)).collect();
            let lhs = TorusElement::boundary(&g, &tb)
                .and_then(|t| t.act(&g, &data))
                .and_then(|d| m.apply(&d));
            let rhs = p.scale_boundary(&tb);
            equivariance.case(matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b), || {
                tag.clone()
            });
        }
    }
    Ok(vec![
        relations.done(),
        support.done(),
        positive.done(),
        invariance.done(),
        equivariance.done(),
    ])
}

/// Dual tilings and membranes.
pub fn tilings(max_n: usize) -> Result<Vec<Check>> {
    let mut valid = Recorder::new("dual tiling is a valid subdivision");
    let mut round = Recorder::new("dual of the tiling has the same canonical form");
    let mut triangles = Recorder::new("plabic graphs give triangulations");
    let mut membrane = Recorder::new("membrane: edges in Φ and boundary loop L_w");
    let mut area = Recorder::new("membrane area constant on the move class");
    let mut graphs: Vec<(String, GrassmannianGraph)> = Vec::new();
    for (k, n) in [(1, 4), (1, 5), (2, 4), (2, 5), (1, 6), (2, 6), (3, 6)] {
        if n <= max_n {
            for (p, g) in flip_graph(k, n)?.nodes.into_iter().enumerate() {
                graphs.push((format!("({k},{n}) node {p}"), g));
            }
        }
    }
    if max_n >= 5 {
        graphs.push((
            "five_with_white_quad".into(),
            corpus::five_with_white_quad()?,
        ));
        graphs.push((
            "five_with_square_vertex".into(),
            corpus::five_with_square_vertex()?,
        ));
    }
    let mut areas: std::collections::BTreeMap<(usize, usize), BTreeSet<usize>> = Default::default();
    for (tag, g) in &graphs {
        let proj = CyclicProjection::standard(g.n());
        let Some(t) = valid.result(tiling_from_graph(g, &proj), || tag.clone()) else {
            continue;
        };
        let report = validate_subdivision(&t);
        valid.case(report.is_valid(), || {
            format!("{tag}: {:?}", report.violations)
        });
        round.case(graph_from_tiling(&t).as_ref() == Ok(g), || tag.clone());
        if g.is_plabic() {
            triangles.case(t.is_triangulation(), || tag.clone());
            if let Some(m) = membrane.result(membrane_from_graph(g), || tag.clone()) {
                membrane.case(m.edges_in_phi() && m.boundary_is_loop(), || tag.clone());
                areas.entry((t.k, t.n)).or_default().insert(m.area());
            }
        }
    }
    for ((k, n), a) in &areas {
        area.case(a.len() == 1, || format!("({k},{n}): areas {a:?}"));
    }
    Ok(vec![
        valid.done(),
        round.done(),
        triangles.done(),
        membrane.done(),
        area.done(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_scale() {
        for suite in SUITES {
            let r = run_suite(suite, 4).unwrap();
            assert!(r.passed(), "{}", r.to_json());
            assert!(r
                .checks
                .iter()
                .all(|c| c.cases > 0 || c.name.contains("flip graph") || c.name.contains("moves")));
        }
        assert!(run_suite("nope", 4).is_err());
    }
}
