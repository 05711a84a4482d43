//! Perfect-orientation parametrization: vertex Plücker data to a point of `Gr(k, n)`.
//!
//! All arithmetic is over [`BigRational`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{GrassmannianGraph, PerfectOrientation};
use crate::positroid::gale_minimum;
use crate::subset::{k_subsets, Subset};

/// Plücker coordinates of one vertex, indexed by 1-based rotation slots.
pub type Coords = BTreeMap<Subset, BigRational>;

/// A point of `P^{binom(n,k) - 1}`; absent coordinates are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    pub k: usize,
    pub n: usize,
    pub coords: Coords,
}

impl PluckerVector {
    pub fn get(&self, i: Subset) -> BigRational {
        self.coords
            .get(&i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> std::collections::BTreeSet<Subset> {
        self.coords
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(&s, _)| s)
            .collect()
    }

    /// Scaled so the Gale-minimal coordinate of the support is 1.
    pub fn normalized(&self) -> Result<PluckerVector> {
        let support = self.support();
        let pivot = gale_minimum(&support, 1, self.n)?;
        let scale = self.get(pivot);
        Ok(PluckerVector {
            k: self.k,
            n: self.n,
            coords: self
                .coords
                .iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(&s, v)| (s, v / &scale))
                .collect(),
        })
    }

    /// Equal as points of projective space.
    pub fn projectively_eq(&self, other: &PluckerVector) -> bool {
        self.k == other.k
            && self.n == other.n
            && match (self.normalized(), other.normalized()) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            }
    }

    /// All Plücker relations in the standard order of `[n]`.
    pub fn satisfies_relations(&self) -> bool {
        let ground: Vec<usize> = (1..=self.n).collect();
        validate_plucker(&self.coords, self.k, &ground).unwrap_or(false)
    }

    /// Boundary torus action `Δ_I ↦ (∏_{i∈I} t_i) Δ_I`.
    pub fn scale_boundary(&self, t: &[BigRational]) -> Result<PluckerVector> {
        check_positive(t)?;
        if t.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "expected {} scalars, got {}",
                self.n,
                t.len()
            )));
        }
        let coords = self
            .coords
            .iter()
            .map(|(&s, v)| (s, s.iter().fold(v.clone(), |acc, i| acc * &t[i - 1])))
            .collect();
        Ok(PluckerVector {
            k: self.k,
            n: self.n,
            coords,
        })
    }

    /// `{"13": "p/q", ...}` over every `k`-subset, zeros included.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = k_subsets(self.n, self.k)
            .map(|s| {
                let v = self.get(s);
                (
                    s.label(),
                    serde_json::Value::String(format!("{}/{}", v.numer(), v.denom())),
                )
            })
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(n: usize, value: &serde_json::Value) -> Result<PluckerVector> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("expected an object".into()))?;
        let mut coords = Coords::new();
        let mut k = None;
        for (key, v) in obj {
            let s = Subset::parse_label(key)
                .ok_or_else(|| Error::Parse(format!("bad subset {key:?}")))?;
            if s.max().is_some_and(|m| m > n) || k.is_some_and(|k| k != s.len()) {
                return Err(Error::IndexMismatch(format!(
                    "{key} is not a subset of the expected size in [{n}]"
                )));
            }
            k = Some(s.len());
            let r = parse_rational(
                v.as_str()
                    .ok_or_else(|| Error::Parse(format!("{key}: expected a string")))?,
            )?;
            if !r.is_zero() {
                coords.insert(s, r);
            }
        }
        let k = k.ok_or(Error::EmptyInput)?;
        Ok(PluckerVector { k, n, coords })
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Checks `Σ_{i∈A∖B} (-1)^{#{a∈A : a>i} + #{b∈B : b<i}} Δ_{A∖i} Δ_{B∪i} = 0` for
/// every `(k+1)`-subset `A` and `(k-1)`-subset `B` of `c`, comparing positions in
/// the order the elements of `c` are listed.
pub fn validate_plucker(coords: &Coords, k: usize, c: &[usize]) -> Result<bool> {
    let ground = Subset::from_indices(c.iter().copied());
    if ground.len() != c.len() {
        return Err(Error::IndexMismatch(
            "repeated element in the ground set".into(),
        ));
    }
    if let Some(bad) = coords
        .keys()
        .find(|s| s.len() != k || !s.is_subset_of(ground))
    {
        return Err(Error::IndexMismatch(format!(
            "{bad} is not a {k}-subset of the ground set"
        )));
    }
    if k == 0 || k >= c.len() {
        return Ok(true);
    }
    let m = c.len();
    let pos: BTreeMap<usize, usize> = c.iter().enumerate().map(|(p, &x)| (x, p)).collect();
    let lift = |s: Subset| Subset::from_indices(s.iter().map(|p| c[p - 1]));
    let get = |s: Subset| coords.get(&s);
    for a in k_subsets(m, k + 1).map(lift) {
        for b in k_subsets(m, k - 1).map(lift) {
            let mut total = BigRational::zero();
            for i in a.difference(b).iter() {
                let (Some(x), Some(y)) = (get(a.without(i)), get(b.with(i))) else {
                    continue;
                };
                let above = a.iter().filter(|&x| pos[&x] > pos[&i]).count();
                let below = b.iter().filter(|&x| pos[&x] < pos[&i]).count();
                let term = x * y;
                if (above + below) % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            if !total.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Maximal minors of the `h × d` matrix with columns `c_j (1, t_j, …, t_j^{h-1})`:
/// `Δ_J = ∏_{j∈J} c_j · ∏_{a<b∈J} (t_b - t_a)`.
pub fn vandermonde_minors(h: usize, nodes: &[BigRational], scales: &[BigRational]) -> Coords {
    let d = nodes.len();
    k_subsets(d, h)
        .map(|j| {
            let idx = j.to_vec();
            let mut v: BigRational = idx.iter().map(|&x| scales[x - 1].clone()).product();
            for (p, &a) in idx.iter().enumerate() {
                for &b in &idx[p + 1..] {
                    v *= &nodes[b - 1] - &nodes[a - 1];
                }
            }
            (j, v)
        })
        .collect()
}

/// A point of `Gr^{>0}(h, d)`: Vandermonde minors on random increasing nodes,
/// with random positive column scales so `h = 1` is not degenerate.
pub fn sample_positive_point<R: Rng + ?Sized>(h: usize, d: usize, rng: &mut R) -> Coords {
    let mut nodes: Vec<BigRational> = Vec::with_capacity(d);
    let mut acc = BigRational::zero();
    for _ in 0..d {
        acc += small_positive(rng);
        nodes.push(acc.clone());
    }
    let scales: Vec<BigRational> = (0..d).map(|_| small_positive(rng)).collect();
    vandermonde_minors(h, &nodes, &scales)
}

fn small_positive<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    BigRational::new(
        BigInt::from(rng.gen_range(1..=30)),
        BigInt::from(rng.gen_range(1..=7)),
    )
}

/// `Δ^{(v)}` for every internal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub coords: BTreeMap<usize, Coords>,
}

impl VertexData {
    pub fn sample<R: Rng + ?Sized>(g: &GrassmannianGraph, rng: &mut R) -> VertexData {
        let coords = g
            .internal_vertices()
            .map(|v| {
                let (h, d) = g.vertex_type(v);
                (v, sample_positive_point(h, d, rng))
            })
            .collect();
        VertexData { coords }
    }

    pub fn seeded(g: &GrassmannianGraph, seed: u64) -> VertexData {
        Self::sample(g, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Every coordinate present and positive, and the relations hold at every vertex.
    pub fn validate(&self, g: &GrassmannianGraph) -> Result<()> {
        for v in g.internal_vertices() {
            let (h, d) = g.vertex_type(v);
            let c = self
                .coords
                .get(&v)
                .ok_or_else(|| Error::InvalidVertexData(format!("no data at vertex {v}")))?;
            if c.len() != crate::subset::binomial(d, h) as usize
                || k_subsets(d, h).any(|s| !c.contains_key(&s))
            {
                return Err(Error::InvalidVertexData(format!(
                    "vertex {v} needs every {h}-subset of {d} slots"
                )));
            }
            if c.values().any(|x| !x.is_positive()) {
                return Err(Error::InvalidVertexData(format!(
                    "nonpositive coordinate at vertex {v}"
                )));
            }
            let slots: Vec<usize> = (1..=d).collect();
            if !validate_plucker(c, h, &slots)? {
                return Err(Error::InvalidVertexData(format!(
                    "Plücker relations fail at vertex {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Positive scalars on edges, indexed by edge number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    pub t: Vec<BigRational>,
}

impl TorusElement {
    pub fn identity(g: &GrassmannianGraph) -> TorusElement {
        TorusElement {
            t: vec![BigRational::one(); g.edge_count()],
        }
    }

    /// Random scalars on internal edges, 1 on boundary edges.
    pub fn random_internal<R: Rng + ?Sized>(g: &GrassmannianGraph, rng: &mut R) -> TorusElement {
        let t = (0..g.edge_count())
            .map(|e| {
                if g.is_internal_edge(e) {
                    small_positive(rng)
                } else {
                    BigRational::one()
                }
            })
            .collect();
        TorusElement { t }
    }

    /// `t_i` on the edge at `b_i`, 1 elsewhere.
    pub fn boundary(g: &GrassmannianGraph, tb: &[BigRational]) -> Result<TorusElement> {
        check_positive(tb)?;
        let mut t = vec![BigRational::one(); g.edge_count()];
        for i in 1..=g.n() {
            let h = g.boundary_half_edge(i);
            let e = GrassmannianGraph::edge_of(h);
            if g.is_boundary(g.head(h)) {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} joins two boundary vertices"
                )));
            }
            t[e] = tb[i - 1].clone();
        }
        Ok(TorusElement { t })
    }

    /// The internal part: boundary edges reset to 1.
    pub fn internal_part(&self, g: &GrassmannianGraph) -> TorusElement {
        let t = self
            .t
            .iter()
            .enumerate()
            .map(|(e, x)| {
                if g.is_internal_edge(e) {
                    x.clone()
                } else {
                    BigRational::one()
                }
            })
            .collect();
        TorusElement { t }
    }

    pub fn compose(&self, other: &TorusElement) -> TorusElement {
        TorusElement {
            t: self.t.iter().zip(&other.t).map(|(a, b)| a * b).collect(),
        }
    }

    /// `Δ^{(v)}_J ↦ (∏_{e∈J} t_e) Δ^{(v)}_J`.
    pub fn act(&self, g: &GrassmannianGraph, data: &VertexData) -> Result<VertexData> {
        check_positive(&self.t)?;
        if self.t.len() != g.edge_count() {
            return Err(Error::InvalidInput(format!(
                "expected {} scalars, got {}",
                g.edge_count(),
                self.t.len()
            )));
        }
        let mut out = BTreeMap::new();
        for (&v, c) in &data.coords {
            let rot = g.rotation(v);
            let scaled = c
                .iter()
                .map(|(&j, x)| {
                    let f = j.iter().fold(x.clone(), |acc, s| {
                        acc * &self.t[GrassmannianGraph::edge_of(rot[s - 1])]
                    });
                    (j, f)
                })
                .collect();
            out.insert(v, scaled);
        }
        Ok(VertexData { coords: out })
    }
}

fn check_positive(t: &[BigRational]) -> Result<()> {
    match t.iter().position(|x| !x.is_positive()) {
        Some(p) => Err(Error::NonPositiveScalar(p)),
        None => Ok(()),
    }
}

/// Perfect orientations of a graph, enumerated once and reused across data.
pub struct Measurement<'g> {
    g: &'g GrassmannianGraph,
    k: usize,
    /// `(I(O), [(v, J(v, O))])` for each orientation.
    terms: Vec<(Subset, Vec<(usize, Subset)>)>,
}

impl<'g> Measurement<'g> {
    pub fn new(g: &'g GrassmannianGraph) -> Result<Self> {
        let orientations: Vec<PerfectOrientation> = g.enumerate_perfect_orientations();
        if orientations.is_empty() {
            return Err(Error::NotOrientable);
        }
        let terms: Vec<(Subset, Vec<(usize, Subset)>)> = orientations
            .iter()
            .map(|o| {
                (
                    g.boundary_sources(o),
                    g.internal_vertices()
                        .map(|v| (v, g.incoming_slots(v, o)))
                        .collect(),
                )
            })
            .collect();
        let k = terms[0].0.len();
        Ok(Measurement { g, k, terms })
    }

    pub fn orientation_count(&self) -> usize {
        self.terms.len()
    }

    /// `Δ_I = Σ_{I(O)=I} ∏_v Δ^{(v)}_{J(v,O)}`.
    pub fn apply(&self, data: &VertexData) -> Result<PluckerVector> {
        data.validate(self.g)?;
        let mut coords = Coords::new();
        for (i, js) in &self.terms {
            let prod: BigRational = js.iter().map(|(v, j)| data.coords[v][j].clone()).product();
            *coords.entry(*i).or_insert_with(BigRational::zero) += prod;
        }
        Ok(PluckerVector {
            k: self.k,
            n: self.g.n(),
            coords,
        })
    }
}

pub fn boundary_measurement(g: &GrassmannianGraph, data: &VertexData) -> Result<PluckerVector> {
    Measurement::new(g)?.apply(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{square, star};
    use crate::graph::GraphBuilder;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn s(v: &[usize]) -> Subset {
        Subset::from_indices(v.iter().copied())
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| r(x, 1)).collect()
    }

    #[test]
    fn three_term_relation() {
        let mut c: Coords = [
            (s(&[1, 2]), 1),
            (s(&[1, 3]), 2),
            (s(&[1, 4]), 1),
            (s(&[2, 3]), 1),
            (s(&[2, 4]), 1),
            (s(&[3, 4]), 1),
        ]
        .into_iter()
        .map(|(k, v)| (k, r(v, 1)))
        .collect();
        // 2·1 = 1·1 + 1·1
        assert!(validate_plucker(&c, 2, &[1, 2, 3, 4]).unwrap());
        assert!(validate_plucker(&c, 2, &[2, 3, 4, 1]).unwrap());
        c.insert(s(&[1, 3]), r(3, 1));
        assert!(!validate_plucker(&c, 2, &[1, 2, 3, 4]).unwrap());
        c.insert(s(&[1, 5]), r(1, 1));
        assert!(matches!(
            validate_plucker(&c, 2, &[1, 2, 3, 4]),
            Err(Error::IndexMismatch(_))
        ));
    }

    #[test]
    fn k_one_has_no_relations() {
        let c: Coords = (1..=5).map(|i| (s(&[i]), r(i as i64, 3))).collect();
        assert!(validate_plucker(&c, 1, &[1, 2, 3, 4, 5]).unwrap());
    }

    #[test]
    fn vandermonde_examples() {
        let m = vandermonde_minors(2, &ints(&[1, 2, 3]), &ints(&[1, 1, 1]));
        assert_eq!(m[&s(&[1, 2])], r(1, 1));
        assert_eq!(m[&s(&[1, 3])], r(2, 1));
        assert_eq!(m[&s(&[2, 3])], r(1, 1));
        let full = vandermonde_minors(3, &ints(&[1, 2, 4]), &ints(&[1, 1, 1]));
        assert_eq!(full.len(), 1);
        assert_eq!(full[&s(&[1, 2, 3])], r(3 * 2, 1));
    }

    #[test]
    fn sampled_points_are_positive_and_satisfy_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..=6 {
            for h in 0..=d {
                let c = sample_positive_point(h, d, &mut rng);
                assert_eq!(c.len() as u128, crate::subset::binomial(d, h));
                assert!(c.values().all(|x| x.is_positive()));
                let slots: Vec<usize> = (1..=d).collect();
                assert!(validate_plucker(&c, h, &slots).unwrap(), "({h},{d})");
            }
        }
    }

    #[test]
    fn single_vertex_is_a_reshuffle() {
        let g = star(1, 3);
        let data = VertexData::seeded(&g, 1);
        let p = boundary_measurement(&g, &data).unwrap();
        let v = g.internal_vertices().next().unwrap();
        for i in 1..=3 {
            let slot = g.position(g.boundary_half_edge(i) ^ 1) + 1;
            assert_eq!(p.get(s(&[i])), data.coords[&v][&s(&[slot])]);
        }
    }

    #[test]
    fn square_relation_and_support() {
        let g = square(true);
        for seed in 0..5 {
            let p = boundary_measurement(&g, &VertexData::seeded(&g, seed)).unwrap();
            let d = |a, b| p.get(s(&[a, b]));
            assert_eq!(d(1, 3) * d(2, 4), d(1, 2) * d(3, 4) + d(1, 4) * d(2, 3));
            assert_eq!(p.support().len(), 6);
            assert!(p.satisfies_relations());
        }
    }

    #[test]
    fn zero_colored_lollipop_kills_coordinates() {
        // b1 carries a white-0 lollipop; b2..b4 meet a (1,3) vertex.
        let mut b = GraphBuilder::new(4);
        let lol = b.add_internal(0);
        let c = b.add_internal(1);
        let e0 = b.add_edge(b.boundary(1), lol);
        let es: Vec<usize> = (2..=4).map(|i| b.add_edge(b.boundary(i), c)).collect();
        b.set_rotation(lol, vec![e0]);
        b.set_rotation(c, es);
        let g = b.build().unwrap();
        let p = boundary_measurement(&g, &VertexData::seeded(&g, 9)).unwrap();
        assert!(p.support().iter().all(|i| !i.contains(1)));
        assert_eq!(p.support().len(), 3);
    }

    #[test]
    fn bad_data_and_scalars() {
        let g = square(true);
        let mut data = VertexData::seeded(&g, 2);
        let v = *data.coords.keys().next().unwrap();
        let key = *data.coords[&v].keys().next().unwrap();
        data.coords.get_mut(&v).unwrap().insert(key, r(-1, 1));
        assert!(matches!(
            boundary_measurement(&g, &data),
            Err(Error::InvalidVertexData(_))
        ));
        let mut t = TorusElement::identity(&g);
        t.t[0] = r(0, 1);
        assert!(matches!(
            t.act(&g, &VertexData::seeded(&g, 2)),
            Err(Error::NonPositiveScalar(0))
        ));
    }

    #[test]
    fn torus_actions_on_square() {
        let g = square(true);
        let data = VertexData::seeded(&g, 4);
        let m = Measurement::new(&g).unwrap();
        let base = m.apply(&data).unwrap();
        let id = TorusElement::identity(&g);
        assert_eq!(m.apply(&id.act(&g, &data).unwrap()).unwrap(), base);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ti = TorusElement::random_internal(&g, &mut rng);
        assert!(m
            .apply(&ti.act(&g, &data).unwrap())
            .unwrap()
            .projectively_eq(&base));
        let tb = vec![r(2, 1), r(3, 5), r(7, 2), r(1, 9)];
        let t = TorusElement::boundary(&g, &tb).unwrap();
        assert_eq!(
            m.apply(&t.act(&g, &data).unwrap()).unwrap(),
            base.scale_boundary(&tb).unwrap()
        );
    }

    #[test]
    fn boundary_torus_needs_internal_ends() {
        let mut b = GraphBuilder::new(2);
        b.add_edge(b.boundary(1), b.boundary(2));
        let g = b.build().unwrap();
        for tb in [vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(1, 1)]] {
            assert!(matches!(
                TorusElement::boundary(&g, &tb),
                Err(Error::InvalidGraph(_))
            ));
        }
    }

    #[test]
    fn json_round_trip() {
        let g = square(false);
        let p = boundary_measurement(&g, &VertexData::seeded(&g, 5)).unwrap();
        let j = p.to_json();
        assert_eq!(j.as_object().unwrap().len(), 6);
        assert_eq!(PluckerVector::from_json(4, &j).unwrap(), p);
        assert_eq!(parse_rational("6/4").unwrap(), r(3, 2));
        assert!(parse_rational("1/0").is_err());
    }
}
