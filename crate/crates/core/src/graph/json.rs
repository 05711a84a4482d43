//! JSON encoding:
//! `{"n":4,"vertices":[{"id":0,"boundary":1},{"id":4,"h":1}],"rotations":{"4":[..]},"edges":[[0,1],..]}`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::GrassmannianGraph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    boundary: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    h: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    vertices: Vec<VertexJson>,
    rotations: BTreeMap<String, Vec<usize>>,
    edges: Vec<[usize; 2]>,
}

impl GrassmannianGraph {
    pub fn to_json(&self) -> serde_json::Value {
        let vertices = (0..self.vertex_count())
            .map(|v| {
                if v < self.n {
                    VertexJson {
                        id: v,
                        boundary: Some(v + 1),
                        h: None,
                    }
                } else {
                    VertexJson {
                        id: v,
                        boundary: None,
                        h: Some(self.helicity[v]),
                    }
                }
            })
            .collect();
        let rotations = (0..self.vertex_count())
            .map(|v| (v.to_string(), self.rotation[v].clone()))
            .collect();
        let edges = (0..self.edge_count()).map(|e| [2 * e, 2 * e + 1]).collect();
        serde_json::to_value(GraphJson {
            n: self.n,
            vertices,
            rotations,
            edges,
        })
        .expect("serializable")
    }

    /// Accepts arbitrary vertex and half-edge ids.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: GraphJson = serde_json::from_value(value.clone())?;
        let n = raw.n;
        let mut vid: HashMap<usize, usize> = HashMap::new();
        let mut helicity = vec![0; n];
        let mut seen_boundary = vec![false; n];
        for v in &raw.vertices {
            let slot = match (v.boundary, v.h) {
                (Some(i), None) if (1..=n).contains(&i) && !seen_boundary[i - 1] => {
                    seen_boundary[i - 1] = true;
                    i - 1
                }
                (None, Some(h)) => {
                    helicity.push(h);
                    helicity.len() - 1
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "vertex {} needs exactly one of a fresh boundary index or h",
                        v.id
                    )))
                }
            };
            if vid.insert(v.id, slot).is_some() {
                return Err(Error::Parse(format!("duplicate vertex id {}", v.id)));
            }
        }
        if seen_boundary.iter().any(|s| !s) {
            return Err(Error::Parse("missing boundary vertex".into()));
        }
        let mut hid: HashMap<usize, usize> = HashMap::new();
        for (e, pair) in raw.edges.iter().enumerate() {
            for (side, &h) in pair.iter().enumerate() {
                if hid.insert(h, 2 * e + side).is_some() {
                    return Err(Error::Parse(format!("half-edge {h} used twice")));
                }
            }
        }
        let mut rotation = vec![Vec::new(); helicity.len()];
        let mut origin = vec![usize::MAX; 2 * raw.edges.len()];
        for (key, hs) in &raw.rotations {
            let id: usize = key
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex key {key:?}")))?;
            let v = *vid
                .get(&id)
                .ok_or_else(|| Error::Parse(format!("rotation for unknown vertex {id}")))?;
            for h in hs {
                let x = *hid
                    .get(h)
                    .ok_or_else(|| Error::Parse(format!("half-edge {h} not in any edge")))?;
                if origin[x] != usize::MAX {
                    return Err(Error::Parse(format!("half-edge {h} in two rotations")));
                }
                origin[x] = v;
                rotation[v].push(x);
            }
        }
        if origin.contains(&usize::MAX) {
            return Err(Error::Parse("half-edge missing from rotations".into()));
        }
        GrassmannianGraph::from_parts(n, helicity, rotation, origin)
    }
}
