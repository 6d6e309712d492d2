//! Plumbing graphs: weighted graphs encoding the exceptional divisors of a
//! good resolution (vertex = rational curve with its self-intersection,
//! edge = transverse intersection point).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated plumbing graph. Vertices are `0..s` in input order; every
/// curve has genus zero and an integer self-intersection number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    eulers: Vec<i64>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct VertexSpec {
    id: usize,
    euler: i64,
    #[serde(default, skip_serializing_if = "genus_is_zero")]
    genus: i64,
}

fn genus_is_zero(g: &i64) -> bool {
    *g == 0
}

/// On-disk description: `{"vertices": [{"id", "euler"}], "edges": [[i, j]]}`.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: Vec<VertexSpec>,
    edges: Vec<[usize; 2]>,
}

impl PlumbingGraph {
    /// Validates and builds a graph from explicit vertex and edge lists.
    ///
    /// Vertex ids must equal their position in the list; this pins the
    /// coordinate order used by every cycle the library reports.
    pub fn new(vertices: Vec<(usize, i64)>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Malformed("graph has no vertices".into()));
        }
        for (pos, &(id, _)) in vertices.iter().enumerate() {
            if id != pos {
                return Err(Error::Malformed(format!(
                    "vertex ids must be 0..{} in order; found id {} at position {}",
                    vertices.len() - 1,
                    id,
                    pos
                )));
            }
        }
        let s = vertices.len();
        let eulers: Vec<i64> = vertices.iter().map(|&(_, e)| e).collect();

        let mut seen = std::collections::HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a >= s {
                return Err(Error::UnknownVertex(a));
            }
            if b >= s {
                return Err(Error::UnknownVertex(b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            normalized.push(key);
        }
        normalized.sort_unstable();

        let mut adjacency = vec![Vec::new(); s];
        for &(a, b) in &normalized {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }

        let graph = PlumbingGraph {
            eulers,
            edges: normalized,
            adjacency,
        };
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    /// Convenience constructor: ids are assigned 0.. in order.
    pub fn from_parts(eulers: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        PlumbingGraph::new(eulers.iter().copied().enumerate().collect(), edges.to_vec())
    }

    /// Parses the JSON graph description used by the CLI and fixtures.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        for v in &file.vertices {
            if v.genus != 0 {
                return Err(Error::NonzeroGenus(v.id));
            }
        }
        PlumbingGraph::new(
            file.vertices.iter().map(|v| (v.id, v.euler)).collect(),
            file.edges.iter().map(|e| (e[0], e[1])).collect(),
        )
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            vertices: self
                .eulers
                .iter()
                .enumerate()
                .map(|(id, &euler)| VertexSpec {
                    id,
                    euler,
                    genus: 0,
                })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&file).expect("graph serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.eulers.len()
    }

    pub fn euler(&self, j: usize) -> i64 {
        self.eulers[j]
    }

    pub fn eulers(&self) -> &[i64] {
        &self.eulers
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, j: usize) -> &[usize] {
        &self.adjacency[j]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    fn is_connected(&self) -> bool {
        let s = self.vertex_count();
        let mut seen = vec![false; s];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == s
    }
}
