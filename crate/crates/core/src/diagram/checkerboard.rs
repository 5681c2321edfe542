use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{dart_crossing, PdDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shading {
    /// The class containing the face at corner (0, 1) of crossing 0.
    Black,
    White,
}

/// One edge per crossing. `positive` when the A-smoothing of the crossing
/// merges the two shaded corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaitEdge {
    pub u: usize,
    pub v: usize,
    pub crossing: usize,
    pub positive: bool,
}

/// Tait graph of one shading, with the rotation of edges around every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerboardGraph {
    /// Diagram face id of each vertex.
    pub vertex_faces: Vec<usize>,
    pub edges: Vec<TaitEdge>,
    /// Edge indices around each vertex, in face-walk order.
    pub rotation: Vec<Vec<usize>>,
}

/// Two-colours the faces; colour 0 contains corner (0, 1) of crossing 0.
pub fn face_colours(k: &PdDiagram) -> Vec<u8> {
    let faces = k.faces();
    let mut colour = vec![u8::MAX; faces.len()];
    if faces.is_empty() {
        return colour;
    }
    let start = faces.corner(0, 0);
    colour[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        for &d in faces.boundary(f) {
            let g = faces.face_of(k.opposite(d));
            if colour[g] == u8::MAX {
                colour[g] = 1 - colour[f];
                queue.push_back(g);
            }
        }
    }
    colour
}

pub fn checkerboard(k: &PdDiagram, shading: Shading) -> CheckerboardGraph {
    if k.crossing_count() == 0 {
        return CheckerboardGraph {
            vertex_faces: vec![0],
            edges: Vec::new(),
            rotation: vec![Vec::new()],
        };
    }
    let faces = k.faces();
    let colour = face_colours(k);
    let want = match shading {
        Shading::Black => 0,
        Shading::White => 1,
    };
    let mut vertex_of = vec![usize::MAX; faces.len()];
    let mut vertex_faces = Vec::new();
    for (f, &c) in colour.iter().enumerate() {
        if c == want {
            vertex_of[f] = vertex_faces.len();
            vertex_faces.push(f);
        }
    }
    let mut edges = Vec::with_capacity(k.crossing_count());
    for x in 0..k.crossing_count() {
        let c01 = faces.corner(x, 0);
        let (a, b, positive) = if colour[c01] == want {
            (c01, faces.corner(x, 2), false)
        } else {
            (faces.corner(x, 1), faces.corner(x, 3), true)
        };
        edges.push(TaitEdge {
            u: vertex_of[a],
            v: vertex_of[b],
            crossing: x,
            positive,
        });
    }
    let rotation = vertex_faces
        .iter()
        .map(|&f| {
            faces
                .boundary(f)
                .iter()
                .map(|&d| dart_crossing(d))
                .collect()
        })
        .collect();
    CheckerboardGraph {
        vertex_faces,
        edges,
        rotation,
    }
}

impl CheckerboardGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected_without(&self, removed: &[usize]) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            if !removed.contains(&i) {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&[])
    }

    /// Pairs of non-loop edges whose removal disconnects the graph.
    pub fn two_edge_cuts(&self) -> Vec<(usize, usize)> {
        let m = self.edges.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = (self.edges[i], self.edges[j]);
                if a.u == a.v || b.u == b.v {
                    continue;
                }
                if !self.is_connected_without(&[i]) || !self.is_connected_without(&[j]) {
                    continue;
                }
                if !self.is_connected_without(&[i, j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Crossing ids carried by the edges of this graph.
    pub fn crossing_ids(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.crossing).collect()
    }
}
