use super::{dart, dart_crossing, dart_slot, Dart, PdDiagram};

/// Faces of a diagram on the sphere.
///
/// The face walk `d ↦ σ(α(d))` follows an edge to its far end and turns to
/// the next slot counterclockwise, keeping the face on the right. A dart
/// `(x, s)` therefore lies in the face at corner `(s-1, s)` of crossing `x`.
#[derive(Clone, Debug)]
pub struct Faces {
    dart_face: Vec<usize>,
    faces: Vec<Vec<Dart>>,
}

impl Faces {
    pub fn trace(d: &PdDiagram) -> Faces {
        let nd = 4 * d.crossing_count();
        let mut dart_face = vec![usize::MAX; nd];
        let mut faces = Vec::new();
        for start in 0..nd {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                dart_face[cur] = id;
                walk.push(cur);
                let o = d.opposite(cur);
                cur = dart(dart_crossing(o), dart_slot(o) + 1);
                if cur == start {
                    break;
                }
            }
            faces.push(walk);
        }
        Faces { dart_face, faces }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Darts of face `f` in walk order.
    pub fn boundary(&self, f: usize) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.dart_face[d]
    }

    /// Face at the corner between slots `s` and `s + 1` of crossing `x`.
    pub fn corner(&self, x: usize, s: usize) -> usize {
        self.dart_face[dart(x, s + 1)]
    }

    /// The two faces on either side of the edge through dart `d`.
    pub fn sides(&self, d: Dart, diagram: &PdDiagram) -> (usize, usize) {
        (self.dart_face[d], self.dart_face[diagram.opposite(d)])
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Dart]> {
        self.faces.iter().map(|f| f.as_slice())
    }
}
