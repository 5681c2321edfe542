//! Oriented planar diagrams.
//!
//! A crossing is four edge labels in counterclockwise order starting at the
//! incoming under-strand, so slots 0 and 2 carry the under-strand (in, out)
//! and slots 1 and 3 the over-strand. A dart `4·x + s` is crossing `x` seen
//! through slot `s`.

pub mod braid;
pub mod checkerboard;
pub mod faces;
pub mod io;
pub mod plat;
pub mod rewrite;


use crate::error::{Error, Result};

pub use faces::Faces;

pub type Dart = usize;

#[inline]
pub fn dart(crossing: usize, slot: usize) -> Dart {
    4 * crossing + (slot & 3)
}

#[inline]
pub fn dart_crossing(d: Dart) -> usize {
    d / 4
}

#[inline]
pub fn dart_slot(d: Dart) -> usize {
    d % 4
}

/// Validated oriented PD diagram. Knots unless built with
/// [`PdDiagram::new_link`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
    /// `[tail, head]` darts of label `l`, stored at `l - 1`.
    ends: Vec<[Dart; 2]>,
    signs: Vec<i8>,
    strand_components: usize,
}

impl PdDiagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        PdDiagram {
            crossings: Vec::new(),
            free_loops: k,
            ends: Vec::new(),
            signs: Vec::new(),
            strand_components: 0,
        }
    }

    /// Validates a knot diagram keeping the given labels (`1..=2n`).
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        if crossings.is_empty() {
            return Ok(Self::unknot());
        }
        let d = Self::validate(crossings, 0)?;
        d.require_knot()?;
        Ok(d)
    }

    /// Validates a diagram with any number of components.
    pub fn new_link(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self> {
        Self::validate(crossings, free_loops)
    }

    /// Builds from oriented crossings with arbitrary labels, relabelling
    /// edges `1..=2n` along the traversal starting from the smallest label.
    pub fn from_oriented(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self> {
        if crossings.is_empty() {
            return Ok(Self::unlink(free_loops));
        }
        let max = crossings.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut compact = vec![0u32; max + 1];
        for &l in crossings.iter().flatten() {
            compact[l as usize] = 1;
        }
        let mut next = 0u32;
        for c in compact.iter_mut() {
            if *c == 1 {
                next += 1;
                *c = next;
            }
        }
        let relabelled: Vec<[u32; 4]> = crossings
            .iter()
            .map(|c| c.map(|l| compact[l as usize]))
            .collect();
        let tmp = Self::validate(relabelled, free_loops)?;
        let mut map = vec![0u32; tmp.edge_count() + 1];
        let mut next = 1u32;
        for comp in tmp.traversal() {
            for l in comp {
                map[l as usize] = next;
                next += 1;
            }
        }
        let out: Vec<[u32; 4]> = tmp
            .crossings
            .iter()
            .map(|c| c.map(|l| map[l as usize]))
            .collect();
        Self::validate(out, free_loops)
    }

    pub fn require_knot(&self) -> Result<()> {
        let c = self.component_count();
        if c != 1 {
            return Err(Error::NotAKnot(c));
        }
        Ok(())
    }

    fn validate(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self> {
        let n = crossings.len();
        let e = 2 * n;
        let mut occ: Vec<[Dart; 2]> = vec![[0; 2]; e];
        let mut seen = vec![0usize; e];
        for (x, c) in crossings.iter().enumerate() {
            for (s, &l) in c.iter().enumerate() {
                if l == 0 || l as usize > e {
                    return Err(Error::Parse(format!(
                        "edge label {l} outside 1..={e}"
                    )));
                }
                let i = l as usize - 1;
                if seen[i] < 2 {
                    occ[i][seen[i]] = dart(x, s);
                }
                seen[i] += 1;
            }
        }
        for (i, &count) in seen.iter().enumerate() {
            if count != 2 {
                return Err(Error::EdgeMultiplicity {
                    label: i as u32 + 1,
                    count,
                });
            }
        }
        let label_at = |d: Dart| crossings[dart_crossing(d)][dart_slot(d)];
        let other = |l: u32, d: Dart| {
            let o = &occ[l as usize - 1];
            if o[0] == d {
                o[1]
            } else {
                o[0]
            }
        };
        let walk = |start: u32, tail: Dart| -> Vec<(u32, Dart, Dart)> {
            let mut seq = Vec::new();
            let (mut l, mut t) = (start, tail);
            loop {
                let h = other(l, t);
                seq.push((l, t, h));
                let nt = dart(dart_crossing(h), dart_slot(h) + 2);
                let nl = label_at(nt);
                if nl == start && nt == tail {
                    break;
                }
                l = nl;
                t = nt;
                if seq.len() > e {
                    break;
                }
            }
            seq
        };

        let mut ends = vec![[usize::MAX; 2]; e];
        let mut strand_components = 0;
        for start in 1..=e as u32 {
            if ends[start as usize - 1][0] != usize::MAX {
                continue;
            }
            let first = occ[start as usize - 1][0];
            let mut seq = walk(start, first);
            let heads_at = |seq: &[(u32, Dart, Dart)], s: usize| {
                seq.iter().any(|&(_, _, h)| dart_slot(h) == s)
            };
            if heads_at(&seq, 2) {
                seq = walk(start, other(start, first));
                if heads_at(&seq, 2) {
                    return Err(Error::Orientation(start));
                }
            }
            for &(l, t, h) in &seq {
                if ends[l as usize - 1][0] != usize::MAX {
                    return Err(Error::Orientation(l));
                }
                ends[l as usize - 1] = [t, h];
            }
            strand_components += 1;
        }

        let mut signs = Vec::with_capacity(n);
        for (x, c) in crossings.iter().enumerate() {
            let in3 = ends[c[3] as usize - 1][1] == dart(x, 3);
            let in1 = ends[c[1] as usize - 1][1] == dart(x, 1);
            if in1 == in3 {
                return Err(Error::Orientation(c[1]));
            }
            signs.push(if in3 { 1 } else { -1 });
        }

        let d = PdDiagram {
            crossings,
            free_loops,
            ends,
            signs,
            strand_components,
        };
        let f = d.faces().len();
        let expected = n + 2 * d.crossing_graph_components();
        if f != expected {
            return Err(Error::NonPlanar { faces: f, expected });
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn is_unknot_diagram(&self) -> bool {
        self.crossings.is_empty() && self.free_loops == 1
    }

    pub fn label_at(&self, d: Dart) -> u32 {
        self.crossings[dart_crossing(d)][dart_slot(d)]
    }

    /// Dart where edge `label` leaves its tail crossing.
    pub fn tail(&self, label: u32) -> Dart {
        self.ends[label as usize - 1][0]
    }

    /// Dart where edge `label` enters its head crossing.
    pub fn head(&self, label: u32) -> Dart {
        self.ends[label as usize - 1][1]
    }

    /// The other end of the edge seen through dart `d`.
    pub fn opposite(&self, d: Dart) -> Dart {
        let [t, h] = self.ends[self.label_at(d) as usize - 1];
        if t == d {
            h
        } else {
            t
        }
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn component_count(&self) -> usize {
        self.strand_components + self.free_loops
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Edge labels of each traced component in orientation order.
    pub fn traversal(&self) -> Vec<Vec<u32>> {
        let e = self.edge_count();
        let mut seen = vec![false; e + 1];
        let mut out = Vec::new();
        for start in 1..=e as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let mut l = start;
            loop {
                seen[l as usize] = true;
                comp.push(l);
                let h = self.head(l);
                l = self.label_at(dart(dart_crossing(h), dart_slot(h) + 2));
                if l == start {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Passages `(crossing, is_over)` in traversal order, one list per
    /// traced component.
    pub fn passages(&self) -> Vec<Vec<(usize, bool)>> {
        self.traversal()
            .into_iter()
            .map(|comp| {
                comp.iter()
                    .map(|&l| {
                        let h = self.head(l);
                        (dart_crossing(h), dart_slot(h) != 0)
                    })
                    .collect()
            })
            .collect()
    }

    /// True iff every edge runs from an over-pass to an under-pass or back.
    pub fn is_alternating(&self) -> bool {
        (1..=self.edge_count() as u32).all(|l| {
            let tail_over = dart_slot(self.tail(l)) != 2;
            let head_over = dart_slot(self.head(l)) != 0;
            tail_over != head_over
        })
    }

    pub fn faces(&self) -> Faces {
        Faces::trace(self)
    }

    /// Connected components of the 4-valent graph formed by the crossings.
    pub fn crossing_graph_components(&self) -> usize {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for [t, h] in &self.ends {
            let a = find(&mut parent, dart_crossing(*t));
            let b = find(&mut parent, dart_crossing(*h));
            parent[a] = b;
        }
        (0..n).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Crossings adjacent to `x` through its four slots.
    pub fn neighbours(&self, x: usize) -> [usize; 4] {
        [0, 1, 2, 3].map(|s| dart_crossing(self.opposite(dart(x, s))))
    }

    pub fn max_label(&self) -> u32 {
        self.edge_count() as u32
    }
}
