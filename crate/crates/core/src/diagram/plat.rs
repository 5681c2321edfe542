//! Standard plat diagrams and their expansion to PD form.
//!
//! Strands are columns `1..=2m`. Bottom cups join `2j-1, 2j`. Row `i`
//! (1-based, bottom first) holds twist boxes on pairs `(2j, 2j+1)` when `i`
//! is odd and on `(2j-1, 2j)` when `i` is even. A box with coefficient `a`
//! stacks `|a|` crossings; in a positive crossing the strand running from
//! south-west to north-east passes over.

use serde::{Deserialize, Serialize};

use super::PdDiagram;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlatRaw", into = "PlatRaw")]
pub struct PlatDiagram {
    m: usize,
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct PlatRaw {
    m: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<PlatRaw> for PlatDiagram {
    type Error = Error;
    fn try_from(r: PlatRaw) -> Result<Self> {
        PlatDiagram::new(r.m, r.rows)
    }
}

impl From<PlatDiagram> for PlatRaw {
    fn from(p: PlatDiagram) -> Self {
        PlatRaw {
            m: p.m,
            rows: p.rows,
        }
    }
}

/// Length of row `i` (0-based) in an `m`-plat.
pub fn row_len(m: usize, i: usize) -> usize {
    if i % 2 == 0 {
        m - 1
    } else {
        m
    }
}

/// Columns (1-based, left then right) of box `j` (0-based) in row `i`
/// (0-based).
pub fn box_columns(i: usize, j: usize) -> (usize, usize) {
    if i % 2 == 0 {
        (2 * j + 2, 2 * j + 3)
    } else {
        (2 * j + 1, 2 * j + 2)
    }
}

/// One crossing of an expanded plat.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlatCrossing {
    pub row: usize,
    pub box_index: usize,
    /// Left column (1-based); the crossing joins `left` and `left + 1`.
    pub left: usize,
    pub sign: i8,
}

impl PlatDiagram {
    pub fn new(m: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("plat number must be positive".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != row_len(m, i) {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    r.len(),
                    row_len(m, i)
                )));
            }
        }
        Ok(PlatDiagram { m, rows })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn strands(&self) -> usize {
        2 * self.m
    }

    pub fn is_highly_twisted(&self) -> bool {
        self.rows.iter().flatten().all(|a| a.abs() >= 3)
    }

    pub fn crossing_total(&self) -> usize {
        self.rows.iter().flatten().map(|a| a.unsigned_abs() as usize).sum()
    }

    /// Whether the expanded diagram alternates, read off the grid. Strands
    /// alternate inside a twist region; at its ends the strand on the
    /// bottom-left or top-right passes over exactly when `a > 0`, and the
    /// other two ends pass the other way. So it suffices that every pair of
    /// region ends joined along a column, cap or cup disagree.
    pub fn is_alternating(&self) -> bool {
        let w = self.strands();
        // per column, bottom to top: (over at the bottom end, over at the top end)
        let mut ends: Vec<Vec<(bool, bool)>> = vec![Vec::new(); w + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a != 0 {
                    let (l, r) = box_columns(i, j);
                    ends[l].push((a > 0, a < 0));
                    ends[r].push((a < 0, a > 0));
                }
            }
        }
        // passage type met leaving column c through its top (or bottom) end
        let meet = |mut c: usize, mut top: bool| -> Option<bool> {
            for _ in 0..=2 * w {
                c = if top { self.top_partner(c) } else { self.bottom_partner(c) };
                if let (Some(lo), Some(hi)) = (ends[c].first(), ends[c].last()) {
                    return Some(if top { hi.1 } else { lo.0 });
                }
                top = !top;
            }
            None
        };
        (1..=w).all(|c| {
            let e = &ends[c];
            let (Some(lo), Some(hi)) = (e.first(), e.last()) else {
                return true;
            };
            e.windows(2).all(|p| p[0].1 != p[1].0)
                && meet(c, true) != Some(hi.1)
                && meet(c, false) != Some(lo.0)
        })
    }

    /// Column joined to column `c` by a top cap.
    pub fn top_partner(&self, c: usize) -> usize {
        let w = self.strands();
        if self.n() % 2 == 1 {
            if c % 2 == 1 {
                c + 1
            } else {
                c - 1
            }
        } else if c == 1 {
            w
        } else if c == w {
            1
        } else if c % 2 == 0 {
            c + 1
        } else {
            c - 1
        }
    }

    /// Column joined to column `c` by a bottom cup.
    pub fn bottom_partner(&self, c: usize) -> usize {
        if c % 2 == 1 {
            c + 1
        } else {
            c - 1
        }
    }

    /// Crossings bottom to top, boxes left to right within a row.
    pub fn crossings(&self) -> Vec<PlatCrossing> {
        let mut out = Vec::with_capacity(self.crossing_total());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                let (left, _) = box_columns(i, j);
                for _ in 0..a.unsigned_abs() {
                    out.push(PlatCrossing {
                        row: i,
                        box_index: j,
                        left,
                        sign: if a > 0 { 1 } else { -1 },
                    });
                }
            }
        }
        out
    }

    /// Expands to an oriented PD knot diagram.
    pub fn to_pd(&self) -> Result<PdDiagram> {
        let k = self.to_pd_link()?;
        k.require_knot()?;
        Ok(k)
    }

    /// Expands to an oriented PD diagram with any number of components.
    /// Crossing `x` of the result is entry `x` of [`PlatDiagram::crossings`].
    pub fn to_pd_link(&self) -> Result<PdDiagram> {
        let (raw, loops, _) = self.oriented_crossings();
        PdDiagram::from_oriented(raw, loops)
    }

    /// For each bottom cup, whether its left strand runs upward in the
    /// orientation used by [`PlatDiagram::to_pd_link`].
    pub fn cup_orientations(&self) -> Vec<bool> {
        self.oriented_crossings().2
    }

    /// Walks every strand; positions at a crossing are SW, SE, NE, NW in
    /// counterclockwise order. The first component starts at column 1 going
    /// up from its cup.
    fn oriented_crossings(&self) -> (Vec<[u32; 4]>, usize, Vec<bool>) {
        let xs = self.crossings();
        let w = self.strands();
        let mut on_column: Vec<Vec<usize>> = vec![Vec::new(); w + 1];
        // index of crossing x within the lists of its left and right columns
        let mut at = vec![[0usize; 2]; xs.len()];
        for (x, c) in xs.iter().enumerate() {
            at[x] = [on_column[c.left].len(), on_column[c.left + 1].len()];
            on_column[c.left].push(x);
            on_column[c.left + 1].push(x);
        }
        let idx = |c: usize, x: usize| at[x][usize::from(c != xs[x].left)];

        let mut labels = vec![[0u32; 4]; xs.len()];
        let mut under_in = vec![usize::MAX; xs.len()];
        let mut visited = vec![[false; 4]; xs.len()];
        let mut column_used = vec![false; w + 1];
        let mut cups: Vec<Option<bool>> = vec![None; self.m];
        let mut next_label = 1u32;

        // Next crossing met moving along column c from position `from`
        // (an index into its list, or None for an end) in direction `up`;
        // returns (crossing, entry position).
        let step = |mut c: usize,
                    mut from: Option<usize>,
                    mut up: bool,
                    used: &mut Vec<bool>,
                    cups: &mut Vec<Option<bool>>|
         -> Option<(usize, usize)> {
            for _ in 0..=2 * w {
                used[c] = true;
                let list = &on_column[c];
                let nxt = match (from, up) {
                    (None, true) => list.first().map(|_| 0),
                    (None, false) => list.len().checked_sub(1),
                    (Some(i), true) => (i + 1 < list.len()).then_some(i + 1),
                    (Some(i), false) => i.checked_sub(1),
                };
                match nxt {
                    Some(i) => {
                        let x = list[i];
                        let left = xs[x].left == c;
                        let pos = match (up, left) {
                            (true, true) => 0,
                            (true, false) => 1,
                            (false, false) => 2,
                            (false, true) => 3,
                        };
                        return Some((x, pos));
                    }
                    None => {
                        if !up {
                            cups[(c - 1) / 2].get_or_insert(c % 2 == 0);
                        }
                        c = if up {
                            self.top_partner(c)
                        } else {
                            self.bottom_partner(c)
                        };
                        from = None;
                        up = !up;
                    }
                }
            }
            None
        };

        let mut raw_order: Vec<(usize, usize)> = Vec::new();
        if let Some(first) = step(1, None, true, &mut vec![false; w + 1], &mut cups) {
            raw_order.push(first);
        }
        for x in 0..xs.len() {
            for p in [0usize, 1] {
                raw_order.push((x, p));
            }
        }
        for (x0, p0) in raw_order {
            if visited[x0][p0] || visited[x0][(p0 + 2) % 4] {
                continue;
            }
            let first = next_label;
            let (mut x, mut p) = (x0, p0);
            loop {
                visited[x][p] = true;
                visited[x][(p + 2) % 4] = true;
                labels[x][p] = next_label;
                let under = if xs[x].sign > 0 { p % 2 == 1 } else { p % 2 == 0 };
                if under {
                    under_in[x] = p;
                }
                let out = (p + 2) % 4;
                let c = if out == 1 || out == 2 {
                    xs[x].left + 1
                } else {
                    xs[x].left
                };
                let up = out >= 2;
                let (nx, np) = step(c, Some(idx(c, x)), up, &mut column_used, &mut cups)
                    .expect("strand ends at a crossing");
                next_label += 1;
                if nx == x0 && np == p0 {
                    labels[x][out] = first;
                    break;
                }
                labels[x][out] = next_label;
                x = nx;
                p = np;
            }
        }
        // crossing-free circles
        let mut loops = 0;
        for c in 1..=w {
            if column_used[c] || !on_column[c].is_empty() {
                continue;
            }
            loops += 1;
            let mut cur = c;
            let mut up = true;
            loop {
                column_used[cur] = true;
                cur = if up {
                    self.top_partner(cur)
                } else {
                    self.bottom_partner(cur)
                };
                up = !up;
                if cur == c && up {
                    break;
                }
            }
        }
        let raw = labels
            .iter()
            .zip(&under_in)
            .map(|(l, &s)| [0, 1, 2, 3].map(|i| l[(s + i) % 4]))
            .collect();
        let cups = cups.into_iter().map(|c| c.unwrap_or(true)).collect();
        (raw, loops, cups)
    }
}
