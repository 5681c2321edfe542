//! Deterministic ASCII and SVG drawings of plat grids and PD diagrams.

use std::fmt::Write;

use knotpad::diagram::plat::box_columns;
use knotpad::diagram::{dart_crossing, dart_slot};
use knotpad::{PdDiagram, PlatDiagram};

const COL: usize = 6;

/// Nesting depth of each arc in a matching given by `partner`.
fn arc_depths(w: usize, partner: impl Fn(usize) -> usize) -> Vec<(usize, usize, usize)> {
    let arcs: Vec<(usize, usize)> = (1..=w)
        .filter_map(|c| {
            let p = partner(c);
            (c < p).then_some((c, p))
        })
        .collect();
    arcs.iter()
        .map(|&(a, b)| {
            let d = arcs.iter().filter(|&&(x, y)| x < a && b < y).count();
            (a, b, d)
        })
        .collect()
}

fn strand_x(c: usize) -> usize {
    (c - 1) * COL + 2
}

/// One line per arc depth, outermost first; `below` draws cups instead.
fn arc_lines(w: usize, arcs: &[(usize, usize, usize)], below: bool) -> Vec<String> {
    let width = strand_x(w) + 3;
    let max = arcs.iter().map(|a| a.2).max().unwrap_or(0);
    let mut lines = Vec::new();
    for d in 0..=max {
        let mut line = vec![' '; width];
        for &(a, b, e) in arcs {
            if e == d {
                line[strand_x(a)] = '+';
                line[strand_x(b)] = '+';
                for x in line.iter_mut().take(strand_x(b)).skip(strand_x(a) + 1) {
                    *x = '-';
                }
            } else if e < d {
                line[strand_x(a)] = '|';
                line[strand_x(b)] = '|';
            }
        }
        lines.push(line.into_iter().collect::<String>().trim_end().to_string());
    }
    if below {
        lines.reverse();
    }
    lines
}

/// Rows top to bottom, every twist box shown with its coefficient, caps
/// above and cups below.
pub fn plat_ascii(p: &PlatDiagram) -> String {
    let w = p.strands();
    let mut out = String::new();
    let _ = writeln!(out, "plat m={} n={}", p.m(), p.n());
    let caps = arc_depths(w, |c| p.top_partner(c));
    for l in arc_lines(w, &caps, false) {
        let _ = writeln!(out, "      {l}");
    }
    for (i, row) in p.rows().iter().enumerate().rev() {
        let mut line = vec![' '; strand_x(w) + 3];
        for c in 1..=w {
            line[strand_x(c)] = '|';
        }
        for (j, &a) in row.iter().enumerate() {
            let (l, r) = box_columns(i, j);
            let label: Vec<char> = format!("[{a:>3}]").chars().collect();
            let mid = (strand_x(l) + strand_x(r)) / 2;
            let start = mid + 1 - label.len() / 2;
            for (k, ch) in label.into_iter().enumerate() {
                line[start + k] = ch;
            }
        }
        let body: String = line.into_iter().collect();
        let _ = writeln!(out, "{:>4}  {}", i + 1, body.trim_end());
    }
    let cups = arc_depths(w, |c| p.bottom_partner(c));
    for l in arc_lines(w, &cups, true) {
        let _ = writeln!(out, "      {l}");
    }
    out
}

/// Crossing table with signs.
pub fn pd_ascii(k: &PdDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "pd crossings={} writhe={} alternating={}",
        k.crossing_count(),
        k.writhe(),
        k.is_alternating()
    );
    for (x, c) in k.crossings().iter().enumerate() {
        let s = if k.sign(x) > 0 { '+' } else { '-' };
        let _ = writeln!(out, "{x:>4}  X[{}, {}, {}, {}]  {s}", c[0], c[1], c[2], c[3]);
    }
    if k.crossing_count() == 0 {
        let _ = writeln!(out, "   o  unknot");
    }
    out
}

const SVG_COL: f64 = 40.0;
const SVG_ROW: f64 = 36.0;
const MARGIN: f64 = 30.0;

fn svg_open(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

/// Plat grid: strands as vertical lines, twist boxes labelled `a_{i,j}`,
/// caps and cups as arcs.
pub fn plat_svg(p: &PlatDiagram) -> String {
    let w = p.strands();
    let n = p.n();
    let caps = arc_depths(w, |c| p.top_partner(c));
    let cups = arc_depths(w, |c| p.bottom_partner(c));
    let cap_h = SVG_ROW * 0.5 * (caps.iter().map(|a| a.2).max().unwrap_or(0) + 2) as f64;
    let cup_h = SVG_ROW;
    let width = 2.0 * MARGIN + SVG_COL * (w - 1) as f64;
    let height = 2.0 * MARGIN + cap_h + cup_h + SVG_ROW * n as f64;
    let x = |c: usize| MARGIN + SVG_COL * (c - 1) as f64;
    let top = MARGIN + cap_h;
    let bottom = top + SVG_ROW * n as f64;
    // row i (0-based) spans y from bottom - (i+1)·ROW to bottom - i·ROW
    let y0 = |i: usize| bottom - SVG_ROW * (i + 1) as f64;

    let mut out = String::new();
    svg_open(&mut out, width, height);
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" fill="none">"#);
    for c in 1..=w {
        let _ = writeln!(
            out,
            r#"<line x1="{:.1}" y1="{top:.1}" x2="{:.1}" y2="{bottom:.1}"/>"#,
            x(c),
            x(c)
        );
    }
    let depth_max = caps.iter().map(|a| a.2).max().unwrap_or(0);
    for &(a, b, d) in &caps {
        let rise = SVG_ROW * 0.5 * (depth_max + 1 - d) as f64;
        let _ = writeln!(
            out,
            r#"<path d="M {:.1} {top:.1} C {:.1} {:.1} {:.1} {:.1} {:.1} {top:.1}"/>"#,
            x(a),
            x(a),
            top - rise,
            x(b),
            top - rise,
            x(b)
        );
    }
    for &(a, b, _) in &cups {
        let _ = writeln!(
            out,
            r#"<path d="M {:.1} {bottom:.1} C {:.1} {:.1} {:.1} {:.1} {:.1} {bottom:.1}"/>"#,
            x(a),
            x(a),
            bottom + cup_h * 0.8,
            x(b),
            bottom + cup_h * 0.8,
            x(b)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g font-family="monospace" font-size="11" text-anchor="middle">"#);
    for (i, row) in p.rows().iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            let (l, r) = box_columns(i, j);
            let (bx, by) = (x(l) - 6.0, y0(i) + 4.0);
            let (bw, bh) = (x(r) - x(l) + 12.0, SVG_ROW - 8.0);
            let _ = writeln!(
                out,
                r#"<rect x="{bx:.1}" y="{by:.1}" width="{bw:.1}" height="{bh:.1}" fill="white" stroke="black"/>"#
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.1}" y="{:.1}"><title>a_{{{},{}}}</title>{a}</text>"#,
                (x(l) + x(r)) / 2.0,
                by + bh / 2.0 + 4.0,
                i + 1,
                j + 1
            );
        }
    }
    let _ = writeln!(out, "</g>\n</svg>");
    out
}

/// Barycentric layout of the diagram graph with every edge subdivided
/// twice; the largest face is pinned to a circle.
fn pd_layout(k: &PdDiagram) -> (Vec<(f64, f64)>, usize) {
    let nx = k.crossing_count();
    let e = k.edge_count();
    // vertex ids: crossings, then (tail point, head point) per edge label
    let near_tail = |l: u32| nx + 2 * (l as usize - 1);
    let near_head = |l: u32| nx + 2 * (l as usize - 1) + 1;
    let nv = nx + 2 * e;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for l in 1..=e as u32 {
        let (t, h) = (dart_crossing(k.tail(l)), dart_crossing(k.head(l)));
        for (a, b) in [(t, near_tail(l)), (near_tail(l), near_head(l)), (near_head(l), h)] {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let faces = k.faces();
    let outer = (0..faces.len())
        .max_by_key(|&f| (faces.boundary(f).len(), std::cmp::Reverse(f)))
        .unwrap();
    let mut ring = Vec::new();
    for &d in faces.boundary(outer) {
        let l = k.label_at(d);
        if k.tail(l) == d {
            ring.extend([near_tail(l), near_head(l)]);
        } else {
            ring.extend([near_head(l), near_tail(l)]);
        }
    }
    let mut pos = vec![(0.0f64, 0.0f64); nv];
    let mut fixed = vec![false; nv];
    let r = ring.len() as f64;
    for (i, &v) in ring.iter().enumerate() {
        let t = 2.0 * std::f64::consts::PI * i as f64 / r;
        pos[v] = (t.cos(), -t.sin());
        fixed[v] = true;
    }
    for _ in 0..4000 {
        let mut delta = 0.0f64;
        for v in 0..nv {
            if fixed[v] {
                continue;
            }
            let m = adj[v].len() as f64;
            let sx: f64 = adj[v].iter().map(|&u| pos[u].0).sum();
            let sy: f64 = adj[v].iter().map(|&u| pos[u].1).sum();
            let p = (sx / m, sy / m);
            delta = delta.max((p.0 - pos[v].0).abs() + (p.1 - pos[v].1).abs());
            pos[v] = p;
        }
        if delta < 1e-9 {
            break;
        }
    }
    (pos, nx)
}

/// Crossing-level drawing: each edge a three-segment path between its
/// crossings, under-strands broken at the crossing, edge labels at the
/// middle of every edge.
pub fn pd_svg(k: &PdDiagram) -> String {
    let size = 480.0;
    let mut out = String::new();
    svg_open(&mut out, size, size);
    if k.crossing_count() == 0 {
        let _ = writeln!(
            out,
            r#"<circle cx="{0:.1}" cy="{0:.1}" r="{1:.1}" fill="none" stroke="black" stroke-width="2"/>"#,
            size / 2.0,
            size / 2.0 - MARGIN
        );
        let _ = writeln!(out, "</svg>");
        return out;
    }
    let (pos, nx) = pd_layout(k);
    let scale = size / 2.0 - MARGIN;
    let at = |v: usize| (size / 2.0 + scale * pos[v].0, size / 2.0 + scale * pos[v].1);
    let gap = 7.0;
    let trim = |from: (f64, f64), to: (f64, f64)| {
        let (dx, dy) = (to.0 - from.0, to.1 - from.1);
        let len = (dx * dx + dy * dy).sqrt();
        if len <= gap * 1.5 {
            return from;
        }
        (from.0 + dx * gap / len, from.1 + dy * gap / len)
    };
    let _ = writeln!(
        out,
        r#"<g stroke="black" stroke-width="2" fill="none" stroke-linejoin="round">"#
    );
    let mut labels = String::new();
    for l in 1..=k.edge_count() as u32 {
        let (td, hd) = (k.tail(l), k.head(l));
        let a = nx + 2 * (l as usize - 1);
        let pts = [at(dart_crossing(td)), at(a), at(a + 1), at(dart_crossing(hd))];
        // slots 0 and 2 are the under-strand
        let start = if dart_slot(td) % 2 == 0 { trim(pts[0], pts[1]) } else { pts[0] };
        let end = if dart_slot(hd) % 2 == 0 { trim(pts[3], pts[2]) } else { pts[3] };
        let _ = writeln!(
            out,
            r#"<path d="M {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2}"/>"#,
            start.0, start.1, pts[1].0, pts[1].1, pts[2].0, pts[2].1, end.0, end.1
        );
        let mid = ((pts[1].0 + pts[2].0) / 2.0, (pts[1].1 + pts[2].1) / 2.0);
        let _ = writeln!(labels, r#"<text x="{:.2}" y="{:.2}">{l}</text>"#, mid.0 + 4.0, mid.1 - 4.0);
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g font-family="monospace" font-size="10" fill="gray">"#
    );
    out.push_str(&labels);
    let _ = writeln!(out, "</g>\n</svg>");
    out
}
