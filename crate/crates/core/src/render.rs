//! ASCII drawings of arc diagrams.
//!
//! Marks sit on a baseline four columns apart and each arc is a bracket
//! `+---+` raised above every arc it overlaps. Cyclic diagrams are drawn over
//! two copies of `[n]`, each arc starting in the first copy.

use crate::arc::{cyclic, AlgebraSpec};
use crate::diagram::ArcDiagram;

const STEP: usize = 4;

pub fn render_ascii(d: &ArcDiagram) -> String {
    let (positions, spans): (u32, Vec<(u32, u32)>) = match d.spec() {
        AlgebraSpec::LinearA(m) => (m + 1, d.arcs().iter().map(|a| (a.start, a.end)).collect()),
        AlgebraSpec::CyclicB(n) => (
            2 * n,
            d.arcs()
                .iter()
                .map(|a| (a.start, a.start + a.length(n)))
                .collect(),
        ),
    };
    let marks = d.spec().marks();
    let col = |p: u32| (p as usize - 1) * STEP;

    let mut order: Vec<usize> = (0..spans.len()).collect();
    order.sort_by_key(|&k| (spans[k].1 - spans[k].0, spans[k].0));
    let mut level = vec![0usize; spans.len()];
    for (i, &k) in order.iter().enumerate() {
        let (s, e) = spans[k];
        level[k] = 1 + order[..i]
            .iter()
            .filter(|&&j| spans[j].0 <= e && s <= spans[j].1)
            .map(|&j| level[j])
            .max()
            .unwrap_or(0);
    }

    let labels: Vec<String> = (1..=positions)
        .map(|p| cyclic(i64::from(p), marks).to_string())
        .collect();
    let width = col(positions) + labels.last().map_or(0, |l| l.len());
    let height = level.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![b' '; width]; height];
    for (k, &(s, e)) in spans.iter().enumerate() {
        let row = &mut grid[height - level[k]];
        row[col(s)..col(e)].fill(b'-');
        row[col(s)] = b'+';
        row[col(e)] = b'+';
    }
    for (k, &(s, e)) in spans.iter().enumerate() {
        for row in &mut grid[height - level[k] + 1..] {
            for c in [col(s), col(e)] {
                if row[c] != b'+' {
                    row[c] = b'|';
                }
            }
        }
    }
    let mut base = vec![b' '; width];
    for (p, l) in labels.iter().enumerate() {
        base[p * STEP..p * STEP + l.len()].copy_from_slice(l.as_bytes());
    }
    grid.push(base);

    let mut out = String::new();
    for row in grid {
        out.push_str(String::from_utf8_lossy(&row).trim_end());
        out.push('\n');
    }
    out
}
