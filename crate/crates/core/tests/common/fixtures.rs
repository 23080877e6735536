use std::collections::BTreeSet;

use mcluster_d::{Color, ModelParams, PairedArc};

/// Vertices and arrows of Δ(4, 2) read off the AR-quiver figure: τ-orbits
/// X, R, G (the two diameter colours) and B of seven vertices each, with
/// X_t → R_t, G_t, B_{t+1}; R_t, G_t → X_{t+1}; B_t → X_t.
pub fn delta_4_2() -> (BTreeSet<PairedArc>, BTreeSet<(PairedArc, PairedArc)>) {
    let q = ModelParams::new(4, 2).unwrap();
    let c = |a: i64, b: i64| PairedArc::chord(&q, a, b).unwrap();
    let x = [c(1, 6), c(3, 8), c(5, 10), c(7, 12), c(9, 14), c(2, 11), c(6, 11)];
    let bases = [1, 3, 5, 7, 2, 4, 6];
    let r: Vec<_> = bases.iter().map(|&i| PairedArc::diameter(&q, i, Color::Red)).collect();
    let g: Vec<_> = bases.iter().map(|&i| PairedArc::diameter(&q, i, Color::Green)).collect();
    let b = [c(1, 4), c(3, 6), c(5, 8), c(7, 10), c(9, 12), c(11, 14), c(2, 13)];
    let mut arrows = BTreeSet::new();
    for t in 0..7 {
        let next = (t + 1) % 7;
        arrows.insert((x[t], r[t]));
        arrows.insert((x[t], g[t]));
        arrows.insert((x[t], b[next]));
        arrows.insert((r[t], x[next]));
        arrows.insert((g[t], x[next]));
        arrows.insert((b[t], x[t]));
    }
    let vertices = x.iter().chain(&r).chain(&g).chain(&b).copied().collect();
    (vertices, arrows)
}
