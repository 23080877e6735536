#![allow(clippy::needless_range_loop)]
//! Independent Ext oracle: hammock functions on the mesh category of `ZD_n`,
//! pushed down to the orbit category through a covering onto `Δ(n, m)`.
//! Knows nothing about crossings or distances.

use mcluster_d::quiver::build_delta;
use mcluster_d::{ModelParams, PairedArc};
use std::collections::HashMap;

pub struct HomOracle {
    pub vertices: Vec<PairedArc>,
    index: HashMap<PairedArc, usize>,
    /// `ext[i][x][y] = dim Ext^i(x, y)` for `i` in `0..=m` (`i = 0` is Hom).
    ext: Vec<Vec<Vec<u32>>>,
}

/// Tree of `D_n`: chain `0..=n-3`, legs `n-2` and `n-1` on `n-3`.
fn tree_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = (0..n - 3).map(|q| (q, q + 1)).collect();
    e.push((n - 3, n - 2));
    e.push((n - 3, n - 1));
    e
}

impl HomOracle {
    pub fn new(params: &ModelParams) -> Self {
        let n = params.n() as usize;
        let m = params.m() as usize;
        let delta = build_delta(params);
        let len = delta.vertices.len();
        let mut succ = vec![Vec::new(); len];
        for &(a, b) in &delta.arrows {
            succ[a].push(b);
        }
        let tau = delta.translation.clone();
        let mut tau_inv = vec![0; len];
        for (k, &t) in tau.iter().enumerate() {
            tau_inv[t] = k;
        }
        let edges = tree_edges(n);
        // Lift `(p, q)`, `p` counting inverse translations.
        let shift = |mut v: usize, p: i64| {
            if p >= 0 {
                for _ in 0..p { v = tau_inv[v]; }
            } else {
                for _ in 0..-p { v = tau[v]; }
            }
            v
        };
        // Find a section: images of (0, q) such that arrows (0,a)->(0,b) and
        // (0,b)->(1,a) land on arrows of Δ and out-degrees agree.
        let mut section = vec![usize::MAX; n];
        let found = (0..len).any(|x0| {
            section.iter_mut().for_each(|s| *s = usize::MAX);
            section[0] = x0;
            Self::extend(&edges, &succ, &tau_inv, &mut section, 0)
        });
        assert!(found, "no covering of Δ by ZD_n");
        let out_deg: Vec<usize> = (0..n)
            .map(|q| edges.iter().filter(|&&(a, b)| a == q || b == q).count())
            .collect();
        for q in 0..n {
            assert_eq!(succ[section[q]].len(), out_deg[q], "covering degree mismatch");
        }
        let pi = |p: i64, q: usize| shift(section[q], p);

        // Hammock of (0, q0) over slices 0..span.
        let span = (4 * n + 4) as i64;
        let hammock = |q0: usize| -> HashMap<(i64, usize), u32> {
            let mut h: HashMap<(i64, usize), u32> = HashMap::new();
            for p in 0..span {
                for q in 0..n {
                    let mut s: i64 = 0;
                    for &(a, b) in &edges {
                        if b == q { s += *h.get(&(p, a)).unwrap_or(&0) as i64; }
                        if a == q { s += *h.get(&(p - 1, b)).unwrap_or(&0) as i64; }
                    }
                    s -= *h.get(&(p - 1, q)).unwrap_or(&0) as i64;
                    let v = if (p, q) == (0, q0) { 1 } else { s.max(0) as u32 };
                    if v > 0 { h.insert((p, q), v); }
                }
            }
            h
        };
        let hammocks: Vec<_> = (0..n).map(hammock).collect();
        // Serre functor: the last vertex of each hammock.
        let nu: Vec<(i64, usize)> = hammocks
            .iter()
            .map(|h| *h.keys().max_by_key(|&&(p, q)| (p, q)).unwrap())
            .collect();
        assert!(nu.iter().all(|&(p, _)| p < span - (n as i64) - 1), "hammock too close to window edge");
        // X[1] = τ^{-1} ν X on lifts.
        let shift1 = |(p, q): (i64, usize)| {
            let (dp, q2) = nu[q];
            (p + dp + 1, q2)
        };
        let mut ext = vec![vec![vec![0u32; len]; len]; m + 1];
        let v_of: Vec<(usize, i64)> = {
            // Position of every Δ vertex as (q, p) with 0 <= p < period.
            let mut at = vec![(usize::MAX, 0i64); len];
            for (q, &start) in section.iter().enumerate().take(n) {
                let mut v = start;
                for p in 0..(len as i64) {
                    if at[v].0 == usize::MAX { at[v] = (q, p); }
                    v = tau_inv[v];
                }
            }
            assert!(at.iter().all(|a| a.0 != usize::MAX));
            at
        };
        for x in 0..len {
            let (qx, px) = v_of[x];
            let h = &hammocks[qx];
            for (&(p, q), &val) in h {
                let lift = (p + px, q);
                // Ext^i(x, y) = Hom(x, y[i]); y[i] has lift `lift`, so y is lift shifted by -i.
                for i in 0..=m {
                    let mut l = lift;
                    // Undo i shifts: find l' with shift1^i(l') = lift.
                    let mut ok = true;
                    for _ in 0..i {
                        let (lp, lq) = l;
                        let prev = (0..n).find(|&q2| nu[q2].1 == lq);
                        match prev {
                            Some(q2) => l = (lp - nu[q2].0 - 1, q2),
                            None => { ok = false; break; }
                        }
                    }
                    if ok {
                        debug_assert_eq!((0..i).fold(l, |a, _| shift1(a)), lift);
                        let y = pi(l.0, l.1);
                        ext[i][x][y] += val;
                    }
                }
            }
        }
        let index = delta.vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        HomOracle { vertices: delta.vertices, index, ext }
    }

    fn extend(
        edges: &[(usize, usize)],
        succ: &[Vec<usize>],
        tau_inv: &[usize],
        section: &mut Vec<usize>,
        from: usize,
    ) -> bool {
        // Next unassigned tree vertex adjacent to an assigned one.
        let next = edges.iter().find(|&&(a, b)| section[a] != usize::MAX && section[b] == usize::MAX);
        let Some(&(a, b)) = next else {
            // Check all arrows of the slice.
            return edges.iter().all(|&(a, b)| {
                succ[section[a]].contains(&section[b]) && succ[section[b]].contains(&tau_inv[section[a]])
            }) && (0..section.len()).all(|q| {
                succ[section[q]].len() == edges.iter().filter(|&&(a, b)| a == q || b == q).count()
            }) && {
                // Surjective on vertices.
                let mut hit = vec![false; succ.len()];
                for &v in section.iter() {
                    let mut w = v;
                    for _ in 0..succ.len() { hit[w] = true; w = tau_inv[w]; }
                }
                hit.into_iter().all(|h| h)
            };
        };
        let _ = from;
        for &c in &succ[section[a]] {
            if c == tau_inv[section[a]] || section.contains(&c) {
                continue;
            }
            if !succ[c].contains(&tau_inv[section[a]]) {
                continue;
            }
            section[b] = c;
            if Self::extend(edges, succ, tau_inv, section, b) {
                return true;
            }
            section[b] = usize::MAX;
        }
        false
    }

    pub fn dim_ext(&self, i: usize, x: &PairedArc, y: &PairedArc) -> u32 {
        self.ext[i][self.index[x]][self.index[y]]
    }
}
