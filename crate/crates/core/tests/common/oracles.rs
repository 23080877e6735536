use mcluster_d::homcalc::crossing;
use mcluster_d::{ArcSet, Color, Model, ModelParams, PairedArc};

/// Number of m-cluster tilting objects of type D_n: the product over the
/// exponents `e` of `(e + m h + 1) / (e + 1)`, with Coxeter number
/// `h = 2n - 2` and exponents `1, 3, …, 2n - 3` and `n - 1`.
pub fn fuss_catalan_d(n: u64, m: u64) -> u64 {
    let h = 2 * n - 2;
    let mut exps: Vec<u64> = (0..n - 1).map(|k| 2 * k + 1).collect();
    exps.push(n - 1);
    let (mut num, mut den) = (1u128, 1u128);
    for e in exps {
        num *= (e + m * h + 1) as u128;
        den *= (e + 1) as u128;
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

/// Maximal pairwise non-crossing sets, by trying every subset of a universe
/// of at most 20 arcs and asking `crossing` directly.
pub fn brute_force_angulations(params: &ModelParams, arcs: &[PairedArc]) -> Vec<u32> {
    let k = arcs.len();
    assert!(k <= 20);
    let cross: Vec<u32> = (0..k)
        .map(|a| {
            (0..k)
                .filter(|&b| crossing(params, &arcs[a], &arcs[b]).unwrap())
                .fold(0u32, |acc, b| acc | 1 << b)
        })
        .collect();
    let rigid = |mask: u32| (0..k).all(|a| mask & (1 << a) == 0 || cross[a] & mask == 0);
    (0u32..1 << k)
        .filter(|&mask| {
            rigid(mask) && (0..k).all(|a| mask & (1 << a) != 0 || !rigid(mask | 1 << a))
        })
        .collect()
}

/// Clockwise offset of `to` from `from` on the 2N-gon, in `0..2N`.
fn offset(params: &ModelParams, from: i64, to: i64) -> i64 {
    (to - from).rem_euclid(params.vertex_count() as i64)
}

/// The four endpoint lemmas for a Ptolemy diagram `set` (as stated for
/// maximal/minimal partners at a vertex); returns a description of every
/// failure.
pub fn endpoint_lemma_failures(model: &Model, set: &ArcSet) -> Vec<String> {
    let params = *model.params();
    let two_n = params.vertex_count() as i64;
    let big_n = params.big_n() as i64;
    let m = params.m() as i64;
    let universe = model.universe();
    let perp = model.right_perp(set).unwrap();
    let in_perp = |arc: PairedArc| perp.contains(universe, &arc);
    // The arc from x to y, with both diameters when opposite.
    let arcs_between = |x: i64, y: i64| -> Vec<PairedArc> {
        if offset(&params, x, y) == big_n {
            vec![PairedArc::diameter(&params, x, Color::Red), PairedArc::diameter(&params, x, Color::Green)]
        } else {
            vec![PairedArc::chord(&params, x, y).unwrap()]
        }
    };
    let mut failures = Vec::new();
    for a in 1..=two_n {
        let mut offsets = Vec::new();
        let (mut red, mut green) = (false, false);
        for arc in set.arcs(universe) {
            for c in arc.representatives(&params) {
                let (x, y) = (c.x as i64, c.y as i64);
                let other = if x == a { y } else if y == a { x } else { continue };
                match arc {
                    PairedArc::Diameter { color: Color::Red, .. } => red = true,
                    PairedArc::Diameter { color: Color::Green, .. } => green = true,
                    PairedArc::NonDiameter { .. } => offsets.push(offset(&params, a, other)),
                }
            }
        }
        if offsets.is_empty() && !red && !green {
            continue;
        }
        if !red && !green {
            let max = *offsets.iter().max().unwrap();
            if max != two_n - m - 1 {
                for arc in arcs_between(a - m, a + max) {
                    if !in_perp(arc) {
                        failures.push(format!("maximal partner at {a}: {arc} not in U^perp"));
                    }
                }
            }
            let min = *offsets.iter().min().unwrap();
            if min != m + 1 {
                for arc in arcs_between(a + 1, a + min - m + 1) {
                    if !in_perp(arc) {
                        failures.push(format!("minimal partner at {a}: {arc} not in U^perp"));
                    }
                }
            }
        }
        if red != green {
            let color = if red { Color::Red } else { Color::Green };
            if offsets.iter().all(|&o| o > big_n) {
                let arc = PairedArc::diameter(&params, a + 1, color);
                if !in_perp(arc) {
                    failures.push(format!("diameter minimal at {a}: {arc} not in U^perp"));
                }
            }
            if offsets.iter().all(|&o| o < big_n) {
                let arc = PairedArc::diameter(&params, a - m, color);
                if !in_perp(arc) {
                    failures.push(format!("diameter maximal at {a}: {arc} not in U^perp"));
                }
            }
        }
    }
    failures
}

/// Distance by brute force over all representative pairs: every
/// interleaving `(i, j)`, `(k, l)` with `i` first gives `(k - i) mod m`
/// for the endpoint of `v` met first clockwise from `i`. Returns every value
/// seen, so callers can check representative-independence.
pub fn distances_over_representatives(params: &ModelParams, u: &PairedArc, v: &PairedArc) -> Vec<u32> {
    let m = params.m() as i64;
    let mut seen = Vec::new();
    let chords = |a: &PairedArc| -> Vec<(i64, i64)> {
        a.representatives(params)
            .into_iter()
            .flat_map(|c| [(c.x as i64, c.y as i64), (c.y as i64, c.x as i64)])
            .collect()
    };
    for (i, j) in chords(u) {
        for (k, l) in chords(v) {
            let (ok, ol, oj) = (offset(params, i, k), offset(params, i, l), offset(params, i, j));
            // Interleaving with k met first: i < k < j < l.
            if 0 < ok && ok < oj && oj < ol {
                let r = ok.rem_euclid(m);
                seen.push(if r == 0 { m as u32 } else { r as u32 });
            }
        }
    }
    seen.sort();
    seen.dedup();
    seen
}
