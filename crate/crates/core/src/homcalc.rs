//! Crossing, distance, Ext-nonvanishing and the perpendicular operators.

use crate::arcset::{ArcSet, BitSet};
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::polygon::{ArcUniverse, Chord, PairedArc};

/// Whether two paired m-arcs cross.
///
/// Non-diameter orbits cross when some representatives interleave; a
/// diameter crosses a non-diameter orbit when it separates its endpoints; two
/// diameters cross iff they differ in colour and in endpoints. An orbit never
/// crosses itself. Two diameters can only be compared for odd m.
pub fn crossing(params: &ModelParams, u: &PairedArc, v: &PairedArc) -> Result<bool> {
    match (u, v) {
        (
            PairedArc::Diameter { i, color: cu },
            PairedArc::Diameter { i: k, color: cv },
        ) => {
            params.require_odd()?;
            Ok(cu != cv && i != k)
        }
        _ => Ok(crossing_pair(params, u, v).is_some()),
    }
}

/// Representatives `(ur, vr)` that interleave, with `ur` the first
/// representative of `u`. Diameters compare as chords.
fn crossing_pair(params: &ModelParams, u: &PairedArc, v: &PairedArc) -> Option<(Chord, Chord)> {
    if u == v {
        return None;
    }
    let ur = u.representatives(params)[0];
    v.representatives(params)
        .into_iter()
        .find(|vr| ur.crosses(vr))
        .map(|vr| (ur, vr))
}

/// Clockwise steps from `from` to the nearer endpoint of `to`, reduced into
/// `1..=m`.
pub(crate) fn chord_distance(params: &ModelParams, from: u32, to: &Chord) -> u32 {
    let s = params.steps(from, to.x).min(params.steps(from, to.y));
    let m = params.m();
    match s % m {
        0 => m,
        r => r,
    }
}

/// Distance from `u` to `v`: for interleaving representatives `(i, j)` and
/// `(k, l)`, the number of clockwise boundary steps from `i` to the first
/// endpoint of `(k, l)` met, as a residue in `1..=m`. `None` when the arcs do
/// not cross.
pub fn distance(params: &ModelParams, u: &PairedArc, v: &PairedArc) -> Result<Option<u32>> {
    params.require_odd()?;
    if !crossing(params, u, v)? {
        return Ok(None);
    }
    let (ur, vr) = match crossing_pair(params, u, v) {
        Some(pair) => pair,
        None => unreachable!("crossing arcs have interleaving representatives"),
    };
    Ok(Some(chord_distance(params, ur.x, &vr)))
}

/// `Ext^degree(M_u, M_v) ≠ 0`, i.e. `u` and `v` cross at distance `degree`.
pub fn ext_nonzero(params: &ModelParams, u: &PairedArc, v: &PairedArc, degree: u32) -> Result<bool> {
    if degree < 1 || degree > params.m() {
        return Err(Error::InvalidParameters(format!(
            "Ext degree must lie in 1..={}, got {degree}",
            params.m()
        )));
    }
    Ok(distance(params, u, v)? == Some(degree))
}

/// Crossing and distance for every ordered pair of arcs of a universe.
#[derive(Debug, Clone)]
pub struct PairTable {
    len: usize,
    /// `dist[u * len + v]`: 0 when not crossing, else `d(u, v)`.
    dist: Vec<u8>,
    crosses: Vec<BitSet>,
    /// `dist_one_from[v]`: all `u` crossing `v` with `d(v, u) = 1`.
    dist_one_from: Vec<BitSet>,
    /// `dist_one_to[v]`: all `u` crossing `v` with `d(u, v) = 1`.
    dist_one_to: Vec<BitSet>,
}

impl PairTable {
    pub fn new(universe: &ArcUniverse) -> Result<Self> {
        let params = universe.params();
        params.require_odd()?;
        if params.m() > u8::MAX as u32 {
            return Err(Error::InvalidParameters("m too large for the pair table".into()));
        }
        let len = universe.len();
        let mut dist = vec![0u8; len * len];
        let mut crosses = vec![BitSet::new(len); len];
        let mut dist_one_from = vec![BitSet::new(len); len];
        let mut dist_one_to = vec![BitSet::new(len); len];
        for (ui, u) in universe.arcs().iter().enumerate() {
            for (vi, v) in universe.arcs().iter().enumerate() {
                if let Some(d) = distance(params, u, v)? {
                    dist[ui * len + vi] = d as u8;
                    crosses[ui].insert(vi);
                    if d == 1 {
                        dist_one_from[ui].insert(vi);
                        dist_one_to[vi].insert(ui);
                    }
                }
            }
        }
        Ok(PairTable {
            len,
            dist,
            crosses,
            dist_one_from,
            dist_one_to,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn crosses(&self, u: usize, v: usize) -> bool {
        self.dist[u * self.len + v] != 0
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        match self.dist[u * self.len + v] {
            0 => None,
            d => Some(d as u32),
        }
    }

    pub fn crossing_row(&self, u: usize) -> &BitSet {
        &self.crosses[u]
    }

    /// `U^⊥`: arcs `u` such that every `v ∈ U` crossing `u` has `d(v, u) > 1`.
    pub fn right_perp(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.len);
        for v in set.iter() {
            out.difference_with(&self.dist_one_from[v]);
        }
        out
    }

    /// `⊥U`: arcs `u` such that every `v ∈ U` crossing `u` has `d(u, v) > 1`.
    pub fn left_perp(&self, set: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.len);
        for v in set.iter() {
            out.difference_with(&self.dist_one_to[v]);
        }
        out
    }
}

/// `U^⊥` computed directly from [`distance`], for callers without a table.
pub fn right_perp(universe: &ArcUniverse, set: &ArcSet) -> Result<ArcSet> {
    perp(universe, set, |u, v| distance(universe.params(), v, u))
}

/// `⊥U` computed directly from [`distance`].
pub fn left_perp(universe: &ArcUniverse, set: &ArcSet) -> Result<ArcSet> {
    perp(universe, set, |u, v| distance(universe.params(), u, v))
}

fn perp(
    universe: &ArcUniverse,
    set: &ArcSet,
    dist: impl Fn(&PairedArc, &PairedArc) -> Result<Option<u32>>,
) -> Result<ArcSet> {
    universe.params().require_odd()?;
    let mut out = ArcSet::empty(universe);
    'outer: for (k, u) in universe.arcs().iter().enumerate() {
        for v in set.arcs(universe) {
            if dist(u, &v)? == Some(1) {
                continue 'outer;
            }
        }
        out.insert_index(k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::{enumerate_m_arcs, pair_is_m_arc, Color};

    fn p(n: u32, m: u32) -> ModelParams {
        ModelParams::new(n, m).unwrap()
    }

    fn ch(q: &ModelParams, a: i64, b: i64) -> PairedArc {
        PairedArc::chord(q, a, b).unwrap()
    }

    fn dia(q: &ModelParams, i: i64, c: Color) -> PairedArc {
        PairedArc::diameter(q, i, c)
    }

    #[test]
    fn crossing_examples() {
        let q = p(4, 3);
        assert!(crossing(&q, &ch(&q, 1, 5), &ch(&q, 4, 8)).unwrap());
        assert!(!crossing(&q, &dia(&q, 1, Color::Red), &dia(&q, 1, Color::Green)).unwrap());
        assert!(crossing(&q, &dia(&q, 1, Color::Red), &dia(&q, 4, Color::Green)).unwrap());
        assert!(!crossing(&q, &dia(&q, 1, Color::Red), &dia(&q, 4, Color::Red)).unwrap());
        let q = p(4, 2);
        assert!(!crossing(&q, &ch(&q, 1, 6), &ch(&q, 8, 13)).unwrap());
        assert_eq!(
            crossing(&q, &dia(&q, 1, Color::Red), &dia(&q, 2, Color::Green)),
            Err(Error::EvenLevel { m: 2 })
        );
        assert!(crossing(&q, &dia(&q, 1, Color::Red), &ch(&q, 5, 10)).unwrap());
        assert!(!crossing(&q, &dia(&q, 1, Color::Red), &ch(&q, 3, 8)).unwrap());
    }

    #[test]
    fn distance_examples() {
        let q = p(4, 3);
        let (u, v) = (ch(&q, 1, 5), ch(&q, 4, 8));
        assert_eq!(distance(&q, &u, &v).unwrap(), Some(3));
        assert_eq!(distance(&q, &v, &u).unwrap(), Some(1));
        assert_eq!(distance(&q, &u, &ch(&q, 5, 8)).unwrap(), None);
        assert!(ext_nonzero(&q, &u, &v, 3).unwrap());
        assert!(ext_nonzero(&q, &v, &u, 1).unwrap());
        assert!(!ext_nonzero(&q, &v, &u, 2).unwrap());
        assert!(ext_nonzero(&q, &v, &u, 0).is_err());
        assert!(ext_nonzero(&q, &v, &u, 4).is_err());
        assert!(distance(&p(4, 2), &u, &v).is_err());
    }

    #[test]
    fn level_one_distances_are_one() {
        let q = p(4, 1);
        let arcs = enumerate_m_arcs(&q);
        for u in &arcs {
            for v in &arcs {
                let d = distance(&q, u, v).unwrap();
                assert_eq!(d.is_some(), crossing(&q, u, v).unwrap());
                assert!(d.is_none() || d == Some(1));
            }
        }
    }

    #[test]
    fn non_crossing_arcs_have_no_ext() {
        let q = p(4, 3);
        let arcs = enumerate_m_arcs(&q);
        for u in &arcs {
            for v in &arcs {
                if !crossing(&q, u, v).unwrap() {
                    assert!((1..=3).all(|j| !ext_nonzero(&q, u, v, j).unwrap()));
                }
                let hits = (1..=3).filter(|&j| ext_nonzero(&q, u, v, j).unwrap()).count();
                assert!(hits <= 1);
            }
        }
    }

    #[test]
    fn crossing_is_symmetric() {
        for (n, m) in [(3, 1), (4, 3), (5, 3), (5, 5)] {
            let q = p(n, m);
            let arcs = enumerate_m_arcs(&q);
            for u in &arcs {
                for v in &arcs {
                    assert_eq!(crossing(&q, u, v).unwrap(), crossing(&q, v, u).unwrap());
                }
            }
        }
    }

    // (i, k) is an m-arc iff d(u, v) = 1 and k != i + 1, for crossing
    // representatives with i < k < j < l.
    #[test]
    fn adjacent_endpoint_arc_criterion() {
        for (n, m) in [(4, 3), (5, 3), (4, 5)] {
            let q = p(n, m);
            let arcs = enumerate_m_arcs(&q);
            for u in arcs.iter().filter(|a| !a.is_diameter()) {
                for v in arcs.iter().filter(|a| !a.is_diameter()) {
                    for ur in u.representatives(&q) {
                        for vr in v.representatives(&q) {
                            let (i, j) = (ur.x.min(ur.y), ur.x.max(ur.y));
                            let (k, l) = (vr.x.min(vr.y), vr.x.max(vr.y));
                            if !(i < k && k < j && j < l) {
                                continue;
                            }
                            let d = distance(&q, u, v).unwrap().unwrap();
                            assert_eq!(
                                pair_is_m_arc(&q, i, k),
                                d == 1 && k != i + 1,
                                "u={u} v={v}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_direct_perps() {
        let q = p(4, 3);
        let universe = ArcUniverse::new(q);
        let table = PairTable::new(&universe).unwrap();
        let u15 = universe.index_of(&ch(&q, 1, 5)).unwrap();
        let u48 = universe.index_of(&ch(&q, 4, 8)).unwrap();
        let mut s = ArcSet::empty(&universe);
        s.insert_index(u15);
        let right = table.right_perp(s.bits());
        assert!(right.contains(u48));
        assert_eq!(&right, right_perp(&universe, &s).unwrap().bits());
        let left = table.left_perp(s.bits());
        assert!(!left.contains(u48));
        assert_eq!(&left, left_perp(&universe, &s).unwrap().bits());

        let mut t = ArcSet::empty(&universe);
        t.insert_index(u48);
        assert!(!table.right_perp(t.bits()).contains(u15));

        let empty = ArcSet::empty(&universe);
        assert_eq!(table.right_perp(empty.bits()).len(), universe.len());
        assert_eq!(table.left_perp(empty.bits()).len(), universe.len());
    }
}
