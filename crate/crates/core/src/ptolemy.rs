//! Ptolemy diagrams of type D: forced arcs, violation reports, completion,
//! torsion pairs and enumeration.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arcset::{ArcSet, BitSet};
use crate::context::Model;
use crate::error::{Error, Result};
use crate::homcalc::crossing;
use crate::model::ModelParams;
use crate::polygon::{pair_is_m_arc, Chord, Color, PairedArc};

/// Arcs that a Ptolemy diagram containing the crossing arcs `u` and `v` must
/// also contain, sorted and deduplicated.
///
/// With crossing representatives `α = (i, j)` and `β = (k, l)`:
/// * two non-diameters force those of `(i,k), (i,l), (j,k), (j,l)` that are
///   m-arcs, with both coloured diameters for an opposite pair;
/// * two diameters force those of `(i,k), (i,k+N), (i+N,k), (i+N,k+N)` that
///   are m-arcs;
/// * a diameter `α` and a non-diameter `β` force those of the four arcs that
///   are m-arcs and do not cross `(k+N, l+N)`, plus the diameters at `k` and
///   `l` in the colour of `α`.
pub fn forced_arcs(params: &ModelParams, u: &PairedArc, v: &PairedArc) -> Result<Vec<PairedArc>> {
    params.require_odd()?;
    if !crossing(params, u, v)? {
        return Err(Error::Precondition(format!("{u} and {v} do not cross")));
    }
    let big_n = params.big_n();
    let mut out = Vec::new();
    let push_pair = |x: u32, y: u32, out: &mut Vec<PairedArc>| {
        if !pair_is_m_arc(params, x, y) {
            return;
        }
        if params.steps(x, y) == big_n {
            out.push(PairedArc::diameter(params, x as i64, Color::Red));
            out.push(PairedArc::diameter(params, x as i64, Color::Green));
        } else {
            out.push(PairedArc::chord(params, x as i64, y as i64).expect("checked above"));
        }
    };
    match (u, v) {
        (PairedArc::NonDiameter { .. }, PairedArc::NonDiameter { .. }) => {
            let alpha = u.representatives(params)[0];
            for beta in v.representatives(params) {
                if !alpha.crosses(&beta) {
                    continue;
                }
                for (x, y) in corner_pairs(&alpha, &beta) {
                    push_pair(x, y, &mut out);
                }
            }
        }
        (PairedArc::Diameter { i, .. }, PairedArc::Diameter { i: k, .. }) => {
            let (i, k) = (*i, *k);
            for (x, y) in [(i, k), (i, k + big_n), (i + big_n, k), (i + big_n, k + big_n)] {
                push_pair(x, y, &mut out);
            }
        }
        (PairedArc::Diameter { .. }, PairedArc::NonDiameter { .. }) => {
            diameter_chord_forced(params, u, v, &mut out);
        }
        (PairedArc::NonDiameter { .. }, PairedArc::Diameter { .. }) => {
            diameter_chord_forced(params, v, u, &mut out);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn corner_pairs(alpha: &Chord, beta: &Chord) -> [(u32, u32); 4] {
    [
        (alpha.x, beta.x),
        (alpha.x, beta.y),
        (alpha.y, beta.x),
        (alpha.y, beta.y),
    ]
}

fn diameter_chord_forced(
    params: &ModelParams,
    diameter: &PairedArc,
    chord: &PairedArc,
    out: &mut Vec<PairedArc>,
) {
    let PairedArc::Diameter { color, .. } = *diameter else {
        unreachable!("first argument is a diameter")
    };
    let alpha = diameter.representatives(params)[0];
    for beta in chord.representatives(params) {
        if !alpha.crosses(&beta) {
            continue;
        }
        let partner = beta.rotated(params);
        for (x, y) in corner_pairs(&alpha, &beta) {
            // Corners of a diameter and a crossing chord are never opposite.
            if pair_is_m_arc(params, x, y) && !Chord::new(x, y).crosses(&partner) {
                out.push(PairedArc::chord(params, x as i64, y as i64).expect("m-arc"));
            }
        }
        out.push(PairedArc::diameter(params, beta.x as i64, color));
        out.push(PairedArc::diameter(params, beta.y as i64, color));
    }
}

/// One crossing pair of a set together with the forced arcs it lacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub first: PairedArc,
    pub second: PairedArc,
    pub missing: ArcSet,
}

/// A torsion pair `(X, X^⊥)` with `X = ⊥(X^⊥)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionPair {
    pub torsion: ArcSet,
    pub torsion_free: ArcSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Every subset of the arc universe.
    Exhaustive,
    /// Distinct completions of all generator sets with at most
    /// `max_generators` arcs. A lower bound on the full census.
    ClosureGenerated { max_generators: usize },
    /// Seeded uniform random subsets; the Ptolemy ones are kept.
    RandomSample { count: usize, seed: u64 },
}

impl Strategy {
    /// Whether the emitted family is the complete set of Ptolemy diagrams.
    pub fn is_exact(&self) -> bool {
        matches!(self, Strategy::Exhaustive)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::ClosureGenerated { .. } => "closure",
            Strategy::RandomSample { .. } => "random",
        }
    }
}

/// Ptolemy diagrams produced by one strategy, in its deterministic order.
pub struct PtolemyStream<'a> {
    pub strategy: Strategy,
    pub exact: bool,
    sets: Box<dyn Iterator<Item = ArcSet> + 'a>,
}

impl Iterator for PtolemyStream<'_> {
    type Item = ArcSet;

    fn next(&mut self) -> Option<ArcSet> {
        self.sets.next()
    }
}

/// Crossing rows and forced sets packed into single words, for universes of
/// at most 64 arcs.
struct MaskTables {
    crosses: Vec<u64>,
    forced: Vec<u64>,
    len: usize,
}

impl MaskTables {
    fn is_ptolemy(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut partners = self.crosses[u] & rest;
            while partners != 0 {
                let v = partners.trailing_zeros() as usize;
                partners &= partners - 1;
                if self.forced[u * self.len + v] & !mask != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl Model {
    /// [`forced_arcs`] as a set of this model.
    pub fn forced_arcs(&self, u: &PairedArc, v: &PairedArc) -> Result<ArcSet> {
        let (ui, vi) = (self.index_of(u)?, self.index_of(v)?);
        match self.forced_bits(ui, vi) {
            Some(bits) => Ok(self.set_from_bits(bits.clone())),
            None => Err(Error::Precondition(format!("{u} and {v} do not cross"))),
        }
    }

    /// Every unordered crossing pair of `set` (in index order) whose forced
    /// arcs are not all in `set`.
    pub fn ptolemy_violations(&self, set: &ArcSet) -> Result<Vec<Violation>> {
        self.check_set(set)?;
        let bits = set.bits();
        let mut out = Vec::new();
        for u in bits.iter() {
            for v in self.table.crossing_row(u).iter().filter(|&v| v > u) {
                if !bits.contains(v) {
                    continue;
                }
                let mut missing = self.forced_bits(u, v).expect("crossing pair").clone();
                missing.difference_with(bits);
                if !missing.is_empty() {
                    out.push(Violation {
                        first: self.universe.arc(u),
                        second: self.universe.arc(v),
                        missing: self.set_from_bits(missing),
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn is_ptolemy(&self, set: &ArcSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(self.is_ptolemy_bits(set.bits()))
    }

    pub(crate) fn is_ptolemy_bits(&self, bits: &BitSet) -> bool {
        bits.iter().all(|u| {
            self.table
                .crossing_row(u)
                .iter()
                .filter(|&v| v > u && bits.contains(v))
                .all(|v| self.forced_bits(u, v).expect("crossing pair").is_subset(bits))
        })
    }

    /// The smallest Ptolemy diagram containing `set`.
    pub fn ptolemy_complete(&self, set: &ArcSet) -> Result<ArcSet> {
        self.check_set(set)?;
        Ok(self.set_from_bits(self.complete_bits(set.bits().clone())))
    }

    fn complete_bits(&self, mut bits: BitSet) -> BitSet {
        let mut queue = VecDeque::new();
        for u in bits.iter() {
            for v in self.table.crossing_row(u).iter() {
                if v > u && bits.contains(v) {
                    queue.push_back((u, v));
                }
            }
        }
        while let Some((u, v)) = queue.pop_front() {
            let forced = self.forced_bits(u, v).expect("crossing pair");
            for w in forced.iter() {
                if bits.insert(w) {
                    for x in self.table.crossing_row(w).iter() {
                        if bits.contains(x) {
                            queue.push_back((w, x));
                        }
                    }
                }
            }
        }
        bits
    }

    /// `(U, U^⊥)` for a Ptolemy diagram `U`, after checking `U = ⊥(U^⊥)`.
    pub fn torsion_pair_of(&self, set: &ArcSet) -> Result<TorsionPair> {
        let violations = self.ptolemy_violations(set)?;
        if !violations.is_empty() {
            return Err(Error::NotPtolemy(
                violations
                    .into_iter()
                    .map(|v| {
                        let missing = v.missing.arcs(&self.universe).collect();
                        (v.first, v.second, missing)
                    })
                    .collect(),
            ));
        }
        let torsion_free = self.right_perp(set)?;
        let back = self.left_perp(&torsion_free)?;
        if &back != set {
            let extra: Vec<String> = back
                .indices()
                .filter(|&k| !set.contains_index(k))
                .map(|k| self.universe.arc(k).to_string())
                .collect();
            return Err(Error::FixpointFailure(format!(
                "double perp adds {}",
                extra.join(",")
            )));
        }
        Ok(TorsionPair {
            torsion: set.clone(),
            torsion_free,
        })
    }

    fn mask_tables(&self) -> Option<MaskTables> {
        let len = self.len();
        if len > 64 {
            return None;
        }
        let word = |b: &BitSet| b.words().first().copied().unwrap_or(0);
        let crosses = (0..len).map(|u| word(self.table.crossing_row(u))).collect();
        let forced = self
            .forced
            .iter()
            .map(|f| f.as_ref().map_or(0, word))
            .collect();
        Some(MaskTables { crosses, forced, len })
    }

    fn exhaustive_masks(&self) -> Result<MaskTables> {
        if self.len() > self.exhaustive_cap {
            return Err(Error::CapExceeded {
                size: self.len(),
                cap: self.exhaustive_cap,
                hint: "use the closure or random strategy instead",
            });
        }
        Ok(self.mask_tables().expect("cap is at most 63 arcs"))
    }

    /// Ptolemy diagrams found by `strategy`.
    pub fn enumerate_ptolemy(&self, strategy: Strategy) -> Result<PtolemyStream<'_>> {
        let sets: Box<dyn Iterator<Item = ArcSet> + '_> = match strategy {
            Strategy::Exhaustive => {
                let tables = self.exhaustive_masks()?;
                let total = 1u64 << self.len();
                Box::new(
                    (0..total)
                        .filter(move |&mask| tables.is_ptolemy(mask))
                        .map(move |mask| ArcSet::from_mask(&self.universe, mask)),
                )
            }
            Strategy::ClosureGenerated { max_generators } => {
                Box::new(self.closure_census(max_generators).into_iter().map(|b| self.set_from_bits(b)))
            }
            Strategy::RandomSample { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let len = self.len();
                let mut seen = HashSet::new();
                let mut found = Vec::new();
                for _ in 0..count {
                    let mut bits = BitSet::new(len);
                    for k in 0..len {
                        if rng.gen::<bool>() {
                            bits.insert(k);
                        }
                    }
                    if self.is_ptolemy_bits(&bits) && seen.insert(bits.clone()) {
                        found.push(bits);
                    }
                }
                Box::new(found.into_iter().map(|b| self.set_from_bits(b)))
            }
        };
        Ok(PtolemyStream {
            strategy,
            exact: strategy.is_exact(),
            sets,
        })
    }

    /// Number of Ptolemy diagrams among all subsets, counted over disjoint
    /// mask ranges in parallel.
    pub fn count_ptolemy_exhaustive(&self) -> Result<u64> {
        let tables = self.exhaustive_masks()?;
        let total = 1u64 << self.len();
        const CHUNK: u64 = 1 << 12;
        let chunks = total.div_ceil(CHUNK);
        Ok((0..chunks)
            .into_par_iter()
            .map(|c| {
                let hi = ((c + 1) * CHUNK).min(total);
                (c * CHUNK..hi).filter(|&mask| tables.is_ptolemy(mask)).count() as u64
            })
            .sum())
    }

    /// Distinct completions of all generator sets of size `<= max_generators`,
    /// ordered by bit pattern.
    pub fn closure_census(&self, max_generators: usize) -> BTreeSet<BitSet> {
        let len = self.len();
        let mut out = BTreeSet::new();
        let mut chosen = Vec::new();
        self.closure_rec(0, max_generators, &mut chosen, &mut out, len);
        out
    }

    fn closure_rec(
        &self,
        start: usize,
        budget: usize,
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<BitSet>,
        len: usize,
    ) {
        let mut bits = BitSet::new(len);
        for &k in chosen.iter() {
            bits.insert(k);
        }
        out.insert(self.complete_bits(bits));
        if budget == 0 {
            return;
        }
        for k in start..len {
            chosen.push(k);
            self.closure_rec(k + 1, budget - 1, chosen, out, len);
            chosen.pop();
        }
    }
}
