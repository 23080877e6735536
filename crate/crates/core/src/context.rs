use crate::arcset::{ArcSet, BitSet};
use crate::error::{Error, Result};
use crate::homcalc::PairTable;
use crate::model::ModelParams;
use crate::polygon::{ArcUniverse, PairedArc};
use crate::ptolemy::forced_arcs;

/// Default number of arcs up to which subsets are enumerated exhaustively.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 20;
/// Largest arc universe accepted by the angulation and rigid-set enumerators.
pub const DEFAULT_ANGULATION_CAP: usize = 128;

/// An odd-level model with its arc universe and precomputed pair tables.
///
/// Everything here is immutable after construction.
#[derive(Debug, Clone)]
pub struct Model {
    pub(crate) universe: ArcUniverse,
    pub(crate) table: PairTable,
    /// Forced arcs for each crossing ordered pair, `len * len` entries.
    pub(crate) forced: Vec<Option<BitSet>>,
    pub(crate) exhaustive_cap: usize,
    pub(crate) angulation_cap: usize,
}

impl Model {
    pub fn new(params: ModelParams) -> Result<Self> {
        params.require_odd()?;
        let universe = ArcUniverse::new(params);
        let table = PairTable::new(&universe)?;
        let len = universe.len();
        let mut forced = vec![None; len * len];
        for u in 0..len {
            for v in table.crossing_row(u).iter() {
                let mut bits = BitSet::new(len);
                for w in forced_arcs(&params, &universe.arc(u), &universe.arc(v))? {
                    bits.insert(universe.require_index(&w)?);
                }
                forced[u * len + v] = Some(bits);
            }
        }
        Ok(Model {
            universe,
            table,
            forced,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            angulation_cap: DEFAULT_ANGULATION_CAP,
        })
    }

    pub fn with_params(n: u32, m: u32) -> Result<Self> {
        Self::new(ModelParams::new(n, m)?)
    }

    pub fn with_exhaustive_cap(mut self, cap: usize) -> Self {
        self.exhaustive_cap = cap.min(63);
        self
    }

    pub fn with_angulation_cap(mut self, cap: usize) -> Self {
        self.angulation_cap = cap;
        self
    }

    pub fn exhaustive_cap(&self) -> usize {
        self.exhaustive_cap
    }

    pub fn angulation_cap(&self) -> usize {
        self.angulation_cap
    }

    pub fn params(&self) -> &ModelParams {
        self.universe.params()
    }

    pub fn universe(&self) -> &ArcUniverse {
        &self.universe
    }

    pub fn table(&self) -> &PairTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn empty_set(&self) -> ArcSet {
        ArcSet::empty(&self.universe)
    }

    pub fn full_set(&self) -> ArcSet {
        ArcSet::full(&self.universe)
    }

    pub fn set_of(&self, arcs: &[PairedArc]) -> Result<ArcSet> {
        ArcSet::from_arcs(&self.universe, arcs)
    }

    pub fn set_from_bits(&self, bits: BitSet) -> ArcSet {
        ArcSet::from_bits(&self.universe, bits)
    }

    pub fn index_of(&self, arc: &PairedArc) -> Result<usize> {
        self.universe.require_index(arc)
    }

    pub(crate) fn forced_bits(&self, u: usize, v: usize) -> Option<&BitSet> {
        self.forced[u * self.len() + v].as_ref()
    }

    pub(crate) fn check_set(&self, set: &ArcSet) -> Result<()> {
        if set.params() != self.params() || set.universe_len() != self.len() {
            return Err(Error::Precondition(
                "arc set belongs to a different model".into(),
            ));
        }
        Ok(())
    }

    /// `U^⊥`.
    pub fn right_perp(&self, set: &ArcSet) -> Result<ArcSet> {
        self.check_set(set)?;
        Ok(self.set_from_bits(self.table.right_perp(set.bits())))
    }

    /// `⊥U`.
    pub fn left_perp(&self, set: &ArcSet) -> Result<ArcSet> {
        self.check_set(set)?;
        Ok(self.set_from_bits(self.table.left_perp(set.bits())))
    }

    /// `⊥(U^⊥)`.
    pub fn double_perp(&self, set: &ArcSet) -> Result<ArcSet> {
        self.left_perp(&self.right_perp(set)?)
    }
}
