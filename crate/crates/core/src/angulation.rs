//! Rigid sets (pairwise non-crossing m-arcs) and (m+2)-angulations (maximal
//! rigid sets).

use std::ops::ControlFlow;

use crate::arcset::{ArcSet, BitSet};
use crate::context::Model;
use crate::error::{Error, Result};

impl Model {
    pub fn is_rigid(&self, set: &ArcSet) -> Result<bool> {
        self.check_set(set)?;
        Ok(set
            .indices()
            .all(|u| !self.table.crossing_row(u).intersects(set.bits())))
    }

    /// Rigid, and every arc outside the set crosses some member.
    pub fn is_angulation(&self, set: &ArcSet) -> Result<bool> {
        if !self.is_rigid(set)? {
            return Ok(false);
        }
        Ok((0..self.len())
            .filter(|&k| !set.contains_index(k))
            .all(|k| self.table.crossing_row(k).intersects(set.bits())))
    }

    fn check_angulation_cap(&self) -> Result<()> {
        if self.len() > self.angulation_cap {
            return Err(Error::CapExceeded {
                size: self.len(),
                cap: self.angulation_cap,
                hint: "raise the angulation cap or pick a smaller model",
            });
        }
        Ok(())
    }

    /// Extends `set` greedily by arc index to a maximal rigid set.
    pub fn saturate_rigid(&self, set: &ArcSet) -> Result<ArcSet> {
        if !self.is_rigid(set)? {
            return Err(Error::Precondition("set is not rigid".into()));
        }
        let mut out = set.clone();
        for k in 0..self.len() {
            if !out.contains_index(k) && !self.table.crossing_row(k).intersects(out.bits()) {
                out.insert_index(k);
            }
        }
        Ok(out)
    }

    /// All (m+2)-angulations: maximal independent sets of the crossing graph,
    /// found by Bron–Kerbosch with pivoting on the compatibility graph.
    /// Branching follows arc index order, so the output order is fixed.
    pub fn enumerate_angulations(&self) -> Result<Vec<ArcSet>> {
        let mut out = Vec::new();
        self.for_each_angulation(|s| {
            out.push(s);
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn for_each_angulation(
        &self,
        mut visit: impl FnMut(ArcSet) -> ControlFlow<()>,
    ) -> Result<()> {
        self.check_angulation_cap()?;
        let len = self.len();
        // Compatible = distinct and non-crossing.
        let compatible: Vec<BitSet> = (0..len)
            .map(|u| {
                let mut row = BitSet::full(len);
                row.difference_with(self.table.crossing_row(u));
                row.remove(u);
                row
            })
            .collect();
        let mut chosen = BitSet::new(len);
        let _ = self.bron_kerbosch(
            &compatible,
            &mut chosen,
            BitSet::full(len),
            BitSet::new(len),
            &mut visit,
        );
        Ok(())
    }

    fn bron_kerbosch(
        &self,
        compatible: &[BitSet],
        chosen: &mut BitSet,
        mut candidates: BitSet,
        mut excluded: BitSet,
        visit: &mut impl FnMut(ArcSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if candidates.is_empty() {
            if excluded.is_empty() {
                return visit(self.set_from_bits(chosen.clone()));
            }
            return ControlFlow::Continue(());
        }
        // Pivot: the vertex of candidates ∪ excluded with most compatible
        // candidates; ties go to the smallest index.
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .max_by_key(|&p| {
                let mut c = candidates.clone();
                c.intersect_with(&compatible[p]);
                (c.len(), std::cmp::Reverse(p))
            })
            .expect("non-empty");
        let mut branch = candidates.clone();
        branch.difference_with(&compatible[pivot]);
        for v in branch.iter().collect::<Vec<_>>() {
            let mut next_candidates = candidates.clone();
            next_candidates.intersect_with(&compatible[v]);
            let mut next_excluded = excluded.clone();
            next_excluded.intersect_with(&compatible[v]);
            chosen.insert(v);
            self.bron_kerbosch(compatible, chosen, next_candidates, next_excluded, visit)?;
            chosen.remove(v);
            candidates.remove(v);
            excluded.insert(v);
        }
        ControlFlow::Continue(())
    }

    /// All rigid sets (including the empty set) in lexicographic order of
    /// their sorted index lists.
    pub fn for_each_rigid(&self, mut visit: impl FnMut(ArcSet) -> ControlFlow<()>) -> Result<()> {
        self.check_angulation_cap()?;
        let len = self.len();
        let mut chosen = BitSet::new(len);
        let _ = self.rigid_rec(0, &mut chosen, &mut visit);
        Ok(())
    }

    fn rigid_rec(
        &self,
        start: usize,
        chosen: &mut BitSet,
        visit: &mut impl FnMut(ArcSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        visit(self.set_from_bits(chosen.clone()))?;
        for k in start..self.len() {
            if self.table.crossing_row(k).intersects(chosen) {
                continue;
            }
            chosen.insert(k);
            let flow = self.rigid_rec(k + 1, chosen, visit);
            chosen.remove(k);
            flow?;
        }
        ControlFlow::Continue(())
    }
}
