//! Translation quivers built from m-moves and `τ_m`, in both models.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::{self, Write as _};
use std::hash::Hash;

use serde::Serialize;

use crate::model::ModelParams;
use crate::polygon::{enumerate_m_arcs, m_move_successors, tau, PairedArc};
use crate::punctured::{enumerate_tagged_m_arcs, m_move_successors_tagged, phi, tau_tagged, TaggedArc};

/// Vertices, arrows and a translation map. Arrows are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationQuiver<L> {
    pub vertices: Vec<L>,
    pub arrows: BTreeSet<(usize, usize)>,
    pub translation: Vec<usize>,
}

impl<L: Clone + Eq + Hash> TranslationQuiver<L> {
    fn build(
        vertices: Vec<L>,
        successors: impl Fn(&L) -> Vec<L>,
        translate: impl Fn(&L) -> L,
    ) -> Self {
        let index: HashMap<L, usize> = vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut arrows = BTreeSet::new();
        for (k, v) in vertices.iter().enumerate() {
            for s in successors(v) {
                arrows.insert((k, index[&s]));
            }
        }
        let translation = vertices.iter().map(|v| index[&translate(v)]).collect();
        TranslationQuiver {
            vertices,
            arrows,
            translation,
        }
    }

    pub fn index_of(&self, label: &L) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn has_arrow(&self, from: &L, to: &L) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.arrows.contains(&(a, b)),
            _ => false,
        }
    }

    pub fn translation_is_bijective(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        for &t in &self.translation {
            if t >= seen.len() || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        true
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let len = self.vertices.len();
        if len == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); len];
        for &(a, b) in &self.arrows {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; len];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// `Γ(n, m)`: tagged m-arcs of the punctured N-gon.
pub fn build_gamma(params: &ModelParams) -> TranslationQuiver<TaggedArc> {
    TranslationQuiver::build(
        enumerate_tagged_m_arcs(params),
        |t| m_move_successors_tagged(params, t),
        |t| tau_tagged(params, t),
    )
}

/// `Δ(n, m)`: paired m-arcs of the 2N-gon, with arrows from the direct
/// geometric m-moves.
pub fn build_delta(params: &ModelParams) -> TranslationQuiver<PairedArc> {
    TranslationQuiver::build(
        enumerate_m_arcs(params),
        |a| m_move_successors(params, a),
        |a| tau(params, a),
    )
}

/// Outcome of comparing `Γ` and `Δ` through `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub holds: bool,
    /// `mapping[k]` is the Δ-index of `φ` applied to Γ-vertex `k`.
    pub mapping: Vec<usize>,
    pub counterexample: Option<String>,
}

/// Checks that `φ` is a bijection on vertices, maps the arrow set of `Γ`
/// onto that of `Δ`, and commutes with the translations.
pub fn verify_translation_iso(params: &ModelParams) -> IsoReport {
    let gamma = build_gamma(params);
    let delta = build_delta(params);
    let index: HashMap<PairedArc, usize> = delta.vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let fail = |mapping: Vec<usize>, why: String| IsoReport {
        holds: false,
        mapping,
        counterexample: Some(why),
    };

    let mut mapping = Vec::with_capacity(gamma.vertices.len());
    for t in &gamma.vertices {
        let image = phi(params, t);
        match index.get(&image) {
            Some(&k) => mapping.push(k),
            None => return fail(mapping, format!("vertex {t}: φ gives {image}, not a vertex of Δ")),
        }
    }
    if gamma.vertices.len() != delta.vertices.len() {
        return fail(mapping, format!(
            "vertex counts differ: Γ has {}, Δ has {}",
            gamma.vertices.len(),
            delta.vertices.len()
        ));
    }
    let mut hit = vec![false; delta.vertices.len()];
    for (k, &img) in mapping.iter().enumerate() {
        if std::mem::replace(&mut hit[img], true) {
            return fail(mapping.clone(), format!("vertex {}: φ is not injective", gamma.vertices[k]));
        }
    }
    let transported: BTreeSet<(usize, usize)> = gamma.arrows.iter().map(|&(a, b)| (mapping[a], mapping[b])).collect();
    if let Some(&(a, b)) = transported.symmetric_difference(&delta.arrows).next() {
        let side = if delta.arrows.contains(&(a, b)) { "only in Δ" } else { "only in φ(Γ)" };
        return fail(mapping, format!("arrow {} -> {} {side}", delta.vertices[a], delta.vertices[b]));
    }
    for (k, &tk) in gamma.translation.iter().enumerate() {
        if mapping[tk] != delta.translation[mapping[k]] {
            return fail(mapping, format!("translation does not commute at {}", gamma.vertices[k]));
        }
    }
    IsoReport {
        holds: true,
        mapping,
        counterexample: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Serialize)]
struct QuiverJson {
    vertices: Vec<String>,
    arrows: Vec<[usize; 2]>,
    translation: Vec<usize>,
}

/// DOT or JSON text. DOT draws arrows solid and the translation `x → τx` as
/// dashed edges that do not constrain the layout.
pub fn export_quiver<L: fmt::Display>(q: &TranslationQuiver<L>, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            let doc = QuiverJson {
                vertices: q.vertices.iter().map(|v| v.to_string()).collect(),
                arrows: q.arrows.iter().map(|&(a, b)| [a, b]).collect(),
                translation: q.translation.clone(),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
            s.push('\n');
            s
        }
        ExportFormat::Dot => {
            let mut s = String::from("digraph quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n");
            for (k, v) in q.vertices.iter().enumerate() {
                let _ = writeln!(s, "  v{k} [label=\"{v}\"];");
            }
            for &(a, b) in &q.arrows {
                let _ = writeln!(s, "  v{a} -> v{b};");
            }
            for (k, &t) in q.translation.iter().enumerate() {
                let _ = writeln!(s, "  v{k} -> v{t} [style=dashed, constraint=false, color=gray];");
            }
            s.push_str("}\n");
            s
        }
    }
}
