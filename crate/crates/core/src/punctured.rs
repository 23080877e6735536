//! The punctured N-gon model with tagged arcs. Vertex arithmetic here is
//! modulo N.

use std::fmt;

use crate::model::ModelParams;
use crate::polygon::{Color, PairedArc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Plus,
    Minus,
}

impl Tag {
    pub fn flip(self) -> Self {
        match self {
            Tag::Plus => Tag::Minus,
            Tag::Minus => Tag::Plus,
        }
    }
}

/// `Plain { i, j }` is the arc from `i` clockwise to `j`; `(i, j)` and
/// `(j, i)` are different arcs. `Loop` is the tagged arc at the puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TaggedArc {
    Plain { i: u32, j: u32 },
    Loop { i: u32, tag: Tag },
}

impl TaggedArc {
    /// A plain arc, or `None` when `j ∈ {i, i+1}`.
    pub fn plain(params: &ModelParams, i: i64, j: i64) -> Option<Self> {
        let (i, j) = (params.punctured_vertex(i), params.punctured_vertex(j));
        (j != i && j != params.punctured_vertex(i as i64 + 1)).then_some(TaggedArc::Plain { i, j })
    }

    pub fn tagged_loop(params: &ModelParams, i: i64, tag: Tag) -> Self {
        TaggedArc::Loop {
            i: params.punctured_vertex(i),
            tag,
        }
    }
}

impl fmt::Display for TaggedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TaggedArc::Plain { i, j } => write!(f, "D{i},{j}"),
            TaggedArc::Loop { i, tag: Tag::Plus } => write!(f, "D{i},{i}+"),
            TaggedArc::Loop { i, tag: Tag::Minus } => write!(f, "D{i},{i}-"),
        }
    }
}

pub fn is_tagged_m_arc(params: &ModelParams, t: &TaggedArc) -> bool {
    match *t {
        TaggedArc::Plain { i, j } if i < j => params.is_one_mod_m(j as i64 - i as i64),
        TaggedArc::Plain { i, j } => {
            params.is_one_mod_m(j as i64 + params.big_n() as i64 - i as i64)
        }
        TaggedArc::Loop { .. } => true,
    }
}

/// All tagged m-arcs: plain arcs lexicographically by `(i, j)`, then loops by
/// `(i, tag)` with `+` first.
pub fn enumerate_tagged_m_arcs(params: &ModelParams) -> Vec<TaggedArc> {
    let big_n = params.big_n();
    let mut out = Vec::new();
    for i in 1..=big_n {
        for j in 1..=big_n {
            if let Some(t) = TaggedArc::plain(params, i as i64, j as i64) {
                if t == (TaggedArc::Plain { i, j }) && is_tagged_m_arc(params, &t) {
                    out.push(t);
                }
            }
        }
    }
    for i in 1..=big_n {
        out.push(TaggedArc::Loop { i, tag: Tag::Plus });
        out.push(TaggedArc::Loop { i, tag: Tag::Minus });
    }
    out
}

pub fn tau_tagged(params: &ModelParams, t: &TaggedArc) -> TaggedArc {
    let m = params.m() as i64;
    match *t {
        TaggedArc::Plain { i, j } => TaggedArc::Plain {
            i: params.punctured_vertex(i as i64 - m),
            j: params.punctured_vertex(j as i64 - m),
        },
        TaggedArc::Loop { i, tag } => TaggedArc::Loop {
            i: params.punctured_vertex(i as i64 - m),
            tag: if params.is_odd() { tag.flip() } else { tag },
        },
    }
}

/// Targets of the four forms of m-move:
/// (1) `D_ij → D_ik` with `k - j = m`;
/// (2) `D_ij → D_kj` with `k - i = m`;
/// (3) `D_ij → D_ii^±` (both tags) when `i - j = m`;
/// (4) `D_ii^± → D_ji` with `j - i = m`.
pub fn m_move_successors_tagged(params: &ModelParams, t: &TaggedArc) -> Vec<TaggedArc> {
    let m = params.m() as i64;
    let mut out = Vec::new();
    match *t {
        TaggedArc::Plain { i, j } => {
            let (i, j) = (i as i64, j as i64);
            out.extend(TaggedArc::plain(params, i, j + m));
            out.extend(TaggedArc::plain(params, i + m, j));
            if params.punctured_vertex(i - j) == params.punctured_vertex(m) {
                out.push(TaggedArc::tagged_loop(params, i, Tag::Plus));
                out.push(TaggedArc::tagged_loop(params, i, Tag::Minus));
            }
        }
        TaggedArc::Loop { i, .. } => {
            out.extend(TaggedArc::plain(params, i as i64 + m, i as i64));
        }
    }
    out.retain(|s| is_tagged_m_arc(params, s));
    out.sort();
    out.dedup();
    out
}

/// The bijection from tagged m-arcs onto paired m-arcs of the 2N-gon.
pub fn phi(params: &ModelParams, t: &TaggedArc) -> PairedArc {
    let big_n = params.big_n() as i64;
    match *t {
        TaggedArc::Plain { i, j } if i < j => PairedArc::chord(params, i as i64, j as i64),
        TaggedArc::Plain { i, j } => PairedArc::chord(params, i as i64, j as i64 + big_n),
        TaggedArc::Loop { i, tag: Tag::Plus } => Ok(PairedArc::diameter(params, i as i64, Color::Red)),
        TaggedArc::Loop { i, tag: Tag::Minus } => {
            Ok(PairedArc::diameter(params, i as i64, Color::Green))
        }
    }
    .expect("a plain tagged arc has a gap strictly between 1 and N")
}
