//! The unpunctured 2N-gon model.
//!
//! Vertices are labelled `1..=2N` clockwise. An indecomposable object is a
//! [`PairedArc`]: either the orbit of a non-diameter arc under the 180°
//! rotation, or one of the two coloured copies of a diameter.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
}

impl Color {
    pub fn flip(self) -> Self {
        match self {
            Color::Red => Color::Green,
            Color::Green => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Green => 'g',
        }
    }
}

/// A single arc of the 2N-gon as an unordered vertex pair.
///
/// Used where a specific representative matters, e.g. "does not cross the
/// arc (k+N, l+N)".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chord {
    pub x: u32,
    pub y: u32,
}

impl Chord {
    pub fn new(x: u32, y: u32) -> Self {
        Chord { x, y }
    }

    /// Strict interleaving of endpoints around the polygon.
    pub fn crosses(&self, other: &Chord) -> bool {
        let (p, q) = (self.x.min(self.y), self.x.max(self.y));
        let (r, s) = (other.x, other.y);
        if r == p || r == q || s == p || s == q {
            return false;
        }
        let inside = |v: u32| p < v && v < q;
        inside(r) != inside(s)
    }

    pub fn rotated(&self, params: &ModelParams) -> Chord {
        let big_n = params.big_n() as i64;
        Chord {
            x: params.vertex(self.x as i64 + big_n),
            y: params.vertex(self.y as i64 + big_n),
        }
    }

    pub fn has_endpoint(&self, v: u32) -> bool {
        self.x == v || self.y == v
    }
}

/// An indecomposable object of the model: a rotation orbit of a
/// non-diameter arc, or a coloured diameter.
///
/// The derived ordering (non-diameters lexicographically, then diameters by
/// base vertex with red before green) is the permanent index order used by
/// [`ArcUniverse`] and by every bit-vector set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum PairedArc {
    /// Canonical representative `(a, b)` of the orbit: `a < b`,
    /// `2 <= b - a <= N - 1`, lexicographically least.
    #[serde(rename = "arc")]
    NonDiameter { a: u32, b: u32 },
    /// Diameter `(i, i + N)` with `1 <= i <= N`.
    #[serde(rename = "diameter")]
    Diameter { i: u32, color: Color },
}

impl PairedArc {
    /// The orbit of the arc `{x, y}`. Labels may be any integers; they are
    /// reduced modulo 2N. Opposite endpoints are rejected because a diameter
    /// needs a colour.
    pub fn chord(params: &ModelParams, x: i64, y: i64) -> Result<Self> {
        let (x, y) = (params.vertex(x), params.vertex(y));
        let gap = params.steps(x, y);
        let len = params.vertex_count();
        if gap == 0 || gap == 1 || gap == len - 1 {
            return Err(Error::InvalidParameters(format!(
                "({x},{y}) is not an arc: endpoints must be distinct and non-neighbouring"
            )));
        }
        if gap == params.big_n() {
            return Err(Error::InvalidParameters(format!(
                "({x},{y}) is a diameter and needs a colour"
            )));
        }
        Ok(canonical_chord(params, Chord::new(x, y)))
    }

    /// The diameter through vertex `x` (and `x + N`).
    pub fn diameter(params: &ModelParams, x: i64, color: Color) -> Self {
        PairedArc::Diameter {
            i: params.punctured_vertex(x),
            color,
        }
    }

    /// Whether `x` and `y` are opposite; otherwise the orbit of `{x, y}`.
    pub fn from_pair(params: &ModelParams, x: i64, y: i64, color: Color) -> Result<Self> {
        let gap = params.steps(params.vertex(x), params.vertex(y));
        if gap == params.big_n() {
            Ok(PairedArc::diameter(params, x, color))
        } else {
            PairedArc::chord(params, x, y)
        }
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self, PairedArc::Diameter { .. })
    }

    /// Checks that the value is in canonical form for `params`.
    pub fn is_canonical(&self, params: &ModelParams) -> bool {
        match *self {
            PairedArc::NonDiameter { a, b } => {
                a >= 1
                    && b <= params.vertex_count()
                    && a < b
                    && b - a >= 2
                    && b - a < params.big_n()
                    && canonical_chord(params, Chord::new(a, b)) == *self
            }
            PairedArc::Diameter { i, .. } => (1..=params.big_n()).contains(&i),
        }
    }

    /// The arcs of the orbit: two for a non-diameter, one for a diameter.
    /// Each chord is oriented so that `y` is reached from `x` clockwise
    /// within at most N steps.
    pub fn representatives(&self, params: &ModelParams) -> Vec<Chord> {
        match *self {
            PairedArc::NonDiameter { a, b } => {
                let c = Chord::new(a, b);
                vec![c, c.rotated(params)]
            }
            PairedArc::Diameter { i, .. } => vec![Chord::new(i, i + params.big_n())],
        }
    }

    pub fn color(&self) -> Option<Color> {
        match *self {
            PairedArc::Diameter { color, .. } => Some(color),
            PairedArc::NonDiameter { .. } => None,
        }
    }
}

impl fmt::Display for PairedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PairedArc::NonDiameter { a, b } => write!(f, "{a}-{b}"),
            PairedArc::Diameter { i, color } => write!(f, "d{i}{}", color.letter()),
        }
    }
}

fn canonical_chord(params: &ModelParams, c: Chord) -> PairedArc {
    let big_n = params.big_n();
    [c, c.rotated(params)]
        .into_iter()
        .filter_map(|c| {
            let (p, q) = (c.x.min(c.y), c.x.max(c.y));
            (q - p < big_n).then_some((p, q))
        })
        .min()
        .map(|(a, b)| PairedArc::NonDiameter { a, b })
        .expect("one representative of every non-diameter orbit has a short forward gap")
}

/// `true` iff the arc is an m-arc: a diameter, or a non-diameter whose
/// endpoint gap is `1 mod m` (in either direction, since `2N ≡ 2 mod m`).
pub fn is_m_arc(params: &ModelParams, arc: &PairedArc) -> bool {
    match *arc {
        PairedArc::NonDiameter { a, b } => params.is_one_mod_m(b as i64 - a as i64),
        PairedArc::Diameter { .. } => true,
    }
}

/// Whether the vertex pair `{x, y}` spans an m-arc. Opposite vertices always
/// do (as a diameter of either colour); neighbours and equal vertices never.
pub fn pair_is_m_arc(params: &ModelParams, x: u32, y: u32) -> bool {
    let gap = params.steps(x, y);
    let len = params.vertex_count();
    if gap <= 1 || gap == len - 1 {
        return false;
    }
    gap == params.big_n() || params.is_one_mod_m(gap as i64)
}

/// All m-arcs in index order. Has exactly `n * N` entries.
pub fn enumerate_m_arcs(params: &ModelParams) -> Vec<PairedArc> {
    let big_n = params.big_n();
    let len = params.vertex_count();
    let mut arcs = Vec::with_capacity((params.n() * big_n) as usize);
    for a in 1..=len {
        for gap in 2..big_n {
            let b = a + gap;
            if b > len || !params.is_one_mod_m(gap as i64) {
                continue;
            }
            let arc = PairedArc::NonDiameter { a, b };
            if canonical_chord(params, Chord::new(a, b)) == arc {
                arcs.push(arc);
            }
        }
    }
    for i in 1..=big_n {
        for color in [Color::Red, Color::Green] {
            arcs.push(PairedArc::Diameter { i, color });
        }
    }
    arcs
}

/// The translation `τ_m`: rotate counterclockwise by m vertices, swapping the
/// colour of a diameter when m is odd.
pub fn tau(params: &ModelParams, arc: &PairedArc) -> PairedArc {
    let m = params.m() as i64;
    match *arc {
        PairedArc::NonDiameter { a, b } => canonical_chord(
            params,
            Chord::new(params.vertex(a as i64 - m), params.vertex(b as i64 - m)),
        ),
        PairedArc::Diameter { i, color } => {
            let color = if params.is_odd() { color.flip() } else { color };
            PairedArc::diameter(params, i as i64 - m, color)
        }
    }
}

/// Targets of the clockwise m-moves starting at `arc`.
///
/// For the canonical representative `(a, b)` with clockwise gap `g`, one
/// endpoint advances clockwise by m: `(a, b+m)` (or both diameters at `a`
/// when `g + m = N`) and `(a+m, b)` when the result is still an arc. A
/// diameter `(i, i+N)` moves to `(i+m, i+N)`.
pub fn m_move_successors(params: &ModelParams, arc: &PairedArc) -> Vec<PairedArc> {
    let m = params.m();
    let big_n = params.big_n();
    let mut out = Vec::new();
    match *arc {
        PairedArc::NonDiameter { a, b } => {
            let gap = b - a;
            if gap + m == big_n {
                out.push(PairedArc::diameter(params, a as i64, Color::Red));
                out.push(PairedArc::diameter(params, a as i64, Color::Green));
            } else if gap + m < big_n {
                out.push(canonical_chord(params, Chord::new(a, params.vertex((b + m) as i64))));
            }
            if gap >= m + 2 {
                out.push(canonical_chord(params, Chord::new(a + m, b)));
            }
        }
        PairedArc::Diameter { i, .. } => {
            out.push(canonical_chord(
                params,
                Chord::new(params.vertex((i + m) as i64), i + big_n),
            ));
        }
    }
    out.retain(|s| is_m_arc(params, s));
    out.sort();
    out
}

/// The m-arcs of a model together with their permanent indices.
#[derive(Debug, Clone)]
pub struct ArcUniverse {
    params: ModelParams,
    arcs: Vec<PairedArc>,
    index: HashMap<PairedArc, usize>,
}

impl ArcUniverse {
    pub fn new(params: ModelParams) -> Self {
        let arcs = enumerate_m_arcs(&params);
        let index = arcs.iter().enumerate().map(|(k, a)| (*a, k)).collect();
        ArcUniverse { params, arcs, index }
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[PairedArc] {
        &self.arcs
    }

    pub fn arc(&self, k: usize) -> PairedArc {
        self.arcs[k]
    }

    pub fn index_of(&self, arc: &PairedArc) -> Option<usize> {
        self.index.get(arc).copied()
    }

    pub fn require_index(&self, arc: &PairedArc) -> Result<usize> {
        self.index_of(arc).ok_or(Error::NotAnMArc(*arc))
    }
}
