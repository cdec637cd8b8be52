//! 2-edge-colored simple graphs and alternating-cycle primitives.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// One of the two edge colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeColor {
    Red,
    Blue,
}

impl EdgeColor {
    /// The opposite color; an involution.
    pub fn other(self) -> EdgeColor {
        match self {
            EdgeColor::Red => EdgeColor::Blue,
            EdgeColor::Blue => EdgeColor::Red,
        }
    }
}

impl fmt::Display for EdgeColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeColor::Red => write!(f, "red"),
            EdgeColor::Blue => write!(f, "blue"),
        }
    }
}

/// Dense vertex identifier in `[0, |V|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at {0}")]
    LoopEdge(VertexId),
    #[error("vertex {0} out of range (|V| = {1})")]
    VertexOutOfRange(VertexId, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("vertex {0} does not lie on the cycle")]
    VertexNotOnCycle(VertexId),
    #[error("sequence is not an alternating cycle")]
    NotAlternating,
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple graph with a total red/blue coloring on its edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    vertex_count: usize,
    edges: BTreeMap<(VertexId, VertexId), EdgeColor>,
}

impl ColoredGraph {
    pub fn new(vertex_count: usize) -> ColoredGraph {
        ColoredGraph {
            vertex_count,
            edges: BTreeMap::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, color: EdgeColor) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        for w in [u, v] {
            if w.index() >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange(w, self.vertex_count));
            }
        }
        let key = ordered(u, v);
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.edges.insert(key, color);
        Ok(())
    }

    pub fn color_of(&self, u: VertexId, v: VertexId) -> Option<EdgeColor> {
        if u == v {
            return None;
        }
        self.edges.get(&ordered(u, v)).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.color_of(u, v).is_some()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeColor)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertex_count as u32).map(VertexId)
    }

    /// Neighbors of `v` together with the incident edge colors.
    pub fn neighbors(&self, v: VertexId) -> Vec<(VertexId, EdgeColor)> {
        self.vertices()
            .filter_map(|u| self.color_of(v, u).map(|c| (u, c)))
            .collect()
    }
}

/// Returns true iff `seq` describes an alternating cycle of `g`:
/// distinct vertices, every consecutive pair (including the closing one)
/// an edge of `g`, and consecutive edge colors always different.
/// Alternation around a closed cycle forces even length; length >= 4.
pub fn is_alternating_cycle(g: &ColoredGraph, seq: &[VertexId]) -> bool {
    cycle_colors(g, seq).is_some()
}

fn cycle_colors(g: &ColoredGraph, seq: &[VertexId]) -> Option<Vec<EdgeColor>> {
    let len = seq.len();
    if len < 4 || len % 2 != 0 {
        return None;
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in seq {
        if v.index() >= g.vertex_count() || seen[v.index()] {
            return None;
        }
        seen[v.index()] = true;
    }
    let mut colors = Vec::with_capacity(len);
    for i in 0..len {
        colors.push(g.color_of(seq[i], seq[(i + 1) % len])?);
    }
    for i in 0..len {
        if colors[i] == colors[(i + 1) % len] {
            return None;
        }
    }
    Some(colors)
}

/// A verified alternating cycle: a cyclic vertex sequence whose edges exist
/// in the host graph and alternate in color. Stored with an explicit
/// orientation and start; equality of the underlying cycle is decided by
/// [`CycleSeq::canonical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSeq {
    vertices: Vec<VertexId>,
    colors: Vec<EdgeColor>,
}

impl CycleSeq {
    /// Verifies `vertices` against `g` and freezes the edge colors.
    pub fn from_vertices(g: &ColoredGraph, vertices: Vec<VertexId>) -> Result<CycleSeq, CycleError> {
        let colors = cycle_colors(g, &vertices).ok_or(CycleError::NotAlternating)?;
        Ok(CycleSeq { vertices, colors })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Color of the edge from position `i` to position `i+1` (cyclic).
    pub fn edge_color(&self, i: usize) -> EdgeColor {
        self.colors[i % self.len()]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.position(v).is_some()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    /// The vertex joined to `v` by the `col`-colored cycle edge
    /// (`v^r` / `v^b` of the cycle).
    pub fn neighbor(&self, v: VertexId, col: EdgeColor) -> Result<VertexId, CycleError> {
        let i = self.position(v).ok_or(CycleError::VertexNotOnCycle(v))?;
        let len = self.len();
        // colors[i] joins i -> i+1; colors[i-1] joins i-1 -> i.
        if self.colors[i] == col {
            Ok(self.vertices[(i + 1) % len])
        } else {
            debug_assert_eq!(self.colors[(i + len - 1) % len], col);
            Ok(self.vertices[(i + len - 1) % len])
        }
    }

    /// True iff the stored positions of `u` and `v` have the same parity.
    pub fn congruent_mod2(&self, u: VertexId, v: VertexId) -> Result<bool, CycleError> {
        let i = self.position(u).ok_or(CycleError::VertexNotOnCycle(u))?;
        let j = self.position(v).ok_or(CycleError::VertexNotOnCycle(v))?;
        Ok(i % 2 == j % 2)
    }

    /// Canonical key: the lexicographically smallest rotation over both
    /// orientations. Cycles equal up to rotation/reflection share a key.
    pub fn canonical(&self) -> Vec<VertexId> {
        canonical_cycle(&self.vertices)
    }
}

/// Canonical form of a cyclic vertex sequence under rotation and reflection.
pub fn canonical_cycle(seq: &[VertexId]) -> Vec<VertexId> {
    let len = seq.len();
    assert!(len > 0);
    let start = seq
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let fwd: Vec<VertexId> = (0..len).map(|k| seq[(start + k) % len]).collect();
    let rev: Vec<VertexId> = (0..len).map(|k| seq[(start + len - k) % len]).collect();
    if fwd <= rev {
        fwd
    } else {
        rev
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeColor::{Blue, Red};

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn four_cycle(colors: [EdgeColor; 4]) -> ColoredGraph {
        let mut g = ColoredGraph::new(4);
        for i in 0..4u32 {
            g.add_edge(v(i), v((i + 1) % 4), colors[i as usize]).unwrap();
        }
        g
    }

    #[test]
    fn alternating_four_cycle() {
        let g = four_cycle([Red, Blue, Red, Blue]);
        assert!(is_alternating_cycle(&g, &[v(0), v(1), v(2), v(3)]));
    }

    #[test]
    fn two_consecutive_reds_rejected() {
        let g = four_cycle([Red, Red, Blue, Blue]);
        assert!(!is_alternating_cycle(&g, &[v(0), v(1), v(2), v(3)]));
    }

    #[test]
    fn odd_sequences_rejected() {
        let mut g = ColoredGraph::new(3);
        g.add_edge(v(0), v(1), Red).unwrap();
        g.add_edge(v(1), v(2), Blue).unwrap();
        g.add_edge(v(2), v(0), Red).unwrap();
        assert!(!is_alternating_cycle(&g, &[v(0), v(1), v(2)]));
    }

    #[test]
    fn missing_edge_and_repeats_rejected() {
        let g = four_cycle([Red, Blue, Red, Blue]);
        assert!(!is_alternating_cycle(&g, &[v(0), v(1), v(2), v(2)]));
        assert!(!is_alternating_cycle(&g, &[v(0), v(2), v(1), v(3)]));
    }

    #[test]
    fn neighbor_picks_color_side() {
        let g = four_cycle([Red, Blue, Red, Blue]);
        let c = CycleSeq::from_vertices(&g, vec![v(0), v(1), v(2), v(3)]).unwrap();
        assert_eq!(c.neighbor(v(0), Red), Ok(v(1)));
        assert_eq!(c.neighbor(v(0), Blue), Ok(v(3)));
        assert_eq!(c.neighbor(v(2), Red), Ok(v(3)));
        assert!(matches!(
            CycleSeq::neighbor(&c, VertexId(9), Red),
            Err(CycleError::VertexNotOnCycle(_))
        ));
    }

    #[test]
    fn neighbors_are_predecessor_and_successor() {
        let g = four_cycle([Red, Blue, Red, Blue]);
        let c = CycleSeq::from_vertices(&g, vec![v(0), v(1), v(2), v(3)]).unwrap();
        for i in 0..4 {
            let vv = c.vertices()[i];
            let r = c.neighbor(vv, Red).unwrap();
            let b = c.neighbor(vv, Blue).unwrap();
            assert_ne!(r, b);
            let prev = c.vertices()[(i + 3) % 4];
            let next = c.vertices()[(i + 1) % 4];
            let mut got = [r, b];
            let mut want = [prev, next];
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn congruence_classes() {
        let g = four_cycle([Red, Blue, Red, Blue]);
        let c = CycleSeq::from_vertices(&g, vec![v(0), v(1), v(2), v(3)]).unwrap();
        assert_eq!(c.congruent_mod2(v(0), v(2)), Ok(true));
        assert_eq!(c.congruent_mod2(v(0), v(1)), Ok(false));
        assert_eq!(c.congruent_mod2(v(1), v(3)), Ok(true));
    }

    #[test]
    fn canonical_is_rotation_and_reflection_invariant() {
        let a = [v(2), v(0), v(3), v(1)];
        let rotated = [v(3), v(1), v(2), v(0)];
        let reflected = [v(1), v(3), v(0), v(2)];
        assert_eq!(canonical_cycle(&a), canonical_cycle(&rotated));
        assert_eq!(canonical_cycle(&a), canonical_cycle(&reflected));
    }
}
