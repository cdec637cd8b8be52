//! Colored generalized sums: summand structure, validation, induced
//! sub-sums, and seeded instance generators.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{ColoredGraph, CycleSeq, EdgeColor, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CgsError {
    #[error("a colored generalized sum needs at least two summands")]
    TooFewSummands,
    #[error("summands {0} and {1} share vertex {2}")]
    OverlappingSummands(usize, usize, VertexId),
    #[error("summand vertex ids are not dense in [0, |V|)")]
    SparseVertexIds,
    #[error("edge {0}-{1} of summand {2} leaves the summand")]
    ForeignEdge(VertexId, VertexId, usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("summand {0} has no Hamiltonian alternating cycle as described")]
    NonAlternatingHamCycle(usize),
    #[error("missing exterior edge {0}-{1}")]
    MissingExteriorEdge(VertexId, VertexId),
    #[error("exterior edge {0}-{1} joins vertices of the same summand")]
    ExteriorInsideSummand(VertexId, VertexId),
    #[error("summand index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("summand sizes must be even and at least 4 (got {0})")]
    BadSize(usize),
    #[error("generator exhausted {0} retries without a non-singular instance")]
    RetriesExhausted(usize),
}

/// One summand: a 2-edge-colored graph together with a distinguished
/// Hamiltonian alternating cycle. Vertex ids are global; the graph may
/// carry chord edges beyond the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub vertices: Vec<VertexId>,
    pub edges: BTreeMap<(VertexId, VertexId), EdgeColor>,
    pub ham_cycle: Vec<VertexId>,
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Summand {
    /// Chordless summand on ids `start .. start+len`, cycle in id order,
    /// alternately colored with the first edge red.
    pub fn canonical_cycle(start: u32, len: usize) -> Summand {
        assert!(len >= 4 && len % 2 == 0);
        let vertices: Vec<VertexId> = (0..len as u32).map(|i| VertexId(start + i)).collect();
        let mut edges = BTreeMap::new();
        for i in 0..len {
            let u = vertices[i];
            let v = vertices[(i + 1) % len];
            let color = if i % 2 == 0 { EdgeColor::Red } else { EdgeColor::Blue };
            edges.insert(ordered(u, v), color);
        }
        Summand {
            ham_cycle: vertices.clone(),
            vertices,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// A validated colored generalized sum of `k >= 2` summands: summand
/// vertex sets are disjoint, every cross-summand pair carries exactly one
/// colored exterior edge, and every summand cycle is Hamiltonian
/// alternating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgsInstance {
    summands: Vec<Summand>,
    exterior: BTreeMap<(VertexId, VertexId), EdgeColor>,
    flat: ColoredGraph,
    ham_cycles: Vec<CycleSeq>,
    owner: Vec<usize>,
}

impl CgsInstance {
    pub fn new(
        summands: Vec<Summand>,
        exterior: BTreeMap<(VertexId, VertexId), EdgeColor>,
    ) -> Result<CgsInstance, CgsError> {
        if summands.len() < 2 {
            return Err(CgsError::TooFewSummands);
        }
        let total: usize = summands.iter().map(Summand::len).sum();
        let mut owner = vec![usize::MAX; total];
        for (i, s) in summands.iter().enumerate() {
            for &v in &s.vertices {
                if v.index() >= total {
                    return Err(CgsError::SparseVertexIds);
                }
                if owner[v.index()] != usize::MAX {
                    return Err(CgsError::OverlappingSummands(owner[v.index()], i, v));
                }
                owner[v.index()] = i;
            }
        }
        debug_assert!(owner.iter().all(|&o| o != usize::MAX));

        let mut flat = ColoredGraph::new(total);
        for (i, s) in summands.iter().enumerate() {
            for (&(u, v), &c) in &s.edges {
                if owner[u.index()] != i || owner[v.index()] != i {
                    return Err(CgsError::ForeignEdge(u, v, i));
                }
                flat.add_edge(u, v, c).map_err(|_| CgsError::DuplicateEdge(u, v))?;
            }
        }
        for (&(u, v), &c) in &exterior {
            if owner[u.index()] == owner[v.index()] {
                return Err(CgsError::ExteriorInsideSummand(u, v));
            }
            flat.add_edge(u, v, c).map_err(|_| CgsError::DuplicateEdge(u, v))?;
        }
        // Totality of the exterior coloring.
        for u in 0..total as u32 {
            for v in (u + 1)..total as u32 {
                let (u, v) = (VertexId(u), VertexId(v));
                if owner[u.index()] != owner[v.index()] && !exterior.contains_key(&ordered(u, v)) {
                    return Err(CgsError::MissingExteriorEdge(u, v));
                }
            }
        }

        let mut ham_cycles = Vec::with_capacity(summands.len());
        for (i, s) in summands.iter().enumerate() {
            if s.ham_cycle.len() != s.len() {
                return Err(CgsError::NonAlternatingHamCycle(i));
            }
            let mut sorted = s.ham_cycle.clone();
            sorted.sort();
            let mut verts = s.vertices.clone();
            verts.sort();
            if sorted != verts {
                return Err(CgsError::NonAlternatingHamCycle(i));
            }
            // Cycle edges must come from the summand's own edge set.
            for k in 0..s.ham_cycle.len() {
                let u = s.ham_cycle[k];
                let v = s.ham_cycle[(k + 1) % s.ham_cycle.len()];
                if !s.edges.contains_key(&ordered(u, v)) {
                    return Err(CgsError::NonAlternatingHamCycle(i));
                }
            }
            let cycle = CycleSeq::from_vertices(&flat, s.ham_cycle.clone())
                .map_err(|_| CgsError::NonAlternatingHamCycle(i))?;
            ham_cycles.push(cycle);
        }

        Ok(CgsInstance {
            summands,
            exterior,
            flat,
            ham_cycles,
            owner,
        })
    }

    pub fn summand_count(&self) -> usize {
        self.summands.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.flat.vertex_count()
    }

    pub fn summand(&self, i: usize) -> &Summand {
        &self.summands[i]
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// The summand's Hamiltonian alternating cycle, verified in the
    /// flattened graph.
    pub fn ham_cycle(&self, i: usize) -> &CycleSeq {
        &self.ham_cycles[i]
    }

    /// Summand index owning vertex `v`.
    pub fn owner(&self, v: VertexId) -> usize {
        self.owner[v.index()]
    }

    pub fn flatten(&self) -> &ColoredGraph {
        &self.flat
    }

    pub fn exterior(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeColor)> + '_ {
        self.exterior.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn exterior_count(&self) -> usize {
        self.exterior.len()
    }

    pub fn exterior_color(&self, u: VertexId, v: VertexId) -> Option<EdgeColor> {
        self.exterior.get(&ordered(u, v)).copied()
    }

    pub fn is_exterior(&self, u: VertexId, v: VertexId) -> bool {
        self.exterior.contains_key(&ordered(u, v))
    }

    /// The sub-sum induced by the summand set `indices`, with vertex ids
    /// renumbered densely (summands kept in ascending index order).
    pub fn induced_subsum(&self, indices: &[usize]) -> Result<CgsInstance, CgsError> {
        Ok(self.induced_subsum_with_map(indices)?.0)
    }

    /// As [`induced_subsum`](Self::induced_subsum); also returns the
    /// original id of each new vertex.
    pub fn induced_subsum_with_map(
        &self,
        indices: &[usize],
    ) -> Result<(CgsInstance, Vec<VertexId>), CgsError> {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort();
        idx.dedup();
        for &i in &idx {
            if i >= self.summands.len() {
                return Err(CgsError::IndexOutOfRange(i));
            }
        }
        if idx.len() < 2 {
            return Err(CgsError::TooFewSummands);
        }
        let mut old_of_new = Vec::new();
        let mut new_of_old: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for &i in &idx {
            for &v in &self.summands[i].vertices {
                new_of_old.insert(v, VertexId(old_of_new.len() as u32));
                old_of_new.push(v);
            }
        }
        let remap = |v: VertexId| new_of_old[&v];
        let summands: Vec<Summand> = idx
            .iter()
            .map(|&i| {
                let s = &self.summands[i];
                Summand {
                    vertices: s.vertices.iter().map(|&v| remap(v)).collect(),
                    edges: s
                        .edges
                        .iter()
                        .map(|(&(u, v), &c)| (ordered(remap(u), remap(v)), c))
                        .collect(),
                    ham_cycle: s.ham_cycle.iter().map(|&v| remap(v)).collect(),
                }
            })
            .collect();
        let exterior: BTreeMap<(VertexId, VertexId), EdgeColor> = self
            .exterior
            .iter()
            .filter(|((u, v), _)| new_of_old.contains_key(u) && new_of_old.contains_key(v))
            .map(|(&(u, v), &c)| (ordered(remap(u), remap(v)), c))
            .collect();
        Ok((CgsInstance::new(summands, exterior)?, old_of_new))
    }

    /// Content hash of the instance structure (summand cycles, interior
    /// edges, exterior coloring), hex-encoded.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.vertex_count() as u64).to_le_bytes());
        for s in &self.summands {
            h.update(b"S");
            for &v in &s.ham_cycle {
                h.update(v.0.to_le_bytes());
            }
            for (&(u, v), &c) in &s.edges {
                h.update(u.0.to_le_bytes());
                h.update(v.0.to_le_bytes());
                h.update([c as u8]);
            }
        }
        h.update(b"E");
        for (&(u, v), &c) in &self.exterior {
            h.update(u.0.to_le_bytes());
            h.update(v.0.to_le_bytes());
            h.update([c as u8]);
        }
        let digest = h.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn check_sizes(sizes: &[usize]) -> Result<(), CgsError> {
    if sizes.len() < 2 {
        return Err(CgsError::TooFewSummands);
    }
    for &s in sizes {
        if s < 4 || s % 2 != 0 {
            return Err(CgsError::BadSize(s));
        }
    }
    Ok(())
}

fn canonical_summands(sizes: &[usize]) -> Vec<Summand> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut start = 0u32;
    for &len in sizes {
        out.push(Summand::canonical_cycle(start, len));
        start += len as u32;
    }
    out
}

/// Position of the cycle neighbor of position `p` along the `c`-colored
/// cycle edge, on a canonical alternating cycle (edge `p -> p+1` red iff
/// `p` even).
fn canonical_step(p: usize, len: usize, c: EdgeColor) -> usize {
    if (p % 2 == 0) == (c == EdgeColor::Red) {
        (p + 1) % len
    } else {
        (p + len - 1) % len
    }
}

/// Uniform random exterior coloring; no structural guarantee.
pub fn generate_random(sizes: &[usize], seed: u64) -> Result<CgsInstance, CgsError> {
    check_sizes(sizes)?;
    let summands = canonical_summands(sizes);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut exterior = BTreeMap::new();
    for i in 0..summands.len() {
        for j in (i + 1)..summands.len() {
            for &u in &summands[i].vertices {
                for &v in &summands[j].vertices {
                    let c = if rng.gen::<bool>() { EdgeColor::Red } else { EdgeColor::Blue };
                    exterior.insert(ordered(u, v), c);
                }
            }
        }
    }
    CgsInstance::new(summands, exterior)
}

const GENERATOR_RETRIES: usize = 64;

/// Correct-by-construction generator for instances with no good pair
/// between any two summand cycles: exterior colors are assigned one
/// parallel-class orbit at a time, each orbit seeded randomly and then
/// propagated with the forced-opposite-color rule. Resamples (up to a
/// bounded retry count) until every ordered summand pair has a
/// non-singular vertex.
pub fn generate_no_good_pair(sizes: &[usize], seed: u64) -> Result<CgsInstance, CgsError> {
    check_sizes(sizes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GENERATOR_RETRIES {
        let summands = canonical_summands(sizes);
        let mut exterior = BTreeMap::new();
        for i in 0..summands.len() {
            for j in (i + 1)..summands.len() {
                propagate_pair(&summands[i], &summands[j], &mut rng, &mut exterior);
            }
        }
        let inst = CgsInstance::new(summands, exterior)?;
        if all_pairs_have_non_singular(&inst) {
            return Ok(inst);
        }
    }
    Err(CgsError::RetriesExhausted(GENERATOR_RETRIES))
}

fn propagate_pair(
    a: &Summand,
    b: &Summand,
    rng: &mut ChaCha8Rng,
    exterior: &mut BTreeMap<(VertexId, VertexId), EdgeColor>,
) {
    let (la, lb) = (a.len(), b.len());
    let mut colored: BTreeMap<(usize, usize), EdgeColor> = BTreeMap::new();
    for pa in 0..la {
        for pb in 0..lb {
            if colored.contains_key(&(pa, pb)) {
                continue;
            }
            let mut c = if rng.gen::<bool>() { EdgeColor::Red } else { EdgeColor::Blue };
            let (mut u, mut v) = (pa, pb);
            loop {
                match colored.get(&(u, v)) {
                    Some(&prev) => {
                        // Forward propagation is injective, so the first
                        // revisit must close the orbit consistently.
                        assert_eq!((u, v), (pa, pb));
                        assert_eq!(prev, c);
                        break;
                    }
                    None => {
                        colored.insert((u, v), c);
                        u = canonical_step(u, la, c);
                        v = canonical_step(v, lb, c);
                        c = c.other();
                    }
                }
            }
        }
    }
    for ((pa, pb), c) in colored {
        exterior.insert(ordered(a.vertices[pa], b.vertices[pb]), c);
    }
}

fn all_pairs_have_non_singular(inst: &CgsInstance) -> bool {
    let k = inst.summand_count();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let found = inst.summand(i).vertices.iter().any(|&v| {
                let mut saw_red = false;
                let mut saw_blue = false;
                for &w in &inst.summand(j).vertices {
                    match inst.exterior_color(v, w) {
                        Some(EdgeColor::Red) => saw_red = true,
                        Some(EdgeColor::Blue) => saw_blue = true,
                        None => {}
                    }
                }
                saw_red && saw_blue
            });
            if !found {
                return false;
            }
        }
    }
    true
}

pub mod fixtures {
    //! The three canonical 8-vertex fixtures used across the test suite:
    //! two alternating 4-cycles x0..x3 and y0..y3 with different exterior
    //! colorings.

    use super::*;

    fn x(i: u32) -> VertexId {
        VertexId(i)
    }

    fn y(j: u32) -> VertexId {
        VertexId(4 + j)
    }

    fn build(color: impl Fn(u32, u32) -> EdgeColor) -> CgsInstance {
        let summands = vec![Summand::canonical_cycle(0, 4), Summand::canonical_cycle(4, 4)];
        let mut exterior = BTreeMap::new();
        for i in 0..4 {
            for j in 0..4 {
                exterior.insert(ordered(x(i), y(j)), color(i, j));
            }
        }
        CgsInstance::new(summands, exterior).expect("fixture is valid")
    }

    /// No good pair, every vertex non-singular; the parallel partition has
    /// four classes of size four.
    pub fn fix8() -> CgsInstance {
        use EdgeColor::{Blue as B, Red as R};
        let table = [
            [R, B, B, B], // x0 -> y0..y3
            [R, B, R, R], // x1
            [B, B, R, B], // x2
            [R, R, R, B], // x3
        ];
        build(|i, j| table[i as usize][j as usize])
    }

    /// `fix8` with x1y1 flipped to red, creating the good pair
    /// (x0y0, x1y1) with the red witness cycle x0 x1 y1 y0.
    pub fn fix8gp() -> CgsInstance {
        use EdgeColor::{Blue as B, Red as R};
        let table = [
            [R, B, B, B],
            [R, R, R, R],
            [B, B, R, B],
            [R, R, R, B],
        ];
        build(|i, j| table[i as usize][j as usize])
    }

    /// No good pair, but every y-vertex is singular with respect to the
    /// first cycle: c(x_i y_j) is red iff j is even.
    pub fn fix8s() -> CgsInstance {
        build(|_, j| if j % 2 == 0 { EdgeColor::Red } else { EdgeColor::Blue })
    }
}
