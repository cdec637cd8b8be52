//! Exhaustive ground truth for small graphs: enumerate every alternating
//! cycle by pruned backtracking and decide vertex alternating-pancyclicity.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{canonical_cycle, ColoredGraph, CycleSeq, EdgeColor, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_vertices: usize,
    pub max_cycles: Option<usize>,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_vertices: 14, max_cycles: None }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {0} vertices, over the enumeration budget of {1}")]
    BudgetExceeded(usize, usize),
    #[error("graph has odd order {0}")]
    OddOrder(usize),
}

struct Enumerator<'a> {
    g: &'a ColoredGraph,
    in_path: Vec<bool>,
    path: Vec<VertexId>,
    first_color: EdgeColor,
    found: BTreeSet<Vec<VertexId>>,
    cap: Option<usize>,
    over_cap: bool,
}

impl Enumerator<'_> {
    /// Extends the path past `last`, whose incoming edge had color
    /// `last_color`. Only vertices above the root may appear inside the
    /// path, so each cycle is found exactly at its minimal vertex.
    fn extend(&mut self, last: VertexId, last_color: EdgeColor) {
        if self.over_cap {
            return;
        }
        let root = self.path[0];
        for (next, color) in self.g.neighbors(last) {
            if color == last_color {
                continue;
            }
            if next == root {
                if self.path.len() >= 4
                    && self.path.len() % 2 == 0
                    && color != self.first_color
                {
                    self.found.insert(canonical_cycle(&self.path));
                    if self.cap.is_some_and(|cap| self.found.len() > cap) {
                        self.over_cap = true;
                        return;
                    }
                }
                continue;
            }
            if next < root || self.in_path[next.index()] {
                continue;
            }
            self.in_path[next.index()] = true;
            self.path.push(next);
            self.extend(next, color);
            self.path.pop();
            self.in_path[next.index()] = false;
        }
    }
}

/// Every alternating cycle of `g`, as canonical vertex sequences.
pub fn enumerate_alternating_cycles(
    g: &ColoredGraph,
    budget: &EnumerationBudget,
) -> Result<BTreeSet<Vec<VertexId>>, OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::BudgetExceeded(n, budget.max_vertices));
    }
    let mut en = Enumerator {
        g,
        in_path: vec![false; n],
        path: Vec::new(),
        first_color: EdgeColor::Red,
        found: BTreeSet::new(),
        cap: budget.max_cycles,
        over_cap: false,
    };
    for root in g.vertices() {
        en.in_path[root.index()] = true;
        en.path.push(root);
        for (second, color) in g.neighbors(root) {
            if second < root {
                continue;
            }
            en.first_color = color;
            en.in_path[second.index()] = true;
            en.path.push(second);
            en.extend(second, color);
            en.path.pop();
            en.in_path[second.index()] = false;
        }
        en.path.pop();
        en.in_path[root.index()] = false;
        if en.over_cap {
            return Err(OracleError::BudgetExceeded(
                en.found.len(),
                budget.max_cycles.unwrap_or(0),
            ));
        }
    }
    Ok(en.found)
}

/// Outcome of [`brute_vertex_pancyclic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PancyclicReport {
    pub pancyclic: bool,
    /// `(vertex, length)` pairs with no alternating cycle.
    pub missing: Vec<(VertexId, usize)>,
}

/// Decides vertex alternating-pancyclicity by full enumeration: every
/// vertex must lie on an alternating cycle of every even length in
/// `[4, |V|]`.
pub fn brute_vertex_pancyclic(
    g: &ColoredGraph,
    budget: &EnumerationBudget,
) -> Result<PancyclicReport, OracleError> {
    let n = g.vertex_count();
    if n % 2 != 0 {
        return Err(OracleError::OddOrder(n));
    }
    let cycles = enumerate_alternating_cycles(g, budget)?;
    let mut covered = BTreeSet::new();
    for cycle in &cycles {
        for &v in cycle {
            covered.insert((v, cycle.len()));
        }
    }
    let mut missing = Vec::new();
    for v in g.vertices() {
        for len in (4..=n).step_by(2) {
            if !covered.contains(&(v, len)) {
                missing.push((v, len));
            }
        }
    }
    Ok(PancyclicReport { pancyclic: missing.is_empty(), missing })
}

fn ham_dfs(
    g: &ColoredGraph,
    in_path: &mut Vec<bool>,
    path: &mut Vec<VertexId>,
    first_color: EdgeColor,
    last_color: EdgeColor,
) -> bool {
    let last = *path.last().expect("path nonempty");
    if path.len() == g.vertex_count() {
        return g
            .color_of(last, path[0])
            .is_some_and(|c| c != last_color && c != first_color);
    }
    for (next, color) in g.neighbors(last) {
        if color == last_color || in_path[next.index()] {
            continue;
        }
        in_path[next.index()] = true;
        path.push(next);
        if ham_dfs(g, in_path, path, first_color, color) {
            return true;
        }
        path.pop();
        in_path[next.index()] = false;
    }
    false
}

/// Some Hamiltonian alternating cycle of `g`, if one exists.
pub fn find_hamiltonian_alternating(
    g: &ColoredGraph,
    budget: &EnumerationBudget,
) -> Result<Option<CycleSeq>, OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::BudgetExceeded(n, budget.max_vertices));
    }
    if n < 4 || n % 2 != 0 {
        return Ok(None);
    }
    let root = VertexId(0);
    let mut in_path = vec![false; n];
    let mut path = vec![root];
    in_path[0] = true;
    for (second, color) in g.neighbors(root) {
        in_path[second.index()] = true;
        path.push(second);
        if ham_dfs(g, &mut in_path, &mut path, color, color) {
            let seq = CycleSeq::from_vertices(g, path).expect("search checked alternation");
            return Ok(Some(seq));
        }
        path.pop();
        in_path[second.index()] = false;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cgs::fixtures::fix8;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn alt_cycle_graph(n: u32) -> ColoredGraph {
        let mut g = ColoredGraph::new(n as usize);
        for i in 0..n {
            let c = if i % 2 == 0 { EdgeColor::Red } else { EdgeColor::Blue };
            g.add_edge(v(i), v((i + 1) % n), c).unwrap();
        }
        g
    }

    #[test]
    fn single_alternating_4cycle() {
        let g = alt_cycle_graph(4);
        let cycles = enumerate_alternating_cycles(&g, &EnumerationBudget::default()).unwrap();
        assert_eq!(cycles.len(), 1);
        assert!(brute_vertex_pancyclic(&g, &EnumerationBudget::default()).unwrap().pancyclic);
        let ham = find_hamiltonian_alternating(&g, &EnumerationBudget::default()).unwrap();
        assert_eq!(canonical_cycle(ham.unwrap().vertices()), cycles.iter().next().unwrap().clone());
    }

    #[test]
    fn monochromatic_triangle_has_none() {
        let mut g = ColoredGraph::new(3);
        g.add_edge(v(0), v(1), EdgeColor::Red).unwrap();
        g.add_edge(v(1), v(2), EdgeColor::Red).unwrap();
        g.add_edge(v(2), v(0), EdgeColor::Red).unwrap();
        let cycles = enumerate_alternating_cycles(&g, &EnumerationBudget::default()).unwrap();
        assert!(cycles.is_empty());
    }

    #[test]
    fn monochromatic_4cycle_not_hamiltonian_alternating() {
        let mut g = ColoredGraph::new(4);
        for i in 0..4u32 {
            g.add_edge(v(i), v((i + 1) % 4), EdgeColor::Blue).unwrap();
        }
        assert_eq!(find_hamiltonian_alternating(&g, &EnumerationBudget::default()).unwrap(), None);
    }

    #[test]
    fn six_cycle_misses_length_four() {
        let g = alt_cycle_graph(6);
        let report = brute_vertex_pancyclic(&g, &EnumerationBudget::default()).unwrap();
        assert!(!report.pancyclic);
        assert_eq!(report.missing.len(), 6);
        assert!(report.missing.iter().all(|&(_, len)| len == 4));
    }

    #[test]
    fn disjoint_4cycles_count_two() {
        let mut g = ColoredGraph::new(8);
        for base in [0u32, 4] {
            for i in 0..4 {
                let c = if i % 2 == 0 { EdgeColor::Red } else { EdgeColor::Blue };
                g.add_edge(v(base + i), v(base + (i + 1) % 4), c).unwrap();
            }
        }
        let cycles = enumerate_alternating_cycles(&g, &EnumerationBudget::default()).unwrap();
        assert_eq!(cycles.len(), 2);
        assert_eq!(find_hamiltonian_alternating(&g, &EnumerationBudget::default()).unwrap(), None);
    }

    #[test]
    fn fix8_is_vertex_pancyclic() {
        let flat = fix8().flatten().clone();
        let report = brute_vertex_pancyclic(&flat, &EnumerationBudget::default()).unwrap();
        assert!(report.pancyclic, "missing: {:?}", report.missing);
        assert!(find_hamiltonian_alternating(&flat, &EnumerationBudget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let flat = fix8().flatten().clone();
        let a = enumerate_alternating_cycles(&flat, &EnumerationBudget::default()).unwrap();
        let b = enumerate_alternating_cycles(&flat, &EnumerationBudget::default()).unwrap();
        assert_eq!(a, b);
        for cycle in &a {
            let mut rev = cycle.clone();
            rev.reverse();
            assert_eq!(&canonical_cycle(&rev), cycle);
        }
    }

    #[test]
    fn budget_enforcement() {
        let g = ColoredGraph::new(20);
        let err = enumerate_alternating_cycles(&g, &EnumerationBudget::default()).unwrap_err();
        assert_eq!(err, OracleError::BudgetExceeded(20, 14));
        let g = ColoredGraph::new(5);
        assert_eq!(
            brute_vertex_pancyclic(&g, &EnumerationBudget::default()).unwrap_err(),
            OracleError::OddOrder(5)
        );
        let flat = fix8().flatten().clone();
        let tight = EnumerationBudget { max_vertices: 14, max_cycles: Some(1) };
        assert!(matches!(
            enumerate_alternating_cycles(&flat, &tight),
            Err(OracleError::BudgetExceeded(_, 1))
        ));
    }
}
