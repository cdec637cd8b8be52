//! Structural predicates on colored generalized sums: good pairs, good
//! cycles, parallel classes, singular vertices, color degrees, and the
//! exterior-edge consistency report.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::cgs::CgsInstance;
use crate::graph::{canonical_cycle, EdgeColor, VertexId};

/// Two exterior edges whose endpoints induce a monochromatic 4-cycle
/// alternating between exterior and cycle edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPair {
    pub e1: (VertexId, VertexId),
    pub e2: (VertexId, VertexId),
    /// The monochromatic witness cycle v, v^c, w^c, w.
    pub witness: [VertexId; 4],
    pub color: EdgeColor,
}

impl GoodPair {
    fn dedup_key(&self) -> [(VertexId, VertexId); 2] {
        let sort = |(a, b): (VertexId, VertexId)| if a <= b { (a, b) } else { (b, a) };
        let mut edges = [sort(self.e1), sort(self.e2)];
        edges.sort();
        edges
    }
}

impl fmt::Display for GoodPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}-{}, {}-{}) with {} witness {} {} {} {}",
            self.e1.0, self.e1.1, self.e2.0, self.e2.1, self.color,
            self.witness[0], self.witness[1], self.witness[2], self.witness[3]
        )
    }
}

/// Monochromatic 4-cycle whose exterior edges are exactly one opposite
/// pair (the k-summand generalization of a good pair).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodCycle {
    pub vertices: [VertexId; 4],
    pub color: EdgeColor,
}

impl fmt::Display for GoodCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} cycle {} {} {} {}",
            self.color, self.vertices[0], self.vertices[1], self.vertices[2], self.vertices[3]
        )
    }
}

/// The forced orbit of an exterior edge in a good-pair-free pair of
/// summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelClass {
    /// `(u_i, v_i, color_i)` in propagation order; colors strictly
    /// alternate and `|edges| = lcm(2n, 2m)`.
    pub edges: Vec<(VertexId, VertexId, EdgeColor)>,
}

impl ParallelClass {
    /// Unordered edge set, for partition comparisons.
    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.edges
            .iter()
            .map(|&(u, v, _)| if u <= v { (u, v) } else { (v, u) })
            .collect()
    }
}

/// Red/blue exterior degree counts of one vertex toward one summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreePair {
    pub red: usize,
    pub blue: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("summand index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("good pair present: {0}")]
    GoodPairPresent(GoodPair),
    #[error("vertex {0} lies in the target summand")]
    VertexInTarget(VertexId),
    #[error("edge {0}-{1} is not an exterior edge of the requested pair")]
    NotAnExteriorEdge(VertexId, VertexId),
    #[error("operation requires exactly two summands")]
    NotTwoSummands,
}

/// Why an instance fails the vertex alternating-pancyclicity hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypothesisViolation {
    GoodPair(GoodPair),
    GoodCycle(GoodCycle),
    /// Every vertex of `summand` is singular with respect to `toward`;
    /// `witness` is one of them.
    SingularSide {
        summand: usize,
        toward: usize,
        witness: VertexId,
        color: EdgeColor,
    },
}

impl fmt::Display for HypothesisViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisViolation::GoodPair(gp) => write!(f, "good pair {gp}"),
            HypothesisViolation::GoodCycle(gc) => write!(f, "good {gc}"),
            HypothesisViolation::SingularSide { summand, toward, witness, color } => write!(
                f,
                "singular side: every vertex of summand {summand} is singular toward summand {toward} (witness {witness}, {color}-singular)"
            ),
        }
    }
}

fn check_pair_indices(inst: &CgsInstance, i: usize, j: usize) -> Result<(), AnalysisError> {
    for idx in [i, j] {
        if idx >= inst.summand_count() {
            return Err(AnalysisError::IndexOutOfRange(idx));
        }
    }
    if i == j {
        return Err(AnalysisError::IndexOutOfRange(j));
    }
    Ok(())
}

/// All good pairs between the Hamiltonian cycles of summands `i` and `j`.
pub fn find_good_pairs(
    inst: &CgsInstance,
    i: usize,
    j: usize,
) -> Result<Vec<GoodPair>, AnalysisError> {
    check_pair_indices(inst, i, j)?;
    let ci = inst.ham_cycle(i);
    let cj = inst.ham_cycle(j);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &u in &inst.summand(i).vertices {
        for &w in &inst.summand(j).vertices {
            let c = inst.exterior_color(u, w).expect("exterior coloring is total");
            let u2 = ci.neighbor(u, c).expect("vertex on its own cycle");
            let w2 = cj.neighbor(w, c).expect("vertex on its own cycle");
            if inst.exterior_color(u2, w2) == Some(c) {
                let gp = GoodPair {
                    e1: (u, w),
                    e2: (u2, w2),
                    witness: [u, u2, w2, w],
                    color: c,
                };
                if seen.insert(gp.dedup_key()) {
                    out.push(gp);
                }
            }
        }
    }
    Ok(out)
}

/// All monochromatic 4-cycles of the flattened graph whose edges are
/// alternately exterior and interior: one opposite pair in the exterior,
/// the other inside summands. These are exactly the 4-cycles a good pair
/// of summand cycle edges induces; monochromatic 4-cycles with three or
/// four exterior edges do not qualify.
pub fn find_good_cycles(inst: &CgsInstance) -> Vec<GoodCycle> {
    let flat = inst.flatten();
    let ext: Vec<(VertexId, VertexId, EdgeColor)> = inst.exterior().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..ext.len() {
        for b in (a + 1)..ext.len() {
            let (u1, v1, c1) = ext[a];
            let (u2, v2, c2) = ext[b];
            if c1 != c2 {
                continue;
            }
            if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                continue;
            }
            // Two ways of placing the edges as opposite sides.
            for (p, q) in [(u2, v2), (v2, u2)] {
                // Cycle u1 v1 p q with connecting edges v1-p and q-u1.
                let joins = [(v1, p), (q, u1)];
                let interior = joins.iter().all(|&(s, t)| {
                    flat.color_of(s, t) == Some(c1) && !inst.is_exterior(s, t)
                });
                if interior {
                    let cycle = [u1, v1, p, q];
                    if seen.insert(canonical_cycle(&cycle)) {
                        out.push(GoodCycle { vertices: cycle, color: c1 });
                    }
                }
            }
        }
    }
    out
}

fn orient_exterior_edge(
    inst: &CgsInstance,
    i: usize,
    j: usize,
    e: (VertexId, VertexId),
) -> Result<(VertexId, VertexId), AnalysisError> {
    let (a, b) = e;
    if inst.owner(a) == i && inst.owner(b) == j {
        Ok((a, b))
    } else if inst.owner(a) == j && inst.owner(b) == i {
        Ok((b, a))
    } else {
        Err(AnalysisError::NotAnExteriorEdge(a, b))
    }
}

fn parallel_class_between(
    inst: &CgsInstance,
    i: usize,
    j: usize,
    e: (VertexId, VertexId),
) -> Result<ParallelClass, AnalysisError> {
    check_pair_indices(inst, i, j)?;
    let (u0, v0) = orient_exterior_edge(inst, i, j, e)?;
    let ci = inst.ham_cycle(i);
    let cj = inst.ham_cycle(j);
    let mut edges = Vec::new();
    let (mut u, mut v) = (u0, v0);
    let mut c = inst.exterior_color(u, v).expect("exterior coloring is total");
    loop {
        edges.push((u, v, c));
        let u2 = ci.neighbor(u, c).expect("vertex on its own cycle");
        let v2 = cj.neighbor(v, c).expect("vertex on its own cycle");
        let actual = inst.exterior_color(u2, v2).expect("exterior coloring is total");
        if actual != c.other() {
            // Propagation demands the opposite color: same color means the
            // current edge and its partner form a good pair.
            return Err(AnalysisError::GoodPairPresent(GoodPair {
                e1: (u, v),
                e2: (u2, v2),
                witness: [u, u2, v2, v],
                color: c,
            }));
        }
        u = u2;
        v = v2;
        c = actual;
        if (u, v) == (u0, v0) {
            break;
        }
    }
    Ok(ParallelClass { edges })
}

/// The parallel class of an exterior edge of a two-summand instance.
pub fn parallel_class(
    inst: &CgsInstance,
    e: (VertexId, VertexId),
) -> Result<ParallelClass, AnalysisError> {
    if inst.summand_count() != 2 {
        return Err(AnalysisError::NotTwoSummands);
    }
    parallel_class_between(inst, 0, 1, e)
}

/// The partition of the exterior edges between summands `i` and `j` into
/// parallel classes.
pub fn parallel_partition(
    inst: &CgsInstance,
    i: usize,
    j: usize,
) -> Result<Vec<ParallelClass>, AnalysisError> {
    check_pair_indices(inst, i, j)?;
    let mut covered: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut out = Vec::new();
    for &u in &inst.summand(i).vertices {
        for &v in &inst.summand(j).vertices {
            let key = if u <= v { (u, v) } else { (v, u) };
            if covered.contains(&key) {
                continue;
            }
            let class = parallel_class_between(inst, i, j, (u, v))?;
            covered.extend(class.edge_set());
            out.push(class);
        }
    }
    Ok(out)
}

/// Vertices of summand `i` whose exterior edges toward summand `j` all
/// carry one color, tagged with that color.
pub fn singular_vertices(
    inst: &CgsInstance,
    i: usize,
    j: usize,
) -> Result<Vec<(VertexId, EdgeColor)>, AnalysisError> {
    check_pair_indices(inst, i, j)?;
    let mut out = Vec::new();
    for &v in &inst.summand(i).vertices {
        let d = color_degrees(inst, v, j)?;
        if d.red > 0 && d.blue == 0 {
            out.push((v, EdgeColor::Red));
        } else if d.blue > 0 && d.red == 0 {
            out.push((v, EdgeColor::Blue));
        }
    }
    Ok(out)
}

/// Counts of red and blue exterior edges from `v` into summand `j`.
pub fn color_degrees(inst: &CgsInstance, v: VertexId, j: usize) -> Result<DegreePair, AnalysisError> {
    if j >= inst.summand_count() {
        return Err(AnalysisError::IndexOutOfRange(j));
    }
    if inst.owner(v) == j {
        return Err(AnalysisError::VertexInTarget(v));
    }
    let mut d = DegreePair { red: 0, blue: 0 };
    for &w in &inst.summand(j).vertices {
        match inst.exterior_color(v, w) {
            Some(EdgeColor::Red) => d.red += 1,
            Some(EdgeColor::Blue) => d.blue += 1,
            None => {}
        }
    }
    Ok(d)
}

/// One named check of a [`Lemma4Report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail report for the exterior-edge consistency laws of a
/// good-pair-free summand pair: global color counts, per-vertex
/// per-class incidence with the parity rule, and the neighbor
/// degree-swap relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma4Report {
    pub checks: Vec<ReportCheck>,
}

impl Lemma4Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn verify_lemma4(inst: &CgsInstance, i: usize, j: usize) -> Result<Lemma4Report, AnalysisError> {
    check_pair_indices(inst, i, j)?;
    if let Some(gp) = find_good_pairs(inst, i, j)?.into_iter().next() {
        return Err(AnalysisError::GoodPairPresent(gp));
    }
    let n = inst.summand(i).len() / 2;
    let m = inst.summand(j).len() / 2;
    let l = n.lcm(&m);
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(ReportCheck { name: name.to_string(), passed, detail });
    };

    // (i) exactly 2mn exterior edges of each color between the pair.
    let mut red = 0usize;
    let mut blue = 0usize;
    for &u in &inst.summand(i).vertices {
        for &v in &inst.summand(j).vertices {
            match inst.exterior_color(u, v).expect("exterior coloring is total") {
                EdgeColor::Red => red += 1,
                EdgeColor::Blue => blue += 1,
            }
        }
    }
    push(
        "color-counts",
        red == 2 * m * n && blue == 2 * m * n,
        format!("red {red}, blue {blue}, expected {} each", 2 * m * n),
    );

    // (ii) per-vertex per-class incidence with the parity rule.
    let classes = parallel_partition(inst, i, j)?;
    let mut incidence_ok = true;
    let mut parity_ok = true;
    let mut alternation_ok = true;
    for class in &classes {
        let len = class.edges.len();
        for (k, &(_, _, c)) in class.edges.iter().enumerate() {
            if class.edges[(k + 1) % len].2 == c {
                alternation_ok = false;
            }
        }
        for (side, expect) in [(i, l / n), (j, l / m)] {
            let cycle = inst.ham_cycle(side);
            let mut color_at: Vec<Option<EdgeColor>> = vec![None; inst.summand(side).len()];
            for &w in &inst.summand(side).vertices {
                let incident: Vec<EdgeColor> = class
                    .edges
                    .iter()
                    .filter(|&&(u, v, _)| u == w || v == w)
                    .map(|&(_, _, c)| c)
                    .collect();
                if incident.len() != expect || incident.iter().any(|&c| c != incident[0]) {
                    incidence_ok = false;
                } else {
                    let pos = cycle.position(w).expect("vertex on its own cycle");
                    color_at[pos] = Some(incident[0]);
                }
            }
            for a in 0..color_at.len() {
                for b in (a + 1)..color_at.len() {
                    if let (Some(ca), Some(cb)) = (color_at[a], color_at[b]) {
                        if (a % 2 == b % 2) != (ca == cb) {
                            parity_ok = false;
                        }
                    }
                }
            }
        }
    }
    push(
        "class-count",
        classes.len() * 2 * l == 4 * m * n,
        format!("{} classes of size {}", classes.len(), 2 * l),
    );
    push("class-alternation", alternation_ok, "adjacent class edges differ in color".into());
    push(
        "class-incidence",
        incidence_ok,
        format!("each vertex meets lcm/n = {} resp. lcm/m = {} alike-colored class edges", l / n, l / m),
    );
    push("class-parity", parity_ok, "class colors at w and x agree iff w = x (mod 2)".into());

    // (iii) degree relations along each cycle.
    let mut swap_ok = true;
    let mut congruence_ok = true;
    for (side, other) in [(i, j), (j, i)] {
        let cycle = inst.ham_cycle(side);
        let size_other = inst.summand(other).len();
        let degs: Vec<(VertexId, DegreePair)> = inst
            .summand(side)
            .vertices
            .iter()
            .map(|&w| (w, color_degrees(inst, w, other).expect("vertex outside target")))
            .collect();
        for &(w, d) in &degs {
            if d.red + d.blue != size_other {
                swap_ok = false;
            }
            for col in [EdgeColor::Red, EdgeColor::Blue] {
                let x = cycle.neighbor(w, col).expect("vertex on its own cycle");
                let dx = color_degrees(inst, x, other).expect("vertex outside target");
                if dx.red != d.blue || dx.blue != d.red {
                    swap_ok = false;
                }
            }
        }
        for a in 0..degs.len() {
            for b in (a + 1)..degs.len() {
                let (wa, da) = degs[a];
                let (wb, db) = degs[b];
                let congruent = cycle.congruent_mod2(wa, wb).expect("vertices on cycle");
                let expected = if congruent { da.red } else { size_other - da.red };
                if db.red != expected {
                    congruence_ok = false;
                }
            }
        }
    }
    push("degree-swap", swap_ok, "d_r and d_b swap across red/blue cycle neighbors".into());
    push("degree-congruence", congruence_ok, "d_r(x) = d_r(w) iff w = x (mod 2)".into());

    Ok(Lemma4Report { checks })
}

/// Checks the pancyclicity hypotheses on the whole instance: no good
/// cycle, and for every ordered summand pair a non-singular vertex.
pub fn theorem2_hypotheses(inst: &CgsInstance) -> Result<(), HypothesisViolation> {
    if let Some(gc) = find_good_cycles(inst).into_iter().next() {
        return Err(HypothesisViolation::GoodCycle(gc));
    }
    let k = inst.summand_count();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let singular = singular_vertices(inst, i, j).expect("indices in range");
            if singular.len() == inst.summand(i).len() {
                let (witness, color) = singular[0];
                return Err(HypothesisViolation::SingularSide { summand: i, toward: j, witness, color });
            }
        }
    }
    Ok(())
}
