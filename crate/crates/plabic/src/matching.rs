//! Almost perfect matchings, perfect orientations, flows, and the bijections
//! among them.
//!
//! An almost perfect matching covers each internal vertex exactly once. A
//! perfect orientation directs the edges so that each black internal vertex
//! has exactly one outgoing edge and each white internal vertex exactly one
//! incoming edge. The two are in bijection: an edge belongs to the matching
//! of an orientation exactly when it is directed away from a black vertex or
//! toward a white one. Flows in a fixed orientation (vertex-disjoint unions
//! of self-avoiding boundary-to-boundary walks and cycles) are in bijection
//! with the orientations themselves, by reversing the flow's edges.

use crate::error::{Error, Result};
use crate::graph::{Color, DiskGraph, End};
use crate::sets::{BoundarySet, EdgeSet};

/// An almost perfect matching, as an edge set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    set: EdgeSet,
}

impl Matching {
    pub fn edge_set(&self) -> EdgeSet {
        self.set
    }

    pub fn contains(&self, e: usize) -> bool {
        self.set.contains(e)
    }

    /// Boundary vertices covered by the matching.
    pub fn boundary_set(&self, g: &DiskGraph) -> BoundarySet {
        BoundarySet::from_iter((0..g.n()).filter(|&i| self.set.contains(g.boundary_edge(i))))
    }

    /// Sorted edge ids, the canonical serialization.
    pub fn edge_ids(&self, g: &DiskGraph) -> Vec<String> {
        self.set.iter().map(|e| g.edges()[e].id.clone()).collect()
    }

    /// 0-1 characteristic vector over the edges.
    pub fn char_vector(&self, g: &DiskGraph) -> Vec<i64> {
        (0..g.edge_count()).map(|e| i64::from(self.set.contains(e))).collect()
    }
}

/// A perfect orientation: a direction per edge. `forward[e]` means the edge
/// runs `ends[0] -> ends[1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn is_forward(&self, e: usize) -> bool {
        self.forward[e]
    }

    pub fn tail(&self, g: &DiskGraph, e: usize) -> End {
        g.edges()[e].ends[usize::from(!self.forward[e])]
    }

    pub fn head(&self, g: &DiskGraph, e: usize) -> End {
        g.edges()[e].ends[usize::from(self.forward[e])]
    }

    /// Boundary vertices that are sources of the directed graph.
    pub fn source_set(&self, g: &DiskGraph) -> BoundarySet {
        BoundarySet::from_iter((0..g.n()).filter(|&i| {
            let e = g.boundary_edge(i);
            self.tail(g, e) == End::Boundary(i)
        }))
    }

    /// `(edge id, tail id)` pairs, the canonical serialization.
    pub fn tails(&self, g: &DiskGraph) -> Vec<(String, String)> {
        (0..g.edge_count())
            .map(|e| (g.edges()[e].id.clone(), g.end_name(self.tail(g, e))))
            .collect()
    }
}

/// Check the perfect-orientation conditions at every internal vertex.
pub fn is_perfect(g: &DiskGraph, o: &Orientation) -> bool {
    (0..g.internal_count()).all(|v| {
        let out = g
            .incident(v)
            .iter()
            .filter(|&&e| o.tail(g, e) == End::Internal(v))
            .count();
        match g.color(v) {
            Color::Black => out == 1,
            Color::White => g.degree(v) - out == 1,
        }
    })
}

/// All almost perfect matchings, canonically ordered (lexicographic in the
/// sorted edge-index lists). Empty when none exist.
pub fn enumerate_matchings(g: &DiskGraph) -> Result<Vec<Matching>> {
    EdgeSet::check_capacity(g.edge_count())?;
    let nv = g.internal_count();
    let mut covered = vec![false; nv];
    let mut chosen = EdgeSet::empty();
    let mut out = Vec::new();
    fn rec(
        g: &DiskGraph,
        covered: &mut Vec<bool>,
        chosen: &mut EdgeSet,
        out: &mut Vec<Matching>,
    ) {
        // Next uncovered internal vertex in id order; prune on any uncovered
        // vertex with no available edge.
        let mut pick: Option<usize> = None;
        for v in 0..covered.len() {
            if covered[v] {
                continue;
            }
            let available = g.incident(v).iter().any(|&e| match g.other_end(e, v) {
                End::Internal(u) => !covered[u],
                End::Boundary(_) => true,
            });
            if !available {
                return;
            }
            if pick.is_none() {
                pick = Some(v);
            }
        }
        let v = match pick {
            Some(v) => v,
            None => {
                out.push(Matching { set: *chosen });
                return;
            }
        };
        covered[v] = true;
        let mut tried = EdgeSet::empty();
        for &e in g.incident(v) {
            if tried.contains(e) {
                continue; // rotation lists each incident edge once; keep safe anyway
            }
            tried.insert(e);
            match g.other_end(e, v) {
                End::Internal(u) => {
                    if !covered[u] {
                        covered[u] = true;
                        chosen.insert(e);
                        rec(g, covered, chosen, out);
                        chosen.remove(e);
                        covered[u] = false;
                    }
                }
                End::Boundary(_) => {
                    chosen.insert(e);
                    rec(g, covered, chosen, out);
                    chosen.remove(e);
                }
            }
        }
        covered[v] = false;
    }
    rec(g, &mut covered, &mut chosen, &mut out);
    out.sort_by_key(|m| m.set.indices());
    Ok(out)
}

/// The perfect orientation of a matching: matched edges run away from black
/// or toward white (boundary endpoints take the opposite nominal color of
/// their internal neighbor); unmatched edges run the other way.
pub fn matching_to_orientation(g: &DiskGraph, m: &Matching) -> Orientation {
    let forward = (0..g.edge_count())
        .map(|e| {
            // Forward means ends[0] -> ends[1]; the matched direction points
            // away from the nominally black endpoint.
            let black_first = g.end_color(e, 0) == Color::Black;
            if m.contains(e) {
                black_first
            } else {
                !black_first
            }
        })
        .collect();
    Orientation { forward }
}

/// The matching of a perfect orientation: edges directed away from a black
/// vertex or toward a white one.
pub fn orientation_to_matching(g: &DiskGraph, o: &Orientation) -> Matching {
    let set = EdgeSet::from_iter(
        (0..g.edge_count())
            .filter(|&e| g.end_color(e, usize::from(!o.is_forward(e))) == Color::Black),
    );
    Matching { set }
}

/// All perfect orientations, enumerated directly by edge-direction
/// backtracking (independent of matching enumeration), canonically ordered
/// by direction vector.
pub fn enumerate_orientations(g: &DiskGraph) -> Result<Vec<Orientation>> {
    EdgeSet::check_capacity(g.edge_count())?;
    let nv = g.internal_count();
    let ne = g.edge_count();
    // Remaining unassigned incident edges and outgoing count per vertex.
    let mut remaining: Vec<usize> = (0..nv).map(|v| g.degree(v)).collect();
    let mut outgoing = vec![0usize; nv];
    let mut forward = vec![false; ne];
    let mut out = Vec::new();

    fn need(g: &DiskGraph, v: usize) -> usize {
        // Required number of outgoing edges at an internal vertex.
        match g.color(v) {
            Color::Black => 1,
            Color::White => g.degree(v) - 1,
        }
    }

    fn feasible(g: &DiskGraph, v: usize, outgoing: usize, remaining: usize) -> bool {
        let n = need(g, v);
        outgoing <= n && outgoing + remaining >= n
    }

    fn rec(
        g: &DiskGraph,
        e: usize,
        forward: &mut Vec<bool>,
        remaining: &mut Vec<usize>,
        outgoing: &mut Vec<usize>,
        out: &mut Vec<Orientation>,
    ) {
        if e == g.edge_count() {
            out.push(Orientation { forward: forward.clone() });
            return;
        }
        for dir in [true, false] {
            let tail = g.edges()[e].ends[usize::from(!dir)];
            let head = g.edges()[e].ends[usize::from(dir)];
            let mut ok = true;
            let mut touched = Vec::with_capacity(2);
            for (end, is_tail) in [(tail, true), (head, false)] {
                if let End::Internal(v) = end {
                    remaining[v] -= 1;
                    if is_tail {
                        outgoing[v] += 1;
                    }
                    touched.push((v, is_tail));
                    if !feasible(g, v, outgoing[v], remaining[v]) {
                        ok = false;
                    }
                }
            }
            if ok {
                forward[e] = dir;
                rec(g, e + 1, forward, remaining, outgoing, out);
            }
            for (v, is_tail) in touched {
                remaining[v] += 1;
                if is_tail {
                    outgoing[v] -= 1;
                }
            }
        }
    }
    rec(g, 0, &mut forward, &mut remaining, &mut outgoing, &mut out);
    out.sort_by(|a, b| a.forward.cmp(&b.forward));
    Ok(out)
}

/// One component of a flow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowComponent {
    /// A self-avoiding directed cycle (edge indices in cycle order).
    Cycle(Vec<usize>),
    /// A self-avoiding directed walk from boundary source to boundary sink.
    Walk { source: usize, dest: usize, edges: Vec<usize> },
}

impl FlowComponent {
    pub fn edges(&self) -> &[usize] {
        match self {
            FlowComponent::Cycle(es) => es,
            FlowComponent::Walk { edges, .. } => edges,
        }
    }
}

/// A flow in a perfect orientation: pairwise vertex-disjoint self-avoiding
/// walks and cycles. `destination` is `(I \ walk sources) + walk sinks`.
#[derive(Debug, Clone)]
pub struct Flow {
    pub components: Vec<FlowComponent>,
    pub edges: EdgeSet,
    pub destination: BoundarySet,
}

impl Flow {
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Conservative flows have no walks.
    pub fn is_conservative(&self) -> bool {
        self.components.iter().all(|c| matches!(c, FlowComponent::Cycle(_)))
    }
}

/// Internal-vertex occupancy of a component, for disjointness checks.
fn component_vertices(g: &DiskGraph, c: &FlowComponent) -> u64 {
    let mut bits = 0u64;
    for &e in c.edges() {
        for v in g.internal_ends(e) {
            bits |= 1 << v;
        }
    }
    bits
}

/// All self-avoiding directed cycles of an orientation, deduplicated by
/// making the smallest internal vertex the start.
fn directed_cycles(g: &DiskGraph, o: &Orientation) -> Vec<FlowComponent> {
    let nv = g.internal_count();
    let mut cycles = Vec::new();
    for start in 0..nv {
        // DFS over vertices > start, returning to start.
        let mut stack_edges: Vec<usize> = Vec::new();
        let mut visited = vec![false; nv];
        fn dfs(
            g: &DiskGraph,
            o: &Orientation,
            start: usize,
            v: usize,
            visited: &mut Vec<bool>,
            stack_edges: &mut Vec<usize>,
            cycles: &mut Vec<FlowComponent>,
        ) {
            for &e in g.incident(v) {
                if o.tail(g, e) != End::Internal(v) {
                    continue;
                }
                match o.head(g, e) {
                    End::Boundary(_) => {}
                    End::Internal(u) => {
                        if u == start && !stack_edges.is_empty() {
                            let mut cyc = stack_edges.clone();
                            cyc.push(e);
                            cycles.push(FlowComponent::Cycle(cyc));
                        } else if u == start && stack_edges.is_empty() {
                            // 2-cycle via parallel edges handled by the
                            // general branch; a 1-edge "cycle" cannot occur.
                            continue;
                        } else if u > start && !visited[u] {
                            visited[u] = true;
                            stack_edges.push(e);
                            dfs(g, o, start, u, visited, stack_edges, cycles);
                            stack_edges.pop();
                            visited[u] = false;
                        }
                    }
                }
            }
        }
        visited[start] = true;
        dfs(g, o, start, start, &mut visited, &mut stack_edges, &mut cycles);
    }
    // A cycle through k vertices is found once per starting edge at the
    // minimal vertex; for parallel-edge 2-cycles both edge orders appear.
    // Deduplicate by edge set.
    let mut seen = std::collections::BTreeSet::new();
    cycles.retain(|c| seen.insert(EdgeSet::from_iter(c.edges().iter().copied())));
    cycles
}

/// All self-avoiding directed boundary-to-boundary walks of an orientation.
fn directed_walks(g: &DiskGraph, o: &Orientation) -> Vec<FlowComponent> {
    let mut walks = Vec::new();
    for i in 0..g.n() {
        let leg = g.boundary_edge(i);
        if o.tail(g, leg) != End::Boundary(i) {
            continue; // not a source
        }
        let first = match o.head(g, leg) {
            End::Internal(v) => v,
            End::Boundary(_) => unreachable!("validated edge"),
        };
        let mut visited = vec![false; g.internal_count()];
        visited[first] = true;
        let mut stack_edges = vec![leg];
        fn dfs(
            g: &DiskGraph,
            o: &Orientation,
            source: usize,
            v: usize,
            visited: &mut Vec<bool>,
            stack_edges: &mut Vec<usize>,
            walks: &mut Vec<FlowComponent>,
        ) {
            for &e in g.incident(v) {
                if o.tail(g, e) != End::Internal(v) {
                    continue;
                }
                match o.head(g, e) {
                    End::Boundary(j) => {
                        let mut edges = stack_edges.clone();
                        edges.push(e);
                        walks.push(FlowComponent::Walk { source, dest: j, edges });
                    }
                    End::Internal(u) => {
                        if !visited[u] {
                            visited[u] = true;
                            stack_edges.push(e);
                            dfs(g, o, source, u, visited, stack_edges, walks);
                            stack_edges.pop();
                            visited[u] = false;
                        }
                    }
                }
            }
        }
        dfs(g, o, i, first, &mut visited, &mut stack_edges, &mut walks);
    }
    walks
}

/// All flows in a perfect orientation, including the empty flow, canonically
/// ordered by edge set. The list is in bijection with the matchings.
pub fn enumerate_flows(g: &DiskGraph, o: &Orientation) -> Result<Vec<Flow>> {
    EdgeSet::check_capacity(g.edge_count())?;
    if g.internal_count() > 64 {
        return Err(Error::TooLarge("more than 64 internal vertices".into()));
    }
    let sources = o.source_set(g);
    let mut components = directed_cycles(g, o);
    components.extend(directed_walks(g, o));
    let occupancy: Vec<u64> = components.iter().map(|c| component_vertices(g, c)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        g: &DiskGraph,
        sources: BoundarySet,
        components: &[FlowComponent],
        occupancy: &[u64],
        from: usize,
        used: u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Flow>,
    ) {
        let comps: Vec<FlowComponent> =
            chosen.iter().map(|&i| components[i].clone()).collect();
        let edges = EdgeSet::from_iter(comps.iter().flat_map(|c| c.edges().iter().copied()));
        let mut dest = sources;
        for c in &comps {
            if let FlowComponent::Walk { source, dest: d, .. } = c {
                dest = dest.minus(BoundarySet::from_iter([*source]));
                dest = dest.union(BoundarySet::from_iter([*d]));
            }
        }
        out.push(Flow { components: comps, edges, destination: dest });
        for i in from..components.len() {
            if occupancy[i] & used != 0 {
                continue;
            }
            // Walks must start at distinct sources and end at distinct sinks;
            // vertex-disjointness already enforces that via the legs' internal
            // endpoints except for degenerate repeats, which cannot occur.
            chosen.push(i);
            rec(g, sources, components, occupancy, i + 1, used | occupancy[i], chosen, out);
            chosen.pop();
        }
    }
    rec(g, sources, &components, &occupancy, 0, 0, &mut chosen, &mut out);
    out.sort_by_key(|f| f.edges.indices());
    Ok(out)
}

/// Reverse all edges of a flow, producing another perfect orientation.
pub fn reverse_flow(g: &DiskGraph, o: &Orientation, f: &Flow) -> Result<Orientation> {
    // Validate vertex-disjointness and that each component is directed in o.
    let mut used = 0u64;
    for c in &f.components {
        let occ = component_vertices(g, c);
        if occ & used != 0 {
            return Err(Error::InvalidFlow("components share a vertex".into()));
        }
        used |= occ;
        for &e in c.edges() {
            if !f.edges.contains(e) {
                return Err(Error::InvalidFlow("component edge missing from edge set".into()));
            }
        }
    }
    let forward = (0..g.edge_count())
        .map(|e| if f.edges.contains(e) { !o.is_forward(e) } else { o.is_forward(e) })
        .collect();
    let rev = Orientation { forward };
    if !is_perfect(g, &rev) {
        return Err(Error::InvalidFlow("reversal is not a perfect orientation".into()));
    }
    Ok(rev)
}

/// The flow carrying one perfect orientation to another: the edge set where
/// they disagree, decomposed into vertex-disjoint walks and cycles by the
/// pairing of disagreement edges around each vertex.
pub fn flow_between(g: &DiskGraph, o1: &Orientation, o2: &Orientation) -> Result<Flow> {
    let disagree = EdgeSet::from_iter(
        (0..g.edge_count()).filter(|&e| o1.is_forward(e) != o2.is_forward(e)),
    );
    decompose_flow(g, o1, disagree)
}

/// Decompose an edge set into flow components with directions taken from
/// `o`. Errors when the set is not a disjoint union of walks and cycles.
pub fn decompose_flow(g: &DiskGraph, o: &Orientation, edges: EdgeSet) -> Result<Flow> {
    // Every internal vertex meets 0 or 2 of the edges; boundary 0 or 1.
    let mut deg = vec![0usize; g.internal_count()];
    for e in edges.iter() {
        for v in g.internal_ends(e) {
            deg[v] += 1;
        }
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return Err(Error::InvalidFlow(
            "edge set does not meet every internal vertex 0 or 2 times".into(),
        ));
    }
    let mut remaining = edges;
    let mut components = Vec::new();
    // Walks first: start from boundary sources within the set.
    for i in 0..g.n() {
        let leg = g.boundary_edge(i);
        if !remaining.contains(leg) || o.tail(g, leg) != End::Boundary(i) {
            continue;
        }
        let mut walk = vec![leg];
        remaining.remove(leg);
        let mut at = o.head(g, leg);
        let dest = loop {
            let v = match at {
                End::Boundary(j) => break j,
                End::Internal(v) => v,
            };
            let next = g
                .incident(v)
                .iter()
                .copied()
                .find(|&e| remaining.contains(e) && o.tail(g, e) == End::Internal(v))
                .ok_or_else(|| Error::InvalidFlow("walk stalls mid-graph".into()))?;
            walk.push(next);
            remaining.remove(next);
            at = o.head(g, next);
        };
        components.push(FlowComponent::Walk { source: i, dest, edges: walk });
    }
    // Remaining edges must be cycles.
    while !remaining.is_empty() {
        let e0 = remaining.iter().next().unwrap();
        let start = match o.tail(g, e0) {
            End::Internal(v) => v,
            End::Boundary(_) => {
                return Err(Error::InvalidFlow("boundary edge left after walks".into()))
            }
        };
        let mut cyc = vec![e0];
        remaining.remove(e0);
        let mut at = o.head(g, e0);
        loop {
            let v = match at {
                End::Internal(v) => v,
                End::Boundary(_) => {
                    return Err(Error::InvalidFlow("cycle reaches the boundary".into()))
                }
            };
            if v == start {
                break;
            }
            let next = g
                .incident(v)
                .iter()
                .copied()
                .find(|&e| remaining.contains(e) && o.tail(g, e) == End::Internal(v))
                .ok_or_else(|| Error::InvalidFlow("cycle stalls mid-graph".into()))?;
            cyc.push(next);
            remaining.remove(next);
            at = o.head(g, next);
        }
        components.push(FlowComponent::Cycle(cyc));
    }
    let mut dest = o.source_set(g);
    for c in &components {
        if let FlowComponent::Walk { source, dest: d, .. } = c {
            dest = dest.minus(BoundarySet::from_iter([*source]));
            dest = dest.union(BoundarySet::from_iter([*d]));
        }
    }
    Ok(Flow { components, edges, destination: dest })
}

/// Two matchings are adjacent (their polytope vertices form an edge) exactly
/// when their symmetric difference is a single cycle or a single
/// boundary-to-boundary path.
pub fn matching_adjacent(g: &DiskGraph, m1: &Matching, m2: &Matching) -> bool {
    let diff = m1.edge_set().sym_diff(m2.edge_set());
    if diff.is_empty() {
        return false;
    }
    // Union-find over endpoints; boundary vertices are distinct poles.
    let nv = g.internal_count();
    let total = nv + g.n();
    let mut dsu: Vec<usize> = (0..total).collect();
    fn find(dsu: &mut [usize], mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    let idx = |end: End, nv: usize| match end {
        End::Internal(v) => v,
        End::Boundary(i) => nv + i,
    };
    // Components among the vertices the difference touches: each merge
    // reduces the count by one; cycles close without merging.
    let mut touched = std::collections::BTreeSet::new();
    let mut merges = 0usize;
    for e in diff.iter() {
        let [a, b] = g.edges()[e].ends;
        touched.insert(idx(a, nv));
        touched.insert(idx(b, nv));
        let (ra, rb) = (find(&mut dsu, idx(a, nv)), find(&mut dsu, idx(b, nv)));
        if ra != rb {
            dsu[ra] = rb;
            merges += 1;
        }
    }
    touched.len() - merges == 1
}
