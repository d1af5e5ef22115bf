//! Plane-bipartite graphs embedded in a disk.
//!
//! A graph has `n` uncolored boundary vertices `b1..bn` in clockwise order on
//! the rim, each of degree exactly 1, plus colored internal vertices. Every
//! edge joins an internal black vertex to an internal white vertex, or a
//! boundary vertex to an internal vertex. The embedding is carried
//! combinatorially by a rotation system: the clockwise cyclic order of edges
//! around each internal vertex. Faces are computed on the boundary-contracted
//! graph (all boundary vertices identified to one point), and the rotation
//! system is accepted only if that map has Euler characteristic 2.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Color of an internal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    /// +1 for black, -1 for white; the sign used by the type formula.
    pub fn sign(self) -> i64 {
        match self {
            Color::Black => 1,
            Color::White => -1,
        }
    }

    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::White => "white",
        }
    }
}

/// One endpoint of an edge. Boundary vertices are indexed 0-based internally
/// and displayed 1-based (`b1..bn`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    Boundary(usize),
    Internal(usize),
}

/// An undirected edge. Parallel edges are allowed (distinct ids, same ends);
/// loops are not.
#[derive(Debug, Clone)]
pub struct Edge {
    pub id: String,
    pub ends: [End; 2],
}

/// A validated plane-bipartite graph. Immutable after construction.
#[derive(Debug, Clone)]
pub struct DiskGraph {
    n: usize,
    names: Vec<String>,
    colors: Vec<Color>,
    edges: Vec<Edge>,
    /// Clockwise edge order around each internal vertex.
    rotations: Vec<Vec<usize>>,
    /// The unique edge at each boundary vertex.
    boundary_edges: Vec<usize>,
    /// Incident edges per internal vertex, in rotation order.
    incidence: Vec<Vec<usize>>,
    warnings: Vec<String>,
}

/// Type `(k, n)` of a graph: all perfect orientations have source sets of
/// size `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphType {
    pub k: usize,
    pub n: usize,
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.n)
    }
}

/// A dart is a directed traversal of an edge: `2e` runs `ends[0] -> ends[1]`,
/// `2e+1` the reverse.
pub type Dart = usize;

/// Forward dart of edge `e`.
pub fn dart(e: usize, forward: bool) -> Dart {
    2 * e + usize::from(!forward)
}

/// Edge of a dart.
pub fn dart_edge(d: Dart) -> usize {
    d / 2
}

/// Whether a dart traverses its edge from `ends[0]` to `ends[1]`.
pub fn dart_forward(d: Dart) -> bool {
    d % 2 == 0
}

/// Opposite traversal of the same edge.
pub fn dart_twin(d: Dart) -> Dart {
    d ^ 1
}

/// Faces of the boundary-contracted graph, as cyclic dart sequences.
#[derive(Debug, Clone)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl FaceSet {
    /// Number of faces.
    pub fn count(&self) -> usize {
        self.faces.len().max(1)
    }

    /// The faces as cyclic dart sequences.
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    /// Index of the face a dart lies on.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }
}

/// Generic face tracer for a combinatorial map given by clockwise rotations
/// of outgoing darts. Twin pairing is `d ^ 1`; `origin[d]` is the vertex a
/// dart leaves. Faces are the orbits of "arrive, then leave along the next
/// edge counterclockwise".
pub(crate) fn trace_faces(rotations: &[Vec<Dart>], origin: &[usize]) -> (Vec<Vec<Dart>>, Vec<usize>) {
    let ndarts = origin.len();
    let mut pos = vec![usize::MAX; ndarts];
    for rot in rotations {
        for (i, &d) in rot.iter().enumerate() {
            pos[d] = i;
        }
    }
    let next = |d: Dart| -> Dart {
        let t = dart_twin(d);
        let v = origin[t];
        let rot = &rotations[v];
        let p = pos[t];
        rot[(p + rot.len() - 1) % rot.len()]
    };
    let mut face_of = vec![usize::MAX; ndarts];
    let mut faces = Vec::new();
    for start in 0..ndarts {
        // Darts absent from the map (possible when tracing a subgraph) are skipped.
        if pos[start] == usize::MAX || face_of[start] != usize::MAX {
            continue;
        }
        let idx = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = idx;
            walk.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    (faces, face_of)
}

impl DiskGraph {
    /// Boundary vertex count `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of internal vertices.
    pub fn internal_count(&self) -> usize {
        self.names.len()
    }

    /// Edges in canonical (sorted-by-id) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Resolve an edge id to its canonical index.
    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.binary_search_by(|e| e.id.as_str().cmp(id)).ok()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    /// Clockwise edge order around an internal vertex.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    /// Incident edges of an internal vertex (rotation order).
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// The unique edge at boundary vertex `i` (0-based).
    pub fn boundary_edge(&self, i: usize) -> usize {
        self.boundary_edges[i]
    }

    /// The internal endpoint of a boundary vertex's edge.
    pub fn boundary_neighbor(&self, i: usize) -> usize {
        let e = &self.edges[self.boundary_edges[i]];
        match (e.ends[0], e.ends[1]) {
            (End::Boundary(_), End::Internal(v)) | (End::Internal(v), End::Boundary(_)) => v,
            _ => unreachable!("validated edge"),
        }
    }

    /// True when every boundary vertex's neighbor is white, i.e. boundary
    /// vertices may consistently be regarded as black.
    pub fn is_boundary_black(&self) -> bool {
        (0..self.n).all(|i| self.colors[self.boundary_neighbor(i)] == Color::White)
    }

    /// The internal endpoint(s) of an edge.
    pub fn internal_ends(&self, e: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges[e].ends.iter().filter_map(|&end| match end {
            End::Internal(v) => Some(v),
            End::Boundary(_) => None,
        })
    }

    /// The other endpoint of edge `e` as seen from internal vertex `v`.
    pub fn other_end(&self, e: usize, v: usize) -> End {
        let ends = self.edges[e].ends;
        if ends[0] == End::Internal(v) {
            ends[1]
        } else {
            ends[0]
        }
    }

    /// The color an endpoint carries for edge-direction bookkeeping: boundary
    /// vertices count as the opposite color of their internal neighbor, so
    /// every edge has one nominally black and one nominally white side.
    pub fn end_color(&self, e: usize, which: usize) -> Color {
        match self.edges[e].ends[which] {
            End::Internal(v) => self.colors[v],
            End::Boundary(_) => match self.edges[e].ends[1 - which] {
                End::Internal(v) => self.colors[v].opposite(),
                End::Boundary(_) => unreachable!("validated edge"),
            },
        }
    }

    /// Warnings emitted during validation (stripped isolated components).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Display name for an endpoint.
    pub fn end_name(&self, end: End) -> String {
        match end {
            End::Boundary(i) => format!("b{}", i + 1),
            End::Internal(v) => self.names[v].clone(),
        }
    }

    /// Type `(k, n)` from the displayed vertex formula
    /// `k - (n-k) = sum color(v) (deg(v) - 2)`.
    pub fn graph_type(&self) -> Result<GraphType> {
        let s: i64 = (0..self.internal_count())
            .map(|v| self.colors[v].sign() * (self.degree(v) as i64 - 2))
            .sum();
        let twice_k = self.n as i64 + s;
        if twice_k % 2 != 0 {
            return Err(Error::InconsistentType {
                msg: format!("2k = n + {s} = {twice_k}, which is odd"),
            });
        }
        let k = twice_k / 2;
        if k < 0 || k > self.n as i64 {
            return Err(Error::InconsistentType {
                msg: format!("k = {k} outside [0, {}]", self.n),
            });
        }
        Ok(GraphType { k: k as usize, n: self.n })
    }

    /// The combinatorial map of the boundary-contracted graph: internal
    /// vertices keep their clockwise rotations; the contraction point takes
    /// the boundary edges in reversed boundary order (contracting the rim
    /// reverses its orientation as seen from the resulting point).
    fn contracted_map(&self) -> (Vec<Vec<Dart>>, Vec<usize>) {
        let nv = self.internal_count();
        let star = nv;
        let mut origin = vec![usize::MAX; 2 * self.edge_count()];
        for (e, edge) in self.edges.iter().enumerate() {
            for (which, &end) in edge.ends.iter().enumerate() {
                let v = match end {
                    End::Internal(v) => v,
                    End::Boundary(_) => star,
                };
                origin[dart(e, which == 0)] = v;
            }
        }
        let mut rotations: Vec<Vec<Dart>> = Vec::with_capacity(nv + 1);
        for v in 0..nv {
            rotations.push(
                self.rotations[v]
                    .iter()
                    .map(|&e| dart(e, self.edges[e].ends[0] == End::Internal(v)))
                    .collect(),
            );
        }
        let star_rot: Vec<Dart> = (0..self.n)
            .rev()
            .map(|i| {
                let e = self.boundary_edges[i];
                dart(e, matches!(self.edges[e].ends[0], End::Boundary(_)))
            })
            .collect();
        rotations.push(star_rot);
        (rotations, origin)
    }

    /// Face traversal of the boundary-contracted rotation system.
    pub fn faces(&self) -> FaceSet {
        if self.edge_count() == 0 {
            return FaceSet { faces: Vec::new(), face_of: Vec::new() };
        }
        let (rotations, origin) = self.contracted_map();
        let (faces, face_of) = trace_faces(&rotations, &origin);
        FaceSet { faces, face_of }
    }

    /// Subdivide every boundary edge whose internal endpoint is black by a
    /// single white vertex, so that all boundary vertices may be regarded as
    /// black. Returns `self` unchanged (cloned) when already compliant.
    pub fn normalize_boundary(&self) -> Result<DiskGraph> {
        if self.is_boundary_black() {
            return Ok(self.clone());
        }
        let mut b = GraphBuilder::new(self.n);
        for v in 0..self.internal_count() {
            b.vertex(&self.names[v], self.colors[v]);
        }
        // Renames offending boundary edges: `e` becomes `e~b` (rim side) and
        // `e~i` (internal side, keeping the old rotation slot).
        let mut renamed: BTreeMap<usize, String> = BTreeMap::new();
        for i in 0..self.n {
            let e = self.boundary_edges[i];
            if self.colors[self.boundary_neighbor(i)] == Color::Black {
                let fresh = format!("{}~w", self.edges[e].id);
                b.vertex(&fresh, Color::White);
                b.edge(&format!("{}~b", self.edges[e].id), &format!("b{}", i + 1), &fresh);
                b.edge(
                    &format!("{}~i", self.edges[e].id),
                    &fresh,
                    &self.names[self.boundary_neighbor(i)],
                );
                renamed.insert(e, format!("{}~i", self.edges[e].id));
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if renamed.contains_key(&e) {
                continue;
            }
            b.edge(&edge.id, &self.end_name(edge.ends[0]), &self.end_name(edge.ends[1]));
        }
        for v in 0..self.internal_count() {
            let rot: Vec<String> = self.rotations[v]
                .iter()
                .map(|&e| renamed.get(&e).cloned().unwrap_or_else(|| self.edges[e].id.clone()))
                .collect();
            b.rotation(&self.names[v], &rot.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        }
        b.build()
    }

    /// Test whether two disk graphs are isomorphic as embedded graphs,
    /// allowing rotation of the boundary labels and reflection of the disk.
    pub fn embedded_isomorphic(&self, other: &DiskGraph) -> bool {
        if self.n != other.n
            || self.internal_count() != other.internal_count()
            || self.edge_count() != other.edge_count()
        {
            return false;
        }
        for shift in 0..self.n.max(1) {
            for reflect in [false, true] {
                if self.try_embedding_map(other, shift, reflect) {
                    return true;
                }
            }
        }
        false
    }

    fn try_embedding_map(&self, other: &DiskGraph, shift: usize, reflect: bool) -> bool {
        let n = self.n;
        let bmap = |i: usize| -> usize {
            if reflect {
                (2 * n + shift - i) % n.max(1)
            } else {
                (i + shift) % n.max(1)
            }
        };
        let mut vmap = vec![usize::MAX; self.internal_count()];
        let mut emap = vec![usize::MAX; self.edge_count()];
        let mut queue: Vec<(usize, usize, usize, usize)> = Vec::new(); // (v, v', e, e')
        for i in 0..n {
            let e = self.boundary_edges[i];
            let e2 = other.boundary_edges[bmap(i)];
            if emap[e] != usize::MAX && emap[e] != e2 {
                return false;
            }
            emap[e] = e2;
            let v = self.boundary_neighbor(i);
            let v2 = other.boundary_neighbor(bmap(i));
            if self.colors[v] != other.colors[v2] {
                return false;
            }
            if vmap[v] != usize::MAX && vmap[v] != v2 {
                return false;
            }
            if vmap[v] == usize::MAX {
                vmap[v] = v2;
                queue.push((v, v2, e, e2));
            } else if vmap[v] == v2 {
                queue.push((v, v2, e, e2));
            }
        }
        if n == 0 && self.internal_count() > 0 {
            return self.internal_count() == 0;
        }
        let mut head = 0;
        while head < queue.len() {
            let (v, v2, e, e2) = queue[head];
            head += 1;
            let rot = &self.rotations[v];
            let rot2 = &other.rotations[v2];
            if rot.len() != rot2.len() {
                return false;
            }
            let p = match rot.iter().position(|&x| x == e) {
                Some(p) => p,
                None => return false,
            };
            let p2 = match rot2.iter().position(|&x| x == e2) {
                Some(p) => p,
                None => return false,
            };
            let len = rot.len();
            for step in 0..len {
                let a = rot[(p + step) % len];
                let b = if reflect {
                    rot2[(p2 + len - step % len) % len]
                } else {
                    rot2[(p2 + step) % len]
                };
                if emap[a] != usize::MAX && emap[a] != b {
                    return false;
                }
                let was_new = emap[a] == usize::MAX;
                emap[a] = b;
                match (self.other_end(a, v), other.other_end(b, v2)) {
                    (End::Boundary(i), End::Boundary(j)) => {
                        if bmap(i) != j {
                            return false;
                        }
                    }
                    (End::Internal(u), End::Internal(u2)) => {
                        if self.colors[u] != other.colors[u2] {
                            return false;
                        }
                        if vmap[u] == usize::MAX {
                            vmap[u] = u2;
                            queue.push((u, u2, a, b));
                        } else if vmap[u] != u2 {
                            return false;
                        } else if was_new {
                            queue.push((u, u2, a, b));
                        }
                    }
                    _ => return false,
                }
            }
        }
        emap.iter().all(|&e| e != usize::MAX) && {
            let mut seen = vec![false; other.edge_count()];
            emap.iter().all(|&e| !std::mem::replace(&mut seen[e], true))
        }
    }
}

/// Incremental construction of a [`DiskGraph`]; `build` runs full validation.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    n: usize,
    vertices: Vec<(String, Color)>,
    edges: Vec<(String, String, String)>,
    rotations: BTreeMap<String, Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { n, ..Default::default() }
    }

    pub fn vertex(&mut self, name: &str, color: Color) -> &mut Self {
        self.vertices.push((name.to_string(), color));
        self
    }

    pub fn edge(&mut self, id: &str, a: &str, b: &str) -> &mut Self {
        self.edges.push((id.to_string(), a.to_string(), b.to_string()));
        self
    }

    pub fn rotation(&mut self, vertex: &str, edge_ids: &[&str]) -> &mut Self {
        self.rotations
            .insert(vertex.to_string(), edge_ids.iter().map(|s| s.to_string()).collect());
        self
    }

    fn parse_endpoint(&self, name: &str, names: &BTreeMap<String, usize>) -> Result<End> {
        if let Some(rest) = name.strip_prefix('b') {
            if let Ok(i) = rest.parse::<usize>() {
                if i >= 1 && i <= self.n {
                    return Ok(End::Boundary(i - 1));
                }
                return Err(Error::UnknownVertex(name.to_string()));
            }
        }
        names
            .get(name)
            .map(|&v| End::Internal(v))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn build(&self) -> Result<DiskGraph> {
        // Vertex table in name order for determinism.
        let mut names: Vec<String> = self.vertices.iter().map(|(s, _)| s.clone()).collect();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateId(w[0].clone()));
            }
        }
        for name in &names {
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::UnknownVertex(name.clone()));
            }
            if let Some(rest) = name.strip_prefix('b') {
                if rest.parse::<usize>().is_ok() {
                    return Err(Error::DuplicateId(format!("{name} (reserved boundary name)")));
                }
            }
        }
        let index: BTreeMap<String, usize> =
            names.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut colors = vec![Color::Black; names.len()];
        for (name, color) in &self.vertices {
            colors[index[name]] = *color;
        }

        // Edge table in id order.
        let mut edge_rows: Vec<(String, End, End)> = Vec::with_capacity(self.edges.len());
        for (id, a, b) in &self.edges {
            if id.is_empty() || id.contains(char::is_whitespace) {
                return Err(Error::DuplicateId(id.clone()));
            }
            let ea = self.parse_endpoint(a, &index)?;
            let eb = self.parse_endpoint(b, &index)?;
            match (ea, eb) {
                (End::Boundary(_), End::Boundary(_)) => {
                    return Err(Error::BoundaryToBoundaryEdge(id.clone()))
                }
                (End::Internal(u), End::Internal(v)) => {
                    if u == v {
                        return Err(Error::LoopEdge(id.clone()));
                    }
                    if colors[u] == colors[v] {
                        return Err(Error::SameColorEdge {
                            edge: id.clone(),
                            color: colors[u].name(),
                        });
                    }
                }
                _ => {}
            }
            edge_rows.push((id.clone(), ea, eb));
        }
        edge_rows.sort_by(|x, y| x.0.cmp(&y.0));
        for w in edge_rows.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateId(w[0].0.clone()));
            }
        }

        // Strip isolated components (no boundary vertex attached).
        let mut attached = vec![false; names.len()];
        let mut dsu: Vec<usize> = (0..names.len()).collect();
        fn find(dsu: &mut [usize], mut x: usize) -> usize {
            while dsu[x] != x {
                dsu[x] = dsu[dsu[x]];
                x = dsu[x];
            }
            x
        }
        for (_, a, b) in &edge_rows {
            match (a, b) {
                (End::Internal(u), End::Internal(v)) => {
                    let (ru, rv) = (find(&mut dsu, *u), find(&mut dsu, *v));
                    dsu[ru] = rv;
                }
                (End::Boundary(_), End::Internal(v)) | (End::Internal(v), End::Boundary(_)) => {
                    attached[*v] = true;
                }
                _ => unreachable!(),
            }
        }
        let mut root_attached = vec![false; names.len()];
        for v in 0..names.len() {
            if attached[v] {
                let r = find(&mut dsu, v);
                root_attached[r] = true;
            }
        }
        let keep: Vec<bool> =
            (0..names.len()).map(|v| root_attached[find(&mut dsu, v)]).collect();
        let mut warnings = Vec::new();
        if keep.iter().any(|&k| !k) {
            let dropped: Vec<&str> = (0..names.len())
                .filter(|&v| !keep[v])
                .map(|v| names[v].as_str())
                .collect();
            warnings.push(format!(
                "stripped isolated component(s) with no boundary vertex: {}",
                dropped.join(", ")
            ));
        }
        let remap: Vec<usize> = {
            let mut next = 0usize;
            keep.iter()
                .map(|&k| {
                    if k {
                        next += 1;
                        next - 1
                    } else {
                        usize::MAX
                    }
                })
                .collect()
        };
        let kept_names: Vec<String> =
            names.iter().zip(&keep).filter(|(_, &k)| k).map(|(s, _)| s.clone()).collect();
        let kept_colors: Vec<Color> =
            colors.iter().zip(&keep).filter(|(_, &k)| k).map(|(&c, _)| c).collect();
        let kept_edges: Vec<Edge> = edge_rows
            .iter()
            .filter(|(_, a, b)| {
                let alive = |e: &End| match e {
                    End::Internal(v) => keep[*v],
                    End::Boundary(_) => true,
                };
                alive(a) && alive(b)
            })
            .map(|(id, a, b)| {
                let fix = |e: &End| match e {
                    End::Internal(v) => End::Internal(remap[*v]),
                    End::Boundary(i) => End::Boundary(*i),
                };
                Edge { id: id.clone(), ends: [fix(a), fix(b)] }
            })
            .collect();

        // Incidence and boundary degrees.
        let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); kept_names.len()];
        let mut bdeg = vec![0usize; self.n];
        let mut boundary_edges = vec![usize::MAX; self.n];
        for (e, edge) in kept_edges.iter().enumerate() {
            for &end in &edge.ends {
                match end {
                    End::Internal(v) => incidence[v].push(e),
                    End::Boundary(i) => {
                        bdeg[i] += 1;
                        boundary_edges[i] = e;
                    }
                }
            }
        }
        for i in 0..self.n {
            if bdeg[i] != 1 {
                return Err(Error::BoundaryDegree { vertex: i + 1, degree: bdeg[i] });
            }
        }

        // Rotations: required for degree >= 3, defaulted otherwise.
        let edge_index: BTreeMap<&str, usize> =
            kept_edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();
        let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(kept_names.len());
        for v in 0..kept_names.len() {
            let name = &kept_names[v];
            match self.rotations.get(name) {
                Some(ids) => {
                    let mut rot = Vec::with_capacity(ids.len());
                    for id in ids {
                        let &e = edge_index.get(id.as_str()).ok_or_else(|| Error::BadRotation {
                            vertex: name.clone(),
                            msg: format!("unknown edge `{id}`"),
                        })?;
                        rot.push(e);
                    }
                    let mut a = rot.clone();
                    let mut b = incidence[v].clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    if a != b {
                        return Err(Error::BadRotation {
                            vertex: name.clone(),
                            msg: "rotation is not a permutation of the incident edges".into(),
                        });
                    }
                    rotations.push(rot);
                }
                None => {
                    if incidence[v].len() > 2 {
                        return Err(Error::BadRotation {
                            vertex: name.clone(),
                            msg: format!(
                                "vertex has degree {} but no rotation line",
                                incidence[v].len()
                            ),
                        });
                    }
                    rotations.push(incidence[v].clone());
                }
            }
        }
        // Keep incidence in rotation order.
        let incidence = rotations.clone();

        let g = DiskGraph {
            n: self.n,
            names: kept_names,
            colors: kept_colors,
            edges: kept_edges,
            rotations,
            boundary_edges,
            incidence,
            warnings,
        };

        // Planarity: the boundary-contracted map must be a sphere map.
        if g.edge_count() > 0 {
            let fs = g.faces();
            let v = g.internal_count() as i64 + i64::from(g.n > 0);
            let euler = v - g.edge_count() as i64 + fs.count() as i64;
            if euler != 2 {
                return Err(Error::NonPlanar { got: euler });
            }
        }
        Ok(g)
    }
}

/// Parse the canonical graph file format.
///
/// Line-oriented, whitespace within lines is insignificant, `#` starts a
/// comment. Directives:
///
/// ```text
/// n 4                     boundary vertex count (b1..bn clockwise)
/// vertex w1 white         internal vertex and color
/// edge e1 b1 w1           edge id and its two endpoints
/// rot w1 e1 e2 e5         clockwise edge order (required for degree >= 3)
/// ```
pub fn parse_graph(text: &str) -> Result<DiskGraph> {
    let mut n: Option<usize> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut pending: Vec<(usize, Vec<String>)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<String> = line.split_whitespace().map(|s| s.to_string()).collect();
        if toks[0] == "n" {
            if n.is_some() {
                return Err(Error::Parse { line: lineno + 1, msg: "duplicate `n` directive".into() });
            }
            let v = toks
                .get(1)
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse { line: lineno + 1, msg: "expected `n <count>`".into() })?;
            if toks.len() != 2 {
                return Err(Error::Parse { line: lineno + 1, msg: "expected `n <count>`".into() });
            }
            n = Some(v);
            builder = Some(GraphBuilder::new(v));
        } else {
            pending.push((lineno + 1, toks));
        }
    }
    let mut builder = builder.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing `n` directive".into(),
    })?;
    for (lineno, toks) in pending {
        match toks[0].as_str() {
            "vertex" => {
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `vertex <id> <white|black>`".into(),
                    });
                }
                let color = match toks[2].as_str() {
                    "white" => Color::White,
                    "black" => Color::Black,
                    other => {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("unknown color `{other}`"),
                        })
                    }
                };
                builder.vertex(&toks[1], color);
            }
            "edge" => {
                if toks.len() != 4 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `edge <id> <end> <end>`".into(),
                    });
                }
                builder.edge(&toks[1], &toks[2], &toks[3]);
            }
            "rot" => {
                if toks.len() < 2 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `rot <vertex> <edge>...`".into(),
                    });
                }
                let ids: Vec<&str> = toks[2..].iter().map(|s| s.as_str()).collect();
                builder.rotation(&toks[1], &ids);
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    builder.build()
}
