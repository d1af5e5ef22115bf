//! The matching polytope of a disk graph: vertices, inequality description,
//! dimension, the face lattice via elementary subgraphs, facets via edge
//! equivalence, and the edge criterion.
//!
//! The polytope is the convex hull of the 0-1 characteristic vectors of the
//! almost perfect matchings; equivalently the solution set of `x_e >= 0` and
//! `sum_{e at v} x_e = 1` per internal vertex. Its faces correspond to the
//! elementary subgraphs (unions of matchings) ordered by inclusion, so the
//! whole lattice is computed by closing the matching set under unions.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{dart, dart_twin, Color, DiskGraph, End};
use crate::matching::{enumerate_matchings, Matching};
use crate::sets::EdgeSet;

/// Exact rank of an integer matrix by fraction-free Gaussian elimination.
/// Entries stay bounded by minors of the input, which for our 0/±1 matrices
/// fit comfortably in `i128`.
pub(crate) fn matrix_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = 1i128;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let pivot = (row..rows).find(|&r| m[r][col] != 0);
        let p = match pivot {
            Some(p) => p,
            None => continue,
        };
        m.swap(row, p);
        for r in row + 1..rows {
            for c in col + 1..cols {
                m[r][c] = m[row][col]
                    .checked_mul(m[r][c])
                    .and_then(|x| x.checked_sub(m[r][col].checked_mul(m[row][c])?))
                    .and_then(|x| x.checked_div(prev))
                    .expect("rank arithmetic overflow");
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        row += 1;
        rank += 1;
    }
    rank
}

/// Affine dimension of a set of integer points (-1 for the empty set).
pub fn affine_dimension(points: &[Vec<i64>]) -> i64 {
    match points.split_first() {
        None => -1,
        Some((first, rest)) => {
            let m: Vec<Vec<i128>> = rest
                .iter()
                .map(|p| p.iter().zip(first).map(|(&a, &b)| (a - b) as i128).collect())
                .collect();
            matrix_rank(m) as i64
        }
    }
}

/// The matching polytope in vertex description.
#[derive(Debug, Clone)]
pub struct MatchingPolytope {
    /// Vertices, as matchings in canonical order.
    pub vertices: Vec<Matching>,
    /// Affine dimension (-1 when empty).
    pub dim: i64,
}

/// Vertex list and exact affine dimension of the matching polytope.
pub fn build_polytope(g: &DiskGraph) -> Result<MatchingPolytope> {
    let vertices = enumerate_matchings(g)?;
    let points: Vec<Vec<i64>> = vertices.iter().map(|m| m.char_vector(g)).collect();
    Ok(MatchingPolytope { dim: affine_dimension(&points), vertices })
}

/// Whether every edge of the graph is used by some matching (the hypothesis
/// of the dimension formula and of the facet machinery).
pub fn every_edge_used(g: &DiskGraph, matchings: &[Matching]) -> bool {
    let used = matchings.iter().fold(EdgeSet::empty(), |acc, m| acc.union(m.edge_set()));
    used.len() == g.edge_count()
}

/// Rank-based dimension next to the face-count formula `#Faces - 1`.
/// The two agree whenever every edge is used in some matching; the flag
/// reports whether that hypothesis held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionCrosscheck {
    pub rank_dim: i64,
    pub faces_minus_one: i64,
    pub hypothesis_holds: bool,
}

pub fn dimension_crosscheck(g: &DiskGraph) -> Result<DimensionCrosscheck> {
    let poly = build_polytope(g)?;
    let faces = g.faces().count() as i64;
    Ok(DimensionCrosscheck {
        rank_dim: poly.dim,
        faces_minus_one: faces - 1,
        hypothesis_holds: every_edge_used(g, &poly.vertices),
    })
}

/// Membership in the inequality description: all coordinates nonnegative and
/// unit vertex sums. Coordinates are indexed by canonical edge order.
pub fn membership(g: &DiskGraph, x: &[BigRational]) -> Result<bool> {
    if x.len() != g.edge_count() {
        return Err(Error::BadCoordinates(format!(
            "{} coordinates for {} edges",
            x.len(),
            g.edge_count()
        )));
    }
    if x.iter().any(|v| v < &BigRational::zero()) {
        return Ok(false);
    }
    for v in 0..g.internal_count() {
        let sum: BigRational = g.incident(v).iter().map(|&e| x[e].clone()).sum();
        if !sum.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One face of the matching polytope: an elementary subgraph together with
/// the matchings it contains and its affine dimension.
#[derive(Debug, Clone)]
pub struct Face {
    pub edges: EdgeSet,
    /// Indices into the canonical matching list.
    pub matchings: Vec<usize>,
    pub dim: i64,
}

/// The full face lattice, graded by dimension. `faces` is sorted by
/// (dimension, edge set); the empty face sits at dimension -1 and the whole
/// polytope at dimension `dim`.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
    pub dim: i64,
    /// Face counts for dimensions `0..dim` (the polytope itself excluded).
    pub f_vector: Vec<u64>,
}

impl FaceLattice {
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Faces of one dimension, in canonical order.
    pub fn faces_of_dim(&self, d: i64) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    /// Inclusion-maximal proper subfaces (the covered faces) of face `i`:
    /// by gradedness these are the contained faces one dimension down.
    pub fn covered_by(&self, i: usize) -> Vec<usize> {
        let f = &self.faces[i];
        self.faces
            .iter()
            .enumerate()
            .filter(|(_, g)| g.dim == f.dim - 1 && g.edges.is_subset_of(f.edges))
            .map(|(j, _)| j)
            .collect()
    }

    /// Line-delimited export: one record per face with its edge set,
    /// dimension and covered faces (by index in this listing), followed by
    /// the f-vector.
    pub fn export(&self, g: &DiskGraph) -> Vec<String> {
        let mut out = Vec::with_capacity(self.faces.len() + 1);
        for (i, f) in self.faces.iter().enumerate() {
            let ids: Vec<&str> =
                f.edges.iter().map(|e| g.edges()[e].id.as_str()).collect();
            let covered: Vec<String> =
                self.covered_by(i).iter().map(|j| j.to_string()).collect();
            out.push(format!(
                "face {i} dim={} edges={{{}}} covers={{{}}}",
                f.dim,
                ids.join(","),
                covered.join(",")
            ));
        }
        let fv: Vec<String> = self.f_vector.iter().map(|x| x.to_string()).collect();
        out.push(format!("fvector {}", fv.join(",")));
        out
    }
}

/// All elementary subgraphs (unions of matchings, plus the empty face),
/// each with dimension by exact affine rank; the f-vector lists dimensions
/// `0..dim`.
pub fn face_lattice(g: &DiskGraph) -> Result<FaceLattice> {
    let matchings = enumerate_matchings(g)?;
    let generators: Vec<EdgeSet> = matchings.iter().map(|m| m.edge_set()).collect();
    // Union closure, seeded with the empty set (the empty face) and closed
    // under unions with single matchings.
    let mut seen: HashSet<EdgeSet> = HashSet::new();
    let mut queue: Vec<EdgeSet> = vec![EdgeSet::empty()];
    seen.insert(EdgeSet::empty());
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head];
        head += 1;
        for m in &generators {
            let u = cur.union(*m);
            if seen.insert(u) {
                queue.push(u);
            }
        }
    }
    let char_vectors: Vec<Vec<i64>> = matchings.iter().map(|m| m.char_vector(g)).collect();
    let mut faces: Vec<Face> = queue
        .into_iter()
        .map(|edges| {
            let contained: Vec<usize> = (0..matchings.len())
                .filter(|&i| generators[i].is_subset_of(edges))
                .collect();
            let pts: Vec<Vec<i64>> =
                contained.iter().map(|&i| char_vectors[i].clone()).collect();
            Face { edges, dim: affine_dimension(&pts), matchings: contained }
        })
        .collect();
    faces.sort_by_key(|f| (f.dim, f.edges));
    let dim = faces.last().map(|f| f.dim).unwrap_or(-1);
    let mut f_vector = vec![0u64; dim.max(0) as usize];
    for f in &faces {
        if f.dim >= 0 && f.dim < dim {
            f_vector[f.dim as usize] += 1;
        }
    }
    Ok(FaceLattice { faces, dim, f_vector })
}

/// Functional edge equivalence: two edges are equivalent when exactly the
/// same matchings contain them. Only edges used by at least one matching
/// participate; the classes are returned in canonical order.
pub fn functional_edge_classes(g: &DiskGraph, matchings: &[Matching]) -> Vec<Vec<usize>> {
    let mut signature: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for e in 0..g.edge_count() {
        let sig: Vec<usize> =
            (0..matchings.len()).filter(|&i| matchings[i].contains(e)).collect();
        if sig.is_empty() {
            continue;
        }
        signature.entry(sig).or_default().push(e);
    }
    let mut classes: Vec<Vec<usize>> = signature.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    classes
}

/// A facet: an edge equivalence class whose removal leaves an elementary
/// subgraph, together with that subgraph.
#[derive(Debug, Clone)]
pub struct Facet {
    pub class: Vec<usize>,
    pub subgraph: EdgeSet,
}

/// Facets of the matching polytope. When some edge of `g` is unused the
/// computation restricts to the union of all matchings first.
pub fn facets(g: &DiskGraph) -> Result<Vec<Facet>> {
    let matchings = enumerate_matchings(g)?;
    let ambient = matchings.iter().fold(EdgeSet::empty(), |acc, m| acc.union(m.edge_set()));
    let classes = functional_edge_classes(g, &matchings);
    let mut out = Vec::new();
    for class in classes {
        let removed = EdgeSet::from_iter(class.iter().copied());
        // Union of the matchings avoiding the class: the candidate facet is
        // elementary exactly when that union is everything else.
        let union_avoiding = matchings
            .iter()
            .filter(|m| m.edge_set().intersect(removed).is_empty())
            .fold(EdgeSet::empty(), |acc, m| acc.union(m.edge_set()));
        if union_avoiding == ambient.minus(removed) && !union_avoiding.is_empty() {
            out.push(Facet { class, subgraph: union_avoiding });
        }
    }
    Ok(out)
}

/// The ordered pair of faces separated by an edge, relative to crossing the
/// edge with its nominally black endpoint kept to the left. Two edges with
/// equal pairs separate the same faces with the same orientation.
pub fn edge_face_pair(g: &DiskGraph, e: usize) -> (usize, usize) {
    let fs = g.faces();
    // The black-to-white dart of e: tail nominally black.
    let black_first = g.end_color(e, 0) == Color::Black;
    let d = dart(e, black_first);
    (fs.face_of(d), fs.face_of(dart_twin(d)))
}

/// Geometric edge equivalence: same separated face pair with the same
/// orientation. Under the all-edges-used hypothesis this agrees with
/// [`functional_edge_classes`].
pub fn geometric_edge_equivalence(g: &DiskGraph, e1: usize, e2: usize) -> bool {
    edge_face_pair(g, e1) == edge_face_pair(g, e2)
}

/// Number of regions into which an edge subset divides the disk. The rim of
/// the disk participates: it is split into arcs by the boundary vertices.
pub fn region_count(g: &DiskGraph, edges: EdgeSet) -> usize {
    let n = g.n();
    // Map vertices: boundary 0..n, then internal vertices incident to the
    // subset. With n = 0 there is no rim; fall back to counting sphere faces
    // of the subset alone plus the ambient region.
    let nv = g.internal_count();
    let mut vmap = vec![usize::MAX; nv];
    let mut next = n;
    for e in edges.iter() {
        for v in g.internal_ends(e) {
            if vmap[v] == usize::MAX {
                vmap[v] = next;
                next += 1;
            }
        }
    }
    // Darts: subset edges keep ids 2e, 2e+1; rim arcs get fresh ids.
    // arc i joins boundary i to boundary (i+1) mod n, darts 2E+2i (forward).
    let ne = g.edge_count();
    let total_darts = 2 * ne + 2 * n;
    let mut origin = vec![usize::MAX; total_darts];
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); next];
    for v in 0..nv {
        if vmap[v] == usize::MAX {
            continue;
        }
        for &e in g.rotation(v) {
            if !edges.contains(e) {
                continue;
            }
            let d = dart(e, g.edges()[e].ends[0] == End::Internal(v));
            origin[d] = vmap[v];
            rot[vmap[v]].push(d);
        }
    }
    if n > 0 {
        for i in 0..n {
            let fwd = 2 * ne + 2 * i; // i -> i+1 (clockwise)
            let bwd = fwd + 1;
            origin[fwd] = i;
            origin[bwd] = (i + 1) % n;
        }
        for i in 0..n {
            // Clockwise around boundary vertex i as drawn: the arc toward
            // the next boundary vertex, then the leg into the disk (if it
            // lies in the subset), then the arc toward the previous vertex.
            let to_next = 2 * ne + 2 * i;
            let to_prev = 2 * ne + 2 * ((i + n - 1) % n) + 1;
            rot[i].push(to_next);
            let leg = g.boundary_edge(i);
            if edges.contains(leg) {
                let d = dart(leg, g.edges()[leg].ends[0] == End::Boundary(i));
                origin[d] = i;
                rot[i].push(d);
            }
            rot[i].push(to_prev);
        }
    }
    // Compact: drop unused darts by tracing only assigned ones.
    let (faces, _) = crate::graph::trace_faces(&rot, &origin);
    // Components of the configuration (rim plus subset edges).
    let mut dsu: Vec<usize> = (0..next).collect();
    fn find(dsu: &mut [usize], mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    let mut vertices_present: BTreeSet<usize> = (0..n).collect();
    let mut unions = 0usize;
    if n > 0 {
        for i in 0..n {
            let (a, b) = (i, (i + 1) % n);
            let (ra, rb) = (find(&mut dsu, a), find(&mut dsu, b));
            if ra != rb {
                dsu[ra] = rb;
                unions += 1;
            }
        }
    }
    for e in edges.iter() {
        let ends: Vec<usize> = g.edges()[e]
            .ends
            .iter()
            .map(|&end| match end {
                End::Boundary(i) => i,
                End::Internal(v) => vmap[v],
            })
            .collect();
        vertices_present.extend(ends.iter().copied());
        let (ra, rb) = (find(&mut dsu, ends[0]), find(&mut dsu, ends[1]));
        if ra != rb {
            dsu[ra] = rb;
            unions += 1;
        }
    }
    if vertices_present.is_empty() {
        return 1; // bare disk
    }
    let components = vertices_present.len() - unions;
    // Sphere faces of a multi-component planar map overcount merged regions:
    // each extra component floats inside another region. Subtract the outer
    // region (outside the rim) when the rim exists.
    let sphere_faces = faces.len();
    let regions = sphere_faces - (components - 1);
    if n > 0 {
        regions - 1
    } else {
        regions
    }
}

/// Edge criterion: a face is a 1-dimensional face of the polytope exactly
/// when its affine dimension is 1; geometrically, exactly when its edges cut
/// the disk into two regions.
pub fn is_edge_face(face: &Face) -> bool {
    face.dim == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn triv_path() -> DiskGraph {
        parse_graph(
            "n 2
             vertex w1 white
             vertex u1 black
             edge e1 b1 w1
             edge e2 w1 u1
             edge e3 u1 b2",
        )
        .unwrap()
    }

    fn g24() -> DiskGraph {
        parse_graph(
            "n 4
             vertex w1 white
             vertex u1 black
             vertex w2 white
             vertex u2 black
             edge l1 b1 w1
             edge l2 b2 u1
             edge l3 b3 w2
             edge l4 b4 u2
             edge s12 w1 u1
             edge s23 u1 w2
             edge s34 w2 u2
             edge s41 u2 w1
             rot w1 l1 s12 s41
             rot u1 l2 s23 s12
             rot w2 l3 s34 s23
             rot u2 l4 s41 s34",
        )
        .unwrap()
    }

    #[test]
    fn segment_polytope() {
        let g = triv_path();
        let p = build_polytope(&g).unwrap();
        assert_eq!(p.vertices.len(), 2);
        assert_eq!(p.dim, 1);
        let cc = dimension_crosscheck(&g).unwrap();
        assert_eq!((cc.rank_dim, cc.faces_minus_one), (1, 1));
        assert!(cc.hypothesis_holds);
    }

    #[test]
    fn g24_dimension_and_fvector() {
        let g = g24();
        let p = build_polytope(&g).unwrap();
        assert_eq!(p.dim, 4);
        let fl = face_lattice(&g).unwrap();
        assert_eq!(fl.f_vector, vec![7, 17, 18, 8]);
        // lattice sanity: empty face, full face
        assert_eq!(fl.faces.first().unwrap().dim, -1);
        assert_eq!(fl.faces.last().unwrap().dim, 4);
        assert_eq!(fl.face_count() as u64, 7 + 17 + 18 + 8 + 2);
    }

    #[test]
    fn membership_basics() {
        let g = g24();
        let p = build_polytope(&g).unwrap();
        for m in &p.vertices {
            let x: Vec<BigRational> = m
                .char_vector(&g)
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect();
            assert!(membership(&g, &x).unwrap());
        }
        let zeros = vec![BigRational::zero(); g.edge_count()];
        assert!(!membership(&g, &zeros).unwrap());
        // midpoint of the two triv-path vertices
        let g = triv_path();
        let p = build_polytope(&g).unwrap();
        let a = p.vertices[0].char_vector(&g);
        let b = p.vertices[1].char_vector(&g);
        let mid: Vec<BigRational> = a
            .iter()
            .zip(&b)
            .map(|(&x, &y)| {
                BigRational::new((x + y).into(), 2.into())
            })
            .collect();
        assert!(membership(&g, &mid).unwrap());
    }

    #[test]
    fn facet_counts() {
        let g = triv_path();
        let fs = facets(&g).unwrap();
        assert_eq!(fs.len(), 2);
        let classes = functional_edge_classes(&g, &enumerate_matchings(&g).unwrap());
        // {e1,e3} and {e2}
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0], vec![0, 2]);
        assert_eq!(classes[1], vec![1]);

        let g = g24();
        assert_eq!(facets(&g).unwrap().len(), 8);
    }

    #[test]
    fn geometric_equivalence_matches_functional_on_g24() {
        for g in [triv_path(), g24()] {
            let ms = enumerate_matchings(&g).unwrap();
            assert!(every_edge_used(&g, &ms));
            let classes = functional_edge_classes(&g, &ms);
            let class_of = |e: usize| classes.iter().position(|c| c.contains(&e)).unwrap();
            for e1 in 0..g.edge_count() {
                for e2 in 0..g.edge_count() {
                    assert_eq!(
                        geometric_edge_equivalence(&g, e1, e2),
                        class_of(e1) == class_of(e2),
                        "edges {} and {}",
                        g.edges()[e1].id,
                        g.edges()[e2].id
                    );
                }
            }
        }
    }

    #[test]
    fn triv_path_edge_pair_examples() {
        let g = triv_path();
        assert!(geometric_edge_equivalence(&g, 0, 2)); // e1 vs e3
        assert!(!geometric_edge_equivalence(&g, 0, 1)); // e1 vs e2
    }

    #[test]
    fn region_counts() {
        let g = triv_path();
        // single middle edge: still one region
        assert_eq!(region_count(&g, EdgeSet::from_iter([1])), 1);
        // the whole path cuts the disk in two
        assert_eq!(region_count(&g, EdgeSet::from_iter([0, 1, 2])), 2);
        // nothing: one region
        assert_eq!(region_count(&g, EdgeSet::empty()), 1);

        let g = g24();
        let all = EdgeSet::from_iter(0..g.edge_count());
        assert_eq!(region_count(&g, all), 5);
        // the square alone: inside + outside = 2 regions
        let square = EdgeSet::from_iter((0..g.edge_count()).filter(|&e| {
            let id = &g.edges()[e].id;
            id.starts_with('s')
        }));
        assert_eq!(region_count(&g, square), 2);
    }

    #[test]
    fn lattice_export_is_graded_and_complete() {
        let g = triv_path();
        let fl = face_lattice(&g).unwrap();
        let lines = fl.export(&g);
        // empty face, two vertices, the segment, then the f-vector line
        assert_eq!(lines.len(), 5);
        assert!(lines[0].contains("dim=-1"));
        assert!(lines.last().unwrap().starts_with("fvector 2"));
        // the segment covers both vertices
        assert!(lines[3].contains("covers={1,2}"));
    }

    #[test]
    fn edge_faces_match_region_criterion_on_g24() {
        let g = g24();
        let fl = face_lattice(&g).unwrap();
        let mut edge_count = 0;
        for f in &fl.faces {
            if is_edge_face(f) {
                edge_count += 1;
            }
            if f.dim >= 0 && !f.edges.is_empty() {
                let r = region_count(&g, f.edges);
                assert_eq!(is_edge_face(f), r == 2, "face {:?}", f.edges.indices());
            }
        }
        assert_eq!(edge_count, 17);
    }
}
