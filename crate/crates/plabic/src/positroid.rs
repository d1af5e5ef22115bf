//! The positroid of a disk graph, its matroid polytope, and the projection
//! from the matching polytope onto it.
//!
//! The bases are the source sets of the perfect orientations. They are also
//! readable from matchings as the covered boundary vertices, provided every
//! boundary vertex has a white neighbor; the computation normalizes the
//! graph to that convention and checks that both routes agree.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::DiskGraph;
use crate::matching::{
    enumerate_matchings, enumerate_orientations, matching_to_orientation, Orientation,
};
use crate::measurement::plucker_polynomials;
use crate::sets::BoundarySet;

/// A positroid: the matroid whose bases are the perfect-orientation source
/// sets of some disk graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Positroid {
    pub k: usize,
    pub n: usize,
    pub bases: Vec<BoundarySet>,
}

impl Positroid {
    pub fn contains(&self, j: &BoundarySet) -> bool {
        self.bases.binary_search(j).is_ok()
    }

    /// Exhaustive basis-exchange check; feasible at the scales this crate
    /// targets and used by the test suites.
    pub fn basis_exchange_holds(&self) -> bool {
        for b1 in &self.bases {
            for b2 in &self.bases {
                for x in b1.minus(*b2).iter() {
                    let found = b2.minus(*b1).iter().any(|y| {
                        let mut cand = b1.minus(BoundarySet::from_iter([x]));
                        cand.insert(y);
                        self.contains(&cand)
                    });
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Bases by two routes: source sets over all perfect orientations, and
/// matched boundary sets over all matchings of the boundary-normalized
/// graph. The routes must agree; disagreement is an internal error.
pub fn positroid_bases(g: &DiskGraph) -> Result<Positroid> {
    BoundarySet::check_capacity(g.n())?;
    let ty = g.graph_type()?;
    let mut from_sources: Vec<BoundarySet> = enumerate_orientations(g)?
        .iter()
        .map(|o| o.source_set(g))
        .collect();
    from_sources.sort();
    from_sources.dedup();

    let normalized = g.normalize_boundary()?;
    let mut from_matchings: Vec<BoundarySet> = enumerate_matchings(&normalized)?
        .iter()
        .map(|m| m.boundary_set(&normalized))
        .collect();
    from_matchings.sort();
    from_matchings.dedup();

    if from_sources != from_matchings {
        return Err(Error::Internal(format!(
            "positroid routes disagree: {} source sets vs {} matched boundary sets",
            from_sources.len(),
            from_matchings.len()
        )));
    }
    if let Some(bad) = from_sources.iter().find(|b| b.len() != ty.k) {
        return Err(Error::Internal(format!(
            "source set {bad} has size {} but the graph type is {ty}",
            bad.len()
        )));
    }
    Ok(Positroid { k: ty.k, n: ty.n, bases: from_sources })
}

/// Vertex set of the matroid polytope: the 0-1 indicator vectors of the
/// bases, in the hyperplane where coordinates sum to `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidPolytopeData {
    pub n: usize,
    pub vertices: Vec<(BoundarySet, Vec<i64>)>,
}

pub fn matroid_polytope(p: &Positroid) -> MatroidPolytopeData {
    let vertices = p
        .bases
        .iter()
        .map(|b| {
            let v: Vec<i64> = (0..p.n).map(|i| i64::from(b.contains(i))).collect();
            (*b, v)
        })
        .collect();
    MatroidPolytopeData { n: p.n, vertices }
}

/// The vertex-level projection from the matching polytope to the matroid
/// polytope: each matching goes to the source set of its orientation.
#[derive(Debug, Clone)]
pub struct PsiProjection {
    /// Per matching (canonical order): its image basis.
    pub images: Vec<BoundarySet>,
    /// Fibers over each basis: matching indices.
    pub fibers: BTreeMap<BoundarySet, Vec<usize>>,
}

pub fn project_psi(g: &DiskGraph) -> Result<PsiProjection> {
    let matchings = enumerate_matchings(g)?;
    let mut images = Vec::with_capacity(matchings.len());
    let mut fibers: BTreeMap<BoundarySet, Vec<usize>> = BTreeMap::new();
    for (i, m) in matchings.iter().enumerate() {
        let b = matching_to_orientation(g, m).source_set(g);
        images.push(b);
        fibers.entry(b).or_default().push(i);
    }
    Ok(PsiProjection { images, fibers })
}

/// Exponent-vector set of the Pluecker polynomial `p_J`: the Newton polytope
/// of the fiber of the projection over the basis `J`, translated by minus
/// the orientation's matching vector. Empty when `J` is not a basis.
pub fn fiber_newton_polytope(
    g: &DiskGraph,
    o: &Orientation,
    j: &BoundarySet,
) -> Result<std::collections::BTreeSet<Vec<i32>>> {
    let polys = plucker_polynomials(g, o)?;
    Ok(match polys.get(j) {
        Some(p) => p.exponents().cloned().collect(),
        None => Default::default(),
    })
}
