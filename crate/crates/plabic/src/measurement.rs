//! Boundary measurements: symbolic Pluecker coordinates from the flow
//! formula, exact positive evaluation, orientation independence, and the
//! Newton polytope of an orientation.
//!
//! For a perfect orientation with source set `I`, the Pluecker coordinate
//! `p_J` is the sum over flows from `I` to `J` of the flow's weight. The
//! weight is the Laurent monomial whose exponent is +1 on flow edges
//! directed white-to-black and -1 on flow edges directed black-to-white
//! (boundary endpoints count with the opposite color of their internal
//! neighbor). Equivalently: -1 exactly on the flow edges that lie in the
//! matching of the orientation, which makes the exponent of a flow equal to
//! `x(M') - x(M)` for the matching `M'` reached by reversing it.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::DiskGraph;
use crate::laurent::LaurentPoly;
use crate::matching::{enumerate_flows, orientation_to_matching, Flow, Orientation};
use crate::sets::BoundarySet;

/// The exponent vector of a flow's weight in a fixed orientation: +1 on flow
/// edges outside the orientation's matching, -1 on flow edges inside it.
pub fn flow_exponent(g: &DiskGraph, o: &Orientation, f: &Flow) -> Vec<i32> {
    let m = orientation_to_matching(g, o);
    (0..g.edge_count())
        .map(|e| {
            if !f.edges.contains(e) {
                0
            } else if m.contains(e) {
                -1
            } else {
                1
            }
        })
        .collect()
}

/// All nonzero Pluecker coordinates of an orientation, as Laurent
/// polynomials keyed by destination set. Coefficients of coinciding
/// exponent vectors add (no fixture exhibits a collision; see the crate
/// tests, which scan for one).
pub fn plucker_polynomials(
    g: &DiskGraph,
    o: &Orientation,
) -> Result<BTreeMap<BoundarySet, LaurentPoly>> {
    BoundarySet::check_capacity(g.n())?;
    let flows = enumerate_flows(g, o)?;
    let mut out: BTreeMap<BoundarySet, LaurentPoly> = BTreeMap::new();
    for f in &flows {
        let exps = flow_exponent(g, o, f);
        out.entry(f.destination)
            .or_insert_with(|| LaurentPoly::zero(g.edge_count()))
            .add_term(exps, BigInt::one());
    }
    Ok(out)
}

/// A projective vector of evaluated Pluecker coordinates, indexed by
/// k-subsets of the boundary. Entries absent from the map are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerVector {
    pub k: usize,
    pub n: usize,
    entries: BTreeMap<BoundarySet, BigRational>,
}

impl PluckerVector {
    pub fn entries(&self) -> impl Iterator<Item = (&BoundarySet, &BigRational)> {
        self.entries.iter()
    }

    pub fn get(&self, j: &BoundarySet) -> BigRational {
        self.entries.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Subsets with strictly positive entries.
    pub fn support(&self) -> BTreeSet<BoundarySet> {
        self.entries.iter().filter(|(_, v)| !v.is_zero()).map(|(j, _)| *j).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(|v| v.is_zero())
    }

    /// Equality up to a common positive scalar: same support, and all cross
    /// ratios against a common reference entry agree exactly.
    pub fn projectively_equal(&self, other: &PluckerVector) -> bool {
        if self.k != other.k || self.n != other.n {
            return false;
        }
        let sup = self.support();
        if sup != other.support() {
            return false;
        }
        let reference = match sup.iter().next() {
            Some(j) => *j,
            None => return true,
        };
        let (a0, b0) = (self.get(&reference), other.get(&reference));
        sup.iter().all(|j| self.get(j) * &b0 == other.get(j) * &a0)
    }
}

/// Evaluate all Pluecker coordinates at strictly positive edge weights
/// (indexed by canonical edge order). Errors on any nonpositive weight.
pub fn evaluate_plucker(
    g: &DiskGraph,
    o: &Orientation,
    weights: &[BigRational],
) -> Result<PluckerVector> {
    if weights.len() != g.edge_count() {
        return Err(Error::BadCoordinates(format!(
            "{} weights for {} edges",
            weights.len(),
            g.edge_count()
        )));
    }
    for (e, w) in weights.iter().enumerate() {
        if !w.is_positive() {
            return Err(Error::NonPositiveWeight(g.edges()[e].id.clone()));
        }
    }
    let polys = plucker_polynomials(g, o)?;
    let k = g.graph_type()?.k;
    let mut entries = BTreeMap::new();
    for (j, p) in &polys {
        entries.insert(*j, p.evaluate(weights));
    }
    Ok(PluckerVector { k, n: g.n(), entries })
}

/// Proposition check: two perfect orientations evaluate to projectively
/// equal Pluecker vectors at any positive weights.
pub fn orientation_invariance_check(
    g: &DiskGraph,
    o1: &Orientation,
    o2: &Orientation,
    weights: &[BigRational],
) -> Result<bool> {
    let v1 = evaluate_plucker(g, o1, weights)?;
    let v2 = evaluate_plucker(g, o2, weights)?;
    Ok(v1.projectively_equal(&v2))
}

/// The exponent-vector set of all flows of an orientation: the vertex set of
/// the orientation's Newton polytope, which is the matching polytope
/// translated by minus the characteristic vector of the orientation's
/// matching.
pub fn newton_polytope(g: &DiskGraph, o: &Orientation) -> Result<BTreeSet<Vec<i32>>> {
    let flows = enumerate_flows(g, o)?;
    Ok(flows.iter().map(|f| flow_exponent(g, o, f)).collect())
}
