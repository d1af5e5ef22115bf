//! Lattice-point counts, the Ehrhart polynomial, h*-vector, and volumes of
//! the matching polytope.
//!
//! The t-th dilate of the polytope is the set of nonnegative real vectors
//! whose vertex sums all equal t, so its lattice points are the nonnegative
//! integer solutions of the dilated equations. Counts are exact, via
//! depth-first assignment of edge multiplicities with per-vertex pruning;
//! the polynomial is recovered by exact interpolation through t = 0..d and
//! verified against an independent count at t = d+1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::DiskGraph;
use crate::polytope::build_polytope;

/// Number of lattice points in the t-th dilate: nonnegative integer vectors
/// over the edges with all internal vertex sums equal to `t`.
pub fn count_lattice_points(g: &DiskGraph, t: u32) -> u64 {
    let nv = g.internal_count();
    let ne = g.edge_count();
    if ne == 0 {
        return 1; // the zero vector in the empty coordinate space
    }
    // Edge order: complete vertices early. Process vertices in index order;
    // each vertex contributes its not-yet-scheduled edges.
    let mut order: Vec<usize> = Vec::with_capacity(ne);
    let mut scheduled = vec![false; ne];
    for v in 0..nv {
        for &e in g.incident(v) {
            if !scheduled[e] {
                scheduled[e] = true;
                order.push(e);
            }
        }
    }
    for e in 0..ne {
        if !scheduled[e] {
            order.push(e); // boundary-to-boundary edges cannot occur; safety
        }
    }
    // Remaining incident-edge counts as the scan proceeds.
    let mut remaining: Vec<u32> = (0..nv).map(|v| g.degree(v) as u32).collect();
    let mut sums = vec![0u32; nv];
    let t_total = t;

    fn rec(
        g: &DiskGraph,
        order: &[usize],
        pos: usize,
        t: u32,
        sums: &mut Vec<u32>,
        remaining: &mut Vec<u32>,
    ) -> u64 {
        if pos == order.len() {
            return 1;
        }
        let e = order[pos];
        let ends: Vec<usize> = g.internal_ends(e).collect();
        // Upper bound for this edge's multiplicity.
        let mut hi = t;
        for &v in &ends {
            hi = hi.min(t - sums[v]);
        }
        let mut total = 0u64;
        for x in 0..=hi {
            let mut ok = true;
            for &v in &ends {
                sums[v] += x;
                remaining[v] -= 1;
                if remaining[v] == 0 && sums[v] != t {
                    ok = false;
                }
            }
            if ok {
                total += rec(g, order, pos + 1, t, sums, remaining);
            }
            for &v in &ends {
                sums[v] -= x;
                remaining[v] += 1;
            }
        }
        total
    }
    rec(g, &order, 0, t_total, &mut sums, &mut remaining)
}

/// Ehrhart data of a nonempty matching polytope.
#[derive(Debug, Clone)]
pub struct EhrhartData {
    /// Polytope dimension.
    pub dim: i64,
    /// Counts `L(0), ..., L(dim)`.
    pub counts: Vec<u64>,
    /// Polynomial coefficients, constant term first.
    pub polynomial: Vec<BigRational>,
    /// Numerator coefficients of the series over `(1-z)^(dim+1)`, trailing
    /// zeros stripped.
    pub h_star: Vec<BigInt>,
    /// Leading coefficient of the polynomial.
    pub euclidean_volume: BigRational,
    /// `dim! *` Euclidean volume `= sum of h*`.
    pub normalized_volume: BigInt,
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Full Ehrhart computation: counts at 0..=d, interpolation, verification at
/// d+1, h*-vector and volumes.
pub fn ehrhart_data(g: &DiskGraph) -> Result<EhrhartData> {
    let poly = build_polytope(g)?;
    if poly.vertices.is_empty() {
        return Err(Error::EmptyPolytope("no matchings, so no Ehrhart data".into()));
    }
    let d = poly.dim.max(0) as u32;
    let counts: Vec<u64> = (0..=d).map(|t| count_lattice_points(g, t)).collect();

    // Newton forward differences: L(t) = sum_j D^j L(0) * C(t, j).
    let mut table: Vec<Vec<BigInt>> = vec![counts.iter().map(|&c| BigInt::from(c)).collect()];
    for j in 1..=d as usize {
        let prev = &table[j - 1];
        let row: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        table.push(row);
    }
    let deltas: Vec<BigInt> = table.iter().map(|row| row[0].clone()).collect();
    // Expand sum_j deltas[j]/j! * t(t-1)...(t-j+1) into monomial coefficients.
    let mut coeffs = vec![BigRational::zero(); d as usize + 1];
    let mut falling = vec![BigRational::one()]; // coefficients of t(t-1)..., constant first
    let mut factorial = BigInt::one();
    for (j, delta) in deltas.iter().enumerate() {
        if j > 0 {
            factorial *= BigInt::from(j as u64);
        }
        let scale = BigRational::new(delta.clone(), factorial.clone());
        for (i, c) in falling.iter().enumerate() {
            coeffs[i] += c * &scale;
        }
        // falling *= (t - j)
        let mut next = vec![BigRational::zero(); falling.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(j as i64));
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &shift;
        }
        falling = next;
    }
    // Independent verification at t = d + 1.
    let expected: BigRational = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut p = BigRational::one();
            for _ in 0..i {
                p *= BigRational::from_integer(BigInt::from(d + 1));
            }
            c * p
        })
        .sum();
    let actual = BigRational::from_integer(BigInt::from(count_lattice_points(g, d + 1)));
    if expected != actual {
        return Err(Error::Internal(format!(
            "count mismatch at t = {}: interpolation gives {expected}, count gives {actual}",
            d + 1
        )));
    }

    // h*: coefficients of (sum_t L(t) z^t)(1-z)^(d+1), i = 0..d.
    let mut h_star = Vec::with_capacity(d as usize + 1);
    for i in 0..=d as u64 {
        let mut acc = BigInt::zero();
        for j in 0..=i {
            let sign = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            acc += sign * binomial(d as u64 + 1, j) * BigInt::from(counts[(i - j) as usize]);
        }
        if acc.is_negative() {
            return Err(Error::Internal(format!("negative h* entry h*_{i} = {acc}")));
        }
        h_star.push(acc);
    }
    while h_star.len() > 1 && h_star.last().map(|x| x.is_zero()).unwrap_or(false) {
        h_star.pop();
    }

    let euclidean_volume = coeffs[d as usize].clone();
    let mut d_factorial = BigInt::one();
    for i in 2..=d as u64 {
        d_factorial *= BigInt::from(i);
    }
    let normalized = (&euclidean_volume * BigRational::from_integer(d_factorial)).to_integer();
    let h_sum: BigInt = h_star.iter().sum();
    if h_sum != normalized {
        return Err(Error::Internal(format!(
            "h* sum {h_sum} disagrees with normalized volume {normalized}"
        )));
    }
    Ok(EhrhartData {
        dim: poly.dim,
        counts,
        polynomial: coeffs,
        h_star,
        euclidean_volume,
        normalized_volume: normalized,
    })
}

/// The Ehrhart polynomial's coefficients, constant term first.
pub fn ehrhart_polynomial(g: &DiskGraph) -> Result<Vec<BigRational>> {
    Ok(ehrhart_data(g)?.polynomial)
}

/// The h*-vector.
pub fn hstar_vector(g: &DiskGraph) -> Result<Vec<BigInt>> {
    Ok(ehrhart_data(g)?.h_star)
}

/// Euclidean volume (leading Ehrhart coefficient) and normalized volume
/// (`dim!` times that; the degree of the associated toric variety).
pub fn volume_and_degree(g: &DiskGraph) -> Result<(BigRational, BigInt)> {
    let data = ehrhart_data(g)?;
    Ok((data.euclidean_volume, data.normalized_volume))
}
