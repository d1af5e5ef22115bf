//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Exponent vectors are indexed by the canonical edge order of the ambient
//! graph. Only nonzero coefficients are stored, keyed by exponent vector in
//! lexicographic order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `nvars` variables over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    /// A single term `coeff * x^exps`.
    pub fn monomial(exps: Vec<i32>, coeff: BigInt) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i32>, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    /// Substitute `x_i -> 1/x_i` for every flagged variable.
    pub fn invert_vars(&self, flags: &[bool]) -> LaurentPoly {
        debug_assert_eq!(flags.len(), self.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let exps: Vec<i32> =
                e.iter().zip(flags).map(|(&x, &f)| if f { -x } else { x }).collect();
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Exact evaluation at strictly positive rational arguments. Negative
    /// exponents are evaluated on the reciprocal, so positivity is required
    /// by the caller.
    pub fn evaluate(&self, args: &[BigRational]) -> BigRational {
        debug_assert_eq!(args.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, &k) in args.iter().zip(e.iter()) {
                if k == 0 {
                    continue;
                }
                let p = if k > 0 { x.clone() } else { x.recip() };
                for _ in 0..k.unsigned_abs() {
                    term *= &p;
                }
            }
            acc += term;
        }
        acc
    }

    /// True when every stored coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// The exponent vectors of the support.
    pub fn exponents(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.terms.keys()
    }

    /// Render against variable names, e.g. `x(e1)*x(e2)^-1 + 2`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> LaurentDisplay<'a> {
        LaurentDisplay { poly: self, names }
    }
}

pub struct LaurentDisplay<'a> {
    poly: &'a LaurentPoly,
    names: &'a [String],
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.poly.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !coeff.is_one() || exps.iter().all(|&e| e == 0) {
                factors.push(coeff.to_string());
            }
            for (j, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x({})", self.names[j])),
                    _ => factors.push(format!("x({})^{e}", self.names[j])),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_and_eval() {
        // p = x0 * x1^-1 + 2
        let mut p = LaurentPoly::monomial(vec![1, -1], BigInt::one());
        p.add_term(vec![0, 0], BigInt::from_i64(2).unwrap());
        let q = LaurentPoly::monomial(vec![0, 1], BigInt::one()); // x1
        let pq = p.mul(&q); // x0 + 2 x1
        assert_eq!(pq.term_count(), 2);
        let v = pq.evaluate(&[rat(1, 2), rat(3, 1)]);
        assert_eq!(v, rat(13, 2));
        // cancellation
        let minus = LaurentPoly::monomial(vec![1, 0], BigInt::from(-1));
        let cancelled = pq.add(&minus);
        assert_eq!(cancelled.term_count(), 1);
        assert_eq!(cancelled.coefficient(&[0, 1]), BigInt::from(2));
    }

    #[test]
    fn invert_vars_roundtrip() {
        let p = LaurentPoly::monomial(vec![2, -3], BigInt::from(5));
        let q = p.invert_vars(&[true, false]);
        assert_eq!(q.coefficient(&[-2, -3]), BigInt::from(5));
        assert_eq!(q.invert_vars(&[true, false]), p);
    }

    #[test]
    fn display_is_stable() {
        let mut p = LaurentPoly::monomial(vec![1, -1], BigInt::one());
        p.add_term(vec![0, 0], BigInt::from(3));
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(p.display(&names).to_string(), "3 + x(a)*x(b)^-1");
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec(
                (proptest::collection::vec(-3i32..=3, 3), -5i64..=5),
                0..6,
            )
            .prop_map(|terms| {
                let mut p = LaurentPoly::zero(3);
                for (exps, c) in terms {
                    p.add_term(exps, BigInt::from(c));
                }
                p
            })
        }

        fn weight_strategy() -> impl Strategy<Value = Vec<BigRational>> {
            proptest::collection::vec((1i64..=9, 1i64..=9), 3).prop_map(|pairs| {
                pairs
                    .into_iter()
                    .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                    .collect()
            })
        }

        proptest! {
            #[test]
            fn evaluation_is_a_ring_homomorphism(
                p in poly_strategy(),
                q in poly_strategy(),
                w in weight_strategy(),
            ) {
                let sum = p.add(&q);
                prop_assert_eq!(sum.evaluate(&w), p.evaluate(&w) + q.evaluate(&w));
                let prod = p.mul(&q);
                prop_assert_eq!(prod.evaluate(&w), p.evaluate(&w) * q.evaluate(&w));
            }

            #[test]
            fn multiplication_commutes(p in poly_strategy(), q in poly_strategy()) {
                prop_assert_eq!(p.mul(&q), q.mul(&p));
            }

            #[test]
            fn inversion_matches_reciprocal_evaluation(
                p in poly_strategy(),
                w in weight_strategy(),
                flags in proptest::collection::vec(any::<bool>(), 3),
            ) {
                let inverted = p.invert_vars(&flags);
                prop_assert_eq!(inverted.invert_vars(&flags), p.clone());
                let flipped: Vec<BigRational> = w
                    .iter()
                    .zip(&flags)
                    .map(|(x, &f)| if f { x.recip() } else { x.clone() })
                    .collect();
                prop_assert_eq!(inverted.evaluate(&w), p.evaluate(&flipped));
            }
        }
    }
}
