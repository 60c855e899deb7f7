//! Finite graded vector spaces and brute-force Euler characteristics of their
//! tensor and symmetric powers.
//!
//! These routines enumerate bases explicitly and never use a binomial
//! formula, so they serve as an oracle for [`crate::surface::s_chi`].

use num_bigint::BigInt;
use num_traits::Zero;

/// A graded space given by `(degree, dimension)` pairs. Repeated degrees add.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSpace {
    /// Degree of each basis vector.
    basis: Vec<i64>,
}

impl GradedSpace {
    pub fn new(dims: &[(i64, usize)]) -> Self {
        let mut basis = Vec::new();
        for &(deg, dim) in dims {
            basis.extend(std::iter::repeat_n(deg, dim));
        }
        GradedSpace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn chi(&self) -> i64 {
        self.basis.iter().map(|&d| if d.rem_euclid(2) == 0 { 1 } else { -1 }).sum()
    }

    /// Graded tensor product, built from pairs of basis vectors.
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let mut basis = Vec::with_capacity(self.dim() * other.dim());
        for &p in &self.basis {
            for &q in &other.basis {
                basis.push(p + q);
            }
        }
        GradedSpace { basis }
    }

    /// Basis of the `m`-th graded symmetric power.
    ///
    /// Under the cohomological sign rule a transposition of two vectors of
    /// degrees `p, q` acts with sign `(-1)^{pq}`. On coinvariants this makes
    /// even vectors commute and odd vectors anticommute, so a basis is given
    /// by non-decreasing index sequences in which odd vectors appear at most
    /// once. Returns the total degree of each such monomial.
    pub fn sym_power_basis(&self, m: usize) -> Vec<i64> {
        let mut out = Vec::new();
        self.extend_monomials(0, m, 0, &mut out);
        out
    }

    fn extend_monomials(&self, start: usize, remaining: usize, degree: i64, out: &mut Vec<i64>) {
        if remaining == 0 {
            out.push(degree);
            return;
        }
        for idx in start..self.basis.len() {
            let d = self.basis[idx];
            let odd = d.rem_euclid(2) == 1;
            // an odd vector may not repeat
            let next = if odd { idx + 1 } else { idx };
            self.extend_monomials(next, remaining - 1, degree + d, out);
        }
    }
}

/// Euler characteristic of `S^m V` by explicit basis enumeration.
pub fn graded_sym_chi_oracle(dims: &[(i64, usize)], m: usize) -> BigInt {
    let v = GradedSpace::new(dims);
    v.sym_power_basis(m)
        .into_iter()
        .fold(BigInt::zero(), |acc, d| if d.rem_euclid(2) == 0 { acc + 1 } else { acc - 1 })
}

/// Euler characteristic of `V (x) W` by explicit basis enumeration.
pub fn graded_tensor_chi_oracle(v: &[(i64, usize)], w: &[(i64, usize)]) -> i64 {
    GradedSpace::new(v).tensor(&GradedSpace::new(w)).chi()
}
