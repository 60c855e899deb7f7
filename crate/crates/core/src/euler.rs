//! Closed formulas for Euler characteristics of tensor products of
//! tautological bundles on `X^[n]`, evaluated exactly from Chern data on `X`.
//!
//! Each formula returns a [`ChiResult`] whose value is the sum of its listed
//! terms, so callers can audit every contribution.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::complexes::{self, dim_u, n_closed_form, ComplexError};
use crate::rational::{binomial, binomial_int, choose, from_bigint, int, Rational};
use crate::surface::{require_line_bundle, s_chi, ChernCharacter, SurfaceError, SurfaceModel};
use crate::symgroup::{enumerate_j0, IndexSet};

/// Subset sums over more bundles than this are never attempted.
pub const HARD_K_LIMIT: usize = 62;

/// Default guard on the number of bundles in subset sums.
pub const DEFAULT_K_GUARD: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("at least one bundle is required")]
    NoBundles,
    #[error("{count} bundles exceed the limit of {limit}")]
    TooManyBundles { count: usize, limit: usize },
    #[error("n = {n} is too small here, need n >= {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("expected exactly {expected} bundles, got {found}")]
    BundleCount { expected: usize, found: usize },
    #[error("no h^2 value given for the tensor product over {0}")]
    MissingH2(IndexSet),
    #[error("brute-force N(k, l) disagrees with the closed form at k = {k}, l = {ell}")]
    NMismatch { k: usize, ell: usize },
}

/// Where the coefficients `N(k, ℓ)` come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NSource {
    #[default]
    ClosedForm,
    /// Exact invariant computation on the complexes; only for `k <= 7`.
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerOptions {
    pub n_source: NSource,
    pub k_guard: usize,
}

impl Default for EulerOptions {
    fn default() -> Self {
        EulerOptions { n_source: NSource::ClosedForm, k_guard: DEFAULT_K_GUARD }
    }
}

/// One summand `coefficient * product(factors)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub label: String,
    pub coefficient: Rational,
    pub factors: Vec<Rational>,
}

impl Term {
    pub fn new(label: impl Into<String>, coefficient: Rational, factors: Vec<Rational>) -> Self {
        Term { label: label.into(), coefficient, factors }
    }

    pub fn value(&self) -> Rational {
        self.factors.iter().fold(self.coefficient.clone(), |acc, f| acc * f)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self.factors.iter().map(|x| format!("({x})")).collect();
        write!(f, "{}: {} * {}", self.label, self.coefficient, factors.join(" * "))
    }
}

/// Exact value with its term breakdown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    value: Rational,
    terms: Vec<Term>,
}

impl ChiResult {
    pub fn from_terms(terms: Vec<Term>) -> Self {
        let value = terms.iter().map(Term::value).sum();
        ChiResult { value, terms }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Recomputes the value from the terms.
    pub fn check(&self) -> bool {
        self.terms.iter().map(Term::value).sum::<Rational>() == self.value
    }
}

fn guard(count: usize, opts: &EulerOptions) -> Result<(), EulerError> {
    if count == 0 {
        return Err(EulerError::NoBundles);
    }
    let limit = opts.k_guard.min(HARD_K_LIMIT);
    if count > limit {
        return Err(EulerError::TooManyBundles { count, limit });
    }
    Ok(())
}

fn subset_label(set: IndexSet) -> String {
    set.to_string()
}

/// Tensor product of the classes indexed by `set`, times `extra`.
fn tensor_subset(
    s: &SurfaceModel,
    classes: &[ChernCharacter],
    set: IndexSet,
    extra: &[&ChernCharacter],
) -> Result<ChernCharacter, SurfaceError> {
    s.tensor_all(set.iter().map(|t| &classes[t]).chain(extra.iter().copied()))
}

fn chi_subset(s: &SurfaceModel, classes: &[ChernCharacter], set: IndexSet, extra: &[&ChernCharacter]) -> Result<Rational, SurfaceError> {
    s.chi(&tensor_subset(s, classes, set, extra)?)
}

/// `N(k, ℓ)` from the requested source.
pub fn n_coefficient(k: usize, ell: usize, source: NSource) -> Result<BigInt, EulerError> {
    match source {
        NSource::ClosedForm => Ok(n_closed_form(k, ell)),
        NSource::BruteForce => {
            let report = complexes::nkl_brute(k, ell)?;
            if !report.agrees() {
                return Err(EulerError::NMismatch { k, ell });
            }
            Ok(BigInt::from(report.kernel_route))
        }
    }
}

/// `χ(F^[n] ⊗ D_L) = χ(F ⊗ L) · s^{n-1}χ(L)`.
pub fn chi_scala(s: &SurfaceModel, n: usize, f: &ChernCharacter, l: &ChernCharacter) -> Result<Rational, EulerError> {
    Ok(chi_scala_result(s, n, f, l)?.value().clone())
}

pub fn chi_scala_result(s: &SurfaceModel, n: usize, f: &ChernCharacter, l: &ChernCharacter) -> Result<ChiResult, EulerError> {
    if n < 1 {
        return Err(EulerError::NTooSmall { n, min: 1 });
    }
    require_line_bundle(l)?;
    let chi_fl = s.chi(&s.tensor(f, l)?)?;
    let chi_l = s.chi(l)?;
    Ok(ChiResult::from_terms(vec![Term::new("chi(F L) s^{n-1}chi(L)", int(1), vec![chi_fl, s_chi(n as u64 - 1, &chi_l)])]))
}

/// `χ(E_1^[2] ⊗ .. ⊗ E_k^[2] ⊗ D_L)`.
pub fn euler_two(
    s: &SurfaceModel,
    bundles: &[ChernCharacter],
    l: &ChernCharacter,
    opts: &EulerOptions,
) -> Result<ChiResult, EulerError> {
    let k = bundles.len();
    guard(k, opts)?;
    require_line_bundle(l)?;
    let full = IndexSet::full(k);
    let mut terms = Vec::new();
    for bits in (1u64..=full.bits()).step_by(2) {
        let p = IndexSet(bits);
        let q = full.difference(p);
        terms.push(Term::new(
            format!("P={}", subset_label(p)),
            int(1),
            vec![chi_subset(s, bundles, p, &[l])?, chi_subset(s, bundles, q, &[l])?],
        ));
    }
    for ell in 1..k {
        let coeff = n_coefficient(k, ell, opts.n_source)?;
        let omega = s.sym_cotangent(ell as u64 - 1);
        let chi = chi_subset(s, bundles, full, &[&omega, l, l])?;
        terms.push(Term::new(format!("N({k},{ell}) S^{}Omega", ell - 1), -from_bigint(coeff), vec![chi]));
    }
    Ok(ChiResult::from_terms(terms))
}

fn line_bundle_power(s: &SurfaceModel, e: &ChernCharacter, j: usize, l: &ChernCharacter) -> Result<ChernCharacter, SurfaceError> {
    s.tensor_all(std::iter::repeat_n(e, j).chain([l]))
}

fn check_sym_inputs(e: &ChernCharacter, k: usize, l: &ChernCharacter) -> Result<(), EulerError> {
    require_line_bundle(e)?;
    require_line_bundle(l)?;
    if k == 0 {
        return Err(EulerError::NoBundles);
    }
    if k > complexes::MAX_GROUP_K {
        return Err(EulerError::TooManyBundles { count: k, limit: complexes::MAX_GROUP_K });
    }
    Ok(())
}

fn diagonal_terms<F>(s: &SurfaceModel, e: &ChernCharacter, k: usize, l: &ChernCharacter, mult: F) -> Result<Vec<Term>, EulerError>
where
    F: Fn(usize) -> Result<i64, ComplexError>,
{
    let ek = s.tensor_all(std::iter::repeat_n(e, k).chain([l, l]))?;
    (1..=k)
        .map(|ell| {
            let m = mult(ell)?;
            let chi = s.chi(&s.tensor(&s.sym_cotangent(ell as u64 - 1), &ek)?)?;
            Ok(Term::new(format!("m_{ell} S^{}Omega", ell - 1), int(-m), vec![chi]))
        })
        .collect()
}

/// `χ(S^k E^[2] ⊗ D_L)` for a line bundle `E`.
pub fn sym_power_euler_two(s: &SurfaceModel, e: &ChernCharacter, k: usize, l: &ChernCharacter) -> Result<ChiResult, EulerError> {
    check_sym_inputs(e, k, l)?;
    let mut terms = Vec::new();
    for j in 0..=k / 2 {
        let chi_a = s.chi(&line_bundle_power(s, e, j, l)?)?;
        if 2 * j == k {
            terms.push(Term::new(format!("split {j}+{j}"), int(1), vec![s_chi(2, &chi_a)]));
        } else {
            let chi_b = s.chi(&line_bundle_power(s, e, k - j, l)?)?;
            terms.push(Term::new(format!("split {j}+{}", k - j), int(1), vec![chi_a, chi_b]));
        }
    }
    terms.extend(diagonal_terms(s, e, k, l, |ell| complexes::sym_power_multiplicity(k, ell).map(|m| m as i64))?);
    Ok(ChiResult::from_terms(terms))
}

/// `χ(Λ^k E^[2] ⊗ D_L)` for a line bundle `E`, computed the same way as
/// [`sym_power_euler_two`] with sign-twisted invariants. Since `E^[2]` has
/// rank two this vanishes for `k >= 3`.
pub fn ext_power_euler_two(s: &SurfaceModel, e: &ChernCharacter, k: usize, l: &ChernCharacter) -> Result<ChiResult, EulerError> {
    check_sym_inputs(e, k, l)?;
    let mut terms = Vec::new();
    // A split survives the sign twist only if both fibers have at most one point.
    for j in 0..=k / 2 {
        if j > 1 || k - j > 1 {
            continue;
        }
        let chi_a = s.chi(&line_bundle_power(s, e, j, l)?)?;
        if 2 * j == k {
            terms.push(Term::new(format!("split {j}+{j}"), int(1), vec![binomial(&chi_a, 2)]));
        } else {
            let chi_b = s.chi(&line_bundle_power(s, e, k - j, l)?)?;
            terms.push(Term::new(format!("split {j}+{}", k - j), int(1), vec![chi_a, chi_b]));
        }
    }
    terms.extend(diagonal_terms(s, e, k, l, |ell| complexes::ext_power_multiplicity(k, ell))?);
    Ok(ChiResult::from_terms(terms))
}

/// `a(k, k̂, ℓ̂) = 2^{k-1} sum_{ĵ=ℓ̂}^{k̂} binom(k̂, ĵ)`.
pub fn bichar_a(k: usize, k_hat: usize, ell_hat: usize) -> BigInt {
    (BigInt::one() << (k - 1)) * dim_u(k_hat, ell_hat)
}

/// `b(k, ℓ, k̂) = 2^{k̂-1} sum_{j=ℓ}^{k} binom(k, j)`.
pub fn bichar_b(k: usize, ell: usize, k_hat: usize) -> BigInt {
    (BigInt::one() << (k_hat - 1)) * dim_u(k, ell)
}

/// `(c_+, c_-)` for `(k, k̂, ℓ, ℓ̂)`.
pub fn bichar_c(k: usize, k_hat: usize, ell: usize, ell_hat: usize) -> (Rational, Rational) {
    let prod = dim_u(k, ell) * dim_u(k_hat, ell_hat);
    let corr = choose(k as u64 - 1, ell as u64 - 1) * choose(k_hat as u64 - 1, ell_hat as u64 - 1);
    let half = |x: BigInt| Rational::new(x, BigInt::from(2));
    (half(&prod + &corr), half(prod - corr))
}

/// `χ(E_1^[2] ⊗ .. ⊗ E_k^[2], F_1^[2] ⊗ .. ⊗ F_k̂^[2])`.
pub fn euler_bichar_two(
    s: &SurfaceModel,
    es: &[ChernCharacter],
    fs: &[ChernCharacter],
    opts: &EulerOptions,
) -> Result<ChiResult, EulerError> {
    let (k, kh) = (es.len(), fs.len());
    guard(k, opts)?;
    guard(kh, opts)?;
    guard(k + kh, &EulerOptions { k_guard: opts.k_guard.max(2), ..*opts })?;
    let full_e = IndexSet::full(k);
    let full_f = IndexSet::full(kh);
    let mut terms = Vec::new();
    for bits in (1u64..=full_e.bits()).step_by(2) {
        let p = IndexSet(bits);
        let pc = full_e.difference(p);
        for q in full_f.all_subsets() {
            let qc = full_f.difference(q);
            let first = s.hom(&tensor_subset(s, es, p, &[])?, &tensor_subset(s, fs, q, &[])?)?;
            let second = s.hom(&tensor_subset(s, es, pc, &[])?, &tensor_subset(s, fs, qc, &[])?)?;
            terms.push(Term::new(format!("P={} Q={}", subset_label(p), subset_label(q)), int(1), vec![s.chi(&first)?, s.chi(&second)?]));
        }
    }
    let all_e = tensor_subset(s, es, full_e, &[])?;
    let all_f = tensor_subset(s, fs, full_f, &[])?;
    let omega_dual = s.omega_dual();
    let tangent = s.tangent();
    for lh in 1..=kh {
        let a = s.hom(&all_e, &s.tensor(&s.sym_cotangent(lh as u64 - 1), &all_f)?)?;
        terms.push(Term::new(format!("a A_{lh}"), -from_bigint(bichar_a(k, kh, lh)), vec![s.chi(&a)?]));
    }
    for l in 1..=k {
        let b = s.tensor(&omega_dual, &s.hom(&s.tensor(&s.sym_cotangent(l as u64 - 1), &all_e)?, &all_f)?)?;
        terms.push(Term::new(format!("b B_{l}"), -from_bigint(bichar_b(k, l, kh)), vec![s.chi(&b)?]));
    }
    for l in 1..=k {
        let src = s.tensor(&s.sym_cotangent(l as u64 - 1), &all_e)?;
        for lh in 1..=kh {
            let c = s.hom(&src, &s.tensor(&s.sym_cotangent(lh as u64 - 1), &all_f)?)?;
            let (cp, cm) = bichar_c(k, kh, l, lh);
            terms.push(Term::new(format!("c+ C_{l},{lh}"), cp.clone(), vec![s.chi(&c)?]));
            terms.push(Term::new(format!("c+ w^-1 C_{l},{lh}"), cp, vec![s.chi(&s.tensor(&omega_dual, &c)?)?]));
            terms.push(Term::new(format!("c- T C_{l},{lh}"), -cm, vec![s.chi(&s.tensor(&tangent, &c)?)?]));
        }
    }
    Ok(ChiResult::from_terms(terms))
}

/// Ordered triples `(a, b; c)` of the pairwise products.
const PAIRS: [(usize, usize, usize); 3] = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];

fn three(es: &[ChernCharacter], n: usize) -> Result<(), EulerError> {
    if es.len() != 3 {
        return Err(EulerError::BundleCount { expected: 3, found: es.len() });
    }
    if n < 3 {
        return Err(EulerError::NTooSmall { n, min: 3 });
    }
    Ok(())
}

/// `χ(E_1^[n] ⊗ E_2^[n] ⊗ E_3^[n] ⊗ D_L)` for `n >= 3`.
pub fn euler_three(s: &SurfaceModel, n: usize, es: &[ChernCharacter], l: &ChernCharacter) -> Result<ChiResult, EulerError> {
    three(es, n)?;
    require_line_bundle(l)?;
    let chi_l = s.chi(l)?;
    let sm = |m: usize| s_chi((n - m) as u64, &chi_l);
    let chi = |set: &[usize], extra: &[&ChernCharacter]| -> Result<Rational, SurfaceError> {
        chi_subset(s, es, set.iter().copied().collect(), extra)
    };
    let omega = s.cotangent();
    let mut terms = vec![Term::new(
        "E1L E2L E3L",
        int(1),
        vec![chi(&[0], &[l])?, chi(&[1], &[l])?, chi(&[2], &[l])?, sm(3)],
    )];
    for &(a, b, c) in &PAIRS {
        terms.push(Term::new(format!("E{}E{}L E{}L", a + 1, b + 1, c + 1), int(1), vec![chi(&[a, b], &[l])?, chi(&[c], &[l])?, sm(2)]));
    }
    for &(a, b, c) in &PAIRS {
        terms.push(Term::new(
            format!("E{}E{}L^2 E{}L", a + 1, b + 1, c + 1),
            int(-1),
            vec![chi(&[a, b], &[l, l])?, chi(&[c], &[l])?, sm(3)],
        ));
    }
    let all = [0, 1, 2];
    terms.push(Term::new("E1E2E3L", int(1), vec![chi(&all, &[l])?, sm(1)]));
    terms.push(Term::new("E1E2E3L^2", int(-3), vec![chi(&all, &[l, l])?, sm(2)]));
    terms.push(Term::new("E1E2E3L^3", int(2), vec![chi(&all, &[l, l, l])?, sm(3)]));
    terms.push(Term::new("Omega E1E2E3L^2", int(-1), vec![chi(&all, &[&omega, l, l])?, sm(2)]));
    terms.push(Term::new("Omega E1E2E3L^3", int(1), vec![chi(&all, &[&omega, l, l, l])?, sm(3)]));
    Ok(ChiResult::from_terms(terms))
}

/// The untwisted triple product grouped by powers of `s^mχ(O_X)`, with the
/// pairwise products summed symmetrically.
pub fn euler_three_grouped(s: &SurfaceModel, n: usize, es: &[ChernCharacter]) -> Result<ChiResult, EulerError> {
    three(es, n)?;
    let chi_o = int(s.chi_o());
    let sm = |m: usize| s_chi((n - m) as u64, &chi_o);
    let chi = |set: &[usize], extra: &[&ChernCharacter]| -> Result<Rational, SurfaceError> {
        chi_subset(s, es, set.iter().copied().collect(), extra)
    };
    let mut terms = vec![Term::new("E1 E2 E3", int(1), vec![chi(&[0], &[])?, chi(&[1], &[])?, chi(&[2], &[])?, sm(3)])];
    for &(a, b, c) in &PAIRS {
        terms.push(Term::new(
            format!("E{}E{} E{}", a + 1, b + 1, c + 1),
            int(1),
            vec![chi(&[a, b], &[])?, chi(&[c], &[])?, sm(2) - sm(3)],
        ));
    }
    let all = [0, 1, 2];
    terms.push(Term::new("E1E2E3", int(1), vec![chi(&all, &[])?, sm(1) - int(3) * sm(2) + int(2) * sm(3)]));
    terms.push(Term::new("Omega E1E2E3", int(1), vec![chi(&all, &[&s.cotangent()])?, sm(3) - sm(2)]));
    Ok(ChiResult::from_terms(terms))
}

/// `χ((K_0 ⊗ L^{⊠n})^{S_n})`: a sum over the orbit representatives `J_0`.
pub fn chi_k0_invariants(
    s: &SurfaceModel,
    n: usize,
    bundles: &[ChernCharacter],
    l: &ChernCharacter,
    opts: &EulerOptions,
) -> Result<ChiResult, EulerError> {
    let k = bundles.len();
    guard(k, opts)?;
    if n < 1 {
        return Err(EulerError::NTooSmall { n, min: 1 });
    }
    require_line_bundle(l)?;
    let chi_l = s.chi(l)?;
    let mut terms = Vec::new();
    for rep in enumerate_j0(k, n) {
        let mut factors = Vec::with_capacity(rep.max_value + 1);
        for r in 0..rep.max_value {
            factors.push(chi_subset(s, bundles, rep.index.fiber(r), &[l])?);
        }
        factors.push(s_chi((n - rep.max_value) as u64, &chi_l));
        terms.push(Term::new(rep.index.to_string(), int(1), factors));
    }
    Ok(ChiResult::from_terms(terms))
}

/// `dim H^{2n}` of the tensor product (twisted by `D_L`), given `h^2` of the
/// tensor product over each fiber (twisted by `L`) and `q = h^2(L)`.
pub fn h_top_dim(k: usize, n: usize, h2: &HashMap<IndexSet, u64>, q: u64) -> Result<BigInt, EulerError> {
    if k == 0 {
        return Err(EulerError::NoBundles);
    }
    if n < 1 {
        return Err(EulerError::NTooSmall { n, min: 1 });
    }
    let mut total = BigInt::zero();
    for rep in enumerate_j0(k, n) {
        let mut term = BigInt::one();
        for r in 0..rep.max_value {
            let fiber = rep.index.fiber(r);
            term *= *h2.get(&fiber).ok_or(EulerError::MissingH2(fiber))?;
        }
        let free = (n - rep.max_value) as u64;
        term *= binomial_int(&BigInt::from(q + free).checked_sub(&BigInt::one()).expect("integer"), free);
        total += term;
    }
    Ok(total)
}

/// `dim H^0 = prod h^0(E_i)` for `n >= k`.
pub fn h0_dim(h0: &[u64], n: usize) -> Result<BigInt, EulerError> {
    if h0.is_empty() {
        return Err(EulerError::NoBundles);
    }
    if n < h0.len() {
        return Err(EulerError::NTooSmall { n, min: h0.len() });
    }
    Ok(h0.iter().map(|&h| BigInt::from(h)).product())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn p2() -> SurfaceModel {
        SurfaceModel::projective_plane()
    }

    #[test]
    fn scala_examples() {
        let s = p2();
        let o = s.unit();
        let h = s.line_bundle(crate::DivisorClass::from_ints(&[1])).unwrap();
        assert_eq!(chi_scala(&s, 2, &h, &o).unwrap(), int(3));
        assert_eq!(chi_scala(&s, 7, &o, &o).unwrap(), int(1));
        assert_eq!(chi_scala(&s, 1, &h, &o).unwrap(), s.chi(&h).unwrap());
        assert!(chi_scala(&s, 0, &h, &o).is_err());
    }

    #[test]
    fn bichar_coefficients() {
        assert_eq!(bichar_c(1, 1, 1, 1), (int(1), int(0)));
        assert_eq!(bichar_a(2, 1, 1), BigInt::from(2));
        assert_eq!(bichar_b(2, 1, 3), BigInt::from(12));
        let (cp, cm) = bichar_c(3, 2, 2, 1);
        assert_eq!(cp, int(7));
        assert_eq!(cm, int(5));
        assert_eq!(frac(14, 2), cp);
    }

    #[test]
    fn result_breakdown_is_consistent() {
        let s = p2();
        let o = s.unit();
        let r = euler_two(&s, &[o.clone(), o.clone(), o.clone()], &o, &EulerOptions::default()).unwrap();
        assert!(r.check());
        assert_eq!(r.terms().len(), 4 + 2);
    }

    #[test]
    fn guards() {
        let s = p2();
        let o = s.unit();
        let many = vec![o.clone(); 25];
        assert!(matches!(
            euler_two(&s, &many, &o, &EulerOptions::default()),
            Err(EulerError::TooManyBundles { count: 25, limit: 24 })
        ));
        assert!(matches!(euler_two(&s, &[], &o, &EulerOptions::default()), Err(EulerError::NoBundles)));
        let bad_l = s.tangent();
        assert!(euler_two(&s, std::slice::from_ref(&o), &bad_l, &EulerOptions::default()).is_err());
        assert!(matches!(euler_three(&s, 2, &[o.clone(), o.clone(), o.clone()], &o), Err(EulerError::NTooSmall { .. })));
        assert!(matches!(h0_dim(&[1, 2, 3], 2), Err(EulerError::NTooSmall { .. })));
    }
}
