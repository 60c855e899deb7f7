//! The complexes `R̃_ℓ = (R_ℓ^{-1} -> R_ℓ^0 -> .. -> R_ℓ^{k-ℓ})` over the
//! rationals, their `S_k` and `S_2` actions, and exact computations of
//! cohomology and invariant dimensions.
//!
//! Bases. In degree `-1` the basis vectors `e_a` are indexed by maps
//! `a: [k] -> [2]`, stored as the set `a^{-1}(2)`. In degree `i >= 0` they are
//! indexed by `(M; a)` with `|M| = ℓ + i` and `a: [k] \ M -> [2]`, together with
//! a wedge `ζ_M^{t_1} ∧ .. ∧ ζ_M^{t_{ℓ-1}}` with `t_1 < .. < t_{ℓ-1}`, where
//! `ζ_M^r = e_{m_r} - e_{m_{r+1}}` for `M = {m_1 < m_2 < ..}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::linalg::{LinalgError, QMatrix};
use crate::rational::{choose, factorial, int, Rational};
use crate::symgroup::{eps_elem, eps_sigma, sn_generators, IndexSet, Permutation};

/// Largest `k` for which matrices are built.
pub const MAX_BUILD_K: usize = 12;

/// Largest `k` for which the full symmetric group is enumerated.
pub const MAX_GROUP_K: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("need 1 <= ell <= k <= {max}, got k = {k}, ell = {ell}")]
    Range { k: usize, ell: usize, max: usize },
    #[error("degree {0} is outside the complex")]
    Degree(i32),
    #[error("{group} action does not commute with the differential leaving degree {degree}")]
    NotChainMap { group: String, degree: i32 },
    #[error("invariant dimension in degree {degree}: trace formula gives {trace}, projector rank gives {rank}")]
    InvariantMismatch { degree: i32, trace: Rational, rank: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Label of a basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// `e_a` in degree `-1`, with `a^{-1}(2)` given.
    Map(IndexSet),
    /// `(M; a)` with `a^{-1}(2) = two` and wedge positions `wedge ⊂ {0, .., |M| - 2}`.
    Wedge { m: IndexSet, two: IndexSet, wedge: IndexSet },
}

/// An explicit cochain complex of finite dimensional rational vector spaces
/// in degrees `-1 ..= k - ℓ`.
#[derive(Debug, Clone)]
pub struct ChainComplexQ {
    k: usize,
    ell: usize,
    labels: Vec<Vec<BasisLabel>>,
    index: Vec<HashMap<BasisLabel, usize>>,
    /// `differentials[p]` leaves degree `p - 1`; the last one is the zero map
    /// out of the top degree.
    differentials: Vec<QMatrix>,
}

fn sign(parity: usize) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Wedge basis of `Λ^r` of a space with basis `{0, .., n-1}`, lexicographic.
fn wedge_basis(n: usize, r: usize) -> Vec<IndexSet> {
    let mut out = IndexSet::subsets_of_size(n, r);
    out.sort_by(|a, b| a.iter().cmp(b.iter()));
    out
}

/// `e_{m_p} - e_{m_q}` in the basis `ζ^0, ζ^1, ..` (0-based positions).
fn zeta_difference(p: usize, q: usize) -> Vec<(usize, i64)> {
    if p < q {
        (p..q).map(|r| (r, 1)).collect()
    } else {
        (q..p).map(|r| (r, -1)).collect()
    }
}

/// Expands `v_1 ∧ .. ∧ v_r` for sparse vectors `v_i` in the sorted wedge basis.
fn wedge_expand(factors: &[Vec<(usize, i64)>]) -> Vec<(IndexSet, i64)> {
    let mut terms: HashMap<IndexSet, i64> = HashMap::from([(IndexSet::EMPTY, 1)]);
    for f in factors {
        let mut next: HashMap<IndexSet, i64> = HashMap::new();
        for (set, c) in &terms {
            for &(pos, v) in f {
                if set.contains(pos) {
                    continue;
                }
                // moving the new factor from the end into sorted position
                let larger = set.iter().filter(|&x| x > pos).count();
                *next.entry(set.with(pos)).or_insert(0) += c * v * sign(larger);
            }
        }
        next.retain(|_, c| *c != 0);
        terms = next;
    }
    let mut out: Vec<(IndexSet, i64)> = terms.into_iter().collect();
    out.sort();
    out
}

/// Image of `ζ_src^{t_1} ∧ ..` under a map of index sets `f` into `ρ_target`,
/// written in the wedge basis of `target`.
fn wedge_image(src: IndexSet, wedge: IndexSet, f: impl Fn(usize) -> usize, target: IndexSet) -> Vec<(IndexSet, i64)> {
    let elems = src.to_vec();
    let factors: Vec<Vec<(usize, i64)>> = wedge
        .iter()
        .map(|t| {
            let p = target.rank_of(f(elems[t])).expect("image lies in target");
            let q = target.rank_of(f(elems[t + 1])).expect("image lies in target");
            zeta_difference(p, q)
        })
        .collect();
    wedge_expand(&factors)
}

type IntColumns = Vec<Vec<(usize, i64)>>;

fn to_qmatrix(rows: usize, columns: IntColumns) -> QMatrix {
    let cols = columns.into_iter().map(|c| c.into_iter().map(|(r, v)| (r, int(v))).collect()).collect();
    QMatrix::from_columns(rows, cols).expect("indices come from the basis")
}

/// `dim R_ℓ^i = 2^{k-ℓ-i} binom(k, ℓ+i) binom(ℓ+i-1, ℓ-1)`.
pub fn dim_formula(k: usize, ell: usize, i: usize) -> BigInt {
    if ell == 0 || ell + i > k {
        return BigInt::zero();
    }
    (BigInt::from(1) << (k - ell - i)) * choose(k as u64, (ell + i) as u64) * choose((ell + i - 1) as u64, (ell - 1) as u64)
}

/// `dim U_ℓ = sum_{j=ℓ}^k binom(k, j)`.
pub fn dim_u(k: usize, ell: usize) -> BigInt {
    (ell..=k).map(|j| choose(k as u64, j as u64)).sum()
}

/// `sum_{i=0}^{k-ℓ} (-1)^i dim R_ℓ^i` from the dimension formula.
pub fn euler_char_formula(k: usize, ell: usize) -> BigInt {
    (0..=k - ell).map(|i| dim_formula(k, ell, i) * sign(i)).sum()
}

/// `N(k, ℓ) = (sum_{j=ℓ}^k binom(k, j) - binom(k-1, ℓ-1)) / 2`.
pub fn n_closed_form(k: usize, ell: usize) -> BigInt {
    (dim_u(k, ell) - choose(k as u64 - 1, ell as u64 - 1)) / 2
}

fn check_range(k: usize, ell: usize, max: usize) -> Result<(), ComplexError> {
    if ell == 0 || ell > k || k > max {
        return Err(ComplexError::Range { k, ell, max });
    }
    Ok(())
}

/// Builds `R̃_ℓ` for `1 <= ℓ <= k <= MAX_BUILD_K`.
pub fn build_r_complex(k: usize, ell: usize) -> Result<ChainComplexQ, ComplexError> {
    check_range(k, ell, MAX_BUILD_K)?;
    let full = IndexSet::full(k);
    let top = k - ell;
    let mut labels: Vec<Vec<BasisLabel>> = Vec::with_capacity(top + 2);
    labels.push((0..1u64 << k).map(|bits| BasisLabel::Map(IndexSet(bits))).collect());
    for i in 0..=top {
        let mut deg = Vec::new();
        let size = ell + i;
        let wedges = wedge_basis(size - 1, ell - 1);
        for m in IndexSet::subsets_of_size(k, size) {
            for two in full.difference(m).all_subsets() {
                for &wedge in &wedges {
                    deg.push(BasisLabel::Wedge { m, two, wedge });
                }
            }
        }
        labels.push(deg);
    }
    let index: Vec<HashMap<BasisLabel, usize>> =
        labels.iter().map(|deg| deg.iter().enumerate().map(|(p, l)| (*l, p)).collect()).collect();

    let mut differentials = Vec::with_capacity(top + 2);
    // d^{-1}: the map φ̃
    let columns: IntColumns = labels[0]
        .iter()
        .map(|label| {
            let BasisLabel::Map(a2) = *label else { unreachable!() };
            IndexSet::subsets_of_size(k, ell)
                .into_iter()
                .map(|m| {
                    let target = BasisLabel::Wedge { m, two: a2.difference(m), wedge: IndexSet::full(ell - 1) };
                    (index[1][&target], sign(a2.intersection(m).len()))
                })
                .collect()
        })
        .collect();
    differentials.push(to_qmatrix(labels[1].len(), columns));
    // d^i for i >= 0
    for i in 0..top {
        let columns: IntColumns = labels[i + 1]
            .iter()
            .map(|label| {
                let BasisLabel::Wedge { m: n_set, two, wedge } = *label else { unreachable!() };
                let mut col = Vec::new();
                for m in full.difference(n_set).iter() {
                    let target_m = n_set.with(m);
                    let eps = eps_elem(m, target_m).expect("m lies in M") as i64;
                    let c = if two.contains(m) { -1 } else { 1 };
                    for (w, coef) in wedge_image(n_set, wedge, |x| x, target_m) {
                        let target = BasisLabel::Wedge { m: target_m, two: two.without(m), wedge: w };
                        col.push((index[i + 2][&target], eps * c * coef));
                    }
                }
                col
            })
            .collect();
        differentials.push(to_qmatrix(labels[i + 2].len(), columns));
    }
    differentials.push(QMatrix::zeros(0, labels[top + 1].len()));
    Ok(ChainComplexQ { k, ell, labels, index, differentials })
}

/// Which `S_2` action on the complex is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauConvention {
    /// The action on `R̃_ℓ`: plain in degree `-1`, `(-1)^{ℓ+i}` in degree `i`.
    Tilde,
    /// The action on `R̂_ℓ`: the tilde action twisted by `(-1)^{ℓ-1}`, so
    /// `(-1)^{i-1}` in degree `i >= 0` and `(-1)^{ℓ-1}` in degree `-1`.
    Hat,
}

impl ChainComplexQ {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn min_degree(&self) -> i32 {
        -1
    }

    pub fn max_degree(&self) -> i32 {
        (self.k - self.ell) as i32
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> {
        self.min_degree()..=self.max_degree()
    }

    fn slot(&self, degree: i32) -> Result<usize, ComplexError> {
        if degree < self.min_degree() || degree > self.max_degree() {
            return Err(ComplexError::Degree(degree));
        }
        Ok((degree + 1) as usize)
    }

    pub fn dim(&self, degree: i32) -> usize {
        self.slot(degree).map_or(0, |s| self.labels[s].len())
    }

    pub fn labels(&self, degree: i32) -> Result<&[BasisLabel], ComplexError> {
        Ok(&self.labels[self.slot(degree)?])
    }

    pub fn index_of(&self, degree: i32, label: &BasisLabel) -> Option<usize> {
        self.slot(degree).ok().and_then(|s| self.index[s].get(label).copied())
    }

    /// The differential leaving `degree`; out of the top degree it is zero.
    pub fn differential(&self, degree: i32) -> Result<&QMatrix, ComplexError> {
        Ok(&self.differentials[self.slot(degree)?])
    }

    /// Checks `d ∘ d = 0` by multiplying consecutive differentials.
    pub fn check_d_squared(&self) -> Result<bool, ComplexError> {
        for d in self.min_degree()..self.max_degree() {
            if !self.differential(d + 1)?.mul(self.differential(d)?)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn tau_scalar(&self, degree: i32, conv: TauConvention) -> i64 {
        let ell = self.ell as i32;
        let parity = match (conv, degree) {
            (TauConvention::Tilde, -1) => 0,
            (TauConvention::Tilde, i) => ell + i,
            (TauConvention::Hat, -1) => ell - 1,
            (TauConvention::Hat, i) => i - 1,
        };
        sign(parity.rem_euclid(2) as usize)
    }

    fn tau_columns(&self, degree: i32, conv: TauConvention) -> Result<IntColumns, ComplexError> {
        let s = self.slot(degree)?;
        let full = IndexSet::full(self.k);
        let scalar = self.tau_scalar(degree, conv);
        Ok(self.labels[s]
            .iter()
            .map(|label| {
                let image = match *label {
                    BasisLabel::Map(a2) => BasisLabel::Map(full.difference(a2)),
                    BasisLabel::Wedge { m, two, wedge } => {
                        BasisLabel::Wedge { m, two: full.difference(m).difference(two), wedge }
                    }
                };
                vec![(self.index[s][&image], scalar)]
            })
            .collect())
    }

    /// Matrix of `τ = (1 2)` in the given degree.
    pub fn tau_matrix(&self, degree: i32, conv: TauConvention) -> Result<QMatrix, ComplexError> {
        Ok(to_qmatrix(self.dim(degree), self.tau_columns(degree, conv)?))
    }

    fn sk_columns(&self, sigma: &Permutation, degree: i32) -> Result<IntColumns, ComplexError> {
        let s = self.slot(degree)?;
        Ok(self.labels[s]
            .iter()
            .map(|label| match *label {
                BasisLabel::Map(a2) => vec![(self.index[s][&BasisLabel::Map(sigma.image_set(a2))], 1)],
                BasisLabel::Wedge { m, two, wedge } => {
                    let target_m = sigma.image_set(m);
                    let target_two = sigma.image_set(two);
                    let eps = eps_sigma(sigma, m) as i64;
                    wedge_image(m, wedge, |x| sigma.apply(x), target_m)
                        .into_iter()
                        .map(|(w, c)| {
                            let target = BasisLabel::Wedge { m: target_m, two: target_two, wedge: w };
                            (self.index[s][&target], eps * c)
                        })
                        .collect()
                }
            })
            .collect())
    }

    /// Matrix of `σ ∈ S_k` in the given degree:
    /// `(σ·s)(M; a) = ε_{σ,σ^{-1}(M)} σ·s(σ^{-1}(M); a∘σ)`.
    pub fn sk_matrix(&self, sigma: &Permutation, degree: i32) -> Result<QMatrix, ComplexError> {
        if sigma.len() != self.k {
            return Err(ComplexError::Range { k: sigma.len(), ell: self.ell, max: self.k });
        }
        Ok(to_qmatrix(self.dim(degree), self.sk_columns(sigma, degree)?))
    }
}

/// Cohomology of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: i32,
    pub dim: usize,
    pub rank_out: usize,
    pub cohomology: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub k: usize,
    pub ell: usize,
    pub d_squared_zero: bool,
    pub degrees: Vec<DegreeReport>,
}

impl ExactnessReport {
    /// Cohomology vanishes in every degree `>= 0` and `d ∘ d = 0`.
    pub fn passed(&self) -> bool {
        self.d_squared_zero && self.degrees.iter().filter(|d| d.degree >= 0).all(|d| d.cohomology == 0)
    }

    pub fn cohomology(&self, degree: i32) -> Option<usize> {
        self.degrees.iter().find(|d| d.degree == degree).map(|d| d.cohomology)
    }
}

/// Computes `dim H^i = dim ker d^i - rank d^{i-1}` in every degree.
pub fn verify_exactness(c: &ChainComplexQ) -> Result<ExactnessReport, ComplexError> {
    let d_squared_zero = c.check_d_squared()?;
    let ranks: Vec<usize> = c.degrees().map(|d| c.differential(d).map(QMatrix::rank)).collect::<Result<_, _>>()?;
    let degrees = c
        .degrees()
        .zip(&ranks)
        .enumerate()
        .map(|(p, (degree, &rank_out))| {
            let rank_in = if p == 0 { 0 } else { ranks[p - 1] };
            let dim = c.dim(degree);
            DegreeReport { degree, dim, rank_out, cohomology: dim - rank_out - rank_in }
        })
        .collect();
    Ok(ExactnessReport { k: c.k, ell: c.ell, d_squared_zero, degrees })
}

/// Checks that `φ̃` restricted to `U_ℓ = <e_a : |a^{-1}(2)| >= ℓ>` is injective
/// with image `ker d^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlReport {
    pub dim_u: usize,
    pub rank_on_u: usize,
    pub kernel_d0: usize,
    pub image_in_kernel: bool,
}

impl UlReport {
    pub fn passed(&self) -> bool {
        self.image_in_kernel && self.rank_on_u == self.dim_u && self.kernel_d0 == self.dim_u
    }
}

pub fn lemma_ul_check(c: &ChainComplexQ) -> Result<UlReport, ComplexError> {
    let phi = c.differential(-1)?;
    let u_cols: Vec<usize> = c
        .labels(-1)?
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, BasisLabel::Map(a2) if a2.len() >= c.ell))
        .map(|(p, _)| p)
        .collect();
    let phi_u = phi.select_columns(&u_cols);
    let d0 = c.differential(0)?;
    Ok(UlReport {
        dim_u: u_cols.len(),
        rank_on_u: phi_u.rank(),
        kernel_d0: d0.nullity(),
        image_in_kernel: d0.mul(&phi_u)?.is_zero(),
    })
}

/// Group acting on the complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    S2,
    Sk,
    SkTimesS2,
}

/// Generator matrices of a group action, indexed `[generator][degree + 1]`.
#[derive(Debug, Clone)]
pub struct ComplexGroupAction {
    pub kind: GroupKind,
    pub tau: Option<TauConvention>,
    pub generator_names: Vec<String>,
    pub matrices: Vec<Vec<QMatrix>>,
}

impl ComplexGroupAction {
    pub fn matrix(&self, generator: usize, degree: i32) -> &QMatrix {
        &self.matrices[generator][(degree + 1) as usize]
    }

    pub fn all_signed_permutations(&self) -> bool {
        self.matrices.iter().flatten().all(QMatrix::is_signed_permutation)
    }
}

fn check_chain_map(c: &ChainComplexQ, name: &str, mats: &[QMatrix]) -> Result<(), ComplexError> {
    for d in c.min_degree()..c.max_degree() {
        let p = (d + 1) as usize;
        let diff = c.differential(d)?;
        if diff.mul(&mats[p])? != mats[p + 1].mul(diff)? {
            return Err(ComplexError::NotChainMap { group: name.to_string(), degree: d });
        }
    }
    Ok(())
}

fn tau_generator(c: &ChainComplexQ, conv: TauConvention) -> Result<Vec<QMatrix>, ComplexError> {
    c.degrees().map(|d| c.tau_matrix(d, conv)).collect()
}

fn sk_generators(c: &ChainComplexQ) -> Result<Vec<(String, Vec<QMatrix>)>, ComplexError> {
    let gens = sn_generators(c.k);
    if gens.is_empty() {
        let ids = c.degrees().map(|d| QMatrix::identity(c.dim(d))).collect();
        return Ok(vec![("id".to_string(), ids)]);
    }
    gens.iter()
        .map(|g| {
            let mats = c.degrees().map(|d| c.sk_matrix(g, d)).collect::<Result<Vec<_>, _>>()?;
            Ok((format!("sigma{g}"), mats))
        })
        .collect()
}

fn attach(
    c: &ChainComplexQ,
    kind: GroupKind,
    tau: Option<TauConvention>,
    gens: Vec<(String, Vec<QMatrix>)>,
) -> Result<ComplexGroupAction, ComplexError> {
    for (name, mats) in &gens {
        check_chain_map(c, name, mats)?;
    }
    let (generator_names, matrices) = gens.into_iter().unzip();
    Ok(ComplexGroupAction { kind, tau, generator_names, matrices })
}

/// `τ` acting on `R̂_ℓ`; fails if it is not a chain map.
pub fn attach_s2_hat(c: &ChainComplexQ) -> Result<ComplexGroupAction, ComplexError> {
    attach(c, GroupKind::S2, Some(TauConvention::Hat), vec![("tau".into(), tau_generator(c, TauConvention::Hat)?)])
}

/// `τ` acting on `R̃_ℓ`; fails if it is not a chain map.
pub fn attach_s2_tilde(c: &ChainComplexQ) -> Result<ComplexGroupAction, ComplexError> {
    attach(c, GroupKind::S2, Some(TauConvention::Tilde), vec![("tau".into(), tau_generator(c, TauConvention::Tilde)?)])
}

/// Generators `(1 2)` and `(1 2 .. k)` of `S_k`; fails if they are not chain maps.
pub fn attach_sk(c: &ChainComplexQ) -> Result<ComplexGroupAction, ComplexError> {
    attach(c, GroupKind::Sk, None, sk_generators(c)?)
}

pub fn attach_sk_times_s2(c: &ChainComplexQ, conv: TauConvention) -> Result<ComplexGroupAction, ComplexError> {
    let mut gens = sk_generators(c)?;
    gens.push(("tau".into(), tau_generator(c, conv)?));
    attach(c, GroupKind::SkTimesS2, Some(conv), gens)
}

/// A finite group acting on the complex, optionally twisted by the sign
/// character of `S_k` (for alternating rather than symmetric invariants).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub tau: TauConvention,
    pub sign_twist: bool,
}

impl GroupSpec {
    pub fn s2(tau: TauConvention) -> Self {
        GroupSpec { kind: GroupKind::S2, tau, sign_twist: false }
    }

    pub fn sk() -> Self {
        GroupSpec { kind: GroupKind::Sk, tau: TauConvention::Hat, sign_twist: false }
    }

    pub fn sk_times_s2(tau: TauConvention) -> Self {
        GroupSpec { kind: GroupKind::SkTimesS2, tau, sign_twist: false }
    }

    pub fn twisted(self) -> Self {
        GroupSpec { sign_twist: true, ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub degree: i32,
    pub group_order: usize,
    /// `(1/|G|) sum_g χ(g) tr(g)`.
    pub trace_dim: Rational,
    /// Rank of `sum_g χ(g) g`.
    pub projector_rank: usize,
}

/// Adds `w * col` for each column of `cols` into `acc`.
fn accumulate(acc: &mut [HashMap<usize, i64>], cols: &IntColumns, w: i64) {
    for (a, col) in acc.iter_mut().zip(cols) {
        for &(r, v) in col {
            *a.entry(r).or_insert(0) += w * v;
        }
    }
}

fn diagonal_sum(cols: &IntColumns) -> i64 {
    cols.iter().enumerate().map(|(j, col)| col.iter().filter(|(r, _)| *r == j).map(|(_, v)| v).sum::<i64>()).sum()
}

/// Dimension of the invariants (or sign-twisted invariants) in one degree,
/// computed by the trace formula and by the rank of the group sum. An error
/// is returned if the two disagree.
pub fn invariant_dim(c: &ChainComplexQ, degree: i32, spec: GroupSpec) -> Result<InvariantReport, ComplexError> {
    let dim = c.dim(degree);
    c.slot(degree)?;
    let with_sk = matches!(spec.kind, GroupKind::Sk | GroupKind::SkTimesS2);
    let with_tau = matches!(spec.kind, GroupKind::S2 | GroupKind::SkTimesS2);
    if with_sk && c.k > MAX_GROUP_K {
        return Err(ComplexError::Range { k: c.k, ell: c.ell, max: MAX_GROUP_K });
    }
    // Sum over S_k (or the trivial group), then multiply by (1 + τ).
    let mut sum: Vec<HashMap<usize, i64>> = vec![HashMap::new(); dim];
    let mut trace_sum: i64 = 0;
    let tau = c.tau_columns(degree, spec.tau)?;
    let mut order = 0usize;
    let elements = if with_sk { Permutation::all(c.k) } else { vec![Permutation::identity(c.k)] };
    for sigma in &elements {
        let w = if spec.sign_twist { sigma.sign() as i64 } else { 1 };
        let cols = c.sk_columns(sigma, degree)?;
        accumulate(&mut sum, &cols, w);
        trace_sum += w * diagonal_sum(&cols);
        order += 1;
        if with_tau {
            // tr(σ τ): τ sends e_j to s_j e_{π(j)}, so (στ)_{jj} = s_j σ_{j, π(j)}
            for (j, tcol) in tau.iter().enumerate() {
                let (pj, sj) = tcol[0];
                trace_sum += w * sj * cols[pj].iter().filter(|(r, _)| *r == j).map(|(_, v)| v).sum::<i64>();
            }
            order += 1;
        }
    }
    let sum_cols: IntColumns = sum.into_iter().map(|m| m.into_iter().filter(|(_, v)| *v != 0).collect()).collect();
    let mut projector = to_qmatrix(dim, sum_cols);
    if with_tau {
        let t = to_qmatrix(dim, tau);
        projector = projector.add(&projector.mul(&t)?)?;
    }
    let trace_dim = Rational::new(BigInt::from(trace_sum), BigInt::from(order));
    let projector_rank = projector.rank();
    if trace_dim != int(projector_rank as i64) {
        return Err(ComplexError::InvariantMismatch { degree, trace: trace_dim, rank: projector_rank });
    }
    Ok(InvariantReport { degree, group_order: order, trace_dim, projector_rank })
}

/// `sum_{i>=0} (-1)^i dim (R^i)^G`.
pub fn invariant_euler_char(c: &ChainComplexQ, spec: GroupSpec) -> Result<i64, ComplexError> {
    let mut total = 0i64;
    for d in 0..=c.max_degree() {
        total += sign(d as usize) * invariant_dim(c, d, spec)?.projector_rank as i64;
    }
    Ok(total)
}

/// The three computations of `N(k, ℓ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NklReport {
    pub k: usize,
    pub ell: usize,
    /// `dim (ker d^0)^{S_2}` for the hat action.
    pub kernel_route: usize,
    /// `sum_{i>=0} (-1)^i dim (R̂^i)^{S_2}`.
    pub euler_route: i64,
    pub closed_form: BigInt,
}

impl NklReport {
    pub fn agrees(&self) -> bool {
        BigInt::from(self.kernel_route) == self.closed_form && BigInt::from(self.euler_route) == self.closed_form
    }
}

/// Brute-force `N(k, ℓ)`. The invariants of `ker d^0` are the kernel of
/// `d^0` stacked with `τ - 1`.
pub fn nkl_brute(k: usize, ell: usize) -> Result<NklReport, ComplexError> {
    check_range(k, ell, MAX_GROUP_K)?;
    let c = build_r_complex(k, ell)?;
    let d0 = c.differential(0)?;
    let tau0 = c.tau_matrix(0, TauConvention::Hat)?;
    let fixed = tau0.sub(&QMatrix::identity(c.dim(0)))?;
    let kernel_route = QMatrix::vstack(&[d0, &fixed])?.nullity();
    let euler_route = invariant_euler_char(&c, GroupSpec::s2(TauConvention::Hat))?;
    Ok(NklReport { k, ell, kernel_route, euler_route, closed_form: n_closed_form(k, ell) })
}

type MultiplicityKey = (usize, usize, bool);

fn multiplicity_cache() -> &'static Mutex<HashMap<MultiplicityKey, i64>> {
    static CACHE: OnceLock<Mutex<HashMap<MultiplicityKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiplicity `m_ℓ` of the diagonal term in the `S_k × S_2`-invariants of
/// `k`-fold tensor powers of a line bundle: `dim (R̂_ℓ^0)^{S_k × S_2}`. The
/// `S_k`-invariants of `R_ℓ^i` vanish for `i > 0`, so this is also the
/// invariant part of `ker d^0`.
pub fn sym_power_multiplicity(k: usize, ell: usize) -> Result<usize, ComplexError> {
    check_range(k, ell, MAX_GROUP_K)?;
    let key = (k, ell, false);
    if let Some(&m) = multiplicity_cache().lock().expect("cache lock").get(&key) {
        return Ok(m as usize);
    }
    let c = build_r_complex(k, ell)?;
    let m = invariant_dim(&c, 0, GroupSpec::sk_times_s2(TauConvention::Hat))?.projector_rank;
    multiplicity_cache().lock().expect("cache lock").insert(key, m as i64);
    Ok(m)
}

/// The alternating analogue of [`sym_power_multiplicity`]: the Euler
/// characteristic of the sign-twisted `S_k × S_2`-invariants of `R̂_ℓ^{>=0}`.
pub fn ext_power_multiplicity(k: usize, ell: usize) -> Result<i64, ComplexError> {
    check_range(k, ell, MAX_GROUP_K)?;
    let key = (k, ell, true);
    if let Some(&m) = multiplicity_cache().lock().expect("cache lock").get(&key) {
        return Ok(m);
    }
    let c = build_r_complex(k, ell)?;
    let m = invariant_euler_char(&c, GroupSpec::sk_times_s2(TauConvention::Hat).twisted())?;
    multiplicity_cache().lock().expect("cache lock").insert(key, m);
    Ok(m)
}

/// `|S_k|` as a machine integer.
pub fn sk_order(k: usize) -> usize {
    factorial(k as u64).to_usize().unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_expansion_signs() {
        // (ζ0 + ζ1) ∧ ζ0 = ζ1 ∧ ζ0 = -ζ0 ∧ ζ1
        let t = wedge_expand(&[vec![(0, 1), (1, 1)], vec![(0, 1)]]);
        assert_eq!(t, vec![(IndexSet(0b11), -1)]);
        assert_eq!(wedge_expand(&[]), vec![(IndexSet::EMPTY, 1)]);
        assert!(wedge_expand(&[vec![(2, 1)], vec![(2, 3)]]).is_empty());
    }

    #[test]
    fn zeta_differences() {
        assert_eq!(zeta_difference(0, 2), vec![(0, 1), (1, 1)]);
        assert_eq!(zeta_difference(3, 1), vec![(1, -1), (2, -1)]);
    }

    #[test]
    fn small_dimensions() {
        let c = build_r_complex(2, 1).unwrap();
        assert_eq!(c.degrees().map(|d| c.dim(d)).collect::<Vec<_>>(), vec![4, 4, 1]);
        let c = build_r_complex(3, 2).unwrap();
        assert_eq!(c.degrees().map(|d| c.dim(d)).collect::<Vec<_>>(), vec![8, 6, 2]);
        assert!(build_r_complex(3, 0).is_err());
        assert!(build_r_complex(3, 4).is_err());
    }

    #[test]
    fn phi_for_k_equal_ell() {
        for k in 1..=4 {
            let c = build_r_complex(k, k).unwrap();
            let phi = c.differential(-1).unwrap();
            let full = c.index_of(-1, &BasisLabel::Map(IndexSet::full(k))).unwrap();
            let expect = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(phi.get(0, full), expect);
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(n_closed_form(2, 1), BigInt::from(1));
        assert_eq!(n_closed_form(3, 1), BigInt::from(3));
        assert_eq!(n_closed_form(3, 2), BigInt::from(1));
        for k in 1..=8 {
            assert_eq!(n_closed_form(k, k), BigInt::zero());
        }
        assert_eq!(dim_formula(3, 2, 1), BigInt::from(2));
        assert_eq!(dim_formula(3, 2, 2), BigInt::zero());
    }

    #[test]
    fn tau_conventions() {
        let c = build_r_complex(3, 1).unwrap();
        assert!(attach_s2_tilde(&c).is_ok());
        assert!(attach_s2_hat(&c).is_ok());
        let c = build_r_complex(3, 2).unwrap();
        // the hat twist in degree -1 is what keeps τ a chain map for even ℓ
        let plain = c.tau_matrix(-1, TauConvention::Tilde).unwrap();
        let mut mats = tau_generator(&c, TauConvention::Hat).unwrap();
        mats[0] = plain;
        assert!(check_chain_map(&c, "tau", &mats).is_err());
    }

    #[test]
    fn multiplicities_for_k_one_and_two() {
        assert_eq!(sym_power_multiplicity(1, 1).unwrap(), 0);
        assert_eq!(sym_power_multiplicity(2, 1).unwrap(), 1);
        assert_eq!(sym_power_multiplicity(2, 2).unwrap(), 0);
        assert_eq!(ext_power_multiplicity(2, 1).unwrap(), 0);
        assert_eq!(ext_power_multiplicity(2, 2).unwrap(), 0);
    }
}
