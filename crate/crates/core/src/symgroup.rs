//! Symmetric group combinatorics: permutations, the sign conventions used by
//! the complexes, and orbit representatives of multi-index sets.
//!
//! Everything is 0-based internally: `[k]` is `{0, .., k-1}` and a multi-index
//! `a: [k] -> [n]` takes values in `{0, .., n-1}`. Signs only depend on the
//! order of elements, so they agree with the 1-based conventions.
//! Displayed sets and values are shifted back to 1-based.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::rational::factorial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymGroupError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("element {elem} is not in the set {set}")]
    NotInSet { elem: usize, set: IndexSet },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("the action does not preserve the given set")]
    ActionLeavesSet,
    #[error("orbit of size {orbit} does not divide the group order {group}")]
    OrbitStabilizer { orbit: usize, group: BigUint },
}

/// Finite subset of `{0, .., 63}` stored as a bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IndexSet(pub u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    /// `{0, .., k-1}`.
    pub fn full(k: usize) -> Self {
        if k >= 64 {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << k) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        IndexSet(1u64 << i)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        IndexSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        IndexSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (!self.is_empty()).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `i` among the elements, counted from zero.
    pub fn rank_of(self, i: usize) -> Option<usize> {
        self.contains(i).then(|| (self.0 & ((1u64 << i) - 1)).count_ones() as usize)
    }

    /// All subsets of `{0, .., k-1}` with `size` elements, in increasing
    /// numeric order of their masks.
    pub fn subsets_of_size(k: usize, size: usize) -> Vec<IndexSet> {
        Self::subsets_within(Self::full(k), size)
    }

    /// All subsets of `self` with `size` elements.
    pub fn subsets_within(self, size: usize) -> Vec<IndexSet> {
        let elems = self.to_vec();
        let mut out = Vec::new();
        if size > elems.len() {
            return out;
        }
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            out.push(pick.iter().fold(IndexSet::EMPTY, |acc, &p| acc.with(elems[p])));
            let mut pos = size;
            loop {
                if pos == 0 {
                    out.sort();
                    return out;
                }
                pos -= 1;
                if pick[pos] < elems.len() - size + pos {
                    break;
                }
            }
            pick[pos] += 1;
            for q in pos + 1..size {
                pick[q] = pick[q - 1] + 1;
            }
        }
    }

    /// Every subset of `self` (the power set), including empty and full.
    pub fn all_subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut sub: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let cur = sub?;
            // standard next-submask enumeration in increasing order
            sub = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(IndexSet(cur))
        })
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(IndexSet::EMPTY, |s, i| s.with(i))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// The total order on subsets used to pick orbit representatives: non-empty
/// sets by minimum, then lexicographically on sorted elements; the empty set
/// is the maximum.
pub fn subset_order(a: IndexSet, b: IndexSet) -> Ordering {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => a.iter().cmp(b.iter()),
    }
}

/// Bijection of `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, SymGroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(SymGroupError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `0 -> 1 -> .. -> n-1 -> 0`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i32 {
        eps_sigma(self, IndexSet::full(self.len()))
    }

    pub fn image_set(&self, set: IndexSet) -> IndexSet {
        set.iter().map(|i| self.images[i]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All `n!` permutations in lexicographic order of their image vectors.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", items.join(" "))
    }
}

/// Generators `(1 2)` and `(1 2 .. n)` of the symmetric group on `n` letters.
pub fn sn_generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![Permutation::transposition(2, 0, 1)],
        _ => vec![Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)],
    }
}

/// `eps_{sigma,M} = (-1)^{#{(i,j) in M x M : i < j, sigma(i) > sigma(j)}}`.
pub fn eps_sigma(sigma: &Permutation, set: IndexSet) -> i32 {
    let elems = set.to_vec();
    let mut inversions = 0usize;
    for (p, &i) in elems.iter().enumerate() {
        for &j in &elems[p + 1..] {
            if sigma.apply(i) > sigma.apply(j) {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `eps_{m,M} = (-1)^{#{j in M : j < m}}`.
pub fn eps_elem(m: usize, set: IndexSet) -> Result<i32, SymGroupError> {
    let rank = set.rank_of(m).ok_or(SymGroupError::NotInSet { elem: m, set })?;
    Ok(if rank % 2 == 0 { 1 } else { -1 })
}

/// `eps_b = (-1)^{#b^{-1}(larger)}` for a map `b` into a two-element set
/// whose larger element is `larger`.
pub fn eps_b<I: IntoIterator<Item = usize>>(images: I, larger: usize) -> i32 {
    let count = images.into_iter().filter(|&v| v == larger).count();
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Multi-index `a: [k] -> [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    n: usize,
    values: Vec<usize>,
}

impl MultiIndex {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self, SymGroupError> {
        if let Some(&v) = values.iter().find(|&&v| v >= n) {
            return Err(SymGroupError::OutOfRange(format!("value {} exceeds n = {n}", v + 1)));
        }
        Ok(MultiIndex { n, values })
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn fiber(&self, v: usize) -> IndexSet {
        self.values.iter().enumerate().filter(|(_, &x)| x == v).map(|(t, _)| t).collect()
    }

    /// Largest value used, counted 1-based (`max a` in the usual notation).
    pub fn max_value(&self) -> usize {
        self.values.iter().map(|v| v + 1).max().unwrap_or(0)
    }

    /// Left action of `S_n`: `sigma . a = sigma ∘ a`.
    pub fn act_sn(&self, sigma: &Permutation) -> MultiIndex {
        MultiIndex { n: self.n, values: self.values.iter().map(|&v| sigma.apply(v)).collect() }
    }

    /// Left action of `S_k`: `mu . a = a ∘ mu^{-1}`.
    pub fn act_sk(&self, mu: &Permutation) -> MultiIndex {
        let inv = mu.inverse();
        MultiIndex { n: self.n, values: (0..self.k()).map(|t| self.values[inv.apply(t)]).collect() }
    }

    /// The representative of the `S_n`-orbit with fibers ordered by
    /// [`subset_order`]: values are renumbered by first occurrence.
    pub fn canonical(&self) -> MultiIndex {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let values = self
            .values
            .iter()
            .map(|&v| {
                let next = relabel.len();
                *relabel.entry(v).or_insert(next)
            })
            .collect();
        MultiIndex { n: self.n, values }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.values.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Representative of an `S_n`-orbit of `Map([k], [n])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct J0Rep {
    pub index: MultiIndex,
    pub max_value: usize,
    /// Order of the isotropy group `S_{[max a + 1, n]}`, i.e. `(n - max a)!`.
    pub stabilizer_order: BigUint,
}

/// Restricted growth strings of length `len` with at most `max_blocks`
/// blocks. Each string labels the blocks of a set partition by the order of
/// their minima.
fn restricted_growth_strings(len: usize, max_blocks: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, max_blocks: usize, cur: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let limit = (used + 1).min(max_blocks);
        for b in 0..limit {
            cur.push(b);
            go(len, max_blocks, cur, used.max(b + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
        return out;
    }
    if max_blocks == 0 {
        return out;
    }
    go(len, max_blocks, &mut Vec::with_capacity(len), 0, &mut out);
    out
}

/// One representative per `S_n`-orbit of `Map([k], [n])`: set partitions of
/// `[k]` into at most `n` blocks, blocks sorted by [`subset_order`] and block
/// `r` sent to value `r`.
pub fn enumerate_j0(k: usize, n: usize) -> Vec<J0Rep> {
    restricted_growth_strings(k, n)
        .into_iter()
        .map(|values| {
            let index = MultiIndex { n, values };
            let max_value = index.max_value();
            J0Rep { stabilizer_order: factorial((n - max_value) as u64), max_value, index }
        })
        .collect()
}

/// A tuple `(M; i, j; a)` with `M ⊂ [k]`, `i < j` in `[n]` and
/// `a: [k] \ M -> [n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleMIA {
    k: usize,
    n: usize,
    m: IndexSet,
    i: usize,
    j: usize,
    /// `a[t]` is `None` exactly for `t` in `M`.
    a: Vec<Option<usize>>,
}

impl TupleMIA {
    pub fn new(k: usize, n: usize, m: IndexSet, i: usize, j: usize, a: Vec<Option<usize>>) -> Result<Self, SymGroupError> {
        if i >= j || j >= n {
            return Err(SymGroupError::OutOfRange(format!("need 1 <= i < j <= n, got i={}, j={}", i + 1, j + 1)));
        }
        if a.len() != k || !m.is_subset(IndexSet::full(k)) {
            return Err(SymGroupError::OutOfRange("multi-index length differs from k".into()));
        }
        for (t, v) in a.iter().enumerate() {
            match v {
                None if !m.contains(t) => return Err(SymGroupError::OutOfRange(format!("a undefined at {}", t + 1))),
                Some(_) if m.contains(t) => return Err(SymGroupError::OutOfRange(format!("a defined on M at {}", t + 1))),
                Some(x) if *x >= n => return Err(SymGroupError::OutOfRange(format!("value {} exceeds n", x + 1))),
                _ => {}
            }
        }
        Ok(TupleMIA { k, n, m, i, j, a })
    }

    pub fn m(&self) -> IndexSet {
        self.m
    }

    pub fn pair(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn a(&self) -> &[Option<usize>] {
        &self.a
    }

    pub fn ell(&self) -> usize {
        self.m.len()
    }

    fn fiber(&self, v: usize) -> IndexSet {
        self.a.iter().enumerate().filter(|(_, x)| **x == Some(v)).map(|(t, _)| t).collect()
    }

    /// `M̂ = M ∪ a^{-1}({i, j})`.
    pub fn m_hat(&self) -> IndexSet {
        self.m.union(self.fiber(self.i)).union(self.fiber(self.j))
    }

    /// Membership in `Î_ℓ`: `a^{-1}({i, j})` is non-empty.
    pub fn is_hat(&self) -> bool {
        self.m_hat() != self.m
    }

    /// `max(a, 2)` in the 1-based sense for representatives with
    /// `{i, j} = {1, 2}`: the largest element of `{i, j} ∪ im(a)`.
    pub fn max_with_pair(&self) -> usize {
        self.a.iter().flatten().map(|v| v + 1).chain([self.j + 1]).max().unwrap_or(0)
    }

    /// `sigma . (M; {i,j}; a) = (M; sigma({i,j}); sigma ∘ a)`.
    pub fn act_sn(&self, sigma: &Permutation) -> TupleMIA {
        let (x, y) = (sigma.apply(self.i), sigma.apply(self.j));
        TupleMIA {
            k: self.k,
            n: self.n,
            m: self.m,
            i: x.min(y),
            j: x.max(y),
            a: self.a.iter().map(|v| v.map(|v| sigma.apply(v))).collect(),
        }
    }

    /// Orbit representative with `{i, j} = {1, 2}`, `a^{-1}(1) ⪯ a^{-1}(2)`
    /// and the remaining fibers sorted by [`subset_order`].
    pub fn canonical(&self) -> TupleMIA {
        let f_i = self.fiber(self.i);
        let f_j = self.fiber(self.j);
        let (first, second) = if subset_order(f_i, f_j) == Ordering::Greater { (self.j, self.i) } else { (self.i, self.j) };
        let mut relabel: HashMap<usize, usize> = HashMap::from([(first, 0), (second, 1)]);
        let a = self
            .a
            .iter()
            .map(|v| {
                v.map(|v| {
                    let next = relabel.len();
                    *relabel.entry(v).or_insert(next)
                })
            })
            .collect();
        TupleMIA { k: self.k, n: self.n, m: self.m, i: 0, j: 1, a }
    }
}

impl fmt::Display for TupleMIA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self
            .a
            .iter()
            .enumerate()
            .filter_map(|(t, v)| v.map(|v| format!("{}->{}", t + 1, v + 1)))
            .collect();
        write!(f, "({}; {},{}; [{}])", self.m, self.i + 1, self.j + 1, a.join(" "))
    }
}

/// Representative `(M; 1, 2; a)` of an `S_n`-orbit of `I_ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JEllRep {
    pub tuple: TupleMIA,
    /// `(n - max(a,2))!` on `Î_ℓ`, twice that off it (the pair can be swapped).
    pub stabilizer_order: BigUint,
}

/// Representatives of the `S_n`-orbits of `I_ℓ`; with `hat_only` just those
/// of `Î_ℓ`, i.e. with `a^{-1}({1,2})` non-empty.
pub fn enumerate_j_ell(k: usize, n: usize, ell: usize, hat_only: bool) -> Result<Vec<JEllRep>, SymGroupError> {
    if ell == 0 || ell > k || n < 2 || k > 63 {
        return Err(SymGroupError::OutOfRange(format!("need 1 <= ell <= k and n >= 2, got k={k}, n={n}, ell={ell}")));
    }
    let mut out = Vec::new();
    for m in IndexSet::subsets_of_size(k, ell) {
        let complement = IndexSet::full(k).difference(m);
        for first in complement.all_subsets() {
            for second in complement.difference(first).all_subsets() {
                if subset_order(first, second) == Ordering::Greater {
                    continue;
                }
                if first.is_empty() && !second.is_empty() {
                    continue;
                }
                let paired = first.union(second);
                if hat_only && paired.is_empty() {
                    continue;
                }
                let rest: Vec<usize> = complement.difference(paired).to_vec();
                for rgs in restricted_growth_strings(rest.len(), n - 2) {
                    let mut a = vec![None; k];
                    for t in first.iter() {
                        a[t] = Some(0);
                    }
                    for t in second.iter() {
                        a[t] = Some(1);
                    }
                    for (&t, &b) in rest.iter().zip(&rgs) {
                        a[t] = Some(b + 2);
                    }
                    let tuple = TupleMIA { k, n, m, i: 0, j: 1, a };
                    let free = factorial((n - tuple.max_with_pair()) as u64);
                    let stabilizer_order = if tuple.is_hat() { free } else { free * 2u32 };
                    out.push(JEllRep { tuple, stabilizer_order });
                }
            }
        }
    }
    Ok(out)
}

/// Representatives of `Ĵ_ℓ`.
pub fn enumerate_j_hat_ell(k: usize, n: usize, ell: usize) -> Result<Vec<JEllRep>, SymGroupError> {
    enumerate_j_ell(k, n, ell, true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<T> {
    pub representative: T,
    pub orbit_size: usize,
    pub stabilizer_order: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition<T> {
    pub group_order: BigUint,
    pub orbits: Vec<Orbit<T>>,
}

impl<T> OrbitDecomposition<T> {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn total_size(&self) -> usize {
        self.orbits.iter().map(|o| o.orbit_size).sum()
    }
}

/// Orbits of a finite group acting on `set`, found by breadth-first closure
/// under `generators`. The first element met in `set` order represents its
/// orbit; stabilizer orders come from orbit-stabilizer.
pub fn orbit_decompose<T, G, F>(
    group_order: BigUint,
    generators: &[G],
    act: F,
    set: &[T],
) -> Result<OrbitDecomposition<T>, SymGroupError>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &G) -> T,
{
    let position: HashMap<&T, usize> = set.iter().enumerate().map(|(p, x)| (x, p)).collect();
    let mut seen = vec![false; set.len()];
    let mut orbits = Vec::new();
    for start in 0..set.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut size = 0usize;
        while let Some(p) = queue.pop_front() {
            size += 1;
            for g in generators {
                let image = act(&set[p], g);
                let &q = position.get(&image).ok_or(SymGroupError::ActionLeavesSet)?;
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        let size_big = BigUint::from(size);
        if &group_order % &size_big != BigUint::from(0u32) {
            return Err(SymGroupError::OrbitStabilizer { orbit: size, group: group_order });
        }
        orbits.push(Orbit { representative: set[start].clone(), orbit_size: size, stabilizer_order: &group_order / size_big });
    }
    Ok(OrbitDecomposition { group_order, orbits })
}

/// `|S_n|` as a machine integer when it fits.
pub fn group_order_usize(n: usize) -> Option<usize> {
    factorial(n as u64).to_usize()
}

/// Stirling numbers of the second kind `S(k, m)` for `m = 0..=k`.
pub fn stirling2_row(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for i in 1..=k {
        let mut next = vec![BigUint::from(0u32); i + 1];
        for m in 1..=i {
            let stay = if m < row.len() { &row[m] * BigUint::from(m) } else { BigUint::from(0u32) };
            next[m] = stay + &row[m - 1];
        }
        row = next;
    }
    row
}
