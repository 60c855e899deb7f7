//! Sparse exact rational matrices and fraction-free rank computation.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
}

/// Sparse matrix over the rationals, stored by columns. Each column lists
/// `(row, value)` pairs sorted by row with no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

fn collect_column(acc: BTreeMap<usize, Rational>) -> Vec<(usize, Rational)> {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, Rational::one())]).collect() }
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions add up.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(LinalgError::OutOfBounds { row: r, col: c, rows, cols });
            }
            *acc[c].entry(r).or_insert_with(Rational::zero) += v;
        }
        Ok(QMatrix { rows, cols, columns: acc.into_iter().map(collect_column).collect() })
    }

    /// Builds a matrix column by column; entries within a column may repeat.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Rational)>>) -> Result<Self, LinalgError> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for (c, col) in columns.into_iter().enumerate() {
            let mut acc = BTreeMap::new();
            for (r, v) in col {
                if r >= rows {
                    return Err(LinalgError::OutOfBounds { row: r, col: c, rows, cols });
                }
                *acc.entry(r).or_insert_with(Rational::zero) += v;
            }
            out.push(collect_column(acc));
        }
        Ok(QMatrix { rows, cols, columns: out })
    }

    /// Dense constructor, mostly for tests.
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let triplets = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        Self::from_triplets(rows.len(), cols, triplets).expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.columns[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(p) => self.columns[c][p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// `self * other`.
    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape { op: "mul", left: self.shape(), right: other.shape() });
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, v) in col {
                    for (r, w) in &self.columns[*k] {
                        *acc.entry(*r).or_insert_with(Rational::zero) += v * w;
                    }
                }
                collect_column(acc)
            })
            .collect();
        Ok(QMatrix { rows: self.rows, cols: other.cols, columns })
    }

    fn combine(&self, other: &QMatrix, sign: i64, op: &'static str) -> Result<QMatrix, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::Shape { op, left: self.shape(), right: other.shape() });
        }
        let s = Rational::from_integer(BigInt::from(sign));
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut acc: BTreeMap<usize, Rational> = a.iter().cloned().collect();
                for (r, v) in b {
                    *acc.entry(*r).or_insert_with(Rational::zero) += &s * v;
                }
                collect_column(acc)
            })
            .collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, columns })
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix, LinalgError> {
        self.combine(other, 1, "add")
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix, LinalgError> {
        self.combine(other, -1, "sub")
    }

    pub fn scale(&self, s: &Rational) -> QMatrix {
        if s.is_zero() {
            return QMatrix::zeros(self.rows, self.cols);
        }
        let columns = self.columns.iter().map(|col| col.iter().map(|(r, v)| (*r, v * s)).collect()).collect();
        QMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn transpose(&self) -> QMatrix {
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[*r].push((c, v.clone()));
            }
        }
        QMatrix { rows: self.cols, cols: self.rows, columns }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&QMatrix]) -> Result<QMatrix, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut rows = 0;
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::Shape { op: "vstack", left: (rows, cols), right: b.shape() });
            }
            for (c, col) in b.columns.iter().enumerate() {
                columns[c].extend(col.iter().map(|(r, v)| (r + rows, v.clone())));
            }
            rows += b.rows;
        }
        Ok(QMatrix { rows, cols, columns })
    }

    /// The submatrix formed by the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> QMatrix {
        QMatrix { rows: self.rows, cols: cols.len(), columns: cols.iter().map(|&c| self.columns[c].clone()).collect() }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape { op: "apply", left: self.shape(), right: (v.len(), 1) });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (r, w) in col {
                out[*r] += w * x;
            }
        }
        Ok(out)
    }

    /// True when every column has exactly one entry, equal to `±1`, and no
    /// two columns share a row.
    pub fn is_signed_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut seen = vec![false; self.rows];
        for col in &self.columns {
            let [(r, v)] = col.as_slice() else { return false };
            if seen[*r] || !(v.is_one() || (-v).is_one()) {
                return false;
            }
            seen[*r] = true;
        }
        true
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        // Eliminate along the shorter dimension.
        let vectors: Vec<Vec<(usize, BigInt)>> = if self.cols <= self.rows {
            self.columns.iter().map(|c| integral_vector(c)).collect()
        } else {
            self.transpose().columns.iter().map(|c| integral_vector(c)).collect()
        };
        rank_of_vectors(vectors)
    }

    /// Dimension of the kernel, `cols - rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Clears denominators of a sparse rational vector.
fn integral_vector(v: &[(usize, Rational)]) -> Vec<(usize, BigInt)> {
    let lcm = v.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    v.iter().map(|(i, x)| (*i, x.numer() * (&lcm / x.denom()))).collect()
}

/// Exact rank of a family of sparse integer vectors.
///
/// Tries machine integers first and falls back to big integers when an
/// intermediate value would overflow.
pub fn rank_of_vectors(vectors: Vec<Vec<(usize, BigInt)>>) -> usize {
    let small: Option<Vec<Vec<(usize, i64)>>> =
        vectors.iter().map(|v| v.iter().map(|(i, x)| x.to_i64().map(|x| (*i, x))).collect()).collect();
    if let Some(small) = small {
        if let Some(r) = eliminate(small) {
            return r;
        }
    }
    eliminate(vectors).expect("big integer elimination cannot overflow")
}

trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn neg(&self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn mul(a: &Self, x: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        *self == 1
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        *self / *other
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn mul(a: &Self, x: &Self) -> Option<Self> {
        a.checked_mul(*x)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        One::is_one(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn mul(a: &Self, x: &Self) -> Option<Self> {
        Some(a * x)
    }
}

/// Divides by the content, signed so that the leading entry is positive.
fn normalize<T: Entry>(v: &mut [(usize, T)]) {
    let Some(first) = v.first() else { return };
    let mut g = first.1.clone();
    for (_, x) in v.iter().skip(1) {
        g = g.gcd(x);
    }
    if v[0].1.is_negative() {
        g = g.neg();
    }
    if !g.is_unit() {
        for (_, x) in v.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

/// `a*v - b*p` for sparse sorted vectors.
fn reduce<T: Entry>(v: &[(usize, T)], p: &[(usize, T)], a: &T, b: &T) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let vi = v.get(i).map(|e| e.0);
        let pj = p.get(j).map(|e| e.0);
        match (vi, pj) {
            (Some(x), Some(y)) if x == y => {
                let z = T::mul_sub(a, &v[i].1, b, &p[j].1)?;
                if !z.is_zero() {
                    out.push((x, z));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, T::mul(a, &v[i].1)?));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, T::mul(a, &v[i].1)?));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, T::mul(b, &p[j].1)?.neg()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Some(out)
}

/// Fraction-free incremental echelon form; returns `None` on overflow.
fn eliminate<T: Entry>(mut vectors: Vec<Vec<(usize, T)>>) -> Option<usize> {
    // Short vectors first keeps the pivot rows sparse.
    vectors.sort_by_key(Vec::len);
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut v in vectors {
        v.sort_by_key(|e| e.0);
        v.retain(|e| !e.1.is_zero());
        normalize(&mut v);
        while let Some(&(lead, ref x)) = v.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    let y = &p[0].1;
                    let g = x.gcd(y);
                    let (a, b) = (y.div_exact(&g), x.div_exact(&g));
                    v = reduce(&v, p, &a, &b)?;
                    normalize(&mut v);
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn products_and_sums() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.add(&b).unwrap(), m(&[&[1, 3], &[4, 4]]));
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.trace(), int(5));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.apply(&[int(1), int(-1)]).unwrap(), vec![int(-1), int(-1)]);
        assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
        assert!(b.is_signed_permutation());
        assert!(!a.is_signed_permutation());
        let s = QMatrix::vstack(&[&a, &b]).unwrap();
        assert_eq!(s.shape(), (4, 2));
        assert_eq!(s.get(2, 1), int(1));
    }

    #[test]
    fn ranks() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).rank(), 2);
        assert_eq!(QMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(QMatrix::identity(7).rank(), 7);
        let q = QMatrix::from_rows(&[vec![frac(1, 2), frac(1, 3)], vec![frac(3, 2), int(1)]]);
        assert_eq!(q.rank(), 1);
        assert_eq!(m(&[&[0, 0, 1], &[0, 1, 0]]).nullity(), 1);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let a = m(&[&[big, big - 1, 1], &[big - 5, big, 2], &[1, 7, big]]);
        let b = m(&[&[big, 1], &[big, 1]]);
        assert_eq!(a.rank(), 3);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn rank_matches_gaussian_elimination_on_random_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let dense: Vec<Vec<Rational>> =
                (0..rows).map(|_| (0..cols).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
            let expect = dense_rank(dense.clone());
            assert_eq!(QMatrix::from_rows(&dense).rank(), expect);
        }
    }

    /// Textbook elimination over the rationals, used as an oracle.
    fn dense_rank(mut a: Vec<Vec<Rational>>) -> usize {
        let rows = a.len();
        let cols = a[0].len();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
            a.swap(rank, p);
            for r in 0..rows {
                if r != rank && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[rank][c];
                    let pivot_row = a[rank].clone();
                    for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}
