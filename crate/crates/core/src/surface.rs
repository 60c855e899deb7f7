//! Intersection theory on a smooth projective surface.
//!
//! A surface is recorded only through its Picard lattice (Gram matrix of a
//! chosen divisor basis), its canonical class and its topological Euler
//! number. Chern characters are truncated at degree two: `ch2` is the
//! integrated degree-four component. This is all Hirzebruch-Riemann-Roch
//! needs, and Euler characteristics factor through K-theory, so virtual
//! classes (negative rank, rational coefficients) are allowed everywhere.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{binomial, from_bigint, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("divisor class has length {found}, surface has Picard rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Gram matrix must be square and non-empty")]
    NotSquare,
    #[error("Gram matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("Noether's formula fails: K^2 + c2 = {value} is not divisible by 12")]
    Noether { value: i64 },
    #[error("expected a rank one class, got rank {0}")]
    NotLineBundle(Rational),
}

/// Smooth projective surface given by numerical data only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    name: String,
    gram: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    c2: i64,
}

impl SurfaceModel {
    pub fn new(
        name: impl Into<String>,
        gram: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        c2: i64,
    ) -> Result<Self, SurfaceError> {
        let p = gram.len();
        if p == 0 || gram.iter().any(|row| row.len() != p) {
            return Err(SurfaceError::NotSquare);
        }
        for row in 0..p {
            for col in row + 1..p {
                if gram[row][col] != gram[col][row] {
                    return Err(SurfaceError::NotSymmetric { row, col });
                }
            }
        }
        if canonical.len() != p {
            return Err(SurfaceError::DimensionMismatch { expected: p, found: canonical.len() });
        }
        let surface = SurfaceModel { name: name.into(), gram, canonical, c2 };
        let value = surface.k_squared() + c2;
        if value.rem_euclid(12) != 0 {
            return Err(SurfaceError::Noether { value });
        }
        Ok(surface)
    }

    /// The projective plane, basis `H` with `H^2 = 1`, `K = -3H`.
    pub fn projective_plane() -> Self {
        Self::new("P2", vec![vec![1]], vec![-3], 3).expect("valid preset")
    }

    /// `P^1 x P^1` with the two rulings as basis.
    pub fn quadric() -> Self {
        Self::new("P1xP1", vec![vec![0, 1], vec![1, 0]], vec![-2, -2], 4).expect("valid preset")
    }

    /// A K3 surface of Picard rank one generated by `H` with `H^2 = degree`.
    pub fn k3(degree: i64) -> Self {
        Self::new(format!("K3({degree})"), vec![vec![degree]], vec![0], 24).expect("valid preset")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn picard_rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn canonical(&self) -> &[i64] {
        &self.canonical
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    pub fn k_squared(&self) -> i64 {
        let p = self.gram.len();
        let mut acc = 0;
        for i in 0..p {
            for j in 0..p {
                acc += self.canonical[i] * self.gram[i][j] * self.canonical[j];
            }
        }
        acc
    }

    /// `chi(O_X) = (K^2 + c2) / 12`.
    pub fn chi_o(&self) -> i64 {
        (self.k_squared() + self.c2) / 12
    }

    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::from_ints(&self.canonical)
    }

    pub fn check(&self, d: &DivisorClass) -> Result<(), SurfaceError> {
        if d.len() != self.picard_rank() {
            return Err(SurfaceError::DimensionMismatch {
                expected: self.picard_rank(),
                found: d.len(),
            });
        }
        Ok(())
    }

    /// Intersection pairing `<a, b>`.
    pub fn pairing(&self, a: &DivisorClass, b: &DivisorClass) -> Result<Rational, SurfaceError> {
        self.check(a)?;
        self.check(b)?;
        let mut acc = Rational::zero();
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 {
                    acc += ai * bj * int(g);
                }
            }
        }
        Ok(acc)
    }

    pub fn unit(&self) -> ChernCharacter {
        ChernCharacter::unit(self.picard_rank())
    }

    /// `ch` of the line bundle with first Chern class `c1`.
    pub fn line_bundle(&self, c1: DivisorClass) -> Result<ChernCharacter, SurfaceError> {
        let ch2 = self.pairing(&c1, &c1)? / int(2);
        Ok(ChernCharacter { ch0: Rational::one(), ch1: c1, ch2 })
    }

    /// `ch(O(K))`, the canonical bundle.
    pub fn omega(&self) -> ChernCharacter {
        self.line_bundle(self.canonical_class()).expect("canonical class has the right length")
    }

    /// `ch(omega^dual) = (1, -K, K^2/2)`.
    pub fn omega_dual(&self) -> ChernCharacter {
        self.omega().dual()
    }

    /// `ch(Omega_X) = (2, K, (K^2 - 2 c2)/2)`.
    pub fn cotangent(&self) -> ChernCharacter {
        self.sym_cotangent(1)
    }

    /// `ch(T_X) = (2, -K, (K^2 - 2 c2)/2)`.
    pub fn tangent(&self) -> ChernCharacter {
        self.cotangent().dual()
    }

    /// `ch(S^m Omega_X)` from the Chern roots of the cotangent bundle.
    ///
    /// With roots `x, y` (`x + y = K`, `xy = c2`) the symmetric power has
    /// roots `i x + j y` for `i + j = m`, which gives
    /// `ch1 = m(m+1)/2 K` and
    /// `ch2 = 1/2 [ m(m+1)(2m+1)/6 (K^2 - 2 c2) + m(m+1)(m-1)/3 c2 ]`.
    pub fn sym_cotangent(&self, m: u64) -> ChernCharacter {
        let mm = BigInt::from(m);
        let rank = from_bigint(&mm + 1u32);
        let tri = from_bigint(&mm * (&mm + 1u32)) / int(2);
        let squares = from_bigint(&mm * (&mm + 1u32) * (2u32 * &mm + 1u32)) / int(6);
        let cross = if m == 0 {
            Rational::zero()
        } else {
            from_bigint(&mm * (&mm + 1u32) * (&mm - 1u32)) / int(3)
        };
        let k2 = int(self.k_squared());
        let c2 = int(self.c2);
        let ch2 = (squares * (k2 - int(2) * &c2) + cross * c2) / int(2);
        ChernCharacter { ch0: rank, ch1: self.canonical_class().scale(&tri), ch2 }
    }

    /// Hirzebruch-Riemann-Roch: `chi = ch2 - <ch1, K>/2 + ch0 chi(O_X)`.
    pub fn chi(&self, a: &ChernCharacter) -> Result<Rational, SurfaceError> {
        let k = self.canonical_class();
        Ok(&a.ch2 - self.pairing(&a.ch1, &k)? / int(2) + &a.ch0 * int(self.chi_o()))
    }

    pub fn tensor(&self, a: &ChernCharacter, b: &ChernCharacter) -> Result<ChernCharacter, SurfaceError> {
        a.tensor(b, self)
    }

    /// `ch(Hom(a, b)) = ch(a^dual) ch(b)`.
    pub fn hom(&self, a: &ChernCharacter, b: &ChernCharacter) -> Result<ChernCharacter, SurfaceError> {
        a.dual().tensor(b, self)
    }

    /// Tensor product of a list of classes; the empty product is `O_X`.
    pub fn tensor_all<'a, I>(&self, classes: I) -> Result<ChernCharacter, SurfaceError>
    where
        I: IntoIterator<Item = &'a ChernCharacter>,
    {
        let mut acc = self.unit();
        for c in classes {
            acc = acc.tensor(c, self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (p={}, K^2={}, c2={}, chi(O)={})", self.name, self.picard_rank(), self.k_squared(), self.c2, self.chi_o())
    }
}

/// Rational divisor class in the chosen Picard basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    coeffs: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn zero(p: usize) -> Self {
        DivisorClass { coeffs: vec![Rational::zero(); p] }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        DivisorClass { coeffs: v.iter().map(|&x| int(x)).collect() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        DivisorClass { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SurfaceError> {
        self.same_len(other)?;
        Ok(DivisorClass { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn neg(&self) -> Self {
        DivisorClass { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn same_len(&self, other: &Self) -> Result<(), SurfaceError> {
        if self.len() != other.len() {
            return Err(SurfaceError::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }
}

/// Truncated Chern character `(ch0, ch1, ch2)` of a possibly virtual sheaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    pub ch0: Rational,
    pub ch1: DivisorClass,
    pub ch2: Rational,
}

impl ChernCharacter {
    pub fn new(ch0: Rational, ch1: DivisorClass, ch2: Rational) -> Self {
        ChernCharacter { ch0, ch1, ch2 }
    }

    /// `ch(O_X) = (1, 0, 0)`.
    pub fn unit(p: usize) -> Self {
        ChernCharacter { ch0: Rational::one(), ch1: DivisorClass::zero(p), ch2: Rational::zero() }
    }

    pub fn zero(p: usize) -> Self {
        ChernCharacter { ch0: Rational::zero(), ch1: DivisorClass::zero(p), ch2: Rational::zero() }
    }

    pub fn picard_rank(&self) -> usize {
        self.ch1.len()
    }

    /// Direct sum.
    pub fn add(&self, other: &Self) -> Result<Self, SurfaceError> {
        Ok(ChernCharacter {
            ch0: &self.ch0 + &other.ch0,
            ch1: self.ch1.add(&other.ch1)?,
            ch2: &self.ch2 + &other.ch2,
        })
    }

    pub fn neg(&self) -> Self {
        ChernCharacter { ch0: -&self.ch0, ch1: self.ch1.neg(), ch2: -&self.ch2 }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SurfaceError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ChernCharacter { ch0: &self.ch0 * s, ch1: self.ch1.scale(s), ch2: &self.ch2 * s }
    }

    /// `ch(a (x) b) = (a0 b0, a0 b1 + b0 a1, a0 b2 + b0 a2 + <a1, b1>)`.
    pub fn tensor(&self, other: &Self, surface: &SurfaceModel) -> Result<Self, SurfaceError> {
        let cross = surface.pairing(&self.ch1, &other.ch1)?;
        Ok(ChernCharacter {
            ch0: &self.ch0 * &other.ch0,
            ch1: other.ch1.scale(&self.ch0).add(&self.ch1.scale(&other.ch0))?,
            ch2: &self.ch0 * &other.ch2 + &other.ch0 * &self.ch2 + cross,
        })
    }

    /// `ch(a^dual) = (a0, -a1, a2)`.
    pub fn dual(&self) -> Self {
        ChernCharacter { ch0: self.ch0.clone(), ch1: self.ch1.neg(), ch2: self.ch2.clone() }
    }

    pub fn is_rank_one(&self) -> bool {
        self.ch0.is_one()
    }

    /// True when every component is an integer. Note that `ch2` of an honest
    /// bundle is typically a half-integer, so this is not an integrality test
    /// for Chern classes.
    pub fn has_integral_components(&self) -> bool {
        self.ch0.is_integer() && self.ch2.is_integer() && self.ch1.coeffs.iter().all(|c| c.is_integer())
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c1: Vec<String> = self.ch1.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({}, [{}], {})", self.ch0, c1.join(", "), self.ch2)
    }
}

/// Input form of a vector bundle: rank and Chern classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleSpec {
    pub name: String,
    pub rank: i64,
    pub c1: DivisorClass,
    pub c2: Rational,
}

impl BundleSpec {
    /// `ch = (rank, c1, (c1^2 - 2 c2)/2)`.
    pub fn chern_character(&self, surface: &SurfaceModel) -> Result<ChernCharacter, SurfaceError> {
        let c1sq = surface.pairing(&self.c1, &self.c1)?;
        Ok(ChernCharacter {
            ch0: int(self.rank),
            ch1: self.c1.clone(),
            ch2: (c1sq - int(2) * &self.c2) / int(2),
        })
    }
}

/// `s^m chi = binom(chi + m - 1, m)`, the Euler characteristic of the
/// `m`-th graded symmetric power of a graded space with Euler characteristic
/// `chi`.
pub fn s_chi(m: u64, chi: &Rational) -> Rational {
    binomial(&(chi + int(m as i64) - int(1)), m)
}

pub fn s_chi_int(m: u64, chi: i64) -> BigInt {
    s_chi(m, &int(chi)).to_integer()
}

pub fn require_line_bundle(c: &ChernCharacter) -> Result<(), SurfaceError> {
    if c.is_rank_one() {
        Ok(())
    } else {
        Err(SurfaceError::NotLineBundle(c.ch0.clone()))
    }
}
