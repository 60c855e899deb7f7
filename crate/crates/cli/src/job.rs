//! JSON job files.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};
use tautchi::rational::{parse_exact, to_exact_string};
use tautchi::Rational;

use crate::CliError;

/// Exact rational written as `"p/q"`, `"p"` or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&to_exact_string(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExactVisitor;

        impl Visitor<'_> for ExactVisitor {
            type Value = Exact;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string \"p/q\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Exact, E> {
                Ok(Exact(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Exact, E> {
                Ok(Exact(Rational::from_integer(v.into())))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Exact, E> {
                parse_exact(v).map(Exact).ok_or_else(|| E::custom(format!("invalid rational {v:?}")))
            }
        }

        deserializer.deserialize_any(ExactVisitor)
    }
}

impl From<i64> for Exact {
    fn from(v: i64) -> Self {
        Exact(Rational::from_integer(v.into()))
    }
}

/// Either a preset (`P2`, `quadric`, `K3`) or explicit intersection data;
/// the plane when empty.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SurfaceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    /// Degree `H^2` of the polarization for the K3 preset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gram: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<i64>,
}

/// A named bundle with rank and Chern classes; `c1` is in the Picard basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleEntry {
    pub name: String,
    pub rank: i64,
    #[serde(default)]
    pub c1: Vec<Exact>,
    #[serde(default = "zero")]
    pub c2: Exact,
}

fn zero() -> Exact {
    Exact::from(0)
}

/// Inclusive range of `n` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub from: usize,
    pub to: usize,
}

impl Sweep {
    pub fn values(&self) -> std::ops::RangeInclusive<usize> {
        self.from..=self.to
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JobKind {
    Scala {
        bundle: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    EulerTwo {
        bundles: Vec<String>,
    },
    EulerBicharTwo {
        e: Vec<String>,
        f: Vec<String>,
    },
    EulerThree {
        bundles: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    SymPowerTwo {
        bundle: String,
        k: usize,
    },
    /// `h2` maps fibers such as `"1,3"` (1-based bundle indices) to `h^2`.
    HTop {
        k: usize,
        h2: BTreeMap<String, u64>,
        q: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    H0 {
        h0: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    K0Invariants {
        bundles: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    VerifyComplexes {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k_max: Option<usize>,
    },
}

impl JobKind {
    pub fn name(&self) -> &'static str {
        match self {
            JobKind::Scala { .. } => "scala",
            JobKind::EulerTwo { .. } => "euler_two",
            JobKind::EulerBicharTwo { .. } => "euler_bichar_two",
            JobKind::EulerThree { .. } => "euler_three",
            JobKind::SymPowerTwo { .. } => "sym_power_two",
            JobKind::HTop { .. } => "h_top",
            JobKind::H0 { .. } => "h0",
            JobKind::K0Invariants { .. } => "k0_invariants",
            JobKind::VerifyComplexes { .. } => "verify_complexes",
        }
    }

    /// The fixed `n` of kinds that depend on it, `None` for the others.
    pub fn n(&self) -> Option<Option<usize>> {
        match self {
            JobKind::Scala { n, .. }
            | JobKind::EulerThree { n, .. }
            | JobKind::HTop { n, .. }
            | JobKind::H0 { n, .. }
            | JobKind::K0Invariants { n, .. } => Some(*n),
            _ => None,
        }
    }

    /// Bundle names the job refers to.
    pub fn bundle_names(&self) -> Vec<&str> {
        match self {
            JobKind::Scala { bundle, .. } | JobKind::SymPowerTwo { bundle, .. } => vec![bundle.as_str()],
            JobKind::EulerTwo { bundles } | JobKind::EulerThree { bundles, .. } | JobKind::K0Invariants { bundles, .. } => {
                bundles.iter().map(String::as_str).collect()
            }
            JobKind::EulerBicharTwo { e, f } => e.iter().chain(f).map(String::as_str).collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Job {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub kind: JobKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Sweep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobFile {
    #[serde(default)]
    pub surface: SurfaceSpec,
    #[serde(default)]
    pub bundles: Vec<BundleEntry>,
    /// `c1` of the line bundle `L`; the trivial bundle when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_bundle: Option<Vec<Exact>>,
    pub jobs: Vec<Job>,
}

impl JobFile {
    pub fn parse(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Self::parse(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("job files serialize")
    }
}

/// Parses a fiber key such as `"1,3"`, `"{1,3}"` or `"13"` into 0-based indices.
pub fn parse_fiber(key: &str) -> Option<Vec<usize>> {
    let inner = key.trim().trim_start_matches('{').trim_end_matches('}');
    let values: Vec<usize> = if inner.contains(',') {
        inner.split(',').map(|p| p.trim().parse().ok()).collect::<Option<_>>()?
    } else {
        inner.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?
    };
    if values.is_empty() || values.contains(&0) {
        return None;
    }
    Some(values.into_iter().map(|v| v - 1).collect())
}
