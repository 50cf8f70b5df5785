//! Brauer–Weyl generator matrices of `C_{2m}`.

use crate::error::{Error, Result};
use crate::exactnum::{mat_compare, ExactMatrix, GaussianRational, MatrixRelation, DEFAULT_DIM_CAP};

/// Default ceiling on `m`.
pub const DEFAULT_MAX_M: usize = 8;

/// Which 2×2 matrix plays `σ3`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PauliConvention {
    /// `σ3 = diag(i, -i)`, which squares to `-1`.
    #[default]
    BrauerWeyl,
    /// Hermitian `σ3 = diag(1, -1)`.
    Standard,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PauliSet {
    pub sigma1: ExactMatrix,
    pub sigma2: ExactMatrix,
    pub sigma3: ExactMatrix,
    pub unit2: ExactMatrix,
}

fn m2(e: [(i64, i64); 4]) -> ExactMatrix {
    let g = |(re, im): (i64, i64)| GaussianRational::from_ints(re, im);
    ExactMatrix::from_rows(vec![vec![g(e[0]), g(e[1])], vec![g(e[2]), g(e[3])]]).expect("2x2")
}

impl PauliSet {
    pub fn new(convention: PauliConvention) -> Self {
        let sigma3 = match convention {
            PauliConvention::BrauerWeyl => m2([(0, 1), (0, 0), (0, 0), (0, -1)]),
            PauliConvention::Standard => m2([(1, 0), (0, 0), (0, 0), (-1, 0)]),
        };
        PauliSet {
            sigma1: m2([(0, 0), (1, 0), (1, 0), (0, 0)]),
            sigma2: m2([(0, 0), (0, -1), (0, 1), (0, 0)]),
            sigma3,
            unit2: ExactMatrix::identity(2),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub convention: PauliConvention,
    pub max_m: usize,
    pub dim_cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            convention: PauliConvention::BrauerWeyl,
            max_m: DEFAULT_MAX_M,
            dim_cap: DEFAULT_DIM_CAP,
        }
    }
}

/// `ℰ_1 .. ℰ_{2m}` (stored 0-based) acting on dimension `2^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub m: usize,
    pub gens: Vec<ExactMatrix>,
    /// `ℰ_j² = squares[j-1]·I`; 0 where the square is not `±I`.
    pub squares: Vec<i8>,
}

impl GeneratorSet {
    /// Wraps arbitrary matrices without validating them.
    pub fn from_matrices(gens: Vec<ExactMatrix>) -> Result<Self> {
        let dim = gens.first().map(|g| g.dim()).unwrap_or(1);
        if let Some(bad) = gens.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.dim(),
            });
        }
        let squares = gens
            .iter()
            .map(|g| g.mul(g).map(|s| s.identity_sign().unwrap_or(0)))
            .collect::<Result<_>>()?;
        Ok(GeneratorSet {
            m: gens.len() / 2,
            gens,
            squares,
        })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map(|g| g.dim()).unwrap_or(1 << self.m)
    }

    /// `ℰ_j`, 1-based.
    pub fn gen(&self, j: usize) -> &ExactMatrix {
        &self.gens[j - 1]
    }

    /// Ascending product of the generators selected by `mask` (bit `j-1` for `ℰ_j`).
    pub fn product(&self, mask: u32) -> Result<ExactMatrix> {
        let mut out = ExactMatrix::identity(self.dim());
        for (j, g) in self.gens.iter().enumerate() {
            if mask >> j & 1 == 1 {
                out = out.mul(g)?;
            }
        }
        Ok(out)
    }
}

pub fn build_brauer_weyl(m: usize) -> Result<GeneratorSet> {
    build_brauer_weyl_with(m, BuildOptions::default())
}

/// `ℰ_k = σ3^{⊗(k-1)} ⊗ σ1 ⊗ 1^{⊗(m-k)}`, `ℰ_{m+k}` likewise with `σ2`.
pub fn build_brauer_weyl_with(m: usize, opts: BuildOptions) -> Result<GeneratorSet> {
    if m == 0 || m > opts.max_m {
        return Err(Error::GeneratorRange { m, cap: opts.max_m });
    }
    if m >= usize::BITS as usize - 1 || (1usize << m) > opts.dim_cap {
        return Err(Error::DimensionCap {
            requested: 1usize.checked_shl(m as u32).unwrap_or(usize::MAX),
            cap: opts.dim_cap,
        });
    }
    let pauli = PauliSet::new(opts.convention);
    let chain = |k: usize, mid: &ExactMatrix| {
        let mut out = ExactMatrix::identity(1);
        for _ in 1..k {
            out = out.kron(&pauli.sigma3);
        }
        out = out.kron(mid);
        for _ in k..m {
            out = out.kron(&pauli.unit2);
        }
        out
    };
    let mut gens: Vec<ExactMatrix> = (1..=m).map(|k| chain(k, &pauli.sigma1)).collect();
    gens.extend((1..=m).map(|k| chain(k, &pauli.sigma2)));
    let mut set = GeneratorSet {
        m,
        gens,
        squares: Vec::new(),
    };
    set.squares = verify_generators(&set)?.squares;
    Ok(set)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub anticommute: bool,
    pub squares: Vec<i8>,
}

/// Checks pairwise anticommutation and `ℰ_j² = ±I`. Pairs in errors are 1-based.
pub fn verify_generators(g: &GeneratorSet) -> Result<GeneratorReport> {
    let n = g.gens.len();
    for i in 0..n {
        for j in i + 1..n {
            if !g.gens[i].anticommutator(&g.gens[j])?.is_zero() {
                return Err(Error::Anticommutation(i + 1, j + 1));
            }
        }
    }
    let squares = g
        .gens
        .iter()
        .enumerate()
        .map(|(j, e)| e.mul(e)?.identity_sign().ok_or(Error::BadSquare(j + 1)))
        .collect::<Result<Vec<i8>>>()?;
    Ok(GeneratorReport {
        anticommute: true,
        squares,
    })
}

fn sign_against(a: &ExactMatrix, b: &ExactMatrix) -> Result<Option<i8>> {
    Ok(match mat_compare(a, b)? {
        MatrixRelation::Equal => Some(1),
        MatrixRelation::Negatives => Some(-1),
        _ => None,
    })
}

/// `ε_j` with `ℰ_jᵀ = ε_j ℰ_j`.
pub fn symmetry_signature(g: &GeneratorSet) -> Result<Vec<i8>> {
    g.gens
        .iter()
        .enumerate()
        .map(|(j, e)| sign_against(&e.transpose(), e)?.ok_or(Error::NotSymmetric(j + 1)))
        .collect()
}

/// `η_j` with `ℰ_j* = η_j ℰ_j` (entrywise conjugate).
pub fn reality_signature(g: &GeneratorSet) -> Result<Vec<i8>> {
    g.gens
        .iter()
        .enumerate()
        .map(|(j, e)| sign_against(&e.conj(), e)?.ok_or(Error::MixedReality(j + 1)))
        .collect()
}
