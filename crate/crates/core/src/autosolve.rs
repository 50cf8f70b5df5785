//! Spinor representatives of the seven nontrivial automorphisms, found as signed
//! monomials in the generators and verified by matrix arithmetic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{mat_compare, ExactMatrix, MatrixRelation};
use crate::spinbasis::{reality_signature, symmetry_signature, verify_generators, GeneratorSet};

/// `sign · ℰ_{i1} ℰ_{i2} ..` with indices ascending; bit `j-1` of `mask` selects `ℰ_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub sign: i8,
    pub mask: u32,
}

impl std::ops::Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial {
            sign: -self.sign,
            mask: self.mask,
        }
    }
}

impl Monomial {
    pub const IDENTITY: Monomial = Monomial { sign: 1, mask: 0 };

    pub fn new(sign: i8, indices: &[usize]) -> Self {
        Monomial {
            sign,
            mask: indices.iter().fold(0, |m, i| m | 1 << (i - 1)),
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|j| self.mask >> j & 1 == 1).map(|j| j + 1).collect()
    }

    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Product under `ℰ_j² = squares[j-1]` and pairwise anticommutation.
    pub fn mul(self, other: Monomial, squares: &[i8]) -> Monomial {
        let mut swaps = 0u32;
        let mut bits = other.mask;
        while bits != 0 {
            let j = bits.trailing_zeros();
            swaps += (self.mask >> (j + 1)).count_ones();
            bits &= bits - 1;
        }
        let mut sign = self.sign * other.sign * if swaps.is_multiple_of(2) { 1 } else { -1 };
        let mut common = self.mask & other.mask;
        while common != 0 {
            let j = common.trailing_zeros() as usize;
            sign *= squares[j];
            common &= common - 1;
        }
        Monomial {
            sign,
            mask: self.mask ^ other.mask,
        }
    }

    /// `s` with `M² = s`.
    pub fn square_sign(self, squares: &[i8]) -> i8 {
        self.mul(self, squares).sign
    }

    /// `M⁻¹ = s·M` where `M² = s`.
    pub fn inverse(self, squares: &[i8]) -> Monomial {
        Monomial {
            sign: self.sign * self.square_sign(squares),
            mask: self.mask,
        }
    }

    /// Sign `s` with `M ℰ_j = s ℰ_j M`: `(-1)^{|S| - [j∈S]}`.
    pub fn conjugation_sign(self, j: usize) -> i8 {
        let inside = self.mask >> (j - 1) & 1;
        if (self.degree() - inside).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn matrix(&self, g: &GeneratorSet) -> Result<ExactMatrix> {
        let p = g.product(self.mask)?;
        Ok(if self.sign < 0 { p.neg() } else { p })
    }

    /// `E_1234`, `-E_13`, `1`; indices comma-separated once any exceeds 9.
    pub fn label(&self, unicode: bool) -> String {
        let body = monomial_name(self.mask, unicode);
        if self.sign < 0 {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// Unsigned name of a generator product.
pub fn monomial_name(mask: u32, unicode: bool) -> String {
    if mask == 0 {
        return "1".to_string();
    }
    let idx: Vec<usize> = (0..32).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect();
    let wide = idx.iter().any(|&i| i > 9);
    let digits: Vec<String> = idx
        .iter()
        .map(|i| {
            if unicode {
                i.to_string()
                    .chars()
                    .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap())
                    .collect()
            } else {
                i.to_string()
            }
        })
        .collect();
    let sep = if wide { "," } else { "" };
    if unicode {
        format!("ℰ{}", digits.join(sep))
    } else if wide {
        format!("E_{{{}}}", digits.join(sep))
    } else {
        format!("E_{}", digits.join(sep))
    }
}

/// A monomial together with its matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedMonomial {
    pub mono: Monomial,
    pub matrix: ExactMatrix,
}

impl SignedMonomial {
    pub fn new(mono: Monomial, g: &GeneratorSet) -> Result<Self> {
        Ok(SignedMonomial {
            mono,
            matrix: mono.matrix(g)?,
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.mono.indices()
    }

    pub fn sign(&self) -> i8 {
        self.mono.sign
    }

    /// `M⁻¹ = ±M` from the square sign.
    pub fn inverse(&self, g: &GeneratorSet) -> Self {
        let mono = self.mono.inverse(&g.squares);
        let matrix = if mono.sign == self.mono.sign {
            self.matrix.clone()
        } else {
            self.matrix.neg()
        };
        SignedMonomial { mono, matrix }
    }

    /// `M X M⁻¹`.
    pub fn conjugate(&self, x: &ExactMatrix, g: &GeneratorSet) -> Result<ExactMatrix> {
        self.matrix.mul(x)?.mul(&self.inverse(g).matrix)
    }
}

/// Full product `ℰ_1 ℰ_2 .. ℰ_{2m}`.
pub fn compute_w(g: &GeneratorSet) -> Result<SignedMonomial> {
    let mask = if g.len() >= 32 { u32::MAX } else { (1u32 << g.len()) - 1 };
    SignedMonomial::new(Monomial { sign: 1, mask }, g)
}

fn sign_pattern(signs: &[i8]) -> String {
    signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect()
}

/// Monomial `M` (sign +1) with `M ℰ_j M⁻¹ = s_j ℰ_j` for every `j`.
///
/// Searches all `2^{2m}` index subsets, keeps the lexicographically smallest index
/// list among solutions, then checks the result by explicit conjugation.
pub fn solve_monomial(g: &GeneratorSet, target_signs: &[i8]) -> Result<SignedMonomial> {
    let n = g.len();
    if target_signs.len() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: target_signs.len(),
        });
    }
    // For a subset S the pattern is fixed by |S| parity: s_j = (-1)^{|S|} · (-1)^{[j∈S]}.
    // Candidates of the wrong parity fail on their first generator, so the scan is cheap.
    let mut best: Option<Monomial> = None;
    for mask in 0..(1u64 << n) {
        let mono = Monomial {
            sign: 1,
            mask: mask as u32,
        };
        let parity_ok = (1..=n).all(|j| mono.conjugation_sign(j) == target_signs[j - 1]);
        if !parity_ok {
            continue;
        }
        best = match best {
            Some(b) if b.indices() <= mono.indices() => Some(b),
            _ => Some(mono),
        };
    }
    let mono = best.ok_or_else(|| Error::UnsolvableSignature(sign_pattern(target_signs)))?;
    let sm = SignedMonomial::new(mono, g)?;
    for (j, e) in g.gens.iter().enumerate() {
        let lhs = sm.conjugate(e, g)?;
        let want = if target_signs[j] > 0 {
            MatrixRelation::Equal
        } else {
            MatrixRelation::Negatives
        };
        if mat_compare(&lhs, e)? != want {
            return Err(Error::Consistency(format!(
                "conjugation by {} on E_{} disagrees with parity rule",
                mono.label(false),
                j + 1
            )));
        }
    }
    Ok(sm)
}

/// Names of the septet members in storage order.
pub const SEPTET_NAMES: [&str; 7] = ["W", "E", "C", "Pi", "K", "S", "F"];
/// Discrete symmetries realized by the septet, same order.
pub const CPT_NAMES: [&str; 7] = ["P", "T", "PT", "C", "CP", "CT", "CPT"];

/// `{W, E, C, Π, K, S, F}` over a generator set.
#[derive(Clone, Debug, PartialEq)]
pub struct AutomorphismSeptet {
    pub w: SignedMonomial,
    pub e: SignedMonomial,
    pub c: SignedMonomial,
    pub pi: SignedMonomial,
    pub k: SignedMonomial,
    pub s: SignedMonomial,
    pub f: SignedMonomial,
    pub squares: Vec<i8>,
    pub dim: usize,
}

impl AutomorphismSeptet {
    /// `[W, E, C, Π, K, S, F]`.
    pub fn members(&self) -> [&SignedMonomial; 7] {
        [&self.w, &self.e, &self.c, &self.pi, &self.k, &self.s, &self.f]
    }

    pub fn monomials(&self) -> [Monomial; 7] {
        self.members().map(|m| m.mono)
    }
}

/// Entrywise-action applied to `ℰ_j` before conjugation, per member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Twist {
    None,
    Transpose,
    Conj,
    ConjTranspose,
}

/// `(twist, sign)` such that `M · twist(ℰ_j) · M⁻¹ = sign · ℰ_j` for W, E, C, Π, K, S, F.
const LAWS: [(Twist, i8); 7] = [
    (Twist::None, -1),
    (Twist::Transpose, 1),
    (Twist::Transpose, -1),
    (Twist::Conj, 1),
    (Twist::Conj, -1),
    (Twist::ConjTranspose, 1),
    (Twist::ConjTranspose, -1),
];

/// Whether `m` obeys the conjugation law of septet member `law` (0 = W .. 6 = F) on every generator.
pub fn law_holds(law: usize, m: &SignedMonomial, g: &GeneratorSet) -> Result<bool> {
    Ok(first_law_failure(law, m, g)?.is_none())
}

fn first_law_failure(law: usize, m: &SignedMonomial, g: &GeneratorSet) -> Result<Option<usize>> {
    let (twist, sign) = LAWS[law];
    let want = if sign > 0 {
        MatrixRelation::Equal
    } else {
        MatrixRelation::Negatives
    };
    for (j, e) in g.gens.iter().enumerate() {
        let t = match twist {
            Twist::None => e.clone(),
            Twist::Transpose => e.transpose(),
            Twist::Conj => e.conj(),
            Twist::ConjTranspose => e.adjoint(),
        };
        if mat_compare(&m.conjugate(&t, g)?, e)? != want {
            return Ok(Some(j + 1));
        }
    }
    Ok(None)
}

/// Checks every conjugation law on every generator; the offending member is named on failure.
pub fn verify_septet(s: &AutomorphismSeptet, g: &GeneratorSet) -> Result<()> {
    for (idx, member) in s.members().iter().enumerate() {
        if let Some(j) = first_law_failure(idx, member, g)? {
            return Err(Error::Consistency(format!("{} law fails on E_{}", SEPTET_NAMES[idx], j)));
        }
    }
    Ok(())
}

fn product(a: &SignedMonomial, b: &SignedMonomial, g: &GeneratorSet) -> Result<SignedMonomial> {
    let mono = a.mono.mul(b.mono, &g.squares);
    let matrix = a.matrix.mul(&b.matrix)?;
    if matrix != mono.matrix(g)? {
        return Err(Error::Consistency(format!(
            "combinatorial product {} disagrees with matrices",
            mono.label(false)
        )));
    }
    Ok(SignedMonomial { mono, matrix })
}

/// E from the symmetry signature, Π from the reality signature, W the full product;
/// `C = EW`, `K = ΠW`, `S = ΠE`, `F = ΠC`.
pub fn compute_septet(g: &GeneratorSet) -> Result<AutomorphismSeptet> {
    verify_generators(g)?;
    let eps = symmetry_signature(g)?;
    let eta = reality_signature(g)?;
    let w = compute_w(g)?;
    let e = solve_monomial(g, &eps)?;
    let pi = solve_monomial(g, &eta)?;
    let c = product(&e, &w, g)?;
    let k = product(&pi, &w, g)?;
    let s = product(&pi, &e, g)?;
    let f = product(&pi, &c, g)?;
    let septet = AutomorphismSeptet {
        w,
        e,
        c,
        pi,
        k,
        s,
        f,
        squares: g.squares.clone(),
        dim: g.dim(),
    };
    verify_septet(&septet, g)?;
    Ok(septet)
}
